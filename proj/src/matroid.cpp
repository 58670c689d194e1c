#include "bgamma/matroid.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "bgamma/error.hpp"
#include "text_util.hpp"

namespace bgamma {

void check_label(std::string_view label) {
  if (label.empty()) throw LabelError("empty label");
  for (char c : label) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == ',' || c == ';' || c == '>') {
      throw LabelError("label '" + std::string(label) + "' contains a reserved character");
    }
  }
}

BinaryMatroid::BinaryMatroid(const Gf2Matrix& rep, std::vector<Label> labels)
    : labels_(std::move(labels)) {
  if (labels_.size() != rep.cols()) {
    throw LabelError("matroid has " + std::to_string(rep.cols()) + " columns but " +
                     std::to_string(labels_.size()) + " labels");
  }
  if (labels_.size() > kMaxElements) {
    throw DimensionError("matroid ground set larger than " + std::to_string(kMaxElements));
  }
  for (const auto& l : labels_) check_label(l);
  std::vector<Label> sorted = labels_;
  std::sort(sorted.begin(), sorted.end());
  if (auto dup = std::adjacent_find(sorted.begin(), sorted.end()); dup != sorted.end()) {
    throw LabelError("duplicate label '" + *dup + "'");
  }
  mat_ = rref(rep).matrix;
  cols_.reserve(mat_.cols());
  for (std::size_t j = 0; j < mat_.cols(); ++j) cols_.push_back(mat_.column(j));
}

bool BinaryMatroid::contains(const Label& l) const {
  return std::find(labels_.begin(), labels_.end(), l) != labels_.end();
}

std::size_t BinaryMatroid::index_of(const Label& l) const {
  auto it = std::find(labels_.begin(), labels_.end(), l);
  if (it == labels_.end()) throw LabelError("unknown label '" + l + "'");
  return static_cast<std::size_t>(it - labels_.begin());
}

ElementMask BinaryMatroid::mask_of(const LabelSet& s) const {
  ElementMask mask = 0;
  for (const auto& l : s) mask |= ElementMask{1} << index_of(l);
  return mask;
}

LabelSet BinaryMatroid::labels_of(ElementMask mask) const {
  LabelSet out;
  for (std::size_t j = 0; j < labels_.size(); ++j) {
    if ((mask >> j) & 1u) out.insert(labels_[j]);
  }
  return out;
}

ElementMask BinaryMatroid::full_mask() const {
  return labels_.size() == 64 ? ~ElementMask{0} : (ElementMask{1} << labels_.size()) - 1;
}

std::size_t BinaryMatroid::rank_of_mask(ElementMask mask) const {
  XorBasis basis;
  while (mask != 0) {
    const auto j = static_cast<std::size_t>(std::countr_zero(mask));
    mask &= mask - 1;
    basis.insert(cols_[j]);
  }
  return basis.size();
}

bool BinaryMatroid::is_coloop(std::size_t j) const {
  return rank_of_mask(full_mask() & ~(ElementMask{1} << j)) < rank();
}

bool same_matroid(const BinaryMatroid& a, const BinaryMatroid& b) {
  if (a.size() != b.size() || a.rank() != b.rank()) return false;
  if (a.ground_set() != b.ground_set()) return false;
  return with_column_order(b, a.labels()).matrix() == a.matrix();
}

std::size_t rank_of(const BinaryMatroid& m, const LabelSet& s) { return m.rank_of_mask(m.mask_of(s)); }

BinaryMatroid deletion(const BinaryMatroid& m, const LabelSet& x) {
  if (x.empty()) return m;
  std::vector<std::size_t> drop;
  for (const auto& l : x) drop.push_back(m.index_of(l));
  std::vector<Label> labels;
  for (const auto& l : m.labels()) {
    if (!x.contains(l)) labels.push_back(l);
  }
  return BinaryMatroid(m.matrix().delete_columns(drop), std::move(labels));
}

BinaryMatroid contraction(const BinaryMatroid& m, const LabelSet& y) {
  if (y.empty()) return m;
  for (const auto& l : y) m.index_of(l);

  std::vector<BitVec> rows;
  for (std::size_t i = 0; i < m.rank(); ++i) rows.push_back(m.matrix().row(i));
  std::vector<bool> dead(rows.size(), false);
  for (const auto& l : y) {
    const auto j = m.index_of(l);
    std::size_t p = rows.size();
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (!dead[i] && rows[i].test(j)) {
        p = i;
        break;
      }
    }
    if (p == rows.size()) continue;  // loop in the current minor
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i != p && !dead[i] && rows[i].test(j)) rows[i] ^= rows[p];
    }
    dead[p] = true;
  }

  std::vector<std::size_t> keep_cols;
  std::vector<Label> labels;
  for (std::size_t j = 0; j < m.size(); ++j) {
    if (!y.contains(m.labels()[j])) {
      keep_cols.push_back(j);
      labels.push_back(m.labels()[j]);
    }
  }
  std::size_t live = 0;
  for (bool d : dead) live += d ? 0 : 1;
  Gf2Matrix rest(live, m.size());
  std::size_t r = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (dead[i]) continue;
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (rows[i].test(j)) rest.set(r, j, true);
    }
    ++r;
  }
  return BinaryMatroid(rest.select_columns(keep_cols), std::move(labels));
}

BinaryMatroid minor_of(const BinaryMatroid& m, const LabelSet& x, const LabelSet& y) {
  for (const auto& l : x) {
    if (y.contains(l)) throw PreconditionError("label '" + l + "' both deleted and contracted");
  }
  return contraction(deletion(m, x), y);
}

BinaryMatroid dual(const BinaryMatroid& m) {
  const auto& a = m.matrix();
  const std::size_t n = m.size();
  const std::size_t r = m.rank();
  // Stored form is RREF: row i has its pivot at pivots[i].
  std::vector<std::size_t> pivots(r);
  std::vector<bool> is_pivot(n, false);
  for (std::size_t i = 0; i < r; ++i) {
    pivots[i] = a.row(i).lowest();
    is_pivot[pivots[i]] = true;
  }
  Gf2Matrix d(n - r, n);
  std::size_t k = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (is_pivot[j]) continue;
    d.set(k, j, true);
    for (std::size_t i = 0; i < r; ++i) {
      if (a.get(i, j)) d.set(k, pivots[i], true);
    }
    ++k;
  }
  return BinaryMatroid(d, m.labels());
}

BinaryMatroid relabel(const BinaryMatroid& m, const Bijection& map) {
  std::vector<Label> labels;
  labels.reserve(m.size());
  for (const auto& l : m.labels()) {
    auto it = map.find(l);
    labels.push_back(it == map.end() ? l : it->second);
  }
  return BinaryMatroid(m.matrix(), std::move(labels));
}

BinaryMatroid with_column_order(const BinaryMatroid& m, const std::vector<Label>& order) {
  if (order.size() != m.size()) throw LabelError("column order is not a permutation of the labels");
  std::vector<std::size_t> idx;
  idx.reserve(order.size());
  for (const auto& l : order) idx.push_back(m.index_of(l));
  return BinaryMatroid(m.matrix().select_columns(idx), order);
}

namespace {

// Calls fn(mask) for every subset of `universe` of the given size, in
// increasing lexicographic order of the chosen positions.
template <class Fn>
void for_each_subset_of_size(const std::vector<std::size_t>& universe, std::size_t size, Fn&& fn) {
  if (size > universe.size()) return;
  std::vector<std::size_t> pick(size);
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    ElementMask mask = 0;
    for (auto p : pick) mask |= ElementMask{1} << universe[p];
    fn(mask);
    std::size_t i = size;
    while (i > 0 && pick[i - 1] == universe.size() - size + i - 1) --i;
    if (i == 0) return;
    ++pick[i - 1];
    for (std::size_t k = i; k < size; ++k) pick[k] = pick[k - 1] + 1;
  }
}

bool is_circuit(const BinaryMatroid& m, ElementMask s) {
  const auto k = static_cast<std::size_t>(std::popcount(s));
  if (m.rank_of_mask(s) != k - 1) return false;
  for (ElementMask rest = s; rest != 0; rest &= rest - 1) {
    const ElementMask bit = rest & (~rest + 1);
    if (m.rank_of_mask(s & ~bit) != k - 1) return false;
  }
  return true;
}

}  // namespace

std::vector<ElementMask> small_circuits(const BinaryMatroid& m, std::size_t max_size) {
  std::vector<std::size_t> all(m.size());
  std::iota(all.begin(), all.end(), 0);
  std::vector<ElementMask> out;
  for (std::size_t k = 1; k <= std::min(max_size, m.size()); ++k) {
    for_each_subset_of_size(all, k, [&](ElementMask s) {
      if (is_circuit(m, s)) out.push_back(s);
    });
  }
  return out;
}

std::vector<LabelSet> circuits(const BinaryMatroid& m, std::size_t max_elements) {
  if (m.size() > max_elements) {
    throw BudgetError("circuit enumeration limited to " + std::to_string(max_elements) + " elements, got " +
                      std::to_string(m.size()));
  }
  std::vector<LabelSet> out;
  for (auto s : small_circuits(m, m.size())) out.push_back(m.labels_of(s));
  return out;
}

std::vector<ElementFingerprint> element_fingerprints(const BinaryMatroid& m) {
  const std::size_t n = m.size();
  std::vector<ElementFingerprint> fp(n);
  std::size_t loops = 0;
  for (std::size_t j = 0; j < n; ++j) loops += m.is_loop(j) ? 1 : 0;
  for (std::size_t j = 0; j < n; ++j) {
    fp[j].loop = m.is_loop(j);
    fp[j].coloop = m.is_coloop(j);
    if (fp[j].loop) {
      fp[j].parallel_class = loops;
      continue;
    }
    for (std::size_t k = 0; k < n; ++k) {
      if (m.column_vector(k) == m.column_vector(j)) ++fp[j].parallel_class;
    }
  }
  for (auto c : small_circuits(m, 4)) {
    const int size = std::popcount(c);
    if (size < 3) continue;
    for (ElementMask rest = c; rest != 0; rest &= rest - 1) {
      const auto j = static_cast<std::size_t>(std::countr_zero(rest));
      (size == 3 ? fp[j].triangles : fp[j].quads)++;
    }
  }
  return fp;
}

namespace {

// Echelon basis that remembers, for each stored vector, which inserted
// elements (by insertion position) it is the sum of.
struct TrackedBasis {
  std::vector<BitVec> vecs;
  std::vector<std::size_t> pivots;
  std::vector<ElementMask> combos;

  // Returns (independent, combination over basis positions).
  std::pair<bool, ElementMask> reduce(BitVec v, BitVec* residual) const {
    ElementMask combo = 0;
    for (std::size_t k = 0; k < vecs.size(); ++k) {
      if (v.test(pivots[k])) {
        v ^= vecs[k];
        combo ^= combos[k];
      }
    }
    *residual = v;
    return {v.any(), combo};
  }
  void push(const BitVec& residual, ElementMask combo) {
    const ElementMask self = ElementMask{1} << vecs.size();
    vecs.push_back(residual);
    pivots.push_back(residual.lowest());
    combos.push_back(combo | self);
  }
  void pop() {
    vecs.pop_back();
    pivots.pop_back();
    combos.pop_back();
  }
};

class IsoSearch {
 public:
  IsoSearch(const BinaryMatroid& a, const BinaryMatroid& b) : a_(a), b_(b) {
    a_order_.resize(a.size());
    std::iota(a_order_.begin(), a_order_.end(), 0);
    std::sort(a_order_.begin(), a_order_.end(),
              [&](auto x, auto y) { return a.labels()[x] < a.labels()[y]; });
    b_order_.resize(b.size());
    std::iota(b_order_.begin(), b_order_.end(), 0);
    std::sort(b_order_.begin(), b_order_.end(),
              [&](auto x, auto y) { return b.labels()[x] < b.labels()[y]; });
    fa_ = element_fingerprints(a);
    fb_ = element_fingerprints(b);
    image_.assign(a.size(), 0);
    used_.assign(b.size(), false);
  }

  bool fingerprints_match() const {
    auto x = fa_;
    auto y = fb_;
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    return x == y;
  }

  bool run(std::size_t depth) {
    if (depth == a_order_.size()) return true;
    const auto ai = a_order_[depth];
    BitVec ra;
    const auto [a_indep, a_combo] = basis_a_.reduce(a_.column_vector(ai), &ra);
    for (auto bj : b_order_) {
      if (used_[bj] || fb_[bj] != fa_[ai]) continue;
      BitVec rb;
      const auto [b_indep, b_combo] = basis_b_.reduce(b_.column_vector(bj), &rb);
      if (a_indep != b_indep) continue;
      if (!a_indep && a_combo != b_combo) continue;
      if (a_indep) {
        basis_a_.push(ra, a_combo);
        basis_b_.push(rb, b_combo);
      }
      used_[bj] = true;
      image_[ai] = bj;
      if (run(depth + 1)) return true;
      used_[bj] = false;
      if (a_indep) {
        basis_a_.pop();
        basis_b_.pop();
      }
    }
    return false;
  }

  Bijection result() const {
    Bijection out;
    for (std::size_t i = 0; i < a_.size(); ++i) out[a_.labels()[i]] = b_.labels()[image_[i]];
    return out;
  }

 private:
  const BinaryMatroid& a_;
  const BinaryMatroid& b_;
  std::vector<std::size_t> a_order_, b_order_;
  std::vector<ElementFingerprint> fa_, fb_;
  std::vector<std::size_t> image_;
  std::vector<bool> used_;
  TrackedBasis basis_a_, basis_b_;
};

}  // namespace

std::optional<Bijection> isomorphic(const BinaryMatroid& a, const BinaryMatroid& b) {
  if (a.size() != b.size() || a.rank() != b.rank()) return std::nullopt;
  IsoSearch search(a, b);
  if (!search.fingerprints_match()) return std::nullopt;
  if (!search.run(0)) return std::nullopt;
  return search.result();
}

bool verify_isomorphism(const BinaryMatroid& a, const BinaryMatroid& b, const Bijection& map) {
  if (a.size() != b.size() || map.size() != a.size()) return false;
  Bijection inverse;
  for (const auto& [from, to] : map) {
    if (!a.contains(from) || !b.contains(to)) return false;
    if (!inverse.emplace(to, from).second) return false;
  }
  return same_matroid(a, relabel(b, inverse));
}

Label fresh_label(const BinaryMatroid& m, std::string_view prefix) {
  for (std::size_t i = 1;; ++i) {
    Label candidate = std::string(prefix) + std::to_string(i);
    if (!m.contains(candidate)) return candidate;
  }
}

std::string to_text(const BinaryMatroid& m) {
  std::string out = "matroid " + std::to_string(m.rank()) + " " + std::to_string(m.size()) + "\n";
  for (std::size_t j = 0; j < m.size(); ++j) {
    if (j > 0) out.push_back(' ');
    out += m.labels()[j];
  }
  out.push_back('\n');
  for (std::size_t i = 0; i < m.rank(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) out.push_back(m.matrix().row(i).test(j) ? '1' : '0');
    out.push_back('\n');
  }
  return out;
}

BinaryMatroid matroid_from_text(std::string_view text) {
  auto lines = detail::content_lines(text);
  if (lines.empty()) throw ParseError("empty matroid text");
  auto head = detail::split_ws(lines[0]);
  if (head.size() != 3 || head[0] != "matroid") throw ParseError("matroid header must be 'matroid <r> <n>'");
  const auto r = detail::parse_count(head[1], "r");
  const auto n = detail::parse_count(head[2], "n");
  if (n > kMaxElements) throw DimensionError("matroid ground set larger than " + std::to_string(kMaxElements));
  if (n == 0) {
    if (lines.size() != 1) throw ParseError("unexpected content after an empty matroid header");
    return BinaryMatroid(Gf2Matrix(0, 0), {});
  }
  if (lines.size() != r + 2) {
    throw ParseError("expected a label line and " + std::to_string(r) + " rows, found " +
                     std::to_string(lines.size() - 1) + " lines");
  }
  std::vector<Label> labels;
  for (auto tok : detail::split_ws(lines[1])) labels.emplace_back(tok);
  if (labels.size() != n) {
    throw ParseError("expected " + std::to_string(n) + " labels, found " + std::to_string(labels.size()));
  }
  Gf2Matrix rep(r, n);
  for (std::size_t i = 0; i < r; ++i) {
    auto row = lines[i + 2];
    if (row.size() != n) throw ParseError("matroid row " + std::to_string(i) + " has the wrong width");
    auto bits = bits_from_string(row);
    for (std::size_t j = 0; j < n; ++j) {
      if (bits.test(j)) rep.set(i, j, true);
    }
  }
  return BinaryMatroid(rep, std::move(labels));
}

std::string join_labels(const LabelSet& s, std::string_view sep) {
  std::string out;
  for (const auto& l : s) {
    if (!out.empty()) out += sep;
    out += l;
  }
  return out;
}

LabelSet parse_label_set(std::string_view text, std::size_t* duplicates) {
  LabelSet out;
  std::size_t dups = 0;
  if (!detail::trim(text).empty()) {
    for (auto tok : detail::split_on(text, ',')) {
      auto label = detail::trim(tok);
      check_label(label);
      if (!out.emplace(label).second) ++dups;
    }
  }
  if (duplicates != nullptr) *duplicates = dups;
  return out;
}

}  // namespace bgamma
