#include "bgamma/minor.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>

#include "bgamma/error.hpp"
#include "bgamma/lifts.hpp"
#include "text_util.hpp"

namespace bgamma {

std::string to_text(const MinorCertificate& c) {
  std::string out = "delete: " + join_labels(c.deleted) + "; contract: " + join_labels(c.contracted) + "; map: ";
  bool first = true;
  for (const auto& [p, h] : c.map) {
    if (!first) out.push_back(',');
    first = false;
    out += p + "->" + h;
  }
  return out;
}

MinorCertificate certificate_from_text(std::string_view text) {
  MinorCertificate c;
  auto parts = detail::split_on(detail::trim(text), ';');
  if (parts.size() != 3) throw ParseError("certificate must have delete, contract and map parts");
  auto field = [&](std::string_view part, std::string_view key) {
    part = detail::trim(part);
    const std::string prefix = std::string(key) + ":";
    if (part.substr(0, prefix.size()) != prefix) {
      throw ParseError("certificate part '" + std::string(part) + "' should start with '" + prefix + "'");
    }
    return detail::trim(part.substr(prefix.size()));
  };
  c.deleted = parse_label_set(field(parts[0], "delete"));
  c.contracted = parse_label_set(field(parts[1], "contract"));
  auto map = field(parts[2], "map");
  if (!map.empty()) {
    for (auto tok : detail::split_on(map, ',')) {
      tok = detail::trim(tok);
      auto arrow = tok.find("->");
      if (arrow == std::string_view::npos) throw ParseError("map entry '" + std::string(tok) + "' lacks '->'");
      Label from(detail::trim(tok.substr(0, arrow)));
      Label to(detail::trim(tok.substr(arrow + 2)));
      check_label(from);
      check_label(to);
      if (!c.map.emplace(from, to).second) throw ParseError("map entry for '" + from + "' repeated");
    }
  }
  return c;
}

RankOraclePattern uniform_pattern(std::size_t r, std::size_t n) {
  RankOraclePattern p;
  p.name = "U" + std::to_string(r) + std::to_string(n);
  for (std::size_t i = 1; i <= n; ++i) p.labels.push_back("u" + std::to_string(i));
  p.rank = r;
  p.rank_fn = [r](ElementMask s) { return std::min<std::size_t>(r, static_cast<std::size_t>(std::popcount(s))); };
  return p;
}

namespace {

// The minor named by a certificate, or nullopt when the sets are malformed.
std::optional<BinaryMatroid> apply_certificate(const BinaryMatroid& host, const MinorCertificate& c) {
  for (const auto& l : c.deleted) {
    if (!host.contains(l) || c.contracted.contains(l)) return std::nullopt;
  }
  for (const auto& l : c.contracted) {
    if (!host.contains(l)) return std::nullopt;
  }
  return minor_of(host, c.deleted, c.contracted);
}

bool rank_functions_agree(const BinaryMatroid& minor, const RankOraclePattern& pattern, const Bijection& map) {
  const std::size_t n = pattern.labels.size();
  if (minor.size() != n || map.size() != n) return false;
  // position i of the pattern -> column index in the minor
  std::vector<std::size_t> col(n);
  LabelSet images;
  for (std::size_t i = 0; i < n; ++i) {
    auto it = map.find(pattern.labels[i]);
    if (it == map.end() || !minor.contains(it->second)) return false;
    col[i] = minor.index_of(it->second);
    images.insert(it->second);
  }
  if (images.size() != n) return false;
  for (ElementMask s = 0; s < (ElementMask{1} << n); ++s) {
    ElementMask mapped = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if ((s >> i) & 1u) mapped |= ElementMask{1} << col[i];
    }
    if (minor.rank_of_mask(mapped) != pattern.rank_fn(s)) return false;
  }
  return true;
}

}  // namespace

bool verify_certificate(const BinaryMatroid& host, const BinaryMatroid& pattern, const MinorCertificate& c) {
  auto minor = apply_certificate(host, c);
  return minor && verify_isomorphism(pattern, *minor, c.map);
}

bool verify_certificate(const BinaryMatroid& host, const RankOraclePattern& pattern, const MinorCertificate& c) {
  auto minor = apply_certificate(host, c);
  return minor && rank_functions_agree(*minor, pattern, c.map);
}

std::vector<Label> sorted_labels(const BinaryMatroid& m) {
  auto out = m.labels();
  std::sort(out.begin(), out.end());
  return out;
}

bool for_each_k_subset(const std::vector<Label>& items, std::size_t k,
                       const std::function<bool(const LabelSet&)>& fn) {
  if (k > items.size()) return false;
  std::vector<std::size_t> pick(k);
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    LabelSet s;
    for (auto p : pick) s.insert(items[p]);
    if (fn(s)) return true;
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == items.size() - k + i - 1) --i;
    if (i == 0) return false;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

namespace {

using CircuitProfile = std::array<std::size_t, 5>;

CircuitProfile circuit_profile(const BinaryMatroid& m) {
  CircuitProfile p{};
  for (auto c : small_circuits(m, 4)) ++p[static_cast<std::size_t>(std::popcount(c))];
  return p;
}

// Enumerates candidate minors host \ X / Y with |Y| = r(host) - target_rank,
// Y independent, X keeping E - X spanning, and |E| - |X| - |Y| = target_size.
// `accept` returns the pattern->host map when the candidate matches.
template <class Accept>
std::optional<MinorCertificate> search_minors(const BinaryMatroid& host, std::size_t target_size,
                                              std::size_t target_rank, const MinorSearchOptions& opts,
                                              Accept&& accept) {
  if (host.size() > opts.max_elements) {
    throw BudgetError("minor search limited to " + std::to_string(opts.max_elements) + " host elements, got " +
                      std::to_string(host.size()));
  }
  const std::size_t n = host.size();
  const std::size_t r = host.rank();
  if (target_size > n || target_rank > r || n - r < target_size - std::min(target_size, target_rank) ||
      target_rank > target_size) {
    return std::nullopt;
  }
  const std::size_t ny = r - target_rank;
  const std::size_t nx = n - ny - target_size;
  const auto order = sorted_labels(host);

  std::optional<MinorCertificate> found;
  for_each_k_subset(order, ny, [&](const LabelSet& y) {
    const ElementMask ymask = host.mask_of(y);
    if (host.rank_of_mask(ymask) != ny) return false;
    std::vector<Label> rest;
    for (const auto& l : order) {
      if (!y.contains(l)) rest.push_back(l);
    }
    return for_each_k_subset(rest, nx, [&](const LabelSet& x) {
      if (host.rank_of_mask(host.full_mask() & ~host.mask_of(x)) != r) return false;
      auto candidate = minor_of(host, x, y);
      if (auto map = accept(candidate)) {
        found = MinorCertificate{x, y, std::move(*map)};
        return true;
      }
      return false;
    });
  });
  return found;
}

}  // namespace

std::optional<MinorCertificate> has_minor(const BinaryMatroid& host, const BinaryMatroid& pattern,
                                          const MinorSearchOptions& opts) {
  const auto profile = circuit_profile(pattern);
  return search_minors(host, pattern.size(), pattern.rank(), opts,
                       [&](const BinaryMatroid& candidate) -> std::optional<Bijection> {
                         if (circuit_profile(candidate) != profile) return std::nullopt;
                         return isomorphic(pattern, candidate);
                       });
}

std::optional<MinorCertificate> has_minor(const BinaryMatroid& host, const RankOraclePattern& pattern,
                                          const MinorSearchOptions& opts) {
  auto pattern_labels = pattern.labels;
  std::sort(pattern_labels.begin(), pattern_labels.end());
  return search_minors(host, pattern.labels.size(), pattern.rank, opts,
                       [&](const BinaryMatroid& candidate) -> std::optional<Bijection> {
                         auto targets = sorted_labels(candidate);
                         do {
                           Bijection map;
                           for (std::size_t i = 0; i < targets.size(); ++i) map[pattern_labels[i]] = targets[i];
                           if (rank_functions_agree(candidate, pattern, map)) return map;
                         } while (std::next_permutation(targets.begin(), targets.end()));
                         return std::nullopt;
                       });
}

const BinaryMatroid& k4_matroid() {
  static const BinaryMatroid k4(Gf2Matrix::from_rows({{1, 0, 0, 1, 1, 0}, {0, 1, 0, 1, 0, 1}, {0, 0, 1, 0, 1, 1}}),
                                {"k1", "k2", "k3", "k4", "k5", "k6"});
  return k4;
}

std::optional<MinorCertificate> k4_minor(const BinaryMatroid& m, const MinorSearchOptions& opts) {
  return has_minor(m, k4_matroid(), opts);
}

bool is_binary_gammoid(const BinaryMatroid& m, const MinorSearchOptions& opts) {
  return !k4_minor(m, opts).has_value();
}

std::optional<LabelSet> in_class_gk(const BinaryMatroid& m, std::size_t k, const MinorSearchOptions& opts) {
  if (!is_binary_gammoid(m, opts)) throw PreconditionError("in_class_gk: input is not a binary gammoid");
  std::optional<LabelSet> witness;
  for_each_k_subset(sorted_labels(m), k, [&](const LabelSet& h) {
    if (is_binary_gammoid(splitting(m, h), opts)) return false;
    witness = h;
    return true;
  });
  return witness;
}

MinimalWitness reduce_to_minimal_witness(const BinaryMatroid& m, const LabelSet& h, const MinorSearchOptions& opts) {
  auto cert = k4_minor(splitting(m, h), opts);
  if (!cert) throw PreconditionError("reduce_to_minimal_witness: splitting has no M(K4) minor");

  MinimalWitness w;
  w.k4_cert = *cert;
  for (const auto& l : cert->deleted) (h.contains(l) ? w.deleted_in_h : w.outside_deleted).insert(l);
  for (const auto& l : cert->contracted) (h.contains(l) ? w.contracted_in_h : w.outside_contracted).insert(l);
  w.minor = minor_of(m, w.outside_deleted, w.outside_contracted);

  const auto check = minor_of(splitting(w.minor, h), w.deleted_in_h, w.contracted_in_h);
  if (!isomorphic(k4_matroid(), check)) {
    throw Error("reduce_to_minimal_witness: reduced minor does not reproduce M(K4)");
  }
  return w;
}

bool is_minimal_in_class(const BinaryMatroid& m, const std::function<bool(const BinaryMatroid&)>& in_class) {
  if (!in_class(m)) return false;
  for (const auto& l : m.labels()) {
    if (in_class(deletion(m, {l})) || in_class(contraction(m, {l}))) return false;
  }
  return true;
}

}  // namespace bgamma
