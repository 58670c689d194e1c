#include "bgamma/verifier.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>

#include "bgamma/catalog.hpp"
#include "bgamma/census.hpp"
#include "bgamma/error.hpp"
#include "bgamma/lifts.hpp"
#include "bgamma/minor.hpp"
#include "bgamma/parallel.hpp"
#include "text_util.hpp"

namespace bgamma {

namespace {

using Clock = std::chrono::steady_clock;

// Label sets in counterexample fields; "-" stands for the empty set.
std::string set_field(const LabelSet& s) { return s.empty() ? "-" : join_labels(s); }
LabelSet parse_set_field(std::string_view v) { return v == "-" ? LabelSet{} : parse_label_set(v); }

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string lift_name(LiftKind k) {
  switch (k) {
    case LiftKind::split: return "split";
    case LiftKind::element_split: return "esplit";
    case LiftKind::es_split: return "essplit";
  }
  return "split";
}

LiftKind parse_lift(std::string_view s) {
  if (s == "split") return LiftKind::split;
  if (s == "esplit") return LiftKind::element_split;
  if (s == "essplit") return LiftKind::es_split;
  throw ParseError("unknown lift '" + std::string(s) + "'");
}

BinaryMatroid apply_lift(LiftKind k, const BinaryMatroid& m, const LabelSet& h, const std::optional<Label>& e) {
  switch (k) {
    case LiftKind::split: return splitting(m, h);
    case LiftKind::element_split: return element_splitting(m, h);
    case LiftKind::es_split: return es_splitting(m, h, *e);
  }
  return splitting(m, h);
}

std::string join_names(const std::vector<std::string>& v) {
  std::string out;
  for (const auto& s : v) out += (out.empty() ? "" : ",") + s;
  return out;
}

struct Breaking {
  LabelSet h;
  std::optional<Label> pivot;
  MinorCertificate cert;
};

// First (H, e) in order of |H|, then lexicographic H, then e, whose lift
// has an M(K_4) minor.
std::optional<Breaking> first_breaking(const BinaryMatroid& m, LiftKind lift, std::size_t h_min, std::size_t h_max) {
  const auto labels = sorted_labels(m);
  std::optional<Breaking> found;
  for (std::size_t k = h_min; k <= std::min(h_max, m.size()) && !found; ++k) {
    for_each_k_subset(labels, k, [&](const LabelSet& h) {
      if (lift != LiftKind::es_split) {
        if (auto c = k4_minor(apply_lift(lift, m, h, std::nullopt))) found = Breaking{h, std::nullopt, *c};
        return found.has_value();
      }
      for (const auto& e : h) {
        if (auto c = k4_minor(es_splitting(m, h, e))) {
          found = Breaking{h, e, *c};
          return true;
        }
      }
      return false;
    });
  }
  return found;
}

struct PatternHit {
  std::string name;
  MinorCertificate cert;
};

std::optional<PatternHit> first_pattern(const BinaryMatroid& m, const std::vector<std::string>& patterns) {
  for (const auto& p : patterns) {
    if (auto c = has_minor(m, resolve_pattern(p))) return PatternHit{p, *c};
  }
  return std::nullopt;
}

std::vector<BinaryMatroid> census_universe(std::size_t max_edges, std::size_t jobs) {
  std::vector<BinaryMatroid> out;
  for (auto& g : enumerate_binary_gammoids(max_edges, jobs)) out.push_back(std::move(g.matroid));
  return out;
}

std::string census_params(const VerifyOptions& o, std::size_t h_min, std::size_t h_max) {
  return "max_edges=" + std::to_string(o.max_edges) + " h_min=" + std::to_string(h_min) +
         " h_max=" + std::to_string(h_max);
}

VerificationReport new_report(std::string id, std::string params) {
  VerificationReport r;
  r.theorem_id = std::move(id);
  r.params = std::move(params);
  return r;
}

void stamp(VerificationReport& r, Clock::time_point start) {
  r.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
}

// Per-instance outcome collected in parallel and merged in index order.
struct InstanceOutcome {
  bool lhs = false;
  bool rhs = false;
  std::size_t verified = 0;
  std::size_t failed = 0;
  std::vector<Counterexample> counterexamples;
  std::vector<std::string> notes;
};

void merge(VerificationReport& r, std::vector<InstanceOutcome>& outcomes) {
  for (auto& o : outcomes) {
    ++r.instances_checked;
    r.lhs_true += o.lhs;
    r.rhs_true += o.rhs;
    r.certificates_verified += o.verified;
    r.certificate_failures += o.failed;
    for (auto& n : o.notes) r.notes.push_back(std::move(n));
    for (auto& c : o.counterexamples) r.counterexamples.push_back(std::move(c));
  }
}

void count_certificate(InstanceOutcome& o, bool ok) { ok ? ++o.verified : ++o.failed; }

}  // namespace

std::string comparable_text(const VerificationReport& r) {
  std::string out = "report " + r.theorem_id + (r.params.empty() ? "" : " " + r.params) + "\n";
  out += "instances_checked: " + std::to_string(r.instances_checked) + "\n";
  out += "lhs_true: " + std::to_string(r.lhs_true) + "\n";
  out += "rhs_true: " + std::to_string(r.rhs_true) + "\n";
  out += "certificates_verified: " + std::to_string(r.certificates_verified) + "\n";
  out += "certificate_failures: " + std::to_string(r.certificate_failures) + "\n";
  out += "counterexamples: " + std::to_string(r.counterexamples.size()) + "\n";
  for (const auto& n : r.notes) out += "note: " + n + "\n";
  for (const auto& c : r.counterexamples) {
    out += "counterexample:\nkind: " + c.kind + "\n" + to_text(c.matroid);
    for (const auto& [k, v] : c.fields) out += k + ": " + v + "\n";
    out += "end\n";
  }
  return out;
}

std::string to_text(const VerificationReport& r) {
  return comparable_text(r) + "elapsed_ms: " + std::to_string(r.elapsed.count()) + "\n";
}

VerificationReport verify_equivalence(const EquivalenceSpec& spec, const std::vector<BinaryMatroid>& universe,
                                      std::size_t jobs) {
  const auto start = Clock::now();
  auto r = new_report(spec.id, spec.params);
  std::vector<InstanceOutcome> outcomes(universe.size());
  parallel_for(universe.size(), jobs, [&](std::size_t i) {
    const auto& m = universe[i];
    auto& o = outcomes[i];
    const auto br = first_breaking(m, spec.lift, spec.h_min, spec.h_max);
    const auto hit = first_pattern(m, spec.patterns);
    o.lhs = br.has_value();
    o.rhs = hit.has_value();
    if (br) count_certificate(o, verify_certificate(apply_lift(spec.lift, m, br->h, br->pivot), k4_matroid(), br->cert));
    if (hit) count_certificate(o, verify_certificate(m, resolve_pattern(hit->name), hit->cert));
    if (o.lhs == o.rhs) return;
    Counterexample c{"equivalence", m, {}};
    c.fields = {{"lift", lift_name(spec.lift)},
                {"h_min", std::to_string(spec.h_min)},
                {"h_max", std::to_string(spec.h_max)},
                {"patterns", join_names(spec.patterns)},
                {"lhs", yes_no(o.lhs)},
                {"rhs", yes_no(o.rhs)},
                {"witness", br ? join_labels(br->h) : "-"},
                {"pivot", br && br->pivot ? *br->pivot : "-"},
                {"lhs_certificate", br ? to_text(br->cert) : "-"},
                {"rhs_pattern", hit ? hit->name : "-"},
                {"rhs_certificate", hit ? to_text(hit->cert) : "-"}};
    o.counterexamples.push_back(std::move(c));
  });
  r.notes.push_back("universe: " + std::to_string(universe.size()) + " matroids");
  merge(r, outcomes);
  stamp(r, start);
  return r;
}

VerificationReport verify_g2(const VerifyOptions& o) {
  return verify_equivalence({"g2", census_params(o, 2, 2), LiftKind::split, 2, 2, {"G1"}},
                            census_universe(o.max_edges, o.jobs), o.jobs);
}

VerificationReport verify_g3(const VerifyOptions& o) {
  return verify_equivalence({"g3", census_params(o, 3, 3), LiftKind::split, 3, 3, {"G2", "G3", "G4"}},
                            census_universe(o.max_edges, o.jobs), o.jobs);
}

VerificationReport verify_corollary_splitting(const VerifyOptions& o) {
  auto r = verify_equivalence(
      {"corollary", census_params(o, 2, o.max_h), LiftKind::split, 2, o.max_h, {"Q2", "Q3", "Q4"}},
      census_universe(o.max_edges, o.jobs), o.jobs);
  // Cross-check against the G_2 characterization: G1 must reach some Q_i.
  const auto& g1 = *catalog_get("G1").matroid;
  for (const std::string q : {"Q2", "Q3", "Q4"}) {
    const auto& qm = *catalog_get(q).matroid;
    auto c = has_minor(g1, qm);
    if (c) {
      const bool ok = verify_certificate(g1, qm, *c);
      ok ? ++r.certificates_verified : ++r.certificate_failures;
    }
    r.notes.push_back("G1 contains " + q + ": " + (c ? "yes " + to_text(*c) : "no"));
  }
  return r;
}

VerificationReport verify_element_splitting(const VerifyOptions& o) {
  return verify_equivalence(
      {"element-splitting", census_params(o, 2, o.max_h), LiftKind::element_split, 2, o.max_h, {"G6"}},
      census_universe(o.max_edges, o.jobs), o.jobs);
}

VerificationReport verify_es_splitting(const VerifyOptions& o) {
  return verify_equivalence(
      {"es-splitting", census_params(o, 2, o.max_h), LiftKind::es_split, 2, o.max_h, {"G7"}},
      census_universe(o.max_edges, o.jobs), o.jobs);
}

namespace {

constexpr std::size_t kIdentityMaxH = 3;
constexpr std::size_t kCommutationMaxMoves = 2;

bool deletion_identity(const BinaryMatroid& m, const LabelSet& h) {
  const auto es = element_splitting(m, h);
  return same_matroid(deletion(es, {es.labels().back()}), splitting(m, h));
}

bool contraction_identity(const BinaryMatroid& m, const LabelSet& h) {
  const auto es = element_splitting(m, h);
  return same_matroid(contraction(es, {es.labels().back()}), m);
}

bool commutation_identity(const BinaryMatroid& m, const LabelSet& h, const LabelSet& x, const LabelSet& y) {
  return same_matroid(minor_of(splitting(m, h), x, y), splitting(minor_of(m, x, y), h));
}

// Every ordered split of the labels outside H into disjoint X, Y with
// |X| + |Y| <= kCommutationMaxMoves.
std::vector<std::pair<LabelSet, LabelSet>> outside_moves(const BinaryMatroid& m, const LabelSet& h) {
  std::vector<Label> outside;
  for (const auto& l : sorted_labels(m)) {
    if (!h.contains(l)) outside.push_back(l);
  }
  std::vector<std::pair<LabelSet, LabelSet>> out;
  for (std::size_t k = 1; k <= kCommutationMaxMoves; ++k) {
    for_each_k_subset(outside, k, [&](const LabelSet& s) {
      std::vector<Label> v(s.begin(), s.end());
      for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
        LabelSet x, y;
        for (std::size_t i = 0; i < k; ++i) ((mask >> i) & 1u ? y : x).insert(v[i]);
        out.emplace_back(std::move(x), std::move(y));
      }
      return false;
    });
  }
  return out;
}

}  // namespace

VerificationReport verify_lift_identities_on(const std::vector<BinaryMatroid>& universe, std::size_t max_edges,
                                             std::size_t jobs) {
  const auto start = Clock::now();
  auto r = new_report("lift-identities", "max_edges=" + std::to_string(max_edges) +
                                             " h_max=" + std::to_string(kIdentityMaxH) +
                                             " moves_max=" + std::to_string(kCommutationMaxMoves));
  std::vector<std::vector<InstanceOutcome>> per_matroid(universe.size());
  std::vector<std::size_t> identities(universe.size(), 0);
  parallel_for(universe.size(), jobs, [&](std::size_t i) {
    const auto& m = universe[i];
    const auto labels = sorted_labels(m);
    for (std::size_t k = 0; k <= std::min(kIdentityMaxH, m.size()); ++k) {
      auto check = [&](const LabelSet& h) {
        InstanceOutcome o;
        o.lhs = deletion_identity(m, h);
        o.rhs = contraction_identity(m, h);
        identities[i] += 2;
        if (!o.lhs) o.counterexamples.push_back({"lift-identity", m, {{"h", set_field(h)}, {"identity", "deletion"}}});
        if (!o.rhs) {
          o.counterexamples.push_back({"lift-identity", m, {{"h", set_field(h)}, {"identity", "contraction"}}});
        }
        for (const auto& [x, y] : outside_moves(m, h)) {
          ++identities[i];
          if (!commutation_identity(m, h, x, y)) {
            o.counterexamples.push_back(
                {"commutation", m, {{"h", set_field(h)}, {"delete", set_field(x)}, {"contract", set_field(y)}}});
          }
        }
        per_matroid[i].push_back(std::move(o));
        return false;
      };
      if (k == 0) {
        check({});
      } else {
        for_each_k_subset(labels, k, check);
      }
    }
  });
  std::size_t total = 0;
  for (std::size_t i = 0; i < universe.size(); ++i) {
    merge(r, per_matroid[i]);
    total += identities[i];
  }
  r.notes.push_back("universe: " + std::to_string(universe.size()) + " matroids");
  r.notes.push_back("identities_checked: " + std::to_string(total));
  stamp(r, start);
  return r;
}

VerificationReport verify_lift_identities(const VerifyOptions& o) {
  return verify_lift_identities_on(census_universe(o.max_edges, o.jobs), o.max_edges, o.jobs);
}

namespace {

std::string column_text(const BitVec& c) {
  std::string s;
  for (std::size_t i = 0; i < 3; ++i) s.push_back(c.test(i) ? '1' : '0');
  return s;
}

}  // namespace

VerificationReport verify_quotients_k4() {
  const auto start = Clock::now();
  auto r = new_report("quotients-k4", "columns=8");
  std::set<std::string> realized;
  for (const auto& q : quotients_of_k4()) {
    ++r.instances_checked;
    r.lhs_true += q.graphic();
    r.rhs_true += !q.matches.empty();
    for (const auto& name : q.matches) realized.insert(name);
    if (q.graph) {
      const bool ok = isomorphic(cycle_matroid(*q.graph), q.quotient).has_value();
      ok ? ++r.certificates_verified : ++r.certificate_failures;
    }
    r.notes.push_back("column " + column_text(q.column) + ": rank " + std::to_string(q.quotient.rank()) +
                      ", graphic " + (q.graphic() ? "yes" : "no") + ", matches " +
                      (q.matches.empty() ? "-" : join_names(q.matches)) +
                      (q.graph ? ", graph " + canonical_encoding(*q.graph) : ""));
    if (q.graphic() && q.matches.empty()) {
      r.counterexamples.push_back({"quotient", q.quotient, {{"column", column_text(q.column)}, {"reason", "unmatched"}}});
    }
  }
  for (const std::string name : {"Q1", "Q2", "Q3", "Q4"}) {
    if (!realized.contains(name)) {
      r.counterexamples.push_back({"quotient", *catalog_get(name).matroid, {{"name", name}, {"reason", "unrealized"}}});
    }
  }
  stamp(r, start);
  return r;
}

namespace {

struct Mt1Outcome {
  bool member = false;
  bool holds = false;
  std::string witness;
  std::string detail;
  std::size_t verified = 0;
  std::size_t failed = 0;
};

const std::vector<std::string>& recorded_minimal(std::size_t k) {
  static const std::vector<std::string> none;
  static const std::vector<std::string> g2{"G1"};
  return k == 2 ? g2 : none;
}

Mt1Outcome mt1_check(const BinaryMatroid& m, std::size_t k) {
  Mt1Outcome out;
  const auto h = in_class_gk(m, k);
  if (!h) return out;
  out.member = true;
  out.witness = join_labels(*h);
  const auto w = reduce_to_minimal_witness(m, *h);
  (verify_certificate(splitting(m, *h), k4_matroid(), w.k4_cert) ? out.verified : out.failed)++;

  for (const std::string q : {"Q2", "Q3", "Q4"}) {
    const auto& qm = *catalog_get(q).matroid;
    if (auto c = has_minor(w.minor, qm)) {
      (verify_certificate(w.minor, qm, *c) ? out.verified : out.failed)++;
      const bool small = w.minor.size() <= qm.size() + k;
      out.holds = small;
      out.detail = "case ii via " + q + (small ? "" : " but extension exceeds k elements");
      if (small) return out;
    }
  }
  for (const auto& name : recorded_minimal(k - 1)) {
    const auto& base = *catalog_get(name).matroid;
    for (const auto& e : w.minor.labels()) {
      if (w.minor.size() == base.size() + 1 && isomorphic(base, deletion(w.minor, {e}))) {
        out.holds = true;
        out.detail = "case i via " + name;
        return out;
      }
    }
  }
  if (out.detail.empty()) out.detail = "neither case";
  return out;
}

}  // namespace

VerificationReport verify_mt1_on(const std::vector<BinaryMatroid>& universe, std::string params, std::size_t jobs) {
  const auto start = Clock::now();
  auto r = new_report("mt1", std::move(params));
  std::vector<InstanceOutcome> outcomes(universe.size() * 2);
  parallel_for(universe.size() * 2, jobs, [&](std::size_t i) {
    const auto& m = universe[i / 2];
    const std::size_t k = 2 + i % 2;
    const auto res = mt1_check(m, k);
    auto& o = outcomes[i];
    o.lhs = res.member;
    o.rhs = res.member && res.holds;
    o.verified = res.verified;
    o.failed = res.failed;
    if (res.member && !res.holds) {
      o.counterexamples.push_back(
          {"mt1", m, {{"k", std::to_string(k)}, {"witness", res.witness}, {"reason", res.detail}}});
    }
  });
  r.notes.push_back("universe: " + std::to_string(universe.size()) + " matroids, k in {2,3}");
  r.notes.push_back("recorded minimal minors: G_1 none, G_2 G1");
  merge(r, outcomes);
  stamp(r, start);
  return r;
}

VerificationReport verify_mt1_structure(const VerifyOptions& o) {
  return verify_mt1_on(census_universe(o.max_edges, o.jobs), "max_edges=" + std::to_string(o.max_edges), o.jobs);
}

const std::vector<std::string>& theorem_ids() {
  static const std::vector<std::string> ids{"g2",           "g3",              "corollary",    "element-splitting",
                                            "es-splitting", "lift-identities", "quotients-k4", "mt1"};
  return ids;
}

VerifyOptions default_options(const std::string& id) {
  VerifyOptions o;
  if (id == "g2" || id == "g3" || id == "mt1") o.max_edges = 7;
  if (id == "corollary" || id == "element-splitting" || id == "lift-identities") o.max_edges = 6;
  if (id == "es-splitting") {
    o.max_edges = 5;
    o.max_h = 3;
  }
  if (id == "lift-identities") o.max_h = 3;
  return o;
}

VerificationReport run_verification(const std::string& id, const VerifyOptions& o) {
  if (id == "g2") return verify_g2(o);
  if (id == "g3") return verify_g3(o);
  if (id == "corollary") return verify_corollary_splitting(o);
  if (id == "element-splitting") return verify_element_splitting(o);
  if (id == "es-splitting") return verify_es_splitting(o);
  if (id == "lift-identities") return verify_lift_identities(o);
  if (id == "quotients-k4") return verify_quotients_k4();
  if (id == "mt1") return verify_mt1_structure(o);
  throw LabelError("unknown theorem id '" + id + "'");
}

namespace {

struct Block {
  std::string kind;
  BinaryMatroid matroid;
  std::map<std::string, std::string> fields;
};

std::optional<LabelSet> optional_set(const std::string& v) {
  if (v == "-") return std::nullopt;
  return parse_label_set(v);
}

// Empty string when the block re-verifies, otherwise the reason.
std::string reverify_block(const Block& b) {
  const auto& m = b.matroid;
  auto field = [&](const std::string& k) {
    auto it = b.fields.find(k);
    if (it == b.fields.end()) throw ParseError("counterexample lacks '" + k + "'");
    return it->second;
  };
  if (b.kind == "equivalence") {
    const auto lift = parse_lift(field("lift"));
    const auto h_min = detail::parse_count(field("h_min"), "h_min");
    const auto h_max = detail::parse_count(field("h_max"), "h_max");
    std::vector<std::string> patterns;
    for (auto p : detail::split_on(field("patterns"), ',')) patterns.emplace_back(detail::trim(p));
    const bool lhs = field("lhs") == "true";
    const bool rhs = field("rhs") == "true";
    if (lhs == rhs) return "both sides agree";
    if (lhs) {
      const auto h = optional_set(field("witness"));
      if (!h || h->size() < h_min || h->size() > h_max) return "witness missing or out of range";
      std::optional<Label> pivot;
      if (field("pivot") != "-") pivot = field("pivot");
      if (lift == LiftKind::es_split && (!pivot || !h->contains(*pivot))) return "pivot missing";
      const auto lifted = apply_lift(lift, m, *h, pivot);
      if (!verify_certificate(lifted, k4_matroid(), certificate_from_text(field("lhs_certificate")))) {
        return "lhs certificate does not re-verify";
      }
    } else if (first_breaking(m, lift, h_min, h_max)) {
      return "lhs recorded false but a breaking set exists";
    }
    if (rhs) {
      const auto name = field("rhs_pattern");
      if (std::find(patterns.begin(), patterns.end(), name) == patterns.end()) return "rhs pattern not listed";
      if (!verify_certificate(m, resolve_pattern(name), certificate_from_text(field("rhs_certificate")))) {
        return "rhs certificate does not re-verify";
      }
    } else if (first_pattern(m, patterns)) {
      return "rhs recorded false but a pattern minor exists";
    }
    return "";
  }
  if (b.kind == "lift-identity") {
    const auto h = parse_set_field(field("h"));
    const bool holds = field("identity") == "deletion" ? deletion_identity(m, h) : contraction_identity(m, h);
    return holds ? "identity holds" : "";
  }
  if (b.kind == "commutation") {
    const bool holds = commutation_identity(m, parse_set_field(field("h")), parse_set_field(field("delete")),
                                            parse_set_field(field("contract")));
    return holds ? "identity holds" : "";
  }
  if (b.kind == "quotient") {
    if (field("reason") == "unrealized") {
      for (const auto& q : quotients_of_k4()) {
        if (isomorphic(q.quotient, m)) return "quotient is realized";
      }
      return "";
    }
    for (const std::string q : {"Q1", "Q2", "Q3", "Q4"}) {
      if (isomorphic(*catalog_get(q).matroid, m)) return "quotient matches " + q;
    }
    return graphic_witness(m, m.rank() + 1) ? "" : "quotient is not graphic";
  }
  if (b.kind == "mt1") {
    const auto res = mt1_check(m, detail::parse_count(field("k"), "k"));
    return res.member && !res.holds ? "" : "structure holds";
  }
  return "unknown kind '" + b.kind + "'";
}

}  // namespace

ReverifyResult reverify_report(std::string_view text) {
  ReverifyResult out;
  const auto lines = detail::content_lines(text);
  std::size_t i = 0;
  while (i < lines.size()) {
    if (lines[i] != "counterexample:") {
      ++i;
      continue;
    }
    ++i;
    Block b;
    if (i >= lines.size() || lines[i].substr(0, 6) != "kind: ") throw ParseError("counterexample lacks kind");
    b.kind = std::string(detail::trim(lines[i].substr(6)));
    ++i;
    if (i >= lines.size()) throw ParseError("counterexample lacks a matroid");
    const auto head = detail::split_ws(lines[i]);
    if (head.size() != 3) throw ParseError("bad matroid header in counterexample");
    const auto r = detail::parse_count(head[1], "r");
    const auto n = detail::parse_count(head[2], "n");
    const std::size_t span = n == 0 ? 1 : r + 2;
    if (i + span > lines.size()) throw ParseError("truncated matroid in counterexample");
    std::string mtext;
    for (std::size_t j = i; j < i + span; ++j) mtext += std::string(lines[j]) + "\n";
    b.matroid = matroid_from_text(mtext);
    i += span;
    for (; i < lines.size() && lines[i] != "end"; ++i) {
      const auto colon = lines[i].find(": ");
      if (colon == std::string_view::npos) throw ParseError("bad counterexample line '" + std::string(lines[i]) + "'");
      b.fields[std::string(lines[i].substr(0, colon))] = std::string(detail::trim(lines[i].substr(colon + 2)));
    }
    if (i >= lines.size()) throw ParseError("counterexample block lacks 'end'");
    ++i;
    ++out.checked;
    const auto problem = reverify_block(b);
    if (problem.empty()) {
      ++out.confirmed;
    } else {
      out.problems.push_back("block " + std::to_string(out.checked) + " (" + b.kind + "): " + problem);
    }
  }
  return out;
}

}  // namespace bgamma
