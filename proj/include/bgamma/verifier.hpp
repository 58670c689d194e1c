#pragma once

#include <chrono>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bgamma/matroid.hpp"

namespace bgamma {

struct VerifyOptions {
  std::size_t max_edges = 7;
  std::size_t max_h = 4;
  std::size_t jobs = 0;  // 0 = all cores; never changes the report
};

// One failed instance. `fields` are "key: value" lines in a fixed order and
// carry everything reverify_report needs.
struct Counterexample {
  std::string kind;  // equivalence, lift-identity, commutation, quotient, mt1
  BinaryMatroid matroid;
  std::vector<std::pair<std::string, std::string>> fields;
};

struct VerificationReport {
  std::string theorem_id;
  std::string params;
  std::size_t instances_checked = 0;
  std::size_t lhs_true = 0;
  std::size_t rhs_true = 0;
  std::size_t certificates_verified = 0;
  std::size_t certificate_failures = 0;
  std::vector<std::string> notes;
  std::vector<Counterexample> counterexamples;
  std::chrono::milliseconds elapsed{0};
};

// Everything but the trailing "elapsed_ms:" line; byte-identical for equal
// parameters regardless of jobs.
std::string comparable_text(const VerificationReport& r);
std::string to_text(const VerificationReport& r);

enum class LiftKind { split, element_split, es_split };

// "Some H with h_min <= |H| <= min(h_max, |E|) (and e in H for es-splitting)
// makes the lift non-gammoid" versus "m has a minor among `patterns`
// (catalog names)", checked on every matroid of `universe`.
struct EquivalenceSpec {
  std::string id;
  std::string params;
  LiftKind lift = LiftKind::split;
  std::size_t h_min = 2;
  std::size_t h_max = 2;
  std::vector<std::string> patterns;
};

VerificationReport verify_equivalence(const EquivalenceSpec& spec, const std::vector<BinaryMatroid>& universe,
                                      std::size_t jobs = 0);

VerificationReport verify_g2(const VerifyOptions& o);
VerificationReport verify_g3(const VerifyOptions& o);
VerificationReport verify_corollary_splitting(const VerifyOptions& o);
VerificationReport verify_element_splitting(const VerifyOptions& o);
VerificationReport verify_es_splitting(const VerifyOptions& o);
VerificationReport verify_lift_identities(const VerifyOptions& o);
VerificationReport verify_quotients_k4();
VerificationReport verify_mt1_structure(const VerifyOptions& o);

// Lift-identity and commutation sweeps over an explicit universe.
VerificationReport verify_lift_identities_on(const std::vector<BinaryMatroid>& universe, std::size_t max_edges,
                                             std::size_t jobs = 0);
VerificationReport verify_mt1_on(const std::vector<BinaryMatroid>& universe, std::string params,
                                 std::size_t jobs = 0);

const std::vector<std::string>& theorem_ids();
// Per-theorem default budget (the sizes the sweeps are calibrated for).
VerifyOptions default_options(const std::string& id);
// Dispatch by id; throws LabelError for an unknown id.
VerificationReport run_verification(const std::string& id, const VerifyOptions& o);

struct ReverifyResult {
  std::size_t checked = 0;
  std::size_t confirmed = 0;
  std::vector<std::string> problems;  // one line per block that did not re-verify
};

// Re-checks every counterexample block from the report text alone: true
// sides by their certificates, false sides by fresh exhaustive search.
ReverifyResult reverify_report(std::string_view text);

}  // namespace bgamma
