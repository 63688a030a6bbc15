#pragma once

// The decision engine: applies the classification rules in a fixed order and
// returns Finite / Infinite / Unknown with a certificate naming the rule,
// its checked hypotheses, and witnesses.

#include <optional>

#include "eirep/endotriv.hpp"
#include "eirep/oracle.hpp"
#include "eirep/presentations.hpp"

namespace eirep {

enum class Verdict { Finite, Infinite, Unknown };

std::string verdict_name(Verdict v);

struct Certificate {
  std::string rule;
  std::map<std::string, std::string> data;
  std::vector<std::string> notes;
};

struct RepTypeVerdict {
  Verdict verdict = Verdict::Unknown;
  Certificate certificate;
  std::int64_t characteristic = 0;
  int field_degree = 1;            // degree of the splitting field actually used
  std::vector<std::string> modular_objects;  // objects with p | |Aut|
  // rules attempted before the decision, with decline reasons
  std::vector<std::pair<std::string, std::string>> attempted;
};

struct ClassifyOptions {
  // oracle rule: explicit object-dimension vector; empty = automatic choice
  std::vector<int> oracle_dims;
  std::uint64_t oracle_budget = (1ULL << 30);
  int oracle_threshold = 2;   // minimal class-count growth to fire
  bool enable_oracle = true;  // the oracle stage may be disabled entirely
  std::uint64_t seed = default_seed();
};

// Extracted bound-quiver parameters of a verified two-vertex presentation.
struct TwoSimplesParameters {
  int m = 1, n = 1, s = 1, t = 1;  // alpha^m, beta alpha^n, gamma^s beta, gamma^t
  bool commutation = false;        // extra relation gamma^e beta = c beta alpha^f
  int e = 0, f = 0;
  std::int64_t c = 0;
};

// Membership in the representation-finite lists (up to duality); the free
// product-action tuples are excluded from the one-parameter list because the
// free-action theorem overrides them.
bool one_loop_list_finite(int m, int n);
bool two_loop_list_finite(const TwoSimplesParameters& p);

// individual rules; nullopt = the rule declines
std::optional<RepTypeVerdict> rule_group_objects(const FiniteCategory& c, std::int64_t p);
std::optional<RepTypeVerdict> rule_parallel_kronecker(const FiniteCategory& c);
std::optional<RepTypeVerdict> rule_endotrivialization(const FiniteCategory& c);
std::optional<RepTypeVerdict> rule_free_action(const FiniteCategory& c);
std::optional<RepTypeVerdict> rule_string(const FiniteCategory& c,
                                          std::shared_ptr<const Field> field,
                                          std::uint64_t seed = default_seed());
std::optional<RepTypeVerdict> rule_two_simples(const FiniteCategory& c,
                                               std::shared_ptr<const Field> field,
                                               std::uint64_t seed = default_seed());
std::optional<RepTypeVerdict> rule_coprime_hereditary(const FiniteCategory& c,
                                                      std::shared_ptr<const Field> field,
                                                      std::uint64_t seed = default_seed());
std::optional<RepTypeVerdict> rule_oracle_family(const FiniteCategory& c,
                                                 std::shared_ptr<const Field> field,
                                                 const std::vector<int>& object_dims,
                                                 std::uint64_t budget = (1ULL << 30),
                                                 int threshold = 2,
                                                 std::uint64_t seed = default_seed());

// Fixed rule order: group_objects, parallel_kronecker, endotrivialization,
// free_action, string, two_simples, coprime_hereditary, oracle_family.
RepTypeVerdict classify(const FiniteCategory& c, std::shared_ptr<const Field> field,
                        const ClassifyOptions& options = {});

// re-check a verdict's certificate from the input alone
bool verify_certificate(const FiniteCategory& c, std::shared_ptr<const Field> field,
                        const RepTypeVerdict& v);

// Run every rule independently and report all verdicts (testing aid; a
// Finite/Infinite conflict is a correctness failure).
std::vector<std::pair<std::string, std::optional<RepTypeVerdict>>> run_all_rules(
    const FiniteCategory& c, std::shared_ptr<const Field> field,
    const ClassifyOptions& options = {});

// characteristic-0 handling: the smallest prime coprime to every |Aut(x)|
std::int64_t coprime_characteristic_for(const FiniteCategory& c);

}  // namespace eirep
