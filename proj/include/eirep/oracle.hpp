#pragma once

// Brute-force verification: enumerate all representations at a fixed
// dimension vector over a small finite field, partition into isomorphism
// classes, count indecomposables, and construct the explicit module families
// used by the free-action theorem.

#include <optional>

#include "eirep/presentations.hpp"

namespace eirep {

struct OracleError : std::runtime_error {
  std::string kind;
  OracleError(std::string kind_, const std::string& message)
      : std::runtime_error(kind_ + ": " + message), kind(std::move(kind_)) {}
};

// A representation carries one matrix per slot of its target: all morphisms
// for a category target (slot index = morphism index), or all arrows for a
// presentation target.
struct Representation {
  std::vector<int> dims;       // per node (object/vertex), canonical order
  std::vector<Matrix> mats;    // per slot
};

// Enumeration target: a finite category or a bound quiver.
class RepTarget {
 public:
  static RepTarget category(const FiniteCategory& c);
  static RepTarget presentation(const QuiverPresentation& p);

  int node_count() const { return static_cast<int>(node_ids_.size()); }
  const std::vector<std::string>& node_ids() const { return node_ids_; }
  int slot_count() const { return static_cast<int>(slot_src_.size()); }
  int slot_src(int s) const { return slot_src_[static_cast<size_t>(s)]; }
  int slot_tgt(int s) const { return slot_tgt_[static_cast<size_t>(s)]; }
  const std::string& slot_id(int s) const { return slot_ids_[static_cast<size_t>(s)]; }

  // generator slots, enumerated in this order
  const std::vector<int>& generators() const { return generators_; }

  // full functoriality / relation check on a complete matrix assignment
  bool is_valid(const Field& f, const std::vector<int>& dims,
                const std::vector<Matrix>& mats) const;
  // incremental check after the first k generators are assigned (with the
  // derived slots they determine filled in)
  bool prefix_valid(const Field& f, const std::vector<int>& dims,
                    std::vector<Matrix>& mats, int k) const;
  // fill identity slots and slots derivable from the first k generators
  void derive(const Field& f, const std::vector<int>& dims,
              std::vector<Matrix>& mats, int k) const;

  bool is_category() const { return cat_.has_value(); }
  const FiniteCategory& category_ref() const { return *cat_; }
  const QuiverPresentation& presentation_ref() const { return *pres_; }

 private:
  std::optional<FiniteCategory> cat_;
  std::optional<QuiverPresentation> pres_;
  std::vector<std::string> node_ids_;
  std::vector<int> slot_src_, slot_tgt_;
  std::vector<std::string> slot_ids_;
  std::vector<int> generators_;
  // identity slots (category): node -> slot
  std::vector<int> identity_slot_;
  // derivation: slot -> (g slot, f slot) with M = M_g * M_f, in a valid order,
  // plus the generator level after which it is derivable
  struct Derivation {
    int slot, g, f, level;
  };
  std::vector<Derivation> derivations_;
  std::vector<int> slot_level_;  // generator prefix needed for this slot
};

// All representations at the dimension vector, as packed keys (sorted).
struct RepSet {
  RepTarget target;
  std::shared_ptr<const Field> field;
  std::vector<int> dims;
  std::vector<std::string> keys;  // packed slot matrices, lexicographically sorted

  std::uint64_t count() const { return keys.size(); }
  Representation unpack(size_t index) const;
  std::string pack(const Representation& r) const;
  int index_of(const std::string& key) const;  // -1 if absent
};

// Enumerates every valid representation exactly once. The budget caps the
// number of visited assignment nodes in the pruned search; the error reports
// the raw search-space size.
RepSet enumerate_reps(const RepTarget& target, const std::vector<int>& dims,
                      std::shared_ptr<const Field> field,
                      std::uint64_t budget = (1ULL << 30));

struct IsoClasses {
  std::vector<int> class_of;   // rep index -> class id
  std::vector<int> class_rep;  // class id -> representative rep index
  int count = 0;
};

// Isomorphism classes of the full enumeration via orbit partition under the
// base-change group (generated by transvections and a diagonal unit per node).
IsoClasses iso_classes(const RepSet& reps);

// Endomorphism algebra of a representation (block maps commuting with all
// slot matrices).
StructureAlgebra endomorphism_algebra(const RepTarget& target,
                                      std::shared_ptr<const Field> field,
                                      const Representation& rep);

// local endomorphism ring test; the zero representation is not indecomposable
bool is_indecomposable(const RepTarget& target, std::shared_ptr<const Field> field,
                       const Representation& rep, std::uint64_t seed = default_seed());

// splitting of a decomposable representation along an idempotent endomorphism
struct Splitting {
  Representation summand_a, summand_b;
};
std::optional<Splitting> split_representation(const RepTarget& target,
                                              std::shared_ptr<const Field> field,
                                              const Representation& rep,
                                              std::uint64_t seed = default_seed());

// invertible intertwiner search; exhaustive within budget, then seeded random
// trials; throws OracleError("BudgetExceeded") when inconclusive
bool are_isomorphic(const RepTarget& target, std::shared_ptr<const Field> field,
                    const Representation& v, const Representation& w,
                    std::uint64_t budget = (1ULL << 20),
                    std::uint64_t seed = default_seed());

struct OracleCount {
  std::vector<int> dims;
  std::uint64_t total_reps = 0;
  int indecomposable_classes = 0;
};

OracleCount count_indecomposables(const RepTarget& target, const std::vector<int>& dims,
                                  std::shared_ptr<const Field> field,
                                  std::uint64_t budget = (1ULL << 30),
                                  std::uint64_t seed = default_seed());

// ---------------------------------------------------------------------------
// Explicit families (free-action theorem)

struct FamilyWitness {
  FElem lambda;
  Representation rep;  // over the category target
  Matrix a_lambda;
  std::string regime;  // "both-semisimple", "left-modular", "right-modular"
};

// V_lambda for a two-object EI category whose product action is free; the
// distinguished hom matrix is A_lambda (identity-leading block with lambda in
// position (2,1)). Throws OracleError("RegimeMismatch") when the category or
// field does not match a supported regime.
FamilyWitness build_family(const FiniteCategory& c, std::shared_ptr<const Field> field,
                           FElem lambda, std::uint64_t seed = default_seed());

// Fully faithful embedding of k(G x H)-modules: the module is given by
// commuting matrices for End(x) and End(y); morphisms of C(x,y) act through
// their unique (g, h) labels relative to per-orbit base points. Requires a
// free product action.
Representation induce_from_product(const FiniteCategory& c,
                                   std::shared_ptr<const Field> field,
                                   const std::map<std::string, Matrix>& g_action,
                                   const std::map<std::string, Matrix>& h_action);

// exhaustive functoriality check of a category representation
bool representation_valid(const FiniteCategory& c, const Field& f,
                          const Representation& rep);

}  // namespace eirep
