#pragma once

// Category algebras, group algebras and incidence algebras over F_{p^k};
// Jacobson radical, primitive orthogonal idempotents, block decomposition,
// simple-module counts, and the Ext-quiver.

#include <memory>

#include "eirep/fincat.hpp"
#include "eirep/linfield.hpp"

namespace eirep {

struct AlgebraError : std::runtime_error {
  std::string kind;
  AlgebraError(std::string kind_, const std::string& message)
      : std::runtime_error(kind_ + ": " + message), kind(std::move(kind_)) {}
};

// Elements are dense coefficient vectors over the basis.
using AlgElem = std::vector<FElem>;

class StructureAlgebra {
 public:
  // table[(a, b)] = sparse expansion of basis_a * basis_b; the constructor
  // checks associativity on all basis triples and that unit is two-sided.
  static StructureAlgebra make(std::shared_ptr<const Field> field,
                               std::vector<std::string> basis,
                               std::vector<std::vector<std::pair<int, FElem>>> table,
                               AlgElem unit);

  int dim() const { return static_cast<int>(basis_.size()); }
  const Field& field() const { return *field_; }
  std::shared_ptr<const Field> field_ptr() const { return field_; }
  const std::vector<std::string>& basis() const { return basis_; }

  const std::vector<std::pair<int, FElem>>& basis_product(int a, int b) const {
    return table_[static_cast<size_t>(a) * basis_.size() + static_cast<size_t>(b)];
  }

  const AlgElem& unit() const { return unit_; }

  AlgElem zero() const { return AlgElem(basis_.size(), 0); }
  AlgElem basis_elem(int i) const;
  AlgElem add(const AlgElem& a, const AlgElem& b) const;
  AlgElem sub(const AlgElem& a, const AlgElem& b) const;
  AlgElem scale(const AlgElem& a, FElem c) const;
  AlgElem mul(const AlgElem& a, const AlgElem& b) const;
  bool is_zero(const AlgElem& a) const;
  bool is_idempotent(const AlgElem& a) const;

  Matrix left_mult_matrix(const AlgElem& a) const;   // regular representation
  Matrix right_mult_matrix(const AlgElem& a) const;

  // distinguished idempotents 1_x for algebras built from a category
  const std::map<std::string, AlgElem>& object_units() const { return object_units_; }
  void set_object_units(std::map<std::string, AlgElem> u) { object_units_ = std::move(u); }

  // true if every structure constant lies in the prime field
  bool constants_in_prime_field() const;

 private:
  std::shared_ptr<const Field> field_;
  std::vector<std::string> basis_;
  std::vector<std::vector<std::pair<int, FElem>>> table_;
  AlgElem unit_;
  std::map<std::string, AlgElem> object_units_;
};

// kC: basis = morphisms, product = composition (zero for non-composable).
StructureAlgebra category_algebra(const FiniteCategory& c,
                                  std::shared_ptr<const Field> field);
StructureAlgebra group_algebra(const CayleyTable& g, std::shared_ptr<const Field> field);
// basis e_{x<=y}; e_{yz} * e_{xy} = e_{xz}, all other products zero.
StructureAlgebra incidence_algebra(const ObjectPoset& p,
                                   std::shared_ptr<const Field> field);
// same structure constants over a larger field (constants must be prime-field)
StructureAlgebra scalar_extend(const StructureAlgebra& a,
                               std::shared_ptr<const Field> bigger);

// ---------------------------------------------------------------------------
// Radical

// Jacobson radical basis via the characteristic-p chain of charpoly
// coefficient forms over the regular representation. Throws
// AlgebraError("DimensionBoundExceeded") above the bound.
std::vector<AlgElem> radical(const StructureAlgebra& a, int dim_bound = 128);

// Basis of the span of pairwise products of two ideals/subspaces.
std::vector<AlgElem> subspace_product(const StructureAlgebra& a,
                                      const std::vector<AlgElem>& u,
                                      const std::vector<AlgElem>& v);

// Independent certification of a candidate radical: two-sided ideal +
// nilpotent + the quotient has no x != 0 with xAx = 0 (exhaustive search over
// the quotient, feasible when q^dim(A/R) <= budget). Returns false if the
// candidate fails, throws AlgebraError("BudgetExceeded") if infeasible.
bool radical_certify(const StructureAlgebra& a, const std::vector<AlgElem>& rad,
                     std::uint64_t budget = (1ULL << 22));

// Quotient by a two-sided ideal: algebra on coset representatives plus the
// projection of any element to quotient coordinates.
struct QuotientAlgebra {
  StructureAlgebra algebra;
  std::vector<AlgElem> ideal_basis;     // row-reduced
  std::vector<int> rep_indices;         // ambient basis indices representing cosets
  // project ambient element -> quotient coordinates
  AlgElem project(const StructureAlgebra& ambient, const AlgElem& v) const;
  // lift quotient coordinates -> ambient element (coset representative)
  AlgElem lift(const StructureAlgebra& ambient, const AlgElem& v) const;
};
QuotientAlgebra quotient_by_ideal(const StructureAlgebra& a,
                                  const std::vector<AlgElem>& ideal);

// ---------------------------------------------------------------------------
// Idempotents

struct IdempotentDecomposition {
  StructureAlgebra algebra;        // possibly scalar-extended
  std::vector<AlgElem> idempotents;
  std::vector<int> simple_class;   // idempotent index -> class id
  int class_count = 0;
  int extension_degree = 1;        // 1 = no extension was needed
  std::vector<std::string> class_object;  // attribution to objects, may be empty
};

// Complete set of primitive orthogonal idempotents; auto-extends scalars to
// the minimal splitting extension when the structure constants are
// prime-field, otherwise throws
// AlgebraError("NonSplitSemisimpleQuotient", "...degree d...").
IdempotentDecomposition primitive_idempotents(const StructureAlgebra& a,
                                              std::uint64_t seed = default_seed());

// Complete primitive orthogonal idempotents without the splitting-field
// requirement (corners may be extension fields); used for local tests.
std::vector<AlgElem> primitive_idempotents_nosplit(const StructureAlgebra& a,
                                                   std::uint64_t seed = default_seed());

// A is local (one primitive idempotent: no idempotents besides 0 and 1).
bool is_local_algebra(const StructureAlgebra& a, std::uint64_t seed = default_seed());

// Block decomposition: primitive idempotents of the center (always defined
// over the base field).
struct BlockDecomposition {
  std::vector<AlgElem> central_idempotents;
  std::vector<StructureAlgebra> blocks;
  std::vector<std::vector<AlgElem>> block_embeddings;  // block basis in ambient coords
};
BlockDecomposition block_decomposition(const StructureAlgebra& a,
                                       std::uint64_t seed = default_seed());

// ---------------------------------------------------------------------------
// Ext-quiver

struct ExtQuiver {
  std::vector<std::string> vertices;        // one label per simple class
  std::vector<std::string> vertex_object;   // object attribution (may be empty strings)
  std::vector<std::vector<int>> arrows;     // arrows[i][j] = multiplicity i -> j
  int extension_degree = 1;
  int arrow_total() const {
    int t = 0;
    for (auto& row : arrows)
      for (int m : row) t += m;
    return t;
  }
  int loop_count() const {
    int t = 0;
    for (size_t i = 0; i < arrows.size(); ++i) t += arrows[i][i];
    return t;
  }
};

ExtQuiver ext_quiver(const StructureAlgebra& a, std::uint64_t seed = default_seed());
ExtQuiver ext_quiver(const IdempotentDecomposition& dec);

// ---------------------------------------------------------------------------
// Group-theoretic helpers

// number of conjugacy classes of p-regular elements (p = 0: all classes)
int group_simple_count(const CayleyTable& g, std::int64_t p);
bool is_trivial_or_p_group(const CayleyTable& g, std::int64_t p);
// Sylow p-subgroup cyclic <=> some element has order = p-part of |G|
bool sylow_p_cyclic(const CayleyTable& g, std::int64_t p);

// representation type of the group algebra kG in characteristic p:
// finite iff p does not divide |G| or the Sylow p-subgroup is cyclic
bool group_algebra_finite_type(const CayleyTable& g, std::int64_t p);

}  // namespace eirep
