#pragma once

// Quivers with relations: building the bound path algebra, verifying that a
// presentation matches a computed algebra, string-algebra recognition, band
// search, and Dynkin/Euclidean classification of underlying graphs.

#include <optional>

#include "eirep/algebra.hpp"

namespace eirep {

struct ArrowDecl {
  std::string id, src, tgt;
};

// One summand of a relation: coeff * (path), with the path written in
// composition order: path[0] is the outermost (last applied) arrow, so
// {"b", "a"} denotes b∘a. Entries may carry exponent shorthand "a^3".
struct PathTerm {
  std::int64_t coeff = 1;
  std::vector<std::string> path;
};

struct QuiverPresentation {
  std::vector<std::string> vertices;
  std::vector<ArrowDecl> arrows;
  std::vector<std::vector<PathTerm>> relations;

  int vertex_index(const std::string& id) const;
  int arrow_index(const std::string& id) const;
  // expands exponent shorthand and checks path endpoints; throws
  // AlgebraError("BadPresentation", ...) on malformed input, including
  // relations outside the square of the arrow ideal.
  void validate() const;
  // expanded arrow-index sequence of a term's path, composition order
  std::vector<int> expand_path(const std::vector<std::string>& path) const;
};

// Bound path algebra kQ/I with basis the surviving path classes of length
// < bound. Fails with AlgebraError("NotFiniteDimensionalWithinBound") if any
// class of length >= bound survives, and with
// AlgebraError("PathBudgetExceeded") if the raw path count explodes.
StructureAlgebra presented_algebra(const QuiverPresentation& pres,
                                   std::shared_ptr<const Field> field, int length_bound,
                                   std::uint64_t path_budget = 200000);

struct PresentationWitness {
  bool verified = false;
  std::string reason;                          // set when not verified
  std::vector<int> vertex_to_class;            // vertex index -> simple class id
  std::map<std::string, AlgElem> arrow_images; // in the decomposition's algebra
  int presented_dim = 0;
};

// Searches for an algebra isomorphism from the presented algebra onto A,
// mapping vertices to primitive idempotent classes and arrows to radical
// elements of matching fibers. The coefficient search runs over prime-field
// combinations of the rad/rad^2 fiber basis (0/±1 combos of up to two basis
// vectors first, full combinations for fibers of dimension <= 3).
PresentationWitness verify_presentation(const IdempotentDecomposition& dec,
                                        const QuiverPresentation& pres,
                                        std::uint64_t budget = 4000000);
PresentationWitness verify_presentation(const StructureAlgebra& a,
                                        const QuiverPresentation& pres,
                                        std::uint64_t budget = 4000000);

// true iff all relations are monomial (zero relations)
bool is_monomial(const QuiverPresentation& pres);

// String algebra check: monomial relations, at most two arrows in/out per
// vertex, unique continuation on both sides of every arrow.
bool is_string_algebra(const QuiverPresentation& pres);

struct BandWitness {
  // letters in application order (index 0 applied first); negative entries
  // encode inverse letters: value a -> arrow a, value -(a+1) -> arrow a inverse
  std::vector<int> letters;
  std::string display;  // e.g. "a- b g a" with trailing '-' marking inverses
};

// Bounded search for a band (primitive cyclic reduced walk using both
// orientations and avoiding all zero relations in every power).
std::optional<BandWitness> find_band(const QuiverPresentation& pres, int max_length);

// Default band search bound: 2 * (#arrows) * (max zero-relation length).
int default_band_bound(const QuiverPresentation& pres);

// Certified absence of bands: no strongly connected component of the
// letter-compatibility graph mixes direct and inverse letters. A true result
// rules out bands of every length; false is inconclusive.
bool certify_band_free(const QuiverPresentation& pres);

// re-check a witness against the presentation (used for certificates)
bool check_band_witness(const QuiverPresentation& pres, const BandWitness& w);

// ---------------------------------------------------------------------------
// Underlying graph classification

enum class GraphTag { DynkinADE, Euclidean, Other };

struct GraphComponent {
  GraphTag tag;
  std::string name;  // "A3", "D4", "E6", "A~3", "D~4", "E~7", "other"
  std::vector<int> vertices;
};

struct GraphClass {
  GraphTag tag;  // DynkinADE iff all components Dynkin; Euclidean if any
                 // component Euclidean and none Other; else Other
  std::vector<GraphComponent> components;
};

struct Quiver {
  std::vector<std::string> vertices;
  std::vector<ArrowDecl> arrows;
};

Quiver quiver_of(const ExtQuiver& q);
GraphClass underlying_graph_class(const Quiver& q);

}  // namespace eirep
