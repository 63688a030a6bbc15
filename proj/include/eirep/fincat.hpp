#pragma once

// Core data model for finite categories: validation, EI check,
// skeletalization, hom-set group actions, and the object poset.

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace eirep {

// Structured validation failure; kind names the first violated axiom and
// witnesses carries the morphism/object ids involved.
struct CategoryError : std::runtime_error {
  std::string kind;                   // e.g. "NonAssociative", "IdentityViolation"
  std::vector<std::string> witnesses;
  CategoryError(std::string kind_, std::vector<std::string> witnesses_,
                const std::string& message)
      : std::runtime_error(kind_ + ": " + message),
        kind(std::move(kind_)),
        witnesses(std::move(witnesses_)) {}
};

struct MorphismDecl {
  std::string id;
  std::string dom;
  std::string cod;
};

// Raw input tables for validate_category.
struct RawCategory {
  std::vector<std::string> objects;
  std::vector<MorphismDecl> morphisms;
  std::map<std::string, std::string> identities;              // object -> morphism id
  std::vector<std::array<std::string, 3>> compose;            // {g, f, g∘f}
};

class FiniteCategory {
 public:
  // Validates all category axioms; throws CategoryError on the first failure.
  // Objects and morphisms are stored in lexicographic id order.
  static FiniteCategory validate(const RawCategory& raw);

  int object_count() const { return static_cast<int>(objects_.size()); }
  int morphism_count() const { return static_cast<int>(mor_ids_.size()); }

  const std::string& object_id(int x) const { return objects_[static_cast<size_t>(x)]; }
  const std::string& morphism_id(int f) const { return mor_ids_[static_cast<size_t>(f)]; }
  int object_index(const std::string& id) const;
  int morphism_index(const std::string& id) const;

  int dom(int f) const { return dom_[static_cast<size_t>(f)]; }
  int cod(int f) const { return cod_[static_cast<size_t>(f)]; }
  int identity(int x) const { return identity_[static_cast<size_t>(x)]; }
  bool is_identity(int f) const { return identity_[static_cast<size_t>(dom(f))] == f; }

  // g ∘ f; defined exactly when cod(f) == dom(g), -1 otherwise.
  int compose(int g, int f) const {
    if (cod(f) != dom(g)) return -1;
    return table_[static_cast<size_t>(g) * mor_ids_.size() + static_cast<size_t>(f)];
  }

  std::vector<int> hom(int x, int y) const;  // morphisms x -> y, canonical order
  std::vector<int> endomorphisms(int x) const { return hom(x, x); }

  // two-sided inverse in the composition table, or -1
  int inverse(int f) const;

  bool is_ei() const;
  // every endomorphism is an identity
  bool is_endotrivial() const;

  FiniteCategory full_subcategory(const std::vector<int>& objects) const;
  FiniteCategory opposite() const;

  RawCategory to_raw() const;

 private:
  std::vector<std::string> objects_;
  std::vector<std::string> mor_ids_;
  std::vector<int> dom_, cod_;
  std::vector<int> identity_;
  std::vector<int> table_;  // g*n+f -> index of g∘f, -1 undefined
  friend FiniteCategory assemble_category(std::vector<std::string> objects,
                                          std::vector<std::string> mor_ids,
                                          std::vector<int> dom, std::vector<int> cod,
                                          std::vector<int> identity,
                                          std::vector<int> table);
};

// Convenience builders. Each returns a fully validated category.

// One object "x", morphisms named after the group elements.
struct CayleyTable {
  std::vector<std::string> elements;       // element ids; table in this order
  std::vector<std::vector<int>> table;     // table[i][j] = index of e_i * e_j
  int identity_index() const;
  int order() const { return static_cast<int>(elements.size()); }
  // validates group axioms, throws CategoryError("NotAGroup", ...)
  void validate() const;
  int inverse_of(int i) const;
  int element_order(int i) const;
};

FiniteCategory group_category(const CayleyTable& g, const std::string& object = "x");

// Two-object EI category from group actions on the hom set.
// right_action[f][g] = f∘g  (g in G = End(x)), left_action[f][h] = h∘f.
// Morphism ids: G element ids, H element ids, hom ids (must be disjoint).
struct TwoObjectData {
  std::string x = "x", y = "y";
  CayleyTable G;  // End(x)
  CayleyTable H;  // End(y)
  std::vector<std::string> hom;            // ids of morphisms x -> y
  std::vector<std::vector<int>> right_action;  // [f][g] -> hom index
  std::vector<std::vector<int>> left_action;   // [f][h] -> hom index
};

FiniteCategory two_object_category(const TwoObjectData& data);

// Category of a finite poset given by a reflexive-transitive leq table.
FiniteCategory poset_category(const std::vector<std::string>& elements,
                              const std::vector<std::vector<bool>>& leq);

// Path category of a finite acyclic quiver: morphisms are the paths.
FiniteCategory path_category(const std::vector<std::string>& vertices,
                             const std::vector<MorphismDecl>& arrows);

// ---------------------------------------------------------------------------

struct ObjectPoset {
  std::vector<std::string> elements;
  std::vector<std::vector<bool>> leq;
  bool is_chain() const;
  // partition into connected components of the comparability graph
  std::vector<std::vector<int>> components() const;
  bool is_disjoint_union_of_chains() const;
};

// x <= y iff C(x,y) nonempty; requires skeletal EI input, throws
// CategoryError("NotAPartialOrder", ...) if antisymmetry fails.
ObjectPoset object_poset(const FiniteCategory& c);

struct HomAction {
  int x, y;
  std::vector<int> hom;     // morphism indices of C(x,y)
  std::vector<int> aut_x;   // End(x) = Aut(x) morphism indices
  std::vector<int> aut_y;
  // right[a][i]: index into hom of hom[i]∘aut_x[a]
  std::vector<std::vector<int>> right;
  // left[b][i]: index into hom of aut_y[b]∘hom[i]
  std::vector<std::vector<int>> left;
};

struct ActionProperties {
  bool is_free;
  bool is_transitive;
  int orbit_count;
  std::vector<int> orbit_of;  // hom index -> orbit id
};

HomAction hom_action(const FiniteCategory& c, int x, int y);
ActionProperties action_properties(const FiniteCategory& c, const HomAction& a);

struct Skeletalization {
  FiniteCategory category;
  std::vector<int> representative;          // object -> representative object (input indexing)
  std::map<std::string, std::string> retraction;  // object id -> representative id
};

Skeletalization skeletalize(const FiniteCategory& c);

bool objects_isomorphic(const FiniteCategory& c, int x, int y);

}  // namespace eirep
