#pragma once

// The endotrivialization: quotient of a skeletal EI category by the
// transitive hull of f ~ g iff f = f''h1f', g = f''h2f' for morphisms
// f'', f' and endomorphisms h1, h2, together with the quotient functor and
// its universal property.

#include "eirep/fincat.hpp"

namespace eirep {

struct Endotrivialization {
  FiniteCategory source;
  FiniteCategory quotient;
  // morphism index in source -> morphism index in quotient; identity on
  // objects (same object ids).
  std::vector<int> morphism_map;
  std::vector<int> class_of;  // same as morphism_map (kept for clarity)
};

// Throws CategoryError("IncompatibleQuotient", ...) if the induced
// composition is ill-defined on classes (cannot happen for valid EI input;
// the check guards against implementation bugs).
Endotrivialization endotrivialize(const FiniteCategory& c);

bool is_endotrivial(const FiniteCategory& c);

// Functor data between two finite categories.
struct FunctorData {
  std::map<std::string, std::string> objects;    // source object -> target object
  std::map<std::string, std::string> morphisms;  // source morphism -> target morphism
};

bool is_valid_functor(const FiniteCategory& c, const FiniteCategory& d,
                      const FunctorData& f);

// True iff F factors through the quotient functor via exactly one functor
// quotient -> D. Requires D endotrivial and F a valid functor.
bool check_universal_property(const Endotrivialization& e, const FiniteCategory& d,
                              const FunctorData& f);

// The quotient functor of an endotrivialization as FunctorData.
FunctorData quotient_functor(const Endotrivialization& e);

// True if two categories are isomorphic via some identification of objects
// and morphisms (brute force over hom-structure; desk scale only).
bool categories_isomorphic(const FiniteCategory& a, const FiniteCategory& b);

}  // namespace eirep
