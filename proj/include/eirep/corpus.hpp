#pragma once

// Bundled example categories: the five Z2-Z2 two-object categories, the
// Z2-Z3 example, the pair (C, C') with Z4 endomorphisms, poset and path
// categories, and small group categories used throughout the test suites.

#include "eirep/fincat.hpp"

namespace eirep::corpus {

CayleyTable trivial_group();
CayleyTable cyclic_group(int n);        // elements "g0".."g{n-1}"
CayleyTable klein_four();               // Z2 x Z2
CayleyTable symmetric_3();              // S3

// The five two-object EI categories with End(x) = End(y) = Z2 and the hom-set
// actions numbered (1)-(5).
FiniteCategory z2z2_case(int which);

// Two objects, End(x) = Z2 acting trivially on the right, End(y) = Z3 cycling
// three parallel morphisms on the left.
FiniteCategory z2_z3_example();

// Z4 at the source, four morphisms cyclically permuted by the right action.
FiniteCategory cyclic4_free_arrows();     // "C"
// Z4 at the source, a single morphism absorbed by the right action.
FiniteCategory cyclic4_single_arrow();    // "C'"

FiniteCategory a2_path_category();        // x -> y
FiniteCategory an_chain_category(int n);  // chain poset of n elements
FiniteCategory kronecker2_category();     // two parallel arrows
FiniteCategory diamond_poset_category();  // commuting square
FiniteCategory diamond_free_category();   // square with two distinct composites

// Single morphism between commuting group objects, both actions trivial.
FiniteCategory single_morphism_category(const CayleyTable& g, const CayleyTable& h);

// Hom set = the regular (G x H)-biset: free transitive product action.
FiniteCategory free_transitive_category(const CayleyTable& g, const CayleyTable& h);

// All bundled files, keyed by file stem.
std::vector<std::pair<std::string, FiniteCategory>> bundle();

}  // namespace eirep::corpus
