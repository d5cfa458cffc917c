#pragma once

// Auslander-Reiten translation via the opposite algebra: tau = D Tr and
// tau^{-1} = Tr D, with the transpose computed from a minimal projective
// presentation and the duality D flipping arrow matrices.

#include "taucat/decompose.hpp"
#include "taucat/modcat.hpp"

namespace taucat {

// Same vertices and arrow names/order, arrows reversed, relations with
// reversed paths.
BoundAlgebra build_opposite(const BoundAlgebra& a, int path_cap = 10000);

struct OppositeBridge {
  const BoundAlgebra* alg = nullptr;
  BoundAlgebra op;
  explicit OppositeBridge(const BoundAlgebra& a) : alg(&a), op(build_opposite(a)) {}
};

// M over `from`; result over `to` which must be the opposite of `from`
// (shared arrow indices). D(M)_v = (M_v)^*, arrows transposed.
Module dual_module(const BoundAlgebra& from, const BoundAlgebra& to, const Module& m);

// Tr M = coker( Hom(P0, A) -> Hom(P1, A) ) over the opposite algebra,
// with P1 -> P0 -> M a minimal presentation. Kills projective summands.
Module transpose_module(const BoundAlgebra& from, const BoundAlgebra& to, const Module& m);

Module tau(const OppositeBridge& b, const Module& m);          // D Tr
Module tau_inverse(const OppositeBridge& b, const Module& m);  // Tr D

}  // namespace taucat
