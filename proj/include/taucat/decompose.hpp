#pragma once

// Krull-Schmidt machinery: endomorphism algebras, their (certified nilpotent)
// radical, indecomposability tests, direct sum decomposition and isomorphism
// testing. Everything either certifies its answer or throws; no silent
// heuristics.

#include <vector>

#include "taucat/modcat.hpp"

namespace taucat {

struct EndAlgebra {
  std::vector<ModuleMap> basis;   // basis of End(M)
  std::vector<Matrix> rho;        // faithful total-space matrices, same order
  std::vector<Vec> rad_coords;    // basis of rad End(M) in End coordinates
  int dim() const { return (int)basis.size(); }
  int rad_dim() const { return (int)rad_coords.size(); }
  int top_dim() const { return dim() - rad_dim(); }
};

// Computes End(M) with its radical. The radical candidate comes from the
// trace form; an explicit ideal-power nilpotency check certifies it equals
// the Jacobson radical (always true over Q; over F_p a degenerate trace form
// makes the check fail and we throw with advice rather than guess).
EndAlgebra end_algebra(const Module& M);

std::vector<ModuleMap> radical_endos(const Module& M, const EndAlgebra& e);

bool is_indecomposable(const Module& M);

struct Piece {
  Module m;
  int mult = 0;
};
// Indecomposable direct summands with multiplicities, deterministic order
// (sorted by total dim, then dim vector). Pieces are certified
// indecomposable; throws if no splitting can be constructed for a module
// whose End top is bigger than 1.
std::vector<Piece> decompose(const Module& M);

// Both arguments must be indecomposable (as certified by decompose):
// decides via dim top End(X + Y), which is 4 for isomorphic and 2 for
// non-isomorphic indecomposables with trivial End tops.
bool is_isomorphic_indec(const Module& X, const Module& Y);

bool is_isomorphic(const Module& M, const Module& N);

}  // namespace taucat
