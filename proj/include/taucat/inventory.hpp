#pragma once

// Complete list of indecomposable modules for a representation-finite
// algebra, built by knitting: start from the projectives and injectives and
// close under rad P, I/soc, both AR translates and AR sequence middle terms.
// For Nakayama algebras a closed-form interval backend exists and
// build_inventory cross-checks the two.

#include "taucat/artrans.hpp"

namespace taucat {

struct Inventory {
  const BoundAlgebra* alg = nullptr;
  std::vector<Module> modules;  // canonical order: total dim, then dim vector
  std::vector<int> proj_of, inj_of, simple_of;  // per vertex; -1 if missing
  std::vector<bool> is_proj, is_inj;

  int size() const { return (int)modules.size(); }
  // index of the inventory member isomorphic to m (m indecomposable), -1 if none
  int find(const Module& m) const;
  // indices (with multiplicity) of the summands of an arbitrary module;
  // throws if some summand is not in the inventory
  std::vector<int> summand_indices(const Module& m) const;
};

// The AR sequence middle term of the sequence ending in x (indecomposable,
// non-projective): realized from a socle class of Ext^1(x, tau x).
Module ar_middle(const OppositeBridge& br, const Module& x);

bool is_nakayama_algebra(const BoundAlgebra& a);
std::vector<Module> nakayama_intervals(const BoundAlgebra& a);

// cap bounds the number of indecomposables before giving up
Inventory build_inventory(const BoundAlgebra& a, int cap = 256);

}  // namespace taucat
