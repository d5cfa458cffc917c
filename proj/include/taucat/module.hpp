#pragma once

// Finite-dimensional left modules presented as quiver representations:
// a vector space per vertex and a matrix per arrow (arrow a: v -> w acts
// covariantly, mats[a]: k^{dims[v]} -> k^{dims[w]}). Relations of the
// algebra must evaluate to zero; validate() checks that.

#include <string>
#include <vector>

#include "taucat/algebra.hpp"
#include "taucat/matrix.hpp"

namespace taucat {

struct Module {
  const BoundAlgebra* alg = nullptr;
  std::vector<int> dims;     // per vertex
  std::vector<Matrix> mats;  // per arrow

  Field field() const { return alg->field(); }
  int total_dim() const;
  bool is_zero() const { return total_dim() == 0; }
  const std::vector<int>& dim_vector() const { return dims; }

  // Composite matrix of a chronological path src --arrows--> tgt.
  Matrix path_action(int src, const std::vector<int>& arrows) const;

  // Offset of vertex v's block inside the total space (vertex blocks in order).
  int offset(int v) const;

  void validate() const;  // throws std::logic_error on shape/relation failure

  static Module zero(const BoundAlgebra& a);
};

Module projective(const BoundAlgebra& a, int v);
Module injective(const BoundAlgebra& a, int v);
Module simple(const BoundAlgebra& a, int v);

Module direct_sum(const Module& x, const Module& y);
Module direct_sum(const BoundAlgebra& a, const std::vector<Module>& parts);

// Coordinate bookkeeping for projective(a, v): at vertex w the basis is the
// list of normal paths v -> w in global basis order; path_ids[w] records
// their indices in a.basis().
struct ProjStructure {
  int vertex = 0;
  std::vector<std::vector<int>> path_ids;
};
ProjStructure projective_structure(const BoundAlgebra& a, int v);

struct ModuleMap {
  Module src;
  Module tgt;
  std::vector<Matrix> comp;  // per vertex: tgt.dims[v] x src.dims[v]

  void validate() const;  // intertwining squares commute
  bool is_zero() const;
  bool is_mono() const;
  bool is_epi() const;
  bool is_iso() const;

  static ModuleMap zero(const Module& s, const Module& t);
  static ModuleMap identity(const Module& m);
};

ModuleMap compose(const ModuleMap& g, const ModuleMap& f);  // g after f
ModuleMap add(const ModuleMap& f, const ModuleMap& g);
ModuleMap scale(const Scalar& c, const ModuleMap& f);

// Flat coordinates of a map: vertex blocks in order, each row-major.
Vec flatten_map(const ModuleMap& f);
ModuleMap unflatten_map(const Module& src, const Module& tgt, const Vec& v);

std::string dimvec_str(const std::vector<int>& d);

}  // namespace taucat
