#pragma once

// Finite-dimensional bound quiver algebra kQ/I. The basis consists of the
// normal paths: paths that are not leading terms of the ideal, computed by
// exact elimination per (source, target) block with columns ordered longest
// path first. Admissibility is certified by a level N with every path of
// length N reducing to zero in the ideal; a zero prefix kills any longer
// path, so all paths of length >= N vanish and the quotient is spanned by
// the normal paths of length < N.

#include <map>
#include <string>
#include <vector>

#include "taucat/quiver.hpp"

namespace taucat {

class CapExceeded : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BasisPath {
  int src = -1, tgt = -1;
  std::vector<int> arrows;  // chronological
  int length() const { return static_cast<int>(arrows.size()); }
};

// sparse vector over basis indices; absent = zero
using LinComb = std::map<int, Scalar>;

class BoundAlgebra {
 public:
  static BoundAlgebra build(const ParsedQuiver& pq, int path_cap = 10000);

  const Quiver& quiver() const { return q_; }
  const std::vector<Relation>& relations() const { return rels_; }
  Field field() const { return q_.field; }
  int n_vertices() const { return static_cast<int>(q_.vertices.size()); }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<BasisPath>& basis() const { return basis_; }

  // all paths of length >= nilpotency_level() are zero in the algebra
  int nilpotency_level() const { return level_; }

  LinComb reduce_path(int src, const std::vector<int>& arrows) const;
  LinComb mult(int i, int j) const;  // first i, then j; {} if not composable

  int trivial_path_index(int v) const { return e_idx_[v]; }
  const std::vector<int>& paths_from(int v) const { return from_[v]; }
  const std::vector<int>& paths_into(int v) const { return into_[v]; }

 private:
  Quiver q_;
  std::vector<Relation> rels_;
  std::vector<BasisPath> basis_;
  int level_ = 0;
  std::vector<int> e_idx_;
  std::vector<std::vector<int>> from_, into_;
  std::map<std::pair<int, std::vector<int>>, LinComb> table_;  // paths of length < level_

  void consistency_checks_() const;
};

BoundAlgebra parse_algebra(const std::string& text, int path_cap = 10000);

}  // namespace taucat
