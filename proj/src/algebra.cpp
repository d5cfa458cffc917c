#include "taucat/algebra.hpp"

#include <algorithm>

#include "taucat/matrix.hpp"

namespace taucat {

namespace {

struct RawPath {
  int src, tgt;
  std::vector<int> arrows;
  int length() const { return static_cast<int>(arrows.size()); }
};

using PathKey = std::pair<int, std::vector<int>>;
PathKey key_of(const RawPath& p) { return {p.src, p.arrows}; }

// p . r . q expansion state for ideal closure; appends (extend q) happen
// before prepends (extend p) so each product is generated exactly once.
struct IdealElem {
  std::map<int, Scalar> coeffs;  // global path id -> coeff
  int src, tgt;
  int level;  // max term length
  bool prepended;
};

struct PathUniverse {
  std::vector<RawPath> paths;
  std::map<PathKey, int> index;
  int maxlen = 0;
  bool saturated = false;  // no paths of length > maxlen exist at all

  int find(const PathKey& k) const {
    auto it = index.find(k);
    return it == index.end() ? -1 : it->second;
  }
};

PathUniverse enumerate_paths(const Quiver& q, int D, int cap) {
  PathUniverse u;
  std::vector<int> frontier;
  for (int v = 0; v < static_cast<int>(q.vertices.size()); ++v) {
    RawPath p{v, v, {}};
    u.index[key_of(p)] = static_cast<int>(u.paths.size());
    frontier.push_back(static_cast<int>(u.paths.size()));
    u.paths.push_back(p);
  }
  for (int len = 1; len <= D; ++len) {
    std::vector<int> next;
    for (int pi : frontier) {
      RawPath base = u.paths[pi];
      for (size_t a = 0; a < q.arrows.size(); ++a) {
        if (q.arrows[a].src != base.tgt) continue;
        RawPath p{base.src, q.arrows[a].tgt, base.arrows};
        p.arrows.push_back(static_cast<int>(a));
        u.index[key_of(p)] = static_cast<int>(u.paths.size());
        next.push_back(static_cast<int>(u.paths.size()));
        u.paths.push_back(p);
        if (static_cast<int>(u.paths.size()) > cap)
          throw CapExceeded("non-admissible ideal: path count exceeds cap " + std::to_string(cap));
      }
    }
    if (next.empty()) {
      u.saturated = true;
      u.maxlen = len - 1;
      return u;
    }
    u.maxlen = len;
    frontier = std::move(next);
  }
  return u;
}

}  // namespace

BoundAlgebra BoundAlgebra::build(const ParsedQuiver& pq, int path_cap) {
  BoundAlgebra A;
  A.q_ = pq.quiver;
  A.rels_ = pq.relations;
  Field f = A.q_.field;

  int max_rel = 0, spread = 0;
  for (const Relation& r : A.rels_) {
    int lo = 1 << 28, hi = 0;
    for (const RelTerm& t : r.terms) {
      lo = std::min(lo, static_cast<int>(t.arrows.size()));
      hi = std::max(hi, static_cast<int>(t.arrows.size()));
    }
    max_rel = std::max(max_rel, hi);
    spread = std::max(spread, hi - lo);
  }
  const int window = 2 * spread + 2;
  const int D_CAP = 512;

  int D = std::max(4, 2 * max_rel);
  while (true) {
    PathUniverse u = enumerate_paths(A.q_, D, path_cap);

    // close the relation set under arrow multiplication within max term length D
    std::vector<IdealElem> elems;
    for (const Relation& r : A.rels_) {
      IdealElem e{{}, r.src, r.tgt, 0, false};
      bool fits = true;
      for (const RelTerm& t : r.terms) {
        int id = u.find({r.src, t.arrows});
        if (id < 0) { fits = false; break; }  // term longer than D: D will grow
        auto [it, fresh] = e.coeffs.try_emplace(id, t.coeff);
        if (!fresh) it->second += t.coeff;
        e.level = std::max(e.level, static_cast<int>(t.arrows.size()));
      }
      if (fits) elems.push_back(std::move(e));
    }
    for (size_t i = 0; i < elems.size(); ++i) {
      IdealElem cur = elems[i];  // copy: elems may reallocate
      if (cur.level + 1 > D) continue;
      for (size_t a = 0; a < A.q_.arrows.size(); ++a) {
        const Arrow& ar = A.q_.arrows[a];
        if (!cur.prepended && ar.src == cur.tgt) {  // append: terms then a
          IdealElem e{{}, cur.src, ar.tgt, cur.level + 1, false};
          bool ok = true;
          for (auto& [pid, c] : cur.coeffs) {
            std::vector<int> arrows = u.paths[pid].arrows;
            arrows.push_back(static_cast<int>(a));
            int id = u.find({cur.src, arrows});
            if (id < 0) { ok = false; break; }
            e.coeffs[id] = c;
          }
          if (ok && !e.coeffs.empty()) elems.push_back(std::move(e));
        }
        if (ar.tgt == cur.src) {  // prepend: a then terms
          IdealElem e{{}, ar.src, cur.tgt, cur.level + 1, true};
          bool ok = true;
          for (auto& [pid, c] : cur.coeffs) {
            std::vector<int> arrows{static_cast<int>(a)};
            arrows.insert(arrows.end(), u.paths[pid].arrows.begin(), u.paths[pid].arrows.end());
            int id = u.find({ar.src, arrows});
            if (id < 0) { ok = false; break; }
            e.coeffs[id] = c;
          }
          if (ok && !e.coeffs.empty()) elems.push_back(std::move(e));
        }
      }
    }

    // per-block elimination, longest paths first so short paths stay normal
    int nv = static_cast<int>(A.q_.vertices.size());
    std::vector<std::vector<int>> block_paths(static_cast<size_t>(nv) * nv);
    auto block_of = [nv](int s, int t) { return s * nv + t; };
    for (size_t pid = 0; pid < u.paths.size(); ++pid)
      block_paths[block_of(u.paths[pid].src, u.paths[pid].tgt)].push_back(static_cast<int>(pid));
    for (auto& bp : block_paths)
      std::sort(bp.begin(), bp.end(), [&](int x, int y) {
        const RawPath &px = u.paths[x], &py = u.paths[y];
        if (px.length() != py.length()) return px.length() > py.length();
        return px.arrows > py.arrows;
      });

    // expansion of every path id: empty map = zero, {pid:1} = normal (interim)
    std::map<int, std::map<int, Scalar>> expansion;  // path id -> {path id: coeff}
    std::vector<bool> in_ideal_zero(u.paths.size(), false);
    std::vector<bool> is_pivot(u.paths.size(), false);

    for (int b = 0; b < nv * nv; ++b) {
      const std::vector<int>& cols = block_paths[b];
      if (cols.empty()) continue;
      std::vector<int> colpos(u.paths.size(), -1);
      for (size_t j = 0; j < cols.size(); ++j) colpos[cols[j]] = static_cast<int>(j);
      std::vector<Vec> rows;
      for (const IdealElem& e : elems) {
        if (e.coeffs.empty()) continue;
        if (block_of(e.src, e.tgt) != b) continue;
        Vec row(cols.size(), Scalar::zero(f));
        for (auto& [pid, c] : e.coeffs) row[colpos[pid]] = c;
        rows.push_back(std::move(row));
      }
      if (rows.empty()) continue;
      Matrix::Echelon ech = Matrix::from_rows(f, rows, static_cast<int>(cols.size())).echelon();
      for (int r = 0; r < ech.rank; ++r) {
        int pc = ech.pivot_cols[r];
        int pid = cols[pc];
        is_pivot[pid] = true;
        std::map<int, Scalar> exp;
        bool zero = true;
        for (size_t j = 0; j < cols.size(); ++j) {
          if (static_cast<int>(j) == pc) continue;
          const Scalar& c = ech.rref.at(r, static_cast<int>(j));
          if (!c.is_zero()) {
            exp[cols[j]] = -c;
            zero = false;
          }
        }
        in_ideal_zero[pid] = zero;
        expansion[pid] = std::move(exp);
      }
    }

    // find the nilpotency level N: all paths of length exactly N reduce to zero
    auto level_dies = [&](int len) {
      for (const RawPath& p : u.paths)
        if (p.length() == len && !in_ideal_zero[u.find(key_of(p))]) return false;
      return true;
    };
    int N = -1;
    for (int cand = 0; cand <= u.maxlen + 1; ++cand) {
      if (cand > u.maxlen || level_dies(cand)) { N = cand; break; }
    }
    bool converged = u.saturated || (N >= 0 && N + window <= D);
    if (N < 0 || !converged) {
      if (D >= D_CAP)
        throw CapExceeded("non-admissible ideal: no vanishing level found up to " + std::to_string(D));
      D *= 2;
      continue;
    }

    // freeze basis: normal paths of length < N, in BFS order
    A.level_ = N;
    std::vector<int> basis_ids;
    std::vector<int> global_index(u.paths.size(), -1);
    for (size_t pid = 0; pid < u.paths.size(); ++pid) {
      const RawPath& p = u.paths[pid];
      if (p.length() >= N || is_pivot[pid]) continue;
      global_index[pid] = static_cast<int>(basis_ids.size());
      basis_ids.push_back(static_cast<int>(pid));
    }
    if (static_cast<int>(basis_ids.size()) > path_cap)
      throw CapExceeded("algebra dimension exceeds cap " + std::to_string(path_cap));

    A.basis_.clear();
    for (int pid : basis_ids) A.basis_.push_back({u.paths[pid].src, u.paths[pid].tgt, u.paths[pid].arrows});
    A.e_idx_.assign(nv, -1);
    A.from_.assign(nv, {});
    A.into_.assign(nv, {});
    for (size_t i = 0; i < A.basis_.size(); ++i) {
      const BasisPath& p = A.basis_[i];
      if (p.length() == 0) A.e_idx_[p.src] = static_cast<int>(i);
      A.from_[p.src].push_back(static_cast<int>(i));
      A.into_[p.tgt].push_back(static_cast<int>(i));
    }

    // reduction table for all paths of length < N (pivot paths expand into
    // normal paths of the same block; rref guarantees one-step expansions)
    A.table_.clear();
    for (size_t pid = 0; pid < u.paths.size(); ++pid) {
      const RawPath& p = u.paths[pid];
      if (p.length() >= N) continue;
      LinComb lc;
      if (!is_pivot[pid]) {
        lc[global_index[pid]] = Scalar::one(f);
      } else {
        for (auto& [qid, c] : expansion[pid]) {
          if (u.paths[qid].length() >= N) continue;  // dead normal part cannot occur, but guard
          if (global_index[qid] < 0)
            throw std::logic_error("algebra: expansion hit a non-basis path");
          lc[global_index[qid]] = c;
        }
      }
      A.table_[{p.src, p.arrows}] = std::move(lc);
    }

    A.consistency_checks_();
    return A;
  }
}

LinComb BoundAlgebra::reduce_path(int src, const std::vector<int>& arrows) const {
  if (static_cast<int>(arrows.size()) >= level_) return {};
  auto it = table_.find({src, arrows});
  if (it == table_.end()) return {};  // path does not exist in the quiver
  return it->second;
}

LinComb BoundAlgebra::mult(int i, int j) const {
  const BasisPath &a = basis_[i], &b = basis_[j];
  if (a.tgt != b.src) return {};
  std::vector<int> arrows = a.arrows;
  arrows.insert(arrows.end(), b.arrows.begin(), b.arrows.end());
  return reduce_path(a.src, arrows);
}

void BoundAlgebra::consistency_checks_() const {
  Field f = field();
  for (int v = 0; v < n_vertices(); ++v)
    if (e_idx_[v] < 0) throw std::logic_error("algebra: trivial path fell out of the basis");

  // relations must evaluate to zero in the reduction table
  for (const Relation& r : rels_) {
    LinComb acc;
    for (const RelTerm& t : r.terms) {
      for (auto& [idx, c] : reduce_path(r.src, t.arrows)) {
        auto [it, fresh] = acc.try_emplace(idx, t.coeff * c);
        if (!fresh) it->second += t.coeff * c;
      }
    }
    for (auto& [idx, c] : acc)
      if (!c.is_zero()) throw std::logic_error("algebra: relation does not vanish in the quotient");
  }

  // associativity of the multiplication table (full check at small dim)
  int n = dim();
  if (n <= 40) {
    auto mult_lc = [&](const LinComb& lc, int k) {
      LinComb out;
      for (auto& [i, c] : lc)
        for (auto& [j, d] : mult(i, k)) {
          auto [it, fresh] = out.try_emplace(j, c * d);
          if (!fresh) it->second += c * d;
        }
      return out;
    };
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (basis_[i].tgt != basis_[j].src) continue;
        LinComb ij = mult(i, j);
        for (int k = 0; k < n; ++k) {
          if (basis_[j].tgt != basis_[k].src) continue;
          LinComb left = mult_lc(ij, k);
          LinComb right;  // i * (j*k)
          for (auto& [l, d] : mult(j, k))
            for (auto& [m, e] : mult(i, l)) {
              auto [it, fresh] = right.try_emplace(m, d * e);
              if (!fresh) it->second += d * e;
            }
          auto norm = [&](LinComb& lc) {
            for (auto it = lc.begin(); it != lc.end();)
              it = it->second.is_zero() ? lc.erase(it) : std::next(it);
          };
          norm(left);
          norm(right);
          if (left != right) throw std::logic_error("algebra: multiplication table not associative");
        }
      }
  }
  (void)f;
}

BoundAlgebra parse_algebra(const std::string& text, int path_cap) {
  return BoundAlgebra::build(parse_quiver_text(text), path_cap);
}

}  // namespace taucat
