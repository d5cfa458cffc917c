#include "taucat/artrans.hpp"

#include <algorithm>
#include <stdexcept>

namespace taucat {

BoundAlgebra build_opposite(const BoundAlgebra& a, int path_cap) {
  ParsedQuiver pq;
  pq.quiver.field = a.field();
  pq.quiver.vertices = a.quiver().vertices;
  for (const Arrow& ar : a.quiver().arrows) pq.quiver.arrows.push_back({ar.name, ar.tgt, ar.src});
  for (const Relation& r : a.relations()) {
    Relation ro;
    ro.src = r.tgt;
    ro.tgt = r.src;
    ro.text = r.text + " (op)";
    for (const RelTerm& t : r.terms) {
      RelTerm to;
      to.coeff = t.coeff;
      to.arrows.assign(t.arrows.rbegin(), t.arrows.rend());
      ro.terms.push_back(std::move(to));
    }
    pq.relations.push_back(std::move(ro));
  }
  BoundAlgebra op = BoundAlgebra::build(pq, path_cap);
  if (op.dim() != a.dim()) throw std::logic_error("build_opposite: dimension changed");
  return op;
}

Module dual_module(const BoundAlgebra& from, const BoundAlgebra& to, const Module& m) {
  if (m.alg != &from) throw std::logic_error("dual_module: module not over 'from'");
  Module d;
  d.alg = &to;
  d.dims = m.dims;
  d.mats.reserve(m.mats.size());
  for (const Matrix& ma : m.mats) d.mats.push_back(ma.transpose());
  d.validate();
  return d;
}

Module transpose_module(const BoundAlgebra& from, const BoundAlgebra& to, const Module& m) {
  if (m.alg != &from) throw std::logic_error("transpose_module: module not over 'from'");
  Field f = from.field();
  Presentation pr = minimal_presentation(m);
  const std::vector<int>& sv0 = pr.p0_summands;  // vertices v_i
  const std::vector<int>& sv1 = pr.p1_summands;  // vertices w_j

  // read off the path matrix a[j][i]: f restricted to the generator of
  // summand j, expanded in the basis paths of summand i
  std::vector<ProjStructure> ps0, ps1;
  for (int v : sv0) ps0.push_back(projective_structure(from, v));
  for (int w : sv1) ps1.push_back(projective_structure(from, w));
  std::vector<std::vector<std::vector<std::pair<int, Scalar>>>> a(
      sv1.size(), std::vector<std::vector<std::pair<int, Scalar>>>(sv0.size()));
  for (size_t j = 0; j < sv1.size(); ++j) {
    int wj = sv1[j];
    // column index of summand j's generator inside (P1)_{wj}
    int colbase = 0;
    for (size_t s = 0; s < j; ++s) colbase += (int)ps1[s].path_ids[wj].size();
    int triv = from.trivial_path_index(wj);
    int local = -1;
    for (size_t k = 0; k < ps1[j].path_ids[wj].size(); ++k)
      if (ps1[j].path_ids[wj][k] == triv) local = (int)k;
    if (local < 0) throw std::logic_error("transpose: generator path missing");
    Vec col = pr.f.comp[wj].col(colbase + local);
    int rowbase = 0;
    for (size_t i = 0; i < sv0.size(); ++i) {
      const auto& ids = ps0[i].path_ids[wj];
      for (size_t k = 0; k < ids.size(); ++k) {
        const Scalar& c = col[rowbase + (int)k];
        if (!(c == Scalar::zero(f))) a[j][i].push_back({ids[k], c});
      }
      rowbase += (int)ids.size();
    }
  }

  // opposite-side projectives, same summand order
  std::vector<Module> p0op, p1op;
  std::vector<ProjStructure> ps0op, ps1op;
  for (int v : sv0) {
    p0op.push_back(projective(to, v));
    ps0op.push_back(projective_structure(to, v));
  }
  for (int w : sv1) {
    p1op.push_back(projective(to, w));
    ps1op.push_back(projective_structure(to, w));
  }
  Module P0op = direct_sum(to, p0op);
  Module P1op = direct_sum(to, p1op);

  // g: P0op -> P1op, block (j, i) is left multiplication by a[j][i] read in
  // the opposite algebra (path arrows reversed)
  ModuleMap g = ModuleMap::zero(P0op, P1op);
  int nv = to.n_vertices();
  for (int u = 0; u < nv; ++u) {
    std::vector<int> colbase(sv0.size() + 1, 0), rowbase(sv1.size() + 1, 0);
    for (size_t i = 0; i < sv0.size(); ++i)
      colbase[i + 1] = colbase[i] + (int)ps0op[i].path_ids[u].size();
    for (size_t j = 0; j < sv1.size(); ++j)
      rowbase[j + 1] = rowbase[j] + (int)ps1op[j].path_ids[u].size();
    for (size_t i = 0; i < sv0.size(); ++i) {
      const auto& xs = ps0op[i].path_ids[u];  // op basis paths v_i -> u
      for (size_t c = 0; c < xs.size(); ++c) {
        const BasisPath& x = to.basis()[xs[c]];
        for (size_t j = 0; j < sv1.size(); ++j) {
          // local row index per op basis path id of summand j at u
          for (const auto& [pid, coeff] : a[j][i]) {
            const BasisPath& p = from.basis()[pid];
            std::vector<int> arrows(p.arrows.rbegin(), p.arrows.rend());
            arrows.insert(arrows.end(), x.arrows.begin(), x.arrows.end());
            for (const auto& [qid, qc] : to.reduce_path(sv1[j], arrows)) {
              const auto& ids = ps1op[j].path_ids[u];
              auto it = std::find(ids.begin(), ids.end(), qid);
              if (it == ids.end()) throw std::logic_error("transpose: path outside block");
              int row = rowbase[j] + (int)(it - ids.begin());
              g.comp[u].at(row, colbase[i] + (int)c) =
                  g.comp[u].at(row, colbase[i] + (int)c) + coeff * qc;
            }
          }
        }
      }
    }
  }
  g.validate();
  return cokernel_projection(g).tgt;
}

Module tau(const OppositeBridge& b, const Module& m) {
  Module tr = transpose_module(*b.alg, b.op, m);
  return dual_module(b.op, *b.alg, tr);
}

Module tau_inverse(const OppositeBridge& b, const Module& m) {
  Module d = dual_module(*b.alg, b.op, m);
  return transpose_module(b.op, *b.alg, d);
}

}  // namespace taucat
