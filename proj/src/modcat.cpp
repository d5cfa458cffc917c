#include "taucat/modcat.hpp"

#include <stdexcept>

namespace taucat {

std::vector<ModuleMap> hom_basis(const Module& M, const Module& N) {
  Field f = M.field();
  const Quiver& q = M.alg->quiver();
  int nv = (int)q.vertices.size();
  std::vector<int> off(nv + 1, 0);
  for (int v = 0; v < nv; ++v) off[v + 1] = off[v] + N.dims[v] * M.dims[v];
  int unknowns = off[nv];
  std::vector<Vec> rows;
  for (size_t a = 0; a < q.arrows.size(); ++a) {
    int v = q.arrows[a].src, w = q.arrows[a].tgt;
    const Matrix& ma = M.mats[a];
    const Matrix& na = N.mats[a];
    // (f_w * M_a - N_a * f_v)[i][j] = 0
    for (int i = 0; i < N.dims[w]; ++i)
      for (int j = 0; j < M.dims[v]; ++j) {
        Vec row(unknowns, Scalar::zero(f));
        for (int k = 0; k < M.dims[w]; ++k)
          row[off[w] + i * M.dims[w] + k] = row[off[w] + i * M.dims[w] + k] + ma.at(k, j);
        for (int k = 0; k < N.dims[v]; ++k)
          row[off[v] + k * M.dims[v] + j] = row[off[v] + k * M.dims[v] + j] - na.at(i, k);
        rows.push_back(std::move(row));
      }
  }
  Matrix sys = Matrix::from_rows(f, rows, unknowns);
  std::vector<ModuleMap> out;
  for (const Vec& k : sys.kernel_basis()) {
    ModuleMap h = ModuleMap::zero(M, N);
    for (int v = 0; v < nv; ++v)
      for (int i = 0; i < N.dims[v]; ++i)
        for (int j = 0; j < M.dims[v]; ++j) h.comp[v].at(i, j) = k[off[v] + i * M.dims[v] + j];
    out.push_back(std::move(h));
  }
  return out;
}

int hom_dim(const Module& M, const Module& N) { return (int)hom_basis(M, N).size(); }

// Inclusion of the submodule spanned per vertex by the given vectors
// (closed under arrow action, or solve fails and we throw).
static ModuleMap submodule_inclusion(const Module& M, const std::vector<std::vector<Vec>>& sub) {
  Field f = M.field();
  const Quiver& q = M.alg->quiver();
  int nv = (int)q.vertices.size();
  Module S;
  S.alg = M.alg;
  S.dims.assign(nv, 0);
  std::vector<Matrix> incl(nv);
  for (int v = 0; v < nv; ++v) {
    auto basis = span_basis(f, M.dims[v], sub[v]);
    S.dims[v] = (int)basis.size();
    incl[v] = Matrix::from_cols(f, basis, M.dims[v]);
  }
  S.mats.assign(q.arrows.size(), Matrix(f, 0, 0));
  for (size_t a = 0; a < q.arrows.size(); ++a) {
    int v = q.arrows[a].src, w = q.arrows[a].tgt;
    auto x = incl[w].solve_matrix(M.mats[a] * incl[v]);
    if (!x) throw std::logic_error("submodule_inclusion: span not arrow-stable");
    S.mats[a] = *x;
  }
  ModuleMap j;
  j.src = S;
  j.tgt = M;
  j.comp = incl;
  j.validate();
  return j;
}

ModuleMap kernel_inclusion(const ModuleMap& f) {
  std::vector<std::vector<Vec>> sub(f.src.dims.size());
  for (size_t v = 0; v < f.src.dims.size(); ++v) sub[v] = f.comp[v].kernel_basis();
  return submodule_inclusion(f.src, sub);
}

ModuleMap image_inclusion(const ModuleMap& f) {
  std::vector<std::vector<Vec>> sub(f.tgt.dims.size());
  for (size_t v = 0; v < f.tgt.dims.size(); ++v)
    for (int c = 0; c < f.comp[v].cols(); ++c) sub[v].push_back(f.comp[v].col(c));
  return submodule_inclusion(f.tgt, sub);
}

ModuleMap cokernel_projection(const ModuleMap& f) {
  std::vector<std::vector<Vec>> sub(f.tgt.dims.size());
  for (size_t v = 0; v < f.tgt.dims.size(); ++v)
    for (int c = 0; c < f.comp[v].cols(); ++c) sub[v].push_back(f.comp[v].col(c));
  return quotient_by(f.tgt, sub);
}

ModuleMap quotient_by(const Module& M, const std::vector<std::vector<Vec>>& sub) {
  Field f = M.field();
  const Quiver& q = M.alg->quiver();
  int nv = (int)q.vertices.size();
  std::vector<QuotientSpace> qs(nv);
  Module Q;
  Q.alg = M.alg;
  Q.dims.assign(nv, 0);
  for (int v = 0; v < nv; ++v) {
    qs[v] = quotient_space(f, M.dims[v], sub[v]);
    Q.dims[v] = qs[v].dim();
  }
  Q.mats.assign(q.arrows.size(), Matrix(f, 0, 0));
  for (size_t a = 0; a < q.arrows.size(); ++a) {
    int v = q.arrows[a].src, w = q.arrows[a].tgt;
    Q.mats[a] = qs[w].pi * M.mats[a] * qs[v].sigma;
  }
  ModuleMap p;
  p.src = M;
  p.tgt = Q;
  for (int v = 0; v < nv; ++v) p.comp.push_back(qs[v].pi);
  p.validate();
  return p;
}

static std::vector<std::vector<Vec>> radical_vectors(const Module& M) {
  const Quiver& q = M.alg->quiver();
  std::vector<std::vector<Vec>> sub(M.dims.size());
  for (size_t a = 0; a < q.arrows.size(); ++a)
    for (int c = 0; c < M.mats[a].cols(); ++c) sub[q.arrows[a].tgt].push_back(M.mats[a].col(c));
  return sub;
}

static std::vector<std::vector<Vec>> socle_vectors(const Module& M) {
  Field f = M.field();
  const Quiver& q = M.alg->quiver();
  std::vector<std::vector<Vec>> sub(M.dims.size());
  for (size_t v = 0; v < M.dims.size(); ++v) {
    Matrix stacked(f, 0, M.dims[v]);
    for (size_t a = 0; a < q.arrows.size(); ++a)
      if (q.arrows[a].src == (int)v) stacked = Matrix::vstack(stacked, M.mats[a]);
    sub[v] = stacked.kernel_basis();
  }
  return sub;
}

ModuleMap radical_inclusion(const Module& M) { return submodule_inclusion(M, radical_vectors(M)); }
ModuleMap top_projection(const Module& M) { return quotient_by(M, radical_vectors(M)); }
ModuleMap socle_inclusion(const Module& M) { return submodule_inclusion(M, socle_vectors(M)); }
ModuleMap socle_quotient(const Module& M) { return quotient_by(M, socle_vectors(M)); }

ModuleMap radical_power_inclusion(const Module& M, int j) {
  Field f = M.field();
  const Quiver& q = M.alg->quiver();
  std::vector<std::vector<Vec>> cur(M.dims.size());
  for (size_t v = 0; v < M.dims.size(); ++v) {
    cur[v] = span_basis(f, M.dims[v], {});
    for (int i = 0; i < M.dims[v]; ++i) {
      Vec e(M.dims[v], Scalar::zero(f));
      e[i] = Scalar::one(f);
      cur[v].push_back(e);
    }
  }
  for (int step = 0; step < j; ++step) {
    std::vector<std::vector<Vec>> next(M.dims.size());
    for (size_t a = 0; a < q.arrows.size(); ++a)
      for (const Vec& u : cur[q.arrows[a].src]) next[q.arrows[a].tgt].push_back(M.mats[a].apply(u));
    for (size_t v = 0; v < M.dims.size(); ++v) next[v] = span_basis(f, M.dims[v], next[v]);
    cur = next;
  }
  return submodule_inclusion(M, cur);
}

Cover projective_cover(const Module& M) {
  Field f = M.field();
  const BoundAlgebra& a = *M.alg;
  int nv = a.n_vertices();
  // top via quotient spaces so we keep sections (radical complements)
  auto rad = radical_vectors(M);
  std::vector<QuotientSpace> qs(nv);
  for (int v = 0; v < nv; ++v) qs[v] = quotient_space(f, M.dims[v], rad[v]);

  Cover c;
  c.mult.assign(nv, 0);
  std::vector<Module> parts;
  std::vector<Vec> gens;  // generator image in M, per summand
  for (int v = 0; v < nv; ++v) {
    c.mult[v] = qs[v].dim();
    for (int k = 0; k < qs[v].dim(); ++k) {
      c.summands.push_back(v);
      parts.push_back(projective(a, v));
      gens.push_back(qs[v].sigma.col(k));
    }
  }
  c.p0 = direct_sum(a, parts);
  ModuleMap onto = ModuleMap::zero(c.p0, M);
  for (int w = 0; w < nv; ++w) {
    int colbase = 0;
    for (size_t s = 0; s < parts.size(); ++s) {
      int v = c.summands[s];
      ProjStructure ps = projective_structure(a, v);
      for (size_t k = 0; k < ps.path_ids[w].size(); ++k) {
        const BasisPath& p = a.basis()[ps.path_ids[w][k]];
        Vec img = M.path_action(v, p.arrows).apply(gens[s]);
        for (int r = 0; r < M.dims[w]; ++r) onto.comp[w].at(r, colbase + (int)k) = img[r];
      }
      colbase += parts[s].dims[w];
    }
  }
  onto.validate();
  if (!onto.is_epi()) throw std::logic_error("projective_cover: not epi");
  c.onto = onto;
  return c;
}

Presentation minimal_presentation(const Module& M) {
  Presentation pr;
  Cover c0 = projective_cover(M);
  pr.p0 = c0.p0;
  pr.cover = c0.onto;
  pr.p0_summands = c0.summands;
  pr.omega = kernel_inclusion(c0.onto);
  Cover c1 = projective_cover(pr.omega.src);
  pr.p1 = c1.p0;
  pr.p1_summands = c1.summands;
  pr.f = compose(pr.omega, c1.onto);
  return pr;
}

// rank of { flatten(g o incl) : g in Hom(P0, N) } inside Hom(Omega, N) coordinates
static int restriction_rank(const ModuleMap& incl, const Module& N) {
  Field f = N.field();
  std::vector<Vec> vs;
  int ambient = 0;
  for (size_t v = 0; v < N.dims.size(); ++v) ambient += N.dims[v] * incl.src.dims[v];
  for (const ModuleMap& g : hom_basis(incl.tgt, N)) vs.push_back(flatten_map(compose(g, incl)));
  return span_rank(f, ambient, vs);
}

int ext1_dim(const Module& M, const Module& N) {
  Presentation pr = minimal_presentation(M);
  int d = hom_dim(pr.omega.src, N);
  return d - restriction_rank(pr.omega, N);
}

int ext2_dim(const Module& M, const Module& N) {
  Presentation pr = minimal_presentation(M);
  return ext1_dim(pr.omega.src, N);
}

Ext1Space ext1_space(const Module& M, const Module& N) {
  Ext1Space es;
  es.pres = minimal_presentation(M);
  es.n = N;
  es.hom_omega = hom_basis(es.pres.omega.src, N);
  Field f = N.field();
  std::vector<Vec> cols;
  for (const ModuleMap& h : es.hom_omega) cols.push_back(flatten_map(h));
  int ambient = cols.empty() ? 0 : (int)cols[0].size();
  Matrix B = Matrix::from_cols(f, cols, ambient);
  std::vector<Vec> img_coords;
  for (const ModuleMap& g : hom_basis(es.pres.p0, N)) {
    auto x = B.solve(flatten_map(compose(g, es.pres.omega)));
    if (!x) throw std::logic_error("ext1_space: restriction not in hom basis span");
    img_coords.push_back(*x);
  }
  es.classes = quotient_space(f, (int)es.hom_omega.size(), img_coords);
  return es;
}

ModuleMap Ext1Space::cocycle(const Vec& cls) const {
  Vec x = classes.sigma.apply(cls);
  ModuleMap h = ModuleMap::zero(pres.omega.src, n);
  for (size_t i = 0; i < hom_omega.size(); ++i) h = add(h, scale(x[i], hom_omega[i]));
  return h;
}

Vec Ext1Space::class_of(const ModuleMap& h) const {
  Field f = n.field();
  std::vector<Vec> cols;
  for (const ModuleMap& b : hom_omega) cols.push_back(flatten_map(b));
  int ambient = cols.empty() ? 0 : (int)cols[0].size();
  auto x = Matrix::from_cols(f, cols, ambient).solve(flatten_map(h));
  if (!x) throw std::logic_error("ext1 class_of: not a cocycle in basis span");
  return classes.pi.apply(*x);
}

Extension realize_extension(const Ext1Space& es, const Vec& cls) {
  Field f = es.n.field();
  const Module& N = es.n;
  const Module& P0 = es.pres.p0;
  const Module& Om = es.pres.omega.src;
  ModuleMap h = es.cocycle(cls);
  Module NP = direct_sum(N, P0);
  // phi: Omega -> N + P0, w -> (h w, -i w)
  ModuleMap phi = ModuleMap::zero(Om, NP);
  for (size_t v = 0; v < N.dims.size(); ++v)
    phi.comp[v] = Matrix::vstack(h.comp[v], es.pres.omega.comp[v].scaled(Scalar(f, -1)));
  phi.validate();

  int nv = (int)N.dims.size();
  std::vector<QuotientSpace> qs(nv);
  Module E;
  E.alg = N.alg;
  E.dims.assign(nv, 0);
  for (int v = 0; v < nv; ++v) {
    std::vector<Vec> span;
    for (int c = 0; c < phi.comp[v].cols(); ++c) span.push_back(phi.comp[v].col(c));
    qs[v] = quotient_space(f, NP.dims[v], span);
    E.dims[v] = qs[v].dim();
  }
  E.mats.assign(NP.mats.size(), Matrix(f, 0, 0));
  for (size_t a = 0; a < NP.mats.size(); ++a) {
    int v = N.alg->quiver().arrows[a].src, w = N.alg->quiver().arrows[a].tgt;
    E.mats[a] = qs[w].pi * NP.mats[a] * qs[v].sigma;
  }
  E.validate();

  Extension ex;
  ex.middle = E;
  ex.incl = ModuleMap::zero(N, E);
  ex.proj = ModuleMap::zero(E, es.pres.cover.tgt);
  for (int v = 0; v < nv; ++v) {
    Matrix in(f, NP.dims[v], N.dims[v]);  // [I; 0]
    for (int i = 0; i < N.dims[v]; ++i) in.at(i, i) = Scalar::one(f);
    ex.incl.comp[v] = qs[v].pi * in;
    Matrix pr2(f, P0.dims[v], NP.dims[v]);  // [0 I]
    for (int i = 0; i < P0.dims[v]; ++i) pr2.at(i, N.dims[v] + i) = Scalar::one(f);
    ex.proj.comp[v] = es.pres.cover.comp[v] * pr2 * qs[v].sigma;
  }
  ex.incl.validate();
  ex.proj.validate();
  if (!ex.incl.is_mono()) throw std::logic_error("realize_extension: inclusion not mono");
  if (!ex.proj.is_epi()) throw std::logic_error("realize_extension: projection not epi");
  if (!compose(ex.proj, ex.incl).is_zero()) throw std::logic_error("realize_extension: not a complex");
  for (int v = 0; v < nv; ++v)
    if (E.dims[v] != N.dims[v] + es.pres.cover.tgt.dims[v])
      throw std::logic_error("realize_extension: middle dimension off");
  return ex;
}

}  // namespace taucat
