#include "taucat/inventory.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace taucat {

int Inventory::find(const Module& m) const {
  for (int i = 0; i < size(); ++i) {
    if (modules[i].dims != m.dims) continue;
    if (is_isomorphic_indec(modules[i], m)) return i;
  }
  return -1;
}

std::vector<int> Inventory::summand_indices(const Module& m) const {
  std::vector<int> out;
  for (const Piece& p : decompose(m)) {
    int idx = find(p.m);
    if (idx < 0) throw std::logic_error("inventory: summand not in inventory");
    for (int k = 0; k < p.mult; ++k) out.push_back(idx);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Module ar_middle(const OppositeBridge& br, const Module& x) {
  Module tx = tau(br, x);
  if (tx.total_dim() == 0) throw std::logic_error("ar_middle: module is projective");
  Ext1Space es = ext1_space(x, tx);
  if (es.dim() == 0) throw std::logic_error("ar_middle: Ext1(x, tau x) vanished");
  Field f = x.field();

  // socle of Ext^1(x, tau x) as a right End(x)-module: classes killed by
  // pullback along every radical endomorphism
  EndAlgebra e = end_algebra(x);
  std::vector<ModuleMap> rads = radical_endos(x, e);
  const Module& p0 = es.pres.p0;
  const Module& om = es.pres.omega.src;
  std::vector<ModuleMap> hom_p0 = hom_basis(p0, p0);
  std::vector<ModuleMap> hom_om = hom_basis(om, om);
  std::vector<Vec> lift_cols, restr_cols;
  for (const ModuleMap& b : hom_p0) lift_cols.push_back(flatten_map(compose(es.pres.cover, b)));
  for (const ModuleMap& b : hom_om) restr_cols.push_back(flatten_map(compose(es.pres.omega, b)));
  Matrix lift_mat = Matrix::from_cols(f, lift_cols, lift_cols.empty() ? 0 : (int)lift_cols[0].size());
  Matrix restr_mat =
      Matrix::from_cols(f, restr_cols, restr_cols.empty() ? 0 : (int)restr_cols[0].size());

  int d = es.dim();
  std::vector<Vec> stacked;
  for (const ModuleMap& r : rads) {
    // omega(r): solve cover o rhat = r o cover, then iota o w = rhat o iota
    auto xc = lift_mat.solve(flatten_map(compose(r, es.pres.cover)));
    if (!xc) throw std::logic_error("ar_middle: endo does not lift through cover");
    ModuleMap rhat = ModuleMap::zero(p0, p0);
    for (size_t i = 0; i < hom_p0.size(); ++i) rhat = add(rhat, scale((*xc)[i], hom_p0[i]));
    auto yc = restr_mat.solve(flatten_map(compose(rhat, es.pres.omega)));
    if (!yc) throw std::logic_error("ar_middle: endo does not restrict to omega");
    ModuleMap w = ModuleMap::zero(om, om);
    for (size_t i = 0; i < hom_om.size(); ++i) w = add(w, scale((*yc)[i], hom_om[i]));
    // action matrix on classes
    for (int k = 0; k < d; ++k) {
      Vec unit(d, Scalar::zero(f));
      unit[k] = Scalar::one(f);
      Vec img = es.class_of(compose(es.cocycle(unit), w));
      stacked.push_back(img);  // column k of the action; collect as rows of A^T
    }
  }
  // kernel of all actions: assemble matrix with one row per (r, coordinate)
  Vec cls;
  if (stacked.empty()) {
    cls.assign(d, Scalar::zero(f));
    cls[0] = Scalar::one(f);
  } else {
    // stacked holds columns (per r: d columns); rebuild row-major system
    int nr = (int)rads.size();
    Matrix sys(f, nr * d, d);
    for (int rr = 0; rr < nr; ++rr)
      for (int k = 0; k < d; ++k)
        for (int i = 0; i < d; ++i) sys.at(rr * d + i, k) = stacked[rr * d + k][i];
    auto ker = sys.kernel_basis();
    if (ker.empty()) throw std::logic_error("ar_middle: Ext socle came out zero");
    cls = ker[0];
  }
  return realize_extension(es, cls).middle;
}

bool is_nakayama_algebra(const BoundAlgebra& a) {
  std::vector<int> out(a.n_vertices(), 0), in(a.n_vertices(), 0);
  for (const Arrow& ar : a.quiver().arrows) {
    ++out[ar.src];
    ++in[ar.tgt];
  }
  for (int v = 0; v < a.n_vertices(); ++v)
    if (out[v] > 1 || in[v] > 1) return false;
  return true;
}

std::vector<Module> nakayama_intervals(const BoundAlgebra& a) {
  std::vector<Module> out;
  for (int v = 0; v < a.n_vertices(); ++v) {
    Module p = projective(a, v);
    for (int j = 1; j <= p.total_dim(); ++j) {
      ModuleMap irj = radical_power_inclusion(p, j);
      std::vector<std::vector<Vec>> sub(p.dims.size());
      for (size_t u = 0; u < p.dims.size(); ++u)
        for (int c = 0; c < irj.comp[u].cols(); ++c) sub[u].push_back(irj.comp[u].col(c));
      Module q = quotient_by(p, sub).tgt;
      if (q.total_dim() > 0) out.push_back(q);
      if (irj.src.total_dim() == 0) break;  // higher powers repeat p itself
    }
  }
  return out;
}

Inventory build_inventory(const BoundAlgebra& a, int cap) {
  OppositeBridge br(a);
  Inventory inv;
  inv.alg = &a;

  auto add = [&](const Module& m, std::deque<int>& work) {
    if (m.total_dim() == 0) return;
    int idx = inv.find(m);
    if (idx >= 0) return;
    if ((int)inv.modules.size() >= cap)
      throw CapExceeded("inventory cap " + std::to_string(cap) +
                        " exceeded; the algebra may be representation-infinite");
    inv.modules.push_back(m);
    work.push_back((int)inv.modules.size() - 1);
  };

  std::deque<int> work;
  std::vector<Module> projs, injs;
  for (int v = 0; v < a.n_vertices(); ++v) projs.push_back(projective(a, v));
  for (int v = 0; v < a.n_vertices(); ++v) injs.push_back(injective(a, v));
  for (const Module& p : projs) add(p, work);
  for (const Module& i : injs) add(i, work);

  auto is_one_of = [&](const Module& m, const std::vector<Module>& list) {
    for (const Module& l : list)
      if (m.dims == l.dims && is_isomorphic_indec(m, l)) return true;
    return false;
  };

  while (!work.empty()) {
    Module x = inv.modules[work.front()];
    work.pop_front();
    bool xp = is_one_of(x, projs), xi = is_one_of(x, injs);
    if (xp) {
      Module r = radical_inclusion(x).src;
      for (const Piece& p : decompose(r)) add(p.m, work);
    }
    if (xi) {
      Module q = socle_quotient(x).tgt;
      for (const Piece& p : decompose(q)) add(p.m, work);
    }
    if (!xp) {
      Module tx = tau(br, x);
      for (const Piece& p : decompose(tx)) add(p.m, work);
      Module mid = ar_middle(br, x);
      for (const Piece& p : decompose(mid)) add(p.m, work);
    }
    if (!xi) {
      Module y = tau_inverse(br, x);
      for (const Piece& p : decompose(y)) add(p.m, work);
      for (const Piece& p : decompose(ar_middle(br, y))) add(p.m, work);
    }
  }

  // canonical order
  std::stable_sort(inv.modules.begin(), inv.modules.end(), [](const Module& a, const Module& b) {
    if (a.total_dim() != b.total_dim()) return a.total_dim() < b.total_dim();
    return a.dims < b.dims;
  });

  inv.proj_of.assign(a.n_vertices(), -1);
  inv.inj_of.assign(a.n_vertices(), -1);
  inv.simple_of.assign(a.n_vertices(), -1);
  inv.is_proj.assign(inv.size(), false);
  inv.is_inj.assign(inv.size(), false);
  for (int v = 0; v < a.n_vertices(); ++v) {
    inv.proj_of[v] = inv.find(projs[v]);
    inv.inj_of[v] = inv.find(injs[v]);
    inv.simple_of[v] = inv.find(simple(a, v));
    if (inv.proj_of[v] < 0 || inv.inj_of[v] < 0)
      throw std::logic_error("inventory: projective or injective missing after knitting");
    inv.is_proj[inv.proj_of[v]] = true;
    inv.is_inj[inv.inj_of[v]] = true;
  }

  if (is_nakayama_algebra(a)) {
    std::vector<Module> ref = nakayama_intervals(a);
    std::vector<bool> used(ref.size(), false);
    if ((int)ref.size() != inv.size())
      throw std::logic_error("inventory: Nakayama interval count disagrees with knitting");
    for (const Module& m : inv.modules) {
      bool hit = false;
      for (size_t i = 0; i < ref.size(); ++i) {
        if (used[i] || ref[i].dims != m.dims) continue;
        if (is_isomorphic_indec(ref[i], m)) {
          used[i] = true;
          hit = true;
          break;
        }
      }
      if (!hit) throw std::logic_error("inventory: knitted module missing from interval list");
    }
  }
  return inv;
}

}  // namespace taucat
