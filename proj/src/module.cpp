#include "taucat/module.hpp"

#include <sstream>
#include <stdexcept>

namespace taucat {

int Module::total_dim() const {
  int t = 0;
  for (int d : dims) t += d;
  return t;
}

int Module::offset(int v) const {
  int o = 0;
  for (int u = 0; u < v; ++u) o += dims[u];
  return o;
}

Matrix Module::path_action(int src, const std::vector<int>& arrows) const {
  Matrix m = Matrix::identity(field(), dims[src]);
  int at = src;
  for (int a : arrows) {
    const Arrow& ar = alg->quiver().arrows[a];
    if (ar.src != at) throw std::logic_error("module: path not composable");
    m = mats[a] * m;
    at = ar.tgt;
  }
  return m;
}

void Module::validate() const {
  const Quiver& q = alg->quiver();
  if ((int)dims.size() != (int)q.vertices.size()) throw std::logic_error("module: dims size");
  if ((int)mats.size() != (int)q.arrows.size()) throw std::logic_error("module: mats size");
  for (size_t a = 0; a < q.arrows.size(); ++a) {
    const Arrow& ar = q.arrows[a];
    if (mats[a].rows() != dims[ar.tgt] || mats[a].cols() != dims[ar.src])
      throw std::logic_error("module: arrow matrix shape for " + ar.name);
  }
  for (const Relation& rel : alg->relations()) {
    Matrix sum(field(), dims[rel.tgt], dims[rel.src]);
    for (const RelTerm& t : rel.terms) sum = sum + path_action(rel.src, t.arrows).scaled(t.coeff);
    if (!sum.is_zero()) throw std::logic_error("module: relation " + rel.text + " does not vanish");
  }
}

Module Module::zero(const BoundAlgebra& a) {
  Module m;
  m.alg = &a;
  m.dims.assign(a.n_vertices(), 0);
  m.mats.assign(a.quiver().arrows.size(), Matrix(a.field(), 0, 0));
  return m;
}

ProjStructure projective_structure(const BoundAlgebra& a, int v) {
  ProjStructure ps;
  ps.vertex = v;
  ps.path_ids.assign(a.n_vertices(), {});
  for (int id : a.paths_from(v)) ps.path_ids[a.basis()[id].tgt].push_back(id);
  return ps;
}

Module projective(const BoundAlgebra& a, int v) {
  ProjStructure ps = projective_structure(a, v);
  Module m;
  m.alg = &a;
  m.dims.assign(a.n_vertices(), 0);
  for (int w = 0; w < a.n_vertices(); ++w) m.dims[w] = (int)ps.path_ids[w].size();
  std::map<int, int> pos;  // basis path id -> local index at its target vertex
  for (int w = 0; w < a.n_vertices(); ++w)
    for (size_t k = 0; k < ps.path_ids[w].size(); ++k) pos[ps.path_ids[w][k]] = (int)k;
  m.mats.assign(a.quiver().arrows.size(), Matrix(a.field(), 0, 0));
  for (size_t ai = 0; ai < a.quiver().arrows.size(); ++ai) {
    const Arrow& ar = a.quiver().arrows[ai];
    Matrix ma(a.field(), m.dims[ar.tgt], m.dims[ar.src]);
    for (size_t c = 0; c < ps.path_ids[ar.src].size(); ++c) {
      const BasisPath& p = a.basis()[ps.path_ids[ar.src][c]];
      std::vector<int> ext = p.arrows;
      ext.push_back((int)ai);
      for (const auto& [id, coeff] : a.reduce_path(v, ext)) ma.at(pos.at(id), (int)c) = coeff;
    }
    m.mats[ai] = ma;
  }
  m.validate();
  return m;
}

Module injective(const BoundAlgebra& a, int v) {
  // I(v) at w is dual to span of paths w -> v; an arrow b: w -> u acts by the
  // transpose of precomposition  (paths u -> v) -> (paths w -> v), r -> b then r.
  std::vector<std::vector<int>> into(a.n_vertices());  // per src vertex: path ids w -> v
  for (int id : a.paths_into(v)) into[a.basis()[id].src].push_back(id);
  std::map<int, int> pos;
  for (int w = 0; w < a.n_vertices(); ++w)
    for (size_t k = 0; k < into[w].size(); ++k) pos[into[w][k]] = (int)k;
  Module m;
  m.alg = &a;
  m.dims.assign(a.n_vertices(), 0);
  for (int w = 0; w < a.n_vertices(); ++w) m.dims[w] = (int)into[w].size();
  m.mats.assign(a.quiver().arrows.size(), Matrix(a.field(), 0, 0));
  for (size_t ai = 0; ai < a.quiver().arrows.size(); ++ai) {
    const Arrow& ar = a.quiver().arrows[ai];
    // pre: (paths ar.tgt -> v) -> (paths ar.src -> v)
    Matrix pre(a.field(), m.dims[ar.src], m.dims[ar.tgt]);
    for (size_t c = 0; c < into[ar.tgt].size(); ++c) {
      const BasisPath& r = a.basis()[into[ar.tgt][c]];
      std::vector<int> ext;
      ext.push_back((int)ai);
      ext.insert(ext.end(), r.arrows.begin(), r.arrows.end());
      for (const auto& [id, coeff] : a.reduce_path(ar.src, ext)) pre.at(pos.at(id), (int)c) = coeff;
    }
    m.mats[ai] = pre.transpose();
  }
  m.validate();
  return m;
}

Module simple(const BoundAlgebra& a, int v) {
  Module m;
  m.alg = &a;
  m.dims.assign(a.n_vertices(), 0);
  m.dims[v] = 1;
  m.mats.assign(a.quiver().arrows.size(), Matrix(a.field(), 0, 0));
  for (size_t ai = 0; ai < a.quiver().arrows.size(); ++ai) {
    const Arrow& ar = a.quiver().arrows[ai];
    m.mats[ai] = Matrix(a.field(), m.dims[ar.tgt], m.dims[ar.src]);
  }
  m.validate();
  return m;
}

Module direct_sum(const Module& x, const Module& y) {
  if (x.alg != y.alg) throw std::logic_error("direct_sum: different algebras");
  Module m;
  m.alg = x.alg;
  m.dims.resize(x.dims.size());
  for (size_t v = 0; v < x.dims.size(); ++v) m.dims[v] = x.dims[v] + y.dims[v];
  for (size_t a = 0; a < x.mats.size(); ++a) m.mats.push_back(Matrix::block_diag(x.mats[a], y.mats[a]));
  return m;
}

Module direct_sum(const BoundAlgebra& a, const std::vector<Module>& parts) {
  Module m = Module::zero(a);
  for (const Module& p : parts) m = direct_sum(m, p);
  return m;
}

void ModuleMap::validate() const {
  if (src.alg != tgt.alg) throw std::logic_error("map: different algebras");
  const Quiver& q = src.alg->quiver();
  if ((int)comp.size() != (int)q.vertices.size()) throw std::logic_error("map: comp size");
  for (size_t v = 0; v < q.vertices.size(); ++v)
    if (comp[v].rows() != tgt.dims[v] || comp[v].cols() != src.dims[v])
      throw std::logic_error("map: component shape at vertex " + q.vertices[v]);
  for (size_t a = 0; a < q.arrows.size(); ++a) {
    const Arrow& ar = q.arrows[a];
    if (!(comp[ar.tgt] * src.mats[a] == tgt.mats[a] * comp[ar.src]))
      throw std::logic_error("map: square at arrow " + ar.name + " does not commute");
  }
}

bool ModuleMap::is_zero() const {
  for (const Matrix& m : comp)
    if (!m.is_zero()) return false;
  return true;
}

bool ModuleMap::is_mono() const {
  for (size_t v = 0; v < comp.size(); ++v)
    if (comp[v].rank() != src.dims[v]) return false;
  return true;
}

bool ModuleMap::is_epi() const {
  for (size_t v = 0; v < comp.size(); ++v)
    if (comp[v].rank() != tgt.dims[v]) return false;
  return true;
}

bool ModuleMap::is_iso() const {
  for (size_t v = 0; v < comp.size(); ++v)
    if (src.dims[v] != tgt.dims[v]) return false;
  return is_mono() && is_epi();
}

ModuleMap ModuleMap::zero(const Module& s, const Module& t) {
  ModuleMap f;
  f.src = s;
  f.tgt = t;
  for (size_t v = 0; v < s.dims.size(); ++v) f.comp.push_back(Matrix(s.field(), t.dims[v], s.dims[v]));
  return f;
}

ModuleMap ModuleMap::identity(const Module& m) {
  ModuleMap f;
  f.src = m;
  f.tgt = m;
  for (size_t v = 0; v < m.dims.size(); ++v) f.comp.push_back(Matrix::identity(m.field(), m.dims[v]));
  return f;
}

ModuleMap compose(const ModuleMap& g, const ModuleMap& f) {
  ModuleMap h;
  h.src = f.src;
  h.tgt = g.tgt;
  for (size_t v = 0; v < f.comp.size(); ++v) h.comp.push_back(g.comp[v] * f.comp[v]);
  return h;
}

ModuleMap add(const ModuleMap& f, const ModuleMap& g) {
  ModuleMap h = f;
  for (size_t v = 0; v < f.comp.size(); ++v) h.comp[v] = f.comp[v] + g.comp[v];
  return h;
}

ModuleMap scale(const Scalar& c, const ModuleMap& f) {
  ModuleMap h = f;
  for (size_t v = 0; v < f.comp.size(); ++v) h.comp[v] = f.comp[v].scaled(c);
  return h;
}

Vec flatten_map(const ModuleMap& f) {
  Vec v;
  for (const Matrix& m : f.comp)
    for (int r = 0; r < m.rows(); ++r)
      for (int c = 0; c < m.cols(); ++c) v.push_back(m.at(r, c));
  return v;
}

ModuleMap unflatten_map(const Module& src, const Module& tgt, const Vec& v) {
  ModuleMap f = ModuleMap::zero(src, tgt);
  size_t k = 0;
  for (size_t u = 0; u < f.comp.size(); ++u)
    for (int r = 0; r < f.comp[u].rows(); ++r)
      for (int c = 0; c < f.comp[u].cols(); ++c) f.comp[u].at(r, c) = v[k++];
  if (k != v.size()) throw std::logic_error("unflatten_map: length mismatch");
  return f;
}

std::string dimvec_str(const std::vector<int>& d) {
  std::ostringstream os;
  for (size_t i = 0; i < d.size(); ++i) {
    if (i) os << ",";
    os << d[i];
  }
  return os.str();
}

}  // namespace taucat
