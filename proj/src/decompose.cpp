#include "taucat/decompose.hpp"

#include <algorithm>
#include <stdexcept>

namespace taucat {

namespace {

Matrix rho_of(const ModuleMap& f) {
  Matrix m(f.src.field(), 0, 0);
  for (const Matrix& c : f.comp) m = Matrix::block_diag(m, c);
  return m;
}

Vec flat_matrix(const Matrix& m) {
  Vec v;
  v.reserve((size_t)m.rows() * m.cols());
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) v.push_back(m.at(r, c));
  return v;
}

Scalar trace(const Matrix& m) {
  Scalar t = Scalar::zero(m.field());
  for (int i = 0; i < m.rows(); ++i) t = t + m.at(i, i);
  return t;
}

// ---- small dense polynomials over the field, ascending coefficients ----

using Poly = std::vector<Scalar>;

Poly poly_trim(Poly p) {
  while (!p.empty() && p.back() == Scalar::zero(p.back().field())) p.pop_back();
  return p;
}

int poly_deg(const Poly& p) { return (int)p.size() - 1; }

Poly poly_mul(Field f, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, Scalar::zero(f));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
  return r;
}

Poly poly_sub(Field f, const Poly& a, const Poly& b) {
  Poly r = a;
  if (b.size() > r.size()) r.resize(b.size(), Scalar::zero(f));
  for (size_t i = 0; i < b.size(); ++i) r[i] = r[i] - b[i];
  return poly_trim(r);
}

// returns {quotient, remainder}
std::pair<Poly, Poly> poly_divmod(Field f, Poly a, const Poly& b) {
  a = poly_trim(a);
  Poly q;
  if (b.empty()) throw std::logic_error("poly: divide by zero");
  int db = poly_deg(b);
  if (poly_deg(a) >= db) q.assign(poly_deg(a) - db + 1, Scalar::zero(f));
  while (poly_deg(a) >= db) {
    Scalar c = a.back() / b.back();
    int shift = poly_deg(a) - db;
    q[shift] = c;
    for (int i = 0; i <= db; ++i) a[shift + i] = a[shift + i] - c * b[i];
    a = poly_trim(a);
  }
  return {q, a};
}

Poly poly_monic(Field f, Poly p) {
  p = poly_trim(p);
  if (p.empty()) return p;
  Scalar inv = Scalar::one(f) / p.back();
  for (Scalar& c : p) c = c * inv;
  return p;
}

// g = gcd(a,b) = u a + v b
struct XGcd {
  Poly g, u, v;
};
XGcd poly_xgcd(Field f, Poly a, Poly b) {
  Poly r0 = poly_trim(a), r1 = poly_trim(b);
  Poly u0{Scalar::one(f)}, u1{}, v0{}, v1{Scalar::one(f)};
  while (!r1.empty()) {
    auto [q, r] = poly_divmod(f, r0, r1);
    Poly u2 = poly_sub(f, u0, poly_mul(f, q, u1));
    Poly v2 = poly_sub(f, v0, poly_mul(f, q, v1));
    r0 = r1;
    r1 = r;
    u0 = u1;
    u1 = u2;
    v0 = v1;
    v1 = v2;
  }
  if (r0.empty()) return {r0, {}, {}};
  Scalar lead = r0.back();
  Poly g = poly_monic(f, r0);
  Scalar inv = Scalar::one(f) / lead;
  for (Scalar& c : u0) c = c * inv;
  for (Scalar& c : v0) c = c * inv;
  return {g, u0, v0};
}

Matrix poly_eval(Field f, const Poly& p, const Matrix& a) {
  int n = a.rows();
  Matrix r(f, n, n);
  for (int i = (int)p.size() - 1; i >= 0; --i) {
    r = r * a;
    for (int d = 0; d < n; ++d) r.at(d, d) = r.at(d, d) + p[i];
  }
  return r;
}

Poly min_poly(Field f, const Matrix& a) {
  int n = a.rows();
  std::vector<Vec> powers;
  Matrix cur = Matrix::identity(f, n);
  for (int k = 0; k <= n * n; ++k) {
    Vec v = flat_matrix(cur);
    Matrix b = Matrix::from_cols(f, powers, (int)v.size());
    auto x = b.solve(v);
    if (x) {
      Poly p(k + 1, Scalar::zero(f));
      for (int i = 0; i < k; ++i) p[i] = Scalar::zero(f) - (*x)[i];
      p[k] = Scalar::one(f);
      return p;
    }
    powers.push_back(v);
    cur = cur * a;
  }
  throw std::logic_error("min_poly: no relation found");
}

// Rational (resp. prime-field) roots of p, each with multiplicity stripped.
std::vector<Scalar> field_roots(Field f, Poly p) {
  std::vector<Scalar> roots;
  p = poly_trim(p);
  if (p.size() <= 1) return roots;
  auto is_root = [&](const Scalar& c) {
    Scalar acc = Scalar::zero(f);
    for (int i = (int)p.size() - 1; i >= 0; --i) acc = acc * c + p[i];
    return acc == Scalar::zero(f);
  };
  if (!f.is_rational()) {
    for (unsigned long r = 0; r < f.p; ++r) {
      Scalar c(f, (long)r);
      if (is_root(c)) roots.push_back(c);
    }
    return roots;
  }
  // clear denominators, collect small divisors of head/tail
  mpz_class lead = 1, cst = 1;
  {
    mpz_class lcm = 1;
    for (const Scalar& c : p) lcm = lcm * c.raw().get_den() / gcd(lcm, mpz_class(c.raw().get_den()));
    std::vector<mpz_class> zs;
    for (const Scalar& c : p) zs.push_back(mpz_class(c.raw() * lcm));
    lead = abs(zs.back());
    size_t low = 0;
    while (low < zs.size() && zs[low] == 0) ++low;
    if (low > 0 && is_root(Scalar::zero(f))) roots.push_back(Scalar::zero(f));
    cst = low < zs.size() ? abs(zs[low]) : mpz_class(1);
  }
  auto small_divisors = [](const mpz_class& n) {
    std::vector<long> ds;
    if (n == 0) return ds;
    for (long d = 1; d <= 4096 && mpz_class(d) * d <= n; ++d)
      if (n % d == 0) {
        ds.push_back(d);
        mpz_class q = n / d;
        if (q.fits_slong_p()) ds.push_back(q.get_si());
      }
    std::sort(ds.begin(), ds.end());
    ds.erase(std::unique(ds.begin(), ds.end()), ds.end());
    return ds;
  };
  for (long num : small_divisors(cst))
    for (long den : small_divisors(lead))
      for (int sign : {1, -1}) {
        Scalar c(f, sign * num, den);
        if (is_root(c)) roots.push_back(c);
      }
  std::sort(roots.begin(), roots.end(), [](const Scalar& a, const Scalar& b) {
    return a.raw() < b.raw();
  });
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace

EndAlgebra end_algebra(const Module& M) {
  EndAlgebra e;
  e.basis = hom_basis(M, M);
  Field f = M.field();
  for (const ModuleMap& b : e.basis) e.rho.push_back(rho_of(b));
  int n = e.dim();
  if (n == 0) return e;
  // trace form radical
  Matrix gram(f, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      Scalar t = trace(e.rho[i] * e.rho[j]);
      gram.at(i, j) = t;
      gram.at(j, i) = t;
    }
  e.rad_coords = gram.kernel_basis();

  // certify: the span of the radical candidate is a nilpotent ideal
  auto rho_of_coords = [&](const Vec& c) {
    Matrix m(f, e.rho[0].rows(), e.rho[0].cols());
    for (int i = 0; i < n; ++i) m = m + e.rho[i].scaled(c[i]);
    return m;
  };
  std::vector<Matrix> rad_m;
  for (const Vec& c : e.rad_coords) rad_m.push_back(rho_of_coords(c));
  int total = e.rho[0].rows();
  int ambient = total * total;
  std::vector<Vec> cur;
  for (const Matrix& m : rad_m) cur.push_back(flat_matrix(m));
  cur = span_basis(f, ambient, cur);
  for (int step = 0; !cur.empty(); ++step) {
    if (step > n + 1)
      throw std::logic_error(
          "end_algebra: trace-form radical is not nilpotent; over F_p the trace "
          "form can degenerate, rerun over Q");
    std::vector<Vec> next;
    for (const Vec& s : cur) {
      Matrix sm(f, total, total);
      {
        size_t k = 0;
        for (int r = 0; r < total; ++r)
          for (int c2 = 0; c2 < total; ++c2) sm.at(r, c2) = s[k++];
      }
      for (const Matrix& t : rad_m) next.push_back(flat_matrix(sm * t));
    }
    cur = span_basis(f, ambient, next);
  }
  return e;
}

std::vector<ModuleMap> radical_endos(const Module& M, const EndAlgebra& e) {
  std::vector<ModuleMap> out;
  for (const Vec& c : e.rad_coords) {
    ModuleMap m = ModuleMap::zero(M, M);
    for (int i = 0; i < e.dim(); ++i) m = add(m, scale(c[i], e.basis[i]));
    out.push_back(std::move(m));
  }
  return out;
}

namespace {

// Quotient algebra E/rad with multiplication via lifts.
struct TopAlgebra {
  Field f;
  int n = 0;            // dim E
  QuotientSpace q;      // on End coordinates
  const EndAlgebra* e;  // structure source
  std::vector<Matrix> lmul;  // left multiplication per quotient basis elt

  Vec lift(const Vec& t) const { return q.sigma.apply(t); }

  // product of End-coordinate vectors, in End coordinates
  Vec mul_e(const Vec& a, const Vec& b) const {
    Matrix ma(f, e->rho[0].rows(), e->rho[0].cols());
    Matrix mb = ma;
    for (int i = 0; i < n; ++i) {
      ma = ma + e->rho[i].scaled(a[i]);
      mb = mb + e->rho[i].scaled(b[i]);
    }
    std::vector<Vec> cols;
    for (const Matrix& r : e->rho) cols.push_back(flat_matrix(r));
    auto x = Matrix::from_cols(f, cols, (int)cols[0].size()).solve(flat_matrix(ma * mb));
    if (!x) throw std::logic_error("end product left the algebra");
    return *x;
  }

  Vec mul_top(const Vec& a, const Vec& b) const { return q.pi.apply(mul_e(lift(a), lift(b))); }
};

TopAlgebra top_algebra(const EndAlgebra& e, Field f) {
  TopAlgebra t;
  t.f = f;
  t.n = e.dim();
  t.e = &e;
  t.q = quotient_space(f, e.dim(), e.rad_coords);
  int q = t.q.dim();
  for (int i = 0; i < q; ++i) {
    Vec ei(q, Scalar::zero(f));
    ei[i] = Scalar::one(f);
    Matrix l(f, q, q);
    for (int j = 0; j < q; ++j) {
      Vec ej(q, Scalar::zero(f));
      ej[j] = Scalar::one(f);
      Vec prod = t.mul_top(ei, ej);
      for (int r = 0; r < q; ++r) l.at(r, j) = prod[r];
    }
    t.lmul.push_back(l);
  }
  return t;
}

ModuleMap endo_from_coords(const Module& M, const EndAlgebra& e, const Vec& c) {
  ModuleMap m = ModuleMap::zero(M, M);
  for (int i = 0; i < e.dim(); ++i) m = add(m, scale(c[i], e.basis[i]));
  return m;
}

// Try to produce a nontrivial idempotent endomorphism of M. Requires
// top dim > 1. Returns empty optional only after exhausting its strategies.
std::optional<ModuleMap> find_idempotent(const Module& M, const EndAlgebra& e) {
  Field f = M.field();
  TopAlgebra top = top_algebra(e, f);
  int q = top.q.dim();

  // identity of E in End coordinates (solve sum c_i rho_i = I)
  std::vector<Vec> cols;
  for (const Matrix& r : e.rho) cols.push_back(flat_matrix(r));
  Matrix basis_flat = Matrix::from_cols(f, cols, (int)cols[0].size());
  auto id_coords = basis_flat.solve(flat_matrix(Matrix::identity(f, e.rho[0].rows())));
  if (!id_coords) throw std::logic_error("find_idempotent: identity not in End basis span");

  // strategy 1: min-poly factor split on elements of E itself (exact, no lift)
  auto try_minpoly = [&](const Vec& coords) -> std::optional<ModuleMap> {
    ModuleMap cand = endo_from_coords(M, e, coords);
    Matrix a = rho_of(cand);
    Poly mu = min_poly(f, a);
    for (const Scalar& root : field_roots(f, mu)) {
      // f1 = (t - root)^mult, f2 = mu / f1 coprime
      Poly lin{Scalar::zero(f) - root, Scalar::one(f)};
      Poly f2 = mu;
      Poly f1{Scalar::one(f)};
      while (true) {
        auto [qq, rr] = poly_divmod(f, f2, lin);
        if (!rr.empty()) break;
        f2 = qq;
        f1 = poly_mul(f, f1, lin);
      }
      if (poly_deg(f1) <= 0 || f2.empty() || poly_deg(f2) <= 0) continue;  // mu is (t-root)^k
      XGcd xg = poly_xgcd(f, f1, f2);
      if (poly_deg(xg.g) != 0) continue;  // not coprime: cannot happen, be safe
      // idempotent = (u f1)(a); mu(a) = 0 makes it exact
      Matrix em = poly_eval(f, poly_mul(f, xg.u, f1), a);
      if (em.is_zero() || em.is_identity()) continue;
      if (!(em * em == em)) continue;
      auto coords2 = basis_flat.solve(flat_matrix(em));
      if (!coords2) continue;
      return endo_from_coords(M, e, *coords2);
    }
    return std::nullopt;
  };

  // strategy 2: von Neumann in the semisimple top + idempotent lifting
  auto try_von_neumann = [&](const Vec& tcoords) -> std::optional<ModuleMap> {
    bool zero = true;
    for (const Scalar& c : tcoords)
      if (!(c == Scalar::zero(f))) zero = false;
    if (zero) return std::nullopt;
    Matrix l(f, q, q);
    for (int j = 0; j < q; ++j) {
      Vec ej(q, Scalar::zero(f));
      ej[j] = Scalar::one(f);
      Vec prod = top.mul_top(tcoords, ej);
      for (int r = 0; r < q; ++r) l.at(r, j) = prod[r];
    }
    if (l.invertible()) return std::nullopt;  // unit: useless for splitting
    Matrix rmul(f, q, q);
    for (int j = 0; j < q; ++j) {
      Vec ej(q, Scalar::zero(f));
      ej[j] = Scalar::one(f);
      Vec prod = top.mul_top(ej, tcoords);
      for (int r = 0; r < q; ++r) rmul.at(r, j) = prod[r];
    }
    auto x = (rmul * l).solve(tcoords);  // a x a = a
    if (!x) return std::nullopt;
    Vec ebar = top.mul_top(*x, tcoords);  // idempotent x a in the top
    bool ez = true, isid = false;
    for (const Scalar& c : ebar)
      if (!(c == Scalar::zero(f))) ez = false;
    if (ez) return std::nullopt;
    // lift to E and correct: ee <- 3 ee^2 - 2 ee^3 until idempotent
    Vec ecur = top.lift(ebar);
    for (int it = 0; it < 64; ++it) {
      Vec e2 = top.mul_e(ecur, ecur);
      bool idem = true;
      for (int i = 0; i < top.n; ++i)
        if (!(e2[i] == ecur[i])) idem = false;
      if (idem) break;
      Vec e3 = top.mul_e(e2, ecur);
      for (int i = 0; i < top.n; ++i)
        e2[i] = e2[i] * Scalar(f, 3);
      for (int i = 0; i < top.n; ++i) ecur[i] = e2[i] - e3[i] * Scalar(f, 2);
      if (it == 63) throw std::logic_error("find_idempotent: lifting did not converge");
    }
    ModuleMap em = endo_from_coords(M, e, ecur);
    Matrix r = rho_of(em);
    if (r.is_zero() || r.is_identity()) return std::nullopt;
    if (!(r * r == r)) return std::nullopt;
    (void)isid;
    return em;
  };

  // candidate sweep: top basis elements, then differences/sums of pairs
  std::vector<Vec> cands;
  for (int i = 0; i < q; ++i) {
    Vec v(q, Scalar::zero(f));
    v[i] = Scalar::one(f);
    cands.push_back(v);
  }
  for (int i = 0; i < q; ++i)
    for (int j = i + 1; j < q; ++j)
      for (long c : {1L, -1L, 2L, -2L, 3L, -3L}) {
        Vec v(q, Scalar::zero(f));
        v[i] = Scalar::one(f);
        v[j] = Scalar(f, c);
        cands.push_back(v);
      }
  for (const Vec& tc : cands) {
    auto r = try_von_neumann(tc);
    if (r) return r;
  }
  for (int i = 0; i < e.dim(); ++i) {
    Vec v(e.dim(), Scalar::zero(f));
    v[i] = Scalar::one(f);
    auto r = try_minpoly(v);
    if (r) return r;
  }
  for (int i = 0; i < e.dim(); ++i)
    for (int j = i + 1; j < e.dim(); ++j)
      for (long c : {1L, -1L, 2L, -2L}) {
        Vec v(e.dim(), Scalar::zero(f));
        v[i] = Scalar::one(f);
        v[j] = Scalar(f, c);
        auto r = try_minpoly(v);
        if (r) return r;
      }
  return std::nullopt;
}

void decompose_into(const Module& M, std::vector<Module>& out) {
  if (M.total_dim() == 0) return;
  EndAlgebra e = end_algebra(M);
  if (e.top_dim() == 1) {
    out.push_back(M);
    return;
  }
  auto idem = find_idempotent(M, e);
  if (!idem)
    throw std::logic_error(
        "decompose: End top has dim > 1 but no idempotent was found; "
        "the endomorphism ring is too exotic for this splitter");
  Module m1 = image_inclusion(*idem).src;
  Module m2 = kernel_inclusion(*idem).src;
  if (m1.total_dim() == 0 || m2.total_dim() == 0)
    throw std::logic_error("decompose: trivial idempotent slipped through");
  if (m1.total_dim() + m2.total_dim() != M.total_dim())
    throw std::logic_error("decompose: split dimensions do not add up");
  decompose_into(m1, out);
  decompose_into(m2, out);
}

}  // namespace

bool is_indecomposable(const Module& M) {
  if (M.total_dim() == 0) return false;
  EndAlgebra e = end_algebra(M);
  if (e.top_dim() == 1) return true;
  auto idem = find_idempotent(M, e);
  if (!idem)
    throw std::logic_error("is_indecomposable: cannot certify either way");
  return false;
}

bool is_isomorphic_indec(const Module& X, const Module& Y) {
  if (X.dim_vector() != Y.dim_vector()) return false;
  EndAlgebra e = end_algebra(direct_sum(X, Y));
  int t = e.top_dim();
  if (t == 4) return true;
  if (t == 2) return false;
  throw std::logic_error("is_isomorphic_indec: unexpected End top dimension " + std::to_string(t));
}

std::vector<Piece> decompose(const Module& M) {
  std::vector<Module> parts;
  decompose_into(M, parts);
  std::stable_sort(parts.begin(), parts.end(), [](const Module& a, const Module& b) {
    if (a.total_dim() != b.total_dim()) return a.total_dim() < b.total_dim();
    return a.dims < b.dims;
  });
  std::vector<Piece> out;
  for (const Module& p : parts) {
    bool matched = false;
    for (Piece& q : out)
      if (q.m.dims == p.dims && is_isomorphic_indec(q.m, p)) {
        ++q.mult;
        matched = true;
        break;
      }
    if (!matched) out.push_back({p, 1});
  }
  return out;
}

bool is_isomorphic(const Module& M, const Module& N) {
  if (M.dim_vector() != N.dim_vector()) return false;
  if (M.total_dim() == 0) return true;
  // cheap: some basis element of Hom(M, N) may already be invertible
  auto homs = hom_basis(M, N);
  for (const ModuleMap& h : homs)
    if (h.is_iso()) return true;
  auto pm = decompose(M);
  auto pn = decompose(N);
  if (pm.size() != pn.size()) return false;
  std::vector<bool> used(pn.size(), false);
  for (const Piece& a : pm) {
    bool found = false;
    for (size_t j = 0; j < pn.size(); ++j) {
      if (used[j] || pn[j].mult != a.mult) continue;
      if (is_isomorphic_indec(a.m, pn[j].m)) {
        used[j] = true;
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace taucat
