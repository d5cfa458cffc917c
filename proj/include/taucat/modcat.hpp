#pragma once

// Exact-category plumbing for modules: hom spaces, kernels, images,
// cokernels, radical/top/socle, projective covers, minimal presentations
// and Ext^1 / Ext^2 with explicit cocycle realizations.

#include <vector>

#include "taucat/module.hpp"

namespace taucat {

// Basis of Hom(M, N): kernel of the intertwining system, canonical order.
std::vector<ModuleMap> hom_basis(const Module& M, const Module& N);
int hom_dim(const Module& M, const Module& N);

// Kernel of f as an inclusion ker f -> src f.
ModuleMap kernel_inclusion(const ModuleMap& f);
// Image of f as an inclusion im f -> tgt f.
ModuleMap image_inclusion(const ModuleMap& f);
// Cokernel of f as a projection tgt f -> coker f.
ModuleMap cokernel_projection(const ModuleMap& f);

// Quotient of M by the submodule spanned per vertex by sub[v] (vectors in
// M's vertex coordinates; need not be independent). Returns M -> M/U.
ModuleMap quotient_by(const Module& M, const std::vector<std::vector<Vec>>& sub);

// rad M -> M (radical = sum of images of all arrow actions).
ModuleMap radical_inclusion(const Module& M);
// M -> M / rad M.
ModuleMap top_projection(const Module& M);
// soc M -> M (largest semisimple submodule).
ModuleMap socle_inclusion(const Module& M);
// M -> M / soc M.
ModuleMap socle_quotient(const Module& M);
// rad^j M -> M.
ModuleMap radical_power_inclusion(const Module& M, int j);

struct Cover {
  Module p0;                  // projective cover
  ModuleMap onto;             // p0 ->> M
  std::vector<int> mult;      // per vertex: multiplicity of P(v) in p0
  std::vector<int> summands;  // vertex of each summand, build order
};
Cover projective_cover(const Module& M);

struct Presentation {
  Module p1, p0;
  ModuleMap f;                // P1 -> P0, minimal
  ModuleMap cover;            // P0 ->> M
  ModuleMap omega;            // ker(cover) -> P0, Omega M as a module
  std::vector<int> p0_summands, p1_summands;  // vertices, build order
};
Presentation minimal_presentation(const Module& M);

int ext1_dim(const Module& M, const Module& N);
int ext2_dim(const Module& M, const Module& N);

// Ext^1(M, N) with coordinates: classes = Hom(Omega M, N) modulo maps that
// extend to P0. Supports picking explicit cocycles and realizing middles.
struct Ext1Space {
  Presentation pres;
  std::vector<ModuleMap> hom_omega;  // basis of Hom(Omega M, N)
  QuotientSpace classes;             // on coordinates w.r.t. hom_omega
  Module n;                          // N

  int dim() const { return classes.dim(); }
  ModuleMap cocycle(const Vec& cls) const;      // representative Omega M -> N
  Vec class_of(const ModuleMap& h) const;       // coordinates of [h]
};
Ext1Space ext1_space(const Module& M, const Module& N);

// Short exact sequence 0 -> N -> E -> M -> 0 realized from a cocycle class.
struct Extension {
  Module middle;
  ModuleMap incl;  // N -> E
  ModuleMap proj;  // E -> M
};
Extension realize_extension(const Ext1Space& es, const Vec& cls);

}  // namespace taucat
