#pragma once

// Subcategory calculus on a completed inventory: Fac, Ext-projectives,
// approximations, tau-rigid / support tau-tilting / tilting predicates,
// completions, and the torsion-class bijection, plus exhaustive verifiers
// for the structure theorems these implement.
//
// A Subcat is identified with the sorted list of inventory indices of its
// indecomposable members; the subcategory itself is the additive closure.

#include <string>
#include <vector>

#include "taucat/inventory.hpp"
#include "taucat/modcat.hpp"
#include "taucat/module.hpp"

namespace taucat {

using Subset = std::vector<int>;  // sorted, distinct inventory indices

bool subset_contains(const Subset& s, int i);
bool subset_contains_all(const Subset& outer, const Subset& inner);
Subset subset_union(const Subset& a, const Subset& b);

// Pairwise numeric data over the inventory, computed once after the
// inventory is built.  Everything downstream reads these tables; they are
// immutable after build, so predicate sweeps can run in parallel.
struct Tables {
  const Inventory* inv = nullptr;
  int n = 0;  // inventory size

  std::vector<std::vector<int>> hom;      // dim Hom(X_i, X_j)
  std::vector<std::vector<int>> ext1;     // dim Ext^1(X_i, X_j)
  std::vector<std::vector<int>> ext2;     // dim Ext^2(X_i, X_j)
  std::vector<std::vector<int>> hom_tau;  // dim Hom(X_i, tau X_j)
  // def_ok[i][j]: Hom(P0_i, X_j) -> Hom(P1_i, X_j) surjective, where
  // P1_i -> P0_i is the minimal presentation of X_i.
  std::vector<std::vector<char>> def_ok;
  // img[i][j][v]: basis of the subspace of (X_j)_v spanned by images of all
  // maps X_i -> X_j (trace of X_i in X_j at vertex v).
  std::vector<std::vector<std::vector<std::vector<Vec>>>> img;
  // pair_homs[i][j]: basis of Hom(X_i, X_j), reused by the approximation
  // machinery to avoid recomputing hom spaces per call.
  std::vector<std::vector<std::vector<ModuleMap>>> pair_homs;

  std::vector<Module> tau_of;  // tau X_i (zero module iff X_i projective)
  bool hereditary = false;     // all ext2 vanish

  const Module& mod(int i) const { return inv->modules[i]; }
};

Tables build_tables(const Inventory& inv, bool parallel = true);

// ---- subcategory operators ----

// Indecomposables of Fac(add S): X_j such that the trace of S in X_j is all
// of X_j at every vertex.
Subset fac(const Tables& t, const Subset& s);

// Members X of S with Ext^1(X, add S) = 0.
Subset ext_projectives(const Tables& t, const Subset& s);

// All inventory members Y with Ext^1(add S, Y) = 0.
Subset perp1(const Tables& t, const Subset& s);

// One summand of an approximation target.
struct ApproxSummand {
  int member = -1;  // inventory index
  ModuleMap map;    // the basis map kept for this copy
};

// Minimal left (or right) approximation of x by add S.
struct Approximation {
  bool left = true;
  Subset subcat;
  std::vector<ApproxSummand> summands;  // kept copies, in construction order
  Module target;                        // direct sum of kept copies
  ModuleMap map;                        // x -> target (left); target -> x (right)
  bool map_zero = false;
  bool mono = false;  // left: map injective
  bool epi = false;   // right: map surjective
  Subset coker_pieces;  // left only: indecomposables of coker(map)
  Module coker;         // left only
};

Approximation left_approximation(const Tables& t, const Module& x, const Subset& s);
Approximation right_approximation(const Tables& t, const Module& x, const Subset& s);
// Same, for x an inventory member (uses the cached pair hom bases).
Approximation left_approximation_idx(const Tables& t, int xi, const Subset& s);
Approximation right_approximation_idx(const Tables& t, int xi, const Subset& s);

// ---- predicates ----

bool is_tau_rigid_def(const Tables& t, const Subset& s);
bool is_tau_rigid_ext(const Tables& t, const Subset& s);

struct ProjWitness {
  std::string vertex;       // vertex label of the projective
  Approximation approx;     // minimal left approximation into S
  bool coker_in_s = false;
  bool map_nonzero = false;
};

struct SttReport {
  Subset s;
  bool tau_rigid = false;
  std::vector<ProjWitness> projs;
  bool support_tau_tilting = false;
  bool tau_tilting = false;  // additionally every approximation map nonzero
};

SttReport support_tau_tilting_report(const Tables& t, const Subset& s);
bool is_support_tau_tilting(const Tables& t, const Subset& s);
bool is_tau_tilting(const Tables& t, const Subset& s);

struct TiltWitness {
  std::string vertex;
  Approximation approx;
  bool mono = false;
  bool coker_in_s = false;
};

struct TiltReport {
  Subset s;
  bool partial_tilting = false;
  std::vector<TiltWitness> projs;
  bool tilting = false;
};

bool is_partial_tilting(const Tables& t, const Subset& s);
TiltReport tilting_report(const Tables& t, const Subset& s);
bool is_tilting(const Tables& t, const Subset& s);

// Def 4.6 filter: s is tau-rigid, not itself support tau-tilting, and every
// support tau-tilting subcategory containing it adds exactly one
// indecomposable.  stt_list must be the full enumeration.
bool is_almost_support_tau_tilting(const Tables& t, const Subset& s,
                                   const std::vector<Subset>& stt_list);

// ---- completions ----

struct Completion {
  std::string method;  // "fac-cokernel" | "tau-perp" | "tilting-perp"
  Subset input;
  Subset output;
  Subset intermediate;  // tau-perp / tilting-perp: the perpendicular category
  std::vector<ProjWitness> stt_witness;    // fac-cokernel, tau-perp
  std::vector<TiltWitness> tilt_witness;   // tilting-perp
  bool contains_input = false;
  bool verified = false;  // output passes the target predicate
};

// Thm 3.2: add(V + cokernels of the projective approximations); checked
// against the independent route ext_projectives(fac(V)).
Completion completion_fac(const Tables& t, const Subset& v);
// Prop 3.6: ext_projectives of the left perpendicular of tau(U).
Completion bongartz_tau_perp(const Tables& t, const Subset& u);
// Prop 4.5 route: ext_projectives(perp1(U)) for partial tilting U.
Completion tilting_completion(const Tables& t, const Subset& u);

// ---- theorem verifiers ----

struct CaseFailure {
  std::string what;
  Subset subset;
};

struct TheoremResult {
  std::string id;
  long long cases = 0;
  bool pass = false;
  bool applicable = true;
  std::string note;
  std::vector<CaseFailure> failures;  // first few only
};

TheoremResult verify_lemma_2_2(const Tables& t, bool parallel = true);
TheoremResult verify_thm_3_2(const Tables& t, bool parallel = true);
TheoremResult verify_cor_3_3(const Tables& t, bool parallel = true);
TheoremResult verify_thm_3_4(const Tables& t, bool parallel = true);
TheoremResult verify_prop_3_6(const Tables& t, bool parallel = true);

// Cor 3.7 for one tau-rigid U: for every indecomposable projective P, the
// minimal left approximation P -> Y0 into the Bongartz completion has
// cokernel in add U; on failure a bounded search over non-minimal
// approximations (multiplicity up to 3) runs before giving up.
struct Cor37Case {
  std::string vertex;
  bool minimal_ok = false;
  bool found_non_minimal = false;
  bool inconclusive = false;
};
struct Cor37Report {
  Subset u;
  Subset bongartz;
  std::vector<Cor37Case> projs;
  bool pass = false;          // every projective has a witness
  bool inconclusive = false;  // some search exhausted without witness
};
Cor37Report verify_cor_3_7_one(const Tables& t, const Subset& u);
TheoremResult verify_cor_3_7(const Tables& t, bool parallel = true);

TheoremResult verify_prop_4_4(const Tables& t, bool parallel = true);
TheoremResult verify_thm_4_7(const Tables& t, bool parallel = true);
TheoremResult verify_lemma_4_8(const Tables& t, bool parallel = true);

// ---- enumeration ----

std::vector<Subset> enumerate_tau_rigid(const Tables& t, bool parallel = true);
std::vector<Subset> enumerate_support_tau_tilting(const Tables& t, bool parallel = true);
std::vector<Subset> enumerate_tau_tilting(const Tables& t, bool parallel = true);
std::vector<Subset> enumerate_tilting(const Tables& t, bool parallel = true);
// Subsets S with fac(ext_projectives(S)) = S, i.e. candidate finitary
// torsion classes.
std::vector<Subset> enumerate_fac_fixed_points(const Tables& t, bool parallel = true);

struct BijectionReport {
  std::vector<Subset> stt;
  std::vector<Subset> images;  // fac of each stt, same order
  std::vector<Subset> fixed_points;
  bool injective = false;
  bool retraction_ok = false;     // ext_projectives(fac M) = M for each stt
  bool image_is_fixed = false;    // image set == fixed point set
  bool quotient_closed = false;   // fac(S) == S for each image
  bool extension_closed = false;  // realized extensions stay inside
  bool pass = false;
};

BijectionReport verify_bijection(const Tables& t, bool parallel = true);

}  // namespace taucat
