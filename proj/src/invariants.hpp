// invariants.hpp: numerical invariants of polynomial multigerms.
//
// Everything is computed by truncated-jet linear algebra with a
// stabilization certificate (see jetlin.hpp).  The tangent-space generators
// used at jet order k:
//   - tf rows: x^a * df/dx_j per branch, |a| <= k,
//   - wf rows: f^b placed diagonally across branches, |b| <= k,
//   - pullback rows: x^a * f_m per branch and component.
// Soundness of the degree bound: every generator dropped by the bound lies
// in M^{k+1} theta(f).  For tf this holds because x^a itself has degree
// > k; for wf because every component of f vanishes at the origin, so f^b
// has order >= |b|.  The jet quotient at order k therefore equals
// theta(f) / (T + M^{k+1} theta(f)) exactly.

#pragma once

#include "germ.hpp"
#include "jetlin.hpp"
#include "linalg.hpp"

namespace germcalc {

struct JetOptions {
  int max_order = 14;
  int window = 3;
};

// Generator rows of T A_e f (and friends) at one jet order, inserted
// directly into an echelon.
void insert_tf_rows(const MultiGerm& f, const JetLayout& L, Echelon& E);
void insert_wf_rows(const MultiGerm& f, const JetLayout& L, Echelon& E);
void insert_pullback_rows(const MultiGerm& f, const JetLayout& L, Echelon& E);

// dim theta(f) / (tf(theta_n) + wf(theta_p)); per-branch tf, diagonal wf.
CodimReport ae_codim(const MultiGerm& f, const JetOptions& opts = {});

// dim theta(g) / (tg(theta_n) + g^*(M_p) theta(g)).
CodimReport ke_codim(const MultiGerm& g, const JetOptions& opts = {});

// m_0(f) = dim O_n / f^*(M_p).
CodimReport multiplicity(const MonoGerm& f, const JetOptions& opts = {});

// dim O_q / (<g> + Jacobian ideal of g); requires g(0) = 0.
CodimReport tjurina(const Poly& g, const JetOptions& opts = {});

// The analytic stratum of a stable germ: { eta(0) : wf(eta) in
// tf(theta_n) + f^* M_p theta(f) }, stabilized over jet order.  For a
// non-stable input the subspace is {0} and input_stable is false.
struct TauTilde {
  QMat basis;  // canonical (RREF) basis of a subspace of K^p
  bool input_stable = true;
  bool certified = false;
  int certified_order = -1;
  std::vector<std::pair<int, int>> history;  // (order, dim)

  int dim() const { return static_cast<int>(basis.size()); }
};

TauTilde tau_tilde(const MultiGerm& f, const JetOptions& opts = {});

// sum cod(E_i) - cod(E_1 cap ... cap E_r) for subspaces of K^p.
int almost_regular_order(const std::vector<QMat>& subspaces, int ambient_dim);

// true iff Im(df_0) + V = K^p.
bool transverse_to_subspace(const MonoGerm& f, const QMat& V);

}  // namespace germcalc
