// operations.hpp: constructors for the germ-building operations, plus the
// predicted-codimension calculators used for constructor-vs-direct checks.
//
// Unfolding-shape validation is syntactic (trailing parameter coordinates
// pass through unchanged and setting them to zero recovers the base germ)
// plus a stability check via ae_codim = 0.  Constructors never pick a
// stable unfolding automatically: the result can depend on that choice, so
// the unfolding is always an explicit argument.

#pragma once

#include "invariants.hpp"
#include "liftables.hpp"

namespace germcalc {

struct ShapeCheck {
  bool ok = false;
  std::string reason;
};

// F(x, l) = (f_l(x), l) with `params` trailing parameters and F|_{l=0} = f.
ShapeCheck check_unfolding_shape(const MultiGerm& F, const MultiGerm& f, int params);

// Throws PreconditionError unless the shape check passes and ae_codim(F)=0.
void require_stable_unfolding(const MultiGerm& F, const MultiGerm& f, int params,
                              const JetOptions& opts, const std::string& who);

// (x, z) -> (h_{g(z)}(x), z): every branch of h augmented by the same g.
// H must be a 1-parameter stable unfolding of h; g(0) = 0.
MultiGerm augment(const MultiGerm& h, const MultiGerm& H, const Poly& g,
                  const JetOptions& opts = {});

// True iff g is certified quasihomogeneous: a single monomial (up to a unit
// coefficient).  Multivariate weighted-homogeneity beyond monomials is not
// detected and reports false.
bool is_quasihomogeneous(const Poly& g);

struct AugmentPrediction {
  long lower_bound = 0;          // ae_codim(h) * tjurina(g)
  bool exact_if_quasihomogeneous = false;
  CodimReport h_codim;
  CodimReport g_tjurina;
};

AugmentPrediction predicted_codim_augment(const MultiGerm& h, const Poly& g,
                                          const JetOptions& opts = {});

// {F, fold} with the fold map (X, v) -> (X, sum v_j^2); p + k = n + 1.
MultiGerm monic_concat(const MultiGerm& f, const MultiGerm& F, int k,
                       const JetOptions& opts = {});

// {A_{F,phi}(f), g}: simultaneous augmentation and monic concatenation.
MultiGerm aug_concat(const MultiGerm& f, const MultiGerm& F, const Poly& phi,
                     const JetOptions& opts = {});

struct AugConcatPrediction {
  long lower_bound = 0;  // ae_codim(f) * (tjurina(phi) + 1)
  bool exact = false;    // phi quasihomogeneous and dZ spans of Af and F agree
  CodimReport f_codim;
  CodimReport phi_tjurina;
  QuotientReport dz_Af;
  QuotientReport dz_F;
};

AugConcatPrediction predicted_codim_aug_concat(const MultiGerm& f, const MultiGerm& F,
                                               const Poly& phi,
                                               const JetOptions& opts = {});

// {(X,y,u) -> (X, f_u(y), u), (x,Y,u) -> (g_u(x), Y, u)}.
MultiGerm binary_concat(const MultiGerm& f0, const MultiGerm& g0, const MultiGerm& F,
                        const MultiGerm& G, const JetOptions& opts = {});

// {F, Id_{K^{p-s}} x gbar} for an s-parameter stable unfolding F, s = p(gbar).
MultiGerm generalised_concat(const MultiGerm& F, const MultiGerm& gbar,
                             const JetOptions& opts = {});

// {F, (x, y, z^3 + y z)} for a 2-parameter stable unfolding F of an
// equidimensional f, n >= 3.
MultiGerm cuspidal_concat(const MultiGerm& f, const MultiGerm& F,
                          const JetOptions& opts = {});

// {F, (x, y, z^2), (x, y, z^2 + y)}.
MultiGerm double_fold_concat(const MultiGerm& f, const MultiGerm& F,
                             const JetOptions& opts = {});

// Miniversal unfolding (h + l*sigma, l) of a codimension-1 monogerm, sigma
// the residue monomial of N A_e(h); the result is verified stable.
MultiGerm standard_miniversal_unfolding(const MultiGerm& h, const JetOptions& opts = {});

}  // namespace germcalc
