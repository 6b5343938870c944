// liftables.hpp: liftable vector fields over (multi)germs.
//
// A target field eta is liftable over F when dF o xi = eta o F for some
// source field xi.  solve_lift finds a jet-level basis: unknowns are the
// coefficients of eta and of one xi per branch, the identity is imposed
// modulo the requested degree, and the system is solved two orders higher
// than requested so that only jets which persist under extension survive
// (spurious top-degree solutions are discarded by the truncation).

#pragma once

#include "germ.hpp"
#include "invariants.hpp"
#include "jetlin.hpp"

namespace germcalc {

struct LiftPair {
  std::vector<Poly> eta;               // p components over the target ring
  std::vector<std::vector<Poly>> xi;   // per branch: n components over the source ring
};

struct LiftBasis {
  MultiGerm germ;
  RingPtr target;       // X1..Xp
  int order = 0;        // coefficient degree bound of the stored jets
  int residual_order = 0;  // dF o xi - eta o F vanishes up to this degree
  std::vector<LiftPair> pairs;  // eta jets linearly independent
};

LiftBasis solve_lift(const MultiGerm& F, int order);

// Exact check of the lifting identity up to `order` for one pair.
bool lift_residual_zero(const MultiGerm& F, const LiftPair& pair, int order);

// True iff the jet of `eta` (components over the basis' target ring) lies in
// the K-span of the basis' eta jets, both truncated to the basis order.
bool lift_span_contains(const LiftBasis& basis, const std::vector<Poly>& eta);

// Basis of the space of 1-jets of liftable fields, stabilized over the solve
// order.  Rows are flattened (constant parts, then linear coefficients).
struct LinearParts {
  RingPtr target;
  QMat basis;  // each row: p constant coords followed by p*p linear coords
  bool certified = false;
  int certified_order = -1;

  int dim() const { return static_cast<int>(basis.size()); }
};

LinearParts lift_linear_parts(const MultiGerm& F, const JetOptions& opts = {});

QVec flatten_one_jet(const std::vector<Poly>& eta, const RingPtr& target);

// A stabilized scalar quotient together with its residue basis.
struct QuotientReport {
  CodimReport report;
  RingPtr ring;             // the reduced ring the quotient lives in
  std::vector<Mono> basis;  // residue monomials at the certified order
};

// dim O_{p-1} / < last components of Lift(Af) restricted to Z = 0 >, the
// quotient controlling simultaneous augmentation + concatenation.
QuotientReport dz_quotient(const MultiGerm& Af, const JetOptions& opts = {});

// dim O_{n-1} / { -z*eta_{n-1}(x,-3z^2,-2z^3) + eta_n(x,-3z^2,-2z^3) } with
// the module structure given by pullback along (x,z) -> (x,-3z^2,-2z^3);
// equals the codimension of the cuspidal concatenation {F,g} for stable F.
QuotientReport cuspidal_quotient(const MultiGerm& F, const JetOptions& opts = {});

// dim O_{n-1} / { -eta_{n-1}(x,y,y) + eta_n(x,y,y) } over Lift({F,g1}); the
// second summand in the double fold concatenation formula.
QuotientReport double_fold_quotient(const MultiGerm& FG1, const JetOptions& opts = {});

}  // namespace germcalc
