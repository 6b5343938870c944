// catalog.hpp: the regression catalog of named germs with their published
// ae-codimensions, and the published liftable-field generator lists that the
// solver output is checked against (double-entry bookkeeping: the stored
// lists and the solved ones must agree or the tests fail).

#pragma once

#include "germ.hpp"
#include "linalg.hpp"

namespace germcalc {

std::vector<CatalogEntry> paper_catalog_entries();

// Published Lift generators (target components only), over the X1..Xp ring.
// Lift(A^l f) for A^l f = (x^3 + z^l x, z).
std::vector<std::vector<Poly>> published_lift_Alf(int l);
// Lift(F_l) for F_l = (x^3 + y^l x + z x, y, z).
std::vector<std::vector<Poly>> published_lift_Fl(int l);
// Lift((x^4 + y x^2 + y^2 x + z x, y, z)).
std::vector<std::vector<Poly>> published_lift_quartic_alt();
// Lift({F, g1}) for the quadruple fold point of the quintuple-point example.
std::vector<std::vector<Poly>> published_lift_quintuple_quad();
// Lift of the fold prism (x_1,...,x_{p-1}, x_p^2): unit fields plus X_p dX_p.
std::vector<std::vector<Poly>> published_lift_fold_prism(int p);

// Linear parts of Lift generators for the stable A_n germ (K^n -> K^n),
// flattened as 1-jets (constant coords then linear coords, row-major).
QMat published_linear_parts_An(int n);
// Linear parts of the lift generators of the (4 -> 5) stable unfolding of
// the primitive codimension-1 germ in dimensions (3, 4).
QMat published_linear_parts_liftprim_k3();
// The unfolding that list belongs to: (u,v1,v2,x) -> (u,v1,v2,x^3+ux,x^4+v1x+v2x^2).
MultiGerm liftprim_unfolding_k3();
// The primitive codimension-1 germ itself: (u,v,x) -> (u,v,x^3+ux,x^4+vx).
MultiGerm liftprim_germ_k3();
// Equidimensional primitive codimension-1 germ
// (x1^{n+2} + x2 x1 + ... + xn x1^{n-1}, x2, ..., xn).
MultiGerm primitive_equidimensional(int n);

}  // namespace germcalc
