#include "catalog.hpp"

#include "parse.hpp"

namespace germcalc {

namespace {

CatalogEntry entry(std::string name, const std::string& germ_text,
                   std::optional<int> expected, std::string source,
                   std::vector<std::string> tags) {
  CatalogEntry e;
  e.name = std::move(name);
  e.germ = parse_germ_string(germ_text);
  e.expected_codim = expected;
  e.source = std::move(source);
  e.tags = std::move(tags);
  return e;
}

std::string xyz3(const std::string& last) {
  return "source_vars = [x, y, z]\ntarget_dim = 3\nbranch = ( x, y, " + last + " )\n";
}

}  // namespace

std::vector<CatalogEntry> paper_catalog_entries() {
  std::vector<CatalogEntry> out;

  // Simple corank 1 monogerms from K^3 to K^3 (classification table).
  out.push_back(entry("A1", xyz3("z^2"), 0, "table, A_1", {"table6", "stable"}));
  out.push_back(entry("3_{mu=1}", xyz3("z^3 + (x^2 + y^2)*z"), 1,
                      "table, 3_{mu(P)} with P = x^2+y^2", {"table6"}));
  out.push_back(entry("3_{mu=2}", xyz3("z^3 + (x^2 + y^3)*z"), 2,
                      "table, 3_{mu(P)} with P = x^2+y^3", {"table6"}));
  out.push_back(entry("4_1^1", xyz3("z^4 + x*z + y*z^2"), 0, "table, 4_1^k at k=1",
                      {"table6", "stable"}));
  out.push_back(entry("4_1^2", xyz3("z^4 + x*z + y^2*z^2"), 1, "table, 4_1^k at k=2",
                      {"table6"}));
  out.push_back(entry("4_1^3", xyz3("z^4 + x*z + y^3*z^2"), 2, "table, 4_1^k at k=3",
                      {"table6"}));
  out.push_back(entry("4_2^2", xyz3("z^4 + (y^2 + x^2)*z + x*z^2"), 2,
                      "table, 4_2^k at k=2", {"table6"}));
  out.push_back(entry("4_2^3", xyz3("z^4 + (y^2 + x^3)*z + x*z^2"), 3,
                      "table, 4_2^k at k=3", {"table6"}));
  out.push_back(entry("5_1", xyz3("z^5 + x*z + y*z^2"), 1, "table, 5_1", {"table6"}));
  out.push_back(entry("5_2", xyz3("z^5 + x*z + y^2*z^2 + y*z^3"), 2, "table, 5_2",
                      {"table6"}));
  out.push_back(entry("6_1", xyz3("z^6 + y*z^2 + x*z"), 3, "table, 6_1", {"table6"}));

  // Augmentations A^l f of f = x^3 and the bigerms {A^l f, fold}.
  for (int l = 2; l <= 4; ++l)
    out.push_back(entry("A^" + std::to_string(l) + "f",
                        "source_vars = [x, z]\ntarget_dim = 2\nbranch = ( x^3 + z^" +
                            std::to_string(l) + "*x, z )\n",
                        l - 1, "augmentation of x^3 by z^" + std::to_string(l),
                        {"aug"}));
  for (int l = 1; l <= 3; ++l)
    out.push_back(entry(
        "{A^" + std::to_string(l) + "f,g}",
        "source_vars = [x, z]\ntarget_dim = 2\nbranch = ( x^3 + z^" + std::to_string(l) +
            "*x, z )\nbranch = ( x, z^2 )\n",
        l, "augmentation + concatenation bigerm", {"augconc"}));

  // The family F_l, its augmentations A^m F_l and the bigerms {A^m F_l, g}.
  out.push_back(entry("F_2",
                      "source_vars = [x, y, z]\ntarget_dim = 3\n"
                      "branch = ( x^3 + y^2*x + z*x, y, z )\n",
                      0, "the stable unfolding F_l at l=2", {"stable", "ex45ii"}));
  out.push_back(entry("A^2F_2",
                      "source_vars = [x, y, z]\ntarget_dim = 3\n"
                      "branch = ( x^3 + y^2*x + z^2*x, y, z )\n",
                      1, "A^m F_l at (l,m)=(2,2): (l-1)(m-1)", {"aug", "ex45ii"}));
  out.push_back(entry("A^2F_3",
                      "source_vars = [x, y, z]\ntarget_dim = 3\n"
                      "branch = ( x^3 + y^3*x + z^2*x, y, z )\n",
                      2, "A^m F_l at (l,m)=(3,2): (l-1)(m-1)", {"aug", "ex45ii"}));
  out.push_back(entry("{A^2F_2,g}",
                      "source_vars = [x, y, z]\ntarget_dim = 3\n"
                      "branch = ( x^3 + y^2*x + z^2*x, y, z )\nbranch = ( x, y, z^2 )\n",
                      2, "bigerm at (l,m)=(2,2): (l-1)m", {"augconc", "ex45ii"}));
  out.push_back(entry("{A^2F_3,g}",
                      "source_vars = [x, y, z]\ntarget_dim = 3\n"
                      "branch = ( x^3 + y^3*x + z^2*x, y, z )\nbranch = ( x, y, z^2 )\n",
                      4, "bigerm at (l,m)=(3,2): (l-1)m", {"augconc", "ex45ii"}));

  // The quartic augmentation and its concatenation bigerm.
  out.push_back(entry("Af-quartic",
                      "source_vars = [x, y, z]\ntarget_dim = 3\n"
                      "branch = ( x^4 + y*x^2 + y^2*x + z^2*x, y, z )\n",
                      2, "augmentation of (x^4+yx^2+y^2x, y) by z^2",
                      {"aug", "ex45iii"}));
  out.push_back(entry("{Af-quartic,g}",
                      "source_vars = [x, y, z]\ntarget_dim = 3\n"
                      "branch = ( x^4 + y*x^2 + y^2*x + z^2*x, y, z )\n"
                      "branch = ( x, y, z^2 )\n",
                      4, "bigerm: 2 + 2", {"augconc", "ex45iii"}));

  // Cuspidal concatenations.
  out.push_back(entry("A2A3",
                      "source_vars = [x, y, z]\ntarget_dim = 3\n"
                      "branch = ( x^4 + y*x + z*x^2, y, z )\n"
                      "branch = ( x, y, z^3 + y*z )\n",
                      3, "cuspidal concatenation of x^4 (swallowtail unfolding)",
                      {"cuspidal", "prop410"}));
  out.push_back(entry("cusp-alt-quartic",
                      "source_vars = [x, y, z]\ntarget_dim = 3\n"
                      "branch = ( x^4 + y*x^2 + y^2*x + z*x, y, z )\n"
                      "branch = ( x, y, z^3 + y*z )\n",
                      4, "cuspidal concatenation, alternate unfolding of x^4",
                      {"cuspidal"}));
  out.push_back(entry("A2^2",
                      "source_vars = [x, y, z]\ntarget_dim = 3\n"
                      "branch = ( x^3 + y*x + z*x, y, z )\n"
                      "branch = ( x, y, z^3 + y*z )\n",
                      1, "cuspidal concatenation of x^3 at l=1 (binary)",
                      {"cuspidal", "ex411ii"}));
  for (int l = 2; l <= 3; ++l)
    out.push_back(entry("T22^1 (l=" + std::to_string(l) + ")",
                        "source_vars = [x, y, z]\ntarget_dim = 3\n"
                        "branch = ( x^3 + y^" + std::to_string(l) +
                            "*x + z*x, y, z )\nbranch = ( x, y, z^3 + y*z )\n",
                        2, "cuspidal concatenation of x^3 at l>=2",
                        {"cuspidal", "ex411ii", "codim2"}));
  out.push_back(entry("cusp-F1-bigerm-pair",
                      "source_vars = [x, y, z]\ntarget_dim = 3\n"
                      "branch = ( x^2 + y + z, y, z )\n"
                      "branch = ( x^3 + x*y, y, z )\n"
                      "branch = ( x, y, z^3 + y*z )\n",
                      3, "cuspidal concatenation of {x^2, x^3}, first unfolding",
                      {"cuspidal", "ex411iii"}));
  out.push_back(entry("cusp-F2-nonfd",
                      "source_vars = [x, y, z]\ntarget_dim = 3\n"
                      "branch = ( x^2, y, z )\n"
                      "branch = ( x^3 + x*y + z, y, z )\n"
                      "branch = ( x, y, z^3 + y*z )\n",
                      std::nullopt, "cuspidal concatenation of {x^2, x^3}, second "
                      "unfolding: not finitely determined",
                      {"cuspidal", "ex411iii", "nonfd"}));
  out.push_back(entry("cuspidal-A4",
                      "source_vars = [x1, x2, x3, x4]\ntarget_dim = 4\n"
                      "branch = ( x1^5 + x2*x1 + x3*x1^2 + x4*x1^3, x2, x3, x4 )\n"
                      "branch = ( x1, x2, x3, x4^3 + x3*x4 )\n",
                      4, "cuspidal concatenation of the A_4 base, n=4",
                      {"cuspidal", "prop410"}));

  // Double fold concatenations.
  out.push_back(entry("quadruple-fold",
                      "source_vars = [x, y, z]\ntarget_dim = 3\n"
                      "branch = ( x^2 + y + z, y, z )\n"
                      "branch = ( x^2, y, z )\n"
                      "branch = ( x^2 - y, y, z )\n"
                      "branch = ( x, y, z^2 )\n",
                      1, "{F, g_1} for the quintuple point", {"doublefold"}));
  out.push_back(entry("quintuple-point",
                      "source_vars = [x, y, z]\ntarget_dim = 3\n"
                      "branch = ( x^2 + y + z, y, z )\n"
                      "branch = ( x^2, y, z )\n"
                      "branch = ( x^2 - y, y, z )\n"
                      "branch = ( x, y, z^2 )\n"
                      "branch = ( x, y, z^2 + y )\n",
                      4, "the quintuple point: 1 + 3", {"doublefold"}));

  // Codimension 2 normal forms in low dimensions.
  out.push_back(entry("morse+A2 (p=1)",
                      "source_vars = [x]\ntarget_dim = 1\n"
                      "branch = ( x^2 )\nbranch = ( x^3 )\n",
                      2, "a Morse function with an A_2 singularity", {"remark512"}));
  out.push_back(entry("cusp-curve+line",
                      "source_vars = [x]\ntarget_dim = 2\n"
                      "branch = ( x^2, x^3 )\nbranch = ( 0, x )\n",
                      2, "(n,p) = (1,2) bigerm", {"remark512", "codim2"}));
  out.push_back(entry("equidim n=2",
                      "source_vars = [x, y]\ntarget_dim = 2\n"
                      "branch = ( x^4 + y*x, y )\nbranch = ( x, y^2 + x )\n",
                      2, "primitive monogerm with a fold, n=2", {"remark512", "codim2"}));
  out.push_back(entry("equidim n=3",
                      "source_vars = [x, y, z]\ntarget_dim = 3\n"
                      "branch = ( x^5 + y*x + z*x^2, y, z )\nbranch = ( x, y, z^2 + y )\n",
                      3, "primitive monogerm with a fold, n=3", {"remark512"}));
  out.push_back(entry("bigerm (3,4)",
                      "source_vars = [u, v, x]\ntarget_dim = 4\n"
                      "branch = ( u, v, x^3 + u*x, x^4 + v*x )\n"
                      "branch = ( u, v, u, x )\n",
                      2, "(n,p) = (3,4) primitive monogerm with an immersion",
                      {"remark512", "codim2"}));

  // The non-transverse normal forms for p = n+1, n even.
  out.push_back(entry("nontrans n=2",
                      "source_vars = [x, y]\ntarget_dim = 3\n"
                      "branch = ( x, y^2, x*y )\nbranch = ( x, x^2, y )\n",
                      2, "cross-cap with a tangent immersion", {"nadatrans", "codim2"}));
  out.push_back(entry("nontrans n=4",
                      "source_vars = [u1, v1, v2, y]\ntarget_dim = 5\n"
                      "branch = ( u1, v1, v2, y^3 + u1*y, v1*y + v2*y^2 )\n"
                      "branch = ( u1, v1, v2, u1^2 + v2, y )\n",
                      2, "the (4,5) non-transverse normal form", {"nadatrans", "codim2"}));

  // Stable sanity entries and small derived ones.
  out.push_back(entry("cross-cap",
                      "source_vars = [x, y]\ntarget_dim = 3\n"
                      "branch = ( x, y^2, x*y )\n",
                      0, "the stable cross-cap", {"stable"}));
  out.push_back(entry("fold",
                      "source_vars = [x, z]\ntarget_dim = 2\nbranch = ( x, z^2 )\n", 0,
                      "fold prism", {"stable"}));
  out.push_back(entry("cusp",
                      "source_vars = [x, z]\ntarget_dim = 2\nbranch = ( x^3 + z*x, z )\n",
                      0, "plane cusp", {"stable"}));
  out.push_back(entry("transversal-folds",
                      "source_vars = [x, z]\ntarget_dim = 2\n"
                      "branch = ( x, z^2 )\nbranch = ( z^2, x )\n",
                      0, "two transversal folds", {"stable"}));
  out.push_back(entry("cusp-curve",
                      "source_vars = [x]\ntarget_dim = 2\nbranch = ( x^2, x^3 )\n", 1,
                      "the plane cusp curve", {"extra"}));
  out.push_back(entry("tangent-folds",
                      "source_vars = [x, z]\ntarget_dim = 2\n"
                      "branch = ( x, z^2 )\nbranch = ( x, z^2 + x^2 )\n",
                      1, "nondegenerate fold tangency", {"extra"}));
  out.push_back(entry("deg-tangent-folds",
                      "source_vars = [x, z]\ntarget_dim = 2\n"
                      "branch = ( x, z^2 )\nbranch = ( x, z^2 + x^3 )\n",
                      2, "degenerate fold tangency", {"extra", "codim2"}));
  out.push_back(entry("three-planes-line",
                      "source_vars = [x, y, z]\ntarget_dim = 3\n"
                      "branch = ( z^2, x, y )\nbranch = ( x, z^2, y )\n"
                      "branch = ( x, z^2 - x, y )\n",
                      1, "three fold planes through a common line", {"extra"}));
  out.push_back(entry("quintuple-generic",
                      "source_vars = [x, y, z]\ntarget_dim = 3\n"
                      "branch = ( x^2 + y + z, y, z )\n"
                      "branch = ( x^2 - y + z, y, z )\n"
                      "branch = ( x^2 + 2*y - z, y, z )\n"
                      "branch = ( x, y, z^2 )\n"
                      "branch = ( x, y, z^2 + y )\n",
                      2, "five fold planes in general position", {"extra", "codim2"}));

  return out;
}

std::vector<CatalogEntry> paper_catalog() { return paper_catalog_entries(); }

namespace {

std::vector<Poly> parse_fields(const RingPtr& ring, const std::vector<std::string>& comps) {
  std::vector<Poly> out;
  for (const std::string& c : comps) out.push_back(parse_poly(c, ring));
  return out;
}

}  // namespace

std::vector<std::vector<Poly>> published_lift_Alf(int l) {
  RingPtr R = numbered_ring(2, "X");
  return {
      parse_fields(R, {std::to_string(3 * l) + "*X1", "2*X2"}),
      parse_fields(R, {"-" + std::to_string(2 * l) + "*X2^" + std::to_string(3 * l - 1),
                       "9*X1"}),
  };
}

std::vector<std::vector<Poly>> published_lift_Fl(int l) {
  RingPtr R = numbered_ring(3, "X");
  return {
      parse_fields(R, {std::to_string(3 * l) + "*X1", "2*X2",
                       std::to_string(2 * l) + "*X3"}),
      parse_fields(R, {"0", "1", std::to_string(l) + "*X2^" + std::to_string(l - 1)}),
      parse_fields(R, {"2*(X3 + X2^" + std::to_string(l) + ")^2", "0", "-9*X1"}),
  };
}

std::vector<std::vector<Poly>> published_lift_quartic_alt() {
  RingPtr R = numbered_ring(3, "X");
  return {
      parse_fields(R, {"4*X1", "2*X2", "X2^2 - 3*X3"}),
      parse_fields(R, {"X2^3 + X3*X2", "-6*X2^2 - 6*X3",
                       "8*X1 + 2*X2^2 + 12*X2^3 + 12*X2*X3"}),
      parse_fields(R, {"-16*X1*X2 - 9*X3^2 - 18*X2^2*X3 - 9*X2^4", "48*X1 + 4*X2^2",
                       "-96*X1*X2 + 12*X2*X3 + 4*X2^3"}),
  };
}

std::vector<std::vector<Poly>> published_lift_quintuple_quad() {
  RingPtr R = numbered_ring(3, "X");
  return {
      parse_fields(R, {"X1", "X2", "X3"}),
      parse_fields(R, {"2*X1*X2 + X1*X3", "3*X1^2 - X2^2 - 2*X1*X3 - X2*X3", "0"}),
      parse_fields(R, {"2*X1^2 - 3*X1*X3", "2*X1*X2 + 4*X1*X3 + X2*X3",
                       "X3^2 - X1*X3"}),
      parse_fields(R, {"2*X1*X2 + X1*X3", "2*X2^2 + 4*X1*X3 + 5*X2*X3",
                       "-3*X3^2 - 6*X1*X3"}),
  };
}

std::vector<std::vector<Poly>> published_lift_fold_prism(int p) {
  RingPtr R = numbered_ring(p, "X");
  std::vector<std::vector<Poly>> out;
  for (int i = 0; i < p - 1; ++i) {
    std::vector<Poly> eta(p, Poly::zero(R));
    eta[i] = Poly::constant(R, 1);
    out.push_back(std::move(eta));
  }
  std::vector<Poly> last(p, Poly::zero(R));
  last[p - 1] = Poly::variable(R, p - 1);
  out.push_back(std::move(last));
  return out;
}

QMat published_linear_parts_An(int n) {
  // Fields indexed by a shift j = 0..n-1: component (i+j) of field j equals
  // (n+2-i) * C_i, weights taken from the quasihomogeneous grading.
  QMat rows;
  for (int j = 0; j < n; ++j) {
    QVec row(n + n * n, Rational(0));
    for (int i = 1; i + j <= n; ++i) {
      const int comp = i + j - 1;  // 0-based target component
      const int var = i - 1;
      row[n + comp * n + var] = n + 2 - i;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

MultiGerm liftprim_unfolding_k3() {
  return parse_germ_string(
      "source_vars = [u, v1, v2, x]\ntarget_dim = 5\n"
      "branch = ( u, v1, v2, x^3 + u*x, x^4 + v1*x + v2*x^2 )\n");
}

MultiGerm liftprim_germ_k3() {
  return parse_germ_string(
      "source_vars = [u, v, x]\ntarget_dim = 4\n"
      "branch = ( u, v, x^3 + u*x, x^4 + v*x )\n");
}

QMat published_linear_parts_liftprim_k3() {
  // Target coordinates (U1, V1, V2, W1, W2) = (X1..X5); k = 3.
  RingPtr R = numbered_ring(5, "X");
  auto F = [&](const std::vector<std::string>& comps) {
    return flatten_one_jet(parse_fields(R, comps), R);
  };
  QMat rows;
  rows.push_back(F({"2*X1", "3*X2", "2*X3", "3*X4", "4*X5"}));
  rows.push_back(F({"X2", "-4/3*X5", "X2", "X5", "0"}));
  rows.push_back(F({"0", "X2 + X4", "X3 - X1", "0", "0"}));
  rows.push_back(F({"X2 + X4", "0", "0", "X5", "0"}));
  rows.push_back(F({"X5", "0", "0", "0", "0"}));
  rows.push_back(F({"0", "0", "X5", "0", "0"}));
  rows.push_back(F({"0", "X5", "-X2 - X4", "0", "0"}));
  return rows;
}

MultiGerm primitive_equidimensional(int n) {
  // (x1^{n+2} + x2 x1 + ... + xn x1^{n-1}, x2, ..., xn)
  RingPtr ring = numbered_ring(n);
  Mono lead(n, 0);
  lead[0] = n + 2;
  Poly first = Poly::monomial(ring, lead, 1);
  for (int i = 2; i <= n; ++i) {
    Mono mi(n, 0);
    mi[i - 1] = 1;
    mi[0] = i - 1;
    first += Poly::monomial(ring, mi, 1);
  }
  std::vector<Poly> comps;
  comps.push_back(first);
  for (int i = 2; i <= n; ++i) comps.push_back(Poly::variable(ring, i - 1));
  return MultiGerm(MonoGerm(ring, std::move(comps)));
}

}  // namespace germcalc
