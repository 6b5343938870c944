#include "liftables.hpp"

#include <algorithm>
#include <map>

namespace germcalc {

namespace {

// Rebuild a polynomial from tag coordinates (one unknown per monomial).
Poly poly_from_tag(const SparseVec& tag, int offset, const MonoTable& tab,
                   const RingPtr& ring, int max_degree) {
  Poly p(ring);
  for (size_t i = 0; i < tag.size(); ++i) {
    const int32_t c = tag.col(i);
    if (c < offset || c >= offset + tab.size()) continue;
    const int idx = c - offset;
    if (tab.degree(idx) > max_degree) continue;
    p.add_term(tab.mono(idx), Rational(tag.coeff_big(i)));
  }
  return p;
}

}  // namespace

LiftBasis solve_lift(const MultiGerm& F, int order) {
  F.validate();
  const int r = F.r(), n = F.n(), p = F.p();
  const int solve_order = order + 2;

  LiftBasis out;
  out.germ = F;
  out.target = target_ring(F);
  out.order = order;
  out.residual_order = order;

  const MonoTable& target_tab = MonoTable::get(p, solve_order);
  const MonoTable& source_tab = MonoTable::get(n, solve_order);
  const int Mp = target_tab.size();
  const int Mn = source_tab.size();

  // Unknown layout: eta coefficients first, then xi per branch.
  auto eta_unknown = [&](int comp, int beta) { return comp * Mp + beta; };
  auto xi_unknown = [&](int b, int j, int alpha) {
    return p * Mp + (b * n + j) * Mn + alpha;
  };

  JetLayout L(r, p, n, solve_order);
  Echelon E(/*track_kernel=*/true);

  // Constraint per branch: dF_b o xi_b - eta o F_b = 0 modulo degree
  // solve_order.  Insert one column of the constraint matrix per unknown.
  for (int b = 0; b < r; ++b) {
    const MonoGerm& br = F.branches[b];
    std::vector<std::vector<Poly>> partials(n);
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < p; ++i) partials[j].push_back(br.comps[i].partial(j));
    for (int j = 0; j < n; ++j)
      for (int a = 0; a < Mn; ++a) {
        std::vector<std::pair<int32_t, Rational>> entries;
        for (int i = 0; i < p; ++i) {
          const Poly shifted = partials[j][i].shifted(source_tab.mono(a), solve_order);
          L.append_poly(b, i, shifted, entries);
        }
        E.insert(SparseVec::from_rationals(std::move(entries)),
                 SparseVec::unit(xi_unknown(b, j, a)));
      }
  }
  {
    std::vector<std::vector<Poly>> powers;
    for (const MonoGerm& br : F.branches) {
      std::vector<Poly> pw(Mp);
      pw[0] = Poly::constant(br.source, 1);
      for (int i = 1; i < Mp; ++i) {
        const Mono& beta = target_tab.mono(i);
        int m = 0;
        while (beta[m] == 0) ++m;
        Mono prev = beta;
        prev[m] -= 1;
        pw[i] = (pw[target_tab.index(prev)] * br.comps[m]).truncate(solve_order);
      }
      powers.push_back(std::move(pw));
    }
    for (int i = 0; i < p; ++i)
      for (int beta = 0; beta < Mp; ++beta) {
        std::vector<std::pair<int32_t, Rational>> entries;
        for (int b = 0; b < r; ++b)
          L.append_poly(b, i, Rational(-1) * powers[b][beta], entries);
        E.insert(SparseVec::from_rationals(std::move(entries)),
                 SparseVec::unit(eta_unknown(i, beta)));
      }
  }

  // Kernel vectors are the jet solutions at solve_order; truncating them to
  // `order` keeps them solutions and filters non-extending jets.  Keep one
  // pair per independent eta jet.
  JetLayout eta_layout(1, p, p, order);
  Echelon eta_span;
  for (const SparseVec& tag : E.kernel()) {
    LiftPair pair;
    pair.eta.reserve(p);
    for (int i = 0; i < p; ++i)
      pair.eta.push_back(poly_from_tag(tag, eta_unknown(i, 0), target_tab, out.target, order));
    bool eta_zero = true;
    for (const Poly& q : pair.eta)
      if (!q.is_zero()) eta_zero = false;
    if (eta_zero) continue;

    std::vector<std::pair<int32_t, Rational>> entries;
    for (int i = 0; i < p; ++i) eta_layout.append_poly(0, i, pair.eta[i], entries);
    if (!eta_span.insert(SparseVec::from_rationals(std::move(entries)))) continue;

    pair.xi.resize(r);
    for (int b = 0; b < r; ++b) {
      pair.xi[b].reserve(n);
      for (int j = 0; j < n; ++j)
        pair.xi[b].push_back(
            poly_from_tag(tag, xi_unknown(b, j, 0), source_tab, F.branches[b].source, order));
    }
    out.pairs.push_back(std::move(pair));
  }
  return out;
}

bool lift_residual_zero(const MultiGerm& F, const LiftPair& pair, int order) {
  for (int b = 0; b < F.r(); ++b) {
    const MonoGerm& br = F.branches[b];
    for (int i = 0; i < F.p(); ++i) {
      Poly lhs = Poly::zero(br.source);
      for (int j = 0; j < F.n(); ++j)
        lhs += br.comps[i].partial(j) * pair.xi[b][j];
      lhs -= pair.eta[i].compose(br.comps);
      if (!lhs.truncate(order).is_zero()) return false;
    }
  }
  return true;
}

bool lift_span_contains(const LiftBasis& basis, const std::vector<Poly>& eta) {
  const int p = basis.germ.p();
  JetLayout L(1, p, p, basis.order);
  Echelon E;
  for (const LiftPair& pr : basis.pairs) {
    std::vector<std::pair<int32_t, Rational>> entries;
    for (int i = 0; i < p; ++i) L.append_poly(0, i, pr.eta[i], entries);
    E.insert(SparseVec::from_rationals(std::move(entries)));
  }
  std::vector<std::pair<int32_t, Rational>> entries;
  for (int i = 0; i < p; ++i)
    L.append_poly(0, i, eta[i].truncate(basis.order), entries);
  return E.reduces_to_zero(SparseVec::from_rationals(std::move(entries)));
}

QVec flatten_one_jet(const std::vector<Poly>& eta, const RingPtr& target) {
  const int p = target->size();
  QVec v;
  v.reserve(p + p * p);
  for (int i = 0; i < p; ++i) v.push_back(eta[i].constant_term());
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j) {
      Mono m(p, 0);
      m[j] = 1;
      v.push_back(eta[i].coeff(m));
    }
  return v;
}

LinearParts lift_linear_parts(const MultiGerm& F, const JetOptions& opts) {
  LinearParts out;
  out.target = target_ring(F);
  QMat prev;
  int run = 0;
  for (int d = 2; d <= opts.max_order; ++d) {
    LiftBasis basis = solve_lift(F, d);
    QMat rows;
    for (const LiftPair& pr : basis.pairs) rows.push_back(flatten_one_jet(pr.eta, out.target));
    QMat span = span_basis(rows);
    if (d > 2 && span == prev) {
      ++run;
      if (run + 1 >= opts.window) {
        out.basis = span;
        out.certified = true;
        out.certified_order = d;
        return out;
      }
    } else {
      run = 0;
    }
    prev = std::move(span);
  }
  out.basis = prev;
  return out;
}

namespace {

// Shared shape of the three substituted quotients: at each jet order k the
// lift basis is recomputed at order k, every basis field is pushed through a
// substitution into a reduced ring, and the span of multiplier * image is
// quotiented out.
QuotientReport substituted_quotient(
    const MultiGerm& F, const JetOptions& opts, const RingPtr& reduced,
    const std::function<Poly(const LiftPair&, int order)>& image,
    const std::function<std::vector<Poly>(int order)>& multipliers) {
  QuotientReport out;
  out.ring = reduced;
  const int q = reduced->size();

  std::map<int, LiftBasis> lift_cache;
  auto lift_at = [&](int k) -> const LiftBasis& {
    auto it = lift_cache.find(k);
    if (it == lift_cache.end()) it = lift_cache.emplace(k, solve_lift(F, k)).first;
    return it->second;
  };

  auto build = [&](int k, Echelon& E) {
    const LiftBasis& basis = lift_at(k);
    const std::vector<Poly> mults = multipliers(k);
    JetLayout L(1, 1, q, k);
    for (const LiftPair& pr : basis.pairs) {
      const Poly s = image(pr, k);
      if (s.is_zero()) continue;
      for (const Poly& m : mults) {
        std::vector<std::pair<int32_t, Rational>> entries;
        L.append_poly(0, 0, (m * s).truncate(k), entries);
        E.insert(SparseVec::from_rationals(std::move(entries)));
      }
    }
    return L.dim();
  };

  auto dim_at = [&](int k) -> long {
    Echelon E;
    const long ambient = build(k, E);
    return ambient - E.rank();
  };
  out.report = stabilized_dim(dim_at, opts.window, opts.max_order);

  if (out.report.bounded()) {
    const int k = out.report.certified_order + opts.window - 1;
    Echelon E;
    build(k, E);
    std::vector<int32_t> pivots = E.pivot_cols_sorted();
    JetLayout L(1, 1, q, k);
    std::vector<bool> is_pivot(L.dim(), false);
    for (int32_t c : pivots) is_pivot[c] = true;
    for (int32_t c = 0; c < L.dim(); ++c)
      if (!is_pivot[c]) out.basis.push_back(L.table().mono(L.decode(c)[2]));
  }
  return out;
}

std::vector<Poly> all_monomial_multipliers(const RingPtr& ring, int order) {
  const MonoTable& tab = MonoTable::get(ring->size(), order);
  std::vector<Poly> out;
  out.reserve(tab.size());
  for (int i = 0; i < tab.size(); ++i)
    out.push_back(Poly::monomial(ring, tab.mono(i), 1));
  return out;
}

}  // namespace

QuotientReport dz_quotient(const MultiGerm& Af, const JetOptions& opts) {
  const int P = Af.p();
  if (P < 2) throw PreconditionError("dz_quotient: target dimension must be >= 2");
  RingPtr reduced = numbered_ring(P - 1, "X");

  // i(X) = (X, 0); take the last component of eta along i.
  std::vector<Poly> subst;
  for (int i = 0; i < P - 1; ++i) subst.push_back(Poly::variable(reduced, i));
  subst.push_back(Poly::zero(reduced));

  auto image = [subst, P](const LiftPair& pr, int order) {
    return pr.eta[P - 1].compose(subst).truncate(order);
  };
  auto mults = [reduced](int order) { return all_monomial_multipliers(reduced, order); };
  return substituted_quotient(Af, opts, reduced, image, mults);
}

QuotientReport cuspidal_quotient(const MultiGerm& F, const JetOptions& opts) {
  const int n = F.p();
  if (F.n() != n || n < 3)
    throw PreconditionError("cuspidal_quotient: expects an equidimensional germ, n >= 3");
  std::vector<std::string> vars;
  for (int i = 1; i <= n - 2; ++i) vars.push_back("x" + std::to_string(i));
  vars.push_back("z");
  RingPtr reduced = make_ring(vars);
  const Poly z = Poly::variable(reduced, n - 2);

  // phi(x, z) = (x, -3z^2, -2z^3)
  std::vector<Poly> subst;
  for (int i = 0; i < n - 2; ++i) subst.push_back(Poly::variable(reduced, i));
  subst.push_back(Rational(-3) * (z * z));
  subst.push_back(Rational(-2) * (z * z * z));

  auto image = [subst, z, n](const LiftPair& pr, int order) {
    Poly s = -(z * pr.eta[n - 2].compose(subst)) + pr.eta[n - 1].compose(subst);
    return s.truncate(order);
  };
  // The quotient is an O_{n-1}-module only through phi^*, so multipliers are
  // pullbacks of target monomials, not arbitrary monomials of the reduced
  // ring.
  auto mults = [subst, reduced, n](int order) {
    const MonoTable& target_tab = MonoTable::get(n, order);
    std::vector<Poly> out;
    for (int i = 0; i < target_tab.size(); ++i) {
      const Mono& g = target_tab.mono(i);
      int reduced_degree = 0;
      for (int v = 0; v < n - 2; ++v) reduced_degree += g[v];
      reduced_degree += 2 * g[n - 2] + 3 * g[n - 1];
      if (reduced_degree > order) continue;
      Poly m = Poly::constant(reduced, 1);
      for (int v = 0; v < n; ++v)
        for (int e = 0; e < g[v]; ++e) m = m * subst[v];
      out.push_back(std::move(m));
    }
    return out;
  };
  return substituted_quotient(F, opts, reduced, image, mults);
}

QuotientReport double_fold_quotient(const MultiGerm& FG1, const JetOptions& opts) {
  const int n = FG1.p();
  if (FG1.n() != n || n < 3)
    throw PreconditionError("double_fold_quotient: expects an equidimensional multigerm, n >= 3");
  std::vector<std::string> vars;
  for (int i = 1; i <= n - 2; ++i) vars.push_back("x" + std::to_string(i));
  vars.push_back("y");
  RingPtr reduced = make_ring(vars);
  const Poly y = Poly::variable(reduced, n - 2);

  // psi(x, y) = (x, y, y); psi^* is onto, so multipliers are all monomials.
  std::vector<Poly> subst;
  for (int i = 0; i < n - 2; ++i) subst.push_back(Poly::variable(reduced, i));
  subst.push_back(y);
  subst.push_back(y);

  auto image = [subst, n](const LiftPair& pr, int order) {
    Poly s = -pr.eta[n - 2].compose(subst) + pr.eta[n - 1].compose(subst);
    return s.truncate(order);
  };
  auto mults = [reduced](int order) { return all_monomial_multipliers(reduced, order); };
  return substituted_quotient(FG1, opts, reduced, image, mults);
}

}  // namespace germcalc
