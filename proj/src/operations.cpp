#include "operations.hpp"

#include <algorithm>
#include <set>

namespace germcalc {

namespace {

// Substitution vector embedding `ring` into `target` at variable offset 0,
// with the trailing `params` variables replaced by the given polynomials.
std::vector<Poly> embed_with_params(const RingPtr& ring, const RingPtr& target,
                                    const std::vector<Poly>& params) {
  std::vector<Poly> subst;
  const int base = ring->size() - static_cast<int>(params.size());
  for (int i = 0; i < base; ++i) subst.push_back(Poly::variable(target, i));
  for (const Poly& p : params) subst.push_back(p);
  return subst;
}

RingPtr concat_rings(const RingPtr& a, const RingPtr& b) {
  std::vector<std::string> vars = a->vars();
  for (const std::string& v : b->vars()) {
    if (a->index_of(v) >= 0)
      throw PreconditionError("variable name '" + v + "' used in both rings");
    vars.push_back(v);
  }
  return make_ring(std::move(vars));
}

}  // namespace

ShapeCheck check_unfolding_shape(const MultiGerm& F, const MultiGerm& f, int params) {
  ShapeCheck out;
  if (F.r() != f.r()) {
    out.reason = "branch counts differ";
    return out;
  }
  if (F.n() != f.n() + params || F.p() != f.p() + params) {
    out.reason = "dimensions do not match a " + std::to_string(params) +
                 "-parameter unfolding";
    return out;
  }
  const int n = f.n(), p = f.p();
  for (int b = 0; b < F.r(); ++b) {
    const MonoGerm& Fb = F.branches[b];
    for (int s = 0; s < params; ++s) {
      if (Fb.comps[p + s] != Poly::variable(Fb.source, n + s)) {
        out.reason = "trailing parameter coordinates do not pass through";
        return out;
      }
    }
    // Setting the parameters to zero must recover f.
    std::vector<Poly> zeros(params, Poly::zero(f.branches[b].source));
    std::vector<Poly> subst = embed_with_params(Fb.source, f.branches[b].source, zeros);
    for (int i = 0; i < p; ++i) {
      if (Fb.comps[i].compose(subst) != f.branches[b].comps[i]) {
        out.reason = "specializing the parameters to zero does not recover the base germ";
        return out;
      }
    }
  }
  out.ok = true;
  return out;
}

void require_stable_unfolding(const MultiGerm& F, const MultiGerm& f, int params,
                              const JetOptions& opts, const std::string& who) {
  ShapeCheck shape = check_unfolding_shape(F, f, params);
  if (!shape.ok) throw PreconditionError(who + ": " + shape.reason);
  CodimReport c = ae_codim(F, opts);
  if (!c.bounded() || *c.value != 0)
    throw PreconditionError(who + ": the unfolding is not stable (ae_codim " +
                            (c.bounded() ? std::to_string(*c.value) : "unbounded") + ")");
}

MultiGerm augment(const MultiGerm& h, const MultiGerm& H, const Poly& g,
                  const JetOptions& opts) {
  require_stable_unfolding(H, h, 1, opts, "augment");
  if (g.constant_term() != 0)
    throw PreconditionError("augment: g must vanish at the origin");
  const int nu = h.n(), pi = h.p(), q = g.nvars();
  RingPtr out_ring = concat_rings(h.branches.front().source, g.ring());

  // g re-expressed in the trailing q variables of the output ring.
  std::vector<Poly> g_vars;
  for (int i = 0; i < q; ++i) g_vars.push_back(Poly::variable(out_ring, nu + i));
  const Poly g_out = g.compose(g_vars);

  std::vector<MonoGerm> branches;
  for (const MonoGerm& Hb : H.branches) {
    std::vector<Poly> subst = embed_with_params(Hb.source, out_ring, {g_out});
    std::vector<Poly> comps;
    for (int i = 0; i < pi; ++i) comps.push_back(Hb.comps[i].compose(subst));
    for (int i = 0; i < q; ++i) comps.push_back(Poly::variable(out_ring, nu + i));
    branches.emplace_back(out_ring, std::move(comps));
  }
  return MultiGerm(std::move(branches));
}

bool is_quasihomogeneous(const Poly& g) {
  return g.terms().size() == 1 && g.degree() >= 1;
}

AugmentPrediction predicted_codim_augment(const MultiGerm& h, const Poly& g,
                                          const JetOptions& opts) {
  AugmentPrediction out;
  out.h_codim = ae_codim(h, opts);
  out.g_tjurina = tjurina(g, opts);
  if (!out.h_codim.bounded())
    throw PreconditionError("predicted_codim_augment: ae_codim(h) did not stabilize");
  if (!out.g_tjurina.bounded())
    throw PreconditionError("predicted_codim_augment: tjurina(g) is unbounded");
  out.lower_bound = *out.h_codim.value * *out.g_tjurina.value;
  out.exact_if_quasihomogeneous = is_quasihomogeneous(g);
  return out;
}

MultiGerm monic_concat(const MultiGerm& f, const MultiGerm& F, int k,
                       const JetOptions& opts) {
  const int n = f.n(), p = f.p();
  if (k < 0 || p + k != n + 1)
    throw PreconditionError("monic_concat: requires p + k = n + 1, k >= 0");
  require_stable_unfolding(F, f, 1, opts, "monic_concat");

  const RingPtr ring = F.branches.front().source;  // n+1 variables
  std::vector<Poly> comps;
  for (int i = 0; i < p; ++i) comps.push_back(Poly::variable(ring, i));
  Poly last = Poly::zero(ring);
  for (int j = 0; j < k; ++j) {
    Mono m(ring->size(), 0);
    m[p + j] = 2;
    last += Poly::monomial(ring, m, 1);
  }
  comps.push_back(std::move(last));

  std::vector<MonoGerm> branches = F.branches;
  branches.emplace_back(ring, std::move(comps));
  return MultiGerm(std::move(branches));
}

MultiGerm aug_concat(const MultiGerm& f, const MultiGerm& F, const Poly& phi,
                     const JetOptions& opts) {
  if (phi.nvars() != 1)
    throw PreconditionError("aug_concat: phi must be a one-variable function");
  const int n = f.n(), p = f.p();
  MultiGerm Af = augment(f, F, phi, opts);  // validates F as well

  const RingPtr ring = Af.branches.front().source;  // n+1 variables
  std::vector<Poly> comps;
  for (int i = 0; i < p; ++i) comps.push_back(Poly::variable(ring, i));
  Poly last = Poly::zero(ring);
  for (int j = p; j <= n; ++j) {
    Mono m(ring->size(), 0);
    m[j] = 2;
    last += Poly::monomial(ring, m, 1);
  }
  comps.push_back(std::move(last));

  std::vector<MonoGerm> branches = Af.branches;
  branches.emplace_back(ring, std::move(comps));
  return MultiGerm(std::move(branches));
}

AugConcatPrediction predicted_codim_aug_concat(const MultiGerm& f, const MultiGerm& F,
                                               const Poly& phi, const JetOptions& opts) {
  AugConcatPrediction out;
  out.f_codim = ae_codim(f, opts);
  out.phi_tjurina = tjurina(phi, opts);
  if (!out.f_codim.bounded() || !out.phi_tjurina.bounded())
    throw PreconditionError("predicted_codim_aug_concat: inputs did not stabilize");
  out.lower_bound = *out.f_codim.value * (*out.phi_tjurina.value + 1);

  MultiGerm Af = augment(f, F, phi, opts);
  out.dz_Af = dz_quotient(Af, opts);
  out.dz_F = dz_quotient(F, opts);
  out.exact = is_quasihomogeneous(phi) && out.dz_Af.report.bounded() &&
              out.dz_F.report.bounded() &&
              *out.dz_Af.report.value == *out.dz_F.report.value;
  return out;
}

MultiGerm binary_concat(const MultiGerm& f0, const MultiGerm& g0, const MultiGerm& F,
                        const MultiGerm& G, const JetOptions& opts) {
  require_stable_unfolding(F, f0, 1, opts, "binary_concat (F)");
  require_stable_unfolding(G, g0, 1, opts, "binary_concat (G)");
  const int m = f0.n(), a = f0.p();
  const int l = g0.n(), b = g0.p();
  if (b + m != l + a)
    throw PreconditionError("binary_concat: source dimensions b+m+1 and l+a+1 disagree");
  const int n = b + m + 1;

  RingPtr ring = numbered_ring(n);
  const Poly u = Poly::variable(ring, n - 1);

  std::vector<MonoGerm> branches;
  // (X, y, u) -> (X, f_u(y), u): X in K^b, y in K^m.
  for (const MonoGerm& Fb : F.branches) {
    std::vector<Poly> into;  // F's source (y_1..y_m, s) -> (vars b.., u)
    for (int i = 0; i < m; ++i) into.push_back(Poly::variable(ring, b + i));
    into.push_back(u);
    std::vector<Poly> comps;
    for (int i = 0; i < b; ++i) comps.push_back(Poly::variable(ring, i));
    for (int i = 0; i < a; ++i) comps.push_back(Fb.comps[i].compose(into));
    comps.push_back(u);
    branches.emplace_back(ring, std::move(comps));
  }
  // (x, Y, u) -> (g_u(x), Y, u): x in K^l, Y in K^a.
  for (const MonoGerm& Gb : G.branches) {
    std::vector<Poly> into;
    for (int i = 0; i < l; ++i) into.push_back(Poly::variable(ring, i));
    into.push_back(u);
    std::vector<Poly> comps;
    for (int i = 0; i < b; ++i) comps.push_back(Gb.comps[i].compose(into));
    for (int i = 0; i < a; ++i) comps.push_back(Poly::variable(ring, l + i));
    comps.push_back(u);
    branches.emplace_back(ring, std::move(comps));
  }
  return MultiGerm(std::move(branches));
}

MultiGerm generalised_concat(const MultiGerm& F, const MultiGerm& gbar,
                             const JetOptions& opts) {
  const int s = gbar.p();
  const int n = F.n(), p = F.p();
  if (s >= p) throw PreconditionError("generalised_concat: requires s < p");
  if (gbar.n() != n - p + s)
    throw PreconditionError("generalised_concat: gbar must have n-p+s source variables");
  // F must be an s-parameter stable unfolding in shape.
  for (const MonoGerm& Fb : F.branches)
    for (int j = 0; j < s; ++j)
      if (Fb.comps[p - s + j] != Poly::variable(Fb.source, n - s + j))
        throw PreconditionError(
            "generalised_concat: F is not an s-parameter unfolding in shape");
  {
    CodimReport cF = ae_codim(F, opts);
    if (!cF.bounded() || *cF.value != 0)
      throw PreconditionError("generalised_concat: F is not stable");
    CodimReport cg = ae_codim(gbar, opts);
    if (!cg.bounded() || *cg.value != 0)
      throw PreconditionError("generalised_concat: gbar is not stable");
  }

  const RingPtr ring = F.branches.front().source;
  std::vector<Poly> tail_vars;  // x_{p-s+1}..x_n feed gbar
  for (int i = p - s; i < n; ++i) tail_vars.push_back(Poly::variable(ring, i));

  std::vector<MonoGerm> branches = F.branches;
  for (const MonoGerm& gb : gbar.branches) {
    std::vector<Poly> comps;
    for (int i = 0; i < p - s; ++i) comps.push_back(Poly::variable(ring, i));
    for (int i = 0; i < s; ++i) comps.push_back(gb.comps[i].compose(tail_vars));
    branches.emplace_back(ring, std::move(comps));
  }
  return MultiGerm(std::move(branches));
}

namespace {

MultiGerm fold_pair_concat(const MultiGerm& f, const MultiGerm& F, const JetOptions& opts,
                           bool cuspidal, const std::string& who) {
  if (f.n() != f.p())
    throw PreconditionError(who + ": f must be equidimensional");
  const int n = f.n() + 2;
  if (n < 3) throw PreconditionError(who + ": requires n >= 3");
  require_stable_unfolding(F, f, 2, opts, who);

  const RingPtr ring = F.branches.front().source;  // n variables (x, y, z)
  const Poly y = Poly::variable(ring, n - 2);
  const Poly z = Poly::variable(ring, n - 1);

  std::vector<MonoGerm> branches = F.branches;
  if (cuspidal) {
    std::vector<Poly> comps;
    for (int i = 0; i < n - 1; ++i) comps.push_back(Poly::variable(ring, i));
    comps.push_back(z * z * z + y * z);
    branches.emplace_back(ring, std::move(comps));
  } else {
    for (int variant = 0; variant < 2; ++variant) {
      std::vector<Poly> comps;
      for (int i = 0; i < n - 1; ++i) comps.push_back(Poly::variable(ring, i));
      comps.push_back(variant == 0 ? z * z : z * z + y);
      branches.emplace_back(ring, std::move(comps));
    }
  }
  return MultiGerm(std::move(branches));
}

}  // namespace

MultiGerm cuspidal_concat(const MultiGerm& f, const MultiGerm& F, const JetOptions& opts) {
  return fold_pair_concat(f, F, opts, /*cuspidal=*/true, "cuspidal_concat");
}

MultiGerm double_fold_concat(const MultiGerm& f, const MultiGerm& F,
                             const JetOptions& opts) {
  return fold_pair_concat(f, F, opts, /*cuspidal=*/false, "double_fold_concat");
}

MultiGerm standard_miniversal_unfolding(const MultiGerm& h, const JetOptions& opts) {
  if (h.r() != 1)
    throw PreconditionError("standard_miniversal_unfolding: expects a monogerm");
  CodimReport c = ae_codim(h, opts);
  if (!c.bounded() || *c.value != 1)
    throw PreconditionError(
        "standard_miniversal_unfolding: only codimension-1 germs are handled");

  // Residue monomial of N A_e(h) at the certified order.
  const int k = c.certified_order + opts.window - 1;
  JetLayout L(1, h.p(), h.n(), k);
  Echelon E;
  insert_tf_rows(h, L, E);
  insert_wf_rows(h, L, E);
  std::vector<int32_t> pivots = E.pivot_cols_sorted();
  std::vector<bool> is_pivot(L.dim(), false);
  for (int32_t piv : pivots) is_pivot[piv] = true;
  int comp = -1;
  Mono sigma;
  for (int32_t col = 0; col < L.dim(); ++col) {
    if (!is_pivot[col]) {
      const auto d = L.decode(col);
      comp = d[1];
      sigma = L.table().mono(d[2]);
      break;
    }
  }
  if (comp < 0)
    throw PreconditionError("standard_miniversal_unfolding: no residue monomial found");

  const MonoGerm& hb = h.branches.front();
  std::vector<std::string> vars = hb.source->vars();
  std::string param = "l";
  while (std::find(vars.begin(), vars.end(), param) != vars.end()) param += "l";
  vars.push_back(param);
  RingPtr ring = make_ring(vars);

  std::vector<Poly> into;
  for (int i = 0; i < h.n(); ++i) into.push_back(Poly::variable(ring, i));
  std::vector<Poly> comps;
  for (int i = 0; i < h.p(); ++i) comps.push_back(hb.comps[i].compose(into));
  Mono unfold_mono(ring->size(), 0);
  for (int i = 0; i < h.n(); ++i) unfold_mono[i] = sigma[i];
  unfold_mono[h.n()] = 1;  // l * sigma
  comps[comp] += Poly::monomial(ring, unfold_mono, 1);
  comps.push_back(Poly::variable(ring, h.n()));

  MultiGerm H{MonoGerm(ring, std::move(comps))};
  CodimReport stable = ae_codim(H, opts);
  if (!stable.bounded() || *stable.value != 0)
    throw PreconditionError(
        "standard_miniversal_unfolding: constructed unfolding is not stable");
  return H;
}

}  // namespace germcalc
