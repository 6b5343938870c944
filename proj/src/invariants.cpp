#include "invariants.hpp"

#include <algorithm>

namespace germcalc {

namespace {

// x^a * p placed in (block, comp), truncated to the layout order, appended
// straight to `entries`.
void append_shifted(const JetLayout& L, int block, int comp, const Poly& p,
                    const Mono& shift, int shift_deg,
                    std::vector<std::pair<int32_t, Rational>>& entries) {
  const MonoTable& tab = L.table();
  for (const auto& [m, c] : p.terms()) {
    if (mono_degree(m) + shift_deg > L.order()) continue;
    entries.emplace_back(L.col(block, comp, tab.index(mono_mul(m, shift))), c);
  }
}

// Truncated powers f^b for all target monomials b of degree <= order,
// computed by the recurrence f^b = f^{b'} * f_m.
std::vector<Poly> branch_powers(const MonoGerm& branch, const MonoTable& target_tab,
                                int order) {
  std::vector<Poly> powers(target_tab.size());
  powers[0] = Poly::constant(branch.source, 1);
  for (int i = 1; i < target_tab.size(); ++i) {
    const Mono& beta = target_tab.mono(i);
    int m = 0;
    while (beta[m] == 0) ++m;
    Mono prev = beta;
    prev[m] -= 1;
    powers[i] = (powers[target_tab.index(prev)] * branch.comps[m]).truncate(order);
  }
  return powers;
}

}  // namespace

void insert_tf_rows(const MultiGerm& f, const JetLayout& L, Echelon& E) {
  const MonoTable& tab = L.table();
  for (int b = 0; b < f.r(); ++b) {
    const MonoGerm& br = f.branches[b];
    for (int j = 0; j < f.n(); ++j) {
      std::vector<Poly> column;  // d f_i / d x_j
      column.reserve(f.p());
      for (int i = 0; i < f.p(); ++i) column.push_back(br.comps[i].partial(j));
      for (int a = 0; a < tab.size(); ++a) {
        std::vector<std::pair<int32_t, Rational>> entries;
        const int da = tab.degree(a);
        for (int i = 0; i < f.p(); ++i)
          append_shifted(L, b, i, column[i], tab.mono(a), da, entries);
        E.insert(SparseVec::from_rationals(std::move(entries)));
      }
    }
  }
}

void insert_wf_rows(const MultiGerm& f, const JetLayout& L, Echelon& E) {
  const MonoTable& target_tab = MonoTable::get(f.p(), L.order());
  std::vector<std::vector<Poly>> powers;
  powers.reserve(f.r());
  for (const MonoGerm& br : f.branches)
    powers.push_back(branch_powers(br, target_tab, L.order()));
  const Mono no_shift(f.n(), 0);
  for (int i = 0; i < f.p(); ++i) {
    for (int beta = 0; beta < target_tab.size(); ++beta) {
      std::vector<std::pair<int32_t, Rational>> entries;
      for (int b = 0; b < f.r(); ++b)
        append_shifted(L, b, i, powers[b][beta], no_shift, 0, entries);
      E.insert(SparseVec::from_rationals(std::move(entries)));
    }
  }
}

void insert_pullback_rows(const MultiGerm& f, const JetLayout& L, Echelon& E) {
  const MonoTable& tab = L.table();
  for (int b = 0; b < f.r(); ++b) {
    const MonoGerm& br = f.branches[b];
    for (int m = 0; m < f.p(); ++m) {
      for (int a = 0; a < tab.size(); ++a) {
        const int da = tab.degree(a);
        if (da >= L.order()) continue;  // f_m has order >= 1
        for (int i = 0; i < f.p(); ++i) {
          std::vector<std::pair<int32_t, Rational>> entries;
          append_shifted(L, b, i, br.comps[m], tab.mono(a), da, entries);
          E.insert(SparseVec::from_rationals(std::move(entries)));
        }
      }
    }
  }
}

CodimReport ae_codim(const MultiGerm& f, const JetOptions& opts) {
  f.validate();
  auto dim_at = [&](int k) -> long {
    JetLayout L(f.r(), f.p(), f.n(), k);
    Echelon E;
    insert_tf_rows(f, L, E);
    insert_wf_rows(f, L, E);
    return L.dim() - E.rank();
  };
  return stabilized_dim(dim_at, opts.window, opts.max_order);
}

CodimReport ke_codim(const MultiGerm& g, const JetOptions& opts) {
  g.validate();
  auto dim_at = [&](int k) -> long {
    JetLayout L(g.r(), g.p(), g.n(), k);
    Echelon E;
    insert_tf_rows(g, L, E);
    insert_pullback_rows(g, L, E);
    return L.dim() - E.rank();
  };
  return stabilized_dim(dim_at, opts.window, opts.max_order);
}

CodimReport multiplicity(const MonoGerm& f, const JetOptions& opts) {
  f.validate();
  auto dim_at = [&](int k) -> long {
    JetLayout L(1, 1, f.n(), k);
    const MonoTable& tab = L.table();
    Echelon E;
    for (int m = 0; m < f.p(); ++m)
      for (int a = 0; a < tab.size(); ++a) {
        if (tab.degree(a) >= k) continue;
        std::vector<std::pair<int32_t, Rational>> entries;
        append_shifted(L, 0, 0, f.comps[m], tab.mono(a), tab.degree(a), entries);
        E.insert(SparseVec::from_rationals(std::move(entries)));
      }
    return L.dim() - E.rank();
  };
  return stabilized_dim(dim_at, opts.window, opts.max_order);
}

CodimReport tjurina(const Poly& g, const JetOptions& opts) {
  if (g.constant_term() != 0)
    throw PreconditionError("tjurina: g must vanish at the origin");
  const int q = g.nvars();
  auto dim_at = [&](int k) -> long {
    JetLayout L(1, 1, q, k);
    const MonoTable& tab = L.table();
    Echelon E;
    std::vector<Poly> gens;
    gens.push_back(g);
    for (int i = 0; i < q; ++i) gens.push_back(g.partial(i));
    for (const Poly& gen : gens)
      for (int a = 0; a < tab.size(); ++a) {
        std::vector<std::pair<int32_t, Rational>> entries;
        append_shifted(L, 0, 0, gen, tab.mono(a), tab.degree(a), entries);
        E.insert(SparseVec::from_rationals(std::move(entries)));
      }
    return L.dim() - E.rank();
  };
  return stabilized_dim(dim_at, opts.window, opts.max_order);
}

TauTilde tau_tilde(const MultiGerm& f, const JetOptions& opts) {
  TauTilde out;
  CodimReport stability = ae_codim(f, opts);
  if (!stability.bounded() || *stability.value != 0) {
    // The analytic stratum of a non-stable germ is {0}.
    out.input_stable = false;
    out.certified = stability.bounded();
    return out;
  }

  const int p = f.p();
  QMat prev;
  int run = 0;
  for (int k = 1; k <= opts.max_order; ++k) {
    JetLayout L(f.r(), f.p(), f.n(), k);
    Echelon E(/*track_kernel=*/true);
    insert_tf_rows(f, L, E);
    insert_pullback_rows(f, L, E);

    // One eta-jet basis element per (component, target monomial).
    const MonoTable& target_tab = MonoTable::get(p, k);
    std::vector<std::vector<Poly>> powers;
    for (const MonoGerm& br : f.branches)
      powers.push_back(branch_powers(br, target_tab, k));
    const Mono no_shift(f.n(), 0);
    for (int i = 0; i < p; ++i)
      for (int beta = 0; beta < target_tab.size(); ++beta) {
        std::vector<std::pair<int32_t, Rational>> entries;
        for (int b = 0; b < f.r(); ++b)
          append_shifted(L, b, i, powers[b][beta], no_shift, 0, entries);
        E.insert(SparseVec::from_rationals(std::move(entries)),
                 SparseVec::unit(i * target_tab.size() + beta));
      }

    QMat projected;
    for (const SparseVec& tag : E.kernel()) {
      QVec v(p, Rational(0));
      for (int i = 0; i < p; ++i) {
        // tag coordinate of the constant monomial of component i
        v[i] = tag.coeff_at(i * target_tab.size() + 0);
      }
      projected.push_back(std::move(v));
    }
    QMat basis = span_basis(projected);
    out.history.emplace_back(k, static_cast<int>(basis.size()));
    if (k > 1 && basis == prev) {
      ++run;
      if (run + 1 >= opts.window) {
        out.basis = basis;
        out.certified = true;
        out.certified_order = k - opts.window + 1;
        return out;
      }
    } else {
      run = 0;
    }
    prev = std::move(basis);
  }
  out.basis = prev;
  out.certified = false;
  return out;
}

int almost_regular_order(const std::vector<QMat>& subspaces, int ambient_dim) {
  if (subspaces.empty())
    throw PreconditionError("almost_regular_order: empty subspace list");
  int sum_cod = 0;
  QMat inter;
  bool first = true;
  for (const QMat& E : subspaces) {
    sum_cod += ambient_dim - rank_q(E);
    if (first) {
      inter = span_basis(E);
      first = false;
    } else {
      inter = subspace_intersection(inter, E, ambient_dim);
    }
  }
  const int cod_inter = ambient_dim - static_cast<int>(inter.size());
  return sum_cod - cod_inter;
}

bool transverse_to_subspace(const MonoGerm& f, const QMat& V) {
  QMat rows = V;
  for (const auto& col : f.jacobian_at_origin()) rows.push_back(col);
  if (rows.empty()) return f.p() == 0;
  for (auto& r : rows) r.resize(f.p(), Rational(0));
  return rank_q(rows) == f.p();
}

}  // namespace germcalc
