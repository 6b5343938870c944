#include "germ.hpp"

#include <algorithm>

namespace germcalc {

MonoGerm::MonoGerm(RingPtr source_in, std::vector<Poly> comps_in)
    : source(std::move(source_in)), comps(std::move(comps_in)) {
  validate();
}

void MonoGerm::validate() const {
  if (!source) throw PreconditionError("germ without a source ring");
  if (comps.empty()) throw PreconditionError("germ with no components");
  for (const Poly& c : comps) {
    if (!c.ring() || *c.ring() != *source)
      throw RingMismatchError("germ component not in the source ring");
    if (c.constant_term() != 0)
      throw PreconditionError("germ component does not vanish at the origin");
  }
}

std::vector<std::vector<Rational>> MonoGerm::jacobian_at_origin() const {
  std::vector<std::vector<Rational>> cols;
  for (int j = 0; j < n(); ++j) {
    std::vector<Rational> col;
    col.reserve(p());
    for (int i = 0; i < p(); ++i)
      col.push_back(comps[i].partial(j).constant_term());
    cols.push_back(std::move(col));
  }
  return cols;
}

MultiGerm::MultiGerm(std::vector<MonoGerm> branches_in)
    : branches(std::move(branches_in)) {
  validate();
}

MultiGerm::MultiGerm(MonoGerm branch) {
  branches.push_back(std::move(branch));
  validate();
}

void MultiGerm::validate() const {
  if (branches.empty()) throw PreconditionError("multigerm with no branches");
  const int n0 = branches.front().n();
  const int p0 = branches.front().p();
  for (const MonoGerm& b : branches) {
    b.validate();
    if (b.n() != n0 || b.p() != p0)
      throw PreconditionError("multigerm branches disagree on (n, p)");
  }
}

MultiGerm MultiGerm::select(const std::vector<int>& branch_indices) const {
  std::vector<MonoGerm> sel;
  for (int i : branch_indices) sel.push_back(branches.at(i));
  return MultiGerm(std::move(sel));
}

MonoGerm stable_Ak(int k, int n) {
  if (k < 1 || k > n)
    throw PreconditionError("stable_Ak requires 1 <= k <= n");
  RingPtr ring = numbered_ring(n);
  std::vector<Poly> comps;
  Mono m(n, 0);
  m[0] = k + 1;
  Poly first = Poly::monomial(ring, m, 1);
  for (int i = 2; i <= k; ++i) {
    Mono mi(n, 0);
    mi[i - 1] = 1;
    mi[0] = i - 1;
    first += Poly::monomial(ring, mi, 1);
  }
  comps.push_back(first);
  for (int i = 2; i <= n; ++i) comps.push_back(Poly::variable(ring, i - 1));
  return MonoGerm(ring, std::move(comps));
}

MonoGerm fold_map(int n, int p, const std::optional<Poly>& shift) {
  if (n < p - 1) throw PreconditionError("fold_map requires n >= p-1");
  RingPtr ring = numbered_ring(n);
  std::vector<Poly> comps;
  for (int i = 0; i < p - 1; ++i) comps.push_back(Poly::variable(ring, i));
  Poly last = Poly::zero(ring);
  for (int i = p; i <= n; ++i) {
    Mono m(n, 0);
    m[i - 1] = 2;
    last += Poly::monomial(ring, m, 1);
  }
  if (shift) {
    // The shift lives in the first p-1 variables of some (p-1)-variable ring;
    // re-embed it here.
    const Poly& s = *shift;
    if (s.nvars() > p - 1)
      throw PreconditionError("fold_map shift must use at most the first p-1 variables");
    std::vector<Poly> subst;
    for (int i = 0; i < s.nvars(); ++i) subst.push_back(Poly::variable(ring, i));
    last += s.compose(subst);
    if (last.constant_term() != 0)
      throw PreconditionError("fold_map shift must vanish at the origin");
  }
  comps.push_back(last);
  return MonoGerm(ring, std::move(comps));
}

RingPtr target_ring(const MultiGerm& g) {
  return numbered_ring(g.p(), "X");
}

}  // namespace germcalc
