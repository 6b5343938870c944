// germ.hpp: map-germs, multigerms and vector-field germs.
//
// A mono-germ is a polynomial map (K^n,0) -> (K^p,0); every component has
// zero constant term.  A multigerm is a list of branches sharing (n,p); each
// branch is centered at its own source point, modeled as the origin of its
// own copy of K^n over a shared source ring.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "poly.hpp"

namespace germcalc {

struct MonoGerm {
  RingPtr source;            // n source variables
  std::vector<Poly> comps;   // p components in the source ring

  MonoGerm() = default;
  MonoGerm(RingPtr source, std::vector<Poly> comps);

  int n() const { return source ? source->size() : 0; }
  int p() const { return static_cast<int>(comps.size()); }

  // Throws unless every component lives in `source` and vanishes at 0.
  void validate() const;

  // Jacobian at the origin, column j = d/dx_j, as p row vectors per column.
  std::vector<std::vector<Rational>> jacobian_at_origin() const;
};

struct MultiGerm {
  std::vector<MonoGerm> branches;

  MultiGerm() = default;
  explicit MultiGerm(std::vector<MonoGerm> branches);
  explicit MultiGerm(MonoGerm branch);

  int r() const { return static_cast<int>(branches.size()); }
  int n() const { return branches.empty() ? 0 : branches.front().n(); }
  int p() const { return branches.empty() ? 0 : branches.front().p(); }

  // Throws unless nonempty and all branches agree on (n, p).
  void validate() const;

  MultiGerm select(const std::vector<int>& branch_indices) const;
};

enum class FieldKind { Source, Target, AlongMap };

// An element of theta_n (source), theta_p (target) or theta(f) (along one
// branch); arity of `comps` matches the kind.
struct VectorFieldGerm {
  FieldKind kind = FieldKind::Target;
  std::vector<Poly> comps;
};

struct CatalogEntry {
  std::string name;
  MultiGerm germ;
  std::optional<int> expected_codim;  // absent: expected non-stabilizing
  std::string source;                 // citation within the published table
  std::vector<std::string> tags;
};

// The stable A_k normal form (K^n,0) -> (K^n,0):
//   (x1^{k+1} + sum_{i=2..k} x_i x1^{i-1}, x2, ..., xn),   1 <= k <= n.
MonoGerm stable_Ak(int k, int n);

// Fold map (x1,...,x_{p-1}, sum_{i=p..n} x_i^2 + shift(x1..x_{p-1})); the
// immersion (x,0) when n = p-1.  `shift` is a polynomial in the first p-1
// variables of the fold's own source ring.
MonoGerm fold_map(int n, int p, const std::optional<Poly>& shift = std::nullopt);

// Target ring X1..Xp used for vector fields over a germ.
RingPtr target_ring(const MultiGerm& g);

std::vector<CatalogEntry> paper_catalog();

}  // namespace germcalc
