// linalg.hpp: small dense exact linear algebra over Q for subspaces of K^p.
// Subspaces are given by spanning row vectors; the reduced row echelon form
// is the canonical representative, so equal subspaces compare equal.

#pragma once

#include <vector>

#include "poly.hpp"

namespace germcalc {

using QVec = std::vector<Rational>;
using QMat = std::vector<QVec>;  // rows

QMat rref(QMat m);
int rank_q(const QMat& m);

// Canonical basis (RREF, zero rows dropped) of the row span.
QMat span_basis(const QMat& rows);

// Basis of { v : M v^T = 0 } for the row space of m, i.e. vectors orthogonal
// to every row (the annihilator under the standard dot product).
QMat annihilator(const QMat& rows, int ambient_dim);

QMat subspace_sum(const QMat& a, const QMat& b, int ambient_dim);
QMat subspace_intersection(const QMat& a, const QMat& b, int ambient_dim);

bool subspace_equal(const QMat& a, const QMat& b, int ambient_dim);
bool subspace_contains(const QMat& outer, const QMat& inner, int ambient_dim);

}  // namespace germcalc
