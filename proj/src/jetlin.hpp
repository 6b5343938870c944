// jetlin.hpp: truncated jet-space linear algebra.
//
// Finite-dimensional models of theta(f) and of scalar local rings are built
// as spaces of (branch, component, monomial) coordinates with all monomials
// of total degree <= order.  Quotient dimensions are exact ranks over Q,
// computed by fraction-free elimination on integer rows (denominators
// cleared, content removed at every step).  A stabilization certificate
// records the order at which computed dimensions stopped changing; it is a
// heuristic certificate, not a determinacy proof, and is reported as such.

#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "poly.hpp"

namespace germcalc {

// All monomials of total degree <= max_degree in nvars variables, sorted
// grlex ascending (index 0 is the constant monomial).  Instances are cached.
class MonoTable {
 public:
  static const MonoTable& get(int nvars, int max_degree);

  int size() const { return static_cast<int>(monos_.size()); }
  const Mono& mono(int i) const { return monos_[i]; }
  int degree(int i) const { return degrees_[i]; }
  int index(const Mono& m) const;
  int nvars() const { return nvars_; }
  int max_degree() const { return max_degree_; }

 private:
  MonoTable(int nvars, int max_degree);

  int nvars_, max_degree_;
  std::vector<Mono> monos_;
  std::vector<int> degrees_;
  std::map<Mono, int, GrlexLess> index_;
};

// Exact sparse integer vector.  Coefficients are kept in int64 while they
// fit and escalate to GMP integers on demand; arithmetic is exact either
// way.  Entries are sorted by column; the leading entry is the highest
// column (so elimination consumes high-degree columns first and quotient
// bases come out as low-degree monomials).
class SparseVec {
 public:
  SparseVec() = default;

  static SparseVec unit(int32_t col);
  // Sorts, merges, clears denominators (by the lcm) and removes content.
  static SparseVec from_rationals(std::vector<std::pair<int32_t, Rational>> entries);

  bool empty() const { return cols_.empty(); }
  size_t size() const { return cols_.size(); }
  int32_t leading_col() const { return cols_.back(); }
  int32_t col(size_t i) const { return cols_[i]; }
  Integer coeff_big(size_t i) const;
  Rational coeff_at(int32_t col) const;  // 0 if absent

  // this = a*this - b*other, entries merged by column.
  void combine(const Integer& a, const SparseVec& other, const Integer& b);

  // Divides by the gcd of all coefficients (optionally a joint gcd with a
  // partner vector is computed by the caller via content()).
  Integer content() const;  // 0 for the empty vector
  void divide_by(const Integer& g);
  void negate();

  bool is_big() const { return big_; }

 private:
  void escalate();

  std::vector<int32_t> cols_;
  std::vector<int64_t> small_;
  std::vector<Integer> large_;
  bool big_ = false;
};

// Row echelon accumulator over Q with fraction-free updates.  Optionally
// carries a bookkeeping vector per row; rows whose data part cancels to zero
// hand their bookkeeping part to the kernel list, which yields exact kernel
// combinations of the inserted rows.
class Echelon {
 public:
  explicit Echelon(bool track_kernel = false) : track_kernel_(track_kernel) {}

  bool insert(SparseVec data);
  bool insert(SparseVec data, SparseVec tag);
  int rank() const { return static_cast<int>(rows_.size()); }
  const std::vector<SparseVec>& kernel() const { return kernel_; }
  // Reduce a copy of v against the pivots; true iff it cancels completely.
  bool reduces_to_zero(SparseVec v) const;
  std::vector<int32_t> pivot_cols_sorted() const;
  // Canonical content: fully reduced rows sorted by pivot; equal spans give
  // equal forms.  Used to compare subspaces across jet orders.
  std::vector<std::vector<std::pair<int32_t, Rational>>> canonical_rows() const;

 private:
  bool insert_impl(SparseVec data, SparseVec tag, bool has_tag);

  bool track_kernel_;
  std::unordered_map<int32_t, int> pivot_row_;
  std::vector<std::pair<SparseVec, SparseVec>> rows_;
  std::vector<SparseVec> kernel_;
};

// Jet coordinates for `blocks` copies (multigerm branches) of a free module
// with `comps` components over the <=order jets of an nvars-variable ring.
// Columns are grouped by total degree, ascending.
class JetLayout {
 public:
  JetLayout(int blocks, int comps, int nvars, int order);

  int blocks() const { return blocks_; }
  int comps() const { return comps_; }
  int order() const { return order_; }
  int dim() const { return static_cast<int>(decode_.size()); }
  const MonoTable& table() const { return *tab_; }

  int32_t col(int block, int comp, int mono_idx) const;
  std::array<int32_t, 3> decode(int32_t col) const { return decode_[col]; }
  int col_degree(int32_t col) const;

  // Append the coordinates of `poly` placed in (block, comp), truncated to
  // the layout order.  Returns false if truncation dropped any term.
  bool append_poly(int block, int comp, const Poly& poly,
                   std::vector<std::pair<int32_t, Rational>>& out) const;

 private:
  int blocks_, comps_, order_;
  const MonoTable* tab_;
  std::vector<int32_t> col_of_;
  std::vector<std::array<int32_t, 3>> decode_;
};

// Generator rows expressed in a jet layout.
struct SpanMatrix {
  const JetLayout* layout = nullptr;
  std::vector<SparseVec> rows;
  std::vector<bool> exact;  // per row: no terms lost to truncation

  void add(const JetLayout& L, const std::vector<std::pair<int32_t, Rational>>& entries,
           bool exact_in_window);
};

int rank(const SpanMatrix& m);

// dim(ambient) - rank(span).  With include_high_degree the span implicitly
// contains everything of degree > order (quotient modulo M^{order+1});
// without it, rows that lost terms to truncation are not in the window and
// are skipped.
long quotient_dim(const JetLayout& ambient, const SpanMatrix& span,
                  bool include_high_degree = true);

// Dimension-plus-certificate result of an order-by-order computation.
struct CodimReport {
  std::optional<long> value;  // nullopt: did not stabilize by max_order
  int certified_order = -1;   // first order of the stable run
  int window = 0;
  std::vector<std::pair<int, long>> history;  // (order, dimension)

  bool bounded() const { return value.has_value(); }
};

// Evaluates dim_at(k) for k = 1..max_order and certifies the value once the
// last `window` dimensions agree.  Requires window >= 2, max_order >= window.
CodimReport stabilized_dim(const std::function<long(int)>& dim_at, int window,
                           int max_order);

}  // namespace germcalc
