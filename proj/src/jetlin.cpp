#include "jetlin.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

namespace germcalc {

namespace {

void enumerate_monos(int nvars, int max_degree, int var, Mono& cur, int used,
                     std::vector<Mono>& out) {
  if (var == nvars) {
    out.push_back(cur);
    return;
  }
  for (int e = 0; e + used <= max_degree; ++e) {
    cur[var] = e;
    enumerate_monos(nvars, max_degree, var + 1, cur, used + e, out);
  }
  cur[var] = 0;
}

}  // namespace

MonoTable::MonoTable(int nvars, int max_degree)
    : nvars_(nvars), max_degree_(max_degree) {
  if (nvars == 0) {
    monos_.push_back(Mono{});
  } else {
    Mono cur(nvars, 0);
    enumerate_monos(nvars, max_degree, 0, cur, 0, monos_);
    std::sort(monos_.begin(), monos_.end(), GrlexLess{});
  }
  degrees_.reserve(monos_.size());
  for (size_t i = 0; i < monos_.size(); ++i) {
    degrees_.push_back(mono_degree(monos_[i]));
    index_.emplace(monos_[i], static_cast<int>(i));
  }
}

const MonoTable& MonoTable::get(int nvars, int max_degree) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<MonoTable>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{nvars, max_degree}];
  if (!slot) slot.reset(new MonoTable(nvars, max_degree));
  return *slot;
}

int MonoTable::index(const Mono& m) const {
  auto it = index_.find(m);
  return it == index_.end() ? -1 : it->second;
}

// ---------------------------------------------------------------------------
// SparseVec

SparseVec SparseVec::unit(int32_t col) {
  SparseVec v;
  v.cols_.push_back(col);
  v.small_.push_back(1);
  return v;
}

SparseVec SparseVec::from_rationals(std::vector<std::pair<int32_t, Rational>> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  // merge duplicates
  std::vector<std::pair<int32_t, Rational>> merged;
  for (auto& [c, q] : entries) {
    if (!merged.empty() && merged.back().first == c)
      merged.back().second += q;
    else
      merged.emplace_back(c, q);
  }
  Integer lcm_den = 1;
  for (auto& [c, q] : merged)
    if (q != 0) lcm_den = lcm(lcm_den, Integer(q.get_den()));
  std::vector<std::pair<int32_t, Integer>> ints;
  for (auto& [c, q] : merged) {
    if (q == 0) continue;
    ints.emplace_back(c, Integer(q.get_num()) * (lcm_den / Integer(q.get_den())));
  }
  Integer g = 0;
  for (auto& [c, v] : ints) g = gcd(g, v);
  SparseVec out;
  bool fits = true;
  for (auto& [c, v] : ints) {
    if (g > 1) v /= g;
    if (!v.fits_slong_p()) fits = false;
  }
  out.cols_.reserve(ints.size());
  if (fits) {
    out.small_.reserve(ints.size());
    for (auto& [c, v] : ints) {
      out.cols_.push_back(c);
      out.small_.push_back(v.get_si());
    }
  } else {
    out.big_ = true;
    out.large_.reserve(ints.size());
    for (auto& [c, v] : ints) {
      out.cols_.push_back(c);
      out.large_.push_back(std::move(v));
    }
  }
  return out;
}

Integer SparseVec::coeff_big(size_t i) const {
  return big_ ? large_[i] : Integer(static_cast<long>(small_[i]));
}

Rational SparseVec::coeff_at(int32_t col) const {
  auto it = std::lower_bound(cols_.begin(), cols_.end(), col);
  if (it == cols_.end() || *it != col) return Rational(0);
  return Rational(coeff_big(it - cols_.begin()));
}

void SparseVec::escalate() {
  if (big_) return;
  large_.reserve(small_.size());
  for (int64_t v : small_) large_.emplace_back(static_cast<long>(v));
  small_.clear();
  big_ = true;
}

void SparseVec::combine(const Integer& a, const SparseVec& other, const Integer& b) {
  // Fast path: everything small and multipliers below 2^31, so products stay
  // within int128 with room to spare.
  constexpr int64_t kMulLimit = INT32_MAX;
  if (!big_ && !other.big_ && a.fits_slong_p() && b.fits_slong_p()) {
    const int64_t a64 = a.get_si(), b64 = b.get_si();
    if (a64 <= kMulLimit && a64 >= -kMulLimit && b64 <= kMulLimit && b64 >= -kMulLimit) {
      std::vector<int32_t> rc;
      std::vector<int64_t> rv;
      rc.reserve(cols_.size() + other.cols_.size());
      rv.reserve(cols_.size() + other.cols_.size());
      size_t i = 0, j = 0;
      bool overflow = false;
      while (i < cols_.size() || j < other.cols_.size()) {
        int32_t ci = i < cols_.size() ? cols_[i] : INT32_MAX;
        int32_t cj = j < other.cols_.size() ? other.cols_[j] : INT32_MAX;
        int32_t c = std::min(ci, cj);
        __int128 v = 0;
        if (ci == c) v += static_cast<__int128>(a64) * small_[i++];
        if (cj == c) v -= static_cast<__int128>(b64) * other.small_[j++];
        if (v > INT64_MAX || v < INT64_MIN) {
          overflow = true;
          break;
        }
        if (v != 0) {
          rc.push_back(c);
          rv.push_back(static_cast<int64_t>(v));
        }
      }
      if (!overflow) {
        cols_ = std::move(rc);
        small_ = std::move(rv);
        return;
      }
    }
  }
  // Exact big-integer path.
  std::vector<int32_t> rc;
  std::vector<Integer> rv;
  rc.reserve(cols_.size() + other.cols_.size());
  rv.reserve(cols_.size() + other.cols_.size());
  size_t i = 0, j = 0;
  while (i < cols_.size() || j < other.cols_.size()) {
    int32_t ci = i < cols_.size() ? cols_[i] : INT32_MAX;
    int32_t cj = j < other.cols_.size() ? other.cols_[j] : INT32_MAX;
    int32_t c = std::min(ci, cj);
    Integer v = 0;
    if (ci == c) v += a * coeff_big(i), ++i;
    if (cj == c) v -= b * other.coeff_big(j), ++j;
    if (v != 0) {
      rc.push_back(c);
      rv.push_back(std::move(v));
    }
  }
  cols_ = std::move(rc);
  large_ = std::move(rv);
  small_.clear();
  big_ = true;
}

Integer SparseVec::content() const {
  Integer g = 0;
  if (big_) {
    for (const Integer& v : large_) {
      g = gcd(g, v);
      if (g == 1) break;
    }
  } else {
    int64_t gs = 0;
    for (int64_t v : small_) {
      gs = std::gcd(gs, v);
      if (gs == 1) break;
    }
    g = Integer(static_cast<long>(gs < 0 ? -gs : gs));
  }
  return g;
}

void SparseVec::divide_by(const Integer& g) {
  if (g == 1 || g == 0) return;
  if (big_) {
    bool fits = true;
    for (Integer& v : large_) {
      v /= g;
      if (!v.fits_slong_p()) fits = false;
    }
    if (fits) {
      // demote back to the fast representation
      small_.reserve(large_.size());
      for (const Integer& v : large_) small_.push_back(v.get_si());
      large_.clear();
      big_ = false;
    }
  } else {
    const int64_t gs = g.get_si();
    for (int64_t& v : small_) v /= gs;
  }
}

void SparseVec::negate() {
  if (big_)
    for (Integer& v : large_) v = -v;
  else
    for (int64_t& v : small_) v = -v;
}

// ---------------------------------------------------------------------------
// Echelon

bool Echelon::insert(SparseVec data) { return insert_impl(std::move(data), SparseVec(), false); }

bool Echelon::insert(SparseVec data, SparseVec tag) {
  return insert_impl(std::move(data), std::move(tag), true);
}

bool Echelon::insert_impl(SparseVec data, SparseVec tag, bool has_tag) {
  while (!data.empty()) {
    const int32_t c = data.leading_col();
    auto it = pivot_row_.find(c);
    if (it == pivot_row_.end()) {
      Integer g = gcd(data.content(), tag.content());
      if (g > 1) {
        data.divide_by(g);
        tag.divide_by(g);
      }
      if (data.coeff_big(data.size() - 1) < 0) {
        data.negate();
        tag.negate();
      }
      pivot_row_.emplace(c, static_cast<int>(rows_.size()));
      rows_.emplace_back(std::move(data), std::move(tag));
      return true;
    }
    const auto& [pd, pt] = rows_[it->second];
    Integer a = pd.coeff_big(pd.size() - 1);
    Integer b = data.coeff_big(data.size() - 1);
    const Integer g = gcd(a, b);
    a /= g;
    b /= g;
    data.combine(a, pd, b);
    if (track_kernel_) tag.combine(a, pt, b);
    Integer cg = gcd(data.content(), tag.content());
    if (cg > 1) {
      data.divide_by(cg);
      tag.divide_by(cg);
    }
  }
  if (track_kernel_ && has_tag && !tag.empty()) kernel_.push_back(std::move(tag));
  return false;
}

bool Echelon::reduces_to_zero(SparseVec v) const {
  while (!v.empty()) {
    const int32_t c = v.leading_col();
    auto it = pivot_row_.find(c);
    if (it == pivot_row_.end()) return false;
    const SparseVec& pd = rows_[it->second].first;
    Integer a = pd.coeff_big(pd.size() - 1);
    Integer b = v.coeff_big(v.size() - 1);
    const Integer g = gcd(a, b);
    v.combine(a / g, pd, b / g);
    Integer cg = v.content();
    if (cg > 1) v.divide_by(cg);
  }
  return true;
}

std::vector<int32_t> Echelon::pivot_cols_sorted() const {
  std::vector<int32_t> cols;
  cols.reserve(pivot_row_.size());
  for (const auto& [c, idx] : pivot_row_) cols.push_back(c);
  std::sort(cols.begin(), cols.end());
  return cols;
}

std::vector<std::vector<std::pair<int32_t, Rational>>> Echelon::canonical_rows() const {
  // Fully reduced form over Q; intended for small spans (subspaces of K^p,
  // linear parts), not for whole jet spaces.
  using QRow = std::map<int32_t, Rational>;
  std::vector<std::pair<int32_t, QRow>> qrows;  // (pivot col, row)
  for (const auto& [data, tag] : rows_) {
    QRow row;
    for (size_t i = 0; i < data.size(); ++i)
      row[data.col(i)] = Rational(data.coeff_big(i));
    qrows.emplace_back(data.leading_col(), std::move(row));
  }
  std::sort(qrows.begin(), qrows.end(),
            [](const auto& a, const auto& b) { return a.first > b.first; });
  // normalize leading coefficients to 1, then eliminate other pivots
  for (auto& [pc, row] : qrows) {
    Rational lead = row[pc];
    for (auto& [c, q] : row) q /= lead;
  }
  for (size_t i = 0; i < qrows.size(); ++i) {
    for (size_t j = 0; j < qrows.size(); ++j) {
      if (i == j) continue;
      auto it = qrows[i].second.find(qrows[j].first);
      if (it == qrows[i].second.end() || it->second == 0) continue;
      const Rational factor = it->second;
      for (const auto& [c, q] : qrows[j].second) {
        Rational& slot = qrows[i].second[c];
        slot -= factor * q;
      }
      std::erase_if(qrows[i].second, [](const auto& kv) { return kv.second == 0; });
    }
  }
  std::sort(qrows.begin(), qrows.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::vector<std::pair<int32_t, Rational>>> out;
  for (auto& [pc, row] : qrows)
    out.emplace_back(row.begin(), row.end());
  return out;
}

// ---------------------------------------------------------------------------
// JetLayout

JetLayout::JetLayout(int blocks, int comps, int nvars, int order)
    : blocks_(blocks), comps_(comps), order_(order),
      tab_(&MonoTable::get(nvars, order)) {
  const int ts = tab_->size();
  col_of_.assign(static_cast<size_t>(blocks) * comps * ts, -1);
  decode_.reserve(col_of_.size());
  // degree-major: all degree-0 coordinates first, then degree 1, ...
  int32_t next = 0;
  int m_begin = 0;
  for (int d = 0; d <= order; ++d) {
    int m_end = m_begin;
    while (m_end < ts && tab_->degree(m_end) == d) ++m_end;
    for (int b = 0; b < blocks; ++b)
      for (int c = 0; c < comps; ++c)
        for (int m = m_begin; m < m_end; ++m) {
          col_of_[(static_cast<size_t>(b) * comps + c) * ts + m] = next++;
          decode_.push_back({b, c, m});
        }
    m_begin = m_end;
  }
}

int32_t JetLayout::col(int block, int comp, int mono_idx) const {
  return col_of_[(static_cast<size_t>(block) * comps_ + comp) * tab_->size() + mono_idx];
}

int JetLayout::col_degree(int32_t c) const { return tab_->degree(decode_[c][2]); }

bool JetLayout::append_poly(int block, int comp, const Poly& poly,
                            std::vector<std::pair<int32_t, Rational>>& out) const {
  bool exact = true;
  for (const auto& [m, q] : poly.terms()) {
    if (mono_degree(m) > order_) {
      exact = false;
      continue;
    }
    const int idx = tab_->index(m);
    out.emplace_back(col(block, comp, idx), q);
  }
  return exact;
}

void SpanMatrix::add(const JetLayout& L,
                     const std::vector<std::pair<int32_t, Rational>>& entries,
                     bool exact_in_window) {
  layout = &L;
  rows.push_back(SparseVec::from_rationals(entries));
  exact.push_back(exact_in_window);
}

int rank(const SpanMatrix& m) {
  Echelon e;
  for (const SparseVec& r : m.rows) e.insert(r);
  return e.rank();
}

long quotient_dim(const JetLayout& ambient, const SpanMatrix& span,
                  bool include_high_degree) {
  Echelon e;
  for (size_t i = 0; i < span.rows.size(); ++i) {
    if (!include_high_degree && !span.exact[i]) continue;
    e.insert(span.rows[i]);
  }
  return ambient.dim() - e.rank();
}

// ---------------------------------------------------------------------------

CodimReport stabilized_dim(const std::function<long(int)>& dim_at, int window,
                           int max_order) {
  if (window < 2) throw PreconditionError("stabilized_dim: window must be >= 2");
  if (max_order < window)
    throw PreconditionError("stabilized_dim: max_order must be >= window");
  CodimReport report;
  report.window = window;
  for (int k = 1; k <= max_order; ++k) {
    report.history.emplace_back(k, dim_at(k));
    if (static_cast<int>(report.history.size()) >= window) {
      bool stable = true;
      const long last = report.history.back().second;
      for (int i = 0; i < window; ++i)
        if (report.history[report.history.size() - 1 - i].second != last) stable = false;
      if (stable) {
        report.value = last;
        report.certified_order = k - window + 1;
        return report;
      }
    }
  }
  return report;  // no stable run: value empty, full history kept
}

}  // namespace germcalc
