#include "satogr/grassmann.hpp"

#include <algorithm>
#include <functional>

namespace satogr {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw PreconditionError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw PreconditionError("partition parts must be weakly decreasing");
  }
}

int Partition::size() const {
  int n = 0;
  for (int p : parts_) n += p;
  return n;
}

Partition Partition::conjugate() const {
  std::vector<int> out;
  for (int j = 1; !parts_.empty() && j <= parts_.front(); ++j) {
    int count = 0;
    for (int p : parts_) count += p >= j ? 1 : 0;
    out.push_back(count);
  }
  return Partition(std::move(out));
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

bool operator<(const Partition& a, const Partition& b) {
  const int sa = a.size(), sb = b.size();
  if (sa != sb) return sa < sb;
  return b.parts_ < a.parts_;
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int max_part) {
    if (left == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(left, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(left - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::vector<Partition> partitions_up_to(int d) {
  std::vector<Partition> out;
  for (int n = 0; n <= d; ++n)
    for (auto& p : partitions_of(n)) out.push_back(std::move(p));
  return out;
}

std::int64_t maya_charge(std::int64_t s, const std::vector<std::int64_t>& below) {
  std::int64_t negative = s < 0 ? -s : 0;
  std::int64_t present_nonneg = 0;
  for (std::int64_t e : below) {
    if (e >= s) continue;
    if (e < 0)
      ++negative;
    else
      ++present_nonneg;
  }
  const std::int64_t missing = s > 0 ? s - present_nonneg : 0;
  return negative - missing;
}

MayaDiagram::MayaDiagram(std::int64_t tail_start, std::vector<std::int64_t> below) : tail_start_(tail_start) {
  std::sort(below.begin(), below.end());
  below.erase(std::unique(below.begin(), below.end()), below.end());
  below.erase(std::remove_if(below.begin(), below.end(), [&](std::int64_t e) { return e >= tail_start; }), below.end());
  while (!below.empty() && below.back() == tail_start_ - 1) {
    --tail_start_;
    below.pop_back();
  }
  below_ = std::move(below);
  const std::int64_t charge = maya_charge(tail_start_, below_);
  if (charge != 0)
    throw PreconditionError("Maya diagram is not of virtual cardinal zero (charge " + std::to_string(charge) + ")");
}

bool MayaDiagram::contains(std::int64_t e) const {
  return e >= tail_start_ || std::binary_search(below_.begin(), below_.end(), e);
}

std::vector<std::int64_t> MayaDiagram::complement_from(std::int64_t lo) const {
  std::vector<std::int64_t> out;
  for (std::int64_t e = lo; e < tail_start_; ++e)
    if (!contains(e)) out.push_back(e);
  return out;
}

std::string MayaDiagram::to_string() const {
  std::string s = "{";
  for (std::int64_t e : below_) s += std::to_string(e) + ",";
  return s + std::to_string(tail_start_) + ",...}";
}

Partition maya_to_partition(const MayaDiagram& s) {
  // Complement in decreasing order: gaps above the minimum, then everything below it.
  std::vector<std::int64_t> gaps = s.complement_from(s.min_element());
  std::reverse(gaps.begin(), gaps.end());
  std::vector<int> parts;
  std::int64_t next_below = s.min_element() - 1;
  for (std::int64_t k = 1;; ++k) {
    std::int64_t c;
    if (static_cast<std::size_t>(k) <= gaps.size())
      c = gaps[static_cast<std::size_t>(k - 1)];
    else
      c = next_below--;
    const std::int64_t part = c + k;
    if (part <= 0) break;
    parts.push_back(static_cast<int>(part));
  }
  return Partition(std::move(parts));
}

MayaDiagram partition_to_maya(const Partition& p) {
  const int len = p.length();
  if (len == 0) return MayaDiagram::vacuum();
  std::vector<std::int64_t> removed;
  for (int k = 1; k <= len; ++k) removed.push_back(p.part(static_cast<std::size_t>(k - 1)) - k);
  const std::int64_t top = removed.front();
  std::vector<std::int64_t> below;
  for (std::int64_t e = -len; e < top; ++e)
    if (std::find(removed.begin(), removed.end(), e) == removed.end()) below.push_back(e);
  return MayaDiagram(top + 1, std::move(below));
}

namespace {

LaurentSeries reduce_mod_tail(LaurentSeries col, const LaurentSeries& h, std::int64_t depth) {
  while (!col.is_zero() && col.min_exp() < -depth) {
    const std::int64_t e = col.min_exp();
    col -= h.shifted(e) * col.coeff(e);
  }
  return col;
}

// Highest row (exclusive) that can be read from every column.
std::int64_t common_window(const std::vector<LaurentSeries>& cols) {
  std::int64_t hi = kExact;
  for (const auto& c : cols) hi = std::min(hi, c.trunc());
  if (!is_exact_order(hi)) return hi;
  std::int64_t top = 0;
  for (const auto& c : cols)
    if (!c.is_zero()) top = std::max(top, c.max_exp() + 1);
  return top;
}

bool all_exact(const std::vector<LaurentSeries>& cols) {
  return std::all_of(cols.begin(), cols.end(), [](const LaurentSeries& c) { return c.exact(); });
}

RingMatrix window_matrix(const std::vector<LaurentSeries>& cols, std::int64_t lo, std::int64_t hi) {
  RingMatrix m;
  for (std::int64_t r = lo; r < hi; ++r) {
    std::vector<RingElement> row;
    row.reserve(cols.size());
    for (const auto& c : cols) row.push_back(c.coeff(r));
    m.push_back(std::move(row));
  }
  return m;
}

}  // namespace

GrassPoint::GrassPoint(Ring ring, std::int64_t tail_depth, std::vector<LaurentSeries> columns,
                       std::optional<LaurentSeries> tail_multiplier)
    : ring_(std::move(ring)), tail_depth_(tail_depth) {
  if (tail_depth < 0) throw PreconditionError("tail depth must be non-negative");
  multiplier_ = tail_multiplier ? *tail_multiplier : LaurentSeries::one(ring_);
  require_same_ring(ring_, multiplier_.ring(), "grass point");
  if (multiplier_.trunc() <= 0 || multiplier_.min_exp() < 0 || !multiplier_.coeff(0).is_one())
    throw PreconditionError("tail multiplier must be a power series with constant term 1");
  for (auto& c : columns) {
    require_same_ring(ring_, c.ring(), "grass point");
    columns_.push_back(reduce_mod_tail(std::move(c), multiplier_, tail_depth_));
  }
  if (columns_.empty()) return;
  const std::int64_t hi = common_window(columns_);
  const std::size_t r = hi > -tail_depth_ ? rank(residue_matrix(window_matrix(columns_, -tail_depth_, hi))) : 0;
  if (r < columns_.size()) {
    if (all_exact(columns_)) throw PreconditionError("frame columns are linearly dependent modulo the tail");
    throw PrecisionError("window too small to certify that the frame columns are independent");
  }
}

GrassPoint GrassPoint::vacuum(const Ring& ring) { return GrassPoint(ring, 0, {}); }

std::int64_t GrassPoint::window_high() const {
  std::int64_t hi = multiplier_.exact() ? kExact : multiplier_.trunc() - tail_depth_ - 1;
  for (const auto& c : columns_) hi = std::min(hi, c.trunc());
  return hi;
}

std::vector<LaurentSeries> GrassPoint::frame(std::int64_t depth) const {
  if (depth < tail_depth_) throw PreconditionError("frame depth below the tail depth");
  std::vector<LaurentSeries> out;
  for (std::int64_t i = depth; i > tail_depth_; --i) out.push_back(multiplier_.shifted(-i));
  out.insert(out.end(), columns_.begin(), columns_.end());
  return out;
}

GrassPoint GrassPoint::deepened(std::int64_t depth) const {
  if (depth == tail_depth_) return *this;
  return GrassPoint(ring_, depth, frame(depth), multiplier_);
}

GrassPoint embed(const GrassPoint& l, const Ring& target) {
  std::vector<LaurentSeries> cols;
  for (const auto& c : l.columns()) cols.push_back(embed(c, target));
  return GrassPoint(target, l.tail_depth(), std::move(cols), embed(l.tail_multiplier(), target));
}

IndexData index_data(const GrassPoint& l) {
  const std::int64_t n = l.tail_depth();
  const std::int64_t k = static_cast<std::int64_t>(l.columns().size());
  const std::int64_t rb = static_cast<std::int64_t>(rank(residue_matrix(window_matrix(l.columns(), -n, 0))));
  return IndexData{k - rb, n - rb, k - n};
}

std::int64_t index(const GrassPoint& l) { return index_data(l).index; }

std::pair<std::int64_t, std::vector<std::int64_t>> chart_rows(const GrassPoint& l, const MayaDiagram& s) {
  const std::int64_t depth = std::max(l.tail_depth(), -s.min_element());
  return {depth, s.complement_from(-depth)};
}

RingElement plucker(const GrassPoint& l, const MayaDiagram& s) {
  const std::int64_t i = index(l);
  if (i != 0)
    throw PreconditionError("Pluecker coordinates need a point of index 0 (index is " + std::to_string(i) + ")");
  const auto [depth, rows] = chart_rows(l, s);
  const auto frame = l.frame(depth);
  RingMatrix m;
  for (std::int64_t r : rows) {
    std::vector<RingElement> row;
    for (const auto& c : frame) row.push_back(c.coeff(r));
    m.push_back(std::move(row));
  }
  return determinant(l.ring(), std::move(m));
}

bool in_chart(const GrassPoint& l, const MayaDiagram& s) {
  if (index(l) != 0) return false;
  return plucker(l, s).is_unit();
}

RingElement chart_transition(const GrassPoint& l, const MayaDiagram& a, const MayaDiagram& b) {
  const RingElement pa = plucker(l, a);
  if (!pa.is_unit()) throw PreconditionError("point is not in the chart " + a.to_string());
  const RingElement pb = plucker(l, b);
  if (!pb.is_unit()) throw PreconditionError("point is not in the chart " + b.to_string());
  return pa * pb.inverse();
}

std::vector<std::pair<Partition, RingElement>> plucker_coordinates(const GrassPoint& l, int d) {
  std::vector<std::pair<Partition, RingElement>> out;
  for (auto& p : partitions_up_to(d)) {
    RingElement v = plucker(l, partition_to_maya(p));
    out.emplace_back(std::move(p), std::move(v));
  }
  return out;
}

GrassPoint act(const GammaElement& g, const GrassPoint& l) {
  require_same_ring(g.ring(), l.ring(), "act");
  if (g.zpower() != 0) throw PreconditionError("act: group element has nonzero z-power");
  const LaurentSeries s = g.series();
  std::vector<LaurentSeries> cols;
  for (const auto& c : l.columns()) cols.push_back(s * c);
  return GrassPoint(l.ring(), l.tail_depth(), std::move(cols), g.gplus() * l.tail_multiplier());
}

namespace {

void require_same_tail(const GrassPoint& a, const GrassPoint& b) {
  require_same_ring(a.ring(), b.ring(), "subspace comparison");
  if (!a.tail_multiplier().agrees_with(b.tail_multiplier()))
    throw PreconditionError("points have different tail multipliers");
}

// Coefficients of x in the span of cols on the window, or nothing.
std::optional<std::vector<RingElement>> solve_in_span(const Ring& ring, const RingMatrix& p,
                                                      const std::vector<std::size_t>& pivots,
                                                      const std::vector<RingElement>& x) {
  RingMatrix square;
  std::vector<RingElement> rhs;
  for (std::size_t i : pivots) {
    square.push_back(p[i]);
    rhs.push_back(x[i]);
  }
  std::vector<RingElement> a = solve_square(ring, std::move(square), std::move(rhs));
  for (std::size_t r = 0; r < p.size(); ++r) {
    RingElement acc(ring);
    for (std::size_t j = 0; j < a.size(); ++j) acc.add_product(a[j], p[r][j]);
    if (!(acc == x[r])) return std::nullopt;
  }
  return a;
}

}  // namespace

bool contains(const GrassPoint& l, const LaurentSeries& f) {
  require_same_ring(l.ring(), f.ring(), "contains");
  const std::int64_t depth = l.tail_depth();
  const LaurentSeries x = reduce_mod_tail(f, l.tail_multiplier(), depth);
  std::vector<LaurentSeries> all = l.columns();
  all.push_back(x);
  const std::int64_t hi = common_window(all);
  const RingMatrix p = window_matrix(l.columns(), -depth, hi);
  const RingMatrix xv = window_matrix({x}, -depth, hi);
  std::vector<RingElement> col;
  for (const auto& row : xv) col.push_back(row[0]);
  if (l.columns().empty())
    return std::all_of(col.begin(), col.end(), [](const RingElement& c) { return c.is_zero(); });
  const auto pivots = pivot_rows(p);
  if (!pivots) throw PrecisionError("window too small to test membership");
  return solve_in_span(l.ring(), p, *pivots, col).has_value();
}

bool is_subspace(const GrassPoint& small, const GrassPoint& big) {
  require_same_tail(small, big);
  const std::int64_t depth = std::max(small.tail_depth(), big.tail_depth());
  const auto pf = big.frame(depth);
  const auto xf = small.frame(depth);
  std::vector<LaurentSeries> all = pf;
  all.insert(all.end(), xf.begin(), xf.end());
  const std::int64_t hi = common_window(all);
  const RingMatrix p = window_matrix(pf, -depth, hi);
  const RingMatrix x = window_matrix(xf, -depth, hi);
  const auto pivots = pivot_rows(p);
  if (!pivots) throw PrecisionError("window too small to compare subspaces");
  for (std::size_t j = 0; j < xf.size(); ++j) {
    std::vector<RingElement> col;
    for (const auto& row : x) col.push_back(row[j]);
    if (!solve_in_span(small.ring(), p, *pivots, col)) return false;
  }
  return true;
}

bool same_subspace(const GrassPoint& a, const GrassPoint& b) { return is_subspace(a, b) && is_subspace(b, a); }

FiniteQuotient finite_quotient(const GrassPoint& l, const GrassPoint& lp) {
  if (!is_subspace(l, lp)) throw PreconditionError("L is not contained in L' at the given windows");
  FiniteQuotient q;
  q.depth = std::max(l.tail_depth(), lp.tail_depth());
  q.sub_frame = l.frame(q.depth);
  q.multiplier = l.tail_multiplier();
  const auto big = lp.frame(q.depth);
  std::vector<LaurentSeries> all = big;
  all.insert(all.end(), q.sub_frame.begin(), q.sub_frame.end());
  const std::int64_t hi = common_window(all);
  std::vector<LaurentSeries> chosen = q.sub_frame;
  std::size_t r = rank(residue_matrix(window_matrix(chosen, -q.depth, hi)));
  for (const auto& c : big) {
    chosen.push_back(c);
    const std::size_t r2 = rank(residue_matrix(window_matrix(chosen, -q.depth, hi)));
    if (r2 > r) {
      r = r2;
      q.basis.push_back(c);
    } else {
      chosen.pop_back();
    }
  }
  return q;
}

GrassPoint embed_finite(const RingMatrix& m, const GrassPoint& l, const GrassPoint& lp) {
  FiniteQuotient q = finite_quotient(l, lp);
  if (m.size() != q.basis.size())
    throw PreconditionError("subspace matrix has " + std::to_string(m.size()) + " rows but the quotient has dimension " +
                            std::to_string(q.basis.size()));
  const std::size_t k = m.empty() ? 0 : m[0].size();
  std::vector<LaurentSeries> cols = q.sub_frame;
  for (std::size_t j = 0; j < k; ++j) {
    LaurentSeries c(l.ring());
    for (std::size_t a = 0; a < m.size(); ++a) {
      if (m[a].size() != k) throw PreconditionError("subspace matrix rows have different lengths");
      require_same_ring(l.ring(), m[a][j].ring(), "embed_finite");
      if (!m[a][j].is_zero()) c += q.basis[a] * m[a][j];
    }
    cols.push_back(std::move(c));
  }
  return GrassPoint(l.ring(), q.depth, std::move(cols), q.multiplier);
}

}  // namespace satogr
