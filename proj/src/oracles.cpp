#include "satogr/oracles.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace satogr::oracle {

RingElement leibniz_det(const Ring& ring, const RingMatrix& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  RingElement total(ring);
  do {
    RingElement term = RingElement::constant(ring, 1);
    for (std::size_t i = 0; i < n && !term.is_zero(); ++i) term = term * m[i][perm[i]];
    if (term.is_zero()) continue;
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j] ? 1 : 0;
    if (inversions % 2)
      total -= term;
    else
      total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

RingElement finite_plucker(const Ring& ring, const RingMatrix& frame, const std::vector<std::size_t>& rows) {
  RingMatrix sub;
  for (std::size_t r : rows) sub.push_back(frame.at(r));
  return leibniz_det(ring, sub);
}

Partition partition_by_counting(const MayaDiagram& s) {
  const std::int64_t lo = s.min_element();
  std::vector<std::int64_t> comp;
  for (std::int64_t e = s.tail_start() - 1; e >= lo - 1; --e)
    if (!s.contains(e)) comp.push_back(e);
  std::vector<int> parts;
  for (std::int64_t c : comp) {
    int count = 0;
    for (std::int64_t e = lo; e < c; ++e) count += s.contains(e) ? 1 : 0;
    if (count == 0) break;
    parts.push_back(count);
  }
  return Partition(parts);
}

std::vector<MayaDiagram> maya_diagrams_in_window(int w) {
  std::vector<MayaDiagram> out;
  const int width = 2 * w;
  for (std::uint32_t mask = 0; mask < (1u << width); ++mask) {
    // bit i describes the integer i - w
    std::vector<std::int64_t> members;
    for (int i = 0; i < width; ++i)
      if (mask & (1u << i)) members.push_back(i - w);
    std::int64_t negatives = 0, missing = 0;
    for (int i = 0; i < width; ++i) {
      const bool in = mask & (1u << i);
      if (i < w && in) ++negatives;
      if (i >= w && !in) ++missing;
    }
    if (negatives != missing) continue;
    out.emplace_back(w, members);
  }
  return out;
}

std::size_t field_rank(std::vector<std::vector<Scalar>> m) {
  std::size_t r = 0;
  if (m.empty()) return 0;
  const std::size_t cols = m[0].size();
  for (std::size_t c = 0; c < cols; ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c].is_zero()) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      const Scalar f = m[i][c] / m[r][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

IndexData index_by_window(const GrassPoint& l) {
  if (!l.tail_multiplier().exact() || !l.tail_multiplier().is_one()) throw PreconditionError("window oracle needs the standard tail");
  const std::int64_t depth = l.tail_depth();
  const auto frame = l.frame(depth);
  std::int64_t top = 1;
  for (const auto& c : frame) {
    if (!c.exact()) throw PrecisionError("window oracle needs exact frames");
    if (!c.is_zero()) top = std::max(top, c.max_exp() + 1);
  }
  const BaseField field = l.ring()->field();
  // Columns as vectors on rows [-depth, top); V+ truncated to e_0 .. e_{top-1}.
  std::vector<std::vector<Scalar>> lspan, both;
  for (const auto& c : frame) {
    std::vector<Scalar> v;
    for (std::int64_t r = -depth; r < top; ++r) v.push_back(c.coeff(r).constant_term());
    lspan.push_back(v);
    both.push_back(v);
  }
  for (std::int64_t e = 0; e < top; ++e) {
    std::vector<Scalar> v(static_cast<std::size_t>(depth + top), Scalar(field));
    v[static_cast<std::size_t>(depth + e)] = Scalar(field, 1);
    both.push_back(v);
  }
  const auto dim_l = static_cast<std::int64_t>(field_rank(lspan));
  const auto dim_sum = static_cast<std::int64_t>(field_rank(both));
  IndexData out;
  out.intersection = dim_l + top - dim_sum;
  out.cokernel = depth + top - dim_sum;
  out.index = out.intersection - out.cokernel;
  return out;
}

RingElement schur_by_tableaux(const Partition& p, const Ring& t_ring) {
  const int m = static_cast<int>(t_ring->num_vars());
  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i < p.length(); ++i)
    for (int j = 0; j < p.part(static_cast<std::size_t>(i)); ++j) cells.emplace_back(i, j);
  std::vector<std::vector<int>> fill(static_cast<std::size_t>(p.length()));
  for (int i = 0; i < p.length(); ++i) fill[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(p.part(static_cast<std::size_t>(i))), 0);
  RingElement total(t_ring);
  std::vector<int> content(static_cast<std::size_t>(m), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t idx) {
    if (idx == cells.size()) {
      const long pos = t_ring->find(content);
      if (pos >= 0) total += RingElement::monomial(t_ring, content, Scalar(t_ring->field(), 1));
      return;
    }
    const auto [i, j] = cells[idx];
    const auto ui = static_cast<std::size_t>(i), uj = static_cast<std::size_t>(j);
    int lo = 1;
    if (j > 0) lo = std::max(lo, fill[ui][uj - 1]);
    if (i > 0) lo = std::max(lo, fill[ui - 1][uj] + 1);
    for (int v = lo; v <= m; ++v) {
      fill[ui][uj] = v;
      ++content[static_cast<std::size_t>(v - 1)];
      rec(idx + 1);
      --content[static_cast<std::size_t>(v - 1)];
    }
  };
  rec(0);
  return total;
}

RingElement complete_homogeneous(int k, const Ring& t_ring) {
  const std::size_t m = t_ring->num_vars();
  RingElement total(t_ring);
  if (k < 0) return total;
  std::vector<int> exps(m, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t var, int left) {
    if (var + 1 == m || m == 0) {
      if (m == 0) {
        if (left == 0) total += RingElement::constant(t_ring, 1);
        return;
      }
      exps[var] = left;
      if (t_ring->find(exps) >= 0) total += RingElement::monomial(t_ring, exps, Scalar(t_ring->field(), 1));
      exps[var] = 0;
      return;
    }
    for (int e = 0; e <= left; ++e) {
      exps[var] = e;
      rec(var + 1, left - e);
    }
    exps[var] = 0;
  };
  rec(0, k);
  return total;
}

}  // namespace satogr::oracle
