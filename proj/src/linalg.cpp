#include "satogr/linalg.hpp"

#include <bit>
#include <utility>

namespace satogr {

namespace {

// Sum over permutations, organized by the set of columns used by the first rows.
RingElement subset_determinant(const Ring& ring, const RingMatrix& m) {
  const std::size_t n = m.size();
  if (n > 20) throw PreconditionError("determinant of a nilpotent block that is too large");
  std::vector<RingElement> dp(std::size_t{1} << n, RingElement(ring));
  dp[0] = RingElement::constant(ring, 1);
  for (std::size_t mask = 0; mask + 1 < dp.size(); ++mask) {
    if (dp[mask].is_zero()) continue;
    const std::size_t row = static_cast<std::size_t>(std::popcount(mask));
    for (std::size_t c = 0; c < n; ++c) {
      if (mask & (std::size_t{1} << c)) continue;
      if (m[row][c].is_zero()) continue;
      RingElement term = dp[mask] * m[row][c];
      if (std::popcount(mask >> (c + 1)) % 2) term = -term;
      dp[mask | (std::size_t{1} << c)] += term;
    }
  }
  return dp.back();
}

}  // namespace

RingElement determinant(const Ring& ring, RingMatrix m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw PreconditionError("determinant of a non-square matrix");
  RingElement det = RingElement::constant(ring, 1);
  bool negate = false;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pi = n, pj = n;
    for (std::size_t j = k; j < n && pi == n; ++j)
      for (std::size_t i = k; i < n; ++i)
        if (m[i][j].is_unit()) {
          pi = i;
          pj = j;
          break;
        }
    if (pi == n) {
      const std::size_t s = n - k;
      if (static_cast<int>(s) > ring->nilpotency_bound()) return RingElement(ring);
      RingMatrix sub(s, std::vector<RingElement>());
      for (std::size_t i = 0; i < s; ++i) sub[i].assign(m[k + i].begin() + static_cast<long>(k), m[k + i].end());
      det = det * subset_determinant(ring, sub);
      return negate ? -det : det;
    }
    if (pi != k) {
      std::swap(m[pi], m[k]);
      negate = !negate;
    }
    if (pj != k) {
      for (auto& row : m) std::swap(row[pj], row[k]);
      negate = !negate;
    }
    det = det * m[k][k];
    const RingElement inv = m[k][k].inverse();
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m[i][k].is_zero()) continue;
      const RingElement factor = m[i][k] * inv;
      for (std::size_t j = k + 1; j < n; ++j)
        if (!m[k][j].is_zero()) m[i][j] -= factor * m[k][j];
    }
  }
  return negate ? -det : det;
}

ScalarMatrix residue_matrix(const RingMatrix& m) {
  ScalarMatrix out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (const auto& x : m[i]) out[i].push_back(x.constant_term());
  return out;
}

std::size_t rank(ScalarMatrix m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    const Scalar inv = m[r][c].inverse();
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][c].is_zero()) continue;
      const Scalar f = m[i][c] * inv;
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

ScalarMatrix inverse(ScalarMatrix m) {
  const std::size_t n = m.size();
  if (n == 0) return m;
  const BaseField field = m[0][0].field();
  ScalarMatrix inv(n, std::vector<Scalar>(n, Scalar(field)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = Scalar(field, 1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c].is_zero()) ++p;
    if (p == n) throw PreconditionError("matrix is singular");
    std::swap(m[p], m[c]);
    std::swap(inv[p], inv[c]);
    const Scalar s = m[c][c].inverse();
    for (std::size_t j = 0; j < n; ++j) {
      m[c][j] *= s;
      inv[c][j] *= s;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || m[i][c].is_zero()) continue;
      const Scalar f = m[i][c];
      for (std::size_t j = 0; j < n; ++j) {
        m[i][j] -= f * m[c][j];
        inv[i][j] -= f * inv[c][j];
      }
    }
  }
  return inv;
}

std::optional<std::vector<std::size_t>> pivot_rows(const RingMatrix& m) {
  if (m.empty()) return std::vector<std::size_t>{};
  const std::size_t k = m[0].size();
  // Reduced basis of the selected rows' residues, each with a leading column.
  std::vector<std::pair<std::size_t, std::vector<Scalar>>> basis;
  std::vector<std::size_t> chosen;
  for (std::size_t i = 0; i < m.size() && chosen.size() < k; ++i) {
    std::vector<Scalar> v;
    for (const auto& x : m[i]) v.push_back(x.constant_term());
    for (const auto& [lead, b] : basis) {
      if (v[lead].is_zero()) continue;
      const Scalar f = v[lead];
      for (std::size_t j = 0; j < k; ++j) v[j] -= f * b[j];
    }
    std::size_t lead = 0;
    while (lead < k && v[lead].is_zero()) ++lead;
    if (lead == k) continue;
    const Scalar inv = v[lead].inverse();
    for (auto& x : v) x *= inv;
    for (auto& [l2, b] : basis) {
      if (b[lead].is_zero()) continue;
      const Scalar f = b[lead];
      for (std::size_t j = 0; j < k; ++j) b[j] -= f * v[j];
    }
    basis.emplace_back(lead, std::move(v));
    chosen.push_back(i);
  }
  if (chosen.size() < k) return std::nullopt;
  return chosen;
}

std::vector<RingElement> solve_square(const Ring& ring, RingMatrix a, std::vector<RingElement> b) {
  const std::size_t n = a.size();
  if (b.size() != n) throw PreconditionError("solve: dimension mismatch");
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && !a[p][c].is_unit()) ++p;
    if (p == n) throw PreconditionError("solve: matrix is not invertible over the coefficient ring");
    std::swap(a[p], a[c]);
    std::swap(b[p], b[c]);
    const RingElement inv = a[c][c].inverse();
    for (std::size_t j = c; j < n; ++j) a[c][j] = a[c][j] * inv;
    b[c] = b[c] * inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c].is_zero()) continue;
      const RingElement f = a[i][c];
      for (std::size_t j = c; j < n; ++j)
        if (!a[c][j].is_zero()) a[i][j] -= f * a[c][j];
      b[i] -= f * b[c];
    }
  }
  (void)ring;
  return b;
}

}  // namespace satogr
