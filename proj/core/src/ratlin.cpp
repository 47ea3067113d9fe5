#include <latgeo/ratlin.hpp>

#include <stdexcept>

namespace latgeo {

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<size_t> rref(RatMat& m) {
  std::vector<size_t> pivots;
  if (m.empty()) return pivots;
  size_t rows = m.size(), cols = m[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[r], m[p]);
    Rat inv = m[r][c];
    for (size_t j = c; j < cols; ++j) m[r][j] /= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rat f = m[i][c];
      for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

size_t rat_rank(RatMat m) { return rref(m).size(); }

std::optional<RatVec> rat_solve(RatMat a, RatVec b) {
  size_t rows = a.size();
  size_t cols = rows ? a[0].size() : 0;
  if (b.size() != rows) throw std::invalid_argument("rat_solve: size mismatch");
  for (size_t i = 0; i < rows; ++i) a[i].push_back(b[i]);
  auto pivots = rref(a);
  // Inconsistent if the last column is a pivot.
  for (size_t c : pivots)
    if (c == cols) return std::nullopt;
  RatVec x(cols, Rat(0));
  for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = a[i][cols];
  return x;
}

std::vector<RatVec> rat_kernel(RatMat a) {
  size_t cols = a.empty() ? 0 : a[0].size();
  auto pivots = rref(a);
  std::vector<bool> is_pivot(cols, false);
  for (size_t c : pivots) is_pivot[c] = true;
  std::vector<RatVec> basis;
  for (size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RatVec v(cols, Rat(0));
    v[free] = 1;
    for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

IntVec primitive_integer(const RatVec& v) {
  BigInt den = 1;
  for (const auto& q : v) den = big_lcm(den, rat_den(q));
  IntVec w(v.size());
  bool all_zero = true;
  for (size_t i = 0; i < v.size(); ++i) {
    Rat scaled = v[i] * Rat(den);
    w[i] = rat_num(scaled);
    if (w[i] != 0) all_zero = false;
  }
  if (all_zero) throw std::invalid_argument("primitive_integer: zero vector");
  return primitive(w);
}

}  // namespace latgeo
