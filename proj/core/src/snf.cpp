#include <latgeo/snf.hpp>

#include <stdexcept>

namespace latgeo {

namespace {

struct Worker {
  IntMat s, v, w;
  size_t rows, cols;

  explicit Worker(const IntMat& m)
      : s(m), v(IntMat::identity(m.rows())), w(IntMat::identity(m.cols())),
        rows(m.rows()), cols(m.cols()) {}

  void swap_rows(size_t a, size_t b) {
    if (a == b) return;
    for (size_t c = 0; c < cols; ++c) std::swap(s.at(a, c), s.at(b, c));
    for (size_t c = 0; c < rows; ++c) std::swap(v.at(a, c), v.at(b, c));
  }
  void swap_cols(size_t a, size_t b) {
    if (a == b) return;
    for (size_t r = 0; r < rows; ++r) std::swap(s.at(r, a), s.at(r, b));
    for (size_t r = 0; r < cols; ++r) std::swap(w.at(r, a), w.at(r, b));
  }
  // row a -= q * row b
  void row_sub(size_t a, size_t b, const BigInt& q) {
    if (q == 0) return;
    for (size_t c = 0; c < cols; ++c) s.at(a, c) -= q * s.at(b, c);
    for (size_t c = 0; c < rows; ++c) v.at(a, c) -= q * v.at(b, c);
  }
  // col a -= q * col b
  void col_sub(size_t a, size_t b, const BigInt& q) {
    if (q == 0) return;
    for (size_t r = 0; r < rows; ++r) s.at(r, a) -= q * s.at(r, b);
    for (size_t r = 0; r < cols; ++r) w.at(r, a) -= q * w.at(r, b);
  }
  void negate_row(size_t a) {
    for (size_t c = 0; c < cols; ++c) s.at(a, c) = -s.at(a, c);
    for (size_t c = 0; c < rows; ++c) v.at(a, c) = -v.at(a, c);
  }

  // Smallest-|value| nonzero entry of the trailing submatrix, row-major ties.
  bool find_pivot(size_t t, size_t& pr, size_t& pc) const {
    bool found = false;
    BigInt best;
    for (size_t r = t; r < rows; ++r)
      for (size_t c = t; c < cols; ++c) {
        const BigInt& e = s.at(r, c);
        if (e == 0) continue;
        BigInt a = abs(e);
        if (!found || a < best) {
          found = true;
          best = a;
          pr = r;
          pc = c;
        }
      }
    return found;
  }

  void run() {
    size_t n = std::min(rows, cols);
    for (size_t t = 0; t < n; ++t) {
      size_t pr, pc;
      if (!find_pivot(t, pr, pc)) break;  // trailing submatrix is zero
      swap_rows(t, pr);
      swap_cols(t, pc);
      for (;;) {
        // Clear column t below the pivot, then row t right of it; a nonzero
        // remainder becomes the new, smaller pivot.
        bool again = false;
        for (size_t r = t + 1; r < rows; ++r) {
          if (s.at(r, t) == 0) continue;
          BigInt q = floor_div(s.at(r, t), s.at(t, t));
          row_sub(r, t, q);
          if (s.at(r, t) != 0) {
            swap_rows(t, r);
            again = true;
          }
        }
        if (again) continue;
        for (size_t c = t + 1; c < cols; ++c) {
          if (s.at(t, c) == 0) continue;
          BigInt q = floor_div(s.at(t, c), s.at(t, t));
          col_sub(c, t, q);
          if (s.at(t, c) != 0) {
            swap_cols(t, c);
            again = true;
          }
        }
        if (again) continue;
        // Divisibility: fold a non-divisible entry into row t and restart.
        bool fixed = true;
        for (size_t r = t + 1; r < rows && fixed; ++r)
          for (size_t c = t + 1; c < cols && fixed; ++c)
            if (s.at(r, c) % s.at(t, t) != 0) {
              row_sub(t, r, BigInt(-1));  // row t += row r
              fixed = false;
            }
        if (fixed) break;
      }
      if (s.at(t, t) < 0) negate_row(t);
    }
  }
};

}  // namespace

SmithDecomp snf(const IntMat& m) {
  if (m.empty()) throw std::invalid_argument("snf: empty matrix");
  Worker wk(m);
  wk.run();
  SmithDecomp out{wk.s, wk.v, wk.w, {}};
  size_t n = std::min(m.rows(), m.cols());
  out.divisors.resize(n);
  for (size_t i = 0; i < n; ++i) out.divisors[i] = wk.s.at(i, i);
  return out;
}

}  // namespace latgeo
