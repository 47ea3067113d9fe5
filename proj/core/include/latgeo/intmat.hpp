// Dense row-major matrix of exact integers.
#pragma once

#include <latgeo/bigint.hpp>

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace latgeo {

class IntMat {
 public:
  IntMat() = default;
  IntMat(size_t rows, size_t cols) : rows_(rows), cols_(cols), e_(rows * cols, BigInt(0)) {}

  IntMat(std::initializer_list<std::initializer_list<long long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    e_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw std::invalid_argument("IntMat: ragged initializer");
      for (long long v : r) e_.emplace_back(v);
    }
  }

  static IntMat identity(size_t n) {
    IntMat m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  BigInt& at(size_t r, size_t c) { return e_[r * cols_ + c]; }
  const BigInt& at(size_t r, size_t c) const { return e_[r * cols_ + c]; }

  IntVec row(size_t r) const {
    IntVec v(cols_);
    for (size_t c = 0; c < cols_; ++c) v[c] = at(r, c);
    return v;
  }
  IntVec col(size_t c) const {
    IntVec v(rows_);
    for (size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
    return v;
  }

  IntMat transpose() const {
    IntMat t(cols_, rows_);
    for (size_t r = 0; r < rows_; ++r)
      for (size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
  }

  friend IntMat operator*(const IntMat& a, const IntMat& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("IntMat: size mismatch in product");
    IntMat p(a.rows_, b.cols_);
    for (size_t i = 0; i < a.rows_; ++i)
      for (size_t k = 0; k < a.cols_; ++k) {
        const BigInt& aik = a.at(i, k);
        if (aik == 0) continue;
        for (size_t j = 0; j < b.cols_; ++j) p.at(i, j) += aik * b.at(k, j);
      }
    return p;
  }

  friend bool operator==(const IntMat& a, const IntMat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }

  /// Determinant of a square matrix, by fraction-free (Bareiss) elimination.
  BigInt det() const {
    if (rows_ != cols_) throw std::invalid_argument("IntMat::det: not square");
    size_t n = rows_;
    if (n == 0) return 1;
    IntMat m = *this;
    BigInt prev = 1;
    int sgn = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
      if (m.at(k, k) == 0) {
        size_t p = k + 1;
        while (p < n && m.at(p, k) == 0) ++p;
        if (p == n) return 0;
        for (size_t c = 0; c < n; ++c) std::swap(m.at(k, c), m.at(p, c));
        sgn = -sgn;
      }
      for (size_t i = k + 1; i < n; ++i)
        for (size_t j = k + 1; j < n; ++j)
          m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
      prev = m.at(k, k);
    }
    return sgn > 0 ? m.at(n - 1, n - 1) : -m.at(n - 1, n - 1);
  }

 private:
  size_t rows_ = 0, cols_ = 0;
  std::vector<BigInt> e_;
};

inline IntVec mat_vec(const IntMat& m, const IntVec& v) {
  if (m.cols() != v.size()) throw std::invalid_argument("mat_vec: size mismatch");
  IntVec out(m.rows(), BigInt(0));
  for (size_t r = 0; r < m.rows(); ++r)
    for (size_t c = 0; c < m.cols(); ++c) out[r] += m.at(r, c) * v[c];
  return out;
}

}  // namespace latgeo
