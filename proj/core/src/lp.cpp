#include <latgeo/lp.hpp>

#include <stdexcept>

namespace latgeo {

namespace {

constexpr size_t npos = static_cast<size_t>(-1);

// Phase-1 simplex for A y = b, y >= 0, minimizing the sum of one artificial
// variable per row. Columns 0..n-1 are structural, n..n+m-1 artificial.
// Bland's rule (lowest eligible index) guarantees termination.
class Phase1 {
 public:
  Phase1(std::vector<RatVec> a, RatVec b) : a_(std::move(a)), b_(std::move(b)) {
    m_ = a_.size();
    n_ = m_ ? a_[0].size() : 0;
    for (size_t i = 0; i < m_; ++i)
      if (b_[i] < 0) {
        for (auto& e : a_[i]) e = -e;
        b_[i] = -b_[i];
      }
    art_.assign(m_, RatVec(m_, Rat(0)));
    basis_.resize(m_);
    for (size_t i = 0; i < m_; ++i) {
      art_[i][i] = 1;
      basis_[i] = n_ + i;
    }
    cost_.assign(n_ + m_, Rat(0));
    obj_ = 0;
    for (size_t j = 0; j < n_; ++j)
      for (size_t i = 0; i < m_; ++i) cost_[j] -= a_[i][j];
    for (size_t i = 0; i < m_; ++i) obj_ -= b_[i];
  }

  bool solve(RatVec& y) {
    for (;;) {
      size_t enter = npos;
      for (size_t j = 0; j < n_ + m_; ++j)
        if (cost_[j] < 0) {
          enter = j;
          break;
        }
      if (enter == npos) break;
      size_t leave = npos;
      Rat best;
      for (size_t i = 0; i < m_; ++i) {
        Rat c = coeff(i, enter);
        if (c <= 0) continue;
        Rat ratio = b_[i] / c;
        if (leave == npos || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == npos) throw std::logic_error("lp_feasible: phase-1 unbounded");
      pivot(leave, enter);
    }
    if (obj_ != 0) return false;
    y.assign(n_, Rat(0));
    for (size_t i = 0; i < m_; ++i)
      if (basis_[i] < n_) y[basis_[i]] = b_[i];
    return true;
  }

 private:
  Rat coeff(size_t i, size_t j) const { return j < n_ ? a_[i][j] : art_[i][j - n_]; }

  void pivot(size_t leave, size_t enter) {
    Rat p = coeff(leave, enter);
    for (auto& e : a_[leave]) e /= p;
    for (auto& e : art_[leave]) e /= p;
    b_[leave] /= p;
    for (size_t i = 0; i < m_; ++i) {
      if (i == leave) continue;
      Rat f = coeff(i, enter);
      if (f == 0) continue;
      for (size_t j = 0; j < n_; ++j) a_[i][j] -= f * a_[leave][j];
      for (size_t j = 0; j < m_; ++j) art_[i][j] -= f * art_[leave][j];
      b_[i] -= f * b_[leave];
    }
    Rat fc = cost_[enter];
    if (fc != 0) {
      for (size_t j = 0; j < n_; ++j) cost_[j] -= fc * a_[leave][j];
      for (size_t j = 0; j < m_; ++j) cost_[n_ + j] -= fc * art_[leave][j];
      obj_ -= fc * b_[leave];
    }
    basis_[leave] = enter;
  }

  std::vector<RatVec> a_, art_;
  RatVec b_, cost_;
  Rat obj_;
  size_t m_ = 0, n_ = 0;
  std::vector<size_t> basis_;
};

}  // namespace

Feasibility lp_feasible(const std::vector<LinearConstraint>& constraints, size_t num_vars) {
  // Standard form: x = xp - xn with xp, xn >= 0; surplus s >= 0 per inequality.
  size_t slacks = 0;
  for (const auto& c : constraints) {
    if (c.coeffs.size() != num_vars)
      throw std::invalid_argument("lp_feasible: constraint arity mismatch");
    if (c.kind == LinearConstraint::Kind::Ge) ++slacks;
  }
  size_t n = 2 * num_vars + slacks;
  std::vector<RatVec> a(constraints.size(), RatVec(n, Rat(0)));
  RatVec b(constraints.size());
  size_t slot = 0;
  for (size_t i = 0; i < constraints.size(); ++i) {
    const auto& c = constraints[i];
    for (size_t j = 0; j < num_vars; ++j) {
      a[i][j] = c.coeffs[j];
      a[i][num_vars + j] = -c.coeffs[j];
    }
    if (c.kind == LinearConstraint::Kind::Ge) a[i][2 * num_vars + slot++] = -1;
    b[i] = c.rhs;
  }

  Phase1 p1(std::move(a), std::move(b));
  RatVec y;
  if (!p1.solve(y)) return {false, std::nullopt};

  RatVec x(num_vars);
  for (size_t j = 0; j < num_vars; ++j) x[j] = y[j] - y[num_vars + j];
  for (const auto& c : constraints) {
    Rat lhs(0);
    for (size_t j = 0; j < num_vars; ++j) lhs += c.coeffs[j] * x[j];
    bool ok = c.kind == LinearConstraint::Kind::Eq ? lhs == c.rhs : lhs >= c.rhs;
    if (!ok) throw std::logic_error("lp_feasible: witness verification failed");
  }
  return {true, x};
}

}  // namespace latgeo
