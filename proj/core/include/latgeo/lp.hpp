// Exact rational linear feasibility (phase-1 simplex, Bland's rule).
// Decision only, with a witness on the feasible side. Strict inequalities
// are not handled here; callers encode them by homogenizing to ">= 1".
#pragma once

#include <latgeo/bigint.hpp>

#include <optional>
#include <vector>

namespace latgeo {

struct LinearConstraint {
  enum class Kind { Eq, Ge };
  RatVec coeffs;
  Rat rhs;
  Kind kind = Kind::Ge;
};

inline LinearConstraint make_eq(RatVec c, Rat rhs) {
  return {std::move(c), std::move(rhs), LinearConstraint::Kind::Eq};
}
inline LinearConstraint make_ge(RatVec c, Rat rhs) {
  return {std::move(c), std::move(rhs), LinearConstraint::Kind::Ge};
}

struct Feasibility {
  bool feasible = false;
  std::optional<RatVec> witness;  // satisfies every constraint exactly
};

/// Feasibility of a system of equalities and >=-inequalities over free
/// rational variables.
Feasibility lp_feasible(const std::vector<LinearConstraint>& constraints, size_t num_vars);

}  // namespace latgeo
