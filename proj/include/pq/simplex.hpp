#pragma once

#include <cstdint>
#include <vector>

#include "pq/rational.hpp"

namespace pq {

enum class Sense { kLessEqual, kGreaterEqual, kEqual };

/// minimize objective . x  subject to  rows[i] . x (senses[i]) rhs[i],  x >= 0.
struct LinearProgram {
  std::vector<Rational> objective;
  std::vector<std::vector<Rational>> rows;
  std::vector<Sense> senses;
  std::vector<Rational> rhs;

  void add_row(std::vector<Rational> coeffs, Sense sense, Rational b) {
    rows.push_back(std::move(coeffs));
    senses.push_back(sense);
    rhs.push_back(std::move(b));
  }
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  Rational value;
  std::vector<Rational> x;
  std::uint64_t pivots = 0;
};

/// Dense two-phase tableau simplex in exact arithmetic. Bland's rule, so it
/// terminates on degenerate problems.
LpSolution solve_lp(const LinearProgram& lp);

}  // namespace pq
