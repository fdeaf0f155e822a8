#include "pq/simplex.hpp"

#include <optional>

#include "pq/errors.hpp"

namespace pq {

namespace {

class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols)
      : t_(rows, std::vector<Rational>(cols + 1)), obj_(cols + 1), basis_(rows), cols_(cols) {}

  std::vector<Rational>& row(std::size_t i) { return t_[i]; }
  std::size_t rows() const { return t_.size(); }
  std::size_t cols() const { return cols_; }
  std::size_t& basis(std::size_t i) { return basis_[i]; }
  Rational& rhs(std::size_t i) { return t_[i][cols_]; }

  // Reduced costs for cost vector c: d = c - sum_i c_B(i) * row_i.
  void set_objective(const std::vector<Rational>& c) {
    for (std::size_t j = 0; j <= cols_; ++j) obj_[j] = j < cols_ ? c[j] : Rational();
    for (std::size_t i = 0; i < rows(); ++i) {
      const Rational& cb = c[basis_[i]];
      if (cb.sign() == 0) continue;
      for (std::size_t j = 0; j <= cols_; ++j) {
        if (t_[i][j].sign() != 0) obj_[j] -= cb * t_[i][j];
      }
    }
  }

  Rational value() const { return -obj_[cols_]; }

  // Bland's rule. Returns false once optimal; throws on unboundedness via flag.
  bool step(const std::vector<bool>& allowed, bool& unbounded) {
    std::optional<std::size_t> enter;
    for (std::size_t j = 0; j < cols_; ++j) {
      if (allowed[j] && obj_[j].sign() < 0) {
        enter = j;
        break;
      }
    }
    if (!enter) return false;
    std::optional<std::size_t> leave;
    Rational best;
    for (std::size_t i = 0; i < rows(); ++i) {
      const Rational& a = t_[i][*enter];
      if (a.sign() <= 0) continue;
      Rational ratio = t_[i][cols_] / a;
      if (!leave || ratio < best || (ratio == best && basis_[i] < basis_[*leave])) {
        leave = i;
        best = std::move(ratio);
      }
    }
    if (!leave) {
      unbounded = true;
      return false;
    }
    pivot(*leave, *enter);
    return true;
  }

  void pivot(std::size_t r, std::size_t s) {
    ++pivots;
    const Rational piv = t_[r][s];
    for (auto& v : t_[r]) {
      if (v.sign() != 0) v /= piv;
    }
    auto eliminate = [&](std::vector<Rational>& target) {
      const Rational f = target[s];
      if (f.sign() == 0) return;
      for (std::size_t j = 0; j <= cols_; ++j) {
        if (t_[r][j].sign() != 0) target[j] -= f * t_[r][j];
      }
    };
    for (std::size_t i = 0; i < rows(); ++i) {
      if (i != r) eliminate(t_[i]);
    }
    eliminate(obj_);
    basis_[r] = s;
  }

  void drop_row(std::size_t i) {
    t_.erase(t_.begin() + static_cast<std::ptrdiff_t>(i));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
  }

  std::uint64_t pivots = 0;

 private:
  std::vector<std::vector<Rational>> t_;
  std::vector<Rational> obj_;
  std::vector<std::size_t> basis_;
  std::size_t cols_;
};

}  // namespace

LpSolution solve_lp(const LinearProgram& lp) {
  const std::size_t n = lp.objective.size();
  const std::size_t m = lp.rows.size();
  if (lp.senses.size() != m || lp.rhs.size() != m) {
    throw PreconditionError("linear program rows, senses and rhs disagree in length");
  }

  // Column layout: originals, one slack/surplus per inequality, one artificial
  // per >= or = row (after making every rhs nonnegative).
  std::vector<Sense> senses = lp.senses;
  std::vector<int> flip(m, 1);
  for (std::size_t i = 0; i < m; ++i) {
    if (lp.rows[i].size() != n) throw PreconditionError("row length differs from objective");
    if (lp.rhs[i].sign() < 0) {
      flip[i] = -1;
      if (senses[i] == Sense::kLessEqual) senses[i] = Sense::kGreaterEqual;
      else if (senses[i] == Sense::kGreaterEqual) senses[i] = Sense::kLessEqual;
    }
  }
  std::size_t cols = n;
  std::vector<std::optional<std::size_t>> slack(m), artificial(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (senses[i] != Sense::kEqual) slack[i] = cols++;
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (senses[i] != Sense::kLessEqual) artificial[i] = cols++;
  }

  Tableau tab(m, cols);
  std::vector<bool> is_artificial(cols, false);
  for (std::size_t i = 0; i < m; ++i) {
    auto& row = tab.row(i);
    for (std::size_t j = 0; j < n; ++j) row[j] = flip[i] < 0 ? -lp.rows[i][j] : lp.rows[i][j];
    tab.rhs(i) = flip[i] < 0 ? -lp.rhs[i] : lp.rhs[i];
    if (slack[i]) row[*slack[i]] = senses[i] == Sense::kLessEqual ? 1 : -1;
    if (artificial[i]) {
      row[*artificial[i]] = 1;
      is_artificial[*artificial[i]] = true;
      tab.basis(i) = *artificial[i];
    } else {
      tab.basis(i) = *slack[i];
    }
  }

  LpSolution sol;
  std::vector<bool> allowed(cols, true);
  bool unbounded = false;

  // Phase 1: minimize the sum of artificials.
  std::vector<Rational> phase1(cols);
  for (std::size_t j = 0; j < cols; ++j) {
    if (is_artificial[j]) phase1[j] = 1;
  }
  tab.set_objective(phase1);
  while (tab.step(allowed, unbounded)) {
  }
  if (tab.value().sign() > 0) {
    sol.status = LpStatus::kInfeasible;
    sol.pivots = tab.pivots;
    return sol;
  }
  // Drive zero-level artificials out of the basis; rows that cannot be
  // pivoted are redundant.
  for (std::size_t i = tab.rows(); i-- > 0;) {
    if (!is_artificial[tab.basis(i)]) continue;
    std::optional<std::size_t> col;
    for (std::size_t j = 0; j < cols; ++j) {
      if (!is_artificial[j] && tab.row(i)[j].sign() != 0) {
        col = j;
        break;
      }
    }
    if (col) tab.pivot(i, *col);
    else tab.drop_row(i);
  }
  for (std::size_t j = 0; j < cols; ++j) allowed[j] = !is_artificial[j];

  // Phase 2.
  std::vector<Rational> cost(cols);
  for (std::size_t j = 0; j < n; ++j) cost[j] = lp.objective[j];
  tab.set_objective(cost);
  while (tab.step(allowed, unbounded)) {
  }
  sol.pivots = tab.pivots;
  if (unbounded) {
    sol.status = LpStatus::kUnbounded;
    return sol;
  }
  sol.status = LpStatus::kOptimal;
  sol.x.assign(n, Rational());
  for (std::size_t i = 0; i < tab.rows(); ++i) {
    if (tab.basis(i) < n) sol.x[tab.basis(i)] = tab.rhs(i);
  }
  for (std::size_t j = 0; j < n; ++j) sol.value += lp.objective[j] * sol.x[j];
  return sol;
}

}  // namespace pq
