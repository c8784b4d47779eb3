#include "stab/solver.hpp"

#include <algorithm>
#include <cassert>
#include <set>

namespace stab {

namespace {

// Dictionary-form tableau for the bounded-variable simplex. Columns are the
// structural variables followed by one slack per row and any artificials;
// nonbasic variables rest on one of their bounds.
class Tableau {
public:
  Tableau(const LinearProgram& lp, const std::vector<Rational>& lower,
          const std::vector<std::optional<Rational>>& upper)
      : nstruct_(int(lp.variables.size())), lower_(lower), upper_(upper) {
    int m = int(lp.constraints.size());
    ncols_ = nstruct_ + m;  // artificials appended on demand
    lower_.resize(ncols_, Rational(0));
    upper_.resize(ncols_, std::nullopt);
    rows_.assign(m, std::vector<Rational>(ncols_));
    rhs_.assign(m, Rational(0));
    basis_.assign(m, -1);
    at_upper_.assign(ncols_, false);

    for (int i = 0; i < m; ++i) {
      const Constraint& c = lp.constraints[i];
      for (const auto& [j, a] : c.coeffs) rows_[i][j] = a;
      rhs_[i] = c.rhs;
      int slack = nstruct_ + i;
      if (c.sense == Sense::Le) rows_[i][slack] = 1;
      else if (c.sense == Sense::Ge) rows_[i][slack] = -1;
      else upper_[slack] = Rational(0);  // pinned slack for equality rows
      if (c.sense == Sense::Eq) rows_[i][slack] = 1;
    }

    // Start every structural variable on its lower bound and give each row its
    // slack as the basic variable where the residual sign allows; otherwise an
    // artificial carries the row into phase 1.
    std::vector<Rational> residual(m);
    for (int i = 0; i < m; ++i) {
      Rational r = rhs_[i];
      for (int j = 0; j < nstruct_; ++j)
        if (rows_[i][j] != 0) r -= rows_[i][j] * lower_[j];
      residual[i] = r;
    }
    std::vector<int> needs_artificial;
    for (int i = 0; i < m; ++i) {
      int slack = nstruct_ + i;
      const Constraint& c = lp.constraints[i];
      Rational coef = rows_[i][slack];
      bool slack_ok = c.sense != Sense::Eq && sgn(residual[i]) * sgn(coef) >= 0;
      if (slack_ok) {
        basis_[i] = slack;
        if (sgn(coef) < 0) negate_row(i);
      } else {
        needs_artificial.push_back(i);
      }
    }
    for (int i : needs_artificial) {
      for (auto& row : rows_) row.resize(ncols_ + 1, Rational(0));
      lower_.push_back(Rational(0));
      upper_.push_back(std::nullopt);
      at_upper_.push_back(false);
      int art = ncols_++;
      if (sgn(residual[i]) < 0) negate_row(i);
      rows_[i][art] = 1;
      basis_[i] = art;
      artificial_from_ = std::min(artificial_from_, art);
    }
    if (needs_artificial.empty()) artificial_from_ = ncols_;

    // Express every row in terms of the basic variable: divide by the basic
    // coefficient (slacks start at +-1, artificials at +1).
    for (int i = 0; i < m; ++i) {
      Rational piv = rows_[i][basis_[i]];
      assert(piv != 0);
      if (piv != 1) {
        for (auto& v : rows_[i]) v /= piv;
        rhs_[i] /= piv;
      }
    }
    recompute_beta();
  }

  long long iterations() const { return iterations_; }
  int ncols() const { return ncols_; }
  int artificial_from() const { return artificial_from_; }

  Rational value_of(int j) const {
    for (size_t i = 0; i < basis_.size(); ++i)
      if (basis_[i] == j) return beta_[i];
    return bound_value(j);
  }

  // Minimizes sum of artificial variables. Returns the attained value.
  Rational phase1() {
    if (artificial_from_ == ncols_) return Rational(0);
    std::vector<Rational> cost(ncols_, Rational(0));
    for (int j = artificial_from_; j < ncols_; ++j) cost[j] = 1;
    optimize(cost, /*forbid_artificials=*/false);
    Rational total = 0;
    for (int j = artificial_from_; j < ncols_; ++j) total += value_of(j);
    if (total != 0) return total;
    // Pivot leftover artificials out of the basis where possible; rows that
    // cannot be pivoted are redundant and stay parked on a zero artificial.
    bool pivoted = false;
    for (size_t i = 0; i < basis_.size(); ++i) {
      if (basis_[i] < artificial_from_) continue;
      for (int j = 0; j < artificial_from_; ++j) {
        if (is_basic(j) || rows_[i][j] == 0) continue;
        pivot(int(i), j);
        pivoted = true;
        break;
      }
    }
    if (pivoted) recompute_beta();
    return total;
  }

  // Minimizes the given structural cost vector. Returns false on unbounded.
  bool phase2(int objective_var) {
    std::vector<Rational> cost(ncols_, Rational(0));
    cost[objective_var] = 1;
    return optimize(cost, /*forbid_artificials=*/true);
  }

private:
  void negate_row(int i) {
    for (auto& v : rows_[i]) v = -v;
    rhs_[i] = -rhs_[i];
  }

  bool is_basic(int j) const {
    return std::find(basis_.begin(), basis_.end(), j) != basis_.end();
  }

  Rational bound_value(int j) const {
    return at_upper_[j] ? *upper_[j] : lower_[j];
  }

  void recompute_beta() {
    beta_.assign(basis_.size(), Rational(0));
    for (size_t i = 0; i < basis_.size(); ++i) {
      Rational v = rhs_[i];
      for (int j = 0; j < ncols_; ++j)
        if (j != basis_[i] && rows_[i][j] != 0) v -= rows_[i][j] * bound_value(j);
      beta_[i] = v;
    }
  }

  void pivot(int row, int col) {
    Rational piv = rows_[row][col];
    assert(piv != 0);
    for (auto& v : rows_[row]) if (v != 0) v /= piv;
    rows_[row][col] = 1;
    rhs_[row] /= piv;
    for (size_t i = 0; i < rows_.size(); ++i) {
      if (int(i) == row) continue;
      Rational f = rows_[i][col];
      if (f == 0) continue;
      for (int j = 0; j < ncols_; ++j)
        if (rows_[row][j] != 0) rows_[i][j] -= f * rows_[row][j];
      rows_[i][col] = 0;
      rhs_[i] -= f * rhs_[row];
    }
    basis_[row] = col;
  }

  // Reduced cost of nonbasic j under cost vector c: d_j = c_j - c_B^T T_j.
  Rational reduced_cost(const std::vector<Rational>& cost, int j) const {
    Rational d = cost[j];
    for (size_t i = 0; i < basis_.size(); ++i) {
      if (cost[basis_[i]] != 0 && rows_[i][j] != 0) d -= cost[basis_[i]] * rows_[i][j];
    }
    return d;
  }

  bool optimize(const std::vector<Rational>& cost, bool forbid_artificials) {
    const int limit = forbid_artificials ? artificial_from_ : ncols_;
    for (;;) {
      // Bland: smallest eligible nonbasic index enters.
      int enter = -1;
      int dir = 0;
      for (int j = 0; j < limit; ++j) {
        if (is_basic(j)) continue;
        if (upper_[j] && lower_[j] == *upper_[j]) continue;  // fixed
        Rational d = reduced_cost(cost, j);
        if (!at_upper_[j] && sgn(d) < 0) { enter = j; dir = 1; break; }
        if (at_upper_[j] && sgn(d) > 0) { enter = j; dir = -1; break; }
      }
      if (enter < 0) return true;

      // Ratio test: step t >= 0 moves x_enter by dir*t off its bound.
      std::optional<Rational> best;
      int leave_row = -1;     // -1 = bound flip of the entering variable
      int leave_var = enter;  // smallest-index tie break across candidates
      bool leave_to_upper = false;
      if (upper_[enter]) best = *upper_[enter] - lower_[enter];
      for (size_t i = 0; i < basis_.size(); ++i) {
        Rational coef = rows_[i][enter];
        if (coef == 0) continue;
        Rational delta = Rational(dir) * coef;  // beta_i moves by -delta * t
        int b = basis_[i];
        std::optional<Rational> t;
        bool to_upper = false;
        if (sgn(delta) > 0) {
          t = (beta_[i] - lower_[b]) / delta;
        } else if (upper_[b]) {
          t = (*upper_[b] - beta_[i]) / -delta;
          to_upper = true;
        }
        if (!t) continue;
        if (!best || *t < *best || (*t == *best && b < leave_var)) {
          best = *t;
          leave_row = int(i);
          leave_var = b;
          leave_to_upper = to_upper;
        }
      }
      if (!best) return false;  // unbounded direction

      const Rational& t = *best;
      ++iterations_;
      if (leave_row < 0) {
        // Bound flip: the entering variable runs to its opposite bound.
        for (size_t i = 0; i < basis_.size(); ++i)
          if (rows_[i][enter] != 0) beta_[i] -= Rational(dir) * rows_[i][enter] * t;
        at_upper_[enter] = !at_upper_[enter];
        continue;
      }
      Rational enter_val = bound_value(enter) + Rational(dir) * t;
      for (size_t i = 0; i < basis_.size(); ++i)
        if (int(i) != leave_row && rows_[i][enter] != 0)
          beta_[i] -= Rational(dir) * rows_[i][enter] * t;
      int out = basis_[leave_row];
      pivot(leave_row, enter);
      beta_[leave_row] = enter_val;
      at_upper_[out] = leave_to_upper;
      at_upper_[enter] = false;
    }
  }

  int nstruct_;
  int ncols_;
  int artificial_from_ = 1 << 30;
  std::vector<std::vector<Rational>> rows_;
  std::vector<Rational> rhs_;
  std::vector<Rational> beta_;   // values of basic variables
  std::vector<int> basis_;
  std::vector<bool> at_upper_;
  std::vector<Rational> lower_;
  std::vector<std::optional<Rational>> upper_;
  long long iterations_ = 0;
};

LpSolution solve_with_bounds(const LinearProgram& lp, const std::vector<Rational>& lower,
                             const std::vector<std::optional<Rational>>& upper) {
  LpSolution sol;
  Tableau tab(lp, lower, upper);
  if (tab.phase1() != 0) {
    sol.status = SolveStatus::Infeasible;
    sol.iterations = tab.iterations();
    return sol;
  }
  if (!tab.phase2(lp.objective_var)) {
    sol.status = SolveStatus::Unbounded;
    sol.iterations = tab.iterations();
    return sol;
  }
  sol.status = SolveStatus::Optimal;
  sol.values.resize(lp.variables.size());
  for (size_t j = 0; j < lp.variables.size(); ++j) sol.values[j] = tab.value_of(int(j));
  sol.objective = sol.values[lp.objective_var];
  sol.iterations = tab.iterations();
  return sol;
}

void default_bounds(const LinearProgram& lp, std::vector<Rational>& lower,
                    std::vector<std::optional<Rational>>& upper) {
  lower.clear();
  upper.clear();
  for (const Variable& v : lp.variables) {
    lower.push_back(v.lower);
    upper.push_back(v.upper);
  }
}

}  // namespace

LpSolution simplex(const LinearProgram& lp) {
  std::vector<Rational> lower;
  std::vector<std::optional<Rational>> upper;
  default_bounds(lp, lower, upper);
  return solve_with_bounds(lp, lower, upper);
}

EdgeSelection make_selection(const LinearProgram& lp, std::vector<int> chosen) {
  std::sort(chosen.begin(), chosen.end());
  EdgeSelection sel;
  sel.model_kind = lp.model_kind;
  sel.chosen = std::move(chosen);
  std::set<int> internal;
  for (int c : sel.chosen)
    internal.insert(lp.column_cover[c].begin(), lp.column_cover[c].end());
  sel.derived_internal.assign(internal.begin(), internal.end());
  return sel;
}

namespace {

// Ceiling of a positive rational.
long long ceil_rat(const Rational& r) {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q.get_si();
}

struct BnbState {
  const LinearProgram* ip;
  std::vector<Rational> lower;
  std::vector<std::optional<Rational>> upper;
  long long best_k;
  std::vector<int> best_choice;
  bool have_incumbent = false;
  long long nodes = 0;
};

void bnb_node(BnbState& st) {
  ++st.nodes;
  LpSolution rel = solve_with_bounds(*st.ip, st.lower, st.upper);
  if (rel.status != SolveStatus::Optimal) return;
  long long bound = ceil_rat(rel.objective);
  if (st.have_incumbent && bound >= st.best_k) return;

  // Most fractional edge variable; ties to the lowest index.
  int branch = -1;
  Rational best_dist(-1);
  for (int j = 0; j < st.ip->edge_count(); ++j) {
    const Rational& v = rel.values[j];
    if (v == 0 || v == 1) continue;
    Rational dist = v <= Rational(1, 2) ? v : 1 - v;
    if (dist > best_dist) {
      best_dist = dist;
      branch = j;
    }
  }
  if (branch < 0) {
    // Integral edge set; k floats to 1 + max stab load, which is integral.
    long long k = ceil_rat(rel.objective);
    if (!st.have_incumbent || k < st.best_k) {
      st.best_k = k;
      st.best_choice.clear();
      for (int j = 0; j < st.ip->edge_count(); ++j)
        if (rel.values[j] == 1) st.best_choice.push_back(j);
      st.have_incumbent = true;
    }
    return;
  }

  Rational save_lo = st.lower[branch];
  Rational save_up = *st.upper[branch];
  st.lower[branch] = 1;
  bnb_node(st);
  st.lower[branch] = save_lo;
  st.upper[branch] = Rational(0);
  bnb_node(st);
  st.upper[branch] = save_up;
}

}  // namespace

MipSolution branch_and_bound(const LinearProgram& ip) {
  MipSolution mip;
  LinearProgram root = relax(ip);
  LpSolution rel = simplex(root);
  if (rel.status == SolveStatus::Infeasible) {
    mip.status = SolveStatus::Infeasible;
    return mip;
  }
  mip.dual_bound = rel.objective;

  BnbState st;
  st.ip = &root;
  default_bounds(root, st.lower, st.upper);
  st.best_k = 0;
  bnb_node(st);
  if (!st.have_incumbent) {
    mip.status = SolveStatus::Infeasible;
    return mip;
  }
  mip.status = SolveStatus::Optimal;
  mip.k_opt = st.best_k;
  mip.incumbent = make_selection(ip, st.best_choice);
  mip.nodes = st.nodes;
  return mip;
}

}  // namespace stab
