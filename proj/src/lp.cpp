#include "fdsrank/lp.hpp"

#include <limits>

namespace fdsrank::lp {

namespace {

template <class Num>
struct Arith;

template <>
struct Arith<mpq_class> {
  double eps = 0.0;
  bool positive(const mpq_class& x) const { return sgn(x) > 0; }
  bool negative(const mpq_class& x) const { return sgn(x) < 0; }
  bool zero(const mpq_class& x) const { return sgn(x) == 0; }
  static double to_double(const mpq_class& x) { return x.get_d(); }
};

template <>
struct Arith<double> {
  double eps = 1e-9;
  bool positive(double x) const { return x > eps; }
  bool negative(double x) const { return x < -eps; }
  bool zero(double x) const { return x <= eps && x >= -eps; }
  static double to_double(double x) { return x; }
};

// Chvatal-style dictionary: basic[i] = b[i] + sum_j t[i][j] * nonbasic[j].
template <class Num>
class Dictionary {
 public:
  Dictionary(const LinearProgram& lp, Arith<Num> arith) : arith_(arith), vars_(lp.num_vars) {
    std::vector<LinearProgram::Row> rows;
    for (const auto& row : lp.rows) {
      if (row.relation != Relation::GreaterEq) rows.push_back({row.terms, Relation::LessEq, row.rhs});
      if (row.relation != Relation::LessEq) {
        LinearProgram::Row neg{row.terms, Relation::LessEq, -row.rhs};
        for (auto& term : neg.terms) term.second = -term.second;
        rows.push_back(std::move(neg));
      }
    }
    const int m = static_cast<int>(rows.size());
    b_.assign(m, Num(0));
    t_.assign(m, std::vector<Num>(vars_, Num(0)));
    basic_.resize(m);
    nonbasic_.resize(vars_);
    for (int j = 0; j < vars_; ++j) nonbasic_[j] = j;
    for (int i = 0; i < m; ++i) {
      basic_[i] = vars_ + i;
      b_[i] = Num(rows[i].rhs);
      for (const auto& [var, coef] : rows[i].terms) t_[i][var] -= Num(coef);
    }
    sign_ = lp.maximize ? 1 : -1;
    objective_.assign(lp.objective.begin(), lp.objective.end());
  }

  Solution run() {
    Solution sol;
    if (!phase_one()) {
      sol.status = Status::Infeasible;
      return sol;
    }
    load_objective();
    if (!optimize()) {
      sol.status = Status::Unbounded;
      return sol;
    }
    sol.status = Status::Optimal;
    sol.x.assign(vars_, 0.0);
    for (std::size_t i = 0; i < basic_.size(); ++i) {
      if (basic_[i] < vars_) sol.x[basic_[i]] = Arith<Num>::to_double(b_[i]);
    }
    Num value = obj0_;
    if (sign_ < 0) value = -value;
    finish(sol, value);
    return sol;
  }

 private:
  void finish(Solution& sol, const Num& value);

  int cols() const { return static_cast<int>(nonbasic_.size()); }
  int rows() const { return static_cast<int>(basic_.size()); }

  void pivot(int r, int e) {
    const Num a = t_[r][e];
    const int n_cols = cols();
    b_[r] = -b_[r] / a;
    for (int j = 0; j < n_cols; ++j) {
      if (j == e) continue;
      if (!arith_.zero(t_[r][j])) t_[r][j] = -t_[r][j] / a;
    }
    t_[r][e] = Num(1) / a;
    auto substitute = [&](std::vector<Num>& row, Num& constant) {
      const Num c = row[e];
      if (arith_.zero(c)) return;
      constant += c * b_[r];
      for (int j = 0; j < n_cols; ++j) {
        if (j == e) continue;
        if (!arith_.zero(t_[r][j])) row[j] += c * t_[r][j];
      }
      row[e] = c * t_[r][e];
    };
    for (int i = 0; i < rows(); ++i) {
      if (i != r) substitute(t_[i], b_[i]);
    }
    substitute(obj_, obj0_);
    std::swap(basic_[r], nonbasic_[e]);
  }

  // Bland's rule. Returns false when unbounded.
  bool optimize() {
    for (;;) {
      int enter = -1;
      for (int j = 0; j < cols(); ++j) {
        if (arith_.positive(obj_[j]) && (enter < 0 || nonbasic_[j] < nonbasic_[enter])) enter = j;
      }
      if (enter < 0) return true;
      int leave = -1;
      Num best(0);
      for (int i = 0; i < rows(); ++i) {
        if (!arith_.negative(t_[i][enter])) continue;
        Num ratio = b_[i] / -t_[i][enter];
        bool better = leave < 0;
        if (!better) {
          const Num diff = ratio - best;
          better = arith_.negative(diff) || (arith_.zero(diff) && basic_[i] < basic_[leave]);
        }
        if (better) {
          leave = i;
          best = ratio;
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
  }

  bool phase_one() {
    int worst = -1;
    for (int i = 0; i < rows(); ++i) {
      if (arith_.negative(b_[i]) && (worst < 0 || b_[i] < b_[worst])) worst = i;
    }
    if (worst < 0) return true;
    const int aux = vars_ + rows();
    const int aux_col = cols();
    nonbasic_.push_back(aux);
    for (auto& row : t_) row.push_back(Num(1));
    obj_.assign(cols(), Num(0));
    obj_[aux_col] = Num(-1);
    obj0_ = Num(0);
    pivot(worst, aux_col);
    optimize();
    if (arith_.negative(obj0_)) return false;
    // Drive the auxiliary variable out of the basis if it is still there.
    for (int i = 0; i < rows(); ++i) {
      if (basic_[i] != aux) continue;
      for (int j = 0; j < cols(); ++j) {
        if (!arith_.zero(t_[i][j])) {
          pivot(i, j);
          break;
        }
      }
      break;
    }
    int col = -1;
    for (int j = 0; j < cols(); ++j) {
      if (nonbasic_[j] == aux) col = j;
    }
    if (col < 0) {
      // Degenerate row that is identically zero; the aux stays basic at 0.
      for (int i = 0; i < rows(); ++i) {
        if (basic_[i] == aux) {
          basic_.erase(basic_.begin() + i);
          b_.erase(b_.begin() + i);
          t_.erase(t_.begin() + i);
          break;
        }
      }
      return true;
    }
    nonbasic_.erase(nonbasic_.begin() + col);
    for (auto& row : t_) row.erase(row.begin() + col);
    return true;
  }

  void load_objective() {
    obj_.assign(cols(), Num(0));
    obj0_ = Num(0);
    std::vector<int> col_of(vars_ + rows() + 1, -1), row_of(vars_ + rows() + 1, -1);
    for (int j = 0; j < cols(); ++j) col_of[nonbasic_[j]] = j;
    for (int i = 0; i < rows(); ++i) row_of[basic_[i]] = i;
    for (int v = 0; v < vars_; ++v) {
      if (objective_[v] == 0) continue;
      const Num c(sign_ * objective_[v]);
      if (col_of[v] >= 0) {
        obj_[col_of[v]] += c;
      } else {
        const int i = row_of[v];
        obj0_ += c * b_[i];
        for (int j = 0; j < cols(); ++j) obj_[j] += c * t_[i][j];
      }
    }
  }

  Arith<Num> arith_;
  int vars_;
  int sign_ = 1;
  std::vector<long> objective_;
  std::vector<Num> b_;
  std::vector<std::vector<Num>> t_;
  std::vector<Num> obj_;
  Num obj0_{0};
  std::vector<int> basic_;
  std::vector<int> nonbasic_;
};

template <>
void Dictionary<mpq_class>::finish(Solution& sol, const mpq_class& value) {
  sol.exact = true;
  sol.value = value;
  sol.approx = value.get_d();
}

template <>
void Dictionary<double>::finish(Solution& sol, const double& value) {
  sol.exact = false;
  sol.approx = value;
}

}  // namespace

Solution solve_exact(const LinearProgram& lp) {
  return Dictionary<mpq_class>(lp, Arith<mpq_class>{}).run();
}

Solution solve_float(const LinearProgram& lp, double tolerance) {
  Arith<double> arith;
  arith.eps = tolerance;
  return Dictionary<double>(lp, arith).run();
}

std::string to_string(Status s) {
  switch (s) {
    case Status::Optimal:
      return "optimal";
    case Status::Infeasible:
      return "infeasible";
    case Status::Unbounded:
      return "unbounded";
  }
  return "unknown";
}

}  // namespace fdsrank::lp
