#ifndef FDSRANK_LP_HPP_
#define FDSRANK_LP_HPP_

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace fdsrank::lp {

enum class Relation { LessEq, GreaterEq, Equal };

// Integer-coefficient linear program over non-negative variables.
struct LinearProgram {
  struct Row {
    std::vector<std::pair<int, long>> terms;  // (variable, coefficient)
    Relation relation = Relation::LessEq;
    long rhs = 0;
  };

  int num_vars = 0;
  bool maximize = true;
  std::vector<long> objective;  // one coefficient per variable
  std::vector<Row> rows;

  explicit LinearProgram(int vars = 0) : num_vars(vars), objective(vars, 0) {}
  void add_row(std::vector<std::pair<int, long>> terms, Relation rel, long rhs) {
    rows.push_back({std::move(terms), rel, rhs});
  }
};

enum class Status { Optimal, Infeasible, Unbounded };

struct Solution {
  Status status = Status::Infeasible;
  bool exact = false;
  mpq_class value;         // valid when exact
  double approx = 0.0;     // always set for Optimal
  std::vector<double> x;   // primal values
};

// Dictionary simplex with Bland's rule; terminates on degenerate programs.
Solution solve_exact(const LinearProgram& lp);
Solution solve_float(const LinearProgram& lp, double tolerance = 1e-9);

std::string to_string(Status s);

}  // namespace fdsrank::lp

#endif  // FDSRANK_LP_HPP_
