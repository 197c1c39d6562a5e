#pragma once

#include "fhtw/hypergraph.hpp"

#include <string>
#include <utility>
#include <vector>

namespace fhtw {

enum class Sense { Ge, Le, Eq };
enum class LpStatus { Optimal, Infeasible, Unbounded, NumericalFailure };

const char* to_string(LpStatus s);

template <typename Scalar = double>
struct LinearProgram {
  struct Row {
    std::vector<std::pair<int, Scalar>> terms;  // (variable, coefficient)
    Sense sense;
    Scalar rhs;
  };

  // minimize objective·x subject to rows, lower <= x <= upper
  Vector<Scalar> objective;
  Vector<Scalar> lower, upper;
  std::vector<Row> rows;

  LinearProgram() = default;
  explicit LinearProgram(int nvars, Scalar cost = 0)
      : objective(Vector<Scalar>::Constant(nvars, cost)),
        lower(Vector<Scalar>::Zero(nvars)),
        upper(Vector<Scalar>::Ones(nvars)) {}

  int num_vars() const { return static_cast<int>(objective.size()); }
  int num_rows() const { return static_cast<int>(rows.size()); }

  int add_variable(Scalar cost, Scalar lo = 0, Scalar hi = 1) {
    const auto n = objective.size();
    objective.conservativeResize(n + 1);
    lower.conservativeResize(n + 1);
    upper.conservativeResize(n + 1);
    objective(n) = cost;
    lower(n) = lo;
    upper(n) = hi;
    return static_cast<int>(n);
  }

  void add_row(std::vector<std::pair<int, Scalar>> terms, Sense sense, Scalar rhs) {
    rows.push_back({std::move(terms), sense, rhs});
  }
};

template <typename Scalar = double>
struct LpSolution {
  LpStatus status = LpStatus::NumericalFailure;
  Vector<Scalar> x;
  Scalar objective = 0;
  // one multiplier per row; >= 0 on Ge rows, <= 0 on Le rows
  Vector<Scalar> duals;
  Scalar dual_objective = 0;
  // max(0, dual - primal): weak duality violation of the returned certificate
  Scalar duality_residual = 0;
  // primal - dual
  Scalar gap = 0;
  Scalar primal_residual = 0;
  long pivots = 0;

  bool optimal() const { return status == LpStatus::Optimal; }
};

template <typename Scalar>
LpSolution<Scalar> solve_lp(const LinearProgram<Scalar>& p);

// same as solve_lp with the listed variables fixed at 0
template <typename Scalar>
LpSolution<Scalar> solve_lp_restricted(const LinearProgram<Scalar>& p, const std::vector<int>& zero_vars);

struct LpStats {
  long solves = 0;
  long failures = 0;
  double max_duality_residual = 0;
  double max_gap = 0;
  double max_primal_residual = 0;
};

// process-wide counters over every optimal solve
LpStats lp_stats();
void reset_lp_stats();

std::string dump_lp(const LinearProgram<double>& p);

extern template LpSolution<double> solve_lp(const LinearProgram<double>&);
extern template LpSolution<long double> solve_lp(const LinearProgram<long double>&);
extern template LpSolution<double> solve_lp_restricted(const LinearProgram<double>&, const std::vector<int>&);
extern template LpSolution<long double> solve_lp_restricted(const LinearProgram<long double>&,
                                                            const std::vector<int>&);

}  // namespace fhtw
