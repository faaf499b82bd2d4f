// Copyright 2026 The imprecise-ror Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Linear and mixed-integer programming behind a small solver contract:
// sparse rows with {<=, =, >=} senses, bounded variables and a linear
// objective. Results are deterministic for identical input.

#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <vector>

namespace ror::lp {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

enum class Sense { le, eq, ge };

struct Term {
  int var;
  double coef;
};

struct Row {
  std::vector<Term> terms;
  Sense sense = Sense::ge;
  double rhs = 0.0;
  std::string name;
};

struct Variable {
  double lower = 0.0;
  double upper = kInf;
  bool integer = false;
  std::string name;
};

struct Problem {
  std::vector<Variable> vars;
  std::vector<Row> rows;
  std::vector<Term> objective;
  bool maximize = false;

  int add_var(Variable v) {
    vars.push_back(std::move(v));
    return static_cast<int>(vars.size()) - 1;
  }
  void add_row(Row r) { rows.push_back(std::move(r)); }
};

enum class Status { optimal, infeasible, unbounded };

const char* to_string(Status s);

struct Solution {
  Status status = Status::infeasible;
  double objective = 0.0;
  std::vector<double> x;
  int iterations = 0;
};

// Largest violation over all rows and variable bounds.
double max_residual(const Problem& p, std::span<const double> x);

class Solver {
 public:
  virtual ~Solver() = default;
  virtual Solution solve(const Problem& p) const = 0;
};

// Dense two-phase tableau simplex. Dantzig pricing, falling back to Bland's
// rule after a run of degenerate pivots; ratio-test ties break on the
// smallest basic column, so runs are reproducible.
class DenseSimplex final : public Solver {
 public:
  struct Options {
    double pivot_tol = 1e-10;
    double feas_tol = 1e-9;
    int max_iterations = 200000;
    int degenerate_switch = 40;
  };

  DenseSimplex() = default;
  explicit DenseSimplex(Options opts) : opts_(opts) {}

  Solution solve(const Problem& p) const override;

 private:
  Options opts_;
};

// The process-wide default engine.
const Solver& default_solver();

struct MilpOptions {
  long node_limit = 200000;
  double integrality_tol = 1e-6;
  // The objective takes integer values at integer points, which allows
  // pruning nodes that cannot improve the incumbent by a whole unit.
  bool integral_objective = false;
};

struct MilpSolution {
  Status status = Status::infeasible;
  double objective = 0.0;
  std::vector<double> x;
  long nodes = 0;
  // False when the node limit stopped the search before optimality was
  // proven.
  bool proven = true;
};

// Depth-first branch and bound on the LP relaxation; `integer` variables
// must have finite bounds.
MilpSolution solve_milp(const Problem& p, const Solver& lp, const MilpOptions& opts = {});

// CPLEX LP file format, for checking a model with an external solver.
std::string to_lp_format(const Problem& p);

}  // namespace ror::lp
