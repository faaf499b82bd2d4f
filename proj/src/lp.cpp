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

#include "ror/lp.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "ror/error.hpp"

namespace ror::lp {

const char* to_string(Status s) {
  switch (s) {
    case Status::optimal: return "optimal";
    case Status::infeasible: return "infeasible";
    case Status::unbounded: return "unbounded";
  }
  return "unknown";
}

double max_residual(const Problem& p, std::span<const double> x) {
  double worst = 0.0;
  for (const auto& row : p.rows) {
    double lhs = 0.0;
    for (const auto& t : row.terms) lhs += t.coef * x[static_cast<std::size_t>(t.var)];
    double viol = 0.0;
    switch (row.sense) {
      case Sense::le: viol = lhs - row.rhs; break;
      case Sense::ge: viol = row.rhs - lhs; break;
      case Sense::eq: viol = std::abs(lhs - row.rhs); break;
    }
    worst = std::max(worst, viol);
  }
  for (std::size_t v = 0; v < p.vars.size(); ++v) {
    worst = std::max(worst, p.vars[v].lower - x[v]);
    worst = std::max(worst, x[v] - p.vars[v].upper);
  }
  return worst;
}

namespace {

// Original variable = offset + sum(sign * column).
struct ColumnMap {
  double offset = 0.0;
  int col = -1;
  double sign = 1.0;
  int neg_col = -1;  // free variables: x = col - neg_col
};

class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_((rows + 1) * (cols + 1), 0.0) {}

  double& at(std::size_t r, std::size_t c) { return data_[r * (cols_ + 1) + c]; }
  double at(std::size_t r, std::size_t c) const { return data_[r * (cols_ + 1) + c]; }
  double& rhs(std::size_t r) { return at(r, cols_); }
  double& cost(std::size_t c) { return at(rows_, c); }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  void pivot(std::size_t pr, std::size_t pc) {
    const std::size_t w = cols_ + 1;
    double* prow = &data_[pr * w];
    const double inv = 1.0 / prow[pc];
    for (std::size_t c = 0; c < w; ++c) prow[c] *= inv;
    prow[pc] = 1.0;
    for (std::size_t r = 0; r <= rows_; ++r) {
      if (r == pr) continue;
      double* row = &data_[r * w];
      const double f = row[pc];
      if (f == 0.0) continue;
      for (std::size_t c = 0; c < w; ++c) row[c] -= f * prow[c];
      row[pc] = 0.0;
    }
  }

 private:
  std::size_t rows_, cols_;
  std::vector<double> data_;
};

enum class RunResult { optimal, unbounded, iteration_limit };

}  // namespace

Solution DenseSimplex::solve(const Problem& p) const {
  const double ptol = opts_.pivot_tol;

  // Columns for the structural variables.
  std::vector<ColumnMap> maps(p.vars.size());
  int ncols = 0;
  std::vector<std::pair<int, double>> upper_rows;  // (col, bound)
  for (std::size_t v = 0; v < p.vars.size(); ++v) {
    const auto& var = p.vars[v];
    auto& m = maps[v];
    if (var.lower > var.upper) {
      Solution s;
      s.status = Status::infeasible;
      return s;
    }
    if (std::isfinite(var.lower)) {
      m.offset = var.lower;
      m.col = ncols++;
      if (std::isfinite(var.upper)) upper_rows.emplace_back(m.col, var.upper - var.lower);
    } else if (std::isfinite(var.upper)) {
      m.offset = var.upper;
      m.col = ncols++;
      m.sign = -1.0;
    } else {
      m.col = ncols++;
      m.neg_col = ncols++;
    }
  }

  struct StdRow {
    std::vector<std::pair<int, double>> terms;
    Sense sense;
    double rhs;
  };
  std::vector<StdRow> rows;
  rows.reserve(p.rows.size() + upper_rows.size());
  std::vector<double> dense(static_cast<std::size_t>(ncols), 0.0);
  std::vector<int> touched;
  for (const auto& row : p.rows) {
    double rhs = row.rhs;
    touched.clear();
    for (const auto& t : row.terms) {
      const auto& m = maps[static_cast<std::size_t>(t.var)];
      rhs -= t.coef * m.offset;
      if (dense[static_cast<std::size_t>(m.col)] == 0.0) touched.push_back(m.col);
      dense[static_cast<std::size_t>(m.col)] += t.coef * m.sign;
      if (m.neg_col >= 0) {
        if (dense[static_cast<std::size_t>(m.neg_col)] == 0.0) touched.push_back(m.neg_col);
        dense[static_cast<std::size_t>(m.neg_col)] -= t.coef;
      }
    }
    StdRow sr{{}, row.sense, rhs};
    std::sort(touched.begin(), touched.end());
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
    for (int c : touched) {
      if (std::abs(dense[static_cast<std::size_t>(c)]) > 0.0)
        sr.terms.emplace_back(c, dense[static_cast<std::size_t>(c)]);
      dense[static_cast<std::size_t>(c)] = 0.0;
    }
    if (sr.terms.empty()) {
      const bool ok = (sr.sense == Sense::le && 0.0 <= rhs + opts_.feas_tol) ||
                      (sr.sense == Sense::ge && 0.0 >= rhs - opts_.feas_tol) ||
                      (sr.sense == Sense::eq && std::abs(rhs) <= opts_.feas_tol);
      if (!ok) {
        Solution s;
        s.status = Status::infeasible;
        return s;
      }
      continue;
    }
    if (sr.rhs < 0.0) {
      sr.rhs = -sr.rhs;
      for (auto& [c, a] : sr.terms) a = -a;
      if (sr.sense == Sense::le) sr.sense = Sense::ge;
      else if (sr.sense == Sense::ge) sr.sense = Sense::le;
    }
    rows.push_back(std::move(sr));
  }
  for (auto [c, ub] : upper_rows) rows.push_back({{{c, 1.0}}, Sense::le, ub});

  const std::size_t m = rows.size();
  int nslack = 0, nart = 0;
  for (const auto& r : rows) {
    if (r.sense != Sense::eq) ++nslack;
    if (r.sense != Sense::le) ++nart;
  }
  const std::size_t first_slack = static_cast<std::size_t>(ncols);
  const std::size_t first_art = first_slack + static_cast<std::size_t>(nslack);
  const std::size_t total = first_art + static_cast<std::size_t>(nart);

  Tableau T(m, total);
  std::vector<std::size_t> basis(m);
  {
    std::size_t s = first_slack, a = first_art;
    for (std::size_t r = 0; r < m; ++r) {
      for (auto [c, coef] : rows[r].terms) T.at(r, static_cast<std::size_t>(c)) = coef;
      T.rhs(r) = rows[r].rhs;
      switch (rows[r].sense) {
        case Sense::le:
          T.at(r, s) = 1.0;
          basis[r] = s++;
          break;
        case Sense::ge:
          T.at(r, s++) = -1.0;
          T.at(r, a) = 1.0;
          basis[r] = a++;
          break;
        case Sense::eq:
          T.at(r, a) = 1.0;
          basis[r] = a++;
          break;
      }
    }
  }

  int iterations = 0;
  std::vector<char> allowed(total, 1);
  std::vector<char> active_row(m, 1);

  auto run = [&]() -> RunResult {
    int degenerate = 0;
    while (true) {
      if (iterations >= opts_.max_iterations) return RunResult::iteration_limit;
      const bool bland = degenerate >= opts_.degenerate_switch;
      std::size_t enter = total;
      double best = -opts_.feas_tol;
      for (std::size_t c = 0; c < total; ++c) {
        if (!allowed[c]) continue;
        const double d = T.cost(c);
        if (d < best) {
          enter = c;
          if (bland) break;
          best = d;
        }
      }
      if (enter == total) return RunResult::optimal;
      std::size_t leave = m;
      double ratio = kInf;
      for (std::size_t r = 0; r < m; ++r) {
        if (!active_row[r]) continue;
        const double a = T.at(r, enter);
        if (a <= ptol) continue;
        const double q = T.rhs(r) / a;
        if (leave == m || q < ratio - 1e-12 || (q <= ratio + 1e-12 && basis[r] < basis[leave])) {
          ratio = std::min(ratio, q);
          leave = r;
        }
      }
      if (leave == m) return RunResult::unbounded;
      degenerate = (ratio <= 1e-12) ? degenerate + 1 : 0;
      T.pivot(leave, enter);
      basis[leave] = enter;
      ++iterations;
    }
  };

  auto set_costs = [&](const std::vector<double>& c) {
    for (std::size_t col = 0; col <= total; ++col) T.cost(col) = col < total ? c[col] : 0.0;
    for (std::size_t r = 0; r < m; ++r) {
      if (!active_row[r]) continue;
      const double cb = c[basis[r]];
      if (cb == 0.0) continue;
      for (std::size_t col = 0; col <= total; ++col) T.cost(col) -= cb * T.at(r, col);
    }
  };

  Solution sol;
  // Phase 1.
  if (nart > 0) {
    std::vector<double> c1(total, 0.0);
    for (std::size_t c = first_art; c < total; ++c) c1[c] = 1.0;
    set_costs(c1);
    if (run() == RunResult::iteration_limit)
      throw Error(ErrorCode::solver_failure, "simplex iteration limit in phase 1");
    if (-T.cost(total) > opts_.feas_tol * std::max<double>(1.0, static_cast<double>(m))) {
      sol.status = Status::infeasible;
      sol.iterations = iterations;
      return sol;
    }
    for (std::size_t r = 0; r < m; ++r) {
      if (basis[r] < first_art) continue;
      std::size_t piv = total;
      double best = ptol * 100;
      for (std::size_t c = 0; c < first_art; ++c)
        if (std::abs(T.at(r, c)) > best) {
          best = std::abs(T.at(r, c));
          piv = c;
        }
      if (piv == total) {
        active_row[r] = 0;  // redundant
        continue;
      }
      T.pivot(r, piv);
      basis[r] = piv;
      ++iterations;
    }
    for (std::size_t c = first_art; c < total; ++c) allowed[c] = 0;
  }

  // Phase 2 (minimization form).
  std::vector<double> c2(total, 0.0);
  const double dir = p.maximize ? -1.0 : 1.0;
  for (const auto& t : p.objective) {
    const auto& mp = maps[static_cast<std::size_t>(t.var)];
    c2[static_cast<std::size_t>(mp.col)] += dir * t.coef * mp.sign;
    if (mp.neg_col >= 0) c2[static_cast<std::size_t>(mp.neg_col)] -= dir * t.coef;
  }
  set_costs(c2);
  const RunResult rr = run();
  sol.iterations = iterations;
  if (rr == RunResult::iteration_limit)
    throw Error(ErrorCode::solver_failure, "simplex iteration limit in phase 2");
  if (rr == RunResult::unbounded) {
    sol.status = Status::unbounded;
    return sol;
  }

  std::vector<double> colval(total, 0.0);
  for (std::size_t r = 0; r < m; ++r)
    if (active_row[r]) colval[basis[r]] = T.rhs(r);
  sol.x.resize(p.vars.size());
  for (std::size_t v = 0; v < p.vars.size(); ++v) {
    const auto& mp = maps[v];
    double x = mp.offset + mp.sign * colval[static_cast<std::size_t>(mp.col)];
    if (mp.neg_col >= 0) x -= colval[static_cast<std::size_t>(mp.neg_col)];
    sol.x[v] = x;
  }
  double obj = 0.0;
  for (const auto& t : p.objective) obj += t.coef * sol.x[static_cast<std::size_t>(t.var)];
  sol.objective = obj;
  sol.status = Status::optimal;
  return sol;
}

const Solver& default_solver() {
  static const DenseSimplex solver;
  return solver;
}

MilpSolution solve_milp(const Problem& p, const Solver& lp, const MilpOptions& opts) {
  struct Node {
    std::vector<std::pair<double, double>> bounds;
  };
  std::vector<int> int_vars;
  for (std::size_t v = 0; v < p.vars.size(); ++v)
    if (p.vars[v].integer) int_vars.push_back(static_cast<int>(v));

  MilpSolution best;
  best.status = Status::infeasible;
  const double sense = p.maximize ? -1.0 : 1.0;  // minimize sense * obj
  double incumbent = kInf;

  Problem work = p;
  std::vector<Node> stack;
  {
    Node root;
    for (const auto& v : p.vars) root.bounds.emplace_back(v.lower, v.upper);
    stack.push_back(std::move(root));
  }
  bool saw_unbounded = false;
  while (!stack.empty()) {
    if (best.nodes >= opts.node_limit) {
      best.proven = false;
      break;
    }
    Node node = std::move(stack.back());
    stack.pop_back();
    ++best.nodes;
    for (std::size_t v = 0; v < work.vars.size(); ++v) {
      work.vars[v].lower = node.bounds[v].first;
      work.vars[v].upper = node.bounds[v].second;
    }
    const Solution s = lp.solve(work);
    if (s.status == Status::infeasible) continue;
    if (s.status == Status::unbounded) {
      saw_unbounded = true;
      continue;
    }
    const double val = sense * s.objective;
    if (val >= incumbent - 1e-9) continue;
    if (opts.integral_objective && std::ceil(val - 1e-6) >= incumbent - 1e-6) continue;

    int branch = -1;
    double frac_best = opts.integrality_tol;
    for (int v : int_vars) {
      const double x = s.x[static_cast<std::size_t>(v)];
      const double f = std::abs(x - std::round(x));
      if (f > frac_best) {
        frac_best = f;
        branch = v;
      }
    }
    if (branch < 0) {
      incumbent = val;
      best.status = Status::optimal;
      best.objective = s.objective;
      best.x = s.x;
      for (int v : int_vars) best.x[static_cast<std::size_t>(v)] = std::round(best.x[static_cast<std::size_t>(v)]);
      continue;
    }
    const double x = s.x[static_cast<std::size_t>(branch)];
    Node down = node, up = node;
    down.bounds[static_cast<std::size_t>(branch)].second = std::floor(x);
    up.bounds[static_cast<std::size_t>(branch)].first = std::ceil(x);
    // Explore the nearer side first.
    if (x - std::floor(x) < 0.5) {
      stack.push_back(std::move(up));
      stack.push_back(std::move(down));
    } else {
      stack.push_back(std::move(down));
      stack.push_back(std::move(up));
    }
  }
  if (best.status != Status::optimal && saw_unbounded) best.status = Status::unbounded;
  return best;
}

namespace {

std::string var_name(const Problem& p, int v) {
  const auto& n = p.vars[static_cast<std::size_t>(v)].name;
  return n.empty() ? "x" + std::to_string(v) : n;
}

void write_expr(std::ostringstream& os, const Problem& p, const std::vector<Term>& terms) {
  bool first = true;
  for (const auto& t : terms) {
    if (t.coef == 0.0) continue;
    os << (t.coef < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    const double a = std::abs(t.coef);
    if (a != 1.0) os << a << " ";
    os << var_name(p, t.var);
    first = false;
  }
  if (first) os << "0 " << (p.vars.empty() ? "x0" : var_name(p, 0));
}

}  // namespace

std::string to_lp_format(const Problem& p) {
  std::ostringstream os;
  os << std::setprecision(17);
  os << (p.maximize ? "Maximize\n" : "Minimize\n") << " obj: ";
  write_expr(os, p, p.objective);
  os << "\nSubject To\n";
  for (std::size_t r = 0; r < p.rows.size(); ++r) {
    const auto& row = p.rows[r];
    os << " " << (row.name.empty() ? "c" + std::to_string(r) : row.name) << ": ";
    write_expr(os, p, row.terms);
    os << (row.sense == Sense::le ? " <= " : row.sense == Sense::ge ? " >= " : " = ") << row.rhs << "\n";
  }
  os << "Bounds\n";
  for (std::size_t v = 0; v < p.vars.size(); ++v) {
    const auto& var = p.vars[v];
    const std::string name = var_name(p, static_cast<int>(v));
    if (!std::isfinite(var.lower) && !std::isfinite(var.upper)) {
      os << " " << name << " free\n";
      continue;
    }
    os << " ";
    if (std::isfinite(var.lower)) os << var.lower;
    else os << "-inf";
    os << " <= " << name;
    if (std::isfinite(var.upper)) os << " <= " << var.upper;
    os << "\n";
  }
  bool any_int = false;
  for (const auto& v : p.vars) any_int = any_int || v.integer;
  if (any_int) {
    os << "General\n";
    for (std::size_t v = 0; v < p.vars.size(); ++v)
      if (p.vars[v].integer) os << " " << var_name(p, static_cast<int>(v)) << "\n";
  }
  os << "End\n";
  return os.str();
}

}  // namespace ror::lp
