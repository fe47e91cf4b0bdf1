// Copyright 2026 The wbrl Authors.
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

#include "wbrl/transport.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <deque>
#include <limits>
#include <stdexcept>
#include <vector>

namespace wbrl {

double OtSolution::dual_objective(const ActionDistribution& target,
                                  const ActionDistribution& source) const {
  double s = 0.0;
  for (int i = 0; i < target.size(); ++i) s += dual_target[static_cast<std::size_t>(i)] * target[i];
  for (int j = 0; j < source.size(); ++j) s += dual_source[static_cast<std::size_t>(j)] * source[j];
  return s;
}

double OtSolution::marginal_violation(const ActionDistribution& target,
                                      const ActionDistribution& source) const {
  const int n = target.size();
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    double row = 0.0;
    for (int j = 0; j < n; ++j) row += plan[static_cast<std::size_t>(i) * n + j];
    worst = std::max(worst, std::abs(row - target[i]));
  }
  for (int j = 0; j < n; ++j) {
    double col = 0.0;
    for (int i = 0; i < n; ++i) col += plan[static_cast<std::size_t>(i) * n + j];
    worst = std::max(worst, std::abs(col - source[j]));
  }
  return worst;
}

namespace {

// Marginal nudge used only to steer pivot selection; the final basis is
// re-solved against the unperturbed marginals.
constexpr double kPerturbation = 1e-13;
constexpr int kStallLimit = 50;  // consecutive zero-step pivots before Bland's rule

struct BasicCell {
  int i = 0;
  int j = 0;
  double value = 0.0;
};

// Tree node ids: rows are 0..n-1, columns are n..2n-1.
int row_node(int i) { return i; }
int col_node(int n, int j) { return n + j; }

struct Basis {
  int n = 0;
  std::vector<BasicCell> cells;  // exactly 2n-1 entries, a spanning tree

  std::vector<std::vector<int>> adjacency() const {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(2 * n));
    for (int c = 0; c < static_cast<int>(cells.size()); ++c) {
      adj[static_cast<std::size_t>(row_node(cells[static_cast<std::size_t>(c)].i))].push_back(c);
      adj[static_cast<std::size_t>(col_node(n, cells[static_cast<std::size_t>(c)].j))].push_back(c);
    }
    return adj;
  }
};

// u_i + v_j = C_ij on basic cells, u_0 = 0; breadth-first over the tree.
void compute_duals(const Basis& basis, const CostMatrix& cost, std::vector<double>& u,
                   std::vector<double>& v) {
  const int n = basis.n;
  u.assign(static_cast<std::size_t>(n), 0.0);
  v.assign(static_cast<std::size_t>(n), 0.0);
  std::vector<char> seen(static_cast<std::size_t>(2 * n), 0);
  auto adj = basis.adjacency();
  std::deque<int> queue;
  queue.push_back(row_node(0));
  seen[0] = 1;
  while (!queue.empty()) {
    int node = queue.front();
    queue.pop_front();
    for (int c : adj[static_cast<std::size_t>(node)]) {
      const BasicCell& cell = basis.cells[static_cast<std::size_t>(c)];
      int other = (node == row_node(cell.i)) ? col_node(n, cell.j) : row_node(cell.i);
      if (seen[static_cast<std::size_t>(other)]) continue;
      seen[static_cast<std::size_t>(other)] = 1;
      if (other >= n) {
        v[static_cast<std::size_t>(cell.j)] = cost.at(cell.i, cell.j) - u[static_cast<std::size_t>(cell.i)];
      } else {
        u[static_cast<std::size_t>(cell.i)] = cost.at(cell.i, cell.j) - v[static_cast<std::size_t>(cell.j)];
      }
      queue.push_back(other);
    }
  }
}

// Unique flow on the basis tree for the given marginals, by leaf elimination.
// Values can be negative when the tree is infeasible for these marginals.
void tree_flow(Basis& basis, const std::vector<double>& row_mass,
               const std::vector<double>& col_mass) {
  const int n = basis.n;
  auto adj = basis.adjacency();
  std::vector<double> remaining(static_cast<std::size_t>(2 * n));
  for (int i = 0; i < n; ++i) remaining[static_cast<std::size_t>(row_node(i))] = row_mass[static_cast<std::size_t>(i)];
  for (int j = 0; j < n; ++j) remaining[static_cast<std::size_t>(col_node(n, j))] = col_mass[static_cast<std::size_t>(j)];
  std::vector<int> degree(static_cast<std::size_t>(2 * n), 0);
  for (int node = 0; node < 2 * n; ++node) degree[static_cast<std::size_t>(node)] = static_cast<int>(adj[static_cast<std::size_t>(node)].size());
  std::vector<char> cell_done(basis.cells.size(), 0);
  std::deque<int> leaves;
  for (int node = 0; node < 2 * n; ++node) {
    if (degree[static_cast<std::size_t>(node)] == 1) leaves.push_back(node);
  }
  int assigned = 0;
  while (!leaves.empty()) {
    int node = leaves.front();
    leaves.pop_front();
    if (degree[static_cast<std::size_t>(node)] != 1) continue;  // stale entry
    int cell_index = -1;
    for (int c : adj[static_cast<std::size_t>(node)]) {
      if (!cell_done[static_cast<std::size_t>(c)]) {
        cell_index = c;
        break;
      }
    }
    if (cell_index < 0) break;  // only the root remains
    BasicCell& cell = basis.cells[static_cast<std::size_t>(cell_index)];
    cell.value = remaining[static_cast<std::size_t>(node)];
    cell_done[static_cast<std::size_t>(cell_index)] = 1;
    ++assigned;
    int other = (node == row_node(cell.i)) ? col_node(n, cell.j) : row_node(cell.i);
    remaining[static_cast<std::size_t>(other)] -= cell.value;
    remaining[static_cast<std::size_t>(node)] = 0.0;
    --degree[static_cast<std::size_t>(node)];
    --degree[static_cast<std::size_t>(other)];
    if (degree[static_cast<std::size_t>(other)] == 1) leaves.push_back(other);
  }
  if (assigned != static_cast<int>(basis.cells.size())) {
    throw std::logic_error("tree_flow: basis is not a spanning tree");
  }
}

// North-west-corner walk; returns exactly 2n-1 cells forming a staircase tree.
Basis northwest_corner(int n, std::vector<double> a, std::vector<double> b) {
  Basis basis;
  basis.n = n;
  basis.cells.reserve(static_cast<std::size_t>(2 * n - 1));
  int i = 0;
  int j = 0;
  while (static_cast<int>(basis.cells.size()) < 2 * n - 1) {
    BasicCell cell;
    cell.i = i;
    cell.j = j;
    if (i == n - 1 && j == n - 1) {
      cell.value = a[static_cast<std::size_t>(i)];
      basis.cells.push_back(cell);
      break;
    }
    if (i == n - 1) {
      cell.value = b[static_cast<std::size_t>(j)];
      a[static_cast<std::size_t>(i)] -= cell.value;
      basis.cells.push_back(cell);
      ++j;
    } else if (j == n - 1) {
      cell.value = a[static_cast<std::size_t>(i)];
      b[static_cast<std::size_t>(j)] -= cell.value;
      basis.cells.push_back(cell);
      ++i;
    } else if (a[static_cast<std::size_t>(i)] <= b[static_cast<std::size_t>(j)]) {
      cell.value = a[static_cast<std::size_t>(i)];
      b[static_cast<std::size_t>(j)] -= cell.value;
      basis.cells.push_back(cell);
      ++i;
    } else {
      cell.value = b[static_cast<std::size_t>(j)];
      a[static_cast<std::size_t>(i)] -= cell.value;
      basis.cells.push_back(cell);
      ++j;
    }
  }
  return basis;
}

// Tree path between two nodes as a sequence of cell indices.
std::vector<int> tree_path(const Basis& basis, int from_node, int to_node) {
  const int n = basis.n;
  auto adj = basis.adjacency();
  std::vector<int> parent_cell(static_cast<std::size_t>(2 * n), -1);
  std::vector<int> parent_node(static_cast<std::size_t>(2 * n), -1);
  std::vector<char> seen(static_cast<std::size_t>(2 * n), 0);
  std::deque<int> queue;
  queue.push_back(from_node);
  seen[static_cast<std::size_t>(from_node)] = 1;
  while (!queue.empty()) {
    int node = queue.front();
    queue.pop_front();
    if (node == to_node) break;
    for (int c : adj[static_cast<std::size_t>(node)]) {
      const BasicCell& cell = basis.cells[static_cast<std::size_t>(c)];
      int other = (node == row_node(cell.i)) ? col_node(n, cell.j) : row_node(cell.i);
      if (seen[static_cast<std::size_t>(other)]) continue;
      seen[static_cast<std::size_t>(other)] = 1;
      parent_cell[static_cast<std::size_t>(other)] = c;
      parent_node[static_cast<std::size_t>(other)] = node;
      queue.push_back(other);
    }
  }
  std::vector<int> path;
  int node = to_node;
  while (node != from_node) {
    path.push_back(parent_cell[static_cast<std::size_t>(node)]);
    node = parent_node[static_cast<std::size_t>(node)];
  }
  std::reverse(path.begin(), path.end());
  return path;
}

bool cell_less(int i1, int j1, int i2, int j2) {
  return i1 < i2 || (i1 == i2 && j1 < j2);
}

// Node membership of the component containing `start` after cell `removed`
// is deleted from the tree.
std::vector<char> component_after_removal(const Basis& basis, int removed, int start) {
  const int n = basis.n;
  auto adj = basis.adjacency();
  std::vector<char> in(static_cast<std::size_t>(2 * n), 0);
  std::deque<int> queue;
  queue.push_back(start);
  in[static_cast<std::size_t>(start)] = 1;
  while (!queue.empty()) {
    int node = queue.front();
    queue.pop_front();
    for (int c : adj[static_cast<std::size_t>(node)]) {
      if (c == removed) continue;
      const BasicCell& cell = basis.cells[static_cast<std::size_t>(c)];
      int other = (node == row_node(cell.i)) ? col_node(n, cell.j) : row_node(cell.i);
      if (in[static_cast<std::size_t>(other)]) continue;
      in[static_cast<std::size_t>(other)] = 1;
      queue.push_back(other);
    }
  }
  return in;
}

}  // namespace

OtSolution wasserstein_exact(const ActionDistribution& target, const ActionDistribution& source,
                             const CostMatrix& cost) {
  if (!same_space(target.space(), source.space()) || target.size() != cost.size()) {
    throw std::invalid_argument("wasserstein_exact: distribution and cost sizes disagree");
  }
  const int n = target.size();
  const double cost_scale = std::max(1.0, cost.max_entry());
  const double reduced_cost_tol = 1e-11 * cost_scale;

  // Phase 1: primal simplex on nudged marginals. The nudge keeps every
  // marginal strictly positive and breaks most ratio-test ties.
  std::vector<double> a(static_cast<std::size_t>(n));
  std::vector<double> b(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) a[static_cast<std::size_t>(i)] = target[i] + kPerturbation * (i + 1);
  for (int j = 0; j < n; ++j) b[static_cast<std::size_t>(j)] = source[j] + kPerturbation * (j + 1);

  Basis basis = northwest_corner(n, a, b);
  std::vector<char> is_basic(static_cast<std::size_t>(n) * n, 0);
  for (const BasicCell& cell : basis.cells) {
    is_basic[static_cast<std::size_t>(cell.i) * n + cell.j] = 1;
  }

  std::vector<double> u;
  std::vector<double> v;
  const int pivot_cap = 50 * n * n + 1000;
  int iterations = 0;
  int stall = 0;
  bool bland = false;
  bool optimal = false;

  while (iterations < pivot_cap) {
    compute_duals(basis, cost, u, v);

    int enter_i = -1;
    int enter_j = -1;
    double best = -reduced_cost_tol;
    for (int i = 0; i < n && !(bland && enter_i >= 0); ++i) {
      for (int j = 0; j < n; ++j) {
        if (is_basic[static_cast<std::size_t>(i) * n + j]) continue;
        double r = cost.at(i, j) - u[static_cast<std::size_t>(i)] - v[static_cast<std::size_t>(j)];
        if (r < best) {
          best = r;
          enter_i = i;
          enter_j = j;
          if (bland) break;  // first eligible cell in scan order
        }
      }
    }
    if (enter_i < 0) {
      optimal = true;
      break;
    }
    ++iterations;

    // The entering cell closes a unique cycle with the tree path from its row
    // to its column. Signs alternate; path cells at even positions shrink.
    std::vector<int> path = tree_path(basis, row_node(enter_i), col_node(n, enter_j));
    double theta = std::numeric_limits<double>::infinity();
    int leave_pos = -1;
    for (std::size_t k = 0; k < path.size(); k += 2) {
      const BasicCell& cell = basis.cells[static_cast<std::size_t>(path[k])];
      if (cell.value < theta ||
          (cell.value == theta && leave_pos >= 0 &&
           cell_less(cell.i, cell.j, basis.cells[static_cast<std::size_t>(path[static_cast<std::size_t>(leave_pos)])].i,
                     basis.cells[static_cast<std::size_t>(path[static_cast<std::size_t>(leave_pos)])].j))) {
        theta = cell.value;
        leave_pos = static_cast<int>(k);
      }
    }
    for (std::size_t k = 0; k < path.size(); ++k) {
      BasicCell& cell = basis.cells[static_cast<std::size_t>(path[k])];
      cell.value += (k % 2 == 0) ? -theta : theta;
    }
    BasicCell& leaving = basis.cells[static_cast<std::size_t>(path[static_cast<std::size_t>(leave_pos)])];
    is_basic[static_cast<std::size_t>(leaving.i) * n + leaving.j] = 0;
    is_basic[static_cast<std::size_t>(enter_i) * n + enter_j] = 1;
    leaving.i = enter_i;
    leaving.j = enter_j;
    leaving.value = theta;

    if (theta < 1e-15) {
      if (++stall >= kStallLimit) bland = true;
    } else {
      stall = 0;
    }
  }

  // Phase 2: the basis is dual feasible for the true marginals (reduced costs
  // do not depend on marginals), so re-solve its flow exactly. If the nudge
  // hid a degenerate corner the flow can dip negative; dual-simplex pivots
  // restore primal feasibility while keeping reduced costs nonnegative.
  const std::vector<double>& true_a = target.mass();
  const std::vector<double>& true_b = source.mass();
  tree_flow(basis, true_a, true_b);

  int repair_cap = 10 * n * n + 100;
  bool repaired = true;
  while (repair_cap-- > 0) {
    int worst = -1;
    for (int c = 0; c < static_cast<int>(basis.cells.size()); ++c) {
      const BasicCell& cell = basis.cells[static_cast<std::size_t>(c)];
      if (cell.value < 0.0 &&
          (worst < 0 || cell.value < basis.cells[static_cast<std::size_t>(worst)].value ||
           (cell.value == basis.cells[static_cast<std::size_t>(worst)].value &&
            cell_less(cell.i, cell.j, basis.cells[static_cast<std::size_t>(worst)].i,
                      basis.cells[static_cast<std::size_t>(worst)].j)))) {
        worst = c;
      }
    }
    if (worst < 0) break;
    ++iterations;

    const BasicCell leaving = basis.cells[static_cast<std::size_t>(worst)];
    compute_duals(basis, cost, u, v);
    // Entering must cross the cut left by the leaving cell with the opposite
    // row/column orientation, so that raising it raises the leaving flow.
    std::vector<char> in_a = component_after_removal(basis, worst, row_node(leaving.i));
    int enter_i = -1;
    int enter_j = -1;
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (is_basic[static_cast<std::size_t>(i) * n + j]) continue;
        bool row_in_a = in_a[static_cast<std::size_t>(row_node(i))] != 0;
        bool col_in_a = in_a[static_cast<std::size_t>(col_node(n, j))] != 0;
        if (row_in_a || !col_in_a) continue;  // need row in B, column in A
        double r = cost.at(i, j) - u[static_cast<std::size_t>(i)] - v[static_cast<std::size_t>(j)];
        if (r < best) {
          best = r;
          enter_i = i;
          enter_j = j;
        }
      }
    }
    if (enter_i < 0) {
      repaired = false;  // cannot happen on a complete bipartite instance
      break;
    }
    is_basic[static_cast<std::size_t>(leaving.i) * n + leaving.j] = 0;
    is_basic[static_cast<std::size_t>(enter_i) * n + enter_j] = 1;
    BasicCell& slot = basis.cells[static_cast<std::size_t>(worst)];
    slot.i = enter_i;
    slot.j = enter_j;
    slot.value = 0.0;
    tree_flow(basis, true_a, true_b);
  }

  compute_duals(basis, cost, u, v);

  OtSolution solution;
  solution.plan.assign(static_cast<std::size_t>(n) * n, 0.0);
  solution.distance = 0.0;
  for (const BasicCell& cell : basis.cells) {
    double value = cell.value;
    if (value < 0.0) value = 0.0;  // leaf-elimination rounding wiggle
    solution.plan[static_cast<std::size_t>(cell.i) * n + cell.j] = value;
    solution.distance += cost.at(cell.i, cell.j) * value;
  }
  solution.dual_target = std::move(u);
  solution.dual_source = std::move(v);
  solution.iterations = iterations;
  solution.converged = optimal && repaired && repair_cap >= 0;
  return solution;
}

double wasserstein_1d_closed_form(const ActionDistribution& target,
                                  const ActionDistribution& source) {
  if (!same_space(target.space(), source.space())) {
    throw std::invalid_argument("wasserstein_1d_closed_form: mismatched action spaces");
  }
  double cdf_gap = 0.0;
  double total = 0.0;
  for (int k = 0; k + 1 < target.size(); ++k) {
    cdf_gap += target[k] - source[k];
    total += std::abs(cdf_gap);
  }
  return total;
}

OtSolution sinkhorn_approx(const ActionDistribution& target, const ActionDistribution& source,
                           const CostMatrix& cost, const SinkhornOptions& options) {
  if (!same_space(target.space(), source.space()) || target.size() != cost.size()) {
    throw std::invalid_argument("sinkhorn_approx: distribution and cost sizes disagree");
  }
  if (options.reg <= 0.0) {
    throw std::invalid_argument("sinkhorn_approx: reg must be positive");
  }
  const int n = target.size();

  // Plans are parameterized against the product measure, so zero-mass atoms
  // must be lifted off zero before taking logs.
  std::vector<double> p(target.mass());
  std::vector<double> q(source.mass());
  for (double& x : p) x += 1e-12;
  for (double& x : q) x += 1e-12;
  double psum = 0.0;
  double qsum = 0.0;
  for (double x : p) psum += x;
  for (double x : q) qsum += x;
  for (double& x : p) x /= psum;
  for (double& x : q) x /= qsum;
  std::vector<double> logp(static_cast<std::size_t>(n));
  std::vector<double> logq(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) logp[static_cast<std::size_t>(i)] = std::log(p[static_cast<std::size_t>(i)]);
  for (int j = 0; j < n; ++j) logq[static_cast<std::size_t>(j)] = std::log(q[static_cast<std::size_t>(j)]);

  std::vector<double> f(static_cast<std::size_t>(n), 0.0);
  std::vector<double> g(static_cast<std::size_t>(n), 0.0);
  std::vector<double> scratch(static_cast<std::size_t>(n));

  auto log_sum_exp = [&scratch](int count) {
    double m = -std::numeric_limits<double>::infinity();
    for (int k = 0; k < count; ++k) m = std::max(m, scratch[static_cast<std::size_t>(k)]);
    double s = 0.0;
    for (int k = 0; k < count; ++k) s += std::exp(scratch[static_cast<std::size_t>(k)] - m);
    return m + std::log(s);
  };

  // Column marginal violation in L1; row marginals are exact right after an
  // f update by construction.
  auto column_violation = [&](double eps) {
    double total = 0.0;
    for (int j = 0; j < n; ++j) {
      double col = 0.0;
      for (int i = 0; i < n; ++i) {
        col += p[static_cast<std::size_t>(i)] * q[static_cast<std::size_t>(j)] *
               std::exp((f[static_cast<std::size_t>(i)] + g[static_cast<std::size_t>(j)] - cost.at(i, j)) / eps);
      }
      total += std::abs(col - q[static_cast<std::size_t>(j)]);
    }
    return total;
  };

  double eps = options.reg;
  std::vector<double> schedule;
  if (options.eps_scaling) {
    double e = std::max(options.reg, std::max(1.0, cost.max_entry()));
    while (e > options.reg) {
      schedule.push_back(e);
      e /= 2.0;
    }
  }
  schedule.push_back(options.reg);

  int iterations = 0;
  bool converged = false;
  for (std::size_t stage = 0; stage < schedule.size(); ++stage) {
    eps = schedule[stage];
    bool final_stage = (stage + 1 == schedule.size());
    double stage_tol = final_stage ? options.tol : std::max(options.tol, 1e-4);
    while (iterations < options.max_iter) {
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          scratch[static_cast<std::size_t>(j)] =
              logq[static_cast<std::size_t>(j)] + (g[static_cast<std::size_t>(j)] - cost.at(i, j)) / eps;
        }
        f[static_cast<std::size_t>(i)] = -eps * log_sum_exp(n);
      }
      for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
          scratch[static_cast<std::size_t>(i)] =
              logp[static_cast<std::size_t>(i)] + (f[static_cast<std::size_t>(i)] - cost.at(i, j)) / eps;
        }
        g[static_cast<std::size_t>(j)] = -eps * log_sum_exp(n);
      }
      ++iterations;
      // One extra row rebalance so both marginal errors are measured against
      // a row-feasible plan.
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          scratch[static_cast<std::size_t>(j)] =
              logq[static_cast<std::size_t>(j)] + (g[static_cast<std::size_t>(j)] - cost.at(i, j)) / eps;
        }
        f[static_cast<std::size_t>(i)] = -eps * log_sum_exp(n);
      }
      double violation = column_violation(eps);
      if (violation <= stage_tol) {
        if (final_stage) converged = true;
        break;
      }
      if (!final_stage && iterations >= options.max_iter * static_cast<int>(stage + 1) /
                                            static_cast<int>(schedule.size())) {
        break;  // spend the remaining budget on colder stages
      }
    }
  }

  OtSolution solution;
  solution.plan.assign(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      solution.plan[static_cast<std::size_t>(i) * n + j] =
          p[static_cast<std::size_t>(i)] * q[static_cast<std::size_t>(j)] *
          std::exp((f[static_cast<std::size_t>(i)] + g[static_cast<std::size_t>(j)] - cost.at(i, j)) / eps);
    }
  }

  // Round onto the transport polytope of the true marginals: scale rows and
  // columns down to feasibility, then patch the deficit with a product term.
  {
    std::vector<double>& t = solution.plan;
    for (int i = 0; i < n; ++i) {
      double row = 0.0;
      for (int j = 0; j < n; ++j) row += t[static_cast<std::size_t>(i) * n + j];
      double scale = (row > target[i] && row > 0.0) ? target[i] / row : 1.0;
      for (int j = 0; j < n; ++j) t[static_cast<std::size_t>(i) * n + j] *= scale;
    }
    for (int j = 0; j < n; ++j) {
      double col = 0.0;
      for (int i = 0; i < n; ++i) col += t[static_cast<std::size_t>(i) * n + j];
      double scale = (col > source[j] && col > 0.0) ? source[j] / col : 1.0;
      for (int i = 0; i < n; ++i) t[static_cast<std::size_t>(i) * n + j] *= scale;
    }
    std::vector<double> row_deficit(static_cast<std::size_t>(n), 0.0);
    std::vector<double> col_deficit(static_cast<std::size_t>(n), 0.0);
    double deficit_total = 0.0;
    for (int i = 0; i < n; ++i) {
      double row = 0.0;
      for (int j = 0; j < n; ++j) row += t[static_cast<std::size_t>(i) * n + j];
      row_deficit[static_cast<std::size_t>(i)] = target[i] - row;
      deficit_total += row_deficit[static_cast<std::size_t>(i)];
    }
    for (int j = 0; j < n; ++j) {
      double col = 0.0;
      for (int i = 0; i < n; ++i) col += t[static_cast<std::size_t>(i) * n + j];
      col_deficit[static_cast<std::size_t>(j)] = source[j] - col;
    }
    if (deficit_total > 0.0) {
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          t[static_cast<std::size_t>(i) * n + j] += row_deficit[static_cast<std::size_t>(i)] *
                                                    col_deficit[static_cast<std::size_t>(j)] /
                                                    deficit_total;
        }
      }
    }
  }

  solution.distance = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      solution.distance += cost.at(i, j) * solution.plan[static_cast<std::size_t>(i) * n + j];
    }
  }
  solution.dual_target = std::move(f);
  solution.dual_source = std::move(g);
  solution.iterations = iterations;
  solution.converged = converged;
  return solution;
}

}  // namespace wbrl
