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

// Reference implementations used only by tests. They are deliberately naive
// and share no code with the library: a dense two-phase tableau simplex with
// Bland's rule, brute-force vertex enumeration for tiny transport problems,
// and a Gaussian linear solver. Slow but simple enough to trust.

#ifndef WBRL_TESTS_ORACLES_HPP_
#define WBRL_TESTS_ORACLES_HPP_

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "wbrl/rng.hpp"

namespace oracles {

// Solves A x = b by Gaussian elimination with partial pivoting.
// Returns nullopt when the matrix is (numerically) singular.
inline std::optional<std::vector<double>> gauss_solve(
    std::vector<std::vector<double>> a, std::vector<double> b) {
  const std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t row = col + 1; row < n; ++row) {
      if (std::fabs(a[row][col]) > std::fabs(a[pivot][col])) pivot = row;
    }
    if (std::fabs(a[pivot][col]) < 1e-11) return std::nullopt;
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col) continue;
      double factor = a[row][col] / a[col][col];
      if (factor == 0.0) continue;
      for (std::size_t k = col; k < n; ++k) a[row][k] -= factor * a[col][k];
      b[row] -= factor * b[col];
    }
  }
  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

struct LpResult {
  double objective = 0.0;
  std::vector<double> x;
  bool optimal = false;
};

// Maximizes c.x subject to A x = b, x >= 0 with a dense two-phase tableau
// simplex using Bland's rule throughout (no perturbation, no degeneracy
// tricks). Redundant equality rows are tolerated: their artificials stay
// basic at level zero.
inline LpResult simplex_max(const std::vector<double>& c,
                            std::vector<std::vector<double>> a,
                            std::vector<double> b) {
  const std::size_t m = a.size();
  const std::size_t n = c.size();
  for (std::size_t i = 0; i < m; ++i) {
    if (b[i] < 0) {
      b[i] = -b[i];
      for (double& v : a[i]) v = -v;
    }
  }

  // Tableau columns: n structural + m artificial + rhs.
  const std::size_t cols = n + m + 1;
  std::vector<std::vector<double>> t(m, std::vector<double>(cols, 0.0));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) t[i][j] = a[i][j];
    t[i][n + i] = 1.0;
    t[i][cols - 1] = b[i];
    basis[i] = n + i;
  }

  auto pivot = [&](std::size_t row, std::size_t col) {
    double p = t[row][col];
    for (double& v : t[row]) v /= p;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == row || t[i][col] == 0.0) continue;
      double f = t[i][col];
      for (std::size_t k = 0; k < cols; ++k) t[i][k] -= f * t[row][k];
    }
    basis[row] = col;
  };

  // Runs Bland-rule simplex on the current tableau for the objective vector
  // `obj` (maximization), restricted to columns < limit.
  auto run = [&](const std::vector<double>& obj, std::size_t limit) -> bool {
    for (int iter = 0; iter < 200000; ++iter) {
      // Reduced costs from scratch each iteration: slow, simple, safe.
      std::vector<double> y(m);
      for (std::size_t i = 0; i < m; ++i) y[i] = obj[basis[i]];
      std::size_t entering = limit;
      for (std::size_t j = 0; j < limit; ++j) {
        double reduced = obj[j];
        for (std::size_t i = 0; i < m; ++i) reduced -= y[i] * t[i][j];
        if (reduced > 1e-9) {
          entering = j;
          break;  // Bland: lowest improving index
        }
      }
      if (entering == limit) return true;
      std::size_t leave = m;
      double best_ratio = 0.0;
      for (std::size_t i = 0; i < m; ++i) {
        if (t[i][entering] > 1e-11) {
          double ratio = t[i][cols - 1] / t[i][entering];
          if (leave == m || ratio < best_ratio - 1e-15 ||
              (std::fabs(ratio - best_ratio) <= 1e-15 &&
               basis[i] < basis[leave])) {
            leave = i;
            best_ratio = ratio;
          }
        }
      }
      if (leave == m) return false;  // unbounded
      pivot(leave, entering);
    }
    return false;  // iteration cap
  };

  LpResult result;
  // Phase 1: drive artificials to zero.
  std::vector<double> phase1(cols - 1, 0.0);
  for (std::size_t j = n; j < n + m; ++j) phase1[j] = -1.0;
  if (!run(phase1, n + m)) return result;
  double infeasibility = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] >= n) infeasibility += t[i][cols - 1];
  }
  if (infeasibility > 1e-7) return result;

  // Drive zero-level artificials out of the basis; otherwise phase-2 pivots
  // could push them positive again. A row with no usable structural column
  // is redundant and stays inert (all structural coefficients zero).
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] < n) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (std::fabs(t[i][j]) > 1e-9) {
        pivot(i, j);
        break;
      }
    }
  }

  // Phase 2 over structural columns only (limit = n).
  std::vector<double> phase2(cols - 1, 0.0);
  for (std::size_t j = 0; j < n; ++j) phase2[j] = c[j];
  if (!run(phase2, n)) return result;

  result.x.assign(n, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] < n) result.x[basis[i]] = t[i][cols - 1];
  }
  result.objective = 0.0;
  for (std::size_t j = 0; j < n; ++j) result.objective += c[j] * result.x[j];
  result.optimal = true;
  return result;
}

// Minimum transport cost via the dense simplex. cost is row-major
// [target i][source j]; returns the optimal objective.
inline double lp_transport(const std::vector<double>& target,
                           const std::vector<double>& source,
                           const std::vector<std::vector<double>>& cost) {
  const std::size_t np = target.size();
  const std::size_t nq = source.size();
  const std::size_t vars = np * nq;
  std::vector<double> c(vars);
  for (std::size_t i = 0; i < np; ++i)
    for (std::size_t j = 0; j < nq; ++j) c[i * nq + j] = -cost[i][j];
  // Row sums = target, column sums = source; the last column constraint is
  // implied by the others and dropped to keep full row rank.
  std::vector<std::vector<double>> a;
  std::vector<double> b;
  for (std::size_t i = 0; i < np; ++i) {
    std::vector<double> row(vars, 0.0);
    for (std::size_t j = 0; j < nq; ++j) row[i * nq + j] = 1.0;
    a.push_back(row);
    b.push_back(target[i]);
  }
  for (std::size_t j = 0; j + 1 < nq; ++j) {
    std::vector<double> row(vars, 0.0);
    for (std::size_t i = 0; i < np; ++i) row[i * nq + j] = 1.0;
    a.push_back(row);
    b.push_back(source[j]);
  }
  LpResult r = simplex_max(c, a, b);
  if (!r.optimal) throw std::runtime_error("oracle transport LP failed");
  return -r.objective;
}

// Brute-force minimum transport cost for tiny problems: enumerate every
// candidate basis (subsets of np+nq-1 cells), solve the balance equations,
// keep the cheapest nonnegative solution. Exponential; np, nq <= 4.
inline double enumerate_transport(const std::vector<double>& target,
                                  const std::vector<double>& source,
                                  const std::vector<std::vector<double>>& cost) {
  const std::size_t np = target.size();
  const std::size_t nq = source.size();
  const std::size_t cells = np * nq;
  const std::size_t m = np + nq - 1;
  if (cells > 20) throw std::invalid_argument("enumerate_transport: too large");

  double best = std::numeric_limits<double>::infinity();
  std::vector<std::size_t> pick(m);
  // Iterate subsets of size m via bitmask.
  for (std::uint32_t mask = 0; mask < (1u << cells); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != m) continue;
    std::size_t k = 0;
    for (std::size_t cell = 0; cell < cells; ++cell) {
      if (mask & (1u << cell)) pick[k++] = cell;
    }
    // Equations: np row sums + (nq-1) column sums over the picked cells.
    std::vector<std::vector<double>> a(m, std::vector<double>(m, 0.0));
    std::vector<double> b(m, 0.0);
    for (std::size_t e = 0; e < np; ++e) b[e] = target[e];
    for (std::size_t e = 0; e + 1 < nq; ++e) b[np + e] = source[e];
    for (std::size_t v = 0; v < m; ++v) {
      std::size_t i = pick[v] / nq;
      std::size_t j = pick[v] % nq;
      a[i][v] = 1.0;
      if (j + 1 < nq) a[np + j][v] = 1.0;
    }
    auto x = gauss_solve(a, b);
    if (!x) continue;
    bool feasible = true;
    double total = 0.0;
    for (std::size_t v = 0; v < m; ++v) {
      if ((*x)[v] < -1e-9) {
        feasible = false;
        break;
      }
      total += (*x)[v] * cost[pick[v] / nq][pick[v] % nq];
    }
    if (feasible && total < best) best = total;
  }
  return best;
}

// Random point on the simplex with optional structural zeros, for stress
// tests. Always leaves at least one strictly positive coordinate.
inline std::vector<double> random_distribution(wbrl::Rng& rng, int size,
                                               double zero_fraction = 0.0) {
  std::vector<double> mass(size, 0.0);
  double total = 0.0;
  for (double& m : mass) {
    if (rng.next_double() >= zero_fraction) {
      m = -std::log(rng.next_double() + 1e-300);
      total += m;
    }
  }
  if (total == 0.0) {
    mass[rng.next_int(size)] = 1.0;
    total = 1.0;
  }
  for (double& m : mass) m /= total;
  return mass;
}

inline std::string read_all(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// Fresh scratch directory under the system temp dir.
inline std::filesystem::path temp_dir(const std::string& name) {
  std::filesystem::path dir =
      std::filesystem::temp_directory_path() / "wbrl_tests" / name;
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace oracles

#endif  // WBRL_TESTS_ORACLES_HPP_
