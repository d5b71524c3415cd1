// Copyright 2026 The PhaseLab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "phaselab/simplex.hpp"

#include <gmpxx.h>

namespace phaselab {

namespace {

void check_shape(const RationalMatrix& a, const std::vector<Rational>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("matrix rows and right-hand side differ in length");
  for (const auto& row : a) {
    if (row.size() != a.front().size()) throw std::invalid_argument("ragged constraint matrix");
  }
}

}  // namespace

FeasibilityResult solve_feasibility(const RationalMatrix& a, const std::vector<Rational>& b, std::size_t max_pivots) {
  check_shape(a, b);
  const std::size_t m = a.size();
  const std::size_t n = m == 0 ? 0 : a.front().size();
  const std::size_t width = n + m + 1;  // structural, artificial, right-hand side
  const std::size_t rhs = n + m;

  // Rows with negative b are negated so the artificial basis starts feasible.
  std::vector<int> flip(m, 1);
  std::vector<std::vector<mpq_class>> t(m, std::vector<mpq_class>(width));
  for (std::size_t i = 0; i < m; ++i) {
    if (b[i].sign() < 0) flip[i] = -1;
    for (std::size_t j = 0; j < n; ++j) t[i][j] = flip[i] * a[i][j].value();
    t[i][n + i] = 1;
    t[i][rhs] = flip[i] * b[i].value();
  }
  // Reduced costs of the phase-1 objective (sum of artificials); cost[rhs]
  // holds minus the objective value.
  std::vector<mpq_class> cost(width);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) cost[j] -= t[i][j];
    cost[rhs] -= t[i][rhs];
  }
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

  FeasibilityResult result;
  std::vector<std::size_t> support;
  while (true) {
    std::size_t enter = width;
    for (std::size_t j = 0; j < rhs; ++j) {
      if (sgn(cost[j]) < 0) {
        enter = j;
        break;
      }
    }
    if (enter == width) break;
    std::size_t leave = m;
    mpq_class best;
    for (std::size_t i = 0; i < m; ++i) {
      if (sgn(t[i][enter]) <= 0) continue;
      mpq_class ratio = t[i][rhs] / t[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m) throw SimplexError("phase-1 objective is unbounded, which cannot happen");
    if (++result.pivots > max_pivots) throw SimplexError("pivot limit exceeded");

    auto& prow = t[leave];
    const mpq_class p = prow[enter];
    support.clear();
    for (std::size_t j = 0; j < width; ++j) {
      if (sgn(prow[j]) != 0) {
        prow[j] /= p;
        support.push_back(j);
      }
    }
    auto eliminate = [&](std::vector<mpq_class>& row) {
      if (sgn(row[enter]) == 0) return;
      const mpq_class f = row[enter];
      for (std::size_t j : support) row[j] -= f * prow[j];
    };
    for (std::size_t i = 0; i < m; ++i) {
      if (i != leave) eliminate(t[i]);
    }
    eliminate(cost);
    basis[leave] = enter;
  }

  if (sgn(cost[rhs]) == 0) {
    result.feasible = true;
    result.x.assign(n, Rational(0));
    for (std::size_t i = 0; i < m; ++i) {
      if (basis[i] < n) result.x[basis[i]] = Rational(t[i][rhs]);
    }
    if (!verify_solution(a, b, result.x)) throw SimplexError("solution failed exact verification");
  } else {
    // Duals of the phase-1 optimum: pi_i = 1 - (reduced cost of artificial i).
    result.farkas.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
      mpq_class pi = 1 - cost[n + i];
      result.farkas[i] = Rational(mpq_class(-flip[i] * pi));
    }
    if (!verify_farkas(a, b, result.farkas)) throw SimplexError("Farkas witness failed exact verification");
  }
  return result;
}

bool verify_solution(const RationalMatrix& a, const std::vector<Rational>& b, const std::vector<Rational>& x) {
  check_shape(a, b);
  for (const auto& v : x) {
    if (v.sign() < 0) return false;
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != x.size()) return false;
    mpq_class s;
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (!a[i][j].is_zero() && !x[j].is_zero()) s += a[i][j].value() * x[j].value();
    }
    if (s != b[i].value()) return false;
  }
  return true;
}

bool verify_farkas(const RationalMatrix& a, const std::vector<Rational>& b, const std::vector<Rational>& y) {
  check_shape(a, b);
  if (y.size() != a.size()) return false;
  const std::size_t n = a.empty() ? 0 : a.front().size();
  for (std::size_t j = 0; j < n; ++j) {
    mpq_class s;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (!a[i][j].is_zero() && !y[i].is_zero()) s += a[i][j].value() * y[i].value();
    }
    if (sgn(s) < 0) return false;
  }
  mpq_class s;
  for (std::size_t i = 0; i < a.size(); ++i) s += b[i].value() * y[i].value();
  return sgn(s) < 0;
}

}  // namespace phaselab
