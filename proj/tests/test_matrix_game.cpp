// Copyright 2026 The debate-games Authors
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

#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "debate/matrix_game.hpp"
#include "debate/reference_games.hpp"

using namespace debate;

namespace {

Matrix from_rows(const std::vector<std::vector<double>>& rows) {
  Matrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) m(r, c) = rows[r][c];
  return m;
}

Matrix random_matrix(std::mt19937_64& rng, int maxdim = 6) {
  std::uniform_int_distribution<int> dim(1, maxdim);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  Matrix m(dim(rng), dim(rng));
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) m(r, c) = u(rng);
  return m;
}

}  // namespace

TEST_CASE("single-cell game") {
  auto s = solve_matrix_game(from_rows({{0.0}}));
  REQUIRE(s.value == Catch::Approx(0.0).margin(1e-12));
  REQUIRE(s.row_strategy == std::vector<double>{1.0});
  REQUIRE(s.col_strategy == std::vector<double>{1.0});
}

TEST_CASE("cyclic three-action game has value one half and uniform play") {
  auto s = solve_matrix_game(
      from_rows({{0.5, 0.0, 1.0}, {1.0, 0.5, 0.0}, {0.0, 1.0, 0.5}}));
  REQUIRE(s.value == Catch::Approx(0.5).margin(1e-9));
  for (double p : s.row_strategy) REQUIRE(p == Catch::Approx(1.0 / 3).margin(1e-7));
  for (double p : s.col_strategy) REQUIRE(p == Catch::Approx(1.0 / 3).margin(1e-7));
}

TEST_CASE("restriction of the bundled policy to the crowded scenario") {
  // Winner rows {0,1,2,default} against loser columns {0,1,2,3,default},
  // solved from the loser's side: the loser secures exactly one half.
  Policy pol = reference_nonbinary_policy();
  std::vector<int> rows = {0, 1, 2, 4}, cols = {0, 1, 2, 3, 4};
  Matrix loser(static_cast<int>(cols.size()), static_cast<int>(rows.size()));
  for (size_t c = 0; c < cols.size(); ++c)
    for (size_t r = 0; r < rows.size(); ++r)
      loser(static_cast<int>(c), static_cast<int>(r)) =
          1.0 - pol.p1(rows[r], cols[c]);
  REQUIRE(solve_matrix_game(loser).value == Catch::Approx(0.5).margin(1e-9));
}

TEST_CASE("empty payoff is rejected") {
  REQUIRE_THROWS_AS(solve_matrix_game(Matrix()), InputError);
}

TEST_CASE("complement-transpose values sum to one") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 200; ++i) {
    Matrix m = random_matrix(rng);
    Matrix t(m.cols(), m.rows());
    for (int r = 0; r < m.rows(); ++r)
      for (int c = 0; c < m.cols(); ++c) t(c, r) = 1.0 - m(r, c);
    double v1 = matrix_game_value(m), v2 = matrix_game_value(t);
    REQUIRE(v1 + v2 == Catch::Approx(1.0).margin(1e-7));
  }
}

TEST_CASE("adding a row helps the row player, adding a column hurts") {
  std::mt19937_64 rng(22);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 100; ++i) {
    Matrix m = random_matrix(rng, 5);
    double v = matrix_game_value(m);
    Matrix grown(m.rows() + 1, m.cols());
    for (int r = 0; r < m.rows(); ++r)
      for (int c = 0; c < m.cols(); ++c) grown(r, c) = m(r, c);
    for (int c = 0; c < m.cols(); ++c) grown(m.rows(), c) = u(rng);
    REQUIRE(matrix_game_value(grown) >= v - 1e-7);

    Matrix wider(m.rows(), m.cols() + 1);
    for (int r = 0; r < m.rows(); ++r) {
      for (int c = 0; c < m.cols(); ++c) wider(r, c) = m(r, c);
      wider(r, m.cols()) = u(rng);
    }
    REQUIRE(matrix_game_value(wider) <= v + 1e-7);
  }
}

TEST_CASE("returned strategies honor their guarantees") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 200; ++i) {
    Matrix m = random_matrix(rng);
    auto s = solve_matrix_game(m);
    REQUIRE(strategy_gap(m, s) <= 1e-7);
    double sum = 0.0;
    for (double p : s.row_strategy) {
      REQUIRE(p >= 0.0);
      sum += p;
    }
    REQUIRE(sum == Catch::Approx(1.0).margin(1e-9));
  }
}

TEST_CASE("value one forces a pure all-ones row and conversely") {
  std::mt19937_64 rng(24);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::uniform_int_distribution<int> dim(1, 5);
  for (int i = 0; i < 200; ++i) {
    int nr = dim(rng), nc = dim(rng);
    Matrix m(nr, nc);
    for (int r = 0; r < nr; ++r)
      for (int c = 0; c < nc; ++c) m(r, c) = u(rng) < 0.5 ? 1.0 : u(rng);
    if (i % 2 == 0) {
      int planted = std::uniform_int_distribution<int>(0, nr - 1)(rng);
      for (int c = 0; c < nc; ++c) m(planted, c) = 1.0;
    }
    bool has_ones_row = false;
    for (int r = 0; r < nr && !has_ones_row; ++r) {
      bool all = true;
      for (int c = 0; c < nc; ++c) all = all && m(r, c) == 1.0;
      has_ones_row = all;
    }
    double v = matrix_game_value(m);
    REQUIRE((v >= 1.0 - 1e-9) == has_ones_row);
  }
}
