#include "doctest.h"

#include "exactdual/standard_lp.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace exactdual;
using namespace testing_support;

TEST_CASE("solutions and objective") {
  const StandardLP P = worked_primal();
  CHECK(lp_is_solution(P, NNVec{1, 2}));
  CHECK_FALSE(lp_is_solution(P, NNVec{1, 1}));
  CHECK(lp_objective(P, NNVec{1, 2}) == Rat(18));
  CHECK(lp_is_solution(cheap_lunch(), NNVec{10, 10}));
  CHECK_THROWS_AS(lp_is_solution(P, NNVec{1}), DimensionError);
}

TEST_CASE("dualization") {
  const StandardLP P = worked_primal();
  CHECK(lp_dualize(P) == StandardLP{QMat{{2, 1}, {1, 2}}, QVec{6, 6}, QVec{-4, -5}});
  CHECK(lp_dualize(lp_dualize(P)) == P);
  RandomRats gen(8);
  for (int k = 0; k < 100; ++k) {
    const StandardLP R{gen.mat(3, 4), gen.vec(3), gen.vec(4)};
    CHECK(lp_dualize(lp_dualize(R)) == R);
  }
}

TEST_CASE("optimum examples") {
  CHECK(lp_optimum(worked_primal()) == Optimum(Ext(18)));
  CHECK(lp_optimum(lp_dualize(worked_primal())) == Optimum(Ext(-18)));
  CHECK(lp_optimum(StandardLP{QMat{{0}}, QVec{-1}, QVec{0}}) == Optimum(Ext::top()));
  CHECK(lp_optimum(StandardLP{QMat{{-1}}, QVec{0}, QVec{-1}}) == Optimum(Ext::bot()));
  CHECK(lp_optimum(StandardLP{QMat(0, 0), QVec{}, QVec{}}) == Optimum(Ext(0)));
}

TEST_CASE("opposites relation on all fourteen listed cases") {
  for (const auto& row : opposites_table()) {
    CAPTURE(to_string(row.p));
    CAPTURE(to_string(row.q));
    CHECK(opposites_opt(row.p, row.q) == row.expected);
    CHECK(opposites_opt(row.q, row.p) == row.expected);
  }
}

TEST_CASE("cheap lunch agrees with vertex enumeration") {
  const StandardLP P = cheap_lunch();
  const auto vertex_best = standard_region(P.A, P.b).vertex_min(P.c);
  REQUIRE(vertex_best);
  const Optimum got = lp_optimum(P);
  REQUIRE(got);
  REQUIRE(got->is_finite());
  CHECK(got->value() == *vertex_best);
  CHECK(got->value().to_decimal() == "0.714311");
  CHECK(lp_optimum(lp_dualize(P)) == Optimum(Ext(-*vertex_best)));
}

TEST_CASE("duality report") {
  const DualityReport w = lp_duality_report(worked_primal());
  CHECK(w.primal == Optimum(Ext(18)));
  CHECK(w.dual == Optimum(Ext(-18)));
  CHECK(w.opposites);
  CHECK(w.strong_applicable);
  CHECK(w.weak_pairs_checked == 50);
  CHECK(w.consistent());

  // Neither side feasible: x <= -1 and its dual y <= -1 over nonnegatives.
  const DualityReport n = lp_duality_report(StandardLP{QMat{{0}}, QVec{-1}, QVec{-1}});
  CHECK(n.primal == Optimum(Ext::top()));
  CHECK(n.dual == Optimum(Ext::top()));
  CHECK_FALSE(n.strong_applicable);
  CHECK_FALSE(n.opposites);
  CHECK(n.consistent());
}

TEST_CASE("solver evidence and optimum match the vertex oracle") {
  RandomRats gen(404);
  int finite = 0;
  int bot = 0;
  int top = 0;
  for (int k = 0; k < 400; ++k) {
    const StandardLP P{gen.mat(3, 4), gen.vec(3), gen.vec(4)};
    const LpSolution s = lp_solve(P);
    REQUIRE(lp_verify_solution(P, s));
    const Optimum want = oracle_lp_optimum(P);
    REQUIRE(s.optimum == want);
    const Optimum dual = lp_optimum(lp_dualize(P));
    REQUIRE(dual == oracle_lp_optimum(lp_dualize(P)));
    if (!want->is_top() || !dual->is_top()) {
      CHECK(opposites_opt(s.optimum, dual));
    }
    if (want->is_finite()) {
      CHECK(lp_objective(P, *s.point) == want->value());
      ++finite;
    } else {
      ++(want->is_bot() ? bot : top);
    }
  }
  CHECK(finite > 20);
  CHECK(bot > 20);
  CHECK(top > 20);
}

TEST_CASE("weak duality on sampled solution pairs") {
  RandomRats gen(405);
  std::size_t pairs = 0;
  for (int k = 0; k < 1000; ++k) {
    const StandardLP P{gen.mat(3, 4), gen.vec(3), gen.vec(4)};
    const StandardLP D = lp_dualize(P);
    const auto xs = lp_sample_solutions(P, 5, static_cast<std::uint64_t>(k));
    const auto ys = lp_sample_solutions(D, 5, static_cast<std::uint64_t>(k) + 7);
    for (const auto& x : xs) {
      REQUIRE(lp_is_solution(P, x));
      for (const auto& y : ys) {
        REQUIRE(lp_is_solution(D, y));
        CHECK((lp_objective(P, x) + lp_objective(D, y)).sign() >= 0);
        ++pairs;
      }
    }
  }
  CHECK(pairs >= 1000);
}

TEST_CASE("strong duality on random instances") {
  RandomRats gen(406);
  int applicable = 0;
  for (int k = 0; k < 1000; ++k) {
    const StandardLP P{gen.mat(3, 4), gen.vec(3), gen.vec(4)};
    const DualityReport r = lp_duality_report(P, 5, static_cast<std::uint64_t>(k));
    REQUIRE(r.primal);
    REQUIRE(r.dual);
    if (r.strong_applicable) {
      ++applicable;
      REQUIRE(r.opposites);
    }
    REQUIRE(r.consistent());
  }
  CHECK(applicable > 800);
}

TEST_CASE("sample solutions") {
  CHECK(lp_sample_solutions(StandardLP{QMat{{0}}, QVec{-1}, QVec{0}}, 10, 1).empty());
  const auto xs = lp_sample_solutions(worked_primal(), 20, 3);
  CHECK(xs.size() == 20);
  for (const auto& x : xs) {
    CHECK(lp_is_solution(worked_primal(), x));
  }
}
