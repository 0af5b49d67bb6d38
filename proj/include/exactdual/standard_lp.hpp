#pragma once

#include <cstdint>
#include <optional>

#include "exactdual/extended.hpp"
#include "exactdual/matrix.hpp"

namespace exactdual {

/// minimize c.x subject to A x <= b, x >= 0.
struct StandardLP {
  QMat A;
  QVec b;
  QVec c;

  void check_shape() const;
  friend bool operator==(const StandardLP&, const StandardLP&) = default;
};

bool lp_is_solution(const StandardLP& P, std::span<const NNRat> x);
Rat lp_objective(const StandardLP& P, std::span<const NNRat> x);

/// <A, b, c>  ->  <-A^T, c, b>. An involution.
StandardLP lp_dualize(const StandardLP& P);

/// Optimum together with the evidence behind it.
struct LpSolution {
  Optimum optimum;
  /// Optimal point (finite optimum) or a feasible base point (bot).
  std::optional<NNVec> point;
  /// Improving direction when the optimum is bot.
  std::optional<NNVec> ray;
  /// Multipliers y >= 0 with A^T y >= 0, b.y < 0 when the optimum is top.
  std::optional<QVec> farkas_y;
};

/// Solves through the canonical form [A I][x; s] = b.
LpSolution lp_solve(const StandardLP& P);

/// top if infeasible, bot if unbounded, the attained minimum otherwise.
Optimum lp_optimum(const StandardLP& P);

/// Rechecks the evidence in `sol` against P from scratch.
bool lp_verify_solution(const StandardLP& P, const LpSolution& sol);

/// Both present and b = -a.
bool opposites_opt(const Optimum& a, const Optimum& b);

/// Random solutions of A x <= b, x >= 0: vertices reached from random
/// objectives, mixed convexly and pushed along recession rays. Empty when
/// infeasible.
std::vector<NNVec> lp_sample_solutions(const StandardLP& P, std::size_t count, std::uint64_t seed);

struct DualityReport {
  Optimum primal;
  Optimum dual;
  bool primal_feasible = false;
  bool dual_feasible = false;
  /// Strong duality asserted only when at least one side is feasible.
  bool strong_applicable = false;
  bool opposites = false;
  std::size_t weak_pairs_checked = 0;
  bool weak_holds = true;

  /// Strong duality (when applicable) and weak duality both held.
  [[nodiscard]] bool consistent() const { return (!strong_applicable || opposites) && weak_holds; }
};

/// Computes both optima and checks 0 <= p + q for `weak_samples` pairs of
/// sampled reached values.
DualityReport lp_duality_report(const StandardLP& P, std::size_t weak_samples = 50,
                                std::uint64_t seed = 1);

}  // namespace exactdual
