#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "exactdual/extended.hpp"
#include "exactdual/farkas.hpp"
#include "exactdual/standard_lp.hpp"

namespace exactdual {

/// minimize c v. x subject to A m* x <= b over finite x >= 0, with entries in
/// Q extended by bot and top.
struct ExtendedLP {
  EMat A;
  EVec b;
  EVec c;

  void check_shape() const;
  friend bool operator==(const ExtendedLP&, const ExtendedLP&) = default;
};

/// The six structural conditions under which extended duality holds.
enum class ElpCondition {
  hAi,  // no row of A holds both bot and top
  hAj,  // no column of A holds both bot and top
  hbA,  // no row with bot in A has b = bot
  hcA,  // no column with top in A has c = bot
  hAb,  // no row with top in A has b = top
  hAc,  // no column with bot in A has c = top
};

std::string_view to_string(ElpCondition c);

struct ElpViolation {
  ElpCondition condition;
  /// Offending row (hAi, hbA, hAb) or column (hAj, hcA, hAc).
  std::size_t index;
  friend bool operator==(const ElpViolation&, const ElpViolation&) = default;
};

/// Every violated condition, in condition order then index order.
std::vector<ElpViolation> elp_violations(const ExtendedLP& P);

struct ElpValidation;

/// An ExtendedLP known to satisfy all six conditions. Obtainable only
/// through elp_validate or by dualizing another ValidELP.
class ValidELP {
 public:
  [[nodiscard]] const ExtendedLP& lp() const { return lp_; }
  [[nodiscard]] const EMat& A() const { return lp_.A; }
  [[nodiscard]] const EVec& b() const { return lp_.b; }
  [[nodiscard]] const EVec& c() const { return lp_.c; }

  friend bool operator==(const ValidELP&, const ValidELP&) = default;

 private:
  explicit ValidELP(ExtendedLP lp) : lp_(std::move(lp)) {}
  friend ElpValidation elp_validate(const ExtendedLP& P);
  friend ValidELP elp_dualize(const ValidELP& P);

  ExtendedLP lp_;
};

struct ElpValidation {
  std::optional<ValidELP> valid;  // set iff violations is empty
  std::vector<ElpViolation> violations;
};

ElpValidation elp_validate(const ExtendedLP& P);

bool elp_is_solution(const ExtendedLP& P, std::span<const NNRat> x);
Ext elp_objective(const ExtendedLP& P, std::span<const NNRat> x);

/// <A, b, c>  ->  <-A^T, c, b> with the extended negation.
ExtendedLP elp_dualize(const ExtendedLP& P);
ValidELP elp_dualize(const ValidELP& P);

/// The extended inequality alternative's hypotheses.
enum class FarkasPrecondition {
  BotTopInRow,
  BotTopInColumn,
  TopInRowWhereBIsTop,
  BotInRowWhereBIsBot,
};

std::string_view to_string(FarkasPrecondition p);

class PreconditionViolated : public std::invalid_argument {
 public:
  PreconditionViolated(FarkasPrecondition which, std::size_t index);
  [[nodiscard]] FarkasPrecondition which() const { return which_; }
  /// Row index, or column index for BotTopInColumn.
  [[nodiscard]] std::size_t index() const { return index_; }

 private:
  FarkasPrecondition which_;
  std::size_t index_;
};

/// First violated precondition, if any.
std::optional<PreconditionViolated> extended_farkas_precondition(const EMat& A, std::span<const Ext> b);

/// Primal x >= 0 with A m* x <= b, or Dual y >= 0 with -A^T m* y <= 0 and
/// b v. y < 0. Throws PreconditionViolated.
Certificate extended_farkas(const EMat& A, std::span<const Ext> b);

/// Checks either side of the extended alternative directly.
bool verify_extended_primal(const EMat& A, std::span<const Ext> b, std::span<const Rat> x);
bool verify_extended_dual(const EMat& A, std::span<const Ext> b, std::span<const Rat> y);

struct ElpSolution {
  Optimum optimum;
  /// A solution reaching the optimum (finite), or some solution (bot).
  std::optional<NNVec> point;
  /// Improving direction when unboundedness comes from the finite part.
  std::optional<NNVec> ray;
};

/// Exact optimum by finitization: drop tautology rows, zero the columns
/// holding top, detect bot in b, then bot and top costs, then solve the
/// finite residue.
ElpSolution elp_solve(const ExtendedLP& P);

/// Rechecks the evidence in `sol`: the point solves P and reaches the finite
/// optimum, or (bot) reaches bot or admits the ray as an improving recession
/// direction. A top optimum carries no evidence and is accepted.
bool elp_verify_solution(const ExtendedLP& P, const ElpSolution& sol);
Optimum elp_optimum(const ExtendedLP& P);
Optimum elp_optimum(const ValidELP& P);

/// Some, not necessarily all, solutions of P; empty when P has none.
std::vector<NNVec> elp_sample_solutions(const ExtendedLP& P, std::size_t count, std::uint64_t seed);

struct ElpDualityReport {
  bool valid = false;
  Optimum primal;
  Optimum dual;
  bool primal_feasible = false;
  bool dual_feasible = false;
  bool strong_applicable = false;
  bool opposites = false;
  std::size_t weak_pairs_checked = 0;
  bool weak_holds = true;

  [[nodiscard]] bool consistent() const { return (!strong_applicable || opposites) && weak_holds; }
};

ElpDualityReport elp_duality_report(const ValidELP& P, std::size_t weak_samples = 50,
                                    std::uint64_t seed = 1);
/// Same report for any ExtendedLP; `valid` records whether the six
/// conditions hold.
ElpDualityReport elp_duality_report(const ExtendedLP& P, std::size_t weak_samples = 50,
                                    std::uint64_t seed = 1);

/// The LP with the same data when every entry is finite.
std::optional<StandardLP> finite_shadow(const ExtendedLP& P);
ExtendedLP to_extended(const StandardLP& P);

}  // namespace exactdual
