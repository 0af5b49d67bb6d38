#include "exactdual/extended_lp.hpp"

#include <algorithm>

namespace exactdual {

void ExtendedLP::check_shape() const {
  if (b.size() != A.rows()) {
    throw DimensionError("extended LP: b has " + std::to_string(b.size()) + " entries, A has " +
                         std::to_string(A.rows()) + " rows");
  }
  if (c.size() != A.cols()) {
    throw DimensionError("extended LP: c has " + std::to_string(c.size()) + " entries, A has " +
                         std::to_string(A.cols()) + " columns");
  }
}

std::string_view to_string(ElpCondition c) {
  switch (c) {
    case ElpCondition::hAi:
      return "hAi";
    case ElpCondition::hAj:
      return "hAj";
    case ElpCondition::hbA:
      return "hbA";
    case ElpCondition::hcA:
      return "hcA";
    case ElpCondition::hAb:
      return "hAb";
    case ElpCondition::hAc:
      return "hAc";
  }
  return "unknown";
}

namespace {

bool row_has(const EMat& A, std::size_t i, Ext::Kind k) {
  const auto row = A.row(i);
  return std::any_of(row.begin(), row.end(), [k](const Ext& e) { return e.kind() == k; });
}

bool col_has(const EMat& A, std::size_t j, Ext::Kind k) {
  for (std::size_t i = 0; i < A.rows(); ++i) {
    if (A(i, j).kind() == k) {
      return true;
    }
  }
  return false;
}

constexpr auto kBot = Ext::Kind::Bot;
constexpr auto kTop = Ext::Kind::Top;

}  // namespace

std::vector<ElpViolation> elp_violations(const ExtendedLP& P) {
  P.check_shape();
  const EMat& A = P.A;
  std::vector<ElpViolation> out;
  auto scan_rows = [&](ElpCondition cond, auto&& pred) {
    for (std::size_t i = 0; i < A.rows(); ++i) {
      if (pred(i)) {
        out.push_back({cond, i});
      }
    }
  };
  auto scan_cols = [&](ElpCondition cond, auto&& pred) {
    for (std::size_t j = 0; j < A.cols(); ++j) {
      if (pred(j)) {
        out.push_back({cond, j});
      }
    }
  };
  scan_rows(ElpCondition::hAi, [&](std::size_t i) { return row_has(A, i, kBot) && row_has(A, i, kTop); });
  scan_cols(ElpCondition::hAj, [&](std::size_t j) { return col_has(A, j, kBot) && col_has(A, j, kTop); });
  scan_rows(ElpCondition::hbA, [&](std::size_t i) { return row_has(A, i, kBot) && P.b[i].is_bot(); });
  scan_cols(ElpCondition::hcA, [&](std::size_t j) { return col_has(A, j, kTop) && P.c[j].is_bot(); });
  scan_rows(ElpCondition::hAb, [&](std::size_t i) { return row_has(A, i, kTop) && P.b[i].is_top(); });
  scan_cols(ElpCondition::hAc, [&](std::size_t j) { return col_has(A, j, kBot) && P.c[j].is_top(); });
  return out;
}

ElpValidation elp_validate(const ExtendedLP& P) {
  ElpValidation v;
  v.violations = elp_violations(P);
  if (v.violations.empty()) {
    v.valid = ValidELP(P);
  }
  return v;
}

bool elp_is_solution(const ExtendedLP& P, std::span<const NNRat> x) {
  P.check_shape();
  const EVec ax = mul_weig(P.A, x);
  for (std::size_t i = 0; i < ax.size(); ++i) {
    if (!ext_le(ax[i], P.b[i])) {
      return false;
    }
  }
  return true;
}

Ext elp_objective(const ExtendedLP& P, std::span<const NNRat> x) { return dot_weig(P.c, x); }

ExtendedLP elp_dualize(const ExtendedLP& P) {
  P.check_shape();
  return {ext_neg(P.A.transpose()), P.c, P.b};
}

ValidELP elp_dualize(const ValidELP& P) { return ValidELP(elp_dualize(P.lp())); }

std::string_view to_string(FarkasPrecondition p) {
  switch (p) {
    case FarkasPrecondition::BotTopInRow:
      return "bot_and_top_in_row";
    case FarkasPrecondition::BotTopInColumn:
      return "bot_and_top_in_column";
    case FarkasPrecondition::TopInRowWhereBIsTop:
      return "top_in_row_where_b_is_top";
    case FarkasPrecondition::BotInRowWhereBIsBot:
      return "bot_in_row_where_b_is_bot";
  }
  return "unknown";
}

PreconditionViolated::PreconditionViolated(FarkasPrecondition which, std::size_t index)
    : std::invalid_argument("extended Farkas precondition violated: " +
                            std::string(to_string(which)) + " at index " + std::to_string(index)),
      which_(which),
      index_(index) {}

std::optional<PreconditionViolated> extended_farkas_precondition(const EMat& A, std::span<const Ext> b) {
  if (b.size() != A.rows()) {
    throw DimensionError("extended_farkas: b has " + std::to_string(b.size()) + " entries, A has " +
                         std::to_string(A.rows()) + " rows");
  }
  for (std::size_t i = 0; i < A.rows(); ++i) {
    if (row_has(A, i, kBot) && row_has(A, i, kTop)) {
      return PreconditionViolated(FarkasPrecondition::BotTopInRow, i);
    }
  }
  for (std::size_t j = 0; j < A.cols(); ++j) {
    if (col_has(A, j, kBot) && col_has(A, j, kTop)) {
      return PreconditionViolated(FarkasPrecondition::BotTopInColumn, j);
    }
  }
  for (std::size_t i = 0; i < A.rows(); ++i) {
    if (row_has(A, i, kTop) && b[i].is_top()) {
      return PreconditionViolated(FarkasPrecondition::TopInRowWhereBIsTop, i);
    }
  }
  for (std::size_t i = 0; i < A.rows(); ++i) {
    if (row_has(A, i, kBot) && b[i].is_bot()) {
      return PreconditionViolated(FarkasPrecondition::BotInRowWhereBIsBot, i);
    }
  }
  return std::nullopt;
}

namespace {

// Rows of A m* x <= b that can actually fail, and the columns they pin to 0.
struct Residue {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> free_cols;
  std::vector<bool> forced;
  bool bot_in_b = false;

  [[nodiscard]] QMat matrix(const EMat& A, std::span<const std::size_t> cols) const {
    QMat m(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (std::size_t j = 0; j < cols.size(); ++j) {
        m(i, j) = A(rows[i], cols[j]).value();
      }
    }
    return m;
  }

  [[nodiscard]] QVec rhs(std::span<const Ext> b) const {
    QVec v;
    v.reserve(rows.size());
    for (auto i : rows) {
      v.push_back(b[i].value());
    }
    return v;
  }
};

Residue reduce(const EMat& A, std::span<const Ext> b) {
  Residue r;
  r.forced.assign(A.cols(), false);
  for (std::size_t i = 0; i < A.rows(); ++i) {
    // bot anywhere in the row makes its left side bot; b = top accepts anything.
    if (row_has(A, i, kBot) || b[i].is_top()) {
      continue;
    }
    r.rows.push_back(i);
    r.bot_in_b = r.bot_in_b || b[i].is_bot();
    for (std::size_t j = 0; j < A.cols(); ++j) {
      if (A(i, j).is_top()) {
        r.forced[j] = true;
      }
    }
  }
  for (std::size_t j = 0; j < A.cols(); ++j) {
    if (!r.forced[j]) {
      r.free_cols.push_back(j);
    }
  }
  return r;
}

QVec scatter(std::span<const Rat> v, std::span<const std::size_t> positions, std::size_t size) {
  QVec out(size);
  for (std::size_t k = 0; k < positions.size(); ++k) {
    out[positions[k]] = v[k];
  }
  return out;
}

NNVec scatter(std::span<const NNRat> v, std::span<const std::size_t> positions, std::size_t size) {
  NNVec out(size);
  for (std::size_t k = 0; k < positions.size(); ++k) {
    out[positions[k]] = v[k];
  }
  return out;
}

}  // namespace

Certificate extended_farkas(const EMat& A, std::span<const Ext> b) {
  if (auto violation = extended_farkas_precondition(A, b)) {
    throw *violation;
  }
  const Residue r = reduce(A, b);
  if (r.bot_in_b) {
    return Dual{QVec(A.rows())};
  }
  Certificate cert = farkas_inequality(r.matrix(A, r.free_cols), r.rhs(b));
  if (auto* p = std::get_if<Primal>(&cert)) {
    return Primal{scatter(p->x, r.free_cols, A.cols())};
  }
  return Dual{scatter(std::get<Dual>(cert).y, r.rows, A.rows())};
}

bool verify_extended_primal(const EMat& A, std::span<const Ext> b, std::span<const Rat> x) {
  if (b.size() != A.rows()) {
    throw DimensionError("verify_extended_primal: b/A mismatch");
  }
  if (x.size() != A.cols() || !all_nonneg(x)) {
    return false;
  }
  const EVec ax = mul_weig(A, to_nonneg(x));
  for (std::size_t i = 0; i < ax.size(); ++i) {
    if (!ext_le(ax[i], b[i])) {
      return false;
    }
  }
  return true;
}

bool verify_extended_dual(const EMat& A, std::span<const Ext> b, std::span<const Rat> y) {
  if (b.size() != A.rows()) {
    throw DimensionError("verify_extended_dual: b/A mismatch");
  }
  if (y.size() != A.rows() || !all_nonneg(y)) {
    return false;
  }
  const NNVec w = to_nonneg(y);
  const EVec lhs = mul_weig(ext_neg(A.transpose()), w);
  for (const auto& e : lhs) {
    if (!ext_le(e, Ext(0))) {
      return false;
    }
  }
  return ext_lt(dot_weig(b, w), Ext(0));
}

ElpSolution elp_solve(const ExtendedLP& P) {
  P.check_shape();
  const std::size_t n = P.A.cols();
  const Residue r = reduce(P.A, P.b);
  ElpSolution out;
  if (r.bot_in_b) {
    out.optimum = Ext::top();
    return out;
  }

  const QMat residue = r.matrix(P.A, r.free_cols);
  const QVec rhs = r.rhs(P.b);

  // 0 * bot = bot, so one bot cost drags every reached value to bot.
  if (std::any_of(P.c.begin(), P.c.end(), [](const Ext& e) { return e.is_bot(); })) {
    Certificate cert = farkas_inequality(residue, rhs);
    if (auto* p = std::get_if<Primal>(&cert)) {
      out.optimum = Ext::bot();
      out.point = to_nonneg(scatter(p->x, r.free_cols, n));
    } else {
      out.optimum = Ext::top();
    }
    return out;
  }

  // Positive mass on a top-cost column only ever reaches top.
  std::vector<std::size_t> cols;
  for (auto j : r.free_cols) {
    if (!P.c[j].is_top()) {
      cols.push_back(j);
    }
  }
  StandardLP finite{r.matrix(P.A, cols), rhs, {}};
  for (auto j : cols) {
    finite.c.push_back(P.c[j].value());
  }

  LpSolution s = lp_solve(finite);
  out.optimum = s.optimum;
  if (s.point) {
    out.point = scatter(*s.point, cols, n);
  }
  if (s.ray) {
    out.ray = scatter(*s.ray, cols, n);
  }
  return out;
}

bool elp_verify_solution(const ExtendedLP& P, const ElpSolution& sol) {
  P.check_shape();
  if (!sol.optimum) {
    return false;
  }
  const Ext& opt = *sol.optimum;
  if (opt.is_top()) {
    return true;
  }
  if (!sol.point || sol.point->size() != P.A.cols() || !elp_is_solution(P, *sol.point)) {
    return false;
  }
  const Ext reached = elp_objective(P, *sol.point);
  if (opt.is_finite()) {
    return reached == opt;
  }
  if (reached.is_bot()) {
    return true;
  }
  if (!sol.ray || sol.ray->size() != P.A.cols()) {
    return false;
  }
  // Every row that can fail must not grow along the ray.
  for (std::size_t i = 0; i < P.A.rows(); ++i) {
    if (row_has(P.A, i, kBot) || P.b[i].is_top()) {
      continue;
    }
    if (!ext_le(dot_weig(P.A.row(i), *sol.ray), Ext(0))) {
      return false;
    }
  }
  const Ext slope = dot_weig(P.c, *sol.ray);
  return slope.is_finite() && slope.value().sign() < 0;
}

Optimum elp_optimum(const ExtendedLP& P) { return elp_solve(P).optimum; }
Optimum elp_optimum(const ValidELP& P) { return elp_optimum(P.lp()); }

std::vector<NNVec> elp_sample_solutions(const ExtendedLP& P, std::size_t count, std::uint64_t seed) {
  P.check_shape();
  const Residue r = reduce(P.A, P.b);
  if (r.bot_in_b) {
    return {};
  }
  StandardLP finite{r.matrix(P.A, r.free_cols), r.rhs(P.b), QVec(r.free_cols.size())};
  std::vector<NNVec> out;
  for (auto& x : lp_sample_solutions(finite, count, seed)) {
    out.push_back(scatter(x, r.free_cols, P.A.cols()));
  }
  return out;
}

ElpDualityReport elp_duality_report(const ExtendedLP& P, std::size_t weak_samples, std::uint64_t seed) {
  const ExtendedLP D = elp_dualize(P);
  ElpDualityReport report;
  report.valid = elp_violations(P).empty();
  report.primal = elp_optimum(P);
  report.dual = elp_optimum(D);
  report.primal_feasible = !report.primal->is_top();
  report.dual_feasible = !report.dual->is_top();
  report.strong_applicable = report.primal_feasible || report.dual_feasible;
  report.opposites = opposites_opt(report.primal, report.dual);

  const auto xs = elp_sample_solutions(P, weak_samples, seed);
  const auto ys = elp_sample_solutions(D, weak_samples, seed + 1);
  for (std::size_t k = 0; k < std::min(xs.size(), ys.size()); ++k) {
    if (!elp_is_solution(P, xs[k]) || !elp_is_solution(D, ys[k])) {
      report.weak_holds = false;
      continue;
    }
    const Ext sum = ext_add(elp_objective(P, xs[k]), elp_objective(D, ys[k]));
    report.weak_holds = report.weak_holds && ext_le(Ext(0), sum);
    ++report.weak_pairs_checked;
  }
  return report;
}

ElpDualityReport elp_duality_report(const ValidELP& P, std::size_t weak_samples, std::uint64_t seed) {
  return elp_duality_report(P.lp(), weak_samples, seed);
}

std::optional<StandardLP> finite_shadow(const ExtendedLP& P) {
  P.check_shape();
  StandardLP out{QMat(P.A.rows(), P.A.cols()), {}, {}};
  for (std::size_t i = 0; i < P.A.rows(); ++i) {
    for (std::size_t j = 0; j < P.A.cols(); ++j) {
      if (!P.A(i, j).is_finite()) {
        return std::nullopt;
      }
      out.A(i, j) = P.A(i, j).value();
    }
  }
  for (const auto& e : P.b) {
    if (!e.is_finite()) {
      return std::nullopt;
    }
    out.b.push_back(e.value());
  }
  for (const auto& e : P.c) {
    if (!e.is_finite()) {
      return std::nullopt;
    }
    out.c.push_back(e.value());
  }
  return out;
}

ExtendedLP to_extended(const StandardLP& P) {
  P.check_shape();
  return {to_ext(P.A), to_ext(P.b), to_ext(P.c)};
}

}  // namespace exactdual
