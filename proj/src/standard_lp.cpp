#include "exactdual/standard_lp.hpp"

#include <array>
#include <random>

#include "exactdual/farkas.hpp"
#include "exactdual/simplex.hpp"

namespace exactdual {

void StandardLP::check_shape() const {
  if (b.size() != A.rows()) {
    throw DimensionError("standard LP: b has " + std::to_string(b.size()) + " entries, A has " +
                         std::to_string(A.rows()) + " rows");
  }
  if (c.size() != A.cols()) {
    throw DimensionError("standard LP: c has " + std::to_string(c.size()) + " entries, A has " +
                         std::to_string(A.cols()) + " columns");
  }
}

bool lp_is_solution(const StandardLP& P, std::span<const NNRat> x) {
  P.check_shape();
  const QVec xs = to_rat(x);
  return vec_le(mat_vec_mul(P.A, xs), P.b);
}

Rat lp_objective(const StandardLP& P, std::span<const NNRat> x) {
  return dot_product(P.c, to_rat(x));
}

StandardLP lp_dualize(const StandardLP& P) {
  P.check_shape();
  return {negate(P.A.transpose()), P.c, P.b};
}

namespace {

CanonicalLP slack_form(const StandardLP& P) {
  CanonicalLP lp{from_cols(std::array{P.A, identity(P.A.rows())}), P.b, P.c};
  lp.c.resize(P.A.cols() + P.A.rows());
  return lp;
}

NNVec head(const QVec& v, std::size_t n) {
  return to_nonneg(std::span<const Rat>(v).first(n));
}

}  // namespace

LpSolution lp_solve(const StandardLP& P) {
  P.check_shape();
  const std::size_t n = P.A.cols();
  MinResult r = canonical_lp_minimize(slack_form(P));
  LpSolution out;
  if (auto* inf = std::get_if<Infeasible>(&r)) {
    out.optimum = Ext::top();
    out.farkas_y = std::move(inf->y);
  } else if (auto* unb = std::get_if<Unbounded>(&r)) {
    out.optimum = Ext::bot();
    out.point = head(unb->point, n);
    out.ray = head(unb->ray, n);
  } else {
    auto& min = std::get<Minimum>(r);
    out.optimum = Ext(min.value);
    out.point = head(min.x, n);
  }
  return out;
}

Optimum lp_optimum(const StandardLP& P) { return lp_solve(P).optimum; }

bool lp_verify_solution(const StandardLP& P, const LpSolution& sol) {
  P.check_shape();
  if (!sol.optimum) {
    return false;
  }
  const Ext& opt = *sol.optimum;
  if (opt.is_top()) {
    return sol.farkas_y &&
           verify_certificate(AlternativeKind::InequalityFarkas, P.A, P.b, Dual{*sol.farkas_y});
  }
  if (!sol.point || sol.point->size() != P.A.cols() || !lp_is_solution(P, *sol.point)) {
    return false;
  }
  if (opt.is_finite()) {
    return lp_objective(P, *sol.point) == opt.value();
  }
  if (!sol.ray || sol.ray->size() != P.A.cols()) {
    return false;
  }
  const QVec ray = to_rat(*sol.ray);
  return vec_le(mat_vec_mul(P.A, ray), QVec(P.A.rows())) && dot_product(P.c, ray).sign() < 0;
}

bool opposites_opt(const Optimum& a, const Optimum& b) {
  return a.has_value() && b.has_value() && *a == ext_neg(*b);
}

std::vector<NNVec> lp_sample_solutions(const StandardLP& P, std::size_t count, std::uint64_t seed) {
  P.check_shape();
  std::vector<NNVec> out;
  if (count == 0) {
    return out;
  }
  const std::size_t n = P.A.cols();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coef(-5, 5);

  std::vector<QVec> points;
  std::vector<QVec> rays;
  StandardLP probe = P;
  const std::size_t probes = std::min<std::size_t>(count, 8);
  for (std::size_t k = 0; k < probes; ++k) {
    for (auto& cj : probe.c) {
      cj = Rat(k == 0 ? 0 : coef(rng));
    }
    LpSolution s = lp_solve(probe);
    if (s.optimum->is_top()) {
      return out;
    }
    points.push_back(to_rat(*s.point));
    if (s.ray) {
      rays.push_back(to_rat(*s.ray));
    }
  }

  std::uniform_int_distribution<long> weight(0, 4);
  std::uniform_int_distribution<long> stretch(0, 3);
  for (std::size_t s = 0; s < count; ++s) {
    QVec x(n);
    long total = 0;
    std::vector<long> w(points.size());
    for (auto& wi : w) {
      wi = weight(rng);
      total += wi;
    }
    if (total == 0) {
      w[s % w.size()] = 1;
      total = 1;
    }
    for (std::size_t p = 0; p < points.size(); ++p) {
      if (w[p] == 0) {
        continue;
      }
      const Rat f = Rat::make(w[p], total);
      for (std::size_t j = 0; j < n; ++j) {
        x[j] += f * points[p][j];
      }
    }
    for (const auto& ray : rays) {
      const Rat f(stretch(rng));
      for (std::size_t j = 0; j < n; ++j) {
        x[j] += f * ray[j];
      }
    }
    out.push_back(to_nonneg(x));
  }
  return out;
}

DualityReport lp_duality_report(const StandardLP& P, std::size_t weak_samples, std::uint64_t seed) {
  const StandardLP D = lp_dualize(P);
  DualityReport report;
  report.primal = lp_optimum(P);
  report.dual = lp_optimum(D);
  report.primal_feasible = !report.primal->is_top();
  report.dual_feasible = !report.dual->is_top();
  report.strong_applicable = report.primal_feasible || report.dual_feasible;
  report.opposites = opposites_opt(report.primal, report.dual);

  const auto xs = lp_sample_solutions(P, weak_samples, seed);
  const auto ys = lp_sample_solutions(D, weak_samples, seed + 1);
  for (std::size_t k = 0; k < std::min(xs.size(), ys.size()); ++k) {
    if (!lp_is_solution(P, xs[k]) || !lp_is_solution(D, ys[k])) {
      report.weak_holds = false;
      continue;
    }
    const Rat sum = lp_objective(P, xs[k]) + lp_objective(D, ys[k]);
    report.weak_holds = report.weak_holds && sum.sign() >= 0;
    ++report.weak_pairs_checked;
  }
  return report;
}

}  // namespace exactdual
