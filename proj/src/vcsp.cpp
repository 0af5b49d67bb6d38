#include "exactdual/vcsp.hpp"

#include <algorithm>
#include <cstdint>

namespace exactdual {

std::size_t checked_power(std::size_t d, std::size_t n, std::size_t cap) {
  std::size_t out = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (d != 0 && out > cap / d) {
      throw CapExceeded(std::to_string(d) + "^" + std::to_string(n) + " exceeds enumeration cap " +
                        std::to_string(cap));
    }
    out *= d;
  }
  if (out > cap) {
    throw CapExceeded(std::to_string(d) + "^" + std::to_string(n) + " exceeds enumeration cap " +
                      std::to_string(cap));
  }
  return out;
}

std::size_t tuple_index(std::span<const std::size_t> tuple, std::size_t domain_size) {
  std::size_t idx = 0;
  for (auto v : tuple) {
    idx = idx * domain_size + v;
  }
  return idx;
}

std::vector<std::size_t> tuple_at(std::size_t index, std::size_t length, std::size_t domain_size) {
  std::vector<std::size_t> t(length);
  for (std::size_t k = length; k-- > 0;) {
    t[k] = index % domain_size;
    index /= domain_size;
  }
  return t;
}

void CostFunction::check() const {
  const std::size_t expected = checked_power(domain_size, arity, SIZE_MAX);
  if (table.size() != expected) {
    throw DimensionError("cost function table has " + std::to_string(table.size()) +
                         " entries, expected " + std::to_string(expected));
  }
}

const Rat& CostFunction::operator()(std::span<const std::size_t> tuple) const {
  if (tuple.size() != arity) {
    throw DimensionError("cost function of arity " + std::to_string(arity) + " applied to " +
                         std::to_string(tuple.size()) + " arguments");
  }
  for (auto v : tuple) {
    if (v >= domain_size) {
      throw std::out_of_range("label " + std::to_string(v) + " outside domain of size " +
                              std::to_string(domain_size));
    }
  }
  return table[tuple_index(tuple, domain_size)];
}

void VcspInstance::check() const {
  for (std::size_t f = 0; f < functions.size(); ++f) {
    functions[f].check();
    if (functions[f].domain_size != domain_size) {
      throw DimensionError("function " + std::to_string(f) + " has domain size " +
                           std::to_string(functions[f].domain_size) + ", instance has " +
                           std::to_string(domain_size));
    }
  }
  for (std::size_t t = 0; t < terms.size(); ++t) {
    const auto& term = terms[t];
    if (term.func >= functions.size()) {
      throw std::out_of_range("term " + std::to_string(t) + " refers to missing function " +
                              std::to_string(term.func));
    }
    if (term.app.size() != functions[term.func].arity) {
      throw DimensionError("term " + std::to_string(t) + " applies an arity-" +
                           std::to_string(functions[term.func].arity) + " function to " +
                           std::to_string(term.app.size()) + " variables");
    }
    for (auto v : term.app) {
      if (v >= num_vars) {
        throw std::out_of_range("term " + std::to_string(t) + " uses variable " + std::to_string(v) +
                                " of " + std::to_string(num_vars));
      }
    }
  }
}

namespace {

void check_assignment(const VcspInstance& I, std::span<const std::size_t> x) {
  if (x.size() != I.num_vars) {
    throw DimensionError("assignment has " + std::to_string(x.size()) + " entries, instance has " +
                         std::to_string(I.num_vars) + " variables");
  }
  for (auto v : x) {
    if (v >= I.domain_size) {
      throw std::out_of_range("label " + std::to_string(v) + " outside domain of size " +
                              std::to_string(I.domain_size));
    }
  }
}

}  // namespace

Rat eval_solution(const VcspInstance& I, std::span<const std::size_t> x) {
  I.check();
  check_assignment(I, x);
  Rat total;
  std::vector<std::size_t> args;
  for (const auto& term : I.terms) {
    args.clear();
    for (auto v : term.app) {
      args.push_back(x[v]);
    }
    total += I.functions[term.func](args);
  }
  return total;
}

BruteForceOptimum brute_force_optimum(const VcspInstance& I, std::size_t cap) {
  I.check();
  const std::size_t count = checked_power(I.domain_size, I.num_vars, cap);
  std::optional<BruteForceOptimum> best;
  for (std::size_t idx = 0; idx < count; ++idx) {
    Assignment x = tuple_at(idx, I.num_vars, I.domain_size);
    Rat value = eval_solution(I, x);
    if (!best || value < best->value) {
      best = BruteForceOptimum{std::move(value), std::move(x)};
    }
  }
  if (!best) {
    throw std::invalid_argument("brute_force_optimum: empty domain has no assignments");
  }
  return *std::move(best);
}

void FractionalOperation::check() const {
  const std::size_t expected = checked_power(domain_size, arity, SIZE_MAX);
  for (std::size_t g = 0; g < ops.size(); ++g) {
    if (ops[g].size() != expected) {
      throw DimensionError("operation " + std::to_string(g) + " has " + std::to_string(ops[g].size()) +
                           " entries, expected " + std::to_string(expected));
    }
    for (auto v : ops[g]) {
      if (v >= domain_size) {
        throw std::out_of_range("operation " + std::to_string(g) + " returns label " +
                                std::to_string(v));
      }
    }
  }
}

std::size_t FractionalOperation::apply(std::size_t op, std::span<const std::size_t> args) const {
  return ops[op][tuple_index(args, domain_size)];
}

std::vector<Assignment> fractional_tt(const FractionalOperation& omega, std::span<const Assignment> xs) {
  omega.check();
  if (xs.size() != omega.arity) {
    throw DimensionError("fractional_tt: " + std::to_string(xs.size()) + " assignments for an arity-" +
                         std::to_string(omega.arity) + " operation");
  }
  const std::size_t width = xs.empty() ? 0 : xs.front().size();
  for (const auto& x : xs) {
    if (x.size() != width) {
      throw DimensionError("fractional_tt: assignments differ in length");
    }
  }
  std::vector<Assignment> out;
  std::vector<std::size_t> column(omega.arity);
  for (std::size_t g = 0; g < omega.size(); ++g) {
    Assignment y(width);
    for (std::size_t i = 0; i < width; ++i) {
      for (std::size_t k = 0; k < omega.arity; ++k) {
        column[k] = xs[k][i];
      }
      y[i] = omega.apply(g, column);
    }
    out.push_back(std::move(y));
  }
  return out;
}

bool admits_fractional(const CostFunction& f, const FractionalOperation& omega, std::size_t cap) {
  f.check();
  omega.check();
  if (f.domain_size != omega.domain_size) {
    throw DimensionError("admits_fractional: domain sizes differ");
  }
  const std::size_t m = omega.arity;
  const std::size_t n = f.arity;
  const std::size_t families = checked_power(f.domain_size, m * n, cap);
  const Rat m_rat(static_cast<long>(m));
  const Rat size_rat(static_cast<long>(omega.size()));

  std::vector<Assignment> xs(m, Assignment(n));
  for (std::size_t idx = 0; idx < families; ++idx) {
    const auto digits = tuple_at(idx, m * n, f.domain_size);
    Rat rhs;
    for (std::size_t k = 0; k < m; ++k) {
      std::copy_n(digits.begin() + static_cast<std::ptrdiff_t>(k * n), n, xs[k].begin());
      rhs += f(xs[k]);
    }
    Rat lhs;
    for (const auto& y : fractional_tt(omega, xs)) {
      lhs += f(y);
    }
    if (m_rat * lhs > size_rat * rhs) {
      return false;
    }
  }
  return true;
}

bool is_symmetric(const FractionalOperation& omega, std::size_t cap) {
  omega.check();
  const std::size_t inputs = checked_power(omega.domain_size, omega.arity, cap);
  for (std::size_t g = 0; g < omega.size(); ++g) {
    for (std::size_t idx = 0; idx < inputs; ++idx) {
      auto args = tuple_at(idx, omega.arity, omega.domain_size);
      const std::size_t value = omega.ops[g][idx];
      for (std::size_t k = 0; k + 1 < omega.arity; ++k) {
        std::swap(args[k], args[k + 1]);
        if (omega.apply(g, args) != value) {
          return false;
        }
        std::swap(args[k], args[k + 1]);
      }
    }
  }
  return true;
}

std::optional<std::pair<std::size_t, std::size_t>> max_cut_witness(const CostFunction& f) {
  f.check();
  if (f.arity != 2) {
    throw std::invalid_argument("max-cut property needs a binary function, got arity " +
                                std::to_string(f.arity));
  }
  if (f.table.empty()) {
    return std::nullopt;
  }
  const Rat& lowest = *std::min_element(f.table.begin(), f.table.end());
  std::vector<std::pair<std::size_t, std::size_t>> argmin;
  for (std::size_t idx = 0; idx < f.table.size(); ++idx) {
    if (f.table[idx] == lowest) {
      argmin.emplace_back(idx / f.domain_size, idx % f.domain_size);
    }
  }
  if (argmin.size() == 2 && argmin[0].first != argmin[0].second &&
      argmin[1] == std::pair{argmin[0].second, argmin[0].first}) {
    return argmin[0];
  }
  return std::nullopt;
}

BlpRelaxation relax_blp(const VcspInstance& I) {
  I.check();
  if (I.domain_size == 0) {
    throw std::invalid_argument("relax_blp: empty domain");
  }
  const std::size_t d = I.domain_size;
  BlpRelaxation out;
  BlpLegend& legend = out.legend;

  std::vector<std::size_t> joint_offset;
  for (std::size_t t = 0; t < I.terms.size(); ++t) {
    joint_offset.push_back(legend.columns.size());
    const std::size_t arity = I.terms[t].app.size();
    const std::size_t tuples = checked_power(d, arity, SIZE_MAX);
    for (std::size_t v = 0; v < tuples; ++v) {
      legend.columns.push_back({BlpLegend::Column::Kind::Joint, t, tuple_at(v, arity, d)});
    }
  }
  legend.marginal_offset = legend.columns.size();
  for (std::size_t i = 0; i < I.num_vars; ++i) {
    for (std::size_t a = 0; a < d; ++a) {
      legend.columns.push_back({BlpLegend::Column::Kind::Marginal, i, {a}});
    }
  }

  for (std::size_t t = 0; t < I.terms.size(); ++t) {
    for (std::size_t k = 0; k < I.terms[t].app.size(); ++k) {
      for (std::size_t a = 0; a < d; ++a) {
        legend.rows.push_back({BlpLegend::Row::Kind::Consistency, t, k, a});
      }
    }
  }
  for (std::size_t i = 0; i < I.num_vars; ++i) {
    legend.rows.push_back({BlpLegend::Row::Kind::MarginalTotal, i});
  }
  for (std::size_t t = 0; t < I.terms.size(); ++t) {
    legend.rows.push_back({BlpLegend::Row::Kind::JointTotal, t});
  }

  CanonicalLP& lp = out.lp;
  lp.A = QMat(legend.rows.size(), legend.columns.size());
  lp.b.assign(legend.rows.size(), Rat(0));
  lp.c.assign(legend.columns.size(), Rat(0));

  for (std::size_t r = 0; r < legend.rows.size(); ++r) {
    const auto& row = legend.rows[r];
    switch (row.kind) {
      case BlpLegend::Row::Kind::Consistency: {
        const auto& term = I.terms[row.term_or_var];
        const std::size_t tuples = checked_power(d, term.app.size(), SIZE_MAX);
        for (std::size_t v = 0; v < tuples; ++v) {
          const std::size_t col = joint_offset[row.term_or_var] + v;
          if (legend.columns[col].tuple[row.position] == row.label) {
            lp.A(r, col) = Rat(1);
          }
        }
        lp.A(r, legend.marginal_offset + term.app[row.position] * d + row.label) = Rat(-1);
        break;
      }
      case BlpLegend::Row::Kind::MarginalTotal:
        for (std::size_t a = 0; a < d; ++a) {
          lp.A(r, legend.marginal_offset + row.term_or_var * d + a) = Rat(1);
        }
        lp.b[r] = Rat(1);
        break;
      case BlpLegend::Row::Kind::JointTotal: {
        const std::size_t tuples = checked_power(d, I.terms[row.term_or_var].app.size(), SIZE_MAX);
        for (std::size_t v = 0; v < tuples; ++v) {
          lp.A(r, joint_offset[row.term_or_var] + v) = Rat(1);
        }
        lp.b[r] = Rat(1);
        break;
      }
    }
  }

  for (std::size_t col = 0; col < legend.marginal_offset; ++col) {
    const auto& column = legend.columns[col];
    lp.c[col] = I.functions[I.terms[column.term_or_var].func](column.tuple);
  }
  return out;
}

QVec solution_to_blp(const VcspInstance& I, std::span<const std::size_t> x) {
  I.check();
  check_assignment(I, x);
  const std::size_t d = I.domain_size;
  std::size_t joint_columns = 0;
  std::vector<std::size_t> offsets;
  for (const auto& term : I.terms) {
    offsets.push_back(joint_columns);
    joint_columns += checked_power(d, term.app.size(), SIZE_MAX);
  }
  QVec z(joint_columns + I.num_vars * d);
  std::vector<std::size_t> image;
  for (std::size_t t = 0; t < I.terms.size(); ++t) {
    image.clear();
    for (auto v : I.terms[t].app) {
      image.push_back(x[v]);
    }
    z[offsets[t] + tuple_index(image, d)] = Rat(1);
  }
  for (std::size_t i = 0; i < I.num_vars; ++i) {
    z[joint_columns + i * d + x[i]] = Rat(1);
  }
  return z;
}

BlpMinimum blp_minimum(const VcspInstance& I) {
  BlpRelaxation relax = relax_blp(I);
  MinResult r = canonical_lp_minimize(relax.lp);
  auto* min = std::get_if<Minimum>(&r);
  if (min == nullptr) {
    throw std::logic_error("basic LP relaxation reported infeasible or unbounded");
  }
  return {min->value, std::move(min->x)};
}

}  // namespace exactdual
