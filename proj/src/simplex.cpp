#include "exactdual/simplex.hpp"

#include <optional>

namespace exactdual {

void CanonicalLP::check_shape() const {
  if (b.size() != A.rows()) {
    throw DimensionError("canonical LP: b has " + std::to_string(b.size()) + " entries, A has " +
                         std::to_string(A.rows()) + " rows");
  }
  if (c.size() != A.cols()) {
    throw DimensionError("canonical LP: c has " + std::to_string(c.size()) + " entries, A has " +
                         std::to_string(A.cols()) + " columns");
  }
}

bool canonical_is_solution(const CanonicalLP& lp, std::span<const Rat> x) {
  lp.check_shape();
  if (x.size() != lp.A.cols()) {
    throw DimensionError("canonical_is_solution: wrong vector length");
  }
  return all_nonneg(x) && mat_vec_mul(lp.A, x) == lp.b;
}

namespace {

// Dense tableau. Row `m` holds reduced costs; column `n` holds the right-hand
// side (and minus the objective value in the cost row).
class Tableau {
 public:
  Tableau(std::size_t m, std::size_t n) : m_(m), n_(n), cells_((m + 1) * (n + 1)), basis_(m) {}

  [[nodiscard]] std::size_t rows() const { return m_; }
  [[nodiscard]] std::size_t cols() const { return n_; }

  Rat& at(std::size_t i, std::size_t j) { return cells_[i * (n_ + 1) + j]; }
  [[nodiscard]] const Rat& at(std::size_t i, std::size_t j) const { return cells_[i * (n_ + 1) + j]; }
  Rat& rhs(std::size_t i) { return at(i, n_); }
  [[nodiscard]] const Rat& rhs(std::size_t i) const { return at(i, n_); }
  Rat& cost(std::size_t j) { return at(m_, j); }
  [[nodiscard]] const Rat& cost(std::size_t j) const { return at(m_, j); }

  std::vector<std::size_t>& basis() { return basis_; }
  [[nodiscard]] const std::vector<std::size_t>& basis() const { return basis_; }

  void pivot(std::size_t r, std::size_t c) {
    const Rat inv = at(r, c).inverse();
    for (std::size_t j = 0; j <= n_; ++j) {
      if (!at(r, j).is_zero()) {
        at(r, j) *= inv;
      }
    }
    for (std::size_t i = 0; i <= m_; ++i) {
      if (i == r || at(i, c).is_zero()) {
        continue;
      }
      const Rat factor = at(i, c);
      for (std::size_t j = 0; j <= n_; ++j) {
        if (!at(r, j).is_zero()) {
          at(i, j) -= factor * at(r, j);
        }
      }
    }
    basis_[r] = c;
  }

  // Bland's rule. Returns nullopt at optimality, or the entering column with
  // the leaving row (nullopt row = unbounded direction).
  struct Step {
    std::size_t column;
    std::optional<std::size_t> row;
  };

  std::optional<Step> next_step() const {
    std::optional<std::size_t> entering;
    for (std::size_t j = 0; j < n_; ++j) {
      if (cost(j).sign() < 0) {
        entering = j;
        break;
      }
    }
    if (!entering) {
      return std::nullopt;
    }
    const std::size_t c = *entering;
    std::optional<std::size_t> leaving;
    Rat best;
    for (std::size_t i = 0; i < m_; ++i) {
      if (at(i, c).sign() <= 0) {
        continue;
      }
      Rat ratio = rhs(i) / at(i, c);
      if (!leaving || ratio < best || (ratio == best && basis_[i] < basis_[*leaving])) {
        leaving = i;
        best = std::move(ratio);
      }
    }
    return Step{c, leaving};
  }

  // Runs to optimality; returns the unbounded column if one is found.
  std::optional<std::size_t> optimize() {
    while (auto step = next_step()) {
      if (!step->row) {
        return step->column;
      }
      pivot(*step->row, step->column);
    }
    return std::nullopt;
  }

  [[nodiscard]] QVec basic_solution(std::size_t width) const {
    QVec x(width);
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < width) {
        x[basis_[i]] = rhs(i);
      }
    }
    return x;
  }

 private:
  std::size_t m_;
  std::size_t n_;
  std::vector<Rat> cells_;
  std::vector<std::size_t> basis_;
};

struct PhaseOne {
  Tableau tableau;
  std::optional<Infeasible> infeasible;
  std::vector<bool> redundant;
};

PhaseOne phase_one(const QMat& A, std::span<const Rat> b) {
  const std::size_t m = A.rows();
  const std::size_t n = A.cols();
  Tableau t(m, n + m);
  std::vector<int> sign(m, 1);
  for (std::size_t i = 0; i < m; ++i) {
    sign[i] = b[i].sign() < 0 ? -1 : 1;
    for (std::size_t j = 0; j < n; ++j) {
      t.at(i, j) = sign[i] < 0 ? -A(i, j) : A(i, j);
      t.cost(j) -= t.at(i, j);
    }
    t.at(i, n + i) = Rat(1);
    t.rhs(i) = sign[i] < 0 ? -b[i] : b[i];
    t.at(m, n + m) -= t.rhs(i);
    t.basis()[i] = n + i;
  }

  // Phase one is bounded below by zero, so no unbounded column can appear.
  t.optimize();

  PhaseOne result{std::move(t), std::nullopt, std::vector<bool>(m, false)};
  Tableau& tab = result.tableau;
  if (tab.at(m, n + m).sign() < 0) {
    // Simplex multipliers pi_i = 1 - reduced cost of artificial i; the
    // certificate undoes the row sign flips.
    QVec y(m);
    for (std::size_t i = 0; i < m; ++i) {
      Rat pi = Rat(1) - tab.cost(n + i);
      y[i] = sign[i] < 0 ? pi : -pi;
    }
    result.infeasible = Infeasible{std::move(y)};
    return result;
  }

  // Drive zero-level artificials out of the basis; rows where that is
  // impossible are linear combinations of the others.
  for (std::size_t r = 0; r < m; ++r) {
    if (tab.basis()[r] < n) {
      continue;
    }
    bool moved = false;
    for (std::size_t j = 0; j < n; ++j) {
      if (!tab.at(r, j).is_zero()) {
        tab.pivot(r, j);
        moved = true;
        break;
      }
    }
    result.redundant[r] = !moved;
  }
  return result;
}

}  // namespace

std::variant<QVec, Infeasible> find_nonneg_solution(const QMat& A, std::span<const Rat> b) {
  if (b.size() != A.rows()) {
    throw DimensionError("find_nonneg_solution: b has " + std::to_string(b.size()) +
                         " entries, A has " + std::to_string(A.rows()) + " rows");
  }
  PhaseOne p1 = phase_one(A, b);
  if (p1.infeasible) {
    return *std::move(p1.infeasible);
  }
  return p1.tableau.basic_solution(A.cols());
}

MinResult canonical_lp_minimize(const QMat& A, std::span<const Rat> b, std::span<const Rat> c) {
  if (b.size() != A.rows() || c.size() != A.cols()) {
    throw DimensionError("canonical_lp_minimize: A is " + std::to_string(A.rows()) + "x" +
                         std::to_string(A.cols()) + ", b has " + std::to_string(b.size()) +
                         ", c has " + std::to_string(c.size()));
  }
  const std::size_t n = A.cols();
  PhaseOne p1 = phase_one(A, b);
  if (p1.infeasible) {
    return *std::move(p1.infeasible);
  }

  const Tableau& t1 = p1.tableau;
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < t1.rows(); ++i) {
    if (!p1.redundant[i]) {
      kept.push_back(i);
    }
  }

  Tableau t(kept.size(), n);
  for (std::size_t k = 0; k < kept.size(); ++k) {
    const std::size_t i = kept[k];
    for (std::size_t j = 0; j < n; ++j) {
      t.at(k, j) = t1.at(i, j);
    }
    t.rhs(k) = t1.rhs(i);
    t.basis()[k] = t1.basis()[i];
  }
  for (std::size_t j = 0; j < n; ++j) {
    t.cost(j) = c[j];
  }
  for (std::size_t k = 0; k < kept.size(); ++k) {
    const Rat& cb = c[t.basis()[k]];
    if (cb.is_zero()) {
      continue;
    }
    for (std::size_t j = 0; j <= n; ++j) {
      if (!t.at(k, j).is_zero()) {
        t.at(kept.size(), j) -= cb * t.at(k, j);
      }
    }
  }

  if (auto column = t.optimize()) {
    QVec point = t.basic_solution(n);
    QVec ray(n);
    ray[*column] = Rat(1);
    for (std::size_t k = 0; k < t.rows(); ++k) {
      ray[t.basis()[k]] = -t.at(k, *column);
    }
    return Unbounded{std::move(point), std::move(ray)};
  }
  return Minimum{-t.rhs(kept.size()), t.basic_solution(n)};
}

MinResult canonical_lp_minimize(const CanonicalLP& lp) {
  return canonical_lp_minimize(lp.A, lp.b, lp.c);
}

}  // namespace exactdual
