#include "exactdual/farkas.hpp"

#include <algorithm>
#include <array>

#include "exactdual/simplex.hpp"

namespace exactdual {

std::string_view to_string(AlternativeKind kind) {
  switch (kind) {
    case AlternativeKind::LinearSystem:
      return "linear_system";
    case AlternativeKind::EqualityFarkas:
      return "equality_farkas";
    case AlternativeKind::InequalityFarkas:
      return "inequality_farkas";
  }
  return "unknown";
}

namespace {

void check_rhs(const QMat& A, std::span<const Rat> b, const char* who) {
  if (b.size() != A.rows()) {
    throw DimensionError(std::string(who) + ": b has " + std::to_string(b.size()) +
                         " entries, A has " + std::to_string(A.rows()) + " rows");
  }
}

}  // namespace

Certificate solve_linear_alternative(const QMat& A, std::span<const Rat> b) {
  check_rhs(A, b, "solve_linear_alternative");
  const std::size_t m = A.rows();
  const std::size_t n = A.cols();

  // Work on [A | b | I]; the identity part records which combination of the
  // original rows produced each current row.
  const std::size_t width = n + 1 + m;
  QMat w(m, width);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      w(i, j) = A(i, j);
    }
    w(i, n) = b[i];
    w(i, n + 1 + i) = Rat(1);
  }

  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < m; ++col) {
    std::size_t p = r;
    while (p < m && w(p, col).is_zero()) {
      ++p;
    }
    if (p == m) {
      continue;
    }
    if (p != r) {
      for (std::size_t j = 0; j < width; ++j) {
        std::swap(w(p, j), w(r, j));
      }
    }
    const Rat inv = w(r, col).inverse();
    for (std::size_t j = 0; j < width; ++j) {
      w(r, j) *= inv;
    }
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || w(i, col).is_zero()) {
        continue;
      }
      const Rat f = w(i, col);
      for (std::size_t j = 0; j < width; ++j) {
        if (!w(r, j).is_zero()) {
          w(i, j) -= f * w(r, j);
        }
      }
    }
    pivot_cols.push_back(col);
    ++r;
  }

  for (std::size_t i = r; i < m; ++i) {
    if (!w(i, n).is_zero()) {
      QVec y(m);
      for (std::size_t k = 0; k < m; ++k) {
        y[k] = w(i, n + 1 + k);
      }
      return Dual{std::move(y)};
    }
  }

  QVec x(n);
  for (std::size_t k = 0; k < pivot_cols.size(); ++k) {
    x[pivot_cols[k]] = w(k, n);
  }
  return Primal{std::move(x)};
}

Certificate farkas_equality(const QMat& A, std::span<const Rat> b) {
  check_rhs(A, b, "farkas_equality");
  auto result = find_nonneg_solution(A, b);
  if (auto* x = std::get_if<QVec>(&result)) {
    return Primal{std::move(*x)};
  }
  return Dual{std::get<Infeasible>(std::move(result)).y};
}

Certificate farkas_inequality(const QMat& A, std::span<const Rat> b) {
  check_rhs(A, b, "farkas_inequality");
  const QMat slack_form = from_cols(std::array{A, identity(A.rows())});
  Certificate cert = farkas_equality(slack_form, b);
  if (auto* p = std::get_if<Primal>(&cert)) {
    p->x.resize(A.cols());
  }
  return cert;
}

bool verify_certificate(AlternativeKind kind, const QMat& A, std::span<const Rat> b,
                        const Certificate& cert) {
  check_rhs(A, b, "verify_certificate");
  if (const auto* p = std::get_if<Primal>(&cert)) {
    const QVec& x = p->x;
    if (x.size() != A.cols()) {
      return false;
    }
    const QVec ax = mat_vec_mul(A, x);
    switch (kind) {
      case AlternativeKind::LinearSystem:
        return std::equal(ax.begin(), ax.end(), b.begin(), b.end());
      case AlternativeKind::EqualityFarkas:
        return all_nonneg(x) && std::equal(ax.begin(), ax.end(), b.begin(), b.end());
      case AlternativeKind::InequalityFarkas:
        return all_nonneg(x) && vec_le(ax, b);
    }
    return false;
  }

  const QVec& y = std::get<Dual>(cert).y;
  if (y.size() != A.rows()) {
    return false;
  }
  const QVec aty = mat_vec_mul(transpose(A), y);
  const Rat by = dot_product(b, y);
  switch (kind) {
    case AlternativeKind::LinearSystem:
      return is_zero(aty) && !by.is_zero();
    case AlternativeKind::EqualityFarkas:
      return all_nonneg(aty) && by.sign() < 0;
    case AlternativeKind::InequalityFarkas:
      return all_nonneg(y) && all_nonneg(aty) && by.sign() < 0;
  }
  return false;
}

bool verify_inequality_dual_neg(const QMat& A, std::span<const Rat> b, std::span<const Rat> y) {
  check_rhs(A, b, "verify_inequality_dual_neg");
  if (y.size() != A.rows() || !all_nonneg(y)) {
    return false;
  }
  const QVec neg_aty = mat_vec_mul(negate(transpose(A)), y);
  return vec_le(neg_aty, QVec(A.cols())) && dot_product(b, y).sign() < 0;
}

}  // namespace exactdual
