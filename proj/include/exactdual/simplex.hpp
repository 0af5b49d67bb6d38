#pragma once

#include <variant>

#include "exactdual/matrix.hpp"

namespace exactdual {

/// minimize c.x subject to A x = b, x >= 0.
struct CanonicalLP {
  QMat A;
  QVec b;
  QVec c;

  void check_shape() const;
  friend bool operator==(const CanonicalLP&, const CanonicalLP&) = default;
};

/// x >= 0 and A x = b exactly.
bool canonical_is_solution(const CanonicalLP& lp, std::span<const Rat> x);

struct Infeasible {
  /// Farkas multipliers: A^T y >= 0 and b.y < 0.
  QVec y;
};

struct Unbounded {
  /// A feasible point and a direction with A ray = 0, ray >= 0, c.ray < 0.
  QVec point;
  QVec ray;
};

struct Minimum {
  Rat value;
  QVec x;
};

using MinResult = std::variant<Infeasible, Unbounded, Minimum>;

/// Exact two-phase simplex with Bland's smallest-index rule.
MinResult canonical_lp_minimize(const CanonicalLP& lp);
MinResult canonical_lp_minimize(const QMat& A, std::span<const Rat> b, std::span<const Rat> c);

/// Phase one alone: either a point x >= 0 with A x = b, or multipliers y
/// with A^T y >= 0 and b.y < 0.
std::variant<QVec, Infeasible> find_nonneg_solution(const QMat& A, std::span<const Rat> b);

}  // namespace exactdual
