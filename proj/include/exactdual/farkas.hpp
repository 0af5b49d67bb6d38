#pragma once

#include <string_view>
#include <variant>

#include "exactdual/matrix.hpp"

namespace exactdual {

struct Primal {
  QVec x;
  friend bool operator==(const Primal&, const Primal&) = default;
};

struct Dual {
  QVec y;
  friend bool operator==(const Dual&, const Dual&) = default;
};

/// Witness for exactly one side of a theorem of alternatives.
using Certificate = std::variant<Primal, Dual>;

enum class AlternativeKind {
  /// A x = b, or A^T y = 0 with b.y != 0.
  LinearSystem,
  /// x >= 0 with A x = b, or A^T y >= 0 with b.y < 0.
  EqualityFarkas,
  /// x >= 0 with A x <= b, or y >= 0 with A^T y >= 0 and b.y < 0.
  InequalityFarkas,
};

std::string_view to_string(AlternativeKind kind);

inline bool is_primal(const Certificate& c) { return std::holds_alternative<Primal>(c); }
inline bool is_dual(const Certificate& c) { return std::holds_alternative<Dual>(c); }

/// Gauss-Jordan elimination on [A | b]; an inconsistent row yields y.
Certificate solve_linear_alternative(const QMat& A, std::span<const Rat> b);

Certificate farkas_equality(const QMat& A, std::span<const Rat> b);

/// Adds slacks and delegates to farkas_equality; the dual certificate passes
/// through unchanged.
Certificate farkas_inequality(const QMat& A, std::span<const Rat> b);

/// Rechecks every condition of the alternative from the raw data alone.
/// Throws DimensionError when A and b disagree; a wrong-length witness is
/// simply rejected.
bool verify_certificate(AlternativeKind kind, const QMat& A, std::span<const Rat> b,
                        const Certificate& cert);

/// The inequality dual in its sign-flipped form: y >= 0, -A^T y <= 0, b.y < 0.
bool verify_inequality_dual_neg(const QMat& A, std::span<const Rat> b, std::span<const Rat> y);

}  // namespace exactdual
