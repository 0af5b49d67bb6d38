#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "exactdual/matrix.hpp"
#include "exactdual/rational.hpp"

namespace exactdual {

/// An element of Q extended with bottom (negative infinity) and top (positive
/// infinity). Bottom wins every mixed operation: bot + top = bot, 0 * bot = bot.
class Ext {
 public:
  enum class Kind { Bot, Fin, Top };

  Ext() = default;
  Ext(Rat value) : value_(std::move(value)) {}  // NOLINT(google-explicit-constructor)
  Ext(long value) : value_(value) {}            // NOLINT(google-explicit-constructor)

  static Ext bot() { return Ext(Kind::Bot); }
  static Ext top() { return Ext(Kind::Top); }

  /// "bot", "top" (any case) or a rational literal.
  static Ext parse(std::string_view text);

  [[nodiscard]] Kind kind() const { return kind_; }
  [[nodiscard]] bool is_bot() const { return kind_ == Kind::Bot; }
  [[nodiscard]] bool is_top() const { return kind_ == Kind::Top; }
  [[nodiscard]] bool is_finite() const { return kind_ == Kind::Fin; }

  /// Payload of a finite value; throws std::logic_error on bot/top.
  [[nodiscard]] const Rat& value() const;

  [[nodiscard]] std::string str() const;

  friend bool operator==(const Ext& a, const Ext& b) {
    return a.kind_ == b.kind_ && (a.kind_ != Kind::Fin || a.value_ == b.value_);
  }

 private:
  explicit Ext(Kind k) : kind_(k) {}

  Kind kind_ = Kind::Fin;
  Rat value_;
};

using EVec = std::vector<Ext>;
using EMat = Matrix<Ext>;
using NNVec = std::vector<NNRat>;

/// A four-state optimum: nullopt means "no optimum" (infimum not attained).
using Optimum = std::optional<Ext>;

Ext ext_add(const Ext& x, const Ext& y);
Ext ext_neg(const Ext& x);
Ext ext_smul(const NNRat& c, const Ext& x);
bool ext_le(const Ext& x, const Ext& y);
inline bool ext_lt(const Ext& x, const Ext& y) { return !ext_le(y, x); }

inline Ext operator+(const Ext& x, const Ext& y) { return ext_add(x, y); }
inline Ext operator-(const Ext& x) { return ext_neg(x); }
inline bool operator<=(const Ext& x, const Ext& y) { return ext_le(x, y); }
inline bool operator<(const Ext& x, const Ext& y) { return ext_lt(x, y); }

/// Weighted sum over w[i] * v[i]; the empty sum is 0.
Ext dot_weig(std::span<const Ext> v, std::span<const NNRat> w);

/// Row-wise dot_weig of M with w.
EVec mul_weig(const EMat& m, std::span<const NNRat> w);

EMat ext_neg(const EMat& m);

/// Converts a nonnegative finite vector; throws std::domain_error otherwise.
NNVec to_nonneg(std::span<const Rat> v);
QVec to_rat(std::span<const NNRat> v);
EVec to_ext(std::span<const Rat> v);
EMat to_ext(const QMat& m);

std::string to_string(const Optimum& opt);

}  // namespace exactdual
