#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "exactdual/extended_lp.hpp"
#include "exactdual/simplex.hpp"
#include "exactdual/standard_lp.hpp"
#include "exactdual/vcsp.hpp"

namespace exactdual::cli {

enum class ProblemKind { lp, elp, farkas_eq, farkas_ineq, farkas_lin, vcsp, canonical_lp };

std::string_view to_string(ProblemKind kind);

/// A matrix and right-hand side for one of the three alternatives.
struct FarkasProblem {
  QMat A;
  QVec b;
  friend bool operator==(const FarkasProblem&, const FarkasProblem&) = default;
};

using ProblemPayload = std::variant<StandardLP, ExtendedLP, FarkasProblem, VcspInstance, CanonicalLP>;

struct ProblemFile {
  ProblemKind kind;
  ProblemPayload payload;
  friend bool operator==(const ProblemFile&, const ProblemFile&) = default;
};

/// Diagnostic for an unusable problem file. `where` is "line L, column C" for
/// syntax errors and a JSON pointer such as "/A/1/0" for content errors.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string where, const std::string& message);
  [[nodiscard]] const std::string& where() const { return where_; }

 private:
  std::string where_;
};

ProblemFile parse_problem(std::string_view text);

/// Pretty JSON that parse_problem maps back to an equal ProblemFile.
std::string emit_problem(const ProblemFile& problem);

}  // namespace exactdual::cli
