#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "exactdual/simplex.hpp"

namespace exactdual {

/// Labels are 0..d-1; assignments map each variable to a label.
using Assignment = std::vector<std::size_t>;

/// Thrown when an exhaustive enumeration would exceed its configured cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultEnumerationCap = 1'000'000;

/// n-ary cost function over labels 0..d-1, tabulated row-major with the last
/// coordinate fastest.
struct CostFunction {
  std::size_t arity = 0;
  std::size_t domain_size = 0;
  std::vector<Rat> table;

  void check() const;
  [[nodiscard]] const Rat& operator()(std::span<const std::size_t> tuple) const;
  friend bool operator==(const CostFunction&, const CostFunction&) = default;
};

struct VcspTerm {
  std::size_t func = 0;
  std::vector<std::size_t> app;
  friend bool operator==(const VcspTerm&, const VcspTerm&) = default;
};

/// Terms form a multiset; position distinguishes equal copies.
struct VcspInstance {
  std::size_t domain_size = 0;
  std::size_t num_vars = 0;
  std::vector<CostFunction> functions;
  std::vector<VcspTerm> terms;
  /// Optional display names for labels 0..d-1.
  std::vector<std::string> labels;

  void check() const;
  friend bool operator==(const VcspInstance&, const VcspInstance&) = default;
};

/// Row-major index of a tuple over labels 0..d-1.
std::size_t tuple_index(std::span<const std::size_t> tuple, std::size_t domain_size);
/// Inverse of tuple_index.
std::vector<std::size_t> tuple_at(std::size_t index, std::size_t length, std::size_t domain_size);
/// d^n, throwing CapExceeded when it passes `cap`.
std::size_t checked_power(std::size_t d, std::size_t n, std::size_t cap);

Rat eval_solution(const VcspInstance& I, std::span<const std::size_t> x);

struct BruteForceOptimum {
  Rat value;
  Assignment argmin;
};

/// Exhaustive minimum; the lexicographically smallest minimizer wins ties.
BruteForceOptimum brute_force_optimum(const VcspInstance& I, std::size_t cap = kDefaultEnumerationCap);

/// A multiset of m-ary operations on labels 0..d-1, each tabulated like a
/// cost function.
struct FractionalOperation {
  std::size_t arity = 0;
  std::size_t domain_size = 0;
  std::vector<std::vector<std::size_t>> ops;

  void check() const;
  [[nodiscard]] std::size_t size() const { return ops.size(); }
  [[nodiscard]] bool is_valid() const { return !ops.empty(); }
  [[nodiscard]] std::size_t apply(std::size_t op, std::span<const std::size_t> args) const;
};

/// For each g in omega, the assignment i -> g(x_0 i, ..., x_{m-1} i).
std::vector<Assignment> fractional_tt(const FractionalOperation& omega, std::span<const Assignment> xs);

/// m * sum_g f(g(x)) <= |omega| * sum_k f(x_k) for every family x of m
/// n-tuples.
bool admits_fractional(const CostFunction& f, const FractionalOperation& omega,
                       std::size_t cap = kDefaultEnumerationCap);

bool is_symmetric(const FractionalOperation& omega, std::size_t cap = kDefaultEnumerationCap);

/// Labels (a, b), a != b, whose two orderings are exactly the argmin of the
/// binary function f. Throws std::invalid_argument unless f is binary.
std::optional<std::pair<std::size_t, std::size_t>> max_cut_witness(const CostFunction& f);
inline bool has_max_cut_property(const CostFunction& f) { return max_cut_witness(f).has_value(); }

/// Column and row semantics of the relaxation, in index order.
struct BlpLegend {
  struct Column {
    enum class Kind { Joint, Marginal } kind;
    std::size_t term_or_var;
    std::vector<std::size_t> tuple;  // joint tuple, or {label} for marginals
  };
  struct Row {
    enum class Kind { Consistency, MarginalTotal, JointTotal } kind;
    std::size_t term_or_var;
    std::size_t position = 0;  // consistency rows only
    std::size_t label = 0;     // consistency rows only
  };
  std::vector<Column> columns;
  std::vector<Row> rows;
  /// First marginal column; columns before it are joint.
  std::size_t marginal_offset = 0;
};

struct BlpRelaxation {
  CanonicalLP lp;
  BlpLegend legend;
};

/// Basic LP relaxation: joint distributions per term copy, marginals per
/// variable, consistency and normalization rows.
BlpRelaxation relax_blp(const VcspInstance& I);

/// Indicator embedding of an integral assignment into the relaxation.
QVec solution_to_blp(const VcspInstance& I, std::span<const std::size_t> x);

struct BlpMinimum {
  Rat value;
  QVec witness;
};

BlpMinimum blp_minimum(const VcspInstance& I);

}  // namespace exactdual
