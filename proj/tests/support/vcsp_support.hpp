#pragma once

// Random valued CSP instances and direct re-implementations of the VCSP
// semantics used as oracles by the unit and acceptance suites.

#include <functional>
#include <optional>
#include <vector>

#include "exactdual/vcsp.hpp"
#include "support/oracles.hpp"

namespace testing_support {

using namespace exactdual;

/// Table lookup with the row-major index computed by hand.
inline Rat lookup(const CostFunction& f, const std::vector<std::size_t>& tuple) {
  std::size_t idx = 0;
  for (std::size_t v : tuple) {
    idx = idx * f.domain_size + v;
  }
  return f.table.at(idx);
}

inline Rat oracle_eval(const VcspInstance& I, const std::vector<std::size_t>& x) {
  Rat sum;
  for (const auto& t : I.terms) {
    std::vector<std::size_t> args;
    for (std::size_t v : t.app) {
      args.push_back(x.at(v));
    }
    sum += lookup(I.functions.at(t.func), args);
  }
  return sum;
}

/// Calls `fn` on every word of the given length over 0..d-1, in
/// lexicographic order.
inline void for_each_word(std::size_t length, std::size_t d,
                          const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> w(length, 0);
  if (d == 0 && length > 0) {
    return;
  }
  while (true) {
    fn(w);
    std::size_t k = length;
    while (k > 0 && w[k - 1] + 1 == d) {
      w[k - 1] = 0;
      --k;
    }
    if (k == 0) {
      return;
    }
    ++w[k - 1];
  }
}

inline Rat oracle_brute_minimum(const VcspInstance& I) {
  std::optional<Rat> best;
  for_each_word(I.num_vars, I.domain_size, [&](const std::vector<std::size_t>& x) {
    const Rat v = oracle_eval(I, x);
    if (!best || v < *best) {
      best = v;
    }
  });
  return *best;
}

inline CostFunction random_function(RandomRats& gen, std::size_t arity, std::size_t d) {
  CostFunction f{arity, d, {}};
  std::size_t len = 1;
  for (std::size_t k = 0; k < arity; ++k) {
    len *= d;
  }
  for (std::size_t k = 0; k < len; ++k) {
    f.table.push_back(gen.rat());
  }
  return f;
}

/// Desk-scale instance: domain and variable count bounded by 3 and 4, with
/// up to 4 terms of arity at most 2.
inline VcspInstance random_vcsp(RandomRats& gen) {
  VcspInstance I;
  I.domain_size = static_cast<std::size_t>(gen.integer(1, 3));
  I.num_vars = static_cast<std::size_t>(gen.integer(1, 4));
  const auto nfun = gen.integer(1, 3);
  for (long k = 0; k < nfun; ++k) {
    // Nullary functions are rare but legal constants.
    const std::size_t arity = gen.coin(0.05) ? 0 : static_cast<std::size_t>(gen.integer(1, 2));
    I.functions.push_back(random_function(gen, arity, I.domain_size));
  }
  const auto nterms = gen.integer(0, 4);
  for (long k = 0; k < nterms; ++k) {
    VcspTerm t;
    t.func = static_cast<std::size_t>(gen.integer(0, nfun - 1));
    for (std::size_t p = 0; p < I.functions[t.func].arity; ++p) {
      t.app.push_back(static_cast<std::size_t>(gen.integer(0, static_cast<long>(I.num_vars) - 1)));
    }
    I.terms.push_back(t);
  }
  return I;
}

/// Boolean binary function with f(0,1) + f(1,0) >= f(0,0) + f(1,1).
inline CostFunction random_submodular(RandomRats& gen) {
  const Rat f00 = gen.rat();
  const Rat f11 = gen.rat();
  const Rat f01 = gen.rat();
  const Rat slack = gen.coin(0.2) ? Rat(0) : gen.rat().abs();
  return CostFunction{2, 2, {f00, f01, f00 + f11 - f01 + slack, f11}};
}

/// Boolean instance over submodular binary functions and arbitrary unary
/// ones, with 2 to 4 variables and up to 4 terms.
inline VcspInstance random_submodular_instance(RandomRats& gen) {
  VcspInstance I;
  I.domain_size = 2;
  I.num_vars = static_cast<std::size_t>(gen.integer(2, 4));
  const auto nterms = gen.integer(1, 4);
  for (long k = 0; k < nterms; ++k) {
    const auto pick = [&] { return static_cast<std::size_t>(gen.integer(0, static_cast<long>(I.num_vars) - 1)); };
    if (gen.coin(0.3)) {
      I.functions.push_back(random_function(gen, 1, 2));
      I.terms.push_back(VcspTerm{I.functions.size() - 1, {pick()}});
    } else {
      I.functions.push_back(random_submodular(gen));
      I.terms.push_back(VcspTerm{I.functions.size() - 1, {pick(), pick()}});
    }
  }
  return I;
}

/// The eight binary operations on {0,1} that ignore argument order, as
/// tables over (0,0), (0,1), (1,0), (1,1).
inline std::vector<std::vector<std::size_t>> symmetric_boolean_binary_ops() {
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t a = 0; a < 2; ++a) {
    for (std::size_t b = 0; b < 2; ++b) {
      for (std::size_t c = 0; c < 2; ++c) {
        out.push_back({a, b, b, c});
      }
    }
  }
  return out;
}

/// All multisets of size 1..max_size drawn from `ops`.
inline std::vector<std::vector<std::vector<std::size_t>>> multisets_up_to(
    const std::vector<std::vector<std::size_t>>& ops, std::size_t max_size) {
  std::vector<std::vector<std::vector<std::size_t>>> out;
  std::vector<std::size_t> pick;
  const std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (!pick.empty()) {
      std::vector<std::vector<std::size_t>> ms;
      for (std::size_t i : pick) {
        ms.push_back(ops[i]);
      }
      out.push_back(ms);
    }
    if (pick.size() == max_size) {
      return;
    }
    for (std::size_t i = from; i < ops.size(); ++i) {
      pick.push_back(i);
      rec(i);
      pick.pop_back();
    }
  };
  rec(0);
  return out;
}

/// The fractional polymorphism inequality for binary operations, checked
/// over every pair of argument tuples by direct enumeration.
inline bool oracle_admits_binary(const CostFunction& f, const std::vector<std::vector<std::size_t>>& ops) {
  const std::size_t d = f.domain_size;
  const std::size_t n = f.arity;
  bool ok = true;
  for_each_word(n, d, [&](const std::vector<std::size_t>& x0) {
    for_each_word(n, d, [&](const std::vector<std::size_t>& x1) {
      Rat lhs;
      for (const auto& g : ops) {
        std::vector<std::size_t> y(n);
        for (std::size_t i = 0; i < n; ++i) {
          y[i] = g[x0[i] * d + x1[i]];
        }
        lhs += lookup(f, y);
      }
      const Rat rhs = Rat(static_cast<long>(ops.size())) * (lookup(f, x0) + lookup(f, x1));
      if (Rat(2) * lhs > rhs) {
        ok = false;
      }
    });
  });
  return ok;
}

}  // namespace testing_support
