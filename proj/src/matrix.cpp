#include "exactdual/matrix.hpp"

#include <algorithm>
#include <numeric>

namespace exactdual {

Rat dot_product(std::span<const Rat> v, std::span<const Rat> w) {
  if (v.size() != w.size()) {
    throw DimensionError("dot_product: lengths " + std::to_string(v.size()) + " and " +
                         std::to_string(w.size()));
  }
  Rat sum;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_zero() && !w[i].is_zero()) {
      sum += v[i] * w[i];
    }
  }
  return sum;
}

QVec mat_vec_mul(const QMat& m, std::span<const Rat> v) {
  if (v.size() != m.cols()) {
    throw DimensionError("mat_vec_mul: matrix has " + std::to_string(m.cols()) +
                         " columns, vector has " + std::to_string(v.size()) + " entries");
  }
  QVec out;
  out.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out.push_back(dot_product(m.row(i), v));
  }
  return out;
}

QMat mat_mul(const QMat& a, const QMat& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("mat_mul: inner dimensions differ");
  }
  QMat out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rat& aik = a(i, k);
      if (aik.is_zero()) {
        continue;
      }
      for (std::size_t j = 0; j < b.cols(); ++j) {
        out(i, j) += aik * b(k, j);
      }
    }
  }
  return out;
}

QMat transpose(const QMat& m) { return m.transpose(); }

QMat identity(std::size_t n) {
  QMat id(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    id(i, i) = Rat(1);
  }
  return id;
}

QMat negate(const QMat& m) {
  QMat out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      out(i, j) = -m(i, j);
    }
  }
  return out;
}

QVec negate(std::span<const Rat> v) {
  QVec out;
  out.reserve(v.size());
  for (const auto& x : v) {
    out.push_back(-x);
  }
  return out;
}

QMat from_blocks(const QMat& a11, const QMat& a12, const QMat& a21, const QMat& a22) {
  if (a11.rows() != a12.rows() || a21.rows() != a22.rows() || a11.cols() != a21.cols() ||
      a12.cols() != a22.cols()) {
    throw DimensionError("from_blocks: block shapes do not line up");
  }
  QMat out(a11.rows() + a21.rows(), a11.cols() + a12.cols());
  auto place = [&out](const QMat& block, std::size_t r0, std::size_t c0) {
    for (std::size_t i = 0; i < block.rows(); ++i) {
      for (std::size_t j = 0; j < block.cols(); ++j) {
        out(r0 + i, c0 + j) = block(i, j);
      }
    }
  };
  place(a11, 0, 0);
  place(a12, 0, a11.cols());
  place(a21, a11.rows(), 0);
  place(a22, a11.rows(), a11.cols());
  return out;
}

QMat from_rows(std::span<const QMat> blocks) {
  if (blocks.empty()) {
    return {};
  }
  const std::size_t cols = blocks.front().cols();
  std::size_t rows = 0;
  for (const auto& b : blocks) {
    if (b.cols() != cols) {
      throw DimensionError("from_rows: column counts differ");
    }
    rows += b.rows();
  }
  QMat out(rows, cols);
  std::size_t r0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i) {
      std::copy(b.row(i).begin(), b.row(i).end(), out.row(r0 + i).begin());
    }
    r0 += b.rows();
  }
  return out;
}

QMat from_cols(std::span<const QMat> blocks) {
  std::vector<QMat> transposed;
  transposed.reserve(blocks.size());
  for (const auto& b : blocks) {
    transposed.push_back(b.transpose());
  }
  if (!blocks.empty()) {
    const std::size_t rows = blocks.front().rows();
    for (const auto& b : blocks) {
      if (b.rows() != rows) {
        throw DimensionError("from_cols: row counts differ");
      }
    }
  }
  return from_rows(transposed).transpose();
}

Rat det(const QMat& m) {
  if (m.rows() != m.cols()) {
    throw DimensionError("det: matrix is " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()));
  }
  const std::size_t n = m.rows();
  if (n == 0) {
    return Rat(1);
  }

  // Clear denominators row by row, then run integer Bareiss elimination.
  std::vector<Integer> a(n * n);
  Integer scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < n; ++j) {
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).den().get_mpz_t());
    }
    scale *= l;
    for (std::size_t j = 0; j < n; ++j) {
      a[i * n + j] = m(i, j).num() * (l / m(i, j).den());
    }
  }

  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k * n + k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p * n + k] == 0) {
        ++p;
      }
      if (p == n) {
        return {};
      }
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a[k * n + j], a[p * n + j]);
      }
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a[i * n + j] = std::move(v);
      }
    }
    prev = a[k * n + k];
  }
  return Rat::make(sign * a[n * n - 1], scale);
}

bool all_nonneg(std::span<const Rat> v) {
  return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x.sign() >= 0; });
}

bool vec_le(std::span<const Rat> v, std::span<const Rat> w) {
  if (v.size() != w.size()) {
    throw DimensionError("vec_le: lengths differ");
  }
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] > w[i]) {
      return false;
    }
  }
  return true;
}

bool is_zero(std::span<const Rat> v) {
  return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x.is_zero(); });
}

}  // namespace exactdual
