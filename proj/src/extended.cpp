#include "exactdual/extended.hpp"

#include <algorithm>
#include <cctype>

namespace exactdual {

Ext Ext::parse(std::string_view text) {
  std::string lowered;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) {
      lowered.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
    }
  }
  if (lowered == "bot") {
    return bot();
  }
  if (lowered == "top") {
    return top();
  }
  return {Rat::parse(text)};
}

const Rat& Ext::value() const {
  if (kind_ != Kind::Fin) {
    throw std::logic_error("Ext::value on " + str());
  }
  return value_;
}

std::string Ext::str() const {
  switch (kind_) {
    case Kind::Bot:
      return "bot";
    case Kind::Top:
      return "top";
    case Kind::Fin:
      break;
  }
  return value_.str();
}

Ext ext_add(const Ext& x, const Ext& y) {
  if (x.is_bot() || y.is_bot()) {
    return Ext::bot();
  }
  if (x.is_top() || y.is_top()) {
    return Ext::top();
  }
  return {x.value() + y.value()};
}

Ext ext_neg(const Ext& x) {
  switch (x.kind()) {
    case Ext::Kind::Bot:
      return Ext::top();
    case Ext::Kind::Top:
      return Ext::bot();
    case Ext::Kind::Fin:
      break;
  }
  return {-x.value()};
}

Ext ext_smul(const NNRat& c, const Ext& x) {
  switch (x.kind()) {
    case Ext::Kind::Bot:
      return Ext::bot();
    case Ext::Kind::Top:
      return c.is_zero() ? Ext(0) : Ext::top();
    case Ext::Kind::Fin:
      break;
  }
  return {c.value() * x.value()};
}

bool ext_le(const Ext& x, const Ext& y) {
  if (x.is_bot() || y.is_top()) {
    return true;
  }
  if (y.is_bot() || x.is_top()) {
    return false;
  }
  return x.value() <= y.value();
}

Ext dot_weig(std::span<const Ext> v, std::span<const NNRat> w) {
  if (v.size() != w.size()) {
    throw DimensionError("dot_weig: lengths " + std::to_string(v.size()) + " and " +
                         std::to_string(w.size()));
  }
  Ext sum(0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    sum = ext_add(sum, ext_smul(w[i], v[i]));
  }
  return sum;
}

EVec mul_weig(const EMat& m, std::span<const NNRat> w) {
  if (w.size() != m.cols()) {
    throw DimensionError("mul_weig: matrix has " + std::to_string(m.cols()) +
                         " columns, weights have " + std::to_string(w.size()) + " entries");
  }
  EVec out;
  out.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out.push_back(dot_weig(m.row(i), w));
  }
  return out;
}

EMat ext_neg(const EMat& m) {
  EMat out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      out(i, j) = ext_neg(m(i, j));
    }
  }
  return out;
}

NNVec to_nonneg(std::span<const Rat> v) {
  NNVec out;
  out.reserve(v.size());
  for (const auto& x : v) {
    out.emplace_back(x);
  }
  return out;
}

QVec to_rat(std::span<const NNRat> v) {
  QVec out;
  out.reserve(v.size());
  for (const auto& x : v) {
    out.push_back(x.value());
  }
  return out;
}

EVec to_ext(std::span<const Rat> v) { return {v.begin(), v.end()}; }

EMat to_ext(const QMat& m) {
  EMat out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      out(i, j) = m(i, j);
    }
  }
  return out;
}

std::string to_string(const Optimum& opt) { return opt ? opt->str() : "none"; }

}  // namespace exactdual
