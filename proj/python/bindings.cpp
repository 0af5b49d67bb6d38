// Python bindings. Rationals cross the boundary as strings ("3/4", "bot",
// "top"); the pure-Python wrapper converts them to and from Fraction.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "exactdual/cli/app.hpp"
#include "exactdual/cli/problem_io.hpp"
#include "exactdual/extended_lp.hpp"
#include "exactdual/farkas.hpp"
#include "exactdual/standard_lp.hpp"
#include "exactdual/vcsp.hpp"

namespace py = pybind11;
using namespace exactdual;

namespace {

using StrVec = std::vector<std::string>;
using StrMat = std::vector<StrVec>;

QVec to_qvec(const StrVec& v) {
  QVec out;
  for (const auto& s : v) {
    out.push_back(Rat::parse(s));
  }
  return out;
}

QMat to_qmat(const StrMat& rows, std::size_t width) {
  QMat m(rows.size(), width);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != width) {
      throw DimensionError("row " + std::to_string(i) + " has the wrong length");
    }
    for (std::size_t j = 0; j < width; ++j) {
      m(i, j) = Rat::parse(rows[i][j]);
    }
  }
  return m;
}

EVec to_evec(const StrVec& v) {
  EVec out;
  for (const auto& s : v) {
    out.push_back(Ext::parse(s));
  }
  return out;
}

EMat to_emat(const StrMat& rows, std::size_t width) {
  EMat m(rows.size(), width);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != width) {
      throw DimensionError("row " + std::to_string(i) + " has the wrong length");
    }
    for (std::size_t j = 0; j < width; ++j) {
      m(i, j) = Ext::parse(rows[i][j]);
    }
  }
  return m;
}

StrVec strs(std::span<const Rat> v) {
  StrVec out;
  for (const auto& r : v) {
    out.push_back(r.str());
  }
  return out;
}

StrVec strs(std::span<const NNRat> v) { return strs(to_rat(v)); }

StrMat strs(const QMat& m) {
  StrMat out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    StrVec row;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      row.push_back(m(i, j).str());
    }
    out.push_back(row);
  }
  return out;
}

StrMat strs(const EMat& m) {
  StrMat out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    StrVec row;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      row.push_back(to_string(Optimum(m(i, j))));
    }
    out.push_back(row);
  }
  return out;
}

StrVec strs(const EVec& v) {
  StrVec out;
  for (const auto& x : v) {
    out.push_back(to_string(Optimum(x)));
  }
  return out;
}

py::object opt_vec(const std::optional<NNVec>& v) {
  return v ? py::cast(strs(std::span<const NNRat>(*v))) : py::none();
}

StandardLP make_lp(const StrMat& A, const StrVec& b, const StrVec& c) {
  return StandardLP{to_qmat(A, c.size()), to_qvec(b), to_qvec(c)};
}

ExtendedLP make_elp(const StrMat& A, const StrVec& b, const StrVec& c) {
  return ExtendedLP{to_emat(A, c.size()), to_evec(b), to_evec(c)};
}

py::dict lp_solve_py(const StrMat& A, const StrVec& b, const StrVec& c) {
  const StandardLP P = make_lp(A, b, c);
  const LpSolution s = lp_solve(P);
  if (!lp_verify_solution(P, s)) {
    throw std::runtime_error("solver evidence failed verification");
  }
  py::dict d;
  d["optimum"] = to_string(s.optimum);
  d["point"] = opt_vec(s.point);
  d["ray"] = opt_vec(s.ray);
  d["farkas_y"] = s.farkas_y ? py::cast(strs(std::span<const Rat>(*s.farkas_y))) : py::none();
  return d;
}

py::tuple lp_dualize_py(const StrMat& A, const StrVec& b, const StrVec& c) {
  const StandardLP D = lp_dualize(make_lp(A, b, c));
  return py::make_tuple(strs(D.A), strs(std::span<const Rat>(D.b)), strs(std::span<const Rat>(D.c)));
}

py::dict elp_solve_py(const StrMat& A, const StrVec& b, const StrVec& c) {
  const ExtendedLP P = make_elp(A, b, c);
  const ElpSolution s = elp_solve(P);
  if (!elp_verify_solution(P, s)) {
    throw std::runtime_error("solver evidence failed verification");
  }
  py::dict d;
  d["optimum"] = to_string(s.optimum);
  d["point"] = opt_vec(s.point);
  d["ray"] = opt_vec(s.ray);
  return d;
}

StrVec elp_violations_py(const StrMat& A, const StrVec& b, const StrVec& c) {
  StrVec out;
  for (const auto& v : elp_violations(make_elp(A, b, c))) {
    out.push_back(std::string(to_string(v.condition)) + "@" + std::to_string(v.index));
  }
  return out;
}

py::tuple elp_dualize_py(const StrMat& A, const StrVec& b, const StrVec& c) {
  const ExtendedLP D = elp_dualize(make_elp(A, b, c));
  return py::make_tuple(strs(D.A), strs(D.b), strs(D.c));
}

py::tuple farkas_py(const std::string& kind, const StrMat& A, const StrVec& b, std::size_t cols) {
  const QMat M = to_qmat(A, A.empty() ? cols : A.front().size());
  const QVec v = to_qvec(b);
  AlternativeKind k;
  Certificate cert;
  if (kind == "eq") {
    k = AlternativeKind::EqualityFarkas;
    cert = farkas_equality(M, v);
  } else if (kind == "ineq") {
    k = AlternativeKind::InequalityFarkas;
    cert = farkas_inequality(M, v);
  } else if (kind == "lin") {
    k = AlternativeKind::LinearSystem;
    cert = solve_linear_alternative(M, v);
  } else {
    throw std::invalid_argument("kind must be 'eq', 'ineq' or 'lin'");
  }
  if (!verify_certificate(k, M, v, cert)) {
    throw std::runtime_error("certificate failed verification");
  }
  if (const auto* p = std::get_if<Primal>(&cert)) {
    return py::make_tuple("primal", strs(std::span<const Rat>(p->x)));
  }
  return py::make_tuple("dual", strs(std::span<const Rat>(std::get<Dual>(cert).y)));
}

VcspInstance parse_vcsp(const std::string& text) {
  const auto file = cli::parse_problem(text);
  if (file.kind != cli::ProblemKind::vcsp) {
    throw std::invalid_argument("expected a vcsp problem");
  }
  return std::get<VcspInstance>(file.payload);
}

py::tuple run_cli_py(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run_cli(args, out, err);
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact rational LP, extended LP, Farkas and VCSP routines";

  py::register_exception<cli::ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<DimensionError>(m, "DimensionError", PyExc_ValueError);
  py::register_exception<PreconditionViolated>(m, "PreconditionViolated", PyExc_ValueError);
  py::register_exception<CapExceeded>(m, "CapExceeded", PyExc_ValueError);

  m.def("lp_solve", &lp_solve_py, py::arg("A"), py::arg("b"), py::arg("c"));
  m.def("lp_dualize", &lp_dualize_py, py::arg("A"), py::arg("b"), py::arg("c"));
  m.def("elp_solve", &elp_solve_py, py::arg("A"), py::arg("b"), py::arg("c"));
  m.def("elp_violations", &elp_violations_py, py::arg("A"), py::arg("b"), py::arg("c"));
  m.def("elp_dualize", &elp_dualize_py, py::arg("A"), py::arg("b"), py::arg("c"));
  m.def("opposites", [](const std::string& p, const std::string& q) {
    const auto read = [](const std::string& s) { return s == "none" ? Optimum() : Optimum(Ext::parse(s)); };
    return opposites_opt(read(p), read(q));
  });
  m.def("farkas", &farkas_py, py::arg("kind"), py::arg("A"), py::arg("b"), py::arg("cols") = 0);

  m.def("vcsp_eval", [](const std::string& text, const std::vector<std::size_t>& x) {
    return eval_solution(parse_vcsp(text), x).str();
  });
  m.def("vcsp_brute_force", [](const std::string& text) {
    const auto r = brute_force_optimum(parse_vcsp(text));
    return py::make_tuple(r.value.str(), r.argmin);
  });
  m.def("vcsp_blp_minimum", [](const std::string& text) { return blp_minimum(parse_vcsp(text)).value.str(); });

  m.def("normalize_problem", [](const std::string& text) { return cli::emit_problem(cli::parse_problem(text)); });
  m.def("run_cli", &run_cli_py, py::arg("args"));
}
