#include "exactdual/cli/problem_io.hpp"

#include <algorithm>
#include <array>

#include "exactdual/cli/json_codec.hpp"

namespace exactdual::cli {

namespace {

constexpr std::array<std::pair<ProblemKind, std::string_view>, 7> kKindNames{{
    {ProblemKind::lp, "lp"},
    {ProblemKind::elp, "elp"},
    {ProblemKind::farkas_eq, "farkas_eq"},
    {ProblemKind::farkas_ineq, "farkas_ineq"},
    {ProblemKind::farkas_lin, "farkas_lin"},
    {ProblemKind::vcsp, "vcsp"},
    {ProblemKind::canonical_lp, "canonical_lp"},
}};

std::string child(const std::string& path, std::string_view key) { return path + "/" + std::string(key); }
std::string child(const std::string& path, std::size_t index) { return path + "/" + std::to_string(index); }

[[noreturn]] void fail(const std::string& path, const std::string& message) {
  throw ParseError(path.empty() ? "/" : path, message);
}

// Reads problem JSON while tracking the pointer of the value being decoded.
class Reader {
 public:
  explicit Reader(const json& root) : root_(root) {}

  const json& field(const json& obj, const std::string& path, std::string_view key) const {
    auto it = obj.find(std::string(key));
    if (it == obj.end()) {
      fail(path, "missing field '" + std::string(key) + "'");
    }
    return *it;
  }

  static Rat rat(const json& v, const std::string& path) {
    if (v.is_number_integer()) {
      return v.is_number_unsigned() ? Rat(Integer(std::to_string(v.get<std::uint64_t>())))
                                    : Rat(Integer(std::to_string(v.get<std::int64_t>())));
    }
    if (v.is_number_float()) {
      fail(path, "floating-point number; write rationals as strings such as \"3/4\"");
    }
    if (!v.is_string()) {
      fail(path, "expected a rational, got " + std::string(v.type_name()));
    }
    const auto& s = v.get_ref<const std::string&>();
    try {
      return Rat::parse(s);
    } catch (const std::invalid_argument& e) {
      std::string lower = s;
      std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char ch) { return std::tolower(ch); });
      if (lower == "bot" || lower == "top") {
        fail(path, "'" + s + "' is only allowed in elp problems");
      }
      fail(path, e.what());
    }
  }

  static Ext ext(const json& v, const std::string& path) {
    if (v.is_string()) {
      try {
        return Ext::parse(v.get_ref<const std::string&>());
      } catch (const std::invalid_argument& e) {
        fail(path, e.what());
      }
    }
    return Ext(rat(v, path));
  }

  static std::size_t natural(const json& v, const std::string& path) {
    if (!v.is_number_integer() || (v.is_number_integer() && !v.is_number_unsigned() && v.get<std::int64_t>() < 0)) {
      fail(path, "expected a nonnegative integer");
    }
    return v.get<std::size_t>();
  }

  template <class Elem>
  static std::vector<Elem> vec(const json& v, const std::string& path, Elem (*elem)(const json&, const std::string&)) {
    if (!v.is_array()) {
      fail(path, "expected an array");
    }
    std::vector<Elem> out;
    out.reserve(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
      out.push_back(elem(v[i], child(path, i)));
    }
    return out;
  }

  // Rows must agree in length; `cols_if_empty` fixes the width of a matrix
  // with no rows.
  template <class Elem>
  static Matrix<Elem> mat(const json& v, const std::string& path, std::size_t cols_if_empty,
                          Elem (*elem)(const json&, const std::string&)) {
    if (!v.is_array()) {
      fail(path, "expected an array of rows");
    }
    std::vector<std::vector<Elem>> rows;
    for (std::size_t i = 0; i < v.size(); ++i) {
      rows.push_back(vec(v[i], child(path, i), elem));
      if (rows.back().size() != rows.front().size()) {
        fail(child(path, i), "row has " + std::to_string(rows.back().size()) + " entries, row 0 has " +
                                 std::to_string(rows.front().size()));
      }
    }
    return Matrix<Elem>::from_rows(std::move(rows), cols_if_empty);
  }

  const json& root() const { return root_; }

 private:
  const json& root_;
};

void check_len(std::size_t got, std::size_t want, const std::string& path, std::string_view what) {
  if (got != want) {
    fail(path, "has " + std::to_string(got) + " entries, expected " + std::to_string(want) + " (" +
                   std::string(what) + ")");
  }
}

std::size_t empty_width(const Reader& r, const json& j, std::size_t fallback) {
  auto it = j.find("cols");
  return it == j.end() ? fallback : Reader::natural(*it, "/cols");
}

template <class LP>
LP read_rat_lp(const Reader& r, const json& j) {
  LP out;
  out.c = Reader::vec<Rat>(r.field(j, "", "c"), "/c", &Reader::rat);
  out.A = Reader::mat<Rat>(r.field(j, "", "A"), "/A", out.c.size(), &Reader::rat);
  out.b = Reader::vec<Rat>(r.field(j, "", "b"), "/b", &Reader::rat);
  check_len(out.b.size(), out.A.rows(), "/b", "one per row of A");
  check_len(out.c.size(), out.A.cols(), "/c", "one per column of A");
  return out;
}

ExtendedLP read_elp(const Reader& r, const json& j) {
  ExtendedLP out;
  out.c = Reader::vec<Ext>(r.field(j, "", "c"), "/c", &Reader::ext);
  out.A = Reader::mat<Ext>(r.field(j, "", "A"), "/A", out.c.size(), &Reader::ext);
  out.b = Reader::vec<Ext>(r.field(j, "", "b"), "/b", &Reader::ext);
  check_len(out.b.size(), out.A.rows(), "/b", "one per row of A");
  check_len(out.c.size(), out.A.cols(), "/c", "one per column of A");
  return out;
}

FarkasProblem read_farkas(const Reader& r, const json& j) {
  FarkasProblem out;
  out.A = Reader::mat<Rat>(r.field(j, "", "A"), "/A", empty_width(r, j, 0), &Reader::rat);
  out.b = Reader::vec<Rat>(r.field(j, "", "b"), "/b", &Reader::rat);
  check_len(out.b.size(), out.A.rows(), "/b", "one per row of A");
  return out;
}

VcspInstance read_vcsp(const Reader& r, const json& j) {
  VcspInstance I;
  I.domain_size = Reader::natural(r.field(j, "", "domain_size"), "/domain_size");
  I.num_vars = Reader::natural(r.field(j, "", "num_vars"), "/num_vars");
  const json& fs = r.field(j, "", "functions");
  if (!fs.is_array()) {
    fail("/functions", "expected an array");
  }
  for (std::size_t k = 0; k < fs.size(); ++k) {
    const std::string path = child("/functions", k);
    CostFunction f;
    f.domain_size = I.domain_size;
    f.arity = Reader::natural(r.field(fs[k], path, "arity"), child(path, "arity"));
    f.table = Reader::vec<Rat>(r.field(fs[k], path, "table"), child(path, "table"), &Reader::rat);
    try {
      f.check();
    } catch (const std::exception& e) {
      fail(child(path, "table"), e.what());
    }
    I.functions.push_back(std::move(f));
  }
  const json& ts = r.field(j, "", "terms");
  if (!ts.is_array()) {
    fail("/terms", "expected an array");
  }
  for (std::size_t t = 0; t < ts.size(); ++t) {
    const std::string path = child("/terms", t);
    VcspTerm term;
    term.func = Reader::natural(r.field(ts[t], path, "func"), child(path, "func"));
    if (term.func >= I.functions.size()) {
      fail(child(path, "func"), "no function with index " + std::to_string(term.func));
    }
    term.app = Reader::vec<std::size_t>(r.field(ts[t], path, "app"), child(path, "app"), &Reader::natural);
    check_len(term.app.size(), I.functions[term.func].arity, child(path, "app"), "the function's arity");
    for (std::size_t k = 0; k < term.app.size(); ++k) {
      if (term.app[k] >= I.num_vars) {
        fail(child(child(path, "app"), k), "variable " + std::to_string(term.app[k]) + " out of range");
      }
    }
    I.terms.push_back(std::move(term));
  }
  if (auto it = j.find("labels"); it != j.end()) {
    if (!it->is_array()) {
      fail("/labels", "expected an array");
    }
    for (std::size_t a = 0; a < it->size(); ++a) {
      const json& v = (*it)[a];
      if (!v.is_string()) {
        fail(child("/labels", a), "expected a string");
      }
      I.labels.push_back(v.get<std::string>());
    }
    check_len(I.labels.size(), I.domain_size, "/labels", "one per label");
  }
  return I;
}

std::pair<std::size_t, std::size_t> line_col(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i < std::min(byte, text.size()); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

}  // namespace

std::string_view to_string(ProblemKind kind) {
  for (const auto& [k, name] : kKindNames) {
    if (k == kind) {
      return name;
    }
  }
  return "?";
}

ParseError::ParseError(std::string where, const std::string& message)
    : std::runtime_error(where + ": " + message), where_(std::move(where)) {}

ProblemFile parse_problem(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    // The byte offset points one past the offending character.
    const auto [line, col] = line_col(text, e.byte == 0 ? 0 : e.byte - 1);
    std::string msg = e.what();
    if (auto pos = msg.find("syntax error"); pos != std::string::npos) {
      msg = msg.substr(pos);
    }
    throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(col), msg);
  }
  if (!j.is_object()) {
    fail("", "expected a JSON object");
  }
  const Reader r(j);
  const json& kind_json = r.field(j, "", "kind");
  if (!kind_json.is_string()) {
    fail("/kind", "expected a string");
  }
  const auto& name = kind_json.get_ref<const std::string&>();
  const auto* found = std::find_if(kKindNames.begin(), kKindNames.end(), [&](const auto& p) { return p.second == name; });
  if (found == kKindNames.end()) {
    fail("/kind", "unknown kind '" + name + "'");
  }
  const ProblemKind kind = found->first;
  switch (kind) {
    case ProblemKind::lp:
      return {kind, read_rat_lp<StandardLP>(r, j)};
    case ProblemKind::canonical_lp:
      return {kind, read_rat_lp<CanonicalLP>(r, j)};
    case ProblemKind::elp:
      return {kind, read_elp(r, j)};
    case ProblemKind::farkas_eq:
    case ProblemKind::farkas_ineq:
    case ProblemKind::farkas_lin:
      return {kind, read_farkas(r, j)};
    case ProblemKind::vcsp:
      return {kind, read_vcsp(r, j)};
  }
  fail("/kind", "unhandled kind");
}

std::string emit_problem(const ProblemFile& problem) {
  json j;
  j["kind"] = std::string(to_string(problem.kind));
  std::visit(
      [&]<class T>(const T& p) {
        if constexpr (std::is_same_v<T, StandardLP> || std::is_same_v<T, CanonicalLP> ||
                      std::is_same_v<T, ExtendedLP>) {
          j["A"] = to_json(p.A);
          j["b"] = to_json(std::span(p.b));
          j["c"] = to_json(std::span(p.c));
        } else if constexpr (std::is_same_v<T, FarkasProblem>) {
          j["A"] = to_json(p.A);
          j["b"] = to_json(std::span(p.b));
          if (p.A.rows() == 0) {
            j["cols"] = p.A.cols();
          }
        } else {
          j["domain_size"] = p.domain_size;
          j["num_vars"] = p.num_vars;
          j["functions"] = json::array();
          for (const auto& f : p.functions) {
            j["functions"].push_back({{"arity", f.arity}, {"table", to_json(std::span(f.table))}});
          }
          j["terms"] = json::array();
          for (const auto& t : p.terms) {
            j["terms"].push_back({{"func", t.func}, {"app", t.app}});
          }
          if (!p.labels.empty()) {
            j["labels"] = p.labels;
          }
        }
      },
      problem.payload);
  return j.dump(2) + "\n";
}

// ---------------------------------------------------------------------------

json to_json(const Rat& r) { return r.str(); }
json to_json(const Ext& e) { return e.str(); }
json to_json(const NNRat& r) { return r.value().str(); }

json to_json(std::span<const Rat> v) {
  json out = json::array();
  for (const auto& x : v) {
    out.push_back(to_json(x));
  }
  return out;
}

json to_json(std::span<const Ext> v) {
  json out = json::array();
  for (const auto& x : v) {
    out.push_back(to_json(x));
  }
  return out;
}

json to_json(std::span<const NNRat> v) {
  json out = json::array();
  for (const auto& x : v) {
    out.push_back(to_json(x));
  }
  return out;
}

json to_json(const QMat& A) {
  json out = json::array();
  for (std::size_t i = 0; i < A.rows(); ++i) {
    out.push_back(to_json(A.row(i)));
  }
  return out;
}

json to_json(const EMat& A) {
  json out = json::array();
  for (std::size_t i = 0; i < A.rows(); ++i) {
    out.push_back(to_json(A.row(i)));
  }
  return out;
}

json to_json(const Optimum& o) { return std::string(to_string(o)); }

json to_json(const BlpLegend& legend) {
  json cols = json::array();
  for (std::size_t k = 0; k < legend.columns.size(); ++k) {
    const auto& c = legend.columns[k];
    if (c.kind == BlpLegend::Column::Kind::Joint) {
      cols.push_back({{"index", k}, {"type", "joint"}, {"term", c.term_or_var}, {"tuple", c.tuple}});
    } else {
      cols.push_back({{"index", k}, {"type", "marginal"}, {"var", c.term_or_var}, {"label", c.tuple.at(0)}});
    }
  }
  json rows = json::array();
  for (std::size_t k = 0; k < legend.rows.size(); ++k) {
    const auto& r = legend.rows[k];
    switch (r.kind) {
      case BlpLegend::Row::Kind::Consistency:
        rows.push_back({{"index", k},
                        {"type", "consistency"},
                        {"term", r.term_or_var},
                        {"position", r.position},
                        {"label", r.label}});
        break;
      case BlpLegend::Row::Kind::MarginalTotal:
        rows.push_back({{"index", k}, {"type", "marginal_total"}, {"var", r.term_or_var}});
        break;
      case BlpLegend::Row::Kind::JointTotal:
        rows.push_back({{"index", k}, {"type", "joint_total"}, {"term", r.term_or_var}});
        break;
    }
  }
  return {{"columns", cols}, {"rows", rows}, {"marginal_offset", legend.marginal_offset}};
}

}  // namespace exactdual::cli
