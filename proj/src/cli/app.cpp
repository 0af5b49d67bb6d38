#include "exactdual/cli/app.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "exactdual/cli/json_codec.hpp"
#include "exactdual/cli/problem_io.hpp"
#include "exactdual/farkas.hpp"

namespace exactdual::cli {

namespace {

namespace fs = std::filesystem;

enum class Format { Text, Json };

struct Options {
  Format format = Format::Text;
  int digits = 6;
  bool maximize = false;
  bool allow_invalid = false;
  std::string assign;
  std::size_t cap = kDefaultEnumerationCap;
  std::size_t samples = 50;
  std::uint64_t seed = 1;
};

/// An error that ends the current command with a specific exit status.
struct Failure {
  int code;
  std::string message;
};

/// Writes results either as "key: value" lines or as one JSON object.
class Emitter {
 public:
  Emitter(const Options& opt, std::ostream& out) : opt_(opt), out_(out) {}

  void exact(const std::string& key, const Rat& r) {
    j_[key] = r.str();
    std::string line = r.str();
    if (!r.is_integer()) {
      line += " ~ " + r.to_decimal(opt_.digits);
      j_[key + "_decimal"] = r.to_decimal(opt_.digits);
    }
    text_ << key << ": " << line << "\n";
  }

  void optimum(const std::string& key, const Optimum& o) {
    if (o && o->is_finite()) {
      exact(key, o->value());
      return;
    }
    j_[key] = to_json(o);
    text_ << key << ": " << to_string(o) << "\n";
  }

  void value(const std::string& key, const json& v) {
    j_[key] = v;
    text_ << key << ": " << render(v) << "\n";
  }

  void finish() {
    if (opt_.format == Format::Json) {
      out_ << j_.dump(2) << "\n";
    } else {
      out_ << text_.str();
    }
  }

 private:
  static std::string render(const json& v) {
    if (v.is_string()) {
      return v.get<std::string>();
    }
    if (v.is_array()) {
      std::string s = "[";
      for (std::size_t i = 0; i < v.size(); ++i) {
        s += (i ? ", " : "") + render(v[i]);
      }
      return s + "]";
    }
    return v.dump();
  }

  const Options& opt_;
  std::ostream& out_;
  json j_ = json::object();
  std::ostringstream text_;
};

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Failure{kParse, path + ": cannot open file"};
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ProblemFile load(const std::string& path) {
  try {
    return parse_problem(read_file(path));
  } catch (const ParseError& e) {
    throw Failure{kParse, path + ": " + e.what()};
  }
}

[[noreturn]] void wrong_kind(const ProblemFile& p, std::string_view wanted) {
  throw Failure{kParse, "problem kind '" + std::string(to_string(p.kind)) + "' cannot be used here; expected " +
                            std::string(wanted)};
}

[[noreturn]] void verification_failed(const std::string& what) {
  throw Failure{kVerification, "internal verification failure: " + what};
}

// ---------------------------------------------------------------- lp

bool verify_min_result(const CanonicalLP& lp, const MinResult& r) {
  if (const auto* inf = std::get_if<Infeasible>(&r)) {
    return verify_certificate(AlternativeKind::EqualityFarkas, lp.A, lp.b, Dual{inf->y});
  }
  if (const auto* unb = std::get_if<Unbounded>(&r)) {
    if (!canonical_is_solution(lp, unb->point) || unb->ray.size() != lp.A.cols()) {
      return false;
    }
    const bool nonneg = all_nonneg(unb->ray);
    return nonneg && is_zero(mat_vec_mul(lp.A, unb->ray)) && dot_product(lp.c, unb->ray).sign() < 0;
  }
  const auto& m = std::get<Minimum>(r);
  return canonical_is_solution(lp, m.x) && dot_product(lp.c, m.x) == m.value;
}

void solve_canonical(const CanonicalLP& lp, const Options& opt, Emitter& em) {
  CanonicalLP posed = lp;
  if (opt.maximize) {
    posed.c = negate(posed.c);
  }
  const MinResult r = canonical_lp_minimize(posed);
  if (!verify_min_result(posed, r)) {
    verification_failed("canonical LP result does not check out");
  }
  const auto flip = [&](Ext e) { return opt.maximize ? ext_neg(e) : e; };
  if (opt.maximize) {
    em.value("sense", "max");
  }
  if (const auto* inf = std::get_if<Infeasible>(&r)) {
    em.optimum("optimum", flip(Ext::top()));
    em.value("farkas_y", to_json(std::span(inf->y)));
  } else if (const auto* unb = std::get_if<Unbounded>(&r)) {
    em.optimum("optimum", flip(Ext::bot()));
    em.value("point", to_json(std::span(unb->point)));
    em.value("ray", to_json(std::span(unb->ray)));
  } else {
    const auto& m = std::get<Minimum>(r);
    em.optimum("optimum", flip(Ext(m.value)));
    em.value("point", to_json(std::span(m.x)));
  }
}

void lp_solve_cmd(const ProblemFile& p, const Options& opt, Emitter& em) {
  if (p.kind == ProblemKind::canonical_lp) {
    solve_canonical(std::get<CanonicalLP>(p.payload), opt, em);
    return;
  }
  if (p.kind != ProblemKind::lp) {
    wrong_kind(p, "lp or canonical_lp");
  }
  StandardLP P = std::get<StandardLP>(p.payload);
  if (opt.maximize) {
    P.c = negate(P.c);
  }
  const LpSolution s = lp_solve(P);
  if (!lp_verify_solution(P, s)) {
    verification_failed("LP solution evidence does not check out");
  }
  if (opt.maximize) {
    em.value("sense", "max");
  }
  em.optimum("optimum", opt.maximize ? Optimum(ext_neg(*s.optimum)) : s.optimum);
  if (s.point) {
    em.value("point", to_json(std::span(*s.point)));
  }
  if (s.ray) {
    em.value("ray", to_json(std::span(*s.ray)));
  }
  if (s.farkas_y) {
    em.value("farkas_y", to_json(std::span(*s.farkas_y)));
  }
}

const StandardLP& as_lp(const ProblemFile& p) {
  if (p.kind != ProblemKind::lp) {
    wrong_kind(p, "lp");
  }
  return std::get<StandardLP>(p.payload);
}

void lp_report_cmd(const ProblemFile& p, const Options& opt, Emitter& em) {
  const StandardLP& P = as_lp(p);
  const StandardLP D = lp_dualize(P);
  for (const StandardLP* side : {&P, &D}) {
    if (!lp_verify_solution(*side, lp_solve(*side))) {
      verification_failed("LP solution evidence does not check out");
    }
  }
  const DualityReport r = lp_duality_report(P, opt.samples, opt.seed);
  em.optimum("primal", r.primal);
  em.optimum("dual", r.dual);
  em.value("primal_feasible", r.primal_feasible);
  em.value("dual_feasible", r.dual_feasible);
  em.value("opposites", r.opposites);
  em.value("weak_pairs_checked", r.weak_pairs_checked);
  em.value("weak_duality", r.weak_holds);
  if (!r.consistent()) {
    em.finish();
    verification_failed("duality relations failed on an LP");
  }
}

// ---------------------------------------------------------------- elp

ExtendedLP as_elp(const ProblemFile& p) {
  if (p.kind == ProblemKind::lp) {
    return to_extended(std::get<StandardLP>(p.payload));
  }
  if (p.kind != ProblemKind::elp) {
    wrong_kind(p, "elp or lp");
  }
  return std::get<ExtendedLP>(p.payload);
}

json violations_json(const std::vector<ElpViolation>& vs) {
  json out = json::array();
  for (const auto& v : vs) {
    out.push_back(std::string(to_string(v.condition)) + "@" + std::to_string(v.index));
  }
  return out;
}

std::string violation_summary(const std::vector<ElpViolation>& vs) {
  std::string s;
  for (const auto& v : vs) {
    const bool row = v.condition == ElpCondition::hAi || v.condition == ElpCondition::hbA ||
                     v.condition == ElpCondition::hAb;
    s += (s.empty() ? "" : ", ") + std::string(to_string(v.condition)) + (row ? " (row " : " (column ") +
         std::to_string(v.index) + ")";
  }
  return s;
}

/// Returns the violations, throwing unless invalid problems were allowed.
std::vector<ElpViolation> require_valid(const ExtendedLP& P, const Options& opt) {
  auto vs = elp_violations(P);
  if (!vs.empty() && !opt.allow_invalid) {
    throw Failure{kInvalidElp, "invalid extended LP: " + violation_summary(vs)};
  }
  return vs;
}

void elp_validate_cmd(const ProblemFile& p, const Options&, Emitter& em) {
  const auto vs = elp_violations(as_elp(p));
  em.value("valid", vs.empty());
  em.value("violations", violations_json(vs));
  if (!vs.empty()) {
    em.finish();
    throw Failure{kInvalidElp, "invalid extended LP: " + violation_summary(vs)};
  }
}

void elp_solve_cmd(const ProblemFile& p, const Options& opt, Emitter& em) {
  ExtendedLP P = as_elp(p);
  require_valid(P, opt);
  if (opt.maximize) {
    for (auto& cj : P.c) {
      cj = ext_neg(cj);
    }
  }
  const ElpSolution s = elp_solve(P);
  if (!elp_verify_solution(P, s)) {
    verification_failed("extended LP solution evidence does not check out");
  }
  if (opt.maximize) {
    em.value("sense", "max");
  }
  em.optimum("optimum", opt.maximize ? Optimum(ext_neg(*s.optimum)) : s.optimum);
  if (s.point) {
    em.value("point", to_json(std::span(*s.point)));
  }
  if (s.ray) {
    em.value("ray", to_json(std::span(*s.ray)));
  }
}

void elp_report_cmd(const ProblemFile& p, const Options& opt, Emitter& em) {
  const ExtendedLP P = as_elp(p);
  const auto vs = require_valid(P, opt);
  for (const ExtendedLP& side : {P, elp_dualize(P)}) {
    if (!elp_verify_solution(side, elp_solve(side))) {
      verification_failed("extended LP solution evidence does not check out");
    }
  }
  const ElpDualityReport r = elp_duality_report(P, opt.samples, opt.seed);
  em.value("valid", r.valid);
  if (!vs.empty()) {
    em.value("violations", violations_json(vs));
  }
  em.optimum("primal", r.primal);
  em.optimum("dual", r.dual);
  em.value("primal_feasible", r.primal_feasible);
  em.value("dual_feasible", r.dual_feasible);
  em.value("opposites", r.opposites);
  em.value("weak_pairs_checked", r.weak_pairs_checked);
  em.value("weak_duality", r.weak_holds);
  // Outside the valid class the relations may legitimately fail.
  if (r.valid && !r.consistent()) {
    em.finish();
    verification_failed("duality relations failed on a valid extended LP");
  }
}

void elp_farkas_cmd(const ProblemFile& p, const Options&, Emitter& em) {
  const ExtendedLP P = as_elp(p);
  Certificate cert;
  try {
    cert = extended_farkas(P.A, P.b);
  } catch (const PreconditionViolated& e) {
    throw Failure{kPrecondition, std::string(e.what())};
  }
  if (const auto* x = std::get_if<Primal>(&cert)) {
    if (!verify_extended_primal(P.A, P.b, x->x)) {
      verification_failed("extended primal certificate does not check out");
    }
    em.value("side", "primal");
    em.value("x", to_json(std::span(x->x)));
  } else {
    const auto& y = std::get<Dual>(cert);
    if (!verify_extended_dual(P.A, P.b, y.y)) {
      verification_failed("extended dual certificate does not check out");
    }
    em.value("side", "dual");
    em.value("y", to_json(std::span(y.y)));
  }
}

// ---------------------------------------------------------------- farkas

const FarkasProblem& as_farkas(const ProblemFile& p) {
  if (p.kind != ProblemKind::farkas_eq && p.kind != ProblemKind::farkas_ineq && p.kind != ProblemKind::farkas_lin) {
    wrong_kind(p, "farkas_eq, farkas_ineq or farkas_lin");
  }
  return std::get<FarkasProblem>(p.payload);
}

void farkas_cmd(AlternativeKind kind, const ProblemFile& p, Emitter& em) {
  const FarkasProblem& F = as_farkas(p);
  Certificate cert;
  switch (kind) {
    case AlternativeKind::LinearSystem:
      cert = solve_linear_alternative(F.A, F.b);
      break;
    case AlternativeKind::EqualityFarkas:
      cert = farkas_equality(F.A, F.b);
      break;
    case AlternativeKind::InequalityFarkas:
      cert = farkas_inequality(F.A, F.b);
      break;
  }
  if (!verify_certificate(kind, F.A, F.b, cert)) {
    verification_failed(std::string(to_string(kind)) + " certificate does not check out");
  }
  em.value("alternative", std::string(to_string(kind)));
  if (const auto* x = std::get_if<Primal>(&cert)) {
    em.value("side", "primal");
    em.value("x", to_json(std::span(x->x)));
  } else {
    em.value("side", "dual");
    em.value("y", to_json(std::span(std::get<Dual>(cert).y)));
  }
}

// ---------------------------------------------------------------- vcsp

const VcspInstance& as_vcsp(const ProblemFile& p) {
  if (p.kind != ProblemKind::vcsp) {
    wrong_kind(p, "vcsp");
  }
  return std::get<VcspInstance>(p.payload);
}

json assignment_json(const VcspInstance& I, const Assignment& x) {
  json out = json::array();
  for (auto a : x) {
    if (I.labels.empty()) {
      out.push_back(a);
    } else {
      out.push_back(I.labels[a]);
    }
  }
  return out;
}

Assignment parse_assignment(const VcspInstance& I, const std::string& text) {
  Assignment x;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    const auto named = std::find(I.labels.begin(), I.labels.end(), item);
    if (named != I.labels.end()) {
      x.push_back(static_cast<std::size_t>(named - I.labels.begin()));
      continue;
    }
    std::size_t used = 0;
    std::size_t a = 0;
    try {
      a = std::stoul(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size() || a >= I.domain_size) {
      throw Failure{kUsage, "--assign: '" + item + "' is not a label of this instance"};
    }
    x.push_back(a);
  }
  if (x.size() != I.num_vars) {
    throw Failure{kUsage, "--assign: got " + std::to_string(x.size()) + " labels for " + std::to_string(I.num_vars) +
                              " variables"};
  }
  return x;
}

void vcsp_eval_cmd(const ProblemFile& p, const Options& opt, Emitter& em) {
  const VcspInstance& I = as_vcsp(p);
  if (opt.assign.empty() && I.num_vars > 0) {
    throw Failure{kUsage, "vcsp eval needs --assign"};
  }
  const Assignment x = parse_assignment(I, opt.assign);
  em.value("assignment", assignment_json(I, x));
  em.exact("value", eval_solution(I, x));
}

void vcsp_opt_cmd(const ProblemFile& p, const Options& opt, Emitter& em) {
  const VcspInstance& I = as_vcsp(p);
  BruteForceOptimum best;
  try {
    best = brute_force_optimum(I, opt.cap);
  } catch (const CapExceeded& e) {
    throw Failure{kUsage, std::string(e.what()) + " (raise --cap)"};
  }
  if (eval_solution(I, best.argmin) != best.value) {
    verification_failed("brute-force minimizer does not reach its value");
  }
  em.exact("value", best.value);
  em.value("assignment", assignment_json(I, best.argmin));
}

void vcsp_relax_cmd(const ProblemFile& p, const Options&, std::ostream& out) {
  const BlpRelaxation R = relax_blp(as_vcsp(p));
  json j = json::parse(emit_problem({ProblemKind::canonical_lp, R.lp}));
  j["legend"] = to_json(R.legend);
  out << j.dump(2) << "\n";
}

void vcsp_blp_cmd(const ProblemFile& p, const Options&, Emitter& em) {
  const VcspInstance& I = as_vcsp(p);
  const BlpRelaxation R = relax_blp(I);
  const BlpMinimum m = blp_minimum(I);
  if (!canonical_is_solution(R.lp, m.witness) || dot_product(R.lp.c, m.witness) != m.value) {
    verification_failed("relaxation witness does not check out");
  }
  em.exact("blp_minimum", m.value);
  json marginals = json::array();
  for (std::size_t v = 0; v < I.num_vars; ++v) {
    std::vector<Rat> mu(m.witness.begin() + static_cast<std::ptrdiff_t>(R.legend.marginal_offset + v * I.domain_size),
                        m.witness.begin() +
                            static_cast<std::ptrdiff_t>(R.legend.marginal_offset + (v + 1) * I.domain_size));
    marginals.push_back(to_json(std::span<const Rat>(mu)));
  }
  em.value("marginals", marginals);
}

// ---------------------------------------------------------------- driver

using Handler = std::function<void(const ProblemFile&, const Options&, std::ostream&)>;

Handler emitting(void (*f)(const ProblemFile&, const Options&, Emitter&)) {
  return [f](const ProblemFile& p, const Options& opt, std::ostream& out) {
    Emitter em(opt, out);
    f(p, opt, em);
    em.finish();
  };
}

int run_one(const Handler& h, const std::string& path, const Options& opt, std::ostream& out, std::ostream& err) {
  try {
    h(load(path), opt, out);
    return kOk;
  } catch (const Failure& f) {
    err << "error: " << f.message << "\n";
    return f.code;
  } catch (const DimensionError& e) {
    err << "error: " << path << ": " << e.what() << "\n";
    return kParse;
  }
}

std::vector<std::string> batch_files(const std::string& dir) {
  std::vector<std::string> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") {
      files.push_back(entry.path().string());
    }
  }
  std::sort(files.begin(), files.end());
  return files;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact rational LP, extended LP, Farkas and VCSP toolkit", "exactdual"};
  app.require_subcommand(1);
  Options opt;
  std::string format = "text";
  std::string file;
  std::string batch;

  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--digits", opt.digits, "Digits after the point in decimal renderings")->check(CLI::Range(0, 1000));

  std::vector<std::pair<CLI::App*, Handler>> leaves;
  const auto leaf = [&](CLI::App* group, const std::string& name, const std::string& help, Handler h) {
    CLI::App* sub = group->add_subcommand(name, help);
    sub->add_option("file", file, "Problem file ('-' for stdin)");
    sub->add_option("--batch", batch, "Run on every .json file in this directory")->check(CLI::ExistingDirectory);
    leaves.emplace_back(sub, std::move(h));
    return sub;
  };

  CLI::App* lp = app.add_subcommand("lp", "Standard LPs: minimize c.x, Ax <= b, x >= 0");
  lp->require_subcommand(1);
  leaf(lp, "solve", "Optimum with a checked point, ray or infeasibility certificate", emitting(lp_solve_cmd))
      ->add_flag("--max", opt.maximize, "Maximize instead of minimize");
  leaf(lp, "dualize", "Print the dual <-A^T, c, b>", [](const ProblemFile& p, const Options&, std::ostream& o) {
    o << emit_problem({ProblemKind::lp, lp_dualize(as_lp(p))});
  });
  leaf(lp, "report", "Both optima and the duality relations", emitting(lp_report_cmd))
      ->add_option("--samples", opt.samples, "Sampled solution pairs for weak duality");

  CLI::App* elp = app.add_subcommand("elp", "Extended LPs over Q with bot and top");
  elp->require_subcommand(1);
  leaf(elp, "validate", "Check the six validity conditions", emitting(elp_validate_cmd));
  CLI::App* elp_solve_sub = leaf(elp, "solve", "Extended optimum", emitting(elp_solve_cmd));
  elp_solve_sub->add_flag("--max", opt.maximize, "Maximize instead of minimize");
  CLI::App* elp_dual_sub =
      leaf(elp, "dualize", "Print the extended dual", [](const ProblemFile& p, const Options& o, std::ostream& os) {
        const ExtendedLP P = as_elp(p);
        require_valid(P, o);
        os << emit_problem({ProblemKind::elp, elp_dualize(P)});
      });
  CLI::App* elp_report_sub = leaf(elp, "report", "Both extended optima and the duality relations", emitting(elp_report_cmd));
  elp_report_sub->add_option("--samples", opt.samples, "Sampled solution pairs for weak duality");
  for (CLI::App* sub : {elp_solve_sub, elp_dual_sub, elp_report_sub}) {
    sub->add_flag("--allow-invalid", opt.allow_invalid, "Proceed even when validity conditions fail");
  }
  leaf(elp, "farkas", "Extended inequality alternative on A and b", emitting(elp_farkas_cmd));

  CLI::App* farkas = app.add_subcommand("farkas", "Theorems of alternatives with checked certificates");
  farkas->require_subcommand(1);
  const auto alt = [](AlternativeKind k) {
    return [k](const ProblemFile& p, const Options& o, std::ostream& os) {
      Emitter em(o, os);
      farkas_cmd(k, p, em);
      em.finish();
    };
  };
  leaf(farkas, "eq", "x >= 0 with Ax = b, or its dual", alt(AlternativeKind::EqualityFarkas));
  leaf(farkas, "ineq", "x >= 0 with Ax <= b, or its dual", alt(AlternativeKind::InequalityFarkas));
  leaf(farkas, "lin", "Ax = b, or its dual", alt(AlternativeKind::LinearSystem));

  CLI::App* vcsp = app.add_subcommand("vcsp", "Valued constraint satisfaction");
  vcsp->require_subcommand(1);
  leaf(vcsp, "eval", "Cost of one assignment", emitting(vcsp_eval_cmd))
      ->add_option("--assign", opt.assign, "Comma-separated labels (indices or names), one per variable");
  leaf(vcsp, "opt", "Exhaustive optimum", emitting(vcsp_opt_cmd))
      ->add_option("--cap", opt.cap, "Largest number of assignments to enumerate");
  leaf(vcsp, "relax", "Print the basic LP relaxation with its legend",
       [](const ProblemFile& p, const Options& o, std::ostream& os) { vcsp_relax_cmd(p, o, os); });
  leaf(vcsp, "blp", "Optimum of the basic LP relaxation", emitting(vcsp_blp_cmd));

  leaf(&app, "fmt", "Parse a problem file and print it normalized",
       [](const ProblemFile& p, const Options&, std::ostream& os) { os << emit_problem(p); });

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << "usage error: " << e.what() << "\n";
    for (const auto& [sub, h] : leaves) {
      (void)h;
      if (sub->parsed()) {
        err << sub->help();
        return kUsage;
      }
    }
    err << app.help();
    return kUsage;
  }
  opt.format = format == "json" ? Format::Json : Format::Text;

  const auto chosen = std::find_if(leaves.begin(), leaves.end(), [](const auto& l) { return l.first->parsed(); });
  if (chosen == leaves.end()) {
    err << app.help();
    return kUsage;
  }
  if (file.empty() == batch.empty()) {
    err << "usage error: give exactly one of a problem file or --batch DIR\n";
    return kUsage;
  }
  if (batch.empty()) {
    return run_one(chosen->second, file, opt, out, err);
  }
  int worst = kOk;
  for (const auto& path : batch_files(batch)) {
    out << "== " << path << "\n";
    worst = std::max(worst, run_one(chosen->second, path, opt, out, err));
  }
  return worst;
}

}  // namespace exactdual::cli
