#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "hardykit/constants.hpp"
#include "hardykit/counterexamples.hpp"
#include "hardykit/error.hpp"
#include "hardykit/inequalities.hpp"
#include "hardykit/martingale.hpp"
#include "hardykit/operators.hpp"
#include "hardykit/random_instance.hpp"
#include "hardykit/special.hpp"
#include "hardykit/survival.hpp"
#include "json.hpp"

namespace hardykit::cli {

namespace {

constexpr const char* kVersion = "1.0.0";

using nlohmann::json;

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// JSON numbers must be finite; infinities travel as strings.
json jnum(double v) {
  if (std::isfinite(v)) return v;
  return num(v);
}

struct Row {
  std::size_t instance_id = 0;
  EvalReport report;
};

struct Common {
  std::string format = "csv";
  std::string out_path;
  std::uint64_t seed = 0;
};

std::uint64_t effective_seed(std::uint64_t flag) {
  if (const char* env = std::getenv("HARDYKIT_SEED"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == nullptr || *end != '\0') {
      throw Error(ErrorCode::ParseError, "HARDYKIT_SEED is not an unsigned integer");
    }
    return v;
  }
  return flag;
}

// Writes to --out when given, otherwise to the stream passed to run().
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : out_(&fallback) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw Error(ErrorCode::IoError, "cannot write " + path);
      out_ = &file_;
    }
  }
  std::ostream& stream() { return *out_; }

 private:
  std::ofstream file_;
  std::ostream* out_;
};

json meta(const Common& c, const std::string& command, double tol) {
  return json{{"version", kVersion}, {"command", command}, {"seed", c.seed}, {"tolerance", tol}};
}

json report_json(const Row& r) {
  return json{{"instance_id", r.instance_id}, {"name", r.report.name},
              {"lhs", jnum(r.report.lhs)},    {"rhs", jnum(r.report.rhs)},
              {"constant", jnum(r.report.constant)}, {"ratio", jnum(r.report.ratio)},
              {"holds", r.report.holds}};
}

void write_rows(std::ostream& out, const Common& c, const std::string& command, double tol,
                const std::vector<Row>& rows) {
  if (c.format == "json") {
    json j{{"meta", meta(c, command, tol)}, {"rows", json::array()}};
    for (const auto& r : rows) j["rows"].push_back(report_json(r));
    out << j.dump(2) << '\n';
    return;
  }
  out << "instance_id,name,lhs,rhs,constant,ratio,holds\n";
  for (const auto& r : rows) {
    out << r.instance_id << ',' << r.report.name << ',' << num(r.report.lhs) << ','
        << num(r.report.rhs) << ',' << num(r.report.constant) << ',' << num(r.report.ratio) << ','
        << (r.report.holds ? "true" : "false") << '\n';
  }
}

json dist_json(const FiniteDist& d) {
  return json{{"atoms", std::vector<double>(d.atoms().begin(), d.atoms().end())},
              {"probs", std::vector<double>(d.probs().begin(), d.probs().end())}};
}

json values_json(const SupportFunction& f) {
  return std::vector<double>(f.values().begin(), f.values().end());
}

// The first violated row, serialized with the instance that produced it.
int report_violations(const std::vector<Row>& rows,
                      const std::function<json(std::size_t)>& instance, std::ostream& err) {
  for (const auto& r : rows) {
    if (!r.report.violated()) continue;
    json j = instance(r.instance_id);
    j["instance_id"] = r.instance_id;
    j["report"] = report_json(r);
    err << j.dump() << '\n';
    return kExitViolation;
  }
  return kExitOk;
}

// ---------------------------------------------------------------- verify

struct VerifyOpts {
  std::string dist = "bernoulli:0.5";
  std::string dist_y;
  std::string psi = "e1";
  std::string suite = "hardy";
  std::string variant;
  std::string side = "left";
  double p = 2.0;
  double q = 0.0;
  double cut = 0.0;
  double tol = kDefaultTol;
  std::size_t instances = 2000;
};

EvalReport single_suite(const VerifyOpts& o, const FiniteDist& d, const SupportFunction& psi) {
  const std::string& s = o.suite;
  if (s == "hardy") return hardy_eval(d, psi, o.p, o.tol);
  if (s == "hardy_strict") return hardy_strict_variant_eval(d, psi, o.p, o.tol);
  if (s == "hardy_right") return hardy_right_eval(d, psi, o.p, o.tol);
  if (s == "two_sided") return hardy_two_sided_eval(d, psi, o.p, o.cut, o.tol);
  if (s == "copson") return copson_eval(d, psi, o.p, o.tol);
  if (s == "carleman") return carleman_eval(d, psi, o.tol);
  if (s == "carleman_tail") {
    return carleman_tail_eval(d, psi, o.side == "right" ? Side::Right : Side::Left);
  }
  if (s == "reverse_hardy") {
    const std::string v = o.variant.empty() ? "general" : o.variant;
    if (v == "density") return reverse_hardy_eval(d, psi, o.p, ReverseHardyVariant::Density);
    if (v == "general") return reverse_hardy_eval(d, psi, o.p, ReverseHardyVariant::General);
    if (v == "integer") return reverse_hardy_eval(d, psi, o.p, ReverseHardyVariant::Integer);
    throw Error(ErrorCode::ParseError, "unknown reverse_hardy variant '" + v + "'");
  }
  if (s == "reverse_copson") {
    const std::string v = o.variant.empty() ? "nrc2" : o.variant;
    if (v == "nrc0") return reverse_copson_eval(d, psi, o.p, ReverseCopsonVariant::Nrc0);
    if (v == "nrc1") return reverse_copson_eval(d, psi, o.p, ReverseCopsonVariant::Nrc1);
    if (v == "nrc2") return reverse_copson_eval(d, psi, o.p, ReverseCopsonVariant::Nrc2);
    if (v == "sharpened") return reverse_copson_eval(d, psi, o.p, ReverseCopsonVariant::Sharpened);
    if (v == "probe-nrc1") return reverse_copson_eval(d, psi, o.p, ReverseCopsonVariant::Nrc1, true);
    if (v == "probe-nrc2") return reverse_copson_eval(d, psi, o.p, ReverseCopsonVariant::Nrc2, true);
    throw Error(ErrorCode::ParseError, "unknown reverse_copson variant '" + v + "'");
  }
  if (s == "ordered") {
    if (o.dist_y.empty()) throw Error(ErrorCode::ParseError, "ordered suite needs --dist-y");
    const FiniteDist dy = parse_dist(o.dist_y);
    const SupportFunction psi_y = parse_psi(o.psi, dy);
    return hardy_ordered_eval(d, dy, psi_y, o.p,
                              o.variant == "b" ? OrderedVariant::B : OrderedVariant::A);
  }
  throw Error(ErrorCode::ParseError, "unknown suite '" + s + "'");
}

std::vector<EvalReport> random_suite_reports(const RandomInstance& inst) {
  const auto& d = inst.d;
  const auto& psi = inst.psi;
  const double p = inst.p;
  std::vector<EvalReport> out;
  out.push_back(hardy_eval(d, psi, p));
  out.push_back(hardy_right_eval(d, psi, p));
  out.push_back(hardy_two_sided_eval(d, psi, p, inst.cut));
  out.push_back(copson_eval(d, psi, p));
  out.push_back(carleman_eval(d, psi));
  out.push_back(lemma_broadbent_check(psi.values(), d.probs(), p));
  out.push_back(lemma_copson_check(psi.values(), d.probs(), p));
  out.push_back(lemma_muckenhoupt_check(d, psi, 1.0 - 1.0 / p, Side::Left));
  out.push_back(lemma_muckenhoupt_check(d, psi, 1.0 - 1.0 / p, Side::Right));
  return out;
}

int cmd_verify(const VerifyOpts& o, Common c, std::ostream& out, std::ostream& err) {
  c.seed = effective_seed(c.seed);
  std::vector<Row> rows;
  std::function<json(std::size_t)> instance;

  if (o.suite == "random") {
    const auto n = static_cast<long>(o.instances);
    std::vector<std::vector<EvalReport>> per(o.instances);
#pragma omp parallel for schedule(dynamic, 16)
    for (long i = 0; i < n; ++i) {
      per[static_cast<std::size_t>(i)] =
          random_suite_reports(random_instance(instance_seed(c.seed, static_cast<std::uint64_t>(i))));
    }
    for (std::size_t i = 0; i < per.size(); ++i) {
      for (auto& r : per[i]) rows.push_back({i, std::move(r)});
    }
    instance = [&](std::size_t i) {
      const auto inst = random_instance(instance_seed(c.seed, i));
      return json{{"dist", dist_json(inst.d)}, {"psi", values_json(inst.psi)}, {"p", inst.p},
                  {"cut", inst.cut}};
    };
  } else if (o.suite == "weighted") {
    const auto n = static_cast<long>(o.instances);
    std::vector<EvalReport> per(o.instances);
#pragma omp parallel for schedule(dynamic, 16)
    for (long i = 0; i < n; ++i) {
      const auto seed = instance_seed(c.seed, static_cast<std::uint64_t>(i));
      const auto w = random_weighted(seed);
      std::mt19937_64 rng(splitmix64(seed));
      per[static_cast<std::size_t>(i)] = weighted_hardy_eval(w, random_psi(rng, w.dY.size()), o.tol);
    }
    for (std::size_t i = 0; i < per.size(); ++i) rows.push_back({i, std::move(per[i])});
    instance = [&](std::size_t i) {
      const auto w = random_weighted(instance_seed(c.seed, i));
      return json{{"dist_x", dist_json(w.dX)}, {"dist_y", dist_json(w.dY)}, {"U", values_json(w.U)},
                  {"V", values_json(w.V)}, {"p", w.p}, {"q", w.q}};
    };
  } else {
    const FiniteDist d = parse_dist(o.dist);
    const SupportFunction psi = parse_psi(o.psi, d);
    rows.push_back({0, single_suite(o, d, psi)});
    instance = [d, psi, p = o.p](std::size_t) {
      return json{{"dist", dist_json(d)}, {"psi", values_json(psi)}, {"p", p}};
    };
  }

  Sink sink(c.out_path, out);
  write_rows(sink.stream(), c, "verify", o.tol, rows);
  return report_violations(rows, instance, err);
}

// ---------------------------------------------------------------- constants

struct ConstantsOpts {
  double p = 2.0;
  double q = 0.0;
  std::string dist;
  unsigned restarts = 8;
  unsigned iterations = 200;
};

int cmd_constants(const ConstantsOpts& o, Common c, std::ostream& out) {
  c.seed = effective_seed(c.seed);
  const double q = o.q > 0.0 ? o.q : o.p;
  std::vector<std::pair<std::string, double>> rows = {
      {"hardy_constant", hardy_constant(o.p)},
      {"copson_constant", copson_constant(o.p)},
      {"k_qp", k_qp(o.p, q)},
      {"zeta", zeta(o.p)},
  };
  if (!o.dist.empty()) {
    // Hardy weights U = F^{-q}, V = 1 on X = Y ~ dist.
    const FiniteDist d = parse_dist(o.dist);
    std::vector<double> u(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) u[i] = std::pow(d.cdf_at(i), -q);
    const WeightedProblem w{d, d, SupportFunction(u), SupportFunction::constant(d.size(), 1.0), o.p,
                            q};
    const auto rep = estimate_best_constant(w, {o.restarts, o.iterations, c.seed});
    rows.emplace_back("muckenhoupt_B", rep.B);
    rows.emplace_back("muckenhoupt_B_power", muckenhoupt_B_power(w));
    rows.emplace_back("C_lower", rep.C_lower);
    rows.emplace_back("C_upper", rep.C_upper);
  }
  Sink sink(c.out_path, out);
  auto& s = sink.stream();
  if (c.format == "json") {
    json j{{"meta", meta(c, "constants", kDefaultTol)}, {"rows", json::array()}};
    for (const auto& [name, v] : rows) j["rows"].push_back(json{{"name", name}, {"value", jnum(v)}});
    s << j.dump(2) << '\n';
  } else {
    s << "name,value\n";
    for (const auto& [name, v] : rows) s << name << ',' << num(v) << '\n';
  }
  return kExitOk;
}

// ---------------------------------------------------------------- counterexample

struct SweepOpts {
  std::string kind;
  double p = 2.0;
  double a = 1.0;
  double b = 0.0;
  std::size_t count = 1000;
};

int cmd_counterexample(const SweepOpts& o, Common c, std::ostream& out) {
  c.seed = effective_seed(c.seed);
  if (o.count < 2) throw Error(ErrorCode::ParseError, "--count must be at least 2");
  struct Line {
    double q, lhs, rhs;
    bool violated;
  };
  std::vector<Line> lines;
  bool bound_violated = false;
  for (std::size_t k = 1; k < o.count; ++k) {
    const double q = static_cast<double>(k) / static_cast<double>(o.count);
    BernoulliCase bc;
    if (o.kind == "strict") {
      bc = strict_variant_case(q, o.p);
    } else if (o.kind == "hardy") {
      bc = hardy_bound_case(q, o.p, o.a, o.b);
      bound_violated |= bc.violated;
    } else if (o.kind == "copson") {
      bc = copson_bound_case(q, o.p, o.a, o.b);
      bound_violated |= bc.violated;
    } else if (o.kind == "reverse_copson") {
      bc = reverse_copson_counterexample(q, o.p);
    } else {
      throw Error(ErrorCode::ParseError, "unknown counterexample '" + o.kind + "'");
    }
    lines.push_back({q, bc.lhs_closed, bc.rhs_closed, bc.violated});
  }
  Sink sink(c.out_path, out);
  auto& s = sink.stream();
  if (c.format == "json") {
    json j{{"meta", meta(c, "counterexample " + o.kind, 0.0)}, {"rows", json::array()}};
    for (const auto& l : lines) {
      j["rows"].push_back(json{{"q", l.q}, {"lhs", l.lhs}, {"rhs", l.rhs}, {"gap", l.lhs - l.rhs},
                               {"violated", l.violated}});
    }
    s << j.dump(2) << '\n';
  } else {
    s << "q,lhs,rhs,gap,violated\n";
    for (const auto& l : lines) {
      s << num(l.q) << ',' << num(l.lhs) << ',' << num(l.rhs) << ',' << num(l.lhs - l.rhs) << ','
        << (l.violated ? "true" : "false") << '\n';
    }
  }
  return bound_violated ? kExitViolation : kExitOk;
}

// ---------------------------------------------------------------- survival

CensorSide parse_side(const std::string& s) {
  if (s == "right") return CensorSide::Right;
  if (s == "left") return CensorSide::Left;
  throw Error(ErrorCode::ParseError, "side must be right or left");
}

int cmd_survival_fit(const std::string& input, const std::string& side, Common c,
                     std::ostream& out) {
  std::ifstream in(input);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + input);
  const CensoredSample s = read_censored_csv(in, parse_side(side));
  const bool fwd = s.side == CensorSide::Right;
  const StepEstimate na = fwd ? nelson_aalen_forward(s) : nelson_aalen_backward(s);
  const StepEstimate km = fwd ? kaplan_meier_forward(s) : kaplan_meier_backward(s);
  Sink sink(c.out_path, out);
  auto& o = sink.stream();
  if (c.format == "json") {
    json j{{"meta", meta(c, "survival fit", 0.0)}, {"rows", json::array()}};
    j["meta"]["side"] = fwd ? "right" : "left";
    for (std::size_t k = 0; k < na.jump_times.size(); ++k) {
      j["rows"].push_back(
          json{{"time", na.jump_times[k]}, {"na", na.values[k]}, {"km", km.values[k]}});
    }
    o << j.dump(2) << '\n';
  } else {
    o << "time,na,km\n";
    for (std::size_t k = 0; k < na.jump_times.size(); ++k) {
      o << num(na.jump_times[k]) << ',' << num(na.values[k]) << ',' << num(km.values[k]) << '\n';
    }
  }
  return kExitOk;
}

int cmd_simulate(const std::string& x, const std::string& y, std::size_t n,
                 const std::string& side, Common c, std::ostream& out) {
  c.seed = effective_seed(c.seed);
  const auto s = simulate_censored(parse_dist(x), parse_dist(y), n, parse_side(side), c.seed);
  Sink sink(c.out_path, out);
  write_censored_csv(sink.stream(), s);
  return kExitOk;
}

// ---------------------------------------------------------------- martingale

struct MartingaleOpts {
  std::string dist = "grid:uniform01:1024";
  std::string fn = "linear";
  std::size_t samples = 100000;
};

int cmd_martingale(const MartingaleOpts& o, Common c, std::ostream& out, std::ostream& err) {
  c.seed = effective_seed(c.seed);
  const FiniteDist d = parse_dist(o.dist);
  std::function<double(double)> f;
  if (o.fn == "linear") {
    f = [](double v) { return v; };
  } else if (o.fn == "square") {
    f = [](double v) { return v * v; };
  } else if (o.fn == "sine") {
    f = [](double v) { return std::sin(2.0 * std::numbers::pi * v) + v; };
  } else {
    throw Error(ErrorCode::ParseError, "unknown function '" + o.fn + "'");
  }
  SupportFunction psi = SupportFunction::tabulate(d, f);
  const double mean = expectation(d, psi);
  for (std::size_t i = 0; i < psi.size(); ++i) psi[i] -= mean;
  const std::vector<double> times(d.atoms().begin(), d.atoms().end());
  const double n = static_cast<double>(d.size());

  std::vector<Row> rows;
  const auto em = exact_terminal_mean(d);
  rows.push_back({0, upper_report("exact_mean_zero", std::abs(em.EM()), 0.0, 1.0, 1e-12)});
  const auto mc = compensator_mean_check(d, times, o.samples, c.seed);
  rows.push_back({0, upper_report("compensator_mean_z", mc.max_abs_standardized, 4.0, 1.0, 0.0)});
  if (d.is_grid()) {
    const auto g = composition_identities_check(d, psi);
    const double tol = 10.0 / n;
    auto gap_row = [&](const char* name, double gap) {
      rows.push_back({0, upper_report(name, gap, tol, 1.0, 0.0)});
    };
    gap_row("gap_RL", g.rl);
    gap_row("gap_LR", g.lr);
    gap_row("gap_I-H_I-Hstar", g.hh_star);
    gap_row("gap_I-Hstar_I-H", g.h_star_h);
    const auto doob = doob_representation_check(d, psi, times);
    gap_row("gap_doob", doob.inner);
  }
  Sink sink(c.out_path, out);
  write_rows(sink.stream(), c, "martingale", 0.0, rows);
  return report_violations(rows, [&](std::size_t) {
    return json{{"dist", o.dist}, {"function", o.fn}, {"samples", o.samples}};
  }, err);
}

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--format", c.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--out", c.out_path, "output file (default stdout)");
  sub->add_option("--seed", c.seed, "random seed; HARDYKIT_SEED overrides");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Probabilistic Hardy-type inequalities, constants and censored-data estimators"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  Common common;
  VerifyOpts vo;
  auto* verify = app.add_subcommand("verify", "evaluate an inequality suite");
  verify->add_option("--dist", vo.dist, "distribution, e.g. bernoulli:0.5 or grid:uniform01:1024");
  verify->add_option("--dist-y", vo.dist_y, "second distribution (ordered suite)");
  verify->add_option("--psi", vo.psi, "psi values: comma list, e1, one, atoms");
  verify->add_option("--suite", vo.suite, "hardy, hardy_strict, hardy_right, two_sided, copson, "
                                          "carleman, carleman_tail, reverse_hardy, reverse_copson, "
                                          "ordered, random, weighted");
  verify->add_option("--variant", vo.variant, "variant for reverse and ordered suites");
  verify->add_option("--side", vo.side, "left or right (carleman_tail)");
  verify->add_option("--p", vo.p, "exponent p");
  verify->add_option("--cut", vo.cut, "split point for two_sided");
  verify->add_option("--tol", vo.tol, "relative tolerance");
  verify->add_option("--instances", vo.instances, "instances for random and weighted suites");
  add_common(verify, common);

  ConstantsOpts co;
  auto* constants = app.add_subcommand("constants", "sharp and auxiliary constants");
  constants->add_option("--p", co.p, "exponent p")->required();
  constants->add_option("--q", co.q, "exponent q (default p)");
  constants->add_option("--dist", co.dist, "estimate B and C for Hardy weights on this law");
  constants->add_option("--restarts", co.restarts, "search restarts");
  constants->add_option("--iterations", co.iterations, "search iterations");
  add_common(constants, common);

  SweepOpts so;
  auto* counter = app.add_subcommand("counterexample", "Bernoulli q-sweeps");
  counter->add_option("kind", so.kind, "strict, hardy, copson, reverse_copson")->required();
  counter->add_option("--p", so.p, "exponent p");
  counter->add_option("--a", so.a, "psi(0)");
  counter->add_option("--b", so.b, "psi(1)");
  counter->add_option("--count", so.count, "q = k/count for k = 1..count-1");
  add_common(counter, common);

  std::string surv_input, surv_side = "right";
  auto* survival = app.add_subcommand("survival", "censored-data estimators");
  survival->require_subcommand(1);
  auto* fit = survival->add_subcommand("fit", "Nelson-Aalen and Kaplan-Meier fit");
  fit->add_option("--input", surv_input, "CSV with time,status[,side]")->required();
  fit->add_option("--side", surv_side, "right or left when the file has no side column");
  add_common(fit, common);

  std::string sim_x, sim_y, sim_side = "right";
  std::size_t sim_n = 100;
  auto* simulate = app.add_subcommand("simulate", "draw a censored sample");
  simulate->add_option("--x", sim_x, "law of the variable of interest")->required();
  simulate->add_option("--y", sim_y, "law of the censoring variable")->required();
  simulate->add_option("--n", sim_n, "sample size");
  simulate->add_option("--side", sim_side, "right or left");
  add_common(simulate, common);

  MartingaleOpts mo;
  auto* martingale = app.add_subcommand("martingale", "compensator and operator identity checks");
  martingale->add_option("--dist", mo.dist, "distribution (a grid enables the identity checks)");
  martingale->add_option("--fn", mo.fn, "linear, square or sine");
  martingale->add_option("--samples", mo.samples, "Monte Carlo sample size");
  add_common(martingale, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion& e) {
    out << kVersion << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*verify) return cmd_verify(vo, common, out, err);
    if (*constants) return cmd_constants(co, common, out);
    if (*counter) return cmd_counterexample(so, common, out);
    if (*fit) return cmd_survival_fit(surv_input, surv_side, common, out);
    if (*simulate) return cmd_simulate(sim_x, sim_y, sim_n, sim_side, common, out);
    if (*martingale) return cmd_martingale(mo, common, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace hardykit::cli
