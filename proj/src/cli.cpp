#include "hcurve/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "hcurve/bertrand.hpp"
#include "hcurve/cesaro.hpp"
#include "hcurve/classify.hpp"
#include "hcurve/errors.hpp"
#include "hcurve/json_io.hpp"
#include "hcurve/kernels.hpp"

namespace hcurve::cli {

namespace {

using io::json;

struct Settings {
  double step = 1e-3;
  double tol = 1e-6;
  std::string format = "csv";
  std::string output;
  std::string config;
};

bool as_json(const Settings& st) { return st.format == "json"; }

std::vector<double> output_grid(Interval iv, double step) {
  const auto n = static_cast<std::size_t>(std::max(1.0, std::ceil(iv.length() / step - 1e-9)));
  return uniform_grid(iv, n);
}

json table(const std::vector<std::string>& columns, const std::vector<std::vector<double>>& rows) {
  json r = json::array();
  for (const auto& row : rows) r.push_back(row);
  return {{"columns", columns}, {"rows", r}};
}

void write_csv(std::ostream& out, const std::vector<std::string>& columns, const std::vector<std::vector<double>>& rows) {
  io::CsvWriter w(out, columns);
  for (const auto& r : rows) w.row(r);
}

io::CurveSpec load_curve(const std::string& path) { return io::parse_curve_spec(io::read_file(path)); }

// analyze ------------------------------------------------------------------

int cmd_analyze(const Settings& st, const std::string& spec_path, std::ostream& out) {
  const HorizontalCurve h = io::realize(load_curve(spec_path), st.step);
  const auto grid = output_grid(h.domain(), st.step);
  const auto inv = kernels::sample_invariants(h, grid);
  std::vector<std::vector<double>> rows;
  rows.reserve(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const H1Point p = h.point(grid[i]);
    rows.push_back({grid[i], p.x, p.y, p.z, inv[i].kappa, inv[i].tau});
  }
  const std::vector<std::string> cols{"s", "x", "y", "z", "kappa", "tau"};
  if (as_json(st)) {
    json j = table(cols, rows);
    j["length"] = h.length();
    out << io::dump(j);
  } else {
    write_csv(out, cols, rows);
  }
  return kOk;
}

// reconstruct --------------------------------------------------------------

int cmd_reconstruct(const Settings& st, const std::string& spec_path, std::ostream& out) {
  const io::CurveSpec spec = load_curve(spec_path);
  if (!std::holds_alternative<io::IntrinsicSpec>(spec))
    throw ParameterError("reconstruct needs an intrinsic curve spec");
  const HorizontalCurve h = io::realize(spec, st.step);
  const auto samples = sample_curve(h, st.step);
  if (as_json(st)) {
    out << io::dump(io::to_json(io::CurveSpec{io::SamplesSpec{samples}}));
  } else {
    io::CsvWriter w(out, {"s", "x", "y", "z"});
    for (const auto& r : samples) w.row({r.u, r.x, r.y, r.z});
  }
  return kOk;
}

// bertrand -----------------------------------------------------------------

struct BertrandArgs {
  std::string spec;
  double c1 = 0.0;
  double c2 = 0.0;
  std::string tau_bar;
  std::string g;
};

int cmd_bertrand(const Settings& st, const BertrandArgs& a, std::ostream& out) {
  const HorizontalCurve h = io::realize(load_curve(a.spec), st.step);
  BertrandSpec spec{a.c1, a.c2, std::nullopt, std::nullopt};
  if (!a.tau_bar.empty()) spec.tau_bar = ScalarFn::parse(a.tau_bar);
  if (!a.g.empty()) spec.g = ScalarFn::parse(a.g);
  BertrandOptions opts;
  opts.step = st.step;
  const BertrandMate m = bertrand_mate(h, spec, opts);
  // Rows use the exact mate samples rather than the resampled mate curve.
  std::vector<std::vector<double>> rows;
  rows.reserve(m.samples.size());
  const double expected = std::hypot(m.c1, m.c2);
  double max_dev = 0.0, max_euc = 0.0, max_vert = 0.0;
  for (std::size_t k = 0; k < m.samples.size(); ++k) {
    const CurveSample& q = m.samples[k];
    const H1Point p = h.point(q.u);
    const double dist = std::hypot(q.x - p.x, q.y - p.y);
    max_dev = std::max(max_dev, std::fabs(dist - expected));
    max_euc = std::max(max_euc, std::hypot(dist, q.z - p.z));
    max_vert = std::max(max_vert, std::fabs(m.offsets[k][2]));
    rows.push_back({q.u, p.x, p.y, p.z, q.x, q.y, q.z, dist});
  }
  const std::vector<std::string> cols{"s", "x", "y", "z", "x_bar", "y_bar", "z_bar", "dist"};
  if (as_json(st)) {
    json j = table(cols, rows);
    j["branch"] = m.branch == BertrandBranch::Curved ? "curved" : "zero_curvature";
    j["expected_distance"] = expected;
    j["max_deviation"] = max_dev;
    j["max_euclidean"] = max_euc;
    j["max_vertical"] = max_vert;
    out << io::dump(j);
  } else {
    write_csv(out, cols, rows);
  }
  return kOk;
}

// classify -----------------------------------------------------------------

void emit_verdict(const Settings& st, const json& verdict, std::ostream& out) {
  if (as_json(st)) {
    out << io::dump(verdict);
    return;
  }
  out << "field,value\n";
  out << "tag," << verdict.at("tag").get<std::string>() << '\n';
  for (const char* group : {"witness", "residuals"}) {
    if (!verdict.contains(group)) continue;
    for (const auto& [k, v] : verdict.at(group).items()) out << group << '.' << k << ',' << io::format_number(v.get<double>()) << '\n';
  }
}

int cmd_classify(const Settings& st, const std::string& spec_path, std::ostream& out) {
  const HorizontalCurve h = io::realize(load_curve(spec_path), st.step);
  ClassifyOptions opts;
  opts.tol = st.tol;
  try {
    emit_verdict(st, io::to_json(classify_position(h, opts)), out);
    return kOk;
  } catch (const AmbiguousClassificationError& e) {
    emit_verdict(st, {{"tag", "Ambiguous"}, {"candidates", e.candidates()}, {"message", e.what()}}, out);
    return kNegative;
  }
}

// surface ------------------------------------------------------------------

void emit_membership(const Settings& st, const MembershipReport& r, std::ostream& out) {
  if (as_json(st)) {
    out << io::dump(io::to_json(r));
  } else {
    out << "member,max_defect,worst_s\n"
        << (r.member ? "true" : "false") << ',' << io::format_number(r.max_defect) << ','
        << io::format_number(r.worst_s) << '\n';
  }
}

int cmd_surface_check(const Settings& st, const std::string& curve_path, const std::string& surface_path,
                      std::ostream& out) {
  const HorizontalCurve h = io::realize(load_curve(curve_path), st.step);
  const SurfaceOfRevolution surf = io::parse_surface(io::read_file(surface_path));
  const MembershipReport r = surface_membership(h, surf, st.tol);
  emit_membership(st, r, out);
  return r.member ? kOk : kNegative;
}

void emit_surface(const Settings& st, const SurfaceOfRevolution& surf, json extra, std::ostream& out) {
  std::vector<std::vector<double>> rows;
  for (double s : output_grid(surf.range, st.step)) rows.push_back({s, surf.g(s), surf.f(s)});
  if (!as_json(st)) {
    write_csv(out, {"sigma", "g", "f"}, rows);
    return;
  }
  json j = std::move(extra);
  j["g"] = surf.g.expression() ? json(surf.g.expression()->text()) : json(nullptr);
  j["f"] = surf.f.expression() ? json(surf.f.expression()->text()) : json(nullptr);
  j["range"] = {surf.range.lo, surf.range.hi};
  j["samples"] = table({"sigma", "g", "f"}, rows);
  out << io::dump(j);
}

struct ConstKappaArgs {
  double kappa = 0.0;
  std::string tau = "0";
  double C1 = 0.0, C2 = 0.0, C3g = 0.0, C3f = 0.0;
  std::vector<double> range;
};

int cmd_gen_const_kappa(const Settings& st, const ConstKappaArgs& a, std::ostream& out) {
  const Interval iv{a.range.at(0), a.range.at(1)};
  const ScalarFn tau = ScalarFn::parse(a.tau);
  const SurfaceOfRevolution surf = generate_surface_constant_kappa(a.kappa, tau, a.C1, a.C2, a.C3g, a.C3f, iv);
  const double stretch = (a.C1 * a.C1 + a.C2 * a.C2) / 4.0 + 1.0 / (a.kappa * a.kappa) - a.C3g / a.kappa;
  emit_surface(st, surf, {{"kappa", a.kappa}, {"tau", tau.text()}, {"stretch", stretch}}, out);
  return kOk;
}

struct ConstTauArgs {
  std::string kappa;
  double tau = 0.0;
  double C1 = 1.0, C2 = 0.0, C3 = 0.0, C4 = 1.0, C5 = 0.0, C6 = 0.0;
  double g2_start = 0.0, f_start = 0.0;
  std::vector<double> range;
};

int cmd_gen_const_tau(const Settings& st, const ConstTauArgs& a, std::ostream& out) {
  const Interval iv{a.range.at(0), a.range.at(1)};
  const InvariantPair inv{ScalarFn::parse(a.kappa), ScalarFn::constant(a.tau)};
  const SurfaceOfRevolution surf =
      generate_surface_constant_tau(inv, {a.C1, a.C2, a.C3, a.C4}, {a.C5, a.C6}, iv, a.g2_start, a.f_start);
  emit_surface(st, surf, {{"kappa", inv.kappa.text()}, {"tau", a.tau}}, out);
  return kOk;
}

int cmd_pansu(const Settings& st, double lambda, std::ostream& out) {
  const PansuSphere p = pansu_sphere(lambda, st.step);
  const auto& c = p.certificate;
  if (as_json(st)) {
    json j = io::to_json(c.membership);
    j["lambda"] = lambda;
    j["graph_defect"] = c.graph_defect;
    j["kappa_deviation"] = c.kappa_deviation;
    j["tau_deviation"] = c.tau_deviation;
    j["start"] = io::to_json(c.start);
    j["end"] = io::to_json(c.end);
    j["ok"] = c.ok;
    out << io::dump(j);
  } else {
    out << "ok,member,max_defect,worst_s,graph_defect,kappa_deviation,tau_deviation\n"
        << (c.ok ? "true" : "false") << ',' << (c.membership.member ? "true" : "false") << ',' << io::format_number(c.membership.max_defect) << ','
        << io::format_number(c.membership.worst_s) << ',' << io::format_number(c.graph_defect) << ','
        << io::format_number(c.kappa_deviation) << ',' << io::format_number(c.tau_deviation) << '\n';
  }
  return c.ok ? kOk : kNegative;
}

// settings -----------------------------------------------------------------

void apply_config(Settings& st, const std::map<std::string, const CLI::Option*>& given) {
  if (st.config.empty()) return;
  const json c = io::read_file(st.config);
  if (!c.is_object()) throw ParseError(st.config + ": config must be a JSON object");
  for (const auto& [k, v] : c.items()) {
    const auto it = given.find(k);
    if (it == given.end()) throw ParseError(st.config + ": unknown config key \"" + k + "\"");
    if (it->second->count() > 0) continue;  // flags win
    if (k == "step" || k == "tol") {
      if (!v.is_number()) throw ParseError(st.config + ": \"" + k + "\" must be a number");
      (k == "step" ? st.step : st.tol) = v.get<double>();
    } else {
      if (!v.is_string()) throw ParseError(st.config + ": \"" + k + "\" must be a string");
      (k == "format" ? st.format : st.output) = v.get<std::string>();
    }
  }
}

void validate(const Settings& st) {
  if (!(st.step > 0.0) || !std::isfinite(st.step)) throw ParameterError("--step must be positive");
  if (!(st.tol > 0.0) || !std::isfinite(st.tol)) throw ParameterError("--tol must be positive");
  if (st.format != "csv" && st.format != "json") throw ParameterError("--format must be csv or json");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Differential geometry of horizontally regular curves in the Heisenberg group H1", "hcurve"};
  app.require_subcommand(1);
  Settings st;
  std::map<std::string, const CLI::Option*> flags;
  flags["step"] = app.add_option("--step", st.step, "integration and sampling step")->capture_default_str();
  flags["tol"] = app.add_option("--tol", st.tol, "acceptance tolerance")->capture_default_str();
  flags["format"] = app.add_option("--format", st.format, "csv or json")->capture_default_str();
  flags["output"] = app.add_option("--output", st.output, "output file (default: standard output)");
  app.add_option("--config", st.config, "JSON file with step, tol, format, output; flags win");

  std::string spec, surface_path;
  auto* analyze = app.add_subcommand("analyze", "sample x, y, z, kappa, tau along horizontal arc-length")->fallthrough();
  analyze->add_option("spec", spec, "curve JSON")->required();

  auto* recon = app.add_subcommand("reconstruct", "integrate an intrinsic spec into curve samples")->fallthrough();
  recon->add_option("spec", spec, "intrinsic curve JSON")->required();

  BertrandArgs ba;
  auto* bert = app.add_subcommand("bertrand", "construct a Bertrand mate")->fallthrough();
  bert->add_option("spec", ba.spec, "curve JSON")->required();
  bert->add_option("--c1", ba.c1, "tangent offset constant")->required();
  bert->add_option("--c2", ba.c2, "normal offset constant")->required();
  bert->add_option("--tau-bar", ba.tau_bar, "mate contact normality (curved branch)");
  bert->add_option("--g", ba.g, "vertical offset g(s) (zero-curvature branch)");

  auto* classify = app.add_subcommand("classify", "classify the position vector")->fallthrough();
  classify->add_option("spec", spec, "curve JSON")->required();

  auto* surface = app.add_subcommand("surface", "surfaces of revolution")->fallthrough()->require_subcommand(1);
  auto* check = surface->add_subcommand("check", "curve-on-surface membership")->fallthrough();
  check->add_option("curve", spec, "curve JSON")->required();
  check->add_option("surface", surface_path, "surface JSON")->required();

  ConstKappaArgs ka;
  auto* gk = surface->add_subcommand("gen-const-kappa", "surface carrying a constant-kappa curve")->fallthrough();
  gk->add_option("--kappa", ka.kappa, "nonzero constant p-curvature")->required();
  gk->add_option("--tau", ka.tau, "contact normality expression")->capture_default_str();
  gk->add_option("--C1", ka.C1)->required();
  gk->add_option("--C2", ka.C2)->required();
  gk->add_option("--C3g", ka.C3g, "constant in g")->required();
  gk->add_option("--C3f", ka.C3f, "constant in f")->required();
  gk->add_option("--range", ka.range, "profile interval a,b")->required()->expected(2)->delimiter(',');

  ConstTauArgs ta;
  auto* gt = surface->add_subcommand("gen-const-tau", "surface carrying a constant-tau curve")->fallthrough();
  gt->add_option("--kappa", ta.kappa, "p-curvature expression")->required();
  gt->add_option("--tau", ta.tau, "constant contact normality")->required();
  gt->add_option("--C1", ta.C1)->capture_default_str();
  gt->add_option("--C2", ta.C2)->capture_default_str();
  gt->add_option("--C3", ta.C3)->capture_default_str();
  gt->add_option("--C4", ta.C4)->capture_default_str();
  gt->add_option("--C5", ta.C5)->capture_default_str();
  gt->add_option("--C6", ta.C6)->capture_default_str();
  gt->add_option("--g2-start", ta.g2_start, "g^2 at the interval start")->capture_default_str();
  gt->add_option("--f-start", ta.f_start, "f at the interval start")->capture_default_str();
  gt->add_option("--range", ta.range, "profile interval a,b")->required()->expected(2)->delimiter(',');

  double lambda = 1.0;
  auto* pansu = surface->add_subcommand("pansu", "Pansu sphere certificate")->fallthrough();
  pansu->add_option("--lambda", lambda, "sphere parameter")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kInputError;
  }

  std::ostringstream buf;
  int code = kOk;
  try {
    apply_config(st, flags);
    validate(st);
    if (*analyze) {
      code = cmd_analyze(st, spec, buf);
    } else if (*recon) {
      code = cmd_reconstruct(st, spec, buf);
    } else if (*bert) {
      code = cmd_bertrand(st, ba, buf);
    } else if (*classify) {
      code = cmd_classify(st, spec, buf);
    } else if (*check) {
      code = cmd_surface_check(st, spec, surface_path, buf);
    } else if (*gk) {
      code = cmd_gen_const_kappa(st, ka, buf);
    } else if (*gt) {
      code = cmd_gen_const_tau(st, ta, buf);
    } else if (*pansu) {
      code = cmd_pansu(st, lambda, buf);
    }
  } catch (const RegularityError& e) {
    err << "error: regularity failure: " << e.what() << '\n';
    return kIrregular;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  if (st.output.empty()) {
    out << buf.str();
  } else {
    std::ofstream f(st.output, std::ios::binary);
    if (!(f << buf.str())) {
      err << "error: cannot write " << st.output << '\n';
      return kInputError;
    }
  }
  return code;
}

}  // namespace hcurve::cli
