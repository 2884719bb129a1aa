#include "confbound/cli.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <optional>
#include <ostream>
#include <string>

#include <CLI11.hpp>

#include "confbound/bounds.hpp"
#include "confbound/domain_json.hpp"
#include "confbound/errors.hpp"
#include "confbound/norms.hpp"
#include "confbound/oracle.hpp"
#include "confbound/quadrature.hpp"
#include "confbound/raster.hpp"

namespace confbound {

namespace {

constexpr double kPi = std::numbers::pi;

std::string fixed3(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

std::string sig6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

std::string lpad(std::string s, std::size_t width) {
  if (s.size() < width) s.insert(0, width - s.size(), ' ');
  return s;
}

// Recursive-descent evaluator over a string_view.
class ExpressionParser {
 public:
  explicit ExpressionParser(std::string_view text) : s_(text) {}

  double parse() {
    const double v = expr();
    skip_space();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw SpecError("bad expression \"" + std::string(s_) + "\": " + what);
  }

  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  double expr() {
    double v = term();
    while (true) {
      if (accept('+')) {
        v += term();
      } else if (accept('-')) {
        v -= term();
      } else {
        return v;
      }
    }
  }

  double term() {
    double v = factor();
    while (true) {
      if (accept('*')) {
        v *= factor();
      } else if (accept('/')) {
        v /= factor();
      } else {
        return v;
      }
    }
  }

  double factor() {
    if (accept('-')) return -factor();
    if (accept('+')) return factor();
    if (accept('(')) {
      const double v = expr();
      if (!accept(')')) fail("missing ')'");
      return v;
    }
    skip_space();
    if (pos_ >= s_.size()) fail("unexpected end");
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c))) return identifier();
    fail("unexpected '" + std::string(1, c) + "'");
  }

  double number() {
    const std::string rest(s_.substr(pos_));
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(rest, &used);
    } catch (const std::exception&) {
      fail("malformed number");
    }
    pos_ += used;
    return v;
  }

  double identifier() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    const std::string name(s_.substr(start, pos_ - start));
    if (name == "pi") return kPi;
    if (name == "e") return std::numbers::e;
    if (!accept('(')) fail("expected '(' after " + name);
    const double arg = expr();
    if (!accept(')')) fail("missing ')'");
    if (name == "ln" || name == "log") return std::log(arg);
    if (name == "sqrt") return std::sqrt(arg);
    if (name == "exp") return std::exp(arg);
    fail("unknown function " + name);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

struct CommonFlags {
  std::string out = "text";
  int quad_nodes = QuadratureConfig{}.nodes_per_axis;
  int quad_panels = QuadratureConfig{}.panels_per_axis;
  int workers = 1;
  std::string h = "1/128";
};

void add_common(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--out", f.out, "Output format")->check(CLI::IsMember({"text", "csv"}));
  cmd->add_option("--quad-nodes", f.quad_nodes, "Gauss-Legendre nodes per axis and panel");
  cmd->add_option("--quad-panels", f.quad_panels, "Quadrature panels per axis");
  cmd->add_option("--workers", f.workers, "Worker threads (results do not depend on this)");
}

QuadratureConfig quad_from(const CommonFlags& f) {
  if (f.quad_nodes < 1 || f.quad_panels < 1) throw SpecError("--quad-nodes and --quad-panels must be >= 1");
  if (f.workers < 1) throw SpecError("--workers must be >= 1");
  QuadratureConfig q;
  q.nodes_per_axis = f.quad_nodes;
  q.panels_per_axis = f.quad_panels;
  q.workers = f.workers;
  return q;
}

double pitch_from(const CommonFlags& f) {
  const double h = parse_scalar_expression(f.h);
  if (!(h > 0.0) || !std::isfinite(h)) throw SpecError("--h must be a positive number");
  return h;
}

CatalogueOptions catalogue_options(const CommonFlags& f, const std::string& alphas) {
  CatalogueOptions o;
  o.quad = quad_from(f);
  o.raster_h = pitch_from(f);
  o.alphas = parse_value_list(alphas);
  for (double a : o.alphas) {
    if (!(a > 2.0)) throw SpecError("--alphas entries must exceed 2");
  }
  return o;
}

void print_bound_table(std::ostream& out, const std::vector<BoundResult>& rows) {
  out << pad("method", 20) << lpad("value", 12) << "  valid\n";
  for (const BoundResult& r : rows) {
    out << pad(r.label(), 20) << lpad(fixed3(r.value), 12) << "  " << (r.valid ? "yes" : "no") << '\n';
  }
}

void print_bound_csv(std::ostream& out, const std::vector<BoundResult>& rows) {
  out << kBoundCsvHeader << '\n';
  for (const BoundResult& r : rows) out << to_csv_row(r) << '\n';
}

void describe_spec(std::ostream& out, const NamedSpec& ns, const std::string& path) {
  out << "domain: " << (ns.name.empty() ? path : ns.name) << '\n';
  const BaseDomain& b = ns.spec.base;
  out << "map: " << ns.spec.map.describe() << " on ";
  if (b.is_rectangle()) {
    const Rectangle& r = b.as_rectangle();
    out << "rectangle (" << sig6(r.x0) << ", " << sig6(r.x1) << ") x (" << sig6(r.y0) << ", " << sig6(r.y1) << ")\n";
  } else {
    const Disc& d = b.as_disc();
    out << "disc center (" << sig6(d.center.real()) << ", " << sig6(d.center.imag()) << ") radius "
        << sig6(d.radius) << '\n';
  }
}

int cmd_bounds(const std::string& path, const CommonFlags& f, const std::string& alphas, std::ostream& out,
               std::ostream& err) {
  const NamedSpec ns = load_domain_spec(path);
  const CatalogueOptions opts = catalogue_options(f, alphas);
  const std::vector<BoundResult> rows = lambda1_catalogue(ns.spec, opts);
  std::optional<BoundResult> best;
  try {
    best = best_bound(rows);
  } catch (const NoValidBound&) {
  }
  if (f.out == "csv") {
    print_bound_csv(out, rows);
    if (best) out << "best," << sig6(best->value) << ",1,,method=" << best->label() << '\n';
  } else {
    describe_spec(out, ns, path);
    print_bound_table(out, rows);
    if (best) out << "best: " << best->label() << ' ' << fixed3(best->value) << '\n';
  }
  if (!best) {
    err << "error: no valid lambda1 bound\n";
    return kExitNoValidBound;
  }
  return kExitOk;
}

int cmd_table(const std::string& example, const std::string& d_list, const CommonFlags& f, std::ostream& out) {
  if (example != "exp" && example != "sin") throw SpecError("--example must be exp or sin");
  const ExampleFamily family = example == "exp" ? ExampleFamily::Exp : ExampleFamily::Sin;
  const std::vector<double> ds = parse_value_list(d_list);
  const QuadratureConfig quad = quad_from(f);

  std::vector<double> makai, rfk, estimate;
  for (double d : ds) {
    if (!(d > 0.0) || !std::isfinite(d)) throw SpecError("--d values must be positive");
    const DomainSpec spec = example_spec(family, d);
    makai.push_back(bound_makai(*spec.inradius_override, false).value);
    rfk.push_back(bound_rfk(image_area(spec, quad)).value);
    estimate.push_back(bound_theorem_a(exact_lambda1(spec.base), norm_sup(spec.map, spec.base)).value);
  }

  if (f.out == "csv") {
    out << "method";
    for (double d : ds) out << ",d=" << sig6(d);
    out << '\n';
    auto row = [&](const char* name, const std::vector<double>& v) {
      out << name;
      for (double x : v) out << ',' << sig6(x);
      out << '\n';
    };
    row("Makai", makai);
    row("RFK", rfk);
    row("Estimate", estimate);
  } else {
    out << example << " family\n" << pad("d", 10);
    for (double d : ds) out << lpad(sig6(d), 11);
    out << '\n';
    auto row = [&](const char* name, const std::vector<double>& v) {
      out << pad(name, 10);
      for (double x : v) out << lpad(fixed3(x), 11);
      out << '\n';
    };
    row("Makai", makai);
    row("RFK", rfk);
    row("Estimate", estimate);
  }
  return kExitOk;
}

int cmd_gap(const std::string& path, const CommonFlags& f, std::ostream& out) {
  const NamedSpec ns = load_domain_spec(path);
  CatalogueOptions opts;
  opts.quad = quad_from(f);
  opts.raster_h = pitch_from(f);
  const std::vector<BoundResult> rows = gap_catalogue(ns.spec, opts);
  if (f.out == "csv") {
    print_bound_csv(out, rows);
    return kExitOk;
  }
  describe_spec(out, ns, path);
  print_bound_table(out, rows);
  for (const BoundResult& r : rows) {
    out << r.label() << ':';
    for (const auto& [k, v] : r.intermediates) out << ' ' << k << '=' << sig6(v);
    out << '\n';
  }
  return kExitOk;
}

int cmd_check_regularity(const std::string& path, const CommonFlags& f, const std::string& alphas,
                         std::ostream& out) {
  const NamedSpec ns = load_domain_spec(path);
  const QuadratureConfig quad = quad_from(f);
  const std::vector<double> as = parse_value_list(alphas);
  for (double a : as) {
    if (!(a > 2.0)) throw SpecError("--alphas entries must exceed 2");
  }
  const RegularityProfile p = regularity_profile(ns.spec.map, ns.spec.base, as, quad);
  if (f.out == "csv") {
    out << "alpha,value,finite\n";
    for (const RegularityEntry& e : p.entries) {
      out << sig6(e.alpha) << ',' << (e.value ? sig6(*e.value) : std::string("inf")) << ','
          << (e.finite ? 1 : 0) << '\n';
    }
    return kExitOk;
  }
  describe_spec(out, ns, path);
  out << pad("alpha", 10) << lpad("norm", 12) << "  status\n";
  for (const RegularityEntry& e : p.entries) {
    out << pad(sig6(e.alpha), 10) << lpad(e.value ? fixed3(*e.value) : std::string("inf"), 12) << "  "
        << (e.finite ? "finite" : "diverged") << '\n';
  }
  out << "conformal-regular: " << (p.conformal_regular ? "yes" : "no") << '\n';
  return kExitOk;
}

int cmd_oracle(const std::string& path, const CommonFlags& f, int k, double tol, bool run_validation,
               const std::string& alphas, std::ostream& out, std::ostream& err) {
  const NamedSpec ns = load_domain_spec(path);
  const double h = pitch_from(f);
  if (k < 1) throw SpecError("--k must be >= 1");
  if (!(tol > 0.0) || !(tol < 1.0)) throw SpecError("--tol must lie in (0, 1)");
  if (f.workers < 1) throw SpecError("--workers must be >= 1");

  if (!run_validation) {
    const RasterGrid grid = rasterize(ns.spec, h);
    FdOptions fo;
    fo.workers = f.workers;
    const OracleResult r = fd_eigenvalues(grid, k, tol, fo);
    if (f.out == "csv") {
      out << "index,eigenvalue,residual\n";
      for (std::size_t i = 0; i < r.eigenvalues.size(); ++i) {
        out << i + 1 << ',' << sig6(r.eigenvalues[i]) << ',' << sig6(r.residuals[i]) << '\n';
      }
      return kExitOk;
    }
    describe_spec(out, ns, path);
    out << "h " << sig6(r.h) << "  unknowns " << r.unknowns << "  iterations " << r.iterations << "  residual "
        << sig6(r.residual) << '\n';
    for (std::size_t i = 0; i < r.eigenvalues.size(); ++i) {
      out << pad("lambda_" + std::to_string(i + 1), 12) << lpad(fixed3(r.eigenvalues[i]), 12) << '\n';
    }
    return kExitOk;
  }

  CatalogueOptions opts = catalogue_options(f, alphas);
  opts.raster_h = h;
  std::vector<BoundResult> bounds = lambda1_catalogue(ns.spec, opts);
  if (ns.spec.base.is_unit_disc()) {
    try {
      const std::vector<BoundResult> gaps = gap_catalogue(ns.spec, opts);
      bounds.insert(bounds.end(), gaps.begin(), gaps.end());
    } catch (const AreaMismatch&) {
      // Gap estimates only apply to images of area pi.
    }
  }
  ValidateOptions vo;
  vo.tol = tol;
  vo.workers = f.workers;
  const ValidationReport rep = validate(ns.spec, bounds, h, vo);
  if (f.out == "csv") {
    out << "method,bound,reference,tightness,checked,pass\n";
    for (const BoundCheck& c : rep.checks) {
      out << c.label << ',' << sig6(c.bound) << ',' << sig6(c.reference) << ',' << sig6(c.tightness) << ','
          << (c.checked ? 1 : 0) << ',' << (c.pass ? 1 : 0) << '\n';
    }
  } else {
    describe_spec(out, ns, path);
    out << "lambda1(h) " << fixed3(rep.coarse.eigenvalues[0]) << "  lambda1(h/2) " << fixed3(rep.fine.eigenvalues[0])
        << "  extrapolated " << fixed3(rep.lambda1) << "  eps_grid " << sig6(rep.eps_grid) << '\n';
    if (rep.lambda2) out << "lambda2 extrapolated " << fixed3(*rep.lambda2) << '\n';
    out << pad("method", 20) << lpad("bound", 12) << lpad("reference", 12) << lpad("tightness", 11) << "  result\n";
    for (const BoundCheck& c : rep.checks) {
      out << pad(c.label, 20) << lpad(fixed3(c.bound), 12) << lpad(fixed3(c.reference), 12)
          << lpad(fixed3(c.tightness), 11) << "  " << (!c.checked ? "skipped" : c.pass ? "pass" : "FAIL") << '\n';
    }
  }
  if (!rep.all_pass) {
    err << "error: a valid bound exceeds the oracle eigenvalue\n";
    return kExitComputationError;
  }
  return kExitOk;
}

}  // namespace

DomainSpec example_spec(ExampleFamily family, double d) {
  if (!(d > 0.0) || !std::isfinite(d)) throw DomainError("example parameter d must be positive");
  DomainSpec s;
  if (family == ExampleFamily::Exp) {
    s.base = BaseDomain::rectangle(0.0, d, 0.0, kPi);
    s.map = AnalyticMap::exp();
    s.inradius_override = std::expm1(d) / 2.0;
  } else {
    s.base = BaseDomain::rectangle(-kPi / 2.0, kPi / 2.0, -d, d);
    s.map = AnalyticMap::sin();
    s.inradius_override = d;
  }
  return s;
}

double parse_scalar_expression(std::string_view text) { return ExpressionParser(text).parse(); }

std::vector<double> parse_value_list(std::string_view text) {
  std::vector<double> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string_view item = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    if (item.find_first_not_of(" \t") != std::string_view::npos) out.push_back(parse_scalar_expression(item));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (out.empty()) throw SpecError("value list is empty");
  return out;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Conformal lower bounds for the first Dirichlet eigenvalue"};
  app.require_subcommand(1);
  // "--h" is the grid pitch, so help is long-form only.
  app.set_help_flag("--help", "Print this help message and exit");

  std::string spec_path, alphas = "3,4,6,10", example, d_list;
  CommonFlags common;
  int k = 1;
  double tol = 1e-8;
  bool run_validation = false;

  auto* bounds = app.add_subcommand("bounds", "All lambda1 bounds for a domain spec");
  bounds->add_option("--spec", spec_path, "Domain-spec JSON file")->required();
  bounds->add_option("--alphas", alphas, "Exponents for the alpha-regular sweep");
  bounds->add_option("--h", common.h, "Raster pitch for the inradius when none is declared");
  add_common(bounds, common);

  auto* table = app.add_subcommand("table", "Makai / RFK / Estimate table for an example family");
  table->add_option("--example", example, "exp or sin")->required();
  table->add_option("--d", d_list, "Comma-separated d values (expressions allowed)")->required();
  add_common(table, common);

  auto* oracle = app.add_subcommand("oracle", "Finite-difference eigenvalues, optional bound validation");
  oracle->add_option("--spec", spec_path, "Domain-spec JSON file")->required();
  oracle->add_option("--h", common.h, "Grid pitch (expressions allowed)");
  oracle->add_option("--k", k, "Number of eigenvalues");
  oracle->add_option("--tol", tol, "Relative residual tolerance");
  oracle->add_flag("--validate", run_validation, "Check every valid bound at h and h/2");
  oracle->add_option("--alphas", alphas, "Exponents for the alpha-regular sweep");
  add_common(oracle, common);

  auto* gap = app.add_subcommand("gap", "Spectral-gap estimates on unit-disc specs");
  gap->add_option("--spec", spec_path, "Domain-spec JSON file")->required();
  gap->add_option("--h", common.h, "Raster pitch for the inradius when none is declared");
  add_common(gap, common);

  auto* regularity = app.add_subcommand("check-regularity", "alpha-norms of phi' over the base");
  regularity->add_option("--spec", spec_path, "Domain-spec JSON file")->required();
  regularity->add_option("--alphas", alphas, "Comma-separated exponents > 2");
  add_common(regularity, common);

  std::vector<const char*> argv{"confbound"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (bounds->parsed()) return cmd_bounds(spec_path, common, alphas, out, err);
    if (table->parsed()) return cmd_table(example, d_list, common, out);
    if (oracle->parsed()) return cmd_oracle(spec_path, common, k, tol, run_validation, alphas, out, err);
    if (gap->parsed()) return cmd_gap(spec_path, common, out);
    if (regularity->parsed()) return cmd_check_regularity(spec_path, common, alphas, out);
  } catch (const SpecError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const NoValidBound& e) {
    err << "error: " << e.what() << '\n';
    return kExitNoValidBound;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitComputationError;
  }
  return kExitInputError;
}

}  // namespace confbound
