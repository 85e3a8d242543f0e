#include "acmgate/cli.hpp"

#include <cstdlib>
#include <optional>

#include "CLI11.hpp"
#include "acmgate/bundle_rr.hpp"
#include "acmgate/errors.hpp"
#include "acmgate/io.hpp"
#include "acmgate/report.hpp"

namespace acm {

namespace {

std::int64_t parse_int(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(text, &used);
    if (used == text.size()) return v;
  } catch (const std::exception&) {
  }
  throw InvalidInput(what + " must be an integer, got '" + text + "'");
}

std::int64_t default_ambient_dim() {
  const char* env = std::getenv("ACMGATE_AMBIENT_DIM");
  if (env == nullptr || *env == '\0') return 209;
  return parse_int(env, "ACMGATE_AMBIENT_DIM");
}

// "name=lo..hi"
std::pair<std::string, UnknownDomain> parse_domain(const std::string& text) {
  auto eq = text.find('=');
  auto dots = text.find("..");
  if (eq == std::string::npos || dots == std::string::npos || dots < eq) {
    throw ParseError("domain '" + text + "' must look like name=lo..hi");
  }
  UnknownDomain domain{parse_int(text.substr(eq + 1, dots - eq - 1), "domain bound"),
                       parse_int(text.substr(dots + 2), "domain bound")};
  if (domain.lo > domain.hi) throw InvalidInput("empty domain '" + text + "'");
  return {text.substr(0, eq), domain};
}

void check_assignment(const Assignment& values, const std::set<std::string>& known) {
  for (const auto& [name, value] : values) {
    if (!known.contains(name)) throw UnknownSymbolError(name);
  }
}

void print_constraints(std::ostream& out, const std::vector<Substitution>& constraints) {
  for (const auto& s : constraints) out << "constraint: " << s.str() << '\n';
}

struct LoadedResolution {
  ResolutionFile file;
  GorensteinResolution resolution;
  std::optional<CurveInvariants> curve;
};

LoadedResolution load_resolution(const std::string& path, const std::string& assign_path) {
  ResolutionFile file = parse_resolution(read_text_file(path));
  GorensteinResolution res = file.resolution();
  std::optional<CurveInvariants> curve = file.curve();
  if (!assign_path.empty()) {
    Assignment values = parse_assignments(read_text_file(assign_path));
    check_assignment(values, file.symbols());
    res = res.partial_eval(values);
    if (curve) {
      curve->d = curve->d.partial_eval(values);
      curve->g = curve->g.partial_eval(values);
    }
  }
  return {std::move(file), std::move(res), std::move(curve)};
}

// Constraint polynomials from a file, with assigned values substituted.
std::vector<Poly> file_constraints(const ResolutionFile& file, const std::string& assign_path) {
  std::vector<Poly> out = file.constraint_polys();
  if (!assign_path.empty()) {
    Assignment values = parse_assignments(read_text_file(assign_path));
    for (auto& p : out) p = p.partial_eval(values);
  }
  return out;
}

int cmd_classify(int degree, const std::string& format, bool search, bool guard, std::ostream& out) {
  EnumerationOptions options;
  options.search_twists = search;
  options.monotonicity_guard = guard;
  out << render({classify_table(degree, options)}, parse_report_format(format));
  return kExitOk;
}

int cmd_chi(int r, int c1, const std::string& c2, std::ostream& out) {
  BundleInvariants inv{c1, Poly::parse(c2), HypersurfaceContext(r)};
  out << "chi = " << chi_rank2(inv).str() << '\n';
  return kExitOk;
}

int cmd_km(const std::string& path, const std::string& assign_path, const std::vector<std::string>& pivots,
           std::ostream& out) {
  LoadedResolution loaded = load_resolution(path, assign_path);
  GorensteinResolution res = loaded.resolution;
  if (loaded.curve) {
    auto constraints = hilbert_constraints(res, *loaded.curve, pivots, file_constraints(loaded.file, assign_path));
    print_constraints(out, constraints);
    res = res.apply(constraints);
  }
  out << "generators: " << format_summands(res.generators()) << '\n';
  out << "h0(N_C) = " << km_h0_normal(res).str() << '\n';
  return kExitOk;
}

int cmd_gate(const std::string& path, const std::string& assign_path, std::optional<std::int64_t> ambient,
             std::int64_t fiber_twist, const std::vector<std::string>& domains,
             const std::vector<std::string>& pivots, std::ostream& out) {
  LoadedResolution loaded = load_resolution(path, assign_path);
  if (!loaded.curve) throw InvalidInput("gate needs \"invariants\" in the resolution file");
  GateOptions options;
  options.ambient_dim = ambient ? *ambient : default_ambient_dim();
  options.fiber_twist = fiber_twist;
  options.pivot_order = pivots;
  options.extra_constraints = file_constraints(loaded.file, assign_path);
  for (const auto& text : domains) {
    auto [name, domain] = parse_domain(text);
    if (!loaded.file.symbols().contains(name)) throw UnknownSymbolError(name);
    options.domains[name] = domain;
  }
  GateReport report = flag_gate(loaded.resolution, *loaded.curve, options);
  print_constraints(out, report.constraints);
  out << "h0(N_C) = " << report.h0N.str() << '\n';
  out << "h0(I_C(" << fiber_twist << ")) = " << report.h0I.str() << '\n';
  out << "bound = " << report.bound.str() << '\n';
  out << "ambient_dim = " << report.ambient_dim << '\n';
  if (report.residual) {
    out << "residual: " << report.residual->str() << " not shown to stay below " << report.ambient_dim << '\n';
  }
  if (report.witness) {
    out << "witness:";
    for (const auto& [name, value] : *report.witness) out << ' ' << name << '=' << value.str();
    out << '\n';
  }
  out << "verdict: " << to_string(report.verdict) << '\n';
  return report.verdict == Verdict::Inconclusive ? kExitInconclusive : kExitOk;
}

GradedComplex apply_step(const GradedComplex& cx, const std::string& step) {
  auto colon = step.find(':');
  std::string kind = step.substr(0, colon);
  std::string rest = colon == std::string::npos ? "" : step.substr(colon + 1);
  if (kind == "link") {
    std::vector<std::int64_t> d;
    std::size_t start = 0;
    while (start <= rest.size()) {
      auto comma = rest.find(',', start);
      d.push_back(parse_int(rest.substr(start, comma - start), "complete intersection degree"));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (d.size() != 3) throw ParseError("link step '" + step + "' must be link:d1,d2,d3");
    return link(cx, CIType(static_cast<int>(d[0]), static_cast<int>(d[1]), static_cast<int>(d[2])));
  }
  if (kind == "cancel") {
    auto c1 = rest.find(':');
    auto c2 = c1 == std::string::npos ? std::string::npos : rest.find(':', c1 + 1);
    if (c2 == std::string::npos) throw ParseError("cancel step '" + step + "' must be cancel:POS:TWIST:COUNT");
    Position pos = parse_position(rest.substr(0, c1));
    int twist = static_cast<int>(parse_int(rest.substr(c1 + 1, c2 - c1 - 1), "cancel twist"));
    return cancel_pair(cx, pos, twist, Poly::parse(rest.substr(c2 + 1)));
  }
  throw ParseError("unknown step '" + step + "' (expected link:... or cancel:...)");
}

int cmd_link(const std::string& path, const std::vector<std::string>& steps, const std::string& format,
             std::ostream& out) {
  std::string text = read_text_file(path);
  GradedComplex cx({}, {}, {});
  std::vector<Substitution> constraints;
  if (text.find("\"terms\"") != std::string::npos) {
    cx = parse_complex(text);
  } else {
    ResolutionFile file = parse_resolution(text);
    GorensteinResolution res = file.resolution();
    if (auto curve = file.curve()) {
      constraints = hilbert_constraints(res, *curve, {}, file.constraint_polys());
    }
    cx = as_complex(res);
  }
  if (format != "text" && format != "json") throw InvalidInput("unknown format '" + format + "' (expected text or json)");
  auto describe = [&](const std::string& label, const GradedComplex& c) {
    if (format != "text") return;
    out << label << ": " << c.str() << '\n';
    try {
      DegreeGenus dg = degree_genus(c.apply(constraints));
      out << "  degree " << dg.d.str() << ", genus " << dg.g.str() << '\n';
    } catch (const NotACurveComplex&) {
      out << "  degree and genus undetermined\n";
    }
  };
  describe("input", cx);
  for (const auto& step : steps) {
    cx = apply_step(cx, step);
    describe(step, cx);
  }
  if (format == "json") out << dump_complex(cx);
  return kExitOk;
}

int cmd_reproduce(const std::string& section, const std::string& format, std::ostream& out) {
  ReportFormat fmt = parse_report_format(format);
  if (section == "3") {
    out << render(reproduce_classification(), fmt);
  } else if (section == "5") {
    out << render(reproduce_gates(default_ambient_dim()), fmt);
  } else {
    throw InvalidInput("unknown section '" + section + "' (expected 3 or 5)");
  }
  return kExitOk;
}

std::string diagnostic_kind(const Error& ex) {
  if (dynamic_cast<const ParseError*>(&ex)) return "parse error";
  if (dynamic_cast<const UnknownSymbolError*>(&ex)) return "unknown symbol";
  if (dynamic_cast<const InconsistentConstraints*>(&ex)) return "inconsistent constraints";
  if (dynamic_cast<const NotACurveComplex*>(&ex)) return "not a curve complex";
  if (dynamic_cast<const InsufficientMultiplicity*>(&ex)) return "insufficient multiplicity";
  if (dynamic_cast<const DegenerateTwist*>(&ex)) return "degenerate twist";
  if (dynamic_cast<const SpecialRange*>(&ex)) return "special range";
  return "invalid input";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact bookkeeping for rank-2 ACM bundles on hypersurfaces in P^4", "acmgate"};
  app.require_subcommand(1, 1);

  int degree = 6;
  int r = 6, c1 = 0;
  std::string c2 = "0";
  std::string format = "md";
  std::string link_format = "text";
  std::string file, assign_path, section;
  bool search = false, guard = false;
  std::optional<std::int64_t> ambient;
  std::int64_t fiber_twist = 6;
  std::vector<std::string> domains, steps, pivots;

  auto* classify = app.add_subcommand("classify", "Table of admissible c2 for each normalized c1");
  classify->add_option("--degree", degree, "Degree r of the hypersurface")->required();
  classify->add_option("--format", format, "md or csv");
  classify->add_flag("--search-twists", search, "Choose twists by search instead of the default rule");
  classify->add_flag("--monotonicity-guard", guard, "Reject non-monotone section counts");

  auto* chi = app.add_subcommand("chi", "Euler characteristic of a rank-2 bundle");
  chi->add_option("--r", r, "Degree of the hypersurface")->required();
  chi->add_option("--c1", c1, "First Chern class")->required();
  chi->add_option("--c2", c2, "Second Chern class (integer or expression)")->required();

  auto* km = app.add_subcommand("km", "h0 of the normal bundle from a resolution file");
  km->add_option("file", file, "Resolution JSON")->required();
  km->add_option("--assign", assign_path, "name=integer file");
  km->add_option("--pivots", pivots, "Unknowns to solve for first, comma separated")->delimiter(',');

  auto* gate = app.add_subcommand("gate", "Hilbert flag dimension gate");
  gate->add_option("file", file, "Resolution JSON")->required();
  gate->add_option("--assign", assign_path, "name=integer file");
  gate->add_option("--ambient-dim", ambient, "Dimension of the space of hypersurfaces");
  gate->add_option("--fiber-twist", fiber_twist, "Degree of the hypersurfaces");
  gate->add_option("--domain", domains, "name=lo..hi range for an unknown");
  gate->add_option("--pivots", pivots, "Unknowns to solve for first, comma separated")->delimiter(',');

  auto* linkcmd = app.add_subcommand("link", "Linkage chain on a resolution or complex file");
  linkcmd->add_option("file", file, "Resolution or complex JSON")->required();
  linkcmd->add_option("--step", steps, "link:d1,d2,d3 or cancel:F1F2|F2F3:twist:count, applied in order");
  linkcmd->add_option("--format", link_format, "text or json");

  auto* reproduce = app.add_subcommand("reproduce", "Reproduce the published tables");
  reproduce->add_option("--section", section, "3 or 5")->required();
  reproduce->add_option("--format", format, "md or csv");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& ex) {
    return app.exit(ex, out, err);
  } catch (const CLI::CallForAllHelp& ex) {
    return app.exit(ex, out, err);
  } catch (const CLI::ParseError& ex) {
    app.exit(ex, out, err);
    return kExitInputError;
  }

  try {
    if (*classify) return cmd_classify(degree, format, search, guard, out);
    if (*chi) return cmd_chi(r, c1, c2, out);
    if (*km) return cmd_km(file, assign_path, pivots, out);
    if (*gate) return cmd_gate(file, assign_path, ambient, fiber_twist, domains, pivots, out);
    if (*linkcmd) return cmd_link(file, steps, link_format, out);
    return cmd_reproduce(section, format, out);
  } catch (const Error& ex) {
    err << "error (" << diagnostic_kind(ex) << "): " << ex.what() << '\n';
  } catch (const std::domain_error& ex) {
    err << "error (invalid input): " << ex.what() << '\n';
  } catch (const std::overflow_error& ex) {
    err << "error (invalid input): " << ex.what() << '\n';
  }
  return kExitInputError;
}

}  // namespace acm
