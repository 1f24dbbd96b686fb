#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"

#include "dispnet/bounds.hpp"
#include "dispnet/discrepancy.hpp"
#include "dispnet/empty_box.hpp"
#include "dispnet/error.hpp"
#include "dispnet/gf_matrix.hpp"
#include "dispnet/net_construction.hpp"
#include "dispnet/point_set.hpp"
#include "dispnet/proof_enumeration.hpp"
#include "dispnet/svg.hpp"

namespace dispnet::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::uint32_t base = 2;
  std::string m;
  std::string c2;
  std::string family;
  std::uint64_t n = 0;
  std::string in;
  std::string out;
  std::string format;
  std::string algo = "sweep";
  std::string suite;
  std::string kind = "star";
  std::string box = "auto";
  bool normalized = false;
  bool serial = false;
};

std::uint64_t parse_uint(const std::string& s, const char* what) {
  std::uint64_t v = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc{} || ptr != end) throw UsageError(std::string("invalid ") + what + " '" + s + "'");
  return v;
}

std::pair<std::uint32_t, std::uint32_t> parse_range(const std::string& s, std::uint32_t lo, std::uint32_t hi) {
  if (s.empty()) return {lo, hi};
  const auto dots = s.find("..");
  std::uint64_t a = 0, b = 0;
  if (dots == std::string::npos) {
    a = b = parse_uint(s, "--m");
  } else {
    a = parse_uint(s.substr(0, dots), "--m");
    b = parse_uint(s.substr(dots + 2), "--m");
  }
  if (a > b || b > 64) throw UsageError("invalid --m range '" + s + "'");
  return {static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)};
}

std::uint32_t single_m(const Options& o) {
  if (o.m.empty()) throw UsageError("--m is required");
  if (o.m.find("..") != std::string::npos) throw UsageError("--m must be a single value here");
  const auto v = parse_uint(o.m, "--m");
  if (v == 0 || v > 64) throw UsageError("--m out of range");
  return static_cast<std::uint32_t>(v);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void emit(const Options& o, const std::string& text, std::ostream& out) {
  if (o.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(o.out, std::ios::binary);
  if (!file) throw UsageError("cannot write '" + o.out + "'");
  file << text;
}

std::string json_text(const nlohmann::json& j) { return j.dump(2) + "\n"; }

bool want_csv(const Options& o, bool csv_default) {
  if (o.format.empty()) return csv_default;
  return o.format == "csv";
}

GFMatrix parse_c2(const std::string& spec, std::uint32_t base, std::uint32_t m) {
  if (spec.empty() || spec == "identity" || spec == "I") return GFMatrix::identity(base, m);
  if (spec == "U") return GFMatrix::upper_ones(base, m);
  if (spec == "L") return GFMatrix::lower_ones(base, m);
  if (spec.rfind("file:", 0) == 0) {
    GFMatrix c = matrix_from_json(nlohmann::json::parse(read_file(spec.substr(5)), nullptr, true), base);
    if (c.m() != m) throw Error(Errc::dimension_mismatch, "matrix size does not match --m");
    return c;
  }
  throw UsageError("unknown --c2 '" + spec + "' (identity|U|L|file:PATH)");
}

struct Source {
  GridPointSet points;
  NetMeta meta;
};

Source load_source(const Options& o, const std::string& default_family) {
  if (!o.in.empty()) {
    GridPointSet pts = parse_point_set(read_file(o.in));
    NetMeta meta = describe_raw(pts);
    return {std::move(pts), meta};
  }
  std::string family = o.family;
  if (family.empty()) family = o.c2.empty() ? default_family : "digital";
  if (family == "fibonacci") {
    if (o.n == 0) throw UsageError("--n is required for fibonacci");
    return {fibonacci_lattice(o.n), describe_fibonacci(o.n)};
  }
  const std::uint32_t m = single_m(o);
  if (family == "hammersley") return {hammersley(o.base, m), describe_hammersley(o.base, m)};
  if (family == "pu") return {named_net(NamedNet::pu, o.base, m), describe_named(NamedNet::pu, o.base, m)};
  if (family == "pl") return {named_net(NamedNet::pl, o.base, m), describe_named(NamedNet::pl, o.base, m)};
  if (family == "digital") {
    NetSpec spec{GFMatrix::reversal(o.base, m), parse_c2(o.c2, o.base, m)};
    NetMeta meta = describe(spec);
    return {generate_net(spec), meta};
  }
  throw UsageError("unknown --family '" + family + "'");
}

Exec exec_of(const Options& o) { return o.serial ? Exec::serial : Exec::parallel; }

std::string points_csv(const GridPointSet& pts) {
  std::ostringstream s;
  s << "x,y,x_decimal,y_decimal\n";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    s << pts.x(i).str() << ',' << pts.y(i).str() << ',' << pts.x(i).decimal() << ',' << pts.y(i).decimal() << '\n';
  }
  return s.str();
}

void emit_points(const Options& o, const GridPointSet& pts, std::ostream& out) {
  emit(o, want_csv(o, false) ? points_csv(pts) : json_text(to_json(pts)), out);
}

// ---- verify ----

struct VerifyRow {
  std::string set;
  std::uint32_t base = 0;
  std::uint32_t m = 0;
  std::size_t n = 0;
  BoundKind bound{};
  Rational disp;
  Rational value;
  Verdict verdict = Verdict::fail;
  bool tight = false;
};

VerifyRow row_for(std::string set, std::size_t n, const NetMeta& meta, BoundKind kind, const Rational& disp,
                  std::uint64_t arg) {
  VerifyRow r{std::move(set), meta.base, meta.m, n, kind, disp, closed_form(kind, meta.base, arg)};
  switch (relation_of(kind)) {
    case Relation::lower: r.verdict = disp >= r.value ? Verdict::pass : Verdict::fail; break;
    case Relation::upper: r.verdict = disp <= r.value ? Verdict::pass : Verdict::fail; break;
    case Relation::exact: r.verdict = disp == r.value ? Verdict::pass : Verdict::fail; break;
  }
  r.tight = disp == r.value;
  return r;
}

std::string rows_csv(const std::vector<VerifyRow>& rows) {
  std::ostringstream s;
  s << "set,base,m,n,bound,relation,disp,disp_decimal,value,value_decimal,tight,verdict\n";
  for (const auto& r : rows) {
    s << r.set << ',' << r.base << ',' << r.m << ',' << r.n << ',' << bound_name(r.bound) << ','
      << relation_name(relation_of(r.bound)) << ',' << r.disp.str() << ',' << r.disp.decimal() << ',' << r.value.str()
      << ',' << r.value.decimal() << ',' << (r.tight ? "equal" : "strict") << ',' << verdict_name(r.verdict) << '\n';
  }
  return s.str();
}

nlohmann::json rows_json(const std::vector<VerifyRow>& rows, bool all_pass) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : rows) {
    arr.push_back({{"set", r.set},
                   {"base", r.base},
                   {"m", r.m},
                   {"n", r.n},
                   {"bound", bound_name(r.bound)},
                   {"relation", relation_name(relation_of(r.bound))},
                   {"disp", r.disp.str()},
                   {"value", r.value.str()},
                   {"tight", r.tight},
                   {"verdict", verdict_name(r.verdict)}});
  }
  return {{"all_pass", all_pass}, {"rows", std::move(arr)}};
}

std::string set_label(const char* family, std::uint32_t base, std::uint32_t m) {
  return std::string(family) + "(" + std::to_string(base) + "," + std::to_string(m) + ")";
}

void append_checks(std::vector<VerifyRow>& rows, const std::string& label, const GridPointSet& pts,
                   const NetMeta& meta, Exec exec) {
  const ConformanceReport rep = check_bounds(pts, meta, exec);
  for (const auto& c : rep.checks) {
    if (c.verdict == Verdict::skipped) continue;
    rows.push_back({label, meta.base, meta.m, pts.size(), c.kind, rep.dispersion, *c.value, c.verdict, c.tight});
  }
}

std::vector<VerifyRow> run_suite(const Options& o) {
  const Exec exec = exec_of(o);
  std::vector<VerifyRow> rows;
  const std::string& s = o.suite;
  if (s == "hammersley") {
    const auto [lo, hi] = parse_range(o.m, 1, 10);
    for (auto m = std::max(lo, 1U); m <= hi; ++m) {
      const auto pts = hammersley(2, m);
      const auto meta = describe_hammersley(2, m);
      rows.push_back(row_for(set_label("hammersley", 2, m), pts.size(), meta, BoundKind::thm4_hammersley_exact,
                             largest_empty_box(pts, exec).area, m));
    }
  } else if (s == "pu" || s == "pl") {
    const auto [lo, hi] = parse_range(o.m, 4, 12);
    const NamedNet kind = s == "pu" ? NamedNet::pu : NamedNet::pl;
    const BoundKind bound = s == "pu" ? BoundKind::thm6_pu_exact : BoundKind::thm7_pl_lower;
    for (auto m = std::max(lo, 4U); m <= hi; ++m) {
      const auto pts = named_net(kind, 2, m);
      rows.push_back(row_for(set_label(s.c_str(), 2, m), pts.size(), describe_named(kind, 2, m), bound,
                             largest_empty_box(pts, exec).area, m));
    }
  } else if (s == "badic") {
    const auto [lo, hi] = parse_range(o.m, 2, 5);
    std::vector<std::uint32_t> bases = {3, 5, 7};
    if (o.base != 2) bases = {o.base};
    for (auto b : bases) {
      for (auto m = std::max(lo, 2U); m <= hi; ++m) {
        const auto pts = hammersley(b, m);
        const auto meta = describe_hammersley(b, m);
        const Rational disp = largest_empty_box(pts, exec).area;
        const auto label = set_label("hammersley", b, m);
        for (auto kind : {BoundKind::thm5_badic_hammersley_lower, BoundKind::thm2_nut_upper, BoundKind::prop1_upper}) {
          rows.push_back(row_for(label, pts.size(), meta, kind, disp, m));
        }
      }
    }
  } else if (s == "nut-exhaustive") {
    const EnumerationSummary sum = enumerate_theorem3(exec);
    NetMeta meta;
    meta.base = 2;
    meta.m = kNutM;
    for (const auto& c : sum.cases) {
      VerifyRow r = row_for("nut:" + c.coeffs.str(), 32, meta, BoundKind::thm3_dyadic_nut_lower, c.dispersion, kNutM);
      if (!c.ok()) r.verdict = Verdict::fail;
      rows.push_back(std::move(r));
    }
  } else if (s == "fibonacci") {
    // --m selects the Fibonacci index k, N = F_k
    const auto [lo, hi] = parse_range(o.m, 7, 13);
    for (auto k = std::max(lo, 3U); k <= hi; ++k) {
      const std::uint64_t n = fibonacci_number(k);
      const auto pts = fibonacci_lattice(n);
      const auto meta = describe_fibonacci(n);
      rows.push_back(row_for("fibonacci(" + std::to_string(n) + ")", n, meta, BoundKind::fibonacci_exact,
                             largest_empty_box(pts, exec).area, n));
    }
  } else if (s == "bounds-all") {
    const auto [lo, hi] = parse_range(o.m, 1, 8);
    for (auto m = std::max(lo, 1U); m <= hi; ++m) {
      append_checks(rows, set_label("hammersley", o.base, m), hammersley(o.base, m), describe_hammersley(o.base, m),
                    exec);
      if (o.base == 2) {
        append_checks(rows, set_label("pu", 2, m), named_net(NamedNet::pu, 2, m), describe_named(NamedNet::pu, 2, m),
                      exec);
        append_checks(rows, set_label("pl", 2, m), named_net(NamedNet::pl, 2, m), describe_named(NamedNet::pl, 2, m),
                      exec);
      }
    }
  } else {
    throw UsageError("unknown --suite '" + s + "'");
  }
  return rows;
}

// ---- subcommands ----

int cmd_verify(const Options& o, std::ostream& out) {
  const auto rows = run_suite(o);
  const bool all_pass =
      std::all_of(rows.begin(), rows.end(), [](const VerifyRow& r) { return r.verdict == Verdict::pass; });
  emit(o, want_csv(o, true) ? rows_csv(rows) : json_text(rows_json(rows, all_pass)), out);
  return all_pass ? kExitOk : kExitVerifyFailed;
}

int cmd_disp(const Options& o, std::ostream& out) {
  const Source src = load_source(o, "hammersley");
  const DispersionResult r = compute_dispersion(src.points, parse_algorithm(o.algo), exec_of(o));
  if (want_csv(o, false)) {
    std::ostringstream s;
    s << "n,algorithm,dispersion,dispersion_decimal,x_lo,x_hi,y_lo,y_hi\n"
      << src.points.size() << ',' << algorithm_name(r.algorithm) << ',' << r.area.str() << ',' << r.area.decimal()
      << ',' << r.witness.x_lo.str() << ',' << r.witness.x_hi.str() << ',' << r.witness.y_lo.str() << ','
      << r.witness.y_hi.str() << '\n';
    emit(o, s.str(), out);
  } else {
    emit(o,
         json_text({{"n", src.points.size()},
                    {"algorithm", algorithm_name(r.algorithm)},
                    {"dispersion", r.area.str()},
                    {"witness", to_json(r.witness)}}),
         out);
  }
  return kExitOk;
}

int cmd_discrepancy(const Options& o, std::ostream& out) {
  const Source src = load_source(o, "hammersley");
  DiscrepancyReport r = compute_discrepancy(src.points, parse_discrepancy_kind(o.kind), exec_of(o));
  if (o.normalized) {
    const Rational n(static_cast<std::int64_t>(src.points.size()));
    r.value = r.value / (r.kind == DiscrepancyKind::l2_squared ? n * n : n);
  }
  if (want_csv(o, false)) {
    std::ostringstream s;
    s << "kind,n,normalized,value,value_decimal\n"
      << discrepancy_kind_name(r.kind) << ',' << src.points.size() << ',' << (o.normalized ? "true" : "false") << ','
      << r.value.str() << ',' << r.value.decimal() << '\n';
    emit(o, s.str(), out);
  } else {
    nlohmann::json j = to_json(r);
    j["n"] = src.points.size();
    j["normalized"] = o.normalized;
    emit(o, json_text(j), out);
  }
  return kExitOk;
}

std::optional<BoxReport> parse_box(const std::string& spec, const GridPointSet& pts, Exec exec) {
  if (spec == "none") return std::nullopt;
  if (spec == "auto") return largest_empty_box(pts, exec).witness;
  std::vector<Rational> v;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) v.push_back(Rational::parse(item));
  if (v.size() != 4) throw UsageError("--box expects auto, none or x_lo,x_hi,y_lo,y_hi");
  return BoxReport::make(v[0], v[1], v[2], v[3]);
}

int cmd_svg(const Options& o, std::ostream& out) {
  const Source src = load_source(o, "hammersley");
  emit(o, render_svg(src.points, parse_box(o.box, src.points, exec_of(o))), out);
  return kExitOk;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  const EnumerationSummary s = enumerate_theorem3(exec_of(o));
  emit(o, want_csv(o, true) ? to_csv(s) : json_text(to_json(s)), out);
  return s.all_ok() ? kExitOk : kExitVerifyFailed;
}

void add_format(CLI::App* sub, Options& o) {
  sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  sub->add_option("--out", o.out, "Output path (default stdout)");
}

void add_source(CLI::App* sub, Options& o) {
  sub->add_option("--in", o.in, "Point-set JSON file");
  sub->add_option("--family", o.family, "Generated set when --in is absent")
      ->check(CLI::IsMember({"hammersley", "pu", "pl", "digital", "fibonacci"}));
  sub->add_option("--base", o.base, "Base b")->check(CLI::Range(2U, 1U << 20));
  sub->add_option("--m", o.m, "Exponent m");
  sub->add_option("--c2", o.c2, "Second generator matrix: identity|U|L|file:PATH");
  sub->add_option("--n", o.n, "Fibonacci lattice size");
  sub->add_flag("--serial", o.serial, "Use the serial reference kernels");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact dispersion and discrepancy of planar digital nets", "dispnet"};
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("gen", "Generate the digital net (J_m, C2)");
  gen->add_option("--base", o.base, "Prime base")->check(CLI::Range(2U, 1U << 20));
  gen->add_option("--m", o.m, "Exponent m")->required();
  gen->add_option("--c2", o.c2, "identity|U|L|file:PATH");
  add_format(gen, o);

  auto* ham = app.add_subcommand("hammersley", "Generate the Hammersley point set");
  ham->add_option("--base", o.base, "Base b")->check(CLI::Range(2U, 1U << 20));
  ham->add_option("--m", o.m, "Exponent m")->required();
  add_format(ham, o);

  auto* fib = app.add_subcommand("fibonacci", "Generate a Fibonacci lattice");
  fib->add_option("--n", o.n, "Number of points, a Fibonacci number")->required();
  add_format(fib, o);

  auto* disp = app.add_subcommand("disp", "Exact dispersion with witness box");
  add_source(disp, o);
  disp->add_option("--algo", o.algo, "sweep|brute|column")->check(CLI::IsMember({"sweep", "brute", "column"}));
  add_format(disp, o);

  auto* verify = app.add_subcommand("verify", "Check dispersion against the bound catalog");
  verify->add_option("--suite", o.suite, "hammersley|pu|pl|badic|nut-exhaustive|fibonacci|bounds-all")->required();
  verify->add_option("--m", o.m, "m or a..b (Fibonacci index for --suite fibonacci)");
  verify->add_option("--base", o.base, "Base for badic and bounds-all")->check(CLI::Range(2U, 1U << 20));
  verify->add_flag("--serial", o.serial, "Use the serial reference kernels");
  add_format(verify, o);

  auto* enumerate = app.add_subcommand("enumerate-theorem3", "All 1024 dyadic NUT coefficient cases at m = 5");
  enumerate->add_flag("--serial", o.serial, "Use the serial reference kernels");
  add_format(enumerate, o);

  auto* disc = app.add_subcommand("discrepancy", "Exact star, L2 or extreme discrepancy");
  add_source(disc, o);
  disc->add_option("--kind", o.kind, "star|l2|extreme")->check(CLI::IsMember({"star", "l2", "extreme"}));
  disc->add_flag("--normalized", o.normalized, "Divide by N (by N^2 for l2)");
  add_format(disc, o);

  auto* svg = app.add_subcommand("svg", "Render points and a box as SVG");
  add_source(svg, o);
  svg->add_option("--box", o.box, "auto|none|x_lo,x_hi,y_lo,y_hi");
  svg->add_option("--out", o.out, "Output path (default stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (gen->parsed()) {
      const std::uint32_t m = single_m(o);
      emit_points(o, generate_net({GFMatrix::reversal(o.base, m), parse_c2(o.c2, o.base, m)}), out);
      return kExitOk;
    }
    if (ham->parsed()) {
      emit_points(o, hammersley(o.base, single_m(o)), out);
      return kExitOk;
    }
    if (fib->parsed()) {
      emit_points(o, fibonacci_lattice(o.n), out);
      return kExitOk;
    }
    if (disp->parsed()) return cmd_disp(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (enumerate->parsed()) return cmd_enumerate(o, out);
    if (disc->parsed()) return cmd_discrepancy(o, out);
    if (svg->parsed()) return cmd_svg(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    err << "error: ParseError: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace dispnet::cli
