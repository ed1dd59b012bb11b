#include "cli/commands.hpp"

#include <chrono>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "cli/report.hpp"

namespace nagell::cli {
namespace {

struct GlobalOptions {
  std::string format = "json";
  unsigned jobs = 1;
  long fallback_horizon = 1000;
  std::string output;

  bool tsv() const { return format == "tsv"; }
  SolveOptions solve_options() const { return SolveOptions{fallback_horizon, jobs}; }
};

struct Output {
  int exit_code = kSuccess;
  json doc;
  std::string tsv;
  std::string err;
};

json header(const char* kind, const std::vector<std::string>& args) {
  return {{"schema_version", kSchemaVersion}, {"kind", kind}, {"command", args}};
}

std::string solutions_tsv(const std::string& label, const SolveReport& report) {
  std::ostringstream os;
  os << "# " << label << (label.empty() ? "" : ": ") << report.spec.display()
     << "  complete=" << (report.complete ? "true" : "false") << '\n';
  os << "N\tx\tn\tm\n";
  for (const auto& s : report.solutions) {
    os << s.exponent << '\t' << to_decimal(s.x);
    if (s.triangular) os << '\t' << s.triangular->n << '\t' << to_decimal(s.triangular->m);
    else os << "\t\t";
    os << '\n';
  }
  return os.str();
}

std::string describe(const std::vector<std::pair<Integer, long>>& points) {
  std::string out = "{";
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (i) out += ", ";
    out += "(" + to_decimal(points[i].first) + "," + std::to_string(points[i].second) + ")";
  }
  return out + "}";
}

Output theorem1(const GlobalOptions& opts, const std::vector<std::string>& args) {
  Output o;
  o.doc = header("theorem1", args);
  o.doc["reports"] = json::array();
  bool match = true;
  for (int sign : {1, -1}) {
    auto [spec, map] = triangular_transform(sign, 1);
    SolveReport report = solve(spec, opts.solve_options());
    attach_triangular(report, map);

    // (m, n) pairs so describe() prints them like the other commands.
    const std::vector<std::pair<Integer, long>> expected =
        sign > 0 ? std::vector<std::pair<Integer, long>>{{2, 1}, {3, 2}}
                 : std::vector<std::pair<Integer, long>>{{1, 1}};
    std::vector<std::pair<Integer, long>> got;
    for (const auto& s : report.solutions) got.emplace_back(s.triangular->m, s.triangular->n);
    const bool ok = report.complete && got == expected;
    match = match && ok;

    const std::string label = sign > 0 ? "plus" : "minus";
    json r = to_json(report);
    r["label"] = label;
    r["expected"] = json::array();
    for (const auto& [m, n] : expected) r["expected"].push_back({{"n", n}, {"m", to_decimal(m)}});
    r["match"] = ok;
    o.doc["reports"].push_back(std::move(r));
    o.tsv += solutions_tsv(label, report);
    if (!ok) {
      o.err += label + ": expected (m,n) " + describe(expected) + ", got " + describe(got) +
               (report.complete ? "" : " (incomplete)") + "\n";
    }
  }
  o.doc["match"] = match;
  o.exit_code = match ? kSuccess : kMismatch;
  return o;
}

Output theorem2(const GlobalOptions& opts, const std::vector<std::string>& args) {
  Output o;
  o.doc = header("theorem2", args);
  o.doc["reports"] = json::array();
  bool match = true;
  for (int sign : {1, -1}) {
    const EquationSpec spec(3, IntPoly{0, sign, 0, sign}, 1);
    const SolveReport report = solve(spec, opts.solve_options());

    const std::vector<std::pair<Integer, long>> expected =
        sign > 0 ? std::vector<std::pair<Integer, long>>{}
                 : std::vector<std::pair<Integer, long>>{{1, 1}};
    std::vector<std::pair<Integer, long>> got;
    for (const auto& s : report.solutions) got.emplace_back(s.x, s.exponent);
    const bool ok = report.complete && got == expected;
    match = match && ok;

    const std::string label = sign > 0 ? "plus" : "minus";
    json r = to_json(report);
    r["label"] = label;
    r["expected"] = json::array();
    for (const auto& [x, n] : expected) r["expected"].push_back({{"x", to_decimal(x)}, {"N", n}});
    r["match"] = ok;

    // Every value tested on the odd-exponent branch.
    const SubcaseReport& odd = report.subcases.at(1);
    json transcript = json::array();
    for (const auto& v : scan_values(odd.subcase, odd.scanned.t_lo, odd.scanned.t_hi)) {
      transcript.push_back({{"t", v.t},
                            {"N", odd.subcase.exponent(v.t)},
                            {"value", to_decimal(v.value)},
                            {"is_square", v.is_square}});
    }
    r["odd_scan_transcript"] = std::move(transcript);
    o.doc["reports"].push_back(std::move(r));
    o.tsv += solutions_tsv(label, report);
    if (!ok) {
      o.err += label + ": expected (x,N) " + describe(expected) + ", got " + describe(got) +
               (report.complete ? "" : " (incomplete)") + "\n";
    }
  }
  o.doc["match"] = match;
  o.exit_code = match ? kSuccess : kMismatch;
  return o;
}

Output solve_command(const GlobalOptions& opts, const std::vector<std::string>& args,
                     unsigned long base, const std::string& poly, long n_min, bool accept_bounded) {
  Output o;
  const EquationSpec spec(base, IntPoly::parse(poly), n_min);
  const SolveReport report = solve(spec, opts.solve_options());
  o.doc = header("solve", args);
  json r = to_json(report);
  r["label"] = "";
  o.doc["reports"] = json::array({std::move(r)});
  o.tsv = solutions_tsv("", report);
  if (!report.complete) {
    for (const auto& sub : report.subcases) {
      if (sub.certificate) continue;
      o.err += "parity " + std::to_string(sub.subcase.parity) + ": " + sub.diagnostic + "\n";
    }
    o.err += "solutions are only exhaustive up to N = " + std::to_string(opts.fallback_horizon) +
             "; pass --oracle to accept the bounded scan, or use the oracle command\n";
    if (!accept_bounded) o.exit_code = kUnsupported;
  }
  return o;
}

Output oracle_command(const std::vector<std::string>& args, unsigned long base,
                      const std::string& poly, long n_min, long n_max) {
  Output o;
  const EquationSpec spec(base, IntPoly::parse(poly), n_min);
  const auto solutions = brute_oracle(spec, n_max);
  o.doc = header("oracle", args);
  o.doc["equation"] = to_json(spec);
  o.doc["n_max"] = n_max;
  o.doc["solutions"] = json::array();
  std::ostringstream tsv;
  tsv << "# " << spec.display() << "  N <= " << n_max << "\nN\tx\n";
  for (const auto& s : solutions) {
    o.doc["solutions"].push_back(to_json(s));
    tsv << s.exponent << '\t' << to_decimal(s.x) << '\n';
  }
  o.tsv = tsv.str();
  return o;
}

std::vector<Candidate> parse_choices(const std::string& text) {
  std::vector<Candidate> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("choice '" + item + "' is not x:c");
    out.push_back(Candidate{parse_integer(item.substr(0, colon)), parse_integer(item.substr(colon + 1))});
  }
  return out;
}

std::string construction_tsv(const ConstructionState& state) {
  std::ostringstream os;
  os << "# D(n) = " << state.falling_factorial_form() << '\n';
  os << "# coefficients:";
  for (const auto& c : state.coefficients) os << ' ' << to_decimal(c);
  os << "\nx\tn\n";
  for (const auto& s : state.solutions) os << to_decimal(s.x) << '\t' << s.n << '\n';
  return os.str();
}

Output construct_command(const std::vector<std::string>& args, int steps, const std::string& choices) {
  Output o;
  o.doc = header("construct", args);
  const std::vector<Candidate> explicit_choices = parse_choices(choices);
  if (steps < 0) steps = static_cast<int>(explicit_choices.size());
  const ChoicePolicy policy = explicit_choices.empty() ? ChoicePolicy::SmallestX : ChoicePolicy::Explicit;
  o.doc["policy"] = policy == ChoicePolicy::Explicit ? "explicit" : "smallest_x";
  try {
    const ConstructionState state = build_family(steps, policy, explicit_choices);
    o.doc.update(to_json(state));
    o.tsv = construction_tsv(state);
  } catch (const NoResidueSolution& e) {
    o.doc.update(to_json(e.partial()));
    o.doc["error"] = e.what();
    o.tsv = construction_tsv(e.partial());
    o.err = std::string("NoResidueSolution: ") + e.what() + "\n";
    o.exit_code = kUnsupported;
  } catch (const ConstructionVerificationFailed& e) {
    // Only explicit choices can get here; the smallest-x policy draws from
    // the proposed candidates.
    throw std::invalid_argument(e.what());
  }
  return o;
}

Output table_command(const std::vector<std::string>& args, int which) {
  Output o;
  o.doc = header("table", args);
  o.doc["table"] = which;
  o.doc["rows"] = json::array();
  std::ostringstream tsv;
  if (which == 1) {
    tsv << "y\tlambda\n";
    for (const auto& e : lambda_table()) {
      o.doc["rows"].push_back({{"y", e.base}, {"lambda_num", e.num}, {"lambda_den", e.den}});
      tsv << e.base << '\t' << e.num / e.den << '.' << (e.num % e.den < 10 ? "0" : "")
          << e.num % e.den << '\n';
    }
  } else {
    const SubCase sc = make_subcase(EquationSpec(3, IntPoly{0, 1, 0, 1}, 1), 1);
    tsv << "t\t3^{2t+1}+(2t+1)^3+2t+1\n";
    for (const auto& v : scan_values(sc, 1, 29)) {
      o.doc["rows"].push_back({{"t", v.t}, {"value", to_decimal(v.value)}, {"is_square", v.is_square}});
      tsv << v.t << '\t' << to_decimal(v.value) << '\n';
    }
  }
  o.tsv = tsv.str();
  return o;
}

}  // namespace

CommandResult run(const std::vector<std::string>& args) {
  CLI::App app{"Exact solver for x^2 = y^N + G(N) with bound certificates", "nagell"};
  app.require_subcommand(1);

  GlobalOptions opts;
  app.add_option("--format", opts.format, "json or tsv")->check(CLI::IsMember({"json", "tsv"}));
  app.add_option("--jobs", opts.jobs, "worker threads for finite scans")->check(CLI::PositiveNumber);
  app.add_option("--fallback-horizon", opts.fallback_horizon,
                 "largest exponent scanned when no certificate exists")
      ->check(CLI::NonNegativeNumber);
  app.add_option("-o,--output", opts.output, "write the report here instead of stdout");

  auto* theorem1_cmd = app.add_subcommand("theorem1", "2^n +- n = m(m+1)/2: solve both signs");
  auto* theorem2_cmd = app.add_subcommand("theorem2", "x^2 = 3^n +- (n^3 + n): solve both signs");

  unsigned long base = 2;
  std::string poly;
  long n_min = 0;
  bool accept_bounded = false;
  auto* solve_cmd = app.add_subcommand("solve", "certify and solve x^2 = y^N + G(N)");
  solve_cmd->add_option("--base", base, "y >= 2")->required()->check(CLI::Range(2UL, 1UL << 31));
  solve_cmd->add_option("--poly", poly, "coefficients of G, constant first: \"-23,8\"")->required();
  solve_cmd->add_option("--nmin", n_min, "least exponent N")->check(CLI::NonNegativeNumber);
  solve_cmd->add_flag("--oracle", accept_bounded, "accept a bounded scan when no certificate exists");

  long n_max = 0;
  auto* oracle_cmd = app.add_subcommand("oracle", "brute-force scan of N in [nmin, nmax]");
  oracle_cmd->add_option("--base", base, "y >= 2")->required()->check(CLI::Range(2UL, 1UL << 31));
  oracle_cmd->add_option("--poly", poly, "coefficients of G, constant first")->required();
  oracle_cmd->add_option("--nmin", n_min, "least exponent N")->check(CLI::NonNegativeNumber);
  oracle_cmd->add_option("--nmax", n_max, "largest exponent N")->required()->check(CLI::NonNegativeNumber);

  int steps = -1;
  std::string choices;
  auto* construct_cmd = app.add_subcommand("construct", "build D(n) with many solutions of x^2 + D(n) = 2^n");
  construct_cmd->add_option("--steps", steps, "extension steps beyond the seed")->check(CLI::NonNegativeNumber);
  construct_cmd->add_option("--choices", choices, "explicit x:c per step, e.g. \"3:8,1:-3\"");

  int which = 2;
  auto* table_cmd = app.add_subcommand("table", "regenerate a reference table");
  table_cmd->add_option("--which", which, "1: measure table, 2: odd-branch values for 3^n + n^3 + n")
      ->check(CLI::IsMember({1, 2}));

  for (auto* sub : {theorem1_cmd, theorem2_cmd, solve_cmd, oracle_cmd, construct_cmd, table_cmd}) {
    sub->fallthrough();
  }

  CommandResult result;
  std::ostringstream out;
  std::ostringstream err;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    result.exit_code = code == 0 ? kSuccess : kUsage;
    result.out = out.str();
    result.err = err.str();
    return result;
  }
  if (*construct_cmd && steps < 0 && choices.empty()) {
    result.exit_code = kUsage;
    result.err = "construct: give --steps, --choices, or both\n";
    return result;
  }

  const auto start = std::chrono::steady_clock::now();
  Output o;
  try {
    if (*theorem1_cmd) o = theorem1(opts, args);
    else if (*theorem2_cmd) o = theorem2(opts, args);
    else if (*solve_cmd) o = solve_command(opts, args, base, poly, n_min, accept_bounded);
    else if (*oracle_cmd) o = oracle_command(args, base, poly, n_min, n_max);
    else if (*construct_cmd) o = construct_command(args, steps, choices);
    else o = table_command(args, which);
  } catch (const std::invalid_argument& e) {
    result.exit_code = kUsage;
    result.err = std::string("error: ") + e.what() + "\n";
    return result;
  }
  const std::chrono::duration<double, std::milli> elapsed = std::chrono::steady_clock::now() - start;
  o.doc["timing"] = {{"elapsed_ms", elapsed.count()}};

  const std::string text = opts.tsv() ? o.tsv : o.doc.dump(2) + "\n";
  if (opts.output.empty()) {
    result.out = text;
  } else {
    std::ofstream file(opts.output);
    file << text;
    if (!file) {
      result.exit_code = kUsage;
      result.err = "cannot write " + opts.output + "\n";
      return result;
    }
  }
  result.exit_code = o.exit_code;
  result.err = o.err;
  return result;
}

}  // namespace nagell::cli
