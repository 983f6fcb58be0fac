#include "eqchoose/cli.h"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "eqchoose/colorer.h"
#include "eqchoose/criteria.h"
#include "eqchoose/json_io.h"
#include "eqchoose/oracle.h"

namespace eqchoose {

namespace {

enum class Format { kJson, kTable };

std::string JoinColors(const ColorList& colors) {
  std::ostringstream s;
  s << '{';
  for (std::size_t i = 0; i < colors.size(); ++i) {
    s << (i ? "," : "") << colors[i];
  }
  s << '}';
  return s.str();
}

void PrintAssignmentTable(const KAssignment& a, std::ostream& out) {
  out << "K_{" << a.n() << "," << a.m() << "} k=" << a.k() << "\n";
  for (int i = 0; i < a.n(); ++i) {
    out << "  u" << i + 1 << " " << JoinColors(a.lists_uprime()[i]) << "\n";
  }
  for (int i = 0; i < a.m(); ++i) {
    out << "  v" << i + 1 << " " << JoinColors(a.lists_a()[i]) << "\n";
  }
}

int Decide(std::int64_t n, std::int64_t m, std::int64_t k, Format format,
           std::ostream& out) {
  const ChoosabilityVerdict v = Classify(n, m, k);
  if (format == Format::kJson) {
    Json j = ToJson(v);
    j["n"] = n;
    j["m"] = m;
    j["k"] = k;
    out << j.dump() << "\n";
  } else {
    out << "K_{" << n << "," << m << "} k=" << k << ": " << ToString(v.status)
        << " (" << ToString(v.rule) << ")\n";
  }
  return kExitOk;
}

int PrintSpectrum(std::int64_t n, std::int64_t m, std::optional<std::int64_t> k_max,
                  Format format, std::ostream& out) {
  const SpectrumReport report = Spectrum(n, m, k_max.value_or(n + m));
  if (format == Format::kJson) {
    out << ToJson(report).dump() << "\n";
    return kExitOk;
  }
  out << "K_{" << n << "," << m << "}\n";
  out << std::setw(6) << "k" << "  " << std::left << std::setw(8) << "status"
      << "rule\n" << std::right;
  for (const SpectrumEntry& e : report.entries) {
    out << std::setw(6) << e.k << "  " << std::left << std::setw(8)
        << ToString(e.verdict.status) << ToString(e.verdict.rule) << "\n"
        << std::right;
  }
  return kExitOk;
}

struct ColorRun {
  std::string algorithm;
  std::optional<EquitableColoring> coloring;
  std::vector<TraceStep> trace;
};

ColorRun RunMain(const KAssignment& a) {
  if (HoldsThmMain(a.n(), a.m(), a.k())) {
    ColoringOutcome o = ColorKnmMain(a);
    return {"main", std::move(o.coloring), std::move(o.trace)};
  }
  if (HoldsThmMain(a.m(), a.n(), a.k())) {
    ColoringOutcome o = ColorKnmMain(SwapSides(a));
    return {"main", SwapSides(o.coloring), std::move(o.trace)};
  }
  throw PreconditionError(
      "main construction needs m <= ceil((m+n)/k)*(k-n) in some orientation");
}

ColorRun RunK2m(const KAssignment& a) {
  if (a.n() == 2 && HoldsStarOrK2m(2, a.m(), a.k())) {
    ColoringOutcome o = ColorK2m(a);
    return {"k2m", std::move(o.coloring), std::move(o.trace)};
  }
  if (a.m() == 2 && HoldsStarOrK2m(2, a.n(), a.k())) {
    ColoringOutcome o = ColorK2m(SwapSides(a));
    return {"k2m", SwapSides(o.coloring), std::move(o.trace)};
  }
  throw PreconditionError(
      "K_{2,m} construction needs a side of size 2 and "
      "m <= ceil((m+2)/k)*(k-1)");
}

ColorRun RunOracle(const KAssignment& a) {
  return {"oracle", FindEquitableColoring(a), {}};
}

ColorRun RunAuto(const KAssignment& a) {
  const int n = a.n();
  const int m = a.m();
  const int k = a.k();
  if (k <= 2) return RunOracle(a);
  if ((n == 2 && HoldsStarOrK2m(2, m, k)) ||
      (m == 2 && HoldsStarOrK2m(2, n, k))) {
    return RunK2m(a);
  }
  if (HoldsThmMain(n, m, k) || HoldsThmMain(m, n, k)) return RunMain(a);
  return RunOracle(a);
}

int ColorCommand(const std::string& path, const std::string& algorithm,
                 const std::string& trace_path, Format format,
                 std::ostream& out) {
  const KAssignment a = KAssignmentFromJson(ReadJsonFile(path));
  ColorRun run;
  if (algorithm == "auto") run = RunAuto(a);
  else if (algorithm == "main") run = RunMain(a);
  else if (algorithm == "k2m") run = RunK2m(a);
  else run = RunOracle(a);

  if (!trace_path.empty()) {
    std::ofstream trace(trace_path);
    if (!trace) throw StructuralError("cannot write " + trace_path);
    trace << TraceToJsonLines(run.trace);
  }

  std::optional<CheckResult> check;
  if (run.coloring) check = CheckEquitable(a, *run.coloring);
  const bool ok = check && check->ok();

  if (format == Format::kJson) {
    Json j = {{"algorithm", run.algorithm},
              {"coloring", run.coloring ? ToJson(*run.coloring) : Json(nullptr)},
              {"check", check ? ToJson(*check) : Json(nullptr)}};
    out << j.dump() << "\n";
  } else {
    out << "algorithm: " << run.algorithm << "\n";
    if (!run.coloring) {
      out << "no equitable L-coloring exists\n";
    } else {
      for (std::size_t i = 0; i < run.coloring->colors_uprime.size(); ++i) {
        out << "  u" << i + 1 << " -> " << run.coloring->colors_uprime[i] << "\n";
      }
      for (std::size_t i = 0; i < run.coloring->colors_a.size(); ++i) {
        out << "  v" << i + 1 << " -> " << run.coloring->colors_a[i] << "\n";
      }
      out << "check: " << (ok ? "PASS" : "FAIL") << "\n";
      for (const Violation& v : check->violations) {
        out << "  " << v.Describe() << "\n";
      }
    }
  }
  return ok ? kExitOk : kExitFailed;
}

int Verify(const std::string& assignment_path, const std::string& coloring_path,
           Format format, std::ostream& out) {
  const KAssignment a = KAssignmentFromJson(ReadJsonFile(assignment_path));
  const EquitableColoring c = ColoringFromJson(ReadJsonFile(coloring_path));
  const CheckResult result = CheckEquitable(a, c);
  if (format == Format::kJson) {
    out << ToJson(result).dump() << "\n";
  } else {
    out << (result.ok() ? "PASS" : "FAIL") << "\n";
    for (const Violation& v : result.violations) {
      out << "  " << v.Describe() << "\n";
    }
  }
  return result.ok() ? kExitOk : kExitFailed;
}

int OracleDecide(int n, int m, int k, const OracleOptions& options,
                 Format format, std::ostream& out) {
  const OracleVerdict v = DecideChoosable(n, m, k, options);
  if (format == Format::kJson) {
    out << ToJson(v).dump() << "\n";
  } else {
    out << "K_{" << n << "," << m << "} k=" << k << ": " << ToString(v.status)
        << "\n  assignments examined: " << v.assignments_examined
        << "\n  colorings examined:   " << v.colorings_examined << "\n";
    if (v.witness) {
      out << "witness:\n";
      PrintAssignmentTable(*v.witness, out);
    }
  }
  return kExitOk;
}

int Counterexample(int n, int m, int k, Format format, std::ostream& out) {
  const KAssignment a = BadkCounterexample(n, m, k);
  if (format == Format::kJson) {
    out << ToJson(a).dump() << "\n";
  } else {
    PrintAssignmentTable(a, out);
  }
  return kExitOk;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Equitable list coloring of complete bipartite graphs K_{n,m}",
               "eqchoose"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format_name = "json";
  app.add_option("--format", format_name, "Output mode")
      ->check(CLI::IsMember({"json", "table"}));

  int n = 0, m = 0, k = 0;
  auto add_nmk = [&](CLI::App* sub) {
    sub->add_option("n", n, "Size of the first partite set")
        ->required()->check(CLI::PositiveNumber);
    sub->add_option("m", m, "Size of the second partite set")
        ->required()->check(CLI::PositiveNumber);
  };

  CLI::App* decide = app.add_subcommand("decide", "Classify by the criteria");
  add_nmk(decide);
  decide->add_option("k", k)->required()->check(CLI::PositiveNumber);

  CLI::App* spectrum =
      app.add_subcommand("spectrum", "Verdict for every k in 1..k_max");
  add_nmk(spectrum);
  std::optional<std::int64_t> k_max;
  spectrum->add_option("k_max", k_max, "Defaults to n+m")
      ->check(CLI::PositiveNumber);

  CLI::App* color = app.add_subcommand("color", "Construct a coloring");
  std::string assignment_path;
  std::string algorithm = "auto";
  std::string trace_path;
  color->add_option("assignment", assignment_path)->required();
  color->add_option("--algorithm", algorithm)
      ->check(CLI::IsMember({"auto", "main", "k2m", "oracle"}));
  color->add_option("--trace", trace_path, "Write JSON-lines trace here");

  CLI::App* verify = app.add_subcommand("verify", "Check a coloring");
  std::string coloring_path;
  verify->add_option("assignment", assignment_path)->required();
  verify->add_option("coloring", coloring_path)->required();

  CLI::App* oracle =
      app.add_subcommand("oracle-decide", "Exhaustive choosability decision");
  add_nmk(oracle);
  oracle->add_option("k", k)->required()->check(CLI::PositiveNumber);
  OracleOptions options;
  std::optional<int> universe;
  oracle->add_option("--universe", universe)->check(CLI::PositiveNumber);
  oracle->add_option("--budget", options.budget)->check(CLI::PositiveNumber);
  oracle->add_option("--jobs", options.jobs)->check(CLI::NonNegativeNumber);

  CLI::App* counter = app.add_subcommand(
      "counterexample", "Uniform assignment with no equitable coloring");
  add_nmk(counter);
  counter->add_option("k", k)->required()->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  const Format format = format_name == "table" ? Format::kTable : Format::kJson;
  try {
    if (*decide) return Decide(n, m, k, format, out);
    if (*spectrum) return PrintSpectrum(n, m, k_max, format, out);
    if (*color) return ColorCommand(assignment_path, algorithm, trace_path, format, out);
    if (*verify) return Verify(assignment_path, coloring_path, format, out);
    if (*oracle) {
      options.universe_size = universe;
      return OracleDecide(n, m, k, options, format, out);
    }
    if (*counter) return Counterexample(n, m, k, format, out);
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::invalid_argument& e) {
    // StructuralError and PreconditionError.
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace eqchoose
