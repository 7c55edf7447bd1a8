// metrotrade: parameter sweeps, figure data and verification runs for the
// precision/accuracy trade-off toolkit.
//
// Exit codes: 0 success, 1 usage error, 2 domain/precondition error,
// 3 verification failure.

#include <charconv>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "CLI11.hpp"
#include "metrotrade/commands.hpp"
#include "metrotrade/errors.hpp"
#include "metrotrade/numeric.hpp"
#include "metrotrade/verify/checks.hpp"

namespace {

using namespace metrotrade;

constexpr int kExitUsage = 1;
constexpr int kExitDomain = 2;
constexpr int kExitVerification = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::optional<double> parse_number(std::string_view s) {
  s = trim(s);
  double v = 0.0;
  const auto r = std::from_chars(s.data(), s.data() + s.size(), v);
  if (r.ec != std::errc() || r.ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

// Accepts a plain decimal or [a*]pi[/b], e.g. "0.3", "pi/10", "2*pi/3".
double parse_real(std::string_view text, std::string_view flag) {
  const auto s = trim(text);
  if (auto v = parse_number(s)) return *v;
  const auto pi_pos = s.find("pi");
  if (pi_pos != std::string_view::npos) {
    double scale = 1.0;
    double divisor = 1.0;
    std::string_view head = s.substr(0, pi_pos);
    std::string_view tail = s.substr(pi_pos + 2);
    bool ok = true;
    if (!head.empty()) {
      if (head.back() == '*') head.remove_suffix(1);
      const auto v = parse_number(head);
      ok = ok && v.has_value();
      if (v) scale = *v;
    }
    if (!tail.empty()) {
      if (tail.front() != '/') {
        ok = false;
      } else {
        const auto v = parse_number(tail.substr(1));
        ok = ok && v.has_value() && *v != 0.0;
        if (v) divisor = *v;
      }
    }
    if (ok) return scale * kPi / divisor;
  }
  throw UsageError("invalid value for " + std::string(flag) + ": '" +
                   std::string(text) + "'");
}

std::uint64_t parse_count(std::string_view text, std::string_view flag) {
  const auto s = trim(text);
  std::uint64_t v = 0;
  const auto r = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || r.ec != std::errc() || r.ptr != s.data() + s.size()) {
    throw UsageError("invalid integer for " + std::string(flag) + ": '" +
                     std::string(text) + "'");
  }
  return v;
}

std::vector<std::string_view> split_list(std::string_view text,
                                         std::string_view flag) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    const auto part = trim(text.substr(start, comma - start));
    if (part.empty()) {
      throw UsageError("invalid list for " + std::string(flag) + ": '" +
                       std::string(text) + "'");
    }
    parts.push_back(part);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return parts;
}

std::vector<std::uint64_t> parse_count_list(std::string_view text,
                                            std::string_view flag) {
  std::vector<std::uint64_t> out;
  for (auto part : split_list(text, flag)) out.push_back(parse_count(part, flag));
  return out;
}

std::vector<double> parse_real_list(std::string_view text, std::string_view flag) {
  std::vector<double> out;
  for (auto part : split_list(text, flag)) out.push_back(parse_real(part, flag));
  return out;
}

struct Flags {
  std::string n;
  std::string alpha;
  std::string phi0;
  std::string phi;
  std::string m_grid = "2,4,8,16,32";
  std::string big_n = "100";
  std::string k = "2";
  std::string trials = "100000";
  std::string seed = std::to_string(verify::kDefaultSeed);
  std::string grid;
  std::string out;
  std::string format = "csv";
  std::string strategies = "ensemble,product,ghz,nonlinear";
  std::string side = "two-sided";
  std::vector<std::string> corrupt;
};

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot open output file '" + path + "'");
  file << content;
}

std::string svg_path_for(const std::string& path) {
  std::filesystem::path p(path);
  p.replace_extension(".svg");
  return p.string();
}

void emit(const Flags& flags, const Table& table,
          const std::vector<ChartPanel>& charts) {
  if (flags.format == "csv") {
    write_output(flags.out, table.to_csv());
  } else if (flags.format == "svg") {
    write_output(flags.out, render_svg(table, charts));
  } else {
    if (flags.out.empty()) {
      throw UsageError("--format both needs --out PATH");
    }
    const auto svg_path = svg_path_for(flags.out);
    if (svg_path == flags.out) {
      throw UsageError("--format both needs an --out path not ending in .svg");
    }
    write_output(flags.out, table.to_csv());
    write_output(svg_path, render_svg(table, charts));
  }
}

void require_csv(const Flags& flags, std::string_view command) {
  if (flags.format != "csv") {
    throw UsageError(std::string(command) + " only supports --format csv");
  }
}

PhaseSide parse_side(std::string_view side) {
  if (side == "below") return PhaseSide::Below;
  if (side == "above") return PhaseSide::Above;
  if (side == "two-sided") return PhaseSide::TwoSided;
  throw UsageError("--side must be one of below, above, two-sided");
}

int run_tradeoff(const Flags& f) {
  const auto n_values = parse_count_list(f.n.empty() ? "1,10,100,1000,10000" : f.n, "--n");
  const auto alphas = parse_real_list(f.alpha.empty() ? "0.5,1,2" : f.alpha, "--alpha");
  emit(f, cmd_tradeoff(n_values, alphas), tradeoff_charts());
  return 0;
}

int run_inherent(const Flags& f) {
  const auto n = parse_count(f.n.empty() ? "100" : f.n, "--n");
  const auto grid = parse_count(f.grid.empty() ? "10000" : f.grid, "--grid");
  if (!f.phi0.empty()) {
    // Single-point query.
    const auto r = inherent_precision(parse_real(f.phi0, "--phi0"), n,
                                      parse_side(f.side));
    Table table({"phi0", "resolution", "accuracy", "status"});
    table.row().add(parse_real(f.phi0, "--phi0")).add(1.0 / r.delta_phi).add(r.accuracy).add("ok");
    emit(f, table, inherent_charts());
    return 0;
  }
  emit(f, cmd_inherent(n, static_cast<int>(grid), parse_side(f.side)),
       inherent_charts());
  return 0;
}

int run_basis_sweep(const Flags& f) {
  const double phi = parse_real(f.phi.empty() ? "pi/10" : f.phi, "--phi");
  const auto n = parse_count(f.n.empty() ? "1" : f.n, "--n");
  const auto grid = static_cast<int>(parse_count(f.grid.empty() ? "200" : f.grid, "--grid"));
  const auto table = cmd_basis_sweep(phi, n, grid);
  emit(f, table, basis_sweep_charts(table, grid));
  return 0;
}

int run_resources(const Flags& f) {
  std::vector<Strategy> strategies;
  for (auto name : split_list(f.strategies, "--strategies")) {
    try {
      strategies.push_back(parse_strategy(name));
    } catch (const DomainError& e) {
      throw UsageError(e.what());
    }
  }
  const auto m_grid = parse_count_list(f.m_grid, "--m-grid");
  const auto big_n = parse_count(f.big_n, "--big-n");
  const double alpha = parse_real(f.alpha.empty() ? "1" : f.alpha, "--alpha");
  const double k = parse_real(f.k, "--k");
  emit(f, cmd_resources(strategies, m_grid, big_n, alpha, k), resources_charts());
  return 0;
}

int run_bias_mc(const Flags& f) {
  require_csv(f, "bias-mc");
  const double phi = parse_real(f.phi.empty() ? "pi/4" : f.phi, "--phi");
  const auto n = parse_count(f.n.empty() ? "10" : f.n, "--n");
  const auto trials = parse_count(f.trials, "--trials");
  const auto seed = parse_count(f.seed, "--seed");
  write_output(f.out, cmd_bias_mc(phi, n, trials, seed).to_csv());
  return 0;
}

int run_verify(const Flags& f) {
  require_csv(f, "verify");
  verify::VerifyOptions options;
  options.seed = parse_count(f.seed, "--seed");
  options.corrupt = f.corrupt;
  const auto outcomes = verify::run_verify(options);
  write_output(f.out, verify::format_report(outcomes));
  if (!verify::all_passed(outcomes)) {
    for (const auto& o : outcomes) {
      if (!o.passed) std::cerr << "verification failed: " << o.id << "\n";
    }
    return kExitVerification;
  }
  return 0;
}

void add_common(CLI::App* cmd, Flags& f) {
  cmd->add_option("--out", f.out, "Output path (default: standard output)");
  cmd->add_option("--format", f.format, "csv, svg or both")
      ->check(CLI::IsMember({"csv", "svg", "both"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Precision/accuracy trade-off toolkit for quantum metrology"};
  app.require_subcommand(1);
  Flags f;

  auto* tradeoff = app.add_subcommand("tradeoff", "Sweep the precision-accuracy trade-off surface");
  tradeoff->add_option("--n", f.n, "Comma-separated sample budgets");
  tradeoff->add_option("--alpha", f.alpha, "Comma-separated accuracies");
  add_common(tradeoff, f);

  auto* inherent = app.add_subcommand("inherent", "Inherent precision and accuracy vs phi0");
  inherent->add_option("--n", f.n, "Sample budget (>= 3)");
  inherent->add_option("--grid", f.grid, "Number of phi0 intervals on (0, pi)");
  inherent->add_option("--phi0", f.phi0, "Evaluate a single phi0 instead of a sweep");
  inherent->add_option("--side", f.side, "below, above or two-sided");
  add_common(inherent, f);

  auto* basis = app.add_subcommand("basis-sweep", "SNR landscape over measurement bases");
  basis->add_option("--phi", f.phi, "Signal phase (e.g. pi/10)");
  basis->add_option("--n", f.n, "Sample budget");
  basis->add_option("--grid", f.grid, "Points per axis");
  add_common(basis, f);

  auto* resources = app.add_subcommand("resources", "Resource-strategy scaling comparison");
  resources->add_option("--strategies", f.strategies, "Comma-separated strategies");
  resources->add_option("--m-grid", f.m_grid, "Comma-separated particle counts M");
  resources->add_option("--big-n", f.big_n, "Repetitions N");
  resources->add_option("--alpha", f.alpha, "Accuracy");
  resources->add_option("--k", f.k, "Nonlinear exponent");
  add_common(resources, f);

  auto* bias = app.add_subcommand("bias-mc", "Estimator bias: exact enumeration and Monte Carlo");
  bias->add_option("--phi", f.phi, "Signal phase in (0, pi)");
  bias->add_option("--n", f.n, "Samples per estimate");
  bias->add_option("--trials", f.trials, "Monte Carlo trials");
  bias->add_option("--seed", f.seed, "RNG seed");
  add_common(bias, f);

  auto* verify_cmd = app.add_subcommand("verify", "Run every pinned check and report pass/fail");
  verify_cmd->add_option("--seed", f.seed, "RNG seed");
  verify_cmd->add_option("--corrupt", f.corrupt, "Corrupt the tolerance of a check (test hook)")
      ->group("");
  add_common(verify_cmd, f);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*tradeoff) return run_tradeoff(f);
    if (*inherent) return run_inherent(f);
    if (*basis) return run_basis_sweep(f);
    if (*resources) return run_resources(f);
    if (*bias) return run_bias_mc(f);
    if (*verify_cmd) return run_verify(f);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitUsage;
}
