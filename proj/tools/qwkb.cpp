#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "commands.hpp"
#include "qwkb/coeffs/golden.hpp"
#include "qwkb/errors.hpp"

using namespace qwkb;
using namespace qwkb::cli;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCapacity = 3;

struct Options {
  long precision_bits = arith::kDefaultPrecisionBits;
  std::optional<int> digits;
  std::string format = "csv";
  std::string strategy = "least";
  std::optional<int> order;
  std::optional<int> sd_order;
  std::optional<std::string> scan;
  std::optional<std::string> cache_dir;
  std::string out;

  RunConfig config() const {
    RunConfig c;
    c.precision_bits = precision_bits;
    c.digits = digits;
    c.format = parse_format(format);
    c.strategy = eigen::parse_strategy(strategy);
    c.order = order;
    c.sd_order = sd_order;
    c.scan = scan;
    if (cache_dir) c.cache_dir = *cache_dir;
    c.validate();
    return c;
  }
};

void add_common(CLI::App* app, Options& o) {
  app->add_option("--precision-bits", o.precision_bits, "Working precision in bits")->capture_default_str();
  app->add_option("--digits", o.digits, "Significant digits (default 41 for values, 8 for errors)");
  app->add_option("--format", o.format, "Output format: csv or json")->capture_default_str();
  app->add_option("--strategy", o.strategy, "Truncation strategy: empirical, least or asym")->capture_default_str();
  app->add_option("--order", o.order, "Series order M");
  app->add_option("--sd-order", o.sd_order, "Subdominant series order M'");
  app->add_option("--out", o.out, "Write output to this file instead of stdout");
}

void emit(const Table& t, const RunConfig& c, const std::string& out) {
  if (out.empty()) {
    render(t, c.format, std::cout);
    return;
  }
  std::ofstream f(out);
  if (!f) throw ConfigError("cannot write '" + out + "'");
  render(t, c.format, f);
  if (!f) throw ConfigError("write to '" + out + "' failed");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Semiclassical and hyperasymptotic eigenvalues of the quartic oscillator x^4/2"};
  app.require_subcommand(1);
  Options o;

  std::string family;
  int n_max = 0;
  auto* coeff = app.add_subcommand("coeff", "Print coefficients of one family");
  coeff->add_option("family", family, "a, b, bprime, d, h, c, q, f or K")->required();
  coeff->add_option("n_max", n_max, "Highest order")->required();
  add_common(coeff, o);

  std::string range, method;
  auto* eig = app.add_subcommand("eigen", "Eigenvalue approximations per level");
  eig->add_option("levels", range, "Level or range a..b")->required();
  eig->add_option("method", method, "wkb, bcwkb, lincorr, cwkb or sd")->required();
  eig->add_option("--scan", o.scan, "Order window such as L-2..L+2 around the least addition");
  add_common(eig, o);

  auto* sum = app.add_subcommand("sum", "Sums of the lowest N eigenvalues");
  sum->add_option("counts", range, "Particle count or range a..b")->required();
  sum->add_option("method", method, "swkb, gexp, cswkb, hyp or sd")->required();
  sum->add_option("--scan", o.scan, "Order window such as L-2..L+2 around the even least addition");
  add_common(sum, o);

  std::string suite;
  auto* ver = app.add_subcommand("verify", "Compare against the golden tables");
  ver->add_option("suite", suite, "coeffs, eigen, sums, oracle or all")->required();
  ver->add_option("--cache-dir", o.cache_dir, "Directory caching the oracle spectrum");
  add_common(ver, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const RunConfig c = o.config();
    if (coeff->parsed()) {
      emit(cmd_coeff(family, n_max, c), c, o.out);
    } else if (eig->parsed()) {
      emit(cmd_eigen(parse_range(range), method, c), c, o.out);
    } else if (sum->parsed()) {
      emit(cmd_sum(parse_range(range), method, c), c, o.out);
    } else {
      const VerifyResult r = cmd_verify(suite, c);
      emit(r.table, c, o.out);
      return r.passed ? kExitOk : kExitVerifyFailed;
    }
    return kExitOk;
  } catch (const CapacityError& e) {
    std::cerr << "qwkb: capacity: " << e.what() << '\n';
    return kExitCapacity;
  } catch (const ConvergenceError& e) {
    std::cerr << "qwkb: convergence: " << e.what() << " (" << e.achieved_digits() << " digits achieved)\n";
    return kExitCapacity;
  } catch (const Error& e) {
    std::cerr << "qwkb: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "qwkb: internal error: " << e.what() << '\n';
    return kExitUsage;
  }
}
