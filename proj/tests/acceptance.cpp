// Acceptance gate: one PASS/FAIL line per criterion, diagnostics indented below.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "qwkb/coeffs/families.hpp"
#include "qwkb/coeffs/golden.hpp"
#include "qwkb/coeffs/registry.hpp"
#include "qwkb/eigen/eigen.hpp"
#include "qwkb/eigen/truncation.hpp"
#include "qwkb/errors.hpp"
#include "qwkb/oracle/reference.hpp"
#include "qwkb/oracle/spectrum.hpp"
#include "qwkb/sums/sums.hpp"
#include "qwkb/verify/verify.hpp"

using namespace qwkb;
using arith::BigReal;

namespace {

constexpr long kBits = 256;
constexpr std::size_t kMaxListed = 12;

struct Outcome {
  bool pass = true;
  std::string summary;
  std::vector<std::string> details;

  void fail(std::string line) {
    pass = false;
    details.push_back(std::move(line));
  }
};

std::string fmt_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", x);
  return buf;
}

// Folds a golden comparison into an outcome, listing the first mismatches.
void absorb(Outcome& o, const verify::Report& rep) {
  std::size_t listed = 0;
  for (const auto& c : rep.checks) {
    if (c.pass) continue;
    if (listed++ < kMaxListed)
      o.fail(c.table + "[" + std::to_string(c.index) + "] " + c.column + ": expected " + c.expected + ", got " +
             c.computed + " (rel " + fmt_double(c.rel_dev) + ")");
    else
      o.pass = false;
  }
  if (listed > kMaxListed) o.details.push_back("... " + std::to_string(listed - kMaxListed) + " more mismatches");
}

std::string cells(const verify::Report& rep) {
  return std::to_string(rep.checks.size()) + " cells, " + std::to_string(rep.mismatches()) + " mismatches";
}

verify::Report select(const verify::Report& rep, const std::function<bool(const verify::Check&)>& keep) {
  verify::Report r{rep.suite, {}};
  for (const auto& c : rep.checks)
    if (keep(c)) r.checks.push_back(c);
  return r;
}

bool is_ratio(const verify::Check& c) { return c.column.find("ratio") != std::string::npos; }

void time_limit(Outcome& o, double seconds, double limit) {
  o.summary += ", " + fmt_double(seconds) + " s";
  if (seconds > limit) o.fail("runtime " + fmt_double(seconds) + " s exceeds " + fmt_double(limit) + " s");
}

double elapsed(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Shared across criteria; the first criterion times generation itself.
verify::Report coeff_report;

Outcome coefficient_regeneration() {
  const auto t0 = std::chrono::steady_clock::now();
  coeff_report = verify::verify_coeffs(kBits);
  const double secs = elapsed(t0);
  const verify::Report values = select(coeff_report, [](const verify::Check& c) { return !is_ratio(c); });
  Outcome o;
  o.summary = cells(values);
  absorb(o, values);
  time_limit(o, secs, 120.0);
  return o;
}

Outcome ratio_columns() {
  const verify::Report ratios = select(coeff_report, is_ratio);
  Outcome o;
  o.summary = cells(ratios);
  absorb(o, ratios);
  if (ratios.checks.size() != 56) o.fail("expected 56 ratio cells");
  return o;
}

Outcome eigenvalue_corrections(const verify::Report& eigen_report) {
  const eigen::EigenApprox E(coeffs::coefficient_set(kBits));
  const verify::Report rep = eigen_report.only("eps_sd");
  Outcome o;
  o.summary = cells(rep);
  absorb(o, rep);
  if (rep.checks.size() != 22) o.fail("expected 11 rows of (L, value)");
  if (E.sd_least_addition(0).order != 2) o.fail("scanned L at n = 0 is not 2");
  for (int n = 3; n <= 10; ++n)
    if (E.sd_least_addition(n).order != 4 * n + 7) o.fail("scanned L at n = " + std::to_string(n) + " is not 4n + 7");
  return o;
}

Outcome d_truncation(const verify::Report& eigen_report) {
  const eigen::EigenApprox E(coeffs::coefficient_set(kBits));
  const verify::Report rep = eigen_report.only("d_sums");
  Outcome o;
  o.summary = cells(rep);
  absorb(o, rep);
  if (rep.checks.size() != 22) o.fail("expected 11 rows of (L, value)");
  for (int n = 3; n <= 10; ++n)
    if (E.d_least_addition(n).order != 2 * n + 4) o.fail("scanned L at j = " + std::to_string(n) + " is not 2j + 4");
  return o;
}

Outcome order_sensitivity(const verify::Report& eigen_report, const verify::Report& sums_report, double secs) {
  verify::Report rep = eigen_report.only("eigen_orders");
  rep.append(sums_report.only("sum_orders"));
  Outcome o;
  o.summary = cells(rep);
  absorb(o, rep);
  if (rep.checks.size() != 270) o.fail("expected 30 eigenvalue rows and 30 sum rows");
  time_limit(o, secs, 300.0);
  return o;
}

Outcome headline_numbers() {
  const sums::SumApprox S(coeffs::coefficient_set(kBits));
  const auto ref = oracle::embedded_reference(kBits);
  const BigReal e1 = *sums::SumApprox::with_error(S.e_hyp(1), ref).error;
  const BigReal e10 = *sums::SumApprox::with_error(S.e_hyp(10), ref).error;
  Outcome o;
  o.summary = "HYP error N=1 " + e1.to_scientific(4) + ", N=10 " + e10.to_scientific(4);
  if (!(abs(e1) < BigReal("2e-4", kBits))) o.fail("|HYP error| at N = 1 is not below 2e-4");
  if (!(abs(e10) < BigReal("1e-22", kBits))) o.fail("|HYP error| at N = 10 is not below 1e-22");
  return o;
}

Outcome subdominant_sums(const verify::Report& sums_report) {
  verify::Report rep = sums_report.only("sum_sd");
  rep.append(sums_report.only("sum_sd_asym"));
  Outcome o;
  o.summary = cells(rep);
  absorb(o, rep);
  return o;
}

Outcome oracle_spectrum() {
  const auto t0 = std::chrono::steady_clock::now();
  const oracle::OracleConfig config;
  const verify::Report rep = verify::verify_oracle(config);
  Outcome o;
  o.summary = cells(rep) + ", worst " + fmt_double(rep.worst_abs());
  absorb(o, rep);
  // Variational upper bounds fall as the basis grows.
  const auto ref = oracle::embedded_reference(config.precision_bits);
  const BigReal omega(config.basis_frequency, config.precision_bits);
  const BigReal slack("1e-40", config.precision_bits);
  const int sizes[] = {60, 80, 100, 120};
  for (int parity = 0; parity < 2; ++parity) {
    std::vector<std::vector<BigReal>> runs;
    for (int size : sizes) runs.push_back(oracle::solve_parity_block(parity, size, omega, 10));
    for (int k = 0; k < 10; ++k) {
      const int n = 2 * k + parity;
      for (std::size_t s = 1; s < runs.size(); ++s)
        if (runs[s][k] > runs[s - 1][k])
          o.fail("level " + std::to_string(n) + " rises from basis " + std::to_string(sizes[s - 1]) + " to " +
                 std::to_string(sizes[s]));
      if (runs.back()[k] < ref.eigenvalue(n) - slack) o.fail("level " + std::to_string(n) + " falls below the exact value");
    }
  }
  time_limit(o, elapsed(t0), 1800.0);
  return o;
}

Outcome property_suites() {
  Outcome o;
  const auto set = coeffs::coefficient_set(kBits);
  const auto residual = coeffs::reversion_residual(set->a, set->b, coeffs::kCoeffCap);
  for (std::size_t k = 0; k < residual.size(); ++k)
    if (!residual[k].is_zero()) o.fail("reversion residual nonzero at order " + std::to_string(k));

  const sums::SumApprox S(set);
  const BigReal tol("1e-70", kBits);
  for (sums::Method m : {sums::Method::SWKB, sums::Method::CSWKB, sums::Method::HYP}) {
    BigReal total(kBits);
    for (int n = 0; n < 10; ++n) {
      total += S.eps_from_sums(m, n).value;
      if (abs(total - S.estimate(m, n + 1).value) > tol)
        o.fail(std::string("telescoping breaks for ") + std::string(sums::method_name(m)) + " at N = " +
               std::to_string(n + 1));
    }
  }

  const eigen::EigenApprox& E = S.eigen();
  for (int n = 5; n <= 10; ++n)
    if (eigen::asymptotic_order(n) != E.wkb_least_addition(n).order)
      o.fail("A(" + std::to_string(n) + ") = " + std::to_string(eigen::asymptotic_order(n)) + " but the scan gives " +
             std::to_string(E.wkb_least_addition(n).order));

  const auto ref = oracle::embedded_reference(kBits);
  int prev = 0;
  for (int n = 0; n <= 10; ++n) {
    const int sign =
        eigen::EigenApprox::with_error(E.eps_wkb(n, E.wkb_least_addition(n).order), ref).error->sign();
    if (n > 0 && sign != -prev) o.fail("error sign does not alternate at n = " + std::to_string(n));
    prev = sign;
  }
  o.summary = "reversion through order " + std::to_string(coeffs::kCoeffCap) +
              ", telescoping N <= 10, order rule n = 5..10, sign alternation n = 0..10";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  verify::Report eigen_report, sums_report;
  double order_secs = 0.0;
  const auto load_tables = [&] {
    const auto t0 = std::chrono::steady_clock::now();
    eigen_report = verify::verify_eigen(kBits);
    sums_report = verify::verify_sums(kBits);
    order_secs = elapsed(t0);
  };
  const std::vector<Criterion> criteria{
      {"coefficient regeneration", coefficient_regeneration},
      {"asymptotic ratio columns", ratio_columns},
      {"eigenvalue corrections",
       [&] {
         load_tables();
         return eigenvalue_corrections(eigen_report);
       }},
      {"D-series truncation", [&] { return d_truncation(eigen_report); }},
      {"order-sensitivity blocks", [&] { return order_sensitivity(eigen_report, sums_report, order_secs); }},
      {"headline numbers", headline_numbers},
      {"subdominant sums", [&] { return subdominant_sums(sums_report); }},
      {"oracle spectrum", oracle_spectrum},
      {"property suites", property_suites},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    if (!o.pass) ++failed;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << (i + 1) << ". " << criteria[i].name;
    if (!o.summary.empty()) std::cout << ": " << o.summary;
    std::cout << '\n';
    for (const auto& d : o.details) std::cout << "      " << d << '\n';
    std::cout.flush();
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << " of " << criteria.size()
            << " criteria pass\n";
  return failed == 0 ? 0 : 1;
}
