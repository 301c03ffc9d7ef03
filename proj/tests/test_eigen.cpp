#include <doctest.h>

#include <memory>

#include "qwkb/coeffs/golden.hpp"
#include "qwkb/coeffs/registry.hpp"
#include "qwkb/eigen/eigen.hpp"
#include "qwkb/eigen/truncation.hpp"
#include "qwkb/errors.hpp"
#include "qwkb/oracle/reference.hpp"
#include "qwkb/verify/verify.hpp"

using namespace qwkb;
using namespace qwkb::eigen;
using coeffs::AsymSeries;
using coeffs::SeriesKind;

namespace {

constexpr long kBits = 256;

const EigenApprox& approx() {
  static const EigenApprox E(coeffs::coefficient_set(kBits));
  return E;
}

const oracle::ReferenceSpectrum& ref() {
  static const oracle::ReferenceSpectrum r = oracle::embedded_reference(kBits);
  return r;
}

BigReal err(const EigenEstimate& e) { return *EigenApprox::with_error(e, ref()).error; }

AsymSeries series_of(std::vector<const char*> values) {
  std::vector<BigReal> v;
  for (const char* s : values) v.emplace_back(s, 64L);
  return AsymSeries(SeriesKind::B, v);
}

}  // namespace

TEST_CASE("least-addition scan") {
  const AsymSeries s = series_of({"1", "0.5", "0.25", "0.25", "1"});
  const BigReal one(1, 64);
  CHECK(least_addition(s, one).order == 2);  // tie goes to the smaller order
  CHECK(!least_addition(s, one).capped);
  CHECK(even_least_addition(s, one).order == 2);
  CHECK(least_addition(s, one, 1).order == 1);
  CHECK(least_addition(s, one, 1).capped);
  // Terms still shrinking at the cap.
  const AsymSeries falling = series_of({"1", "0.5", "0.25"});
  CHECK(least_addition(falling, one).capped);
  // Global argmin, not the first local minimum.
  const AsymSeries dip = series_of({"1", "0.1", "0.2", "0.01", "5"});
  CHECK(least_addition(dip, one).order == 3);
}

TEST_CASE("least-addition orders of the WKB, D and H series") {
  const int wkb[] = {2, 3, 7, 9, 11, 13, 15, 17, 19, 22, 24};
  for (int n = 0; n <= 10; ++n) {
    CAPTURE(n);
    CHECK(approx().wkb_least_addition(n).order == wkb[n]);
    CHECK(!approx().wkb_least_addition(n).capped);
    const int LD = approx().d_least_addition(n).order;
    const int LS = approx().sd_least_addition(n).order;
    if (n > 2) {
      CHECK(LD == 2 * n + 4);
      CHECK(LS == 4 * n + 7);
    }
  }
  CHECK(approx().sd_least_addition(0).order == 2);
  CHECK(approx().d_least_addition(0).order == 2);
}

TEST_CASE("truncated D sums") {
  const auto& t = coeffs::golden("d_sums");
  for (const auto& row : t.rows()) {
    const int j = static_cast<int>(row.index);
    const int L = approx().d_least_addition(j).order;
    const BigReal z = approx().z_of(j);
    const verify::Check c =
        verify::compare_printed("d_sums", j, "", eval_poly(approx().coefficients().d, L, z * z), row.fields.at(1));
    CAPTURE(j);
    CHECK(std::to_string(L) == row.fields.at(0));
    if (j < 5)
      CHECK(c.pass);
    else
      CHECK(c.rel_dev < 1e-26);
  }
}

TEST_CASE("large-order rule matches the scan from n = 5") {
  for (int n = 5; n <= 10; ++n) {
    CAPTURE(n);
    CHECK(asymptotic_order(n) == approx().wkb_least_addition(n).order);
  }
  CHECK(asymptotic_order(0) == 2);
  CHECK(asymptotic_order(10) == 24);
}

TEST_CASE("subdominant corrections") {
  const auto& t = coeffs::golden("eps_sd_short");
  for (const auto& row : t.rows()) {
    const int n = static_cast<int>(row.index);
    CAPTURE(n);
    CHECK(std::to_string(approx().sd_least_addition(n).order) == row.fields.at(0));
    CHECK(verify::compare_printed("eps_sd_short", n, "", approx().eps_sd(n), row.fields.at(1)).pass);
  }
  // Rows from n = 5 were tabulated from noisy d_n and agree to about 25 digits.
  const auto& t41 = coeffs::golden("eps_sd");
  for (const auto& row : t41.rows()) {
    const int n = static_cast<int>(row.index);
    const verify::Check c = verify::compare_printed("eps_sd", n, "", approx().eps_sd(n), row.fields.at(1));
    CAPTURE(n);
    if (n < 5)
      CHECK(c.pass);
    else
      CHECK(c.rel_dev < 1e-24);
  }
  // Sign (-1)^n.
  for (int n = 0; n <= 10; ++n) CHECK(approx().eps_sd(n).sign() == (n % 2 == 0 ? 1 : -1));
  const BigReal z = approx().z_of(3);
  CHECK(approx().eps_sd(z, 5, 1) == -approx().eps_sd(z, 5, -1));
}

TEST_CASE("error sign alternates with n at least addition") {
  for (int n = 0; n <= 10; ++n) {
    CAPTURE(n);
    const BigReal e = err(approx().eps_wkb(n, approx().wkb_least_addition(n).order));
    CHECK(e.sign() == (n % 2 == 0 ? -1 : 1));
  }
}

TEST_CASE("corrected methods beat plain WKB") {
  for (int n = 0; n <= 10; ++n) {
    CAPTURE(n);
    const BigReal wkb = abs(err(approx().eps_wkb(n, approx().wkb_least_addition(n).order)));
    const BigReal wkb_lm1 = abs(err(approx().eps_wkb(n, approx().default_wkb_order(n))));
    CHECK(abs(err(approx().eps_cwkb(n))) < wkb);
    CHECK(abs(err(approx().eps_bcwkb(n))) < wkb_lm1);
    CHECK(abs(err(approx().eps_lincorr(n))) < wkb_lm1);
  }
  // Roughly a factor 2 at the ground state, seven orders of magnitude at n = 10.
  const BigReal r0 = abs(err(approx().eps_wkb(0, 1))) / abs(err(approx().eps_bcwkb(0)));
  CHECK(r0 > BigReal(1.5, kBits));
  CHECK(r0 < BigReal(2.5, kBits));
  const BigReal r10 = abs(err(approx().eps_wkb(10, 23))) / abs(err(approx().eps_bcwkb(10)));
  CHECK(r10 > BigReal("1e6", kBits));
}

TEST_CASE("linear correction agrees with the shifted argument to second order") {
  for (int n = 2; n <= 10; ++n) {
    const BigReal g = abs(approx().g_val(n, approx().d_least_addition(n).order));
    const BigReal diff = abs(approx().eps_bcwkb(n).value - approx().eps_lincorr(n).value);
    CAPTURE(n);
    CHECK(diff < g * g * 10L);
  }
}

TEST_CASE("default orders") {
  for (int n = 0; n <= 10; ++n) {
    CHECK(approx().default_wkb_order(n) == approx().wkb_least_addition(n).order - 1);
    const EigenEstimate c = approx().eps_cwkb(n);
    CHECK(c.method == Method::CWKB);
    CHECK(c.order == approx().default_wkb_order(n));
    CHECK(c.sd_order == approx().sd_least_addition(n).order);
  }
}

TEST_CASE("order-sensitivity block") {
  const verify::Report rep = verify::verify_eigen(kBits).only("eigen_orders");
  CHECK(rep.checks.size() == 150);
  for (const auto& c : rep.checks) {
    CAPTURE(c.index);
    CAPTURE(c.column);
    CAPTURE(c.expected);
    CAPTURE(c.computed);
    CHECK(c.pass);
  }
}

TEST_CASE("truncation strategies") {
  const auto& b = approx().coefficients().b;
  const BigReal z = approx().z_of(7);
  const BigReal y = z * z;
  CHECK(truncation_order(b, y, {Strategy::LeastAddition, nullptr}) == 17);
  CHECK(truncation_order(b, y, {Strategy::Asymptotic, nullptr}, 7) == asymptotic_order(7));
  CHECK_THROWS_AS(truncation_order(approx().coefficients().d, y, {Strategy::Asymptotic, nullptr}, 7),
                  UnsupportedStrategyError);
  CHECK_THROWS_AS(truncation_order(b, y, {Strategy::Empirical, nullptr}, 7), ConfigError);
  const auto reference = std::make_shared<const oracle::ReferenceSpectrum>(ref());
  const TruncationStrategy emp{Strategy::Empirical, reference};
  const int M = approx().wkb_order(7, emp);
  for (int m = 1; m <= 30; ++m) CHECK(abs(err(approx().eps_wkb(7, M))) <= abs(err(approx().eps_wkb(7, m))));
  CHECK(approx().wkb_order(7, {Strategy::LeastAddition, nullptr}) == 17);
  CHECK(parse_strategy("least") == Strategy::LeastAddition);
  CHECK(parse_strategy("asym") == Strategy::Asymptotic);
  CHECK(parse_strategy("empirical") == Strategy::Empirical);
  CHECK_THROWS_AS(parse_strategy("best"), ConfigError);
  CHECK(empirical_order([](int m) { return BigReal(std::abs(m - 4), 64L); }, 0, 9) == 4);
}

TEST_CASE("argument errors") {
  CHECK_THROWS_AS(approx().eps_wkb(-1, 3), RangeError);
  CHECK_THROWS_AS(approx().eps_wkb(3, 41), CapacityError);
  CHECK_THROWS_AS(approx().eps_cwkb(3, 5, 81), CapacityError);
  CHECK_THROWS_AS(parse_method("exact"), ConfigError);
  CHECK(parse_method("cwkb") == Method::CWKB);
  CHECK(method_name(Method::BCWKB) == "bcwkb");
  CHECK_THROWS_AS(ref().eigenvalue(20), RangeError);
}
