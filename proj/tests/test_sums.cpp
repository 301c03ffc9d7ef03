#include <doctest.h>

#include "qwkb/coeffs/golden.hpp"
#include "qwkb/coeffs/registry.hpp"
#include "qwkb/errors.hpp"
#include "qwkb/oracle/reference.hpp"
#include "qwkb/sums/sums.hpp"
#include "qwkb/verify/verify.hpp"

using namespace qwkb;
using namespace qwkb::sums;

namespace {

constexpr long kBits = 256;

const SumApprox& approx() {
  static const SumApprox S(coeffs::coefficient_set(kBits));
  return S;
}

const oracle::ReferenceSpectrum& ref() {
  static const oracle::ReferenceSpectrum r = oracle::embedded_reference(kBits);
  return r;
}

BigReal err(const SumEstimate& e) { return *SumApprox::with_error(e, ref()).error; }

}  // namespace

TEST_CASE("telescoping of eigenvalues from sums") {
  const BigReal tol("1e-70", kBits);
  for (Method m : {Method::SWKB, Method::CSWKB, Method::HYP, Method::GEXP}) {
    CAPTURE(method_name(m));
    for (std::optional<int> M : {std::optional<int>{}, std::optional<int>{9}}) {
      BigReal total(kBits);
      for (int n = 0; n < 10; ++n) {
        const auto e = approx().eps_from_sums(m, n, M);
        CHECK(e.method == eigen::Method::SumDifference);
        CHECK(e.level == n);
        total += e.value;
        if (m != Method::GEXP) CHECK(abs(total - approx().estimate(m, n + 1, M).value) < tol);
      }
    }
  }
  // E(0) = 0: the first difference is the one-particle sum itself.
  CHECK(approx().eps_from_sums(Method::SWKB, 0).value == approx().e_swkb(1).value);
  CHECK_THROWS_AS(approx().eps_from_sums(Method::SWKB, -1), RangeError);
}

TEST_CASE("sum differences improve the ground state") {
  const BigReal sd = approx().eps_from_sums(Method::SWKB, 0).value - ref().eigenvalue(0);
  const eigen::EigenApprox& E = approx().eigen();
  const BigReal wkb = *eigen::EigenApprox::with_error(E.eps_wkb(0, E.wkb_least_addition(0).order), ref()).error;
  CHECK(abs(sd) * 5L < abs(wkb));
}

TEST_CASE("headline hyperasymptotic errors") {
  const SumEstimate one = approx().e_hyp(1);
  CHECK(abs(err(one)) < BigReal("2e-4", kBits));
  CHECK(one.order_rule_unconfirmed);
  const SumEstimate ten = approx().e_hyp(10);
  CHECK(abs(err(ten)) < BigReal("1e-22", kBits));
  CHECK(!ten.order_rule_unconfirmed);
  CHECK(ten.order == 23);
}

TEST_CASE("hyperasymptotics beat the corrected sum") {
  for (int N = 4; N <= 10; ++N) {
    CAPTURE(N);
    CHECK(abs(err(approx().e_hyp(N))) < abs(err(approx().e_cswkb(N))));
    CHECK(abs(err(approx().e_cswkb(N))) < abs(err(approx().e_swkb(N))));
  }
}

TEST_CASE("SWKB error alternates in sign") {
  for (int N = 1; N <= 10; ++N) {
    CAPTURE(N);
    CHECK(err(approx().e_swkb(N)).sign() == (N % 2 == 1 ? -1 : 1));
  }
}

TEST_CASE("default orders") {
  const int least[] = {0, 4, 6, 8, 10, 12, 14, 16, 20, 22, 24};
  for (int N = 1; N <= 10; ++N) {
    CAPTURE(N);
    CHECK(approx().swkb_least_addition(N).order == least[N]);
    CHECK(approx().swkb_least_addition(N).order % 2 == 0);
    CHECK(approx().default_corrected_order(N) == least[N] - 1);
  }
}

TEST_CASE("midpoint expansion agrees with the SWKB series") {
  // q and c describe the same sum expanded about N + 1/2 and N.
  const BigReal N(1000, kBits);
  const SumEstimate s = approx().e_swkb(1000, 10);
  const SumEstimate g = approx().e_gexp(1000, 10);
  CHECK(abs(g.value - s.value) < abs(s.value) * BigReal("1e-55", kBits));
  // At small N the difference stays below the truncation error.
  for (int n = 5; n <= 10; ++n) {
    CAPTURE(n);
    CHECK(abs(approx().e_gexp(n, 10).value - approx().e_swkb(n, 10).value) < abs(err(approx().e_swkb(n, 10))));
  }
  const BigReal mid = approx().midway(10, 20) - ref().partial_sum(10) - ref().eigenvalue(10) / 2L;
  CHECK(abs(mid) < BigReal("1e-13", kBits));
}

TEST_CASE("subdominant sum corrections") {
  const verify::Report rep = verify::verify_sums(kBits);
  const verify::Report table3 = rep.only("sum_sd");
  CHECK(table3.checks.size() == 20);
  for (const auto& c : table3.checks) {
    CAPTURE(c.index);
    CAPTURE(c.column);
    CHECK(c.pass);
  }
  // Rows 5..8 were tabulated from noisy d_n and agree to about 25 digits.
  for (const auto& c : rep.only("sum_sd_asym").checks) {
    CAPTURE(c.index);
    if (c.index >= 5 && c.index <= 8)
      CHECK(c.rel_dev < 1e-24);
    else
      CHECK(c.pass);
  }
  // Exact and asymptotic corrections converge together.
  for (int N = 1; N <= 10; ++N) {
    const BigReal ex = approx().e_sd_exact(N);
    const BigReal as = approx().e_sd_asym(N);
    CAPTURE(N);
    CHECK(abs(ex - as) < abs(ex) * BigReal("2e-3", kBits));
    CHECK(ex.sign() == (N % 2 == 1 ? 1 : -1));
  }
  CHECK(approx().e_sd(3, SdChoice::Exact) == approx().e_sd_exact(3));
}

TEST_CASE("order-sensitivity block") {
  const verify::Report rep = verify::verify_sums(kBits).only("sum_orders");
  CHECK(rep.checks.size() == 120);
  for (const auto& c : rep.checks) {
    CAPTURE(c.index);
    CAPTURE(c.column);
    CAPTURE(c.expected);
    CAPTURE(c.computed);
    CHECK(c.pass);
  }
}

TEST_CASE("argument errors") {
  CHECK_THROWS_AS(approx().e_swkb(0), RangeError);
  CHECK_THROWS_AS(approx().e_hyp(-3), RangeError);
  CHECK_THROWS_AS(approx().e_swkb(5, 41), CapacityError);
  CHECK_THROWS_AS(parse_method("sd"), ConfigError);
  CHECK(parse_method("hyp") == Method::HYP);
  CHECK(method_name(Method::CSWKB) == "cswkb");
  CHECK(ref().partial_sum(0).is_zero());
}
