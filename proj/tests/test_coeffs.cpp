#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "qwkb/arith/special.hpp"
#include "qwkb/coeffs/families.hpp"
#include "qwkb/coeffs/golden.hpp"
#include "qwkb/coeffs/registry.hpp"
#include "qwkb/eigen/eigen.hpp"
#include "qwkb/errors.hpp"
#include "qwkb/verify/verify.hpp"

using namespace qwkb;
using namespace qwkb::coeffs;
using arith::BigReal;
using arith::ExactCoeff;
using arith::Rational;

namespace {

constexpr long kBits = 256;

const CoefficientSet& set() { return *coefficient_set(kBits); }

// First rows whose tabulated values carry double-precision noise.
constexpr long kNoisyD = 14;
constexpr long kNoisyH = 27;

void check_table(const char* id, const AsymSeries& s, long clean_below) {
  const GoldenTable& t = golden(id);
  for (const auto& row : t.rows()) {
    const BigReal x = s.value(static_cast<int>(row.index));
    const std::string& field = row.fields.at(0);
    CAPTURE(id);
    CAPTURE(row.index);
    CAPTURE(field);
    CAPTURE(x.to_scientific(41));
    if (row.index < clean_below) {
      CHECK(verify::compare_printed(id, row.index, "", x, field).pass);
    } else {
      // Rows past the noise threshold still agree to 12 digits.
      const BigReal expected(field, kBits);
      CHECK(abs(x - expected) <= abs(expected) * BigReal("1e-12", kBits));
    }
  }
}

}  // namespace

TEST_CASE("golden tables load with comments and rows") {
  const GoldenTable& t = golden("b");
  CHECK(t.rows().size() == 28);
  CHECK(!t.comments().empty());
  CHECK(t.row(1).fields.size() == 2);
  CHECK_THROWS_AS(t.row(99), LookupError);
  CHECK_THROWS_AS(golden("no_such_table"), LookupError);
  CHECK(GoldenTable::printed_digits("-3.5367765e-02") == 8);
  CHECK(GoldenTable::printed_digits("0.530181") == 6);
  CHECK(verify::half_ulp("1.25e-03", 64) == BigReal("5e-6", 64));
  CHECK(verify::half_ulp("0.530", 64) == BigReal("5e-4", 64));
}

TEST_CASE("golden directory override") {
  const auto dir = std::filesystem::temp_directory_path() / "qwkb_golden_override";
  std::filesystem::create_directories(dir);
  {
    std::ofstream out(dir / "d.tsv");
    out << "# override\n1\t4.2e-01\n";
  }
  const char* old = std::getenv(kGoldenDirEnv);
  const std::string saved = old ? old : "";
  setenv(kGoldenDirEnv, dir.c_str(), 1);
  CHECK(golden_dir() == dir);
  CHECK(golden("d").rows().size() == 1);
  CHECK(golden("d").row(1).fields.at(0) == "4.2e-01");
  CHECK_THROWS_AS(golden("h"), ConfigError);
  if (old) setenv(kGoldenDirEnv, saved.c_str(), 1); else unsetenv(kGoldenDirEnv);
  std::filesystem::remove_all(dir);
  CHECK(golden("d").rows().size() == 28);
}

TEST_CASE("exact a_n and b_n forms") {
  CHECK(set().a.exact(0) == ExactCoeff(1));
  CHECK(set().a.exact(1) == ExactCoeff::monomial(Rational(-3, 2), 2, -4));
  CHECK(set().a.exact(2) == ExactCoeff(Rational(11, 512)));
  CHECK(set().b.exact(1) == ExactCoeff::monomial(Rational(1, 9), -1, 0));
  CHECK(set().b.exact(2) ==
        ExactCoeff::monomial(Rational(-11, 124416), -6, 8) + ExactCoeff::monomial(Rational(-5, 648), -2, 0));
  for (int n = 0; n <= kCoeffCap; ++n) {
    for (const auto& t : set().a.exact(n).terms()) CHECK(t.gamma_power == (n % 2 == 0 ? 0 : -4));
    CHECK(set().a.exact(n).size() == 1);
  }
  const verify::Report rep = verify::verify_coeffs(kBits);
  CHECK(rep.only("a_exact").checks.size() == 28);
  CHECK(rep.only("a_exact").passed());
  CHECK(rep.only("b_exact").checks.size() == 11);
  CHECK(rep.only("b_exact").passed());
}

TEST_CASE("coefficient tables") {
  check_table("a", set().a, 1000);
  check_table("b", set().b, 1000);
  check_table("c", set().c, 1000);
  check_table("q", set().q, 1000);
  check_table("d", set().d, kNoisyD);
  check_table("h", set().h, kNoisyH);
}

TEST_CASE("asymptotic ratio columns") {
  const verify::Report rep = verify::verify_coeffs(kBits);
  int ratios = 0;
  for (const auto& c : rep.checks)
    if (c.column.find("ratio") != std::string::npos) {
      CAPTURE(c.table);
      CAPTURE(c.index);
      CHECK(c.pass);
      ++ratios;
    }
  CHECK(ratios == 56);
  // Ratios approach one.
  const BigReal r = asym_b(kCoeffCap, kBits) / set().b.value(kCoeffCap);
  CHECK(abs(r - BigReal(1, kBits)) < BigReal("0.02", kBits));
}

TEST_CASE("sign patterns follow the large-order asymptotics") {
  for (int n = 1; n <= kCoeffCap; ++n) {
    CAPTURE(n);
    CHECK(set().a.value(n).sign() == asym_a(n, kBits).sign());
    CHECK(set().b.value(n).sign() == asym_b(n, kBits).sign());
  }
}

TEST_CASE("reversion residual vanishes exactly") {
  const auto residual = reversion_residual(set().a, set().b, kCoeffCap);
  REQUIRE(residual.size() == static_cast<std::size_t>(kCoeffCap) + 1);
  for (const auto& r : residual) CHECK(r.is_zero());
  // A perturbed b leaves a residual at the perturbed order.
  std::vector<BigReal> v = set().b.values();
  std::vector<ExactCoeff> e = set().b.exact_values();
  e[3] += ExactCoeff::monomial(Rational(1, 1000), -3, 0);
  const AsymSeries bad(SeriesKind::B, v, e);
  const auto r2 = reversion_residual(set().a, bad, 5);
  CHECK(r2[2].is_zero());
  CHECK(!r2[3].is_zero());
}

TEST_CASE("leading coefficients") {
  CHECK(set().b.value(0) == BigReal(1, kBits));
  CHECK(set().c.value(0) == BigReal(1, kBits));
  CHECK(set().q.value(0) == BigReal(1, kBits));
  CHECK(set().d.value(0) == BigReal(1, kBits));
  CHECK(set().h.value(0) == BigReal(1, kBits));
  CHECK(set().f.value(0).to_scientific(20) == "1.0000000000000000000e+00");
  CHECK(set().f.value(1).to_scientific(18) == "-1.38079440554542756e-02");
  CHECK(set().bprime.value(1) == set().b.value(1) * Rational(-2, 3));
  CHECK(set().h.max_order() == 2 * kCoeffCap);
  CHECK(set().f.max_order() == kFOrder);
}

TEST_CASE("K coefficients") {
  const auto K = gen_K(6);
  CHECK(K[0] == Rational(1));
  CHECK(K[1] == Rational(-1, 12));
  CHECK(K[2] == Rational(7, 240));
  CHECK(K[3] == Rational(-31, 1344));
  CHECK_THROWS_AS(gen_K(-1), RangeError);
}

TEST_CASE("alternating exponential moments") {
  const long bits = 200;
  for (int p = 0; p <= 6; ++p) {
    BigReal direct(bits);
    const BigReal q = exp(-arith::const_pi(bits));
    BigReal qn(1, bits);
    for (int n = 0; n < 80; ++n) {
      BigReal term = qn * pow(BigReal(n, bits), p);
      if (p == 0 && n == 0) term = BigReal(1, bits);
      if (n % 2 == 1) direct -= term; else direct += term;
      qn *= q;
    }
    CAPTURE(p);
    CHECK(abs(alternating_exp_moment(p, bits) - direct) < BigReal("1e-55", bits));
  }
}

TEST_CASE("capacity errors") {
  CHECK_THROWS_AS(set().b.value(kCoeffCap + 1), CapacityError);
  CHECK_THROWS_AS(set().h.value(2 * kCoeffCap + 1), CapacityError);
  CHECK_THROWS_AS(gen_a(kCoeffCap * 3, 64), CapacityError);
  CHECK_THROWS_AS(coefficient_set(32), ConfigError);
}

TEST_CASE("precision doubling leaves coefficients unchanged") {
  const auto hi = coefficient_set(2 * kBits);
  for (int n : {5, 20, 40}) {
    CAPTURE(n);
    CHECK(hi->d.value(n).with_precision(kBits) == set().d.value(n));
    CHECK(hi->c.value(n).to_scientific(60) == set().c.value(n).to_scientific(60));
  }
  for (int n : {10, 56, 80}) {
    CAPTURE(n);
    CHECK(hi->h.value(n).to_scientific(60) == set().h.value(n).to_scientific(60));
  }
}

TEST_CASE("d_14 from an independent root solve") {
  // Solve the implicit quantization z = (eps/alpha)^{3/4} A((2 eps)^{3/2}) at
  // z = 1e11 and read d_14 off the subdominant exponent
  // (eps/alpha)^{3/4} A(-(2 eps)^{3/2}) / z = sum_m d_m z^{-2m}.
  const long bits = 1600;
  const int na = 16;
  const AsymSeries a = gen_a(na, bits);
  const BigReal alpha = arith::const_alpha(bits);
  const BigReal z("1e11", bits);
  const BigReal one(1, bits);
  const Rational r34(3, 4);
  auto A = [&](const BigReal& y) {
    BigReal s(bits);
    for (int n = na; n >= 0; --n) s = s / y + a.value(n);
    return s;
  };
  auto y_of = [&](const BigReal& eps) { return pow(eps * 2L, Rational(3, 2)); };
  auto g = [&](const BigReal& eps) { return pow(eps / alpha, r34) * A(y_of(eps)) - z; };
  auto dg = [&](const BigReal& eps) {
    BigReal s(bits);
    for (int n = 0; n <= na; ++n)
      s += a.value(n) * pow(BigReal(2, bits), Rational(-3 * n, 2)) * (r34 - Rational(3 * n, 2)) *
           pow(eps, r34 - Rational(1) - Rational(3 * n, 2));
    return s * pow(alpha, Rational(-3, 4));
  };
  BigReal eps = alpha * pow(z, Rational(4, 3));
  for (int it = 0; it < 40; ++it) eps -= g(eps) / dg(eps);
  CHECK(abs(g(eps)) < pow(BigReal(10, bits), -400));

  const BigReal F = pow(eps / alpha, r34) * A(-y_of(eps)) / z;
  const BigReal u = one / (z * z);
  BigReal partial(bits);
  for (int m = 13; m >= 0; --m) partial = partial * u + set().d.exact(m).eval(bits);
  const BigReal d14 = (F - partial) / pow(u, 14);
  const BigReal ours = set().d.value(14).with_precision(bits);
  CAPTURE(d14.to_scientific(30));
  CHECK(abs(d14 - ours) < abs(ours) * BigReal("1e-17", bits));
  // The tabulated value sits about 2e-13 away in relative terms.
  const BigReal table(golden("d").row(14).fields.at(0), bits);
  CHECK(abs(table - ours) > abs(ours) * BigReal("1e-13", bits));
}

TEST_CASE("tabulated d reproduces the tabulated D_L sums") {
  // The D_L(z^2) table was built from the tabulated d_n, so substituting them
  // recovers every row, including those that differ from the exact d_n.
  std::vector<BigReal> v;
  const GoldenTable& td = golden("d");
  v.push_back(BigReal(1, kBits));
  for (const auto& row : td.rows()) v.push_back(BigReal(row.fields.at(0), kBits));
  const AsymSeries tabulated(SeriesKind::D, v);
  const eigen::EigenApprox E(coefficient_set(kBits));
  const GoldenTable& sums = golden("d_sums");
  for (const auto& row : sums.rows()) {
    const int j = static_cast<int>(row.index);
    const int L = std::stoi(row.fields.at(0));
    const BigReal z = E.z_of(j);
    CAPTURE(j);
    CHECK(verify::compare_printed("d_sums", j, "D_L", eigen::eval_poly(tabulated, L, z * z), row.fields.at(1)).pass);
  }
}
