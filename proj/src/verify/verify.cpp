#include "qwkb/verify/verify.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>

#include "qwkb/arith/special.hpp"
#include "qwkb/coeffs/families.hpp"
#include "qwkb/coeffs/golden.hpp"
#include "qwkb/coeffs/registry.hpp"
#include "qwkb/eigen/eigen.hpp"
#include "qwkb/errors.hpp"
#include "qwkb/oracle/reference.hpp"
#include "qwkb/sums/sums.hpp"

namespace qwkb::verify {

using arith::ExactCoeff;
using arith::Rational;
using coeffs::AsymSeries;
using coeffs::golden;
using coeffs::GoldenTable;

namespace {

// Working precision for parsing golden fields; far above any printed width.
constexpr long kParseBits = 512;

const std::string& field_of(const coeffs::GoldenRow& row, std::size_t col, const std::string& table) {
  if (col >= row.fields.size())
    throw ConfigError("golden table " + table + " row " + std::to_string(row.index) + " lacks column " +
                      std::to_string(col + 1));
  return row.fields[col];
}

long parse_long(const std::string& field, const std::string& table) {
  try {
    std::size_t used = 0;
    const long v = std::stol(field, &used);
    if (used == field.size()) return v;
  } catch (const std::exception&) {
  }
  throw ConfigError("golden table " + table + ": not an integer: '" + field + "'");
}

// Rows grouped by index in file order.
std::map<long, std::vector<const coeffs::GoldenRow*>> group_rows(const GoldenTable& t) {
  std::map<long, std::vector<const coeffs::GoldenRow*>> out;
  for (const auto& r : t.rows()) out[r.index].push_back(&r);
  return out;
}

void value_column(Report& rep, const GoldenTable& t, std::size_t col, const std::string& label,
                  const AsymSeries& s) {
  for (const auto& row : t.rows())
    rep.checks.push_back(
        compare_printed(t.id(), row.index, label, s.value(static_cast<int>(row.index)), field_of(row, col, t.id())));
}

// a_n = k s / (2^p l), s = 1 (n even) or 2 pi^2 / gamma^4 (n odd).
ExactCoeff a_from_table(long n, long p, const Rational& l, const Rational& k) {
  const Rational r = k / (l * pow(Rational(2), static_cast<int>(p)));
  return n % 2 == 0 ? ExactCoeff(r) : ExactCoeff::monomial(r * Rational(2), 2, -4);
}

// b_n = (-1)^floor(n/2) G_n / (9 pi^n) sum_m g_nm (gamma^2 / pi)^{4m}
ExactCoeff b_from_table(long n, const std::vector<std::string>& fields, const std::string& table) {
  if (fields.empty()) throw ConfigError("golden table " + table + " row " + std::to_string(n) + " is empty");
  Rational lead = Rational::parse(fields[0]) * Rational(1, 9);
  if ((n / 2) % 2 == 1) lead = -lead;
  ExactCoeff sum;
  for (std::size_t m = 1; m < fields.size(); ++m) {
    const int mm = static_cast<int>(m - 1);
    sum += ExactCoeff::monomial(Rational::parse(fields[m]), static_cast<int>(-n - 4 * mm), 8 * mm);
  }
  return sum * lead;
}

}  // namespace

std::size_t Report::mismatches() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.pass; }));
}

double Report::worst_abs() const {
  double w = 0.0;
  for (const auto& c : checks) w = std::max(w, c.abs_dev);
  return w;
}

double Report::worst_rel() const {
  double w = 0.0;
  for (const auto& c : checks) w = std::max(w, c.rel_dev);
  return w;
}

Report Report::only(std::string_view table) const {
  Report r{suite, {}};
  for (const auto& c : checks)
    if (c.table == table) r.checks.push_back(c);
  return r;
}

void Report::append(const Report& other) { checks.insert(checks.end(), other.checks.begin(), other.checks.end()); }

BigReal half_ulp(std::string_view field, long bits) {
  const auto epos = field.find_first_of("eE");
  const std::string_view mantissa = field.substr(0, epos);
  long exponent = 0;
  if (epos != std::string_view::npos) exponent = std::stol(std::string(field.substr(epos + 1)));
  long frac = 0;
  if (const auto dot = mantissa.find('.'); dot != std::string_view::npos)
    frac = static_cast<long>(std::count_if(mantissa.begin() + static_cast<long>(dot) + 1, mantissa.end(),
                                           [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }));
  return pow(BigReal(10, bits), exponent - frac) / 2L;
}

Check compare_absolute(std::string table, long index, std::string column, const BigReal& x, std::string_view field,
                       const BigReal& tolerance) {
  const long bits = std::max(kParseBits, x.precision());
  const BigReal expected(field, bits);
  const BigReal dev = abs(x - expected);
  Check c;
  c.table = std::move(table);
  c.index = index;
  c.column = std::move(column);
  c.expected = std::string(field);
  c.computed = x.to_scientific(std::max(GoldenTable::printed_digits(field), 1));
  c.pass = dev <= tolerance;
  c.abs_dev = dev.to_double();
  c.rel_dev = expected.is_zero() ? c.abs_dev : (dev / abs(expected)).to_double();
  return c;
}

Check compare_printed(std::string table, long index, std::string column, const BigReal& x, std::string_view field) {
  const long bits = std::max(kParseBits, x.precision());
  return compare_absolute(std::move(table), index, std::move(column), x, field, half_ulp(field, bits));
}

Check compare_text(std::string table, long index, std::string column, const std::string& computed,
                   std::string_view field) {
  Check c;
  c.table = std::move(table);
  c.index = index;
  c.column = std::move(column);
  c.expected = std::string(field);
  c.computed = computed;
  c.pass = computed == field;
  c.abs_dev = c.rel_dev = c.pass ? 0.0 : 1.0;
  return c;
}

Report verify_coeffs(long bits) {
  const auto set = coeffs::coefficient_set(bits);
  Report rep{"coeffs", {}};

  const GoldenTable& ta = golden("a");
  value_column(rep, ta, 0, "a_n", set->a);
  for (const auto& row : ta.rows()) {
    const int n = static_cast<int>(row.index);
    rep.checks.push_back(compare_printed(ta.id(), n, "a_n ratio", coeffs::asym_a(n, bits) / set->a.value(n),
                                         field_of(row, 1, ta.id())));
  }

  const GoldenTable& tax = golden("a_exact");
  for (const auto& row : tax.rows()) {
    const long n = row.index;
    const ExactCoeff expected = a_from_table(n, parse_long(field_of(row, 0, tax.id()), tax.id()),
                                             Rational::parse(field_of(row, 1, tax.id())),
                                             Rational::parse(field_of(row, 2, tax.id())));
    rep.checks.push_back(compare_text(tax.id(), n, "a_n exact", set->a.exact(static_cast<int>(n)).to_string(),
                                      expected.to_string()));
  }

  const GoldenTable& tb = golden("b");
  value_column(rep, tb, 0, "b_n", set->b);
  for (const auto& row : tb.rows()) {
    const int n = static_cast<int>(row.index);
    rep.checks.push_back(compare_printed(tb.id(), n, "b_n ratio", coeffs::asym_b(n, bits) / set->b.value(n),
                                         field_of(row, 1, tb.id())));
  }

  const GoldenTable& tbx = golden("b_exact");
  for (const auto& row : tbx.rows()) {
    const ExactCoeff expected = b_from_table(row.index, row.fields, tbx.id());
    rep.checks.push_back(compare_text(tbx.id(), row.index, "b_n exact",
                                      set->b.exact(static_cast<int>(row.index)).to_string(), expected.to_string()));
  }

  value_column(rep, golden("d"), 0, "d_n", set->d);
  value_column(rep, golden("h"), 0, "h_n", set->h);
  value_column(rep, golden("c"), 0, "c_n", set->c);
  value_column(rep, golden("q"), 0, "q_n", set->q);
  return rep;
}

Report verify_eigen(long bits) {
  const eigen::EigenApprox E(coeffs::coefficient_set(bits));
  const auto& set = E.coefficients();
  const auto ref = oracle::embedded_reference(bits);
  Report rep{"eigen", {}};

  const GoldenTable& td = golden("d_sums");
  for (const auto& row : td.rows()) {
    const int j = static_cast<int>(row.index);
    const int L = E.d_least_addition(j).order;
    const BigReal z = E.z_of(j);
    rep.checks.push_back(compare_text(td.id(), j, "L", std::to_string(L), field_of(row, 0, td.id())));
    rep.checks.push_back(compare_printed(td.id(), j, "D_L", eigen::eval_poly(set.d, L, z * z), field_of(row, 1, td.id())));
  }

  for (const char* id : {"eps_sd", "eps_sd_short"}) {
    const GoldenTable& ts = golden(id);
    for (const auto& row : ts.rows()) {
      const int n = static_cast<int>(row.index);
      const int L = E.sd_least_addition(n).order;
      rep.checks.push_back(compare_text(ts.id(), n, "L", std::to_string(L), field_of(row, 0, ts.id())));
      rep.checks.push_back(compare_printed(ts.id(), n, "eps_sd", E.eps_sd(n), field_of(row, 1, ts.id())));
    }
  }

  // Five rows per level: M = L - 2 .. L + 2 around the WKB least addition,
  // M' = L_SD + M - L.
  const GoldenTable& to = golden("eigen_orders");
  for (const auto& [j, rows] : group_rows(to)) {
    const int n = static_cast<int>(j);
    const int L = E.wkb_least_addition(n).order;
    const int LS = E.sd_least_addition(n).order;
    for (std::size_t k = 0; k < rows.size(); ++k) {
      const auto& row = *rows[k];
      const int M = L - 2 + static_cast<int>(k);
      const int Mp = LS + M - L;
      rep.checks.push_back(compare_text(to.id(), j, "M", std::to_string(M), field_of(row, 0, to.id())));
      rep.checks.push_back(compare_text(to.id(), j, "M'", std::to_string(Mp), field_of(row, 1, to.id())));
      const std::string tag = " M=" + std::to_string(M);
      rep.checks.push_back(compare_printed(to.id(), j, "WKB" + tag,
                                           *eigen::EigenApprox::with_error(E.eps_wkb(n, M), ref).error,
                                           field_of(row, 2, to.id())));
      rep.checks.push_back(compare_printed(to.id(), j, "CWKB" + tag,
                                           *eigen::EigenApprox::with_error(E.eps_cwkb(n, M, LS), ref).error,
                                           field_of(row, 3, to.id())));
      rep.checks.push_back(compare_printed(to.id(), j, "CWKB M'=" + std::to_string(Mp),
                                           *eigen::EigenApprox::with_error(E.eps_cwkb(n, L - 1, Mp), ref).error,
                                           field_of(row, 4, to.id())));
    }
  }
  return rep;
}

Report verify_sums(long bits) {
  const sums::SumApprox S(coeffs::coefficient_set(bits));
  const auto ref = oracle::embedded_reference(bits);
  Report rep{"sums", {}};

  const GoldenTable& ts = golden("sum_sd");
  for (const auto& row : ts.rows()) {
    const int N = static_cast<int>(row.index);
    rep.checks.push_back(compare_printed(ts.id(), N, "E_sd exact", S.e_sd_exact(N), field_of(row, 0, ts.id())));
    rep.checks.push_back(compare_printed(ts.id(), N, "E_sd asym", S.e_sd_asym(N), field_of(row, 1, ts.id())));
  }

  const GoldenTable& ta = golden("sum_sd_asym");
  for (const auto& row : ta.rows()) {
    const int N = static_cast<int>(row.index);
    rep.checks.push_back(compare_printed(ta.id(), N, "E_sd asym", S.e_sd_asym(N), field_of(row, 0, ta.id())));
  }

  // Five rows per particle count: M = L - 2 .. L + 2 around the even least addition.
  const GoldenTable& to = golden("sum_orders");
  for (const auto& [Nl, rows] : group_rows(to)) {
    const int N = static_cast<int>(Nl);
    const int L = S.swkb_least_addition(N).order;
    for (std::size_t k = 0; k < rows.size(); ++k) {
      const auto& row = *rows[k];
      const int M = L - 2 + static_cast<int>(k);
      const std::string tag = " M=" + std::to_string(M);
      rep.checks.push_back(compare_text(to.id(), N, "M", std::to_string(M), field_of(row, 0, to.id())));
      rep.checks.push_back(compare_printed(to.id(), N, "SWKB" + tag,
                                           *sums::SumApprox::with_error(S.e_swkb(N, M), ref).error,
                                           field_of(row, 1, to.id())));
      rep.checks.push_back(compare_printed(to.id(), N, "CSWKB" + tag,
                                           *sums::SumApprox::with_error(S.e_cswkb(N, M), ref).error,
                                           field_of(row, 2, to.id())));
      rep.checks.push_back(compare_printed(to.id(), N, "HYP" + tag,
                                           *sums::SumApprox::with_error(S.e_hyp(N, M), ref).error,
                                           field_of(row, 3, to.id())));
    }
  }
  return rep;
}

Report verify_oracle(const oracle::OracleConfig& config, const std::optional<std::filesystem::path>& cache_dir) {
  const oracle::ReferenceSpectrum spectrum =
      cache_dir ? oracle::cached_spectrum(config, *cache_dir) : oracle::solve_spectrum(config);
  const BigReal tol("1e-40", config.precision_bits);
  Report rep{"oracle", {}};
  const GoldenTable& t = golden("eigenvalues");
  for (const auto& row : t.rows()) {
    const int n = static_cast<int>(row.index);
    if (n >= spectrum.size()) throw CapacityError("oracle spectrum lacks level " + std::to_string(n));
    rep.checks.push_back(compare_absolute(t.id(), n, "eps_n", spectrum.eigenvalue(n), field_of(row, 0, t.id()), tol));
  }
  return rep;
}

}  // namespace qwkb::verify
