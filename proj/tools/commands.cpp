#include "commands.hpp"

#include <cstdio>
#include <memory>
#include <regex>

#include "qwkb/coeffs/families.hpp"
#include "qwkb/coeffs/registry.hpp"
#include "qwkb/eigen/eigen.hpp"
#include "qwkb/errors.hpp"
#include "qwkb/oracle/reference.hpp"
#include "qwkb/sums/sums.hpp"
#include "qwkb/verify/verify.hpp"

namespace qwkb::cli {

using arith::BigReal;

namespace {

std::string sci(const BigReal& x, int digits) { return x.to_scientific(digits); }

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

Cell opt_cell(const std::optional<BigReal>& x, int digits) {
  if (!x) return std::monostate{};
  return sci(*x, digits);
}

Cell opt_cell(const std::optional<int>& x) {
  if (!x) return std::monostate{};
  return static_cast<long>(*x);
}

std::vector<int> orders(const RunConfig& config, int base) {
  if (!config.scan) return {base};
  const IndexRange r = parse_scan(*config.scan, base);
  std::vector<int> out;
  for (int m = r.first; m <= r.last; ++m) out.push_back(m);
  return out;
}

void require_range(const IndexRange& r, int min, const char* what) {
  if (r.first < min) throw RangeError(std::string(what) + " must be at least " + std::to_string(min));
}

int parse_int(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const long v = std::stol(s, &used);
    if (used == s.size() && v >= -1000000 && v <= 1000000) return static_cast<int>(v);
  } catch (const std::exception&) {
  }
  throw ConfigError("bad " + what + ": '" + s + "'");
}

}  // namespace

void RunConfig::validate() const {
  arith::require_precision(precision_bits);
  if (digits && (*digits < 1 || *digits > max_digits()))
    throw ConfigError("digits must lie in 1.." + std::to_string(max_digits()) + " at " +
                      std::to_string(precision_bits) + " bits");
  if (order && *order < 0) throw ConfigError("order must be non-negative");
  if (sd_order && *sd_order < 0) throw ConfigError("sd-order must be non-negative");
}

IndexRange parse_range(const std::string& text) {
  const auto dots = text.find("..");
  IndexRange r;
  if (dots == std::string::npos) {
    r.first = r.last = parse_int(text, "range");
  } else {
    r.first = parse_int(text.substr(0, dots), "range");
    r.last = parse_int(text.substr(dots + 2), "range");
  }
  if (r.first > r.last) throw ConfigError("empty range '" + text + "'");
  return r;
}

IndexRange parse_scan(const std::string& text, int base) {
  static const std::regex end_re(R"(^\s*(?:(L)\s*(?:([+-])\s*(\d+))?|(\d+))\s*$)");
  const auto end = [&](const std::string& s) {
    std::smatch m;
    if (!std::regex_match(s, m, end_re)) throw ConfigError("bad scan bound '" + s + "'");
    if (m[4].matched) return parse_int(m[4].str(), "scan bound");
    int v = base;
    if (m[2].matched) v += (m[2].str() == "+" ? 1 : -1) * parse_int(m[3].str(), "scan bound");
    return v;
  };
  const auto dots = text.find("..");
  IndexRange r;
  if (dots == std::string::npos) {
    r.first = r.last = end(text);
  } else {
    r.first = end(text.substr(0, dots));
    r.last = end(text.substr(dots + 2));
  }
  if (r.first > r.last) throw ConfigError("empty scan '" + text + "'");
  if (r.first < 0) throw RangeError("scan reaches a negative order");
  return r;
}

Table cmd_coeff(const std::string& family, int n_max, const RunConfig& config) {
  config.validate();
  if (n_max < 0) throw RangeError("n_max must be non-negative");
  const auto set = coeffs::coefficient_set(config.precision_bits);
  const long bits = config.precision_bits;
  Table t;
  t.title = "coefficients " + family;
  if (family == "K") {
    if (n_max >= static_cast<int>(set->K.size()))
      throw CapacityError("K is generated to order " + std::to_string(set->K.size() - 1));
    t.columns = {"n", "value"};
    for (int n = 0; n <= n_max; ++n) t.add({static_cast<long>(n), set->K[static_cast<std::size_t>(n)].to_string()});
    return t;
  }
  static const std::pair<const char*, coeffs::SeriesKind> kinds[] = {
      {"a", coeffs::SeriesKind::A}, {"b", coeffs::SeriesKind::B}, {"bprime", coeffs::SeriesKind::Bprime},
      {"d", coeffs::SeriesKind::D}, {"h", coeffs::SeriesKind::H}, {"c", coeffs::SeriesKind::C},
      {"q", coeffs::SeriesKind::Q}, {"f", coeffs::SeriesKind::F}};
  const coeffs::AsymSeries* s = nullptr;
  for (const auto& [name, kind] : kinds)
    if (family == name) s = &set->get(kind);
  if (s == nullptr) throw ConfigError("unknown family '" + family + "' (expected a, b, bprime, d, h, c, q, f or K)");
  if (n_max > s->max_order())
    throw CapacityError("family " + family + " is generated to order " + std::to_string(s->max_order()));
  const bool with_ratio = family == "a" || family == "b";
  t.columns = {"n", "value"};
  if (with_ratio) t.columns.insert(t.columns.end(), {"ratio", "exact"});
  for (int n = 0; n <= n_max; ++n) {
    std::vector<Cell> row{static_cast<long>(n), sci(s->value(n), config.value_digits())};
    if (with_ratio) {
      if (n == 0) {
        row.emplace_back(std::monostate{});
      } else {
        const BigReal asym = family == "a" ? coeffs::asym_a(n, bits) : coeffs::asym_b(n, bits);
        row.emplace_back(sci(asym / s->value(n), 6));
      }
      row.emplace_back(s->exact(n).to_string());
    }
    t.add(std::move(row));
  }
  return t;
}

Table cmd_eigen(const IndexRange& levels, const std::string& method, const RunConfig& config) {
  config.validate();
  require_range(levels, 0, "level");
  const eigen::EigenApprox E(coeffs::coefficient_set(config.precision_bits));
  const auto ref = std::make_shared<const oracle::ReferenceSpectrum>(oracle::embedded_reference(config.precision_bits));
  const auto with_error = [&](eigen::EigenEstimate e) {
    if (e.level < ref->size()) e = eigen::EigenApprox::with_error(std::move(e), *ref);
    return e;
  };
  const int vd = config.value_digits();
  const int ed = config.error_digits();
  Table t;
  t.title = "eigenvalues " + method;
  t.columns = {"n", "method", "order", "sd_order", "value", "error"};

  if (method == "sd") {
    if (config.strategy != eigen::Strategy::LeastAddition)
      throw UnsupportedStrategyError("the subdominant correction is truncated at least addition only");
    for (int n = levels.first; n <= levels.last; ++n) {
      const eigen::LeastAddition la = E.sd_least_addition(n);
      const int base = config.order.value_or(la.order);
      for (int M : orders(config, config.scan ? la.order : base)) {
        t.add({static_cast<long>(n), method, static_cast<long>(M), std::monostate{}, sci(E.eps_sd(n, M), vd),
               std::monostate{}});
      }
      if (la.capped) t.notes.emplace_back("capped", "least addition at the series cap for n = " + std::to_string(n));
    }
    return t;
  }

  const eigen::Method m = eigen::parse_method(method);
  if (m == eigen::Method::SumDifference) throw ConfigError("use the sum command for sum differences");
  const eigen::TruncationStrategy strategy{config.strategy, config.strategy == eigen::Strategy::Empirical ? ref : nullptr};
  const auto estimate = [&](int n, int M) {
    switch (m) {
      case eigen::Method::WKB: return E.eps_wkb(n, M);
      case eigen::Method::BCWKB: return E.eps_bcwkb(n, M, config.sd_order);
      case eigen::Method::LinCorr: return E.eps_lincorr(n, M, config.sd_order);
      default: return E.eps_cwkb(n, M, config.sd_order);
    }
  };
  for (int n = levels.first; n <= levels.last; ++n) {
    int base = 0;
    if (config.scan) {
      base = E.wkb_least_addition(n).order;
    } else if (config.order) {
      base = *config.order;
    } else if (config.strategy == eigen::Strategy::Empirical) {
      if (n >= ref->size()) throw RangeError("no reference eigenvalue for level " + std::to_string(n));
      const int cap = E.coefficients().b.max_order();
      base = eigen::empirical_order([&](int M) { return estimate(n, M).value - ref->eigenvalue(n); }, 0, cap);
    } else {
      base = E.wkb_order(n, strategy);
      // Corrected methods stop one short of the plain WKB order.
      if (m != eigen::Method::WKB && base > 0) --base;
    }
    for (int M : orders(config, base)) {
      const eigen::EigenEstimate e = with_error(estimate(n, M));
      t.add({static_cast<long>(n), std::string(eigen::method_name(m)), static_cast<long>(e.order),
             opt_cell(e.sd_order), sci(e.value, vd), opt_cell(e.error, ed)});
    }
  }
  return t;
}

Table cmd_sum(const IndexRange& counts, const std::string& method, const RunConfig& config) {
  config.validate();
  const sums::SumApprox S(coeffs::coefficient_set(config.precision_bits));
  const auto ref = oracle::embedded_reference(config.precision_bits);
  const int vd = config.value_digits();
  const int ed = config.error_digits();
  Table t;
  t.title = "sums " + method;
  if (method == "sd") {
    require_range(counts, 0, "particle count");
    t.columns = {"N", "exact", "asymptotic"};
    for (int N = counts.first; N <= counts.last; ++N)
      t.add({static_cast<long>(N), sci(S.e_sd_exact(N), vd), sci(S.e_sd_asym(N), vd)});
    return t;
  }
  require_range(counts, 1, "particle count");
  const sums::Method m = sums::parse_method(method);
  if (config.strategy == eigen::Strategy::Asymptotic)
    throw UnsupportedStrategyError("asymptotic truncation is defined for eigenvalues only");
  t.columns = {"N", "method", "order", "value", "sd_value", "error"};
  std::vector<int> unconfirmed;
  for (int N = counts.first; N <= counts.last; ++N) {
    const int L = S.swkb_least_addition(N).order;
    std::vector<int> ms;
    if (config.scan) {
      ms = orders(config, L);
    } else if (config.order) {
      ms = {*config.order};
    } else if (config.strategy == eigen::Strategy::Empirical) {
      if (N > ref.size()) throw RangeError("no reference sum for N = " + std::to_string(N));
      const int cap = S.eigen().coefficients().c.max_order() - (m == sums::Method::HYP ? 2 : 0);
      ms = {eigen::empirical_order([&](int M) { return S.estimate(m, N, M).value - ref.partial_sum(N); }, 0, cap)};
    } else {
      ms = {-1};
    }
    for (int M : ms) {
      sums::SumEstimate e = S.estimate(m, N, M < 0 ? std::nullopt : std::optional<int>(M));
      if (N <= ref.size()) e = sums::SumApprox::with_error(std::move(e), ref);
      if (e.order_rule_unconfirmed) unconfirmed.push_back(N);
      t.add({static_cast<long>(N), std::string(sums::method_name(m)), static_cast<long>(e.order), sci(e.value, vd),
             opt_cell(e.sd_value, vd), opt_cell(e.error, ed)});
    }
  }
  if (!unconfirmed.empty()) {
    std::string list;
    for (int N : unconfirmed) list += (list.empty() ? "" : " ") + std::to_string(N);
    t.notes.emplace_back("order_rule_unconfirmed", "default order below N = " +
                                                       std::to_string(sums::SumApprox::kOrderRuleFrom) + " for N = " + list);
  }
  return t;
}

VerifyResult cmd_verify(const std::string& suite, const RunConfig& config) {
  config.validate();
  const long bits = config.precision_bits;
  std::vector<verify::Report> reports;
  const bool all = suite == "all";
  if (!all && suite != "coeffs" && suite != "eigen" && suite != "sums" && suite != "oracle")
    throw ConfigError("unknown suite '" + suite + "' (expected coeffs, eigen, sums, oracle or all)");
  if (all || suite == "coeffs") reports.push_back(verify::verify_coeffs(bits));
  if (all || suite == "eigen") reports.push_back(verify::verify_eigen(bits));
  if (all || suite == "sums") reports.push_back(verify::verify_sums(bits));
  if (all || suite == "oracle") reports.push_back(verify::verify_oracle(oracle::OracleConfig{}, config.cache_dir));

  VerifyResult r;
  r.table.title = "verify " + suite;
  r.table.columns = {"suite", "table", "index", "column", "expected", "computed", "status", "abs_dev", "rel_dev"};
  r.passed = true;
  for (const auto& rep : reports) {
    for (const auto& c : rep.checks)
      r.table.add({rep.suite, c.table, c.index, c.column, c.expected, c.computed, std::string(c.pass ? "pass" : "FAIL"),
                   sci(c.abs_dev), sci(c.rel_dev)});
    r.table.notes.emplace_back(rep.suite, std::to_string(rep.checks.size()) + " cells, " +
                                              std::to_string(rep.mismatches()) + " mismatches, worst abs " +
                                              sci(rep.worst_abs()) + ", worst rel " + sci(rep.worst_rel()));
    r.passed = r.passed && rep.passed();
  }
  r.table.notes.emplace_back("status", r.passed ? "pass" : "FAIL");
  return r;
}

}  // namespace qwkb::cli
