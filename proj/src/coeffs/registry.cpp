#include "qwkb/coeffs/registry.hpp"

#include <map>
#include <mutex>

#include "qwkb/coeffs/families.hpp"

namespace qwkb::coeffs {

const AsymSeries& CoefficientSet::get(SeriesKind kind) const {
  switch (kind) {
    case SeriesKind::A: return a;
    case SeriesKind::B: return b;
    case SeriesKind::Bprime: return bprime;
    case SeriesKind::D: return d;
    case SeriesKind::H: return h;
    case SeriesKind::C: return c;
    case SeriesKind::Q: return q;
    case SeriesKind::F: return f;
  }
  return a;
}

namespace {

struct ExactBase {
  AsymSeries a, b, d;
  std::vector<arith::Rational> K;
};

// Exact families do not depend on precision; their stored numeric values are
// only used as placeholders and re-evaluated per precision.
const ExactBase& exact_base() {
  static const ExactBase base = [] {
    constexpr long kBits = arith::kMinPrecisionBits;
    AsymSeries a = gen_a(kCoeffCap, kBits);
    auto [b, d] = gen_b_and_d(a, kCoeffCap, kBits);
    return ExactBase{std::move(a), std::move(b), std::move(d), gen_K(kCoeffCap)};
  }();
  return base;
}

AsymSeries at_precision(const AsymSeries& s, long bits) {
  std::vector<arith::BigReal> v;
  for (const auto& e : s.exact_values()) v.push_back(e.eval(bits));
  return AsymSeries(s.kind(), std::move(v), s.exact_values());
}

}  // namespace

std::shared_ptr<const CoefficientSet> coefficient_set(long bits) {
  arith::require_precision(bits);
  static std::mutex mutex;
  static std::map<long, std::shared_ptr<const CoefficientSet>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  if (auto it = cache.find(bits); it != cache.end()) return it->second;
  const ExactBase& base = exact_base();
  AsymSeries a = at_precision(base.a, bits);
  AsymSeries b = at_precision(base.b, bits);
  AsymSeries d = at_precision(base.d, bits);
  AsymSeries h = gen_h(b, d, 2 * kCoeffCap, bits);
  AsymSeries f = gen_f(h, bits);
  AsymSeries bp = gen_bprime(b);
  AsymSeries c = gen_c(b, base.K, kCoeffCap, bits);
  AsymSeries q = gen_q(b, kCoeffCap, bits);
  auto set = std::make_shared<const CoefficientSet>(CoefficientSet{bits, std::move(a), std::move(b), std::move(bp),
                                                                   std::move(d), std::move(h), std::move(c),
                                                                   std::move(q), std::move(f), base.K});
  cache.emplace(bits, set);
  return set;
}

}  // namespace qwkb::coeffs
