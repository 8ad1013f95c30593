#include "haar/census.hpp"

#include "haar/error.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <stdexcept>

namespace haar {

namespace {

using Float50 = boost::multiprecision::cpp_bin_float_50;

void check_eps(double eps)
{
  if (!(eps > 0.0 && eps <= 0.1))
    throw PreconditionError("eps must lie in (0, 0.1]");
}

Float50 exact_eps(double eps)
{
  // 0.1 as a double is not 0.1; snap to 12 decimals so eps=0.1 is exact.
  return Float50(static_cast<long long>(std::llround(static_cast<long double>(eps) * 1e12L))) / Float50(1000000000000LL);
}

bool neps_inequality_holds(const Float50 & n, const Float50 & eps)
{
  using boost::multiprecision::exp;
  using boost::multiprecision::log;
  const Float50 ln_n = log(n);
  const Float50 L = ln_n / boost::math::constants::ln_two<Float50>();
  const Float50 t = exp((Float50(0.5) - eps) * ln_n);
  const Float50 u = t + L;
  const Float50 lhs = (6 + 2 * L) * u * u + (1 - L) * u + L * L + 2 * L;
  const Float50 rhs = exp((1 - eps) * ln_n);
  return lhs < rhs;
}

Float50 pow2(const Float50 & x)
{
  return boost::multiprecision::exp(x * boost::math::constants::ln_two<Float50>());
}

}  // namespace

bool neps_inequality_holds_at(const BigNat & n, double eps)
{
  check_eps(eps);
  if (n < 2)
    throw PreconditionError("inequality is evaluated for n >= 2");
  return neps_inequality_holds(Float50(n), exact_eps(eps));
}

bool neps_inequality_holds_at_log2(double log2_n, double eps)
{
  check_eps(eps);
  if (!(log2_n >= 1.0))
    throw PreconditionError("inequality is evaluated for n >= 2");
  return neps_inequality_holds(pow2(Float50(log2_n)), exact_eps(eps));
}

BoundReport eval_bounds(long double n, double eps, int m)
{
  check_eps(eps);
  if (!(n >= 2))
    throw PreconditionError("bounds need n >= 2");
  if (m < 1)
    throw PreconditionError("bounds need m >= 1");
  BoundReport b;
  b.n = n;
  b.eps = eps;
  b.m = m;
  const long double L = std::log2(n);
  const long double L2n = std::log2(2 * n);
  const long double lead = std::exp2((0.5L - eps) * L) / (24.0L * std::pow(L, 2.5L));
  b.f_eps = lead - 0.75L * L * L - 15.0L;
  b.h_eps = lead - L2n * L2n - 0.75L * L * L - 2.0L * L - 15.0L;
  // Kept in log form: 2^{n - f} overflows every floating type long before n does.
  b.haar_bound_log2 = n - b.f_eps;
  b.msr_bound = 1.0L - static_cast<long double>(m) * m / std::sqrt(n);
  b.neps_inequality_holds = neps_inequality_holds(Float50(n), exact_eps(eps));
  b.haar_bound_vacuous = b.f_eps <= 0;
  b.msr_bound_vacuous = b.msr_bound <= 0;
  return b;
}

NepsResult find_n_eps(double eps, const NepsConfig & config)
{
  check_eps(eps);
  if (config.scan_step_log2 <= 0 || config.ceiling_log2 <= 1 || config.verify_points < 1)
    throw PreconditionError("bad n_eps scan configuration");
  const Float50 e = exact_eps(eps);

  // Geometric scan for the last failing sample point.
  double last_fail = -1;
  const auto steps = static_cast<long>(std::ceil((config.ceiling_log2 - 1.0) / config.scan_step_log2));
  for (long k = 0; k <= steps; ++k) {
    double x = std::min(1.0 + static_cast<double>(k) * config.scan_step_log2, config.ceiling_log2);
    if (!neps_inequality_holds(pow2(Float50(x)), e))
      last_fail = x;
  }
  if (last_fail >= config.ceiling_log2)
    throw std::runtime_error("inequality still fails at 2^" + std::to_string(config.ceiling_log2) + "; boundary not bracketed");

  NepsResult r;
  r.ceiling_log2 = config.ceiling_log2;
  if (last_fail < 0) {
    r.n_eps = 2;
    r.last_failure = 1;
  } else {
    // Integer bisection between a failing and a holding point.
    BigNat lo = static_cast<BigNat>(boost::multiprecision::floor(pow2(Float50(last_fail))));
    BigNat hi = static_cast<BigNat>(boost::multiprecision::ceil(pow2(Float50(last_fail + config.scan_step_log2)))) + 1;
    if (lo < 2)
      lo = 2;
    if (neps_inequality_holds(Float50(lo), e))
      throw std::runtime_error("scan bracket lower end does not fail");
    while (hi - lo > 1) {
      BigNat mid = (lo + hi) / 2;
      if (neps_inequality_holds(Float50(mid), e))
        hi = mid;
      else
        lo = mid;
    }
    r.n_eps = hi;
    r.last_failure = lo;
  }
  r.log2_n_eps = static_cast<double>(boost::multiprecision::log2(Float50(r.n_eps)));

  // Verification pass above the returned value.
  if (!neps_inequality_holds(Float50(r.n_eps), e))
    throw std::runtime_error("inequality fails at the returned n_eps");
  const double start = r.log2_n_eps;
  for (int k = 1; k <= config.verify_points; ++k) {
    double x = start + (config.ceiling_log2 - start) * k / config.verify_points;
    if (!neps_inequality_holds(pow2(Float50(x)), e))
      throw std::runtime_error("inequality fails at 2^" + std::to_string(x) + " above the returned n_eps");
    ++r.verified_points;
  }
  return r;
}

nlohmann::ordered_json to_json(const BoundReport & b)
{
  nlohmann::ordered_json j;
  j["n"] = static_cast<double>(b.n);
  j["eps"] = b.eps;
  j["m"] = b.m;
  j["f_eps"] = static_cast<double>(b.f_eps);
  j["h_eps"] = static_cast<double>(b.h_eps);
  j["haar_bound_log2"] = static_cast<double>(b.haar_bound_log2);
  j["haar_bound_vacuous"] = b.haar_bound_vacuous;
  j["msr_bound"] = static_cast<double>(b.msr_bound);
  j["msr_bound_vacuous"] = b.msr_bound_vacuous;
  j["neps_inequality_holds"] = b.neps_inequality_holds;
  return j;
}

nlohmann::ordered_json to_json(const NepsResult & r)
{
  nlohmann::ordered_json j;
  j["n_eps"] = r.n_eps.str();
  j["log2_n_eps"] = r.log2_n_eps;
  j["last_failure"] = r.last_failure.str();
  j["verified_points"] = r.verified_points;
  j["ceiling_log2"] = r.ceiling_log2;
  j["definition"] = "1 + largest n at which the inequality fails; verified at geometric points up to the ceiling";
  return j;
}

}  // namespace haar
