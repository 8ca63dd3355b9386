#include "sumsphere/closed_forms.hpp"

#include <cmath>
#include <limits>
#include <numeric>

#include "sumsphere/errors.hpp"

namespace sumsphere {

namespace {

std::int64_t to_int64(const BigInt& v) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min()) {
    throw DomainError("value does not fit in 64 bits");
  }
  return v.convert_to<std::int64_t>();
}

}  // namespace

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt out = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    out *= n - k + i;
    out /= i;
  }
  return out;
}

BigInt delannoy(std::int64_t m, std::int64_t s) {
  if (m < 0 || s < 0) throw DomainError("Delannoy arguments must be non-negative");
  BigInt out = 0;
  BigInt power = 1;
  for (std::int64_t i = 0; i <= std::min(m, s); ++i) {
    out += binomial(s, i) * binomial(m, i) * power;
    power *= 2;
  }
  return out;
}

BigInt exact_norm_count(std::int64_t m, std::int64_t h) {
  if (h < 0) return 0;
  if (h == 0) return 1;
  return delannoy(m, h) - delannoy(m, h - 1);
}

DelannoyTable::DelannoyTable(std::int64_t bound) : bound_(bound) {
  if (bound < 0) throw DomainError("table bound must be non-negative");
  const auto w = static_cast<std::size_t>(bound + 1);
  values_.assign(w * w, 0);
  for (std::size_t m = 0; m < w; ++m) {
    for (std::size_t s = 0; s < w; ++s) {
      if (m == 0 || s == 0) {
        values_[m * w + s] = 1;
      } else {
        values_[m * w + s] = values_[(m - 1) * w + s] + values_[(m - 1) * w + s - 1] +
                             values_[m * w + s - 1];
      }
    }
  }
}

const BigInt& DelannoyTable::at(std::int64_t m, std::int64_t s) const {
  if (m < 0 || s < 0 || m > bound_ || s > bound_) throw DomainError("Delannoy index out of table");
  const auto w = static_cast<std::size_t>(bound_ + 1);
  return values_[static_cast<std::size_t>(m) * w + static_cast<std::size_t>(s)];
}

std::int64_t tau_closed(const GroupSpec& group, int t) {
  switch (t) {
    case 1:
      return group.order() - 1;
    case 2:
      return (group.order() - self_inverse_count(group)) / 2;
    default:
      throw DomainError("closed form for tau(G,t) is only available for t = 1, 2");
  }
}

Rational tau3_cyclic(std::int64_t n) {
  if (n < 2) throw DomainError("tau3_cyclic needs n >= 2");
  if (n % 2 == 0) return {n / 4, 1};
  // Smallest prime divisor p = 5 (mod 6); prime divisors come out in increasing order.
  std::int64_t p = 0;
  std::int64_t rest = n;
  for (std::int64_t q = 3; q * q <= rest && p == 0; q += 2) {
    if (rest % q != 0) continue;
    if (q % 6 == 5) p = q;
    while (rest % q == 0) rest /= q;
  }
  if (p == 0 && rest > 1 && rest % 6 == 5) p = rest;
  if (p == 0) return {n / 6, 1};
  // (1 + 1/p) n / 6 = (p + 1) n / (6p)
  std::int64_t num = (p + 1) * n;
  std::int64_t den = 6 * p;
  const auto g = std::gcd(num, den);
  return {num / g, den / g};
}

std::int64_t phi_closed(const GroupSpec& group) {
  return (group.order() + self_inverse_count(group) - 2) / 2;
}

std::int64_t delsarte_A(std::int64_t d, std::int64_t k) {
  if (d < 1 || k < 0) throw DomainError("delsarte_A needs d >= 1 and k >= 0");
  // floor((k-1)/2) for k = 0 is -1, giving C(d-1, d) = 0.
  const auto half_down = k / 2;
  const auto half_odd = k == 0 ? -1 : (k - 1) / 2;
  return to_int64(binomial(d + half_down, d) + binomial(d + half_odd, d));
}

std::int64_t dim_harm(std::int64_t d, std::int64_t k) {
  if (d < 1 || k < 0) throw DomainError("dim_harm needs d >= 1 and k >= 0");
  return to_int64(binomial(d + k, d) - binomial(d + k - 2, d));
}

TwoDistanceBounds two_distance_bounds(std::int64_t d) {
  if (d < 1) throw DomainError("two_distance_bounds needs d >= 1");
  return {(d * d + 5 * d + 4) / 2, (d * d + 3 * d + 2) / 2};
}

RealBounds tau_asymptotic_bounds(std::int64_t n, int t, double eps) {
  if (t < 2 || n < 2) throw DomainError("tau_asymptotic_bounds needs t >= 2 and n >= 2");
  const int half = t / 2;
  const double scale = std::pow(static_cast<double>(n), 1.0 / half);
  double factorial = 1.0;
  for (int i = 2; i <= half; ++i) factorial *= i;
  return {(1.0 / (t * ((t + 1) / 2)) - eps) * scale, factorial / 2.0 * scale};
}

RealBounds phi2_asymptotic_bounds(std::int64_t n, double eps, double delta) {
  if (n < 1) throw DomainError("phi2_asymptotic_bounds needs n >= 1");
  const double root = std::sqrt(static_cast<double>(n));
  return {(1.0 / std::sqrt(2.0) - eps) * root, (1.0 + delta) * root};
}

OpenInterval design3_nonexistence_interval(std::int64_t d) {
  if (d < 1) throw DomainError("design3_nonexistence_interval needs d >= 1");
  const double dd = static_cast<double>(d + 1);
  return {2.0 * dd, (1.0 + std::cbrt(2.0)) * dd + 0.300176};
}

std::vector<std::int64_t> design3_excluded_odd_sizes(std::int64_t d) {
  const auto interval = design3_nonexistence_interval(d);
  std::vector<std::int64_t> out;
  for (auto n = static_cast<std::int64_t>(std::floor(interval.lower)) + 1;
       static_cast<double>(n) < interval.upper; ++n) {
    if (n % 2 == 1 && interval.contains(static_cast<double>(n))) out.push_back(n);
  }
  return out;
}

}  // namespace sumsphere
