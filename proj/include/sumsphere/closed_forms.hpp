#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "sumsphere/group.hpp"

namespace sumsphere {

using BigInt = boost::multiprecision::cpp_int;

/// Exact binomial coefficient; zero when k < 0 or k > n (including n < 0).
BigInt binomial(std::int64_t n, std::int64_t k);

/// Delannoy number a(m, s) = sum_i C(s,i) C(m,i) 2^i: the number of integer vectors in Z^m
/// with 1-norm at most s.
BigInt delannoy(std::int64_t m, std::int64_t s);

/// Number of vectors in Z^m with 1-norm exactly h, a(m,h) - a(m,h-1).
BigInt exact_norm_count(std::int64_t m, std::int64_t h);

/// a(m, s) for 0 <= m, s <= bound, filled by a(m,s) = a(m-1,s) + a(m-1,s-1) + a(m,s-1).
class DelannoyTable {
 public:
  explicit DelannoyTable(std::int64_t bound);

  std::int64_t bound() const noexcept { return bound_; }
  const BigInt& at(std::int64_t m, std::int64_t s) const;

 private:
  std::int64_t bound_;
  std::vector<BigInt> values_;
};

/// A fraction in lowest terms with a positive denominator.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  bool is_integer() const noexcept { return den == 1; }
  double to_double() const noexcept { return static_cast<double>(num) / static_cast<double>(den); }
  friend bool operator==(const Rational&, const Rational&) = default;
};

/// tau(G,1) = |G| - 1 and tau(G,2) = (|G| - |L|)/2 with L = {g : 2g = 0}.
std::int64_t tau_closed(const GroupSpec& group, int t);

/// Maximum size of a 3-independent set in Z_n: floor(n/4) for even n, (1 + 1/p) n/6 for odd n
/// whose smallest prime divisor congruent to 5 mod 6 is p, floor(n/6) otherwise.
Rational tau3_cyclic(std::int64_t n);

/// phi(G,1) = (|G| + |L| - 2)/2.
std::int64_t phi_closed(const GroupSpec& group);

/// A(d,k) = C(d + floor(k/2), d) + C(d + floor((k-1)/2), d).
std::int64_t delsarte_A(std::int64_t d, std::int64_t k);

/// Dimension of the space of degree-k homogeneous harmonic polynomials on S^d.
std::int64_t dim_harm(std::int64_t d, std::int64_t k);

struct TwoDistanceBounds {
  std::int64_t n_d;  // (d^2 + 5d + 4)/2
  std::int64_t t_d;  // (d^2 + 3d + 2)/2, edge midpoints of the regular simplex
};
TwoDistanceBounds two_distance_bounds(std::int64_t d);

struct RealBounds {
  double lower;
  double upper;
};

/// (1/(t floor((t+1)/2)) - eps) n^(1/floor(t/2)) and (floor(t/2)!/2) n^(1/floor(t/2)).
RealBounds tau_asymptotic_bounds(std::int64_t n, int t, double eps);

/// (1/sqrt(2) - eps) sqrt(n) and (1 + delta) sqrt(n).
RealBounds phi2_asymptotic_bounds(std::int64_t n, double eps, double delta);

/// Open interval of sizes N for which no odd-size spherical 3-design exists on S^d.
struct OpenInterval {
  double lower;
  double upper;
  bool contains(double x) const noexcept { return lower < x && x < upper; }
};
OpenInterval design3_nonexistence_interval(std::int64_t d);

/// Odd N inside design3_nonexistence_interval(d).
std::vector<std::int64_t> design3_excluded_odd_sizes(std::int64_t d);

}  // namespace sumsphere
