#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "sumsphere/closed_forms.hpp"
#include "sumsphere/errors.hpp"

using namespace sumsphere;

TEST_CASE("binomial") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(5, 6) == 0);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(-2, 1) == 0);
  CHECK(binomial(60, 30) == BigInt("118264581564861424"));
}

TEST_CASE("Delannoy numbers") {
  CHECK(delannoy(2, 3) == 25);
  CHECK(delannoy(3, 2) == 25);
  CHECK(delannoy(3, 1) == 7);
  CHECK(delannoy(0, 7) == 1);
  CHECK(delannoy(30, 30) == BigInt("9642641465118083682429"));
  const DelannoyTable table(30);
  for (std::int64_t m = 0; m <= 30; ++m) {
    for (std::int64_t s = 0; s <= 30; ++s) {
      CAPTURE(m);
      CAPTURE(s);
      CHECK(table.at(m, s) == delannoy(m, s));
      CHECK(delannoy(m, s) == delannoy(s, m));
    }
  }
  for (std::int64_t s = 0; s <= 30; ++s) {
    CHECK(delannoy(1, s) == 2 * s + 1);
    CHECK(delannoy(2, s) == 2 * s * s + 2 * s + 1);
  }
  CHECK(exact_norm_count(2, 0) == 1);
  CHECK(exact_norm_count(2, 3) == 12);
  CHECK_THROWS_AS(table.at(31, 0), DomainError);
}

TEST_CASE("Delannoy numbers count lattice points") {
  for (int m = 0; m <= 4; ++m) {
    for (int s = 0; s <= 4; ++s) {
      // Points of Z^m with 1-norm <= s.
      std::int64_t count = 0;
      std::vector<int> v(static_cast<std::size_t>(m), -s);
      while (true) {
        int norm = 0;
        for (int x : v) norm += std::abs(x);
        if (norm <= s) ++count;
        std::size_t i = 0;
        while (i < v.size() && ++v[i] > s) v[i++] = -s;
        if (i == v.size()) break;
      }
      CHECK(delannoy(m, s) == count);
    }
  }
}

TEST_CASE("tau and phi closed forms") {
  CHECK(tau_closed(GroupSpec::cyclic(9), 1) == 8);
  CHECK(tau_closed(GroupSpec::cyclic(10), 2) == 4);
  CHECK(tau_closed(GroupSpec({2, 2}), 2) == 0);
  CHECK_THROWS_AS(tau_closed(GroupSpec::cyclic(9), 3), DomainError);
  CHECK(phi_closed(GroupSpec::cyclic(10)) == 5);
  CHECK(phi_closed(GroupSpec::cyclic(7)) == 3);
  CHECK(phi_closed(GroupSpec::cyclic(1)) == 0);

  for (const std::vector<std::int64_t>& orders :
       std::vector<std::vector<std::int64_t>>{{10}, {7}, {12}, {2, 2}, {2, 4}, {3, 3}, {2, 6}}) {
    const GroupSpec g(orders);
    const auto brute = oracle::small_norm_extremes(oracle::from(g));
    CAPTURE(g.to_string());
    CHECK(tau_closed(g, 1) == brute.tau1);
    CHECK(tau_closed(g, 2) == brute.tau2);
    CHECK(phi_closed(g) == brute.phi1);
  }
}

TEST_CASE("tau3 formula") {
  CHECK(tau3_cyclic(12) == Rational{3, 1});
  CHECK(tau3_cyclic(25) == Rational{5, 1});
  CHECK(tau3_cyclic(7) == Rational{1, 1});
  CHECK(tau3_cyclic(35) == Rational{7, 1});  // p = 5: 6/5 * 35/6
  CHECK(tau3_cyclic(11) == Rational{2, 1});
  CHECK(tau3_cyclic(2) == Rational{0, 1});
  CHECK_THROWS_AS(tau3_cyclic(1), DomainError);
  for (std::int64_t n = 2; n <= 2000; ++n) {
    CAPTURE(n);
    CHECK(tau3_cyclic(n).is_integer());
  }
}

TEST_CASE("Delsarte bound and harmonic dimensions") {
  CHECK(delsarte_A(2, 3) == 6);
  for (std::int64_t d = 1; d <= 50; ++d) {
    CHECK(delsarte_A(d, 3) == 2 * (d + 1));
    CHECK(delsarte_A(d, 0) == 1);
    CHECK(delsarte_A(d, 1) == 2);
    CHECK(delsarte_A(d, 2) == d + 2);
    CHECK(dim_harm(d, 0) == 1);
    CHECK(dim_harm(d, 1) == d + 1);
  }
  for (std::int64_t k = 1; k <= 20; ++k) {
    CHECK(dim_harm(1, k) == 2);
    CHECK(dim_harm(2, k) == 2 * k + 1);
  }
  CHECK(dim_harm(2, 2) == 5);
  // Harm_k(S^d) has dimension dim Pol_k - dim Pol_{k-2} in d+1 variables.
  for (std::int64_t d = 1; d <= 6; ++d) {
    std::int64_t total = 0;
    for (std::int64_t k = 0; k <= 6; ++k) {
      total += dim_harm(d, k);
      CHECK(total == static_cast<std::int64_t>(binomial(d + k, d) + binomial(d + k - 1, d)));
    }
  }
}

TEST_CASE("two-distance bounds") {
  CHECK(two_distance_bounds(1).n_d == 5);
  CHECK(two_distance_bounds(1).t_d == 3);
  CHECK(two_distance_bounds(5).n_d == 27);
  CHECK(two_distance_bounds(5).t_d == 21);
  CHECK(two_distance_bounds(21).n_d == 275);
  CHECK(two_distance_bounds(21).t_d == 253);
}

TEST_CASE("asymptotic bound evaluators") {
  const auto t4 = tau_asymptotic_bounds(10000, 4, 0.0);
  CHECK(t4.lower == doctest::Approx(12.5));
  CHECK(t4.upper == doctest::Approx(100.0));
  const auto t2 = tau_asymptotic_bounds(100, 2, 0.0);
  CHECK(t2.lower == doctest::Approx(50.0));
  CHECK(t2.upper == doctest::Approx(50.0));
  const auto t3 = tau_asymptotic_bounds(100, 3, 0.0);
  CHECK(t3.upper == doctest::Approx(50.0));

  const auto p49 = phi2_asymptotic_bounds(49, 0.0, 0.0);
  CHECK(p49.lower == doctest::Approx(7.0 / std::sqrt(2.0)));
  CHECK(p49.upper == doctest::Approx(7.0));
  CHECK(phi2_asymptotic_bounds(1, 0.0, 0.0).lower == doctest::Approx(0.70710678));
  CHECK(phi2_asymptotic_bounds(36, 1.0 / std::sqrt(2.0), 0.0).lower == doctest::Approx(0.0));
}

TEST_CASE("3-design nonexistence interval") {
  const auto d2 = design3_nonexistence_interval(2);
  CHECK(d2.lower == 6.0);
  CHECK(d2.upper == doctest::Approx(7.0797).epsilon(1e-4));
  CHECK(design3_excluded_odd_sizes(2) == std::vector<std::int64_t>{7});
  CHECK(design3_excluded_odd_sizes(4) == std::vector<std::int64_t>{11});
  CHECK_FALSE(design3_nonexistence_interval(10).contains(27.0));
  CHECK(design3_nonexistence_interval(10).contains(23.0));
  CHECK_FALSE(d2.contains(6.0));
}
