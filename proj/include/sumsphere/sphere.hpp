#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "sumsphere/closed_forms.hpp"
#include "sumsphere/errors.hpp"
#include "sumsphere/sumset.hpp"

namespace sumsphere::sphere {

inline constexpr double kDefaultTolerance = 1e-9;

/// N points on the unit sphere S^d, stored column-wise in a (d+1) x N matrix.
template <typename Scalar = double>
class PointSet {
 public:
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

  /// Throws DomainError if there are no points, d < 1, or a point is off the sphere by more
  /// than `tolerance`.
  explicit PointSet(Matrix points, Scalar tolerance = Scalar(kDefaultTolerance))
      : points_(std::move(points)), tolerance_(tolerance) {
    if (tolerance_ < Scalar(0)) throw DomainError("tolerance must be non-negative");
    if (points_.cols() < 1) throw DomainError("a point set needs at least one point");
    if (points_.rows() < 2) throw DomainError("points need at least two coordinates (d >= 1)");
    for (Eigen::Index j = 0; j < points_.cols(); ++j) {
      using std::abs;
      if (abs(points_.col(j).norm() - Scalar(1)) > tolerance_) {
        throw DomainError("point " + std::to_string(j) + " is not on the unit sphere");
      }
    }
  }

  int dimension() const noexcept { return static_cast<int>(points_.rows()) - 1; }
  Eigen::Index size() const noexcept { return points_.cols(); }
  const Matrix& points() const noexcept { return points_; }
  auto point(Eigen::Index j) const { return points_.col(j); }
  Scalar tolerance() const noexcept { return tolerance_; }

  PointSet with_tolerance(Scalar tolerance) const { return PointSet(points_, tolerance); }

 private:
  Matrix points_;
  Scalar tolerance_;
};

/// Exponent vector of x_1^a_1 ... x_{d+1}^a_{d+1}.
struct Monomial {
  std::vector<int> exponents;

  int degree() const noexcept {
    int d = 0;
    for (auto e : exponents) d += e;
    return d;
  }
};

/// All monomials in `variables` variables with degree in [min_degree, max_degree].
inline std::vector<Monomial> monomials(int variables, int min_degree, int max_degree) {
  std::vector<Monomial> out;
  std::vector<int> e(static_cast<std::size_t>(variables), 0);
  for (int degree = std::max(min_degree, 0); degree <= max_degree; ++degree) {
    // Compositions of `degree` into `variables` parts.
    auto rec = [&](auto&& self, int i, int left) -> void {
      if (i == variables - 1) {
        e[static_cast<std::size_t>(i)] = left;
        out.push_back({e});
        return;
      }
      for (int v = left; v >= 0; --v) {
        e[static_cast<std::size_t>(i)] = v;
        self(self, i + 1, left - v);
      }
    };
    rec(rec, 0, degree);
  }
  return out;
}

/// Average of x^alpha over the uniform measure on S^d:
/// 0 if any exponent is odd, else prod (a_i - 1)!! / prod_{j < |a|/2} (d + 1 + 2j).
template <typename Scalar = double>
Scalar sphere_moment(int d, const Monomial& alpha) {
  if (static_cast<int>(alpha.exponents.size()) != d + 1) {
    throw DomainError("monomial arity must be d + 1");
  }
  Scalar value(1);
  int half = 0;
  for (auto a : alpha.exponents) {
    if (a % 2 != 0) return Scalar(0);
    for (int k = a - 1; k > 1; k -= 2) value *= Scalar(k);
    half += a / 2;
  }
  for (int j = 0; j < half; ++j) value /= Scalar(d + 1 + 2 * j);
  return value;
}

/// Average of x^alpha over the points of `x`.
template <typename Scalar>
Scalar point_average(const PointSet<Scalar>& x, const Monomial& alpha) {
  Eigen::Array<Scalar, 1, Eigen::Dynamic> values =
      Eigen::Array<Scalar, 1, Eigen::Dynamic>::Ones(x.size());
  for (std::size_t i = 0; i < alpha.exponents.size(); ++i) {
    const int a = alpha.exponents[i];
    if (a == 0) continue;
    auto row = x.points().row(static_cast<Eigen::Index>(i)).array();
    Eigen::Array<Scalar, 1, Eigen::Dynamic> power = row;
    for (int k = 1; k < a; ++k) power *= row;
    values *= power;
  }
  return values.mean();
}

template <typename Scalar>
struct DesignCheck {
  bool passed = false;
  Scalar max_residual = Scalar(0);
};

/// t-design test by monomial moments of degree 1..t against the sphere averages.
template <typename Scalar>
DesignCheck<Scalar> is_t_design_moments(const PointSet<Scalar>& x, int t) {
  if (t < 0) throw DomainError("t must be non-negative");
  DesignCheck<Scalar> check{true, Scalar(0)};
  const int d = x.dimension();
  for (const auto& alpha : monomials(d + 1, 1, t)) {
    using std::abs;
    const Scalar r = abs(point_average(x, alpha) - sphere_moment<Scalar>(d, alpha));
    check.max_residual = std::max(check.max_residual, r);
  }
  check.passed = check.max_residual <= x.tolerance();
  return check;
}

namespace detail {

// Evaluates each explicit degree-k harmonic basis polynomial at every point and returns the
// largest |average|.
template <typename Scalar>
Scalar harmonic_residual(const PointSet<Scalar>& x, int k) {
  const auto& p = x.points();
  const Eigen::Index vars = p.rows();
  Scalar worst(0);
  auto consider = [&](const auto& values) {
    using std::abs;
    worst = std::max(worst, Scalar(abs(values.mean())));
  };
  if (vars == 2) {
    // Re and Im of (x_1 + i x_2)^k.
    Eigen::Array<Scalar, 1, Eigen::Dynamic> re(p.cols());
    Eigen::Array<Scalar, 1, Eigen::Dynamic> im(p.cols());
    for (Eigen::Index j = 0; j < p.cols(); ++j) {
      const auto z = std::pow(std::complex<Scalar>(p(0, j), p(1, j)), k);
      re(j) = z.real();
      im(j) = z.imag();
    }
    consider(re);
    consider(im);
    return worst;
  }
  auto row = [&](Eigen::Index i) { return p.row(i).array(); };
  switch (k) {
    case 1:
      for (Eigen::Index i = 0; i < vars; ++i) consider(row(i));
      break;
    case 2:
      for (Eigen::Index i = 0; i + 1 < vars; ++i) {
        consider((row(i) * row(i) - row(i + 1) * row(i + 1)).eval());
      }
      for (Eigen::Index i = 0; i < vars; ++i) {
        for (Eigen::Index j = i + 1; j < vars; ++j) consider((row(i) * row(j)).eval());
      }
      break;
    case 3:
      for (Eigen::Index i = 0; i < vars; ++i) {
        for (Eigen::Index j = 0; j < vars; ++j) {
          if (i == j) continue;
          consider((row(i) * row(i) * row(i) - Scalar(3) * row(i) * row(j) * row(j)).eval());
        }
      }
      for (Eigen::Index i = 0; i < vars; ++i) {
        for (Eigen::Index j = i + 1; j < vars; ++j) {
          for (Eigen::Index l = j + 1; l < vars; ++l) {
            consider((row(i) * row(j) * row(l)).eval());
          }
        }
      }
      break;
    default:
      throw UnsupportedError("explicit harmonic bases above degree 3 exist only for d = 1");
  }
  return worst;
}

}  // namespace detail

/// t-design test through explicit bases of Harm_k(S^d), k = 1..t. Supports t <= 3, or any t
/// when d = 1; otherwise throws UnsupportedError.
template <typename Scalar>
DesignCheck<Scalar> is_t_design_harmonic(const PointSet<Scalar>& x, int t) {
  if (t < 0) throw DomainError("t must be non-negative");
  if (t > 3 && x.dimension() > 1) {
    throw UnsupportedError("harmonic test supports t <= 3 for d > 1; use the moment test");
  }
  DesignCheck<Scalar> check{true, Scalar(0)};
  for (int k = 1; k <= t; ++k) {
    check.max_residual = std::max(check.max_residual, detail::harmonic_residual(x, k));
  }
  check.passed = check.max_residual <= x.tolerance();
  return check;
}

template <typename Scalar>
struct DistanceSpectrum {
  std::vector<Scalar> distances;  // cluster means, increasing
  int s() const noexcept { return static_cast<int>(distances.size()); }
};

/// Distinct pairwise distances, merging sorted neighbours closer than the tolerance
/// (single linkage). Throws DomainError for fewer than two points or coincident points.
template <typename Scalar>
DistanceSpectrum<Scalar> distance_spectrum(const PointSet<Scalar>& x) {
  if (x.size() < 2) throw DomainError("distance spectrum needs at least two points");
  std::vector<Scalar> all;
  all.reserve(static_cast<std::size_t>(x.size() * (x.size() - 1) / 2));
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    for (Eigen::Index j = i + 1; j < x.size(); ++j) {
      const Scalar dist = (x.point(i) - x.point(j)).norm();
      if (dist <= x.tolerance()) {
        throw DomainError("points " + std::to_string(i) + " and " + std::to_string(j) +
                          " coincide");
      }
      all.push_back(dist);
    }
  }
  std::sort(all.begin(), all.end());
  DistanceSpectrum<Scalar> out;
  std::size_t start = 0;
  for (std::size_t i = 1; i <= all.size(); ++i) {
    if (i == all.size() || all[i] - all[i - 1] > x.tolerance()) {
      Scalar sum(0);
      for (std::size_t k = start; k < i; ++k) sum += all[k];
      out.distances.push_back(sum / Scalar(static_cast<double>(i - start)));
      start = i;
    }
  }
  return out;
}

struct DualityReport {
  std::int64_t size = 0;
  std::int64_t lower = 0;  // A(d, t)
  std::int64_t upper = 0;  // A(d, 2s)
  bool tight = false;      // t == 2s
};

/// Checks A(d,t) <= N <= A(d,2s) for a point set already verified as a t-design and an
/// s-distance set. A violation means one of those verifications is wrong.
template <typename Scalar>
DualityReport duality_check(const PointSet<Scalar>& x, int t, int s) {
  if (t < 0 || s < 1) throw DomainError("duality_check needs t >= 0 and s >= 1");
  DualityReport r;
  r.size = x.size();
  r.lower = delsarte_A(x.dimension(), t);
  r.upper = delsarte_A(x.dimension(), 2 * s);
  r.tight = t == 2 * s;
  if (r.size < r.lower || r.size > r.upper || t > 2 * s) {
    throw InternalInconsistencyError(
        "design/distance bounds violated: N=" + std::to_string(r.size) + ", A(d,t)=" +
        std::to_string(r.lower) + ", A(d,2s)=" + std::to_string(r.upper));
  }
  return r;
}

/// X(A,N): point j = 1..N has coordinate pairs (cos, sin)(2 pi j a_i / N) / sqrt(m),
/// a point set on S^{2m-1}.
template <typename Scalar = double>
PointSet<Scalar> construct_XAN(std::span<const std::int64_t> a, std::int64_t n,
                               Scalar tolerance = Scalar(kDefaultTolerance)) {
  if (a.empty()) throw DomainError("X(A,N) needs a nonempty A");
  if (n < 1) throw DomainError("X(A,N) needs N >= 1");
  const auto m = static_cast<Eigen::Index>(a.size());
  typename PointSet<Scalar>::Matrix points(2 * m, n);
  const Scalar scale = Scalar(1) / std::sqrt(Scalar(static_cast<double>(m)));
  const Scalar two_pi = Scalar(2) * std::numbers::pi_v<Scalar>;
  for (std::int64_t j = 1; j <= n; ++j) {
    for (Eigen::Index i = 0; i < m; ++i) {
      // Reduce j * a_i mod N first so the angle stays in [0, 2 pi).
      const auto r = mod(j * a[static_cast<std::size_t>(i)], n);
      const Scalar angle = two_pi * Scalar(static_cast<double>(r)) / Scalar(static_cast<double>(n));
      points(2 * i, j - 1) = scale * std::cos(angle);
      points(2 * i + 1, j - 1) = scale * std::sin(angle);
    }
  }
  return PointSet<Scalar>(std::move(points), tolerance);
}

/// X(A,N) for A given as a subset of a cyclic group Z_N.
template <typename Scalar = double>
PointSet<Scalar> construct_XAN(const Subset& a, Scalar tolerance = Scalar(kDefaultTolerance)) {
  if (!a.group().is_cyclic()) throw UnsupportedError("X(A,N) needs A in a cyclic group");
  std::vector<std::int64_t> residues(a.indices().begin(), a.indices().end());
  return construct_XAN<Scalar>(residues, a.group().order(), tolerance);
}

// Known configurations. All return points normalized to the unit sphere.

template <typename Scalar = double>
PointSet<Scalar> regular_polygon(std::int64_t n) {
  if (n < 1) throw DomainError("a polygon needs at least one vertex");
  const std::int64_t one = 1;
  return construct_XAN<Scalar>(std::span<const std::int64_t>(&one, 1), n);
}

/// The d + 2 vertices of a regular simplex inscribed in S^d.
template <typename Scalar = double>
PointSet<Scalar> regular_simplex(int d) {
  if (d < 1) throw DomainError("simplex needs d >= 1");
  using Matrix = typename PointSet<Scalar>::Matrix;
  const Eigen::Index k = d + 2;
  // Centered standard basis of R^{d+2}, expressed in an orthonormal basis of the hyperplane
  // sum x_i = 0.
  Matrix centered = Matrix::Identity(k, k);
  centered.array() -= Scalar(1) / Scalar(static_cast<double>(k));
  Eigen::HouseholderQR<Matrix> qr(centered);
  const Matrix q = qr.householderQ() * Matrix::Identity(k, k - 1);
  Matrix points = q.transpose() * centered;
  points.colwise().normalize();
  return PointSet<Scalar>(std::move(points));
}

template <typename Scalar = double>
PointSet<Scalar> from_rows(std::initializer_list<std::initializer_list<double>> rows) {
  const auto cols = static_cast<Eigen::Index>(rows.size());
  const auto dim = static_cast<Eigen::Index>(rows.begin()->size());
  typename PointSet<Scalar>::Matrix points(dim, cols);
  Eigen::Index j = 0;
  for (const auto& r : rows) {
    Eigen::Index i = 0;
    for (double v : r) points(i++, j) = Scalar(v);
    ++j;
  }
  points.colwise().normalize();
  return PointSet<Scalar>(std::move(points));
}

template <typename Scalar = double>
PointSet<Scalar> tetrahedron() {
  return from_rows<Scalar>({{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}});
}

template <typename Scalar = double>
PointSet<Scalar> octahedron() {
  return from_rows<Scalar>({{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}});
}

template <typename Scalar = double>
PointSet<Scalar> cube() {
  typename PointSet<Scalar>::Matrix points(3, 8);
  for (int j = 0; j < 8; ++j) {
    for (int i = 0; i < 3; ++i) points(i, j) = (j >> i) & 1 ? Scalar(1) : Scalar(-1);
  }
  points.colwise().normalize();
  return PointSet<Scalar>(std::move(points));
}

namespace detail {

// Cyclic permutations of (0, +-a, +-b).
template <typename Scalar>
void push_cyclic(std::vector<Eigen::Matrix<Scalar, 3, 1>>& out, Scalar a, Scalar b) {
  for (int sa : {1, -1}) {
    for (int sb : {1, -1}) {
      const Scalar x = Scalar(sa) * a;
      const Scalar y = Scalar(sb) * b;
      out.emplace_back(Scalar(0), x, y);
      out.emplace_back(x, y, Scalar(0));
      out.emplace_back(y, Scalar(0), x);
    }
  }
}

template <typename Scalar>
PointSet<Scalar> from_vectors(const std::vector<Eigen::Matrix<Scalar, 3, 1>>& v) {
  typename PointSet<Scalar>::Matrix points(3, static_cast<Eigen::Index>(v.size()));
  for (std::size_t j = 0; j < v.size(); ++j) {
    points.col(static_cast<Eigen::Index>(j)) = v[j].normalized();
  }
  return PointSet<Scalar>(std::move(points));
}

}  // namespace detail

template <typename Scalar = double>
PointSet<Scalar> icosahedron() {
  const Scalar golden = (Scalar(1) + std::sqrt(Scalar(5))) / Scalar(2);
  std::vector<Eigen::Matrix<Scalar, 3, 1>> v;
  detail::push_cyclic(v, Scalar(1), golden);
  return detail::from_vectors(v);
}

template <typename Scalar = double>
PointSet<Scalar> dodecahedron() {
  const Scalar golden = (Scalar(1) + std::sqrt(Scalar(5))) / Scalar(2);
  std::vector<Eigen::Matrix<Scalar, 3, 1>> v;
  for (int j = 0; j < 8; ++j) {
    v.emplace_back(j & 1 ? Scalar(1) : Scalar(-1), j & 2 ? Scalar(1) : Scalar(-1),
                   j & 4 ? Scalar(1) : Scalar(-1));
  }
  detail::push_cyclic(v, Scalar(1) / golden, golden);
  return detail::from_vectors(v);
}

/// Names: ngon(N), simplex(d), tetrahedron, octahedron, cube, icosahedron, dodecahedron.
PointSet<double> known_configuration(std::string_view name);

}  // namespace sumsphere::sphere
