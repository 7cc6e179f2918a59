// Numerical probe of the logarithmic Gauss map
//   gamma(z) = [z_1 df/dz_1 : ... : z_m df/dz_m]
// of a real Laurent hypersurface f = 0 in the complex torus: generic
// evaluation, closed-form fiber solving for two parametric families, and an
// empirical real-fiberedness verdict over randomly sampled real targets.

#pragma once

#include "latgauss/polytope.hpp"

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace latgauss {

using Complex = std::complex<double>;

// A complex value counts as real when |Im| <= kRealityTol * (1 + |Re|).
inline constexpr double kRealityTol = 1e-8;
// Returned fiber points satisfy |f(z)| <= kResidualTol * max|coefficient|.
inline constexpr double kResidualTol = 1e-9;
// ... and sit within this Fubini-Study sine distance of the target.
inline constexpr double kProjectiveTol = 1e-8;
// Structural quantities (target coordinate sum, last coordinate, quadratic
// leading coefficient) below this threshold, measured on the sup-norm-1
// target representative, classify a target as degenerate: its fiber
// approaches the toric boundary and the closed forms lose precision.
inline constexpr double kDegenerateDelta = 0.03;

struct Monomial {
  IntVec exponent;     // in Z^m, negative entries allowed
  double coefficient;  // real, nonzero
};

// f(z) = sum_a c_a z^a over distinct integer exponent vectors. At least two
// monomials are required: a single monomial never vanishes on the torus, so
// it cuts out no hypersurface there.
class RealLaurentPolynomial {
 public:
  RealLaurentPolynomial(std::size_t num_vars, std::vector<Monomial> monomials);

  std::size_t num_vars() const { return num_vars_; }
  const std::vector<Monomial>& monomials() const { return monomials_; }
  double coefficient_scale() const;  // max |c_a|

  Complex operator()(const std::vector<Complex>& z) const;

 private:
  std::size_t num_vars_;
  std::vector<Monomial> monomials_;
};

// Convex hull of the exponent vectors.
LatticePolytope newton_polytope(const RealLaurentPolynomial& f);

// A point of complex projective space, stored as homogeneous coordinates.
class ProjectivePoint {
 public:
  explicit ProjectivePoint(std::vector<Complex> coords);  // not all zero

  const std::vector<Complex>& coords() const { return coords_; }

  // True when some scalar multiple has all coordinates real: on the
  // sup-norm-1 representative every pairwise product c_i * conj(c_j) must
  // have imaginary part within tol * (1 + |real part|).
  bool is_real(double tol = kRealityTol) const;

  // Real coordinates of the representative scaled by the largest-modulus
  // coordinate (which becomes exactly 1). Throws if !is_real(tol).
  std::vector<double> real_representative(double tol = kRealityTol) const;

  bool operator==(const ProjectivePoint&) const = default;

 private:
  std::vector<Complex> coords_;
};

// Sine of the principal angle between the two complex lines, in [0, 1].
double projective_distance(const ProjectivePoint& a, const ProjectivePoint& b);

// gamma_i(z) = z_i * (df/dz_i)(z) = sum_a c_a a_i z^a.
// Throws domain_error at a log-critical point (all image coordinates zero).
ProjectivePoint gauss_map(const RealLaurentPolynomial& f, const std::vector<Complex>& z);

// The two closed-form families.
//   hyperplane: f = c_0 + c_1 z_1 + ... + c_m z_m, params (c_0,...,c_m),
//               m >= 1, every c_i nonzero.
//   example19:  f = z_3^2 + a z_3 + b z_1 + c z_2 + d, params (a,b,c,d),
//               b and c nonzero.
enum class ProbeFamily { hyperplane, example19 };

std::string family_name(ProbeFamily family);
ProbeFamily family_from_name(const std::string& name);  // invalid_argument on unknown

// The family's defining polynomial; validates params.
RealLaurentPolynomial family_polynomial(ProbeFamily family, const std::vector<double>& params);

struct FiberPoint {
  std::vector<Complex> z;
  bool is_real = false;  // every coordinate individually real

  bool operator==(const FiberPoint&) const = default;
};

struct FiberProbeResult {
  // Sorted by (Re, Im) of the coordinate the closed form solves for.
  std::vector<FiberPoint> points;
  // A structural threshold was hit, or a solution left the torus (a
  // coordinate vanished) and was dropped: the fiber degree is not generic.
  bool degenerate = false;

  bool operator==(const FiberProbeResult&) const = default;
};

// Solves gamma(z) = target on f = 0. The target must be numerically real
// (invalid_argument otherwise). Every returned point satisfies the residual
// and projective-distance bounds above; a violation is an internal error
// (logic_error), never silent bad data.
FiberProbeResult fiber_probe(ProbeFamily family, const std::vector<double>& params,
                             const ProjectivePoint& target);

struct Witness {
  std::vector<double> target;  // sampled coordinates, as drawn
  std::vector<Complex> point;  // non-real fiber point over that target
  double residual = 0.0;         // |f(point)|
  double target_distance = 0.0;  // projective distance of gamma(point) to target

  bool operator==(const Witness&) const = default;
};

// Minimum of the z3-discriminant a^2(1+u)^2 - 4d(1+2u) of the example19
// fiber quadratic over a dense grid of the real target ratio
// u = (w1+w2)/w3. Negative values flag target regions with non-real fibers.
struct DiscriminantScan {
  double lo = 0.0, hi = 0.0;    // grid interval
  std::size_t samples = 0;      // grid size
  double min_value = 0.0;
  double argmin = 0.0;

  bool operator==(const DiscriminantScan&) const = default;
};

struct ProbeReport {
  std::string family;
  std::vector<double> params;
  std::size_t targets_tested = 0;
  std::size_t degenerate_targets = 0;  // fiber degree dropped; excluded below
  bool fibers_all_real = false;        // over non-degenerate targets
  // Mode of fiber sizes over non-degenerate targets (ties to the larger
  // size; 0 when every target degenerated).
  std::size_t empirical_degree = 0;
  // Present iff fibers_all_real is false: lexicographically least offending
  // target and its first non-real point.
  std::optional<Witness> witness;
  std::optional<DiscriminantScan> discriminant_scan;  // example19 only
  std::size_t forward_checks = 0;  // real points of X where gamma was confirmed real

  bool operator==(const ProbeReport&) const = default;
};

// Samples n_targets real targets with coordinates uniform in [-1,1] (each
// target's generator is reseeded deterministically from seed, so the result
// is a pure function of (family, params, n_targets, seed)), probes every
// fiber, and aggregates. Also samples real points of the hypersurface
// directly and asserts gamma is real there; since f is real this can only
// fail through a numerics bug, so a failure throws logic_error.
ProbeReport real_fibered_verdict(ProbeFamily family, const std::vector<double>& params,
                                 std::size_t n_targets, std::uint64_t seed);

}  // namespace latgauss
