#include "latgauss/gaussmap.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

namespace latgauss {

namespace {

using ComplexL = std::complex<long double>;

bool value_is_real(const Complex& v, double tol) {
  return std::abs(v.imag()) <= tol * (1.0 + std::abs(v.real()));
}

bool point_is_real(const std::vector<Complex>& z, double tol) {
  return std::all_of(z.begin(), z.end(), [&](const Complex& v) { return value_is_real(v, tol); });
}

Complex ipow(Complex base, long long e) {
  if (e < 0) return Complex(1.0) / ipow(base, -e);
  Complex acc(1.0);
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

long long exponent_entry(const Int& e) {
  return e.convert_to<long long>();
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

double unit_interval(std::mt19937_64& eng) {
  return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

double uniform_pm1(std::mt19937_64& eng) {
  return 2.0 * unit_interval(eng) - 1.0;
}

// Both quadratic roots of A z^2 + B z + C (real coefficients, A != 0) with
// full relative accuracy: conjugate pair built explicitly when the
// discriminant is negative, cancellation-free split otherwise, then a Newton
// polish. Returned sorted by (Re, Im); a negative-discriminant pair is
// bit-exact conjugate.
std::pair<Complex, Complex> stable_quadratic(long double a, long double b, long double c) {
  const long double disc = b * b - 4.0L * a * c;
  if (disc < 0.0L) {
    long double re = -b / (2.0L * a);
    long double im = std::sqrt(-disc) / (2.0L * std::abs(a));
    for (int it = 0; it < 2; ++it) {
      const ComplexL z(re, im);
      const ComplexL dz = (a * z * z + b * z + c) / (2.0L * a * z + b);
      if (std::abs(dz) == 0.0L) break;
      re -= dz.real();
      im -= dz.imag();
    }
    const Complex root(static_cast<double>(re), static_cast<double>(std::abs(im)));
    return {std::conj(root), root};
  }
  const long double sq = std::sqrt(disc);
  const long double q = -(b + std::copysign(sq, b)) / 2.0L;
  long double r1 = q / a;
  long double r2 = (q != 0.0L) ? c / q : 0.0L;
  for (long double* r : {&r1, &r2}) {
    for (int it = 0; it < 2; ++it) {
      const long double deriv = 2.0L * a * *r + b;
      if (deriv == 0.0L) break;
      *r -= (a * *r * *r + b * *r + c) / deriv;
    }
  }
  if (r2 < r1) std::swap(r1, r2);
  return {Complex(static_cast<double>(r1)), Complex(static_cast<double>(r2))};
}

bool lex_less_doubles(const std::vector<double>& a, const std::vector<double>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// Residual and Gauss-map image through per-family formulas in plain double,
// with a summation order unlike the generic evaluator's; used to double-check
// witnesses through a second path.
double direct_residual(ProbeFamily family, const std::vector<double>& params,
                       const std::vector<Complex>& z) {
  if (family == ProbeFamily::hyperplane) {
    Complex acc(params[0]);
    for (std::size_t i = params.size() - 1; i >= 1; --i) acc += params[i] * z[i - 1];
    return std::abs(acc);
  }
  const double a = params[0], b = params[1], c = params[2], d = params[3];
  return std::abs(((Complex(d) + c * z[1]) + b * z[0]) + (a * z[2] + z[2] * z[2]));
}

ProjectivePoint direct_gauss_image(ProbeFamily family, const std::vector<double>& params,
                                   const std::vector<Complex>& z) {
  if (family == ProbeFamily::hyperplane) {
    std::vector<Complex> g;
    for (std::size_t i = 1; i < params.size(); ++i) g.push_back(params[i] * z[i - 1]);
    return ProjectivePoint(std::move(g));
  }
  const double a = params[0], b = params[1], c = params[2];
  return ProjectivePoint({b * z[0], c * z[1], z[2] * (2.0 * z[2] + a)});
}

}  // namespace

RealLaurentPolynomial::RealLaurentPolynomial(std::size_t num_vars, std::vector<Monomial> monomials)
    : num_vars_(num_vars), monomials_(std::move(monomials)) {
  if (num_vars_ == 0)
    throw std::invalid_argument("RealLaurentPolynomial: at least one variable required");
  if (monomials_.size() < 2)
    throw std::invalid_argument(
        "RealLaurentPolynomial: at least two monomials required (a single "
        "monomial never vanishes on the torus)");
  std::set<IntVec> seen;
  for (const auto& m : monomials_) {
    if (m.exponent.size() != num_vars_)
      throw std::invalid_argument("RealLaurentPolynomial: exponent length mismatch");
    if (!(m.coefficient != 0.0) || !std::isfinite(m.coefficient))
      throw std::invalid_argument("RealLaurentPolynomial: coefficients must be finite and nonzero");
    if (!seen.insert(m.exponent).second)
      throw std::invalid_argument("RealLaurentPolynomial: duplicate exponent vector");
  }
}

double RealLaurentPolynomial::coefficient_scale() const {
  double s = 0.0;
  for (const auto& m : monomials_) s = std::max(s, std::abs(m.coefficient));
  return s;
}

Complex RealLaurentPolynomial::operator()(const std::vector<Complex>& z) const {
  if (z.size() != num_vars_)
    throw std::invalid_argument("RealLaurentPolynomial: point dimension mismatch");
  Complex acc(0.0);
  for (const auto& m : monomials_) {
    Complex term(m.coefficient);
    for (std::size_t i = 0; i < num_vars_; ++i) term *= ipow(z[i], exponent_entry(m.exponent[i]));
    acc += term;
  }
  return acc;
}

LatticePolytope newton_polytope(const RealLaurentPolynomial& f) {
  std::vector<IntVec> exps;
  for (const auto& m : f.monomials()) exps.push_back(m.exponent);
  return LatticePolytope::build(exps);
}

ProjectivePoint::ProjectivePoint(std::vector<Complex> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw std::invalid_argument("ProjectivePoint: no coordinates");
  const bool all_zero =
      std::all_of(coords_.begin(), coords_.end(), [](const Complex& c) { return c == Complex(); });
  if (all_zero) throw std::invalid_argument("ProjectivePoint: all coordinates zero");
  for (const auto& c : coords_)
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
      throw std::invalid_argument("ProjectivePoint: coordinates must be finite");
}

bool ProjectivePoint::is_real(double tol) const {
  double maxmod = 0.0;
  for (const auto& c : coords_) maxmod = std::max(maxmod, std::abs(c));
  const double scale2 = 1.0 / (maxmod * maxmod);
  for (std::size_t i = 0; i < coords_.size(); ++i)
    for (std::size_t j = i + 1; j < coords_.size(); ++j) {
      const Complex p = coords_[i] * std::conj(coords_[j]) * scale2;
      if (!value_is_real(p, tol)) return false;
    }
  return true;
}

std::vector<double> ProjectivePoint::real_representative(double tol) const {
  if (!is_real(tol))
    throw std::invalid_argument("ProjectivePoint: no real representative within tolerance");
  std::size_t k = 0;
  for (std::size_t i = 1; i < coords_.size(); ++i)
    if (std::abs(coords_[i]) > std::abs(coords_[k])) k = i;
  std::vector<double> rep;
  rep.reserve(coords_.size());
  for (const auto& c : coords_) rep.push_back((c / coords_[k]).real());
  return rep;
}

double projective_distance(const ProjectivePoint& a, const ProjectivePoint& b) {
  const auto& x = a.coords();
  const auto& y = b.coords();
  if (x.size() != y.size())
    throw std::invalid_argument("projective_distance: dimension mismatch");
  // sin of the angle via the wedge product (Lagrange identity): unlike
  // sqrt(1 - cos^2), this keeps full absolute accuracy for nearly
  // proportional vectors, where the postcondition checks live
  double wedge2 = 0.0, nx = 0.0, ny = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    nx += std::norm(x[i]);
    ny += std::norm(y[i]);
    for (std::size_t j = i + 1; j < x.size(); ++j) wedge2 += std::norm(x[i] * y[j] - x[j] * y[i]);
  }
  return std::sqrt(std::min(1.0, wedge2 / (nx * ny)));
}

ProjectivePoint gauss_map(const RealLaurentPolynomial& f, const std::vector<Complex>& z) {
  if (z.size() != f.num_vars())
    throw std::invalid_argument("gauss_map: point dimension mismatch");
  for (const auto& c : z)
    if (c == Complex()) throw std::invalid_argument("gauss_map: torus point required (nonzero coordinates)");
  std::vector<Complex> image(f.num_vars(), Complex(0.0));
  for (const auto& m : f.monomials()) {
    Complex term(m.coefficient);
    for (std::size_t i = 0; i < f.num_vars(); ++i) term *= ipow(z[i], exponent_entry(m.exponent[i]));
    for (std::size_t i = 0; i < f.num_vars(); ++i) {
      const long long e = exponent_entry(m.exponent[i]);
      if (e != 0) image[i] += static_cast<double>(e) * term;
    }
  }
  const bool all_zero =
      std::all_of(image.begin(), image.end(), [](const Complex& c) { return c == Complex(); });
  if (all_zero) throw std::domain_error("gauss_map: log-critical point, image vanishes");
  return ProjectivePoint(std::move(image));
}

std::string family_name(ProbeFamily family) {
  return family == ProbeFamily::hyperplane ? "hyperplane" : "example19";
}

ProbeFamily family_from_name(const std::string& name) {
  if (name == "hyperplane") return ProbeFamily::hyperplane;
  if (name == "example19") return ProbeFamily::example19;
  throw std::invalid_argument("unknown probe family: " + name);
}

RealLaurentPolynomial family_polynomial(ProbeFamily family, const std::vector<double>& params) {
  for (const double p : params)
    if (!std::isfinite(p)) throw std::invalid_argument("family params must be finite");
  if (family == ProbeFamily::hyperplane) {
    if (params.size() < 2)
      throw std::invalid_argument("hyperplane family needs at least two coefficients");
    const std::size_t m = params.size() - 1;
    std::vector<Monomial> monomials;
    for (std::size_t i = 0; i < params.size(); ++i) {
      if (params[i] == 0.0)
        throw std::invalid_argument("hyperplane family coefficients must be nonzero");
      IntVec e(m, Int(0));
      if (i > 0) e[i - 1] = 1;
      monomials.push_back({std::move(e), params[i]});
    }
    return RealLaurentPolynomial(m, std::move(monomials));
  }
  if (params.size() != 4)
    throw std::invalid_argument("example19 family takes params (a, b, c, d)");
  const double a = params[0], b = params[1], c = params[2], d = params[3];
  if (b == 0.0 || c == 0.0)
    throw std::invalid_argument("example19 family requires b and c nonzero");
  std::vector<Monomial> monomials;
  monomials.push_back({IntVec{0, 0, 2}, 1.0});
  if (a != 0.0) monomials.push_back({IntVec{0, 0, 1}, a});
  monomials.push_back({IntVec{1, 0, 0}, b});
  monomials.push_back({IntVec{0, 1, 0}, c});
  if (d != 0.0) monomials.push_back({IntVec{0, 0, 0}, d});
  return RealLaurentPolynomial(3, std::move(monomials));
}

namespace {

// Drops points that left the torus; reports whether any were dropped.
bool append_if_torus_point(std::vector<Complex> z, std::vector<FiberPoint>& out) {
  double maxmod = 0.0;
  for (const auto& c : z) maxmod = std::max(maxmod, std::abs(c));
  for (const auto& c : z)
    if (std::abs(c) <= 1e-12 * (1.0 + maxmod)) return false;
  const bool real = point_is_real(z, kRealityTol);
  out.push_back({std::move(z), real});
  return true;
}

void enforce_fiber_postconditions(const RealLaurentPolynomial& f,
                                  const std::vector<double>& target_rep,
                                  const std::vector<FiberPoint>& points) {
  std::vector<Complex> target_coords(target_rep.begin(), target_rep.end());
  const ProjectivePoint target(std::move(target_coords));
  const double residual_bound = kResidualTol * f.coefficient_scale();
  for (const auto& p : points) {
    if (std::abs(f(p.z)) > residual_bound)
      throw std::logic_error("fiber_probe: returned point violates the residual bound");
    if (projective_distance(gauss_map(f, p.z), target) > kProjectiveTol)
      throw std::logic_error("fiber_probe: returned point misses the target");
  }
}

}  // namespace

FiberProbeResult fiber_probe(ProbeFamily family, const std::vector<double>& params,
                             const ProjectivePoint& target) {
  const RealLaurentPolynomial f = family_polynomial(family, params);
  if (!target.is_real())
    throw std::invalid_argument("fiber_probe: target not numerically real");
  if (target.coords().size() != f.num_vars())
    throw std::invalid_argument("fiber_probe: target dimension mismatch");
  const std::vector<double> w = target.real_representative();

  FiberProbeResult result;
  if (family == ProbeFamily::hyperplane) {
    long double sum = 0.0L;
    for (const double wi : w) sum += wi;
    if (std::abs(static_cast<double>(sum)) < kDegenerateDelta) {
      result.degenerate = true;  // fiber escapes the torus
      return result;
    }
    const long double t = -static_cast<long double>(params[0]) / sum;
    std::vector<Complex> z;
    for (std::size_t i = 0; i < w.size(); ++i)
      z.emplace_back(static_cast<double>(t * w[i] / params[i + 1]), 0.0);
    if (!append_if_torus_point(std::move(z), result.points)) result.degenerate = true;
    enforce_fiber_postconditions(f, w, result.points);
    return result;
  }

  const double a = params[0], b = params[1], c = params[2], d = params[3];
  const double w1 = w[0], w2 = w[1], w3 = w[2];
  if (std::abs(w3) < kDegenerateDelta) {
    result.degenerate = true;
    return result;
  }
  const long double u = (static_cast<long double>(w1) + w2) / w3;
  const long double lead = 1.0L + 2.0L * u;  // quadratic leading coefficient
  if (std::abs(static_cast<double>(lead)) < kDegenerateDelta) {
    result.degenerate = true;
    return result;
  }
  const auto [r1, r2] = stable_quadratic(lead, a * (1.0L + u), d);
  for (const Complex& z3 : {r1, r2}) {
    const ComplexL z3l(z3.real(), z3.imag());
    const ComplexL s =
        (2.0L * z3l * z3l + static_cast<long double>(a) * z3l) / static_cast<long double>(w3);
    const ComplexL z1 = s * static_cast<long double>(w1) / static_cast<long double>(b);
    const ComplexL z2 = s * static_cast<long double>(w2) / static_cast<long double>(c);
    std::vector<Complex> z{
        Complex(static_cast<double>(z1.real()), static_cast<double>(z1.imag())),
        Complex(static_cast<double>(z2.real()), static_cast<double>(z2.imag())), z3};
    if (!append_if_torus_point(std::move(z), result.points)) result.degenerate = true;
  }
  enforce_fiber_postconditions(f, w, result.points);
  return result;
}

namespace {

DiscriminantScan scan_discriminant(double a, double d) {
  DiscriminantScan scan;
  const double center = (a != 0.0) ? 4.0 * d / (a * a) - 1.0 : 0.0;
  scan.lo = center - 10.0;
  scan.hi = center + 10.0;
  scan.samples = 20001;
  scan.min_value = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < scan.samples; ++i) {
    const double u =
        scan.lo + (scan.hi - scan.lo) * static_cast<double>(i) / static_cast<double>(scan.samples - 1);
    const double value = a * a * (1.0 + u) * (1.0 + u) - 4.0 * d * (1.0 + 2.0 * u);
    if (value < scan.min_value) {
      scan.min_value = value;
      scan.argmin = u;
    }
  }
  return scan;
}

void verify_witness_independently(ProbeFamily family, const std::vector<double>& params,
                                  const Witness& witness, double scale) {
  if (direct_residual(family, params, witness.point) > kResidualTol * scale)
    throw std::logic_error("probe witness failed independent residual re-check");
  std::vector<Complex> target_coords(witness.target.begin(), witness.target.end());
  const double dist =
      projective_distance(direct_gauss_image(family, params, witness.point),
                          ProjectivePoint(std::move(target_coords)));
  if (dist > kProjectiveTol)
    throw std::logic_error("probe witness failed independent target re-check");
  if (point_is_real(witness.point, kRealityTol))
    throw std::logic_error("probe witness is not a non-real point");
}

void run_forward_checks(ProbeFamily family, const std::vector<double>& params,
                        const RealLaurentPolynomial& f, std::uint64_t seed,
                        std::size_t samples, std::size_t& checked) {
  const double residual_bound = kResidualTol * f.coefficient_scale();
  for (std::size_t j = 0; j < samples; ++j) {
    std::mt19937_64 eng(splitmix64(seed + 0x8000000000000000ULL + j));
    const auto draw_nonzero = [&eng] {
      double v;
      do {
        v = uniform_pm1(eng);
      } while (std::abs(v) < 0.1);
      return v;
    };
    std::vector<Complex> z;
    if (family == ProbeFamily::hyperplane) {
      const std::size_t m = params.size() - 1;
      long double acc = params[0];
      for (std::size_t i = 0; i + 1 < m; ++i) {
        const double v = draw_nonzero();
        z.emplace_back(v, 0.0);
        acc += static_cast<long double>(params[i + 1]) * v;
      }
      const double last = static_cast<double>(-acc / params[m]);
      if (std::abs(last) < 1e-9) continue;  // leaves the torus
      z.emplace_back(last, 0.0);
    } else {
      const double a = params[0], b = params[1], c = params[2], d = params[3];
      const double z2 = draw_nonzero(), z3 = draw_nonzero();
      const double z1 = -static_cast<double>(
          ((static_cast<long double>(z3) * z3 + static_cast<long double>(a) * z3) +
           (static_cast<long double>(c) * z2 + d)) /
          b);
      if (std::abs(z1) < 1e-9) continue;
      z = {Complex(z1), Complex(z2), Complex(z3)};
    }
    if (std::abs(f(z)) > residual_bound)
      throw std::logic_error("forward check: sampled hypersurface point has a large residual");
    if (!gauss_map(f, z).is_real())
      throw std::logic_error(
          "forward check: Gauss map not real at a real hypersurface point (numerics bug)");
    ++checked;
  }
}

}  // namespace

ProbeReport real_fibered_verdict(ProbeFamily family, const std::vector<double>& params,
                                 std::size_t n_targets, std::uint64_t seed) {
  if (n_targets == 0) throw std::invalid_argument("real_fibered_verdict: n_targets must be >= 1");
  const RealLaurentPolynomial f = family_polynomial(family, params);
  const std::size_t m = f.num_vars();

  ProbeReport report;
  report.family = family_name(family);
  report.params = params;
  report.targets_tested = n_targets;

  std::map<std::size_t, std::size_t> size_counts;
  bool have_witness_target = false;
  std::vector<double> witness_target;
  std::vector<Complex> witness_point;

  for (std::size_t i = 0; i < n_targets; ++i) {
    std::mt19937_64 eng(splitmix64(seed + i));
    std::vector<double> w(m);
    bool all_zero = true;
    do {
      for (auto& wi : w) wi = uniform_pm1(eng);
      all_zero = std::all_of(w.begin(), w.end(), [](double v) { return v == 0.0; });
    } while (all_zero);

    std::vector<Complex> coords(w.begin(), w.end());
    const FiberProbeResult fiber = fiber_probe(family, params, ProjectivePoint(std::move(coords)));
    if (fiber.degenerate) {
      ++report.degenerate_targets;
      continue;
    }
    ++size_counts[fiber.points.size()];
    for (const auto& p : fiber.points) {
      if (p.is_real) continue;
      if (!have_witness_target || lex_less_doubles(w, witness_target)) {
        have_witness_target = true;
        witness_target = w;
        witness_point = p.z;
      }
      break;  // first non-real point in root order is the candidate
    }
  }

  report.fibers_all_real = !have_witness_target;
  std::size_t best_count = 0;
  for (const auto& [size, count] : size_counts)
    if (count > best_count || (count == best_count && size > report.empirical_degree)) {
      best_count = count;
      report.empirical_degree = size;
    }

  if (have_witness_target) {
    Witness w;
    w.target = std::move(witness_target);
    w.point = std::move(witness_point);
    w.residual = std::abs(f(w.point));
    std::vector<Complex> target_coords(w.target.begin(), w.target.end());
    w.target_distance =
        projective_distance(gauss_map(f, w.point), ProjectivePoint(std::move(target_coords)));
    verify_witness_independently(family, params, w, f.coefficient_scale());
    report.witness = std::move(w);
  }

  if (family == ProbeFamily::example19)
    report.discriminant_scan = scan_discriminant(params[0], params[3]);

  run_forward_checks(family, params, f, seed, 256, report.forward_checks);
  return report;
}

}  // namespace latgauss
