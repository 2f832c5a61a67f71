#include "cone_runge/cone.hpp"

#include <algorithm>
#include <stdexcept>

#include "cone_runge/errors.hpp"

namespace cone_runge {

namespace {

void require_finite(const Cl3Element& x, const char* what) {
  if (!x.is_finite()) throw Error(ErrorCode::kNonFinite, std::string(what) + ": non-finite coefficient");
}

double max_nonreal(const Cl3Element& x) {
  double m = 0.0;
  for (std::size_t k = 1; k < kCl3Dim; ++k) m = std::max(m, std::fabs(x[k]));
  return m;
}

bool tn_verdict(const ConeResiduals& r, double tol) {
  return std::max(r.trace_nonreal, r.norm_nonreal) <= tol * r.scale;
}

bool algebraic_verdict(const ConeResiduals& r, double tol) {
  return 2.0 * std::max(r.x123, r.hypersurface) <= tol * r.scale;
}

double quaternion_square_residual(const Quaternion& q) {
  const Quaternion s = q * q + Quaternion{1, 0, 0, 0};
  return std::max({std::fabs(s.w), std::fabs(s.x), std::fabs(s.y), std::fabs(s.z)});
}

double sphere_residual(const Cl3Element& x) {
  return max_abs_coeff(x * x + Cl3Element::scalar(1.0));
}

double split_sphere_residual(const Cl3Element& x) {
  const QuatPair qp = split(x);
  return std::max(quaternion_square_residual(qp.q), quaternion_square_residual(qp.p));
}

Quaternion normalized_imaginary(const Quaternion& q) {
  const double n = std::sqrt(q.x * q.x + q.y * q.y + q.z * q.z);
  return {0.0, q.x / n, q.y / n, q.z / n};
}

}  // namespace

ConeResiduals cone_residuals(const Cl3Element& x) {
  ConeResiduals r;
  r.trace_nonreal = max_nonreal(trace(x));
  r.norm_nonreal = max_nonreal(norm_form(x));
  r.x123 = std::fabs(x[Blade::e123]);
  r.hypersurface =
      std::fabs(x[Blade::e2] * x[Blade::e13] - x[Blade::e1] * x[Blade::e23] - x[Blade::e3] * x[Blade::e12]);
  const double a = abs(x);
  r.scale = 1.0 + a + a * a;
  return r;
}

bool in_cone(const Cl3Element& x, double tol) {
  require_finite(x, "in_cone");
  const ConeResiduals r = cone_residuals(x);
  const bool tn = tn_verdict(r, tol);
  if (tn && !algebraic_verdict(r, tol * 1e3)) {
    throw std::logic_error("cone tests disagree: t/n accepts, algebraic set rejects");
  }
  if (!tn && algebraic_verdict(r, tol * 1e-3)) {
    throw std::logic_error("cone tests disagree: algebraic set accepts, t/n rejects");
  }
  return tn;
}

bool in_cone_algebraic(const Cl3Element& x, double tol) {
  require_finite(x, "in_cone_algebraic");
  return algebraic_verdict(cone_residuals(x), tol);
}

bool in_root_sphere(const Cl3Element& x, double tol) {
  require_finite(x, "in_root_sphere");
  const double a = abs(x);
  const double scale = 1.0 + a * a;
  const double direct = sphere_residual(x);
  const double via_split = split_sphere_residual(x);
  const bool verdict = direct <= tol * scale;
  if (verdict && !(via_split <= tol * scale * 1e3)) {
    throw std::logic_error("root-sphere tests disagree: x^2 = -1 but split factors do not square to -1");
  }
  if (!verdict && via_split <= tol * scale * 1e-3) {
    throw std::logic_error("root-sphere tests disagree: split factors square to -1 but x^2 != -1");
  }
  return verdict;
}

bool in_root_sphere_split(const Cl3Element& x, double tol) {
  require_finite(x, "in_root_sphere_split");
  const double a = abs(x);
  return split_sphere_residual(x) <= tol * (1.0 + a * a);
}

Quaternion random_unit_imaginary(Rng& rng) {
  for (;;) {
    const Quaternion g{0.0, rng.gaussian(), rng.gaussian(), rng.gaussian()};
    const double n = std::sqrt(g.x * g.x + g.y * g.y + g.z * g.z);
    if (n > 1e-12) return {0.0, g.x / n, g.y / n, g.z / n};
  }
}

Cl3Element sample_root_sphere(Rng& rng) {
  const Quaternion i1 = random_unit_imaginary(rng);
  const Quaternion i2 = random_unit_imaginary(rng);
  return unsplit({i1, i2});
}

Cl3Element sample_root_sphere(std::uint64_t seed) {
  Rng rng(seed);
  return sample_root_sphere(rng);
}

Cl3Element SliceCoords::point() const {
  Cl3Element x = Cl3Element::scalar(alpha);
  if (J) x += beta * *J;
  return x;
}

SliceCoords slice_coords(const Cl3Element& x, double tol) {
  if (!in_cone(x, tol)) throw Error(ErrorCode::kNotInCone, "slice_coords: point is not in the quadratic cone");
  SliceCoords sc;
  sc.alpha = 0.5 * trace(x).real();
  const Cl3Element imag = x - Cl3Element::scalar(sc.alpha);
  const double beta = abs(imag);
  if (beta <= tol * (1.0 + abs(x))) return sc;
  sc.beta = beta;
  // Re-project each split factor onto the unit imaginary sphere.
  const QuatPair qp = split(imag / beta);
  sc.J = unsplit({normalized_imaginary(qp.q), normalized_imaginary(qp.p)});
  return sc;
}

bool slices_meet_only_on_reals(const Cl3Element& I, const Cl3Element& J, double tol) {
  // Gram-Schmidt on (e0, I, J).
  std::array<Cl3Element, 3> v = {Cl3Element::scalar(1.0), I, J};
  for (std::size_t a = 0; a < v.size(); ++a) {
    for (std::size_t b = 0; b < a; ++b) {
      double dot = 0.0;
      for (std::size_t k = 0; k < kCl3Dim; ++k) dot += v[a][k] * v[b][k];
      v[a] -= dot * v[b];
    }
    const double n = abs(v[a]);
    if (n <= tol) return false;
    v[a] = v[a] / n;
  }
  return true;
}

SphereHomologyTable sphere_homology() {
  constexpr std::array<int, 3> kTwoSphere = {1, 0, 1};
  SphereHomologyTable t;
  for (std::size_t a = 0; a < kTwoSphere.size(); ++a) {
    for (std::size_t b = 0; b < kTwoSphere.size(); ++b) {
      t.ranks[a + b] += kTwoSphere[a] * kTwoSphere[b];
    }
  }
  return t;
}

}  // namespace cone_runge
