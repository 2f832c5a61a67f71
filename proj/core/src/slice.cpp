#include "cone_runge/slice.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cone_runge/cone.hpp"
#include "cone_runge/errors.hpp"
#include "cone_runge/random.hpp"

namespace cone_runge {

namespace {

constexpr double kSqrt2 = 1.4142135623730951;
constexpr double kSphereTol = 1e-9;
constexpr double kIntrinsicTol = 1e-9;

void require_root(const Cl3Element& u, const char* name) {
  if (!in_root_sphere(u, kSphereTol)) {
    throw Error(ErrorCode::kNotRootSphere, std::string(name) + " is not a square root of -1 in the cone");
  }
}

double rel_gap(const Cl3Element& a, const Cl3Element& b) {
  return max_abs_coeff(a - b) / (1.0 + std::max(max_abs_coeff(a), max_abs_coeff(b)));
}

// Random point of the stem's domain, by rejection from a bounding box.
Complex sample_domain_point(const StemFunction& stem, Rng& rng) {
  double x0 = -2, x1 = 2, y1 = 2;
  if (const TabulatedStem* t = stem.tabulated()) {
    const GridGeometry& g = t->geometry();
    x0 = g.x(0);
    x1 = g.x(g.cols() - 1);
    y1 = g.y(g.rows() - 1);
  }
  for (int attempt = 0; attempt < 100000; ++attempt) {
    const Complex z{rng.uniform(x0, x1), rng.uniform(-y1, y1)};
    try {
      (void)stem(z);
      (void)stem(std::conj(z));
      return z;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kOutOfDomain) throw;
    }
  }
  throw Error(ErrorCode::kOutOfDomain, "could not sample a point of the stem's domain");
}

Quaternion unit_imag(const Quaternion& q) {
  const double n = std::sqrt(q.x * q.x + q.y * q.y + q.z * q.z);
  return {0.0, q.x / n, q.y / n, q.z / n};
}

// A unit imaginary quaternion orthogonal to the unit imaginary q.
Quaternion orthogonal_unit(const Quaternion& q) {
  const double ax = std::fabs(q.x), ay = std::fabs(q.y), az = std::fabs(q.z);
  Quaternion axis{0, 0, 0, 0};
  if (ax <= ay && ax <= az) {
    axis.x = 1;
  } else if (ay <= az) {
    axis.y = 1;
  } else {
    axis.z = 1;
  }
  const Quaternion cross{0.0, q.y * axis.z - q.z * axis.y, q.z * axis.x - q.x * axis.z, q.x * axis.y - q.y * axis.x};
  return unit_imag(cross);
}

Eigen::Matrix<double, 8, 8> basis_matrix(const CompletionBasis& b) {
  Eigen::Matrix<double, 8, 8> m;
  for (int a = 0; a < 8; ++a) {
    for (int k = 0; k < 8; ++k) m(k, a) = b.products[a][k];
  }
  return m;
}

}  // namespace

Cl3Element slice_eval_at(const SliceFunction& f, double alpha, double beta, const Cl3Element& J) {
  const StemValue v = f.stem()({alpha, beta});
  return v.f1 + J * v.f2;
}

Cl3Element slice_eval(const SliceFunction& f, const Cl3Element& x) {
  const SliceCoords sc = slice_coords(x);
  if (!sc.J) {
    const StemValue v = f.stem()({sc.alpha, 0.0});
    if (max_abs_coeff(v.f2) > 1e-12 * (1.0 + max_abs_coeff(v.f1))) {
      throw std::logic_error("slice_eval: odd stem component does not vanish on the real axis");
    }
    return v.f1;
  }
  return slice_eval_at(f, sc.alpha, sc.beta, *sc.J);
}

Cl3Element representation_eval(const SliceFunction& f, double alpha, double beta, const Cl3Element& I,
                               const Cl3Element& J) {
  require_root(I, "I");
  require_root(J, "J");
  const Cl3Element plus = slice_eval_at(f, alpha, beta, J);
  const Cl3Element minus = slice_eval_at(f, alpha, -beta, J);
  return 0.5 * (plus + minus) + 0.5 * (I * (J * (minus - plus)));
}

NormBounds norm_bounds(const SliceFunction& f, double alpha, double beta, const Cl3Element& J) {
  require_root(J, "J");
  const StemValue v = f.stem()({alpha, beta});
  const double stem = stem_norm(v);
  const Cl3Element plus = v.f1 + J * v.f2;
  const Cl3Element minus = slice_eval_at(f, alpha, -beta, J);
  NormBounds nb;
  nb.lhs = stem / kSqrt2;
  nb.mid = std::max(abs(plus), abs(minus));
  nb.rhs = kSqrt2 * stem;
  const double slack = 1e-12 * std::max(1.0, nb.rhs);
  if (!(nb.lhs <= nb.mid + slack) || !(nb.mid <= nb.rhs + slack)) {
    throw std::logic_error("norm_bounds: stem/slice norm chain violated");
  }
  return nb;
}

bool stem_is_central(const SliceFunction& f, int n_samples, std::uint64_t seed) {
  Rng rng(seed);
  for (int s = 0; s < n_samples; ++s) {
    const Complex z = sample_domain_point(f.stem(), rng);
    const StemValue v = f.stem()(z);
    const double scale = 1.0 + stem_norm(v);
    for (std::size_t k = 1; k + 1 < kCl3Dim; ++k) {
      if (std::fabs(v.f1[k]) > kIntrinsicTol * scale || std::fabs(v.f2[k]) > kIntrinsicTol * scale) return false;
    }
  }
  return true;
}

bool is_intrinsic(const SliceFunction& f, int n_samples, std::uint64_t seed) {
  if (n_samples < 1) throw std::invalid_argument("is_intrinsic: n_samples must be positive");
  Rng rng(seed);
  bool intrinsic = true;
  for (int s = 0; s < n_samples && intrinsic; ++s) {
    const Complex z = sample_domain_point(f.stem(), rng);
    const Cl3Element I = sample_root_sphere(rng);
    const Cl3Element up = slice_eval_at(f, z.real(), z.imag(), I);
    const Cl3Element down = slice_eval_at(f, z.real(), -z.imag(), I);
    if (rel_gap(down, conj(up)) > kIntrinsicTol) intrinsic = false;
  }
  if (stem_is_central(f, n_samples, seed ^ 0x9e3779b97f4a7c15ULL) != intrinsic) {
    throw std::logic_error("is_intrinsic: conjugation test and stem test disagree");
  }
  return intrinsic;
}

CompletionBasis validate_basis(const std::array<Cl3Element, 3>& u) {
  for (int r = 0; r < 3; ++r) {
    for (int s = 0; s < 3; ++s) {
      const Cl3Element ac = u[r] * u[s] + u[s] * u[r] + Cl3Element::scalar(r == s ? 2.0 : 0.0);
      if (max_abs_coeff(ac) > 1e-10) {
        throw Error(ErrorCode::kBadBasis, "I_r I_s + I_s I_r != -2 delta_rs for r = " + std::to_string(r + 1) +
                                              ", s = " + std::to_string(s + 1));
      }
    }
  }
  CompletionBasis b;
  b.units = u;
  b.products = {Cl3Element::scalar(1.0), u[0], u[1], u[2], u[0] * u[1], u[0] * u[2], u[1] * u[2],
                u[0] * u[1] * u[2]};
  Eigen::FullPivLU<Eigen::Matrix<double, 8, 8>> lu(basis_matrix(b));
  lu.setThreshold(1e-8);
  if (lu.rank() != 8) throw Error(ErrorCode::kBadBasis, "the products I_A do not span R_3");
  return b;
}

CompletionBasis make_completion_basis(const Cl3Element& I) {
  require_root(I, "I");
  const QuatPair qp = split(I);
  const Quaternion q = unit_imag(qp.q), p = unit_imag(qp.p);
  const Quaternion q2 = orthogonal_unit(q), p2 = orthogonal_unit(p);
  const Quaternion q3 = q * q2, p3 = p * p2;
  // With p3 taken with the opposite sign, I1 I2 I3 = -e123 and the eight
  // products are linearly independent.
  return validate_basis({I, unsplit({q2, p2}), unsplit({q3, -p3})});
}

std::vector<SplitComponents> refined_split_components(const SliceFunction& f, const CompletionBasis& basis,
                                                      const std::vector<Complex>& samples) {
  const CompletionBasis b = validate_basis(basis.units);
  const Eigen::PartialPivLU<Eigen::Matrix<double, 8, 8>> lu(basis_matrix(b));
  const Cl3Element& I = b.units[0];
  std::vector<SplitComponents> out;
  out.reserve(samples.size());
  for (const Complex z : samples) {
    const Cl3Element up = slice_eval_at(f, z.real(), z.imag(), I);
    const Cl3Element down = slice_eval_at(f, z.real(), -z.imag(), I);
    const Cl3Element f1 = 0.5 * (up + down);
    const Cl3Element f2 = 0.5 * (I * (down - up));
    Eigen::Matrix<double, 8, 2> rhs;
    for (int k = 0; k < 8; ++k) {
      rhs(k, 0) = f1[k];
      rhs(k, 1) = f2[k];
    }
    const Eigen::Matrix<double, 8, 2> sol = lu.solve(rhs);
    SplitComponents c;
    for (int a = 0; a < 8; ++a) c[a] = {sol(a, 0), sol(a, 1)};
    out.push_back(c);
  }
  return out;
}

Cl3Element reassemble(const CompletionBasis& basis, const SplitComponents& comps) {
  Cl3Element re, im;
  for (int a = 0; a < 8; ++a) {
    re += comps[a].real() * basis.products[a];
    im += comps[a].imag() * basis.products[a];
  }
  return re + basis.units[0] * im;
}

}  // namespace cone_runge
