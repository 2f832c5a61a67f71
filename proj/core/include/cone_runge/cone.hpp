#pragma once

// The quadratic cone Q = { x : t(x), n(x) real } of R_3, its sphere of
// imaginary units S = { x in Q : x^2 = -1 } ~ S^2 x S^2, and slice
// coordinates x = alpha + beta J.

#include <array>
#include <cstdint>
#include <optional>

#include "cone_runge/clifford.hpp"
#include "cone_runge/random.hpp"

namespace cone_runge {

inline constexpr double kDefaultConeTol = 1e-9;

struct ConeResiduals {
  double trace_nonreal = 0;  // max |non-real coefficient| of t(x)
  double norm_nonreal = 0;   // max |non-real coefficient| of n(x)
  double x123 = 0;           // |x_123|
  double hypersurface = 0;   // |x2 x13 - x1 x23 - x3 x12|
  double scale = 1;          // 1 + |x| + |x|^2
};

ConeResiduals cone_residuals(const Cl3Element& x);

// Membership through the trace/norm definition. Also evaluates the
// algebraic-set description and throws std::logic_error if the two disagree
// by more than a 1e3 tolerance band. Throws Error(kNonFinite).
bool in_cone(const Cl3Element& x, double tol = kDefaultConeTol);

// x_123 = 0 and x2 x13 - x1 x23 - x3 x12 = 0, within tol * scale.
bool in_cone_algebraic(const Cl3Element& x, double tol = kDefaultConeTol);

// x^2 = -1 within tol; cross-checked against q^2 = p^2 = -1 on the split.
bool in_root_sphere(const Cl3Element& x, double tol = kDefaultConeTol);
bool in_root_sphere_split(const Cl3Element& x, double tol = kDefaultConeTol);

// Uniform unit imaginary quaternion (normalized Gaussian triple).
Quaternion random_unit_imaginary(Rng& rng);

// omega_+ I1 + omega_- I2 with I1, I2 independent uniform on the unit
// sphere of imaginary quaternions.
Cl3Element sample_root_sphere(Rng& rng);
Cl3Element sample_root_sphere(std::uint64_t seed);

struct SliceCoords {
  double alpha = 0;
  double beta = 0;               // >= 0
  std::optional<Cl3Element> J;   // unset iff the point is real

  Cl3Element point() const;
};

// Throws Error(kNotInCone) if x is not in the cone at tol. Points with
// beta <= tol (1 + |x|) are reported as real.
SliceCoords slice_coords(const Cl3Element& x, double tol = kDefaultConeTol);

// True iff span{1, I} and span{1, J} intersect only in the reals, i.e.
// e0, I, J are linearly independent.
bool slices_meet_only_on_reals(const Cl3Element& I, const Cl3Element& J, double tol = 1e-9);

struct SphereHomologyTable {
  std::array<int, 7> ranks{};  // rank H_k(S), k = 0..6

  friend constexpr bool operator==(const SphereHomologyTable&, const SphereHomologyTable&) = default;
};

// Integral homology ranks of S ~ S^2 x S^2 via the Kunneth formula (all
// groups torsion-free).
SphereHomologyTable sphere_homology();

}  // namespace cone_runge
