#pragma once

// Evaluation of slice functions on the cone, the representation formula,
// stem/slice norm comparison, intrinsic functions and the splitting of a
// slice restriction into eight complex components.

#include <array>
#include <cstdint>
#include <vector>

#include "cone_runge/clifford.hpp"
#include "cone_runge/stem.hpp"

namespace cone_runge {

// f(alpha + beta J) = F1(alpha, beta) + J F2(alpha, beta). Does not check J.
Cl3Element slice_eval_at(const SliceFunction& f, double alpha, double beta, const Cl3Element& J);

// Throws Error(kNotInCone) or Error(kOutOfDomain).
Cl3Element slice_eval(const SliceFunction& f, const Cl3Element& x);

// 1/2 [f(a+bJ) + f(a-bJ)] + I/2 [J (f(a-bJ) - f(a+bJ))].
// Throws Error(kNotRootSphere) if I or J is not a square root of -1 in the cone.
Cl3Element representation_eval(const SliceFunction& f, double alpha, double beta, const Cl3Element& I,
                               const Cl3Element& J);

struct NormBounds {
  double lhs = 0;  // ||F|| / sqrt 2
  double mid = 0;  // max |f(alpha +- beta J)|
  double rhs = 0;  // sqrt 2 ||F||
};

// Throws std::logic_error if lhs <= mid <= rhs fails beyond 1e-12 slack.
NormBounds norm_bounds(const SliceFunction& f, double alpha, double beta, const Cl3Element& J);

// Conjugation test f(a - I b) = conj f(a + I b) at n_samples random points.
// Throws std::logic_error if the stem test (F1, F2 central) disagrees.
bool is_intrinsic(const SliceFunction& f, int n_samples, std::uint64_t seed);

// True iff every sampled stem value lies in span{e0, e123}.
bool stem_is_central(const SliceFunction& f, int n_samples, std::uint64_t seed);

// Orthonormal triple I1 = I, I2, I3 with I_r I_s + I_s I_r = -2 delta_rs,
// and the eight products I_A, A subset of {1,2,3}, in the order
// {}, {1}, {2}, {3}, {1,2}, {1,3}, {2,3}, {1,2,3}.
struct CompletionBasis {
  std::array<Cl3Element, 3> units;
  std::array<Cl3Element, 8> products;
};

// Throws Error(kNotRootSphere) if I is not in the sphere.
CompletionBasis make_completion_basis(const Cl3Element& I);

// Checks the anticommutation relations and that the products span R_3.
// Throws Error(kBadBasis).
CompletionBasis validate_basis(const std::array<Cl3Element, 3>& units);

using SplitComponents = std::array<Complex, 8>;

// F_A(z), z = alpha + i beta, with f(alpha + beta I) = sum_A F_A I_A where
// x + iy is read as x + I y. Each F_A is the stem of an intrinsic function.
std::vector<SplitComponents> refined_split_components(const SliceFunction& f, const CompletionBasis& basis,
                                                      const std::vector<Complex>& samples);

// sum_A (Re F_A + I Im F_A) I_A
Cl3Element reassemble(const CompletionBasis& basis, const SplitComponents& comps);

}  // namespace cone_runge
