#pragma once

// Stem functions F = F1 + iota F2 : D -> R_3 (x) C on symmetric plane
// domains, and the function classes used by the approximation engine:
// slice polynomials with right coefficients, rational slice functions with a
// real denominator, and tabulated stems on a raster lattice.

#include <complex>
#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "cone_runge/clifford.hpp"
#include "cone_runge/domain.hpp"

namespace cone_runge {

using Complex = std::complex<double>;

struct StemValue {
  Cl3Element f1;  // even in Im z
  Cl3Element f2;  // odd in Im z

  StemValue& operator+=(const StemValue& o) {
    f1 += o.f1;
    f2 += o.f2;
    return *this;
  }
  StemValue& operator-=(const StemValue& o) {
    f1 -= o.f1;
    f2 -= o.f2;
    return *this;
  }
  friend StemValue operator+(StemValue a, const StemValue& b) { return a += b; }
  friend StemValue operator-(StemValue a, const StemValue& b) { return a -= b; }
  // Multiplication by a complex scalar acting on the iota factor.
  friend StemValue operator*(Complex s, const StemValue& v) {
    return {s.real() * v.f1 - s.imag() * v.f2, s.imag() * v.f1 + s.real() * v.f2};
  }
};

// Euclidean norm on R_3 (x) C ~ R^16.
double stem_norm(const StemValue& v);

// Real polynomial sum c_k z^k, coefficients in ascending degree.
class RealPolynomial {
 public:
  RealPolynomial() = default;
  explicit RealPolynomial(std::vector<double> coeffs);

  // z - a
  static RealPolynomial linear_factor(double a);
  // (z - alpha)^2 + beta^2, the real polynomial vanishing on the sphere alpha + beta S.
  static RealPolynomial sphere_factor(double alpha, double beta);

  const std::vector<double>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }

  Complex operator()(Complex z) const;
  // sum |c_k| |z|^k, the natural scale for cancellation checks.
  double magnitude_bound(double abs_z) const;

  RealPolynomial pow(int n) const;
  friend RealPolynomial operator*(const RealPolynomial& a, const RealPolynomial& b);
  friend RealPolynomial operator+(const RealPolynomial& a, const RealPolynomial& b);
  friend bool operator==(const RealPolynomial&, const RealPolynomial&) = default;

  // Quotient and remainder of long division by a non-zero divisor.
  std::pair<RealPolynomial, RealPolynomial> divmod(const RealPolynomial& divisor) const;

  // Complex roots (companion-matrix eigenvalues, Newton-polished).
  std::vector<Complex> roots() const;

 private:
  void trim();
  std::vector<double> c_;
};

// sum z^k a_k with right coefficients a_k in R_3.
class SlicePolynomial {
 public:
  SlicePolynomial() = default;
  explicit SlicePolynomial(std::vector<Cl3Element> coeffs) : c_(std::move(coeffs)) {}
  static SlicePolynomial from_real(const RealPolynomial& p);

  const std::vector<Cl3Element>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }

  StemValue stem(Complex z) const;
  // Power-series form sum x^k a_k evaluated with Clifford products.
  Cl3Element series(const Cl3Element& x) const;

  // A^c: conjugate every coefficient.
  SlicePolynomial conjugate() const;
  // (sum z^k a_k)(sum z^m b_m) = sum z^(k+m) a_k b_m
  friend SlicePolynomial stem_product(const SlicePolynomial& a, const SlicePolynomial& b);
  friend SlicePolynomial operator+(const SlicePolynomial& a, const SlicePolynomial& b);
  friend SlicePolynomial operator*(const RealPolynomial& r, const SlicePolynomial& p);

  // The real polynomial formed by the e0 coefficients, if every non-real
  // coefficient component is within tol of zero.
  std::optional<RealPolynomial> as_real(double tol) const;

 private:
  std::vector<Cl3Element> c_;
};

struct Singularity {
  double alpha = 0;
  double beta = 0;  // 0 for a real pole, otherwise the sphere alpha + beta S
  int multiplicity = 1;
  bool is_real() const { return beta == 0.0; }
};

// a^{-1} b := I((A^c A)^{-1} A^c B) with A^c A real and not identically zero.
class RationalSliceFunction {
 public:
  // Throws Error(kNotRealDenominator) or Error(kZeroDenominator).
  static RationalSliceFunction build(const SlicePolynomial& a, const SlicePolynomial& b);
  // Q^{-1} P for a real, non-zero Q (stored with A = Q, B = P).
  static RationalSliceFunction from_parts(const RealPolynomial& q, const SlicePolynomial& p);

  const SlicePolynomial& a() const { return a_; }
  const SlicePolynomial& b() const { return b_; }
  const RealPolynomial& denominator() const { return den_; }
  const SlicePolynomial& numerator() const { return num_; }

  // Throws Error(kOutOfDomain) at (numerically) a zero of the denominator.
  StemValue stem(Complex z) const;

  // Zeros of the denominator with Im >= 0, clustered by multiplicity.
  std::vector<Singularity> singularities() const;

 private:
  SlicePolynomial a_, b_;
  RealPolynomial den_;
  SlicePolynomial num_;
};

// Stem sampled at the cell centres of a lattice, bilinearly interpolated.
// Values are symmetrized on construction (F1 even, F2 odd).
class TabulatedStem {
 public:
  TabulatedStem(GridGeometry geometry, std::vector<StemValue> nodes, std::vector<std::uint8_t> defined);

  static TabulatedStem sample(const DomainGrid& domain, const std::function<StemValue(Complex)>& fn);

  const GridGeometry& geometry() const { return geometry_; }
  const std::vector<std::uint8_t>& defined() const { return defined_; }

  // Throws Error(kOutOfDomain) unless all four surrounding nodes are defined.
  StemValue stem(Complex z) const;

 private:
  GridGeometry geometry_;
  std::vector<StemValue> nodes_;
  std::vector<std::uint8_t> defined_;
};

enum class StemKind { kPolynomial, kRational, kTabulated };

class StemFunction {
 public:
  StemFunction(SlicePolynomial p) : impl_(std::move(p)) {}
  StemFunction(RationalSliceFunction r) : impl_(std::move(r)) {}
  StemFunction(TabulatedStem t) : impl_(std::move(t)) {}

  StemKind kind() const { return static_cast<StemKind>(impl_.index()); }
  // Polynomial and rational stems satisfy the Cauchy-Riemann system.
  bool holomorphic() const { return kind() != StemKind::kTabulated; }

  StemValue operator()(Complex z) const;

  const SlicePolynomial* polynomial() const { return std::get_if<SlicePolynomial>(&impl_); }
  const RationalSliceFunction* rational() const { return std::get_if<RationalSliceFunction>(&impl_); }
  const TabulatedStem* tabulated() const { return std::get_if<TabulatedStem>(&impl_); }

 private:
  std::variant<SlicePolynomial, RationalSliceFunction, TabulatedStem> impl_;
};

// f = I(F): f(alpha + beta J) = F1(alpha, beta) + J F2(alpha, beta).
class SliceFunction {
 public:
  SliceFunction(StemFunction stem) : stem_(std::move(stem)) {}

  const StemFunction& stem() const { return stem_; }

 private:
  StemFunction stem_;
};

}  // namespace cone_runge
