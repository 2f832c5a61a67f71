#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "cone_runge/errors.hpp"
#include "cone_runge/stem.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace cone_runge;

namespace {

template <class F>
ErrorCode code_of(F&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an error";
  return ErrorCode::kSchema;
}

// Stem of sum z^k a_k from complex powers computed directly.
StemValue stem_oracle(const std::vector<Cl3Element>& coeffs, Complex z) {
  StemValue v;
  Complex p = 1.0;
  for (const Cl3Element& a : coeffs) {
    v.f1 += p.real() * a;
    v.f2 += p.imag() * a;
    p *= z;
  }
  return v;
}

bool near(const StemValue& a, const StemValue& b, double tol) {
  return oracle::max_abs(a.f1 - b.f1) <= tol && oracle::max_abs(a.f2 - b.f2) <= tol;
}

}  // namespace

TEST(RealPolynomial, TrimsTrailingZerosAndEvaluates) {
  const RealPolynomial p({1, 2, 0, 0});
  EXPECT_EQ(p.degree(), 1);
  EXPECT_EQ(p(Complex(3, 0)), Complex(7, 0));
  EXPECT_TRUE(RealPolynomial({0, 0}).is_zero());
}

TEST(RealPolynomial, FactorsAndPowers) {
  EXPECT_EQ(RealPolynomial::linear_factor(2), RealPolynomial({-2, 1}));
  EXPECT_EQ(RealPolynomial::sphere_factor(1, 2), RealPolynomial({5, -2, 1}));
  EXPECT_EQ(RealPolynomial({1, 1}).pow(3), RealPolynomial({1, 3, 3, 1}));
  EXPECT_EQ(RealPolynomial({1, 1}).pow(0), RealPolynomial({1}));
  EXPECT_EQ(RealPolynomial({1, 1}) + RealPolynomial({-1, 0, 2}), RealPolynomial({0, 1, 2}));
}

TEST(RealPolynomial, DivmodReconstructsTheDividend) {
  Rng rng(41);
  for (int t = 0; t < 50; ++t) {
    std::vector<double> a(7), b(3);
    for (double& v : a) v = rng.uniform(-2, 2);
    for (double& v : b) v = rng.uniform(-2, 2);
    b.back() = 1 + rng.uniform();
    const RealPolynomial pa(a), pb(b);
    const auto [q, r] = pa.divmod(pb);
    EXPECT_LT(r.degree(), pb.degree());
    const RealPolynomial back = q * pb + r;
    ASSERT_EQ(back.coeffs().size(), pa.coeffs().size());
    for (std::size_t k = 0; k < a.size(); ++k) EXPECT_NEAR(back.coeffs()[k], a[k], 1e-12);
  }
  const auto [q, r] = RealPolynomial({-1, 0, 0, 1}).divmod(RealPolynomial({-1, 1}));
  EXPECT_EQ(q, RealPolynomial({1, 1, 1}));
  EXPECT_TRUE(r.is_zero());
}

TEST(RealPolynomial, RootsOfKnownFactors) {
  const RealPolynomial p = RealPolynomial::linear_factor(1) * RealPolynomial::sphere_factor(0, 2);
  std::vector<Complex> r = p.roots();
  ASSERT_EQ(r.size(), 3u);
  std::sort(r.begin(), r.end(), [](Complex a, Complex b) { return a.imag() < b.imag(); });
  EXPECT_NEAR(std::abs(r[0] - Complex(0, -2)), 0, 1e-12);
  EXPECT_NEAR(std::abs(r[1] - Complex(1, 0)), 0, 1e-12);
  EXPECT_NEAR(std::abs(r[2] - Complex(0, 2)), 0, 1e-12);
}

TEST(RealPolynomial, MagnitudeBound) {
  EXPECT_DOUBLE_EQ(RealPolynomial({1, -2, 3}).magnitude_bound(2), 1 + 4 + 12);
}

TEST(SlicePolynomial, StemMatchesDirectComplexPowers) {
  Rng rng(42);
  for (int t = 0; t < 100; ++t) {
    const SlicePolynomial p = fixtures::random_polynomial(rng, 5);
    const Complex z(rng.uniform(-2, 2), rng.uniform(-2, 2));
    EXPECT_TRUE(near(p.stem(z), stem_oracle(p.coeffs(), z), 1e-12));
  }
}

TEST(SlicePolynomial, StemIsEvenOddInImaginaryPart) {
  Rng rng(43);
  const SlicePolynomial p = fixtures::random_polynomial(rng, 4);
  const Complex z(0.3, 1.1);
  const StemValue a = p.stem(z), b = p.stem(std::conj(z));
  EXPECT_TRUE(approx_equal(a.f1, b.f1));
  EXPECT_TRUE(approx_equal(a.f2, -b.f2));
}

TEST(SlicePolynomial, ProductsAndConjugates) {
  const RealPolynomial a({1, 2}), b({0, 1, 1});
  const SlicePolynomial pa = SlicePolynomial::from_real(a), pb = SlicePolynomial::from_real(b);
  const auto prod = stem_product(pa, pb).as_real(0);
  ASSERT_TRUE(prod.has_value());
  EXPECT_EQ(*prod, a * b);

  const SlicePolynomial x({Cl3Element{}, Cl3Element::basis(Blade::e2)});
  EXPECT_FALSE(x.as_real(1e-12).has_value());
  EXPECT_EQ(x.conjugate().coeffs()[1], -Cl3Element::basis(Blade::e2));
  // (z e2)^c (z e2) = z^2 e2^c e2 = z^2.
  const auto n = stem_product(x.conjugate(), x).as_real(1e-15);
  ASSERT_TRUE(n.has_value());
  EXPECT_EQ(*n, RealPolynomial({0, 0, 1}));
}

TEST(RationalSliceFunction, RejectsNonRealOrZeroDenominators) {
  const SlicePolynomial b({Cl3Element::scalar(1)});
  const SlicePolynomial central({Cl3Element::scalar(1) + Cl3Element::basis(Blade::e123)});
  EXPECT_EQ(code_of([&] { RationalSliceFunction::build(central, b); }), ErrorCode::kNotRealDenominator);
  EXPECT_EQ(code_of([&] { RationalSliceFunction::build(SlicePolynomial({Cl3Element{}}), b); }),
            ErrorCode::kZeroDenominator);
}

TEST(RationalSliceFunction, NonRealNumeratorOfRealNormIsAccepted) {
  // A = z + e1 has A^c A = z^2 + 1, real.
  const SlicePolynomial a({Cl3Element::basis(Blade::e1), Cl3Element::scalar(1)});
  const SlicePolynomial b({Cl3Element::basis(Blade::e2)});
  const RationalSliceFunction r = RationalSliceFunction::build(a, b);
  EXPECT_EQ(r.denominator(), RealPolynomial({1, 0, 1}));
  const auto s = r.singularities();
  ASSERT_EQ(s.size(), 1u);
  EXPECT_NEAR(s[0].alpha, 0, 1e-12);
  EXPECT_NEAR(s[0].beta, 1, 1e-12);
}

TEST(RationalSliceFunction, SingularitiesWithMultiplicity) {
  const RealPolynomial q = RealPolynomial::linear_factor(1) * RealPolynomial::sphere_factor(0, 2).pow(2);
  const RationalSliceFunction r = RationalSliceFunction::from_parts(q, fixtures::real_polynomial({1}));
  auto s = r.singularities();
  ASSERT_EQ(s.size(), 2u);
  std::sort(s.begin(), s.end(), [](const Singularity& a, const Singularity& b) { return a.beta < b.beta; });
  EXPECT_TRUE(s[0].is_real());
  EXPECT_NEAR(s[0].alpha, 1, 1e-9);
  EXPECT_EQ(s[0].multiplicity, 1);
  EXPECT_FALSE(s[1].is_real());
  EXPECT_NEAR(s[1].beta, 2, 1e-6);
  EXPECT_EQ(s[1].multiplicity, 2);
}

TEST(RationalSliceFunction, StemIsQuotientByDenominatorAndFailsAtPoles) {
  const RealPolynomial q({4, 0, 1});
  const SlicePolynomial p({Cl3Element::basis(Blade::e3), Cl3Element::basis(Blade::e12)});
  const RationalSliceFunction r = RationalSliceFunction::from_parts(q, p);
  const Complex z(0.5, 0.7);
  const StemValue num = stem_oracle(p.coeffs(), z);
  const Complex inv = 1.0 / (z * z + 4.0);
  EXPECT_TRUE(near(r.stem(z), inv * num, 1e-14));
  EXPECT_EQ(code_of([&] { r.stem(Complex(0, 2)); }), ErrorCode::kOutOfDomain);
}

TEST(TabulatedStem, InterpolatesAndSymmetrizes) {
  const DomainGrid g = rasterize(fixtures::disk(2, 16));
  const SlicePolynomial p({Cl3Element::basis(Blade::e1), Cl3Element::basis(Blade::e2)});
  const TabulatedStem t = TabulatedStem::sample(g, [&](Complex z) { return p.stem(z); });
  // Linear stems are reproduced exactly by bilinear interpolation.
  for (const Complex z : {Complex(0.1, 0.2), Complex(-1.03, 0.41), Complex(0.77, -0.9)}) {
    EXPECT_TRUE(near(t.stem(z), p.stem(z), 1e-12));
  }
  const StemValue a = t.stem(Complex(0.3, 0.6)), b = t.stem(Complex(0.3, -0.6));
  EXPECT_TRUE(approx_equal(a.f1, b.f1));
  EXPECT_TRUE(approx_equal(a.f2, -b.f2));
  EXPECT_EQ(code_of([&] { t.stem(Complex(3, 0)); }), ErrorCode::kOutOfDomain);
}

TEST(StemFunction, KindAndHolomorphy) {
  const StemFunction a(fixtures::real_polynomial({1, 1}));
  EXPECT_EQ(a.kind(), StemKind::kPolynomial);
  EXPECT_TRUE(a.holomorphic());
  ASSERT_NE(a.polynomial(), nullptr);
  const DomainGrid g = rasterize(fixtures::disk(1, 8));
  const StemFunction t(TabulatedStem::sample(g, [](Complex) { return StemValue{}; }));
  EXPECT_EQ(t.kind(), StemKind::kTabulated);
  EXPECT_FALSE(t.holomorphic());
  EXPECT_EQ(t.rational(), nullptr);
}

TEST(StemValue, ComplexScalarActsOnTheIotaFactor) {
  const StemValue v{Cl3Element::scalar(1), Cl3Element::basis(Blade::e1)};
  const StemValue w = Complex(0, 1) * v;
  EXPECT_EQ(w.f1, -Cl3Element::basis(Blade::e1));
  EXPECT_EQ(w.f2, Cl3Element::scalar(1));
  EXPECT_DOUBLE_EQ(stem_norm(v), std::sqrt(2.0));
}
