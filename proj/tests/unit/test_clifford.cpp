#include <gtest/gtest.h>

#include <sstream>

#include "cone_runge/clifford.hpp"
#include "cone_runge/random.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace cone_runge;

namespace {

Cl3Element e(Blade b) { return Cl3Element::basis(b); }

}  // namespace

TEST(ProductTable, MatchesBruteForceBladeProducts) {
  for (std::size_t a = 0; a < kCl3Dim; ++a) {
    for (std::size_t b = 0; b < kCl3Dim; ++b) {
      const auto want = oracle::blade_product(a, b);
      const BladeProduct got = kProductTable(a, b);
      EXPECT_EQ(got.index, want.slot) << kBladeNames[a] << " * " << kBladeNames[b];
      EXPECT_EQ(got.sign, want.sign) << kBladeNames[a] << " * " << kBladeNames[b];
    }
  }
}

TEST(ProductTable, GeneratorsSquareToMinusOneAndAnticommute) {
  EXPECT_EQ(e(Blade::e1) * e(Blade::e1), Cl3Element::scalar(-1));
  EXPECT_EQ(e(Blade::e2) * e(Blade::e2), Cl3Element::scalar(-1));
  EXPECT_EQ(e(Blade::e3) * e(Blade::e3), Cl3Element::scalar(-1));
  EXPECT_EQ(e(Blade::e1) * e(Blade::e2), e(Blade::e12));
  EXPECT_EQ(e(Blade::e2) * e(Blade::e1), -e(Blade::e12));
  EXPECT_EQ(e(Blade::e123) * e(Blade::e123), Cl3Element::scalar(1));
}

TEST(ProductTable, PseudoscalarIsCentral) {
  for (std::size_t k = 0; k < kCl3Dim; ++k) {
    const Cl3Element b = Cl3Element::basis(static_cast<Blade>(k));
    EXPECT_EQ(e(Blade::e123) * b, b * e(Blade::e123)) << kBladeNames[k];
  }
}

TEST(ProductTable, FlippedSignBreaksAssociativitySomewhere) {
  const ProductTable bad = kProductTable.with_flipped_sign(1, 2);
  EXPECT_FALSE(bad == kProductTable);
  bool broken = false;
  for (std::size_t a = 0; a < kCl3Dim && !broken; ++a) {
    for (std::size_t b = 0; b < kCl3Dim && !broken; ++b) {
      for (std::size_t c = 0; c < kCl3Dim && !broken; ++c) {
        const auto x = Cl3Element::basis(static_cast<Blade>(a));
        const auto y = Cl3Element::basis(static_cast<Blade>(b));
        const auto z = Cl3Element::basis(static_cast<Blade>(c));
        broken = !(mul(bad, mul(bad, x, y), z) == mul(bad, x, mul(bad, y, z)));
      }
    }
  }
  EXPECT_TRUE(broken);
}

TEST(Cl3Element, ProductAgreesWithOracleOnRandomElements) {
  Rng rng(11);
  for (int i = 0; i < 500; ++i) {
    const Cl3Element x = fixtures::random_element(rng), y = fixtures::random_element(rng);
    EXPECT_LE(oracle::max_abs(x * y - oracle::product(x, y)), 1e-14);
  }
}

TEST(Cl3Element, ConjugationMatchesOracle) {
  Rng rng(12);
  for (int i = 0; i < 100; ++i) {
    const Cl3Element x = fixtures::random_element(rng);
    EXPECT_EQ(conj(x), oracle::conjugate(x));
  }
}

TEST(Cl3Element, OmegaIdempotentsAreOrthogonal) {
  EXPECT_EQ(kOmegaPlus * kOmegaPlus, kOmegaPlus);
  EXPECT_EQ(kOmegaMinus * kOmegaMinus, kOmegaMinus);
  EXPECT_EQ(kOmegaPlus * kOmegaMinus, Cl3Element{});
  EXPECT_EQ(kOmegaPlus + kOmegaMinus, Cl3Element::scalar(1));
}

TEST(Cl3Element, NormFormIsCentralAndMultiplicative) {
  Rng rng(13);
  for (int i = 0; i < 1000; ++i) {
    const Cl3Element x = fixtures::random_element(rng), y = fixtures::random_element(rng);
    const Cl3Element n = norm_form(x);
    for (std::size_t k = 1; k + 1 < kCl3Dim; ++k) EXPECT_NEAR(n[k], 0.0, 1e-14);
    EXPECT_TRUE(approx_equal(norm_form(x * y), norm_form(x) * norm_form(y)));
  }
}

TEST(Cl3Element, ScalarPartOfNormIsEuclideanSquare) {
  Rng rng(14);
  for (int i = 0; i < 200; ++i) {
    const Cl3Element x = fixtures::random_element(rng);
    EXPECT_NEAR(norm_form(x).real(), abs(x) * abs(x), 1e-13);
  }
}

TEST(Cl3Element, ApproxEqualUsesRelativeAndAbsoluteTolerance) {
  const Cl3Element a = Cl3Element::scalar(1e6);
  EXPECT_TRUE(approx_equal(a, a + Cl3Element::scalar(1e-6)));
  EXPECT_FALSE(approx_equal(a, a + Cl3Element::scalar(1.0)));
  EXPECT_TRUE(approx_equal(Cl3Element{}, Cl3Element::scalar(1e-13)));
}

TEST(Cl3Element, PrintsCoefficientsWithBladeNames) {
  std::ostringstream os;
  os << e(Blade::e12);
  EXPECT_NE(os.str().find("1*e12"), std::string::npos);
}

TEST(Split, RoundTripsAndIsAnAlgebraHomomorphism) {
  Rng rng(15);
  for (int i = 0; i < 1000; ++i) {
    const Cl3Element x = fixtures::random_element(rng), y = fixtures::random_element(rng);
    EXPECT_TRUE(approx_equal(unsplit(split(x)), x));
    const QuatPair sx = split(x), sy = split(y), sxy = split(x * y);
    EXPECT_TRUE(approx_equal(sxy.q, sx.q * sy.q));
    EXPECT_TRUE(approx_equal(sxy.p, sx.p * sy.p));
  }
}

TEST(Split, AgreesWithLinearSystemOracle) {
  // Columns: images of the eight unit (q, p) pairs under
  // (q, p) -> omega_+ E(q) + omega_- E(p), with products from the oracle.
  std::array<Cl3Element, 8> cols;
  for (int k = 0; k < 8; ++k) {
    Quaternion q{}, p{};
    double* slot = k < 4 ? &q.w : &p.w;
    slot[k % 4] = 1.0;
    cols[k] = oracle::product(kOmegaPlus, embed(q)) + oracle::product(kOmegaMinus, embed(p));
  }
  Rng rng(16);
  for (int i = 0; i < 200; ++i) {
    const Cl3Element x = fixtures::random_element(rng);
    const auto c = oracle::coordinates(cols, x);
    const QuatPair got = split(x);
    EXPECT_NEAR(got.q.w, c[0], 1e-12);
    EXPECT_NEAR(got.q.x, c[1], 1e-12);
    EXPECT_NEAR(got.q.y, c[2], 1e-12);
    EXPECT_NEAR(got.q.z, c[3], 1e-12);
    EXPECT_NEAR(got.p.w, c[4], 1e-12);
    EXPECT_NEAR(got.p.x, c[5], 1e-12);
    EXPECT_NEAR(got.p.y, c[6], 1e-12);
    EXPECT_NEAR(got.p.z, c[7], 1e-12);
  }
}

TEST(Split, EuclideanNormIsHalfTheSumOfQuaternionNorms) {
  Rng rng(17);
  for (int i = 0; i < 200; ++i) {
    const Cl3Element x = fixtures::random_element(rng);
    const QuatPair s = split(x);
    EXPECT_NEAR(abs(x) * abs(x), 0.5 * (abs(s.q) * abs(s.q) + abs(s.p) * abs(s.p)), 1e-13);
  }
}

TEST(Quaternion, HamiltonRelations) {
  const Quaternion i{0, 1, 0, 0}, j{0, 0, 1, 0}, k{0, 0, 0, 1};
  EXPECT_EQ(i * j, k);
  EXPECT_EQ(j * k, i);
  EXPECT_EQ(k * i, j);
  EXPECT_EQ(i * j * k, (Quaternion{-1, 0, 0, 0}));
}

TEST(EvenEmbedding, IsMultiplicative) {
  Rng rng(18);
  for (int t = 0; t < 200; ++t) {
    const Quaternion a{rng.gaussian(), rng.gaussian(), rng.gaussian(), rng.gaussian()};
    const Quaternion b{rng.gaussian(), rng.gaussian(), rng.gaussian(), rng.gaussian()};
    EXPECT_TRUE(approx_equal(embed(a * b), oracle::product(embed(a), embed(b))));
    EXPECT_TRUE(approx_equal(even_to_quaternion(embed(a)), a));
  }
}

TEST(Rng, IsDeterministicPerSeed) {
  Rng a(99), b(99), c(100);
  for (int i = 0; i < 10; ++i) {
    const double x = a.uniform();
    EXPECT_EQ(x, b.uniform());
    EXPECT_GE(x, 0.0);
    EXPECT_LT(x, 1.0);
  }
  EXPECT_NE(Rng(99).next(), c.next());
}
