#include "cone_runge/selftest.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "cone_runge/cone.hpp"
#include "cone_runge/random.hpp"

namespace cone_runge {

namespace {

Cl3Element random_element(Rng& rng) {
  Cl3Element x;
  for (std::size_t k = 0; k < kCl3Dim; ++k) x[k] = rng.uniform(-1.0, 1.0);
  return x;
}

double rel_error(const Cl3Element& a, const Cl3Element& b) {
  return max_abs_coeff(a - b) / std::max(1.0, std::max(max_abs_coeff(a), max_abs_coeff(b)));
}

double rel_error(const Quaternion& a, const Quaternion& b) {
  const Quaternion d = a - b;
  const double m = std::max({std::fabs(d.w), std::fabs(d.x), std::fabs(d.y), std::fabs(d.z)});
  return m / std::max({1.0, abs(a), abs(b)});
}

std::string triple(std::size_t a, std::size_t b, std::size_t c) {
  std::ostringstream os;
  os << "(" << kBladeNames[a] << ", " << kBladeNames[b] << ", " << kBladeNames[c] << ")";
  return os.str();
}

void fail(SelftestCheck& check, const std::string& what) {
  if (!check.passed) return;
  check.passed = false;
  check.counterexample = what;
}

}  // namespace

bool SelftestReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const SelftestCheck& c) { return c.passed; });
}

SelftestReport algebra_selftest(const ProductTable& table, long samples, std::uint64_t seed) {
  SelftestReport report;
  const auto m = [&](const Cl3Element& x, const Cl3Element& y) { return mul(table, x, y); };
  const auto basis = [](std::size_t k) { return Cl3Element::basis(static_cast<Blade>(k)); };

  SelftestCheck assoc{"associativity", 0, true, {}};
  for (std::size_t a = 0; a < kCl3Dim; ++a) {
    for (std::size_t b = 0; b < kCl3Dim; ++b) {
      for (std::size_t c = 0; c < kCl3Dim; ++c) {
        ++assoc.cases;
        if (!(m(m(basis(a), basis(b)), basis(c)) == m(basis(a), m(basis(b), basis(c))))) {
          fail(assoc, "(ab)c != a(bc) for basis triple " + triple(a, b, c));
        }
      }
    }
  }
  report.checks.push_back(assoc);

  SelftestCheck anti{"conjugation_anti_automorphism", 0, true, {}};
  for (std::size_t a = 0; a < kCl3Dim; ++a) {
    for (std::size_t b = 0; b < kCl3Dim; ++b) {
      ++anti.cases;
      if (!(conj(m(basis(a), basis(b))) == m(conj(basis(b)), conj(basis(a))))) {
        fail(anti, "conj(ab) != conj(b) conj(a) for basis pair (" + std::string(kBladeNames[a]) + ", " +
                       std::string(kBladeNames[b]) + ")");
      }
    }
  }
  report.checks.push_back(anti);

  SelftestCheck gens{"generator_relations", 0, true, {}};
  for (std::size_t i = 1; i <= 3; ++i) {
    for (std::size_t j = 1; j <= 3; ++j) {
      ++gens.cases;
      const Cl3Element s = m(basis(i), basis(j)) + m(basis(j), basis(i));
      if (!(s == Cl3Element::scalar(i == j ? -2.0 : 0.0))) {
        fail(gens, "e_i e_j + e_j e_i != -2 delta_ij for (" + std::string(kBladeNames[i]) + ", " + std::string(kBladeNames[j]) + ")");
      }
    }
  }
  report.checks.push_back(gens);

  SelftestCheck idem{"omega_idempotents", 3, true, {}};
  if (!(m(kOmegaPlus, kOmegaPlus) == kOmegaPlus)) fail(idem, "omega_+^2 != omega_+");
  if (!(m(kOmegaMinus, kOmegaMinus) == kOmegaMinus)) fail(idem, "omega_-^2 != omega_-");
  if (!(m(kOmegaPlus, kOmegaMinus) == Cl3Element{})) fail(idem, "omega_+ omega_- != 0");
  report.checks.push_back(idem);

  Rng rng(seed);
  SelftestCheck norm{"norm_multiplicativity", 0, true, {}};
  SelftestCheck hom{"split_homomorphism", 0, true, {}};
  for (long s = 0; s < samples; ++s) {
    const Cl3Element x = random_element(rng), y = random_element(rng);
    const Cl3Element xy = m(x, y);
    ++norm.cases;
    const Cl3Element nx = m(x, conj(x)), ny = m(y, conj(y)), nxy = m(xy, conj(xy));
    if (rel_error(nxy, m(nx, ny)) > 1e-10) {
      std::ostringstream os;
      os << "n(xy) != n(x) n(y) at x = " << x << ", y = " << y;
      fail(norm, os.str());
    }
    ++hom.cases;
    const QuatPair sx = split(x), sy = split(y), sxy = split(xy);
    if (rel_error(sxy.q, sx.q * sy.q) > 1e-10 || rel_error(sxy.p, sx.p * sy.p) > 1e-10) {
      std::ostringstream os;
      os << "split(xy) != split(x) split(y) at x = " << x << ", y = " << y;
      fail(hom, os.str());
    }
  }
  report.checks.push_back(norm);
  report.checks.push_back(hom);

  SelftestCheck sphere{"root_sphere_samples", 0, true, {}};
  for (long s = 0; s < samples; ++s) {
    const Cl3Element J = sample_root_sphere(rng);
    ++sphere.cases;
    const Cl3Element sq = m(J, J) + Cl3Element::scalar(1.0);
    if (max_abs_coeff(sq) > 1e-10 || !in_cone(J, 1e-10)) {
      std::ostringstream os;
      os << "sampled J = " << J << " is not a square root of -1 in the cone";
      fail(sphere, os.str());
    }
  }
  report.checks.push_back(sphere);

  SelftestCheck homology{"sphere_homology", 1, true, {}};
  if (!(sphere_homology() == SphereHomologyTable{{1, 0, 2, 0, 1, 0, 0}})) {
    fail(homology, "homology ranks of S differ from {1,0,2,0,1,0,0}");
  }
  report.checks.push_back(homology);
  return report;
}

}  // namespace cone_runge
