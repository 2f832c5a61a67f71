#pragma once

// Least-squares approximation of slice regular functions on compact symmetric
// sets by slice polynomials and by rational slice functions with prescribed
// poles, and the error-curve experiment pairing it with the Runge analysis.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cone_runge/domain.hpp"
#include "cone_runge/runge.hpp"
#include "cone_runge/slice.hpp"
#include "cone_runge/stem.hpp"

namespace cone_runge {

struct SamplerOptions {
  int max_plane_samples = 4000;
  int min_plane_samples = 400;
  int j_samples = 16;
  std::uint64_t seed = 0;
};

// Plane samples of a compact symmetric K inside D together with sampled
// imaginary units. Every sample has a 5x5 block of D cells around it.
class CompactSampler {
 public:
  // Throws Error(kCompactNotInDomain) or Error(kTooFewSamples), plus the
  // rasterization errors of the compact spec.
  static CompactSampler build(const DomainSpec& compact, const DomainGrid& domain,
                              const SamplerOptions& options = {});

  const DomainGrid& domain() const { return domain_; }
  // Closed under conjugation; the upper half (Im >= 0) comes first.
  const std::vector<Complex>& points() const { return points_; }
  const std::vector<Cl3Element>& units() const { return units_; }
  // max |z| over the samples, used to scale the monomials.
  double radius() const { return radius_; }

 private:
  DomainGrid domain_;
  std::vector<Complex> points_;
  std::vector<Cl3Element> units_;
  double radius_ = 1;
};

// One prescribed pole: a real point (beta == 0) or the sphere alpha + beta S.
struct Pole {
  double alpha = 0;
  double beta = 0;
  friend bool operator==(const Pole&, const Pole&) = default;
};

// Real polynomial vanishing exactly on the pole: z - alpha or (z - alpha)^2 + beta^2.
RealPolynomial pole_factor(const Pole& p);

// Denominator used at numerator degree d: prod_a q_a^m with
// m = floor(d / (2 sum deg q_a)); 1 for an empty pole list.
RealPolynomial family_denominator(const std::vector<Pole>& poles, int degree);

struct ApproxResult {
  int degree = 0;
  double sup_error = 0;   // max over plane samples x units of |f - g|
  double stem_error = 0;  // max over plane samples of ||F - G||
  RealPolynomial denominator;
  SlicePolynomial numerator;
};

// Throws Error(kDegreeTooLargeForSamples) and stem evaluation errors.
ApproxResult poly_approx(const SliceFunction& f, const CompactSampler& K, int degree);

// Throws Error(kPoleInsideDomain) if a finite pole lies in D.
ApproxResult rational_approx(const SliceFunction& f, const CompactSampler& K, const std::vector<Pole>& poles,
                             int degree);

enum class ExperimentVerdict { kConvergent, kStalled, kInconclusive };
std::string_view to_string(ExperimentVerdict v);

inline constexpr double kConvergedError = 1e-5;
inline constexpr double kDefaultNoiseFloor = 1e-12;

struct ExperimentRecord {
  std::vector<ApproxResult> rows;  // sorted by degree
  std::vector<Pole> poles;         // finite poles; infinity is always included
  double noise_floor = kDefaultNoiseFloor;
  ExperimentVerdict verdict = ExperimentVerdict::kInconclusive;
  RungeReport report;
  // Convergent iff Runge pair, stalled iff not.
  bool agrees_with_report() const;
};

// Convergent if every error in the last quartile of degrees is below 1e-5,
// otherwise stalled if the minimum error is at least 10x the noise floor.
ExperimentVerdict classify(const std::vector<ApproxResult>& rows, double noise_floor);

// One representative pole per bounded complement component of D1.
std::vector<Pole> pole_set(const DomainGrid& D1);

struct ExperimentOptions {
  SamplerOptions sampler;
  unsigned threads = 0;  // 0: hardware concurrency
};

std::vector<int> default_degrees();

ExperimentRecord runge_experiment(const DomainSpec& D, const DomainSpec& D1, const DomainSpec& compact,
                                  const SliceFunction& f, std::vector<int> degrees,
                                  const ExperimentOptions& options = {});

}  // namespace cone_runge
