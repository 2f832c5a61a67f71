#include "cone_runge/approx.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <stdexcept>
#include <thread>

#include "cone_runge/cone.hpp"
#include "cone_runge/errors.hpp"
#include "cone_runge/random.hpp"
#include "cone_runge/topology.hpp"

namespace cone_runge {

namespace {

constexpr int kMinUnits = 16;
constexpr int kClearance = 2;  // cells of D required around each sample

std::string point_text(double x, double y) {
  return "(" + std::to_string(x) + ", " + std::to_string(y) + ")";
}

const CompletionBasis& fit_basis() {
  static const CompletionBasis basis = make_completion_basis(Cl3Element::basis(Blade::e1));
  return basis;
}

// Samples of f and its eight intrinsic components, shared by all fits.
struct Target {
  std::vector<Complex> points;
  std::vector<StemValue> stem;
  std::vector<SplitComponents> comps;
  int equations = 0;  // independent real equations per component
};

Target make_target(const SliceFunction& f, const CompactSampler& K) {
  Target t;
  t.points = K.points();
  t.stem.reserve(t.points.size());
  for (const Complex z : t.points) t.stem.push_back(f.stem()(z));
  t.comps = refined_split_components(f, fit_basis(), t.points);
  for (const Complex z : t.points) {
    if (z.imag() > 0) t.equations += 2;
    if (z.imag() == 0) t.equations += 1;
  }
  return t;
}

ApproxResult fit(const Target& t, const CompactSampler& K, const RealPolynomial& q, int degree) {
  if (degree < 0) throw std::invalid_argument("approximation degree must be non-negative");
  const int n = degree + 1;
  if (n > t.equations) {
    throw Error(ErrorCode::kDegreeTooLargeForSamples,
                std::to_string(n) + " unknowns per component but only " + std::to_string(t.equations) +
                    " independent equations");
  }
  const double radius = K.radius();
  const Eigen::Index rows = 2 * static_cast<Eigen::Index>(t.points.size());
  Eigen::MatrixXd a(rows, n);
  Eigen::MatrixXd b(rows, 8);
  for (std::size_t i = 0; i < t.points.size(); ++i) {
    const Complex z = t.points[i];
    const Complex inv_q = 1.0 / q(z);
    Complex phi = inv_q;
    const Complex step = z / radius;
    for (int k = 0; k < n; ++k) {
      a(2 * i, k) = phi.real();
      a(2 * i + 1, k) = phi.imag();
      phi *= step;
    }
    for (int c = 0; c < 8; ++c) {
      b(2 * i, c) = t.comps[i][c].real();
      b(2 * i + 1, c) = t.comps[i][c].imag();
    }
  }
  Eigen::VectorXd scale(n);
  for (int k = 0; k < n; ++k) {
    const double s = a.col(k).norm();
    scale(k) = s > 0 ? s : 1.0;
    a.col(k) /= scale(k);
  }
  const Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(a);
  const Eigen::MatrixXd gamma = qr.solve(b);

  const CompletionBasis& basis = fit_basis();
  std::vector<Cl3Element> coeffs(n);
  double rk = 1.0;
  for (int k = 0; k < n; ++k) {
    Cl3Element ak;
    for (int c = 0; c < 8; ++c) ak += (gamma(k, c) / scale(k)) * basis.products[c];
    coeffs[k] = ak / rk;
    rk *= radius;
  }

  ApproxResult r;
  r.degree = degree;
  r.denominator = q;
  r.numerator = SlicePolynomial(std::move(coeffs));
  for (std::size_t i = 0; i < t.points.size(); ++i) {
    const Complex z = t.points[i];
    const StemValue g = (1.0 / q(z)) * r.numerator.stem(z);
    const StemValue d = t.stem[i] - g;
    r.stem_error = std::max(r.stem_error, stem_norm(d));
    for (const Cl3Element& J : K.units()) r.sup_error = std::max(r.sup_error, abs(d.f1 + J * d.f2));
  }
  return r;
}

void require_poles_outside(const CompactSampler& K, const std::vector<Pole>& poles) {
  for (const Pole& p : poles) {
    if (K.domain().contains_point(p.alpha, p.beta)) {
      throw Error(ErrorCode::kPoleInsideDomain, "pole " + point_text(p.alpha, p.beta) + " lies in D");
    }
  }
}

bool divides(const RealPolynomial& d, const RealPolynomial& p) {
  if (p.is_zero()) return true;
  const auto [quot, rem] = p.divmod(d);
  double scale = 0, err = 0;
  for (double v : p.coeffs()) scale = std::max(scale, std::fabs(v));
  for (double v : rem.coeffs()) err = std::max(err, std::fabs(v));
  return err <= 1e-9 * scale;
}

RealPolynomial component(const SlicePolynomial& p, std::size_t k) {
  std::vector<double> c;
  for (const Cl3Element& a : p.coeffs()) c.push_back(a[k]);
  return RealPolynomial(std::move(c));
}

// Q^{-1} P with common real factors at the singularities cancelled.
std::pair<RealPolynomial, SlicePolynomial> reduced_parts(const RationalSliceFunction& r) {
  RealPolynomial den = r.denominator();
  SlicePolynomial num = r.numerator();
  for (const Singularity& s : r.singularities()) {
    const RealPolynomial q = pole_factor({s.alpha, s.beta});
    for (;;) {
      if (den.degree() < q.degree() || !divides(q, den)) break;
      bool all = true;
      for (std::size_t k = 0; k < kCl3Dim && all; ++k) all = divides(q, component(num, k));
      if (!all) break;
      den = den.divmod(q).first;
      std::vector<std::vector<double>> parts(kCl3Dim);
      std::size_t len = 0;
      for (std::size_t k = 0; k < kCl3Dim; ++k) {
        parts[k] = component(num, k).divmod(q).first.coeffs();
        len = std::max(len, parts[k].size());
      }
      std::vector<Cl3Element> c(len);
      for (std::size_t k = 0; k < kCl3Dim; ++k) {
        for (std::size_t j = 0; j < parts[k].size(); ++j) c[j][k] = parts[k][j];
      }
      num = SlicePolynomial(std::move(c));
    }
  }
  return {den, num};
}

// Whether f lies in the family fitted at `degree`.
bool in_family(const SliceFunction& f, const std::vector<Pole>& poles, int degree) {
  const RealPolynomial q = family_denominator(poles, degree);
  if (const SlicePolynomial* p = f.stem().polynomial()) return p->degree() + q.degree() <= degree;
  if (const RationalSliceFunction* r = f.stem().rational()) {
    const auto [den, num] = reduced_parts(*r);
    if (!divides(den, q)) return false;
    return num.degree() + q.degree() - den.degree() <= degree;
  }
  return false;
}

}  // namespace

CompactSampler CompactSampler::build(const DomainSpec& compact, const DomainGrid& domain,
                                     const SamplerOptions& options) {
  if (options.j_samples < kMinUnits) {
    throw Error(ErrorCode::kTooFewSamples, "at least " + std::to_string(kMinUnits) + " imaginary units are required");
  }
  const DomainGrid k = rasterize(compact);
  const GridGeometry& kg = k.geometry();
  const GridGeometry& dg = domain.geometry();
  std::vector<Complex> upper;
  for (int r = kg.real_row(); r < kg.rows(); ++r) {
    for (int c = 0; c < kg.cols(); ++c) {
      if (!k.contains(c, r)) continue;
      const double x = kg.x(c), y = kg.y(r);
      const auto idx = dg.locate(x, y);
      bool clear = idx.has_value();
      if (clear) {
        const int dc = dg.col_of(*idx), dr = dg.row_of(*idx);
        for (int u = -kClearance; u <= kClearance && clear; ++u) {
          for (int v = -kClearance; v <= kClearance && clear; ++v) {
            const int cc = dc + u, rr = dr + v;
            clear = cc >= 0 && rr >= 0 && cc < dg.cols() && rr < dg.rows() && domain.contains(cc, rr);
          }
        }
      }
      if (!clear) {
        throw Error(ErrorCode::kCompactNotInDomain,
                    "compact sample " + point_text(x, y) + " is within 2 cells of the boundary of D");
      }
      upper.emplace_back(x, y);
    }
  }
  std::size_t total = 0;
  for (const Complex z : upper) total += z.imag() > 0 ? 2 : 1;
  const std::size_t cap = static_cast<std::size_t>(std::max(1, options.max_plane_samples));
  const std::size_t stride = std::max<std::size_t>(1, (total + cap - 1) / cap);

  CompactSampler s;
  s.domain_ = domain;
  for (std::size_t i = 0; i < upper.size(); i += stride) s.points_.push_back(upper[i]);
  const std::size_t n_upper = s.points_.size();
  for (std::size_t i = 0; i < n_upper; ++i) {
    if (s.points_[i].imag() > 0) s.points_.push_back(std::conj(s.points_[i]));
  }
  if (s.points_.size() < static_cast<std::size_t>(options.min_plane_samples)) {
    throw Error(ErrorCode::kTooFewSamples, std::to_string(s.points_.size()) + " plane samples, need at least " +
                                               std::to_string(options.min_plane_samples));
  }
  s.radius_ = 0;
  for (const Complex z : s.points_) s.radius_ = std::max(s.radius_, std::abs(z));
  if (s.radius_ == 0) s.radius_ = 1;
  Rng rng(options.seed);
  for (int j = 0; j < options.j_samples; ++j) s.units_.push_back(sample_root_sphere(rng));
  return s;
}

RealPolynomial pole_factor(const Pole& p) {
  return p.beta == 0.0 ? RealPolynomial::linear_factor(p.alpha) : RealPolynomial::sphere_factor(p.alpha, p.beta);
}

RealPolynomial family_denominator(const std::vector<Pole>& poles, int degree) {
  RealPolynomial base({1.0});
  for (const Pole& p : poles) base = base * pole_factor(p);
  if (poles.empty()) return base;
  const int m = degree / (2 * base.degree());
  return base.pow(m);
}

ApproxResult poly_approx(const SliceFunction& f, const CompactSampler& K, int degree) {
  return fit(make_target(f, K), K, RealPolynomial({1.0}), degree);
}

ApproxResult rational_approx(const SliceFunction& f, const CompactSampler& K, const std::vector<Pole>& poles,
                             int degree) {
  require_poles_outside(K, poles);
  return fit(make_target(f, K), K, family_denominator(poles, degree), degree);
}

std::string_view to_string(ExperimentVerdict v) {
  switch (v) {
    case ExperimentVerdict::kConvergent:
      return "convergent";
    case ExperimentVerdict::kStalled:
      return "stalled";
    case ExperimentVerdict::kInconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

bool ExperimentRecord::agrees_with_report() const {
  return report.runge_pair() ? verdict == ExperimentVerdict::kConvergent : verdict == ExperimentVerdict::kStalled;
}

ExperimentVerdict classify(const std::vector<ApproxResult>& rows, double noise_floor) {
  if (rows.empty()) return ExperimentVerdict::kInconclusive;
  const std::size_t quartile = std::max<std::size_t>(1, (rows.size() + 3) / 4);
  bool converged = true;
  for (std::size_t i = rows.size() - quartile; i < rows.size(); ++i) {
    converged = converged && rows[i].sup_error < kConvergedError;
  }
  if (converged) return ExperimentVerdict::kConvergent;
  double min_error = rows.front().sup_error;
  for (const ApproxResult& r : rows) min_error = std::min(min_error, r.sup_error);
  if (min_error >= 10.0 * noise_floor) return ExperimentVerdict::kStalled;
  return ExperimentVerdict::kInconclusive;
}

std::vector<Pole> pole_set(const DomainGrid& D1) {
  std::vector<Pole> out;
  for (const ComplementComponent& c : summarize(D1).bounded_complement_components) {
    if (c.representative.y < 0) continue;  // the conjugate of an upper component
    const Pole p{c.representative.x, c.meets_real ? 0.0 : c.representative.y};
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
  }
  return out;
}

std::vector<int> default_degrees() {
  std::vector<int> d;
  for (int k = 0; k <= 40; ++k) d.push_back(k);
  return d;
}

ExperimentRecord runge_experiment(const DomainSpec& D, const DomainSpec& D1, const DomainSpec& compact,
                                  const SliceFunction& f, std::vector<int> degrees,
                                  const ExperimentOptions& options) {
  if (!(D.window == D1.window) || D.resolution != D1.resolution) {
    throw Error(ErrorCode::kGridMismatch, "D and D1 must share window and resolution");
  }
  const DomainGrid dg = rasterize(D);
  const DomainGrid d1g = rasterize(D1);
  ExperimentRecord rec;
  rec.report = analyze_pair(dg, d1g);
  const CompactSampler K = CompactSampler::build(compact, dg, options.sampler);
  rec.poles = pole_set(d1g);
  require_poles_outside(K, rec.poles);

  std::sort(degrees.begin(), degrees.end());
  degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());
  const Target target = make_target(f, K);

  rec.rows.resize(degrees.size());
  std::vector<std::exception_ptr> errors(degrees.size());
  std::atomic<std::size_t> next{0};
  const auto work = [&] {
    for (std::size_t i = next++; i < degrees.size(); i = next++) {
      try {
        rec.rows[i] = fit(target, K, family_denominator(rec.poles, degrees[i]), degrees[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, degrees.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work);
  work();
  for (std::thread& t : pool) t.join();
  for (const std::exception_ptr& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  for (std::size_t i = 0; i < degrees.size(); ++i) {
    if (in_family(f, rec.poles, degrees[i])) {
      rec.noise_floor = std::max(rec.rows[i].sup_error, 1e-15);
      break;
    }
  }
  rec.verdict = classify(rec.rows, rec.noise_floor);
  return rec;
}

}  // namespace cone_runge
