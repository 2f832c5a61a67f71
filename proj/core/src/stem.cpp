#include "cone_runge/stem.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cone_runge/errors.hpp"

namespace cone_runge {

namespace {

constexpr double kRealTol = 1e-10;

double sq_norm(const Cl3Element& x) {
  double s = 0;
  for (double v : x.coeffs()) s += v * v;
  return s;
}

}  // namespace

double stem_norm(const StemValue& v) { return std::sqrt(sq_norm(v.f1) + sq_norm(v.f2)); }

RealPolynomial::RealPolynomial(std::vector<double> coeffs) : c_(std::move(coeffs)) { trim(); }

void RealPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0.0) c_.pop_back();
}

RealPolynomial RealPolynomial::linear_factor(double a) { return RealPolynomial({-a, 1.0}); }

RealPolynomial RealPolynomial::sphere_factor(double alpha, double beta) {
  return RealPolynomial({alpha * alpha + beta * beta, -2.0 * alpha, 1.0});
}

Complex RealPolynomial::operator()(Complex z) const {
  Complex acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

double RealPolynomial::magnitude_bound(double abs_z) const {
  double acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * abs_z + std::fabs(*it);
  return acc;
}

RealPolynomial RealPolynomial::pow(int n) const {
  RealPolynomial out({1.0});
  for (int k = 0; k < n; ++k) out = out * *this;
  return out;
}

RealPolynomial operator*(const RealPolynomial& a, const RealPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<double> c(a.c_.size() + b.c_.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return RealPolynomial(std::move(c));
}

RealPolynomial operator+(const RealPolynomial& a, const RealPolynomial& b) {
  std::vector<double> c(std::max(a.c_.size(), b.c_.size()), 0.0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return RealPolynomial(std::move(c));
}

std::pair<RealPolynomial, RealPolynomial> RealPolynomial::divmod(const RealPolynomial& d) const {
  if (d.is_zero()) throw std::invalid_argument("RealPolynomial::divmod: zero divisor");
  std::vector<double> rem = c_;
  const int dd = d.degree();
  if (degree() < dd) return {RealPolynomial{}, *this};
  std::vector<double> quot(degree() - dd + 1, 0.0);
  const double lead = d.c_.back();
  for (int k = degree() - dd; k >= 0; --k) {
    const double q = rem[k + dd] / lead;
    quot[k] = q;
    for (int j = 0; j <= dd; ++j) rem[k + j] -= q * d.c_[j];
    rem[k + dd] = 0.0;
  }
  rem.resize(dd);
  return {RealPolynomial(std::move(quot)), RealPolynomial(std::move(rem))};
}

std::vector<Complex> RealPolynomial::roots() const {
  const int n = degree();
  if (n < 1) return {};
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) companion(i, n - 1) = -c_[i] / c_[n];
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
  std::vector<Complex> out;
  out.reserve(n);
  std::vector<double> dc;
  for (int k = 1; k <= n; ++k) dc.push_back(k * c_[k]);
  const RealPolynomial deriv(dc);
  for (int i = 0; i < n; ++i) {
    Complex z = solver.eigenvalues()[i];
    for (int it = 0; it < 8; ++it) {
      const Complex d = deriv(z);
      if (std::abs(d) == 0.0) break;
      const Complex step = (*this)(z) / d;
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) break;
      z -= step;
      if (std::abs(step) <= 1e-15 * (1.0 + std::abs(z))) break;
    }
    out.push_back(z);
  }
  return out;
}

SlicePolynomial SlicePolynomial::from_real(const RealPolynomial& p) {
  std::vector<Cl3Element> c;
  c.reserve(p.coeffs().size());
  for (double v : p.coeffs()) c.push_back(Cl3Element::scalar(v));
  return SlicePolynomial(std::move(c));
}

StemValue SlicePolynomial::stem(Complex z) const {
  StemValue acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc = z * acc;
    acc.f1 += *it;
  }
  return acc;
}

Cl3Element SlicePolynomial::series(const Cl3Element& x) const {
  Cl3Element power = Cl3Element::scalar(1.0);
  Cl3Element out;
  for (const Cl3Element& a : c_) {
    out += power * a;
    power = power * x;
  }
  return out;
}

SlicePolynomial SlicePolynomial::conjugate() const {
  std::vector<Cl3Element> c;
  c.reserve(c_.size());
  for (const Cl3Element& a : c_) c.push_back(conj(a));
  return SlicePolynomial(std::move(c));
}

SlicePolynomial stem_product(const SlicePolynomial& a, const SlicePolynomial& b) {
  if (a.c_.empty() || b.c_.empty()) return {};
  std::vector<Cl3Element> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return SlicePolynomial(std::move(c));
}

SlicePolynomial operator+(const SlicePolynomial& a, const SlicePolynomial& b) {
  std::vector<Cl3Element> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return SlicePolynomial(std::move(c));
}

SlicePolynomial operator*(const RealPolynomial& r, const SlicePolynomial& p) {
  return stem_product(SlicePolynomial::from_real(r), p);
}

std::optional<RealPolynomial> SlicePolynomial::as_real(double tol) const {
  std::vector<double> c;
  c.reserve(c_.size());
  for (const Cl3Element& a : c_) {
    for (std::size_t k = 1; k < kCl3Dim; ++k) {
      if (std::fabs(a[k]) > tol) return std::nullopt;
    }
    c.push_back(a[0]);
  }
  return RealPolynomial(std::move(c));
}

RationalSliceFunction RationalSliceFunction::build(const SlicePolynomial& a, const SlicePolynomial& b) {
  const SlicePolynomial ac = a.conjugate();
  const SlicePolynomial norm = stem_product(ac, a);
  const auto den = norm.as_real(kRealTol);
  if (!den) throw Error(ErrorCode::kNotRealDenominator, "A^c A has non-real coefficients");
  // Drop coefficients that are pure rounding noise relative to the largest one.
  std::vector<double> c = den->coeffs();
  double scale = 0;
  for (double v : c) scale = std::max(scale, std::fabs(v));
  if (scale == 0.0) throw Error(ErrorCode::kZeroDenominator, "A^c A is identically zero");
  for (double& v : c) {
    if (std::fabs(v) <= 1e-15 * scale) v = 0.0;
  }
  RationalSliceFunction r;
  r.a_ = a;
  r.b_ = b;
  r.den_ = RealPolynomial(std::move(c));
  r.num_ = stem_product(ac, b);
  return r;
}

RationalSliceFunction RationalSliceFunction::from_parts(const RealPolynomial& q, const SlicePolynomial& p) {
  if (q.is_zero()) throw Error(ErrorCode::kZeroDenominator, "denominator is identically zero");
  RationalSliceFunction r;
  r.a_ = SlicePolynomial::from_real(q);
  r.b_ = p;
  r.den_ = q;
  r.num_ = p;
  return r;
}

StemValue RationalSliceFunction::stem(Complex z) const {
  const Complex d = den_(z);
  if (!(std::abs(d) > 1e-13 * den_.magnitude_bound(std::abs(z)))) {
    throw Error(ErrorCode::kOutOfDomain, "point lies on a singularity of the rational function");
  }
  return (1.0 / d) * num_.stem(z);
}

std::vector<Singularity> RationalSliceFunction::singularities() const {
  std::vector<Complex> roots = den_.roots();
  for (Complex& z : roots) z = {z.real(), std::fabs(z.imag())};
  std::sort(roots.begin(), roots.end(), [](Complex a, Complex b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  std::vector<Singularity> out;
  std::vector<Complex> centres;
  std::vector<int> counts;
  for (Complex z : roots) {
    bool merged = false;
    for (std::size_t k = 0; k < centres.size(); ++k) {
      if (std::abs(z - centres[k]) <= 1e-5 * (1.0 + std::abs(z))) {
        ++counts[k];
        merged = true;
        break;
      }
    }
    if (!merged) {
      centres.push_back(z);
      counts.push_back(1);
    }
  }
  for (std::size_t k = 0; k < centres.size(); ++k) {
    Singularity s;
    s.alpha = centres[k].real();
    s.beta = centres[k].imag() <= 1e-7 * (1.0 + std::abs(centres[k])) ? 0.0 : centres[k].imag();
    // A sphere is a conjugate pair of complex roots; after folding it is counted twice.
    s.multiplicity = s.is_real() ? counts[k] : counts[k] / 2;
    out.push_back(s);
  }
  return out;
}

TabulatedStem::TabulatedStem(GridGeometry geometry, std::vector<StemValue> nodes,
                             std::vector<std::uint8_t> defined)
    : geometry_(geometry), nodes_(std::move(nodes)), defined_(std::move(defined)) {
  if (nodes_.size() != geometry_.size() || defined_.size() != geometry_.size()) {
    throw std::invalid_argument("TabulatedStem: table size does not match the lattice");
  }
  const int real_row = geometry_.real_row();
  for (int r = real_row; r < geometry_.rows(); ++r) {
    const int m = geometry_.mirror_row(r);
    if (m < 0) continue;
    for (int c = 0; c < geometry_.cols(); ++c) {
      const std::size_t up = geometry_.index(c, r), down = geometry_.index(c, m);
      const bool def = defined_[up] && defined_[down];
      defined_[up] = defined_[down] = def;
      if (!def) continue;
      StemValue& a = nodes_[up];
      StemValue& b = nodes_[down];
      const Cl3Element f1 = 0.5 * (a.f1 + b.f1);
      const Cl3Element f2 = 0.5 * (a.f2 - b.f2);
      a = {f1, f2};
      b = {f1, -f2};
      if (r == real_row) a.f2 = b.f2 = Cl3Element{};
    }
  }
}

TabulatedStem TabulatedStem::sample(const DomainGrid& domain, const std::function<StemValue(Complex)>& fn) {
  const GridGeometry& g = domain.geometry();
  std::vector<StemValue> nodes(g.size());
  std::vector<std::uint8_t> defined(g.size(), 0);
  for (std::size_t idx = 0; idx < g.size(); ++idx) {
    if (!domain.contains(idx)) continue;
    nodes[idx] = fn({g.x(g.col_of(idx)), g.y(g.row_of(idx))});
    defined[idx] = 1;
  }
  return TabulatedStem(g, std::move(nodes), std::move(defined));
}

StemValue TabulatedStem::stem(Complex z) const {
  const GridGeometry& g = geometry_;
  const double fc = (z.real() - g.x(0)) / g.cell();
  const double fr = z.imag() / g.cell() + g.real_row();
  const int c0 = static_cast<int>(std::floor(fc));
  const int r0 = static_cast<int>(std::floor(fr));
  if (!std::isfinite(fc) || !std::isfinite(fr) || c0 < 0 || r0 < 0 || c0 + 1 >= g.cols() || r0 + 1 >= g.rows()) {
    throw Error(ErrorCode::kOutOfDomain, "point is outside the tabulated lattice");
  }
  const double tx = fc - c0, ty = fr - r0;
  StemValue out;
  const int dc[] = {0, 1, 0, 1};
  const int dr[] = {0, 0, 1, 1};
  const double w[] = {(1 - tx) * (1 - ty), tx * (1 - ty), (1 - tx) * ty, tx * ty};
  for (int k = 0; k < 4; ++k) {
    const std::size_t idx = g.index(c0 + dc[k], r0 + dr[k]);
    if (!defined_[idx]) throw Error(ErrorCode::kOutOfDomain, "point is outside the tabulated domain");
    out.f1 += w[k] * nodes_[idx].f1;
    out.f2 += w[k] * nodes_[idx].f2;
  }
  return out;
}

StemValue StemFunction::operator()(Complex z) const {
  return std::visit([&](const auto& impl) { return impl.stem(z); }, impl_);
}

}  // namespace cone_runge
