#include "cone_runge/clifford.hpp"

#include <algorithm>
#include <ostream>

namespace cone_runge {

double abs(const Cl3Element& x) {
  double s = 0.0;
  for (double v : x.coeffs()) s += v * v;
  return std::sqrt(s);
}

double max_abs_coeff(const Cl3Element& x) {
  double m = 0.0;
  for (double v : x.coeffs()) m = std::max(m, std::fabs(v));
  return m;
}

bool approx_equal(const Cl3Element& a, const Cl3Element& b, double rel_tol, double abs_tol) {
  const double tol = std::max(abs_tol, rel_tol * std::max(max_abs_coeff(a), max_abs_coeff(b)));
  for (std::size_t k = 0; k < kCl3Dim; ++k) {
    if (!(std::fabs(a[k] - b[k]) <= tol)) return false;
  }
  return true;
}

std::ostream& operator<<(std::ostream& os, const Cl3Element& x) {
  os << '[';
  for (std::size_t k = 0; k < kCl3Dim; ++k) {
    if (k) os << ", ";
    os << x[k] << '*' << kBladeNames[k];
  }
  return os << ']';
}

double abs(const Quaternion& q) { return std::sqrt(q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z); }

bool approx_equal(const Quaternion& a, const Quaternion& b, double rel_tol, double abs_tol) {
  const auto inf = [](const Quaternion& q) {
    return std::max({std::fabs(q.w), std::fabs(q.x), std::fabs(q.y), std::fabs(q.z)});
  };
  const double tol = std::max(abs_tol, rel_tol * std::max(inf(a), inf(b)));
  return std::fabs(a.w - b.w) <= tol && std::fabs(a.x - b.x) <= tol && std::fabs(a.y - b.y) <= tol &&
         std::fabs(a.z - b.z) <= tol;
}

std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
  return os << '(' << q.w << ", " << q.x << "i, " << q.y << "j, " << q.z << "k)";
}

bool approx_equal(const QuatPair& a, const QuatPair& b, double rel_tol, double abs_tol) {
  return approx_equal(a.q, b.q, rel_tol, abs_tol) && approx_equal(a.p, b.p, rel_tol, abs_tol);
}

}  // namespace cone_runge
