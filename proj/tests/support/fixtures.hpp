#pragma once

#include <string>
#include <vector>

#include "cone_runge/clifford.hpp"
#include "cone_runge/domain.hpp"
#include "cone_runge/random.hpp"
#include "cone_runge/stem.hpp"

namespace fixtures {

using namespace cone_runge;

inline constexpr Window kWindow{-5, 5, -5, 5};

inline ShapeEntry add_disk(double cx, double cy, double r) { return {ShapeOp::kAdd, Disk{cx, cy, r}}; }
inline ShapeEntry sub_disk(double cx, double cy, double r) { return {ShapeOp::kSubtract, Disk{cx, cy, r}}; }
inline ShapeEntry add_rect(double x0, double y0, double x1, double y1) {
  return {ShapeOp::kAdd, Rect{x0, y0, x1, y1}};
}
inline ShapeEntry sub_rect(double x0, double y0, double x1, double y1) {
  return {ShapeOp::kSubtract, Rect{x0, y0, x1, y1}};
}

inline DomainSpec spec(std::vector<ShapeEntry> shapes, int resolution = 32) {
  return {kWindow, resolution, std::move(shapes)};
}

inline DomainSpec disk(double r, int res = 32) { return spec({add_disk(0, 0, r)}, res); }
inline DomainSpec annulus(double r0, double r1, int res = 32) {
  return spec({add_disk(0, 0, r1), sub_disk(0, 0, r0)}, res);
}
inline DomainSpec conjugate_disks(int res = 32) { return spec({add_disk(0, 1.5, 0.5)}, res); }
inline DomainSpec two_holes(int res = 32) {
  return spec({add_disk(0, 0, 3.5), sub_disk(-1.5, 0, 0.6), sub_disk(1.5, 0, 0.6)}, res);
}

inline std::string tests_data(const std::string& name) { return std::string(CONE_RUNGE_TEST_DATA) + "/" + name; }

inline Cl3Element random_element(Rng& rng, double scale = 1.0) {
  Cl3Element x;
  for (std::size_t k = 0; k < kCl3Dim; ++k) x[k] = rng.uniform(-scale, scale);
  return x;
}

inline SlicePolynomial random_polynomial(Rng& rng, int degree) {
  std::vector<Cl3Element> c;
  for (int k = 0; k <= degree; ++k) c.push_back(random_element(rng));
  return SlicePolynomial(std::move(c));
}

inline SlicePolynomial real_polynomial(std::vector<double> c) {
  return SlicePolynomial::from_real(RealPolynomial(std::move(c)));
}

// Random nested pair: D1 from random shapes, D = D1 with extra holes cut out.
struct NestedPair {
  DomainSpec D, D1;
};

inline NestedPair random_nested_pair(Rng& rng, int res = 32) {
  std::vector<ShapeEntry> shapes;
  const int adds = 1 + static_cast<int>(rng.uniform() * 3);
  for (int i = 0; i < adds; ++i) {
    if (rng.uniform() < 0.7) {
      shapes.push_back(add_disk(rng.uniform(-2, 2), rng.uniform(-2.5, 2.5), rng.uniform(0.8, 2.2)));
    } else {
      const double x = rng.uniform(-3, 1), y = rng.uniform(-3, 1);
      shapes.push_back(add_rect(x, y, x + rng.uniform(1, 3), y + rng.uniform(1, 3)));
    }
  }
  const int subs = static_cast<int>(rng.uniform() * 3);
  for (int i = 0; i < subs; ++i) {
    shapes.push_back(sub_disk(rng.uniform(-2.5, 2.5), rng.uniform(-2.5, 2.5), rng.uniform(0.2, 0.7)));
  }
  NestedPair p;
  p.D1 = spec(shapes, res);
  const int extra = static_cast<int>(rng.uniform() * 4);
  for (int i = 0; i < extra; ++i) {
    if (rng.uniform() < 0.6) {
      shapes.push_back(sub_disk(rng.uniform(-2.5, 2.5), rng.uniform(-2.5, 2.5), rng.uniform(0.2, 0.8)));
    } else {
      const double x = rng.uniform(-2.5, 2), y = rng.uniform(-2.5, 2);
      shapes.push_back(sub_rect(x, y, x + rng.uniform(0.2, 0.9), y + rng.uniform(0.2, 0.9)));
    }
  }
  p.D = spec(shapes, res);
  return p;
}

}  // namespace fixtures
