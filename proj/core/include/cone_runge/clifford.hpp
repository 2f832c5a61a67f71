#pragma once

// The real Clifford algebra R_3 (generators e1, e2, e3 with
// e_i e_j + e_j e_i = -2 delta_ij), the quaternions, and the splitting
// R_3 = omega_+ R_3^+ (+) omega_- R_3^+ onto a pair of quaternions.
//
// Coefficients are stored in the fixed basis order
//   [e0, e1, e2, e3, e12, e13, e23, e123].

#include <array>
#include <string_view>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>

namespace cone_runge {

inline constexpr std::size_t kCl3Dim = 8;

enum class Blade : std::uint8_t { e0, e1, e2, e3, e12, e13, e23, e123 };

inline constexpr std::array<std::string_view, kCl3Dim> kBladeNames = {"e0", "e1", "e2", "e3",
                                                                   "e12", "e13", "e23", "e123"};

// Generator bitmask of each basis blade (bit g-1 set iff e_g is a factor).
inline constexpr std::array<std::uint8_t, kCl3Dim> kBladeMask = {0b000, 0b001, 0b010, 0b100,
                                                                  0b011, 0b101, 0b110, 0b111};

constexpr std::size_t blade_index(Blade b) { return static_cast<std::size_t>(b); }

constexpr std::size_t blade_from_mask(std::uint8_t mask) {
  for (std::size_t k = 0; k < kCl3Dim; ++k) {
    if (kBladeMask[k] == mask) return k;
  }
  return kCl3Dim;
}

struct BladeProduct {
  std::uint8_t index = 0;
  std::int8_t sign = 1;

  friend constexpr bool operator==(const BladeProduct&, const BladeProduct&) = default;
};

// Reduces a word e_{w0} e_{w1} ... in the generators to (+/-) a sorted
// blade. Adjacent distinct generators anticommute; e_g e_g = -1.
struct NormalizedWord {
  std::uint8_t mask = 0;
  std::int8_t sign = 1;
};

constexpr NormalizedWord normalize_word(std::array<std::uint8_t, 6> word, std::size_t len) {
  int sign = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 0; k + 1 < len; ++k) {
      if (word[k] == word[k + 1]) {
        sign = -sign;
        for (std::size_t m = k; m + 2 < len; ++m) word[m] = word[m + 2];
        len -= 2;
        changed = true;
        break;
      }
      if (word[k] > word[k + 1]) {
        std::uint8_t t = word[k];
        word[k] = word[k + 1];
        word[k + 1] = t;
        sign = -sign;
        changed = true;
        break;
      }
    }
  }
  NormalizedWord out;
  for (std::size_t k = 0; k < len; ++k) out.mask |= static_cast<std::uint8_t>(1u << (word[k] - 1));
  out.sign = static_cast<std::int8_t>(sign);
  return out;
}

// The 8x8 table of basis-blade products. The canonical table is generated at
// compile time from the defining relations; copies may be altered for
// negative-control testing of the self-test machinery.
class ProductTable {
 public:
  static constexpr ProductTable generate() {
    ProductTable t;
    for (std::size_t a = 0; a < kCl3Dim; ++a) {
      for (std::size_t b = 0; b < kCl3Dim; ++b) {
        std::array<std::uint8_t, 6> word{};
        std::size_t len = 0;
        for (std::uint8_t g = 1; g <= 3; ++g) {
          if (kBladeMask[a] & (1u << (g - 1))) word[len++] = g;
        }
        for (std::uint8_t g = 1; g <= 3; ++g) {
          if (kBladeMask[b] & (1u << (g - 1))) word[len++] = g;
        }
        const NormalizedWord n = normalize_word(word, len);
        t.entries_[a][b] = BladeProduct{static_cast<std::uint8_t>(blade_from_mask(n.mask)), n.sign};
      }
    }
    return t;
  }

  constexpr BladeProduct operator()(std::size_t a, std::size_t b) const { return entries_[a][b]; }

  constexpr ProductTable with_flipped_sign(std::size_t a, std::size_t b) const {
    ProductTable t = *this;
    t.entries_[a][b].sign = static_cast<std::int8_t>(-t.entries_[a][b].sign);
    return t;
  }

  friend constexpr bool operator==(const ProductTable&, const ProductTable&) = default;

 private:
  std::array<std::array<BladeProduct, kCl3Dim>, kCl3Dim> entries_{};
};

inline constexpr ProductTable kProductTable = ProductTable::generate();

class Cl3Element {
 public:
  using Coeffs = std::array<double, kCl3Dim>;

  constexpr Cl3Element() = default;
  constexpr explicit Cl3Element(const Coeffs& c) : c_(c) {}

  static constexpr Cl3Element scalar(double v) {
    Cl3Element x;
    x.c_[0] = v;
    return x;
  }
  static constexpr Cl3Element basis(Blade b, double v = 1.0) {
    Cl3Element x;
    x.c_[blade_index(b)] = v;
    return x;
  }

  constexpr double operator[](std::size_t k) const { return c_[k]; }
  constexpr double& operator[](std::size_t k) { return c_[k]; }
  constexpr double operator[](Blade b) const { return c_[blade_index(b)]; }
  constexpr const Coeffs& coeffs() const { return c_; }
  std::span<const double, kCl3Dim> span() const { return c_; }

  constexpr double real() const { return c_[0]; }

  constexpr Cl3Element& operator+=(const Cl3Element& o) {
    for (std::size_t k = 0; k < kCl3Dim; ++k) c_[k] += o.c_[k];
    return *this;
  }
  constexpr Cl3Element& operator-=(const Cl3Element& o) {
    for (std::size_t k = 0; k < kCl3Dim; ++k) c_[k] -= o.c_[k];
    return *this;
  }
  constexpr Cl3Element& operator*=(double s) {
    for (double& v : c_) v *= s;
    return *this;
  }

  friend constexpr Cl3Element operator+(Cl3Element a, const Cl3Element& b) { return a += b; }
  friend constexpr Cl3Element operator-(Cl3Element a, const Cl3Element& b) { return a -= b; }
  friend constexpr Cl3Element operator-(Cl3Element a) { return a *= -1.0; }
  friend constexpr Cl3Element operator*(Cl3Element a, double s) { return a *= s; }
  friend constexpr Cl3Element operator*(double s, Cl3Element a) { return a *= s; }
  friend constexpr Cl3Element operator/(Cl3Element a, double s) { return a *= (1.0 / s); }
  friend constexpr bool operator==(const Cl3Element&, const Cl3Element&) = default;

  bool is_finite() const {
    for (double v : c_) {
      if (!std::isfinite(v)) return false;
    }
    return true;
  }

 private:
  Coeffs c_{};
};

inline constexpr Cl3Element kOmegaPlus{{0.5, 0, 0, 0, 0, 0, 0, 0.5}};
inline constexpr Cl3Element kOmegaMinus{{0.5, 0, 0, 0, 0, 0, 0, -0.5}};

constexpr Cl3Element mul(const ProductTable& table, const Cl3Element& x, const Cl3Element& y) {
  Cl3Element out;
  for (std::size_t a = 0; a < kCl3Dim; ++a) {
    if (x[a] == 0.0) continue;
    for (std::size_t b = 0; b < kCl3Dim; ++b) {
      const BladeProduct p = table(a, b);
      out[p.index] += p.sign * x[a] * y[b];
    }
  }
  return out;
}

constexpr Cl3Element mul(const Cl3Element& x, const Cl3Element& y) { return mul(kProductTable, x, y); }

constexpr Cl3Element operator*(const Cl3Element& x, const Cl3Element& y) { return mul(x, y); }

// Clifford conjugation: e0 -> e0, e_i -> -e_i, e_ij -> -e_ij, e123 -> e123.
constexpr Cl3Element conj(const Cl3Element& x) {
  constexpr std::array<double, kCl3Dim> kSign = {1, -1, -1, -1, -1, -1, -1, 1};
  Cl3Element out;
  for (std::size_t k = 0; k < kCl3Dim; ++k) out[k] = kSign[k] * x[k];
  return out;
}

// t(x) = x + conj(x)
constexpr Cl3Element trace(const Cl3Element& x) { return x + conj(x); }

// n(x) = x conj(x)
constexpr Cl3Element norm_form(const Cl3Element& x) { return x * conj(x); }

// Euclidean norm of the coefficient vector.
double abs(const Cl3Element& x);
double max_abs_coeff(const Cl3Element& x);

// Coefficientwise |a_k - b_k| <= max(abs_tol, rel_tol * max(|a|_inf, |b|_inf)).
bool approx_equal(const Cl3Element& a, const Cl3Element& b, double rel_tol = 1e-10,
                  double abs_tol = 1e-12);

std::ostream& operator<<(std::ostream& os, const Cl3Element& x);

struct Quaternion {
  double w = 0, x = 0, y = 0, z = 0;

  constexpr Quaternion& operator+=(const Quaternion& o) {
    w += o.w;
    x += o.x;
    y += o.y;
    z += o.z;
    return *this;
  }
  constexpr Quaternion& operator-=(const Quaternion& o) {
    w -= o.w;
    x -= o.x;
    y -= o.y;
    z -= o.z;
    return *this;
  }
  friend constexpr Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
  friend constexpr Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
  friend constexpr Quaternion operator-(const Quaternion& a) { return {-a.w, -a.x, -a.y, -a.z}; }
  friend constexpr Quaternion operator*(double s, const Quaternion& a) {
    return {s * a.w, s * a.x, s * a.y, s * a.z};
  }
  friend constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) {
    return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
  }
  friend constexpr bool operator==(const Quaternion&, const Quaternion&) = default;
};

constexpr Quaternion conj(const Quaternion& q) { return {q.w, -q.x, -q.y, -q.z}; }
constexpr Quaternion trace(const Quaternion& q) { return {2.0 * q.w, 0, 0, 0}; }
constexpr Quaternion norm_form(const Quaternion& q) { return q * conj(q); }
double abs(const Quaternion& q);
bool approx_equal(const Quaternion& a, const Quaternion& b, double rel_tol = 1e-10,
                  double abs_tol = 1e-12);
std::ostream& operator<<(std::ostream& os, const Quaternion& q);

struct QuatPair {
  Quaternion q;
  Quaternion p;

  friend constexpr bool operator==(const QuatPair&, const QuatPair&) = default;
};

// Signs s such that 1 -> e0, i -> s[0] e23, j -> s[1] e13, k -> s[2] e12 is an
// algebra isomorphism H -> R_3^+. Found at compile time by exhaustive search.
struct EvenEmbedding {
  std::array<int, 3> sign{};
  bool found = false;
};

constexpr Cl3Element embed_with(const std::array<int, 3>& s, const Quaternion& q) {
  Cl3Element out;
  out[blade_index(Blade::e0)] = q.w;
  out[blade_index(Blade::e23)] = s[0] * q.x;
  out[blade_index(Blade::e13)] = s[1] * q.y;
  out[blade_index(Blade::e12)] = s[2] * q.z;
  return out;
}

constexpr EvenEmbedding find_even_embedding() {
  const std::array<Quaternion, 4> units = {Quaternion{1, 0, 0, 0}, Quaternion{0, 1, 0, 0},
                                           Quaternion{0, 0, 1, 0}, Quaternion{0, 0, 0, 1}};
  for (int bits = 0; bits < 8; ++bits) {
    const std::array<int, 3> s = {(bits & 1) ? -1 : 1, (bits & 2) ? -1 : 1, (bits & 4) ? -1 : 1};
    bool ok = true;
    for (const Quaternion& a : units) {
      for (const Quaternion& b : units) {
        if (!(embed_with(s, a * b) == embed_with(s, a) * embed_with(s, b))) ok = false;
      }
    }
    if (ok) return EvenEmbedding{s, true};
  }
  return {};
}

inline constexpr EvenEmbedding kEvenEmbedding = find_even_embedding();
static_assert(kEvenEmbedding.found, "no sign assignment makes H -> R_3^+ multiplicative");

constexpr Cl3Element embed(const Quaternion& q) { return embed_with(kEvenEmbedding.sign, q); }

// Inverse of embed on R_3^+; odd coefficients of x are ignored.
constexpr Quaternion even_to_quaternion(const Cl3Element& x) {
  const auto& s = kEvenEmbedding.sign;
  return {x[Blade::e0], s[0] * x[Blade::e23], s[1] * x[Blade::e13], s[2] * x[Blade::e12]};
}

// x = omega_+ embed(q) + omega_- embed(p). Writing x = a + e123 b with a, b
// even gives q = a + b and p = a - b, since e123 omega_(+/-) = (+/-) omega_(+/-).
constexpr QuatPair split(const Cl3Element& x) {
  Cl3Element even;
  Cl3Element odd;
  for (std::size_t k = 0; k < kCl3Dim; ++k) {
    if (kBladeMask[k] == 0 || kBladeMask[k] == 0b011 || kBladeMask[k] == 0b101 ||
        kBladeMask[k] == 0b110) {
      even[k] = x[k];
    } else {
      odd[k] = x[k];
    }
  }
  const Cl3Element b = Cl3Element::basis(Blade::e123) * odd;
  return {even_to_quaternion(even + b), even_to_quaternion(even - b)};
}

constexpr Cl3Element unsplit(const QuatPair& qp) {
  return kOmegaPlus * embed(qp.q) + kOmegaMinus * embed(qp.p);
}

bool approx_equal(const QuatPair& a, const QuatPair& b, double rel_tol = 1e-10,
                  double abs_tol = 1e-12);

}  // namespace cone_runge
