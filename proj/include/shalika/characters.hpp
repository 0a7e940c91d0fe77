#pragma once

// The fixed additive character psi of conductor exactly O and the
// multiplicative quasicharacters chi = chi_0 * (value at the uniformizer).
//
// psi is pinned globally to psi(x) = exp(2 pi i {x}) where {x} is the
// p-power-denominator fractional part, so psi(p^{-m} a) = e^{2 pi i a / p^m}.
// Character values are tracked as exact angles (reduced fractions of a full
// turn); conversion to complex<double> happens only at the edges.

#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "shalika/padic.hpp"

namespace shalika {

// An exact root of unity e^{2 pi i num/den}, 0 <= num < den.
struct Angle {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Angle reduced(std::int64_t n, std::int64_t d) {
    if (d < 0) {
      d = -d;
      n = -n;
    }
    n = detail::mod_floor(n, d);
    std::int64_t g = std::gcd(n, d);
    if (g == 0) g = 1;
    return Angle{n / g, d / g};
  }

  friend Angle operator+(const Angle& a, const Angle& b) {
    std::int64_t g = std::gcd(a.den, b.den);
    std::int64_t l = detail::checked_mul(a.den / g, b.den, "Angle::add");
    std::int64_t n = detail::checked_cast(
        static_cast<detail::i128>(a.num) * (l / a.den) +
            static_cast<detail::i128>(b.num) * (l / b.den),
        "Angle::add");
    return reduced(n, l);
  }

  Angle operator-() const { return reduced(-num, den); }
  Angle times(std::int64_t k) const {
    return reduced(detail::checked_mul(detail::mod_floor(k, den), num, "Angle::times"),
                   den);
  }

  bool is_zero() const { return num == 0; }
  friend bool operator==(const Angle& a, const Angle& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator<(const Angle& a, const Angle& b) {
    return a.den != b.den ? a.den < b.den : a.num < b.num;
  }

  std::complex<double> to_complex() const {
    if (num == 0) return {1.0, 0.0};
    double t = 2.0 * M_PI * static_cast<double>(num) / static_cast<double>(den);
    return {std::cos(t), std::sin(t)};
  }
};

// The additive character of K with conductor exactly O.
class AdditiveCharacterPsi {
 public:
  explicit AdditiveCharacterPsi(int p) : p_(p) {}

  int prime() const { return p_; }

  // psi(x) as an exact angle: 0 when v(x) >= 0, else a/p^m with m = -v(x).
  Angle angle(const PAdicScalar& x) const {
    if (x.is_zero() || x.valuation() >= 0) return Angle{};
    int m = -x.valuation();
    std::int64_t mod = detail::ipow(p_, m, "psi");
    std::int64_t a = x.unit_residue_mod(mod);
    return Angle::reduced(a, mod);
  }

  std::complex<double> eval(const PAdicScalar& x) const {
    return angle(x).to_complex();
  }

  // psi is constant on cosets of O: defined on a ball iff its radius
  // exponent is >= 0.  Returns the angle, or nullopt for NotConstant.
  std::optional<Angle> angle_on_ball(const PAdicBall& b) const {
    if (b.radius_exponent() < 0) return std::nullopt;
    return angle(b.center());
  }

  std::optional<std::complex<double>> eval_on_ball(const PAdicBall& b) const {
    auto a = angle_on_ball(b);
    if (!a) return std::nullopt;
    return a->to_complex();
  }

 private:
  int p_;
};

// A quasicharacter chi of K^x: finite-order character chi_0 of (Z/p^f)^x
// together with the value chi(p).  chi(p^v u) = chi_0(u mod p^f) chi(p)^v.
// chi_0 is cut out by the image of the smallest positive primitive root g
// mod p^f: chi_0(g) = e^{2 pi i index / phi(p^f)}.
class QuasiCharacter {
 public:
  // Unramified character (f = 0), chi(p) = pi_value.
  static QuasiCharacter unramified(int p, std::complex<double> pi_value = 1.0);

  // Character of (Z/p^f)^x with chi_0(g) = e^{2 pi i index/phi(p^f)}.
  static QuasiCharacter make(int p, int f, std::int64_t index,
                             std::complex<double> pi_value = 1.0);

  int prime() const { return p_; }
  // Modulus exponent the unit table lives on (0 when unramified).
  int table_modulus_exponent() const { return f_; }
  // Smallest f with chi_0 trivial on 1 + p^f O (0 = unramified).
  int conductor() const { return conductor_; }
  bool is_ramified() const { return conductor_ > 0; }
  std::complex<double> pi_value() const { return pi_value_; }
  void set_pi_value(std::complex<double> v) { pi_value_ = v; }
  std::int64_t generator() const { return generator_; }
  std::int64_t index() const { return index_; }
  std::int64_t order() const { return order_; }

  // chi_0 on a unit residue mod p^f (an exact angle).
  Angle unit_angle(std::int64_t residue) const;
  Angle unit_angle(const PAdicScalar& x) const {
    if (f_ == 0) return Angle{};
    return unit_angle(x.unit_residue(f_));
  }

  // Full evaluation chi(x) = chi_0(unit) * pi_value^{v(x)}.
  std::complex<double> eval(const PAdicScalar& x) const;

  // chi_0 on the unit part of every element of a unit ball; constant iff the
  // ball radius exponent is >= conductor (relative to the unit's valuation 0).
  std::optional<Angle> unit_angle_on_ball(const PAdicBall& b) const;

  bool is_trivial() const { return conductor_ == 0; }

 private:
  QuasiCharacter() = default;

  int p_ = 0;
  int f_ = 0;          // modulus exponent of the table
  int conductor_ = 0;  // exact conductor
  std::int64_t generator_ = 1;
  std::int64_t index_ = 0;  // chi_0(g) = e^{2 pi i index / order_}
  std::int64_t order_ = 1;  // phi(p^f)
  std::int64_t modulus_ = 1;
  std::complex<double> pi_value_ = 1.0;
  std::vector<std::int32_t> dlog_;  // dlog_[u] for units u mod p^f, else -1
};

// All phi(p^f) characters of (Z/p^f)^x with pi_value = 1; those of exact
// conductor f are exactly the entries with conductor() == f.
std::vector<QuasiCharacter> enumerate_characters(int p, int f);

// Smallest positive primitive root mod p^f (p odd prime, f >= 1).
std::int64_t smallest_primitive_root(int p, int f);

}  // namespace shalika
