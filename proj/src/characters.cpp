#include "shalika/characters.hpp"

#include <stdexcept>

namespace shalika {

namespace {

std::int64_t phi_prime_power(int p, int f) {
  if (f == 0) return 1;
  return detail::ipow(p, f - 1, "phi") * (p - 1);
}

}  // namespace

std::int64_t smallest_primitive_root(int p, int f) {
  std::int64_t m = detail::ipow(p, f, "primitive root");
  std::int64_t order = phi_prime_power(p, f);
  // Factor the group order, then test candidates by the standard criterion.
  std::vector<std::int64_t> prime_factors;
  std::int64_t n = order;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      prime_factors.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) prime_factors.push_back(n);
  for (std::int64_t g = 2; g < m; ++g) {
    if (g % p == 0) continue;
    bool primitive = true;
    for (std::int64_t q : prime_factors) {
      std::int64_t e = order / q;
      std::int64_t r = 1, base = g % m;
      while (e > 0) {
        if (e & 1) r = detail::mulmod(r, base, m);
        base = detail::mulmod(base, base, m);
        e >>= 1;
      }
      if (r == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) return g;
  }
  throw std::logic_error("no primitive root found");
}

QuasiCharacter QuasiCharacter::unramified(int p, std::complex<double> pi_value) {
  QuasiCharacter chi;
  chi.p_ = p;
  chi.pi_value_ = pi_value;
  return chi;
}

QuasiCharacter QuasiCharacter::make(int p, int f, std::int64_t index,
                                    std::complex<double> pi_value) {
  if (f <= 0) return unramified(p, pi_value);
  QuasiCharacter chi;
  chi.p_ = p;
  chi.f_ = f;
  chi.pi_value_ = pi_value;
  chi.modulus_ = detail::ipow(p, f, "QuasiCharacter");
  chi.order_ = phi_prime_power(p, f);
  chi.index_ = detail::mod_floor(index, chi.order_);
  chi.generator_ = smallest_primitive_root(p, f);
  chi.dlog_.assign(chi.modulus_, -1);
  std::int64_t acc = 1;
  for (std::int64_t e = 0; e < chi.order_; ++e) {
    chi.dlog_[acc] = static_cast<std::int32_t>(e);
    acc = detail::mulmod(acc, chi.generator_, chi.modulus_);
  }
  // Exact conductor: smallest f' with chi_0 trivial on 1 + p^{f'} O.  The
  // subgroup 1 + p^j O mod p^f is generated by 1 + p^j.
  chi.conductor_ = f;
  for (int j = f - 1; j >= 0; --j) {
    bool trivial = true;
    if (j == 0) {
      trivial = chi.index_ == 0;
    } else {
      std::int64_t gen = detail::mod_floor(1 + detail::ipow(p, j, "conductor"),
                                           chi.modulus_);
      std::int64_t sub_order = detail::ipow(p, f - j, "conductor");
      std::int64_t u = 1;
      for (std::int64_t i = 0; i < sub_order; ++i) {
        if (!chi.unit_angle(u).is_zero()) {
          trivial = false;
          break;
        }
        u = detail::mulmod(u, gen, chi.modulus_);
      }
    }
    if (trivial)
      chi.conductor_ = j;
    else
      break;
  }
  return chi;
}

Angle QuasiCharacter::unit_angle(std::int64_t residue) const {
  if (f_ == 0) return Angle{};
  residue = detail::mod_floor(residue, modulus_);
  if (residue == 0 || dlog_[residue] < 0)
    throw std::domain_error("QuasiCharacter: residue not a unit");
  return Angle::reduced(
      detail::checked_mul(index_, dlog_[residue], "QuasiCharacter"), order_);
}

std::complex<double> QuasiCharacter::eval(const PAdicScalar& x) const {
  if (x.is_zero()) throw std::domain_error("QuasiCharacter: chi(0) undefined");
  std::complex<double> val = unit_angle(x).to_complex();
  int v = x.valuation();
  std::complex<double> piv = 1.0;
  std::complex<double> base = v >= 0 ? pi_value_ : 1.0 / pi_value_;
  for (int i = 0; i < (v >= 0 ? v : -v); ++i) piv *= base;
  return val * piv;
}

std::optional<Angle> QuasiCharacter::unit_angle_on_ball(const PAdicBall& b) const {
  if (f_ == 0) return Angle{};
  if (b.against_units() != Ternary::inside) return std::nullopt;
  if (!b.is_point() && b.radius_exponent() < conductor_) return std::nullopt;
  return unit_angle(b.center());
}

std::vector<QuasiCharacter> enumerate_characters(int p, int f) {
  if (f < 1) throw std::invalid_argument("enumerate_characters: f >= 1 required");
  std::int64_t order = phi_prime_power(p, f);
  std::vector<QuasiCharacter> out;
  out.reserve(order);
  for (std::int64_t j = 0; j < order; ++j) out.push_back(QuasiCharacter::make(p, f, j));
  return out;
}

}  // namespace shalika
