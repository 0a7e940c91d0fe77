#pragma once

// Exact arithmetic in K = Q_p at the level needed for orbital-integral
// enumeration: scalars are exact rationals carried as
//     x = p^val * (num/den),   p coprime to num and den,
// and balls are cosets c + p^k O with the center reduced mod p^k.  Every
// operation is exact; there is no floating point and no precision loss
// anywhere in this layer.  Overflow of the (bounded) integer parts throws,
// it never wraps.

#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace shalika {

// Trichotomy for set predicates evaluated on balls.
enum class Ternary { inside, outside, undecided };

namespace detail {

using i64 = std::int64_t;
using i128 = __int128;

inline i64 checked_cast(i128 v, const char* what) {
  if (v > static_cast<i128>(std::numeric_limits<i64>::max()) ||
      v < static_cast<i128>(std::numeric_limits<i64>::min()))
    throw std::overflow_error(std::string("integer overflow in ") + what);
  return static_cast<i64>(v);
}

inline i64 checked_mul(i64 a, i64 b, const char* what) {
  return checked_cast(static_cast<i128>(a) * b, what);
}

// p^e for small e, overflow-checked.
inline i64 ipow(i64 base, int e, const char* what = "ipow") {
  i64 r = 1;
  for (int i = 0; i < e; ++i) r = checked_mul(r, base, what);
  return r;
}

// a mod m in [0, m)
inline i64 mod_floor(i64 a, i64 m) {
  i64 r = a % m;
  return r < 0 ? r + m : r;
}

inline i64 mulmod(i64 a, i64 b, i64 m) {
  return static_cast<i64>((static_cast<i128>(a) * b) % m);
}

// Modular inverse of a mod m, gcd(a, m) must be 1.
inline i64 invmod(i64 a, i64 m) {
  i64 t = 0, new_t = 1, r = m, new_r = mod_floor(a, m);
  while (new_r != 0) {
    i64 q = r / new_r;
    i64 tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw std::domain_error("invmod: not invertible");
  return mod_floor(t, m);
}

}  // namespace detail

// One element of Q_p, exactly.
class PAdicScalar {
 public:
  static constexpr int kInfValuation = std::numeric_limits<int>::max();

  PAdicScalar() : p_(0), val_(kInfValuation), num_(0), den_(1) {}

  static PAdicScalar zero(int p) {
    PAdicScalar x;
    x.p_ = p;
    return x;
  }

  static PAdicScalar from_int(int p, std::int64_t n) {
    return from_rational(p, n, 1);
  }

  static PAdicScalar from_rational(int p, std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::domain_error("PAdicScalar: zero denominator");
    PAdicScalar x;
    x.p_ = p;
    if (num == 0) {
      x.val_ = kInfValuation;
      x.num_ = 0;
      x.den_ = 1;
      return x;
    }
    int v = 0;
    while (num % p == 0) {
      num /= p;
      ++v;
    }
    while (den % p == 0) {
      den /= p;
      --v;
    }
    if (den < 0) {
      den = -den;
      num = -num;
    }
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    x.val_ = v;
    x.num_ = num / g;
    x.den_ = den / g;
    return x;
  }

  // x = p^k
  static PAdicScalar uniformizer_pow(int p, int k) {
    PAdicScalar x;
    x.p_ = p;
    x.val_ = k;
    x.num_ = 1;
    x.den_ = 1;
    return x;
  }

  static PAdicScalar one(int p) { return from_int(p, 1); }

  int prime() const { return p_; }
  bool is_zero() const { return val_ == kInfValuation; }

  // p-adic valuation; kInfValuation for the exact zero.
  int valuation() const { return val_; }

  std::int64_t unit_num() const { return num_; }
  std::int64_t unit_den() const { return den_; }

  // |x| = q^{-v(x)} with q = p; 0 for the exact zero.
  double abs_val() const {
    if (is_zero()) return 0.0;
    return std::pow(static_cast<double>(p_), -static_cast<double>(val_));
  }

  // Residue of the unit part in (Z/p^digits)^x, in [1, p^digits).
  std::int64_t unit_residue(int digits) const {
    if (is_zero()) throw std::domain_error("unit_residue of zero");
    return unit_residue_mod(detail::ipow(p_, digits, "unit_residue"));
  }

  // Residue of the unit part mod m (m a p-power).
  std::int64_t unit_residue_mod(std::int64_t m) const {
    if (is_zero()) throw std::domain_error("unit_residue of zero");
    std::int64_t a = detail::mod_floor(num_, m);
    if (den_ == 1) return a;
    return detail::mulmod(a, detail::invmod(den_, m), m);
  }

  PAdicScalar operator-() const {
    PAdicScalar x = *this;
    x.num_ = -x.num_;
    return x;
  }

  friend PAdicScalar operator+(const PAdicScalar& a, const PAdicScalar& b) {
    a.check_same(b);
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    // p^va (na/da) + p^vb (nb/db), va <= vb:
    //   p^va (na db + nb da p^{vb-va}) / (da db)
    const PAdicScalar& lo = a.val_ <= b.val_ ? a : b;
    const PAdicScalar& hi = a.val_ <= b.val_ ? b : a;
    int shift = hi.val_ - lo.val_;
    detail::i128 num = static_cast<detail::i128>(lo.num_) * hi.den_;
    if (shift <= 62) {  // otherwise hi is below any representable correction
      detail::i128 ps = 1;
      bool fits = true;
      for (int i = 0; i < shift; ++i) {
        ps *= lo.p_;
        if (ps > static_cast<detail::i128>(std::numeric_limits<std::int64_t>::max())) {
          fits = false;
          break;
        }
      }
      if (fits)
        num += static_cast<detail::i128>(hi.num_) * lo.den_ * ps;
      else
        throw std::overflow_error("PAdicScalar::add: operand spread too wide");
    } else {
      throw std::overflow_error("PAdicScalar::add: operand spread too wide");
    }
    if (num == 0) return zero(a.p_);
    std::int64_t n = detail::checked_cast(num, "PAdicScalar::add");
    std::int64_t d = detail::checked_mul(lo.den_, hi.den_, "PAdicScalar::add");
    PAdicScalar r = from_rational(a.p_, n, d);
    r.val_ += lo.val_;
    return r;
  }

  friend PAdicScalar operator-(const PAdicScalar& a, const PAdicScalar& b) {
    return a + (-b);
  }

  friend PAdicScalar operator*(const PAdicScalar& a, const PAdicScalar& b) {
    a.check_same(b);
    if (a.is_zero() || b.is_zero()) return zero(a.p_);
    std::int64_t n = detail::checked_mul(a.num_, b.num_, "PAdicScalar::mul");
    std::int64_t d = detail::checked_mul(a.den_, b.den_, "PAdicScalar::mul");
    PAdicScalar r = from_rational(a.p_, n, d);
    r.val_ += a.val_ + b.val_;
    return r;
  }

  friend PAdicScalar operator/(const PAdicScalar& a, const PAdicScalar& b) {
    a.check_same(b);
    if (b.is_zero()) throw std::domain_error("PAdicScalar: division by zero");
    if (a.is_zero()) return zero(a.p_);
    std::int64_t n = detail::checked_mul(a.num_, b.den_, "PAdicScalar::div");
    std::int64_t d = detail::checked_mul(a.den_, b.num_, "PAdicScalar::div");
    PAdicScalar r = from_rational(a.p_, n, d);
    r.val_ += a.val_ - b.val_;
    return r;
  }

  PAdicScalar pow(int e) const {
    if (is_zero()) {
      if (e <= 0) throw std::domain_error("PAdicScalar: 0^nonpositive");
      return *this;
    }
    PAdicScalar base = e >= 0 ? *this : one(p_) / *this;
    int k = e >= 0 ? e : -e;
    PAdicScalar r = one(p_);
    for (int i = 0; i < k; ++i) r = r * base;
    return r;
  }

  friend bool operator==(const PAdicScalar& a, const PAdicScalar& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    return a.p_ == b.p_ && a.val_ == b.val_ && a.num_ == b.num_ &&
           a.den_ == b.den_;
  }
  friend bool operator!=(const PAdicScalar& a, const PAdicScalar& b) {
    return !(a == b);
  }

  std::string to_string() const;

 private:
  void check_same(const PAdicScalar& o) const {
    if (p_ != o.p_) throw std::invalid_argument("PAdicScalar: mixed primes");
  }

  int p_;
  int val_;
  std::int64_t num_, den_;
};

// A coset c + p^k O (k = +exact means the single point c).  Normal form keeps
// the center reduced mod p^k: either c = 0 or v(c) < k with integral unit
// numerator and denominator 1, so engine centers never grow.
class PAdicBall {
 public:
  // Radius exponent used for exact points; large enough that min/+ arithmetic
  // with real exponents never reaches it from below.
  static constexpr int kExact = 1 << 20;

  PAdicBall() = default;
  PAdicBall(PAdicScalar center, int radius_exp)
      : center_(std::move(center)), k_(radius_exp > kExact ? kExact : radius_exp) {
    reduce();
  }

  static PAdicBall point(PAdicScalar c) { return PAdicBall(std::move(c), kExact); }
  static PAdicBall integers(int p) {  // O
    return PAdicBall(PAdicScalar::zero(p), 0);
  }

  const PAdicScalar& center() const { return center_; }
  int radius_exponent() const { return k_; }
  bool is_point() const { return k_ >= kExact; }
  int prime() const { return center_.prime(); }

  // Valuation of every element if constant on the ball, i.e. v(c) < k;
  // otherwise the ball is p^k O and valuations vary (returns k as a lower
  // bound with exact=false).
  struct ValuationBound {
    int min_val;
    bool exact;
  };
  ValuationBound valuation_bound() const {
    if (center_.is_zero()) {
      if (is_point()) return {PAdicScalar::kInfValuation, true};
      return {k_, false};
    }
    return {center_.valuation(), true};
  }

  friend PAdicBall operator+(const PAdicBall& a, const PAdicBall& b) {
    int k = std::min(a.k_, b.k_);
    return fused_linear(a, 1, b, 1, k);
  }

  friend PAdicBall operator-(const PAdicBall& a, const PAdicBall& b) {
    int k = std::min(a.k_, b.k_);
    return fused_linear(a, 1, b, -1, k);
  }

  PAdicBall operator-() const {
    PAdicBall r = *this;
    r.center_ = -r.center_;
    return r;
  }

  friend PAdicBall operator*(const PAdicBall& a, const PAdicBall& b) {
    // {xy} = ca cb + (ca p^kb O + cb p^ka O + p^{ka+kb} O); the enclosure is
    // the largest of the three ideals, and is exact as a set.
    int k = clamp_add(a.k_, b.k_);
    if (!a.center_.is_zero()) k = std::min(k, clamp_add(a.center_.valuation(), b.k_));
    if (!b.center_.is_zero()) k = std::min(k, clamp_add(b.center_.valuation(), a.k_));
    if (a.center_.is_zero() || b.center_.is_zero())
      return PAdicBall(PAdicScalar::zero(a.prime()), k);
    int p = a.prime();
    int v = a.center_.valuation() + b.center_.valuation();
    if (k != kExact) {
      // center product reduced mod p^{k-v}, so numerators never leave int64
      int digits = k - v;
      if (digits <= 0) return PAdicBall(PAdicScalar::zero(p), k);
      guard_digits(p, digits);
      std::int64_t m = detail::ipow(p, digits, "ball mul");
      std::int64_t u = detail::mulmod(a.center_.unit_residue_mod(m),
                                      b.center_.unit_residue_mod(m), m);
      return assemble(p, v, u, k);
    }
    return PAdicBall(a.center_ * b.center_, k);
  }

  // Inverse of a ball not containing 0 (requires v(c) < k): the image is
  // exactly c^{-1} + p^{k - 2 v(c)} O.
  PAdicBall inverse() const {
    auto vb = valuation_bound();
    if (!vb.exact)
      throw std::domain_error("PAdicBall::inverse: ball contains 0");
    int p = prime();
    if (center_.is_zero())
      throw std::domain_error("PAdicBall::inverse: zero point");
    PAdicScalar inv = PAdicScalar::one(p) / center_;
    if (is_point()) return point(inv);
    return PAdicBall(inv, k_ - 2 * center_.valuation());
  }

  PAdicBall pow(int e) const {
    int p = prime();
    if (e == 0) return point(PAdicScalar::one(p));
    PAdicBall base = e > 0 ? *this : inverse();
    int n = e > 0 ? e : -e;
    PAdicBall r = base;
    for (int i = 1; i < n; ++i) r = r * base;
    return r;
  }

  // Position of the ball relative to the ideal p^m O.
  Ternary against_ideal(int m) const {
    auto vb = valuation_bound();
    if (vb.exact) {
      if (vb.min_val >= m && k_ >= m) return Ternary::inside;
      if (vb.min_val < m && vb.min_val < k_) return Ternary::outside;
      // v(c) >= m but radius sticks out of the ideal: mixed.
      return Ternary::undecided;
    }
    // ball = p^k O with k < m (k >= m would have been reduced to center 0
    // with exact bound): contains points in and out of p^m O unless k >= m.
    return k_ >= m ? Ternary::inside : Ternary::undecided;
  }

  // Membership in O = p^0 O.
  Ternary integrality() const { return against_ideal(0); }

  // Whether every element is a unit / no element is a unit.
  Ternary against_units() const {
    Ternary in_o = against_ideal(0);
    if (in_o == Ternary::outside) return Ternary::outside;
    Ternary in_m = against_ideal(1);
    if (in_m == Ternary::inside) return Ternary::outside;  // all in pO
    if (in_o == Ternary::inside && in_m == Ternary::outside)
      return Ternary::inside;
    return Ternary::undecided;
  }

  bool contains(const PAdicScalar& x) const {
    PAdicScalar d = x - center_;
    if (d.is_zero()) return true;
    if (is_point()) return false;
    return d.valuation() >= k_;
  }

  // The p children c + i p^k + p^{k+1} O, i = 0..p-1, partitioning the ball.
  std::vector<PAdicBall> split() const {
    if (is_point()) throw std::domain_error("PAdicBall::split: point");
    int p = prime();
    std::vector<PAdicBall> out;
    out.reserve(p);
    for (int i = 0; i < p; ++i) {
      PAdicBall inc(PAdicScalar::from_int(p, i) * PAdicScalar::uniformizer_pow(p, k_),
                    kExact);
      out.push_back(fused_linear(*this, 1, inc, 1, k_ + 1));
    }
    return out;
  }

  friend bool operator==(const PAdicBall& a, const PAdicBall& b) {
    return a.k_ == b.k_ && a.center_ == b.center_;
  }

  std::string to_string() const;

 private:
  static int clamp_add(int a, int b) {
    long s = static_cast<long>(a) + b;
    return s >= kExact ? kExact : static_cast<int>(s);
  }

  static void guard_digits(int p, int digits) {
    if (digits > max_digits(p))
      throw std::overflow_error("PAdicBall: cell too deep for int64 centers");
  }

  static PAdicBall assemble(int p, int v, std::int64_t unit_mod, int k) {
    if (unit_mod == 0) return PAdicBall(PAdicScalar::zero(p), k);
    PAdicBall r;
    r.center_ = PAdicScalar::from_int(p, unit_mod) * PAdicScalar::uniformizer_pow(p, v);
    r.k_ = k;
    return r;  // from_int strips p-powers, so normal form holds
  }

  // sa*a + sb*b as a ball of radius exponent k, with the center combined in
  // modular arithmetic so numerators stay within int64.
  static PAdicBall fused_linear(const PAdicBall& a, int sa, const PAdicBall& b,
                                int sb, int k) {
    int p = a.prime();
    if (k == kExact) {
      PAdicScalar c = (sa > 0 ? a.center_ : -a.center_) +
                      (sb > 0 ? b.center_ : -b.center_);
      return PAdicBall(std::move(c), k);
    }
    int v = std::numeric_limits<int>::max();
    if (!a.center_.is_zero()) v = std::min(v, a.center_.valuation());
    if (!b.center_.is_zero()) v = std::min(v, b.center_.valuation());
    if (v >= k) return PAdicBall(PAdicScalar::zero(p), k);
    int digits = k - v;
    guard_digits(p, digits);
    std::int64_t m = detail::ipow(p, digits, "ball add");
    std::int64_t acc = 0;
    for (const auto* term : {&a, &b}) {
      int sign = term == &a ? sa : sb;
      if (term->center_.is_zero()) continue;
      int shift = term->center_.valuation() - v;
      if (shift >= digits) continue;
      std::int64_t u = detail::mulmod(term->center_.unit_residue_mod(m),
                                      detail::ipow(p, shift, "ball add"), m);
      acc = detail::mod_floor(acc + sign * u, m);
    }
    return assemble(p, v, acc, k);
  }

  // Reduce the center mod p^k so numerators stay bounded; a ball whose center
  // lies in its own ideal is centered at 0.
  void reduce() {
    if (is_point() || center_.is_zero()) return;
    int p = center_.prime();
    int v = center_.valuation();
    if (v >= k_) {
      center_ = PAdicScalar::zero(p);
      return;
    }
    int digits = k_ - v;
    if (digits > max_digits(p))
      throw std::overflow_error("PAdicBall::reduce: center too deep for int64");
    std::int64_t r = center_.unit_residue(digits);
    center_ = PAdicScalar::from_int(p, r) * PAdicScalar::uniformizer_pow(p, v);
  }

  static int max_digits(int p) {
    // p^digits must fit in int64 with headroom for one multiply in int128.
    switch (p) {
      case 3: return 38;
      case 5: return 26;
      case 7: return 22;
      default: {
        int d = 0;
        detail::i128 v = 1;
        while (v * p < (detail::i128(1) << 62)) {
          v *= p;
          ++d;
        }
        return d;
      }
    }
  }

  PAdicScalar center_;
  int k_ = 0;
};

// Haar bookkeeping for one coset: additive normalization vol(O) = 1 gives
// vol(c + p^k O) = q^{-k}; multiplicative normalization vol(O^x) = 1 gives
// vol(u (1 + p^k O)-type unit cells) = (1 - q^{-1})^{-1} q^{-k}.
struct MeasureWeight {
  enum class Normalization { additive, multiplicative };
  int log_q_volume = 0;  // exponent e in vol = q^e (times the unit-group
                         // factor under the multiplicative normalization)
  Normalization normalization = Normalization::additive;
};

std::string to_string(Ternary t);

}  // namespace shalika
