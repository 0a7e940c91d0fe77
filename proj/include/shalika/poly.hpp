#pragma once

// Sparse polynomials (integer exponents, so Laurent monomials are allowed)
// in the engine's coordinates, with exact p-adic coefficients.  Matrix
// entries of the orbital integrands are assembled symbolically once, as
// Mat4<Poly>, then evaluated per cell by ball arithmetic.

#include <cstdint>
#include <span>
#include <vector>

#include "shalika/matrix.hpp"

namespace shalika {

struct Monomial {
  // sorted by coordinate index; exponents nonzero
  std::vector<std::pair<std::uint8_t, std::int16_t>> factors;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.factors == b.factors;
  }
  friend bool operator<(const Monomial& a, const Monomial& b) {
    return a.factors < b.factors;
  }

  Monomial times(const Monomial& o) const {
    Monomial r;
    auto i = factors.begin();
    auto j = o.factors.begin();
    while (i != factors.end() || j != o.factors.end()) {
      if (j == o.factors.end() || (i != factors.end() && i->first < j->first)) {
        r.factors.push_back(*i++);
      } else if (i == factors.end() || j->first < i->first) {
        r.factors.push_back(*j++);
      } else {
        int e = i->second + j->second;
        if (e != 0) r.factors.emplace_back(i->first, static_cast<std::int16_t>(e));
        ++i;
        ++j;
      }
    }
    return r;
  }
};

class Poly {
 public:
  struct Term {
    PAdicScalar coeff;
    Monomial mono;
  };

  Poly() = default;

  static Poly constant(PAdicScalar c) {
    Poly q;
    if (!c.is_zero()) q.terms_.push_back({std::move(c), {}});
    return q;
  }
  static Poly coord(int p, int index, int exponent = 1) {
    Poly q;
    Monomial m;
    m.factors.emplace_back(static_cast<std::uint8_t>(index),
                           static_cast<std::int16_t>(exponent));
    q.terms_.push_back({PAdicScalar::one(p), std::move(m)});
    return q;
  }

  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }

  std::uint64_t depmask() const {
    std::uint64_t m = 0;
    for (const auto& t : terms_)
      for (auto [c, e] : t.mono.factors) m |= (std::uint64_t{1} << c);
    return m;
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    Poly r = a;
    for (const auto& t : b.terms_) r.add_term(t);
    return r;
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + b.negate(); }
  Poly negate() const {
    Poly r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    for (const auto& s : a.terms_)
      for (const auto& t : b.terms_)
        r.add_term({s.coeff * t.coeff, s.mono.times(t.mono)});
    return r;
  }
  Poly scaled(const PAdicScalar& c) const {
    Poly r;
    if (c.is_zero()) return r;
    r = *this;
    for (auto& t : r.terms_) t.coeff = t.coeff * c;
    return r;
  }

  // Ball evaluation at the coordinate values.  Exact per term; the sum of
  // term balls is an exact enclosure of the image over the cell.
  PAdicBall eval(std::span<const PAdicBall> coords, int p) const {
    PAdicBall acc = PAdicBall::point(PAdicScalar::zero(p));
    for (const auto& t : terms_) {
      PAdicBall b = PAdicBall::point(t.coeff);
      for (auto [c, e] : t.mono.factors) b = b * coords[c].pow(e);
      acc = acc + b;
    }
    return acc;
  }

  // Coordinate to split when this value blocks a verdict: the coarsest
  // (largest-radius, i.e. smallest radius exponent) contributing coordinate
  // among terms that are not already points; ties to the lowest index.
  int coarsest_dep(std::span<const PAdicBall> coords) const {
    int best = -1, best_k = PAdicBall::kExact;
    for (const auto& t : terms_)
      for (auto [c, e] : t.mono.factors) {
        int k = coords[c].radius_exponent();
        if (k < best_k || (k == best_k && static_cast<int>(c) < best)) {
          best_k = k;
          best = c;
        }
      }
    return best;
  }

 private:
  void add_term(const Term& t) {
    if (t.coeff.is_zero()) return;
    for (auto it = terms_.begin(); it != terms_.end(); ++it) {
      if (it->mono == t.mono) {
        PAdicScalar c = it->coeff + t.coeff;
        if (c.is_zero())
          terms_.erase(it);
        else
          it->coeff = std::move(c);
        return;
      }
    }
    terms_.push_back(t);
  }

  std::vector<Term> terms_;
};

using MatrixPoly = Mat4<Poly>;

inline MatrixPoly poly_matrix(const MatrixK& m) {
  MatrixPoly r;
  for (int i = 0; i < 16; ++i) r.e[i] = Poly::constant(m.e[i]);
  return r;
}

inline MatrixPoly poly_identity(int p) { return poly_matrix(mat4_identity(p)); }

}  // namespace shalika
