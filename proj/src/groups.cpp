#include "shalika/groups.hpp"

#include <stdexcept>

namespace shalika {

MatrixK ShalikaElement::assemble(int p) const {
  // diag(g,g) * [[I,0],[X,I]] = [[g, 0], [gX, g]]
  MatrixK m = mat4_zero(p);
  auto gm = [&](int i, int j) { return g[2 * i + j]; };
  auto xm = [&](int i, int j) { return X[2 * i + j]; };
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      m.at(i, j) = gm(i, j);
      m.at(2 + i, 2 + j) = gm(i, j);
      m.at(2 + i, j) = gm(i, 0) * xm(0, j) + gm(i, 1) * xm(1, j);
    }
  return m;
}

UnipotentGL4 UnipotentGL4::zero(int p) {
  PAdicScalar z = PAdicScalar::zero(p);
  return UnipotentGL4{z, z, z, z, z, z};
}

MatrixK UnipotentGL4::assemble(int p) const {
  MatrixK m = mat4_identity(p);
  m.at(0, 1) = n12;
  m.at(0, 2) = n13;
  m.at(0, 3) = n14;
  m.at(1, 2) = n23;
  m.at(1, 3) = n24;
  m.at(2, 3) = n34;
  return m;
}

UnipotentGSp4 UnipotentGSp4::zero(int p) {
  PAdicScalar z = PAdicScalar::zero(p);
  return UnipotentGSp4{z, z, z, z};
}

MatrixK UnipotentGSp4::assemble(int p) const {
  MatrixK m = mat4_identity(p);
  m.at(0, 1) = x;
  m.at(0, 2) = p_coord + x * s_coord;
  m.at(0, 3) = r_coord + x * p_coord;
  m.at(1, 2) = s_coord;
  m.at(1, 3) = p_coord;
  m.at(2, 3) = -x;
  return m;
}

MatrixK TorusGSp4::assemble() const {
  return mat4_diag(a1, a2, lambda / a2, lambda / a1);
}

MatrixK gsp4_w0(int p) {
  return mat4_from_ints(p, {0, 0, 0, 1,   //
                            0, 0, 1, 0,   //
                            0, -1, 0, 0,  //
                            -1, 0, 0, 0});
}

MatrixK gsp4_w1(int p) {
  return mat4_from_ints(p, {1, 0, 0, 0,   //
                            0, 0, -1, 0,  //
                            0, 1, 0, 0,   //
                            0, 0, 0, 1});
}

MatrixK gsp4_w2(int p) {
  return mat4_from_ints(p, {0, 1, 0, 0,  //
                            1, 0, 0, 0,  //
                            0, 0, 0, 1,  //
                            0, 0, 1, 0});
}

bool is_gl4_integral(const MatrixK& m) {
  for (const auto& x : m.e)
    if (!x.is_zero() && x.valuation() < 0) return false;
  PAdicScalar d = det(m);
  return !d.is_zero() && d.valuation() == 0;
}

Ternary is_gl4_integral(const MatrixBall& m) {
  bool undecided = false;
  for (const auto& b : m.e) {
    Ternary t = b.integrality();
    if (t == Ternary::outside) return Ternary::outside;
    if (t == Ternary::undecided) undecided = true;
  }
  if (undecided) return Ternary::undecided;
  Ternary d = det(m).against_units();
  return d;
}

std::optional<PAdicScalar> similitude_ratio(const MatrixK& m) {
  int p = m.e[0].prime();
  MatrixK w0 = gsp4_w0(p);
  MatrixK s = m.transpose() * w0 * m;
  // s must equal lambda * w0; read lambda off the (1,4) slot.
  PAdicScalar lambda = s.at(0, 3);
  if (lambda.is_zero()) return std::nullopt;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (s.at(i, j) != lambda * w0.at(i, j)) return std::nullopt;
  return lambda;
}

bool is_gsp4_integral(const MatrixK& m) {
  return is_gl4_integral(m) && similitude_ratio(m).has_value();
}

Angle psi_H_angle(const ShalikaElement& h, const AdditiveCharacterPsi& psi) {
  return psi.angle(h.X[0] + h.X[3]);
}

std::complex<double> psi_H(const ShalikaElement& h, const AdditiveCharacterPsi& psi) {
  return psi_H_angle(h, psi).to_complex();
}

std::complex<double> theta_N_gl4(const UnipotentGL4& n, const AdditiveCharacterPsi& psi) {
  return psi.eval(n.n12 + n.n23 + n.n34);
}

std::complex<double> theta_N_gsp4(const UnipotentGSp4& n,
                                  const AdditiveCharacterPsi& psi) {
  return psi.eval(n.x + n.s_coord);
}

std::array<PAdicScalar, 4> root_values(const TorusGSp4& t) {
  if (t.lambda != PAdicScalar::one(t.lambda.prime()))
    throw std::domain_error("root_values: requires lambda = 1");
  return {t.a1 / t.a2, t.a2 * t.a2, t.a1 * t.a2, t.a1 * t.a1};
}

}  // namespace shalika
