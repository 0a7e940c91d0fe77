#pragma once

// Structure constants of the two groups under comparison.
//
// GL(4) side: the Shalika subgroup H = { diag(g,g) u(X) } with
// u(X) = [[I,0],[X,I]], its character psi(h) = psi(tr X), the full upper
// unipotent N with theta(n) = psi(n12 + n23 + n34), and the maximal compact
// membership test Xi.
//
// GSp(4) side: the similitude group for w0 = [[0, ws],[-ws, 0]],
// ws = antidiag(1,1); torus diag(a1, a2, a2^{-1} l, a1^{-1} l); upper
// unipotent N generated by v(x) and u(p,r,s) with theta = psi(x + s); the
// Weyl representatives w1, w2 and the membership test Xi'.

#include <complex>
#include <optional>

#include "shalika/characters.hpp"
#include "shalika/matrix.hpp"

namespace shalika {

// --- GL(4) constructions -------------------------------------------------

struct ShalikaElement {
  // 2x2 blocks g (invertible) and X; embeds as diag(g,g) * [[I,0],[X,I]].
  std::array<PAdicScalar, 4> g;  // row major
  std::array<PAdicScalar, 4> X;

  MatrixK assemble(int p) const;
};

struct UnipotentGL4 {
  // strictly upper coordinates by position
  PAdicScalar n12, n13, n14, n23, n24, n34;

  static UnipotentGL4 zero(int p);
  MatrixK assemble(int p) const;
};

// --- GSp(4) constructions ------------------------------------------------

struct UnipotentGSp4 {
  // n = v(x) u(p,r,s); entries (1,2) = x, (2,3) = s, (2,4) = p,
  // (1,3) = p + xs, (1,4) = r + xp, (3,4) = -x.
  PAdicScalar x, p_coord, r_coord, s_coord;

  static UnipotentGSp4 zero(int p);
  MatrixK assemble(int p) const;
};

struct TorusGSp4 {
  PAdicScalar a1, a2, lambda;

  // diag(a1, a2, a2^{-1} lambda, a1^{-1} lambda)
  MatrixK assemble() const;
};

MatrixK gsp4_w0(int p);
MatrixK gsp4_w1(int p);
MatrixK gsp4_w2(int p);

// --- predicates and characters -------------------------------------------

// Xi: membership in GL(4, O): all entries integral and unit determinant.
bool is_gl4_integral(const MatrixK& m);
Ternary is_gl4_integral(const MatrixBall& m);

// Similitude ratio against w0: t(m) w0 m = lambda w0, or NotSymplectic.
std::optional<PAdicScalar> similitude_ratio(const MatrixK& m);

// Xi': membership in GL(4, O) /\ GSp(4, K).
bool is_gsp4_integral(const MatrixK& m);

// psi on H: psi(tr X), independent of g.
std::complex<double> psi_H(const ShalikaElement& h, const AdditiveCharacterPsi& psi);
Angle psi_H_angle(const ShalikaElement& h, const AdditiveCharacterPsi& psi);

// theta on the GL(4) upper unipotent: psi(n12 + n23 + n34).
std::complex<double> theta_N_gl4(const UnipotentGL4& n, const AdditiveCharacterPsi& psi);

// theta on the GSp(4) upper unipotent: psi(x + s).
std::complex<double> theta_N_gsp4(const UnipotentGSp4& n, const AdditiveCharacterPsi& psi);

// Positive-root values on a symplectic torus element (lambda = 1):
// (a1 a2^{-1}, a2^2, a1 a2, a1^2).
std::array<PAdicScalar, 4> root_values(const TorusGSp4& t);

}  // namespace shalika
