#pragma once

// 4x4 matrices over K (exact scalars) and their ball-valued variant for the
// enumeration engine, plus the permutation-matrix conventions: w_sigma has a
// 1 in position (i, sigma(i)), permutations multiply left-factor-first, so
// (12)(13) = (123), and w^{-1} m_{i,j} w = m_{sigma(i), sigma(j)}.

#include <array>
#include <initializer_list>

#include "shalika/padic.hpp"

namespace shalika {

template <class T>
struct Mat4 {
  std::array<T, 16> e;

  T& at(int i, int j) { return e[4 * i + j]; }             // 0-based
  const T& at(int i, int j) const { return e[4 * i + j]; }

  static Mat4 filled(const T& v) {
    Mat4 m;
    m.e.fill(v);
    return m;
  }

  Mat4 transpose() const {
    Mat4 t;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) t.at(i, j) = at(j, i);
    return t;
  }

  friend Mat4 operator*(const Mat4& a, const Mat4& b) {
    Mat4 c;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        T acc = a.at(i, 0) * b.at(0, j);
        for (int k = 1; k < 4; ++k) acc = acc + a.at(i, k) * b.at(k, j);
        c.at(i, j) = acc;
      }
    return c;
  }

  friend bool operator==(const Mat4& a, const Mat4& b) { return a.e == b.e; }
};

using MatrixK = Mat4<PAdicScalar>;
using MatrixBall = Mat4<PAdicBall>;

MatrixK mat4_zero(int p);
MatrixK mat4_identity(int p);
MatrixK mat4_from_ints(int p, std::initializer_list<std::int64_t> entries);
MatrixK mat4_diag(const PAdicScalar& a, const PAdicScalar& b,
                  const PAdicScalar& c, const PAdicScalar& d);

PAdicScalar det(const MatrixK& m);
PAdicBall det(const MatrixBall& m);
MatrixK inverse(const MatrixK& m);

MatrixBall to_ball(const MatrixK& m);

// sigma as the images (sigma(1), ..., sigma(4)), 1-based.
struct Perm {
  std::array<int, 4> image{1, 2, 3, 4};

  static Perm identity() { return Perm{}; }
  // Cycle notation, e.g. cycle({1,2,4,3}) is (1243).
  static Perm cycle(std::initializer_list<int> c);

  int operator()(int i) const { return image[i - 1]; }

  // Paper convention: (ab)(cd) applies the left factor first, so
  // (s * t)(i) = t(s(i)); matrices then compose as w_s * w_t = w_{s*t}.
  friend Perm operator*(const Perm& s, const Perm& t) {
    Perm r;
    for (int i = 1; i <= 4; ++i) r.image[i - 1] = t(s(i));
    return r;
  }

  Perm inverse() const {
    Perm r;
    for (int i = 1; i <= 4; ++i) r.image[image[i - 1] - 1] = i;
    return r;
  }

  friend bool operator==(const Perm& a, const Perm& b) {
    return a.image == b.image;
  }
  friend bool operator<(const Perm& a, const Perm& b) {
    return a.image < b.image;
  }

  int sign() const;
};

// Entry 1 at (i, sigma(i)).
MatrixK perm_matrix(int p, const Perm& sigma);

}  // namespace shalika
