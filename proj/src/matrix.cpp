#include "shalika/matrix.hpp"

#include <stdexcept>

namespace shalika {

MatrixK mat4_zero(int p) { return MatrixK::filled(PAdicScalar::zero(p)); }

MatrixK mat4_identity(int p) {
  MatrixK m = mat4_zero(p);
  for (int i = 0; i < 4; ++i) m.at(i, i) = PAdicScalar::one(p);
  return m;
}

MatrixK mat4_from_ints(int p, std::initializer_list<std::int64_t> entries) {
  if (entries.size() != 16)
    throw std::invalid_argument("mat4_from_ints: want 16 entries");
  MatrixK m;
  int i = 0;
  for (auto v : entries) m.e[i++] = PAdicScalar::from_int(p, v);
  return m;
}

MatrixK mat4_diag(const PAdicScalar& a, const PAdicScalar& b,
                  const PAdicScalar& c, const PAdicScalar& d) {
  MatrixK m = mat4_zero(a.prime());
  m.at(0, 0) = a;
  m.at(1, 1) = b;
  m.at(2, 2) = c;
  m.at(3, 3) = d;
  return m;
}

namespace {

template <class T>
T det3(const Mat4<T>& m, int r0, int r1, int r2, int c0, int c1, int c2) {
  return m.at(r0, c0) * (m.at(r1, c1) * m.at(r2, c2) - m.at(r1, c2) * m.at(r2, c1)) -
         m.at(r0, c1) * (m.at(r1, c0) * m.at(r2, c2) - m.at(r1, c2) * m.at(r2, c0)) +
         m.at(r0, c2) * (m.at(r1, c0) * m.at(r2, c1) - m.at(r1, c1) * m.at(r2, c0));
}

template <class T>
T det4(const Mat4<T>& m) {
  T acc = m.at(0, 0) * det3(m, 1, 2, 3, 1, 2, 3) -
          m.at(0, 1) * det3(m, 1, 2, 3, 0, 2, 3);
  acc = acc + m.at(0, 2) * det3(m, 1, 2, 3, 0, 1, 3) -
        m.at(0, 3) * det3(m, 1, 2, 3, 0, 1, 2);
  return acc;
}

}  // namespace

PAdicScalar det(const MatrixK& m) { return det4(m); }
PAdicBall det(const MatrixBall& m) { return det4(m); }

MatrixK inverse(const MatrixK& m) {
  PAdicScalar d = det(m);
  if (d.is_zero()) throw std::domain_error("inverse: singular matrix");
  int p = d.prime();
  MatrixK adj;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      int r[3], c[3], ri = 0, ci = 0;
      for (int k = 0; k < 4; ++k) {
        if (k != i) r[ri++] = k;
        if (k != j) c[ci++] = k;
      }
      PAdicScalar minor = det3(m, r[0], r[1], r[2], c[0], c[1], c[2]);
      PAdicScalar sign = PAdicScalar::from_int(p, (i + j) % 2 == 0 ? 1 : -1);
      adj.at(j, i) = sign * minor / d;
    }
  return adj;
}

MatrixBall to_ball(const MatrixK& m) {
  MatrixBall b;
  for (int i = 0; i < 16; ++i) b.e[i] = PAdicBall::point(m.e[i]);
  return b;
}

Perm Perm::cycle(std::initializer_list<int> c) {
  Perm r;
  if (c.size() < 2) return r;
  auto it = c.begin();
  int first = *it;
  int prev = first;
  ++it;
  for (; it != c.end(); ++it) {
    r.image[prev - 1] = *it;
    prev = *it;
  }
  r.image[prev - 1] = first;
  return r;
}

int Perm::sign() const {
  int s = 1;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (image[i] > image[j]) s = -s;
  return s;
}

MatrixK perm_matrix(int p, const Perm& sigma) {
  MatrixK m = mat4_zero(p);
  for (int i = 1; i <= 4; ++i) m.at(i - 1, sigma(i) - 1) = PAdicScalar::one(p);
  return m;
}

}  // namespace shalika
