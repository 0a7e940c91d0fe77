#include <doctest.h>

#include <random>

#include "shalika/padic.hpp"

using namespace shalika;

namespace {

// Deterministic member samples of a ball: center + p^k * (small integers).
std::vector<PAdicScalar> sample_members(const PAdicBall& b, int count,
                                        std::mt19937& rng) {
  int p = b.prime();
  std::vector<PAdicScalar> out;
  if (b.is_point()) {
    out.push_back(b.center());
    return out;
  }
  std::uniform_int_distribution<std::int64_t> d(0, 3000);
  for (int i = 0; i < count; ++i) {
    PAdicScalar h = PAdicScalar::from_int(p, d(rng)) *
                    PAdicScalar::uniformizer_pow(p, b.radius_exponent());
    out.push_back(b.center() + h);
  }
  return out;
}

PAdicBall random_ball(int p, std::mt19937& rng) {
  std::uniform_int_distribution<int> kd(-3, 4);
  std::uniform_int_distribution<std::int64_t> cd(-200, 200);
  int k = kd(rng);
  return PAdicBall(PAdicScalar::from_int(p, cd(rng)) *
                       PAdicScalar::uniformizer_pow(p, kd(rng)),
                   k);
}

}  // namespace

TEST_CASE("scalar arithmetic basics") {
  int p = 5;
  auto pi = PAdicScalar::uniformizer_pow(p, 1);
  auto pi_inv = PAdicScalar::uniformizer_pow(p, -1);
  CHECK(pi * pi_inv == PAdicScalar::one(p));

  auto one = PAdicScalar::one(p);
  CHECK((one + (-one)).is_zero());

  // p = 5: 2 + 3 = 5 has valuation 1 and unit part 1
  auto s = PAdicScalar::from_int(p, 2) + PAdicScalar::from_int(p, 3);
  CHECK(s.valuation() == 1);
  CHECK(s.unit_residue(3) == 1);

  CHECK_THROWS_AS(one / PAdicScalar::zero(p), std::domain_error);
}

TEST_CASE("abs_val is q^{-v}") {
  int p = 5;
  CHECK(PAdicScalar::uniformizer_pow(p, 1).abs_val() == doctest::Approx(0.2));
  CHECK(PAdicScalar::one(p).abs_val() == doctest::Approx(1.0));
  CHECK(PAdicScalar::uniformizer_pow(p, -2).abs_val() == doctest::Approx(25.0));
  CHECK(PAdicScalar::zero(p).abs_val() == 0.0);
}

TEST_CASE("ultrametric inequality") {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<std::int64_t> d(-500, 500);
  std::uniform_int_distribution<int> vd(-4, 4);
  for (int p : {3, 5, 7}) {
    for (int i = 0; i < 1000; ++i) {
      std::int64_t an = d(rng), bn = d(rng);
      if (an == 0 || bn == 0) continue;
      auto a = PAdicScalar::from_int(p, an) * PAdicScalar::uniformizer_pow(p, vd(rng));
      auto b = PAdicScalar::from_int(p, bn) * PAdicScalar::uniformizer_pow(p, vd(rng));
      double va = a.abs_val(), vb = b.abs_val(), vs = (a + b).abs_val();
      CHECK(vs <= std::max(va, vb) + 1e-12);
      if (std::abs(va - vb) > 1e-12) CHECK(vs == doctest::Approx(std::max(va, vb)));
    }
  }
}

TEST_CASE("ball arithmetic examples") {
  int p = 5;
  auto O = PAdicBall::integers(p);
  CHECK((O + O) == O);

  // B(p^{-1}, O) * B(p, p^2 O): radius exponent min(-1+2, 1+0, 0+2) = 1
  PAdicBall a(PAdicScalar::uniformizer_pow(p, -1), 0);
  PAdicBall b(PAdicScalar::uniformizer_pow(p, 1), 2);
  PAdicBall prod = a * b;
  CHECK(prod.radius_exponent() == 1);
  CHECK(prod.center() == PAdicScalar::one(p));

  // nested sum: B(c, p^k O) + B(0, p^m O) = B(c, p^k O) for k <= m
  PAdicBall c(PAdicScalar::from_int(p, 7), 1);
  PAdicBall small(PAdicScalar::zero(p), 3);
  CHECK((c + small) == c);
}

TEST_CASE("ball soundness under sampling") {
  std::mt19937 rng(99);
  for (int p : {3, 5}) {
    for (int trial = 0; trial < 1000; ++trial) {
      PAdicBall a = random_ball(p, rng);
      PAdicBall b = random_ball(p, rng);
      PAdicBall sum = a + b;
      PAdicBall prod = a * b;
      auto xs = sample_members(a, 10, rng);
      auto ys = sample_members(b, 10, rng);
      for (const auto& x : xs)
        for (const auto& y : ys) {
          CHECK(sum.contains(x + y));
          CHECK(prod.contains(x * y));
        }
    }
  }
}

TEST_CASE("integrality trichotomy") {
  int p = 5;
  CHECK(PAdicBall::integers(p).integrality() == Ternary::inside);
  CHECK(PAdicBall(PAdicScalar::uniformizer_pow(p, -1), 0).integrality() ==
        Ternary::outside);
  CHECK(PAdicBall(PAdicScalar::zero(p), -1).integrality() == Ternary::undecided);

  // no Undecided when radius exponent >= 0
  std::mt19937 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    PAdicBall b = random_ball(p, rng);
    if (b.radius_exponent() >= 0) CHECK(b.integrality() != Ternary::undecided);
    Ternary t = b.integrality();
    for (const auto& x : sample_members(b, 20, rng)) {
      bool in = x.is_zero() || x.valuation() >= 0;
      if (t == Ternary::inside) CHECK(in);
      if (t == Ternary::outside) CHECK(!in);
    }
  }
}

TEST_CASE("ball inverse is exact on units") {
  int p = 7;
  PAdicBall u(PAdicScalar::from_int(p, 3), 2);  // 3 + p^2 O
  PAdicBall inv = u.inverse();
  std::mt19937 rng(11);
  for (const auto& x : sample_members(u, 50, rng)) {
    CHECK(inv.contains(PAdicScalar::one(p) / x));
  }
  // radius: k - 2 v(c) with v = 0
  CHECK(inv.radius_exponent() == 2);
}

TEST_CASE("ball split partitions the parent") {
  int p = 3;
  PAdicBall b(PAdicScalar::from_int(p, 2), -1);
  auto children = b.split();
  CHECK(children.size() == 3);
  std::mt19937 rng(5);
  for (const auto& x : sample_members(b, 100, rng)) {
    int hits = 0;
    for (const auto& ch : children) hits += ch.contains(x) ? 1 : 0;
    CHECK(hits == 1);
  }
}
