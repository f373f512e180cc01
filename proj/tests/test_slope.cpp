#include <doctest.h>

#include "sturmian/slope.hpp"

using namespace sturmian;

TEST_CASE("convergent denominators") {
  ConvergentTable g = build_table(SlopeSpec::finite({1, 1, 1, 1, 1}));
  std::vector<long> want = {1, 1, 2, 3, 5, 8};
  for (int k = 0; k <= 5; ++k) CHECK(g.q(k) == want[k]);
  ConvergentTable t = build_table(SlopeSpec::finite({5, 3, 2}));
  CHECK(t.q(1) == 5);
  CHECK(t.q(2) == 16);
  CHECK(t.q(3) == 37);
  CHECK(t.q(-1) == 0);
  CHECK(t.q(0) == 1);
  CHECK(t.p(-1) == 1);
  CHECK(t.p(0) == 0);
}

TEST_CASE("periodic partial quotients") {
  SlopeSpec s = SlopeSpec::eventually_periodic({5, 3, 2}, {Integer(1), Integer(2)}, 9);
  std::vector<long> want = {5, 3, 2, 1, 2, 1, 2, 1, 2};
  for (int k = 1; k <= 9; ++k) CHECK(s.partial_quotient(k) == want[k - 1]);
}

TEST_CASE("invalid slopes") {
  CHECK_THROWS_AS(build_table(SlopeSpec::finite({1, 0, 2})), Error);
  SlopeSpec s = SlopeSpec::finite({1, 2});
  s.horizon = 5;
  CHECK_THROWS_AS(build_table(s), Error);
}

TEST_CASE("theta enclosures") {
  ConvergentTable g = build_table(SlopeSpec::golden(20));
  ThetaEnclosure e = theta_enclosure(g, 2);
  CHECK(e.lower == Rational(1, 2));
  CHECK(e.upper == Rational(2, 3));
  ConvergentTable t = build_table(SlopeSpec::finite({5, 3, 2}));
  ThetaEnclosure f = theta_enclosure(t, 1);
  CHECK(f.lower == Rational(3, 16));
  CHECK(f.upper == Rational(1, 5));
  CHECK_THROWS_AS(theta_enclosure(t, 3), Error);
}

TEST_CASE("theta_k signs and bounds") {
  ConvergentTable g = build_table(SlopeSpec::golden(20));
  ThetaEnclosure t0 = theta_k_enclosure(g, 0, 10);
  ThetaEnclosure e = theta_enclosure(g, 10);
  CHECK(t0.lower == e.lower);
  CHECK(t0.upper == e.upper);
  ThetaEnclosure t1 = theta_k_enclosure(g, 1, 12);
  CHECK(t1.upper < 0);
  CHECK(t1.lower > Rational(-383, 1000));
  CHECK(t1.upper < Rational(-381, 1000));
}

TEST_CASE("property: determinant, nesting, widths, decreasing |theta_k|") {
  for (auto spec : {SlopeSpec::golden(25), SlopeSpec::eventually_periodic({7, 1}, {Integer(3), Integer(1), Integer(4)}, 25)}) {
    ConvergentTable t = build_table(spec);
    for (int k = 1; k <= 25; ++k) {
      Integer det = t.p(k) * t.q(k - 1) - t.p(k - 1) * t.q(k);
      CHECK(det == (k % 2 == 1 ? 1 : -1));
      if (k >= 2) CHECK(t.q(k) > t.q(k - 1));
    }
    for (int level = 0; level + 2 <= 25; ++level) {
      ThetaEnclosure a = theta_enclosure(t, level), b = theta_enclosure(t, level + 1);
      CHECK(a.width() == Rational(1) / Rational(t.q(level) * t.q(level + 1)));
      CHECK(a.lower <= b.lower);
      CHECK(b.upper <= a.upper);
    }
    for (int k = 0; k + 1 <= 20; ++k) {
      ThetaEnclosure x = theta_k_enclosure(t, k, 24);
      CHECK((k % 2 == 0 ? x.lower > 0 : x.upper < 0));
      Rational lo = k % 2 == 0 ? x.lower : -x.upper, hi = k % 2 == 0 ? x.upper : -x.lower;
      CHECK(lo > Rational(1) / Rational(t.q(k) + t.q(k + 1)));
      CHECK(hi < Rational(1) / Rational(t.q(k + 1)));
      if (k >= 1) {
        ThetaEnclosure y = theta_k_enclosure(t, k - 1, 24);
        Rational prev_lo = (k - 1) % 2 == 0 ? y.lower : -y.upper;
        CHECK(hi < prev_lo);
      }
    }
  }
}

TEST_CASE("certified floors of linear forms") {
  ConvergentTable g = build_table(SlopeSpec::golden(30));
  CHECK(certified_floor(g, {10, 0}) == 6);
  CHECK(certified_ceil(g, {10, 0}) == 7);
  CHECK(certified_floor(g, {-3, Rational(1, 2)}) == -2);
  CHECK(certified_sign(g, {1, -1}) == -1);
  CHECK(certified_sign(g, {0, 0}) == 0);
  CHECK(certified_floor(g, {0, Rational(7, 2)}) == 3);
}
