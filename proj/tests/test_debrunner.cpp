#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "monokit/debrunner.hpp"
#include "monokit/rng.hpp"

using namespace monokit;

namespace {

template <class S>
OperatorGraph<S> graph1d(std::vector<std::pair<S, S>> pairs) {
  OperatorGraph<S> g;
  g.dim = 1;
  for (auto& [x, y] : pairs)
    g.pairs.push_back(GraphPair<S>{Point<S>{{x}}, Covector<S>{{y}}});
  return g;
}

}  // namespace

TEST_CASE("extend_constant on the interval fixtures") {
  auto m = graph1d<Rational>({{Rational(-1), Rational(-1)}, {Rational(1), Rational(1)}});
  auto c = ConvexRegion<Rational>::box({Rational(-1)}, {Rational(1)});

  // x0 = 0: the feasible interval is all of C, barycentric tie-break gives 0
  auto u0 = extend_constant(m, c, Point<Rational>{{Rational(0)}});
  CHECK(u0.c[0] == Rational(0));
  // independent oracle: intersect the two linear constraints by hand
  // (u+1)(x0+1) >= 0 and (u-1)(x0-1) >= 0 at x0 = 0 give -1 <= u <= 1

  // x0 = 2: constraints force u >= 1, so the unique feasible covector is 1
  auto u2 = extend_constant(m, c, Point<Rational>{{Rational(2)}});
  CHECK(u2.c[0] == Rational(1));

  // empty M: center of C
  OperatorGraph<Rational> empty;
  empty.dim = 1;
  auto ue = extend_constant(empty, c, Point<Rational>{{Rational(5)}});
  CHECK(ue.c[0] == Rational(0));
}

TEST_CASE("extend_constant rejects non-monotone M and range escaping C") {
  auto bad = graph1d<Rational>({{Rational(0), Rational(1)}, {Rational(1), Rational(0)}});
  auto c = ConvexRegion<Rational>::box({Rational(-1)}, {Rational(1)});
  CHECK_THROWS_AS(extend_constant(bad, c, Point<Rational>{{Rational(0)}}), InvalidInput);

  auto outside = graph1d<Rational>({{Rational(0), Rational(5)}});
  CHECK_THROWS_AS(extend_constant(outside, c, Point<Rational>{{Rational(0)}}), InvalidInput);
}

TEST_CASE("extend_constant output appends monotonically on random graphs") {
  Rng rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    int d = 1 + static_cast<int>(rng.integer(0, 2));
    OperatorGraph<Rational> m;
    m.dim = d;
    // gradient samples of a convex quadratic with covectors scaled into the box
    int nodes = 2 + static_cast<int>(rng.integer(0, 3));
    Rational coeff(rng.integer(1, 4), 8);
    for (int i = 0; i < nodes; ++i) {
      std::vector<Rational> x(d), y(d);
      for (int a = 0; a < d; ++a) {
        x[a] = Rational(rng.integer(-2, 2));
        y[a] = coeff * x[a];
      }
      m.pairs.push_back(GraphPair<Rational>{Point<Rational>{x}, Covector<Rational>{y}});
    }
    auto c = ConvexRegion<Rational>::box(std::vector<Rational>(d, Rational(-1)),
                                         std::vector<Rational>(d, Rational(1)));
    Point<Rational> x0{rng.rational_vector(d, 8, 4)};
    auto u = extend_constant(m, c, x0);
    CHECK(c.contains(u.c));
    auto extended = m;
    extended.pairs.push_back(GraphPair<Rational>{x0, u});
    CHECK(check_monotone(extended).verdict);
  }
}

TEST_CASE("extend_constant succeeds at every x0 for the maximal step operator") {
  // range of the maximalized unit step is [0,1], inside C = [-1,1]
  StepFunction1D<Rational> f;
  f.breakpoints = {Rational(0)};
  f.region_values = {Rational(0), Rational(1)};
  f.point_values = {std::nullopt};
  auto m = maximalize_1d(f);
  OperatorGraph<Rational> g;
  g.dim = 1;
  for (long long k = -5; k <= 5; ++k) {
    Rational x(k, 2);
    auto iv = m.value_interval(x);
    g.pairs.push_back(GraphPair<Rational>{Point<Rational>{{x}}, Covector<Rational>{{iv->first}}});
    if (iv->second != iv->first)
      g.pairs.push_back(
          GraphPair<Rational>{Point<Rational>{{x}}, Covector<Rational>{{iv->second}}});
  }
  auto c = ConvexRegion<Rational>::box({Rational(-1)}, {Rational(1)});
  for (long long k = -50; k <= 50; ++k) {
    Point<Rational> x0{{Rational(k, 25)}};
    auto u = extend_constant(g, c, x0);
    auto extended = g;
    extended.pairs.push_back(GraphPair<Rational>{x0, u});
    CHECK(check_monotone(extended).verdict);
  }
}

TEST_CASE("extend_constant floating path with a ball window") {
  auto m = graph1d<double>({{-1, -0.5}, {1, 0.5}});
  auto c = ConvexRegion<double>::ball(Norm::euclidean(), 1.0, {0.0});
  auto u = extend_constant(m, c, Point<double>{{0.0}});
  CHECK(c.contains(u.c, Tolerance{}));
  auto extended = m;
  extended.pairs.push_back(GraphPair<double>{Point<double>{{0.0}}, u});
  CHECK(check_monotone(extended).verdict);
}

TEST_CASE("extend_general agrees with extend_constant for constant phi") {
  // agreement is certificate-level: both solve the same linear extension
  // problem, each within 10x the search tolerance
  double tol = 1e-8;
  Rng rng(131);
  for (int trial = 0; trial < 10; ++trial) {
    auto m = graph1d<double>({{-1, rng.uniform(-1, -0.25)}, {1, rng.uniform(0.25, 1)}});
    auto c = ConvexRegion<double>::box({-1.0}, {1.0});
    Point<double> x0{{rng.uniform(-1.5, 1.5)}};
    auto exact = extend_constant(m, c, x0);
    PhiOracle constant = [x0](const Covector<double>&) { return x0; };
    auto general = extend_general(m, c, constant, tol);
    CHECK(general.achieved_min >= -10 * tol);
    double exact_min = 1e300;
    for (const auto& p : m.pairs)
      exact_min = std::min(exact_min, monotone_gap(GraphPair<double>{x0, exact}, p));
    CHECK(exact_min >= -10 * tol);
    auto extended = m;
    extended.pairs.push_back(GraphPair<double>{x0, general.xstar});
    CHECK(check_monotone(extended, Tolerance{1e-7, 1e-7}).verdict);
  }
}

TEST_CASE("extend_general with identity phi returns the center") {
  auto m = graph1d<double>({{-1, -1}, {-0.5, -0.5}, {0.5, 0.5}, {1, 1}});
  auto c = ConvexRegion<double>::box({-1.0}, {1.0});
  PhiOracle identity = [](const Covector<double>& u) { return Point<double>{u.c}; };
  auto res = extend_general(m, c, identity, 1e-9);
  // (u - y)(u - y) >= 0 always: the very first grid point qualifies
  CHECK(res.achieved_min >= 0);
}

TEST_CASE("extend_general with negated phi lands in the sign-analysis interval") {
  auto m = graph1d<double>({{1, 0}});
  auto c = ConvexRegion<double>::box({-1.0}, {1.0});
  PhiOracle neg = [](const Covector<double>& u) {
    return Point<double>{{-u.c[0]}};
  };
  auto res = extend_general(m, c, neg, 1e-9);
  // need (u - 0)(-u - 1) >= 0, i.e. u in [-1, 0]
  CHECK(res.xstar.c[0] >= -1.0 - 1e-9);
  CHECK(res.xstar.c[0] <= 0.0 + 1e-9);
}

TEST_CASE("kakutani witness fixtures") {
  auto k = ConvexRegion<double>::box({0.0}, {1.0});
  SetMapOracle identity = [](const Point<double>& u) {
    return ConvexRegion<double>::box(u.c, u.c);
  };
  auto r1 = kakutani_witness(identity, k, 1e-9);
  CHECK(r1.distance <= 1e-9);

  SetMapOracle constant = [](const Point<double>&) {
    return ConvexRegion<double>::box({0.625}, {0.625});
  };
  auto r2 = kakutani_witness(constant, k, 1e-9);
  CHECK(r2.point.c[0] == doctest::Approx(0.625).epsilon(1e-6));

  SetMapOracle shrinking = [](const Point<double>& u) {
    return ConvexRegion<double>::box({0.0}, {1.0 - u.c[0]});
  };
  auto r3 = kakutani_witness(shrinking, k, 1e-6);
  CHECK(r3.point.c[0] <= 0.5 + 1e-5);  // fixed points are exactly u <= 1/2

  SetMapOracle broken = [](const Point<double>& u) {
    return ConvexRegion<double>::box({1.0}, {0.0 + u.c[0]});  // empty for u < 1
  };
  CHECK_THROWS_AS(kakutani_witness(broken, k, 1e-6), InvalidInput);
}

TEST_CASE("browder witness on identity samples and the trivial pair") {
  Rng rng(89);
  OperatorGraph<double> t;
  t.dim = 2;
  for (int i = 0; i < 12; ++i) {
    auto x = rng.double_vector(2, -0.7, 0.7);
    t.pairs.push_back(GraphPair<double>{Point<double>{x}, Covector<double>{x}});
  }
  t.pairs.push_back(GraphPair<double>{Point<double>{{0.05, 0.0}}, Covector<double>{{0.05, 0.0}}});
  auto res = browder_witness(t, 1.0, Norm::euclidean(), 1e-6);
  // <-x - y, x - y> = ||y||^2 - ||x||^2 must clear every sample, so x ~ 0
  CHECK(euclid_norm(res.witness.x.c) <= 0.1);
  CHECK(res.achieved_min >= -1e-6);

  OperatorGraph<double> single;
  single.dim = 1;
  single.pairs.push_back(GraphPair<double>{Point<double>{{0.0}}, Covector<double>{{0.0}}});
  auto rs = browder_witness(single, 1.0, Norm::euclidean(), 1e-9);
  CHECK(std::fabs(rs.witness.x.c[0]) <= 1e-9);
  CHECK(std::fabs(rs.witness.xstar.c[0]) <= 1e-9);

  OperatorGraph<double> outside;
  outside.dim = 1;
  outside.pairs.push_back(GraphPair<double>{Point<double>{{3.0}}, Covector<double>{{0.0}}});
  CHECK_THROWS_AS(browder_witness(outside, 1.0, Norm::euclidean(), 1e-6), InvalidInput);
}

TEST_CASE("browder witness with a constant covector is certified") {
  // x = -c zeroes every product <-J(x) - c, x - y>; putting c on the dyadic
  // lattice lets the search certify it exactly, off-lattice witnesses only
  // certify at the resolution the point budget allows
  Rng rng(97);
  OperatorGraph<double> t;
  t.dim = 2;
  std::vector<double> c = {0.25, -0.25};
  for (int i = 0; i < 10; ++i) {
    auto x = rng.double_vector(2, -0.9, 0.9);
    t.pairs.push_back(GraphPair<double>{Point<double>{x}, Covector<double>{c}});
  }
  auto res = browder_witness(t, 1.0, Norm::euclidean(), 1e-9);
  CHECK(res.achieved_min >= -1e-9);
  for (const auto& p : t.pairs) CHECK(monotone_gap(res.witness, p) >= -1e-9);
  // x* belongs to -J(x): ||x*|| = ||x|| and <x*, x> = -||x||^2
  double nx = euclid_norm(res.witness.x.c);
  CHECK(euclid_norm(res.witness.xstar.c) == doctest::Approx(nx).epsilon(1e-9));
  CHECK(pairing(res.witness.xstar, res.witness.x) == doctest::Approx(-nx * nx).epsilon(1e-9));

  OperatorGraph<double> t2 = t;
  for (auto& p : t2.pairs) p.xstar = Covector<double>{{0.3, -0.2}};
  auto loose = browder_witness(t2, 1.0, Norm::euclidean(), 5e-3);
  CHECK(loose.achieved_min >= -5e-3);
  CHECK(euclid_norm(sub(loose.witness.x.c, {-0.3, 0.2})) <= 0.05);
}

TEST_CASE("fourier-motzkin feasibility and bounds") {
  LinearSystem<Rational> sys(2);
  sys.add({Rational(1), Rational(0)}, Rational(1));    // x <= 1
  sys.add({Rational(-1), Rational(0)}, Rational(0));   // x >= 0
  sys.add({Rational(0), Rational(1)}, Rational(2));    // y <= 2
  sys.add({Rational(1), Rational(1)}, Rational(5, 2)); // x + y <= 5/2
  CHECK(fm_feasible(sys));
  auto iv = fm_coordinate_bounds(sys, 0);
  CHECK(*iv.lo == Rational(0));
  CHECK(*iv.hi == Rational(1));
  auto near = fm_sample_near(sys, {Rational(2), Rational(2)});
  REQUIRE(near.has_value());
  CHECK((*near)[0] == Rational(1));
  CHECK((*near)[1] == Rational(3, 2));  // clamped by x + y <= 5/2 after x = 1

  sys.add({Rational(-1), Rational(0)}, Rational(-2));  // x >= 2: infeasible
  CHECK_FALSE(fm_feasible(sys));
}
