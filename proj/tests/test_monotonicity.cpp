#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <functional>

#include "doctest.h"
#include "monokit/gallery/gallery.hpp"
#include "monokit/monotonicity.hpp"
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

OperatorGraph<double> rotation_samples(Rng& rng, int count) {
  OperatorGraph<double> g;
  g.dim = 2;
  for (int i = 0; i < count; ++i) {
    std::vector<double> x = rng.double_vector(2, -3, 3);
    g.pairs.push_back(GraphPair<double>{Point<double>{x}, Covector<double>{{x[1], -x[0]}}});
  }
  return g;
}

OperatorGraph<Rational> rotation_three_points() {
  OperatorGraph<Rational> g;
  g.dim = 2;
  auto put = [&](long long a, long long b) {
    g.pairs.push_back(GraphPair<Rational>{Point<Rational>{{Rational(a), Rational(b)}},
                                          Covector<Rational>{{Rational(b), Rational(-a)}}});
  };
  put(1, 1);
  put(0, 1);
  put(1, 0);
  return g;
}

// Independent cyclic-sum enumerator used as oracle against the module ops.
template <class S>
bool oracle_n_cyclic(const OperatorGraph<S>& g, int n) {
  size_t nodes = g.size();
  std::vector<size_t> cyc;
  std::function<bool(int)> rec = [&](int remaining) {
    if (remaining == 0) return cycle_sum(g, cyc) >= S(0);
    for (size_t i = 0; i < nodes; ++i) {
      cyc.push_back(i);
      bool ok = rec(remaining - 1);
      cyc.pop_back();
      if (!ok) return false;
    }
    return true;
  };
  for (int m = 2; m <= n; ++m) {
    cyc.clear();
    if (!rec(m)) return false;
  }
  return true;
}

OperatorGraph<double> random_monotone_1d(Rng& rng, int nodes) {
  std::vector<double> xs(nodes), ys(nodes);
  for (auto& x : xs) x = rng.uniform(-4, 4);
  std::sort(xs.begin(), xs.end());
  double level = rng.uniform(-2, 0);
  for (int i = 0; i < nodes; ++i) {
    ys[i] = level;
    level += rng.uniform(0, 1);
  }
  OperatorGraph<double> g;
  g.dim = 1;
  for (int i = 0; i < nodes; ++i)
    g.pairs.push_back(GraphPair<double>{Point<double>{{xs[i]}}, Covector<double>{{ys[i]}}});
  return g;
}

}  // namespace

TEST_CASE("check_monotone on identity and decreasing samples") {
  auto good = graph1d<double>({{0, 0}, {1, 1}});
  CHECK(check_monotone(good).verdict);
  auto bad = graph1d<double>({{0, 1}, {1, 0}});
  auto cert = check_monotone(bad);
  CHECK_FALSE(cert.verdict);
  CHECK(cert.value == doctest::Approx(-1.0));
  REQUIRE(cert.witnesses.size() == 2);
  // the certificate reproduces its own violation
  CHECK(monotone_gap(cert.witnesses[0], cert.witnesses[1]) == doctest::Approx(cert.value));
}

TEST_CASE("rotation operator is monotone with all products exactly zero") {
  Rng rng(3);
  auto g = rotation_samples(rng, 50);
  CHECK(check_monotone(g).verdict);
  for (size_t i = 0; i < g.size(); ++i)
    for (size_t j = i + 1; j < g.size(); ++j) CHECK(monotone_gap(g.pairs[i], g.pairs[j]) == 0.0);
}

TEST_CASE("monotonically_related examples") {
  auto idg = graph1d<double>({{0, 0}, {1, 1}});
  CHECK(monotonically_related(GraphPair<double>{Point<double>{{2}}, Covector<double>{{2}}}, idg)
            .verdict);
  auto single = graph1d<double>({{1, 0}});
  auto cert = monotonically_related(
      GraphPair<double>{Point<double>{{0}}, Covector<double>{{1}}}, single);
  CHECK_FALSE(cert.verdict);
  CHECK(cert.value == doctest::Approx(-1.0));
}

TEST_CASE("maximal step function absorbs every related pair at the jump") {
  // samples of the maximalized unit step: phi = 0 below, 1 above 0
  auto g = graph1d<double>({{-1, 0}, {1, 1}});
  for (double t : {0.0, 0.25, 0.5, 0.75, 1.0}) {
    CHECK(monotonically_related(GraphPair<double>{Point<double>{{0}}, Covector<double>{{t}}}, g)
              .verdict);
  }
  CHECK_FALSE(
      monotonically_related(GraphPair<double>{Point<double>{{0}}, Covector<double>{{1.5}}}, g)
          .verdict);
}

TEST_CASE("invert swaps pairs, is an involution and preserves monotonicity") {
  auto g = graph1d<double>({{1, 2}});
  auto inv = invert(g);
  CHECK(inv.pairs[0].x.c[0] == 2.0);
  CHECK(inv.pairs[0].xstar.c[0] == 1.0);
  auto twice = invert(inv);
  CHECK(twice.pairs[0].x.c[0] == 1.0);
  Rng rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    auto m = random_monotone_1d(rng, 2 + static_cast<int>(rng.integer(0, 4)));
    CHECK(check_monotone(m).verdict == check_monotone(invert(m)).verdict);
  }
}

TEST_CASE("sum_graphs matches shared points only") {
  auto s = graph1d<double>({{0, 1}});
  auto t = graph1d<double>({{0, 2}});
  auto sum = sum_graphs(s, t);
  REQUIRE(sum.size() == 1);
  CHECK(sum.pairs[0].xstar.c[0] == 3.0);
  auto disjoint = sum_graphs(s, graph1d<double>({{1, 2}}));
  CHECK(disjoint.empty());
}

TEST_CASE("sum of monotone graphs on a shared domain is monotone") {
  Rng rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    int nodes = 3 + static_cast<int>(rng.integer(0, 3));
    auto a = random_monotone_1d(rng, nodes);
    auto b = random_monotone_1d(rng, nodes);
    for (int i = 0; i < nodes; ++i) b.pairs[i].x = a.pairs[i].x;  // align domains
    auto s = sum_graphs(a, b);
    REQUIRE_FALSE(s.empty());
    CHECK(check_monotone(s).verdict);
  }
}

TEST_CASE("rotation three-point instance defeats 3-cyclic monotonicity exactly") {
  auto g = rotation_three_points();
  auto two = check_n_cyclic(g, 2);
  CHECK(two.verdict);
  auto three = check_n_cyclic(g, 3);
  REQUIRE_FALSE(three.verdict);
  CHECK(three.sum == Rational(-1));
  REQUIRE(three.cycle.size() == 3);
  CHECK(three.cycle == std::vector<size_t>{0, 1, 2});
  CHECK(cycle_sum(g, three.cycle) == Rational(-1));
}

TEST_CASE("subdifferential samples of x^2/2 are n-cyclically monotone") {
  auto g = graph1d<Rational>({{Rational(-1), Rational(-1)},
                              {Rational(0), Rational(0)},
                              {Rational(1), Rational(1)}});
  for (int n = 2; n <= 6; ++n) CHECK(check_n_cyclic(g, n).verdict);
  CHECK(oracle_n_cyclic(g, 5));
}

TEST_CASE("check_cyclic agrees with exhaustive enumeration and reports valid cycles") {
  auto quad = graph1d<Rational>({{Rational(-1), Rational(-1)},
                                 {Rational(0), Rational(0)},
                                 {Rational(1), Rational(1)}});
  CHECK(check_cyclic(quad).verdict);
  auto rot = rotation_three_points();
  auto rep = check_cyclic(rot);
  REQUIRE_FALSE(rep.verdict);
  CHECK(rep.sum == Rational(-1));
  CHECK(cycle_sum(rot, rep.cycle) == rep.sum);
  auto single = graph1d<Rational>({{Rational(2), Rational(5)}});
  CHECK(check_cyclic(single).verdict);
}

TEST_CASE("check_cyclic equals bounded enumeration on a random mixed suite") {
  Rng rng(41);
  int disagreements = 0;
  for (int trial = 0; trial < 60; ++trial) {
    OperatorGraph<double> g;
    g.dim = 1 + static_cast<int>(rng.integer(0, 2));
    int nodes = 2 + static_cast<int>(rng.integer(0, 5));
    bool monotone_flavor = trial % 2 == 0;
    for (int i = 0; i < nodes; ++i) {
      std::vector<double> x(g.dim), y(g.dim);
      for (int a = 0; a < g.dim; ++a) x[a] = static_cast<double>(rng.integer(-6, 6));
      if (monotone_flavor) {
        for (int a = 0; a < g.dim; ++a) y[a] = 2.0 * x[a];  // gradient of |x|^2
      } else {
        for (int a = 0; a < g.dim; ++a) y[a] = static_cast<double>(rng.integer(-6, 6));
      }
      g.pairs.push_back(GraphPair<double>{Point<double>{x}, Covector<double>{y}});
    }
    bool full = check_cyclic(g).verdict;
    bool bounded = oracle_n_cyclic(g, 5);
    if (full != bounded) ++disagreements;
  }
  CHECK(disagreements == 0);
}

TEST_CASE("maximalize_1d fills jumps with the one-sided limits") {
  StepFunction1D<double> f;
  f.breakpoints = {0.0};
  f.region_values = {0.0, 1.0};
  f.point_values = {std::nullopt};
  auto m = maximalize_1d(f);
  REQUIRE(m.point_values[0].has_value());
  CHECK(m.point_values[0]->first == 0.0);
  CHECK(m.point_values[0]->second == 1.0);

  StepFunction1D<double> half = f;
  half.point_values = {std::make_pair(0.5, 0.5)};
  auto widened = maximalize_1d(half);
  CHECK(widened.point_values[0]->first == 0.0);
  CHECK(widened.point_values[0]->second == 1.0);

  StepFunction1D<double> cont;
  cont.breakpoints = {1.0};
  cont.region_values = {2.0, 2.0};
  cont.point_values = {std::make_pair(2.0, 2.0)};
  auto same = maximalize_1d(cont);
  CHECK(same.point_values[0]->first == 2.0);
  CHECK(same.point_values[0]->second == 2.0);

  StepFunction1D<double> bad;
  bad.breakpoints = {0.0};
  bad.region_values = {1.0, 0.0};
  bad.point_values = {std::nullopt};
  CHECK_THROWS_AS(maximalize_1d(bad), InvalidInput);
}

TEST_CASE("maximalized output is maximal on a probe grid") {
  StepFunction1D<double> f;
  f.breakpoints = {0.0};
  f.region_values = {0.0, 1.0};
  f.point_values = {std::nullopt};
  auto m = maximalize_1d(f);
  OperatorGraph<double> g;
  g.dim = 1;
  for (double x : {-2.0, -1.0, -0.5, 0.0, 0.5, 1.0, 2.0}) {
    auto iv = m.value_interval(x);
    REQUIRE(iv.has_value());
    g.pairs.push_back(GraphPair<double>{Point<double>{{x}}, Covector<double>{{iv->first}}});
    g.pairs.push_back(GraphPair<double>{Point<double>{{x}}, Covector<double>{{iv->second}}});
  }
  CHECK(check_monotone(g).verdict);
  for (double x : {-1.5, -0.25, 0.0, 0.25, 1.5}) {
    auto iv = m.value_interval(x);
    for (double y = -0.5; y <= 1.5; y += 0.125) {
      bool related =
          monotonically_related(GraphPair<double>{Point<double>{{x}}, Covector<double>{{y}}}, g)
              .verdict;
      bool inside = iv->first - 1e-12 <= y && y <= iv->second + 1e-12;
      CHECK(related == inside);
    }
  }
}

TEST_CASE("coercivity profiles: duality map, rotation, arctan") {
  OperatorGraph<double> j;
  j.dim = 1;
  for (double r : {1.0, 2.0, 4.0, 8.0, 16.0, 32.0}) {
    j.pairs.push_back(GraphPair<double>{Point<double>{{r}}, Covector<double>{{r}}});
    j.pairs.push_back(GraphPair<double>{Point<double>{{-r}}, Covector<double>{{-r}}});
  }
  std::vector<double> radii = {1, 2, 4, 8, 16, 32};
  auto prof = coercivity_profile(j, Norm::euclidean(), radii);
  for (size_t i = 0; i < radii.size(); ++i) CHECK(prof.c_values[i] == doctest::Approx(radii[i]));
  CHECK(prof.coercive_on_sample);

  Rng rng(5);
  auto rot = rotation_samples(rng, 40);
  auto rprof = coercivity_profile(rot, Norm::euclidean(), {0.1, 1.0});
  for (double c : rprof.c_values) CHECK(c == doctest::Approx(0.0).epsilon(1e-12));
  CHECK_FALSE(rprof.coercive_on_sample);

  OperatorGraph<double> at;
  at.dim = 1;
  for (double x = -100; x <= 100; x += 2.5)
    if (x != 0.0)
      at.pairs.push_back(GraphPair<double>{Point<double>{{x}}, Covector<double>{{std::atan(x)}}});
  auto aprof = coercivity_profile(at, Norm::euclidean(), {1, 10, 50});
  CHECK_FALSE(aprof.coercive_on_sample);  // arctan stays below pi/2
  for (double c : aprof.c_values) CHECK(c < 1.6);
  CHECK_THROWS_AS(coercivity_profile(at, Norm::euclidean(), {1000.0}), InvalidInput);
}

TEST_CASE("convex hull range bound on fixed and random data") {
  auto g = graph1d<double>({{0, 0}, {1, 1}});
  auto hb = convex_hull_range_bound(g, {0.5, 0.5}, {0, 1});
  CHECK(hb.x.c[0] == doctest::Approx(0.5));
  CHECK(hb.bound == doctest::Approx(0.25));
  auto single = convex_hull_range_bound(g, {1.0}, {1});
  CHECK(single.bound == doctest::Approx(0.0));
  CHECK_THROWS_AS(convex_hull_range_bound(g, {0.25, 0.25}, {0, 1}), InvalidInput);

  Rng rng(29);
  for (int trial = 0; trial < 1000; ++trial) {
    OperatorGraph<double> m;
    m.dim = 2;
    int nodes = 3 + static_cast<int>(rng.integer(0, 3));
    for (int i = 0; i < nodes; ++i) {
      auto x = rng.double_vector(2, -2, 2);
      m.pairs.push_back(
          GraphPair<double>{Point<double>{x}, Covector<double>{{3 * x[0] + x[1], x[0] + 2 * x[1]}}});
    }
    std::vector<size_t> idx = {0, 1, 2};
    double t0 = rng.uniform(0.1, 0.8);
    double t1 = rng.uniform(0.0, 1.0 - t0);
    std::vector<double> t = {t0, t1, 1.0 - t0 - t1};
    auto bound = convex_hull_range_bound(m, t, idx);
    for (const auto& p : m.pairs) {
      double v = dot(sub(p.xstar.c, bound.xstar.c), sub(bound.x.c, p.x.c));
      CHECK(v <= bound.bound + 1e-9);
    }
  }
}

TEST_CASE("local bound probe: identity, diagonal blowup, bounded operator") {
  OperatorOracle<double> identity = [](const Point<double>& p) {
    return std::vector<Covector<double>>{Covector<double>{p.c}};
  };
  Point<double> zero{{0.0, 0.0}};
  auto vals = local_bound_probe(identity, zero, {1.0, 0.5}, 32);
  CHECK(vals[0] <= 1.0 + 1e-12);
  CHECK(vals[1] <= 0.5 + 1e-12);

  int n = 12;
  OperatorOracle<double> diag = [n](const Point<double>& p) {
    std::vector<double> c(p.c.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = std::ldexp(p.c[i], static_cast<int>(i) + 1);
    return std::vector<Covector<double>>{Covector<double>{c}};
  };
  Point<double> origin{std::vector<double>(n, 0.0)};
  double delta = 0.25;
  auto dv = local_bound_probe(diag, origin, {delta}, 8);
  CHECK(dv[0] >= delta * std::ldexp(1.0, n) - 1e-9);  // axis sample attains delta*2^n

  OperatorOracle<double> bounded = [](const Point<double>& p) {
    double nn = euclid_norm(p.c);
    std::vector<double> c = p.c;
    if (nn > 1.0)
      for (double& v : c) v /= nn;
    return std::vector<Covector<double>>{Covector<double>{c}};
  };
  auto bv = local_bound_probe(bounded, zero, {4.0, 2.0, 1.0}, 64);
  for (double v : bv) CHECK(v <= 1.0 + 1e-12);
}

TEST_CASE("window relatedness: whole space, empty subgraph, Gossez shadow") {
  auto g = graph1d<double>({{0, 0}, {1, 1}});
  GraphPair<double> p{Point<double>{{2}}, Covector<double>{{2}}};
  auto everything = ConvexRegion<double>::box({-100}, {100});
  CHECK(window_related(p, g, everything).verdict ==
        monotonically_related(p, g).verdict);

  auto unit = ConvexRegion<double>::ball(Norm::euclidean(), 1.0, {0.0});
  auto far = graph1d<double>({{1, 5}});
  auto vac = window_related(GraphPair<double>{Point<double>{{0}}, Covector<double>{{0.5}}}, far,
                            unit);
  CHECK(vac.verdict);

  CHECK_THROWS_AS(window_related(GraphPair<double>{Point<double>{{0}}, Covector<double>{{7}}},
                                 far, unit),
                  InvalidInput);
}

TEST_CASE("Gossez truncation feeds window_related: related inside the window, yet not in the graph") {
  constexpr size_t kDim = 8;
  GeomSeq z = gossez_z(), e = gossez_e();
  GeomSeq x = seq_sub(e, z);
  GeomSeq xstar = seq_sub(e, gossez_apply(z));
  GeomSeq ax = gossez_apply(x);

  OperatorGraph<Rational> g;
  g.dim = kDim;
  for (const auto& u : gossez_u_suite()) {
    GeomSeq au = gossez_apply(u);
    g.pairs.push_back(GraphPair<Rational>{Point<Rational>{u.truncate(kDim)},
                                          Covector<Rational>{au.truncate(kDim)}});
  }
  GraphPair<Rational> cand{Point<Rational>{x.truncate(kDim)},
                           Covector<Rational>{xstar.truncate(kDim)}};
  auto window = ConvexRegion<Rational>::ball(Norm::sup(), Rational(1),
                                             std::vector<Rational>(kDim, Rational(0)));
  auto cert = window_related(cand, g, window);
  CHECK(cert.verdict);
  // x* differs from Ax in every coordinate of the truncation
  auto axt = ax.truncate(kDim);
  for (size_t i = 0; i < kDim; ++i) CHECK(cand.xstar.c[i] != axt[i]);
}

TEST_CASE("separation witness formula and contract") {
  auto w = separation_witness(Point<Rational>{{Rational(0)}}, Covector<Rational>{{Rational(0)}},
                              Point<Rational>{{Rational(1)}}, Covector<Rational>{{Rational(-1)}},
                              Rational(1, 2));
  CHECK(w.b.c[0] == Rational(1, 2));
  CHECK(w.bstar.c[0] == Rational(-1, 2));
  CHECK(w.r == Rational(1, 4));

  CHECK_THROWS_AS(separation_witness(Point<Rational>{{Rational(0)}},
                                     Covector<Rational>{{Rational(0)}},
                                     Point<Rational>{{Rational(1)}},
                                     Covector<Rational>{{Rational(1)}}, Rational(1, 2)),
                  InvalidInput);
  CHECK_THROWS_AS(separation_witness(Point<Rational>{{Rational(0)}},
                                     Covector<Rational>{{Rational(0)}},
                                     Point<Rational>{{Rational(1)}},
                                     Covector<Rational>{{Rational(-1)}}, Rational(1)),
                  InvalidInput);

  Rng rng(31);
  int done = 0;
  while (done < 100) {
    auto z = rng.rational_vector(2), zs = rng.rational_vector(2);
    auto y = rng.rational_vector(2), ys = rng.rational_vector(2);
    Rational gap = dot(sub(ys, zs), sub(y, z));
    if (gap >= 0) continue;
    Rational lambda(rng.integer(1, 7), 8);
    auto wit = separation_witness(Point<Rational>{z}, Covector<Rational>{zs}, Point<Rational>{y},
                                  Covector<Rational>{ys}, lambda);
    CHECK(wit.r > 0);
    int related = 0;
    while (related < 10) {
      auto xc = rng.rational_vector(2), xs = rng.rational_vector(2);
      if (dot(sub(xs, zs), sub(xc, z)) < 0) continue;
      if (dot(sub(xs, ys), sub(xc, y)) < 0) continue;
      Rational margin = dot(sub(xs, wit.bstar.c), sub(xc, wit.b.c));
      CHECK(margin >= wit.r);
      ++related;
    }
    ++done;
  }
}

TEST_CASE("pairing identity holds exactly on random rational instances") {
  Rng rng(37);
  std::vector<Rational> lambdas = {Rational(0), Rational(1), Rational(1, 3), Rational(1, 2)};
  for (int trial = 0; trial < 2000; ++trial) {
    int d = 1 + static_cast<int>(rng.integer(0, 2));
    auto u = rng.rational_vector(d), v = rng.rational_vector(d), x = rng.rational_vector(d);
    auto us = rng.rational_vector(d), vs = rng.rational_vector(d), xs = rng.rational_vector(d);
    Rational lambda = trial < 4 ? lambdas[trial] : Rational(rng.integer(0, 16), 16);
    auto [lhs, rhs] = quadratic_identity(Point<Rational>{u}, Point<Rational>{v},
                                         Point<Rational>{x}, Covector<Rational>{us},
                                         Covector<Rational>{vs}, Covector<Rational>{xs}, lambda);
    CHECK(lhs == rhs);
  }
  // lambda = 0 and 1 degenerate to single products
  auto u = Point<Rational>{{Rational(2)}};
  auto v = Point<Rational>{{Rational(-1)}};
  auto x = Point<Rational>{{Rational(1)}};
  auto us = Covector<Rational>{{Rational(3)}};
  auto vs = Covector<Rational>{{Rational(1)}};
  auto xs = Covector<Rational>{{Rational(0)}};
  auto [l0, r0] = quadratic_identity(u, v, x, us, vs, xs, Rational(0));
  CHECK(l0 == dot(sub(vs.c, xs.c), sub(v.c, x.c)));
  CHECK(l0 == r0);
  auto [l1, r1] = quadratic_identity(u, v, x, us, vs, xs, Rational(1));
  CHECK(l1 == dot(sub(us.c, xs.c), sub(u.c, x.c)));
  CHECK(l1 == r1);
}

TEST_CASE("monotone implies 2-cyclic on random graphs") {
  Rng rng(43);
  for (int trial = 0; trial < 50; ++trial) {
    auto g = random_monotone_1d(rng, 4);
    CHECK(check_monotone(g).verdict);
    CHECK(check_n_cyclic(g, 2).verdict);
  }
}

TEST_CASE("slow rotation fails first at cycle length four") {
  // rotation by 0.9 rad (between pi/4 and pi/3): monotone, 3-cyclically
  // monotone, but the axis 4-cycle has sum about -0.6469
  double th = 0.9, c = std::cos(th), s = std::sin(th);
  OperatorGraph<double> g;
  g.dim = 2;
  for (auto [a, b] : std::vector<std::pair<double, double>>{
           {1, 0}, {0, 1}, {-1, 0}, {0, -1}, {0.5, 0.5}, {0, 0}})
    g.pairs.push_back(GraphPair<double>{Point<double>{{a, b}},
                                        Covector<double>{{c * a - s * b, s * a + c * b}}});
  CHECK(check_monotone(g).verdict);
  CHECK(check_n_cyclic(g, 2).verdict);
  CHECK(check_n_cyclic(g, 3).verdict);
  auto four = check_n_cyclic(g, 4);
  REQUIRE_FALSE(four.verdict);
  CHECK(cycle_sum(g, four.cycle) == doctest::Approx(four.sum));
  auto full = check_cyclic(g);
  REQUIRE_FALSE(full.verdict);
  CHECK(full.cycle.size() >= 4);  // no shorter violating cycle exists
  CHECK(cycle_sum(g, full.cycle) == doctest::Approx(full.sum));
  CHECK(full.sum < 0);
  // frozen from the exhaustive oracle: the worst 4-cycle sum
  auto best4 = four;
  std::vector<size_t> cyc(4, 0);
  double worst = 0;
  std::function<void(int)> rec = [&](int depth) {
    if (depth == 4) {
      double v = cycle_sum(g, cyc);
      worst = std::min(worst, v);
      return;
    }
    for (size_t i = 0; i < g.size(); ++i) {
      cyc[depth] = i;
      rec(depth + 1);
    }
  };
  rec(0);
  CHECK(worst == doctest::Approx(-0.646868).epsilon(1e-5));
  (void)best4;
}

TEST_CASE("window relatedness with a halfspace window") {
  auto g = graph1d<double>({{0, 0}, {1, 1}, {2, 5}});
  // window u <= 2 keeps only the first two covectors
  auto window = ConvexRegion<double>::halfspaces(1, {{std::vector<double>{1.0}, 2.0}});
  GraphPair<double> p{Point<double>{{3}}, Covector<double>{{1.5}}};
  CHECK(window_related(p, g, window).verdict);
  // against the full graph the pair (3, 1.5) loses to (2, 5)
  CHECK_FALSE(monotonically_related(p, g).verdict);
}

TEST_CASE("sum_graphs matches points within floating tolerance") {
  auto s = graph1d<double>({{0.0, 1.0}});
  auto t = graph1d<double>({{1e-12, 2.0}});
  CHECK(sum_graphs(s, t).size() == 1);
  auto u = graph1d<double>({{1e-3, 2.0}});
  CHECK(sum_graphs(s, u).empty());
}

TEST_CASE("cycle caps reject oversized exhaustive requests") {
  auto g = graph1d<double>({{0, 0}, {1, 1}});
  CHECK_THROWS_AS(check_n_cyclic(g, 7), InvalidInput);
  OperatorGraph<double> big;
  big.dim = 1;
  for (int i = 0; i < 13; ++i)
    big.pairs.push_back(GraphPair<double>{Point<double>{{double(i)}}, Covector<double>{{double(i)}}});
  CHECK_THROWS_AS(check_n_cyclic(big, 3), InvalidInput);
  CHECK(check_cyclic(big).verdict);
}
