#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "polyfaces/charts.hpp"
#include "polyfaces/tree_functors.hpp"

using namespace polyfaces;

namespace {

Configuration cfg(const std::string& text) { return Configuration::parse(text); }

Rational q(int num, int den) { return Rational(num, den); }

// deterministic interior configurations with denominator 9973
Configuration random_config(int n, std::mt19937_64& rng) {
  std::vector<int> nums;
  while (static_cast<int>(nums.size()) < n) {
    int v = static_cast<int>(rng() % 9972) + 1;
    if (std::find(nums.begin(), nums.end(), v) == nums.end()) nums.push_back(v);
  }
  std::sort(nums.begin(), nums.end());
  std::vector<Rational> t;
  for (int v : nums) t.emplace_back(Rational(v, 9973));
  return Configuration(std::move(t));
}

}  // namespace

TEST_CASE("configuration validation") {
  CHECK_NOTHROW(cfg("1/4,1/2"));
  CHECK_NOTHROW(Configuration({}));
  CHECK_THROWS_AS(cfg("1/2,1/4"), PreconditionError);
  CHECK_THROWS_AS(cfg("0,1/2"), PreconditionError);
  CHECK_THROWS_AS(cfg("1/2,1"), PreconditionError);
  CHECK_THROWS_AS(cfg("1/2,1/2"), PreconditionError);
}

TEST_CASE("alpha chart on the worked configuration") {
  auto a = chart_alpha(cfg("1/4,1/2"));
  CHECK(a.s.at({0, 1, 2}) == q(1, 2));
  CHECK(a.s.at({0, 1, 3}) == q(1, 4));
  CHECK(a.s.at({0, 2, 3}) == q(1, 2));
  CHECK(a.s.at({1, 2, 3}) == q(1, 3));
}

TEST_CASE("s_{0,j,n+1} recovers t_j exactly") {
  std::mt19937_64 rng(11);
  for (int n = 1; n <= 5; ++n) {
    auto c = random_config(n, rng);
    auto a = chart_alpha(c);
    for (int j = 1; j <= n; ++j) CHECK(a.s.at({0, j, n + 1}) == c.t()[j - 1]);
  }
}

TEST_CASE("gamma and delta charts") {
  auto g = chart_gamma(cfg("1/4,1/2"));
  CHECK(g.r.at({1, 2}) == ExtendedQ(q(1, 2)));  // (1/4)/(1-1/2)
  auto d = chart_delta(cfg("1/4,1/2"));
  CHECK(d.r.at({0, 1, 2, 3}) == ExtendedQ(q(1, 2)));  // (1/4)/(1/2)
  CHECK(d.r.size() == 1);
  CHECK(g.s == chart_alpha(cfg("1/4,1/2")).s);
}

TEST_CASE("beta chart on the worked configuration") {
  auto b = chart_beta(cfg("1/4,1/2"));
  CHECK(b.stilde.at({0, 1, 2}) == doctest::Approx(std::sin(M_PI / 4) / std::sin(M_PI / 2))
                                      .epsilon(1e-12));
  CHECK(b.stilde.at({0, 1, 2}) == doctest::Approx(0.70711).epsilon(1e-4));
  CHECK(b.t.size() == 2);
  // all ordered distinct triples over {0,1,2}
  CHECK(b.stilde.size() == 6);
}

TEST_CASE("s_variants at interior and boundary values") {
  auto v = s_variants(q(1, 2));
  CHECK(v.ikj == ExtendedQ(q(2, 1)));
  CHECK(v.jik == ExtendedQ(q(1, 1)));
  CHECK(v.jki == ExtendedQ(q(1, 1)));
  CHECK(v.kij == ExtendedQ(q(2, 1)));
  CHECK(v.kji == ExtendedQ(q(1, 2)));

  auto z = s_variants(Rational(0));
  CHECK(z.ikj.is_infinite());
  CHECK(z.jik == ExtendedQ(Rational(0)));
  CHECK(z.jki.is_infinite());
  CHECK(z.kij == ExtendedQ(Rational(1)));
  CHECK(z.kji == ExtendedQ(Rational(1)));

  auto o = s_variants(Rational(1));
  CHECK(o.ikj == ExtendedQ(Rational(1)));
  CHECK(o.jik.is_infinite());
  CHECK(o.jki == ExtendedQ(Rational(0)));
  CHECK(o.kij.is_infinite());
  CHECK(o.kji == ExtendedQ(Rational(0)));

  CHECK_THROWS_AS(s_variants(q(3, 2)), PreconditionError);
}

TEST_CASE("s_variants consistency relations on a grid") {
  // involution (i<->k): applying s -> 1-s twice is the identity; reciprocal
  // pairs multiply to 1; the chart h(x) = x/(1+x) turns reciprocals into
  // reflections, valid at the endpoints too
  for (int k = 0; k <= 100; ++k) {
    Rational s(k, 100);
    auto v = s_variants(s);
    CHECK(Rational(1) - v.kji.value() == s);
    CHECK(v.ikj.chart01() == 1 - ExtendedQ(s).chart01());
    CHECK(v.jki.chart01() == 1 - v.jik.chart01());
    CHECK(v.kij.chart01() == 1 - v.kji.chart01());
    if (s != 0 && s != 1) {
      CHECK(v.ikj.value() * s == 1);
      CHECK(v.jik.value() * v.jki.value() == 1);
      CHECK(v.kij.value() * v.kji.value() == 1);
      // s_jik = s_ijk / s_kji
      CHECK(v.jik.value() == s / v.kji.value());
    }
  }
}

TEST_CASE("blend projection agrees with the alpha chart on the interior") {
  std::mt19937_64 rng(2024);
  auto blendcfg = BlendConfig::standard();
  for (int n = 1; n <= 6; ++n) {
    double worst = 0.0;
    for (int trial = 0; trial < 60; ++trial) {
      auto c = random_config(n, rng);
      auto beta = chart_beta(c);
      auto blended = blend_projection(beta, blendcfg);
      auto alpha = chart_alpha(c);
      for (const auto& [key, v] : blended.s) {
        double exact = static_cast<double>(alpha.s.at(key));
        worst = std::max(worst, std::abs(v - exact));
      }
    }
    CHECK(worst < 1e-12);
  }
}

TEST_CASE("blend projection is independent of the bump choice on the interior") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    auto c = random_config(4, rng);
    auto beta = chart_beta(c);
    auto s1 = blend_projection(beta, BlendConfig::standard());
    auto s2 = blend_projection(beta, BlendConfig::alternative());
    for (const auto& [key, v] : s1.s)
      CHECK(std::abs(v - s2.s.at(key)) < 1e-12);
  }
}

TEST_CASE("blend projection on boundary beta points") {
  // a fully collapsed triple t_1 = t_2 = t_3 with stilde_{123} = 0 must give
  // s_{123} = 0: the ratio branch has weight zero and the sine branch sees a
  // zero numerator
  BetaPoint b;
  b.n = 3;
  b.t = {0.25, 0.25, 0.25};
  for (int i = 0; i <= 3; ++i)
    for (int j = 0; j <= 3; ++j)
      for (int k = 0; k <= 3; ++k)
        if (i != j && j != k && i != k) b.stilde[{i, j, k}] = 0.7;
  b.stilde[{1, 2, 3}] = 0.0;
  auto out = blend_projection(b);
  CHECK(out.s.at({1, 2, 3}) == doctest::Approx(0.0));

  // span t_k - t_i = 1 runs on the pure ratio branch; no stilde is consulted
  BetaPoint clean;
  clean.n = 1;
  clean.t = {0.5};
  auto o2 = blend_projection(clean);
  CHECK(o2.s.at({0, 1, 2}) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("split projection on interior tables") {
  // r = l = 1: both factors are points
  auto a1 = chart_alpha(cfg("1/2"));
  auto [p0, p1] = split_projection(a1, 1, 1);
  CHECK(p0.s.empty());
  CHECK(p1.s.empty());

  // r = l = 2 at t = (1/5, 2/5, 3/5)
  auto a3 = chart_alpha(cfg("1/5,2/5,3/5"));
  auto [left, right] = split_projection(a3, 2, 2);
  CHECK(left.s.at({0, 1, 2}) == q(1, 2));
  CHECK(right.s.at({0, 1, 2}) == q(1, 3));  // (3/5-2/5)/(1-2/5)
  CHECK_THROWS_AS(split_projection(a3, 3, 2), PreconditionError);
}

TEST_CASE("tau fiber points project back exactly and are distinct") {
  // r = l = 1: the fiber over a point is the full interval s_{012} = tau
  auto pt = Configuration({});
  auto mid = tau_fiber_point(pt, pt, q(1, 2), 1, 1);
  CHECK(mid.s.at({0, 1, 2}) == q(1, 2));

  for (int r = 1; r <= 3; ++r)
    for (int l = 1; l <= 3; ++l) {
      std::mt19937_64 rng(100 * r + l);
      auto left = random_config(r - 1, rng);
      auto right = random_config(l - 1, rng);
      auto left_table = chart_alpha(left);
      auto right_table = chart_alpha(right);
      std::vector<AlphaTable> points;
      for (int k = 0; k <= 10; ++k) {
        auto p = tau_fiber_point(left, right, q(k, 10), r, l);
        CHECK(p.s.at({0, r, r + l}) == q(k, 10));
        auto [pl, pr] = split_projection(p, r, l);
        CHECK(pl.s == left_table.s);
        CHECK(pr.s == right_table.s);
        points.push_back(std::move(p));
      }
      for (std::size_t x = 0; x < points.size(); ++x)
        for (std::size_t y = x + 1; y < points.size(); ++y)
          CHECK(points[x].s != points[y].s);
    }
}

TEST_CASE("tau = 0 lands on the face with an infinitesimal left block") {
  // r = l = 2: tau = 0 collapses {0, 1, 2} to the left end; compare against
  // the face inclusion of the matching tree with those local coordinates
  std::mt19937_64 rng(5);
  auto left = random_config(1, rng);
  auto right = random_config(1, rng);
  auto p0 = tau_fiber_point(left, right, Rational(0), 2, 2);

  auto t = parse_planar_tree("((0 1 2) 3 4)");
  // vertex order: root (covers 0..4 with blocks {0,1,2},3,4), inner {0,1,2}
  std::vector<Configuration> local;
  local.push_back(Configuration({right.t()[0]}));  // root: edges at 0, v, 1... degree 3
  local.push_back(left);                           // inner vertex degree 3
  auto inc = include_face(t, local);
  CHECK(inc.s == p0.s);
}

TEST_CASE("nadir and closer") {
  auto corolla = PlanarTree::corolla(2);
  CHECK(nadir(corolla, 0, 1) == 0);
  CHECK(nadir(corolla, 1, 3) == 0);
  CHECK_FALSE(closer(corolla, 0, 1, 2));
  CHECK_THROWS_AS(nadir(corolla, 1, 1), PreconditionError);

  auto t = parse_planar_tree("((0 1) 2)");
  CHECK(closer(t, 0, 1, 2));
  CHECK_FALSE(closer(t, 1, 2, 0));

  auto big = parse_planar_tree("(((0 1) 2) (3 (4 5)))");
  CHECK(nadir(big, 2, 4) == 0);
  CHECK(closer(big, 0, 1, 2));
  CHECK(closer(big, 4, 5, 3));
}

TEST_CASE("include_face on the identity face recovers the chart") {
  std::mt19937_64 rng(77);
  for (int n = 1; n <= 4; ++n) {
    auto c = random_config(n, rng);
    auto inc = include_face(PlanarTree::corolla(n), {c});
    CHECK(inc.s == chart_alpha(c).s);
  }
}

TEST_CASE("include_face case table on the binary example") {
  auto t = parse_planar_tree("(((0 1) 2) (3 (4 5)))");
  // internal vertices (preorder): root, ((0 1) 2), (0 1), (3 (4 5)), (4 5);
  // all are binary so every local configuration is empty
  std::vector<Configuration> local(5, Configuration({}));
  auto inc = include_face(t, local);
  CHECK(inc.s.at({0, 1, 5}) == Rational(0));  // 0,1 closer than 5
  CHECK(inc.s.at({3, 4, 5}) == Rational(1));  // 4,5 closer than 3
  CHECK(inc.s.at({0, 1, 2}) == Rational(0));
  CHECK(inc.s.at({0, 2, 5}) == Rational(0));
  CHECK(inc.s.at({2, 3, 4}) == Rational(1));
}

TEST_CASE("include_face for fans hits the extended case table") {
  // one trunk vertex carrying branches on both sides: <(2 * 1)>
  auto f = parse_fan("<(2 * 1)>");
  // root degree 1 -> local size 0; trunk vertex degree 3 -> local size 1
  std::vector<Configuration> local;
  local.push_back(Configuration({}));
  local.push_back(Configuration({Rational(1, 3)}));
  auto b = include_face(f, local);
  // leaves 2 and 0=* collide; 1 collides too (all in the trunk cluster):
  // stilde entries use the trunk vertex's ratio table. i=0,k=2 closer than
  // j=1 would give infinity when their nadir is deeper; here all nadirs are
  // the trunk vertex, so values are finite ratios
  CHECK(b.t[0] == 0.0);
  CHECK(b.t[1] == 0.0);
  // trunk vertex local coords: [0, 1/3, 1] for children (2, *, 1); so
  // |c(1)-c(0)|/|c(2)-c(0)| with (i,j,k) = (0,1,2) means
  // |c(*)->c(1)| / |c(*)->c(2)| = (2/3) / (1/3) = 2
  CHECK(b.stilde.at({0, 1, 2}) == doctest::Approx(2.0));
  CHECK(b.stilde.at({0, 2, 1}) == doctest::Approx(0.5));

  // a fan with a non-trunk collision giving 0/1/inf entries:
  // <* (1 2) 3>: leaves 1,2 collide away from *
  auto g = parse_fan("<* (1 2) 3>");
  std::vector<Configuration> local2;
  local2.push_back(Configuration({Rational(1, 4), Rational(3, 4)}));  // root degree 3
  local2.push_back(Configuration({}));                                 // (1 2)
  auto b2 = include_face(g, local2);
  CHECK(b2.stilde.at({1, 2, 3}) == 0.0);          // i=1,j=2 closer than k=3
  CHECK(b2.stilde.at({3, 1, 2}) == 1.0);          // j=1,k=2 closer than i=3
  CHECK(std::isinf(b2.stilde.at({1, 3, 2})));     // i=1,k=2 closer than j=3
  CHECK(b2.t[0] == doctest::Approx(0.25));
  CHECK(b2.t[1] == doctest::Approx(0.25));
  CHECK(b2.t[2] == doctest::Approx(0.75));
}

TEST_CASE("include_face validates local dimensions") {
  auto t = parse_planar_tree("((0 1) 2)");
  CHECK_THROWS_AS(include_face(t, {Configuration({})}), PreconditionError);
  CHECK_THROWS_AS(include_face(t, {Configuration({q(1, 2)}), Configuration({})}),
                  PreconditionError);
  CHECK_NOTHROW(include_face(t, {Configuration({}), Configuration({})}));
}

TEST_CASE("blend projection of an included fan face lands on the included tree face") {
  // interior consistency of the whole diagram at a boundary point: the beta
  // image of a fan face blends to alpha values matching the tree face
  auto f = parse_fan("<* (1 2) 3>");
  std::vector<Configuration> local;
  local.push_back(Configuration({Rational(1, 4), Rational(3, 4)}));
  local.push_back(Configuration({}));
  auto beta = include_face(f, local);
  auto blended = blend_projection(beta);

  auto t = pi(f);  // (0 (1 2) 3 4)
  std::vector<Configuration> tlocal;
  tlocal.push_back(Configuration({Rational(1, 4), Rational(3, 4)}));
  tlocal.push_back(Configuration({}));
  auto inc = include_face(t, tlocal);
  for (const auto& [key, v] : blended.s)
    CHECK(std::abs(v - static_cast<double>(inc.s.at(key))) < 1e-12);
}
