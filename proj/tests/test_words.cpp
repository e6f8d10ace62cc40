#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <map>
#include <set>

#include "oracles.hpp"
#include "polyfaces/tree_functors.hpp"
#include "polyfaces/words.hpp"

using namespace polyfaces;

TEST_CASE("word codec and counts") {
  auto w = Word::parse("ab(ab)bbab");
  CHECK(w.text() == "ab(ab)bbab");
  CHECK(w.l_count() == 3);
  CHECK(w.r_count() == 5);
  CHECK_THROWS_AS(Word::parse("ab(ba)"), ParseError);
  CHECK(Word().text().empty());
}

TEST_CASE("word_poset(2,1) is the displayed zigzag") {
  auto p = word_poset(2, 1);
  REQUIRE(p.size() == 5);
  auto leq = [&](const std::string& x, const std::string& y) {
    return p.leq(p.index_of(x), p.index_of(y));
  };
  CHECK(leq("a(ab)", "aab"));
  CHECK(leq("a(ab)", "aba"));
  CHECK(leq("(ab)a", "aba"));
  CHECK(leq("(ab)a", "baa"));
  CHECK_FALSE(leq("a(ab)", "baa"));
  CHECK_FALSE(leq("(ab)a", "aab"));
  CHECK(p.covers().size() == 4);
}

TEST_CASE("word_poset sizes") {
  CHECK(word_poset(0, 3).size() == 1);
  CHECK(word_poset(0, 0).size() == 1);
  auto p = word_poset(2, 2);
  CHECK(p.size() == 13);
  int paren_free = 0, one_ab = 0, two_ab = 0;
  for (const auto& e : p.elements()) {
    auto w = Word::parse(e);
    int abs = 0;
    for (auto x : w.letters())
      if (x == Letter::ab) ++abs;
    if (abs == 0) ++paren_free;
    if (abs == 1) ++one_ab;
    if (abs == 2) ++two_ab;
  }
  CHECK(paren_free == 6);
  CHECK(one_ab == 6);
  CHECK(two_ab == 1);
  for (int l = 0; l <= 4; ++l)
    for (int r = 0; r <= 4; ++r)
      CHECK(static_cast<int64_t>(enumerate_words(l, r).size()) == oracles::word_count(l, r));
}

TEST_CASE("f_embed matches the worked value and the small cases") {
  CHECK(f_embed_text(Word::parse("ab(ab)bbab")) == "(0, 3/2, 4)");
  CHECK(f_embed_doubled(Word::parse("aab")) == std::vector<int>{0, 0});
  CHECK(f_embed_doubled(Word::parse("baa")) == std::vector<int>{2, 2});
  CHECK(f_embed_doubled(Word::parse("a(ab)")) == std::vector<int>{0, 1});
}

TEST_CASE("f_embed is injective with image the in-domain cube centers, l,r <= 4") {
  for (int l = 0; l <= 4; ++l)
    for (int r = 0; r <= 4; ++r) {
      auto words = enumerate_words(l, r);
      std::set<std::vector<int>> image;
      for (const auto& w : words) image.insert(f_embed_doubled(w));
      CHECK(image.size() == words.size());
      auto cc = cube_complex(l, r);
      std::set<std::vector<int>> centers;
      for (const auto& c : cc.cubes) centers.insert(c.doubled_center);
      CHECK(image == centers);
      // parenthesis-free words <-> integer points
      int pf = 0;
      for (const auto& w : words) {
        bool has_ab = false;
        for (auto x : w.letters()) has_ab |= x == Letter::ab;
        if (!has_ab) ++pf;
      }
      int integer_points = 0;
      for (const auto& c : cc.cubes)
        if (c.dimension() == 0) ++integer_points;
      CHECK(pf == integer_points);
    }
}

TEST_CASE("cube complexes of the small word posets") {
  auto c22 = cube_complex(2, 2);
  CHECK(c22.f_vector() == std::vector<std::size_t>{6, 6, 1});
  auto c00 = cube_complex(0, 0);
  CHECK(c00.f_vector() == std::vector<std::size_t>{1});
  auto c21 = cube_complex(2, 1);
  CHECK(c21.f_vector() == std::vector<std::size_t>{3, 2});
}

TEST_CASE("the embedding is an order isomorphism onto the cube poset") {
  for (int l = 0; l <= 3; ++l)
    for (int r = 0; r <= 3; ++r) {
      auto wp = word_poset(l, r);
      auto cc = cube_complex(l, r);
      auto cp = cube_poset(cc);
      REQUIRE(wp.size() == cp.size());
      std::vector<int> to_cube(wp.size());
      for (int i = 0; i < wp.size(); ++i) {
        auto d = f_embed_doubled(Word::parse(wp.element(i)));
        int at = -1;
        for (std::size_t k = 0; k < cc.cubes.size(); ++k)
          if (cc.cubes[k].doubled_center == d) at = static_cast<int>(k);
        REQUIRE(at >= 0);
        to_cube[i] = at;
      }
      for (int i = 0; i < wp.size(); ++i)
        for (int j = 0; j < wp.size(); ++j)
          CHECK(wp.leq(i, j) == cp.leq(to_cube[i], to_cube[j]));
    }
}

TEST_CASE("deleting the last coordinate retracts the cube census with interval fibers") {
  for (int l = 1; l <= 4; ++l)
    for (int r = 0; r <= 4; ++r) {
      auto big = cube_complex(l, r);
      auto small = cube_complex(l - 1, r);
      std::set<std::vector<int>> small_centers;
      for (const auto& c : small.cubes) small_centers.insert(c.doubled_center);
      std::map<std::vector<int>, std::set<int>> fibers;
      for (const auto& c : big.cubes) {
        std::vector<int> head(c.doubled_center.begin(), c.doubled_center.end() - 1);
        CHECK(small_centers.count(head) == 1);
        fibers[head].insert(c.doubled_center.back());
      }
      CHECK(fibers.size() == small_centers.size());  // surjective
      for (const auto& [head, fiber] : fibers) {
        // fiber = all doubled half-integers v with the v-cube inside
        // [ceil(top of last head coordinate), r]
        int prev_top = 0;
        if (!head.empty()) {
          int c = head.back();
          prev_top = (c + (c % 2 != 0 ? 1 : 0)) / 2;  // ceil of the interval top
        }
        std::set<int> expect;
        for (int v = 2 * prev_top; v <= 2 * r; ++v) {
          int top = v + (v % 2 != 0 ? 1 : 0);
          if (top <= 2 * r) expect.insert(v);
        }
        CHECK(fiber == expect);
      }
    }
}

TEST_CASE("levelization posets") {
  CHECK(levelization_poset(PlanarTree::corolla(3)).size() == 1);
  auto p = levelization_poset(parse_planar_tree("((0 1) (2 3))"));
  CHECK(p.size() == 3);
  CHECK(p.maximal_elements().size() == 2);
  CHECK(p.minimal_elements().size() == 1);

  // X_{l,r} arises as the levelization poset of a two-chain caterpillar:
  // left chain of 2 vertices, right chain of 1
  auto cat = parse_planar_tree("(((0 1) 2) 3 (4 5))");
  auto xt = levelization_poset(cat);
  auto wp = word_poset(2, 1);
  REQUIRE(xt.size() == wp.size());
  // explicit isomorphism search at this size
  std::vector<int> perm(xt.size());
  for (int i = 0; i < xt.size(); ++i) perm[i] = i;
  bool iso_found = false;
  std::sort(perm.begin(), perm.end());
  do {
    bool ok = true;
    for (int i = 0; ok && i < xt.size(); ++i)
      for (int j = 0; ok && j < xt.size(); ++j)
        if (xt.leq(i, j) != wp.leq(perm[i], perm[j])) ok = false;
    if (ok) {
      iso_found = true;
      break;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  CHECK(iso_found);
}

TEST_CASE("product decomposition over the corolla fan gives a single factor") {
  for (int n = 1; n <= 3; ++n) {
    for (const auto& t : enumerate_planar_trees(n)) {
      auto pd = product_decompose(t, Fan::corolla(n));
      REQUIRE(pd.factors.size() == 1);
      CHECK(pd.factors[0] == spine_counts(t));
    }
  }
}

TEST_CASE("product decomposition is a verified order isomorphism, n <= 3") {
  for (int n = 1; n <= 3; ++n) {
    auto fans = enumerate_fans(n);
    auto trees = enumerate_planar_trees(n);
    for (const auto& that : fans) {
      auto base = pi(that);
      for (const auto& t : trees) {
        if (!is_geq(t, base)) continue;
        auto pd = product_decompose(t, that);
        auto fg = fiber_geq_poset(t, that);
        // expected size: product of word poset sizes
        std::size_t expect = 1;
        for (auto [l, r] : pd.factors)
          expect *= static_cast<std::size_t>(oracles::word_count(l, r));
        REQUIRE(static_cast<std::size_t>(fg.size()) == expect);
        // order isomorphism onto the product order, componentwise
        std::vector<std::vector<Word>> split(fg.size());
        std::set<std::string> distinct;
        for (int i = 0; i < fg.size(); ++i) {
          split[i] = pd.split(trunk_word(parse_fan(fg.element(i))));
          std::string key;
          for (const auto& w : split[i]) key += w.text() + "|";
          distinct.insert(key);
        }
        CHECK(static_cast<int>(distinct.size()) == fg.size());
        for (int i = 0; i < fg.size(); ++i)
          for (int j = 0; j < fg.size(); ++j) {
            bool lhs = fg.leq(i, j);
            bool rhs = true;
            for (std::size_t k = 0; rhs && k < split[i].size(); ++k)
              rhs = word_leq(split[i][k], split[j][k]);
            CHECK(lhs == rhs);
          }
      }
    }
  }
}

TEST_CASE("product decomposition over a maximal fiber element is a point") {
  auto t = parse_planar_tree("((0 1) (2 3))");
  auto fp = fiber_poset(t);
  for (const auto& e : fp.elements()) {
    auto that = parse_fan(e);
    auto w = trunk_word(that);
    bool maximal = true;
    for (auto x : w.letters()) maximal &= (x != Letter::ab);
    if (!maximal) continue;
    auto pd = product_decompose(t, that);
    for (auto [l, r] : pd.factors) {
      CHECK(l <= 1);
      CHECK(r <= 1);
      CHECK(l + r <= 1);
    }
    CHECK(fiber_geq_poset(t, that).size() == 1);
  }
  CHECK_THROWS_AS(product_decompose(PlanarTree::corolla(3), parse_fan("<(* 1) 2 3>")),
                  PreconditionError);
}

TEST_CASE("level cells of levelization posets are products of permutohedron posets") {
  // the up-set of a levelization L in X_T refines each level class
  // independently, so it has prod_i Fubini(k_i) elements and height
  // 1 + sum_i (k_i - 1), where k_i counts the vertices on level i
  auto longest_chain = [](const FinitePoset& p) {
    std::vector<int> memo(p.size(), -1);
    std::function<int(int)> depth = [&](int v) -> int {
      if (memo[v] >= 0) return memo[v];
      int best = 1;
      for (int w = 0; w < p.size(); ++w)
        if (w != v && p.leq(v, w)) best = std::max(best, 1 + depth(w));
      return memo[v] = best;
    };
    int best = 0;
    for (int v = 0; v < p.size(); ++v) best = std::max(best, depth(v));
    return best;
  };
  auto check_base = [&](const FinitePoset& xt, const std::vector<int>& levels, int idx) {
    std::map<int, int> k;
    for (int lv : levels) ++k[lv];
    int64_t expect_count = 1;
    int expect_dim = 0;
    for (auto [lv, ki] : k) {
      expect_count *= oracles::fubini(ki);
      expect_dim += ki - 1;
    }
    auto up = xt.up_set(idx);
    CHECK(static_cast<int64_t>(up.size()) == expect_count);
    CHECK(longest_chain(up) == expect_dim + 1);
  };
  for (int n = 1; n <= 3; ++n) {
    for (const auto& t : enumerate_planar_trees(n)) {
      auto xt = levelization_poset(t);
      for (int i = 0; i < xt.size(); ++i)
        check_base(xt, parse_leveled_planar_tree(xt.element(i)).levels(), i);
    }
    for (const auto& f : enumerate_fans(n)) {
      auto xt = levelization_poset(f);
      for (int i = 0; i < xt.size(); ++i)
        check_base(xt, parse_leveled_fan(xt.element(i)).levels(), i);
    }
  }
}
