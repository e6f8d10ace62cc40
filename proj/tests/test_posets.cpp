#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "polyfaces/posets.hpp"
#include "polyfaces/simplicial.hpp"

using namespace polyfaces;

TEST_CASE("face_poset(psi, 2) is the pentagon face poset") {
  auto p = face_poset(Species::psi, 2);
  CHECK(p.size() == 11);
  auto minima = p.minimal_elements();
  REQUIRE(minima.size() == 1);
  CHECK(p.element(minima[0]) == "(0 1 2 3)");
  CHECK(p.maximal_elements().size() == 5);
  CHECK(p.covers().size() == 15);  // 10 vertex-edge + 5 edge-cell covers
  CHECK(p.covers_generate_leq());
}

TEST_CASE("face_poset(phi, 1) is a V") {
  auto p = face_poset(Species::phi, 1);
  CHECK(p.size() == 3);
  CHECK(p.maximal_elements().size() == 2);
  CHECK(p.minimal_elements().size() == 1);
  CHECK(p.covers().size() == 2);
}

TEST_CASE("face_poset(psi_level, 1) has the Fubini count") {
  auto p = face_poset(Species::psi_level, 1);
  CHECK(p.size() == 3);
}

TEST_CASE("maximal element counts across species") {
  for (int n = 1; n <= 4; ++n) {
    auto psi = face_poset(Species::psi, n);
    CHECK(static_cast<int64_t>(psi.maximal_elements().size()) == oracles::catalan(n + 1));
    auto phi = face_poset(Species::phi, n);
    CHECK(static_cast<int64_t>(phi.maximal_elements().size()) == oracles::binomial(2 * n, n));
  }
  for (int n = 1; n <= 3; ++n) {
    auto pl = face_poset(Species::psi_level, n);
    CHECK(static_cast<int64_t>(pl.maximal_elements().size()) == oracles::factorial(n + 1));
  }
}

TEST_CASE("order complex of the interval and the pentagon") {
  auto p1 = order_complex(face_poset(Species::psi, 1));
  CHECK(p1.f_vector() == std::vector<std::size_t>{3, 2});

  auto p2 = order_complex(face_poset(Species::psi, 2));
  CHECK(p2.f_vector() == std::vector<std::size_t>{11, 20, 10});
  CHECK(p2.euler_characteristic() == 1);
  CHECK(p2.closed_under_subsets());

  auto single = order_complex(FinitePoset({"x"}, [](int, int) { return true; }));
  CHECK(single.f_vector() == std::vector<std::size_t>{1});
}

TEST_CASE("order complex Euler characteristic is 1 for all three families") {
  for (int n = 1; n <= 3; ++n) {
    CHECK(order_complex(face_poset(Species::psi, n)).euler_characteristic() == 1);
    CHECK(order_complex(face_poset(Species::phi, n)).euler_characteristic() == 1);
    CHECK(order_complex(face_poset(Species::psi_level, n)).euler_characteristic() == 1);
  }
}

TEST_CASE("up-sets of the pentagon poset") {
  auto p = face_poset(Species::psi, 2);
  CHECK(p.up_set(p.index_of("(0 1 2 3)")).size() == 11);
  CHECK(p.up_set(p.index_of("(((0 1) 2) 3)")).size() == 1);
  CHECK(p.up_set(p.index_of("((0 1) 2 3)")).size() == 3);
  CHECK_THROWS_AS(p.index_of("nonsense"), PreconditionError);
}

TEST_CASE("hasse_dot output") {
  auto one = FinitePoset({"x"}, [](int, int) { return true; });
  auto dot1 = one.hasse_dot();
  CHECK(dot1.find("n0") != std::string::npos);
  CHECK(dot1.find("->") == std::string::npos);

  auto v = face_poset(Species::phi, 1);
  auto dot = v.hasse_dot();
  std::size_t arrows = 0;
  for (std::size_t at = dot.find("->"); at != std::string::npos; at = dot.find("->", at + 2))
    ++arrows;
  CHECK(arrows == 2);

  // deterministic
  CHECK(dot == face_poset(Species::phi, 1).hasse_dot());
}

TEST_CASE("poset JSON schema") {
  auto p = face_poset(Species::phi, 1);
  auto j = p.to_json();
  CHECK(j["elements"].size() == 3);
  CHECK(j["covers"].size() == 2);
  for (const auto& c : j["covers"]) {
    int i = c[0], k = c[1];
    CHECK(p.leq(k, i));
  }
}

TEST_CASE("poset construction rejects non-orders") {
  CHECK_THROWS_AS(FinitePoset({"a", "b"}, [](int, int) { return false; }), InvariantError);
  CHECK_THROWS_AS(FinitePoset({"a", "b"}, [](int, int) { return true; }), InvariantError);
  // non-transitive: a<b, b<c but not a<c
  CHECK_THROWS_AS(FinitePoset({"a", "b", "c"},
                              [](int i, int j) {
                                if (i == j) return true;
                                return (i == 0 && j == 1) || (i == 1 && j == 2);
                              }),
                  InvariantError);
}

TEST_CASE("monotone map validation") {
  auto src = std::make_shared<FinitePoset>(face_poset(Species::phi, 1));
  auto tgt = std::make_shared<FinitePoset>(face_poset(Species::psi, 1));
  // a constant map is monotone
  CHECK_NOTHROW(PosetMap(src, tgt, std::vector<int>(3, 0)));
  // swapping max and min is not
  int mx = tgt->maximal_elements()[0];
  int mn = tgt->minimal_elements()[0];
  std::vector<int> bad(3, mx);
  bad[src->minimal_elements()[0]] = mx;
  bad[src->maximal_elements()[0]] = mn;
  CHECK_THROWS_AS(PosetMap(src, tgt, bad), InvariantError);
}

TEST_CASE("tonks partition of spec examples") {
  auto corolla = parse_leveled_planar_tree("(0 1 2 3)@1");
  CHECK(tonks_partition(corolla).text() == "{1,2,3}");

  auto t = parse_leveled_planar_tree("((0 1)@2 2)@1");
  CHECK(tonks_partition(t).text() == "{2}|{1}");
}

TEST_CASE("tonks is a bijection onto ordered partitions for n <= 3") {
  for (int n = 0; n <= 3; ++n) {
    auto trees = enumerate_leveled_planar_trees(n);
    std::set<std::string> images;
    for (const auto& t : trees) images.insert(tonks_partition(t).text());
    CHECK(images.size() == trees.size());

    std::set<std::string> expected;
    for (const auto& p : oracles::ordered_partitions(n + 1)) {
      std::vector<std::vector<int>> blocks;
      for (const auto& b : p) blocks.emplace_back(b.begin(), b.end());
      expected.insert(OrderedPartition(blocks).text());
    }
    CHECK(images == expected);
  }
}

TEST_CASE("tonks is an order isomorphism for n <= 3") {
  for (int n = 1; n <= 3; ++n) {
    auto trees = enumerate_leveled_planar_trees(n);
    std::vector<OrderedPartition> imgs;
    for (const auto& t : trees) imgs.push_back(tonks_partition(t));
    for (std::size_t i = 0; i < trees.size(); ++i)
      for (std::size_t j = 0; j < trees.size(); ++j)
        CHECK(is_geq(trees[i], trees[j]) == imgs[i].geq(imgs[j]));
  }
}

TEST_CASE("ordered partition validation") {
  CHECK_THROWS_AS(OrderedPartition({{1, 2}, {2, 3}}), InvariantError);
  CHECK_THROWS_AS(OrderedPartition({{1}, {}}), InvariantError);
  CHECK_THROWS_AS(OrderedPartition({{1, 3}}), InvariantError);
  auto p = OrderedPartition({{2}, {1, 3}});
  CHECK(p.text() == "{2}|{1,3}");
  CHECK(p.geq(OrderedPartition({{1, 2, 3}})));
  CHECK_FALSE(OrderedPartition({{1, 2, 3}}).geq(p));
}
