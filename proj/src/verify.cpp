#include "polyfaces/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

#include "polyfaces/charts.hpp"
#include "polyfaces/homology.hpp"
#include "polyfaces/posets.hpp"
#include "polyfaces/strata.hpp"
#include "polyfaces/topology.hpp"
#include "polyfaces/tree_functors.hpp"
#include "polyfaces/words.hpp"

namespace polyfaces {

namespace {

// ---- independent counting oracles (pure arithmetic, no tree structures) ----

int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

int64_t factorial(int n) {
  int64_t r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

int64_t catalan(int n) { return binomial(2 * n, n) / (n + 1); }

int64_t tree_count_oracle(int m) {
  static std::map<int, int64_t> memo{{1, 1}};
  auto it = memo.find(m);
  if (it != memo.end()) return it->second;
  std::function<int64_t(int, int)> rec = [&](int rem, int parts) -> int64_t {
    if (rem == 0) return parts >= 2 ? 1 : 0;
    int64_t total = 0;
    for (int p = 1; p <= rem; ++p) {
      if (parts == 0 && p == rem) continue;
      total += tree_count_oracle(p) * rec(rem - p, parts + 1);
    }
    return total;
  };
  int64_t r = rec(m, 0);
  memo[m] = r;
  return r;
}

int64_t branch_seq_count_oracle(int m) {
  if (m == 0) return 1;
  std::function<int64_t(int)> rec = [&](int rem) -> int64_t {
    if (rem == 0) return 1;
    int64_t total = 0;
    for (int p = 1; p <= rem; ++p) total += tree_count_oracle(p) * rec(rem - p);
    return total;
  };
  return rec(m);
}

int64_t trunk_count_oracle(int small, int big) {
  static std::map<std::pair<int, int>, int64_t> memo;
  if (small == 0 && big == 0) return 1;
  auto key = std::make_pair(small, big);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  int64_t total = 0;
  for (int q2 = 0; q2 <= small; ++q2)
    for (int p2 = 0; p2 <= big; ++p2) {
      int lrest = small - q2, rrest = big - p2;
      if (lrest == 0 && rrest == 0) continue;
      total += trunk_count_oracle(q2, p2) * branch_seq_count_oracle(lrest) *
               branch_seq_count_oracle(rrest);
    }
  memo[key] = total;
  return total;
}

int64_t fan_count_oracle(int n) {
  int64_t total = 0;
  for (int q = 0; q <= n; ++q)
    for (int p = 0; p + q <= n; ++p)
      total += trunk_count_oracle(q, p) * branch_seq_count_oracle(n - q - p);
  return total;
}

int64_t fubini(int m) {
  std::vector<int64_t> a(m + 1, 0);
  a[0] = 1;
  for (int k = 1; k <= m; ++k)
    for (int j = 1; j <= k; ++j) a[k] += binomial(k, j) * a[k - j];
  return a[m];
}

int64_t word_count_oracle(int l, int r) {
  static std::map<std::pair<int, int>, int64_t> memo;
  if (l == 0 && r == 0) return 1;
  auto key = std::make_pair(l, r);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  int64_t total = 0;
  if (l > 0) total += word_count_oracle(l - 1, r);
  if (r > 0) total += word_count_oracle(l, r - 1);
  if (l > 0 && r > 0) total += word_count_oracle(l - 1, r - 1);
  memo[key] = total;
  return total;
}

// ---- helpers ---------------------------------------------------------------

struct Failure {
  std::ostringstream os;
  bool any = false;
  template <class T>
  Failure& operator<<(const T& v) {
    if (!any) any = true;
    os << v;
    return *this;
  }
  void note(const std::string& msg) {
    if (!any) {
      any = true;
      os << msg;
    }
  }
};

bool all_zero(const std::vector<long>& v) {
  for (long x : v)
    if (x) return false;
  return true;
}

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

// ---- criterion 1: enumeration counts --------------------------------------------

CriterionResult criterion1() {
  Failure fail;
  const int64_t psi_expect[] = {3, 11, 45, 197, 903};
  for (int n = 1; n <= 5; ++n) {
    auto count = static_cast<int64_t>(enumerate_planar_trees(n).size());
    if (count != psi_expect[n - 1])
      fail << "|Psi([" << n + 1 << "])| = " << count << ", expected " << psi_expect[n - 1];
    if (count != tree_count_oracle(n + 2)) fail << "; psi oracle mismatch at n=" << n;
  }
  const int64_t lev_expect[] = {3, 13, 75, 541};
  for (int n = 1; n <= 4; ++n) {
    auto count = static_cast<int64_t>(enumerate_leveled_planar_trees(n).size());
    if (count != lev_expect[n - 1])
      fail << "|Psi^level| = " << count << " at n=" << n << ", expected " << lev_expect[n - 1];
    if (count != fubini(n + 1)) fail << "; fubini oracle mismatch at n=" << n;
  }
  for (int n = 1; n <= 4; ++n) {
    auto count = static_cast<int64_t>(enumerate_fans(n).size());
    if (count != fan_count_oracle(n)) fail << "|Phi(" << n << ")| = " << count << " disagrees with the oracle";
  }
  for (int n = 1; n <= 4; ++n) {
    auto phi = face_poset(Species::phi, n);
    if (static_cast<int64_t>(phi.maximal_elements().size()) != binomial(2 * n, n))
      fail << "phi maximal count at n=" << n;
    auto psi = face_poset(Species::psi, n);
    if (static_cast<int64_t>(psi.maximal_elements().size()) != catalan(n + 1))
      fail << "psi maximal count at n=" << n;
    auto lev = face_poset(Species::psi_level, n);
    if (static_cast<int64_t>(lev.maximal_elements().size()) != factorial(n + 1))
      fail << "psi-level maximal count at n=" << n;
    if (order_complex(psi).euler_characteristic() != 1) fail << "psi Euler char at n=" << n;
    if (order_complex(phi).euler_characteristic() != 1) fail << "phi Euler char at n=" << n;
    if (order_complex(lev).euler_characteristic() != 1) fail << "psi-level Euler char at n=" << n;
  }
  return {1, "enumeration counts and Euler characteristics",
          !fail.any, fail.any ? fail.os.str() : "psi n<=5, psi-level n<=4, phi n<=4, chi=1 all"};
}

// ---- criterion 2: the leveled isomorphism and the falling-numbers bijection ----

CriterionResult criterion2() {
  Failure fail;
  for (int n = 0; n <= 3; ++n) {
    auto fans = enumerate_leveled_fans(n);
    auto trees = enumerate_leveled_planar_trees(n);
    std::set<std::string> images;
    std::vector<LeveledPlanarTree> imgs;
    for (const auto& f : fans) {
      auto img = leveled_iso(f);
      imgs.push_back(img);
      images.insert(img.text());
      if (!(leveled_iso_inverse(img) == f)) fail << "iso inverse fails at n=" << n;
    }
    if (images.size() != fans.size() || images.size() != trees.size())
      fail << "iso not bijective at n=" << n;
    for (std::size_t i = 0; i < fans.size(); ++i)
      for (std::size_t j = 0; j < fans.size(); ++j)
        if (is_geq(fans[i], fans[j]) != is_geq(imgs[i], imgs[j])) {
          fail << "iso order mismatch at n=" << n;
          i = fans.size();
          break;
        }
  }
  for (int n = 0; n <= 4; ++n) {
    auto trees = enumerate_leveled_planar_trees(n);
    std::vector<OrderedPartition> parts;
    std::set<std::string> images;
    for (const auto& t : trees) {
      parts.push_back(tonks_partition(t));
      images.insert(parts.back().text());
    }
    if (static_cast<int64_t>(images.size()) != fubini(n + 1))
      fail << "tonks not bijective at n=" << n;
    for (std::size_t i = 0; i < trees.size(); ++i)
      for (std::size_t j = 0; j < trees.size(); ++j)
        if (is_geq(trees[i], trees[j]) != parts[i].geq(parts[j])) {
          fail << "tonks order mismatch at n=" << n;
          i = trees.size();
          break;
        }
  }
  return {2, "leveled fan/tree isomorphism and falling-numbers bijection",
          !fail.any, fail.any ? fail.os.str() : "iso n<=3, tonks n<=4, orders verified both ways"};
}

// ---- criterion 3: word posets, the embedding, and the fibers ----

CriterionResult criterion3() {
  Failure fail;
  for (int l = 0; l <= 4; ++l)
    for (int r = 0; r <= 4; ++r) {
      auto words = enumerate_words(l, r);
      std::set<std::vector<int>> image;
      for (const auto& w : words) image.insert(f_embed_doubled(w));
      if (image.size() != words.size()) fail << "f not injective at (" << l << "," << r << ")";
      auto cc = cube_complex(l, r);
      std::set<std::vector<int>> centers;
      for (const auto& c : cc.cubes) centers.insert(c.doubled_center);
      if (image != centers) fail << "f image differs from cube census at (" << l << "," << r << ")";
    }
  auto c22 = cube_complex(2, 2);
  if (c22.f_vector() != std::vector<std::size_t>{6, 6, 1})
    fail << "X_{2,2} cube f-vector is not (6,6,1)";

  for (int n = 1; n <= 4; ++n) {
    for (const auto& t : enumerate_planar_trees(n)) {
      auto fp = fiber_poset(t);
      auto [l, r] = spine_counts(t);
      auto wp = word_poset(l, r);
      if (fp.size() != wp.size()) {
        fail << "fiber size != |X_{" << l << "," << r << "}| over " << t.text();
        continue;
      }
      std::vector<int> to_word(fp.size());
      std::set<int> seen;
      for (int i = 0; i < fp.size(); ++i) {
        to_word[i] = wp.index_of(trunk_word(parse_fan(fp.element(i))).text());
        seen.insert(to_word[i]);
      }
      if (static_cast<int>(seen.size()) != fp.size()) {
        fail << "trunk words not distinct over " << t.text();
        continue;
      }
      for (int i = 0; i < fp.size(); ++i)
        for (int j = 0; j < fp.size(); ++j)
          if (fp.leq(i, j) != wp.leq(to_word[i], to_word[j])) {
            fail << "fiber order != word order over " << t.text();
            i = fp.size();
            break;
          }
    }
  }
  return {3, "half-integer embedding and fiber/word-poset isomorphisms",
          !fail.any, fail.any ? fail.os.str() : "l,r<=4 census, fibers n<=4, X22=(6,6,1)"};
}

// ---- criterion 4: product decomposition ----

bool product_iso_holds(const PlanarTree& t, const Fan& that, Failure& fail) {
  auto pd = product_decompose(t, that);
  auto fg = fiber_geq_poset(t, that);
  int64_t expect = 1;
  for (auto [l, r] : pd.factors) expect *= word_count_oracle(l, r);
  if (static_cast<int64_t>(fg.size()) != expect) {
    fail << "restricted fiber size != product size over (" << t.text() << ", " << that.text() << ")";
    return false;
  }
  std::vector<std::vector<Word>> split(fg.size());
  std::set<std::string> distinct;
  for (int i = 0; i < fg.size(); ++i) {
    split[i] = pd.split(trunk_word(parse_fan(fg.element(i))));
    std::string key;
    for (const auto& w : split[i]) key += w.text() + "|";
    distinct.insert(key);
  }
  if (static_cast<int>(distinct.size()) != fg.size()) {
    fail << "product split not injective over (" << t.text() << ", " << that.text() << ")";
    return false;
  }
  for (int i = 0; i < fg.size(); ++i)
    for (int j = 0; j < fg.size(); ++j) {
      bool rhs = true;
      for (std::size_t k = 0; rhs && k < split[i].size(); ++k)
        rhs = word_leq(split[i][k], split[j][k]);
      if (fg.leq(i, j) != rhs) {
        fail << "product order mismatch over (" << t.text() << ", " << that.text() << ")";
        return false;
      }
    }
  return true;
}

CriterionResult criterion4() {
  Failure fail;
  int checked = 0;
  for (int n = 0; n <= 3; ++n) {
    auto fans = enumerate_fans(n);
    auto trees = enumerate_planar_trees(n);
    for (const auto& that : fans) {
      auto base = pi(that);
      for (const auto& t : trees) {
        if (!is_geq(t, base)) continue;
        product_iso_holds(t, that, fail);
        ++checked;
      }
    }
  }
  std::mt19937_64 rng(424242);
  auto fans4 = enumerate_fans(4);
  auto trees4 = enumerate_planar_trees(4);
  int sampled = 0;
  while (sampled < 100) {
    const auto& that = fans4[rng() % fans4.size()];
    auto base = pi(that);
    const auto& t = trees4[rng() % trees4.size()];
    if (!is_geq(t, base)) continue;
    product_iso_holds(t, that, fail);
    ++sampled;
  }
  std::ostringstream ok;
  ok << checked << " exhaustive pairs (n<=3) + 100 random pairs at n=4";
  return {4, "restricted fibers decompose as products of word posets",
          !fail.any, fail.any ? fail.os.str() : ok.str()};
}

// ---- criterion 5: acyclicity of all the contractibility targets ----

struct AcyclicityStats {
  int complexes = 0;
  int collapsed = 0;
  std::vector<std::string> collapse_failures;
};

void check_acyclic(const FinitePoset& p, const std::string& what, Failure& fail,
                   AcyclicityStats& stats) {
  if (p.size() == 0) {
    fail << what << " is empty";
    return;
  }
  auto k = order_complex(p);
  auto rep = contractibility(k);
  ++stats.complexes;
  if (!rep.acyclic_q || !rep.acyclic_f2) fail << what << " is not acyclic";
  if (rep.collapsible())
    ++stats.collapsed;
  else
    stats.collapse_failures.push_back(what);
}

CriterionResult criterion5() {
  Failure fail;
  AcyclicityStats stats;

  // fibers of the trunk projection, n <= 4
  for (int n = 0; n <= 4; ++n)
    for (const auto& t : enumerate_planar_trees(n))
      check_acyclic(fiber_poset(t), "fiber over " + t.text(), fail, stats);

  // restricted fibers, n <= 3
  for (int n = 0; n <= 3; ++n) {
    auto fans = enumerate_fans(n);
    auto trees = enumerate_planar_trees(n);
    for (const auto& that : fans) {
      auto base = pi(that);
      for (const auto& t : trees)
        if (is_geq(t, base))
          check_acyclic(fiber_geq_poset(t, that),
                        "restricted fiber (" + t.text() + ", " + that.text() + ")", fail, stats);
    }
  }

  // levelization posets over both species, n <= 3
  for (int n = 0; n <= 3; ++n) {
    for (const auto& t : enumerate_planar_trees(n))
      check_acyclic(levelization_poset(t), "levels on " + t.text(), fail, stats);
    for (const auto& f : enumerate_fans(n))
      check_acyclic(levelization_poset(f), "levels on " + f.text(), fail, stats);
  }

  // comma posets: the trunk projection up to n = 4, the leveled projections
  // up to n = 3
  for (int n = 0; n <= 4; ++n) {
    auto f = pi_functor(n);
    for (int q = 0; q < f.target->size(); ++q)
      check_acyclic(comma_poset(f.map, q), "pi comma at n=" + std::to_string(n) + " over " +
                                                f.target->element(q),
                    fail, stats);
  }
  for (int n = 0; n <= 3; ++n) {
    auto fp = pi_prime_functor(n);
    for (int q = 0; q < fp.target->size(); ++q)
      check_acyclic(comma_poset(fp.map, q), "pi' comma at n=" + std::to_string(n) + " over " +
                                                 fp.target->element(q),
                    fail, stats);
    auto fpp = pi_double_prime_functor(n);
    for (int q = 0; q < fpp.target->size(); ++q)
      check_acyclic(comma_poset(fpp.map, q), "pi'' comma at n=" + std::to_string(n) + " over " +
                                                  fpp.target->element(q),
                    fail, stats);
  }

  double rate = stats.complexes ? static_cast<double>(stats.collapsed) / stats.complexes : 0.0;
  if (rate < 0.9)
    fail << "greedy collapse succeeded on only " << stats.collapsed << "/" << stats.complexes;
  std::ostringstream ok;
  ok << stats.complexes << " complexes acyclic over Q and F2; greedy collapse " << stats.collapsed
     << "/" << stats.complexes;
  if (!stats.collapse_failures.empty()) {
    ok << " (collapse failures logged: " << stats.collapse_failures.size() << ")";
  }
  return {5, "contractibility evidence for fibers, levelizations and comma posets",
          !fail.any, fail.any ? fail.os.str() : ok.str()};
}

// ---- criterion 6: prismatic fiber decomposition ----

CriterionResult criterion6() {
  Failure fail;
  int checked = 0;
  for (int n = 0; n <= 3; ++n) {
    auto f = pi_functor(n);
    const auto& tgt = *f.target;
    // all strict chains with 1..3 elements
    std::vector<std::vector<int>> chains;
    for (int a = 0; a < tgt.size(); ++a) {
      chains.push_back({a});
      for (int b = 0; b < tgt.size(); ++b) {
        if (a == b || !tgt.leq(a, b)) continue;
        chains.push_back({a, b});
        for (int c = 0; c < tgt.size(); ++c) {
          if (b == c || !tgt.leq(b, c)) continue;
          chains.push_back({a, b, c});
        }
      }
    }
    for (const auto& chain : chains) {
      auto cells = prism_fiber_complex(f.map, chain);
      auto rep = contractibility(order_complex(cells));
      ++checked;
      if (!rep.acyclic_q || !rep.acyclic_f2) {
        std::string what;
        for (int x : chain) what += tgt.element(x) + " < ";
        fail << "prism fiber over chain " << what << "is not acyclic";
      }
    }
  }
  std::ostringstream ok;
  ok << checked << " chains of length <= 3, n <= 3, acyclic over Q and F2";
  return {6, "prismatic fiber decomposition is acyclic", !fail.any,
          fail.any ? fail.os.str() : ok.str()};
}

// ---- criterion 7: chart identities ----

CriterionResult criterion7() {
  Failure fail;
  std::mt19937_64 rng(777);
  auto cfg = BlendConfig::standard();
  double worst = 0.0;
  for (int n = 1; n <= 6; ++n) {
    for (int trial = 0; trial < 1000; ++trial) {
      auto c = random_config(n, rng);
      auto blended = blend_projection(chart_beta(c), cfg);
      auto alpha = chart_alpha(c);
      for (const auto& [key, v] : blended.s)
        worst = std::max(worst, std::abs(v - static_cast<double>(alpha.s.at(key))));
      for (int j = 1; j <= n; ++j)
        if (alpha.s.at({0, j, n + 1}) != c.t()[j - 1]) fail << "s_{0,j,n+1} != t_j exactly";
    }
  }
  if (worst >= 1e-12) fail << "blend vs alpha deviation " << worst << " >= 1e-12";

  for (int k = 0; k <= 100; ++k) {
    Rational s(k, 100);
    auto v = s_variants(s);
    bool ok = Rational(1) - v.kji.value() == s && v.ikj.chart01() == 1 - ExtendedQ(s).chart01() &&
              v.jki.chart01() == 1 - v.jik.chart01() && v.kij.chart01() == 1 - v.kji.chart01();
    if (s != 0 && s != 1)
      ok = ok && v.ikj.value() * s == 1 && v.jik.value() * v.jki.value() == 1 &&
           v.kij.value() * v.kji.value() == 1;
    if (!ok) fail << "permuted-coordinate relations fail at s=" << k << "/100";
  }
  std::ostringstream ok;
  ok << "blend=alpha to " << worst << " on 1000 configs per n<=6; exact t_j; 101-point grid";
  return {7, "blend projection and chart identities", !fail.any,
          fail.any ? fail.os.str() : ok.str()};
}

// ---- criterion 8: segment fibers of the split projection ----

CriterionResult criterion8() {
  Failure fail;
  std::mt19937_64 rng(888);
  for (int r = 1; r <= 3; ++r)
    for (int l = 1; l <= 3; ++l) {
      auto left = random_config(r - 1, rng);
      auto right = random_config(l - 1, rng);
      auto left_table = chart_alpha(left);
      auto right_table = chart_alpha(right);
      std::vector<AlphaTable> points;
      for (int k = 0; k <= 10; ++k) {
        auto p = tau_fiber_point(left, right, Rational(k, 10), r, l);
        if (p.s.at({0, r, r + l}) != Rational(k, 10))
          fail << "fiber point tau coordinate at (" << r << "," << l << ")";
        auto [pl, pr] = split_projection(p, r, l);
        if (pl.s != left_table.s || pr.s != right_table.s)
          fail << "split does not invert the fiber point exactly at (" << r << "," << l
               << "), tau=" << k << "/10";
        points.push_back(std::move(p));
      }
      for (std::size_t x = 0; x < points.size(); ++x)
        for (std::size_t y = x + 1; y < points.size(); ++y)
          if (points[x].s == points[y].s) fail << "fiber points collide at (" << r << "," << l << ")";
    }
  return {8, "split projection segment fibers", !fail.any,
          fail.any ? fail.os.str() : "r,l <= 3, tau grid 0..1 step 1/10, exact"};
}

// ---- criterion 9: stratum identification ----

CriterionResult criterion9() {
  Failure fail;
  auto p = EpsilonPath::parse("e^2, e, 1-e, 1-e^2");
  auto t = identify_stratum_assoc(p);
  if (t.text() != "(((0 1) 2) (3 (4 5)))")
    fail << "the paper path identifies " << t.text();
  auto fp = fiber_poset(t);
  if (fp.size() != 13) fail << "its fiber has " << fp.size() << " elements, expected 13";
  auto rep = contractibility(order_complex(fp));
  if (!rep.acyclic_q || !rep.acyclic_f2) fail << "its fiber is not acyclic";

  std::mt19937_64 rng(999);
  // 200 random faces per species across n <= 4
  std::vector<std::vector<PlanarTree>> trees;
  std::vector<std::vector<Fan>> fans;
  std::vector<std::vector<LeveledPlanarTree>> levs;
  for (int n = 1; n <= 4; ++n) {
    trees.push_back(enumerate_planar_trees(n));
    fans.push_back(enumerate_fans(n));
    levs.push_back(enumerate_leveled_planar_trees(n));
  }
  for (int trial = 0; trial < 200; ++trial) {
    const auto& pool = trees[rng() % 4];
    const auto& face = pool[rng() % pool.size()];
    if (!(identify_stratum_assoc(face_path(face, rng)) == face)) {
      fail << "assoc roundtrip fails on " << face.text();
      break;
    }
  }
  for (int trial = 0; trial < 200; ++trial) {
    const auto& pool = fans[rng() % 4];
    const auto& face = pool[rng() % pool.size()];
    auto path = face_path(face, rng);
    if (!(identify_stratum_cycl(path) == face)) {
      fail << "cycl roundtrip fails on " << face.text();
      break;
    }
    if (!(identify_stratum_assoc(path) == pi(face))) {
      fail << "assoc stratum of a cycl path differs from pi on " << face.text();
      break;
    }
  }
  for (int trial = 0; trial < 200; ++trial) {
    const auto& pool = levs[rng() % 4];
    const auto& face = pool[rng() % pool.size()];
    if (!(identify_stratum_perm(face_path(face, rng)) == face)) {
      fail << "perm roundtrip fails on " << face.text();
      break;
    }
  }
  return {9, "stratum identification roundtrips", !fail.any,
          fail.any ? fail.os.str()
                   : "paper path + 200 random faces per species (n<=4), pi-compatible"};
}

}  // namespace

std::vector<CriterionResult> run_acceptance_suite(const std::string& suite) {
  std::vector<int> ids;
  if (suite == "all")
    ids = {1, 2, 3, 4, 5, 6, 7, 8, 9};
  else if (suite == "posets")
    ids = {1, 2};
  else if (suite == "fibers")
    ids = {3, 4, 5, 6};
  else if (suite == "charts")
    ids = {7, 8, 9};
  else
    throw PreconditionError("unknown suite: " + suite + " (use all|posets|fibers|charts)");

  std::vector<CriterionResult> out;
  for (int id : ids) {
    switch (id) {
      case 1: out.push_back(criterion1()); break;
      case 2: out.push_back(criterion2()); break;
      case 3: out.push_back(criterion3()); break;
      case 4: out.push_back(criterion4()); break;
      case 5: out.push_back(criterion5()); break;
      case 6: out.push_back(criterion6()); break;
      case 7: out.push_back(criterion7()); break;
      case 8: out.push_back(criterion8()); break;
      case 9: out.push_back(criterion9()); break;
    }
  }
  return out;
}

bool report_acceptance(const std::vector<CriterionResult>& results, std::ostream& os) {
  bool all = true;
  for (const auto& r : results) {
    os << (r.pass ? "PASS" : "FAIL") << " criterion " << r.id << ": " << r.name;
    if (!r.detail.empty()) os << " — " << r.detail;
    os << "\n";
    all = all && r.pass;
  }
  return all;
}

}  // namespace polyfaces
