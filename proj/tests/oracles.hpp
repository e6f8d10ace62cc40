#pragma once

// Independent counting oracles used by the test suites. Everything here is
// pure arithmetic over compositions and never touches the tree structures, so
// a bug in the enumerators cannot hide behind a matching bug in the counts.

#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <vector>

namespace oracles {

using std::int64_t;

inline int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

inline int64_t factorial(int n) {
  int64_t r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

inline int64_t catalan(int n) { return binomial(2 * n, n) / (n + 1); }

// number of planar trees with m leaves, all internal vertices >= 2 children
// (Schroeder-Hipparchus via the composition recursion)
inline int64_t tree_count(int m) {
  static std::map<int, int64_t> memo;
  if (m == 1) return 1;
  auto it = memo.find(m);
  if (it != memo.end()) return it->second;
  // sum over compositions of m into k >= 2 parts of prod tree_count(part);
  // the one-part composition is skipped before recursing, or the count would
  // call itself
  std::function<int64_t(int, int)> rec = [&](int rem, int parts) -> int64_t {
    if (rem == 0) return parts >= 2 ? 1 : 0;
    int64_t total = 0;
    for (int p = 1; p <= rem; ++p) {
      if (parts == 0 && p == rem) continue;
      total += tree_count(p) * rec(rem - p, parts + 1);
    }
    return total;
  };
  int64_t r = rec(m, 0);
  memo[m] = r;
  return r;
}

// sequences of >= `minparts` planar subtrees covering m labels
inline int64_t branch_seq_count(int m, int minparts) {
  if (m == 0) return minparts <= 0 ? 1 : 0;
  std::function<int64_t(int, int)> rec = [&](int rem, int parts) -> int64_t {
    if (rem == 0) return parts >= minparts ? 1 : 0;
    int64_t total = 0;
    for (int p = 1; p <= rem; ++p) total += tree_count(p) * rec(rem - p, parts + 1);
    return total;
  };
  return rec(m, 0);
}

// trunk subtrees carrying `small` labels after * and `big` labels before *
inline int64_t trunk_count(int small, int big) {
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
      total += trunk_count(q2, p2) * branch_seq_count(lrest, 0) * branch_seq_count(rrest, 0);
    }
  memo[key] = total;
  return total;
}

// number of fans with leaves *,1..n
inline int64_t fan_count(int n) {
  int64_t total = 0;
  for (int q = 0; q <= n; ++q)
    for (int p = 0; p + q <= n; ++p)
      total += trunk_count(q, p) * branch_seq_count(n - q - p, 0);
  return total;
}

// ordered set partitions of an m-set
inline int64_t fubini(int m) {
  std::vector<int64_t> a(m + 1, 0);
  a[0] = 1;
  for (int k = 1; k <= m; ++k)
    for (int j = 1; j <= k; ++j) a[k] += binomial(k, j) * a[k - j];
  return a[m];
}

// all ordered partitions of {1..m} as block sequences (each block sorted)
inline std::vector<std::vector<std::set<int>>> ordered_partitions(int m) {
  std::vector<std::vector<std::set<int>>> out;
  std::vector<std::set<int>> acc;
  std::function<void(std::set<int>)> rec = [&](std::set<int> rem) {
    if (rem.empty()) {
      out.push_back(acc);
      return;
    }
    std::vector<int> items(rem.begin(), rem.end());
    int k = static_cast<int>(items.size());
    for (int mask = 1; mask < (1 << k); ++mask) {
      std::set<int> block, rest;
      for (int i = 0; i < k; ++i)
        (mask & (1 << i) ? block : rest).insert(items[i]);
      acc.push_back(block);
      rec(rest);
      acc.pop_back();
    }
  };
  rec([&] {
    std::set<int> s;
    for (int i = 1; i <= m; ++i) s.insert(i);
    return s;
  }());
  return out;
}

// number of words over {a, b, (ab)} with l a's and r b's
inline int64_t word_count(int l, int r) {
  static std::map<std::pair<int, int>, int64_t> memo;
  if (l == 0 && r == 0) return 1;
  auto key = std::make_pair(l, r);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  int64_t total = 0;
  if (l > 0) total += word_count(l - 1, r);
  if (r > 0) total += word_count(l, r - 1);
  if (l > 0 && r > 0) total += word_count(l - 1, r - 1);
  memo[key] = total;
  return total;
}

}  // namespace oracles
