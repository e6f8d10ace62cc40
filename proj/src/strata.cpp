#include "polyfaces/strata.hpp"

#include <algorithm>
#include <functional>

namespace polyfaces {

StratumSpace parse_stratum_space(const std::string& name) {
  if (name == "assoc") return StratumSpace::assoc;
  if (name == "cycl") return StratumSpace::cycl;
  if (name == "perm") return StratumSpace::perm;
  throw PreconditionError("unknown stratum space: " + name);
}

namespace {

int gap_order(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly d = b - a;
  if (d.is_zero()) throw PreconditionError("coinciding path coordinates");
  return d.order();
}

// cluster tree of a strictly increasing sequence of polynomials: children are
// the maximal consecutive blocks whose separating gaps vanish strictly faster
// than the block diameter
TreeNode cluster_linear(const std::vector<LaurentPoly>& pts,
                        const std::vector<TreeNode>& leaves, int lo, int hi) {
  if (lo == hi) return leaves[lo];
  int d = gap_order(pts[lo], pts[hi]);
  std::vector<TreeNode> kids;
  int start = lo;
  for (int i = lo; i < hi; ++i) {
    if (gap_order(pts[i], pts[i + 1]) == d) {
      kids.push_back(cluster_linear(pts, leaves, start, i));
      start = i + 1;
    }
  }
  kids.push_back(cluster_linear(pts, leaves, start, hi));
  return node(std::move(kids));
}

}  // namespace

PlanarTree identify_stratum_assoc(const EpsilonPath& p) {
  auto ts = p.padded();
  std::vector<TreeNode> leaves(ts.size(), leaf());
  TreeNode root = cluster_linear(ts, leaves, 0, static_cast<int>(ts.size()) - 1);
  if (root.is_leaf()) throw PreconditionError("degenerate path");
  return PlanarTree(std::move(root));
}

LeveledPlanarTree identify_stratum_perm(const EpsilonPath& p) {
  PlanarTree base = identify_stratum_assoc(p);
  auto ts = p.padded();
  // diameter order per internal vertex: infinitesimal conglomerations of
  // strictly smaller diameter sit on strictly higher levels, comparable
  // diameters share a level
  std::vector<int> diam_orders;
  int leaf_at = 0;
  std::function<int(const TreeNode&)> rec = [&](const TreeNode& t) -> int {
    if (t.is_leaf()) return leaf_at++;
    int my = static_cast<int>(diam_orders.size());
    diam_orders.push_back(0);
    int lo = leaf_at, hi = lo;
    for (const auto& ch : t.children) hi = rec(ch);
    diam_orders[my] = gap_order(ts[lo], ts[hi]);
    return hi;
  };
  rec(base.root());
  std::vector<int> sorted = diam_orders;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<int> levels(diam_orders.size());
  for (std::size_t v = 0; v < diam_orders.size(); ++v)
    levels[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), diam_orders[v]) -
                                 sorted.begin()) +
                1;
  return LeveledPlanarTree(std::move(base), std::move(levels));
}

Fan identify_stratum_cycl(const EpsilonPath& p) {
  int n = p.n();
  if (n == 0) return Fan::corolla(0);
  const auto& t = p.coords();
  LaurentPoly one{Rational(1)};

  // cyclic gaps: g[i] separates circle point i from point i+1 (labels 0..n
  // with 0 the marked point; g[n] wraps from n back to the marked point)
  std::vector<int> g(n + 1);
  g[0] = t[0].order();
  for (int i = 1; i < n; ++i) g[i] = gap_order(t[i - 1], t[i]);
  g[n] = (one - t[n - 1]).order();

  // maximal cyclic runs joined by gaps of order > 0 become the root's
  // children; if every gap vanishes, everything collides at the marked point
  std::vector<std::vector<int>> blocks;
  std::vector<int> starts;
  for (int i = 0; i <= n; ++i)
    if (g[(i + n) % (n + 1)] == 0) starts.push_back(i);
  if (starts.empty()) {
    std::vector<int> all(n + 1);
    for (int i = 0; i <= n; ++i) all[i] = i;
    blocks.push_back(all);
  } else {
    for (std::size_t si = 0; si < starts.size(); ++si) {
      int s = starts[si];
      int e = starts[(si + 1) % starts.size()];
      int len = (e - s + n + 1) % (n + 1);
      if (len == 0) len = n + 1;
      std::vector<int> b;
      for (int k = 0; k < len; ++k) b.push_back((s + k) % (n + 1));
      blocks.push_back(std::move(b));
    }
  }
  std::size_t star_block = 0;
  for (std::size_t bi = 0; bi < blocks.size(); ++bi)
    if (std::find(blocks[bi].begin(), blocks[bi].end(), 0) != blocks[bi].end()) star_block = bi;
  std::rotate(blocks.begin(), blocks.begin() + star_block, blocks.end());

  std::vector<TreeNode> kids;
  for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
    const auto& b = blocks[bi];
    if (bi == 0) {
      // the marked point's block: positions are signed relative to the
      // marked point, labels past the wrap sit just below 1
      std::vector<LaurentPoly> pts;
      std::vector<TreeNode> lv;
      std::size_t at_star = std::find(b.begin(), b.end(), 0) - b.begin();
      for (std::size_t k = 0; k < b.size(); ++k) {
        int lab = b[k];
        if (k < at_star) {
          pts.push_back(t[lab - 1] - one);
          lv.push_back(leaf());
        } else if (k == at_star) {
          pts.emplace_back();
          lv.push_back(star_leaf());
        } else {
          pts.push_back(t[lab - 1]);
          lv.push_back(leaf());
        }
      }
      kids.push_back(cluster_linear(pts, lv, 0, static_cast<int>(pts.size()) - 1));
    } else {
      std::vector<LaurentPoly> pts;
      std::vector<TreeNode> lv(b.size(), leaf());
      for (int lab : b) pts.push_back(t[lab - 1]);
      kids.push_back(cluster_linear(pts, lv, 0, static_cast<int>(pts.size()) - 1));
    }
  }
  return Fan(node(std::move(kids)));
}

AnyTree identify_stratum(const EpsilonPath& p, StratumSpace space) {
  switch (space) {
    case StratumSpace::assoc: return identify_stratum_assoc(p);
    case StratumSpace::cycl: return identify_stratum_cycl(p);
    case StratumSpace::perm: return identify_stratum_perm(p);
  }
  throw PreconditionError("unknown stratum space");
}

// ---- path construction -------------------------------------------------------------

namespace {

// k strictly increasing interior rationals with denominator 97
std::vector<Rational> random_interior(int k, std::mt19937_64& rng) {
  std::vector<int> nums;
  while (static_cast<int>(nums.size()) < k) {
    int v = static_cast<int>(rng() % 96) + 1;
    if (std::find(nums.begin(), nums.end(), v) == nums.end()) nums.push_back(v);
  }
  std::sort(nums.begin(), nums.end());
  std::vector<Rational> out;
  for (int v : nums) out.emplace_back(Rational(v, 97));
  return out;
}

}  // namespace

namespace {

// Shared recursion for planar faces. Each internal vertex places its
// children at local coordinates [0, interior..., 1] scaled by its
// degeneration rate; a block anchored at its right end (the subtree of a
// last child) grows leftward so that leaf 0 stays at exactly 0 and leaf n+1
// at exactly 1.
EpsilonPath planar_face_path(const TreeNode& root,
                             const std::function<int(int)>& scale_of_vertex,
                             std::mt19937_64& rng) {
  std::vector<LaurentPoly> pos;
  int counter = 0;
  std::function<void(const TreeNode&, const LaurentPoly&, int)> rec =
      [&](const TreeNode& u, const LaurentPoly& base, int sign) {
        if (u.is_leaf()) {
          pos.push_back(base);
          return;
        }
        int my = counter++;
        int scale = scale_of_vertex(my);
        std::size_t k = u.children.size();
        std::vector<Rational> cs = random_interior(static_cast<int>(k) - 2, rng);
        cs.insert(cs.begin(), Rational(0));
        cs.push_back(Rational(1));
        for (std::size_t c = 0; c < k; ++c) {
          // the last child sits at local coordinate 1 and grows leftward
          Rational offset = sign > 0 ? cs[c] : cs[c] - 1;
          LaurentPoly at = offset == 0 ? base : base + LaurentPoly::eps(scale, offset);
          rec(u.children[c], at, c + 1 == k ? -1 : +1);
        }
      };
  rec(root, LaurentPoly{}, +1);
  // the walk starts at leaf 0 (exactly 0) and ends at leaf n+1 (exactly 1);
  // the path consists of the interior coordinates
  std::vector<LaurentPoly> coords(pos.begin() + 1, pos.end() - 1);
  return EpsilonPath(std::move(coords));
}

}  // namespace

EpsilonPath face_path(const PlanarTree& t, std::mt19937_64& rng) {
  // one degeneration rate per tree depth
  auto parents = internal_parents(t.root());
  std::vector<int> depth(parents.size(), 0);
  for (std::size_t v = 1; v < parents.size(); ++v) depth[v] = depth[parents[v]] + 1;
  return planar_face_path(t.root(), [&](int v) { return depth[v]; }, rng);
}

EpsilonPath face_path(const LeveledPlanarTree& t, std::mt19937_64& rng) {
  // one degeneration rate per level rather than per depth
  return planar_face_path(t.base().root(), [&](int v) { return t.levels()[v] - 1; }, rng);
}

EpsilonPath face_path(const Fan& f, std::mt19937_64& rng) {
  int n = f.n();
  std::vector<LaurentPoly> signed_pos_by_slot(n + 1);
  int slot = 0;

  std::function<void(const TreeNode&, int, const LaurentPoly&)> place_plain =
      [&](const TreeNode& u, int depth, const LaurentPoly& base) {
        if (u.is_leaf()) {
          signed_pos_by_slot[slot++] = base;
          return;
        }
        auto cs = random_interior(static_cast<int>(u.children.size()), rng);
        for (std::size_t c = 0; c < u.children.size(); ++c)
          place_plain(u.children[c], depth + 1, base + LaurentPoly::eps(depth, cs[c]));
      };

  // trunk subtrees keep the marked point at signed position 0: children are
  // offset relative to the continuation child's coordinate
  std::function<void(const TreeNode&, int, const LaurentPoly&)> place_trunk =
      [&](const TreeNode& u, int depth, const LaurentPoly& base) {
        if (u.is_leaf()) {
          signed_pos_by_slot[slot++] = base;  // the marked point itself
          return;
        }
        int cont = -1;
        for (std::size_t c = 0; c < u.children.size(); ++c)
          if (contains_star(u.children[c])) cont = static_cast<int>(c);
        auto cs = random_interior(static_cast<int>(u.children.size()), rng);
        for (std::size_t c = 0; c < u.children.size(); ++c) {
          LaurentPoly off = LaurentPoly::eps(depth, cs[c] - cs[cont]);
          if (static_cast<int>(c) == cont)
            place_trunk(u.children[c], depth + 1, base);
          else
            place_plain(u.children[c], depth + 1, base + off);
        }
      };

  const auto& rk = f.root().children;
  auto cs = random_interior(static_cast<int>(rk.size()), rng);
  for (std::size_t c = 0; c < rk.size(); ++c) {
    if (c == 0)
      place_trunk(rk[c], 1, LaurentPoly{});
    else
      place_plain(rk[c], 1, LaurentPoly::eps(0, cs[c]));
  }

  // slots follow the planar walk; labels are cyclic from the marked point
  auto labels = vertex_leaf_seqs(f.root(), true)[0];
  LaurentPoly one{Rational(1)};
  std::vector<LaurentPoly> coords(n);
  for (int s = 0; s <= n; ++s) {
    int lab = labels[s];
    if (lab == 0) continue;
    LaurentPoly p = signed_pos_by_slot[s];
    if (!p.is_zero() && p.leading() < 0) p = p + one;  // wrap below the marked point
    coords[lab - 1] = p;
  }
  return EpsilonPath(std::move(coords));
}

}  // namespace polyfaces
