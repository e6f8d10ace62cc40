#include "polyfaces/tree_functors.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace polyfaces {

namespace {

// trunk vertices with internal ids, the index of the trunk-continuation
// child, and the raw node pointer
struct RawTrunkVertex {
  const TreeNode* node;
  int internal_id;
  int cont_index;
};

std::vector<RawTrunkVertex> raw_trunk(const TreeNode& root) {
  // internal ids assigned in preorder; the trunk follows *-containing children
  std::vector<RawTrunkVertex> out;
  // preorder id of a child subtree's root given the parent's id and the
  // previous siblings
  std::function<int(const TreeNode&)> internal_size = [&](const TreeNode& t) -> int {
    if (t.is_leaf()) return 0;
    int c = 1;
    for (const auto& ch : t.children) c += internal_size(ch);
    return c;
  };
  const TreeNode* at = &root;
  int at_id = 0;
  while (true) {
    int ci = -1;
    for (std::size_t i = 0; i < at->children.size(); ++i)
      if (contains_star(at->children[i])) {
        ci = static_cast<int>(i);
        break;
      }
    const TreeNode* next = &at->children[ci];
    if (next->is_leaf()) break;  // reached the distinguished leaf
    int next_id = at_id + 1;
    for (int i = 0; i < ci; ++i) next_id += internal_size(at->children[i]);
    out.push_back(RawTrunkVertex{next, next_id, -1});
    // fill cont index lazily below
    at = next;
    at_id = next_id;
  }
  for (auto& tv : out) {
    for (std::size_t i = 0; i < tv.node->children.size(); ++i)
      if (contains_star(tv.node->children[i])) tv.cont_index = static_cast<int>(i);
  }
  return out;
}

}  // namespace

std::vector<TrunkVertex> trunk(const Fan& f) {
  std::vector<TrunkVertex> out;
  for (const auto& tv : raw_trunk(f.root())) {
    TrunkVertex v;
    v.internal_id = tv.internal_id;
    for (int i = 0; i < static_cast<int>(tv.node->children.size()); ++i) {
      if (i < tv.cont_index) v.right.push_back(tv.node->children[i]);
      if (i > tv.cont_index) v.left.push_back(tv.node->children[i]);
    }
    out.push_back(std::move(v));
  }
  return out;
}

PlanarTree pi(const Fan& f) {
  auto tr = trunk(f);
  // build the two cut paths from the distinguished leaf outward: on the left
  // path the trunk continuation precedes the left-going branches; on the
  // right path the right-going branches precede the continuation
  TreeNode left = leaf();
  TreeNode right = leaf();
  for (auto it = tr.rbegin(); it != tr.rend(); ++it) {
    if (!it->left.empty()) {
      std::vector<TreeNode> kids;
      kids.push_back(std::move(left));
      for (const auto& b : it->left) kids.push_back(b);
      left = node(std::move(kids));
    }
    if (!it->right.empty()) {
      std::vector<TreeNode> kids = it->right;
      kids.push_back(std::move(right));
      right = node(std::move(kids));
    }
  }
  std::vector<TreeNode> kids;
  kids.push_back(std::move(left));
  for (std::size_t i = 1; i < f.root().children.size(); ++i)
    kids.push_back(f.root().children[i]);
  kids.push_back(std::move(right));
  return PlanarTree(node(std::move(kids)));
}

Fan forget_levels(const LeveledFan& t) { return t.base(); }
PlanarTree forget_levels(const LeveledPlanarTree& t) { return t.base(); }

Word trunk_word(const Fan& f) {
  std::vector<Letter> letters;
  for (const auto& tv : trunk(f)) {
    bool l = !tv.left.empty(), r = !tv.right.empty();
    if (l && r)
      letters.push_back(Letter::ab);
    else if (l)
      letters.push_back(Letter::a);
    else if (r)
      letters.push_back(Letter::b);
    else
      throw InvariantError("internal vertex must have >= 2 children",
                           "trunk vertex without branches");
  }
  return Word(std::move(letters));
}

std::vector<int> left_spine(const PlanarTree& t) {
  // the first child follows its parent immediately in preorder, so ids along
  // the leftmost path simply increment
  std::vector<int> out;
  const TreeNode* at = &t.root();
  int at_id = 0;
  while (!at->children.front().is_leaf()) {
    at = &at->children.front();
    out.push_back(++at_id);
  }
  return out;
}

std::vector<int> right_spine(const PlanarTree& t) {
  std::vector<int> out;
  std::function<int(const TreeNode&)> internal_size = [&](const TreeNode& u) -> int {
    if (u.is_leaf()) return 0;
    int c = 1;
    for (const auto& ch : u.children) c += internal_size(ch);
    return c;
  };
  const TreeNode* at = &t.root();
  int at_id = 0;
  while (!at->children.back().is_leaf()) {
    int next_id = at_id + 1;
    for (std::size_t i = 0; i + 1 < at->children.size(); ++i)
      next_id += internal_size(at->children[i]);
    at = &at->children.back();
    at_id = next_id;
    out.push_back(at_id);
  }
  return out;
}

std::pair<int, int> spine_counts(const PlanarTree& t) {
  return {static_cast<int>(left_spine(t).size()),
          static_cast<int>(right_spine(t).size())};
}

Fan fan_from_word(const PlanarTree& t, const Word& w) {
  auto [l, r] = spine_counts(t);
  if (w.l_count() != l || w.r_count() != r)
    throw PreconditionError("word counts (" + std::to_string(w.l_count()) + "," +
                            std::to_string(w.r_count()) + ") do not match the tree's spine counts (" +
                            std::to_string(l) + "," + std::to_string(r) + ")");

  // branches hanging off the spines, root-first: left-most vertex children
  // are [continuation, branches...]; right-most are [branches..., continuation]
  std::vector<std::vector<TreeNode>> left_branches, right_branches;
  const TreeNode* at = &t.root();
  while (!at->children.front().is_leaf()) {
    at = &at->children.front();
    left_branches.emplace_back(at->children.begin() + 1, at->children.end());
  }
  at = &t.root();
  while (!at->children.back().is_leaf()) {
    at = &at->children.back();
    right_branches.emplace_back(at->children.begin(), at->children.end() - 1);
  }

  // trunk built from the deepest letter upward
  TreeNode cont = star_leaf();
  int ai = l, bi = r;
  const auto& letters = w.letters();
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    std::vector<TreeNode> kids;
    if (*it != Letter::a) {
      --bi;
      kids = right_branches[bi];
    }
    kids.push_back(std::move(cont));
    if (*it != Letter::b) {
      --ai;
      const auto& lb = left_branches[ai];
      kids.insert(kids.end(), lb.begin(), lb.end());
    }
    cont = node(std::move(kids));
  }

  std::vector<TreeNode> root_kids;
  root_kids.push_back(std::move(cont));
  for (std::size_t i = 1; i + 1 < t.root().children.size(); ++i)
    root_kids.push_back(t.root().children[i]);
  return Fan(node(std::move(root_kids)));
}

// ---- leveled isomorphism -----------------------------------------------------------

LeveledPlanarTree leveled_iso(const LeveledFan& f) {
  const auto& levels = f.levels();
  auto tr = trunk(f.base());
  PlanarTree base = pi(f.base());

  // assign levels on the image: the root keeps its level; left/right spine
  // vertices take the level of the trunk vertex they came from; branch
  // vertices keep their own levels, matched by leaf sequence (branch
  // sequences never contain 0 or n+1, so they cannot collide with spines)
  auto seqs_fan = vertex_leaf_seqs(f.base().root(), true);
  auto seqs_tree = vertex_leaf_seqs(base.root(), false);
  std::map<std::vector<int>, int> tree_vertex_by_seq;
  for (std::size_t v = 0; v < seqs_tree.size(); ++v)
    tree_vertex_by_seq[seqs_tree[v]] = static_cast<int>(v);

  std::vector<int> out_levels(seqs_tree.size(), 0);
  out_levels[0] = levels[0];  // fan root -> tree root

  auto lsp = left_spine(base);
  auto rsp = right_spine(base);
  std::size_t li = 0, ri = 0;
  std::vector<bool> is_trunk(seqs_fan.size(), false);
  for (const auto& tv : tr) {
    is_trunk[tv.internal_id] = true;
    if (!tv.left.empty()) out_levels[lsp.at(li++)] = levels[tv.internal_id];
    if (!tv.right.empty()) out_levels[rsp.at(ri++)] = levels[tv.internal_id];
  }
  for (std::size_t v = 1; v < seqs_fan.size(); ++v) {
    if (is_trunk[v]) continue;
    out_levels[tree_vertex_by_seq.at(seqs_fan[v])] = levels[v];
  }

  // compress level values to a dense 1..m range
  std::vector<int> vals = out_levels;
  std::sort(vals.begin(), vals.end());
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  for (auto& lv : out_levels)
    lv = static_cast<int>(std::lower_bound(vals.begin(), vals.end(), lv) - vals.begin()) + 1;
  return LeveledPlanarTree(std::move(base), std::move(out_levels));
}

LeveledFan leveled_iso_inverse(const LeveledPlanarTree& t) {
  const auto& levels = t.levels();
  auto lsp = left_spine(t.base());
  auto rsp = right_spine(t.base());

  // merge the two spines by level; equal levels fuse into one trunk vertex
  std::vector<Letter> letters;
  std::size_t li = 0, ri = 0;
  std::vector<int> trunk_levels;
  while (li < lsp.size() || ri < rsp.size()) {
    int la = li < lsp.size() ? levels[lsp[li]] : INT32_MAX;
    int lb = ri < rsp.size() ? levels[rsp[ri]] : INT32_MAX;
    if (la == lb) {
      letters.push_back(Letter::ab);
      trunk_levels.push_back(la);
      ++li, ++ri;
    } else if (la < lb) {
      letters.push_back(Letter::a);
      trunk_levels.push_back(la);
      ++li;
    } else {
      letters.push_back(Letter::b);
      trunk_levels.push_back(lb);
      ++ri;
    }
  }
  Fan fan = fan_from_word(t.base(), Word(letters));

  // transport levels back: trunk vertices take trunk_levels; other vertices
  // keep their levels, matched by leaf sequence
  auto seqs_fan = vertex_leaf_seqs(fan.root(), true);
  auto seqs_tree = vertex_leaf_seqs(t.base().root(), false);
  std::map<std::vector<int>, int> tree_vertex_by_seq;
  for (std::size_t v = 0; v < seqs_tree.size(); ++v)
    tree_vertex_by_seq[seqs_tree[v]] = static_cast<int>(v);

  std::vector<int> out_levels(seqs_fan.size(), 0);
  out_levels[0] = levels[0];
  auto tr = trunk(fan);
  std::vector<bool> is_trunk(seqs_fan.size(), false);
  for (std::size_t i = 0; i < tr.size(); ++i) {
    is_trunk[tr[i].internal_id] = true;
    out_levels[tr[i].internal_id] = trunk_levels[i];
  }
  // non-trunk vertices have identical leaf sequences on both sides
  for (std::size_t v = 1; v < seqs_fan.size(); ++v) {
    if (is_trunk[v]) continue;
    auto it = tree_vertex_by_seq.find(seqs_fan[v]);
    if (it == tree_vertex_by_seq.end())
      throw InvariantError("leveled iso bookkeeping", "unmatched branch vertex");
    out_levels[v] = levels[it->second];
  }
  std::vector<int> vals = out_levels;
  std::sort(vals.begin(), vals.end());
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  for (auto& lv : out_levels)
    lv = static_cast<int>(std::lower_bound(vals.begin(), vals.end(), lv) - vals.begin()) + 1;
  return LeveledFan(std::move(fan), std::move(out_levels));
}

// ---- fibers ---------------------------------------------------------------------------

FinitePoset fiber_poset(const PlanarTree& t, int cap) {
  auto fans = enumerate_fans(t.n(), cap);
  std::vector<const Fan*> fiber;
  for (const auto& f : fans)
    if (pi(f) == t) fiber.push_back(&f);
  std::vector<std::string> keys;
  for (const Fan* f : fiber) keys.push_back(f->text());
  return FinitePoset(std::move(keys),
                     [&](int i, int j) { return is_geq(*fiber[j], *fiber[i]); });
}

FinitePoset fiber_geq_poset(const PlanarTree& t, const Fan& that, int cap) {
  if (!is_geq(t, pi(that)))
    throw PreconditionError("fiber_geq_poset needs t >= pi(that)");
  auto fans = enumerate_fans(t.n(), cap);
  std::vector<const Fan*> fiber;
  for (const auto& f : fans)
    if (pi(f) == t && is_geq(f, that)) fiber.push_back(&f);
  std::vector<std::string> keys;
  for (const Fan* f : fiber) keys.push_back(f->text());
  return FinitePoset(std::move(keys),
                     [&](int i, int j) { return is_geq(*fiber[j], *fiber[i]); });
}

// ---- functors as poset maps --------------------------------------------------------------

Functor pi_functor(int n, int cap) {
  auto fans = enumerate_fans(n, cap);
  auto source = std::make_shared<FinitePoset>(face_poset(Species::phi, n, cap));
  auto target = std::make_shared<FinitePoset>(face_poset(Species::psi, n, cap));
  std::vector<int> assign;
  for (int i = 0; i < source->size(); ++i) {
    Fan f = parse_fan(source->element(i));
    assign.push_back(target->index_of(pi(f).text()));
  }
  return Functor{source, target, PosetMap(source, target, std::move(assign))};
}

Functor pi_prime_functor(int n, int cap) {
  auto source = std::make_shared<FinitePoset>(face_poset(Species::phi_level, n, kDefaultTreeCap, cap));
  auto target = std::make_shared<FinitePoset>(face_poset(Species::phi, n));
  std::vector<int> assign;
  for (int i = 0; i < source->size(); ++i) {
    LeveledFan f = parse_leveled_fan(source->element(i));
    assign.push_back(target->index_of(forget_levels(f).text()));
  }
  return Functor{source, target, PosetMap(source, target, std::move(assign))};
}

Functor pi_double_prime_functor(int n, int cap) {
  auto source = std::make_shared<FinitePoset>(face_poset(Species::psi_level, n, kDefaultTreeCap, cap));
  auto target = std::make_shared<FinitePoset>(face_poset(Species::psi, n));
  std::vector<int> assign;
  for (int i = 0; i < source->size(); ++i) {
    LeveledPlanarTree f = parse_leveled_planar_tree(source->element(i));
    assign.push_back(target->index_of(forget_levels(f).text()));
  }
  return Functor{source, target, PosetMap(source, target, std::move(assign))};
}

}  // namespace polyfaces
