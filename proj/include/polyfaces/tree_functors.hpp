#pragma once

// The projection from fans to planar trees (cutting the plane along the
// trunk), level-forgetting projections, the leveled fan/tree isomorphism,
// trunk words, and fiber posets.

#include <memory>
#include <string>
#include <vector>

#include "polyfaces/posets.hpp"
#include "polyfaces/trees.hpp"
#include "polyfaces/words.hpp"

namespace polyfaces {

// Trunk data of a fan: the path from the root to the distinguished leaf with
// the left-/right-going branches of each trunk vertex.
struct TrunkVertex {
  int internal_id;                  // internal preorder id in the fan
  std::vector<TreeNode> left;       // branches after the trunk continuation
  std::vector<TreeNode> right;      // branches before the trunk continuation
};

// non-root trunk vertices, root first
std::vector<TrunkVertex> trunk(const Fan& f);

// The cut: the distinguished leaf splits into leaves 0 and n+1; a trunk
// vertex yields a left-most (right-most) vertex iff it has left-going
// (right-going) branches. Fan leaf i maps to tree leaf i.
PlanarTree pi(const Fan& f);

Fan forget_levels(const LeveledFan& t);
PlanarTree forget_levels(const LeveledPlanarTree& t);

// Lemma-level order isomorphism between leveled fans and leveled planar
// trees: apply the cut and give both copies of a duplicated trunk vertex the
// level of their source.
LeveledPlanarTree leveled_iso(const LeveledFan& f);
LeveledFan leveled_iso_inverse(const LeveledPlanarTree& t);

// word read along the trunk: a = only left-going, b = only right-going,
// (ab) = both
Word trunk_word(const Fan& f);

// number of left-most / right-most internal vertices of a planar tree
std::pair<int, int> spine_counts(const PlanarTree& t);

// internal ids along the path to leaf 0 (leaf n+1), root excluded, root first
std::vector<int> left_spine(const PlanarTree& t);
std::vector<int> right_spine(const PlanarTree& t);

// inverse of (pi, trunk_word) on the fiber over t
Fan fan_from_word(const PlanarTree& t, const Word& w);

// induced subposet of Phi(n) on { f : pi(f) = t } (and f >= that, for the
// second form)
FinitePoset fiber_poset(const PlanarTree& t, int cap = kDefaultTreeCap);
FinitePoset fiber_geq_poset(const PlanarTree& t, const Fan& that, int cap = kDefaultTreeCap);

// ---- functors as poset maps ----------------------------------------------------

struct Functor {
  std::shared_ptr<const FinitePoset> source;
  std::shared_ptr<const FinitePoset> target;
  PosetMap map;
};

Functor pi_functor(int n, int cap = kDefaultTreeCap);                  // Phi(n) -> Psi([n+1])
Functor pi_prime_functor(int n, int cap = kDefaultLeveledCap);         // Phi^lev -> Phi
Functor pi_double_prime_functor(int n, int cap = kDefaultLeveledCap);  // Psi^lev -> Psi

}  // namespace polyfaces
