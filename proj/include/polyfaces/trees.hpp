#pragma once

// Tree species labelling the faces of the associahedron (planar trees), the
// cyclohedron (fans) and the permutohedron (leveled trees), together with
// their contraction calculus, text codec and exhaustive enumeration.

#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "polyfaces/errors.hpp"

namespace polyfaces {

// Shape node. A leaf has no children; `star` marks the distinguished leaf of
// a fan. Leaf labels are never stored: they are forced by planar position.
struct TreeNode {
  std::vector<TreeNode> children;
  bool star = false;

  bool is_leaf() const { return children.empty(); }
  friend bool operator==(const TreeNode&, const TreeNode&) = default;
};

TreeNode leaf();
TreeNode star_leaf();
TreeNode node(std::vector<TreeNode> children);

int leaf_count(const TreeNode& t);
bool contains_star(const TreeNode& t);

// Planar rooted tree in the upper half-plane: root with >= 2 children, every
// other internal vertex with >= 2 children. Leaves read 0..n+1 left to right.
class PlanarTree {
public:
  explicit PlanarTree(TreeNode root);
  static PlanarTree corolla(int n);

  const TreeNode& root() const { return root_; }
  int n() const { return n_; }
  std::string text() const;

  friend bool operator==(const PlanarTree&, const PlanarTree&) = default;

private:
  TreeNode root_;
  int n_;
};

// Planar rooted tree with one distinguished leaf (*), root of valence >= 1,
// other internal vertices of valence >= 3. Cyclic leaf order reads *,1,..,n.
// Root children are stored with the trunk-direction child first.
class Fan {
public:
  explicit Fan(TreeNode root);
  static Fan corolla(int n);

  const TreeNode& root() const { return root_; }
  int n() const { return n_; }
  std::string text() const;

  friend bool operator==(const Fan&, const Fan&) = default;

private:
  TreeNode root_;
  int n_;
};

// Base tree plus a surjective level map on internal vertices that strictly
// increases away from the root. Levels are indexed by internal preorder id.
template <class Base>
class Leveled {
public:
  Leveled(Base base, std::vector<int> levels);

  const Base& base() const { return base_; }
  const std::vector<int>& levels() const { return levels_; }
  int level_count() const { return level_count_; }
  std::string text() const;

  friend bool operator==(const Leveled&, const Leveled&) = default;

private:
  Base base_;
  std::vector<int> levels_;
  int level_count_;
};

using LeveledPlanarTree = Leveled<PlanarTree>;
using LeveledFan = Leveled<Fan>;

using AnyTree = std::variant<PlanarTree, Fan, LeveledPlanarTree, LeveledFan>;

enum class Species { psi, phi, psi_level, phi_level };

Species species_of(const AnyTree& t);
std::string species_name(Species s);
Species parse_species(const std::string& name);  // accepts psi|phi|psi-level|phi-level

// ---- codec ----------------------------------------------------------------
//
// Grammar (UTF-8): psi-tree ::= label | "(" child+ ")"; the fan root uses
// "<" child+ ">" with the trunk-direction child first and "*" for the
// distinguished leaf; a leveled internal vertex appends "@k", k >= 1.
// Children are space-separated, labels are decimal integers.

AnyTree parse_tree(const std::string& text);
std::string format_tree(const AnyTree& t);

PlanarTree parse_planar_tree(const std::string& text);
Fan parse_fan(const std::string& text);
LeveledPlanarTree parse_leveled_planar_tree(const std::string& text);
LeveledFan parse_leveled_fan(const std::string& text);

// ---- vertex bookkeeping ----------------------------------------------------
//
// Internal vertices are identified by preorder id (root = 0) in the stored
// child order. For fans that order starts with the trunk-direction child.

// parent internal id per internal vertex (-1 for the root)
std::vector<int> internal_parents(const TreeNode& root);

// per internal vertex, the ordered sequence of its leaf labels. For planar
// trees labels are 0..n+1; for fans 0 stands for * and the sequence follows
// the stored walk order. The root's sequence is included (id 0).
std::vector<std::vector<int>> vertex_leaf_seqs(const TreeNode& root, bool is_fan);

// ids of non-root internal vertices, i.e. the contractible edges, each edge
// named by its child endpoint
std::vector<int> internal_edge_ids(const TreeNode& root);

// Set of internal edges, each identified by the child endpoint's internal
// preorder id.
using EdgeSet = std::set<int>;

// ---- contraction calculus ---------------------------------------------------

struct Contraction {
  TreeNode tree;
  // old internal id -> new internal id (contracted vertices map to the
  // surviving ancestor they were merged into)
  std::vector<int> vertex_map;
};

// Collapses every edge in `edges`, splicing the child's children into the
// parent at the edge's position. For fans the root's children are re-rotated
// so the trunk-direction child stays first.
Contraction contract_tracked(const TreeNode& root, bool is_fan, const EdgeSet& edges);

PlanarTree contract(const PlanarTree& t, const EdgeSet& edges);
Fan contract(const Fan& t, const EdgeSet& edges);

// Face order: t1 >= t2 iff t2 is a contraction of t1 (for leveled species,
// iff t2 arises from t1 by merging adjacent levels, contracting the edges
// that become level-internal).
bool is_geq(const PlanarTree& t1, const PlanarTree& t2);
bool is_geq(const Fan& t1, const Fan& t2);
bool is_geq(const LeveledPlanarTree& t1, const LeveledPlanarTree& t2);
bool is_geq(const LeveledFan& t1, const LeveledFan& t2);
bool any_is_geq(const AnyTree& t1, const AnyTree& t2);

// The edge set E with contract(t1, E) == t2, if one exists. Unique when it
// exists because a tree is determined by its family of vertex leaf sequences.
std::optional<EdgeSet> contraction_witness(const TreeNode& t1, const TreeNode& t2, bool is_fan);

// ---- enumeration -----------------------------------------------------------

inline constexpr int kDefaultTreeCap = 6;
inline constexpr int kDefaultLeveledCap = 5;

// Complete, duplicate-free, sorted by canonical text.
std::vector<PlanarTree> enumerate_planar_trees(int n, int cap = kDefaultTreeCap);
std::vector<Fan> enumerate_fans(int n, int cap = kDefaultTreeCap);
std::vector<LeveledPlanarTree> enumerate_leveled_planar_trees(int n, int cap = kDefaultLeveledCap);
std::vector<LeveledFan> enumerate_leveled_fans(int n, int cap = kDefaultLeveledCap);
std::vector<std::string> enumerate_texts(Species s, int n, int cap);

// All surjective strictly monotone level maps on a fixed base.
std::vector<LeveledPlanarTree> enumerate_levelizations(const PlanarTree& t);
std::vector<LeveledFan> enumerate_levelizations(const Fan& t);

}  // namespace polyfaces
