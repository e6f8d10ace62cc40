#include "polyfaces/trees.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

namespace polyfaces {

TreeNode leaf() { return TreeNode{}; }

TreeNode star_leaf() {
  TreeNode t;
  t.star = true;
  return t;
}

TreeNode node(std::vector<TreeNode> children) {
  TreeNode t;
  t.children = std::move(children);
  return t;
}

int leaf_count(const TreeNode& t) {
  if (t.is_leaf()) return 1;
  int c = 0;
  for (const auto& ch : t.children) c += leaf_count(ch);
  return c;
}

bool contains_star(const TreeNode& t) {
  if (t.is_leaf()) return t.star;
  for (const auto& ch : t.children)
    if (contains_star(ch)) return true;
  return false;
}

namespace {

int star_count(const TreeNode& t) {
  if (t.is_leaf()) return t.star ? 1 : 0;
  int c = 0;
  for (const auto& ch : t.children) c += star_count(ch);
  return c;
}

void check_internal_valences(const TreeNode& t, bool is_root, bool root_is_fan) {
  if (t.is_leaf()) return;
  std::size_t min_children = is_root ? (root_is_fan ? 1 : 2) : 2;
  if (t.children.size() < min_children) {
    throw InvariantError(
        is_root ? (root_is_fan ? "fan root must have >= 1 child"
                               : "root must have >= 2 children")
                : "internal vertex must have >= 2 children",
        "");
  }
  for (const auto& ch : t.children) check_internal_valences(ch, false, root_is_fan);
}

// leaves of the whole tree in planar walk order; for fans the walk starts at
// the stored first child of the root
void walk_leaves(const TreeNode& t, std::vector<const TreeNode*>& out) {
  if (t.is_leaf()) {
    out.push_back(&t);
    return;
  }
  for (const auto& ch : t.children) walk_leaves(ch, out);
}

}  // namespace

// ---- species constructors ---------------------------------------------------

PlanarTree::PlanarTree(TreeNode root) : root_(std::move(root)) {
  if (root_.is_leaf()) throw InvariantError("root must have >= 2 children", "bare leaf");
  check_internal_valences(root_, true, false);
  if (star_count(root_) != 0)
    throw InvariantError("planar tree must not contain a distinguished leaf", "");
  n_ = leaf_count(root_) - 2;
}

PlanarTree PlanarTree::corolla(int n) {
  if (n < 0) throw PreconditionError("corolla needs n >= 0");
  return PlanarTree(node(std::vector<TreeNode>(n + 2, leaf())));
}

Fan::Fan(TreeNode root) : root_(std::move(root)) {
  if (root_.is_leaf()) throw InvariantError("fan root must have >= 1 child", "bare leaf");
  check_internal_valences(root_, true, true);
  if (star_count(root_) != 1)
    throw InvariantError("exactly one distinguished leaf", "");
  if (!contains_star(root_.children.front()))
    throw InvariantError("trunk-direction child must come first",
                         "the first root child does not contain *");
  n_ = leaf_count(root_) - 1;
}

Fan Fan::corolla(int n) {
  if (n < 0) throw PreconditionError("corolla needs n >= 0");
  std::vector<TreeNode> kids;
  kids.push_back(star_leaf());
  for (int i = 0; i < n; ++i) kids.push_back(leaf());
  return Fan(node(std::move(kids)));
}

template <class Base>
Leveled<Base>::Leveled(Base base, std::vector<int> levels)
    : base_(std::move(base)), levels_(std::move(levels)) {
  auto parents = internal_parents(base_.root());
  if (levels_.size() != parents.size())
    throw InvariantError("level map must cover every internal vertex",
                         "got " + std::to_string(levels_.size()) + " levels for " +
                             std::to_string(parents.size()) + " vertices");
  int m = 0;
  for (int lv : levels_) m = std::max(m, lv);
  std::vector<bool> seen(m + 1, false);
  for (std::size_t v = 0; v < levels_.size(); ++v) {
    int lv = levels_[v];
    if (lv < 1) throw InvariantError("levels must be positive", "");
    seen[lv] = true;
    int p = parents[v];
    if (p >= 0 && levels_[p] >= lv)
      throw InvariantError("levels must strictly increase from root to leaves", "");
  }
  for (int k = 1; k <= m; ++k)
    if (!seen[k])
      throw InvariantError("level map must be surjective onto 1..m",
                           "missing level " + std::to_string(k));
  level_count_ = m;
}

template class Leveled<PlanarTree>;
template class Leveled<Fan>;

// ---- formatting -------------------------------------------------------------

namespace {

struct Formatter {
  bool is_fan;
  const std::vector<int>* levels;  // null for unleveled
  std::vector<int> leaf_labels;    // by walk position
  int leaf_pos = 0;
  int internal_pos = 0;
  std::string out;

  void emit(const TreeNode& t, bool is_root) {
    if (t.is_leaf()) {
      int lab = leaf_labels[leaf_pos++];
      if (is_fan && lab == 0)
        out += '*';
      else
        out += std::to_string(lab);
      return;
    }
    int my = internal_pos++;
    out += is_root && is_fan ? '<' : '(';
    bool first = true;
    for (const auto& ch : t.children) {
      if (!first) out += ' ';
      first = false;
      emit(ch, false);
    }
    out += is_root && is_fan ? '>' : ')';
    if (levels) {
      out += '@';
      out += std::to_string((*levels)[my]);
    }
  }
};

std::vector<int> planar_labels(int nleaves) {
  std::vector<int> labels(nleaves);
  for (int i = 0; i < nleaves; ++i) labels[i] = i;
  return labels;
}

std::vector<int> fan_labels(const TreeNode& root) {
  std::vector<const TreeNode*> lv;
  walk_leaves(root, lv);
  int n = static_cast<int>(lv.size()) - 1;
  int star_at = -1;
  for (std::size_t i = 0; i < lv.size(); ++i)
    if (lv[i]->star) star_at = static_cast<int>(i);
  std::vector<int> labels(lv.size());
  for (std::size_t i = 0; i < lv.size(); ++i)
    labels[i] = static_cast<int>((static_cast<int>(i) - star_at + (n + 1)) % (n + 1));
  return labels;
}

std::string format_node(const TreeNode& root, bool is_fan, const std::vector<int>* levels) {
  Formatter f;
  f.is_fan = is_fan;
  f.levels = levels;
  f.leaf_labels = is_fan ? fan_labels(root) : planar_labels(leaf_count(root));
  f.emit(root, true);
  return f.out;
}

}  // namespace

std::string PlanarTree::text() const { return format_node(root_, false, nullptr); }
std::string Fan::text() const { return format_node(root_, true, nullptr); }

template <>
std::string Leveled<PlanarTree>::text() const {
  return format_node(base_.root(), false, &levels_);
}
template <>
std::string Leveled<Fan>::text() const {
  return format_node(base_.root(), true, &levels_);
}

std::string format_tree(const AnyTree& t) {
  return std::visit([](const auto& x) { return x.text(); }, t);
}

Species species_of(const AnyTree& t) {
  return std::visit(
      [](const auto& x) -> Species {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, PlanarTree>) return Species::psi;
        if constexpr (std::is_same_v<T, Fan>) return Species::phi;
        if constexpr (std::is_same_v<T, LeveledPlanarTree>) return Species::psi_level;
        if constexpr (std::is_same_v<T, LeveledFan>) return Species::phi_level;
      },
      t);
}

std::string species_name(Species s) {
  switch (s) {
    case Species::psi: return "psi";
    case Species::phi: return "phi";
    case Species::psi_level: return "psi-level";
    case Species::phi_level: return "phi-level";
  }
  return "?";
}

Species parse_species(const std::string& name) {
  if (name == "psi") return Species::psi;
  if (name == "phi") return Species::phi;
  if (name == "psi-level" || name == "psi_level") return Species::psi_level;
  if (name == "phi-level" || name == "phi_level") return Species::phi_level;
  throw PreconditionError("unknown species: " + name);
}

// ---- parsing ----------------------------------------------------------------

namespace {

struct Parser {
  const std::string& text;
  std::size_t pos = 0;
  bool saw_fan_root = false;
  bool saw_level = false;
  std::vector<int> leaf_labels;           // labels as written, walk order (* = -1)
  std::vector<int> levels_by_internal;    // preorder

  explicit Parser(const std::string& t) : text(t) {}

  void skip_ws() {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' ||
                                 text[pos] == '\n' || text[pos] == '\r'))
      ++pos;
  }

  [[noreturn]] void fail(const std::string& what) { throw ParseError(what, pos); }

  TreeNode parse_root() {
    skip_ws();
    if (pos >= text.size()) fail("empty input");
    TreeNode t = parse_node(true);
    skip_ws();
    if (pos != text.size()) fail("trailing characters after tree");
    return t;
  }

  TreeNode parse_node(bool at_root) {
    skip_ws();
    if (pos >= text.size()) fail("unexpected end of input");
    char c = text[pos];
    if (c == '*') {
      ++pos;
      leaf_labels.push_back(-1);
      return star_leaf();
    }
    if (c >= '0' && c <= '9') {
      int v = 0;
      while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
        v = v * 10 + (text[pos] - '0');
        ++pos;
      }
      leaf_labels.push_back(v);
      return leaf();
    }
    if (c == '(' || c == '<') {
      if (c == '<') {
        if (!at_root) fail("'<' is only allowed at the fan root");
        saw_fan_root = true;
      }
      char close = c == '<' ? '>' : ')';
      ++pos;
      int my = static_cast<int>(levels_by_internal.size());
      levels_by_internal.push_back(0);
      std::vector<TreeNode> kids;
      while (true) {
        skip_ws();
        if (pos >= text.size()) fail("unterminated vertex, expected '" + std::string(1, close) + "'");
        if (text[pos] == close) {
          ++pos;
          break;
        }
        kids.push_back(parse_node(false));
      }
      if (kids.empty()) fail("vertex with no children");
      // optional @level
      if (pos < text.size() && text[pos] == '@') {
        ++pos;
        if (pos >= text.size() || text[pos] < '0' || text[pos] > '9') fail("expected level after '@'");
        int lv = 0;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
          lv = lv * 10 + (text[pos] - '0');
          ++pos;
        }
        saw_level = true;
        levels_by_internal[my] = lv;
      }
      return node(std::move(kids));
    }
    fail(std::string("unexpected character '") + c + "'");
  }
};

void check_labels_planar(const std::vector<int>& labels, std::size_t at) {
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] != static_cast<int>(i))
      throw InvariantError("leaf labels must read 0..n+1 in planar order",
                           "leaf " + std::to_string(i) + " is labeled " +
                               (labels[i] < 0 ? "*" : std::to_string(labels[i])));
  (void)at;
}

void check_labels_fan(const std::vector<int>& labels) {
  int n = static_cast<int>(labels.size()) - 1;
  int star_at = -1;
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == -1) star_at = static_cast<int>(i);
  if (star_at < 0) throw InvariantError("exactly one distinguished leaf", "no * found");
  for (std::size_t i = 0; i < labels.size(); ++i) {
    int expect = static_cast<int>((static_cast<int>(i) - star_at + (n + 1)) % (n + 1));
    int got = labels[i] == -1 ? 0 : labels[i];
    if (got != expect)
      throw InvariantError("fan labels must read *,1..n in cyclic order",
                           "walk position " + std::to_string(i));
  }
}

}  // namespace

AnyTree parse_tree(const std::string& text) {
  Parser p(text);
  TreeNode root = p.parse_root();
  if (p.saw_fan_root) {
    check_labels_fan(p.leaf_labels);
    Fan f{std::move(root)};
    if (!p.saw_level) return f;
    return LeveledFan{std::move(f), std::move(p.levels_by_internal)};
  }
  check_labels_planar(p.leaf_labels, 0);
  PlanarTree t{std::move(root)};
  if (!p.saw_level) return t;
  return LeveledPlanarTree{std::move(t), std::move(p.levels_by_internal)};
}

PlanarTree parse_planar_tree(const std::string& text) {
  AnyTree t = parse_tree(text);
  if (auto* p = std::get_if<PlanarTree>(&t)) return *p;
  throw PreconditionError("expected an unleveled planar tree: " + text);
}

Fan parse_fan(const std::string& text) {
  AnyTree t = parse_tree(text);
  if (auto* p = std::get_if<Fan>(&t)) return *p;
  throw PreconditionError("expected an unleveled fan: " + text);
}

LeveledPlanarTree parse_leveled_planar_tree(const std::string& text) {
  AnyTree t = parse_tree(text);
  if (auto* p = std::get_if<LeveledPlanarTree>(&t)) return *p;
  throw PreconditionError("expected a leveled planar tree: " + text);
}

LeveledFan parse_leveled_fan(const std::string& text) {
  AnyTree t = parse_tree(text);
  if (auto* p = std::get_if<LeveledFan>(&t)) return *p;
  throw PreconditionError("expected a leveled fan: " + text);
}

// ---- vertex bookkeeping ------------------------------------------------------

std::vector<int> internal_parents(const TreeNode& root) {
  std::vector<int> parents;
  std::function<void(const TreeNode&, int)> rec = [&](const TreeNode& t, int parent) {
    if (t.is_leaf()) return;
    int my = static_cast<int>(parents.size());
    parents.push_back(parent);
    for (const auto& ch : t.children) rec(ch, my);
  };
  rec(root, -1);
  return parents;
}

std::vector<std::vector<int>> vertex_leaf_seqs(const TreeNode& root, bool is_fan) {
  std::vector<int> labels = is_fan ? fan_labels(root) : planar_labels(leaf_count(root));
  std::vector<std::vector<int>> seqs;
  int leaf_pos = 0;
  std::function<std::pair<int, int>(const TreeNode&)> rec =
      [&](const TreeNode& t) -> std::pair<int, int> {  // [lo, hi) leaf span
    if (t.is_leaf()) {
      int at = leaf_pos++;
      return {at, at + 1};
    }
    int my = static_cast<int>(seqs.size());
    seqs.emplace_back();
    int lo = leaf_pos;
    for (const auto& ch : t.children) rec(ch);
    int hi = leaf_pos;
    seqs[my].assign(labels.begin() + lo, labels.begin() + hi);
    return {lo, hi};
  };
  rec(root);
  return seqs;
}

std::vector<int> internal_edge_ids(const TreeNode& root) {
  auto parents = internal_parents(root);
  std::vector<int> ids;
  for (std::size_t v = 1; v < parents.size(); ++v) ids.push_back(static_cast<int>(v));
  return ids;
}

// ---- contraction -------------------------------------------------------------

Contraction contract_tracked(const TreeNode& root, bool is_fan, const EdgeSet& edges) {
  auto parents = internal_parents(root);
  for (int e : edges) {
    if (e <= 0 || e >= static_cast<int>(parents.size()))
      throw PreconditionError("edge id " + std::to_string(e) +
                              " is not an internal non-root vertex");
  }

  int counter = 0;
  // returns the spliced node list replacing this subtree
  std::function<std::vector<TreeNode>(const TreeNode&, bool)> rec =
      [&](const TreeNode& t, bool is_root) -> std::vector<TreeNode> {
    if (t.is_leaf()) return {t};
    int my = counter++;
    std::vector<TreeNode> kids;
    for (const auto& ch : t.children) {
      auto sub = rec(ch, false);
      kids.insert(kids.end(), sub.begin(), sub.end());
    }
    if (is_root && is_fan) {
      // keep the trunk-direction child first
      std::size_t ti = 0;
      for (std::size_t i = 0; i < kids.size(); ++i)
        if (contains_star(kids[i])) {
          ti = i;
          break;
        }
      std::rotate(kids.begin(), kids.begin() + ti, kids.end());
    }
    if (!is_root && edges.count(my)) return kids;
    return {node(std::move(kids))};
  };
  Contraction out;
  auto res = rec(root, true);
  out.tree = std::move(res.front());

  // vertex map via leaf sequences (stable under the fan root rotation)
  auto old_seqs = vertex_leaf_seqs(root, is_fan);
  auto new_seqs = vertex_leaf_seqs(out.tree, is_fan);
  std::map<std::vector<int>, int> new_at;
  for (std::size_t v = 1; v < new_seqs.size(); ++v) new_at[new_seqs[v]] = static_cast<int>(v);
  out.vertex_map.resize(old_seqs.size());
  for (std::size_t v = 0; v < old_seqs.size(); ++v) {
    int j = static_cast<int>(v);
    while (edges.count(j)) j = parents[j];
    if (j == 0) {
      out.vertex_map[v] = 0;
    } else {
      auto it = new_at.find(old_seqs[j]);
      assert(it != new_at.end());
      out.vertex_map[v] = it->second;
    }
  }
  return out;
}

PlanarTree contract(const PlanarTree& t, const EdgeSet& edges) {
  return PlanarTree(contract_tracked(t.root(), false, edges).tree);
}

Fan contract(const Fan& t, const EdgeSet& edges) {
  return Fan(contract_tracked(t.root(), true, edges).tree);
}

// ---- face order ----------------------------------------------------------------

namespace {

// family of leaf sequences of non-root internal vertices; a planar tree (or
// fan) on a fixed label set is determined by this family, and contraction
// removes exactly the contracted vertices' entries
std::set<std::vector<int>> seq_family(const TreeNode& root, bool is_fan) {
  auto seqs = vertex_leaf_seqs(root, is_fan);
  std::set<std::vector<int>> fam(seqs.begin() + 1, seqs.end());
  return fam;
}

bool family_geq(const TreeNode& a, const TreeNode& b, bool is_fan) {
  auto fa = seq_family(a, is_fan);
  auto fb = seq_family(b, is_fan);
  return std::includes(fa.begin(), fa.end(), fb.begin(), fb.end());
}

// weakly monotone surjections {1..m} -> {1..m2} as level -> block maps
void for_each_monotone_surjection(int m, int m2, const std::function<void(const std::vector<int>&)>& fn) {
  if (m2 < 1 || m2 > m) return;
  std::vector<int> lam(m + 1);
  // choose m2-1 cut positions among m-1 gaps
  std::vector<int> cuts(m2 - 1);
  std::function<void(int, int)> rec = [&](int idx, int from) {
    if (idx == m2 - 1) {
      int b = 1;
      std::size_t ci = 0;
      for (int lv = 1; lv <= m; ++lv) {
        lam[lv] = b;
        if (ci < cuts.size() && lv == cuts[ci]) {
          ++b;
          ++ci;
        }
      }
      fn(lam);
      return;
    }
    for (int c = from; c <= m - (m2 - 1 - idx); ++c) {
      cuts[idx] = c;
      rec(idx + 1, c + 1);
    }
  };
  rec(0, 1);
}

template <class Base>
bool leveled_geq_impl(const Leveled<Base>& t1, const Leveled<Base>& t2, bool is_fan) {
  if (t1.base().n() != t2.base().n())
    throw PreconditionError("is_geq needs the same leaf-label set");
  int m1 = t1.level_count();
  int m2 = t2.level_count();
  if (m2 > m1) return false;
  auto parents = internal_parents(t1.base().root());
  const auto& L1 = t1.levels();
  const auto& L2 = t2.levels();
  bool found = false;
  for_each_monotone_surjection(m1, m2, [&](const std::vector<int>& lam) {
    if (found) return;
    EdgeSet contracted;
    for (std::size_t v = 1; v < parents.size(); ++v)
      if (lam[L1[v]] == lam[L1[parents[v]]]) contracted.insert(static_cast<int>(v));
    auto res = contract_tracked(t1.base().root(), is_fan, contracted);
    if (!(res.tree == t2.base().root())) return;
    for (std::size_t v = 0; v < parents.size(); ++v)
      if (L2[res.vertex_map[v]] != lam[L1[v]]) return;
    found = true;
  });
  return found;
}

}  // namespace

bool is_geq(const PlanarTree& t1, const PlanarTree& t2) {
  if (t1.n() != t2.n()) throw PreconditionError("is_geq needs the same leaf-label set");
  return family_geq(t1.root(), t2.root(), false);
}

bool is_geq(const Fan& t1, const Fan& t2) {
  if (t1.n() != t2.n()) throw PreconditionError("is_geq needs the same leaf-label set");
  return family_geq(t1.root(), t2.root(), true);
}

bool is_geq(const LeveledPlanarTree& t1, const LeveledPlanarTree& t2) {
  return leveled_geq_impl(t1, t2, false);
}

bool is_geq(const LeveledFan& t1, const LeveledFan& t2) {
  return leveled_geq_impl(t1, t2, true);
}

bool any_is_geq(const AnyTree& t1, const AnyTree& t2) {
  if (t1.index() != t2.index()) throw PreconditionError("is_geq needs matching species");
  return std::visit(
      [&](const auto& a) -> bool {
        using T = std::decay_t<decltype(a)>;
        return is_geq(a, std::get<T>(t2));
      },
      t1);
}

std::optional<EdgeSet> contraction_witness(const TreeNode& t1, const TreeNode& t2, bool is_fan) {
  auto f1 = vertex_leaf_seqs(t1, is_fan);
  auto fam2 = seq_family(t2, is_fan);
  std::set<std::vector<int>> fam1(f1.begin() + 1, f1.end());
  if (!std::includes(fam1.begin(), fam1.end(), fam2.begin(), fam2.end())) return std::nullopt;
  EdgeSet edges;
  for (std::size_t v = 1; v < f1.size(); ++v)
    if (!fam2.count(f1[v])) edges.insert(static_cast<int>(v));
  if (!(contract_tracked(t1, is_fan, edges).tree == t2)) return std::nullopt;
  return edges;
}

// ---- enumeration ---------------------------------------------------------------

namespace {

void for_each_composition(int m, int min_parts, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> parts;
  std::function<void(int)> rec = [&](int rem) {
    if (rem == 0) {
      if (static_cast<int>(parts.size()) >= min_parts) fn(parts);
      return;
    }
    for (int p = 1; p <= rem; ++p) {
      parts.push_back(p);
      rec(rem - p);
      parts.pop_back();
    }
  };
  rec(m);
}

// all planar subtrees on m leaves (a bare leaf when m == 1)
std::vector<TreeNode> psi_subtrees(int m) {
  if (m == 1) return {leaf()};
  std::vector<TreeNode> out;
  for_each_composition(m, 2, [&](const std::vector<int>& comp) {
    std::vector<std::vector<TreeNode>> choices;
    for (int c : comp) choices.push_back(psi_subtrees(c));
    std::vector<std::size_t> idx(comp.size(), 0);
    while (true) {
      std::vector<TreeNode> kids;
      for (std::size_t i = 0; i < comp.size(); ++i) kids.push_back(choices[i][idx[i]]);
      out.push_back(node(std::move(kids)));
      std::size_t i = 0;
      while (i < idx.size()) {
        if (++idx[i] < choices[i].size()) break;
        idx[i] = 0;
        ++i;
      }
      if (i == idx.size()) break;
    }
  });
  return out;
}

// sequences of planar subtrees partitioning an interval of m labels into
// min_parts or more blocks (m == 0 gives the empty sequence)
std::vector<std::vector<TreeNode>> branch_seqs(int m, int min_parts) {
  std::vector<std::vector<TreeNode>> out;
  if (m == 0) {
    if (min_parts <= 0) out.push_back({});
    return out;
  }
  for_each_composition(m, std::max(min_parts, 1), [&](const std::vector<int>& comp) {
    std::vector<std::vector<TreeNode>> choices;
    for (int c : comp) choices.push_back(psi_subtrees(c));
    std::vector<std::size_t> idx(comp.size(), 0);
    while (true) {
      std::vector<TreeNode> seq;
      for (std::size_t i = 0; i < comp.size(); ++i) seq.push_back(choices[i][idx[i]]);
      out.push_back(std::move(seq));
      std::size_t i = 0;
      while (i < idx.size()) {
        if (++idx[i] < choices[i].size()) break;
        idx[i] = 0;
        ++i;
      }
      if (i == idx.size()) break;
    }
  });
  return out;
}

// trunk subtree covering `small` labels on the left side of * and `big` on
// the right side; children of a trunk vertex are [right..., cont, left...]
std::vector<TreeNode> trunk_subtrees(int small, int big) {
  if (small == 0 && big == 0) return {star_leaf()};
  std::vector<TreeNode> out;
  for (int q2 = 0; q2 <= small; ++q2) {
    for (int p2 = 0; p2 <= big; ++p2) {
      int lrest = small - q2, rrest = big - p2;
      if (lrest == 0 && rrest == 0) continue;  // trunk vertex needs a branch
      auto conts = trunk_subtrees(q2, p2);
      auto lefts = branch_seqs(lrest, 0);
      auto rights = branch_seqs(rrest, 0);
      for (const auto& rs : rights)
        for (const auto& cont : conts)
          for (const auto& ls : lefts) {
            std::vector<TreeNode> kids = rs;
            kids.push_back(cont);
            kids.insert(kids.end(), ls.begin(), ls.end());
            out.push_back(node(std::move(kids)));
          }
    }
  }
  return out;
}

void check_cap(int n, int cap, const char* what) {
  if (n < 0) throw PreconditionError("n must be >= 0");
  if (n > cap)
    throw CapError(std::string(what) + " enumeration capped at n <= " + std::to_string(cap) +
                   " (requested n = " + std::to_string(n) + ")");
}

template <class T>
void sort_by_text(std::vector<T>& v) {
  std::sort(v.begin(), v.end(), [](const T& a, const T& b) { return a.text() < b.text(); });
}

template <class Base>
std::vector<Leveled<Base>> levelizations_impl(const Base& t) {
  auto parents = internal_parents(t.root());
  int m = static_cast<int>(parents.size());
  std::vector<std::vector<int>> kids(m);
  for (int v = 1; v < m; ++v) kids[parents[v]].push_back(v);
  std::vector<Leveled<Base>> out;
  std::vector<int> levels(m, 0);
  std::vector<int> blocked(m, 0);  // number of unassigned ancestors
  for (int v = 1; v < m; ++v) blocked[v] = 1;  // parent unassigned at start

  std::function<void(int, int)> rec = [&](int level, int remaining) {
    if (remaining == 0) {
      out.emplace_back(t, levels);
      return;
    }
    std::vector<int> mins;
    for (int v = 0; v < m; ++v)
      if (levels[v] == 0 && blocked[v] == 0) mins.push_back(v);
    int k = static_cast<int>(mins.size());
    for (int mask = 1; mask < (1 << k); ++mask) {
      std::vector<int> chosen;
      for (int i = 0; i < k; ++i)
        if (mask & (1 << i)) chosen.push_back(mins[i]);
      for (int v : chosen) {
        levels[v] = level;
        for (int c : kids[v]) --blocked[c];
      }
      rec(level + 1, remaining - static_cast<int>(chosen.size()));
      for (int v : chosen) {
        levels[v] = 0;
        for (int c : kids[v]) ++blocked[c];
      }
    }
  };
  rec(1, m);
  sort_by_text(out);
  return out;
}

}  // namespace

std::vector<PlanarTree> enumerate_planar_trees(int n, int cap) {
  check_cap(n, cap, "planar tree");
  std::vector<PlanarTree> out;
  for (auto& t : psi_subtrees(n + 2))
    if (!t.is_leaf()) out.emplace_back(std::move(t));
  sort_by_text(out);
  return out;
}

std::vector<Fan> enumerate_fans(int n, int cap) {
  check_cap(n, cap, "fan");
  std::vector<Fan> out;
  for (int q = 0; q <= n; ++q) {
    for (int p = 0; p + q <= n; ++p) {
      int mid = n - q - p;
      auto trunks = trunk_subtrees(q, p);
      auto mids = branch_seqs(mid, 0);
      for (const auto& trunk : trunks)
        for (const auto& ms : mids) {
          std::vector<TreeNode> kids;
          kids.push_back(trunk);
          kids.insert(kids.end(), ms.begin(), ms.end());
          out.emplace_back(node(std::move(kids)));
        }
    }
  }
  sort_by_text(out);
  return out;
}

std::vector<LeveledPlanarTree> enumerate_leveled_planar_trees(int n, int cap) {
  check_cap(n, cap, "leveled tree");
  std::vector<LeveledPlanarTree> out;
  for (const auto& t : enumerate_planar_trees(n, cap))
    for (auto& lt : levelizations_impl(t)) out.push_back(std::move(lt));
  sort_by_text(out);
  return out;
}

std::vector<LeveledFan> enumerate_leveled_fans(int n, int cap) {
  check_cap(n, cap, "leveled fan");
  std::vector<LeveledFan> out;
  for (const auto& f : enumerate_fans(n, cap))
    for (auto& lf : levelizations_impl(f)) out.push_back(std::move(lf));
  sort_by_text(out);
  return out;
}

std::vector<std::string> enumerate_texts(Species s, int n, int cap) {
  std::vector<std::string> out;
  switch (s) {
    case Species::psi:
      for (const auto& t : enumerate_planar_trees(n, cap)) out.push_back(t.text());
      break;
    case Species::phi:
      for (const auto& t : enumerate_fans(n, cap)) out.push_back(t.text());
      break;
    case Species::psi_level:
      for (const auto& t : enumerate_leveled_planar_trees(n, cap)) out.push_back(t.text());
      break;
    case Species::phi_level:
      for (const auto& t : enumerate_leveled_fans(n, cap)) out.push_back(t.text());
      break;
  }
  return out;
}

std::vector<LeveledPlanarTree> enumerate_levelizations(const PlanarTree& t) {
  return levelizations_impl(t);
}

std::vector<LeveledFan> enumerate_levelizations(const Fan& t) {
  return levelizations_impl(t);
}

}  // namespace polyfaces
