#include "polyfaces/posets.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace polyfaces {

FinitePoset::FinitePoset(std::vector<std::string> elements,
                         const std::function<bool(int, int)>& relation)
    : elements_(std::move(elements)) {
  int n = size();
  leq_.assign(n, boost::dynamic_bitset<>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (relation(i, j)) leq_[i].set(j);

  for (int i = 0; i < n; ++i)
    if (!leq_[i][i]) throw InvariantError("leq must be reflexive", elements_[i]);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i != j && leq_[i][j] && leq_[j][i])
        throw InvariantError("leq must be antisymmetric", elements_[i] + " vs " + elements_[j]);
      if (leq_[i][j] && !leq_[j].is_subset_of(leq_[i]))
        throw InvariantError("leq must be transitive", elements_[i] + " <= " + elements_[j]);
    }

  // transitive reduction: i covers j iff j < i and no k with j < k < i
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j || !leq_[j][i]) continue;
      bool direct = true;
      for (int k = 0; direct && k < n; ++k)
        if (k != i && k != j && leq_[j][k] && leq_[k][i]) direct = false;
      if (direct) covers_.emplace_back(i, j);
    }
  std::sort(covers_.begin(), covers_.end());
}

int FinitePoset::index_of(const std::string& key) const {
  for (int i = 0; i < size(); ++i)
    if (elements_[i] == key) return i;
  throw PreconditionError("element not in poset: " + key);
}

std::vector<int> FinitePoset::maximal_elements() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i) {
    bool maximal = true;
    for (int j = 0; maximal && j < size(); ++j)
      if (j != i && leq_[i][j]) maximal = false;
    if (maximal) out.push_back(i);
  }
  return out;
}

std::vector<int> FinitePoset::minimal_elements() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i) {
    bool minimal = true;
    for (int j = 0; minimal && j < size(); ++j)
      if (j != i && leq_[j][i]) minimal = false;
    if (minimal) out.push_back(i);
  }
  return out;
}

FinitePoset FinitePoset::induced(const std::vector<int>& ids) const {
  std::vector<std::string> elems;
  elems.reserve(ids.size());
  for (int i : ids) elems.push_back(elements_.at(i));
  return FinitePoset(std::move(elems),
                     [&](int a, int b) { return leq(ids[a], ids[b]); });
}

FinitePoset FinitePoset::up_set(int x) const {
  if (x < 0 || x >= size()) throw PreconditionError("up_set: element out of range");
  std::vector<int> ids;
  for (int i = 0; i < size(); ++i)
    if (leq_[x][i]) ids.push_back(i);
  return induced(ids);
}

FinitePoset FinitePoset::filtered(const std::function<bool(int)>& keep) const {
  std::vector<int> ids;
  for (int i = 0; i < size(); ++i)
    if (keep(i)) ids.push_back(i);
  return induced(ids);
}

bool FinitePoset::covers_generate_leq() const {
  int n = size();
  std::vector<boost::dynamic_bitset<>> reach(n, boost::dynamic_bitset<>(n));
  for (int i = 0; i < n; ++i) reach[i].set(i);
  for (auto [i, j] : covers_) reach[i].set(j);  // i > j: i reaches j downward
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto [i, j] : covers_) {
      auto merged = reach[i] | reach[j];
      if (merged != reach[i]) {
        reach[i] = merged;
        changed = true;
      }
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (static_cast<bool>(leq_[j][i]) != static_cast<bool>(reach[i][j])) return false;
  return true;
}

nlohmann::json FinitePoset::to_json() const {
  nlohmann::json j;
  j["elements"] = elements_;
  auto arr = nlohmann::json::array();
  for (auto [i, k] : covers_) arr.push_back({i, k});
  j["covers"] = arr;
  return j;
}

std::string FinitePoset::hasse_dot() const {
  std::ostringstream os;
  os << "digraph hasse {\n";
  for (int i = 0; i < size(); ++i)
    os << "  n" << i << " [label=\"" << elements_[i] << "\"];\n";
  for (auto [i, j] : covers_) os << "  n" << i << " -> n" << j << ";\n";
  os << "}\n";
  return os.str();
}

PosetMap::PosetMap(std::shared_ptr<const FinitePoset> src,
                   std::shared_ptr<const FinitePoset> tgt, std::vector<int> assign)
    : source(std::move(src)), target(std::move(tgt)), assignment(std::move(assign)) {
  if (static_cast<int>(assignment.size()) != source->size())
    throw InvariantError("poset map must assign every source element", "");
  for (int v : assignment)
    if (v < 0 || v >= target->size())
      throw InvariantError("poset map must land in the target", "");
  for (int i = 0; i < source->size(); ++i)
    for (int j = 0; j < source->size(); ++j)
      if (source->leq(i, j) && !target->leq(assignment[i], assignment[j]))
        throw InvariantError("poset map must be monotone",
                             source->element(i) + " <= " + source->element(j));
}

FinitePoset face_poset(Species s, int n, int cap_trees, int cap_leveled) {
  switch (s) {
    case Species::psi: {
      auto trees = enumerate_planar_trees(n, cap_trees);
      std::vector<std::string> keys;
      for (const auto& t : trees) keys.push_back(t.text());
      return FinitePoset(std::move(keys),
                         [&](int i, int j) { return is_geq(trees[j], trees[i]); });
    }
    case Species::phi: {
      auto fans = enumerate_fans(n, cap_trees);
      std::vector<std::string> keys;
      for (const auto& t : fans) keys.push_back(t.text());
      return FinitePoset(std::move(keys),
                         [&](int i, int j) { return is_geq(fans[j], fans[i]); });
    }
    case Species::psi_level: {
      auto trees = enumerate_leveled_planar_trees(n, cap_leveled);
      std::vector<std::string> keys;
      for (const auto& t : trees) keys.push_back(t.text());
      return FinitePoset(std::move(keys),
                         [&](int i, int j) { return is_geq(trees[j], trees[i]); });
    }
    case Species::phi_level: {
      auto fans = enumerate_leveled_fans(n, cap_leveled);
      std::vector<std::string> keys;
      for (const auto& t : fans) keys.push_back(t.text());
      return FinitePoset(std::move(keys),
                         [&](int i, int j) { return is_geq(fans[j], fans[i]); });
    }
  }
  throw PreconditionError("unknown species");
}

// ---- ordered partitions --------------------------------------------------------

OrderedPartition::OrderedPartition(std::vector<std::vector<int>> blocks)
    : blocks_(std::move(blocks)) {
  std::vector<int> all;
  for (auto& b : blocks_) {
    if (b.empty()) throw InvariantError("partition blocks must be nonempty", "");
    std::sort(b.begin(), b.end());
    all.insert(all.end(), b.begin(), b.end());
  }
  std::sort(all.begin(), all.end());
  for (std::size_t i = 0; i < all.size(); ++i)
    if (all[i] != static_cast<int>(i) + 1)
      throw InvariantError("partition blocks must be disjoint and cover 1..n+1", "");
  ground_size_ = static_cast<int>(all.size());
}

std::string OrderedPartition::text() const {
  std::ostringstream os;
  for (std::size_t k = 0; k < blocks_.size(); ++k) {
    if (k) os << '|';
    os << '{';
    for (std::size_t i = 0; i < blocks_[k].size(); ++i) {
      if (i) os << ',';
      os << blocks_[k][i];
    }
    os << '}';
  }
  return os.str();
}

bool OrderedPartition::geq(const OrderedPartition& other) const {
  if (ground_size_ != other.ground_size_) throw PreconditionError("partition ground sets differ");
  std::size_t m = blocks_.size(), m2 = other.blocks_.size();
  if (m2 > m) return false;
  // other must be obtained by grouping consecutive blocks of this
  std::size_t at = 0;
  for (const auto& target : other.blocks_) {
    std::vector<int> merged;
    while (at < m && merged.size() < target.size()) {
      merged.insert(merged.end(), blocks_[at].begin(), blocks_[at].end());
      ++at;
    }
    std::sort(merged.begin(), merged.end());
    if (merged != target) return false;
  }
  return at == m;
}

OrderedPartition tonks_partition(const LeveledPlanarTree& t) {
  const TreeNode& root = t.base().root();
  // ancestor chains per leaf, by internal preorder ids
  std::vector<std::vector<int>> chains;
  std::vector<int> stack;
  int counter = 0;
  std::function<void(const TreeNode&)> rec = [&](const TreeNode& u) {
    if (u.is_leaf()) {
      chains.push_back(stack);
      return;
    }
    stack.push_back(counter++);
    for (const auto& ch : u.children) rec(ch);
    stack.pop_back();
  };
  rec(root);

  std::map<int, std::vector<int>> blocks;  // level -> numbers
  int nl = static_cast<int>(chains.size());
  for (int i = 1; i < nl; ++i) {
    const auto& a = chains[i - 1];
    const auto& b = chains[i];
    std::size_t k = 0;
    while (k < a.size() && k < b.size() && a[k] == b[k]) ++k;
    int nadir = a[k - 1];  // chains share at least the root
    blocks[t.levels()[nadir]].push_back(i);
  }
  std::vector<std::vector<int>> ordered;
  for (auto& [lv, nums] : blocks) ordered.push_back(std::move(nums));
  return OrderedPartition(std::move(ordered));
}

}  // namespace polyfaces
