#pragma once

// Finite posets with cover relations, monotone maps, ordered partitions and
// the face posets of the three polytope families.

#include <boost/dynamic_bitset.hpp>
#include <nlohmann/json.hpp>

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "polyfaces/trees.hpp"

namespace polyfaces {

class FinitePoset {
public:
  // relation(i, j) = elements[i] <= elements[j]; validated to be a partial
  // order, covers computed by transitive reduction
  FinitePoset(std::vector<std::string> elements,
              const std::function<bool(int, int)>& relation);

  int size() const { return static_cast<int>(elements_.size()); }
  const std::vector<std::string>& elements() const { return elements_; }
  const std::string& element(int i) const { return elements_.at(i); }
  int index_of(const std::string& key) const;  // throws PreconditionError if absent

  bool leq(int i, int j) const { return leq_[i][j]; }
  const std::vector<std::pair<int, int>>& covers() const { return covers_; }  // (i,j): i covers j

  std::vector<int> maximal_elements() const;
  std::vector<int> minimal_elements() const;

  // induced subposet on the given element indices (keeps their keys)
  FinitePoset induced(const std::vector<int>& ids) const;
  // all y with y >= x
  FinitePoset up_set(int x) const;
  FinitePoset filtered(const std::function<bool(int)>& keep) const;

  // leq regenerated from covers must equal leq (closure sanity test)
  bool covers_generate_leq() const;

  nlohmann::json to_json() const;    // {"elements": [...], "covers": [[i,j],...]}
  std::string hasse_dot() const;     // directed edges greater -> smaller

private:
  std::vector<std::string> elements_;
  std::vector<boost::dynamic_bitset<>> leq_;
  std::vector<std::pair<int, int>> covers_;
};

struct PosetMap {
  std::shared_ptr<const FinitePoset> source;
  std::shared_ptr<const FinitePoset> target;
  std::vector<int> assignment;  // source index -> target index

  PosetMap(std::shared_ptr<const FinitePoset> src, std::shared_ptr<const FinitePoset> tgt,
           std::vector<int> assign);  // validates monotonicity
};

// face_poset(species, n): poset on the canonical enumeration order
FinitePoset face_poset(Species s, int n, int cap_trees = kDefaultTreeCap,
                       int cap_leveled = kDefaultLeveledCap);

// ---- ordered partitions ------------------------------------------------------

// Sequence of disjoint nonempty blocks covering {1..n+1}.
class OrderedPartition {
public:
  explicit OrderedPartition(std::vector<std::vector<int>> blocks);

  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  int ground_size() const { return ground_size_; }
  std::string text() const;  // e.g. "{2}|{1,3}"

  // this >= other iff other arises by merging adjacent blocks of this
  bool geq(const OrderedPartition& other) const;

  friend bool operator==(const OrderedPartition&, const OrderedPartition&) = default;

private:
  std::vector<std::vector<int>> blocks_;  // each block sorted
  int ground_size_;
};

// The falling-numbers bijection: number i in {1..n+1} drops to the nadir of
// leaves i-1 and i; block k collects the numbers on level-k vertices.
OrderedPartition tonks_partition(const LeveledPlanarTree& t);

}  // namespace polyfaces
