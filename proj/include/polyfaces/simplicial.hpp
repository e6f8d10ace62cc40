#pragma once

// Abstract simplicial complexes: order complexes of posets and the test
// fixtures for the homology engine.

#include <string>
#include <vector>

#include "polyfaces/posets.hpp"

namespace polyfaces {

using Simplex = std::vector<int>;  // sorted vertex indices

class SimplicialComplex {
public:
  SimplicialComplex() = default;
  // facets are closed under subsets; duplicates are merged
  static SimplicialComplex from_facets(std::vector<std::string> vertex_labels,
                                       const std::vector<Simplex>& facets);

  int dim() const { return static_cast<int>(by_dim_.size()) - 1; }
  bool empty() const { return by_dim_.empty(); }
  std::size_t vertex_count() const { return vertex_labels_.size(); }
  const std::vector<std::string>& vertex_labels() const { return vertex_labels_; }

  // simplices of dimension d, each sorted, list sorted lexicographically
  const std::vector<Simplex>& simplices(int d) const { return by_dim_.at(d); }
  std::size_t size() const;  // total number of simplices

  std::vector<std::size_t> f_vector() const;
  long long euler_characteristic() const;

  bool closed_under_subsets() const;

private:
  friend SimplicialComplex order_complex(const FinitePoset&);
  std::vector<std::string> vertex_labels_;
  std::vector<std::vector<Simplex>> by_dim_;
};

// k-simplices are the strict chains x_0 < ... < x_k of P
SimplicialComplex order_complex(const FinitePoset& p);

}  // namespace polyfaces
