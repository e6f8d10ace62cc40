#pragma once

// Chain complexes over exact rationals or F2, reduced homology ranks by
// column elimination, and greedy free-face collapsing.

#include <optional>
#include <vector>

#include "polyfaces/rational.hpp"
#include "polyfaces/simplicial.hpp"

namespace polyfaces {

enum class Coeffs { rationals, f2 };

// Per-dimension boundary matrices of a simplicial complex, with the
// augmentation map in dimension 0. Columns hold (row, coefficient) pairs
// sorted by row; d(d(x)) = 0 is checked on construction.
class ChainComplex {
public:
  explicit ChainComplex(const SimplicialComplex& k);

  int dim() const { return static_cast<int>(sizes_.size()) - 1; }
  std::size_t size(int d) const { return sizes_.at(d); }

  // rank of the boundary map C_d -> C_{d-1} (d = 0 is the augmentation)
  long rank(int d, Coeffs c) const;

private:
  std::vector<std::size_t> sizes_;
  // boundary_[d]: columns indexed by d-simplices, rows by (d-1)-simplices
  std::vector<std::vector<std::vector<std::pair<int, int>>>> boundary_;
};

// reduced Betti numbers b~_0 .. b~_dim
std::vector<long> homology_ranks(const SimplicialComplex& k, Coeffs c);

struct CollapseCertificate {
  // elementary collapses (free face, unique coface), in order of removal
  std::vector<std::pair<Simplex, Simplex>> steps;
  Simplex final_vertex;
};

// Greedy free-face collapsing, lexicographically first free face each step.
// Failure to collapse is not evidence of non-contractibility.
std::optional<CollapseCertificate> greedy_collapse(const SimplicialComplex& k);

struct ContractibilityReport {
  bool acyclic_q = false;
  bool acyclic_f2 = false;
  std::optional<CollapseCertificate> collapse;

  bool collapsible() const { return collapse.has_value(); }
};

// Layered contractibility evidence: acyclicity over both coefficient systems
// plus an optional collapse certificate. Never claims more than it checked.
ContractibilityReport contractibility(const SimplicialComplex& k);

}  // namespace polyfaces
