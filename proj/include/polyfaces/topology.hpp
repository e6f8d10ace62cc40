#pragma once

// Comma posets of monotone maps, left-cofinality evidence, and the prismatic
// decomposition of fibers of realizations over interior points of a chain's
// simplex.

#include <nlohmann/json.hpp>

#include <vector>

#include "polyfaces/homology.hpp"
#include "polyfaces/posets.hpp"

namespace polyfaces {

// {p in source : F(p) >= q}, the comma category F|q for poset maps
FinitePoset comma_poset(const PosetMap& f, int q);

struct CofinalityEntry {
  std::string element;
  std::vector<long> betti_q;
  std::vector<long> betti_f2;
  bool collapsible;
};

struct CofinalityReport {
  std::vector<CofinalityEntry> entries;  // one per target element
  bool all_acyclic;
  nlohmann::json to_json() const;
};

// contractibility(order_complex(comma_poset(f, q))) for every target q
CofinalityReport cofinality_report(const PosetMap& f);

// Cell poset of the fiber of |F| over an interior point of the simplex
// spanned by a strict chain Y_0 < ... < Y_k of the target. Cells are chains
// in the source whose image visits exactly the chain's elements, at least
// once each; the order is subchain inclusion (which must keep every level
// represented, and does since all cells hit every level).
FinitePoset prism_fiber_complex(const PosetMap& f, const std::vector<int>& chain);

}  // namespace polyfaces
