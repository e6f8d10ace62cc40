#include "polyfaces/topology.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace polyfaces {

FinitePoset comma_poset(const PosetMap& f, int q) {
  if (q < 0 || q >= f.target->size()) throw PreconditionError("comma_poset: q not in target");
  return f.source->filtered([&](int p) { return f.target->leq(q, f.assignment[p]); });
}

nlohmann::json CofinalityReport::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& e : entries) {
    arr.push_back({{"element", e.element},
                   {"betti_Q", e.betti_q},
                   {"betti_F2", e.betti_f2},
                   {"collapsible", e.collapsible}});
  }
  return nlohmann::json{{"targets", arr}, {"all_acyclic", all_acyclic}};
}

CofinalityReport cofinality_report(const PosetMap& f) {
  CofinalityReport rep;
  rep.all_acyclic = true;
  for (int q = 0; q < f.target->size(); ++q) {
    auto complex = order_complex(comma_poset(f, q));
    auto r = contractibility(complex);
    CofinalityEntry e;
    e.element = f.target->element(q);
    e.betti_q = homology_ranks(complex, Coeffs::rationals);
    e.betti_f2 = homology_ranks(complex, Coeffs::f2);
    e.collapsible = r.collapsible();
    rep.all_acyclic = rep.all_acyclic && r.acyclic_q && r.acyclic_f2;
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

FinitePoset prism_fiber_complex(const PosetMap& f, const std::vector<int>& chain) {
  if (chain.empty()) throw PreconditionError("prism_fiber_complex: empty chain");
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    if (!(f.target->leq(chain[i], chain[i + 1]) && chain[i] != chain[i + 1]))
      throw PreconditionError("prism_fiber_complex: chain must be strictly increasing");
  }
  int k = static_cast<int>(chain.size());
  std::vector<int> level_of(f.target->size(), -1);
  for (int i = 0; i < k; ++i) level_of[chain[i]] = i;

  // candidate source elements ordered by (level, linear extension of the
  // source order); any source chain is then ascending in candidate position
  std::vector<int> downset_size(f.source->size(), 0);
  for (int p = 0; p < f.source->size(); ++p)
    for (int q2 = 0; q2 < f.source->size(); ++q2)
      if (f.source->leq(q2, p)) ++downset_size[p];
  std::vector<int> cands;
  for (int lv = 0; lv < k; ++lv) {
    std::vector<int> level;
    for (int p = 0; p < f.source->size(); ++p)
      if (f.assignment[p] == chain[lv]) level.push_back(p);
    std::sort(level.begin(), level.end(), [&](int a, int b) {
      return std::make_pair(downset_size[a], a) < std::make_pair(downset_size[b], b);
    });
    cands.insert(cands.end(), level.begin(), level.end());
  }

  // enumerate chains over the candidates that hit every level; cells hold
  // ascending candidate positions
  std::vector<std::vector<int>> cells;
  std::vector<int> cur;
  std::function<void(std::size_t, int)> extend = [&](std::size_t start, int levels_hit) {
    for (std::size_t ci = start; ci < cands.size(); ++ci) {
      int p = cands[ci];
      if (!cur.empty()) {
        int prev = cands[cur.back()];
        if (!(f.source->leq(prev, p) && prev != p)) continue;
      }
      int hit = levels_hit;
      if (cur.empty() || level_of[f.assignment[cands[cur.back()]]] != level_of[f.assignment[p]])
        ++hit;
      cur.push_back(static_cast<int>(ci));
      if (hit == k) cells.push_back(cur);
      extend(ci + 1, hit);
      cur.pop_back();
    }
  };
  extend(0, 0);

  std::vector<std::string> keys;
  keys.reserve(cells.size());
  for (const auto& cell : cells) {
    std::ostringstream os;
    for (std::size_t i = 0; i < cell.size(); ++i) {
      if (i) os << " < ";
      os << f.source->element(cands[cell[i]]);
    }
    keys.push_back(os.str());
  }
  return FinitePoset(std::move(keys), [&](int a, int b) {
    // cell a <= cell b iff a is a subchain of b
    return std::includes(cells[b].begin(), cells[b].end(), cells[a].begin(), cells[a].end());
  });
}

}  // namespace polyfaces
