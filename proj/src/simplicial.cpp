#include "polyfaces/simplicial.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace polyfaces {

SimplicialComplex SimplicialComplex::from_facets(std::vector<std::string> vertex_labels,
                                                 const std::vector<Simplex>& facets) {
  std::set<Simplex> all;
  std::function<void(const Simplex&)> close = [&](const Simplex& s) {
    if (s.empty() || all.count(s)) return;
    all.insert(s);
    if (s.size() == 1) return;
    for (std::size_t i = 0; i < s.size(); ++i) {
      Simplex f;
      for (std::size_t j = 0; j < s.size(); ++j)
        if (j != i) f.push_back(s[j]);
      close(f);
    }
  };
  for (auto s : facets) {
    std::sort(s.begin(), s.end());
    close(s);
  }
  SimplicialComplex k;
  k.vertex_labels_ = std::move(vertex_labels);
  for (const auto& s : all) {
    int d = static_cast<int>(s.size()) - 1;
    if (d >= static_cast<int>(k.by_dim_.size())) k.by_dim_.resize(d + 1);
    k.by_dim_[d].push_back(s);
  }
  for (auto& level : k.by_dim_) std::sort(level.begin(), level.end());
  return k;
}

std::size_t SimplicialComplex::size() const {
  std::size_t total = 0;
  for (const auto& level : by_dim_) total += level.size();
  return total;
}

std::vector<std::size_t> SimplicialComplex::f_vector() const {
  std::vector<std::size_t> f;
  for (const auto& level : by_dim_) f.push_back(level.size());
  return f;
}

long long SimplicialComplex::euler_characteristic() const {
  long long chi = 0;
  int sign = 1;
  for (const auto& level : by_dim_) {
    chi += sign * static_cast<long long>(level.size());
    sign = -sign;
  }
  return chi;
}

bool SimplicialComplex::closed_under_subsets() const {
  std::set<Simplex> all;
  for (const auto& level : by_dim_)
    for (const auto& s : level) all.insert(s);
  for (const auto& s : all) {
    if (s.size() == 1) continue;
    for (std::size_t i = 0; i < s.size(); ++i) {
      Simplex f;
      for (std::size_t j = 0; j < s.size(); ++j)
        if (j != i) f.push_back(s[j]);
      if (!all.count(f)) return false;
    }
  }
  return true;
}

SimplicialComplex order_complex(const FinitePoset& p) {
  int n = p.size();
  // strictly-greater adjacency, ordered by index for deterministic output
  std::vector<std::vector<int>> above(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && p.leq(i, j)) above[i].push_back(j);

  SimplicialComplex k;
  k.vertex_labels_ = p.elements();
  Simplex chain;
  std::function<void(int)> extend = [&](int last) {
    int d = static_cast<int>(chain.size()) - 1;
    if (d >= static_cast<int>(k.by_dim_.size())) k.by_dim_.resize(d + 1);
    Simplex sorted = chain;
    std::sort(sorted.begin(), sorted.end());
    k.by_dim_[d].push_back(std::move(sorted));
    for (int nxt : above[last]) {
      chain.push_back(nxt);
      extend(nxt);
      chain.pop_back();
    }
  };
  for (int i = 0; i < n; ++i) {
    chain = {i};
    extend(i);
  }
  for (auto& level : k.by_dim_) std::sort(level.begin(), level.end());
  return k;
}

}  // namespace polyfaces
