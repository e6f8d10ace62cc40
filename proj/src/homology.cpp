#include "polyfaces/homology.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace polyfaces {

namespace {

// position of each simplex within its dimension level
std::map<Simplex, int> index_level(const std::vector<Simplex>& level) {
  std::map<Simplex, int> idx;
  for (std::size_t i = 0; i < level.size(); ++i) idx[level[i]] = static_cast<int>(i);
  return idx;
}

}  // namespace

ChainComplex::ChainComplex(const SimplicialComplex& k) {
  if (k.empty()) throw PreconditionError("chain complex of an empty complex");
  int d = k.dim();
  sizes_.resize(d + 1);
  boundary_.resize(d + 1);
  for (int q = 0; q <= d; ++q) sizes_[q] = k.simplices(q).size();

  // dimension 0: augmentation row
  boundary_[0].assign(sizes_[0], {{0, 1}});

  for (int q = 1; q <= d; ++q) {
    auto idx = index_level(k.simplices(q - 1));
    boundary_[q].reserve(sizes_[q]);
    for (const auto& s : k.simplices(q)) {
      std::vector<std::pair<int, int>> col;
      int sign = 1;
      for (std::size_t i = 0; i < s.size(); ++i) {
        Simplex f;
        for (std::size_t j = 0; j < s.size(); ++j)
          if (j != i) f.push_back(s[j]);
        auto it = idx.find(f);
        if (it == idx.end()) throw InvariantError("complex must be closed under subsets", "");
        col.emplace_back(it->second, sign);
        sign = -sign;
      }
      std::sort(col.begin(), col.end());
      boundary_[q].push_back(std::move(col));
    }
  }

  // d(d(x)) = 0 over the integers
  for (int q = 2; q <= d; ++q) {
    for (const auto& col : boundary_[q]) {
      std::map<int, long long> acc;
      for (auto [row, c] : col)
        for (auto [row2, c2] : boundary_[q - 1][row]) acc[row2] += static_cast<long long>(c) * c2;
      for (auto& [row2, v] : acc)
        if (v != 0) throw InvariantError("boundary of boundary must vanish", "");
    }
  }
}

namespace {

// rank by left-to-right column reduction, pairing each column with the
// lowest (largest-index) row it can claim
long rank_f2(const std::vector<std::vector<std::pair<int, int>>>& cols, std::size_t rows) {
  if (rows == 0) return 0;
  std::vector<std::vector<int>> work;
  work.reserve(cols.size());
  for (const auto& c : cols) {
    std::vector<int> v;
    for (auto [row, coef] : c)
      if (coef % 2 != 0) v.push_back(row);
    work.push_back(std::move(v));
  }
  std::vector<int> owner(rows, -1);
  long rank = 0;
  std::vector<int> merged;
  for (std::size_t j = 0; j < work.size(); ++j) {
    auto& col = work[j];
    while (!col.empty()) {
      int low = col.back();
      int o = owner[low];
      if (o < 0) {
        owner[low] = static_cast<int>(j);
        ++rank;
        break;
      }
      // col ^= work[o] (symmetric difference of sorted lists)
      merged.clear();
      std::set_symmetric_difference(col.begin(), col.end(), work[o].begin(), work[o].end(),
                                    std::back_inserter(merged));
      col.swap(merged);
    }
  }
  return rank;
}

long rank_q(const std::vector<std::vector<std::pair<int, int>>>& cols, std::size_t rows) {
  if (rows == 0) return 0;
  using Col = std::vector<std::pair<int, Rational>>;
  std::vector<Col> work;
  work.reserve(cols.size());
  for (const auto& c : cols) {
    Col v;
    for (auto [row, coef] : c) v.emplace_back(row, Rational(coef));
    work.push_back(std::move(v));
  }
  std::vector<int> owner(rows, -1);
  long rank = 0;
  Col merged;
  for (std::size_t j = 0; j < work.size(); ++j) {
    auto& col = work[j];
    while (!col.empty()) {
      int low = col.back().first;
      int o = owner[low];
      if (o < 0) {
        owner[low] = static_cast<int>(j);
        ++rank;
        break;
      }
      const Col& other = work[o];
      Rational factor = col.back().second / other.back().second;
      // col -= factor * other
      merged.clear();
      std::size_t a = 0, b = 0;
      while (a < col.size() || b < other.size()) {
        if (b == other.size() || (a < col.size() && col[a].first < other[b].first)) {
          merged.push_back(col[a++]);
        } else if (a == col.size() || other[b].first < col[a].first) {
          merged.emplace_back(other[b].first, -factor * other[b].second);
          ++b;
        } else {
          Rational v = col[a].second - factor * other[b].second;
          if (v != 0) merged.emplace_back(col[a].first, v);
          ++a;
          ++b;
        }
      }
      col.swap(merged);
    }
  }
  return rank;
}

}  // namespace

long ChainComplex::rank(int d, Coeffs c) const {
  if (d < 0 || d > dim()) return 0;
  std::size_t rows = d == 0 ? 1 : sizes_[d - 1];
  return c == Coeffs::f2 ? rank_f2(boundary_[d], rows) : rank_q(boundary_[d], rows);
}

std::vector<long> homology_ranks(const SimplicialComplex& k, Coeffs c) {
  if (k.empty()) throw PreconditionError("homology of an empty complex");
  ChainComplex cc(k);
  int d = cc.dim();
  std::vector<long> ranks(d + 2, 0);
  for (int q = 0; q <= d; ++q) ranks[q] = cc.rank(q, c);
  std::vector<long> betti(d + 1, 0);
  for (int q = 0; q <= d; ++q)
    betti[q] = static_cast<long>(cc.size(q)) - ranks[q] - ranks[q + 1];
  return betti;
}

std::optional<CollapseCertificate> greedy_collapse(const SimplicialComplex& k) {
  if (k.empty()) return std::nullopt;
  // live simplices with coface counts; free faces ordered by (dim, lex)
  std::set<Simplex> live;
  std::map<Simplex, int> coface_count;
  for (int d = 0; d <= k.dim(); ++d)
    for (const auto& s : k.simplices(d)) {
      live.insert(s);
      coface_count[s] = 0;
    }
  std::map<Simplex, std::vector<Simplex>> cofaces;
  for (int d = 1; d <= k.dim(); ++d)
    for (const auto& s : k.simplices(d))
      for (std::size_t i = 0; i < s.size(); ++i) {
        Simplex f;
        for (std::size_t j = 0; j < s.size(); ++j)
          if (j != i) f.push_back(s[j]);
        ++coface_count[f];
        cofaces[f].push_back(s);
      }

  auto simplex_key = [](const Simplex& s) {
    return std::make_pair(s.size(), s);
  };
  using Key = std::pair<std::size_t, Simplex>;
  std::set<Key> free_faces;
  for (const auto& s : live)
    if (coface_count[s] == 1) free_faces.insert(simplex_key(s));

  auto unique_live_coface = [&](const Simplex& f) -> Simplex {
    for (const auto& c : cofaces[f])
      if (live.count(c)) return c;
    throw InvariantError("free face bookkeeping", "no live coface");
  };

  CollapseCertificate cert;
  auto remove = [&](const Simplex& s) {
    live.erase(s);
    free_faces.erase(simplex_key(s));
    if (s.size() > 1) {
      for (std::size_t i = 0; i < s.size(); ++i) {
        Simplex f;
        for (std::size_t j = 0; j < s.size(); ++j)
          if (j != i) f.push_back(s[j]);
        if (!live.count(f)) continue;
        int cc = --coface_count[f];
        if (cc == 1)
          free_faces.insert(simplex_key(f));
        else
          free_faces.erase(simplex_key(f));
      }
    }
  };

  while (live.size() > 1) {
    if (free_faces.empty()) return std::nullopt;
    Simplex f = free_faces.begin()->second;
    Simplex c = unique_live_coface(f);
    remove(c);
    remove(f);
    cert.steps.emplace_back(f, c);
  }
  if (live.begin()->size() != 1) return std::nullopt;
  cert.final_vertex = *live.begin();
  return cert;
}

ContractibilityReport contractibility(const SimplicialComplex& k) {
  if (k.empty()) throw PreconditionError("contractibility of an empty complex");
  ContractibilityReport rep;
  auto all_zero = [](const std::vector<long>& v) {
    for (long x : v)
      if (x != 0) return false;
    return true;
  };
  rep.acyclic_q = all_zero(homology_ranks(k, Coeffs::rationals));
  rep.acyclic_f2 = all_zero(homology_ranks(k, Coeffs::f2));
  rep.collapse = greedy_collapse(k);
  if (rep.collapse && !(rep.acyclic_q && rep.acyclic_f2))
    throw InvariantError("collapsible implies acyclic", "homology engine disagrees with collapse");
  return rep;
}

}  // namespace polyfaces
