#include "polyfaces/charts.hpp"

#include <cmath>
#include <functional>
#include <sstream>

namespace polyfaces {

namespace {

std::string triple_key(const Triple& t) {
  return std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]);
}

nlohmann::json rational_json(const Rational& v) {
  return nlohmann::json{{"num", boost::multiprecision::numerator(v).str()},
                        {"den", boost::multiprecision::denominator(v).str()}};
}

nlohmann::json extended_json(const ExtendedQ& v) {
  if (v.is_infinite()) return "inf";
  return rational_json(v.value());
}

}  // namespace

Configuration::Configuration(std::vector<Rational> t) : t_(std::move(t)) {
  Rational prev(0);
  for (const auto& x : t_) {
    if (!(x > prev)) throw PreconditionError("configuration must satisfy 0 < t_1 < ... < t_n < 1");
    prev = x;
  }
  if (!t_.empty() && !(t_.back() < 1))
    throw PreconditionError("configuration must satisfy t_n < 1");
}

Configuration Configuration::parse(const std::string& text) {
  std::vector<Rational> t;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string piece =
        text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    auto l = piece.find_first_not_of(' ');
    if (l != std::string::npos) {
      auto r = piece.find_last_not_of(' ');
      t.push_back(parse_rational(piece.substr(l, r - l + 1)));
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return Configuration(std::move(t));
}

std::vector<Rational> Configuration::padded() const {
  std::vector<Rational> ts;
  ts.emplace_back(0);
  ts.insert(ts.end(), t_.begin(), t_.end());
  ts.emplace_back(1);
  return ts;
}

// ---- chart tables -------------------------------------------------------------------

AlphaTable chart_alpha(const Configuration& c) {
  AlphaTable out;
  out.n = c.n();
  auto ts = c.padded();
  int m = c.n() + 2;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      for (int k = j + 1; k < m; ++k)
        out.s[{i, j, k}] = (ts[j] - ts[i]) / (ts[k] - ts[i]);
  return out;
}

BetaPoint chart_beta(const Configuration& c) {
  BetaPoint out;
  out.n = c.n();
  std::vector<double> ts(c.n() + 1);
  ts[0] = 0.0;
  out.t.resize(c.n());
  for (int i = 0; i < c.n(); ++i) {
    out.t[i] = static_cast<double>(c.t()[i]);
    ts[i + 1] = out.t[i];
  }
  int m = c.n() + 1;
  for (int k = 0; k < m; ++k)
    for (int l = 0; l < m; ++l)
      for (int q = 0; q < m; ++q) {
        if (k == l || l == q || k == q) continue;
        out.stilde[{k, l, q}] =
            std::abs(std::sin(M_PI * (ts[l] - ts[k])) / std::sin(M_PI * (ts[q] - ts[k])));
      }
  return out;
}

GammaTable chart_gamma(const Configuration& c) {
  GammaTable out;
  out.n = c.n();
  out.s = chart_alpha(c).s;
  auto ts = c.padded();
  for (int i = 1; i <= c.n(); ++i)
    for (int j = i + 1; j <= c.n(); ++j)
      out.r[{i, j}] = ExtendedQ(ts[i] / (1 - ts[j]));
  return out;
}

DeltaTable chart_delta(const Configuration& c) {
  DeltaTable out;
  out.n = c.n();
  out.s = chart_alpha(c).s;
  auto ts = c.padded();
  int m = c.n() + 2;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      for (int k = j + 1; k < m; ++k)
        for (int l = k + 1; l < m; ++l)
          out.r[{i, j, k, l}] = ExtendedQ((ts[j] - ts[i]) / (ts[l] - ts[k]));
  return out;
}

nlohmann::json AlphaTable::to_json() const {
  nlohmann::json s_json = nlohmann::json::object();
  for (const auto& [key, v] : s) s_json[triple_key(key)] = rational_json(v);
  return nlohmann::json{{"kind", "alpha"}, {"n", n}, {"s", s_json}};
}

nlohmann::json GammaTable::to_json() const {
  nlohmann::json s_json = nlohmann::json::object();
  for (const auto& [key, v] : s) s_json[triple_key(key)] = rational_json(v);
  nlohmann::json r_json = nlohmann::json::object();
  for (const auto& [key, v] : r)
    r_json[std::to_string(key[0]) + "," + std::to_string(key[1])] = extended_json(v);
  return nlohmann::json{{"kind", "gamma"}, {"n", n}, {"s", s_json}, {"r", r_json}};
}

nlohmann::json DeltaTable::to_json() const {
  nlohmann::json s_json = nlohmann::json::object();
  for (const auto& [key, v] : s) s_json[triple_key(key)] = rational_json(v);
  nlohmann::json r_json = nlohmann::json::object();
  for (const auto& [key, v] : r)
    r_json[std::to_string(key[0]) + "," + std::to_string(key[1]) + "," +
           std::to_string(key[2]) + "," + std::to_string(key[3])] = extended_json(v);
  return nlohmann::json{{"kind", "delta"}, {"n", n}, {"s", s_json}, {"r", r_json}};
}

nlohmann::json BetaPoint::to_json() const {
  nlohmann::json s_json = nlohmann::json::object();
  for (const auto& [key, v] : stilde)
    s_json[triple_key(key)] = std::isinf(v) ? nlohmann::json("inf") : nlohmann::json(v);
  return nlohmann::json{{"kind", "beta"}, {"n", n}, {"t", t}, {"s_tilde", s_json}};
}

// ---- permuted s values ---------------------------------------------------------------

SVariants s_variants(const Rational& s) {
  if (s < 0 || s > 1) throw PreconditionError("s_variants needs s in [0,1]");
  SVariants v;
  ExtendedQ sv{s}, one_minus{Rational(1 - s)};
  v.ikj = sv.reciprocal();
  v.kji = one_minus;
  v.kij = one_minus.reciprocal();
  // s/(1-s) and (1-s)/s with the 0/0-free limit reading at the endpoints
  if (s == 1)
    v.jik = ExtendedQ::infinity();
  else
    v.jik = ExtendedQ(s / (1 - s));
  if (s == 0)
    v.jki = ExtendedQ::infinity();
  else
    v.jki = ExtendedQ((1 - s) / s);
  return v;
}

// ---- the blend projection ---------------------------------------------------------------

BlendConfig BlendConfig::standard() {
  auto psi = [](double x) { return x > 0 ? std::exp(-1.0 / x) : 0.0; };
  auto mu2 = [psi](double u) {
    double a = psi(u - 1.0 / 3.0), b = psi(0.5 - u);
    return a / (a + b);
  };
  BlendConfig cfg;
  cfg.mu2 = mu2;
  cfg.mu1 = [mu2](double u) { return 1.0 - mu2(u); };
  return cfg;
}

BlendConfig BlendConfig::alternative() {
  auto psi = [](double x) { return x > 0 ? std::exp(-1.0 / (x * x)) : 0.0; };
  auto mu2 = [psi](double u) {
    double a = psi(u - 1.0 / 3.0), b = psi(0.5 - u);
    return a / (a + b);
  };
  BlendConfig cfg;
  cfg.mu2 = mu2;
  cfg.mu1 = [mu2](double u) { return 1.0 - mu2(u); };
  return cfg;
}

namespace {

// sin(pi x)/x extended by continuity at 0
double sinc_pi(double x) { return x == 0.0 ? M_PI : std::sin(M_PI * x) / x; }

double h01(double x) {  // [0,inf] -> [0,1]
  if (std::isinf(x)) return 1.0;
  return x / (1.0 + x);
}

double h01_inv(double y) {
  if (y >= 1.0) return std::numeric_limits<double>::infinity();
  return y / (1.0 - y);
}

}  // namespace

AlphaTableD blend_projection(const BetaPoint& b, const BlendConfig& cfg) {
  AlphaTableD out;
  out.n = b.n;
  int m = b.n + 2;
  std::vector<double> ts(m);
  ts[0] = 0.0;
  for (int i = 0; i < b.n; ++i) ts[i + 1] = b.t[i];
  ts[m - 1] = 1.0;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      for (int k = j + 1; k < m; ++k) {
        double u = ts[k] - ts[i];
        double m2 = cfg.mu2(u);
        double m1 = 1.0 - m2;
        double y = 0.0;
        if (m2 > 0.0) {
          double f = (ts[j] - ts[i]) / u;  // u > 1/3 on the support of mu2
          y += m2 * h01(f);
        }
        if (m1 > 0.0) {
          // the circle identifies index n+1 with the marked point 0; the
          // triple (0, j, n+1) never reaches this branch since its span is 1
          int kk = k == m - 1 ? 0 : k;
          double stilde = b.stilde.at({i, j, kk});
          double g = stilde * sinc_pi(u) / sinc_pi(ts[j] - ts[i]);
          y += m1 * h01(g);
        }
        out.s[{i, j, k}] = h01_inv(y);
      }
  return out;
}

// ---- split projection and its segment fibers ------------------------------------------------

std::pair<AlphaTable, AlphaTable> split_projection(const AlphaTable& p, int r, int l) {
  if (r < 1 || l < 1 || p.n != r + l - 1)
    throw PreconditionError("split_projection needs r, l >= 1 with n = r + l - 1");
  AlphaTable left, right;
  left.n = r - 1;
  right.n = l - 1;
  for (int i = 0; i <= r; ++i)
    for (int j = i + 1; j <= r; ++j)
      for (int k = j + 1; k <= r; ++k) left.s[{i, j, k}] = p.s.at({i, j, k});
  for (int i = 0; i <= l; ++i)
    for (int j = i + 1; j <= l; ++j)
      for (int k = j + 1; k <= l; ++k) right.s[{i, j, k}] = p.s.at({i + r, j + r, k + r});
  return {std::move(left), std::move(right)};
}

AlphaTable tau_fiber_point(const Configuration& left, const Configuration& right,
                           const Rational& tau, int r, int l) {
  if (left.n() != r - 1 || right.n() != l - 1)
    throw PreconditionError("tau_fiber_point: factor dimensions must be r-1 and l-1");
  if (tau < 0 || tau > 1) throw PreconditionError("tau must lie in [0,1]");

  if (tau > 0 && tau < 1) {
    std::vector<Rational> t;
    for (const auto& u : left.t()) t.push_back(tau * u);
    t.push_back(tau);
    for (const auto& v : right.t()) t.push_back(tau + (1 - tau) * v);
    return chart_alpha(Configuration(std::move(t)));
  }

  // tau = 0 or 1: the configuration degenerates; take the exact limit along
  // the segment parameterized by e
  std::vector<LaurentPoly> coords;
  LaurentPoly e = LaurentPoly::eps(1);
  LaurentPoly one{Rational(1)};
  if (tau == 0) {
    for (const auto& u : left.t()) coords.push_back(LaurentPoly::eps(1, u));
    coords.push_back(e);
    for (const auto& v : right.t())
      coords.push_back(e + (one - e) * LaurentPoly(v));
  } else {
    for (const auto& u : left.t()) coords.push_back((one - e) * LaurentPoly(u));
    coords.push_back(one - e);
    for (const auto& v : right.t())
      coords.push_back((one - e) + e * LaurentPoly(v));
  }
  return path_limit_alpha(EpsilonPath(std::move(coords)));
}

// ---- nadirs -------------------------------------------------------------------------------

namespace {

// internal-ancestor chains per leaf slot (walk order)
std::vector<std::vector<int>> leaf_ancestor_chains(const TreeNode& root) {
  std::vector<std::vector<int>> chains;
  std::vector<int> stack;
  int counter = 0;
  std::function<void(const TreeNode&)> rec = [&](const TreeNode& t) {
    if (t.is_leaf()) {
      chains.push_back(stack);
      return;
    }
    stack.push_back(counter++);
    for (const auto& ch : t.children) rec(ch);
    stack.pop_back();
  };
  rec(root);
  return chains;
}

int chain_nadir(const std::vector<int>& a, const std::vector<int>& b) {
  std::size_t k = 0;
  while (k < a.size() && k < b.size() && a[k] == b[k]) ++k;
  return a[k - 1];
}

}  // namespace

int nadir(const PlanarTree& t, int i, int j) {
  if (i == j) throw PreconditionError("nadir needs distinct leaves");
  if (i < 0 || j < 0 || i > t.n() + 1 || j > t.n() + 1)
    throw PreconditionError("leaf label out of range");
  auto chains = leaf_ancestor_chains(t.root());
  return chain_nadir(chains[i], chains[j]);
}

int nadir(const Fan& t, int i, int j) {
  if (i == j) throw PreconditionError("nadir needs distinct leaves");
  if (i < 0 || j < 0 || i > t.n() || j > t.n())
    throw PreconditionError("fan leaf label out of range");
  auto chains = leaf_ancestor_chains(t.root());
  // walk position of label x: the star is first in cyclic order; recover the
  // walk slot from the label sequence of the whole fan
  auto seqs = vertex_leaf_seqs(t.root(), true);
  const auto& all = seqs[0];
  auto slot = [&](int label) {
    for (std::size_t s = 0; s < all.size(); ++s)
      if (all[s] == label) return static_cast<int>(s);
    throw PreconditionError("label not found");
  };
  return chain_nadir(chains[slot(i)], chains[slot(j)]);
}

namespace {

bool strictly_above(const std::vector<int>& parents, int a, int b) {
  // is a strictly deeper than b (b a proper ancestor of a)?
  while (a != -1) {
    a = parents[a];
    if (a == b) return true;
  }
  return false;
}

}  // namespace

bool closer(const PlanarTree& t, int i, int j, int k) {
  auto parents = internal_parents(t.root());
  return strictly_above(parents, nadir(t, i, j), nadir(t, j, k));
}

bool closer(const Fan& t, int i, int j, int k) {
  auto parents = internal_parents(t.root());
  return strictly_above(parents, nadir(t, i, j), nadir(t, j, k));
}

// ---- face inclusions --------------------------------------------------------------------------

namespace {

// per internal vertex, the local coordinate of each child edge; planar
// vertices pin the first child at 0 and the last at 1, the fan root pins
// only its first (trunk) edge at 0
std::vector<std::vector<Rational>> local_edge_coords(const TreeNode& root, bool fan_root,
                                                     const std::vector<Configuration>& local) {
  auto parents = internal_parents(root);
  if (local.size() != parents.size())
    throw PreconditionError("face inclusion needs one local configuration per internal vertex");
  std::vector<std::vector<Rational>> coords(parents.size());
  int counter = 0;
  std::function<void(const TreeNode&, bool)> rec = [&](const TreeNode& t, bool is_root) {
    if (t.is_leaf()) return;
    int my = counter++;
    int deg = static_cast<int>(t.children.size());
    const auto& cfg = local[my];
    std::vector<Rational> c;
    if (is_root && fan_root) {
      if (cfg.n() != deg - 1)
        throw PreconditionError("fan root local data must have |root|-1 values");
      c.emplace_back(0);
      for (const auto& x : cfg.t()) c.push_back(x);
    } else {
      if (cfg.n() != deg - 2)
        throw PreconditionError("local data for a vertex of degree " + std::to_string(deg) +
                                " must have " + std::to_string(deg - 2) + " values");
      c.emplace_back(0);
      for (const auto& x : cfg.t()) c.push_back(x);
      c.emplace_back(1);
    }
    coords[my] = std::move(c);
    for (const auto& ch : t.children) rec(ch, false);
  };
  rec(root, true);
  return coords;
}

// child index at vertex v whose subtree contains the leaf at walk slot
std::vector<std::vector<int>> leaf_child_edges(const TreeNode& root) {
  // for each leaf slot, the child index taken at each internal vertex along
  // its ancestor chain
  std::vector<std::vector<int>> out;
  std::vector<int> edges;
  std::function<void(const TreeNode&)> rec = [&](const TreeNode& t) {
    if (t.is_leaf()) {
      out.push_back(edges);
      return;
    }
    for (std::size_t c = 0; c < t.children.size(); ++c) {
      edges.push_back(static_cast<int>(c));
      rec(t.children[c]);
      edges.pop_back();
    }
  };
  rec(root);
  return out;
}

}  // namespace

AlphaTable include_face(const PlanarTree& t, const std::vector<Configuration>& local) {
  auto coords = local_edge_coords(t.root(), false, local);
  auto chains = leaf_ancestor_chains(t.root());
  auto edges = leaf_child_edges(t.root());
  AlphaTable out;
  out.n = t.n();
  auto depth_of = [](const std::vector<int>& chain, int v) {
    return static_cast<int>(std::find(chain.begin(), chain.end(), v) - chain.begin());
  };
  int m = t.n() + 2;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      for (int k = j + 1; k < m; ++k) {
        int nij = chain_nadir(chains[i], chains[j]);
        int njk = chain_nadir(chains[j], chains[k]);
        Rational v;
        if (nij != njk) {
          // both nadirs are ancestors of j; the deeper one wins: i,j closer
          // gives 0, j,k closer gives 1
          v = depth_of(chains[j], nij) > depth_of(chains[j], njk) ? Rational(0) : Rational(1);
        } else {
          const auto& cv = coords[nij];
          Rational ci = cv[edges[i][depth_of(chains[i], nij)]];
          Rational cj = cv[edges[j][depth_of(chains[j], nij)]];
          Rational ck = cv[edges[k][depth_of(chains[k], nij)]];
          v = (cj - ci) / (ck - ci);
        }
        out.s[{i, j, k}] = v;
      }
  return out;
}

BetaPoint include_face(const Fan& t, const std::vector<Configuration>& local) {
  auto coords = local_edge_coords(t.root(), true, local);
  auto chains = leaf_ancestor_chains(t.root());
  auto edges = leaf_child_edges(t.root());
  auto parents = internal_parents(t.root());
  auto seqs = vertex_leaf_seqs(t.root(), true);
  const auto& all = seqs[0];
  std::vector<int> slot_of(t.n() + 1);
  for (std::size_t s = 0; s < all.size(); ++s) slot_of[all[s]] = static_cast<int>(s);

  BetaPoint out;
  out.n = t.n();
  out.t.resize(t.n());
  for (int i = 1; i <= t.n(); ++i) {
    // t_i is the root-edge coordinate toward leaf i
    out.t[i - 1] = static_cast<double>(coords[0][edges[slot_of[i]][0]]);
  }

  auto depth_of = [&](const std::vector<int>& chain, int v) {
    return static_cast<int>(std::find(chain.begin(), chain.end(), v) - chain.begin());
  };

  int m = t.n() + 1;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k) {
        if (i == j || j == k || i == k) continue;
        const auto& ci = chains[slot_of[i]];
        const auto& cj = chains[slot_of[j]];
        const auto& ck = chains[slot_of[k]];
        int nij = chain_nadir(ci, cj);
        int njk = chain_nadir(cj, ck);
        double v;
        if (nij != njk) {
          // both are ancestors of j, so they are comparable
          v = depth_of(cj, nij) > depth_of(cj, njk) ? 0.0 : 1.0;
        } else {
          int nik = chain_nadir(ci, ck);
          if (nik != nij) {
            // with n(i,j) = n(j,k), the third nadir can only be deeper
            v = std::numeric_limits<double>::infinity();  // i,k closer than j
          } else {
            int v0 = nij;
            const auto& cv = coords[v0];
            double xi = static_cast<double>(cv[edges[slot_of[i]][depth_of(ci, v0)]]);
            double xj = static_cast<double>(cv[edges[slot_of[j]][depth_of(cj, v0)]]);
            double xk = static_cast<double>(cv[edges[slot_of[k]][depth_of(ck, v0)]]);
            if (v0 == 0) {
              // root vertex: the sine table of its cyclohedron factor
              v = std::abs(std::sin(M_PI * (xj - xi)) / std::sin(M_PI * (xk - xi)));
            } else {
              // interior vertex: the ratio table, via norms for any index order
              v = std::abs(xj - xi) / std::abs(xk - xi);
            }
          }
        }
        out.stilde[{i, j, k}] = v;
      }
  return out;
}

// ---- limits along paths -----------------------------------------------------------------------

AlphaTable path_limit_alpha(const EpsilonPath& p) {
  AlphaTable out;
  out.n = p.n();
  auto ts = p.padded();
  int m = p.n() + 2;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      for (int k = j + 1; k < m; ++k) {
        ExtendedQ v = ratio_limit(ts[j] - ts[i], ts[k] - ts[i]);
        if (v.is_infinite() || v.value() > 1)
          throw InvariantError("alpha limits lie in [0,1]", "path is not interior");
        out.s[{i, j, k}] = v.value();
      }
  return out;
}

GammaTable path_limit_gamma(const EpsilonPath& p) {
  GammaTable out;
  out.n = p.n();
  out.s = path_limit_alpha(p).s;
  auto ts = p.padded();
  LaurentPoly one{Rational(1)};
  for (int i = 1; i <= p.n(); ++i)
    for (int j = i + 1; j <= p.n(); ++j)
      out.r[{i, j}] = ratio_limit(ts[i], one - ts[j]);
  return out;
}

DeltaTable path_limit_delta(const EpsilonPath& p) {
  DeltaTable out;
  out.n = p.n();
  out.s = path_limit_alpha(p).s;
  auto ts = p.padded();
  int m = p.n() + 2;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      for (int k = j + 1; k < m; ++k)
        for (int l = k + 1; l < m; ++l)
          out.r[{i, j, k, l}] = ratio_limit(ts[j] - ts[i], ts[l] - ts[k]);
  return out;
}

}  // namespace polyfaces
