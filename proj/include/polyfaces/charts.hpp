#pragma once

// Configuration-space charts for the three compactifications: the ratio
// tables of the associahedron, the sine tables of the cyclohedron, the two
// leveled variants, the blend projection between them, face inclusions, and
// the split projection with its segment fibers.

#include <nlohmann/json.hpp>

#include <array>
#include <functional>
#include <map>
#include <vector>

#include "polyfaces/laurent.hpp"
#include "polyfaces/rational.hpp"
#include "polyfaces/trees.hpp"

namespace polyfaces {

using Triple = std::array<int, 3>;
using IndexPair = std::array<int, 2>;
using Quad = std::array<int, 4>;

// interior configuration 0 < t_1 < ... < t_n < 1
class Configuration {
public:
  explicit Configuration(std::vector<Rational> t);
  static Configuration parse(const std::string& text);  // "1/4,1/2"

  int n() const { return static_cast<int>(t_.size()); }
  const std::vector<Rational>& t() const { return t_; }
  // with t_0 = 0 and t_{n+1} = 1
  std::vector<Rational> padded() const;

private:
  std::vector<Rational> t_;
};

// s_{ijk} tables over 0 <= i < j < k <= n+1, exact values in [0,1]
struct AlphaTable {
  int n = 0;
  std::map<Triple, Rational> s;
  nlohmann::json to_json() const;
};

// alpha plus r_{ij} = t_i/(1-t_j), 1 <= i < j <= n
struct GammaTable {
  int n = 0;
  std::map<Triple, Rational> s;
  std::map<IndexPair, ExtendedQ> r;
  nlohmann::json to_json() const;
};

// alpha plus r_{ijkl} = (t_j-t_i)/(t_l-t_k), 0 <= i < j < k < l <= n+1
struct DeltaTable {
  int n = 0;
  std::map<Triple, Rational> s;
  std::map<Quad, ExtendedQ> r;
  nlohmann::json to_json() const;
};

// point of the cyclohedron ambient: t in the closed simplex plus sine-ratio
// entries over ordered distinct triples of {0..n}; infinity is allowed
struct BetaPoint {
  int n = 0;
  std::vector<double> t;  // t_1..t_n, t_0 = 0 implicit
  std::map<Triple, double> stilde;
  nlohmann::json to_json() const;
};

// blend output: s_{ijk} as doubles in [0, +inf]
struct AlphaTableD {
  int n = 0;
  std::map<Triple, double> s;
};

AlphaTable chart_alpha(const Configuration& c);
BetaPoint chart_beta(const Configuration& c);
GammaTable chart_gamma(const Configuration& c);
DeltaTable chart_delta(const Configuration& c);

// The five smooth re-indexings of s_{ijk} under permutations of {i,j,k}:
// s_ikj = 1/s, s_jik = s/(1-s), s_jki = (1-s)/s, s_kij = 1/(1-s), s_kji = 1-s.
struct SVariants {
  ExtendedQ ikj, jik, jki, kij, kji;
};
SVariants s_variants(const Rational& s);

// Partition of unity on the overlap of the two branch formulas: mu1 weights
// the sine-corrected branch (valid below 1/2), mu2 the plain ratio branch
// (valid above 1/3); mu1 + mu2 = 1, mu1 = 1 on (-inf,1/3], mu2 = 1 on
// [1/2,inf).
struct BlendConfig {
  std::function<double(double)> mu1, mu2;
  static BlendConfig standard();     // bump quotient built from exp(-1/x)
  static BlendConfig alternative();  // a second bump, for uniqueness checks
};

// the projection from the cyclohedron ambient onto the associahedron ambient
AlphaTableD blend_projection(const BetaPoint& b, const BlendConfig& cfg = BlendConfig::standard());

// restriction of a table on Assoc_{r+l-1} to the two index blocks {0..r} and
// {r..r+l}
std::pair<AlphaTable, AlphaTable> split_projection(const AlphaTable& p, int r, int l);

// the unique (possibly boundary) point of Assoc_{r+l-1} over an interior
// point of Assoc_{r-1} x Assoc_{l-1} with s_{0,r,r+l} = tau
AlphaTable tau_fiber_point(const Configuration& left, const Configuration& right,
                           const Rational& tau, int r, int l);

// ---- nadirs and face inclusions -------------------------------------------------

// lowest common ancestor of two distinct leaves, as an internal preorder id;
// planar trees index leaves 0..n+1, fans use labels 0..n with 0 = *
int nadir(const PlanarTree& t, int i, int j);
int nadir(const Fan& t, int i, int j);
// are i and j closer to each other than to k (their nadir strictly above)?
bool closer(const PlanarTree& t, int i, int j, int k);
bool closer(const Fan& t, int i, int j, int k);

// local interior data: one configuration per internal vertex (preorder), of
// size |v|-2; for fans the root takes |root|-1 increasing interior values
AlphaTable include_face(const PlanarTree& t, const std::vector<Configuration>& local);
BetaPoint include_face(const Fan& t, const std::vector<Configuration>& local);

// ---- limits along epsilon-paths ---------------------------------------------------

AlphaTable path_limit_alpha(const EpsilonPath& p);
GammaTable path_limit_gamma(const EpsilonPath& p);
DeltaTable path_limit_delta(const EpsilonPath& p);

}  // namespace polyfaces
