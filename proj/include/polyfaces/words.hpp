#pragma once

// Word posets X_{l,r}, the half-integer embedding and its cube complex,
// levelization posets, and the product decomposition of restricted fibers.

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

#include "polyfaces/posets.hpp"
#include "polyfaces/trees.hpp"

namespace polyfaces {

enum class Letter { a, b, ab };

// Sequence over {a, b, (ab)}; (ab) contributes one a and one b.
class Word {
public:
  Word() = default;
  explicit Word(std::vector<Letter> letters);
  static Word parse(const std::string& text);  // e.g. "a(ab)b"

  const std::vector<Letter>& letters() const { return letters_; }
  int l_count() const { return l_; }  // total a's
  int r_count() const { return r_; }  // total b's
  std::string text() const;

  // all words with one adjacent a,b or b,a pair fused into (ab)
  std::vector<Word> fusions() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

private:
  std::vector<Letter> letters_;
  int l_ = 0, r_ = 0;
};

std::vector<Word> enumerate_words(int l, int r);

// X <= Y iff X is reachable from Y by fusing adjacent pairs into (ab)
bool word_leq(const Word& x, const Word& y);

FinitePoset word_poset(int l, int r);

// ---- half-integer embedding and integer cubes -----------------------------------

// i-th coordinate: number of b's before the i-th a, plus 1/2 when that a sits
// inside an (ab). Coordinates are returned doubled so everything stays
// integral.
std::vector<int> f_embed_doubled(const Word& w);
std::string f_embed_text(const Word& w);  // e.g. "(0, 3/2, 4)"

// Axis-parallel unit cube determined by its half-integer center.
struct IntegerCube {
  std::vector<int> doubled_center;
  int dimension() const;
  friend bool operator==(const IntegerCube&, const IntegerCube&) = default;
};

// is `face` a face of `cube`?
bool cube_has_face(const IntegerCube& cube, const IntegerCube& face);

// All integer cubes inside the domain 0 <= x_1 <= ... <= x_l <= r, plus the
// order-isomorphism bookkeeping with the word poset (bigger word = smaller
// cube, matching the corolla-minimal face order).
struct CubeComplex {
  int l = 0, r = 0;
  std::vector<IntegerCube> cubes;  // sorted by doubled center

  std::vector<std::size_t> f_vector() const;       // counts by cube dimension
  nlohmann::json to_json() const;                   // list of doubled centers
};

CubeComplex cube_complex(int l, int r);

// cube poset: c1 <= c2 iff cube(c1) has cube(c2) as a face
FinitePoset cube_poset(const CubeComplex& c);

// ---- levelization posets ---------------------------------------------------------

// X_T: all levels on a fixed base, ordered by leveled contraction
FinitePoset levelization_poset(const PlanarTree& t);
FinitePoset levelization_poset(const Fan& t);

// ---- product decomposition (fiber over t restricted above that) ------------------

struct ProductDecomposition {
  std::vector<std::pair<int, int>> factors;  // (l_i, r_i), i = 0..s (root block first)
  // split of a fiber word into the s+1 blocks (one word per trunk vertex)
  std::vector<Word> split(const Word& w) const;

  // the grouping maps used by split: for the j-th a (b) of a fiber word, the
  // factor it belongs to
  std::vector<int> a_factor;
  std::vector<int> b_factor;
};

ProductDecomposition product_decompose(const PlanarTree& t, const Fan& that);

}  // namespace polyfaces
