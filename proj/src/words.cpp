#include "polyfaces/words.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "polyfaces/tree_functors.hpp"

namespace polyfaces {

Word::Word(std::vector<Letter> letters) : letters_(std::move(letters)) {
  for (Letter x : letters_) {
    if (x != Letter::b) ++l_;
    if (x != Letter::a) ++r_;
  }
}

Word Word::parse(const std::string& text) {
  std::vector<Letter> letters;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == 'a') {
      letters.push_back(Letter::a);
      ++i;
    } else if (text[i] == 'b') {
      letters.push_back(Letter::b);
      ++i;
    } else if (text.compare(i, 4, "(ab)") == 0) {
      letters.push_back(Letter::ab);
      i += 4;
    } else {
      throw ParseError("expected 'a', 'b' or '(ab)' in word", i);
    }
  }
  return Word(std::move(letters));
}

std::string Word::text() const {
  std::string out;
  for (Letter x : letters_) {
    if (x == Letter::a) out += 'a';
    else if (x == Letter::b) out += 'b';
    else out += "(ab)";
  }
  return out;
}

std::vector<Word> Word::fusions() const {
  std::vector<Word> out;
  for (std::size_t i = 0; i + 1 < letters_.size(); ++i) {
    bool ab = letters_[i] == Letter::a && letters_[i + 1] == Letter::b;
    bool ba = letters_[i] == Letter::b && letters_[i + 1] == Letter::a;
    if (!ab && !ba) continue;
    std::vector<Letter> v(letters_.begin(), letters_.begin() + i);
    v.push_back(Letter::ab);
    v.insert(v.end(), letters_.begin() + i + 2, letters_.end());
    out.emplace_back(std::move(v));
  }
  return out;
}

std::vector<Word> enumerate_words(int l, int r) {
  if (l < 0 || r < 0) throw PreconditionError("word counts must be nonnegative");
  std::vector<Word> out;
  std::vector<Letter> cur;
  std::function<void(int, int)> rec = [&](int la, int rb) {
    if (la == 0 && rb == 0) {
      out.emplace_back(cur);
      return;
    }
    if (la > 0) {
      cur.push_back(Letter::a);
      rec(la - 1, rb);
      cur.pop_back();
    }
    if (rb > 0) {
      cur.push_back(Letter::b);
      rec(la, rb - 1);
      cur.pop_back();
    }
    if (la > 0 && rb > 0) {
      cur.push_back(Letter::ab);
      rec(la - 1, rb - 1);
      cur.pop_back();
    }
  };
  rec(l, r);
  std::sort(out.begin(), out.end(),
            [](const Word& x, const Word& y) { return x.text() < y.text(); });
  return out;
}

bool word_leq(const Word& x, const Word& y) {
  if (x.l_count() != y.l_count() || x.r_count() != y.r_count()) return false;
  // BFS down from y through single fusions
  std::set<std::string> seen{y.text()};
  std::vector<Word> frontier{y};
  if (x == y) return true;
  while (!frontier.empty()) {
    std::vector<Word> next;
    for (const auto& w : frontier)
      for (auto& v : w.fusions()) {
        if (seen.insert(v.text()).second) {
          if (v == x) return true;
          next.push_back(std::move(v));
        }
      }
    frontier = std::move(next);
  }
  return false;
}

FinitePoset word_poset(int l, int r) {
  auto ws = enumerate_words(l, r);
  std::vector<std::string> keys;
  for (const auto& w : ws) keys.push_back(w.text());
  return FinitePoset(std::move(keys),
                     [&](int i, int j) { return word_leq(ws[i], ws[j]); });
}

// ---- embedding and cubes ----------------------------------------------------------

std::vector<int> f_embed_doubled(const Word& w) {
  std::vector<int> out;
  int bs = 0;
  for (Letter x : w.letters()) {
    if (x == Letter::a) out.push_back(2 * bs);
    if (x == Letter::ab) out.push_back(2 * bs + 1);
    if (x != Letter::a) ++bs;
  }
  return out;
}

std::string f_embed_text(const Word& w) {
  auto v = f_embed_doubled(w);
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    if (v[i] % 2 == 0)
      os << v[i] / 2;
    else
      os << v[i] << "/2";
  }
  os << ')';
  return os.str();
}

int IntegerCube::dimension() const {
  int d = 0;
  for (int c : doubled_center)
    if (c % 2 != 0) ++d;
  return d;
}

bool cube_has_face(const IntegerCube& cube, const IntegerCube& face) {
  if (cube.doubled_center.size() != face.doubled_center.size()) return false;
  for (std::size_t i = 0; i < cube.doubled_center.size(); ++i) {
    int c = cube.doubled_center[i], f = face.doubled_center[i];
    if (c % 2 == 0) {
      if (f != c) return false;
    } else if (f != c && f != c - 1 && f != c + 1) {
      return false;
    }
  }
  return true;
}

CubeComplex cube_complex(int l, int r) {
  if (l < 0 || r < 0) throw PreconditionError("cube domain needs l, r >= 0");
  CubeComplex out;
  out.l = l;
  out.r = r;
  // a cube with doubled center c spans [floor(c/2), ceil(c/2)] per axis; it
  // lies in 0 <= x_1 <= ... <= x_l <= r iff the per-axis tops chain below the
  // next axis' bottoms
  std::vector<int> c(l, 0);
  std::function<void(int)> rec = [&](int axis) {
    if (axis == l) {
      out.cubes.push_back(IntegerCube{c});
      return;
    }
    int lo = axis == 0 ? 0 : c[axis - 1] + (c[axis - 1] % 2 != 0 ? 1 : 0);  // ceil of prev top
    for (int v = lo; v <= 2 * r; ++v) {
      int top = v + (v % 2 != 0 ? 1 : 0);
      if (top > 2 * r) continue;
      c[axis] = v;
      rec(axis + 1);
    }
  };
  if (l == 0) {
    out.cubes.push_back(IntegerCube{{}});
  } else {
    rec(0);
  }
  std::sort(out.cubes.begin(), out.cubes.end(),
            [](const IntegerCube& a, const IntegerCube& b) {
              return a.doubled_center < b.doubled_center;
            });
  return out;
}

std::vector<std::size_t> CubeComplex::f_vector() const {
  std::vector<std::size_t> f;
  for (const auto& c : cubes) {
    int d = c.dimension();
    if (d >= static_cast<int>(f.size())) f.resize(d + 1, 0);
    ++f[d];
  }
  return f;
}

nlohmann::json CubeComplex::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : cubes) arr.push_back(c.doubled_center);
  return nlohmann::json{{"l", l}, {"r", r}, {"doubled_centers", arr}};
}

FinitePoset cube_poset(const CubeComplex& cc) {
  std::vector<std::string> keys;
  for (const auto& c : cc.cubes) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < c.doubled_center.size(); ++i) {
      if (i) os << ',';
      os << c.doubled_center[i];
    }
    os << ']';
    keys.push_back(os.str());
  }
  return FinitePoset(std::move(keys), [&](int i, int j) {
    return cube_has_face(cc.cubes[i], cc.cubes[j]);
  });
}

// ---- levelization posets -----------------------------------------------------------

namespace {

template <class Base>
FinitePoset levelization_poset_impl(const Base& t) {
  auto levs = enumerate_levelizations(t);
  std::vector<std::string> keys;
  for (const auto& x : levs) keys.push_back(x.text());
  return FinitePoset(std::move(keys),
                     [&](int i, int j) { return is_geq(levs[j], levs[i]); });
}

}  // namespace

FinitePoset levelization_poset(const PlanarTree& t) { return levelization_poset_impl(t); }
FinitePoset levelization_poset(const Fan& t) { return levelization_poset_impl(t); }

// ---- product decomposition ----------------------------------------------------------

std::vector<Word> ProductDecomposition::split(const Word& w) const {
  int s1 = static_cast<int>(factors.size());
  std::vector<std::vector<Letter>> blocks(s1);
  int ai = 0, bi = 0;
  int prev = 0;
  for (Letter x : w.letters()) {
    int fx;
    if (x == Letter::a) {
      fx = a_factor.at(ai++);
    } else if (x == Letter::b) {
      fx = b_factor.at(bi++);
    } else {
      int fa = a_factor.at(ai++);
      int fb = b_factor.at(bi++);
      if (fa != fb)
        throw PreconditionError("word does not split along the trunk grouping");
      fx = fa;
    }
    if (fx < prev) throw PreconditionError("word blocks out of trunk order");
    prev = fx;
    blocks[fx].push_back(x);
  }
  std::vector<Word> out;
  out.reserve(blocks.size());
  for (auto& b : blocks) out.emplace_back(std::move(b));
  return out;
}

ProductDecomposition product_decompose(const PlanarTree& t, const Fan& that) {
  PlanarTree base = pi(that);
  if (!is_geq(t, base)) throw PreconditionError("product_decompose needs t >= pi(that)");

  // contraction map from t onto pi(that)
  auto witness = contraction_witness(t.root(), base.root(), false);
  auto res = contract_tracked(t.root(), false, *witness);

  auto lt = left_spine(t);
  auto rt = right_spine(t);
  auto lb = left_spine(base);
  auto rb = right_spine(base);

  auto tr = trunk(that);
  int s = static_cast<int>(tr.size());
  // trunk vertex i >= 1 with left (right) branches <-> left (right) spine
  // vertex of the base, in root-first order
  std::vector<int> left_factor_of_base(lb.size()), right_factor_of_base(rb.size());
  {
    std::size_t li = 0, ri = 0;
    for (int i = 0; i < s; ++i) {
      if (!tr[i].left.empty()) left_factor_of_base.at(li++) = i + 1;
      if (!tr[i].right.empty()) right_factor_of_base.at(ri++) = i + 1;
    }
    if (li != lb.size() || ri != rb.size())
      throw PreconditionError("trunk branches inconsistent with base spines");
  }

  ProductDecomposition out;
  out.factors.assign(s + 1, {0, 0});
  out.a_factor.resize(lt.size());
  out.b_factor.resize(rt.size());
  for (std::size_t j = 0; j < lt.size(); ++j) {
    int img = res.vertex_map[lt[j]];
    int factor = 0;
    if (img != 0) {
      auto it = std::find(lb.begin(), lb.end(), img);
      factor = left_factor_of_base.at(it - lb.begin());
    }
    out.a_factor[j] = factor;
    ++out.factors[factor].first;
  }
  for (std::size_t j = 0; j < rt.size(); ++j) {
    int img = res.vertex_map[rt[j]];
    int factor = 0;
    if (img != 0) {
      auto it = std::find(rb.begin(), rb.end(), img);
      factor = right_factor_of_base.at(it - rb.begin());
    }
    out.b_factor[j] = factor;
    ++out.factors[factor].second;
  }
  return out;
}

}  // namespace polyfaces
