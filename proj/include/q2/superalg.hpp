#ifndef Q2_SUPERALG_HPP
#define Q2_SUPERALG_HPP

#include "q2/linalg.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

namespace q2 {

/// The eight generators, listed in PBW order: the even block F,H1,H2,E is the
/// general linear part, the barred block is its odd copy.
enum class Gen : int { F = 0, H1, H2, E, bF, bH1, bH2, bE };

constexpr int kGenCount = 8;

inline bool is_odd(Gen g) { return static_cast<int>(g) >= 4; }

/// Weight displacement in alpha units (E, bE raise; F, bF lower).
inline int alpha_shift(Gen g) {
  static constexpr int s[8] = {-1, 0, 0, 1, -1, 0, 0, 1};
  return s[static_cast<int>(g)];
}

inline const char* gen_name(Gen g) {
  static constexpr const char* n[8] = {"F",  "H1",  "H2",  "E",
                                       "bF", "bH1", "bH2", "bE"};
  return n[static_cast<int>(g)];
}

inline const std::vector<Gen>& all_gens() {
  static const std::vector<Gen> g = {Gen::F,  Gen::H1,  Gen::H2,  Gen::E,
                                     Gen::bF, Gen::bH1, Gen::bH2, Gen::bE};
  return g;
}

// ---------------------------------------------------------------------------
// Structure constants from the 4x4 block-matrix realization M(A,B).
// ---------------------------------------------------------------------------

namespace oracle {

using Mat4 = std::array<std::array<Rational, 4>, 4>;

inline Mat4 zero4() { return Mat4{}; }

/// M(A,B) = [[A,B],[B,A]] with A = E_{ij} for even generators, B = E_{ij}
/// for odd ones.
inline Mat4 realize(Gen g) {
  // (row, col) of the 2x2 matrix unit for each generator, even then odd
  static constexpr int unit[8][2] = {{1, 0}, {0, 0}, {1, 1}, {0, 1},
                                     {1, 0}, {0, 0}, {1, 1}, {0, 1}};
  int gi = static_cast<int>(g);
  int r = unit[gi][0], c = unit[gi][1];
  Mat4 m = zero4();
  if (!is_odd(g)) {
    m[r][c] = 1;
    m[r + 2][c + 2] = 1;
  } else {
    m[r][c + 2] = 1;
    m[r + 2][c] = 1;
  }
  return m;
}

inline Mat4 mul4(const Mat4& x, const Mat4& y) {
  Mat4 r = zero4();
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k)
      if (x[i][k] != 0)
        for (int j = 0; j < 4; ++j) r[i][j] += x[i][k] * y[k][j];
  return r;
}

/// [X,Y] = XY - (-1)^{|X||Y|} YX on homogeneous realizations.
inline Mat4 super_comm(Gen x, Gen y) {
  Mat4 a = realize(x), b = realize(y);
  Mat4 ab = mul4(a, b), ba = mul4(b, a);
  int sgn = (is_odd(x) && is_odd(y)) ? 1 : -1;
  Mat4 r = zero4();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r[i][j] = ab[i][j] + sgn * ba[i][j];
  return r;
}

/// Decomposes an M(A,B)-shaped matrix into generator coordinates.
inline std::vector<std::pair<Gen, Rational>> decompose(const Mat4& m) {
  static constexpr Gen even_of[2][2] = {{Gen::H1, Gen::E}, {Gen::F, Gen::H2}};
  static constexpr Gen odd_of[2][2] = {{Gen::bH1, Gen::bE},
                                       {Gen::bF, Gen::bH2}};
  std::vector<std::pair<Gen, Rational>> out;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) {
      if (m[r][c] != m[r + 2][c + 2] || m[r][c + 2] != m[r + 2][c])
        throw std::logic_error("matrix is not M(A,B)-shaped");
      if (m[r][c] != 0) out.emplace_back(even_of[r][c], m[r][c]);
      if (m[r][c + 2] != 0) out.emplace_back(odd_of[r][c], m[r][c + 2]);
    }
  return out;
}

}  // namespace oracle

/// [x,y] for generators, as generator coordinates. Generated once from the
/// matrix realization; never hand-entered.
inline const std::vector<std::pair<Gen, Rational>>& gen_bracket(Gen x, Gen y) {
  static const auto table = [] {
    std::array<std::array<std::vector<std::pair<Gen, Rational>>, 8>, 8> t;
    for (Gen a : all_gens())
      for (Gen b : all_gens())
        t[static_cast<int>(a)][static_cast<int>(b)] =
            oracle::decompose(oracle::super_comm(a, b));
    return t;
  }();
  return table[static_cast<int>(x)][static_cast<int>(y)];
}

// ---------------------------------------------------------------------------
// Monomials and elements of U(q).
// ---------------------------------------------------------------------------

struct Monomial {
  std::array<int, 8> e{};  // exponent per generator; odd slots are 0/1

  int degree() const {
    int d = 0;
    for (int v : e) d += v;
    return d;
  }

  int parity() const {
    return (e[4] + e[5] + e[6] + e[7]) & 1;
  }

  int alpha_weight() const {
    return e[3] + e[7] - e[0] - e[4];
  }

  bool is_one() const { return degree() == 0; }

  bool operator==(const Monomial& o) const { return e == o.e; }

  bool operator<(const Monomial& o) const {
    int d = degree(), od = o.degree();
    if (d != od) return d < od;
    return e < o.e;
  }

  static Monomial gen(Gen g, int exp = 1) {
    Monomial m;
    m.e[static_cast<int>(g)] = exp;
    return m;
  }

  std::string str() const {
    std::string out;
    for (int k = 0; k < 8; ++k) {
      if (!e[k]) continue;
      if (!out.empty()) out += "*";
      out += gen_name(static_cast<Gen>(k));
      if (e[k] > 1) out += "^" + std::to_string(e[k]);
    }
    return out.empty() ? "1" : out;
  }
};

/// Element of U(q2): scalar combination of monomials. Public values are
/// always in canonical PBW normal form (F < H1 < H2 < E < bF < bH1 < bH2 <
/// bE); other straightening orders are used internally by module
/// constructions.
struct Element {
  std::map<Monomial, Scalar> t;

  static Element zero() { return Element(); }

  static Element one() {
    Element x;
    x.t[Monomial{}] = Scalar(1);
    return x;
  }

  static Element gen(Gen g) {
    Element x;
    x.t[Monomial::gen(g)] = Scalar(1);
    return x;
  }

  static Element mono(const Monomial& m, Scalar c = Scalar(1)) {
    Element x;
    if (!c.is_zero()) x.t[m] = std::move(c);
    return x;
  }

  bool is_zero() const { return t.empty(); }

  int degree() const {
    int d = 0;
    for (const auto& [m, c] : t) d = std::max(d, m.degree());
    return d;
  }

  void add_term(const Monomial& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = t.find(m);
    if (it == t.end()) {
      t.emplace(m, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) t.erase(it);
    }
  }

  Element& operator+=(const Element& o) {
    for (const auto& [m, c] : o.t) add_term(m, c);
    return *this;
  }

  Element& operator-=(const Element& o) {
    for (const auto& [m, c] : o.t) add_term(m, -c);
    return *this;
  }

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }

  friend Element operator*(const Scalar& s, const Element& x) {
    Element r;
    if (s.is_zero()) return r;
    for (const auto& [m, c] : x.t) r.add_term(m, s * c);
    return r;
  }

  bool operator==(const Element& o) const { return t == o.t; }

  /// Parity when homogeneous, -1 otherwise.
  int parity() const {
    int p = -1;
    for (const auto& [m, c] : t) {
      if (p == -1)
        p = m.parity();
      else if (p != m.parity())
        return -1;
    }
    return p == -1 ? 0 : p;
  }

  /// Alpha weight when homogeneous; throws otherwise.
  int alpha_weight() const {
    bool seen = false;
    int w = 0;
    for (const auto& [m, c] : t) {
      if (!seen) {
        w = m.alpha_weight();
        seen = true;
      } else if (w != m.alpha_weight()) {
        throw std::logic_error("element is not weight-homogeneous");
      }
    }
    return w;
  }

  std::string str() const {
    if (t.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : t) {
      std::string cs = c.str();
      std::string term;
      if (m.is_one()) {
        term = cs;
      } else if (cs == "1") {
        term = m.str();
      } else if (cs == "-1") {
        term = "-" + m.str();
      } else if (c.is_rational() || (c.pure_qi() && c.slot(0) == 0)) {
        term = cs + "*" + m.str();
        // pure imaginary like "2*i" still unambiguous with *
      } else {
        term = "(" + cs + ")*" + m.str();
      }
      if (out.empty()) {
        out = term;
      } else if (term[0] == '-') {
        out += " - " + term.substr(1);
      } else {
        out += " + " + term;
      }
    }
    return out;
  }
};

// ---------------------------------------------------------------------------
// Straightening, parameterized by the target generator order.
// ---------------------------------------------------------------------------

enum class StraightenOrder : int {
  PBW = 0,         // F H1 H2 E | bF bH1 bH2 bE  (canonical normal form)
  Triangular = 1,  // F bF | H1 H2 bH1 bH2 | E bE (Verma evaluation)
  OddFirst = 2,    // bF bH1 bH2 bE | F H1 H2 E  (induced-module evaluation)
};

inline int order_rank(StraightenOrder ord, Gen g) {
  static constexpr int pbw[8] = {0, 1, 2, 3, 4, 5, 6, 7};
  static constexpr int tri[8] = {0, 2, 3, 6, 1, 4, 5, 7};
  static constexpr int oddf[8] = {4, 5, 6, 7, 0, 1, 2, 3};
  switch (ord) {
    case StraightenOrder::PBW:
      return pbw[static_cast<int>(g)];
    case StraightenOrder::Triangular:
      return tri[static_cast<int>(g)];
    case StraightenOrder::OddFirst:
      return oddf[static_cast<int>(g)];
  }
  return 0;
}

inline const std::array<Gen, 8>& order_sequence(StraightenOrder ord) {
  static const std::array<Gen, 8> seq[3] = {
      {Gen::F, Gen::H1, Gen::H2, Gen::E, Gen::bF, Gen::bH1, Gen::bH2, Gen::bE},
      {Gen::F, Gen::bF, Gen::H1, Gen::H2, Gen::bH1, Gen::bH2, Gen::E, Gen::bE},
      {Gen::bF, Gen::bH1, Gen::bH2, Gen::bE, Gen::F, Gen::H1, Gen::H2,
       Gen::E}};
  return seq[static_cast<int>(ord)];
}

/// Generator word of a monomial, factors listed in the given order.
inline std::vector<Gen> monomial_word(const Monomial& m, StraightenOrder ord) {
  std::vector<Gen> w;
  for (Gen g : order_sequence(ord))
    for (int k = 0; k < m.e[static_cast<int>(g)]; ++k) w.push_back(g);
  return w;
}

namespace detail {

struct WordKey {
  std::string bytes;
  bool operator==(const WordKey& o) const { return bytes == o.bytes; }
};

struct WordKeyHash {
  size_t operator()(const WordKey& k) const {
    return std::hash<std::string>()(k.bytes);
  }
};

inline WordKey make_key(const std::vector<Gen>& w) {
  WordKey k;
  k.bytes.reserve(w.size());
  for (Gen g : w) k.bytes.push_back(static_cast<char>(static_cast<int>(g)));
  return k;
}

// Rewriting steps strictly decrease (word length, inversion count), so this
// terminates; the budget guards against sign mistakes during development.
inline long& straighten_steps() {
  static long steps = 0;
  return steps;
}

constexpr long kStraightenBudget = 200'000'000;

inline const Element& straighten(const std::vector<Gen>& word,
                                 StraightenOrder ord);

inline Element straighten_impl(const std::vector<Gen>& word,
                               StraightenOrder ord) {
  if (++straighten_steps() > kStraightenBudget)
    throw std::runtime_error("straightening step budget exceeded");
  for (size_t i = 0; i + 1 < word.size(); ++i) {
    Gen a = word[i], b = word[i + 1];
    if (a == b && is_odd(a)) {
      // x^2 = (1/2)[x,x]
      Element res;
      for (const auto& [g, c] : gen_bracket(a, a)) {
        std::vector<Gen> w(word.begin(), word.begin() + i);
        w.push_back(g);
        w.insert(w.end(), word.begin() + i + 2, word.end());
        res += Scalar(c / 2) * straighten(w, ord);
      }
      return res;
    }
    if (order_rank(ord, a) > order_rank(ord, b)) {
      // a b = (-1)^{|a||b|} b a + [a,b]
      std::vector<Gen> swapped = word;
      std::swap(swapped[i], swapped[i + 1]);
      Element res = straighten(swapped, ord);
      if (is_odd(a) && is_odd(b)) res = Scalar(-1) * res;
      for (const auto& [g, c] : gen_bracket(a, b)) {
        std::vector<Gen> w(word.begin(), word.begin() + i);
        w.push_back(g);
        w.insert(w.end(), word.begin() + i + 2, word.end());
        res += Scalar(c) * straighten(w, ord);
      }
      return res;
    }
  }
  Monomial m;
  for (Gen g : word) m.e[static_cast<int>(g)] += 1;
  return Element::mono(m);
}

inline const Element& straighten(const std::vector<Gen>& word,
                                 StraightenOrder ord) {
  static std::unordered_map<WordKey, Element, WordKeyHash> cache[3];
  auto& c = cache[static_cast<int>(ord)];
  WordKey key = make_key(word);
  auto it = c.find(key);
  if (it != c.end()) return it->second;
  Element e = straighten_impl(word, ord);
  return c.emplace(std::move(key), std::move(e)).first->second;
}

}  // namespace detail

/// Product of two elements normal w.r.t. `ord`; the result is normal w.r.t.
/// `ord` as well.
inline Element multiply(const Element& a, const Element& b,
                        StraightenOrder ord = StraightenOrder::PBW) {
  Element res;
  for (const auto& [ma, ca] : a.t) {
    std::vector<Gen> wa = monomial_word(ma, ord);
    for (const auto& [mb, cb] : b.t) {
      std::vector<Gen> w = wa;
      for (Gen g : monomial_word(mb, ord)) w.push_back(g);
      res += (ca * cb) * detail::straighten(w, ord);
    }
  }
  return res;
}

/// Re-normalizes an element from one straightening order to another.
inline Element convert_order(const Element& x, StraightenOrder from,
                             StraightenOrder to) {
  Element res;
  for (const auto& [m, c] : x.t)
    res += c * detail::straighten(monomial_word(m, from), to);
  return res;
}

/// Super-bracket [x,y] = xy - (-1)^{|x||y|} yx, extended bilinearly to
/// non-homogeneous arguments.
inline Element bracket(const Element& x, const Element& y) {
  Element res;
  for (const auto& [mx, cx] : x.t)
    for (const auto& [my, cy] : y.t) {
      Element xy = multiply(Element::mono(mx), Element::mono(my));
      Element yx = multiply(Element::mono(my), Element::mono(mx));
      Scalar c = cx * cy;
      res += c * xy;
      Scalar sgn = (mx.parity() && my.parity()) ? Scalar(1) : Scalar(-1);
      res += (c * sgn) * yx;
    }
  return res;
}

inline Element element_pow(const Element& x, int e,
                           StraightenOrder ord = StraightenOrder::PBW) {
  Element r = Element::one();
  for (int k = 0; k < e; ++k) r = multiply(r, x, ord);
  return r;
}

/// The quadratic Casimir c = (H1 - H2 + 1)^2 + 4 F E of the even part.
inline Element casimir_element() {
  Element h = Element::gen(Gen::H1) - Element::gen(Gen::H2) + Element::one();
  Element c = multiply(h, h);
  c += Scalar(4) * multiply(Element::gen(Gen::F), Element::gen(Gen::E));
  return c;
}

namespace detail {

inline void enumerate_monomials(int maxdeg, int pos, Monomial& cur,
                                std::vector<Monomial>& out) {
  if (pos == 8) {
    out.push_back(cur);
    return;
  }
  int cap = pos >= 4 ? 1 : maxdeg - cur.degree();
  for (int e = 0; e <= cap && cur.degree() + e <= maxdeg; ++e) {
    cur.e[pos] = e;
    enumerate_monomials(maxdeg, pos + 1, cur, out);
  }
  cur.e[pos] = 0;
}

}  // namespace detail

inline std::vector<Monomial> monomials_up_to(int maxdeg, int parity = -1) {
  std::vector<Monomial> out;
  Monomial cur;
  detail::enumerate_monomials(maxdeg, 0, cur, out);
  if (parity >= 0) {
    std::vector<Monomial> filt;
    for (const auto& m : out)
      if (m.parity() == parity) filt.push_back(m);
    return filt;
  }
  return out;
}

/// Basis of the space of even elements of filtration degree <= maxdeg that
/// commute with the even generators and anticommute with the odd ones,
/// solved as an exact rational linear system. Solutions are normalized so
/// the leading PBW monomial has coefficient 1.
inline std::vector<Element> find_anticenter(int maxdeg) {
  std::vector<Monomial> basis = monomials_up_to(maxdeg, 0);
  std::map<Monomial, int> row_of;
  std::vector<std::map<int, Scalar>> cols(basis.size());
  int nrows = 0;
  for (size_t k = 0; k < basis.size(); ++k) {
    Element m = Element::mono(basis[k]);
    for (Gen g : all_gens()) {
      Element ge = Element::gen(g);
      Element expr = multiply(m, ge) - (Scalar(is_odd(g) ? -1 : 1) * multiply(ge, m));
      for (const auto& [mono, c] : expr.t) {
        auto it = row_of.find(mono);
        if (it == row_of.end()) it = row_of.emplace(mono, nrows++).first;
        auto& cell = cols[k][it->second];
        cell += c;
      }
    }
  }
  Mat sys(nrows, static_cast<int>(basis.size()));
  for (size_t k = 0; k < basis.size(); ++k)
    for (const auto& [r, c] : cols[k]) sys.at(r, static_cast<int>(k)) = c;
  std::vector<Element> out;
  for (const auto& v : kernel_basis(sys)) {
    Element e;
    for (size_t k = 0; k < basis.size(); ++k) e.add_term(basis[k], v[k]);
    if (e.is_zero()) continue;
    // leading monomial = largest in the canonical monomial order
    const Scalar& lead = e.t.rbegin()->second;
    out.push_back(scalar_is_unit(lead) ? scalar_div(Scalar(1), lead) * e : e);
  }
  return out;
}

}  // namespace q2

#endif
