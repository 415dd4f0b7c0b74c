#include "q2/superalg.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace q2;

namespace {

// Independent 4x4 oracle, coded separately from the library's table: plain
// integer block matrices and an explicit supercommutator.
using M4 = std::array<std::array<int, 4>, 4>;

M4 test_realize(Gen g) {
  auto unit = [](int r, int c, bool odd_part) {
    M4 m{};
    if (!odd_part) {
      m[r][c] = 1;
      m[r + 2][c + 2] = 1;
    } else {
      m[r][c + 2] = 1;
      m[r + 2][c] = 1;
    }
    return m;
  };
  switch (g) {
    case Gen::E: return unit(0, 1, false);
    case Gen::F: return unit(1, 0, false);
    case Gen::H1: return unit(0, 0, false);
    case Gen::H2: return unit(1, 1, false);
    case Gen::bE: return unit(0, 1, true);
    case Gen::bF: return unit(1, 0, true);
    case Gen::bH1: return unit(0, 0, true);
    case Gen::bH2: return unit(1, 1, true);
  }
  return M4{};
}

M4 test_comm(Gen x, Gen y) {
  M4 a = test_realize(x), b = test_realize(y), r{};
  int sgn = (is_odd(x) && is_odd(y)) ? 1 : -1;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k)
        r[i][j] += a[i][k] * b[k][j] + sgn * b[i][k] * a[k][j];
  return r;
}

M4 eval_element_as_matrix(const Element& e) {
  // only valid for linear combinations of single generators
  M4 r{};
  for (const auto& [m, c] : e.t) {
    REQUIRE(m.degree() == 1);
    int gi = 0;
    while (!m.e[gi]) ++gi;
    M4 g = test_realize(static_cast<Gen>(gi));
    REQUIRE(c.is_rational());
    long cc = to_long(c.rational_value());
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) r[i][j] += static_cast<int>(cc) * g[i][j];
  }
  return r;
}

Element rand_element(std::mt19937& rng, int maxdeg) {
  static std::vector<Monomial> pool = monomials_up_to(3);
  std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
  std::uniform_int_distribution<int> coeff(-4, 4);
  Element e;
  for (int t = 0; t < 3; ++t) {
    Monomial m = pool[pick(rng)];
    if (m.degree() > maxdeg) continue;
    e.add_term(m, Scalar(coeff(rng)));
  }
  return e;
}

}  // namespace

TEST_CASE("bracket table matches the block-matrix oracle") {
  for (Gen x : all_gens())
    for (Gen y : all_gens()) {
      Element b;
      for (const auto& [g, c] : gen_bracket(x, y))
        b += Scalar(c) * Element::gen(g);
      M4 lhs = b.is_zero() ? M4{} : eval_element_as_matrix(b);
      CHECK(lhs == test_comm(x, y));
    }
}

TEST_CASE("named brackets") {
  auto gb = [](Gen x, Gen y) {
    return bracket(Element::gen(x), Element::gen(y));
  };
  Element h1 = Element::gen(Gen::H1), h2 = Element::gen(Gen::H2);
  CHECK(gb(Gen::E, Gen::F) == h1 - h2);
  CHECK(gb(Gen::bE, Gen::bF) == h1 + h2);
  CHECK(gb(Gen::bE, Gen::bE).is_zero());
  CHECK(gb(Gen::E, Gen::bF) ==
        Element::gen(Gen::bH1) - Element::gen(Gen::bH2));
}

TEST_CASE("super-Jacobi for all generator triples") {
  for (Gen x : all_gens())
    for (Gen y : all_gens())
      for (Gen z : all_gens()) {
        Element ex = Element::gen(x), ey = Element::gen(y),
                ez = Element::gen(z);
        Element lhs = bracket(ex, bracket(ey, ez));
        Element rhs = bracket(bracket(ex, ey), ez);
        Scalar sgn((is_odd(x) && is_odd(y)) ? -1 : 1);
        rhs += sgn * bracket(ey, bracket(ex, ez));
        CHECK(lhs == rhs);
      }
}

TEST_CASE("straightening basics") {
  // E*F = F*E + H1 - H2
  Element ef = multiply(Element::gen(Gen::E), Element::gen(Gen::F));
  Element expect = multiply(Element::gen(Gen::F), Element::gen(Gen::E)) +
                   Element::gen(Gen::H1) - Element::gen(Gen::H2);
  CHECK(ef == expect);
  CHECK(ef.str() == "H1 - H2 + F*E");

  // bE*bF = -bF*bE + H1 + H2
  Element ebf = multiply(Element::gen(Gen::bE), Element::gen(Gen::bF));
  Element expect2 = Scalar(-1) * multiply(Element::gen(Gen::bF),
                                          Element::gen(Gen::bE)) +
                    Element::gen(Gen::H1) + Element::gen(Gen::H2);
  CHECK(ebf == expect2);

  // bH1 * bH1 = H1
  CHECK(multiply(Element::gen(Gen::bH1), Element::gen(Gen::bH1)) ==
        Element::gen(Gen::H1));
}

TEST_CASE("pbw monomial count at filtration degree <= 2") {
  CHECK(monomials_up_to(2).size() == 41);
}

TEST_CASE("associativity on random elements") {
  std::mt19937 rng(777);
  for (int t = 0; t < 200; ++t) {
    Element a = rand_element(rng, 3), b = rand_element(rng, 3),
            c = rand_element(rng, 3);
    CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
  }
}

TEST_CASE("parity and weight are multiplicative") {
  std::mt19937 rng(99);
  std::vector<Monomial> pool = monomials_up_to(3);
  std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
  for (int t = 0; t < 100; ++t) {
    Monomial a = pool[pick(rng)], b = pool[pick(rng)];
    Element p = multiply(Element::mono(a), Element::mono(b));
    if (p.is_zero()) continue;
    for (const auto& [m, c] : p.t) {
      CHECK(m.parity() == ((a.parity() + b.parity()) & 1));
      CHECK(m.alpha_weight() == a.alpha_weight() + b.alpha_weight());
    }
  }
}

TEST_CASE("alternative straightening orders agree") {
  std::mt19937 rng(4242);
  for (int t = 0; t < 40; ++t) {
    Element a = rand_element(rng, 3), b = rand_element(rng, 2);
    Element via_tri = convert_order(
        multiply(convert_order(a, StraightenOrder::PBW,
                               StraightenOrder::Triangular),
                 convert_order(b, StraightenOrder::PBW,
                               StraightenOrder::Triangular),
                 StraightenOrder::Triangular),
        StraightenOrder::Triangular, StraightenOrder::PBW);
    CHECK(via_tri == multiply(a, b));
    Element via_odd = convert_order(
        multiply(
            convert_order(a, StraightenOrder::PBW, StraightenOrder::OddFirst),
            convert_order(b, StraightenOrder::PBW, StraightenOrder::OddFirst),
            StraightenOrder::OddFirst),
        StraightenOrder::OddFirst, StraightenOrder::PBW);
    CHECK(via_odd == multiply(a, b));
  }
}

TEST_CASE("casimir is central in the even part") {
  Element c = casimir_element();
  for (Gen g : {Gen::E, Gen::F, Gen::H1, Gen::H2})
    CHECK(bracket(c, Element::gen(g)).is_zero());
}

TEST_CASE("anticenter") {
  CHECK(find_anticenter(1).empty());
  auto sols = find_anticenter(4);
  REQUIRE(!sols.empty());
  for (const auto& t : sols) {
    for (Gen g : all_gens()) {
      Element ge = Element::gen(g);
      Element expr = multiply(t, ge) -
                     (Scalar(is_odd(g) ? -1 : 1) * multiply(ge, t));
      CHECK(expr.is_zero());
    }
    CHECK(t.parity() == 0);
  }
  // minimal degree is unique up to scalar
  int dmin = 10;
  for (const auto& t : sols) dmin = std::min(dmin, t.degree());
  int count_min = 0;
  for (const auto& t : sols)
    if (t.degree() == dmin) ++count_min;
  INFO("anticenter minimal degree " << dmin << ", multiplicity "
                                    << count_min);
  CHECK(dmin <= 4);
}
