#include "taut/tautring.hpp"

#include <doctest.h>

#include <random>

using namespace taut;

namespace {

DiagMonomial diag(std::vector<Block> blocks) {
  DiagMonomial q;
  q.blocks = std::move(blocks);
  q.canonicalize();
  return q;
}

Block blk(std::vector<int> e, BasisClass c = BasisClass::one()) { return {std::move(e), std::move(c)}; }

NodeClass node(std::vector<int> I, int split = 1) {
  NodeClass n;
  n.I = std::move(I);
  n.split = split;
  n.canonicalize();
  return n;
}

WordFactor G(int k) { return WordFactor::gamma(k); }
WordFactor L(int i) { return WordFactor::slot(i, SurfaceClass::divisor("L")); }

CharacterPolynomial sym(const char* s) { return CharacterPolynomial::symbol(s); }

}  // namespace

TEST_CASE("diagonal monomials canonicalize") {
  DiagMonomial q = diag({blk({2, 1}), blk({3}, BasisClass::divisor("L"))});
  CHECK(q.blocks[0].elems == std::vector<int>{1, 2});
  CHECK(q.codim() == 2);
  CHECK(render_generator(q) == "q[{1,2},{3}](1,L)");
  CHECK(dimension(q, 3) == 2);
  CHECK_THROWS_AS(diag({blk({1, 2}), blk({2})}), std::invalid_argument);
}

TEST_CASE("node profiles") {
  NodeClass n = node({1, 2, 3});
  CHECK(render_generator(n) == "F(1|23:)");
  CHECK(n.dimension() == 1);
  CHECK_THROWS_AS(node({1}), std::invalid_argument);
  CHECK_THROWS_AS(node({1, 2}, 2), std::invalid_argument);
}

TEST_CASE("point classes integrate to one") {
  TautRing R;
  CHECK(R.integrate(TautExpr::of(2, diag({blk({1, 2}, BasisClass::pt())}))) == CharacterPolynomial(1));
  CHECK(R.integrate(TautExpr::of(3, diag({blk({1, 2, 3}, BasisClass::pt())}))) == CharacterPolynomial(1));
  // Second point runs over the fibre through the first.
  CHECK(R.integrate(TautExpr::of(2, diag({blk({1}, BasisClass::pt()), blk({2}, BasisClass::divisor("L"))}))) ==
        sym("dL"));
}

TEST_CASE("grading is enforced") {
  TautExpr e(2);
  e.add(diag({blk({1, 2})}), 1);
  CHECK_THROWS_AS(e.add(diag({blk({1, 2}, BasisClass::pt())}), 1), GradingError);
  TautRing R;
  CHECK_THROWS_AS(R.integrate(e), GradingError);
}

TEST_CASE("square of the top diagonal") {
  TautRing R;
  TautExpr sq = R.expand_monomial({G(2), G(2)}, 2);
  CHECK(sq.render() == "-q[{1,2}](omega) + F(12:)");
  // Gamma on q12[omega] is -q12[omega^2], so the node part integrates to -sigma.
  CHECK(R.integrate(R.expand_monomial({G(2), G(2), G(2)}, 2)).render() == "-sigma + omega2");
  CHECK(R.integrate(R.mul_gamma(TautExpr::of(2, node({1, 2})))) == -sym("sigma"));
  CHECK(R.mul_gamma(TautExpr::of(2, node({1, 2}))).render() == "-Fsec(12:)");
}

TEST_CASE("expansion order does not matter") {
  TautRing R;
  std::mt19937_64 rng(17);
  for (int t = 0; t < 40; ++t) {
    Word w;
    for (int d = 0; d < 4; ++d)
      w.push_back(rng() % 2 ? G(2 + static_cast<int>(rng() % 2)) : L(1 + static_cast<int>(rng() % 3)));
    CHECK(R.expand_monomial(w, 3, ExpandOrder::levelwise) == R.expand_monomial(w, 3, ExpandOrder::classes_last));
  }
}

TEST_CASE("slot classes commute") {
  TautRing R;
  CHECK(R.expand_monomial({L(1), G(3), L(3), G(2)}, 3) == R.expand_monomial({G(2), L(3), G(3), L(1)}, 3));
}

TEST_CASE("fibre integral of Gamma") {
  TautRing R;
  std::mt19937_64 rng(23);
  for (int t = 0; t < 15; ++t) {
    Word w;
    for (int d = 0; d < 3; ++d)
      w.push_back(rng() % 3 == 0 ? G(2) : WordFactor::slot(1 + static_cast<int>(rng() % 2),
                                                            SurfaceClass::divisor(rng() % 2 ? "L" : "omega")));
    TautExpr u = R.expand_monomial(w, 2);
    CHECK(R.integrate(R.mul_gamma(R.pullback(u))) == CharacterPolynomial(2) * R.integrate(u));
  }
}

TEST_CASE("pushforward and pullback") {
  TautRing R;
  for (const auto& q : {diag({}), diag({blk({1, 2})}), diag({blk({1}, BasisClass::divisor("L"))}),
                        diag({blk({1, 2}, BasisClass::pt())})}) {
    TautExpr u = TautExpr::of(2, q);
    CHECK(R.pushforward(R.pullback(u)).is_zero());
    CHECK(R.pushforward(R.mul_gamma(R.pullback(u))) == u.scaled(2));
  }
  CHECK(R.pullback(TautExpr::unit(2)).level() == 3);
}

TEST_CASE("orthogonality at node slots") {
  TautRing R;
  for (const auto& n : {node({1, 2, 3}), node({1, 2, 3}, 2)})
    for (int i : {1, 2, 3}) {
      CHECK(R.mul_class(TautExpr::of(3, n), i, SurfaceClass::divisor("L")).is_zero());
      CHECK(R.mul_class(TautExpr::of(3, n), i, SurfaceClass::point()).is_zero());
    }
}

TEST_CASE("small diagonal closure") {
  TautRing R;
  TautExpr q3 = TautExpr::of(3, diag({blk({1, 2, 3})}));
  CHECK(R.integrate(R.mul_gamma(R.mul_gamma(q3))).render() == "-6*sigma + 9*omega2");
  TautExpr q2 = TautExpr::of(2, diag({blk({1, 2})}));
  CHECK(R.integrate(R.mul_gamma(R.mul_gamma(q2))).render() == "-sigma + omega2");
}

TEST_CASE("node facts at level three") {
  TautRing R;
  NodeClass partial;
  partial.I = {1, 3};
  TautExpr f = R.fillings(partial, 3);
  CHECK(R.integrate(R.apply_word(f, {G(3), G(3)})) == CharacterPolynomial(-2) * sym("sigma"));
  CHECK(R.integrate(R.apply_word(f, {G(2), G(2)})).is_zero());
}

TEST_CASE("pulled-back Gamma below the cut is unsupported") {
  TautRing R;
  TautExpr q = TautExpr::of(3, diag({blk({1, 2, 3})}));
  CHECK_THROWS_AS(R.mul_pulled_gamma(q, 2), UnsupportedError);
}

TEST_CASE("Chern classes of the tautological bundle") {
  TautRing R;
  ChernResult c = R.chern_taut("L", 2);
  REQUIRE(c.classes.size() == 3);
  CHECK(c.roots[1] == "1 + L(2) - Delta<2>");
  CHECK(c.classes[0] == TautExpr::unit(2));
  TautExpr c1 = R.expand_monomial({L(1)}, 2);
  c1.add(R.expand_monomial({L(2)}, 2));
  c1.add(R.expand_monomial({G(2)}, 2), -1);
  CHECK(c.classes[1] == c1);
}

TEST_CASE("characters can be specialized") {
  TautRing R;
  TautExpr e = R.expand_monomial({L(3), G(3), G(3)}, 3);
  TautExpr v = e.evaluated({{"omegaL", 2}});
  CHECK(v.render().find("omegaL") == std::string::npos);
}
