#include <catch2/catch_amalgamated.hpp>

#include "cartoric/cohomology.hpp"

using namespace cartoric;

TEST_CASE("graded-lex order and monomial enumeration") {
  CHECK(graded_lex_greater({1, 0}, {0, 1}));
  CHECK(graded_lex_greater({0, 2}, {1, 0}));
  CHECK_FALSE(graded_lex_greater({1, 1}, {1, 1}));
  CHECK(monomials_of_degree(2, 3).size() == 4);
  CHECK(monomials_of_degree(3, 2).size() == 6);
  CHECK(monomials_of_degree(0, 0).size() == 1);
  CHECK(monomials_of_degree(0, 1).empty());
  // Descending order, variable 0 largest.
  std::vector<Mono> ms = monomials_of_degree(2, 2);
  CHECK(ms[0] == Mono{2, 0});
  CHECK(ms[2] == Mono{0, 2});
}

TEST_CASE("normal form is unique modulo a Groebner basis") {
  CartanMatrix cm("A2");
  GradedQuotientRing rx = presentation_x(cm);
  Poly x1 = rx.var(0), x2 = rx.var(1);
  // X1^2, (1/2) X1 X2, and X2^2 coincide in the quotient.
  Poly nf = rx.normal_form(x1 * x1);
  CHECK(nf == x2 * x2);
  CHECK(rx.normal_form(ratio(1, 2) * (x1 * x2)) == nf);
  CHECK(rx.normal_form(x1 * x1 - ratio(1, 2) * (x1 * x2)).is_zero());
}

TEST_CASE("graded dimensions match the h-vector by both routes") {
  auto expect = [](const char* t, std::vector<long> want) {
    CartanMatrix cm(t);
    const int n = cm.rank();
    for (GradedQuotientRing r : {presentation_xy(cm), presentation_x(cm)}) {
      GradedDimensions g = graded_dimensions(r, n + 1);
      INFO(t);
      REQUIRE(g.by_groebner.size() == static_cast<size_t>(n + 2));
      for (int d = 0; d <= n; ++d) CHECK(g.by_groebner[d] == want[d]);
      CHECK(g.by_groebner[n + 1] == 0);
      CHECK(g.routes_agree);
      CHECK(g.by_rows == g.by_groebner);
    }
  };
  expect("A1", {1, 1});
  expect("A2", {1, 2, 1});
  expect("B2", {1, 2, 1});
  expect("G2", {1, 2, 1});
  expect("A1,A1", {1, 2, 1});
  expect("A3", {1, 3, 3, 1});
}

TEST_CASE("ring constructor rejects bad relations") {
  CHECK_THROWS_AS(GradedQuotientRing({"X1"}, {Poly{}}), std::invalid_argument);
  Poly inhom = poly_var(1, 0) + poly_const(1, Rat(1));
  CHECK_THROWS_AS(GradedQuotientRing({"X1"}, {inhom}), std::invalid_argument);
}

TEST_CASE("Euler form vanishing and its nonzero control") {
  for (const char* t : {"A1", "A2", "B2", "G2"}) {
    CartanMatrix cm(t);
    GradedQuotientRing rx = presentation_x(cm);
    for (int i = 0; i < cm.rank(); ++i) {
      INFO(t << " i=" << i);
      CHECK(vanishing_check(rx, cm, i));
    }
  }
  // A mixed product does not die: X1 times the second linear form.
  CartanMatrix a2("A2");
  GradedQuotientRing rx = presentation_x(a2);
  Poly mixed = poly_var(2, 0) * cartan_linear_form(a2, 1);
  CHECK_FALSE(rx.normal_form(mixed).is_zero());
}

TEST_CASE("eliminating the Y variables lands in the X presentation") {
  for (const char* t : {"A1", "A2", "B2"}) {
    CartanMatrix cm(t);
    EliminationReport rep = eliminate_y(cm, presentation_xy(cm), presentation_x(cm));
    INFO(t);
    CHECK(rep.dims_agree);
    CHECK(rep.relations_map_to_zero);
    CHECK(rep.pass);
  }
}

TEST_CASE("fixed-point restrictions of the coweight divisors") {
  CartanMatrix cm("A2");
  FanSigma fan(cm);
  // At sigma_empty the coweight rays are the basis itself.
  CHECK(equivariant_restriction(fan, {}, 2) == std::vector<Rat>{Rat(1), Rat(0)});
  CHECK(equivariant_restriction(fan, {}, 3) == std::vector<Rat>{Rat(0), Rat(1)});
  // At sigma_full the coweight rays are absent.
  CHECK(equivariant_restriction(fan, {0, 1}, 2) == std::vector<Rat>{Rat(0), Rat(0)});
  // Mixed cone J = {2}: generators -alpha_2^vee, varpi_1^vee.
  CHECK(equivariant_restriction(fan, {1}, 2) == std::vector<Rat>{Rat(1), ratio(1, 2)});
  CHECK(equivariant_restriction(fan, {1}, 3) == std::vector<Rat>{Rat(0), Rat(0)});
  CHECK(equivariant_restriction(fan, {1}, 1) == std::vector<Rat>{Rat(0), ratio(-1, 2)});
  CHECK_THROWS_AS(equivariant_restriction(fan, {}, 4), std::out_of_range);
  CHECK_THROWS_AS(equivariant_restriction(fan, {}, -1), std::out_of_range);
}

TEST_CASE("localization constants are (1, -1) and the web is rigid") {
  CartanMatrix cm("A2");
  FanSigma fan(cm);
  WeylGroup weyl(cm);
  for (int i = 0; i < 2; ++i) {
    MnConstants mn = solve_mn_constants(fan, weyl, i);
    INFO("i=" << i);
    CHECK(mn.m == 1);
    CHECK(mn.n == -1);
    CHECK(mn.consistent);
    CHECK(mn.equations_checked == 4);
  }
  // Scaling the full-parabolic equation breaks consistency at rank 2.
  MnConstants bad = solve_mn_constants(fan, weyl, 0, Rat(2));
  CHECK_FALSE(bad.consistent);
  // At rank 1 the two equations cannot conflict; the control solves anyway.
  CartanMatrix a1("A1");
  FanSigma f1(a1);
  WeylGroup w1(a1);
  MnConstants skew = solve_mn_constants(f1, w1, 0, Rat(2));
  CHECK(skew.consistent);
  CHECK(skew.m == ratio(3, 2));
  CHECK(skew.n == -2);
}

TEST_CASE("degree-2 alias table reproduces the Cartan rows") {
  std::vector<DictionaryEntry> d = degree2_dictionary(CartanMatrix("A2"));
  REQUIRE(d.size() == 2);
  CHECK(d[0].index == 1);
  CHECK(d[0].toric_relation == "Y1 = 2*X1 - X2");
  CHECK(d[0].weight_relation == "alpha_1 = 2*varpi_1 - varpi_2");
  CHECK(d[0].webs_match);
  CHECK(d[1].toric_relation == "Y2 = -X1 + 2*X2");
  CHECK(d[1].webs_match);

  for (const char* t : {"B2", "G2", "A3"})
    for (const DictionaryEntry& e : degree2_dictionary(CartanMatrix(t))) {
      INFO(t << " index " << e.index);
      CHECK(e.webs_match);
    }
}

TEST_CASE("linear combination formatting") {
  CHECK(format_linear_combo({Rat(2), Rat(-1)}, "X") == "2*X1 - X2");
  CHECK(format_linear_combo({Rat(0), Rat(1)}, "X") == "X2");
  CHECK(format_linear_combo({Rat(-1), Rat(0)}, "X") == "-X1");
  CHECK(format_linear_combo({Rat(0), Rat(0)}, "X") == "0");
  CHECK(format_linear_combo({ratio(1, 2), Rat(3)}, "v") == "1/2*v1 + 3*v2");
}
