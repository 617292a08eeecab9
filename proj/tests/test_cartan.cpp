#include <catch2/catch_amalgamated.hpp>

#include "cartoric/cartan.hpp"

using namespace cartoric;

TEST_CASE("standard Cartan matrices and their inverses") {
  CartanMatrix a2("A2");
  CHECK(a2.rank() == 2);
  CHECK(a2.entry(0, 0) == 2);
  CHECK(a2.entry(0, 1) == -1);
  CHECK(a2.entry(1, 0) == -1);
  CHECK(a2.determinant() == 3);
  CHECK(a2.inverse_matrix()(0, 0) == ratio(2, 3));
  CHECK(a2.inverse_matrix()(0, 1) == ratio(1, 3));

  CartanMatrix b2("B2");
  CHECK(b2.entry(0, 1) == -1);
  CHECK(b2.entry(1, 0) == -2);
  CHECK(b2.determinant() == 2);
  CHECK(b2.inverse_matrix()(0, 0) == 1);
  CHECK(b2.inverse_matrix()(0, 1) == ratio(1, 2));
  CHECK(b2.inverse_matrix()(1, 0) == 1);
  CHECK(b2.inverse_matrix()(1, 1) == 1);

  CartanMatrix g2("G2");
  CHECK(g2.entry(0, 1) == -1);
  CHECK(g2.entry(1, 0) == -3);
  CHECK(g2.determinant() == 1);

  CHECK(CartanMatrix("A3").determinant() == 4);
  CHECK(CartanMatrix("D4").determinant() == 4);
  CHECK(CartanMatrix("F4").determinant() == 1);

  CartanMatrix prod("A1,A1");
  CHECK(prod.rank() == 2);
  CHECK(prod.entry(0, 1) == 0);
}

TEST_CASE("subdiagrams restrict rows and columns together") {
  CartanMatrix a3("A3");
  CartanMatrix sub = a3.subdiagram({0, 2});
  CHECK(sub.rank() == 2);
  CHECK(sub.entry(0, 1) == 0);
  CartanMatrix mid = a3.subdiagram({0, 1});
  CHECK(mid.entry(0, 1) == -1);
  CHECK(a3.subdiagram({}).rank() == 0);
}

TEST_CASE("inverse entries are nonnegative for every type") {
  for (const char* t : {"A1", "A2", "A3", "A4", "B2", "B3", "C3", "D4", "G2", "F4"}) {
    auto [inv, ok] = CartanMatrix(t).inverse_nonneg();
    INFO(t);
    CHECK(ok);
    CHECK(inv.rows() == CartanMatrix(t).rank());
  }
}

TEST_CASE("pairings follow the basis dictionary") {
  CartanMatrix cm("B2");
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      Rat rw = cm.pair(cm.unit(WBasis::SimpleRoot, i), cm.unit(WBasis::FundamentalCoweight, j));
      CHECK(rw == (i == j ? 1 : 0));
      Rat wc = cm.pair(cm.unit(WBasis::FundamentalWeight, i), cm.unit(WBasis::SimpleCoroot, j));
      CHECK(wc == (i == j ? 1 : 0));
      Rat rc = cm.pair(cm.unit(WBasis::SimpleRoot, i), cm.unit(WBasis::SimpleCoroot, j));
      CHECK(rc == cm.entry(i, j));
    }
  CHECK_THROWS_AS(cm.pair(cm.unit(WBasis::SimpleRoot, 0), cm.unit(WBasis::SimpleRoot, 1)),
                  std::invalid_argument);
}

TEST_CASE("coroot and root coordinate vectors") {
  CartanMatrix cm("A2");
  LatticeVector av = cm.coroot_in_coweight_coords(0);
  CHECK(av.coords == std::vector<Rat>{Rat(2), Rat(-1)});
  LatticeVector a = cm.root_in_weight_coords(1);
  CHECK(a.coords == std::vector<Rat>{Rat(-1), Rat(2)});
}

TEST_CASE("validation rejects malformed matrices") {
  auto mat = [](std::vector<std::vector<long>> rows) {
    Mat<Rat> m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
    return m;
  };
  CHECK_THROWS_AS(CartanMatrix("bad", mat({{2, -1}})), std::invalid_argument);
  CHECK_THROWS_AS(CartanMatrix("bad", mat({{1, 0}, {0, 2}})), std::invalid_argument);
  CHECK_THROWS_AS(CartanMatrix("bad", mat({{2, 1}, {-1, 2}})), std::invalid_argument);
  CHECK_THROWS_AS(CartanMatrix("bad", mat({{2, 0}, {-1, 2}})), std::invalid_argument);
  // Affine: determinant zero fails the finite-type minor test.
  CHECK_THROWS_AS(CartanMatrix("bad", mat({{2, -2}, {-2, 2}})), std::invalid_argument);
  CHECK_THROWS_AS(CartanMatrix("E9"), std::invalid_argument);
}

TEST_CASE("type spec parsing") {
  CHECK(CartanMatrix("A1,A1,A1").rank() == 3);
  CHECK(CartanMatrix("B2,G2").rank() == 4);
  CHECK(weyl_order_formula(parse_type_spec("A2")) == 6);
  CHECK(weyl_order_formula(parse_type_spec("F4")) == 1152);
  CHECK(weyl_order_formula(parse_type_spec("D4")) == 192);
  CHECK(weyl_order_formula(parse_type_spec("A1,A2")) == 12);
}

TEST_CASE("two-step lattice sequence is exact over the integers") {
  for (const char* t : {"A1", "A2", "A3", "B2", "B3", "G2", "A1,A1"}) {
    CoxSequenceReport rep = verify_cox_sequence(CartanMatrix(t));
    INFO(t);
    CHECK(rep.composite_zero);
    CHECK(rep.first_injective);
    CHECK(rep.second_surjective);
    CHECK(rep.kernel_equals_image);
    CHECK(rep.pass);
    for (const Int& d : rep.divisors_first) CHECK(d == 1);
  }
  CoxSequenceReport a1 = verify_cox_sequence(CartanMatrix("A1"));
  CHECK(a1.rank_first == 1);
  CHECK(a1.rank_second == 1);
}
