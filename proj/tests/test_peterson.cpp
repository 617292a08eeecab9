#include <catch2/catch_amalgamated.hpp>

#include "cartoric/peterson.hpp"

using namespace cartoric;

namespace {
Mat<Rat> sl2_unipotent(const Rat& t) {
  Mat<Rat> u = Mat<Rat>::identity(2);
  u(1, 0) = t;
  return u;
}

Mat<Rat> sl3_cell_point(const Rat& a, const Rat& c) {
  Mat<Rat> u = Mat<Rat>::identity(3);
  u(1, 0) = a;
  u(2, 0) = a * a * c / (a + c);
  u(2, 1) = c;
  return u;
}
}  // namespace

TEST_CASE("dual numbers differentiate rational expressions") {
  Jet<2> a = Jet<2>::variable(Rat(3), 0);
  Jet<2> b = Jet<2>::variable(Rat(5), 1);
  Jet<2> f = a * a * b;  // df/da = 2ab = 30, df/db = a^2 = 9
  CHECK(f.v == 45);
  CHECK(f.d[0] == 30);
  CHECK(f.d[1] == 9);
  Jet<2> g = a / b;
  CHECK(g.v == ratio(3, 5));
  CHECK(g.d[0] == ratio(1, 5));
  CHECK(g.d[1] == ratio(-3, 25));
  CHECK_THROWS_AS(a / Jet<2>(Rat(0)), std::domain_error);
  CHECK(Jet<2>(Rat(3)) == Jet<2>(3));
}

TEST_CASE("SL2 sections in closed form") {
  PetersonPoint p(sl2_unipotent(Rat(3)));
  CHECK(p.rank() == 1);
  CHECK(p.in_peterson());
  CHECK(p.in_big_cell());
  CHECK(p.delta(1) == 1);
  CHECK(p.q(1) == 9);
  QuotientPoint img = psi(p);
  CHECK(img.x == std::vector<Rat>{Rat(1)});
  CHECK(img.y == std::vector<Rat>{Rat(9)});
}

TEST_CASE("point constructor validates shape and determinant") {
  Mat<Rat> bad = Mat<Rat>::identity(2);
  bad(0, 0) = 2;
  CHECK_THROWS_AS(PetersonPoint(bad), std::invalid_argument);
  CHECK_THROWS_AS(PetersonPoint(Mat<Rat>::identity(1)), std::invalid_argument);
  Mat<Rat> rect(2, 3);
  CHECK_THROWS_AS(PetersonPoint(rect), std::invalid_argument);
}

TEST_CASE("SL3 cell points satisfy the closed-form sections") {
  // b = a^2 c/(a+c) makes M(3,1) vanish; then q1 (a+c) = a^3, q2 (a+c) = c^3.
  PetersonPoint p(sl3_cell_point(Rat(1), Rat(1)));
  CHECK(p.in_peterson());
  CHECK(p.q(1) == ratio(1, 2));
  CHECK(p.q(2) == ratio(1, 2));
  CHECK(p.delta(1) == 1);
  CHECK(p.delta(2) == 1);

  PetersonPoint q(sl3_cell_point(Rat(2), Rat(-1)));
  CHECK(q.in_peterson());
  CHECK(q.q(1) == 8);
  CHECK(q.q(2) == -1);

  // Without the membership constraint the conjugate leaves the variety.
  Mat<Rat> off = Mat<Rat>::identity(3);
  off(1, 0) = 1;
  off(2, 0) = 7;
  off(2, 1) = 1;
  CHECK_FALSE(PetersonPoint(off).in_peterson());
}

TEST_CASE("sampled cell points stay exact and in the variety") {
  for (const CellSample& s : sample_peterson_cell(1, 25, 5)) {
    CHECK(s.point.in_peterson());
    CHECK(s.point.q(1) == s.params[0] * s.params[0]);
  }
  for (const CellSample& s : sample_peterson_cell(2, 25, 5)) {
    const Rat &a = s.params[0], &c = s.params[1];
    CHECK(s.point.in_peterson());
    CHECK(s.point.q(1) * (a + c) == a * a * a);
    CHECK(s.point.q(2) * (a + c) == c * c * c);
  }
  CHECK_THROWS_AS(sample_peterson_cell(3, 1, 5), std::invalid_argument);
}

TEST_CASE("signed reverse representatives") {
  Mat<Rat> w2 = w0_dot(2);
  CHECK(w2(0, 1) == -1);
  CHECK(w2(1, 0) == 1);
  CHECK(det(w2) == 1);
  PetersonPoint p2(w2);
  CHECK(p2.q(1) == 1);

  Mat<Rat> w3 = w0_dot(3);
  CHECK(w3(0, 2) == 1);
  CHECK(w3(1, 1) == -1);
  CHECK(w3(2, 0) == 1);
  CHECK(det(w3) == 1);
  PetersonPoint p3(w3);
  CHECK(p3.q(1) == 1);
  CHECK(p3.q(2) == 1);

  CHECK(det(w0_dot(4)) == 1);
  CHECK(det(w0_dot(5)) == 1);
}

TEST_CASE("parabolic representatives are block reverses and lie in the variety") {
  Mat<Rat> w = wJ_dot(3, {0});
  CHECK(w(2, 2) == 1);
  CHECK(w(3, 3) == 1);
  CHECK(w(0, 1) == -1);
  CHECK(w(1, 0) == 1);

  Mat<Rat> split = wJ_dot(3, {0, 2});
  CHECK(split(0, 1) == -1);
  CHECK(split(2, 3) == -1);

  Mat<Rat> run = wJ_dot(3, {0, 1});
  CHECK(run(0, 2) == 1);
  CHECK(run(3, 3) == 1);

  for (int n : {1, 2, 3})
    for (std::uint32_t jm = 0; jm < (1u << n); ++jm) {
      PetersonPoint p(wJ_dot(n, mask_to_set(jm, n)));
      INFO("n=" << n << " mask=" << jm);
      CHECK(p.in_peterson());
    }
}

TEST_CASE("psi sends parabolic representatives to the matching fixed points") {
  for (int n : {1, 2, 3})
    for (std::uint32_t jm = 0; jm < (1u << n); ++jm) {
      INFO("n=" << n << " mask=" << jm);
      CHECK(fixed_point_image_check(n, mask_to_set(jm, n)));
    }
}

TEST_CASE("LU factorization without pivoting") {
  Mat<Rat> h(2, 2);
  h(0, 0) = 1;
  h(0, 1) = 1;
  h(1, 0) = -1;
  LUnitLower lu = lu_unit_lower(h);
  REQUIRE(lu.ok);
  CHECK(lu.lower(1, 0) == -1);
  CHECK(lu.upper(0, 1) == 1);
  CHECK(lu.upper(1, 1) == 1);
  CHECK(lu.lower * lu.upper == h);

  Mat<Rat> zero_pivot(2, 2);
  zero_pivot(0, 1) = 1;
  zero_pivot(1, 0) = 1;
  CHECK_FALSE(lu_unit_lower(zero_pivot).ok);
}

TEST_CASE("Bruhat product formula for the adjoint sections") {
  // t != 0: the representative has delta' = 1/t and the formula gives t^2.
  PetersonPoint p(sl2_unipotent(Rat(5)));
  KostantReport rep = kostant_check(p);
  REQUIRE(rep.status == KostantStatus::verified);
  REQUIRE(rep.delta_prime.size() == 1);
  CHECK(rep.delta_prime[0] == ratio(1, 5));

  // t = 0 falls outside the opposite cell and is skipped.
  CHECK(kostant_check(PetersonPoint(sl2_unipotent(Rat(0)))).status == KostantStatus::skipped);

  PetersonPoint q(sl3_cell_point(Rat(2), Rat(-1)));
  CHECK(kostant_check(q).status == KostantStatus::verified);
  PetersonPoint r(sl3_cell_point(Rat(1), Rat(1)));
  CHECK(kostant_check(r).status == KostantStatus::verified);
}

TEST_CASE("diagonal one-parameter subgroup and scaling laws") {
  Mat<Rat> g3 = gamma_s(3, Rat(2));
  CHECK(g3(0, 0) == 4);
  CHECK(g3(1, 1) == 1);
  CHECK(g3(2, 2) == ratio(1, 4));
  CHECK_THROWS_AS(gamma_s(3, Rat(0)), std::invalid_argument);

  // delta law holds for arbitrary g, q law needs the variety.
  Mat<Rat> any(3, 3);
  any(0, 0) = 1;
  any(0, 1) = 2;
  any(1, 0) = 3;
  any(1, 1) = 1;
  any(1, 2) = 1;
  any(2, 0) = 1;
  any(2, 2) = 2;
  Mat<Rat> b = Mat<Rat>::identity(3);
  b(0, 0) = 2;
  b(0, 1) = 5;
  b(1, 1) = -3;
  b(2, 2) = ratio(-1, 6);
  for (int i = 1; i <= 3; ++i) CHECK(delta_right_law(any, b, i));
  CHECK(q_left_scaling_law(any, Rat(7), 1));
  CHECK(q_left_scaling_law(any, Rat(7), 2));

  PetersonPoint cell(sl3_cell_point(Rat(2), Rat(3)));
  CHECK(q_right_law(cell.g(), b, 1));
  CHECK(q_right_law(cell.g(), b, 2));
}

TEST_CASE("circle equivariance of the full section vector") {
  for (const Rat& z : {Rat(3), ratio(-1, 2), Rat(1)}) {
    EquivarianceReport r1 = equivariance_check(PetersonPoint(sl2_unipotent(Rat(4))), z);
    CHECK(r1.pass);
    EquivarianceReport r2 = equivariance_check(PetersonPoint(sl3_cell_point(Rat(1), Rat(2))), z);
    INFO("z=" << to_string(z));
    CHECK(r2.delta_law);
    CHECK(r2.q_law);
    CHECK(r2.translate_law);
    CHECK(r2.pass);
  }
}

TEST_CASE("section differentials have full rank at random points") {
  JacobianReport r1 = jacobian_rank_check(1, 20, 9);
  CHECK(r1.samples == 20);
  CHECK(r1.witnesses > 0);
  CHECK_FALSE(r1.inconclusive);
  JacobianReport r2 = jacobian_rank_check(2, 20, 9);
  CHECK(r2.witnesses > 0);
  CHECK_FALSE(r2.inconclusive);
  CHECK_THROWS_AS(jacobian_rank_check(3, 1, 9), std::invalid_argument);
}

TEST_CASE("univariate squarefree counting") {
  // (x-1)^2 (x+2) has 2 distinct roots.
  std::vector<Rat> p{Rat(2), Rat(-3), Rat(0), Rat(1)};
  CHECK(upoly_distinct_roots(p) == 2);
  CHECK(upoly_degree(upoly_trim({Rat(1), Rat(0), Rat(0)})) == 0);
  std::vector<Rat> g = upoly_gcd({Rat(-1), Rat(0), Rat(1)}, {Rat(1), Rat(1)});
  REQUIRE(g.size() == 2);
  CHECK(g[1] == 1);
  CHECK(g[0] == 1);
}

TEST_CASE("fiber counts over regular values") {
  FiberProbe f1 = fiber_probe(1, Rat(4), Rat(0));
  CHECK(f1.equation_degree == 2);
  CHECK(f1.distinct_solutions == 2);
  CHECK(f1.reference_count == 2);

  FiberProbe f2 = fiber_probe(2, Rat(2), Rat(3));
  CHECK(f2.equation_degree == 9);
  CHECK(f2.reference_count == 9);
  CHECK(f2.distinct_solutions >= 1);
  CHECK(f2.distinct_solutions <= 9);

  CHECK_THROWS_AS(fiber_probe(2, Rat(0), Rat(1)), std::invalid_argument);
  CHECK_THROWS_AS(fiber_probe(3, Rat(1), Rat(1)), std::invalid_argument);
}
