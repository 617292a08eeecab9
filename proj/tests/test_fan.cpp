#include <catch2/catch_amalgamated.hpp>

#include "cartoric/cone_oracle.hpp"
#include "cartoric/fan.hpp"

using namespace cartoric;

TEST_CASE("cone enumeration counts and dimensions") {
  FanSigma fan(CartanMatrix("A2"));
  CHECK(fan.cones().size() == 9);
  CHECK(fan.f_vector() == std::vector<Int>{Int(1), Int(4), Int(4)});
  CHECK(fan.h_vector() == std::vector<Int>{Int(1), Int(2), Int(1)});

  FanSigma a3(CartanMatrix("A3"));
  CHECK(a3.cones().size() == 27);
  CHECK(a3.f_vector() == std::vector<Int>{Int(1), Int(6), Int(12), Int(8)});
  CHECK(a3.h_vector() == std::vector<Int>{Int(1), Int(3), Int(3), Int(1)});
}

TEST_CASE("ray coordinates in the coweight basis") {
  FanSigma fan(CartanMatrix("A2"));
  std::vector<Ray> rays = fan.rays();
  REQUIRE(rays.size() == 4);
  CHECK(rays[0].name == "-coroot_1");
  CHECK(rays[0].coords == std::vector<Rat>{Rat(-2), Rat(1)});
  CHECK(rays[1].coords == std::vector<Rat>{Rat(1), Rat(-2)});
  CHECK(rays[2].name == "coweight_1");
  CHECK(rays[2].coords == std::vector<Rat>{Rat(1), Rat(0)});
}

TEST_CASE("intersection of cones intersects the index sets") {
  ConeJK a{{0}, {1}};
  ConeJK b{{0, 1}, {}};
  ConeJK c = FanSigma::intersect(a, b);
  CHECK(c.J == std::vector<int>{0});
  CHECK(c.K.empty());
}

TEST_CASE("membership in maximal and lower cones") {
  FanSigma fan(CartanMatrix("A2"));
  // sigma_{emptyset} is spanned by the coweights: the positive quadrant.
  ConeJK quad = fan.maximal_cone(0);
  CHECK(fan.contains(quad, {Rat(1), Rat(2)}));
  CHECK_FALSE(fan.contains(quad, {Rat(-1), Rat(2)}));
  // The ray cone sigma_{{1},emptyset} contains only multiples of -alpha_1^vee.
  ConeJK ray{{0}, {}};
  CHECK(fan.contains(ray, {Rat(-2), Rat(1)}));
  CHECK(fan.contains(ray, {Rat(-1), ratio(1, 2)}));
  CHECK_FALSE(fan.contains(ray, {Rat(-2), Rat(2)}));
  ConeJK origin;
  CHECK(fan.contains(origin, {Rat(0), Rat(0)}));
  CHECK_FALSE(fan.contains(origin, {Rat(1), Rat(0)}));
}

TEST_CASE("every sampled point lies in some maximal cone") {
  for (const char* t : {"A2", "B2", "G2"}) {
    FanSigma fan(CartanMatrix{t});
    CoverageReport rep = sample_coverage(fan, 500, 11);
    INFO(t);
    CHECK(rep.pass);
    CHECK(rep.covered == 500);
  }
  // Removing one maximal cone must strand points.
  FanSigma fan(CartanMatrix("A2"));
  CoverageReport broken = sample_coverage(fan, 500, 11, 0);
  CHECK_FALSE(broken.pass);
}

TEST_CASE("cone multiplicities are the sub-Cartan determinants") {
  FanSigma a1(CartanMatrix("A1"));
  CHECK(a1.multiplicity(ConeJK{{0}, {}}) == 2);
  CHECK(a1.multiplicity(ConeJK{{}, {0}}) == 1);
  FanSigma a2(CartanMatrix("A2"));
  CHECK(a2.multiplicity(a2.maximal_cone(0b11)) == 3);
  CHECK(a2.multiplicity(a2.maximal_cone(0)) == 1);
  FanSigma b2(CartanMatrix("B2"));
  CHECK(b2.multiplicity(b2.maximal_cone(0b11)) == 2);
}

TEST_CASE("oracle agrees with the formula on all pairs in low rank") {
  for (const char* t : {"A1", "A2", "B2"}) {
    FanSigma fan(CartanMatrix{t});
    const auto& cones = fan.cones();
    for (size_t a = 0; a < cones.size(); ++a)
      for (size_t b = a; b < cones.size(); ++b) {
        ConePairCheck chk = compare_intersection(fan, cones[a], cones[b]);
        INFO(t << " pair " << a << "," << b);
        CHECK(chk.agree);
      }
  }
}

TEST_CASE("oracle guard refuses high rank") {
  FanSigma fan(CartanMatrix("A1,A1,A1,A1,A1"));
  CHECK_THROWS_AS(intersection_rays_oracle(fan, fan.cones()[0], fan.cones()[1]),
                  std::length_error);
}

TEST_CASE("primitive collections pair each ray with its opposite") {
  FanSigma fan(CartanMatrix("A2"));
  std::vector<std::vector<int>> pc = fan.primitive_collections();
  REQUIRE(pc.size() == 2);
  CHECK(pc[0] == std::vector<int>{0, 2});
  CHECK(pc[1] == std::vector<int>{1, 3});
}

TEST_CASE("torus-fixed points and quotient equality") {
  CartanMatrix cm("A1");
  QuotientPoint p{{Rat(1)}, {Rat(4)}};
  QuotientPoint q{{Rat(2)}, {Rat(16)}};
  QuotientPoint r{{Rat(1)}, {Rat(5)}};
  CHECK(point_equal_mod_T(cm, p, q));
  CHECK_FALSE(point_equal_mod_T(cm, p, r));

  QuotientPoint bad{{Rat(0)}, {Rat(0)}};
  CHECK_THROWS_AS(point_equal_mod_T(cm, p, bad), std::invalid_argument);

  QuotientPoint f = fixed_point(2, {1});
  CHECK(f.x == std::vector<Rat>{Rat(1), Rat(0)});
  CHECK(f.y == std::vector<Rat>{Rat(0), Rat(1)});

  CartanMatrix a2("A2");
  CHECK(point_equal_mod_T(a2, fixed_point(2, {1}), fixed_point(2, {1})));
  CHECK_FALSE(point_equal_mod_T(a2, fixed_point(2, {1}), fixed_point(2, {0})));
}

TEST_CASE("quotient equality respects the torus weights in rank 2") {
  CartanMatrix cm("A2");
  // Scaling by s = (s1, s2): x_i -> s_i x_i, y_i -> s_i^2/s_other y_i.
  QuotientPoint p{{Rat(1), Rat(1)}, {Rat(1), Rat(1)}};
  Rat s1(2), s2(3);
  QuotientPoint q{{s1, s2}, {s1 * s1 / s2, s2 * s2 / s1}};
  CHECK(point_equal_mod_T(cm, p, q));
  QuotientPoint off{{s1, s2}, {s1 * s1 / s2, s2 * s2}};
  CHECK_FALSE(point_equal_mod_T(cm, p, off));
}
