#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "cartoric/weyl.hpp"

using namespace cartoric;

TEST_CASE("group orders match the closed formulas") {
  CHECK(WeylGroup(CartanMatrix("A1")).size() == 2);
  CHECK(WeylGroup(CartanMatrix("A2")).size() == 6);
  CHECK(WeylGroup(CartanMatrix("B2")).size() == 8);
  CHECK(WeylGroup(CartanMatrix("G2")).size() == 12);
  CHECK(WeylGroup(CartanMatrix("A3")).size() == 24);
  CHECK(WeylGroup(CartanMatrix("A1,A1")).size() == 4);
  CHECK_THROWS_AS(WeylGroup(CartanMatrix("A9")), std::length_error);
}

TEST_CASE("simple reflections act correctly on root coordinates") {
  WeylGroup w(CartanMatrix("A2"));
  // s_1(alpha_2) = alpha_1 + alpha_2.
  int s1 = w.mult_generator(w.identity(), 0);
  std::vector<Rat> img = w.act_on_root_coords(s1, w.simple_root_coords(1));
  CHECK(img == std::vector<Rat>{Rat(1), Rat(1)});
  // s_1(alpha_1) = -alpha_1.
  CHECK(w.act_on_root_coords(s1, w.simple_root_coords(0)) ==
        std::vector<Rat>{Rat(-1), Rat(0)});
}

TEST_CASE("root systems close up with the right cardinality") {
  CHECK(WeylGroup(CartanMatrix("A2")).roots().size() == 6);
  CHECK(WeylGroup(CartanMatrix("B2")).roots().size() == 8);
  CHECK(WeylGroup(CartanMatrix("G2")).roots().size() == 12);
  CHECK(WeylGroup(CartanMatrix("A3")).roots().size() == 12);

  WeylGroup b2(CartanMatrix("B2"));
  CHECK(b2.positive_root_count() == 4);
  CHECK(b2.length(b2.longest_element()) == 4);
}

TEST_CASE("longest elements of parabolic subgroups") {
  WeylGroup w(CartanMatrix("A2"));
  CHECK(w.length(w.longest_element({})) == 0);
  CHECK(w.length(w.longest_element({0})) == 1);
  CHECK(w.length(w.longest_element({0, 1})) == 3);
  int w0 = w.longest_element();
  CHECK(w.product(w0, w0) == w.identity());

  WeylGroup g2(CartanMatrix("G2"));
  CHECK(g2.length(g2.longest_element()) == 6);
}

TEST_CASE("words are reduced and inverses compose to the identity") {
  WeylGroup w(CartanMatrix("B2"));
  for (int e = 0; e < w.size(); ++e) {
    CHECK(w.length(e) == static_cast<int>(w.word(e).size()));
    CHECK(w.product(e, w.inverse(e)) == w.identity());
  }
  int longest = 0;
  for (int e = 0; e < w.size(); ++e)
    longest = std::max(longest, w.length(e));
  CHECK(longest == 4);
}

TEST_CASE("Bruhat comparison against simple reflections") {
  WeylGroup w(CartanMatrix("A2"));
  CHECK_FALSE(w.bruhat_geq_simple(w.identity(), 0));
  int s1 = w.mult_generator(w.identity(), 0);
  int s2 = w.mult_generator(w.identity(), 1);
  CHECK(w.bruhat_geq_simple(s1, 0));
  CHECK_FALSE(w.bruhat_geq_simple(s1, 1));
  CHECK(w.bruhat_geq_simple(s2, 1));
  CHECK(w.bruhat_geq_simple(w.longest_element(), 0));
  CHECK(w.bruhat_geq_simple(w.longest_element(), 1));
}

TEST_CASE("the star involution permutes simple roots by -w_0") {
  CHECK(WeylGroup(CartanMatrix("A2")).star_involution() == std::vector<int>{1, 0});
  CHECK(WeylGroup(CartanMatrix("B2")).star_involution() == std::vector<int>{0, 1});
  CHECK(WeylGroup(CartanMatrix("A3")).star_involution() == std::vector<int>{2, 1, 0});
  CHECK(WeylGroup(CartanMatrix("D4")).star_involution() == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("reflection on fundamental-weight coordinates") {
  CartanMatrix cm("A2");
  std::vector<Rat> p{Rat(1), Rat(0)};
  CHECK(reflect_weight_coords(cm, 0, p) == std::vector<Rat>{Rat(-1), Rat(1)});
  CHECK(reflect_weight_coords(cm, 1, p) == p);
}

TEST_CASE("the two zero-locus routes partition the subsets") {
  for (const char* t : {"A1", "A2", "B2", "A1,A1"}) {
    CartanMatrix cm(t);
    WeylGroup w(cm);
    const int n = cm.rank();
    for (int i = 0; i < n; ++i) {
      auto a = zero_locus_bruhat_route(w, i);
      auto b = zero_locus_root_route(w, i);
      INFO(t << " i=" << i);
      CHECK(a.size() + b.size() == (1u << n));
      for (const auto& J : a)
        CHECK(std::find(b.begin(), b.end(), J) == b.end());
    }
  }
  // In A2 the Bruhat side for i = 1 is exactly the subsets containing node 1.
  WeylGroup w(CartanMatrix("A2"));
  auto a = zero_locus_bruhat_route(w, 0);
  REQUIRE(a.size() == 2);
  CHECK(std::find(a.begin(), a.end(), std::vector<int>{0}) != a.end());
  CHECK(std::find(a.begin(), a.end(), std::vector<int>{0, 1}) != a.end());
}
