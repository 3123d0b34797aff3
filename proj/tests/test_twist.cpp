#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "cxkit/twist.hpp"
#include "oracles.hpp"

using namespace cxkit;

TEST_CASE("build_twist validates the permutation") {
  CoxeterSystem a2 = build_system("A2");
  Twist id = build_twist(a2, {0, 1});
  CHECK(id.order() == 1);
  CHECK(id.is_identity_twist());

  Twist flip = build_twist(a2, {1, 0});
  CHECK(flip.order() == 2);
  CHECK_FALSE(flip.is_identity_twist());

  CoxeterSystem a3 = build_system("A3");
  // m(s1,s3) = 2 but m(s2,s3) = 3: swapping s1 and s2 breaks the matrix
  CHECK_THROWS_AS(build_twist(a3, {1, 0, 2}), CoxeterMatrixViolation);

  CHECK_THROWS_AS(build_twist(a3, {0, 1}), InputError);     // wrong size
  CHECK_THROWS_AS(build_twist(a3, {0, 0, 2}), InputError);  // not injective
}

TEST_CASE("registry twists") {
  Twist a3 = registry_twist("2A3");
  CHECK(a3.system().type() == "A3");
  CHECK(a3.order() == 2);
  CHECK(a3.label() == "2A3");
  CHECK(a3.sigma(0) == 2);
  CHECK(a3.sigma(1) == 1);
  CHECK(a3.sigma(2) == 0);

  Twist d4 = registry_twist("3D4");
  CHECK(d4.order() == 3);
  FOrbitSet d4o = d4.orbits();
  REQUIRE(d4o.orbits.size() == 2);
  CHECK(d4o.orbits[0] == std::vector<int>{0, 2, 3});
  CHECK(d4o.orbits[1] == std::vector<int>{1});

  Twist b2 = registry_twist("2B2");
  CHECK(b2.order() == 2);
  CHECK(b2.sigma(0) == 1);
  CHECK(b2.q_note() == "q an odd power of sqrt(2)");
  CHECK(registry_twist("2G2").q_note() == "q an odd power of sqrt(3)");
  CHECK(registry_twist("2F4").q_note() == "q an odd power of sqrt(2)");

  CHECK(registry_twist("A3").is_identity_twist());
  CHECK(registry_twist("B3").is_identity_twist());
  CHECK(registry_twist("2E6").order() == 2);
  CHECK(registry_twist("2D4").order() == 2);

  Twist prod = registry_twist("2A2xA1");
  CHECK(prod.system().rank() == 3);
  CHECK(prod.sigma(0) == 1);
  CHECK(prod.sigma(2) == 2);

  CHECK_THROWS_AS(registry_twist("2B3"), InputError);
  CHECK_THROWS_AS(registry_twist("3A3"), InputError);
  CHECK_THROWS_AS(registry_twist("2A1"), InputError);
  CHECK_THROWS_AS(registry_twist("dA3"), InputError);
  CHECK_THROWS_AS(registry_twist("4D4"), InputError);
}

TEST_CASE("f_orbits") {
  CHECK(registry_twist("A2").orbits().orbits ==
        std::vector<std::vector<int>>{{0}, {1}});
  CHECK(registry_twist("2A3").orbits().orbits ==
        std::vector<std::vector<int>>{{0, 2}, {1}});
}

TEST_CASE("apply_twist on generators and words") {
  Twist tw = registry_twist("2A2");
  const CoxeterSystem& sys = tw.system();
  CHECK(apply_twist(tw, sys.element_from_word({0})) == sys.element_from_word({1}));
  CHECK(apply_twist(tw, sys.element_from_word({0, 1})) == sys.element_from_word({1, 0}));

  Twist id = registry_twist("A2");
  for (const auto& x : id.system().enumerate_elements()) {
    CHECK(apply_twist(id, x) == x);
  }
}

TEST_CASE("apply_twist is a length- and order-preserving automorphism") {
  Twist tw = registry_twist("2A3");
  const CoxeterSystem& sys = tw.system();
  auto elems = sys.enumerate_elements();
  for (const auto& x : elems) {
    WeylElement fx = apply_twist(tw, x);
    CHECK(sys.length(fx) == sys.length(x));
    for (const auto& y : elems) {
      if (sys.bruhat_leq(x, y)) {
        CHECK(sys.bruhat_leq(fx, apply_twist(tw, y)));
      }
    }
  }
  // homomorphism on a sample of pairs
  for (std::size_t i = 0; i < elems.size(); i += 3) {
    for (std::size_t j = 0; j < elems.size(); j += 5) {
      CHECK(apply_twist(tw, sys.multiply(elems[i], elems[j])) ==
            sys.multiply(apply_twist(tw, elems[i]), apply_twist(tw, elems[j])));
    }
  }
}

TEST_CASE("twist iterated d times is the identity; orbit sizes divide d") {
  for (const char* desc : {"A2", "2A2", "A3", "2A3", "B2", "2B2", "G2", "2G2", "B3", "3D4"}) {
    Twist tw = registry_twist(desc);
    const CoxeterSystem& sys = tw.system();
    if (sys.group_order() <= 200) {
      for (const auto& x : sys.enumerate_elements()) {
        WeylElement y = x;
        for (int k = 0; k < tw.order(); ++k) y = apply_twist(tw, y);
        CHECK(y == x);
      }
    }
    for (const auto& block : tw.orbits().orbits) {
      CHECK(tw.order() % static_cast<int>(block.size()) == 0);
    }
  }
}
