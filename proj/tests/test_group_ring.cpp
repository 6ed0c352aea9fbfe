#include <catch2/catch_amalgamated.hpp>

#include "sapphire/group_ring.hpp"

using namespace sapphire;

namespace {

GroupParams params(long r, long s, long t, long u) {
  return validate_params(Int(r), Int(s), Int(t), Int(u));
}

GroupRingElement ring(const GroupElement& g, long c = 1) {
  return GroupRingElement(g, Int(c));
}

GroupElement gen(Gen g) { return GroupElement::generator(g); }

}  // namespace

TEST_CASE("ring arithmetic") {
  GroupParams P = params(1, 2, -1, -1);
  GroupRingElement a1 = ring(gen(Gen::a1));
  GroupRingElement y = ring(GroupElement::xy(Int(0), Int(1)));

  SECTION("cancellation drops zero terms") {
    REQUIRE((a1 - a1).is_zero());
    REQUIRE((a1 + GroupRingElement(2) - (a1 - GroupRingElement(1))) ==
            GroupRingElement(3));
  }

  SECTION("coefficient lookup") {
    GroupRingElement e = Int(2) * a1 - y;
    REQUIRE(e.coefficient(gen(Gen::a1)) == Int(2));
    REQUIRE(e.coefficient(GroupElement::xy(Int(0), Int(1))) == Int(-1));
    REQUIRE(e.coefficient(GroupElement()) == Int(0));
  }

  SECTION("multiplication uses the group law") {
    // (a1 - 1)(a1 + 1) = x + a1 - a1 - 1 = x - 1
    GroupRingElement lhs = ring_multiply(P, a1 - GroupRingElement(1),
                                         a1 + GroupRingElement(1));
    REQUIRE(lhs == ring(GroupElement::xy(Int(1), Int(0))) - GroupRingElement(1));
  }

  SECTION("the ring is noncommutative") {
    // a1 y = a1*y but y a1 = a1*y^-1
    REQUIRE(ring_multiply(P, a1, y) != ring_multiply(P, y, a1));
  }

  SECTION("augmentation is the coefficient sum") {
    REQUIRE(augmentation(Int(2) * a1 - Int(3) * y) == Int(-1));
    REQUIRE(augmentation(GroupRingElement()) == Int(0));
  }
}

TEST_CASE("antipode") {
  GroupParams P = params(1, 1, -2, -1);
  GroupRingElement a2 = ring(gen(Gen::a2));
  GroupRingElement e = Int(2) * a2 - ring(GroupElement::xy(Int(1), Int(-1)), 3);

  SECTION("inverts group terms") {
    REQUIRE(antipode(P, ring(gen(Gen::a1))) == ring(inverse(P, gen(Gen::a1))));
  }

  SECTION("involution") { REQUIRE(antipode(P, antipode(P, e)) == e); }

  SECTION("anti-homomorphism") {
    GroupRingElement f = ring(gen(Gen::a1)) + GroupRingElement(1);
    REQUIRE(antipode(P, ring_multiply(P, e, f)) ==
            ring_multiply(P, antipode(P, f), antipode(P, e)));
  }
}

TEST_CASE("fox power sums") {
  GroupParams P = params(1, 2, -1, -1);
  GroupElement a1 = gen(Gen::a1);

  SECTION("closed forms") {
    // 1 + a1 + a1^2, with a1^2 = x
    GroupRingElement expect = GroupRingElement(1) + ring(a1) +
                              ring(GroupElement::xy(Int(1), Int(0)));
    REQUIRE(fox_power(P, a1, Int(3)) == expect);
    REQUIRE(fox_power(P, a1, Int(0)).is_zero());
    // -(a1^-1 + a1^-2)
    GroupRingElement neg = -(ring(inverse(P, a1)) +
                             ring(GroupElement::xy(Int(-1), Int(0))));
    REQUIRE(fox_power(P, a1, Int(-2)) == neg);
  }

  SECTION("telescoping identity g^n - 1 = fox_power(g,n) (g-1)") {
    GroupElement b1 = gen(Gen::b1);
    GroupElement v = multiply(P, gen(Gen::a2), GroupElement::xy(Int(1), Int(1)));
    for (long n : {-4L, -1L, 0L, 2L, 5L}) {
      for (const GroupElement& g : {a1, b1, v}) {
        GroupRingElement lhs = ring(power(P, g, Int(n))) - GroupRingElement(1);
        GroupRingElement rhs =
            ring_multiply(P, fox_power(P, g, Int(n)), ring(g) - GroupRingElement(1));
        REQUIRE(lhs == rhs);
      }
    }
  }
}

TEST_CASE("fox derivatives of words") {
  GroupParams P = params(1, 2, -1, -1);
  Word r1 = {{Gen::a1, Int(1)}, {Gen::b1, Int(1)}, {Gen::a1, Int(-1)}, {Gen::b1, Int(1)}};

  SECTION("derivatives of the commutation relator") {
    // d r1 / d a1 = 1 - y^-1, d r1 / d b1 = a1 + y^-1
    GroupRingElement y_inv = ring(GroupElement::xy(Int(0), Int(-1)));
    REQUIRE(fox_derivative(P, r1, Gen::a1) == GroupRingElement(1) - y_inv);
    REQUIRE(fox_derivative(P, r1, Gen::b1) == ring(gen(Gen::a1)) + y_inv);
    REQUIRE(fox_derivative(P, r1, Gen::a2).is_zero());
  }

  SECTION("product rule across concatenation") {
    Word w1 = {{Gen::a2, Int(1)}, {Gen::a1, Int(-2)}};
    Word w2 = {{Gen::b1, Int(2)}, {Gen::a2, Int(1)}};
    Word cat = w1;
    cat.insert(cat.end(), w2.begin(), w2.end());
    GroupRingElement u = ring(evaluate_word(P, w1));
    for (Gen g : {Gen::a1, Gen::b1, Gen::a2}) {
      GroupRingElement lhs = fox_derivative(P, cat, g);
      GroupRingElement rhs =
          fox_derivative(P, w1, g) + ring_multiply(P, u, fox_derivative(P, w2, g));
      REQUIRE(lhs == rhs);
    }
  }

  SECTION("fundamental identity") {
    Word w = {{Gen::a1, Int(3)}, {Gen::a2, Int(-1)}, {Gen::b1, Int(2)}};
    GroupRingElement sum;
    const std::array<Gen, 3> gens = {Gen::a1, Gen::b1, Gen::a2};
    for (Gen g : gens)
      sum += ring_multiply(P, fox_derivative(P, w, g),
                           ring(gen(g)) - GroupRingElement(1));
    REQUIRE(sum == ring(evaluate_word(P, w)) - GroupRingElement(1));
  }
}

TEST_CASE("fox decomposition") {
  GroupParams P = params(1, 1, -2, -1);

  SECTION("recombines augmentation-zero elements") {
    GroupElement a2x = multiply(P, gen(Gen::a2), GroupElement::xy(Int(1), Int(0)));
    GroupRingElement e = Int(2) * ring(a2x) - ring(GroupElement::xy(Int(0), Int(-3))) -
                         GroupRingElement(1);
    FoxDecomposition d = fox_decompose(P, e);
    GroupRingElement sum =
        ring_multiply(P, d.a1, ring(gen(Gen::a1)) - GroupRingElement(1)) +
        ring_multiply(P, d.b1, ring(gen(Gen::b1)) - GroupRingElement(1)) +
        ring_multiply(P, d.a2, ring(gen(Gen::a2)) - GroupRingElement(1));
    REQUIRE(sum == e);
  }

  SECTION("rejects nonzero augmentation") {
    REQUIRE_THROWS_AS(fox_decompose(P, ring(gen(Gen::a1))), AugmentationNonzero);
  }
}

TEST_CASE("ring rendering") {
  GroupParams P = params(1, 2, -1, -1);
  GroupElement a1y = multiply(P, gen(Gen::a1), GroupElement::xy(Int(0), Int(-1)));

  REQUIRE(render(GroupRingElement()) == "0");
  REQUIRE(render(GroupRingElement(-4)) == "-4");
  // Terms print in canonical element order: identity before longer words.
  REQUIRE(render(Int(2) * ring(a1y) - GroupRingElement(1)) == "-1 + 2*a1*y^-1");
  REQUIRE(render(-ring(GroupElement::xy(Int(0), Int(1)))) == "-y");
  REQUIRE(render(ring(gen(Gen::a2)) + ring(gen(Gen::a1))) == "a1 + a2");
}
