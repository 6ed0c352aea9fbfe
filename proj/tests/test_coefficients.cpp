#include <catch2/catch_amalgamated.hpp>

#include "sapphire/coefficients.hpp"

using namespace sapphire;

namespace {

GroupParams params(long r, long s, long t, long u) {
  return validate_params(Int(r), Int(s), Int(t), Int(u));
}

IntMatrix scalar(long v) {
  IntMatrix m(1, 1);
  m(0, 0) = Int(v);
  return m;
}

}  // namespace

TEST_CASE("coefficient expression grammar") {
  GroupParams P = params(1, 2, -1, -1);

  SECTION("trivial integers") {
    CoefficientModule A = parse_coefficient(P, "Z");
    REQUIRE(A.modulus == Int(0));
    REQUIRE(A.n == 1);
    REQUIRE(A.act_a1(0, 0) == Int(1));
    REQUIRE(A.label == "Z");
  }

  SECTION("sign characters") {
    CoefficientModule A = parse_coefficient(P, "Zeta:-1,1,-1");
    REQUIRE(A.modulus == Int(0));
    REQUIRE(A.act_a1(0, 0) == Int(-1));
    REQUIRE(A.act_b1(0, 0) == Int(1));
    REQUIRE(A.act_a2(0, 0) == Int(-1));
    REQUIRE(parse_coefficient(P, "Zeta:+1,-1,+1").act_b1(0, 0) == Int(-1));
  }

  SECTION("prime fields") {
    CoefficientModule A = parse_coefficient(P, "Zp:5");
    REQUIRE(A.modulus == Int(5));
    REQUIRE(A.n == 1);
    REQUIRE(A.is_torsion());
    REQUIRE(!A.is_zero_module());
  }

  SECTION("tensor expressions, including bare commas in Zeta arguments") {
    REQUIRE(parse_coefficient(P, "tensor(Z,Zp:3)").modulus == Int(3));
    CoefficientModule T = parse_coefficient(P, "tensor(Zeta:1,1,-1,Zeta:-1,1,1)");
    REQUIRE(T.modulus == Int(0));
    REQUIRE(T.n == 1);
    // signs multiply
    REQUIRE(T.act_a1(0, 0) == Int(-1));
    REQUIRE(T.act_b1(0, 0) == Int(1));
    REQUIRE(T.act_a2(0, 0) == Int(-1));
    REQUIRE(parse_coefficient(P, "tensor(Zp:4,tensor(Z,Zp:6))").modulus == Int(2));
    REQUIRE(parse_coefficient(P, " tensor( Z , Zp:7 ) ").modulus == Int(7));
  }

  SECTION("malformed expressions are rejected") {
    REQUIRE_THROWS_AS(parse_coefficient(P, "Q"), InvalidModule);
    REQUIRE_THROWS_AS(parse_coefficient(P, "Zeta:1,1"), InvalidModule);
    REQUIRE_THROWS_AS(parse_coefficient(P, "Zeta:2,1,1"), InvalidModule);
    REQUIRE_THROWS_AS(parse_coefficient(P, "Zeta:1,1,-1,1"), InvalidModule);
    REQUIRE_THROWS_AS(parse_coefficient(P, "Zp:x"), InvalidModule);
    REQUIRE_THROWS_AS(parse_coefficient(P, "Zp:1"), InvalidModule);
    REQUIRE_THROWS_AS(parse_coefficient(P, "tensor(Z)"), InvalidModule);
    REQUIRE_THROWS_AS(parse_coefficient(P, "tensor(Z,Q)"), InvalidModule);
  }

  SECTION("character constraints reach the parser") {
    GroupParams Q = params(1, 1, -2, -1);  // s odd
    REQUIRE_THROWS_AS(parse_coefficient(Q, "Zeta:1,-1,1"), InvalidCharacter);
    REQUIRE_NOTHROW(parse_coefficient(P, "Zeta:1,-1,1"));  // s = 2
  }
}

TEST_CASE("module constructors validate the relations") {
  GroupParams P = params(1, 1, -2, -1);

  SECTION("unit determinant is required") {
    REQUIRE_THROWS_AS(module_free(P, scalar(1), scalar(2), scalar(1)), InvalidModule);
    REQUIRE_THROWS_AS(module_torsion(P, Int(4), scalar(1), scalar(2), scalar(1)),
                      InvalidModule);
    // 3 is a unit mod 4, and 3 = -1 needs s even for the square relation
    GroupParams Q = params(1, 2, -1, -1);
    REQUIRE_NOTHROW(module_torsion(Q, Int(4), scalar(1), scalar(3), scalar(1)));
  }

  SECTION("relations are enforced") {
    // b1 -> -1 violates a2^2 = a1^{2r} b1^s when s is odd.
    REQUIRE_THROWS_AS(module_free(P, scalar(1), scalar(-1), scalar(1)), InvalidModule);
    GroupParams Q = params(1, 2, -1, -1);
    REQUIRE_NOTHROW(module_free(Q, scalar(1), scalar(-1), scalar(1)));
  }

  SECTION("block modules from two characters") {
    GroupParams Q = params(1, 2, -1, -1);
    IntMatrix A1 = IntMatrix::Zero(2, 2), B1 = IntMatrix::Zero(2, 2),
              A2 = IntMatrix::Zero(2, 2);
    A1(0, 0) = Int(1);
    A1(1, 1) = Int(-1);
    B1(0, 0) = Int(1);
    B1(1, 1) = Int(1);
    A2(0, 0) = Int(-1);
    A2(1, 1) = Int(1);
    CoefficientModule M = module_free(Q, A1, B1, A2);
    REQUIRE(M.n == 2);
    GroupElement g = multiply(Q, GroupElement::generator(Gen::a2),
                              GroupElement::xy(Int(1), Int(1)));
    IntMatrix rep = represent_element(M, g);
    REQUIRE(rep(0, 0) == Int(-1));  // character (1,1,-1) on a2 x y
    REQUIRE(rep(1, 1) == Int(1));   // x = a1^2 acts trivially under (-1,1,1)
    REQUIRE(rep(0, 1) == Int(0));
  }
}

TEST_CASE("tensor modules") {
  GroupParams P = params(1, 2, -1, -1);
  CoefficientModule Z = module_trivial_Z();
  CoefficientModule Z4 = module_Zp(Int(4));
  CoefficientModule Z6 = module_Zp(Int(6));

  SECTION("moduli combine by gcd with 0 as identity") {
    REQUIRE(tensor(P, Z, Z).modulus == Int(0));
    REQUIRE(tensor(P, Z, Z4).modulus == Int(4));
    REQUIRE(tensor(P, Z4, Z6).modulus == Int(2));
  }

  SECTION("coprime torsion gives the zero module") {
    CoefficientModule T = tensor(P, module_Zp(Int(2)), module_Zp(Int(3)));
    REQUIRE(T.modulus == Int(1));
    REQUIRE(T.is_zero_module());
  }

  SECTION("diagonal action multiplies the factors") {
    CoefficientModule e1 = module_character(P, make_character(P, 1, 1, -1));
    CoefficientModule e2 = module_character(P, make_character(P, -1, 1, 1));
    CoefficientModule T = tensor(P, e1, e2);
    GroupElement a2 = GroupElement::generator(Gen::a2);
    REQUIRE(represent_element(T, a2)(0, 0) ==
            represent_element(e1, a2)(0, 0) * represent_element(e2, a2)(0, 0));
  }
}

TEST_CASE("representation is a ring homomorphism") {
  GroupParams P = params(3, 2, -1, -1);
  CoefficientModule A = module_character(P, make_character(P, -1, -1, 1));
  GroupElement g = multiply(P, GroupElement::generator(Gen::a1),
                            GroupElement::xy(Int(0), Int(1)));
  GroupElement h = multiply(P, GroupElement::generator(Gen::a2),
                            GroupElement::xy(Int(-1), Int(2)));

  SECTION("multiplicative on group elements") {
    REQUIRE(represent_element(A, multiply(P, g, h)) ==
            IntMatrix(represent_element(A, g) * represent_element(A, h)));
  }

  SECTION("additive on ring elements") {
    GroupRingElement e = GroupRingElement(g, Int(2)) - GroupRingElement(h, Int(1));
    REQUIRE(represent(A, e)(0, 0) ==
            Int(2) * represent_element(A, g)(0, 0) - represent_element(A, h)(0, 0));
  }

  SECTION("torsion entries stay reduced") {
    CoefficientModule B = module_Zp(Int(3));
    GroupRingElement e = GroupRingElement(Int(5));  // 5 = 2 mod 3
    REQUIRE(represent(B, e)(0, 0) == Int(2));
  }

  SECTION("action helpers") {
    CoefficientModule B = module_Zp(Int(5));
    IntMatrix two = scalar(2);
    REQUIRE(action_inverse(B, two)(0, 0) == Int(3));  // 2 * 3 = 6 = 1 mod 5
    REQUIRE(action_power(B, two, Int(-1))(0, 0) == Int(3));
    REQUIRE(action_power(B, two, Int(4))(0, 0) == Int(1));
  }
}
