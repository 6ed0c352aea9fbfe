#include "sapphire/verify.hpp"

#include <array>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "sapphire/coefficients.hpp"
#include "sapphire/diagonal.hpp"
#include "sapphire/group.hpp"
#include "sapphire/group_ring.hpp"
#include "sapphire/homology.hpp"
#include "sapphire/products.hpp"
#include "sapphire/resolution.hpp"

namespace sapphire {

bool VerificationReport::all_passed() const { return failures() == 0; }

long VerificationReport::failures() const {
  long n = 0;
  for (const auto& c : checks)
    if (!c.pass) ++n;
  return n;
}

namespace {

constexpr std::array<std::array<int, 4>, 4> kPanel = {
    {{1, 2, -1, -1}, {1, 1, -2, -1}, {3, 2, -1, -1}, {1, 1, -5, -4}}};

std::string tag(const GroupParams& P) {
  std::ostringstream os;
  os << " [" << P.r() << "," << P.s() << "," << P.t() << "," << P.u() << "]";
  return os.str();
}

GroupRingElement one() { return GroupRingElement(Int(1)); }

GroupRingElement elem(const GroupElement& g) { return GroupRingElement(g, 1); }

Word relator_word(const GroupParams& P, int j) {
  if (j == 0) return {{Gen::a1, Int(1)}, {Gen::b1, Int(1)}, {Gen::a1, Int(-1)}, {Gen::b1, Int(1)}};
  if (j == 1) return {{Gen::a1, Int(2) * P.r()}, {Gen::b1, P.s()}, {Gen::a2, Int(-2)}};
  return {{Gen::a2, Int(1)},  {Gen::a1, Int(2) * P.t()}, {Gen::b1, P.u()},
          {Gen::a2, Int(-1)}, {Gen::a1, Int(2) * P.t()}, {Gen::b1, P.u()}};
}

bool s_odd(const GroupParams& P) { return !mod_floor(P.s(), Int(2)).is_zero(); }

struct Suite {
  std::mt19937_64 rng;
  std::vector<CheckResult> checks;

  explicit Suite(std::uint64_t seed) : rng(seed) {}

  void record(const std::string& name, bool pass, const std::string& detail = "") {
    checks.push_back({name, pass, pass ? std::string() : detail});
  }

  template <class F>
  void guarded(const std::string& name, F&& body) {
    try {
      body();
    } catch (const std::exception& e) {
      record(name, false, std::string("exception: ") + e.what());
    }
  }

  int rand_int(int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    return d(rng);
  }

  // Random word of at most 4 syllables with |exponent| <= 3 (letter length
  // at most 12).
  Word random_word() {
    Word w;
    int syllables = rand_int(0, 4);
    for (int k = 0; k < syllables; ++k) {
      Gen g = static_cast<Gen>(rand_int(0, 2));
      int e = rand_int(-3, 3);
      if (e == 0) e = 1;
      w.push_back({g, Int(e)});
    }
    return w;
  }

  GroupElement random_element(const GroupParams& P) { return evaluate_word(P, random_word()); }

  GroupRingElement random_ring_element(const GroupParams& P) {
    GroupRingElement e;
    int terms = rand_int(1, 4);
    for (int k = 0; k < terms; ++k) e.add_term(random_element(P), Int(rand_int(-3, 3)));
    return e;
  }
};

void group_checks(Suite& S, const GroupParams& P) {
  const std::string T = tag(P);

  S.guarded("group law fuzz (500 triples)" + T, [&] {
    bool ok = true;
    std::string why;
    for (int n = 0; n < 500 && ok; ++n) {
      GroupElement g = S.random_element(P);
      GroupElement h = S.random_element(P);
      GroupElement k = S.random_element(P);
      if (multiply(P, multiply(P, g, h), k) != multiply(P, g, multiply(P, h, k))) {
        ok = false;
        why = "associativity";
      }
      if (!multiply(P, g, inverse(P, g)).is_identity() ||
          !multiply(P, inverse(P, g), g).is_identity()) {
        ok = false;
        why = "inverse";
      }
      const auto& w = multiply(P, g, h).word();
      for (size_t i = 1; i < w.size(); ++i)
        if (w[i] == w[i - 1]) {
          ok = false;
          why = "normal-form word not alternating";
        }
    }
    S.record("group law fuzz (500 triples)" + T, ok, why);
  });

  S.guarded("powers match repeated products" + T, [&] {
    bool ok = true;
    for (int n = 0; n < 25 && ok; ++n) {
      GroupElement g = S.random_element(P);
      GroupElement acc;
      for (int k = 1; k <= 4; ++k) {
        acc = multiply(P, acc, g);
        if (power(P, g, Int(k)) != acc || power(P, g, Int(-k)) != inverse(P, acc)) ok = false;
      }
    }
    for (Gen g : {Gen::a1, Gen::b1, Gen::a2})
      for (int k = -5; k <= 5; ++k)
        if (generator_power(P, g, Int(k)) !=
            power(P, GroupElement::generator(g), Int(k)))
          ok = false;
    S.record("powers match repeated products" + T, ok);
  });

  S.guarded("conjugation matrices match the group law" + T, [&] {
    bool ok = true;
    GroupElement v = multiply(P, inverse(P, GroupElement::generator(Gen::a1)),
                              GroupElement::generator(Gen::a2));
    const std::array<std::pair<ConjGen, GroupElement>, 3> cases = {
        {{ConjGen::a1, GroupElement::generator(Gen::a1)},
         {ConjGen::a2, GroupElement::generator(Gen::a2)},
         {ConjGen::v, v}}};
    for (int n = 0; n < 50 && ok; ++n) {
      Int i(S.rand_int(-5, 5)), j(S.rand_int(-5, 5));
      for (const auto& [cg, g] : cases) {
        ExpPair e = conjugate_exponents(P, cg, {i, j});
        GroupElement lhs =
            multiply(P, multiply(P, g, GroupElement::xy(i, j)), inverse(P, g));
        if (lhs != GroupElement::xy(e.first, e.second)) ok = false;
      }
    }
    S.record("conjugation matrices match the group law" + T, ok);
  });

  S.guarded("relators evaluate to the identity" + T, [&] {
    bool ok = true;
    for (int j = 0; j < 3; ++j)
      if (!evaluate_word(P, relator_word(P, j)).is_identity()) ok = false;
    S.record("relators evaluate to the identity" + T, ok);
  });

  S.guarded("second normal form round trip" + T, [&] {
    bool ok = true;
    for (int n = 0; n < 200 && ok; ++n) {
      GroupElement g = S.random_element(P);
      if (from_nf4(P, to_nf4(P, g)) != g) ok = false;
    }
    for (int n = 0; n < 100 && ok; ++n) {
      NF4Element e{Int(S.rand_int(-4, 4)), Int(S.rand_int(-4, 4)), Int(S.rand_int(-4, 4)),
                   S.rand_int(0, 1)};
      if (to_nf4(P, from_nf4(P, e)) != e) ok = false;
    }
    S.record("second normal form round trip" + T, ok);
  });

  S.guarded("characters are multiplicative" + T, [&] {
    bool ok = true;
    std::vector<Character> chis = {make_character(P, 1, 1, -1), make_character(P, -1, 1, 1),
                                   make_character(P, -1, 1, -1)};
    if (mod_floor(P.s(), Int(2)).is_zero()) {
      chis.push_back(make_character(P, 1, -1, 1));
    } else {
      try {
        make_character(P, 1, -1, 1);
        ok = false;  // must reject b1 -> -1 when s is odd
      } catch (const InvalidCharacter&) {
      }
    }
    for (const auto& chi : chis)
      for (int n = 0; n < 100 && ok; ++n) {
        GroupElement g = S.random_element(P), h = S.random_element(P);
        if (character_value(chi, multiply(P, g, h)) !=
            character_value(chi, g) * character_value(chi, h))
          ok = false;
      }
    S.record("characters are multiplicative" + T, ok);
  });
}

void ring_checks(Suite& S, const GroupParams& P) {
  const std::string T = tag(P);

  S.guarded("fox fundamental identity" + T, [&] {
    bool ok = true;
    for (int n = 0; n < 100 && ok; ++n) {
      Word w = S.random_word();
      GroupRingElement sum;
      for (Gen g : {Gen::a1, Gen::b1, Gen::a2})
        sum += ring_multiply(P, fox_derivative(P, w, g),
                             elem(GroupElement::generator(g)) - one());
      if (sum != elem(evaluate_word(P, w)) - one()) ok = false;
    }
    S.record("fox fundamental identity" + T, ok);
  });

  S.guarded("fox decomposition recombines" + T, [&] {
    bool ok = true;
    for (int n = 0; n < 100 && ok; ++n) {
      GroupRingElement e = S.random_ring_element(P);
      e -= GroupRingElement(augmentation(e));
      FoxDecomposition d = fox_decompose(P, e);
      GroupRingElement back =
          ring_multiply(P, d.a1, elem(GroupElement::generator(Gen::a1)) - one()) +
          ring_multiply(P, d.b1, elem(GroupElement::generator(Gen::b1)) - one()) +
          ring_multiply(P, d.a2, elem(GroupElement::generator(Gen::a2)) - one());
      if (back != e) ok = false;
    }
    S.record("fox decomposition recombines" + T, ok);
  });

  S.guarded("antipode is an involution and anti-homomorphism" + T, [&] {
    bool ok = true;
    for (int n = 0; n < 50 && ok; ++n) {
      GroupRingElement a = S.random_ring_element(P), b = S.random_ring_element(P);
      if (antipode(P, antipode(P, a)) != a) ok = false;
      if (antipode(P, ring_multiply(P, a, b)) !=
          ring_multiply(P, antipode(P, b), antipode(P, a)))
        ok = false;
    }
    S.record("antipode is an involution and anti-homomorphism" + T, ok);
  });
}

void resolution_checks(Suite& S, const ResolutionData& R) {
  const GroupParams& P = R.params;
  const std::string T = tag(P);

  S.guarded("d1.d2 = 0" + T,
            [&] { S.record("d1.d2 = 0" + T, is_zero(compose(P, R.d1, R.d2))); });
  S.guarded("d2.d3 = 0" + T,
            [&] { S.record("d2.d3 = 0" + T, is_zero(compose(P, R.d2, R.d3))); });

  S.guarded("eps.d1 = 0" + T, [&] {
    bool ok = true;
    for (const auto& e : R.d1[0])
      if (!augmentation(e).is_zero()) ok = false;
    S.record("eps.d1 = 0" + T, ok);
  });

  S.guarded("eps(X0) = eps(Y0) = eps(Z0) = 0" + T, [&] {
    S.record("eps(X0) = eps(Y0) = eps(Z0) = 0" + T,
             augmentation(R.X0).is_zero() && augmentation(R.Y0).is_zero() &&
                 augmentation(R.Z0).is_zero());
  });

  // Literal check of the linear system that (X0, Y0, Z0) solves, built from
  // scratch with Fox power sums rather than read back from d2.
  S.guarded("(X0,Y0,Z0) solve the degree-3 system" + T, [&] {
    auto gp = [&](Gen g, const Int& n) { return elem(generator_power(P, g, n)); };
    auto mul = [&](const GroupRingElement& x, const GroupRingElement& y) {
      return ring_multiply(P, x, y);
    };
    GroupRingElement da1_2r = fox_power(P, GroupElement::generator(Gen::a1), Int(2) * P.r());
    GroupRingElement da1_2t = fox_power(P, GroupElement::generator(Gen::a1), Int(2) * P.t());
    GroupRingElement db1_s = fox_power(P, GroupElement::generator(Gen::b1), P.s());
    GroupRingElement db1_u = fox_power(P, GroupElement::generator(Gen::b1), P.u());
    GroupRingElement e1 =
        mul(R.X0, one() - gp(Gen::b1, Int(-1))) + mul(R.Y0, da1_2r) +
        mul(R.Z0, mul(gp(Gen::a2, Int(1)), da1_2t) +
                      mul(mul(gp(Gen::a1, Int(-2) * P.t()), gp(Gen::b1, -P.u())), da1_2t));
    GroupRingElement e2 =
        mul(R.X0, gp(Gen::a1, Int(1)) + gp(Gen::b1, Int(-1))) +
        mul(R.Y0, mul(gp(Gen::a1, Int(2) * P.r()), db1_s)) +
        mul(R.Z0, mul(mul(gp(Gen::a2, Int(1)), gp(Gen::a1, Int(2) * P.t())), db1_u) +
                      mul(gp(Gen::b1, -P.u()), db1_u));
    GroupRingElement e3 =
        mul(R.Y0, -(gp(Gen::a2, Int(1)) + one())) +
        mul(R.Z0, one() - mul(gp(Gen::a1, Int(-2) * P.t()), gp(Gen::b1, -P.u())));
    S.record("(X0,Y0,Z0) solve the degree-3 system" + T,
             e1.is_zero() && e2.is_zero() && e3.is_zero());
  });

  S.guarded("d2 columns are relator fox derivatives" + T, [&] {
    bool ok = true;
    const std::array<Gen, 3> gens = {Gen::a1, Gen::b1, Gen::a2};
    for (int j = 0; j < 3; ++j) {
      Word w = relator_word(P, j);
      for (int i = 0; i < 3; ++i)
        if (fox_derivative(P, w, gens[static_cast<size_t>(i)]) !=
            R.d2[static_cast<size_t>(i)][static_cast<size_t>(j)])
          ok = false;
    }
    S.record("d2 columns are relator fox derivatives" + T, ok);
  });

  S.guarded("homotopy identity d1 s0 + s(-1) eps = id (200 samples)" + T, [&] {
    bool ok = true;
    for (int n = 0; n < 200 && ok; ++n) {
      GroupElement g = S.random_element(P);
      FreeVector sv = s0(P, elem(g));
      FreeVector dv = apply_differential(R, sv);
      if (dv.coords[0] != elem(g) - one()) ok = false;
    }
    S.record("homotopy identity d1 s0 + s(-1) eps = id (200 samples)" + T, ok);
  });
}

void diagonal_checks(Suite& S, const ResolutionData& R) {
  const GroupParams& P = R.params;
  const std::string T = tag(P);

  S.guarded("delta1 counits and degree-0 compatibility" + T, [&] {
    bool ok = true;
    for (int b = 0; b < 3 && ok; ++b) {
      Delta1Value dv = delta1(R, basis_vector(1, b));
      // (id (x) eps) of the (1,0) part and (eps (x) id) of the (0,1) part
      // both recover the basis chain.
      for (int i = 0; i < 3; ++i) {
        GroupRingElement left, right;
        for (const auto& [gh, c] : dv.c10.coords[static_cast<size_t>(i)][0].terms())
          left.add_term(gh.first, c);
        for (const auto& [gh, c] : dv.c01.coords[0][static_cast<size_t>(i)].terms())
          right.add_term(gh.second, c);
        GroupRingElement expect = (i == b) ? one() : GroupRingElement();
        if (left != expect || right != expect) ok = false;
      }
      // Delta0 d1 = (d1 (x) id + id (x) d1) Delta1 in bidegree (0,0).
      RingTensor lhs = delta0(P, R.d1[0][static_cast<size_t>(b)]).coords[0][0];
      RingTensor rhs;
      for (int i = 0; i < 3; ++i) {
        for (const auto& [gh, c] : dv.c10.coords[static_cast<size_t>(i)][0].terms())
          rhs += c * tensor_of(ring_multiply(P, elem(gh.first), R.d1[0][static_cast<size_t>(i)]),
                               elem(gh.second));
        for (const auto& [gh, c] : dv.c01.coords[0][static_cast<size_t>(i)].terms())
          rhs += c * tensor_of(elem(gh.first),
                               ring_multiply(P, elem(gh.second), R.d1[0][static_cast<size_t>(i)]));
      }
      if (lhs != rhs) ok = false;
    }
    S.record("delta1 counits and degree-0 compatibility" + T, ok);
  });

  S.guarded("handel recursion matches closed-form delta11" + T, [&] {
    bool ok = true;
    for (int j = 0; j < 3; ++j)
      if (handel_delta11(R, j) != delta11(R, j)) ok = false;
    S.record("handel recursion matches closed-form delta11" + T, ok);
  });
}

AbelianInvariants torsion_only(std::vector<int> ds) {
  AbelianInvariants a;
  for (int d : ds) a.torsion.push_back(Int(d));
  return a;
}

AbelianInvariants free_part(long k) {
  AbelianInvariants a;
  a.free_rank = k;
  return a;
}

void homology_checks(Suite& S, const ResolutionData& R) {
  const GroupParams& P = R.params;
  const std::string T = tag(P);
  long t_abs = to_long(abs(P.t()));
  long r_ = to_long(P.r());
  long u_abs = to_long(abs(P.u()));
  long s_ = to_long(P.s());

  // H^2(G;Z) and H_1(G;Z) share the section-2 formula.
  AbelianInvariants h1z = s_odd(P) ? torsion_only({4, static_cast<int>(4 * t_abs)})
                                   : torsion_only({2, 2, static_cast<int>(4 * t_abs)});

  S.guarded("integral cohomology oracle" + T, [&] {
    auto H = cohomology(R, module_trivial_Z());
    bool ok = H[0] == free_part(1) && H[1] == AbelianInvariants{} && H[2] == h1z &&
              H[3] == free_part(1);
    std::ostringstream why;
    why << "got " << H[0].to_text() << ", " << H[1].to_text() << ", " << H[2].to_text()
        << ", " << H[3].to_text();
    S.record("integral cohomology oracle" + T, ok, why.str());
  });

  S.guarded("first integral homology formula" + T, [&] {
    auto H = homology(R, module_trivial_Z());
    bool ok = H[0] == free_part(1) && H[1] == h1z && H[3] == free_part(1);
    std::ostringstream why;
    why << "got H1 = " << H[1].to_text();
    S.record("first integral homology formula" + T, ok, why.str());
  });

  S.guarded("character cohomology oracles" + T, [&] {
    bool ok = true;
    std::string why;
    // H2 oracle: Z_{4k} for s odd, Z_{2k} + Z_2 for s even (k = r or |u|).
    auto expect2 = [&](long k, const char* label, const AbelianInvariants& got) {
      AbelianInvariants want =
          s_odd(P) ? torsion_only({static_cast<int>(4 * k)})
                   : torsion_only({2, static_cast<int>(2 * k)});
      if (got != want) {
        ok = false;
        why = std::string(label) + ": got " + got.to_text() + ", want " + want.to_text();
      }
    };
    {
      auto H = cohomology(R, module_character(P, make_character(P, 1, 1, -1)));
      if (H[0] != AbelianInvariants{} || H[1] != torsion_only({2}) ||
          H[3] != torsion_only({2}))
        ok = false;
      expect2(r_, "eta1 H2", H[2]);
    }
    {
      auto H = cohomology(R, module_character(P, make_character(P, -1, 1, 1)));
      if (H[0] != AbelianInvariants{} || H[1] != torsion_only({2}) ||
          H[3] != torsion_only({2}))
        ok = false;
      expect2(u_abs, "eta2 H2", H[2]);
    }
    {
      auto H = cohomology(R, module_character(P, make_character(P, -1, 1, -1)));
      AbelianInvariants h1;
      h1.free_rank = 1;
      h1.torsion.push_back(Int(2));
      AbelianInvariants h2;
      h2.free_rank = 1;
      if (s_ > 1) h2.torsion.push_back(Int(s_));
      if (H[0] != AbelianInvariants{} || H[1] != h1 || H[2] != h2 ||
          H[3] != torsion_only({2}))
        ok = false;
    }
    if (!s_odd(P)) {
      for (int ea1 : {1, -1})
        for (int ea2 : {1, -1}) {
          auto H = cohomology(R, module_character(P, make_character(P, ea1, -1, ea2)));
          if (H[0] != AbelianInvariants{} || H[1] != torsion_only({2}) ||
              H[2] != torsion_only({2, 2}) || H[3] != torsion_only({2}))
            ok = false;
        }
    }
    S.record("character cohomology oracles" + T, ok, why);
  });

  S.guarded("mod-p cohomology formula (p = 3, 5)" + T, [&] {
    bool ok = true;
    for (int p : {3, 5}) {
      auto H = cohomology(R, module_Zp(Int(p)));
      bool divides = mod_floor(P.t(), Int(p)).is_zero();
      AbelianInvariants zp = torsion_only({p});
      AbelianInvariants mid = divides ? zp : AbelianInvariants{};
      if (H[0] != zp || H[1] != mid || H[2] != mid || H[3] != zp) ok = false;
    }
    S.record("mod-p cohomology formula (p = 3, 5)" + T, ok);
  });
}

void duality_checks(Suite& S, const ResolutionData& R) {
  const GroupParams& P = R.params;
  const std::string T = tag(P);
  S.guarded("duality H3 ~ H0 and H2 ~ H1" + T, [&] {
    bool ok = true;
    std::string why;
    std::vector<CoefficientModule> mods = {
        module_trivial_Z(), module_character(P, make_character(P, 1, 1, -1)),
        module_character(P, make_character(P, -1, 1, 1)),
        module_character(P, make_character(P, -1, 1, -1)), module_Zp(Int(5))};
    for (const auto& A : mods) {
      HomologyEngine e(R, A);
      if (e.cohomology(3).invariants() != e.homology(0).invariants() ||
          e.cohomology(2).invariants() != e.homology(1).invariants()) {
        ok = false;
        why = "module " + A.label;
      }
    }
    S.record("duality H3 ~ H0 and H2 ~ H1" + T, ok, why);
  });
}

void commutativity_checks(Suite& S, const ResolutionData& R) {
  const GroupParams& P = R.params;
  const std::string T = tag(P);
  S.guarded("cup_11 graded commutativity" + T, [&] {
    bool ok = true;
    std::vector<std::pair<CoefficientModule, CoefficientModule>> pairs;
    CoefficientModule e1 = module_character(P, make_character(P, 1, 1, -1));
    CoefficientModule e2 = module_character(P, make_character(P, -1, 1, 1));
    CoefficientModule e3 = module_character(P, make_character(P, -1, 1, -1));
    pairs.emplace_back(e3, e3);
    pairs.emplace_back(e1, e2);
    for (const auto& [A, B] : pairs) {
      HomologyEngine ea(R, A), eb(R, B);
      HomologyEngine et(R, tensor(P, A, B));
      for (const auto& u : ea.cohomology(1).generators())
        for (const auto& v : eb.cohomology(1).generators()) {
          IntVector uv = cup_11(ea, eb, u, v);
          IntVector vu = cup_11(eb, ea, v, u);
          IntVector sw = swap_tensor_coordinates(B.n, A.n, vu);
          if (!et.cohomology(2).classes_equal(uv, IntVector(-sw))) ok = false;
        }
    }
    S.record("cup_11 graded commutativity" + T, ok);
  });
}

// Product identities that the implemented diagonal satisfies; stated for
// s odd, in the generator classes [rho3*] and [rho1* + u rho3*] of H^2(G;Z).
void example_product_checks(Suite& S, const ResolutionData& R) {
  const GroupParams& P = R.params;
  const std::string T = tag(P);
  if (!s_odd(P)) return;

  S.guarded("twisted cup products" + T, [&] {
    CoefficientModule A = module_character(P, make_character(P, -1, 1, -1));
    HomologyEngine ea(R, A);
    HomologyEngine et(R, tensor(P, A, A));
    const Subquotient& H2 = et.cohomology(2);
    const Subquotient& H3 = et.cohomology(3);

    IntVector a2s(3), a12s(3), g1(3), g2(3);
    a2s << 0, 0, 1;        // alpha2*
    a12s << 1, 0, 1;       // alpha1* + alpha2*
    g1 << 0, 0, 1;         // rho3*
    g2 << 1, 0, P.u();     // rho1* + u rho3*
    std::vector<IntVector> gens = {g1, g2};

    Int o1 = H2.class_order(g1), o2 = H2.class_order(g2);
    S.record("generator orders in H2(G;Z)" + T,
             o1 == abs(Int(4) * P.t()) && o2 == Int(4));

    IntVector co = H2.express(cup_11(ea, ea, a2s, a2s), gens);
    S.record("[alpha2*]^2 = 2[rho1*+u.rho3*]" + T, co(0).is_zero() && co(1) == Int(2));

    co = H2.express(cup_11(ea, ea, a12s, a12s), gens);
    S.record("[alpha1*+alpha2*]^2 = 2t[rho3*] - 2(r-1)[rho1*+u.rho3*]" + T,
             co(0) == mod_floor(Int(2) * P.t(), o1) &&
                 co(1) == mod_floor(Int(-2) * (P.r() - Int(1)), o2));

    // The mixed product, frozen at the value the contracting-homotopy
    // recursion produces (the recursion is itself checked elsewhere).
    co = H2.express(cup_11(ea, ea, a2s, a12s), gens);
    S.record("[alpha2*].[alpha1*+alpha2*] matches the recursion value" + T,
             co(0).is_zero() && co(1) == Int(2));

    IntVector r13(3), r2v(3);
    r13 << 1, 0, 1;  // rho1* + rho3*
    r2v << 0, 1, 0;  // rho2*
    bool vanish = H3.is_boundary(cup_12(ea, ea, a12s, r13)) &&
                  H3.is_boundary(cup_12(ea, ea, a12s, r2v)) &&
                  H3.is_boundary(cup_12(ea, ea, a2s, r2v));
    S.record("torsion (1,2) products vanish in H3(G;Z)" + T, vanish);

    S.record("[alpha2*].[rho1*+rho3*] generates H3(G;Z)" + T,
             H3.generates(cup_12(ea, ea, a2s, r13)));

    IntVector rel(3);
    rel << 2, 1, Int(2) * P.u();
    S.record("[2rho1*+rho2*+2u.rho3*] = 0 in H2(G;Z)" + T, H2.is_boundary(rel));
  });

  // Mixed-character pairing facts that hold for every valid parameter tuple
  // with s odd.  The (1,1) products land in the 2-torsion of Z + Z_s, which
  // is trivial; the degree-0 pairing against [beta1 (x) 1] vanishes because
  // that class is 2u-torsion in H_1 = Z_{4|u|}, never a generator.
  S.guarded("mixed-character (1,1) products vanish" + T, [&] {
    CoefficientModule A = module_character(P, make_character(P, 1, 1, -1));
    CoefficientModule B = module_character(P, make_character(P, -1, 1, 1));
    ProductTable tab = product_table(R, A, B);
    bool ok = false;
    for (const auto& e : tab.entries)
      if (e.p == 1 && e.q == 1) {
        ok = true;
        for (long i = 0; i < e.result.size(); ++i)
          if (!e.result(i).is_zero()) ok = false;
      }
    S.record("mixed-character (1,1) products vanish" + T, ok);
  });

  S.guarded("cap against [beta1 (x) 1] vanishes in H_0" + T, [&] {
    CoefficientModule A = module_character(P, make_character(P, 1, 1, -1));
    CoefficientModule B = module_character(P, make_character(P, -1, 1, 1));
    HomologyEngine ea(R, A), eb(R, B), et(R, tensor(P, A, B));
    IntVector beta1(3);
    beta1 << 0, 1, 0;
    Int twice_u = Int(2) * P.u();
    bool torsion = eb.homology(1).classes_equal(IntVector(twice_u * beta1),
                                                IntVector::Zero(3));
    IntVector u1 = ea.cohomology(1).generators().at(0);
    IntVector c0(1);
    c0(0) = Int(0);
    for (long b = 0; b < 3; ++b) c0(0) += u1(b) * beta1(b);
    S.record("cap against [beta1 (x) 1] vanishes in H_0" + T,
             torsion && et.homology(0).is_boundary(c0));
  });

  S.guarded("cap realizes H^2 ~ H_1 over eta2" + T, [&] {
    CoefficientModule B = module_character(P, make_character(P, -1, 1, 1));
    HomologyEngine eb(R, B);
    const Subquotient& h2 = eb.cohomology(2);
    const Subquotient& h1 = eb.homology(1);
    bool ok = true;
    for (const auto& g : h2.generators())
      if (h1.class_order(cap_with_zeta(eb, 2, g)) != h2.class_order(g)) ok = false;
    S.record("cap realizes H^2 ~ H_1 over eta2" + T, ok);
  });
}

void modp_ring_checks(Suite& S, const ResolutionData& R) {
  const GroupParams& P = R.params;
  const std::string T = tag(P);
  if (!mod_floor(P.t(), Int(5)).is_zero()) return;
  S.guarded("mod-5 ring structure" + T, [&] {
    CoefficientModule A = module_Zp(Int(5));
    HomologyEngine e(R, A);
    HomologyEngine et(R, tensor(P, A, A));
    const auto& h1 = e.cohomology(1).generators();
    const auto& h2 = e.cohomology(2).generators();
    bool shape = h1.size() == 1 && h2.size() == 1;
    S.record("mod-5 H1 and H2 are cyclic" + T, shape);
    if (!shape) return;
    S.record("alpha^2 = 0 in H2(G;Z5)" + T,
             et.cohomology(2).is_boundary(cup_11(e, e, h1[0], h1[0])));
    S.record("alpha.beta generates H3(G;Z5)" + T,
             et.cohomology(3).generates(cup_12(e, e, h1[0], h2[0])));
  });
}

void torsion_oracle(Suite& S) {
  const std::string name = "torsion subquotient matches brute force";
  S.guarded(name, [&] {
    bool ok = true;
    std::string why;
    for (int m : {2, 3, 4}) {
      for (int trial = 0; trial < 4 && ok; ++trial) {
        IntMatrix out(2, 3);
        std::array<std::array<long, 3>, 2> outl{};
        for (int i = 0; i < 2; ++i)
          for (int j = 0; j < 3; ++j) {
            int v = S.rand_int(0, m - 1);
            out(i, j) = Int(v);
            outl[static_cast<size_t>(i)][static_cast<size_t>(j)] = v;
          }
        std::vector<std::array<long, 3>> ker;
        for (long v0 = 0; v0 < m; ++v0)
          for (long v1 = 0; v1 < m; ++v1)
            for (long v2 = 0; v2 < m; ++v2) {
              bool in_ker = true;
              for (int i = 0; i < 2; ++i) {
                long dot = outl[static_cast<size_t>(i)][0] * v0 +
                           outl[static_cast<size_t>(i)][1] * v1 +
                           outl[static_cast<size_t>(i)][2] * v2;
                if (dot % m != 0) in_ker = false;
              }
              if (in_ker) ker.push_back({v0, v1, v2});
            }
        int nin = S.rand_int(0, 3);
        IntMatrix in(3, nin);
        std::vector<std::array<long, 3>> ingens;
        for (int k = 0; k < nin; ++k) {
          auto v = ker[static_cast<size_t>(S.rand_int(0, static_cast<int>(ker.size()) - 1))];
          ingens.push_back(v);
          for (int i = 0; i < 3; ++i) in(i, k) = Int(v[static_cast<size_t>(i)]);
        }
        Subquotient H(out, in, Int(m));

        std::set<std::array<long, 3>> im;
        im.insert({0, 0, 0});
        bool grew = true;
        while (grew) {
          grew = false;
          std::vector<std::array<long, 3>> cur(im.begin(), im.end());
          for (const auto& e : cur)
            for (const auto& g : ingens) {
              std::array<long, 3> s{};
              for (int i = 0; i < 3; ++i)
                s[static_cast<size_t>(i)] =
                    (e[static_cast<size_t>(i)] + g[static_cast<size_t>(i)]) % m;
              if (im.insert(s).second) grew = true;
            }
        }
        long quot = static_cast<long>(ker.size() / im.size());

        const AbelianInvariants& inv = H.invariants();
        if (inv.free_rank != 0) {
          ok = false;
          why = "unexpected free part";
        }
        long order = 1;
        for (const auto& d : inv.torsion) order *= to_long(d);
        if (order != quot) {
          ok = false;
          why = "group order mismatch";
        }
        for (long d = 1; d <= m && ok; ++d) {
          long cnt = 0;
          for (const auto& v : ker) {
            std::array<long, 3> dv{};
            for (int i = 0; i < 3; ++i)
              dv[static_cast<size_t>(i)] = (d * v[static_cast<size_t>(i)]) % m;
            if (im.count(dv)) ++cnt;
          }
          long pred = 1;
          for (const auto& di : inv.torsion) pred *= to_long(gcd(Int(d), di));
          if (cnt != pred * static_cast<long>(im.size())) {
            ok = false;
            why = "order statistics mismatch";
          }
        }
      }
    }
    S.record(name, ok, why);
  });
}

}  // namespace

VerificationReport run_verification(std::uint64_t seed, bool inject_fault) {
  Suite S(seed);
  for (const auto& q : kPanel) {
    GroupParams P = validate_params(Int(q[0]), Int(q[1]), Int(q[2]), Int(q[3]));
    ResolutionData R = build_resolution(P);
    if (inject_fault) R.d2[0][0] = -R.d2[0][0];
    group_checks(S, P);
    ring_checks(S, P);
    resolution_checks(S, R);
    diagonal_checks(S, R);
    homology_checks(S, R);
    duality_checks(S, R);
    commutativity_checks(S, R);
    example_product_checks(S, R);
    modp_ring_checks(S, R);
  }
  torsion_oracle(S);
  VerificationReport rep;
  rep.checks = std::move(S.checks);
  return rep;
}

}  // namespace sapphire
