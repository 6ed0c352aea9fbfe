// Acceptance gate: one test case per published value or identity the engine
// must reproduce, one PASS/FAIL line each. All equalities are exact integer
// comparisons. Two assertions are expected to stay red; see the notes inline
// and README.md: they encode published identities that contradict the product
// structure every independent route in the verification suite confirms.
#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <random>
#include <set>
#include <string>

#include "sapphire/products.hpp"
#include "sapphire/verify.hpp"

using namespace sapphire;

namespace {

GroupParams params(long r, long s, long t, long u) {
  return validate_params(Int(r), Int(s), Int(t), Int(u));
}

AbelianInvariants inv(long free_rank, std::initializer_list<long> torsion) {
  AbelianInvariants a;
  a.free_rank = free_rank;
  for (long d : torsion) a.torsion.push_back(Int(d));
  return a;
}

IntVector vec(std::initializer_list<long> vals) {
  IntVector v(static_cast<long>(vals.size()));
  long i = 0;
  for (long x : vals) v(i++) = Int(x);
  return v;
}

const std::array<std::array<long, 4>, 4> kPanel = {
    {{1, 2, -1, -1}, {1, 1, -2, -1}, {3, 2, -1, -1}, {1, 1, -5, -4}}};

void report(int n, bool ok, const std::string& what) {
  std::printf("ACCEPTANCE %2d %s  %s\n", n, ok ? "PASS" : "FAIL", what.c_str());
  std::fflush(stdout);
}

}  // namespace

TEST_CASE("1: integral cohomology") {
  bool ok = true;
  {
    std::array<AbelianInvariants, 4> H =
        cohomology(build_resolution(params(1, 2, -1, -1)), module_trivial_Z());
    ok = ok && H[0] == inv(1, {}) && H[1] == inv(0, {}) &&
         H[2] == inv(0, {2, 2, 4}) && H[3] == inv(1, {});
  }
  {
    std::array<AbelianInvariants, 4> H =
        cohomology(build_resolution(params(1, 1, -2, -1)), module_trivial_Z());
    ok = ok && H[0] == inv(1, {}) && H[1] == inv(0, {}) &&
         H[2] == inv(0, {4, 8}) && H[3] == inv(1, {});
  }
  {
    std::array<AbelianInvariants, 4> H =
        cohomology(build_resolution(params(3, 2, -1, -1)), module_trivial_Z());
    ok = ok && H[2] == inv(0, {2, 2, 4});
  }
  report(1, ok, "integral cohomology (Z, 0, torsion, Z) on the reference tuples");
  REQUIRE(ok);
}

TEST_CASE("2: first integral homology") {
  bool ok = true;
  for (const auto& p : kPanel) {
    GroupParams P = params(p[0], p[1], p[2], p[3]);
    AbelianInvariants computed = homology(build_resolution(P), module_trivial_Z())[1];

    bool s_even = mod_floor(P.s(), Int(2)).is_zero();
    long four_t = to_long(abs(Int(4) * P.t()));
    AbelianInvariants closed =
        s_even ? inv(0, {2, 2, four_t}) : inv(0, {4, four_t});

    // Independent route: Smith form of the abelianized relator matrix.
    IntMatrix M(3, 3);
    M << Int(0), Int(2) * P.r(), Int(4) * P.t(),
         Int(2), P.s(),          Int(2) * P.u(),
         Int(0), Int(-2),        Int(0);
    SmithResult S = smith_normal_form(M);
    AbelianInvariants ab;
    ab.free_rank = 3 - S.rank;
    for (long i = 0; i < S.rank; ++i)
      if (S.D(i, i) > Int(1)) ab.torsion.push_back(S.D(i, i));

    ok = ok && computed == closed && computed == ab;
  }
  report(2, ok, "H_1(G;Z) closed form and abelianization agree on the panel");
  REQUIRE(ok);
}

TEST_CASE("3: cohomology for a b1 -> -1 character") {
  GroupParams P = params(1, 2, -1, -1);
  CoefficientModule A = module_character(P, make_character(P, 1, -1, 1));
  std::array<AbelianInvariants, 4> H = cohomology(build_resolution(P), A);
  bool ok = H[0] == inv(0, {}) && H[1] == inv(0, {2}) &&
            H[2] == inv(0, {2, 2}) && H[3] == inv(0, {2});
  report(3, ok, "chi = (+1,-1,+1) on (1,2,-1,-1) gives (0, Z_2, Z_2+Z_2, Z_2)");
  REQUIRE(ok);
}

TEST_CASE("4: character cohomology table") {
  bool ok = true;
  {
    GroupParams P = params(1, 1, -2, -1);
    ResolutionData R = build_resolution(P);
    auto H = [&](int a1, int a2) {
      return cohomology(R, module_character(P, make_character(P, a1, 1, a2)));
    };
    std::array<AbelianInvariants, 4> h1 = H(1, -1);   // eta1
    std::array<AbelianInvariants, 4> h2 = H(-1, 1);   // eta2
    std::array<AbelianInvariants, 4> h3 = H(-1, -1);  // eta3
    for (const auto& h : {h1, h2, h3})
      ok = ok && h[0] == inv(0, {}) && h[3] == inv(0, {2});
    ok = ok && h1[1] == inv(0, {2}) && h1[2] == inv(0, {4});  // Z_{4r}, s odd
    ok = ok && h2[1] == inv(0, {2}) && h2[2] == inv(0, {4});  // Z_{4|u|}, s odd
    ok = ok && h3[1] == inv(1, {2}) && h3[2] == inv(1, {});   // Z_s trivial
  }
  {
    GroupParams P = params(1, 2, -1, -1);
    ResolutionData R = build_resolution(P);
    auto H = [&](int a1, int a2) {
      return cohomology(R, module_character(P, make_character(P, a1, 1, a2)));
    };
    std::array<AbelianInvariants, 4> h1 = H(1, -1);
    std::array<AbelianInvariants, 4> h3 = H(-1, -1);
    for (const auto& h : {h1, h3})
      ok = ok && h[0] == inv(0, {}) && h[3] == inv(0, {2});
    ok = ok && h1[2] == inv(0, {2, 2});                      // Z_{2r} + Z_2
    ok = ok && h3[1] == inv(1, {2}) && h3[2] == inv(1, {2});  // Z + Z_s
  }
  report(4, ok, "sign-character cohomology matches the published table");
  REQUIRE(ok);
}

TEST_CASE("5: mod-p cohomology and ring structure") {
  GroupParams P = params(1, 1, -5, -4);
  ResolutionData R = build_resolution(P);
  bool ok = true;
  {
    CoefficientModule A = module_Zp(Int(5));
    HomologyEngine e(R, A);
    HomologyEngine et(R, tensor(P, A, A));
    for (int k = 0; k < 4; ++k)
      ok = ok && e.cohomology(k).invariants() == inv(0, {5});  // 5 | t
    IntVector alpha = e.cohomology(1).generators().at(0);
    IntVector beta = e.cohomology(2).generators().at(0);
    ok = ok && et.cohomology(2).is_boundary(cup_11(e, e, alpha, alpha));
    ok = ok && et.cohomology(3).generates(cup_12(e, e, alpha, beta));
    // beta^2 would live in degree 4, which the length-3 resolution does not
    // have: the relation holds vacuously.
    bool degree4_absent = false;
    try {
      (void)e.cohomology(4);
    } catch (const DegreeOutOfRange&) {
      degree4_absent = true;
    }
    ok = ok && degree4_absent;
  }
  {
    std::array<AbelianInvariants, 4> H = cohomology(R, module_Zp(Int(3)));
    ok = ok && H[0] == inv(0, {3}) && H[1] == inv(0, {}) && H[2] == inv(0, {}) &&
         H[3] == inv(0, {3});
  }
  report(5, ok, "Z_5 is (Z_5)^4 with alpha^2 = 0, alpha.beta top; Z_3 is (Z_3,0,0,Z_3)");
  REQUIRE(ok);
}

TEST_CASE("6: twisted cup-product identities") {
  GroupParams P = params(1, 1, -2, -1);
  ResolutionData R = build_resolution(P);
  CoefficientModule A = module_character(P, make_character(P, -1, 1, -1));
  HomologyEngine ea(R, A);
  HomologyEngine et(R, tensor(P, A, A));  // trivial Z coefficients
  const Subquotient& H2 = et.cohomology(2);
  const Subquotient& H3 = et.cohomology(3);

  IntVector a2s = vec({0, 0, 1});    // alpha2*
  IntVector a12s = vec({1, 0, 1});   // alpha1* + alpha2*
  IntVector g1 = vec({0, 0, 1});     // rho3*, order |4t| = 8
  IntVector g2 = vec({1, 0, -1});    // rho1* + u rho3*, order 4
  std::vector<IntVector> gens = {g1, g2};
  bool ok = H2.class_order(g1) == Int(8) && H2.class_order(g2) == Int(4);

  ok = ok && H2.express(cup_11(ea, ea, a2s, a2s), gens) == vec({0, 2});
  ok = ok && H2.express(cup_11(ea, ea, a12s, a12s), gens) == vec({4, 0});

  // Published value 2t[rho3*] + 2[rho1* + u rho3*] = (4, 2). Every
  // recursion-consistent diagonal gives (0, 2) instead; this stays red.
  IntVector mid = H2.express(cup_11(ea, ea, a2s, a12s), gens);
  bool mid_ok = mid == vec({4, 2});

  IntVector r13 = vec({1, 0, 1});
  IntVector r2 = vec({0, 1, 0});
  ok = ok && H3.is_boundary(cup_12(ea, ea, a12s, r13)) &&
       H3.is_boundary(cup_12(ea, ea, a12s, r2)) &&
       H3.is_boundary(cup_12(ea, ea, a2s, r2));
  ok = ok && H3.generates(cup_12(ea, ea, a2s, r13));
  ok = ok && H2.is_boundary(vec({2, 1, -2}));  // 2rho1* + rho2* + 2u rho3*

  report(6, ok && mid_ok, "degree-one cup identities over the orientation character");
  INFO("computed [alpha2*].[alpha1*+alpha2*] coordinates: (" << mid(0) << ", "
                                                             << mid(1) << ")");
  REQUIRE(ok);
  REQUIRE(mid_ok);
}

TEST_CASE("7: mixed-character products") {
  GroupParams P = params(1, 1, -2, -1);
  ResolutionData R = build_resolution(P);
  CoefficientModule A = module_character(P, make_character(P, 1, 1, -1));
  CoefficientModule B = module_character(P, make_character(P, -1, 1, 1));
  ProductTable tab = product_table(R, A, B);

  auto all_zero = [&](int p, int q) {
    bool seen = false, zero = true;
    for (const auto& e : tab.entries)
      if (e.p == p && e.q == q) {
        seen = true;
        for (long i = 0; i < e.result.size(); ++i)
          if (!e.result(i).is_zero()) zero = false;
      }
    return seen && zero;
  };

  bool ok11 = all_zero(1, 1);
  // Published claim: the (1,2) products vanish as well. The generator of
  // H^1(eta2) pairs onto the generator of H^3(eta3) = Z_2 through the cap
  // route, and both independent degree-0 pairings agree, so this stays red.
  bool ok12 = all_zero(1, 2);
  report(7, ok11 && ok12, "(1,1) and (1,2) mixed-character products vanish");
  INFO("the (1,2) pairing of h1.0 with h2.0 hits the H^3 generator");
  REQUIRE(ok11);
  REQUIRE(ok12);
}

TEST_CASE("8: structural invariant suite") {
  VerificationReport rep = run_verification(917504);
  const std::array<std::string, 9> names = {
      "group law fuzz (500 triples)",
      "fox decomposition recombines",
      "d1.d2 = 0",
      "d2.d3 = 0",
      "eps.d1 = 0",
      "eps(X0) = eps(Y0) = eps(Z0) = 0",
      "(X0,Y0,Z0) solve the degree-3 system",
      "homotopy identity d1 s0 + s(-1) eps = id (200 samples)",
      "handel recursion matches closed-form delta11",
  };
  bool ok = true;
  for (const std::string& base : names) {
    int count = 0;
    for (const CheckResult& c : rep.checks)
      if (c.name.rfind(base + " [", 0) == 0) {
        ++count;
        ok = ok && c.pass;
      }
    ok = ok && count == static_cast<int>(kPanel.size());
  }
  report(8, ok, "resolution and diagonal identities hold on every panel tuple");
  REQUIRE(ok);
}

TEST_CASE("9: duality numerics") {
  bool ok = true;
  for (const auto& p : kPanel) {
    GroupParams P = params(p[0], p[1], p[2], p[3]);
    ResolutionData R = build_resolution(P);
    std::vector<CoefficientModule> mods = {
        module_trivial_Z(),
        module_character(P, make_character(P, 1, 1, -1)),
        module_character(P, make_character(P, -1, 1, 1)),
        module_character(P, make_character(P, -1, 1, -1)),
        module_Zp(Int(5)),
    };
    for (const CoefficientModule& A : mods) {
      HomologyEngine e(R, A);
      ok = ok && e.cohomology(3).invariants() == e.homology(0).invariants();
      ok = ok && e.cohomology(2).invariants() == e.homology(1).invariants();
    }
  }
  report(9, ok, "H^3 ~ H_0 and H^2 ~ H_1 for Z, the sign characters, and Z_5");
  REQUIRE(ok);
}

TEST_CASE("10: torsion-base homology oracle") {
  std::mt19937_64 eng(12021);
  auto rnd = [&](long m) { return static_cast<long>(eng() % static_cast<unsigned long>(m)); };
  bool ok = true;

  for (long m : {2L, 3L, 4L}) {
    for (int trial = 0; trial < 4 && ok; ++trial) {
      IntMatrix out(2, 3);
      std::array<std::array<long, 3>, 2> outl{};
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 3; ++j) {
          outl[i][j] = rnd(m);
          out(i, j) = Int(outl[i][j]);
        }

      std::vector<std::array<long, 3>> ker;
      for (long v0 = 0; v0 < m; ++v0)
        for (long v1 = 0; v1 < m; ++v1)
          for (long v2 = 0; v2 < m; ++v2) {
            std::array<long, 3> v = {v0, v1, v2};
            bool in_ker = true;
            for (int i = 0; i < 2; ++i) {
              long dot = 0;
              for (int j = 0; j < 3; ++j) dot += outl[i][j] * v[j];
              if (dot % m != 0) in_ker = false;
            }
            if (in_ker) ker.push_back(v);
          }

      long nin = rnd(4);
      IntMatrix in(3, nin);
      std::vector<std::array<long, 3>> ingens;
      for (long k = 0; k < nin; ++k) {
        std::array<long, 3> v = ker[static_cast<size_t>(rnd(static_cast<long>(ker.size())))];
        ingens.push_back(v);
        for (int i = 0; i < 3; ++i) in(i, k) = Int(v[i]);
      }

      Subquotient H(out, in, Int(m));

      // Brute-force closure of the boundary subgroup.
      std::set<std::array<long, 3>> im;
      im.insert({0, 0, 0});
      bool grew = true;
      while (grew) {
        grew = false;
        std::vector<std::array<long, 3>> cur(im.begin(), im.end());
        for (const auto& e : cur)
          for (const auto& g : ingens) {
            std::array<long, 3> s{};
            for (int i = 0; i < 3; ++i) s[i] = (e[i] + g[i]) % m;
            if (im.insert(s).second) grew = true;
          }
      }

      const AbelianInvariants& got = H.invariants();
      ok = ok && got.free_rank == 0;
      long order = 1;
      for (const Int& d : got.torsion) order *= to_long(d);
      ok = ok && order == static_cast<long>(ker.size() / im.size());

      // Distribution of orders: for every d, the classes killed by d form a
      // subgroup of size prod gcd(d, d_i); count matching kernel elements.
      for (long d = 1; d <= m && ok; ++d) {
        long cnt = 0;
        for (const auto& v : ker) {
          std::array<long, 3> dv{};
          for (int i = 0; i < 3; ++i) dv[i] = (d * v[i]) % m;
          if (im.count(dv)) ++cnt;
        }
        long pred = 1;
        for (const Int& di : got.torsion) pred *= to_long(gcd(Int(d), di));
        ok = ok && cnt == pred * static_cast<long>(im.size());
      }
    }
  }
  report(10, ok, "lifted Smith form matches brute force for (Z_m)^3 subquotients");
  REQUIRE(ok);
}
