#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "sapphire/coefficients.hpp"
#include "sapphire/resolution.hpp"
#include "sapphire/smith.hpp"

namespace sapphire {

class NotACocycle : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};
class NotInSpan : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Isomorphism type of a finitely generated abelian group in invariant-factor
// form: free rank plus torsion orders d_1 | d_2 | ..., each >= 2.
struct AbelianInvariants {
  long free_rank = 0;
  std::vector<Int> torsion;

  bool trivial() const { return free_rank == 0 && torsion.empty(); }
  friend bool operator==(const AbelianInvariants& a, const AbelianInvariants& b) {
    return a.free_rank == b.free_rank && a.torsion == b.torsion;
  }
  friend bool operator!=(const AbelianInvariants& a, const AbelianInvariants& b) {
    return !(a == b);
  }
  std::string to_text() const;  // e.g. "Z + Z_2 + Z_4", "0"
};

// Subquotient ker(out)/im(in) of Z^N or (Z_m)^N; out*in must vanish.
// Carries enough structure to answer class-level queries.
class Subquotient {
 public:
  Subquotient(const IntMatrix& out, const IntMatrix& in, const Int& m);

  const AbelianInvariants& invariants() const { return inv_; }
  long ambient_dim() const { return N_; }
  // Representative vectors of a generating set, torsion generators first in
  // invariant-factor order, then free generators.
  const std::vector<IntVector>& generators() const { return gens_; }
  // Orders aligned with generators(); 0 means infinite.
  const std::vector<Int>& generator_orders() const { return gen_orders_; }

  bool is_cycle(const IntVector& v) const;
  bool is_boundary(const IntVector& v) const;  // throws NotACocycle
  bool classes_equal(const IntVector& v, const IntVector& w) const;
  // Smallest k > 0 with k*v a boundary; 0 if none (infinite order).
  Int class_order(const IntVector& v) const;
  // True if the class of v generates the whole group (which must be cyclic
  // for this to be attainable).
  bool generates(const IntVector& v) const;
  // Coordinates of [v] in the given generating classes, entries reduced mod
  // the class order of each generator. Throws NotInSpan if unsolvable.
  IntVector express(const IntVector& v, const std::vector<IntVector>& gens) const;

 private:
  IntVector cycle_coordinates(const IntVector& v) const;

  Int m_;
  long N_;
  IntMatrix out_;
  IntMatrix K_;        // basis of the cycle lattice (columns)
  IntMatrix rel_;      // boundary lattice in K-coordinates (columns)
  SmithResult relS_;   // SNF of rel_
  AbelianInvariants inv_;
  std::vector<IntVector> gens_;
  std::vector<Int> gen_orders_;
};

// Cochain complex of Hom_G(F_*, A): blocks delta[k] map A^{n*rank_k} to
// A^{n*rank_{k+1}}, block (j,i) = represent(A, d_{k+1}[i][j]).
struct CochainComplex {
  std::array<IntMatrix, 3> delta;  // delta[k]: C^k -> C^{k+1}
  std::array<long, 4> dims;
};
CochainComplex cochain_complex(const ResolutionData& R, const CoefficientModule& A);

// Chain complex of F_* (x)_G A via the antipode: block (i,j) of partial[k]
// is represent(A, antipode(d_k[i][j])).
struct ChainComplex {
  std::array<IntMatrix, 3> partial;  // partial[k-1]: C_k -> C_{k-1}, k = 1..3
  std::array<long, 4> dims;
};
ChainComplex chain_complex(const ResolutionData& R, const CoefficientModule& A);

// Bundles the eight subquotients for one (resolution, module) pair.
class HomologyEngine {
 public:
  HomologyEngine(const ResolutionData& R, const CoefficientModule& A);

  const CoefficientModule& module() const { return A_; }
  const ResolutionData& resolution() const { return *R_; }
  const Subquotient& cohomology(int k) const;
  const Subquotient& homology(int k) const;
  long cochain_dim(int k) const;
  long chain_dim(int k) const;

 private:
  const ResolutionData* R_;
  CoefficientModule A_;
  std::vector<Subquotient> coh_, hom_;
  std::array<long, 4> cdims_, hdims_;
};

std::array<AbelianInvariants, 4> cohomology(const ResolutionData& R,
                                            const CoefficientModule& A);
std::array<AbelianInvariants, 4> homology(const ResolutionData& R,
                                          const CoefficientModule& A);

}  // namespace sapphire
