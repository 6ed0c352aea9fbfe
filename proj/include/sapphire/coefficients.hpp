#pragma once

#include <stdexcept>
#include <string>

#include "sapphire/group_ring.hpp"
#include "sapphire/int_types.hpp"

namespace sapphire {

class InvalidModule : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// G-module with underlying group Z^n (modulus 0) or (Z_m)^n (modulus m >= 1),
// given by the action matrices of the three generators. Matrices act on
// column vectors; torsion modules keep entries reduced to [0, m).
struct CoefficientModule {
  Int modulus;  // 0 means free over Z; 1 is the zero module
  long n = 1;
  IntMatrix act_a1, act_b1, act_a2;
  std::string label;  // expression this module was built from, for reports

  bool is_torsion() const { return !modulus.is_zero(); }
  bool is_zero_module() const { return modulus == Int(1); }
};

// Trivial action on Z.
CoefficientModule module_trivial_Z();
// Z with action by a character (validated against the relations).
CoefficientModule module_character(const GroupParams& P, const Character& chi);
// Z_p with trivial action, p >= 2.
CoefficientModule module_Zp(const Int& p);
// General constructors; verify invertibility and the three relations.
CoefficientModule module_free(const GroupParams& P, const IntMatrix& A1,
                              const IntMatrix& B1, const IntMatrix& A2);
CoefficientModule module_torsion(const GroupParams& P, const Int& m, const IntMatrix& A1,
                                 const IntMatrix& B1, const IntMatrix& A2);

// Underlying-group tensor product with diagonal action. Kronecker products
// use the left factor as the slow index. Moduli combine as 0 (x) 0 -> 0,
// 0 (x) m -> m, m (x) m' -> gcd(m, m').
CoefficientModule tensor(const GroupParams& P, const CoefficientModule& A,
                         const CoefficientModule& B);

// Inverse of an action matrix (adjugate route; det is a unit by validation).
IntMatrix action_inverse(const CoefficientModule& A, const IntMatrix& M);
// M^k for any integer k.
IntMatrix action_power(const CoefficientModule& A, const IntMatrix& M, const Int& k);

// Ring homomorphism ZG -> End(A): n x n matrix of the action of an element.
IntMatrix represent_element(const CoefficientModule& A, const GroupElement& g);
IntMatrix represent(const CoefficientModule& A, const GroupRingElement& e);

// Coefficient expressions: "Z" | "Zeta:<s1>,<s2>,<s3>" (si = +1|-1|1) |
// "Zp:<p>" | "tensor(<expr>,<expr>)".
CoefficientModule parse_coefficient(const GroupParams& P, const std::string& expr);

}  // namespace sapphire
