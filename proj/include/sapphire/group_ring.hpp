#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "sapphire/group.hpp"

namespace sapphire {

class AugmentationNonzero : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Element of the integral group ring ZG, stored as normal form -> coefficient
// with no zero coefficients. Addition is parameter-free; multiplication and
// the antipode need the group law, hence take GroupParams.
class GroupRingElement {
 public:
  GroupRingElement() = default;
  GroupRingElement(const Int& c) { add_term(GroupElement(), c); }
  GroupRingElement(int c) : GroupRingElement(Int(c)) {}
  explicit GroupRingElement(const GroupElement& g, const Int& c = 1) { add_term(g, c); }

  const std::map<GroupElement, Int>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Int coefficient(const GroupElement& g) const;
  void add_term(const GroupElement& g, const Int& c);

  GroupRingElement& operator+=(const GroupRingElement& o);
  GroupRingElement& operator-=(const GroupRingElement& o);
  GroupRingElement& operator*=(const Int& c);

  friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) {
    a += b;
    return a;
  }
  friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b) {
    a -= b;
    return a;
  }
  friend GroupRingElement operator*(const Int& c, GroupRingElement a) {
    a *= c;
    return a;
  }
  GroupRingElement operator-() const;

  friend bool operator==(const GroupRingElement& a, const GroupRingElement& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const GroupRingElement& a, const GroupRingElement& b) {
    return !(a == b);
  }

 private:
  std::map<GroupElement, Int> terms_;
};

GroupRingElement ring_multiply(const GroupParams& P, const GroupRingElement& a,
                               const GroupRingElement& b);

// Augmentation: sum of coefficients.
Int augmentation(const GroupRingElement& e);

// Antipode psi(sum c g) = sum c g^-1; an anti-homomorphism.
GroupRingElement antipode(const GroupParams& P, const GroupRingElement& e);

// Geometric Fox sum for a single generator power: the derivative of g^n with
// respect to g's generator. 1 + g + ... + g^{n-1} for n > 0, zero for n = 0,
// -(g^-1 + ... + g^n) for n < 0. Satisfies g^n - 1 = fox_power(g,n) * (g - 1).
GroupRingElement fox_power(const GroupParams& P, const GroupElement& g, const Int& n);

// Fox derivative of a word with respect to one generator, with values pushed
// through the quotient's rewriting: d(uv) = du + u dv, d(g^-1) = -g^-1 dg.
GroupRingElement fox_derivative(const GroupParams& P, const Word& w, Gen g);

// Decomposition e = A (a1 - 1) + B (b1 - 1) + C (a2 - 1), computed termwise
// via Fox derivatives of normal-form word representatives. Requires
// augmentation zero.
struct FoxDecomposition {
  GroupRingElement a1, b1, a2;
};
FoxDecomposition fox_decompose(const GroupParams& P, const GroupRingElement& e);

// Plain-text rendering, e.g. "2*a1*y^-1 - 1"; grammar documented in README.
std::string render(const GroupRingElement& e);

}  // namespace sapphire
