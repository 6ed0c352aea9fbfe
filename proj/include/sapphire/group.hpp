#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sapphire/int_types.hpp"

namespace sapphire {

// Generators of G = < a1, b1, a2 |  a1 b1 a1^-1 = b1^-1,
//                                   a2^2 = a1^{2r} b1^s,
//                                   a2 a1^{2t} b1^u a2^-1 = b1^-u a1^{-2t} >.
// Throughout, x = a1^2 and y = b1 generate the normal subgroup N ~ Z^2.
enum class Gen { a1, b1, a2 };

class RejectedParams : public std::invalid_argument {
 public:
  enum class Reason { ZeroParameter, UnimodularityViolation, UnnormalizedSigns };
  explicit RejectedParams(Reason reason);
  Reason reason() const { return reason_; }
  // Stable machine-readable code: "zero-parameter", "unimodularity-violation",
  // "unnormalized-signs".
  static const char* code(Reason reason);

 private:
  Reason reason_;
};

using ExpPair = std::pair<Int, Int>;  // (i, j) meaning x^i y^j
using ConjMatrix = std::array<std::array<Int, 2>, 2>;  // acts on (i, j) columns

// Validated parameter tuple. det() = ru - st is +1 or -1; the conjugation
// matrices below absorb the 1/det factor so they are exact over Z.
class GroupParams {
 public:
  const Int& r() const { return r_; }
  const Int& s() const { return s_; }
  const Int& t() const { return t_; }
  const Int& u() const { return u_; }
  const Int& det() const { return det_; }

  // Exponent action of conjugation: g x^i y^j g^-1 = x^i' y^j' with
  // (i', j') = M (i, j). All three matrices are involutions, so they also
  // give conjugation by the inverse letter.
  const ConjMatrix& conj_a1() const { return conj_a1_; }
  const ConjMatrix& conj_a2() const { return conj_a2_; }
  const ConjMatrix& conj_v() const { return conj_v_; }  // v = a1^-1 a2

 private:
  friend GroupParams validate_params(const Int&, const Int&, const Int&, const Int&);
  GroupParams() = default;

  Int r_, s_, t_, u_, det_;
  ConjMatrix conj_a1_, conj_a2_, conj_v_;
};

// Rejects tuples with a zero entry, with (ru-st)^2 != 1, or not normalized to
// r > 0, t < 0.
GroupParams validate_params(const Int& r, const Int& s, const Int& t, const Int& u);

enum class ConjGen { a1, a2, v };
ExpPair conjugate_exponents(const GroupParams& P, ConjGen g, const ExpPair& e);

// Normal form  g = w * x^i * y^j  where w is an alternating word in the
// letters a1, a2 (no two equal letters adjacent). Word and exponents
// determine the element uniquely.
class GroupElement {
 public:
  GroupElement() = default;  // identity
  static GroupElement generator(Gen g);
  static GroupElement xy(const Int& i, const Int& j);

  const std::vector<Gen>& word() const { return word_; }
  const Int& xexp() const { return i_; }
  const Int& yexp() const { return j_; }
  bool is_identity() const { return word_.empty() && i_.is_zero() && j_.is_zero(); }
  bool in_kernel() const { return word_.empty(); }  // member of N = <x, y>

  friend bool operator==(const GroupElement& a, const GroupElement& b) {
    return a.word_ == b.word_ && a.i_ == b.i_ && a.j_ == b.j_;
  }
  friend bool operator!=(const GroupElement& a, const GroupElement& b) {
    return !(a == b);
  }
  // Canonical order: word length, then letters (a1 < a2), then i, then j.
  friend bool operator<(const GroupElement& a, const GroupElement& b);

 private:
  friend GroupElement multiply(const GroupParams&, const GroupElement&, const GroupElement&);
  std::vector<Gen> word_;  // letters from {a1, a2} only; b1 lives in (i_, j_)
  Int i_, j_;
};

GroupElement multiply(const GroupParams& P, const GroupElement& a, const GroupElement& b);
GroupElement inverse(const GroupParams& P, const GroupElement& a);
GroupElement power(const GroupParams& P, const GroupElement& a, const Int& n);
// Closed form for gen^n, any n (e.g. a1^{2m+1} = a1 x^m, a2^{2m+1} = a2 x^{rm} y^{sm}).
GroupElement generator_power(const GroupParams& P, Gen g, const Int& n);

// Second normal form  g = v^k x^m y^n a2^eps  with v = a1^-1 a2, eps in {0,1}.
struct NF4Element {
  Int k, m, n;
  int eps = 0;
  friend bool operator==(const NF4Element& a, const NF4Element& b) {
    return a.k == b.k && a.m == b.m && a.n == b.n && a.eps == b.eps;
  }
};
NF4Element to_nf4(const GroupParams& P, const GroupElement& g);
GroupElement from_nf4(const GroupParams& P, const NF4Element& e);

class InvalidCharacter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Homomorphism G -> {+1, -1} given by generator signs. Requires s even when
// b1 -> -1 (otherwise a2^2 = a1^{2r} b1^s is violated).
struct Character {
  int a1 = 1, b1 = 1, a2 = 1;
};
Character make_character(const GroupParams& P, int ea1, int eb1, int ea2);
int character_value(const Character& chi, const GroupElement& g);

// Word in the generators with exponents, e.g. a2 * a1^-2 * b1^2.
using Syllable = std::pair<Gen, Int>;
using Word = std::vector<Syllable>;

// Realizes the normal form as a word: w, then a1^{2i}, then b1^j.
Word word_representative(const GroupElement& g);
GroupElement evaluate_word(const GroupParams& P, const Word& w);
Word inverse_word(const Word& w);

std::string render(const GroupElement& g);
std::string render(Gen g);

}  // namespace sapphire
