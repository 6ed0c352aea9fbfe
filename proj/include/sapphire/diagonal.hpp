#pragma once

#include <map>
#include <utility>
#include <vector>

#include "sapphire/resolution.hpp"

namespace sapphire {

// Element of ZG (x) ZG: integer combination of pure tensors g (x) h. The
// G-action on the tensor square is diagonal: g.(u (x) v) = gu (x) gv.
class RingTensor {
 public:
  RingTensor() = default;
  RingTensor(const GroupElement& g, const GroupElement& h, const Int& c = 1) {
    add_term(g, h, c);
  }

  const std::map<std::pair<GroupElement, GroupElement>, Int>& terms() const {
    return terms_;
  }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const GroupElement& g, const GroupElement& h, const Int& c);

  RingTensor& operator+=(const RingTensor& o);
  RingTensor& operator*=(const Int& c);
  friend RingTensor operator+(RingTensor a, const RingTensor& b) {
    a += b;
    return a;
  }
  friend RingTensor operator*(const Int& c, RingTensor a) {
    a *= c;
    return a;
  }
  RingTensor operator-() const;
  friend bool operator==(const RingTensor& a, const RingTensor& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const RingTensor& a, const RingTensor& b) { return !(a == b); }

 private:
  std::map<std::pair<GroupElement, GroupElement>, Int> terms_;
};

RingTensor tensor_of(const GroupRingElement& a, const GroupRingElement& b);
// Diagonal translate: sum_c c * (g g0 (x) g h0) over terms of t.
RingTensor diagonal_translate(const GroupParams& P, const GroupElement& g,
                              const RingTensor& t);

// Component of (F (x) F)_{p+q} in bidegree (p, q): coords[i][j] holds the
// ZG (x) ZG coefficient of e_i (x) f_j for the degree-p and degree-q bases.
struct TensorVector {
  int p = 0, q = 0;
  std::vector<std::vector<RingTensor>> coords;

  static TensorVector zero(int p, int q);
  bool is_zero() const;
  friend bool operator==(const TensorVector& a, const TensorVector& b) {
    return a.p == b.p && a.q == b.q && a.coords == b.coords;
  }
  friend bool operator!=(const TensorVector& a, const TensorVector& b) {
    return !(a == b);
  }
};

// Degree-0 piece of the contracting homotopy: s0(g) expands the normal-form
// word of g by Fox derivatives into F_1. Satisfies d1 s0 + (s-1 eps) = id.
FreeVector s0(const GroupParams& P, const GroupRingElement& e);

// Diagonal in degree 0: g -> g (x) g, extended additively.
TensorVector delta0(const GroupParams& P, const GroupRingElement& e);

// Degree-1 diagonal of a free vector, split into bidegrees:
// Delta1(b) = b (x) gen_b + 1 (x) b, extended equivariantly.
struct Delta1Value {
  TensorVector c10, c01;
};
Delta1Value delta1(const ResolutionData& R, const FreeVector& v);

// Bidegree-(1,1) component of the degree-2 diagonal, closed form. The right
// tensor legs carry the group translate of each coefficient term (dropping
// them breaks graded commutativity of the induced cup product).
TensorVector delta11(const ResolutionData& R, int rho);
TensorVector delta11(const ResolutionData& R, const FreeVector& v);

// Same component computed by the contracting-homotopy recursion
// Delta2 = s~_1 Delta1 d2 restricted to bidegree (1,1); the (2,0) and (0,2)
// components would need s1 and are not produced. Must agree with delta11.
TensorVector handel_delta11(const ResolutionData& R, int rho);

// Diagonal-cycle components used by the duality pairing.
TensorVector zeta_pi03();
// (1,2) piece: sum_j (X_j alpha1 + Y_j beta1 + Z_j alpha2) (x) rho_j with
// the F_1 coefficients from the Fox decomposition of antipode(d3 entries).
TensorVector zeta_pi12(const ResolutionData& R);

}  // namespace sapphire
