#pragma once

#include <array>
#include <stdexcept>
#include <vector>

#include "sapphire/group_ring.hpp"

namespace sapphire {

class DegreeOutOfRange : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Matrix over ZG. Entry (i, j) is the coefficient of target basis element i
// in the image of source basis element j; the module is a left module, so a
// coordinate vector maps by (Mv)_i = sum_j v_j * M[i][j] with the coordinate
// multiplying from the left.
using RingMatrix = std::vector<std::vector<GroupRingElement>>;

struct FreeVector {
  int degree = 0;
  std::vector<GroupRingElement> coords;
};

// Free resolution 0 -> ZG -> ZG^3 -> ZG^3 -> ZG -> Z -> 0 of the trivial
// module. Degree-1 basis alpha1, beta1, alpha2 (Fox duals of a1, b1, a2);
// degree-2 basis rho1, rho2, rho3 (one per relator); degree-3 basis single.
struct ResolutionData {
  GroupParams params;
  RingMatrix d1;  // 1 x 3
  RingMatrix d2;  // 3 x 3
  RingMatrix d3;  // 3 x 1, column (X0, Y0, Z0)
  GroupRingElement X0, Y0, Z0;
};

inline constexpr std::array<int, 4> kResolutionRanks = {1, 3, 3, 1};

ResolutionData build_resolution(const GroupParams& P);

// v must have degree 1..3; returns d_degree(v) in degree-1 dimensions.
FreeVector apply_differential(const ResolutionData& R, const FreeVector& v);

FreeVector basis_vector(int degree, int index);

// Matrix of outer(inner(.)): entry (i,j) = sum_k inner[k][j] * outer[i][k].
RingMatrix compose(const GroupParams& P, const RingMatrix& outer, const RingMatrix& inner);

bool is_zero(const RingMatrix& m);

// Human-readable dump of all differential entries.
std::string dump(const ResolutionData& R);

}  // namespace sapphire
