#pragma once

#include <string>
#include <vector>

#include "sapphire/diagonal.hpp"
#include "sapphire/homology.hpp"

namespace sapphire {

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Cup product of 1-cocycles: (u cup v)(rho) = sum over the (1,1) diagonal of
// u (x) v, valued in A (x) B with Kronecker coordinates (left factor slow).
IntVector cup_11(const HomologyEngine& ea, const HomologyEngine& eb, const IntVector& u,
                 const IntVector& v);

// Cap with the duality cycle. n = 3 pairs the top cochain group into degree-0
// chains; n = 2 pairs 2-cocycles into 1-cycles. The Koszul sign
// (-1)^{deg u * deg x} is computed from the degrees (it is +1 for both uses).
IntVector cap_with_zeta(const HomologyEngine& e, int n, const IntVector& u);

// Mixed products via the duality route: cap the 2-cocycle to a 1-cycle, pair
// with the (0,1) diagonal component, and pull the degree-0 class back to a
// degree-3 cocycle through the coordinate-identity duality map.
IntVector cup_12(const HomologyEngine& ea, const HomologyEngine& eb, const IntVector& u,
                 const IntVector& v);
// cup_21(v, u) = swap of cup_12(u, v); the interchange sign (-1)^{1*2} is +1.
IntVector cup_21(const HomologyEngine& ea, const HomologyEngine& eb, const IntVector& v,
                 const IntVector& u);

// Coordinate swap A (x) B -> B (x) A, applied to every consecutive block of
// size na*nb; accepts single tensor vectors and whole (co)chain vectors.
IntVector swap_tensor_coordinates(long na, long nb, const IntVector& v);

struct ProductEntry {
  int p = 0, q = 0;
  std::string left, right;       // generator ids "h<deg>.<index>"
  IntVector result;              // coordinates in the generators of H^{p+q}(A (x) B)
};

struct ProductTable {
  std::vector<ProductEntry> entries;
  AbelianInvariants target_h2, target_h3;
};

ProductTable product_table(const ResolutionData& R, const CoefficientModule& A,
                           const CoefficientModule& B);

}  // namespace sapphire
