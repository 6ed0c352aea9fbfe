#include "sapphire/resolution.hpp"

#include <sstream>

namespace sapphire {

namespace {

GroupRingElement ring_gen(Gen g) { return GroupRingElement(GroupElement::generator(g)); }

GroupRingElement ring_xy(const GroupParams& P, const Int& i, const Int& j) {
  (void)P;
  return GroupRingElement(GroupElement::xy(i, j));
}

}  // namespace

ResolutionData build_resolution(const GroupParams& P) {
  ResolutionData R{P, {}, {}, {}, {}, {}, {}};
  const Int& r = P.r();
  const Int& s = P.s();
  const Int& t = P.t();
  const Int& u = P.u();

  GroupElement a1 = GroupElement::generator(Gen::a1);
  GroupElement b1 = GroupElement::generator(Gen::b1);
  GroupElement a2 = GroupElement::generator(Gen::a2);
  GroupRingElement one(1);

  R.d1 = {{ring_gen(Gen::a1) - one, ring_gen(Gen::b1) - one, ring_gen(Gen::a2) - one}};

  // Fox derivatives of the relators  a1 b1 a1^-1 b1,  a1^{2r} b1^s a2^-2,
  // a2 a1^{2t} b1^u a2^-1 a1^{2t} b1^u,  written in closed form.
  GroupRingElement da1_2r = fox_power(P, a1, Int(2) * r);
  GroupRingElement da1_2t = fox_power(P, a1, Int(2) * t);
  GroupRingElement db1_s = fox_power(P, b1, s);
  GroupRingElement db1_u = fox_power(P, b1, u);

  GroupRingElement x_r = ring_xy(P, r, 0);                 // a1^{2r}
  GroupRingElement xy_mt_mu = ring_xy(P, -t, -u);          // a1^{-2t} b1^{-u}
  GroupRingElement y_mu = ring_xy(P, 0, -u);               // b1^{-u}
  GroupRingElement a2_xt =
      GroupRingElement(multiply(P, a2, GroupElement::xy(t, 0)));  // a2 a1^{2t}

  GroupRingElement c11 = one - GroupRingElement(GroupElement::xy(0, -1));
  GroupRingElement c21 = ring_gen(Gen::a1) + GroupRingElement(GroupElement::xy(0, -1));
  GroupRingElement c12 = da1_2r;
  GroupRingElement c22 = ring_multiply(P, x_r, db1_s);
  GroupRingElement c32 = -(ring_gen(Gen::a2) + one);
  GroupRingElement c13 = ring_multiply(P, ring_gen(Gen::a2), da1_2t) +
                         ring_multiply(P, xy_mt_mu, da1_2t);
  GroupRingElement c23 = ring_multiply(P, a2_xt, db1_u) + ring_multiply(P, y_mu, db1_u);
  GroupRingElement c33 = one - xy_mt_mu;

  R.d2 = {{c11, c12, c13}, {c21, c22, c23}, {GroupRingElement(), c32, c33}};

  // X0 is built from four geometric blocks; the ranges below need r > 0 and
  // t < 0, which validate_params guarantees.
  long lr = to_long(r);
  long lt = to_long(t);
  GroupRingElement acc;
  for (long k = lt; k <= lr + lt - 1; ++k)
    acc += ring_multiply(P, ring_xy(P, k, 0), db1_u);
  for (long k = lr + lt; k <= lr - 1; ++k)
    acc += ring_multiply(P, ring_xy(P, k, 0), db1_s);
  GroupRingElement db1_mu = fox_power(P, b1, -u);
  GroupRingElement db1_ms = fox_power(P, b1, -s);
  for (long k = lt + 1; k <= lr + lt; ++k)
    acc += ring_multiply(P, GroupRingElement(generator_power(P, Gen::a1, 2 * k - 1)), db1_mu);
  for (long k = lr + lt + 1; k <= lr; ++k)
    acc += ring_multiply(P, GroupRingElement(generator_power(P, Gen::a1, 2 * k - 1)), db1_ms);
  R.X0 = ring_multiply(P, acc, ring_gen(Gen::b1));
  R.Y0 = one - ring_xy(P, t, u);
  R.Z0 = ring_gen(Gen::a2) - ring_xy(P, t, u);

  R.d3 = {{R.X0}, {R.Y0}, {R.Z0}};
  return R;
}

FreeVector basis_vector(int degree, int index) {
  if (degree < 0 || degree > 3) throw DegreeOutOfRange("degree must be 0..3");
  FreeVector v;
  v.degree = degree;
  v.coords.assign(kResolutionRanks[degree], GroupRingElement());
  if (index < 0 || index >= kResolutionRanks[degree])
    throw DegreeOutOfRange("basis index out of range");
  v.coords[index] = GroupRingElement(1);
  return v;
}

FreeVector apply_differential(const ResolutionData& R, const FreeVector& v) {
  if (v.degree < 1 || v.degree > 3)
    throw DegreeOutOfRange("apply_differential needs degree 1..3");
  const RingMatrix& d = v.degree == 1 ? R.d1 : (v.degree == 2 ? R.d2 : R.d3);
  size_t rows = d.size();
  size_t cols = d[0].size();
  if (v.coords.size() != cols) throw DegreeOutOfRange("coordinate count mismatch");
  FreeVector out;
  out.degree = v.degree - 1;
  out.coords.assign(rows, GroupRingElement());
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j)
      out.coords[i] += ring_multiply(R.params, v.coords[j], d[i][j]);
  return out;
}

RingMatrix compose(const GroupParams& P, const RingMatrix& outer, const RingMatrix& inner) {
  size_t rows = outer.size();
  size_t mid = inner.size();
  size_t cols = inner[0].size();
  RingMatrix out(rows, std::vector<GroupRingElement>(cols));
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j)
      for (size_t k = 0; k < mid; ++k)
        out[i][j] += ring_multiply(P, inner[k][j], outer[i][k]);
  return out;
}

bool is_zero(const RingMatrix& m) {
  for (const auto& row : m)
    for (const auto& e : row)
      if (!e.is_zero()) return false;
  return true;
}

std::string dump(const ResolutionData& R) {
  std::ostringstream os;
  const char* deg1[] = {"alpha1", "beta1", "alpha2"};
  const char* deg2[] = {"rho1", "rho2", "rho3"};
  os << "d1:";
  for (int j = 0; j < 3; ++j) os << "  d1(" << deg1[j] << ") = " << render(R.d1[0][j]) << "\n";
  os << "d2:\n";
  for (int j = 0; j < 3; ++j) {
    os << "  d2(" << deg2[j] << ") =";
    for (int i = 0; i < 3; ++i)
      os << " [" << deg1[i] << "] " << render(R.d2[i][j]) << (i < 2 ? " ;" : "\n");
  }
  os << "d3:\n";
  os << "  X0 = " << render(R.X0) << "\n";
  os << "  Y0 = " << render(R.Y0) << "\n";
  os << "  Z0 = " << render(R.Z0) << "\n";
  return os.str();
}

}  // namespace sapphire
