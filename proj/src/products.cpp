#include "sapphire/products.hpp"

namespace sapphire {

namespace {

int koszul_sign(int deg_u, int deg_x) { return (deg_u * deg_x) % 2 == 0 ? 1 : -1; }

IntVector kron_vec(const IntVector& a, const IntVector& b) {
  IntVector r(a.size() * b.size());
  for (long i = 0; i < a.size(); ++i)
    for (long k = 0; k < b.size(); ++k) r(i * b.size() + k) = a(i) * b(k);
  return r;
}

IntVector reduce_vec(IntVector v, const Int& m) {
  if (m.is_zero()) return v;
  for (long i = 0; i < v.size(); ++i) v(i) = mod_floor(v(i), m);
  return v;
}

}  // namespace

IntVector cup_11(const HomologyEngine& ea, const HomologyEngine& eb, const IntVector& u,
                 const IntVector& v) {
  const ResolutionData& R = ea.resolution();
  const CoefficientModule& A = ea.module();
  const CoefficientModule& B = eb.module();
  if (u.size() != ea.cochain_dim(1) || v.size() != eb.cochain_dim(1))
    throw DimensionMismatch("cup_11 expects degree-1 cochain vectors");
  if (!ea.cohomology(1).is_cycle(u) || !eb.cohomology(1).is_cycle(v))
    throw NotACocycle("cup_11 requires cocycles");

  CoefficientModule T = tensor(R.params, A, B);
  IntVector w = IntVector::Zero(3 * T.n);
  for (int j = 0; j < 3; ++j) {
    TensorVector d = delta11(R, j);
    IntVector block = IntVector::Zero(T.n);
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b)
        for (const auto& [gh, c] : d.coords[a][b].terms()) {
          IntVector ua = represent_element(A, gh.first) * u.segment(a * A.n, A.n);
          IntVector vb = represent_element(B, gh.second) * v.segment(b * B.n, B.n);
          block += c * kron_vec(ua, vb);
        }
    w.segment(j * T.n, T.n) = reduce_vec(IntVector(block), T.modulus);
  }
  return w;
}

IntVector cap_with_zeta(const HomologyEngine& e, int n, const IntVector& u) {
  const ResolutionData& R = e.resolution();
  const CoefficientModule& A = e.module();
  if (n == 3) {
    if (u.size() != e.cochain_dim(3)) throw DimensionMismatch("cap: expected top cochain");
    if (!e.cohomology(3).is_cycle(u)) throw NotACocycle("cap_with_zeta requires a cocycle");
    // zeta's (0,3) piece is 1 (x) 1; the pairing sends u to 1 (x) u(1).
    int sign = koszul_sign(3, 0);
    return IntVector(Int(sign) * u);
  }
  if (n != 2) throw DegreeOutOfRange("cap_with_zeta supports n = 2 or 3");
  if (u.size() != e.cochain_dim(2)) throw DimensionMismatch("cap: expected 2-cochain");
  if (!e.cohomology(2).is_cycle(u)) throw NotACocycle("cap_with_zeta requires a cocycle");

  TensorVector z = zeta_pi12(R);
  int sign = koszul_sign(2, 1);
  IntVector out = IntVector::Zero(3 * A.n);
  for (int b = 0; b < 3; ++b) {
    IntVector block = IntVector::Zero(A.n);
    for (int j = 0; j < 3; ++j) {
      // Left legs are the F_1 coefficients; passing them across the tensor
      // uses the antipode, as in the chain-complex identification.
      GroupRingElement w;
      for (const auto& [gh, c] : z.coords[b][j].terms()) w.add_term(gh.first, c);
      IntMatrix act = represent(A, antipode(R.params, w));
      block += Int(sign) * (act * u.segment(j * A.n, A.n));
    }
    out.segment(b * A.n, A.n) = reduce_vec(IntVector(block), A.modulus);
  }
  return out;
}

IntVector cup_12(const HomologyEngine& ea, const HomologyEngine& eb, const IntVector& u,
                 const IntVector& v) {
  const ResolutionData& R = ea.resolution();
  const CoefficientModule& A = ea.module();
  const CoefficientModule& B = eb.module();
  if (u.size() != ea.cochain_dim(1)) throw DimensionMismatch("cup_12: left must be degree 1");
  if (!ea.cohomology(1).is_cycle(u)) throw NotACocycle("cup_12 requires cocycles");

  IntVector vbar = cap_with_zeta(eb, 2, v);  // 1-cycle over B
  // Pair u against the (0,1) diagonal of the cycle: Delta1's (0,1) component
  // of a pure basis chain e_b is 1 (x) e_b, so the degree-0 value is
  // sum_b u_b (x) vbar_b, with Koszul sign (-1)^{1*0}.
  int sign = koszul_sign(1, 0);
  CoefficientModule T = tensor(R.params, A, B);
  IntVector c0 = IntVector::Zero(T.n);
  for (int b = 0; b < 3; ++b)
    c0 += Int(sign) * kron_vec(IntVector(u.segment(b * A.n, A.n)),
                               IntVector(vbar.segment(b * B.n, B.n)));
  c0 = reduce_vec(c0, T.modulus);

  // Duality: the top-degree pairing is the coordinate identity, so a degree-3
  // cocycle w represents the same H_0 class as its own coordinate vector.
  // Express [c0] in the images of the H^3 generators and lift back.
  HomologyEngine et(R, T);
  const Subquotient& h3 = et.cohomology(3);
  const Subquotient& h0 = et.homology(0);
  IntVector lambda = h0.express(c0, h3.generators());
  IntVector w = IntVector::Zero(T.n);
  for (size_t k = 0; k < h3.generators().size(); ++k)
    w += lambda(static_cast<long>(k)) * h3.generators()[k];
  return reduce_vec(w, T.modulus);
}

IntVector swap_tensor_coordinates(long na, long nb, const IntVector& v) {
  long block = na * nb;
  if (block <= 0 || v.size() % block != 0)
    throw DimensionMismatch("swap: wrong tensor dimension");
  IntVector w(v.size());
  for (long off = 0; off < v.size(); off += block)
    for (long a = 0; a < na; ++a)
      for (long b = 0; b < nb; ++b) w(off + b * na + a) = v(off + a * nb + b);
  return w;
}

IntVector cup_21(const HomologyEngine& ea, const HomologyEngine& eb, const IntVector& v,
                 const IntVector& u) {
  // (v cup u) = sign * swap(u cup v) with sign (-1)^{2*1} = +1, computed.
  const CoefficientModule& A = ea.module();
  const CoefficientModule& B = eb.module();
  int sign = koszul_sign(2, 1);
  IntVector w = cup_12(eb, ea, u, v);  // over B (x) A
  IntVector swapped = swap_tensor_coordinates(B.n, A.n, w);
  return IntVector(Int(sign) * swapped);
}

ProductTable product_table(const ResolutionData& R, const CoefficientModule& A,
                           const CoefficientModule& B) {
  HomologyEngine ea(R, A);
  HomologyEngine eb(R, B);
  CoefficientModule T = tensor(R.params, A, B);
  HomologyEngine et(R, T);

  ProductTable table;
  table.target_h2 = et.cohomology(2).invariants();
  table.target_h3 = et.cohomology(3).invariants();

  auto gen_id = [](int deg, size_t idx) {
    return "h" + std::to_string(deg) + "." + std::to_string(idx);
  };

  const auto& h1a = ea.cohomology(1).generators();
  const auto& h1b = eb.cohomology(1).generators();
  const auto& h2a = ea.cohomology(2).generators();
  const auto& h2b = eb.cohomology(2).generators();

  for (size_t i = 0; i < h1a.size(); ++i)
    for (size_t j = 0; j < h1b.size(); ++j) {
      ProductEntry e;
      e.p = 1;
      e.q = 1;
      e.left = gen_id(1, i);
      e.right = gen_id(1, j);
      IntVector w = cup_11(ea, eb, h1a[i], h1b[j]);
      e.result = et.cohomology(2).express(w, et.cohomology(2).generators());
      table.entries.push_back(std::move(e));
    }
  for (size_t i = 0; i < h1a.size(); ++i)
    for (size_t j = 0; j < h2b.size(); ++j) {
      ProductEntry e;
      e.p = 1;
      e.q = 2;
      e.left = gen_id(1, i);
      e.right = gen_id(2, j);
      IntVector w = cup_12(ea, eb, h1a[i], h2b[j]);
      e.result = et.cohomology(3).express(w, et.cohomology(3).generators());
      table.entries.push_back(std::move(e));
    }
  for (size_t i = 0; i < h2a.size(); ++i)
    for (size_t j = 0; j < h1b.size(); ++j) {
      ProductEntry e;
      e.p = 2;
      e.q = 1;
      e.left = gen_id(2, i);
      e.right = gen_id(1, j);
      IntVector w = cup_21(ea, eb, h2a[i], h1b[j]);
      e.result = et.cohomology(3).express(w, et.cohomology(3).generators());
      table.entries.push_back(std::move(e));
    }
  return table;
}

}  // namespace sapphire
