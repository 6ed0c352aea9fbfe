#include "sapphire/homology.hpp"

#include <sstream>

namespace sapphire {

std::string AbelianInvariants::to_text() const {
  if (trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  auto emit = [&](const std::string& part) {
    if (!first) os << " + ";
    os << part;
    first = false;
  };
  if (free_rank == 1) emit("Z");
  if (free_rank > 1) emit("Z^" + std::to_string(free_rank));
  for (const Int& d : torsion) emit("Z_" + d.str());
  return os.str();
}

namespace {

IntMatrix hcat(const IntMatrix& A, const IntMatrix& B) {
  IntMatrix C(A.rows(), A.cols() + B.cols());
  C.leftCols(A.cols()) = A;
  C.rightCols(B.cols()) = B;
  return C;
}

}  // namespace

Subquotient::Subquotient(const IntMatrix& out, const IntMatrix& in, const Int& m)
    : m_(m), N_(out.cols()), out_(out) {
  if (in.rows() != N_) throw std::invalid_argument("subquotient: dimension mismatch");

  // Cycle lattice {v : out v = 0 (mod m)}.
  if (m_.is_zero()) {
    K_ = kernel_basis(out_);
  } else {
    IntMatrix aug = hcat(out_, IntMatrix(m_ * IntMatrix::Identity(out_.rows(), out_.rows())));
    IntMatrix kaug = kernel_basis(aug);
    K_ = lattice_basis(IntMatrix(kaug.topRows(N_)));
  }
  long k = K_.cols();

  // Boundary lattice generators: columns of `in`, plus m * ambient basis for
  // torsion coefficients; rewritten in K-coordinates (must be solvable when
  // the complex is a complex).
  IntMatrix gens = in;
  if (!m_.is_zero())
    gens = hcat(gens, IntMatrix(m_ * IntMatrix::Identity(N_, N_)));
  rel_ = IntMatrix(k, gens.cols());
  for (long j = 0; j < gens.cols(); ++j) {
    auto w = solve(K_, IntVector(gens.col(j)));
    if (!w) throw std::logic_error("subquotient: boundary outside cycle lattice");
    rel_.col(j) = *w;
  }
  relS_ = smith_normal_form(rel_);

  // Quotient Z^k / rel: invariant factors with transform Uinv giving the
  // generator directions.
  for (long i = 0; i < k; ++i) {
    Int d = (i < relS_.rank) ? relS_.D(i, i) : Int(0);
    if (d == Int(1)) continue;
    if (d.is_zero())
      inv_.free_rank += 1;
    else
      inv_.torsion.push_back(d);
  }
  // Torsion generators first (ascending invariant factors), then free.
  for (long i = 0; i < k; ++i) {
    Int d = (i < relS_.rank) ? relS_.D(i, i) : Int(0);
    if (d == Int(1) || d.is_zero()) continue;
    gens_.push_back(IntVector(K_ * relS_.Uinv.col(i)));
    gen_orders_.push_back(d);
  }
  for (long i = relS_.rank; i < k; ++i) {
    gens_.push_back(IntVector(K_ * relS_.Uinv.col(i)));
    gen_orders_.push_back(0);
  }
}

bool Subquotient::is_cycle(const IntVector& v) const {
  if (v.size() != N_) throw std::invalid_argument("cycle check: wrong dimension");
  IntVector w = out_ * v;
  for (long i = 0; i < w.size(); ++i) {
    if (m_.is_zero() ? !w(i).is_zero() : !(w(i) % m_).is_zero()) return false;
  }
  return true;
}

IntVector Subquotient::cycle_coordinates(const IntVector& v) const {
  if (!is_cycle(v)) throw NotACocycle("vector is not a cycle/cocycle");
  auto c = solve(K_, v);
  if (!c) throw NotACocycle("vector is not in the cycle lattice");
  return *c;
}

bool Subquotient::is_boundary(const IntVector& v) const {
  IntVector c = cycle_coordinates(v);
  return solve(rel_, c).has_value();
}

bool Subquotient::classes_equal(const IntVector& v, const IntVector& w) const {
  return is_boundary(IntVector(v - w));
}

Int Subquotient::class_order(const IntVector& v) const {
  IntVector c = relS_.U * cycle_coordinates(v);
  Int order = 1;
  for (long i = 0; i < c.size(); ++i) {
    Int d = (i < relS_.rank) ? relS_.D(i, i) : Int(0);
    if (d.is_zero()) {
      if (!c(i).is_zero()) return 0;  // infinite order
      continue;
    }
    Int step = d / gcd(d, c(i));
    order = order * step / gcd(order, step);  // lcm
  }
  return order;
}

bool Subquotient::generates(const IntVector& v) const {
  IntVector c = cycle_coordinates(v);
  IntMatrix withv = hcat(rel_, IntMatrix(c));
  SmithResult s = smith_normal_form(withv);
  if (s.rank < K_.cols()) return false;
  for (long i = 0; i < s.rank; ++i)
    if (s.D(i, i) != Int(1)) return false;
  return true;
}

IntVector Subquotient::express(const IntVector& v, const std::vector<IntVector>& gens) const {
  IntVector c = cycle_coordinates(v);
  long g = static_cast<long>(gens.size());
  IntMatrix G(K_.cols(), g);
  std::vector<Int> orders;
  for (long j = 0; j < g; ++j) {
    G.col(j) = cycle_coordinates(gens[j]);
    orders.push_back(class_order(gens[j]));
  }
  auto sol = solve(hcat(G, rel_), c);
  if (!sol) throw NotInSpan("class is not in the span of the given generators");
  IntVector lambda(g);
  for (long j = 0; j < g; ++j) {
    lambda(j) = (*sol)(j);
    if (!orders[j].is_zero()) lambda(j) = mod_floor(lambda(j), orders[j]);
  }
  return lambda;
}

CochainComplex cochain_complex(const ResolutionData& R, const CoefficientModule& A) {
  CochainComplex C;
  long n = A.n;
  for (int k = 0; k < 4; ++k) C.dims[k] = kResolutionRanks[k] * n;
  const RingMatrix* mats[3] = {&R.d1, &R.d2, &R.d3};
  for (int k = 0; k < 3; ++k) {
    const RingMatrix& d = *mats[k];
    long rows_d = kResolutionRanks[k];      // target of d_{k+1} = F_k
    long cols_d = kResolutionRanks[k + 1];  // source of d_{k+1} = F_{k+1}
    IntMatrix delta(cols_d * n, rows_d * n);
    for (long j = 0; j < cols_d; ++j)
      for (long i = 0; i < rows_d; ++i)
        delta.block(j * n, i * n, n, n) = represent(A, d[i][j]);
    C.delta[k] = std::move(delta);
  }
  return C;
}

ChainComplex chain_complex(const ResolutionData& R, const CoefficientModule& A) {
  ChainComplex C;
  long n = A.n;
  for (int k = 0; k < 4; ++k) C.dims[k] = kResolutionRanks[k] * n;
  const RingMatrix* mats[3] = {&R.d1, &R.d2, &R.d3};
  for (int k = 0; k < 3; ++k) {
    const RingMatrix& d = *mats[k];
    long rows_d = kResolutionRanks[k];
    long cols_d = kResolutionRanks[k + 1];
    IntMatrix partial(rows_d * n, cols_d * n);
    for (long i = 0; i < rows_d; ++i)
      for (long j = 0; j < cols_d; ++j)
        partial.block(i * n, j * n, n, n) = represent(A, antipode(R.params, d[i][j]));
    C.partial[k] = std::move(partial);
  }
  return C;
}

HomologyEngine::HomologyEngine(const ResolutionData& R, const CoefficientModule& A)
    : R_(&R), A_(A) {
  CochainComplex cc = cochain_complex(R, A);
  ChainComplex hc = chain_complex(R, A);
  cdims_ = cc.dims;
  hdims_ = hc.dims;
  const Int& m = A.modulus;
  for (int k = 0; k < 4; ++k) {
    IntMatrix out = (k < 3) ? cc.delta[k] : IntMatrix(IntMatrix::Zero(0, cc.dims[3]));
    IntMatrix in = (k > 0) ? cc.delta[k - 1] : IntMatrix(IntMatrix::Zero(cc.dims[0], 0));
    coh_.emplace_back(out, in, m);
  }
  for (int k = 0; k < 4; ++k) {
    IntMatrix out = (k > 0) ? hc.partial[k - 1] : IntMatrix(IntMatrix::Zero(0, hc.dims[0]));
    IntMatrix in = (k < 3) ? hc.partial[k] : IntMatrix(IntMatrix::Zero(hc.dims[3], 0));
    hom_.emplace_back(out, in, m);
  }
}

const Subquotient& HomologyEngine::cohomology(int k) const {
  if (k < 0 || k > 3) throw DegreeOutOfRange("cohomology degree must be 0..3");
  return coh_[k];
}

const Subquotient& HomologyEngine::homology(int k) const {
  if (k < 0 || k > 3) throw DegreeOutOfRange("homology degree must be 0..3");
  return hom_[k];
}

long HomologyEngine::cochain_dim(int k) const {
  if (k < 0 || k > 3) throw DegreeOutOfRange("degree must be 0..3");
  return cdims_[k];
}

long HomologyEngine::chain_dim(int k) const {
  if (k < 0 || k > 3) throw DegreeOutOfRange("degree must be 0..3");
  return hdims_[k];
}

std::array<AbelianInvariants, 4> cohomology(const ResolutionData& R,
                                            const CoefficientModule& A) {
  HomologyEngine e(R, A);
  return {e.cohomology(0).invariants(), e.cohomology(1).invariants(),
          e.cohomology(2).invariants(), e.cohomology(3).invariants()};
}

std::array<AbelianInvariants, 4> homology(const ResolutionData& R,
                                          const CoefficientModule& A) {
  HomologyEngine e(R, A);
  return {e.homology(0).invariants(), e.homology(1).invariants(),
          e.homology(2).invariants(), e.homology(3).invariants()};
}

}  // namespace sapphire
