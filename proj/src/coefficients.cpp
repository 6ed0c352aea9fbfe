#include "sapphire/coefficients.hpp"

namespace sapphire {

namespace {

IntMatrix reduce(const IntMatrix& M, const Int& m) {
  if (m.is_zero()) return M;
  IntMatrix R = M;
  for (long i = 0; i < R.rows(); ++i)
    for (long j = 0; j < R.cols(); ++j) R(i, j) = mod_floor(R(i, j), m);
  return R;
}

bool equal_mod(const IntMatrix& A, const IntMatrix& B, const Int& m) {
  if (A.rows() != B.rows() || A.cols() != B.cols()) return false;
  for (long i = 0; i < A.rows(); ++i)
    for (long j = 0; j < A.cols(); ++j) {
      Int d = A(i, j) - B(i, j);
      if (m.is_zero() ? !d.is_zero() : !(d % m).is_zero()) return false;
    }
  return true;
}

// Determinant by cofactor expansion; action matrices are small.
Int det(const IntMatrix& M) {
  long n = M.rows();
  if (n == 0) return 1;
  if (n == 1) return M(0, 0);
  Int acc = 0;
  int sign = 1;
  for (long k = 0; k < n; ++k) {
    IntMatrix sub(n - 1, n - 1);
    for (long i = 1; i < n; ++i) {
      long jj = 0;
      for (long j = 0; j < n; ++j) {
        if (j == k) continue;
        sub(i - 1, jj++) = M(i, j);
      }
    }
    acc += Int(sign) * M(0, k) * det(sub);
    sign = -sign;
  }
  return acc;
}

IntMatrix adjugate(const IntMatrix& M) {
  long n = M.rows();
  IntMatrix A(n, n);
  if (n == 1) {
    A(0, 0) = 1;
    return A;
  }
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) {
      IntMatrix sub(n - 1, n - 1);
      long ii = 0;
      for (long r = 0; r < n; ++r) {
        if (r == i) continue;
        long jj = 0;
        for (long c = 0; c < n; ++c) {
          if (c == j) continue;
          sub(ii, jj++) = M(r, c);
        }
        ++ii;
      }
      int sign = ((i + j) % 2 == 0) ? 1 : -1;
      A(j, i) = Int(sign) * det(sub);
    }
  return A;
}

Int mod_inverse(const Int& a, const Int& m) {
  // Extended Euclid; requires gcd(a, m) = 1.
  Int old_r = mod_floor(a, m), r = m;
  Int old_s = 1, s = 0;
  while (!r.is_zero()) {
    Int q = old_r / r;
    Int tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != Int(1)) throw InvalidModule("action determinant is not a unit mod m");
  return mod_floor(old_s, m);
}

void check_module(const GroupParams& P, const CoefficientModule& A) {
  const Int& m = A.modulus;
  if (m.sign() < 0) throw InvalidModule("modulus must be nonnegative");
  if (A.n < 1) throw InvalidModule("rank must be positive");
  for (const IntMatrix* M : {&A.act_a1, &A.act_b1, &A.act_a2})
    if (M->rows() != A.n || M->cols() != A.n)
      throw InvalidModule("action matrix dimensions do not match rank");
  if (A.is_zero_module()) return;  // everything is congruent mod 1
  for (const IntMatrix* M : {&A.act_a1, &A.act_b1, &A.act_a2}) {
    Int d = det(*M);
    if (m.is_zero()) {
      if (d != Int(1) && d != Int(-1))
        throw InvalidModule("free-module action must have determinant +1 or -1");
    } else if (gcd(d, m) != Int(1)) {
      throw InvalidModule("torsion-module action determinant must be a unit mod m");
    }
  }
  // Relations of the group must hold in End(A).
  IntMatrix lhs1 = A.act_a1 * A.act_b1 * action_inverse(A, A.act_a1);
  IntMatrix rhs1 = action_inverse(A, A.act_b1);
  if (!equal_mod(lhs1, rhs1, m))
    throw InvalidModule("action violates a1 b1 a1^-1 = b1^-1");
  IntMatrix lhs2 = A.act_a2 * A.act_a2;
  IntMatrix rhs2 = action_power(A, A.act_a1, Int(2) * P.r()) *
                   action_power(A, A.act_b1, P.s());
  if (!equal_mod(lhs2, rhs2, m))
    throw InvalidModule("action violates a2^2 = a1^{2r} b1^s");
  IntMatrix lhs3 = A.act_a2 * action_power(A, A.act_a1, Int(2) * P.t()) *
                   action_power(A, A.act_b1, P.u()) * action_inverse(A, A.act_a2);
  IntMatrix rhs3 = action_power(A, A.act_b1, -P.u()) *
                   action_power(A, A.act_a1, Int(-2) * P.t());
  if (!equal_mod(lhs3, rhs3, m))
    throw InvalidModule("action violates a2 a1^{2t} b1^u a2^-1 = b1^-u a1^-2t");
}

}  // namespace

CoefficientModule module_trivial_Z() {
  CoefficientModule A;
  A.modulus = 0;
  A.n = 1;
  A.act_a1 = A.act_b1 = A.act_a2 = IntMatrix::Identity(1, 1);
  A.label = "Z";
  return A;
}

CoefficientModule module_character(const GroupParams& P, const Character& chi) {
  CoefficientModule A;
  A.modulus = 0;
  A.n = 1;
  auto one_by_one = [](int v) {
    IntMatrix M(1, 1);
    M(0, 0) = v;
    return M;
  };
  A.act_a1 = one_by_one(chi.a1);
  A.act_b1 = one_by_one(chi.b1);
  A.act_a2 = one_by_one(chi.a2);
  A.label = "Zeta:" + std::to_string(chi.a1) + "," + std::to_string(chi.b1) + "," +
            std::to_string(chi.a2);
  check_module(P, A);
  return A;
}

CoefficientModule module_Zp(const Int& p) {
  if (p < Int(2)) throw InvalidModule("Zp requires p >= 2");
  CoefficientModule A;
  A.modulus = p;
  A.n = 1;
  A.act_a1 = A.act_b1 = A.act_a2 = IntMatrix::Identity(1, 1);
  A.label = "Zp:" + p.str();
  return A;
}

CoefficientModule module_free(const GroupParams& P, const IntMatrix& A1,
                              const IntMatrix& B1, const IntMatrix& A2) {
  CoefficientModule A;
  A.modulus = 0;
  A.n = A1.rows();
  A.act_a1 = A1;
  A.act_b1 = B1;
  A.act_a2 = A2;
  A.label = "free(" + std::to_string(A.n) + ")";
  check_module(P, A);
  return A;
}

CoefficientModule module_torsion(const GroupParams& P, const Int& m, const IntMatrix& A1,
                                 const IntMatrix& B1, const IntMatrix& A2) {
  if (m < Int(1)) throw InvalidModule("torsion modulus must be >= 1");
  CoefficientModule A;
  A.modulus = m;
  A.n = A1.rows();
  A.act_a1 = reduce(A1, m);
  A.act_b1 = reduce(B1, m);
  A.act_a2 = reduce(A2, m);
  A.label = "torsion(" + m.str() + "," + std::to_string(A.n) + ")";
  check_module(P, A);
  return A;
}

namespace {

IntMatrix kron(const IntMatrix& A, const IntMatrix& B) {
  IntMatrix K(A.rows() * B.rows(), A.cols() * B.cols());
  for (long i = 0; i < A.rows(); ++i)
    for (long j = 0; j < A.cols(); ++j)
      for (long k = 0; k < B.rows(); ++k)
        for (long l = 0; l < B.cols(); ++l)
          K(i * B.rows() + k, j * B.cols() + l) = A(i, j) * B(k, l);
  return K;
}

}  // namespace

CoefficientModule tensor(const GroupParams& P, const CoefficientModule& A,
                         const CoefficientModule& B) {
  CoefficientModule T;
  if (A.modulus.is_zero())
    T.modulus = B.modulus;
  else if (B.modulus.is_zero())
    T.modulus = A.modulus;
  else
    T.modulus = gcd(A.modulus, B.modulus);
  T.n = A.n * B.n;
  T.act_a1 = reduce(kron(A.act_a1, B.act_a1), T.modulus);
  T.act_b1 = reduce(kron(A.act_b1, B.act_b1), T.modulus);
  T.act_a2 = reduce(kron(A.act_a2, B.act_a2), T.modulus);
  T.label = "tensor(" + A.label + "," + B.label + ")";
  check_module(P, T);
  return T;
}

IntMatrix action_inverse(const CoefficientModule& A, const IntMatrix& M) {
  Int d = det(M);
  IntMatrix adj = adjugate(M);
  if (A.modulus.is_zero()) {
    // d is +1 or -1.
    return IntMatrix(d * adj);
  }
  if (A.is_zero_module()) return reduce(adj, A.modulus);
  Int dinv = mod_inverse(d, A.modulus);
  return reduce(IntMatrix(dinv * adj), A.modulus);
}

IntMatrix action_power(const CoefficientModule& A, const IntMatrix& M, const Int& k) {
  if (k.sign() < 0) return action_power(A, action_inverse(A, M), -k);
  IntMatrix acc = IntMatrix::Identity(M.rows(), M.cols());
  IntMatrix base = M;
  Int e = k;
  while (e.sign() > 0) {
    if (!(e % 2).is_zero()) acc = reduce(IntMatrix(acc * base), A.modulus);
    base = reduce(IntMatrix(base * base), A.modulus);
    e /= 2;
  }
  return acc;
}

IntMatrix represent_element(const CoefficientModule& A, const GroupElement& g) {
  IntMatrix acc = IntMatrix::Identity(A.n, A.n);
  for (Gen l : g.word()) {
    const IntMatrix& M = (l == Gen::a1) ? A.act_a1 : A.act_a2;
    acc = reduce(IntMatrix(acc * M), A.modulus);
  }
  IntMatrix x = reduce(IntMatrix(A.act_a1 * A.act_a1), A.modulus);
  acc = reduce(IntMatrix(acc * action_power(A, x, g.xexp())), A.modulus);
  acc = reduce(IntMatrix(acc * action_power(A, A.act_b1, g.yexp())), A.modulus);
  return acc;
}

IntMatrix represent(const CoefficientModule& A, const GroupRingElement& e) {
  IntMatrix acc = IntMatrix::Zero(A.n, A.n);
  for (const auto& [g, c] : e.terms()) acc += c * represent_element(A, g);
  return reduce(acc, A.modulus);
}

namespace {

std::string strip(const std::string& s) {
  size_t a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

int parse_sign(const std::string& tok) {
  std::string t = strip(tok);
  if (t == "1" || t == "+1") return 1;
  if (t == "-1") return -1;
  throw InvalidModule("character component must be +1 or -1, got '" + tok + "'");
}

}  // namespace

CoefficientModule parse_coefficient(const GroupParams& P, const std::string& raw) {
  std::string expr = strip(raw);
  if (expr == "Z") return module_trivial_Z();
  if (expr.rfind("Zeta:", 0) == 0) {
    std::string rest = expr.substr(5);
    size_t c1 = rest.find(',');
    size_t c2 = (c1 == std::string::npos) ? std::string::npos : rest.find(',', c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos ||
        rest.find(',', c2 + 1) != std::string::npos)
      throw InvalidModule("Zeta takes three comma-separated signs");
    int e1 = parse_sign(rest.substr(0, c1));
    int e2 = parse_sign(rest.substr(c1 + 1, c2 - c1 - 1));
    int e3 = parse_sign(rest.substr(c2 + 1));
    return module_character(P, make_character(P, e1, e2, e3));
  }
  if (expr.rfind("Zp:", 0) == 0) {
    std::string ps = strip(expr.substr(3));
    if (ps.empty() || ps.find_first_not_of("0123456789") != std::string::npos)
      throw InvalidModule("Zp:<p> needs a positive integer");
    return module_Zp(Int(ps));
  }
  if (expr.rfind("tensor(", 0) == 0 && expr.back() == ')') {
    // Zeta arguments contain bare commas, so the argument split is the
    // top-level comma at which both sides parse (deepest parens excluded).
    std::string body = expr.substr(7, expr.size() - 8);
    int depth = 0;
    for (size_t i = 0; i < body.size(); ++i) {
      if (body[i] == '(') ++depth;
      if (body[i] == ')') --depth;
      if (body[i] != ',' || depth != 0) continue;
      try {
        CoefficientModule lhs = parse_coefficient(P, body.substr(0, i));
        CoefficientModule rhs = parse_coefficient(P, body.substr(i + 1));
        return tensor(P, lhs, rhs);
      } catch (const InvalidModule&) {
        continue;  // comma belongs to a Zeta argument, try the next one
      }
    }
    throw InvalidModule("tensor(...) needs two comma-separated module expressions");
  }
  throw InvalidModule("unrecognized coefficient expression: '" + raw + "'");
}

}  // namespace sapphire
