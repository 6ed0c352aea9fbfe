#include "sapphire/group.hpp"

#include <sstream>

namespace sapphire {

RejectedParams::RejectedParams(Reason reason)
    : std::invalid_argument(std::string("rejected parameters: ") + code(reason)),
      reason_(reason) {}

const char* RejectedParams::code(Reason reason) {
  switch (reason) {
    case Reason::ZeroParameter: return "zero-parameter";
    case Reason::UnimodularityViolation: return "unimodularity-violation";
    case Reason::UnnormalizedSigns: return "unnormalized-signs";
  }
  return "unknown";
}

namespace {

ConjMatrix matmul2(const ConjMatrix& A, const ConjMatrix& B) {
  ConjMatrix C;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      C[i][j] = A[i][0] * B[0][j] + A[i][1] * B[1][j];
  return C;
}

ExpPair matapply2(const ConjMatrix& M, const ExpPair& e) {
  return {M[0][0] * e.first + M[0][1] * e.second,
          M[1][0] * e.first + M[1][1] * e.second};
}

}  // namespace

GroupParams validate_params(const Int& r, const Int& s, const Int& t, const Int& u) {
  if (r.is_zero() || s.is_zero() || t.is_zero() || u.is_zero())
    throw RejectedParams(RejectedParams::Reason::ZeroParameter);
  Int det = r * u - s * t;
  if (det * det != Int(1))
    throw RejectedParams(RejectedParams::Reason::UnimodularityViolation);
  if (r.sign() <= 0 || t.sign() >= 0)
    throw RejectedParams(RejectedParams::Reason::UnnormalizedSigns);

  GroupParams P;
  P.r_ = r; P.s_ = s; P.t_ = t; P.u_ = u; P.det_ = det;
  P.conj_a1_ = {{{Int(1), Int(0)}, {Int(0), Int(-1)}}};
  // a2 x^i y^j a2^-1 exponents; det = +-1, so dividing by det is multiplying
  // by det. Involution fixing (r, s) and negating (t, u) for either sign.
  Int d = det;
  P.conj_a2_ = {{{d * (r * u + s * t), d * (Int(-2) * r * t)},
                 {d * (Int(2) * s * u), d * (-(r * u + s * t))}}};
  P.conj_v_ = matmul2(P.conj_a1_, P.conj_a2_);
  return P;
}

ExpPair conjugate_exponents(const GroupParams& P, ConjGen g, const ExpPair& e) {
  switch (g) {
    case ConjGen::a1: return matapply2(P.conj_a1(), e);
    case ConjGen::a2: return matapply2(P.conj_a2(), e);
    case ConjGen::v: return matapply2(P.conj_v(), e);
  }
  throw std::logic_error("bad ConjGen");
}

GroupElement GroupElement::generator(Gen g) {
  GroupElement e;
  switch (g) {
    case Gen::a1: e.word_ = {Gen::a1}; break;
    case Gen::a2: e.word_ = {Gen::a2}; break;
    case Gen::b1: e.j_ = 1; break;
  }
  return e;
}

GroupElement GroupElement::xy(const Int& i, const Int& j) {
  GroupElement e;
  e.i_ = i;
  e.j_ = j;
  return e;
}

bool operator<(const GroupElement& a, const GroupElement& b) {
  if (a.word_.size() != b.word_.size()) return a.word_.size() < b.word_.size();
  for (size_t k = 0; k < a.word_.size(); ++k)
    if (a.word_[k] != b.word_[k]) return a.word_[k] < b.word_[k];  // a1 < a2
  if (a.i_ != b.i_) return a.i_ < b.i_;
  return a.j_ < b.j_;
}

GroupElement multiply(const GroupParams& P, const GroupElement& a, const GroupElement& b) {
  GroupElement res = a;
  ExpPair n{res.i_, res.j_};
  for (Gen l : b.word_) {
    // w x^n l = w l M_l(n); the conjugation matrices are involutions, so the
    // same matrix serves for l^-1 x^n l.
    n = conjugate_exponents(P, l == Gen::a1 ? ConjGen::a1 : ConjGen::a2, n);
    if (!res.word_.empty() && res.word_.back() == l) {
      res.word_.pop_back();
      // a1 a1 = x;  a2 a2 = x^r y^s.
      if (l == Gen::a1) {
        n.first += 1;
      } else {
        n.first += P.r();
        n.second += P.s();
      }
    } else {
      res.word_.push_back(l);
    }
  }
  res.i_ = n.first + b.i_;
  res.j_ = n.second + b.j_;
  return res;
}

GroupElement inverse(const GroupParams& P, const GroupElement& a) {
  // g = w x^i y^j  =>  g^-1 = x^-i y^-j w^-1; letter inverses:
  // a1^-1 = a1 x^-1,  a2^-1 = a2 x^-r y^-s.
  GroupElement res = GroupElement::xy(-a.xexp(), -a.yexp());
  for (auto it = a.word().rbegin(); it != a.word().rend(); ++it) {
    GroupElement inv_letter;
    if (*it == Gen::a1) {
      inv_letter = multiply(P, GroupElement::generator(Gen::a1), GroupElement::xy(-1, 0));
    } else {
      inv_letter = multiply(P, GroupElement::generator(Gen::a2),
                            GroupElement::xy(-P.r(), -P.s()));
    }
    res = multiply(P, res, inv_letter);
  }
  return res;
}

GroupElement power(const GroupParams& P, const GroupElement& a, const Int& n) {
  if (n.sign() < 0) return power(P, inverse(P, a), -n);
  GroupElement acc;  // identity
  GroupElement base = a;
  Int k = n;
  while (k.sign() > 0) {
    if (!(k % 2).is_zero()) acc = multiply(P, acc, base);
    base = multiply(P, base, base);
    k /= 2;
  }
  return acc;
}

GroupElement generator_power(const GroupParams& P, Gen g, const Int& n) {
  Int m = n / 2;
  bool odd = !(n % 2).is_zero();
  if (odd && n.sign() < 0) m -= 1;  // n = 2m + 1 with remainder in {0, 1}
  switch (g) {
    case Gen::b1:
      return GroupElement::xy(0, n);
    case Gen::a1: {
      GroupElement xm = GroupElement::xy(m, 0);
      return odd ? multiply(P, GroupElement::generator(Gen::a1), xm) : xm;
    }
    case Gen::a2: {
      GroupElement nm = GroupElement::xy(P.r() * m, P.s() * m);
      return odd ? multiply(P, GroupElement::generator(Gen::a2), nm) : nm;
    }
  }
  throw std::logic_error("bad Gen");
}

NF4Element to_nf4(const GroupParams& P, const GroupElement& g) {
  NF4Element e;
  GroupElement even = g;
  if (g.word().size() % 2 == 1) {
    e.eps = 1;
    even = multiply(P, g, inverse(P, GroupElement::generator(Gen::a2)));
  }
  // even.word() alternates and has even length: (a1 a2)^q or (a2 a1)^q.
  Int q(static_cast<long>(even.word().size() / 2));
  if (even.word().empty()) {
    e.k = 0;
  } else if (even.word().front() == Gen::a1) {
    e.k = q;  // v = a1^-1 a2 has normal form word a1 a2
  } else {
    e.k = -q;
  }
  GroupElement v = multiply(P, inverse(P, GroupElement::generator(Gen::a1)),
                            GroupElement::generator(Gen::a2));
  GroupElement rem = multiply(P, power(P, v, -e.k), even);
  if (!rem.in_kernel()) throw std::logic_error("nf4: residue not in kernel");
  e.m = rem.xexp();
  e.n = rem.yexp();
  return e;
}

GroupElement from_nf4(const GroupParams& P, const NF4Element& e) {
  GroupElement v = multiply(P, inverse(P, GroupElement::generator(Gen::a1)),
                            GroupElement::generator(Gen::a2));
  GroupElement g = multiply(P, power(P, v, e.k), GroupElement::xy(e.m, e.n));
  if (e.eps) g = multiply(P, g, GroupElement::generator(Gen::a2));
  return g;
}

Character make_character(const GroupParams& P, int ea1, int eb1, int ea2) {
  auto sign_ok = [](int v) { return v == 1 || v == -1; };
  if (!sign_ok(ea1) || !sign_ok(eb1) || !sign_ok(ea2))
    throw InvalidCharacter("character values must be +1 or -1");
  if (eb1 == -1 && !(P.s() % 2).is_zero())
    throw InvalidCharacter("b1 -> -1 requires even s (a2^2 = a1^{2r} b1^s)");
  return Character{ea1, eb1, ea2};
}

int character_value(const Character& chi, const GroupElement& g) {
  int v = 1;
  for (Gen l : g.word()) v *= (l == Gen::a1 ? chi.a1 : chi.a2);
  // chi(x) = chi(a1)^2 = 1, so only the parity of the y exponent matters.
  if (!(g.yexp() % 2).is_zero()) v *= chi.b1;
  return v;
}

Word word_representative(const GroupElement& g) {
  Word w;
  for (Gen l : g.word()) w.emplace_back(l, 1);
  if (!g.xexp().is_zero()) w.emplace_back(Gen::a1, Int(2) * g.xexp());
  if (!g.yexp().is_zero()) w.emplace_back(Gen::b1, g.yexp());
  return w;
}

GroupElement evaluate_word(const GroupParams& P, const Word& w) {
  GroupElement g;
  for (const auto& [gen, n] : w) g = multiply(P, g, generator_power(P, gen, n));
  return g;
}

Word inverse_word(const Word& w) {
  Word inv;
  for (auto it = w.rbegin(); it != w.rend(); ++it) inv.emplace_back(it->first, -it->second);
  return inv;
}

std::string render(Gen g) {
  switch (g) {
    case Gen::a1: return "a1";
    case Gen::b1: return "b1";
    case Gen::a2: return "a2";
  }
  return "?";
}

std::string render(const GroupElement& g) {
  if (g.is_identity()) return "1";
  std::ostringstream os;
  bool first = true;
  auto sep = [&]() {
    if (!first) os << "*";
    first = false;
  };
  for (Gen l : g.word()) {
    sep();
    os << render(l);
  }
  auto pow = [&](const char* base, const Int& e) {
    if (e.is_zero()) return;
    sep();
    os << base;
    if (e != Int(1)) os << "^" << e;
  };
  pow("x", g.xexp());
  pow("y", g.yexp());
  return os.str();
}

}  // namespace sapphire
