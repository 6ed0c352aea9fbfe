#include "sapphire/group_ring.hpp"

#include <sstream>

namespace sapphire {

Int GroupRingElement::coefficient(const GroupElement& g) const {
  auto it = terms_.find(g);
  return it == terms_.end() ? Int(0) : it->second;
}

void GroupRingElement::add_term(const GroupElement& g, const Int& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(g, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& o) {
  for (const auto& [g, c] : o.terms_) add_term(g, c);
  return *this;
}

GroupRingElement& GroupRingElement::operator-=(const GroupRingElement& o) {
  for (const auto& [g, c] : o.terms_) add_term(g, -c);
  return *this;
}

GroupRingElement& GroupRingElement::operator*=(const Int& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [g, coeff] : terms_) coeff *= c;
  return *this;
}

GroupRingElement GroupRingElement::operator-() const {
  GroupRingElement r = *this;
  r *= Int(-1);
  return r;
}

GroupRingElement ring_multiply(const GroupParams& P, const GroupRingElement& a,
                               const GroupRingElement& b) {
  GroupRingElement r;
  for (const auto& [g, c] : a.terms())
    for (const auto& [h, d] : b.terms()) r.add_term(multiply(P, g, h), c * d);
  return r;
}

Int augmentation(const GroupRingElement& e) {
  Int s = 0;
  for (const auto& [g, c] : e.terms()) s += c;
  return s;
}

GroupRingElement antipode(const GroupParams& P, const GroupRingElement& e) {
  GroupRingElement r;
  for (const auto& [g, c] : e.terms()) r.add_term(inverse(P, g), c);
  return r;
}

GroupRingElement fox_power(const GroupParams& P, const GroupElement& g, const Int& n) {
  GroupRingElement r;
  if (n.sign() > 0) {
    GroupElement acc;
    for (Int i = 0; i < n; i += 1) {
      r.add_term(acc, 1);
      acc = multiply(P, acc, g);
    }
  } else if (n.sign() < 0) {
    GroupElement ginv = inverse(P, g);
    GroupElement acc;
    for (Int i = 0; i > n; i -= 1) {
      acc = multiply(P, acc, ginv);
      r.add_term(acc, -1);
    }
  }
  return r;
}

GroupRingElement fox_derivative(const GroupParams& P, const Word& w, Gen g) {
  GroupRingElement r;
  GroupElement prefix;
  for (const auto& [gen, n] : w) {
    if (gen == g) {
      GroupRingElement d = fox_power(P, GroupElement::generator(gen), n);
      for (const auto& [h, c] : d.terms()) r.add_term(multiply(P, prefix, h), c);
    }
    prefix = multiply(P, prefix, generator_power(P, gen, n));
  }
  return r;
}

FoxDecomposition fox_decompose(const GroupParams& P, const GroupRingElement& e) {
  if (!augmentation(e).is_zero())
    throw AugmentationNonzero("fox_decompose requires augmentation zero, got " +
                              augmentation(e).str());
  FoxDecomposition d;
  for (const auto& [g, c] : e.terms()) {
    Word w = word_representative(g);
    d.a1 += c * fox_derivative(P, w, Gen::a1);
    d.b1 += c * fox_derivative(P, w, Gen::b1);
    d.a2 += c * fox_derivative(P, w, Gen::a2);
  }
  return d;
}

std::string render(const GroupRingElement& e) {
  if (e.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [g, c] : e.terms()) {
    Int a = abs(c);
    if (first) {
      if (c.sign() < 0) os << "-";
      first = false;
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    if (g.is_identity()) {
      os << a;
    } else {
      if (a != Int(1)) os << a << "*";
      os << render(g);
    }
  }
  return os.str();
}

}  // namespace sapphire
