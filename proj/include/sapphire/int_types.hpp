#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <Eigen/Core>

#include <iosfwd>
#include <limits>
#include <stdexcept>
#include <string>
#include <type_traits>

namespace sapphire {

// Exact integer scalar. Wraps cpp_int behind constructors constrained to
// built-in integral types so that Eigen expression types never reach boost's
// (non-SFINAE-safe) byte-container converting constructor during overload
// resolution.
class Int {
 public:
  using rep = boost::multiprecision::cpp_int;

  Int() = default;
  template <class T, std::enable_if_t<std::is_integral_v<T>, int> = 0>
  Int(T v) : v_(v) {}
  explicit Int(const rep& v) : v_(v) {}
  explicit Int(const std::string& s) : v_(s) {}

  const rep& value() const { return v_; }

  friend Int operator+(const Int& a, const Int& b) { return Int(a.v_ + b.v_); }
  friend Int operator-(const Int& a, const Int& b) { return Int(a.v_ - b.v_); }
  friend Int operator*(const Int& a, const Int& b) { return Int(a.v_ * b.v_); }
  // Truncated division/remainder, as for built-in integers.
  friend Int operator/(const Int& a, const Int& b) { return Int(a.v_ / b.v_); }
  friend Int operator%(const Int& a, const Int& b) { return Int(a.v_ % b.v_); }
  Int operator-() const { return Int(-v_); }

  Int& operator+=(const Int& o) { v_ += o.v_; return *this; }
  Int& operator-=(const Int& o) { v_ -= o.v_; return *this; }
  Int& operator*=(const Int& o) { v_ *= o.v_; return *this; }
  Int& operator/=(const Int& o) { v_ /= o.v_; return *this; }
  Int& operator%=(const Int& o) { v_ %= o.v_; return *this; }

  friend bool operator==(const Int& a, const Int& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Int& a, const Int& b) { return a.v_ != b.v_; }
  friend bool operator<(const Int& a, const Int& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Int& a, const Int& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Int& a, const Int& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Int& a, const Int& b) { return a.v_ >= b.v_; }

  friend std::ostream& operator<<(std::ostream& os, const Int& a) {
    return os << a.v_;
  }

  std::string str() const { return v_.str(); }
  bool is_zero() const { return v_.is_zero(); }
  int sign() const { return v_.sign(); }

 private:
  rep v_;
};

inline Int abs(const Int& a) { return a.sign() < 0 ? -a : a; }

inline Int gcd(const Int& a, const Int& b) {
  return Int(boost::multiprecision::gcd(a.value(), b.value()));
}

// Representative of a mod m in [0, m), m > 0.
inline Int mod_floor(const Int& a, const Int& m) {
  Int r = a % m;
  if (r.sign() < 0) r += ::sapphire::abs(m);
  return r;
}

inline bool fits_long(const Int& a) {
  static const Int lo(std::numeric_limits<long>::min());
  static const Int hi(std::numeric_limits<long>::max());
  return lo <= a && a <= hi;
}

inline long to_long(const Int& a) {
  if (!fits_long(a)) throw std::overflow_error("Int does not fit in long: " + a.str());
  return a.value().convert_to<long>();
}

using IntMatrix = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<Int, Eigen::Dynamic, 1>;

}  // namespace sapphire

namespace Eigen {

template <>
struct NumTraits<sapphire::Int> {
  using Real = sapphire::Int;
  using NonInteger = sapphire::Int;
  using Literal = sapphire::Int;
  using Nested = sapphire::Int;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 8,
    MulCost = 16,
  };
  static int digits10() { return 0; }
};

}  // namespace Eigen
