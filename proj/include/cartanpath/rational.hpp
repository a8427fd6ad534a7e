#ifndef CARTANPATH_RATIONAL_HPP
#define CARTANPATH_RATIONAL_HPP

#include <gmpxx.h>
#include <iosfwd>
#include <string>

namespace cartanpath {

/// Exact rational scalar. Always canonical: lowest terms, denominator > 0.
/// Every operation is exact; there is no rounding anywhere in this type.
class Rat {
public:
  Rat() : v_(0) {}
  Rat(long n) : v_(n) {}
  Rat(long num, long den);

  /// Parses "p", "-p" or "p/q" with q > 0 after canonicalization.
  /// Throws std::invalid_argument on anything else (no floats, no spaces).
  static Rat parse(const std::string& s);

  Rat operator-() const { return Rat(mpq_class(-v_)); }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }
  Rat abs() const { return Rat(mpq_class(::abs(v_))); }
  Rat inverse() const;

  /// Integer power; k < 0 requires a nonzero base.
  Rat pow(long k) const;

  std::string str() const;
  std::string num_str() const { return v_.get_num().get_str(); }
  std::string den_str() const { return v_.get_den().get_str(); }
  double to_double() const { return v_.get_d(); }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r);

private:
  explicit Rat(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_;
};

}  // namespace cartanpath

#endif
