#include "cartanpath/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace cartanpath {

Rat::Rat(long num, long den) {
  if (den == 0) throw std::domain_error("Rat: zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw std::domain_error("Rat: division by zero");
  v_ /= o.v_;
  return *this;
}

Rat Rat::inverse() const {
  if (is_zero()) throw std::domain_error("Rat: inverse of zero");
  return Rat(mpq_class(1) / v_);
}

Rat Rat::pow(long k) const {
  if (k == 0) return Rat(1);
  Rat base = k > 0 ? *this : inverse();
  unsigned long n = k > 0 ? static_cast<unsigned long>(k)
                          : static_cast<unsigned long>(-(k + 1)) + 1ul;
  Rat acc(1);
  Rat sq = base;
  while (n > 0) {
    if (n & 1ul) acc *= sq;
    sq *= sq;
    n >>= 1;
  }
  return acc;
}

namespace {

bool valid_rational_literal(const std::string& s) {
  std::size_t i = 0;
  if (i < s.size() && s[i] == '-') ++i;
  std::size_t digits = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
    ++i;
    ++digits;
  }
  if (digits == 0) return false;
  if (i == s.size()) return true;
  if (s[i] != '/') return false;
  ++i;
  digits = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
    ++i;
    ++digits;
  }
  return digits > 0 && i == s.size();
}

}  // namespace

Rat Rat::parse(const std::string& s) {
  if (!valid_rational_literal(s))
    throw std::invalid_argument("Rat: malformed rational string '" + s + "'");
  mpq_class v;
  if (v.set_str(s, 10) != 0)
    throw std::invalid_argument("Rat: malformed rational string '" + s + "'");
  if (sgn(v.get_den()) == 0)
    throw std::invalid_argument("Rat: zero denominator in '" + s + "'");
  v.canonicalize();
  Rat r;
  r.v_ = v;
  return r;
}

std::string Rat::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

}  // namespace cartanpath
