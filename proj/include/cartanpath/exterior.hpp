#ifndef CARTANPATH_EXTERIOR_HPP
#define CARTANPATH_EXTERIOR_HPP

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "cartanpath/rational.hpp"

namespace cartanpath {

/// Element of the exterior algebra over a finite set of 1-form generators
/// with exact rational coefficients.
///
/// A term is kept on a strictly increasing generator tuple encoded as a
/// bitmask (bit i = generator i), so canonical ordering and graded
/// anticommutativity are structural. Zero coefficients are never stored.
/// Mixed-degree sums are allowed; wedge and d act termwise.
class InvariantForm {
public:
  explicit InvariantForm(int generators);

  static InvariantForm zero(int generators) { return InvariantForm(generators); }
  static InvariantForm generator(int generators, int index);
  static InvariantForm constant(int generators, const Rat& value);

  int generators() const { return n_; }
  bool is_zero() const { return terms_.empty(); }

  /// Coefficient on the increasing tuple encoded by mask (0 if absent).
  Rat coeff(std::uint32_t mask) const;

  /// Adds c on the given tuple, dropping the term if it cancels.
  InvariantForm& add_term(std::uint32_t mask, const Rat& c);

  const std::map<std::uint32_t, Rat>& terms() const { return terms_; }

  InvariantForm operator-() const;
  InvariantForm& operator+=(const InvariantForm& o);
  InvariantForm& operator-=(const InvariantForm& o);
  InvariantForm& operator*=(const Rat& s);

  friend InvariantForm operator+(InvariantForm a, const InvariantForm& b) { return a += b; }
  friend InvariantForm operator-(InvariantForm a, const InvariantForm& b) { return a -= b; }
  friend InvariantForm operator*(const Rat& s, InvariantForm a) { return a *= s; }

  friend bool operator==(const InvariantForm& a, const InvariantForm& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

  /// Rendering with generator names, e.g. "2 th^th1 - 1/3 th1^th2".
  std::string str(std::span<const std::string> names) const;

private:
  int n_;
  std::map<std::uint32_t, Rat> terms_;
};

/// Graded-anticommutative associative product. Throws std::invalid_argument
/// when the operands live over different generator sets.
InvariantForm wedge(const InvariantForm& a, const InvariantForm& b);

/// Sign of e_A ^ e_B as a reordering of the increasing tuple A u B;
/// 0 when the tuples intersect.
int wedge_sign(std::uint32_t a, std::uint32_t b);

/// Exterior derivative of every generator, as a degree-2 form. Extending by
/// the graded Leibniz rule must satisfy d(d gen) = 0 on every generator for
/// the rule set to define a differential; that is checked, never assumed.
struct DifferentialRule {
  explicit DifferentialRule(int generators);

  int generators() const { return n_; }
  std::vector<InvariantForm> d_of_generator;

  /// Indices of generators on which d(d gen) != 0. Empty means consistent.
  std::vector<int> d_squared_violations() const;

private:
  int n_;
};

/// Linear, graded-Leibniz extension of the rule set. Throws
/// std::invalid_argument on a generator-count mismatch.
InvariantForm d(const InvariantForm& form, const DifferentialRule& rules);

}  // namespace cartanpath

#endif
