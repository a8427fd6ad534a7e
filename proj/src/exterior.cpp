#include "cartanpath/exterior.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace cartanpath {

InvariantForm::InvariantForm(int generators) : n_(generators) {
  if (generators < 0 || generators > 31)
    throw std::invalid_argument("InvariantForm: generator count out of range");
}

InvariantForm InvariantForm::generator(int generators, int index) {
  InvariantForm f(generators);
  if (index < 0 || index >= generators)
    throw std::invalid_argument("InvariantForm: generator index out of range");
  f.terms_[1u << index] = Rat(1);
  return f;
}

InvariantForm InvariantForm::constant(int generators, const Rat& value) {
  InvariantForm f(generators);
  if (!value.is_zero()) f.terms_[0] = value;
  return f;
}

Rat InvariantForm::coeff(std::uint32_t mask) const {
  auto it = terms_.find(mask);
  return it == terms_.end() ? Rat(0) : it->second;
}

InvariantForm& InvariantForm::add_term(std::uint32_t mask, const Rat& c) {
  if (c.is_zero()) return *this;
  auto [it, inserted] = terms_.try_emplace(mask, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
  return *this;
}

InvariantForm InvariantForm::operator-() const {
  InvariantForm r(n_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

InvariantForm& InvariantForm::operator+=(const InvariantForm& o) {
  if (n_ != o.n_) throw std::invalid_argument("InvariantForm: mismatched generator sets");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

InvariantForm& InvariantForm::operator-=(const InvariantForm& o) {
  if (n_ != o.n_) throw std::invalid_argument("InvariantForm: mismatched generator sets");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

InvariantForm& InvariantForm::operator*=(const Rat& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

int wedge_sign(std::uint32_t a, std::uint32_t b) {
  if (a & b) return 0;
  int inversions = 0;
  std::uint32_t rest = a;
  while (rest) {
    int i = std::countr_zero(rest);
    rest &= rest - 1;
    inversions += std::popcount(b & ((1u << i) - 1u));
  }
  return (inversions & 1) ? -1 : 1;
}

InvariantForm wedge(const InvariantForm& a, const InvariantForm& b) {
  if (a.generators() != b.generators())
    throw std::invalid_argument("wedge: mismatched generator sets");
  InvariantForm r(a.generators());
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      int s = wedge_sign(ma, mb);
      if (s == 0) continue;
      Rat c = ca * cb;
      r.add_term(ma | mb, s > 0 ? c : -c);
    }
  return r;
}

std::string InvariantForm::str(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << (c.sign() < 0 ? " - " : " + ");
    if (first && c.sign() < 0) os << "-";
    first = false;
    Rat mag = c.abs();
    std::string mono;
    std::uint32_t rest = m;
    while (rest) {
      int i = std::countr_zero(rest);
      rest &= rest - 1;
      if (!mono.empty()) mono += "^";
      mono += (i < static_cast<int>(names.size())) ? names[i] : ("g" + std::to_string(i));
    }
    if (mono.empty()) {
      os << mag.str();
    } else if (mag == Rat(1)) {
      os << mono;
    } else {
      os << mag.str() << " " << mono;
    }
  }
  return os.str();
}

DifferentialRule::DifferentialRule(int generators) : n_(generators) {
  d_of_generator.assign(static_cast<std::size_t>(generators), InvariantForm(generators));
}

InvariantForm d(const InvariantForm& form, const DifferentialRule& rules) {
  if (form.generators() != rules.generators())
    throw std::invalid_argument("d: mismatched generator sets");
  InvariantForm out(form.generators());
  for (const auto& [mask, c] : form.terms()) {
    int position = 0;
    std::uint32_t rest = mask;
    while (rest) {
      int i = std::countr_zero(rest);
      rest &= rest - 1;
      InvariantForm tail(form.generators());
      tail.add_term(mask & ~(1u << i), (position & 1) ? -c : c);
      out += wedge(rules.d_of_generator[static_cast<std::size_t>(i)], tail);
      ++position;
    }
  }
  return out;
}

std::vector<int> DifferentialRule::d_squared_violations() const {
  std::vector<int> bad;
  for (int i = 0; i < n_; ++i)
    if (!d(d_of_generator[static_cast<std::size_t>(i)], *this).is_zero()) bad.push_back(i);
  return bad;
}

}  // namespace cartanpath
