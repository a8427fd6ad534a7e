#include "cartanpath/sl2.hpp"

#include <cassert>
#include <sstream>

namespace cartanpath {

std::string Sl2Vector::str() const {
  std::ostringstream os;
  os << "(" << h << "," << e << "," << f << ")";
  return os.str();
}

Sl2Vector operator+(const Sl2Vector& u, const Sl2Vector& v) {
  return {u.h + v.h, u.e + v.e, u.f + v.f};
}

Sl2Vector operator-(const Sl2Vector& u, const Sl2Vector& v) {
  return {u.h - v.h, u.e - v.e, u.f - v.f};
}

Sl2Vector operator*(const Rat& s, const Sl2Vector& u) {
  return {s * u.h, s * u.e, s * u.f};
}

Sl2Vector sl2_bracket(const Sl2Vector& u, const Sl2Vector& v) {
  return {u.e * v.f - u.f * v.e, Rat(2) * (u.h * v.e - u.e * v.h),
          Rat(2) * (u.f * v.h - u.h * v.f)};
}

Rat q_form(const Sl2Vector& u) { return u.h * u.h + u.e * u.f; }

Rat killing_pairing(const Sl2Vector& u, const Sl2Vector& v) {
  return u.h * v.h + (u.e * v.f + u.f * v.e) / Rat(2);
}

Sl2Vector adjoint(const Rat& g11, const Rat& g12, const Rat& g21, const Rat& g22,
                  const Sl2Vector& u) {
  Rat dg = g11 * g22 - g12 * g21;
  if (dg.is_zero()) throw std::domain_error("adjoint: singular matrix");
  // u as a matrix (h, e; f, -h); compute g u g^{-1}
  Rat m11 = u.h, m12 = u.e, m21 = u.f, m22 = -u.h;
  Rat t11 = g11 * m11 + g12 * m21, t12 = g11 * m12 + g12 * m22;
  Rat t21 = g21 * m11 + g22 * m21, t22 = g21 * m12 + g22 * m22;
  Rat r11 = (t11 * g22 - t12 * g21) / dg;
  Rat r12 = (-t11 * g12 + t12 * g11) / dg;
  Rat r21 = (t21 * g22 - t22 * g21) / dg;
  return {r11, r12, r21};
}

std::string to_string(CausalType t) {
  switch (t) {
    case CausalType::Timelike: return "timelike";
    case CausalType::Lightlike: return "lightlike";
    case CausalType::Spacelike: return "spacelike";
  }
  return "?";
}

CausalType causal_type(const Sl2Vector& u) {
  if (u.is_zero()) throw std::domain_error("causal_type: zero vector");
  int s = q_form(u).sign();
  if (s < 0) return CausalType::Timelike;
  if (s > 0) return CausalType::Spacelike;
  return CausalType::Lightlike;
}

namespace {

bool proportional(const Sl2Vector& u, const Sl2Vector& v) {
  return (u.h * v.e - u.e * v.h).is_zero() && (u.h * v.f - u.f * v.h).is_zero() &&
         (u.e * v.f - u.f * v.e).is_zero();
}

Sl2Vector canonical_rep(const Sl2Vector& u) {
  if (u.is_zero()) throw std::domain_error("LinePair: zero representative");
  Rat lead = !u.h.is_zero() ? u.h : (!u.e.is_zero() ? u.e : u.f);
  return lead.inverse() * u;
}

}  // namespace

CausalType plane_type(const Sl2Vector& u, const Sl2Vector& v) {
  if (u.is_zero() || v.is_zero() || proportional(u, v))
    throw std::domain_error("plane_type: vectors do not span a plane");
  Rat quu = q_form(u), qvv = q_form(v), quv = killing_pairing(u, v);
  Rat disc = quu * qvv - quv * quv;  // Gram determinant of q restricted
  int s = disc.sign();
  if (s < 0) return CausalType::Timelike;
  if (s > 0) return CausalType::Spacelike;
  return CausalType::Lightlike;
}

LinePair::LinePair(const Sl2Vector& d1, const Sl2Vector& d2)
    : d1_(canonical_rep(d1)), d2_(canonical_rep(d2)) {
  if (d1_ == d2_) throw std::domain_error("LinePair: lines must be distinct");
}

Rat cross_ratio(const LinePair& pair) {
  Rat k11 = killing_pairing(pair.d1(), pair.d1());
  Rat k22 = killing_pairing(pair.d2(), pair.d2());
  if (k11.is_zero() || k22.is_zero())
    throw std::domain_error("cross_ratio: undefined for a lightlike generator");
  Rat k12 = killing_pairing(pair.d1(), pair.d2());
  return (k12 * k12) / (k11 * k22);
}

AdYMatrix pair_to_path_structure(const LinePair& pair) {
  CausalType pt = plane_type(pair.d1(), pair.d2());
  if (pt == CausalType::Lightlike)
    throw std::domain_error(
        "pair_to_path_structure: lightlike plane is integrable, not contact");
  const Sl2Vector x1 = pair.d1(), x2 = pair.d2();
  Sl2Vector y = Rat(-1) * sl2_bracket(x1, x2);
  // a contact pair always brackets nontrivially
  assert(!y.is_zero());

  Mat3 basis{};
  auto put = [&](int col, const Sl2Vector& v) {
    basis.m[0][col] = v.h;
    basis.m[1][col] = v.e;
    basis.m[2][col] = v.f;
  };
  put(0, x1);
  put(1, x2);
  put(2, y);
  Mat3 binv = inverse(basis);

  auto column = [&](const Sl2Vector& target) {
    return binv * Vec3{target.h, target.e, target.f};
  };
  Vec3 c1 = column(sl2_bracket(y, x1));
  Vec3 c2 = column(sl2_bracket(y, x2));
  // ad_Y fixes the contact plane: the span of the pair is the q-orthogonal
  // complement of the non-lightlike Y
  assert(c1[2].is_zero() && c2[2].is_zero());
  return AdYMatrix(c1[0], c2[0], c1[1], c2[1], c1[2], c2[2]);
}

namespace {

int lightlike_count(const LinePair& p) {
  return (causal_type(p.d1()) == CausalType::Lightlike ? 1 : 0) +
         (causal_type(p.d2()) == CausalType::Lightlike ? 1 : 0);
}

/// Ordered line types after the reorder convention: when the pair's adapted
/// matrix is canonicalized through the swapped ordering, compare in the
/// swapped order.
std::pair<CausalType, CausalType> canonical_types(const LinePair& p) {
  bool swap = normalize(pair_to_path_structure(p)).reordered;
  CausalType t1 = causal_type(p.d1());
  CausalType t2 = causal_type(p.d2());
  return swap ? std::make_pair(t2, t1) : std::make_pair(t1, t2);
}

std::string type_pattern(const std::pair<CausalType, CausalType>& t) {
  return to_string(t.first) + "/" + to_string(t.second);
}

}  // namespace

IsomorphismDecision locally_isomorphic(const LinePair& p1, const LinePair& p2) {
  CausalType pl1 = plane_type(p1.d1(), p1.d2());
  CausalType pl2 = plane_type(p2.d1(), p2.d2());
  if (pl1 == CausalType::Lightlike || pl2 == CausalType::Lightlike)
    throw std::domain_error("locally_isomorphic: non-contact (lightlike) plane");

  IsomorphismDecision dec;
  int l1 = lightlike_count(p1), l2 = lightlike_count(p2);

  if (l1 == 2 && l2 == 2) {
    dec.isomorphic = true;
    dec.case_id = 1;
    dec.detail = "all four lines lightlike; both structures flat";
    return dec;
  }
  if (l1 == 1 && l2 == 1) {
    auto other = [](const LinePair& p) {
      return causal_type(p.d1()) == CausalType::Lightlike ? causal_type(p.d2())
                                                          : causal_type(p.d1());
    };
    CausalType o1 = other(p1), o2 = other(p2);
    dec.case_id = 2;
    dec.isomorphic = (o1 == o2);
    dec.detail = "one lightlike line in each pair; remaining types " + to_string(o1) +
                 " vs " + to_string(o2);
    return dec;
  }
  if (l1 != l2 || l1 != 0) {
    dec.detail = "lightlike line counts differ (" + std::to_string(l1) + " vs " +
                 std::to_string(l2) + "); no case applies";
    return dec;
  }

  dec.cr1 = cross_ratio(p1);
  dec.cr2 = cross_ratio(p2);
  if (pl1 == CausalType::Spacelike && pl2 == CausalType::Spacelike) {
    dec.case_id = 3;
    dec.isomorphic = (*dec.cr1 == *dec.cr2);
    dec.detail = "spacelike planes; cross-ratios " + dec.cr1->str() + " vs " + dec.cr2->str();
    return dec;
  }
  if (pl1 == CausalType::Timelike && pl2 == CausalType::Timelike) {
    auto t1 = canonical_types(p1);
    auto t2 = canonical_types(p2);
    dec.case_id = 4;
    dec.isomorphic = (t1 == t2) && (*dec.cr1 == *dec.cr2);
    if (t1.first == CausalType::Timelike && t1.second == CausalType::Timelike)
      dec.subcomponent = "both-timelike";
    else if (t1.first == CausalType::Spacelike && t1.second == CausalType::Spacelike)
      dec.subcomponent = "both-spacelike";
    else
      dec.subcomponent = "mixed";
    dec.detail = "timelike planes; type patterns " + type_pattern(t1) + " vs " +
                 type_pattern(t2) + "; cross-ratios " + dec.cr1->str() + " vs " +
                 dec.cr2->str();
    return dec;
  }
  dec.detail = "plane types differ (" + to_string(pl1) + " vs " + to_string(pl2) +
               "); no case applies";
  return dec;
}

}  // namespace cartanpath
