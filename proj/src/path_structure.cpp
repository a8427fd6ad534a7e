#include "cartanpath/path_structure.hpp"

#include <cmath>
#include <sstream>

namespace cartanpath {

std::vector<ConstraintViolation> check_ady_constraints(const Rat& a11, const Rat& a12,
                                                       const Rat& a21, const Rat& a22,
                                                       const Rat& a31, const Rat& a32) {
  std::vector<ConstraintViolation> out;
  Rat r1 = a11 + a22;
  if (!r1.is_zero()) out.push_back({1, "a11 + a22 = 0", r1});
  Rat r2 = a31 * a12 - a32 * a11;
  if (!r2.is_zero()) out.push_back({2, "a31*a12 - a32*a11 = 0", r2});
  Rat r3 = a31 * a22 - a32 * a21;
  if (!r3.is_zero()) out.push_back({3, "a31*a22 - a32*a21 = 0", r3});
  return out;
}

namespace {
std::string describe(const std::vector<ConstraintViolation>& vs) {
  std::ostringstream os;
  os << "ad_Y constraint violation:";
  for (const auto& v : vs) os << " [" << v.index << "] " << v.equation
                              << " (residual " << v.residual.str() << ")";
  return os.str();
}
}  // namespace

ConstraintError::ConstraintError(std::vector<ConstraintViolation> violations)
    : std::runtime_error(describe(violations)), violations_(std::move(violations)) {}

AdYMatrix::AdYMatrix(const Rat& a11, const Rat& a12, const Rat& a21, const Rat& a22,
                     const Rat& a31, const Rat& a32)
    : e_{a11, a12, a21, a22, a31, a32} {
  auto vs = check_ady_constraints(a11, a12, a21, a22, a31, a32);
  if (!vs.empty()) throw ConstraintError(std::move(vs));
}

AdYMatrix AdYMatrix::from_rows(const std::array<Rat, 6>& r) {
  return AdYMatrix(r[0], r[1], r[2], r[3], r[4], r[5]);
}

std::string AdYMatrix::str() const {
  std::ostringstream os;
  os << "(" << e_[0] << "," << e_[1] << "; " << e_[2] << "," << e_[3] << "; " << e_[4]
     << "," << e_[5] << ")";
  return os.str();
}

StructureConstants to_structure_constants(const AdYMatrix& A) {
  // basis (e1, e2, e3) = (X1, X2, Y)
  Vec3 b12{Rat(0), Rat(0), Rat(-1)};                    // [X1,X2] = -Y
  Vec3 b13{-A.a11(), -A.a21(), -A.a31()};               // [X1,Y] = -[Y,X1]
  Vec3 b23{-A.a12(), -A.a22(), -A.a32()};               // [X2,Y] = -[Y,X2]
  return StructureConstants(b12, b13, b23);
}

AdYMatrix reorder(const AdYMatrix& A) {
  return AdYMatrix(-A.a22(), -A.a21(), -A.a12(), -A.a11(), A.a32(), A.a31());
}

AdYMatrix scale_action(const AdYMatrix& A, const Rat& l1, const Rat& l2) {
  if (l1.is_zero() || l2.is_zero())
    throw std::domain_error("scale_action: scales must be nonzero");
  Rat l12 = l1 * l2;
  return AdYMatrix(l12 * A.a11(), l2 * l2 * A.a12(), l1 * l1 * A.a21(), l12 * A.a22(),
                   l1 * A.a31(), l2 * A.a32());
}

std::string to_label(BianchiType t) {
  switch (t) {
    case BianchiType::II: return "II";
    case BianchiType::III: return "III";
    case BianchiType::IV: return "IV";
    case BianchiType::VI: return "VI";
    case BianchiType::VI0: return "VI_0";
    case BianchiType::VII: return "VII";
    case BianchiType::VII0: return "VII_0";
    case BianchiType::VIII: return "VIII";
    case BianchiType::IX: return "IX";
  }
  return "?";
}

std::string leaf_name(LeafCase leaf) {
  switch (leaf) {
    case LeafCase::Heisenberg: return "heisenberg";
    case LeafCase::Sl2Diag: return "sl2-diag";
    case LeafCase::Sl2Offdiag: return "sl2-offdiag";
    case LeafCase::Sl2Rot: return "sl2-rot";
    case LeafCase::Su2Rot: return "su2-rot";
    case LeafCase::EuclidVII0: return "euclid-VII0";
    case LeafCase::PoincareVI0: return "poincare-VI0";
    case LeafCase::SimpleFamily: return "simple-family(1,s;c,-1)";
    case LeafCase::AffRE: return "affR-e";
    case LeafCase::AffREF: return "affR-ef";
    case LeafCase::SolvFamilyE: return "solvable-family(0,0;c,0;1,0)";
    case LeafCase::SolvFamilyEF: return "solvable-family(-c,-c;c,c;1,1)";
  }
  return "?";
}

namespace {

/// Bianchi type of the simple-family leaf (1,s; c,-1; 0,0) with modulus c:
/// degenerate Killing form at s*c = -1 gives the flat solvable boundaries,
/// negative-definite Killing form gives IX, every other value is VIII.
BianchiType simple_family_bianchi(int sign, const Rat& c) {
  Rat sc = Rat(sign) * c;
  if (sc == Rat(-1)) return sign > 0 ? BianchiType::VII0 : BianchiType::VI0;
  if (sc < Rat(-1) && c.sign() < 0) return BianchiType::IX;
  return BianchiType::VIII;
}

BianchiType solvable_family_bianchi(const Rat& c) {
  Rat quarter(-1, 4);
  if (c == quarter) return BianchiType::IV;
  return c > quarter ? BianchiType::VI : BianchiType::VII;
}

// max relative entrywise deviation of the floating witness
double entry_residual(const AdYMatrix& got, const AdYMatrix& want, double l1, double l2) {
  auto diff = [](double x, const Rat& w) {
    double wd = w.to_double();
    return std::fabs(x - wd) / std::max(1.0, std::fabs(wd));
  };
  double a = got.a11().to_double(), b = got.a12().to_double(), c = got.a21().to_double();
  double e = got.a31().to_double(), f = got.a32().to_double();
  double r = 0.0;
  r = std::max(r, diff(l1 * l2 * a, want.a11()));
  r = std::max(r, diff(l2 * l2 * b, want.a12()));
  r = std::max(r, diff(l1 * l1 * c, want.a21()));
  r = std::max(r, diff(-l1 * l2 * a, want.a22()));
  r = std::max(r, diff(l1 * e, want.a31()));
  r = std::max(r, diff(l2 * f, want.a32()));
  return r;
}

std::string invariants_for(LeafCase leaf) {
  switch (leaf) {
    case LeafCase::Heisenberg: return "a = b = c = 0, e = f = 0";
    case LeafCase::Sl2Diag: return "b = c = 0, a != 0, e = f = 0";
    case LeafCase::Sl2Offdiag: return "a = 0, sign(b) = sign(c) (after reorder: +)";
    case LeafCase::Sl2Rot: return "a = 0, sign(b) = -1, sign(c) = +1";
    case LeafCase::Su2Rot: return "a = 0, sign(b) = +1, sign(c) = -1";
    case LeafCase::EuclidVII0: return "a = c = 0, sign(b) = +1, e = f = 0";
    case LeafCase::PoincareVI0: return "a = c = 0, sign(b) = -1, e = f = 0";
    case LeafCase::SimpleFamily: return "s = sign(b), cbar = sign(b)*b*c/a^2";
    case LeafCase::AffRE: return "c = f = 0, e != 0";
    case LeafCase::AffREF: return "c = 0, e != 0, f != 0";
    case LeafCase::SolvFamilyE: return "f = 0, cbar = c/e^2 != 0";
    case LeafCase::SolvFamilyEF: return "f != 0, cbar = c/e^2 != 0";
  }
  return "";
}

NormalForm finish(LeafCase leaf, int sign, std::optional<Rat> parameter, bool reordered,
                  AdYMatrix canonical, BianchiType bianchi, const AdYMatrix& work,
                  double l1, double l2) {
  NormalForm nf{leaf,     sign,    std::move(parameter), reordered,
                canonical, bianchi, invariants_for(leaf), l1,
                l2,        0.0};
  nf.witness_residual = entry_residual(work, nf.matrix, l1, l2);
  return nf;
}

}  // namespace

NormalForm normalize(const AdYMatrix& A) {
  const Rat zero(0), one(1);
  AdYMatrix work = A;
  bool reordered = false;
  auto flip = [&]() {
    work = reorder(work);
    reordered = !reordered;
  };

  if (work.e().is_zero() && work.f().is_zero()) {
    // ad_Y preserves the contact plane
    Rat a = work.a(), b = work.b(), c = work.c();
    if (a.is_zero() && b.is_zero() && c.is_zero()) {
      return finish(LeafCase::Heisenberg, 0, std::nullopt, reordered,
                    AdYMatrix(zero, zero, zero, zero, zero, zero), BianchiType::II, work,
                    1.0, 1.0);
    }
    if (b.is_zero() && c.is_zero()) {
      return finish(LeafCase::Sl2Diag, 0, std::nullopt, reordered,
                    AdYMatrix(one, zero, zero, -one, zero, zero), BianchiType::VIII, work,
                    1.0 / a.to_double(), 1.0);
    }
    if (b.is_zero()) flip();  // now b != 0
    b = work.b();
    c = work.c();
    a = work.a();
    if (!a.is_zero()) {
      int sign = b.sign();
      Rat cbar = b.abs() * c / (a * a);  // invariant under both scales
      if (sign < 0 && cbar.sign() < 0) {
        // canonical representative lives on the opposite ordering
        flip();
        a = work.a();
        b = work.b();
        c = work.c();
        sign = b.sign();
        cbar = b.abs() * c / (a * a);
      }
      double l2 = 1.0 / std::sqrt(std::fabs(b.to_double()));
      double l1 = 1.0 / (a.to_double() * l2);
      return finish(LeafCase::SimpleFamily, sign, cbar, reordered,
                    AdYMatrix(one, Rat(sign), cbar, -one, zero, zero),
                    simple_family_bianchi(sign, cbar), work, l1, l2);
    }
    // a = 0
    if (c.is_zero()) {
      int sign = b.sign();
      double l2 = 1.0 / std::sqrt(std::fabs(b.to_double()));
      return finish(sign > 0 ? LeafCase::EuclidVII0 : LeafCase::PoincareVI0, 0,
                    std::nullopt, reordered,
                    AdYMatrix(zero, Rat(sign), zero, zero, zero, zero),
                    sign > 0 ? BianchiType::VII0 : BianchiType::VI0, work, 1.0, l2);
    }
    if (b.sign() < 0 && c.sign() < 0) flip();  // (-,-) is the reorder partner of (+,+)
    b = work.b();
    c = work.c();
    LeafCase leaf;
    BianchiType type;
    if (b.sign() > 0 && c.sign() > 0) {
      leaf = LeafCase::Sl2Offdiag;
      type = BianchiType::VIII;
    } else if (b.sign() > 0) {
      leaf = LeafCase::Su2Rot;
      type = BianchiType::IX;
    } else {
      leaf = LeafCase::Sl2Rot;
      type = BianchiType::VIII;
    }
    double l1 = 1.0 / std::sqrt(std::fabs(c.to_double()));
    double l2 = 1.0 / std::sqrt(std::fabs(b.to_double()));
    return finish(leaf, 0, std::nullopt, reordered,
                  AdYMatrix(zero, Rat(b.sign()), Rat(c.sign()), zero, zero, zero), type,
                  work, l1, l2);
  }

  // ad_Y moves the contact plane: make the first torsion slot nonzero
  if (work.e().is_zero()) flip();
  Rat e = work.e(), f = work.f(), c = work.c();
  Rat cbar = c / (e * e);  // invariant: fixed by e -> 1, untouched by the other scale
  double l1 = 1.0 / e.to_double();
  if (f.is_zero()) {
    if (c.is_zero()) {
      return finish(LeafCase::AffRE, 0, std::nullopt, reordered,
                    AdYMatrix(zero, zero, zero, zero, one, zero), BianchiType::III, work,
                    l1, 1.0);
    }
    return finish(LeafCase::SolvFamilyE, 0, cbar, reordered,
                  AdYMatrix(zero, zero, cbar, zero, one, zero),
                  solvable_family_bianchi(cbar), work, l1, 1.0);
  }
  double l2 = 1.0 / f.to_double();
  if (c.is_zero()) {
    return finish(LeafCase::AffREF, 0, std::nullopt, reordered,
                  AdYMatrix(zero, zero, zero, zero, one, one), BianchiType::III, work, l1,
                  l2);
  }
  return finish(LeafCase::SolvFamilyEF, 0, cbar, reordered,
                AdYMatrix(-cbar, -cbar, cbar, cbar, one, one),
                solvable_family_bianchi(cbar), work, l1, l2);
}

BianchiType bianchi_type(const AdYMatrix& A) { return normalize(A).bianchi; }

namespace {

int rank3(std::array<Vec3, 3> v) {
  int rank = 0;
  for (int col = 0; col < 3 && rank < 3; ++col) {
    int pivot = -1;
    for (int r = rank; r < 3; ++r)
      if (!v[static_cast<std::size_t>(r)][col].is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(v[static_cast<std::size_t>(rank)], v[static_cast<std::size_t>(pivot)]);
    for (int r = rank + 1; r < 3; ++r) {
      Rat factor = v[static_cast<std::size_t>(r)][col] / v[static_cast<std::size_t>(rank)][col];
      v[static_cast<std::size_t>(r)] =
          v[static_cast<std::size_t>(r)] - factor * v[static_cast<std::size_t>(rank)];
    }
    ++rank;
  }
  return rank;
}

bool negative_definite(const Mat3& k) {
  Rat m1 = k.m[0][0];
  Rat m2 = k.m[0][0] * k.m[1][1] - k.m[0][1] * k.m[1][0];
  Rat m3 = det(k);
  return m1.sign() < 0 && m2.sign() > 0 && m3.sign() < 0;
}

}  // namespace

BianchiType bianchi_from_constants(const StructureConstants& sc) {
  if (!jacobi_check(sc).empty())
    throw std::invalid_argument("bianchi_from_constants: Jacobi violation");
  Mat3 kappa = killing_form(sc);
  if (!det(kappa).is_zero())
    return negative_definite(kappa) ? BianchiType::IX : BianchiType::VIII;

  // solvable: inspect the derived algebra
  std::array<Vec3, 3> gens = {sc.basis_bracket(0, 1), sc.basis_bracket(0, 2),
                              sc.basis_bracket(1, 2)};
  int r = rank3(gens);
  if (r == 0)
    throw std::invalid_argument("bianchi_from_constants: abelian algebra has no contact structure");

  std::array<Vec3, 3> basis = {Vec3{Rat(1), Rat(0), Rat(0)}, Vec3{Rat(0), Rat(1), Rat(0)},
                               Vec3{Rat(0), Rat(0), Rat(1)}};
  if (r == 1) {
    // derived algebra is a line; central <=> nilpotent (Heisenberg)
    Vec3 v{};
    for (const auto& g : gens)
      if (!is_zero(g)) {
        v = g;
        break;
      }
    for (const auto& x : basis)
      if (!is_zero(bracket(sc, x, v))) return BianchiType::III;
    return BianchiType::II;
  }
  if (r != 2)
    throw std::invalid_argument("bianchi_from_constants: degenerate Killing form with full derived algebra");

  // derived algebra n is an abelian plane; classify ad_X restricted to n
  std::array<Vec3, 2> n{};
  {
    std::array<Vec3, 3> rows = gens;
    int taken = 0;
    for (int col = 0; col < 3 && taken < 2; ++col) {
      int pivot = -1;
      for (int rr = taken; rr < 3; ++rr)
        if (!rows[static_cast<std::size_t>(rr)][col].is_zero()) {
          pivot = rr;
          break;
        }
      if (pivot < 0) continue;
      std::swap(rows[static_cast<std::size_t>(taken)], rows[static_cast<std::size_t>(pivot)]);
      for (int rr = taken + 1; rr < 3; ++rr) {
        Rat factor =
            rows[static_cast<std::size_t>(rr)][col] / rows[static_cast<std::size_t>(taken)][col];
        rows[static_cast<std::size_t>(rr)] =
            rows[static_cast<std::size_t>(rr)] - factor * rows[static_cast<std::size_t>(taken)];
      }
      n[static_cast<std::size_t>(taken)] = rows[static_cast<std::size_t>(taken)];
      ++taken;
    }
  }
  // pick a basis vector outside n
  Vec3 x{};
  for (const auto& cand : basis) {
    if (rank3({n[0], n[1], cand}) == 3) {
      x = cand;
      break;
    }
  }
  // M = matrix of ad_x|n in the basis (n0, n1): solve in the plane
  Mat3 plane = Mat3::zero();
  for (int i = 0; i < 3; ++i) {
    plane.m[i][0] = n[0][i];
    plane.m[i][1] = n[1][i];
    plane.m[i][2] = x[i];
  }
  Mat3 plane_inv = inverse(plane);
  auto in_plane = [&](const Vec3& v) {
    Vec3 coords = plane_inv * v;
    return std::array<Rat, 2>{coords[0], coords[1]};
  };
  auto c0 = in_plane(bracket(sc, x, n[0]));
  auto c1 = in_plane(bracket(sc, x, n[1]));
  Rat t = c0[0] + c1[1];
  Rat dd = c0[0] * c1[1] - c1[0] * c0[1];
  Rat disc = t * t - Rat(4) * dd;
  if (t.is_zero()) {
    if (dd.sign() > 0) return BianchiType::VII0;
    if (dd.sign() < 0) return BianchiType::VI0;
    throw std::invalid_argument("bianchi_from_constants: nilpotent action on a plane");
  }
  if (disc.is_zero()) {
    bool scalar = c1[0].is_zero() && c0[1].is_zero() && c0[0] == c1[1];
    if (scalar)
      throw std::invalid_argument("bianchi_from_constants: Bianchi V carries no contact structure");
    return BianchiType::IV;
  }
  return disc.sign() > 0 ? BianchiType::VI : BianchiType::VII;
}

}  // namespace cartanpath
