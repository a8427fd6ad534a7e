#include "cartanpath/selfcheck.hpp"

#include <cmath>
#include <sstream>

#include "cartanpath/catalog.hpp"
#include "cartanpath/coframe_verify.hpp"
#include "cartanpath/flat_model.hpp"
#include "cartanpath/strict.hpp"

namespace cartanpath {

long TestRng::integer(long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(eng_);
}

Rat TestRng::rat(long max_num, long max_den, bool nonzero) {
  for (;;) {
    Rat r(integer(-max_num, max_num), integer(1, max_den));
    if (!nonzero || !r.is_zero()) return r;
  }
}

AdYMatrix TestRng::valid_ady() {
  switch (integer(0, 3)) {
    case 0: {  // ad_Y preserves the contact plane
      Rat a = rat(), b = rat(), c = rat();
      return AdYMatrix(a, b, c, -a, Rat(0), Rat(0));
    }
    case 1: {  // first torsion slot nonzero; constraints solved for a, b
      Rat e = rat(4, 3, true), f = rat(4, 3), c = rat();
      Rat a = -f * c / e, b = -f * f * c / (e * e);
      return AdYMatrix(a, b, c, -a, e, f);
    }
    case 2: {  // second torsion slot only: constraints force the top block
      Rat f = rat(4, 3, true), b = rat();
      return AdYMatrix(Rat(0), b, Rat(0), Rat(0), Rat(0), f);
    }
    default: {  // both torsion slots nonzero
      Rat e = rat(4, 3, true), f = rat(4, 3, true), c = rat();
      Rat a = -f * c / e, b = -f * f * c / (e * e);
      return AdYMatrix(a, b, c, -a, e, f);
    }
  }
}

GroupElement TestRng::group_element() {
  return GroupElement(rat(5, 3, true), rat(5, 3, true), rat(4, 3), rat(4, 3), rat(4, 3));
}

ConnectionComponents TestRng::components() {
  const int n = kFlatGenCount;
  auto form = [&]() {
    InvariantForm f(n);
    for (int i = 0; i < n; ++i)
      if (integer(0, 1)) f.add_term(1u << i, rat(5, 3));
    return f;
  };
  return {form(), form(), form(), form(), form(), form(), form(), form()};
}

Sl2Vector TestRng::sl2_vector() {
  for (;;) {
    Sl2Vector v{rat(4, 2), rat(4, 2), rat(4, 2)};
    if (!v.is_zero()) return v;
  }
}

LinePair TestRng::contact_pair() {
  for (;;) {
    Sl2Vector u = sl2_vector(), v = sl2_vector();
    if (q_form(u).is_zero() || q_form(v).is_zero()) continue;
    Rat gram = q_form(u) * q_form(v) - killing_pairing(u, v) * killing_pairing(u, v);
    if (gram.is_zero()) continue;  // dependent pair or lightlike plane
    return LinePair(u, v);
  }
}

namespace {

std::string count_detail(int cases, const std::string& what) {
  std::ostringstream os;
  os << cases << " " << what;
  return os.str();
}

}  // namespace

SuiteResult check_flat_model() {
  auto report = verify_flat_model();
  std::ostringstream os;
  if (!report.ok()) {
    os << "d^2 != 0 on generators:";
    for (int g : report.failed_generators) os << " " << flat_generator_names()[static_cast<std::size_t>(g)];
  } else {
    os << "d^2 = 0 on all " << kFlatGenCount << " generators (exact)";
  }
  return {"flat-model", report.ok(), os.str()};
}

SuiteResult check_table_reproduction(int samples_per_range) {
  auto rep = regenerate_tables(samples_per_range);
  std::ostringstream os;
  if (rep.ok()) {
    os << rep.rows_checked << " rows, " << rep.samples_checked
       << " probes reproduced exactly";
  } else {
    os << rep.diffs.size() << " diffs; first: " << rep.diffs.front();
  }
  return {"table-reproduction", rep.ok(), os.str()};
}

SuiteResult check_curvature_oracles(std::uint64_t seed, int cases) {
  TestRng rng(seed);
  for (int i = 0; i < cases; ++i) {
    AdYMatrix A = rng.valid_ady();
    auto direct = curvature_direct(A);
    auto via = curvature_via_embedding(compute_strict(A));
    if (direct != via)
      return {"curvature-oracles", false,
              "direct vs embedding mismatch at " + A.str()};
    auto pipe = verify_curvature_equations(A);
    if (!pipe.ok())
      return {"curvature-oracles", false, "nonzero residual in the exterior pipeline at " + A.str()};
    if (pipe.Q1 != direct.first || pipe.Q2 != direct.second)
      return {"curvature-oracles", false, "exterior pipeline Q mismatch at " + A.str()};
    auto strict_rep = verify_structure_equations(A);
    if (!strict_rep.ok())
      return {"curvature-oracles", false, "strict structure equations fail at " + A.str()};
  }
  return {"curvature-oracles", true,
          count_detail(cases, "matrices: direct = embedding = exterior pipeline, exact")};
}

SuiteResult check_transform_oracle(std::uint64_t seed, int pair_cases, int form_cases) {
  TestRng rng(seed);
  for (int i = 0; i < pair_cases; ++i) {
    GroupElement h = rng.group_element();
    ConnectionComponents comps = rng.components();
    if (!(transform_components(h, comps) == conjugation_oracle(h, comps)))
      return {"transform-oracle", false, "component law vs conjugation mismatch"};
  }
  for (int i = 0; i < form_cases; ++i) {
    GroupElement h = rng.group_element();
    CurvatureTuple q{rng.rat(), rng.rat(), rng.rat(), rng.rat()};
    if (!verify_curvature_form_laws(h, q))
      return {"transform-oracle", false, "curvature form law mismatch"};
  }
  std::ostringstream os;
  os << pair_cases << " conjugation cases + " << form_cases
     << " curvature-form cases, exact";
  return {"transform-oracle", true, os.str()};
}

SuiteResult check_orbit_invariance(std::uint64_t seed, int cases) {
  TestRng rng(seed);
  for (int i = 0; i < cases; ++i) {
    AdYMatrix A = rng.valid_ady();
    Rat l1 = rng.rat(5, 3, true), l2 = rng.rat(5, 3, true);
    AdYMatrix B = scale_action(A, l1, l2);
    if (rng.integer(0, 1)) B = reorder(B);
    NormalForm na = normalize(A), nb = normalize(B);
    if (!na.same_orbit_data(nb))
      return {"orbit-invariance", false,
              "normal form not constant on the orbit of " + A.str()};
    auto qa = curvature_direct(A), qb = curvature_direct(B);
    if ((qa.first * qa.second).sign() != (qb.first * qb.second).sign())
      return {"orbit-invariance", false, "sign(Q1*Q2) not preserved on the orbit of " + A.str()};
    if (na.witness_residual > 1e-12 || nb.witness_residual > 1e-12)
      return {"orbit-invariance", false, "scale witness residual above 1e-12 at " + A.str()};
  }
  return {"orbit-invariance", true,
          count_detail(cases, "orbits: leaf, modulus and sign(Q1*Q2) invariant")};
}

SuiteResult check_reduction_solver(std::uint64_t seed, int cases, double tolerance) {
  std::mt19937_64 eng(seed);
  std::uniform_real_distribution<double> mag(-6.0, 6.0), sign01(0.0, 1.0);
  double worst = 0.0;
  for (int i = 0; i < cases; ++i) {
    double q1 = std::pow(10.0, mag(eng)) * (sign01(eng) < 0.5 ? -1.0 : 1.0);
    double q2 = std::pow(10.0, mag(eng)) * (sign01(eng) < 0.5 ? -1.0 : 1.0);
    ReductionWitness w = reduction_scale_solve(q1, q2);
    worst = std::max({worst, w.residual1, w.residual2});
    if (w.residual1 > tolerance || w.residual2 > tolerance) {
      std::ostringstream os;
      os << "residuals (" << w.residual1 << ", " << w.residual2 << ") above " << tolerance
         << " at Q1=" << q1 << " Q2=" << q2;
      return {"reduction-solver", false, os.str()};
    }
    if (w.a <= 0.0)
      return {"reduction-solver", false, "witness convention violated: a <= 0"};
  }
  std::ostringstream os;
  os << cases << " curvature pairs, worst residual " << worst;
  return {"reduction-solver", true, os.str()};
}

SuiteResult check_sl2_consistency(std::uint64_t seed, int cases) {
  TestRng rng(seed);

  // the two displayed flat configurations must produce exactly zero curvature
  {
    LinePair both_null(Sl2Vector{Rat(0), Rat(1), Rat(0)}, Sl2Vector{Rat(0), Rat(0), Rat(1)});
    auto q = curvature_direct(pair_to_path_structure(both_null));
    if (!q.first.is_zero() || !q.second.is_zero())
      return {"sl2-consistency", false, "null-pair configuration is not curvature-flat"};
    LinePair orthogonal(Sl2Vector{Rat(1), Rat(0), Rat(0)},
                        Sl2Vector{Rat(0), Rat(1), Rat(-1)});
    q = curvature_direct(pair_to_path_structure(orthogonal));
    if (!q.first.is_zero() || !q.second.is_zero())
      return {"sl2-consistency", false,
              "orthogonal timelike/spacelike configuration is not curvature-flat"};
  }

  for (int i = 0; i < cases; ++i) {
    LinePair p1 = rng.contact_pair();
    if (causal_type(p1.d1()) == CausalType::Lightlike ||
        causal_type(p1.d2()) == CausalType::Lightlike) {
      --i;
      continue;
    }
    // a conjugate copy: genuinely isomorphic by construction
    Rat g11 = rng.rat(3, 2), g12 = rng.rat(3, 2), g21 = rng.rat(3, 2), g22 = rng.rat(3, 2);
    if ((g11 * g22 - g12 * g21).is_zero()) {
      --i;
      continue;
    }
    LinePair conj(adjoint(g11, g12, g21, g22, p1.d1()), adjoint(g11, g12, g21, g22, p1.d2()));
    LinePair p2 = rng.contact_pair();
    if (causal_type(p2.d1()) == CausalType::Lightlike ||
        causal_type(p2.d2()) == CausalType::Lightlike) {
      --i;
      continue;
    }

    auto leaf_data = [](const LinePair& p) { return normalize(pair_to_path_structure(p)); };
    NormalForm n1 = leaf_data(p1);

    auto agree = [&](const LinePair& other) {
      NormalForm n2 = leaf_data(other);
      bool oracle = n1.same_orbit_data(n2);
      bool verdict = locally_isomorphic(p1, other).isomorphic;
      return oracle == verdict;
    };
    if (!agree(conj))
      return {"sl2-consistency", false, "decision disagrees with the normal-form oracle (conjugate pair)"};
    if (!agree(p2))
      return {"sl2-consistency", false, "decision disagrees with the normal-form oracle (independent pair)"};
    if (!locally_isomorphic(p1, p1).isomorphic)
      return {"sl2-consistency", false, "reflexivity violated"};
    if (!locally_isomorphic(p1, conj).isomorphic)
      return {"sl2-consistency", false, "conjugate pairs not recognized as isomorphic"};
  }
  return {"sl2-consistency", true,
          count_detail(cases, "pair comparisons agree with the normal-form oracle; flat bullets exact")};
}

SuiteResult check_jacobi_property(std::uint64_t seed, int cases) {
  TestRng rng(seed);
  for (int i = 0; i < cases; ++i) {
    AdYMatrix A = rng.valid_ady();
    if (!jacobi_check(to_structure_constants(A)).empty())
      return {"jacobi-property", false, "valid matrix produced a Jacobi violation at " + A.str()};
  }
  // each constraint independently detectable
  struct Fixture {
    std::array<long, 6> raw;
    int expect;
  };
  const Fixture fixtures[] = {
      {{1, 0, 0, 0, 0, 0}, 1},
      {{0, 1, 5, 0, 1, 0}, 2},
      {{0, 0, 1, 0, 0, 1}, 3},
  };
  for (const auto& fx : fixtures) {
    auto vs = check_ady_constraints(Rat(fx.raw[0]), Rat(fx.raw[1]), Rat(fx.raw[2]),
                                    Rat(fx.raw[3]), Rat(fx.raw[4]), Rat(fx.raw[5]));
    if (vs.size() != 1 || vs[0].index != fx.expect)
      return {"jacobi-property", false,
              "constraint fixture " + std::to_string(fx.expect) + " not isolated"};
  }
  return {"jacobi-property", true,
          count_detail(cases, "matrices Jacobi-clean; 3 violation fixtures isolated")};
}

std::vector<SuiteResult> run_self_check(const SelfCheckOptions& opt) {
  std::vector<SuiteResult> out;
  out.push_back(check_flat_model());
  out.push_back(check_table_reproduction());
  out.push_back(check_curvature_oracles(opt.seed, opt.cases));
  out.push_back(check_transform_oracle(opt.seed + 1, std::max(1, opt.cases / 2),
                                       std::max(1, opt.cases / 10)));
  out.push_back(check_orbit_invariance(opt.seed + 2, std::max(1, opt.cases / 2)));
  out.push_back(check_reduction_solver(opt.seed + 3, opt.cases));
  out.push_back(check_sl2_consistency(opt.seed + 4, std::max(1, opt.cases / 5)));
  out.push_back(check_jacobi_property(opt.seed + 5, opt.cases));
  return out;
}

}  // namespace cartanpath
