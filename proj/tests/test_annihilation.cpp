#include <gtest/gtest.h>

#include <random>

#include "confcoh/annihilation.hpp"
#include "confcoh/engine.hpp"

using namespace confcoh;

namespace {

AnnElement single(int gen, int level, const Rat& c = 1) {
  AnnElement e;
  if (c != 0) e[{gen, level}] = c;
  return e;
}

AnnElement sum(AnnElement a, const AnnElement& b, const Rat& s = 1) {
  for (const auto& [x, c] : b) {
    a[x] += s * c;
    if (a[x] == 0) a.erase(x);
  }
  return a;
}

std::vector<AnnBasisVector> basis_vectors(int gens, int max_level) {
  std::vector<AnnBasisVector> out;
  for (int g = 0; g < gens; ++g)
    for (int m = 0; m <= max_level; ++m) out.push_back({g, m});
  return out;
}

// Returns the number of failed antisymmetry or Jacobi checks.
long lie_failures(const ConformalAlgebra& A, int max_level) {
  const auto all = basis_vectors(A.size(), max_level);
  long bad = 0;
  for (const auto& x : all)
    for (const auto& y : all)
      if (sum(ann_bracket(A, x, y), ann_bracket(A, y, x)) != AnnElement{}) ++bad;
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j)
      for (std::size_t k = j + 1; k < all.size(); ++k) {
        const AnnElement X = single(all[i].gen, all[i].level);
        const AnnElement Y = single(all[j].gen, all[j].level);
        const AnnElement Z = single(all[k].gen, all[k].level);
        AnnElement j3 = ann_bracket(A, X, ann_bracket(A, Y, Z));
        j3 = sum(j3, ann_bracket(A, Y, ann_bracket(A, Z, X)));
        j3 = sum(j3, ann_bracket(A, Z, ann_bracket(A, X, Y)));
        if (!j3.empty()) ++bad;
      }
  return bad;
}

ConformalAlgebra mutate(const ConformalAlgebra& A, int i, int j, int k, const RatPoly& delta) {
  auto table = A.table();
  table[i][j][k] += delta;
  return ConformalAlgebra(A.name() + "-mutated", A.gens(), table, A.kind());
}

}  // namespace

TEST(Annihilation, VirBracket) {
  const ConformalAlgebra vir = build_vir();
  EXPECT_EQ(ann_bracket(vir, AnnBasisVector{0, 1}, AnnBasisVector{0, 2}), single(0, 2, -1));
  for (int m = 0; m <= 8; ++m)
    for (int n = 0; n <= 8; ++n) {
      // Vector fields -t^m d/dt.
      const AnnElement expect = (m + n >= 1) ? single(0, m + n - 1, m - n) : AnnElement{};
      EXPECT_EQ(ann_bracket(vir, AnnBasisVector{0, m}, AnnBasisVector{0, n}), expect) << m << " " << n;
    }
}

TEST(Annihilation, CurrentBracket) {
  const LiePresentation g = LiePresentation::sl2();
  const ConformalAlgebra cur = build_current(g);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int m = 0; m <= 5; ++m)
        for (int n = 0; n <= 5; ++n) {
          AnnElement expect;
          for (int c = 0; c < 3; ++c) expect = sum(expect, single(c, m + n, g.c(a, b, c)));
          EXPECT_EQ(ann_bracket(cur, AnnBasisVector{a, m}, AnnBasisVector{b, n}), expect);
        }
  EXPECT_TRUE(ann_bracket(cur, AnnBasisVector{0, 3}, AnnBasisVector{0, 3}).empty());
}

TEST(Annihilation, LieAxiomsAndMutations) {
  EXPECT_EQ(lie_failures(build_vir(), 8), 0);
  EXPECT_EQ(lie_failures(build_current(LiePresentation::sl2()), 8), 0);
  EXPECT_EQ(lie_failures(build_current(LiePresentation::sl3()), 3), 0);

  // (d + 3 lam) L is not skew; a wrong [h, e] breaks Jacobi.
  EXPECT_GT(lie_failures(mutate(build_vir(), 0, 0, 0, RatPoly::lam(1)), 4), 0);
  const ConformalAlgebra sl2 = build_current(LiePresentation::sl2());
  EXPECT_GT(lie_failures(mutate(sl2, 2, 0, 0, RatPoly(1)), 3), 0);
  EXPECT_GT(lie_failures(mutate(mutate(sl2, 2, 0, 0, RatPoly(1)), 0, 2, 0, RatPoly(-1)), 3), 0);
}

TEST(Annihilation, DerivationT) {
  EXPECT_EQ(derivation_T(AnnBasisVector{0, 3}), single(0, 2, -3));
  EXPECT_TRUE(derivation_T(AnnBasisVector{0, 0}).empty());
  for (const ConformalAlgebra& A : {build_vir(), build_current(LiePresentation::sl2())}) {
    const auto all = basis_vectors(A.size(), 6);
    for (const auto& x : all)
      for (const auto& y : all) {
        const AnnElement lhs = derivation_T(ann_bracket(A, x, y));
        const AnnElement X = single(x.gen, x.level);
        const AnnElement Y = single(y.gen, y.level);
        const AnnElement rhs = sum(ann_bracket(A, derivation_T(X), Y), ann_bracket(A, X, derivation_T(Y)));
        EXPECT_EQ(lhs, rhs);
      }
  }
}

TEST(Annihilation, VMinusExamples) {
  const LiePresentation g = LiePresentation::sl2();
  const ConformalAlgebra cur = build_current(g);
  const LieRep v2 = sl2_irrep(2);
  const ConformalModule M = build_m_u(g, v2);
  for (int a = 0; a < 3; ++a)
    for (int c = 0; c < 3; ++c) {
      ModValue u = mod_zero(M);
      u[static_cast<std::size_t>(c)] = RatPoly(1);
      VMinusElement expect;
      for (int r = 0; r < 3; ++r)
        if (v2.rho[a][r][c] != 0) expect[{r, 5}] = v2.rho[a][r][c];
      EXPECT_EQ(v_minus_action(cur, M, {a, 2}, u, 3), expect);
    }

  // L_1 (v t^0) = (Delta - 1) v_0 + alpha v_1.
  const ConformalAlgebra vir = build_vir();
  const ConformalModule mda = build_m_delta_alpha(Rat(5, 2), 3);
  const VMinusElement got = v_minus_action(vir, mda, {0, 1}, ModValue{RatPoly(1)}, 0);
  EXPECT_EQ(got, (VMinusElement{{{0, 0}, Rat(3, 2)}, {{0, 1}, Rat(3)}}));
  // a_0 preserves levels.
  const VMinusElement l0 = v_minus_action(vir, mda, {0, 0}, ModValue{RatPoly(1)}, 4);
  EXPECT_EQ(l0, (VMinusElement{{{0, 3}, Rat(-4)}, {{0, 4}, Rat(3)}}));
  EXPECT_THROW(v_minus_action(vir, build_trivial(1, 0), {0, 0}, ModValue{RatPoly(1)}, 0), WrongModuleKind);
}

TEST(Annihilation, VMinusIsRepresentation) {
  const LiePresentation g = LiePresentation::sl2();
  const std::vector<std::pair<ConformalAlgebra, ConformalModule>> cases{
      {build_vir(), build_m_delta_alpha(Rat(1, 3), 2)},
      {build_vir(), build_m_delta_alpha(1, 0)},
      {build_current(g), build_m_u(g, sl2_irrep(2))},
  };
  for (const auto& [A, M] : cases) {
    const auto all = basis_vectors(A.size(), 6);
    for (const auto& x : all)
      for (const auto& y : all)
        for (int c = 0; c < M.dim(); ++c)
          for (int n = 0; n <= 3; ++n) {
            const VMinusElement v{{{c, n}, Rat(1)}};
            VMinusElement lhs = v_minus_action(A, M, x, v_minus_action(A, M, y, v));
            for (const auto& [k, coef] : v_minus_action(A, M, y, v_minus_action(A, M, x, v))) {
              lhs[k] -= coef;
              if (lhs[k] == 0) lhs.erase(k);
            }
            VMinusElement rhs;
            for (const auto& [z, cz] : ann_bracket(A, x, y))
              for (const auto& [k, coef] : v_minus_action(A, M, z, v)) {
                rhs[k] += cz * coef;
                if (rhs[k] == 0) rhs.erase(k);
              }
            EXPECT_EQ(lhs, rhs);
          }
  }
}

TEST(Annihilation, PhiExamples) {
  Cochain g(Variant::LieBasic, 1, 1);
  g.values[{0}] = {RatPoly::lam(1)};
  const AnnFunctional f = phi(g);
  for (int m = 0; m <= 6; ++m) EXPECT_EQ(f({{0, m}}), (ModValue{RatPoly(m == 1 ? 1 : 0)}));

  // Divided powers: lam1^3 reads off 3! at level 3.
  g.values[{0}] = {RatPoly::lam(1).pow(3)};
  EXPECT_EQ(phi(g)({{0, 3}}), ModValue{RatPoly(6)});

  const AnnFunctional z = phi(Cochain(Variant::LieBasic, 2, 1));
  EXPECT_EQ(z({{0, 1}, {0, 0}}), ModValue(1));

  // Lambda_3-like value; zero beyond the lam-degree and skew in the arguments.
  Cochain h(Variant::LieBasic, 2, 1);
  h.values[{0, 0}] = {RatPoly::lam(1).pow(3) - RatPoly::lam(2).pow(3)};
  const AnnFunctional fh = phi(h);
  EXPECT_EQ(fh({{0, 3}, {0, 0}}), ModValue{RatPoly(6)});
  EXPECT_EQ(fh({{0, 0}, {0, 3}}), ModValue{RatPoly(-6)});
  for (int a = 4; a <= 6; ++a)
    for (int b = 0; b <= 6; ++b) EXPECT_TRUE(is_zero(fh({{0, a}, {0, b}})));
}

TEST(Annihilation, BridgeOnBasisCochains) {
  const LiePresentation g = LiePresentation::sl2();
  const std::vector<std::pair<ConformalAlgebra, ConformalModule>> cases{
      {build_vir(), build_trivial(1, 0)},
      {build_vir(), build_trivial(1, 1)},
      {build_vir(), build_m_delta_alpha(1, 0)},
      {build_vir(), build_m_delta_alpha(Rat(-1, 2), 2)},
      {build_current(g), build_m_u(g, sl2_irrep(2))},
      {build_current(g), build_trivial(1, 0)},
  };
  for (const auto& [A, M] : cases) {
    CochainSpace s(ComplexSpec{A, M, Variant::LieBasic, std::nullopt});
    for (int q = 0; q <= 2; ++q)
      for (int d = 0; d <= 4; ++d)
        for (const Cochain& b : s.basis(q, d)) {
          const BridgeReport r = check_bridge(A, M, b, 4);
          EXPECT_EQ(r.failures, 0) << A.name() << "/" << M.name() << " q=" << q << " " << r.first_failure;
        }
  }
}

TEST(Annihilation, BridgeOnRandomCochains) {
  std::mt19937_64 rng(7);
  const LiePresentation g = LiePresentation::sl2();
  const std::vector<std::pair<ConformalAlgebra, ConformalModule>> cases{
      {build_vir(), build_trivial(1, 0)},
      {build_vir(), build_m_delta_alpha(1, 0)},
      {build_current(g), build_m_u(g, sl2_irrep(2))},
  };
  for (const auto& [A, M] : cases) {
    CochainSpace s(ComplexSpec{A, M, Variant::LieBasic, std::nullopt});
    long nonzero = 0;
    for (int q = 0; q <= 3; ++q)
      for (int k = 0; k < 3; ++k) {
        const Cochain c = random_cochain(s, q, 7, rng);
        const BridgeReport r = check_bridge(A, M, c, 6);
        EXPECT_GT(r.checked, 0);
        nonzero += r.nonzero;
        EXPECT_EQ(r.failures, 0) << A.name() << "/" << M.name() << " q=" << q << " " << r.first_failure;
      }
    EXPECT_GT(nonzero, 0) << A.name() << "/" << M.name();
  }
}

TEST(Annihilation, BridgeDetectsWrongDifferential) {
  // Scaling the module action breaks the bridge for the honest d.
  const ConformalAlgebra vir = build_vir();
  Cochain g(Variant::LieBasic, 1, 1);
  g.values[{0}] = {RatPoly::lam(1).pow(2)};
  const ConformalModule M = build_m_delta_alpha(1, 0);
  const ConformalModule wrong = build_m_delta_alpha(2, 0);
  const AnnFunctional dg = phi(d_basic(vir, M, g));
  long mismatches = 0;
  for (const auto& t : ann_tuples(2, 1, 4))
    if (dg(t) != ce_differential_eval(vir, wrong, phi(g), t)) ++mismatches;
  EXPECT_GT(mismatches, 0);
}
