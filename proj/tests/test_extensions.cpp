#include <gtest/gtest.h>

#include <random>

#include "confcoh/cocycles.hpp"
#include "confcoh/engine.hpp"
#include "confcoh/extensions.hpp"

using namespace confcoh;

namespace {

ComplexSpec reduced_spec(const ConformalAlgebra& A, const ConformalModule& M) {
  return ComplexSpec{A, M, Variant::LieReduced, std::nullopt};
}

bool extends(const ConformalAlgebra& A, const ConformalModule& C, const Cochain& c) {
  try {
    extend_algebra(A, C, c);
    return true;
  } catch (const NotACocycle&) {
    return false;
  }
}

// Both outcomes must occur; returns {valid count, invalid count}.
std::pair<int, int> mutation_run(const ConformalAlgebra& A, const ConformalModule& C, const Cochain& base, int deg,
                                 int trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  CochainSpace s(reduced_spec(A, C));
  int valid = 0;
  int invalid = 0;
  for (int t = 0; t < trials; ++t) {
    Cochain c = base;
    if (t % 2 == 0)
      c += s.differential(random_cochain(s, 1, deg, rng));
    else
      c += random_cochain(s, 2, deg, rng, 2);
    const bool ok = extends(A, C, c);
    EXPECT_EQ(ok, verify_cocycle(s, as_reduced(C, c)).cocycle) << A.name() << " trial " << t;
    (ok ? valid : invalid)++;
  }
  return {valid, invalid};
}

RatPoly lam() { return RatPoly::lam(1); }
RatPoly del() { return RatPoly::del(); }

// Explicit (d gamma)_{l,m}(a, b) n for module extension data, as an oracle.
bool module_cocycle(const ConformalAlgebra& A, const ConformalModule& M, const ConformalModule& N,
                    const std::vector<PolyMatrix>& gamma) {
  const RatPoly l = RatPoly::lam(1);
  const RatPoly m = RatPoly::lam(2);
  // gamma_x(e_i) applied to an element of N with d-polynomial coefficients.
  auto g_apply = [&](int i, const RatPoly& x, const ModValue& n) {
    ModValue out = mod_zero(M);
    for (int s = 0; s < N.dim(); ++s) {
      if (n[s].is_zero()) continue;
      const RatPoly shifted = n[s].substitute(VarId::del(), del() + x);
      for (int r = 0; r < M.dim(); ++r)
        if (!gamma[i][r][s].is_zero()) out[r] += shifted * table_at(gamma[i][r][s], x);
    }
    return out;
  };
  for (int i = 0; i < A.size(); ++i)
    for (int j = 0; j < A.size(); ++j)
      for (int s = 0; s < N.dim(); ++s) {
        ModValue n = mod_zero(N);
        n[static_cast<std::size_t>(s)] = RatPoly(1);
        ModValue res = action_eval(M, alg_gen(A, i), l, g_apply(j, m, n));
        const ModValue t2 = action_eval(M, alg_gen(A, j), m, g_apply(i, l, n));
        const ModValue t3 = g_apply(i, l, action_eval(N, alg_gen(A, j), m, n));
        const ModValue t4 = g_apply(j, m, action_eval(N, alg_gen(A, i), l, n));
        ModValue t5 = mod_zero(M);
        const AlgValue br = bracket_eval(A, alg_gen(A, i), l, alg_gen(A, j));
        for (int k = 0; k < A.size(); ++k) {
          if (br[k].is_zero()) continue;
          const ModValue v = g_apply(k, l + m, n);
          for (int r = 0; r < M.dim(); ++r) t5[r] += v[r] * br[k].substitute(VarId::del(), -(l + m));
        }
        for (int r = 0; r < M.dim(); ++r) res[r] = res[r] - t2[r] + t3[r] - t4[r] - t5[r];
        if (!is_zero(res)) return false;
      }
  return true;
}

}  // namespace

TEST(Extensions, VirasoroCentralExtension) {
  const ConformalAlgebra vir = build_vir();
  const ConformalModule C = build_trivial(1, 0);
  Cochain c(Variant::LieReduced, 2, 1);
  c.values[{0, 0}] = {lam().pow(3) - RatPoly::lam(2).pow(3)};
  const ExtendedAlgebra E = extend_algebra(vir, C, c);
  EXPECT_EQ(E.c_lambda(0, 0), ModValue{lam().pow(3) * Rat(2)});
  // [L_l C] = 0 and C is central.
  EXPECT_TRUE(is_zero(E.bracket(E.generator(0), lam(), E.generator(1)).c));
  EXPECT_TRUE(is_zero(E.bracket(E.generator(1), lam(), E.generator(0)).c));

  // lam1^2 - lam2^2 restricts to a multiple of d, which acts by zero on C.
  Cochain z(Variant::LieReduced, 2, 1);
  z.values[{0, 0}] = {lam().pow(2) - RatPoly::lam(2).pow(2)};
  EXPECT_TRUE(is_zero(ExtendedAlgebra(vir, C, z).c_lambda(0, 0)));
}

TEST(Extensions, ExtendAlgebraMutationsVir) {
  const ConformalAlgebra vir = build_vir();
  Cochain c(Variant::LieReduced, 2, 1);
  c.values[{0, 0}] = {lam().pow(3) - RatPoly::lam(2).pow(3)};
  const auto [valid, invalid] = mutation_run(vir, build_trivial(1, 0), c, 5, 100, 11);
  EXPECT_GT(valid, 0);
  EXPECT_GT(invalid, 0);
  const auto [v2, i2] = mutation_run(vir, build_m_delta_alpha(1, 0), Cochain(Variant::LieReduced, 2, 1), 4, 40, 12);
  EXPECT_GT(v2, 0);
  EXPECT_GT(i2, 0);
}

TEST(Extensions, BracketCocycleSl2) {
  const LiePresentation g = LiePresentation::sl2();
  const ConformalAlgebra cur = build_current(g);
  const LieRep v4 = sl2_irrep(4);
  const ConformalModule C = build_m_u(g, v4);
  const RatMatrix phi = sl2_top_projection(2);
  const Cochain c = sl2_example_cocycle(2, phi, {}, v4);
  const ExtendedAlgebra E = extend_algebra(cur, C, c);

  // c_l(a, b) = -l (d + l)(d + 2l) phi(a b)
  std::vector<std::vector<int>> monos;
  sym_power(adjoint_rep(g), 2, &monos);
  const RatPoly shape = lam() * (del() + lam()) * (del() + lam() * Rat(2));
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      std::vector<int> key{std::min(a, b), std::max(a, b)};
      const auto it = std::find(monos.begin(), monos.end(), key);
      ASSERT_NE(it, monos.end());
      const std::size_t col = static_cast<std::size_t>(it - monos.begin());
      ModValue expect(static_cast<std::size_t>(v4.dim()));
      for (int r = 0; r < v4.dim(); ++r) expect[r] = shape * (-phi[r][col]);
      EXPECT_EQ(E.c_lambda(a, b), expect) << a << " " << b;
    }

  const auto [valid, invalid] = mutation_run(cur, C, c, 3, 100, 21);
  EXPECT_GT(valid, 0);
  EXPECT_GT(invalid, 0);
}

TEST(Extensions, BracketCocycleSl3) {
  const LiePresentation g = LiePresentation::sl3();
  const ConformalAlgebra cur = build_current(g);
  const LieRep sym3 = sym_power(sl3_standard(), 3);
  std::vector<std::pair<int, int>> pairs;
  const auto maps = equivariant_maps(g, exterior_square(adjoint_rep(g), &pairs), sym3);
  ASSERT_EQ(maps.size(), 1u);
  const RatMatrix& phi = maps[0];
  const ConformalModule C = build_m_u(g, sym3);
  const Cochain c = current_h2_cocycle(g, phi, sym3);
  const ExtendedAlgebra E = extend_algebra(cur, C, c);

  // c_l(a, b) = -l (d + l) phi(a ^ b)
  const RatPoly shape = lam() * (del() + lam());
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      ModValue expect(static_cast<std::size_t>(sym3.dim()));
      if (a != b) {
        const int sign = a < b ? 1 : -1;
        const auto it = std::find(pairs.begin(), pairs.end(), std::make_pair(std::min(a, b), std::max(a, b)));
        const std::size_t col = static_cast<std::size_t>(it - pairs.begin());
        for (int r = 0; r < sym3.dim(); ++r) expect[r] = shape * (-phi[r][col] * sign);
      }
      EXPECT_EQ(E.c_lambda(a, b), expect) << a << " " << b;
    }

  const auto [valid, invalid] = mutation_run(cur, C, c, 2, 100, 31);
  EXPECT_GT(valid, 0);
  EXPECT_GT(invalid, 0);
}

TEST(Extensions, BasicRepresentativeWithDel) {
  // Adding (d + lam1 + lam2) h changes nothing after restriction.
  const LiePresentation g = LiePresentation::sl2();
  const ConformalAlgebra cur = build_current(g);
  const LieRep v4 = sl2_irrep(4);
  const ConformalModule C = build_m_u(g, v4);
  Cochain c = sl2_example_cocycle(2, sl2_top_projection(2), {}, v4);
  Cochain h = c;
  h.variant = Variant::LieBasic;
  h *= RatPoly::lam(1) + del();
  Cochain basic = c;
  basic.variant = Variant::LieBasic;
  basic += del_action(C, h);
  const ExtendedAlgebra E1(cur, C, c);
  const ExtendedAlgebra E2 = extend_algebra(cur, C, basic);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) EXPECT_EQ(E1.c_lambda(a, b), E2.c_lambda(a, b));
}

TEST(Extensions, CoboundaryGivesSplitExtension) {
  std::mt19937_64 rng(5);
  const LiePresentation g = LiePresentation::sl2();
  const std::vector<std::pair<ConformalAlgebra, ConformalModule>> cases{
      {build_vir(), build_trivial(1, 0)},
      {build_vir(), build_m_delta_alpha(1, 0)},
      {build_vir(), build_m_delta_alpha(Rat(1, 2), 3)},
      {build_current(g), build_m_u(g, sl2_irrep(2))},
  };
  for (const auto& [A, C] : cases) {
    CochainSpace s(reduced_spec(A, C));
    for (int t = 0; t < 5; ++t) {
      const Cochain f = random_cochain(s, 1, 4, rng);
      const ExtendedAlgebra split(A, C, s.zero(2));
      const ExtendedAlgebra twisted = extend_algebra(A, C, s.differential(f));
      // (x, a) -> (x - f_{-d}(a), a)
      EXPECT_TRUE(check_extension_map(split, twisted, f, -1).ok) << A.name() << "/" << C.name();
      bool twist = false;
      for (int i = 0; i < A.size(); ++i)
        for (int j = 0; j < A.size(); ++j) twist = twist || !is_zero(twisted.c_lambda(i, j));
      if (twist) {
        EXPECT_FALSE(check_extension_map(split, twisted, f, 1).ok)
            << A.name() << "/" << C.name() << " " << format_cochain(f, A.gens(), C.basis());
      }
    }
  }
}

TEST(Extensions, DeformationExamples) {
  const ConformalAlgebra vir = build_vir();
  const DeformedAlgebra same = deform(vir, Cochain(Variant::LieReduced, 2, 1));
  EXPECT_EQ(same.algebra.table(), vir.table());
  EXPECT_TRUE(same.check_first_order().ok);

  // Cur of an abelian algebra deformed by a bracket on g.
  const LiePresentation sl2 = LiePresentation::sl2();
  const ConformalAlgebra ab = build_current(LiePresentation::abelian(3));
  auto bracket_cochain = [](const LiePresentation::Constants& k) {
    Cochain gam(Variant::LieReduced, 2, 3);
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < a; ++b) {
        ModValue v(3);
        for (int c = 0; c < 3; ++c) v[c] = RatPoly(k[a][b][c]);
        if (!is_zero(v)) gam.add({a, b}, v);
      }
    return gam;
  };
  const DeformedAlgebra good = deform(ab, bracket_cochain(sl2.constants()));
  EXPECT_TRUE(good.check_first_order().ok);
  EXPECT_TRUE(verify_cocycle(reduced_spec(ab, build_adjoint(ab)), bracket_cochain(sl2.constants())).cocycle);
  // At eps = 1 the deformed algebra is Cur sl2.
  auto at_one = [](const ConformalAlgebra& D) {
    auto t = D.table();
    for (auto& row : t)
      for (auto& cell : row)
        for (auto& p : cell) p = p.substitute(eps_var(), RatPoly(1));
    return ConformalAlgebra("eps=1", D.gens(), t);
  };
  EXPECT_TRUE(check_jacobi(at_one(good.algebra)).ok);

  // A skew bracket violating Jacobi: [e,f] = h, [h,e] = 2e, [h,f] = 2f.
  auto bad = sl2.constants();
  bad[2][1][1] = 2;
  bad[1][2][1] = -2;
  const DeformedAlgebra wrong = deform(ab, bracket_cochain(bad));
  EXPECT_TRUE(wrong.check_first_order().ok);
  EXPECT_FALSE(check_jacobi(at_one(wrong.algebra)).ok);
}

TEST(Extensions, DeformationMutations) {
  const std::vector<ConformalAlgebra> algebras{build_vir(), build_current(LiePresentation::sl2())};
  for (const auto& A : algebras) {
    const ConformalModule ad = build_adjoint(A);
    CochainSpace s(reduced_spec(A, ad));
    std::mt19937_64 rng(41);
    int valid = 0;
    int invalid = 0;
    for (int t = 0; t < 100; ++t) {
      Cochain gam = t % 2 == 0 ? s.differential(random_cochain(s, 1, 3, rng)) : random_cochain(s, 2, 3, rng, 2);
      const bool ok = deform(A, gam).check_first_order().ok;
      EXPECT_EQ(ok, verify_cocycle(s, gam).cocycle) << A.name() << " trial " << t;
      (ok ? valid : invalid)++;
    }
    EXPECT_GT(valid, 0);
    EXPECT_GT(invalid, 0);
  }
}

TEST(Extensions, TrivialModuleExtensions) {
  const ConformalAlgebra vir = build_vir();
  const ConformalModule M = build_m_delta_alpha(1, 0);
  // H^0(Vir, M_{1,0}) is one-dimensional; take the engine's representative.
  CochainSpace s(reduced_spec(vir, M));
  std::vector<Cochain> reps;
  EXPECT_EQ(betti_at(s, 0, 6, nullptr, &reps), 1);
  ASSERT_EQ(reps.size(), 1u);
  const ModValue f = value_at(reps[0], {});
  const TrivialExtension E = extend_module_by_trivial(vir, M, f);
  EXPECT_TRUE(E.check_module(vir).ok);

  // f + d g gives an isomorphic extension.
  const ModValue g{del() * Rat(3) + RatPoly(2)};
  ModValue f2 = f;
  f2[0] += del() * g[0];
  const TrivialExtension E2 = extend_module_by_trivial(vir, M, f2);
  EXPECT_TRUE(E2.check_module(vir).ok);
  EXPECT_TRUE(check_trivial_extension_map(vir, E, E2, g).ok);
  EXPECT_FALSE(check_trivial_extension_map(vir, E, E2, ModValue{g[0] + RatPoly(1)}).ok);

  // f = d g is isomorphic to the direct sum (f = 0).
  const TrivialExtension E0 = extend_module_by_trivial(vir, M, ModValue{RatPoly()});
  EXPECT_TRUE(is_zero(E0.gamma[0]));
  const TrivialExtension Eg = extend_module_by_trivial(vir, M, ModValue{del() * g[0]});
  EXPECT_TRUE(check_trivial_extension_map(vir, E0, Eg, g).ok);

  // M_{2,0}: L_l v = (d + 2 l) v is not divisible by d + l.
  EXPECT_THROW(extend_module_by_trivial(vir, build_m_delta_alpha(2, 0), ModValue{RatPoly(1)}), NotReducedCocycle);
  // M_{0,0} has no invariants mod d, and a random f fails.
  EXPECT_THROW(extend_module_by_trivial(vir, build_m_delta_alpha(0, 0), ModValue{del() + RatPoly(1)}),
               NotReducedCocycle);

  // Trivial scalar module: always solvable with gamma = 0.
  const TrivialExtension Ec = extend_module_by_trivial(vir, build_trivial(1, 0), ModValue{RatPoly(1)});
  EXPECT_TRUE(Ec.check_module(vir).ok);
}

TEST(Extensions, TrivialExtensionMatchesReducedCocycles) {
  std::mt19937_64 rng(9);
  const ConformalAlgebra vir = build_vir();
  for (const auto& M : {build_m_delta_alpha(1, 0), build_m_delta_alpha(1, 2), build_m_delta_alpha(0, 0)}) {
    CochainSpace s(reduced_spec(vir, M));
    int ok_count = 0;
    for (int t = 0; t < 30; ++t) {
      Cochain f = random_cochain(s, 0, 3, rng, 2);
      if (t % 3 == 0) f = s.zero(0);
      if (t % 3 == 1) {
        f = s.zero(0);
        f.values[{}] = ModValue{RatPoly(t)};
      }
      bool ok = true;
      try {
        const TrivialExtension E = extend_module_by_trivial(vir, M, value_at(f, {}));
        EXPECT_TRUE(E.check_module(vir).ok);
      } catch (const NotReducedCocycle&) {
        ok = false;
      }
      EXPECT_EQ(ok, verify_cocycle(s, f).cocycle) << M.name() << " " << format_cochain(f, vir.gens(), M.basis());
      ok_count += ok;
    }
    EXPECT_GT(ok_count, 0);
  }
}

TEST(Extensions, ModuleExtensions) {
  const ConformalAlgebra vir = build_vir();
  for (const Rat& alpha : {Rat(0), Rat(2)}) {
    const ConformalModule M = build_m_delta_alpha(1, alpha);
    const ConformalModule N = build_m_delta_alpha(0, alpha);
    // gamma = 0: direct sum.
    EXPECT_TRUE(check_module(vir, extend_module(vir, M, N, {PolyMatrix{{RatPoly()}}})).ok);
    // beta(v0) = v1 identifies the generators; its coboundary is gamma_l(L) v0 = l v1.
    const PolyMatrix beta{{RatPoly(1)}};
    const auto db = module_coboundary(vir, M, N, beta);
    EXPECT_EQ(db[0][0][0], lam());
    const ConformalModule E = extend_module(vir, M, N, db);
    const ConformalModule split = twisted_sum(vir, M, N, {PolyMatrix{{RatPoly()}}});
    // (m, n) -> (m - beta(n), n)
    EXPECT_TRUE(check_module_map(vir, split, E, PolyMatrix{{1, -1}, {0, 1}}).ok);
    EXPECT_FALSE(check_module_map(vir, split, E, PolyMatrix{{1, 0}, {0, 1}}).ok);
    // A constant gamma is not a cocycle here.
    EXPECT_THROW(extend_module(vir, M, N, {PolyMatrix{{RatPoly(1)}}}), NotACocycle);
  }

  // M_{0,0} by M_{0,0} with gamma = 1: valid and not a coboundary.
  const ConformalModule M0 = build_m_delta_alpha(0, 0);
  EXPECT_NO_THROW(extend_module(vir, M0, M0, {PolyMatrix{{RatPoly(1)}}}));
  for (int k = 0; k <= 4; ++k) {
    const auto db = module_coboundary(vir, M0, M0, PolyMatrix{{del().pow(static_cast<unsigned>(k))}});
    EXPECT_EQ(db[0][0][0].degree_in(VarId::lam(1)) >= 1 || db[0][0][0].is_zero(), true);
  }
}

TEST(Extensions, ModuleExtensionMutations) {
  std::mt19937_64 rng(17);
  const ConformalAlgebra vir = build_vir();
  const LiePresentation g = LiePresentation::sl2();
  const ConformalAlgebra cur = build_current(g);
  struct Case {
    const ConformalAlgebra* A;
    ConformalModule M;
    ConformalModule N;
  };
  std::vector<Case> cases{{&vir, build_m_delta_alpha(1, 0), build_m_delta_alpha(0, 0)},
                          {&vir, build_m_delta_alpha(0, 0), build_m_delta_alpha(0, 0)},
                          {&vir, build_m_delta_alpha(2, 1), build_m_delta_alpha(1, 1)},
                          {&cur, build_m_u(g, sl2_irrep(2)), build_m_u(g, sl2_irrep(0))}};
  std::uniform_int_distribution<int> coef(-2, 2);
  for (const auto& cs : cases) {
    int valid = 0;
    int invalid = 0;
    for (int t = 0; t < 40; ++t) {
      const int dm = cs.M.dim();
      const int dn = cs.N.dim();
      // Coboundaries of random beta plus (on odd trials) random noise.
      PolyMatrix beta(static_cast<std::size_t>(dm), std::vector<RatPoly>(static_cast<std::size_t>(dn)));
      for (auto& row : beta)
        for (auto& p : row) p = RatPoly(coef(rng)) + del() * Rat(coef(rng));
      std::vector<PolyMatrix> gamma = module_coboundary(*cs.A, cs.M, cs.N, beta);
      if (t % 2 == 1)
        for (auto& pm : gamma)
          for (auto& row : pm)
            for (auto& p : row) p += (RatPoly(coef(rng)) * lam() + RatPoly(coef(rng)) * del()) * lam();
      const bool oracle = module_cocycle(*cs.A, cs.M, cs.N, gamma);
      bool ok = true;
      try {
        extend_module(*cs.A, cs.M, cs.N, gamma);
      } catch (const NotACocycle&) {
        ok = false;
      }
      EXPECT_EQ(ok, oracle);
      (ok ? valid : invalid)++;
    }
    EXPECT_GT(valid, 0);
    EXPECT_GT(invalid, 0);
  }
}

TEST(Extensions, Invariants) {
  const ConformalAlgebra vir = build_vir();
  for (const auto& M : {build_m_delta_alpha(1, 0), build_m_delta_alpha(2, 3), build_m_delta_alpha(0, 0)}) {
    const InvariantsResult r = invariants_H0(vir, M, 4);
    EXPECT_TRUE(r.basis.empty());
    EXPECT_TRUE(r.stabilized);
  }
  const InvariantsResult c = invariants_H0(vir, build_trivial(1, 0), 4);
  ASSERT_EQ(c.basis.size(), 1u);
  EXPECT_EQ(c.basis[0], ModValue{RatPoly(1)});

  const LiePresentation g = LiePresentation::sl2();
  const ConformalAlgebra cur = build_current(g);
  // Trivial action on C[d]: every d^p is invariant, so the count never stabilizes.
  const InvariantsResult v0 = invariants_H0(cur, build_m_u(g, sl2_irrep(0)), 3);
  EXPECT_EQ(v0.basis.size(), 4u);
  EXPECT_FALSE(v0.stabilized);
  EXPECT_TRUE(invariants_H0(cur, build_m_u(g, sl2_irrep(2)), 3).basis.empty());
  // Agrees with the engine's basic H^0.
  for (int m : {0, 2, 4}) {
    const ConformalModule M = build_m_u(g, sl2_irrep(m));
    CochainSpace s(ComplexSpec{cur, M, Variant::LieBasic, std::nullopt});
    EXPECT_EQ(static_cast<long>(invariants_H0(cur, M, 4).basis.size()), betti_at(s, 0, 4)) << m;
  }
}
