#include <gtest/gtest.h>

#include <random>

#include "confcoh/calculus.hpp"
#include "confcoh/complexes.hpp"
#include "confcoh/engine.hpp"
#include "confcoh/lie.hpp"

using namespace confcoh;

namespace {

RatPoly L(int i) { return RatPoly::lam(i); }

Cochain vir_poly(int q, const RatPoly& p, Variant v = Variant::LieBasic) {
  Cochain c(v, q, 1);
  c.add(Tuple(static_cast<std::size_t>(q), 0), {p});
  return c;
}

// Random combination of basis cochains of the basic complex.
Cochain random_cochain(CochainSpace& s, int q, int dmax, std::mt19937& rng) {
  std::uniform_int_distribution<int> coef(-3, 3);
  Cochain out = s.zero(q);
  for (int d = 0; d <= dmax; ++d)
    for (const auto& b : s.basis(q, d))
      if (rng() % 3 == 0) out += b * Rat(coef(rng));
  out.prune();
  return out;
}

AlgValue random_element(const ConformalAlgebra& A, std::mt19937& rng) {
  std::uniform_int_distribution<int> coef(-2, 2);
  AlgValue a(static_cast<std::size_t>(A.size()));
  for (auto& c : a) c = RatPoly(coef(rng)) + RatPoly(coef(rng)) * RatPoly::del();
  return a;
}

}  // namespace

TEST(Calculus, WedgeExamples) {
  const Cochain u = vir_poly(1, L(1));
  const Cochain one = vir_poly(1, RatPoly(1));
  const Cochain w = wedge(u, one, 1);
  EXPECT_EQ(value_at(w, {0, 0})[0], L(1) - L(2));
  const Cochain unit = vir_poly(0, RatPoly(1));
  const Cochain g = vir_poly(2, L(1).pow(3) - L(2).pow(3));
  EXPECT_EQ(wedge(unit, g, 1), g);
  // Odd cochains over two generators square to zero.
  const ConformalAlgebra A = build_current(LiePresentation::sl2());
  Cochain v(Variant::LieBasic, 1, 1);
  v.add({0}, {L(1)});
  v.add({2}, {RatPoly(3)});
  EXPECT_TRUE(wedge(v, v, A.size()).is_zero());
}

TEST(Calculus, WedgeCommutativeAssociative) {
  const ConformalAlgebra A = build_current(LiePresentation::sl2());
  CochainSpace s(ComplexSpec{A, build_trivial(1, 0), Variant::LieBasic, std::nullopt});
  std::mt19937 rng(7);
  for (int trial = 0; trial < 6; ++trial)
    for (int m = 0; m <= 2; ++m)
      for (int n = 0; n <= 2; ++n) {
        const Cochain u = random_cochain(s, m, 2, rng);
        const Cochain v = random_cochain(s, n, 2, rng);
        const Rat sign = (m * n) % 2 == 0 ? Rat(1) : Rat(-1);
        EXPECT_EQ(wedge(u, v, 3), wedge(v, u, 3) * sign) << m << " " << n;
        if (m + n <= 3) {
          const Cochain w = random_cochain(s, 1, 2, rng);
          EXPECT_EQ(wedge(wedge(u, v, 3), w, 3), wedge(u, wedge(v, w, 3), 3));
        }
      }
}

TEST(Calculus, ContractionExamples) {
  const ConformalAlgebra A = build_vir();
  const Cochain g = vir_poly(2, L(1) - L(2));
  const Cochain c = contract_lambda(A, alg_gen(A, 0), g);
  EXPECT_EQ(value_at(c, {0})[0], mu() - L(1));
  const Cochain one = vir_poly(1, L(1).pow(2));
  EXPECT_EQ(value_at(contract_lambda(A, alg_gen(A, 0), one), {})[0], mu().pow(2));
  EXPECT_THROW(contract_lambda(A, alg_gen(A, 0), vir_poly(0, RatPoly(1))), DegreeZero);
  // d a = -mu a in the contracted slot
  AlgValue da{RatPoly::del()};
  EXPECT_EQ(value_at(contract_lambda(A, da, one), {})[0], -mu().pow(3));
}

TEST(Calculus, ThetaExamples) {
  const ConformalAlgebra A = build_vir();
  const ConformalModule C = build_trivial(1, 0);
  // Lambda_3 is a cocycle; by the Cartan identity theta Lambda_3 = d iota Lambda_3.
  const RatPoly l3 = (L(1) - L(2)) * (L(1) - L(3)) * (L(2) - L(3));
  const Cochain g = vir_poly(3, l3);
  const Cochain th = lie_theta(A, C, alg_gen(A, 0), g);
  EXPECT_EQ(th, d_basic(A, C, contract_lambda(A, alg_gen(A, 0), g)));
  // q = 0: theta(a) m = a_mu m.
  const ConformalModule M = build_m_delta_alpha(1, 0);
  Cochain m(Variant::LieBasic, 0, 1);
  m.add({}, {RatPoly::del()});
  const Cochain t0 = lie_theta(A, M, alg_gen(A, 0), m);
  EXPECT_EQ(value_at(t0, {}), action_eval(M, alg_gen(A, 0), mu(), ModValue{RatPoly::del()}));
}

TEST(Calculus, CartanIdentity) {
  struct Case {
    ConformalAlgebra A;
    ConformalModule M;
  };
  const LiePresentation sl2 = LiePresentation::sl2();
  const std::vector<Case> cases{
      {build_vir(), build_trivial(1, 0)},
      {build_vir(), build_m_delta_alpha(Rat(1, 2), 3)},
      {build_current(sl2), build_trivial(1, 0)},
      {build_current(sl2), build_m_u(sl2, sl2_irrep(2))},
  };
  std::mt19937 rng(11);
  for (const auto& cs : cases) {
    CochainSpace s(ComplexSpec{cs.A, cs.M, Variant::LieBasic, std::nullopt});
    for (int q = 1; q <= 3; ++q)
      for (int trial = 0; trial < 3; ++trial) {
        const Cochain g = random_cochain(s, q, cs.A.size() == 1 ? 6 : 3, rng);
        const AlgValue a = random_element(cs.A, rng);
        const Cochain lhs = d_basic(cs.A, cs.M, contract_lambda(cs.A, a, g)) +
                            contract_lambda(cs.A, a, d_basic(cs.A, cs.M, g));
        EXPECT_EQ(lhs, lie_theta(cs.A, cs.M, a, g)) << cs.A.name() << "/" << cs.M.name() << " q=" << q;
        EXPECT_EQ(d_basic(cs.A, cs.M, lie_theta(cs.A, cs.M, a, g)), lie_theta(cs.A, cs.M, a, d_basic(cs.A, cs.M, g)));
      }
  }
}

TEST(Calculus, ExteriorContractionRelation) {
  // eps(u) iota + iota eps(u) = iota(u) for a C-valued 1-cochain u.
  const ConformalAlgebra A = build_current(LiePresentation::sl2());
  CochainSpace s(ComplexSpec{A, build_trivial(1, 0), Variant::LieBasic, std::nullopt});
  std::mt19937 rng(5);
  for (int trial = 0; trial < 5; ++trial) {
    const Cochain u = random_cochain(s, 1, 2, rng);
    const AlgValue a = random_element(A, rng);
    const Cochain g = random_cochain(s, 2, 2, rng);
    const Cochain lhs = wedge(u, contract_lambda(A, a, g), 3) + contract_lambda(A, a, wedge(u, g, 3));
    Cochain rhs = g;
    rhs *= value_at(contract_lambda(A, a, u), {})[0];
    EXPECT_EQ(lhs, rhs);
  }
}

TEST(Calculus, HomotopyExamples) {
  const ConformalAlgebra A = build_vir();
  const ConformalModule C = build_trivial(1, 0);
  auto dk_kd = [&](const Cochain& p) {
    Cochain out = homotopy_k(A, d_basic(A, C, p));
    if (p.q > 0) out += d_basic(A, C, homotopy_k(A, p));
    return out;
  };
  EXPECT_TRUE(dk_kd(vir_poly(1, L(1))).is_zero());
  EXPECT_EQ(dk_kd(vir_poly(1, L(1).pow(2))), vir_poly(1, L(1).pow(2)));
  EXPECT_TRUE(dk_kd(vir_poly(3, (L(1) - L(2)) * (L(1) - L(3)) * (L(2) - L(3)))).is_zero());
  EXPECT_THROW(homotopy_k(build_current(LiePresentation::sl2()), vir_poly(1, L(1))), WrongContext);
}

TEST(Calculus, HomotopyOnAllSlices) {
  const ConformalAlgebra A = build_vir();
  const ConformalModule C = build_trivial(1, 0);
  CochainSpace s(ComplexSpec{A, C, Variant::LieBasic, std::nullopt});
  for (int q = 0; q <= 4; ++q)
    for (int d = 0; d <= 8; ++d)
      for (const Cochain& p : s.basis(q, d)) {
        Cochain lhs = homotopy_k(A, d_basic(A, C, p));
        if (q > 0) lhs += d_basic(A, C, homotopy_k(A, p));
        EXPECT_EQ(lhs, p * Rat(d - q)) << "q=" << q << " d=" << d;
        // k1 on the multiples of sigma
        if (q == 0) continue;
        Cochain sp = p;
        sp *= RatPoly::lam_sum(1, q);
        Cochain dsp = d_basic(A, C, sp);
        Cochain lhs1 = homotopy_k1(A, dsp) + d_basic(A, C, homotopy_k1(A, sp));
        EXPECT_EQ(lhs1, sp * Rat(d - q)) << "k1 q=" << q << " d=" << d;
      }
}
