#include <doctest.h>

#include <muharm/cyclotomic.hpp>
#include <muharm/mu_bridge.hpp>
#include <muharm/sampler.hpp>

#include <stdexcept>

using namespace muharm;

TEST_CASE("expansion sends X0^N - 1 to e0 and X1 - 1 to e1, exactly") {
    for (int n = 1; n <= 4; ++n) {
        TruncatedDRSeries s = mu_expand(x0_pow(n) - 1, n, 4);
        CHECK(s.component(0).is_zero());
        CHECK(s.component(1) == DRElement::e0(n));
        CHECK(s.component(2).is_zero());
        CHECK(s.component(3).is_zero());
        CHECK(s.component(4).is_zero());

        TruncatedDRSeries t = mu_expand(x1_pow(1) - 1, n, 4);
        CHECK(t.component(1) == DRElement::e1(n));
        CHECK(t.component(2).is_zero());
    }
}

TEST_CASE("expansion of X1^-1 is the alternating geometric series") {
    TruncatedDRSeries s = mu_expand(x1_pow(-1), 2, 3);
    DRElement e1 = DRElement::e1(2);
    CHECK(s.component(0) == DRElement(2, Rational(1)));
    CHECK(s.component(1) == e1 * Rational(-1));
    CHECK(s.component(2) == e1 * e1);
    CHECK(s.component(3) == e1 * e1 * e1 * Rational(-1));
}

TEST_CASE("expansion of a single X0 uses the 1/N binomial series") {
    // X0 -> zeta (1 + 1/2 e0 - 1/8 e0^2 + 1/16 e0^3) at N = 2
    TruncatedDRSeries s = mu_expand(x0_pow(1), 2, 3);
    CHECK(s.component(0) == DRElement::zeta_power(2, 1));
    CHECK(s.component(1) == DRElement::monomial(2, DRMonomial{1, {}, 1}, Rational(1, 2)));
    CHECK(s.component(2) == DRElement::monomial(2, DRMonomial{2, {}, 1}, Rational(-1, 8)));
    CHECK(s.component(3) == DRElement::monomial(2, DRMonomial{3, {}, 1}, Rational(1, 16)));
}

TEST_CASE("expansion is an algebra morphism") {
    SeededRng rng(61);
    SampleBudget b;
    for (int n = 1; n <= 3; ++n) {
        MuExpander ex(n, 4);
        for (int i = 0; i < 25; ++i) {
            GroupAlgebraElement u = random_element(rng, b);
            GroupAlgebraElement v = random_element(rng, b);
            CHECK(ex.expand(u * v) == ex.expand(u) * ex.expand(v));
            CHECK(ex.expand(u + v) == ex.expand(u) + ex.expand(v));
        }
        CHECK(ex.expand(x0_pow(1)) * ex.expand(x0_pow(-1)) == TruncatedDRSeries::one(n, 4));
    }
}

TEST_CASE("filtration degree against the expansion: frozen values") {
    CHECK(filtration_degree(GroupAlgebraElement(1), 2, 6) == FiltrationDegree::exact(0));
    CHECK(filtration_degree(x1_pow(1) - 1, 2, 6) == FiltrationDegree::exact(1));
    CHECK(filtration_degree((x0_pow(2) - 1).pow(2) * x0_pow(3) * (x1_pow(1) - 1), 2, 6) ==
          FiltrationDegree::exact(3));
    CHECK(filtration_degree(x0_pow(1) - 1, 2, 6) == FiltrationDegree::exact(0));
    CHECK(filtration_degree(x0_pow(1) - 1, 1, 6) == FiltrationDegree::exact(1));
    CHECK(filtration_degree(GroupAlgebraElement(), 2, 6) == FiltrationDegree::at_least(7));
    CHECK(filtration_degree((x1_pow(1) - 1).pow(4), 1, 3) == FiltrationDegree::at_least(4));
}

TEST_CASE("leading terms of stratum generators") {
    CHECK(leading_term(x0_pow(2) - 1, 2, 4) == std::pair{1, DRElement::e0(2)});
    CHECK(leading_term(x0_pow(1), 2, 4) == std::pair{0, DRElement::zeta_power(2, 1)});
    for (int n = 1; n <= 3; ++n) {
        for (int m = 1; m <= 3; ++m) {
            for (long a = 0; a < n; ++a) {
                GroupAlgebraElement v = (x0_pow(n) - 1).pow(m - 1) * x0_pow(a) *
                                        (GroupAlgebraElement(1) - x1_pow(1));
                auto [deg, lead] = leading_term(v, n, m + 1);
                CHECK(deg == m);
                CHECK(lead == zword_to_dr(zw_gen(m, static_cast<int>(a)), n));
            }
        }
    }
    CHECK_THROWS_AS(leading_term((x0_pow(2) - 1).pow(3), 2, 2), std::domain_error);
    CHECK_THROWS_AS(leading_term(GroupAlgebraElement(), 2, 2), std::domain_error);
}

TEST_CASE("rho lifts monomials back to the group algebra") {
    CHECK(rho_lift(DRElement::e1(2)) == x1_pow(1) - 1);
    CHECK(rho_lift(DRElement::e0(3)) == x0_pow(3) - 1);
    CHECK(rho_lift(DRElement::zeta_power(3, 2)) == x0_pow(2));
    CHECK(rho_lift(DRElement(2, Rational(5))) == GroupAlgebraElement(5));
    // z generator: rho(zword(z_{m,a})) = -(X0^N-1)^{m-1} X0^a (X1-1)
    CHECK(rho_lift(zword_to_dr(zw_gen(3, 1), 2)) ==
          (x0_pow(2) - 1).pow(2) * x0_pow(1) * (GroupAlgebraElement(1) - x1_pow(1)));
}

TEST_CASE("leading_term of rho_lift recovers homogeneous elements") {
    SeededRng rng(62);
    for (int n = 1; n <= 3; ++n) {
        for (int i = 0; i < 40; ++i) {
            // random normal-form monomial of small degree
            DRMonomial m;
            m.a0 = rng.uniform(0, 2);
            const int nblocks = static_cast<int>(rng.uniform(0, 2));
            for (int j = 0; j < nblocks; ++j)
                m.blocks.push_back(DRBlock{static_cast<int>(rng.uniform(0, n - 1)), rng.uniform(0, 2)});
            m.eta = static_cast<int>(rng.uniform(0, n - 1));
            DRElement d = DRElement::monomial(n, m, rng.small_rational());
            // keep it homogeneous: add a second monomial of the same degree
            DRMonomial m2;
            m2.a0 = m.degree();
            if (rng.coin() && m2.a0 != m.a0) d += DRElement::monomial(n, m2, rng.small_rational());
            if (d.is_zero()) continue;
            long deg = 0;
            REQUIRE(d.is_homogeneous(&deg));
            auto [got_deg, got] = leading_term(rho_lift(d), n, static_cast<int>(deg) + 1);
            CHECK(got_deg == deg);
            CHECK(got == d);
        }
    }
}

TEST_CASE("tensor expansion: degrees add across slots") {
    GroupAlgebraElement e = x1_pow(1) - 1;
    CHECK(tensor_filtration_degree(TensorElement::pure(e, e), 2, 5) == FiltrationDegree::exact(2));
    CHECK(tensor_filtration_degree(TensorElement(Rational(1)), 2, 5) == FiltrationDegree::exact(0));
    CHECK(tensor_filtration_degree(TensorElement(), 2, 5) == FiltrationDegree::at_least(6));

    SeededRng rng(63);
    SampleBudget b;
    b.max_words = 2;
    for (int n = 1; n <= 2; ++n) {
        for (int i = 0; i < 15; ++i) {
            GroupAlgebraElement u = random_element(rng, b) * (x1_pow(1) - 1);
            GroupAlgebraElement v = random_element(rng, b) * (x0_pow(n) - 1);
            FiltrationDegree du = filtration_degree(u, n, 5);
            FiltrationDegree dv = filtration_degree(v, n, 5);
            FiltrationDegree dt = tensor_filtration_degree(TensorElement::pure(u, v), n, 5);
            if (du.is_exact() && dv.is_exact()) {
                CHECK(dt == FiltrationDegree::exact(du.value() + dv.value()));
                auto [deg, lead] = tensor_leading_term(TensorElement::pure(u, v), n, 5);
                CHECK(deg == du.value() + dv.value());
                DRTensorElement expect(n);
                auto [dul, ul] = leading_term(u, n, 5);
                auto [dvl, vl] = leading_term(v, n, 5);
                for (const auto& [mu_, cu] : ul.terms())
                    for (const auto& [mv_, cv] : vl.terms()) expect.add_term(mu_, mv_, cu * cv);
                CHECK(lead == expect);
            } else {
                CHECK(dt.admits(du.value() + dv.value()));
            }
        }
    }
}

TEST_CASE("z-tensors convert slotwise into the graded tensor square") {
    DRTensorElement t = zt_to_dr_tensor(zt_pure(zw_gen(1, 0), zw_one()), 2);
    DRTensorElement expect(2);
    expect.add_term(DRMonomial{0, {{0, 0}}, 0}, DRMonomial{}, Rational(-1));
    CHECK(t == expect);

    SeededRng rng(64);
    for (int n = 1; n <= 3; ++n) {
        for (int i = 0; i < 20; ++i) {
            ZWordElement a, b2;
            a.add(random_zword(rng, n, rng.uniform(0, 3)), rng.small_rational());
            b2.add(random_zword(rng, n, rng.uniform(0, 3)), rng.small_rational());
            DRTensorElement lhs = zt_to_dr_tensor(zt_pure(a, b2), n);
            DRTensorElement rhs(n);
            DRElement da = zword_to_dr(a, n);
            DRElement db = zword_to_dr(b2, n);
            for (const auto& [ma, ca] : da.terms())
                for (const auto& [mb, cb] : db.terms())
                    rhs.add_term(ma, mb, ca * cb);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("the two filtration oracles agree on random elements") {
    SeededRng rng(65);
    SampleBudget b;
    for (int n = 1; n <= 4; ++n) {
        MuExpander ex(n, 5);
        for (int i = 0; i < 40; ++i) {
            GroupAlgebraElement v = random_element(rng, b);
            if (rng.coin()) v = v * (x1_pow(1) - 1);
            CHECK(ex.filtration_degree(v) == oracle_filtration_degree(v, n, 5));
        }
    }
}
