#include <doctest.h>

#include <muharm/derham.hpp>
#include <muharm/rng.hpp>
#include <muharm/sampler.hpp>

#include <stdexcept>
#include <tuple>
#include <vector>

using namespace muharm;

namespace {

// triple tensors and slotwise maps, for the coassociativity checks
using Z3 = SparseMap<std::tuple<ZWord, ZWord, ZWord>>;

Z3 hdelta_left(const ZTensorElement& t, int n) {
    Z3 out;
    for (const auto& [p, c] : t) {
        ZWordElement u;
        u.add(p.first, Rational(1));
        for (const auto& [q, c2] : harmonic_coproduct(u, n))
            out.add({q.first, q.second, p.second}, c * c2);
    }
    return out;
}

Z3 hdelta_right(const ZTensorElement& t, int n) {
    Z3 out;
    for (const auto& [p, c] : t) {
        ZWordElement u;
        u.add(p.second, Rational(1));
        for (const auto& [q, c2] : harmonic_coproduct(u, n))
            out.add({p.first, q.first, q.second}, c * c2);
    }
    return out;
}

void enum_zwords(long deg_left, int n, ZWord& cur, std::vector<ZWord>& out) {
    out.push_back(cur);
    for (long part = 1; part <= deg_left; ++part) {
        for (int z = 0; z < n; ++z) {
            cur.push_back(ZLetter{part, z});
            enum_zwords(deg_left - part, n, cur, out);
            cur.pop_back();
        }
    }
}

DRMonomial mono(long a0, std::vector<DRBlock> blocks, int eta) {
    return DRMonomial{a0, std::move(blocks), eta};
}

}  // namespace

TEST_CASE("normal-form products of the degree-one generators") {
    DRElement e0 = DRElement::e0(2);
    DRElement e1 = DRElement::e1(2);
    DRElement z = DRElement::zeta_power(2, 1);

    CHECK((e1 * e1).coefficient(mono(0, {{0, 0}, {0, 0}}, 0)) == Rational(1));
    CHECK((e0 * e1).coefficient(mono(1, {{0, 0}}, 0)) == Rational(1));
    CHECK((e1 * e0).coefficient(mono(0, {{0, 1}}, 0)) == Rational(1));

    // the group element passes through e0 but not through e1
    CHECK(z * e0 == e0 * z);
    CHECK((z * e1).coefficient(mono(0, {{1, 0}}, 0)) == Rational(1));
    CHECK((e1 * z).coefficient(mono(0, {{0, 0}}, 1)) == Rational(1));
    CHECK(z * e1 != e1 * z);

    // order N
    CHECK(z * z == DRElement(2, Rational(1)));
    CHECK(DRElement::zeta_power(3, 5) == DRElement::zeta_power(3, 2));

    // both sandwiched group elements slide right onto the second e1 and cancel (order 2)
    DRElement sandwich = e1 * z * e0 * z * e1;
    CHECK(sandwich.terms().size() == 1);
    CHECK(sandwich.coefficient(mono(0, {{0, 1}, {0, 0}}, 0)) == Rational(1));
}

TEST_CASE("dr_mul is associative and graded") {
    SeededRng rng(51);
    for (int n = 1; n <= 3; ++n) {
        std::vector<DRElement> gens{DRElement::e0(n), DRElement::e1(n), DRElement::zeta_power(n, 1)};
        for (int i = 0; i < 60; ++i) {
            auto pick = [&]() {
                DRElement d(n, Rational(1));
                const int len = static_cast<int>(rng.uniform(0, 4));
                for (int k = 0; k < len; ++k) d = d * gens[static_cast<size_t>(rng.uniform(0, 2))];
                return d;
            };
            DRElement a = pick(), b = pick(), c = pick();
            CHECK(dr_mul(dr_mul(a, b), c) == dr_mul(a, dr_mul(b, c)));
            long da = 0, db = 0;
            REQUIRE(a.is_homogeneous(&da));
            REQUIRE(b.is_homogeneous(&db));
            long dab = 0;
            CHECK(dr_mul(a, b).is_homogeneous(&dab));
            CHECK(dab == da + db);
        }
    }
}

TEST_CASE("homogeneous components partition an element") {
    DRElement v = DRElement::e0(2) + DRElement::e1(2) * DRElement::e1(2) - DRElement(2, Rational(3));
    CHECK(!v.is_homogeneous());
    CHECK(v.min_degree() == 0);
    CHECK(v.homogeneous_component(0) == DRElement(2, Rational(-3)));
    CHECK(v.homogeneous_component(1) == DRElement::e0(2));
    CHECK(v.homogeneous_component(2) == DRElement::e1(2) * DRElement::e1(2));
    CHECK(v.homogeneous_component(3).is_zero());
}

TEST_CASE("z-words map to signed normal-form monomials") {
    // z of depth 1 is minus e1, with its group twist
    CHECK(zword_to_dr(zw_gen(1, 0), 1).coefficient(mono(0, {{0, 0}}, 0)) == Rational(-1));
    CHECK(zword_to_dr(zw_gen(2, 1), 2).coefficient(mono(1, {{1, 0}}, 0)) == Rational(-1));
    // two letters: signs cancel
    ZWordElement two = zw_mul(zw_gen(1, 0), zw_gen(1, 0));
    CHECK(zword_to_dr(two, 2).coefficient(mono(0, {{0, 0}, {0, 0}}, 0)) == Rational(1));
    // depth pattern: z[3,1] z[2,0] -> e0^2 w[1] e1 e0 e1
    ZWordElement w = zw_mul(zw_gen(3, 1), zw_gen(2, 0));
    CHECK(zword_to_dr(w, 2).coefficient(mono(2, {{1, 1}, {0, 0}}, 0)) == Rational(1));
    CHECK(zword_to_dr(zw_one(), 2) == DRElement(2, Rational(1)));
}

TEST_CASE("zword_to_dr is an algebra morphism onto its image") {
    SeededRng rng(52);
    for (int n = 1; n <= 3; ++n) {
        for (int i = 0; i < 50; ++i) {
            ZWordElement a, b;
            a.add(random_zword(rng, n, rng.uniform(0, 4)), rng.small_rational());
            b.add(random_zword(rng, n, rng.uniform(0, 4)), rng.small_rational());
            CHECK(zword_to_dr(zw_mul(a, b), n) ==
                  dr_mul(zword_to_dr(a, n), zword_to_dr(b, n)));
        }
    }
}

TEST_CASE("dr_to_zword inverts zword_to_dr and rejects the complement") {
    SeededRng rng(53);
    for (int n = 1; n <= 3; ++n) {
        for (int i = 0; i < 50; ++i) {
            ZWordElement z;
            const int words = static_cast<int>(rng.uniform(1, 3));
            for (int j = 0; j < words; ++j)
                z.add(random_zword(rng, n, rng.uniform(0, 5)), rng.small_rational());
            CHECK(dr_to_zword(zword_to_dr(z, n)) == z);
        }
    }
    CHECK_THROWS_AS(dr_to_zword(DRElement::e0(2)), std::domain_error);
    CHECK_THROWS_AS(dr_to_zword(DRElement::zeta_power(2, 1)), std::domain_error);
    CHECK_THROWS_AS(dr_to_zword(dr_mul(DRElement::e1(2), DRElement::e0(2))), std::domain_error);
}

TEST_CASE("harmonic coproduct: frozen generator images") {
    // depth 1 is primitive
    ZTensorElement d1 = harmonic_coproduct(zw_gen(1, 1), 2);
    CHECK(d1.coefficient({{ZLetter{1, 1}}, {}}) == Rational(1));
    CHECK(d1.coefficient({{}, {ZLetter{1, 1}}}) == Rational(1));
    CHECK(d1.size() == 2);

    // depth 2 at N = 2: both group characters appear in the middle terms
    ZTensorElement d2 = harmonic_coproduct(zw_gen(2, 0), 2);
    CHECK(d2.coefficient({{ZLetter{2, 0}}, {}}) == Rational(1));
    CHECK(d2.coefficient({{}, {ZLetter{2, 0}}}) == Rational(1));
    CHECK(d2.coefficient({{ZLetter{1, 0}}, {ZLetter{1, 0}}}) == Rational(1));
    CHECK(d2.coefficient({{ZLetter{1, 1}}, {ZLetter{1, 1}}}) == Rational(1));
    CHECK(d2.size() == 4);

    // classical N = 1 shuffle of depths
    ZTensorElement d3 = harmonic_coproduct(zw_gen(3, 0), 1);
    CHECK(d3.coefficient({{ZLetter{1, 0}}, {ZLetter{2, 0}}}) == Rational(1));
    CHECK(d3.coefficient({{ZLetter{2, 0}}, {ZLetter{1, 0}}}) == Rational(1));
    CHECK(d3.size() == 4);

    // twisted characters at N = 3: indices add up to the twist
    ZTensorElement t = harmonic_coproduct(zw_gen(2, 1), 3);
    CHECK(t.coefficient({{ZLetter{1, 0}}, {ZLetter{1, 1}}}) == Rational(1));
    CHECK(t.coefficient({{ZLetter{1, 1}}, {ZLetter{1, 0}}}) == Rational(1));
    CHECK(t.coefficient({{ZLetter{1, 2}}, {ZLetter{1, 2}}}) == Rational(1));
    CHECK(t.size() == 5);
}

TEST_CASE("harmonic coproduct is multiplicative and graded") {
    SeededRng rng(54);
    for (int n = 1; n <= 3; ++n) {
        for (int i = 0; i < 30; ++i) {
            ZWordElement a, b;
            a.add(random_zword(rng, n, rng.uniform(0, 4)), rng.small_rational());
            b.add(random_zword(rng, n, rng.uniform(0, 4)), rng.small_rational());
            CHECK(harmonic_coproduct(zw_mul(a, b), n) ==
                  zt_mul(harmonic_coproduct(a, n), harmonic_coproduct(b, n)));
        }
        // grading, on single words
        for (int i = 0; i < 20; ++i) {
            ZWord w = random_zword(rng, n, rng.uniform(1, 5));
            ZWordElement z;
            z.add(w, Rational(1));
            for (const auto& [p, c] : harmonic_coproduct(z, n))
                CHECK(z_degree(p.first) + z_degree(p.second) == z_degree(w));
        }
    }
}

TEST_CASE("harmonic coproduct is coassociative and counital, exhaustively") {
    for (int n = 1; n <= 3; ++n) {
        std::vector<ZWord> words;
        ZWord cur;
        enum_zwords(5, n, cur, words);
        for (const auto& w : words) {
            ZWordElement z;
            z.add(w, Rational(1));
            ZTensorElement d = harmonic_coproduct(z, n);
            CHECK(hdelta_left(d, n) == hdelta_right(d, n));
            ZWordElement left, right;
            for (const auto& [p, c] : d) {
                if (p.first.empty()) left.add(p.second, c);
                if (p.second.empty()) right.add(p.first, c);
            }
            CHECK(left == z);
            CHECK(right == z);
        }
    }
}
