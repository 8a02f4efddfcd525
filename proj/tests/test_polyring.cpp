#include <gtest/gtest.h>

#include <random>

#include "gnq/digits.hpp"
#include "gnq/error.hpp"
#include "gnq/poly.hpp"
#include "oracle_data.hpp"

using namespace gnq;

namespace {

Poly random_poly(const BaseField& F, std::mt19937_64& rng, int deg) {
    std::uniform_int_distribution<unsigned> c(0, F.q() - 1);
    Poly f(deg + 1);
    for (auto& x : f) x = static_cast<std::uint8_t>(c(rng));
    if (!f.back()) f.back() = 1;
    return f;
}

// f^k by repeated multiplication, folded after each step
Poly naive_pow_cyclic(const BaseField& F, const Poly& f, unsigned k, std::uint64_t N) {
    Poly r{1};
    for (unsigned i = 0; i < k; ++i) r = fold_cyclic(F, poly_mul(F, r, f), N);
    return r;
}

std::vector<unsigned> digs(std::initializer_list<unsigned> d) { return d; }

} // namespace

TEST(Poly, GcdExamples) {
    auto F3 = BaseField::get(3);
    // (2x^2 + x^3, x^4 - 1) -> x - 1
    Poly g = poly_gcd(*F3, from_ints(*F3, {0, 0, 2, 1}), from_ints(*F3, {-1, 0, 0, 0, 1}));
    EXPECT_EQ(g, from_ints(*F3, {-1, 1}));

    auto F2 = BaseField::get(2);
    g = poly_gcd(*F2, from_ints(*F2, {1, 1, 0, 1}), from_ints(*F2, {1, 0, 0, 1}));
    EXPECT_EQ(OracleData::get().at("common_roots_f8").at(0), 0u); // no common root in F_8
    EXPECT_EQ(g, Poly{1});

    Poly f = from_ints(*F3, {1, 2, 2});
    EXPECT_EQ(poly_gcd(*F3, f, {}), poly_monic(*F3, f));
    try {
        poly_gcd(*F3, {}, {});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::BothZero);
    }
}

TEST(Poly, GcdScalesByCommonFactor) {
    std::mt19937_64 rng(3);
    for (unsigned q : {2u, 3u, 4u, 5u, 9u}) {
        auto F = BaseField::get(q);
        for (int it = 0; it < 50; ++it) {
            Poly f = random_poly(*F, rng, 1 + it % 5), g = random_poly(*F, rng, 1 + it % 4),
                 h = random_poly(*F, rng, 1 + it % 3);
            Poly lhs = poly_gcd(*F, poly_mul(*F, f, h), poly_mul(*F, g, h));
            Poly rhs = poly_monic(*F, poly_mul(*F, h, poly_gcd(*F, f, g)));
            EXPECT_EQ(lhs, rhs);
            EXPECT_EQ(degree(poly_mul(*F, f, g)), degree(f) + degree(g));
        }
    }
}

TEST(Poly, DivMod) {
    std::mt19937_64 rng(5);
    auto F = BaseField::get(7);
    for (int it = 0; it < 100; ++it) {
        Poly a = random_poly(*F, rng, 2 + it % 9), b = random_poly(*F, rng, 1 + it % 4);
        auto [qt, r] = poly_divmod(*F, a, b);
        EXPECT_LT(degree(r), degree(b));
        EXPECT_EQ(poly_add(*F, poly_mul(*F, qt, b), r), a);
    }
    EXPECT_EQ(degree(Poly{}), -1);
}

TEST(Poly, Irreducible) {
    auto F2 = BaseField::get(2);
    EXPECT_TRUE(is_irreducible(*F2, from_ints(*F2, {1, 1, 1})));
    EXPECT_FALSE(is_irreducible(*F2, from_ints(*F2, {1, 0, 1})));
    auto F3 = BaseField::get(3);
    EXPECT_EQ(smallest_irreducible(*F3, 2), from_ints(*F3, {1, 0, 1}));
    // count of monic irreducibles of degree 4 over F_2 is 3
    int cnt = 0;
    for (unsigned c = 0; c < 16; ++c) {
        Poly f{static_cast<std::uint8_t>(c & 1), static_cast<std::uint8_t>(c >> 1 & 1),
               static_cast<std::uint8_t>(c >> 2 & 1), static_cast<std::uint8_t>(c >> 3 & 1), 1};
        cnt += is_irreducible(*F2, f);
    }
    EXPECT_EQ(cnt, 3);
}

TEST(Poly, FoldConvention) {
    auto F = BaseField::get(5);
    const std::uint64_t N = 25;
    EXPECT_EQ(fold_cyclic(*F, monomial(1, 25), N), monomial(1, 1));
    EXPECT_EQ(fold_cyclic(*F, monomial(1, 24), N), monomial(1, 24));
    EXPECT_EQ(fold_cyclic(*F, monomial(1, 48), N), monomial(1, 24));
    EXPECT_EQ(fold_cyclic(*F, monomial(3, 0), N), monomial(3, 0));
    EXPECT_EQ(pow_mod_cyclic(*F, monomial(1, 1), BigInt(N), N), monomial(1, 1));
    EXPECT_EQ(pow_mod_cyclic(*F, Poly{2}, BigInt(7), N), Poly{F->pow(2, 7)});
}

TEST(Poly, PowModCyclicMatchesNaive) {
    std::mt19937_64 rng(9);
    for (unsigned q : {2u, 3u, 5u}) {
        auto F = BaseField::get(q);
        for (std::uint64_t N : {std::uint64_t(q) * q, std::uint64_t(q) * q * q}) {
            if (N > 125) continue;
            for (int it = 0; it < 20; ++it) {
                Poly f = random_poly(*F, rng, 1 + it % 8);
                const unsigned k = it * 3 % 65;
                EXPECT_EQ(pow_mod_cyclic(*F, f, BigInt(k), N), naive_pow_cyclic(*F, f, k, N)) << q << " " << N << " " << k;
            }
        }
    }
}

TEST(Poly, HermiteCoefficientQ5) {
    auto F = BaseField::get(5);
    // y + y^5 + y^25 - y^3 - y^23
    std::vector<long long> c(26, 0);
    c[1] = c[5] = c[25] = 1;
    c[3] = c[23] = -1;
    Poly r = pow_mod_cyclic(*F, from_ints(*F, c), BigInt(52), 125);
    ASSERT_GT(r.size(), 124u);
    EXPECT_EQ(r[124], 3); // 8 mod 5
}

TEST(Digits, Examples) {
    EXPECT_EQ(digits(101, 3).d, digs({2, 0, 2, 0, 1}));
    EXPECT_EQ(weight(101, 3), 5u);
    EXPECT_EQ(digits(59, 4).d, digs({3, 2, 3}));
    EXPECT_EQ(weight(59, 4), 8u);
    EXPECT_TRUE(digits(0, 7).d.empty());
    EXPECT_EQ(weight(0, 7), 0u);
    EXPECT_EQ(from_digits({2, 0, 2, 0, 1}, 3), 101);
    EXPECT_EQ(digits(BigInt(1) << 100, 2).value(), BigInt(1) << 100);
    EXPECT_EQ(digits_fixed(5, 3, 4), digs({2, 1, 0, 0}));
}

TEST(Digits, Dagger) {
    // alpha = (2,2,1,1)_3 = 44, (3 alpha - 7)^dagger = 45 = (0,0,2,1)_3
    EXPECT_EQ(from_digits({2, 2, 1, 1}, 3), 44);
    EXPECT_EQ(dagger(3 * 44 - 7, 3, 4), 45);
    EXPECT_EQ(digits_fixed(45, 3, 4), digs({0, 0, 2, 1}));
    EXPECT_EQ(dagger(80, 3, 4), 80);
    EXPECT_EQ(dagger(160, 3, 4), 80);
    EXPECT_EQ(dagger(0, 3, 4), 80);
    EXPECT_EQ(dagger(-7, 3, 4), 73);
    EXPECT_EQ(dagger_mod(-1, 10), 9);
}

TEST(Digits, OplusExamples) {
    const unsigned p = 5, e = 7;
    auto v = [&](std::initializer_list<unsigned> d) { return static_cast<std::uint64_t>(from_digits(d, p)); };

    auto r = oplus(v({1, 0, 2, 3, 2, 1, 4}), v({4, 3, 3, 4, 1, 3, 2}), p, e);
    EXPECT_EQ(r.result, digs({1, 4, 0, 3, 4, 4, 1}));
    EXPECT_EQ(r.giving, digs({0, 2, 3, 6}));
    EXPECT_EQ(r.receiving, digs({0, 1, 3, 4}));
    EXPECT_EQ(r.kind, CarryKind::Interrupted);

    r = oplus(v({3, 2, 1, 3, 4, 0, 3}), v({2, 2, 4, 4, 1, 4, 2}), p, e);
    EXPECT_EQ(r.result, digs({1, 0, 1, 3, 1, 0, 1}));
    EXPECT_EQ(r.kind, CarryKind::Uninterrupted);
    EXPECT_EQ(r.giving.size(), e);

    r = oplus(v({1, 2, 3}), 0, p, e);
    EXPECT_EQ(r.value, v({1, 2, 3}));
    EXPECT_TRUE(r.giving.empty());
    EXPECT_EQ(r.kind, CarryKind::None);

    try {
        oplus(78125, 0, p, e);
        FAIL();
    } catch (const Error& ex) {
        EXPECT_EQ(ex.kind(), ErrorKind::OutOfRange);
    }
}

TEST(Digits, OplusMatchesDaggerRandom) {
    std::mt19937_64 rng(13);
    for (auto [p, e] : {std::pair{2u, 5u}, {3u, 4u}, {5u, 3u}, {7u, 2u}}) {
        const std::uint64_t top = ipow_u64(p, e) - 1;
        std::uniform_int_distribution<std::uint64_t> pick(0, top);
        for (int it = 0; it < 10000; ++it) {
            const std::uint64_t a = pick(rng), b = pick(rng);
            auto r = oplus(a, b, p, e);
            const std::uint64_t want = (a == 0 && b == 0) ? 0 : static_cast<std::uint64_t>(dagger(BigInt(a + b), p, e));
            ASSERT_EQ(r.value, want) << p << " " << e << " " << a << " " << b;
            ASSERT_EQ(r.giving.size(), r.receiving.size());
            ASSERT_EQ(r.kind == CarryKind::Uninterrupted, r.giving.size() == e);
            for (auto g : r.giving)
                ASSERT_TRUE(std::count(r.receiving.begin(), r.receiving.end(), (g + 1) % e));
        }
    }
}

TEST(Digits, Cosets) {
    auto& O = OracleData::get();
    auto c = coset_canonical(25, 3, 3, 1);
    EXPECT_EQ(c.canonical, 17u);
    EXPECT_EQ(c.members, O.at("coset 3 1 25"));
    c = coset_canonical(101, 3, 3, 2);
    EXPECT_EQ(c.canonical, 101u);
    EXPECT_EQ(c.members, O.at("coset 3 2 101"));
    EXPECT_TRUE(is_canonical(101, 728, 3, 6));
    EXPECT_FALSE(is_canonical(303, 728, 3, 6));
    EXPECT_EQ(coset_canonical_big(BigInt(303) + 728 * 5, 3, 3, 2), 101);
}

TEST(Digits, WeightConstantOnPrimeCosets) {
    for (auto [p, e] : {std::pair{2u, 4u}, {3u, 2u}, {5u, 1u}}) {
        const std::uint64_t M = ipow_u64(p, p * e) - 1;
        for (std::uint64_t n = 1; n < M; n += 7) {
            auto c = coset_canonical(n, p, p, e);
            for (auto m : c.members) ASSERT_EQ(weight(m, p), weight(n, p));
        }
    }
}
