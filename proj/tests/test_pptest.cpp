#include <gtest/gtest.h>

#include <numeric>

#include "gnq/digits.hpp"
#include "gnq/error.hpp"
#include "gnq/gpoly.hpp"
#include "gnq/pptest.hpp"
#include "gnq/theorems.hpp"
#include "oracle_data.hpp"

using namespace gnq;

TEST(PermutationTest, IdentityAndConstant) {
    ExtField K(BaseField::get(3), 2);
    auto id = is_permutation(K, [](const Elem& x) { return x; });
    EXPECT_TRUE(id.is_pp);
    EXPECT_EQ(id.evals_used, 9u);
    auto c = is_permutation(K, [&](const Elem&) { return K.one(); });
    EXPECT_FALSE(c.is_pp);
    ASSERT_TRUE(c.witness);
    EXPECT_EQ(*c.witness, std::make_pair(std::uint64_t(0), std::uint64_t(1)));
    EXPECT_FALSE(is_permutation([](std::uint64_t i) { return i / 2; }, 10).is_pp);
    EXPECT_TRUE(is_permutation([](std::uint64_t i) { return 9 - i; }, 10).is_pp);
}

TEST(PermutationTest, NegInverseMonomial) {
    for (auto [q, e] : {std::pair{4u, 2u}, {5u, 2u}, {3u, 3u}, {7u, 2u}, {8u, 2u}}) {
        ExtField K(BaseField::get(q), e);
        const std::uint64_t Q = K.size();
        auto v = is_permutation(K, [&](const Elem& y) { return K.neg(K.pow(y, std::uint64_t(q - 2))); });
        EXPECT_EQ(v.is_pp, std::gcd(std::uint64_t(q - 2), Q - 1) == 1) << q << " " << e;
    }
}

TEST(PermutationTest, WitnessesCollide) {
    auto ev = GEvaluator::shared(3, 2);
    const ExtField& K = ev->context().field();
    for (unsigned n = 1; n < 728; ++n) {
        auto v = is_desirable(*ev, n);
        if (v.is_pp) continue;
        ASSERT_TRUE(v.witness);
        auto [a, b] = *v.witness;
        ASSERT_NE(a, b);
        ASSERT_EQ(ev->eval(n, K.element(a)), ev->eval(n, K.element(b)));
    }
    EXPECT_THROW(Verdict::collision([](std::uint64_t i) { return i; }, 0, 1, 2), std::logic_error);
}

TEST(PermutationTest, Subsets) {
    ExtField K(BaseField::get(3), 3);
    auto tr0 = [&](const Elem& x) { return K.trace(x) == 0; };
    auto trn = [&](const Elem& x) { return K.trace(x) != 0; };
    EXPECT_TRUE(permutes_subset(K, [](const Elem& x) { return x; }, tr0).is_pp);
    // y - 1/y + 1/y^3 off the trace-zero hyperplane
    auto f = [&](const Elem& y) {
        Elem yi = K.inv(y);
        return K.add(K.sub(y, yi), K.pow(yi, std::uint64_t(3)));
    };
    EXPECT_TRUE(permutes_subset(K, f, trn).is_pp);
    // Tr(1) = 3 = 0 in F_27, so use F_9 over F_3 where Tr(1) = 2
    ExtField K2(BaseField::get(3), 2);
    try {
        permutes_subset(K2, [&](const Elem& x) { return K2.add(x, K2.one()); },
                        [&](const Elem& x) { return K2.trace(x) == 0; });
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotClosed);
    }
}

// full-domain verdict equals the verdict on Tr^{-1}(0) and its complement, for maps fixing both
TEST(PermutationTest, TraceSplit) {
    ExtField K(BaseField::get(2), 4);
    auto tr0 = [&](const Elem& x) { return K.trace(x) == 0; };
    auto trn = [&](const Elem& x) { return K.trace(x) != 0; };
    for (std::uint64_t k = 1; k < 15; ++k) {
        // x^{2^j}, optionally plus Tr(x): linearized, trace-preserving
        auto f = [&](const Elem& x) { return K.add(K.frob(x, static_cast<unsigned>(k % 4)), k % 3 == 0 ? K.zero() : K.S(x, 4)); };
        bool closed = true;
        for (std::uint64_t i = 0; i < K.size(); ++i) closed = closed && (K.trace(f(K.element(i))) == K.trace(K.element(i)));
        if (!closed) continue;
        const bool full = is_permutation(K, f).is_pp;
        EXPECT_EQ(full, permutes_subset(K, f, tr0).is_pp && permutes_subset(K, f, trn).is_pp);
    }
}

TEST(Hermite, SporadicCoefficients) {
    auto& O = OracleData::get();
    for (unsigned q : {4u, 5u, 7u, 8u}) {
        auto pp = *prime_power(q);
        auto F = BaseField::get(pp.first);
        const BigInt k = pp.first == 2 ? BigInt(2 * q * q + q + 3) : BigInt(2 * q * q + 2);
        EXPECT_EQ(hermite_coefficient(*F, sporadic_g(q), k, std::uint64_t(q) * q * q),
                  O.at("hermite " + std::to_string(q)).at(0))
            << q;
    }
    auto F = BaseField::get(5);
    EXPECT_EQ(hermite_coefficient(*F, monomial(1, 1), BigInt(3), 25), 0);
}

// a desirable g has vanishing Hermite coefficients for every t < Q-1 prime to p
TEST(Hermite, NecessityOnSmallFields) {
    auto& O = OracleData::get();
    for (auto [q, e] : {std::pair{3u, 1u}, {3u, 2u}, {4u, 1u}, {2u, 3u}, {2u, 4u}, {5u, 1u}}) {
        const auto p = prime_power(q)->first;
        auto F = BaseField::get(p);
        const std::uint64_t Q = ipow_u64(q, e);
        unsigned used = 0;
        for (auto n : O.desirable(q, e)) {
            if (n > 5000 || used >= 6) continue;
            ++used;
            Poly g = g_symbolic(n, q, e);
            for (std::uint64_t t = 1; t + 1 < Q; ++t) {
                if (t % p == 0) continue;
                ASSERT_EQ(hermite_coefficient(*F, g, BigInt(t), Q), 0) << q << " " << e << " n=" << n << " t=" << t;
            }
        }
    }
}

TEST(Desirable, Examples) {
    EXPECT_TRUE(is_desirable(5, 2, 3).is_pp);
    EXPECT_TRUE(is_desirable(59, 2, 4).is_pp);
    EXPECT_TRUE(is_desirable(101, 3, 3).is_pp);
    EXPECT_TRUE(is_desirable(71, 2, 3).is_pp);
    EXPECT_TRUE(is_desirable(17, 1, 3).is_pp);
    EXPECT_FALSE(is_desirable(100, 3, 3).is_pp);
    // reduced first: a huge index in the same class
    EXPECT_TRUE(is_desirable(BigInt(101) + BigInt(19682) * (BigInt(1) << 200), 3, 3).is_pp);
    EXPECT_THROW(is_desirable(0, 2, 3), Error);
}

TEST(Desirable, MatchesOracleSets) {
    auto& O = OracleData::get();
    for (auto [q, e] : {std::pair{2u, 1u}, {2u, 2u}, {2u, 3u}, {2u, 4u}, {3u, 1u}, {3u, 2u}, {3u, 3u}, {4u, 1u},
                        {4u, 2u}, {4u, 3u}, {5u, 1u}, {8u, 1u}, {9u, 1u}}) {
        auto ev = GEvaluator::shared(q, e);
        const auto p = prime_power(q)->first;
        const unsigned rounds = prime_power(q)->second * p * e;
        const std::uint64_t M = static_cast<std::uint64_t>(ev->context().period());
        std::vector<std::uint64_t> got;
        DesirableScanner sc(*ev);
        for (std::uint64_t n = 1; n < M; ++n) {
            if (!is_canonical(n, M, p, rounds)) continue;
            auto d = ev->index_digits(n);
            if (sc.test(d.data())) got.push_back(n);
        }
        EXPECT_EQ(got, O.desirable(q, e)) << q << " " << e;
    }
}
