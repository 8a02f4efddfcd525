#include <gtest/gtest.h>

#include <set>

#include "gnq/digits.hpp"
#include "gnq/error.hpp"
#include "gnq/theorems.hpp"
#include "oracle_data.hpp"

using namespace gnq;

TEST(ClassifyE1, Examples) {
    auto v = classify_e1(17, 3);
    EXPECT_EQ(v.predicted, Prediction::Desirable);
    ASSERT_TRUE(v.brute_force);
    EXPECT_TRUE(v.agree);
    for (unsigned q : {3u, 4u, 5u, 7u}) {
        auto w = classify_e1(q - 1, q);
        EXPECT_EQ(w.predicted, Prediction::NotDesirable) << q;
        EXPECT_TRUE(w.agree);
    }
    EXPECT_THROW(classify_e1(0, 3), Error);
}

TEST(ClassifyE1, MatchesOracleCanonicalSets) {
    auto& O = OracleData::get();
    for (unsigned q : {2u, 3u, 4u, 5u, 8u, 9u}) {
        const unsigned p = prime_power(q)->first;
        const std::uint64_t M = ipow_u64(q, p) - 1;
        auto want = O.desirable(q, 1);
        std::set<std::uint64_t> W(want.begin(), want.end());
        for (std::uint64_t n = 1; n < M; ++n) {
            auto c = coset_canonical(n, q, p, 1);
            const bool d = W.count(c.canonical) > 0;
            ASSERT_EQ(classify_e1(n, q, {false}).predicted == Prediction::Desirable, d) << q << " " << n;
        }
    }
}

TEST(Registry, SchemaErrors) {
    try {
        check_structured("T9.9", {});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::UnknownTheorem);
    }
    try {
        check_structured("T5.3", {{"q", 7}});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::SchemaMismatch);
    }
    try {
        check_structured("T5.3", {{"q", 7}, {"i", 2}, {"zz", 1}});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::SchemaMismatch);
    }
    for (auto& id : theorem_ids()) EXPECT_NO_THROW(theorem_schema(id));
}

TEST(Registry, T53Q7) {
    auto v = check_structured("T5.3", {{"q", 7}, {"i", 2}});
    EXPECT_TRUE(v.hypotheses_ok);
    EXPECT_EQ(v.predicted, Prediction::NotDesirable);
    ASSERT_TRUE(v.brute_force);
    EXPECT_FALSE(v.brute_force->is_pp);
    EXPECT_TRUE(v.agree);
}

TEST(Registry, C51QTwo) {
    auto v = check_structured("C5.1", {{"q", 2}, {"e", 2}});
    EXPECT_EQ(v.predicted, Prediction::NotDesirable);
    EXPECT_TRUE(v.agree);
    auto w = check_structured("C5.1", {{"q", 4}, {"e", 2}});
    EXPECT_EQ(w.predicted, Prediction::Desirable);
    auto x = check_structured("C5.1", {{"q", 5}, {"e", 2}});
    EXPECT_EQ(x.predicted, Prediction::NotDesirable);
    EXPECT_TRUE(w.agree && x.agree);
}

TEST(Registry, Example412) {
    auto v = check_structured("E4.12", {});
    EXPECT_TRUE(v.hypotheses_ok);
    EXPECT_EQ(v.predicted, Prediction::Desirable);
    ASSERT_TRUE(v.n);
    EXPECT_EQ(coset_canonical_big(*v.n, 3, 3, 4), coset_canonical_big(107765, 3, 3, 4));
    EXPECT_TRUE(v.agree);
}

TEST(Registry, FailedHypothesisNamesClause) {
    auto v = check_structured("T5.3", {{"q", 7}, {"i", 4}});
    EXPECT_FALSE(v.hypotheses_ok);
    EXPECT_FALSE(v.failed_clause.empty());
    EXPECT_TRUE(v.agree); // nothing to disagree with
}

TEST(Registry, DigitGcd) {
    // 2x^2 + x^3 against x^4 - 1, directly and through the digit helper
    auto F3 = BaseField::get(3);
    EXPECT_EQ(poly_gcd(*F3, from_ints(*F3, {0, 0, 2, 1}), from_ints(*F3, {-1, 0, 0, 0, 1})), from_ints(*F3, {-1, 1}));
    EXPECT_TRUE(is_x_minus_1(digit_gcd(from_digits({0, 0, 2, 1}, 3), 3, 4), 3));
    EXPECT_FALSE(is_x_minus_1(digit_gcd(from_digits({1, 0, 1, 0}, 3), 3, 4), 3));
}

TEST(Enumerate, T43MatchesBruteForce) {
    for (unsigned p : {3u, 5u})
        for (unsigned e : {2u, 3u, 4u}) {
            auto R = enum_params_T4_3(p, e);
            std::set<std::pair<BigInt, unsigned>> got, want;
            for (auto& t : R.tuples) {
                EXPECT_TRUE(t43_conditions(t.alpha, t.b, p, e)) << p << " " << e << " " << t.alpha;
                EXPECT_TRUE(got.emplace(t.alpha, t.b).second) << "duplicate " << t.alpha;
            }
            for (auto& t : brute_params_T4_3(p, e)) want.emplace(t.alpha, t.b);
            EXPECT_EQ(got, want) << p << " " << e;
        }
}

TEST(Enumerate, Case323) {
    auto R = enum_params_T4_3(5, 4);
    const BigInt alpha = from_digits({2, 4, 3, 3}, 5);
    bool found = false;
    for (auto& t : R.tuples) found = found || (t.alpha == alpha && t.b == 2);
    EXPECT_TRUE(found);
}

TEST(Enumerate, T41MatchesBruteForce) {
    for (auto [p, e, bound] : {std::tuple{3u, 2u, 729}, {3u, 3u, 2000}, {5u, 2u, 3125}}) {
        auto R = enum_params_T4_1(p, e, bound);
        std::set<std::pair<BigInt, BigInt>> got, want;
        for (auto& t : R.tuples) {
            EXPECT_TRUE(t41_conditions(t.alpha, t.beta, p, e));
            got.emplace(t.alpha, t.beta);
        }
        for (auto& t : brute_params_T4_1(p, e, bound)) want.emplace(t.alpha, t.beta);
        EXPECT_EQ(got, want) << p << " " << e;
    }
}

TEST(Enumerate, FeasibilityExample) {
    EXPECT_TRUE(t41_feasible(1, 3, 2, 1, 1));
    EXPECT_FALSE(t41_feasible(2, 3, 2, 1, 1)); // needs m < ae/(p-1)
}

TEST(CharacterSums, Exact) {
    // f = x on F_3: every value once, sum vanishes
    EXPECT_TRUE(character_sum(3, {0, 1, 2}).vanishes());
    EXPECT_FALSE(character_sum(3, {0, 0, 1}).vanishes());
    // f(x) = x^2 on F_5 is not balanced
    EXPECT_FALSE(character_sum(5, {0, 1, 4, 4, 1}).vanishes());
    // a linear map has a constant shift
    EXPECT_TRUE(constant_shift(3, 1, {0, 2, 1}).has_value());
}
