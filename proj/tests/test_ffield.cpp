#include <gtest/gtest.h>

#include <random>
#include <set>

#include "gnq/error.hpp"
#include "gnq/tower.hpp"
#include "oracle_data.hpp"

using namespace gnq;

namespace {

std::vector<std::uint64_t> poly_u64(const Poly& f) { return {f.begin(), f.end()}; }

} // namespace

TEST(BaseField, PrimePowers) {
    EXPECT_TRUE(is_prime(2));
    EXPECT_TRUE(is_prime(67));
    EXPECT_FALSE(is_prime(1));
    EXPECT_FALSE(is_prime(91));
    EXPECT_EQ(prime_power(9), std::make_pair(3u, 2u));
    EXPECT_EQ(prime_power(128), std::make_pair(2u, 7u));
    EXPECT_FALSE(prime_power(6));
    EXPECT_FALSE(prime_power(1));
}

TEST(BaseField, AxiomsExhaustive) {
    for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 16u, 25u, 27u}) {
        auto F = BaseField::get(q);
        for (unsigned a = 0; a < q; ++a) {
            if (a) EXPECT_EQ(F->mul(a, F->inv(a)), 1) << q << " " << a;
            EXPECT_EQ(F->add(a, F->neg(a)), 0);
            EXPECT_EQ(F->pow(a, q), a); // a^q = a
            for (unsigned b = 0; b < q; ++b) {
                EXPECT_EQ(F->frobenius(F->add(a, b)), F->add(F->frobenius(a), F->frobenius(b)));
                EXPECT_EQ(F->mul(a, b), F->mul(b, a));
            }
        }
        // the prime subfield sits on codes 0..p-1
        for (unsigned c = 0; c < F->p(); ++c) EXPECT_EQ(F->frobenius(c), c);
    }
    EXPECT_THROW(BaseField::get(2)->inv(0), std::exception);
}

TEST(Tower, SmallestIrreducibleMatchesOracle) {
    auto& O = OracleData::get();
    EXPECT_EQ(poly_u64(FieldTower::make(3, 1, 2)->ext().modulus()), O.at("irreducible 3 2"));
    EXPECT_EQ(poly_u64(FieldTower::make(2, 1, 3)->ext().modulus()), O.at("irreducible 2 3"));
    EXPECT_EQ(poly_u64(BaseField::get(25)->modulus()), O.at("irreducible 5 2"));
}

TEST(Tower, Deterministic) {
    FieldTower a(3, 1, 3), b(3, 1, 3);
    EXPECT_EQ(a.ext().modulus(), b.ext().modulus());
    EXPECT_EQ(a.big().modulus(), b.big().modulus());
    EXPECT_EQ(FieldTower::make(2, 1, 1)->big().degree(), 2u);
    EXPECT_EQ(FieldTower::make(3, 1, 3)->big().degree(), 9u);
}

TEST(Tower, Errors) {
    try {
        FieldTower t(6, 1, 1);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NonPrime);
    }
    try {
        FieldTower t(2, 9, 1);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::SizeBudgetExceeded);
    }
    auto T = FieldTower::make(3, 1, 2);
    try {
        T->trace(T->big().one());
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::WrongLevel);
    }
}

TEST(Tower, EnumerationDistinct) {
    for (auto [p, s, e] : {std::tuple{2u, 1u, 4u}, {3u, 1u, 3u}, {2u, 2u, 3u}, {5u, 1u, 2u}}) {
        auto T = FieldTower::make(p, s, e);
        const auto& K = T->ext();
        std::set<std::uint64_t> seen;
        for (std::uint64_t i = 0; i < K.size(); ++i) {
            EXPECT_EQ(K.index(K.element(i)), i);
            seen.insert(K.index(K.element(i)));
        }
        EXPECT_EQ(seen.size(), K.size());
    }
}

TEST(Tower, FieldAxiomsAndFrobenius) {
    std::mt19937_64 rng(7);
    for (auto [p, s, e] : {std::tuple{2u, 1u, 3u}, {3u, 1u, 2u}, {2u, 2u, 2u}, {7u, 1u, 2u}}) {
        auto T = FieldTower::make(p, s, e);
        for (const ExtField* K : {&T->ext(), &T->big()}) {
            std::uniform_int_distribution<unsigned> coord(0, K->q() - 1);
            auto rnd = [&] {
                Elem a = K->zero();
                for (auto& c : a) c = static_cast<std::uint8_t>(coord(rng));
                return a;
            };
            for (int it = 0; it < 200; ++it) {
                Elem x = rnd(), y = rnd(), z = rnd();
                if (!K->is_zero(x)) EXPECT_EQ(K->mul(x, K->inv(x)), K->one());
                EXPECT_EQ(K->mul(x, K->add(y, z)), K->add(K->mul(x, y), K->mul(x, z)));
                EXPECT_EQ(K->pow(K->add(x, y), std::uint64_t(p)), K->add(K->pow(x, std::uint64_t(p)), K->pow(y, std::uint64_t(p))));
                EXPECT_EQ(K->frob(x), K->pow(x, std::uint64_t(K->q())));
            }
        }
    }
}

TEST(Tower, EmbedIsHomomorphism) {
    std::mt19937_64 rng(11);
    for (auto [p, s, e] : {std::tuple{2u, 1u, 3u}, {3u, 1u, 2u}, {2u, 2u, 2u}, {5u, 1u, 1u}}) {
        auto T = FieldTower::make(p, s, e);
        const auto& E = T->ext();
        const auto& B = T->big();
        std::uniform_int_distribution<std::uint64_t> pick(0, E.size() - 1);
        for (unsigned c = 0; c < p; ++c) EXPECT_EQ(T->embed(E.from_base(c)), B.from_base(c));
        for (int it = 0; it < 100; ++it) {
            Elem x = E.element(pick(rng)), y = E.element(pick(rng));
            EXPECT_EQ(T->embed(E.add(x, y)), B.add(T->embed(x), T->embed(y)));
            EXPECT_EQ(T->embed(E.mul(x, y)), B.mul(T->embed(x), T->embed(y)));
            EXPECT_EQ(T->project(T->embed(x)), x);
        }
        EXPECT_FALSE(T->project(B.gen()).has_value());
    }
}

TEST(Tower, TraceNormS) {
    for (auto [p, s, e] : {std::tuple{3u, 1u, 3u}, {2u, 2u, 3u}, {5u, 1u, 2u}, {3u, 1u, 6u}}) {
        auto T = FieldTower::make(p, s, e);
        const auto& K = T->ext();
        const auto& F = T->base();
        std::mt19937_64 rng(p * 100 + e);
        std::uniform_int_distribution<std::uint64_t> pick(0, K.size() - 1);
        EXPECT_EQ(T->trace(K.zero()), 0);
        EXPECT_EQ(T->norm(K.zero()), 0);
        EXPECT_EQ(T->norm(K.one()), 1);
        for (unsigned c = 0; c < F.q(); ++c) {
            EXPECT_EQ(T->trace(K.from_base(c)), F.mul(F.from_int(e), c));
            EXPECT_EQ(T->norm(K.from_base(c)), F.pow(c, e));
        }
        for (int it = 0; it < 100; ++it) {
            Elem x = K.element(pick(rng)), y = K.element(pick(rng));
            EXPECT_EQ(T->norm(K.mul(x, y)), F.mul(T->norm(x), T->norm(y)));
            EXPECT_EQ(T->trace(K.add(x, y)), F.add(T->trace(x), T->trace(y)));
            EXPECT_EQ(T->eval_S(x, e), K.from_base(T->trace(x)));
            EXPECT_EQ(T->eval_S(x, 0), K.zero());
            EXPECT_EQ(T->eval_S(x, 1), x);
            // S_{2e} = 2 Tr on F_{q^e}
            EXPECT_EQ(T->eval_S(x, 2 * e), K.from_base(F.mul(F.from_int(2), T->trace(x))));
            // negative index wraps by pe
            EXPECT_EQ(T->eval_S(x, -1), T->eval_S(x, p * e - 1));
        }
    }
}

TEST(Tower, TraceOfEmbeddedVanishesAtTop) {
    auto T = FieldTower::make(3, 1, 2);
    const auto& K = T->ext();
    const auto& B = T->big();
    for (std::uint64_t i = 0; i < K.size(); ++i) EXPECT_EQ(B.trace(T->embed(K.element(i))), 0);
}

TEST(Tower, ArtinSchreierSolutionSetIsCoset) {
    for (auto [p, s, e] : {std::tuple{3u, 1u, 2u}, {2u, 1u, 4u}, {2u, 2u, 2u}, {5u, 1u, 1u}, {3u, 1u, 3u}}) {
        auto T = FieldTower::make(p, s, e);
        const auto& K = T->ext();
        const auto& B = T->big();
        const unsigned q = T->q();
        EXPECT_TRUE(B.is_zero(T->solve_artin_schreier(K.zero())));
        for (std::uint64_t i = 0; i < K.size(); ++i) {
            Elem y = K.element(i);
            Elem Y = T->embed(y);
            Elem x = T->solve_artin_schreier(y);
            EXPECT_EQ(B.sub(B.frob(x), x), Y);
            EXPECT_EQ(T->solve_artin_schreier(y), x); // deterministic
            // x + a for a in F_q all solve it
            for (unsigned a = 0; a < q; ++a) {
                Elem xa = B.add(x, B.from_base(a));
                EXPECT_EQ(B.sub(B.frob(xa), xa), Y);
            }
        }
        // and nothing else: the kernel of x^q - x on the top field is F_q
        if (B.size() <= 1u << 16) {
            std::uint64_t kernel = 0;
            for (std::uint64_t i = 0; i < B.size(); ++i) {
                Elem x = B.element(i);
                kernel += B.frob(x) == x;
            }
            EXPECT_EQ(kernel, q);
        }
    }
}

TEST(Tower, PointStrings) {
    auto T = FieldTower::make(3, 1, 2);
    const auto& K = T->ext();
    for (std::uint64_t i = 0; i < K.size(); ++i) {
        Elem x = K.element(i);
        EXPECT_EQ(parse_point(K, format_point(K, x)), x);
    }
    EXPECT_THROW(parse_point(K, "7"), std::exception);
}

// degree 17 over F_17: the candidate index q^d no longer fits in 64 bits
TEST(Tower, LargeTopDegree) {
    auto T = FieldTower::make(17, 1, 1);
    const auto& B = T->big();
    EXPECT_EQ(B.degree(), 17u);
    EXPECT_EQ(B.modulus().front(), 1);
    EXPECT_TRUE(is_irreducible(T->base(), B.modulus()));
    const auto& K = T->ext();
    for (std::uint64_t i = 0; i < K.size(); ++i) {
        Elem x = T->solve_artin_schreier(K.element(i));
        EXPECT_EQ(B.sub(B.frob(x), x), T->embed(K.element(i)));
    }
}
