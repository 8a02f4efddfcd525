#pragma once

#include <cstdint>
#include <vector>

#include "gnq/bigint.hpp"

namespace gnq {

struct DigitVector {
    unsigned p = 2;
    std::vector<unsigned> d; // little-endian

    BigInt value() const;
    unsigned weight() const;
};

DigitVector digits(const BigInt& n, unsigned p);
// exactly len digits (n must be < p^len)
std::vector<unsigned> digits_fixed(const BigInt& n, unsigned p, unsigned len);
unsigned weight(const BigInt& n, unsigned p);
BigInt from_digits(const std::vector<unsigned>& d, unsigned p);

// representative of m in [1, M] modulo M
BigInt dagger_mod(const BigInt& m, const BigInt& M);
// representative in [1, p^e - 1]
BigInt dagger(const BigInt& m, unsigned p, unsigned e);

enum class CarryKind { None, Interrupted, Uninterrupted };
const char* to_string(CarryKind k);

struct CarryReport {
    std::vector<unsigned> result; // e digits
    std::uint64_t value = 0;
    std::vector<unsigned> giving;    // sorted positions of Z_e
    std::vector<unsigned> receiving; // sorted
    CarryKind kind = CarryKind::None;
};

// base-p addition of e-digit numbers with the carry out of position e-1 fed back into 0
CarryReport oplus(std::uint64_t a, std::uint64_t b, unsigned p, unsigned e);

struct Coset {
    std::uint64_t canonical = 0;
    std::vector<std::uint64_t> members; // sorted
};

// orbit of n under multiplication by p modulo q^{pe} - 1
Coset coset_canonical(std::uint64_t n, unsigned q, unsigned p, unsigned e);
// same for a big index, reduced first; canonical returned as BigInt
BigInt coset_canonical_big(const BigInt& n, unsigned q, unsigned p, unsigned e);

// true iff n is the minimum of its orbit under x -> x*p mod M; rounds = s*p*e
bool is_canonical(std::uint64_t n, std::uint64_t M, unsigned p, unsigned rounds);

} // namespace gnq
