#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "gnq/base_field.hpp"
#include "gnq/bigint.hpp"

namespace gnq {

// Dense polynomial over a BaseField; index = exponent, no trailing zeros, zero = {}.
using Poly = std::vector<std::uint8_t>;

void trim(Poly& f);
int degree(const Poly& f); // -1 for zero
Poly monomial(std::uint8_t c, std::size_t k);
Poly from_ints(const BaseField& F, const std::vector<long long>& coeffs);

Poly poly_add(const BaseField& F, const Poly& a, const Poly& b);
Poly poly_sub(const BaseField& F, const Poly& a, const Poly& b);
Poly poly_scale(const BaseField& F, const Poly& a, std::uint8_t c);
Poly poly_mul(const BaseField& F, const Poly& a, const Poly& b);
std::pair<Poly, Poly> poly_divmod(const BaseField& F, const Poly& a, const Poly& b);
Poly poly_mod(const BaseField& F, const Poly& a, const Poly& m);
Poly poly_monic(const BaseField& F, const Poly& f);

// monic gcd; both zero is an error
Poly poly_gcd(const BaseField& F, const Poly& f, const Poly& g);

Poly poly_pow_mod(const BaseField& F, const Poly& f, const BigInt& k, const Poly& m);

// exponent j >= 1 goes to ((j-1) mod (N-1)) + 1, exponent 0 stays
Poly fold_cyclic(const BaseField& F, const Poly& f, std::uint64_t N);
// f^k mod x^N - x
Poly pow_mod_cyclic(const BaseField& F, const Poly& f, const BigInt& k, std::uint64_t N);

bool is_irreducible(const BaseField& F, const Poly& f);
// monic irreducible of degree d, lexicographically smallest with the constant term compared first
Poly smallest_irreducible(const BaseField& F, unsigned d);

std::uint8_t poly_eval(const BaseField& F, const Poly& f, std::uint8_t x);

std::string poly_to_string(const BaseField& F, const Poly& f, const char* var = "x");

} // namespace gnq
