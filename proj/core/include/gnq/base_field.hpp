#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

namespace gnq {

bool is_prime(std::uint64_t n);
// (p, s) with q = p^s, or nullopt when q is not a prime power
std::optional<std::pair<unsigned, unsigned>> prime_power(std::uint64_t q);

// F_q for q <= 256, elements are byte codes sum c_i p^i over the F_p basis 1, z, .., z^{s-1}.
// Codes 0..p-1 are exactly the prime subfield.
class BaseField {
public:
    using Elem = std::uint8_t;

    BaseField(unsigned p, unsigned s);

    // shared, cached instance
    static std::shared_ptr<const BaseField> get(unsigned q);

    unsigned p() const { return p_; }
    unsigned s() const { return s_; }
    unsigned q() const { return q_; }

    Elem add(Elem a, Elem b) const { return add_[idx(a, b)]; }
    Elem sub(Elem a, Elem b) const { return add_[idx(a, neg_[b])]; }
    Elem mul(Elem a, Elem b) const { return mul_[idx(a, b)]; }
    Elem neg(Elem a) const { return neg_[a]; }
    Elem inv(Elem a) const; // throws on 0
    Elem pow(Elem a, std::uint64_t k) const;
    Elem from_int(long long v) const; // image of an integer in F_p
    Elem frobenius(Elem a) const { return frob_[a]; } // a^p

    // modulus of F_q over F_p, coefficients constant term first, monic, degree s
    const std::vector<std::uint8_t>& modulus() const { return modulus_; }
    // F_p coordinates of a code, little-endian
    std::vector<unsigned> coords(Elem a) const;

    // the 256-entry row of a*x used by hot loops
    const Elem* mul_row(Elem a) const { return &mul_[static_cast<std::size_t>(a) * q_]; }

private:
    std::size_t idx(Elem a, Elem b) const { return static_cast<std::size_t>(a) * q_ + b; }

    unsigned p_, s_, q_;
    std::vector<std::uint8_t> modulus_;
    std::vector<Elem> add_, mul_, neg_, inv_, frob_;
};

} // namespace gnq
