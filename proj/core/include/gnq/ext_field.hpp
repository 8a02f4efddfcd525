#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "gnq/base_field.hpp"
#include "gnq/bigint.hpp"
#include "gnq/poly.hpp"

namespace gnq {

// coefficient vector over F_q, always exactly degree() entries
using Elem = boost::container::small_vector<std::uint8_t, 24>;

// F_{q^d} = F_q[x]/(m(x)).
class ExtField {
public:
    ExtField(std::shared_ptr<const BaseField> F, unsigned d);
    ExtField(std::shared_ptr<const BaseField> F, Poly modulus);

    const BaseField& base() const { return *F_; }
    std::shared_ptr<const BaseField> base_ptr() const { return F_; }
    unsigned degree() const { return d_; }
    unsigned q() const { return F_->q(); }
    const Poly& modulus() const { return mod_; }
    BigInt order() const;
    // q^d, throws SizeBudgetExceeded above 2^32
    std::uint64_t size() const;

    Elem zero() const { return Elem(d_, 0); }
    Elem one() const;
    Elem gen() const; // the class of x
    Elem from_base(std::uint8_t c) const;
    bool is_zero(const Elem& a) const;
    bool in_base(const Elem& a) const;

    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem neg(const Elem& a) const;
    Elem scale(const Elem& a, std::uint8_t c) const;
    Elem mul(const Elem& a, const Elem& b) const;
    void mul_into(Elem& out, const Elem& a, const Elem& b) const; // out may alias
    // raw coordinate arrays of length degree(); out may alias a or b
    void mul_raw(std::uint8_t* out, const std::uint8_t* a, const std::uint8_t* b) const;
    void add_into(Elem& a, const Elem& b) const;
    Elem sqr(const Elem& a) const { return mul(a, a); }
    Elem pow(const Elem& a, const BigInt& k) const;
    Elem pow(const Elem& a, std::uint64_t k) const;
    Elem inv(const Elem& a) const; // throws OutOfRange for 0

    Elem frob(const Elem& a) const; // a^q
    Elem frob(const Elem& a, unsigned k) const;
    std::uint8_t trace(const Elem& a) const; // Tr to F_q
    std::uint8_t norm(const Elem& a) const;
    // x + x^q + ... + x^{q^{k-1}}
    Elem S(const Elem& a, unsigned k) const;

    // lexicographic order, c_0 most significant
    std::uint64_t index(const Elem& a) const;
    Elem element(std::uint64_t idx) const;

    std::string to_string(const Elem& a) const;

private:
    void init();

    std::shared_ptr<const BaseField> F_;
    unsigned d_;
    Poly mod_;
    std::vector<std::uint8_t> neg_tail_; // -m_i for i < d
    std::vector<unsigned> tail_idx_;     // where neg_tail_ is nonzero
    std::vector<Elem> frob_cols_;        // x^{jq} mod m
    std::vector<std::uint8_t> tr_basis_; // Tr(x^j)
};

// element printed as little-endian F_p digits of its coordinates
std::string format_point(const ExtField& K, const Elem& a);
Elem parse_point(const ExtField& K, const std::string& s);

} // namespace gnq
