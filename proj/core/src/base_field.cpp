#include "gnq/base_field.hpp"

#include <map>
#include <mutex>

#include "gnq/error.hpp"
#include "gnq/poly.hpp"

namespace gnq {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::optional<std::pair<unsigned, unsigned>> prime_power(std::uint64_t q) {
    if (q < 2) return std::nullopt;
    std::uint64_t p = 2;
    while (q % p) ++p;
    unsigned s = 0;
    while (q % p == 0) {
        q /= p;
        ++s;
    }
    if (q != 1) return std::nullopt;
    return std::make_pair(static_cast<unsigned>(p), s);
}

BaseField::BaseField(unsigned p, unsigned s) : p_(p), s_(s), q_(1) {
    if (!is_prime(p)) throw Error(ErrorKind::NonPrime, std::to_string(p) + " is not prime");
    if (s == 0) throw Error(ErrorKind::OutOfRange, "field degree must be positive");
    for (unsigned i = 0; i < s; ++i) {
        q_ *= p;
        if (q_ > 256) throw Error(ErrorKind::SizeBudgetExceeded, "base field larger than 256 elements");
    }
    const std::size_t n = q_;
    add_.resize(n * n);
    mul_.resize(n * n);
    neg_.resize(n);
    inv_.assign(n, 0);
    frob_.resize(n);

    if (s == 1) {
        modulus_ = {0, 1};
        for (unsigned a = 0; a < q_; ++a) {
            neg_[a] = static_cast<Elem>((p - a) % p);
            for (unsigned b = 0; b < q_; ++b) {
                add_[idx(a, b)] = static_cast<Elem>((a + b) % p);
                mul_[idx(a, b)] = static_cast<Elem>((a * b) % p);
            }
        }
    } else {
        BaseField Fp(p, 1);
        modulus_ = smallest_irreducible(Fp, s);
        auto to_poly = [&](unsigned c) {
            Poly f(s);
            for (unsigned i = 0; i < s; ++i, c /= p) f[i] = static_cast<std::uint8_t>(c % p);
            trim(f);
            return f;
        };
        auto to_code = [&](const Poly& f) {
            unsigned c = 0;
            for (std::size_t i = f.size(); i-- > 0;) c = c * p + f[i];
            return static_cast<Elem>(c);
        };
        std::vector<Poly> polys(n);
        for (unsigned a = 0; a < q_; ++a) polys[a] = to_poly(a);
        for (unsigned a = 0; a < q_; ++a) {
            neg_[a] = to_code(poly_sub(Fp, {}, polys[a]));
            for (unsigned b = a; b < q_; ++b) {
                Elem sum = to_code(poly_add(Fp, polys[a], polys[b]));
                Elem prod = to_code(poly_mod(Fp, poly_mul(Fp, polys[a], polys[b]), modulus_));
                add_[idx(a, b)] = add_[idx(b, a)] = sum;
                mul_[idx(a, b)] = mul_[idx(b, a)] = prod;
            }
        }
    }
    for (unsigned a = 1; a < q_; ++a)
        for (unsigned b = 1; b < q_; ++b)
            if (mul_[idx(a, b)] == 1) {
                inv_[a] = static_cast<Elem>(b);
                break;
            }
    for (unsigned a = 0; a < q_; ++a) {
        Elem r = 1;
        for (unsigned i = 0; i < p; ++i) r = mul(r, static_cast<Elem>(a));
        frob_[a] = r;
    }
}

std::shared_ptr<const BaseField> BaseField::get(unsigned q) {
    static std::mutex mu;
    static std::map<unsigned, std::shared_ptr<const BaseField>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(q);
    if (it != cache.end()) return it->second;
    auto pp = prime_power(q);
    if (!pp) throw Error(ErrorKind::NonPrime, std::to_string(q) + " is not a prime power");
    auto f = std::make_shared<const BaseField>(pp->first, pp->second);
    cache.emplace(q, f);
    return f;
}

BaseField::Elem BaseField::inv(Elem a) const {
    if (a == 0) throw Error(ErrorKind::OutOfRange, "inverse of zero");
    return inv_[a];
}

BaseField::Elem BaseField::pow(Elem a, std::uint64_t k) const {
    Elem r = 1, b = a;
    while (k) {
        if (k & 1) r = mul(r, b);
        b = mul(b, b);
        k >>= 1;
    }
    return r;
}

BaseField::Elem BaseField::from_int(long long v) const {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return static_cast<Elem>(r);
}

std::vector<unsigned> BaseField::coords(Elem a) const {
    std::vector<unsigned> c(s_);
    unsigned v = a;
    for (unsigned i = 0; i < s_; ++i, v /= p_) c[i] = v % p_;
    return c;
}

} // namespace gnq
