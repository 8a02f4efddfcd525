#include "gnq/poly.hpp"

#include <algorithm>
#include <sstream>

#include "gnq/error.hpp"

namespace gnq {

void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

int degree(const Poly& f) { return static_cast<int>(f.size()) - 1; }

Poly monomial(std::uint8_t c, std::size_t k) {
    if (c == 0) return {};
    Poly f(k + 1, 0);
    f[k] = c;
    return f;
}

Poly from_ints(const BaseField& F, const std::vector<long long>& coeffs) {
    Poly f(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) f[i] = F.from_int(coeffs[i]);
    trim(f);
    return f;
}

Poly poly_add(const BaseField& F, const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        std::uint8_t x = i < a.size() ? a[i] : 0;
        std::uint8_t y = i < b.size() ? b[i] : 0;
        r[i] = F.add(x, y);
    }
    trim(r);
    return r;
}

Poly poly_sub(const BaseField& F, const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        std::uint8_t x = i < a.size() ? a[i] : 0;
        std::uint8_t y = i < b.size() ? b[i] : 0;
        r[i] = F.sub(x, y);
    }
    trim(r);
    return r;
}

Poly poly_scale(const BaseField& F, const Poly& a, std::uint8_t c) {
    Poly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.mul(a[i], c);
    trim(r);
    return r;
}

Poly poly_mul(const BaseField& F, const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    const std::size_t n = a.size() + b.size() - 1;
    Poly r(n, 0);
    if (F.s() == 1) {
        // prime field: accumulate as integers, reduce once per output
        const std::uint64_t p = F.p();
        std::vector<std::uint64_t> acc(n, 0);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (!a[i]) continue;
            const std::uint64_t ai = a[i];
            std::uint64_t* row = acc.data() + i;
            for (std::size_t j = 0; j < b.size(); ++j) row[j] += ai * b[j];
        }
        for (std::size_t k = 0; k < n; ++k) r[k] = static_cast<std::uint8_t>(acc[k] % p);
    } else {
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (!a[i]) continue;
            const auto* row = F.mul_row(a[i]);
            for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = F.add(r[i + j], row[b[j]]);
        }
    }
    trim(r);
    return r;
}

std::pair<Poly, Poly> poly_divmod(const BaseField& F, const Poly& a, const Poly& b) {
    if (b.empty()) throw Error(ErrorKind::OutOfRange, "division by the zero polynomial");
    Poly r = a;
    trim(r);
    if (r.size() < b.size()) return {{}, r};
    Poly quo(r.size() - b.size() + 1, 0);
    const std::uint8_t lead_inv = F.inv(b.back());
    for (std::size_t k = r.size() - 1;; --k) {
        std::uint8_t c = r[k];
        if (c) {
            c = F.mul(c, lead_inv);
            const std::size_t shift = k - (b.size() - 1);
            quo[shift] = c;
            const auto* row = F.mul_row(c);
            for (std::size_t j = 0; j < b.size(); ++j) r[shift + j] = F.sub(r[shift + j], row[b[j]]);
        }
        if (k == b.size() - 1) break;
    }
    trim(quo);
    trim(r);
    return {quo, r};
}

Poly poly_mod(const BaseField& F, const Poly& a, const Poly& m) { return poly_divmod(F, a, m).second; }

Poly poly_monic(const BaseField& F, const Poly& f) {
    if (f.empty()) return f;
    return poly_scale(F, f, F.inv(f.back()));
}

Poly poly_gcd(const BaseField& F, const Poly& f, const Poly& g) {
    Poly a = f, b = g;
    trim(a);
    trim(b);
    if (a.empty() && b.empty()) throw Error(ErrorKind::BothZero, "gcd(0, 0)");
    while (!b.empty()) {
        Poly r = poly_mod(F, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return poly_monic(F, a);
}

Poly poly_pow_mod(const BaseField& F, const Poly& f, const BigInt& k, const Poly& m) {
    Poly base = poly_mod(F, f, m);
    Poly r = poly_mod(F, Poly{1}, m);
    const std::size_t bits = k == 0 ? 0 : msb(k) + 1;
    for (std::size_t i = bits; i-- > 0;) {
        r = poly_mod(F, poly_mul(F, r, r), m);
        if (bit_test(k, static_cast<unsigned>(i))) r = poly_mod(F, poly_mul(F, r, base), m);
    }
    return r;
}

Poly fold_cyclic(const BaseField& F, const Poly& f, std::uint64_t N) {
    if (f.size() <= N) return f;
    Poly r(N, 0);
    r[0] = f[0];
    for (std::size_t j = 1; j < f.size(); ++j) {
        if (!f[j]) continue;
        const std::size_t t = ((j - 1) % (N - 1)) + 1;
        r[t] = F.add(r[t], f[j]);
    }
    trim(r);
    return r;
}

Poly pow_mod_cyclic(const BaseField& F, const Poly& f, const BigInt& k, std::uint64_t N) {
    Poly base = fold_cyclic(F, f, N);
    Poly r{1};
    const std::size_t bits = k == 0 ? 0 : msb(k) + 1;
    for (std::size_t i = bits; i-- > 0;) {
        r = fold_cyclic(F, poly_mul(F, r, r), N);
        if (bit_test(k, static_cast<unsigned>(i))) r = fold_cyclic(F, poly_mul(F, r, base), N);
    }
    return r;
}

bool is_irreducible(const BaseField& F, const Poly& f0) {
    Poly f = f0;
    trim(f);
    const int d = degree(f);
    if (d < 1) return false;
    if (d == 1) return true;
    f = poly_monic(F, f);
    const Poly x{0, 1};
    std::vector<Poly> xq(d + 1); // xq[k] = x^{q^k} mod f
    xq[0] = poly_mod(F, x, f);
    for (int k = 1; k <= d; ++k) xq[k] = poly_pow_mod(F, xq[k - 1], BigInt(F.q()), f);
    if (poly_sub(F, xq[d], poly_mod(F, x, f)).size() != 0) return false;
    int n = d;
    for (int r = 2; r <= n; ++r) {
        if (n % r) continue;
        while (n % r == 0) n /= r;
        Poly h = poly_sub(F, xq[d / r], x);
        if (poly_gcd(F, h, f).size() != 1) return false;
    }
    return true;
}

Poly smallest_irreducible(const BaseField& F, unsigned d) {
    if (d == 0) throw Error(ErrorKind::OutOfRange, "degree 0 modulus");
    const unsigned q = F.q();
    // odometer over (c_0, c_1, ..., c_{d-1}), c_0 most significant; q^d overflows 64 bits quickly
    Poly f(d + 1, 0);
    f[d] = 1;
    if (d > 1) f[0] = 1; // a zero constant term is only irreducible for d = 1
    for (;;) {
        if (is_irreducible(F, f)) return f;
        unsigned i = d;
        while (i-- > 0) {
            if (f[i] + 1u < q) {
                ++f[i];
                break;
            }
            f[i] = 0;
        }
        if (i == static_cast<unsigned>(-1)) break;
    }
    throw Error(ErrorKind::NoSolution, "no irreducible polynomial found");
}

std::uint8_t poly_eval(const BaseField& F, const Poly& f, std::uint8_t x) {
    std::uint8_t r = 0;
    for (std::size_t i = f.size(); i-- > 0;) r = F.add(F.mul(r, x), f[i]);
    return r;
}

std::string poly_to_string(const BaseField& F, const Poly& f, const char* var) {
    if (f.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = f.size(); i-- > 0;) {
        if (!f[i]) continue;
        if (!first) os << " + ";
        first = false;
        const unsigned c = f[i];
        if (i == 0) {
            os << c;
            continue;
        }
        if (c != 1) os << c << "*";
        os << var;
        if (i > 1) os << "^" << i;
    }
    (void)F;
    return os.str();
}

} // namespace gnq
