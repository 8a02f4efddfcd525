#include "gnq/digits.hpp"

#include <algorithm>
#include <limits>

#include "gnq/error.hpp"

namespace gnq {

BigInt DigitVector::value() const { return from_digits(d, p); }

unsigned DigitVector::weight() const {
    unsigned w = 0;
    for (unsigned x : d) w += x;
    return w;
}

DigitVector digits(const BigInt& n, unsigned p) {
    if (n < 0) throw Error(ErrorKind::OutOfRange, "digits of a negative number");
    DigitVector out;
    out.p = p;
    BigInt v = n;
    while (v > 0) {
        out.d.push_back(static_cast<unsigned>(v % p));
        v /= p;
    }
    return out;
}

std::vector<unsigned> digits_fixed(const BigInt& n, unsigned p, unsigned len) {
    std::vector<unsigned> d(len, 0);
    BigInt v = n;
    for (unsigned i = 0; i < len && v > 0; ++i) {
        d[i] = static_cast<unsigned>(v % p);
        v /= p;
    }
    if (v != 0) throw Error(ErrorKind::OutOfRange, "value does not fit in the requested digit count");
    return d;
}

unsigned weight(const BigInt& n, unsigned p) { return digits(n, p).weight(); }

BigInt from_digits(const std::vector<unsigned>& d, unsigned p) {
    BigInt v = 0;
    for (std::size_t i = d.size(); i-- > 0;) v = v * p + d[i];
    return v;
}

BigInt dagger_mod(const BigInt& m, const BigInt& M) {
    if (M < 1) throw Error(ErrorKind::OutOfRange, "dagger modulus must be positive");
    BigInt r = mod_floor(m, M);
    return r == 0 ? M : r;
}

BigInt dagger(const BigInt& m, unsigned p, unsigned e) { return dagger_mod(m, ipow(BigInt(p), e) - 1); }

const char* to_string(CarryKind k) {
    switch (k) {
    case CarryKind::None: return "none";
    case CarryKind::Interrupted: return "interrupted";
    case CarryKind::Uninterrupted: return "uninterrupted";
    }
    return "?";
}

CarryReport oplus(std::uint64_t a, std::uint64_t b, unsigned p, unsigned e) {
    const std::uint64_t top = ipow_u64(p, e) - 1;
    if (a > top || b > top) throw Error(ErrorKind::OutOfRange, "oplus operand exceeds p^e - 1");
    const auto da = digits_fixed(a, p, e), db = digits_fixed(b, p, e);
    // carry into position 0 is whatever leaves position e-1; try 0 first, feed back if needed
    std::vector<unsigned> carry_out(e);
    auto run = [&](unsigned cin) {
        unsigned c = cin;
        for (unsigned i = 0; i < e; ++i) {
            unsigned s = da[i] + db[i] + c;
            c = s >= p ? 1 : 0;
            carry_out[i] = c;
        }
        return c;
    };
    unsigned cin = run(0) ? 1 : 0;
    if (cin) run(1);

    CarryReport rep;
    rep.result.resize(e);
    for (unsigned i = 0; i < e; ++i) {
        unsigned in = carry_out[(i + e - 1) % e];
        rep.result[i] = (da[i] + db[i] + in) % p;
        if (carry_out[i]) {
            rep.giving.push_back(i);
            rep.receiving.push_back((i + 1) % e);
        }
    }
    std::sort(rep.receiving.begin(), rep.receiving.end());
    std::uint64_t v = 0;
    for (unsigned i = e; i-- > 0;) v = v * p + rep.result[i];
    rep.value = v;
    if (rep.giving.empty())
        rep.kind = CarryKind::None;
    else if (rep.giving.size() == e)
        rep.kind = CarryKind::Uninterrupted;
    else
        rep.kind = CarryKind::Interrupted;
    return rep;
}

namespace {
std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}
} // namespace

Coset coset_canonical(std::uint64_t n, unsigned q, unsigned p, unsigned e) {
    unsigned s = 0;
    for (unsigned v = q; v > 1; v /= p) ++s;
    const BigInt Mb = ipow(BigInt(q), p * e) - 1;
    if (Mb > BigInt(std::numeric_limits<std::uint64_t>::max() / 2))
        throw Error(ErrorKind::SizeBudgetExceeded, "modulus too large for a 64-bit coset");
    const std::uint64_t M = static_cast<std::uint64_t>(Mb);
    std::uint64_t x = n % M;
    Coset c;
    for (unsigned i = 0; i < s * p * e; ++i) {
        c.members.push_back(x);
        x = mulmod(x, p, M);
    }
    std::sort(c.members.begin(), c.members.end());
    c.members.erase(std::unique(c.members.begin(), c.members.end()), c.members.end());
    c.canonical = c.members.front();
    return c;
}

BigInt coset_canonical_big(const BigInt& n, unsigned q, unsigned p, unsigned e) {
    unsigned s = 0;
    for (unsigned v = q; v > 1; v /= p) ++s;
    const BigInt M = ipow(BigInt(q), p * e) - 1;
    BigInt x = dagger_mod(n, M), best = x;
    for (unsigned i = 0; i < s * p * e; ++i) {
        x = (x * p) % M;
        if (x == 0) x = M;
        if (x < best) best = x;
    }
    return best;
}

bool is_canonical(std::uint64_t n, std::uint64_t M, unsigned p, unsigned rounds) {
    std::uint64_t x = n;
    for (unsigned i = 1; i < rounds; ++i) {
        x = x * p;
        if (x >= M) x %= M;
        if (x < n) return false;
    }
    return true;
}

} // namespace gnq
