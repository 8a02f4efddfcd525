#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "gnq/digits.hpp"
#include "gnq/error.hpp"
#include "gnq/theorems.hpp"

namespace gnq {

namespace {

BigInt pM(unsigned p, unsigned e) { return (ipow(BigInt(p), e) - 1) / (p - 1); }

bool alpha_is(const BigInt& alpha, unsigned p, unsigned e, long long off) {
    const BigInt M = pM(p, e);
    for (unsigned l = 0; l < e; ++l)
        if (mod_floor(alpha - ipow(BigInt(p), l) - off, M) == 0) return true;
    return false;
}

BigInt from_le(const std::vector<unsigned>& d, unsigned p) { return from_digits(d, p); }

} // namespace

bool t41_conditions(const BigInt& alpha, const BigInt& beta, unsigned p, unsigned e) {
    if (!is_prime(p) || e < 2 || (p == 2 && e % 2)) return false;
    if (alpha <= 0 || alpha >= ipow(BigInt(p), e) - 1) return false;
    if (beta <= 0 || beta >= ipow(BigInt(p), p * e) - 1) return false;
    if (!alpha_is(alpha, p, e, 0)) return false;
    if (weight(beta, p) != p - 1) return false;
    return weight(dagger(alpha * p + beta, p, e), p) == p;
}

bool t43_conditions(const BigInt& alpha, unsigned b, unsigned p, unsigned e) {
    if (!is_prime(p) || e < 2) return false;
    if (alpha < 0 || alpha >= ipow(BigInt(p), e) - 1) return false;
    if (b == 0 || b >= p) return false;
    if (!alpha_is(alpha, p, e, -1)) return false;
    const BigInt beta = BigInt(b) + BigInt(p - b) * p;
    return weight(dagger(alpha * p + beta, p, e), p) == p;
}

std::vector<ParamTuple> brute_params_T4_3(unsigned p, unsigned e) {
    std::vector<ParamTuple> out;
    const BigInt top = ipow(BigInt(p), e) - 1;
    for (BigInt a = 0; a < top; ++a)
        for (unsigned b = 1; b < p; ++b)
            if (t43_conditions(a, b, p, e)) out.push_back({a, BigInt(b) + BigInt(p - b) * p, b, "scan"});
    return out;
}

std::vector<ParamTuple> brute_params_T4_1(unsigned p, unsigned e, const BigInt& beta_bound) {
    std::vector<ParamTuple> out;
    const BigInt top = ipow(BigInt(p), e) - 1;
    const BigInt bmax = std::min(beta_bound, ipow(BigInt(p), p * e) - 1);
    // only beta of weight p-1 can qualify, so walk those
    std::vector<BigInt> betas;
    std::function<void(unsigned, unsigned, BigInt)> rec = [&](unsigned pos, unsigned left, BigInt acc) {
        if (acc >= bmax) return;
        if (left == 0) {
            if (acc > 0) betas.push_back(acc);
            return;
        }
        if (pos == p * e) return;
        const BigInt w = ipow(BigInt(p), pos);
        for (unsigned d = 0; d <= left && d < p; ++d) rec(pos + 1, left - d, acc + w * d);
    };
    rec(0, p - 1, 0);
    std::sort(betas.begin(), betas.end());
    for (BigInt a = 1; a < top; ++a) {
        if (!alpha_is(a, p, e, 0)) continue;
        for (auto& b : betas)
            if (t41_conditions(a, b, p, e)) out.push_back({a, b, 0, "scan"});
    }
    return out;
}

EnumReport enum_params_T4_3(unsigned p, unsigned e) {
    EnumReport R;
    if (p == 2) {
        R.notes.push_back("p = 2 excluded");
        return R;
    }
    if (!is_prime(p)) throw Error(ErrorKind::NonPrime, std::to_string(p) + " is not prime");
    if (e < 2) throw Error(ErrorKind::OutOfRange, "e must be at least 2");
    std::set<std::pair<BigInt, unsigned>> seen;
    auto emit = [&](const std::vector<unsigned>& digits, unsigned b, const std::string& family) {
        const BigInt alpha = from_le(digits, p);
        if (!t43_conditions(alpha, b, p, e)) {
            ++R.rejected;
            R.notes.push_back(family + ": alpha=" + alpha.str() + " b=" + std::to_string(b) + " fails (i)-(iii)");
            return;
        }
        if (!seen.insert({alpha, b}).second) return;
        R.tuples.push_back({alpha, BigInt(b) + BigInt(p - b) * p, b, family});
    };
    const int P = static_cast<int>(p), E = static_cast<int>(e);
    auto div = [&](int k) { return (k * (P - 1)) % E == 0 ? (k * (P - 1)) / E : -1; };
    auto bs = [&](auto pred) {
        std::vector<unsigned> v;
        for (int b = 1; b < P; ++b)
            if (pred(b)) v.push_back(static_cast<unsigned>(b));
        return v;
    };
    // Case 1
    for (unsigned l = 0; l < e; ++l) {
        std::vector<unsigned> d(e, 0);
        for (unsigned i = 0; i < l; ++i) d[i] = p - 1;
        for (unsigned b = 1; b < p; ++b) emit(d, b, "1");
    }
    const int a1 = div(1), a2 = div(2), a3 = div(3);
    // Case 2.1 / 2.2
    if (a1 >= 1 && a1 <= P - 2) {
        std::vector<unsigned> d(e, static_cast<unsigned>(a1));
        for (auto b : bs([&](int b) { return b >= std::max(P - a1, a1 + 2) || b <= a1; })) emit(d, b, "2.1");
    }
    if (a2 >= 1 && a2 <= P - 2) {
        std::vector<unsigned> d(e, static_cast<unsigned>(a2));
        for (auto b : bs([&](int b) { return P - a2 <= b && b <= a2 + 1; })) emit(d, b, "2.2");
    }
    // Case 3.x: (a-1, a, .., a+1 at l, .., a)
    auto shape = [&](int a, unsigned l) {
        std::vector<unsigned> d(e, static_cast<unsigned>(a));
        d[0] = static_cast<unsigned>(a - 1);
        d[l] = static_cast<unsigned>(a + 1);
        return d;
    };
    auto ok_a = [&](int a) { return a >= 1 && a + 1 <= P - 1; };
    if (ok_a(a1)) {
        for (auto b : bs([&](int b) {
                 return b >= std::max(div(E - 1), a1 + 1) || (E == 2 && 2 * b <= P - 5) || (E >= 3 && b <= a1 - 1);
             }))
            emit(shape(a1, e - 1), b, "3.1.1");
    }
    if (ok_a(a2) && (e == 3 || e == 4)) {
        for (auto b : bs([&](int b) { return div(E - 2) <= b && b <= a2; })) emit(shape(a2, e - 1), b, "3.1.2");
    }
    if (e >= 3 && ok_a(a1)) {
        for (auto b : bs([&](int b) { return b >= P - a1 || (P >= 5 && b <= a1 - 1); })) emit(shape(a1, 1), b, "3.2.1");
    }
    if (e == 3 && p % 3 == 1 && ok_a(a2)) {
        for (auto b : bs([&](int b) { return 3 * b >= P + 2 && b <= a2; })) emit(shape(a2, 1), b, "3.2.2");
    }
    if (a3 == P - 2 && e > 3 && ok_a(a3)) {
        // the derivation gives p - a <= b <= a; only b = 2 is listed for p = 5, e = 4
        for (auto b : bs([&](int b) { return P - a3 <= b && b <= a3; })) emit(shape(a3, 1), b, "3.2.3");
    }
    if (ok_a(a1)) {
        for (unsigned l = 2; l + 2 <= e; ++l)
            for (auto b : bs([&](int b) { return b >= P - a1 || b <= a1 - 1; })) emit(shape(a1, l), b, "3.3");
    }
    std::sort(R.tuples.begin(), R.tuples.end(), [](const ParamTuple& x, const ParamTuple& y) {
        return x.alpha != y.alpha ? x.alpha < y.alpha : x.b < y.b;
    });
    return R;
}

bool t41_feasible(int kase, unsigned p, unsigned e, unsigned a, unsigned m) {
    const long long P = p, E = e, A = a, Mm = m;
    if ((A * E) % (P - 1) != 0) return false;
    const long long k = A * E / (P - 1);
    const long long lhs = E * A * (P - 1 - A);
    switch (kase) {
    case 1:
        return 0 < Mm && Mm <= k && k <= E - Mm && lhs <= (P - 1) * std::min(P - Mm, (E - 1) * (P - 1) - Mm);
    case 2:
        return 0 < Mm && Mm < k && k <= E - Mm && lhs <= (P - 1) * std::min(P - Mm, (E - 1) * (P - 1) - Mm);
    case 3:
        return A <= P - 3 && Mm <= k && k < E - Mm &&
               lhs <= (P - 1) * std::min(P - Mm - 1, (E - 1) * (P - 1) - Mm - 1);
    case 4:
        return Mm <= k && k < E - Mm && lhs <= (P - 1) * std::min(P - Mm - 1, (E - 1) * (P - 1) - Mm - 1);
    default:
        throw Error(ErrorKind::OutOfRange, "case must be 1..4");
    }
}

EnumReport enum_params_T4_1(unsigned p, unsigned e, const BigInt& beta_bound) {
    if (!is_prime(p)) throw Error(ErrorKind::NonPrime, std::to_string(p) + " is not prime");
    if (e < 2 || (p == 2 && e % 2)) throw Error(ErrorKind::OutOfRange, "need e >= 2, e even when p = 2");
    if (e > 20) throw Error(ErrorKind::SizeBudgetExceeded, "e too large for subset enumeration");
    EnumReport R;
    const BigInt bmax = std::min(beta_bound, ipow(BigInt(p), p * e) - 1);
    const BigInt M = pM(p, e);
    std::set<std::pair<BigInt, BigInt>> seen;
    // (a, m, case) -> found anything
    std::map<std::tuple<unsigned, unsigned, int>, bool> hit;

    for (unsigned a = 0; a + 2 <= p; ++a) {
        if ((a * e) % (p - 1) != 0) continue;
        const unsigned k = a * e / (p - 1);
        if (k >= e) continue;
        for (unsigned l = 0; l < e; ++l) {
            const BigInt alpha = BigInt(a) * M + ipow(BigInt(p), l);
            if (alpha <= 0 || alpha >= ipow(BigInt(p), e) - 1) continue;
            // (alpha p)^dagger digits
            std::vector<unsigned> x(e, a);
            x[(l + 1) % e] += 1;
            for (std::uint32_t G = 0; G < (1u << e); ++G) {
                if (static_cast<unsigned>(__builtin_popcount(G)) != k) continue;
                auto in = [&](unsigned u) { return (G >> (u % e)) & 1u; };
                std::vector<int> lo(e), hi(e);
                bool ok = true;
                unsigned runs = 0;
                for (unsigned u = 0; u < e; ++u) {
                    const int cin = in(u + e - 1) ? 1 : 0;
                    if (in(u)) {
                        lo[u] = std::max(0, static_cast<int>(p) - static_cast<int>(x[u]) - cin);
                        hi[u] = static_cast<int>(p) - 1;
                        if (!cin) ++runs;
                    } else {
                        lo[u] = 0;
                        hi[u] = static_cast<int>(p) - 1 - static_cast<int>(x[u]) - cin;
                    }
                    if (hi[u] < lo[u]) ok = false;
                }
                const unsigned u1 = (l + 1) % e;
                const bool gives = in(u1), recv = in(u1 + e - 1);
                const int kase = gives ? (recv ? 2 : 1) : (recv ? 3 : 4);
                auto key = std::make_tuple(a, runs, kase);
                hit.emplace(key, false);
                if (!ok) continue;
                // g: digits with sum p - 1 inside [lo, hi]
                std::vector<unsigned> g(e, 0);
                std::function<void(unsigned, int)> fill_g = [&](unsigned u, int left) {
                    if (u == e) {
                        if (left != 0) return;
                        // spread g(i) over the p slots j = i + te
                        std::vector<unsigned> bd(p * e, 0);
                        std::function<void(unsigned, unsigned, int, BigInt)> spread = [&](unsigned i, unsigned t, int rem,
                                                                                          BigInt acc) {
                            if (acc >= bmax) return;
                            if (i == e) {
                                if (acc <= 0) return;
                                if (!t41_conditions(alpha, acc, p, e)) {
                                    ++R.rejected;
                                    return;
                                }
                                hit[key] = true;
                                if (seen.insert({alpha, acc}).second)
                                    R.tuples.push_back({alpha, acc, 0, std::to_string(kase)});
                                return;
                            }
                            if (t == p - 1) {
                                const BigInt w = ipow(BigInt(p), i + t * e);
                                const unsigned ni = i + 1;
                                spread(ni, 0, ni < e ? static_cast<int>(g[ni]) : 0, acc + w * rem);
                                return;
                            }
                            const BigInt w = ipow(BigInt(p), i + t * e);
                            for (int d = 0; d <= rem; ++d) spread(i, t + 1, rem - d, acc + w * d);
                        };
                        spread(0, 0, static_cast<int>(g[0]), 0);
                        return;
                    }
                    for (int d = lo[u]; d <= std::min(hi[u], left); ++d) {
                        g[u] = static_cast<unsigned>(d);
                        fill_g(u + 1, left - d);
                    }
                    g[u] = 0;
                };
                fill_g(0, static_cast<int>(p) - 1);
            }
        }
    }
    for (auto& [key, found] : hit) {
        auto [a, m, kase] = key;
        const bool feas = t41_feasible(kase, p, e, a, m);
        if (feas != found) {
            std::ostringstream os;
            os << "case " << kase << " a=" << a << " m=" << m << ": feasibility test says " << (feas ? "nonempty" : "empty")
               << ", construction " << (found ? "found tuples" : "found none");
            if (bmax < ipow(BigInt(p), p * e) - 1) os << " (beta bound active)";
            R.notes.push_back(os.str());
        }
    }
    std::sort(R.tuples.begin(), R.tuples.end(), [](const ParamTuple& x, const ParamTuple& y) {
        return x.alpha != y.alpha ? x.alpha < y.alpha : x.beta < y.beta;
    });
    return R;
}

} // namespace gnq
