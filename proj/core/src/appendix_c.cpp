#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "gnq/error.hpp"
#include "gnq/theorems.hpp"

namespace gnq {

namespace {

// "q3-2q2+4q-1" -> (1, -2, 4, -1)
AppendixTerm parse_expr(long long coeff, const std::string& s) {
    AppendixTerm t{coeff, 0, 0, 0, 0, s};
    std::size_t i = 0;
    if (s.empty()) throw Error(ErrorKind::DataError, "empty exponent");
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        }
        long long mag = 1;
        bool num = false;
        if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            mag = 0;
            num = true;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) mag = mag * 10 + (s[i++] - '0');
        }
        long long* slot = &t.c0;
        if (i < s.size() && s[i] == 'q') {
            ++i;
            slot = &t.c1;
            if (i < s.size() && s[i] == '2') slot = &t.c2, ++i;
            else if (i < s.size() && s[i] == '3') slot = &t.c3, ++i;
        } else if (!num) {
            throw Error(ErrorKind::DataError, "bad exponent '" + s + "'");
        }
        *slot += sign * mag;
    }
    return t;
}

} // namespace

std::vector<AppendixTerm> load_appendix_c(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::MissingDataFile, "cannot open " + path);
    std::vector<AppendixTerm> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
        std::istringstream ls(line);
        long long c;
        std::string e;
        if (!(ls >> c)) continue;
        if (!(ls >> e)) throw Error(ErrorKind::DataError, path + ":" + std::to_string(lineno) + ": missing exponent");
        out.push_back(parse_expr(c, e));
    }
    return out;
}

Poly sporadic_g(unsigned q) {
    auto pp = prime_power(q);
    if (!pp) throw Error(ErrorKind::NonPrime, std::to_string(q) + " is not a prime power");
    auto F = BaseField::get(pp->first);
    std::vector<long long> c(q * q + 1, 0);
    c[1] += 1;
    c[q] += 1;
    c[q * q] += 1;
    c[q - 2] -= 1;
    c[q * q - 2] -= 1;
    return from_ints(*F, c);
}

AppendixReport verify_appendix_c(unsigned q, const std::string& data_dir) {
    auto pp = prime_power(q);
    if (!pp) throw Error(ErrorKind::NonPrime, std::to_string(q) + " is not a prime power");
    if (q < 4) throw Error(ErrorKind::OutOfRange, "the expansion is stated for q > 3");
    if (q > 16) throw Error(ErrorKind::SizeBudgetExceeded, "q^3 too large for dense expansion");
    const unsigned p = pp->first;
    const bool odd = p != 2;
    auto F = BaseField::get(p);
    const std::uint64_t N = std::uint64_t(q) * q * q;
    AppendixReport R;
    R.q = q;
    R.exponent = odd ? BigInt(2 * q * q + 2) : BigInt(2 * q * q + q + 3);
    R.expected_leading = F->from_int(odd ? 8 : 1);

    Poly got = pow_mod_cyclic(*F, sporadic_g(q), R.exponent, N);
    R.leading = got.size() > N - 1 ? got[N - 1] : 0;
    R.leading_ok = R.leading == R.expected_leading;

    auto terms = load_appendix_c(data_dir + (odd ? "/appendix_c_odd.txt" : "/appendix_c_even.txt"));
    R.terms_listed = terms.size();
    std::map<std::uint64_t, long long> listed;
    const long long Q = q;
    for (auto& t : terms) {
        long long E = t.c3 * Q * Q * Q + t.c2 * Q * Q + t.c1 * Q + t.c0;
        // negative exponents (small q only) fold the same way, as functions on the nonzero elements
        if (E != 0) {
            const long long M = static_cast<long long>(N - 1);
            E = ((E - 1) % M + M) % M + 1;
        }
        listed[static_cast<std::uint64_t>(E)] += t.coeff;
    }
    std::map<std::uint64_t, std::uint8_t> want;
    for (auto& [E, c] : listed) {
        std::uint8_t v = F->from_int(c);
        if (v) want[E] = v;
    }
    std::map<std::uint64_t, std::uint8_t> have;
    for (std::uint64_t E = 0; E < got.size(); ++E)
        if (got[E]) have[E] = got[E];
    R.terms_computed = have.size();
    R.list_ok = want == have;
    if (!R.list_ok) {
        // highest exponent where the two disagree
        for (std::uint64_t E = N; E-- > 0;) {
            auto a = want.find(E), b = have.find(E);
            const std::uint8_t x = a == want.end() ? 0 : a->second, y = b == have.end() ? 0 : b->second;
            if (x != y) {
                R.first_mismatch = BigInt(E);
                break;
            }
        }
    }
    return R;
}

} // namespace gnq
