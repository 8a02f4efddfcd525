#include "gnq/search.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <limits>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "gnq/digits.hpp"
#include "gnq/error.hpp"
#include "gnq/gpoly.hpp"
#include "gnq/pptest.hpp"
#include "gnq/theorems.hpp"

namespace gnq {

std::string digit_string(std::uint64_t n, unsigned q) {
    if (n == 0) return "0";
    std::string s;
    for (; n; n /= q) {
        const unsigned d = static_cast<unsigned>(n % q);
        s += d < 10 ? char('0' + d) : char('a' + d - 10);
    }
    return s;
}

std::string tsv_header() { return "q\te\tn\tdigits\tdesirable\tcategories"; }

namespace {

std::string join(const std::vector<std::string>& v, const char* sep) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
    return s;
}

unsigned weight_u64(std::uint64_t n, unsigned q) {
    unsigned w = 0;
    for (; n; n /= q) w += static_cast<unsigned>(n % q);
    return w;
}

// the base-q weight is not constant on a p-cyclotomic coset when q > p; the filter uses its minimum
unsigned min_coset_weight(std::uint64_t n, std::uint64_t M, unsigned p, unsigned rounds, unsigned q) {
    unsigned w = weight_u64(n, q);
    std::uint64_t x = n;
    for (unsigned i = 1; i < rounds && p != q; ++i) {
        x = x * p % M;
        w = std::min(w, weight_u64(x, q));
    }
    return w;
}

} // namespace

std::string to_tsv(const CatalogRow& r) {
    std::ostringstream os;
    os << r.q << '\t' << r.e << '\t' << r.n << '\t' << r.digits << '\t' << (r.desirable ? "yes" : "no") << '\t'
       << (r.categories.empty() ? "-" : join(r.categories, ","));
    return os.str();
}

std::string to_json(const CatalogRow& r) {
    std::ostringstream os;
    os << "{\"q\":" << r.q << ",\"e\":" << r.e << ",\"n\":" << r.n << ",\"digits\":\"" << r.digits
       << "\",\"desirable\":" << (r.desirable ? "true" : "false") << ",\"categories\":[";
    for (std::size_t i = 0; i < r.categories.size(); ++i) os << (i ? "," : "") << '"' << r.categories[i] << '"';
    os << "]}";
    return os.str();
}

void write_checkpoint(const std::string& path, unsigned q, unsigned e, std::uint64_t last) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw Error(ErrorKind::DataError, "cannot write " + tmp);
        out << q << ' ' << e << ' ' << last << '\n';
    }
    std::rename(tmp.c_str(), path.c_str());
}

std::optional<std::uint64_t> read_checkpoint(const std::string& path, unsigned q, unsigned e) {
    std::ifstream in(path);
    if (!in) return std::nullopt;
    unsigned cq = 0, ce = 0;
    std::uint64_t last = 0;
    if (!(in >> cq >> ce >> last)) throw Error(ErrorKind::DataError, "malformed checkpoint " + path);
    if (cq != q || ce != e)
        throw Error(ErrorKind::DataError, "checkpoint " + path + " is for q=" + std::to_string(cq) +
                                              " e=" + std::to_string(ce));
    return last;
}

std::vector<CatalogRow> search_all(const SearchJob& job, SearchStats* stats) {
    auto pp = prime_power(job.q);
    if (!pp) throw Error(ErrorKind::NonPrime, std::to_string(job.q) + " is not a prime power");
    if (job.e < 1) throw Error(ErrorKind::OutOfRange, "e >= 1");
    const unsigned p = pp->first, s = pp->second, pe = p * job.e;
    const BigInt Mb = ipow(BigInt(job.q), pe) - 1;
    if (Mb > job.budget)
        throw Error(ErrorKind::BudgetExceeded, "q^(pe) - 1 = " + Mb.str() + " exceeds the budget " +
                                                   std::to_string(job.budget) + "; needs --long");
    const std::uint64_t M = static_cast<std::uint64_t>(Mb);
    std::uint64_t lo = 1, hi = M >= 2 ? M - 1 : 0;
    if (job.range) {
        lo = std::max<std::uint64_t>(job.range->first, 1);
        hi = std::min<std::uint64_t>(job.range->second, M >= 2 ? M - 1 : 0);
    }
    if (job.resume_after) lo = std::max(lo, *job.resume_after + 1);
    if (lo > hi) return {};

    auto ev = GEvaluator::shared(job.q, job.e);
    const std::uint64_t chunk = std::max<std::uint64_t>(job.chunk, 1);
    const std::uint64_t nchunks = (hi - lo) / chunk + 1;
    const unsigned rounds = s * pe;

    std::vector<std::vector<CatalogRow>> out(nchunks);
    std::vector<char> done(nchunks, 0);
    std::atomic<std::uint64_t> next{0};
    std::atomic<std::uint64_t> scanned{0}, canonical{0}, tested{0};
    std::mutex emit_mu;
    std::uint64_t emitted = 0;
    std::exception_ptr failure;

    auto worker = [&]() {
        try {
            DesirableScanner sc(*ev);
            for (;;) {
                const std::uint64_t c = next.fetch_add(1);
                if (c >= nchunks) break;
                const std::uint64_t a = lo + c * chunk;
                const std::uint64_t b = std::min(hi, a + chunk - 1);
                std::vector<CatalogRow> rows;
                std::uint64_t nc = 0, nt = 0;
                for (std::uint64_t n = a; n <= b; ++n) {
                    if (!is_canonical(n, M, p, rounds)) continue;
                    if (job.weight_gt >= 0 && min_coset_weight(n, M, p, rounds, job.q) <= unsigned(job.weight_gt))
                        continue;
                    ++nc;
                    auto d = ev->index_digits(BigInt(n));
                    ++nt;
                    if (!sc.test(d.data())) continue;
                    CatalogRow r{job.q, job.e, n, digit_string(n, job.q), true, {}};
                    if (job.categorize) r.categories = categories_of(BigInt(n), job.e, job.q);
                    rows.push_back(std::move(r));
                }
                scanned += b - a + 1;
                canonical += nc;
                tested += nt;
                std::lock_guard<std::mutex> lk(emit_mu);
                out[c] = std::move(rows);
                done[c] = 1;
                // hand finished chunks to the sink in order
                while (emitted < nchunks && done[emitted]) {
                    if (job.on_chunk) {
                        const std::uint64_t last = std::min(hi, lo + emitted * chunk + chunk - 1);
                        job.on_chunk(out[emitted], last);
                    }
                    ++emitted;
                }
            }
        } catch (...) {
            std::lock_guard<std::mutex> lk(emit_mu);
            if (!failure) failure = std::current_exception();
            next = nchunks;
        }
    };

    const unsigned nw = std::max(1u, std::min<unsigned>(job.workers, static_cast<unsigned>(nchunks)));
    if (nw == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < nw; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);

    std::vector<CatalogRow> all;
    for (auto& v : out) all.insert(all.end(), v.begin(), v.end());
    std::sort(all.begin(), all.end(), [](const CatalogRow& x, const CatalogRow& y) { return x.n < y.n; });
    if (stats) {
        stats->scanned = scanned;
        stats->canonical = canonical;
        stats->tested = tested;
    }
    return all;
}

// ------------------------------------------------------------------ Table 1 scan

bool qab_caption_filter(unsigned a, unsigned b, unsigned p) {
    if (b % 2 == 0) return false;
    if (b == p) return false;
    return !(a == 2 && b == 1);
}

std::vector<std::pair<unsigned, unsigned>> search_qab_all(unsigned q) {
    auto pp = prime_power(q);
    if (!pp) throw Error(ErrorKind::NonPrime, std::to_string(q) + " is not a prime power");
    if (q > 67) throw Error(ErrorKind::OutOfRange, "q <= 67");
    const unsigned p = pp->first;
    auto ev = GEvaluator::shared(q, 2);
    const GContext& ctx = ev->context();
    const ExtField& K = ctx.field();
    std::vector<std::pair<unsigned, unsigned>> out;
    for (unsigned a = 2; a < 2 * p; ++a)
        for (unsigned b = 1; b < a; ++b) {
            auto v = is_permutation(K, [&](const Elem& y) { return eval_g_qab(a, b, ctx, y); });
            if (v.is_pp) out.emplace_back(a, b);
        }
    return out;
}

std::vector<std::pair<unsigned, unsigned>> search_qab(unsigned q) {
    const unsigned p = prime_power(q) ? prime_power(q)->first : 0;
    auto all = search_qab_all(q);
    std::vector<std::pair<unsigned, unsigned>> out;
    for (auto& ab : all)
        if (qab_caption_filter(ab.first, ab.second, p)) out.push_back(ab);
    return out;
}

std::vector<std::pair<unsigned, unsigned>> search_qab_generic(unsigned q) {
    auto pp = prime_power(q);
    if (!pp) throw Error(ErrorKind::NonPrime, std::to_string(q) + " is not a prime power");
    const unsigned p = pp->first;
    auto ev = GEvaluator::shared(q, 2);
    std::vector<std::pair<unsigned, unsigned>> out;
    for (unsigned a = 2; a < 2 * p; ++a)
        for (unsigned b = 1; b < a; ++b) {
            const BigInt n = ipow(BigInt(q), a) - ipow(BigInt(q), b) - 1;
            if (is_desirable(*ev, n).is_pp) out.emplace_back(a, b);
        }
    return out;
}

// ------------------------------------------------------------------ categorization

namespace {

struct Candidate {
    std::string id;
    Params params;
    BigInt n;
};

Params mk(std::initializer_list<std::pair<const char*, BigInt>> kv) {
    Params P;
    for (auto& [k, v] : kv) P[k] = v;
    return P;
}

// shapes with few parameters: listed exhaustively and matched by coset
std::vector<Candidate> small_shapes(unsigned q, unsigned e, unsigned p, unsigned s) {
    std::vector<Candidate> c;
    const unsigned pe = p * e;
    const BigInt Q = q;
    auto qp = [&](unsigned k) { return ipow(Q, k); };
    // q^a - q^b - 1
    for (unsigned a = 1; a < pe; ++a)
        for (unsigned b = 0; b < a; ++b) {
            const BigInt n = qp(a) - qp(b) - 1;
            if (n < 1) continue;
            if (a == 2 && b == 1) c.push_back({"C5.1", mk({{"q", q}, {"e", e}}), n});
            if (e >= 2 && b > 0) c.push_back({"T5.2", mk({{"q", q}, {"e", e}, {"a", a}, {"b", b}}), n});
            if (e != 2) continue;
            if (p % 2 == 1 && b == p && a > p) {
                const unsigned j = a - p;
                if (j % 2 == 0) c.push_back({"T5.3", mk({{"q", q}, {"i", j / 2}}), n});
                else c.push_back({"T5.6a", mk({{"q", q}, {"i", (j + 1) / 2}}), n});
            }
            if (p == 2 && a == 3 && b == 1) c.push_back({"T5.6", mk({{"q", q}}), n});
            if (q > 2 && b == 1 && a % 2 == 0) c.push_back({"T5.9", mk({{"q", q}, {"i", a / 2}}), n});
        }
    if (p == 3 && s == 1 && e >= 3) {
        const BigInt al = ipow(BigInt(3), e - 1) + ipow(BigInt(3), e - 2) - 1;
        const BigInt be = 2 + ipow(BigInt(3), e - 2) + ipow(BigInt(3), 2 * e - 2);
        c.push_back({"T4.7", mk({{"e", e}}), al * (1 + qp(e) + qp(2 * e)) + be});
    }
    if (q == 3 && e == 4) {
        const BigInt al = 1 + 9 + 2 * 27;
        const BigInt be = 2 * (1 + qp(4)) + qp(10);
        c.push_back({"E4.12", Params{}, al * (1 + qp(4) + qp(8)) + be});
    }
    if (p == 2 && s >= 2) {
        if (e > 1) c.push_back({"E6.4", mk({{"q", q}, {"e", e}}), 1 + BigInt(q - 1) * q + Q * q});
        for (unsigned a = 0; a < pe; ++a) {
            if (q == 4 && e > 1)
                c.push_back({"E6.3", mk({{"q", q}, {"e", e}, {"a", a}}), 1 + Q + qp(e) + qp(e + 1) + qp(a)});
            c.push_back({"T6.8", mk({{"q", q}, {"e", e}, {"a", a}}), BigInt(q - 1) + BigInt(q - 1) * qp(e) + 2 * qp(a)});
        }
        c.push_back({"T6.11", mk({{"q", q}, {"e", e}}),
                     BigInt(q - 1) + BigInt(q / 2) * qp(e - 1) + BigInt(q / 2) * qp(e)});
        if (e % 3 == 0) {
            const unsigned k = e / 3;
            c.push_back({"C6.19", mk({{"q", q}, {"e", e}}), BigInt(q - 3) + 2 * Q + qp(2 * k) + qp(4 * k)});
        }
    }
    for (unsigned a = 1; a < pe; ++a)
        c.push_back({"T6.9", mk({{"q", q}, {"e", e}, {"a", a}}), BigInt(q - 1) + BigInt(q - 1) * qp(e) + qp(a)});
    if (q == 4 && e > 2) {
        c.push_back({"T_sc", mk({{"q", q}, {"e", e}}), 3 + 2 * Q * q + 2 * qp(e)});
        c.push_back({"T_nc3", mk({{"q", q}, {"e", e}}), 3 + 2 * qp(e - 2) + 2 * qp(e)});
    }
    if (q == 4)
        for (unsigned a = 0; a < pe; ++a)
            for (unsigned b = 0; b < pe; ++b)
                c.push_back({"T_nc4", mk({{"q", q}, {"e", e}, {"a", a}, {"b", b}}), 1 + qp(e) + 2 * qp(a) + qp(b)});
    return c;
}

// the split shapes n = alpha(1 + p^e + ... + p^{(p-1)e}) + beta, solved for beta (or alpha) per coset member
void split_shapes(const std::vector<BigInt>& members, unsigned p, unsigned e, std::vector<Candidate>& out) {
    const BigInt P = p;
    const BigInt pe1 = ipow(P, e) - 1, ppe1 = ipow(P, p * e) - 1;
    const BigInt Mq = pe1 / (p - 1);
    BigInt R = 0;
    for (unsigned i = 0; i < p; ++i) R += ipow(P, i * e);
    std::set<std::pair<std::string, std::string>> seen;
    auto push = [&](const std::string& id, Params prm, const BigInt& n) {
        std::ostringstream k;
        for (auto& [a, b] : prm) k << a << '=' << b << ';';
        if (seen.insert({id, k.str()}).second) out.push_back({id, std::move(prm), n});
    };
    // alpha = p^l + offset mod Mq in [lo, p^e - 1)
    auto alphas = [&](long long offset, const BigInt& lo) {
        std::set<BigInt> r;
        for (unsigned l = 0; l < e; ++l)
            for (BigInt a = mod_floor(ipow(P, l) + offset, Mq); a < pe1; a += Mq)
                if (a >= lo) r.insert(a);
        return r;
    };
    const auto a41 = alphas(0, 1), a43 = alphas(-1, 0);
    for (const BigInt& m : members) {
        for (const BigInt& a : a41) {
            const BigInt beta = m - a * R;
            if (beta > 0 && beta < ppe1 && weight(beta, p) == p - 1)
                push("T4.1", mk({{"p", p}, {"e", e}, {"alpha", a}, {"beta", beta}}), m);
        }
        for (const BigInt& a : a43) {
            const BigInt beta = m - a * R;
            if (beta <= 0 || beta >= ipow(P, p * e + 1)) continue;
            auto d = digits_fixed(beta, p, p * e + 1);
            // T4.3: beta = b + (p - b) p
            if (beta < P * P && d[0] > 0 && d[0] + d[1] == p)
                push("T4.3", mk({{"p", p}, {"e", e}, {"alpha", a}, {"b", d[0]}}), m);
            // R4.4: beta = b + b_0 p + sum b_i p^{1 + ie}
            bool ok = d[0] > 0;
            Params prm = mk({{"p", p}, {"e", e}, {"alpha", a}, {"b", d[0]}});
            for (unsigned k = 1; k < d.size() && ok; ++k) {
                if (!d[k]) continue;
                if ((k - 1) % e != 0) ok = false;
                else prm["b" + std::to_string((k - 1) / e)] = d[k];
            }
            if (ok) push("R4.4", prm, m);
        }
        for (unsigned s = 0; s + 1 < p; ++s) {
            const BigInt beta = m - BigInt(s) * Mq * R;
            if (beta > 0 && beta < ipow(P, p * e))
                push("T4.9", mk({{"p", p}, {"e", e}, {"s", s}, {"beta", beta}}), m);
        }
        if (p == 3 && e > 2) {
            const BigInt beta = 2 * (1 + ipow(P, e)) + ipow(P, 2 * e + 2);
            const BigInt t = m - beta;
            if (t >= 0 && t % R == 0) push("T4.11", mk({{"e", e}, {"alpha", t / R}}), m);
        }
    }
}

const std::vector<std::pair<unsigned, std::uint64_t>>& sporadic_list() {
    // (e, n) for q = 3
    static const std::vector<std::pair<unsigned, std::uint64_t>> v = {{3, 101}, {3, 407}, {4, 91525}};
    return v;
}

} // namespace

std::vector<std::string> categories_of(const BigInt& n, unsigned e, unsigned q) {
    auto pp = prime_power(q);
    if (!pp) throw Error(ErrorKind::NonPrime, std::to_string(q) + " is not a prime power");
    const unsigned p = pp->first, s = pp->second;
    std::vector<std::string> ids;
    auto add = [&](const std::string& id) {
        if (std::find(ids.begin(), ids.end(), id) == ids.end()) ids.push_back(id);
    };
    CheckOptions opt;
    opt.brute_force = false;
    if (e == 1) {
        auto v = classify_e1(n, q, opt);
        if (v.hypotheses_ok && v.predicted == Prediction::Desirable) add(v.id);
        return ids.empty() ? std::vector<std::string>{"uncategorized"} : ids;
    }
    const BigInt canon = coset_canonical_big(n, q, p, e);
    if (q == 3)
        for (auto& [se, sn] : sporadic_list())
            if (se == e && coset_canonical_big(BigInt(sn), 3, 3, e) == canon) add("sporadic");

    std::vector<Candidate> cands;
    for (auto& c : small_shapes(q, e, p, s))
        if (coset_canonical_big(c.n, q, p, e) == canon) cands.push_back(std::move(c));
    if (s == 1) {
        const BigInt M = ipow(BigInt(q), p * e) - 1;
        std::vector<BigInt> members;
        BigInt m = dagger_mod(n, M);
        for (unsigned k = 0; k < p * e; ++k) {
            members.push_back(m);
            m = (m * p) % M;
        }
        split_shapes(members, p, e, cands);
    }
    for (auto& c : cands) {
        if (std::find(ids.begin(), ids.end(), c.id) != ids.end()) continue;
        auto v = check_structured(c.id, c.params, opt);
        if (!v.hypotheses_ok || v.predicted != Prediction::Desirable) continue;
        if (v.closed_form && !*v.closed_form) continue;
        if (!v.n || coset_canonical_big(*v.n, q, p, e) != canon) continue;
        add(c.id);
    }
    if (ids.empty()) ids.push_back("uncategorized");
    return ids;
}

CatalogRow categorize(const BigInt& n, unsigned e, unsigned q) {
    auto pp = prime_power(q);
    if (!pp) throw Error(ErrorKind::NonPrime, std::to_string(q) + " is not a prime power");
    if (n < 1) throw Error(ErrorKind::OutOfRange, "n >= 1");
    auto v = is_desirable(n, e, q);
    if (!v.is_pp) {
        std::ostringstream os;
        os << "(" << n << "," << e << ";" << q << ") is not desirable";
        if (v.witness) os << ": points " << v.witness->first << " and " << v.witness->second << " collide";
        throw Error(ErrorKind::NotDesirable, os.str());
    }
    CatalogRow r;
    r.q = q;
    r.e = e;
    const BigInt c = coset_canonical_big(n, q, pp->first, e);
    if (c > BigInt(std::numeric_limits<std::uint64_t>::max()))
        throw Error(ErrorKind::OutOfRange, "canonical index beyond 64 bits");
    r.n = static_cast<std::uint64_t>(c);
    r.digits = digit_string(r.n, q);
    r.desirable = true;
    r.categories = categories_of(n, e, q);
    return r;
}

} // namespace gnq
