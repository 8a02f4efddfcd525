#include "gnq/gpoly.hpp"

#include <algorithm>
#include <cstring>
#include <map>

#include "gnq/digits.hpp"
#include "gnq/error.hpp"

namespace gnq {

GContext::GContext(std::shared_ptr<const FieldTower> tower) : tower_(std::move(tower)) {
    period_ = ipow(BigInt(tower_->q()), tower_->p() * tower_->e()) - 1;
}

GContext GContext::make(unsigned q, unsigned e) {
    auto pp = prime_power(q);
    if (!pp) throw Error(ErrorKind::NonPrime, std::to_string(q) + " is not a prime power");
    return GContext(FieldTower::make(pp->first, pp->second, e));
}

Elem GContext::as_solution(const Elem& y) const {
    const std::uint64_t key = field().index(y);
    {
        std::lock_guard<std::mutex> lock(cache_->mu);
        auto it = cache_->map.find(key);
        if (it != cache_->map.end()) return it->second;
    }
    Elem x = tower_->solve_artin_schreier(y);
    std::lock_guard<std::mutex> lock(cache_->mu);
    cache_->map[key] = x;
    return x;
}

BigInt g_index(const BigInt& m, const BigInt& period) {
    if (m >= 0) return m;
    return dagger_mod(m, period);
}

namespace {

using TPoly = std::vector<Elem>; // coefficients in F_{q^e}

// fold w down to degree < q using t^q = t + y
void reduce(const ExtField& K, TPoly& w, unsigned q, const Elem& y) {
    Elem tmp;
    for (std::size_t k = w.size(); k-- > q;) {
        if (K.is_zero(w[k])) continue;
        K.add_into(w[k - q + 1], w[k]);
        K.mul_into(tmp, w[k], y);
        K.add_into(w[k - q], tmp);
    }
    w.resize(q);
}

} // namespace

// t^n mod (t^q - t - y) by p-ary powering: r -> r^p is t^i -> t^{pi} on Frobenius-twisted
// coefficients, then a shift by the next digit
Elem eval_g(const BigInt& n, const GContext& ctx, const Elem& y) {
    if (n < 0) throw Error(ErrorKind::OutOfRange, "eval_g needs n >= 0");
    const ExtField& K = ctx.field();
    const unsigned q = ctx.q();
    const unsigned p = ctx.p();
    const bool prime = q == p;
    const auto dg = digits(n, p).d;
    TPoly r(q, K.zero());
    r[0] = K.one();
    TPoly w;
    for (std::size_t i = dg.size(); i-- > 0;) {
        const unsigned d = dg[i];
        w.assign(p * (q - 1) + 1 + d, K.zero());
        for (unsigned j = 0; j < q; ++j) {
            if (K.is_zero(r[j])) continue;
            w[p * j + d] = prime ? K.frob(r[j]) : K.pow(r[j], std::uint64_t(p));
        }
        reduce(K, w, q, y);
        r.swap(w);
    }
    return K.neg(r[q - 1]);
}

Elem eval_g_functional(const BigInt& n, const GContext& ctx, const Elem& y) {
    if (n < 0) throw Error(ErrorKind::OutOfRange, "eval_g_functional needs n >= 0");
    const FieldTower& T = ctx.tower();
    const ExtField& K = T.big();
    const BaseField& F = T.base();
    const unsigned q = ctx.q(), p = ctx.p(), d = K.degree();
    const Elem x = ctx.as_solution(y);

    // (x + a)^n = prod_j (x^{q^j} + a)^{n_j}; each small power is expanded binomially so the
    // powers of x^{q^j} are shared by every a
    const auto nd = digits(n, q).d;
    unsigned top = 0;
    for (auto v : nd) top = std::max(top, v);
    std::vector<std::vector<std::uint8_t>> binom(top + 1);
    for (unsigned k = 0; k <= top; ++k) {
        binom[k].assign(k + 1, 1);
        for (unsigned i = 1; i < k; ++i) binom[k][i] = static_cast<std::uint8_t>((binom[k - 1][i - 1] + binom[k - 1][i]) % p);
    }
    std::vector<std::vector<std::uint8_t>> apow(q, std::vector<std::uint8_t>(top + 1, 1)); // a^m, 0^0 = 1
    for (unsigned av = 0; av < q; ++av)
        for (unsigned m = 1; m <= top; ++m) apow[av][m] = F.mul(apow[av][m - 1], static_cast<std::uint8_t>(av));

    std::vector<Elem> prod(q, K.one());
    std::vector<Elem> P;
    Elem X = x, f;
    for (std::size_t j = 0; j < nd.size(); ++j) {
        if (j) X = K.frob(X);
        const unsigned k = nd[j];
        if (!k) continue;
        P.assign(k + 1, K.one());
        for (unsigned i = 1; i <= k; ++i) K.mul_into(P[i], P[i - 1], X);
        for (unsigned av = 0; av < q; ++av) {
            f = K.zero();
            for (unsigned i = 0; i <= k; ++i) {
                const std::uint8_t c = F.mul(binom[k][i], apow[av][k - i]);
                if (!c) continue;
                const auto* row = F.mul_row(c);
                for (unsigned t = 0; t < d; ++t) f[t] = F.add(f[t], row[P[i][t]]);
            }
            K.mul_into(prod[av], prod[av], f);
        }
    }
    Elem sum = K.zero();
    for (auto& v : prod) K.add_into(sum, v);
    auto back = T.project(sum);
    if (!back) throw Error(ErrorKind::NoSolution, "functional sum left F_{q^e}");
    return *back;
}

Poly g_symbolic(const BigInt& n, unsigned q, unsigned e, std::uint64_t bound) {
    if (n < 0) throw Error(ErrorKind::OutOfRange, "g_symbolic needs n >= 0");
    if (n > bound) throw Error(ErrorKind::BoundExceeded, "n = " + n.str() + " exceeds bound " + std::to_string(bound));
    auto pp = prime_power(q);
    if (!pp) throw Error(ErrorKind::NonPrime, std::to_string(q) + " is not a prime power");
    const unsigned p = pp->first;
    const std::uint64_t N = ipow_u64(q, e);
    if (N > (std::uint64_t(1) << 24)) throw Error(ErrorKind::SizeBudgetExceeded, "q^e too large for g_symbolic");
    const std::uint64_t nn = static_cast<std::uint64_t>(n);
    if (nn < q - 1) return {};
    // ring of the last q polynomials g_{k-q} .. g_{k-1}, each N coefficients
    std::vector<std::vector<std::uint8_t>> ring(q, std::vector<std::uint8_t>(N, 0));
    auto slot = [&](std::uint64_t k) -> std::vector<std::uint8_t>& { return ring[k % q]; };
    slot(q - 1).assign(N, 0);
    slot(q - 1)[0] = static_cast<std::uint8_t>(p - 1);
    for (std::uint64_t k = q; k <= nn; ++k) {
        // g_k = g_{k-q+1} + x g_{k-q}; slot(k) currently holds g_{k-q}
        std::vector<std::uint8_t>& cur = slot(k);
        const std::vector<std::uint8_t>& prev = slot(k - q + 1);
        std::vector<std::uint8_t> shifted(N, 0);
        for (std::uint64_t j = 0; j + 1 < N; ++j) shifted[j + 1] = cur[j];
        if (N > 1) shifted[1] = static_cast<std::uint8_t>((shifted[1] + cur[N - 1]) % p);
        for (std::uint64_t j = 0; j < N; ++j) shifted[j] = static_cast<std::uint8_t>((shifted[j] + prev[j]) % p);
        cur.swap(shifted);
    }
    Poly out(slot(nn).begin(), slot(nn).end());
    trim(out);
    return out;
}

Elem eval_poly_fp(const ExtField& K, const Poly& f, const Elem& y) {
    Elem r = K.zero();
    for (std::size_t i = f.size(); i-- > 0;) {
        K.mul_into(r, r, y);
        r[0] = K.base().add(r[0], f[i]);
    }
    return r;
}

std::uint8_t a_coeff(const BigInt& n, unsigned q) {
    if (n < 0) throw Error(ErrorKind::OutOfRange, "a_coeff needs n >= 0");
    auto pp = prime_power(q);
    if (!pp) throw Error(ErrorKind::NonPrime, std::to_string(q) + " is not a prime power");
    const unsigned p = pp->first;
    if (n <= 1000000) {
        const std::uint64_t nn = static_cast<std::uint64_t>(n);
        if (nn < q - 1) return 0;
        std::vector<std::uint8_t> ring(q, 0);
        ring[(q - 1) % q] = static_cast<std::uint8_t>(p - 1);
        for (std::uint64_t k = q; k <= nn; ++k) {
            // a_k = a_{k-q+1} + a_{k-q}
            ring[k % q] = static_cast<std::uint8_t>((ring[(k - q + 1) % q] + ring[k % q]) % p);
        }
        return ring[nn % q];
    }
    // t^n mod (t^q - t - 1) over F_p
    auto Fp = BaseField::get(p);
    Poly m(q + 1, 0);
    m[q] = 1;
    m[1] = static_cast<std::uint8_t>(p - 1);
    m[0] = static_cast<std::uint8_t>(p - 1);
    Poly r = poly_pow_mod(*Fp, Poly{0, 1}, n, m);
    std::uint8_t c = r.size() > q - 1 ? r[q - 1] : 0;
    return Fp->neg(c);
}

Elem eval_g_qab(unsigned a, unsigned b, const GContext& ctx, const Elem& y) {
    if (!(b < a && a < ctx.pe()))
        throw Error(ErrorKind::BadRange, "need 0 <= b < a < pe, got a=" + std::to_string(a) + " b=" + std::to_string(b));
    const ExtField& K = ctx.field();
    const unsigned q = ctx.q();
    if (q == 2 && a == 1 && b == 0) return K.zero(); // n = 0
    if (K.is_zero(y)) {
        // g_n(0) = -1 iff (q-1) | n; here n = -1 mod (q-1)
        return q == 2 ? K.neg(K.one()) : K.zero();
    }
    const Elem yinv = K.inv(y);
    const Elem Sb = K.S(y, b);
    const Elem Sab = K.frob(K.S(y, a - b), b);
    Elem c = K.pow(Sb, std::uint64_t(q - 1));
    c[0] = K.base().sub(c[0], 1);
    const Elem den_inv = K.mul(K.frob(yinv, b), yinv); // y^{-(q^b + 1)}
    Elem r = K.neg(yinv);
    return K.sub(r, K.mul(K.mul(c, Sab), den_inv));
}

BigInt split_index(const BigInt& alpha, const BigInt& beta, unsigned p, unsigned e) {
    BigInt rep = 0;
    for (unsigned i = 0; i < p; ++i) rep += ipow(BigInt(p), i * e);
    return alpha * rep + beta;
}

Elem eval_g_split(const BigInt& alpha, const BigInt& beta, const GContext& ctx, const Elem& y) {
    if (ctx.tower().s() != 1) throw Error(ErrorKind::NotPrimeQ, "trace split needs q = p");
    const ExtField& K = ctx.field();
    const unsigned p = ctx.p();
    if (K.trace(y) == 0) return eval_g(g_index(alpha * p + beta, ctx.period()), ctx, y);
    return K.mul(K.pow(y, alpha), eval_g(g_index(beta, ctx.period()), ctx, y));
}

// ---------------------------------------------------------------------------

GEvaluator::GEvaluator(const GContext& ctx) : ctx_(ctx), q_(ctx.q()), e_(ctx.e()), pe_(ctx.pe()) {
    const ExtField& K = ctx.field();
    if (K.order() > BigInt(std::uint64_t(1) << 22)) return; // table too large, eval() still works
    npts_ = K.size();
    const std::size_t stride = static_cast<std::size_t>(pe_ + 1) * e_;
    table_.resize(npts_ * stride);
    for (std::uint64_t i = 0; i < npts_; ++i) {
        const Elem y = K.element(i);
        std::uint8_t* row = &table_[i * stride];
        std::memcpy(row, y.data(), e_);
        Elem acc = K.zero(), c = y;
        for (unsigned j = 0; j < pe_; ++j) {
            std::memcpy(row + (j + 1) * e_, acc.data(), e_);
            K.add_into(acc, c);
            c = K.frob(c);
        }
    }
}

std::shared_ptr<const GEvaluator> GEvaluator::shared(unsigned q, unsigned e) {
    static std::mutex mu;
    static std::map<std::pair<unsigned, unsigned>, std::shared_ptr<const GEvaluator>> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find({q, e});
        if (it != cache.end()) return it->second;
    }
    auto ev = std::make_shared<const GEvaluator>(GContext::make(q, e));
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(std::make_pair(q, e), ev).first->second;
}

std::vector<unsigned> GEvaluator::index_digits(const BigInt& n) const {
    if (n < 0) throw Error(ErrorKind::OutOfRange, "negative index");
    if (n == 0) return std::vector<unsigned>(pe_, 0);
    return digits_fixed(dagger_mod(n, ctx_.period()), q_, pe_);
}

void GEvaluator::product(const unsigned* digits, const std::uint8_t* S, const std::uint8_t* y,
                         std::uint8_t* u) const {
    const ExtField& K = ctx_.field();
    const BaseField& F = K.base();
    const unsigned q = q_, e = e_;
    std::memset(u, 0, static_cast<std::size_t>(q) * e);
    u[0] = 1;
    std::uint8_t last[64], tmp[64];
    for (unsigned j = 0; j < pe_; ++j) {
        const std::uint8_t* c = S + static_cast<std::size_t>(j) * e;
        for (unsigned k = 0; k < digits[j]; ++k) {
            // u <- u * (t + c)
            std::memcpy(last, u + static_cast<std::size_t>(q - 1) * e, e);
            for (unsigned i = q - 1; i >= 2; --i) {
                std::uint8_t* ui = u + static_cast<std::size_t>(i) * e;
                K.mul_raw(tmp, ui, c);
                const std::uint8_t* um = ui - e;
                for (unsigned z = 0; z < e; ++z) ui[z] = F.add(um[z], tmp[z]);
            }
            std::uint8_t* u1 = u + e;
            K.mul_raw(tmp, u1, c);
            for (unsigned z = 0; z < e; ++z) u1[z] = F.add(F.add(u[z], tmp[z]), last[z]);
            K.mul_raw(tmp, u, c);
            std::uint8_t ylast[64];
            K.mul_raw(ylast, y, last);
            for (unsigned z = 0; z < e; ++z) u[z] = F.add(tmp[z], ylast[z]);
        }
    }
}

std::uint64_t GEvaluator::eval_at(const unsigned* digits, std::uint64_t yi, std::uint8_t* scratch) const {
    const std::size_t stride = static_cast<std::size_t>(pe_ + 1) * e_;
    const std::uint8_t* row = &table_[yi * stride];
    product(digits, row + e_, row, scratch);
    const ExtField& K = ctx_.field();
    const std::uint8_t* top = scratch + static_cast<std::size_t>(q_ - 1) * e_;
    std::uint64_t v = 0;
    for (unsigned z = 0; z < e_; ++z) v = v * q_ + K.base().neg(top[z]);
    return v;
}

Elem GEvaluator::eval(const BigInt& n, const Elem& y) const {
    const ExtField& K = ctx_.field();
    auto d = index_digits(n);
    std::vector<std::uint8_t> S(static_cast<std::size_t>(pe_) * e_);
    Elem acc = K.zero(), c = y;
    for (unsigned j = 0; j < pe_; ++j) {
        std::memcpy(&S[static_cast<std::size_t>(j) * e_], acc.data(), e_);
        K.add_into(acc, c);
        c = K.frob(c);
    }
    std::vector<std::uint8_t> u(static_cast<std::size_t>(q_) * e_);
    product(d.data(), S.data(), y.data(), u.data());
    Elem r(e_);
    for (unsigned z = 0; z < e_; ++z) r[z] = K.base().neg(u[static_cast<std::size_t>(q_ - 1) * e_ + z]);
    return r;
}

} // namespace gnq
