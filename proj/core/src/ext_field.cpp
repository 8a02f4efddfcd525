#include "gnq/ext_field.hpp"

#include <sstream>

#include "gnq/error.hpp"

namespace gnq {

ExtField::ExtField(std::shared_ptr<const BaseField> F, unsigned d) : F_(std::move(F)), d_(d) {
    if (d == 0) throw Error(ErrorKind::OutOfRange, "extension degree must be positive");
    mod_ = smallest_irreducible(*F_, d);
    init();
}

ExtField::ExtField(std::shared_ptr<const BaseField> F, Poly modulus)
    : F_(std::move(F)), d_(static_cast<unsigned>(gnq::degree(modulus))), mod_(std::move(modulus)) {
    if (!is_irreducible(*F_, mod_)) throw Error(ErrorKind::DataError, "modulus is not irreducible");
    mod_ = poly_monic(*F_, mod_);
    init();
}

void ExtField::init() {
    neg_tail_.resize(d_);
    for (unsigned i = 0; i < d_; ++i) neg_tail_[i] = F_->neg(mod_[i]);
    tail_idx_.clear();
    for (unsigned i = 0; i < d_; ++i)
        if (neg_tail_[i]) tail_idx_.push_back(i);
    frob_cols_.resize(d_);
    Poly xq = poly_pow_mod(*F_, Poly{0, 1}, BigInt(F_->q()), mod_);
    Poly cur{1};
    for (unsigned j = 0; j < d_; ++j) {
        Elem col(d_, 0);
        for (std::size_t i = 0; i < cur.size(); ++i) col[i] = cur[i];
        frob_cols_[j] = col;
        cur = poly_mod(*F_, poly_mul(*F_, cur, xq), mod_);
    }
    tr_basis_.resize(d_);
    for (unsigned j = 0; j < d_; ++j) {
        Elem b = zero();
        b[j] = 1;
        Elem acc = b;
        for (unsigned k = 1; k < d_; ++k) {
            b = frob(b);
            add_into(acc, b);
        }
        tr_basis_[j] = acc[0];
    }
}

BigInt ExtField::order() const { return ipow(BigInt(F_->q()), d_); }

std::uint64_t ExtField::size() const {
    BigInt o = order();
    if (o > BigInt(std::uint64_t(1) << 32)) throw Error(ErrorKind::SizeBudgetExceeded, "field too large to enumerate");
    return static_cast<std::uint64_t>(o);
}

Elem ExtField::one() const {
    Elem r = zero();
    r[0] = 1;
    return r;
}

Elem ExtField::gen() const {
    if (d_ == 1) {
        // x is a root of the degree-1 modulus x + m_0
        return from_base(neg_tail_[0]);
    }
    Elem r = zero();
    r[1] = 1;
    return r;
}

Elem ExtField::from_base(std::uint8_t c) const {
    Elem r = zero();
    r[0] = c;
    return r;
}

bool ExtField::is_zero(const Elem& a) const {
    for (auto c : a)
        if (c) return false;
    return true;
}

bool ExtField::in_base(const Elem& a) const {
    for (unsigned i = 1; i < d_; ++i)
        if (a[i]) return false;
    return true;
}

Elem ExtField::add(const Elem& a, const Elem& b) const {
    Elem r(d_);
    for (unsigned i = 0; i < d_; ++i) r[i] = F_->add(a[i], b[i]);
    return r;
}

void ExtField::add_into(Elem& a, const Elem& b) const {
    for (unsigned i = 0; i < d_; ++i) a[i] = F_->add(a[i], b[i]);
}

Elem ExtField::sub(const Elem& a, const Elem& b) const {
    Elem r(d_);
    for (unsigned i = 0; i < d_; ++i) r[i] = F_->sub(a[i], b[i]);
    return r;
}

Elem ExtField::neg(const Elem& a) const {
    Elem r(d_);
    for (unsigned i = 0; i < d_; ++i) r[i] = F_->neg(a[i]);
    return r;
}

Elem ExtField::scale(const Elem& a, std::uint8_t c) const {
    Elem r(d_);
    const auto* row = F_->mul_row(c);
    for (unsigned i = 0; i < d_; ++i) r[i] = row[a[i]];
    return r;
}

void ExtField::mul_raw(std::uint8_t* out, const std::uint8_t* a, const std::uint8_t* b) const {
    const unsigned d = d_;
    const bool square = a == b;
    if (F_->s() == 1) {
        // prime field: integer accumulation, one reduction per coefficient
        const std::uint32_t p = F_->p();
        std::uint32_t stack[2 * 64];
        std::vector<std::uint32_t> heap;
        std::uint32_t* buf = stack;
        if (d > 64) {
            heap.resize(2 * d);
            buf = heap.data();
        }
        for (unsigned k = 0; k + 1 < 2 * d; ++k) buf[k] = 0;
        if (square) {
            for (unsigned i = 0; i < d; ++i) {
                const std::uint32_t ai = a[i];
                if (!ai) continue;
                buf[2 * i] += ai * ai;
                const std::uint32_t a2 = 2 * ai;
                for (unsigned j = i + 1; j < d; ++j) buf[i + j] += a2 * a[j];
            }
        } else {
            for (unsigned i = 0; i < d; ++i) {
                const std::uint32_t ai = a[i];
                if (!ai) continue;
                for (unsigned j = 0; j < d; ++j) buf[i + j] += ai * b[j];
            }
        }
        const std::size_t w = tail_idx_.size();
        for (unsigned k = 2 * d - 1; k-- > d;) {
            const std::uint32_t c = buf[k] % p;
            if (!c) continue;
            const unsigned base = k - d;
            for (std::size_t t = 0; t < w; ++t) buf[base + tail_idx_[t]] += c * neg_tail_[tail_idx_[t]];
        }
        for (unsigned i = 0; i < d; ++i) out[i] = static_cast<std::uint8_t>(buf[i] % p);
        return;
    }
    std::uint8_t stack[2 * 64];
    std::vector<std::uint8_t> heap;
    std::uint8_t* buf = stack;
    if (d > 64) {
        heap.resize(2 * d);
        buf = heap.data();
    }
    for (unsigned k = 0; k + 1 < 2 * d; ++k) buf[k] = 0;
    for (unsigned i = 0; i < d; ++i) {
        if (!a[i]) continue;
        const auto* row = F_->mul_row(a[i]);
        for (unsigned j = 0; j < d; ++j) buf[i + j] = F_->add(buf[i + j], row[b[j]]);
    }
    for (unsigned k = 2 * d - 1; k-- > d;) {
        const std::uint8_t c = buf[k];
        if (!c) continue;
        const auto* row = F_->mul_row(c);
        const unsigned base = k - d;
        for (auto i : tail_idx_) buf[base + i] = F_->add(buf[base + i], row[neg_tail_[i]]);
    }
    for (unsigned i = 0; i < d; ++i) out[i] = buf[i];
}

void ExtField::mul_into(Elem& out, const Elem& a, const Elem& b) const {
    std::uint8_t tmp[64];
    std::vector<std::uint8_t> heap;
    std::uint8_t* t = tmp;
    if (d_ > 64) {
        heap.resize(d_);
        t = heap.data();
    }
    mul_raw(t, a.data(), b.data());
    out.resize(d_);
    for (unsigned i = 0; i < d_; ++i) out[i] = t[i];
}

Elem ExtField::mul(const Elem& a, const Elem& b) const {
    Elem r;
    mul_into(r, a, b);
    return r;
}

Elem ExtField::pow(const Elem& a, const BigInt& k) const {
    if (k < 0) return pow(inv(a), BigInt(-k));
    Elem r = one();
    const std::size_t bits = k == 0 ? 0 : msb(k) + 1;
    for (std::size_t i = bits; i-- > 0;) {
        mul_into(r, r, r);
        if (bit_test(k, static_cast<unsigned>(i))) mul_into(r, r, a);
    }
    return r;
}

Elem ExtField::pow(const Elem& a, std::uint64_t k) const {
    Elem r = one(), b = a;
    while (k) {
        if (k & 1) mul_into(r, r, b);
        k >>= 1;
        if (k) mul_into(b, b, b);
    }
    return r;
}

Elem ExtField::inv(const Elem& a) const {
    if (is_zero(a)) throw Error(ErrorKind::OutOfRange, "inverse of zero");
    return pow(a, order() - 2);
}

Elem ExtField::frob(const Elem& a) const {
    Elem r = zero();
    for (unsigned j = 0; j < d_; ++j) {
        if (!a[j]) continue;
        const auto* row = F_->mul_row(a[j]);
        const Elem& col = frob_cols_[j];
        for (unsigned i = 0; i < d_; ++i) r[i] = F_->add(r[i], row[col[i]]);
    }
    return r;
}

Elem ExtField::frob(const Elem& a, unsigned k) const {
    Elem r = a;
    for (unsigned i = 0; i < k % d_; ++i) r = frob(r);
    return r;
}

std::uint8_t ExtField::trace(const Elem& a) const {
    std::uint8_t t = 0;
    for (unsigned j = 0; j < d_; ++j) t = F_->add(t, F_->mul(a[j], tr_basis_[j]));
    return t;
}

std::uint8_t ExtField::norm(const Elem& a) const {
    Elem r = a, c = a;
    for (unsigned k = 1; k < d_; ++k) {
        c = frob(c);
        mul_into(r, r, c);
    }
    return r[0];
}

Elem ExtField::S(const Elem& a, unsigned k) const {
    // S_k = (k div d) Tr + S_{k mod d}
    Elem r = zero();
    Elem c = a;
    for (unsigned i = 0; i < k % d_; ++i) {
        add_into(r, c);
        c = frob(c);
    }
    const unsigned full = k / d_;
    if (full) {
        std::uint8_t t = F_->mul(trace(a), F_->from_int(full));
        r[0] = F_->add(r[0], t);
    }
    return r;
}

std::uint64_t ExtField::index(const Elem& a) const {
    std::uint64_t v = 0;
    for (unsigned i = 0; i < d_; ++i) v = v * F_->q() + a[i];
    return v;
}

Elem ExtField::element(std::uint64_t idx) const {
    Elem r(d_);
    for (unsigned i = d_; i-- > 0;) {
        r[i] = static_cast<std::uint8_t>(idx % F_->q());
        idx /= F_->q();
    }
    return r;
}

std::string ExtField::to_string(const Elem& a) const { return format_point(*this, a); }

std::string format_point(const ExtField& K, const Elem& a) {
    const BaseField& F = K.base();
    std::vector<unsigned> fp;
    for (unsigned i = 0; i < K.degree(); ++i)
        for (unsigned c : F.coords(a[i])) fp.push_back(c);
    std::ostringstream os;
    const char* hex = "0123456789abcdef";
    for (std::size_t i = 0; i < fp.size(); ++i) {
        if (F.p() <= 16)
            os << hex[fp[i]];
        else
            os << (i ? "." : "") << fp[i];
    }
    return os.str();
}

Elem parse_point(const ExtField& K, const std::string& s) {
    const BaseField& F = K.base();
    std::vector<unsigned> fp;
    if (F.p() <= 16) {
        for (char ch : s) {
            unsigned v;
            if (ch >= '0' && ch <= '9') v = ch - '0';
            else if (ch >= 'a' && ch <= 'f') v = ch - 'a' + 10;
            else if (ch >= 'A' && ch <= 'F') v = ch - 'A' + 10;
            else throw Error(ErrorKind::Usage, "bad digit in point '" + s + "'");
            fp.push_back(v);
        }
    } else {
        std::stringstream ss(s);
        std::string tok;
        while (std::getline(ss, tok, '.')) fp.push_back(static_cast<unsigned>(std::stoul(tok)));
    }
    const std::size_t need = static_cast<std::size_t>(K.degree()) * F.s();
    if (fp.size() > need) throw Error(ErrorKind::Usage, "point '" + s + "' has too many digits");
    fp.resize(need, 0);
    Elem r = K.zero();
    for (unsigned i = 0; i < K.degree(); ++i) {
        unsigned code = 0;
        for (unsigned j = F.s(); j-- > 0;) {
            unsigned v = fp[i * F.s() + j];
            if (v >= F.p()) throw Error(ErrorKind::Usage, "digit out of range in point '" + s + "'");
            code = code * F.p() + v;
        }
        r[i] = static_cast<std::uint8_t>(code);
    }
    return r;
}

} // namespace gnq
