#include "gnq/tower.hpp"

#include <map>
#include <tuple>

#include "gnq/error.hpp"
#include "linalg.hpp"

namespace gnq {

struct FieldTower::Top {
    explicit Top(std::shared_ptr<const BaseField> F, unsigned d) : big(std::move(F), d) {}
    ExtField big;
    std::vector<Elem> theta_pows; // theta^i, i < e, theta a root of the F_{q^e} modulus
    detail::Echelon proj;         // of the pe x e embedding matrix
    detail::Echelon as;           // of x -> x^q - x
};

namespace {
constexpr std::uint64_t kSubfieldScanBudget = std::uint64_t(1) << 20;
} // namespace

std::shared_ptr<const FieldTower> FieldTower::make(unsigned p, unsigned s, unsigned e) {
    static std::mutex mu;
    static std::map<std::tuple<unsigned, unsigned, unsigned>, std::shared_ptr<const FieldTower>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_tuple(p, s, e);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    auto t = std::make_shared<const FieldTower>(p, s, e);
    cache.emplace(key, t);
    return t;
}

namespace {
std::shared_ptr<const BaseField> checked_base(unsigned p, unsigned s, unsigned e) {
    if (!is_prime(p)) throw Error(ErrorKind::NonPrime, std::to_string(p) + " is not prime");
    if (s == 0 || e == 0) throw Error(ErrorKind::OutOfRange, "s and e must be positive");
    unsigned long long q = 1;
    for (unsigned i = 0; i < s; ++i) {
        q *= p;
        if (q > 256) throw Error(ErrorKind::SizeBudgetExceeded, "q exceeds 256");
    }
    return BaseField::get(static_cast<unsigned>(q));
}
} // namespace

FieldTower::FieldTower(unsigned p, unsigned s, unsigned e)
    : p_(p), s_(s), e_(e), F_(checked_base(p, s, e)), E_(F_, e) {}

const ExtField& FieldTower::big() const {
    build_top();
    return top_->big;
}

void FieldTower::build_top() const {
    if (static_cast<unsigned long long>(p_) * e_ > kMaxTopDegree)
        throw Error(ErrorKind::SizeBudgetExceeded, "top field degree p*e exceeds " + std::to_string(kMaxTopDegree));
    std::call_once(top_once_, [this] {
        const BaseField& F = *F_;
        const unsigned d = p_ * e_;
        auto top = std::make_shared<Top>(F_, d);
        const ExtField& K = top->big;

        // fixed field of Frob^e is the copy of F_{q^e}
        detail::Mat C(d, d);
        for (unsigned j = 0; j < d; ++j) {
            Elem b = K.zero();
            b[j] = 1;
            Elem img = K.frob(b, e_);
            for (unsigned i = 0; i < d; ++i) C.at(i, j) = F.sub(img[i], b[i]);
        }
        auto kb = detail::kernel(F, C);
        if (kb.size() != e_) throw Error(ErrorKind::NoSolution, "fixed field has wrong dimension");
        if (E_.order() > BigInt(kSubfieldScanBudget))
            throw Error(ErrorKind::SizeBudgetExceeded, "q^e too large to locate the embedding");
        const std::uint64_t cnt = E_.size();
        const Poly& m = E_.modulus();
        bool found = false;
        Elem theta;
        for (std::uint64_t idx = 0; idx < cnt && !found; ++idx) {
            std::uint64_t v = idx;
            Elem z = K.zero();
            for (unsigned k = 0; k < e_; ++k, v /= F.q()) {
                const std::uint8_t c = static_cast<std::uint8_t>(v % F.q());
                if (!c) continue;
                for (unsigned i = 0; i < d; ++i) z[i] = F.add(z[i], F.mul(c, kb[k][i]));
            }
            Elem acc = K.zero();
            for (std::size_t i = m.size(); i-- > 0;) {
                acc = K.mul(acc, z);
                acc[0] = F.add(acc[0], m[i]);
            }
            if (K.is_zero(acc)) {
                theta = z;
                found = true;
            }
        }
        if (!found) throw Error(ErrorKind::NoSolution, "no root of the F_{q^e} modulus in the top field");
        top->theta_pows.resize(e_);
        Elem cur = K.one();
        for (unsigned i = 0; i < e_; ++i) {
            top->theta_pows[i] = cur;
            cur = K.mul(cur, theta);
        }
        detail::Mat B(d, e_);
        for (unsigned i = 0; i < e_; ++i)
            for (unsigned r = 0; r < d; ++r) B.at(r, i) = top->theta_pows[i][r];
        top->proj = detail::echelon(F, B);

        detail::Mat A(d, d);
        for (unsigned j = 0; j < d; ++j) {
            Elem b = K.zero();
            b[j] = 1;
            Elem img = K.frob(b);
            for (unsigned i = 0; i < d; ++i) A.at(i, j) = F.sub(img[i], b[i]);
        }
        top->as = detail::echelon(F, A);
        top_ = std::move(top);
    });
}

void FieldTower::check_level(const Elem& y, Level lv) const {
    const unsigned want = lv == Level::Base ? 1 : lv == Level::Ext ? e_ : p_ * e_;
    if (y.size() != want)
        throw Error(ErrorKind::WrongLevel, "element has " + std::to_string(y.size()) + " coordinates, expected " +
                                               std::to_string(want));
}

Elem FieldTower::embed(const Elem& y) const {
    check_level(y, Level::Ext);
    build_top();
    const ExtField& K = top_->big;
    Elem r = K.zero();
    for (unsigned i = 0; i < e_; ++i) {
        if (!y[i]) continue;
        K.add_into(r, K.scale(top_->theta_pows[i], y[i]));
    }
    return r;
}

std::optional<Elem> FieldTower::project(const Elem& x) const {
    check_level(x, Level::Big);
    build_top();
    const BaseField& F = *F_;
    const auto& P = top_->proj;
    const unsigned d = p_ * e_;
    std::vector<std::uint8_t> z(d, 0);
    for (unsigned r = 0; r < d; ++r) {
        std::uint8_t acc = 0;
        for (unsigned c = 0; c < d; ++c) acc = F.add(acc, F.mul(P.T.at(r, c), x[c]));
        z[r] = acc;
    }
    for (unsigned r = static_cast<unsigned>(P.pivots.size()); r < d; ++r)
        if (z[r]) return std::nullopt;
    Elem y = E_.zero();
    for (unsigned r = 0; r < P.pivots.size(); ++r) y[P.pivots[r]] = z[r];
    return y;
}

std::uint8_t FieldTower::trace(const Elem& y) const {
    check_level(y, Level::Ext);
    return E_.trace(y);
}

std::uint8_t FieldTower::norm(const Elem& y) const {
    check_level(y, Level::Ext);
    return E_.norm(y);
}

Elem FieldTower::eval_S(const Elem& y, long long a) const {
    check_level(y, Level::Ext);
    const long long pe = static_cast<long long>(p_) * e_;
    if (a < -pe) throw Error(ErrorKind::OutOfRange, "S_a with a < -pe");
    if (a < 0) a += pe;
    return E_.S(y, static_cast<unsigned>(a));
}

Elem FieldTower::eval_S_big(const Elem& x, long long a) const {
    check_level(x, Level::Big);
    const long long pe = static_cast<long long>(p_) * e_;
    if (a < -pe) throw Error(ErrorKind::OutOfRange, "S_a with a < -pe");
    if (a < 0) a += pe;
    return big().S(x, static_cast<unsigned>(a));
}

Elem FieldTower::solve_artin_schreier(const Elem& y) const {
    check_level(y, Level::Ext);
    Elem Y = embed(y);
    const BaseField& F = *F_;
    const auto& S = top_->as;
    const unsigned d = p_ * e_;
    std::vector<std::uint8_t> z(d, 0);
    for (unsigned r = 0; r < d; ++r) {
        std::uint8_t acc = 0;
        for (unsigned c = 0; c < d; ++c) acc = F.add(acc, F.mul(S.T.at(r, c), Y[c]));
        z[r] = acc;
    }
    for (unsigned r = static_cast<unsigned>(S.pivots.size()); r < d; ++r)
        if (z[r]) throw Error(ErrorKind::NoSolution, "x^q - x = y has no solution in the top field");
    Elem x = top_->big.zero();
    for (unsigned r = 0; r < S.pivots.size(); ++r) x[S.pivots[r]] = z[r];
    return x;
}

} // namespace gnq
