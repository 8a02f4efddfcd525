#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "gnq/bigint.hpp"
#include "gnq/ext_field.hpp"
#include "gnq/poly.hpp"
#include "gnq/tower.hpp"

namespace gnq {

// Evaluation context for g_{n,q} on F_{q^e}.
class GContext {
public:
    explicit GContext(std::shared_ptr<const FieldTower> tower);
    static GContext make(unsigned q, unsigned e);

    const FieldTower& tower() const { return *tower_; }
    std::shared_ptr<const FieldTower> tower_ptr() const { return tower_; }
    const ExtField& field() const { return tower_->ext(); }
    unsigned q() const { return tower_->q(); }
    unsigned p() const { return tower_->p(); }
    unsigned e() const { return tower_->e(); }
    unsigned pe() const { return tower_->p() * tower_->e(); }
    // q^{pe} - 1, the period of n -> g_n for n >= 1
    const BigInt& period() const { return period_; }

    // Artin-Schreier solution, memoized
    Elem as_solution(const Elem& y) const;

private:
    std::shared_ptr<const FieldTower> tower_;
    BigInt period_;
    struct Cache {
        std::mutex mu;
        std::unordered_map<std::uint64_t, Elem> map;
    };
    std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

// index used for g_m: m >= 0 unchanged, negative m taken into [1, period]
BigInt g_index(const BigInt& m, const BigInt& period);

// -[t^{q-1}] (t^n mod t^q - t - y), powering over F_{q^e}[t] by base-p digits of n
Elem eval_g(const BigInt& n, const GContext& ctx, const Elem& y);
// sum over a in F_q of (x+a)^n with x^q - x = y
Elem eval_g_functional(const BigInt& n, const GContext& ctx, const Elem& y);
// g_{n,q} mod x^{q^e} - x over F_p, from the order-q recurrence
Poly g_symbolic(const BigInt& n, unsigned q, unsigned e, std::uint64_t bound = 1000000);
// evaluate an F_p polynomial at a point of F_{q^e}
Elem eval_poly_fp(const ExtField& K, const Poly& f, const Elem& y);
// coefficient a_n of -t^{q-1}/(1 - t^{q-1} - t^q), in F_p
std::uint8_t a_coeff(const BigInt& n, unsigned q);
// g_{q^a - q^b - 1} at y, 0 <= b < a < pe
Elem eval_g_qab(unsigned a, unsigned b, const GContext& ctx, const Elem& y);
// q = p only: g_{alpha(1 + p^e + .. + p^{(p-1)e}) + beta} through the trace split
Elem eval_g_split(const BigInt& alpha, const BigInt& beta, const GContext& ctx, const Elem& y);
BigInt split_index(const BigInt& alpha, const BigInt& beta, unsigned p, unsigned e);

// Digit-product evaluator. In F_{q^e}[t]/(t^q - t - y) one has t^{q^j} = t + S_j(y), so
// t^n is a product of linear factors read off the base-q digits of n.
class GEvaluator {
public:
    explicit GEvaluator(const GContext& ctx);
    // shared instance per (q, e)
    static std::shared_ptr<const GEvaluator> shared(unsigned q, unsigned e);

    const GContext& context() const { return ctx_; }
    std::uint64_t points() const { return npts_; }

    // base-q digits of the reduced index, pe of them
    std::vector<unsigned> index_digits(const BigInt& n) const;

    Elem eval(const BigInt& n, const Elem& y) const;
    // value index of g at point index yi, digits as from index_digits; scratch has q*e bytes
    std::uint64_t eval_at(const unsigned* digits, std::uint64_t yi, std::uint8_t* scratch) const;

private:
    void product(const unsigned* digits, const std::uint8_t* S, const std::uint8_t* y, std::uint8_t* u) const;

    GContext ctx_;
    unsigned q_, e_, pe_;
    std::uint64_t npts_ = 0;
    std::vector<std::uint8_t> table_; // per point: y then S_0..S_{pe-1}, each e bytes
};

} // namespace gnq
