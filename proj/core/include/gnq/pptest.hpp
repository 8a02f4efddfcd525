#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>

#include "gnq/bigint.hpp"
#include "gnq/ext_field.hpp"
#include "gnq/gpoly.hpp"
#include "gnq/poly.hpp"

namespace gnq {

using PointFn = std::function<std::uint64_t(std::uint64_t)>;

struct Verdict {
    bool is_pp = true;
    // two point indices with equal image, first collision in enumeration order
    std::optional<std::pair<std::uint64_t, std::uint64_t>> witness;
    std::uint64_t evals_used = 0;

    static Verdict pp(std::uint64_t evals) { return Verdict{true, std::nullopt, evals}; }
    // re-evaluates f at both points; throws std::logic_error if they do not collide
    static Verdict collision(const PointFn& f, std::uint64_t w1, std::uint64_t w2, std::uint64_t evals);
};

// points are 0..size-1, images must lie in 0..size-1
Verdict is_permutation(const PointFn& f, std::uint64_t size);
Verdict is_permutation(const ExtField& K, const std::function<Elem(const Elem&)>& f);

// f restricted to {x : in(x)}; NotClosed if some image leaves the subset
Verdict permutes_subset(const ExtField& K, const std::function<Elem(const Elem&)>& f,
                        const std::function<bool(const Elem&)>& in);

// coefficient of x^{Q-1} in f^k mod x^Q - x
std::uint8_t hermite_coefficient(const BaseField& F, const Poly& f, const BigInt& k, std::uint64_t Q);

// is g_{n,q} a permutation of F_{q^e}; n >= 1
Verdict is_desirable(const BigInt& n, unsigned e, unsigned q);
Verdict is_desirable(const GEvaluator& ev, const BigInt& n);

// reusable scan buffers for many tests against one evaluator
class DesirableScanner {
public:
    explicit DesirableScanner(const GEvaluator& ev);
    // digits as from index_digits
    bool test(const unsigned* digits);
    Verdict verdict(const BigInt& n);
    std::uint64_t evals() const { return evals_; }

private:
    const GEvaluator& ev_;
    std::vector<std::uint32_t> stamp_;
    std::vector<std::uint64_t> first_;
    std::vector<std::uint8_t> scratch_;
    std::uint32_t round_ = 0;
    std::uint64_t evals_ = 0;
};

} // namespace gnq
