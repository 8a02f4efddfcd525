#include "gnq/pptest.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "gnq/error.hpp"

namespace gnq {

Verdict Verdict::collision(const PointFn& f, std::uint64_t w1, std::uint64_t w2, std::uint64_t evals) {
    if (w1 == w2 || f(w1) != f(w2)) throw std::logic_error("reported witness does not collide");
    return Verdict{false, std::make_pair(w1, w2), evals};
}

Verdict is_permutation(const PointFn& f, std::uint64_t size) {
    std::vector<std::uint64_t> who(size, UINT64_MAX);
    for (std::uint64_t i = 0; i < size; ++i) {
        const std::uint64_t v = f(i);
        if (v >= size) throw Error(ErrorKind::OutOfRange, "image outside the domain");
        if (who[v] != UINT64_MAX) return Verdict::collision(f, who[v], i, i + 1);
        who[v] = i;
    }
    return Verdict::pp(size);
}

Verdict is_permutation(const ExtField& K, const std::function<Elem(const Elem&)>& f) {
    PointFn g = [&](std::uint64_t i) { return K.index(f(K.element(i))); };
    return is_permutation(g, K.size());
}

Verdict permutes_subset(const ExtField& K, const std::function<Elem(const Elem&)>& f,
                        const std::function<bool(const Elem&)>& in) {
    const std::uint64_t N = K.size();
    std::vector<std::uint64_t> who(N, UINT64_MAX);
    std::uint64_t evals = 0;
    PointFn g = [&](std::uint64_t i) { return K.index(f(K.element(i))); };
    for (std::uint64_t i = 0; i < N; ++i) {
        const Elem x = K.element(i);
        if (!in(x)) continue;
        const Elem fx = f(x);
        ++evals;
        if (!in(fx))
            throw Error(ErrorKind::NotClosed, "f(" + format_point(K, x) + ") = " + format_point(K, fx) + " leaves the subset");
        const std::uint64_t v = K.index(fx);
        if (who[v] != UINT64_MAX) return Verdict::collision(g, who[v], i, evals);
        who[v] = i;
    }
    return Verdict::pp(evals);
}

std::uint8_t hermite_coefficient(const BaseField& F, const Poly& f, const BigInt& k, std::uint64_t Q) {
    Poly r = pow_mod_cyclic(F, f, k, Q);
    return r.size() > Q - 1 ? r[Q - 1] : 0;
}

Verdict is_desirable(const BigInt& n, unsigned e, unsigned q) {
    if (n < 1) throw Error(ErrorKind::OutOfRange, "desirability needs n >= 1");
    return is_desirable(*GEvaluator::shared(q, e), n);
}

Verdict is_desirable(const GEvaluator& ev, const BigInt& n) {
    if (n < 1) throw Error(ErrorKind::OutOfRange, "desirability needs n >= 1");
    if (ev.points() == 0) {
        // no table: evaluate pointwise
        const ExtField& K = ev.context().field();
        return is_permutation(K, [&](const Elem& y) { return ev.eval(n, y); });
    }
    DesirableScanner sc(ev);
    return sc.verdict(n);
}

DesirableScanner::DesirableScanner(const GEvaluator& ev)
    : ev_(ev), stamp_(ev.points(), 0), first_(ev.points(), 0),
      scratch_(static_cast<std::size_t>(ev.context().q()) * ev.context().e()) {}

bool DesirableScanner::test(const unsigned* digits) {
    if (++round_ == 0) {
        std::fill(stamp_.begin(), stamp_.end(), 0);
        round_ = 1;
    }
    const std::uint64_t N = stamp_.size();
    for (std::uint64_t i = 0; i < N; ++i) {
        const std::uint64_t v = ev_.eval_at(digits, i, scratch_.data());
        ++evals_;
        if (stamp_[v] == round_) return false;
        stamp_[v] = round_;
        first_[v] = i;
    }
    return true;
}

Verdict DesirableScanner::verdict(const BigInt& n) {
    const auto d = ev_.index_digits(n);
    if (++round_ == 0) {
        std::fill(stamp_.begin(), stamp_.end(), 0);
        round_ = 1;
    }
    const std::uint64_t N = stamp_.size();
    PointFn f = [&](std::uint64_t i) { return ev_.eval_at(d.data(), i, scratch_.data()); };
    for (std::uint64_t i = 0; i < N; ++i) {
        const std::uint64_t v = f(i);
        ++evals_;
        if (stamp_[v] == round_) return Verdict::collision(f, first_[v], i, i + 1);
        stamp_[v] = round_;
        first_[v] = i;
    }
    return Verdict::pp(N);
}

} // namespace gnq
