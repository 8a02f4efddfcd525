#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "gnq/base_field.hpp"
#include "gnq/ext_field.hpp"

namespace gnq {

enum class Level { Base, Ext, Big };

// largest p*e for which the top field F_{q^{pe}} is built
inline constexpr unsigned kMaxTopDegree = 64;

// F_p < F_q < F_{q^e} < F_{q^{pe}}; the top field is built on first use.
class FieldTower {
public:
    static std::shared_ptr<const FieldTower> make(unsigned p, unsigned s, unsigned e);
    FieldTower(unsigned p, unsigned s, unsigned e);

    unsigned p() const { return p_; }
    unsigned s() const { return s_; }
    unsigned e() const { return e_; }
    unsigned q() const { return F_->q(); }

    const BaseField& base() const { return *F_; }
    std::shared_ptr<const BaseField> base_ptr() const { return F_; }
    const ExtField& ext() const { return E_; }
    const ExtField& big() const;

    // F_{q^e} -> F_{q^{pe}} and back (nullopt when x is outside the image)
    Elem embed(const Elem& y) const;
    std::optional<Elem> project(const Elem& x) const;

    std::uint8_t trace(const Elem& y) const;
    std::uint8_t norm(const Elem& y) const;
    // S_a on F_{q^e}; a < 0 means S_{pe+a}
    Elem eval_S(const Elem& y, long long a) const;
    Elem eval_S_big(const Elem& x, long long a) const;

    // x in F_{q^{pe}} with x^q - x = y
    Elem solve_artin_schreier(const Elem& y) const;

private:
    struct Top;
    void build_top() const;
    void check_level(const Elem& y, Level lv) const;

    unsigned p_, s_, e_;
    std::shared_ptr<const BaseField> F_;
    ExtField E_;
    mutable std::once_flag top_once_;
    mutable std::shared_ptr<const Top> top_;
};

} // namespace gnq
