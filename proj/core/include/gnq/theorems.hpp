#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gnq/bigint.hpp"
#include "gnq/pptest.hpp"

namespace gnq {

using Params = std::map<std::string, BigInt>;

// Silent: hypotheses hold but the statement only goes one way and its condition fails
enum class Prediction { Desirable, NotDesirable, Silent, NotApplicable };
const char* to_string(Prediction p);

struct TheoremVerdict {
    std::string id;
    Params params;
    bool hypotheses_ok = false;
    std::string failed_clause; // empty when hypotheses_ok
    Prediction predicted = Prediction::NotApplicable;
    std::optional<Verdict> brute_force;
    bool agree = true;
    // pointwise check of the stated formula for g, when there is one and it was run
    std::optional<bool> closed_form;
    std::string closed_form_detail;
    // the triple (n, e; q) the statement is about, if any
    std::optional<BigInt> n;
    unsigned q = 0, e = 0;
    std::vector<std::string> notes;
};

struct ParamSchema {
    std::vector<std::string> required;
    std::vector<std::string> optional;
    std::vector<std::string> indexed; // prefixes of indexed keys: "t" accepts t1, t2, ...
};

struct CheckOptions {
    bool brute_force = true;
    std::uint64_t brute_limit = std::uint64_t(1) << 16; // on q^e
};

std::vector<std::string> theorem_ids();
const ParamSchema& theorem_schema(const std::string& id);

TheoremVerdict classify_e1(const BigInt& n, unsigned q, const CheckOptions& opt = {});
TheoremVerdict check_structured(const std::string& id, const Params& params, const CheckOptions& opt = {});

// small parameter tuples for each id, all with q^e small enough for brute force
std::vector<Params> desk_grid(const std::string& id);

// gcd of the base-p digit polynomial of m with x^e - 1, over F_p
Poly digit_gcd(const BigInt& m, unsigned p, unsigned e);
bool is_x_minus_1(const Poly& g, unsigned p);

// ---- exact character sums ----
// counts[r] = #{x : f(x) = r}; the sum of zeta_p^{f(x)} vanishes iff all counts agree
struct CharSum {
    unsigned p = 2;
    std::vector<std::uint64_t> counts;
    bool vanishes() const;
};
CharSum character_sum(unsigned p, const std::vector<std::uint8_t>& f);
// y with f(x + y) - f(x) a nonzero constant, points encoded as base-p integers of dimension m
std::optional<std::uint64_t> constant_shift(unsigned p, unsigned m, const std::vector<std::uint8_t>& f);

// ---- parameter enumeration for the split theorems ----
struct ParamTuple {
    BigInt alpha, beta;
    unsigned b = 0; // T4.3 only
    std::string family;
};
struct EnumReport {
    std::vector<ParamTuple> tuples;
    std::uint64_t rejected = 0; // emissions that failed re-validation
    std::vector<std::string> notes;
};
EnumReport enum_params_T4_3(unsigned p, unsigned e);
EnumReport enum_params_T4_1(unsigned p, unsigned e, const BigInt& beta_bound);
// direct scans of the conditions, used as oracles
std::vector<ParamTuple> brute_params_T4_3(unsigned p, unsigned e);
std::vector<ParamTuple> brute_params_T4_1(unsigned p, unsigned e, const BigInt& beta_bound);
bool t41_conditions(const BigInt& alpha, const BigInt& beta, unsigned p, unsigned e);
bool t43_conditions(const BigInt& alpha, unsigned b, unsigned p, unsigned e);

// nonemptiness test for the four carry placements (kase 1..4) given a and the number m of carry runs
bool t41_feasible(int kase, unsigned p, unsigned e, unsigned a, unsigned m);

// ---- power expansions of the degree-q^2 trace-like polynomial ----
struct AppendixTerm {
    long long coeff;
    long long c3, c2, c1, c0; // exponent c3 q^3 + c2 q^2 + c1 q + c0
    std::string text;
};
std::vector<AppendixTerm> load_appendix_c(const std::string& path);
struct AppendixReport {
    unsigned q = 0;
    BigInt exponent;
    std::uint8_t leading = 0;    // coefficient of y^{q^3 - 1}
    std::uint8_t expected_leading = 0;
    bool leading_ok = false;
    bool list_ok = false;
    std::optional<BigInt> first_mismatch; // exponent where list and computation differ
    std::uint64_t terms_computed = 0, terms_listed = 0;
};
// y + y^q + y^{q^2} - y^{q-2} - y^{q^2-2} over F_p
Poly sporadic_g(unsigned q);
AppendixReport verify_appendix_c(unsigned q, const std::string& data_dir);

// ---- the three isolated triples ----
struct SporadicReport {
    std::string name;
    bool ok = true;
    std::vector<std::string> lines;
};
SporadicReport verify_sporadic(const std::string& name, const std::string& data_dir);
std::vector<std::string> sporadic_cases();

std::string default_data_dir();

} // namespace gnq
