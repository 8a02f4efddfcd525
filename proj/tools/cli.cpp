#include "cli.hpp"

#include <fstream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"

#include "gnq/digits.hpp"
#include "gnq/error.hpp"
#include "gnq/gpoly.hpp"
#include "gnq/pptest.hpp"
#include "gnq/search.hpp"
#include "gnq/theorems.hpp"
#include "gnq/tower.hpp"

namespace gnq::cli {

namespace {

int code_for(ErrorKind k) {
    switch (k) {
    case ErrorKind::NotDesirable:
    case ErrorKind::MismatchAt:
    case ErrorKind::MissingDataFile:
    case ErrorKind::DataError:
    case ErrorKind::NotClosed:
    case ErrorKind::NoSolution:
    case ErrorKind::BothZero:
        return kFail;
    default:
        return kUsage;
    }
}

BigInt big_arg(const std::string& name, const std::string& s) {
    try {
        return parse_bigint(s);
    } catch (const std::invalid_argument&) {
        throw Error(ErrorKind::Usage, name + ": not an integer: '" + s + "'");
    }
}

std::pair<unsigned, unsigned> prime_power_or_throw(unsigned q) {
    auto pp = prime_power(q);
    if (!pp) throw Error(ErrorKind::NonPrime, std::to_string(q) + " is not a prime power");
    return *pp;
}

const char* yes(bool b) { return b ? "yes" : "no"; }

// "K=V,K=V"
Params parse_params(const std::string& s) {
    Params P;
    std::istringstream ss(s);
    std::string kv;
    while (std::getline(ss, kv, ',')) {
        if (kv.empty()) continue;
        const auto eq = kv.find('=');
        if (eq == std::string::npos || eq == 0) throw Error(ErrorKind::Usage, "--params item '" + kv + "' is not K=V");
        P[kv.substr(0, eq)] = big_arg(kv.substr(0, eq), kv.substr(eq + 1));
    }
    return P;
}

std::string params_str(const Params& P) {
    std::string s;
    for (auto& [k, v] : P) s += (s.empty() ? "" : ",") + k + "=" + v.str();
    return s;
}

struct Opts {
    unsigned q = 0, e = 0, p = 0, s = 0;
    std::string n, point, method = "recur", out, format = "tsv", id, scope, params, family, beta_bound, bounds,
                                     kase, data_dir;
    int weight_gt = -1;
    bool long_mode = false, all = false;
    unsigned workers = 0;
};

int cmd_eval(const Opts& o, std::ostream& out) {
    prime_power_or_throw(o.q);
    const BigInt n = big_arg("--n", o.n);
    if (n < 0) throw Error(ErrorKind::OutOfRange, "--n must be >= 0");
    if (o.method != "recur" && o.method != "functional" && o.method != "symbolic")
        throw Error(ErrorKind::Usage, "--method recur|functional|symbolic");
    auto ev = GEvaluator::shared(o.q, o.e);
    const GContext& ctx = ev->context();
    const ExtField& K = ctx.field();
    Poly sym;
    if (o.method == "symbolic") sym = g_symbolic(n, o.q, o.e);
    auto value = [&](const Elem& y) {
        if (o.method == "functional") return eval_g_functional(n, ctx, y);
        if (o.method == "symbolic") return eval_poly_fp(K, sym, y);
        return eval_g(n, ctx, y);
    };
    if (!o.point.empty()) {
        out << format_point(K, value(parse_point(K, o.point))) << "\n";
        return kOk;
    }
    if (K.size() > (1u << 16)) throw Error(ErrorKind::SizeBudgetExceeded, "value table needs q^e <= 65536; use --point");
    for (std::uint64_t i = 0; i < K.size(); ++i) {
        const Elem y = K.element(i);
        out << format_point(K, y) << '\t' << format_point(K, value(y)) << "\n";
    }
    return kOk;
}

int cmd_pp_test(const Opts& o, std::ostream& out) {
    prime_power_or_throw(o.q);
    const BigInt n = big_arg("--n", o.n);
    auto ev = GEvaluator::shared(o.q, o.e);
    auto v = is_desirable(*ev, n);
    if (v.is_pp) {
        out << "desirable\n";
        return kOk;
    }
    const ExtField& K = ev->context().field();
    out << "not desirable";
    if (v.witness) {
        const Elem a = K.element(v.witness->first), b = K.element(v.witness->second);
        out << ": g(" << format_point(K, a) << ") = g(" << format_point(K, b) << ") = " << format_point(K, ev->eval(n, a));
    }
    out << "\n";
    return kFail;
}

int cmd_search(const Opts& o, std::ostream& out) {
    const auto [p, s] = prime_power_or_throw(o.q);
    (void)s;
    if (o.format != "tsv" && o.format != "json") throw Error(ErrorKind::Usage, "--format tsv|json");
    SearchJob job;
    job.q = o.q;
    job.e = o.e;
    job.weight_gt = o.weight_gt;
    job.categorize = true;
    job.workers = o.workers ? o.workers : std::max(1u, std::thread::hardware_concurrency());
    if (o.long_mode) job.budget = 1000000000ULL;

    std::ofstream file;
    std::ostream* sink = &out;
    std::string ckpt;
    bool resumed = false;
    if (!o.out.empty()) {
        ckpt = o.out + ".ckpt";
        if (o.long_mode) job.resume_after = read_checkpoint(ckpt, o.q, o.e);
        resumed = job.resume_after.has_value();
        file.open(o.out, resumed ? std::ios::app : std::ios::trunc);
        if (!file) throw Error(ErrorKind::DataError, "cannot write " + o.out);
        sink = &file;
    }
    if (!resumed && o.format == "tsv") *sink << tsv_header() << "\n";
    job.on_chunk = [&](const std::vector<CatalogRow>& rows, std::uint64_t last) {
        for (auto& r : rows) *sink << (o.format == "json" ? to_json(r) : to_tsv(r)) << "\n";
        sink->flush();
        if (!ckpt.empty() && o.long_mode) write_checkpoint(ckpt, o.q, o.e, last);
    };
    (void)p;
    search_all(job);
    if (!ckpt.empty() && o.long_mode) std::remove(ckpt.c_str());
    return kOk;
}

int cmd_search_qab(const Opts& o, std::ostream& out) {
    prime_power_or_throw(o.q);
    for (auto& [a, b] : o.all ? search_qab_all(o.q) : search_qab(o.q)) out << a << ' ' << b << "\n";
    return kOk;
}

int cmd_table(const Opts& o, std::ostream& out) {
    auto R = verify_table(o.id, parse_scope(o.id, o.scope, o.long_mode), o.data_dir);
    for (auto& l : R.lines) out << l << "\n";
    out << (R.ok ? "PASS" : "FAIL") << "\n";
    return R.ok ? kOk : kFail;
}

int cmd_theorem(const Opts& o, std::ostream& out) {
    auto v = check_structured(o.id, parse_params(o.params));
    out << "id: " << v.id << "\n";
    out << "params: " << params_str(v.params) << "\n";
    out << "hypotheses: " << (v.hypotheses_ok ? "hold" : "fail (" + v.failed_clause + ")") << "\n";
    if (v.n) out << "triple: (" << *v.n << "," << v.e << ";" << v.q << ")\n";
    out << "predicted: " << to_string(v.predicted) << "\n";
    if (v.brute_force) out << "brute force: " << (v.brute_force->is_pp ? "permutation" : "not a permutation") << "\n";
    if (v.closed_form)
        out << "closed form: " << (*v.closed_form ? "holds" : "fails")
            << (v.closed_form_detail.empty() ? "" : " (" + v.closed_form_detail + ")") << "\n";
    for (auto& n : v.notes) out << "note: " << n << "\n";
    const bool ok = v.agree && (!v.closed_form || *v.closed_form);
    out << "agreement: " << yes(ok) << "\n";
    return ok ? kOk : kFail;
}

int cmd_params(const Opts& o, std::ostream& out) {
    EnumReport R;
    if (o.family == "t4.3") {
        R = enum_params_T4_3(o.p, o.e);
        out << "alpha\tb\tbeta\tcase\n";
        for (auto& t : R.tuples) out << t.alpha << '\t' << t.b << '\t' << t.beta << '\t' << t.family << "\n";
    } else if (o.family == "t4.1") {
        if (!is_prime(o.p)) throw Error(ErrorKind::NonPrime, std::to_string(o.p) + " is not prime");
        const BigInt bound = o.beta_bound.empty() ? ipow(BigInt(o.p), o.p * o.e) - 1 : big_arg("--beta-bound", o.beta_bound);
        R = enum_params_T4_1(o.p, o.e, bound);
        out << "alpha\tbeta\tcase\n";
        for (auto& t : R.tuples) out << t.alpha << '\t' << t.beta << '\t' << t.family << "\n";
    } else {
        throw Error(ErrorKind::Usage, "--family t4.1|t4.3");
    }
    for (auto& n : R.notes) out << "# " << n << "\n";
    out << "# " << R.tuples.size() << " tuples, " << R.rejected << " rejected on re-validation\n";
    return kOk;
}

int cmd_conjecture(const Opts& o, std::ostream& out) {
    auto R = check_conjecture(o.id, o.bounds);
    for (auto& l : R.lines) out << l << "\n";
    if (R.witness) {
        out << "witness:";
        for (auto& [k, v] : *R.witness) out << ' ' << k << '=' << v;
        out << "\n";
    }
    return R.consistent ? kOk : kFail;
}

int cmd_appendix_c(const Opts& o, std::ostream& out) {
    auto R = verify_appendix_c(o.q, o.data_dir);
    out << "q=" << R.q << " exponent " << R.exponent << "\n";
    out << "coefficient of y^(q^3-1): " << unsigned(R.leading) << " (expected " << unsigned(R.expected_leading)
        << ") " << (R.leading_ok ? "ok" : "MISMATCH") << "\n";
    out << "terms: computed " << R.terms_computed << ", listed " << R.terms_listed << ", "
        << (R.list_ok ? "identical" : "DIFFERENT") << "\n";
    if (R.first_mismatch) out << "highest differing exponent: " << *R.first_mismatch << "\n";
    const bool ok = R.leading_ok && R.list_ok;
    out << (ok ? "PASS" : "FAIL") << "\n";
    return ok ? kOk : kFail;
}

int cmd_sporadic(const Opts& o, std::ostream& out) {
    auto R = verify_sporadic(o.kase, o.data_dir);
    for (auto& l : R.lines) out << l << "\n";
    out << (R.ok ? "PASS" : "FAIL") << "\n";
    return R.ok ? kOk : kFail;
}

std::string poly_str(const std::vector<std::uint8_t>& c) {
    std::string s;
    for (std::size_t i = 0; i < c.size(); ++i) s += (i ? " " : "") + std::to_string(c[i]);
    return s;
}

int cmd_field_info(const Opts& o, std::ostream& out) {
    if (!is_prime(o.p)) throw Error(ErrorKind::NonPrime, std::to_string(o.p) + " is not prime");
    if (o.s < 1 || o.e < 1) throw Error(ErrorKind::OutOfRange, "--s and --e must be >= 1");
    const BigInt qb = ipow(BigInt(o.p), o.s);
    if (qb > 256) throw Error(ErrorKind::SizeBudgetExceeded, "q = p^s must be <= 256");
    const unsigned q = static_cast<unsigned>(qb);
    auto T = FieldTower::make(o.p, o.s, o.e);
    const ExtField& K = T->ext();
    out << "p = " << o.p << ", q = " << q << ", e = " << o.e << ", pe = " << o.p * o.e << "\n";
    out << "F_q modulus over F_p (constant first): " << poly_str(T->base().modulus()) << "\n";
    out << "F_{q^e} modulus over F_q (constant first, F_q codes): " << poly_str(K.modulus()) << "\n";
    out << "|F_{q^e}| = " << K.order() << "\n";
    out << "period q^(pe) - 1 = " << ipow(BigInt(q), o.p * o.e) - 1 << "\n";
    out << "point format: little-endian F_p digits, " << o.s * o.e << " per element\n";
    return kOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"g_{n,q} permutation toolkit", "gnq"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");
    Opts o;
    o.data_dir = default_data_dir();

    auto* eval = app.add_subcommand("eval", "value table of g_{n,q} on F_{q^e}");
    eval->add_option("--q", o.q)->required();
    eval->add_option("--e", o.e)->required()->check(CLI::PositiveNumber);
    eval->add_option("--n", o.n)->required();
    eval->add_option("--point", o.point, "one point, little-endian F_p digits");
    eval->add_option("--method", o.method)->check(CLI::IsMember({"recur", "functional", "symbolic"}));

    auto* pp = app.add_subcommand("pp-test", "is (n,e;q) desirable");
    pp->add_option("--q", o.q)->required();
    pp->add_option("--e", o.e)->required()->check(CLI::PositiveNumber);
    pp->add_option("--n", o.n)->required();

    auto* search = app.add_subcommand("search", "all desirable triples up to equivalence");
    search->add_option("--q", o.q)->required();
    search->add_option("--e", o.e)->required()->check(CLI::PositiveNumber);
    search->add_option("--weight-gt", o.weight_gt);
    search->add_flag("--long", o.long_mode, "lift the budget; with --out, checkpoint to FILE.ckpt and resume");
    search->add_option("--out", o.out);
    search->add_option("--format", o.format)->check(CLI::IsMember({"tsv", "json"}));
    search->add_option("--workers", o.workers, "threads (default: all cores)");

    auto* qab = app.add_subcommand("search-qab", "(q^a - q^b - 1, 2; q), 0 < b < a < 2p");
    qab->add_option("--q", o.q)->required();
    qab->add_flag("--all", o.all, "skip the caption filter");

    auto* table = app.add_subcommand("table", "verify a transcribed table");
    table->add_option("--id", o.id)->required()->check(CLI::IsMember({"tb1", "tb2", "tb3"}));
    table->add_option("--scope", o.scope, "e.g. q<=13 or e<=4,regen<=3");
    table->add_flag("--long", o.long_mode);
    table->add_option("--data-dir", o.data_dir);

    auto* thm = app.add_subcommand("theorem", "check one registry entry");
    thm->add_option("--id", o.id)->required();
    thm->add_option("--params", o.params)->required();

    auto* params = app.add_subcommand("params", "parameter enumeration for the split theorems");
    params->add_option("--family", o.family)->required()->check(CLI::IsMember({"t4.1", "t4.3"}));
    params->add_option("--p", o.p)->required();
    params->add_option("--e", o.e)->required();
    params->add_option("--beta-bound", o.beta_bound);

    auto* conj = app.add_subcommand("conjecture", "exhaustive scan of a conjecture");
    conj->add_option("--id", o.id)->required()->check(CLI::IsMember({"c5.1", "c5.x", "c5.t", "c6.x"}));
    conj->add_option("--bounds", o.bounds, "e.g. q=3,5,7;e=2..3 or k=1,2")->required();

    auto* app_c = app.add_subcommand("appendix-c", "power expansion check");
    app_c->add_option("--q", o.q)->required();
    app_c->add_option("--data-dir", o.data_dir);

    auto* spor = app.add_subcommand("sporadic", "the isolated triples");
    spor->add_option("--case", o.kase)->required()->check(CLI::IsMember({"f", "h", "n91525"}));
    spor->add_option("--data-dir", o.data_dir);

    auto* fi = app.add_subcommand("field-info", "tower construction details");
    fi->add_option("--p", o.p)->required();
    fi->add_option("--s", o.s)->required();
    fi->add_option("--e", o.e)->required();

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    }

    try {
        if (eval->parsed()) return cmd_eval(o, out);
        if (pp->parsed()) return cmd_pp_test(o, out);
        if (search->parsed()) return cmd_search(o, out);
        if (qab->parsed()) return cmd_search_qab(o, out);
        if (table->parsed()) return cmd_table(o, out);
        if (thm->parsed()) return cmd_theorem(o, out);
        if (params->parsed()) return cmd_params(o, out);
        if (conj->parsed()) return cmd_conjecture(o, out);
        if (app_c->parsed()) return cmd_appendix_c(o, out);
        if (spor->parsed()) return cmd_sporadic(o, out);
        if (fi->parsed()) return cmd_field_info(o, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return code_for(e.kind());
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kFail;
    }
    err << "usage error: no subcommand\n";
    return kUsage;
}

} // namespace gnq::cli
