#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gnq/bigint.hpp"

namespace gnq {

struct CatalogRow {
    unsigned q = 0, e = 0;
    std::uint64_t n = 0; // canonical representative
    std::string digits;  // base-q, little-endian
    bool desirable = false;
    std::vector<std::string> categories;
};

struct SearchJob {
    unsigned q = 3, e = 1;
    // inclusive range of n; empty optional means 1 .. q^{pe} - 2
    std::optional<std::pair<std::uint64_t, std::uint64_t>> range;
    // keep a coset only if every member has w_q > weight_gt (-1 disables the filter)
    int weight_gt = -1;
    std::uint64_t chunk = 1 << 14;
    unsigned workers = 1;
    // q^{pe} - 1 above this throws BudgetExceeded
    std::uint64_t budget = 531440; // 3^12 - 1
    bool categorize = false;
    // resume after this n (checkpoint value)
    std::optional<std::uint64_t> resume_after;
    // called in ascending chunk order with the rows of each finished chunk and its last n
    std::function<void(const std::vector<CatalogRow>&, std::uint64_t)> on_chunk;
};

struct SearchStats {
    std::uint64_t scanned = 0;   // n values looked at
    std::uint64_t canonical = 0; // canonical reps passing the filter
    std::uint64_t tested = 0;    // desirability tests run
};

std::vector<CatalogRow> search_all(const SearchJob& job, SearchStats* stats = nullptr);

std::string digit_string(std::uint64_t n, unsigned q);
std::string tsv_header();
std::string to_tsv(const CatalogRow& r);
std::string to_json(const CatalogRow& r);

// checkpoint: "q e last_canonical_processed"
void write_checkpoint(const std::string& path, unsigned q, unsigned e, std::uint64_t last);
std::optional<std::uint64_t> read_checkpoint(const std::string& path, unsigned q, unsigned e);

// (q^a - q^b - 1, 2; q) over 0 < b < a < 2p
std::vector<std::pair<unsigned, unsigned>> search_qab_all(unsigned q);
// with the Table 1 exclusions: b odd, b != p, (a, b) != (2, 1)
std::vector<std::pair<unsigned, unsigned>> search_qab(unsigned q);
// the same scan through generic is_desirable on reduced exponents
std::vector<std::pair<unsigned, unsigned>> search_qab_generic(unsigned q);
bool qab_caption_filter(unsigned a, unsigned b, unsigned p);

// registry IDs covering (n, e; q); throws NotDesirable
CatalogRow categorize(const BigInt& n, unsigned e, unsigned q);
// same without the desirability precondition check
std::vector<std::string> categories_of(const BigInt& n, unsigned e, unsigned q);

// ---- transcribed tables ----
struct Table1Block {
    unsigned q = 0;
    std::vector<std::pair<unsigned, unsigned>> rows;
};
struct TableRow {
    unsigned e = 0;
    std::uint64_t n = 0;
    std::string digits;
    std::string label;
};
std::vector<Table1Block> load_table1(const std::string& path);
std::vector<TableRow> load_table_rows(const std::string& path);

struct TableScope {
    unsigned max_q = 13;       // Tb1
    unsigned max_e_rows = 6;   // rows re-verified
    unsigned max_e_regen = 4;  // blocks regenerated
    bool long_mode = false;
};
// "q<=13", "e<=4", "e<=4,regen<=3"; empty gives the CI defaults for the table
TableScope parse_scope(const std::string& id, const std::string& spec, bool long_mode);

struct TableReport {
    std::string id;
    bool ok = true;
    std::uint64_t rows_checked = 0, rows_failed = 0;
    std::vector<std::string> lines;
};
TableReport verify_table(const std::string& id, const TableScope& scope, const std::string& data_dir);

// ---- conjecture scans ----
struct ConjectureReport {
    std::string id;
    bool consistent = true;
    std::uint64_t cases = 0;
    std::uint64_t counterexamples = 0;
    std::vector<std::string> lines;
    // first counterexample, as key/value pairs
    std::optional<std::map<std::string, std::string>> witness;
};
// bounds: "q=3,5,7;e=2,3" style, ranges "a..b" allowed; empty gives defaults
ConjectureReport check_conjecture(const std::string& id, const std::string& bounds);
std::vector<std::string> conjecture_ids();

} // namespace gnq
