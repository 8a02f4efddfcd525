#pragma once

#include <cstdint>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

// frozen output of tests/oracle/oracle.py
struct OracleData {
    std::map<std::string, std::vector<std::uint64_t>> rows; // "desirable 3 2" -> values

    static const OracleData& get() {
        static const OracleData d = load(GNQ_TEST_DATA_DIR "/oracle_sets.txt");
        return d;
    }

    // first `prefix` tokens form the key, the rest are the values
    const std::vector<std::uint64_t>& at(const std::string& key) const {
        auto it = rows.find(key);
        if (it == rows.end()) throw std::runtime_error("oracle row missing: " + key);
        return it->second;
    }

    std::vector<std::uint64_t> desirable(unsigned q, unsigned e) const {
        auto v = at("desirable " + std::to_string(q) + " " + std::to_string(e));
        v.erase(v.begin()); // count
        return v;
    }

private:
    static OracleData load(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw std::runtime_error("cannot open " + path);
        OracleData d;
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty() || line[0] == '#') continue;
            std::istringstream ls(line);
            std::string tag;
            ls >> tag;
            // key arity per tag
            int k = tag == "common_roots_f8" ? 0 : (tag == "a_coeff" || tag == "hermite") ? 1 : tag == "coset" ? 3 : 2;
            std::string key = tag, tok;
            for (int i = 0; i < k && ls >> tok; ++i) key += " " + tok;
            std::vector<std::uint64_t> vals;
            std::uint64_t v;
            while (ls >> v) vals.push_back(v);
            d.rows[key] = std::move(vals);
        }
        return d;
    }
};
