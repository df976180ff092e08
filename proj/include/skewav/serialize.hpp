#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "skewav/bignum.hpp"
#include "skewav/classify.hpp"
#include "skewav/enumerate.hpp"
#include "skewav/maps.hpp"
#include "skewav/rational_fn.hpp"
#include "skewav/series.hpp"

namespace skewav {

// Counts and coefficients are serialized as decimal strings: they are exact
// arbitrary-precision values and must not be squeezed through double or int64.

inline nlohmann::json to_json(const CountTable& table) {
    nlohmann::json j;
    j["patterns"] = nlohmann::json::array();
    for (const auto& q : table.pattern_set.patterns()) j["patterns"].push_back(q.str());
    j["n_max"] = table.n_max;
    j["total"] = nlohmann::json::array();
    for (const Int& v : table.total) j["total"].push_back(v.str());
    j["by_blocks"] = nlohmann::json::array();
    for (int n = 1; n <= table.n_max; ++n) {
        nlohmann::json row = nlohmann::json::array();
        for (const Int& v : table.by_blocks[static_cast<std::size_t>(n)]) row.push_back(v.str());
        j["by_blocks"].push_back(std::move(row));
    }
    return j;
}

inline CountTable count_table_from_json(const nlohmann::json& j) {
    std::vector<Permutation> patterns;
    for (const auto& s : j.at("patterns")) patterns.push_back(Permutation::parse(s.get<std::string>()));
    CountTable table{PatternSet(std::move(patterns)), j.at("n_max").get<int>(), {}, {}};
    for (const auto& s : j.at("total")) table.total.emplace_back(s.get<std::string>());
    table.by_blocks.resize(static_cast<std::size_t>(table.n_max) + 1);
    const auto& rows = j.at("by_blocks");
    for (int n = 1; n <= table.n_max; ++n) {
        for (const auto& s : rows.at(static_cast<std::size_t>(n - 1))) {
            table.by_blocks[static_cast<std::size_t>(n)].emplace_back(s.get<std::string>());
        }
        if (static_cast<int>(table.by_blocks[static_cast<std::size_t>(n)].size()) != n) {
            throw std::invalid_argument("count table json: row " + std::to_string(n) + " has wrong width");
        }
    }
    if (static_cast<int>(table.total.size()) != table.n_max + 1) {
        throw std::invalid_argument("count table json: total has wrong length");
    }
    return table;
}

/// Rows n = 0..n_max; columns n, ell_1..ell_{n_max}, total. Cells with
/// ell > n are 0 by convention.
inline std::string count_table_to_csv(const CountTable& table) {
    std::ostringstream out;
    out << "n";
    for (int ell = 1; ell <= table.n_max; ++ell) out << ",ell_" << ell;
    out << ",total\n";
    for (int n = 0; n <= table.n_max; ++n) {
        out << n;
        for (int ell = 1; ell <= table.n_max; ++ell) {
            out << ',' << (n >= 1 && ell <= n ? table.at(n, ell).str() : "0");
        }
        out << ',' << table.total[static_cast<std::size_t>(n)].str() << '\n';
    }
    return out.str();
}

namespace detail {

inline std::vector<std::string> csv_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t end = line.find(',', start);
        fields.push_back(line.substr(start, end == std::string::npos ? end : end - start));
        if (end == std::string::npos) break;
        start = end + 1;
    }
    return fields;
}

}  // namespace detail

/// Inverse of count_table_to_csv. The pattern set is not part of the CSV
/// columns, so the caller supplies it.
inline CountTable count_table_from_csv(const std::string& csv, const PatternSet& patterns) {
    std::istringstream in(csv);
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("count table csv: empty input");
    const auto header = detail::csv_fields(line);
    if (header.size() < 3 || header.front() != "n" || header.back() != "total") {
        throw std::invalid_argument("count table csv: bad header");
    }
    const int n_max = static_cast<int>(header.size()) - 2;
    CountTable table{patterns, n_max, {}, {}};
    table.total.assign(static_cast<std::size_t>(n_max) + 1, Int(0));
    table.by_blocks.resize(static_cast<std::size_t>(n_max) + 1);
    for (int n = 1; n <= n_max; ++n) {
        table.by_blocks[static_cast<std::size_t>(n)].assign(static_cast<std::size_t>(n), Int(0));
    }
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto fields = detail::csv_fields(line);
        if (fields.size() != header.size()) throw std::invalid_argument("count table csv: ragged row");
        const int n = std::stoi(fields[0]);
        if (n < 0 || n > n_max) throw std::invalid_argument("count table csv: row index out of range");
        table.total[static_cast<std::size_t>(n)] = Int(fields.back());
        for (int ell = 1; ell <= n; ++ell) {
            table.by_blocks[static_cast<std::size_t>(n)][static_cast<std::size_t>(ell - 1)] =
                Int(fields[static_cast<std::size_t>(ell)]);
        }
    }
    return table;
}

inline nlohmann::json to_json(const TruncatedSeries& s) {
    nlohmann::json j;
    j["order"] = s.order();
    j["coefficients"] = nlohmann::json::array();
    for (const Rational& c : s.coefficients()) {
        j["coefficients"].push_back(
            {{"num", numerator(c).str()}, {"den", denominator(c).str()}});
    }
    return j;
}

inline TruncatedSeries series_from_json(const nlohmann::json& j) {
    std::vector<Rational> coeffs;
    for (const auto& c : j.at("coefficients")) {
        coeffs.emplace_back(Int(c.at("num").get<std::string>()),
                            Int(c.at("den").get<std::string>()));
    }
    TruncatedSeries s{std::move(coeffs)};
    if (s.order() != j.at("order").get<int>()) {
        throw std::invalid_argument("series json: order does not match coefficient count");
    }
    return s;
}

inline nlohmann::json to_json(const MapReport& r) {
    nlohmann::json j;
    j["pattern"] = r.pattern.str();
    j["n"] = r.n;
    j["domain_size"] = r.domain_size;
    j["image_size"] = r.image_size;
    j["well_defined"] = r.well_defined;
    j["injective"] = r.injective;
    j["surjective"] = r.surjective;
    j["counterexamples"] = nlohmann::json::array();
    for (const auto& c : r.counterexamples) {
        j["counterexamples"].push_back({{"input", c.input.str()}, {"diagnosis", c.diagnosis}});
    }
    return j;
}

inline nlohmann::json to_json(const ApplicabilityReport& r) {
    nlohmann::json j;
    j["pattern"] = r.pattern.str();
    j["skew_indecomposable_form"] = r.skew_indecomposable_form.str();
    j["condition"] = to_string(r.condition);
    j["covered"] = r.covered();
    if (r.witness) {
        j["witness"] = r.witness->str();
    } else {
        j["witness"] = nullptr;
    }
    j["evidence"] = r.evidence;
    return j;
}

inline nlohmann::json to_json(const WilfClassification& w) {
    nlohmann::json j;
    j["k"] = w.k;
    j["depth"] = w.depth;
    j["note"] = "count agreement is empirical to n = " + std::to_string(w.depth) +
                "; it is evidence, not proof";
    j["classes"] = nlohmann::json::array();
    int id = 1;
    for (const auto& cls : w.classes) {
        nlohmann::json c;
        c["class_id"] = id++;
        c["members"] = nlohmann::json::array();
        for (const auto& m : cls.members) c["members"].push_back(m.str());
        c["counts"] = nlohmann::json::array();
        for (const Int& v : cls.counts) c["counts"].push_back(v.str());
        c["symmetry_only"] = cls.symmetry_only;
        j["classes"].push_back(std::move(c));
    }
    return j;
}

/// pattern,class_id,av_1..av_N — one row per pattern.
inline std::string wilf_to_csv(const WilfClassification& w) {
    std::ostringstream out;
    out << "pattern,class_id";
    for (int n = 1; n <= w.depth; ++n) out << ",av_" << n;
    out << '\n';
    int id = 1;
    for (const auto& cls : w.classes) {
        for (const auto& m : cls.members) {
            out << m.str() << ',' << id;
            for (const Int& v : cls.counts) out << ',' << v.str();
            out << '\n';
        }
        ++id;
    }
    return out.str();
}

inline nlohmann::json to_json(const std::vector<MonotonicityViolation>& violations) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& v : violations) {
        j.push_back({{"n", v.n},
                     {"ell", v.ell},
                     {"at_ell", v.at_ell.str()},
                     {"at_ell_plus_1", v.at_ell_plus_1.str()}});
    }
    return j;
}

inline nlohmann::json to_json(const SupercriticalVerdict& v) {
    nlohmann::json j;
    j["status"] = to_string(v.status);
    j["evidence"] = v.evidence;
    j["witness_z0"] = v.witness_z0 ? nlohmann::json(rational_str(*v.witness_z0)) : nlohmann::json(nullptr);
    j["witness_value"] =
        v.witness_value ? nlohmann::json(rational_str(*v.witness_value)) : nlohmann::json(nullptr);
    if (v.pole_interval) {
        j["pole_interval"] = {rational_str(v.pole_interval->first), rational_str(v.pole_interval->second)};
    } else {
        j["pole_interval"] = nullptr;
    }
    return j;
}

}  // namespace skewav
