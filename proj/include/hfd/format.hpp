#pragma once

// CSV and JSON serialization.  Rationals always serialize as exact "num/den"
// strings; nothing in these emitters goes through floating point.

#include "obstruction.hpp"
#include "surgery.hpp"

#include <json.hpp>

#include <ostream>
#include <string>
#include <string_view>

namespace hfd {

using json = nlohmann::ordered_json;

/// RFC 4180 quoting; only quotes when the cell needs it.
inline std::string csv_cell(std::string_view s) {
    if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

inline void write_table_csv(std::ostream& os, const DInvariantTable& t) {
    os << "index,d_num,d_den\n";
    for (std::size_t i = 0; i < t.entries.size(); ++i)
        os << i << "," << t.entries[i].numerator().str() << ","
           << t.entries[i].denominator().str() << "\n";
}

inline json table_json(const DInvariantTable& t) {
    json j;
    j["knot"] = t.knot_label;
    j["slope"] = t.slope.str();
    json entries = json::array();
    for (std::size_t i = 0; i < t.entries.size(); ++i)
        entries.push_back({{"index", i}, {"d", t.entries[i].fraction_str()}});
    j["entries"] = std::move(entries);
    j["max_d"] = t.max_d().fraction_str();
    j["max_4d"] = (Rational(4) * t.max_d()).fraction_str();
    return j;
}

inline json verdict_json(const Verdict& v) {
    json j;
    j["knot"] = v.knot_label;
    j["slope"] = v.slope.str();
    j["delta"] = v.delta;
    j["delta_squarefree"] = v.delta_squarefree;
    j["lspace"] = v.lspace;
    j["max4d"] = v.max4d.fraction_str();
    j["threshold"] = v.threshold.fraction_str();
    j["negdef_excluded"] = v.negdef_excluded;
    j["conclusion"] = to_string(v.conclusion);
    return j;
}

} // namespace hfd
