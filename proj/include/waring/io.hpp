#ifndef WARING_IO_HPP
#define WARING_IO_HPP

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "waring/errors.hpp"
#include "waring/identify.hpp"
#include "waring/pointset.hpp"
#include "waring/rational.hpp"

namespace waring {

// A parsed input file: either the structured JSON form or bare CSV rows.
struct InputDocument {
    long n = 0;
    long d = 4;
    std::vector<std::vector<Rational>> points;
    std::optional<std::vector<Rational>> weights;

    PointSet point_set() const { return PointSet(points); }
    Decomposition decomposition() const { return Decomposition(d, PointSet(points), weights); }
};

namespace detail {

inline Rational rational_from_json(const nlohmann::json& v, const char* where) {
    if (v.is_number_integer()) return Rational(v.get<long long>());
    if (v.is_string()) return parse_rational(v.get<std::string>());
    throw InputError(std::string(where) + ": entries must be integers or \"p/q\" strings");
}

inline std::vector<std::string> tokenize_csv_line(const std::string& line) {
    std::string normalized = line;
    for (auto& c : normalized) {
        if (c == ',' || c == '\t') c = ' ';
    }
    std::istringstream in(normalized);
    std::vector<std::string> tokens;
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
    return tokens;
}

} // namespace detail

// Accepts two syntaxes: a JSON object with fields n, d, points, weights
// (entries are integers or "p/q" strings), or bare CSV with one point per
// row, n inferred from the row length and d defaulting to 4. Lines starting
// with '#' are comments in the CSV form.
inline InputDocument parse_input(const std::string& text) {
    InputDocument doc;
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) {
        throw InputError("input: empty document");
    }
    if (text[first] == '{') {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(text);
        } catch (const nlohmann::json::parse_error& e) {
            throw InputError(std::string("input: JSON parse error: ") + e.what());
        }
        if (!j.contains("points") || !j["points"].is_array() || j["points"].empty()) {
            throw InputError("input: field 'points' must be a nonempty array of rows");
        }
        for (const auto& row : j["points"]) {
            if (!row.is_array() || row.empty()) {
                throw InputError("input: each point must be a nonempty array");
            }
            std::vector<Rational> p;
            for (const auto& v : row) p.push_back(detail::rational_from_json(v, "points"));
            doc.points.push_back(std::move(p));
        }
        doc.n = static_cast<long>(doc.points[0].size()) - 1;
        if (j.contains("n") && j["n"].get<long>() != doc.n) {
            throw InputError("input: field 'n' contradicts the row length");
        }
        if (j.contains("d")) doc.d = j["d"].get<long>();
        if (j.contains("weights") && !j["weights"].is_null()) {
            std::vector<Rational> w;
            for (const auto& v : j["weights"]) w.push_back(detail::rational_from_json(v, "weights"));
            doc.weights = std::move(w);
        }
    } else {
        std::istringstream in(text);
        std::string line;
        std::size_t lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            const auto start = line.find_first_not_of(" \t\r");
            if (start == std::string::npos || line[start] == '#') continue;
            const auto tokens = detail::tokenize_csv_line(line);
            std::vector<Rational> p;
            for (const auto& tok : tokens) {
                try {
                    p.push_back(parse_rational(tok));
                } catch (const InputError& e) {
                    throw InputError("input: line " + std::to_string(lineno) + ": " + e.what());
                }
            }
            if (!doc.points.empty() && p.size() != doc.points[0].size()) {
                throw InputError("input: line " + std::to_string(lineno) +
                                 ": row length differs from previous rows");
            }
            doc.points.push_back(std::move(p));
        }
        if (doc.points.empty()) {
            throw InputError("input: no point rows found");
        }
        doc.n = static_cast<long>(doc.points[0].size()) - 1;
    }
    if (doc.n < 0 || doc.points[0].size() < 1) {
        throw InputError("input: points need at least one coordinate");
    }
    return doc;
}

// Canonical serialization: sorted keys, every entry a string.
inline std::string serialize_input(const InputDocument& doc) {
    nlohmann::json j;
    j["n"] = doc.n;
    j["d"] = doc.d;
    j["points"] = nlohmann::json::array();
    for (const auto& p : doc.points) {
        nlohmann::json row = nlohmann::json::array();
        for (const auto& c : p) row.push_back(to_string(c));
        j["points"].push_back(row);
    }
    if (doc.weights) {
        nlohmann::json w = nlohmann::json::array();
        for (const auto& c : *doc.weights) w.push_back(to_string(c));
        j["weights"] = w;
    }
    return j.dump();
}

// FNV-1a 64-bit over the canonical serialization.
inline std::string input_digest(const InputDocument& doc) {
    const std::string data = serialize_input(doc);
    std::uint64_t hash = 0xcbf29ce484222325ull;
    for (unsigned char c : data) {
        hash ^= c;
        hash *= 0x00000100000001b3ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(hash));
    return std::string(buf);
}

constexpr const char* kReportSchemaVersion = "1";

// Shared skeleton of every report: command echo, digest, schema version.
inline nlohmann::json make_report(const std::string& command, const InputDocument& doc) {
    nlohmann::json report;
    report["schema_version"] = kReportSchemaVersion;
    report["command"] = command;
    report["input_digest"] = input_digest(doc);
    return report;
}

} // namespace waring

#endif
