#include "lattice_json.hpp"

#include <json.hpp>

#include <sstream>

namespace zplat {

namespace {

using json = nlohmann::ordered_json;

long position_line(const std::string& text, std::size_t byte) {
    long line = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i)
        if (text[i] == '\n') ++line;
    return line;
}

Int entry_value(const json& v, long row, long col) {
    std::string where =
        "action[" + std::to_string(row) + "][" + std::to_string(col) + "]";
    if (v.is_number_integer()) return Int(std::to_string(v.get<long long>()));
    if (v.is_string()) {
        const std::string s = v.get<std::string>();
        if (s.empty()) throw ValidationError(where + ": empty entry");
        std::size_t k = s[0] == '-' ? 1 : 0;
        if (k == s.size()) throw ValidationError(where + ": bad integer '" + s + "'");
        for (; k < s.size(); ++k)
            if (s[k] < '0' || s[k] > '9')
                throw ValidationError(where + ": bad integer '" + s + "'");
        return Int(s);
    }
    throw ValidationError(where + ": entries must be decimal integer strings");
}

long int_field(const json& doc, const char* name) {
    if (!doc.contains(name)) throw ValidationError(std::string(name) + ": missing field");
    const json& v = doc[name];
    if (!v.is_number_integer() || v.get<long long>() < 0)
        throw ValidationError(std::string(name) + ": must be a nonnegative integer");
    return static_cast<long>(v.get<long long>());
}

}  // namespace

Lattice parse_lattice(const std::string& text, bool strict) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw SyntaxError("JSON parse error at line " +
                          std::to_string(position_line(text, e.byte)) + ": " + e.what());
    }
    if (!doc.is_object()) throw ValidationError("top level must be a JSON object");

    if (!doc.contains("format_version"))
        throw VersionError("format_version: missing field");
    if (!doc["format_version"].is_string() ||
        doc["format_version"].get<std::string>() != kLatticeFormatVersion)
        throw VersionError("format_version: expected \"" + std::string(kLatticeFormatVersion) +
                           "\"");

    static const char* known[] = {"format_version", "label", "p", "n", "rank", "action"};
    if (strict) {
        for (auto it = doc.begin(); it != doc.end(); ++it) {
            bool ok = false;
            for (const char* k : known)
                if (it.key() == k) { ok = true; break; }
            if (!ok) throw ValidationError(it.key() + ": unknown field (strict mode)");
        }
    }

    long p = int_field(doc, "p");
    long n = int_field(doc, "n");
    long rank = int_field(doc, "rank");
    if (!is_odd_prime(static_cast<unsigned long>(p)))
        throw ValidationError("p: must be an odd prime");
    if (n < 1) throw ValidationError("n: must be at least 1");

    if (!doc.contains("action") || !doc["action"].is_array())
        throw ValidationError("action: missing or not an array");
    const json& act = doc["action"];
    if (static_cast<long>(act.size()) != rank)
        throw ValidationError("action: expected " + std::to_string(rank) + " rows");
    IntMatrix a(rank, rank);
    for (long i = 0; i < rank; ++i) {
        const json& row = act[static_cast<std::size_t>(i)];
        if (!row.is_array() || static_cast<long>(row.size()) != rank)
            throw ValidationError("action[" + std::to_string(i) + "]: expected " +
                                  std::to_string(rank) + " entries");
        for (long j = 0; j < rank; ++j)
            a.at(i, j) = entry_value(row[static_cast<std::size_t>(j)], i, j);
    }

    std::string label;
    if (doc.contains("label")) {
        if (!doc["label"].is_string()) throw ValidationError("label: must be a string");
        label = doc["label"].get<std::string>();
    }

    try {
        return Lattice(static_cast<unsigned long>(p), n, std::move(a), label);
    } catch (const ValidationError& e) {
        throw ValidationError(std::string("action: ") + e.what());
    }
}

std::string serialize_lattice(const Lattice& L) {
    json doc;
    doc["format_version"] = kLatticeFormatVersion;
    if (!L.label.empty()) doc["label"] = L.label;
    doc["p"] = static_cast<long long>(L.p);
    doc["n"] = L.n;
    doc["rank"] = L.rank;
    json rows = json::array();
    for (long i = 0; i < L.rank; ++i) {
        json row = json::array();
        for (long j = 0; j < L.rank; ++j) row.push_back(L.action.at(i, j).get_str());
        rows.push_back(row);
    }
    doc["action"] = rows;
    return doc.dump(2) + "\n";
}

}  // namespace zplat
