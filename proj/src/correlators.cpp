#include "gmtkit/correlators.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <tuple>

#include "json.hpp"

namespace gmtkit {

CorrelatorKey CorrelatorKey::make(int N, int k, int d, std::vector<int> insertions) {
    CorrelatorKey key;
    key.N = N;
    key.k = k;
    key.d = d;
    std::sort(insertions.begin(), insertions.end());
    key.insertions = std::move(insertions);
    return key;
}

bool CorrelatorKey::operator<(const CorrelatorKey& o) const {
    return std::tie(N, k, d, insertions) < std::tie(o.N, o.k, o.d, o.insertions);
}

bool CorrelatorKey::operator==(const CorrelatorKey& o) const {
    return std::tie(N, k, d, insertions) == std::tie(o.N, o.k, o.d, o.insertions);
}

std::string CorrelatorKey::str() const {
    std::ostringstream os;
    os << "<";
    for (size_t i = 0; i < insertions.size(); ++i) {
        if (i) os << " ";
        os << "O_{h^" << insertions[i] << "}";
    }
    os << ">_{0," << d << "} (N=" << N << ", k=" << k << ")";
    return os.str();
}

void CorrelatorTable::insert(const CorrelatorKey& key, const Rational& value) {
    auto [it, inserted] = entries_.emplace(key, value);
    if (!inserted && it->second != value)
        throw CorrelatorConflict("conflicting values for " + key.str() + ": " + it->second.str() +
                                 " vs " + value.str());
}

std::optional<Rational> CorrelatorTable::lookup(const CorrelatorKey& key) const {
    auto it = entries_.find(key);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

namespace {

int require_int(const nlohmann::json& j, const char* field, size_t entry) {
    if (!j.contains(field) || !j[field].is_number_integer())
        throw CorrelatorParseError("entry " + std::to_string(entry) + ": missing integer field '" +
                                   field + "'");
    return j[field].get<int>();
}

}  // namespace

CorrelatorTable CorrelatorTable::from_json_string(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        // nlohmann reports the byte offset of the failure in e.byte.
        throw CorrelatorParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || doc.value("schema", "") != "gmt-correlators/1")
        throw CorrelatorParseError("expected schema \"gmt-correlators/1\"");
    if (!doc.contains("entries") || !doc["entries"].is_array())
        throw CorrelatorParseError("missing \"entries\" array");

    CorrelatorTable table;
    size_t idx = 0;
    for (const auto& e : doc["entries"]) {
        int N = require_int(e, "N", idx);
        int k = require_int(e, "k", idx);
        int d = require_int(e, "d", idx);
        if (N < 2 || k < 1 || d < 0)
            throw CorrelatorParseError("entry " + std::to_string(idx) + ": invalid N/k/d");
        if (!e.contains("insertions") || !e["insertions"].is_array())
            throw CorrelatorParseError("entry " + std::to_string(idx) +
                                       ": missing \"insertions\" array");
        std::vector<int> ins;
        for (const auto& v : e["insertions"]) {
            if (!v.is_number_integer())
                throw CorrelatorParseError("entry " + std::to_string(idx) +
                                           ": malformed exponent list");
            ins.push_back(v.get<int>());
        }
        if (!std::is_sorted(ins.begin(), ins.end()))
            throw CorrelatorParseError("entry " + std::to_string(idx) +
                                       ": insertions must be sorted ascending");
        for (int c : ins)
            if (c < 0 || c > N - 2)
                throw CorrelatorParseError("entry " + std::to_string(idx) + ": exponent " +
                                           std::to_string(c) + " outside 0.." + std::to_string(N - 2));
        if (!e.contains("value") || !e["value"].is_string())
            throw CorrelatorParseError("entry " + std::to_string(idx) +
                                       ": missing \"value\" fraction string");
        Rational value(0);
        try {
            value = Rational(e["value"].get<std::string>());
        } catch (const std::invalid_argument& ex) {
            throw CorrelatorParseError("entry " + std::to_string(idx) + ": " + ex.what());
        }
        CorrelatorKey key;
        key.N = N;
        key.k = k;
        key.d = d;
        key.insertions = std::move(ins);
        table.insert(key, value);  // CorrelatorConflict on duplicates that differ
        ++idx;
    }
    return table;
}

std::string CorrelatorTable::to_json_string() const {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& [key, value] : entries_) {
        nlohmann::json e;
        e["N"] = key.N;
        e["k"] = key.k;
        e["d"] = key.d;
        e["insertions"] = key.insertions;
        e["value"] = value.str();
        entries.push_back(std::move(e));
    }
    nlohmann::json doc;
    doc["schema"] = "gmt-correlators/1";
    doc["entries"] = std::move(entries);
    return doc.dump();
}

CorrelatorTable CorrelatorTable::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw CorrelatorParseError("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_json_string(buf.str());
}

void CorrelatorTable::store(const std::filesystem::path& path) const {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << to_json_string() << "\n";
}

}  // namespace gmtkit
