#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gmtkit/rational.hpp"

namespace gmtkit {

// Key of a genus-0 correlator <O_{h^{c_1}} ... O_{h^{c_n}}>_{0,d} of the
// degree-k hypersurface in CP^{N-1}. Insertions are kept sorted ascending;
// exponents must lie in 0..N-2 (out-of-range correlators are 0 by
// convention and never stored).
struct CorrelatorKey {
    int N = 0;
    int k = 0;
    int d = 0;
    std::vector<int> insertions;

    static CorrelatorKey make(int N, int k, int d, std::vector<int> insertions);

    bool operator<(const CorrelatorKey& o) const;
    bool operator==(const CorrelatorKey& o) const;
    std::string str() const;
};

struct CorrelatorParseError : std::runtime_error {
    explicit CorrelatorParseError(const std::string& what) : std::runtime_error(what) {}
};

struct CorrelatorConflict : std::runtime_error {
    explicit CorrelatorConflict(const std::string& what) : std::runtime_error(what) {}
};

// Keyed store of correlator values. Duplicate inserts with equal values are
// idempotent; differing values raise CorrelatorConflict.
class CorrelatorTable {
public:
    void insert(const CorrelatorKey& key, const Rational& value);
    std::optional<Rational> lookup(const CorrelatorKey& key) const;
    size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }

    auto begin() const { return entries_.begin(); }
    auto end() const { return entries_.end(); }

    // JSON file format "gmt-correlators/1":
    //   {"schema":"gmt-correlators/1","entries":[
    //     {"N":7,"k":8,"d":1,"insertions":[1,1,2],"value":"7/2"}, ...]}
    // insertions sorted ascending, each in 0..N-2; value an exact fraction
    // string. Load validates everything and reports the offending entry.
    static CorrelatorTable load(const std::filesystem::path& path);
    void store(const std::filesystem::path& path) const;

    std::string to_json_string() const;
    static CorrelatorTable from_json_string(const std::string& text);

private:
    std::map<CorrelatorKey, Rational> entries_;
};

}  // namespace gmtkit
