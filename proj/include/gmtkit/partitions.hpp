#pragma once

#include <string>
#include <vector>

#include "gmtkit/rational.hpp"

namespace gmtkit {

// Integer partition sigma = (g_1 <= g_2 <= ... <= g_l) of g = sum g_i.
struct Partition {
    std::vector<int> parts;  // non-decreasing, each >= 1

    int sum() const;
    int length() const { return static_cast<int>(parts.size()); }
    std::string str() const;  // "1+1+2"

    bool operator==(const Partition& o) const { return parts == o.parts; }
};

// All partitions of g, each exactly once, in lexicographic order of the
// sorted part tuples. Throws std::invalid_argument for g < 1.
std::vector<Partition> enumerate_partitions(int g);

// Number of parts equal to i.
int multiplicity(int i, const Partition& sigma);

// S(sigma) = prod_i 1/mul(i, sigma)!.
Rational symmetry_factor(const Partition& sigma);

}  // namespace gmtkit
