#include "gmtkit/partitions.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace gmtkit {

int Partition::sum() const { return std::accumulate(parts.begin(), parts.end(), 0); }

std::string Partition::str() const {
    std::ostringstream os;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) os << "+";
        os << parts[i];
    }
    return os.str();
}

namespace {

void extend(int remaining, int min_part, std::vector<int>& cur, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition{cur});
        return;
    }
    for (int p = min_part; p <= remaining; ++p) {
        cur.push_back(p);
        extend(remaining - p, p, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int g) {
    if (g < 1) throw std::invalid_argument("enumerate_partitions: g must be >= 1");
    std::vector<Partition> out;
    std::vector<int> cur;
    extend(g, 1, cur, out);
    return out;
}

int multiplicity(int i, const Partition& sigma) {
    int n = 0;
    for (int p : sigma.parts)
        if (p == i) ++n;
    return n;
}

Rational symmetry_factor(const Partition& sigma) {
    Rational s(1);
    int run = 1;
    for (size_t j = 1; j <= sigma.parts.size(); ++j) {
        if (j < sigma.parts.size() && sigma.parts[j] == sigma.parts[j - 1]) {
            ++run;
        } else {
            s /= Rational::factorial(static_cast<unsigned long>(run));
            run = 1;
        }
    }
    return s;
}

}  // namespace gmtkit
