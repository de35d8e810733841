#pragma once

#include <stdexcept>
#include <string>

namespace gmtkit {

// Polynomial division left a nonzero remainder where an exact quotient was
// required.
struct NonExactDivision : std::runtime_error {
    explicit NonExactDivision(const std::string& what) : std::runtime_error(what) {}
};

struct ZeroConstantTerm : std::invalid_argument {
    explicit ZeroConstantTerm(const std::string& what) : std::invalid_argument(what) {}
};

struct NonzeroConstantTerm : std::invalid_argument {
    explicit NonzeroConstantTerm(const std::string& what) : std::invalid_argument(what) {}
};

// The ideal-membership search for a pure power H_i^M ran past its bound.
// Cannot happen for a well-formed ring; indicates a bug.
struct CertificateNotFound : std::logic_error {
    explicit CertificateNotFound(const std::string& what) : std::logic_error(what) {}
};

}  // namespace gmtkit
