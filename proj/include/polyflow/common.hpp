#ifndef POLYFLOW_COMMON_HPP
#define POLYFLOW_COMMON_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace polyflow {

using Integer = mpz_class;
using Rational = mpq_class;

// Malformed user input (bad JSON, invalid partition, non-monotone point, ...).
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A documented precondition of an operation was violated by the caller.
class ContractError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// An internal consistency check failed; indicates a bug rather than bad input.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// All weak compositions of `total` into `parts` nonnegative parts, in
// colexicographic order (compare from the last part).
std::vector<std::vector<int>> weak_compositions(int total, int parts);

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);
Integer catalan(unsigned n);

inline std::string to_string(const Integer& value) { return value.get_str(); }
inline std::string to_string(const Rational& value) { return value.get_str(); }

} // namespace polyflow

#endif
