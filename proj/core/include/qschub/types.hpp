#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace boost {

// Boost 1.74 mixed int/rational<int64_t> equality recurses under C++20 rewritten comparisons.
inline bool operator==(const rational<std::int64_t>& a, int b) { return a == rational<std::int64_t>(b); }
inline bool operator==(int b, const rational<std::int64_t>& a) { return a == rational<std::int64_t>(b); }

}  // namespace boost

namespace qschub {

using Rational = boost::rational<std::int64_t>;
using IntVector = std::vector<int>;
using IntMatrix = std::vector<IntVector>;
using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;

// Coordinates in the fundamental-weight basis.
using Weight = IntVector;

class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class ConstructionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class VerificationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Weight add(const Weight& x, const Weight& y, int k = 1);

std::string to_string(const Rational& r);
std::string to_string(const IntVector& v);

}  // namespace qschub
