#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <sstream>
#include <string>

namespace kk {

// Exact rational coefficients. No floating point anywhere in this library.
using Rat = boost::multiprecision::cpp_rational;
using Int = boost::multiprecision::cpp_int;

// Renders as "p" or "p/q" (cpp_rational keeps gcd-reduced form internally).
inline std::string rat_string(const Rat& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

}  // namespace kk
