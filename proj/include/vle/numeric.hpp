#ifndef VLE_NUMERIC_HPP_
#define VLE_NUMERIC_HPP_

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace vle {

// All feasibility verdicts are computed in exact arithmetic; doubles appear
// only in spectral estimates and final CLI output.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// n^e for integer n (possibly negative or zero), with the 0^0 = 1 convention.
inline Int ipow(const Int& n, int e) {
    if (e < 0) throw Error("ipow: negative exponent");
    Int r = 1, b = n;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

}  // namespace vle

#endif
