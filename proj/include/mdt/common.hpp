#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace mdt {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

struct pole_error : std::domain_error {
    using std::domain_error::domain_error;
};

// Raised by eval_even when a canonical form still carries odd v-powers.
struct odd_power_error : std::domain_error {
    using std::domain_error::domain_error;
};

struct budget_error : std::runtime_error {
    Int space;
    budget_error(const std::string& msg, Int sp)
        : std::runtime_error(msg), space(std::move(sp)) {}
};

struct nongeneric_error : std::runtime_error {
    std::vector<int> root;
    nongeneric_error(const std::string& msg, std::vector<int> r)
        : std::runtime_error(msg), root(std::move(r)) {}
};

struct invalid_input : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

inline Int int_gcd(Int a, Int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline Int int_pow(Int b, unsigned e) {
    Int r = 1;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

inline Rat rat_pow(const Rat& b, long e) {
    if (e == 0) return Rat(1);
    Int n = numerator(b), d = denominator(b);
    if (e < 0) {
        if (n == 0) throw pole_error("0 raised to a negative power");
        std::swap(n, d);
        e = -e;
        if (d < 0) { d = -d; n = -n; }
    }
    return Rat(int_pow(n, static_cast<unsigned>(e)), int_pow(d, static_cast<unsigned>(e)));
}

}  // namespace mdt
