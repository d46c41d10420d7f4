#pragma once

// Exact rational scalar type and conversions used throughout the library.
// All geometric predicates are evaluated over these; nothing is ever rounded
// except where a module explicitly documents an approximation.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cliquesep {

using Rat = mpq_class;
using BigInt = mpz_class;

inline Rat rat_of(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Parses an integer or decimal string ("42", "-3.25", "0.125") exactly.
// Anything else (fractions, exponents, hex) is rejected.
inline Rat rat_from_decimal(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty number");
    std::size_t i = 0;
    bool neg = false;
    if (s[i] == '+' || s[i] == '-') {
        neg = s[i] == '-';
        ++i;
    }
    std::string digits;
    std::size_t frac_len = 0;
    bool seen_dot = false, seen_digit = false;
    for (; i < s.size(); ++i) {
        char c = s[i];
        if (c == '.') {
            if (seen_dot) throw std::invalid_argument("bad number: " + s);
            seen_dot = true;
        } else if (c >= '0' && c <= '9') {
            digits.push_back(c);
            if (seen_dot) ++frac_len;
            seen_digit = true;
        } else {
            throw std::invalid_argument("bad number: " + s);
        }
    }
    if (!seen_digit) throw std::invalid_argument("bad number: " + s);
    BigInt num(digits.empty() ? "0" : digits, 10);
    if (neg) num = -num;
    BigInt den = 1;
    for (std::size_t k = 0; k < frac_len; ++k) den *= 10;
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// True iff r has a terminating decimal expansion (denominator 2^a * 5^b).
inline bool rat_has_decimal_form(const Rat& r) {
    BigInt d = r.get_den();
    for (int p : {2, 5})
        while (d % p == 0) d /= p;
    return d == 1;
}

// Exact decimal rendering; requires rat_has_decimal_form(r).
inline std::string rat_to_decimal(const Rat& r) {
    BigInt den = r.get_den();
    unsigned a = 0, b = 0;
    BigInt d = den;
    while (d % 2 == 0) { d /= 2; ++a; }
    while (d % 5 == 0) { d /= 5; ++b; }
    if (d != 1) throw std::domain_error("rational has no finite decimal form");
    unsigned k = std::max(a, b);
    BigInt scale = 1;
    for (unsigned i = 0; i < k; ++i) scale *= 10;
    BigInt scaled = r.get_num() * (scale / den);
    bool neg = scaled < 0;
    if (neg) scaled = -scaled;
    std::string digits = scaled.get_str();
    std::string out;
    if (k == 0) {
        out = digits;
    } else {
        if (digits.size() <= k) digits.insert(0, k + 1 - digits.size(), '0');
        out = digits.substr(0, digits.size() - k) + "." + digits.substr(digits.size() - k);
        // trim trailing zeros of the fraction part, but keep at least one digit
        while (out.back() == '0') out.pop_back();
        if (out.back() == '.') out.pop_back();
    }
    return neg ? "-" + out : out;
}

inline std::string rat_key(const Rat& r) { return r.get_str(); }

inline double rat_to_double(const Rat& r) { return r.get_d(); }

inline int sign(const Rat& r) { return sgn(r); }

}  // namespace cliquesep
