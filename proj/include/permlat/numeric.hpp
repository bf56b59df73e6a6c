#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace permlat {

// Exact arithmetic everywhere: arbitrary-precision integers and rationals.
using Int = mpz_class;
using Rat = mpq_class;

// mpq_class(num, den) does not canonicalize on its own.
inline Rat make_rat(const Int& num, const Int& den) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

// floor of a rational
inline Int floor_rat(const Rat& q) {
    return floor_div(q.get_num(), q.get_den());
}

inline Int ceil_rat(const Rat& q) {
    Int c;
    mpz_cdiv_q(c.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return c;
}

// nearest integer, ties broken upward: floor(q + 1/2)
inline Int round_rat(const Rat& q) {
    return floor_rat(q + make_rat(1, 2));
}

// floor of the square root; a must be >= 0
inline Int isqrt(const Int& a) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), a.get_mpz_t());
    return r;
}

inline Int norm_sq(const std::vector<Int>& v) {
    Int s = 0;
    for (const Int& x : v) s += x * x;
    return s;
}

inline bool is_zero_vector(const std::vector<Int>& v) {
    for (const Int& x : v)
        if (x != 0) return false;
    return true;
}

// strict lexicographic order on integer vectors of equal length
inline bool lex_less(const std::vector<Int>& a, const std::vector<Int>& b) {
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return a.size() < b.size();
}

std::string format_int_vector(const std::vector<Int>& v, const char* sep = ",");
std::vector<Int> parse_int_vector(const std::string& text);

}  // namespace permlat
