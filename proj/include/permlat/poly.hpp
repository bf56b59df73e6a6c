#pragma once

#include <string>
#include <vector>

#include "permlat/numeric.hpp"
#include "permlat/perm.hpp"

namespace permlat {

// Polynomial with exact integer coefficients, stored lowest degree first.
// Trailing zeros are stripped; the zero polynomial has no coefficients and
// degree -1.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Int> coeffs);
    IntPolynomial(std::initializer_list<long> coeffs);

    static IntPolynomial zero() { return IntPolynomial(); }
    static IntPolynomial one() { return IntPolynomial({1}); }
    static IntPolynomial t_power_minus_one(int k);       // t^k - 1

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    Int coeff(int i) const;                              // 0 beyond the stored range
    const Int& leading() const;
    const std::vector<Int>& coefficients() const { return coeffs_; }
    bool is_monic() const { return !is_zero() && leading() == 1; }

    IntPolynomial operator+(const IntPolynomial& g) const;
    IntPolynomial operator-(const IntPolynomial& g) const;
    IntPolynomial operator*(const IntPolynomial& g) const;
    bool operator==(const IntPolynomial& g) const { return coeffs_ == g.coeffs_; }
    bool operator!=(const IntPolynomial& g) const { return !(*this == g); }

    // exact quotient by a monic divisor; throws if the division leaves a remainder
    IntPolynomial divide_exact_by_monic(const IntPolynomial& divisor) const;

    std::string to_string() const;                       // "t^3 - t - 1"
    static IntPolynomial parse(const std::string& text);

private:
    std::vector<Int> coeffs_;
    void normalize();
};

// Rational-coefficient polynomial; used for vectors over Q and for the gcd
// internals. Same storage convention as IntPolynomial.
class RatPolynomial {
public:
    struct DivMod;

    RatPolynomial() = default;
    explicit RatPolynomial(std::vector<Rat> coeffs);
    explicit RatPolynomial(const IntPolynomial& p);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    Rat coeff(int i) const;
    const std::vector<Rat>& coefficients() const { return coeffs_; }

    RatPolynomial operator-(const RatPolynomial& g) const;
    RatPolynomial operator*(const Rat& c) const;
    bool operator==(const RatPolynomial& g) const { return coeffs_ == g.coeffs_; }

    // polynomial division over Q: *this = q * divisor + r with deg r < deg divisor
    DivMod divmod(const RatPolynomial& divisor) const;

private:
    std::vector<Rat> coeffs_;
    void normalize();
};

struct RatPolynomial::DivMod {
    RatPolynomial quotient, remainder;
};

unsigned long euler_phi(unsigned long d);

// d-th cyclotomic polynomial, monic of degree phi(d); memoized
IntPolynomial cyclotomic(int d);

// characteristic polynomial of the permutation matrix: prod (t^{k_i} - 1)
IntPolynomial char_poly(const CycleType& ct);

// minimal polynomial: product of Phi_d over the distinct d dividing some k_i
// (the squarefree part of char_poly)
IntPolynomial min_poly(const CycleType& ct);

// Generic orbit rank of a cycle type. o_generic is the number of distinct
// eigenvalues of the permutation matrix (= deg min_poly). pairwise_value
// is n - sum over pairs i<j of sum_{d | gcd(k_i,k_j)} phi(d), each divisor
// counted per pair; the two disagree for some types with three or more cycles
// sharing divisors, so callers must treat pairwise_value as a reported
// quantity only.
struct GenericOrder {
    int o_generic;
    long pairwise_value;
    bool agreement;
};
GenericOrder generic_order(const CycleType& ct);

// exact divisibility over Q; f must be nonzero
bool poly_divides(const IntPolynomial& f, const IntPolynomial& g);

// gcd over Q, returned as the primitive integer polynomial with positive
// leading coefficient (monic whenever the inputs divide a monic polynomial,
// e.g. divisors of t^n - 1). Throws if both inputs are zero.
IntPolynomial poly_gcd(const IntPolynomial& f, const IntPolynomial& g);

// a(t) = sum a_i t^{i-1}
RatPolynomial vector_to_poly(const std::vector<Rat>& a);
IntPolynomial vector_to_poly(const std::vector<Int>& a);

}  // namespace permlat
