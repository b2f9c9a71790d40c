#pragma once

#include <vector>

#include <gmpxx.h>

#include "polyfault/grid.hpp"

namespace polyfault {

// Dense integer polynomial, coefficient of z^k at index k, trailing zeros
// trimmed. degree() of the zero polynomial is -1.
class IntPoly {
public:
    IntPoly() = default;
    IntPoly(std::initializer_list<long> coeffs);
    explicit IntPoly(std::vector<mpz_class> coeffs);

    static IntPoly zero() { return IntPoly(); }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    mpz_class coeff(int k) const;
    const std::vector<mpz_class>& coeffs() const { return coeffs_; }

    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly operator*(const mpz_class& s) const;
    friend bool operator==(const IntPoly&, const IntPoly&) = default;

    IntPoly shifted(int k) const;        // multiply by z^k
    IntPoly divided_by_z(int k) const;   // exact; throws if ord < k
    IntPoly scaled_arg(const mpz_class& a) const;  // z -> a*z
    IntPoly squared_arg() const;         // z -> z^2
    bool even_only() const;              // no odd-degree terms
    IntPoly halved_arg() const;          // z^2 -> z; requires even_only()

private:
    void trim();
    std::vector<mpz_class> coeffs_;
};

// Ratio of integer polynomials with nonzero constant term in the denominator,
// viewed as a formal power series. No gcd normalization: equality is decided
// by cross-multiplication and coefficients are extracted via the linear
// recurrence the denominator induces.
class RationalGF {
public:
    RationalGF();  // zero
    RationalGF(IntPoly num, IntPoly den);

    const IntPoly& num() const { return num_; }
    const IntPoly& den() const { return den_; }

    RationalGF operator+(const RationalGF& o) const;
    RationalGF operator-(const RationalGF& o) const;
    RationalGF operator*(const RationalGF& o) const;
    bool equals(const RationalGF& o) const;
    bool is_zero() const { return num_.is_zero(); }

    RationalGF times_z(int k = 1) const;
    RationalGF div_z(int k = 1) const;              // numerator must vanish to order k
    RationalGF times_scalar(const mpz_class& s) const;
    RationalGF div_scalar(const mpz_class& s) const;  // exact as a rational function
    RationalGF scaled_arg(const mpz_class& a) const;  // z -> a*z
    RationalGF squared_arg() const;                   // z -> z^2
    RationalGF squared_arg_over4() const;             // z -> z^2/4, kept integral
    RationalGF even_part() const;                     // (g(z) + g(-z)) / 2
    bool even_only() const;                           // num and den even polynomials
    RationalGF halved_arg() const;                    // z^2 -> z

    // Exact coefficient of z^t. Throws on negative t; asserts integrality.
    mpz_class coeff(long t) const;

private:
    IntPoly num_, den_;
};

// --- printed generating functions and closed forms ---

RationalGF gf_5x3t();     // G: faultfree tilings of R(5,3t), coefficient of z^t
RationalGF gf_5x3t_g1();  // G1
RationalGF gf_5x3t_g2();  // G2; the identity G = 8z*G1 + 4z*G2 holds exactly

// Faultfree tilings of R(4,3t): 2 for t = 2, 8*6^(t-3) for t >= 3.
mpz_class closed_form_4x3t(long t);

// Lower bound 128*(t+1)*144^(t-2) on faultfree tilings of R(6,6t), t >= 2.
mpz_class lower_bound_6x6t(long t);
RationalGF q_6x6t();  // one-sided extensions: 384z^2/(1-144z)
RationalGF f_6x6t();  // both sides:           384z^2(1-96z)/(1-144z)^2

// Q^2/(4cz) + Q. Requires the series of q to start at z^2 or later.
RationalGF both_sides(const RationalGF& q, const mpz_class& c);

struct SevenBySixSystem {
    RationalGF H, S, T, J, K, P;
};
SevenBySixSystem system_7x6t();

struct MooreGfs {
    RationalGF g1p, g3p;  // five-row pattern generating functions
};
MooreGfs moore_gfs();

// Lower-bound generating function for faultfree tilings of R(7,6t): only
// even powers are populated and the coefficient of z^(2t) counts tilings.
struct SevenBySixGf {
    RationalGF L, M, Q1, A, B, Q2, F;
};
SevenBySixGf gf_7x6t();

// Fisher-Temperley / Kasteleyn product for N_D(2a, 2b), evaluated in
// high-precision floating point and rounded; retries with more bits until the
// value is unambiguously close to an integer.
mpz_class kasteleyn(int a, int b);

struct BoundReport {
    Rect rect;
    mpz_class tromino_count;
    mpz_class domino_wide;  // N_D(m, 2n)
    mpz_class domino_tall;  // N_D(2m, n)
    mpz_class upper_bound;  // 2^(4mn/3) * min(domino_wide, domino_tall)
    bool holds = false;
};

// Theorem-9 upper bound N_T(m,n) <= 2^(4mn/3) * min(N_D(m,2n), N_D(2m,n)).
BoundReport tromino_upper_bound(int m, int n);

}  // namespace polyfault
