#pragma once

// Truncated formal power series over exact rationals, and the exponential
// generating functions of the avoidance counts.
//
// A series of order N stores the coefficients of x^0 .. x^N. Binary
// operations on series of different orders truncate to the smaller order.

#include "signedpat/numeric.hpp"

#include <span>
#include <string>
#include <vector>

namespace signedpat {

inline constexpr int kDefaultSeriesOrder = 24;

class PowerSeries {
public:
    /// The zero series of the given order.
    explicit PowerSeries(int order = kDefaultSeriesOrder);
    /// Coefficients beyond `order` are dropped, missing ones are zero.
    PowerSeries(std::vector<Rational> coeffs, int order);

    static PowerSeries constant(const Rational& c, int order);
    /// The series x.
    static PowerSeries variable(int order);
    /// a + b·x
    static PowerSeries linear(const Rational& a, const Rational& b, int order);

    int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    const Rational& operator[](int i) const { return coeffs_.at(i); }
    std::span<const Rational> coeffs() const noexcept { return coeffs_; }
    PowerSeries truncated(int order) const;

    /// `1 + 2*x + 7/2*x^2`
    std::string to_string() const;

    bool operator==(const PowerSeries&) const = default;

private:
    std::vector<Rational> coeffs_;
};

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
PowerSeries operator-(const PowerSeries& a);
PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
PowerSeries operator*(const Rational& c, const PowerSeries& a);
/// Throws SingularDivisionError when b has zero constant term.
PowerSeries operator/(const PowerSeries& a, const PowerSeries& b);

inline PowerSeries ps_add(const PowerSeries& a, const PowerSeries& b) { return a + b; }
inline PowerSeries ps_mul(const PowerSeries& a, const PowerSeries& b) { return a * b; }
inline PowerSeries ps_scale(const PowerSeries& a, const Rational& c) { return c * a; }
inline PowerSeries ps_div(const PowerSeries& a, const PowerSeries& b) { return a / b; }

/// exp(a); requires a(0) = 0.
PowerSeries ps_exp(const PowerSeries& a);
/// log(a); requires a(0) = 1.
PowerSeries ps_log(const PowerSeries& a);
/// a^e = exp(e·log a); requires a(0) = 1.
PowerSeries ps_pow_rational(const PowerSeries& a, const Rational& e);
/// Antiderivative with zero constant term. The x^N coefficient of the input
/// would land on x^{N+1} and is lost, so only orders 0..N of the result are
/// exact as an antiderivative of the truncated input.
PowerSeries ps_integrate(const PowerSeries& a);
/// Term-by-term derivative; the result has order N-1 (order 0 for N = 0).
PowerSeries ps_derivative(const PowerSeries& a);

/// d_r(x) = exp(x/(1-(r-1)x)) / (1-(r-1)x).
PowerSeries egf_d(int r, int order = kDefaultSeriesOrder);
/// EGF of |E_n^r({(1^b,2^a_1),...,(1^b,2^a_l)})|; at l = 1 this is d_r(x).
PowerSeries egf_chain(int r, int l, int order = kDefaultSeriesOrder);
/// (1 + ∫ d_{r-1}(x)^2 dx) / (1-(r-1)x), r >= 3.
PowerSeries egf_case3(int r, int order = kDefaultSeriesOrder);
/// (1 + ∫ d_{r-1}(x)/(1-(r-1)x) dx) / (1-(r-1)x), r >= 2.
PowerSeries egf_case4(int r, int order = kDefaultSeriesOrder);

/// n!·[x^n]f for n = 0..nmax. Throws IntegralityError if any product is not
/// an integer.
std::vector<BigInt> egf_to_counts(const PowerSeries& f, int nmax);

} // namespace signedpat
