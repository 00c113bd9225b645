#ifndef LAYGRAPH_SERIES_HPP
#define LAYGRAPH_SERIES_HPP

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "laygraph/error.hpp"

namespace laygraph {

/// Arbitrary-precision integer used for every coefficient in the library.
using Int = boost::multiprecision::cpp_int;

/// Dense univariate polynomial with integer coefficients.
///
/// coeffs()[k] is the coefficient of t^k. Trailing zeros are stripped on
/// construction, so the zero polynomial has an empty coefficient vector and
/// no degree.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs);
    IntPoly(std::initializer_list<long long> coeffs);

    static IntPoly constant(Int c);
    /// c * t^degree
    static IntPoly monomial(Int c, std::size_t degree);

    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// Degree of a nonzero polynomial. Throws OutOfRange for zero.
    std::size_t degree() const;
    /// Coefficient of t^k; zero beyond the degree.
    Int coeff(std::size_t k) const;
    const std::vector<Int>& coeffs() const noexcept { return coeffs_; }

    Int evaluate(const Int& x) const;

    IntPoly& operator+=(const IntPoly& rhs);
    IntPoly& operator-=(const IntPoly& rhs);
    IntPoly& operator*=(const IntPoly& rhs);

    friend IntPoly operator+(IntPoly lhs, const IntPoly& rhs) { return lhs += rhs; }
    friend IntPoly operator-(IntPoly lhs, const IntPoly& rhs) { return lhs -= rhs; }
    friend IntPoly operator*(const IntPoly& lhs, const IntPoly& rhs);
    friend IntPoly operator-(const IntPoly& p);
    friend bool operator==(const IntPoly&, const IntPoly&) = default;

private:
    void normalize();

    std::vector<Int> coeffs_;
};

IntPoly pow(const IntPoly& base, unsigned exponent);

/// p(t) -> p(-t).
IntPoly substitute_neg(const IntPoly& p);

/// Returns r with q * r == p. Throws SeriesError(NotDivisible) when no
/// integer polynomial r exists, and OutOfRange when q is zero.
IntPoly div_exact(const IntPoly& p, const IntPoly& q);

/// Power series known through t^truncation.
class IntSeries {
public:
    /// The constant series 0 truncated at 0.
    IntSeries() : coeffs_(1) {}
    /// Pads or cuts coeffs to exactly truncation + 1 entries.
    IntSeries(std::vector<Int> coeffs, std::size_t truncation);

    static IntSeries from_poly(const IntPoly& p, std::size_t truncation);
    static IntSeries one(std::size_t truncation);

    std::size_t truncation() const noexcept { return coeffs_.size() - 1; }
    const std::vector<Int>& coeffs() const noexcept { return coeffs_; }
    const Int& operator[](std::size_t k) const { return coeffs_.at(k); }

    /// Drops all terms above the polynomial view; exact only when the
    /// caller knows the series terminates.
    IntPoly to_poly() const { return IntPoly(coeffs_); }
    IntSeries truncated(std::size_t truncation) const;

    IntSeries& operator+=(const IntSeries& rhs);
    IntSeries& operator-=(const IntSeries& rhs);

    friend IntSeries operator+(IntSeries lhs, const IntSeries& rhs) { return lhs += rhs; }
    friend IntSeries operator-(IntSeries lhs, const IntSeries& rhs) { return lhs -= rhs; }
    friend IntSeries operator*(const IntSeries& lhs, const IntSeries& rhs);
    friend IntSeries operator*(const IntPoly& lhs, const IntSeries& rhs);
    friend bool operator==(const IntSeries&, const IntSeries&) = default;

private:
    std::vector<Int> coeffs_;
};

/// Multiplicative inverse up to the truncation. The constant term must be
/// +1 or -1, otherwise SeriesError(NonUnitConstantTerm) is thrown.
IntSeries inverse(const IntSeries& s);

/// s(t) -> s(-t).
IntSeries substitute_neg(const IntSeries& s);

/// num / den with den(0) == 1.
class RationalFn {
public:
    RationalFn(IntPoly numerator, IntPoly denominator);

    const IntPoly& numerator() const noexcept { return num_; }
    const IntPoly& denominator() const noexcept { return den_; }

    IntSeries expand(std::size_t truncation) const;

private:
    IntPoly num_;
    IntPoly den_;
};

/// "1 - 4t + 4t^2 - t^3"; "0" for the zero polynomial.
std::string to_string(const IntPoly& p);
/// "1 + 3t + 8t^2 + O(t^3)".
std::string to_string(const IntSeries& s);

}  // namespace laygraph

#endif  // LAYGRAPH_SERIES_HPP
