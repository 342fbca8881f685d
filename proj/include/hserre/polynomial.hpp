#pragma once

#include <string>
#include <vector>

#include "hserre/checked.hpp"

namespace hserre {

/// Integer polynomial in t; coeffs[k] is the coefficient of t^k. Kept
/// trimmed: no trailing zero coefficients, so the zero polynomial is {}.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Int> coeffs);

    static IntPolynomial constant(Int c) { return IntPolynomial({c}); }
    static IntPolynomial monomial(Int c, int degree);
    /// (1 - t)^e
    static IntPolynomial one_minus_t_pow(int e);

    const std::vector<Int>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    Int operator[](int k) const { return k <= degree() ? coeffs_[k] : 0; }
    /// p(1), the sum of the coefficients.
    Int value_at_one() const;

    /// "1 + 2t + t^2 - t^5"
    std::string to_string() const;

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

private:
    std::vector<Int> coeffs_;
};

IntPolynomial add(const IntPolynomial& p, const IntPolynomial& q);
IntPolynomial subtract(const IntPolynomial& p, const IntPolynomial& q);
IntPolynomial multiply(const IntPolynomial& p, const IntPolynomial& q);
/// p / q when q divides p over the integers; throws InexactDivision otherwise
/// (including q = 0).
IntPolynomial exact_divide(const IntPolynomial& p, const IntPolynomial& q);

inline IntPolynomial operator+(const IntPolynomial& p, const IntPolynomial& q) { return add(p, q); }
inline IntPolynomial operator-(const IntPolynomial& p, const IntPolynomial& q) { return subtract(p, q); }
inline IntPolynomial operator*(const IntPolynomial& p, const IntPolynomial& q) { return multiply(p, q); }

/// numerator / (1 - t)^denom_exponent with a nonnegative exponent, always
/// stored reduced: the exponent is 0 or the numerator does not vanish at
/// t = 1. Reduced forms are canonical, so == compares rational functions.
class HilbertSeries {
public:
    HilbertSeries() = default;
    HilbertSeries(IntPolynomial numerator, int denom_exponent);

    const IntPolynomial& numerator() const { return numerator_; }
    int denom_exponent() const { return denom_exponent_; }

    /// "(1 + 2t + t^2) / (1 - t)^2"
    std::string to_string() const;

    friend bool operator==(const HilbertSeries&, const HilbertSeries&) = default;

private:
    IntPolynomial numerator_;
    int denom_exponent_ = 0;
};

HilbertSeries operator+(const HilbertSeries& a, const HilbertSeries& b);
HilbertSeries operator-(const HilbertSeries& a, const HilbertSeries& b);

} // namespace hserre
