#include "hserre/polynomial.hpp"

#include <algorithm>

namespace hserre {

namespace {

void trim(std::vector<Int>& c) {
    while (!c.empty() && c.back() == 0)
        c.pop_back();
}

} // namespace

IntPolynomial::IntPolynomial(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { trim(coeffs_); }

IntPolynomial IntPolynomial::monomial(Int c, int degree) {
    std::vector<Int> coeffs(degree + 1, 0);
    coeffs[degree] = c;
    return IntPolynomial(std::move(coeffs));
}

IntPolynomial IntPolynomial::one_minus_t_pow(int e) {
    std::vector<Int> coeffs(e + 1, 0);
    for (int k = 0; k <= e; ++k)
        coeffs[k] = k % 2 == 0 ? binomial(e, k) : -binomial(e, k);
    return IntPolynomial(std::move(coeffs));
}

Int IntPolynomial::value_at_one() const {
    Int sum = 0;
    for (Int c : coeffs_)
        sum = checked_add(sum, c);
    return sum;
}

std::string IntPolynomial::to_string() const {
    if (coeffs_.empty())
        return "0";
    std::string out;
    for (int k = 0; k <= degree(); ++k) {
        const Int c = coeffs_[k];
        if (c == 0)
            continue;
        const Int mag = c < 0 ? -c : c;
        if (out.empty())
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        if (mag != 1 || k == 0)
            out += std::to_string(mag);
        if (k >= 1)
            out += "t";
        if (k >= 2)
            out += "^" + std::to_string(k);
    }
    return out;
}

IntPolynomial add(const IntPolynomial& p, const IntPolynomial& q) {
    std::vector<Int> c(std::max(p.coeffs().size(), q.coeffs().size()), 0);
    for (std::size_t k = 0; k < c.size(); ++k)
        c[k] = checked_add(p[static_cast<int>(k)], q[static_cast<int>(k)]);
    return IntPolynomial(std::move(c));
}

IntPolynomial subtract(const IntPolynomial& p, const IntPolynomial& q) {
    std::vector<Int> c(std::max(p.coeffs().size(), q.coeffs().size()), 0);
    for (std::size_t k = 0; k < c.size(); ++k)
        c[k] = checked_sub(p[static_cast<int>(k)], q[static_cast<int>(k)]);
    return IntPolynomial(std::move(c));
}

IntPolynomial multiply(const IntPolynomial& p, const IntPolynomial& q) {
    if (p.is_zero() || q.is_zero())
        return {};
    std::vector<Int> c(p.coeffs().size() + q.coeffs().size() - 1, 0);
    for (int i = 0; i <= p.degree(); ++i)
        for (int j = 0; j <= q.degree(); ++j)
            c[i + j] = checked_add(c[i + j], checked_mul(p[i], q[j]));
    return IntPolynomial(std::move(c));
}

IntPolynomial exact_divide(const IntPolynomial& p, const IntPolynomial& q) {
    if (q.is_zero())
        throw Error(ErrorCode::InexactDivision, "division by the zero polynomial");
    if (p.is_zero())
        return {};
    if (p.degree() < q.degree())
        throw Error(ErrorCode::InexactDivision, q.to_string() + " does not divide " + p.to_string());
    std::vector<Int> rem = p.coeffs();
    std::vector<Int> quot(p.degree() - q.degree() + 1, 0);
    const Int lead = q[q.degree()];
    for (int k = p.degree() - q.degree(); k >= 0; --k) {
        const Int top = rem[k + q.degree()];
        if (top % lead != 0)
            throw Error(ErrorCode::InexactDivision, q.to_string() + " does not divide " + p.to_string());
        const Int factor = top / lead;
        quot[k] = factor;
        for (int j = 0; j <= q.degree(); ++j)
            rem[k + j] = checked_sub(rem[k + j], checked_mul(factor, q[j]));
    }
    if (std::any_of(rem.begin(), rem.end(), [](Int c) { return c != 0; }))
        throw Error(ErrorCode::InexactDivision, q.to_string() + " does not divide " + p.to_string());
    return IntPolynomial(std::move(quot));
}

HilbertSeries::HilbertSeries(IntPolynomial numerator, int denom_exponent)
    : numerator_(std::move(numerator)), denom_exponent_(denom_exponent) {
    if (numerator_.is_zero()) {
        denom_exponent_ = 0;
        return;
    }
    if (denom_exponent_ < 0) {
        numerator_ = multiply(numerator_, IntPolynomial::one_minus_t_pow(-denom_exponent_));
        denom_exponent_ = 0;
    }
    const IntPolynomial one_minus_t({1, -1});
    // A numerator vanishing at t = 1 has (1 - t) as a factor.
    while (denom_exponent_ > 0 && numerator_.value_at_one() == 0) {
        numerator_ = exact_divide(numerator_, one_minus_t);
        --denom_exponent_;
    }
}

std::string HilbertSeries::to_string() const {
    const std::string num = "(" + numerator_.to_string() + ")";
    if (denom_exponent_ == 0)
        return num;
    if (denom_exponent_ == 1)
        return num + " / (1 - t)";
    return num + " / (1 - t)^" + std::to_string(denom_exponent_);
}

namespace {

// Rewrites both series over (1 - t)^e with e the larger exponent.
std::pair<IntPolynomial, IntPolynomial> common_numerators(const HilbertSeries& a, const HilbertSeries& b,
                                                          int& e) {
    e = std::max(a.denom_exponent(), b.denom_exponent());
    return {multiply(a.numerator(), IntPolynomial::one_minus_t_pow(e - a.denom_exponent())),
            multiply(b.numerator(), IntPolynomial::one_minus_t_pow(e - b.denom_exponent()))};
}

} // namespace

HilbertSeries operator+(const HilbertSeries& a, const HilbertSeries& b) {
    int e = 0;
    auto [p, q] = common_numerators(a, b, e);
    return HilbertSeries(add(p, q), e);
}

HilbertSeries operator-(const HilbertSeries& a, const HilbertSeries& b) {
    int e = 0;
    auto [p, q] = common_numerators(a, b, e);
    return HilbertSeries(subtract(p, q), e);
}

} // namespace hserre
