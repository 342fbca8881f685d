#include <doctest.h>

#include "hserre/error.hpp"
#include "hserre/polynomial.hpp"

using namespace hserre;

namespace {
IntPolynomial P(std::vector<Int> c) { return IntPolynomial(std::move(c)); }
}

TEST_CASE("polynomial arithmetic") {
    CHECK(exact_divide(P({1, 0, -1}), P({1, -1})) == P({1, 1}));
    CHECK(multiply(P({1, 1}), P({1, -1})) == P({1, 0, -1}));
    CHECK(exact_divide(P({1, 1, -1, 0, 0, -2, 1}), P({1, -1})) == P({1, 2, 1, 1, 1, -1}));
    CHECK(add(P({1, 2}), P({-1, -2})).is_zero());
    CHECK(subtract(P({0, 0, 3}), P({0, 0, 3})).degree() == -1);
    CHECK(P({1, 2, 0, 0}).coeffs() == std::vector<Int>{1, 2});
    CHECK(IntPolynomial::monomial(3, 4)[4] == 3);
    CHECK(IntPolynomial::one_minus_t_pow(3) == P({1, -3, 3, -1}));
    CHECK(P({1, 2, 1, 1, 1, -1}).value_at_one() == 5);
    CHECK(P({1, 2, 1, 1, 1, -1}).to_string() == "1 + 2t + t^2 + t^3 + t^4 - t^5");
    CHECK(P({}).to_string() == "0");
    CHECK(P({0, -3}).to_string() == "-3t");
}

TEST_CASE("exact division errors") {
    CHECK_THROWS_AS(exact_divide(P({1, 0, 1}), P({1, -1})), Error);
    try {
        exact_divide(P({1}), P({0, 2}));
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::InexactDivision);
    }
    CHECK_THROWS_AS(exact_divide(P({1}), P({})), Error);
    CHECK(exact_divide(P({}), P({1, 1})).is_zero());
}

TEST_CASE("overflow is reported, not wrapped") {
    const Int big = Int{1} << 62;
    CHECK_THROWS_AS(add(P({big}), P({big})), Error);
    CHECK_THROWS_AS(multiply(P({big}), P({4})), Error);
}

TEST_CASE("Hilbert series reduce to a canonical form") {
    // (1 - t^2) / (1 - t)^3 = (1 + t) / (1 - t)^2
    const HilbertSeries a(P({1, 0, -1}), 3);
    CHECK(a.numerator() == P({1, 1}));
    CHECK(a.denom_exponent() == 2);
    CHECK(a == HilbertSeries(P({1, 1}), 2));
    CHECK(a.numerator().value_at_one() != 0);

    const HilbertSeries whole(P({1, -2, 1}), 2);
    CHECK(whole.numerator() == P({1}));
    CHECK(whole.denom_exponent() == 0);

    // A polynomial stays a polynomial.
    const HilbertSeries poly(P({1, -1}), 0);
    CHECK(poly.denom_exponent() == 0);
    CHECK(poly.numerator() == P({1, -1}));

    CHECK(HilbertSeries(P({1, 2, 1, 1, 1, -1}), 5).to_string() == "(1 + 2t + t^2 + t^3 + t^4 - t^5) / (1 - t)^5");
    CHECK(HilbertSeries(P({1}), 1).to_string() == "(1) / (1 - t)");
    CHECK(HilbertSeries(P({1, 1}), 0).to_string() == "(1 + t)");

    // 1/(1-t) + t/(1-t)^2 - 1/(1-t)^2 = 0
    const HilbertSeries s = HilbertSeries(P({1}), 1) + HilbertSeries(P({0, 1}), 2) - HilbertSeries(P({1}), 2);
    CHECK(s.numerator().is_zero());
}
