#include "hserre/hvector.hpp"

#include <algorithm>
#include <string>

namespace hserre {

Int macaulay_bound(Int a, int i) {
    if (i < 1)
        throw Error(ErrorCode::InvalidIndex, "Macaulay index must be positive, got " + std::to_string(i));
    if (a < 0)
        throw Error(ErrorCode::InvalidIndex, "Macaulay bound of a negative value");
    Int bound = 0;
    Int rest = a;
    for (int j = i; j >= 1 && rest > 0; --j) {
        // Largest top with C(top, j) <= rest; top >= j since C(j, j) = 1 <= rest.
        Int top = j == 1 ? rest : j;
        while (binomial(top + 1, j) <= rest)
            ++top;
        rest -= binomial(top, j);
        bound = checked_add(bound, binomial(top + 1, j + 1));
    }
    return bound;
}

bool is_m_vector(std::span<const Int> v) {
    if (v.empty() || v[0] != 1)
        return false;
    if (std::any_of(v.begin(), v.end(), [](Int x) { return x < 0; }))
        return false;
    for (std::size_t i = 1; i + 1 < v.size(); ++i) {
        if (v[i + 1] > macaulay_bound(v[i], static_cast<int>(i)))
            return false;
    }
    return true;
}

std::vector<Int> gpsy_sums(const HVector& h, int r) {
    const int d = h.d();
    if (r < 2 || r > d)
        throw Error(ErrorCode::RankOutOfRange,
                    "r = " + std::to_string(r) + " outside 2.." + std::to_string(d));
    std::vector<Int> sums(r + 1, 0);
    for (int i = 0; i <= r; ++i) {
        Int acc = 0;
        for (int k = r; k <= d; ++k)
            acc = checked_add(acc, checked_mul(binomial(i + k - r, i), h[k]));
        sums[i] = acc;
    }
    return sums;
}

bool mt_zero_tail_ok(const HVector& h, int r) {
    const int d = h.d();
    if (r < 0 || r > d)
        throw Error(ErrorCode::RankOutOfRange,
                    "r = " + std::to_string(r) + " outside 0.." + std::to_string(d));
    for (int i = 0; i <= r; ++i) {
        if (h[i] != 0)
            continue;
        for (int k = i + 1; k <= d; ++k)
            if (h[k] != 0)
                return false;
        return true;
    }
    return true;
}

ConditionReport check_question_2_6(const HVector& h, int r) {
    ConditionReport report;
    report.r = r;
    report.gpsy_sums = gpsy_sums(h, r);
    report.gpsy_nonnegative = std::all_of(report.gpsy_sums.begin(), report.gpsy_sums.end(),
                                          [](Int s) { return s >= 0; });
    report.is_m_vector = is_m_vector(std::span<const Int>(h.entries).first(r + 1));
    report.mt_zero_tail_ok = mt_zero_tail_ok(h, r);
    report.all_pass = report.is_m_vector && report.gpsy_nonnegative && report.mt_zero_tail_ok;
    return report;
}

HilbertSeries hilbert_from_h(const HVector& h) {
    return HilbertSeries(IntPolynomial(h.entries), h.d());
}

HilbertSeries hilbert_from_f(const FVector& f) {
    const int d = f.d();
    IntPolynomial numerator;
    for (int k = 0; k <= d; ++k)
        numerator = numerator + IntPolynomial::monomial(f[k], k) * IntPolynomial::one_minus_t_pow(d - k);
    return HilbertSeries(numerator, d);
}

} // namespace hserre
