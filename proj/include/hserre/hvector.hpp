#pragma once

#include <span>
#include <vector>

#include "hserre/complex.hpp"
#include "hserre/polynomial.hpp"

namespace hserre {

/// Macaulay's bound a^<i>: writes a = C(a_i, i) + C(a_{i-1}, i-1) + ... + C(a_j, j)
/// with a_i > a_{i-1} > ... > a_j >= j >= 1 (greedy, largest term first) and
/// returns C(a_i + 1, i + 1) + ... + C(a_j + 1, j + 1). Zero for a = 0.
/// Throws InvalidIndex when i < 1.
Int macaulay_bound(Int a, int i);

/// True iff v_0 = 1, all entries are nonnegative and v_{i+1} <= v_i^<i> for
/// every i >= 1, i.e. v is the Hilbert function of an order ideal of
/// monomials.
bool is_m_vector(std::span<const Int> v);

/// Entry i (0 <= i <= r) is sum_{k=r}^{d} C(i + k - r, i) h_k.
/// Throws RankOutOfRange unless 2 <= r <= d.
std::vector<Int> gpsy_sums(const HVector& h, int r);

/// False iff some h_i = 0 with i <= r is followed by a nonzero h_k, k > i.
/// Throws RankOutOfRange unless 0 <= r <= d.
bool mt_zero_tail_ok(const HVector& h, int r);

/// The known necessary conditions on the h-vector of an (S_r) complex.
struct ConditionReport {
    int r = 0;
    bool is_m_vector = false;     // (h_0, ..., h_r) is an M-vector
    std::vector<Int> gpsy_sums;   // each must be >= 0
    bool gpsy_nonnegative = false;
    bool mt_zero_tail_ok = false;
    bool all_pass = false;
};

/// Throws RankOutOfRange unless 2 <= r <= d.
ConditionReport check_question_2_6(const HVector& h, int r);

/// (h_0 + h_1 t + ... + h_d t^d) / (1 - t)^d, reduced.
HilbertSeries hilbert_from_h(const HVector& h);
/// sum_k f_{k-1} t^k / (1 - t)^k over the common denominator (1 - t)^d, reduced.
HilbertSeries hilbert_from_f(const FVector& f);

} // namespace hserre
