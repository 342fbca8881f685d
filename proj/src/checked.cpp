#include "hserre/checked.hpp"

#include <array>
#include <limits>

namespace hserre {

namespace {

// Every C(n, k) with n < 67 fits in 63 bits.
constexpr int kPascalRows = 67;

using PascalTable = std::array<std::array<Int, kPascalRows>, kPascalRows>;

constexpr PascalTable make_pascal() {
    PascalTable t{};
    for (int n = 0; n < kPascalRows; ++n) {
        t[n][0] = 1;
        for (int k = 1; k <= n; ++k)
            t[n][k] = t[n - 1][k - 1] + (k < n ? t[n - 1][k] : 0);
    }
    return t;
}

constexpr PascalTable kPascal = make_pascal();

} // namespace

Int binomial(Int n, Int k) {
    if (n < 0 || k < 0 || k > n)
        return 0;
    if (n < kPascalRows)
        return kPascal[n][k];
    if (k > n - k)
        k = n - k;
    // result * (n - i) is divisible by (i + 1) at every step.
    __int128 result = 1;
    for (Int i = 0; i < k; ++i) {
        result = result * (n - i) / (i + 1);
        if (result > std::numeric_limits<Int>::max())
            throw Error(ErrorCode::Overflow, "binomial coefficient exceeds 64 bits");
    }
    return static_cast<Int>(result);
}

} // namespace hserre
