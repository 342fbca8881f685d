#include "hserre/linalg.hpp"

#include <array>
#include <bit>
#include <boost/multiprecision/cpp_int.hpp>
#include <charconv>
#include <utility>

namespace hserre {

namespace {

bool is_prime(Int p) {
    if (p < 2)
        return false;
    for (Int q = 2; q * q <= p; ++q)
        if (p % q == 0)
            return false;
    return true;
}

std::uint32_t reduce_mod(Int x, std::uint32_t p) {
    Int r = x % static_cast<Int>(p);
    return static_cast<std::uint32_t>(r < 0 ? r + p : r);
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
    // a^(p-2) mod p
    std::uint64_t result = 1, base = a, e = p - 2;
    while (e) {
        if (e & 1)
            result = result * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(result);
}

// Fraction-free Gaussian elimination. After each pivot step the live entries
// are minors of the original matrix, so the division by the previous pivot
// is exact.
template <typename Num, typename Mul, typename Sub>
int bareiss_rank(std::vector<std::vector<Num>> a, int cols, Mul mul, Sub sub) {
    const int rows = static_cast<int>(a.size());
    Num prev = 1;
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r) {
            if (a[r][c] != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0)
            continue;
        std::swap(a[rank], a[pivot]);
        for (int r = rank + 1; r < rows; ++r) {
            for (int j = c + 1; j < cols; ++j)
                a[r][j] = sub(mul(a[rank][c], a[r][j]), mul(a[r][c], a[rank][j])) / prev;
            a[r][c] = 0;
        }
        prev = a[rank][c];
        ++rank;
    }
    return rank;
}

} // namespace

FieldSpec FieldSpec::prime(Int p) {
    if (p >= (Int{1} << 16) || !is_prime(p))
        throw Error(ErrorCode::InvalidField, "GF(" + std::to_string(p) + ") needs a prime below 65536");
    return FieldSpec(p);
}

FieldSpec FieldSpec::parse(const std::string& text) {
    if (text == "q")
        return rationals();
    if (text.size() > 2 && text.compare(0, 2, "gf") == 0) {
        Int p = 0;
        const char* begin = text.data() + 2;
        const char* end = text.data() + text.size();
        auto [ptr, ec] = std::from_chars(begin, end, p);
        if (ec == std::errc() && ptr == end)
            return prime(p);
    }
    throw Error(ErrorCode::InvalidField, "unknown field '" + text + "' (expected q, gf2 or gf<p>)");
}

std::string FieldSpec::to_string() const {
    return is_rationals() ? "q" : "gf" + std::to_string(p_);
}

int rank(const Matrix& m, FieldSpec field) {
    if (m.rows == 0 || m.cols == 0)
        return 0;
    if (field.characteristic() == 2)
        return detail::rank_gf2(m);
    if (!field.is_rationals())
        return detail::rank_mod_p(m, static_cast<std::uint32_t>(field.characteristic()));
    try {
        return detail::rank_bareiss_int64(m);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::Overflow)
            throw;
        return detail::rank_bareiss_bigint(m);
    }
}

namespace detail {

int rank_gf2(const Matrix& m) {
    if (m.cols <= 64) {
        // basis[b] is the reduced row whose lowest set bit is b.
        std::array<std::uint64_t, 64> basis{};
        int rank = 0;
        for (int r = 0; r < m.rows && rank < m.cols; ++r) {
            std::uint64_t x = 0;
            for (int c = 0; c < m.cols; ++c)
                x |= static_cast<std::uint64_t>(m.at(r, c) & 1) << c;
            while (x) {
                const int b = std::countr_zero(x);
                if (!basis[b]) {
                    basis[b] = x;
                    ++rank;
                    break;
                }
                x ^= basis[b];
            }
        }
        return rank;
    }
    const int words = (m.cols + 63) / 64;
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(m.rows) * words, 0);
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c)
            if (m.at(r, c) & 1)
                rows[static_cast<std::size_t>(r) * words + c / 64] |= std::uint64_t{1} << (c % 64);

    int rank = 0;
    for (int c = 0; c < m.cols && rank < m.rows; ++c) {
        const int w = c / 64;
        const std::uint64_t bit = std::uint64_t{1} << (c % 64);
        int pivot = -1;
        for (int r = rank; r < m.rows; ++r) {
            if (rows[static_cast<std::size_t>(r) * words + w] & bit) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0)
            continue;
        std::uint64_t* prow = &rows[static_cast<std::size_t>(pivot) * words];
        if (pivot != rank)
            std::swap_ranges(prow, prow + words, &rows[static_cast<std::size_t>(rank) * words]);
        prow = &rows[static_cast<std::size_t>(rank) * words];
        for (int r = rank + 1; r < m.rows; ++r) {
            std::uint64_t* row = &rows[static_cast<std::size_t>(r) * words];
            if (row[w] & bit)
                for (int k = w; k < words; ++k)
                    row[k] ^= prow[k];
        }
        ++rank;
    }
    return rank;
}

int rank_mod_p(const Matrix& m, std::uint32_t p) {
    std::vector<std::vector<std::uint32_t>> a(m.rows, std::vector<std::uint32_t>(m.cols));
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c)
            a[r][c] = reduce_mod(m.at(r, c), p);

    int rank = 0;
    for (int c = 0; c < m.cols && rank < m.rows; ++c) {
        int pivot = -1;
        for (int r = rank; r < m.rows; ++r) {
            if (a[r][c] != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0)
            continue;
        std::swap(a[rank], a[pivot]);
        const std::uint64_t inv = inverse_mod(a[rank][c], p);
        for (int r = rank + 1; r < m.rows; ++r) {
            if (a[r][c] == 0)
                continue;
            const std::uint64_t factor = a[r][c] * inv % p;
            for (int j = c; j < m.cols; ++j) {
                const std::uint64_t sub = factor * a[rank][j] % p;
                a[r][j] = static_cast<std::uint32_t>((a[r][j] + p - sub) % p);
            }
        }
        ++rank;
    }
    return rank;
}

int rank_bareiss_int64(const Matrix& m) {
    std::vector<std::vector<Int>> a(m.rows, std::vector<Int>(m.cols));
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c)
            a[r][c] = m.at(r, c);
    return bareiss_rank(std::move(a), m.cols, checked_mul, checked_sub);
}

int rank_bareiss_bigint(const Matrix& m) {
    using Big = boost::multiprecision::cpp_int;
    std::vector<std::vector<Big>> a(m.rows, std::vector<Big>(m.cols));
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c)
            a[r][c] = m.at(r, c);
    return bareiss_rank(
        std::move(a), m.cols, [](const Big& x, const Big& y) { return Big(x * y); },
        [](const Big& x, const Big& y) { return Big(x - y); });
}

} // namespace detail

} // namespace hserre
