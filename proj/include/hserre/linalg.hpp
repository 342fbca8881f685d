#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hserre/checked.hpp"

namespace hserre {

/// The coefficient field for homology: the rationals or GF(p), p < 2^16.
class FieldSpec {
public:
    static FieldSpec rationals() { return FieldSpec(0); }
    /// Throws InvalidField unless p is a prime below 2^16.
    static FieldSpec prime(Int p);
    /// Accepts "q", "gf2" or "gf<p>".
    static FieldSpec parse(const std::string& text);

    bool is_rationals() const { return p_ == 0; }
    /// 0 for the rationals.
    Int characteristic() const { return p_; }
    std::string to_string() const;

    friend bool operator==(FieldSpec, FieldSpec) = default;

private:
    explicit FieldSpec(Int p) : p_(p) {}
    Int p_;
};

/// Dense row-major integer matrix.
struct Matrix {
    int rows = 0;
    int cols = 0;
    std::vector<Int> entries;

    Matrix() = default;
    Matrix(int r, int c) : rows(r), cols(c), entries(static_cast<std::size_t>(r) * c, 0) {}

    Int& at(int r, int c) { return entries[static_cast<std::size_t>(r) * cols + c]; }
    Int at(int r, int c) const { return entries[static_cast<std::size_t>(r) * cols + c]; }

    friend bool operator==(const Matrix&, const Matrix&) = default;
};

/// Exact rank. Over GF(p) entries are read modulo p. Over the rationals the
/// elimination is fraction-free (Bareiss); it runs on checked 64-bit integers
/// and restarts with arbitrary precision if an intermediate minor overflows.
int rank(const Matrix& m, FieldSpec field);

namespace detail {
int rank_gf2(const Matrix& m);
int rank_mod_p(const Matrix& m, std::uint32_t p);
int rank_bareiss_int64(const Matrix& m);
int rank_bareiss_bigint(const Matrix& m);
} // namespace detail

} // namespace hserre
