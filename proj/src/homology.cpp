#include "hserre/homology.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <string>

namespace hserre {

namespace {

Matrix boundary_between(const std::vector<Face>& lower, const std::vector<Face>& upper, FieldSpec field) {
    Matrix m(static_cast<int>(lower.size()), static_cast<int>(upper.size()));
    if (m.rows == 0 || m.cols == 0)
        return m;
    const Int p = field.characteristic();
    const Int minus_one = p == 0 ? -1 : p - 1;
    std::uint64_t span = 0;
    for (Face f : lower)
        span |= f.mask();
    for (Face f : upper)
        span |= f.mask();
    if (span < 256) {
        // Every vertex is at most 8: index rows directly by mask.
        std::array<int, 256> row_of;
        for (int r = 0; r < m.rows; ++r)
            row_of[lower[r].mask()] = r;
        for (int c = 0; c < m.cols; ++c) {
            const std::uint64_t sigma = upper[c].mask();
            int position = 0;
            for (std::uint64_t rest = sigma; rest; rest &= rest - 1, ++position)
                m.at(row_of[sigma & ~(rest & -rest)], c) = position % 2 == 0 ? 1 : minus_one;
        }
        return m;
    }
    // lower holds faces of one size sorted by face_less, i.e. by same_size_key.
    std::vector<std::uint64_t> keys;
    keys.reserve(lower.size());
    for (Face f : lower)
        keys.push_back(same_size_key(f));
    for (int c = 0; c < m.cols; ++c) {
        const std::uint64_t sigma = upper[c].mask();
        int position = 0;
        for (std::uint64_t rest = sigma; rest; rest &= rest - 1, ++position) {
            const std::uint64_t key = same_size_key(Face(sigma & ~(rest & -rest)));
            const auto row = std::lower_bound(keys.begin(), keys.end(), key) - keys.begin();
            m.at(static_cast<int>(row), c) = position % 2 == 0 ? 1 : minus_one;
        }
    }
    return m;
}

} // namespace

Matrix boundary_matrix(const SimplicialComplex& complex, int k, FieldSpec field) {
    if (k < 0 || k > complex.d())
        throw Error(ErrorCode::CardOutOfRange,
                    "boundary degree " + std::to_string(k) + " outside 0.." + std::to_string(complex.d()));
    const auto upper = k + 1 <= complex.d() ? faces_of_card(complex, k + 1) : std::vector<Face>{};
    return boundary_between(faces_of_card(complex, k), upper, field);
}

BettiTable reduced_betti(const SimplicialComplex& complex, FieldSpec field) {
    return reduced_betti(complex, field, complex.dim());
}

BettiTable reduced_betti(const SimplicialComplex& complex, FieldSpec field, int max_degree) {
    const int top = std::min(max_degree, complex.dim());
    BettiTable table;
    if (top < -1)
        return table;
    // faces[c] holds the faces of cardinality c, for c = 0 .. top + 2.
    std::vector<std::vector<Face>> faces = faces_by_card(complex, top + 2);
    faces.resize(top + 3);
    // ranks[k] = rank ∂_k for k = 0 .. top + 1.
    std::vector<int> ranks;
    for (int k = 0; k <= top + 1; ++k)
        ranks.push_back(rank(boundary_between(faces[k], faces[k + 1], field), field));
    for (int k = -1; k <= top; ++k) {
        const Int below = k >= 0 ? ranks[k] : 0;
        table.values.push_back(static_cast<Int>(faces[k + 1].size()) - below - ranks[k + 1]);
    }
    return table;
}

} // namespace hserre
