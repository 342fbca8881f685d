#pragma once

#include <vector>

#include "hserre/complex.hpp"
#include "hserre/linalg.hpp"

namespace hserre {

/// Reduced Betti numbers β̃_{-1}, β̃_0, ..., β̃_{top}.
struct BettiTable {
    // values[k + 1] = β̃_k
    std::vector<Int> values;

    /// Highest degree stored.
    int top() const { return static_cast<int>(values.size()) - 2; }
    /// β̃_k; zero outside the stored range.
    Int operator()(int k) const {
        return k + 1 >= 0 && k + 1 < static_cast<int>(values.size()) ? values[k + 1] : 0;
    }
    friend bool operator==(const BettiTable&, const BettiTable&) = default;
};

/// ∂_k from k-dimensional faces (columns) to (k-1)-dimensional faces (rows),
/// both indexed in face_less order; ∂_0 is the augmentation onto ∅. The entry
/// for τ ⊂ σ is (-1)^j with j the 0-based position of σ∖τ in σ; over GF(p)
/// entries are reduced into 0..p-1. Throws CardOutOfRange unless 0 <= k <= d.
Matrix boundary_matrix(const SimplicialComplex& complex, int k, FieldSpec field);

/// β̃_k = f_k - rank ∂_k - rank ∂_{k+1} for k = -1 .. dim.
BettiTable reduced_betti(const SimplicialComplex& complex, FieldSpec field);
/// Same, stopping after degree max_degree (only the boundary maps needed for
/// those degrees are built).
BettiTable reduced_betti(const SimplicialComplex& complex, FieldSpec field, int max_degree);

} // namespace hserre
