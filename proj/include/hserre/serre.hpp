#pragma once

#include <optional>

#include "hserre/complex.hpp"
#include "hserre/linalg.hpp"

namespace hserre {

/// Why a complex fails Serre's condition.
struct SerreWitness {
    enum class Kind {
        Impure,   // `face` is a facet smaller than the dimension demands
        Homology, // β̃_degree(lk face) = betti != 0 below the required bound
    };
    Kind kind = Kind::Homology;
    Face face;
    int degree = 0;
    Int betti = 0;

    friend bool operator==(const SerreWitness&, const SerreWitness&) = default;
};

struct SerreVerdict {
    bool satisfied = true;
    int r = 2;
    FieldSpec field = FieldSpec::prime(2);
    std::optional<SerreWitness> witness; // present iff !satisfied
};

/// Serre's condition (S_r) for the Stanley-Reisner ring over `field`:
/// Δ is pure and β̃_i(lk σ) = 0 for every face σ (∅ included) and every
/// i < min(r - 1, dim lk σ). Faces are scanned by face_less, so the witness
/// is the first failing (σ, i) in that order. Throws RankOutOfRange for r < 2.
SerreVerdict is_serre(const SimplicialComplex& complex, int r, FieldSpec field);

/// Reisner's criterion: β̃_i(lk σ) = 0 for all σ and all i < dim lk σ.
/// The verdict's r is max(d, 2).
SerreVerdict is_cohen_macaulay(const SimplicialComplex& complex, FieldSpec field);

} // namespace hserre
