#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hserre/complex.hpp"
#include "hserre/graph.hpp"
#include "hserre/hvector.hpp"
#include "hserre/linalg.hpp"
#include "hserre/polynomial.hpp"
#include "hserre/serre.hpp"

namespace hserre {

inline constexpr int kMinFamilyD = 5;
inline constexpr int kMaxSearchD = 6;

/// Δ_d on n = d + 2 vertices with facets [d+2]∖{1, j} for 2 <= j <= d and
/// [d+2]∖{d+1, d+2}. Throws DTooSmall for d < 5.
SimplicialComplex build_family(int d);

/// (1, 2, 1, ..., 1, -1) with d - 2 ones; length d + 1. Throws DTooSmall.
HVector expected_hvector(int d);

/// Hilbert series of the pieces of 0 → S/I → S/L ⊕ S/K → S/(L+K) → 0 with
/// L = (x_1, x_2 x_3 ... x_d) and K = (x_{d+1}, x_{d+2}).
struct FamilyDecomposition {
    HilbertSeries quotient_by_l;       // (1 - t^{d-1}) / (1 - t)^{d+1}
    HilbertSeries quotient_by_k;       // 1 / (1 - t)^d
    HilbertSeries quotient_by_sum;     // (1 - t^{d-1}) / (1 - t)^{d-1}
    HilbertSeries stanley_reisner;     // S/L + S/K - S/(L+K)
};

FamilyDecomposition family_decomposition(int d);

/// Hilbert series of K[Δ_d] from the exact sequence alone (no face
/// enumeration). Throws DTooSmall.
HilbertSeries family_hilbert_oracle(int d);

struct TheoremCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct TheoremReport {
    int d = 0;
    HVector expected;
    HVector by_faces;
    HilbertSeries by_exact_sequence;
    ConditionReport conditions;
    std::vector<Int> closed_forms; // d - 3, (d - 4)(d - 1)/2, C(d,3) - C(d,2)
    std::vector<SerreVerdict> serre;
    ObstructionVerdict obstruction;
    std::vector<TheoremCheck> checks;
    bool all_pass = false;
};

/// Checks, for Δ_d: the h-vector by faces and by the exact sequence; that
/// every entry is nonzero; purity (and that Δ_d is not a cone); the r = 2
/// necessary conditions with the closed-form sums; failure of (S_2) over
/// each field; and the induced 4-cycle obstruction. Failures are recorded in
/// the report. Throws DTooSmall.
TheoremReport verify_theorem_main(int d, const std::vector<FieldSpec>& fields);

struct SearchOptions {
    FieldSpec field = FieldSpec::prime(2);
    int workers = 1;
    // Also run (S_2) on every covering candidate, not just h-vector matches.
    bool check_all = false;
};

struct SearchMatch {
    std::vector<Face> facets;              // face_less order
    std::optional<SerreWitness> witness;   // over the search field; none means (S_2) holds
    bool rationals_agree = true;           // same verdict over the rationals
    bool is_family = false;                // equals Δ_d
};

struct SearchReport {
    int d = 0;
    FieldSpec field = FieldSpec::prime(2);
    int workers = 1;
    Int candidates_enumerated = 0;
    Int skipped_uncovered = 0;
    Int candidates_with_target_hvector = 0;
    Int s2_satisfiers_among_them = 0;
    std::optional<Int> s2_satisfiers_overall; // with check_all
    bool family_found = false;
    bool rationals_agree = true;
    double elapsed_seconds = 0;
    std::vector<SearchMatch> matches; // sorted by facet list
};

/// Enumerates every set of d distinct d-subsets of {1..d+2}; candidates that
/// cover all vertices and have h-vector expected_hvector(d) are tested for
/// (S_2). Throws DTooSmall for d < 5 and DTooLarge for d > 6.
SearchReport exhaustive_nonexistence_search(int d, const SearchOptions& options = {});

} // namespace hserre
