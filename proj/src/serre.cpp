#include "hserre/serre.hpp"

#include <algorithm>
#include <string>

#include "hserre/homology.hpp"

namespace hserre {

namespace {

// First facet (in face_less order) smaller than the largest one.
std::optional<SerreWitness> impurity(const SimplicialComplex& complex) {
    for (Face f : complex.facets()) {
        if (f.size() != complex.d())
            return SerreWitness{SerreWitness::Kind::Impure, f, 0, 0};
    }
    return std::nullopt;
}

// Scans faces by face_less; degree_bound(dim lk σ) gives the exclusive bound
// on the homology degrees that must vanish.
template <typename Bound>
std::optional<SerreWitness> first_homology_failure(const SimplicialComplex& complex, FieldSpec field,
                                                   Bound degree_bound) {
    // Links of faces of cardinality c have dimension at most d - 1 - c, and
    // the bound is monotone in the link dimension.
    int last = -1;
    while (last < complex.d() && degree_bound(complex.d() - 2 - last) > 0)
        ++last;
    const auto faces = faces_by_card(complex, last);
    for (const auto& layer : faces) {
        for (Face sigma : layer) {
            // A vertex outside sigma in every facet through sigma makes the
            // link a cone, which has no reduced homology.
            std::uint64_t common = ~std::uint64_t{0};
            for (Face f : complex.facets())
                if (sigma.subset_of(f))
                    common &= f.mask();
            if (common != sigma.mask())
                continue;
            const SimplicialComplex lk = link(complex, sigma);
            const int bound = degree_bound(lk.dim());
            if (bound <= 0)
                continue;
            const BettiTable betti = reduced_betti(lk, field, bound - 1);
            for (int i = 0; i < bound; ++i) {
                if (betti(i) != 0)
                    return SerreWitness{SerreWitness::Kind::Homology, sigma, i, betti(i)};
            }
        }
    }
    return std::nullopt;
}

} // namespace

SerreVerdict is_serre(const SimplicialComplex& complex, int r, FieldSpec field) {
    if (r < 2)
        throw Error(ErrorCode::RankOutOfRange, "Serre index must be at least 2, got " + std::to_string(r));
    SerreVerdict verdict;
    verdict.r = r;
    verdict.field = field;
    verdict.witness = impurity(complex);
    if (!verdict.witness)
        verdict.witness = first_homology_failure(complex, field,
                                                 [r](int link_dim) { return std::min(r - 1, link_dim); });
    verdict.satisfied = !verdict.witness.has_value();
    return verdict;
}

SerreVerdict is_cohen_macaulay(const SimplicialComplex& complex, FieldSpec field) {
    SerreVerdict verdict;
    verdict.r = std::max(complex.d(), 2);
    verdict.field = field;
    verdict.witness = first_homology_failure(complex, field, [](int link_dim) { return link_dim; });
    // Reisner's condition implies purity, so this branch is not expected to fire.
    if (!verdict.witness)
        verdict.witness = impurity(complex);
    verdict.satisfied = !verdict.witness.has_value();
    return verdict;
}

} // namespace hserre
