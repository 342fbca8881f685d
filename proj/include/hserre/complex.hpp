#pragma once

#include <initializer_list>
#include <optional>
#include <vector>

#include "hserre/checked.hpp"
#include "hserre/face.hpp"

namespace hserre {

/// Face counts indexed by cardinality: counts[c] = f_{c-1}, so counts[0] = 1
/// counts the empty face and counts.size() = d + 1.
struct FVector {
    std::vector<Int> counts;

    int d() const { return static_cast<int>(counts.size()) - 1; }
    Int operator[](std::size_t card) const { return counts[card]; }
    friend bool operator==(const FVector&, const FVector&) = default;
};

/// h_0 .. h_d.
struct HVector {
    std::vector<Int> entries;

    int d() const { return static_cast<int>(entries.size()) - 1; }
    Int operator[](std::size_t i) const { return entries[i]; }
    friend bool operator==(const HVector&, const HVector&) = default;
};

/// A finite simplicial complex given by its facets.
///
/// Complexes built from user input live on the full label range 1..n: every
/// label appears in some facet. Links keep the labels of the complex they
/// came from, so their support can be a proper subset of 1..n; the link at a
/// facet is the complex {∅} whose only facet is the empty face.
class SimplicialComplex {
public:
    /// Validates and builds a complex on 1..n. Facets contained in other
    /// facets are absorbed. Throws EmptyInput, VertexOutOfRange or
    /// UncoveredVertex.
    static SimplicialComplex from_facets(int n, const std::vector<std::vector<int>>& facets);
    static SimplicialComplex from_facets(int n, const std::vector<Face>& facets);
    static SimplicialComplex from_facets(int n, std::initializer_list<std::initializer_list<int>> facets);

    /// Label bound: faces are subsets of {1..n}.
    int n() const { return n_; }
    /// Union of all facets.
    Face support() const { return support_; }
    int vertex_count() const { return support_.size(); }
    /// Maximal faces, sorted by face_less.
    const std::vector<Face>& facets() const { return facets_; }
    /// Max facet cardinality; dim() = d() - 1.
    int d() const { return d_; }
    int dim() const { return d_ - 1; }
    /// True for the complex {∅}.
    bool is_empty() const { return d_ == 0; }
    bool contains(Face face) const;

    friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

private:
    friend SimplicialComplex link(const SimplicialComplex&, Face);
    // Takes an antichain of faces already known to be valid.
    SimplicialComplex(int n, std::vector<Face> facets);

    int n_ = 0;
    std::vector<Face> facets_;
    Face support_;
    int d_ = 0;
};

int dim(const SimplicialComplex& complex);

/// All faces of cardinality k (0 <= k <= d), sorted by face_less.
std::vector<Face> faces_of_card(const SimplicialComplex& complex, int k);
/// faces[c] = faces_of_card(complex, c) for c = 0 .. min(max_card, d), in one pass.
std::vector<std::vector<Face>> faces_by_card(const SimplicialComplex& complex, int max_card);
/// Every face including ∅, sorted by face_less.
std::vector<Face> all_faces(const SimplicialComplex& complex);

FVector f_vector(const SimplicialComplex& complex);
HVector h_vector(const SimplicialComplex& complex);

// h_k = sum_{i<=k} (-1)^{k-i} C(d-i, k-i) f_{i-1}
HVector f_to_h(const FVector& f);
// f_{k-1} = sum_{i<=k} C(d-i, k-i) h_i
FVector h_to_f(const HVector& h);

/// lk(σ) = {τ : τ ∩ σ = ∅, τ ∪ σ ∈ Δ}. Throws FaceNotInComplex.
SimplicialComplex link(const SimplicialComplex& complex, Face sigma);

/// A vertex lying in every facet (the smallest one), if any.
std::optional<int> cone_apex(const SimplicialComplex& complex);
bool is_cone(const SimplicialComplex& complex);
bool is_pure(const SimplicialComplex& complex);

/// -f_{-1} + f_0 - f_1 + ...
Int reduced_euler_char(const SimplicialComplex& complex);

/// Inclusion-minimal subsets of {1..n} that are not faces (the generators of
/// the Stanley-Reisner ideal), sorted by face_less.
std::vector<Face> minimal_nonfaces(const SimplicialComplex& complex);

} // namespace hserre
