#include "hserre/complex.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace hserre {

namespace {

// Drops duplicates and faces contained in another face; result sorted by face_less.
std::vector<Face> maximal_only(std::vector<Face> faces) {
    std::sort(faces.begin(), faces.end(),
              [](Face a, Face b) { return face_less(b, a); });
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    std::vector<Face> kept;
    for (Face f : faces) {
        bool absorbed = false;
        for (Face k : kept) {
            if (f.subset_of(k)) {
                absorbed = true;
                break;
            }
        }
        if (!absorbed)
            kept.push_back(f);
    }
    sort_unique(kept);
    return kept;
}

} // namespace

SimplicialComplex::SimplicialComplex(int n, std::vector<Face> facets)
    : n_(n), facets_(std::move(facets)) {
    for (Face f : facets_) {
        support_ = support_ | f;
        d_ = std::max(d_, f.size());
    }
}

SimplicialComplex SimplicialComplex::from_facets(int n, const std::vector<std::vector<int>>& facets) {
    if (n < 1 || n > kMaxVertices)
        throw Error(ErrorCode::VertexOutOfRange,
                    "vertex count " + std::to_string(n) + " outside 1.." + std::to_string(kMaxVertices));
    std::vector<Face> masks;
    masks.reserve(facets.size());
    for (const auto& facet : facets) {
        for (int v : facet) {
            if (v < 1 || v > n)
                throw Error(ErrorCode::VertexOutOfRange,
                            "vertex " + std::to_string(v) + " outside 1.." + std::to_string(n));
        }
        masks.emplace_back(facet);
    }
    return from_facets(n, masks);
}

SimplicialComplex SimplicialComplex::from_facets(int n, std::initializer_list<std::initializer_list<int>> facets) {
    std::vector<std::vector<int>> lists;
    for (const auto& facet : facets)
        lists.emplace_back(facet);
    return from_facets(n, lists);
}

SimplicialComplex SimplicialComplex::from_facets(int n, const std::vector<Face>& facets) {
    if (n < 1 || n > kMaxVertices)
        throw Error(ErrorCode::VertexOutOfRange,
                    "vertex count " + std::to_string(n) + " outside 1.." + std::to_string(kMaxVertices));
    if (facets.empty())
        throw Error(ErrorCode::EmptyInput, "complex needs at least one facet");
    Face covered;
    for (Face f : facets) {
        if (f.empty())
            throw Error(ErrorCode::EmptyInput, "facets must be nonempty");
        if (!f.subset_of(Face::full(n)))
            throw Error(ErrorCode::VertexOutOfRange,
                        "vertex " + std::to_string(f.max_vertex()) + " outside 1.." + std::to_string(n));
        covered = covered | f;
    }
    const Face missing = Face::full(n).without(covered);
    if (!missing.empty())
        throw Error(ErrorCode::UncoveredVertex,
                    "vertex " + std::to_string(missing.min_vertex()) + " lies in no facet");
    return SimplicialComplex(n, maximal_only(facets));
}

bool SimplicialComplex::contains(Face face) const {
    return std::any_of(facets_.begin(), facets_.end(),
                       [face](Face f) { return face.subset_of(f); });
}

int dim(const SimplicialComplex& complex) { return complex.dim(); }

namespace {

constexpr int kBitmapMaxN = 16;

// Bit s of the result is set when the subset with mask s is a face.
std::vector<std::uint64_t> face_bitmap(const SimplicialComplex& complex) {
    std::vector<std::uint64_t> bits(((std::size_t{1} << complex.n()) + 63) / 64, 0);
    for (Face f : complex.facets()) {
        const std::uint64_t top = f.mask();
        for (std::uint64_t s = top;; s = (s - 1) & top) {
            bits[s >> 6] |= std::uint64_t{1} << (s & 63);
            if (s == 0)
                break;
        }
    }
    return bits;
}

template <typename Fn>
void for_each_marked(const std::vector<std::uint64_t>& bits, Fn&& fn) {
    for (std::size_t w = 0; w < bits.size(); ++w)
        for (std::uint64_t rest = bits[w]; rest; rest &= rest - 1)
            fn((w << 6) | static_cast<std::uint64_t>(std::countr_zero(rest)));
}

std::vector<std::uint64_t> all_face_masks(const SimplicialComplex& complex) {
    std::vector<std::uint64_t> masks;
    if (complex.n() <= kBitmapMaxN) {
        for_each_marked(face_bitmap(complex), [&](std::uint64_t s) { masks.push_back(s); });
        return masks;
    }
    for (Face f : complex.facets()) {
        const std::uint64_t top = f.mask();
        // Walks every submask of top, ending with the empty set.
        for (std::uint64_t s = top;; s = (s - 1) & top) {
            masks.push_back(s);
            if (s == 0)
                break;
        }
    }
    std::sort(masks.begin(), masks.end());
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    return masks;
}

} // namespace

std::vector<Face> faces_of_card(const SimplicialComplex& complex, int k) {
    if (k < 0 || k > complex.d())
        throw Error(ErrorCode::CardOutOfRange,
                    "cardinality " + std::to_string(k) + " outside 0.." + std::to_string(complex.d()));
    std::size_t total = 0;
    for (Face f : complex.facets())
        total += static_cast<std::size_t>(binomial(f.size(), k));
    // All of one size, so same_size_key alone gives face_less order.
    std::vector<std::uint64_t> keys;
    keys.reserve(total);
    for (Face f : complex.facets())
        for_each_subset_of_size(f, k, [&](Face s) { keys.push_back(same_size_key(s)); });
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    std::vector<Face> out;
    out.reserve(keys.size());
    for (std::uint64_t key : keys)
        out.emplace_back(reverse_bits(key));
    return out;
}

std::vector<std::vector<Face>> faces_by_card(const SimplicialComplex& complex, int max_card) {
    const int top = std::min(max_card, complex.d());
    if (top < 0)
        return {};
    if (complex.n() <= kBitmapMaxN) {
        const auto bits = face_bitmap(complex);
        std::vector<std::size_t> count(top + 1, 0);
        for_each_marked(bits, [&](std::uint64_t s) {
            const int c = std::popcount(s);
            if (c <= top)
                ++count[c];
        });
        std::vector<std::vector<std::uint64_t>> keys(top + 1);
        for (int c = 0; c <= top; ++c)
            keys[c].reserve(count[c]);
        for_each_marked(bits, [&](std::uint64_t s) {
            const int c = std::popcount(s);
            if (c <= top)
                keys[c].push_back(same_size_key(Face(s)));
        });
        std::vector<std::vector<Face>> out(top + 1);
        for (int c = 0; c <= top; ++c) {
            std::sort(keys[c].begin(), keys[c].end());
            out[c].reserve(keys[c].size());
            for (std::uint64_t key : keys[c])
                out[c].emplace_back(reverse_bits(key));
        }
        return out;
    }
    // One buffer; segment c holds the keys of cardinality-c subsets, with repeats.
    std::vector<std::size_t> start(top + 2, 0);
    for (Face f : complex.facets())
        for (int c = 0; c <= std::min(top, f.size()); ++c)
            start[c + 1] += static_cast<std::size_t>(binomial(f.size(), c));
    for (int c = 0; c <= top; ++c)
        start[c + 1] += start[c];
    std::vector<std::uint64_t> keys(start[top + 1]);
    std::vector<std::size_t> fill(start.begin(), start.end() - 1);
    for (Face f : complex.facets()) {
        const std::uint64_t mask = f.mask();
        for (std::uint64_t s = mask;; s = (s - 1) & mask) {
            const int c = std::popcount(s);
            if (c <= top)
                keys[fill[c]++] = same_size_key(Face(s));
            if (s == 0)
                break;
        }
    }
    std::vector<std::vector<Face>> out(top + 1);
    for (int c = 0; c <= top; ++c) {
        const auto first = keys.begin() + static_cast<std::ptrdiff_t>(start[c]);
        auto last = keys.begin() + static_cast<std::ptrdiff_t>(start[c + 1]);
        std::sort(first, last);
        last = std::unique(first, last);
        out[c].reserve(static_cast<std::size_t>(last - first));
        for (auto it = first; it != last; ++it)
            out[c].emplace_back(reverse_bits(*it));
    }
    return out;
}

std::vector<Face> all_faces(const SimplicialComplex& complex) {
    std::vector<Face> out;
    for (auto m : all_face_masks(complex))
        out.emplace_back(m);
    sort_unique(out);
    return out;
}

FVector f_vector(const SimplicialComplex& complex) {
    FVector f;
    f.counts.assign(complex.d() + 1, 0);
    for (std::uint64_t m : all_face_masks(complex))
        ++f.counts[std::popcount(m)];
    return f;
}

HVector h_vector(const SimplicialComplex& complex) { return f_to_h(f_vector(complex)); }

HVector f_to_h(const FVector& f) {
    const int d = f.d();
    HVector h;
    h.entries.assign(d + 1, 0);
    for (int k = 0; k <= d; ++k) {
        Int acc = 0;
        for (int i = 0; i <= k; ++i) {
            Int term = checked_mul(binomial(d - i, k - i), f[i]);
            acc = (k - i) % 2 == 0 ? checked_add(acc, term) : checked_sub(acc, term);
        }
        h.entries[k] = acc;
    }
    return h;
}

FVector h_to_f(const HVector& h) {
    const int d = h.d();
    FVector f;
    f.counts.assign(d + 1, 0);
    for (int k = 0; k <= d; ++k) {
        Int acc = 0;
        for (int i = 0; i <= k; ++i)
            acc = checked_add(acc, checked_mul(binomial(d - i, k - i), h[i]));
        f.counts[k] = acc;
    }
    return f;
}

SimplicialComplex link(const SimplicialComplex& complex, Face sigma) {
    std::vector<Face> facets;
    for (Face f : complex.facets()) {
        if (sigma.subset_of(f))
            facets.push_back(f.without(sigma));
    }
    if (facets.empty())
        throw Error(ErrorCode::FaceNotInComplex, sigma.to_string() + " is not a face");
    // Facets containing sigma stay pairwise incomparable after removing it.
    sort_unique(facets);
    return SimplicialComplex(complex.n(), std::move(facets));
}

std::optional<int> cone_apex(const SimplicialComplex& complex) {
    Face common = Face::full(kMaxVertices);
    for (Face f : complex.facets())
        common = common & f;
    if (common.empty())
        return std::nullopt;
    return common.min_vertex();
}

bool is_cone(const SimplicialComplex& complex) { return cone_apex(complex).has_value(); }

bool is_pure(const SimplicialComplex& complex) {
    const int d = complex.d();
    return std::all_of(complex.facets().begin(), complex.facets().end(),
                       [d](Face f) { return f.size() == d; });
}

Int reduced_euler_char(const SimplicialComplex& complex) {
    const FVector f = f_vector(complex);
    Int chi = 0;
    for (int card = 0; card <= f.d(); ++card)
        chi = card % 2 == 0 ? checked_sub(chi, f[card]) : checked_add(chi, f[card]);
    return chi;
}

std::vector<Face> minimal_nonfaces(const SimplicialComplex& complex) {
    // A set is a nonface iff it meets the complement of every facet, so the
    // minimal nonfaces are the minimal transversals of those complements.
    const Face ground = Face::full(complex.n());
    std::vector<std::uint64_t> transversals{0};
    for (Face f : complex.facets()) {
        const std::uint64_t edge = ground.without(f).mask();
        std::vector<std::uint64_t> next;
        for (std::uint64_t t : transversals) {
            if (t & edge) {
                next.push_back(t);
                continue;
            }
            for (std::uint64_t rest = edge; rest; rest &= rest - 1)
                next.push_back(t | (rest & -rest));
        }
        std::sort(next.begin(), next.end(), [](std::uint64_t a, std::uint64_t b) {
            const int pa = std::popcount(a), pb = std::popcount(b);
            return pa != pb ? pa < pb : a < b;
        });
        next.erase(std::unique(next.begin(), next.end()), next.end());
        transversals.clear();
        for (std::uint64_t t : next) {
            const bool redundant = std::any_of(transversals.begin(), transversals.end(),
                                               [t](std::uint64_t m) { return (m & ~t) == 0; });
            if (!redundant)
                transversals.push_back(t);
        }
    }
    std::vector<Face> out;
    out.reserve(transversals.size());
    for (auto t : transversals)
        out.emplace_back(t);
    std::sort(out.begin(), out.end(), FaceLess{});
    return out;
}

} // namespace hserre
