#include "hserre/family.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <string>
#include <thread>

namespace hserre {

namespace {

void require_family_d(int d) {
    if (d < kMinFamilyD)
        throw Error(ErrorCode::DTooSmall, "d = " + std::to_string(d) + " is below 5");
}

std::string join(const std::vector<Int>& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i)
        out += (i ? "," : "") + std::to_string(v[i]);
    return out + ")";
}

bool is_induced_four_cycle(const Graph& g, const FourCycle& q) {
    return g.has_edge(q[0], q[1]) && g.has_edge(q[1], q[2]) && g.has_edge(q[2], q[3]) &&
           g.has_edge(q[3], q[0]) && !g.has_edge(q[0], q[2]) && !g.has_edge(q[1], q[3]);
}

} // namespace

SimplicialComplex build_family(int d) {
    require_family_d(d);
    const int n = d + 2;
    const Face all = Face::full(n);
    std::vector<Face> facets;
    for (int j = 2; j <= d; ++j)
        facets.push_back(all.without(Face{1, j}));
    facets.push_back(all.without(Face{d + 1, d + 2}));
    return SimplicialComplex::from_facets(n, facets);
}

HVector expected_hvector(int d) {
    require_family_d(d);
    HVector h;
    h.entries.assign(d + 1, 1);
    h.entries[1] = 2;
    h.entries[d] = -1;
    return h;
}

FamilyDecomposition family_decomposition(int d) {
    require_family_d(d);
    const IntPolynomial one_minus_top = IntPolynomial::constant(1) - IntPolynomial::monomial(1, d - 1);
    FamilyDecomposition parts;
    // x_2 x_3 ... x_d is a regular element of degree d - 1 on K[x_2, ..., x_n].
    parts.quotient_by_l = HilbertSeries(one_minus_top, d + 1);
    parts.quotient_by_k = HilbertSeries(IntPolynomial::constant(1), d);
    parts.quotient_by_sum = HilbertSeries(one_minus_top, d - 1);
    parts.stanley_reisner = parts.quotient_by_l + parts.quotient_by_k - parts.quotient_by_sum;
    return parts;
}

HilbertSeries family_hilbert_oracle(int d) { return family_decomposition(d).stanley_reisner; }

TheoremReport verify_theorem_main(int d, const std::vector<FieldSpec>& fields) {
    require_family_d(d);
    TheoremReport report;
    report.d = d;
    const SimplicialComplex family = build_family(d);
    report.expected = expected_hvector(d);
    report.by_faces = h_vector(family);
    report.by_exact_sequence = family_hilbert_oracle(d);

    const bool faces_ok = report.by_faces == report.expected;
    const bool oracle_ok = report.by_exact_sequence == hilbert_from_h(report.expected);
    report.checks.push_back({"h-vector", faces_ok && oracle_ok,
                             "faces " + join(report.by_faces.entries) + ", exact sequence " +
                                 report.by_exact_sequence.to_string()});

    const bool nonzero = std::none_of(report.expected.entries.begin(), report.expected.entries.end(),
                                      [](Int h) { return h == 0; });
    report.checks.push_back({"nonzero entries", nonzero, join(report.expected.entries)});

    const bool pure = is_pure(family);
    const bool cone = is_cone(family);
    report.checks.push_back({"pure, not a cone", pure && !cone,
                             std::string("pure=") + (pure ? "yes" : "no") + " cone=" + (cone ? "yes" : "no")});

    report.conditions = check_question_2_6(report.expected, 2);
    report.closed_forms = {d - 3, (d - 4) * (d - 1) / 2, checked_sub(binomial(d, 3), binomial(d, 2))};
    report.checks.push_back({"necessary conditions at r=2",
                             report.conditions.all_pass && report.conditions.gpsy_sums == report.closed_forms,
                             "sums " + join(report.conditions.gpsy_sums) + ", closed forms " +
                                 join(report.closed_forms)});

    for (FieldSpec field : fields) {
        const SerreVerdict verdict = is_serre(family, 2, field);
        const bool refuted = !verdict.satisfied && verdict.witness &&
                             verdict.witness->kind == SerreWitness::Kind::Homology;
        std::string detail = "over " + field.to_string();
        if (verdict.witness)
            detail += ": face " + verdict.witness->face.to_string() + ", degree " +
                      std::to_string(verdict.witness->degree) + ", betti " +
                      std::to_string(verdict.witness->betti);
        report.checks.push_back({"not (S_2) over " + field.to_string(), refuted, detail});
        report.serre.push_back(verdict);
    }

    report.obstruction = s2_graph_obstruction(family);
    bool obstructed = report.obstruction.status == ObstructionVerdict::Status::NotS2 &&
                      report.obstruction.witness &&
                      is_induced_four_cycle(complement(cofacet_graph(family)), *report.obstruction.witness);
    std::string detail = "none";
    if (report.obstruction.witness) {
        const auto& q = *report.obstruction.witness;
        detail = "(" + std::to_string(q[0]) + "," + std::to_string(q[1]) + "," + std::to_string(q[2]) + "," +
                 std::to_string(q[3]) + ")";
    }
    report.checks.push_back({"induced 4-cycle in complement of cofacet graph", obstructed, detail});

    report.all_pass = std::all_of(report.checks.begin(), report.checks.end(),
                                  [](const TheoremCheck& c) { return c.passed; });
    return report;
}

namespace {

struct WorkerTally {
    Int enumerated = 0;
    Int uncovered = 0;
    Int matched = 0;
    Int satisfiers = 0;
    Int satisfiers_overall = 0;
    std::vector<SearchMatch> matches;
};

bool lex_facets_less(const SearchMatch& a, const SearchMatch& b) {
    return std::lexicographical_compare(a.facets.begin(), a.facets.end(), b.facets.begin(), b.facets.end(),
                                        FaceLess{});
}

} // namespace

SearchReport exhaustive_nonexistence_search(int d, const SearchOptions& options) {
    require_family_d(d);
    if (d > kMaxSearchD)
        throw Error(ErrorCode::DTooLarge, "search is limited to d <= " + std::to_string(kMaxSearchD));
    const auto start = std::chrono::steady_clock::now();
    const int n = d + 2;
    const int workers = std::max(1, options.workers);
    const HVector target = expected_hvector(d);
    const SimplicialComplex family = build_family(d);
    const FieldSpec rationals = FieldSpec::rationals();

    // A d-subset of [n] is determined by the pair it omits.
    std::vector<Face> pairs;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            pairs.push_back(Face{u, v});
    const int m = static_cast<int>(pairs.size());

    auto run_worker = [&](int worker, WorkerTally& tally) {
        std::vector<int> idx(d);
        for (int i = 0; i < d; ++i)
            idx[i] = i;
        std::vector<Face> facets(d);
        for (Int serial = 0;; ++serial) {
            if (serial % workers == worker) {
                ++tally.enumerated;
                std::uint64_t in_every_pair = ~std::uint64_t{0};
                for (int i = 0; i < d; ++i) {
                    in_every_pair &= pairs[idx[i]].mask();
                    facets[i] = Face::full(n).without(pairs[idx[i]]);
                }
                if (in_every_pair != 0) {
                    ++tally.uncovered;
                } else {
                    const SimplicialComplex candidate = SimplicialComplex::from_facets(n, facets);
                    const bool matches = h_vector(candidate) == target;
                    if (matches || options.check_all) {
                        const SerreVerdict verdict = is_serre(candidate, 2, options.field);
                        if (verdict.satisfied)
                            ++tally.satisfiers_overall;
                        if (matches) {
                            ++tally.matched;
                            if (verdict.satisfied)
                                ++tally.satisfiers;
                            SearchMatch match;
                            match.facets = candidate.facets();
                            match.witness = verdict.witness;
                            match.rationals_agree = is_serre(candidate, 2, rationals).satisfied == verdict.satisfied;
                            match.is_family = candidate == family;
                            tally.matches.push_back(std::move(match));
                        }
                    }
                }
            }
            // Next combination of d indices out of m.
            int i = d - 1;
            while (i >= 0 && idx[i] == m - d + i)
                --i;
            if (i < 0)
                break;
            ++idx[i];
            for (int j = i + 1; j < d; ++j)
                idx[j] = idx[j - 1] + 1;
        }
    };

    std::vector<WorkerTally> tallies(workers);
    if (workers == 1) {
        run_worker(0, tallies[0]);
    } else {
        std::vector<std::exception_ptr> failures(workers);
        std::vector<std::thread> threads;
        for (int w = 0; w < workers; ++w) {
            threads.emplace_back([&, w] {
                try {
                    run_worker(w, tallies[w]);
                } catch (...) {
                    failures[w] = std::current_exception();
                }
            });
        }
        for (auto& t : threads)
            t.join();
        for (auto& failure : failures)
            if (failure)
                std::rethrow_exception(failure);
    }

    SearchReport report;
    report.d = d;
    report.field = options.field;
    report.workers = workers;
    Int overall = 0;
    for (auto& tally : tallies) {
        report.candidates_enumerated += tally.enumerated;
        report.skipped_uncovered += tally.uncovered;
        report.candidates_with_target_hvector += tally.matched;
        report.s2_satisfiers_among_them += tally.satisfiers;
        overall += tally.satisfiers_overall;
        for (auto& match : tally.matches)
            report.matches.push_back(std::move(match));
    }
    if (options.check_all)
        report.s2_satisfiers_overall = overall;
    std::sort(report.matches.begin(), report.matches.end(), lex_facets_less);
    for (const auto& match : report.matches) {
        report.family_found = report.family_found || match.is_family;
        report.rationals_agree = report.rationals_agree && match.rationals_agree;
    }
    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

} // namespace hserre
