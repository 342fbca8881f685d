// Acceptance gate: one PASS/FAIL line per criterion, each with its runtime
// limit. Exit status is nonzero if any criterion fails.
//
// Usage: hserre_acceptance [--only N] [--sample-seed S] [--samples K]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "hserre/complex.hpp"
#include "hserre/family.hpp"
#include "hserre/graph.hpp"
#include "hserre/hvector.hpp"
#include "hserre/serre.hpp"
#include "support/enumerate.hpp"
#include "support/oracles.hpp"
#include "support/properties.hpp"

using namespace hserre;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
    void require(bool cond, const std::string& what) {
        if (!cond) {
            if (ok)
                detail = what;
            ok = false;
        }
    }
};

std::int64_t choose(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n)
        return 0;
    std::int64_t r = 1;
    for (std::int64_t i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

std::vector<Int> literal_family_h(int d) {
    std::vector<Int> h{1, 2};
    for (int i = 0; i < d - 2; ++i)
        h.push_back(1);
    h.push_back(-1);
    return h;
}

bool induced_c4_in(const Graph& g, const FourCycle& q) {
    for (int i = 0; i < 4; ++i)
        if (!g.has_edge(q[i], q[(i + 1) % 4]))
            return false;
    return !g.has_edge(q[0], q[2]) && !g.has_edge(q[1], q[3]);
}

Outcome criterion_1() {
    Outcome out;
    for (int d = 5; d <= 12; ++d) {
        const HVector want{literal_family_h(d)};
        const SimplicialComplex family = build_family(d);
        out.require(h_vector(family) == want, "face enumeration at d=" + std::to_string(d));
        const HilbertSeries oracle = family_hilbert_oracle(d);
        out.require(oracle.denom_exponent() == d && oracle.numerator().coeffs() == want.entries,
                    "exact-sequence oracle at d=" + std::to_string(d) + ": " + oracle.to_string());
    }
    if (out.ok)
        out.detail = "h = (1,2,1,...,1,-1) for d=5..12 by faces and by exact sequence";
    return out;
}

Outcome criterion_2() {
    Outcome out;
    for (int d = 5; d <= 12; ++d) {
        const std::vector<Int> want{d - 3, (d - 4) * (d - 1) / 2, choose(d, 3) - choose(d, 2)};
        const auto got = gpsy_sums(HVector{literal_family_h(d)}, 2);
        out.require(got == want, "sums differ at d=" + std::to_string(d));
        for (Int s : got)
            out.require(s >= 0, "negative sum at d=" + std::to_string(d));
    }
    out.require(gpsy_sums(HVector{literal_family_h(5)}, 2) == std::vector<Int>{2, 2, 0}, "d=5 frozen");
    out.require(gpsy_sums(HVector{literal_family_h(12)}, 2) == std::vector<Int>{9, 44, 154}, "d=12 frozen");
    if (out.ok)
        out.detail = "sums = (d-3, (d-4)(d-1)/2, C(d,3)-C(d,2)) >= 0 for d=5..12";
    return out;
}

Outcome criterion_3() {
    Outcome out;
    out.require(is_m_vector(std::vector<Int>{1, 2, 1}), "(1,2,1) rejected");
    long compared = 0;
    for (int len = 1; len <= 4; ++len) {
        std::vector<Int> v(len, 0);
        while (true) {
            ++compared;
            const bool lib = is_m_vector(v);
            if (lib != oracle::is_m_vector(v)) {
                std::string s;
                for (Int x : v)
                    s += std::to_string(x) + " ";
                out.require(false, "disagreement on " + s);
            }
            int i = len - 1;
            while (i >= 0 && v[i] == 6)
                v[i--] = 0;
            if (i < 0)
                break;
            ++v[i];
        }
    }
    if (out.ok)
        out.detail = "(1,2,1) accepted; order-ideal oracle agrees on " + std::to_string(compared) + " vectors";
    return out;
}

Outcome criterion_4() {
    Outcome out;
    const auto four_cycle = SimplicialComplex::from_facets(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
    const auto simplex = SimplicialComplex::from_facets(4, {{1, 2, 3, 4}});
    const auto boundary = SimplicialComplex::from_facets(4, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}});
    const auto two_edges = SimplicialComplex::from_facets(4, {{1, 2}, {3, 4}});
    for (FieldSpec field : {FieldSpec::prime(2), FieldSpec::rationals()}) {
        const std::string over = " over " + field.to_string();
        out.require(is_cohen_macaulay(four_cycle, field).satisfied, "4-cycle not CM" + over);
        out.require(is_cohen_macaulay(simplex, field).satisfied, "simplex not CM" + over);
        out.require(is_cohen_macaulay(boundary, field).satisfied, "simplex boundary not CM" + over);
        out.require(!is_serre(two_edges, 2, field).satisfied, "two disjoint edges (S_2)" + over);
    }
    if (out.ok)
        out.detail = "4-cycle, simplex, simplex boundary CM; two disjoint edges not (S_2); GF(2) and Q";
    return out;
}

Outcome criterion_5() {
    Outcome out;
    for (int d = 5; d <= 12; ++d) {
        const SimplicialComplex family = build_family(d);
        for (FieldSpec field : {FieldSpec::prime(2), FieldSpec::rationals()}) {
            const SerreVerdict v = is_serre(family, 2, field);
            out.require(!v.satisfied && v.witness && v.witness->kind == SerreWitness::Kind::Homology &&
                            v.witness->betti != 0,
                        "no homology witness at d=" + std::to_string(d) + " over " + field.to_string());
        }
        const ObstructionVerdict ob = s2_graph_obstruction(family);
        out.require(ob.status == ObstructionVerdict::Status::NotS2 && ob.witness &&
                        induced_c4_in(complement(cofacet_graph(family)), *ob.witness),
                    "graph route failed at d=" + std::to_string(d));
    }
    if (out.ok)
        out.detail = "d=5..12: homology witness over GF(2) and Q; induced 4-cycle in complement";
    return out;
}

Outcome search_criterion(int d, Int expected_candidates) {
    Outcome out;
    const SearchReport report = exhaustive_nonexistence_search(d, SearchOptions{FieldSpec::prime(2), 1, false});
    out.require(report.candidates_enumerated == expected_candidates,
                "enumerated " + std::to_string(report.candidates_enumerated));
    out.require(report.family_found, "family not among matches");
    out.require(report.s2_satisfiers_among_them == 0,
                std::to_string(report.s2_satisfiers_among_them) + " (S_2) matches");
    out.require(report.rationals_agree, "rationals re-check disagrees");
    if (out.ok)
        out.detail = "d=" + std::to_string(d) + ": " + std::to_string(report.candidates_enumerated) +
                     " candidates, " + std::to_string(report.candidates_with_target_hvector) +
                     " h-vector matches, 0 satisfy (S_2), rationals agree";
    return out;
}

Outcome criterion_7(std::uint64_t seed, int samples) {
    Outcome out;
    testing::PropertyTally tally;
    // Antichain covers of an n-set, n = 1..6.
    const long expected_counts[] = {0, 1, 2, 9, 114, 6894, 7785062};
    for (int n = 1; n <= 6; ++n) {
        long count = 0;
        testing::PropertyOptions options;
        options.rationals = n <= 5;
        options.brute_force_faces = n <= 5;
        testing::for_each_complex(n, [&](const std::vector<Face>& facets) {
            ++count;
            testing::check_properties(SimplicialComplex::from_facets(n, facets), tally, options);
        });
        out.require(count == expected_counts[n], "enumerated " + std::to_string(count) + " complexes on " +
                                                     std::to_string(n) + " vertices");
    }
    std::mt19937_64 rng(seed);
    for (int i = 0; i < samples; ++i)
        testing::check_properties(testing::random_complex(7, rng), tally);
    for (int i = 0; i < samples / 4; ++i)
        testing::check_properties(testing::random_codim_two_complex(7, rng), tally);
    for (const auto& [name, e] : tally.entries)
        out.require(e.failed == 0, name + " fails on " + e.first_failure);
    out.require(tally.entries.size() >= 10, "some property was never exercised");
    if (out.ok) {
        out.detail = std::to_string(tally.complexes) + " complexes (all on <= 6 vertices, " +
                     std::to_string(samples + samples / 4) + " sampled on 7), " +
                     std::to_string(tally.entries.size()) + " properties";
    }
    return out;
}

} // namespace

int main(int argc, char** argv) {
    int only = 0;
    std::uint64_t seed = 20241;
    int samples = 4000;
    for (int i = 1; i + 1 < argc; i += 2) {
        const std::string flag = argv[i];
        if (flag == "--only")
            only = std::atoi(argv[i + 1]);
        else if (flag == "--sample-seed")
            seed = std::strtoull(argv[i + 1], nullptr, 10);
        else if (flag == "--samples")
            samples = std::atoi(argv[i + 1]);
    }

    struct Criterion {
        int id;
        const char* name;
        double limit_seconds;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {1, "h-vector of the family", 1, criterion_1},
        {2, "inequality values", 1, criterion_2},
        {3, "M-vector oracle agreement", 10, criterion_3},
        {4, "Cohen-Macaulay baseline", 1, criterion_4},
        {5, "family is not (S_2), two routes", 5, criterion_5},
        {6, "exhaustive search d=5", 30, [] { return search_criterion(5, 20349); }},
        {6, "exhaustive search d=6", 900, [] { return search_criterion(6, 376740); }},
        {7, "property suites", 300, [&] { return criterion_7(seed, samples); }},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        if (only != 0 && only != c.id)
            continue;
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = c.run();
        } catch (const std::exception& e) {
            outcome.ok = false;
            outcome.detail = std::string("exception: ") + e.what();
        }
        const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = elapsed < c.limit_seconds;
        const bool pass = outcome.ok && in_time;
        if (!pass)
            ++failures;
        std::printf("[%s] criterion %d: %s (%.2f s, limit %.0f s)%s -- %s\n", pass ? "PASS" : "FAIL", c.id,
                    c.name, elapsed, c.limit_seconds, in_time ? "" : " TOO SLOW", outcome.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%s\n", failures == 0 ? "all criteria pass" : "some criteria FAIL");
    return failures == 0 ? 0 : 1;
}
