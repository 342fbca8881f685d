#include <doctest.h>

#include "hserre/error.hpp"
#include "hserre/family.hpp"
#include "support/oracles.hpp"

using namespace hserre;

namespace {

Int choose(int n, int k) {
    if (k < 0 || k > n)
        return 0;
    Int r = 1;
    for (int i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

} // namespace

TEST_CASE("family construction") {
    const auto c = build_family(5);
    CHECK(c.n() == 7);
    CHECK(c.facets() == std::vector<Face>{Face{3, 4, 5, 6, 7}, Face{2, 4, 5, 6, 7}, Face{2, 3, 5, 6, 7},
                                          Face{2, 3, 4, 6, 7}, Face{1, 2, 3, 4, 5}});
    const auto c6 = build_family(6);
    CHECK(c6.n() == 8);
    CHECK(c6.facets().size() == 6);
    for (Face f : c6.facets())
        CHECK(f.size() == 6);
    CHECK(is_pure(c6));
    CHECK_FALSE(is_cone(c6));

    for (int d : {-1, 0, 4}) {
        try {
            build_family(d);
            FAIL("expected an error");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::DTooSmall);
        }
    }
    CHECK_THROWS_AS(expected_hvector(4), Error);
    CHECK_THROWS_AS(family_hilbert_oracle(3), Error);
}

TEST_CASE("expected h-vector") {
    CHECK(expected_hvector(5).entries == std::vector<Int>{1, 2, 1, 1, 1, -1});
    CHECK(expected_hvector(6).entries == std::vector<Int>{1, 2, 1, 1, 1, 1, -1});
    const auto h7 = expected_hvector(7);
    CHECK(h7.entries.size() == 8);
    Int sum = 0;
    for (Int x : h7.entries)
        sum += x;
    CHECK(sum == 7);
}

TEST_CASE("h-vector of the family: faces and exact sequence agree") {
    for (int d = 5; d <= 11; ++d) {
        CAPTURE(d);
        const auto c = build_family(d);
        CHECK(h_vector(c) == expected_hvector(d));
        const HilbertSeries oracle_series = family_hilbert_oracle(d);
        CHECK(oracle_series == hilbert_from_h(expected_hvector(d)));
        CHECK(oracle_series == hilbert_from_f(f_vector(c)));
        const auto parts = family_decomposition(d);
        CHECK(parts.stanley_reisner == oracle_series);
        CHECK(parts.quotient_by_k.denom_exponent() == d);
        if (d <= 8)
            CHECK(oracle::f_vector(c) == f_vector(c).counts);
    }
}

TEST_CASE("theorem checks pass with the expected closed forms") {
    const std::vector<FieldSpec> fields{FieldSpec::prime(2), FieldSpec::rationals()};
    const auto r5 = verify_theorem_main(5, fields);
    CHECK(r5.all_pass);
    CHECK(r5.closed_forms == std::vector<Int>{2, 2, 0});
    CHECK(r5.conditions.gpsy_sums == r5.closed_forms);
    CHECK(r5.serre.size() == 2);
    CHECK(r5.obstruction.status == ObstructionVerdict::Status::NotS2);
    for (const auto& check : r5.checks) {
        CAPTURE(check.name);
        CHECK(check.passed);
    }

    CHECK(verify_theorem_main(6, fields).closed_forms == std::vector<Int>{3, 5, 5});
    const auto r9 = verify_theorem_main(9, {FieldSpec::prime(2)});
    CHECK(r9.all_pass);
    CHECK(r9.closed_forms == std::vector<Int>{6, 20, 48});
    for (int d = 5; d <= 10; ++d) {
        const auto r = verify_theorem_main(d, {FieldSpec::prime(3)});
        CHECK(r.all_pass);
        CHECK(r.closed_forms == std::vector<Int>{d - 3, (d - 4) * (d - 1) / 2, choose(d, 3) - choose(d, 2)});
    }
}

TEST_CASE("exhaustive search at d = 5") {
    const auto r = exhaustive_nonexistence_search(5);
    CHECK(r.candidates_enumerated == 20349);
    CHECK(r.candidates_with_target_hvector == 105);
    CHECK(r.s2_satisfiers_among_them == 0);
    CHECK(r.family_found);
    CHECK(r.rationals_agree);
    CHECK(r.matches.size() == 105);
    bool family_witness = false;
    for (const auto& m : r.matches) {
        REQUIRE(m.witness.has_value());
        if (m.is_family) {
            CHECK(m.facets == build_family(5).facets());
            family_witness = m.witness->face == Face{3, 4, 5};
        }
    }
    CHECK(family_witness);

    SearchOptions parallel;
    parallel.workers = 4;
    const auto p = exhaustive_nonexistence_search(5, parallel);
    CHECK(p.candidates_enumerated == r.candidates_enumerated);
    CHECK(p.skipped_uncovered == r.skipped_uncovered);
    REQUIRE(p.matches.size() == r.matches.size());
    for (std::size_t i = 0; i < p.matches.size(); ++i) {
        CHECK(p.matches[i].facets == r.matches[i].facets);
        CHECK(p.matches[i].witness->face == r.matches[i].witness->face);
    }
}

TEST_CASE("check_all counts (S_2) candidates overall") {
    SearchOptions options;
    options.check_all = true;
    const auto r = exhaustive_nonexistence_search(5, options);
    REQUIRE(r.s2_satisfiers_overall.has_value());
    CHECK(*r.s2_satisfiers_overall > 0);
    CHECK(r.s2_satisfiers_among_them == 0);
}

TEST_CASE("search range is guarded") {
    try {
        exhaustive_nonexistence_search(7);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DTooLarge);
    }
    CHECK_THROWS_AS(exhaustive_nonexistence_search(4), Error);
}
