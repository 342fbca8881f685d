#include "hserre/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "hserre/complex_io.hpp"
#include "hserre/family.hpp"
#include "hserre/graph.hpp"
#include "hserre/homology.hpp"
#include "hserre/hvector.hpp"
#include "hserre/serre.hpp"

namespace hserre::cli {

namespace {

using nlohmann::json;

std::string tuple(const std::vector<Int>& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i)
        out += (i ? "," : "") + std::to_string(v[i]);
    return out + ")";
}

std::string tuple(const FourCycle& q) {
    return tuple(std::vector<Int>(q.begin(), q.end()));
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

SimplicialComplex read_complex(const std::string& path) {
    std::ostringstream buffer;
    if (path == "-") {
        buffer << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in)
            throw std::runtime_error("cannot open '" + path + "'");
        buffer << in.rdbuf();
    }
    return parse_complex(buffer.str());
}

std::vector<Int> parse_vector(const std::string& text) {
    std::vector<Int> values;
    std::string token;
    for (char c : text) {
        if (c == ',' || c == ' ' || c == '(' || c == ')') {
            if (!token.empty()) {
                values.push_back(std::stoll(token));
                token.clear();
            }
        } else {
            token += c;
        }
    }
    if (!token.empty())
        values.push_back(std::stoll(token));
    if (values.empty())
        throw Error(ErrorCode::EmptyInput, "empty vector");
    return values;
}

json witness_json(const std::optional<SerreWitness>& w) {
    if (!w)
        return nullptr;
    json j;
    j["kind"] = w->kind == SerreWitness::Kind::Impure ? "impure" : "homology";
    j["face"] = w->face.vertices();
    if (w->kind == SerreWitness::Kind::Homology) {
        j["degree"] = w->degree;
        j["betti"] = w->betti;
    }
    return j;
}

std::string witness_text(const std::optional<SerreWitness>& w) {
    if (!w)
        return "none";
    if (w->kind == SerreWitness::Kind::Impure)
        return "impure, facet " + w->face.to_string();
    return "face " + w->face.to_string() + ", degree " + std::to_string(w->degree) + ", betti " +
           std::to_string(w->betti);
}

json verdict_json(const SerreVerdict& v) {
    return {{"satisfied", v.satisfied}, {"r", v.r}, {"field", v.field.to_string()},
            {"witness", witness_json(v.witness)}};
}

void print_verdict(std::ostream& out, const SerreVerdict& v) {
    out << "r = " << v.r << '\n'
        << "field = " << v.field.to_string() << '\n'
        << "satisfied = " << yes_no(v.satisfied) << '\n'
        << "witness = " << witness_text(v.witness) << '\n';
}

json conditions_json(const ConditionReport& c) {
    return {{"r", c.r},
            {"m_vector", c.is_m_vector},
            {"gpsy_sums", c.gpsy_sums},
            {"gpsy_nonnegative", c.gpsy_nonnegative},
            {"mt_zero_tail_ok", c.mt_zero_tail_ok},
            {"all_pass", c.all_pass}};
}

void print_conditions(std::ostream& out, const ConditionReport& c) {
    out << "r = " << c.r << '\n'
        << "m_vector = " << yes_no(c.is_m_vector) << '\n'
        << "gpsy_sums = " << tuple(c.gpsy_sums) << '\n'
        << "gpsy_nonnegative = " << yes_no(c.gpsy_nonnegative) << '\n'
        << "mt_zero_tail_ok = " << yes_no(c.mt_zero_tail_ok) << '\n'
        << "all_pass = " << yes_no(c.all_pass) << '\n';
}

bool search_holds(const SearchReport& r) {
    return r.s2_satisfiers_among_them == 0 && r.family_found && r.rationals_agree;
}

json search_json(const SearchReport& r) {
    json j = {{"d", r.d},
              {"field", r.field.to_string()},
              {"candidates_enumerated", r.candidates_enumerated},
              {"skipped_uncovered", r.skipped_uncovered},
              {"candidates_with_target_hvector", r.candidates_with_target_hvector},
              {"s2_satisfiers_among_them", r.s2_satisfiers_among_them},
              {"family_found", r.family_found},
              {"rationals_agree", r.rationals_agree}};
    if (r.s2_satisfiers_overall)
        j["s2_satisfiers_overall"] = *r.s2_satisfiers_overall;
    j["matches"] = json::array();
    for (const auto& m : r.matches) {
        json facets = json::array();
        for (Face f : m.facets)
            facets.push_back(f.vertices());
        j["matches"].push_back({{"facets", facets},
                                {"witness", witness_json(m.witness)},
                                {"rationals_agree", m.rationals_agree},
                                {"is_family", m.is_family}});
    }
    return j;
}

void print_search(std::ostream& out, const SearchReport& r) {
    out << "d = " << r.d << '\n'
        << "field = " << r.field.to_string() << '\n'
        << "candidates_enumerated = " << r.candidates_enumerated << '\n'
        << "skipped_uncovered = " << r.skipped_uncovered << '\n'
        << "candidates_with_target_hvector = " << r.candidates_with_target_hvector << '\n'
        << "s2_satisfiers_among_them = " << r.s2_satisfiers_among_them << '\n';
    if (r.s2_satisfiers_overall)
        out << "s2_satisfiers_overall = " << *r.s2_satisfiers_overall << '\n';
    out << "family_found = " << yes_no(r.family_found) << '\n'
        << "rationals_agree = " << yes_no(r.rationals_agree) << '\n';
    for (const auto& m : r.matches) {
        out << "match";
        for (Face f : m.facets)
            out << ' ' << f.to_string();
        out << (m.is_family ? " [family]" : "") << " : " << witness_text(m.witness) << '\n';
    }
}

struct Options {
    std::string input;
    std::string format = "text";
    std::string field = "gf2";
    std::string vector;
    std::string output;
    int r = 2;
    int d = 5;
    int workers = 1;
    bool check_all = false;
};

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"h-vectors, Hilbert series and Serre's condition for simplicial complexes", "hserre"};
    app.require_subcommand(1);
    Options opt;

    auto add_input = [&](CLI::App* sub) {
        sub->add_option("--in", opt.input, "complex document ('-' for stdin)")->required();
    };
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", opt.format, "report format")->check(CLI::IsMember({"text", "json"}));
    };
    auto add_field = [&](CLI::App* sub) {
        sub->add_option("--field", opt.field, "coefficient field: q, gf2 or gf<p>");
    };

    auto* fvector_cmd = app.add_subcommand("fvector", "face counts by cardinality");
    auto* hvector_cmd = app.add_subcommand("hvector", "h-vector");
    auto* hilbert_cmd = app.add_subcommand("hilbert", "Hilbert series of the Stanley-Reisner ring");
    auto* betti_cmd = app.add_subcommand("betti", "reduced Betti numbers");
    auto* cone_cmd = app.add_subcommand("cone", "is some vertex in every facet");
    auto* pure_cmd = app.add_subcommand("pure", "do all facets have the same size");
    auto* cm_cmd = app.add_subcommand("cm", "Cohen-Macaulay test (Reisner)");
    auto* serre_cmd = app.add_subcommand("serre", "Serre's condition (S_r)");
    auto* cofacet_cmd = app.add_subcommand("cofacet-graph", "graph of facet complements");
    auto* obstruct_cmd = app.add_subcommand("obstruct-s2", "induced 4-cycle screen for (S_2)");
    for (auto* sub : {fvector_cmd, hvector_cmd, hilbert_cmd, betti_cmd, cone_cmd, pure_cmd, cm_cmd, serre_cmd,
                      cofacet_cmd, obstruct_cmd}) {
        add_input(sub);
        add_format(sub);
    }
    for (auto* sub : {betti_cmd, cm_cmd, serre_cmd})
        add_field(sub);
    serre_cmd->add_option("--r", opt.r, "Serre index")->check(CLI::Range(2, 64));

    auto* mvector_cmd = app.add_subcommand("mvector", "M-vector test on a vector or a complex's h-vector");
    auto* gpsy_cmd = app.add_subcommand("gpsy", "necessary conditions on the h-vector of an (S_r) complex");
    for (auto* sub : {mvector_cmd, gpsy_cmd}) {
        auto* in = sub->add_option("--in", opt.input, "complex document ('-' for stdin)");
        auto* vec = sub->add_option("--vector", opt.vector, "integer vector, e.g. 1,2,1");
        in->excludes(vec);
        add_format(sub);
    }
    gpsy_cmd->add_option("--r", opt.r, "Serre index")->required();

    auto* family_cmd = app.add_subcommand("family", "write the complex Δ_d");
    family_cmd->add_option("--d", opt.d, "d >= 5")->required();
    family_cmd->add_option("--out", opt.output, "output file (default stdout)");
    add_format(family_cmd);

    auto* search_cmd = app.add_subcommand("search", "exhaustive search for (S_2) complexes with h(Δ_d)");
    search_cmd->add_option("--d", opt.d, "5 or 6")->required();
    search_cmd->add_option("--workers", opt.workers, "worker threads")->check(CLI::Range(1, 256));
    search_cmd->add_flag("--check-all", opt.check_all, "run (S_2) on every candidate");
    add_field(search_cmd);
    add_format(search_cmd);

    auto* verify_cmd = app.add_subcommand("verify-paper", "check every claim about Δ_d (search for d <= 6)");
    verify_cmd->add_option("--d", opt.d, "d >= 5")->required();
    verify_cmd->add_option("--workers", opt.workers, "worker threads for the search")->check(CLI::Range(1, 256));
    add_format(verify_cmd);

    std::vector<std::string> argv_storage{"hserre"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_storage)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsageError;
    }

    const bool as_json = opt.format == "json";
    try {
        if (*fvector_cmd) {
            const FVector f = f_vector(read_complex(opt.input));
            if (as_json)
                out << json{{"f", f.counts}}.dump() << '\n';
            else
                out << "f = " << tuple(f.counts) << '\n';
            return kHolds;
        }
        if (*hvector_cmd) {
            const SimplicialComplex c = read_complex(opt.input);
            const HVector h = h_vector(c);
            if (as_json)
                out << json{{"n", c.n()}, {"d", c.d()}, {"h", h.entries}}.dump() << '\n';
            else
                out << "n = " << c.n() << "\nd = " << c.d() << "\nh = " << tuple(h.entries) << '\n';
            return kHolds;
        }
        if (*hilbert_cmd) {
            const HilbertSeries s = hilbert_from_h(h_vector(read_complex(opt.input)));
            if (as_json)
                out << json{{"numerator", s.numerator().coeffs()}, {"denom_exponent", s.denom_exponent()}}.dump()
                    << '\n';
            else
                out << "hilbert = " << s.to_string() << '\n';
            return kHolds;
        }
        if (*betti_cmd) {
            const FieldSpec field = FieldSpec::parse(opt.field);
            const BettiTable b = reduced_betti(read_complex(opt.input), field);
            if (as_json)
                out << json{{"field", field.to_string()}, {"first_degree", -1}, {"betti", b.values}}.dump() << '\n';
            else
                out << "field = " << field.to_string() << "\nbetti[-1..] = " << tuple(b.values) << '\n';
            return kHolds;
        }
        if (*cone_cmd) {
            const auto apex = cone_apex(read_complex(opt.input));
            if (as_json)
                out << json{{"cone", apex.has_value()}, {"apex", apex ? json(*apex) : json(nullptr)}}.dump() << '\n';
            else
                out << "cone = " << yes_no(apex.has_value()) << (apex ? "\napex = " + std::to_string(*apex) : "")
                    << '\n';
            return apex ? kHolds : kRefuted;
        }
        if (*pure_cmd) {
            const bool pure = is_pure(read_complex(opt.input));
            if (as_json)
                out << json{{"pure", pure}}.dump() << '\n';
            else
                out << "pure = " << yes_no(pure) << '\n';
            return pure ? kHolds : kRefuted;
        }
        if (*cm_cmd || *serre_cmd) {
            const FieldSpec field = FieldSpec::parse(opt.field);
            const SimplicialComplex c = read_complex(opt.input);
            const SerreVerdict v = *cm_cmd ? is_cohen_macaulay(c, field) : is_serre(c, opt.r, field);
            if (as_json)
                out << verdict_json(v).dump() << '\n';
            else
                print_verdict(out, v);
            return v.satisfied ? kHolds : kRefuted;
        }
        if (*cofacet_cmd) {
            const Graph g = cofacet_graph(read_complex(opt.input));
            if (as_json) {
                out << json{{"n", g.n()}, {"edges", g.edges()}}.dump() << '\n';
            } else {
                out << "n = " << g.n() << "\nedges =";
                for (auto [u, v] : g.edges())
                    out << " {" << u << ',' << v << '}';
                out << '\n';
            }
            return kHolds;
        }
        if (*obstruct_cmd) {
            const ObstructionVerdict v = s2_graph_obstruction(read_complex(opt.input));
            const bool refuted = v.status == ObstructionVerdict::Status::NotS2;
            if (as_json)
                out << json{{"status", refuted ? "NotS2" : "Inconclusive"},
                            {"witness", v.witness ? json(*v.witness) : json(nullptr)}}
                           .dump()
                    << '\n';
            else
                out << "status = " << (refuted ? "NotS2" : "Inconclusive") << "\nwitness = "
                    << (v.witness ? tuple(*v.witness) : "none") << '\n';
            return refuted ? kRefuted : kHolds;
        }
        if (*mvector_cmd || *gpsy_cmd) {
            std::vector<Int> v;
            if (!opt.vector.empty())
                v = parse_vector(opt.vector);
            else if (!opt.input.empty())
                v = h_vector(read_complex(opt.input)).entries;
            else
                throw Error(ErrorCode::EmptyInput, "give --vector or --in");
            if (*mvector_cmd) {
                const bool ok = is_m_vector(v);
                if (as_json)
                    out << json{{"vector", v}, {"m_vector", ok}}.dump() << '\n';
                else
                    out << "vector = " << tuple(v) << "\nm_vector = " << yes_no(ok) << '\n';
                return ok ? kHolds : kRefuted;
            }
            const ConditionReport c = check_question_2_6(HVector{v}, opt.r);
            if (as_json) {
                json j = conditions_json(c);
                j["h"] = v;
                out << j.dump() << '\n';
            } else {
                out << "h = " << tuple(v) << '\n';
                print_conditions(out, c);
            }
            return c.all_pass ? kHolds : kRefuted;
        }
        if (*family_cmd) {
            const std::string doc =
                write_complex(build_family(opt.d), as_json ? DocumentFormat::Json : DocumentFormat::Text,
                              "Delta_" + std::to_string(opt.d));
            if (opt.output.empty()) {
                out << doc;
            } else {
                std::ofstream file(opt.output);
                if (!file)
                    throw std::runtime_error("cannot write '" + opt.output + "'");
                file << doc;
            }
            return kHolds;
        }
        if (*search_cmd) {
            SearchOptions so;
            so.field = FieldSpec::parse(opt.field);
            so.workers = opt.workers;
            so.check_all = opt.check_all;
            const SearchReport r = exhaustive_nonexistence_search(opt.d, so);
            err << "search: " << r.elapsed_seconds << " s with " << r.workers << " worker(s)\n";
            if (as_json)
                out << search_json(r).dump() << '\n';
            else
                print_search(out, r);
            return search_holds(r) ? kHolds : kRefuted;
        }
        if (*verify_cmd) {
            const TheoremReport t =
                verify_theorem_main(opt.d, {FieldSpec::prime(2), FieldSpec::rationals()});
            std::optional<SearchReport> search;
            if (opt.d <= kMaxSearchD) {
                SearchOptions so;
                so.workers = opt.workers;
                search = exhaustive_nonexistence_search(opt.d, so);
                err << "search: " << search->elapsed_seconds << " s with " << search->workers << " worker(s)\n";
            }
            const bool holds = t.all_pass && (!search || search_holds(*search));
            if (as_json) {
                json j = {{"d", t.d},
                          {"h_expected", t.expected.entries},
                          {"h_by_faces", t.by_faces.entries},
                          {"hilbert_exact_sequence", t.by_exact_sequence.to_string()},
                          {"conditions", conditions_json(t.conditions)},
                          {"closed_forms", t.closed_forms},
                          {"all_pass", holds}};
                j["checks"] = json::array();
                for (const auto& c : t.checks)
                    j["checks"].push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
                j["serre"] = json::array();
                for (const auto& v : t.serre)
                    j["serre"].push_back(verdict_json(v));
                j["search"] = search ? search_json(*search) : json(nullptr);
                out << j.dump() << '\n';
            } else {
                out << "d = " << t.d << '\n';
                for (const auto& c : t.checks)
                    out << (c.passed ? "[pass] " : "[FAIL] ") << c.name << ": " << c.detail << '\n';
                if (search) {
                    out << (search_holds(*search) ? "[pass] " : "[FAIL] ") << "exhaustive search\n";
                    print_search(out, *search);
                } else {
                    out << "[skip] exhaustive search: only run for d <= " << kMaxSearchD << '\n';
                }
                out << "all_pass = " << yes_no(holds) << '\n';
            }
            return holds ? kHolds : kRefuted;
        }
    } catch (const Error& e) {
        err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
        return kUsageError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }
    return kUsageError;
}

} // namespace hserre::cli
