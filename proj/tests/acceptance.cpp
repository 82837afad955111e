// Runs the eight acceptance criteria and prints one PASS/FAIL line for each.

#include "oracles.hpp"

#include <homoglab/canonical.hpp>
#include <homoglab/presentation.hpp>
#include <homoglab/rado.hpp>
#include <homoglab/structure.hpp>
#include <homoglab/verify.hpp>

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

using namespace homoglab;

namespace
{
    struct Outcome
    {
        bool pass = false;
        std::string detail;
    };

    // shared between criteria 1 and 8
    std::optional<SuiteReport> cross_validation;

    auto criterion_1() -> Outcome
    {
        std::ostringstream detail;
        bool counts_ok = true;
        for (int n = 1 ; n <= 7 ; ++n) {
            long expected = n <= 5 ? oracle::class_count_by_dedup(n) : oracle::class_count_by_orbits(n);
            long actual = long(enumerate_graphs(n).size());
            counts_ok = counts_ok && expected == actual;
            detail << (n > 1 ? "," : "classes ") << actual;
        }
        auto start = std::chrono::steady_clock::now();
        cross_validation = cross_validate_hh(7);
        auto seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        long disagreements = cross_validation->failures_with_clause(clause::decider_disagreement);
        detail << "; " << cross_validation->instances << " graphs, " << disagreements << " disagreements, "
            << seconds << " s";
        return {counts_ok && disagreements == 0 && seconds < 600, detail.str()};
    }

    auto criterion_2() -> Outcome
    {
        bool ok = true;
        std::ostringstream detail;
        for (int m : {2, 3, 4}) {
            auto g = truncate(families::rs(3), 3 + 3 * m);
            auto report = analyze(g);
            bool unique = report.directories.size() == 1
                && report.directories[0] == VertexSet::of(g.order(), {0, 1, 2});
            bool coneless = cone_set(g, VertexSet::of(g.order(), {0, 1, 2}), Polarity::cone).empty();
            ok = ok && report.independence_number == 3 && report.star_number == 2 && unique && coneless;
            detail << "m=" << m << ": alpha=" << report.independence_number << " sigma=" << report.star_number
                << " directories=" << report.directories.size() << (coneless ? " no cone; " : " cone found; ");
        }
        return {ok, detail.str()};
    }

    auto criterion_3() -> Outcome
    {
        auto report = verify_alpha_bound_family(3, 6);
        bool ok = report.passed();
        std::ostringstream detail;
        for (int n = 3 ; n <= 6 ; ++n) {
            auto key = std::to_string(n);
            long a = report.stat("alpha_n" + key), bound = report.stat("bound_n" + key);
            ok = ok && a < bound && ((a == bound - 1) == (n == 3));
            detail << "n=" << n << ": " << a << " < " << bound << "; ";
        }
        return {ok, detail.str()};
    }

    auto criterion_4() -> Outcome
    {
        long failures = 0;
        for (int m : {2, 3, 4}) {
            auto g = truncate(families::rs(3), 3 + 3 * m);
            failures += long(verify_directory_lemmas(g, VertexSet::of(g.order(), {0, 1, 2}), "rs:3").failures.size());
        }
        auto random = verify_directory_lemmas_random({.count = 1000, .max_order = 40, .seed = 20191});
        failures += long(random.failures.size());
        std::ostringstream detail;
        detail << "rs:3 (m=2,3,4) and " << random.instances << " random graphs (seed 20191), "
            << failures << " failures";
        return {failures == 0 && random.instances == 1000, detail.str()};
    }

    auto criterion_5() -> Outcome
    {
        auto bit = families::rado_bit();
        long checked = 0, missing = 0;
        // every disjoint (A, B) inside the first 10 vertices with |A u B| <= 4
        for (std::uint32_t mask = 1 ; mask < (1u << 10) ; ++mask) {
            auto members = oracle::members(mask);
            if (members.size() > 4)
                continue;
            for (std::uint32_t split = 0 ; split < (1u << members.size()) ; ++split) {
                NaturalSet a, b;
                for (std::size_t k = 0 ; k < members.size() ; ++k)
                    (split >> k & 1 ? a : b).push_back(Natural(members[k]));
                auto w = extension_witness(bit, a, b, 1u << 16);
                ++checked;
                bool valid = w.status == WitnessStatus::found;
                if (valid)
                    for (auto v : a)
                        valid = valid && bit.adjacent(*w.vertex, v);
                if (valid)
                    for (auto v : b)
                        valid = valid && ! bit.adjacent(*w.vertex, v);
                missing += ! valid;
            }
        }
        auto rs = extension_witness(families::rs(3), {0, 1, 2}, {}, 4096);
        std::ostringstream detail;
        detail << checked << " requirements, " << missing << " without witness; rs:3 cone over A_3 "
            << to_string(rs.status);
        return {missing == 0 && rs.status == WitnessStatus::proven_absent, detail.str()};
    }

    auto criterion_6() -> Outcome
    {
        bool ok = true;
        std::ostringstream detail;
        for (auto p : {families::union_cliques_complement(), families::rado_bit()}) {
            auto c = spanning_rado(p, 12, 1u << 16);
            auto violations = verify_construction(p, c);
            ok = ok && c.placed.size() >= 12 && violations.empty() && ! c.schedule.empty();
            detail << p.name() << ": " << c.placed.size() << " placed, " << c.schedule.size() << " served, "
                << violations.size() << " violations; ";
        }
        try {
            spanning_rado(families::rs(3), 40, 4096);
            ok = false;
            detail << "rs:3 did not fail";
        }
        catch (const BudgetExhausted & e) {
            bool pattern = e.requirement().a == NaturalSet{0, 1, 2};
            ok = ok && pattern;
            detail << "rs:3 stops at " << e.requirement().to_string() << (e.proven_absent() ? " (proven)" : "");
        }
        return {ok, detail.str()};
    }

    auto criterion_7() -> Outcome
    {
        const std::pair<Presentation, MbVerdict> cases[] = {
            {families::k_omega(), MbVerdict::k_omega},
            {families::null_graph(), MbVerdict::null},
            {families::i_omega_k_omega(), MbVerdict::i_omega_of_k_omega},
            {families::complement_of(families::i_omega_k_omega()), MbVerdict::k_omega_of_i_omega},
            {families::rado_bit(), MbVerdict::rado},
            {families::two_way_path(), MbVerdict::not_mb_evidence}};
        bool ok = true;
        std::ostringstream detail;
        for (auto & [p, expected] : cases) {
            auto verdict = classify_mb(p, 512).verdict;
            ok = ok && verdict == expected;
            detail << p.name() << "=" << to_string(verdict) << " ";
        }
        return {ok, detail.str()};
    }

    auto criterion_8() -> Outcome
    {
        if (! cross_validation)
            cross_validation = cross_validate_hh(7);
        long positive = 0;
        for (int n = 1 ; n <= 7 ; ++n)
            positive += cross_validation->stat("hh_n" + std::to_string(n));
        long exceptions = cross_validation->failures_with_clause(clause::neighbourhood_closure);
        std::ostringstream detail;
        detail << positive << " HH-positive graphs, " << exceptions << " exceptions";
        return {exceptions == 0 && positive > 0, detail.str()};
    }
}

auto main() -> int
{
    const std::pair<const char *, std::function<Outcome ()>> criteria[] = {
        {"HH decider equivalence, 1-7 vertices", criterion_1},
        {"RS(3) reproduction", criterion_2},
        {"alpha bound over rs(3..6)", criterion_3},
        {"directory lemmas", criterion_4},
        {"Rado probes", criterion_5},
        {"spanning Rado construction", criterion_6},
        {"MB classification probes", criterion_7},
        {"neighbourhood closure", criterion_8}};

    int failed = 0, index = 0;
    for (auto & [name, run] : criteria) {
        ++index;
        Outcome outcome;
        try {
            outcome = run();
        }
        catch (const std::exception & e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        failed += ! outcome.pass;
        std::cout << (outcome.pass ? "PASS" : "FAIL") << " criterion " << index << " (" << name << "): "
            << outcome.detail << std::endl;
    }
    return failed == 0 ? 0 : 1;
}
