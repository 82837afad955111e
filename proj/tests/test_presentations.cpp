#include "oracles.hpp"

#include <homoglab/errors.hpp>
#include <homoglab/graph_io.hpp>
#include <homoglab/presentation.hpp>
#include <homoglab/rado.hpp>
#include <homoglab/structure.hpp>

#include <gtest/gtest.h>

#include <cstdlib>

using namespace homoglab;

namespace
{
    auto is_clique_union(const Graph & g) -> bool
    {
        for (int u = 0 ; u < g.order() ; ++u)
            for (int v = 0 ; v < g.order() ; ++v)
                for (int w = 0 ; w < g.order() ; ++w)
                    if (u != w && g.adjacent(u, v) && g.adjacent(v, w) && ! g.adjacent(u, w))
                        return false;
        return true;
    }
}

TEST(Presentation, RsTruncationsFollowTheConstruction)
{
    for (int n : {3, 4, 5})
        for (int m : {1, 2, 3})
            EXPECT_EQ(truncate(families::rs(n), n + n * m), oracle::rs_graph(n, m)) << n << " " << m;
    EXPECT_EQ(truncate(families::rs(3), 3), named::empty(3));
    EXPECT_THROW(families::rs(2), BadParams);
}

TEST(Presentation, RsAlphaAndSigma)
{
    for (int n = 3 ; n <= 6 ; ++n) {
        auto g = truncate(families::rs(n), 3 * n);
        auto rows = oracle::rows_of(g);
        EXPECT_EQ(oracle::alpha(rows), n);
        EXPECT_EQ(oracle::star_number(rows), n - 1);
    }
}

TEST(Presentation, BitGraph)
{
    auto g = truncate(families::rado_bit(), 4);
    EXPECT_EQ(g, Graph::from_edges(4, {{0, 1}, {0, 3}, {1, 3}, {1, 2}}));
}

TEST(Presentation, CliqueFamilies)
{
    for (int n : {1, 5, 17, 40}) {
        EXPECT_TRUE(is_clique_union(truncate(families::i_omega_k_omega(), n))) << n;
        EXPECT_TRUE(is_clique_union(complement(truncate(families::union_cliques_complement(), n)))) << n;
    }
    // consecutive cliques K_1, K_2, K_3: vertex 0 alone, then {1,2}, then {3,4,5}
    auto g = complement(truncate(families::union_cliques_complement(), 6));
    EXPECT_EQ(g, Graph::from_edges(6, {{1, 2}, {3, 4}, {3, 5}, {4, 5}}));
    EXPECT_EQ(truncate(families::k_omega(), 5), named::complete(5));
    EXPECT_EQ(truncate(families::null_graph(), 5), named::empty(5));
}

TEST(Presentation, TwoWayPathTruncationsArePaths)
{
    for (int k = 1 ; k <= 30 ; ++k) {
        auto g = truncate(families::two_way_path(), k);
        EXPECT_EQ(g.edge_count(), k - 1);
        EXPECT_TRUE(is_connected(g)) << k;
        for (int v = 0 ; v < k ; ++v)
            EXPECT_LE(g.degree(v), 2);
    }
    EXPECT_EQ(families::zigzag_integer(0), 0);
    EXPECT_EQ(families::zigzag_integer(3), 2);
    EXPECT_EQ(families::zigzag_integer(4), -2);
}

TEST(Presentation, CantorPairing)
{
    for (Natural k = 0 ; k < 2000 ; ++k) {
        auto [x, y] = families::cantor_unpair(k);
        EXPECT_EQ((x + y) * (x + y + 1) / 2 + y, k);
    }
}

TEST(Presentation, TruncationMonotoneAndPure)
{
    for (auto name : {"rado_bit", "rs:4", "i_omega_k_omega", "two_way_path", "lex(rs:3,two_way_path)",
            "complement(union_cliques_complement)"}) {
        auto p = make_presentation(name);
        auto big = truncate(p, 60);
        for (int n : {0, 7, 31, 60})
            EXPECT_EQ(induced_subgraph(big, VertexSet::prefix(60, n)).graph, truncate(p, n)) << name;
        EXPECT_EQ(to_graph6(truncate(p, 60)), to_graph6(big)) << name;
        EXPECT_EQ(truncate(families::complement_of(families::complement_of(p)), 60), big) << name;
    }
}

TEST(Presentation, SpecParsing)
{
    EXPECT_EQ(make_presentation("rs:3").name(), "rs:3");
    EXPECT_EQ(make_presentation("lex:k_omega,i_omega").name(), "lex(k_omega,null)");
    EXPECT_EQ(make_presentation("complement:rado_bit").name(), "complement(rado_bit)");
    auto nested = make_presentation("lex(complement(null),lex(null,k_omega))");
    EXPECT_EQ(nested.name(), "lex(complement(null),lex(null,k_omega))");
    EXPECT_THROW(make_presentation("rs:x"), BadParams);
    EXPECT_THROW(make_presentation("rs:2"), BadParams);
    EXPECT_THROW(make_presentation("petersen"), BadParams);
    EXPECT_THROW(make_presentation("lex:k_omega"), BadParams);
}

TEST(Witness, Examples)
{
    auto bit = families::rado_bit();
    auto w = extension_witness(bit, {0}, {1}, 64);
    ASSERT_EQ(w.status, WitnessStatus::found);
    EXPECT_EQ(*w.vertex, 5u);
    EXPECT_EQ(*extension_witness(bit, {}, {}, 64).vertex, 0u);
    EXPECT_EQ(extension_witness(families::rs(3), {0, 1, 2}, {}, 4096).status, WitnessStatus::proven_absent);
    EXPECT_EQ(extension_witness(families::rs(3), {0, 1}, {}, 4).status, WitnessStatus::exhausted);
    EXPECT_EQ(extension_witness(families::k_omega(), {}, {0}, 100).status, WitnessStatus::proven_absent);
    EXPECT_EQ(extension_witness(families::null_graph(), {0}, {}, 100).status, WitnessStatus::proven_absent);
    EXPECT_EQ(extension_witness(families::complement_of(families::null_graph()), {}, {0}, 100).status,
            WitnessStatus::proven_absent);
    EXPECT_THROW(extension_witness(bit, {1}, {1}, 64), InvalidInput);
    EXPECT_THROW(extension_witness(bit, {70}, {}, 64), InvalidInput);
}

TEST(Witness, ExcludedVerticesAreSkipped)
{
    auto bit = families::rado_bit();
    auto w = extension_witness(bit, {0}, {1}, 64, {5, 9});
    EXPECT_EQ(*w.vertex, 13u);
}

TEST(Witness, BoundedProperties)
{
    auto bit = check_property_bounded(families::rado_bit(), BoundedProperty::triangle, 4, 10, 1u << 16);
    EXPECT_TRUE(bit.all_witnessed());
    EXPECT_EQ(bit.sets_checked, 10 + 45 + 120 + 210);

    auto rs = check_property_bounded(families::rs(3), BoundedProperty::triangle, 3, 6, 1024);
    ASSERT_FALSE(rs.all_witnessed());
    EXPECT_EQ(rs.failures.front().set, (NaturalSet{0, 1, 2}));
    EXPECT_EQ(rs.failures.front().status, WitnessStatus::proven_absent);

    EXPECT_TRUE(check_property_bounded(families::union_cliques_complement(), BoundedProperty::triangle, 3, 8, 512)
            .all_witnessed());
}

TEST(Spanning, RadoBitAndCliqueComplement)
{
    for (auto p : {families::rado_bit(), families::union_cliques_complement()}) {
        auto c = spanning_rado(p, 12, 1u << 16);
        EXPECT_GE(c.placed.size(), 12u);
        EXPECT_FALSE(c.schedule.empty());
        EXPECT_TRUE(verify_construction(p, c).empty()) << p.name();
        for (Natural v = 0 ; v < 12 ; ++v)
            EXPECT_NE(std::find(c.placed.begin(), c.placed.end(), v), c.placed.end());
    }
}

TEST(Spanning, RsFailsAtTheDirectory)
{
    try {
        spanning_rado(families::rs(3), 40, 4096);
        FAIL() << "expected BudgetExhausted";
    }
    catch (const BudgetExhausted & e) {
        EXPECT_EQ(e.requirement().a, (NaturalSet{0, 1, 2}));
        EXPECT_TRUE(e.proven_absent());
        EXPECT_TRUE(verify_construction(families::rs(3), e.partial()).empty());
    }
}

TEST(Spanning, EmptyConstructionAndTamperDetection)
{
    auto p = families::rado_bit();
    auto empty = spanning_rado(p, 0, 64);
    EXPECT_TRUE(empty.placed.empty());
    EXPECT_TRUE(empty.schedule.empty());

    auto c = spanning_rado(p, 8, 1u << 16);
    ASSERT_FALSE(c.selected_edges.empty());
    auto tampered = c;
    tampered.selected_edges.pop_back();
    EXPECT_FALSE(verify_construction(p, tampered).empty());
    tampered = c;
    tampered.selected_edges.emplace_back(0, 2);
    EXPECT_FALSE(verify_construction(p, tampered).empty());
}

TEST(Classify, BuiltInFamilies)
{
    EXPECT_EQ(classify_mb(families::k_omega(), 512).verdict, MbVerdict::k_omega);
    EXPECT_EQ(classify_mb(families::null_graph(), 512).verdict, MbVerdict::null);
    EXPECT_EQ(classify_mb(families::i_omega_k_omega(), 512).verdict, MbVerdict::i_omega_of_k_omega);
    EXPECT_EQ(classify_mb(families::complement_of(families::i_omega_k_omega()), 512).verdict,
            MbVerdict::k_omega_of_i_omega);
    EXPECT_EQ(classify_mb(families::rado_bit(), 512).verdict, MbVerdict::rado);
    auto path = classify_mb(families::two_way_path(), 512);
    EXPECT_EQ(path.verdict, MbVerdict::not_mb_evidence);
    EXPECT_FALSE(path.evidence.empty());
    EXPECT_EQ(classify_mb(families::rado_bit(), 4).verdict, MbVerdict::unknown);
}
