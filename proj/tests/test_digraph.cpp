#include <gtest/gtest.h>

#include <set>

#include "entropord/digraph.hpp"
#include "entropord/entropic.hpp"

#include <json.hpp>

using namespace entropord;

namespace {

Digraph chain() {
    Digraph d(3);
    d.add_edge(1, 2, RelationKind::MajHorizontal);
    d.add_edge(2, 3, RelationKind::EntropicA);
    return d;
}

NodePermutation compose_nodes(const NodePermutation& a, const NodePermutation& b) {
    NodePermutation c(a.size(), 0);
    for (std::size_t v = 1; v < a.size(); ++v) c[v] = a[b[v]];
    return c;
}

}  // namespace

TEST(Digraph, ClosureAddsDerivedEdges) {
    Digraph c = transitive_closure(chain());
    EXPECT_EQ(c.edge_count(), 3u);
    EXPECT_EQ(c.kind(1, 3), RelationKind::Derived);
    EXPECT_EQ(c.kind(1, 2), RelationKind::MajHorizontal);
}

TEST(Digraph, ReductionDropsImpliedEdges) {
    Digraph d = chain();
    d.add_edge(1, 3, RelationKind::EntropicB);
    Digraph r = transitive_reduction(d);
    EXPECT_EQ(r.pairs(), (std::vector<Edge>{{1, 2}, {2, 3}}));
    EXPECT_EQ(r.kind(2, 3), RelationKind::EntropicA);
}

TEST(Digraph, CycleDetection) {
    Digraph d(2);
    EXPECT_TRUE(is_dag(d));
    d.add_edge(1, 2, RelationKind::Derived);
    d.add_edge(2, 1, RelationKind::Derived);
    EXPECT_FALSE(is_dag(d));
    EXPECT_THROW(transitive_reduction(d), NotADag);
    EXPECT_THROW(d.add_edge(0, 1, RelationKind::Derived), std::out_of_range);
}

TEST(Digraph, ClosureAndReductionLaws) {
    for (bool c4 : {true, false}) {
        EntropicOrder e = build_E(c4);
        EXPECT_EQ(transitive_closure(e.closure).pairs(), e.closure.pairs());
        EXPECT_EQ(transitive_closure(e.covering).pairs(), e.closure.pairs());
        EXPECT_EQ(transitive_closure(transitive_reduction(e.primitive)).pairs(), e.closure.pairs());
        EXPECT_TRUE(is_dag(e.closure));
    }
}

TEST(Automorphisms, DirectedTriangle) {
    Digraph d(3);
    d.add_edge(1, 2, RelationKind::Derived);
    d.add_edge(2, 3, RelationKind::Derived);
    d.add_edge(3, 1, RelationKind::Derived);
    auto g = automorphism_group(d);
    EXPECT_EQ(g.size(), 3u);
}

TEST(Automorphisms, EmptyGraphIsSymmetric) {
    EXPECT_EQ(automorphism_group(Digraph(4)).size(), 24u);
}

TEST(Automorphisms, CoveringGraphGroupIsClosed) {
    auto g = automorphism_group(build_E(true).covering);
    ASSERT_EQ(g.size(), 2u);
    std::set<NodePermutation> set(g.begin(), g.end());
    for (const auto& a : g)
        for (const auto& b : g) EXPECT_TRUE(set.count(compose_nodes(a, b)));
    NodePermutation id(61);
    for (int v = 0; v <= 60; ++v) id[v] = v;
    EXPECT_TRUE(set.count(id));
    for (const auto& a : g) EXPECT_EQ(compose_nodes(a, a), id);
}

TEST(Export, CsvBasics) {
    Digraph empty(60);
    EXPECT_EQ(export_graph(empty, GraphFormat::Csv), "src,dst,kind\n");
    Digraph one(60);
    one.add_edge(1, 2, RelationKind::MajHorizontal);
    EXPECT_EQ(export_graph(one, GraphFormat::Csv), "src,dst,kind\n1,2,MajHorizontal\n");
}

TEST(Export, RoundTripAllFormats) {
    Digraph cover = build_E(true).covering;
    for (auto f : {GraphFormat::Csv, GraphFormat::Json, GraphFormat::Dot}) {
        Digraph back = import_graph(export_graph(cover, f), f);
        EXPECT_EQ(back, cover);
    }
    auto j = nlohmann::json::parse(export_graph(cover, GraphFormat::Json));
    EXPECT_EQ(j["nodes"].size(), 60u);
    EXPECT_EQ(j["edges"].size(), 186u);
    EXPECT_EQ(j["edges"][0]["src"], 1);
}

TEST(Export, FormatNames) {
    EXPECT_EQ(graph_format_from_string("dot"), GraphFormat::Dot);
    EXPECT_THROW(graph_format_from_string("xml"), std::invalid_argument);
    EXPECT_THROW(relation_kind_from_string("Nope"), std::invalid_argument);
    EXPECT_THROW(import_graph("a,b\n", GraphFormat::Csv), std::invalid_argument);
}
