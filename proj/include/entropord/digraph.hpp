#pragma once

// Kind-tagged digraphs on nodes 1..n: closure, reduction, automorphisms, I/O.

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace entropord {

enum class RelationKind {
    MajHorizontal,
    MajVertical,
    MajDiagonal,
    MajExceptional,
    EntropicA,
    EntropicB,
    SporadicProven,
    SporadicConjectural,
    Derived,
};

std::string to_string(RelationKind k);
RelationKind relation_kind_from_string(std::string_view s);
bool is_majorisation(RelationKind k);

class NotADag : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using Edge = std::pair<int, int>;

class Digraph {
public:
    explicit Digraph(int nodes = 60) : n_(nodes) {}

    int node_count() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }

    // Keeps the existing kind if the edge is already present.
    void add_edge(int src, int dst, RelationKind kind);
    void set_kind(int src, int dst, RelationKind kind);
    void remove_edge(int src, int dst);
    bool has_edge(int src, int dst) const;
    RelationKind kind(int src, int dst) const;

    const std::map<Edge, RelationKind>& edges() const& { return edges_; }
    std::map<Edge, RelationKind> edges() && { return std::move(edges_); }
    std::vector<Edge> pairs() const;
    std::vector<std::vector<int>> successors() const;

    // Union keeping kinds from *this where both define an edge.
    Digraph merged(const Digraph& other) const;

    bool operator==(const Digraph&) const = default;

private:
    int n_;
    std::map<Edge, RelationKind> edges_;
};

Digraph transitive_closure(const Digraph& d);
Digraph transitive_reduction(const Digraph& d);
bool is_dag(const Digraph& d);

// Node permutations stored 1-based: perm[v] is the image of v; perm[0] unused.
using NodePermutation = std::vector<int>;
std::vector<NodePermutation> automorphism_group(const Digraph& d);

enum class GraphFormat { Dot, Json, Csv };
GraphFormat graph_format_from_string(std::string_view s);
std::string export_graph(const Digraph& d, GraphFormat format);
Digraph import_graph(std::string_view text, GraphFormat format, int nodes = 60);

}  // namespace entropord
