#include "entropord/digraph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <regex>
#include <set>
#include <tuple>
#include <sstream>

#include <json.hpp>

namespace entropord {

namespace {

constexpr std::pair<RelationKind, const char*> kKindNames[] = {
    {RelationKind::MajHorizontal, "MajHorizontal"},
    {RelationKind::MajVertical, "MajVertical"},
    {RelationKind::MajDiagonal, "MajDiagonal"},
    {RelationKind::MajExceptional, "MajExceptional"},
    {RelationKind::EntropicA, "EntropicA"},
    {RelationKind::EntropicB, "EntropicB"},
    {RelationKind::SporadicProven, "SporadicProven"},
    {RelationKind::SporadicConjectural, "SporadicConjectural"},
    {RelationKind::Derived, "Derived"},
};

// reach[u][v]: v reachable from u by a path of length >= 1
std::vector<std::vector<char>> strict_reach(const Digraph& d) {
    const int n = d.node_count();
    auto succ = d.successors();
    std::vector<std::vector<char>> reach(n + 1, std::vector<char>(n + 1, 0));
    for (int s = 1; s <= n; ++s) {
        std::vector<int> stack(succ[s].begin(), succ[s].end());
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            if (reach[s][v]) continue;
            reach[s][v] = 1;
            for (int w : succ[v])
                if (!reach[s][w]) stack.push_back(w);
        }
    }
    return reach;
}

}  // namespace

std::string to_string(RelationKind k) {
    for (const auto& [kind, name] : kKindNames)
        if (kind == k) return name;
    return "Derived";
}

RelationKind relation_kind_from_string(std::string_view s) {
    for (const auto& [kind, name] : kKindNames)
        if (s == name) return kind;
    throw std::invalid_argument("unknown relation kind: " + std::string(s));
}

bool is_majorisation(RelationKind k) {
    return k == RelationKind::MajHorizontal || k == RelationKind::MajVertical ||
           k == RelationKind::MajDiagonal || k == RelationKind::MajExceptional;
}

void Digraph::add_edge(int src, int dst, RelationKind kind) {
    if (src < 1 || src > n_ || dst < 1 || dst > n_) throw std::out_of_range("node out of range");
    edges_.try_emplace({src, dst}, kind);
}

void Digraph::set_kind(int src, int dst, RelationKind kind) { edges_.at({src, dst}) = kind; }

void Digraph::remove_edge(int src, int dst) { edges_.erase({src, dst}); }

bool Digraph::has_edge(int src, int dst) const { return edges_.count({src, dst}) != 0; }

RelationKind Digraph::kind(int src, int dst) const { return edges_.at({src, dst}); }

std::vector<Edge> Digraph::pairs() const {
    std::vector<Edge> out;
    out.reserve(edges_.size());
    for (const auto& [e, k] : edges_) out.push_back(e);
    return out;
}

std::vector<std::vector<int>> Digraph::successors() const {
    std::vector<std::vector<int>> succ(n_ + 1);
    for (const auto& [e, k] : edges_) succ[e.first].push_back(e.second);
    return succ;
}

Digraph Digraph::merged(const Digraph& other) const {
    Digraph out = *this;
    out.n_ = std::max(n_, other.n_);
    for (const auto& [e, k] : other.edges_) out.edges_.try_emplace(e, k);
    return out;
}

Digraph transitive_closure(const Digraph& d) {
    Digraph out = d;
    auto reach = strict_reach(d);
    for (int u = 1; u <= d.node_count(); ++u)
        for (int v = 1; v <= d.node_count(); ++v)
            if (reach[u][v]) out.add_edge(u, v, RelationKind::Derived);
    return out;
}

bool is_dag(const Digraph& d) {
    const int n = d.node_count();
    std::vector<int> indeg(n + 1, 0);
    for (const auto& [e, k] : d.edges()) ++indeg[e.second];
    auto succ = d.successors();
    std::vector<int> ready;
    for (int v = 1; v <= n; ++v)
        if (indeg[v] == 0) ready.push_back(v);
    int seen = 0;
    while (!ready.empty()) {
        int v = ready.back();
        ready.pop_back();
        ++seen;
        for (int w : succ[v])
            if (--indeg[w] == 0) ready.push_back(w);
    }
    return seen == n;
}

Digraph transitive_reduction(const Digraph& d) {
    if (!is_dag(d)) throw NotADag("transitive reduction needs an acyclic graph");
    auto reach = strict_reach(d);
    auto succ = d.successors();
    Digraph out(d.node_count());
    for (const auto& [e, k] : d.edges()) {
        auto [u, v] = e;
        bool redundant = false;
        for (int w : succ[u]) {
            if (w != v && reach[w][v]) {
                redundant = true;
                break;
            }
        }
        if (!redundant) out.add_edge(u, v, k);
    }
    return out;
}

std::vector<NodePermutation> automorphism_group(const Digraph& d) {
    const int n = d.node_count();
    std::vector<std::vector<char>> adj(n + 1, std::vector<char>(n + 1, 0));
    std::vector<std::vector<int>> out(n + 1), in(n + 1);
    for (const auto& [e, k] : d.edges()) {
        adj[e.first][e.second] = 1;
        out[e.first].push_back(e.second);
        in[e.second].push_back(e.first);
    }

    // colour refinement seeded with (out-degree, in-degree)
    std::vector<int> colour(n + 1, 0);
    {
        std::map<std::pair<int, int>, int> ids;
        for (int v = 1; v <= n; ++v) ids[{int(out[v].size()), int(in[v].size())}] = 0;
        int next = 0;
        for (auto& [key, id] : ids) id = next++;
        for (int v = 1; v <= n; ++v) colour[v] = ids[{int(out[v].size()), int(in[v].size())}];
    }
    for (;;) {
        using Signature = std::tuple<int, std::vector<int>, std::vector<int>>;
        std::vector<Signature> sig(n + 1);
        for (int v = 1; v <= n; ++v) {
            std::vector<int> o, i;
            for (int w : out[v]) o.push_back(colour[w]);
            for (int w : in[v]) i.push_back(colour[w]);
            std::sort(o.begin(), o.end());
            std::sort(i.begin(), i.end());
            sig[v] = {colour[v], std::move(o), std::move(i)};
        }
        std::map<Signature, int> ids;
        for (int v = 1; v <= n; ++v) ids[sig[v]] = 0;
        int next = 0;
        for (auto& [key, id] : ids) id = next++;
        std::vector<int> refined(n + 1, 0);
        for (int v = 1; v <= n; ++v) refined[v] = ids[sig[v]];
        bool stable = int(ids.size()) == int(std::set<int>(colour.begin() + 1, colour.end()).size());
        colour = std::move(refined);
        if (stable) break;
    }

    // assign nodes from the smallest colour classes first
    std::map<int, int> cell_size;
    for (int v = 1; v <= n; ++v) ++cell_size[colour[v]];
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 1);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return std::pair(cell_size[colour[a]], colour[a]) < std::pair(cell_size[colour[b]], colour[b]);
    });

    std::vector<NodePermutation> found;
    NodePermutation image(n + 1, 0);
    std::vector<char> used(n + 1, 0);
    std::function<void(int)> extend = [&](int depth) {
        if (depth == n) {
            found.push_back(image);
            return;
        }
        int v = order[depth];
        for (int w = 1; w <= n; ++w) {
            if (used[w] || colour[w] != colour[v]) continue;
            if (adj[v][v] != adj[w][w]) continue;
            bool ok = true;
            for (int k = 0; k < depth && ok; ++k) {
                int u = order[k];
                int iu = image[u];
                ok = adj[v][u] == adj[w][iu] && adj[u][v] == adj[iu][w];
            }
            if (!ok) continue;
            image[v] = w;
            used[w] = 1;
            extend(depth + 1);
            used[w] = 0;
            image[v] = 0;
        }
    };
    extend(0);
    std::sort(found.begin(), found.end());
    return found;
}

GraphFormat graph_format_from_string(std::string_view s) {
    if (s == "dot") return GraphFormat::Dot;
    if (s == "json") return GraphFormat::Json;
    if (s == "csv") return GraphFormat::Csv;
    throw std::invalid_argument("unknown format: " + std::string(s));
}

std::string export_graph(const Digraph& d, GraphFormat format) {
    std::ostringstream os;
    switch (format) {
    case GraphFormat::Csv:
        os << "src,dst,kind\n";
        for (const auto& [e, k] : d.edges()) os << e.first << ',' << e.second << ',' << to_string(k) << '\n';
        break;
    case GraphFormat::Json: {
        nlohmann::ordered_json j;
        j["nodes"] = nlohmann::ordered_json::array();
        for (int v = 1; v <= d.node_count(); ++v) j["nodes"].push_back(v);
        j["edges"] = nlohmann::ordered_json::array();
        for (const auto& [e, k] : d.edges())
            j["edges"].push_back({{"src", e.first}, {"dst", e.second}, {"kind", to_string(k)}});
        os << j.dump(2) << '\n';
        break;
    }
    case GraphFormat::Dot:
        os << "digraph order {\n";
        for (int v = 1; v <= d.node_count(); ++v) os << "  C" << v << ";\n";
        for (const auto& [e, k] : d.edges())
            os << "  C" << e.first << " -> C" << e.second << " [kind=\"" << to_string(k) << "\"];\n";
        os << "}\n";
        break;
    }
    return os.str();
}

Digraph import_graph(std::string_view text, GraphFormat format, int nodes) {
    std::string s(text);
    switch (format) {
    case GraphFormat::Csv: {
        std::istringstream is(s);
        std::string line;
        if (!std::getline(is, line) || line != "src,dst,kind") throw std::invalid_argument("missing CSV header");
        Digraph d(nodes);
        while (std::getline(is, line)) {
            if (line.empty()) continue;
            std::istringstream ls(line);
            std::string a, b, k;
            if (!std::getline(ls, a, ',') || !std::getline(ls, b, ',') || !std::getline(ls, k))
                throw std::invalid_argument("bad CSV row: " + line);
            d.add_edge(std::stoi(a), std::stoi(b), relation_kind_from_string(k));
        }
        return d;
    }
    case GraphFormat::Json: {
        auto j = nlohmann::json::parse(s);
        Digraph d(int(j.at("nodes").size()));
        for (const auto& e : j.at("edges"))
            d.add_edge(e.at("src").get<int>(), e.at("dst").get<int>(),
                       relation_kind_from_string(e.at("kind").get<std::string>()));
        return d;
    }
    case GraphFormat::Dot: {
        static const std::regex node_re(R"(^\s*C(\d+);\s*$)");
        static const std::regex edge_re(R"re(^\s*C(\d+)\s*->\s*C(\d+)\s*\[kind="(\w+)"\];\s*$)re");
        std::istringstream is(s);
        std::string line;
        int max_node = 0;
        std::vector<std::tuple<int, int, RelationKind>> edges;
        std::smatch m;
        while (std::getline(is, line)) {
            if (std::regex_match(line, m, edge_re))
                edges.emplace_back(std::stoi(m[1]), std::stoi(m[2]), relation_kind_from_string(m[3].str()));
            else if (std::regex_match(line, m, node_re))
                max_node = std::max(max_node, std::stoi(m[1]));
        }
        Digraph d(max_node > 0 ? max_node : nodes);
        for (auto& [a, b, k] : edges) d.add_edge(a, b, k);
        return d;
    }
    }
    throw std::invalid_argument("unknown format");
}

}  // namespace entropord
