#include "entropord/entropic.hpp"

#include <algorithm>
#include <stdexcept>

#include "entropord/majorisation.hpp"

namespace entropord {

bool DiagonalContext::valid() const {
    std::array<Letter, 6> all{alpha, beta, x, y, u, v};
    std::sort(all.begin(), all.end());
    for (int i = 0; i < 6; ++i)
        if (all[i] != i) return false;
    return alpha < beta && x < u;
}

LetterArrangement DiagonalContext::sigma() const { return {{alpha, x, y, u, beta, v}}; }

LetterArrangement DiagonalContext::sigma_tau() const { return {{beta, x, y, u, alpha, v}}; }

std::string to_string(DiagonalType t) {
    switch (t) {
    case DiagonalType::TypeA: return "TypeA";
    case DiagonalType::TypeAMajorisation: return "TypeAMajorisation";
    case DiagonalType::TypeB: return "TypeB";
    case DiagonalType::NoRelation: return "NoRelation";
    }
    return "NoRelation";
}

DiagonalType classify_diagonal(const DiagonalContext& c) {
    if (!c.valid()) throw std::invalid_argument("invalid diagonal context");
    // a > b as values is a < b as letters
    if (c.v < c.x && c.x < c.u && c.u < c.y) return DiagonalType::TypeAMajorisation;
    if (c.v < c.y) return DiagonalType::TypeA;
    if (c.y < c.x && c.x < c.u && c.u < c.v) return DiagonalType::TypeB;
    return DiagonalType::NoRelation;
}

std::optional<DiagonalPlacement> diagonal_placement(const LetterArrangement& g, Letter p, Letter q) {
    for (const auto& k : subgroup_K()) {
        LetterArrangement h = apply(k, g);
        bool pq = h.at(1) == p && h.at(5) == q;
        bool qp = h.at(1) == q && h.at(5) == p;
        if (!(pq || qp) || h.at(2) > h.at(4)) continue;
        DiagonalPlacement out;
        out.ctx = {std::min(p, q), std::max(p, q), h.at(2), h.at(3), h.at(4), h.at(6)};
        out.is_sigma = h.at(1) == out.ctx.alpha;
        return out;
    }
    return std::nullopt;
}

std::vector<DiagonalContext> diagonal_contexts(Letter alpha, Letter beta) {
    if (!(alpha < beta)) throw std::invalid_argument("alpha must precede beta");
    std::vector<Letter> rest;
    for (Letter l = 0; l < kDegree; ++l)
        if (l != alpha && l != beta) rest.push_back(l);
    std::vector<DiagonalContext> out;
    do {
        DiagonalContext c{alpha, beta, rest[0], rest[1], rest[2], rest[3]};
        if (c.x < c.u) out.push_back(c);
    } while (std::next_permutation(rest.begin(), rest.end()));
    return out;
}

Digraph diagonal_relations() {
    Digraph d;
    for (Letter a = 0; a < kDegree; ++a) {
        for (Letter b = a + 1; b < kDegree; ++b) {
            for (const auto& c : diagonal_contexts(a, b)) {
                ClassId s = class_of_grid(c.sigma());
                ClassId st = class_of_grid(c.sigma_tau());
                switch (classify_diagonal(c)) {
                case DiagonalType::TypeAMajorisation: d.add_edge(st, s, RelationKind::MajDiagonal); break;
                case DiagonalType::TypeA: d.add_edge(st, s, RelationKind::EntropicA); break;
                case DiagonalType::TypeB: d.add_edge(s, st, RelationKind::EntropicB); break;
                case DiagonalType::NoRelation: break;
                }
            }
        }
    }
    return d;
}

std::vector<TypeBRelation> type_b_relations() {
    std::vector<TypeBRelation> out;
    for (Letter a = 0; a < kDegree; ++a)
        for (Letter b = a + 1; b < kDegree; ++b)
            for (const auto& c : diagonal_contexts(a, b))
                if (classify_diagonal(c) == DiagonalType::TypeB)
                    out.push_back({a, b, {class_of_grid(c.sigma()), class_of_grid(c.sigma_tau())}});
    return out;
}

Digraph sporadic_relations(bool include_c4) {
    Digraph d;
    d.add_edge(15, 10, RelationKind::SporadicProven);
    d.add_edge(26, 10, RelationKind::SporadicProven);
    if (include_c4) {
        d.add_edge(37, 11, RelationKind::SporadicConjectural);
        d.add_edge(43, 11, RelationKind::SporadicConjectural);
        d.add_edge(49, 11, RelationKind::SporadicConjectural);
    }
    return d;
}

std::vector<Edge> c4_relations() { return {{37, 11}, {43, 11}, {49, 11}, {31, 11}}; }

Digraph exceptional_majorisations() {
    Digraph d;
    for (const auto& [x, y] : reduction_difference().first) d.add_edge(x, y, RelationKind::MajExceptional);
    return d;
}

namespace {

Digraph primitive_order(bool include_c4) {
    return single_transposition_majorisations()
        .merged(exceptional_majorisations())
        .merged(diagonal_relations())
        .merged(sporadic_relations(include_c4));
}

}  // namespace

EntropicOrder build_E(bool include_c4) {
    EntropicOrder e;
    e.primitive = primitive_order(include_c4);
    e.closure = transitive_closure(e.primitive);
    e.covering = transitive_reduction(e.closure);
    return e;
}

Digraph covering_without_c4() {
    const Digraph full = build_E(true).covering;
    Digraph d = full;
    for (const auto& [e, k] : full.edges())
        if (k == RelationKind::SporadicConjectural) d.remove_edge(e.first, e.second);
    return d;
}

CoveringSplit covering_split(const Digraph& covering) {
    CoveringSplit s;
    for (const auto& [e, k] : covering.edges()) {
        if (is_majorisation(k))
            ++s.majorisation;
        else if (k != RelationKind::Derived)
            ++s.entropic;
    }
    return s;
}

FactorisationReport exceptional_factorisations() {
    EntropicOrder e = build_E(true);
    const Digraph& p = e.primitive;
    auto maj = [&](int a, int b) { return p.has_edge(a, b) && is_majorisation(p.kind(a, b)); };
    auto ent = [&](int a, int b) { return p.has_edge(a, b) && !is_majorisation(p.kind(a, b)); };
    FactorisationReport r;
    r.edge_34_47_absent = !e.covering.has_edge(34, 47);
    r.edge_46_47_absent = !e.covering.has_edge(46, 47);
    r.path_34_53_47 = maj(34, 53) && ent(53, 47);
    r.path_46_34_53_47 = p.has_edge(46, 34) && r.path_34_53_47;
    return r;
}

std::vector<Edge> factorising_entropic() {
    EntropicOrder e = build_E(true);
    std::vector<Edge> out;
    for (const auto& [edge, k] : e.primitive.edges())
        if (!is_majorisation(k) && !e.covering.has_edge(edge.first, edge.second)) out.push_back(edge);
    return out;
}

std::vector<Edge> vanishing_majorisations() {
    Digraph cover = build_E(true).covering;
    std::vector<Edge> out;
    for (const auto& e : transitive_reduction(single_transposition_majorisations()).pairs())
        if (!cover.has_edge(e.first, e.second)) out.push_back(e);
    return out;
}

Digraph neg_square_order() {
    Digraph d = single_transposition_majorisations().merged(exceptional_majorisations());
    for (Letter a = 0; a < kDegree; ++a) {
        for (Letter b = a + 1; b < kDegree; ++b) {
            for (const auto& c : diagonal_contexts(a, b)) {
                ClassId s = class_of_grid(c.sigma());
                ClassId st = class_of_grid(c.sigma_tau());
                if (c.v < c.y)
                    d.add_edge(st, s, RelationKind::EntropicA);
                else
                    d.add_edge(s, st, RelationKind::EntropicB);
            }
        }
    }
    return transitive_closure(d);
}

}  // namespace entropord
