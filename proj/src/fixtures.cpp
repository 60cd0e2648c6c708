#include "entropord/fixtures.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <regex>
#include <set>
#include <sstream>

#include "entropord/entropic.hpp"
#include "entropord/group_ring.hpp"
#include "entropord/majorisation.hpp"

#ifndef ENTROPORD_DATA_DIR
#define ENTROPORD_DATA_DIR "data"
#endif

namespace entropord {

std::filesystem::path default_data_dir() { return ENTROPORD_DATA_DIR; }

namespace {

// (line number, text) for every non-comment, non-blank line
std::vector<std::pair<int, std::string>> content_lines(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw FixtureError("cannot open " + file.string());
    std::vector<std::pair<int, std::string>> out;
    std::string line;
    int n = 0;
    while (std::getline(in, line)) {
        ++n;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        out.emplace_back(n, line);
    }
    return out;
}

[[noreturn]] void bad_line(const std::filesystem::path& file, int line, const std::string& why) {
    throw FixtureError(file.filename().string() + ":" + std::to_string(line) + ": " + why);
}

}  // namespace

std::vector<ClassRow> load_class_table(const std::filesystem::path& file) {
    std::vector<ClassRow> rows;
    for (const auto& [n, text] : content_lines(file)) {
        std::istringstream is(text);
        ClassRow r;
        std::string grid, rep;
        if (!(is >> r.id >> grid >> rep)) bad_line(file, n, "expected id, grid, permutation");
        try {
            r.grid = LetterArrangement::parse(grid);
            r.rep = parse_cycles(rep);
        } catch (const std::exception& e) {
            bad_line(file, n, e.what());
        }
        r.line = n;
        rows.push_back(r);
    }
    return rows;
}

std::vector<PairRow> load_pairs(const std::filesystem::path& file) {
    std::vector<PairRow> rows;
    for (const auto& [n, text] : content_lines(file)) {
        std::istringstream is(text);
        PairRow r;
        if (!(is >> r.pair.first >> r.pair.second)) bad_line(file, n, "expected two class ids");
        r.line = n;
        rows.push_back(r);
    }
    return rows;
}

std::vector<Edge> pairs_of(const std::vector<PairRow>& rows) {
    std::vector<Edge> out;
    for (const auto& r : rows) out.push_back(r.pair);
    return out;
}

std::vector<std::vector<int>> load_matrix(const std::filesystem::path& file) {
    std::vector<std::vector<int>> m;
    for (const auto& [n, text] : content_lines(file)) {
        std::istringstream is(text);
        std::vector<int> row;
        int v;
        while (is >> v) row.push_back(v);
        if (!m.empty() && row.size() != m.front().size()) bad_line(file, n, "ragged matrix row");
        m.push_back(row);
    }
    return m;
}

std::vector<TypeBRow> load_type_b(const std::filesystem::path& file) {
    std::vector<TypeBRow> rows;
    for (const auto& [n, text] : content_lines(file)) {
        std::istringstream is(text);
        std::string letters;
        TypeBRow r;
        if (!(is >> letters >> r.edge.first >> r.edge.second) || letters.size() != 2) bad_line(file, n, "expected letter pair and two ids");
        r.alpha = letter_from_char(letters[0]);
        r.beta = letter_from_char(letters[1]);
        r.line = n;
        rows.push_back(r);
    }
    return rows;
}

OrbitTable load_orbits(const std::filesystem::path& file) {
    OrbitTable t;
    for (const auto& [n, text] : content_lines(file)) {
        std::istringstream is(text);
        std::string head;
        is >> head;
        if (head == "fixed") {
            int v;
            if (!(is >> v)) bad_line(file, n, "expected a class id");
            t.fixed.push_back(v);
        } else {
            Edge e;
            e.first = std::stoi(head);
            if (!(is >> e.second)) bad_line(file, n, "expected two class ids");
            t.swapped.push_back(e);
        }
    }
    return t;
}

NodePermutation load_node_cycles(const std::filesystem::path& file, int n) {
    auto lines = content_lines(file);
    if (lines.size() != 1) throw FixtureError(file.filename().string() + ": expected one line");
    NodePermutation p(n + 1, 0);
    static const std::regex cycle_re(R"(\(([\d,]+)\))");
    const std::string& text = lines.front().second;
    for (auto it = std::sregex_iterator(text.begin(), text.end(), cycle_re); it != std::sregex_iterator(); ++it) {
        std::vector<int> c;
        std::istringstream is((*it)[1].str());
        std::string tok;
        while (std::getline(is, tok, ',')) c.push_back(std::stoi(tok));
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (c[i] < 1 || c[i] > n || p[c[i]] != 0) bad_line(file, lines.front().first, "bad cycle entry");
            p[c[i]] = c[(i + 1) % c.size()];
        }
    }
    for (int v = 1; v <= n; ++v)
        if (p[v] == 0) bad_line(file, lines.front().first, "node " + std::to_string(v) + " missing");
    return p;
}

namespace {

// Difference between a listed pair set and a computed one, naming the first
// extra fixture line or the first missing pair.
std::string pair_diff(const std::vector<PairRow>& listed, const std::vector<Edge>& computed, const std::string& file) {
    std::set<Edge> have(computed.begin(), computed.end());
    std::set<Edge> seen;
    for (const auto& r : listed) {
        if (!have.count(r.pair))
            return file + ":" + std::to_string(r.line) + ": (" + std::to_string(r.pair.first) + "," +
                   std::to_string(r.pair.second) + ") not computed";
        if (!seen.insert(r.pair).second) return file + ":" + std::to_string(r.line) + ": duplicate pair";
    }
    for (const auto& e : computed)
        if (!seen.count(e))
            return file + ": computed (" + std::to_string(e.first) + "," + std::to_string(e.second) + ") not listed";
    return {};
}

std::vector<Edge> unordered(const std::set<UnorderedPair>& s) { return {s.begin(), s.end()}; }

std::vector<PairRow> normalised(std::vector<PairRow> rows) {
    for (auto& r : rows)
        if (r.pair.first > r.pair.second) std::swap(r.pair.first, r.pair.second);
    return rows;
}

std::string matrix_diff(const std::vector<std::vector<int>>& listed, const Digraph& computed, const std::string& file) {
    const int n = computed.node_count();
    if (int(listed.size()) != n) return file + ": expected " + std::to_string(n) + " rows";
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if ((listed[i][j] != 0) != computed.has_edge(i + 1, j + 1))
                return file + ": entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") differs";
    return {};
}

}  // namespace

std::vector<AppendixResult> verify_appendix(const std::filesystem::path& dir) {
    std::vector<AppendixResult> results;
    auto run = [&](const std::string& name, const std::function<std::string()>& check) {
        if (!results.empty() && !results.back().ok) return;
        AppendixResult r;
        r.fixture = name;
        try {
            r.detail = check();
        } catch (const std::exception& e) {
            r.detail = e.what();
        }
        r.ok = r.detail.empty();
        results.push_back(r);
    };

    run("classes.txt", [&]() -> std::string {
        auto rows = load_class_table(dir / "classes.txt");
        if (rows.size() != std::size_t(kClassCount)) return "classes.txt: expected 60 rows";
        for (const auto& r : rows) {
            const MatrixClass& c = class_info(r.id);
            std::string at = "classes.txt:" + std::to_string(r.line) + ": ";
            if (c.canonical_grid != r.grid) return at + "grid " + r.grid.to_string() + " vs " + c.canonical_grid.to_string();
            if (class_of(r.rep) != r.id) return at + "permutation lies in class " + std::to_string(class_of(r.rep));
        }
        return {};
    });
    run("gr2_covering_matrix.txt", [&] {
        return matrix_diff(load_matrix(dir / "gr2_covering_matrix.txt"), gr_covering(2), "gr2_covering_matrix.txt");
    });
    run("gr3_covering_matrix.txt", [&] {
        return matrix_diff(load_matrix(dir / "gr3_covering_matrix.txt"), gr_covering(3), "gr3_covering_matrix.txt");
    });
    run("single_transposition_majorisation.txt", [&] {
        return pair_diff(load_pairs(dir / "single_transposition_majorisation.txt"),
                         single_transposition_majorisations().pairs(), "single_transposition_majorisation.txt");
    });
    run("redundant_majorisation.txt", [&] {
        Digraph s = single_transposition_majorisations();
        Digraph red = transitive_reduction(s);
        std::vector<Edge> redundant;
        for (const auto& e : s.pairs())
            if (!red.has_edge(e.first, e.second)) redundant.push_back(e);
        return pair_diff(load_pairs(dir / "redundant_majorisation.txt"), redundant, "redundant_majorisation.txt");
    });
    run("vanishing_majorisation.txt", [&] {
        return pair_diff(load_pairs(dir / "vanishing_majorisation.txt"), vanishing_majorisations(),
                         "vanishing_majorisation.txt");
    });
    run("diagonal_entropic.txt", [&] {
        std::vector<Edge> pure;
        for (const auto& [e, k] : diagonal_relations().edges())
            if (!is_majorisation(k)) pure.push_back(e);
        return pair_diff(load_pairs(dir / "diagonal_entropic.txt"), pure, "diagonal_entropic.txt");
    });
    run("type_b.txt", [&]() -> std::string {
        auto rows = load_type_b(dir / "type_b.txt");
        auto computed = type_b_relations();
        if (rows.size() != computed.size()) return "type_b.txt: expected " + std::to_string(computed.size()) + " rows";
        for (const auto& r : rows) {
            auto it = std::find_if(computed.begin(), computed.end(),
                                   [&](const TypeBRelation& t) { return t.alpha == r.alpha && t.beta == r.beta; });
            if (it == computed.end() || it->edge != r.edge)
                return "type_b.txt:" + std::to_string(r.line) + ": type B relation differs";
        }
        return {};
    });
    run("sporadic.txt", [&] {
        return pair_diff(load_pairs(dir / "sporadic.txt"), sporadic_relations(true).pairs(), "sporadic.txt");
    });
    run("factorising_entropic.txt", [&] {
        return pair_diff(load_pairs(dir / "factorising_entropic.txt"), factorising_entropic(),
                         "factorising_entropic.txt");
    });
    run("no_relation.txt", [&] {
        return pair_diff(normalised(load_pairs(dir / "no_relation.txt")), unordered(no_relation_pairs()),
                         "no_relation.txt");
    });
    run("covering.txt", [&] {
        return pair_diff(load_pairs(dir / "covering.txt"), build_E(true).covering.pairs(), "covering.txt");
    });
    run("covering.txt (algebraic route)", [&] {
        Digraph d = transitive_reduction(transitive_closure(
            all_eta_relations().merged(exceptional_majorisations()).merged(sporadic_relations(true))));
        return pair_diff(load_pairs(dir / "covering.txt"), d.pairs(), "covering.txt");
    });
    run("omega_orbits.txt", [&]() -> std::string {
        OrbitTable t = load_orbits(dir / "omega_orbits.txt");
        auto group = automorphism_group(build_E(true).covering);
        if (group.size() != 2) return "omega_orbits.txt: automorphism group has order " + std::to_string(group.size());
        const NodePermutation& chi = group[0][1] == 1 ? group[1] : group[0];
        std::vector<Edge> swapped;
        std::vector<int> fixed;
        for (int v = 1; v <= kClassCount; ++v) {
            if (chi[v] == v)
                fixed.push_back(v);
            else if (v < chi[v])
                swapped.emplace_back(v, chi[v]);
        }
        std::sort(t.swapped.begin(), t.swapped.end());
        std::sort(t.fixed.begin(), t.fixed.end());
        if (t.swapped != swapped) return "omega_orbits.txt: swapped pairs differ";
        if (t.fixed != fixed) return "omega_orbits.txt: fixed classes differ";
        for (int v = 1; v <= kClassCount; ++v)
            if (omega_action(v) != chi[v]) return "omega_orbits.txt: automorphism differs from omega at class " + std::to_string(v);
        return {};
    });
    run("chi_omega.txt", [&]() -> std::string {
        NodePermutation listed = load_node_cycles(dir / "chi_omega.txt");
        for (int v = 1; v <= kClassCount; ++v)
            if (listed[v] != omega_action(v)) return "chi_omega.txt:2: image of " + std::to_string(v) + " differs";
        return {};
    });
    return results;
}

}  // namespace entropord
