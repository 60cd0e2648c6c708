// Command-line front end: construction, verification and export of the order.

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "entropord/entropic.hpp"
#include "entropord/fixtures.hpp"
#include "entropord/group_ring.hpp"
#include "entropord/majorisation.hpp"
#include "entropord/numeric.hpp"

using namespace entropord;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

struct Options {
    bool with_c4 = true;
    std::string stage = "covering";
    std::string format = "csv";
    std::string set = "single";
    std::string check = "relations";
    std::string function = "H";
    std::string tau;
    std::uint64_t samples = 100000;
    std::uint64_t seed = 1;
    std::string out;
    std::string data_dir = default_data_dir().string();
};

// Machine output goes to --out when given, else to stdout.
void emit(const Options& o, const std::string& text) {
    if (o.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(o.out);
    if (!f) throw std::runtime_error("cannot write " + o.out);
    f << text;
}

Digraph stage_graph(const Options& o) {
    if (o.stage == "covering" && !o.with_c4) return covering_without_c4();
    EntropicOrder e = build_E(o.with_c4);
    if (o.stage == "primitive") return e.primitive;
    if (o.stage == "closure") return e.closure;
    return e.covering;
}

int cmd_classes(const Options& o) {
    std::ostringstream os;
    for (const auto& c : enumerate_classes())
        os << c.id << ' ' << c.canonical_grid.to_string() << ' ' << format_cycles(c.canonical_rep) << '\n';
    emit(o, os.str());
    return kExitOk;
}

int cmd_relations(const Options& o) {
    Digraph d;
    if (o.set == "majorisation") d = majorisation_digraph();
    else if (o.set == "single") d = single_transposition_majorisations();
    else if (o.set == "diagonal") d = diagonal_relations();
    else if (o.set == "sporadic") d = sporadic_relations(o.with_c4);
    else if (o.set == "exceptional") d = exceptional_majorisations();
    else if (o.set == "eta") d = all_eta_relations();
    else d = neg_square_order();
    emit(o, export_graph(d, graph_format_from_string(o.format)));
    if (!o.out.empty()) std::cout << o.set << ": " << d.edge_count() << " relations\n";
    return kExitOk;
}

int cmd_build(const Options& o) {
    Digraph d = stage_graph(o);
    emit(o, export_graph(d, graph_format_from_string(o.format)));
    if (!o.out.empty()) {
        std::cout << o.stage << (o.with_c4 ? " with C4" : " without C4") << ": " << d.edge_count() << " edges";
        if (o.stage == "covering") {
            CoveringSplit s = covering_split(d);
            std::cout << " (" << s.majorisation << " majorisation, " << s.entropic << " entropic)";
        }
        std::cout << '\n';
    }
    return kExitOk;
}

int cmd_export(const Options& o) {
    if (o.out.empty()) throw CLI::ValidationError("--out", "export needs an output directory");
    std::filesystem::create_directories(o.out);
    GraphFormat f = graph_format_from_string(o.format);
    EntropicOrder e = build_E(o.with_c4);
    Digraph cover = o.with_c4 ? e.covering : covering_without_c4();
    std::string suffix = "." + o.format;
    std::string tag = o.with_c4 ? "" : "_no_c4";
    for (auto [name, g] : {std::pair{"primitive", &e.primitive}, std::pair{"closure", &e.closure}, std::pair{"covering", &cover}}) {
        std::filesystem::path p = std::filesystem::path(o.out) / (std::string(name) + tag + suffix);
        std::ofstream(p) << export_graph(*g, f);
        std::cout << p.string() << ": " << g->edge_count() << " edges\n";
    }
    return kExitOk;
}

int cmd_verify_appendix(const Options& o) {
    auto results = verify_appendix(o.data_dir);
    bool ok = true;
    for (const auto& r : results) {
        std::cout << (r.ok ? "ok   " : "FAIL ") << r.fixture;
        if (!r.ok) std::cout << ": " << r.detail;
        std::cout << '\n';
        ok = ok && r.ok;
    }
    return ok ? kExitOk : kExitMismatch;
}

int cmd_eta(const Options& o) {
    if (!o.tau.empty()) {
        Permutation tau = parse_cycles(o.tau);
        const auto& ts = all_transpositions();
        if (std::find(ts.begin(), ts.end(), tau) == ts.end()) throw CLI::ValidationError("--tau", "not a transposition");
        EtaComponents c = eta_components(tau);
        std::ostringstream os;
        os << "# horiz\n" << dump(c.horiz) << "# cyc\n" << dump(c.cyc) << "# eta\n" << dump(c.eta);
        os << "# relations\n" << export_graph(relations_from_eta(tau), GraphFormat::Csv);
        emit(o, os.str());
        return kExitOk;
    }
    Digraph all = all_eta_relations();
    Digraph analytic = single_transposition_majorisations().merged(diagonal_relations());
    bool ok = all.pairs() == analytic.pairs();
    for (const auto& t : all_transpositions()) ok = ok && inductive_generation(t).pairs() == all.pairs();
    std::cout << "eta relations: " << all.edge_count() << (ok ? " (match analytic set, all 15 starts agree)" : " (MISMATCH)")
              << '\n';
    if (!o.out.empty()) emit(o, export_graph(all, graph_format_from_string(o.format)));
    return ok ? kExitOk : kExitMismatch;
}

int cmd_automorphism(const Options& o) {
    Digraph cover = o.with_c4 ? build_E(true).covering : covering_without_c4();
    auto group = automorphism_group(cover);
    NodePermutation chi = load_node_cycles(std::filesystem::path(o.data_dir) / "chi_omega.txt");
    bool has_chi = false;
    for (const auto& g : group) has_chi = has_chi || g == chi;
    std::cout << "covering edges: " << cover.edge_count() << "\nautomorphism group order: " << group.size() << '\n';
    for (const auto& g : group) {
        std::ostringstream os;
        for (int v = 1; v <= kClassCount; ++v)
            if (g[v] > v) os << '(' << v << ',' << g[v] << ')';
        std::cout << (os.str().empty() ? "()" : os.str()) << '\n';
    }
    bool ok = group.size() == 2 && has_chi;
    std::cout << (ok ? "nontrivial element is chi_omega\n" : "MISMATCH against chi_omega\n");
    return ok ? kExitOk : kExitMismatch;
}

int cmd_montecarlo(const Options& o) {
    if (o.check == "identity") {
        IdentityReport r = identity_suite(o.samples, o.seed);
        nlohmann::ordered_json j{{"instances", r.instances}, {"max_residual", r.max_residual}, {"sign_mismatches", r.sign_mismatches}};
        emit(o, j.dump(2) + "\n");
        bool ok = r.max_residual <= kIdentityTolerance && r.sign_mismatches == 0;
        return ok ? kExitOk : kExitMismatch;
    }
    if (o.check == "identric") {
        LollipopReport r = lollipop_suite(o.samples, o.seed);
        emit(o, r.to_json().dump(2) + "\n");
        return r.pass() ? kExitOk : kExitMismatch;
    }
    Digraph closure = build_E(o.with_c4).closure;
    NumericReport r = verify_relations(closure, o.samples, o.seed, concave_function(o.function));
    emit(o, r.to_json().dump(2) + "\n");
    if (!o.out.empty())
        std::cout << r.edges_checked << " edges, " << r.samples << " samples, " << r.violations.size() << " violated\n";
    return r.violations.empty() ? kExitOk : kExitMismatch;
}

int cmd_falsify(const Options& o) {
    Digraph closure = build_E(o.with_c4).closure;
    NumericReport r = falsify_nonrelations(closure, o.samples, o.seed, concave_function(o.function));
    emit(o, r.to_json().dump(2) + "\n");
    if (!o.out.empty())
        std::cout << r.edges_checked << " non-relations, " << r.samples << " samples, " << r.unfalsified.size()
                  << " unfalsified\n";
    return r.unfalsified.empty() ? kExitOk : kExitMismatch;
}

int cmd_survey(const Options& o) {
    const ConcaveFunction& f = concave_function(o.function);
    Digraph s = f_survey(f, o.samples, o.seed);
    int code = kExitOk;
    std::cout << f.name << ": " << s.edge_count() << " surviving ordered pairs\n";
    if (f.name == "sq") {
        Digraph a = neg_square_order();
        std::size_t missing = 0;
        for (const auto& e : a.pairs()) missing += !s.has_edge(e.first, e.second);
        std::cout << "analytic closure: " << a.edge_count() << " relations, " << missing << " violated\n";
        if (missing) code = kExitMismatch;
    }
    if (!o.out.empty()) emit(o, export_graph(s, graph_format_from_string(o.format)));
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Entropic order on the 60 cosets of the 2x3 symmetry group in S6"};
    app.require_subcommand(1, 1);
    Options o;

    auto c4_flags = [&o](CLI::App* sub) {
        sub->add_flag("--with-c4,!--no-c4", o.with_c4, "include the four conjectural relations (default on)");
    };
    auto graph_flags = [&o](CLI::App* sub) {
        sub->add_option("--format", o.format, "dot, json or csv")->check(CLI::IsMember({"dot", "json", "csv"}));
    };
    auto out_flag = [&o](CLI::App* sub) { sub->add_option("--out", o.out, "write machine output to this path"); };
    auto sampling = [&o](CLI::App* sub) {
        sub->add_option("--samples", o.samples, "sample budget")->check(CLI::PositiveNumber);
        sub->add_option("--seed", o.seed, "RNG seed");
        sub->add_option("--function", o.function, "H, h, sq, cos or cubic")
            ->check(CLI::IsMember(concave_function_names()));
    };

    auto* classes = app.add_subcommand("classes", "list the 60 classes: id, grid, representative");
    out_flag(classes);

    auto* relations = app.add_subcommand("relations", "list a relation family");
    relations->add_option("--set", o.set, "majorisation, single, diagonal, sporadic, exceptional, eta, neg-square")
        ->check(CLI::IsMember({"majorisation", "single", "diagonal", "sporadic", "exceptional", "eta", "neg-square"}));
    c4_flags(relations);
    graph_flags(relations);
    out_flag(relations);

    auto* build = app.add_subcommand("build", "assemble the order");
    c4_flags(build);
    build->add_option("--stage", o.stage, "primitive, closure or covering")
        ->check(CLI::IsMember({"primitive", "closure", "covering"}));
    graph_flags(build);
    out_flag(build);

    auto* verify = app.add_subcommand("verify-appendix", "compare every reference table with fresh computation");
    verify->add_option("--data-dir", o.data_dir, "directory of reference tables")->check(CLI::ExistingDirectory);

    auto* eta = app.add_subcommand("eta", "group-ring generator of single-transposition relations");
    eta->add_option("--tau", o.tau, "transposition in cycle notation, e.g. (12)");
    graph_flags(eta);
    out_flag(eta);

    auto* autom = app.add_subcommand("automorphism", "automorphism group of the covering graph");
    c4_flags(autom);
    autom->add_option("--data-dir", o.data_dir, "directory of reference tables")->check(CLI::ExistingDirectory);

    auto* mc = app.add_subcommand("montecarlo", "check relations, the swap identity or the mean lemma on samples");
    mc->add_option("--check", o.check, "relations, identity or identric")
        ->check(CLI::IsMember({"relations", "identity", "identric"}));
    c4_flags(mc);
    sampling(mc);
    out_flag(mc);

    auto* falsify = app.add_subcommand("falsify", "search for counterexamples to every non-relation");
    c4_flags(falsify);
    sampling(falsify);
    out_flag(falsify);

    auto* survey = app.add_subcommand("survey", "ordered pairs never violated under a concave function");
    sampling(survey);
    graph_flags(survey);
    out_flag(survey);

    auto* exp = app.add_subcommand("export", "write primitive, closure and covering graphs to a directory");
    c4_flags(exp);
    graph_flags(exp);
    out_flag(exp);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*classes) return cmd_classes(o);
        if (*relations) return cmd_relations(o);
        if (*build) return cmd_build(o);
        if (*verify) return cmd_verify_appendix(o);
        if (*eta) return cmd_eta(o);
        if (*autom) return cmd_automorphism(o);
        if (*mc) return cmd_montecarlo(o);
        if (*falsify) return cmd_falsify(o);
        if (*survey) return cmd_survey(o);
        if (*exp) return cmd_export(o);
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << '\n' << app.help();
        return kExitUsage;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitMismatch;
    }
    return kExitUsage;
}
