#include "entropord/cosets.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

namespace entropord {

std::vector<Permutation> generate_group(const std::vector<Permutation>& gens) {
    std::set<Permutation> seen{Permutation::identity()};
    std::deque<Permutation> queue{Permutation::identity()};
    while (!queue.empty()) {
        Permutation g = queue.front();
        queue.pop_front();
        for (const auto& s : gens) {
            Permutation h = compose(g, s);
            if (seen.insert(h).second) queue.push_back(h);
        }
    }
    return {seen.begin(), seen.end()};
}

const std::vector<Permutation>& subgroup_K() {
    static const std::vector<Permutation> k = generate_group({
        parse_cycles("(12)(45)"),
        parse_cycles("(13)(46)"),
        parse_cycles("(14)(25)(36)"),
    });
    return k;
}

Permutation omega() { return parse_cycles("(16)(25)(34)"); }

LetterArrangement canonical_form(const LetterArrangement& g) {
    for (const auto& k : subgroup_K()) {
        LetterArrangement h = apply(k, g);
        // larger probability means smaller rank
        if (h.at(1) == 0 && h.at(2) < h.at(3)) return h;
    }
    throw std::logic_error("no canonical image");
}

namespace {

struct ClassTable {
    std::vector<MatrixClass> classes;
    std::array<ClassId, 720> by_rank{};
    std::map<LetterArrangement, ClassId> by_grid;
};

const ClassTable& table() {
    static const ClassTable t = [] {
        ClassTable t;
        std::set<LetterArrangement> grids;
        for (const auto& p : all_permutations())
            grids.insert(canonical_form(apply(p, LetterArrangement::fiducial())));
        ClassId id = 0;
        for (const auto& g : grids) {
            ++id;
            t.classes.push_back({id, arrangement_permutation(g), g});
            t.by_grid[g] = id;
        }
        for (const auto& p : all_permutations())
            t.by_rank[p.rank()] = t.by_grid.at(canonical_form(apply(p, LetterArrangement::fiducial())));
        return t;
    }();
    return t;
}

}  // namespace

const std::vector<MatrixClass>& enumerate_classes() { return table().classes; }

const MatrixClass& class_info(ClassId id) {
    if (id < 1 || id > kClassCount) throw std::out_of_range("class id out of range");
    return table().classes[id - 1];
}

ClassId class_of(const Permutation& p) { return table().by_rank[p.rank()]; }

ClassId class_of_grid(const LetterArrangement& g) { return table().by_grid.at(canonical_form(g)); }

ClassId omega_action(ClassId x) { return class_of(compose(class_info(x).canonical_rep, omega())); }

const std::vector<GeneratorTriple>& parabolic_subgroups() {
    static const std::vector<GeneratorTriple> j = [] {
        auto t = [](int a, int b) { return Permutation::transposition(a, b); };
        return std::vector<GeneratorTriple>{
            {t(1, 2), t(2, 3), t(4, 5)}, {t(1, 2), t(2, 3), t(5, 6)}, {t(1, 2), t(3, 4), t(4, 5)},
            {t(1, 2), t(4, 5), t(5, 6)}, {t(2, 3), t(3, 4), t(5, 6)}, {t(2, 3), t(4, 5), t(5, 6)},
        };
    }();
    return j;
}

std::optional<GroupAutomorphism> extend_automorphism(const Permutation& s_image,
                                                     const Permutation& c_image) {
    const Permutation s = Permutation::transposition(1, 2);
    const Permutation c = parse_cycles("(123456)");
    GroupAutomorphism z;
    z.image_of_transposition = s_image;
    z.image_of_six_cycle = c_image;
    std::array<bool, 720> known{};
    std::array<bool, 720> hit{};
    known[0] = true;
    z.table[0] = Permutation::identity();
    std::deque<Permutation> queue{Permutation::identity()};
    while (!queue.empty()) {
        Permutation g = queue.front();
        queue.pop_front();
        const Permutation zg = z.table[g.rank()];
        for (int step = 0; step < 2; ++step) {
            Permutation h = compose(g, step == 0 ? s : c);
            Permutation zh = compose(zg, step == 0 ? s_image : c_image);
            int r = h.rank();
            if (known[r]) {
                if (z.table[r] != zh) return std::nullopt;
                continue;
            }
            known[r] = true;
            z.table[r] = zh;
            queue.push_back(h);
        }
    }
    for (const auto& img : z.table) {
        int r = img.rank();
        if (hit[r]) return std::nullopt;
        hit[r] = true;
    }
    return z;
}

std::vector<GroupAutomorphism> find_automorphisms_K_to_J(const GeneratorTriple& J) {
#ifdef ENTROPORD_WITH_AUTOMORPHISM_SEARCH
    std::vector<Permutation> jgens(J.begin(), J.end());
    const std::vector<Permutation> jset = generate_group(jgens);
    std::vector<Permutation> involutions, six_cycles;
    for (const auto& g : all_permutations()) {
        int o = order(g);
        if (o == 2) involutions.push_back(g);
        if (o == 6) six_cycles.push_back(g);
    }
    std::vector<GroupAutomorphism> found;
    for (const auto& si : involutions) {
        for (const auto& ci : six_cycles) {
            auto z = extend_automorphism(si, ci);
            if (!z) continue;
            std::vector<Permutation> image;
            for (const auto& k : subgroup_K()) image.push_back((*z)(k));
            std::sort(image.begin(), image.end());
            if (image == jset) found.push_back(*z);
        }
    }
    return found;
#else
    (void)J;
    throw std::logic_error("automorphism search was disabled at build time");
#endif
}

}  // namespace entropord
