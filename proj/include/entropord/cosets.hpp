#pragma once

// The row/column-swap subgroup K and the 60 right cosets K\S6.

#include <array>
#include <optional>
#include <vector>

#include "entropord/perm.hpp"

namespace entropord {

using ClassId = int;
constexpr int kClassCount = 60;

// Order-12 subgroup generated by (1,2)(4,5), (1,3)(4,6), (1,4)(2,5)(3,6).
const std::vector<Permutation>& subgroup_K();
// Closure of a generator list under composition.
std::vector<Permutation> generate_group(const std::vector<Permutation>& gens);

// Letter reversal a<->f, b<->e, c<->d as a permutation of symbols.
Permutation omega();

struct MatrixClass {
    ClassId id = 0;
    Permutation canonical_rep;
    LetterArrangement canonical_grid;
};

// Among the 12 row/column images: a in the top-left corner, then the
// larger of the remaining top-row letters in the middle.
LetterArrangement canonical_form(const LetterArrangement& g);

const std::vector<MatrixClass>& enumerate_classes();
const MatrixClass& class_info(ClassId id);
ClassId class_of(const Permutation& p);
ClassId class_of_grid(const LetterArrangement& g);
ClassId omega_action(ClassId x);

using GeneratorTriple = std::array<Permutation, 3>;
const std::vector<GeneratorTriple>& parabolic_subgroups();

struct GroupAutomorphism {
    Permutation image_of_transposition;  // image of (1,2)
    Permutation image_of_six_cycle;      // image of (1,2,3,4,5,6)
    std::array<Permutation, 720> table;  // indexed by Permutation::rank()

    Permutation operator()(const Permutation& g) const { return table[g.rank()]; }
};

// Builds the map from generator images if they satisfy the defining relations
// of S6 and extend to a bijective homomorphism.
std::optional<GroupAutomorphism> extend_automorphism(const Permutation& s_image,
                                                     const Permutation& c_image);

// All automorphisms with zeta(K) = <J> found by searching generator images.
std::vector<GroupAutomorphism> find_automorphisms_K_to_J(const GeneratorTriple& J);

}  // namespace entropord
