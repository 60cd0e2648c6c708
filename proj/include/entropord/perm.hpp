#pragma once

// Permutations of {1..6} in one-line form, composed right to left.

#include <array>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace entropord {

constexpr int kDegree = 6;

class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct Permutation {
    // img[i-1] = sigma(i)
    std::array<std::uint8_t, kDegree> img{1, 2, 3, 4, 5, 6};

    static Permutation identity() { return {}; }
    static Permutation from_images(const std::array<int, kDegree>& images);
    static Permutation transposition(int i, int j);

    int operator()(int i) const { return img[i - 1]; }
    bool is_identity() const { return *this == Permutation{}; }

    // Position of this permutation in lexicographic order of one-line forms, 0..719.
    int rank() const;

    bool operator==(const Permutation&) const = default;
    auto operator<=>(const Permutation&) const = default;
};

// (p∘q)(i) = p(q(i)).
Permutation compose(const Permutation& p, const Permutation& q);
Permutation inverse(const Permutation& p);
// by ∘ p ∘ by⁻¹
Permutation conjugate(const Permutation& p, const Permutation& by);
int order(const Permutation& p);

// Accepts "(3654)", "(3,6,5,4)", "(12)(45)", "()"; cycles are composed right to left.
Permutation parse_cycles(std::string_view text);
// Disjoint cycles, each starting at its least element, sorted; identity is "()".
std::string format_cycles(const Permutation& p);

// All 720 permutations in lexicographic order of one-line forms.
const std::vector<Permutation>& all_permutations();
// The 15 transpositions (i,j), i<j, ordered lexicographically.
const std::vector<Permutation>& all_transpositions();

// Letters a..f are ranks 0..5; a is the largest probability.
using Letter = int;
char letter_char(Letter l);
Letter letter_from_char(char c);

// 2x3 grid of letters flattened row-major: positions 1..3 top row, 4..6 bottom row.
struct LetterArrangement {
    std::array<Letter, kDegree> cell{0, 1, 2, 3, 4, 5};

    static LetterArrangement fiducial() { return {}; }
    static LetterArrangement parse(std::string_view text);  // "abd/efc"
    std::string to_string() const;                          // "abd/efc"

    Letter at(int pos) const { return cell[pos - 1]; }
    int position_of(Letter l) const;
    bool valid() const;

    bool operator==(const LetterArrangement&) const = default;
    auto operator<=>(const LetterArrangement&) const = default;
};

// The letter in position k moves to position p(k).
LetterArrangement apply(const Permutation& p, const LetterArrangement& base);
// Exchange two letters wherever they stand.
LetterArrangement swap_letters(const LetterArrangement& g, Letter x, Letter y);
// The permutation sending the fiducial arrangement to g.
Permutation arrangement_permutation(const LetterArrangement& g);

}  // namespace entropord
