#include "entropord/perm.hpp"

#include <algorithm>
#include <numeric>

namespace entropord {

Permutation Permutation::from_images(const std::array<int, kDegree>& images) {
    Permutation p;
    std::array<bool, kDegree> seen{};
    for (int i = 0; i < kDegree; ++i) {
        int v = images[i];
        if (v < 1 || v > kDegree || seen[v - 1])
            throw std::invalid_argument("images do not form a permutation of 1..6");
        seen[v - 1] = true;
        p.img[i] = static_cast<std::uint8_t>(v);
    }
    return p;
}

Permutation Permutation::transposition(int i, int j) {
    if (i < 1 || i > kDegree || j < 1 || j > kDegree || i == j)
        throw std::invalid_argument("bad transposition");
    Permutation p;
    p.img[i - 1] = static_cast<std::uint8_t>(j);
    p.img[j - 1] = static_cast<std::uint8_t>(i);
    return p;
}

int Permutation::rank() const {
    static constexpr int fact[] = {120, 24, 6, 2, 1, 1};
    int r = 0;
    for (int i = 0; i < kDegree; ++i) {
        int smaller = 0;
        for (int j = i + 1; j < kDegree; ++j)
            if (img[j] < img[i]) ++smaller;
        r += smaller * fact[i];
    }
    return r;
}

Permutation compose(const Permutation& p, const Permutation& q) {
    Permutation r;
    for (int i = 0; i < kDegree; ++i) r.img[i] = p.img[q.img[i] - 1];
    return r;
}

Permutation inverse(const Permutation& p) {
    Permutation r;
    for (int i = 0; i < kDegree; ++i) r.img[p.img[i] - 1] = static_cast<std::uint8_t>(i + 1);
    return r;
}

Permutation conjugate(const Permutation& p, const Permutation& by) {
    return compose(by, compose(p, inverse(by)));
}

int order(const Permutation& p) {
    int n = 1;
    Permutation q = p;
    while (!q.is_identity()) {
        q = compose(q, p);
        ++n;
    }
    return n;
}

Permutation parse_cycles(std::string_view text) {
    if (text.empty()) throw ParseError("empty cycle text");
    Permutation result;
    std::size_t i = 0;
    while (i < text.size()) {
        if (text[i] != '(') throw ParseError("expected '(' in \"" + std::string(text) + "\"");
        std::size_t close = text.find(')', i);
        if (close == std::string_view::npos) throw ParseError("unclosed cycle");
        std::string_view body = text.substr(i + 1, close - i - 1);
        std::vector<int> cyc;
        bool comma = body.find(',') != std::string_view::npos;
        std::size_t j = 0;
        while (j < body.size()) {
            char c = body[j];
            if (c == ',') {
                if (!comma || j == 0 || j + 1 == body.size() || body[j + 1] == ',')
                    throw ParseError("misplaced comma");
                ++j;
                continue;
            }
            if (c < '1' || c > '6') throw ParseError(std::string("bad symbol '") + c + "'");
            if (comma && j + 1 < body.size() && body[j + 1] != ',')
                throw ParseError("multi-digit symbol");
            int v = c - '0';
            if (std::find(cyc.begin(), cyc.end(), v) != cyc.end())
                throw ParseError("repeated symbol in cycle");
            cyc.push_back(v);
            ++j;
        }
        if (!cyc.empty()) {
            Permutation c;
            for (std::size_t k = 0; k < cyc.size(); ++k)
                c.img[cyc[k] - 1] = static_cast<std::uint8_t>(cyc[(k + 1) % cyc.size()]);
            // cycles written left to right act right to left
            result = compose(result, c);
        }
        i = close + 1;
    }
    return result;
}

std::string format_cycles(const Permutation& p) {
    std::string out;
    std::array<bool, kDegree> done{};
    for (int start = 1; start <= kDegree; ++start) {
        if (done[start - 1] || p(start) == start) continue;
        out += '(';
        int k = start;
        bool first = true;
        do {
            if (!first) out += ',';
            out += static_cast<char>('0' + k);
            done[k - 1] = true;
            first = false;
            k = p(k);
        } while (k != start);
        out += ')';
    }
    return out.empty() ? "()" : out;
}

const std::vector<Permutation>& all_permutations() {
    static const std::vector<Permutation> perms = [] {
        std::vector<Permutation> v;
        std::array<int, kDegree> a{1, 2, 3, 4, 5, 6};
        do {
            v.push_back(Permutation::from_images(a));
        } while (std::next_permutation(a.begin(), a.end()));
        return v;
    }();
    return perms;
}

const std::vector<Permutation>& all_transpositions() {
    static const std::vector<Permutation> ts = [] {
        std::vector<Permutation> v;
        for (int i = 1; i <= kDegree; ++i)
            for (int j = i + 1; j <= kDegree; ++j) v.push_back(Permutation::transposition(i, j));
        return v;
    }();
    return ts;
}

char letter_char(Letter l) { return static_cast<char>('a' + l); }

Letter letter_from_char(char c) {
    if (c < 'a' || c > 'f') throw ParseError(std::string("bad letter '") + c + "'");
    return c - 'a';
}

LetterArrangement LetterArrangement::parse(std::string_view text) {
    std::string s;
    for (char c : text)
        if (c != '/' && c != ' ') s += c;
    if (s.size() != kDegree) throw ParseError("arrangement needs six letters");
    LetterArrangement g;
    for (int i = 0; i < kDegree; ++i) g.cell[i] = letter_from_char(s[i]);
    if (!g.valid()) throw ParseError("arrangement repeats a letter");
    return g;
}

std::string LetterArrangement::to_string() const {
    std::string s;
    for (int i = 0; i < kDegree; ++i) {
        if (i == 3) s += '/';
        s += letter_char(cell[i]);
    }
    return s;
}

int LetterArrangement::position_of(Letter l) const {
    for (int i = 0; i < kDegree; ++i)
        if (cell[i] == l) return i + 1;
    throw std::invalid_argument("letter not present");
}

bool LetterArrangement::valid() const {
    std::array<bool, kDegree> seen{};
    for (Letter l : cell) {
        if (l < 0 || l >= kDegree || seen[l]) return false;
        seen[l] = true;
    }
    return true;
}

LetterArrangement apply(const Permutation& p, const LetterArrangement& base) {
    LetterArrangement out;
    for (int k = 1; k <= kDegree; ++k) out.cell[p(k) - 1] = base.cell[k - 1];
    return out;
}

LetterArrangement swap_letters(const LetterArrangement& g, Letter x, Letter y) {
    LetterArrangement out = g;
    for (Letter& l : out.cell) {
        if (l == x) l = y;
        else if (l == y) l = x;
    }
    return out;
}

Permutation arrangement_permutation(const LetterArrangement& g) {
    std::array<int, kDegree> images{};
    for (int k = 0; k < kDegree; ++k) images[g.cell[k]] = k + 1;
    return Permutation::from_images(images);
}

}  // namespace entropord
