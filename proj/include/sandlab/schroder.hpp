#pragma once

#include "sandlab/config.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sandlab {

// Lattice path from (0,0) with U=(0,1), H=(1,1), D=(1,0), staying weakly
// above y = x and ending on it. n counts U (and D) steps, d counts H steps.
class SchroderWord {
public:
    SchroderWord() = default;
    explicit SchroderWord(std::string letters);  // throws ParseError / PreconditionError

    const std::string& str() const { return letters_; }
    int n() const { return n_; }
    int d() const { return d_; }
    std::size_t size() const { return letters_.size(); }
    char operator[](std::size_t i) const { return letters_[i]; }

    friend bool operator==(const SchroderWord& a, const SchroderWord& b) { return a.letters_ == b.letters_; }
    friend auto operator<=>(const SchroderWord& a, const SchroderWord& b) { return a.letters_ <=> b.letters_; }

private:
    std::string letters_;
    int n_ = 0;
    int d_ = 0;
};

struct Point {
    int x = 0;
    int y = 0;
    friend bool operator==(const Point&, const Point&) = default;
    friend auto operator<=>(const Point&, const Point&) = default;
};

// Letter counts of an arbitrary word over {U,H,D}; throws on other letters.
struct LetterCounts {
    int u = 0;
    int h = 0;
    int d = 0;
};
LetterCounts letter_counts(std::string_view word);

bool is_schroder(std::string_view word);

// Lattice points visited by the word, starting at the origin.
std::vector<Point> path_points(std::string_view word);

// a_j + 1 = non-U letters after the j-th U; b_i = D letters after the i-th H.
Configuration phi(const SchroderWord& w);
SchroderWord phi_inv(const Shape& s, const Configuration& c);

// Reverse the word and swap U with D.
std::string mirror(std::string_view word);
SchroderWord mirror(const SchroderWord& w);

// Full lower triangles between the path and the diagonal.
int area(const SchroderWord& w);

// Delete the H letters.
SchroderWord collapse(const SchroderWord& w);

struct DyckBounce {
    int bounce = 0;
    std::vector<Point> peaks;  // from the top right
};

// Bounce path from (n,n) towards the origin. Needs a word without H letters.
DyckBounce dyck_bounce(const SchroderWord& dyck);

// Peaks of the Schroder path: tops of the U steps matching the Dyck peaks of
// the collapsed path, from the top right.
std::vector<Point> schroder_peaks(const SchroderWord& w);

// bounce(C(w)) + sum over H steps of the peaks above it.
int schroder_bounce_haglund(const SchroderWord& w);
// Sum over peaks of the squares to the left of the peak in its row.
int schroder_bounce_loehr(const SchroderWord& w);

struct AntidiagonalBounce {
    int bounce = 0;
    std::vector<Point> peaks;
    std::vector<Point> path;  // from (n+d, n+d) to the origin
};
// Experimental: a bounce path on the Schroder path itself that moves
// parallel to each H step while crossing its anti-diagonal.
AntidiagonalBounce schroder_bounce_antidiagonal(const SchroderWord& w);

// Haglund's statistic; throws InternalError if the two descriptions differ.
int schroder_bounce(const SchroderWord& w);

// phi_{n,0}(collapse(phi_inv(c))): forget the independent part.
Configuration compress(const Shape& s, const Configuration& c);

// Lower triangles (by the lower-left corner of their unit square) between
// the path and the diagonal, sorted.
std::vector<Point> lower_triangles(const SchroderWord& w);
// Each D and H step owns the lower triangles below it in its column.
// Counts for the D steps in order, then the H steps in order.
std::vector<int> owned_triangles(const SchroderWord& w);
// w <= w' iff every step of w owns no more triangles than the matching
// step (same letter, same rank) of w'.
bool triangle_leq(const SchroderWord& lower, const SchroderWord& upper);

// Every arrangement of n U, n D and d H letters, lexicographic in U < H < D.
std::vector<std::string> enumerate_words(int n, int d);
std::vector<SchroderWord> enumerate_schroder_words(int n, int d);

// phi image of all Schroder words, in canonical order.
std::vector<Configuration> enumerate_sorted_recurrent_via_words(const Shape& s);

}  // namespace sandlab
