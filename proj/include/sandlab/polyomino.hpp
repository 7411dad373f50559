#pragma once

#include "sandlab/config.hpp"
#include "sandlab/schroder.hpp"
#include "sandlab/toppling.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace sandlab {

// Pair of paths from (n+1, d) to the origin. upper is over {N, S}
// (N = north-west, S = south), lower over {W, S}.
struct SawtoothPolyomino {
    int n = 0;
    int d = 0;
    std::string upper;
    std::string lower;

    int width() const { return n + 1; }
    int height() const { return d; }
    friend bool operator==(const SawtoothPolyomino&, const SawtoothPolyomino&) = default;
};

// Defined for every word with n U, n D and d H letters.
SawtoothPolyomino sts(std::string_view word);

std::vector<Point> upper_points(const SawtoothPolyomino& p);
std::vector<Point> lower_points(const SawtoothPolyomino& p);

// True iff the two paths share only their end points.
bool is_valid(const SawtoothPolyomino& p);

// Built from the grain counts directly: vertical lower segments at
// x = 1 + b_i and diagonal upper segments at heights given by a_j.
SawtoothPolyomino from_config(const Shape& s, const Configuration& c);

// Full unit squares inside the polyomino.
int area(const SawtoothPolyomino& p);

struct BounceRecord {
    ToppleMode mode = ToppleMode::CTI;
    std::vector<int> sizes;   // as emitted by the path construction
    std::vector<Point> path;  // from (n, d) to the origin

    // sizes with trailing (0, 0) pairs removed
    std::vector<int> normalized() const;
};

// Alternate north-west runs to the upper path and south runs to the lower
// path, starting at (n, d). Run lengths give (p_1, q_1, p_2, q_2, ...).
BounceRecord cti_bounce(const SawtoothPolyomino& p);
// South runs first. Run lengths give (q'_1, p'_1, q'_2, ...).
BounceRecord itc_bounce(const SawtoothPolyomino& p);

std::vector<int> strip_zero_pairs(std::vector<int> sizes);

}  // namespace sandlab
