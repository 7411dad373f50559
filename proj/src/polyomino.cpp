#include "sandlab/polyomino.hpp"

#include "sandlab/error.hpp"

#include <algorithm>
#include <set>

namespace sandlab {

SawtoothPolyomino sts(std::string_view word) {
    LetterCounts lc = letter_counts(word);
    if (lc.u != lc.d) throw PreconditionError("word '" + std::string(word) + "' has unequal U and D counts");
    Shape s(lc.u, lc.h);
    SawtoothPolyomino p{s.n, s.d, "N", ""};
    for (char ch : word) {
        p.upper += ch == 'U' ? 'N' : 'S';
        if (ch == 'H') p.lower += 'S';
        if (ch == 'D') p.lower += 'W';
    }
    p.upper += 'S';
    p.lower += 'W';
    return p;
}

namespace {

std::vector<Point> walk(const SawtoothPolyomino& p, const std::string& steps) {
    Point cur{p.n + 1, p.d};
    std::vector<Point> pts{cur};
    for (char ch : steps) {
        switch (ch) {
            case 'N': --cur.x, ++cur.y; break;
            case 'S': --cur.y; break;
            case 'W': --cur.x; break;
            default: throw ParseError("invalid polyomino step '" + std::string(1, ch) + "'");
        }
        pts.push_back(cur);
    }
    return pts;
}

}  // namespace

std::vector<Point> upper_points(const SawtoothPolyomino& p) { return walk(p, p.upper); }
std::vector<Point> lower_points(const SawtoothPolyomino& p) { return walk(p, p.lower); }

bool is_valid(const SawtoothPolyomino& p) {
    auto up = upper_points(p);
    auto lo = lower_points(p);
    if (up.back() != Point{0, 0} || lo.back() != Point{0, 0}) return false;
    std::set<Point> upper_set(up.begin() + 1, up.end() - 1);
    for (std::size_t i = 1; i + 1 < lo.size(); ++i)
        if (upper_set.count(lo[i])) return false;
    return true;
}

SawtoothPolyomino from_config(const Shape& s, const Configuration& c) {
    require_fits(s, c);
    if (!is_sorted(c)) throw PreconditionError("configuration is not sorted: " + to_display(c));
    SawtoothPolyomino p{s.n, s.d, "", ""};
    auto fail = [&]() { throw PreconditionError("configuration is not recurrent: " + to_display(c)); };

    Point cur{s.n + 1, s.d};
    for (int i = s.d; i >= 1; --i) {
        Grain x = 1 + c.independent[s.d - i];
        if (x > cur.x || x < 1) fail();
        for (; cur.x > x; --cur.x) p.lower += 'W';
        p.lower += 'S';
        --cur.y;
    }
    for (; cur.x > 0; --cur.x) p.lower += 'W';

    cur = {s.n, s.d + 1};
    p.upper += 'N';
    for (int j = s.n; j >= 1; --j) {
        Grain a = c.clique[s.n - j];
        Grain right_y = 2 - j + a;
        if (right_y > cur.y || right_y < 0) fail();
        for (; cur.y > right_y; --cur.y) p.upper += 'S';
        p.upper += 'N';
        cur = {j - 1, static_cast<int>(3 - j + a)};
    }
    for (; cur.y > 0; --cur.y) p.upper += 'S';
    return p;
}

int area(const SawtoothPolyomino& p) {
    std::vector<int> top(p.n + 1, 0), bottom(p.n + 1, 0);
    Point cur{p.n + 1, p.d};
    for (char ch : p.upper) {
        if (ch == 'N') {
            top[cur.x - 1] = cur.y;
            --cur.x, ++cur.y;
        } else {
            --cur.y;
        }
    }
    cur = {p.n + 1, p.d};
    for (char ch : p.lower) {
        if (ch == 'W') {
            bottom[cur.x - 1] = cur.y;
            --cur.x;
        } else {
            --cur.y;
        }
    }
    int total = 0;
    for (int x = 0; x <= p.n; ++x) total += std::max(0, top[x] - bottom[x]);
    return total;
}

std::vector<int> BounceRecord::normalized() const { return strip_zero_pairs(sizes); }

std::vector<int> strip_zero_pairs(std::vector<int> sizes) {
    while (sizes.size() >= 2 && sizes[sizes.size() - 1] == 0 && sizes[sizes.size() - 2] == 0) sizes.resize(sizes.size() - 2);
    return sizes;
}

namespace {

struct Runner {
    std::set<Point> upper;
    std::set<Point> lower;
    BounceRecord rec;
    Point cur;
    int budget;

    explicit Runner(const SawtoothPolyomino& p, ToppleMode mode) {
        if (!is_valid(p)) throw PreconditionError("polyomino paths touch away from their end points");
        auto up = upper_points(p);
        auto lo = lower_points(p);
        upper.insert(up.begin(), up.end());
        lower.insert(lo.begin(), lo.end());
        rec.mode = mode;
        cur = {p.n, p.d};
        rec.path.push_back(cur);
        budget = 4 * (p.n + p.d + 2) * (p.n + p.d + 2);
    }

    void tick() {
        if (--budget < 0 || cur.x < 0 || cur.y < 0) throw InternalError("bounce path left the polyomino");
        rec.path.push_back(cur);
    }

    int north_west() {
        int k = 0;
        while (!upper.count(cur)) --cur.x, ++cur.y, ++k, tick();
        return k;
    }

    int south() {
        int k = 0;
        while (!lower.count(cur)) --cur.y, ++k, tick();
        return k;
    }

    bool done() const { return cur == Point{0, 0}; }
};

}  // namespace

BounceRecord cti_bounce(const SawtoothPolyomino& p) {
    Runner r(p, ToppleMode::CTI);
    while (!r.done()) {
        int nw = r.north_west();
        int s = r.south();
        if (s < nw || nw + s == 0) throw InternalError("CTI bounce path produced an impossible run");
        r.rec.sizes.push_back(nw);
        r.rec.sizes.push_back(s - nw);
    }
    return r.rec;
}

BounceRecord itc_bounce(const SawtoothPolyomino& p) {
    Runner r(p, ToppleMode::ITC);
    int previous = 0;
    while (true) {
        int s = r.south();
        if (s < previous) throw InternalError("ITC bounce path produced an impossible run");
        r.rec.sizes.push_back(s - previous);
        if (r.done()) {
            r.rec.sizes.push_back(0);
            break;
        }
        previous = r.north_west();
        if (previous == 0 && s == 0) throw InternalError("ITC bounce path is stuck");
        r.rec.sizes.push_back(previous);
    }
    return r.rec;
}

}  // namespace sandlab
