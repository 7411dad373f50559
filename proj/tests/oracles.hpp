#pragma once

// Brute-force reference implementations used only by the tests.

#include "sandlab/bigint.hpp"
#include "sandlab/config.hpp"

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

namespace oracle {

using sandlab::Configuration;
using sandlab::Grain;
using sandlab::Shape;

// Dhar's test on an arbitrary (unsorted) stable configuration: topple the sink,
// relax by repeated full sweeps, recurrent iff every vertex fired exactly once.
inline bool dhar(const Shape& s, const Configuration& c) {
    const int n = s.n, d = s.d;
    std::vector<Grain> a = c.clique, b = c.independent;
    for (auto& x : a) x += 1;
    for (auto& x : b) x += 1;
    std::vector<int> fa(n, 0), fb(d, 0);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i < n; ++i) {
            if (a[i] >= n + d) {
                a[i] -= n + d;
                for (int j = 0; j < n; ++j) if (j != i) a[j] += 1;
                for (auto& x : b) x += 1;
                ++fa[i];
                changed = true;
            }
        }
        for (int i = 0; i < d; ++i) {
            if (b[i] >= n + 1) {
                b[i] -= n + 1;
                for (auto& x : a) x += 1;
                ++fb[i];
                changed = true;
            }
        }
    }
    return std::all_of(fa.begin(), fa.end(), [](int f) { return f == 1; }) &&
           std::all_of(fb.begin(), fb.end(), [](int f) { return f == 1; });
}

// Every stable configuration, sorted or not, passed through dhar; keeps the sorted ones.
inline std::vector<Configuration> sorted_recurrent(const Shape& s) {
    std::vector<Configuration> out;
    Configuration c;
    c.clique.assign(s.n, 0);
    c.independent.assign(s.d, 0);
    std::function<void(int)> rec = [&](int pos) {
        if (pos == s.n + s.d) {
            if (sandlab::is_sorted(c) && dhar(s, c)) out.push_back(c);
            return;
        }
        if (pos < s.n) {
            for (Grain v = 0; v < s.n + s.d; ++v) { c.clique[pos] = v; rec(pos + 1); }
        } else {
            for (Grain v = 0; v < s.n + 1; ++v) { c.independent[pos - s.n] = v; rec(pos + 1); }
        }
    };
    rec(0);
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

// Words over U,H,D with n U's, n D's and d H's satisfying prefix dominance.
inline std::vector<std::string> schroder_words(int n, int d) {
    std::vector<std::string> out;
    std::string w;
    std::function<void(int, int, int)> rec = [&](int u, int h, int dd) {
        if (u == n && h == d && dd == n) { out.push_back(w); return; }
        if (u < n) { w.push_back('U'); rec(u + 1, h, dd); w.pop_back(); }
        if (h < d) { w.push_back('H'); rec(u, h + 1, dd); w.pop_back(); }
        if (dd < u) { w.push_back('D'); rec(u, h, dd + 1); w.pop_back(); }
    };
    rec(0, 0, 0);
    return out;
}

// Lower triangles: each U or H step starting at (x,y) adds y - x.
inline int area(const std::string& w) {
    int x = 0, y = 0, total = 0;
    for (char ch : w) {
        if (ch == 'U') { total += y - x; ++y; }
        else if (ch == 'H') { total += y - x; ++x; ++y; }
        else ++x;
    }
    return total;
}

// Sum of x over peaks: the U steps of the word whose collapsed counterparts
// end where the Dyck bounce path touches the path.
inline int bounce(const std::string& w) {
    std::vector<int> u_x;  // x of each U in w
    std::string dyck;
    int x = 0;
    for (char ch : w) {
        if (ch == 'U') { u_x.push_back(x); dyck.push_back('U'); }
        else if (ch == 'H') ++x;
        else { ++x; dyck.push_back('D'); }
    }
    const int a = static_cast<int>(u_x.size());
    // dyck_x[h] = x of the first U step reaching height h
    std::vector<int> u_index_at_height(a + 1, -1), dyck_x(a + 1, 0);
    int cx = 0, cy = 0, ui = 0;
    for (char ch : dyck) {
        if (ch == 'U') {
            ++cy;
            if (u_index_at_height[cy] < 0) { u_index_at_height[cy] = ui; dyck_x[cy] = cx; }
            ++ui;
        } else {
            ++cx;
        }
    }
    int total = 0, level = a;
    while (level > 0) {
        total += u_x[u_index_at_height[level]];
        level = dyck_x[level];
    }
    return total;
}

inline std::string mirror(const std::string& w) {
    std::string out(w.rbegin(), w.rend());
    for (char& ch : out) ch = ch == 'U' ? 'D' : ch == 'D' ? 'U' : ch;
    return out;
}

inline sandlab::BigInt choose(long m, long k) {
    if (k < 0 || m < 0 || k > m) return 0;
    sandlab::BigInt r = 1;
    for (long i = 1; i <= k; ++i) r = r * (m - k + i) / i;
    return r;
}

}  // namespace oracle
