#include "sandlab/schroder.hpp"

#include "sandlab/error.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace sandlab {

LetterCounts letter_counts(std::string_view word) {
    LetterCounts c;
    for (char ch : word) {
        switch (ch) {
            case 'U': ++c.u; break;
            case 'H': ++c.h; break;
            case 'D': ++c.d; break;
            default: throw ParseError("invalid letter '" + std::string(1, ch) + "' in word '" + std::string(word) + "'");
        }
    }
    return c;
}

bool is_schroder(std::string_view word) {
    letter_counts(word);
    int x = 0, y = 0;
    for (char ch : word) {
        if (ch == 'U') ++y;
        if (ch == 'H') ++x, ++y;
        if (ch == 'D') ++x;
        if (y < x) return false;
    }
    return x == y;
}

SchroderWord::SchroderWord(std::string letters) : letters_(std::move(letters)) {
    LetterCounts c = letter_counts(letters_);
    if (!is_schroder(letters_)) throw PreconditionError("'" + letters_ + "' is not a Schroder word");
    n_ = c.u;
    d_ = c.h;
}

std::vector<Point> path_points(std::string_view word) {
    std::vector<Point> pts{{0, 0}};
    Point p;
    for (char ch : word) {
        if (ch == 'U') ++p.y;
        else if (ch == 'H') ++p.x, ++p.y;
        else if (ch == 'D') ++p.x;
        else throw ParseError("invalid letter '" + std::string(1, ch) + "'");
        pts.push_back(p);
    }
    return pts;
}

Configuration phi(const SchroderWord& w) {
    Configuration c;
    const std::string& s = w.str();
    int non_u_after = 0, d_after = 0;
    for (auto it = s.rbegin(); it != s.rend(); ++it) {
        if (*it == 'U') {
            c.clique.push_back(non_u_after - 1);
        } else {
            if (*it == 'H') c.independent.push_back(d_after);
            if (*it == 'D') ++d_after;
            ++non_u_after;
        }
    }
    std::reverse(c.clique.begin(), c.clique.end());
    std::reverse(c.independent.begin(), c.independent.end());
    return c;
}

SchroderWord phi_inv(const Shape& s, const Configuration& c) {
    require_fits(s, c);
    if (!is_sorted(c)) throw PreconditionError("configuration is not sorted: " + to_display(c));
    for (Grain a : c.clique)
        if (a < 0 || a > s.n + s.d - 1) throw PreconditionError("configuration is not recurrent: " + to_display(c));
    for (Grain b : c.independent)
        if (b < 0 || b > s.n) throw PreconditionError("configuration is not recurrent: " + to_display(c));

    std::string rev;
    int hi = s.d - 1;
    for (int k = 0; k <= s.n; ++k) {
        while (hi >= 0 && c.independent[hi] == k) {
            rev += 'H';
            --hi;
        }
        if (k < s.n) rev += 'D';
    }
    std::string non_u(rev.rbegin(), rev.rend());

    std::string word;
    std::size_t j = 0;
    const int len = s.n + s.d;
    for (int p = 0; p < len; ++p) {
        while (j < c.clique.size() && len - (c.clique[j] + 1) == p) {
            word += 'U';
            ++j;
        }
        word += non_u[p];
    }
    if (!is_schroder(word)) throw PreconditionError("configuration is not recurrent: " + to_display(c));
    SchroderWord w(word);
    if (phi(w) != c) throw InternalError("phi_inv does not invert phi at " + to_display(c));
    return w;
}

std::string mirror(std::string_view word) {
    letter_counts(word);
    std::string out(word.rbegin(), word.rend());
    for (char& ch : out) {
        if (ch == 'U') ch = 'D';
        else if (ch == 'D') ch = 'U';
    }
    return out;
}

SchroderWord mirror(const SchroderWord& w) { return SchroderWord(mirror(w.str())); }

std::vector<Point> lower_triangles(const SchroderWord& w) {
    std::vector<Point> out;
    Point p;
    for (char ch : w.str()) {
        if (ch == 'U') {
            ++p.y;
            continue;
        }
        int top = ch == 'H' ? p.y : p.y - 1;
        for (int j = p.x + 1; j <= top; ++j) out.push_back({p.x, j});
        ++p.x;
        if (ch == 'H') ++p.y;
    }
    std::sort(out.begin(), out.end());
    return out;
}

int area(const SchroderWord& w) { return static_cast<int>(lower_triangles(w).size()); }

std::vector<int> owned_triangles(const SchroderWord& w) {
    std::vector<int> d_steps, h_steps;
    Point p;
    for (char ch : w.str()) {
        if (ch == 'U') {
            ++p.y;
        } else if (ch == 'D') {
            d_steps.push_back(p.y);
            ++p.x;
        } else {
            h_steps.push_back(p.y + 1);
            ++p.x, ++p.y;
        }
    }
    d_steps.insert(d_steps.end(), h_steps.begin(), h_steps.end());
    return d_steps;
}

bool triangle_leq(const SchroderWord& lower, const SchroderWord& upper) {
    if (lower.n() != upper.n() || lower.d() != upper.d()) return false;
    auto a = owned_triangles(lower);
    auto b = owned_triangles(upper);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

SchroderWord collapse(const SchroderWord& w) {
    std::string out;
    for (char ch : w.str())
        if (ch != 'H') out += ch;
    return SchroderWord(out);
}

DyckBounce dyck_bounce(const SchroderWord& dyck) {
    if (dyck.d() != 0) throw PreconditionError("dyck_bounce needs a word without H: " + dyck.str());
    const int n = dyck.n();
    std::vector<int> left(n + 1, 0);  // x of the U step ending at height y
    Point p;
    for (char ch : dyck.str()) {
        if (ch == 'U') left[++p.y] = p.x;
        else ++p.x;
    }
    DyckBounce r;
    int y = n;
    while (y > 0) {
        int x = left[y];
        r.peaks.push_back({x, y});
        r.bounce += x;
        y = x;
    }
    return r;
}

std::vector<Point> schroder_peaks(const SchroderWord& w) {
    DyckBounce db = dyck_bounce(collapse(w));
    std::vector<Point> u_tops;
    Point p;
    for (char ch : w.str()) {
        if (ch == 'U') ++p.y, u_tops.push_back(p);
        else if (ch == 'H') ++p.x, ++p.y;
        else ++p.x;
    }
    std::vector<Point> out;
    for (const Point& peak : db.peaks) out.push_back(u_tops[peak.y - 1]);
    return out;
}

int schroder_bounce_haglund(const SchroderWord& w) {
    int total = dyck_bounce(collapse(w)).bounce;
    auto peaks = schroder_peaks(w);
    Point p;
    for (char ch : w.str()) {
        if (ch == 'U') ++p.y;
        else if (ch == 'D') ++p.x;
        else {
            ++p.x, ++p.y;
            for (const Point& q : peaks)
                if (q.y > p.y) ++total;
        }
    }
    return total;
}

int schroder_bounce_loehr(const SchroderWord& w) {
    int total = 0;
    for (const Point& q : schroder_peaks(w)) total += q.x;
    return total;
}

AntidiagonalBounce schroder_bounce_antidiagonal(const SchroderWord& w) {
    const int size = w.n() + w.d();
    std::set<Point> u_tops;
    std::set<int> h_starts;  // x + y at the start of each H step
    Point p;
    for (char ch : w.str()) {
        if (ch == 'U') ++p.y, u_tops.insert(p);
        else if (ch == 'H') h_starts.insert(p.x + p.y), ++p.x, ++p.y;
        else ++p.x;
    }
    AntidiagonalBounce r;
    Point cur{size, size};
    r.path.push_back(cur);
    bool west = true;
    const int limit = 4 * (size + 1) * (size + 1);
    for (int step = 0; cur != Point{0, 0}; ++step) {
        if (step > limit) throw InternalError("anti-diagonal bounce path did not terminate for " + w.str());
        if (west && u_tops.count(cur)) {
            r.peaks.push_back(cur);
            r.bounce += cur.x;
            west = false;
            continue;
        }
        if (!west && cur.x == cur.y) {
            west = true;
            continue;
        }
        if (h_starts.count(cur.x + cur.y - 2)) --cur.x, --cur.y;
        else if (west) --cur.x;
        else --cur.y;
        r.path.push_back(cur);
    }
    return r;
}

int schroder_bounce(const SchroderWord& w) {
    int h = schroder_bounce_haglund(w);
    int l = schroder_bounce_loehr(w);
    if (h != l) throw InternalError("bounce descriptions disagree on " + w.str());
    return h;
}

Configuration compress(const Shape& s, const Configuration& c) { return phi(collapse(phi_inv(s, c))); }

std::vector<std::string> enumerate_words(int n, int d) {
    if (n < 0 || d < 0) throw DomainError("negative letter counts");
    std::vector<std::string> out;
    std::string cur;
    std::function<void(int, int, int)> rec = [&](int u, int h, int dd) {
        if (u == 0 && h == 0 && dd == 0) {
            out.push_back(cur);
            return;
        }
        const char letters[3] = {'U', 'H', 'D'};
        int* counts[3] = {&u, &h, &dd};
        for (int i = 0; i < 3; ++i) {
            if (*counts[i] == 0) continue;
            --*counts[i];
            cur.push_back(letters[i]);
            rec(u, h, dd);
            cur.pop_back();
            ++*counts[i];
        }
    };
    rec(n, d, n);
    return out;
}

std::vector<SchroderWord> enumerate_schroder_words(int n, int d) {
    if (n < 0 || d < 0) throw DomainError("negative letter counts");
    std::vector<SchroderWord> out;
    std::string cur;
    // excess = y - x
    std::function<void(int, int, int, int)> rec = [&](int u, int h, int dd, int excess) {
        if (u == 0 && h == 0 && dd == 0) {
            out.emplace_back(cur);
            return;
        }
        if (u > 0) {
            cur.push_back('U');
            rec(u - 1, h, dd, excess + 1);
            cur.pop_back();
        }
        if (h > 0) {
            cur.push_back('H');
            rec(u, h - 1, dd, excess);
            cur.pop_back();
        }
        if (dd > 0 && excess > 0) {
            cur.push_back('D');
            rec(u, h, dd - 1, excess - 1);
            cur.pop_back();
        }
    };
    rec(n, d, n, 0);
    return out;
}

std::vector<Configuration> enumerate_sorted_recurrent_via_words(const Shape& s) {
    std::vector<Configuration> out;
    for (const auto& w : enumerate_schroder_words(s.n, s.d)) out.push_back(phi(w));
    std::sort(out.begin(), out.end(), std::greater<>{});
    return out;
}

}  // namespace sandlab
