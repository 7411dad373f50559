// Acceptance criteria, one line per criterion with measured time and limit.

#include "oracles.hpp"
#include "sandlab/core_asm.hpp"
#include "sandlab/cycle_lemma.hpp"
#include "sandlab/partition.hpp"
#include "sandlab/polyomino.hpp"
#include "sandlab/qt_poly.hpp"
#include "sandlab/schroder.hpp"
#include "sandlab/toppling.hpp"
#include "sandlab/verify.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>

using namespace sandlab;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
    void fail(const std::string& why) {
        if (ok) detail = why;
        ok = false;
    }
    void expect(bool cond, const std::string& why) {
        if (!cond) fail(why);
    }
};

int failures = 0;

void criterion(int id, const char* name, double limit_seconds, const std::function<void(Outcome&)>& body) {
    Outcome out;
    auto t0 = std::chrono::steady_clock::now();
    try {
        body(out);
    } catch (const std::exception& e) {
        out.fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (out.ok && secs > limit_seconds) out.fail("exceeded time limit");
    if (!out.ok) ++failures;
    std::printf("[%s] %2d %-44s %8.3fs (limit %gs)%s%s\n", out.ok ? "PASS" : "FAIL", id, name, secs, limit_seconds,
                out.ok ? "" : "  ", out.detail.c_str());
    std::fflush(stdout);
}

Configuration cfg(const char* text) { return parse_configuration(text); }

using Sizes = std::vector<int>;

void check_shapes(Outcome& out, int max_n, int max_d, const std::function<std::string(const Shape&)>& f) {
    for (int n = 1; n <= max_n; ++n) {
        for (int d = 0; d <= max_d; ++d) {
            std::string e = f(Shape(n, d));
            if (!e.empty()) out.fail(e);
        }
    }
}

}  // namespace

int main() {
    criterion(1, "CTI polynomial of S_{2,2}", 1.0, [](Outcome& out) {
        const int terms[][3] = {{5, 0, 1}, {0, 5, 1}, {4, 1, 1}, {1, 4, 1}, {3, 2, 1}, {2, 3, 1}, {4, 0, 1},
                                {0, 4, 1}, {3, 1, 2}, {1, 3, 2}, {2, 2, 2}, {3, 0, 2}, {0, 3, 2}, {2, 1, 3},
                                {1, 2, 3}, {2, 0, 1}, {0, 2, 1}, {1, 1, 2}, {1, 0, 1}, {0, 1, 1}};
        QtPolynomial expected;
        for (const auto& t : terms) expected.add_term(t[0], t[1], t[2]);
        out.expect(f_cti(2, 2) == expected, "f_cti(2,2) differs from the printed polynomial");
    });

    criterion(2, "sorted recurrent table of S_{2,2}", 1.0, [](Outcome& out) {
        struct Row {
            const char* c;
            int height;
            Sizes sizes;
            int w;
        };
        const std::vector<Row> table = {
            {"3,3;2,2", 10, {2, 2}, 4},       {"3,3;2,1", 9, {2, 2}, 4},        {"3,3;2,0", 8, {2, 2}, 4},
            {"3,3;1,1", 8, {2, 2}, 4},        {"3,3;1,0", 7, {2, 2}, 4},        {"3,3;0,0", 6, {2, 2}, 4},
            {"3,2;2,2", 9, {1, 2, 1, 0}, 5},  {"3,2;2,1", 8, {1, 2, 1, 0}, 5},  {"3,2;2,0", 7, {1, 1, 1, 1}, 6},
            {"3,2;1,1", 7, {1, 2, 1, 0}, 5},  {"3,2;1,0", 6, {1, 1, 1, 1}, 6},  {"3,2;0,0", 5, {1, 0, 1, 2}, 7},
            {"3,1;2,2", 8, {1, 2, 1, 0}, 5},  {"3,1;2,1", 7, {1, 2, 1, 0}, 5},  {"3,1;2,0", 6, {1, 1, 1, 1}, 6},
            {"3,1;1,0", 5, {1, 1, 1, 1}, 6},  {"3,1;1,1", 6, {1, 2, 1, 0}, 5},  {"3,0;2,2", 7, {1, 2, 1, 0}, 5},
            {"3,0;2,1", 6, {1, 2, 1, 0}, 5},  {"3,0;1,1", 5, {1, 2, 1, 0}, 5},  {"2,2;2,2", 8, {0, 2, 2, 0}, 6},
            {"2,2;2,1", 7, {0, 1, 2, 1}, 7},  {"2,2;2,0", 6, {0, 1, 2, 1}, 7},  {"2,1;2,2", 7, {0, 2, 2, 0}, 6},
            {"2,1;2,1", 6, {0, 1, 1, 1, 1, 0}, 8}, {"2,1;2,0", 5, {0, 1, 1, 0, 1, 1}, 9},
            {"2,0;2,2", 6, {0, 2, 1, 0, 1, 0}, 7}, {"2,0;2,1", 5, {0, 1, 1, 1, 1, 0}, 8},
            {"1,1;2,2", 6, {0, 2, 2, 0}, 6},  {"1,0;2,2", 5, {0, 2, 1, 0, 1, 0}, 7}};
        Shape s(2, 2);
        auto rec = enumerate_sorted_recurrent(s);
        out.expect(rec.size() == 30, "expected 30 configurations, got " + std::to_string(rec.size()));
        std::map<Configuration, const Row*> by_config;
        for (const auto& r : table) by_config[cfg(r.c)] = &r;
        out.expect(by_config.size() == 30, "table rows are not distinct");
        for (const auto& c : rec) {
            auto it = by_config.find(c);
            if (it == by_config.end()) {
                out.fail("unexpected configuration " + to_text(c));
                continue;
            }
            auto t = topple_cti(s, c);
            out.expect(height(c) == it->second->height, "height of " + to_text(c));
            out.expect(t.sizes() == it->second->sizes, "topple_cti of " + to_text(c));
            out.expect(wtopple(t) == it->second->w, "wtopple of " + to_text(c));
        }
    });

    criterion(3, "worked examples", 1.0, [](Outcome& out) {
        Shape s53(5, 3);
        auto c = cfg("7,6,5,2,1;5,4,4");
        auto cti = topple_cti(s53, c);
        out.expect(cti.sizes() == Sizes{1, 3, 2, 0, 2, 0}, "CTI sizes of the running example");
        out.expect(cti.rounds.size() == 3 && cti.rounds[0].clique == std::vector<int>{1} &&
                       cti.rounds[0].independent == std::vector<int>{1, 2, 3} &&
                       cti.rounds[1].clique == std::vector<int>{2, 3} &&
                       cti.rounds[2].clique == std::vector<int>{4, 5},
                   "CTI sets of the running example");
        auto itc = topple_itc(s53, c);
        out.expect(itc.sizes() == Sizes{1, 2, 2, 2, 0, 1}, "ITC sizes of the running example");
        out.expect(wtopple(itc) == 14, "wtopple_ITC of the running example");
        out.expect(phi(SchroderWord("UHUDUHHDUDUDD")) == c, "phi of UHUDUHHDUDUDD");
        SchroderWord w("UHUDUHHDUDUDD");
        out.expect(area(w) == 9 && schroder_bounce(w) == 8, "area/bounce of UHUDUHHDUDUDD");
        auto m = mirror(w);
        out.expect(m.str() == "UUDUDUHHDUDHD", "mirror word");
        out.expect(schroder_bounce(m) == 6 && area(m) == 9 && level(s53, c) == 9, "mirror bounce and level");
        out.expect(topple_itc(s53, cfg("7,7,6,5,2;3,3,1")).sizes() == Sizes{0, 2, 2, 2, 1, 1}, "ITC trace figure");
        Shape s54(5, 4);
        auto c4 = cfg("7,6,6,5,4;5,5,4,3");
        out.expect(compress(s54, c4) == cfg("4,4,4,3,3"), "compress");
        out.expect(topple_itc(s54, c4).sizes() == Sizes{2, 3, 2, 2}, "compress figure ITC labels");
        Shape s45(4, 5);
        auto ca = cfg("7,4,2,1;4,4,3,3,1");
        out.expect(phi_inv(s45, ca).str() == "HUHDHUHDUDUHD", "word of the polyomino example");
        auto pa = from_config(s45, ca);
        out.expect(pa == sts("HUHDHUHDUDUHD"), "polyomino from configuration");
        out.expect(area(pa) == 12, "area 12");
        out.expect(cti_bounce(pa).sizes == Sizes{0, 2, 1, 2, 1, 0, 1, 1, 1, 0}, "CTI bounce (a)");
        out.expect(itc_bounce(pa).normalized() == Sizes{2, 1, 2, 1, 0, 1, 1, 1}, "ITC bounce (a)");
        int found = 0;
        for (const auto& x : enumerate_sorted_recurrent(s45)) {
            auto p = from_config(s45, x);
            if (area(p) == 15 && cti_bounce(p).sizes == Sizes{1, 3, 1, 1, 2, 1} &&
                itc_bounce(p).normalized() == Sizes{2, 1, 1, 1, 1, 2, 1, 0})
                ++found;
        }
        out.expect(found == 3, "area 15 polyomino (b) with its bounce sequences");
    });

    criterion(4, "five-way identity n<=5, d<=4", 300.0, [](Outcome& out) {
        check_shapes(out, 5, 4, check_polynomial_identity);
    });

    criterion(5, "q,t symmetry n<=5, d<=4", 10.0, [](Outcome& out) { check_shapes(out, 5, 4, check_qt_symmetry); });

    criterion(6, "ITC image and counts n<=5, d<=4", 60.0, [](Outcome& out) {
        check_shapes(out, 5, 4, check_itc_characterization);
        check_shapes(out, 5, 4, check_counts);
        out.expect(count_itc(2, 2) == 9 && count_itc(2, 2, 1) == 1 && count_itc(2, 2, 2) == 5 &&
                       count_itc(2, 2, 3) == 3,
                   "ITC counts of S_{2,2}");
        for (int n = 1; n <= 5; ++n)
            for (int d = 0; d <= 4; ++d) out.expect(count_itc(n, d) == count_ehkk(n, d), "itc and ehkk totals");
    });

    criterion(7, "polyomino validity on all words n<=4, d<=3", 60.0, [](Outcome& out) {
        check_shapes(out, 4, 3, check_sts_validity);
    });

    criterion(8, "bounce sizes and area formula n<=5, d<=4", 60.0, [](Outcome& out) {
        check_shapes(out, 5, 4, check_polyomino_statistics);
    });

    criterion(9, "cycle lemma n<=4, d<=3", 120.0, [](Outcome& out) {
        check_shapes(out, 4, 3, check_cycle_lemma);
        for (int n = 1; n <= 4; ++n)
            for (int d = 0; d <= 3; ++d)
                out.expect(BigInt(enumerate_quasistable_nonneg(Shape(n, d)).size()) ==
                               oracle::choose(2 * n + d, n) * oracle::choose(n + d, n),
                           "quasi-stable non-negative count");
    });

    criterion(10, "fiber intervals and hexagon shuffles", 60.0, [](Outcome& out) {
        check_shapes(out, 4, 3, check_fiber_interval);
        for (int a = 0; a <= 4; ++a)
            for (int b = 0; b <= 4; ++b)
                for (int c = 0; c <= 4; ++c) {
                    auto e = check_hexagon(a, b, c);
                    if (!e.empty()) out.fail(e);
                }
    });

    criterion(11, "symmetric function evaluation N<=5", 30.0, [](Outcome& out) {
        for (int N = 1; N <= 5; ++N) {
            auto e = check_nabla(N, 5, 1000 + N);
            if (!e.empty()) out.fail(e);
        }
        for (const auto& p : sample_points(1, 5, 3)) {
            Rational lhs = w_weight(Partition({1}), p.q, p.t, p.z);
            out.expect(lhs == 1 + p.z, "N=1 closed form");
        }
    });

    criterion(12, "property suites", 120.0, [](Outcome& out) {
        std::mt19937_64 rng(12);
        for (int n = 1; n <= 4; ++n) {
            for (int d = 0; d <= 3; ++d) {
                Shape s(n, d);
                for (int trial = 0; trial < 200; ++trial) {
                    Configuration c;
                    for (int i = 0; i < n; ++i) c.clique.push_back(static_cast<Grain>(rng() % (3 * (n + d))));
                    for (int i = 0; i < d; ++i) c.independent.push_back(static_cast<Grain>(rng() % (3 * (n + 1))));
                    auto a = stabilize(s, c);
                    auto b = stabilize_random_order(s, c, rng);
                    out.expect(a.final == b.final && a.odometer == b.odometer, "abelian property at " + to_text(c));
                }
                for (int trial = 0; trial < 200; ++trial) {
                    auto part = [&](int len, int spread) {
                        Grain base = static_cast<Grain>(rng() % 16) - 5;
                        std::vector<Grain> v;
                        for (int i = 0; i < len; ++i) v.push_back(base + static_cast<Grain>(rng() % (spread + 1)));
                        std::sort(v.rbegin(), v.rend());
                        return v;
                    };
                    ExtendedConfiguration u{part(n, n + d + 1), part(d, n + 1)};
                    out.expect(identity_check(s, u), "operator identity at " + to_text(u));
                    for (Operator op : {Operator::Ts, Operator::TK, Operator::TI}) {
                        if (d == 0 && op == Operator::TI) continue;
                        out.expect(apply_power(s, op, -1, apply(s, op, u)) == u, "operator inverse at " + to_text(u));
                    }
                    auto w = apply(s, Operator::TW, u);
                    out.expect(weight(s, w) == weight(s, u) - 1 && w.independent == u.independent,
                               "weight law at " + to_text(u));
                }
            }
        }
        check_shapes(out, 5, 4, check_phi_roundtrip);
        check_shapes(out, 5, 4, check_schroder_statistics);
        for (int n = 1; n <= 5; ++n)
            for (int d = 0; d <= 4; ++d)
                for (const auto& w : enumerate_schroder_words(n, d)) {
                    out.expect(mirror(mirror(w)) == w, "mirror involution at " + w.str());
                    int h = schroder_bounce_haglund(w);
                    out.expect(h == schroder_bounce_loehr(w) && h == oracle::bounce(w.str()),
                               "bounce computations at " + w.str());
                }
    });

    std::printf("%d of 12 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
