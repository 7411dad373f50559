#include "sandlab/verify.hpp"

#include "sandlab/core_asm.hpp"
#include "sandlab/cycle_lemma.hpp"
#include "sandlab/error.hpp"
#include "sandlab/parallel.hpp"
#include "sandlab/partition.hpp"
#include "sandlab/polyomino.hpp"
#include "sandlab/qt_poly.hpp"
#include "sandlab/schroder.hpp"
#include "sandlab/toppling.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>

namespace sandlab {

Suite parse_suite(std::string_view name) {
    if (name == "bijections") return Suite::Bijections;
    if (name == "theorems") return Suite::Theorems;
    if (name == "cycle-lemma") return Suite::CycleLemma;
    if (name == "conjectures") return Suite::Conjectures;
    if (name == "appendix") return Suite::Appendix;
    if (name == "all") return Suite::All;
    throw ParseError("unknown suite '" + std::string(name) + "'");
}

std::string to_string(Suite s) {
    switch (s) {
        case Suite::Bijections: return "bijections";
        case Suite::Theorems: return "theorems";
        case Suite::CycleLemma: return "cycle-lemma";
        case Suite::Conjectures: return "conjectures";
        case Suite::Appendix: return "appendix";
        case Suite::All: return "all";
    }
    return "?";
}

namespace {

std::string shape_name(const Shape& s) { return "S_{" + std::to_string(s.n) + "," + std::to_string(s.d) + "}"; }

std::string seq_text(const std::vector<int>& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
    return out + ")";
}

SchroderWord haglund_word(const Shape& s, const Configuration& c) { return mirror(phi_inv(s, c)); }

std::string polynomial_mismatch(const Shape& s, const std::vector<std::pair<std::string, QtPolynomial>>& polys) {
    for (std::size_t i = 1; i < polys.size(); ++i) {
        if (polys[i].second != polys[0].second)
            return shape_name(s) + ": " + polys[0].first + " != " + polys[i].first;
    }
    return {};
}

}  // namespace

std::string check_phi_roundtrip(const Shape& s) {
    auto direct = enumerate_sorted_recurrent(s);
    auto via = enumerate_sorted_recurrent_via_words(s);
    if (direct != via) return shape_name(s) + ": Dhar filter and phi image differ";
    if (BigInt(direct.size()) != sorted_recurrent_count(s.n, s.d)) return shape_name(s) + ": count differs from closed form";
    for (const auto& c : direct)
        if (phi(phi_inv(s, c)) != c) return shape_name(s) + ": phi(phi_inv(c)) != c at " + to_display(c);
    for (const auto& w : enumerate_schroder_words(s.n, s.d)) {
        if (phi_inv(s, phi(w)) != w) return shape_name(s) + ": phi_inv(phi(w)) != w at " + w.str();
        if (mirror(mirror(w)) != w) return shape_name(s) + ": mirror is not an involution at " + w.str();
    }
    return {};
}

std::string check_sts_validity(const Shape& s) {
    for (const auto& w : enumerate_words(s.n, s.d))
        if (is_valid(sts(w)) != is_schroder(w)) return shape_name(s) + ": polyomino validity differs at " + w;
    return {};
}

std::string check_polyomino_construction(const Shape& s) {
    for (const auto& c : enumerate_sorted_recurrent(s))
        if (from_config(s, c) != sts(phi_inv(s, c).str())) return shape_name(s) + ": f(c) != STS(phi_inv(c)) at " + to_display(c);
    return {};
}

std::string check_compress(const Shape& s) {
    for (const auto& c : enumerate_sorted_recurrent(s)) {
        // c'_i + 1 = D letters after the i-th U of phi_inv(c)
        const std::string& x = phi_inv(s, c).str();
        Configuration expected;
        int d_after = 0;
        for (auto it = x.rbegin(); it != x.rend(); ++it) {
            if (*it == 'D') ++d_after;
            if (*it == 'U') expected.clique.push_back(d_after - 1);
        }
        std::reverse(expected.clique.begin(), expected.clique.end());
        Configuration got = compress(s, c);
        if (got != expected) return shape_name(s) + ": compress disagrees at " + to_display(c);
        if (!is_recurrent(Shape(s.n, 0), got)) return shape_name(s) + ": compress is not recurrent at " + to_display(c);
    }
    return {};
}

std::string check_itc_characterization(const Shape& s) {
    std::set<ItcSequence> image;
    for (const auto& c : enumerate_sorted_recurrent(s)) image.insert(itc_sequence_of(topple_itc(s, c)));
    auto listed = enumerate_itc_sequences(s.n, s.d);
    std::set<ItcSequence> expected(listed.begin(), listed.end());
    if (expected.size() != listed.size()) return shape_name(s) + ": duplicate ITC sequences listed";
    if (image != expected) {
        for (const auto& q : image)
            if (!expected.count(q)) return shape_name(s) + ": unexpected toppling sequence " + to_string(q);
        for (const auto& q : expected)
            if (!image.count(q)) return shape_name(s) + ": sequence never realised " + to_string(q);
    }
    if (BigInt(listed.size()) != count_itc(s.n, s.d)) return shape_name(s) + ": ITC count formula differs";
    std::map<int, int> by_length;
    for (const auto& q : listed) ++by_length[q.length()];
    for (int k = 1; k <= s.n + 1; ++k)
        if (BigInt(by_length[k]) != count_itc(s.n, s.d, k))
            return shape_name(s) + ": ITC count of length " + std::to_string(k) + " differs";
    return {};
}

std::string check_schroder_statistics(const Shape& s) {
    for (const auto& c : enumerate_sorted_recurrent(s)) {
        SchroderWord w = haglund_word(s, c);
        auto itc = topple_itc(s, c);
        if (area(w) != level(s, c)) return shape_name(s) + ": area != level at " + to_display(c);
        int bounce = schroder_bounce(w);
        if (bounce != wtopple(itc) - (s.n + s.d)) return shape_name(s) + ": bounce != wtopple - (n+d) at " + to_display(c);
        if (schroder_bounce_antidiagonal(w).bounce != bounce)
            return shape_name(s) + ": anti-diagonal bounce differs at " + to_display(c);
        // Peak(i) = (sum_{j>i} (p'_j + q'_j), p'_i + sum_{j>i} (p'_j + q'_j))
        auto sizes = itc.sizes();
        int k = static_cast<int>(sizes.size() / 2);
        std::vector<Point> expected;
        for (int i = 0; i < k; ++i) {
            int p = sizes[2 * i + 1];
            if (p == 0) continue;
            int tail = 0;
            for (int j = i + 1; j < k; ++j) tail += sizes[2 * j] + sizes[2 * j + 1];
            expected.push_back({tail, p + tail});
        }
        if (schroder_peaks(w) != expected) return shape_name(s) + ": peaks differ from toppling rounds at " + to_display(c);
    }
    return {};
}

std::string check_polynomial_identity(const Shape& s) {
    return polynomial_mismatch(s, {{"f_cti", f_cti(s.n, s.d)},
                                   {"f_itc", f_itc(s.n, s.d)},
                                   {"qt_schroder", qt_schroder(s.n, s.d)},
                                   {"egge_sum", egge_sum(s.n, s.d)},
                                   {"itc_sum", itc_sum(s.n, s.d)}});
}

namespace {

std::string check_proven_identity(const Shape& s) {
    return polynomial_mismatch(s, {{"f_itc", f_itc(s.n, s.d)},
                                   {"qt_schroder", qt_schroder(s.n, s.d)},
                                   {"egge_sum", egge_sum(s.n, s.d)},
                                   {"itc_sum", itc_sum(s.n, s.d)}});
}

}  // namespace

std::string check_polyomino_statistics(const Shape& s) {
    const std::int64_t offset = minimal_recurrent_height(s) - (s.n + s.d);
    for (const auto& c : enumerate_sorted_recurrent(s)) {
        auto p = from_config(s, c);
        if (area(p) + offset != height(c)) return shape_name(s) + ": area formula fails at " + to_display(c);
        if (cti_bounce(p).sizes != topple_cti(s, c).sizes())
            return shape_name(s) + ": CTI bounce " + seq_text(cti_bounce(p).sizes) + " != toppling at " + to_display(c);
        if (itc_bounce(p).normalized() != strip_zero_pairs(topple_itc(s, c).sizes()))
            return shape_name(s) + ": ITC bounce " + seq_text(itc_bounce(p).normalized()) + " != toppling at " + to_display(c);
    }
    return {};
}

std::string check_fiber_interval(const Shape& s) {
    std::map<ItcSequence, std::set<SchroderWord>> fibers;
    for (const auto& c : enumerate_sorted_recurrent(s)) fibers[itc_sequence_of(topple_itc(s, c))].insert(haglund_word(s, c));
    auto words = enumerate_schroder_words(s.n, s.d);
    for (const auto& [seq, fiber] : fibers) {
        ExtremalWords ew = extremal_words(seq);
        std::set<SchroderWord> interval;
        for (const auto& w : words)
            if (triangle_leq(ew.lower, w) && triangle_leq(w, ew.upper)) interval.insert(w);
        if (interval != fiber) return shape_name(s) + ": fiber of " + to_string(seq) + " is not the interval";
        if (canonical_config(s, seq) != phi(mirror(ew.lower)))
            return shape_name(s) + ": canonical configuration is not the lower word for " + to_string(seq);
    }
    return {};
}

std::string check_cycle_lemma(const Shape& s) {
    auto all = enumerate_quasistable_nonneg(s);
    if (BigInt(all.size()) != quasistable_nonneg_count(s.n, s.d)) return shape_name(s) + ": quasi-stable count differs";
    std::set<ExtendedConfiguration> seen;
    for (const auto& v : enumerate_sorted_recurrent(s)) {
        auto members = class_members(s, v);
        if (static_cast<int>(members.size()) != s.n + 1) return shape_name(s) + ": class size differs at " + to_display(v);
        int recurrent = 0;
        for (const auto& u : members) {
            if (!seen.insert(u).second) return shape_name(s) + ": classes overlap at " + to_text(u);
            if (recurrent_representative(s, u) != v) return shape_name(s) + ": representative of " + to_text(u) + " is not " + to_display(v);
            if (!identity_check(s, u)) return shape_name(s) + ": operator identity fails at " + to_text(u);
            Configuration c = restrict_nonnegative(u);
            if (is_stable(s, c) && is_recurrent(s, c)) ++recurrent;
        }
        if (recurrent != 1) return shape_name(s) + ": class of " + to_display(v) + " has " + std::to_string(recurrent) + " recurrent members";
    }
    if (seen.size() != all.size()) return shape_name(s) + ": classes do not cover the quasi-stable configurations";
    return {};
}

std::string check_cti_itc_equidistribution(const Shape& s) {
    return polynomial_mismatch(s, {{"f_cti", f_cti(s.n, s.d)}, {"f_itc", f_itc(s.n, s.d)}});
}

std::string check_psi_bijection(const Shape& s) {
    if (s.n + s.d > 6) return {};
    using Key = std::pair<std::int64_t, std::int64_t>;
    std::vector<std::pair<Key, Configuration>> cti, itc;
    for (const auto& c : enumerate_sorted_recurrent(s)) {
        cti.push_back({{height(c), wtopple(topple_cti(s, c))}, c});
        itc.push_back({{height(c), wtopple(topple_itc(s, c))}, c});
    }
    std::stable_sort(cti.begin(), cti.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::stable_sort(itc.begin(), itc.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t i = 0; i < cti.size(); ++i)
        if (cti[i].first != itc[i].first) return shape_name(s) + ": no bistatistic-preserving bijection near " + to_display(cti[i].second);
    return {};
}

std::string check_counts(const Shape& s) {
    if (count_itc(s.n, s.d) != count_ehkk(s.n, s.d)) return shape_name(s) + ": ITC and composition-pair counts differ";
    if (BigInt(enumerate_itc_sequences(s.n, s.d).size()) != count_itc(s.n, s.d)) return shape_name(s) + ": ITC enumeration count differs";
    return {};
}

std::string check_qt_symmetry(const Shape& s) {
    if (!is_qt_symmetric(qt_schroder(s.n, s.d))) return shape_name(s) + ": Schroder polynomial is not q,t-symmetric";
    if (!is_qt_symmetric(f_itc(s.n, s.d))) return shape_name(s) + ": ITC polynomial is not q,t-symmetric";
    return {};
}

std::string check_hexagon(int a, int b, int c) {
    std::string tag = "(a,b,c)=(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
    if (hexagon_shuffle_gf(a, b, c) != q_multinomial(a, b, c)) return tag + ": shuffle generating function differs";
    std::string w = std::string(a, 'D') + std::string(b, 'H') + std::string(c, 'U');
    std::sort(w.begin(), w.end());
    do {
        if (hexagon_area(w) != inversions(w)) return tag + ": area differs from inversions at " + w;
    } while (std::next_permutation(w.begin(), w.end()));
    return {};
}

std::string check_nabla(int N, int points, std::uint64_t seed) {
    for (const auto& e : nabla_symmetry_check(N, sample_points(N, points, seed))) {
        if (!e.ok)
            return "N=" + std::to_string(N) + ": identity fails at q=" + to_string(e.point.q) + ", t=" + to_string(e.point.t) +
                   ", z=" + to_string(e.point.z);
    }
    return {};
}

namespace {

struct CheckSpec {
    Suite suite;
    std::string name;
    ShapeCheck per_shape;                 // run on every shape when set
    std::function<std::string()> global;  // otherwise run once
    bool conjecture = false;
};

}  // namespace

std::vector<VerificationReport> run_suite(Suite suite, int max_n, int max_d, unsigned jobs) {
    if (max_n < 1 || max_d < 0) throw DomainError("verification needs max_n >= 1 and max_d >= 0");
    std::vector<Shape> shapes;
    for (int n = 1; n <= max_n; ++n)
        for (int d = 0; d <= max_d; ++d) shapes.emplace_back(n, d);
    const std::string shape_range = "1<=n<=" + std::to_string(max_n) + ", 0<=d<=" + std::to_string(max_d);

    std::vector<CheckSpec> specs = {
        {Suite::Bijections, "phi-roundtrip", check_phi_roundtrip, {}},
        {Suite::Bijections, "polyomino-validity", check_sts_validity, {}},
        {Suite::Bijections, "polyomino-construction", check_polyomino_construction, {}},
        {Suite::Bijections, "compress", check_compress, {}},
        {Suite::Theorems, "itc-characterization", check_itc_characterization, {}},
        {Suite::Theorems, "schroder-statistics", check_schroder_statistics, {}},
        {Suite::Theorems, "polynomial-identity", check_proven_identity, {}},
        {Suite::Theorems, "polyomino-statistics", check_polyomino_statistics, {}},
        {Suite::Theorems, "fiber-interval", check_fiber_interval, {}},
        {Suite::Theorems, "qt-symmetry", check_qt_symmetry, {}},
        {Suite::CycleLemma, "cycle-lemma", check_cycle_lemma, {}},
        {Suite::Conjectures, "cti-itc-equidistribution", check_cti_itc_equidistribution, {}, true},
        {Suite::Conjectures, "psi-bijection", check_psi_bijection, {}, true},
        {Suite::Appendix, "sequence-counts", check_counts, {}},
        {Suite::Appendix, "hexagon", {}, [&]() {
             for (int a = 0; a <= max_n; ++a)
                 for (int b = 0; b <= max_d; ++b)
                     for (int c = 0; c <= max_n; ++c)
                         if (auto r = check_hexagon(a, b, c); !r.empty()) return r;
             return std::string();
         }},
        {Suite::Appendix, "nabla-symmetry", {}, [&]() {
             for (int N = 1; N <= max_n; ++N)
                 if (auto r = check_nabla(N, 5, 20240601u + N); !r.empty()) return r;
             return std::string();
         }},
    };

    std::vector<VerificationReport> out;
    for (const auto& spec : specs) {
        if (suite != Suite::All && spec.suite != suite) continue;
        VerificationReport rep;
        rep.suite = to_string(spec.suite);
        rep.check = spec.name;
        rep.conjecture = spec.conjecture;
        auto start = std::chrono::steady_clock::now();
        if (spec.per_shape) {
            rep.range = shape_range;
            auto results = parallel_map<std::string>(shapes.size(), jobs, [&](std::size_t i) { return spec.per_shape(shapes[i]); });
            for (const auto& r : results) {
                if (!r.empty()) {
                    rep.counterexample = r;
                    break;
                }
            }
        } else {
            rep.range = spec.name == "hexagon" ? "a,c<=" + std::to_string(max_n) + ", b<=" + std::to_string(max_d)
                                               : "1<=N<=" + std::to_string(max_n);
            rep.counterexample = spec.global();
        }
        rep.passed = rep.counterexample.empty();
        rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        out.push_back(std::move(rep));
    }
    return out;
}

}  // namespace sandlab
