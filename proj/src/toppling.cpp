#include "sandlab/toppling.hpp"

#include "sandlab/core_asm.hpp"
#include "sandlab/error.hpp"

#include <functional>
#include <iostream>

namespace sandlab {

std::string to_string(ToppleMode m) { return m == ToppleMode::CTI ? "CTI" : "ITC"; }

ToppleMode parse_topple_mode(std::string_view s) {
    if (s == "CTI" || s == "cti") return ToppleMode::CTI;
    if (s == "ITC" || s == "itc") return ToppleMode::ITC;
    throw ParseError("unknown toppling mode '" + std::string(s) + "'");
}

std::vector<int> ToppleTrace::sizes() const {
    std::vector<int> out;
    out.reserve(2 * rounds.size());
    for (const auto& r : rounds) {
        int k = static_cast<int>(r.clique.size());
        int i = static_cast<int>(r.independent.size());
        if (mode == ToppleMode::CTI) {
            out.push_back(k);
            out.push_back(i);
        } else {
            out.push_back(i);
            out.push_back(k);
        }
    }
    return out;
}

namespace {

void require_sorted_recurrent(const Shape& s, const Configuration& c) {
    require_fits(s, c);
    if (!is_sorted(c)) throw PreconditionError("configuration is not sorted: " + to_display(c));
    if (!is_nonnegative(c) || !is_stable(s, c) || !is_recurrent(s, c))
        throw PreconditionError("configuration is not recurrent: " + to_display(c));
}

}  // namespace

ToppleTrace topple_trace(const Shape& s, const Configuration& c, ToppleMode mode) {
    require_sorted_recurrent(s, c);
    ToppleTrace trace{mode, {}};
    Configuration work = c;
    for (auto& g : work.clique) ++g;
    for (auto& g : work.independent) ++g;
    std::vector<char> done_k(s.n, 0), done_i(s.d, 0);

    auto fire_clique = [&](std::vector<int>& out) {
        for (int i = 0; i < s.n; ++i)
            if (work.clique[i] >= s.clique_degree()) out.push_back(i);
        for (int i : out) {
            if (done_k[i]++) throw InternalError("clique vertex toppled twice");
            for (int j = 0; j < s.n; ++j) work.clique[j] += (j == i ? -s.clique_degree() : 1);
            for (auto& g : work.independent) ++g;
        }
        for (int& i : out) ++i;
    };
    auto fire_independent = [&](std::vector<int>& out) {
        for (int i = 0; i < s.d; ++i)
            if (work.independent[i] >= s.independent_degree()) out.push_back(i);
        for (int i : out) {
            if (done_i[i]++) throw InternalError("independent vertex toppled twice");
            work.independent[i] -= s.independent_degree();
            for (auto& g : work.clique) ++g;
        }
        for (int& i : out) ++i;
    };

    while (true) {
        ToppleRound round;
        if (mode == ToppleMode::CTI) {
            fire_clique(round.clique);
            fire_independent(round.independent);
        } else {
            fire_independent(round.independent);
            fire_clique(round.clique);
        }
        if (round.clique.empty() && round.independent.empty()) break;
        trace.rounds.push_back(std::move(round));
    }
    if (work != c) throw InternalError("toppling rounds did not return to " + to_display(c));
    return trace;
}

ToppleTrace topple_cti(const Shape& s, const Configuration& c) { return topple_trace(s, c, ToppleMode::CTI); }
ToppleTrace topple_itc(const Shape& s, const Configuration& c) { return topple_trace(s, c, ToppleMode::ITC); }

Configuration replay(const Shape& s, const Configuration& c, const ToppleTrace& t) {
    Configuration work = topple(s, c, Vertex::sink());
    auto fire_part = [&](const std::vector<int>& idx, Part part) {
        for (int i : idx) work = topple(s, work, Vertex{part, i - 1});
    };
    for (const auto& r : t.rounds) {
        if (t.mode == ToppleMode::CTI) {
            fire_part(r.clique, Part::Clique);
            fire_part(r.independent, Part::Independent);
        } else {
            fire_part(r.independent, Part::Independent);
            fire_part(r.clique, Part::Clique);
        }
    }
    return work;
}

std::int64_t wtopple(const std::vector<int>& sizes) {
    std::int64_t w = 0;
    for (std::size_t j = 0; j < sizes.size(); ++j) w += static_cast<std::int64_t>(j / 2 + 1) * sizes[j];
    return w;
}

std::int64_t wtopple(const ToppleTrace& t) { return wtopple(t.sizes()); }

std::string to_string(const ItcSequence& seq) {
    auto tuple = [](const std::vector<int>& v) {
        std::string s = "(";
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(v[i]);
        }
        return s + ")";
    };
    return "[" + tuple(seq.b) + "," + tuple(seq.a) + "]";
}

ItcSequence itc_sequence_of(const ToppleTrace& t) {
    if (t.mode != ToppleMode::ITC) throw PreconditionError("ITC sequence requested from a CTI trace");
    ItcSequence seq;
    for (const auto& r : t.rounds) {
        seq.b.push_back(static_cast<int>(r.independent.size()));
        seq.a.push_back(static_cast<int>(r.clique.size()));
    }
    return seq;
}

bool is_itc_sequence(int n, int d, const ItcSequence& seq) {
    int k = seq.length();
    if (k < 1 || seq.b.size() != seq.a.size()) return false;
    int sa = 0, sb = 0;
    for (int i = 0; i < k; ++i) {
        if (seq.a[i] < 0 || seq.b[i] < 0) return false;
        if (i + 1 < k && seq.a[i] == 0) return false;
        sa += seq.a[i];
        sb += seq.b[i];
    }
    return sa == n && sb == d && seq.a[k - 1] + seq.b[k - 1] > 0;
}

namespace {

void weak_compositions(int total, int parts, const std::function<void(const std::vector<int>&)>& f) {
    std::vector<int> v(parts, 0);
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == parts - 1) {
            v[pos] = left;
            f(v);
            return;
        }
        for (int x = 0; x <= left; ++x) {
            v[pos] = x;
            rec(pos + 1, left - x);
        }
    };
    if (parts > 0) rec(0, total);
}

}  // namespace

std::vector<ItcSequence> enumerate_itc_sequences(int n, int d) {
    Shape s(n, d);
    std::vector<ItcSequence> out;
    for (int k = 1; k <= s.n + 1; ++k) {
        std::vector<std::vector<int>> as;
        weak_compositions(s.n, k, [&](const std::vector<int>& a) {
            for (int i = 0; i + 1 < k; ++i)
                if (a[i] == 0) return;
            as.push_back(a);
        });
        weak_compositions(s.d, k, [&](const std::vector<int>& b) {
            for (const auto& a : as)
                if (b[k - 1] + a[k - 1] > 0) out.push_back(ItcSequence{b, a});
        });
    }
    return out;
}

Configuration canonical_config(const Shape& s, const ItcSequence& seq) {
    if (!is_itc_sequence(s.n, s.d, seq))
        throw PreconditionError(to_string(seq) + " is not an ITC sequence for S_{" + std::to_string(s.n) + "," +
                                std::to_string(s.d) + "}");
    Configuration c;
    int prefix_ab = 1;  // a_0 + b_0 + ... with a_0 = 1, b_0 = 0
    int prefix_a = 1;
    for (int j = 0; j < seq.length(); ++j) {
        for (int x = 0; x < seq.a[j]; ++x) c.clique.push_back(s.n + s.d - prefix_ab - seq.b[j]);
        for (int x = 0; x < seq.b[j]; ++x) c.independent.push_back(s.n + 1 - prefix_a);
        prefix_ab += seq.a[j] + seq.b[j];
        prefix_a += seq.a[j];
    }
    bool ok = fits(s, c) && is_sorted(c) && is_nonnegative(c) && is_stable(s, c) && is_recurrent(s, c) &&
              itc_sequence_of(topple_itc(s, c)) == seq;
    if (ok) return c;

    if (s.n + s.d > 9) throw InternalError("canonical configuration formula failed for " + to_string(seq));
    std::clog << "sandpile_lab: canonical formula failed for " << to_string(seq) << ", searching the fiber\n";
    const Configuration* best = nullptr;
    auto all = enumerate_sorted_recurrent(s);
    for (const auto& r : all) {
        if (itc_sequence_of(topple_itc(s, r)) != seq) continue;
        if (!best || height(r) < height(*best)) best = &r;
    }
    if (!best) throw InternalError("empty fiber for " + to_string(seq));
    return *best;
}

BigInt count_itc(int n, int d, int k) {
    Shape s(n, d);
    if (k < 1) return 0;
    if (k == 1) return 1;
    return binomial(s.d + k - 2, s.d - 1) * binomial(s.n - 1, k - 2) + binomial(s.d + k - 1, s.d) * binomial(s.n - 1, k - 1);
}

BigInt count_itc(int n, int d) {
    Shape s(n, d);
    BigInt closed = 0;
    for (int k = 1; k <= s.n; ++k) closed += binomial(s.d + k, s.d) * binomial(s.n - 1, k - 1);
    BigInt by_length = 0;
    for (int k = 1; k <= s.n + 1; ++k) by_length += count_itc(n, d, k);
    if (closed != by_length) throw InternalError("ITC count formulas disagree");
    return closed;
}

BigInt count_ehkk(int n, int d, int k) {
    Shape s(n, d);
    return binomial(s.n - 1, k - 1) * binomial(s.d + k, s.d);
}

BigInt count_ehkk(int n, int d) {
    Shape s(n, d);
    BigInt total = 0;
    for (int k = 1; k <= s.n; ++k) total += count_ehkk(n, d, k);
    return total;
}

}  // namespace sandlab
