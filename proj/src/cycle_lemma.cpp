#include "sandlab/cycle_lemma.hpp"

#include "sandlab/core_asm.hpp"
#include "sandlab/error.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace sandlab {

Grain ExtendedConfiguration::sink() const {
    return -(std::accumulate(clique.begin(), clique.end(), Grain{0}) +
             std::accumulate(independent.begin(), independent.end(), Grain{0}));
}

ExtendedConfiguration extend(const Configuration& c) { return {c.clique, c.independent}; }

Configuration restrict_nonnegative(const ExtendedConfiguration& u) {
    if (!is_nonnegative(u)) throw PreconditionError("configuration has negative entries: " + to_text(u));
    return {u.clique, u.independent};
}

std::string to_text(const ExtendedConfiguration& u) { return to_text(Configuration{u.clique, u.independent}); }

bool is_sorted(const ExtendedConfiguration& u) { return is_sorted(Configuration{u.clique, u.independent}); }

bool is_nonnegative(const ExtendedConfiguration& u) { return is_nonnegative(Configuration{u.clique, u.independent}); }

namespace {

Grain spread(const std::vector<Grain>& v) {
    if (v.empty()) return 0;
    auto [lo, hi] = std::minmax_element(v.begin(), v.end());
    return *hi - *lo;
}

void require_shape(const Shape& s, const ExtendedConfiguration& u) {
    if (u.clique.size() != static_cast<std::size_t>(s.n) || u.independent.size() != static_cast<std::size_t>(s.d))
        throw PreconditionError("configuration " + to_text(u) + " does not match the graph");
}

Grain floor_div(Grain a, Grain b) {
    Grain q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

void rotate_forward(std::vector<Grain>& v) {
    if (!v.empty()) std::rotate(v.begin(), v.begin() + 1, v.end());
}

void rotate_backward(std::vector<Grain>& v) {
    if (!v.empty()) std::rotate(v.rbegin(), v.rbegin() + 1, v.rend());
}

void add_all(std::vector<Grain>& v, Grain x) {
    for (Grain& g : v) g += x;
}

ExtendedConfiguration closed_form(const Shape& s, Operator op, ExtendedConfiguration u) {
    const Grain kd = s.n + s.d + 1, id = s.n + 1;
    switch (op) {
        case Operator::Ts:
            add_all(u.clique, 1);
            add_all(u.independent, 1);
            break;
        case Operator::TsInv:
            add_all(u.clique, -1);
            add_all(u.independent, -1);
            break;
        case Operator::TK:
            u.clique[0] -= kd;
            add_all(u.clique, 1);
            rotate_forward(u.clique);
            add_all(u.independent, 1);
            break;
        case Operator::TKInv:
            rotate_backward(u.clique);
            u.clique[0] += kd;
            add_all(u.clique, -1);
            add_all(u.independent, -1);
            break;
        case Operator::TI:
            add_all(u.clique, 1);
            u.independent[0] -= id;
            rotate_forward(u.independent);
            break;
        case Operator::TIInv:
            add_all(u.clique, -1);
            rotate_backward(u.independent);
            u.independent[0] += id;
            break;
        default: throw InternalError("closed_form called on a composite operator");
    }
    return u;
}

Operator inverse(Operator op) {
    switch (op) {
        case Operator::Ts: return Operator::TsInv;
        case Operator::TK: return Operator::TKInv;
        case Operator::TI: return Operator::TIInv;
        case Operator::TsInv: return Operator::Ts;
        case Operator::TKInv: return Operator::TK;
        case Operator::TIInv: return Operator::TI;
        case Operator::TW: return Operator::TWInv;
        case Operator::TWInv: return Operator::TW;
    }
    return op;
}

}  // namespace

bool is_compact(const Shape& s, const ExtendedConfiguration& u) {
    require_shape(s, u);
    return spread(u.clique) <= s.n + s.d + 1 && spread(u.independent) <= s.n + 1;
}

bool is_quasistable(const Shape& s, const ExtendedConfiguration& u) {
    require_shape(s, u);
    for (Grain g : u.clique)
        if (g > s.n + s.d) return false;
    for (Grain g : u.independent)
        if (g > s.n) return false;
    return true;
}

std::string to_string(Operator op) {
    switch (op) {
        case Operator::Ts: return "T_s";
        case Operator::TK: return "T_K";
        case Operator::TI: return "T_I";
        case Operator::TsInv: return "T_s^-1";
        case Operator::TKInv: return "T_K^-1";
        case Operator::TIInv: return "T_I^-1";
        case Operator::TW: return "T_W";
        case Operator::TWInv: return "T_W^-1";
    }
    return "?";
}

ExtendedConfiguration apply_by_toppling(const Shape& s, Operator op, const ExtendedConfiguration& u) {
    require_shape(s, u);
    if (!is_sorted(u)) throw PreconditionError("operators act on sorted configurations: " + to_text(u));
    ExtendedConfiguration r = u;
    switch (op) {
        case Operator::Ts:
            add_all(r.clique, 1);
            add_all(r.independent, 1);
            break;
        case Operator::TK:
            for (int i = 0; i < s.n; ++i) r.clique[i] += i == 0 ? -(s.n + s.d) : 1;
            add_all(r.independent, 1);
            break;
        case Operator::TI:
            if (s.d == 0) throw DomainError("T_I is undefined without independent vertices");
            r.independent[0] -= s.n + 1;
            add_all(r.clique, 1);
            break;
        default: throw PreconditionError("only T_s, T_K and T_I are defined by toppling");
    }
    std::sort(r.clique.begin(), r.clique.end(), std::greater<>{});
    std::sort(r.independent.begin(), r.independent.end(), std::greater<>{});
    return r;
}

ExtendedConfiguration apply(const Shape& s, Operator op, const ExtendedConfiguration& u) {
    require_shape(s, u);
    if (!is_sorted(u) || !is_compact(s, u))
        throw PreconditionError("operators act on sorted compact configurations: " + to_text(u));
    if (s.d == 0 && (op == Operator::TI || op == Operator::TIInv))
        throw DomainError("T_I is undefined without independent vertices");
    if (op == Operator::TW || op == Operator::TWInv) {
        Operator k = op == Operator::TW ? Operator::TK : Operator::TKInv;
        Operator i = op == Operator::TW ? Operator::TI : Operator::TIInv;
        ExtendedConfiguration r = apply_power(s, k, s.n + 1, u);
        return s.d == 0 ? r : apply_power(s, i, s.d, r);
    }
    ExtendedConfiguration r = closed_form(s, op, u);
    bool forward = op == Operator::Ts || op == Operator::TK || op == Operator::TI;
    bool consistent = forward ? r == apply_by_toppling(s, op, u) : apply_by_toppling(s, inverse(op), r) == u;
    if (!consistent) throw InternalError(to_string(op) + " closed form disagrees with toppling at " + to_text(u));
    return r;
}

ExtendedConfiguration apply(const Shape& s, const OperatorWord& word, const ExtendedConfiguration& u) {
    ExtendedConfiguration r = u;
    for (Operator op : word) r = apply(s, op, r);
    return r;
}

ExtendedConfiguration apply_power(const Shape& s, Operator op, std::int64_t times, const ExtendedConfiguration& u) {
    if (times < 0) return apply_power(s, inverse(op), -times, u);
    ExtendedConfiguration r = u;
    for (std::int64_t i = 0; i < times; ++i) r = apply(s, op, r);
    return r;
}

bool identity_check(const Shape& s, const ExtendedConfiguration& u) {
    ExtendedConfiguration r = apply(s, Operator::Ts, u);
    r = apply_power(s, Operator::TK, s.n, r);
    if (s.d > 0) r = apply_power(s, Operator::TI, s.d, r);
    if (r != u) return false;
    auto commute = [&](Operator a, Operator b) { return apply(s, {a, b}, u) == apply(s, {b, a}, u); };
    if (!commute(Operator::Ts, Operator::TK)) return false;
    if (s.d > 0 && (!commute(Operator::Ts, Operator::TI) || !commute(Operator::TK, Operator::TI))) return false;
    return true;
}

std::int64_t weight(const Shape& s, const ExtendedConfiguration& u) {
    require_shape(s, u);
    std::int64_t w = 0;
    for (Grain g : u.clique) w += floor_div(g, s.n + s.d + 1);
    return w;
}

std::vector<ExtendedConfiguration> enumerate_quasistable_nonneg(const Shape& s) {
    auto decreasing = [](int length, Grain top) {
        std::vector<std::vector<Grain>> out;
        std::vector<Grain> cur(length);
        std::function<void(int, Grain)> rec = [&](int pos, Grain cap) {
            if (pos == length) {
                out.push_back(cur);
                return;
            }
            for (Grain v = cap; v >= 0; --v) {
                cur[pos] = v;
                rec(pos + 1, v);
            }
        };
        rec(0, top);
        return out;
    };
    auto ks = decreasing(s.n, s.n + s.d);
    auto is = decreasing(s.d, s.n);
    std::vector<ExtendedConfiguration> out;
    out.reserve(ks.size() * is.size());
    for (const auto& k : ks)
        for (const auto& i : is) out.push_back({k, i});
    return out;
}

BigInt quasistable_nonneg_count(int n, int d) {
    Shape s(n, d);
    return binomial(2 * s.n + s.d, s.n) * binomial(s.n + s.d, s.n);
}

Configuration recurrent_representative(const Shape& s, const ExtendedConfiguration& u) {
    require_shape(s, u);
    Configuration c{u.clique, u.independent};
    Grain low = 0;
    for (Grain g : c.clique) low = std::min(low, g);
    for (Grain g : c.independent) low = std::min(low, g);
    for (Grain& g : c.clique) g -= low;
    for (Grain& g : c.independent) g -= low;
    const int bound = 4 * (s.n + s.d + 1) * (s.n + s.d + 1) + 16;
    for (int iter = 0; iter < bound; ++iter) {
        c = sorted(stabilize(s, std::move(c)).final);
        if (is_recurrent(s, c)) return c;
        c = topple(s, c, Vertex::sink());
    }
    throw InternalError("no recurrent configuration reached from " + to_text(u));
}

std::vector<ExtendedConfiguration> class_members(const Shape& s, const Configuration& v) {
    require_fits(s, v);
    if (!is_sorted(v) || !is_nonnegative(v) || !is_stable(s, v) || !is_recurrent(s, v))
        throw PreconditionError("class_members needs a sorted recurrent configuration: " + to_display(v));
    auto settle_independent = [&](ExtendedConfiguration u) {
        while (s.d > 0 && u.independent[0] > s.n) u = apply(s, Operator::TI, u);
        return u;
    };
    std::vector<ExtendedConfiguration> raw{extend(v)};
    ExtendedConfiguration u = settle_independent(apply(s, Operator::Ts, extend(v)));
    raw.push_back(u);
    for (int i = 2; i <= s.n; ++i) {
        u = settle_independent(apply(s, Operator::TK, u));
        raw.push_back(u);
    }

    std::vector<ExtendedConfiguration> out;
    std::set<Grain> residues;
    for (const auto& r : raw) {
        ExtendedConfiguration w = apply_power(s, Operator::TW, weight(s, r), r);
        if (!is_nonnegative(w) || !is_quasistable(s, w))
            throw InternalError("class member " + to_text(w) + " is not quasi-stable and non-negative");
        const Grain m = s.n + s.d + 1;
        residues.insert(w.sink() - floor_div(w.sink(), m) * m);
        out.push_back(std::move(w));
    }
    if (residues.size() != out.size())
        throw InternalError("class members of " + to_display(v) + " repeat a sink residue");
    return out;
}

}  // namespace sandlab
