#include "sandlab/core_asm.hpp"

#include "sandlab/error.hpp"

#include <deque>
#include <functional>
#include <numeric>

namespace sandlab {

namespace {

void add_checked(Grain& g, Grain delta) {
    if (__builtin_add_overflow(g, delta, &g)) throw OverflowError("grain count overflow");
}

// Topples without the stability precondition.
void fire(const Shape& s, Configuration& c, Vertex v) {
    switch (v.part) {
        case Part::Sink:
            for (Grain& g : c.clique) add_checked(g, 1);
            for (Grain& g : c.independent) add_checked(g, 1);
            break;
        case Part::Clique:
            for (int i = 0; i < s.n; ++i) add_checked(c.clique[i], i == v.index ? -s.clique_degree() : 1);
            for (Grain& g : c.independent) add_checked(g, 1);
            break;
        case Part::Independent:
            add_checked(c.independent[v.index], -s.independent_degree());
            for (Grain& g : c.clique) add_checked(g, 1);
            break;
    }
}

Grain degree(const Shape& s, Vertex v) {
    switch (v.part) {
        case Part::Sink: return s.sink_degree();
        case Part::Clique: return s.clique_degree();
        case Part::Independent: return s.independent_degree();
    }
    return 0;
}

Grain grains(const Configuration& c, Vertex v) {
    return v.part == Part::Clique ? c.clique[v.index] : c.independent[v.index];
}

bool unstable(const Shape& s, const Configuration& c, Vertex v) { return grains(c, v) >= degree(s, v); }

void check_vertex(const Shape& s, Vertex v) {
    bool ok = v.part == Part::Sink || (v.part == Part::Clique && v.index >= 0 && v.index < s.n) ||
              (v.part == Part::Independent && v.index >= 0 && v.index < s.d);
    if (!ok) throw PreconditionError("vertex " + to_string(v) + " is not in the graph");
}

std::int64_t iteration_bound(const Shape& s, const Configuration& c) {
    std::int64_t total = 0;
    for (Grain g : c.clique) total += g;
    for (Grain g : c.independent) total += g;
    std::int64_t v = s.n + s.d + 1;
    return (total + 1) * v * v;
}

void count(Odometer& o, Vertex v) {
    if (v.part == Part::Clique)
        ++o.clique[v.index];
    else if (v.part == Part::Independent)
        ++o.independent[v.index];
    else
        ++o.sink;
}

void require_stabilizable(const Shape& s, const Configuration& c) {
    require_fits(s, c);
    if (!is_nonnegative(c)) throw PreconditionError("stabilize needs non-negative grains: " + to_display(c));
}

}  // namespace

Configuration topple(const Shape& s, const Configuration& c, Vertex v) {
    require_fits(s, c);
    check_vertex(s, v);
    if (v.part != Part::Sink && !unstable(s, c, v))
        throw PreconditionError("vertex " + to_string(v) + " is stable in " + to_display(c));
    Configuration out = c;
    fire(s, out, v);
    return out;
}

std::int64_t Odometer::total() const {
    return sink + std::accumulate(clique.begin(), clique.end(), std::int64_t{0}) +
           std::accumulate(independent.begin(), independent.end(), std::int64_t{0});
}

StabilizationTrace stabilize(const Shape& s, Configuration c) {
    require_stabilizable(s, c);
    StabilizationTrace out;
    out.odometer.clique.assign(s.n, 0);
    out.odometer.independent.assign(s.d, 0);

    std::deque<Vertex> queue;
    std::vector<char> queued_k(s.n, 0), queued_i(s.d, 0);
    auto push_if_unstable = [&](Vertex v) {
        char& flag = v.part == Part::Clique ? queued_k[v.index] : queued_i[v.index];
        if (!flag && unstable(s, c, v)) {
            flag = 1;
            queue.push_back(v);
        }
    };
    for (int i = 0; i < s.n; ++i) push_if_unstable(Vertex::clique(i));
    for (int i = 0; i < s.d; ++i) push_if_unstable(Vertex::independent(i));

    const std::int64_t bound = iteration_bound(s, c);
    std::int64_t steps = 0;
    while (!queue.empty()) {
        Vertex v = queue.front();
        queue.pop_front();
        (v.part == Part::Clique ? queued_k[v.index] : queued_i[v.index]) = 0;
        if (!unstable(s, c, v)) continue;
        if (++steps > bound) throw InternalError("stabilization exceeded its iteration bound");
        fire(s, c, v);
        count(out.odometer, v);
        push_if_unstable(v);
        for (int i = 0; i < s.n; ++i) push_if_unstable(Vertex::clique(i));
        if (v.part == Part::Clique)
            for (int i = 0; i < s.d; ++i) push_if_unstable(Vertex::independent(i));
    }
    out.final = std::move(c);
    return out;
}

StabilizationTrace stabilize_random_order(const Shape& s, Configuration c, std::mt19937_64& rng) {
    require_stabilizable(s, c);
    StabilizationTrace out;
    out.odometer.clique.assign(s.n, 0);
    out.odometer.independent.assign(s.d, 0);
    const std::int64_t bound = iteration_bound(s, c);
    std::vector<Vertex> ready;
    for (std::int64_t steps = 0;; ++steps) {
        ready.clear();
        for (int i = 0; i < s.n; ++i)
            if (unstable(s, c, Vertex::clique(i))) ready.push_back(Vertex::clique(i));
        for (int i = 0; i < s.d; ++i)
            if (unstable(s, c, Vertex::independent(i))) ready.push_back(Vertex::independent(i));
        if (ready.empty()) break;
        if (steps > bound) throw InternalError("stabilization exceeded its iteration bound");
        std::uniform_int_distribution<std::size_t> pick(0, ready.size() - 1);
        Vertex v = ready[pick(rng)];
        fire(s, c, v);
        count(out.odometer, v);
    }
    out.final = std::move(c);
    return out;
}

BurningResult burn(const Shape& s, const Configuration& c) {
    require_fits(s, c);
    if (!is_nonnegative(c) || !is_stable(s, c))
        throw PreconditionError("burning test needs a stable configuration: " + to_display(c));
    BurningResult r;
    Configuration work = c;
    fire(s, work, Vertex::sink());
    r.order.push_back(Vertex::sink());
    std::vector<char> burnt_k(s.n, 0), burnt_i(s.d, 0);
    bool progress = true;
    while (progress) {
        progress = false;
        for (int i = 0; i < s.n; ++i) {
            if (!burnt_k[i] && work.clique[i] >= s.clique_degree()) {
                fire(s, work, Vertex::clique(i));
                burnt_k[i] = 1;
                r.order.push_back(Vertex::clique(i));
                progress = true;
            }
        }
        for (int i = 0; i < s.d; ++i) {
            if (!burnt_i[i] && work.independent[i] >= s.independent_degree()) {
                fire(s, work, Vertex::independent(i));
                burnt_i[i] = 1;
                r.order.push_back(Vertex::independent(i));
                progress = true;
            }
        }
    }
    r.recurrent = r.order.size() == static_cast<std::size_t>(s.n + s.d + 1);
    if (r.recurrent && work != c)
        throw InternalError("burning every vertex did not return to " + to_display(c));
    return r;
}

bool is_recurrent(const Shape& s, const Configuration& c) { return burn(s, c).recurrent; }

std::int64_t height(const Configuration& c) {
    return std::accumulate(c.clique.begin(), c.clique.end(), std::int64_t{0}) +
           std::accumulate(c.independent.begin(), c.independent.end(), std::int64_t{0});
}

std::int64_t minimal_recurrent_height(const Shape& s) {
    std::int64_t nd = s.n + s.d;
    return nd * (nd - 1) / 2 - static_cast<std::int64_t>(s.d) * (s.d - 1) / 2;
}

std::int64_t level(const Shape& s, const Configuration& c) {
    require_fits(s, c);
    return height(c) - minimal_recurrent_height(s);
}

namespace {

// Weakly decreasing sequences of the given length with entries in [0, top],
// lexicographically decreasing.
void for_each_decreasing(int length, Grain top, const std::function<void(const std::vector<Grain>&)>& f) {
    std::vector<Grain> seq(length);
    std::function<void(int, Grain)> rec = [&](int pos, Grain cap) {
        if (pos == length) {
            f(seq);
            return;
        }
        for (Grain v = cap; v >= 0; --v) {
            seq[pos] = v;
            rec(pos + 1, v);
        }
    };
    rec(0, top);
}

}  // namespace

std::vector<Configuration> enumerate_sorted_stable(const Shape& s) {
    std::vector<std::vector<Grain>> indep;
    for_each_decreasing(s.d, s.independent_degree() - 1, [&](const std::vector<Grain>& b) { indep.push_back(b); });
    std::vector<Configuration> out;
    for_each_decreasing(s.n, s.clique_degree() - 1, [&](const std::vector<Grain>& a) {
        for (const auto& b : indep) out.push_back(Configuration{a, b});
    });
    return out;
}

std::vector<Configuration> enumerate_sorted_recurrent(const Shape& s) {
    std::vector<Configuration> out;
    for (auto& c : enumerate_sorted_stable(s))
        if (is_recurrent(s, c)) out.push_back(std::move(c));
    return out;
}

BigInt sorted_recurrent_count(int n, int d) {
    Shape s(n, d);
    BigInt first = binomial(2 * s.n + s.d, s.n) * binomial(s.n + s.d, s.n) / (s.n + 1);
    BigInt second = binomial(2 * s.n + 1, s.n) * binomial(2 * s.n + s.d, s.d) / (2 * s.n + 1);
    if (first != second) throw InternalError("sorted recurrent count closed forms disagree");
    return first;
}

}  // namespace sandlab
