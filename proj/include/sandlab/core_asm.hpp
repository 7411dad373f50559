#pragma once

#include "sandlab/bigint.hpp"
#include "sandlab/config.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace sandlab {

// Topples v once. Non-sink vertices must be unstable.
Configuration topple(const Shape& s, const Configuration& c, Vertex v);

struct Odometer {
    std::int64_t sink = 0;
    std::vector<std::int64_t> clique;
    std::vector<std::int64_t> independent;

    std::int64_t total() const;
    friend bool operator==(const Odometer&, const Odometer&) = default;
};

struct StabilizationTrace {
    Configuration final;
    Odometer odometer;
};

// Work-queue stabilization. The sink never topples here.
StabilizationTrace stabilize(const Shape& s, Configuration c);

// Same, but picks the next unstable vertex uniformly at random.
StabilizationTrace stabilize_random_order(const Shape& s, Configuration c, std::mt19937_64& rng);

struct BurningResult {
    bool recurrent = false;
    // Sink first, then the non-sink vertices in the order they burned.
    std::vector<Vertex> order;
};

// Dhar's burning test on a stable configuration.
BurningResult burn(const Shape& s, const Configuration& c);
bool is_recurrent(const Shape& s, const Configuration& c);

std::int64_t height(const Configuration& c);
// height(c) - (C(n+d,2) - C(d,2))
std::int64_t level(const Shape& s, const Configuration& c);
std::int64_t minimal_recurrent_height(const Shape& s);

// All weakly decreasing stable configurations, lexicographically decreasing.
std::vector<Configuration> enumerate_sorted_stable(const Shape& s);

// Sorted recurrent configurations in canonical order
// (lexicographically decreasing on the clique part, then the independent part).
std::vector<Configuration> enumerate_sorted_recurrent(const Shape& s);

// C(2n+d,n) C(n+d,n) / (n+1); both closed forms are evaluated and compared.
BigInt sorted_recurrent_count(int n, int d);

}  // namespace sandlab
