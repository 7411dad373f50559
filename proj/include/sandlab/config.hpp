#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace sandlab {

using Grain = std::int64_t;

// The split graph S_{n,d}: a clique on n vertices plus the sink, and an
// independent set of d vertices joined to every clique vertex and the sink.
struct Shape {
    int n = 1;
    int d = 0;

    Shape() = default;
    Shape(int n_, int d_);

    int clique_degree() const { return n + d; }
    int independent_degree() const { return n + 1; }
    int sink_degree() const { return n + d; }
    int vertex_count() const { return n + d; }

    friend bool operator==(const Shape&, const Shape&) = default;
};

// Grains on the non-sink vertices. The sink carries no grains.
struct Configuration {
    std::vector<Grain> clique;
    std::vector<Grain> independent;

    friend bool operator==(const Configuration&, const Configuration&) = default;
    friend auto operator<=>(const Configuration&, const Configuration&) = default;
};

enum class Part : std::uint8_t { Sink, Clique, Independent };

struct Vertex {
    Part part = Part::Sink;
    int index = 0;  // 0-based within its part

    static Vertex sink() { return {Part::Sink, 0}; }
    static Vertex clique(int i) { return {Part::Clique, i}; }
    static Vertex independent(int i) { return {Part::Independent, i}; }

    friend bool operator==(const Vertex&, const Vertex&) = default;
};

std::string to_string(const Vertex& v);

bool fits(const Shape& s, const Configuration& c);
bool is_sorted(const Configuration& c);
bool is_nonnegative(const Configuration& c);
bool is_stable(const Shape& s, const Configuration& c);

// Throws PreconditionError unless c has the part sizes of s.
void require_fits(const Shape& s, const Configuration& c);

Configuration sorted(Configuration c);

// "a1,...,an;b1,...,bd". The ';' may be omitted when d = 0.
Configuration parse_configuration(std::string_view text);
std::string to_text(const Configuration& c);
// "(a1,...,an;b1,...,bd)"
std::string to_display(const Configuration& c);

}  // namespace sandlab
