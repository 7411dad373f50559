#include "sandlab/config.hpp"

#include "sandlab/error.hpp"

#include <algorithm>
#include <charconv>
#include <functional>

namespace sandlab {

Shape::Shape(int n_, int d_) : n(n_), d(d_) {
    if (n < 1) throw DomainError("n must be at least 1, got " + std::to_string(n));
    if (d < 0) throw DomainError("d must be non-negative, got " + std::to_string(d));
}

std::string to_string(const Vertex& v) {
    switch (v.part) {
        case Part::Sink: return "s";
        case Part::Clique: return "v" + std::to_string(v.index + 1);
        case Part::Independent: return "w" + std::to_string(v.index + 1);
    }
    return "?";
}

bool fits(const Shape& s, const Configuration& c) {
    return c.clique.size() == static_cast<std::size_t>(s.n) &&
           c.independent.size() == static_cast<std::size_t>(s.d);
}

void require_fits(const Shape& s, const Configuration& c) {
    if (!fits(s, c)) {
        throw PreconditionError("configuration " + to_display(c) + " does not match S_{" +
                                std::to_string(s.n) + "," + std::to_string(s.d) + "}");
    }
}

bool is_sorted(const Configuration& c) {
    return std::is_sorted(c.clique.begin(), c.clique.end(), std::greater<>{}) &&
           std::is_sorted(c.independent.begin(), c.independent.end(), std::greater<>{});
}

bool is_nonnegative(const Configuration& c) {
    auto nonneg = [](Grain g) { return g >= 0; };
    return std::all_of(c.clique.begin(), c.clique.end(), nonneg) &&
           std::all_of(c.independent.begin(), c.independent.end(), nonneg);
}

bool is_stable(const Shape& s, const Configuration& c) {
    require_fits(s, c);
    for (Grain g : c.clique)
        if (g >= s.clique_degree()) return false;
    for (Grain g : c.independent)
        if (g >= s.independent_degree()) return false;
    return true;
}

Configuration sorted(Configuration c) {
    std::sort(c.clique.begin(), c.clique.end(), std::greater<>{});
    std::sort(c.independent.begin(), c.independent.end(), std::greater<>{});
    return c;
}

namespace {

std::vector<Grain> parse_list(std::string_view text, std::string_view whole) {
    std::vector<Grain> out;
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    if (text.empty()) return out;
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = text.find(',', pos);
        std::string_view tok = trim(text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos));
        Grain v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size()) {
            throw ParseError("bad integer '" + std::string(tok) + "' in configuration '" + std::string(whole) + "'");
        }
        out.push_back(v);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return out;
}

std::string join(const std::vector<Grain>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(v[i]);
    }
    return s;
}

}  // namespace

Configuration parse_configuration(std::string_view text) {
    std::string_view body = text;
    if (!body.empty() && body.front() == '(' && body.back() == ')') body = body.substr(1, body.size() - 2);
    Configuration c;
    std::size_t semi = body.find(';');
    if (semi == std::string_view::npos) {
        c.clique = parse_list(body, text);
    } else {
        if (body.find(';', semi + 1) != std::string_view::npos)
            throw ParseError("more than one ';' in configuration '" + std::string(text) + "'");
        c.clique = parse_list(body.substr(0, semi), text);
        c.independent = parse_list(body.substr(semi + 1), text);
    }
    if (c.clique.empty()) throw ParseError("empty clique part in configuration '" + std::string(text) + "'");
    return c;
}

std::string to_text(const Configuration& c) { return join(c.clique) + ";" + join(c.independent); }

std::string to_display(const Configuration& c) { return "(" + to_text(c) + ")"; }

}  // namespace sandlab
