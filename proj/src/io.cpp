#include "sandlab/io.hpp"

#include "sandlab/error.hpp"

#include <algorithm>
#include <limits>

namespace sandlab {

Json to_json(const Shape& s, const Configuration& c) {
    return Json{{"n", s.n}, {"d", s.d}, {"clique", c.clique}, {"independent", c.independent}};
}

Configuration configuration_from_json(const Json& j, Shape* shape) {
    try {
        Shape s(j.at("n").get<int>(), j.at("d").get<int>());
        Configuration c{j.at("clique").get<std::vector<Grain>>(), j.at("independent").get<std::vector<Grain>>()};
        require_fits(s, c);
        if (shape) *shape = s;
        return c;
    } catch (const Json::exception& e) {
        throw ParseError(std::string("bad configuration JSON: ") + e.what());
    }
}

Json to_json(const ToppleTrace& t) {
    Json rounds = Json::array();
    for (const auto& r : t.rounds) rounds.push_back(Json{{"clique", r.clique}, {"independent", r.independent}});
    return Json{{"mode", to_string(t.mode)}, {"rounds", rounds}};
}

ToppleTrace trace_from_json(const Json& j) {
    try {
        ToppleTrace t;
        t.mode = parse_topple_mode(j.at("mode").get<std::string>());
        for (const auto& r : j.at("rounds"))
            t.rounds.push_back({r.at("clique").get<std::vector<int>>(), r.at("independent").get<std::vector<int>>()});
        return t;
    } catch (const Json::exception& e) {
        throw ParseError(std::string("bad trace JSON: ") + e.what());
    }
}

Json to_json(const ItcSequence& seq) { return Json{{"b", seq.b}, {"a", seq.a}}; }

Json to_json(const SawtoothPolyomino& p) {
    return Json{{"dim", {p.width(), p.height()}}, {"upper", p.upper}, {"lower", p.lower}};
}

SawtoothPolyomino polyomino_from_json(const Json& j) {
    try {
        auto dim = j.at("dim").get<std::vector<int>>();
        if (dim.size() != 2 || dim[0] < 2 || dim[1] < 0) throw ParseError("bad polyomino dimensions");
        return SawtoothPolyomino{dim[0] - 1, dim[1], j.at("upper").get<std::string>(), j.at("lower").get<std::string>()};
    } catch (const Json::exception& e) {
        throw ParseError(std::string("bad polyomino JSON: ") + e.what());
    }
}

Json to_json(const QtPolynomial& p) {
    Json terms = Json::array();
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const BigInt& c = it->second;
        Json coeff;
        if (c <= std::numeric_limits<std::int64_t>::max() && c >= std::numeric_limits<std::int64_t>::min())
            coeff = c.convert_to<std::int64_t>();
        else
            coeff = c.str();
        terms.push_back(Json{{"q", it->first.first}, {"t", it->first.second}, {"c", coeff}});
    }
    return Json{{"terms", terms}};
}

QtPolynomial polynomial_from_json(const Json& j) {
    try {
        QtPolynomial p;
        for (const auto& t : j.at("terms")) {
            const auto& c = t.at("c");
            BigInt coeff = c.is_string() ? BigInt(c.get<std::string>()) : BigInt(c.get<std::int64_t>());
            p.add_term(t.at("q").get<int>(), t.at("t").get<int>(), coeff);
        }
        return p;
    } catch (const Json::exception& e) {
        throw ParseError(std::string("bad polynomial JSON: ") + e.what());
    }
}

std::string to_latex(const QtPolynomial& p) {
    using Term = std::pair<QtPolynomial::Exponents, BigInt>;
    std::vector<Term> terms(p.terms().begin(), p.terms().end());
    auto key = [](const Term& t) {
        int a = t.first.first, b = t.first.second;
        return std::make_tuple(a + b, std::max(a, b), a >= b ? 1 : 0);
    };
    std::stable_sort(terms.begin(), terms.end(), [&](const Term& x, const Term& y) { return key(x) > key(y); });
    if (terms.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        auto [e, c] = terms[i];
        bool negative = c < 0;
        BigInt mag = negative ? BigInt(-c) : c;
        if (i == 0) out += negative ? "-" : "";
        else out += negative ? " - " : " + ";
        std::string mono;
        if (e.first == 1) mono += "q";
        else if (e.first > 1) mono += "q^{" + std::to_string(e.first) + "}";
        if (e.second == 1) mono += "t";
        else if (e.second > 1) mono += "t^{" + std::to_string(e.second) + "}";
        if (mag != 1 || mono.empty()) out += mag.str();
        out += mono;
    }
    return out;
}

Json class_report(const std::vector<std::vector<ExtendedConfiguration>>& classes) {
    Json out = Json::array();
    for (const auto& cls : classes) {
        Json inner = Json::array();
        for (const auto& u : cls) inner.push_back(to_text(u));
        out.push_back(inner);
    }
    return out;
}

}  // namespace sandlab
