#pragma once

#include "sandlab/config.hpp"
#include "sandlab/cycle_lemma.hpp"
#include "sandlab/polyomino.hpp"
#include "sandlab/qt_poly.hpp"
#include "sandlab/toppling.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace sandlab {

using Json = nlohmann::ordered_json;

// {"n":..,"d":..,"clique":[..],"independent":[..]}
Json to_json(const Shape& s, const Configuration& c);
Configuration configuration_from_json(const Json& j, Shape* shape = nullptr);

// {"mode":"CTI","rounds":[{"clique":[1],"independent":[1,2,3]},...]}
Json to_json(const ToppleTrace& t);
ToppleTrace trace_from_json(const Json& j);

Json to_json(const ItcSequence& seq);

// {"dim":[n+1,d],"upper":"NS..","lower":"WS.."}
Json to_json(const SawtoothPolyomino& p);
SawtoothPolyomino polyomino_from_json(const Json& j);

// {"terms":[{"q":5,"t":0,"c":1},...]} sorted by (q,t) descending.
// Coefficients that do not fit in 64 bits are written as strings.
Json to_json(const QtPolynomial& p);
QtPolynomial polynomial_from_json(const Json& j);

// Terms by total degree, then by the larger exponent, q-heavy before t-heavy.
std::string to_latex(const QtPolynomial& p);

// One inner array of configuration texts per class.
Json class_report(const std::vector<std::vector<ExtendedConfiguration>>& classes);

}  // namespace sandlab
