#pragma once

#include "sandlab/config.hpp"

#include <functional>
#include <string>
#include <vector>

namespace sandlab {

enum class Suite { Bijections, Theorems, CycleLemma, Conjectures, Appendix, All };

Suite parse_suite(std::string_view name);
std::string to_string(Suite s);

struct VerificationReport {
    std::string suite;
    std::string check;
    std::string range;
    bool passed = true;
    bool conjecture = false;
    std::string counterexample;  // empty when passed
    double seconds = 0.0;
};

// Runs every check of the suite on all shapes with 1 <= n <= max_n and
// 0 <= d <= max_d. Reports come back in a fixed order.
std::vector<VerificationReport> run_suite(Suite suite, int max_n, int max_d, unsigned jobs);

// Empty string on success, otherwise a description of the first failure.
using ShapeCheck = std::function<std::string(const Shape&)>;

// Individual per-shape checks, shared with the tests.
std::string check_phi_roundtrip(const Shape& s);
std::string check_sts_validity(const Shape& s);
std::string check_polyomino_construction(const Shape& s);
std::string check_compress(const Shape& s);
std::string check_itc_characterization(const Shape& s);
std::string check_schroder_statistics(const Shape& s);
std::string check_polynomial_identity(const Shape& s);  // five methods
std::string check_polyomino_statistics(const Shape& s);
std::string check_fiber_interval(const Shape& s);
std::string check_cycle_lemma(const Shape& s);
std::string check_cti_itc_equidistribution(const Shape& s);
std::string check_psi_bijection(const Shape& s);
std::string check_counts(const Shape& s);
std::string check_qt_symmetry(const Shape& s);
std::string check_hexagon(int a, int b, int c);
std::string check_nabla(int N, int points, std::uint64_t seed);

}  // namespace sandlab
