#pragma once

#include "sandlab/bigint.hpp"
#include "sandlab/error.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace sandlab {

// Integer partition with parts in weakly decreasing order. Cells are
// (row, column), both 0-based, row i holding parts()[i] cells.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const;
    int length() const { return static_cast<int>(parts_.size()); }
    Partition conjugate() const;

    int arm(int row, int col) const;
    int leg(int row, int col) const;
    static int coarm(int, int col) { return col; }
    static int coleg(int row, int) { return row; }
    // sum_i i * parts[i]
    std::int64_t n_statistic() const;

    std::string to_string() const;
    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

// Partitions of N in reverse lexicographic order.
std::vector<Partition> partitions_of(int N);

class DegeneratePoint : public DomainError {
public:
    using DomainError::DomainError;
};

// T_mu prod_c (z + q^a' t^l') M Pi_mu B_mu / w_mu with exact arithmetic.
// Throws DegeneratePoint when w_mu vanishes.
Rational w_weight(const Partition& mu, const Rational& q, const Rational& t, const Rational& z);

struct SymmetryPoint {
    Rational q;
    Rational t;
    Rational z;
};

struct SymmetryEvaluation {
    SymmetryPoint point;
    Rational weight_sum;    // sum over mu of W
    Rational schroder_sum;  // sum over d of z^d qt_schroder(N-d, d)
    Rational swapped_sum;   // weight sum at (t, q, z)
    bool ok = false;
};

// Deterministic non-degenerate rational points.
std::vector<SymmetryPoint> sample_points(int N, int count, std::uint64_t seed);

std::vector<SymmetryEvaluation> nabla_symmetry_check(int N, const std::vector<SymmetryPoint>& points);

}  // namespace sandlab
