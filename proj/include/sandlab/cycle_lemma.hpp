#pragma once

#include "sandlab/bigint.hpp"
#include "sandlab/config.hpp"

#include <string>
#include <vector>

namespace sandlab {

// Grains on the non-sink vertices, possibly negative. The sink holds minus
// the total, so the toppling class keeps total zero.
struct ExtendedConfiguration {
    std::vector<Grain> clique;
    std::vector<Grain> independent;

    Grain sink() const;
    friend bool operator==(const ExtendedConfiguration&, const ExtendedConfiguration&) = default;
    friend auto operator<=>(const ExtendedConfiguration&, const ExtendedConfiguration&) = default;
};

ExtendedConfiguration extend(const Configuration& c);
// Throws PreconditionError if any entry is negative.
Configuration restrict_nonnegative(const ExtendedConfiguration& u);
std::string to_text(const ExtendedConfiguration& u);

bool is_sorted(const ExtendedConfiguration& u);
bool is_nonnegative(const ExtendedConfiguration& u);
// spread(K) <= n+d+1 and spread(I) <= n+1
bool is_compact(const Shape& s, const ExtendedConfiguration& u);
// max K <= n+d and max I <= n
bool is_quasistable(const Shape& s, const ExtendedConfiguration& u);

enum class Operator { Ts, TK, TI, TsInv, TKInv, TIInv, TW, TWInv };
using OperatorWord = std::vector<Operator>;  // applied left to right

std::string to_string(Operator op);

// Closed forms on sorted compact configurations. T_W = T_K^(n+1) T_I^d.
// T_I and its inverse need d >= 1.
ExtendedConfiguration apply(const Shape& s, Operator op, const ExtendedConfiguration& u);
ExtendedConfiguration apply(const Shape& s, const OperatorWord& word, const ExtendedConfiguration& u);
ExtendedConfiguration apply_power(const Shape& s, Operator op, std::int64_t times, const ExtendedConfiguration& u);

// T_s, T_K, T_I from their definition: topple the sink / the largest
// clique vertex / the largest independent vertex, then sort.
ExtendedConfiguration apply_by_toppling(const Shape& s, Operator op, const ExtendedConfiguration& u);

// T_s T_K^n T_I^d u == u and the three pairs commute at u.
bool identity_check(const Shape& s, const ExtendedConfiguration& u);

// sum_k floor(u_k / (n+d+1)) over the clique part
std::int64_t weight(const Shape& s, const ExtendedConfiguration& u);

// Sorted, quasi-stable, non-negative; lexicographically decreasing.
std::vector<ExtendedConfiguration> enumerate_quasistable_nonneg(const Shape& s);
BigInt quasistable_nonneg_count(int n, int d);

// The sorted recurrent configuration in the toppling-and-permuting class of u.
Configuration recurrent_representative(const Shape& s, const ExtendedConfiguration& u);

// The n+1 non-negative quasi-stable members of the class of a sorted
// recurrent v, starting with v itself.
std::vector<ExtendedConfiguration> class_members(const Shape& s, const Configuration& v);

}  // namespace sandlab
