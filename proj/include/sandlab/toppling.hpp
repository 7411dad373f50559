#pragma once

#include "sandlab/bigint.hpp"
#include "sandlab/config.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace sandlab {

enum class ToppleMode { CTI, ITC };

std::string to_string(ToppleMode m);
ToppleMode parse_topple_mode(std::string_view s);

// One round of parallel toppling. Indices are 1-based.
// CTI rounds are (P_i, Q_i): clique first. ITC rounds are (Q'_i, P'_i).
struct ToppleRound {
    std::vector<int> clique;
    std::vector<int> independent;

    friend bool operator==(const ToppleRound&, const ToppleRound&) = default;
};

struct ToppleTrace {
    ToppleMode mode = ToppleMode::CTI;
    std::vector<ToppleRound> rounds;

    // CTI: (|P_1|, |Q_1|, |P_2|, ...). ITC: (|Q'_1|, |P'_1|, |Q'_2|, ...).
    std::vector<int> sizes() const;

    friend bool operator==(const ToppleTrace&, const ToppleTrace&) = default;
};

// Topples the sink of a sorted recurrent configuration and then alternates
// parallel topplings of the clique and independent parts.
ToppleTrace topple_cti(const Shape& s, const Configuration& c);
ToppleTrace topple_itc(const Shape& s, const Configuration& c);
ToppleTrace topple_trace(const Shape& s, const Configuration& c, ToppleMode mode);

// Replays a trace from c; returns the configuration after the last round.
Configuration replay(const Shape& s, const Configuration& c, const ToppleTrace& t);

// sum_i i * (size of round i); sizes are read in pairs, one pair per round.
std::int64_t wtopple(const ToppleTrace& t);
std::int64_t wtopple(const std::vector<int>& sizes);

struct ItcSequence {
    std::vector<int> b;  // independent vertices toppled per round
    std::vector<int> a;  // clique vertices toppled per round

    int length() const { return static_cast<int>(a.size()); }
    friend bool operator==(const ItcSequence&, const ItcSequence&) = default;
    friend auto operator<=>(const ItcSequence&, const ItcSequence&) = default;
};

std::string to_string(const ItcSequence& seq);

ItcSequence itc_sequence_of(const ToppleTrace& t);

// Pairs [b, a] of weak compositions of d and n with a_1..a_{k-1} > 0 and
// b_k + a_k > 0, plus [(d), (n)]. Ordered by length, then lexicographically.
std::vector<ItcSequence> enumerate_itc_sequences(int n, int d);
bool is_itc_sequence(int n, int d, const ItcSequence& seq);

// The lowest-height sorted recurrent configuration with the given ITC sequence.
Configuration canonical_config(const Shape& s, const ItcSequence& seq);

BigInt count_itc(int n, int d, int k);
BigInt count_itc(int n, int d);
BigInt count_ehkk(int n, int d, int k);
BigInt count_ehkk(int n, int d);

}  // namespace sandlab
