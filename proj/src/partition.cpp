#include "sandlab/partition.hpp"

#include "sandlab/qt_poly.hpp"

#include <algorithm>
#include <functional>
#include <random>

namespace sandlab {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
        if (p <= 0) throw DomainError("partition parts must be positive");
    if (!std::is_sorted(parts_.begin(), parts_.end(), std::greater<>{}))
        throw DomainError("partition parts must be weakly decreasing");
}

int Partition::size() const {
    int s = 0;
    for (int p : parts_) s += p;
    return s;
}

Partition Partition::conjugate() const {
    std::vector<int> c(parts_.empty() ? 0 : parts_[0], 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) ++c[j];
    return Partition(c);
}

int Partition::arm(int row, int col) const { return parts_.at(row) - 1 - col; }

int Partition::leg(int row, int col) const {
    int l = 0;
    for (int i = row + 1; i < length() && parts_[i] > col; ++i) ++l;
    return l;
}

std::int64_t Partition::n_statistic() const {
    std::int64_t s = 0;
    for (int i = 0; i < length(); ++i) s += static_cast<std::int64_t>(i) * parts_[i];
    return s;
}

std::string Partition::to_string() const {
    std::string s = "(";
    for (int i = 0; i < length(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    return s + ")";
}

std::vector<Partition> partitions_of(int N) {
    if (N < 0) throw DomainError("partitions of a negative integer");
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int left, int cap) {
        if (left == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(left, cap); p >= 1; --p) {
            cur.push_back(p);
            rec(left - p, p);
            cur.pop_back();
        }
    };
    rec(N, N);
    return out;
}

namespace {

Rational power(const Rational& x, std::int64_t e) {
    Rational r = 1;
    for (std::int64_t i = 0; i < e; ++i) r *= x;
    return r;
}

}  // namespace

Rational w_weight(const Partition& mu, const Rational& q, const Rational& t, const Rational& z) {
    Partition conj = mu.conjugate();
    Rational numer = power(t, mu.n_statistic()) * power(q, conj.n_statistic()) * (1 - q) * (1 - t);
    Rational b_mu = 0;
    Rational denom = 1;
    for (int i = 0; i < mu.length(); ++i) {
        for (int j = 0; j < mu.parts()[i]; ++j) {
            Rational mono = power(q, Partition::coarm(i, j)) * power(t, Partition::coleg(i, j));
            numer *= z + mono;
            b_mu += mono;
            if (i != 0 || j != 0) numer *= 1 - mono;
            int a = mu.arm(i, j), l = mu.leg(i, j);
            denom *= (power(q, a) - power(t, l + 1)) * (power(t, l) - power(q, a + 1));
        }
    }
    if (denom == 0) throw DegeneratePoint("w_mu vanishes for " + mu.to_string() + " at q=" + sandlab::to_string(q) + ", t=" + sandlab::to_string(t));
    return numer * b_mu / denom;
}

std::vector<SymmetryPoint> sample_points(int N, int count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
    auto draw = [&]() { return Rational(num(rng), den(rng)); };
    auto parts = partitions_of(N);
    std::vector<SymmetryPoint> out;
    while (static_cast<int>(out.size()) < count) {
        SymmetryPoint p{draw(), draw(), draw()};
        try {
            for (const auto& mu : parts) {
                w_weight(mu, p.q, p.t, p.z);
                w_weight(mu, p.t, p.q, p.z);
            }
        } catch (const DegeneratePoint&) {
            continue;
        }
        out.push_back(p);
    }
    return out;
}

std::vector<SymmetryEvaluation> nabla_symmetry_check(int N, const std::vector<SymmetryPoint>& points) {
    if (N < 1) throw DomainError("nabla symmetry check needs N >= 1");
    auto parts = partitions_of(N);
    std::vector<QtPolynomial> schroder;
    for (int d = 0; d <= N; ++d) schroder.push_back(qt_schroder(N - d, d));
    std::vector<SymmetryEvaluation> out;
    for (const auto& p : points) {
        SymmetryEvaluation e{p, 0, 0, 0, false};
        for (const auto& mu : parts) {
            e.weight_sum += w_weight(mu, p.q, p.t, p.z);
            e.swapped_sum += w_weight(mu, p.t, p.q, p.z);
        }
        Rational zd = 1;
        for (int d = 0; d <= N; ++d) {
            e.schroder_sum += zd * schroder[d].evaluate(p.q, p.t);
            zd *= p.z;
        }
        e.ok = e.weight_sum == e.schroder_sum && e.weight_sum == e.swapped_sum;
        out.push_back(std::move(e));
    }
    return out;
}

}  // namespace sandlab
