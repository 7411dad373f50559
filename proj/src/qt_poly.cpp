#include "sandlab/qt_poly.hpp"

#include "sandlab/core_asm.hpp"
#include "sandlab/error.hpp"

#include <functional>

namespace sandlab {

QPoly::QPoly(BigInt constant) {
    if (constant != 0) coeffs_.push_back(std::move(constant));
}

QPoly QPoly::monomial(int exponent, BigInt coeff) {
    if (exponent < 0) throw DomainError("negative exponent");
    QPoly p;
    if (coeff != 0) {
        p.coeffs_.assign(exponent + 1, 0);
        p.coeffs_[exponent] = std::move(coeff);
    }
    return p;
}

const BigInt& QPoly::operator[](int e) const {
    static const BigInt zero = 0;
    return e >= 0 && e < static_cast<int>(coeffs_.size()) ? coeffs_[e] : zero;
}

BigInt QPoly::at_one() const {
    BigInt s = 0;
    for (const auto& c : coeffs_) s += c;
    return s;
}

Rational QPoly::evaluate(const Rational& q) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + Rational(*it);
    return acc;
}

void QPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

QPoly& QPoly::operator+=(const QPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

QPoly& QPoly::operator*=(const QPoly& o) {
    if (is_zero() || o.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<BigInt> r(coeffs_.size() + o.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) r[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    coeffs_ = std::move(r);
    trim();
    return *this;
}

QtPolynomial QtPolynomial::monomial(int qe, int te, BigInt coeff) {
    QtPolynomial p;
    p.add_term(qe, te, coeff);
    return p;
}

QtPolynomial QtPolynomial::from_q(const QPoly& p, int te) {
    QtPolynomial r;
    for (int e = 0; e <= p.degree(); ++e) r.add_term(e, te, p[e]);
    return r;
}

void QtPolynomial::add_term(int qe, int te, const BigInt& coeff) {
    if (qe < 0 || te < 0) throw DomainError("negative exponent");
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace({qe, te}, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

BigInt QtPolynomial::coefficient(int qe, int te) const {
    auto it = terms_.find({qe, te});
    return it == terms_.end() ? BigInt(0) : it->second;
}

BigInt QtPolynomial::at_one() const {
    BigInt s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
}

Rational QtPolynomial::evaluate(const Rational& q, const Rational& t) const {
    Rational acc = 0;
    for (const auto& [e, c] : terms_) {
        Rational m = Rational(c);
        for (int i = 0; i < e.first; ++i) m *= q;
        for (int i = 0; i < e.second; ++i) m *= t;
        acc += m;
    }
    return acc;
}

QtPolynomial QtPolynomial::swapped() const {
    QtPolynomial r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(Exponents{e.second, e.first}, c);
    return r;
}

QtPolynomial& QtPolynomial::operator+=(const QtPolynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, c);
    return *this;
}

QtPolynomial& QtPolynomial::operator*=(const QtPolynomial& o) {
    QtPolynomial r;
    for (const auto& [a, x] : terms_)
        for (const auto& [b, y] : o.terms_) r.add_term(a.first + b.first, a.second + b.second, x * y);
    *this = std::move(r);
    return *this;
}

QPoly q_binomial(int m, int k) {
    if (m < 0 || k < 0 || k > m) return QPoly();
    // row[j] = [i choose j]_q, built with [i,j] = [i-1,j-1] + q^j [i-1,j]
    std::vector<QPoly> row{QPoly(1)};
    for (int i = 1; i <= m; ++i) {
        std::vector<QPoly> next(i + 1);
        for (int j = 0; j <= i; ++j) {
            QPoly v;
            if (j >= 1) v += row[j - 1];
            if (j <= i - 1) v += QPoly::monomial(j) * row[j];
            next[j] = std::move(v);
        }
        row = std::move(next);
    }
    return row[k];
}

QPoly q_multinomial(const std::vector<int>& parts) {
    QPoly r(1);
    int total = 0;
    for (int p : parts) {
        if (p < 0) return QPoly();
        total += p;
        r *= q_binomial(total, p);
    }
    return r;
}

QPoly q_multinomial(int a, int b, int c) { return q_multinomial(std::vector<int>{a, b, c}); }

namespace {

QtPolynomial toppling_polynomial(int n, int d, ToppleMode mode) {
    Shape s(n, d);
    QtPolynomial p;
    for (const auto& c : enumerate_sorted_recurrent(s)) {
        auto w = wtopple(topple_trace(s, c, mode));
        p.add_term(static_cast<int>(level(s, c)), static_cast<int>(w - (s.n + s.d)), 1);
    }
    return p;
}

void compositions(int total, int parts, bool positive, const std::function<void(const std::vector<int>&)>& f) {
    std::vector<int> v(parts, 0);
    const int lo = positive ? 1 : 0;
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == parts - 1) {
            if (left < lo) return;
            v[pos] = left;
            f(v);
            return;
        }
        for (int x = lo; x <= left - lo * (parts - 1 - pos); ++x) {
            v[pos] = x;
            rec(pos + 1, left - x);
        }
    };
    if (parts > 0) rec(0, total);
}

}  // namespace

QtPolynomial f_cti(int n, int d) { return toppling_polynomial(n, d, ToppleMode::CTI); }
QtPolynomial f_itc(int n, int d) { return toppling_polynomial(n, d, ToppleMode::ITC); }

QtPolynomial qt_schroder(int n, int d) {
    if (n < 0 || d < 0) throw DomainError("qt_schroder needs n, d >= 0");
    QtPolynomial p;
    for (const auto& w : enumerate_schroder_words(n, d)) p.add_term(area(w), schroder_bounce(w), 1);
    return p;
}

QtPolynomial egge_sum(int n, int d) {
    Shape s(n, d);
    QtPolynomial total;
    for (int k = 1; k <= s.n; ++k) {
        compositions(s.n, k, true, [&](const std::vector<int>& alpha) {
            compositions(s.d, k + 1, false, [&](const std::vector<int>& beta) {
                QPoly coeff = q_binomial(beta[0] + alpha[0], beta[0]) *
                              q_binomial(beta[k] + alpha[k - 1] - 1, beta[k]);
                int qe = 0, te = 0;
                for (int i = 0; i < k; ++i) qe += alpha[i] * (alpha[i] - 1) / 2;
                for (int i = 1; i <= k; ++i) te += i * beta[i];
                for (int i = 1; i < k; ++i) te += i * alpha[i];
                for (int i = 1; i <= k - 1; ++i)
                    coeff *= q_multinomial({beta[i], alpha[i], alpha[i - 1] - 1});
                QtPolynomial term = QtPolynomial::from_q(coeff);
                term *= QtPolynomial::monomial(qe, te);
                total += term;
            });
        });
    }
    return total;
}

QtPolynomial itc_term(const ItcSequence& seq) {
    QPoly coeff(1);
    int qe = 0, te = 0;
    int prev_a = 1;
    for (int i = 0; i < seq.length(); ++i) {
        int a = seq.a[i], b = seq.b[i];
        qe += a * (a - 1) / 2;
        coeff *= q_multinomial({a, b, prev_a - 1});
        te += i * (a + b);
        prev_a = a;
    }
    QtPolynomial term = QtPolynomial::from_q(coeff);
    term *= QtPolynomial::monomial(qe, te);
    return term;
}

QtPolynomial itc_sum(int n, int d) {
    QtPolynomial total;
    for (const auto& seq : enumerate_itc_sequences(n, d)) total += itc_term(seq);
    return total;
}

ExtremalWords extremal_words(const ItcSequence& seq) {
    const int k = seq.length();
    if (k < 1 || seq.a.size() != seq.b.size()) throw PreconditionError("malformed ITC sequence");
    int n = 0, d = 0;
    for (int i = 0; i < k; ++i) n += seq.a[i], d += seq.b[i];
    if (!is_itc_sequence(n, d, seq)) throw PreconditionError(to_string(seq) + " is not an ITC sequence");
    auto rep = [](char ch, int times) { return std::string(static_cast<std::size_t>(std::max(times, 0)), ch); };

    std::string lower = rep('H', seq.b[0]) + rep('U', seq.a[0]);
    std::string upper = rep('U', seq.a[0]) + rep('H', seq.b[0]);
    for (int i = 1; i < k; ++i) {
        lower += rep('D', seq.a[i - 1]) + rep('H', seq.b[i]) + rep('U', seq.a[i]);
        upper += "D" + rep('U', seq.a[i]) + rep('H', seq.b[i]) + rep('D', seq.a[i - 1] - 1);
    }
    lower += rep('D', seq.a[k - 1]);
    upper += rep('D', seq.a[k - 1]);
    return ExtremalWords{SchroderWord(mirror(lower)), SchroderWord(mirror(upper))};
}

int inversions(std::string_view shuffle) {
    auto rank = [](char ch) {
        switch (ch) {
            case 'D': return 0;
            case 'H': return 1;
            case 'U': return 2;
        }
        throw ParseError("invalid letter '" + std::string(1, ch) + "'");
    };
    int inv = 0;
    for (std::size_t i = 0; i < shuffle.size(); ++i)
        for (std::size_t j = i + 1; j < shuffle.size(); ++j)
            if (rank(shuffle[i]) > rank(shuffle[j])) ++inv;
    return inv;
}

int hexagon_area(std::string_view shuffle) {
    LetterCounts lc = letter_counts(shuffle);
    auto column_triangles = [](std::string_view w) {
        std::vector<int> cols;
        int y = 0;
        for (char ch : w) {
            if (ch == 'U') ++y;
            else if (ch == 'D') cols.push_back(y);
            else cols.push_back(++y);
        }
        return cols;
    };
    std::string floor = std::string(lc.d, 'D') + std::string(lc.h, 'H') + std::string(lc.u, 'U');
    auto top = column_triangles(shuffle);
    auto bottom = column_triangles(floor);
    int total = 0;
    for (std::size_t i = 0; i < top.size(); ++i) total += top[i] - bottom[i];
    return total;
}

QPoly hexagon_shuffle_gf(int a, int b, int c) {
    if (a < 0 || b < 0 || c < 0) throw DomainError("negative letter counts");
    QPoly gf;
    std::function<void(int, int, int, int)> rec = [&](int da, int hb, int uc, int inv) {
        if (da == 0 && hb == 0 && uc == 0) {
            gf += QPoly::monomial(inv);
            return;
        }
        // Appending a letter adds one inversion per larger letter already placed.
        int placed_h = b - hb, placed_u = c - uc;
        if (da > 0) rec(da - 1, hb, uc, inv + placed_h + placed_u);
        if (hb > 0) rec(da, hb - 1, uc, inv + placed_u);
        if (uc > 0) rec(da, hb, uc - 1, inv);
    };
    rec(a, b, c, 0);
    return gf;
}

bool is_qt_symmetric(const QtPolynomial& p) { return p == p.swapped(); }

}  // namespace sandlab
