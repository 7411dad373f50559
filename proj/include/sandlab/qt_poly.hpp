#pragma once

#include "sandlab/bigint.hpp"
#include "sandlab/schroder.hpp"
#include "sandlab/toppling.hpp"

#include <map>
#include <string_view>
#include <utility>
#include <vector>

namespace sandlab {

// Dense polynomial in q with integer coefficients.
class QPoly {
public:
    QPoly() = default;
    QPoly(BigInt constant);
    static QPoly monomial(int exponent, BigInt coeff = 1);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return coeffs_.empty(); }
    const BigInt& operator[](int e) const;
    const std::vector<BigInt>& coefficients() const { return coeffs_; }
    BigInt at_one() const;
    Rational evaluate(const Rational& q) const;

    QPoly& operator+=(const QPoly& o);
    QPoly& operator*=(const QPoly& o);
    friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
    friend QPoly operator*(QPoly a, const QPoly& b) { return a *= b; }
    friend bool operator==(const QPoly&, const QPoly&) = default;

private:
    void trim();
    std::vector<BigInt> coeffs_;
};

// Sparse polynomial in q and t; no zero coefficients are stored.
class QtPolynomial {
public:
    using Exponents = std::pair<int, int>;  // (q, t)

    QtPolynomial() = default;
    static QtPolynomial monomial(int qe, int te, BigInt coeff = 1);
    static QtPolynomial from_q(const QPoly& p, int te = 0);

    void add_term(int qe, int te, const BigInt& coeff);
    BigInt coefficient(int qe, int te) const;
    const std::map<Exponents, BigInt>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    BigInt at_one() const;
    Rational evaluate(const Rational& q, const Rational& t) const;
    QtPolynomial swapped() const;

    QtPolynomial& operator+=(const QtPolynomial& o);
    QtPolynomial& operator*=(const QtPolynomial& o);
    friend QtPolynomial operator+(QtPolynomial a, const QtPolynomial& b) { return a += b; }
    friend QtPolynomial operator*(QtPolynomial a, const QtPolynomial& b) { return a *= b; }
    friend bool operator==(const QtPolynomial&, const QtPolynomial&) = default;

private:
    std::map<Exponents, BigInt> terms_;
};

QPoly q_binomial(int m, int k);
// [sum; parts]_q, zero if any part is negative.
QPoly q_multinomial(const std::vector<int>& parts);
QPoly q_multinomial(int a, int b, int c);

// sum over sorted recurrent c of q^level(c) t^(wtopple(c) - (n+d))
QtPolynomial f_cti(int n, int d);
QtPolynomial f_itc(int n, int d);
// sum over Schroder words of q^area t^bounce; n = 0 gives 1.
QtPolynomial qt_schroder(int n, int d);
// Closed sum over compositions alpha of n and weak compositions beta of d.
QtPolynomial egge_sum(int n, int d);
// Sum over ITC sequences of products of q-multinomials.
QtPolynomial itc_sum(int n, int d);
// itc_sum term for a single sequence.
QtPolynomial itc_term(const ItcSequence& seq);

struct ExtremalWords {
    SchroderWord lower;
    SchroderWord upper;
};
// Least and greatest Haglund words (c = phi(mirror(w))) in an ITC fiber.
ExtremalWords extremal_words(const ItcSequence& seq);

// Sum over shuffles of D^a H^b U^c of q^(inversions under D < H < U).
QPoly hexagon_shuffle_gf(int a, int b, int c);
// Lower triangles between a shuffle and the floor path D^a H^b U^c.
int hexagon_area(std::string_view shuffle);
int inversions(std::string_view shuffle);

bool is_qt_symmetric(const QtPolynomial& p);

}  // namespace sandlab
