#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace liebial {

using Rational = boost::multiprecision::cpp_rational;

/// A single term c * x^m * e^{<freq, x>}.  The key carries the exponential
/// frequency vector (rational entries) and the monomial multi-index.
struct TermKey {
    std::vector<Rational> freq;
    std::vector<unsigned> pow;

    bool operator==(const TermKey& o) const { return freq == o.freq && pow == o.pow; }
    bool operator<(const TermKey& o) const {
        if (freq != o.freq)
            return std::lexicographical_compare(freq.begin(), freq.end(), o.freq.begin(), o.freq.end());
        return std::lexicographical_compare(pow.begin(), pow.end(), o.pow.begin(), o.pow.end());
    }
};

/// Exponential-polynomial on R^n with rational coefficients: a finite sum of
/// terms c * x^m * e^{<lambda,x>}.  The empty term map is zero.  Closed under
/// +, *, and partial differentiation; an integral domain, so the stored form
/// is a unique canonical representation.
class ExpPoly {
public:
    explicit ExpPoly(int dim = 0) : dim_(dim) {}

    static ExpPoly constant(int dim, const Rational& c);
    static ExpPoly variable(int dim, int i);
    /// e^{<freq, x>}
    static ExpPoly exponential(int dim, std::vector<Rational> freq);

    int dim() const { return dim_; }
    bool isZero() const { return terms_.empty(); }
    const std::map<TermKey, Rational>& terms() const { return terms_; }

    /// Coefficient of the largest key in the (freq, pow) lexicographic order.
    Rational leadingCoeff() const;

    void addTerm(const TermKey& k, const Rational& c);

    ExpPoly operator+(const ExpPoly& o) const;
    ExpPoly operator-(const ExpPoly& o) const;
    ExpPoly operator*(const ExpPoly& o) const;
    ExpPoly operator-() const;
    ExpPoly scaled(const Rational& c) const;
    ExpPoly derivative(int i) const;

    bool operator==(const ExpPoly& o) const { return dim_ == o.dim_ && terms_ == o.terms_; }

private:
    int dim_;
    std::map<TermKey, Rational> terms_;
};

/// Fraction of exponential-polynomials.  Not gcd-reduced; the canonical form
/// only requires a nonzero denominator whose leading coefficient is 1, and a
/// zero numerator paired with denominator 1.  Equality is decided by
/// cross-multiplication, which is sound and complete over this domain.
class ScalarFn {
public:
    explicit ScalarFn(int dim = 0) : num_(dim), den_(ExpPoly::constant(dim, 1)) {}
    ScalarFn(ExpPoly num, ExpPoly den);

    static ScalarFn constant(int dim, const Rational& c) {
        return ScalarFn(ExpPoly::constant(dim, c), ExpPoly::constant(dim, 1));
    }
    static ScalarFn variable(int dim, int i) {
        return ScalarFn(ExpPoly::variable(dim, i), ExpPoly::constant(dim, 1));
    }
    static ScalarFn exponential(int dim, std::vector<Rational> freq) {
        return ScalarFn(ExpPoly::exponential(dim, std::move(freq)), ExpPoly::constant(dim, 1));
    }

    int dim() const { return num_.dim(); }
    const ExpPoly& num() const { return num_; }
    const ExpPoly& den() const { return den_; }
    bool isZero() const { return num_.isZero(); }

    /// True iff the fraction is a rational constant; if so *out receives it.
    bool constantValue(Rational* out) const;

    ScalarFn operator+(const ScalarFn& o) const;
    ScalarFn operator-(const ScalarFn& o) const;
    ScalarFn operator*(const ScalarFn& o) const;
    ScalarFn operator/(const ScalarFn& o) const;
    ScalarFn operator-() const;
    ScalarFn scaled(const Rational& c) const;
    ScalarFn derivative(int i) const;

    /// Value equality via cross-multiplication.
    bool operator==(const ScalarFn& o) const;

private:
    void normalize();
    ExpPoly num_, den_;
};

struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, size_t pos);
    size_t position;
};

/// Parse an expression in the scalar grammar over the given coordinates.
ScalarFn parseScalar(const std::string& text, int dim, const std::vector<std::string>& coords);

/// Canonical printed form; parseScalar(printScalar(f)) == f.
std::string printScalar(const ScalarFn& f, const std::vector<std::string>& coords);
std::string printExpPoly(const ExpPoly& p, const std::vector<std::string>& coords);
std::string printRational(const Rational& r);

}  // namespace liebial
