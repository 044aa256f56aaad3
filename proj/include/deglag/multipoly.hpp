#pragma once

#include <map>
#include <optional>
#include <string>

#include "deglag/rational.hpp"

namespace deglag {

/// The three symbols of the symbolic layer.
enum class Sym { x, lambda, alpha };

struct Exponents {
    unsigned ex = 0;  // exponent of x
    unsigned el = 0;  // exponent of lambda
    unsigned ea = 0;  // exponent of alpha

    unsigned total() const { return ex + el + ea; }
    unsigned get(Sym s) const;
    friend bool operator==(const Exponents&, const Exponents&) = default;
};

/// Graded-lex term order on (ex, el, ea): total degree first, then lexicographic.
struct GradedLexLess {
    bool operator()(const Exponents& a, const Exponents& b) const {
        if (a.total() != b.total()) return a.total() < b.total();
        if (a.ex != b.ex) return a.ex < b.ex;
        if (a.el != b.el) return a.el < b.el;
        return a.ea < b.ea;
    }
};

/// Partial assignment of {x, lambda, alpha} to exact rationals.
struct Bindings {
    std::optional<BigRat> x;
    std::optional<BigRat> lambda;
    std::optional<BigRat> alpha;

    Bindings& set(Sym s, BigRat v);
    const std::optional<BigRat>& get(Sym s) const;
    static Bindings at(Sym s, BigRat v) { return Bindings{}.set(s, std::move(v)); }
};

/// Sparse exact polynomial in x, lambda, alpha over BigRat.
///
/// Normal form is maintained at all times: no zero coefficients are stored and
/// terms sit in graded-lex order, so equality is plain structural equality and
/// an identity check is "the residual is the empty polynomial".
class MultiPoly {
public:
    using TermMap = std::map<Exponents, BigRat, GradedLexLess>;

    MultiPoly() = default;  // zero
    MultiPoly(int c) : MultiPoly(BigRat(c)) {}
    MultiPoly(long c) : MultiPoly(BigRat(c)) {}
    MultiPoly(const BigRat& c);

    static MultiPoly symbol(Sym s);
    static MultiPoly monomial(const Exponents& e, const BigRat& c);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Value of a constant polynomial (zero polynomial included). Throws
    /// std::invalid_argument if a symbol is still present.
    BigRat constant_value() const;
    bool mentions(Sym s) const;
    unsigned degree(Sym s) const;
    const TermMap& terms() const { return terms_; }
    BigRat coeff(const Exponents& e) const;

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const MultiPoly& o) { *this = *this * o; return *this; }
    MultiPoly& operator*=(const BigRat& c);

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(MultiPoly a, const BigRat& c) { return a *= c; }
    friend MultiPoly operator*(const BigRat& c, MultiPoly a) { return a *= c; }

    friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

    MultiPoly pow(unsigned e) const;

    /// Substitutes the bound symbols exactly; unbound symbols survive.
    MultiPoly eval(const Bindings& b) const;
    double eval_double(double x, double lambda, double alpha) const;

    MultiPoly derivative(Sym s) const;
    /// Coefficient of s^k as a polynomial in the remaining symbols.
    MultiPoly coeff_of(Sym s, unsigned k) const;

    std::string str() const;

private:
    void add_term(const Exponents& e, const BigRat& c);
    TermMap terms_;
};

/// Generalized binomial with symbolic upper argument:
/// binom(alpha + c, k) = prod_{j=0}^{k-1} (alpha + c - j) / k!, a degree-k
/// polynomial in alpha alone.
MultiPoly binom_poly(long c, unsigned k);

}  // namespace deglag
