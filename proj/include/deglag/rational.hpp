#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <utility>

namespace deglag {

using BigInt = mpz_class;

BigInt factorial(unsigned long n);
BigInt binomial(unsigned long n, unsigned long k);

/// Exact rational scalar, always kept canonical: den > 0, gcd(|num|, den) = 1,
/// zero stored as 0/1.
class BigRat {
public:
    BigRat() : v_(0) {}
    BigRat(int n) : v_(n) {}
    BigRat(long n) : v_(static_cast<long>(n)) {}
    BigRat(const BigInt& n) : v_(n) {}
    BigRat(const BigInt& num, const BigInt& den) : v_(num, den) { canonicalize(); }
    BigRat(long num, long den) : v_(mpz_class(num), mpz_class(den)) { canonicalize(); }

    /// Parses "p/q" or a bare integer "p". Throws std::invalid_argument on
    /// malformed input or a zero denominator.
    static BigRat from_string(const std::string& s);

    BigInt num() const { return v_.get_num(); }
    BigInt den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }

    /// Canonical exact rendering, always "p/q" (e.g. "0/1", "-3/2").
    std::string str() const { return v_.get_num().get_str() + "/" + v_.get_den().get_str(); }
    double to_double() const { return v_.get_d(); }

    BigRat operator-() const { return BigRat(mpq_class(-v_)); }

    BigRat& operator+=(const BigRat& o) { v_ += o.v_; return *this; }
    BigRat& operator-=(const BigRat& o) { v_ -= o.v_; return *this; }
    BigRat& operator*=(const BigRat& o) { v_ *= o.v_; return *this; }
    BigRat& operator/=(const BigRat& o) {
        if (o.is_zero()) throw std::domain_error("BigRat: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend BigRat operator+(BigRat a, const BigRat& b) { return a += b; }
    friend BigRat operator-(BigRat a, const BigRat& b) { return a -= b; }
    friend BigRat operator*(BigRat a, const BigRat& b) { return a *= b; }
    friend BigRat operator/(BigRat a, const BigRat& b) { return a /= b; }

    friend bool operator==(const BigRat& a, const BigRat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const BigRat& a, const BigRat& b) { return a.v_ != b.v_; }
    friend bool operator<(const BigRat& a, const BigRat& b) { return a.v_ < b.v_; }
    friend bool operator<=(const BigRat& a, const BigRat& b) { return a.v_ <= b.v_; }
    friend bool operator>(const BigRat& a, const BigRat& b) { return a.v_ > b.v_; }
    friend bool operator>=(const BigRat& a, const BigRat& b) { return a.v_ >= b.v_; }

    BigRat pow(unsigned long e) const;
    BigRat abs() const { return BigRat(mpq_class(::abs(v_))); }

private:
    explicit BigRat(mpq_class q) : v_(std::move(q)) {}
    void canonicalize() {
        if (sgn(v_.get_den()) == 0) throw std::domain_error("BigRat: zero denominator");
        v_.canonicalize();
    }
    mpq_class v_;
};

inline BigInt factorial(unsigned long n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline BigInt binomial(unsigned long n, unsigned long k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline BigRat BigRat::from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("BigRat: empty string");
    mpq_class q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("BigRat: cannot parse \"" + s + "\"");
    if (sgn(q.get_den()) == 0)
        throw std::invalid_argument("BigRat: zero denominator in \"" + s + "\"");
    q.canonicalize();
    return BigRat(std::move(q));
}

inline BigRat BigRat::pow(unsigned long e) const {
    BigInt n, d;
    mpz_pow_ui(n.get_mpz_t(), v_.get_num().get_mpz_t(), e);
    mpz_pow_ui(d.get_mpz_t(), v_.get_den().get_mpz_t(), e);
    return BigRat(mpq_class(n, d));  // already canonical, gcd preserved by powering
}

}  // namespace deglag
