#include "deglag/multipoly.hpp"

#include <sstream>
#include <stdexcept>

namespace deglag {

unsigned Exponents::get(Sym s) const {
    switch (s) {
        case Sym::x: return ex;
        case Sym::lambda: return el;
        case Sym::alpha: return ea;
    }
    throw std::invalid_argument("Exponents::get: bad symbol");
}

static void set_exp(Exponents& e, Sym s, unsigned v) {
    switch (s) {
        case Sym::x: e.ex = v; return;
        case Sym::lambda: e.el = v; return;
        case Sym::alpha: e.ea = v; return;
    }
}

Bindings& Bindings::set(Sym s, BigRat v) {
    switch (s) {
        case Sym::x: x = std::move(v); break;
        case Sym::lambda: lambda = std::move(v); break;
        case Sym::alpha: alpha = std::move(v); break;
    }
    return *this;
}

const std::optional<BigRat>& Bindings::get(Sym s) const {
    switch (s) {
        case Sym::x: return x;
        case Sym::lambda: return lambda;
        case Sym::alpha: return alpha;
    }
    throw std::invalid_argument("Bindings::get: bad symbol");
}

MultiPoly::MultiPoly(const BigRat& c) {
    if (!c.is_zero()) terms_.emplace(Exponents{}, c);
}

MultiPoly MultiPoly::symbol(Sym s) {
    Exponents e;
    set_exp(e, s, 1);
    return monomial(e, BigRat(1));
}

MultiPoly MultiPoly::monomial(const Exponents& e, const BigRat& c) {
    MultiPoly p;
    if (!c.is_zero()) p.terms_.emplace(e, c);
    return p;
}

bool MultiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponents{});
}

BigRat MultiPoly::constant_value() const {
    if (terms_.empty()) return BigRat(0);
    if (!is_constant()) throw std::invalid_argument("MultiPoly: not a constant: " + str());
    return terms_.begin()->second;
}

bool MultiPoly::mentions(Sym s) const {
    for (const auto& [e, c] : terms_)
        if (e.get(s) > 0) return true;
    return false;
}

unsigned MultiPoly::degree(Sym s) const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e.get(s));
    return d;
}

BigRat MultiPoly::coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? BigRat(0) : it->second;
}

void MultiPoly::add_term(const Exponents& e, const BigRat& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MultiPoly& MultiPoly::operator*=(const BigRat& c) {
    if (c.is_zero()) {
        terms_.clear();
    } else {
        for (auto& [e, v] : terms_) v *= c;
    }
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r;
    for (const auto& [ea_, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            r.add_term(Exponents{ea_.ex + eb.ex, ea_.el + eb.el, ea_.ea + eb.ea}, ca * cb);
    return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
    MultiPoly r(1);
    for (unsigned i = 0; i < e; ++i) r = r * *this;
    return r;
}

MultiPoly MultiPoly::eval(const Bindings& b) const {
    MultiPoly r;
    for (const auto& [e, c] : terms_) {
        BigRat v = c;
        Exponents rest = e;
        for (Sym s : {Sym::x, Sym::lambda, Sym::alpha}) {
            const auto& bound = b.get(s);
            unsigned k = e.get(s);
            if (bound && k > 0) {
                v *= bound->pow(k);
                set_exp(rest, s, 0);
            }
        }
        r.add_term(rest, v);
    }
    return r;
}

double MultiPoly::eval_double(double x, double lambda, double alpha) const {
    auto ipow = [](double base, unsigned e) {
        double r = 1.0;
        for (unsigned i = 0; i < e; ++i) r *= base;
        return r;
    };
    double r = 0.0;
    for (const auto& [e, c] : terms_)
        r += c.to_double() * ipow(x, e.ex) * ipow(lambda, e.el) * ipow(alpha, e.ea);
    return r;
}

MultiPoly MultiPoly::derivative(Sym s) const {
    MultiPoly r;
    for (const auto& [e, c] : terms_) {
        unsigned k = e.get(s);
        if (k == 0) continue;
        Exponents d = e;
        set_exp(d, s, k - 1);
        r.add_term(d, c * BigRat(static_cast<long>(k)));
    }
    return r;
}

MultiPoly MultiPoly::coeff_of(Sym s, unsigned k) const {
    MultiPoly r;
    for (const auto& [e, c] : terms_) {
        if (e.get(s) != k) continue;
        Exponents d = e;
        set_exp(d, s, 0);
        r.add_term(d, c);
    }
    return r;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c.str();
        if (e.ex) os << "*x^" << e.ex;
        if (e.el) os << "*lambda^" << e.el;
        if (e.ea) os << "*alpha^" << e.ea;
    }
    return os.str();
}

MultiPoly binom_poly(long c, unsigned k) {
    MultiPoly p(1);
    const MultiPoly a = MultiPoly::symbol(Sym::alpha);
    for (unsigned j = 0; j < k; ++j) p = p * (a + MultiPoly(BigRat(c - static_cast<long>(j))));
    p *= BigRat(BigInt(1), factorial(k));
    return p;
}

}  // namespace deglag
