#include "qsphere/ratfun.hpp"

#include <algorithm>
#include <sstream>

namespace qsphere {

Poly::Poly(Rational constant) {
    constant.canonicalize();
    if (constant != 0) c_.push_back(std::move(constant));
}

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    for (auto& c : c_) c.canonicalize();
    trim();
}

Poly Poly::monomial(int degree, Rational coeff) {
    Poly p;
    coeff.canonicalize();
    if (coeff == 0) return p;
    p.c_.assign(degree + 1, Rational(0));
    p.c_[degree] = std::move(coeff);
    return p;
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

int Poly::valuation() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) return static_cast<int>(i);
    return 0;
}

Rational Poly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return Rational(0);
    return c_[k];
}

Rational Poly::leading() const {
    if (c_.empty()) return Rational(0);
    return c_.back();
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<Rational> r(std::max(c_.size(), o.c_.size()), Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return Poly(std::move(r));
}

Poly Poly::operator-(const Poly& o) const {
    std::vector<Rational> r(std::max(c_.size(), o.c_.size()), Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return Poly(std::move(r));
}

Poly Poly::operator-() const {
    Poly p(*this);
    for (auto& x : p.c_) x = -x;
    return p;
}

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    return Poly(std::move(r));
}

Poly Poly::scaled(const Rational& r) const {
    if (r == 0) return Poly();
    Poly p(*this);
    for (auto& x : p.c_) x *= r;
    return p;
}

Poly Poly::pow(unsigned e) const {
    Poly result(Rational(1));
    Poly base(*this);
    while (e) {
        if (e & 1u) result = result * base;
        base = base * base;
        e >>= 1u;
    }
    return result;
}

void Poly::divrem(const Poly& a, const Poly& b, Poly& quo, Poly& rem) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    rem = a;
    quo = Poly();
    if (a.degree() < b.degree()) return;
    std::vector<Rational> q(a.degree() - b.degree() + 1, Rational(0));
    Rational lead = b.leading();
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        int shift = rem.degree() - b.degree();
        Rational factor = rem.leading() / lead;
        q[shift] = factor;
        rem = rem - (b * Poly::monomial(shift, factor));
    }
    quo = Poly(std::move(q));
}

Poly Poly::gcd(Poly a, Poly b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    while (!b.is_zero()) {
        Poly q, r;
        divrem(a, b, q, r);
        a = std::move(b);
        b = r.monic();  // keeps coefficient growth in check
    }
    return a.monic();
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return scaled(Rational(1) / leading());
}

Poly Poly::reversed() const {
    std::vector<Rational> r(c_.rbegin(), c_.rend());
    return Poly(std::move(r));
}

Rational Poly::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::complex<double> Poly::eval(const std::complex<double>& x) const {
    std::complex<double> acc(0.0, 0.0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->get_d();
    return acc;
}

namespace {

std::string rational_str(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

}  // namespace

std::string Poly::to_string(const std::string& var, int step) const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
        Rational ck = coeff(k);
        if (ck == 0) continue;
        bool first = out.empty();
        Rational a = abs(ck);
        if (!first) out += (ck < 0) ? " - " : " + ";
        else if (ck < 0) out += "-";
        std::string mag = rational_str(a);
        if (k == 0) {
            out += mag;
            continue;
        }
        if (mag != "1") out += mag + "*";
        out += var;
        int e = k / step;
        if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
}

RatFun::RatFun(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
    reduce();
}

RatFun RatFun::monomial(int degree) {
    if (degree >= 0) return RatFun(Poly::monomial(degree), Poly(Rational(1)));
    return RatFun(Poly(Rational(1)), Poly::monomial(-degree));
}

bool RatFun::is_one() const {
    return num_.degree() == 0 && den_.degree() == 0 && num_.coeff(0) == 1;
}

void RatFun::reduce() {
    if (num_.is_zero()) {
        den_ = Poly(Rational(1));
        return;
    }
    Poly g = Poly::gcd(num_, den_);
    if (g.degree() > 0) {
        Poly q, r;
        Poly::divrem(num_, g, q, r);
        num_ = q;
        Poly::divrem(den_, g, q, r);
        den_ = q;
    }
    Rational lead = den_.leading();
    if (lead != 1) {
        den_ = den_.scaled(Rational(1) / lead);
        num_ = num_.scaled(Rational(1) / lead);
    }
}

RatFun RatFun::operator+(const RatFun& o) const {
    return RatFun(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFun RatFun::operator-(const RatFun& o) const {
    return RatFun(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFun RatFun::operator-() const {
    RatFun r(*this);
    r.num_ = -r.num_;
    return r;
}

RatFun RatFun::operator*(const RatFun& o) const {
    return RatFun(num_ * o.num_, den_ * o.den_);
}

RatFun RatFun::operator/(const RatFun& o) const {
    if (o.is_zero()) throw DivisionByZero();
    return RatFun(num_ * o.den_, den_ * o.num_);
}

RatFun RatFun::pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    RatFun result(Rational(1));
    RatFun base(*this);
    unsigned ue = static_cast<unsigned>(e);
    while (ue) {
        if (ue & 1u) result *= base;
        base *= base;
        ue >>= 1u;
    }
    return result;
}

RatFun RatFun::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    return RatFun(den_, num_);
}

bool RatFun::operator<(const RatFun& o) const {
    auto cmp_poly = [](const Poly& a, const Poly& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
        for (int k = a.degree(); k >= 0; --k) {
            int c = cmp(a.coeff(k), b.coeff(k));
            if (c != 0) return c;
        }
        return 0;
    };
    int c = cmp_poly(num_, o.num_);
    if (c != 0) return c < 0;
    return cmp_poly(den_, o.den_) < 0;
}

RatFun RatFun::subst_inverse() const {
    // f(1/x) = x^(dd - dn) * rev(num) / rev(den)
    int dn = num_.degree(), dd = den_.degree();
    if (is_zero()) return RatFun();
    Poly n = num_.reversed();
    Poly d = den_.reversed();
    int shift = dd - dn;
    if (shift >= 0)
        return RatFun(n * Poly::monomial(shift), d);
    return RatFun(n, d * Poly::monomial(-shift));
}

int RatFun::valuation_at_zero() const {
    if (is_zero()) throw DivisionByZero("valuation of zero is undefined");
    return num_.valuation() - den_.valuation();
}

Rational RatFun::eval(const Rational& x) const {
    Rational d = den_.eval(x);
    if (d == 0) throw PoleAtLimit("denominator vanishes at evaluation point");
    return num_.eval(x) / d;
}

std::complex<double> RatFun::eval(const std::complex<double>& x) const {
    return num_.eval(x) / den_.eval(x);
}

std::string RatFun::to_string(const std::string& var, int step) const {
    std::string n = num_.to_string(var, step);
    if (den_.degree() == 0 && den_.coeff(0) == 1) return n;
    std::string d = den_.to_string(var, step);
    auto atomic = [](const std::string& t) {
        return t.find(' ') == std::string::npos;
    };
    std::string out = atomic(n) ? n : "(" + n + ")";
    out += "/";
    out += atomic(d) ? d : "(" + d + ")";
    return out;
}

}  // namespace qsphere
