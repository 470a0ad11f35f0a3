#include "qsphere/poisson.hpp"

#include <cmath>
#include <sstream>

#include "qsphere/quadrature.hpp"

namespace qsphere {

PoissonElement::PoissonElement(Rational c) {
    if (c != 0) t_.emplace(PKey{}, std::move(c));
}

PoissonElement PoissonElement::monomial(const PKey& k, Rational c) {
    PoissonElement e;
    e.add_term(k, c);
    return e;
}

void PoissonElement::add_term(const PKey& k, const Rational& c) {
    if (c == 0) return;
    Rational cc = c;
    cc.canonicalize();
    auto [it, inserted] = t_.try_emplace(k, cc);
    if (!inserted) {
        it->second += cc;
        if (it->second == 0) t_.erase(it);
    }
}

PoissonElement PoissonElement::operator+(const PoissonElement& o) const {
    PoissonElement r(*this);
    r += o;
    return r;
}

PoissonElement PoissonElement::operator-(const PoissonElement& o) const {
    PoissonElement r(*this);
    for (const auto& [k, c] : o.t_) r.add_term(k, -c);
    return r;
}

PoissonElement PoissonElement::operator-() const {
    PoissonElement r;
    for (const auto& [k, c] : t_) r.t_.emplace(k, -c);
    return r;
}

PoissonElement& PoissonElement::operator+=(const PoissonElement& o) {
    for (const auto& [k, c] : o.t_) add_term(k, c);
    return *this;
}

PoissonElement PoissonElement::scaled(const Rational& c) const {
    PoissonElement r;
    if (c == 0) return r;
    for (const auto& [k, x] : t_) r.t_.emplace(k, x * c);
    return r;
}

std::string PoissonElement::to_string() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : t_) {
        if (!first) os << " + ";
        first = false;
        os << c;
        if (k.m) os << "*rhoi^" << k.m;
        if (k.a) os << "*zb^" << k.a;
        if (k.b) os << "*z^" << k.b;
        if (k.eps) os << "*dz";
        if (k.epsbar) os << "*dzb";
    }
    return os.str();
}

namespace {

void classical_canonicalize(PoissonElement& out, PKey k, Rational c) {
    if (c == 0) return;
    if (k.m >= 1 && k.a >= 1 && k.b >= 1) {
        // zb z = rho - 1 classically
        PKey down{k.m - 1, k.a - 1, k.b - 1, k.eps, k.epsbar};
        classical_canonicalize(out, down, c);
        PKey same{k.m, k.a - 1, k.b - 1, k.eps, k.epsbar};
        classical_canonicalize(out, same, -c);
        return;
    }
    out.add_term(k, c);
}

}  // namespace

PoissonElement mul(const PoissonElement& x, const PoissonElement& y) {
    PoissonElement out;
    for (const auto& [k1, c1] : x.terms()) {
        for (const auto& [k2, c2] : y.terms()) {
            if ((k1.eps && k2.eps) || (k1.epsbar && k2.epsbar)) continue;
            // commutative sign: moving dzb of the left factor past dz of the right
            int sign = (k1.epsbar && k2.eps) ? -1 : 1;
            PKey k{k1.m + k2.m, k1.a + k2.a, k1.b + k2.b, k1.eps | k2.eps, k1.epsbar | k2.epsbar};
            classical_canonicalize(out, k, Rational(sign) * c1 * c2);
        }
    }
    return out;
}

PoissonElement classical_limit_elem(const FuncElement& f) {
    PoissonElement out;
    for (const auto& [mono, c] : f.terms())
        out.add_term(PKey{mono.m, mono.a, mono.b, 0, 0}, c.classical_limit(0));
    return out;
}

PoissonElement classical_limit_elem(const FormElement& w) {
    PoissonElement out;
    static const int bits[4][2] = {{0, 0}, {1, 0}, {0, 1}, {1, 1}};
    for (int idx = 0; idx < 4; ++idx)
        for (const auto& [mono, c] : w.coeff(idx).terms())
            out.add_term(PKey{mono.m, mono.a, mono.b, bits[idx][0], bits[idx][1]},
                         c.classical_limit(0));
    return out;
}

namespace {

// split a FormElement into parity-homogeneous parts: (even, odd)
std::pair<FormElement, FormElement> parity_split(const FormElement& w) {
    FormElement even, odd;
    even.coeff(F_ONE) = w.coeff(F_ONE);
    even.coeff(F_DZDZB) = w.coeff(F_DZDZB);
    odd.coeff(F_DZ) = w.coeff(F_DZ);
    odd.coeff(F_DZB) = w.coeff(F_DZB);
    return {even, odd};
}

PoissonElement bracket_homogeneous(const FormElement& x, int px, const FormElement& y, int py) {
    // graded commutator: minus sign unless both odd
    FormElement comm = (px == 1 && py == 1) ? mul(x, y) + mul(y, x) : mul(x, y) - mul(y, x);
    PoissonElement out;
    static const int bits[4][2] = {{0, 0}, {1, 0}, {0, 1}, {1, 1}};
    for (int idx = 0; idx < 4; ++idx)
        for (const auto& [mono, c] : comm.coeff(idx).terms())
            out.add_term(PKey{mono.m, mono.a, mono.b, bits[idx][0], bits[idx][1]},
                         c.classical_limit(1));
    return out;
}

}  // namespace

PoissonElement poisson_bracket(const FormElement& x, const FormElement& y) {
    auto [xe, xo] = parity_split(x);
    auto [ye, yo] = parity_split(y);
    PoissonElement out;
    out += bracket_homogeneous(xe, 0, ye, 0);
    out += bracket_homogeneous(xe, 0, yo, 1);
    out += bracket_homogeneous(xo, 1, ye, 0);
    out += bracket_homogeneous(xo, 1, yo, 1);
    return out;
}

PoissonElement poisson_bracket(const FuncElement& x, const FuncElement& y) {
    return poisson_bracket(FormElement(x), FormElement(y));
}

PoissonElement classical_d(const PoissonElement& x) {
    PoissonElement out;
    for (const auto& [k, c] : x.terms()) {
        // d(rhoi^m zb^a z^b) via the classical Leibniz rule;
        // d rhoi = -rhoi^2 (zb dz + z dzb)
        // factor from moving dz / dzb past nothing: classical, signs only
        auto add = [&](PKey nk, Rational nc) {
            if (nk.eps > 1 || nk.epsbar > 1) return;  // dz^2 = 0
            classical_canonicalize(out, nk, nc);
        };
        // z^b part: b z^(b-1) dz; dz lands left of any dzb already present
        if (k.b >= 1 && !k.eps) {
            PKey nk = k;
            nk.b -= 1;
            nk.eps = 1;
            add(nk, c * k.b);
        }
        if (k.a >= 1 && !k.epsbar) {
            PKey nk = k;
            nk.a -= 1;
            int sign = 1;
            if (k.eps) sign = -1;  // dzb must cross dz: dzb dz = -dz dzb
            nk.epsbar = 1;
            add(nk, c * k.a * sign);
        }
        if (k.m >= 1) {
            // d rhoi^m = -m rhoi^(m+1) (zb dz + z dzb)
            if (!k.eps) {
                PKey nk = k;
                nk.m += 1;
                nk.a += 1;
                nk.eps = 1;
                add(nk, -c * k.m);
            }
            if (!k.epsbar) {
                PKey nk = k;
                nk.m += 1;
                nk.b += 1;
                int sign = k.eps ? -1 : 1;
                nk.epsbar = 1;
                add(nk, -c * k.m * sign);
            }
        }
    }
    return out;
}

// --- w-patch bracket ------------------------------------------------------

std::vector<ClassicalWTerm> poisson_bracket_w(const LocalElement& x, const LocalElement& y) {
    auto parity = [](const LKey& k) { return (k.eps + k.epsbar) % 2; };
    // split by parity
    LocalElement xe, xo, ye, yo;
    for (const auto& [k, f] : x.terms()) (parity(k) ? xo : xe).add_term(k, f);
    for (const auto& [k, f] : y.terms()) (parity(k) ? yo : ye).add_term(k, f);
    std::vector<ClassicalWTerm> out;
    auto emit = [&out](const LocalElement& comm) {
        for (const ClassicalWTerm& t : classical_w_form(comm, 1)) out.push_back(t);
    };
    emit(mul(xe, ye) - mul(ye, xe));
    emit(mul(xe, yo) - mul(yo, xe));
    emit(mul(xo, ye) - mul(ye, xo));
    emit(mul(xo, yo) + mul(yo, xo));
    return out;
}

namespace {

std::map<std::tuple<int, int, int>, RatFun> collect_w(const std::vector<ClassicalWTerm>& terms) {
    std::map<std::tuple<int, int, int>, RatFun> acc;
    for (const auto& t : terms) {
        auto key = std::make_tuple(t.t, t.dw, t.dwb);
        auto [it, inserted] = acc.try_emplace(key, t.coeff_u);
        if (!inserted) it->second += t.coeff_u;
    }
    for (auto it = acc.begin(); it != acc.end();)
        it = it->second.is_zero() ? acc.erase(it) : std::next(it);
    return acc;
}

}  // namespace

bool classical_w_equal(const std::vector<ClassicalWTerm>& lhs,
                       const std::vector<ClassicalWTerm>& rhs) {
    return collect_w(lhs) == collect_w(rhs);
}

std::string classical_w_to_string(const std::vector<ClassicalWTerm>& terms) {
    auto acc = collect_w(terms);
    if (acc.empty()) return "0";
    std::string out;
    for (const auto& [key, f] : acc) {
        if (!out.empty()) out += " + ";
        out += "(" + f.to_string("u") + ")";
        int t = std::get<0>(key);
        if (t != 0) out += " * w^" + std::to_string(t);
        if (std::get<1>(key)) out += " * dw";
        if (std::get<2>(key)) out += " * dwb";
    }
    return out;
}

// --- numeric checks --------------------------------------------------------

std::vector<NumericCheck> numeric_north_pole_checks(const std::vector<double>& radii,
                                                    double quad_tol) {
    using C = std::complex<double>;
    const C I(0.0, 1.0);
    const double pi = M_PI;
    std::vector<NumericCheck> checks;

    // classical Xi in w-coordinates from the engine
    auto xi_terms = classical_w_form(embed(xi_forms().Xi));

    // evaluate the one-form on |w| = r: w = r e^{i theta},
    // dw -> i r e^{i theta} d theta, dwb -> -i r e^{-i theta} d theta
    auto on_circle = [&xi_terms, &I](double r, double theta) {
        double u = r * r;
        C w = std::polar(r, theta);
        C acc(0.0, 0.0);
        for (const auto& term : xi_terms) {
            C coeff = term.coeff_u.eval(C(u, 0.0));
            C wpow = std::pow(w, term.t);
            C dform = term.dw ? I * w : C(0.0, 0.0);  // i r e^{i th} = i w
            if (term.dwb) dform = -I * std::conj(w);
            acc += coeff * wpow * dform;
        }
        return acc;
    };

    for (double r : radii) {
        C value = integrate_converged([&](double th) { return on_circle(r, th); }, 0.0, 2.0 * pi,
                                      quad_tol);
        C expected = -4.0 * pi * I / (1.0 + r * r);
        checks.push_back({"circle integral of Xi at r = " + std::to_string(r), value, expected,
                          std::abs(value - expected)});
    }

    // the regular part of Xi: (wb dw - w dwb)/(1 + wb w); its circle
    // integral 4 pi i r^2/(1+r^2) tends to zero with r
    auto regular_part = [&I](double r, double theta) {
        double u = r * r;
        C w = std::polar(r, theta);
        C dw = I * w, dwb = -I * std::conj(w);
        return (std::conj(w) * dw - w * dwb) / (1.0 + u);
    };
    for (double r : radii) {
        C value = integrate_converged([&](double th) { return regular_part(r, th); }, 0.0,
                                      2.0 * pi, quad_tol);
        C expected = 4.0 * pi * I * r * r / (1.0 + r * r);
        checks.push_back({"regular part of the circle integral at r = " + std::to_string(r),
                          value, expected, std::abs(value - expected)});
    }

    // plane integral: int_{R^2} dx dy / (1 + x^2 + y^2)^2 = pi, computed on
    // the compactified polar rectangle r = tan(t):
    // r dr/(1+r^2)^2 = sin(t) cos(t) dt, smooth on the closed domain
    {
        auto integrand = [](double t, double) { return std::sin(t) * std::cos(t); };
        double v64 = gauss_legendre_2d(integrand, 0.0, pi / 2, 0.0, 2.0 * pi, 64);
        double v96 = gauss_legendre_2d(integrand, 0.0, pi / 2, 0.0, 2.0 * pi, 96);
        if (std::abs(v64 - v96) > quad_tol * (1.0 + std::abs(v96)))
            throw QuadratureNotConverged("2d plane quadrature did not stabilize");
        checks.push_back({"plane integral of (1+r^2)^-2", C(v96, 0.0), C(pi, 0.0),
                          std::abs(v96 - pi)});
        // area form integral: Omega = 2 dwb dw (1+wb w)^-2, dwb dw = 2i dx dy
        C omega = 4.0 * I * v96;
        checks.push_back({"integral of the area form Omega", omega, 4.0 * pi * I,
                          std::abs(omega - 4.0 * pi * I)});
    }

    // Stokes balance on the punctured sphere: integral of Omega over
    // |w| > r plus the circle integral of Xi at radius r cancels
    {
        double r = radii.empty() ? 0.1 : radii.back();
        auto disk = [](double t, double) {
            double rho = 1.0 + t * t;
            return 2.0 * t / (rho * rho);  // includes the Jacobian t, angular part explicit
        };
        double disk_int = gauss_legendre_2d(disk, 0.0, r, 0.0, 2.0 * pi, 120) / 2.0;
        // int_{|w|<r} dx dy/(1+|w|^2)^2 = pi r^2/(1+r^2); factor 2 pi from
        // the angular direction is carried by the 2d rule
        C omega_outside = 4.0 * I * (pi - disk_int);
        C circle = integrate_converged([&](double th) { return on_circle(r, th); }, 0.0, 2.0 * pi,
                                       quad_tol);
        C balance = omega_outside + circle;
        checks.push_back({"Stokes balance on the punctured sphere at r = " + std::to_string(r),
                          balance, C(0.0, 0.0), std::abs(balance)});
    }
    return checks;
}

}  // namespace qsphere
