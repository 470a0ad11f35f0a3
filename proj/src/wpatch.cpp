#include "qsphere/wpatch.hpp"

namespace qsphere {

RationalRho::RationalRho(Scalar c) {
    if (!c.is_zero()) laurent_.emplace(0, std::move(c));
}

RationalRho RationalRho::rho_pow(int k, Scalar c) {
    RationalRho f;
    f.add_laurent(k, c);
    return f;
}

RationalRho RationalRho::pole(int j, int r, Scalar c) {
    RationalRho f;
    f.add_pole(j, r, c);
    return f;
}

void RationalRho::add_laurent(int k, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = laurent_.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) laurent_.erase(it);
    }
}

void RationalRho::add_pole(int j, int r, const Scalar& c) {
    if (c.is_zero()) return;
    auto key = std::make_pair(j, r);
    auto [it, inserted] = poles_.try_emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) poles_.erase(it);
    }
}

RationalRho RationalRho::operator+(const RationalRho& o) const {
    RationalRho r(*this);
    r += o;
    return r;
}

RationalRho RationalRho::operator-(const RationalRho& o) const {
    RationalRho r(*this);
    for (const auto& [k, c] : o.laurent_) r.add_laurent(k, -c);
    for (const auto& [k, c] : o.poles_) r.add_pole(k.first, k.second, -c);
    return r;
}

RationalRho RationalRho::operator-() const {
    RationalRho r;
    for (const auto& [k, c] : laurent_) r.laurent_.emplace(k, -c);
    for (const auto& [k, c] : poles_) r.poles_.emplace(k, -c);
    return r;
}

RationalRho& RationalRho::operator+=(const RationalRho& o) {
    for (const auto& [k, c] : o.laurent_) add_laurent(k, c);
    for (const auto& [k, c] : o.poles_) add_pole(k.first, k.second, c);
    return *this;
}

RationalRho RationalRho::scaled(const Scalar& c) const {
    RationalRho r;
    if (c.is_zero()) return r;
    for (const auto& [k, x] : laurent_) r.laurent_.emplace(k, x * c);
    for (const auto& [k, x] : poles_) r.poles_.emplace(k, x * c);
    return r;
}

RationalRho RationalRho::shifted(int t) const {
    RationalRho r;
    for (const auto& [k, c] : laurent_) r.add_laurent(k, c * Scalar::q_pow(2 * t * k));
    // (q^(2t) rho - q^(2j))^-r = q^(-2tr) (rho - q^(2(j-t)))^-r
    for (const auto& [key, c] : poles_)
        r.add_pole(key.first - t, key.second, c * Scalar::q_pow(-2 * t * key.second));
    return r;
}

namespace {

// value of the pole location: q^(2j)
Scalar pole_loc(int j) { return Scalar::q_pow(2 * j); }

// multiply a partial-fraction element by one factor (rho - u)^-1 where
// u = 0 (at_zero) or u = q^(2j)
RationalRho mul_single_pole_at(const RationalRho& f, bool at_zero, int j) {
    RationalRho out;
    const Scalar u = at_zero ? Scalar::zero() : pole_loc(j);
    // laurent terms
    for (const auto& [k, c] : f.laurent()) {
        if (at_zero) {
            out.add_laurent(k - 1, c);
            continue;
        }
        if (k >= 0) {
            // rho^k = (rho-u) Q(rho) + u^k with Q = sum u^(k-1-i) rho^i
            out.add_pole(j, 1, c * u.pow(k));
            Scalar upow = Scalar::one();
            for (int i = k - 1; i >= 0; --i) {
                out.add_laurent(i, c * upow);
                upow *= u;
            }
        } else {
            // S(t) = rho^-t (rho-u)^-1 = (1/u) [ S(t-1) - rho^-t ]
            Scalar inv_u = u.inverse();
            RationalRho cur = RationalRho::pole(j, 1);
            for (int step = 1; step <= -k; ++step) {
                cur.add_laurent(-step, -Scalar::one());
                cur = cur.scaled(inv_u);
            }
            out += cur.scaled(c);
        }
    }
    // pole terms
    for (const auto& [key, c] : f.poles()) {
        int pj = key.first, pr = key.second;
        if (!at_zero && pj == j) {
            out.add_pole(j, pr + 1, c);
            continue;
        }
        // T(t) = (rho-v)^-t (rho-u)^-1 = (1/(u-v)) [ T(t-1) - (rho-v)^-t ]
        const Scalar v = pole_loc(pj);
        Scalar inv_diff = (u - v).inverse();
        RationalRho cur = at_zero ? RationalRho::rho_pow(-1) : RationalRho::pole(j, 1);
        for (int step = 1; step <= pr; ++step) {
            cur += RationalRho::pole(pj, step, -Scalar::one());
            cur = cur.scaled(inv_diff);
        }
        out += cur.scaled(c);
    }
    return out;
}

}  // namespace

RationalRho mul(const RationalRho& x, const RationalRho& y) {
    RationalRho out;
    // distribute y over x term by term; multiplication in rho is commutative
    for (const auto& [k, c] : y.laurent()) {
        // multiply x by c * rho^k
        RationalRho part;
        if (k >= 0) {
            for (const auto& [k2, c2] : x.laurent()) part.add_laurent(k2 + k, c2 * c);
            for (const auto& [key, c2] : x.poles()) {
                // rho^k (rho-u)^-r: peel one power of rho at a time:
                // rho (rho-u)^-r = (rho-u)^-(r-1) + u (rho-u)^-r
                RationalRho cur = RationalRho::pole(key.first, key.second, c2 * c);
                const Scalar u = pole_loc(key.first);
                for (int step = 0; step < k; ++step) {
                    RationalRho next;
                    for (const auto& [kk, cc] : cur.laurent()) next.add_laurent(kk + 1, cc);
                    for (const auto& [kk, cc] : cur.poles()) {
                        if (kk.second == 1) next.add_laurent(0, cc);
                        else next.add_pole(kk.first, kk.second - 1, cc);
                        next.add_pole(kk.first, kk.second, cc * u);
                    }
                    cur = next;
                }
                part += cur;
            }
        } else {
            part = x.scaled(c);
            for (int step = 0; step < -k; ++step) part = mul_single_pole_at(part, true, 0);
        }
        out += part;
    }
    for (const auto& [key, c] : y.poles()) {
        RationalRho part = x.scaled(c);
        for (int step = 0; step < key.second; ++step)
            part = mul_single_pole_at(part, false, key.first);
        out += part;
    }
    return out;
}

RationalRho::NumDen RationalRho::reconstruct() const {
    NumDen nd;
    // denominator
    for (const auto& [k, c] : laurent_)
        if (k < 0) nd.zero_pole_order = std::max(nd.zero_pole_order, -k);
    for (const auto& [key, c] : poles_) {
        auto [it, inserted] = nd.pole_orders.try_emplace(key.first, key.second);
        if (!inserted) it->second = std::max(it->second, key.second);
    }
    // numerator as polynomial in rho with Scalar coefficients
    auto poly_mul = [](const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
        std::vector<Scalar> r(a.size() + b.size() - 1, Scalar::zero());
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
        return r;
    };
    auto den_without = [&](int skip_zero, int skip_j, int skip_r) {
        // product rho^(k0 - skip_zero) * prod (rho - q^2j)^(r_j - skip)
        std::vector<Scalar> acc{Scalar::one()};
        int zp = nd.zero_pole_order - skip_zero;
        for (int i = 0; i < zp; ++i) acc = poly_mul(acc, {Scalar::zero(), Scalar::one()});
        for (const auto& [j, r] : nd.pole_orders) {
            int rr = r - (j == skip_j ? skip_r : 0);
            for (int i = 0; i < rr; ++i)
                acc = poly_mul(acc, {-pole_loc(j), Scalar::one()});
        }
        return acc;
    };
    std::vector<Scalar> num{Scalar::zero()};
    auto add_into = [&num](const std::vector<Scalar>& p, int shift) {
        if (num.size() < p.size() + shift) num.resize(p.size() + shift, Scalar::zero());
        for (std::size_t i = 0; i < p.size(); ++i) num[i + shift] += p[i];
    };
    for (const auto& [k, c] : laurent_) {
        // c rho^k contributes c rho^(k + zero_pole_order) * prod(...)
        std::vector<Scalar> p = den_without(nd.zero_pole_order, 0, 0);
        for (auto& x : p) x *= c;
        add_into(p, k + nd.zero_pole_order);
    }
    for (const auto& [key, c] : poles_) {
        std::vector<Scalar> p = den_without(0, key.first, key.second);
        for (auto& x : p) x *= c;
        add_into(p, 0);
    }
    while (num.size() > 1 && num.back().is_zero()) num.pop_back();
    nd.num = std::move(num);
    return nd;
}

RatFun RationalRho::classical_u(int pole_order) const {
    NumDen nd = reconstruct();
    // rho = (1+u)/u: rho^i -> (1+u)^i u^(deg-i) after clearing u^deg
    // numerator degree in rho:
    int dn = static_cast<int>(nd.num.size()) - 1;
    int dd = nd.zero_pole_order;
    for (const auto& [j, r] : nd.pole_orders) dd += r;
    int top = std::max(dn, dd);

    Poly u_poly = Poly::monomial(1);
    Poly one_plus_u = Poly(std::vector<Rational>{Rational(1), Rational(1)});

    Poly num_u;
    for (int i = 0; i <= dn; ++i) {
        Rational ci = nd.num[i].classical_limit(pole_order);
        if (ci == 0) continue;
        num_u = num_u + (one_plus_u.pow(i) * u_poly.pow(top - i)).scaled(ci);
    }
    // denominator: rho^k -> (1+u)^k u^(top-k) etc. with every classical pole
    // location q^(2j) -> 1: (rho - q^(2j)) -> (1+u)/u - 1 = 1/u
    Poly den_u = Poly(Rational(1));
    // rho^zero_pole_order:
    den_u = den_u * one_plus_u.pow(nd.zero_pole_order);
    int total_pole = 0;
    for (const auto& [j, r] : nd.pole_orders) total_pole += r;
    // (1/u)^total_pole handled by u-power bookkeeping:
    // den(rho) = rho^k0 * prod(rho - loc)^r -> (1+u)^k0 u^-k0 * u^-total_pole
    // clearing u^top in numerator means den picks u^(top - k0 - total_pole):
    int du = top - nd.zero_pole_order - total_pole;
    if (du >= 0) den_u = den_u * u_poly.pow(du);
    else num_u = num_u * u_poly.pow(-du);
    return RatFun(num_u, den_u);
}

std::string RationalRho::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    auto push = [&out](const std::string& piece) {
        if (!out.empty()) out += " + ";
        out += piece;
    };
    for (const auto& [k, c] : laurent_) {
        std::string cs = c.to_string();
        if (cs.find(' ') != std::string::npos) cs = "(" + cs + ")";
        if (k == 0) push(cs);
        else {
            std::string p = "rho^" + std::to_string(k);
            push(cs == "1" ? p : cs + "*" + p);
        }
    }
    for (const auto& [key, c] : poles_) {
        std::string cs = c.to_string();
        if (cs.find(' ') != std::string::npos) cs = "(" + cs + ")";
        std::string base = "(rho - q^" + std::to_string(2 * key.first) + ")^-" +
                           std::to_string(key.second);
        push(cs == "1" ? base : cs + "*" + base);
    }
    return out;
}

// --- LocalElement ---------------------------------------------------------

LocalElement LocalElement::z_pow(int b, RationalRho f) {
    LocalElement e;
    e.add_term(LKey{b, 0, 0}, f);
    return e;
}

LocalElement LocalElement::form(int eps, int epsbar, RationalRho f) {
    LocalElement e;
    e.add_term(LKey{0, eps, epsbar}, f);
    return e;
}

void LocalElement::add_term(const LKey& k, const RationalRho& f) {
    if (f.is_zero()) return;
    auto [it, inserted] = t_.try_emplace(k, f);
    if (!inserted) {
        it->second += f;
        if (it->second.is_zero()) t_.erase(it);
    }
}

LocalElement LocalElement::operator+(const LocalElement& o) const {
    LocalElement r(*this);
    r += o;
    return r;
}

LocalElement LocalElement::operator-(const LocalElement& o) const {
    LocalElement r(*this);
    for (const auto& [k, f] : o.t_) r.add_term(k, -f);
    return r;
}

LocalElement LocalElement::operator-() const {
    LocalElement r;
    for (const auto& [k, f] : t_) r.t_.emplace(k, -f);
    return r;
}

LocalElement& LocalElement::operator+=(const LocalElement& o) {
    for (const auto& [k, f] : o.t_) add_term(k, f);
    return *this;
}

LocalElement LocalElement::scaled(const Scalar& c) const {
    LocalElement r;
    if (c.is_zero()) return r;
    for (const auto& [k, f] : t_) r.t_.emplace(k, f.scaled(c));
    return r;
}

std::string LocalElement::to_string() const {
    if (t_.empty()) return "0";
    std::string out;
    for (const auto& [k, f] : t_) {
        if (!out.empty()) out += " + ";
        out += "(" + f.to_string() + ")";
        if (k.b != 0) out += " * z^" + std::to_string(k.b);
        if (k.eps) out += " * dz";
        if (k.epsbar) out += " * dzb";
    }
    return out;
}

LocalElement mul(const LocalElement& x, const LocalElement& y) {
    LocalElement out;
    for (const auto& [k1, f1] : x.terms()) {
        for (const auto& [k2, f2] : y.terms()) {
            // zero by (dz)^2 = (dzb)^2 = 0
            if ((k1.eps && k2.eps) || (k1.epsbar && k2.epsbar)) continue;
            // move forms of k1 right past f2(rho) (free) and z^(k2.b)
            Scalar factor = Scalar::q_pow(2 * k2.b * (k1.eps + k1.epsbar));
            // dzb dz = -q^2 dz dzb
            if (k1.epsbar && k2.eps) factor = factor * (-Scalar::q_pow(2));
            // move z^(k1.b) past f2
            RationalRho coeff = mul(f1, f2.shifted(-k1.b));
            out.add_term(LKey{k1.b + k2.b, k1.eps | k2.eps, k1.epsbar | k2.epsbar},
                         coeff.scaled(factor));
        }
    }
    return out;
}

LocalElement embed(const FuncElement& f) {
    // zb = (rho - 1) z^-1
    const LocalElement zb_loc = LocalElement::z_pow(
        -1, RationalRho::rho_pow(1) + RationalRho(-Scalar::one()));
    LocalElement out;
    for (const auto& [mono, c] : f.terms()) {
        LocalElement part(RationalRho::rho_pow(-mono.m));
        for (int t = 0; t < mono.a; ++t) part = mul(part, zb_loc);
        if (mono.b != 0) part = mul(part, LocalElement::z_pow(mono.b));
        out += part.scaled(c);
    }
    return out;
}

LocalElement embed(const FormElement& w) {
    LocalElement out = embed(w.coeff(F_ONE));
    out += mul(embed(w.coeff(F_DZ)), LocalElement::form(1, 0));
    out += mul(embed(w.coeff(F_DZB)), LocalElement::form(0, 1));
    out += mul(embed(w.coeff(F_DZDZB)),
               mul(LocalElement::form(1, 0), LocalElement::form(0, 1)));
    return out;
}

WGenerators w_generators() {
    WGenerators g;
    g.w = LocalElement::z_pow(-1);
    // wb = zb^-1 = z (rho - 1)^-1 = q^2 (rho - q^2)^-1 z
    g.wb = LocalElement::z_pow(1, RationalRho::pole(1, 1, Scalar::q_pow(2)));
    // dw = -q^-2 z^-2 dz
    g.dw = LocalElement();
    g.dw.add_term(LKey{-2, 1, 0}, RationalRho(-Scalar::q_pow(-2)));
    // dwb from the graded Leibniz rule: dwb = -wb dzb wb
    g.dwb = -mul(g.wb, mul(LocalElement::form(0, 1), g.wb));
    return g;
}

std::vector<ClassicalWTerm> classical_w_form(const LocalElement& x, int pole_order) {
    std::vector<ClassicalWTerm> out;
    for (const auto& [k, f] : x.terms()) {
        ClassicalWTerm term;
        term.coeff_u = f.classical_u(pole_order);
        term.t = -k.b;  // z^b = w^-b
        term.dw = k.eps;
        term.dwb = k.epsbar;
        // dz = -w^-2 dw, dzb = -wb^-2 dwb = -(w^2/u^2) dwb
        if (k.eps) {
            term.coeff_u = -term.coeff_u;
            term.t -= 2;
        }
        if (k.epsbar) {
            term.coeff_u = -term.coeff_u / RatFun::monomial(2);
            term.t += 2;
        }
        if (!term.coeff_u.is_zero()) out.push_back(term);
    }
    return out;
}

WPatchReport xi_in_w() {
    XiForms forms = xi_forms();
    WGenerators g = w_generators();

    // (1 + wb w)^-1 = 1 - q^2 rho^-1
    LocalElement one_plus_wbw = LocalElement::one() + mul(g.wb, g.w);
    LocalElement inv_expected(RationalRho::rho_pow(0) +
                              RationalRho::rho_pow(-1, -Scalar::q_pow(2)));
    if (mul(one_plus_wbw, inv_expected) != LocalElement::one())
        throw VerificationFailure("(1 + wb w)^-1 closed form is wrong");

    const LocalElement w_inv = LocalElement::z_pow(1);
    LocalElement rhs_xi =
        mul(w_inv, mul(g.dw, inv_expected)).scaled(-Scalar::q_pow(1));
    if (embed(forms.xi) != rhs_xi)
        throw VerificationFailure("xi closed form in w fails: expected -q w^-1 dw (1+wb w)^-1");

    // wb^-1 = embed(zb)
    LocalElement wb_inv = embed(FuncElement::generator(ZGen::Zbar));
    if (mul(g.wb, wb_inv) != LocalElement::one() || mul(wb_inv, g.wb) != LocalElement::one())
        throw VerificationFailure("wb^-1 is not inverse to wb");
    LocalElement rhs_xistar =
        mul(inv_expected, mul(g.dwb, wb_inv)).scaled(-Scalar::q_pow(1));
    if (embed(forms.xi_star) != rhs_xistar)
        throw VerificationFailure("xi* closed form in w fails");

    WPatchReport report;
    // pole structure of Xi at the north pole w = wb = 0
    auto terms = classical_w_form(embed(forms.Xi));
    for (const auto& term : terms) {
        int val = term.coeff_u.valuation_at_zero();
        if (val < 0 || val + term.t < 0) report.xi_pole_at_origin = true;
    }
    // dXi is regular; its dw dwb coefficient at the origin:
    auto dterms = classical_w_form(embed(forms.dXi));
    report.dxi_regular_at_origin = true;
    report.dxi_value_at_origin = 0;
    for (const auto& term : dterms) {
        int val = term.coeff_u.valuation_at_zero();
        if (val < 0 || val + term.t < 0) report.dxi_regular_at_origin = false;
        if (term.dw && term.dwb && term.t == 0 && val == 0) {
            // value of the coefficient function at u = 0, sign adjusted to
            // the dwb dw ordering
            Rational v = term.coeff_u.eval(Rational(0));
            report.dxi_value_at_origin += -v;  // dw dwb = -dwb dw
        }
    }
    if (!report.xi_pole_at_origin)
        throw VerificationFailure("Xi should be singular at the north pole");
    if (!report.dxi_regular_at_origin)
        throw VerificationFailure("dXi should be regular at the north pole");
    return report;
}

void verify_w_relations(int max_power) {
    WGenerators g = w_generators();
    const Scalar q2 = Scalar::q_pow(2);

    // w wb = q^-2 wb w + (q^-2 - 1) w wb^2 w
    LocalElement lhs = mul(g.w, g.wb);
    LocalElement rhs = mul(g.wb, g.w).scaled(Scalar::q_pow(-2)) +
                       mul(g.w, mul(g.wb, mul(g.wb, g.w)))
                           .scaled(Scalar::q_pow(-2) - Scalar::one());
    if (lhs != rhs) throw VerificationFailure("w wb commutation relation fails");

    // w dw = q^2 dw w
    if (mul(g.w, g.dw) != mul(g.dw, g.w).scaled(q2))
        throw VerificationFailure("w dw = q^2 dw w fails");

    // dz w = q^-2 w dz
    LocalElement dz = LocalElement::form(1, 0);
    if (mul(dz, g.w) != mul(g.w, dz).scaled(Scalar::q_pow(-2)))
        throw VerificationFailure("dz w = q^-2 w dz fails");

    // wb dwb = q^-2 dwb wb (mirror relation, derived)
    if (mul(g.wb, g.dwb) != mul(g.dwb, g.wb).scaled(Scalar::q_pow(-2)))
        throw VerificationFailure("wb dwb relation fails");

    // derivative on the w subalgebra: with d = dw del_w + ... the rule
    // del_w w = 1 + q^2 w del_w forces del_w(w^n) = [n]_q w^(n-1);
    // check via d(w^n) computed by the Leibniz rule in the localization
    LocalElement d_wn;  // d(w^n)
    LocalElement wn = LocalElement::one();
    for (int n = 1; n <= max_power; ++n) {
        // d(w^n) = dw w^(n-1) + w d(w^(n-1))
        d_wn = mul(g.dw, wn) + mul(g.w, d_wn);
        wn = mul(g.w, wn);
        LocalElement wn1 = LocalElement::one();
        for (int t = 0; t < n - 1; ++t) wn1 = mul(g.w, wn1);
        LocalElement expected = mul(g.dw, wn1).scaled(qint(n));
        if (d_wn != expected)
            throw VerificationFailure("del_w(w^n) != [n]_q w^(n-1) at n = " + std::to_string(n));
    }
}

}  // namespace qsphere
