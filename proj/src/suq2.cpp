#include "qsphere/suq2.hpp"

#include <complex>

namespace qsphere {

namespace {

// convention sign: QPlus uses q, QMinus the mirror 1/q
int conv_sign(SUConvention c) { return c == SUConvention::QPlus ? 1 : -1; }

Scalar Qpow(SUConvention c, int e) { return Scalar::q_pow(conv_sign(c) * e); }

}  // namespace

std::string SUMonomial::to_string() const {
    if (ad == 0 && j == 0 && k == 0) return "1";
    std::string out;
    auto app = [&out](const char* name, int e) {
        if (e == 0) return;
        if (!out.empty()) out += "*";
        out += name;
        if (e != 1) out += "^" + std::to_string(e);
    };
    if (ad > 0) app("alpha", ad);
    if (ad < 0) app("delta", -ad);
    app("beta", j);
    app("gamma", k);
    return out;
}

SUq2Element::SUq2Element(Scalar c) {
    if (!c.is_zero()) t_.emplace(SUMonomial{}, std::move(c));
}

SUq2Element SUq2Element::generator(SUGen g) {
    SUMonomial m;
    switch (g) {
        case SUGen::Alpha: m.ad = 1; break;
        case SUGen::Delta: m.ad = -1; break;
        case SUGen::Beta: m.j = 1; break;
        case SUGen::BetaInv: m.j = -1; break;
        case SUGen::Gamma: m.k = 1; break;
        case SUGen::GammaInv: m.k = -1; break;
    }
    return monomial(m);
}

SUq2Element SUq2Element::monomial(const SUMonomial& m, Scalar c) {
    SUq2Element e;
    e.add_term(m, c);
    return e;
}

void SUq2Element::add_term(const SUMonomial& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = t_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

SUq2Element SUq2Element::operator+(const SUq2Element& o) const {
    SUq2Element r(*this);
    r += o;
    return r;
}

SUq2Element SUq2Element::operator-(const SUq2Element& o) const {
    SUq2Element r(*this);
    for (const auto& [m, c] : o.t_) r.add_term(m, -c);
    return r;
}

SUq2Element SUq2Element::operator-() const {
    SUq2Element r;
    for (const auto& [m, c] : t_) r.t_.emplace(m, -c);
    return r;
}

SUq2Element& SUq2Element::operator+=(const SUq2Element& o) {
    for (const auto& [m, c] : o.t_) add_term(m, c);
    return *this;
}

SUq2Element SUq2Element::scaled(const Scalar& c) const {
    SUq2Element r;
    if (c.is_zero()) return r;
    for (const auto& [m, x] : t_) r.t_.emplace(m, x * c);
    return r;
}

std::string SUq2Element::to_string() const {
    if (t_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : t_) {
        if (!out.empty()) out += " + ";
        std::string cs = c.to_string();
        if (cs.find(' ') != std::string::npos) cs = "(" + cs + ")";
        std::string ms = m.to_string();
        out += (ms == "1") ? cs : (cs == "1" ? ms : cs + "*" + ms);
    }
    return out;
}

namespace {

// normal form of the mixed block alpha^i delta^d (alpha_first) or
// delta^d alpha^i (otherwise), using the determinant relations
SUq2Element reduce_mixed(int i, int d, bool alpha_first, SUConvention conv) {
    if (i == 0 || d == 0) {
        SUMonomial m;
        m.ad = i > 0 ? i : -d;
        return SUq2Element::monomial(m);
    }
    SUq2Element inner = reduce_mixed(i - 1, d - 1, alpha_first, conv);
    // alpha delta = 1 + Q beta gamma; the beta gamma pair is appended on the
    // right after crossing the remaining block
    Scalar factor = alpha_first ? Qpow(conv, 1) * Qpow(conv, 2 * (d - 1))
                                : Qpow(conv, -1) * Qpow(conv, -2 * (i - 1));
    SUq2Element out = inner;
    for (const auto& [m, c] : inner.terms()) {
        SUMonomial shifted = m;
        ++shifted.j;
        ++shifted.k;
        out.add_term(shifted, c * factor);
    }
    return out;
}

}  // namespace

SUq2Element mul(const SUq2Element& x, const SUq2Element& y, SUConvention conv) {
    SUq2Element out;
    for (const auto& [m1, c1] : x.terms()) {
        for (const auto& [m2, c2] : y.terms()) {
            int p2 = m2.ad > 0 ? m2.ad : 0;
            int d2 = m2.ad < 0 ? -m2.ad : 0;
            // move the alpha/delta block of m2 left past beta^j1 gamma^k1
            Scalar factor = c1 * c2 * Qpow(conv, (m1.j + m1.k) * (d2 - p2));
            int i1 = m1.ad > 0 ? m1.ad : 0;
            int d1 = m1.ad < 0 ? -m1.ad : 0;
            SUq2Element block;
            if (d1 == 0 && d2 == 0) {
                block = SUq2Element::monomial(SUMonomial{i1 + p2, 0, 0});
            } else if (i1 == 0 && p2 == 0) {
                block = SUq2Element::monomial(SUMonomial{-(d1 + d2), 0, 0});
            } else if (i1 > 0 && d2 > 0) {
                // alpha^i1 delta^d2
                block = reduce_mixed(i1, d2, true, conv);
            } else {
                // delta^d1 alpha^p2
                block = reduce_mixed(p2, d1, false, conv);
            }
            for (const auto& [mb, cb] : block.terms()) {
                SUMonomial m = mb;
                m.j += m1.j + m2.j;
                m.k += m1.k + m2.k;
                out.add_term(m, factor * cb);
            }
        }
    }
    return out;
}

SUq2Element normalize_suq2(const std::vector<SUGen>& word, SUConvention conv,
                           FoldStrategy strategy) {
    SUq2Element acc = SUq2Element::one();
    if (strategy == FoldStrategy::RightToLeft) {
        for (auto it = word.rbegin(); it != word.rend(); ++it)
            acc = mul(SUq2Element::generator(*it), acc, conv);
    } else {
        for (SUGen g : word) acc = mul(acc, SUq2Element::generator(g), conv);
    }
    return acc;
}

SUq2Element star_suq2(const SUq2Element& x, SUConvention conv) {
    SUq2Element out;
    for (const auto& [m, c] : x.terms()) {
        // (block beta^j gamma^k)* = (-Q^-1 beta)^k (-Q gamma)^j (block)*;
        // moving the starred block back to the left collects Q^(ad (j+k))
        SUMonomial sm;
        sm.ad = -m.ad;
        sm.j = m.k;
        sm.k = m.j;
        int sign = ((m.j + m.k) % 2 == 0) ? 1 : -1;
        Scalar factor = Qpow(conv, m.j - m.k) * Qpow(conv, m.ad * (m.j + m.k));
        if (sign < 0) factor = -factor;
        out.add_term(sm, c * factor);
    }
    return out;
}

StereographicElements stereographic_elements(SUConvention conv) {
    StereographicElements s;
    auto nz = [conv](const std::vector<SUGen>& w) { return normalize_suq2(w, conv); };
    s.z_img = nz({SUGen::Alpha, SUGen::GammaInv});
    s.zb_img = -nz({SUGen::Delta, SUGen::BetaInv});
    s.b_minus = nz({SUGen::Alpha, SUGen::Beta});
    s.b_plus = nz({SUGen::Gamma, SUGen::Delta});
    s.b_3 = nz({SUGen::Alpha, SUGen::Delta});

    const Scalar q = Scalar::q_pow(1);
    const Scalar qi = Scalar::q_pow(-1);
    auto prod = [conv](const SUq2Element& a, const SUq2Element& b) { return mul(a, b, conv); };
    auto check = [](const SUq2Element& lhs, const SUq2Element& rhs, const char* name) {
        if (!(lhs == rhs))
            throw VerificationFailure(std::string("stereographic identity failed: ") + name);
    };
    const auto& z = s.z_img;
    const auto& zb = s.zb_img;
    // z zb = q^-2 zb z + q^-2 - 1
    check(prod(z, zb), prod(zb, z).scaled(qi * qi) + SUq2Element(qi * qi - Scalar::one()),
          "z zb relation");
    // the b's satisfy the sphere relations
    const auto& bm = s.b_minus;
    const auto& bp = s.b_plus;
    const auto& b3 = s.b_3;
    check(prod(b3, bm), bm.scaled(Scalar::one() - qi * qi) + prod(bm, b3).scaled(qi * qi), "Eq1");
    check(prod(b3, bp), bp.scaled(Scalar::one() - q * q) + prod(bp, b3).scaled(q * q), "Eq2");
    check(prod(bm, bp).scaled(qi * qi),
          prod(bp, bm).scaled(q * q) + (b3 - SUq2Element::one()).scaled(qi - q), "Eq3");
    check(prod(b3, b3), b3 + prod(bm, bp).scaled(qi), "Eq4");
    // denominator-cleared projection identities
    SUq2Element one_minus_b3 = SUq2Element::one() - b3;
    check(prod(z, one_minus_b3), bm.scaled(-q), "z (1 - b3) = -q b-");
    check(prod(zb, one_minus_b3), bp, "zb (1 - b3) = b+");
    // star structure
    check(star_suq2(z, conv), zb, "z* = zb");
    check(star_suq2(bm, conv), bp.scaled(-q), "b-* = -q b+");
    check(star_suq2(bp, conv), bm.scaled(-qi), "b+* = -q^-1 b-");
    check(star_suq2(b3, conv), b3, "b3* = b3");
    return s;
}

SUConvention select_convention() {
    for (SUConvention conv : {SUConvention::QPlus, SUConvention::QMinus}) {
        try {
            stereographic_elements(conv);
            return conv;
        } catch (const VerificationFailure&) {
            continue;
        }
    }
    throw VerificationFailure("no convention preset reproduces the sphere relations");
}

SUq2Element embed_sphere_element(const FuncElement& f, SUConvention conv) {
    StereographicElements s = stereographic_elements(conv);
    // rhoi = -q^-1 beta gamma (inverse of rho = -q beta^-1 gamma^-1)
    SUq2Element rhoi_img =
        normalize_suq2({SUGen::Beta, SUGen::Gamma}, conv).scaled(-Scalar::q_pow(-1));
    SUq2Element out;
    for (const auto& [mono, c] : f.terms()) {
        SUq2Element part = SUq2Element::one();
        for (int t = 0; t < mono.m; ++t) part = mul(part, rhoi_img, conv);
        for (int t = 0; t < mono.a; ++t) part = mul(part, s.zb_img, conv);
        for (int t = 0; t < mono.b; ++t) part = mul(part, s.z_img, conv);
        out += part.scaled(c);
    }
    return out;
}

// --- coaction ------------------------------------------------------------

namespace {

// element of the tensor product of two commuting copies; first factor is
// the transformation copy (a, b, c, d), second the original
struct TensorElement {
    std::map<std::pair<SUMonomial, SUMonomial>, Scalar> t;

    void add(const SUMonomial& p, const SUMonomial& u, const Scalar& c) {
        if (c.is_zero()) return;
        auto key = std::make_pair(p, u);
        auto [it, inserted] = t.try_emplace(key, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) t.erase(it);
        }
    }
    bool is_zero() const { return t.empty(); }

    TensorElement scaled_by(const Scalar& c) const {
        TensorElement out;
        for (const auto& [k, v] : t) out.add(k.first, k.second, v * c);
        return out;
    }
};

TensorElement tsum(const TensorElement& x, const TensorElement& y) {
    TensorElement out = x;
    for (const auto& [k, c] : y.t) out.add(k.first, k.second, c);
    return out;
}

TensorElement tmul(const TensorElement& x, const TensorElement& y, SUConvention conv) {
    TensorElement out;
    for (const auto& [k1, c1] : x.t) {
        for (const auto& [k2, c2] : y.t) {
            SUq2Element p = mul(SUq2Element::monomial(k1.first), SUq2Element::monomial(k2.first),
                                conv);
            SUq2Element u = mul(SUq2Element::monomial(k1.second), SUq2Element::monomial(k2.second),
                                conv);
            for (const auto& [pm, pc] : p.terms())
                for (const auto& [um, uc] : u.terms()) out.add(pm, um, c1 * c2 * pc * uc);
        }
    }
    return out;
}

TensorElement tsub(const TensorElement& x, const TensorElement& y) {
    TensorElement out = x;
    for (const auto& [k, c] : y.t) out.add(k.first, k.second, -c);
    return out;
}

TensorElement tensor_gen(SUGen primed, SUGen unprimed) {
    TensorElement e;
    SUMonomial p, u;
    auto set = [](SUMonomial& m, SUGen g) {
        switch (g) {
            case SUGen::Alpha: m.ad = 1; break;
            case SUGen::Delta: m.ad = -1; break;
            case SUGen::Beta: m.j = 1; break;
            case SUGen::Gamma: m.k = 1; break;
            default: break;
        }
    };
    set(p, primed);
    set(u, unprimed);
    e.add(p, u, Scalar::one());
    return e;
}

TensorElement tensor_scalar(const Scalar& c) {
    TensorElement e;
    e.add(SUMonomial{}, SUMonomial{}, c);
    return e;
}

}  // namespace

void coaction_homomorphism_check(SUConvention conv) {
    auto t2 = [&](SUGen a, SUGen b, SUGen c, SUGen d) {
        TensorElement x = tensor_gen(a, b);
        TensorElement y = tensor_gen(c, d);
        for (const auto& [k, v] : y.t) x.add(k.first, k.second, v);
        return x;
    };
    // doubled generators of the left transformation
    TensorElement A = t2(SUGen::Alpha, SUGen::Alpha, SUGen::Beta, SUGen::Gamma);
    TensorElement B = t2(SUGen::Alpha, SUGen::Beta, SUGen::Beta, SUGen::Delta);
    TensorElement C = t2(SUGen::Gamma, SUGen::Alpha, SUGen::Delta, SUGen::Gamma);
    TensorElement D = t2(SUGen::Gamma, SUGen::Beta, SUGen::Delta, SUGen::Delta);

    const Scalar Q = Qpow(conv, 1);
    auto expect_zero = [&](const TensorElement& e, const char* name) {
        if (!e.is_zero())
            throw VerificationFailure(std::string("coaction relation failed: ") + name);
    };
    auto M = [&](const TensorElement& x, const TensorElement& y) { return tmul(x, y, conv); };
    expect_zero(tsub(M(A, B), M(B, A).scaled_by(Q)), "alpha beta");
    expect_zero(tsub(M(A, C), M(C, A).scaled_by(Q)), "alpha gamma");
    expect_zero(tsub(M(B, C), M(C, B)), "beta gamma");
    expect_zero(tsub(M(B, D), M(D, B).scaled_by(Q)), "beta delta");
    expect_zero(tsub(M(C, D), M(D, C).scaled_by(Q)), "gamma delta");
    expect_zero(tsub(M(A, D), tsum(tensor_scalar(Scalar::one()), M(B, C).scaled_by(Q))),
                "alpha delta determinant");
    expect_zero(tsub(M(D, A), tsum(tensor_scalar(Scalar::one()),
                                   M(B, C).scaled_by(Qpow(conv, -1)))),
                "delta alpha determinant");
}

void classical_mobius_check(double tol) {
    using C = std::complex<double>;
    struct Mat { C a, b, c, d; };
    auto apply = [](const Mat& g, C z) { return (g.a * z + g.b) / (g.c * z + g.d); };
    auto compose = [](const Mat& g, const Mat& h) {
        return Mat{g.a * h.a + g.b * h.c, g.a * h.b + g.b * h.d, g.c * h.a + g.d * h.c,
                   g.c * h.b + g.d * h.d};
    };
    Mat id{1, 0, 0, 1};
    Mat g1{C(2, 0), C(1, 0), C(3, 0), C(2, 0)};            // det 1
    Mat g2{C(1, 0), C(0, -1), C(0, -0.5), C(0.5, 0)};      // det 1
    C samples[10] = {{0.1, 0.2}, {1.0, -0.3}, {-0.7, 0.4}, {2.0, 1.0}, {0.0, 1.0},
                     {-1.5, -0.5}, {0.3, 0.0}, {0.0, -2.0}, {1.1, 1.7}, {-0.2, 0.9}};
    for (C z : samples) {
        if (std::abs(apply(id, z) - z) > tol)
            throw VerificationFailure("identity matrix does not act trivially");
        C lhs = apply(g1, apply(g2, z));
        C rhs = apply(compose(g1, g2), z);
        if (std::abs(lhs - rhs) > tol)
            throw VerificationFailure("Mobius action fails composition at sample point");
    }
}

}  // namespace qsphere
