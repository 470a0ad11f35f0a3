#include "qsphere/zalgebra.hpp"

#include <mutex>
#include <sstream>
#include <utility>

namespace qsphere {

std::string FuncMonomial::to_string() const {
    if (m == 0 && a == 0 && b == 0) return "1";
    std::string out;
    auto app = [&out](const char* name, int e) {
        if (e == 0) return;
        if (!out.empty()) out += "*";
        out += name;
        if (e != 1) out += "^" + std::to_string(e);
    };
    app("rhoi", m);
    app("zb", a);
    app("z", b);
    return out;
}

FuncElement::FuncElement(Scalar c) {
    if (!c.is_zero()) t_.emplace(FuncMonomial{}, std::move(c));
}

void FuncElement::add_term(const FuncMonomial& mono, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = t_.try_emplace(mono, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

namespace {

// R3 reduction of a raw power triple into the canonical basis
void canonicalize_into(FuncElement& out, int m, int a, int b, const Scalar& coeff) {
    if (coeff.is_zero()) return;
    if (m >= 1 && a >= 1 && b >= 1) {
        canonicalize_into(out, m - 1, a - 1, b - 1, coeff * Scalar::q_pow(2 * (a - 1)));
        canonicalize_into(out, m, a - 1, b - 1, -coeff);
        return;
    }
    out.add_term(FuncMonomial{m, a, b}, coeff);
}

}  // namespace

FuncElement FuncElement::monomial(int m, int a, int b, Scalar coeff) {
    FuncElement e;
    canonicalize_into(e, m, a, b, coeff);
    return e;
}

FuncElement FuncElement::generator(ZGen g) {
    switch (g) {
        case ZGen::RhoInv: return monomial(1, 0, 0);
        case ZGen::Zbar: return monomial(0, 1, 0);
        case ZGen::Z: return monomial(0, 0, 1);
    }
    return {};
}

FuncElement FuncElement::rho() {
    FuncElement e = one();
    e.add_term(FuncMonomial{0, 1, 1}, Scalar::one());
    return e;
}

FuncElement FuncElement::operator+(const FuncElement& o) const {
    FuncElement r(*this);
    r += o;
    return r;
}

FuncElement FuncElement::operator-(const FuncElement& o) const {
    FuncElement r(*this);
    r -= o;
    return r;
}

FuncElement FuncElement::operator-() const {
    FuncElement r;
    for (const auto& [mono, c] : t_) r.t_.emplace(mono, -c);
    return r;
}

FuncElement& FuncElement::operator+=(const FuncElement& o) {
    for (const auto& [mono, c] : o.t_) add_term(mono, c);
    return *this;
}

FuncElement& FuncElement::operator-=(const FuncElement& o) {
    for (const auto& [mono, c] : o.t_) add_term(mono, -c);
    return *this;
}

FuncElement FuncElement::scaled(const Scalar& c) const {
    FuncElement r;
    if (c.is_zero()) return r;
    for (const auto& [mono, x] : t_) r.t_.emplace(mono, x * c);
    return r;
}

FuncElement FuncElement::pow(unsigned e) const {
    FuncElement acc = one();
    for (unsigned i = 0; i < e; ++i) acc = mul(acc, *this);
    return acc;
}

int FuncElement::max_total_degree() const {
    int d = 0;
    for (const auto& [mono, c] : t_) d = std::max(d, mono.total_degree());
    return d;
}

std::string FuncElement::to_string() const {
    if (t_.empty()) return "0";
    std::string out;
    for (const auto& [mono, c] : t_) {
        std::string cs = c.to_string();
        // only single-term coefficients may donate their sign to the join
        bool negated = cs.find(' ') == std::string::npos && cs.size() > 1 && cs[0] == '-';
        if (out.empty()) {
            if (negated) { out += "-"; cs = cs.substr(1); }
        } else {
            out += negated ? " - " : " + ";
            if (negated) cs = cs.substr(1);
        }
        bool composite = cs.find(' ') != std::string::npos;
        std::string coeff_part = composite ? "(" + cs + ")" : cs;
        std::string mono_part = mono.to_string();
        if (mono_part == "1") out += coeff_part;
        else if (coeff_part == "1") out += mono_part;
        else out += coeff_part + "*" + mono_part;
    }
    return out;
}

FuncElement mul_gen(ZGen g, const FuncElement& x) {
    FuncElement out;
    for (const auto& [mono, c] : x.terms()) {
        switch (g) {
            case ZGen::RhoInv:
                canonicalize_into(out, mono.m + 1, mono.a, mono.b, c);
                break;
            case ZGen::Zbar:
                // zb * rhoi^m = q^-2m rhoi^m * zb
                canonicalize_into(out, mono.m, mono.a + 1, mono.b, c * Scalar::q_pow(-2 * mono.m));
                break;
            case ZGen::Z: {
                // z * rhoi^m = q^2m rhoi^m z ; then
                // z * zb^a = q^-2a zb^a z + (q^-2a - 1) zb^(a-1)
                Scalar base = c * Scalar::q_pow(2 * mono.m);
                canonicalize_into(out, mono.m, mono.a, mono.b + 1,
                                  base * Scalar::q_pow(-2 * mono.a));
                if (mono.a >= 1)
                    canonicalize_into(out, mono.m, mono.a - 1, mono.b,
                                      base * (Scalar::q_pow(-2 * mono.a) - Scalar::one()));
                break;
            }
        }
    }
    return out;
}

namespace {

// memoized product of two canonical monomials
FuncElement mono_product(const FuncMonomial& x, const FuncMonomial& y) {
    using Key = std::pair<FuncMonomial, FuncMonomial>;
    static std::map<Key, FuncElement> cache;
    static std::mutex cache_mutex;
    Key key{x, y};
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    FuncElement part;
    part.add_term(y, Scalar::one());
    for (int i = 0; i < x.b; ++i) part = mul_gen(ZGen::Z, part);
    for (int i = 0; i < x.a; ++i) part = mul_gen(ZGen::Zbar, part);
    for (int i = 0; i < x.m; ++i) part = mul_gen(ZGen::RhoInv, part);
    std::lock_guard<std::mutex> lock(cache_mutex);
    return cache.emplace(key, std::move(part)).first->second;
}

}  // namespace

FuncElement mul(const FuncElement& x, const FuncElement& y) {
    FuncElement out;
    for (const auto& [mx, cx] : x.terms())
        for (const auto& [my, cy] : y.terms()) out += mono_product(mx, my).scaled(cx * cy);
    return out;
}

FuncElement normalize_word(const std::vector<ZGen>& word, FoldStrategy strategy) {
    if (strategy == FoldStrategy::RightToLeft) {
        FuncElement acc = FuncElement::one();
        for (auto it = word.rbegin(); it != word.rend(); ++it) acc = mul_gen(*it, acc);
        return acc;
    }
    FuncElement acc = FuncElement::one();
    for (ZGen g : word) acc = mul(acc, FuncElement::generator(g));
    return acc;
}

FuncElement star_func(const FuncElement& x) {
    // (rhoi^m zb^a z^b)* = z^a zb^b rhoi^m = q^(2m(a-b)) rhoi^m zb^b z^a
    FuncElement out;
    for (const auto& [mono, c] : x.terms())
        out.add_term(FuncMonomial{mono.m, mono.b, mono.a}, c * Scalar::q_pow(2 * mono.m * (mono.a - mono.b)));
    return out;
}

FuncElement bar_swap(const FuncElement& x) {
    FuncElement out;
    for (const auto& [mono, c] : x.terms()) {
        // phi(rhoi^m zb^a z^b) = q^(2m) rhoi^m z^a zb^b, coefficients s -> 1/s
        FuncElement part = FuncElement::monomial(0, mono.b, 0);
        for (int i = 0; i < mono.a; ++i) part = mul_gen(ZGen::Z, part);
        for (int i = 0; i < mono.m; ++i) part = mul_gen(ZGen::RhoInv, part);
        out += part.scaled(c.bar() * Scalar::q_pow(2 * mono.m));
    }
    return out;
}

PodlesGenerators podles_generators() {
    const Scalar q = Scalar::q_pow(1);
    const Scalar qi = Scalar::q_pow(-1);
    PodlesGenerators g;
    // candidates: b3 = 1 - q^2 rhoi, b- = -q z rhoi, b+ = q^2 zb rhoi
    g.b_3 = FuncElement::one() - FuncElement::monomial(1, 0, 0, q * q);
    g.b_minus = mul(FuncElement::generator(ZGen::Z), FuncElement::generator(ZGen::RhoInv)).scaled(-q);
    g.b_plus = mul(FuncElement::generator(ZGen::Zbar), FuncElement::generator(ZGen::RhoInv)).scaled(q * q);

    auto check = [](const FuncElement& lhs, const FuncElement& rhs, const char* name) {
        if (!(lhs == rhs))
            throw VerificationFailure(std::string("podles generator relation failed: ") + name);
    };
    const auto& bm = g.b_minus;
    const auto& bp = g.b_plus;
    const auto& b3 = g.b_3;
    // b3 b- = (1 - q^-2) b- + q^-2 b- b3
    check(mul(b3, bm), bm.scaled(Scalar::one() - qi * qi) + mul(bm, b3).scaled(qi * qi), "Eq1");
    // b3 b+ = b+ (1 - q^2) + q^2 b+ b3
    check(mul(b3, bp), bp.scaled(Scalar::one() - q * q) + mul(bp, b3).scaled(q * q), "Eq2");
    // q^-2 b- b+ = q^2 b+ b- + (q^-1 - q)(b3 - 1)
    check(mul(bm, bp).scaled(qi * qi),
          mul(bp, bm).scaled(q * q) + (b3 - FuncElement::one()).scaled(qi - q), "Eq3");
    // b3^2 = b3 + q^-1 b- b+
    check(mul(b3, b3), b3 + mul(bm, bp).scaled(qi), "Eq4");
    // star structure: b-* = -q b+, b+* = -q^-1 b-, b3* = b3
    check(star_func(bm), bp.scaled(-q), "star b-");
    check(star_func(bp), bm.scaled(-qi), "star b+");
    check(star_func(b3), b3, "star b3");
    return g;
}

std::vector<FuncMonomial> canonical_basis(int max_degree) {
    std::vector<FuncMonomial> basis;
    for (int m = 0; m <= max_degree; ++m)
        for (int a = 0; a + m <= max_degree; ++a)
            for (int b = 0; a + b + m <= max_degree; ++b) {
                FuncMonomial mono{m, a, b};
                if (mono.is_canonical()) basis.push_back(mono);
            }
    return basis;
}

}  // namespace qsphere
