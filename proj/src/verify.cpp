#include "qsphere/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "qsphere/expression.hpp"
#include "qsphere/integration.hpp"

namespace qsphere {

namespace {

struct Ctx {
    VerifyOptions opts;
    std::mt19937_64 rng;
    explicit Ctx(const VerifyOptions& o) : opts(o), rng(o.seed) {}

    int uniform(int lo, int hi) {
        return static_cast<int>(std::uniform_int_distribution<int>(lo, hi)(rng));
    }

    Scalar rand_scalar() {
        int num = uniform(-3, 3);
        if (num == 0) num = 1;
        return Scalar::of_rational(Rational(num, uniform(1, 3))) * Scalar::s_pow(uniform(-4, 4));
    }

    FuncMonomial rand_monomial(int max_deg = 3) {
        while (true) {
            FuncMonomial m{uniform(0, max_deg), uniform(0, max_deg), uniform(0, max_deg)};
            if (m.total_degree() <= max_deg) {
                if (m.m >= 1 && m.a >= 1 && m.b >= 1) m.b = 0;
                return m;
            }
        }
    }

    FuncElement rand_func(int terms = 2, int max_deg = 3) {
        FuncElement f;
        for (int i = 0; i < terms; ++i) f.add_term(rand_monomial(max_deg), rand_scalar());
        return f;
    }

    FormElement rand_form(int max_deg = 2) {
        FormElement w;
        w.coeff(uniform(0, 3)) = rand_func(1, max_deg);
        return w;
    }

    std::vector<ZGen> rand_zword(int max_len = 8) {
        std::vector<ZGen> w(uniform(1, max_len));
        for (auto& g : w) g = static_cast<ZGen>(uniform(0, 2));
        return w;
    }

    std::vector<VAtom> rand_vword(int max_len = 6) {
        std::vector<VAtom> w(uniform(1, max_len));
        for (auto& a : w) {
            if (uniform(0, 1)) a = static_cast<VGen>(uniform(0, 2));
            else a = static_cast<CalcGen>(uniform(0, 4));
        }
        return w;
    }

    std::vector<SUGen> rand_suword(int max_len = 8) {
        std::vector<SUGen> w(uniform(1, max_len));
        for (auto& g : w) g = static_cast<SUGen>(uniform(0, 5));
        return w;
    }
};

class Suite {
public:
    explicit Suite(std::string name) { report_.suite = std::move(name); }

    void check(const std::string& id, const std::string& anchor,
               const std::function<std::optional<std::string>()>& fn) {
        VerifyRow row;
        row.id = id;
        row.anchor = anchor;
        try {
            auto counter = fn();
            row.passed = !counter.has_value();
            if (counter) row.counterexample = *counter;
        } catch (const EngineError& e) {
            row.passed = false;
            row.counterexample = std::string(e.code()) + ": " + e.what();
        }
        (row.passed ? report_.passed : report_.failed)++;
        report_.rows.push_back(std::move(row));
    }

    template <typename T>
    void equal(const std::string& id, const std::string& anchor, const T& lhs, const T& rhs) {
        check(id, anchor, [&]() -> std::optional<std::string> {
            if (lhs == rhs) return std::nullopt;
            return "lhs = " + lhs.to_string() + " ; rhs = " + rhs.to_string();
        });
    }

    VerifyReport take() { return std::move(report_); }

private:
    VerifyReport report_;
};

// ---------------------------------------------------------------- zalgebra

VerifyReport suite_zalgebra(Ctx& ctx) {
    Suite s("zalgebra");
    const FuncElement z = FuncElement::generator(ZGen::Z);
    const FuncElement zb = FuncElement::generator(ZGen::Zbar);
    const FuncElement rhoi = FuncElement::generator(ZGen::RhoInv);
    const FuncElement rho = FuncElement::rho();
    const Scalar qi2 = Scalar::q_pow(-2);

    s.equal("zz-relation", "z*zb = q^-2*zb*z + (q^-2 - 1)", mul(z, zb),
            mul(zb, z).scaled(qi2) + FuncElement(qi2 - Scalar::one()));
    s.equal("rho-inverse", "rhoi*(1 + zb*z) = 1", mul(rhoi, rho), FuncElement::one());
    s.equal("rho-inverse-right", "(1 + zb*z)*rhoi = 1", mul(rho, rhoi), FuncElement::one());
    // derivation obligations for the derived rules: clear rhoi with rho
    s.equal("R2-z-obligation", "(z*rhoi)*rho = z = (q^2*rhoi*z)*rho",
            mul(mul(z, rhoi), rho), mul(mul(rhoi, z).scaled(Scalar::q_pow(2)), rho));
    s.equal("R2-zb-obligation", "(zb*rhoi)*rho = zb = (q^-2*rhoi*zb)*rho",
            mul(mul(zb, rhoi), rho), mul(mul(rhoi, zb).scaled(qi2), rho));
    s.equal("R3-example", "rhoi*zb*z = 1 - rhoi", mul(rhoi, mul(zb, z)),
            FuncElement::one() - rhoi);
    s.equal("R3-obligation", "(1 - rhoi)*rho = zb*z", mul(FuncElement::one() - rhoi, rho),
            mul(zb, z));

    // Podles generators and their relations
    s.check("podles-verified", "b3 = 1 - q^2*rhoi, b- = -q*z*rhoi, b+ = q^2*zb*rhoi",
            []() -> std::optional<std::string> {
                podles_generators();
                return std::nullopt;
            });
    PodlesGenerators g = podles_generators();
    const Scalar q = Scalar::q_pow(1);
    s.equal("podles-eq1", "b3*b- = (1 - q^-2)*b- + q^-2*b-*b3", mul(g.b_3, g.b_minus),
            g.b_minus.scaled(Scalar::one() - qi2) + mul(g.b_minus, g.b_3).scaled(qi2));
    s.equal("podles-eq2", "b3*b+ = (1 - q^2)*b+ + q^2*b+*b3", mul(g.b_3, g.b_plus),
            g.b_plus.scaled(Scalar::one() - q * q) + mul(g.b_plus, g.b_3).scaled(q * q));
    s.equal("podles-eq3", "q^-2*b-*b+ = q^2*b+*b- + (q^-1 - q)*(b3 - 1)",
            mul(g.b_minus, g.b_plus).scaled(qi2),
            mul(g.b_plus, g.b_minus).scaled(q * q) +
                (g.b_3 - FuncElement::one()).scaled(Scalar::q_pow(-1) - q));
    s.equal("podles-eq4", "b3^2 = b3 + q^-1*b-*b+", mul(g.b_3, g.b_3),
            g.b_3 + mul(g.b_minus, g.b_plus).scaled(Scalar::q_pow(-1)));
    s.equal("podles-star", "star(b-) = -q*b+", star_func(g.b_minus), g.b_plus.scaled(-q));

    // star and bar-swap structure on random elements
    s.check("star-involution", "star(star(x)) = x", [&]() -> std::optional<std::string> {
        for (int i = 0; i < 50; ++i) {
            FuncElement x = ctx.rand_func();
            if (star_func(star_func(x)) != x) return x.to_string();
        }
        return std::nullopt;
    });
    s.check("star-antihom", "star(x*y) = star(y)*star(x)", [&]() -> std::optional<std::string> {
        for (int i = 0; i < 50; ++i) {
            FuncElement x = ctx.rand_func(), y = ctx.rand_func();
            if (star_func(mul(x, y)) != mul(star_func(y), star_func(x)))
                return x.to_string() + " ; " + y.to_string();
        }
        return std::nullopt;
    });
    s.check("barswap-hom", "phi(x*y) = phi(x)*phi(y)", [&]() -> std::optional<std::string> {
        for (int i = 0; i < 50; ++i) {
            FuncElement x = ctx.rand_func(), y = ctx.rand_func();
            if (bar_swap(mul(x, y)) != mul(bar_swap(x), bar_swap(y)))
                return x.to_string() + " ; " + y.to_string();
        }
        return std::nullopt;
    });
    s.check("barswap-involution", "phi(phi(x)) = x", [&]() -> std::optional<std::string> {
        for (int i = 0; i < 50; ++i) {
            FuncElement x = ctx.rand_func();
            if (bar_swap(bar_swap(x)) != x) return x.to_string();
        }
        return std::nullopt;
    });
    s.equal("barswap-preserves-zz", "phi maps z*zb - q^-2*zb*z - (q^-2-1) to zero",
            bar_swap(mul(z, zb) - mul(zb, z).scaled(qi2) - FuncElement(qi2 - Scalar::one())),
            FuncElement::zero());
    s.equal("barswap-rhoi", "phi(rhoi) = q^2*rhoi", bar_swap(rhoi),
            rhoi.scaled(Scalar::q_pow(2)));

    s.check("confluence", "fold-order independence of word normalization",
            [&]() -> std::optional<std::string> {
                for (int i = 0; i < ctx.opts.random_words; ++i) {
                    auto w = ctx.rand_zword();
                    if (normalize_word(w, FoldStrategy::LeftToRight) !=
                        normalize_word(w, FoldStrategy::RightToLeft)) {
                        std::string desc;
                        for (ZGen t : w)
                            desc += (t == ZGen::Z ? "z " : t == ZGen::Zbar ? "zb " : "rhoi ");
                        return desc;
                    }
                }
                return std::nullopt;
            });
    s.check("associativity", "x*(y*w) = (x*y)*w", [&]() -> std::optional<std::string> {
        for (int i = 0; i < 50; ++i) {
            FuncElement x = ctx.rand_func(), y = ctx.rand_func(), w = ctx.rand_func();
            if (mul(x, mul(y, w)) != mul(mul(x, y), w)) return x.to_string();
        }
        return std::nullopt;
    });
    return s.take();
}

// ---------------------------------------------------------------- calculus

VerifyReport suite_calculus(Ctx& ctx) {
    Suite s("calculus");
    const Scalar q2 = Scalar::q_pow(2), qi2 = Scalar::q_pow(-2);
    auto nf = [](std::vector<CalcGen> w) { return normalize_form(w); };
    using CG = CalcGen;

    s.equal("z-dz", "z*dz = q^-2*dz*z", nf({CG::Z, CG::Dz}), nf({CG::Dz, CG::Z}).scaled(qi2));
    s.equal("zb-dz", "zb*dz = q^2*dz*zb", nf({CG::Zbar, CG::Dz}),
            nf({CG::Dz, CG::Zbar}).scaled(q2));
    s.equal("z-dzb", "z*dzb = q^-2*dzb*z", nf({CG::Z, CG::Dzbar}),
            nf({CG::Dzbar, CG::Z}).scaled(qi2));
    s.equal("zb-dzb", "zb*dzb = q^2*dzb*zb", nf({CG::Zbar, CG::Dzbar}),
            nf({CG::Dzbar, CG::Zbar}).scaled(q2));
    s.equal("dz-sq", "dz*dz = 0", nf({CG::Dz, CG::Dz}), FormElement::zero());
    s.equal("dzb-sq", "dzb*dzb = 0", nf({CG::Dzbar, CG::Dzbar}), FormElement::zero());
    s.equal("dz-dzb", "dz*dzb = -q^-2*dzb*dz", nf({CG::Dz, CG::Dzbar}),
            nf({CG::Dzbar, CG::Dz}).scaled(-qi2));
    s.equal("dz-rhoi", "dz*rhoi = rhoi*dz", nf({CG::Dz, CG::RhoInv}), nf({CG::RhoInv, CG::Dz}));

    const DiffOp del = DiffOp::del(), delb = DiffOp::delbar();
    const DiffOp zo = DiffOp(FuncElement::generator(ZGen::Z));
    const DiffOp zbo = DiffOp(FuncElement::generator(ZGen::Zbar));
    s.equal("del-z", "del*z = 1 + q^-2*z*del", mul(del, zo),
            DiffOp::identity() + mul(zo, del).scaled(qi2));
    s.equal("del-zb", "del*zb = q^2*zb*del", mul(del, zbo), mul(zbo, del).scaled(q2));
    s.equal("delb-z", "delb*z = q^-2*z*delb", mul(delb, zo), mul(zo, delb).scaled(qi2));
    s.equal("delb-zb", "delb*zb = 1 + q^2*zb*delb", mul(delb, zbo),
            DiffOp::identity() + mul(zbo, delb).scaled(q2));
    s.equal("del-delb", "del*delb = q^-2*delb*del", mul(del, delb), mul(delb, del).scaled(qi2));

    // derived rhoi rules carry their clearing obligations
    const DiffOp rhoio = DiffOp(FuncElement::generator(ZGen::RhoInv));
    const DiffOp rhoo = DiffOp(FuncElement::rho());
    DiffOp del_rhoi = mul(rhoio, del) - DiffOp(mul(FuncElement::generator(ZGen::Zbar),
                                                   FuncElement::monomial(2, 0, 0))
                                                   .scaled(Scalar::q_pow(4)));
    s.equal("del-rhoi", "del*rhoi = rhoi*del - q^4*zb*rhoi^2", mul(del, rhoio), del_rhoi);
    s.equal("del-rhoi-obligation", "(del*rhoi)*rho = del", mul(mul(del, rhoio), rhoo), del);
    DiffOp delb_rhoi = mul(rhoio, delb) - DiffOp(mul(FuncElement::generator(ZGen::Z),
                                                     FuncElement::monomial(2, 0, 0))
                                                     .scaled(Scalar::q_pow(-2)));
    s.equal("delb-rhoi", "delb*rhoi = rhoi*delb - q^-2*z*rhoi^2", mul(delb, rhoio), delb_rhoi);
    s.equal("delb-rhoi-obligation", "(delb*rhoi)*rho = delb", mul(mul(delb, rhoio), rhoo), delb);

    s.check("action-examples", "del(z) = 1, delb(z) = 0, del(z^2) = (1+q^-2)*z",
            [&]() -> std::optional<std::string> {
                FuncElement zf = FuncElement::generator(ZGen::Z);
                if (apply_diffop(del, zf) != FuncElement::one()) return "del(z)";
                if (apply_diffop(delb, zf) != FuncElement::zero()) return "delb(z)";
                if (apply_diffop(del, mul(zf, zf)) !=
                    zf.scaled(Scalar::one() + qi2))
                    return "del(z^2)";
                return std::nullopt;
            });

    s.check("d-squared", "d(d(f)) = 0 on canonical monomials", [&]() -> std::optional<std::string> {
        for (const FuncMonomial& mono : canonical_basis(ctx.opts.max_degree)) {
            FuncElement f;
            f.add_term(mono, Scalar::one());
            if (!exterior_d(exterior_d(FormElement(f))).is_zero()) return mono.to_string();
        }
        for (int i = 0; i < 200; ++i) {
            FuncElement f = ctx.rand_func();
            if (!exterior_d(exterior_d(FormElement(f))).is_zero()) return f.to_string();
        }
        return std::nullopt;
    });
    s.check("graded-leibniz", "d(x*y) = d(x)*y +/- x*d(y)", [&]() -> std::optional<std::string> {
        for (int i = 0; i < 60; ++i) {
            FormElement x = ctx.rand_form(), y = ctx.rand_form();
            int gx = x.grade();
            if (gx < 0) continue;
            int sign = (gx % 2 == 0) ? 1 : -1;
            FormElement rhs = mul(exterior_d(x), y);
            FormElement xdy = mul(x, exterior_d(y));
            rhs += sign > 0 ? xdy : -xdy;
            if (exterior_d(mul(x, y)) != rhs) return x.to_string() + " ; " + y.to_string();
        }
        return std::nullopt;
    });

    // delta / deltabar split
    const FormElement zf = FormElement(FuncElement::generator(ZGen::Z));
    const FormElement zbf = FormElement(FuncElement::generator(ZGen::Zbar));
    s.check("delta-commutators",
            "[delta, z] = dz, [delta, zb] = 0, [deltab, z] = 0, [deltab, zb] = dzb",
            [&]() -> std::optional<std::string> {
                for (int i = 0; i < 20; ++i) {
                    FormElement f = ctx.rand_form();
                    if (delta(mul(zf, f)) - mul(zf, delta(f)) != mul(FormElement::dz(), f))
                        return "[delta, z] on " + f.to_string();
                    if (delta(mul(zbf, f)) != mul(zbf, delta(f)))
                        return "[delta, zb] on " + f.to_string();
                    if (deltabar(mul(zf, f)) != mul(zf, deltabar(f)))
                        return "[deltab, z] on " + f.to_string();
                    if (deltabar(mul(zbf, f)) - mul(zbf, deltabar(f)) !=
                        mul(FormElement::dzb(), f))
                        return "[deltab, zb] on " + f.to_string();
                }
                return std::nullopt;
            });
    s.check("delta-split", "delta + deltab = d, delta^2 = deltab^2 = {delta, deltab} = 0",
            [&]() -> std::optional<std::string> {
                for (const FuncMonomial& mono : canonical_basis(4)) {
                    FuncElement f;
                    f.add_term(mono, Scalar::one());
                    FormElement w(f);
                    auto [hol, antih] = delta_split(w);
                    if (hol + antih != exterior_d(w)) return "split " + mono.to_string();
                    if (!delta(delta(w)).is_zero()) return "delta^2 " + mono.to_string();
                    if (!deltabar(deltabar(w)).is_zero()) return "deltab^2 " + mono.to_string();
                    if (!(delta(deltabar(w)) + deltabar(delta(w))).is_zero())
                        return "{delta, deltab} " + mono.to_string();
                }
                return std::nullopt;
            });

    // star structures
    s.check("star-sphere-closed-forms",
            "star(del) = -q^-2*delb + (1+q^-2)*z*rhoi ; star(delb) = -q^2*del + (1+q^2)*rhoi*zb",
            [&]() -> std::optional<std::string> {
                DiffOp sd = star_diffop(del, StarVariant::Sphere);
                DiffOp expected =
                    delb.scaled(-qi2) +
                    DiffOp(mul(FuncElement::generator(ZGen::Z),
                               FuncElement::generator(ZGen::RhoInv))
                               .scaled(Scalar::one() + qi2));
                if (sd != expected) return sd.to_string();
                return std::nullopt;
            });
    s.check("star-sphere-involution", "star(star(D)) = D", [&]() -> std::optional<std::string> {
        for (const DiffOp& d0 : {del, delb, mul(del, delb), mul(zo, del)}) {
            if (star_diffop(star_diffop(d0, StarVariant::Sphere), StarVariant::Sphere) != d0)
                return d0.to_string();
        }
        return std::nullopt;
    });
    s.check("star-plane-involution", "plane star: star(star(D)) = D",
            [&]() -> std::optional<std::string> {
                for (const DiffOp& d0 : {del, delb, mul(del, del)}) {
                    if (star_diffop(star_diffop(d0, StarVariant::Plane), StarVariant::Plane) != d0)
                        return d0.to_string();
                }
                return std::nullopt;
            });
    s.check("star-maps-relations", "star(A*B) = star(B)*star(A) for generator pairs",
            [&]() -> std::optional<std::string> {
                const DiffOp gens[] = {del, delb, zo, zbo, rhoio};
                for (StarVariant v : {StarVariant::Sphere, StarVariant::Plane}) {
                    for (const DiffOp& a : gens)
                        for (const DiffOp& b : gens)
                            if (star_diffop(mul(a, b), v) !=
                                mul(star_diffop(b, v), star_diffop(a, v)))
                                return a.to_string() + " ; " + b.to_string();
                }
                return std::nullopt;
            });

    // gauge derivatives
    s.check("gauge-n0", "del^(0) = del", []() -> std::optional<std::string> {
        auto [dn, dbn] = gauge_derivative(0);
        if (dn != DiffOp::del() || dbn != DiffOp::delbar()) return "n = 0";
        return std::nullopt;
    });
    s.check("gauge-n1-closed-form", "del^(1) = q^4*del - q^2*(1+q^2)*rhoi*zb",
            [&]() -> std::optional<std::string> {
                auto [dn, dbn] = gauge_derivative(1);
                DiffOp expected =
                    del.scaled(Scalar::q_pow(4)) +
                    DiffOp(mul(FuncElement::generator(ZGen::RhoInv),
                               FuncElement::generator(ZGen::Zbar))
                               .scaled(-q2 * (Scalar::one() + q2)));
                if (dn != expected) return dn.to_string();
                return std::nullopt;
            });
    s.check("gauge-z-relation", "del^(n)*z = 1 + q^-2*z*del^(n) for n <= 3",
            [&]() -> std::optional<std::string> {
                for (int n = 0; n <= 3; ++n) {
                    auto [dn, dbn] = gauge_derivative(n);
                    if (mul(dn, zo) != DiffOp::identity() + mul(zo, dn).scaled(qi2))
                        return "n = " + std::to_string(n);
                    if (mul(dbn, zbo) != DiffOp::identity() + mul(zbo, dbn).scaled(q2))
                        return "n = " + std::to_string(n) + " (delb)";
                }
                return std::nullopt;
            });

    // the bar symmetry extends to operators as a homomorphism with
    // phi(del) = delb; it carries each derivative rule to its partner
    s.check("barswap-derivative-rules", "phi(X*Y) = phi(X)*phi(Y), phi(del) = delb",
            [&]() -> std::optional<std::string> {
                auto diffop_bar = [](const DiffOp& d) {
                    DiffOp out;
                    for (const auto& [k, c] : d.terms()) {
                        FuncElement f;
                        f.add_term(k.mono, Scalar::one());
                        FuncElement mapped = bar_swap(f);
                        // delb^c del^d reordered to del^d delb^c
                        Scalar cross = Scalar::q_pow(2 * k.dc * k.dd);
                        for (const auto& [m2, c2] : mapped.terms())
                            out.add_term(DiffKey{m2, k.dd, k.dc}, c.bar() * c2 * cross);
                    }
                    return out;
                };
                const DiffOp gens[] = {DiffOp::del(), DiffOp::delbar(),
                                       DiffOp(FuncElement::generator(ZGen::Z)),
                                       DiffOp(FuncElement::generator(ZGen::Zbar)),
                                       DiffOp(FuncElement::generator(ZGen::RhoInv))};
                for (const DiffOp& a : gens) {
                    if (diffop_bar(diffop_bar(a)) != a) return "involution on " + a.to_string();
                    for (const DiffOp& b : gens)
                        if (diffop_bar(mul(a, b)) != mul(diffop_bar(a), diffop_bar(b)))
                            return a.to_string() + " ; " + b.to_string();
                }
                return std::nullopt;
            });
    return s.take();
}

// ---------------------------------------------------------------- xi

VerifyReport suite_xi(Ctx& ctx) {
    Suite s("xi");
    s.check("xi-closed-forms", "dXi = 2q*dzb*rhoi^2*dz ; Xi^2 = q*lambda*dzb*rhoi^2*dz ; Xi* = -Xi",
            []() -> std::optional<std::string> {
                xi_forms();
                return std::nullopt;
            });
    XiForms x = xi_forms();
    const Scalar lam = Scalar::lambda();

    s.check("xi-derivation-property", "Xi*f - f*Xi = lambda*d(f) on canonical monomials",
            [&]() -> std::optional<std::string> {
                for (const FuncMonomial& mono : canonical_basis(ctx.opts.max_degree)) {
                    FuncElement f;
                    f.add_term(mono, Scalar::one());
                    FormElement fw(f);
                    if (mul(x.Xi, fw) - mul(fw, x.Xi) != exterior_d(fw).scaled(lam))
                        return mono.to_string();
                }
                return std::nullopt;
            });
    s.check("xi-odd-forms", "Xi*w + w*Xi = lambda*d(w) for odd forms",
            [&]() -> std::optional<std::string> {
                std::vector<FormElement> odds = {FormElement::dz(), FormElement::dzb()};
                for (int i = 0; i < 20; ++i)
                    odds.push_back(FormElement::basis(F_DZ, ctx.rand_func(1, 3)));
                for (const FormElement& w : odds) {
                    if (mul(x.Xi, w) + mul(w, x.Xi) != exterior_d(w).scaled(lam))
                        return w.to_string();
                }
                return std::nullopt;
            });
    s.check("xi-sq-central", "Xi^2 commutes with z, zb, rhoi, dz, dzb",
            [&x]() -> std::optional<std::string> {
                std::vector<FormElement> gens = {
                    FormElement(FuncElement::generator(ZGen::Z)),
                    FormElement(FuncElement::generator(ZGen::Zbar)),
                    FormElement(FuncElement::generator(ZGen::RhoInv)), FormElement::dz(),
                    FormElement::dzb()};
                for (const FormElement& g : gens)
                    if (mul(x.Xi_sq, g) != mul(g, x.Xi_sq)) return g.to_string();
                return std::nullopt;
            });
    s.equal("xi-star", "Xi* = -Xi", star_form(x.Xi), -x.Xi);
    return s.take();
}

// ---------------------------------------------------------------- vfields

VerifyReport suite_vfields(Ctx& ctx) {
    Suite s("vfields");
    using V = VGen;
    using CG = CalcGen;
    const Scalar q2 = Scalar::q_pow(2);
    auto nv = [](std::vector<VAtom> w) { return normalize_vf(w); };
    auto gen = [](V g) { return VectorOp::generator(g); };

    s.equal("HZp", "H*Zp = q^4*Zp*H + (1+q^2)*Zp", nv({V::H, V::Zp}),
            nv({V::Zp, V::H}).scaled(Scalar::q_pow(4)) + gen(V::Zp).scaled(Scalar::one() + q2));
    s.equal("ZmH", "Zm*H = q^4*H*Zm + (1+q^2)*Zm", nv({V::Zm, V::H}),
            nv({V::H, V::Zm}).scaled(Scalar::q_pow(4)) + gen(V::Zm).scaled(Scalar::one() + q2));
    s.equal("ZmZp", "q*Zp*Zm - q^-1*Zm*Zp = H",
            nv({V::Zp, V::Zm}).scaled(Scalar::q_pow(1)) -
                nv({V::Zm, V::Zp}).scaled(Scalar::q_pow(-1)),
            gen(V::H));

    // the six displayed actions
    struct ActionRow { V g; const char* name; CalcGen target; };
    s.check("actions", "Zp(z) = q^(1/2)*z^2, Zp(zb) = q^(-3/2), H(z) = (1+q^2)*z, "
                       "H(zb) = -q^-4*(1+q^2)*zb, Zm(z) = -q^(1/2), Zm(zb) = -q^(-3/2)*zb^2",
            []() -> std::optional<std::string> {
                const FuncElement z = FuncElement::generator(ZGen::Z);
                const FuncElement zb = FuncElement::generator(ZGen::Zbar);
                const Scalar q2l = Scalar::q_pow(2);
                if (vf_act(V::Zp, z) != mul(z, z).scaled(Scalar::q_half_pow(1))) return "Zp(z)";
                if (vf_act(V::Zp, zb) != FuncElement(Scalar::q_half_pow(-3))) return "Zp(zb)";
                if (vf_act(V::H, z) != z.scaled(Scalar::one() + q2l)) return "H(z)";
                if (vf_act(V::H, zb) !=
                    zb.scaled(-Scalar::q_pow(-4) * (Scalar::one() + q2l)))
                    return "H(zb)";
                if (vf_act(V::Zm, z) != FuncElement(-Scalar::q_half_pow(1))) return "Zm(z)";
                if (vf_act(V::Zm, zb) != mul(zb, zb).scaled(-Scalar::q_half_pow(-3)))
                    return "Zm(zb)";
                return std::nullopt;
            });

    // star consistency: star(X*Y) = star(Y)*star(X) sends each relation to
    // its partner (vect1 <-> vect2 among them)
    s.check("star-consistency", "star(Zp*z) = zb*Zm etc.", [&]() -> std::optional<std::string> {
        struct P { std::vector<VAtom> xy; std::vector<VAtom> star_xy; const char* name; };
        P pairs[] = {
            {{V::Zp, CG::Z}, {CG::Zbar, V::Zm}, "vect1 -> vect2"},
            {{V::Zp, CG::Zbar}, {CG::Z, V::Zm}, "Zp zb -> z Zm"},
            {{V::H, CG::Z}, {CG::Zbar, V::H}, "H z -> zb H"},
            {{V::H, V::Zp}, {V::Zm, V::H}, "HZp -> ZmH"},
            {{V::Zm, V::Zp}, {V::Zm, V::Zp}, "ZmZp -> ZmZp"},
        };
        for (const auto& p : pairs) {
            if (star_vf(nv(p.xy)) != nv(p.star_xy)) return std::string(p.name);
        }
        return std::nullopt;
    });

    // commutation with d on low-degree monomials
    s.check("d-compatibility", "O(d f) = d(O(f))", [&]() -> std::optional<std::string> {
        for (const FuncMonomial& mono : canonical_basis(std::min(4, ctx.opts.max_degree))) {
            FuncElement f;
            f.add_term(mono, Scalar::one());
            for (V g : {V::Zp, V::H, V::Zm}) {
                FormElement lhs = vf_act(VectorOp::generator(g), exterior_d(FormElement(f)));
                FormElement rhs = exterior_d(vf_act(VectorOp::generator(g), FormElement(f)));
                if (lhs != rhs)
                    return mono.to_string() + (g == V::Zp ? " Zp" : g == V::H ? " H" : " Zm");
            }
        }
        return std::nullopt;
    });

    // infinitesimal covariance of the algebra and calculus relations
    s.check("covariance-zz", "O(z*zb - q^-2*zb*z - (q^-2-1)) = 0",
            []() -> std::optional<std::string> {
                CoeffWord lhs = {{Scalar::one(), {CG::Z, CG::Zbar}}};
                CoeffWord rhs = {{Scalar::q_pow(-2), {CG::Zbar, CG::Z}},
                                 {Scalar::q_pow(-2) - Scalar::one(), {}}};
                return check_infinitesimal_covariance(lhs, rhs);
            });
    s.check("covariance-form-relations", "O(z*dz - q^-2*dz*z) = 0 and companions",
            []() -> std::optional<std::string> {
                struct Rel { std::vector<VAtom> lhs, rhs; Scalar factor; const char* name; };
                std::vector<Rel> rels = {
                    {{CG::Z, CG::Dz}, {CG::Dz, CG::Z}, Scalar::q_pow(-2), "z dz"},
                    {{CG::Zbar, CG::Dz}, {CG::Dz, CG::Zbar}, Scalar::q_pow(2), "zb dz"},
                    {{CG::Z, CG::Dzbar}, {CG::Dzbar, CG::Z}, Scalar::q_pow(-2), "z dzb"},
                    {{CG::Zbar, CG::Dzbar}, {CG::Dzbar, CG::Zbar}, Scalar::q_pow(2), "zb dzb"},
                    {{CG::Dz, CG::Dzbar}, {CG::Dzbar, CG::Dz}, -Scalar::q_pow(-2), "dz dzb"},
                };
                for (const auto& rel : rels) {
                    CoeffWord lhs = {{Scalar::one(), rel.lhs}};
                    CoeffWord rhs = {{rel.factor, rel.rhs}};
                    if (auto bad = check_infinitesimal_covariance(lhs, rhs))
                        return std::string(rel.name) + " under " + *bad;
                }
                return std::nullopt;
            });

    // interaction with Xi
    XiForms x = xi_forms();
    s.check("Zp-Xi", "Zp*Xi = Xi*Zp + q^(-1/2)*dz", [&x]() -> std::optional<std::string> {
        VectorOp lhs = mul(VectorOp::generator(V::Zp), VectorOp(x.Xi));
        VectorOp rhs = mul(VectorOp(x.Xi), VectorOp::generator(V::Zp)) +
                       VectorOp(FormElement::dz().scaled(Scalar::q_half_pow(-1)));
        if (lhs != rhs) return lhs.to_string();
        return std::nullopt;
    });
    s.check("H-Xi", "H*Xi = Xi*H", [&x]() -> std::optional<std::string> {
        VectorOp lhs = mul(VectorOp::generator(V::H), VectorOp(x.Xi));
        VectorOp rhs = mul(VectorOp(x.Xi), VectorOp::generator(V::H));
        if (lhs != rhs) return lhs.to_string();
        return std::nullopt;
    });
    s.check("dXi-invariant", "O(dXi) = 0 for O in {Zp, Zm, H}",
            [&x]() -> std::optional<std::string> {
                for (V g : {V::Zp, V::Zm, V::H})
                    if (!vf_act(VectorOp::generator(g), x.dXi).is_zero())
                        return std::string(g == V::Zp ? "Zp" : g == V::H ? "H" : "Zm");
                return std::nullopt;
            });

    s.check("pbw-confluence", "fold-order independence of smash words",
            [&]() -> std::optional<std::string> {
                int n = std::max(100, ctx.opts.random_words / 5);
                for (int i = 0; i < n; ++i) {
                    auto w = ctx.rand_vword();
                    if (normalize_vf(w, FoldStrategy::LeftToRight) !=
                        normalize_vf(w, FoldStrategy::RightToLeft))
                        return "word " + std::to_string(i);
                }
                return std::nullopt;
            });
    return s.take();
}

// ---------------------------------------------------------------- pseudodiff

VerifyReport suite_pseudodiff(Ctx& ctx) {
    Suite s("pseudodiff");
    BCDOps ops = build_bcd();
    const FuncElement one = FuncElement::one();
    const FuncElement zb = FuncElement::generator(ZGen::Zbar);
    const Scalar q2 = Scalar::q_pow(2);

    s.equal("B-on-1", "B(1) = 1", apply_diffop(ops.B, one), one);
    s.equal("B-on-zb", "B(zb) = q^2*zb", apply_diffop(ops.B, zb), zb.scaled(q2));
    s.equal("C-on-zb", "C(zb) = zb", apply_diffop(ops.C, zb), zb);

    s.check("filtered-inverses", "B(B^-1(f)) = f, C(C^-1(f)) = f, D(D^-1(f)) = f to degree 8",
            [&]() -> std::optional<std::string> {
                FilteredInverse Binv(ops.B, 8), Cinv(ops.C, 8), Dinv(ops.D, 8);
                for (int total = 0; total <= 8; ++total) {
                    for (int a = 0; a <= total; ++a) {
                        FuncElement f;
                        f.add_term(FuncMonomial{0, a, total - a}, Scalar::one());
                        if (apply_diffop(ops.B, Binv.apply(f)) != f) return "B at " + f.to_string();
                        if (apply_diffop(ops.C, Cinv.apply(f)) != f) return "C at " + f.to_string();
                        if (apply_diffop(ops.D, Dinv.apply(f)) != f) return "D at " + f.to_string();
                    }
                }
                return std::nullopt;
            });
    s.check("Binv-on-zb", "B^-1(zb) = q^-2*zb", [&]() -> std::optional<std::string> {
        FilteredInverse Binv(ops.B, 2);
        if (Binv.apply(zb) != zb.scaled(Scalar::q_pow(-2))) return "B^-1(zb)";
        return std::nullopt;
    });
    s.check("realizations", "pseudo-differential realizations of Zp, Zm, H and rho^2 del/delb",
            [&]() -> std::optional<std::string> {
                check_pseudodiff_realizations(std::min(5, ctx.opts.max_degree));
                return std::nullopt;
            });
    return s.take();
}

// ---------------------------------------------------------------- integration

VerifyReport suite_integration(Ctx& ctx) {
    Suite s("integration");
    (void)ctx;
    s.check("normalization", "<1> = 1", []() -> std::optional<std::string> {
        if (integrate_sphere(FuncElement::one()) != Scalar::one()) return "<1>";
        return std::nullopt;
    });
    s.check("rho-moments", "<rhoi^l> = 1/qint(l+1) for l <= 12",
            []() -> std::optional<std::string> {
                for (int l = 0; l <= 12; ++l) {
                    if (integrate_sphere(FuncElement::monomial(l, 0, 0)) !=
                        Scalar::one() / qint(l + 1))
                        return "l = " + std::to_string(l);
                }
                return std::nullopt;
            });
    s.check("invariance-recursion", "<Zp(zb*rhoi^l)> = 0 and the induced recursion, l <= 12",
            []() -> std::optional<std::string> {
                verify_invariance_recursion(12);
                return std::nullopt;
            });
    s.check("mixed-moments", "<zb*z*rhoi^l> = 1/qint(l) - 1/qint(l+1) for 2 <= l <= 12",
            []() -> std::optional<std::string> {
                const FuncElement zbz =
                    mul(FuncElement::generator(ZGen::Zbar), FuncElement::generator(ZGen::Z));
                for (int l = 2; l <= 12; ++l) {
                    Scalar lhs = integrate_sphere(mul(zbz, FuncElement::monomial(l, 0, 0)));
                    Scalar rhs = Scalar::one() / qint(l) - Scalar::one() / qint(l + 1);
                    if (lhs != rhs) return "l = " + std::to_string(l);
                }
                return std::nullopt;
            });
    s.check("charge-vanishing", "<zb*rhoi^2> = 0", []() -> std::optional<std::string> {
        Scalar v = integrate_sphere(
            mul(FuncElement::generator(ZGen::Zbar), FuncElement::monomial(2, 0, 0)));
        if (!v.is_zero()) return v.to_string();
        return std::nullopt;
    });
    s.check("invariance-sweep", "<O(f)> = 0 for integrable monomials with m <= 8",
            []() -> std::optional<std::string> {
                int checked = 0;
                for (int m = 0; m <= 8; ++m) {
                    for (int a = 0; a <= 4; ++a) {
                        for (int b = 0; b <= 4; ++b) {
                            FuncMonomial mono{m, a, b};
                            if (!mono.is_canonical() || !is_integrable_monomial(mono)) continue;
                            FuncElement f;
                            f.add_term(mono, Scalar::one());
                            for (VGen g : {VGen::Zp, VGen::Zm, VGen::H}) {
                                FuncElement image = vf_act(g, f);
                                bool in_domain = true;
                                for (const auto& [m2, c] : image.terms())
                                    if (!is_integrable_monomial(m2)) in_domain = false;
                                if (!in_domain) continue;
                                ++checked;
                                if (!integrate_sphere(image).is_zero())
                                    return mono.to_string();
                            }
                        }
                    }
                }
                if (checked < 30) return "sweep too small: " + std::to_string(checked);
                return std::nullopt;
            });
    s.check("H-charge", "<H(z*rhoi^3)> = 0 via both routes", []() -> std::optional<std::string> {
        FuncElement f = mul(FuncElement::generator(ZGen::Z), FuncElement::monomial(3, 0, 0));
        Scalar direct = integrate_sphere(vf_act(VGen::H, f));
        if (!direct.is_zero()) return direct.to_string();
        return std::nullopt;
    });
    s.check("star-compatibility", "<star(f)> = <f> for f = f*",
            []() -> std::optional<std::string> {
                // self-adjoint samples: rhoi^l and zb*z*rhoi^l
                for (int l = 2; l <= 6; ++l) {
                    FuncElement f = FuncElement::monomial(l, 0, 0);
                    if (integrate_sphere(star_func(f)) != integrate_sphere(f))
                        return "rhoi^" + std::to_string(l);
                    FuncElement g = mul(mul(FuncElement::generator(ZGen::Zbar),
                                            FuncElement::generator(ZGen::Z)),
                                        FuncElement::monomial(l, 0, 0));
                    if (star_func(g) != g) return "sample not self-adjoint";
                    if (integrate_sphere(star_func(g)) != integrate_sphere(g))
                        return "zb*z*rhoi^" + std::to_string(l);
                }
                return std::nullopt;
            });
    s.check("classical-limit", "lim <rhoi^l> = 1/(l+1)", []() -> std::optional<std::string> {
        for (int l = 0; l <= 12; ++l) {
            Rational lim = integrate_sphere(FuncElement::monomial(l, 0, 0)).classical_limit(0);
            if (lim != Rational(1, l + 1)) return "l = " + std::to_string(l);
        }
        return std::nullopt;
    });
    s.check("plane-rho4", "plane integral of rhoi^4 = 1/qint(3)",
            []() -> std::optional<std::string> {
                Scalar v = integrate_plane(FuncElement::monomial(4, 0, 0));
                if (v != Scalar::one() / qint(3)) return v.to_string();
                return std::nullopt;
            });
    s.check("plane-divergent", "plane integral of 1 raises NotIntegrable",
            []() -> std::optional<std::string> {
                try {
                    integrate_plane(FuncElement::one());
                } catch (const NotIntegrable&) {
                    return std::nullopt;
                }
                return "no error raised";
            });
    s.check("plane-translation-invariance",
            "plane integrals of del f and delb f vanish for the test family",
            []() -> std::optional<std::string> {
                std::vector<FuncElement> family;
                for (int l = 3; l <= 8; ++l) {
                    family.push_back(FuncElement::monomial(l, 0, 0));
                    family.push_back(mul(FuncElement::generator(ZGen::Zbar),
                                         FuncElement::monomial(l + 1, 0, 0)));
                    family.push_back(mul(FuncElement::generator(ZGen::Z),
                                         FuncElement::monomial(l + 1, 0, 0)));
                }
                verify_plane_translation_invariance(family);
                return std::nullopt;
            });
    return s.take();
}

// ---------------------------------------------------------------- suq2

VerifyReport suite_suq2(Ctx& ctx) {
    Suite s("suq2");
    s.check("convention-selection", "the q-preset reproducing the sphere relations is QPlus",
            []() -> std::optional<std::string> {
                if (select_convention() != SUConvention::QPlus) return "selected mirror preset";
                return std::nullopt;
            });
    s.check("stereographic", "z = alpha*gamma^-1, zb = -delta*beta^-1 reproduce the sphere",
            []() -> std::optional<std::string> {
                stereographic_elements();
                return std::nullopt;
            });
    s.check("mirror-preset-fails", "the q^-1 preset does not reproduce the sphere relations",
            []() -> std::optional<std::string> {
                try {
                    stereographic_elements(SUConvention::QMinus);
                } catch (const VerificationFailure&) {
                    return std::nullopt;
                }
                return "mirror preset unexpectedly verified";
            });
    s.check("defining-relations", "alpha*beta = q*beta*alpha and companions",
            []() -> std::optional<std::string> {
                using G = SUGen;
                auto n = [](std::vector<SUGen> w) { return normalize_suq2(w); };
                const Scalar q = Scalar::q_pow(1);
                struct Rel { std::vector<SUGen> l, r; Scalar c; const char* name; };
                Rel rels[] = {
                    {{G::Alpha, G::Beta}, {G::Beta, G::Alpha}, q, "alpha beta"},
                    {{G::Alpha, G::Gamma}, {G::Gamma, G::Alpha}, q, "alpha gamma"},
                    {{G::Beta, G::Delta}, {G::Delta, G::Beta}, q, "beta delta"},
                    {{G::Gamma, G::Delta}, {G::Delta, G::Gamma}, q, "gamma delta"},
                    {{G::Beta, G::Gamma}, {G::Gamma, G::Beta}, Scalar::one(), "beta gamma"},
                    {{G::Beta, G::BetaInv}, {}, Scalar::one(), "beta beta^-1"},
                    {{G::Gamma, G::GammaInv}, {}, Scalar::one(), "gamma gamma^-1"},
                };
                for (const auto& rel : rels) {
                    SUq2Element lhs = n(rel.l);
                    SUq2Element rhs = rel.r.empty() ? SUq2Element::one() : n(rel.r);
                    if (lhs != rhs.scaled(rel.c)) return std::string(rel.name);
                }
                // determinant relations
                SUq2Element ad = n({G::Alpha, G::Delta});
                SUq2Element da = n({G::Delta, G::Alpha});
                SUq2Element bg = n({G::Beta, G::Gamma});
                if (ad != SUq2Element::one() + bg.scaled(Scalar::q_pow(1)))
                    return "alpha delta determinant";
                if (da != SUq2Element::one() + bg.scaled(Scalar::q_pow(-1)))
                    return "delta alpha determinant";
                return std::nullopt;
            });
    s.check("pbw-confluence", "fold-order independence for localized words",
            [&]() -> std::optional<std::string> {
                int n = std::max(100, ctx.opts.random_words / 5);
                for (int i = 0; i < n; ++i) {
                    auto w = ctx.rand_suword();
                    if (normalize_suq2(w, SUConvention::QPlus, FoldStrategy::LeftToRight) !=
                        normalize_suq2(w, SUConvention::QPlus, FoldStrategy::RightToLeft))
                        return "word " + std::to_string(i);
                }
                return std::nullopt;
            });
    s.check("star-consistency", "star(x*y) = star(y)*star(x) on random words",
            [&]() -> std::optional<std::string> {
                for (int i = 0; i < 40; ++i) {
                    SUq2Element x = normalize_suq2(ctx.rand_suword(4));
                    SUq2Element y = normalize_suq2(ctx.rand_suword(4));
                    if (star_suq2(mul(x, y)) != mul(star_suq2(y), star_suq2(x)))
                        return "pair " + std::to_string(i);
                }
                return std::nullopt;
            });
    s.check("embed-homomorphism", "b-words and rhoi-words agree through both routes",
            [&]() -> std::optional<std::string> {
                PodlesGenerators pg = podles_generators();
                StereographicElements se = stereographic_elements();
                for (int i = 0; i < 100; ++i) {
                    int len = ctx.uniform(1, 5);
                    FuncElement zside = FuncElement::one();
                    SUq2Element uside = SUq2Element::one();
                    for (int t = 0; t < len; ++t) {
                        switch (ctx.uniform(0, 2)) {
                            case 0:
                                zside = mul(zside, pg.b_minus);
                                uside = mul(uside, se.b_minus);
                                break;
                            case 1:
                                zside = mul(zside, pg.b_plus);
                                uside = mul(uside, se.b_plus);
                                break;
                            default:
                                zside = mul(zside, pg.b_3);
                                uside = mul(uside, se.b_3);
                                break;
                        }
                    }
                    if (embed_sphere_element(zside) != uside) return "word " + std::to_string(i);
                }
                return std::nullopt;
            });
    s.check("coaction", "doubled generators satisfy the defining relations",
            []() -> std::optional<std::string> {
                coaction_homomorphism_check();
                return std::nullopt;
            });
    s.check("mobius-classical", "numeric Mobius action at q = 1: composition on sample points",
            []() -> std::optional<std::string> {
                classical_mobius_check(1e-12);
                return std::nullopt;
            });
    return s.take();
}

// ---------------------------------------------------------------- wpatch

VerifyReport suite_wpatch(Ctx& ctx) {
    Suite s("wpatch");
    s.check("w-relations", "w*wb = q^-2*wb*w + (q^-2-1)*w*wb^2*w and the w-calculus",
            []() -> std::optional<std::string> {
                verify_w_relations(6);
                return std::nullopt;
            });
    s.check("embed-examples", "embed(zb*z) = rho - 1, embed(z*zb) = q^-2*rho - 1",
            []() -> std::optional<std::string> {
                FuncElement zbz = mul(FuncElement::generator(ZGen::Zbar),
                                      FuncElement::generator(ZGen::Z));
                LocalElement expect(RationalRho::rho_pow(1) + RationalRho(-Scalar::one()));
                if (embed(zbz) != expect) return "zb*z";
                FuncElement zzb = mul(FuncElement::generator(ZGen::Z),
                                      FuncElement::generator(ZGen::Zbar));
                LocalElement expect2(RationalRho::rho_pow(1, Scalar::q_pow(-2)) +
                                     RationalRho(-Scalar::one()));
                if (embed(zzb) != expect2) return "z*zb";
                return std::nullopt;
            });
    s.check("embed-homomorphism", "embed(x*y) = embed(x)*embed(y) on random pairs",
            [&]() -> std::optional<std::string> {
                int n = std::min(200, ctx.opts.random_words);
                for (int i = 0; i < n; ++i) {
                    FuncElement x = ctx.rand_func(2, 3), y = ctx.rand_func(2, 3);
                    if (embed(mul(x, y)) != mul(embed(x), embed(y)))
                        return x.to_string() + " ; " + y.to_string();
                }
                return std::nullopt;
            });
    s.check("shift-rule", "z^b f(rho) = f(q^(-2b) rho) z^b for all stored pole types",
            []() -> std::optional<std::string> {
                const LocalElement z1 = LocalElement::z_pow(1);
                const LocalElement zm1 = LocalElement::z_pow(-1);
                std::vector<RationalRho> samples = {
                    RationalRho::rho_pow(2), RationalRho::rho_pow(-3),
                    RationalRho::pole(1, 1), RationalRho::pole(2, 2), RationalRho::pole(0, 1)};
                for (const auto& f : samples) {
                    LocalElement lf(f);
                    if (mul(z1, lf) != mul(LocalElement(f.shifted(-1)), z1))
                        return f.to_string();
                    if (mul(zm1, lf) != mul(LocalElement(f.shifted(1)), zm1))
                        return f.to_string() + " (inverse)";
                }
                return std::nullopt;
            });
    s.check("partial-fraction-consistency", "(rho - q^2)^-1 * (rho - q^2) = 1 and friends",
            []() -> std::optional<std::string> {
                RationalRho lin = RationalRho::rho_pow(1) +
                                  RationalRho(-Scalar::q_pow(2));  // rho - q^2
                if (mul(RationalRho::pole(1, 1), lin) != RationalRho::one())
                    return "(rho-q^2)^-1 (rho-q^2)";
                RationalRho sq = mul(lin, lin);
                if (mul(RationalRho::pole(1, 2), sq) != RationalRho::one())
                    return "(rho-q^2)^-2 (rho-q^2)^2";
                if (mul(RationalRho::rho_pow(-2), mul(RationalRho::rho_pow(1),
                                                      RationalRho::rho_pow(1))) !=
                    RationalRho::one())
                    return "rho^-2 rho^2";
                // cross-location product re-decomposes
                RationalRho cross = mul(RationalRho::pole(0, 1), RationalRho::pole(1, 1));
                RationalRho back = mul(cross, mul(RationalRho::rho_pow(1) +
                                                      RationalRho(-Scalar::one()),
                                                  lin));
                if (back != RationalRho::one()) return "cross product reconstruction";
                return std::nullopt;
            });
    s.check("star-transport", "star(w) = wb through the embedding",
            [&]() -> std::optional<std::string> {
                WGenerators g = w_generators();
                const LocalElement zb_loc = embed(FuncElement::generator(ZGen::Zbar));
                // the transported star: (f(rho) z^b eps)* = eps* (z^b)* f(rho),
                // with (z)* = zb and (z^-1)* = zb^-1 = wb
                auto star_local = [&](const LocalElement& x) {
                    LocalElement out;
                    for (const auto& [k, f] : x.terms()) {
                        LocalElement acc(f);
                        LocalElement zstar = LocalElement::one();
                        for (int t = 0; t < k.b; ++t) zstar = mul(zstar, zb_loc);
                        for (int t = 0; t < -k.b; ++t) zstar = mul(zstar, g.wb);
                        acc = mul(zstar, acc);
                        if (k.eps) acc = mul(LocalElement::form(0, 1), acc);
                        if (k.epsbar) acc = mul(LocalElement::form(1, 0), acc);
                        out += acc;
                    }
                    return out;
                };
                if (star_local(g.w) != g.wb) return "star(w) != wb";
                if (star_local(g.wb) != g.w) return "star(wb) != w";
                for (int i = 0; i < 30; ++i) {
                    FuncElement x = ctx.rand_func(2, 3);
                    if (star_local(embed(x)) != embed(star_func(x))) return x.to_string();
                }
                return std::nullopt;
            });
    s.check("xi-in-w", "embed(xi) = -q*w^-1*dw*(1+wb*w)^-1 and the pole report",
            []() -> std::optional<std::string> {
                WPatchReport r = xi_in_w();
                if (!r.xi_pole_at_origin) return "Xi pole missing";
                if (!r.dxi_regular_at_origin) return "dXi not regular";
                if (r.dxi_value_at_origin != Rational(2)) {
                    std::ostringstream os;
                    os << r.dxi_value_at_origin;
                    return "dXi value at origin = " + os.str();
                }
                return std::nullopt;
            });
    return s.take();
}

// ---------------------------------------------------------------- poisson

VerifyReport suite_poisson(Ctx& ctx) {
    Suite s("poisson");
    const FuncElement z = FuncElement::generator(ZGen::Z);
    const FuncElement zb = FuncElement::generator(ZGen::Zbar);
    const FormElement dz = FormElement::dz(), dzb = FormElement::dzb();

    auto P = [](int m, int a, int b, int e, int eb, Rational c = 1) {
        return PoissonElement::monomial(PKey{m, a, b, e, eb}, c);
    };

    s.equal("pb-zb-z", "(zb, z) = rho", poisson_bracket(zb, z),
            P(0, 0, 0, 0, 0) + P(0, 1, 1, 0, 0));
    s.equal("pb-dz-z", "(dz, z) = z*dz", poisson_bracket(dz, FormElement(z)), P(0, 0, 1, 1, 0));
    s.equal("pb-dzb-z", "(dzb, z) = z*dzb", poisson_bracket(dzb, FormElement(z)),
            P(0, 0, 1, 0, 1));
    s.equal("pb-dz-zb", "(dz, zb) = -zb*dz", poisson_bracket(dz, FormElement(zb)),
            P(0, 1, 0, 1, 0, -1));
    s.equal("pb-dzb-zb", "(dzb, zb) = -zb*dzb", poisson_bracket(dzb, FormElement(zb)),
            P(0, 1, 0, 0, 1, -1));
    s.equal("pb-dzb-dz", "(dzb, dz) = dzb*dz = -dz*dzb", poisson_bracket(dzb, dz),
            P(0, 0, 0, 1, 1, -1));

    XiForms x = xi_forms();
    s.equal("pb-Xi-z", "(Xi, z) = dz", poisson_bracket(x.Xi, FormElement(z)),
            P(0, 0, 0, 1, 0));
    s.check("pb-Xi-f", "(Xi, f) = d(f) on canonical monomials",
            [&]() -> std::optional<std::string> {
                for (const FuncMonomial& mono : canonical_basis(4)) {
                    FuncElement f;
                    f.add_term(mono, Scalar::one());
                    PoissonElement lhs = poisson_bracket(x.Xi, FormElement(f));
                    PoissonElement rhs = classical_d(classical_limit_elem(f));
                    if (lhs != rhs) return mono.to_string();
                }
                return std::nullopt;
            });
    s.check("xi-classical-limit", "lim Xi = dz*zb*rhoi - dzb*z*rhoi and lim Xi^2 = 0",
            [&x]() -> std::optional<std::string> {
                PoissonElement lim = classical_limit_elem(x.Xi);
                PoissonElement expected = PoissonElement::monomial(PKey{1, 1, 0, 1, 0}) -
                                          PoissonElement::monomial(PKey{1, 0, 1, 0, 1});
                if (lim != expected) return lim.to_string();
                if (!classical_limit_elem(x.Xi_sq).is_zero()) return "Xi^2 limit";
                return std::nullopt;
            });

    s.check("pb-antisymmetry", "(f,g) = -(g,f) except odd-odd symmetric",
            [&]() -> std::optional<std::string> {
                for (int i = 0; i < 30; ++i) {
                    FormElement a = ctx.rand_form(2), b = ctx.rand_form(2);
                    int pa = a.grade() < 0 ? 0 : a.grade() % 2;
                    int pb = b.grade() < 0 ? 0 : b.grade() % 2;
                    PoissonElement ab = poisson_bracket(a, b);
                    PoissonElement ba = poisson_bracket(b, a);
                    PoissonElement expect = (pa == 1 && pb == 1) ? ba : -ba;
                    if (ab != expect) return a.to_string() + " ; " + b.to_string();
                }
                return std::nullopt;
            });
    s.check("pb-d-compatibility", "d(f,g) = (df, g) +/- (f, dg)",
            [&]() -> std::optional<std::string> {
                for (int i = 0; i < 30; ++i) {
                    FormElement a = ctx.rand_form(2), b = ctx.rand_form(2);
                    int pa = a.grade() < 0 ? 0 : a.grade() % 2;
                    PoissonElement lhs = classical_d(poisson_bracket(a, b));
                    PoissonElement rhs = poisson_bracket(exterior_d(a), b);
                    PoissonElement second = poisson_bracket(a, exterior_d(b));
                    rhs += (pa % 2 == 0) ? second : -second;
                    if (lhs != rhs) return a.to_string() + " ; " + b.to_string();
                }
                return std::nullopt;
            });
    s.check("pb-leibniz", "(x, y*w) = (x,y)*w +/- y*(x,w)", [&]() -> std::optional<std::string> {
        for (int i = 0; i < 30; ++i) {
            FormElement a = ctx.rand_form(2), b = ctx.rand_form(2), c = ctx.rand_form(2);
            int pa = a.grade() < 0 ? 0 : a.grade() % 2;
            int pb = b.grade() < 0 ? 0 : b.grade() % 2;
            PoissonElement lhs = poisson_bracket(a, mul(b, c));
            PoissonElement rhs =
                mul(poisson_bracket(a, b), classical_limit_elem(c));
            PoissonElement second = mul(classical_limit_elem(b), poisson_bracket(a, c));
            rhs += (pa * pb % 2 == 0) ? second : -second;
            if (lhs != rhs)
                return a.to_string() + " ; " + b.to_string() + " ; " + c.to_string();
        }
        return std::nullopt;
    });

    // classical bracket formula as an independent oracle, then Jacobi
    auto classical_partial = [](const PoissonElement& f, bool wrt_z) {
        PoissonElement out;
        for (const auto& [k, c] : f.terms()) {
            if (wrt_z) {
                if (k.b >= 1) out += PoissonElement::monomial(PKey{k.m, k.a, k.b - 1, 0, 0},
                                                              c * k.b);
                if (k.m >= 1)
                    out += PoissonElement::monomial(PKey{k.m + 1, k.a + 1, k.b, 0, 0},
                                                    -c * k.m);
            } else {
                if (k.a >= 1) out += PoissonElement::monomial(PKey{k.m, k.a - 1, k.b, 0, 0},
                                                              c * k.a);
                if (k.m >= 1)
                    out += PoissonElement::monomial(PKey{k.m + 1, k.a, k.b + 1, 0, 0},
                                                    -c * k.m);
            }
        }
        return out;
    };
    auto formula_bracket = [&](const PoissonElement& f, const PoissonElement& g) {
        // (f, g) = rho (delb f del g - del f delb g)
        PoissonElement rho_cl = PoissonElement(Rational(1)) +
                                PoissonElement::monomial(PKey{0, 1, 1, 0, 0});
        PoissonElement lhs = mul(classical_partial(f, false), classical_partial(g, true));
        PoissonElement rhs = mul(classical_partial(f, true), classical_partial(g, false));
        return mul(rho_cl, lhs - rhs);
    };
    s.check("pb-consistency", "commutator-limit bracket matches the classical bivector",
            [&]() -> std::optional<std::string> {
                for (int i = 0; i < 30; ++i) {
                    FuncElement f = ctx.rand_func(2, 2), g = ctx.rand_func(2, 2);
                    PoissonElement lhs = poisson_bracket(f, g);
                    PoissonElement rhs =
                        formula_bracket(classical_limit_elem(f), classical_limit_elem(g));
                    if (lhs != rhs) return f.to_string() + " ; " + g.to_string();
                }
                return std::nullopt;
            });
    s.check("pb-jacobi", "(f,(g,h)) + (g,(h,f)) + (h,(f,g)) = 0 on 50 random even triples",
            [&]() -> std::optional<std::string> {
                for (int i = 0; i < 50; ++i) {
                    PoissonElement f = classical_limit_elem(ctx.rand_func(2, 2));
                    PoissonElement g = classical_limit_elem(ctx.rand_func(2, 2));
                    PoissonElement h = classical_limit_elem(ctx.rand_func(2, 2));
                    PoissonElement total = formula_bracket(f, formula_bracket(g, h));
                    total += formula_bracket(g, formula_bracket(h, f));
                    total += formula_bracket(h, formula_bracket(f, g));
                    if (!total.is_zero()) return "triple " + std::to_string(i);
                }
                return std::nullopt;
            });

    // w-patch brackets
    s.check("pb-w", "(wb, w) = wb*w*(1+wb*w), (w, w) = 0, Leibniz for (wb*w, w)",
            []() -> std::optional<std::string> {
                WGenerators g = w_generators();
                auto bw = poisson_bracket_w(g.wb, g.w);
                // expected: u (1 + u) as a function of u, no w power, no forms
                std::vector<ClassicalWTerm> expected = {{
                    RatFun(Poly(std::vector<Rational>{Rational(0), Rational(1), Rational(1)}),
                           Poly(Rational(1))),
                    0, 0, 0}};
                if (!classical_w_equal(bw, expected)) return classical_w_to_string(bw);
                if (!classical_w_equal(poisson_bracket_w(g.w, g.w), {}))
                    return "(w, w) != 0";
                // (wb w, w) = (wb, w) w by Leibniz; both sides computed
                auto lhs = poisson_bracket_w(mul(g.wb, g.w), g.w);
                std::vector<ClassicalWTerm> rhs = {{
                    RatFun(Poly(std::vector<Rational>{Rational(0), Rational(1), Rational(1)}),
                           Poly(Rational(1))),
                    1, 0, 0}};
                if (!classical_w_equal(lhs, rhs)) return classical_w_to_string(lhs);
                return std::nullopt;
            });

    // numeric north-pole checks
    s.check("numeric-circle", "circle integrals of Xi match -4*pi*i/(1+r^2) to 1e-8",
            [&]() -> std::optional<std::string> {
                auto checks = numeric_north_pole_checks({0.5, 0.1, 0.01}, ctx.opts.quad_tol);
                for (const auto& c : checks) {
                    double scale = std::abs(c.expected) > 0 ? std::abs(c.expected) : 1.0;
                    double tol = c.name.rfind("circle integral", 0) == 0 ? 1e-8 : 1e-6;
                    if (c.name.rfind("Stokes", 0) == 0) tol = 1e-6;
                    if (c.abs_err > tol * scale && c.abs_err > tol)
                        return c.name + " err = " + std::to_string(c.abs_err);
                }
                return std::nullopt;
            });
    s.check("numeric-extrapolation", "circle integral tends to -4*pi*i as r -> 0",
            [&]() -> std::optional<std::string> {
                auto checks = numeric_north_pole_checks({0.01}, ctx.opts.quad_tol);
                const auto& c = checks.front();
                std::complex<double> target(0.0, -4.0 * M_PI);
                if (std::abs(c.value - target) > 2e-3) return "not converging to -4*pi*i";
                return std::nullopt;
            });
    return s.take();
}

// ---------------------------------------------------------------- robustness

VerifyReport suite_robustness(Ctx& ctx) {
    Suite s("robustness");
    s.check("roundtrip-func", "parse(print(x)) = x for random canonical elements",
            [&]() -> std::optional<std::string> {
                for (int i = 0; i < ctx.opts.random_words; ++i) {
                    FuncElement x = ctx.rand_func(ctx.uniform(1, 3), 4);
                    EvalValue v = evaluate(x.to_string(), Patch::Z);
                    if (as_function(v) != x) return x.to_string();
                }
                return std::nullopt;
            });
    s.check("roundtrip-form", "parse(print(w)) = w for random forms",
            [&]() -> std::optional<std::string> {
                for (int i = 0; i < 100; ++i) {
                    FormElement w = ctx.rand_form(3);
                    EvalValue v = evaluate(w.to_string(), Patch::Z);
                    if (as_form(v) != w) return w.to_string();
                }
                return std::nullopt;
            });
    s.check("parse-error-position", "\"z*)\" raises ParseError at offset 2",
            []() -> std::optional<std::string> {
                try {
                    parse("z*)");
                } catch (const ParseError& e) {
                    if (e.offset == 2) return std::nullopt;
                    return "offset = " + std::to_string(e.offset);
                }
                return "no error raised";
            });
    return s.take();
}

}  // namespace

std::vector<std::string> suite_names() {
    return {"zalgebra", "calculus", "xi",     "vfields",  "pseudodiff",
            "integration", "suq2",  "wpatch", "poisson",  "robustness"};
}

std::vector<VerifyReport> run_suites(const std::string& selector, const VerifyOptions& opts) {
    std::vector<VerifyReport> reports;
    auto run_one = [&](const std::string& name) {
        Ctx ctx(opts);
        if (name == "zalgebra") reports.push_back(suite_zalgebra(ctx));
        else if (name == "calculus") reports.push_back(suite_calculus(ctx));
        else if (name == "xi") reports.push_back(suite_xi(ctx));
        else if (name == "vfields") reports.push_back(suite_vfields(ctx));
        else if (name == "pseudodiff") reports.push_back(suite_pseudodiff(ctx));
        else if (name == "integration") reports.push_back(suite_integration(ctx));
        else if (name == "suq2") reports.push_back(suite_suq2(ctx));
        else if (name == "wpatch") reports.push_back(suite_wpatch(ctx));
        else if (name == "poisson") reports.push_back(suite_poisson(ctx));
        else if (name == "robustness") reports.push_back(suite_robustness(ctx));
        else throw EngineError("Domain", "unknown suite '" + name + "'");
    };
    if (selector == "all") {
        for (const std::string& name : suite_names()) run_one(name);
    } else {
        run_one(selector);
    }
    return reports;
}

}  // namespace qsphere
