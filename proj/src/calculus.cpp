#include "qsphere/calculus.hpp"

#include <mutex>
#include <tuple>

namespace qsphere {

FormElement FormElement::basis(int idx, FuncElement coeff) {
    FormElement w;
    w.comp_[idx] = std::move(coeff);
    return w;
}

bool FormElement::is_zero() const {
    for (const auto& f : comp_)
        if (!f.is_zero()) return false;
    return true;
}

int FormElement::grade() const {
    int g = -1;
    for (int idx = 0; idx < 4; ++idx) {
        if (comp_[idx].is_zero()) continue;
        int gi = form_grade(idx);
        if (g == -1) g = gi;
        else if (g != gi) return -2;
    }
    return g;
}

FormElement FormElement::operator+(const FormElement& o) const {
    FormElement r(*this);
    r += o;
    return r;
}

FormElement FormElement::operator-(const FormElement& o) const {
    FormElement r(*this);
    r -= o;
    return r;
}

FormElement FormElement::operator-() const {
    FormElement r;
    for (int i = 0; i < 4; ++i) r.comp_[i] = -comp_[i];
    return r;
}

FormElement& FormElement::operator+=(const FormElement& o) {
    for (int i = 0; i < 4; ++i) comp_[i] += o.comp_[i];
    return *this;
}

FormElement& FormElement::operator-=(const FormElement& o) {
    for (int i = 0; i < 4; ++i) comp_[i] -= o.comp_[i];
    return *this;
}

FormElement FormElement::scaled(const Scalar& c) const {
    FormElement r;
    for (int i = 0; i < 4; ++i) r.comp_[i] = comp_[i].scaled(c);
    return r;
}

FormElement FormElement::scaled_func(const FuncElement& f) const {
    FormElement r;
    for (int i = 0; i < 4; ++i) r.comp_[i] = mul(f, comp_[i]);
    return r;
}

std::string FormElement::to_string() const {
    if (is_zero()) return "0";
    static const char* suffix[4] = {"", " * dz", " * dzb", " * dz*dzb"};
    std::string out;
    for (int i = 0; i < 4; ++i) {
        if (comp_[i].is_zero()) continue;
        std::string part = comp_[i].to_string();
        if (i != F_ONE && comp_[i].terms().size() > 1) part = "(" + part + ")";
        if (!out.empty()) out += " + ";
        out += part + suffix[i];
    }
    return out;
}

FuncElement form_twist(const FuncElement& f, int times) {
    FuncElement out;
    for (const auto& [mono, c] : f.terms())
        out.add_term(mono, c * Scalar::q_pow(2 * times * (mono.b - mono.a)));
    return out;
}

FormElement mul(const FormElement& x, const FormElement& y) {
    // structure constants of the form-generator products:
    // e_i * e_j = factor * e_k (or zero)
    struct Cell { int idx; int qpow; int sign; bool zero; };
    // indexed [i][j]
    static const Cell table[4][4] = {
        {{F_ONE, 0, 1, false}, {F_DZ, 0, 1, false}, {F_DZB, 0, 1, false}, {F_DZDZB, 0, 1, false}},
        {{F_DZ, 0, 1, false}, {0, 0, 0, true}, {F_DZDZB, 0, 1, false}, {0, 0, 0, true}},
        {{F_DZB, 0, 1, false}, {F_DZDZB, 2, -1, false}, {0, 0, 0, true}, {0, 0, 0, true}},
        {{F_DZDZB, 0, 1, false}, {0, 0, 0, true}, {0, 0, 0, true}, {0, 0, 0, true}},
    };
    FormElement out;
    for (int i = 0; i < 4; ++i) {
        if (x.coeff(i).is_zero()) continue;
        int ngen = form_grade(i) == 2 ? 2 : form_grade(i);
        for (int j = 0; j < 4; ++j) {
            if (y.coeff(j).is_zero()) continue;
            const Cell& cell = table[i][j];
            if (cell.zero) continue;
            FuncElement moved = form_twist(y.coeff(j), ngen);
            Scalar factor = Scalar::q_pow(cell.qpow);
            if (cell.sign < 0) factor = -factor;
            out.coeff(cell.idx) += mul(x.coeff(i), moved).scaled(factor);
        }
    }
    return out;
}

namespace {

FormElement generator_form(CalcGen g) {
    switch (g) {
        case CalcGen::Z: return FormElement(FuncElement::generator(ZGen::Z));
        case CalcGen::Zbar: return FormElement(FuncElement::generator(ZGen::Zbar));
        case CalcGen::RhoInv: return FormElement(FuncElement::generator(ZGen::RhoInv));
        case CalcGen::Dz: return FormElement::dz();
        case CalcGen::Dzbar: return FormElement::dzb();
    }
    return {};
}

}  // namespace

FormElement normalize_form(const std::vector<CalcGen>& word, FoldStrategy strategy) {
    FormElement acc = FormElement::one();
    if (strategy == FoldStrategy::RightToLeft) {
        for (auto it = word.rbegin(); it != word.rend(); ++it)
            acc = mul(generator_form(*it), acc);
    } else {
        for (CalcGen g : word) acc = mul(acc, generator_form(g));
    }
    return acc;
}

// --- DiffOp -------------------------------------------------------------

DiffOp::DiffOp(const FuncElement& f) {
    for (const auto& [mono, c] : f.terms()) t_.emplace(DiffKey{mono, 0, 0}, c);
}

DiffOp DiffOp::generator(DGen g) {
    DiffOp d;
    d.t_.emplace(DiffKey{FuncMonomial{}, g == DGen::Del ? 1 : 0, g == DGen::Delbar ? 1 : 0},
                 Scalar::one());
    return d;
}

void DiffOp::add_term(const DiffKey& k, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = t_.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

DiffOp DiffOp::operator+(const DiffOp& o) const {
    DiffOp r(*this);
    r += o;
    return r;
}

DiffOp DiffOp::operator-(const DiffOp& o) const {
    DiffOp r(*this);
    for (const auto& [k, c] : o.t_) r.add_term(k, -c);
    return r;
}

DiffOp DiffOp::operator-() const {
    DiffOp r;
    for (const auto& [k, c] : t_) r.t_.emplace(k, -c);
    return r;
}

DiffOp& DiffOp::operator+=(const DiffOp& o) {
    for (const auto& [k, c] : o.t_) add_term(k, c);
    return *this;
}

DiffOp DiffOp::scaled(const Scalar& c) const {
    DiffOp r;
    if (c.is_zero()) return r;
    for (const auto& [k, x] : t_) r.t_.emplace(k, x * c);
    return r;
}

DiffOp DiffOp::pow(unsigned e) const {
    DiffOp acc = DiffOp::identity();
    for (unsigned i = 0; i < e; ++i) acc = mul(acc, *this);
    return acc;
}

std::string DiffOp::to_string() const {
    if (t_.empty()) return "0";
    std::string out;
    for (const auto& [k, c] : t_) {
        if (!out.empty()) out += " + ";
        std::string cs = c.to_string();
        if (cs.find(' ') != std::string::npos) cs = "(" + cs + ")";
        out += cs;
        std::string ms = k.mono.to_string();
        if (ms != "1") out += "*" + ms;
        for (int i = 0; i < k.dc; ++i) out += "*del";
        for (int i = 0; i < k.dd; ++i) out += "*delb";
    }
    return out;
}

namespace {

// del rhoi^m = A1 del + A0 and delb rhoi^m = B1 delb + B0, by iterating
//   del rhoi  = rhoi del  - q^4 zb rhoi^2
//   delb rhoi = rhoi delb - q^-2 z rhoi^2
void deriv_past_rhoi(DGen g, int m, FuncElement& hom, FuncElement& inhom) {
    hom = FuncElement::one();
    inhom = FuncElement::zero();
    const FuncElement rhoi = FuncElement::generator(ZGen::RhoInv);
    for (int i = 0; i < m; ++i) {
        // current: del rhoi^i = hom del + inhom; multiply one more rhoi on the right:
        // (hom del + inhom) rhoi = hom (rhoi del - inh1) + inhom rhoi
        FuncElement inh1 = (g == DGen::Del)
            ? mul(FuncElement::generator(ZGen::Zbar), FuncElement::monomial(2, 0, 0)).scaled(Scalar::q_pow(4))
            : mul(FuncElement::generator(ZGen::Z), FuncElement::monomial(2, 0, 0)).scaled(Scalar::q_pow(-2));
        inhom = mul(inhom, rhoi) - mul(hom, inh1);
        hom = mul(hom, rhoi);
    }
}

// one derivative generator pushed through one canonical monomial:
// g * M = (result without derivative) + (result with one derivative)
void push_deriv_uncached(DGen g, const FuncMonomial& M, FuncElement& without,
                         FuncElement& with) {
    FuncElement hom, inhom;
    deriv_past_rhoi(g, M.m, hom, inhom);
    FuncElement tail = FuncElement::monomial(0, M.a, M.b);
    without = mul(inhom, tail);
    if (g == DGen::Del) {
        // del zb^a z^b = q^(2a) [b]_{1/q} zb^a z^(b-1) + q^(2a-2b) zb^a z^b del
        if (M.b >= 1)
            without += mul(hom, FuncElement::monomial(0, M.a, M.b - 1))
                           .scaled(Scalar::q_pow(2 * M.a) * qint_bar(M.b));
        with = mul(hom, tail).scaled(Scalar::q_pow(2 * (M.a - M.b)));
    } else {
        // delb zb^a z^b = [a]_q zb^(a-1) z^b + q^(2a-2b) zb^a z^b delb
        if (M.a >= 1)
            without += mul(hom, FuncElement::monomial(0, M.a - 1, M.b)).scaled(qint(M.a));
        with = mul(hom, tail).scaled(Scalar::q_pow(2 * (M.a - M.b)));
    }
}

void push_deriv(DGen g, const FuncMonomial& M, FuncElement& without, FuncElement& with) {
    using Key = std::tuple<int, int, int, int>;
    static std::map<Key, std::pair<FuncElement, FuncElement>> cache;
    static std::mutex cache_mutex;
    Key key{static_cast<int>(g), M.m, M.a, M.b};
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(key);
        if (it != cache.end()) {
            without = it->second.first;
            with = it->second.second;
            return;
        }
    }
    push_deriv_uncached(g, M, without, with);
    std::lock_guard<std::mutex> lock(cache_mutex);
    cache.emplace(key, std::make_pair(without, with));
}

}  // namespace

DiffOp mul(const DiffOp& x, const DiffOp& y) {
    DiffOp out;
    for (const auto& [k1, c1] : x.terms()) {
        for (const auto& [k2, c2] : y.terms()) {
            // push del^c1 delb^d1 through k2.mono, rightmost generator first
            DiffOp work;
            work.add_term(DiffKey{k2.mono, 0, 0}, Scalar::one());
            for (int step = 0; step < k1.dd; ++step) {
                DiffOp next;
                for (const auto& [k, c] : work.terms()) {
                    FuncElement without, with;
                    push_deriv(DGen::Delbar, k.mono, without, with);
                    // the new delb crosses del^dc: delb del = q^2 del delb
                    Scalar cross = Scalar::q_pow(2 * k.dc);
                    for (const auto& [mono2, cc] : without.terms())
                        next.add_term(DiffKey{mono2, k.dc, k.dd}, c * cc);
                    for (const auto& [mono2, cc] : with.terms())
                        next.add_term(DiffKey{mono2, k.dc, k.dd + 1}, c * cc * cross);
                }
                work = std::move(next);
            }
            for (int step = 0; step < k1.dc; ++step) {
                DiffOp next;
                for (const auto& [k, c] : work.terms()) {
                    FuncElement without, with;
                    push_deriv(DGen::Del, k.mono, without, with);
                    for (const auto& [mono2, cc] : without.terms())
                        next.add_term(DiffKey{mono2, k.dc, k.dd}, c * cc);
                    for (const auto& [mono2, cc] : with.terms())
                        next.add_term(DiffKey{mono2, k.dc + 1, k.dd}, c * cc);
                }
                work = std::move(next);
            }
            FuncElement f1 = FuncElement::monomial(k1.mono.m, k1.mono.a, k1.mono.b);
            for (const auto& [k, c] : work.terms()) {
                // remaining delb^dd cross del^(k2.dc): delb del = q^2 del delb
                Scalar cross = Scalar::q_pow(2 * k.dd * k2.dc);
                FuncElement f = mul(f1, FuncElement::monomial(k.mono.m, k.mono.a, k.mono.b));
                for (const auto& [mono3, c3] : f.terms())
                    out.add_term(DiffKey{mono3, k.dc + k2.dc, k.dd + k2.dd},
                                 c1 * c2 * c * c3 * cross);
            }
        }
    }
    return out;
}

FuncElement apply_diffop(const DiffOp& d, const FuncElement& f) {
    DiffOp prod = mul(d, DiffOp(f));
    FuncElement out;
    for (const auto& [k, c] : prod.terms())
        if (k.dc == 0 && k.dd == 0) out.add_term(k.mono, c);
    return out;
}

FormElement exterior_d(const FormElement& w) {
    auto d_of_func = [](const FuncElement& f) {
        FormElement r;
        r.coeff(F_DZ) = form_twist(apply_diffop(DiffOp::del(), f));
        r.coeff(F_DZB) = form_twist(apply_diffop(DiffOp::delbar(), f));
        return r;
    };
    FormElement out = d_of_func(w.coeff(F_ONE));
    // d(f dz) = df * dz, d(f dzb) = df * dzb, d(f dz dzb) = 0
    out += mul(d_of_func(w.coeff(F_DZ)), FormElement::dz());
    out += mul(d_of_func(w.coeff(F_DZB)), FormElement::dzb());
    return out;
}

std::pair<FormElement, FormElement> delta_split(const FormElement& w) {
    auto part = [](const FuncElement& f, DGen g) {
        return form_twist(apply_diffop(DiffOp::generator(g), f));
    };
    FormElement hol, antihol;
    for (int idx = 0; idx < 4; ++idx) {
        const FuncElement& f = w.coeff(idx);
        if (f.is_zero()) continue;
        hol += mul(FormElement::basis(F_DZ, part(f, DGen::Del)), FormElement::basis(idx));
        antihol += mul(FormElement::basis(F_DZB, part(f, DGen::Delbar)), FormElement::basis(idx));
    }
    return {hol, antihol};
}

FormElement delta(const FormElement& w) { return delta_split(w).first; }
FormElement deltabar(const FormElement& w) { return delta_split(w).second; }

FormElement star_form(const FormElement& w) {
    // (f)* componentwise with (dz)* = dzb, (dz dzb)* = dzb* dz* reordered
    FormElement out;
    out.coeff(F_ONE) = star_func(w.coeff(F_ONE));
    out.coeff(F_DZB) = form_twist(star_func(w.coeff(F_DZ)));
    out.coeff(F_DZ) = form_twist(star_func(w.coeff(F_DZB)));
    // (f dz dzb)* = (dz dzb)* f* = dz dzb f* -> twist^2(f*) dz dzb
    out.coeff(F_DZDZB) = form_twist(star_func(w.coeff(F_DZDZB)), 2);
    return out;
}

DiffOp star_diffop(const DiffOp& d, StarVariant variant) {
    DiffOp sdel, sdelbar;
    if (variant == StarVariant::Sphere) {
        // del*  = -q^-2 delb + (1+q^-2) z rhoi
        // delb* = -q^2 del + (1+q^2) rhoi zb
        sdel = DiffOp::delbar().scaled(-Scalar::q_pow(-2)) +
               DiffOp(mul(FuncElement::generator(ZGen::Z), FuncElement::generator(ZGen::RhoInv))
                          .scaled(Scalar::one() + Scalar::q_pow(-2)));
        sdelbar = DiffOp::del().scaled(-Scalar::q_pow(2)) +
                  DiffOp(mul(FuncElement::generator(ZGen::RhoInv), FuncElement::generator(ZGen::Zbar))
                             .scaled(Scalar::one() + Scalar::q_pow(2)));
    } else {
        sdel = DiffOp::delbar().scaled(-Scalar::q_pow(2));
        sdelbar = DiffOp::del().scaled(-Scalar::q_pow(-2));
    }
    DiffOp out;
    for (const auto& [k, c] : d.terms()) {
        DiffOp term = DiffOp::identity();
        term = mul(sdelbar.pow(k.dd), sdel.pow(k.dc));
        FuncMonomial sm = k.mono;
        FuncElement starred;
        {
            FuncElement tmp;
            tmp.add_term(sm, Scalar::one());
            starred = star_func(tmp);
        }
        out += mul(term, DiffOp(starred)).scaled(c);
    }
    return out;
}

std::pair<DiffOp, DiffOp> gauge_derivative(int n, int verify_degree) {
    DiffOp dn = DiffOp::del().scaled(Scalar::q_pow(4 * n)) +
                DiffOp(mul(FuncElement::generator(ZGen::RhoInv), FuncElement::generator(ZGen::Zbar))
                           .scaled(-Scalar::q_pow(2) * qint(2 * n)));
    DiffOp dbn = DiffOp::delbar().scaled(Scalar::q_pow(-4 * n)) +
                 DiffOp(mul(FuncElement::generator(ZGen::Z), FuncElement::generator(ZGen::RhoInv))
                            .scaled(-Scalar::q_pow(-2) * qint_bar(2 * n)));
    // cross-check against the conjugated operators on low-degree monomials
    FuncElement rho2n = FuncElement::rho().pow(2 * n);
    FuncElement rhoi2n = FuncElement::monomial(2 * n, 0, 0);
    for (const FuncMonomial& mono : canonical_basis(verify_degree)) {
        FuncElement f;
        f.add_term(mono, Scalar::one());
        FuncElement lhs = apply_diffop(dn, f);
        FuncElement rhs =
            mul(rho2n, apply_diffop(DiffOp::del(), mul(rhoi2n, f))).scaled(Scalar::q_pow(4 * n));
        if (lhs != rhs)
            throw VerificationFailure("gauge derivative del^(n) mismatch at n=" + std::to_string(n) +
                                      " on " + mono.to_string());
        lhs = apply_diffop(dbn, f);
        rhs = mul(rho2n, apply_diffop(DiffOp::delbar(), mul(rhoi2n, f)))
                  .scaled(Scalar::q_pow(-4 * n));
        if (lhs != rhs)
            throw VerificationFailure("gauge derivative delb^(n) mismatch at n=" +
                                      std::to_string(n) + " on " + mono.to_string());
    }
    return {dn, dbn};
}

XiForms xi_forms() {
    XiForms x;
    x.xi = normalize_form({CalcGen::Dz, CalcGen::RhoInv, CalcGen::Zbar}).scaled(Scalar::q_pow(1));
    x.xi_star = star_form(x.xi);
    x.Xi = x.xi - x.xi_star;
    x.dXi = exterior_d(x.Xi);
    x.Xi_sq = mul(x.Xi, x.Xi);
    // closed forms: dXi = 2q dzb rhoi^2 dz, Xi^2 = q lambda dzb rhoi^2 dz
    FormElement area = normalize_form({CalcGen::Dzbar, CalcGen::RhoInv, CalcGen::RhoInv, CalcGen::Dz});
    if (x.dXi != area.scaled(Scalar::of_int(2) * Scalar::q_pow(1)))
        throw VerificationFailure("dXi does not match its closed form 2q dzb rhoi^2 dz");
    if (x.Xi_sq != area.scaled(Scalar::q_pow(1) * Scalar::lambda()))
        throw VerificationFailure("Xi^2 does not match its closed form q lambda dzb rhoi^2 dz");
    if (star_form(x.Xi) != -x.Xi)
        throw VerificationFailure("Xi* != -Xi");
    return x;
}

}  // namespace qsphere
