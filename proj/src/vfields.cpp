#include "qsphere/vfields.hpp"

#include <map>
#include <mutex>
#include <tuple>

namespace qsphere {

VectorOp VectorOp::generator(VGen g) {
    VectorOp v;
    VKey k;
    switch (g) {
        case VGen::Zp: k.i = 1; break;
        case VGen::H: k.j = 1; break;
        case VGen::Zm: k.k = 1; break;
    }
    v.t_.emplace(k, FormElement::one());
    return v;
}

void VectorOp::add_term(const VKey& k, const FormElement& w) {
    if (w.is_zero()) return;
    auto [it, inserted] = t_.try_emplace(k, w);
    if (!inserted) {
        it->second += w;
        if (it->second.is_zero()) t_.erase(it);
    }
}

VectorOp VectorOp::operator+(const VectorOp& o) const {
    VectorOp r(*this);
    r += o;
    return r;
}

VectorOp VectorOp::operator-(const VectorOp& o) const {
    VectorOp r(*this);
    for (const auto& [k, w] : o.t_) r.add_term(k, -w);
    return r;
}

VectorOp VectorOp::operator-() const {
    VectorOp r;
    for (const auto& [k, w] : t_) r.t_.emplace(k, -w);
    return r;
}

VectorOp& VectorOp::operator+=(const VectorOp& o) {
    for (const auto& [k, w] : o.t_) add_term(k, w);
    return *this;
}

VectorOp VectorOp::scaled(const Scalar& c) const {
    VectorOp r;
    if (c.is_zero()) return r;
    for (const auto& [k, w] : t_) r.t_.emplace(k, w.scaled(c));
    return r;
}

std::string VectorOp::to_string() const {
    if (t_.empty()) return "0";
    std::string out;
    for (const auto& [k, w] : t_) {
        if (!out.empty()) out += " + ";
        std::string ws = w.to_string();
        if (!k.trivial()) {
            out += "(" + ws + ")";
            for (int t = 0; t < k.i; ++t) out += "*Zp";
            for (int t = 0; t < k.j; ++t) out += "*H";
            for (int t = 0; t < k.k; ++t) out += "*Zm";
        } else {
            out += ws;
        }
    }
    return out;
}

namespace {

// one vector-field generator pushed right through one function generator:
// g * t = inhom(t) + hom(t) * g
void vf_rule(VGen g, ZGen t, FuncElement& inhom, FuncElement& hom) {
    const FuncElement z = FuncElement::generator(ZGen::Z);
    const FuncElement zb = FuncElement::generator(ZGen::Zbar);
    const FuncElement rhoi = FuncElement::generator(ZGen::RhoInv);
    switch (g) {
        case VGen::Zp:
            switch (t) {
                case ZGen::Z:
                    inhom = mul(z, z).scaled(Scalar::q_half_pow(1));
                    hom = z.scaled(Scalar::q_pow(2));
                    return;
                case ZGen::Zbar:
                    inhom = FuncElement(Scalar::q_half_pow(-3));
                    hom = zb.scaled(Scalar::q_pow(-2));
                    return;
                case ZGen::RhoInv:
                    // Zp rhoi = rhoi Zp - q^(-3/2) z rhoi
                    inhom = mul(z, rhoi).scaled(-Scalar::q_half_pow(-3));
                    hom = rhoi;
                    return;
            }
            break;
        case VGen::H:
            switch (t) {
                case ZGen::Z:
                    inhom = z.scaled(Scalar::one() + Scalar::q_pow(2));
                    hom = z.scaled(Scalar::q_pow(4));
                    return;
                case ZGen::Zbar:
                    inhom = zb.scaled(-Scalar::q_pow(-4) * (Scalar::one() + Scalar::q_pow(2)));
                    hom = zb.scaled(Scalar::q_pow(-4));
                    return;
                case ZGen::RhoInv:
                    inhom = FuncElement::zero();
                    hom = rhoi;
                    return;
            }
            break;
        case VGen::Zm:
            switch (t) {
                case ZGen::Z:
                    inhom = FuncElement(-Scalar::q_half_pow(1));
                    hom = z.scaled(Scalar::q_pow(2));
                    return;
                case ZGen::Zbar:
                    inhom = mul(zb, zb).scaled(-Scalar::q_half_pow(-3));
                    hom = zb.scaled(Scalar::q_pow(-2));
                    return;
                case ZGen::RhoInv:
                    // Zm rhoi = rhoi Zm + q^(1/2) zb rhoi
                    inhom = mul(zb, rhoi).scaled(Scalar::q_half_pow(1));
                    hom = rhoi;
                    return;
            }
            break;
    }
}

// g * M = u + v * g for a single canonical monomial, memoized
void push_vgen_mono(VGen g, const FuncMonomial& mono, FuncElement& u, FuncElement& v) {
    using Key = std::tuple<int, int, int, int>;
    static std::map<Key, std::pair<FuncElement, FuncElement>> cache;
    static std::mutex cache_mutex;
    Key key{static_cast<int>(g), mono.m, mono.a, mono.b};
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(key);
        if (it != cache.end()) {
            u = it->second.first;
            v = it->second.second;
            return;
        }
    }
    FuncElement pu = FuncElement::zero();
    FuncElement pv = FuncElement::one();
    auto step = [&](ZGen t) {
        FuncElement inhom, hom;
        vf_rule(g, t, inhom, hom);
        FuncElement gen = FuncElement::generator(t);
        // (pu + pv g) t = pu t + pv (inhom + hom g)
        pu = mul(pu, gen) + mul(pv, inhom);
        pv = mul(pv, hom);
    };
    for (int i = 0; i < mono.m; ++i) step(ZGen::RhoInv);
    for (int i = 0; i < mono.a; ++i) step(ZGen::Zbar);
    for (int i = 0; i < mono.b; ++i) step(ZGen::Z);
    u = pu;
    v = pv;
    std::lock_guard<std::mutex> lock(cache_mutex);
    cache.emplace(key, std::make_pair(u, v));
}

// g * f = u + v * g for a plain function f
void push_vgen_elem(VGen g, const FuncElement& f, FuncElement& u, FuncElement& v) {
    u = FuncElement::zero();
    v = FuncElement::zero();
    for (const auto& [mono, c] : f.terms()) {
        FuncElement pu, pv;
        push_vgen_mono(g, mono, pu, pv);
        u += pu.scaled(c);
        v += pv.scaled(c);
    }
}

// g * (basis form e) = sum of (FormElement, has_g) pairs, derived from the
// function rules through commutation with d
std::vector<std::pair<FormElement, bool>> push_vgen_formbasis(VGen g, int idx) {
    const Scalar q2 = Scalar::q_pow(2);
    const FuncElement z = FuncElement::generator(ZGen::Z);
    const FuncElement zb = FuncElement::generator(ZGen::Zbar);
    auto single = [&](int which) -> std::vector<std::pair<FormElement, bool>> {
        // which = F_DZ or F_DZB
        switch (g) {
            case VGen::Zp:
                if (which == F_DZ)
                    return {{FormElement::basis(F_DZ, z.scaled(Scalar::q_half_pow(1) *
                                                               (Scalar::one() + q2))),
                             false},
                            {FormElement::dz().scaled(q2), true}};
                return {{FormElement::dzb().scaled(Scalar::q_pow(-2)), true}};
            case VGen::H:
                if (which == F_DZ)
                    return {{FormElement::dz().scaled(Scalar::one() + q2), false},
                            {FormElement::dz().scaled(Scalar::q_pow(4)), true}};
                return {{FormElement::dzb().scaled(-Scalar::q_pow(-4) * (Scalar::one() + q2)),
                         false},
                        {FormElement::dzb().scaled(Scalar::q_pow(-4)), true}};
            case VGen::Zm:
                if (which == F_DZ) return {{FormElement::dz().scaled(q2), true}};
                return {{FormElement::basis(F_DZB, zb.scaled(-Scalar::q_half_pow(-3) *
                                                             (Scalar::one() + Scalar::q_pow(-2)))),
                         false},
                        {FormElement::dzb().scaled(Scalar::q_pow(-2)), true}};
        }
        return {};
    };
    if (idx == F_ONE) return {{FormElement::one(), true}};
    if (idx == F_DZ || idx == F_DZB) return single(idx);
    // idx == F_DZDZB: compose the dz step with the dzb step
    std::vector<std::pair<FormElement, bool>> out;
    for (const auto& [w1, has1] : single(F_DZ)) {
        if (!has1) {
            out.emplace_back(mul(w1, FormElement::dzb()), false);
            continue;
        }
        for (const auto& [w2, has2] : single(F_DZB)) out.emplace_back(mul(w1, w2), has2);
    }
    return out;
}

// full push of one generator through a FormElement:
// g * F = sum of (FormElement, has_g)
std::vector<std::pair<FormElement, bool>> push_vgen_form(VGen g, const FormElement& F) {
    std::vector<std::pair<FormElement, bool>> out;
    for (int idx = 0; idx < 4; ++idx) {
        const FuncElement& f = F.coeff(idx);
        if (f.is_zero()) continue;
        FuncElement u, v;
        push_vgen_elem(g, f, u, v);
        if (!u.is_zero()) out.emplace_back(FormElement::basis(idx, u), false);
        if (v.is_zero()) continue;
        for (const auto& [w, has] : push_vgen_formbasis(g, idx)) {
            FormElement part = mul(FormElement(v), w);
            if (!part.is_zero()) out.emplace_back(part, has);
        }
    }
    return out;
}

using PBWTable = std::map<VKey, Scalar>;

// normal ordering of an abstract word over {Zp, H, Zm}
PBWTable normal_order_word(const std::vector<VGen>& word) {
    static std::map<std::vector<VGen>, PBWTable> cache;
    static std::mutex cache_mutex;
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto found = cache.find(word);
        if (found != cache.end()) return found->second;
    }

    auto rank = [](VGen g) { return g == VGen::Zp ? 0 : g == VGen::H ? 1 : 2; };
    PBWTable result;
    std::size_t pos = word.size();
    for (std::size_t t = 0; t + 1 < word.size(); ++t) {
        if (rank(word[t]) > rank(word[t + 1])) {
            pos = t;
            break;
        }
    }
    if (pos == word.size()) {
        VKey k;
        for (VGen g : word) {
            if (g == VGen::Zp) ++k.i;
            else if (g == VGen::H) ++k.j;
            else ++k.k;
        }
        result[k] = Scalar::one();
    } else {
        VGen x = word[pos], y = word[pos + 1];
        auto splice = [&](const std::vector<VGen>& repl, const Scalar& coeff) {
            std::vector<VGen> next(word.begin(), word.begin() + pos);
            next.insert(next.end(), repl.begin(), repl.end());
            next.insert(next.end(), word.begin() + pos + 2, word.end());
            for (auto& [k, c] : normal_order_word(next)) {
                auto [it, inserted] = result.try_emplace(k, c * coeff);
                if (!inserted) {
                    it->second += c * coeff;
                    if (it->second.is_zero()) result.erase(it);
                }
            }
        };
        const Scalar one_plus_q2 = Scalar::one() + Scalar::q_pow(2);
        if (x == VGen::H && y == VGen::Zp) {
            // H Zp = q^4 Zp H + (1+q^2) Zp
            splice({VGen::Zp, VGen::H}, Scalar::q_pow(4));
            splice({VGen::Zp}, one_plus_q2);
        } else if (x == VGen::Zm && y == VGen::Zp) {
            // Zm Zp = q^2 Zp Zm - q H
            splice({VGen::Zp, VGen::Zm}, Scalar::q_pow(2));
            splice({VGen::H}, -Scalar::q_pow(1));
        } else {
            // Zm H = q^4 H Zm + (1+q^2) Zm
            splice({VGen::H, VGen::Zm}, Scalar::q_pow(4));
            splice({VGen::Zm}, one_plus_q2);
        }
    }
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        cache.emplace(word, result);
    }
    return result;
}

std::vector<VGen> expand_key(const VKey& k) {
    std::vector<VGen> w;
    w.insert(w.end(), k.i, VGen::Zp);
    w.insert(w.end(), k.j, VGen::H);
    w.insert(w.end(), k.k, VGen::Zm);
    return w;
}

PBWTable pbw_merge_single(VGen g, const VKey& k) {
    std::vector<VGen> w;
    w.push_back(g);
    auto rest = expand_key(k);
    w.insert(w.end(), rest.begin(), rest.end());
    return normal_order_word(w);
}

}  // namespace

VectorOp mul(const VectorOp& x, const VectorOp& y) {
    VectorOp out;
    for (const auto& [k1, F1] : x.terms()) {
        for (const auto& [k2, F2] : y.terms()) {
            // push the word Zp^i H^j Zm^k through F2, rightmost generator first
            std::map<VKey, FormElement> work;
            work.emplace(k2, F2);
            auto apply_gen = [&work](VGen g) {
                std::map<VKey, FormElement> next;
                auto add = [&next](const VKey& k, const FormElement& w) {
                    if (w.is_zero()) return;
                    auto [it, inserted] = next.try_emplace(k, w);
                    if (!inserted) it->second += w;
                };
                for (const auto& [k, F] : work) {
                    for (const auto& [G, has] : push_vgen_form(g, F)) {
                        if (!has) {
                            add(k, G);
                        } else {
                            for (const auto& [k2b, sc] : pbw_merge_single(g, k))
                                add(k2b, G.scaled(sc));
                        }
                    }
                }
                // drop exact cancellations
                for (auto it = next.begin(); it != next.end();)
                    it = it->second.is_zero() ? next.erase(it) : std::next(it);
                work = std::move(next);
            };
            for (int t = 0; t < k1.k; ++t) apply_gen(VGen::Zm);
            for (int t = 0; t < k1.j; ++t) apply_gen(VGen::H);
            for (int t = 0; t < k1.i; ++t) apply_gen(VGen::Zp);
            for (const auto& [k, F] : work) out.add_term(k, mul(F1, F));
        }
    }
    return out;
}

VectorOp normalize_vf(const std::vector<VAtom>& word, FoldStrategy strategy) {
    auto atom_op = [](const VAtom& a) {
        if (std::holds_alternative<VGen>(a)) return VectorOp::generator(std::get<VGen>(a));
        return VectorOp(normalize_form({std::get<CalcGen>(a)}));
    };
    VectorOp acc(FormElement::one());
    if (strategy == FoldStrategy::RightToLeft) {
        for (auto it = word.rbegin(); it != word.rend(); ++it) acc = mul(atom_op(*it), acc);
    } else {
        for (const VAtom& a : word) acc = mul(acc, atom_op(a));
    }
    return acc;
}

FormElement vf_act(const VectorOp& v, const FormElement& w) {
    VectorOp prod = mul(v, VectorOp(w));
    for (const auto& [k, F] : prod.terms())
        if (k.trivial()) return F;
    return FormElement::zero();
}

FormElement vf_act(VGen g, const FormElement& w) { return vf_act(VectorOp::generator(g), w); }

FuncElement vf_act(VGen g, const FuncElement& f) {
    return vf_act(VectorOp::generator(g), FormElement(f)).coeff(F_ONE);
}

VectorOp star_vf(const VectorOp& v) {
    VectorOp out;
    for (const auto& [k, F] : v.terms()) {
        // (F Zp^i H^j Zm^k)* = Zp^k H^j Zm^i F*
        VectorOp word;
        word.add_term(VKey{k.k, k.j, k.i}, FormElement::one());
        out += mul(word, VectorOp(star_form(F)));
    }
    return out;
}

std::optional<std::string> check_infinitesimal_covariance(const CoeffWord& lhs,
                                                          const CoeffWord& rhs) {
    auto normalize_combo = [](const CoeffWord& words, std::optional<VGen> prefix) {
        VectorOp acc;
        for (const auto& [c, word] : words) {
            std::vector<VAtom> w = word;
            if (prefix) w.insert(w.begin(), *prefix);
            acc += normalize_vf(w).scaled(c);
        }
        return acc;
    };
    if (normalize_combo(lhs, std::nullopt) != normalize_combo(rhs, std::nullopt))
        return "relation does not hold before applying vector fields";
    const std::pair<VGen, const char*> gens[] = {
        {VGen::Zp, "Zp"}, {VGen::Zm, "Zm"}, {VGen::H, "H"}};
    for (const auto& [g, name] : gens) {
        if (normalize_combo(lhs, g) != normalize_combo(rhs, g)) return std::string(name);
    }
    return std::nullopt;
}

BCDOps build_bcd() {
    const Scalar lam = Scalar::lambda();
    const FuncElement z = FuncElement::generator(ZGen::Z);
    const FuncElement zb = FuncElement::generator(ZGen::Zbar);
    BCDOps ops;
    DiffOp zdel = mul(DiffOp(z), DiffOp::del());
    DiffOp zbdelb = mul(DiffOp(zb), DiffOp::delbar());
    ops.C = DiffOp::identity() + zdel.scaled(-lam * Scalar::q_pow(-1));
    ops.D = DiffOp::identity() + zbdelb.scaled(lam * Scalar::q_pow(1));
    // rho delb del with delb del reordered to q^2 del delb
    DiffOp rho_dd = mul(DiffOp(FuncElement::rho()),
                        mul(DiffOp::del(), DiffOp::delbar()).scaled(Scalar::q_pow(2)));
    ops.B = DiffOp::identity() + zdel.scaled(-lam * Scalar::q_pow(-1)) +
            zbdelb.scaled(lam * Scalar::q_pow(1)) +
            rho_dd.scaled(-lam * lam * Scalar::q_pow(-2));
    return ops;
}

FilteredInverse::FilteredInverse(const DiffOp& op, int max_total_degree)
    : max_degree_(max_total_degree) {
    for (int total = 0; total <= max_total_degree; ++total) {
        for (int a = 0; a <= total; ++a) {
            int b = total - a;
            FuncMonomial mono{0, a, b};
            FuncElement f;
            f.add_term(mono, Scalar::one());
            FuncElement image = apply_diffop(op, f);
            Scalar diag = Scalar::zero();
            FuncElement rest;
            for (const auto& [m2, c] : image.terms()) {
                if (m2 == mono) diag = c;
                else rest.add_term(m2, c);
            }
            if (diag.is_zero())
                throw SingularDiagonal("filtered inversion: zero diagonal at " + mono.to_string());
            // op(x) = diag*mono + rest => inv(mono) = (mono - inv(rest)) / diag
            FuncElement inv_rest;
            for (const auto& [m2, c] : rest.terms()) {
                auto it = table_.find({m2.a, m2.b});
                if (it == table_.end())
                    throw SingularDiagonal("filtered inversion left the triangular range at " +
                                           m2.to_string());
                inv_rest += it->second.scaled(c);
            }
            table_.emplace(std::make_pair(a, b), (f - inv_rest).scaled(diag.inverse()));
        }
    }
}

FuncElement FilteredInverse::apply(const FuncElement& f) const {
    FuncElement out;
    for (const auto& [mono, c] : f.terms()) {
        if (mono.m != 0)
            throw SingularDiagonal("filtered inverse applied outside the polynomial subalgebra");
        auto it = table_.find({mono.a, mono.b});
        if (it == table_.end())
            throw SingularDiagonal("filtered inverse applied beyond its degree bound at " +
                                   mono.to_string());
        out += it->second.scaled(c);
    }
    return out;
}

void check_pseudodiff_realizations(int max_degree) {
    BCDOps ops = build_bcd();
    // inverses need headroom: z^2 del raises the degree by one
    FilteredInverse Binv(ops.B, max_degree + 4);
    FilteredInverse Cinv(ops.C, max_degree + 4);
    FilteredInverse Dinv(ops.D, max_degree + 4);

    const Scalar q32 = Scalar::q_half_pow(3);
    const Scalar q2 = Scalar::q_pow(2);
    const FuncElement z = FuncElement::generator(ZGen::Z);
    const FuncElement zb = FuncElement::generator(ZGen::Zbar);
    const FuncElement rho2 = FuncElement::rho().pow(2);

    auto act = [](VGen g, const FuncElement& f) { return vf_act(g, f); };

    for (int total = 0; total <= max_degree; ++total) {
        for (int a = 0; a <= total; ++a) {
            FuncMonomial mono{0, a, total - a};
            FuncElement f;
            f.add_term(mono, Scalar::one());

            // q^(3/2) Zp = (z^2 del + q^2 delb B^-1) C^-1
            {
                FuncElement ci = Cinv.apply(f);
                FuncElement rhs = mul(mul(z, z), apply_diffop(DiffOp::del(), ci)) +
                                  apply_diffop(DiffOp::delbar(), Binv.apply(ci)).scaled(q2);
                if (act(VGen::Zp, f).scaled(q32) != rhs)
                    throw VerificationFailure("Zp realization fails on " + mono.to_string());
            }
            // -q^(3/2) Zm = (q^2 zb^2 delb + del B^-1) D^-1
            {
                FuncElement di = Dinv.apply(f);
                FuncElement rhs = mul(mul(zb, zb), apply_diffop(DiffOp::delbar(), di)).scaled(q2) +
                                  apply_diffop(DiffOp::del(), Binv.apply(di));
                if (act(VGen::Zm, f).scaled(-q32) != rhs)
                    throw VerificationFailure("Zm realization fails on " + mono.to_string());
            }
            // H = (1 - B^-2)/(1 - q^2)
            {
                FuncElement rhs = (f - Binv.apply(Binv.apply(f)))
                                      .scaled((Scalar::one() - q2).inverse());
                if (act(VGen::H, f) != rhs)
                    throw VerificationFailure("H realization fails on " + mono.to_string());
            }
            // q^-1 rho^2 delb = (Zm z Zp - q^4 Zp z Zm + q^(1/2)(1+q^2) Zp) B
            {
                FuncElement bf = apply_diffop(ops.B, f);
                FuncElement rhs = act(VGen::Zm, mul(z, act(VGen::Zp, bf))) -
                                  act(VGen::Zp, mul(z, act(VGen::Zm, bf))).scaled(Scalar::q_pow(4)) +
                                  act(VGen::Zp, bf).scaled(Scalar::q_half_pow(1) *
                                                           (Scalar::one() + q2));
                FuncElement lhs = mul(rho2, apply_diffop(DiffOp::delbar(), f))
                                      .scaled(Scalar::q_pow(-1));
                if (lhs != rhs)
                    throw VerificationFailure("rho^2 delb identity fails on " + mono.to_string());
            }
            // q^-1 rho^2 del = (q^4 Zp zb Zm - Zm zb Zp - q^(1/2)(1+q^2) Zm) B
            {
                FuncElement bf = apply_diffop(ops.B, f);
                FuncElement rhs = act(VGen::Zp, mul(zb, act(VGen::Zm, bf))).scaled(Scalar::q_pow(4)) -
                                  act(VGen::Zm, mul(zb, act(VGen::Zp, bf))) -
                                  act(VGen::Zm, bf).scaled(Scalar::q_half_pow(1) *
                                                           (Scalar::one() + q2));
                FuncElement lhs = mul(rho2, apply_diffop(DiffOp::del(), f))
                                      .scaled(Scalar::q_pow(-1));
                if (lhs != rhs)
                    throw VerificationFailure("rho^2 del identity fails on " + mono.to_string());
            }
        }
    }
}

}  // namespace qsphere
