#include <doctest.h>

#include <random>

#include "qsphere/suq2.hpp"

using namespace qsphere;

namespace {
using G = SUGen;
}

TEST_CASE("normalization of the defining relations") {
    const Scalar q = Scalar::q_pow(1);
    // alpha delta = 1 + q beta gamma
    CHECK(normalize_suq2({G::Alpha, G::Delta}) ==
          SUq2Element::one() +
              normalize_suq2({G::Beta, G::Gamma}).scaled(q));
    // beta gamma^-1 = gamma^-1 beta
    CHECK(normalize_suq2({G::Beta, G::GammaInv}) == normalize_suq2({G::GammaInv, G::Beta}));
    // alpha beta - q beta alpha = 0
    CHECK(normalize_suq2({G::Alpha, G::Beta}) ==
          normalize_suq2({G::Beta, G::Alpha}).scaled(q));
    // localized inverses
    CHECK(normalize_suq2({G::Beta, G::BetaInv}) == SUq2Element::one());
    CHECK(normalize_suq2({G::GammaInv, G::Gamma}) == SUq2Element::one());
}

TEST_CASE("stereographic elements verify") {
    StereographicElements s = stereographic_elements();
    // denominator-cleared projection identities, re-stated
    SUq2Element one_minus_b3 = SUq2Element::one() - s.b_3;
    CHECK(mul(s.z_img, one_minus_b3) == s.b_minus.scaled(-Scalar::q_pow(1)));
    CHECK(mul(s.zb_img, one_minus_b3) == s.b_plus);
    // Eq (zz) for the images
    CHECK(mul(s.z_img, s.zb_img) ==
          mul(s.zb_img, s.z_img).scaled(Scalar::q_pow(-2)) +
              SUq2Element(Scalar::q_pow(-2) - Scalar::one()));
    CHECK(star_suq2(s.z_img) == s.zb_img);
}

TEST_CASE("convention is pinned by consequence") {
    CHECK(select_convention() == SUConvention::QPlus);
    CHECK_THROWS_AS(stereographic_elements(SUConvention::QMinus), VerificationFailure);
}

TEST_CASE("embedding the sphere algebra") {
    StereographicElements s = stereographic_elements();
    PodlesGenerators p = podles_generators();
    CHECK(embed_sphere_element(p.b_minus) == s.b_minus);
    CHECK(embed_sphere_element(p.b_plus) == s.b_plus);
    CHECK(embed_sphere_element(p.b_3) == s.b_3);
    // rho rhoi = 1 transported: embed(rhoi) * embed(rho) = 1
    SUq2Element rhoi_img = embed_sphere_element(FuncElement::monomial(1, 0, 0));
    SUq2Element rho_img = embed_sphere_element(FuncElement::rho());
    CHECK(mul(rhoi_img, rho_img) == SUq2Element::one());
    // homomorphism on random products
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<int> pick(0, 2);
    for (int i = 0; i < 30; ++i) {
        FuncElement x = FuncElement::one();
        SUq2Element u = SUq2Element::one();
        for (int t = 0; t < 3; ++t) {
            switch (pick(rng)) {
                case 0: x = mul(x, p.b_minus); u = mul(u, s.b_minus); break;
                case 1: x = mul(x, p.b_plus); u = mul(u, s.b_plus); break;
                default: x = mul(x, p.b_3); u = mul(u, s.b_3); break;
            }
        }
        CHECK(embed_sphere_element(x) == u);
    }
}

TEST_CASE("star is an antihomomorphism on the localized algebra") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> len(1, 5), pick(0, 5);
    for (int i = 0; i < 50; ++i) {
        std::vector<SUGen> wx(len(rng)), wy(len(rng));
        for (auto& g : wx) g = static_cast<SUGen>(pick(rng));
        for (auto& g : wy) g = static_cast<SUGen>(pick(rng));
        SUq2Element x = normalize_suq2(wx), y = normalize_suq2(wy);
        CHECK(star_suq2(mul(x, y)) == mul(star_suq2(y), star_suq2(x)));
        CHECK(star_suq2(star_suq2(x)) == x);
    }
}

TEST_CASE("coaction and the classical Mobius check") {
    coaction_homomorphism_check();
    classical_mobius_check(1e-12);
}

TEST_CASE("pbw confluence") {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<int> len(1, 8), pick(0, 5);
    for (int i = 0; i < 500; ++i) {
        std::vector<SUGen> w(len(rng));
        for (auto& g : w) g = static_cast<SUGen>(pick(rng));
        CHECK(normalize_suq2(w, SUConvention::QPlus, FoldStrategy::LeftToRight) ==
              normalize_suq2(w, SUConvention::QPlus, FoldStrategy::RightToLeft));
    }
}
