#include "doctest.h"
#include "hecke/coset.hpp"
#include "hecke/session.hpp"

using namespace hecke;

namespace {

ParabolicDatum d11{2, {1, 1}, Flavor::iwahori};
ParabolicDatum d21{2, {2, 1}, Flavor::iwahori};
ParabolicDatum t11{3, {1, 1}, Flavor::iwahori};

GroupElement el(const ParabolicDatum& d, const std::string& text) {
    return GroupElement(d, Mat::parse(text, d.p, d.n()));
}

} // namespace

TEST_CASE("coset equality") {
    GroupElement g = el(d11, "[[1,0],[0,2]]");
    GroupElement gamma = el(d11, "[[3,1],[0,1]]");
    RightCoset a(g, PairTag::PGamma);
    CHECK(coset_eq(a, a));                                    // reflexivity
    CHECK(coset_eq(a, RightCoset(gamma * g, PairTag::PGamma))); // left translate
    // Γ·diag(1,2)·u(0) vs Γ·diag(1,2)·u(1): difference conjugates to u(1/2) ∉ Γ
    GroupElement u1 = el(d11, "[[1,1],[0,1]]");
    CHECK(!coset_eq(a, RightCoset(g * u1, PairTag::PGamma)));
    CHECK_THROWS_AS(coset_eq(a, RightCoset(el(d11, "[[1,0],[0,2]]"), PairTag::MGammaM)), DomainError);
}

TEST_CASE("coset key is a left-translation invariant") {
    SplitMix64 rng(11);
    for (int i = 0; i < 40; ++i) {
        GroupElement g = random_group_element(d21, PairTag::PGamma, rng, 2);
        GroupElement gamma = random_gamma_word(d21, PairTag::PGamma, rng, 3);
        CHECK(RightCoset(g, PairTag::PGamma).key() == RightCoset(gamma * g, PairTag::PGamma).key());
    }
}

TEST_CASE("truncation level") {
    CHECK(truncation_level(el(d11, "[[3,1],[0,1]]")) == 1);   // integral with integral inverse
    CHECK(truncation_level(el(d11, "[[1,0],[0,2]]")) == 3);   // g^{-1} has an entry of valuation -1
    CHECK(truncation_level(el(d11, "[[4,0],[0,1]]")) == 5);   // d = 2 from g^{-1}
}

TEST_CASE("gamma generators") {
    // blocks (1,1), iwahori, p=2, N=3: u(1), d1(-1), d1(5), d2(-1), d2(5)
    auto gens = gamma_generators(d11, 3);
    REQUIRE(gens.size() == 5);
    CHECK(gens[0] == el(d11, "[[1,1],[0,1]]"));
    CHECK(gens[1] == el(d11, "[[-1,0],[0,1]]"));
    CHECK(gens[2] == el(d11, "[[5,0],[0,1]]"));
    CHECK(gens[3] == el(d11, "[[1,0],[0,-1]]"));
    CHECK(gens[4] == el(d11, "[[1,0],[0,5]]"));
    for (const auto& g : gens) CHECK(member(g, Subgroup::Gamma));

    // blocks (2), N=1, p=3 includes e21(3)
    ParabolicDatum d2{3, {2}, Flavor::iwahori};
    bool has_lower = false;
    for (const auto& g : gamma_generators(d2, 1))
        if (g == GroupElement(d2, Mat::parse("[[1,0],[3,1]]", 3))) has_lower = true;
    CHECK(has_lower);

    // pro-p flavor at p=3: diagonal generators are d_k(1+3)
    ParabolicDatum pp{3, {1, 1}, Flavor::pro_p};
    bool has_principal = false;
    for (const auto& g : gamma_generators(pp, 2))
        if (g == GroupElement(pp, Mat::parse("[[4,0],[0,1]]", 3))) has_principal = true;
    CHECK(has_principal);

    // M-pair generators stay inside M
    for (const auto& g : gamma_generators(d21, 3, PairTag::MGammaM)) CHECK(g.in_m());
}

TEST_CASE("decompose double coset") {
    // g ∈ Γ: single coset
    CHECK(decompose_double_coset(el(d11, "[[3,1],[0,1]]"), PairTag::PGamma).cosets.size() == 1);

    // p=2 blocks (1,1), diag(1,2): exactly 2 cosets, reps diag(1,2)·u(0), diag(1,2)·u(1)
    auto dec = decompose_double_coset(el(d11, "[[1,0],[0,2]]"), PairTag::PGamma);
    REQUIRE(dec.cosets.size() == 2);
    RightCoset r0(el(d11, "[[1,0],[0,2]]"), PairTag::PGamma);
    RightCoset r1(el(d11, "[[1,0],[0,2]]") * el(d11, "[[1,1],[0,1]]"), PairTag::PGamma);
    CHECK(coset_eq(dec.cosets[0], r0));
    CHECK((coset_eq(dec.cosets[1], r1) || coset_eq(dec.cosets[0], r1)));

    // central positive a: ΓaΓ = Γa
    CHECK(decompose_double_coset(el(d11, "[[2,0],[0,1]]"), PairTag::PGamma).cosets.size() == 1);

    // orbit cap triggers a resource error
    CHECK_THROWS_AS(decompose_double_coset(el(d11, "[[1,0],[0,4]]"), PairTag::PGamma, 2), ResourceError);

    // M-pair decomposition of a non-M element is a domain error
    CHECK_THROWS_AS(decompose_double_coset(el(d11, "[[1,1],[0,1]]"), PairTag::MGammaM), DomainError);
}

TEST_CASE("oracle index examples") {
    CHECK(oracle_index(el(d11, "[[3,1],[0,1]]"), PairTag::PGamma) == 1);
    CHECK(oracle_index(el(d11, "[[1,0],[0,2]]"), PairTag::PGamma) == 2);
    CHECK(oracle_index(el(t11, "[[1,0],[0,3]]"), PairTag::PGamma) == 3);
    // enumerated oracle agrees on the non-diagonal spec example
    CHECK(oracle_index_enumerated(el(d11, "[[3,1],[0,1]]"), PairTag::PGamma) == 1);
    CHECK(oracle_index_enumerated(el(d11, "[[1,0],[0,2]]"), PairTag::PGamma) == 2);
}

TEST_CASE("closed form matches exhaustive enumeration") {
    // diagonal cases across both pairs and both shapes
    for (const char* text : {"[[1,0],[0,2]]", "[[2,0],[0,1]]", "[[1,0],[0,4]]", "[[2,0],[0,4]]", "[[4,0],[0,1]]"}) {
        GroupElement g = el(d11, text);
        CHECK(oracle_index(g, PairTag::PGamma) == oracle_index_enumerated(g, PairTag::PGamma));
        CHECK(oracle_index(g, PairTag::MGammaM) == oracle_index_enumerated(g, PairTag::MGammaM));
    }
    ParabolicDatum d2{2, {2}, Flavor::iwahori};
    for (const char* text : {"[[1,0],[0,2]]", "[[2,0],[0,1]]", "[[1,0],[0,4]]"}) {
        GroupElement g(d2, Mat::parse(text, 2, 2));
        CHECK(oracle_index(g, PairTag::PGamma) == oracle_index_enumerated(g, PairTag::PGamma));
    }
    GroupElement g3 = el(t11, "[[1,0],[0,3]]");
    CHECK(oracle_index(g3, PairTag::PGamma) == oracle_index_enumerated(g3, PairTag::PGamma));
}

TEST_CASE("BFS count equals the oracle on non-diagonal inputs") {
    for (const char* text : {"[[1,1/2],[0,1]]", "[[2,1],[0,2]]", "[[1,1/2],[0,2]]", "[[2,1/2],[0,1]]"}) {
        GroupElement g = el(d11, text);
        CHECK(mpz_class(static_cast<unsigned long>(decompose_double_coset(g, PairTag::PGamma).cosets.size())) ==
              oracle_index_enumerated(g, PairTag::PGamma));
    }
}

TEST_CASE("representative independence of the decomposition") {
    SplitMix64 rng(23);
    for (int i = 0; i < 10; ++i) {
        GroupElement g = el(d11, i % 2 ? "[[1,0],[0,2]]" : "[[2,1],[0,2]]");
        GroupElement h = random_gamma_word(d11, PairTag::PGamma, rng, 2) * g *
                         random_gamma_word(d11, PairTag::PGamma, rng, 2);
        auto dg = decompose_double_coset(g, PairTag::PGamma);
        auto dh = decompose_double_coset(h, PairTag::PGamma);
        REQUIRE(dg.cosets.size() == dh.cosets.size());
        for (const RightCoset& c : dh.cosets) CHECK(decomposition_contains(dg, c.rep()));
    }
}

TEST_CASE("positive m: every right coset has a representative in mΓ_M") {
    // rep = u·mm lies in Γ·m·Γ_M iff u ∈ Γ_U and mm ∈ Γ_M·m·Γ_M
    auto check_property = [](const GroupElement& m, size_t expect_cosets) {
        REQUIRE(is_positive(m));
        auto dec = decompose_double_coset(m, PairTag::PGamma);
        CHECK(dec.cosets.size() == expect_cosets);
        auto mdec = decompose_double_coset(m, PairTag::MGammaM);
        for (const RightCoset& c : dec.cosets) {
            auto [u, mm] = factor_um(c.rep());
            CHECK(member(u, Subgroup::GammaU));
            CHECK(decomposition_contains(mdec, mm));
        }
    };
    check_property(el(d11, "[[2,0],[0,1]]"), 1);
    check_property(el(d11, "[[4,0],[0,2]]"), 1);
    check_property(el(d11, "[[6,0],[0,3]]"), 1);
    // multi-coset positive element in blocks (2,1)
    check_property(el(d21, "[[2,0,0],[0,4,0],[0,0,1]]"), 2);
    check_property(el(d21, "[[4,0,0],[0,2,0],[0,0,1]]"), 2); // the Levi Iwahori double coset itself splits
}

TEST_CASE("canonical representative is a coset invariant") {
    SplitMix64 rng(77);
    for (const ParabolicDatum& d : {d11, d21, t11}) {
        for (PairTag tag : {PairTag::PGamma, PairTag::MGammaM}) {
            for (int i = 0; i < 60; ++i) {
                GroupElement h = random_group_element(d, tag, rng, 2);
                GroupElement gamma = random_gamma_word(d, tag, rng, 1 + static_cast<int>(rng.below(3)));
                auto c1 = coset_canonical(d, h.mat(), tag);
                auto c2 = coset_canonical(d, (gamma * h).mat(), tag);
                REQUIRE(c1.has_value());
                REQUIRE(c2.has_value());
                CHECK(*c1 == *c2);
                // the canonical form lies in the coset and is idempotent
                CHECK(mat_in_pair_subgroup(d, *c1 * h.mat().inverse(), tag));
                CHECK(*coset_canonical(d, *c1, tag) == *c1);
            }
        }
    }
}

TEST_CASE("canonical representatives separate distinct cosets") {
    SplitMix64 rng(78);
    for (const ParabolicDatum& d : {d11, d21}) {
        std::vector<GroupElement> samples;
        for (int i = 0; i < 25; ++i) samples.push_back(random_group_element(d, PairTag::PGamma, rng, 1));
        for (size_t i = 0; i < samples.size(); ++i)
            for (size_t j = i + 1; j < samples.size(); ++j) {
                bool same = mat_in_pair_subgroup(d, samples[i].mat() * samples[j].mat().inverse(), PairTag::PGamma);
                bool same_canon = *coset_canonical(d, samples[i].mat(), PairTag::PGamma) ==
                                  *coset_canonical(d, samples[j].mat(), PairTag::PGamma);
                CHECK(same == same_canon);
            }
    }
}

TEST_CASE("blocks of size three fall back to the coarse key") {
    ParabolicDatum d3{2, {3}, Flavor::iwahori};
    CHECK(!coset_canonical(d3, Mat::identity(3, 2), PairTag::PGamma).has_value());
    // decomposition still works through membership tests alone
    GroupElement g(d3, Mat::parse("[[1,0,0],[0,1,0],[0,0,2]]", 2, 3));
    auto dec = decompose_double_coset(g, PairTag::PGamma);
    CHECK(mpz_class(static_cast<unsigned long>(dec.cosets.size())) == oracle_index(g, PairTag::PGamma));
}

TEST_CASE("pro-p flavor refines the coset decomposition") {
    ParabolicDatum iwa{3, {1, 1}, Flavor::iwahori};
    ParabolicDatum prp{3, {1, 1}, Flavor::pro_p};
    // diag(1,3): three cosets under either flavor
    GroupElement gi(iwa, Mat::parse("[[1,0],[0,3]]", 3, 2));
    GroupElement gp(prp, Mat::parse("[[1,0],[0,3]]", 3, 2));
    CHECK(decompose_double_coset(gi, PairTag::PGamma).cosets.size() == 3);
    CHECK(decompose_double_coset(gp, PairTag::PGamma).cosets.size() == 3);
    // the closed form is flavor-independent on diagonal inputs (the diagonal
    // constraints cancel); the enumerated oracle sees the smaller group
    CHECK(oracle_index(gp, PairTag::PGamma) == 3);
    CHECK(oracle_index_enumerated(gp, PairTag::PGamma) == 3);
    // u(1/3): stabilizer of the seed coset is {γ : ζ1 ≡ ζ2 mod 3}, so the
    // full Iwahori splits the double coset into 2 while for the pro-p
    // flavor (all diagonal units ≡ 1) it stays a single coset
    GroupElement ui(iwa, Mat::parse("[[1,1/3],[0,1]]", 3, 2));
    GroupElement up(prp, Mat::parse("[[1,1/3],[0,1]]", 3, 2));
    auto deci = decompose_double_coset(ui, PairTag::PGamma);
    auto decp = decompose_double_coset(up, PairTag::PGamma);
    CHECK(deci.cosets.size() == 2);
    CHECK(decp.cosets.size() == 1);
    CHECK(mpz_class(static_cast<unsigned long>(deci.cosets.size())) == oracle_index_enumerated(ui, PairTag::PGamma));
    CHECK(mpz_class(static_cast<unsigned long>(decp.cosets.size())) == oracle_index_enumerated(up, PairTag::PGamma));
}

TEST_CASE("M-pair decomposition") {
    // central a in the Levi pair: single coset
    CHECK(decompose_double_coset(el(d11, "[[2,0],[0,1]]"), PairTag::MGammaM).cosets.size() == 1);
    // blocks (2): within the Iwahori of GL_2, diag(1,p) has p cosets
    ParabolicDatum d2{2, {2}, Flavor::iwahori};
    GroupElement g(d2, Mat::parse("[[1,0],[0,2]]", 2, 2));
    auto dec = decompose_double_coset(g, PairTag::MGammaM);
    CHECK(dec.cosets.size() == 2);
    CHECK(oracle_index(g, PairTag::MGammaM) == 2);
}
