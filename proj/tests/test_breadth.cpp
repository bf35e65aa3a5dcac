// Cross-checks on datum shapes beyond the two standard ones: three blocks,
// a size-2 block in second position, and p = 5.

#include "doctest.h"
#include "hecke/levi.hpp"
#include "hecke/session.hpp"

using namespace hecke;

namespace {

ParabolicDatum d111{2, {1, 1, 1}, Flavor::iwahori};
ParabolicDatum d12{2, {1, 2}, Flavor::iwahori};
ParabolicDatum d5{5, {1, 1}, Flavor::iwahori};
CoefRing Z = CoefRing::integers();

GroupElement el(const ParabolicDatum& d, const std::string& text) {
    return GroupElement(d, Mat::parse(text, d.p, d.n()));
}

} // namespace

TEST_CASE("three blocks: counts, theta, shifts") {
    GroupElement g = el(d111, "[[1,0,0],[0,2,0],[0,0,4]]");
    // index = 2^((a2-a1)+(a3-a1)+(a3-a2)) = 2^4
    CHECK(oracle_index(g, PairTag::PGamma) == 16);
    auto dec = decompose_double_coset(g, PairTag::PGamma);
    CHECK(dec.cosets.size() == 16);

    // small enough for the enumerated oracle
    GroupElement h = el(d111, "[[1,0,0],[0,2,0],[0,0,2]]");
    CHECK(oracle_index(h, PairTag::PGamma) == 4);
    CHECK(oracle_index_enumerated(h, PairTag::PGamma) == 4);
    CHECK(decompose_double_coset(h, PairTag::PGamma).cosets.size() == 4);

    // theta collapses all cosets onto the common M-part
    Element th = theta(hecke_T(h, PairTag::PGamma, Z));
    CHECK(th == hecke_T(h, PairTag::MGammaM, Z).scaled(4));

    GroupElement a = canonical_strictly_positive(d111);
    CHECK(a == el(d111, "[[4,0,0],[0,2,0],[0,0,1]]"));
    CHECK(is_strictly_positive(a));
    auto [n, shifted] = power_shift(hecke_T(h, PairTag::PGamma, Z), a);
    CHECK(n == 1);
    CHECK(centralizer_test(shifted, a));
    // U-filtration: positivity needs two powers for a deeper denominator
    CHECK(positive_shift(a, el(d111, "[[1,0,0],[0,1,0],[0,0,4]]")) == 2);
}

TEST_CASE("size-2 block in second position") {
    GroupElement g = el(d12, "[[2,0,0],[0,1,0],[0,0,2]]");
    // pattern positions: (1,2),(1,3) cross; (2,3),(3,2) within the block
    // exponents a = (1,0,1): (1,2): 0, (1,3): 0, (2,3): 1, (3,2): 0
    CHECK(oracle_index(g, PairTag::PGamma) == 2);
    CHECK(decompose_double_coset(g, PairTag::PGamma).cosets.size() == 2);
    CHECK(oracle_index(g, PairTag::MGammaM) == 2);
    CHECK(decompose_double_coset(g, PairTag::MGammaM).cosets.size() == 2);

    GroupElement a = canonical_strictly_positive(d12);
    CHECK(a == el(d12, "[[2,0,0],[0,1,0],[0,0,1]]"));
    CHECK(is_positive(g));
    CHECK(!is_strictly_positive(g)); // second block is not scalar-constant with a drop

    // lift section through the 2x2 Levi block
    Element y = hecke_T(g, PairTag::MGammaM, Z);
    Element lifted = levi_lift(y, a);
    CHECK(theta(lifted) == y);
    CHECK(centralizer_test(lifted, a));

    // canonical forms on the (1,2) shape stay coset invariants
    SplitMix64 rng(123);
    for (int i = 0; i < 25; ++i) {
        GroupElement hrand = random_group_element(d12, PairTag::PGamma, rng, 1);
        GroupElement gamma = random_gamma_word(d12, PairTag::PGamma, rng, 2);
        CHECK(*coset_canonical(d12, hrand.mat(), PairTag::PGamma) ==
              *coset_canonical(d12, (gamma * hrand).mat(), PairTag::PGamma));
    }
}

TEST_CASE("p = 5") {
    GroupElement g = el(d5, "[[1,0],[0,5]]");
    CHECK(oracle_index(g, PairTag::PGamma) == 5);
    CHECK(decompose_double_coset(g, PairTag::PGamma).cosets.size() == 5);
    CHECK(oracle_index_enumerated(g, PairTag::PGamma) == 5);
    CHECK(theta(hecke_T(g, PairTag::PGamma, CoefRing::mod(5))).is_zero());
    RadicalWitness w = kernel_test(hecke_T(g, PairTag::PGamma, CoefRing::mod(5)),
                                   el(d5, "[[5,0],[0,1]]"));
    REQUIRE(w.exponent.has_value());
    CHECK(*w.exponent == 1);
}

TEST_CASE("associativity across shapes") {
    for (const ParabolicDatum& d : {d111, d12}) {
        SessionConfig cfg{d, Z, 17, default_orbit_cap, 1};
        SplitMix64 rng(17);
        for (int i = 0; i < 8; ++i) {
            Element x = random_element(cfg, 1, 2, PairTag::PGamma, rng);
            Element y = random_element(cfg, 1, 2, PairTag::PGamma, rng);
            Element z = random_element(cfg, 1, 2, PairTag::PGamma, rng);
            CHECK(hecke_mul(hecke_mul(x, y), z) == hecke_mul(x, hecke_mul(y, z)));
            CHECK(theta(hecke_mul(x, y)) == hecke_mul(theta(x), theta(y)));
        }
    }
}
