#include "doctest.h"
#include "hecke/module.hpp"

using namespace hecke;

namespace {

ParabolicDatum d11{2, {1, 1}, Flavor::iwahori};

GroupElement el(const std::string& text) {
    return GroupElement(d11, Mat::parse(text, 2, 2));
}

const char* kSpecUnipotent = R"(# unipotent test module
datum p=2 blocks=1,1 flavor=iwahori
modulus 2
dim 2
assign T1 element 1*T[[1,0],[0,1]] matrix [[1,0],[0,1]]
assign Ta element 1*T[[2,0],[0,1]] matrix [[1,1],[0,1]]
assign Tb element 1*T[[1,0],[0,2]] matrix [[0,0],[0,0]]
assign Tab element 1*T[[2,0],[0,2]] matrix [[1,0],[0,1]]
assign TD element 1*T[[2,1],[0,2]] matrix [[1,0],[0,1]]
assign Ta2b element 1*T[[4,0],[0,2]] matrix [[1,1],[0,1]]
anchor Ta [[2,0],[0,1]]
)";

const char* kSpecNilpotent = R"(datum p=2 blocks=1,1 flavor=iwahori
modulus 2
dim 2
assign T1 element 1*T[[1,0],[0,1]] matrix [[1,0],[0,1]]
assign Ta element 1*T[[2,0],[0,1]] matrix [[0,1],[0,0]]
assign Tb element 1*T[[1,0],[0,2]] matrix [[0,0],[0,0]]
assign Tab element 1*T[[2,0],[0,2]] matrix [[0,0],[0,0]]
assign TD element 1*T[[2,1],[0,2]] matrix [[0,0],[0,0]]
assign Ta2b element 1*T[[4,0],[0,2]] matrix [[0,0],[0,0]]
anchor Ta [[2,0],[0,1]]
)";

} // namespace

TEST_CASE("module spec file round trip") {
    ModuleSpec spec = parse_module_spec_text(kSpecUnipotent);
    CHECK(spec.modulus == 2);
    CHECK(spec.dim == 2);
    CHECK(spec.assignments.size() == 6);
    CHECK(spec.anchor_label == "Ta");
    ModuleSpec again = parse_module_spec_text(module_spec_text(spec));
    CHECK(module_spec_text(again) == module_spec_text(spec));
}

TEST_CASE("module spec parse errors carry positions") {
    CHECK_THROWS_AS(parse_module_spec_text("modulus 2\ndim 1\n"), ParseError);
    CHECK_THROWS_WITH_AS(parse_module_spec_text("datum p=2 blocks=1,1 flavor=iwahori\nmodulus 2\ndim 1\nbogus x\n"),
                         doctest::Contains(":4:"), ParseError);
    // anchor must be strictly positive
    std::string bad = std::string("datum p=2 blocks=1,1 flavor=iwahori\nmodulus 2\ndim 1\n") +
                      "assign T1 element 1*T[[1,0],[0,1]] matrix [[1]]\n" +
                      "anchor T1 [[1,0],[0,1]]\n";
    CHECK_THROWS_AS(parse_module_spec_text(bad), ParseError);
}

TEST_CASE("consistency") {
    ModuleSpec good = parse_module_spec_text(kSpecUnipotent);
    ConsistencyReport rep = check_consistency(good);
    CHECK(rep.consistent);
    CHECK(rep.products_checked > 0);

    // negative control: unrelated matrices for Ta/Tb are flagged
    ModuleSpec bad = good;
    bad.assignments[2].action = ModMat::parse("[[1,1],[1,0]]", 2, 2); // Tb
    ConsistencyReport rep2 = check_consistency(bad);
    CHECK(!rep2.consistent);
}

TEST_CASE("radical") {
    // T_a ↦ identity: zero subspace
    ModuleSpec spec = parse_module_spec_text(kSpecUnipotent);
    GroupElement a = el("[[2,0],[0,1]]");
    CHECK(radical(spec, a).is_zero()); // unipotent matrices are invertible

    // T_a ↦ nilpotent Jordan block: full space
    ModuleSpec nil = parse_module_spec_text(kSpecNilpotent);
    Subspace rad = radical(nil, a);
    CHECK(rad.is_full(2));

    // T_a ↦ diag(1,0) over Z/2: kernel chain stabilizes at the second axis
    ModuleSpec mixed = parse_module_spec_text(kSpecNilpotent);
    for (auto& as : mixed.assignments)
        if (as.label != "T1") as.action = ModMat::parse("[[1,0],[0,0]]", 2, 2);
    Subspace rad2 = radical(mixed, a);
    CHECK(rad2.generator_count() == 1);
    CHECK(rad2.contains({0, 1}));
    CHECK(!rad2.contains({1, 0}));
}

TEST_CASE("radical independence") {
    GroupElement a = el("[[2,0],[0,1]]");
    GroupElement b = el("[[4,0],[0,2]]");
    ModuleSpec spec = parse_module_spec_text(kSpecUnipotent);
    CHECK(radical_independence(spec, a, b));
    ModuleSpec nil = parse_module_spec_text(kSpecNilpotent);
    CHECK(radical_independence(nil, a, b));

    // negative control: unrelated random matrices typically break independence
    ModuleSpec broken = parse_module_spec_text(kSpecNilpotent);
    for (auto& as : broken.assignments)
        if (as.label == "Ta2b") as.action = ModMat::identity(2, 2);
    CHECK(!radical_independence(broken, a, b)); // reported as non-module by callers
}

TEST_CASE("radical submodule check") {
    GroupElement a = el("[[2,0],[0,1]]");
    CHECK(radical_submodule_check(parse_module_spec_text(kSpecUnipotent), a)); // radical 0
    CHECK(radical_submodule_check(parse_module_spec_text(kSpecNilpotent), a)); // radical full
}

TEST_CASE("descent test") {
    ModuleSpec spec = parse_module_spec_text(kSpecUnipotent);
    CHECK(descent_test(spec)); // [[1,1],[0,1]] has determinant 1
    ModuleSpec nil = parse_module_spec_text(kSpecNilpotent);
    CHECK(!descent_test(nil)); // nilpotent
}

TEST_CASE("induced levi action") {
    ModuleSpec spec = parse_module_spec_text(kSpecUnipotent);
    CoefRing ring = spec.ring();
    GroupElement a = el("[[2,0],[0,1]]");

    // Y = T^M_1 → identity
    CHECK(induce_levi_action(spec, hecke_T(identity_element(d11), PairTag::MGammaM, ring)) ==
          ModMat::identity(2, 2));
    // Y = T^M_(a^{-1}) → inverse of the T_a matrix
    GroupElement ainv = el("[[1/2,0],[0,1]]");
    CHECK(induce_levi_action(spec, hecke_T(ainv, PairTag::MGammaM, ring)) ==
          spec.find("Ta").action.inverse());
    // Y = T^M_(1,2) → ρ(T_a)^{-1}·ρ(T_(2,2))
    CHECK(induce_levi_action(spec, hecke_T(el("[[1,0],[0,2]]"), PairTag::MGammaM, ring)) ==
          spec.find("Ta").action.inverse() * spec.find("Tab").action);

    // non-invertible T_a blocks induction
    ModuleSpec nil = parse_module_spec_text(kSpecNilpotent);
    CHECK_THROWS_AS(induce_levi_action(nil, hecke_T(identity_element(d11), PairTag::MGammaM, nil.ring())),
                    DomainError);
    // inexpressible numerators are a coverage error
    ModuleSpec tiny = spec;
    tiny.assignments.erase(tiny.assignments.begin() + 2, tiny.assignments.end()); // keep only T1, Ta
    CHECK_THROWS_AS(induce_levi_action(tiny, hecke_T(el("[[1,0],[0,2]]"), PairTag::MGammaM, ring)),
                    DomainError);
}

TEST_CASE("essential image check") {
    ModuleSpec spec = parse_module_spec_text(kSpecUnipotent);
    CoefRing ring = spec.ring();
    std::vector<Element> samples;
    samples.push_back(zero_element(PairTag::PGamma, ring, d11));
    samples.push_back(hecke_T(el("[[1,0],[0,2]]"), PairTag::PGamma, ring)); // kernel mod 2
    samples.push_back(hecke_T(el("[[2,0],[0,1]]"), PairTag::PGamma, ring)); // not in the kernel
    EssentialImageReport rep = essential_image_check(spec, samples);
    CHECK(rep.applicable);
    REQUIRE(rep.outcomes.size() == 3);
    CHECK(rep.outcomes[0].status == SampleOutcome::Status::pass);
    CHECK(rep.outcomes[1].status == SampleOutcome::Status::pass); // ρ(T_(1,2)) = 0 matrix
    CHECK(rep.outcomes[2].status == SampleOutcome::Status::no_witness);
    CHECK(rep.all_pass());

    ModuleSpec nil = parse_module_spec_text(kSpecNilpotent);
    EssentialImageReport rep2 = essential_image_check(nil, samples);
    CHECK(!rep2.applicable);
    for (const auto& o : rep2.outcomes) CHECK(o.status == SampleOutcome::Status::not_applicable);
}

TEST_CASE("prime modulus: radical is the generalized 0-eigenspace") {
    // dim(radical) + rank(A^dim) = dim over Z/2 and Z/3
    GroupElement a = el("[[2,0],[0,1]]");
    for (const auto& [name, spec] : builtin_module_library()) {
        CAPTURE(name);
        const ModMat& act = spec.find(spec.anchor_label).action;
        ModMat power = act.pow(static_cast<unsigned>(spec.dim));
        size_t rank = howell_form(power).rows(); // RREF over a field
        Subspace rad = radical(spec, a);
        CHECK(rad.generator_count() + rank == static_cast<size_t>(spec.dim));
    }
}

TEST_CASE("induced action extends the assigned action on positive elements") {
    ModuleSpec spec = parse_module_spec_text(kSpecUnipotent);
    CoefRing ring = spec.ring();
    // ρ̂(T^M_m) = ρ(T_m) for assigned positive m
    CHECK(induce_levi_action(spec, hecke_T(el("[[2,0],[0,1]]"), PairTag::MGammaM, ring)) ==
          spec.find("Ta").action);
    CHECK(induce_levi_action(spec, hecke_T(el("[[2,0],[0,2]]"), PairTag::MGammaM, ring)) ==
          spec.find("Tab").action);
    CHECK(induce_levi_action(spec, hecke_T(el("[[4,0],[0,2]]"), PairTag::MGammaM, ring)) ==
          spec.find("Ta2b").action);
}

TEST_CASE("zero-dimensional module") {
    std::string text = "datum p=2 blocks=1,1 flavor=iwahori\nmodulus 3\ndim 0\n"
                       "assign T1 element 1*T[[1,0],[0,1]] matrix []\n"
                       "assign Ta element 1*T[[2,0],[0,1]] matrix []\n"
                       "anchor Ta [[2,0],[0,1]]\n";
    ModuleSpec spec = parse_module_spec_text(text);
    GroupElement a = el("[[2,0],[0,1]]");
    GroupElement b = el("[[4,0],[0,2]]");
    CHECK(check_consistency(spec).consistent);
    CHECK(radical(spec, a).is_zero());
    CHECK_THROWS_AS(radical(spec, b), DomainError); // T_b not assigned
    // independence trivially holds once T_b is assigned
    spec.assignments.push_back({"Tb2", hecke_T(b, PairTag::PGamma, spec.ring()), ModMat(0, 0, 3)});
    CHECK(radical_independence(spec, a, b));
    CHECK(descent_test(spec));
    CHECK(induce_levi_action(spec, hecke_T(identity_element(d11), PairTag::MGammaM, spec.ring())).rows() == 0);
    // the zero module passes the essential-image check on every sample
    std::vector<Element> samples{zero_element(PairTag::PGamma, spec.ring(), d11),
                                 hecke_T(el("[[1,0],[0,3]]") * el("[[3,0],[0,1]]").inverse(), PairTag::PGamma, spec.ring())};
    EssentialImageReport rep = essential_image_check(spec, samples);
    CHECK(rep.applicable);
    CHECK(rep.all_pass());
}

TEST_CASE("builtin library is consistent and well behaved") {
    auto lib = builtin_module_library();
    CHECK(lib.size() >= 10);
    GroupElement a = el("[[2,0],[0,1]]");
    GroupElement b = el("[[4,0],[0,2]]");
    int with_descent = 0, without = 0;
    for (const auto& [name, spec] : lib) {
        CAPTURE(name);
        CHECK(check_consistency(spec).consistent);
        CHECK(radical_independence(spec, a, b));
        CHECK(radical_submodule_check(spec, a));
        CHECK(descent_test(spec) == radical(spec, a).is_zero());
        descent_test(spec) ? ++with_descent : ++without;
        // serialization round-trips every library spec
        ModuleSpec re = parse_module_spec_text(module_spec_text(spec));
        CHECK(module_spec_text(re) == module_spec_text(spec));
    }
    CHECK(with_descent >= 5);
    CHECK(without >= 2);
}
