#pragma once

#include <iosfwd>
#include <optional>

#include "hecke/levi.hpp"
#include "hecke/zmod.hpp"

namespace hecke {

/// Submodule of (Z/m)^d in Howell canonical form; equality of subspaces is
/// equality of the canonical matrices.
struct Subspace {
    ModMat basis;

    bool operator==(const Subspace& o) const { return basis == o.basis; }
    bool operator!=(const Subspace& o) const { return !(*this == o); }
    size_t generator_count() const { return basis.rows(); }
    bool is_zero() const { return basis.rows() == 0; }
    mpz_class span_size() const;
    bool is_full(int dim) const;
    bool contains(const std::vector<std::uint64_t>& v) const { return in_howell_span(basis, v); }
};

/// Finite-dimensional left H_R(P)-module presentation: matrices over Z/m
/// assigned to named algebra elements, with a distinguished T_a assignment
/// (its strictly positive a recorded).  Only locally verifiable: products
/// of assigned elements are checked when they stay inside the assigned span.
struct ModuleSpec {
    std::uint64_t modulus = 2;
    int dim = 0;
    ParabolicDatum datum;

    struct Assignment {
        std::string label;
        Element element; // over (P,Γ), coefficients mod modulus
        ModMat action;   // dim×dim over Z/modulus
    };
    std::vector<Assignment> assignments;
    std::string anchor_label;
    std::optional<GroupElement> anchor; // the strictly positive a

    CoefRing ring() const { return CoefRing::mod(mpz_class(static_cast<unsigned long>(modulus))); }
    const Assignment& find(const std::string& label) const;
    /// Matrix assigned to hecke_T(g); throws DomainError when unassigned.
    const ModMat& action_of(const GroupElement& g) const;
};

ModuleSpec parse_module_spec(std::istream& in, const std::string& source_name = "<module spec>");
ModuleSpec parse_module_spec_text(const std::string& text);
std::string module_spec_text(const ModuleSpec& spec);

struct ConsistencyReport {
    bool consistent = true;
    std::vector<std::string> violations;
    int products_checked = 0;
    int products_skipped = 0;
};

/// Local consistency: T_1 ↦ identity present; for every ordered pair of
/// assigned elements whose product decomposes inside the assigned span the
/// matrix product must match; linear relations among assigned elements
/// must be satisfied by the matrices.
ConsistencyReport check_consistency(const ModuleSpec& spec);

/// Rad_a: the stabilized eventual kernel of the T_a action matrix.
Subspace radical(const ModuleSpec& spec, const GroupElement& a);

/// Lemma-level check that Rad does not depend on the strictly positive
/// element: radical(spec,a) == radical(spec,b).
bool radical_independence(const ModuleSpec& spec, const GroupElement& a, const GroupElement& b);

/// Every assigned action maps the radical into itself.
bool radical_submodule_check(const ModuleSpec& spec, const GroupElement& a);

/// T_a acts as an R-linear automorphism (determinant a unit of Z/m).
bool descent_test(const ModuleSpec& spec, const GroupElement& a);
bool descent_test(const ModuleSpec& spec);

/// Induced H_R(M)-action: ρ̂(Y) = ρ(T_a)^{-n}·ρ(X) with (n,X) from
/// fraction_decompose.  Requires descent_test; the numerator must be
/// expressible in assigned elements; well-definedness is re-checked at
/// exponent n+1.
ModMat induce_levi_action(const ModuleSpec& spec, const Element& y);

struct SampleOutcome {
    enum class Status { pass, fail, inexpressible, no_witness, not_applicable };
    Status status;
    std::string detail;
};

struct EssentialImageReport {
    bool applicable = false; // radical must vanish for the criterion to bite
    std::vector<SampleOutcome> outcomes;
    bool all_pass() const;
};

/// For samples X with a radical witness (X ∈ Ker Θ): when Rad = 0 and X is
/// expressible, ρ(X) must annihilate the module.
EssentialImageReport essential_image_check(const ModuleSpec& spec, const std::vector<Element>& samples);

/// Hand-built consistent module specs over Z/2 and Z/3 (d ≤ 4) for the
/// p=2, blocks (1,1) datum; assignments cover T_1, T_(2,1), T_(1,2),
/// T_(2,2), T_[[2,1],[0,2]], T_(4,2).
std::vector<std::pair<std::string, ModuleSpec>> builtin_module_library();

const char* sample_status_name(SampleOutcome::Status s);

} // namespace hecke
