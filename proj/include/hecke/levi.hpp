#pragma once

#include <optional>

#include "hecke/hecke.hpp"

namespace hecke {

/// Witness that Y ∈ H_R(M) is the fraction Θ(T_a)^{-n}·Θ(X):
/// the shifted element Θ(T_a)^n·Y lies in H_R(M^+) and lifts to X.
struct LocalizationWitness {
    int exponent = 0;         // n
    Element numerator;        // X over (P,Γ)
};

/// Minimal n > 0 with T_a^ن·X = 0, when one exists.
struct RadicalWitness {
    std::optional<int> exponent;
};

/// Θ^P_M: (Γ u m) ↦ (Γ_M m) termwise; an R-algebra homomorphism on
/// invariants.  Requires X invariant.
Element theta(const Element& x);

/// X·T_a = T_a·X, with the structural cross-check: X ∈ C(a) iff every
/// support coset has its U-part in Γ_U (coset representatives then lie in
/// M up to Γ).  Both answers must agree; disagreement is an internal
/// invariant violation.
bool centralizer_test(const Element& x, const GroupElement& a);

/// Minimal n >= 0 with T_a^n·X ∈ C(a), together with Y = T_a^n·X.
/// Terminates inside a valuation-deficit cap derived from the support.
std::pair<int, Element> power_shift(const Element& x, const GroupElement& a);

/// Section of Θ over H_R(M^+): T^M_m ↦ T^P_m for positive m.
/// Postconditions (checked): theta(levi_lift(Y)) = Y, and the lift
/// centralizes T_a.
Element levi_lift(const Element& y, const GroupElement& a);

/// Writes Y ∈ H_R(M) as Θ(T_a)^{-n}·Θ(X): minimal n >= 0 with
/// (T^M_a)^n·Y supported on positive double cosets, X the lift.
LocalizationWitness fraction_decompose(const Element& y, const GroupElement& a);

/// Radical membership of X ∈ H_R(P): minimal n with T_a^n·X = 0 when it
/// exists (iff Θ(X) = 0; the equivalence is asserted).
RadicalWitness kernel_test(const Element& x, const GroupElement& a);

/// Θ-images of T_g over all double cosets ΓgΓ whose representatives u·m
/// have M-part diagonal valuations and U-part entry valuations within
/// [-bound, bound] (m block-monomial).  Generating family of a truncation
/// of the image ring over Z.
struct ImageSpanFamily {
    std::vector<GroupElement> bases;   // one P-double-coset rep per member
    std::vector<Element> images;       // theta(T_base), over (M,Γ_M)
};
ImageSpanFamily image_span_basis(const ParabolicDatum& datum, const CoefRing& ring,
                                 int bound, std::uint64_t orbit_cap = default_orbit_cap);

/// Non-injectivity experiment: coordinates of the family in the T^M-basis
/// and the elementary divisors of the integer coefficient matrix.
struct ImageSpanReport {
    ImageSpanFamily family;
    std::vector<GroupElement> labels;          // T^M-basis labels (double-coset reps)
    std::vector<std::vector<mpz_class>> coords; // family × labels, over Z
    std::vector<mpz_class> elementary_divisors;
};
ImageSpanReport image_span_report(const ParabolicDatum& datum, int bound,
                                  std::uint64_t orbit_cap = default_orbit_cap);

} // namespace hecke
