#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "hecke/coefficient.hpp"
#include "hecke/coset.hpp"

namespace hecke {

/// Finitely supported R-combination of right cosets over a fixed pair
/// ((P,Γ) or (M,Γ_M)).  Stored in the coset basis; the T-basis is a view.
/// No zero coefficients are kept; the support is deduplicated under coset
/// equality and preserves first-insertion order (which makes all printed
/// output deterministic).
class Element {
  public:
    struct Term {
        RightCoset coset;
        mpz_class coef;
    };

    Element(PairTag tag, CoefRing ring, ParabolicDatum datum)
        : tag_(tag), ring_(std::move(ring)), datum_(std::move(datum)) {}

    PairTag tag() const { return tag_; }
    const CoefRing& ring() const { return ring_; }
    const ParabolicDatum& datum() const { return datum_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// True when the element is known Γ-invariant by construction
    /// (hecke_T, sums/products of invariants, …).
    bool invariant() const { return invariant_; }
    Element with_invariant_flag(bool f) const {
        Element e = *this;
        e.invariant_ = f;
        return e;
    }

    /// Collecting insert: merges with an existing equal coset, drops zeros.
    void add(const RightCoset& coset, const mpz_class& coef);
    /// Coefficient of the given coset (0 when absent).
    mpz_class coefficient(const RightCoset& coset) const;

    Element operator+(const Element& o) const;
    Element operator-(const Element& o) const;
    Element operator-() const { return scaled(-1); }
    Element scaled(const mpz_class& c) const;

    bool operator==(const Element& o) const;
    bool operator!=(const Element& o) const { return !(*this == o); }

    /// Image under the right action of g: (Γh) ↦ (Γhg).
    Element right_translate(const GroupElement& g) const;

  private:
    PairTag tag_;
    CoefRing ring_;
    ParabolicDatum datum_;
    std::vector<Term> terms_;
    std::unordered_multimap<std::uint64_t, size_t> index_;
    bool invariant_ = false;

    void check_compatible(const Element& o) const;
    void rebuild_index();
    friend Element hecke_T(const GroupElement&, PairTag, const CoefRing&, std::uint64_t);
    friend Element hecke_mul(const Element&, const Element&);
};

/// T_g: coefficient-1 sum over the right cosets of ΓgΓ.  Depends only on
/// the double coset; the result is Γ-invariant by construction.
Element hecke_T(const GroupElement& g, PairTag tag, const CoefRing& ring,
                std::uint64_t orbit_cap = default_orbit_cap);

/// Convolution: bilinear extension of (Γg)·(Γh) = (Γgh), collected under
/// coset equality.  Well-defined for invariant X (Y may be any element of
/// the free module — this is the right module action).
Element hecke_mul(const Element& x, const Element& y);

/// X·γ = X for every generator of Γ mod p^N at the support's truncation level.
bool invariance_check(const Element& x);

/// Writes an invariant element in the T-basis: partitions the support into
/// double cosets and returns (coefficient, representative) pairs.  Throws
/// DomainError when the support is not a union of constant-coefficient
/// double cosets (the element was not invariant).
std::vector<std::pair<mpz_class, GroupElement>> to_T_basis(const Element& x);

/// Coefficient base change along Z -> Z/m (or ring-to-ring re-canonicalization).
Element base_change(const Element& x, const CoefRing& to);

/// T-basis text: `c1*T[m1] + c2*T[m2]`, matrices row-major.
std::string element_str(const Element& x);
/// Coset-basis dump, one `(coset …) coeff …` per line.
std::string element_dump(const Element& x);

Element parse_element(const std::string& text, PairTag tag, const CoefRing& ring,
                      const ParabolicDatum& datum, std::uint64_t orbit_cap = default_orbit_cap);

Element zero_element(PairTag tag, const CoefRing& ring, const ParabolicDatum& datum);

} // namespace hecke
