#pragma once

#include <optional>
#include <utility>

#include "hecke/datum.hpp"
#include "hecke/matrix.hpp"

namespace hecke {

enum class Subgroup { Gamma, GammaU, GammaM, GLnZp };

/// Invertible block upper-triangular matrix attached to a datum.
class GroupElement {
  public:
    GroupElement(ParabolicDatum datum, Mat mat);

    const ParabolicDatum& datum() const { return datum_; }
    const Mat& mat() const { return mat_; }

    GroupElement operator*(const GroupElement& o) const;
    GroupElement inverse() const;
    bool operator==(const GroupElement& o) const { return datum_ == o.datum_ && mat_ == o.mat_; }
    bool operator!=(const GroupElement& o) const { return !(*this == o); }

    bool in_m() const; // block diagonal
    bool in_u() const; // block unipotent (diagonal blocks = identity)

    /// Diagonal block b as a standalone matrix.
    Mat block(int b) const;

  private:
    struct Unchecked {};
    GroupElement(ParabolicDatum datum, Mat mat, Unchecked) : datum_(std::move(datum)), mat_(std::move(mat)) {}

    ParabolicDatum datum_;
    Mat mat_;
};

GroupElement identity_element(const ParabolicDatum& d);

/// a^k for any integer k (inverse powers allowed).
GroupElement power(const GroupElement& a, long k);

/// Unique semidirect factorization g = u·m with u ∈ U, m ∈ M:
/// m is the block diagonal of g, u = g·m^{-1}.
std::pair<GroupElement, GroupElement> factor_um(const GroupElement& g);

bool member(const GroupElement& g, Subgroup which);

/// Entrywise membership of a pattern matrix in Γ (resp. Γ_M): integral,
/// unit diagonal (≡ 1 mod p for the pro-p flavor), within-block entries
/// below the diagonal divisible by p.  Equivalent to the factor-based
/// definition because Γ = Γ_U Γ_M and block Iwahori subgroups consist of
/// integral matrices with integral inverses.
bool mat_in_pair_subgroup(const ParabolicDatum& d, const Mat& m, PairTag tag);

/// m Γ_U m^{-1} ⊆ Γ_U, decided on the finite set of block matrix units:
/// for every block pair i<j, min_val(m_i) + min_val(m_j^{-1}) >= 0.
bool is_positive(const GroupElement& m);

/// Central in M (every block a scalar), positive, and block scalar
/// valuations strictly decreasing across blocks — equivalently the
/// conjugates a^{-n} Γ_U a^n exhaust U.
bool is_strictly_positive(const GroupElement& a);

/// Minimal n > 0 with a^n·m positive (exists for strictly positive a).
/// Also asserts a^n·m = m·a^n.
int positive_shift(const GroupElement& a, const GroupElement& m);

/// The template strictly positive element: block scalars p^{r-1},…,p,1.
GroupElement canonical_strictly_positive(const ParabolicDatum& d);

/// Unique canonical representative of the coset Γ·h (resp. Γ_M·h): the
/// p-balanced representative used as the coset hash key.  Diagonal blocks
/// are reduced to their affine Bruhat normal form (implemented for block
/// sizes 1 and 2), the U-part to entrywise fractional classes mod the
/// block-column lattice.  Empty optional for block sizes >= 3, where
/// callers fall back to the coarse valuation key.
std::optional<Mat> coset_canonical(const ParabolicDatum& d, const Mat& h, PairTag tag);

} // namespace hecke
