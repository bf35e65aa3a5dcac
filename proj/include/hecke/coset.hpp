#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hecke/group.hpp"

namespace hecke {

/// Instrumentation counters (thread-local; purely observational).
struct Counters {
    std::uint64_t cosets_enumerated = 0;
    std::uint64_t eq_tests = 0;
    void reset() { *this = Counters{}; }
};
Counters& counters();

/// Invariants of a right coset Γg under left multiplication by Γ: the
/// determinant valuation, per column the minimum entry valuation with the
/// bottom-most row achieving it (Γ reduces mod p into the upper-triangular
/// Borel, which preserves both), and a hash of the canonical p-balanced
/// representative when one is available.  Keys only route candidates into
/// buckets; the membership test stays the authority on equality.
struct CosetKey {
    long det_val = 0;
    std::vector<std::pair<long, int>> cols;
    std::uint64_t canon = 0;

    bool operator==(const CosetKey& o) const = default;
    std::uint64_t hash() const;
};

/// Right coset Γg (or Γ_M g), equality by membership of rep·rep'^{-1}.
/// The representative inverse is cached on first use: equality tests only
/// ever invert their right-hand side, so transient cosets never pay for it.
class RightCoset {
  public:
    RightCoset(GroupElement rep, PairTag tag);

    const GroupElement& rep() const { return rep_; }
    PairTag tag() const { return tag_; }
    const Mat& rep_inv() const;
    const CosetKey& key() const { return key_; }

  private:
    GroupElement rep_;
    PairTag tag_;
    mutable Mat rep_inv_; // empty until first use
    CosetKey key_;
};

bool coset_eq(const RightCoset& a, const RightCoset& b);


/// N = 2d+1 with d = max(0, −min entry valuation over g and g^{-1});
/// then g·(I + p^N·pattern)·g^{-1} ⊆ I + p·pattern, so the congruence
/// subgroup Γ(p^N) stabilizes every right coset of ΓgΓ from the right.
long truncation_level(const GroupElement& g);

/// Finite generating set of Γ (resp. Γ_M) modulo Γ(p^N): elementary
/// matrices e_(kl)(1) for k<l in the pattern, e_(kl)(p) for k>l inside a
/// diagonal block, and diagonal unit matrices for each unit-group generator
/// (principal units for the pro-p flavor).  Symmetric lifts keep entries small.
std::vector<GroupElement> gamma_generators(const ParabolicDatum& d, long level,
                                           PairTag tag = PairTag::PGamma);

struct DoubleCosetDecomposition {
    GroupElement base;
    PairTag tag;
    std::vector<RightCoset> cosets;
};

inline constexpr std::uint64_t default_orbit_cap = 100000;

/// Breadth-first orbit of Γg under right multiplication by the level-N
/// generators, deduplicated by coset equality.  Deterministic order.
DoubleCosetDecomposition decompose_double_coset(const GroupElement& g, PairTag tag,
                                                std::uint64_t orbit_cap = default_orbit_cap);

/// True iff Γh lies in the decomposed double coset.
bool decomposition_contains(const DoubleCosetDecomposition& dec, const GroupElement& h);

/// Independent oracle for |ΓgΓ / Γ| = [Γ : Γ ∩ g^{-1}Γg].
///
/// Diagonal g: exact closed form.  Writing a_k = val(g_kk), the constraint
/// group Γ ∩ g^{-1}Γg fixes per-position valuation bounds, and counting
/// congruence quotients gives index = p^(Σ over off-diagonal pattern
/// positions (k,l) of max(0, a_l − a_k)).
///
/// Otherwise: exhaustive enumeration of Γ mod p^N and its stabilizer
/// subgroup {γ : g·γ·g^{-1} ∈ Γ}; requires the quotient order to stay
/// below enum_cap (ResourceError otherwise).
mpz_class oracle_index(const GroupElement& g, PairTag tag,
                       std::uint64_t enum_cap = 4000000);

/// Forces the enumeration route regardless of shape (used to cross-check
/// the closed form on small instances).
mpz_class oracle_index_enumerated(const GroupElement& g, PairTag tag,
                                  std::uint64_t enum_cap = 4000000);

} // namespace hecke
