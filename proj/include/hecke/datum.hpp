#pragma once

#include <string>
#include <vector>

#include "hecke/errors.hpp"

namespace hecke {

enum class Flavor { iwahori, pro_p };

/// Pair of (group, compact subgroup) a coset or Hecke element lives over:
/// the parabolic pair (P, Γ) or the Levi pair (M, Γ_M).
enum class PairTag { PGamma, MGammaM };

/// Instantiation data: prime, block sizes of the parabolic, Iwahori flavor.
/// Fixes P (block upper-triangular), M (block diagonal), U (block unipotent),
/// Γ_U = U(Z_p), Γ_M = product of (pro-p) Iwahori subgroups, Γ = Γ_U Γ_M.
struct ParabolicDatum {
    unsigned p = 2;
    std::vector<int> blocks{1, 1};
    Flavor flavor = Flavor::iwahori;

    int n() const {
        int s = 0;
        for (int b : blocks) s += b;
        return s;
    }
    int block_count() const { return static_cast<int>(blocks.size()); }
    int block_of(int row) const;
    int block_start(int b) const;

    /// Position (i,j) allowed inside P (block upper-triangular pattern).
    bool in_pattern(int i, int j) const { return block_of(i) <= block_of(j); }
    /// Position (i,j) allowed inside M (block diagonal pattern).
    bool in_m_pattern(int i, int j) const { return block_of(i) == block_of(j); }
    /// Pattern of the pair: P for (P,Γ), M for (M,Γ_M).
    bool in_pair_pattern(int i, int j, PairTag tag) const {
        return tag == PairTag::PGamma ? in_pattern(i, j) : in_m_pattern(i, j);
    }

    /// Integrality constraint exponent of Γ at an off-diagonal pattern
    /// position: 1 strictly below the diagonal inside a block (Iwahori), else 0.
    int gamma_constraint(int i, int j) const { return (in_m_pattern(i, j) && i > j) ? 1 : 0; }

    void validate() const;
    bool operator==(const ParabolicDatum& o) const = default;

    std::string header() const;
    static ParabolicDatum parse_header(const std::string& text);
};

std::string flavor_name(Flavor f);
Flavor parse_flavor(const std::string& s);

} // namespace hecke
