#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hecke/errors.hpp"

namespace hecke {

/// Smith normal form over Z: returns the nonzero elementary divisors
/// d_1 | d_2 | … (positive, divisibility chain) of an integer matrix.
std::vector<mpz_class> smith_normal_form(std::vector<std::vector<mpz_class>> a);

/// Full decomposition U·A·V = D with U, V unimodular; D diagonal
/// (divisibility chain).  Matrices are row-major rectangular.
struct SmithDecomposition {
    std::vector<std::vector<mpz_class>> u, d, v;
};
SmithDecomposition smith_decompose(std::vector<std::vector<mpz_class>> a);

/// Dense matrix over Z/m, m >= 2 machine-word sized; values canonical in [0,m).
class ModMat {
  public:
    ModMat() : rows_(0), cols_(0), m_(2) {}
    ModMat(size_t rows, size_t cols, std::uint64_t m);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    std::uint64_t modulus() const { return m_; }

    std::uint64_t& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
    std::uint64_t at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

    static ModMat identity(size_t n, std::uint64_t m);
    ModMat operator*(const ModMat& o) const;
    ModMat operator+(const ModMat& o) const;
    ModMat operator-(const ModMat& o) const;
    ModMat scaled(std::uint64_t c) const;
    bool operator==(const ModMat& o) const;
    bool operator!=(const ModMat& o) const { return !(*this == o); }
    bool is_zero() const;

    ModMat pow(unsigned e) const;

    /// Determinant mod m via exact integer determinant of the canonical lift.
    std::uint64_t det() const;
    bool det_is_unit() const;
    /// Adjugate-based inverse; requires det_is_unit().
    ModMat inverse() const;

    std::string str() const;
    static ModMat parse(const std::string& text, std::uint64_t m, int expect_n = -1);

  private:
    size_t rows_, cols_;
    std::uint64_t m_;
    std::vector<std::uint64_t> a_;
};

/// Canonical generating matrix (Howell normal form) of the row span of
/// `gens` in (Z/m)^cols.  Two generating sets span the same submodule iff
/// their Howell forms are identical.
ModMat howell_form(const ModMat& gens);

/// True iff v lies in the row span of a Howell-form matrix.
bool in_howell_span(const ModMat& howell, const std::vector<std::uint64_t>& v);

/// Rows generate {x ∈ (Z/m)^n : A·x = 0} (x as column vectors, returned as
/// rows).  Solved through the Smith form of an integer lift, which is what
/// non-prime moduli require.
ModMat kernel_mod(const ModMat& a);

/// A particular solution x of A·x = b over Z/m, if one exists.
std::optional<std::vector<std::uint64_t>> solve_mod(const ModMat& a,
                                                    const std::vector<std::uint64_t>& b);

} // namespace hecke
