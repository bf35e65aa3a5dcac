#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <string>
#include <vector>

#include "hecke/errors.hpp"

namespace hecke {

inline constexpr long val_infinity = std::numeric_limits<long>::max();

/// Exact scalar with a fixed residue characteristic p, stored in p-split
/// canonical form:  value = (num/den) * p^exp  with  p∤num, p∤den,
/// gcd(num,den) = 1, den > 0.  Zero is (0,1,0).
///
/// The p-adic valuation is the stored exponent, so valuation and residue
/// queries are exact and cheap.  Sum/product/negation of scalars with the
/// same p stay in this form; division is available because coset-equality
/// tests invert matrices whose determinants are p-adic units but not
/// necessarily ±p^k.
class Scalar {
  public:
    Scalar() : p_(0), exp_(0), num_(0), den_(1) {}
    Scalar(long value, unsigned p) : Scalar(mpz_class(value), p) {}
    Scalar(mpz_class value, unsigned p);
    Scalar(mpz_class num, mpz_class den, long exp, unsigned p);

    static Scalar p_power(long k, unsigned p);

    unsigned prime() const { return p_; }
    bool is_zero() const { return num_ == 0; }
    long val() const { return is_zero() ? val_infinity : exp_; }
    const mpz_class& unit_num() const { return num_; }
    const mpz_class& unit_den() const { return den_; }

    bool is_integral() const { return !is_zero() && exp_ >= 0 && den_ == 1; }
    bool is_one() const { return num_ == 1 && den_ == 1 && exp_ == 0; }

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const { return *this + (-o); }
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar inv() const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// Residue mod p^e for scalars of valuation >= 0 (e >= 1).  Exact:
    /// num * den^{-1} * p^exp mod p^e.  Throws DomainError on negative
    /// valuation.
    mpz_class residue(long e) const;

    /// Unit part x / p^val(x) (requires x != 0).
    Scalar unit_part() const;

    /// Canonical representative of x + p^e·Z_p: zero when val(x) >= e,
    /// otherwise r·p^(val x) with r the unit-part residue mod p^(e - val x).
    Scalar truncate_mod(long e) const;

    /// As a plain fraction n/d in lowest terms (d > 0).
    void to_fraction(mpz_class& n, mpz_class& d) const;

    /// Canonical text: integer, or "n/d" with d the evaluated denominator
    /// (a p-power whenever the value lies in Z[1/p]).
    std::string str() const;

    /// Parses the external scalar format: `a` or `a/d`, where d must be a
    /// positive power of the session prime.
    static Scalar parse(const std::string& text, unsigned p);

    size_t hash() const;

  private:
    void canonicalize();

    unsigned p_;
    long exp_;
    mpz_class num_;
    mpz_class den_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// valuation(x): exponent v with x = p^v * (p-adic unit); val_infinity at 0.
inline long valuation(const Scalar& x) { return x.val(); }

/// Residue class mod p^N, canonical value in [0, p^N).
struct Residue {
    std::uint64_t value = 0;
    unsigned p = 0;
    unsigned n = 0; // modulus exponent

    std::uint64_t modulus() const;
    bool operator==(const Residue& o) const = default;
};

std::uint64_t pow_u64_checked(std::uint64_t base, unsigned e);

/// Generators of the full unit group (Z/p^N)^×.
std::vector<Residue> unit_group_generators(unsigned p, unsigned n);

/// Generators of the image of 1 + pZ_p in (Z/p^N)^× (pro-p flavor).
/// For p = 2 this subgroup is the whole unit group.
std::vector<Residue> principal_unit_generators(unsigned p, unsigned n);

} // namespace hecke
