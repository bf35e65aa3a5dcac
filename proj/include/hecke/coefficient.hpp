#pragma once

#include <gmpxx.h>

#include <string>

#include "hecke/errors.hpp"

namespace hecke {

/// Coefficient ring R: the integers, or Z/m for m >= 2.
struct CoefRing {
    enum class Kind { Z, Mod };
    Kind kind = Kind::Z;
    mpz_class modulus = 0;

    static CoefRing integers() { return CoefRing{}; }
    static CoefRing mod(mpz_class m) {
        if (m < 2) throw DomainError("coefficient ring: modulus must be >= 2");
        return CoefRing{Kind::Mod, std::move(m)};
    }

    bool operator==(const CoefRing& o) const = default;

    mpz_class canon(mpz_class v) const {
        if (kind == Kind::Mod) {
            mpz_class r;
            mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), modulus.get_mpz_t());
            return r;
        }
        return v;
    }

    std::string name() const {
        return kind == Kind::Z ? "z" : "mod:" + modulus.get_str();
    }

    static CoefRing parse(const std::string& s) {
        if (s == "z" || s == "Z") return integers();
        if (s.rfind("mod:", 0) == 0) return mod(mpz_class(s.substr(4)));
        throw ParseError("coefficient ring: expected 'z' or 'mod:m', got '" + s + "'");
    }
};

} // namespace hecke
