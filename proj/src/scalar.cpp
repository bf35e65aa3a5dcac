#include "hecke/scalar.hpp"

#include <cctype>
#include <ostream>

namespace hecke {

namespace {

// Removes all factors of p from n, returns the number removed.
long strip_p(mpz_class& n, unsigned p) {
    if (n == 0) return 0;
    long k = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
        mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
        ++k;
    }
    return k;
}

mpz_class mpz_pow_ui(const mpz_class& base, unsigned long e) {
    mpz_class out;
    ::mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
    return out;
}

} // namespace

Scalar::Scalar(mpz_class value, unsigned p) : p_(p), exp_(0), num_(std::move(value)), den_(1) {
    canonicalize();
}

Scalar::Scalar(mpz_class num, mpz_class den, long exp, unsigned p)
    : p_(p), exp_(exp), num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) throw DomainError("scalar: zero denominator");
    canonicalize();
}

void Scalar::canonicalize() {
    if (num_ == 0) {
        exp_ = 0;
        den_ = 1;
        return;
    }
    if (den_ < 0) {
        den_ = -den_;
        num_ = -num_;
    }
    if (den_ != 1) {
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
        if (g != 1) {
            num_ /= g;
            den_ /= g;
        }
        if (p_ >= 2) exp_ -= strip_p(den_, p_);
    }
    if (p_ >= 2) exp_ += strip_p(num_, p_);
}

Scalar Scalar::p_power(long k, unsigned p) { return Scalar(1, 1, k, p); }

Scalar Scalar::operator-() const {
    Scalar r = *this;
    r.num_ = -r.num_;
    return r;
}

Scalar Scalar::operator+(const Scalar& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (p_ != o.p_) throw DomainError("scalar: mixed primes");
    long e = std::min(exp_, o.exp_);
    mpz_class a = num_ * o.den_ * mpz_pow_ui(p_, static_cast<unsigned long>(exp_ - e));
    mpz_class b = o.num_ * den_ * mpz_pow_ui(p_, static_cast<unsigned long>(o.exp_ - e));
    return Scalar(a + b, den_ * o.den_, e, p_);
}

Scalar Scalar::operator*(const Scalar& o) const {
    if (is_zero() || o.is_zero()) return Scalar(0, p_ ? p_ : o.p_);
    if (p_ != o.p_) throw DomainError("scalar: mixed primes");
    // units stay units: only the cross gcds need reduction, no p-stripping
    return Scalar(num_ * o.num_, den_ * o.den_, exp_ + o.exp_, p_);
}

Scalar Scalar::inv() const {
    if (is_zero()) throw DomainError("scalar: division by zero");
    return Scalar(den_ * (num_ < 0 ? -1 : 1), abs(num_), -exp_, p_);
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inv(); }

bool Scalar::operator==(const Scalar& o) const {
    if (is_zero() || o.is_zero()) return is_zero() && o.is_zero();
    return exp_ == o.exp_ && num_ == o.num_ && den_ == o.den_;
}

mpz_class Scalar::residue(long e) const {
    if (e < 1) throw DomainError("scalar: residue modulus exponent must be >= 1");
    if (is_zero()) return 0;
    if (exp_ < 0) throw DomainError("scalar: residue of negative-valuation value");
    mpz_class mod = mpz_pow_ui(p_, static_cast<unsigned long>(e));
    mpz_class dinv;
    if (mpz_invert(dinv.get_mpz_t(), den_.get_mpz_t(), mod.get_mpz_t()) == 0)
        throw InternalError("scalar: denominator not invertible mod p^e");
    mpz_class r = num_ * dinv;
    if (exp_ > 0) r *= mpz_pow_ui(p_, static_cast<unsigned long>(std::min(exp_, e)));
    mpz_class out;
    mpz_fdiv_r(out.get_mpz_t(), r.get_mpz_t(), mod.get_mpz_t());
    return out;
}

Scalar Scalar::unit_part() const {
    if (is_zero()) throw DomainError("scalar: unit part of zero");
    return Scalar(num_, den_, 0, p_);
}

Scalar Scalar::truncate_mod(long e) const {
    if (is_zero() || exp_ >= e) return Scalar(0, p_);
    mpz_class mod = mpz_pow_ui(p_, static_cast<unsigned long>(e - exp_));
    mpz_class dinv;
    if (mpz_invert(dinv.get_mpz_t(), den_.get_mpz_t(), mod.get_mpz_t()) == 0)
        throw InternalError("scalar: denominator not invertible in truncate_mod");
    mpz_class r = num_ * dinv;
    mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), mod.get_mpz_t());
    return Scalar(r, mpz_class(1), exp_, p_);
}

void Scalar::to_fraction(mpz_class& n, mpz_class& d) const {
    n = num_;
    d = den_;
    if (exp_ >= 0)
        n *= mpz_pow_ui(p_ ? p_ : 2, static_cast<unsigned long>(exp_));
    else
        d *= mpz_pow_ui(p_, static_cast<unsigned long>(-exp_));
}

std::string Scalar::str() const {
    if (is_zero()) return "0";
    mpz_class n, d;
    to_fraction(n, d);
    if (d == 1) return n.get_str();
    return n.get_str() + "/" + d.get_str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

Scalar Scalar::parse(const std::string& text, unsigned p) {
    size_t i = 0, n = text.size();
    auto skip_ws = [&] { while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    auto read_int = [&](const char* what) {
        skip_ws();
        size_t start = i;
        if (i < n && (text[i] == '-' || text[i] == '+')) ++i;
        size_t digits = i;
        while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == digits) throw ParseError(std::string("scalar: expected ") + what + " at column " + std::to_string(start + 1) + " in '" + text + "'");
        return mpz_class(text.substr(start, i - start));
    };
    mpz_class num = read_int("integer");
    skip_ws();
    mpz_class den = 1;
    if (i < n && text[i] == '/') {
        ++i;
        den = read_int("denominator");
        if (den <= 0) throw ParseError("scalar: denominator must be positive in '" + text + "'");
        // the denominator must be a power of the session prime
        mpz_class d = den;
        while (d > 1) {
            if (!mpz_divisible_ui_p(d.get_mpz_t(), p))
                throw ParseError("scalar: denominator " + den.get_str() + " is not a power of p=" + std::to_string(p));
            mpz_divexact_ui(d.get_mpz_t(), d.get_mpz_t(), p);
        }
    }
    skip_ws();
    if (i != n) throw ParseError("scalar: trailing characters at column " + std::to_string(i + 1) + " in '" + text + "'");
    return Scalar(num, den, 0, p);
}

size_t Scalar::hash() const {
    size_t h = std::hash<long>()(is_zero() ? val_infinity : exp_);
    auto mix = [&h](unsigned long v) { h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2); };
    mix(mpz_fdiv_ui(num_.get_mpz_t(), 0x7fffffff));
    mix(mpz_fdiv_ui(den_.get_mpz_t(), 0x7fffffff));
    return h;
}

std::uint64_t pow_u64_checked(std::uint64_t base, unsigned e) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < e; ++i) {
        if (r > (std::uint64_t(1) << 62) / base)
            throw ResourceError("modulus p^N exceeds machine-word guard");
        r *= base;
    }
    return r;
}

std::uint64_t Residue::modulus() const { return pow_u64_checked(p, n); }

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

// Multiplicative order of a modulo m must equal `order`; checks by verifying
// a^order = 1 and a^(order/q) != 1 for each prime q | order.
bool has_order(std::uint64_t a, std::uint64_t order, std::uint64_t m) {
    if (powmod(a, order, m) != 1) return false;
    std::uint64_t rest = order;
    for (std::uint64_t q = 2; q * q <= rest; ++q) {
        if (rest % q) continue;
        if (powmod(a, order / q, m) == 1) return false;
        while (rest % q == 0) rest /= q;
    }
    if (rest > 1 && powmod(a, order / rest, m) == 1) return false;
    return true;
}

} // namespace

std::vector<Residue> unit_group_generators(unsigned p, unsigned n) {
    if (n < 1) throw DomainError("unit_group_generators: N must be >= 1");
    std::uint64_t m = pow_u64_checked(p, n);
    if (p == 2) {
        if (n == 1) return {};
        if (n == 2) return {Residue{3, p, n}};
        return {Residue{m - 1, p, n}, Residue{5, p, n}}; // <-1> x <5>
    }
    // odd p: (Z/p^N)^x is cyclic; brute-force the smallest primitive root
    std::uint64_t phi = m / p * (p - 1);
    for (std::uint64_t a = 2; a < m; ++a) {
        if (a % p == 0) continue;
        if (has_order(a, phi, m)) return {Residue{a, p, n}};
    }
    throw InternalError("unit_group_generators: no primitive root found");
}

std::vector<Residue> principal_unit_generators(unsigned p, unsigned n) {
    if (n < 1) throw DomainError("principal_unit_generators: N must be >= 1");
    if (p == 2) return unit_group_generators(p, n); // 1 + 2Z_2 is all of Z_2^x
    if (n == 1) return {};
    std::uint64_t m = pow_u64_checked(p, n);
    std::uint64_t g = 1 + p;
    if (!has_order(g, m / p, m))
        throw InternalError("principal_unit_generators: 1+p does not generate");
    return {Residue{g, p, n}};
}

} // namespace hecke
