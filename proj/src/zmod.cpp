#include "hecke/zmod.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace hecke {

namespace {

using ZMat = std::vector<std::vector<mpz_class>>;

void swap_rows(ZMat& a, size_t i, size_t j) { std::swap(a[i], a[j]); }

void swap_cols(ZMat& a, size_t i, size_t j) {
    for (auto& row : a) std::swap(row[i], row[j]);
}

void add_row(ZMat& a, size_t dst, size_t src, const mpz_class& f) {
    for (size_t j = 0; j < a[dst].size(); ++j) a[dst][j] += f * a[src][j];
}

void add_col(ZMat& a, size_t dst, size_t src, const mpz_class& f) {
    for (auto& row : a) row[dst] += f * row[src];
}

ZMat zident(size_t n) {
    ZMat u(n, std::vector<mpz_class>(n, 0));
    for (size_t i = 0; i < n; ++i) u[i][i] = 1;
    return u;
}

} // namespace

SmithDecomposition smith_decompose(ZMat a) {
    size_t r = a.size(), c = r ? a[0].size() : 0;
    SmithDecomposition out{zident(r), std::move(a), zident(c)};
    ZMat& d = out.d;
    size_t nmin = std::min(r, c);
    for (size_t t = 0; t < nmin; ++t) {
        for (;;) {
            // smallest nonzero |entry| in the trailing submatrix
            size_t pi = t, pj = t;
            mpz_class best = 0;
            for (size_t i = t; i < r; ++i)
                for (size_t j = t; j < c; ++j) {
                    if (d[i][j] == 0) continue;
                    mpz_class v = abs(d[i][j]);
                    if (best == 0 || v < best) {
                        best = v;
                        pi = i;
                        pj = j;
                    }
                }
            if (best == 0) break; // submatrix is zero
            if (pi != t) {
                swap_rows(d, t, pi);
                swap_rows(out.u, t, pi);
            }
            if (pj != t) {
                swap_cols(d, t, pj);
                swap_cols(out.v, t, pj);
            }
            bool clean = true;
            for (size_t i = t + 1; i < r; ++i) {
                if (d[i][t] == 0) continue;
                mpz_class q = d[i][t] / d[t][t];
                add_row(d, i, t, -q);
                add_row(out.u, i, t, -q);
                if (d[i][t] != 0) clean = false;
            }
            for (size_t j = t + 1; j < c; ++j) {
                if (d[t][j] == 0) continue;
                mpz_class q = d[t][j] / d[t][t];
                add_col(d, j, t, -q);
                add_col(out.v, j, t, -q);
                if (d[t][j] != 0) clean = false;
            }
            if (!clean) continue;
            // divisibility of the trailing submatrix by the pivot
            bool divides = true;
            for (size_t i = t + 1; i < r && divides; ++i)
                for (size_t j = t + 1; j < c; ++j)
                    if (d[i][j] % d[t][t] != 0) {
                        add_row(d, t, i, 1);
                        add_row(out.u, t, i, 1);
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        if (d[t][t] < 0) {
            for (size_t j = 0; j < c; ++j) d[t][j] = -d[t][j];
            for (size_t j = 0; j < r; ++j) out.u[t][j] = -out.u[t][j];
        }
    }
    return out;
}

std::vector<mpz_class> smith_normal_form(ZMat a) {
    size_t r = a.size(), c = r ? a[0].size() : 0;
    SmithDecomposition s = smith_decompose(std::move(a));
    std::vector<mpz_class> out;
    for (size_t i = 0; i < std::min(r, c); ++i)
        if (s.d[i][i] != 0) out.push_back(s.d[i][i]);
    return out;
}

ModMat::ModMat(size_t rows, size_t cols, std::uint64_t m) : rows_(rows), cols_(cols), m_(m), a_(rows * cols, 0) {
    if (m < 2) throw DomainError("mod matrix: modulus must be >= 2");
}

ModMat ModMat::identity(size_t n, std::uint64_t m) {
    ModMat out(n, n, m);
    for (size_t i = 0; i < n; ++i) out.at(i, i) = 1;
    return out;
}

ModMat ModMat::operator*(const ModMat& o) const {
    if (cols_ != o.rows_ || m_ != o.m_) throw DomainError("mod matrix: product shape/modulus mismatch");
    ModMat r(rows_, o.cols_, m_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            if (at(i, k) == 0) continue;
            for (size_t j = 0; j < o.cols_; ++j)
                r.at(i, j) = (r.at(i, j) + static_cast<unsigned __int128>(at(i, k)) * o.at(k, j)) % m_;
        }
    return r;
}

ModMat ModMat::operator+(const ModMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || m_ != o.m_) throw DomainError("mod matrix: sum shape mismatch");
    ModMat r(rows_, cols_, m_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = (a_[i] + o.a_[i]) % m_;
    return r;
}

ModMat ModMat::operator-(const ModMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || m_ != o.m_) throw DomainError("mod matrix: difference shape mismatch");
    ModMat r(rows_, cols_, m_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = (a_[i] + m_ - o.a_[i]) % m_;
    return r;
}

ModMat ModMat::scaled(std::uint64_t c) const {
    ModMat r(rows_, cols_, m_);
    c %= m_;
    for (size_t i = 0; i < a_.size(); ++i)
        r.a_[i] = static_cast<std::uint64_t>((static_cast<unsigned __int128>(a_[i]) * c) % m_);
    return r;
}

bool ModMat::operator==(const ModMat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && m_ == o.m_ && a_ == o.a_;
}

bool ModMat::is_zero() const {
    for (std::uint64_t v : a_)
        if (v) return false;
    return true;
}

ModMat ModMat::pow(unsigned e) const {
    if (rows_ != cols_) throw DomainError("mod matrix: power of non-square matrix");
    ModMat r = identity(rows_, m_);
    for (unsigned i = 0; i < e; ++i) r = r * *this;
    return r;
}

namespace {

mpz_class lift_det(const ModMat& m) {
    size_t n = m.rows();
    ZMat a(n, std::vector<mpz_class>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) a[i][j] = m.at(i, j);
    // fraction-free Gaussian elimination (Bareiss)
    mpz_class prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            size_t s = k + 1;
            while (s < n && a[s][k] == 0) ++s;
            if (s == n) return 0;
            std::swap(a[k], a[s]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j) {
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
            }
        prev = a[k][k];
    }
    return n ? mpz_class(sign * a[n - 1][n - 1]) : mpz_class(1);
}

} // namespace

std::uint64_t ModMat::det() const {
    if (rows_ != cols_) throw DomainError("mod matrix: determinant of non-square matrix");
    mpz_class d = lift_det(*this);
    mpz_class mm = static_cast<unsigned long>(m_);
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), d.get_mpz_t(), mm.get_mpz_t());
    return r.get_ui();
}

bool ModMat::det_is_unit() const {
    std::uint64_t d = det();
    return std::gcd(d, m_) == 1;
}

ModMat ModMat::inverse() const {
    if (rows_ != cols_) throw DomainError("mod matrix: inverse of non-square matrix");
    std::uint64_t d = det();
    if (std::gcd(d, m_) != 1) throw DomainError("mod matrix: determinant is not a unit");
    size_t n = rows_;
    mpz_class mm = static_cast<unsigned long>(m_);
    mpz_class dz = static_cast<unsigned long>(d), dinv;
    mpz_invert(dinv.get_mpz_t(), dz.get_mpz_t(), mm.get_mpz_t());
    ModMat adj(n, n, m_);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            // cofactor C_ji
            ModMat minor(n - 1 > 0 ? n - 1 : 1, n - 1 > 0 ? n - 1 : 1, m_);
            if (n == 1) {
                adj.at(0, 0) = 1 % m_;
                continue;
            }
            size_t mi = 0;
            for (size_t r = 0; r < n; ++r) {
                if (r == j) continue;
                size_t mj = 0;
                for (size_t c = 0; c < n; ++c) {
                    if (c == i) continue;
                    minor.at(mi, mj++) = at(r, c);
                }
                ++mi;
            }
            mpz_class cof = lift_det(minor);
            if ((i + j) % 2) cof = -cof;
            mpz_class r;
            mpz_fdiv_r(r.get_mpz_t(), cof.get_mpz_t(), mm.get_mpz_t());
            adj.at(i, j) = r.get_ui();
        }
    mpz_class rr;
    ModMat out(n, n, m_);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            mpz_class v = dinv * static_cast<unsigned long>(adj.at(i, j));
            mpz_fdiv_r(rr.get_mpz_t(), v.get_mpz_t(), mm.get_mpz_t());
            out.at(i, j) = rr.get_ui();
        }
    return out;
}

std::string ModMat::str() const {
    std::ostringstream os;
    os << '[';
    for (size_t i = 0; i < rows_; ++i) {
        os << (i ? ",[" : "[");
        for (size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << at(i, j);
        os << ']';
    }
    os << ']';
    return os.str();
}

ModMat ModMat::parse(const std::string& text, std::uint64_t m, int expect_n) {
    size_t i = 0, n = text.size();
    auto skip = [&] { while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    auto expect = [&](char c) {
        skip();
        if (i >= n || text[i] != c)
            throw ParseError(std::string("mod matrix: expected '") + c + "' at column " + std::to_string(i + 1) + " in '" + text + "'");
        ++i;
    };
    std::vector<std::vector<std::uint64_t>> rows;
    expect('[');
    for (;;) {
        expect('[');
        std::vector<std::uint64_t> row;
        for (;;) {
            skip();
            bool neg = false;
            if (i < n && (text[i] == '-' || text[i] == '+')) neg = text[i++] == '-';
            size_t start = i;
            while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (i == start) throw ParseError("mod matrix: expected integer at column " + std::to_string(i + 1));
            std::uint64_t v = std::stoull(text.substr(start, i - start)) % m;
            if (neg && v) v = m - v;
            row.push_back(v);
            skip();
            if (i < n && text[i] == ',') {
                ++i;
                continue;
            }
            break;
        }
        expect(']');
        rows.push_back(std::move(row));
        skip();
        if (i < n && text[i] == ',') {
            ++i;
            continue;
        }
        break;
    }
    expect(']');
    skip();
    if (i != n) throw ParseError("mod matrix: trailing characters");
    size_t r = rows.size();
    if (expect_n > 0 && r != static_cast<size_t>(expect_n))
        throw ParseError("mod matrix: expected " + std::to_string(expect_n) + " rows");
    for (const auto& row : rows)
        if (row.size() != rows[0].size()) throw ParseError("mod matrix: ragged rows");
    ModMat out(r, rows[0].size(), m);
    for (size_t a = 0; a < r; ++a)
        for (size_t b = 0; b < rows[0].size(); ++b) out.at(a, b) = rows[a][b];
    return out;
}

namespace {

std::uint64_t umod(const mpz_class& v, std::uint64_t m) {
    mpz_class mm = static_cast<unsigned long>(m), r;
    mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), mm.get_mpz_t());
    return r.get_ui();
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m) {
    mpz_class az = static_cast<unsigned long>(a), mz = static_cast<unsigned long>(m), r;
    if (mpz_invert(r.get_mpz_t(), az.get_mpz_t(), mz.get_mpz_t()) == 0)
        throw InternalError("inv_mod: not invertible");
    return r.get_ui();
}

// Any a ∈ Z/m is unit·gcd(a,m); returns such a unit u with u·a ≡ gcd(a,m).
std::uint64_t associate_unit(std::uint64_t a, std::uint64_t m) {
    std::uint64_t d = std::gcd(a, m);
    std::uint64_t u0 = inv_mod((a / d) % (m / d), m / d);
    for (std::uint64_t t = 0;; ++t) {
        std::uint64_t u = (u0 + t * (m / d)) % m;
        if (u == 0) u = m / d ? m / d : 1;
        if (std::gcd(u, m) == 1) return u % m;
        if (t > m) throw InternalError("associate_unit: search failed");
    }
}

using Row = std::vector<std::uint64_t>;

Row combine(const Row& r, const Row& s, std::uint64_t x, std::uint64_t y, std::uint64_t m) {
    Row out(r.size());
    for (size_t j = 0; j < r.size(); ++j)
        out[j] = static_cast<std::uint64_t>((static_cast<unsigned __int128>(r[j]) * x + static_cast<unsigned __int128>(s[j]) * y) % m);
    return out;
}

bool row_zero(const Row& r) {
    for (std::uint64_t v : r)
        if (v) return false;
    return true;
}

} // namespace

ModMat howell_form(const ModMat& gens) {
    const std::uint64_t m = gens.modulus();
    const size_t cols = gens.cols();
    std::vector<Row> work;
    for (size_t i = 0; i < gens.rows(); ++i) {
        Row r(cols);
        for (size_t j = 0; j < cols; ++j) r[j] = gens.at(i, j);
        if (!row_zero(r)) work.push_back(std::move(r));
    }
    std::vector<std::pair<size_t, Row>> pivots; // (pivot column, row)
    for (size_t j = 0; j < cols; ++j) {
        // merge all rows with nonzero entry at column j into one pivot row
        std::optional<Row> pivot;
        std::vector<Row> rest;
        for (Row& r : work) {
            if (r[j] == 0) {
                rest.push_back(std::move(r));
                continue;
            }
            if (!pivot) {
                pivot = std::move(r);
                continue;
            }
            std::uint64_t a = (*pivot)[j], b = r[j];
            mpz_class g, x, y;
            mpz_class az = static_cast<unsigned long>(a), bz = static_cast<unsigned long>(b);
            mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), az.get_mpz_t(), bz.get_mpz_t());
            std::uint64_t gu = g.get_ui();
            // [x y; -b/g a/g] is unimodular, leaves gcd at the pivot slot
            Row np = combine(*pivot, r, umod(x, m), umod(y, m), m);
            Row ns = combine(*pivot, r, umod(mpz_class(-(bz / g)), m), umod(az / g, m), m);
            if (np[j] % gu != 0) throw InternalError("howell: gcd step failed");
            pivot = std::move(np);
            if (!row_zero(ns)) rest.push_back(std::move(ns));
        }
        work = std::move(rest);
        if (!pivot) continue;
        // normalize the pivot to the canonical divisor of m
        std::uint64_t a = (*pivot)[j];
        std::uint64_t d = std::gcd(a, m);
        std::uint64_t u = associate_unit(a, m);
        for (std::uint64_t& v : *pivot)
            v = static_cast<std::uint64_t>((static_cast<unsigned __int128>(v) * u) % m);
        if ((*pivot)[j] != d) throw InternalError("howell: pivot normalization failed");
        // Howell closure: the annihilator shadow (m/d)·row re-enters elimination
        if (d != 1) {
            Row shadow(cols);
            for (size_t k = 0; k < cols; ++k)
                shadow[k] = static_cast<std::uint64_t>((static_cast<unsigned __int128>((*pivot)[k]) * (m / d)) % m);
            if (!row_zero(shadow)) work.push_back(std::move(shadow));
        }
        pivots.emplace_back(j, std::move(*pivot));
    }
    if (!work.empty()) {
        for (const Row& r : work)
            if (!row_zero(r)) throw InternalError("howell: residual rows after elimination");
    }
    // reduce entries above each pivot into [0, pivot)
    for (size_t pi = 0; pi < pivots.size(); ++pi) {
        auto& [jc, prow] = pivots[pi];
        std::uint64_t d = prow[jc];
        for (size_t qi = 0; qi < pi; ++qi) {
            Row& above = pivots[qi].second;
            std::uint64_t q = above[jc] / d;
            if (!q) continue;
            for (size_t k = 0; k < cols; ++k) {
                std::uint64_t sub = static_cast<std::uint64_t>((static_cast<unsigned __int128>(prow[k]) * q) % m);
                above[k] = (above[k] + m - sub) % m;
            }
        }
    }
    ModMat out(pivots.size(), cols, m);
    for (size_t i = 0; i < pivots.size(); ++i)
        for (size_t j = 0; j < cols; ++j) out.at(i, j) = pivots[i].second[j];
    return out;
}

bool in_howell_span(const ModMat& howell, const std::vector<std::uint64_t>& v) {
    const std::uint64_t m = howell.modulus();
    if (v.size() != howell.cols()) throw DomainError("in_howell_span: length mismatch");
    Row w = v;
    for (std::uint64_t& x : w) x %= m;
    for (size_t i = 0; i < howell.rows(); ++i) {
        size_t j = 0;
        while (j < howell.cols() && howell.at(i, j) == 0) ++j;
        if (j == howell.cols()) continue;
        if (w[j] == 0) continue;
        std::uint64_t d = howell.at(i, j);
        if (w[j] % d != 0) return false;
        std::uint64_t q = w[j] / d;
        for (size_t k = 0; k < howell.cols(); ++k) {
            std::uint64_t sub = static_cast<std::uint64_t>((static_cast<unsigned __int128>(howell.at(i, k)) * q) % m);
            w[k] = (w[k] + m - sub) % m;
        }
    }
    return row_zero(w);
}

ModMat kernel_mod(const ModMat& a) {
    const std::uint64_t m = a.modulus();
    const size_t r = a.rows(), c = a.cols();
    ZMat lift(r, std::vector<mpz_class>(c));
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < c; ++j) lift[i][j] = static_cast<unsigned long>(a.at(i, j));
    SmithDecomposition s = smith_decompose(std::move(lift));
    mpz_class mm = static_cast<unsigned long>(m);
    ModMat gens(c, c, m);
    for (size_t i = 0; i < c; ++i) {
        mpz_class di = i < std::min(r, c) ? s.d[i][i] : 0;
        mpz_class mult;
        if (di == 0)
            mult = 1;
        else {
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), di.get_mpz_t(), mm.get_mpz_t());
            mult = mm / g;
        }
        // x = V · (mult·e_i), written as row i
        for (size_t k = 0; k < c; ++k) gens.at(i, k) = umod(s.v[k][i] * mult, m);
    }
    return howell_form(gens);
}

std::optional<std::vector<std::uint64_t>> solve_mod(const ModMat& a, const std::vector<std::uint64_t>& b) {
    const std::uint64_t m = a.modulus();
    const size_t r = a.rows(), c = a.cols();
    if (b.size() != r) throw DomainError("solve_mod: rhs length mismatch");
    ZMat lift(r, std::vector<mpz_class>(c));
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < c; ++j) lift[i][j] = static_cast<unsigned long>(a.at(i, j));
    SmithDecomposition s = smith_decompose(std::move(lift));
    mpz_class mm = static_cast<unsigned long>(m);
    // rhs' = U·b
    std::vector<mpz_class> rhs(r, 0);
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < r; ++j) rhs[i] += s.u[i][j] * static_cast<unsigned long>(b[j]);
    std::vector<mpz_class> y(c, 0);
    for (size_t i = 0; i < r; ++i) {
        mpz_class di = i < std::min(r, c) ? s.d[i][i] : 0;
        mpz_class ri;
        mpz_fdiv_r(ri.get_mpz_t(), rhs[i].get_mpz_t(), mm.get_mpz_t());
        if (di == 0) {
            if (ri != 0) return std::nullopt;
            continue;
        }
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), di.get_mpz_t(), mm.get_mpz_t());
        if (ri % g != 0) return std::nullopt;
        mpz_class mg = mm / g, inv;
        mpz_class dig = (di / g) % mg;
        if (mg == 1)
            y[i] = 0;
        else {
            if (mpz_invert(inv.get_mpz_t(), dig.get_mpz_t(), mg.get_mpz_t()) == 0)
                throw InternalError("solve_mod: inversion failed");
            y[i] = ((ri / g) * inv) % mg;
        }
    }
    std::vector<std::uint64_t> x(c, 0);
    for (size_t k = 0; k < c; ++k) {
        mpz_class acc = 0;
        for (size_t i = 0; i < c; ++i) acc += s.v[k][i] * y[i];
        x[k] = umod(acc, m);
    }
    return x;
}

} // namespace hecke
