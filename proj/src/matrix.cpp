#include "hecke/matrix.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

namespace hecke {

Mat Mat::identity(int n, unsigned p) {
    Mat m(n, p);
    for (int i = 0; i < n; ++i) m.at(i, i) = Scalar(1, p);
    return m;
}

Mat Mat::operator*(const Mat& o) const {
    if (n_ != o.n_) throw DomainError("matrix: size mismatch");
    Mat r(n_, p_);
    for (int i = 0; i < n_; ++i)
        for (int k = 0; k < n_; ++k) {
            const Scalar& x = at(i, k);
            if (x.is_zero()) continue;
            for (int j = 0; j < n_; ++j) {
                const Scalar& y = o.at(k, j);
                if (!y.is_zero()) r.at(i, j) += x * y;
            }
        }
    return r;
}

Mat Mat::operator+(const Mat& o) const {
    Mat r(n_, p_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) r.at(i, j) = at(i, j) + o.at(i, j);
    return r;
}

Mat Mat::operator-(const Mat& o) const {
    Mat r(n_, p_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) r.at(i, j) = at(i, j) - o.at(i, j);
    return r;
}

bool Mat::operator==(const Mat& o) const {
    if (n_ != o.n_) return false;
    for (size_t i = 0; i < a_.size(); ++i)
        if (a_[i] != o.a_[i]) return false;
    return true;
}

Scalar Mat::det() const {
    Mat w = *this;
    Scalar d(1, p_);
    for (int c = 0; c < n_; ++c) {
        int pivot = -1;
        for (int r = c; r < n_; ++r)
            if (!w.at(r, c).is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) return Scalar(0, p_);
        if (pivot != c) {
            for (int j = 0; j < n_; ++j) std::swap(w.at(pivot, j), w.at(c, j));
            d = -d;
        }
        d *= w.at(c, c);
        Scalar pinv = w.at(c, c).inv();
        for (int r = c + 1; r < n_; ++r) {
            if (w.at(r, c).is_zero()) continue;
            Scalar f = w.at(r, c) * pinv;
            for (int j = c; j < n_; ++j) w.at(r, j) -= f * w.at(c, j);
        }
    }
    return d;
}

Mat Mat::inverse() const {
    Mat w = *this;
    Mat inv = identity(n_, p_);
    for (int c = 0; c < n_; ++c) {
        int pivot = -1;
        for (int r = c; r < n_; ++r)
            if (!w.at(r, c).is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) throw DomainError("matrix: singular, no inverse");
        if (pivot != c)
            for (int j = 0; j < n_; ++j) {
                std::swap(w.at(pivot, j), w.at(c, j));
                std::swap(inv.at(pivot, j), inv.at(c, j));
            }
        Scalar pinv = w.at(c, c).inv();
        for (int j = 0; j < n_; ++j) {
            w.at(c, j) *= pinv;
            inv.at(c, j) *= pinv;
        }
        for (int r = 0; r < n_; ++r) {
            if (r == c || w.at(r, c).is_zero()) continue;
            Scalar f = w.at(r, c);
            for (int j = 0; j < n_; ++j) {
                w.at(r, j) -= f * w.at(c, j);
                inv.at(r, j) -= f * inv.at(c, j);
            }
        }
    }
    return inv;
}

bool Mat::is_identity() const {
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            if (i == j && !at(i, j).is_one()) return false;
            if (i != j && !at(i, j).is_zero()) return false;
        }
    return true;
}

long Mat::min_val() const {
    long m = val_infinity;
    for (const Scalar& s : a_)
        if (!s.is_zero()) m = std::min(m, s.val());
    return m;
}

std::string Mat::str() const {
    std::ostringstream os;
    os << '[';
    for (int i = 0; i < n_; ++i) {
        os << (i ? ",[" : "[");
        for (int j = 0; j < n_; ++j) os << (j ? "," : "") << at(i, j).str();
        os << ']';
    }
    os << ']';
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Mat& m) { return os << m.str(); }

Mat Mat::parse(const std::string& text, unsigned p, int expect_n) {
    size_t i = 0, n = text.size();
    auto skip = [&] { while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    auto expect = [&](char c) {
        skip();
        if (i >= n || text[i] != c)
            throw ParseError(std::string("matrix: expected '") + c + "' at column " + std::to_string(i + 1) + " in '" + text + "'");
        ++i;
    };
    std::vector<std::vector<Scalar>> rows;
    expect('[');
    for (;;) {
        expect('[');
        std::vector<Scalar> row;
        for (;;) {
            skip();
            size_t start = i;
            while (i < n && text[i] != ',' && text[i] != ']') ++i;
            if (i == start) throw ParseError("matrix: empty entry at column " + std::to_string(i + 1) + " in '" + text + "'");
            row.push_back(Scalar::parse(text.substr(start, i - start), p));
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
    if (i != n) throw ParseError("matrix: trailing characters at column " + std::to_string(i + 1) + " in '" + text + "'");
    int dim = static_cast<int>(rows.size());
    if (expect_n > 0 && dim != expect_n)
        throw ParseError("matrix: expected " + std::to_string(expect_n) + " rows, got " + std::to_string(dim));
    for (const auto& r : rows)
        if (static_cast<int>(r.size()) != dim) throw ParseError("matrix: ragged rows in '" + text + "'");
    Mat m(dim, p);
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c) m.at(r, c) = rows[r][c];
    return m;
}

} // namespace hecke
