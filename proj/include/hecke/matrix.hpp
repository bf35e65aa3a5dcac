#pragma once

#include <string>
#include <vector>

#include "hecke/scalar.hpp"

namespace hecke {

/// Dense square matrix of exact scalars.
class Mat {
  public:
    Mat() : n_(0), p_(0) {}
    Mat(int n, unsigned p) : n_(n), p_(p), a_(static_cast<size_t>(n) * n, Scalar(0, p)) {}
    static Mat identity(int n, unsigned p);

    int n() const { return n_; }
    unsigned prime() const { return p_; }

    Scalar& at(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
    const Scalar& at(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }

    Mat operator*(const Mat& o) const;
    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    bool operator==(const Mat& o) const;
    bool operator!=(const Mat& o) const { return !(*this == o); }

    Scalar det() const;
    Mat inverse() const; // throws DomainError when singular
    bool is_identity() const;

    /// Minimum entry valuation (val_infinity for the zero matrix).
    long min_val() const;

    std::string str() const;
    static Mat parse(const std::string& text, unsigned p, int expect_n = -1);

  private:
    int n_;
    unsigned p_;
    std::vector<Scalar> a_;
};

std::ostream& operator<<(std::ostream& os, const Mat& m);

} // namespace hecke
