#include "hecke/group.hpp"

namespace hecke {

GroupElement::GroupElement(ParabolicDatum datum, Mat mat) : datum_(std::move(datum)), mat_(std::move(mat)) {
    if (mat_.n() != datum_.n()) throw DomainError("group element: matrix size does not match datum");
    if (mat_.prime() != datum_.p) throw DomainError("group element: scalar prime does not match datum");
    for (int i = 0; i < mat_.n(); ++i)
        for (int j = 0; j < mat_.n(); ++j)
            if (!datum_.in_pattern(i, j) && !mat_.at(i, j).is_zero())
                throw DomainError("group element: nonzero entry below the block pattern at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
    if (mat_.det().is_zero()) throw DomainError("group element: singular matrix");
}

GroupElement GroupElement::operator*(const GroupElement& o) const {
    if (datum_ != o.datum_) throw DomainError("group element: datum mismatch");
    // the block pattern is closed under products and both factors are invertible
    return GroupElement(datum_, mat_ * o.mat_, Unchecked{});
}

GroupElement GroupElement::inverse() const {
    return GroupElement(datum_, mat_.inverse(), Unchecked{});
}

bool GroupElement::in_m() const {
    for (int i = 0; i < mat_.n(); ++i)
        for (int j = 0; j < mat_.n(); ++j)
            if (!datum_.in_m_pattern(i, j) && !mat_.at(i, j).is_zero()) return false;
    return true;
}

bool GroupElement::in_u() const {
    for (int b = 0; b < datum_.block_count(); ++b)
        if (!block(b).is_identity()) return false;
    return true;
}

Mat GroupElement::block(int b) const {
    int s = datum_.block_start(b), k = datum_.blocks[b];
    Mat out(k, datum_.p);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) out.at(i, j) = mat_.at(s + i, s + j);
    return out;
}

GroupElement identity_element(const ParabolicDatum& d) {
    return GroupElement(d, Mat::identity(d.n(), d.p));
}

GroupElement power(const GroupElement& a, long k) {
    GroupElement base = k < 0 ? a.inverse() : a;
    long e = k < 0 ? -k : k;
    GroupElement r = identity_element(a.datum());
    for (long i = 0; i < e; ++i) r = r * base;
    return r;
}

std::pair<GroupElement, GroupElement> factor_um(const GroupElement& g) {
    const ParabolicDatum& d = g.datum();
    Mat mmat(d.n(), d.p);
    for (int i = 0; i < d.n(); ++i)
        for (int j = 0; j < d.n(); ++j)
            if (d.in_m_pattern(i, j)) mmat.at(i, j) = g.mat().at(i, j);
    for (int b = 0; b < d.block_count(); ++b) {
        // each diagonal block must be invertible on its own
        int s = d.block_start(b), k = d.blocks[b];
        Mat blk(k, d.p);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) blk.at(i, j) = g.mat().at(s + i, s + j);
        if (blk.det().is_zero())
            throw DomainError("factor_um: diagonal block " + std::to_string(b + 1) + " is singular");
    }
    GroupElement m(d, std::move(mmat));
    GroupElement u = g * m.inverse();
    return {std::move(u), std::move(m)};
}

bool mat_in_pair_subgroup(const ParabolicDatum& d, const Mat& m, PairTag tag) {
    const int n = d.n();
    for (int i = 0; i < n; ++i) {
        const Scalar& di = m.at(i, i);
        if (di.val() != 0) return false;
        if (d.flavor == Flavor::pro_p && di.residue(1) != 1) return false;
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            const Scalar& x = m.at(i, j);
            if (x.is_zero()) continue;
            if (!d.in_pair_pattern(i, j, tag)) return false;
            if (x.val() < d.gamma_constraint(i, j)) return false;
        }
    return true;
}

bool member(const GroupElement& g, Subgroup which) {
    const ParabolicDatum& d = g.datum();
    const Mat& mat = g.mat();
    switch (which) {
        case Subgroup::GLnZp: {
            if (mat.min_val() < 0) return false;
            return mat.det().val() == 0;
        }
        case Subgroup::GammaU: {
            if (!g.in_u()) return false;
            return mat.min_val() >= 0;
        }
        case Subgroup::GammaM:
            return mat_in_pair_subgroup(d, mat, PairTag::MGammaM);
        case Subgroup::Gamma:
            // equivalent to factoring g = u·m and testing u ∈ Γ_U, m ∈ Γ_M
            return mat_in_pair_subgroup(d, mat, PairTag::PGamma);
    }
    throw InternalError("member: unreachable");
}

bool is_positive(const GroupElement& m) {
    if (!m.in_m()) throw DomainError("is_positive: element is not in M");
    const ParabolicDatum& d = m.datum();
    int r = d.block_count();
    std::vector<long> mv(r), iv(r);
    for (int b = 0; b < r; ++b) {
        Mat blk = m.block(b);
        mv[b] = blk.min_val();
        iv[b] = blk.inverse().min_val();
    }
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j)
            // conjugation of block-(i,j) matrix units: m_i · E · m_j^{-1}
            if (mv[i] + iv[j] < 0) return false;
    return true;
}

namespace {

// If every diagonal block of a is scalar λ_b·I, fills vals with val(λ_b)
// and returns true.
bool block_scalars(const GroupElement& a, std::vector<long>& vals) {
    if (!a.in_m()) return false;
    const ParabolicDatum& d = a.datum();
    vals.clear();
    for (int b = 0; b < d.block_count(); ++b) {
        Mat blk = a.block(b);
        const Scalar& lambda = blk.at(0, 0);
        if (lambda.is_zero()) return false;
        for (int i = 0; i < blk.n(); ++i)
            for (int j = 0; j < blk.n(); ++j) {
                if (i == j && blk.at(i, j) != lambda) return false;
                if (i != j && !blk.at(i, j).is_zero()) return false;
            }
        vals.push_back(lambda.val());
    }
    return true;
}

} // namespace

bool is_strictly_positive(const GroupElement& a) {
    std::vector<long> vals;
    if (!block_scalars(a, vals)) return false;
    for (size_t i = 0; i + 1 < vals.size(); ++i)
        if (vals[i] <= vals[i + 1]) return false;
    return true;
}

int positive_shift(const GroupElement& a, const GroupElement& m) {
    if (!is_strictly_positive(a)) throw DomainError("positive_shift: a is not strictly positive");
    if (!m.in_m()) throw DomainError("positive_shift: m is not in M");
    const ParabolicDatum& d = a.datum();
    std::vector<long> avals;
    block_scalars(a, avals);
    int r = d.block_count();
    std::vector<long> mv(r), iv(r);
    for (int b = 0; b < r; ++b) {
        mv[b] = m.block(b).min_val();
        iv[b] = m.block(b).inverse().min_val();
    }
    // Valuation-deficit cap: a^n·m positive needs
    // n·(val λ_i − val λ_j) + min_val(m_i) + min_val(m_j^{-1}) >= 0 per pair.
    long cap = 1;
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j) {
            long deficit = -(mv[i] + iv[j]);
            long gap = avals[i] - avals[j];
            if (deficit > 0) cap = std::max(cap, (deficit + gap - 1) / gap);
        }
    GroupElement cur = a * m;
    for (long n = 1; n <= cap; ++n) {
        if (is_positive(cur)) {
            if (a * m != m * a) throw InternalError("positive_shift: a does not commute with m");
            return static_cast<int>(n);
        }
        cur = a * cur;
    }
    throw InternalError("positive_shift: valuation cap exceeded without success");
}

namespace {

void row_add(Mat& h, int dst, int src, const Scalar& f) {
    for (int j = 0; j < h.n(); ++j)
        if (!h.at(src, j).is_zero()) h.at(dst, j) += f * h.at(src, j);
}

void row_scale(Mat& h, int r, const Scalar& f) {
    for (int j = 0; j < h.n(); ++j)
        if (!h.at(r, j).is_zero()) h.at(r, j) *= f;
}

// Affine Bruhat normal form of the Iwahori coset I·(block), acting on the
// full rows of h.  Either [[p^α, b],[0, p^δ]] with b canonical mod p^δ, or
// [[0, p^β],[p^γ, d]] with d canonical mod p^(β+1); the case split
// v(c) > v(a) is itself coset-invariant.
void reduce_block2(Mat& h, int s, unsigned p) {
    const Scalar& a = h.at(s, s);
    const Scalar& c = h.at(s + 1, s);
    bool upper = c.is_zero() || (!a.is_zero() && c.val() >= a.val() + 1);
    if (upper) {
        if (!c.is_zero()) row_add(h, s + 1, s, -(c / a));
        row_scale(h, s + 1, h.at(s + 1, s + 1).unit_part().inv());
        row_scale(h, s, h.at(s, s).unit_part().inv());
        const Scalar& b = h.at(s, s + 1);
        long delta = h.at(s + 1, s + 1).val();
        Scalar shift = b.truncate_mod(delta) - b;
        if (!shift.is_zero()) row_add(h, s, s + 1, shift * Scalar::p_power(-delta, p));
    } else {
        if (!a.is_zero()) row_add(h, s, s + 1, -(a / c));
        row_scale(h, s, h.at(s, s + 1).unit_part().inv());
        row_scale(h, s + 1, h.at(s + 1, s).unit_part().inv());
        const Scalar& d = h.at(s + 1, s + 1);
        long beta = h.at(s, s + 1).val();
        Scalar shift = d.truncate_mod(beta + 1) - d;
        if (!shift.is_zero()) row_add(h, s + 1, s, shift * Scalar::p_power(-beta, p));
    }
}

} // namespace

std::optional<Mat> coset_canonical(const ParabolicDatum& d, const Mat& hin, PairTag tag) {
    for (int b : d.blocks)
        if (b > 2) return std::nullopt;
    Mat h = hin;
    for (int b = 0; b < d.block_count(); ++b) {
        int s = d.block_start(b);
        if (d.blocks[b] == 1)
            row_scale(h, s, h.at(s, s).unit_part().inv());
        else
            reduce_block2(h, s, d.p);
    }
    if (tag == PairTag::PGamma) {
        // fractional-part reduction of each off-diagonal block, columns left
        // to right so that earlier choices feed into later ones
        for (int cb = 1; cb < d.block_count(); ++cb)
            for (int rb = 0; rb < cb; ++rb) {
                int rs = d.block_start(rb), cs = d.block_start(cb);
                // X = h_(rb,cb) · h_(cb,cb)^{-1}, reduced entrywise mod Z_p
                int kr = d.blocks[rb], kc = d.blocks[cb];
                Mat blk(kc, d.p);
                for (int i = 0; i < kc; ++i)
                    for (int j = 0; j < kc; ++j) blk.at(i, j) = h.at(cs + i, cs + j);
                Mat blk_inv = blk.inverse();
                for (int i = 0; i < kr; ++i) {
                    std::vector<Scalar> x(kc, Scalar(0, d.p));
                    for (int j = 0; j < kc; ++j)
                        for (int k = 0; k < kc; ++k) x[j] += h.at(rs + i, cs + k) * blk_inv.at(k, j);
                    bool dirty = false;
                    std::vector<Scalar> shift(kc, Scalar(0, d.p));
                    for (int j = 0; j < kc; ++j) {
                        shift[j] = x[j].truncate_mod(0) - x[j];
                        dirty = dirty || !shift[j].is_zero();
                    }
                    if (!dirty) continue;
                    for (int j = 0; j < kc; ++j)
                        if (!shift[j].is_zero()) row_add(h, rs + i, cs + j, shift[j]);
                }
            }
    }
    return h;
}

GroupElement canonical_strictly_positive(const ParabolicDatum& d) {
    Mat m(d.n(), d.p);
    int r = d.block_count();
    for (int b = 0; b < r; ++b) {
        Scalar lambda = Scalar::p_power(r - 1 - b, d.p);
        int s = d.block_start(b);
        for (int i = 0; i < d.blocks[b]; ++i) m.at(s + i, s + i) = lambda;
    }
    return GroupElement(d, std::move(m));
}

} // namespace hecke
