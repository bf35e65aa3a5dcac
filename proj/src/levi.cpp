#include "hecke/levi.hpp"

#include <algorithm>

#include "hecke/zmod.hpp"

namespace hecke {

Element theta(const Element& x) {
    if (x.tag() != PairTag::PGamma) throw DomainError("theta: input must live over (P,Γ)");
    if (!x.invariant()) throw DomainError("theta: input must be invariant");
    Element out(PairTag::MGammaM, x.ring(), x.datum());
    for (const Element::Term& t : x.terms()) {
        auto [u, m] = factor_um(t.coset.rep());
        out.add(RightCoset(m, PairTag::MGammaM), t.coef);
    }
    return out.with_invariant_flag(true);
}

namespace {

void require_strictly_positive(const GroupElement& a, const char* who) {
    if (!is_strictly_positive(a)) throw DomainError(std::string(who) + ": a is not strictly positive");
}

bool structural_centralizer_test(const Element& x) {
    for (const Element::Term& t : x.terms()) {
        auto [u, m] = factor_um(t.coset.rep());
        if (!member(u, Subgroup::GammaU)) return false;
    }
    return true;
}

} // namespace

bool centralizer_test(const Element& x, const GroupElement& a) {
    if (x.tag() != PairTag::PGamma) throw DomainError("centralizer_test: element must live over (P,Γ)");
    if (!x.invariant()) throw DomainError("centralizer_test: element must be invariant");
    require_strictly_positive(a, "centralizer_test");
    Element ta = hecke_T(a, PairTag::PGamma, x.ring());
    bool commutes = hecke_mul(x, ta) == hecke_mul(ta, x);
    bool structural = structural_centralizer_test(x);
    if (commutes != structural)
        throw InternalError("centralizer_test: commutator and structural answers disagree");
    return commutes;
}

std::pair<int, Element> power_shift(const Element& x, const GroupElement& a) {
    if (!x.invariant()) throw DomainError("power_shift: element must be invariant");
    require_strictly_positive(a, "power_shift");
    const ParabolicDatum& d = x.datum();
    std::vector<long> avals;
    for (int b = 0; b < d.block_count(); ++b) avals.push_back(a.mat().at(d.block_start(b), d.block_start(b)).val());
    // Cap from U-part valuation deficits: conjugation by a^n raises the
    // (i,j)-block valuations by n·(val λ_i − val λ_j).
    long cap = 0;
    for (const Element::Term& t : x.terms()) {
        auto [u, m] = factor_um(t.coset.rep());
        for (int bi = 0; bi < d.block_count(); ++bi)
            for (int bj = bi + 1; bj < d.block_count(); ++bj) {
                long minv = val_infinity;
                for (int i = d.block_start(bi); i < d.block_start(bi) + d.blocks[bi]; ++i)
                    for (int j = d.block_start(bj); j < d.block_start(bj) + d.blocks[bj]; ++j)
                        if (!u.mat().at(i, j).is_zero()) minv = std::min(minv, u.mat().at(i, j).val());
                if (minv == val_infinity || minv >= 0) continue;
                long gap = avals[bi] - avals[bj];
                cap = std::max(cap, (-minv + gap - 1) / gap);
            }
    }
    Element ta = hecke_T(a, PairTag::PGamma, x.ring());
    Element cur = x;
    for (long n = 0; n <= cap; ++n) {
        if (centralizer_test(cur, a)) return {static_cast<int>(n), cur};
        cur = hecke_mul(ta, cur);
    }
    throw InternalError("power_shift: valuation cap exceeded without reaching C(a)");
}

Element levi_lift(const Element& y, const GroupElement& a) {
    if (y.tag() != PairTag::MGammaM) throw DomainError("levi_lift: input must live over (M,Γ_M)");
    if (!y.invariant()) throw DomainError("levi_lift: input must be invariant");
    require_strictly_positive(a, "levi_lift");
    Element out = zero_element(PairTag::PGamma, y.ring(), y.datum());
    for (const auto& [coef, rep] : to_T_basis(y)) {
        if (!is_positive(rep))
            throw DomainError("levi_lift: component T[" + rep.mat().str() + "] is not positive");
        out = out + hecke_T(rep, PairTag::PGamma, y.ring()).scaled(coef);
    }
    if (theta(out) != y) throw InternalError("levi_lift: theta does not invert the lift");
    if (!centralizer_test(out, a)) throw InternalError("levi_lift: lift escapes the centralizer");
    return out;
}

LocalizationWitness fraction_decompose(const Element& y, const GroupElement& a) {
    if (y.tag() != PairTag::MGammaM) throw DomainError("fraction_decompose: input must live over (M,Γ_M)");
    if (!y.invariant()) throw DomainError("fraction_decompose: input must be invariant");
    require_strictly_positive(a, "fraction_decompose");
    int n = 0;
    for (const auto& [coef, rep] : to_T_basis(y))
        if (!is_positive(rep)) n = std::max(n, positive_shift(a, rep));
    Element shifted = y;
    Element ta_m = hecke_T(a, PairTag::MGammaM, y.ring());
    for (int i = 0; i < n; ++i) shifted = hecke_mul(ta_m, shifted);
    return LocalizationWitness{n, levi_lift(shifted, a)};
}

RadicalWitness kernel_test(const Element& x, const GroupElement& a) {
    auto [n0, y] = power_shift(x, a);
    Element th = theta(x);
    if (y.is_zero()) {
        Element ta = hecke_T(a, PairTag::PGamma, x.ring());
        Element cur = x;
        int witness = 0;
        for (int k = 1; k <= std::max(n0, 1); ++k) {
            cur = hecke_mul(ta, cur);
            if (cur.is_zero()) {
                witness = k;
                break;
            }
        }
        if (witness == 0) throw InternalError("kernel_test: vanishing shift but no witness in range");
        if (!th.is_zero()) throw InternalError("kernel_test: radical witness found but theta(X) != 0");
        return RadicalWitness{witness};
    }
    if (th.is_zero()) throw InternalError("kernel_test: theta(X) = 0 but T_a^n·X != 0 in C(a)");
    return RadicalWitness{std::nullopt};
}

namespace {

// All block-monomial M-parts with diagonal valuations in [-bound, bound]:
// per block a permutation matrix times a diagonal of p-powers.
std::vector<GroupElement> enumerate_monomial_m(const ParabolicDatum& d, int bound) {
    std::vector<std::vector<Mat>> per_block;
    for (int b = 0; b < d.block_count(); ++b) {
        int k = d.blocks[b];
        std::vector<Mat> blocks;
        std::vector<int> perm(k);
        for (int i = 0; i < k; ++i) perm[i] = i;
        std::vector<int> exps(k, -bound);
        do {
            for (;;) {
                Mat blk(k, d.p);
                for (int i = 0; i < k; ++i) blk.at(perm[i], i) = Scalar::p_power(exps[i], d.p);
                blocks.push_back(blk);
                int t = 0;
                while (t < k && ++exps[t] > bound) exps[t++] = -bound;
                if (t == k) break;
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
        per_block.push_back(std::move(blocks));
    }
    std::vector<GroupElement> out;
    std::vector<size_t> odo(per_block.size(), 0);
    for (;;) {
        Mat m(d.n(), d.p);
        for (int b = 0; b < d.block_count(); ++b) {
            const Mat& blk = per_block[b][odo[b]];
            int s = d.block_start(b);
            for (int i = 0; i < d.blocks[b]; ++i)
                for (int j = 0; j < d.blocks[b]; ++j) m.at(s + i, s + j) = blk.at(i, j);
        }
        out.emplace_back(d, std::move(m));
        size_t t = 0;
        while (t < odo.size() && ++odo[t] == per_block[t].size()) odo[t++] = 0;
        if (t == odo.size()) break;
    }
    return out;
}

// U-entry candidate values: 0 and c/p^j for 1 <= j <= bound, p∤c.
std::vector<Scalar> u_entry_values(const ParabolicDatum& d, int bound) {
    std::vector<Scalar> vals{Scalar(0, d.p)};
    for (int j = 1; j <= bound; ++j) {
        long pj = 1;
        for (int t = 0; t < j; ++t) pj *= d.p;
        for (long c = 1; c < pj; ++c)
            if (c % d.p != 0) vals.push_back(Scalar(mpz_class(c), mpz_class(1), -j, d.p));
    }
    return vals;
}

} // namespace

ImageSpanFamily image_span_basis(const ParabolicDatum& datum, const CoefRing& ring, int bound,
                                 std::uint64_t orbit_cap) {
    if (bound < 0) throw DomainError("image_span_basis: bound must be >= 0");
    std::vector<GroupElement> mparts = enumerate_monomial_m(datum, bound);
    std::vector<Scalar> uvals = u_entry_values(datum, bound);
    std::vector<std::pair<int, int>> upos;
    for (int i = 0; i < datum.n(); ++i)
        for (int j = 0; j < datum.n(); ++j)
            if (datum.in_pattern(i, j) && !datum.in_m_pattern(i, j)) upos.emplace_back(i, j);
    double candidates = static_cast<double>(mparts.size());
    for (size_t t = 0; t < upos.size(); ++t) candidates *= static_cast<double>(uvals.size());
    if (candidates > 20000.0)
        throw ResourceError("image_span_basis: candidate count exceeds cap; lower the bound");

    ImageSpanFamily fam;
    std::vector<DoubleCosetDecomposition> decs;
    std::vector<size_t> odo(upos.size(), 0);
    for (const GroupElement& m : mparts) {
        std::fill(odo.begin(), odo.end(), 0);
        for (;;) {
            Mat u = Mat::identity(datum.n(), datum.p);
            for (size_t t = 0; t < upos.size(); ++t) u.at(upos[t].first, upos[t].second) = uvals[odo[t]];
            GroupElement g(datum, u * m.mat());
            bool known = false;
            for (const auto& dec : decs)
                if (decomposition_contains(dec, g)) {
                    known = true;
                    break;
                }
            if (!known) {
                decs.push_back(decompose_double_coset(g, PairTag::PGamma, orbit_cap));
                fam.bases.push_back(g);
                fam.images.push_back(theta(hecke_T(g, PairTag::PGamma, ring, orbit_cap)));
            }
            if (upos.empty()) break;
            size_t t = 0;
            while (t < odo.size() && ++odo[t] == uvals.size()) odo[t++] = 0;
            if (t == odo.size()) break;
        }
    }
    return fam;
}

ImageSpanReport image_span_report(const ParabolicDatum& datum, int bound, std::uint64_t orbit_cap) {
    ImageSpanReport rep{image_span_basis(datum, CoefRing::integers(), bound, orbit_cap), {}, {}, {}};
    std::vector<DoubleCosetDecomposition> label_decs;
    for (const Element& img : rep.family.images) {
        std::vector<mpz_class> row(rep.labels.size(), 0);
        for (const auto& [coef, mrep] : to_T_basis(img)) {
            size_t idx = rep.labels.size();
            for (size_t i = 0; i < rep.labels.size(); ++i)
                if (decomposition_contains(label_decs[i], mrep)) {
                    idx = i;
                    break;
                }
            if (idx == rep.labels.size()) {
                rep.labels.push_back(mrep);
                label_decs.push_back(decompose_double_coset(mrep, PairTag::MGammaM, orbit_cap));
                for (auto& r : rep.coords) r.push_back(0);
                row.push_back(0);
            }
            row[idx] = coef;
        }
        rep.coords.push_back(std::move(row));
    }
    for (auto& r : rep.coords) r.resize(rep.labels.size(), 0);
    if (!rep.coords.empty()) rep.elementary_divisors = smith_normal_form(rep.coords);
    return rep;
}

} // namespace hecke
