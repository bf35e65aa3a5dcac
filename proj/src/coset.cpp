#include "hecke/coset.hpp"

#include <deque>
#include <unordered_map>

namespace hecke {

Counters& counters() {
    thread_local Counters c;
    return c;
}

std::uint64_t CosetKey::hash() const {
    std::uint64_t h = static_cast<std::uint64_t>(det_val) * 0x9e3779b97f4a7c15ull;
    for (const auto& [v, piv] : cols) {
        h ^= (static_cast<std::uint64_t>(v) + 0x2545f4914f6cdd1dull) + (h << 6) + (h >> 2);
        h ^= (static_cast<std::uint64_t>(piv) + 0x100000001b3ull) + (h << 6) + (h >> 2);
    }
    h ^= canon + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
}

namespace {

CosetKey make_key(const GroupElement& g, PairTag tag) {
    const Mat& m = g.mat();
    CosetKey k;
    k.det_val = m.det().val();
    k.cols.reserve(m.n());
    for (int j = 0; j < m.n(); ++j) {
        long v = val_infinity;
        for (int i = 0; i < m.n(); ++i)
            if (!m.at(i, j).is_zero()) v = std::min(v, m.at(i, j).val());
        int pivot = -1;
        for (int i = 0; i < m.n(); ++i)
            if (!m.at(i, j).is_zero() && m.at(i, j).val() == v) pivot = i;
        k.cols.emplace_back(v, pivot);
    }
    if (auto canon = coset_canonical(g.datum(), m, tag)) {
        std::uint64_t h = 0x100000001b3ull;
        for (int i = 0; i < canon->n(); ++i)
            for (int j = 0; j < canon->n(); ++j)
                h ^= canon->at(i, j).hash() + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        k.canon = h;
    }
    return k;
}

} // namespace

RightCoset::RightCoset(GroupElement rep, PairTag tag)
    : rep_(std::move(rep)), tag_(tag), key_(make_key(rep_, tag)) {
    if (tag_ == PairTag::MGammaM && !rep_.in_m())
        throw DomainError("right coset: representative of an (M,Γ_M) coset must lie in M");
}

const Mat& RightCoset::rep_inv() const {
    if (rep_inv_.n() == 0) rep_inv_ = rep_.mat().inverse();
    return rep_inv_;
}

bool coset_eq(const RightCoset& a, const RightCoset& b) {
    if (a.tag() != b.tag()) throw DomainError("coset_eq: mixed pair tags");
    ++counters().eq_tests;
    if (!(a.key() == b.key())) return false;
    return mat_in_pair_subgroup(a.rep().datum(), a.rep().mat() * b.rep_inv(), a.tag());
}

long truncation_level(const GroupElement& g) {
    long d = 0;
    d = std::max(d, -std::min(g.mat().min_val(), 0L));
    d = std::max(d, -std::min(g.mat().inverse().min_val(), 0L));
    return 2 * d + 1;
}

std::vector<GroupElement> gamma_generators(const ParabolicDatum& d, long level, PairTag tag) {
    if (level < 1) throw DomainError("gamma_generators: level must be >= 1");
    const int n = d.n();
    std::vector<GroupElement> out;
    auto elementary = [&](int i, int j, const Scalar& x) {
        Mat m = Mat::identity(n, d.p);
        m.at(i, j) = x;
        out.emplace_back(d, std::move(m));
    };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (d.in_pair_pattern(i, j, tag)) elementary(i, j, Scalar(1, d.p));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j)
            if (d.in_pair_pattern(i, j, tag) && d.in_m_pattern(i, j))
                elementary(i, j, Scalar(static_cast<long>(d.p), d.p));
    auto units = d.flavor == Flavor::pro_p
                     ? principal_unit_generators(d.p, static_cast<unsigned>(level))
                     : unit_group_generators(d.p, static_cast<unsigned>(level));
    std::uint64_t mod = pow_u64_checked(d.p, static_cast<unsigned>(level));
    for (int k = 0; k < n; ++k)
        for (const Residue& z : units) {
            // the residue p^N−1 is the integer −1 at every level
            long lift = z.value == mod - 1 ? -1 : static_cast<long>(z.value);
            Mat m = Mat::identity(n, d.p);
            m.at(k, k) = Scalar(lift, d.p);
            out.emplace_back(d, std::move(m));
        }
    return out;
}

namespace {

// Defensive re-verification of the truncation bound on every call:
// g·(I + p^N E)·g^{-1} must land in the pair subgroup for every pattern
// position E (these generate Γ(p^N) topologically).
void assert_truncation(const GroupElement& g, PairTag tag, long level) {
    const ParabolicDatum& d = g.datum();
    Mat ginv = g.mat().inverse();
    for (int i = 0; i < d.n(); ++i)
        for (int j = 0; j < d.n(); ++j) {
            if (!d.in_pair_pattern(i, j, tag)) continue;
            Mat e = Mat::identity(d.n(), d.p);
            e.at(i, j) += Scalar::p_power(level, d.p);
            if (!mat_in_pair_subgroup(d, g.mat() * e * ginv, tag))
                throw InternalError("truncation bound violated at position (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
        }
}

} // namespace

DoubleCosetDecomposition decompose_double_coset(const GroupElement& g, PairTag tag,
                                                std::uint64_t orbit_cap) {
    if (tag == PairTag::MGammaM && !g.in_m())
        throw DomainError("decompose: base of an (M,Γ_M) double coset must lie in M");
    const ParabolicDatum& d = g.datum();
    long level = truncation_level(g);
    assert_truncation(g, tag, level);
    std::vector<GroupElement> gens = gamma_generators(d, level, tag);

    DoubleCosetDecomposition dec{g, tag, {}};
    std::unordered_multimap<std::uint64_t, size_t> index;
    auto try_insert = [&](GroupElement rep) -> bool {
        RightCoset c(std::move(rep), tag);
        auto [lo, hi] = index.equal_range(c.key().hash());
        for (auto it = lo; it != hi; ++it)
            if (coset_eq(c, dec.cosets[it->second])) return false;
        if (dec.cosets.size() >= orbit_cap)
            throw ResourceError("decompose: orbit cap " + std::to_string(orbit_cap) + " exceeded (bad truncation bound or huge double coset)");
        index.emplace(c.key().hash(), dec.cosets.size());
        dec.cosets.push_back(std::move(c));
        ++counters().cosets_enumerated;
        return true;
    };

    try_insert(g);
    std::deque<size_t> frontier{0};
    while (!frontier.empty()) {
        size_t cur = frontier.front();
        frontier.pop_front();
        for (const GroupElement& gen : gens) {
            GroupElement next = dec.cosets[cur].rep() * gen;
            if (try_insert(std::move(next))) frontier.push_back(dec.cosets.size() - 1);
        }
    }
    return dec;
}

bool decomposition_contains(const DoubleCosetDecomposition& dec, const GroupElement& h) {
    RightCoset c(h, dec.tag);
    for (const RightCoset& rc : dec.cosets)
        if (coset_eq(c, rc)) return true;
    return false;
}

namespace {

bool is_diagonal(const Mat& m) {
    for (int i = 0; i < m.n(); ++i)
        for (int j = 0; j < m.n(); ++j)
            if (i != j && !m.at(i, j).is_zero()) return false;
    return true;
}

mpz_class diagonal_index_formula(const GroupElement& g, PairTag tag) {
    const ParabolicDatum& d = g.datum();
    std::vector<long> a(d.n());
    for (int k = 0; k < d.n(); ++k) a[k] = g.mat().at(k, k).val();
    long exponent = 0;
    for (int k = 0; k < d.n(); ++k)
        for (int l = 0; l < d.n(); ++l) {
            if (k == l || !d.in_pair_pattern(k, l, tag)) continue;
            exponent += std::max(0L, a[l] - a[k]);
        }
    mpz_class out;
    mpz_ui_pow_ui(out.get_mpz_t(), d.p, static_cast<unsigned long>(exponent));
    return out;
}

} // namespace

mpz_class oracle_index_enumerated(const GroupElement& g, PairTag tag, std::uint64_t enum_cap) {
    const ParabolicDatum& d = g.datum();
    long level = truncation_level(g);
    std::uint64_t mod = pow_u64_checked(d.p, static_cast<unsigned>(level));

    // assemble the free positions of Γ mod p^N and their residue ranges
    struct Pos {
        int i, j;
        std::vector<long> values; // integer lifts
    };
    std::vector<Pos> positions;
    mpz_class total = 1;
    for (int i = 0; i < d.n(); ++i)
        for (int j = 0; j < d.n(); ++j) {
            if (!d.in_pair_pattern(i, j, tag)) continue;
            Pos pos{i, j, {}};
            if (i == j) {
                for (std::uint64_t v = 1; v < mod; ++v) {
                    if (v % d.p == 0) continue;
                    if (d.flavor == Flavor::pro_p && v % d.p != 1) continue;
                    pos.values.push_back(static_cast<long>(v));
                }
            } else if (d.gamma_constraint(i, j) == 1) {
                for (std::uint64_t v = 0; v < mod; v += d.p) pos.values.push_back(static_cast<long>(v));
            } else {
                for (std::uint64_t v = 0; v < mod; ++v) pos.values.push_back(static_cast<long>(v));
            }
            total *= static_cast<unsigned long>(pos.values.size());
            positions.push_back(std::move(pos));
        }
    if (total > static_cast<unsigned long>(enum_cap))
        throw ResourceError("oracle_index: quotient order " + total.get_str() + " exceeds enumeration cap");

    Mat ginv = g.mat().inverse();
    std::vector<size_t> odo(positions.size(), 0);
    mpz_class stab = 0;
    for (;;) {
        Mat gamma(d.n(), d.p);
        for (size_t k = 0; k < positions.size(); ++k)
            gamma.at(positions[k].i, positions[k].j) = Scalar(positions[k].values[odo[k]], d.p);
        if (mat_in_pair_subgroup(d, g.mat() * gamma * ginv, tag)) ++stab;
        size_t k = 0;
        while (k < odo.size() && ++odo[k] == positions[k].values.size()) odo[k++] = 0;
        if (k == odo.size()) break;
    }
    if (stab == 0 || total % stab != 0)
        throw InternalError("oracle_index: stabilizer count does not divide the quotient order");
    return total / stab;
}

mpz_class oracle_index(const GroupElement& g, PairTag tag, std::uint64_t enum_cap) {
    if (is_diagonal(g.mat())) return diagonal_index_formula(g, tag);
    return oracle_index_enumerated(g, tag, enum_cap);
}

} // namespace hecke
