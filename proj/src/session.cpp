#include "hecke/session.hpp"

#include <algorithm>
#include <sstream>

namespace hecke {

void SessionConfig::validate() const {
    datum.validate();
    if (val_bound < 0) throw DomainError("config: val-bound must be >= 0");
    if (orbit_cap < 1) throw DomainError("config: orbit-cap must be >= 1");
}

std::string SessionConfig::header() const {
    std::ostringstream os;
    os << "config " << datum.header() << " coeff=" << ring.name() << " seed=" << seed
       << " orbit-cap=" << orbit_cap << " val-bound=" << val_bound;
    return os.str();
}

GroupElement random_gamma_word(const ParabolicDatum& d, PairTag tag, SplitMix64& rng, int length) {
    std::vector<GroupElement> gens = gamma_generators(d, 3, tag);
    GroupElement g = identity_element(d);
    for (int i = 0; i < length; ++i) {
        const GroupElement& pick = gens[rng.below(gens.size())];
        g = rng.below(2) ? g * pick : g * pick.inverse();
    }
    return g;
}

GroupElement random_group_element(const ParabolicDatum& d, PairTag tag, SplitMix64& rng, int bound) {
    Mat m(d.n(), d.p);
    for (int b = 0; b < d.block_count(); ++b) {
        int k = d.blocks[b], s = d.block_start(b);
        std::vector<int> perm(k);
        for (int i = 0; i < k; ++i) perm[i] = i;
        for (int i = k - 1; i > 0; --i) std::swap(perm[i], perm[rng.below(static_cast<std::uint64_t>(i) + 1)]);
        for (int i = 0; i < k; ++i)
            m.at(s + perm[i], s + i) = Scalar::p_power(rng.range(-bound, bound), d.p);
    }
    Mat u = Mat::identity(d.n(), d.p);
    if (tag == PairTag::PGamma) {
        long height = 1;
        for (int t = 0; t < 2 * bound; ++t) height *= d.p;
        for (int i = 0; i < d.n(); ++i)
            for (int j = 0; j < d.n(); ++j) {
                if (!d.in_pattern(i, j) || d.in_m_pattern(i, j)) continue;
                if (rng.below(2) == 0) continue;
                long c = rng.range(-height, height);
                long jexp = rng.range(0, bound);
                u.at(i, j) = Scalar(mpz_class(c), mpz_class(1), -jexp, d.p);
            }
    }
    GroupElement core(d, u * m);
    GroupElement left = random_gamma_word(d, tag, rng, static_cast<int>(rng.below(3)));
    GroupElement right = random_gamma_word(d, tag, rng, static_cast<int>(rng.below(3)));
    return left * core * right;
}

Element random_element(const SessionConfig& cfg, int bound, int size, PairTag tag, SplitMix64& rng) {
    Element out = zero_element(tag, cfg.ring, cfg.datum);
    for (int i = 0; i < size; ++i) {
        mpz_class coef;
        if (cfg.ring.kind == CoefRing::Kind::Z) {
            long c = rng.range(1, 3);
            coef = rng.below(2) ? c : -c;
        } else {
            coef = static_cast<unsigned long>(1 + rng.below(mpz_get_ui(cfg.ring.modulus.get_mpz_t()) - 1));
        }
        GroupElement g = random_group_element(cfg.datum, tag, rng, bound);
        out = out + hecke_T(g, tag, cfg.ring, cfg.orbit_cap).scaled(coef);
    }
    return out;
}

// ---------------------------------------------------------------------------
// suites

namespace {

ParabolicDatum make_datum(unsigned p, std::vector<int> blocks) {
    return ParabolicDatum{p, std::move(blocks), Flavor::iwahori};
}

GroupElement diag_powers(const ParabolicDatum& d, const std::vector<long>& exps) {
    Mat m(d.n(), d.p);
    for (int i = 0; i < d.n(); ++i) m.at(i, i) = Scalar::p_power(exps[i], d.p);
    return GroupElement(d, std::move(m));
}

GroupElement diag_vals(const ParabolicDatum& d, const std::vector<long>& vals) {
    Mat m(d.n(), d.p);
    for (int i = 0; i < d.n(); ++i) m.at(i, i) = Scalar(vals[i], d.p);
    return GroupElement(d, std::move(m));
}

void add_case(SuiteResult& r, const std::string& name, bool pass, const std::string& detail) {
    r.cases.push_back(PropertyCase{name, pass, detail});
}

std::string blocks_label(const ParabolicDatum& d) {
    std::string s;
    for (size_t i = 0; i < d.blocks.size(); ++i) s += (i ? "" : "") + std::to_string(d.blocks[i]);
    return s;
}

// --- cosets: BFS counts against the independent index oracle ----------------

SuiteResult suite_cosets(const SuiteParams& params) {
    SuiteResult r{"cosets", {}};
    for (unsigned p : {2u, 3u})
        for (const auto& blocks : std::vector<std::vector<int>>{{1, 1}, {2, 1}}) {
            ParabolicDatum d = make_datum(p, blocks);
            int n = d.n();
            std::vector<long> exps(n, -2);
            int total = 0, bad = 0;
            std::string first_bad;
            std::vector<std::vector<long>> small_cases; // for translate sampling
            for (;;) {
                GroupElement g = diag_powers(d, exps);
                mpz_class expected = oracle_index(g, PairTag::PGamma);
                DoubleCosetDecomposition dec = decompose_double_coset(g, PairTag::PGamma, params.orbit_cap);
                ++total;
                if (mpz_class(static_cast<unsigned long>(dec.cosets.size())) != expected) {
                    ++bad;
                    if (first_bad.empty())
                        first_bad = "g=" + g.mat().str() + " bfs=" + std::to_string(dec.cosets.size()) + " oracle=" + expected.get_str();
                }
                if (expected <= 2000) small_cases.push_back(exps);
                int t = 0;
                while (t < n && ++exps[t] > 2) exps[t++] = -2;
                if (t == n) break;
            }
            std::string label = "p" + std::to_string(p) + "-b" + blocks_label(d);
            add_case(r, label + "-diagonals", bad == 0,
                     bad == 0 ? std::to_string(total) + " diagonal double cosets match the oracle" : first_bad);

            SplitMix64 rng(params.seed ^ (p * 1315423911u) ^ (blocks.size() * 2654435761u) ^ blocks[0]);
            int tbad = 0;
            std::string tfirst;
            for (int t = 0; t < 20; ++t) {
                const std::vector<long>& e = small_cases[rng.below(small_cases.size())];
                GroupElement g = diag_powers(d, e);
                GroupElement h = random_gamma_word(d, PairTag::PGamma, rng, 1 + static_cast<int>(rng.below(3))) * g *
                                 random_gamma_word(d, PairTag::PGamma, rng, 1 + static_cast<int>(rng.below(3)));
                mpz_class expected = oracle_index(g, PairTag::PGamma);
                DoubleCosetDecomposition dec = decompose_double_coset(h, PairTag::PGamma, params.orbit_cap);
                if (mpz_class(static_cast<unsigned long>(dec.cosets.size())) != expected) {
                    ++tbad;
                    if (tfirst.empty()) tfirst = "h=" + h.mat().str() + " bfs=" + std::to_string(dec.cosets.size()) + " oracle=" + expected.get_str();
                }
            }
            add_case(r, label + "-translates", tbad == 0,
                     tbad == 0 ? "20 random Γ-translates match the oracle" : tfirst);
        }
    return r;
}

// --- ring: associativity and unit, both pairs --------------------------------

SuiteResult suite_ring(const SuiteParams& params) {
    SuiteResult r{"ring", {}};
    SessionConfig cfg{make_datum(2, {1, 1}), CoefRing::integers(), params.seed, params.orbit_cap, 1};
    for (PairTag tag : {PairTag::PGamma, PairTag::MGammaM}) {
        SplitMix64 rng(params.seed ^ (tag == PairTag::PGamma ? 0x50ull : 0x4dull));
        Element t1 = hecke_T(identity_element(cfg.datum), tag, cfg.ring);
        int assoc_bad = 0, unit_bad = 0;
        std::string first;
        for (int i = 0; i < 100; ++i) {
            Element x = random_element(cfg, 1, 1 + static_cast<int>(rng.below(2)), tag, rng);
            Element y = random_element(cfg, 1, 1 + static_cast<int>(rng.below(2)), tag, rng);
            Element z = random_element(cfg, 1, 1 + static_cast<int>(rng.below(2)), tag, rng);
            if (hecke_mul(hecke_mul(x, y), z) != hecke_mul(x, hecke_mul(y, z))) {
                ++assoc_bad;
                if (first.empty()) first = "triple " + std::to_string(i);
            }
            if (hecke_mul(t1, x) != x || hecke_mul(x, t1) != x) ++unit_bad;
        }
        std::string label = tag == PairTag::PGamma ? "pair-P" : "pair-M";
        add_case(r, label + "-associativity", assoc_bad == 0,
                 assoc_bad == 0 ? "100 seeded triples associate exactly" : first);
        add_case(r, label + "-unit", unit_bad == 0, "T_1 is a two-sided unit on 100 seeded elements");
    }
    return r;
}

// --- example: the diag(1,2) walk-through -------------------------------------

SuiteResult suite_example(const SuiteParams& params) {
    SuiteResult r{"example", {}};
    ParabolicDatum d = make_datum(2, {1, 1});
    CoefRing z = CoefRing::integers();
    GroupElement a = diag_vals(d, {2, 1});
    GroupElement b = diag_vals(d, {1, 2});
    GroupElement ab = diag_vals(d, {2, 2});

    Element tb = hecke_T(b, PairTag::PGamma, z, params.orbit_cap);
    add_case(r, "decomposition", tb.terms().size() == 2, "Γ·diag(1,2)·Γ splits into 2 right cosets");

    Element th = theta(tb);
    Element expect_theta = hecke_T(b, PairTag::MGammaM, z).scaled(2);
    add_case(r, "theta", th == expect_theta, "theta(T_diag(1,2)) = 2·T^M_diag(1,2) exactly");

    auto [n, shifted] = power_shift(tb, a);
    Element expect_shift = hecke_T(ab, PairTag::PGamma, z).scaled(2);
    add_case(r, "power-shift", n == 1 && shifted == expect_shift,
             "power_shift returns n=1 with T_a·T_diag(1,2) = 2·(Γ diag(2,2))");

    Element ta = hecke_T(a, PairTag::PGamma, z);
    add_case(r, "single-coset-T_a", ta.terms().size() == 1, "ΓaΓ = Γa for the strictly positive a");
    return r;
}

// --- kernel: radical witnesses iff theta vanishes ----------------------------

Element crafted_kernel_element(const SessionConfig& cfg, SplitMix64& rng) {
    ParabolicDatum d = cfg.datum;
    // theta kills T_(2,2) − T_[[2,1],[0,2]]; random central twists keep it in the kernel
    Mat dm(2, d.p);
    dm.at(0, 0) = Scalar(2, d.p);
    dm.at(0, 1) = Scalar(1, d.p);
    dm.at(1, 1) = Scalar(2, d.p);
    GroupElement ab = diag_vals(d, {2, 2});
    GroupElement de(d, std::move(dm));
    GroupElement twist = diag_powers(d, {static_cast<long>(rng.below(2)), static_cast<long>(rng.below(2))});
    Element x = hecke_T(twist * ab, PairTag::PGamma, cfg.ring) - hecke_T(twist * de, PairTag::PGamma, cfg.ring);
    mpz_class c = cfg.ring.kind == CoefRing::Kind::Z
                      ? mpz_class(1)
                      : mpz_class(static_cast<unsigned long>(1 + rng.below(mpz_get_ui(cfg.ring.modulus.get_mpz_t()) - 1)));
    return x.scaled(c);
}

SuiteResult suite_kernel(const SuiteParams& params) {
    SuiteResult r{"kernel", {}};
    ParabolicDatum d = make_datum(2, {1, 1});
    GroupElement a = diag_vals(d, {2, 1});
    GroupElement b = diag_vals(d, {1, 2});

    {
        CoefRing mod2 = CoefRing::mod(2);
        Element x = hecke_T(b, PairTag::PGamma, mod2);
        RadicalWitness w = kernel_test(x, a);
        bool ok = w.exponent && *w.exponent == 1 && theta(x).is_zero();
        add_case(r, "mod2-witness", ok, "T_diag(1,2) over Z/2: witness n=1 and theta = 0");
        Element z = hecke_T(b, PairTag::PGamma, CoefRing::integers());
        RadicalWitness wz = kernel_test(z, a);
        bool okz = !wz.exponent && !theta(z).is_zero();
        add_case(r, "z-no-witness", okz, "same element over Z: no witness, theta = 2·T^M ≠ 0");
    }

    for (unsigned m : {2u, 3u}) {
        SessionConfig cfg{d, CoefRing::mod(m), params.seed, params.orbit_cap, 2};
        SplitMix64 rng(params.seed ^ (0xabcull * m));
        int bad = 0, witnesses = 0;
        std::string first;
        for (int i = 0; i < 60; ++i) {
            Element x = (i % 5 == 4) ? crafted_kernel_element(cfg, rng)
                                     : random_element(cfg, 2, 1 + static_cast<int>(rng.below(3)), PairTag::PGamma, rng);
            bool witness = false, theta_zero = theta(x).is_zero();
            try {
                RadicalWitness w = kernel_test(x, a);
                witness = w.exponent.has_value();
            } catch (const InternalError& e) {
                ++bad;
                if (first.empty()) first = e.what();
                continue;
            }
            if (witness != theta_zero) {
                ++bad;
                if (first.empty()) first = "case " + std::to_string(i) + ": witness/theta mismatch";
            }
            if (witness) ++witnesses;
        }
        bool cover = witnesses >= 10;
        add_case(r, "mod" + std::to_string(m) + "-equivalence", bad == 0 && cover,
                 bad || !cover ? (first.empty() ? "kernel witness coverage too low" : first)
                               : "60 seeded elements: witness exists iff theta = 0 (" + std::to_string(witnesses) + " kernel hits)");
    }
    return r;
}

// --- localization: inverting T_a and fraction roundtrips ---------------------

SuiteResult suite_localization(const SuiteParams& params) {
    SuiteResult r{"localization", {}};
    ParabolicDatum d = make_datum(2, {1, 1});
    CoefRing z = CoefRing::integers();
    GroupElement a = diag_vals(d, {2, 1});

    {
        bool ok = true;
        Element t1m = hecke_T(identity_element(d), PairTag::MGammaM, z);
        for (int n = 1; n <= 3 && ok; ++n) {
            Element lhs = hecke_T(power(a, n), PairTag::MGammaM, z);
            Element rhs = hecke_T(power(a, -n), PairTag::MGammaM, z);
            ok = hecke_mul(lhs, rhs) == t1m && hecke_mul(rhs, lhs) == t1m;
        }
        add_case(r, "inverting", ok, "theta(T_a)^n · T^M_(a^-n) = T^M_1 for n = 1..3");
    }

    struct Batch {
        ParabolicDatum datum;
        CoefRing ring;
        int count;
        const char* label;
    };
    std::vector<Batch> batches{{d, z, 50, "z-b11"},
                               {d, CoefRing::mod(3), 50, "mod3-b11"},
                               {make_datum(2, {2, 1}), z, 20, "z-b21"}};
    for (const Batch& batch : batches) {
        GroupElement aa = canonical_strictly_positive(batch.datum);
        SessionConfig cfg{batch.datum, batch.ring, params.seed, params.orbit_cap, 2};
        SplitMix64 rng(params.seed ^ 0x10c411ull ^ static_cast<std::uint64_t>(batch.count));
        int bound = batch.datum.n() > 2 ? 1 : 2;
        int bad = 0;
        std::string first;
        for (int i = 0; i < batch.count; ++i) {
            Element y = random_element(cfg, bound, 1 + static_cast<int>(rng.below(3)), PairTag::MGammaM, rng);
            try {
                LocalizationWitness w = fraction_decompose(y, aa);
                Element shifted = y;
                Element tam = hecke_T(aa, PairTag::MGammaM, batch.ring);
                for (int k = 0; k < w.exponent; ++k) shifted = hecke_mul(tam, shifted);
                if (theta(w.numerator) != shifted) throw InternalError("roundtrip mismatch");
                if (w.exponent > 0) {
                    // minimality: one step earlier some component is not positive
                    Element prev = y;
                    for (int k = 0; k + 1 < w.exponent; ++k) prev = hecke_mul(tam, prev);
                    bool some_negative = false;
                    for (const auto& [coef, rep] : to_T_basis(prev))
                        if (!is_positive(rep)) some_negative = true;
                    if (!some_negative) throw InternalError("exponent not minimal");
                }
            } catch (const std::exception& e) {
                ++bad;
                if (first.empty()) first = "case " + std::to_string(i) + ": " + e.what();
            }
        }
        add_case(r, std::string("fraction-") + batch.label, bad == 0,
                 bad == 0 ? std::to_string(batch.count) + " seeded fractions verify theta(X) = theta(T_a)^n·Y" : first);
    }
    return r;
}

// --- centralizer: commutator vs structural tests, lift section ---------------

SuiteResult suite_centralizer(const SuiteParams& params) {
    SuiteResult r{"centralizer", {}};
    for (const auto& blocks : std::vector<std::vector<int>>{{1, 1}, {2, 1}}) {
        ParabolicDatum d = make_datum(2, blocks);
        GroupElement a = canonical_strictly_positive(d);
        SessionConfig cfg{d, CoefRing::integers(), params.seed, params.orbit_cap, 2};
        SplitMix64 rng(params.seed ^ 0xce47ull ^ blocks[0]);
        int bound = d.n() > 2 ? 1 : 2;
        int bad = 0, in_centralizer = 0;
        std::string first;
        for (int i = 0; i < 100; ++i) {
            Element x = random_element(cfg, bound, 1 + static_cast<int>(rng.below(2)), PairTag::PGamma, rng);
            try {
                if (centralizer_test(x, a)) ++in_centralizer;
            } catch (const InternalError& e) {
                ++bad;
                if (first.empty()) first = e.what();
            }
        }
        add_case(r, "agreement-b" + blocks_label(d), bad == 0,
                 bad == 0 ? "commutator and structural answers agree on 100 seeded elements (" + std::to_string(in_centralizer) + " in C(a))" : first);
    }

    {
        ParabolicDatum d = make_datum(2, {1, 1});
        GroupElement a = diag_vals(d, {2, 1});
        CoefRing z = CoefRing::integers();
        SplitMix64 rng(params.seed ^ 0x11f7ull);
        int bad = 0;
        std::string first;
        for (int i = 0; i < 50; ++i) {
            Element y = zero_element(PairTag::MGammaM, z, d);
            int terms = 1 + static_cast<int>(rng.below(2));
            for (int t = 0; t < terms; ++t) {
                long e2 = rng.range(-2, 2);
                long e1 = e2 + rng.range(0, 2); // val drop => positive
                mpz_class c = rng.below(2) ? 1 : 2;
                y = y + hecke_T(diag_powers(d, {e1, e2}), PairTag::MGammaM, z).scaled(c);
            }
            try {
                Element lift = levi_lift(y, a);
                if (theta(lift) != y) throw InternalError("lift section failed");
                if (!centralizer_test(lift, a)) throw InternalError("lift escapes C(a)");
            } catch (const std::exception& e) {
                ++bad;
                if (first.empty()) first = "case " + std::to_string(i) + ": " + e.what();
            }
        }
        add_case(r, "lift-section", bad == 0,
                 bad == 0 ? "theta ∘ levi_lift = id on 50 positive-supported Y" : first);
        Element tpos = hecke_T(diag_powers(d, {1, 0}), PairTag::PGamma, z);
        Element tneg = hecke_T(diag_powers(d, {0, 1}), PairTag::PGamma, z);
        add_case(r, "structural-examples",
                 centralizer_test(tpos, a) && !centralizer_test(tneg, a),
                 "T_diag(2,1) ∈ C(a), T_diag(1,2) ∉ C(a)");
    }
    return r;
}

// --- modules: the finite-module library --------------------------------------

SuiteResult suite_modules(const SuiteParams& params) {
    (void)params;
    SuiteResult r{"modules", {}};
    ParabolicDatum d = make_datum(2, {1, 1});
    GroupElement a = diag_vals(d, {2, 1});
    GroupElement b2 = diag_vals(d, {4, 2});
    GroupElement binv = diag_powers(d, {-1, 0}); // a^{-1}
    GroupElement gb = diag_vals(d, {1, 2});
    GroupElement gab = diag_vals(d, {2, 2});

    auto lib = builtin_module_library();
    add_case(r, "library-size", lib.size() >= 10, std::to_string(lib.size()) + " hand-built specs");

    for (const auto& [name, spec] : lib) {
        ConsistencyReport cons = check_consistency(spec);
        add_case(r, name + "-consistent", cons.consistent,
                 cons.consistent ? std::to_string(cons.products_checked) + " products checked, " + std::to_string(cons.products_skipped) + " outside the span"
                                 : cons.violations.front());
        bool indep = radical_independence(spec, a, b2);
        add_case(r, name + "-radical-independent", indep,
                 indep ? "Rad agrees for a=diag(2,1) and b=diag(4,2)" : "alarm: Rad depends on the element (presentation is not a module)");
        bool sub = radical_submodule_check(spec, a);
        add_case(r, name + "-radical-submodule", sub, sub ? "all assigned actions preserve Rad" : "Rad is not invariant");

        CoefRing ring = spec.ring();
        std::vector<Element> ys;
        ys.push_back(hecke_T(identity_element(d), PairTag::MGammaM, ring));
        ys.push_back(hecke_T(binv, PairTag::MGammaM, ring));
        ys.push_back(hecke_T(gb, PairTag::MGammaM, ring));
        ys.push_back(hecke_T(a, PairTag::MGammaM, ring));
        ys.push_back(hecke_T(gab, PairTag::MGammaM, ring));

        bool descent = descent_test(spec);
        if (descent) {
            bool ok = true;
            std::string why;
            try {
                ModMat id = induce_levi_action(spec, ys[0]);
                if (id != ModMat::identity(spec.dim, spec.modulus)) {
                    ok = false;
                    why = "induced action of T^M_1 is not the identity";
                }
                ModMat ainv = induce_levi_action(spec, ys[1]);
                if (ainv != spec.action_of(a).inverse()) {
                    ok = false;
                    why = "induced action of T^M_(a^-1) is not ρ(T_a)^{-1}";
                }
                int mult_checked = 0;
                for (size_t i = 0; i < ys.size() && ok; ++i)
                    for (size_t j = 0; j < ys.size() && ok; ++j) {
                        ModMat mi = induce_levi_action(spec, ys[i]);
                        ModMat mj = induce_levi_action(spec, ys[j]);
                        try {
                            ModMat mij = induce_levi_action(spec, hecke_mul(ys[i], ys[j]));
                            ++mult_checked;
                            if (mij != mi * mj) {
                                ok = false;
                                why = "induced action is not multiplicative";
                            }
                        } catch (const DomainError&) {
                            // product left the expressible span; allowed
                        }
                    }
                if (ok) why = "induced action defined and multiplicative on " + std::to_string(mult_checked) + " expressible pairs";
            } catch (const DomainError& e) {
                ok = false;
                why = e.what();
            }
            add_case(r, name + "-induced-action", ok, why);
        } else {
            bool threw = false;
            try {
                induce_levi_action(spec, ys[0]);
            } catch (const DomainError&) {
                threw = true;
            }
            add_case(r, name + "-descent-blocks-induction", threw,
                     threw ? "T_a not invertible: induce_levi_action rejects as required" : "induction unexpectedly succeeded");
        }

        // essential image: samples in Ker Θ
        std::vector<Element> samples;
        samples.push_back(zero_element(PairTag::PGamma, ring, d));
        samples.push_back(hecke_T(gb, PairTag::PGamma, ring));
        {
            Mat dm(2, 2);
            dm.at(0, 0) = Scalar(2, 2);
            dm.at(0, 1) = Scalar(1, 2);
            dm.at(1, 1) = Scalar(2, 2);
            GroupElement de(d, std::move(dm));
            samples.push_back(hecke_T(gab, PairTag::PGamma, ring) - hecke_T(de, PairTag::PGamma, ring));
        }
        EssentialImageReport rep = essential_image_check(spec, samples);
        Subspace rad = radical(spec, a);
        if (rad.is_zero()) {
            int passes = 0;
            for (const auto& o : rep.outcomes)
                if (o.status == SampleOutcome::Status::pass) ++passes;
            add_case(r, name + "-essential-image", rep.applicable && rep.all_pass() && passes >= 1,
                     "kernel samples annihilate the module (" + std::to_string(passes) + " checked)");
        } else {
            add_case(r, name + "-essential-image", !rep.applicable, "radical nonzero: check reported not-applicable");
        }
    }
    return r;
}

} // namespace

std::vector<std::string> suite_names() {
    return {"cosets", "ring", "example", "kernel", "localization", "centralizer", "modules"};
}

SuiteResult run_suite(const std::string& name, const SuiteParams& params) {
    if (name == "cosets") return suite_cosets(params);
    if (name == "ring") return suite_ring(params);
    if (name == "example") return suite_example(params);
    if (name == "kernel") return suite_kernel(params);
    if (name == "localization") return suite_localization(params);
    if (name == "centralizer") return suite_centralizer(params);
    if (name == "modules") return suite_modules(params);
    throw DomainError("unknown suite '" + name + "'");
}

} // namespace hecke
