// parahecke — exact computations in parabolic Hecke algebras H(Γ,P) for
// block upper-triangular parabolics of GL_n over Q_p, with the Levi
// localization map Θ and finite-module analysis.
//
// stdout carries the deterministic report; timing goes to stderr so that
// identical-seed runs are byte-identical.

#include <chrono>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "hecke/session.hpp"

namespace {

using namespace hecke;

struct Cli {
    std::string p = "2";
    std::string blocks = "1,1";
    std::string flavor = "iwahori";
    std::string coeff = "z";
    std::uint64_t seed = 7;
    std::uint64_t orbit_cap = default_orbit_cap;
    int val_bound = 2;

    SessionConfig config() const {
        SessionConfig cfg;
        cfg.datum = ParabolicDatum::parse_header("p=" + p + " blocks=" + blocks + " flavor=" + flavor);
        cfg.ring = CoefRing::parse(coeff);
        cfg.seed = seed;
        cfg.orbit_cap = orbit_cap;
        cfg.val_bound = val_bound;
        cfg.validate();
        return cfg;
    }
};

PairTag parse_pair(const std::string& s) {
    if (s == "p" || s == "P") return PairTag::PGamma;
    if (s == "m" || s == "M") return PairTag::MGammaM;
    throw ParseError("pair: expected 'p' or 'm', got '" + s + "'");
}

GroupElement parse_group_element(const SessionConfig& cfg, const std::string& text) {
    return GroupElement(cfg.datum, Mat::parse(text, cfg.datum.p, cfg.datum.n()));
}

GroupElement anchor_or_default(const SessionConfig& cfg, const std::string& text) {
    if (text.empty()) return canonical_strictly_positive(cfg.datum);
    GroupElement a = parse_group_element(cfg, text);
    if (!is_strictly_positive(a)) throw DomainError("--a is not strictly positive");
    return a;
}

void print_counters() {
    std::cout << "counters cosets=" << counters().cosets_enumerated
              << " eq-tests=" << counters().eq_tests << "\n";
}

int run_verify(const SessionConfig& cfg, const std::string& suite) {
    SuiteParams params{cfg.seed, cfg.orbit_cap};
    std::vector<std::string> names = suite == "all" ? suite_names() : std::vector<std::string>{suite};
    bool all_pass = true;
    for (const std::string& name : names) {
        SuiteResult res = run_suite(name, params);
        for (const PropertyCase& c : res.cases) {
            std::cout << "prop " << res.name << "." << c.name << " " << (c.pass ? "PASS" : "FAIL")
                      << " " << c.detail << "\n";
            all_pass = all_pass && c.pass;
        }
    }
    std::cout << "result " << (all_pass ? "pass" : "fail") << "\n";
    print_counters();
    std::cout << "status " << (all_pass ? "ok" : "property-failure") << "\n";
    return all_pass ? 0 : 5;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact parabolic Hecke algebra calculator"};
    app.require_subcommand(1);

    Cli cli;
    app.add_option("--p", cli.p, "session prime (2, 3, 5, 7)");
    app.add_option("--blocks", cli.blocks, "block sizes, e.g. 1,1 or 2,1");
    app.add_option("--flavor", cli.flavor, "iwahori | pro-p");
    app.add_option("--coeff", cli.coeff, "coefficient ring: z | mod:m");
    app.add_option("--seed", cli.seed, "RNG seed");
    app.add_option("--orbit-cap", cli.orbit_cap, "max right cosets per decomposition");
    app.add_option("--val-bound", cli.val_bound, "valuation bound for random elements");

    std::string g_text, x_text, y_text, a_text, pair_text = "p", suite = "all", file, elem_dump_flag;
    int bound = 1;
    std::vector<std::string> y_list;

    CLI::App* describe = app.add_subcommand("describe", "print the session's group data");
    CLI::App* decompose = app.add_subcommand("decompose", "decompose ΓgΓ into right cosets");
    decompose->add_option("--g", g_text, "matrix, e.g. [[1,0],[0,2]]")->required();
    decompose->add_option("--pair", pair_text, "p (default) or m");
    bool dump = false;
    CLI::App* mul = app.add_subcommand("mul", "convolution product of two elements");
    mul->add_option("--x", x_text)->required();
    mul->add_option("--y", y_text)->required();
    mul->add_option("--pair", pair_text);
    mul->add_flag("--dump", dump, "also print the cosetwise form");
    CLI::App* theta_cmd = app.add_subcommand("theta", "apply Θ^P_M");
    theta_cmd->add_option("--x", x_text)->required();
    CLI::App* cent = app.add_subcommand("centralizer-test", "test X ∈ C(a)");
    cent->add_option("--x", x_text)->required();
    cent->add_option("--a", a_text, "strictly positive element (default: block scalar template)");
    CLI::App* shift = app.add_subcommand("shift", "minimal n with T_a^n·X ∈ C(a)");
    shift->add_option("--x", x_text)->required();
    shift->add_option("--a", a_text);
    CLI::App* fraction = app.add_subcommand("fraction", "write Y as Θ(T_a)^{-n}·Θ(X)");
    fraction->add_option("--y", y_text)->required();
    fraction->add_option("--a", a_text);
    CLI::App* kernel = app.add_subcommand("kernel-test", "radical witness for X");
    kernel->add_option("--x", x_text)->required();
    kernel->add_option("--a", a_text);
    CLI::App* span = app.add_subcommand("image-span", "Θ-image generating family and elementary divisors");
    span->add_option("--bound", bound, "valuation bound (default 1)");
    CLI::App* module_cmd = app.add_subcommand("module", "finite module analysis");
    CLI::App* analyze = module_cmd->add_subcommand("analyze", "analyze a module spec file");
    analyze->add_option("file", file, "module spec file")->required();
    analyze->add_option("--y", y_list, "M-side element(s) whose induced action to print");
    CLI::App* verify = app.add_subcommand("verify", "run the property suites");
    verify->add_option("--suite", suite, "suite name or 'all'");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2; // command-line parse problems share the parse exit code
    }

    auto started = std::chrono::steady_clock::now();
    int code = 0;
    try {
        SessionConfig cfg = cli.config();
        std::cout << cfg.header() << "\n";
        counters().reset();

        if (*describe) {
            std::cout << "command describe\n";
            std::cout << "n " << cfg.datum.n() << "\n";
            std::cout << "strictly-positive-template " << canonical_strictly_positive(cfg.datum).mat().str() << "\n";
            auto units = cfg.datum.flavor == Flavor::pro_p ? principal_unit_generators(cfg.datum.p, 3)
                                                           : unit_group_generators(cfg.datum.p, 3);
            std::cout << "unit-generators-mod-p^3";
            for (const Residue& u : units) std::cout << " " << u.value;
            std::cout << "\n";
            for (const GroupElement& g : gamma_generators(cfg.datum, 3))
                std::cout << "gamma-generator " << g.mat().str() << "\n";
            std::cout << "status ok\n";
        } else if (*decompose) {
            std::cout << "command decompose\n";
            PairTag tag = parse_pair(pair_text);
            GroupElement g = parse_group_element(cfg, g_text);
            DoubleCosetDecomposition dec = decompose_double_coset(g, tag, cfg.orbit_cap);
            std::cout << "coset-count " << dec.cosets.size() << "\n";
            for (const RightCoset& c : dec.cosets) std::cout << "coset " << c.rep().mat().str() << "\n";
            print_counters();
            std::cout << "status ok\n";
        } else if (*mul) {
            std::cout << "command mul\n";
            PairTag tag = parse_pair(pair_text);
            Element x = parse_element(x_text, tag, cfg.ring, cfg.datum, cfg.orbit_cap);
            Element y = parse_element(y_text, tag, cfg.ring, cfg.datum, cfg.orbit_cap);
            Element product = hecke_mul(x, y);
            std::cout << "result " << element_str(product) << "\n";
            if (dump) std::cout << element_dump(product);
            print_counters();
            std::cout << "status ok\n";
        } else if (*theta_cmd) {
            std::cout << "command theta\n";
            Element x = parse_element(x_text, PairTag::PGamma, cfg.ring, cfg.datum, cfg.orbit_cap);
            std::cout << "result " << element_str(theta(x)) << "\n";
            print_counters();
            std::cout << "status ok\n";
        } else if (*cent) {
            std::cout << "command centralizer-test\n";
            Element x = parse_element(x_text, PairTag::PGamma, cfg.ring, cfg.datum, cfg.orbit_cap);
            bool in = centralizer_test(x, anchor_or_default(cfg, a_text));
            std::cout << "result " << (in ? "true" : "false") << "\n";
            print_counters();
            std::cout << "status ok\n";
        } else if (*shift) {
            std::cout << "command shift\n";
            Element x = parse_element(x_text, PairTag::PGamma, cfg.ring, cfg.datum, cfg.orbit_cap);
            auto [n, y] = power_shift(x, anchor_or_default(cfg, a_text));
            std::cout << "exponent " << n << "\n";
            std::cout << "result " << element_str(y) << "\n";
            print_counters();
            std::cout << "status ok\n";
        } else if (*fraction) {
            std::cout << "command fraction\n";
            Element y = parse_element(y_text, PairTag::MGammaM, cfg.ring, cfg.datum, cfg.orbit_cap);
            LocalizationWitness w = fraction_decompose(y, anchor_or_default(cfg, a_text));
            std::cout << "exponent " << w.exponent << "\n";
            std::cout << "numerator " << element_str(w.numerator) << "\n";
            print_counters();
            std::cout << "status ok\n";
        } else if (*kernel) {
            std::cout << "command kernel-test\n";
            Element x = parse_element(x_text, PairTag::PGamma, cfg.ring, cfg.datum, cfg.orbit_cap);
            RadicalWitness w = kernel_test(x, anchor_or_default(cfg, a_text));
            if (w.exponent)
                std::cout << "witness " << *w.exponent << "\n";
            else
                std::cout << "witness none\n";
            std::cout << "theta-zero " << (theta(x).is_zero() ? "true" : "false") << "\n";
            print_counters();
            std::cout << "status ok\n";
        } else if (*span) {
            std::cout << "command image-span\n";
            ImageSpanReport rep = image_span_report(cfg.datum, bound, cfg.orbit_cap);
            std::cout << "family-size " << rep.family.bases.size() << "\n";
            for (size_t i = 0; i < rep.family.bases.size(); ++i)
                std::cout << "member base " << rep.family.bases[i].mat().str() << " image "
                          << element_str(rep.family.images[i]) << "\n";
            std::cout << "elementary-divisors";
            for (const mpz_class& v : rep.elementary_divisors) std::cout << " " << v.get_str();
            std::cout << "\n";
            if (cfg.ring.kind == CoefRing::Kind::Mod) {
                bool obstructed = false;
                for (const mpz_class& v : rep.elementary_divisors) {
                    mpz_class g;
                    mpz_gcd(g.get_mpz_t(), v.get_mpz_t(), cfg.ring.modulus.get_mpz_t());
                    if (v != 1 && g > 1) obstructed = true;
                }
                std::cout << "theta-injectivity-at-bound "
                          << (obstructed ? "torsion-obstruction-found" : "no-obstruction-at-this-bound") << "\n";
            }
            print_counters();
            std::cout << "status ok\n";
        } else if (*module_cmd) {
            std::cout << "command module analyze\n";
            std::ifstream in(file);
            if (!in) throw ParseError("cannot open module spec file '" + file + "'");
            ModuleSpec spec = parse_module_spec(in, file);
            ConsistencyReport cons = check_consistency(spec);
            std::cout << "consistent " << (cons.consistent ? "true" : "false") << "\n";
            for (const std::string& v : cons.violations) std::cout << "violation " << v << "\n";
            std::cout << "products-checked " << cons.products_checked << " skipped " << cons.products_skipped << "\n";
            Subspace rad = radical(spec, *spec.anchor);
            // over a prime modulus the generator count is the dimension
            std::cout << "radical-dim " << rad.generator_count() << " span-size " << rad.span_size().get_str() << "\n";
            bool desc = descent_test(spec);
            std::cout << "descent " << (desc ? "true" : "false") << "\n";
            for (const std::string& ytext : y_list) {
                Element y = parse_element(ytext, PairTag::MGammaM, spec.ring(), spec.datum, cfg.orbit_cap);
                try {
                    ModMat act = induce_levi_action(spec, y);
                    std::cout << "induced " << ytext << " -> " << act.str() << "\n";
                } catch (const DomainError& e) {
                    std::cout << "induced " << ytext << " -> error: " << e.what() << "\n";
                }
            }
            print_counters();
            std::cout << "status ok\n";
        } else if (*verify) {
            std::cout << "command verify --suite " << suite << " --seed " << cfg.seed << "\n";
            code = run_verify(cfg, suite);
        }
    } catch (const ParseError& e) {
        std::cout << "error parse: " << e.what() << "\n";
        code = 2;
    } catch (const DomainError& e) {
        std::cout << "error domain: " << e.what() << "\n";
        code = 3;
    } catch (const ResourceError& e) {
        std::cout << "error resource: " << e.what() << "\n";
        code = 4;
    } catch (const InternalError& e) {
        std::cout << "error internal: " << e.what() << "\n";
        code = 1;
    }
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - started);
    std::cerr << "elapsed-ms " << elapsed.count() << "\n";
    return code;
}
