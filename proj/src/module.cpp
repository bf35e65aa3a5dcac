#include "hecke/module.hpp"

#include <istream>
#include <sstream>

namespace hecke {

mpz_class Subspace::span_size() const {
    mpz_class size = 1;
    mpz_class m = static_cast<unsigned long>(basis.modulus());
    for (size_t i = 0; i < basis.rows(); ++i) {
        size_t j = 0;
        while (j < basis.cols() && basis.at(i, j) == 0) ++j;
        if (j == basis.cols()) continue;
        size *= m / static_cast<unsigned long>(basis.at(i, j));
    }
    return size;
}

bool Subspace::is_full(int dim) const {
    mpz_class m = static_cast<unsigned long>(basis.modulus());
    mpz_class full;
    mpz_pow_ui(full.get_mpz_t(), m.get_mpz_t(), static_cast<unsigned long>(dim));
    return span_size() == full;
}

const ModuleSpec::Assignment& ModuleSpec::find(const std::string& label) const {
    for (const Assignment& a : assignments)
        if (a.label == label) return a;
    throw DomainError("module spec: no assignment labeled '" + label + "'");
}

const ModMat& ModuleSpec::action_of(const GroupElement& g) const {
    Element t = hecke_T(g, PairTag::PGamma, ring());
    for (const Assignment& a : assignments)
        if (a.element == t) return a.action;
    throw DomainError("module spec: T[" + g.mat().str() + "] is not assigned");
}

// ---------------------------------------------------------------------------
// file format

namespace {

std::string matrix_text(const ModMat& m) {
    if (m.rows() == 0) return "[]";
    return m.str();
}

ModMat parse_action(const std::string& text, std::uint64_t mod, int dim, const std::string& where) {
    if (dim == 0) {
        if (text != "[]") throw ParseError(where + ": zero-dimensional matrix must be []");
        return ModMat(0, 0, mod);
    }
    ModMat m = ModMat::parse(text, mod, dim);
    if (m.rows() != static_cast<size_t>(dim) || m.cols() != static_cast<size_t>(dim))
        throw ParseError(where + ": matrix is not " + std::to_string(dim) + "x" + std::to_string(dim));
    return m;
}

} // namespace

ModuleSpec parse_module_spec(std::istream& in, const std::string& source_name) {
    ModuleSpec spec;
    bool have_datum = false, have_modulus = false, have_dim = false;
    std::string line;
    int lineno = 0;
    auto fail = [&](const std::string& msg) -> void {
        throw ParseError(source_name + ":" + std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(in, line)) {
        ++lineno;
        size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos) continue;
        if (line[start] == '#') continue;
        std::istringstream ls(line);
        std::string kw;
        ls >> kw;
        if (kw == "datum") {
            std::string rest;
            std::getline(ls, rest);
            spec.datum = ParabolicDatum::parse_header(rest);
            have_datum = true;
        } else if (kw == "modulus") {
            long m = -1;
            ls >> m;
            if (m < 2) fail("modulus must be >= 2");
            spec.modulus = static_cast<std::uint64_t>(m);
            have_modulus = true;
        } else if (kw == "dim") {
            int d = -1;
            ls >> d;
            if (d < 0 || d > 16) fail("dim must be in [0,16]");
            spec.dim = d;
            have_dim = true;
        } else if (kw == "assign") {
            if (!have_datum || !have_modulus || !have_dim) fail("assign before datum/modulus/dim");
            std::string label, elem_kw;
            ls >> label >> elem_kw;
            if (elem_kw != "element") fail("expected 'element' after label");
            std::string rest;
            std::getline(ls, rest);
            size_t mk = rest.rfind(" matrix ");
            if (mk == std::string::npos) fail("expected ' matrix ' separator");
            std::string elem_text = rest.substr(0, mk);
            std::string mat_text = rest.substr(mk + 8);
            while (!mat_text.empty() && std::isspace(static_cast<unsigned char>(mat_text.back()))) mat_text.pop_back();
            Element e = parse_element(elem_text, PairTag::PGamma, spec.ring(), spec.datum);
            ModMat act = parse_action(mat_text, spec.modulus, spec.dim, source_name + ":" + std::to_string(lineno));
            for (const auto& a : spec.assignments)
                if (a.label == label) fail("duplicate label '" + label + "'");
            spec.assignments.push_back(ModuleSpec::Assignment{label, std::move(e), std::move(act)});
        } else if (kw == "anchor") {
            if (!have_datum) fail("anchor before datum");
            std::string label, rest;
            ls >> label;
            std::getline(ls, rest);
            size_t s = rest.find_first_not_of(" \t");
            if (s == std::string::npos) fail("anchor needs the strictly positive matrix");
            GroupElement a(spec.datum, Mat::parse(rest.substr(s), spec.datum.p, spec.datum.n()));
            if (!is_strictly_positive(a)) fail("anchor element is not strictly positive");
            spec.anchor_label = label;
            spec.anchor = std::move(a);
        } else {
            fail("unknown keyword '" + kw + "'");
        }
    }
    if (!have_datum || !have_modulus || !have_dim) throw ParseError(source_name + ": incomplete spec (datum/modulus/dim required)");
    if (!spec.anchor) throw ParseError(source_name + ": missing anchor line");
    const ModuleSpec::Assignment& anchor_assign = spec.find(spec.anchor_label);
    if (!(anchor_assign.element == hecke_T(*spec.anchor, PairTag::PGamma, spec.ring())))
        throw ParseError(source_name + ": anchor assignment does not equal T[a]");
    return spec;
}

ModuleSpec parse_module_spec_text(const std::string& text) {
    std::istringstream is(text);
    return parse_module_spec(is);
}

std::string module_spec_text(const ModuleSpec& spec) {
    std::ostringstream os;
    os << "datum " << spec.datum.header() << "\n";
    os << "modulus " << spec.modulus << "\n";
    os << "dim " << spec.dim << "\n";
    for (const auto& a : spec.assignments)
        os << "assign " << a.label << " element " << element_str(a.element) << " matrix " << matrix_text(a.action) << "\n";
    os << "anchor " << spec.anchor_label << " " << spec.anchor->mat().str() << "\n";
    return os.str();
}

// ---------------------------------------------------------------------------
// T-basis coordinates of elements relative to a growing double-coset list

namespace {

class TCoordSpace {
  public:
    explicit TCoordSpace(PairTag tag) : tag_(tag) {}

    size_t index_of(const GroupElement& rep) {
        for (size_t i = 0; i < decs_.size(); ++i)
            if (decomposition_contains(decs_[i], rep)) return i;
        decs_.push_back(decompose_double_coset(rep, tag_));
        return decs_.size() - 1;
    }

    std::vector<mpz_class> coords(const Element& e) {
        std::vector<mpz_class> out(decs_.size(), 0);
        for (const auto& [coef, rep] : to_T_basis(e)) {
            size_t i = index_of(rep);
            if (i >= out.size()) out.resize(i + 1, 0);
            out[i] = coef;
        }
        return out;
    }

    size_t size() const { return decs_.size(); }

  private:
    PairTag tag_;
    std::vector<DoubleCosetDecomposition> decs_;
};

// Expresses target = Σ y_l · assignment_l in T-coordinates over Z/m.
std::optional<std::vector<std::uint64_t>> express_in_assignments(const ModuleSpec& spec,
                                                                 const Element& target) {
    TCoordSpace space(PairTag::PGamma);
    std::vector<std::vector<mpz_class>> rows;
    for (const auto& a : spec.assignments) rows.push_back(space.coords(a.element));
    std::vector<mpz_class> t = space.coords(target);
    size_t cols = space.size();
    for (auto& r : rows) r.resize(cols, 0);
    t.resize(cols, 0);
    // solve Cᵀ·y = t over Z/m
    ModMat ct(cols, rows.size(), spec.modulus);
    mpz_class m = static_cast<unsigned long>(spec.modulus);
    auto to_u = [&](const mpz_class& v) {
        mpz_class r;
        mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
        return r.get_ui();
    };
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < cols; ++j) ct.at(j, i) = to_u(rows[i][j]);
    std::vector<std::uint64_t> rhs(cols);
    for (size_t j = 0; j < cols; ++j) rhs[j] = to_u(t[j]);
    return solve_mod(ct, rhs);
}

ModMat combine_actions(const ModuleSpec& spec, const std::vector<std::uint64_t>& y) {
    ModMat s(spec.dim, spec.dim, spec.modulus);
    for (size_t l = 0; l < spec.assignments.size(); ++l)
        s = s + spec.assignments[l].action.scaled(y[l]);
    return s;
}

// Generators of {y : Σ y_l·assignment_l = 0} in T-coordinates.
ModMat assignment_relations(const ModuleSpec& spec) {
    TCoordSpace space(PairTag::PGamma);
    std::vector<std::vector<mpz_class>> rows;
    for (const auto& a : spec.assignments) rows.push_back(space.coords(a.element));
    size_t cols = space.size();
    ModMat ct(cols, rows.size(), spec.modulus);
    mpz_class m = static_cast<unsigned long>(spec.modulus);
    for (size_t i = 0; i < rows.size(); ++i) {
        rows[i].resize(cols, 0);
        for (size_t j = 0; j < cols; ++j) {
            mpz_class r;
            mpz_fdiv_r(r.get_mpz_t(), rows[i][j].get_mpz_t(), m.get_mpz_t());
            ct.at(j, i) = r.get_ui();
        }
    }
    return kernel_mod(ct);
}

} // namespace

ConsistencyReport check_consistency(const ModuleSpec& spec) {
    ConsistencyReport rep;
    auto violate = [&rep](const std::string& v) {
        rep.consistent = false;
        rep.violations.push_back(v);
    };
    // T_1 ↦ identity must be present
    Element t1 = hecke_T(identity_element(spec.datum), PairTag::PGamma, spec.ring());
    bool have_unit = false;
    for (const auto& a : spec.assignments)
        if (a.element == t1) {
            have_unit = true;
            if (a.action != ModMat::identity(spec.dim, spec.modulus))
                violate("assignment '" + a.label + "' is T_1 but its matrix is not the identity");
        }
    if (!have_unit) violate("no assignment for T_1");
    if (spec.anchor && !is_strictly_positive(*spec.anchor)) violate("anchor is not strictly positive");

    // linear relations among assigned elements must hold for the matrices
    ModMat rels = assignment_relations(spec);
    for (size_t r = 0; r < rels.rows(); ++r) {
        std::vector<std::uint64_t> y(rels.cols());
        for (size_t l = 0; l < rels.cols(); ++l) y[l] = rels.at(r, l);
        if (!combine_actions(spec, y).is_zero())
            violate("matrices break a linear relation among assigned elements");
    }

    // pairwise products that stay inside the assigned span
    for (const auto& ai : spec.assignments)
        for (const auto& aj : spec.assignments) {
            Element prod = hecke_mul(ai.element, aj.element);
            auto y = express_in_assignments(spec, prod);
            if (!y) {
                ++rep.products_skipped;
                continue;
            }
            ++rep.products_checked;
            if (ai.action * aj.action != combine_actions(spec, *y))
                violate("product " + ai.label + "*" + aj.label + " disagrees with the assigned matrices");
        }
    return rep;
}

Subspace radical(const ModuleSpec& spec, const GroupElement& a) {
    if (!is_strictly_positive(a)) throw DomainError("radical: a is not strictly positive");
    const ModMat& act = spec.action_of(a);
    if (spec.dim == 0) return Subspace{ModMat(0, 0, spec.modulus)};
    ModMat pow = act;
    Subspace prev{kernel_mod(pow)};
    long cap = spec.dim * 64 + 2;
    for (long i = 0; i < cap; ++i) {
        pow = pow * act;
        Subspace next{kernel_mod(pow)};
        if (next == prev) return prev;
        prev = std::move(next);
    }
    throw InternalError("radical: kernel chain failed to stabilize");
}

bool radical_independence(const ModuleSpec& spec, const GroupElement& a, const GroupElement& b) {
    return radical(spec, a) == radical(spec, b);
}

bool radical_submodule_check(const ModuleSpec& spec, const GroupElement& a) {
    Subspace rad = radical(spec, a);
    for (const auto& assign : spec.assignments)
        for (size_t r = 0; r < rad.basis.rows(); ++r) {
            std::vector<std::uint64_t> v(rad.basis.cols());
            for (size_t j = 0; j < rad.basis.cols(); ++j) v[j] = rad.basis.at(r, j);
            // image of the generator under the action
            std::vector<std::uint64_t> w(spec.dim, 0);
            for (int i = 0; i < spec.dim; ++i) {
                unsigned __int128 acc = 0;
                for (int j = 0; j < spec.dim; ++j)
                    acc += static_cast<unsigned __int128>(assign.action.at(i, j)) * v[j];
                w[i] = static_cast<std::uint64_t>(acc % spec.modulus);
            }
            if (!rad.contains(w)) return false;
        }
    return true;
}

bool descent_test(const ModuleSpec& spec, const GroupElement& a) {
    return spec.action_of(a).det_is_unit();
}

bool descent_test(const ModuleSpec& spec) {
    if (!spec.anchor) throw DomainError("descent_test: spec has no anchor");
    return descent_test(spec, *spec.anchor);
}

ModMat induce_levi_action(const ModuleSpec& spec, const Element& y) {
    if (!spec.anchor) throw DomainError("induce_levi_action: spec has no anchor");
    const GroupElement& a = *spec.anchor;
    if (y.tag() != PairTag::MGammaM) throw DomainError("induce_levi_action: Y must live over (M,Γ_M)");
    if (!(y.ring() == spec.ring())) throw DomainError("induce_levi_action: coefficient ring mismatch");
    if (!descent_test(spec, a)) throw DomainError("induce_levi_action: T_a does not act invertibly");

    // relations among assigned elements must act as zero, otherwise the
    // expression below would depend on the particular solution
    ModMat rels = assignment_relations(spec);
    for (size_t r = 0; r < rels.rows(); ++r) {
        std::vector<std::uint64_t> k(rels.cols());
        for (size_t l = 0; l < rels.cols(); ++l) k[l] = rels.at(r, l);
        if (!combine_actions(spec, k).is_zero())
            throw DomainError("induce_levi_action: non-module alarm (assigned matrices break a relation)");
    }

    LocalizationWitness w = fraction_decompose(y, a);
    auto coords = express_in_assignments(spec, w.numerator);
    if (!coords)
        throw DomainError("induce_levi_action: numerator T[" + element_str(w.numerator) + "] is not expressible in assigned elements (spec too small)");
    ModMat inv = spec.action_of(a).inverse();
    ModMat result = inv.pow(static_cast<unsigned>(w.exponent)) * combine_actions(spec, *coords);

    // well-definedness: recompute at exponent n+1
    Element shifted = hecke_mul(hecke_T(a, PairTag::MGammaM, y.ring()), theta(w.numerator));
    Element x2 = levi_lift(shifted, a);
    auto coords2 = express_in_assignments(spec, x2);
    if (coords2) {
        ModMat result2 = inv.pow(static_cast<unsigned>(w.exponent) + 1) * combine_actions(spec, *coords2);
        if (result != result2)
            throw DomainError("induce_levi_action: non-module alarm (exponents n and n+1 disagree)");
    }
    return result;
}

bool EssentialImageReport::all_pass() const {
    for (const SampleOutcome& o : outcomes)
        if (o.status == SampleOutcome::Status::fail) return false;
    return true;
}

EssentialImageReport essential_image_check(const ModuleSpec& spec, const std::vector<Element>& samples) {
    EssentialImageReport rep;
    if (!spec.anchor) throw DomainError("essential_image_check: spec has no anchor");
    Subspace rad = radical(spec, *spec.anchor);
    rep.applicable = rad.is_zero();
    for (const Element& x : samples) {
        if (!rep.applicable) {
            rep.outcomes.push_back({SampleOutcome::Status::not_applicable, "radical is nonzero"});
            continue;
        }
        RadicalWitness w = kernel_test(x, *spec.anchor);
        if (!w.exponent) {
            rep.outcomes.push_back({SampleOutcome::Status::no_witness, "sample is not in Ker Θ"});
            continue;
        }
        auto coords = express_in_assignments(spec, x);
        if (!coords) {
            rep.outcomes.push_back({SampleOutcome::Status::inexpressible, "sample not in the assigned span"});
            continue;
        }
        bool ok = combine_actions(spec, *coords).is_zero();
        rep.outcomes.push_back({ok ? SampleOutcome::Status::pass : SampleOutcome::Status::fail,
                                ok ? "annihilates the module" : "does not annihilate the module"});
    }
    return rep;
}

const char* sample_status_name(SampleOutcome::Status s) {
    switch (s) {
        case SampleOutcome::Status::pass: return "pass";
        case SampleOutcome::Status::fail: return "fail";
        case SampleOutcome::Status::inexpressible: return "inexpressible";
        case SampleOutcome::Status::no_witness: return "no-witness";
        case SampleOutcome::Status::not_applicable: return "not-applicable";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// built-in library

namespace {

GroupElement diag2(const ParabolicDatum& d, long x, long y) {
    Mat m(2, d.p);
    m.at(0, 0) = Scalar(x, d.p);
    m.at(1, 1) = Scalar(y, d.p);
    return GroupElement(d, std::move(m));
}

// The six standard assigned elements for p=2, blocks (1,1):
// T_1, T_(2,1), T_(1,2), T_(2,2), T_[[2,1],[0,2]], T_(4,2).
struct StandardElements {
    ParabolicDatum datum;
    GroupElement e, a, b, ab, d, a2b;
};

StandardElements standard_elements() {
    ParabolicDatum dat{2, {1, 1}, Flavor::iwahori};
    Mat dm(2, 2);
    dm.at(0, 0) = Scalar(2, 2);
    dm.at(0, 1) = Scalar(1, 2);
    dm.at(1, 1) = Scalar(2, 2);
    return StandardElements{dat,
                            identity_element(dat),
                            diag2(dat, 2, 1),
                            diag2(dat, 1, 2),
                            diag2(dat, 2, 2),
                            GroupElement(dat, std::move(dm)),
                            diag2(dat, 4, 2)};
}

ModuleSpec make_spec(std::uint64_t m, const ModMat& rho1, const ModMat& rho_a, const ModMat& rho_b,
                     const ModMat& rho_ab, const ModMat& rho_d, const ModMat& rho_a2b) {
    StandardElements se = standard_elements();
    ModuleSpec spec;
    spec.modulus = m;
    spec.dim = static_cast<int>(rho1.rows());
    spec.datum = se.datum;
    CoefRing ring = spec.ring();
    auto put = [&](const char* label, const GroupElement& g, const ModMat& act) {
        spec.assignments.push_back({label, hecke_T(g, PairTag::PGamma, ring), act});
    };
    put("T1", se.e, rho1);
    put("Ta", se.a, rho_a);
    put("Tb", se.b, rho_b);
    put("Tab", se.ab, rho_ab);
    put("TD", se.d, rho_d);
    put("Ta2b", se.a2b, rho_a2b);
    spec.anchor_label = "Ta";
    spec.anchor = se.a;
    return spec;
}

// Pullback along Θ of the H(M)-module with commuting invertible matrices
// (A, B) acting as T^M_(2,1) and T^M_(1,2):
// Ta ↦ A, Tb ↦ 2B, Tab ↦ AB, TD ↦ AB, Ta2b ↦ A²B.
ModuleSpec pullback_spec(std::uint64_t m, const ModMat& A, const ModMat& B) {
    size_t d = A.rows();
    ModMat AB = A * B;
    return make_spec(m, ModMat::identity(d, m), A, B.scaled(2), AB, AB, A * AB);
}

ModMat mm(std::uint64_t m, std::vector<std::vector<std::uint64_t>> rows) {
    ModMat out(rows.size(), rows.empty() ? 0 : rows[0].size(), m);
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows[i].size(); ++j) out.at(i, j) = rows[i][j] % m;
    return out;
}

} // namespace

std::vector<std::pair<std::string, ModuleSpec>> builtin_module_library() {
    std::vector<std::pair<std::string, ModuleSpec>> lib;
    // pullbacks: invertible commuting pairs (radical 0, descent true)
    lib.emplace_back("m2-d1-trivial", pullback_spec(2, mm(2, {{1}}), mm(2, {{1}})));
    lib.emplace_back("m3-d1-char", pullback_spec(3, mm(3, {{2}}), mm(3, {{1}})));
    lib.emplace_back("m3-d1-char2", pullback_spec(3, mm(3, {{1}}), mm(3, {{2}})));
    lib.emplace_back("m2-d2-unipotent", pullback_spec(2, mm(2, {{1, 1}, {0, 1}}), ModMat::identity(2, 2)));
    lib.emplace_back("m3-d2-jordan", pullback_spec(3, mm(3, {{1, 1}, {0, 1}}), mm(3, {{2, 0}, {0, 2}})));
    {
        ModMat A = mm(2, {{0, 1, 0}, {0, 0, 1}, {1, 0, 0}});
        lib.emplace_back("m2-d3-cycle", pullback_spec(2, A, A * A));
    }
    lib.emplace_back("m3-d3-diag", pullback_spec(3, mm(3, {{1, 0, 0}, {0, 2, 0}, {0, 0, 2}}),
                                                 mm(3, {{2, 0, 0}, {0, 2, 0}, {0, 0, 1}})));
    {
        ModMat A = mm(2, {{1, 1, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 1}, {0, 0, 0, 1}});
        lib.emplace_back("m2-d4-blocks", pullback_spec(2, A, A * A));
    }
    {
        ModMat A = mm(3, {{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}});
        lib.emplace_back("m3-d4-cycle", pullback_spec(3, A, A * A));
    }
    // everything-but-the-unit acts as zero (radical is everything)
    lib.emplace_back("m2-d1-null", make_spec(2, mm(2, {{1}}), mm(2, {{0}}), mm(2, {{0}}),
                                             mm(2, {{0}}), mm(2, {{0}}), mm(2, {{0}})));
    lib.emplace_back("m3-d1-null", make_spec(3, mm(3, {{1}}), mm(3, {{0}}), mm(3, {{0}}),
                                             mm(3, {{0}}), mm(3, {{0}}), mm(3, {{0}})));
    // mixed: pullback character ⊕ null (radical is a proper nonzero line)
    lib.emplace_back("m2-d2-mixed", make_spec(2, ModMat::identity(2, 2), mm(2, {{1, 0}, {0, 0}}),
                                              mm(2, {{0, 0}, {0, 0}}), mm(2, {{1, 0}, {0, 0}}),
                                              mm(2, {{1, 0}, {0, 0}}), mm(2, {{1, 0}, {0, 0}})));
    lib.emplace_back("m3-d2-mixed", make_spec(3, ModMat::identity(2, 3), mm(3, {{1, 0}, {0, 0}}),
                                              mm(3, {{2, 0}, {0, 0}}), mm(3, {{1, 0}, {0, 0}}),
                                              mm(3, {{1, 0}, {0, 0}}), mm(3, {{1, 0}, {0, 0}})));
    return lib;
}

} // namespace hecke
