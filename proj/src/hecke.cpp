#include "hecke/hecke.hpp"

#include <cctype>
#include <sstream>

namespace hecke {

void Element::check_compatible(const Element& o) const {
    if (tag_ != o.tag_) throw DomainError("hecke element: pair tag mismatch");
    if (!(ring_ == o.ring_)) throw DomainError("hecke element: coefficient ring mismatch");
    if (!(datum_ == o.datum_)) throw DomainError("hecke element: datum mismatch");
}

void Element::rebuild_index() {
    index_.clear();
    for (size_t i = 0; i < terms_.size(); ++i) index_.emplace(terms_[i].coset.key().hash(), i);
}

void Element::add(const RightCoset& coset, const mpz_class& coef) {
    if (coset.tag() != tag_) throw DomainError("hecke element: coset tag mismatch");
    mpz_class c = ring_.canon(coef);
    if (c == 0) return;
    auto [lo, hi] = index_.equal_range(coset.key().hash());
    for (auto it = lo; it != hi; ++it) {
        Term& t = terms_[it->second];
        if (coset_eq(coset, t.coset)) {
            t.coef = ring_.canon(t.coef + c);
            if (t.coef == 0) {
                terms_.erase(terms_.begin() + static_cast<long>(it->second));
                rebuild_index();
            }
            return;
        }
    }
    index_.emplace(coset.key().hash(), terms_.size());
    terms_.push_back(Term{coset, std::move(c)});
}

mpz_class Element::coefficient(const RightCoset& coset) const {
    auto [lo, hi] = index_.equal_range(coset.key().hash());
    for (auto it = lo; it != hi; ++it)
        if (coset_eq(coset, terms_[it->second].coset)) return terms_[it->second].coef;
    return 0;
}

Element Element::operator+(const Element& o) const {
    check_compatible(o);
    Element r = *this;
    for (const Term& t : o.terms_) r.add(t.coset, t.coef);
    r.invariant_ = invariant_ && o.invariant_;
    return r;
}

Element Element::operator-(const Element& o) const { return *this + o.scaled(-1); }

Element Element::scaled(const mpz_class& c) const {
    Element r(tag_, ring_, datum_);
    mpz_class cc = ring_.canon(c);
    if (cc == 0) {
        r.invariant_ = invariant_;
        return r;
    }
    for (const Term& t : terms_) r.add(t.coset, t.coef * cc);
    r.invariant_ = invariant_;
    return r;
}

bool Element::operator==(const Element& o) const {
    if (tag_ != o.tag_ || !(ring_ == o.ring_) || !(datum_ == o.datum_)) return false;
    if (terms_.size() != o.terms_.size()) return false;
    for (const Term& t : terms_)
        if (o.coefficient(t.coset) != t.coef) return false;
    return true;
}

Element Element::right_translate(const GroupElement& g) const {
    Element r(tag_, ring_, datum_);
    for (const Term& t : terms_) r.add(RightCoset(t.coset.rep() * g, tag_), t.coef);
    return r;
}

Element zero_element(PairTag tag, const CoefRing& ring, const ParabolicDatum& datum) {
    return Element(tag, ring, datum).with_invariant_flag(true);
}

Element hecke_T(const GroupElement& g, PairTag tag, const CoefRing& ring, std::uint64_t orbit_cap) {
    DoubleCosetDecomposition dec = decompose_double_coset(g, tag, orbit_cap);
    Element e(tag, ring, g.datum());
    for (const RightCoset& c : dec.cosets) e.add(c, 1);
    e.invariant_ = true;
    return e;
}

Element hecke_mul(const Element& x, const Element& y) {
    x.check_compatible(y);
    if (!x.invariant())
        throw DomainError("hecke_mul: left factor must be invariant (module action)");
    Element r(x.tag_, x.ring_, x.datum_);
    for (const Element::Term& tx : x.terms_)
        for (const Element::Term& ty : y.terms_)
            r.add(RightCoset(tx.coset.rep() * ty.coset.rep(), x.tag_), tx.coef * ty.coef);
    r.invariant_ = x.invariant_ && y.invariant_;
    return r;
}

bool invariance_check(const Element& x) {
    if (x.is_zero()) return true;
    long level = 1;
    for (const Element::Term& t : x.terms())
        level = std::max(level, truncation_level(t.coset.rep()));
    for (const GroupElement& g : gamma_generators(x.datum(), level, x.tag()))
        if (x.right_translate(g) != x) return false;
    return true;
}

std::vector<std::pair<mpz_class, GroupElement>> to_T_basis(const Element& x) {
    std::vector<std::pair<mpz_class, GroupElement>> out;
    std::vector<bool> used(x.terms().size(), false);
    for (size_t i = 0; i < x.terms().size(); ++i) {
        if (used[i]) continue;
        const Element::Term& seed = x.terms()[i];
        DoubleCosetDecomposition dec = decompose_double_coset(seed.coset.rep(), x.tag());
        // every coset of the double coset must appear with the seed's coefficient
        for (const RightCoset& c : dec.cosets) {
            bool found = false;
            for (size_t j = 0; j < x.terms().size(); ++j) {
                if (used[j]) continue;
                if (coset_eq(c, x.terms()[j].coset)) {
                    if (x.terms()[j].coef != seed.coef)
                        throw DomainError("to_T_basis: unequal coefficients inside a double coset (element is not invariant)");
                    used[j] = true;
                    found = true;
                    break;
                }
            }
            if (!found)
                throw DomainError("to_T_basis: support does not cover a full double coset (element is not invariant)");
        }
        out.emplace_back(seed.coef, seed.coset.rep());
    }
    return out;
}

Element base_change(const Element& x, const CoefRing& to) {
    Element r(x.tag(), to, x.datum());
    for (const Element::Term& t : x.terms()) r.add(t.coset, t.coef);
    return r.with_invariant_flag(x.invariant());
}

std::string element_str(const Element& x) {
    if (x.is_zero()) return "0";
    std::vector<std::pair<mpz_class, GroupElement>> tb = to_T_basis(x);
    std::ostringstream os;
    for (size_t i = 0; i < tb.size(); ++i) {
        mpz_class c = tb[i].first;
        if (i)
            os << (c < 0 ? " - " : " + ");
        else if (c < 0)
            os << "-";
        os << mpz_class(abs(c)).get_str() << "*T" << tb[i].second.mat().str();
    }
    return os.str();
}

std::string element_dump(const Element& x) {
    std::ostringstream os;
    if (x.is_zero()) return "(zero)\n";
    for (const Element::Term& t : x.terms())
        os << "coset " << t.coset.rep().mat().str() << " coeff " << t.coef.get_str() << "\n";
    return os.str();
}

Element parse_element(const std::string& text, PairTag tag, const CoefRing& ring,
                      const ParabolicDatum& datum, std::uint64_t orbit_cap) {
    Element out = zero_element(tag, ring, datum);
    size_t i = 0, n = text.size();
    auto skip = [&] { while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    skip();
    if (i < n && text[i] == '0') {
        ++i;
        skip();
        if (i != n) throw ParseError("element: trailing characters after '0'");
        return out;
    }
    bool first = true;
    while (true) {
        skip();
        if (i >= n) {
            if (first) throw ParseError("element: empty input");
            break;
        }
        int sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            if (text[i] == '-') sign = -1;
            ++i;
            skip();
        } else if (!first) {
            throw ParseError("element: expected '+' or '-' at column " + std::to_string(i + 1));
        }
        first = false;
        // tolerate an explicitly signed coefficient after the separator
        if (i < n && (text[i] == '+' || text[i] == '-')) {
            if (text[i] == '-') sign = -sign;
            ++i;
            skip();
        }
        mpz_class coef = 1;
        if (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
            size_t start = i;
            while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            coef = mpz_class(text.substr(start, i - start));
            skip();
            if (i >= n || text[i] != '*')
                throw ParseError("element: expected '*' after coefficient at column " + std::to_string(i + 1));
            ++i;
            skip();
        }
        if (i >= n || text[i] != 'T')
            throw ParseError("element: expected 'T' at column " + std::to_string(i + 1) + " in '" + text + "'");
        ++i;
        skip();
        if (i >= n || text[i] != '[')
            throw ParseError("element: expected matrix after 'T' at column " + std::to_string(i + 1));
        int depth = 0;
        size_t start = i;
        while (i < n) {
            if (text[i] == '[') ++depth;
            if (text[i] == ']') {
                --depth;
                if (depth == 0) {
                    ++i;
                    break;
                }
            }
            ++i;
        }
        if (depth != 0) throw ParseError("element: unbalanced brackets in matrix");
        Mat m = Mat::parse(text.substr(start, i - start), datum.p, datum.n());
        GroupElement g(datum, std::move(m));
        Element term = hecke_T(g, tag, ring, orbit_cap);
        out = out + term.scaled(sign * coef);
        skip();
    }
    return out;
}

} // namespace hecke
