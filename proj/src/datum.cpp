#include "hecke/datum.hpp"

#include <sstream>

namespace hecke {

int ParabolicDatum::block_of(int row) const {
    int b = 0, acc = 0;
    for (int size : blocks) {
        acc += size;
        if (row < acc) return b;
        ++b;
    }
    throw DomainError("datum: row index out of range");
}

int ParabolicDatum::block_start(int b) const {
    int acc = 0;
    for (int i = 0; i < b; ++i) acc += blocks[i];
    return acc;
}

void ParabolicDatum::validate() const {
    if (p != 2 && p != 3 && p != 5 && p != 7)
        throw DomainError("datum: p must be a prime <= 7, got " + std::to_string(p));
    if (blocks.empty()) throw DomainError("datum: need at least one block");
    for (int b : blocks)
        if (b < 1) throw DomainError("datum: block sizes must be >= 1");
    if (n() > 6) throw DomainError("datum: total size capped at 6");
}

std::string flavor_name(Flavor f) { return f == Flavor::iwahori ? "iwahori" : "pro-p"; }

Flavor parse_flavor(const std::string& s) {
    if (s == "iwahori") return Flavor::iwahori;
    if (s == "pro-p" || s == "pro_p" || s == "prop") return Flavor::pro_p;
    throw ParseError("datum: unknown flavor '" + s + "'");
}

std::string ParabolicDatum::header() const {
    std::ostringstream os;
    os << "p=" << p << " blocks=";
    for (size_t i = 0; i < blocks.size(); ++i) os << (i ? "," : "") << blocks[i];
    os << " flavor=" << flavor_name(flavor);
    return os.str();
}

ParabolicDatum ParabolicDatum::parse_header(const std::string& text) {
    ParabolicDatum d;
    d.blocks.clear();
    std::istringstream is(text);
    std::string tok;
    bool have_p = false, have_blocks = false;
    while (is >> tok) {
        auto eq = tok.find('=');
        if (eq == std::string::npos) throw ParseError("datum: expected key=value, got '" + tok + "'");
        std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
        if (key == "p") {
            d.p = static_cast<unsigned>(std::stoul(val));
            have_p = true;
        } else if (key == "blocks") {
            std::istringstream bs(val);
            std::string piece;
            while (std::getline(bs, piece, ',')) d.blocks.push_back(std::stoi(piece));
            have_blocks = true;
        } else if (key == "flavor") {
            d.flavor = parse_flavor(val);
        } else {
            throw ParseError("datum: unknown key '" + key + "'");
        }
    }
    if (!have_p || !have_blocks) throw ParseError("datum: header needs p= and blocks=");
    d.validate();
    return d;
}

} // namespace hecke
