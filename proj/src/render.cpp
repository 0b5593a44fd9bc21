#include "qheis/render.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace qheis {

std::string render(const Generator& g) {
    switch (g.kind) {
        case GenKind::Coordinate: return "x[" + std::to_string(g.index) + "]";
        case GenKind::Momentum: return "p[" + std::to_string(g.index) + "]";
        case GenKind::Partial: return "d[" + std::to_string(g.index) + "]";
        case GenKind::FSym: return "f";
        case GenKind::FComp: return "f[" + std::to_string(g.index) + "]";
        case GenKind::DFComp: return "df[" + std::to_string(g.index) + "]";
        case GenKind::DfLeft: return "Df";
        case GenKind::DfRight: return "fD";
        case GenKind::Entry: return std::string(1, entry_letter(g));
    }
    return "?";
}

std::string render(const Blade& b) {
    if (b.is_unit()) return b.alg == AlgebraKind::Am ? "E0" : "be0";
    std::string s = b.alg == AlgebraKind::Am ? "E[" : "be[";
    for (size_t i = 0; i < b.indices.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(b.indices[i]);
    }
    return s + "]";
}

namespace {

std::string rational_string(const Rational& r, bool with_siblings) {
    std::ostringstream os;
    if (denominator(r) == 1) {
        os << numerator(r);
        return os.str();
    }
    os << numerator(r) << "/" << denominator(r);
    return with_siblings ? "(" + os.str() + ")" : os.str();
}

// Parameter print order: hbar, q, then declared names alphabetically.
int param_rank(const std::string& name) {
    if (name == "hbar") return 0;
    if (name == "q") return 1;
    return 2;
}

// One textual summand: |coeff| rendered as a '*'-chain, plus its sign.
struct Piece {
    bool negative;
    std::string text;
};

// Renders the multiplicative factors of a positive rational times an
// optional i times a Laurent monomial. Empty result means "1".
std::string coeff_factors(const Rational& magnitude, bool imag, const Monomial& mono,
                          bool part_follows) {
    std::vector<std::string> factors;
    bool has_siblings = imag || !mono.exponents().empty() || part_follows;
    if (magnitude != 1 || !has_siblings)
        factors.push_back(rational_string(magnitude, has_siblings));
    if (imag) factors.push_back("i");

    std::vector<std::pair<std::string, int>> params(mono.exponents().begin(),
                                                    mono.exponents().end());
    std::stable_sort(params.begin(), params.end(), [](const auto& a, const auto& b) {
        int ra = param_rank(a.first), rb = param_rank(b.first);
        return ra != rb ? ra < rb : a.first < b.first;
    });
    for (const auto& [name, exp] : params) {
        std::string f = name;
        if (exp != 1) f += "^" + std::to_string(exp);
        factors.push_back(std::move(f));
    }

    std::string out;
    for (size_t i = 0; i < factors.size(); ++i) {
        if (i) out += "*";
        out += factors[i];
    }
    return out;
}

void append_scalar_pieces(std::vector<Piece>& pieces, const Scalar& s, const std::string& part,
                          bool part_multi) {
    for (const auto& [mono, gauss] : s.terms()) {
        for (int channel = 0; channel < 2; ++channel) {
            const Rational& value = channel == 0 ? gauss.re : gauss.im;
            if (value == 0) continue;
            bool neg = value < 0;
            Rational mag = neg ? Rational(-value) : value;
            std::string coeff = coeff_factors(mag, channel == 1, mono, !part.empty());
            std::string text;
            if (part.empty())
                text = coeff.empty() ? "1" : coeff;
            else if (coeff.empty())
                text = part;
            else
                text = coeff + " * " + (part_multi ? "(" + part + ")" : part);
            pieces.push_back({neg, std::move(text)});
        }
    }
}

std::string join_pieces(const std::vector<Piece>& pieces) {
    if (pieces.empty()) return "0";
    std::string out;
    for (size_t i = 0; i < pieces.size(); ++i) {
        if (i == 0)
            out += pieces[i].negative ? "-" + pieces[i].text : pieces[i].text;
        else
            out += (pieces[i].negative ? " - " : " + ") + pieces[i].text;
    }
    return out;
}

}  // namespace

std::string render(const Scalar& s) {
    std::vector<Piece> pieces;
    append_scalar_pieces(pieces, s, "", false);
    return join_pieces(pieces);
}

std::string render(const Expression& e) {
    std::vector<Piece> pieces;
    for (const auto& [key, scalar] : e.terms()) {
        std::vector<std::string> items;
        if (key.blade) items.push_back(render(*key.blade));
        for (const Generator& g : key.slot1) items.push_back(render(g));
        std::string part;
        for (size_t i = 0; i < items.size(); ++i) {
            if (i) part += " ";
            part += items[i];
        }
        bool multi = items.size() > 1;
        if (key.slot2) {
            if (part.empty()) part = "1";  // cannot happen in canonical form
            part += " ox ";
            std::string right;
            for (size_t i = 0; i < key.slot2->size(); ++i) {
                if (i) right += " ";
                right += render((*key.slot2)[i]);
            }
            part += right.empty() ? "1" : right;
            multi = true;
        }
        append_scalar_pieces(pieces, scalar, part, multi);
    }
    return join_pieces(pieces);
}

std::string render(const PolyFunction& f) {
    std::vector<Piece> pieces;
    for (const auto& [exps, mv] : f.terms()) {
        std::vector<std::string> coordfactors;
        for (size_t j = 0; j < exps.size(); ++j) {
            if (exps[j] == 0) continue;
            std::string c = "x" + std::to_string(j);
            if (exps[j] != 1) c += "^" + std::to_string(exps[j]);
            coordfactors.push_back(std::move(c));
        }
        for (const auto& [blade, scalar] : mv.terms()) {
            std::string part;
            for (const auto& c : coordfactors) {
                if (!part.empty()) part += "*";
                part += c;
            }
            if (!blade.is_unit()) {
                if (!part.empty()) part += "*";
                part += render(blade);
            }
            for (const auto& [mono, gauss] : scalar.terms()) {
                for (int channel = 0; channel < 2; ++channel) {
                    const Rational& value = channel == 0 ? gauss.re : gauss.im;
                    if (value == 0) continue;
                    bool neg = value < 0;
                    Rational mag = neg ? Rational(-value) : value;
                    std::string coeff = coeff_factors(mag, channel == 1, mono, !part.empty());
                    std::string text;
                    if (part.empty())
                        text = coeff.empty() ? "1" : coeff;
                    else if (coeff.empty())
                        text = part;
                    else
                        text = coeff + "*" + part;
                    pieces.push_back({neg, std::move(text)});
                }
            }
        }
    }
    return join_pieces(pieces);
}

}  // namespace qheis
