#include "qheis/json_io.hpp"

#include <json.hpp>

#include "qheis/render.hpp"

namespace qheis {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::string dec(const Int& v) { return v.str(); }

ordered_json scalar_json(const Scalar& s) {
    ordered_json terms = ordered_json::array();
    for (const auto& [mono, gauss] : s.terms()) {
        ordered_json t;
        t["num"] = {dec(numerator(gauss.re)), dec(denominator(gauss.re)),
                    dec(numerator(gauss.im)), dec(denominator(gauss.im))};
        ordered_json pow = ordered_json::object();
        for (const auto& [name, exp] : mono.exponents()) pow[name] = exp;
        t["pow"] = std::move(pow);
        terms.push_back(std::move(t));
    }
    return terms;
}

const char* kind_name(GenKind k) {
    switch (k) {
        case GenKind::Coordinate: return "x";
        case GenKind::Momentum: return "p";
        case GenKind::Partial: return "partial";
        case GenKind::FSym: return "f";
        case GenKind::FComp: return "f_comp";
        case GenKind::DFComp: return "df";
        case GenKind::DfLeft: return "Df";
        case GenKind::DfRight: return "fD";
        case GenKind::Entry: return "entry";
    }
    return "?";
}

ordered_json word_json(const Word& w) {
    ordered_json arr = ordered_json::array();
    for (const Generator& g : w) arr.push_back({{"kind", kind_name(g.kind)}, {"index", g.index}});
    return arr;
}

ordered_json expr_json(const Expression& e) {
    ordered_json arr = ordered_json::array();
    for (const auto& [key, coeff] : e.terms()) {
        ordered_json t;
        t["coeff"] = scalar_json(coeff);
        ordered_json blade = ordered_json::array();
        if (key.blade)
            for (int j : key.blade->indices) blade.push_back(j);
        t["blade"] = std::move(blade);
        if (key.blade && key.blade->alg == AlgebraKind::Bp) t["blade_alg"] = "Bp";
        t["slot1"] = word_json(key.slot1);
        t["slot2"] = key.slot2 ? word_json(*key.slot2) : ordered_json(nullptr);
        arr.push_back(std::move(t));
    }
    return arr;
}

std::string dump(const ordered_json& j, int indent) {
    return indent < 0 ? j.dump() : j.dump(indent);
}

}  // namespace

std::string to_json(const Expression& e, int indent) { return dump(expr_json(e), indent); }

std::string to_json(const PolyFunction& f, int indent) {
    ordered_json out;
    out["algebra"] = f.algebra().kind == AlgebraKind::Am ? "Am" : "Bp";
    out["dim"] = f.algebra().dim;
    ordered_json terms = ordered_json::array();
    for (const auto& [exps, mv] : f.terms()) {
        ordered_json t;
        t["exps"] = exps;
        ordered_json coeff = ordered_json::array();
        for (const auto& [blade, s] : mv.terms()) {
            ordered_json c;
            c["blade"] = blade.indices;
            c["scalar"] = scalar_json(s);
            coeff.push_back(std::move(c));
        }
        t["coeff"] = std::move(coeff);
        terms.push_back(std::move(t));
    }
    out["terms"] = std::move(terms);
    return dump(out, indent);
}

std::string to_json(const VerificationReport& r, int indent) {
    ordered_json out;
    out["check"] = r.check;
    out["config"] = r.config;
    ordered_json rels = ordered_json::array();
    for (const RelationEntry& e : r.entries) {
        ordered_json rel;
        rel["label"] = e.label;
        rel["substitutions"] = e.substitutions;
        rel["residual"] = render(e.residual);
        rel["verdict"] = e.zero() ? "zero" : "nonzero";
        rels.push_back(std::move(rel));
    }
    out["relations"] = std::move(rels);
    return dump(out, indent);
}

}  // namespace qheis
