#include "qheis/term.hpp"

#include <algorithm>

namespace qheis {

bool gen_kind_indexed(GenKind k) {
    switch (k) {
        case GenKind::Coordinate:
        case GenKind::Momentum:
        case GenKind::Partial:
        case GenKind::FComp:
        case GenKind::DFComp:
            return true;
        default:
            return false;
    }
}

Generator gen_entry(char letter) {
    if (letter < 'a' || letter > 'd') throw AlgebraError("matrix entry must be one of a,b,c,d");
    return {GenKind::Entry, letter - 'a' + 1};
}

char entry_letter(const Generator& g) {
    return static_cast<char>('a' + g.index - 1);
}

namespace {

void validate_generator(const Generator& g) {
    if (gen_kind_indexed(g.kind)) {
        if (g.index < 1) throw AlgebraError("generator index must be >= 1");
    } else if (g.kind == GenKind::Entry) {
        if (g.index < 1 || g.index > 4) throw AlgebraError("matrix entry out of range");
    }
}

// Matrix entries behave as noncommutative coefficients: they commute with
// coordinates and slide across the tensor sign, but never past each other.
// Canonical position: gathered leftward in the first slot, mutual order
// preserved (first slot's entries before the second slot's).
void gather_entries(TermKey& key) {
    auto bubble = [](Word& w) {
        bool moved = false;
        for (size_t i = 1; i < w.size(); ++i) {
            if (w[i].kind == GenKind::Entry && w[i - 1].kind == GenKind::Coordinate) {
                std::swap(w[i], w[i - 1]);
                moved = true;
            }
        }
        return moved;
    };
    bool changed = true;
    while (changed) {
        changed = bubble(key.slot1);
        if (key.slot2) {
            changed = bubble(*key.slot2) || changed;
            if (!key.slot2->empty() && key.slot2->front().kind == GenKind::Entry) {
                key.slot1.push_back(key.slot2->front());
                key.slot2->erase(key.slot2->begin());
                changed = true;
            }
        }
    }
}

// u (x) 1 = u, 1 (x) v = v, 1 (x) 1 = 1: unit slots collapse away.
void collapse_unit_slots(TermKey& key) {
    if (!key.slot2) return;
    if (key.slot2->empty()) {
        key.slot2.reset();
    } else if (key.slot1.empty()) {
        key.slot1 = std::move(*key.slot2);
        key.slot2.reset();
    }
}

}  // namespace

void Expression::add_term(TermKey key, Scalar coeff) {
    if (coeff.is_zero()) return;
    if (key.blade) {
        key.blade->validate();
        if (key.blade->is_unit()) key.blade.reset();
    }
    for (const Generator& g : key.slot1) validate_generator(g);
    if (key.slot2)
        for (const Generator& g : *key.slot2) validate_generator(g);
    gather_entries(key);
    collapse_unit_slots(key);
    auto [it, inserted] = terms_.try_emplace(std::move(key), std::move(coeff));
    if (!inserted) {
        it->second = it->second + coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

int Expression::tensor_degree() const {
    if (terms_.empty()) return 0;
    int deg = 0;
    for (const auto& [k, s] : terms_) {
        int d = k.slot2 ? 2 : (k.slot1.empty() && !k.blade ? 0 : 1);
        deg = std::max(deg, d);
    }
    return deg;
}

Expression Expression::operator-() const {
    Expression r;
    for (const auto& [k, s] : terms_) r.terms_.emplace(k, -s);
    return r;
}

Expression Expression::operator+(const Expression& o) const {
    Expression r = *this;
    for (const auto& [k, s] : o.terms_) r.add_term(k, s);
    return r;
}

Expression Expression::operator-(const Expression& o) const { return *this + (-o); }

namespace {

std::optional<Blade> combine_blades(const std::optional<Blade>& a, const std::optional<Blade>& b,
                                    Scalar& coeff) {
    if (!a) return b;
    if (!b) return a;
    auto [sign, blade] = blade_product(*a, *b);
    coeff = coeff * sign;
    if (blade.is_unit()) return std::nullopt;
    return blade;
}

}  // namespace

Expression Expression::operator*(const Expression& o) const {
    Expression r;
    for (const auto& [ka, sa] : terms_)
        for (const auto& [kb, sb] : o.terms_) {
            Scalar coeff = sa * sb;
            std::optional<Blade> blade = combine_blades(ka.blade, kb.blade, coeff);
            if (ka.slot2 && kb.slot2)
                throw AlgebraError("product of two tensor monomials exceeds tensor degree 2");
            if (ka.slot2) {
                if (!kb.slot1.empty())
                    throw AlgebraError(
                        "cannot multiply a degree-2 monomial by a word; only scalars and "
                        "Clifford factors slide across the tensor sign");
                r.add_term(TermKey{std::move(blade), ka.slot1, ka.slot2}, std::move(coeff));
            } else if (kb.slot2) {
                if (!ka.slot1.empty())
                    throw AlgebraError(
                        "cannot multiply a word by a degree-2 monomial; only scalars and "
                        "Clifford factors slide across the tensor sign");
                r.add_term(TermKey{std::move(blade), kb.slot1, kb.slot2}, std::move(coeff));
            } else {
                Word w = ka.slot1;
                w.insert(w.end(), kb.slot1.begin(), kb.slot1.end());
                r.add_term(TermKey{std::move(blade), std::move(w), std::nullopt}, std::move(coeff));
            }
        }
    return r;
}

Expression Expression::scaled(const Scalar& s) const {
    Expression r;
    for (const auto& [k, c] : terms_) r.add_term(k, c * s);
    return r;
}

Expression Expression::limit_q1() const {
    Expression r;
    for (const auto& [k, c] : terms_) r.add_term(k, c.limit_q1());
    return r;
}

Expression expr_tensor(const Expression& a, const Expression& b) {
    Expression r;
    for (const auto& [ka, sa] : a.terms())
        for (const auto& [kb, sb] : b.terms()) {
            if (ka.slot2 || kb.slot2)
                throw AlgebraError("tensor factors must have degree 1");
            Scalar coeff = sa * sb;
            std::optional<Blade> blade = combine_blades(ka.blade, kb.blade, coeff);
            r.add_term(TermKey{std::move(blade), ka.slot1, kb.slot1}, std::move(coeff));
        }
    return r;
}

Expression substitute(const Expression& e, const Generator& g, const Expression& repl) {
    if (repl.tensor_degree() > 1)
        throw AlgebraError("substitution image must have tensor degree <= 1");
    auto fold = [&](const Word& w) {
        Expression acc = Expression::one();
        for (const Generator& gen : w)
            acc = acc * (gen == g ? repl : Expression::generator(gen));
        return acc;
    };
    Expression r;
    for (const auto& [k, s] : e.terms()) {
        bool hit1 = std::find(k.slot1.begin(), k.slot1.end(), g) != k.slot1.end();
        bool hit2 = k.slot2 && std::find(k.slot2->begin(), k.slot2->end(), g) != k.slot2->end();
        if (!hit1 && !hit2) {
            r.add_term(k, s);
            continue;
        }
        Expression head = k.blade ? Expression::blade(*k.blade) : Expression::one();
        Expression left = head * fold(k.slot1);
        Expression full = k.slot2 ? expr_tensor(left, fold(*k.slot2)) : left;
        r = r + full.scaled(s);
    }
    return r;
}

}  // namespace qheis
