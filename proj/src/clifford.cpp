#include "qheis/clifford.hpp"

#include <algorithm>
#include <string>

namespace qheis {

namespace {
std::atomic<std::uint64_t> g_bp_degenerate{0};
}

std::uint64_t bp_degenerate_count() { return g_bp_degenerate.load(); }
void bp_reset_degenerate_count() { g_bp_degenerate.store(0); }

void Blade::validate(int dim) const {
    int prev = 0;
    for (int j : indices) {
        if (j < 1) throw AlgebraError("blade index must be >= 1");
        if (j <= prev) throw AlgebraError("blade indices must be strictly increasing");
        if (dim >= 0 && j > dim)
            throw AlgebraError("blade index " + std::to_string(j) + " exceeds dimension " +
                               std::to_string(dim));
        prev = j;
    }
    if (alg == AlgebraKind::Bp && indices.size() > 1)
        throw AlgebraError("Bp admits only the unit and single generators as blades");
}

std::pair<Scalar, Blade> blade_product(const Blade& a, const Blade& b) {
    if (a.alg != b.alg) throw AlgebraError("blade product across different algebras");

    if (a.alg == AlgebraKind::Bp) {
        if (a.is_unit()) return {Scalar::one(), b};
        if (b.is_unit()) return {Scalar::one(), a};
        if (a.indices[0] == b.indices[0]) return {Scalar::one(), Blade::unit(a.alg)};
        // e_j e_k = 0 for j != k: the pair of defining relations is
        // degenerate. Note it for the diagnostic channel.
        g_bp_degenerate.fetch_add(1);
        return {Scalar::zero(), Blade::unit(a.alg)};
    }

    // Am: insert each factor of b into the sorted index list of a, counting
    // transpositions; equal indices contract with e^2 = -1.
    std::vector<int> idx = a.indices;
    int sign = 1;
    for (int x : b.indices) {
        auto pos = std::lower_bound(idx.begin(), idx.end(), x);
        // moving x left past everything strictly greater flips the sign once
        // per transposition
        auto greater = idx.end() - pos;
        if (pos != idx.end() && *pos == x) {
            --greater;  // x stops next to its twin, not past it
            if (greater % 2 != 0) sign = -sign;
            sign = -sign;  // e_x e_x = -1
            idx.erase(pos);
        } else {
            if (greater % 2 != 0) sign = -sign;
            idx.insert(pos, x);
        }
    }
    return {sign == 1 ? Scalar::one() : -Scalar::one(), Blade{a.alg, std::move(idx)}};
}

bool Multivector::is_grade0() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const auto& t) { return t.first.is_unit(); });
}

void Multivector::add_term(Blade b, Scalar s) {
    if (b.alg != alg_.kind) throw AlgebraError("blade does not belong to this algebra");
    b.validate(alg_.dim);
    if (s.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(std::move(b), std::move(s));
    if (!inserted) {
        it->second = it->second + s;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void Multivector::require_same(const Multivector& o) const {
    if (!(alg_ == o.alg_))
        throw AlgebraError("multivector operands live in different algebras");
}

Multivector Multivector::operator-() const {
    Multivector r(alg_);
    for (const auto& [b, s] : terms_) r.terms_.emplace(b, -s);
    return r;
}

Multivector Multivector::operator+(const Multivector& o) const {
    require_same(o);
    Multivector r = *this;
    for (const auto& [b, s] : o.terms_) r.add_term(b, s);
    return r;
}

Multivector Multivector::operator-(const Multivector& o) const { return *this + (-o); }

Multivector Multivector::operator*(const Multivector& o) const {
    require_same(o);
    Multivector r(alg_);
    for (const auto& [ba, sa] : terms_)
        for (const auto& [bb, sb] : o.terms_) {
            auto [sign, blade] = blade_product(ba, bb);
            r.add_term(blade, sign * sa * sb);
        }
    return r;
}

Multivector Multivector::scaled(const Scalar& s) const {
    Multivector r(alg_);
    for (const auto& [b, c] : terms_) r.add_term(b, c * s);
    return r;
}

}  // namespace qheis
