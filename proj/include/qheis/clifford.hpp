#pragma once

#include <atomic>
#include <compare>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "qheis/scalar.hpp"

namespace qheis {

/// Am: generators square to -1 and anticommute (e_a e_b + e_b e_a = -2 delta_ab).
/// Bp: generators square to +1 and annihilate each other (e_j e_k = 0 for j != k),
///     the unique solution of the pair of defining relations under the
///     standard coefficient table.
enum class AlgebraKind : std::uint8_t { Am, Bp };

struct Algebra {
    AlgebraKind kind;
    int dim;
    bool operator==(const Algebra&) const = default;
};

/// Basis blade: a strictly increasing list of generator indices. The empty
/// list is the unit e0. In Bp only the unit and single generators are
/// admissible basis elements; products of distinct generators vanish.
struct Blade {
    AlgebraKind alg = AlgebraKind::Am;
    std::vector<int> indices;

    static Blade unit(AlgebraKind k = AlgebraKind::Am) { return Blade{k, {}}; }
    static Blade gen(AlgebraKind k, int j) { return Blade{k, {j}}; }

    bool is_unit() const { return indices.empty(); }
    int grade() const { return static_cast<int>(indices.size()); }

    /// Throws unless indices are strictly increasing, >= 1, and within dim
    /// (dim < 0 skips the range check). Bp blades must have grade <= 1.
    void validate(int dim = -1) const;

    std::strong_ordering operator<=>(const Blade& o) const {
        if (auto c = alg <=> o.alg; c != 0) return c;
        if (auto c = indices.size() <=> o.indices.size(); c != 0) return c;
        return indices <=> o.indices;
    }
    bool operator==(const Blade&) const = default;
};

/// Product of two basis blades of the same algebra: scalar factor and the
/// resulting blade. Am contracts squares to -1 with the transposition sign;
/// Bp returns (1, unit) for e_j e_j and (0, unit) for e_j e_k with j != k,
/// firing the degeneracy diagnostic.
std::pair<Scalar, Blade> blade_product(const Blade& a, const Blade& b);

/// Count of Bp products that collapsed to zero since the last reset.
/// Every vanishing e_j e_k (j != k) increments it.
std::uint64_t bp_degenerate_count();
void bp_reset_degenerate_count();

/// Element of Am or Bp: blade-indexed scalar combination in canonical form
/// (no zero coefficients).
class Multivector {
public:
    explicit Multivector(Algebra alg) : alg_(alg) {}

    static Multivector zero(Algebra alg) { return Multivector(alg); }
    static Multivector unit(Algebra alg, Scalar s = Scalar::one()) {
        Multivector m(alg);
        m.add_term(Blade::unit(alg.kind), std::move(s));
        return m;
    }
    static Multivector blade(Algebra alg, Blade b, Scalar s = Scalar::one()) {
        Multivector m(alg);
        m.add_term(std::move(b), std::move(s));
        return m;
    }
    static Multivector gen(Algebra alg, int j, Scalar s = Scalar::one()) {
        return blade(alg, Blade::gen(alg.kind, j), std::move(s));
    }

    const Algebra& algebra() const { return alg_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Blade, Scalar>& terms() const { return terms_; }

    /// True when every term sits on the unit blade.
    bool is_grade0() const;

    void add_term(Blade b, Scalar s);

    Multivector operator-() const;
    Multivector operator+(const Multivector& o) const;
    Multivector operator-(const Multivector& o) const;
    Multivector operator*(const Multivector& o) const;
    Multivector scaled(const Scalar& s) const;

    bool operator==(const Multivector&) const = default;

private:
    void require_same(const Multivector& o) const;

    Algebra alg_;
    std::map<Blade, Scalar> terms_;
};

}  // namespace qheis
