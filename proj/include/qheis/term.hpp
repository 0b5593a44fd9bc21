#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qheis/clifford.hpp"
#include "qheis/scalar.hpp"

namespace qheis {

/// Non-Clifford generators of the word algebra. Indexed kinds carry a
/// positive index; Entry carries 1..4 for the matrix letters a..d.
enum class GenKind : std::uint8_t {
    Coordinate,  // x[j]
    Momentum,    // p[j]
    Partial,     // d[j]
    FSym,        // f          (the deformation function, inert)
    FComp,       // f[j]       (component f_j)
    DFComp,      // df[j]      (partial of f along x_j, inert)
    DfLeft,      // Df         (left Dirac image of f, inert)
    DfRight,     // fD         (right Dirac image of f, inert)
    Entry,       // a b c d    (quantum matrix entries)
};

bool gen_kind_indexed(GenKind k);

struct Generator {
    GenKind kind;
    int index = 0;

    auto operator<=>(const Generator&) const = default;
};

inline Generator gen_x(int j) { return {GenKind::Coordinate, j}; }
inline Generator gen_p(int j) { return {GenKind::Momentum, j}; }
inline Generator gen_d(int j) { return {GenKind::Partial, j}; }
inline Generator gen_f() { return {GenKind::FSym, 0}; }
inline Generator gen_fcomp(int j) { return {GenKind::FComp, j}; }
inline Generator gen_df(int j) { return {GenKind::DFComp, j}; }
inline Generator gen_Df() { return {GenKind::DfLeft, 0}; }
inline Generator gen_fD() { return {GenKind::DfRight, 0}; }
Generator gen_entry(char letter);  // 'a'..'d'
char entry_letter(const Generator& g);

/// Ordered product of generators; the empty word is the unit. Clifford
/// factors never live here: canonicalization extracts them into the blade
/// prefix of the enclosing monomial.
using Word = std::vector<Generator>;

/// Key of a canonical tensor monomial: optional blade prefix (absent =
/// unit), first slot word, optional second slot word. A term with no second
/// slot has tensor degree one; unit slots collapse (u (x) 1 = u), so a
/// present second slot is never empty unless the first is not.
struct TermKey {
    std::optional<Blade> blade;
    Word slot1;
    std::optional<Word> slot2;

    auto operator<=>(const TermKey&) const = default;
};

/// Canonical sum of tensor monomials: map TermKey -> Scalar coefficient,
/// no zero coefficients, every key in canonical form. Equality is map
/// equality, which makes identity checks decidable.
class Expression {
public:
    Expression() = default;

    static Expression zero() { return {}; }
    static Expression one() { return from_scalar(Scalar::one()); }
    static Expression from_scalar(const Scalar& s) {
        Expression e;
        e.add_term(TermKey{}, s);
        return e;
    }
    static Expression generator(Generator g, Scalar coeff = Scalar::one()) {
        Expression e;
        e.add_term(TermKey{std::nullopt, Word{g}, std::nullopt}, std::move(coeff));
        return e;
    }
    static Expression word(Word w, Scalar coeff = Scalar::one()) {
        Expression e;
        e.add_term(TermKey{std::nullopt, std::move(w), std::nullopt}, std::move(coeff));
        return e;
    }
    static Expression blade(Blade b, Scalar coeff = Scalar::one()) {
        Expression e;
        e.add_term(TermKey{std::move(b), {}, std::nullopt}, std::move(coeff));
        return e;
    }

    bool is_zero() const { return terms_.empty(); }
    const std::map<TermKey, Scalar>& terms() const { return terms_; }

    /// 2 if any term has a second slot, else 1 (0 for pure scalars / zero).
    int tensor_degree() const;

    /// Insert coeff * key after canonicalizing the key (blade validation,
    /// matrix-entry gathering, unit-slot collapse).
    void add_term(TermKey key, Scalar coeff);

    Expression operator-() const;
    Expression operator+(const Expression& o) const;
    Expression operator-(const Expression& o) const;
    /// Word/blade product. Degree-2 factors multiply only against
    /// coefficient-like operands (scalars and blades); anything else is a
    /// tensor-degree violation.
    Expression operator*(const Expression& o) const;
    Expression scaled(const Scalar& s) const;

    /// Substitute q := 1 in every coefficient.
    Expression limit_q1() const;

    bool operator==(const Expression&) const = default;

private:
    std::map<TermKey, Scalar> terms_;
};

/// Pair two degree-1 expressions into degree-2 monomials. Blade prefixes
/// multiply in encounter order (left factor first).
Expression expr_tensor(const Expression& a, const Expression& b);

/// Replace every occurrence of generator g by the degree-1 expression repl
/// (which may carry blades and multiple terms), expanding products.
Expression substitute(const Expression& e, const Generator& g, const Expression& repl);

}  // namespace qheis
