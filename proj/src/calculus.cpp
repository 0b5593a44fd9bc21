#include "qheis/calculus.hpp"

#include <algorithm>
#include <string>

namespace qheis {

void PolyFunction::check_index(int j) const {
    if (j < 0 || j > alg_.dim)
        throw AlgebraError("coordinate index " + std::to_string(j) + " out of range 0.." +
                           std::to_string(alg_.dim));
}

void PolyFunction::require_am(const char* op) const {
    if (alg_.kind != AlgebraKind::Am)
        throw AlgebraError(std::string(op) + " is defined over the Clifford algebra Am");
}

bool PolyFunction::scalar_coefficients() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const auto& t) { return t.second.is_grade0(); });
}

void PolyFunction::add_term(std::vector<int> exps, Multivector coeff) {
    if (exps.size() != static_cast<size_t>(alg_.dim + 1))
        throw AlgebraError("exponent vector must have length dim+1");
    for (int e : exps)
        if (e < 0) throw AlgebraError("negative coordinate exponent");
    if (!(coeff.algebra() == alg_)) throw AlgebraError("coefficient algebra mismatch");
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(std::move(exps), std::move(coeff));
    if (!inserted) {
        Multivector sum = it->second + coeff;
        if (sum.is_zero())
            terms_.erase(it);
        else
            it->second = std::move(sum);
    }
}

PolyFunction PolyFunction::operator-() const {
    PolyFunction r(alg_);
    for (const auto& [e, mv] : terms_) r.terms_.emplace(e, -mv);
    return r;
}

PolyFunction PolyFunction::operator+(const PolyFunction& o) const {
    if (!(alg_ == o.alg_)) throw AlgebraError("polynomial operands live in different algebras");
    PolyFunction r = *this;
    for (const auto& [e, mv] : o.terms_) r.add_term(e, mv);
    return r;
}

PolyFunction PolyFunction::operator-(const PolyFunction& o) const { return *this + (-o); }

PolyFunction PolyFunction::operator*(const PolyFunction& o) const {
    if (!(alg_ == o.alg_)) throw AlgebraError("polynomial operands live in different algebras");
    PolyFunction r(alg_);
    for (const auto& [ea, ma] : terms_)
        for (const auto& [eb, mb] : o.terms_) {
            std::vector<int> e(ea.size());
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(std::move(e), ma * mb);
        }
    return r;
}

PolyFunction PolyFunction::scaled(const Scalar& s) const {
    PolyFunction r(alg_);
    for (const auto& [e, mv] : terms_) r.add_term(e, mv.scaled(s));
    return r;
}

PolyFunction PolyFunction::mv_mul(const Multivector& mv, Side side) const {
    PolyFunction r(alg_);
    for (const auto& [e, c] : terms_)
        r.add_term(e, side == Side::Left ? mv * c : c * mv);
    return r;
}

PolyFunction PolyFunction::partial(int j) const {
    check_index(j);
    PolyFunction r(alg_);
    for (const auto& [e, mv] : terms_) {
        if (e[j] == 0) continue;
        std::vector<int> de = e;
        de[j] -= 1;
        r.add_term(std::move(de), mv.scaled(Scalar(e[j])));
    }
    return r;
}

PolyFunction PolyFunction::dirac(Side side) const {
    require_am("the Dirac operator");
    PolyFunction r(alg_);
    for (int beta = 1; beta <= alg_.dim; ++beta)
        r = r + partial(beta).mv_mul(Multivector::gen(alg_, beta), side);
    return r;
}

PolyFunction PolyFunction::cauchy_riemann() const {
    require_am("the Cauchy-Riemann operator");
    return partial(0) + dirac(Side::Left);
}

PolyFunction PolyFunction::difference_op(int j, int k) const {
    if (alg_.kind != AlgebraKind::Bp)
        throw AlgebraError("the difference operator is defined over Bp");
    if (j == k) throw AlgebraError("the difference operator needs two distinct indices");
    check_index(j);
    check_index(k);
    if (j < 1 || k < 1) throw AlgebraError("difference operator indices start at 1");
    return partial(k).mv_mul(Multivector::gen(alg_, j), Side::Left) +
           partial(j).mv_mul(Multivector::gen(alg_, k), Side::Left);
}

std::pair<bool, PolyFunction> PolyFunction::is_monogenic(Side side) const {
    PolyFunction witness = dirac(side);
    return {witness.is_zero(), std::move(witness)};
}

}  // namespace qheis
