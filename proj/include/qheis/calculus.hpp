#pragma once

#include <map>
#include <utility>
#include <vector>

#include "qheis/clifford.hpp"

namespace qheis {

enum class Side { Left, Right };

/// Polynomial in the coordinates x0..xm with multivector coefficients.
/// Exponent vectors have length m+1 (slot 0 is x0, which only the
/// Cauchy-Riemann operator differentiates).
class PolyFunction {
public:
    explicit PolyFunction(Algebra alg) : alg_(alg) {}

    static PolyFunction zero(Algebra alg) { return PolyFunction(alg); }
    static PolyFunction constant(Algebra alg, Multivector mv) {
        PolyFunction f(alg);
        f.add_term(std::vector<int>(alg.dim + 1, 0), std::move(mv));
        return f;
    }
    /// x_j as a scalar-coefficient polynomial (0 <= j <= m).
    static PolyFunction coordinate(Algebra alg, int j) {
        PolyFunction f(alg);
        std::vector<int> e(alg.dim + 1, 0);
        f.check_index(j);
        e[j] = 1;
        f.add_term(std::move(e), Multivector::unit(alg));
        return f;
    }
    /// x_j * blade(e_b) building block.
    static PolyFunction coord_blade(Algebra alg, int j, int b) {
        PolyFunction f(alg);
        std::vector<int> e(alg.dim + 1, 0);
        f.check_index(j);
        e[j] = 1;
        f.add_term(std::move(e), Multivector::gen(alg, b));
        return f;
    }

    const Algebra& algebra() const { return alg_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<std::vector<int>, Multivector>& terms() const { return terms_; }

    /// True when every coefficient is grade 0.
    bool scalar_coefficients() const;

    void add_term(std::vector<int> exps, Multivector coeff);

    PolyFunction operator-() const;
    PolyFunction operator+(const PolyFunction& o) const;
    PolyFunction operator-(const PolyFunction& o) const;
    /// Coordinates commute; coefficients multiply in the Clifford algebra
    /// (left factor's coefficient first).
    PolyFunction operator*(const PolyFunction& o) const;
    PolyFunction scaled(const Scalar& s) const;
    /// Multiply every coefficient by mv on the given side.
    PolyFunction mv_mul(const Multivector& mv, Side side) const;

    /// Exact formal partial derivative along x_j, 0 <= j <= m.
    PolyFunction partial(int j) const;

    /// Dirac operator: sum over beta = 1..m of e_beta d/dx_beta, with the
    /// blade on the requested side of each coefficient. Am only.
    PolyFunction dirac(Side side) const;

    /// Cauchy-Riemann operator d/dx0 + D (left). Am only.
    PolyFunction cauchy_riemann() const;

    /// Difference operator e_j d/dx_k + e_k d/dx_j over Bp; j != k.
    PolyFunction difference_op(int j, int k) const;

    /// (Df == 0, Df) for the requested side. Am only.
    std::pair<bool, PolyFunction> is_monogenic(Side side) const;

    bool operator==(const PolyFunction&) const = default;

private:
    void check_index(int j) const;
    void require_am(const char* op) const;

    Algebra alg_;
    std::map<std::vector<int>, Multivector> terms_;
};

}  // namespace qheis
