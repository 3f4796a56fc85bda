/*
   Copyright 2026 The ffdyn authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "ffdyn/factor.hpp"
#include "ffdyn/poly.hpp"

namespace ffdyn {

/// A circulant matrix can be read off either from its first column,
/// A(y) = sum a_i y^{i-1}, or from its first row, sum a_i y^i. Both give an
/// algebra isomorphic to F_q[y]/(y^n - 1); the two readings differ by the
/// automorphism A(y) -> y^n A(1/y) mod (y^n - 1), which is an involution.
enum class Convention { row, column };

/// A residue in F_q[y]/(y^n - 1) tagged with the matrix-reading convention it
/// was built under. deg(poly) < n always holds.
class CycPoly {
public:
    CycPoly(unsigned n, Poly poly, Convention conv) : n_(n), poly_(std::move(poly)), conv_(conv) {
        if (n_ < 1) throw std::invalid_argument("CycPoly: n must be >= 1");
        if (poly_.deg() >= static_cast<int>(n_))
            throw std::invalid_argument("CycPoly: polynomial degree must be < n");
    }

    /// Build from an arbitrary polynomial, folding it into the residue ring.
    static CycPoly reduce(const FieldCtx& F, unsigned n, const Poly& a, Convention conv) {
        if (n < 1) throw std::invalid_argument("CycPoly: n must be >= 1");
        std::vector<FieldElement> c(n, F.zero());
        for (std::size_t i = 0; i < a.coeffs().size(); ++i)
            c[i % n] = F.add(c[i % n], a.coeffs()[i]);
        return CycPoly(n, Poly::from_coeffs(std::move(c)), conv);
    }

    unsigned n() const { return n_; }
    const Poly& poly() const { return poly_; }
    Convention convention() const { return conv_; }

    friend bool operator==(const CycPoly&, const CycPoly&) = default;

private:
    unsigned n_;
    Poly poly_;
    Convention conv_;
};

using StateVector = std::vector<FieldElement>;

/// The row <-> column automorphism.
inline CycPoly swap_convention(const FieldCtx& F, const CycPoly& a) {
    std::vector<FieldElement> c(a.n(), F.zero());
    for (std::size_t i = 0; i < a.poly().coeffs().size(); ++i) {
        std::size_t j = i == 0 ? 0 : a.n() - i;
        c[j] = a.poly().coeffs()[i];
    }
    Convention other = a.convention() == Convention::row ? Convention::column : Convention::row;
    return CycPoly(a.n(), Poly::from_coeffs(std::move(c)), other);
}

inline CycPoly to_convention(const FieldCtx& F, const CycPoly& a, Convention conv) {
    return a.convention() == conv ? a : swap_convention(F, a);
}

/// Residue product. Both operands must live in the same ring under the same
/// convention; a mismatch is a caller bug, not something to paper over.
inline CycPoly cyc_mul(const FieldCtx& F, const CycPoly& a, const CycPoly& b) {
    if (a.n() != b.n()) throw std::invalid_argument("cyc_mul: ring dimension mismatch");
    if (a.convention() != b.convention())
        throw std::invalid_argument("cyc_mul: convention mismatch");
    return CycPoly::reduce(F, a.n(), poly_mul(F, a.poly(), b.poly()), a.convention());
}

/// Column convention: the coefficient of y^{i-1} is x_i.
/// Row convention applies the automorphism on top of that.
inline CycPoly vector_to_cycpoly(const FieldCtx& F, const StateVector& x, Convention conv) {
    if (x.empty()) throw std::invalid_argument("vector_to_cycpoly: empty vector");
    CycPoly col(static_cast<unsigned>(x.size()), Poly::from_coeffs(x), Convention::column);
    return to_convention(F, col, conv);
}

inline StateVector cycpoly_to_vector(const FieldCtx& F, const CycPoly& a) {
    CycPoly col = to_convention(F, a, Convention::column);
    StateVector x(col.n(), F.zero());
    for (std::size_t i = 0; i < col.poly().coeffs().size(); ++i) x[i] = col.poly().coeffs()[i];
    return x;
}

namespace detail {

/// Explicit n x n circulant built from the defining column or row.
inline std::vector<std::vector<FieldElement>> circulant_matrix(const FieldCtx& F,
                                                               const CycPoly& a) {
    const unsigned n = a.n();
    std::vector<FieldElement> c(n, F.zero());
    for (std::size_t i = 0; i < a.poly().coeffs().size(); ++i) c[i] = a.poly().coeffs()[i];
    std::vector<std::vector<FieldElement>> M(n, std::vector<FieldElement>(n, F.zero()));
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) {
            if (a.convention() == Convention::column)
                M[i][j] = c[(i + n - j) % n];  // first column = c, columns shift down
            else
                M[i][j] = c[(j + n - i) % n];  // first row = c, rows shift right
        }
    return M;
}

}  // namespace detail

/// Test oracle for the circulant/polynomial isomorphism: multiply the two
/// explicit matrices and read the defining column/row of the product back.
/// Must agree with cyc_mul; O(n^3), so keep n small.
inline CycPoly matrix_oracle_product(const FieldCtx& F, const CycPoly& a, const CycPoly& b) {
    if (a.n() != b.n()) throw std::invalid_argument("matrix_oracle_product: ring dimension mismatch");
    if (a.convention() != b.convention())
        throw std::invalid_argument("matrix_oracle_product: convention mismatch");
    const unsigned n = a.n();
    auto A = detail::circulant_matrix(F, a);
    auto B = detail::circulant_matrix(F, b);
    std::vector<std::vector<FieldElement>> C(n, std::vector<FieldElement>(n, F.zero()));
    for (unsigned i = 0; i < n; ++i)
        for (unsigned k = 0; k < n; ++k) {
            if (A[i][k].is_zero()) continue;
            for (unsigned j = 0; j < n; ++j) C[i][j] = F.add(C[i][j], F.mul(A[i][k], B[k][j]));
        }
    std::vector<FieldElement> def(n, F.zero());
    for (unsigned i = 0; i < n; ++i)
        def[i] = a.convention() == Convention::column ? C[i][0] : C[0][i];
    return CycPoly(n, Poly::from_coeffs(std::move(def)), a.convention());
}

/// x' = Ax through the isomorphism: the column polynomial of x' is
/// op_column x column polynomial of x.
inline StateVector apply_operator(const FieldCtx& F, const CycPoly& op, const StateVector& x) {
    if (op.n() != x.size()) throw std::invalid_argument("apply_operator: dimension mismatch");
    CycPoly opc = to_convention(F, op, Convention::column);
    CycPoly xc = vector_to_cycpoly(F, x, Convention::column);
    return cycpoly_to_vector(F, cyc_mul(F, opc, xc));
}

/// The circulant of F is nondegenerate over F_q iff gcd(F(y), y^n - 1) = 1.
/// Convention-independent, since the swap automorphism permutes the
/// irreducible factors of y^n - 1.
inline bool is_nondegenerate(const FieldCtx& F, const CycPoly& f) {
    if (f.poly().is_zero()) return false;
    return poly_is_one(F, poly_gcd(F, f.poly(), poly_xn_minus_1(F, f.n())));
}

/// Exact determinant of the integer circulant with the given first column,
/// by fraction-free Bareiss elimination. Works over Z so one computation
/// serves every residue field at once.
inline mpz_class circulant_det_integer(const std::vector<mpz_class>& column) {
    const std::size_t n = column.size();
    if (n < 1) throw std::invalid_argument("circulant_det_integer: need n >= 1");
    std::vector<std::vector<mpz_class>> M(n, std::vector<mpz_class>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) M[i][j] = column[(i + n - j) % n];
    int sign = 1;
    mpz_class prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (M[k][k] == 0) {
            std::size_t r = k + 1;
            while (r < n && M[r][k] == 0) ++r;
            if (r == n) return 0;
            std::swap(M[k], M[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_class t = M[i][j] * M[k][k] - M[i][k] * M[k][j];
                mpz_divexact(M[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            M[i][k] = 0;
        }
        prev = M[k][k];
    }
    return sign * M[n - 1][n - 1];
}

/// Closed form for the determinant of the quadratic-nonresidue indicator
/// circulant of odd prime dimension n:
///   n = 4k+1:  k^{(n-1)/2} * 2k
///   n = 4k+3:  (k+1)^{(n-1)/2} * (2k+1)
inline mpz_class legendre_det_formula(std::uint64_t n) {
    if (n < 3 || n % 2 == 0 || !detail::is_small_prime(n))
        throw std::invalid_argument("legendre_det_formula: n must be an odd prime");
    mpz_class r;
    if (n % 4 == 1) {
        std::uint64_t k = (n - 1) / 4;
        mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(k),
                      static_cast<unsigned long>((n - 1) / 2));
        r *= 2 * mpz_class(static_cast<unsigned long>(k));
    } else {
        std::uint64_t k = (n - 3) / 4;
        mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(k + 1),
                      static_cast<unsigned long>((n - 1) / 2));
        r *= mpz_class(static_cast<unsigned long>(2 * k + 1));
    }
    return r;
}

}  // namespace ffdyn
