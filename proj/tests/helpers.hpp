#pragma once

// Test-only oracles. These stay independent of the production code paths they
// double-check.

#include <cstdint>
#include <vector>

#include "ffdyn/circulant.hpp"
#include "ffdyn/detail/rng.hpp"
#include "ffdyn/field.hpp"
#include "ffdyn/poly.hpp"

namespace test_helpers {

using namespace ffdyn;

/// Rank of a matrix over F_q by plain Gaussian elimination.
inline unsigned matrix_rank(const FieldCtx& F, std::vector<std::vector<FieldElement>> M) {
    if (M.empty()) return 0;
    const std::size_t rows = M.size(), cols = M[0].size();
    unsigned rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t piv = row;
        while (piv < rows && M[piv][col].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(M[piv], M[row]);
        FieldElement inv = F.inv(M[row][col]);
        for (std::size_t j = 0; j < cols; ++j) M[row][j] = F.mul(inv, M[row][j]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == row || M[i][col].is_zero()) continue;
            FieldElement f = M[i][col];
            for (std::size_t j = 0; j < cols; ++j)
                M[i][j] = F.sub(M[i][j], F.mul(f, M[row][j]));
        }
        ++row;
        ++rank;
    }
    return rank;
}

/// Rank of the circulant defined by a state vector (first column).
inline unsigned circulant_rank(const FieldCtx& F, const StateVector& x) {
    const unsigned n = static_cast<unsigned>(x.size());
    std::vector<std::vector<FieldElement>> M(n, std::vector<FieldElement>(n, F.zero()));
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) M[i][j] = x[(i + n - j) % n];
    return matrix_rank(F, M);
}

inline Poly random_poly(const FieldCtx& F, unsigned below_deg, detail::SplitMix64& rng) {
    std::vector<FieldElement> c;
    for (unsigned i = 0; i < below_deg; ++i) c.push_back(F.from_int(rng.below(F.q())));
    return Poly::from_coeffs(std::move(c));
}

inline FieldElement random_element(const FieldCtx& F, detail::SplitMix64& rng) {
    return F.from_int(rng.below(F.q()));
}

}  // namespace test_helpers
