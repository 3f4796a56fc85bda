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

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

#include "ffdyn/errors.hpp"

namespace ffdyn {

/// Complete prime factorization, primes strictly increasing.
struct IntFactorization {
    std::vector<std::pair<mpz_class, unsigned>> factors;

    mpz_class value() const {
        mpz_class v = 1;
        for (const auto& [p, e] : factors)
            for (unsigned i = 0; i < e; ++i) v *= p;
        return v;
    }
};

/// Deterministic Miller-Rabin. The witness set {2, 3, ..., 41} decides
/// primality correctly for every n < 3.3e24, far past anything in scope.
inline bool miller_rabin_is_prime(const mpz_class& n) {
    if (n < 2) return false;
    static const unsigned witnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
    for (unsigned w : witnesses) {
        if (n == w) return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), w)) return false;
    }
    mpz_class d = n - 1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
    for (unsigned w : witnesses) {
        mpz_class a = w, x;
        mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned long r = 1; r < s; ++r) {
            x = (x * x) % n;
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

namespace detail {

/// Brent-cycle Pollard rho; returns a nontrivial factor of odd composite n.
/// Deterministic: the polynomial offset c is bumped until a split appears.
inline mpz_class pollard_brent(const mpz_class& n) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), 2)) return 2;
    for (unsigned long c = 1;; ++c) {
        mpz_class y = 2, r = 1, q = 1, g = 1, x, ys;
        while (g == 1) {
            x = y;
            for (mpz_class i = 0; i < r; ++i) y = (y * y + c) % n;
            mpz_class k = 0;
            while (k < r && g == 1) {
                ys = y;
                mpz_class lim = r - k;
                if (lim > 128) lim = 128;
                for (mpz_class i = 0; i < lim; ++i) {
                    y = (y * y + c) % n;
                    mpz_class diff = x - y;
                    q = (q * abs(diff)) % n;
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += 128;
            }
            r *= 2;
        }
        if (g == n) {
            // backtrack one step at a time
            g = 1;
            while (g == 1) {
                ys = (ys * ys + c) % n;
                mpz_class diff = x - ys;
                mpz_gcd(g.get_mpz_t(), mpz_class(abs(diff)).get_mpz_t(), n.get_mpz_t());
            }
        }
        if (g != n && g != 1) return g;
        // this c failed (rare); try the next offset
    }
}

}  // namespace detail

/// Trial-division bound used before switching to Pollard rho.
inline constexpr std::uint64_t kTrialDivisionBound = 1000000;

/// Complete prime factorization of N >= 1; N = 1 gives the empty list.
/// Every returned prime is certified by deterministic Miller-Rabin.
inline IntFactorization int_factor(const mpz_class& N) {
    if (N < 1) throw std::invalid_argument("int_factor: N must be >= 1");
    std::map<mpz_class, unsigned> acc;
    mpz_class n = N;
    auto strip = [&](std::uint64_t f) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), f)) {
            ++acc[mpz_class(static_cast<unsigned long>(f))];
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), f);
        }
    };
    strip(2);
    strip(3);
    for (std::uint64_t f = 5; f <= kTrialDivisionBound && mpz_class(f) * f <= n; f += 6) {
        strip(f);
        strip(f + 2);
    }
    if (n > 1 && mpz_class(kTrialDivisionBound) * kTrialDivisionBound > n) {
        // cofactor below the square of the bound is prime
        ++acc[n];
        n = 1;
    }
    std::vector<mpz_class> stack;
    if (n > 1) stack.push_back(n);
    while (!stack.empty()) {
        mpz_class m = stack.back();
        stack.pop_back();
        if (miller_rabin_is_prime(m)) {
            ++acc[m];
            continue;
        }
        mpz_class f = detail::pollard_brent(m);
        stack.push_back(f);
        stack.push_back(m / f);
    }
    IntFactorization out;
    out.factors.assign(acc.begin(), acc.end());
    if (out.value() != N) throw internal_error("int_factor: factors do not multiply back to input");
    return out;
}

}  // namespace ffdyn
