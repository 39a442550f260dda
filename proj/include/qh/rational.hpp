/*
 * Copyright 2026 The qhurwitz authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <gmpxx.h>

#include <string>

namespace qh {

/// Exact rational scalar used throughout the symbolic layer.
/// No floating point appears anywhere outside the numeric soliton code.
using Rat = mpq_class;
using Int = mpz_class;

/// mpq_class(num, den) does not reduce the fraction; every ratio that is not
/// known to be coprime must go through here.
inline Rat frac(long num, long den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat frac(const Int& num, const Int& den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Int factorial(long n) {
    Int r = 1;
    for (long k = 2; k <= n; ++k) r *= k;
    return r;
}

inline Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Rat rat_pow(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    Rat b = e > 0 ? base : Rat(1) / base;
    unsigned long n = e > 0 ? e : -e;
    Rat r(1);
    while (n) {
        if (n & 1) r *= b;
        b *= b;
        n >>= 1;
    }
    return r;
}

inline std::string num_str(const Rat& r) { return r.get_num().get_str(); }
inline std::string den_str(const Rat& r) { return r.get_den().get_str(); }

}  // namespace qh
