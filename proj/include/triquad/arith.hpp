#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace triquad {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using u128 = unsigned __int128;

/* Error taxonomy.  input_error: the argument is mathematically outside the
 * operation's domain (CLI exit code 2).  capacity_error: the request is valid
 * but exceeds an enumeration bound (exit code 3).  formula_inconsistency: a
 * class-number product formula evaluated to a non-integer, i.e. the supplied
 * invariants cannot belong to a real field (treated as verification failure). */
struct input_error : std::domain_error {
    using std::domain_error::domain_error;
};
struct not_squarefree_error : input_error {
    using input_error::input_error;
};
struct not_covered_error : input_error {
    using input_error::input_error;
};
struct capacity_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct formula_inconsistency : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr i64 max_operand = i64(1) << 62;

inline u64 mul_mod(u64 a, u64 b, u64 m) { return u64(u128(a) * b % m); }

inline u64 mod_pow(u64 base, u64 exp, u64 mod) {
    if (mod == 0)
        throw input_error("mod_pow: zero modulus");
    u64 r = 1 % mod;
    base %= mod;
    while (exp) {
        if (exp & 1)
            r = mul_mod(r, base, mod);
        base = mul_mod(base, base, mod);
        exp >>= 1;
    }
    return r;
}

inline i64 isqrt(i64 n) {
    if (n < 0)
        throw input_error("isqrt: negative argument");
    i64 r = i64(std::sqrt(double(n)));
    while (r > 0 && r * r > n)
        --r;
    while ((r + 1) * (r + 1) <= n)
        ++r;
    return r;
}

namespace detail {

inline bool strong_probable_prime(u64 n, u64 a) {
    a %= n;
    if (a == 0)
        return true;
    u64 d = n - 1;
    int s = std::countr_zero(d);
    d >>= s;
    u64 x = mod_pow(a, d, n);
    if (x == 1 || x == n - 1)
        return true;
    for (int i = 1; i < s; ++i) {
        x = mul_mod(x, x, n);
        if (x == n - 1)
            return true;
    }
    return false;
}

} // namespace detail

// Deterministic Miller-Rabin, valid far beyond the 2^62 operand bound.
inline bool is_prime(i64 n) {
    if (n < 0 || n >= max_operand)
        throw input_error("is_prime: operand outside [0, 2^62)");
    if (n < 2)
        return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull})
        if (u64(n) % p == 0)
            return u64(n) == p;
    for (u64 a : {2ull, 325ull, 9375ull, 28178ull, 450775ull, 9780504ull, 1795265022ull})
        if (!detail::strong_probable_prime(u64(n), a))
            return false;
    return true;
}

// Jacobi symbol (a|n) for odd n > 0; 0 when gcd(a,n) > 1.
inline int jacobi(i64 a, i64 n) {
    if (n <= 0 || n % 2 == 0)
        throw input_error("jacobi: modulus must be positive and odd");
    a %= n;
    if (a < 0)
        a += n;
    int result = 1;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            if (n % 8 == 3 || n % 8 == 5)
                result = -result;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3)
            result = -result;
        a %= n;
    }
    return n == 1 ? result : 0;
}

namespace detail {

inline u64 gcd_u64(u64 a, u64 b) {
    while (b) {
        a %= b;
        std::swap(a, b);
    }
    return a;
}

// Brent-cycle Pollard rho; n odd composite with no small prime factor.
inline u64 pollard_rho(u64 n) {
    for (u64 c = 1;; ++c) {
        u64 x = 2, y = 2, q = 1, g = 1, xs = 0;
        u64 lam = 1;
        while (g == 1) {
            x = y;
            for (u64 i = 0; i < lam; ++i)
                y = (mul_mod(y, y, n) + c) % n;
            for (u64 k = 0; k < lam && g == 1; k += 128) {
                xs = y;
                u64 batch = std::min<u64>(128, lam - k);
                for (u64 i = 0; i < batch; ++i) {
                    y = (mul_mod(y, y, n) + c) % n;
                    q = mul_mod(q, x > y ? x - y : y - x, n);
                }
                g = gcd_u64(q, n);
            }
            lam *= 2;
        }
        if (g == n) {
            // batched gcd overshot: replay one step at a time
            g = 1;
            y = xs;
            while (g == 1) {
                y = (mul_mod(y, y, n) + c) % n;
                g = gcd_u64(x > y ? x - y : y - x, n);
            }
        }
        if (g != n)
            return g;
    }
}

inline void split_into_primes(u64 n, std::vector<i64>& out) {
    if (n == 1)
        return;
    if (is_prime(i64(n))) {
        out.push_back(i64(n));
        return;
    }
    u64 f = pollard_rho(n);
    split_into_primes(f, out);
    split_into_primes(n / f, out);
}

} // namespace detail

// Distinct prime divisors of odd squarefree d, ascending.
// Throws not_squarefree_error when a repeated factor shows up.
inline std::vector<i64> factor_odd_squarefree(i64 d) {
    if (d <= 1 || d >= max_operand || d % 2 == 0)
        throw input_error("factor_odd_squarefree: need odd d in (1, 2^62)");
    std::vector<i64> primes;
    u64 rem = u64(d);
    for (u64 f = 3; f < 1'000'000 && f * f <= rem; f += 2) {
        if (rem % f == 0) {
            rem /= f;
            if (rem % f == 0)
                throw not_squarefree_error("repeated prime factor " + std::to_string(f));
            primes.push_back(i64(f));
        }
    }
    if (rem > 1)
        detail::split_into_primes(rem, primes);
    std::sort(primes.begin(), primes.end());
    for (std::size_t i = 1; i < primes.size(); ++i)
        if (primes[i] == primes[i - 1])
            throw not_squarefree_error("repeated prime factor " + std::to_string(primes[i]));
    return primes;
}

/* Canonical radicand.  Q(zeta_8) already contains sqrt(2) and sqrt(-1), so
 * Q(zeta_8, sqrt(d0)) only depends on the odd squarefree part of |d0|.
 * UnitRadicand marks inputs that collapse to Q(zeta_8) itself. */
struct OddSquarefree {
    i64 input_d;            // as given, sign and factor 2 included
    i64 d;                  // odd squarefree, > 1
    std::vector<i64> primes; // ascending
};

struct UnitRadicand {
    i64 input_d;
};

using NormalizedRadicand = std::variant<OddSquarefree, UnitRadicand>;

inline NormalizedRadicand normalize_radicand(i64 d0) {
    if (d0 == 0)
        throw input_error("radicand must be nonzero");
    if (d0 <= -max_operand || d0 >= max_operand)
        throw input_error("radicand outside (-2^62, 2^62)");
    u64 m = d0 < 0 ? u64(-d0) : u64(d0);
    if (m % 2 == 0) {
        m /= 2;
        if (m % 2 == 0)
            throw not_squarefree_error("radicand divisible by 4");
    }
    if (m == 1)
        return UnitRadicand{d0};
    auto primes = factor_odd_squarefree(i64(m));
    return OddSquarefree{d0, i64(m), std::move(primes)};
}

// Decomposition p = a^2 + b^2 with a odd, b even, both positive (p prime, 1 mod 4).
struct TwoSquares {
    i64 a;
    i64 b;
};

inline TwoSquares sum_of_two_squares(i64 p) {
    if (p < 5 || p % 4 != 1 || !is_prime(p))
        throw input_error("sum_of_two_squares: need a prime p = 1 (mod 4)");
    i64 t = 2;
    while (jacobi(t, p) != -1)
        ++t;
    u64 x = mod_pow(u64(t), u64((p - 1) / 4), u64(p)); // x^2 = -1 (mod p)
    // Euclidean descent: first remainder below sqrt(p) is one leg
    u64 r0 = u64(p), r1 = x;
    while (u128(r1) * r1 > u128(p)) {
        u64 r2 = r0 % r1;
        r0 = r1;
        r1 = r2;
    }
    i64 a = i64(r1);
    i64 b = isqrt(p - a * a);
    if (b * b != p - a * a)
        throw std::logic_error("sum_of_two_squares: descent failed");
    if (a % 2 == 0)
        std::swap(a, b);
    return {a, b};
}

} // namespace triquad
