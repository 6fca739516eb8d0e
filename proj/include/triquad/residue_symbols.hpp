#pragma once

#include "arith.hpp"

namespace triquad {

enum class PrimeClass { OneMod8, ThreeMod8, FiveMod8, SevenMod8 };

inline PrimeClass prime_class(i64 p) {
    if (p < 3 || p % 2 == 0)
        throw input_error("prime_class: need an odd prime");
    switch (p % 8) {
    case 1: return PrimeClass::OneMod8;
    case 3: return PrimeClass::ThreeMod8;
    case 5: return PrimeClass::FiveMod8;
    default: return PrimeClass::SevenMod8;
    }
}

/* Biquadratic character of 2 mod p for p = 1 (mod 8): since 2 is a square
 * mod p, 2^((p-1)/4) is +-1; the Euler value is (2|p)_4. */
inline int quartic_2_over_p(i64 p) {
    if (p % 8 != 1 || !is_prime(p))
        throw input_error("quartic_2_over_p: need a prime p = 1 (mod 8)");
    u64 r = mod_pow(2, u64((p - 1) / 4), u64(p));
    if (r == 1)
        return 1;
    if (r == u64(p) - 1)
        return -1;
    throw std::logic_error("quartic_2_over_p: 2 not a square mod p");
}

// (p|2)_4 = (-1)^((p-1)/8): +1 exactly when p = 1 (mod 16).
inline int quartic_p_over_2(i64 p) {
    if (p % 8 != 1 || !is_prime(p))
        throw input_error("quartic_p_over_2: need a prime p = 1 (mod 8)");
    return p % 16 == 1 ? 1 : -1;
}

/* Norm residue symbols (zeta_8, d / P) and (1+sqrt(2), d / P) at a prime P of
 * Q(zeta_8) over p, for odd p | d.  The value only depends on p: */
struct SymbolPair {
    int chi_zeta;
    int chi_eps;
};

inline SymbolPair symbol_pair(i64 p) {
    switch (prime_class(p)) {
    case PrimeClass::ThreeMod8: return {-1, -1};
    case PrimeClass::FiveMod8: return {-1, +1};
    case PrimeClass::SevenMod8: return {+1, +1};
    case PrimeClass::OneMod8:
        return {p % 16 == 1 ? +1 : -1, quartic_2_over_p(p) * quartic_p_over_2(p)};
    }
    throw std::logic_error("symbol_pair: unreachable");
}

/* Number of primes of Q(zeta_8) ramified in Q(zeta_8, sqrt(d)): each p | d
 * with p = 1 (mod 8) splits completely (4 primes above it), every other odd p
 * has 2 primes above it, and each contributes all of them. */
inline int ramified_count_t(const OddSquarefree& d) {
    int q = 0;
    for (i64 p : d.primes)
        if (p % 8 == 1)
            ++q;
    return 2 * (q + int(d.primes.size()));
}

} // namespace triquad
