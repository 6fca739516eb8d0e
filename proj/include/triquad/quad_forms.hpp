#pragma once

#include "arith.hpp"

#include <numeric>
#include <set>

namespace triquad {

/* Integral binary quadratic form a x^2 + b xy + c y^2. */
struct BinaryQuadraticForm {
    i64 a = 0, b = 0, c = 0;
    i64 disc() const { return b * b - 4 * a * c; }
    bool primitive() const { return std::gcd(std::gcd(a, b), c) == 1; }
    auto operator<=>(const BinaryQuadraticForm&) const = default;
};

// m squarefree, m != 0, 1: discriminant of Q(sqrt(m)).
inline i64 fundamental_discriminant(i64 m) {
    if (m == 0 || m == 1)
        throw input_error("fundamental_discriminant: need squarefree m != 0, 1");
    i64 am = m < 0 ? -m : m;
    if (am % 2 == 0) {
        if ((am / 2) % 2 == 0)
            throw not_squarefree_error("radicand divisible by 4");
        if (am / 2 > 1)
            factor_odd_squarefree(am / 2);
    } else if (am > 1) {
        factor_odd_squarefree(am);
    }
    return ((m % 4) + 4) % 4 == 1 ? m : 4 * m;
}

// Count of prime discriminants multiplying to D (genus theory: 2^(mu-1)
// divides the narrow class number).
inline int genus_mu(i64 D) {
    i64 a = D < 0 ? -D : D;
    int mu = 0;
    if (a % 2 == 0) {
        mu = 1; // one even prime discriminant: -4, 8 or -8
        a /= 4;
        if (a % 2 == 0)
            a /= 2;
    }
    for (i64 f = 3; f * f <= a; f += 2)
        if (a % f == 0) {
            ++mu;
            a /= f;
        }
    if (a > 1)
        ++mu;
    return mu;
}

namespace detail {

// Reduced positive-definite forms: |b| <= a <= c with b >= 0 when |b| = a
// or a = c; one per class.
inline i64 count_reduced_imaginary(i64 D) {
    i64 count = 0;
    for (i64 b = (D % 2 == 0 ? 0 : 1); b * b <= -D / 3; b += 2) {
        i64 t = (b * b - D) / 4; // = a*c
        for (i64 a = std::max<i64>(b, 1); a * a <= t; ++a) {
            if (t % a != 0)
                continue;
            i64 c = t / a;
            if (std::gcd(std::gcd(a, b), c) != 1)
                continue;
            count += (b > 0 && b < a && a < c) ? 2 : 1; // +-b both reduced
        }
    }
    return count;
}

// Indefinite reduced: 0 < b < sqrt(D) and sqrt(D) - b < 2|a| < sqrt(D) + b
// (the |c| window follows).  Exact integer comparisons against D.
inline bool reduced_window(i64 two_abs_a, i64 b, i64 D) {
    bool lower = D < (two_abs_a + b) * (two_abs_a + b);
    bool upper = two_abs_a <= b || (two_abs_a - b) * (two_abs_a - b) < D;
    return lower && upper;
}

inline std::vector<BinaryQuadraticForm> reduced_indefinite_forms(i64 D) {
    std::vector<BinaryQuadraticForm> forms;
    i64 s = isqrt(D);
    for (i64 b = (D % 2 == 0 ? 2 : 1); b <= s; b += 2) {
        i64 t = (D - b * b) / 4; // = |a*c|, sign(a) = -sign(c)
        if (t == 0)
            continue;
        for (i64 u = 1; u * u <= t; ++u) {
            if (t % u != 0)
                continue;
            for (i64 au : {u, t / u}) {
                i64 cu = t / au;
                if (reduced_window(2 * au, b, D) &&
                    std::gcd(std::gcd(au, b), cu) == 1) {
                    forms.push_back({au, b, -cu});
                    forms.push_back({-au, b, cu});
                }
                if (u == t / u)
                    break; // square t: both orientations coincide
            }
        }
    }
    std::sort(forms.begin(), forms.end());
    forms.erase(std::unique(forms.begin(), forms.end()), forms.end());
    return forms;
}

// Reduction-step neighbour: rho(a,b,c) = (c, r, (r^2-D)/(4c)) with
// r = -b (mod 2|c|) chosen in (sqrt(D) - 2|c|, sqrt(D)).
inline BinaryQuadraticForm rho_indefinite(const BinaryQuadraticForm& f, i64 D, i64 s) {
    i64 ac = f.c < 0 ? -f.c : f.c;
    i64 m = 2 * ac;
    i64 r = ((-f.b) % m + m) % m; // in [0, m)
    // unique representative in (s - m, s], s = floor(sqrt(D)), D non-square
    if (r > s)
        r -= m;
    else
        r += ((s - r) / m) * m;
    i64 c2 = (r * r - D) / (4 * f.c);
    return {f.c, r, c2};
}

} // namespace detail

/* Class number data for Q(sqrt(m)), computed by reduced-form enumeration.
 * h2 is the 2-part of h; unit_norm is the norm of the fundamental unit
 * (real fields), 0 otherwise. */
struct ClassNumberResult {
    i64 m = 0;
    i64 D = 0;
    i64 h = 0;
    i64 h_narrow = 0;
    i64 h2 = 0;
    int unit_norm = 0;
    bool operator==(const ClassNumberResult&) const = default;
};

// Norm of the fundamental unit of Q(sqrt(m)), m squarefree > 1: -1 exactly
// when the continued fraction of sqrt(m) has odd period.
inline int fundamental_unit_norm(i64 m) {
    if (m <= 1)
        throw input_error("fundamental_unit_norm: need m > 1");
    i64 a0 = isqrt(m);
    if (a0 * a0 == m)
        throw input_error("fundamental_unit_norm: square radicand");
    i64 P = a0, Q = m - a0 * a0;
    int len = 1;
    while (Q != 1) {
        i64 a = (a0 + P) / Q;
        P = a * Q - P;
        Q = (m - P * P) / Q;
        ++len;
    }
    return len % 2 ? -1 : +1;
}

inline ClassNumberResult class_number(i64 m, i64 capacity = 10'000'000) {
    ClassNumberResult res;
    res.m = m;
    res.D = fundamental_discriminant(m);
    i64 aD = res.D < 0 ? -res.D : res.D;
    if (aD > capacity)
        throw capacity_error("discriminant " + std::to_string(res.D) +
                             " beyond enumeration bound " + std::to_string(capacity));
    if (res.D < 0) {
        res.h = detail::count_reduced_imaginary(res.D);
        res.h_narrow = res.h;
        res.unit_norm = 0;
    } else {
        auto forms = detail::reduced_indefinite_forms(res.D);
        i64 s = isqrt(res.D);
        std::set<BinaryQuadraticForm> left(forms.begin(), forms.end());
        i64 cycles = 0;
        while (!left.empty()) {
            ++cycles;
            BinaryQuadraticForm start = *left.begin();
            BinaryQuadraticForm f = start;
            std::size_t steps = 0;
            do {
                if (left.erase(f) == 0 || ++steps > forms.size())
                    throw std::logic_error("rho walk left the reduced set");
                f = detail::rho_indefinite(f, res.D, s);
            } while (f != start);
        }
        res.h_narrow = cycles;
        res.unit_norm = fundamental_unit_norm(m);
        if (res.unit_norm == -1) {
            res.h = res.h_narrow;
        } else {
            if (res.h_narrow % 2 != 0)
                throw std::logic_error("narrow class number odd with unit norm +1");
            res.h = res.h_narrow / 2;
        }
    }
    if (res.h <= 0)
        throw std::logic_error("class_number: nonpositive count");
    res.h2 = 1;
    i64 h = res.h;
    while (h % 2 == 0) {
        res.h2 *= 2;
        h /= 2;
    }
    // genus bound: 2^(mu-1) divides the narrow class number
    i64 bound = i64(1) << (genus_mu(res.D) - 1);
    if (res.h_narrow % bound != 0)
        throw std::logic_error("class_number: genus bound violated");
    return res;
}

inline i64 class_number_2part(i64 m, i64 capacity = 10'000'000) {
    return class_number(m, capacity).h2;
}

} // namespace triquad
