#pragma once

#include "quad_forms.hpp"
#include "rank.hpp"

#include <optional>

namespace triquad {

namespace detail {

inline bool power_of_two(i64 x) { return x > 0 && (x & (x - 1)) == 0; }

} // namespace detail

/* 2-part class number of a multiquadratic field of degree 2^n from the
 * 2-parts of its 2^n - 1 quadratic subfields:
 *     h2(k) = q(k) * prod h2(k_i) / 2^v,
 *     v = n (2^(n-1) - 1)                      k real
 *     v = (n-1)(2^(n-2) - 1) + 2^(n-1) - 1     k imaginary
 * q(k) = [E_k : prod E_{k_i}] must be supplied by the caller. */
struct ProductFormulaInput {
    int n = 2;
    bool imaginary = false;
    i64 q_index = 1;
    std::vector<i64> subfield_h2;
};

inline i64 wada_h2(const ProductFormulaInput& in) {
    if (in.n < 2 || in.n > 20)
        throw input_error("wada_h2: need 2 <= n <= 20");
    if (!detail::power_of_two(in.q_index))
        throw input_error("wada_h2: unit index must be a positive power of two");
    if (in.subfield_h2.size() != (std::size_t(1) << in.n) - 1)
        throw input_error("wada_h2: expected 2^n - 1 subfield class numbers");
    for (i64 h : in.subfield_h2)
        if (!detail::power_of_two(h))
            throw input_error("wada_h2: subfield 2-parts must be powers of two");
    i64 v = in.imaginary
                ? i64(in.n - 1) * ((i64(1) << (in.n - 2)) - 1) + (i64(1) << (in.n - 1)) - 1
                : i64(in.n) * ((i64(1) << (in.n - 1)) - 1);
    u128 num = u128(in.q_index);
    for (i64 h : in.subfield_h2) {
        num *= u128(h);
        if (num >> 100)
            throw capacity_error("wada_h2: product overflow");
    }
    for (i64 i = 0; i < v; ++i) {
        if (num % 2 != 0)
            throw formula_inconsistency("wada_h2: 2^v does not divide the product");
        num /= 2;
    }
    return i64(num);
}

// Exact ratio of powers of two, for the unit-index and root-of-unity factors.
struct Pow2Ratio {
    i64 num = 1;
    i64 den = 1;
};

/* V4 step: h2 of the compositum from its three intermediate fields over a
 * common base,
 *   h2 = Q_ratio * omega_ratio * h2(k1) h2(k2) h2(k3) / h2(base)^2.  */
inline i64 kuroda_h2(i64 h2_k1, i64 h2_k2, i64 h2_k3, i64 h2_base,
                     Pow2Ratio q_ratio, Pow2Ratio omega_ratio) {
    for (i64 x : {h2_k1, h2_k2, h2_k3, h2_base, q_ratio.num, q_ratio.den,
                  omega_ratio.num, omega_ratio.den})
        if (!detail::power_of_two(x))
            throw input_error("kuroda_h2: all inputs must be positive powers of two");
    u128 num = u128(q_ratio.num) * omega_ratio.num;
    for (i64 f : {h2_k1, h2_k2, h2_k3}) {
        num *= u128(f);
        if (num >> 100)
            throw capacity_error("kuroda_h2: product overflow");
    }
    u128 den = u128(q_ratio.den) * omega_ratio.den * h2_base;
    den *= h2_base;
    if (num % den != 0)
        throw formula_inconsistency("kuroda_h2: non-integral class number");
    return i64(num / den);
}

/* h2 of Q(zeta_8, sqrt(pq)) for the two covered two-prime patterns
 * {5,7} and {3,7} (mod 8), where the unit index q(L_d) = 4:
 *   h2(L_d) = 4/2^5 * prod over the seven quadratic subfields
 *           = 1/8 * h2(pq) h2(-pq) h2(2pq) h2(-2pq).  */
inline i64 h2_Ld_two_primes(i64 p, i64 q, i64 capacity = 10'000'000) {
    if (p == q || p < 3 || q < 3 || !is_prime(p) || !is_prime(q))
        throw input_error("h2_Ld_two_primes: need two distinct odd primes");
    int a = int(p % 8), b = int(q % 8);
    bool covered = (a == 5 && b == 7) || (a == 7 && b == 5) ||
                   (a == 3 && b == 7) || (a == 7 && b == 3);
    if (!covered)
        throw not_covered_error("h2_Ld_two_primes: pattern {" + std::to_string(a) +
                                "," + std::to_string(b) + "} mod 8 not covered");
    i64 d = p * q;
    ProductFormulaInput in;
    in.n = 3;
    in.imaginary = true;
    in.q_index = 4;
    for (i64 m : {i64(-1), i64(2), i64(-2), d, -d, 2 * d, -2 * d})
        in.subfield_h2.push_back(class_number_2part(m, capacity));
    return wada_h2(in);
}

namespace detail {

// h2 of the imaginary biquadratic field Q(sqrt(2), sqrt(-d)), d odd
// squarefree > 1.  Its only real quadratic subfield is Q(sqrt(2)) whose
// fundamental unit has norm -1, so q = 1.
inline i64 h2_sqrt2_imag(i64 d, i64 capacity) {
    ProductFormulaInput in;
    in.n = 2;
    in.imaginary = true;
    in.q_index = 1;
    for (i64 m : {i64(2), -d, -2 * d})
        in.subfield_h2.push_back(class_number_2part(m, capacity));
    return wada_h2(in);
}

} // namespace detail

// For p = 5, q = 7 (mod 8): h2(Q(zeta_8, sqrt(pq))) equals
// h2(Q(sqrt(2), sqrt(-pq))); this evaluates the right-hand side.
inline i64 h2_biquad_sqrt2_minusd(i64 p, i64 q, i64 capacity = 10'000'000) {
    if (p < 3 || q < 3 || !is_prime(p) || !is_prime(q))
        throw input_error("h2_biquad_sqrt2_minusd: need two odd primes");
    int a = int(p % 8), b = int(q % 8);
    if (!((a == 5 && b == 7) || (a == 7 && b == 5)))
        throw not_covered_error("h2_biquad_sqrt2_minusd: need pattern {5,7} mod 8");
    return detail::h2_sqrt2_imag(p * q, capacity);
}

/* 2-rank of the class group of Q(sqrt(m), i), m squarefree, |m| > 1:
 * with S the odd primes dividing m, S0 those 1 (mod 4),
 *   s + s0      m even, every p in S0 is 1 (mod 8)
 *   s + s0 - 1  m even with some p = 5 (mod 8), or m odd with none
 *   s + s0 - 2  m odd with some p = 5 (mod 8).  */
inline int parry_rank(i64 m) {
    if (m == 0 || m == 1 || m == -1)
        throw input_error("parry_rank: need squarefree m with |m| > 1");
    i64 am = m < 0 ? -m : m;
    bool even = am % 2 == 0;
    if (even) {
        am /= 2;
        if (am % 2 == 0)
            throw not_squarefree_error("parry_rank: radicand divisible by 4");
    }
    std::vector<i64> odd_primes;
    if (am > 1)
        odd_primes = factor_odd_squarefree(am);
    int s = int(odd_primes.size());
    int s0 = 0;
    bool has5 = false;
    for (i64 p : odd_primes)
        if (p % 4 == 1) {
            ++s0;
            has5 = has5 || p % 8 == 5;
        }
    if (even)
        return has5 ? s + s0 - 1 : s + s0;
    return has5 ? s + s0 - 2 : s + s0 - 1;
}

struct CrosscheckItem {
    std::string name;
    bool pass = false;
    std::string detail;
    bool operator==(const CrosscheckItem&) const = default;
};

/* Everything the class-number side can say about one radicand, checked
 * against the rank prediction. */
struct CrosscheckReport {
    RankReport rank_report;
    std::string family;
    std::optional<i64> h2;        // exact h2(L_d) where a covered product formula applies
    bool assumes_odd_plus_part = false; // h2 relies on h(L_p^+) being odd
    i64 h2_divisible_by = 1;
    std::vector<CrosscheckItem> checks;
    bool all_pass = true;
};

inline CrosscheckReport crosscheck(i64 d0, i64 capacity = 10'000'000) {
    CrosscheckReport rep;
    rep.rank_report = rank2(d0);
    const RankReport& rr = rep.rank_report;

    auto add = [&rep](const std::string& name, bool pass, const std::string& detail) {
        rep.checks.push_back({name, pass, detail});
        rep.all_pass = rep.all_pass && pass;
    };

    if (rr.classification.kind == Kind::OutsidePaper) {
        rep.family = "outside-scope";
        rep.h2 = 1; // L_d is Q(zeta_8), class number 1
        add("rank-agreement", rr.agreement, "dual-path rank computation");
        return rep;
    }
    add("rank-agreement", rr.agreement, "dual-path rank computation");
    rep.h2_divisible_by = i64(1) << rr.rank; // 2^rank always divides h2

    const auto& ps = rr.primes;
    bool type22 = rr.classification.kind == Kind::Rank2Type22;

    auto check_h2 = [&](i64 h2) {
        rep.h2 = h2;
        add("2^rank-divides-h2", h2 % (i64(1) << rr.rank) == 0,
            "h2 = " + std::to_string(h2) + ", rank = " + std::to_string(rr.rank));
        add("type-(2,2)-iff-h2-is-4", type22 == (h2 == 4),
            "classified " + std::string(to_string(rr.classification.kind)) +
                ", h2 = " + std::to_string(h2));
    };

    if (ps.size() == 2) {
        int a = ps[0].mod8, b = ps[1].mod8;
        i64 p = ps[0].p, q = ps[1].p;
        bool pat57 = (a == 5 && b == 7) || (a == 7 && b == 5);
        bool pat37 = (a == 3 && b == 7) || (a == 7 && b == 3);
        if (pat57 || pat37) {
            rep.family = pat57 ? "two-primes-5-7" : "two-primes-3-7";
            i64 h2 = h2_Ld_two_primes(p, q, capacity);
            check_h2(h2);
            // symbol taken with the 5- resp. 3-class prime on top; for the
            // {3,7} pattern both primes are 3 (mod 4) and the order matters
            i64 top = (a == 5 || a == 3) ? p : q;
            i64 bottom = top == p ? q : p;
            if (jacobi(top, bottom) == 1) {
                rep.h2_divisible_by = 16;
                add("16-divides-h2", h2 % 16 == 0, "(p|q) = +1 branch");
            }
            i64 biquad = detail::h2_sqrt2_imag(p * q, capacity);
            if (pat57)
                add("matches-sqrt2-biquad", h2 == biquad,
                    "h2(Q(sqrt 2, sqrt -d)) = " + std::to_string(biquad));
            else
                add("half-of-sqrt2-biquad", 2 * h2 == biquad,
                    "h2(Q(sqrt 2, sqrt -d)) = " + std::to_string(biquad));
            return rep;
        }
        if (a == 5 && b == 5) {
            rep.family = "two-primes-5-5";
            // V4 over Q(i): h2(L_d) = 1/4 * Q * h2(Q(i,sqrt 2d)) h2(Q(i,sqrt d)),
            // Q >= 1, with 2-rank lower bounds 3 and 2 for the two factors
            rep.h2_divisible_by = 8;
            add("aux-rank-sqrt-2d", parry_rank(2 * p * q) == 3,
                "rank Cl2(Q(i, sqrt 2d)) = " + std::to_string(parry_rank(2 * p * q)));
            add("aux-rank-sqrt-d", parry_rank(p * q) == 2,
                "rank Cl2(Q(i, sqrt d)) = " + std::to_string(parry_rank(p * q)));
            return rep;
        }
        if (a == 3 && b == 3) {
            rep.family = "two-primes-3-3";
            // same V4 step; here the structure of Cl2(Q(i, sqrt 2d))
            // upgrades its order to >= 16, giving 8 | h2(L_d)
            rep.h2_divisible_by = 8;
            add("aux-rank-sqrt-d", parry_rank(p * q) == 1,
                "rank Cl2(Q(i, sqrt d)) = " + std::to_string(parry_rank(p * q)));
            add("aux-rank-sqrt-2d", parry_rank(2 * p * q) == 2,
                "rank Cl2(Q(i, sqrt 2d)) = " + std::to_string(parry_rank(2 * p * q)));
            return rep;
        }
    }
    if (ps.size() == 1 && ps[0].mod8 == 1) {
        i64 p = ps[0].p;
        if (ps[0].quartic_2_over_p != ps[0].quartic_p_over_2) {
            // h(L_p^+) odd here, so h2(L_p) = h2(Q(sqrt -2p))
            rep.family = "prime-1-mod-8-quartics-differ";
            rep.assumes_odd_plus_part = true;
            check_h2(class_number_2part(-2 * p, capacity));
            return rep;
        }
        if (p % 16 == 9) {
            rep.family = "prime-9-mod-16-quartics-agree";
            rep.h2_divisible_by = 8; // rank 2 with order at least 8
            return rep;
        }
    }
    rep.family = "rank-only";
    return rep;
}

} // namespace triquad
