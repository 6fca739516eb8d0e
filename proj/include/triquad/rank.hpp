#pragma once

#include "unit_index.hpp"

namespace triquad {

enum class Kind {
    Trivial,            // 2-class group of Q(zeta_8, sqrt(d)) is trivial
    CyclicNontrivial,   // cyclic of order >= 2
    Rank2Type22,        // isomorphic to Z/2 x Z/2
    Rank2NotElementary, // rank 2, order >= 8
    RankAtLeast3,
    OutsidePaper,       // input collapses to Q(zeta_8) itself
};

inline const char* to_string(Kind k) {
    switch (k) {
    case Kind::Trivial: return "Trivial";
    case Kind::CyclicNontrivial: return "CyclicNontrivial";
    case Kind::Rank2Type22: return "Rank2Type22";
    case Kind::Rank2NotElementary: return "Rank2NotElementary";
    case Kind::RankAtLeast3: return "RankAtLeast3";
    case Kind::OutsidePaper: return "OutsidePaper";
    }
    throw std::logic_error("to_string(Kind): unreachable");
}

inline Kind kind_from_string(const std::string& s) {
    for (Kind k : {Kind::Trivial, Kind::CyclicNontrivial, Kind::Rank2Type22,
                   Kind::Rank2NotElementary, Kind::RankAtLeast3, Kind::OutsidePaper})
        if (s == to_string(k))
            return k;
    throw input_error("unknown classification kind: " + s);
}

struct Classification {
    Kind kind;
    std::string witness; // matched structural case, human-readable
    bool operator==(const Classification&) const = default;
};

struct PrimeReport {
    i64 p = 0;
    int mod8 = 0;
    int mod16 = 0;
    int quartic_2_over_p = 0; // 0 when p != 1 (mod 8)
    int quartic_p_over_2 = 0; // 0 when p != 1 (mod 8)
    int chi_zeta = 0;
    int chi_eps = 0;
    bool operator==(const PrimeReport&) const = default;
};

struct RankReport {
    i64 input_d = 0;
    i64 d = 0; // canonical odd squarefree radicand; 1 when outside scope
    std::vector<PrimeReport> primes;
    int t = 0;
    int e_matrix = 0;
    int e_cases = 0;
    std::string rule;
    int rank = 0;
    Classification classification;
    bool agreement = true; // both paths and the closed-form rank concur
    bool operator==(const RankReport&) const = default;
};

namespace detail {

/* Rank-2 radicands match exactly five shapes; the (2,2) ones are carved out
 * by a quadratic-residue or quartic condition, every other rank-2 group has
 * order at least 8. */
inline Classification classify_rank2(const OddSquarefree& d) {
    const auto& ps = d.primes;
    if (ps.size() == 1) {
        i64 p = ps[0]; // p = 1 (mod 8) with p = 9 (mod 16) or quartics apart
        if (p % 16 == 1 && quartic_2_over_p(p) != quartic_p_over_2(p))
            return {Kind::Rank2Type22, "prime 1 mod 16, (2|p)_4 != (p|2)_4"};
        if (p % 16 == 9)
            return {Kind::Rank2NotElementary, "prime 9 mod 16 (8 divides h2)"};
    } else if (ps.size() == 2) {
        i64 a = ps[0] % 8, b = ps[1] % 8;
        if (a == 3 && b == 3)
            return {Kind::Rank2NotElementary, "two primes 3 mod 8 (8 divides h2)"};
        if (a == 5 && b == 5)
            return {Kind::Rank2NotElementary, "two primes 5 mod 8 (8 divides h2)"};
        if ((a == 3 && b == 7) || (a == 7 && b == 3)) {
            i64 q1 = a == 3 ? ps[0] : ps[1], q2 = a == 3 ? ps[1] : ps[0];
            if (jacobi(q1, q2) == -1)
                return {Kind::Rank2Type22, "primes 3 and 7 mod 8, (q1|q2) = -1"};
            return {Kind::Rank2NotElementary,
                    "primes 3 and 7 mod 8, (q1|q2) = +1 (16 divides h2)"};
        }
        if ((a == 5 && b == 7) || (a == 7 && b == 5)) {
            i64 p = a == 5 ? ps[0] : ps[1], q = a == 5 ? ps[1] : ps[0];
            if (jacobi(p, q) == -1)
                return {Kind::Rank2Type22, "primes 5 and 7 mod 8, (p|q) = -1"};
            return {Kind::Rank2NotElementary,
                    "primes 5 and 7 mod 8, (p|q) = +1 (16 divides h2)"};
        }
    }
    throw std::logic_error("classify_rank2: radicand outside the five rank-2 shapes");
}

inline Classification classify_from(const OddSquarefree& d, int rank) {
    if (rank == 0)
        return {Kind::Trivial,
                d.primes[0] % 8 == 3 ? "prime 3 mod 8" : "prime 5 mod 8"};
    if (rank == 1) {
        if (d.primes.size() == 1)
            return {Kind::CyclicNontrivial, "prime 7 mod 8"};
        return {Kind::CyclicNontrivial, "primes 3 and 5 mod 8"};
    }
    if (rank == 2)
        return classify_rank2(d);
    return {Kind::RankAtLeast3, "rank " + std::to_string(rank)};
}

/* The per-family closed forms, recomputed from (r, q, family) rather than
 * from t - 1 - e, as an independent cross-check. */
inline int closed_form_rank(const OddSquarefree& d, const CaseResult& cases) {
    int r = int(d.primes.size());
    int q = 0;
    bool has3 = false, has5 = false, has7 = false;
    for (i64 p : d.primes) {
        switch (p % 8) {
        case 1: ++q; break;
        case 3: has3 = true; break;
        case 5: has5 = true; break;
        default: has7 = true; break;
        }
    }
    int t = 2 * (q + r);
    if (!has3 && !has5 && !has7)
        return 4 * r - 1 - cases.e; // all divisors 1 (mod 8)
    if (q == 0 && !has5 && !has7)
        return 2 * r - 2; // all 3 (mod 8)
    if (q == 0 && !has3 && !has7)
        return 2 * r - 2; // all 5 (mod 8)
    if (q == 0 && !has3 && !has5)
        return 2 * r - 1; // all 7 (mod 8)
    if (has3 && has5)
        return t - 3;
    return t - 1 - cases.e; // remaining mixed families
}

} // namespace detail

inline RankReport rank2(i64 d0) {
    NormalizedRadicand n = normalize_radicand(d0);
    if (std::holds_alternative<UnitRadicand>(n)) {
        RankReport r;
        r.input_d = d0;
        r.d = 1;
        r.rule = "outside-scope";
        r.classification = {Kind::OutsidePaper, "radicand collapses to Q(zeta_8)"};
        return r;
    }
    const OddSquarefree& d = std::get<OddSquarefree>(n);
    RankReport r;
    r.input_d = d0;
    r.d = d.d;
    for (i64 p : d.primes) {
        PrimeReport pr;
        pr.p = p;
        pr.mod8 = int(p % 8);
        pr.mod16 = int(p % 16);
        if (p % 8 == 1) {
            pr.quartic_2_over_p = quartic_2_over_p(p);
            pr.quartic_p_over_2 = quartic_p_over_2(p);
        }
        SymbolPair s = symbol_pair(p);
        pr.chi_zeta = s.chi_zeta;
        pr.chi_eps = s.chi_eps;
        r.primes.push_back(pr);
    }
    r.t = ramified_count_t(d);
    r.e_matrix = e_via_matrix(d);
    CaseResult cases = e_via_cases(d);
    r.e_cases = cases.e;
    r.rule = cases.rule;
    r.rank = r.t - 1 - r.e_matrix;
    r.agreement =
        r.e_matrix == r.e_cases && r.rank == detail::closed_form_rank(d, cases);
    r.classification = detail::classify_from(d, r.rank);
    return r;
}

inline Classification classify(i64 d0) { return rank2(d0).classification; }

// h(L_d) is even exactly when the 2-class group is nontrivial.
inline bool class_number_even(i64 d0) { return rank2(d0).rank >= 1; }

} // namespace triquad
