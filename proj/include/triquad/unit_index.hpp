#pragma once

#include "residue_symbols.hpp"

#include <string>

namespace triquad {

/* F2 matrix of norm residue symbols: one column per prime divisor of d, row
 * order (zeta_8, 1+sqrt(2)).  An entry is set exactly when the symbol is -1.
 * e_d = log2 [E_K : E_K cap N(L_d)] is its rank, because a unit is a norm iff
 * all its symbols vanish and the symbol vectors of the two generators span
 * the image of E_K in the product of local square classes. */
struct SymbolMatrix {
    std::vector<i64> primes;
    std::vector<bool> row_zeta;
    std::vector<bool> row_eps;
};

inline SymbolMatrix symbol_matrix(const OddSquarefree& d) {
    SymbolMatrix m;
    m.primes = d.primes;
    m.row_zeta.reserve(d.primes.size());
    m.row_eps.reserve(d.primes.size());
    for (i64 p : d.primes) {
        SymbolPair s = symbol_pair(p);
        m.row_zeta.push_back(s.chi_zeta == -1);
        m.row_eps.push_back(s.chi_eps == -1);
    }
    return m;
}

// Gaussian elimination over F2, rows as bit vectors.
inline int f2_rank(std::vector<std::vector<bool>> rows) {
    if (rows.empty())
        return 0;
    std::size_t cols = rows[0].size();
    int rank = 0;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < cols && pivot_row < rows.size(); ++col) {
        std::size_t sel = pivot_row;
        while (sel < rows.size() && !rows[sel][col])
            ++sel;
        if (sel == rows.size())
            continue;
        std::swap(rows[sel], rows[pivot_row]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r != pivot_row && rows[r][col])
                for (std::size_t c = col; c < cols; ++c)
                    rows[r][c] = rows[r][c] ^ rows[pivot_row][c];
        }
        ++pivot_row;
        ++rank;
    }
    return rank;
}

inline int e_via_matrix(const OddSquarefree& d) {
    SymbolMatrix m = symbol_matrix(d);
    return f2_rank({m.row_zeta, m.row_eps});
}

struct CaseResult {
    int e;
    std::string rule;
};

namespace detail {

/* Case analysis for d whose prime divisors are all 1 (mod 8), stated purely
 * in terms of two per-prime predicates:
 *   nine[i]  : p_i = 9 (mod 16)
 *   diff[i]  : (2|p_i)_4 != (p_i|2)_4
 * e = 0 iff no prime has either flag; e = 2 iff some pair i != j has nine[i],
 * diff[j] and (not diff[i] or not nine[j]); otherwise e = 1, split into three
 * sub-cases kept exactly as stated (couples (i,j) may have i = j here). */
inline CaseResult e_cases_all_one_mod8(const std::vector<i64>& primes) {
    std::size_t n = primes.size();
    std::vector<bool> nine(n), diff(n);
    for (std::size_t i = 0; i < n; ++i) {
        nine[i] = primes[i] % 16 == 9;
        diff[i] = quartic_2_over_p(primes[i]) != quartic_p_over_2(primes[i]);
    }
    bool any_nine = false, any_diff = false;
    for (std::size_t i = 0; i < n; ++i) {
        any_nine = any_nine || nine[i];
        any_diff = any_diff || diff[i];
    }
    if (!any_nine && !any_diff)
        return {0, "all-1-mod-8/e0:no-9-mod-16+quartics-agree"};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && nine[i] && diff[j] && (!diff[i] || !nine[j]))
                return {2, "all-1-mod-8/e2:independent-9-mod-16-and-quartic-diff"};
    if (!any_nine)
        return {1, "all-1-mod-8/e1:no-9-mod-16+some-quartics-differ"};
    if (!any_diff)
        return {1, "all-1-mod-8/e1:some-9-mod-16+quartics-agree"};
    // remaining sub-case: every couple (i,j) with nine[i], diff[j] also has
    // diff[i] and nine[j]
    bool exists = false, all_coupled = true;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (nine[i] && diff[j]) {
                exists = true;
                all_coupled = all_coupled && diff[i] && nine[j];
            }
    if (exists && all_coupled)
        return {1, "all-1-mod-8/e1:coupled-9-mod-16-and-quartic-diff"};
    throw std::logic_error("e_cases_all_one_mod8: dispatch gap");
}

} // namespace detail

/* Closed-form evaluation of e_d by residue-class dispatch, independent of the
 * symbol matrix.  Returns the value with an identifier of the applied rule. */
inline CaseResult e_via_cases(const OddSquarefree& d) {
    bool has3 = false, has5 = false, has7 = false;
    std::vector<i64> ones;
    for (i64 p : d.primes) {
        switch (p % 8) {
        case 3: has3 = true; break;
        case 5: has5 = true; break;
        case 7: has7 = true; break;
        default: ones.push_back(p);
        }
    }
    bool has1 = !ones.empty();
    if (has3 && !has5 && !has7 && !has1)
        return {1, "all-primes-3-mod-8"};
    if (has5 && !has3 && !has7 && !has1)
        return {1, "all-primes-5-mod-8"};
    if (has7 && !has3 && !has5 && !has1)
        return {0, "all-primes-7-mod-8"};
    if (has1 && !has3 && !has5 && !has7)
        return detail::e_cases_all_one_mod8(ones);
    if (has3 && has5)
        return {2, "mixed-3-and-5-mod-8"};
    if (has3) { // no 5 (mod 8) divisor
        for (i64 p : ones)
            if (quartic_2_over_p(p) == -1)
                return {2, "mixed-3-no-5/quartic-minus-one-present"};
        return {1, "mixed-3-no-5/no-quartic-minus-one"};
    }
    if (has5) { // no 3 (mod 8) divisor
        for (i64 p : ones)
            if (quartic_2_over_p(p) != quartic_p_over_2(p))
                return {2, "mixed-5-no-3/quartic-pair-unequal-present"};
        return {1, "mixed-5-no-3/quartic-pairs-equal"};
    }
    // all divisors +-1 (mod 8), both classes present: only the 1 (mod 8)
    // part contributes (primes 7 (mod 8) have trivial symbol pairs)
    CaseResult inner = detail::e_cases_all_one_mod8(ones);
    return {inner.e, "mixed-pm1-mod-8[" + inner.rule + "]"};
}

} // namespace triquad
