// Acceptance gate: one line per criterion, exit 0 iff all pass.
#include <triquad/triquad.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#ifndef README_PATH
#define README_PATH "README.md"
#endif

using namespace triquad;

namespace {

int failures = 0;

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double secs() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    }
};

void report(int n, const char* name, bool ok, double secs, double limit,
            const std::string& detail = "") {
    bool pass = ok && secs < limit;
    if (!pass)
        ++failures;
    std::printf("criterion %d: %s  %-34s %6.2f s (limit %g s)%s%s\n", n,
                pass ? "PASS" : "FAIL", name, secs, limit,
                detail.empty() ? "" : "  ", detail.c_str());
}

bool criterion1_rank_fixtures() {
    static const std::vector<std::pair<i64, int>> table = {
        {3, 0},      {5, 0},      {13, 0},     {7, 1},       {15, 1},
        {17, 2},     {21, 2},     {35, 2},     {119, 4},     {791, 5},
        {357, 5},    {595, 5},    {2373, 6},   {3955, 6},    {8249, 6},
        {29041, 7},  {630209, 9}, {734161, 10}, {10251473, 11},
    };
    for (auto [d, want] : table)
        if (rank2(d).rank != want)
            return false;
    return true;
}

bool criterion2_group_types() {
    bool any = false;
    for (const auto& fx : reference_fixtures()) {
        if (fx.group_type.empty())
            continue;
        any = true;
        int even = 0;
        for (i64 f : fx.group_type)
            if (f % 2 == 0)
                ++even;
        if (even != fx.expected_rank || even != rank2(fx.d).rank)
            return false;
    }
    return any;
}

bool criterion3_dual_path_sweep(i64 limit, i64* checked) {
    *checked = 0;
    for (i64 d = 3; d < limit; d += 2) {
        RankReport r;
        try {
            r = rank2(d);
        } catch (const not_squarefree_error&) {
            continue;
        }
        ++*checked;
        if (!r.agreement || r.e_matrix != r.e_cases ||
            r.rank != r.t - 1 - r.e_matrix)
            return false;
    }
    return true;
}

bool criterion4_classification() {
    for (i64 d : {i64(17), i64(21), i64(35), i64(19) * 23})
        if (classify(d).kind != Kind::Rank2Type22)
            return false;
    if (classify(i64(19) * 31).kind != Kind::Rank2NotElementary)
        return false;
    return h2_Ld_two_primes(19, 31) % 16 == 0;
}

bool criterion5_cornacchia(i64 limit, i64* checked) {
    *checked = 0;
    std::vector<bool> composite(limit, false);
    for (i64 i = 2; i * i < limit; ++i)
        if (!composite[i])
            for (i64 j = i * i; j < limit; j += i)
                composite[j] = true;
    for (i64 p = 17; p < limit; p += 8) {
        if (composite[p])
            continue;
        ++*checked;
        TwoSquares ts = sum_of_two_squares(p);
        if (jacobi(2, ts.a + ts.b) != quartic_2_over_p(p) * quartic_p_over_2(p))
            return false;
    }
    return true;
}

bool genus_bound_holds(i64 m, i64 capacity) {
    ClassNumberResult r = class_number(m, capacity);
    int mu = genus_mu(r.D);
    return r.h_narrow % (i64(1) << (mu - 1)) == 0;
}

bool criterion6_oracle_identities(i64* pairs) {
    *pairs = 0;
    if (h2_Ld_two_primes(5, 7) != 4)
        return false;
    const i64 cap = 10'000'000;
    for (i64 p = 5; p * 7 < 3000; p += 8) {
        if (!is_prime(p))
            continue;
        for (i64 q = 7; p * q < 3000; q += 8) {
            if (!is_prime(q))
                continue;
            ++*pairs;
            if (h2_Ld_two_primes(p, q, cap) != h2_biquad_sqrt2_minusd(p, q, cap))
                return false;
            i64 d = p * q;
            for (i64 m : {i64(-1), i64(2), i64(-2), d, -d, 2 * d, -2 * d})
                if (!genus_bound_holds(m, cap))
                    return false;
        }
    }
    return *pairs > 0;
}

bool criterion7_docs_note() {
    std::ifstream in(README_PATH);
    if (!in)
        return false;
    std::ostringstream ss;
    ss << in.rdbuf();
    std::string text = ss.str();
    return text.find("PARI/GP") != std::string::npos &&
           text.find("not recomputed") != std::string::npos;
}

} // namespace

int main() {
    {
        Timer t;
        bool ok = criterion1_rank_fixtures();
        report(1, "rank fixtures", ok, t.secs(), 1.0);
    }
    {
        Timer t;
        bool ok = criterion2_group_types();
        report(2, "group-type fixtures", ok, t.secs(), 1.0);
    }
    {
        Timer t;
        i64 checked = 0;
        bool ok = criterion3_dual_path_sweep(20000, &checked);
        report(3, "dual-path sweep d < 20000", ok, t.secs(), 30.0,
               std::to_string(checked) + " radicands");
    }
    {
        Timer t;
        bool ok = criterion4_classification();
        report(4, "classification fixtures", ok, t.secs(), 1.0);
    }
    {
        Timer t;
        i64 checked = 0;
        bool ok = criterion5_cornacchia(100000, &checked);
        report(5, "two-squares identity p < 1e5", ok, t.secs(), 5.0,
               std::to_string(checked) + " primes");
    }
    {
        Timer t;
        i64 pairs = 0;
        bool ok = criterion6_oracle_identities(&pairs);
        report(6, "class-number identities", ok, t.secs(), 60.0,
               std::to_string(pairs) + " prime pairs");
    }
    {
        Timer t;
        bool ok = criterion7_docs_note();
        report(7, "docs state fixture limitation", ok, t.secs(), 1.0);
    }
    std::printf("%s\n", failures == 0 ? "acceptance: ALL PASS"
                                      : "acceptance: FAILURES");
    return failures == 0 ? 0 : 1;
}
