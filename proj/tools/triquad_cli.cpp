#include <triquad/json_io.hpp>
#include <triquad/triquad.hpp>

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

using namespace triquad;

namespace {

// exit codes: 0 ok, 1 verification failure, 2 input error, 3 capacity error
constexpr int exit_ok = 0;
constexpr int exit_verification = 1;
constexpr int exit_input = 2;
constexpr int exit_capacity = 3;

void print_rank_text(const RankReport& r) {
    std::cout << "input_d  = " << r.input_d << "\n";
    std::cout << "d        = " << r.d;
    if (!r.primes.empty()) {
        std::cout << " = ";
        for (std::size_t i = 0; i < r.primes.size(); ++i)
            std::cout << (i ? " * " : "") << r.primes[i].p;
    }
    std::cout << "\n";
    if (r.classification.kind == Kind::OutsidePaper) {
        std::cout << "kind     = OutsidePaper (" << r.classification.witness << ")\n";
        return;
    }
    std::cout << "t        = " << r.t << "\n";
    std::cout << "e        = " << r.e_matrix << " (matrix), " << r.e_cases
              << " (cases)\n";
    std::cout << "rule     = " << r.rule << "\n";
    std::cout << "rank     = " << r.rank << "\n";
    std::cout << "kind     = " << to_string(r.classification.kind) << " ("
              << r.classification.witness << ")\n";
    std::cout << "agreement: " << (r.agreement ? "yes" : "NO") << "\n";
}

void print_symbols_text(const RankReport& r) {
    std::cout << "d = " << r.d << "\n";
    std::cout << "p\tmod8\tmod16\t(2|p)_4\t(p|2)_4\tchi_zeta\tchi_eps\n";
    for (const auto& p : r.primes) {
        std::cout << p.p << '\t' << p.mod8 << '\t' << p.mod16 << '\t';
        if (p.mod8 == 1)
            std::cout << (p.quartic_2_over_p > 0 ? "+1" : "-1") << '\t'
                      << (p.quartic_p_over_2 > 0 ? "+1" : "-1") << '\t';
        else
            std::cout << "-\t-\t";
        std::cout << (p.chi_zeta > 0 ? "+1" : "-1") << '\t'
                  << (p.chi_eps > 0 ? "+1" : "-1") << "\n";
    }
    std::cout << "row zeta:";
    for (const auto& p : r.primes)
        std::cout << ' ' << (p.chi_zeta < 0 ? 1 : 0);
    std::cout << "\nrow eps :";
    for (const auto& p : r.primes)
        std::cout << ' ' << (p.chi_eps < 0 ? 1 : 0);
    std::cout << "\ne = " << r.e_matrix << " (matrix), " << r.e_cases
              << " (cases)  rule: " << r.rule << "\n";
}

void print_class_number_text(const ClassNumberResult& c) {
    std::cout << "m         = " << c.m << "\n";
    std::cout << "D         = " << c.D << "\n";
    std::cout << "h         = " << c.h << "\n";
    if (c.m > 0) {
        std::cout << "h_narrow  = " << c.h_narrow << "\n";
        std::cout << "unit_norm = " << (c.unit_norm > 0 ? "+1" : "-1") << "\n";
    }
    std::cout << "h2        = " << c.h2 << "\n";
}

void print_crosscheck_text(const CrosscheckReport& r) {
    std::cout << "d       = " << r.rank_report.d << "  rank = " << r.rank_report.rank
              << "  kind = " << to_string(r.rank_report.classification.kind) << "\n";
    std::cout << "family  = " << r.family << "\n";
    if (r.h2)
        std::cout << "h2(L_d) = " << *r.h2
                  << (r.assumes_odd_plus_part ? "  (assumes odd h(L_p^+))" : "")
                  << "\n";
    else
        std::cout << "h2(L_d) = multiple of " << r.h2_divisible_by << "\n";
    for (const auto& c : r.checks)
        std::cout << (c.pass ? "ok   " : "FAIL ") << c.name << "  [" << c.detail
                  << "]\n";
    std::cout << (r.all_pass ? "all checks passed" : "CHECKS FAILED") << "\n";
}

struct ScanFilter {
    std::optional<Kind> kind;
    std::optional<int> rank;
};

ScanFilter parse_filters(const std::vector<std::string>& specs) {
    ScanFilter f;
    for (const auto& s : specs) {
        auto eq = s.find('=');
        if (eq == std::string::npos)
            throw input_error("filter must look like kind=... or rank=...: " + s);
        std::string key = s.substr(0, eq), val = s.substr(eq + 1);
        if (key == "kind")
            f.kind = kind_from_string(val);
        else if (key == "rank")
            f.rank = std::stoi(val);
        else
            throw input_error("unknown filter key: " + key);
    }
    return f;
}

int cmd_scan(i64 from, i64 to, const std::vector<std::string>& filter_specs,
             const std::string& format) {
    if (from <= 1 || from > to)
        throw input_error("need 1 < from <= to");
    ScanFilter filter = parse_filters(filter_specs);
    bool csv = format == "csv";
    if (csv)
        std::cout << csv_header() << "\n";
    for (i64 d = from | 1; d <= to; d += 2) {
        RankReport r;
        try {
            r = rank2(d);
        } catch (const not_squarefree_error&) {
            continue;
        }
        if (r.d != d)
            continue; // only canonical radicands
        if (filter.kind && r.classification.kind != *filter.kind)
            continue;
        if (filter.rank && r.rank != *filter.rank)
            continue;
        if (csv)
            std::cout << csv_row(r) << "\n";
        else
            std::cout << nlohmann::json(r).dump() << "\n";
    }
    return exit_ok;
}

int cmd_verify_paper(i64 sweep_limit) {
    int bad = 0;
    auto line = [&bad](bool ok, const std::string& what) {
        if (!ok)
            ++bad;
        std::cout << (ok ? "ok       " : "MISMATCH ") << what << "\n";
    };

    for (const auto& fx : reference_fixtures()) {
        RankReport r = rank2(fx.d);
        line(r.rank == fx.expected_rank && r.classification.kind == fx.expected_kind &&
                 r.agreement,
             "d=" + std::to_string(fx.d) + " rank " + std::to_string(r.rank) +
                 " (expected " + std::to_string(fx.expected_rank) + ") kind " +
                 to_string(r.classification.kind) + " [" + fx.source + "]");
        if (!fx.group_type.empty()) {
            int even = 0;
            for (i64 f : fx.group_type)
                if (f % 2 == 0)
                    ++even;
            line(even == r.rank, "d=" + std::to_string(fx.d) +
                                     " even invariant factors " + std::to_string(even) +
                                     " match rank " + std::to_string(r.rank));
        }
    }

    for (const auto& fx : quartic_fixtures())
        line(quartic_2_over_p(fx.p) == fx.two_over_p &&
                 quartic_p_over_2(fx.p) == fx.p_over_two,
             "p=" + std::to_string(fx.p) + " quartic symbols (" +
                 (fx.two_over_p > 0 ? "+1" : "-1") + ", " +
                 (fx.p_over_two > 0 ? "+1" : "-1") + ")");

    for (const auto& fx : h2_fixtures())
        line(class_number_2part(fx.m) == fx.h2,
             "m=" + std::to_string(fx.m) + " h2 = " + std::to_string(fx.h2));

    for (i64 d : {i64(35), i64(437), i64(589), i64(17), i64(97), i64(41), i64(65),
                  i64(33)}) {
        CrosscheckReport c = crosscheck(d);
        line(c.all_pass, "crosscheck d=" + std::to_string(d) + " family " + c.family);
    }

    i64 checked = 0, mismatches = 0;
    for (i64 d = 3; d < sweep_limit; d += 2) {
        RankReport r;
        try {
            r = rank2(d);
        } catch (const not_squarefree_error&) {
            continue;
        }
        ++checked;
        if (!r.agreement) {
            ++mismatches;
            line(false, "sweep d=" + std::to_string(d) + " dual paths disagree");
        }
    }
    line(mismatches == 0, "dual-path sweep over " + std::to_string(checked) +
                              " radicands below " + std::to_string(sweep_limit));

    std::cout << (bad == 0 ? "verify-paper: ALL PASS" : "verify-paper: FAILURES")
              << "\n";
    return bad == 0 ? exit_ok : exit_verification;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"2-class group rank of Q(zeta_8, sqrt(d)) with class-number "
                 "crosschecks"};
    app.require_subcommand(1);

    i64 d = 0, m = 0;
    i64 from = 3, to = 1000, capacity = 10'000'000, sweep_limit = 20000;
    bool json = false;
    std::vector<std::string> filter_specs;
    std::string format = "jsonl";

    auto* rank_cmd = app.add_subcommand("rank", "rank of the 2-class group for one d");
    rank_cmd->add_option("d", d, "radicand (sign and a factor 2 are dropped)")
        ->required();
    rank_cmd->add_flag("--json", json, "emit the full report as JSON");

    auto* classify_cmd =
        app.add_subcommand("classify", "family of the 2-class group for one d");
    classify_cmd->add_option("d", d, "radicand")->required();
    classify_cmd->add_flag("--json", json, "emit JSON");

    auto* symbols_cmd = app.add_subcommand(
        "symbols", "norm residue symbols of zeta_8 and 1+sqrt(2) at each prime");
    symbols_cmd->add_option("d", d, "radicand")->required();
    symbols_cmd->add_flag("--json", json, "emit JSON");

    auto* scan_cmd =
        app.add_subcommand("scan", "tabulate every canonical d in a range");
    scan_cmd->add_option("--from", from, "first radicand (> 1)")->required();
    scan_cmd->add_option("--to", to, "last radicand")->required();
    scan_cmd
        ->add_option("--filter", filter_specs,
                     "kind=<Kind> or rank=<n>; repeatable, all must hold")
        ->take_all();
    scan_cmd->add_option("--format", format, "jsonl (default) or csv")
        ->check(CLI::IsMember({"jsonl", "csv"}));

    auto* oracle_cmd = app.add_subcommand("oracle", "quadratic-field class numbers");
    oracle_cmd->require_subcommand(1);
    auto* oracle_h2 = oracle_cmd->add_subcommand(
        "h2", "class number of Q(sqrt(m)) by reduced-form counting");
    oracle_h2->add_option("m", m, "squarefree radicand, positive or negative")
        ->required();
    oracle_h2->add_option("--capacity", capacity,
                          "largest |discriminant| the oracle will enumerate");
    oracle_h2->add_flag("--json", json, "emit JSON");

    auto* crosscheck_cmd = app.add_subcommand(
        "crosscheck", "compare the rank prediction with class-number formulas");
    crosscheck_cmd->add_option("d", d, "radicand")->required();
    crosscheck_cmd->add_option("--capacity", capacity,
                               "class-number oracle capacity");
    crosscheck_cmd->add_flag("--json", json, "emit JSON");

    auto* verify_cmd = app.add_subcommand(
        "verify-paper", "run every embedded fixture and the dual-path sweep");
    verify_cmd->add_option("--sweep-limit", sweep_limit,
                           "upper bound of the dual-path agreement sweep");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_input;
    }

    try {
        if (rank_cmd->parsed()) {
            RankReport r = rank2(d);
            if (json)
                std::cout << nlohmann::json(r).dump(2) << "\n";
            else
                print_rank_text(r);
            return exit_ok;
        }
        if (classify_cmd->parsed()) {
            RankReport r = rank2(d);
            if (json) {
                nlohmann::json j = r.classification;
                j["d"] = r.d;
                j["input_d"] = r.input_d;
                j["rank"] = r.rank;
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << to_string(r.classification.kind) << " ("
                          << r.classification.witness << ")\n";
            }
            return exit_ok;
        }
        if (symbols_cmd->parsed()) {
            RankReport r = rank2(d);
            if (r.classification.kind == Kind::OutsidePaper)
                throw input_error("no ramified odd primes: d collapses to 1");
            if (json)
                std::cout << nlohmann::json(r).dump(2) << "\n";
            else
                print_symbols_text(r);
            return exit_ok;
        }
        if (scan_cmd->parsed())
            return cmd_scan(from, to, filter_specs, format);
        if (oracle_h2->parsed()) {
            ClassNumberResult c = class_number(m, capacity);
            if (json)
                std::cout << nlohmann::json(c).dump(2) << "\n";
            else
                print_class_number_text(c);
            return exit_ok;
        }
        if (crosscheck_cmd->parsed()) {
            CrosscheckReport r = crosscheck(d, capacity);
            if (json)
                std::cout << nlohmann::json(r).dump(2) << "\n";
            else
                print_crosscheck_text(r);
            return r.all_pass ? exit_ok : exit_verification;
        }
        if (verify_cmd->parsed())
            return cmd_verify_paper(sweep_limit);
    } catch (const capacity_error& e) {
        std::cerr << "capacity error: " << e.what() << "\n";
        return exit_capacity;
    } catch (const input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return exit_input;
    } catch (const formula_inconsistency& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return exit_verification;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return exit_verification;
    }
    return exit_input;
}
