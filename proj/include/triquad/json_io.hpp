#pragma once

#include "formulas.hpp"
#include "quad_forms.hpp"
#include "rank.hpp"

#include <json.hpp>

namespace triquad {

inline void to_json(nlohmann::json& j, const PrimeReport& p) {
    j = {{"p", p.p},
         {"mod8", p.mod8},
         {"mod16", p.mod16},
         {"quartic_2_over_p", p.quartic_2_over_p},
         {"quartic_p_over_2", p.quartic_p_over_2},
         {"chi_zeta", p.chi_zeta},
         {"chi_eps", p.chi_eps}};
}

inline void from_json(const nlohmann::json& j, PrimeReport& p) {
    j.at("p").get_to(p.p);
    j.at("mod8").get_to(p.mod8);
    j.at("mod16").get_to(p.mod16);
    j.at("quartic_2_over_p").get_to(p.quartic_2_over_p);
    j.at("quartic_p_over_2").get_to(p.quartic_p_over_2);
    j.at("chi_zeta").get_to(p.chi_zeta);
    j.at("chi_eps").get_to(p.chi_eps);
}

inline void to_json(nlohmann::json& j, const Classification& c) {
    j = {{"kind", to_string(c.kind)}, {"witness", c.witness}};
}

inline void from_json(const nlohmann::json& j, Classification& c) {
    c.kind = kind_from_string(j.at("kind").get<std::string>());
    j.at("witness").get_to(c.witness);
}

inline void to_json(nlohmann::json& j, const RankReport& r) {
    j = {{"input_d", r.input_d},
         {"d", r.d},
         {"primes", r.primes},
         {"t", r.t},
         {"e_matrix", r.e_matrix},
         {"e_cases", r.e_cases},
         {"rule", r.rule},
         {"rank", r.rank},
         {"classification", r.classification},
         {"agreement", r.agreement}};
}

inline void from_json(const nlohmann::json& j, RankReport& r) {
    j.at("input_d").get_to(r.input_d);
    j.at("d").get_to(r.d);
    j.at("primes").get_to(r.primes);
    j.at("t").get_to(r.t);
    j.at("e_matrix").get_to(r.e_matrix);
    j.at("e_cases").get_to(r.e_cases);
    j.at("rule").get_to(r.rule);
    j.at("rank").get_to(r.rank);
    j.at("classification").get_to(r.classification);
    j.at("agreement").get_to(r.agreement);
}

inline void to_json(nlohmann::json& j, const ClassNumberResult& c) {
    j = {{"m", c.m},         {"D", c.D},   {"h", c.h},
         {"h_narrow", c.h_narrow}, {"h2", c.h2}, {"unit_norm", c.unit_norm}};
}

inline void from_json(const nlohmann::json& j, ClassNumberResult& c) {
    j.at("m").get_to(c.m);
    j.at("D").get_to(c.D);
    j.at("h").get_to(c.h);
    j.at("h_narrow").get_to(c.h_narrow);
    j.at("h2").get_to(c.h2);
    j.at("unit_norm").get_to(c.unit_norm);
}

inline void to_json(nlohmann::json& j, const CrosscheckItem& c) {
    j = {{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}};
}

inline void from_json(const nlohmann::json& j, CrosscheckItem& c) {
    j.at("name").get_to(c.name);
    j.at("pass").get_to(c.pass);
    j.at("detail").get_to(c.detail);
}

inline void to_json(nlohmann::json& j, const CrosscheckReport& r) {
    j = {{"rank_report", r.rank_report},
         {"family", r.family},
         {"assumes_odd_plus_part", r.assumes_odd_plus_part},
         {"h2_divisible_by", r.h2_divisible_by},
         {"checks", r.checks},
         {"all_pass", r.all_pass}};
    if (r.h2)
        j["h2"] = *r.h2;
    else
        j["h2"] = nullptr;
}

inline void from_json(const nlohmann::json& j, CrosscheckReport& r) {
    j.at("rank_report").get_to(r.rank_report);
    j.at("family").get_to(r.family);
    j.at("assumes_odd_plus_part").get_to(r.assumes_odd_plus_part);
    j.at("h2_divisible_by").get_to(r.h2_divisible_by);
    j.at("checks").get_to(r.checks);
    j.at("all_pass").get_to(r.all_pass);
    if (j.at("h2").is_null())
        r.h2.reset();
    else
        r.h2 = j.at("h2").get<i64>();
}

// One CSV row per rank report; matches csv_header().
inline std::string csv_header() {
    return "input_d,d,t,e_matrix,e_cases,rule,rank,kind,agreement";
}

inline std::string csv_row(const RankReport& r) {
    std::string s;
    s += std::to_string(r.input_d) + ',' + std::to_string(r.d) + ',';
    s += std::to_string(r.t) + ',' + std::to_string(r.e_matrix) + ',';
    s += std::to_string(r.e_cases) + ',' + r.rule + ',';
    s += std::to_string(r.rank) + ',' + to_string(r.classification.kind) + ',';
    s += r.agreement ? "true" : "false";
    return s;
}

} // namespace triquad
