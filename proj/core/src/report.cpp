#include "secantry/report.hpp"

#include <ostream>

#include "json.hpp"
#include "secantry/dejonq.hpp"

namespace secantry {

SweepRow make_sweep_row(const SecantProblem& P, const Verdict& v) {
    SweepRow row;
    row.g = P.base.g;
    row.r = P.base.r;
    row.d = P.base.d;
    row.e = P.e;
    row.f = P.f;
    row.rho = P.base.rho();
    row.s = P.base.speciality();
    row.expdim = expected_secant_dim(P);
    row.r_prime = P.r_prime();
    row.verdict = v.tag;
    row.rules = v.notes;
    if (P.r_prime() >= 0) {
        row.eq2_gap = eq2_sides(P).gap();
        row.dj_expected = dj_ef_expected(P);
    }
    return row;
}

std::vector<SweepRow> sweep_rows(const SweepBounds& bounds) {
    std::vector<SweepRow> rows;
    for (const auto& [problem, verdict] : sweep(bounds)) {
        rows.push_back(make_sweep_row(problem, verdict));
    }
    return rows;
}

std::string rules_string(const std::vector<Rule>& rules) {
    std::string out;
    for (std::size_t i = 0; i < rules.size(); ++i) {
        if (i > 0) out += ';';
        out += to_string(rules[i]);
    }
    return out;
}

namespace {

std::string opt_field(const std::optional<Int>& value) {
    return value ? std::to_string(*value) : std::string();
}

}  // namespace

void write_csv(std::ostream& os, std::span<const SweepRow> rows) {
    os << kSweepCsvHeader << '\n';
    for (const SweepRow& row : rows) {
        os << row.g << ',' << row.r << ',' << row.d << ',' << row.e << ',' << row.f << ','
           << row.rho << ',' << row.s << ',' << row.expdim << ',' << row.r_prime << ','
           << to_string(row.verdict) << ',' << rules_string(row.rules) << ','
           << opt_field(row.eq2_gap) << ',' << opt_field(row.dj_expected) << '\n';
    }
}

void write_json(std::ostream& os, std::span<const SweepRow> rows) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const SweepRow& row : rows) {
        nlohmann::ordered_json obj;
        obj["g"] = row.g;
        obj["r"] = row.r;
        obj["d"] = row.d;
        obj["e"] = row.e;
        obj["f"] = row.f;
        obj["rho"] = row.rho;
        obj["s"] = row.s;
        obj["expdim"] = row.expdim;
        obj["r_prime"] = row.r_prime;
        obj["verdict"] = std::string(to_string(row.verdict));
        obj["rules"] = rules_string(row.rules);
        if (row.eq2_gap) obj["eq2_gap"] = *row.eq2_gap; else obj["eq2_gap"] = nullptr;
        if (row.dj_expected) obj["dj_expected"] = *row.dj_expected; else obj["dj_expected"] = nullptr;
        arr.push_back(std::move(obj));
    }
    os << arr.dump() << '\n';
}

}  // namespace secantry
