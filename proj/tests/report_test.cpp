#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "secantry/report.hpp"

using namespace secantry;

namespace {

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, ',')) fields.push_back(field);
    // A trailing empty field is not produced by getline; pad to 13.
    while (fields.size() < 13) fields.emplace_back();
    return fields;
}

}  // namespace

TEST_CASE("csv header and anchored row") {
    const SecantProblem P(SeriesParams(12, 5, 15), 4, 1);
    const std::vector<SweepRow> rows = {make_sweep_row(P, classify(P))};
    std::ostringstream os;
    write_csv(os, rows);
    const auto lines = split_lines(os.str());
    REQUIRE(lines.size() == 2);
    CHECK(lines[0] == "g,r,d,e,f,rho,s,expdim,r_prime,verdict,rules,eq2_gap,dj_expected");
    CHECK(lines[1] == "12,5,15,4,1,0,2,1,2,EmptyThm1i,thm1i;cor5,1,-1");
}

TEST_CASE("rows with r' < 0 leave the derived columns blank") {
    const SecantProblem P(SeriesParams(12, 5, 15), 8, 1);
    REQUIRE(P.r_prime() < 0);
    const SweepRow row = make_sweep_row(P, classify(P));
    CHECK_FALSE(row.eq2_gap.has_value());
    CHECK_FALSE(row.dj_expected.has_value());
    std::ostringstream os;
    write_csv(os, {&row, 1});
    const auto fields = split_fields(split_lines(os.str())[1]);
    CHECK(fields[11].empty());
    CHECK(fields[12].empty());
}

TEST_CASE("csv and json carry identical data") {
    const auto rows = sweep_rows({8, 4, 10, 5});
    std::ostringstream csv_os, json_os;
    write_csv(csv_os, rows);
    write_json(json_os, rows);

    const auto lines = split_lines(csv_os.str());
    const auto parsed = nlohmann::json::parse(json_os.str());
    REQUIRE(parsed.is_array());
    REQUIRE(parsed.size() == lines.size() - 1);

    const std::vector<std::string> keys = {"g", "r", "d", "e", "f", "rho", "s", "expdim",
                                           "r_prime", "verdict", "rules", "eq2_gap", "dj_expected"};
    for (std::size_t i = 0; i < parsed.size(); ++i) {
        const auto fields = split_fields(lines[i + 1]);
        REQUIRE(fields.size() == keys.size());
        for (std::size_t k = 0; k < keys.size(); ++k) {
            const auto& value = parsed[i][keys[k]];
            std::string as_text;
            if (value.is_null()) {
                as_text = "";
            } else if (value.is_string()) {
                as_text = value.get<std::string>();
            } else {
                as_text = std::to_string(value.get<long long>());
            }
            CHECK(fields[k] == as_text);
        }
    }
}

TEST_CASE("emission is byte-deterministic") {
    const SweepBounds bounds{9, 4, 12, 5};
    std::ostringstream a, b, ja, jb;
    write_csv(a, sweep_rows(bounds));
    write_csv(b, sweep_rows(bounds));
    write_json(ja, sweep_rows(bounds));
    write_json(jb, sweep_rows(bounds));
    CHECK(a.str() == b.str());
    CHECK(ja.str() == jb.str());
}

TEST_CASE("rule list formatting") {
    CHECK(rules_string({}) == "");
    CHECK(rules_string({Rule::CM, Rule::Trivial}) == "cm;trivial");
    CHECK(rules_string({Rule::Thm1i, Rule::Cor5}) == "thm1i;cor5");
}
