// Command-line frontend: single-tuple queries, sweeps, family generation,
// degeneration oracle reports, and the full verification suite.
//
// Exit codes: 0 success, 1 usage error, 2 invalid mathematical parameters,
// 3 detected internal inconsistency (a Conflict verdict or a failed
// soundness check).

#include <fstream>
#include <iostream>
#include <span>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "secantry/dejonq.hpp"
#include "secantry/limit_series.hpp"
#include "secantry/oracle.hpp"
#include "secantry/report.hpp"
#include "secantry/secant.hpp"
#include "secantry/verify.hpp"

namespace {

using secantry::Int;

struct Options {
    Int g = 0, r = 0, d = 0, e = 0, f = 0;
    Int g1 = 0, g2 = 0, d2 = 0, r2 = 0, rho = 0;
    std::vector<Int> alpha;
    std::string out;
    std::string format = "csv";
    std::string variant;
    Int verify_g = 20, verify_r = 8, verify_e = 12;
};

std::ostream& output_stream(const Options& opt, std::ofstream& file) {
    if (opt.out.empty()) return std::cout;
    file.open(opt.out);
    if (!file) throw std::invalid_argument("cannot open output file: " + opt.out);
    return file;
}

secantry::SecantProblem problem_from(const Options& opt) {
    return secantry::SecantProblem(secantry::SeriesParams(opt.g, opt.r, opt.d), opt.e, opt.f);
}

void emit_rows(std::ostream& os, const Options& opt, std::span<const secantry::SweepRow> rows) {
    if (opt.format == "json") {
        secantry::write_json(os, rows);
    } else {
        secantry::write_csv(os, rows);
    }
}

int run_classify_like(const Options& opt, const secantry::SecantProblem& P) {
    const secantry::Verdict v = secantry::classify(P);
    std::ofstream file;
    std::ostream& os = output_stream(opt, file);
    const std::vector<secantry::SweepRow> rows = {secantry::make_sweep_row(P, v)};
    emit_rows(os, opt, rows);
    if (v.tag == secantry::VerdictTag::Conflict) {
        std::cerr << "inconsistency: tuple fires both emptiness and non-emptiness rules\n";
        return 3;
    }
    return 0;
}

int run_sweep(const Options& opt) {
    const secantry::SweepBounds bounds{opt.g, opt.r, opt.d, opt.e};
    const auto rows = secantry::sweep_rows(bounds);
    std::ofstream file;
    std::ostream& os = output_stream(opt, file);
    emit_rows(os, opt, rows);
    for (const auto& row : rows) {
        if (row.verdict == secantry::VerdictTag::Conflict) {
            std::cerr << "inconsistency: conflict at (" << row.g << "," << row.r << "," << row.d
                      << "," << row.e << "," << row.f << ")\n";
            return 3;
        }
    }
    return 0;
}

int run_dj_expected(const Options& opt) {
    const auto P = problem_from(opt);
    Int value = 0;
    if (opt.alpha.empty()) {
        value = secantry::dj_ef_expected(P);
    } else {
        secantry::RamificationSequence alpha(opt.alpha, P.d_prime());
        value = secantry::dj_ef_expected_ram(P, alpha);
    }
    std::ofstream file;
    output_stream(opt, file) << value << '\n';
    return 0;
}

int run_dj_canonical(const Options& opt) {
    Int formula = 0;
    Int pair_count = 0;
    if (opt.alpha.empty()) {
        formula = secantry::canonical_dj_dim(opt.g, opt.d2, opt.r2);
        pair_count = secantry::canonical_dj_pair_count(opt.g, opt.d2, opt.r2);
    } else {
        secantry::RamificationSequence alpha(opt.alpha, opt.d2);
        formula = secantry::canonical_dj_dim_ram(opt.g, opt.d2, opt.r2, alpha);
        pair_count = secantry::canonical_dj_pair_count(opt.g, opt.d2, opt.r2) - alpha.sum();
    }
    std::ofstream file;
    std::ostream& os = output_stream(opt, file);
    if (opt.format == "json") {
        nlohmann::ordered_json obj;
        obj["formula"] = formula;
        obj["pair_count"] = pair_count;
        os << obj.dump() << '\n';
    } else {
        os << "formula,pair_count\n" << formula << ',' << pair_count << '\n';
    }
    return 0;
}

int run_lls_pairs(const Options& opt) {
    const secantry::NodalSplit split(opt.g1, opt.g2, opt.r, opt.d);
    const bool fixed_summand = opt.variant == "printed";
    const auto pairs = secantry::enumerate_refined_pairs(split, fixed_summand);
    std::ofstream file;
    std::ostream& os = output_stream(opt, file);
    if (opt.format == "json") {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& [aY, aZ] : pairs) arr.push_back({aY.entries(), aZ.entries()});
        os << arr.dump() << '\n';
        return 0;
    }
    const auto print_seq = [&os](const secantry::VanishingSequence& seq) {
        os << '(';
        for (std::size_t i = 0; i < seq.entries().size(); ++i) {
            if (i > 0) os << ',';
            os << seq[i];
        }
        os << ')';
    };
    for (const auto& [aY, aZ] : pairs) {
        print_seq(aY);
        os << ',';
        print_seq(aZ);
        os << '\n';
    }
    return 0;
}

int run_lls_induction(const Options& opt) {
    const auto datum = secantry::induction_datum(secantry::SeriesParams(opt.g, opt.r, opt.d));
    std::ofstream file;
    std::ostream& os = output_stream(opt, file);
    if (opt.format == "json") {
        nlohmann::ordered_json obj;
        obj["g1"] = datum.split.g1;
        obj["g2"] = datum.split.g2;
        obj["aspect1"] = {datum.aspect1.g, datum.aspect1.r, datum.aspect1.d};
        obj["twist1"] = datum.twist1;
        obj["aspect2"] = {datum.aspect2.g, datum.aspect2.r, datum.aspect2.d};
        obj["twist2"] = datum.twist2;
        os << obj.dump() << '\n';
        return 0;
    }
    os << "g1,g2,a1_g,a1_r,a1_d,twist1,a2_g,a2_r,a2_d,twist2\n";
    os << datum.split.g1 << ',' << datum.split.g2 << ',' << datum.aspect1.g << ','
       << datum.aspect1.r << ',' << datum.aspect1.d << ',' << datum.twist1 << ','
       << datum.aspect2.g << ',' << datum.aspect2.r << ',' << datum.aspect2.d << ','
       << datum.twist2 << '\n';
    return 0;
}

void print_distribution_csv(std::ostream& os, const secantry::DegreeDistribution& dist) {
    os << dist.d1 << ',' << dist.d1p << ',' << dist.d2 << ',' << dist.d2p << ',' << dist.c1 << ','
       << dist.c2 << '\n';
}

nlohmann::ordered_json distribution_json(const secantry::DegreeDistribution& dist) {
    nlohmann::ordered_json obj;
    obj["d1"] = dist.d1;
    obj["d1p"] = dist.d1p;
    obj["d2"] = dist.d2;
    obj["d2p"] = dist.d2p;
    obj["c1"] = dist.c1;
    obj["c2"] = dist.c2;
    return obj;
}

int run_oracle_distributions(const Options& opt) {
    const auto dists = secantry::admissible_distributions(problem_from(opt));
    std::ofstream file;
    std::ostream& os = output_stream(opt, file);
    if (opt.format == "json") {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& dist : dists) arr.push_back(distribution_json(dist));
        os << arr.dump() << '\n';
        return 0;
    }
    os << "d1,d1p,d2,d2p,c1,c2\n";
    for (const auto& dist : dists) print_distribution_csv(os, dist);
    return 0;
}

int run_oracle_basepoint(const Options& opt) {
    const auto report = secantry::base_point_report(problem_from(opt));
    std::ofstream file;
    std::ostream& os = output_stream(opt, file);
    if (opt.format == "json") {
        nlohmann::ordered_json obj;
        obj["holds_everywhere"] = report.holds_everywhere;
        obj["admissible_count"] = report.admissible_count;
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& w : report.witnesses) arr.push_back(distribution_json(w));
        obj["witnesses"] = std::move(arr);
        os << obj.dump() << '\n';
        return 0;
    }
    os << "holds_everywhere," << (report.holds_everywhere ? "true" : "false") << ",admissible,"
       << report.admissible_count << '\n';
    os << "d1,d1p,d2,d2p,c1,c2\n";
    for (const auto& w : report.witnesses) print_distribution_csv(os, w);
    return 0;
}

int run_oracle_bound(const Options& opt) {
    const auto P = problem_from(opt);
    const auto reading = opt.variant == "derived" ? secantry::SFactorReading::RPrime
                                                  : secantry::SFactorReading::Printed;
    const auto bound = secantry::central_fiber_bound(P);
    const auto dims = secantry::component_dj_dims(P, reading);
    std::ofstream file;
    std::ostream& os = output_stream(opt, file);
    if (opt.format == "json") {
        nlohmann::ordered_json obj;
        obj["printed"] = bound.printed;
        obj["derived"] = bound.derived;
        obj["dim1"] = dims.first;
        obj["dim2"] = dims.second;
        obj["dim1_ram"] = dims.first_ram;
        obj["dim2_ram"] = dims.second_ram;
        os << obj.dump() << '\n';
        return 0;
    }
    os << "printed,derived,dim1,dim2,dim1_ram,dim2_ram\n";
    os << bound.printed << ',' << bound.derived << ',' << dims.first << ',' << dims.second << ','
       << dims.first_ram << ',' << dims.second_ram << '\n';
    return 0;
}

int run_verify(const Options& opt) {
    const secantry::VerifyBounds bounds{opt.verify_g, opt.verify_r, opt.verify_e};
    const auto results = secantry::verify_all(bounds);
    std::ofstream file;
    std::ostream& os = output_stream(opt, file);
    int failed = 0;
    int passed = 0;
    int findings = 0;
    for (const auto& res : results) {
        if (res.kind == secantry::CheckKind::Finding) {
            ++findings;
            os << "FINDING " << res.name << ": " << res.detail << '\n';
        } else if (res.passed) {
            ++passed;
            os << "PASS " << res.name << " (" << res.detail << ")\n";
        } else {
            ++failed;
            os << "FAIL " << res.name << ": " << res.detail << '\n';
        }
    }
    os << "verify: " << passed << " passed, " << failed << " failed, " << findings
       << " findings\n";
    return failed == 0 ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic classification of secant loci of linear series on general curves"};
    app.require_subcommand(1);
    Options opt;

    const auto add_series_flags = [&](CLI::App* cmd) {
        cmd->add_option("--g", opt.g, "genus")->required();
        cmd->add_option("--r", opt.r, "series dimension")->required();
        cmd->add_option("--d", opt.d, "series degree")->required();
    };
    const auto add_secant_flags = [&](CLI::App* cmd) {
        add_series_flags(cmd);
        cmd->add_option("--e", opt.e, "secant divisor degree")->required();
        cmd->add_option("--f", opt.f, "codimension defect")->required();
    };
    const auto add_output_flags = [&](CLI::App* cmd) {
        cmd->add_option("--out", opt.out, "write output to PATH instead of stdout");
        cmd->add_option("--format", opt.format, "output format")
            ->check(CLI::IsMember({"csv", "json"}));
    };

    auto* bn = app.add_subcommand("bn", "Brill-Noether arithmetic");
    bn->require_subcommand(1);
    auto* bn_rho = bn->add_subcommand("rho", "Brill-Noether number g-(r+1)(g-d+r)");
    add_series_flags(bn_rho);
    add_output_flags(bn_rho);
    auto* bn_speciality = bn->add_subcommand("speciality", "index of speciality g-d+r");
    add_series_flags(bn_speciality);
    add_output_flags(bn_speciality);
    auto* bn_res = bn->add_subcommand("residual", "residual series (g, s-1, 2g-2-d)");
    add_series_flags(bn_res);
    add_output_flags(bn_res);

    auto* secant = app.add_subcommand("secant", "secant-variety classification");
    secant->require_subcommand(1);
    auto* secant_classify = secant->add_subcommand("classify", "classify one (g,r,d,e,f) tuple");
    add_secant_flags(secant_classify);
    add_output_flags(secant_classify);
    auto* secant_sweep =
        secant->add_subcommand("sweep", "classify all tuples with g,r,d,e up to the given bounds");
    secant_sweep->add_option("--g", opt.g, "genus bound")->required();
    secant_sweep->add_option("--r", opt.r, "dimension bound")->required();
    secant_sweep->add_option("--d", opt.d, "degree bound")->required();
    secant_sweep->add_option("--e", opt.e, "secant degree bound")->required();
    add_output_flags(secant_sweep);
    auto* secant_prop1 = secant->add_subcommand("prop1", "generate and classify a family member");
    secant_prop1->add_option("--e", opt.e, "secant divisor degree (even)")->required();
    secant_prop1->add_option("--rho", opt.rho, "target Brill-Noether number")->required();
    add_output_flags(secant_prop1);

    auto* dj = app.add_subcommand("dj", "refined de Jonquieres dimension counts");
    dj->require_subcommand(1);
    auto* dj_expected = dj->add_subcommand("expected", "expected dimension at the secant pattern");
    add_secant_flags(dj_expected);
    dj_expected->add_option("--alpha", opt.alpha, "imposed ramification a0,a1,...")->delimiter(',');
    add_output_flags(dj_expected);
    auto* dj_canonical = dj->add_subcommand("canonical", "canonical-series dimension at (2g-2-d2, d2)");
    dj_canonical->add_option("--g", opt.g, "genus")->required();
    dj_canonical->add_option("--d2", opt.d2, "moving part degree")->required();
    dj_canonical->add_option("--r2", opt.r2, "moving part dimension")->required();
    dj_canonical->add_option("--alpha", opt.alpha, "imposed ramification a0,a1,...")->delimiter(',');
    add_output_flags(dj_canonical);

    auto* lls = app.add_subcommand("lls", "limit-linear-series combinatorics");
    lls->require_subcommand(1);
    auto* lls_pairs = lls->add_subcommand("pairs", "refined compatible vanishing-sequence pairs");
    lls_pairs->add_option("--g1", opt.g1, "first component genus")->required();
    lls_pairs->add_option("--g2", opt.g2, "second component genus")->required();
    lls_pairs->add_option("--r", opt.r, "series dimension")->required();
    lls_pairs->add_option("--d", opt.d, "series degree")->required();
    lls_pairs->add_option("--variant", opt.variant, "existence summand: printed (fixed g1) or derived")
        ->check(CLI::IsMember({"printed", "derived"}));
    add_output_flags(lls_pairs);
    auto* lls_induction = lls->add_subcommand("induction", "degeneration datum for a rho=0 series");
    add_series_flags(lls_induction);
    add_output_flags(lls_induction);

    auto* oracle = app.add_subcommand("oracle", "degeneration arithmetic oracle");
    oracle->require_subcommand(1);
    auto* oracle_dists = oracle->add_subcommand("distributions", "admissible degree distributions");
    add_secant_flags(oracle_dists);
    add_output_flags(oracle_dists);
    auto* oracle_basepoint = oracle->add_subcommand("basepoint", "node base-point measurement");
    add_secant_flags(oracle_basepoint);
    add_output_flags(oracle_basepoint);
    auto* oracle_bound = oracle->add_subcommand("bound", "central-fibre dimension bounds");
    add_secant_flags(oracle_bound);
    oracle_bound->add_option("--variant", opt.variant, "component (s-2) factor reading")
        ->check(CLI::IsMember({"printed", "derived"}));
    add_output_flags(oracle_bound);

    auto* verify = app.add_subcommand("verify", "run every exhaustive property check");
    verify->add_option("--g", opt.verify_g, "genus bound (default 20)");
    verify->add_option("--r", opt.verify_r, "dimension bound (default 8)");
    verify->add_option("--e", opt.verify_e, "secant degree bound (default 12)");
    add_output_flags(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (bn_rho->parsed()) {
            std::ofstream file;
            output_stream(opt, file) << secantry::SeriesParams(opt.g, opt.r, opt.d).rho() << '\n';
            return 0;
        }
        if (bn_speciality->parsed()) {
            std::ofstream file;
            output_stream(opt, file) << secantry::SeriesParams(opt.g, opt.r, opt.d).speciality()
                                     << '\n';
            return 0;
        }
        if (bn_res->parsed()) {
            const auto res = secantry::residual(secantry::SeriesParams(opt.g, opt.r, opt.d));
            std::ofstream file;
            output_stream(opt, file) << res.g << ',' << res.r << ',' << res.d << '\n';
            return 0;
        }
        if (secant_classify->parsed()) return run_classify_like(opt, problem_from(opt));
        if (secant_sweep->parsed()) return run_sweep(opt);
        if (secant_prop1->parsed()) {
            return run_classify_like(opt, secantry::prop1_family(opt.e, opt.rho));
        }
        if (dj_expected->parsed()) return run_dj_expected(opt);
        if (dj_canonical->parsed()) return run_dj_canonical(opt);
        if (lls_pairs->parsed()) return run_lls_pairs(opt);
        if (lls_induction->parsed()) return run_lls_induction(opt);
        if (oracle_dists->parsed()) return run_oracle_distributions(opt);
        if (oracle_basepoint->parsed()) return run_oracle_basepoint(opt);
        if (oracle_bound->parsed()) return run_oracle_bound(opt);
        if (verify->parsed()) return run_verify(opt);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 1;
}
