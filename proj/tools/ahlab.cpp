#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "ahlab/classifier.hpp"
#include "ahlab/induction.hpp"
#include "ahlab/interpolation.hpp"
#include "ahlab/secant.hpp"

namespace {

constexpr std::uint64_t kDefaultSeed = 0xA11CE;

std::uint64_t default_seed() {
    if (const char* env = std::getenv("AHLAB_SEED")) {
        try {
            return std::stoull(env, nullptr, 0);
        } catch (const std::exception&) {
            std::cerr << "warning: ignoring malformed AHLAB_SEED\n";
        }
    }
    return kDefaultSeed;
}

void write_out(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw ahlab::RangeError("cannot open output file: " + out_path);
    f << text;
    if (!text.empty() && text.back() != '\n') f << '\n';
}

nlohmann::json verdict_json(const ahlab::AHVerdict& v) {
    nlohmann::json j;
    j["schema"] = 1;
    j["n"] = v.n;
    j["d"] = v.d;
    j["r"] = v.r;
    j["predicted"] = v.predicted.exceptional ? "exceptional" : "generic";
    if (v.predicted.family) j["family"] = ahlab::family_name(*v.predicted.family);
    switch (v.observed.kind) {
        case ahlab::ObservedVerdict::Kind::AH: j["observed"] = "AH"; break;
        case ahlab::ObservedVerdict::Kind::Deficient: j["observed"] = "deficient"; break;
        case ahlab::ObservedVerdict::Kind::Inconclusive: j["observed"] = "inconclusive"; break;
    }
    j["witnessSeed"] = v.observed.witness_seed;
    j["trials"] = v.observed.trials_used;
    j["maxRankSeen"] = v.observed.max_rank_seen;
    j["agreement"] = v.agreement;
    return j;
}

std::string verdict_table(const ahlab::AHVerdict& v) {
    std::ostringstream out;
    out << "cell (n=" << v.n << ", d=" << v.d << ", r=" << v.r << ")\n"
        << "  predicted: " << (v.predicted.exceptional ? "exceptional" : "generic");
    if (v.predicted.family) out << " [" << ahlab::family_name(*v.predicted.family) << "]";
    out << "\n  observed:  ";
    switch (v.observed.kind) {
        case ahlab::ObservedVerdict::Kind::AH:
            out << "AH (witness seed " << v.observed.witness_seed << ")";
            break;
        case ahlab::ObservedVerdict::Kind::Deficient:
            out << "deficient (exact certificate attached)";
            break;
        case ahlab::ObservedVerdict::Kind::Inconclusive:
            out << "inconclusive after " << v.observed.trials_used << " trials";
            break;
    }
    out << "\n  agreement: " << (v.agreement ? "yes" : "no") << "\n";
    return out.str();
}

std::string report_table(const ahlab::HilbertReport& rep) {
    std::ostringstream out;
    out << "H_{R/I_X}(" << rep.d << ") = " << rep.hilbert_value << "  (n=" << rep.n
        << ", r=" << rep.r << ", e=" << rep.multiplicity_e
        << ", expected=" << rep.expected << ", defect=" << rep.defect
        << ", dim[I_X]_d=" << rep.ideal_dim << ", field " << rep.field.describe()
        << ")\n";
    return out.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact interpolation of fat points and secant dimensions"};
    app.require_subcommand(1);

    int exit_code = 0;
    const std::uint64_t seed0 = default_seed();

    // hf
    auto* hf = app.add_subcommand("hf", "Hilbert function of a fat-point scheme");
    int hf_n = 2, hf_d = 2, hf_r = 1, hf_mult = 2;
    std::uint64_t hf_seed = seed0, hf_prime = ahlab::kDefaultPrime;
    bool hf_rnc = false, hf_rational = false;
    std::string hf_points, hf_hyp, hf_format = "table", hf_out;
    hf->add_option("--n", hf_n, "ambient dimension n")->required();
    hf->add_option("--d", hf_d, "degree d")->required();
    hf->add_option("--r", hf_r, "number of points");
    hf->add_option("--mult", hf_mult, "common multiplicity (default 2)");
    hf->add_option("--points", hf_points, "JSON file with an explicit configuration");
    hf->add_option("--on-hyperplane", hf_hyp, "comma-separated hyperplane coefficients");
    hf->add_flag("--rnc", hf_rnc, "points on the rational normal curve");
    hf->add_flag("--rational", hf_rational, "compute over the rationals");
    hf->add_option("--seed", hf_seed, "RNG seed");
    hf->add_option("--prime", hf_prime, "field prime");
    hf->add_option("--format", hf_format, "json|table");
    hf->add_option("--out", hf_out, "output path (default stdout)");

    // check
    auto* check = app.add_subcommand("check", "predicted vs observed verdict for one cell");
    int ck_n = 2, ck_d = 2, ck_r = 1, ck_trials = 3;
    std::uint64_t ck_seed = seed0, ck_prime = ahlab::kDefaultPrime;
    std::string ck_format = "table", ck_out;
    check->add_option("--n", ck_n)->required();
    check->add_option("--d", ck_d)->required();
    check->add_option("--r", ck_r)->required();
    check->add_option("--trials", ck_trials);
    check->add_option("--seed", ck_seed);
    check->add_option("--prime", ck_prime);
    check->add_option("--format", ck_format, "json|table");
    check->add_option("--out", ck_out);

    // sweep
    auto* sweep = app.add_subcommand("sweep", "verify a whole grid of cells, CSV output");
    ahlab::SweepOptions so;
    so.base_seed = seed0;
    so.jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    std::string sw_out;
    sweep->add_option("--nmin", so.nmin);
    sweep->add_option("--nmax", so.nmax);
    sweep->add_option("--dmin", so.dmin);
    sweep->add_option("--dmax", so.dmax);
    bool sw_all_r = false, sw_pivotal = false;
    sweep->add_flag("--all-r", sw_all_r, "every r up to the sweep limit (default)");
    sweep->add_flag("--pivotal-only", sw_pivotal, "only the two pivotal r values");
    sweep->add_option("--trials", so.trials);
    sweep->add_option("--seed", so.base_seed);
    sweep->add_option("--prime", so.prime);
    sweep->add_option("--jobs", so.jobs);
    sweep->add_option("--out", sw_out, "CSV path (default stdout)");

    // tree
    auto* tree = app.add_subcommand("tree", "induction certificate tree for (n, d)");
    int tr_n = 3, tr_d = 4, tr_trials = 3;
    bool tr_check = false;
    std::uint64_t tr_seed = seed0;
    std::string tr_out;
    tree->add_option("--n", tr_n)->required();
    tree->add_option("--d", tr_d)->required();
    tree->add_flag("--check", tr_check, "verify splits, gates, and leaves");
    tree->add_option("--trials", tr_trials);
    tree->add_option("--seed", tr_seed);
    tree->add_option("--out", tr_out);

    // tables
    auto* tables = app.add_subcommand("tables", "split tables for d = 4 or 5");
    int tb_d = 4;
    std::string tb_out;
    tables->add_option("--d", tb_d)->required();
    tables->add_option("--out", tb_out);

    // secant
    auto* secant = app.add_subcommand("secant", "dimension of the r-th secant variety");
    int se_n = 2, se_d = 2, se_r = 1, se_trials = 3;
    std::uint64_t se_seed = seed0, se_prime = ahlab::kDefaultPrime;
    std::string se_out;
    secant->add_option("--n", se_n)->required();
    secant->add_option("--d", se_d)->required();
    secant->add_option("--r", se_r)->required();
    secant->add_option("--trials", se_trials);
    secant->add_option("--seed", se_seed);
    secant->add_option("--prime", se_prime);
    secant->add_option("--out", se_out);

    // waring
    auto* waring = app.add_subcommand("waring", "big Waring number G(n, d)");
    int wa_n = 2, wa_d = 2, wa_trials = 4;
    std::uint64_t wa_seed = seed0, wa_prime = ahlab::kDefaultPrime;
    std::string wa_out;
    waring->add_option("--n", wa_n)->required();
    waring->add_option("--d", wa_d)->required();
    waring->add_option("--trials", wa_trials);
    waring->add_option("--seed", wa_seed);
    waring->add_option("--prime", wa_prime);
    waring->add_option("--out", wa_out);

    // certificate
    auto* cert = app.add_subcommand("certificate", "exact deficiency certificate");
    std::string cf_family;
    int cf_n = 2, cf_r = 2;
    std::uint64_t cf_seed = seed0, cf_prime = ahlab::kDefaultPrime;
    std::string cf_out;
    cert->add_option("--family", cf_family, "d2|d4|d3n4")->required();
    cert->add_option("--n", cf_n);
    cert->add_option("--r", cf_r);
    cert->add_option("--seed", cf_seed);
    cert->add_option("--prime", cf_prime);
    cert->add_option("--out", cf_out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // 2 = usage error; --help and --version are not errors
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (hf->parsed()) {
            ahlab::FieldSpec field = hf_rational ? ahlab::FieldSpec::rational()
                                                 : ahlab::FieldSpec::prime_field(hf_prime);
            int sources = (hf_points.empty() ? 0 : 1) + (hf_rnc ? 1 : 0) +
                          (hf_hyp.empty() ? 0 : 1);
            if (sources > 1) {
                std::cerr << "error: pick one point source\n";
                return 2;
            }
            ahlab::FatPointConfig config;
            if (!hf_points.empty()) {
                std::ifstream f(hf_points);
                if (!f) {
                    std::cerr << "error: cannot read " << hf_points << "\n";
                    return 2;
                }
                std::stringstream buf;
                buf << f.rdbuf();
                config = ahlab::config_from_json(buf.str());
            } else if (hf_rnc) {
                config = ahlab::rational_normal_curve_points(hf_n, hf_r, hf_mult,
                                                             hf_seed, field);
            } else if (!hf_hyp.empty()) {
                ahlab::HyperplaneData h;
                std::stringstream ss(hf_hyp);
                std::string item;
                while (std::getline(ss, item, ','))
                    h.coefficients.emplace_back(item);
                if (static_cast<int>(h.coefficients.size()) != hf_n + 1) {
                    std::cerr << "error: hyperplane needs n+1 coefficients\n";
                    return 2;
                }
                config = ahlab::random_on_hyperplane(hf_n, hf_r, hf_mult, h, hf_seed,
                                                     field);
            } else {
                config = ahlab::random_general(hf_n, hf_r, hf_mult, hf_seed, field);
            }
            auto rep = ahlab::hilbert_function(config, hf_d);
            write_out(hf_format == "json" ? ahlab::report_to_json(rep)
                                          : report_table(rep),
                      hf_out);
        } else if (check->parsed()) {
            auto v = ahlab::verify_ah(ck_n, ck_d, ck_r, ck_trials, ck_seed, ck_prime);
            write_out(ck_format == "json" ? verdict_json(v).dump(2) : verdict_table(v),
                      ck_out);
            if (!v.agreement) exit_code = 1;
        } else if (sweep->parsed()) {
            so.all_r = !sw_pivotal;
            auto rows = ahlab::sweep(so);
            write_out(ahlab::sweep_to_csv(rows, so), sw_out);
            for (const auto& row : rows)
                if (!row.agreement) exit_code = 1;
        } else if (tree->parsed()) {
            auto t = ahlab::build_tree(tr_n, tr_d);
            if (tr_check) {
                auto rep = ahlab::check_tree(t, tr_trials, tr_seed);
                std::cerr << "checked " << rep.nodes_checked << " nodes, verified "
                          << rep.leaves_verified << " leaves\n";
                for (const auto& f : rep.failures) std::cerr << "FAIL " << f << "\n";
                if (!rep.ok()) exit_code = 1;
            }
            write_out(ahlab::tree_to_json(t), tr_out);
        } else if (tables->parsed()) {
            auto rows = ahlab::reproduce_tables(tb_d);
            write_out(ahlab::table_to_text(rows, tb_d), tb_out);
            if (rows != ahlab::embedded_table(tb_d)) {
                std::cerr << "error: regenerated table deviates from reference data\n";
                exit_code = 1;
            }
        } else if (secant->parsed()) {
            auto rep = ahlab::secant_dimension(se_n, se_d, se_r, se_trials, se_seed,
                                               se_prime);
            write_out(ahlab::secant_report_to_json(rep), se_out);
        } else if (waring->parsed()) {
            auto rep = ahlab::waring_G(wa_n, wa_d, wa_trials, wa_seed, wa_prime);
            write_out(ahlab::waring_report_to_json(rep), wa_out);
        } else if (cert->parsed()) {
            ahlab::Certificate c;
            if (cf_family == "d2")
                c = ahlab::certificate_d2(cf_n, cf_r);
            else if (cf_family == "d4")
                c = ahlab::certificate_d4(cf_n, cf_seed, cf_prime);
            else if (cf_family == "d3n4")
                c = ahlab::certificate_d3n4(cf_seed);
            else {
                std::cerr << "error: --family must be d2, d4, or d3n4\n";
                return 2;
            }
            write_out(ahlab::certificate_to_json(c), cf_out);
            if (!ahlab::verify_certificate(c)) {
                std::cerr << "error: certificate failed self-verification\n";
                exit_code = 1;
            }
        }
    } catch (const ahlab::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return exit_code;
}
