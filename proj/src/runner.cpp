#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>

#include "groupnet/config.hpp"
#include "groupnet/density.hpp"
#include "groupnet/fourier.hpp"
#include "groupnet/util.hpp"

namespace gn {

namespace {

namespace fs = std::filesystem;

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

fs::path resolve_out_dir(const ExperimentConfig& config) {
    std::string dir = config.out_dir;
    if (dir.empty()) {
        if (const char* env = std::getenv(kOutDirEnvVar)) dir = env;
        else dir = ".";
    }
    fs::create_directories(dir);
    return dir;
}

json file_header(const ExperimentConfig& config) {
    json j;
    j["tool_version"] = kToolVersion;
    j["config_hash"] = config.hash();
    return j;
}

void write_json(const fs::path& path, const json& j) {
    std::ofstream out(path, std::ios::binary);
    out << j.dump(2) << '\n';
}

void write_text(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
}

std::string csv_preamble(const ExperimentConfig& config) {
    return "# groupnet " + std::string(kToolVersion) + " config=" + config.hash() +
           "\n";
}

json density_report_json(const DensityReport& r) {
    json row;
    row["group"] = r.group_spec;
    row["family"] = r.family_spec;
    row["activation"] = r.activation_name;
    row["n_terms"] = r.n_terms;
    row["rank"] = r.rank;
    row["ambient"] = r.ambient;
    row["dense"] = r.dense;
    row["lower_bound"] = r.lower_bound;
    row["tolerance"] = r.tolerance;
    row["seed"] = r.seed;
    if (r.error) row["error"] = *r.error;
    if (!r.annihilator_vectors.empty()) {
        json witnesses = json::array();
        for (const Eigen::VectorXcd& v : r.annihilator_vectors) {
            std::vector<cplx> mass(v.data(), v.data() + v.size());
            witnesses.push_back(table_to_json(mass));
        }
        row["witnesses"] = std::move(witnesses);
    }
    return row;
}

int run_density(const ExperimentConfig& config, const fs::path& out_dir) {
    std::vector<DensityReport> reports =
        density_map(config.groups, config.activations, config.families,
                    static_cast<std::size_t>(config.n_terms), config.seed);
    std::string csv = csv_preamble(config);
    csv += "group,family,activation,n_terms,rank,ambient,dense,lower_bound_flag,"
           "tolerance,seed\n";
    json rows = json::array();
    for (const DensityReport& r : reports) {
        csv += r.group_spec + "," + r.family_spec + "," + r.activation_name + "," +
               std::to_string(r.n_terms) + "," + std::to_string(r.rank) + "," +
               std::to_string(r.ambient) + "," + (r.dense ? "1" : "0") + "," +
               (r.lower_bound ? "1" : "0") + "," + fmt_double(r.tolerance) + "," +
               std::to_string(r.seed) + "\n";
        rows.push_back(density_report_json(r));
    }
    write_text(out_dir / "density.csv", csv);
    json j = file_header(config);
    j["rows"] = std::move(rows);
    write_json(out_dir / "density.json", j);
    return 0;
}

int run_approx(const ExperimentConfig& config, const fs::path& out_dir) {
    std::string csv = csv_preamble(config);
    csv += "group,family,activation,n_terms,rank,p,l2_error,lp_error,sup_error,"
           "seed\n";
    json rows = json::array();
    std::uint64_t cell = 0;
    bool ok = true;
    for (const std::string& gspec : config.groups)
        for (const std::string& aspec : config.activations)
            for (const std::string& fspec : config.families) {
                const std::uint64_t sd = cell_seed(config.seed, cell++);
                json row;
                row["group"] = gspec;
                row["family"] = fspec;
                row["activation"] = aspec;
                row["seed"] = sd;
                try {
                    Domain domain = parse_domain(gspec);
                    FamilySpec family = parse_family(fspec);
                    family.seed = sd;
                    Activation act = make_activation(
                        aspec, family_target_domain(domain, family), sd);
                    Rng rng(sd);
                    Dictionary dict = build_dictionary(
                        domain, family, act,
                        static_cast<std::size_t>(config.n_terms), rng);
                    std::uniform_real_distribution<double> unif(-1.0, 1.0);
                    Eigen::VectorXcd target(
                        static_cast<Eigen::Index>(domain.size()));
                    for (Eigen::Index i = 0; i < target.size(); ++i)
                        target[i] = unif(rng);
                    FitReport fit = fit_coefficients(dict, target, config.p);
                    row["n_terms"] = dict.maps.size();
                    row["rank"] = fit.rank;
                    row["p"] = config.p;
                    row["l2_error"] = fit.l2_error;
                    row["lp_error"] = fit.lp_error;
                    row["sup_error"] = fit.sup_error;
                    csv += gspec + "," + fspec + "," + aspec + "," +
                           std::to_string(dict.maps.size()) + "," +
                           std::to_string(fit.rank) + "," + fmt_double(config.p) +
                           "," + fmt_double(fit.l2_error) + "," +
                           fmt_double(fit.lp_error) + "," +
                           fmt_double(fit.sup_error) + "," + std::to_string(sd) +
                           "\n";
                } catch (const std::exception& e) {
                    row["error"] = e.what();
                    csv += gspec + "," + fspec + "," + aspec + ",,,,,,," +
                           std::to_string(sd) + "\n";
                    ok = false;
                }
                rows.push_back(std::move(row));
            }
    write_text(out_dir / "approx.csv", csv);
    json j = file_header(config);
    j["rows"] = std::move(rows);
    write_json(out_dir / "approx.json", j);
    return ok ? 0 : 1;
}

int run_fourier_check(const ExperimentConfig& config, const fs::path& out_dir) {
    std::vector<std::string> battery = config.groups;
    if (battery.empty())
        battery = {"Z2",   "Z3",   "Z4",    "Z5",     "Z6",
                   "Z8",   "Z12",  "Z2xZ2", "Z2xZ3xZ4", "Z16"};
    bool all_pass = true;
    json rows = json::array();
    std::uint64_t cell = 0;
    for (const std::string& gspec : battery) {
        json row;
        row["group"] = gspec;
        try {
            Domain domain = parse_domain(gspec);
            const FiniteAbelianGroup& g = domain.group();
            Rng rng(cell_seed(config.seed, cell++));
            std::uniform_real_distribution<double> unif(-1.0, 1.0);
            double roundtrip = 0.0, convolution = 0.0;
            for (int rep = 0; rep < 20; ++rep) {
                Table f(g.order()), h(g.order());
                for (auto& v : f) v = cplx(unif(rng), unif(rng));
                for (auto& v : h) v = cplx(unif(rng), unif(rng));
                Table back = inverse_fourier(g, fourier_transform(g, f));
                for (std::uint64_t i = 0; i < g.order(); ++i)
                    roundtrip = std::max(roundtrip, std::abs(back[i] - f[i]));
                Table lhs = fourier_transform(g, convolve(g, f, h));
                Table fs = fourier_transform(g, f), hs = fourier_transform(g, h);
                for (std::uint64_t i = 0; i < g.order(); ++i)
                    convolution =
                        std::max(convolution, std::abs(lhs[i] - fs[i] * hs[i]));
            }
            bool dual = verify_double_dual(g);
            bool pass = roundtrip < 1e-12 && convolution < 1e-10 && dual;
            row["roundtrip_error"] = roundtrip;
            row["convolution_error"] = convolution;
            row["double_dual"] = dual;
            row["pass"] = pass;
            std::cout << (pass ? "pass " : "FAIL ") << gspec
                      << " roundtrip=" << roundtrip
                      << " convolution=" << convolution << " dual=" << dual
                      << "\n";
            all_pass = all_pass && pass;
        } catch (const std::exception& e) {
            row["error"] = e.what();
            all_pass = false;
        }
        rows.push_back(std::move(row));
    }
    json j = file_header(config);
    j["rows"] = std::move(rows);
    j["pass"] = all_pass;
    write_json(out_dir / "fourier_check.json", j);
    return all_pass ? 0 : 1;
}

int run_enumerate(const ExperimentConfig& config, const fs::path& out_dir) {
    json rows = json::array();
    for (const std::string& gspec : config.groups)
        for (const std::string& fspec : config.families) {
            json row;
            row["group"] = gspec;
            row["family"] = fspec;
            try {
                Domain domain = parse_domain(gspec);
                FamilySpec family = parse_family(fspec);
                family.budget = static_cast<std::uint64_t>(config.n_terms);
                std::vector<AnyMap> maps = enumerate_family(domain, family);
                row["count"] = maps.size();
                json list = json::array();
                for (const AnyMap& m : maps) list.push_back(map_to_json(m));
                row["maps"] = std::move(list);
            } catch (const std::exception& e) {
                row["error"] = e.what();
            }
            rows.push_back(std::move(row));
        }
    json j = file_header(config);
    j["rows"] = std::move(rows);
    write_json(out_dir / "enumerate.json", j);
    return 0;
}

int run_counterexample(const ExperimentConfig& config, const fs::path& out_dir) {
    std::vector<FamilySpec> families;
    for (const std::string& fspec : config.families)
        families.push_back(parse_family(fspec));
    if (families.empty()) families.push_back(parse_family("aut"));
    Rng rng(config.seed);
    std::vector<CounterexampleWitness> witnesses = counterexample_search(
        static_cast<std::uint64_t>(config.max_order), families, rng,
        static_cast<std::size_t>(config.trials));
    json rows = json::array();
    for (const CounterexampleWitness& w : witnesses) {
        json row;
        row["moduli"] = w.moduli;
        row["family"] = w.family_spec;
        row["activation_table"] = table_to_json(w.activation_table);
        row["witness"] = table_to_json(w.witness.mass);
        row["max_pairing"] = w.max_pairing;
        rows.push_back(std::move(row));
    }
    json j = file_header(config);
    j["witnesses"] = std::move(rows);
    write_json(out_dir / "counterexample.json", j);
    return 0;
}

}  // namespace

int run(const ExperimentConfig& config) {
    fs::path out_dir = resolve_out_dir(config);
    try {
        if (config.command == "density") return run_density(config, out_dir);
        if (config.command == "approx") return run_approx(config, out_dir);
        if (config.command == "fourier-check")
            return run_fourier_check(config, out_dir);
        if (config.command == "enumerate") return run_enumerate(config, out_dir);
        if (config.command == "counterexample")
            return run_counterexample(config, out_dir);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    std::cerr << "unknown command: " << config.command << "\n";
    return 2;
}

}  // namespace gn
