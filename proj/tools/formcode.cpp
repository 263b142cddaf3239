#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "formcode/channel.hpp"
#include "formcode/codes.hpp"
#include "formcode/error.hpp"
#include "formcode/irreducibles.hpp"
#include "formcode/table.hpp"

namespace {

using namespace formcode;

bool capacity_override() {
    const char* env = std::getenv("FORMCODE_CAPACITY_OVERRIDE");
    return env != nullptr && std::string(env) == "1";
}

FieldPtr field_for(uint32_t q) {
    auto [p, m] = factor_prime_power(q);
    return Field::make(p, m);
}

std::vector<NormalizedPoly> family_generators(Family family, const FieldPtr& field, int n,
                                              int e) {
    if (family == Family::irreducible) return sieve_irreducible(field, n, e, capacity_override());
    if (family == Family::linear) return linear_powers(field, n, e, capacity_override());
    throw Error(errs::parse_error, "the CLI builds the irr and linear families");
}

SubspaceCode family_code(Family family, const FieldPtr& field, int n, int e, int d) {
    return build_code(family_generators(family, field, n, e), d, family,
                      CoprimePolicy::structural, capacity_override());
}

struct CommonArgs {
    uint32_t q = 2;
    int n = 2;
    int e = 1;
};

void add_qne(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--q", args.q, "field order (prime power)")->required();
    cmd->add_option("--n", args.n, "number of variables minus one")->required();
    cmd->add_option("--e", args.e, "generator degree")->required();
}

int run_count(const CommonArgs& args, bool csv) {
    Census c = census(args.q, args.n, args.e);
    if (csv) {
        std::cout << "q,n,e,N_e,I_e\n"
                  << c.q << ',' << c.n << ',' << c.e << ',' << c.normalized.to_string() << ','
                  << c.irreducible.to_string() << '\n';
    } else {
        std::cout << "N=" << c.normalized.to_string() << '\n'
                  << "I=" << c.irreducible.to_string() << '\n';
    }
    return 0;
}

int run_enumerate(const CommonArgs& args, const std::string& family_str) {
    Family family = family_from_name(family_str);
    FieldPtr field = field_for(args.q);
    if (family == Family::irreducible) {
        for_each_irreducible(
            field, args.n, args.e,
            [](const NormalizedPoly& p) { std::cout << poly_to_string(p.poly()) << '\n'; },
            capacity_override());
    } else if (family == Family::linear) {
        for (const auto& p : linear_powers(field, args.n, args.e))
            std::cout << poly_to_string(p.poly()) << '\n';
    } else {
        throw Error(errs::parse_error, "the CLI enumerates the irr and linear families");
    }
    return 0;
}

int run_build(const CommonArgs& args, const std::string& family_str, int d,
              const std::string& out_path) {
    SubspaceCode code = family_code(family_from_name(family_str), field_for(args.q), args.n,
                                    args.e, d);
    if (out_path.empty()) {
        write_code(std::cout, code);
    } else {
        std::ofstream out(out_path);
        if (!out) throw Error(errs::io_error, "cannot open '" + out_path + "' for writing");
        write_code(out, code);
    }
    return 0;
}

int run_params(const CommonArgs& args, const std::string& family_str, int d, bool verify) {
    Family family = family_from_name(family_str);
    CodeParameters p;
    if (verify) {
        SubspaceCode code = family_code(family, field_for(args.q), args.n, args.e, d);
        p = code_params(code, true);
    } else {
        BigUint size = family == Family::irreducible
                           ? count_irreducible(args.q, args.n, args.e)
                           : count_normalized(args.q, args.n, 1);
        p = code_params_from_counts(args.q, args.n, args.e, d, std::move(size));
    }
    std::cout << params_csv_header() << '\n' << params_csv_row(args.e, d, p) << '\n';
    return 0;
}

int run_table(uint32_t q, int n, int e_max, int d_max) {
    std::cout << table_csv_header() << '\n';
    for (const auto& row : table_rows(q, n, e_max, d_max))
        std::cout << table_csv_row(row) << '\n';
    return 0;
}

int run_dist(const std::string& file_a, const std::string& file_b, bool allow_deficient) {
    auto load = [&](const std::string& path) {
        std::ifstream in(path);
        if (!in) throw Error(errs::io_error, "cannot open '" + path + "'");
        LoadedSubspace loaded = read_subspace(in, allow_deficient);
        if (loaded.rank_deficient)
            std::cerr << "warning: " << path << " declared more rows than its span\n";
        return loaded.subspace;
    };
    Subspace a = load(file_a);
    Subspace b = load(file_b);
    std::cout << dist(a, b) << '\n';
    return 0;
}

int run_simulate(const CommonArgs& args, const std::string& family_str, int d, int rho, int t,
                 uint64_t trials, uint64_t seed) {
    SubspaceCode code = family_code(family_from_name(family_str), field_for(args.q), args.n,
                                    args.e, d);
    SimulationReport rep = simulate(code, rho, t, trials, seed);
    std::cout << "# rng: " << kRngName << '\n'
              << simulation_csv_header() << '\n'
              << simulation_csv_row(rep) << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"equidistant subspace codes for linear network coding, built from coprime "
                 "homogeneous forms over F_q"};
    app.require_subcommand(1);

    CommonArgs count_args;
    bool count_csv = false;
    auto* cmd_count = app.add_subcommand("count", "count normalized and irreducible forms");
    add_qne(cmd_count, count_args);
    cmd_count->add_flag("--csv", count_csv, "emit a q,n,e,N_e,I_e CSV row");

    CommonArgs enum_args;
    std::string enum_family;
    auto* cmd_enum = app.add_subcommand("enumerate", "stream a generator family as text");
    add_qne(cmd_enum, enum_args);
    cmd_enum->add_option("--family", enum_family, "irr | linear")->required();

    CommonArgs build_args;
    std::string build_family, build_out;
    int build_d = 0;
    auto* cmd_build = app.add_subcommand("build", "construct a code and write it out");
    add_qne(cmd_build, build_args);
    cmd_build->add_option("--family", build_family, "irr | linear")->required();
    cmd_build->add_option("--d", build_d, "degree of the codeword space")->required();
    cmd_build->add_option("--out", build_out, "output file (stdout when omitted)");

    CommonArgs params_args;
    std::string params_family;
    int params_d = 0;
    bool params_verify = false;
    auto* cmd_params = app.add_subcommand("params", "code parameters as a CSV row");
    add_qne(cmd_params, params_args);
    cmd_params->add_option("--family", params_family, "irr | linear")->required();
    cmd_params->add_option("--d", params_d, "degree of the codeword space")->required();
    cmd_params->add_flag("--verify", params_verify,
                         "check every pairwise distance with the subspace oracle");

    uint32_t table_q = 2;
    int table_n = 2, table_emax = 5, table_dmax = 10;
    auto* cmd_table = app.add_subcommand("table", "parameter grid for the irreducible family");
    cmd_table->add_option("--q", table_q, "field order")->required();
    cmd_table->add_option("--n", table_n, "number of variables minus one")->required();
    cmd_table->add_option("--e-max", table_emax, "largest generator degree")->required();
    cmd_table->add_option("--d-max", table_dmax, "largest codeword-space degree")->required();

    std::string dist_a, dist_b;
    bool dist_allow = false;
    auto* cmd_dist = app.add_subcommand("dist", "subspace distance between two files");
    cmd_dist->add_option("fileA", dist_a, "first subspace file")->required();
    cmd_dist->add_option("fileB", dist_b, "second subspace file")->required();
    cmd_dist->add_flag("--allow-deficient", dist_allow,
                       "accept rank-deficient input with a warning");

    CommonArgs sim_args;
    std::string sim_family;
    int sim_d = 0, sim_rho = 0, sim_t = 0;
    uint64_t sim_trials = 1000, sim_seed = 0;
    auto* cmd_sim = app.add_subcommand("simulate", "operator-channel decoding trials");
    add_qne(cmd_sim, sim_args);
    cmd_sim->add_option("--family", sim_family, "irr | linear")->required();
    cmd_sim->add_option("--d", sim_d, "degree of the codeword space")->required();
    cmd_sim->add_option("--rho", sim_rho, "erased dimensions per trial")->required();
    cmd_sim->add_option("--t", sim_t, "injected error dimensions per trial")->required();
    cmd_sim->add_option("--trials", sim_trials, "number of trials")->required();
    cmd_sim->add_option("--seed", sim_seed, "base RNG seed")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cmd_count->parsed()) return run_count(count_args, count_csv);
        if (cmd_enum->parsed()) return run_enumerate(enum_args, enum_family);
        if (cmd_build->parsed()) return run_build(build_args, build_family, build_d, build_out);
        if (cmd_params->parsed()) return run_params(params_args, params_family, params_d,
                                                    params_verify);
        if (cmd_table->parsed()) return run_table(table_q, table_n, table_emax, table_dmax);
        if (cmd_dist->parsed()) return run_dist(dist_a, dist_b, dist_allow);
        if (cmd_sim->parsed())
            return run_simulate(sim_args, sim_family, sim_d, sim_rho, sim_t, sim_trials,
                                sim_seed);
    } catch (const formcode::Error& err) {
        std::cerr << "error: " << err.what() << '\n';
        return 1;
    } catch (const std::exception& ex) {
        std::cerr << "error: internal_error: " << ex.what() << '\n';
        return 1;
    }
    return 2;
}
