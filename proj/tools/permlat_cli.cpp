// Command-line front end: single-object queries print JSON on stdout, the
// census subcommands print a JSON summary and optionally write per-sample CSV.
// Exit codes: 0 success, 2 invalid input or config, 1 internal failure.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "permlat/harness.hpp"
#include "permlat/json_io.hpp"
#include "permlat/poly.hpp"
#include "permlat/reduction.hpp"

namespace {

using namespace permlat;

Json load_lattice_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open lattice file: " + path);
    Json j;
    in >> j;
    return j;
}

void emit(const Json& j) {
    std::cout << j.dump(2) << "\n";
}

struct CensusOptions {
    int n = 0;
    std::string tau;
    long box = 10;
    long samples = 1000;
    std::uint64_t seed = 1;
    std::string mode = "orbit";
    std::string out_path;

    ExperimentConfig to_config() const {
        ExperimentConfig cfg;
        cfg.n = n;
        cfg.tau_text = tau;
        cfg.box = box;
        cfg.samples = samples;
        cfg.seed = seed;
        cfg.mode = parse_sample_mode(mode);
        return cfg;
    }
};

void add_census_flags(CLI::App* cmd, CensusOptions& opts) {
    cmd->add_option("--n", opts.n, "ambient dimension")->required();
    cmd->add_option("--tau", opts.tau, "permutation (cycle notation or image list)")->required();
    cmd->add_option("--box", opts.box, "coordinate bound B for sampled vectors");
    cmd->add_option("--samples", opts.samples, "number of samples");
    cmd->add_option("--seed", opts.seed, "64-bit census seed");
    cmd->add_option("--mode", opts.mode, "orbit | orbit-span | direct-sum");
    cmd->add_option("--out", opts.out_path, "write per-sample CSV to this file");
}

void write_csv_if_requested(const CensusOptions& opts, const std::vector<SampleRecord>& records) {
    if (opts.out_path.empty()) return;
    std::ofstream out(opts.out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + opts.out_path);
    out << records_to_csv(records);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for permutation invariant lattices"};
    app.require_subcommand(1);

    std::string perm_text, vector_text, lattice_path, cycle_type_text;
    int cyclo_d = 1;
    CensusOptions rank_opts, wr_opts;

    auto* cmd_order = app.add_subcommand("order", "tau-order of a vector");
    cmd_order->add_option("perm", perm_text)->required();
    cmd_order->add_option("vector", vector_text)->required();

    auto* cmd_generic = app.add_subcommand("generic-order", "generic tau-order of a cycle type");
    cmd_generic->add_option("cycle-type", cycle_type_text)->required();

    auto* cmd_cyclo = app.add_subcommand("cyclotomic", "d-th cyclotomic polynomial");
    cmd_cyclo->add_option("d", cyclo_d)->required();

    auto* cmd_orbit = app.add_subcommand("orbit", "orbit lattice of a vector");
    cmd_orbit->add_option("perm", perm_text)->required();
    cmd_orbit->add_option("vector", vector_text)->required();

    auto* cmd_invariant = app.add_subcommand("invariant", "decide tau-invariance of a lattice");
    cmd_invariant->add_option("perm", perm_text)->required();
    cmd_invariant->add_option("lattice", lattice_path)->required();

    auto* cmd_minima = app.add_subcommand("minima", "successive minima of a lattice");
    cmd_minima->add_option("lattice", lattice_path)->required();

    auto* cmd_wr = app.add_subcommand("wr", "well-roundedness of a lattice");
    cmd_wr->add_option("lattice", lattice_path)->required();

    auto* cmd_mink = app.add_subcommand("minkowskian", "Minkowskian test for a lattice");
    cmd_mink->add_option("lattice", lattice_path)->required();

    auto* cmd_sub = app.add_subcommand("subspaces", "invariant subspaces of an n-cycle");
    cmd_sub->add_option("perm", perm_text)->required();

    auto* cmd_census_rank = app.add_subcommand("census-rank", "tau-order census over orbit lattices");
    add_census_flags(cmd_census_rank, rank_opts);

    auto* cmd_census_wr = app.add_subcommand("census-wr", "well-roundedness census");
    add_census_flags(cmd_census_wr, wr_opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cmd_order->parsed()) {
            const std::vector<Int> x = parse_int_vector(vector_text);
            const Permutation tau = Permutation::parse(perm_text, static_cast<int>(x.size()));
            emit(Json{{"n", tau.degree()},
                      {"tau", tau.to_cycle_string()},
                      {"x", int_vector_to_json(x)},
                      {"tau_order", tau_order(x, tau)}});
        } else if (cmd_generic->parsed()) {
            const CycleType ct = CycleType::parse(cycle_type_text);
            const GenericOrder g = generic_order(ct);
            emit(Json{{"cycle_type", ct.to_string()},
                      {"n", ct.n()},
                      {"o_generic", g.o_generic},
                      {"pairwise_value", g.pairwise_value},
                      {"agreement", g.agreement}});
        } else if (cmd_cyclo->parsed()) {
            const IntPolynomial phi = cyclotomic(cyclo_d);
            emit(Json{{"d", cyclo_d},
                      {"degree", phi.degree()},
                      {"polynomial", phi.to_string()},
                      {"coefficients_low_to_high", int_vector_to_json(phi.coefficients())}});
        } else if (cmd_orbit->parsed()) {
            const std::vector<Int> x = parse_int_vector(vector_text);
            const Permutation tau = Permutation::parse(perm_text, static_cast<int>(x.size()));
            const Lattice lat = orbit_lattice(x, tau);
            Json j{{"tau", tau.to_cycle_string()},
                   {"x", int_vector_to_json(x)},
                   {"tau_order", lat.rank()},
                   {"full_rank", lat.is_full_rank()},
                   {"lattice", lattice_to_json(lat)}};
            if (lat.rank() >= 1) j["det_sq"] = int_to_json(lat.det_sq());
            emit(j);
        } else if (cmd_invariant->parsed()) {
            const Lattice lat = lattice_from_json(load_lattice_json(lattice_path));
            const Permutation tau = Permutation::parse(perm_text, lat.ambient_dim());
            emit(Json{{"tau", tau.to_cycle_string()},
                      {"invariant", lat.is_invariant_under(tau)}});
        } else if (cmd_minima->parsed()) {
            const Lattice lat = lattice_from_json(load_lattice_json(lattice_path));
            emit(minima_to_json(successive_minima(lat)));
        } else if (cmd_wr->parsed()) {
            const Lattice lat = lattice_from_json(load_lattice_json(lattice_path));
            const MinimaProfile profile = successive_minima(lat);
            emit(Json{{"well_rounded", profile.minima_sq.front() == profile.minima_sq.back()},
                      {"minima_sq", int_vector_to_json(profile.minima_sq)},
                      {"minimal_vector_count",
                       static_cast<long>(minimal_vectors(lat).vectors.size())}});
        } else if (cmd_mink->parsed()) {
            const Lattice lat = lattice_from_json(load_lattice_json(lattice_path));
            emit(Json{{"minkowskian", is_minkowskian(lat)}});
        } else if (cmd_sub->parsed()) {
            const Permutation tau = Permutation::parse(perm_text);
            const auto spaces = invariant_subspaces_ncycle(tau);
            Json arr = Json::array();
            for (const auto& s : spaces) {
                Json e = subspace_to_json(s.space);
                e["divisor"] = s.divisor.to_string();
                arr.push_back(e);
            }
            emit(Json{{"n", tau.degree()},
                      {"count", static_cast<long>(spaces.size())},
                      {"subspaces", arr}});
        } else if (cmd_census_rank->parsed()) {
            const RankCensusResult result = rank_census(rank_opts.to_config());
            write_csv_if_requested(rank_opts, result.records);
            emit(rank_census_summary(result));
        } else if (cmd_census_wr->parsed()) {
            const WrCensusResult result = wr_census(wr_opts.to_config());
            write_csv_if_requested(wr_opts, result.records);
            emit(wr_census_summary(result));
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
