#include "permlat/harness.hpp"

#include <sstream>
#include <stdexcept>

#include "permlat/poly.hpp"
#include "permlat/reduction.hpp"
#include "permlat/rng.hpp"

namespace permlat {

Permutation ExperimentConfig::tau() const {
    return Permutation::parse(tau_text, n);
}

void ExperimentConfig::validate() const {
    if (n < 1 || n > 16) throw std::invalid_argument("config: n must be in [1, 16]");
    if (samples < 1) throw std::invalid_argument("config: samples must be >= 1");
    if (box < 1) throw std::invalid_argument("config: box must be >= 1");
    Permutation t = tau();
    if (t.degree() != n) throw std::invalid_argument("config: tau degree does not match n");
}

int wr_equation_count(const Permutation& tau) {
    const int n = tau.degree();
    const int o = generic_order(tau.cycle_type()).o_generic;
    return (n + o - 1) / o - 1;
}

namespace {

SampleRecord rank_sample(const ExperimentConfig& cfg, const Permutation& tau, long index) {
    SplitMix64 rng(sub_seed(cfg.seed, static_cast<std::uint64_t>(index)));
    std::vector<Int> x = rng.uniform_nonzero_vector(cfg.n, cfg.box);
    Lattice lat = orbit_lattice(x, tau);

    SampleRecord rec;
    rec.sample_index = index;
    rec.generators = {x};
    rec.tau_order = lat.rank();
    rec.full_rank = lat.rank() == cfg.n;
    if (rec.full_rank) rec.det_sq = lat.det_sq();
    return rec;
}

}  // namespace

RankCensusResult rank_census(const ExperimentConfig& cfg) {
    cfg.validate();
    if (cfg.mode != SampleMode::orbit)
        throw std::invalid_argument("rank census runs in orbit mode only");
    const Permutation tau = cfg.tau();

    RankCensusResult result;
    result.cfg = cfg;
    result.o_generic = generic_order(tau.cycle_type()).o_generic;
    for (long i = 0; i < cfg.samples; ++i) {
        SampleRecord rec = rank_sample(cfg, tau, i);
        result.order_histogram[rec.tau_order]++;
        result.max_order = std::max(result.max_order, rec.tau_order);
        if (rec.tau_order == result.o_generic) ++result.generic_attained;
        if (rec.full_rank) ++result.full_rank_count;
        result.records.push_back(std::move(rec));
    }
    return result;
}

WrCensusResult wr_census(const ExperimentConfig& cfg) {
    cfg.validate();
    const Permutation tau = cfg.tau();
    if (cfg.mode == SampleMode::orbit && !tau.is_n_cycle())
        throw std::invalid_argument("wr census in orbit mode requires an n-cycle "
                                    "(orbit lattices of other permutations never reach full rank)");

    WrCensusResult result;
    result.cfg = cfg;
    for (long i = 0; i < cfg.samples; ++i) {
        SampleRecord rec;
        rec.sample_index = i;
        Lattice lat = Lattice::from_generators({}, cfg.n);
        if (cfg.mode == SampleMode::orbit) {
            SplitMix64 rng(sub_seed(cfg.seed, static_cast<std::uint64_t>(i)));
            std::vector<Int> x = rng.uniform_nonzero_vector(cfg.n, cfg.box);
            lat = orbit_lattice(x, tau);
            rec.generators = {x};
        } else {
            RandomLatticeResult sampled = random_invariant_lattice(
                tau, cfg.box, cfg.mode, sub_seed(cfg.seed, static_cast<std::uint64_t>(i)));
            lat = sampled.lattice;
            rec.generators = sampled.generators;
        }
        for (const auto& g : rec.generators)
            rec.tau_order = std::max(rec.tau_order, tau_order(g, tau));
        rec.full_rank = lat.rank() == cfg.n;
        if (!rec.full_rank) {
            ++result.discarded_count;
        } else {
            ++result.full_rank_count;
            if (!lat.is_invariant_under(tau))
                throw std::logic_error("census produced a non-invariant lattice");
            rec.det_sq = lat.det_sq();
            const MinimaProfile profile = successive_minima(lat);
            rec.minima_sq = profile.minima_sq;
            const bool wr = profile.minima_sq.front() == profile.minima_sq.back();
            if (wr) {
                if (!verify_well_rounded_by_box(lat, profile.minima_sq.front()))
                    throw std::logic_error("well-rounded flag failed independent re-verification");
                ++result.wr_reverified_count;
                ++result.wr_count;
            }
            rec.wr = wr;
        }
        result.records.push_back(std::move(rec));
    }
    return result;
}

namespace {

std::string generators_cell(const std::vector<std::vector<Int>>& generators) {
    std::string out;
    for (std::size_t g = 0; g < generators.size(); ++g) {
        if (g) out += ";";
        out += "(" + format_int_vector(generators[g], " ") + ")";
    }
    return out;
}

}  // namespace

std::string records_to_csv(const std::vector<SampleRecord>& records) {
    std::ostringstream out;
    out << "sample_index,tau_order,full_rank,wr,minima_sq,det_sq,generators\n";
    for (const SampleRecord& rec : records) {
        out << rec.sample_index << "," << rec.tau_order << "," << (rec.full_rank ? 1 : 0) << ",";
        if (rec.wr) out << (*rec.wr ? 1 : 0);
        out << ",";
        if (rec.minima_sq) out << format_int_vector(*rec.minima_sq, "|");
        out << ",";
        if (rec.det_sq) out << rec.det_sq->get_str();
        out << "," << generators_cell(rec.generators) << "\n";
    }
    return out.str();
}

namespace {

Json config_json(const ExperimentConfig& cfg) {
    return Json{{"n", cfg.n},       {"tau", cfg.tau_text},
                {"box", cfg.box},   {"samples", cfg.samples},
                {"seed", cfg.seed}, {"mode", to_string(cfg.mode)}};
}

}  // namespace

Json rank_census_summary(const RankCensusResult& result) {
    Json hist = Json::object();
    for (const auto& [order, count] : result.order_histogram)
        hist[std::to_string(order)] = count;
    const Permutation tau = result.cfg.tau();
    return Json{{"config", config_json(result.cfg)},
                {"order_histogram", hist},
                {"max_order", result.max_order},
                {"o_generic", result.o_generic},
                {"generic_attained", result.generic_attained},
                {"generic_attained_fraction",
                 static_cast<double>(result.generic_attained) / static_cast<double>(result.cfg.samples)},
                {"full_rank_count", result.full_rank_count},
                {"is_n_cycle", tau.is_n_cycle()}};
}

Json wr_census_summary(const WrCensusResult& result) {
    Json j{{"config", config_json(result.cfg)},
           {"samples", result.cfg.samples},
           {"full_rank_count", result.full_rank_count},
           {"discarded_count", result.discarded_count},
           {"wr_count", result.wr_count},
           {"wr_reverified_count", result.wr_reverified_count}};
    if (result.full_rank_count > 0) {
        j["wr_frequency_exact"] = std::to_string(result.wr_count) + "/" + std::to_string(result.full_rank_count);
        j["wr_frequency"] =
            static_cast<double>(result.wr_count) / static_cast<double>(result.full_rank_count);
    }
    return j;
}

}  // namespace permlat
