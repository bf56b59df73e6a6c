#include "doctest.h"

#include "permlat/harness.hpp"
#include "permlat/poly.hpp"

using namespace permlat;

namespace {

ExperimentConfig make_config(int n, const std::string& tau, SampleMode mode, long samples,
                             std::uint64_t seed = 1, long box = 5) {
    ExperimentConfig cfg;
    cfg.n = n;
    cfg.tau_text = tau;
    cfg.mode = mode;
    cfg.samples = samples;
    cfg.seed = seed;
    cfg.box = box;
    return cfg;
}

}  // namespace

TEST_CASE("wr equation count") {
    for (int n = 1; n <= 10; ++n)
        CHECK(wr_equation_count(Permutation::standard_cycle(n)) == 0);
    CHECK(wr_equation_count(canonical_of_type(CycleType({2, 2}))) == 1);
    CHECK(wr_equation_count(canonical_of_type(CycleType({2, 2, 2}))) == 2);

    // zero exactly on n-cycles
    for (int n = 1; n <= 10; ++n)
        for (const CycleType& ct : all_cycle_types(n)) {
            const int count = wr_equation_count(canonical_of_type(ct));
            CHECK((count == 0) == ct.is_n_cycle());
        }
}

TEST_CASE("config validation") {
    CHECK_THROWS_AS(make_config(0, "()", SampleMode::orbit, 10).validate(), std::invalid_argument);
    CHECK_THROWS_AS(make_config(3, "(1 2 3)", SampleMode::orbit, 0).validate(), std::invalid_argument);
    CHECK_THROWS_AS(make_config(3, "(1 4)", SampleMode::orbit, 10).validate(), std::invalid_argument);
    ExperimentConfig bad_box = make_config(3, "(1 2 3)", SampleMode::orbit, 10);
    bad_box.box = 0;
    CHECK_THROWS_AS(bad_box.validate(), std::invalid_argument);
    CHECK_NOTHROW(make_config(3, "(1 2 3)", SampleMode::orbit, 10).validate());
}

TEST_CASE("rank census") {
    SUBCASE("non-n-cycles never reach full rank") {
        const auto res = rank_census(make_config(4, "(1 2)(3 4)", SampleMode::orbit, 300, 5, 10));
        CHECK(res.full_rank_count == 0);
        CHECK(res.o_generic == 2);
        CHECK(res.max_order == 2);
        CHECK(res.generic_attained > 0);
        for (const auto& rec : res.records) {
            CHECK(rec.tau_order <= 2);
            CHECK_FALSE(rec.full_rank);
            CHECK_FALSE(rec.wr.has_value());
        }
    }
    SUBCASE("n-cycles reach full rank with positive frequency") {
        const auto res = rank_census(make_config(4, "(1 2 3 4)", SampleMode::orbit, 300, 5, 5));
        CHECK(res.full_rank_count > 0);
        CHECK(res.max_order == 4);
        for (const auto& rec : res.records)
            if (rec.full_rank) CHECK(rec.det_sq.has_value());
    }
    SUBCASE("identity gives order 1 everywhere") {
        const auto res = rank_census(make_config(3, "()", SampleMode::orbit, 100));
        CHECK(res.max_order == 1);
        CHECK(res.order_histogram.at(1) == 100);
    }
    SUBCASE("requires orbit mode") {
        CHECK_THROWS_AS(rank_census(make_config(4, "(1 2 3 4)", SampleMode::orbit_span, 10)),
                        std::invalid_argument);
    }
}

TEST_CASE("wr census") {
    SUBCASE("n-cycle in orbit mode") {
        const auto res = wr_census(make_config(3, "(1 2 3)", SampleMode::orbit, 300, 29));
        CHECK(res.full_rank_count + res.discarded_count == 300);
        CHECK(res.full_rank_count > 0);
        CHECK(res.wr_count > 0);
        CHECK(res.wr_count == res.wr_reverified_count);
        for (const auto& rec : res.records) {
            CHECK(rec.wr.has_value() == rec.full_rank);
            CHECK(rec.minima_sq.has_value() == rec.full_rank);
            CHECK(rec.tau_order <= 3);
        }
    }
    SUBCASE("orbit-span mode for a non-n-cycle") {
        const auto res = wr_census(make_config(4, "(1 2)(3 4)", SampleMode::orbit_span, 100, 31));
        CHECK(res.full_rank_count > 0);
        CHECK(res.wr_count == res.wr_reverified_count);
    }
    SUBCASE("direct-sum mode, identity permutations included") {
        const auto res = wr_census(make_config(3, "()", SampleMode::direct_sum, 100, 37));
        CHECK(res.full_rank_count > 0);
        CHECK(res.wr_count == res.wr_reverified_count);
    }
    SUBCASE("orbit mode rejects non-n-cycles") {
        CHECK_THROWS_AS(wr_census(make_config(4, "(1 2)(3 4)", SampleMode::orbit, 10)),
                        std::invalid_argument);
    }
}

TEST_CASE("census determinism") {
    const auto cfg_rank = make_config(4, "(1 2)(3 4)", SampleMode::orbit, 150, 99);
    CHECK(records_to_csv(rank_census(cfg_rank).records) ==
          records_to_csv(rank_census(cfg_rank).records));

    const auto cfg_wr = make_config(4, "(1 2 3 4)", SampleMode::orbit, 100, 99);
    CHECK(records_to_csv(wr_census(cfg_wr).records) == records_to_csv(wr_census(cfg_wr).records));

    const auto cfg_ds = make_config(4, "(1 2)(3 4)", SampleMode::direct_sum, 50, 99);
    CHECK(records_to_csv(wr_census(cfg_ds).records) == records_to_csv(wr_census(cfg_ds).records));
}

TEST_CASE("csv format") {
    SampleRecord rec;
    rec.sample_index = 0;
    rec.generators = {{Int(1), Int(0), Int(2)}, {Int(0), Int(-1), Int(1)}};
    rec.tau_order = 2;
    rec.full_rank = true;
    rec.wr = false;
    rec.minima_sq = std::vector<Int>{1, 1, 4};
    rec.det_sq = Int(16);

    SampleRecord sparse;
    sparse.sample_index = 1;
    sparse.generators = {{Int(3), Int(3), Int(3)}};
    sparse.tau_order = 1;
    sparse.full_rank = false;

    CHECK(records_to_csv({rec, sparse}) ==
          "sample_index,tau_order,full_rank,wr,minima_sq,det_sq,generators\n"
          "0,2,1,0,1|1|4,16,(1 0 2);(0 -1 1)\n"
          "1,1,0,,,,(3 3 3)\n");
}

TEST_CASE("summaries") {
    const auto rank_res = rank_census(make_config(4, "(1 2)(3 4)", SampleMode::orbit, 50, 3));
    const Json sj = rank_census_summary(rank_res);
    CHECK(sj.at("full_rank_count").get<long>() == 0);
    CHECK(sj.at("o_generic").get<int>() == 2);
    CHECK_FALSE(sj.at("is_n_cycle").get<bool>());

    const auto wr_res = wr_census(make_config(3, "(1 2 3)", SampleMode::orbit, 50, 3));
    const Json wj = wr_census_summary(wr_res);
    CHECK(wj.at("wr_count").get<long>() == wj.at("wr_reverified_count").get<long>());
    CHECK(wj.at("full_rank_count").get<long>() + wj.at("discarded_count").get<long>() == 50);
}
