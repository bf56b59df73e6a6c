#include "doctest.h"

#include "permlat/json_io.hpp"
#include "permlat/lattice.hpp"
#include "permlat/rng.hpp"
#include "permlat/taulat.hpp"

#include "oracles.hpp"

using namespace permlat;

namespace {

Lattice lat3() {
    // index-2 sublattice of Z^3 (even coordinate sums)
    return Lattice::from_generators({{1, 1, 0}, {0, 1, 1}, {1, 0, 1}}, 3);
}

Lattice dim5() {
    return Lattice::from_generators(
        {{2, 0, 0, 0, 0}, {0, 2, 0, 0, 0}, {0, 0, 2, 0, 0}, {0, 0, 0, 2, 0}, {1, 1, 1, 1, 1}}, 5);
}

Permutation random_permutation(int n, SplitMix64& rng) {
    std::vector<int> im(static_cast<std::size_t>(n));
    std::iota(im.begin(), im.end(), 1);
    for (int i = n - 1; i > 0; --i) {
        auto j = static_cast<std::size_t>(rng.bounded(static_cast<std::uint64_t>(i + 1)));
        std::swap(im[static_cast<std::size_t>(i)], im[j]);
    }
    return Permutation(im);
}

}  // namespace

TEST_CASE("from_generators canonicalizes") {
    const Lattice z2 = Lattice::from_generators({{2, 0}, {3, 0}, {0, 1}}, 2);
    CHECK(z2 == Lattice::standard(2));

    CHECK(Lattice::from_generators({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, 3) == Lattice::standard(3));

    const Lattice l = lat3();
    CHECK(l.rank() == 3);
    CHECK(l.det_sq() == 4);
    CHECK(l.abs_det() == 2);

    // canonical-form idempotence
    std::vector<std::vector<Int>> cols;
    for (int j = 0; j < l.rank(); ++j) cols.push_back(l.basis_column(j));
    CHECK(Lattice::from_generators(cols, 3) == l);

    const Lattice zero = Lattice::from_generators({{0, 0}, {0, 0}}, 2);
    CHECK(zero.rank() == 0);
    CHECK_THROWS_AS(zero.det_sq(), std::invalid_argument);
}

TEST_CASE("membership") {
    const Lattice l = Lattice::from_generators({{1, 0}, {0, 2}}, 2);
    CHECK_FALSE(l.contains({0, 1}));
    CHECK(l.contains({2, 0}));
    CHECK(lat3().contains({0, 2, 0}));
    CHECK_FALSE(lat3().contains({0, 1, 0}));
    CHECK_THROWS_AS(l.contains({1, 2, 3}), std::invalid_argument);

    SUBCASE("coordinates reproduce the vector") {
        SplitMix64 rng(31);
        for (int trial = 0; trial < 100; ++trial) {
            const int n = static_cast<int>(rng.bounded(4)) + 1;
            const int gens = static_cast<int>(rng.bounded(3)) + 1;
            std::vector<std::vector<Int>> g;
            for (int i = 0; i < gens; ++i) g.push_back(rng.uniform_vector(n, 3));
            const Lattice l2 = Lattice::from_generators(g, n);
            if (l2.rank() == 0) continue;
            // lattice point with coefficients in [-5, 5]
            std::vector<Int> v(static_cast<std::size_t>(n), Int(0));
            for (int j = 0; j < l2.rank(); ++j) {
                const Int c = Int(rng.uniform(-5, 5));
                for (int i = 0; i < n; ++i)
                    v[static_cast<std::size_t>(i)] += c * l2.basis().at(i, j);
            }
            const auto coords = l2.coordinates(v);
            REQUIRE(coords.has_value());
            std::vector<Int> rebuilt(static_cast<std::size_t>(n), Int(0));
            for (int j = 0; j < l2.rank(); ++j)
                for (int i = 0; i < n; ++i)
                    rebuilt[static_cast<std::size_t>(i)] += (*coords)[static_cast<std::size_t>(j)] * l2.basis().at(i, j);
            CHECK(rebuilt == v);
        }
    }
    SUBCASE("agrees with the rational-solve oracle") {
        SplitMix64 rng(37);
        for (int trial = 0; trial < 200; ++trial) {
            const int n = static_cast<int>(rng.bounded(4)) + 1;
            const int gens = static_cast<int>(rng.bounded(3)) + 1;
            std::vector<std::vector<Int>> g;
            for (int i = 0; i < gens; ++i) g.push_back(rng.uniform_vector(n, 3));
            const Lattice l2 = Lattice::from_generators(g, n);
            if (l2.rank() == 0) continue;
            const std::vector<Int> v = rng.uniform_vector(n, 4);
            CHECK(l2.contains(v) == oracle::member_by_rational_solve(l2.basis(), v));
        }
    }
    SUBCASE("agrees with the bounded-coefficient search oracle") {
        SplitMix64 rng(39);
        for (int trial = 0; trial < 100; ++trial) {
            const int n = static_cast<int>(rng.bounded(4)) + 1;
            const int r = static_cast<int>(rng.bounded(3)) + 1;
            std::vector<std::vector<Int>> g;
            for (int i = 0; i < r; ++i) g.push_back(rng.uniform_vector(n, 3));
            const Lattice l2 = Lattice::from_generators(g, n);
            if (l2.rank() == 0) continue;
            // one vector built with coefficients in [-5, 5], one arbitrary
            std::vector<Int> inside(static_cast<std::size_t>(n), Int(0));
            for (int j = 0; j < l2.rank(); ++j) {
                const Int c = Int(rng.uniform(-5, 5));
                for (int i = 0; i < n; ++i)
                    inside[static_cast<std::size_t>(i)] += c * l2.basis().at(i, j);
            }
            CHECK(l2.contains(inside));
            CHECK(oracle::member_by_bounded_search(l2.basis(), inside));
            const std::vector<Int> probe = rng.uniform_vector(n, 4);
            CHECK(l2.contains(probe) == oracle::member_by_bounded_search(l2.basis(), probe));
        }
    }
}

TEST_CASE("gram data") {
    CHECK(Lattice::standard(3).det_sq() == 1);
    CHECK(Lattice::from_generators({{1, 0}, {0, 2}}, 2).det_sq() == 4);

    const GramData gd = lat3().gram();
    CHECK(gd.det_sq == 4);
    CHECK(gd.gram == gd.gram.transpose());
    // positive definiteness via leading principal minors
    for (int k = 1; k <= gd.gram.rows(); ++k) {
        IntMatrix minor(k, k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) minor.at(i, j) = gd.gram.at(i, j);
        CHECK(bareiss_determinant(minor) > 0);
    }
}

TEST_CASE("direct sums") {
    CHECK(direct_sum({Lattice::standard(2), Lattice::standard(3)}) == Lattice::standard(5));

    const Lattice sum = direct_sum({Lattice::from_generators({{1, 0}, {0, 2}}, 2), Lattice::standard(1)});
    CHECK(sum.ambient_dim() == 3);
    CHECK(sum.det_sq() == 4);

    CHECK_THROWS_AS(direct_sum({}), std::invalid_argument);

    SUBCASE("determinant multiplicativity") {
        SplitMix64 rng(41);
        for (int trial = 0; trial < 50; ++trial) {
            auto random_full = [&](int n) {
                for (;;) {
                    std::vector<std::vector<Int>> g;
                    for (int i = 0; i < n; ++i) g.push_back(rng.uniform_vector(n, 4));
                    Lattice l = Lattice::from_generators(g, n);
                    if (l.rank() == n) return l;
                }
            };
            const Lattice a = random_full(static_cast<int>(rng.bounded(3)) + 1);
            const Lattice b = random_full(static_cast<int>(rng.bounded(3)) + 1);
            CHECK(direct_sum({a, b}).det_sq() == a.det_sq() * b.det_sq());
        }
    }
    SUBCASE("invariant parts give an invariant whole") {
        const Permutation tau = Permutation::parse("(1 2)(3 4 5)");
        const Lattice part2 = orbit_lattice({1, 3}, Permutation::standard_cycle(2));
        const Lattice part3 = orbit_lattice({1, 1, 2}, Permutation::standard_cycle(3));
        const Lattice whole = direct_sum({part2, part3});
        CHECK(part2.is_invariant_under(Permutation::standard_cycle(2)));
        CHECK(part3.is_invariant_under(Permutation::standard_cycle(3)));
        CHECK(whole.is_invariant_under(tau));
    }
}

TEST_CASE("tau invariance") {
    SplitMix64 rng(43);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = static_cast<int>(rng.bounded(5)) + 1;
        CHECK(Lattice::standard(n).is_invariant_under(random_permutation(n, rng)));
    }

    CHECK_FALSE(Lattice::from_generators({{1, 0}, {0, 2}}, 2).is_invariant_under(Permutation({2, 1})));
    CHECK_THROWS_AS(Lattice::standard(3).is_invariant_under(Permutation({2, 1})), std::invalid_argument);

    SUBCASE("orbit lattices are invariant by construction") {
        for (int trial = 0; trial < 200; ++trial) {
            const int n = static_cast<int>(rng.bounded(6)) + 2;
            const Permutation tau = random_permutation(n, rng);
            const std::vector<Int> x = rng.uniform_nonzero_vector(n, 10);
            CHECK(orbit_lattice(x, tau).is_invariant_under(tau));
        }
    }
    SUBCASE("invariance is closed under composition") {
        for (int trial = 0; trial < 100; ++trial) {
            const int n = static_cast<int>(rng.bounded(4)) + 2;
            const Permutation tau = random_permutation(n, rng);
            const Permutation sigma = random_permutation(n, rng);
            std::vector<std::vector<Int>> gens;
            const std::vector<Int> x = rng.uniform_nonzero_vector(n, 5);
            for (const auto& c : orbit_matrix(x, tau).columns()) gens.push_back(c);
            for (const auto& c : orbit_matrix(x, sigma).columns()) gens.push_back(c);
            // span of both orbits is invariant under each generator separately
            const Lattice l = Lattice::from_generators(gens, n);
            if (l.is_invariant_under(tau) && l.is_invariant_under(sigma))
                CHECK(l.is_invariant_under(tau * sigma));
        }
    }
}

TEST_CASE("symmetric automorphism group") {
    const auto z2_auts = sym_automorphisms(Lattice::standard(2));
    CHECK(z2_auts.size() == 2);

    const auto skew = sym_automorphisms(Lattice::from_generators({{1, 0}, {0, 2}}, 2));
    REQUIRE(skew.size() == 1);
    CHECK(skew.front().is_identity());

    const auto sym3 = sym_automorphisms(lat3());
    CHECK(sym3.size() == 6);

    SUBCASE("output is a subgroup") {
        for (const Lattice& l : {Lattice::standard(3), lat3(), Lattice::from_generators({{1, 0, 0}, {0, 2, 0}, {0, 0, 2}}, 3)}) {
            const auto auts = sym_automorphisms(l);
            auto found = [&](const Permutation& p) {
                for (const auto& q : auts)
                    if (q == p) return true;
                return false;
            };
            CHECK(found(Permutation::identity(l.ambient_dim())));
            for (const auto& a : auts) {
                CHECK(found(a.inverse()));
                for (const auto& b : auts) CHECK(found(a * b));
            }
        }
    }

    IntMatrix big = IntMatrix::identity(9);
    CHECK_THROWS_AS(sym_automorphisms(Lattice::from_matrix_columns(big)), std::invalid_argument);
}

TEST_CASE("index of a sublattice") {
    const Lattice z2 = Lattice::standard(2);
    const Lattice two_z2 = Lattice::from_generators({{2, 0}, {0, 2}}, 2);
    CHECK(lattice_index(two_z2, z2) == 4);
    CHECK(lattice_index(z2, z2) == 1);

    const Lattice two_z5 = Lattice::from_generators(
        {{2, 0, 0, 0, 0}, {0, 2, 0, 0, 0}, {0, 0, 2, 0, 0}, {0, 0, 0, 2, 0}, {0, 0, 0, 0, 2}}, 5);
    CHECK(lattice_index(two_z5, dim5()) == 2);

    CHECK_THROWS_AS(lattice_index(z2, two_z2), std::invalid_argument);  // not contained
}

TEST_CASE("lattice json round trip") {
    for (const Lattice& l : {Lattice::standard(3), lat3(), dim5()}) {
        const Json j = lattice_to_json(l);
        CHECK(lattice_from_json(j) == l);
    }
    CHECK_THROWS_AS(lattice_from_json(Json{{"ambient_dim", 2}}), std::invalid_argument);
}
