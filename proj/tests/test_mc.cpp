#include "flrcov/mc.hpp"

#include "test_helpers.hpp"

#include <doctest.h>

using namespace flrcov;

namespace {

Surface reference_for(const DgpSpec& spec, int n) { return *true_lrcov(spec, Grid(n)); }

}  // namespace

TEST_SUITE("mc") {

TEST_CASE("summarize examples") {
    const LossSummary odd = summarize({1, 2, 3, 4, 5});
    CHECK(odd.min == 1);
    CHECK(odd.q1 == 2);
    CHECK(odd.median == 3);
    CHECK(odd.q3 == 4);
    CHECK(odd.max == 5);

    const LossSummary flat = summarize({2.5, 2.5, 2.5, 2.5});
    CHECK(flat.min == 2.5);
    CHECK(flat.q1 == 2.5);
    CHECK(flat.median == 2.5);
    CHECK(flat.q3 == 2.5);
    CHECK(flat.max == 2.5);

    const LossSummary two = summarize({0.0, 1.0});
    CHECK(two.median == 0.5);

    CHECK(summarize({4, 1, 3, 2}).losses == std::vector<double>{4, 1, 3, 2});
    CHECK_THROWS_AS(summarize({}), std::invalid_argument);
}

TEST_CASE("quartiles stay ordered on random input") {
    std::mt19937_64 gen(41);
    std::uniform_real_distribution<double> d(0.0, 10.0);
    for (int rep = 0; rep < 50; ++rep) {
        std::vector<double> v(1 + gen() % 40);
        for (double& x : v) x = d(gen);
        const LossSummary s = summarize(v);
        CHECK(s.min <= s.q1);
        CHECK(s.q1 <= s.median);
        CHECK(s.median <= s.q3);
        CHECK(s.q3 <= s.max);
    }
}

TEST_CASE("run_cell determinism") {
    const DgpSpec dgp = DgpSpec::far_scalar(0.5);
    const ExperimentCell cell{dgp, KernelSpec::bartlett(), Setting::S4, 60, 12, 3, 909};
    const Surface ref = reference_for(dgp, 12);
    const LossSummary a = run_cell(cell, ref, 1);
    const LossSummary b = run_cell(cell, ref, 1);
    CHECK(a.losses == b.losses);
    CHECK(a.bandwidths == b.bandwidths);
    CHECK(a.median == b.median);
}

TEST_CASE("thread fan-out does not change results") {
    const DgpSpec dgp = DgpSpec::far_scalar(0.5);
    const ExperimentCell cell{dgp, KernelSpec::bartlett(), Setting::S4, 80, 10, 8, 910};
    const Surface ref = reference_for(dgp, 10);
    const LossSummary serial = run_cell(cell, ref, 1);
    const LossSummary parallel = run_cell(cell, ref, 2);
    CHECK(serial.losses == parallel.losses);
    CHECK(serial.bandwidths == parallel.bandwidths);
}

TEST_CASE("the sample a replication sees is setting-independent") {
    const Grid g(9);
    const DgpSpec dgp = DgpSpec::far_scalar(0.5);
    for (std::uint64_t r = 0; r < 4; ++r) {
        RngStream s1(911, r), s2(911, r);
        const CurveSample a = simulate(dgp, 50, g, s1);
        const CurveSample b = simulate(dgp, 50, g, s2);
        CHECK(a.data == b.data);
    }
}

TEST_CASE("bad cells are rejected") {
    const DgpSpec dgp = DgpSpec::far_scalar(0.5);
    const Surface ref = reference_for(dgp, 10);
    ExperimentCell cell{dgp, KernelSpec::bartlett(), Setting::S4, 60, 10, 0, 1};
    CHECK_THROWS_AS(run_cell(cell, ref), std::invalid_argument);
    cell.reps = 2;
    cell.n = 11;  // grid mismatch with the reference
    CHECK_THROWS_AS(run_cell(cell, ref), std::invalid_argument);
    cell.n = 10;
    cell.setting = Setting::S5;
    cell.T = 19;
    CHECK_THROWS_AS(run_cell(cell, ref), std::invalid_argument);
    CHECK_THROWS_AS(setting_from_int(9), std::invalid_argument);
    CHECK(setting_from_int(2) == Setting::S2);
}

TEST_CASE("losses are nonnegative and zero only at the reference") {
    const DgpSpec dgp = DgpSpec::ma_scalar(1.0, 0);
    const ExperimentCell cell{dgp, KernelSpec::bartlett(), Setting::S1, 40, 8, 5, 912};
    const LossSummary s = run_cell(cell, reference_for(dgp, 8), 2);
    for (double l : s.losses) CHECK(l > 0.0);
}

TEST_CASE("weakly dependent data: fixed and plug-in losses are comparable") {
    const DgpSpec dgp = DgpSpec::ma_scalar(1.0, 0);
    const Surface ref = reference_for(dgp, 40);
    const KernelSpec bt = KernelSpec::bartlett();
    const ExperimentCell s1{dgp, bt, Setting::S1, 500, 40, 300, 913};
    const ExperimentCell s4{dgp, bt, Setting::S4, 500, 40, 300, 913};
    const double m1 = run_cell(s1, ref, 2).median;
    const double m4 = run_cell(s4, ref, 2).median;
    CHECK(m1 / m4 < 2.0);
    CHECK(m4 / m1 < 2.0);
}

TEST_CASE("strongly dependent data favor the plug-in bandwidth") {
    const DgpSpec dgp = DgpSpec::far_scalar(0.5);
    const Surface ref = reference_for(dgp, 40);
    const KernelSpec bt = KernelSpec::bartlett();
    const ExperimentCell s1{dgp, bt, Setting::S1, 300, 40, 200, 914};
    const ExperimentCell s4{dgp, bt, Setting::S4, 300, 40, 200, 914};
    CHECK(run_cell(s4, ref, 2).median < run_cell(s1, ref, 2).median);
}

TEST_CASE("consistency sweep") {
    const DgpSpec dgp = DgpSpec::far_scalar(0.5);
    const Surface ref = reference_for(dgp, 30);

    SUBCASE("median loss decreases in T") {
        const auto rows = consistency_sweep(dgp, KernelSpec::bartlett(), Setting::S4,
                                            {100, 300, 500}, 30, 100, 915, ref, 2);
        REQUIRE(rows.size() == 3);
        CHECK(rows[0].summary.median > rows[1].summary.median);
        CHECK(rows[1].summary.median > rows[2].summary.median);
    }

    SUBCASE("iid case also contracts") {
        const DgpSpec iid = DgpSpec::ma_scalar(1.0, 0);
        const Surface ref_iid = reference_for(iid, 30);
        const auto rows = consistency_sweep(iid, KernelSpec::bartlett(), Setting::S2,
                                            {100, 500}, 30, 100, 916, ref_iid, 2);
        CHECK(rows[1].summary.median < rows[0].summary.median);
    }

    SUBCASE("single-rep rows are well formed") {
        const auto rows = consistency_sweep(dgp, KernelSpec::bartlett(), Setting::S1,
                                            {50, 80}, 30, 1, 917, ref, 1);
        for (const auto& row : rows) {
            CHECK(row.summary.losses.size() == 1);
            CHECK(row.summary.min == row.summary.max);
        }
    }

    SUBCASE("Ts must increase strictly") {
        CHECK_THROWS_AS(consistency_sweep(dgp, KernelSpec::bartlett(), Setting::S1,
                                          {100, 100}, 30, 2, 918, ref),
                        std::invalid_argument);
        CHECK_THROWS_AS(consistency_sweep(dgp, KernelSpec::bartlett(), Setting::S1,
                                          {300, 100}, 30, 2, 918, ref),
                        std::invalid_argument);
    }
}

TEST_CASE("forced bandwidth override") {
    const DgpSpec dgp = DgpSpec::far_scalar(0.5);
    const Surface ref = reference_for(dgp, 10);
    const ExperimentCell cell{dgp, KernelSpec::bartlett(), Setting::S4, 60, 10, 4, 919};
    CellOptions opts;
    opts.h_override = 3.25;
    const LossSummary s = run_cell(cell, ref, 1, opts);
    for (double h : s.bandwidths) CHECK(h == 3.25);
}

}  // TEST_SUITE
