/*
 * Copyright 2026 The sunrise-sim Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <cmath>

#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "sunrise/econ.hpp"

using namespace sunrise;
using namespace sunrise::econ;
using Catch::Approx;

TEST_CASE("gross dies per wafer") {
    CHECK(dies_per_wafer(110.0) == 579u);
    CHECK(dies_per_wafer(456.0) == 123u);
    CHECK(dies_per_wafer(709.0) == 74u);
    CHECK(dies_per_wafer(800.0) == 64u);
    CHECK(dies_per_wafer(1e5) == 0u);   // larger than the wafer

    // The row-sum formula agrees with an explicit grid placement within a few
    // percent for mid-size dies.
    const double formula = static_cast<double>(dies_per_wafer(110.0));
    const double grid = static_cast<double>(oracles::grid_dies(110.0, 300.0));
    CHECK(std::abs(formula - grid) / grid < 0.05);
}

TEST_CASE("die yield models") {
    CHECK(die_yield(110.0, 0.0, YieldModel::Poisson) == 1.0);
    CHECK(die_yield(110.0, 0.0, YieldModel::Murphy) == 1.0);
    CHECK(die_yield(110.0, 0.0005, YieldModel::Poisson) == Approx(std::exp(-0.055)));

    const double x = 456.0 * 0.0012;
    const double murphy = std::pow((1.0 - std::exp(-x)) / x, 2.0);
    CHECK(die_yield(456.0, 0.0012, YieldModel::Murphy) == Approx(murphy));
}

TEST_CASE("Murphy yield dominates Poisson on a defect grid") {
    for (double area : {50.0, 110.0, 300.0, 456.0, 709.0, 800.0}) {
        for (double d0 : {1e-4, 5e-4, 1e-3, 5e-3, 1e-2}) {
            INFO(area << " mm^2, d0 " << d0);
            CHECK(die_yield(area, d0, YieldModel::Murphy) >
                  die_yield(area, d0, YieldModel::Poisson));
        }
    }
}

TEST_CASE("bonded die cost composes both wafers") {
    const auto chips = techscale::builtin_chips();
    const auto table = builtin_cost_table();

    // Recompute the stacked part by hand: logic share plus memory share with
    // the repair floor, over the bonding yield.
    const double logic = 3400.0 / (579.0 * std::exp(-110.0 * 0.0005));
    const double raw_dram_yield = std::exp(-110.0 * 0.0008);
    CHECK(raw_dram_yield < 0.98);   // repair floor engages
    const double dram = 2280.0 / (579.0 * 0.98);
    const double expected = (logic + dram) / 0.95;

    const double cost = die_cost(techscale::find_chip(chips, "sunrise"), table);
    CHECK(cost == Approx(expected));
    CHECK(cost == Approx(10.76).epsilon(1e-3));
    CHECK(cost_per_tops(cost, 25.0) == Approx(0.4304).epsilon(1e-3));
}

TEST_CASE("single-wafer die cost") {
    const auto chips = techscale::builtin_chips();
    const auto table = builtin_cost_table();

    const double c = die_cost(techscale::find_chip(chips, "chip-c"), table);
    const double expected = 24000.0 / (123.0 * std::exp(-456.0 * 0.0012));
    CHECK(c == Approx(expected));
    CHECK(cost_per_tops(c, 512.0) == Approx(0.6587).epsilon(1e-3));
}

TEST_CASE("nre lookup is a straight table read") {
    const auto table = builtin_cost_table();
    CHECK(nre(40, table) == 2.2e6);
    CHECK(nre(16, table) == 7.2e6);
    CHECK(nre(12, table) == 15e6);
    CHECK(nre(7, table) == 24e6);
    CHECK_THROWS_WITH(nre(5, table),
                      Catch::Matchers::ContainsSubstring("known nodes: 40, 16, 12, 7"));
}

TEST_CASE("cost rises with defect density and die area") {
    auto table = builtin_cost_table();
    const auto chips = techscale::builtin_chips();
    const auto chip = techscale::find_chip(chips, "chip-c");

    double prev = 0.0;
    for (double d0 : {0.0, 5e-4, 1e-3, 2e-3, 5e-3}) {
        auto t = table;
        for (auto& b : t.nodes) b.defect_density_mm2 = d0;
        const double c = die_cost(chip, t);
        CHECK(c > prev);
        prev = c;
    }

    auto small = chip;
    small.die_area_mm2 = 200.0;
    CHECK(die_cost(small, table) < die_cost(chip, table));
}

TEST_CASE("cost per TOPS is scale free") {
    CHECK(cost_per_tops(100.0, 25.0) == Approx(cost_per_tops(200.0, 50.0)));
    CHECK_THROWS_AS(cost_per_tops(-1.0, 25.0), ValidationError);
    CHECK_THROWS_AS(cost_per_tops(10.0, 0.0), ValidationError);
}

TEST_CASE("cost table validation") {
    auto table = builtin_cost_table();
    table.bonding_yield = 0.0;
    CHECK_THROWS_WITH(table.validate(),
                      Catch::Matchers::ContainsSubstring("bonding_yield"));

    auto chip = techscale::find_chip(techscale::builtin_chips(), "sunrise");
    chip.die_area_mm2 = 80000.0;
    CHECK_THROWS_WITH(die_cost(chip, builtin_cost_table()),
                      Catch::Matchers::ContainsSubstring("does not fit"));

    CHECK_THROWS_AS(dies_per_wafer(0.0), ValidationError);
    CHECK_THROWS_AS(die_yield(0.0, 0.1, YieldModel::Poisson), ValidationError);
}
