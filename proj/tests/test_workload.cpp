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

#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "sunrise/resnet50.hpp"
#include "sunrise/workload.hpp"

using namespace sunrise;
using namespace sunrise::workload;
using Catch::Approx;

TEST_CASE("conv output geometry") {
    LayerSpec conv{"c", LayerKind::Conv2D, 224, 224, 3, 7, 7, 64, 2, 3};
    CHECK(conv.out_h() == 112);
    CHECK(conv.out_w() == 112);

    LayerSpec same{"s", LayerKind::Conv2D, 56, 56, 64, 3, 3, 64, 1, 1};
    CHECK(same.out_h() == 56);
}

TEST_CASE("per-layer MAC counts match the walking oracle") {
    LayerSpec conv{"c", LayerKind::Conv2D, 224, 224, 3, 7, 7, 64, 2, 3};
    CHECK(layer_macs(conv) == 118013952.0);
    CHECK(oracles::layer_macs(conv) == 118013952u);

    LayerSpec fc{"f", LayerKind::FullyConnected, 1, 1, 2048, 1, 1, 1000};
    CHECK(layer_macs(fc) == 2048000.0);
    CHECK(oracles::layer_macs(fc) == 2048000u);

    LayerSpec pool{"p", LayerKind::Pool, 112, 112, 64, 3, 3, 64, 2, 1};
    CHECK(layer_macs(pool) == 0.0);
    CHECK(oracles::layer_macs(pool) == 0u);
}

TEST_CASE("sparsity scales MACs uniformly") {
    LayerSpec conv{"c", LayerKind::Conv2D, 56, 56, 64, 3, 3, 64, 1, 1};
    const double dense = layer_macs(conv);
    conv.density = 0.5;
    CHECK(layer_macs(conv) == Approx(dense / 2.0));
    CHECK(static_cast<double>(oracles::layer_macs(conv)) == Approx(dense / 2.0));
}

TEST_CASE("feature byte accounting") {
    LayerSpec fc{"f", LayerKind::FullyConnected, 1, 1, 2048, 1, 1, 1000};
    const auto fb = layer_feature_bytes(fc);
    CHECK(fb.input == 2048u);
    CHECK(fb.output == 1000u);

    LayerSpec add{"a", LayerKind::ElementWise, 56, 56, 256, 1, 1, 256};
    const auto ab = layer_feature_bytes(add);
    CHECK(ab.input == 56u * 56u * 256u);
    CHECK(ab.output == ab.input);

    LayerSpec wide{"w", LayerKind::Conv2D, 8, 8, 4, 1, 1, 16, 1, 0, 2, 2};
    const auto wb = layer_feature_bytes(wide);
    CHECK(wb.input == 8u * 8u * 4u * 2u);   // two-byte activations
    CHECK(wb.output == 8u * 8u * 16u * 2u);
}

TEST_CASE("vector op accounting for pool and eltwise") {
    LayerSpec pool{"p", LayerKind::Pool, 112, 112, 64, 3, 3, 64, 2, 1};
    CHECK(layer_vector_ops(pool) == 56u * 56u * 64u * 9u);

    LayerSpec add{"a", LayerKind::ElementWise, 56, 56, 256, 1, 1, 256};
    CHECK(layer_vector_ops(add) == 56u * 56u * 256u);
}

TEST_CASE("layer validation rejects inconsistent shapes") {
    LayerSpec fc{"f", LayerKind::FullyConnected, 2, 1, 16, 1, 1, 8};
    CHECK_THROWS_WITH(fc.validate(), Catch::Matchers::ContainsSubstring("fc layers use"));

    LayerSpec pool{"p", LayerKind::Pool, 8, 8, 16, 2, 2, 32, 2, 0};
    CHECK_THROWS_WITH(pool.validate(),
                      Catch::Matchers::ContainsSubstring("preserve channel count"));

    LayerSpec big{"b", LayerKind::Conv2D, 4, 4, 3, 7, 7, 8};
    CHECK_THROWS_WITH(big.validate(),
                      Catch::Matchers::ContainsSubstring("kernel larger than padded input"));

    LayerSpec dens{"d", LayerKind::Conv2D, 8, 8, 3, 3, 3, 8, 1, 1};
    dens.density = 0.0;
    CHECK_THROWS_AS(dens.validate(), ValidationError);
}

TEST_CASE("model dataflow validation") {
    ModelSpec m;
    m.name = "toy";
    m.layers = {
        {"a", LayerKind::Conv2D, 8, 8, 3, 3, 3, 16, 1, 1},
        {"b", LayerKind::Conv2D, 8, 8, 16, 3, 3, 16, 1, 1},
    };
    CHECK_NOTHROW(validate_model(m));

    SECTION("dimension mismatch is caught") {
        m.layers[1].in_c = 8;
        CHECK_THROWS_WITH(validate_model(m),
                          Catch::Matchers::ContainsSubstring("do not match output of 'a'"));
    }

    SECTION("sources must be earlier layers") {
        m.layers[0].source = "b";
        CHECK_THROWS_WITH(validate_model(m),
                          Catch::Matchers::ContainsSubstring("not an earlier layer"));
    }

    SECTION("source2 only on eltwise") {
        m.layers[1].source2 = "a";
        CHECK_THROWS_WITH(validate_model(m),
                          Catch::Matchers::ContainsSubstring("only valid on eltwise"));
    }

    SECTION("residual add checks both operands") {
        m.layers.push_back({"c", LayerKind::Conv2D, 8, 8, 16, 3, 3, 16, 2, 1});   // 4x4 out
        m.layers.push_back({"add", LayerKind::ElementWise, 8, 8, 16, 1, 1, 16});
        m.layers.back().source = "b";
        m.layers.back().source2 = "c";
        CHECK_THROWS_WITH(validate_model(m),
                          Catch::Matchers::ContainsSubstring("do not match output of 'c'"));
    }
}

TEST_CASE("built-in resnet50 totals") {
    const ModelSpec m = build_resnet50();
    CHECK(m.layers.size() == 72u);
    CHECK(m.input_bytes == 150528u);
    CHECK_NOTHROW(validate_model(m));

    const ModelTotals t = model_totals(m);
    CHECK(t.total_macs == 4089184256.0);
    CHECK(t.total_weight_bytes == 25502912u);
    CHECK(t.max_layer_feature_bytes == 802816u);

    std::uint64_t sum_in = 0, sum_out = 0;
    for (const auto& l : m.layers) {
        const auto fb = layer_feature_bytes(l);
        sum_in += fb.input;
        sum_out += fb.output;
    }
    CHECK(sum_in == 17086976u);
    CHECK(sum_out == 16837096u);
}

TEST_CASE("resnet50 per-layer MACs equal the oracle everywhere") {
    const ModelSpec m = build_resnet50();
    for (const auto& l : m.layers) {
        INFO(l.name);
        CHECK(static_cast<std::uint64_t>(layer_macs(l)) == oracles::layer_macs(l));
    }
}

TEST_CASE("resnet50 structure spot checks") {
    const ModelSpec m = build_resnet50();
    CHECK(m.layers.front().name == "conv1");
    CHECK(layer_macs(m.layers.front()) == 118013952.0);
    CHECK(m.layers.back().name == "fc1000");
    CHECK(m.layers.back().in_c == 2048u);

    int adds = 0, pools = 0;
    for (const auto& l : m.layers) {
        if (l.kind == LayerKind::ElementWise) ++adds;
        if (l.kind == LayerKind::Pool) ++pools;
    }
    CHECK(adds == 16);   // one residual add per block
    CHECK(pools == 2);
}
