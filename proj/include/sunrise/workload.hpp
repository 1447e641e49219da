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

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sunrise/common.hpp"

namespace sunrise::workload {

// Neural-network layer geometry and exact MAC/byte accounting. No tensor
// arithmetic happens here; layers are pure shape records that the scheduler
// turns into cycle and traffic counts.

enum class LayerKind { Conv2D, FullyConnected, Pool, ElementWise };

inline const char* to_string(LayerKind k) {
    switch (k) {
        case LayerKind::Conv2D: return "conv";
        case LayerKind::FullyConnected: return "fc";
        case LayerKind::Pool: return "pool";
        case LayerKind::ElementWise: return "eltwise";
    }
    return "?";
}

struct LayerSpec {
    std::string name;
    LayerKind kind = LayerKind::Conv2D;
    std::uint32_t in_h = 1, in_w = 1, in_c = 1;
    std::uint32_t kernel_h = 1, kernel_w = 1;
    std::uint32_t out_c = 1;
    std::uint32_t stride = 1;
    std::uint32_t padding = 0;
    std::uint32_t bytes_per_weight = 1;
    std::uint32_t bytes_per_activation = 1;
    double density = 1.0;   // effective fraction of nonzero MACs, in (0,1]

    // Dataflow source overrides. Default (empty) chains from the previous
    // layer; a residual block's projection or add taps an earlier layer by
    // name. source2 is the second operand of an ElementWise layer.
    std::optional<std::string> source;
    std::optional<std::string> source2;

    std::uint32_t out_h() const {
        return (in_h + 2 * padding - kernel_h) / stride + 1;
    }
    std::uint32_t out_w() const {
        return (in_w + 2 * padding - kernel_w) / stride + 1;
    }

    void validate() const {
        auto fail = [this](const std::string& what) {
            throw ValidationError("layer '" + name + "': " + what);
        };
        if (in_h < 1 || in_w < 1 || in_c < 1) fail("input dims must be >= 1");
        if (kernel_h < 1 || kernel_w < 1) fail("kernel dims must be >= 1");
        if (out_c < 1) fail("out_c must be >= 1");
        if (stride < 1) fail("stride must be >= 1");
        if (bytes_per_weight < 1 || bytes_per_activation < 1) fail("byte widths must be >= 1");
        if (density <= 0.0 || density > 1.0) fail("density must be in (0,1]");
        if (in_h + 2 * padding < kernel_h || in_w + 2 * padding < kernel_w)
            fail("kernel larger than padded input");
        if (kind == LayerKind::FullyConnected &&
            (in_h != 1 || in_w != 1 || kernel_h != 1 || kernel_w != 1))
            fail("fc layers use in_h=in_w=kernel=1");
        if ((kind == LayerKind::Pool || kind == LayerKind::ElementWise) && out_c != in_c)
            fail("pool/eltwise layers preserve channel count");
        if (kind == LayerKind::ElementWise && (kernel_h != 1 || kernel_w != 1 || stride != 1))
            fail("eltwise layers use kernel=1, stride=1");
    }
};

// MAC count. Pool/ElementWise contribute vector ops, not MACs.
inline double layer_macs(const LayerSpec& l) {
    l.validate();
    switch (l.kind) {
        case LayerKind::Conv2D:
            return static_cast<double>(l.out_h()) * l.out_w() * l.kernel_h * l.kernel_w *
                   l.in_c * l.out_c * l.density;
        case LayerKind::FullyConnected:
            return static_cast<double>(l.in_c) * l.out_c * l.density;
        default:
            return 0.0;
    }
}

inline std::uint64_t layer_weight_bytes(const LayerSpec& l) {
    l.validate();
    switch (l.kind) {
        case LayerKind::Conv2D:
            return static_cast<std::uint64_t>(l.kernel_h) * l.kernel_w * l.in_c * l.out_c *
                   l.bytes_per_weight;
        case LayerKind::FullyConnected:
            return static_cast<std::uint64_t>(l.in_c) * l.out_c * l.bytes_per_weight;
        default:
            return 0;
    }
}

struct FeatureBytes {
    std::uint64_t input = 0;
    std::uint64_t output = 0;
};

inline FeatureBytes layer_feature_bytes(const LayerSpec& l) {
    l.validate();
    FeatureBytes fb;
    fb.input = static_cast<std::uint64_t>(l.in_h) * l.in_w * l.in_c * l.bytes_per_activation;
    if (l.kind == LayerKind::FullyConnected)
        fb.output = static_cast<std::uint64_t>(l.out_c) * l.bytes_per_activation;
    else if (l.kind == LayerKind::ElementWise)
        fb.output = fb.input;
    else
        fb.output = static_cast<std::uint64_t>(l.out_h()) * l.out_w() * l.out_c *
                    l.bytes_per_activation;
    return fb;
}

// Elementwise/pool work expressed as vector-lane operations (window reduce
// per output element for pools, one op per element for adds/activations).
inline std::uint64_t layer_vector_ops(const LayerSpec& l) {
    l.validate();
    switch (l.kind) {
        case LayerKind::Pool:
            return static_cast<std::uint64_t>(l.out_h()) * l.out_w() * l.out_c * l.kernel_h *
                   l.kernel_w;
        case LayerKind::ElementWise:
            return static_cast<std::uint64_t>(l.in_h) * l.in_w * l.in_c;
        default:
            return 0;
    }
}

struct ModelSpec {
    std::string name;
    std::vector<LayerSpec> layers;
    std::uint64_t input_bytes = 0;   // host ingress payload per inference
};

// Validates per-layer invariants plus the dataflow chain: each layer's input
// dims must equal its source layer's output dims (default source: previous
// layer). Errors name the offending layer.
inline void validate_model(const ModelSpec& m) {
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < m.layers.size(); ++i) {
        const LayerSpec& l = m.layers[i];
        l.validate();
        auto fail = [&](const std::string& what) {
            throw ValidationError("model '" + m.name + "', layer '" + l.name + "': " + what);
        };
        auto resolve = [&](const std::string& src) -> const LayerSpec& {
            auto it = index.find(src);
            if (it == index.end()) fail("source '" + src + "' is not an earlier layer");
            return m.layers[it->second];
        };
        auto check_dims = [&](const LayerSpec& src) {
            const bool src_fc = src.kind == LayerKind::FullyConnected;
            const std::uint32_t sh = src_fc ? 1 : src.out_h();
            const std::uint32_t sw = src_fc ? 1 : src.out_w();
            if (sh != l.in_h || sw != l.in_w || src.out_c != l.in_c)
                fail("input dims " + std::to_string(l.in_h) + "x" + std::to_string(l.in_w) +
                     "x" + std::to_string(l.in_c) + " do not match output of '" + src.name +
                     "'");
        };
        if (l.source) {
            check_dims(resolve(*l.source));
        } else if (i > 0) {
            check_dims(m.layers[i - 1]);
        }
        if (l.source2) {
            if (l.kind != LayerKind::ElementWise) fail("source2 is only valid on eltwise layers");
            check_dims(resolve(*l.source2));
        }
        if (!l.name.empty()) index[l.name] = i;
    }
}

struct ModelTotals {
    double total_macs = 0.0;
    std::uint64_t total_weight_bytes = 0;
    std::uint64_t max_layer_feature_bytes = 0;
    std::uint64_t total_vector_ops = 0;
};

inline ModelTotals model_totals(const ModelSpec& m) {
    ModelTotals t;
    for (const auto& l : m.layers) {
        t.total_macs += layer_macs(l);
        t.total_weight_bytes += layer_weight_bytes(l);
        t.total_vector_ops += layer_vector_ops(l);
        const FeatureBytes fb = layer_feature_bytes(l);
        t.max_layer_feature_bytes =
            std::max({t.max_layer_feature_bytes, fb.input, fb.output});
    }
    return t;
}

}  // namespace sunrise::workload
