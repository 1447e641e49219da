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

#include <string>

#include "sunrise/workload.hpp"

namespace sunrise::workload {

// Builds ResNet-50 (v1.5 variant: stride lives on the 3x3 conv) for a
// 224x224x3 int8 input. Bottleneck blocks carry explicit source references
// so the residual adds and projection shortcuts validate against the layers
// they actually read.
inline ModelSpec build_resnet50(std::uint32_t bytes_per_value = 1) {
    ModelSpec m;
    m.name = "resnet50";
    m.input_bytes = 224ull * 224ull * 3ull * bytes_per_value;

    std::uint32_t h = 224, w = 224, c = 3;

    auto conv = [&](const std::string& name, std::uint32_t ih, std::uint32_t iw,
                    std::uint32_t ic, std::uint32_t k, std::uint32_t oc, std::uint32_t s,
                    std::uint32_t p, const std::string& src = "") {
        LayerSpec l;
        l.name = name;
        l.kind = LayerKind::Conv2D;
        l.in_h = ih;
        l.in_w = iw;
        l.in_c = ic;
        l.kernel_h = k;
        l.kernel_w = k;
        l.out_c = oc;
        l.stride = s;
        l.padding = p;
        l.bytes_per_weight = bytes_per_value;
        l.bytes_per_activation = bytes_per_value;
        if (!src.empty()) l.source = src;
        m.layers.push_back(l);
        return m.layers.back();
    };
    auto pool = [&](const std::string& name, std::uint32_t ih, std::uint32_t iw,
                    std::uint32_t ic, std::uint32_t k, std::uint32_t s, std::uint32_t p,
                    const std::string& src = "") {
        LayerSpec l;
        l.name = name;
        l.kind = LayerKind::Pool;
        l.in_h = ih;
        l.in_w = iw;
        l.in_c = ic;
        l.kernel_h = k;
        l.kernel_w = k;
        l.out_c = ic;
        l.stride = s;
        l.padding = p;
        l.bytes_per_weight = bytes_per_value;
        l.bytes_per_activation = bytes_per_value;
        if (!src.empty()) l.source = src;
        m.layers.push_back(l);
        return m.layers.back();
    };
    auto eltwise = [&](const std::string& name, std::uint32_t ih, std::uint32_t iw,
                       std::uint32_t ic, const std::string& src, const std::string& src2) {
        LayerSpec l;
        l.name = name;
        l.kind = LayerKind::ElementWise;
        l.in_h = ih;
        l.in_w = iw;
        l.in_c = ic;
        l.out_c = ic;
        l.bytes_per_weight = bytes_per_value;
        l.bytes_per_activation = bytes_per_value;
        l.source = src;
        l.source2 = src2;
        m.layers.push_back(l);
        return m.layers.back();
    };

    {
        LayerSpec l = conv("conv1", h, w, c, 7, 64, 2, 3);
        h = l.out_h();
        w = l.out_w();
        c = l.out_c;
    }
    {
        LayerSpec l = pool("pool1", h, w, c, 3, 2, 1);
        h = l.out_h();
        w = l.out_w();
        c = l.out_c;
    }

    struct Stage {
        std::uint32_t width;
        std::uint32_t blocks;
        std::uint32_t stride;
        const char* name;
    };
    const Stage stages[] = {
        {64, 3, 1, "conv2"}, {128, 4, 2, "conv3"}, {256, 6, 2, "conv4"}, {512, 3, 2, "conv5"}};

    std::string prev = "pool1";
    for (const Stage& st : stages) {
        for (std::uint32_t b = 1; b <= st.blocks; ++b) {
            const std::uint32_t s = (b == 1) ? st.stride : 1;
            const std::string base = std::string(st.name) + "_" + std::to_string(b);
            const std::string block_in = prev;

            LayerSpec a = conv(base + "_a", h, w, c, 1, st.width, 1, 0, block_in);
            LayerSpec bb = conv(base + "_b", a.out_h(), a.out_w(), a.out_c, 3, st.width, s, 1);
            LayerSpec cc =
                conv(base + "_c", bb.out_h(), bb.out_w(), bb.out_c, 1, st.width * 4, 1, 0);

            std::string shortcut;
            if (b == 1) {
                conv(base + "_proj", h, w, c, 1, st.width * 4, s, 0, block_in);
                shortcut = base + "_proj";
            } else {
                shortcut = block_in;
            }
            eltwise(base + "_add", cc.out_h(), cc.out_w(), cc.out_c, base + "_c", shortcut);
            h = cc.out_h();
            w = cc.out_w();
            c = cc.out_c;
            prev = base + "_add";
        }
    }

    pool("pool5", h, w, c, 7, 1, 0, prev);
    {
        LayerSpec l;
        l.name = "fc1000";
        l.kind = LayerKind::FullyConnected;
        l.in_h = 1;
        l.in_w = 1;
        l.in_c = 2048;
        l.out_c = 1000;
        l.bytes_per_weight = bytes_per_value;
        l.bytes_per_activation = bytes_per_value;
        l.source = "pool5";
        m.layers.push_back(l);
    }

    validate_model(m);
    return m;
}

}  // namespace sunrise::workload
