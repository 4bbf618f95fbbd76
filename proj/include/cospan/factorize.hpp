#pragma once

#include <stdexcept>
#include <vector>

#include "cospan/monotone_map.hpp"

namespace cospan {

enum class LayerKind { Merge, Insert };

/// One generator layer: id_a + g + id_b where g is nabla (Merge) or the
/// empty map 0 -> 1 (Insert).
struct GeneratorLayer {
    int left_pad = 0;
    int right_pad = 0;
    LayerKind kind = LayerKind::Merge;

    /// The monotone map this layer denotes.
    MonotoneMap map() const {
        const MonotoneMap mid =
            kind == LayerKind::Merge ? MonotoneMap::nabla() : MonotoneMap::bang();
        return tensor(tensor(MonotoneMap::identity(left_pad), mid),
                      MonotoneMap::identity(right_pad));
    }

    friend bool operator==(const GeneratorLayer& a, const GeneratorLayer& b) {
        return a.left_pad == b.left_pad && a.right_pad == b.right_pad && a.kind == b.kind;
    }
};

/// Compose a layer sequence left to right; `domain` is the domain of the
/// first layer (needed when the sequence is empty).
inline MonotoneMap compose_layers(const std::vector<GeneratorLayer>& layers, int domain) {
    MonotoneMap acc = MonotoneMap::identity(domain);
    for (const auto& l : layers) acc = compose(acc, l.map());
    return acc;
}

/// Canonical factorization of a surjection into merge layers: at each step
/// merge the leftmost adjacent pair with equal image.
inline std::vector<GeneratorLayer> factorize_surjection(const MonotoneMap& f) {
    if (!f.is_surjective())
        throw std::invalid_argument("factorize_surjection: map is not surjective");
    std::vector<GeneratorLayer> layers;
    std::vector<int> img = f.images();
    for (;;) {
        int i = -1;
        for (int k = 0; k + 1 < static_cast<int>(img.size()); ++k)
            if (img[k] == img[k + 1]) { i = k; break; }
        if (i < 0) break;
        layers.push_back({i, static_cast<int>(img.size()) - i - 2, LayerKind::Merge});
        img.erase(img.begin() + i);
    }
    return layers;
}

/// Canonical factorization of an injection into insert layers, inserting the
/// missing codomain elements in increasing order.
inline std::vector<GeneratorLayer> factorize_injection(const MonotoneMap& f) {
    if (!f.is_injective())
        throw std::invalid_argument("factorize_injection: map is not injective");
    std::vector<GeneratorLayer> layers;
    std::vector<bool> hit(f.codomain(), false);
    for (int v : f.images()) hit[v] = true;
    // image of the growing partial embedding, kept sorted
    std::vector<int> present = f.images();
    for (int v = 0; v < f.codomain(); ++v) {
        if (hit[v]) continue;
        int a = 0;
        while (a < static_cast<int>(present.size()) && present[a] < v) ++a;
        layers.push_back({a, static_cast<int>(present.size()) - a, LayerKind::Insert});
        present.insert(present.begin() + a, v);
    }
    return layers;
}

}  // namespace cospan
