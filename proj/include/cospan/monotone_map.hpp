#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cospan {

/// A monotone function between finite ordinals <m> -> <n>, stored as the
/// dense image sequence f(0), ..., f(m-1). Validated at construction.
class MonotoneMap {
public:
    MonotoneMap(int domain, int codomain, std::vector<int> images)
        : dom_(domain), cod_(codomain), img_(std::move(images)) {
        if (dom_ < 0 || cod_ < 0)
            throw std::invalid_argument("MonotoneMap: negative ordinal");
        if (static_cast<int>(img_.size()) != dom_)
            throw std::invalid_argument("MonotoneMap: image length != domain");
        for (int i = 0; i < dom_; ++i) {
            if (img_[i] < 0 || img_[i] >= cod_)
                throw std::invalid_argument("MonotoneMap: image out of range");
            if (i > 0 && img_[i - 1] > img_[i])
                throw std::invalid_argument("MonotoneMap: not monotone");
        }
    }

    static MonotoneMap identity(int n) {
        std::vector<int> img(n);
        for (int i = 0; i < n; ++i) img[i] = i;
        return MonotoneMap(n, n, std::move(img));
    }

    /// nabla = [0,0]: 2 -> 1, the binary merge.
    static MonotoneMap nabla() { return MonotoneMap(2, 1, {0, 0}); }

    /// bang = the empty map 0 -> 1.
    static MonotoneMap bang() { return MonotoneMap(0, 1, {}); }

    int domain() const { return dom_; }
    int codomain() const { return cod_; }
    const std::vector<int>& images() const { return img_; }
    int operator()(int i) const { return img_.at(i); }

    bool is_identity() const {
        if (dom_ != cod_) return false;
        for (int i = 0; i < dom_; ++i)
            if (img_[i] != i) return false;
        return true;
    }

    bool is_surjective() const {
        // Monotone, so surjectivity == hitting 0 and cod-1 with no gaps.
        int next = 0;
        for (int v : img_) {
            if (v == next) ++next;
            else if (v > next) return false;
        }
        return next == cod_;
    }

    bool is_injective() const {
        for (int i = 1; i < dom_; ++i)
            if (img_[i - 1] == img_[i]) return false;
        return true;
    }

    friend bool operator==(const MonotoneMap& a, const MonotoneMap& b) {
        return a.dom_ == b.dom_ && a.cod_ == b.cod_ && a.img_ == b.img_;
    }
    friend bool operator!=(const MonotoneMap& a, const MonotoneMap& b) { return !(a == b); }

    std::string str() const {
        std::string s = "[";
        for (int i = 0; i < dom_; ++i) {
            if (i) s += ",";
            s += std::to_string(img_[i]);
        }
        s += "]:" + std::to_string(dom_) + "->" + std::to_string(cod_);
        return s;
    }

private:
    int dom_;
    int cod_;
    std::vector<int> img_;
};

/// Arrow composition f;g (apply f first).
inline MonotoneMap compose(const MonotoneMap& f, const MonotoneMap& g) {
    if (f.codomain() != g.domain())
        throw std::invalid_argument("compose: codomain of " + f.str() +
                                    " != domain of " + g.str());
    std::vector<int> img(f.domain());
    for (int i = 0; i < f.domain(); ++i) img[i] = g(f(i));
    return MonotoneMap(f.domain(), g.codomain(), std::move(img));
}

/// Ordinal sum f + g.
inline MonotoneMap tensor(const MonotoneMap& f, const MonotoneMap& g) {
    std::vector<int> img;
    img.reserve(f.domain() + g.domain());
    for (int v : f.images()) img.push_back(v);
    for (int v : g.images()) img.push_back(v + f.codomain());
    return MonotoneMap(f.domain() + g.domain(), f.codomain() + g.codomain(),
                       std::move(img));
}

enum class MapClass { All, Surjective, Injective };

/// All monotone maps <m> -> <n> of the given class, lexicographic on images.
inline std::vector<MonotoneMap> enumerate_maps(int m, int n, MapClass cls) {
    std::vector<MonotoneMap> out;
    if (m == 0) {
        MonotoneMap e(0, n, {});
        if (cls != MapClass::Surjective || n == 0) out.push_back(e);
        return out;
    }
    if (n == 0) return out;  // nothing maps a nonempty ordinal into <0>
    std::vector<int> img(m, 0);
    for (;;) {
        MonotoneMap f(m, n, img);
        bool keep = true;
        if (cls == MapClass::Surjective) keep = f.is_surjective();
        if (cls == MapClass::Injective) keep = f.is_injective();
        if (keep) out.push_back(f);
        // next nondecreasing sequence with values < n
        int i = m - 1;
        while (i >= 0 && img[i] == n - 1) --i;
        if (i < 0) break;
        int v = img[i] + 1;
        for (int j = i; j < m; ++j) img[j] = v;
    }
    return out;
}

inline std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::uint64_t r = 1;
    for (int i = 0; i < k; ++i) r = r * static_cast<std::uint64_t>(n - i) / (i + 1);
    return r;
}

}  // namespace cospan
