#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cospan/monotone_map.hpp"
#include "cospan/pushout.hpp"

namespace cospan {

/// The two base categories the construction is instantiated at: monotone
/// surjections, and the opposite of monotone injections (arrows A -> B of
/// OpInjOrd are stored as the underlying injection B -> A).
enum class BaseKind { SurjOrd, OpInjOrd };

/// Operations of a base category with strict pushouts, delegating to the
/// ordinal algorithms. Arrows are plain MonotoneMaps under the storage
/// convention above.
struct Base {
    BaseKind kind = BaseKind::SurjOrd;

    bool op() const { return kind == BaseKind::OpInjOrd; }

    int src(const MonotoneMap& f) const { return op() ? f.codomain() : f.domain(); }
    int tgt(const MonotoneMap& f) const { return op() ? f.domain() : f.codomain(); }

    bool valid(const MonotoneMap& f) const {
        return op() ? f.is_injective() : f.is_surjective();
    }

    MonotoneMap id(int n) const { return MonotoneMap::identity(n); }

    /// f;g with f: A -> B, g: B -> C (Pascal order).
    MonotoneMap comp(const MonotoneMap& f, const MonotoneMap& g) const {
        return op() ? compose(g, f) : compose(f, g);
    }

    MonotoneMap tens(const MonotoneMap& f, const MonotoneMap& g) const {
        return tensor(f, g);
    }

    /// Strict pushout of the span A <-f- M -g-> B; returns (p0: A -> Q, p1: B -> Q).
    std::pair<MonotoneMap, MonotoneMap> pushout(const MonotoneMap& f,
                                                const MonotoneMap& g) const {
        return op() ? pullback_injections(f, g) : pushout_surjections(f, g);
    }

    /// Unique a: A -> B with f;a = h, for f: M -> A, h: M -> B (left legs are
    /// epi in both bases, so at most one solution exists).
    std::optional<MonotoneMap> left_divide(const MonotoneMap& f,
                                           const MonotoneMap& h) const {
        if (!op()) {
            // a(v) = h(u) for any u in the fibre of v; f is surjective.
            std::vector<int> img(f.codomain(), -1);
            for (int u = 0; u < f.domain(); ++u) {
                int v = f(u);
                if (img[v] >= 0 && img[v] != h(u)) return std::nullopt;
                img[v] = h(u);
            }
            try {
                MonotoneMap a(f.codomain(), h.codomain(), std::move(img));
                if (!a.is_surjective()) return std::nullopt;
                return a;
            } catch (const std::invalid_argument&) {
                return std::nullopt;
            }
        }
        // f underlying injection u_f: A -> M, h underlying u_h: B -> M;
        // solve u_a: B -> A with u_a;u_f = u_h.
        std::vector<int> img;
        img.reserve(h.domain());
        for (int i = 0; i < h.domain(); ++i) {
            int target = h(i), found = -1;
            for (int j = 0; j < f.domain(); ++j)
                if (f(j) == target) { found = j; break; }
            if (found < 0) return std::nullopt;
            img.push_back(found);
        }
        try {
            MonotoneMap a(h.domain(), f.domain(), std::move(img));
            return a;
        } catch (const std::invalid_argument&) {
            return std::nullopt;
        }
    }

    /// All base arrows A -> B.
    std::vector<MonotoneMap> arrows(int a, int b) const {
        return op() ? enumerate_maps(b, a, MapClass::Injective)
                    : enumerate_maps(a, b, MapClass::Surjective);
    }

    friend bool operator==(const Base& x, const Base& y) { return x.kind == y.kind; }
    friend bool operator!=(const Base& x, const Base& y) { return x.kind != y.kind; }
};

/// A 1-cell (left: X -> P <- Y: right) of Cospan(base).
struct Cospan {
    Base base;
    int src = 0;
    int tgt = 0;
    int apex = 0;
    MonotoneMap left;
    MonotoneMap right;

    Cospan(Base b, int s, int t, int a, MonotoneMap l, MonotoneMap r)
        : base(b), src(s), tgt(t), apex(a), left(std::move(l)), right(std::move(r)) {
        if (base.src(left) != src || base.tgt(left) != apex ||
            base.src(right) != tgt || base.tgt(right) != apex)
            throw std::invalid_argument("Cospan: leg boundaries do not match");
        if (!base.valid(left) || !base.valid(right))
            throw std::invalid_argument("Cospan: legs are not base arrows");
    }

    friend bool operator==(const Cospan& a, const Cospan& b) {
        return a.base == b.base && a.src == b.src && a.tgt == b.tgt &&
               a.apex == b.apex && a.left == b.left && a.right == b.right;
    }
    friend bool operator!=(const Cospan& a, const Cospan& b) { return !(a == b); }

    std::string str() const {
        return "(" + left.str() + ", " + std::to_string(apex) + ", " + right.str() + ")";
    }
};

inline Cospan identity_cospan(Base base, int n) {
    return Cospan(base, n, n, n, base.id(n), base.id(n));
}

/// y f = (f: X -> Y <- Y: id), a cospan X -> Y.
inline Cospan y_embed(Base base, const MonotoneMap& f) {
    if (!base.valid(f)) throw std::invalid_argument("y_embed: not a base arrow");
    return Cospan(base, base.src(f), base.tgt(f), base.tgt(f), f, base.id(base.tgt(f)));
}

/// z f = (id: Y -> Y <- X: f), a cospan Y -> X.
inline Cospan z_embed(Base base, const MonotoneMap& f) {
    if (!base.valid(f)) throw std::invalid_argument("z_embed: not a base arrow");
    return Cospan(base, base.tgt(f), base.src(f), base.tgt(f), base.id(base.tgt(f)), f);
}

/// Composition by pushout over the middle object.
inline Cospan compose_cospans(const Cospan& f, const Cospan& g) {
    if (f.base != g.base) throw std::invalid_argument("compose_cospans: base mismatch");
    if (f.tgt != g.src)
        throw std::invalid_argument("compose_cospans: boundary mismatch");
    auto [p0, p1] = f.base.pushout(f.right, g.left);
    return Cospan(f.base, f.src, g.tgt, f.base.tgt(p0),
                  f.base.comp(f.left, p0), f.base.comp(g.right, p1));
}

inline Cospan tensor_cospans(const Cospan& f, const Cospan& g) {
    if (f.base != g.base) throw std::invalid_argument("tensor_cospans: base mismatch");
    return Cospan(f.base, f.src + g.src, f.tgt + g.tgt, f.apex + g.apex,
                  f.base.tens(f.left, g.left), f.base.tens(f.right, g.right));
}

/// A 2-cell: a base arrow between apexes commuting with both legs.
struct TwoCell {
    Cospan src;
    Cospan tgt;
    MonotoneMap apex_map;

    TwoCell(Cospan s, Cospan t, MonotoneMap a)
        : src(std::move(s)), tgt(std::move(t)), apex_map(std::move(a)) {
        const Base& b = src.base;
        if (b != tgt.base || src.src != tgt.src || src.tgt != tgt.tgt)
            throw std::invalid_argument("TwoCell: cospans are not parallel");
        if (b.src(apex_map) != src.apex || b.tgt(apex_map) != tgt.apex ||
            !b.valid(apex_map))
            throw std::invalid_argument("TwoCell: apex map has wrong boundary");
        if (b.comp(src.left, apex_map) != tgt.left ||
            b.comp(src.right, apex_map) != tgt.right)
            throw std::invalid_argument("TwoCell: triangles do not commute");
    }

    friend bool operator==(const TwoCell& a, const TwoCell& b) {
        return a.src == b.src && a.tgt == b.tgt && a.apex_map == b.apex_map;
    }
    friend bool operator!=(const TwoCell& a, const TwoCell& b) { return !(a == b); }
};

inline TwoCell make_two_cell(const Cospan& f, const Cospan& g, const MonotoneMap& alpha) {
    return TwoCell(f, g, alpha);
}

inline TwoCell iota(const Cospan& f) { return TwoCell(f, f, f.base.id(f.apex)); }

/// The unique 2-cell f => g, if any (legs are epi, so uniqueness is automatic).
inline std::optional<TwoCell> find_two_cell(const Cospan& f, const Cospan& g) {
    if (f.base != g.base || f.src != g.src || f.tgt != g.tgt)
        throw std::invalid_argument("find_two_cell: cospans are not parallel");
    auto a = f.base.left_divide(f.left, g.left);
    if (!a) return std::nullopt;
    if (f.base.comp(f.right, *a) != g.right) return std::nullopt;
    return TwoCell(f, g, *a);
}

/// overline(alpha): id_A => (y alpha);(z alpha), with apex map alpha.
inline TwoCell overline(Base base, const MonotoneMap& alpha) {
    int a = base.src(alpha), b = base.tgt(alpha);
    Cospan tgt(base, a, a, b, alpha, alpha);
    return TwoCell(identity_cospan(base, a), tgt, alpha);
}

inline TwoCell vcomp(const TwoCell& t, const TwoCell& u) {
    if (t.tgt != u.src) throw std::invalid_argument("vcomp: boundary mismatch");
    return TwoCell(t.src, u.tgt, t.src.base.comp(t.apex_map, u.apex_map));
}

/// Horizontal composition by the grid of pushouts.
inline TwoCell hcomp(const TwoCell& t, const TwoCell& u) {
    const Base& b = t.src.base;
    if (b != u.src.base || t.src.tgt != u.src.src)
        throw std::invalid_argument("hcomp: boundary mismatch");
    const Cospan& f = t.src;   // X -> Y, apex A
    const Cospan& g = u.src;   // Y -> Z, apex B
    const MonotoneMap& alpha = t.apex_map;  // A -> A'
    const MonotoneMap& beta = u.apex_map;   // B -> B'
    auto [p0, p1] = b.pushout(f.right, g.left);          // A -> P, B -> P
    auto [betap, r] = b.pushout(p1, beta);               // P -> R, B' -> R
    auto [alphap, q] = b.pushout(p0, alpha);             // P -> Q, A' -> Q
    auto [pp0, pp1] = b.pushout(alphap, betap);          // Q -> P', R -> P'
    MonotoneMap diag = b.comp(alphap, pp0);              // P -> P'
    if (b.comp(betap, pp1) != diag)
        throw std::logic_error("hcomp: grid diagonals disagree");
    Cospan src = compose_cospans(t.src, u.src);
    Cospan tgt = compose_cospans(t.tgt, u.tgt);
    return TwoCell(std::move(src), std::move(tgt), std::move(diag));
}

inline TwoCell tensor_two_cells(const TwoCell& t, const TwoCell& u) {
    if (t.src.base != u.src.base)
        throw std::invalid_argument("tensor_two_cells: base mismatch");
    return TwoCell(tensor_cospans(t.src, u.src), tensor_cospans(t.tgt, u.tgt),
                   t.src.base.tens(t.apex_map, u.apex_map));
}

/// All cospans X -> Y in the base, over every possible apex.
inline std::vector<Cospan> enumerate_cospans(Base base, int x, int y, int max_apex = -1) {
    std::vector<Cospan> out;
    int hi = max_apex;
    if (hi < 0) hi = base.op() ? std::min(x, y) : std::max({x, y, 1});
    // In SurjOrd the apex of a cospan from X with surjective legs is <= min(X, Y)
    // unless X or Y is 0; in OpInjOrd the apex injects into both. Scan a safe range.
    if (!base.op()) hi = (x == 0 || y == 0) ? 0 : std::min(x, y);
    else hi = std::min(x, y);
    for (int p = 0; p <= hi; ++p)
        for (const auto& l : base.arrows(x, p))
            for (const auto& r : base.arrows(y, p))
                out.emplace_back(base, x, y, p, l, r);
    return out;
}

}  // namespace cospan
