#pragma once

#include <concepts>
#include <stdexcept>
#include <string>
#include <vector>

#include "cospan/cospan.hpp"
#include "cospan/rewrite.hpp"

namespace cospan {

/// Contract for an abstract strict monoidal 2-category: objects, 1-cells,
/// 2-cells, the strict structure, and decidable equality at every level.
/// All operations must be pure.
template <class I>
concept MonoidalTwoCategory = requires(const I& d, typename I::Obj x,
                                       typename I::One f, typename I::Two t) {
    { d.unit_obj() } -> std::same_as<typename I::Obj>;
    { d.tensor_obj(x, x) } -> std::same_as<typename I::Obj>;
    { d.id1(x) } -> std::same_as<typename I::One>;
    { d.compose1(f, f) } -> std::same_as<typename I::One>;
    { d.tensor1(f, f) } -> std::same_as<typename I::One>;
    { d.src1(f) } -> std::same_as<typename I::Obj>;
    { d.tgt1(f) } -> std::same_as<typename I::Obj>;
    { d.iota2(f) } -> std::same_as<typename I::Two>;
    { d.vcomp2(t, t) } -> std::same_as<typename I::Two>;
    { d.hcomp2(t, t) } -> std::same_as<typename I::Two>;
    { d.tensor2(t, t) } -> std::same_as<typename I::Two>;
    { d.src2(t) } -> std::same_as<typename I::One>;
    { d.tgt2(t) } -> std::same_as<typename I::One>;
    { d.eq_obj(x, x) } -> std::same_as<bool>;
    { d.eq1(f, f) } -> std::same_as<bool>;
    { d.eq2(t, t) } -> std::same_as<bool>;
    { d.show1(f) } -> std::same_as<std::string>;
    { d.show2(t) } -> std::same_as<std::string>;
};

/// Cospan(base) as an instance of the abstract interface.
struct CospanInstance {
    using Obj = int;
    using One = Cospan;
    using Two = TwoCell;

    Base base{BaseKind::SurjOrd};

    Obj unit_obj() const { return 0; }
    Obj tensor_obj(Obj a, Obj b) const { return a + b; }
    One id1(Obj n) const { return identity_cospan(base, n); }
    One compose1(const One& f, const One& g) const { return compose_cospans(f, g); }
    One tensor1(const One& f, const One& g) const { return tensor_cospans(f, g); }
    Obj src1(const One& f) const { return f.src; }
    Obj tgt1(const One& f) const { return f.tgt; }
    Two iota2(const One& f) const { return iota(f); }
    Two vcomp2(const Two& t, const Two& u) const { return vcomp(t, u); }
    Two hcomp2(const Two& t, const Two& u) const { return hcomp(t, u); }
    Two tensor2(const Two& t, const Two& u) const { return tensor_two_cells(t, u); }
    One src2(const Two& t) const { return t.src; }
    One tgt2(const Two& t) const { return t.tgt; }
    bool eq_obj(Obj a, Obj b) const { return a == b; }
    bool eq1(const One& f, const One& g) const { return f == g; }
    bool eq2(const Two& t, const Two& u) const { return t == u; }
    std::string show1(const One& f) const { return f.str(); }
    std::string show2(const Two& t) const {
        return t.src.str() + " => " + t.tgt.str() + " via " + t.apex_map.str();
    }
};

/// The one-object, one-cell instance: everything is equal.
struct TerminalInstance {
    struct Pt {
        friend bool operator==(Pt, Pt) { return true; }
    };
    using Obj = Pt;
    using One = Pt;
    using Two = Pt;

    Obj unit_obj() const { return {}; }
    Obj tensor_obj(Obj, Obj) const { return {}; }
    One id1(Obj) const { return {}; }
    One compose1(const One&, const One&) const { return {}; }
    One tensor1(const One&, const One&) const { return {}; }
    Obj src1(const One&) const { return {}; }
    Obj tgt1(const One&) const { return {}; }
    Two iota2(const One&) const { return {}; }
    Two vcomp2(const Two&, const Two&) const { return {}; }
    Two hcomp2(const Two&, const Two&) const { return {}; }
    Two tensor2(const Two&, const Two&) const { return {}; }
    One src2(const Two&) const { return {}; }
    One tgt2(const Two&) const { return {}; }
    bool eq_obj(Obj, Obj) const { return true; }
    bool eq1(const One&, const One&) const { return true; }
    bool eq2(const Two&, const Two&) const { return true; }
    std::string show1(const One&) const { return "*"; }
    std::string show2(const Two&) const { return "*"; }
};

/// A 1-cell of the free syntactic instance: a slice form reduced to a
/// deterministic canonical representative under a configurable rule set.
struct FreeOne {
    SliceForm canon;
    friend bool operator==(const FreeOne& a, const FreeOne& b) {
        return a.canon == b.canon;
    }
};

/// A formal 2-cell: at most one per parallel pair of canonical 1-cells.
struct FreeTwo {
    FreeOne src;
    FreeOne tgt;
    friend bool operator==(const FreeTwo& a, const FreeTwo& b) {
        return a.src == b.src && a.tgt == b.tgt;
    }
};

/// Terms in the nabla/delta signature modulo the rewrite rules, with the
/// Frobenius rules optionally disabled. With Frobenius on, 1-cell equality
/// coincides with cospan equality; with it off, the Frobenius law genuinely
/// fails, which is what the mutation tests need.
struct FreeInstance {
    using Obj = int;
    using One = FreeOne;
    using Two = FreeTwo;

    bool use_frobenius = true;

    /// Deterministic canonical form: drive splits right with the enabled
    /// rules (skipping disabled redexes), then refactor each maximal
    /// generator run through its canonical surjection factorization.
    SliceForm reduce(SliceForm s) const {
        for (int rounds = 0; rounds < 1000; ++rounds) {
            SliceForm at_round_start = s;
            // pass 1: enabled rewrite rules, leftmost redex first
            for (;;) {
                int w = s.input_width;
                bool stepped = false;
                for (std::size_t i = 0; i + 1 < s.slices.size(); ++i) {
                    if (s.slices[i].gen == SliceGen::Split &&
                        s.slices[i + 1].gen == SliceGen::Merge) {
                        SliceForm local{w, {s.slices[i], s.slices[i + 1]}};
                        auto step = rewrite_step(local);
                        bool enabled = use_frobenius ||
                                       step->rule == RewriteRule::Pop ||
                                       step->rule == RewriteRule::Slide;
                        if (enabled) {
                            s.slices.erase(s.slices.begin() + static_cast<long>(i),
                                           s.slices.begin() + static_cast<long>(i) + 2);
                            s.slices.insert(s.slices.begin() + static_cast<long>(i),
                                            step->after.slices.begin(),
                                            step->after.slices.end());
                            stepped = true;
                            break;
                        }
                    }
                    w = s.slices[i].out_width();
                }
                if (!stepped) break;
            }
            // pass 2: canonicalize maximal merge runs and split runs
            SliceForm out;
            out.input_width = s.input_width;
            std::size_t i = 0;
            int w = s.input_width;
            while (i < s.slices.size()) {
                SliceGen g = s.slices[i].gen;
                MonotoneMap acc = MonotoneMap::identity(w);
                std::size_t j = i;
                while (j < s.slices.size() && s.slices[j].gen == g) {
                    const Slice& sl = s.slices[j];
                    GeneratorLayer layer{sl.left, sl.right, LayerKind::Merge};
                    if (g == SliceGen::Merge) {
                        acc = compose(acc, layer.map());
                    } else {
                        acc = compose(layer.map(), acc);  // splits compose reversed
                    }
                    w = sl.out_width();
                    ++j;
                }
                if (g == SliceGen::Merge) {
                    for (const auto& l : factorize_surjection(acc))
                        out.slices.push_back({SliceGen::Merge, l.left_pad, l.right_pad});
                } else {
                    // acc is the underlying surjection w -> run_in of the split run
                    auto layers = factorize_surjection(acc);
                    for (auto it = layers.rbegin(); it != layers.rend(); ++it)
                        out.slices.push_back({SliceGen::Split, it->left_pad, it->right_pad});
                }
                i = j;
            }
            s = std::move(out);
            if (s == at_round_start) return s;
        }
        throw std::logic_error("FreeInstance::reduce: did not stabilize");
    }

    One make(const SliceForm& s) const { return FreeOne{reduce(s)}; }
    One make(const TermPtr& t) const { return make(to_slices(t)); }

    Obj unit_obj() const { return 0; }
    Obj tensor_obj(Obj a, Obj b) const { return a + b; }

    One id1(Obj n) const { return FreeOne{SliceForm{n, {}}}; }

    One compose1(const One& f, const One& g) const {
        if (f.canon.output_width() != g.canon.input_width)
            throw std::invalid_argument("FreeInstance::compose1: boundary mismatch");
        SliceForm s = f.canon;
        s.slices.insert(s.slices.end(), g.canon.slices.begin(), g.canon.slices.end());
        return make(s);
    }

    One tensor1(const One& f, const One& g) const {
        SliceForm s;
        s.input_width = f.canon.input_width + g.canon.input_width;
        for (Slice sl : f.canon.slices) {
            sl.right += g.canon.input_width;
            s.slices.push_back(sl);
        }
        int lout = f.canon.output_width();
        for (Slice sl : g.canon.slices) {
            sl.left += lout;
            s.slices.push_back(sl);
        }
        return make(s);
    }

    Obj src1(const One& f) const { return f.canon.input_width; }
    Obj tgt1(const One& f) const { return f.canon.output_width(); }

    Two iota2(const One& f) const { return FreeTwo{f, f}; }
    Two vcomp2(const Two& t, const Two& u) const {
        if (!(t.tgt == u.src))
            throw std::invalid_argument("FreeInstance::vcomp2: boundary mismatch");
        return FreeTwo{t.src, u.tgt};
    }
    Two hcomp2(const Two& t, const Two& u) const {
        return FreeTwo{compose1(t.src, u.src), compose1(t.tgt, u.tgt)};
    }
    Two tensor2(const Two& t, const Two& u) const {
        return FreeTwo{tensor1(t.src, u.src), tensor1(t.tgt, u.tgt)};
    }
    One src2(const Two& t) const { return t.src; }
    One tgt2(const Two& t) const { return t.tgt; }

    bool eq_obj(Obj a, Obj b) const { return a == b; }
    bool eq1(const One& f, const One& g) const { return f == g; }
    bool eq2(const Two& t, const Two& u) const { return t == u; }

    std::string show1(const One& f) const {
        return f.canon.str() + " :" + std::to_string(f.canon.input_width) + "->" +
               std::to_string(f.canon.output_width());
    }
    std::string show2(const Two& t) const {
        return show1(t.src) + " => " + show1(t.tgt);
    }
};

static_assert(MonoidalTwoCategory<CospanInstance>);
static_assert(MonoidalTwoCategory<TerminalInstance>);
static_assert(MonoidalTwoCategory<FreeInstance>);

}  // namespace cospan
