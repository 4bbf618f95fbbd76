#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cospan/slice.hpp"

namespace cospan {

enum class RewriteRule { Pop, FrobLeft, FrobRight, Slide };

inline const char* rule_name(RewriteRule r) {
    switch (r) {
        case RewriteRule::Pop: return "Pop";
        case RewriteRule::FrobLeft: return "FrobLeft";
        case RewriteRule::FrobRight: return "FrobRight";
        case RewriteRule::Slide: return "Slide";
    }
    return "?";
}

struct RewriteStep {
    RewriteRule rule;
    int position;  // index of the rewritten split slice
    SliceForm before;
    SliceForm after;
};

struct RewriteTrace {
    SliceForm initial;
    std::vector<RewriteStep> steps;
};

inline void require_semialgebra_slices(const SliceForm& s) {
    for (const auto& sl : s.slices)
        if (sl.gen != SliceGen::Merge && sl.gen != SliceGen::Split)
            throw std::invalid_argument("rewrite: slice form is not in the nabla/delta signature");
}

/// Number of (split slice, later merge slice) pairs; the termination measure.
inline int inversion_measure(const SliceForm& s) {
    require_semialgebra_slices(s);
    int splits = 0, inv = 0;
    for (const auto& sl : s.slices) {
        if (sl.gen == SliceGen::Split) ++splits;
        else inv += splits;
    }
    return inv;
}

inline bool is_normal(const SliceForm& s) {
    require_semialgebra_slices(s);
    bool seen_split = false;
    for (const auto& sl : s.slices) {
        if (sl.gen == SliceGen::Split) seen_split = true;
        else if (seen_split) return false;
    }
    return true;
}

/// One step: rewrite the leftmost adjacent (split, merge) pair, classified by
/// how the split's output strands overlap the merge's input strands.
inline std::optional<RewriteStep> rewrite_step(const SliceForm& s) {
    require_semialgebra_slices(s);
    int w = s.input_width;
    for (std::size_t i = 0; i + 1 < s.slices.size(); ++i) {
        const Slice& d = s.slices[i];
        const Slice& m = s.slices[i + 1];
        if (d.gen == SliceGen::Split && m.gen == SliceGen::Merge) {
            int a1 = d.left;   // split acts on strand a1, producing a1, a1+1
            int a2 = m.left;   // merge consumes strands a2, a2+1
            int w0 = w;        // width before the split
            RewriteStep step;
            step.position = static_cast<int>(i);
            step.before = s;
            SliceForm next = s;
            auto it = next.slices.begin() + static_cast<long>(i);
            if (a2 == a1) {
                step.rule = RewriteRule::Pop;
                next.slices.erase(it, it + 2);
            } else if (a2 == a1 + 1) {
                step.rule = RewriteRule::FrobLeft;
                it[0] = {SliceGen::Merge, a1, w0 - a1 - 2};
                it[1] = {SliceGen::Split, a1, w0 - a1 - 2};
            } else if (a2 == a1 - 1) {
                step.rule = RewriteRule::FrobRight;
                it[0] = {SliceGen::Merge, a1 - 1, w0 - a1 - 1};
                it[1] = {SliceGen::Split, a1 - 1, w0 - a1 - 1};
            } else if (a2 + 1 < a1) {
                step.rule = RewriteRule::Slide;
                it[0] = {SliceGen::Merge, a2, w0 - a2 - 2};
                it[1] = {SliceGen::Split, a1 - 1, d.right};
            } else {  // a2 > a1 + 1
                step.rule = RewriteRule::Slide;
                it[0] = {SliceGen::Merge, a2 - 1, w0 - a2 - 1};
                it[1] = {SliceGen::Split, a1, d.right - 1};
            }
            step.after = std::move(next);
            step.after.output_width();  // width consistency check
            return step;
        }
        w = d.out_width();
    }
    return std::nullopt;
}

/// Drive the split slices past the merge slices until the form is normal
/// (all merges first). Terminates: the inversion measure strictly decreases.
inline std::pair<SliceForm, RewriteTrace> normalize_slices(const SliceForm& start) {
    RewriteTrace trace;
    trace.initial = start;
    SliceForm cur = start;
    int guard = inversion_measure(start);
    while (auto step = rewrite_step(cur)) {
        if (inversion_measure(step->after) >= inversion_measure(cur))
            throw std::logic_error("normalize: measure did not decrease");
        cur = step->after;
        trace.steps.push_back(std::move(*step));
        if (static_cast<int>(trace.steps.size()) > guard)
            throw std::logic_error("normalize: exceeded measure bound");
    }
    return {cur, std::move(trace)};
}

inline std::pair<SliceForm, RewriteTrace> normalize(const TermPtr& t) {
    if (signature(t) == Signature::Unit)
        throw std::invalid_argument("normalize: only nabla/delta terms are rewritten");
    return normalize_slices(to_slices(t));
}

/// Read the cospan off a normal form: merge phase composed = left leg,
/// reversed split phase composed = right leg.
inline Cospan normal_form_cospan(const SliceForm& nf) {
    if (!is_normal(nf)) throw std::invalid_argument("normal_form_cospan: not normal");
    Base base{BaseKind::SurjOrd};
    MonotoneMap left = MonotoneMap::identity(nf.input_width);
    std::size_t i = 0;
    for (; i < nf.slices.size() && nf.slices[i].gen == SliceGen::Merge; ++i)
        left = compose(left, GeneratorLayer{nf.slices[i].left, nf.slices[i].right,
                                            LayerKind::Merge}.map());
    MonotoneMap right = MonotoneMap::identity(nf.output_width());
    for (std::size_t j = nf.slices.size(); j > i; --j) {
        const Slice& sl = nf.slices[j - 1];
        right = compose(right, GeneratorLayer{sl.left, sl.right, LayerKind::Merge}.map());
    }
    return Cospan(base, nf.input_width, nf.output_width(), left.codomain(), left, right);
}

/// Canonical representative of a normal form: refactor the merge phase as the
/// canonical factorization of the left leg and the split phase as the
/// reversed canonical factorization of the right leg. Two normal forms have
/// equal canonical representatives exactly when their cospans agree.
inline SliceForm canonicalize_normal(const SliceForm& nf) {
    Cospan c = normal_form_cospan(nf);
    SliceForm out;
    out.input_width = nf.input_width;
    for (const auto& l : factorize_surjection(c.left))
        out.slices.push_back({SliceGen::Merge, l.left_pad, l.right_pad});
    auto right_layers = factorize_surjection(c.right);
    for (auto it = right_layers.rbegin(); it != right_layers.rend(); ++it)
        out.slices.push_back({SliceGen::Split, it->left_pad, it->right_pad});
    out.output_width();  // consistency check
    return out;
}

/// Rewrite to normal form, then canonicalize both phases.
inline SliceForm canonical_form(const TermPtr& t) {
    return canonicalize_normal(normalize(t).first);
}

/// Decide equality of two nabla/delta terms, by cospan evaluation and by
/// normal-form comparison; the two routes must agree.
inline bool equal_terms(const TermPtr& a, const TermPtr& b) {
    Boundary ba = boundary(a), bb = boundary(b);
    if (!(ba == bb))
        throw std::invalid_argument("equal_terms: boundary mismatch");
    Signature sa = signature(a), sb = signature(b);
    if (sa == Signature::Unit || sb == Signature::Unit) {
        if (!((sa == Signature::Unit || sa == Signature::Neutral) &&
              (sb == Signature::Unit || sb == Signature::Neutral)))
            throw std::invalid_argument("equal_terms: signature mismatch");
        Base base{BaseKind::OpInjOrd};
        return eval_one(a, base) == eval_one(b, base);
    }
    Base base{BaseKind::SurjOrd};
    bool by_eval = eval_one(a, base) == eval_one(b, base);
    bool by_normal = canonical_form(a) == canonical_form(b);
    if (by_eval != by_normal)
        throw std::logic_error("equal_terms: evaluation and normal form disagree");
    return by_eval;
}

}  // namespace cospan
