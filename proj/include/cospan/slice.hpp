#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "cospan/factorize.hpp"
#include "cospan/term.hpp"

namespace cospan {

enum class SliceGen { Merge, Split, UnitIns, UnitDel };

/// One layer id_left + g + id_right with exactly one generator g.
struct Slice {
    SliceGen gen = SliceGen::Merge;
    int left = 0;
    int right = 0;

    int in_arity() const {
        switch (gen) {
            case SliceGen::Merge: return 2;
            case SliceGen::Split: return 1;
            case SliceGen::UnitIns: return 0;
            case SliceGen::UnitDel: return 1;
        }
        return 0;
    }
    int out_arity() const {
        switch (gen) {
            case SliceGen::Merge: return 1;
            case SliceGen::Split: return 2;
            case SliceGen::UnitIns: return 1;
            case SliceGen::UnitDel: return 0;
        }
        return 0;
    }
    int in_width() const { return left + in_arity() + right; }
    int out_width() const { return left + out_arity() + right; }

    friend bool operator==(const Slice& a, const Slice& b) {
        return a.gen == b.gen && a.left == b.left && a.right == b.right;
    }

    std::string str() const {
        const char* n = gen == SliceGen::Merge ? "m"
                      : gen == SliceGen::Split ? "d"
                      : gen == SliceGen::UnitIns ? "s" : "r";
        return std::string(n) + "(" + std::to_string(left) + "," +
               std::to_string(right) + ")";
    }
};

/// A term sequentialized into single-generator layers.
struct SliceForm {
    int input_width = 0;
    std::vector<Slice> slices;

    int output_width() const {
        int w = input_width;
        for (const auto& s : slices) {
            if (s.in_width() != w)
                throw std::logic_error("SliceForm: inconsistent widths");
            w = s.out_width();
        }
        return w;
    }

    friend bool operator==(const SliceForm& a, const SliceForm& b) {
        return a.input_width == b.input_width && a.slices == b.slices;
    }
    friend bool operator!=(const SliceForm& a, const SliceForm& b) { return !(a == b); }

    std::string str() const {
        std::string out = "[";
        for (std::size_t i = 0; i < slices.size(); ++i) {
            if (i) out += ", ";
            out += slices[i].str();
        }
        return out + "]";
    }
};

/// Sequentialize a 1-cell term: left factor's slices first (right-padded by
/// the right factor's input), then the right factor's (left-padded by the
/// left factor's output).
inline SliceForm to_slices(const TermPtr& t) {
    Boundary b = boundary(t);
    SliceForm out;
    out.input_width = b.src;
    switch (t->kind()) {
        case OneCellTerm::Kind::Id: break;
        case OneCellTerm::Kind::Nabla: out.slices.push_back({SliceGen::Merge, 0, 0}); break;
        case OneCellTerm::Kind::Delta: out.slices.push_back({SliceGen::Split, 0, 0}); break;
        case OneCellTerm::Kind::S: out.slices.push_back({SliceGen::UnitIns, 0, 0}); break;
        case OneCellTerm::Kind::R: out.slices.push_back({SliceGen::UnitDel, 0, 0}); break;
        case OneCellTerm::Kind::Tensor: {
            SliceForm l = to_slices(t->first());
            SliceForm r = to_slices(t->second());
            for (Slice s : l.slices) {
                s.right += r.input_width;
                out.slices.push_back(s);
            }
            int lout = l.output_width();
            for (Slice s : r.slices) {
                s.left += lout;
                out.slices.push_back(s);
            }
            break;
        }
        case OneCellTerm::Kind::Seq: {
            SliceForm l = to_slices(t->first());
            SliceForm r = to_slices(t->second());
            out.slices = std::move(l.slices);
            out.slices.insert(out.slices.end(), r.slices.begin(), r.slices.end());
            break;
        }
    }
    return out;
}

inline TermPtr slice_term(const Slice& s) {
    TermPtr g;
    switch (s.gen) {
        case SliceGen::Merge: g = OneCellTerm::nabla(); break;
        case SliceGen::Split: g = OneCellTerm::delta(); break;
        case SliceGen::UnitIns: g = OneCellTerm::s(); break;
        case SliceGen::UnitDel: g = OneCellTerm::r(); break;
    }
    return OneCellTerm::tens(OneCellTerm::tens(OneCellTerm::id(s.left), g),
                             OneCellTerm::id(s.right));
}

/// Recompose a slice form as a term (Seq of single-generator layers).
inline TermPtr slices_term(const SliceForm& sf) {
    TermPtr acc = OneCellTerm::id(sf.input_width);
    for (const auto& s : sf.slices) acc = OneCellTerm::seq(acc, slice_term(s));
    return acc;
}

inline Cospan eval_slices(const SliceForm& sf, Base base) {
    return eval_one(slices_term(sf), base);
}

}  // namespace cospan
