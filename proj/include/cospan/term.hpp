#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <utility>

#include "cospan/cospan.hpp"

namespace cospan {

enum class Signature { SemiAlgebra, Unit, Neutral };

inline Signature merge_signatures(Signature a, Signature b, const std::string& where) {
    if (a == Signature::Neutral) return b;
    if (b == Signature::Neutral || a == b) return a;
    throw std::invalid_argument(where + ": mixed generator signatures");
}

/// Boundary of a 1-cell term.
struct Boundary {
    int src = 0;
    int tgt = 0;
    friend bool operator==(const Boundary& a, const Boundary& b) {
        return a.src == b.src && a.tgt == b.tgt;
    }
};

/// Syntax tree for 1-cells of the free monoidal 2-category on either
/// generator set. Immutable; shared subterms are fine.
class OneCellTerm {
public:
    enum class Kind { Id, Nabla, Delta, S, R, Tensor, Seq };
    using Ptr = std::shared_ptr<const OneCellTerm>;

    static Ptr id(int n) {
        if (n < 0) throw std::invalid_argument("OneCellTerm::id: negative width");
        return Ptr(new OneCellTerm(Kind::Id, n, nullptr, nullptr));
    }
    static Ptr nabla() { return Ptr(new OneCellTerm(Kind::Nabla, 0, nullptr, nullptr)); }
    static Ptr delta() { return Ptr(new OneCellTerm(Kind::Delta, 0, nullptr, nullptr)); }
    static Ptr s() { return Ptr(new OneCellTerm(Kind::S, 0, nullptr, nullptr)); }
    static Ptr r() { return Ptr(new OneCellTerm(Kind::R, 0, nullptr, nullptr)); }
    static Ptr tens(Ptr a, Ptr b) {
        return Ptr(new OneCellTerm(Kind::Tensor, 0, std::move(a), std::move(b)));
    }
    static Ptr seq(Ptr a, Ptr b) {
        return Ptr(new OneCellTerm(Kind::Seq, 0, std::move(a), std::move(b)));
    }

    Kind kind() const { return kind_; }
    int width() const { return width_; }
    const Ptr& first() const { return a_; }
    const Ptr& second() const { return b_; }

private:
    OneCellTerm(Kind k, int w, Ptr a, Ptr b)
        : kind_(k), width_(w), a_(std::move(a)), b_(std::move(b)) {}
    Kind kind_;
    int width_;
    Ptr a_, b_;
};

using TermPtr = OneCellTerm::Ptr;

inline Signature signature(const TermPtr& t) {
    switch (t->kind()) {
        case OneCellTerm::Kind::Id: return Signature::Neutral;
        case OneCellTerm::Kind::Nabla:
        case OneCellTerm::Kind::Delta: return Signature::SemiAlgebra;
        case OneCellTerm::Kind::S:
        case OneCellTerm::Kind::R: return Signature::Unit;
        default:
            return merge_signatures(signature(t->first()), signature(t->second()),
                                    "signature");
    }
}

/// Boundary computation; throws on Seq mismatch, naming the offending subterm.
inline Boundary boundary(const TermPtr& t);

inline std::string print_term(const TermPtr& t);

inline Boundary boundary(const TermPtr& t) {
    switch (t->kind()) {
        case OneCellTerm::Kind::Id: return {t->width(), t->width()};
        case OneCellTerm::Kind::Nabla: return {2, 1};
        case OneCellTerm::Kind::Delta: return {1, 2};
        case OneCellTerm::Kind::S: return {0, 1};
        case OneCellTerm::Kind::R: return {1, 0};
        case OneCellTerm::Kind::Tensor: {
            Boundary a = boundary(t->first()), b = boundary(t->second());
            return {a.src + b.src, a.tgt + b.tgt};
        }
        case OneCellTerm::Kind::Seq: {
            Boundary a = boundary(t->first()), b = boundary(t->second());
            if (a.tgt != b.src)
                throw std::invalid_argument(
                    "boundary mismatch in composition: '" + print_term(t->first()) +
                    "' has target " + std::to_string(a.tgt) + " but '" +
                    print_term(t->second()) + "' has source " + std::to_string(b.src));
            return {a.src, b.tgt};
        }
    }
    throw std::logic_error("boundary: unreachable");
}

inline Base term_base(const TermPtr& t) {
    return signature(t) == Signature::Unit ? Base{BaseKind::OpInjOrd}
                                           : Base{BaseKind::SurjOrd};
}

/// Evaluate a 1-cell term into the cospan 2-category of its signature.
inline Cospan eval_one(const TermPtr& t, Base base) {
    switch (t->kind()) {
        case OneCellTerm::Kind::Id: return identity_cospan(base, t->width());
        case OneCellTerm::Kind::Nabla:
            if (base.op()) throw std::invalid_argument("eval_one: nabla in Unit signature");
            return y_embed(base, MonotoneMap::nabla());
        case OneCellTerm::Kind::Delta:
            if (base.op()) throw std::invalid_argument("eval_one: delta in Unit signature");
            return z_embed(base, MonotoneMap::nabla());
        case OneCellTerm::Kind::S:
            // s: 0 -> 1 in Cospan(op(iLin)): apex 0, right leg underlying bang.
            if (!base.op()) throw std::invalid_argument("eval_one: s in SemiAlgebra signature");
            return z_embed(base, MonotoneMap::bang());
        case OneCellTerm::Kind::R:
            if (!base.op()) throw std::invalid_argument("eval_one: r in SemiAlgebra signature");
            return y_embed(base, MonotoneMap::bang());
        case OneCellTerm::Kind::Tensor:
            return tensor_cospans(eval_one(t->first(), base), eval_one(t->second(), base));
        case OneCellTerm::Kind::Seq:
            boundary(t);  // report mismatches with the subterm, not the pushout
            return compose_cospans(eval_one(t->first(), base), eval_one(t->second(), base));
    }
    throw std::logic_error("eval_one: unreachable");
}

inline Cospan eval_one(const TermPtr& t) { return eval_one(t, term_base(t)); }

/// Syntax tree for 2-cells.
class TwoCellTerm {
public:
    enum class Kind { Iota, Eta, VComp, HComp, Tensor2 };
    using Ptr = std::shared_ptr<const TwoCellTerm>;

    static Ptr iota(TermPtr t) { return Ptr(new TwoCellTerm(Kind::Iota, std::move(t), nullptr, nullptr)); }
    static Ptr eta() { return Ptr(new TwoCellTerm(Kind::Eta, nullptr, nullptr, nullptr)); }
    static Ptr vcomp(Ptr a, Ptr b) { return Ptr(new TwoCellTerm(Kind::VComp, nullptr, std::move(a), std::move(b))); }
    static Ptr hcomp(Ptr a, Ptr b) { return Ptr(new TwoCellTerm(Kind::HComp, nullptr, std::move(a), std::move(b))); }
    static Ptr tens(Ptr a, Ptr b) { return Ptr(new TwoCellTerm(Kind::Tensor2, nullptr, std::move(a), std::move(b))); }

    Kind kind() const { return kind_; }
    const TermPtr& cell() const { return one_; }
    const Ptr& first() const { return a_; }
    const Ptr& second() const { return b_; }

private:
    TwoCellTerm(Kind k, TermPtr one, Ptr a, Ptr b)
        : kind_(k), one_(std::move(one)), a_(std::move(a)), b_(std::move(b)) {}
    Kind kind_;
    TermPtr one_;
    Ptr a_, b_;
};

using Term2Ptr = TwoCellTerm::Ptr;

inline Signature signature(const Term2Ptr& t) {
    switch (t->kind()) {
        case TwoCellTerm::Kind::Iota: return signature(t->cell());
        case TwoCellTerm::Kind::Eta: return Signature::Neutral;
        default:
            return merge_signatures(signature(t->first()), signature(t->second()),
                                    "signature");
    }
}

/// Evaluate a 2-cell term; eta is overline(nabla) in the SemiAlgebra signature
/// and the unit of ? -| ! in the Unit signature.
inline TwoCell eval_two(const Term2Ptr& t, Base base) {
    switch (t->kind()) {
        case TwoCellTerm::Kind::Iota: return iota(eval_one(t->cell(), base));
        case TwoCellTerm::Kind::Eta:
            return overline(base, base.op() ? MonotoneMap::bang() : MonotoneMap::nabla());
        case TwoCellTerm::Kind::VComp:
            return vcomp(eval_two(t->first(), base), eval_two(t->second(), base));
        case TwoCellTerm::Kind::HComp:
            return hcomp(eval_two(t->first(), base), eval_two(t->second(), base));
        case TwoCellTerm::Kind::Tensor2:
            return tensor_two_cells(eval_two(t->first(), base), eval_two(t->second(), base));
    }
    throw std::logic_error("eval_two: unreachable");
}

inline TwoCell eval_two(const Term2Ptr& t) {
    Signature sig = signature(t);
    Base base{sig == Signature::Unit ? BaseKind::OpInjOrd : BaseKind::SurjOrd};
    return eval_two(t, base);
}

inline std::string print_term(const TermPtr& t) {
    switch (t->kind()) {
        case OneCellTerm::Kind::Id: return "id:" + std::to_string(t->width());
        case OneCellTerm::Kind::Nabla: return "m";
        case OneCellTerm::Kind::Delta: return "d";
        case OneCellTerm::Kind::S: return "s";
        case OneCellTerm::Kind::R: return "r";
        case OneCellTerm::Kind::Tensor: {
            auto wrap = [](const TermPtr& u) {
                std::string p = print_term(u);
                return u->kind() == OneCellTerm::Kind::Seq ? "(" + p + ")" : p;
            };
            return wrap(t->first()) + " + " + wrap(t->second());
        }
        case OneCellTerm::Kind::Seq:
            return print_term(t->first()) + " ; " + print_term(t->second());
    }
    throw std::logic_error("print_term: unreachable");
}

inline std::string print_term(const Term2Ptr& t) {
    auto wrap2 = [](const Term2Ptr& u, bool parenSeq, bool parenH) {
        std::string p = print_term(u);
        bool paren = (parenSeq && u->kind() == TwoCellTerm::Kind::VComp) ||
                     (parenH && (u->kind() == TwoCellTerm::Kind::VComp ||
                                 u->kind() == TwoCellTerm::Kind::HComp));
        return paren ? "(" + p + ")" : p;
    };
    switch (t->kind()) {
        case TwoCellTerm::Kind::Iota: return "iota(" + print_term(t->cell()) + ")";
        case TwoCellTerm::Kind::Eta: return "eta";
        case TwoCellTerm::Kind::VComp:
            return print_term(t->first()) + " ; " + print_term(t->second());
        case TwoCellTerm::Kind::HComp:
            return wrap2(t->first(), true, false) + " * " + wrap2(t->second(), true, false);
        case TwoCellTerm::Kind::Tensor2:
            return wrap2(t->first(), true, true) + " + " + wrap2(t->second(), true, true);
    }
    throw std::logic_error("print_term: unreachable");
}

}  // namespace cospan
