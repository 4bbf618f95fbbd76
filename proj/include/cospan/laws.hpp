#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cospan/instance.hpp"

namespace cospan {

struct LawResult {
    std::string law;
    bool pass = false;
    std::string witness;  // reproducible counterexample when failing
};

struct LawReport {
    std::vector<LawResult> results;

    bool all_pass() const {
        for (const auto& r : results)
            if (!r.pass) return false;
        return true;
    }
    void add(std::string law, bool pass, std::string witness = "") {
        results.push_back({std::move(law), pass, std::move(witness)});
    }
    void merge(const LawReport& other) {
        results.insert(results.end(), other.results.begin(), other.results.end());
    }
};

/// Run `body` as a law check; boundary exceptions become structural failures
/// rather than law failures.
template <class F>
inline void run_law(LawReport& rep, const std::string& name, F&& body) {
    try {
        body(rep);
    } catch (const std::exception& e) {
        rep.add(name, false, std::string("structural: ") + e.what());
    }
}

/// A candidate Como-algebra inside an instance.
template <MonoidalTwoCategory I>
struct ComoAlgebraData {
    typename I::Obj carrier;
    typename I::One nabla;  // X (x) X -> X
    typename I::One delta;  // X -> X (x) X
    typename I::Two eta;    // id_{X(x)X} => nabla;delta
};

/// A candidate Como-unit inside an instance.
template <MonoidalTwoCategory I>
struct ComoUnitData {
    typename I::Obj carrier;
    typename I::One s;    // I -> X
    typename I::One r;    // X -> I  (delete)
    typename I::Two eta;  // iota_X => r;s
};

namespace detail {

template <MonoidalTwoCategory I>
void law_eq1(const I& inst, LawReport& rep, const std::string& name,
             const typename I::One& lhs, const typename I::One& rhs) {
    bool ok = inst.eq1(lhs, rhs);
    rep.add(name, ok, ok ? "" : inst.show1(lhs) + "  !=  " + inst.show1(rhs));
}

template <MonoidalTwoCategory I>
void law_eq2(const I& inst, LawReport& rep, const std::string& name,
             const typename I::Two& lhs, const typename I::Two& rhs) {
    bool ok = inst.eq2(lhs, rhs);
    rep.add(name, ok, ok ? "" : inst.show2(lhs) + "  !=  " + inst.show2(rhs));
}

}  // namespace detail

/// 1-dimensional laws: associativity, coassociativity, separability, Frobenius.
template <MonoidalTwoCategory I>
LawReport check_semialgebra(const I& inst, const ComoAlgebraData<I>& alg) {
    LawReport rep;
    const auto idX = inst.id1(alg.carrier);
    run_law(rep, "nabla associative", [&](LawReport& r) {
        detail::law_eq1(inst, r, "nabla associative",
                        inst.compose1(inst.tensor1(alg.nabla, idX), alg.nabla),
                        inst.compose1(inst.tensor1(idX, alg.nabla), alg.nabla));
    });
    run_law(rep, "delta coassociative", [&](LawReport& r) {
        detail::law_eq1(inst, r, "delta coassociative",
                        inst.compose1(alg.delta, inst.tensor1(alg.delta, idX)),
                        inst.compose1(alg.delta, inst.tensor1(idX, alg.delta)));
    });
    run_law(rep, "separability", [&](LawReport& r) {
        detail::law_eq1(inst, r, "separability",
                        inst.compose1(alg.delta, alg.nabla), idX);
    });
    run_law(rep, "frobenius left", [&](LawReport& r) {
        detail::law_eq1(inst, r, "frobenius left",
                        inst.compose1(inst.tensor1(alg.delta, idX),
                                      inst.tensor1(idX, alg.nabla)),
                        inst.compose1(alg.nabla, alg.delta));
    });
    run_law(rep, "frobenius right", [&](LawReport& r) {
        detail::law_eq1(inst, r, "frobenius right",
                        inst.compose1(inst.tensor1(idX, alg.delta),
                                      inst.tensor1(alg.nabla, idX)),
                        inst.compose1(alg.nabla, alg.delta));
    });
    return rep;
}

/// Semialgebra laws plus the triangle equations on eta (nabla -| delta with
/// identity counit).
template <MonoidalTwoCategory I>
LawReport check_como_algebra(const I& inst, const ComoAlgebraData<I>& alg) {
    LawReport rep = check_semialgebra(inst, alg);
    run_law(rep, "eta boundary", [&](LawReport& r) {
        const auto XX = inst.tensor_obj(alg.carrier, alg.carrier);
        bool ok = inst.eq1(inst.src2(alg.eta), inst.id1(XX)) &&
                  inst.eq1(inst.tgt2(alg.eta), inst.compose1(alg.nabla, alg.delta));
        r.add("eta boundary", ok,
              ok ? "" : "eta is not a cell id => nabla;delta: " + inst.show2(alg.eta));
    });
    run_law(rep, "triangle eta.nabla", [&](LawReport& r) {
        detail::law_eq2(inst, r, "triangle eta.nabla",
                        inst.hcomp2(alg.eta, inst.iota2(alg.nabla)),
                        inst.iota2(alg.nabla));
    });
    run_law(rep, "triangle delta.eta", [&](LawReport& r) {
        detail::law_eq2(inst, r, "triangle delta.eta",
                        inst.hcomp2(inst.iota2(alg.delta), alg.eta),
                        inst.iota2(alg.delta));
    });
    return rep;
}

/// The four 2-cell exchange equations of nabla-/delta-Frobenius.
template <MonoidalTwoCategory I>
LawReport check_frobenius_2d(const I& inst, const ComoAlgebraData<I>& alg) {
    LawReport rep;
    const auto idX = inst.id1(alg.carrier);
    const auto iX = inst.iota2(idX);
    const auto Xn = inst.tensor1(idX, alg.nabla);   // X (x) nabla
    const auto nX = inst.tensor1(alg.nabla, idX);
    const auto Xd = inst.tensor1(idX, alg.delta);
    const auto dX = inst.tensor1(alg.delta, idX);
    run_law(rep, "nabla-frobenius 1", [&](LawReport& r) {
        detail::law_eq2(inst, r, "nabla-frobenius 1",
                        inst.hcomp2(inst.tensor2(alg.eta, iX), inst.iota2(Xn)),
                        inst.hcomp2(inst.iota2(Xn), alg.eta));
    });
    run_law(rep, "nabla-frobenius 2", [&](LawReport& r) {
        detail::law_eq2(inst, r, "nabla-frobenius 2",
                        inst.hcomp2(inst.tensor2(iX, alg.eta), inst.iota2(nX)),
                        inst.hcomp2(inst.iota2(nX), alg.eta));
    });
    run_law(rep, "delta-frobenius 1", [&](LawReport& r) {
        detail::law_eq2(inst, r, "delta-frobenius 1",
                        inst.hcomp2(inst.iota2(dX), inst.tensor2(iX, alg.eta)),
                        inst.hcomp2(alg.eta, inst.iota2(dX)));
    });
    run_law(rep, "delta-frobenius 2", [&](LawReport& r) {
        detail::law_eq2(inst, r, "delta-frobenius 2",
                        inst.hcomp2(inst.iota2(Xd), inst.tensor2(alg.eta, iX)),
                        inst.hcomp2(alg.eta, inst.iota2(Xd)));
    });
    return rep;
}

enum class MateSide { NablaLeft, NablaRight, DeltaLeft, DeltaRight };

inline const char* mate_side_name(MateSide s) {
    switch (s) {
        case MateSide::NablaLeft: return "NablaLeft";
        case MateSide::NablaRight: return "NablaRight";
        case MateSide::DeltaLeft: return "DeltaLeft";
        case MateSide::DeltaRight: return "DeltaRight";
    }
    return "?";
}

/// The pasted mate of one of the (co)associativity squares, with the counit
/// taken to be the identity cell on delta;nabla.
template <MonoidalTwoCategory I>
typename I::Two compute_mate(const I& inst, const ComoAlgebraData<I>& alg,
                             MateSide side) {
    const auto idX = inst.id1(alg.carrier);
    const auto iX = inst.iota2(idX);
    const auto eps = inst.iota2(inst.compose1(alg.delta, alg.nabla));  // separable counit
    const auto Xn = inst.tensor1(idX, alg.nabla);
    const auto nX = inst.tensor1(alg.nabla, idX);
    const auto Xd = inst.tensor1(idX, alg.delta);
    const auto dX = inst.tensor1(alg.delta, idX);
    const auto in = inst.iota2(alg.nabla);
    const auto id = inst.iota2(alg.delta);
    switch (side) {
        case MateSide::NablaLeft:
            return inst.vcomp2(
                inst.hcomp2(inst.iota2(dX), inst.hcomp2(inst.iota2(Xn), alg.eta)),
                inst.hcomp2(inst.hcomp2(inst.tensor2(eps, iX), in), id));
        case MateSide::NablaRight:
            return inst.vcomp2(
                inst.hcomp2(inst.iota2(Xd), inst.hcomp2(inst.iota2(nX), alg.eta)),
                inst.hcomp2(inst.hcomp2(inst.tensor2(iX, eps), in), id));
        case MateSide::DeltaLeft:
            return inst.vcomp2(
                inst.hcomp2(alg.eta, inst.hcomp2(inst.iota2(Xd), inst.iota2(nX))),
                inst.hcomp2(inst.hcomp2(in, id), inst.tensor2(eps, iX)));
        case MateSide::DeltaRight:
            return inst.vcomp2(
                inst.hcomp2(alg.eta, inst.hcomp2(inst.iota2(dX), inst.iota2(Xn))),
                inst.hcomp2(inst.hcomp2(in, id), inst.tensor2(iX, eps)));
    }
    throw std::logic_error("compute_mate: unreachable");
}

/// All four mates must be identity 2-cells.
template <MonoidalTwoCategory I>
LawReport check_mates(const I& inst, const ComoAlgebraData<I>& alg) {
    LawReport rep;
    for (MateSide side : {MateSide::NablaLeft, MateSide::NablaRight,
                          MateSide::DeltaLeft, MateSide::DeltaRight}) {
        std::string name = std::string("mate ") + mate_side_name(side) + " is identity";
        run_law(rep, name, [&](LawReport& r) {
            auto mate = compute_mate(inst, alg, side);
            detail::law_eq2(inst, r, name, mate, inst.iota2(inst.src2(mate)));
        });
    }
    return rep;
}

/// Split-unit law and the triangle laws of r -| s.
template <MonoidalTwoCategory I>
LawReport check_como_unit(const I& inst, const ComoUnitData<I>& unit) {
    LawReport rep;
    run_law(rep, "split unit s;r = id", [&](LawReport& r) {
        detail::law_eq1(inst, r, "split unit s;r = id",
                        inst.compose1(unit.s, unit.r), inst.id1(inst.unit_obj()));
    });
    run_law(rep, "eta boundary", [&](LawReport& r) {
        bool ok = inst.eq1(inst.src2(unit.eta), inst.id1(unit.carrier)) &&
                  inst.eq1(inst.tgt2(unit.eta), inst.compose1(unit.r, unit.s));
        r.add("eta boundary", ok, ok ? "" : inst.show2(unit.eta));
    });
    run_law(rep, "triangle eta.r", [&](LawReport& r) {
        detail::law_eq2(inst, r, "triangle eta.r",
                        inst.hcomp2(unit.eta, inst.iota2(unit.r)), inst.iota2(unit.r));
    });
    run_law(rep, "triangle s.eta", [&](LawReport& r) {
        detail::law_eq2(inst, r, "triangle s.eta",
                        inst.hcomp2(inst.iota2(unit.s), unit.eta), inst.iota2(unit.s));
    });
    return rep;
}

/// Sampled strict monoidal 2-category laws of the instance itself:
/// associativity, units, interchange, tensor 2-functoriality, on cells
/// generated from the algebra.
template <MonoidalTwoCategory I>
LawReport check_instance_coherence(const I& inst, const ComoAlgebraData<I>& alg) {
    LawReport rep;
    const auto idX = inst.id1(alg.carrier);
    std::vector<typename I::One> ones = {idX, alg.nabla, alg.delta,
                                         inst.compose1(alg.nabla, alg.delta),
                                         inst.tensor1(idX, alg.nabla)};
    run_law(rep, "1-cell associativity/units", [&](LawReport& r) {
        bool ok = true;
        std::string w;
        for (const auto& f : ones) {
            auto lhs = inst.compose1(inst.id1(inst.src1(f)), f);
            auto rhs = inst.compose1(f, inst.id1(inst.tgt1(f)));
            if (!inst.eq1(lhs, f) || !inst.eq1(rhs, f)) {
                ok = false;
                w = inst.show1(f);
                break;
            }
        }
        r.add("1-cell associativity/units", ok, w);
    });
    run_law(rep, "tensor unit strictness", [&](LawReport& r) {
        bool ok = true;
        std::string w;
        auto idI = inst.id1(inst.unit_obj());
        for (const auto& f : ones) {
            if (!inst.eq1(inst.tensor1(f, idI), f) || !inst.eq1(inst.tensor1(idI, f), f)) {
                ok = false;
                w = inst.show1(f);
                break;
            }
        }
        r.add("tensor unit strictness", ok, w);
    });
    run_law(rep, "interchange", [&](LawReport& r) {
        // (eta * iota(delta)) computed both ways through vcomp/hcomp
        auto theta = alg.eta;
        auto lhs = inst.vcomp2(inst.hcomp2(inst.iota2(inst.src2(theta)), inst.iota2(alg.nabla)),
                               inst.hcomp2(theta, inst.iota2(alg.nabla)));
        auto rhs = inst.hcomp2(inst.vcomp2(inst.iota2(inst.src2(theta)), theta),
                               inst.vcomp2(inst.iota2(alg.nabla), inst.iota2(alg.nabla)));
        detail::law_eq2(inst, r, "interchange", lhs, rhs);
    });
    run_law(rep, "tensor is a 2-functor", [&](LawReport& r) {
        auto lhs = inst.tensor2(inst.vcomp2(alg.eta, inst.iota2(inst.tgt2(alg.eta))),
                                inst.iota2(idX));
        auto rhs = inst.vcomp2(inst.tensor2(alg.eta, inst.iota2(idX)),
                               inst.tensor2(inst.iota2(inst.tgt2(alg.eta)), inst.iota2(idX)));
        detail::law_eq2(inst, r, "tensor is a 2-functor", lhs, rhs);
    });
    return rep;
}

}  // namespace cospan
