#pragma once

#include <json.hpp>
#include <string>

#include "cospan/laws.hpp"
#include "cospan/partition.hpp"
#include "cospan/rewrite.hpp"

namespace cospan {

using nlohmann::json;

// --- monotone maps and partitions -----------------------------------------

inline json to_json(const MonotoneMap& f) {
    return json{{"dom", f.domain()}, {"cod", f.codomain()}, {"img", f.images()}};
}

inline MonotoneMap map_from_json(const json& j) {
    return MonotoneMap(j.at("dom").get<int>(), j.at("cod").get<int>(),
                       j.at("img").get<std::vector<int>>());
}

inline json to_json(const IntervalPartition& p) {
    return json{{"dom", p.domain()}, {"ends", p.block_ends()}};
}

inline IntervalPartition partition_from_json(const json& j) {
    return IntervalPartition(j.at("dom").get<int>(),
                             j.at("ends").get<std::vector<int>>());
}

// --- cospans and 2-cells ---------------------------------------------------

inline std::string base_name(const Base& b) { return b.op() ? "opinj" : "surj"; }

inline Base base_from_name(const std::string& name) {
    if (name == "surj") return Base{BaseKind::SurjOrd};
    if (name == "opinj") return Base{BaseKind::OpInjOrd};
    throw std::invalid_argument("unknown base: " + name);
}

inline json to_json(const Cospan& c) {
    return json{{"base", base_name(c.base)}, {"src", c.src},   {"tgt", c.tgt},
                {"apex", c.apex},            {"left", to_json(c.left)},
                {"right", to_json(c.right)}};
}

inline Cospan cospan_from_json(const json& j) {
    return Cospan(base_from_name(j.at("base").get<std::string>()),
                  j.at("src").get<int>(), j.at("tgt").get<int>(),
                  j.at("apex").get<int>(), map_from_json(j.at("left")),
                  map_from_json(j.at("right")));
}

inline json to_json(const TwoCell& t) {
    return json{{"src", to_json(t.src)}, {"tgt", to_json(t.tgt)},
                {"alpha", to_json(t.apex_map)}};
}

inline TwoCell two_cell_from_json(const json& j) {
    return TwoCell(cospan_from_json(j.at("src")), cospan_from_json(j.at("tgt")),
                   map_from_json(j.at("alpha")));
}

// --- terms -----------------------------------------------------------------

inline json term_node_to_json(const TermPtr& t) {
    switch (t->kind()) {
        case OneCellTerm::Kind::Id: return json{{"op", "id"}, {"n", t->width()}};
        case OneCellTerm::Kind::Nabla: return json{{"op", "m"}};
        case OneCellTerm::Kind::Delta: return json{{"op", "d"}};
        case OneCellTerm::Kind::S: return json{{"op", "s"}};
        case OneCellTerm::Kind::R: return json{{"op", "r"}};
        case OneCellTerm::Kind::Tensor:
            return json{{"op", "tensor"},
                        {"left", term_node_to_json(t->first())},
                        {"right", term_node_to_json(t->second())}};
        case OneCellTerm::Kind::Seq:
            return json{{"op", "seq"},
                        {"left", term_node_to_json(t->first())},
                        {"right", term_node_to_json(t->second())}};
    }
    throw std::logic_error("term_node_to_json: unreachable");
}

inline std::string signature_name(Signature s) {
    switch (s) {
        case Signature::SemiAlgebra: return "semialgebra";
        case Signature::Unit: return "unit";
        case Signature::Neutral: return "neutral";
    }
    return "?";
}

inline json to_json(const TermPtr& t) {
    return json{{"sig", signature_name(signature(t))}, {"term", term_node_to_json(t)}};
}

inline TermPtr term_node_from_json(const json& j) {
    const std::string op = j.at("op").get<std::string>();
    if (op == "id") return OneCellTerm::id(j.at("n").get<int>());
    if (op == "m") return OneCellTerm::nabla();
    if (op == "d") return OneCellTerm::delta();
    if (op == "s") return OneCellTerm::s();
    if (op == "r") return OneCellTerm::r();
    if (op == "tensor")
        return OneCellTerm::tens(term_node_from_json(j.at("left")),
                                 term_node_from_json(j.at("right")));
    if (op == "seq")
        return OneCellTerm::seq(term_node_from_json(j.at("left")),
                                term_node_from_json(j.at("right")));
    throw std::invalid_argument("unknown term op: " + op);
}

inline TermPtr term_from_json(const json& j) {
    TermPtr t = term_node_from_json(j.at("term"));
    boundary(t);
    signature(t);
    return t;
}

// --- slices and rewrite traces --------------------------------------------

inline json to_json(const Slice& s) {
    const char* g = s.gen == SliceGen::Merge ? "m"
                  : s.gen == SliceGen::Split ? "d"
                  : s.gen == SliceGen::UnitIns ? "s" : "r";
    return json{{"gen", g}, {"left", s.left}, {"right", s.right}};
}

inline json to_json(const SliceForm& sf) {
    json slices = json::array();
    for (const auto& s : sf.slices) slices.push_back(to_json(s));
    return json{{"input_width", sf.input_width}, {"slices", std::move(slices)}};
}

inline json to_json(const RewriteTrace& tr) {
    json steps = json::array();
    for (const auto& st : tr.steps)
        steps.push_back(json{{"rule", rule_name(st.rule)},
                             {"at", st.position},
                             {"before", to_json(st.before)},
                             {"after", to_json(st.after)}});
    return steps;
}

// --- law reports -----------------------------------------------------------

inline json to_json(const LawReport& rep) {
    json results = json::array();
    for (const auto& r : rep.results)
        results.push_back(json{{"law", r.law}, {"pass", r.pass}, {"witness", r.witness}});
    return json{{"all_pass", rep.all_pass()}, {"results", std::move(results)}};
}

}  // namespace cospan
