// Command-line front end: evaluate, normalize, compare, render, law-check,
// and enumerate. Exit codes: 0 success/equal, 1 not-equal, 2 usage or parse
// error, 3 law failure.

#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <string>

#include "cospan/induced.hpp"
#include "cospan/json_io.hpp"
#include "cospan/parse.hpp"
#include "cospan/render.hpp"

namespace {

using namespace cospan;

std::string join_ints(const std::vector<int>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + "]";
}

std::string compact(const Cospan& c) {
    return "{\"src\":" + std::to_string(c.src) + ",\"tgt\":" + std::to_string(c.tgt) +
           ",\"apex\":" + std::to_string(c.apex) + ",\"left\":" + join_ints(c.left.images()) +
           ",\"right\":" + join_ints(c.right.images()) + "}";
}

std::string compact(const TwoCell& t) {
    return "{\"src\":" + compact(t.src) + ",\"tgt\":" + compact(t.tgt) +
           ",\"alpha\":" + join_ints(t.apex_map.images()) + "}";
}

int run_eval(const std::string& text, bool as_json) {
    try {
        try {
            TermPtr t = parse_one_cell(text);
            Cospan c = eval_one(t);
            std::cout << (as_json ? to_json(c).dump() : compact(c)) << "\n";
            return 0;
        } catch (const ParseError&) {
            // not a 1-cell term: try the 2-cell grammar
            Term2Ptr t = parse_two_cell(text);
            TwoCell c = eval_two(t);
            std::cout << (as_json ? to_json(c).dump() : compact(c)) << "\n";
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

int run_normalize(const std::string& text, bool with_trace, bool as_json) {
    try {
        TermPtr t = parse_one_cell(text);
        auto [nf, trace] = normalize(t);
        if (as_json) {
            json out{{"normal_form", to_json(nf)}};
            if (with_trace) out["trace"] = to_json(trace);
            std::cout << out.dump() << "\n";
        } else {
            std::cout << nf.str() << "\n";
            if (with_trace)
                for (const auto& st : trace.steps)
                    std::cout << rule_name(st.rule) << "@" << st.position << "\n";
        }
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

int run_equal(const std::string& a_text, const std::string& b_text) {
    try {
        TermPtr a = parse_one_cell(a_text);
        TermPtr b = parse_one_cell(b_text);
        if (equal_terms(a, b)) {
            std::cout << "EQUAL\n";
            return 0;
        }
        Base base = term_base(a);
        std::cout << "NOT EQUAL\n"
                  << "  left:  " << compact(eval_one(a, base)) << "\n"
                  << "  right: " << compact(eval_one(b, base)) << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

int run_render(const std::string& text) {
    try {
        std::cout << render_term(parse_one_cell(text));
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

template <MonoidalTwoCategory I>
LawReport algebra_suite(const I& inst, const ComoAlgebraData<I>& alg) {
    LawReport rep = check_como_algebra(inst, alg);
    rep.merge(check_frobenius_2d(inst, alg));
    rep.merge(check_mates(inst, alg));
    rep.merge(check_instance_coherence(inst, alg));
    return rep;
}

int run_laws(const std::string& instance, int bound, bool as_json) {
    LawReport rep;
    if (instance == "cospan-slin") {
        CospanInstance inst;
        Base b = inst.base;
        ComoAlgebraData<CospanInstance> alg{1, y_embed(b, MonotoneMap::nabla()),
                                            z_embed(b, MonotoneMap::nabla()),
                                            overline(b, MonotoneMap::nabla())};
        rep = algebra_suite(inst, alg);
        auto F = induced_functor(inst, alg);
        rep.merge(check_compatibility(F, bound));
        rep.merge(check_three_squares_suffice(bound));
    } else if (instance == "cospan-opinj") {
        CospanInstance inst{Base{BaseKind::OpInjOrd}};
        Base b = inst.base;
        ComoUnitData<CospanInstance> unit{1, z_embed(b, MonotoneMap::bang()),
                                          y_embed(b, MonotoneMap::bang()),
                                          overline(b, MonotoneMap::bang())};
        rep = check_como_unit(inst, unit);
        auto F = induced_unit_functor(inst, unit);
        rep.merge(check_compatibility(F, bound));
        rep.merge(check_pullback_base_squares(bound));
    } else if (instance == "terminal") {
        TerminalInstance inst;
        using Pt = TerminalInstance::Pt;
        ComoAlgebraData<TerminalInstance> alg{Pt{}, Pt{}, Pt{}, Pt{}};
        rep = algebra_suite(inst, alg);
    } else if (instance == "free" || instance == "free-no-frobenius") {
        FreeInstance inst;
        inst.use_frobenius = (instance == "free");
        ComoAlgebraData<FreeInstance> alg{
            1, inst.make(OneCellTerm::nabla()), inst.make(OneCellTerm::delta()),
            FreeTwo{inst.id1(2),
                    inst.compose1(inst.make(OneCellTerm::nabla()),
                                  inst.make(OneCellTerm::delta()))}};
        rep = algebra_suite(inst, alg);
    } else {
        std::cerr << "error: unknown instance '" << instance << "'\n";
        return 2;
    }
    if (as_json) {
        std::cout << to_json(rep).dump() << "\n";
    } else {
        for (const auto& r : rep.results) {
            std::cout << (r.pass ? "pass  " : "FAIL  ") << r.law;
            if (!r.pass && !r.witness.empty()) std::cout << "  [" << r.witness << "]";
            std::cout << "\n";
        }
        std::cout << (rep.all_pass() ? "all laws hold" : "law failures detected") << "\n";
    }
    return rep.all_pass() ? 0 : 3;
}

int run_enumerate(int m, int n, const std::string& cls, bool as_json) {
    MapClass mc = cls == "surj" ? MapClass::Surjective
                : cls == "inj" ? MapClass::Injective
                               : MapClass::All;
    auto maps = enumerate_maps(m, n, mc);
    if (mc == MapClass::Surjective && m >= 1 && n >= 1 &&
        maps.size() != binomial(m - 1, n - 1)) {
        std::cerr << "error: enumeration disagrees with the binomial count\n";
        return 3;
    }
    if (as_json) {
        json out = json::array();
        for (const auto& f : maps) out.push_back(to_json(f));
        std::cout << json{{"count", maps.size()}, {"maps", std::move(out)}}.dump() << "\n";
    } else {
        for (const auto& f : maps) std::cout << f.str() << "\n";
        std::cout << "count: " << maps.size() << "\n";
    }
    return 0;
}

int default_bound() {
    if (const char* env = std::getenv("COSPAN_BOUND")) {
        try {
            int b = std::stoi(env);
            if (b >= 0) return b;
        } catch (...) {
        }
        std::cerr << "warning: ignoring invalid COSPAN_BOUND\n";
    }
    return 4;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cospan calculus of finite linear orders"};
    app.require_subcommand(1);

    std::string term, term_b, instance = "cospan-slin", cls = "surj";
    bool as_json = false, with_trace = false;
    int bound = default_bound();
    int m = 0, n = 0;

    auto* eval = app.add_subcommand("eval", "evaluate a term to a cospan or 2-cell");
    eval->add_option("term", term)->required();
    eval->add_flag("--json", as_json);

    auto* norm = app.add_subcommand("normalize", "rewrite a term to normal form");
    norm->add_option("term", term)->required();
    norm->add_flag("--trace", with_trace);
    norm->add_flag("--json", as_json);

    auto* eq = app.add_subcommand("equal", "decide equality of two terms");
    eq->add_option("left", term)->required();
    eq->add_option("right", term_b)->required();

    auto* rend = app.add_subcommand("render", "draw a term as an ASCII wire diagram");
    rend->add_option("term", term)->required();

    auto* laws = app.add_subcommand("laws", "run the law suites for an instance");
    laws->add_option("--instance", instance,
                     "cospan-slin | cospan-opinj | terminal | free | free-no-frobenius");
    laws->add_option("--bound", bound, "exhaustive-check bound");
    laws->add_flag("--json", as_json);

    auto* enumr = app.add_subcommand("enumerate", "list monotone maps m -> n");
    enumr->add_option("m", m)->required();
    enumr->add_option("n", n)->required();
    enumr->add_option("--class", cls, "surj | inj | all");
    enumr->add_flag("--json", as_json);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (eval->parsed()) return run_eval(term, as_json);
    if (norm->parsed()) return run_normalize(term, with_trace, as_json);
    if (eq->parsed()) return run_equal(term, term_b);
    if (rend->parsed()) return run_render(term);
    if (laws->parsed()) return run_laws(instance, bound, as_json);
    if (enumr->parsed()) return run_enumerate(m, n, cls, as_json);
    return 2;
}
