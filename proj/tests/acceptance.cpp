// Acceptance gate: one pass/fail line per top-level requirement. Exits
// nonzero if any criterion fails. Usage: acceptance <cli-binary> <golden-dir>

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "cospan/induced.hpp"
#include "cospan/instance.hpp"
#include "cospan/json_io.hpp"
#include "cospan/laws.hpp"
#include "cospan/parse.hpp"
#include "cospan/rewrite.hpp"
#include "oracles.hpp"

using namespace cospan;

namespace {

int g_failures = 0;

void report(const std::string& name, bool ok, const std::string& detail = "") {
    std::cout << (ok ? "PASS" : "FAIL") << "  " << name;
    if (!ok && !detail.empty()) std::cout << "  [" << detail << "]";
    std::cout << "\n";
    if (!ok) ++g_failures;
}

void criterion(const std::string& name, const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    report(name, ok, detail);
}

bool all_pass(const LawReport& rep, std::string& detail) {
    for (const auto& r : rep.results)
        if (!r.pass) {
            detail = r.law + ": " + r.witness;
            return false;
        }
    return true;
}

struct CliResult {
    int exit_code = -1;
    std::string out;
};

CliResult run_cli(const std::string& bin, const std::string& args) {
    CliResult res;
    std::string cmd = bin + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return res;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) res.out.append(buf, n);
    int status = pclose(p);
    if (WIFEXITED(status)) res.exit_code = WEXITSTATUS(status);
    return res;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

const Base kSurj{BaseKind::SurjOrd};

void enumerate_forms(SliceForm& cur, int width, int depth, int max_width,
                     const std::function<void(const SliceForm&)>& visit) {
    visit(cur);
    if (depth == 0) return;
    for (int a = 0; a + 2 <= width; ++a) {
        cur.slices.push_back({SliceGen::Merge, a, width - a - 2});
        enumerate_forms(cur, width - 1, depth - 1, max_width, visit);
        cur.slices.pop_back();
    }
    if (width + 1 <= max_width)
        for (int a = 0; a < width; ++a) {
            cur.slices.push_back({SliceGen::Split, a, width - a - 1});
            enumerate_forms(cur, width + 1, depth - 1, max_width, visit);
            cur.slices.pop_back();
        }
}

std::string form_key(const SliceForm& sf) {
    std::ostringstream os;
    os << sf.input_width << '|';
    for (const auto& s : sf.slices) os << s.str() << ' ';
    return os.str();
}

ComoAlgebraData<CospanInstance> surjection_algebra(const CospanInstance& inst) {
    Base b = inst.base;
    return {1, y_embed(b, MonotoneMap::nabla()), z_embed(b, MonotoneMap::nabla()),
            overline(b, MonotoneMap::nabla())};
}

ComoUnitData<CospanInstance> injection_unit(const CospanInstance& inst) {
    Base b = inst.base;
    return {1, z_embed(b, MonotoneMap::bang()), y_embed(b, MonotoneMap::bang()),
            overline(b, MonotoneMap::bang())};
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 3) {
        std::cerr << "usage: acceptance <cli-binary> <golden-dir>\n";
        return 2;
    }
    const std::string cli = argv[1];
    const std::string golden = argv[2];

    criterion("1 pushouts of surjections satisfy the universal property (m<=6)",
              [](std::string& detail) {
        for (int m = 0; m <= 6; ++m)
            for (int a = 0; a <= m; ++a)
                for (int b = 0; b <= m; ++b)
                    for (const auto& f : enumerate_maps(m, a, MapClass::Surjective))
                        for (const auto& g : enumerate_maps(m, b, MapClass::Surjective)) {
                            auto [p0, p1] = pushout_surjections(f, g);
                            auto want = oracle::pushout_by_search(f, g);
                            if (!want || p0 != want->p0 || p1 != want->p1 ||
                                compose(f, p0) != compose(g, p1)) {
                                detail = "f=" + f.str() + " g=" + g.str();
                                return false;
                            }
                        }
        return true;
    });

    criterion("2 pushouts and pullbacks respect ordinal sum (domains<=4)",
              [](std::string& detail) {
        for (int m1 = 0; m1 <= 4; ++m1)
            for (int m2 = 0; m2 <= 4 - m1; ++m2)
                for (int a1 = 0; a1 <= m1; ++a1)
                    for (int b1 = 0; b1 <= m1; ++b1)
                        for (int a2 = 0; a2 <= m2; ++a2)
                            for (int b2 = 0; b2 <= m2; ++b2)
                                for (const auto& f1 : enumerate_maps(m1, a1, MapClass::Surjective))
                                    for (const auto& g1 : enumerate_maps(m1, b1, MapClass::Surjective))
                                        for (const auto& f2 : enumerate_maps(m2, a2, MapClass::Surjective))
                                            for (const auto& g2 : enumerate_maps(m2, b2, MapClass::Surjective)) {
                                                auto [p0, p1] = pushout_surjections(tensor(f1, f2), tensor(g1, g2));
                                                auto [u0, u1] = pushout_surjections(f1, g1);
                                                auto [v0, v1] = pushout_surjections(f2, g2);
                                                if (p0 != tensor(u0, v0) || p1 != tensor(u1, v1)) {
                                                    detail = "surjective case " + f1.str() + "+" + f2.str();
                                                    return false;
                                                }
                                            }
        for (int n1 = 0; n1 <= 4; ++n1)
            for (int n2 = 0; n2 <= 4 - n1; ++n2)
                for (int a1 = 0; a1 <= n1; ++a1)
                    for (int b1 = 0; b1 <= n1; ++b1)
                        for (int a2 = 0; a2 <= n2; ++a2)
                            for (int b2 = 0; b2 <= n2; ++b2)
                                for (const auto& f1 : enumerate_maps(a1, n1, MapClass::Injective))
                                    for (const auto& g1 : enumerate_maps(b1, n1, MapClass::Injective))
                                        for (const auto& f2 : enumerate_maps(a2, n2, MapClass::Injective))
                                            for (const auto& g2 : enumerate_maps(b2, n2, MapClass::Injective)) {
                                                auto [q0, q1] = pullback_injections(tensor(f1, f2), tensor(g1, g2));
                                                auto [u0, u1] = pullback_injections(f1, g1);
                                                auto [v0, v1] = pullback_injections(f2, g2);
                                                if (q0 != tensor(u0, v0) || q1 != tensor(u1, v1)) {
                                                    detail = "injective case " + f1.str() + "+" + f2.str();
                                                    return false;
                                                }
                                            }
        return true;
    });

    criterion("3 the separable-algebra identities hold as exact cospans",
              [](std::string& detail) {
        Cospan m = eval_one(parse_one_cell("m")), d = eval_one(parse_one_cell("d"));
        Cospan frob(kSurj, 2, 2, 1, MonotoneMap(2, 1, {0, 0}), MonotoneMap(2, 1, {0, 0}));
        bool ok = eval_one(parse_one_cell("(m + id:1) ; m")) ==
                      eval_one(parse_one_cell("(id:1 + m) ; m")) &&
                  eval_one(parse_one_cell("d ; (d + id:1)")) ==
                      eval_one(parse_one_cell("d ; (id:1 + d)")) &&
                  compose_cospans(d, m) == identity_cospan(kSurj, 1) &&
                  compose_cospans(m, d) == frob &&
                  eval_one(parse_one_cell("(d + id:1) ; (id:1 + m)")) == frob &&
                  eval_one(parse_one_cell("(id:1 + d) ; (m + id:1)")) == frob;
        if (!ok) detail = "an identity failed to hold on the nose";
        return ok;
    });

    criterion("4 the 2-cell laws hold and all four mates are identities",
              [](std::string& detail) {
        CospanInstance inst;
        auto alg = surjection_algebra(inst);
        LawReport rep = check_como_algebra(inst, alg);
        rep.merge(check_frobenius_2d(inst, alg));
        LawReport mates = check_mates(inst, alg);
        if (mates.results.size() != 4) {
            detail = "expected four mate pastings";
            return false;
        }
        rep.merge(mates);
        return all_pass(rep, detail);
    });

    criterion("5 normalizer: sound, terminating, complete (<10s)",
              [](std::string& detail) {
        auto start = std::chrono::steady_clock::now();
        std::map<std::string, std::string> canon_to_eval, eval_to_canon;
        bool ok = true;
        auto visit = [&](const SliceForm& sf) {
            if (!ok) return;
            auto [nf, trace] = normalize_slices(sf);
            if (!is_normal(nf) ||
                static_cast<int>(trace.steps.size()) > inversion_measure(sf) ||
                eval_slices(nf, kSurj) != eval_slices(sf, kSurj)) {
                detail = "normalization failed at " + form_key(sf);
                ok = false;
                return;
            }
            std::string c = form_key(canonicalize_normal(nf));
            std::string e = to_json(eval_slices(sf, kSurj)).dump();
            auto [it1, n1] = canon_to_eval.emplace(c, e);
            auto [it2, n2] = eval_to_canon.emplace(e, c);
            if (it1->second != e || it2->second != c) {
                detail = "canonical forms and evaluation disagree at " + form_key(sf);
                ok = false;
            }
        };
        for (int w = 0; w <= 4 && ok; ++w) {
            SliceForm cur{w, {}};
            enumerate_forms(cur, w, 6, 6, visit);
        }
        oracle::TermGen gen(424242, false);
        for (int i = 0; i < 1000 && ok; ++i) visit(to_slices(gen.term(1 + i % 5, 10)));
        auto secs = std::chrono::duration_cast<std::chrono::seconds>(
                        std::chrono::steady_clock::now() - start).count();
        if (ok && secs >= 10) {
            detail = "took " + std::to_string(secs) + "s";
            ok = false;
        }
        return ok;
    });

    criterion("6 normal forms compute the pushout legs (dom<=5)",
              [](std::string& detail) {
        for (int m = 0; m <= 5; ++m)
            for (int a = 0; a <= m; ++a)
                for (int b = 0; b <= m; ++b)
                    for (const auto& f : enumerate_maps(m, a, MapClass::Surjective))
                        for (const auto& g : enumerate_maps(m, b, MapClass::Surjective)) {
                            SliceForm sf{a, {}};
                            auto fl = factorize_surjection(f);
                            for (auto it = fl.rbegin(); it != fl.rend(); ++it)
                                sf.slices.push_back({SliceGen::Split, it->left_pad, it->right_pad});
                            for (const auto& l : factorize_surjection(g))
                                sf.slices.push_back({SliceGen::Merge, l.left_pad, l.right_pad});
                            auto [p0, p1] = pushout_surjections(f, g);
                            Cospan want(kSurj, a, b, p0.codomain(), p0, p1);
                            if (normal_form_cospan(normalize_slices(sf).first) != want) {
                                detail = "f=" + f.str() + " g=" + g.str();
                                return false;
                            }
                        }
        return true;
    });

    criterion("7 three atomic squares generate all pushouts; pasting is compatible (dom<=6)",
              [](std::string& detail) {
        LawReport rep = check_three_squares_suffice(6);
        CospanInstance surj;
        rep.merge(check_compatibility(induced_functor(surj, surjection_algebra(surj)), 4));
        CospanInstance opinj{Base{BaseKind::OpInjOrd}};
        rep.merge(check_compatibility(induced_unit_functor(opinj, injection_unit(opinj)), 4));
        FreeInstance free_inst;
        ComoAlgebraData<FreeInstance> free_alg{
            1, free_inst.make(OneCellTerm::nabla()), free_inst.make(OneCellTerm::delta()),
            FreeTwo{free_inst.id1(2),
                    free_inst.compose1(free_inst.make(OneCellTerm::nabla()),
                                       free_inst.make(OneCellTerm::delta()))}};
        rep.merge(check_compatibility(induced_functor(free_inst, free_alg), 3));
        TerminalInstance term;
        using Pt = TerminalInstance::Pt;
        rep.merge(check_compatibility(
            induced_functor(term, ComoAlgebraData<TerminalInstance>{Pt{}, Pt{}, Pt{}, Pt{}}), 3));
        return all_pass(rep, detail);
    });

    criterion("8 the induced 2-functor is the identity on cospans (objects<=5)",
              [](std::string& detail) {
        CospanInstance inst;
        auto F = induced_functor(inst, surjection_algebra(inst));
        for (int n = 0; n <= 5; ++n)
            if (F.map_obj(n) != n) {
                detail = "object " + std::to_string(n);
                return false;
            }
        for (int a = 0; a <= 4; ++a)
            for (int b = 0; b <= 4; ++b) {
                auto cells = enumerate_cospans(kSurj, a, b);
                for (const auto& f : cells) {
                    if (F.map_cospan(f) != f) {
                        detail = "1-cell " + f.str();
                        return false;
                    }
                    for (const auto& g : cells)
                        if (auto t = find_two_cell(f, g))
                            if (F.map_two_cell(*t) != *t) {
                                detail = "2-cell " + f.str() + " => " + g.str();
                                return false;
                            }
                }
            }
        return true;
    });

    criterion("9 unit laws hold and atomic squares generate all pullbacks (cod<=6)",
              [](std::string& detail) {
        CospanInstance inst{Base{BaseKind::OpInjOrd}};
        auto unit = injection_unit(inst);
        LawReport rep = check_como_unit(inst, unit);
        rep.merge(check_pullback_base_squares(6));
        if (!all_pass(rep, detail)) return false;
        auto F = induced_unit_functor(inst, unit);
        for (int a = 0; a <= 4; ++a)
            for (int b = 0; b <= 4; ++b)
                for (const auto& f : enumerate_cospans(inst.base, a, b))
                    if (F.map_cospan(f) != f) {
                        detail = "1-cell " + f.str();
                        return false;
                    }
        return true;
    });

    criterion("10 surjections m->n are counted by binomial(m-1, n-1) (m<=8)",
              [](std::string& detail) {
        for (int m = 1; m <= 8; ++m)
            for (int n = 1; n <= m; ++n)
                if (enumerate_maps(m, n, MapClass::Surjective).size() !=
                    binomial(m - 1, n - 1)) {
                    detail = "m=" + std::to_string(m) + " n=" + std::to_string(n);
                    return false;
                }
        return true;
    });

    criterion("11 CLI contract: outputs, exit codes, and stable renders",
              [&](std::string& detail) {
        auto ev = run_cli(cli, "eval \"d ; m\"");
        if (ev.exit_code != 0 ||
            ev.out != "{\"src\":1,\"tgt\":1,\"apex\":1,\"left\":[0],\"right\":[0]}\n") {
            detail = "eval output: " + ev.out;
            return false;
        }
        auto evj = run_cli(cli, "eval \"m ; d\" --json");
        Cospan round = cospan_from_json(json::parse(evj.out));
        if (evj.exit_code != 0 || round != eval_one(parse_one_cell("m ; d"))) {
            detail = "json eval did not round-trip";
            return false;
        }
        if (run_cli(cli, "equal \"d ; m\" \"id:1\"").exit_code != 0 ||
            run_cli(cli, "equal \"m ; d\" \"id:2\"").exit_code != 1 ||
            run_cli(cli, "eval \"m ;\"").exit_code != 2 ||
            run_cli(cli, "laws --instance free-no-frobenius --bound 2").exit_code != 3) {
            detail = "exit codes off contract";
            return false;
        }
        const std::pair<const char*, const char*> renders[] = {
            {"m", "render_merge.txt"},
            {"d ; m", "render_bubble.txt"},
            {"(d + id:1) ; (id:1 + m)", "render_frobenius.txt"},
            {"r + s", "render_unit.txt"},
        };
        for (const auto& [text, file] : renders) {
            std::string want = read_file(golden + "/" + file);
            auto first = run_cli(cli, std::string("render \"") + text + "\"");
            auto second = run_cli(cli, std::string("render \"") + text + "\"");
            if (want.empty() || first.exit_code != 0 || first.out != want ||
                second.out != first.out) {
                detail = std::string("render of '") + text + "' is not byte-stable";
                return false;
            }
        }
        return true;
    });

    std::cout << (g_failures == 0 ? "ALL ACCEPTANCE CRITERIA PASS"
                                  : "ACCEPTANCE FAILURES: " + std::to_string(g_failures))
              << "\n";
    return g_failures == 0 ? 0 : 1;
}
