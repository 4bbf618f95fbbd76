#include <catch2/catch_amalgamated.hpp>

#include <functional>
#include <map>
#include <sstream>

#include "cospan/json_io.hpp"
#include "cospan/parse.hpp"
#include "cospan/rewrite.hpp"
#include "oracles.hpp"

using namespace cospan;

namespace {

const Base kSurj{BaseKind::SurjOrd};

std::string form_key(const SliceForm& sf) {
    std::ostringstream os;
    os << sf.input_width << '|';
    for (const auto& s : sf.slices) os << s.str() << ' ';
    return os.str();
}

std::string cospan_key(const Cospan& c) { return to_json(c).dump(); }

/// All merge/split slice forms from `width` with at most `depth` more slices,
/// intermediate widths capped at `max_width`.
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

void check_normalization(const SliceForm& sf) {
    auto [nf, trace] = normalize_slices(sf);
    CHECK(is_normal(nf));
    CHECK(static_cast<int>(trace.steps.size()) <= inversion_measure(sf));
    CHECK(eval_slices(nf, kSurj) == eval_slices(sf, kSurj));
    SliceForm canon = canonicalize_normal(nf);
    CHECK(eval_slices(canon, kSurj) == eval_slices(sf, kSurj));
}

}  // namespace

TEST_CASE("single rewrite steps match their defining equations") {
    // d;m pops to the identity
    SliceForm bubble{1, {{SliceGen::Split, 0, 0}, {SliceGen::Merge, 0, 0}}};
    auto step = rewrite_step(bubble);
    REQUIRE(step.has_value());
    CHECK(step->rule == RewriteRule::Pop);
    CHECK(step->after.slices.empty());
    // each step preserves the evaluation
    for (int w = 1; w <= 4; ++w)
        for (int a1 = 0; a1 < w; ++a1)
            for (int a2 = 0; a2 + 2 <= w + 1; ++a2) {
                SliceForm sf{w, {{SliceGen::Split, a1, w - a1 - 1},
                                 {SliceGen::Merge, a2, w - a2 - 1}}};
                auto st = rewrite_step(sf);
                REQUIRE(st.has_value());
                CHECK(eval_slices(st->after, kSurj) == eval_slices(sf, kSurj));
            }
}

TEST_CASE("normalization is sound, terminating, and reaches a normal form") {
    SECTION("exhaustive merge/split slice forms") {
        int count = 0;
        for (int w = 0; w <= 4; ++w) {
            SliceForm cur{w, {}};
            enumerate_forms(cur, w, 6, 6, [&](const SliceForm& sf) {
                ++count;
                check_normalization(sf);
            });
        }
        CHECK(count > 100000);
    }
    SECTION("random term corpus") {
        oracle::TermGen gen(424242, false);
        for (int i = 0; i < 1000; ++i) {
            TermPtr t = gen.term(1 + i % 5, 10);
            check_normalization(to_slices(t));
        }
    }
}

TEST_CASE("canonical forms classify terms exactly like evaluation") {
    // Per boundary, the map canonical form <-> evaluated cospan is a bijection.
    std::map<std::string, std::string> canon_to_eval, eval_to_canon;
    for (int w = 0; w <= 4; ++w) {
        SliceForm cur{w, {}};
        enumerate_forms(cur, w, 6, 6, [&](const SliceForm& sf) {
            std::string c = form_key(canonicalize_normal(normalize_slices(sf).first));
            std::string e = cospan_key(eval_slices(sf, kSurj));
            auto [it1, new1] = canon_to_eval.emplace(c, e);
            CHECK(it1->second == e);
            auto [it2, new2] = eval_to_canon.emplace(e, c);
            CHECK(it2->second == c);
        });
    }
    CHECK(canon_to_eval.size() == eval_to_canon.size());
}

TEST_CASE("normal forms read off the pushout of surjections") {
    // For surjections f: m->a and g: m->b, the slice form that first undoes f
    // (splits) and then applies g (merges) normalizes to the cospan whose legs
    // are the pushout of f and g.
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
                        REQUIRE(sf.output_width() == b);
                        auto [p0, p1] = pushout_surjections(f, g);
                        Cospan want(kSurj, a, b, p0.codomain(), p0, p1);
                        auto [nf, trace] = normalize_slices(sf);
                        CHECK(normal_form_cospan(nf) == want);
                        CHECK(eval_slices(sf, kSurj) == want);
                    }
}

TEST_CASE("equality decision agrees along both routes") {
    auto eq = [](const char* x, const char* y) {
        return equal_terms(parse_one_cell(x), parse_one_cell(y));
    };
    CHECK(eq("d ; m", "id:1"));
    CHECK(eq("(m + id:1) ; m", "(id:1 + m) ; m"));
    CHECK(eq("m ; d", "(d + id:1) ; (id:1 + m)"));
    CHECK(eq("m ; d", "(id:1 + d) ; (m + id:1)"));
    CHECK_FALSE(eq("m ; d", "id:2"));
    CHECK(eq("m ; d ; m ; d", "m ; d"));  // separability collapses the chain
    CHECK_THROWS_AS(eq("m", "d"), std::invalid_argument);
    // unit signature falls back to evaluation alone
    CHECK(eq("s ; r", "id:0"));
    CHECK_FALSE(eq("r ; s", "id:1"));
    // random cross-check: equal canonical forms iff equal cospans
    oracle::TermGen gen(7, false);
    for (int i = 0; i < 200; ++i) {
        TermPtr x = gen.term(2, 6), y = gen.term(2, 6);
        if (boundary(x).tgt != boundary(y).tgt) continue;
        CHECK(equal_terms(x, y) == (eval_one(x) == eval_one(y)));
    }
}

TEST_CASE("traces replay step by step") {
    TermPtr t = parse_one_cell("(d + d) ; (id:1 + m + id:1) ; (m + id:1) ; m ; d");
    auto [nf, trace] = normalize(t);
    CHECK(trace.initial == to_slices(t));
    SliceForm cur = trace.initial;
    for (const auto& st : trace.steps) {
        CHECK(st.before == cur);
        cur = st.after;
    }
    CHECK(cur == nf);
    json j = to_json(trace);
    CHECK(j.is_array());
    CHECK(j.size() == trace.steps.size());
    for (const auto& e : j) {
        CHECK(e.contains("rule"));
        CHECK(e.contains("at"));
    }
}

TEST_CASE("unit-signature terms are rejected by the normalizer") {
    CHECK_THROWS_AS(normalize(parse_one_cell("s ; r")), std::invalid_argument);
}
