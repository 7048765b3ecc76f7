#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "cni/errors.hpp"
#include "cni/geometry.hpp"
#include "cni/prover.hpp"
#include "instances.hpp"
#include "support.hpp"

using namespace cni;
using namespace cni::test;

namespace {

RationalExpr P(std::size_t i) { return RationalExpr::point(i); }

std::string text(const RationalExpr& e, const Construction& c) { return e.to_string(*c.points()); }

ProverVerdict run(const Construction& c, FixMode mode = FixMode::ZeroOne, ResourceBudget b = {}) {
  return prove_construction(c, mode, b);
}

bool trace_has(const ProverVerdict& v, const std::string& line) {
  return std::any_of(v.trace.begin(), v.trace.end(), [&](const TraceItem& t) { return t.text == line; });
}

/// Raw polynomial relations over free points, for steering the prover into
/// particular branches.
Construction raw(const std::vector<std::string>& points, const std::vector<std::string>& relations,
                 const std::string& thesis) {
  Construction c;
  for (const auto& p : points) c.add_free_point(p);
  for (const auto& r : relations) c.assume_real(parse_expression(r, *c.points()));
  c.prove_real(parse_expression(thesis, *c.points()));
  return c;
}

}  // namespace

TEST_SUITE("predicates") {
  TEST_CASE("formula catalog") {
    Construction c;
    for (const char* n : {"A", "B", "C", "D", "E", "F", "G", "H", "O"}) c.add_free_point(n);
    auto id = [&](const char* n) { return c.point(n); };
    CHECK(text(predicate_exprs(collinear(id("A"), id("O"), id("B")))[0], c) == "(A-O)/(O-B)");
    CHECK(text(predicate_exprs(parallel(id("E"), id("F"), id("G"), id("H")))[0], c) == "(E-F)/(G-H)");
    CHECK(text(predicate_exprs(perpendicular(id("A"), id("C"), id("C"), id("B")))[0], c) == "((A-C)/(C-B))^2");
    CHECK(text(predicate_exprs(equidistant(id("O"), id("A"), id("C")))[0], c) == "(A-C)/(A-O)/((C-O)/(C-A))");
    CHECK(text(predicate_exprs(angle_equal(id("A"), id("B"), id("D"), id("D"), id("B"), id("C")))[0], c) ==
          "(B-A)/(B-D)/((B-D)/(B-C))");
    CHECK(text(predicate_exprs(concyclic(id("A"), id("B"), id("C"), id("D")))[0], c) ==
          "(A-C)*(B-D)/((A-D)*(B-C))");
  }

  TEST_CASE("degenerate argument lists are rejected") {
    CHECK_THROWS_AS(collinear(0, 0, 1), ConstructionError);
    CHECK_THROWS_AS(parallel(0, 0, 1, 2), ConstructionError);
    CHECK_THROWS_AS(perpendicular(0, 1, 2, 2), ConstructionError);
    CHECK_THROWS_AS(equidistant(0, 1, 1), ConstructionError);
    CHECK_THROWS_AS(angle_equal(0, 0, 1, 2, 3, 4), ConstructionError);
    CHECK_THROWS_AS(concyclic(0, 1, 2, 0), ConstructionError);
    CHECK_THROWS_AS(make_predicate(PredicateKind::Parallel, {0, 1, 2}), ConstructionError);
    CHECK_NOTHROW(parallel(0, 1, 0, 1));
  }

  TEST_CASE("satisfied instances are real, generic ones are not") {
    Rng rng(101);
    for (int i = 0; i < 40; ++i) {
      for (const auto& inst : satisfied_instances(rng)) {
        std::string kind = predicate_keyword(inst.pred.kind);
        CAPTURE(kind);
        for (const auto& e : predicate_exprs(inst.pred)) CHECK(eval(e, inst.points).im == 0);
        auto generic = generic_points(rng, inst.pred, inst.points.size());
        bool some_nonreal = false;
        for (const auto& e : predicate_exprs(inst.pred)) some_nonreal = some_nonreal || eval(e, generic).im != 0;
        CHECK(some_nonreal);
      }
    }
  }

  TEST_CASE("caveats for the weaker encodings") {
    CHECK_FALSE(predicate_caveat(PredicateKind::Perpendicular).empty());
    CHECK_FALSE(predicate_caveat(PredicateKind::Equidistant).empty());
    CHECK_FALSE(predicate_caveat(PredicateKind::Concyclic).empty());
    CHECK(predicate_caveat(PredicateKind::Parallel).empty());
  }
}

TEST_SUITE("declarations") {
  TEST_CASE("named declarations") {
    Construction c;
    for (const char* n : {"A", "B", "C"}) c.add_free_point(n);
    CHECK(text(declarative_expr({DeclarationKind::Midpoint, {0, 1}}), c) == "(A+B)/2");

    Rng rng(111);
    auto pts = random_points(rng, 3);
    CHECK(eval(declarative_expr({DeclarationKind::Barycenter, {0, 0, 0}}), pts) == pts[0]);

    auto X = eval(declarative_expr({DeclarationKind::Parallelogram4, {0, 1, 2}}), pts);
    Gauss half{mpq_class(1, 2), 0};
    CHECK((pts[0] + pts[2]) * half == (pts[1] + X) * half);
  }

  TEST_CASE("forward references are rejected") {
    Construction c;
    c.add_free_point("A");
    CHECK_THROWS_AS(c.add_declared_point("M", P(0) + P(1)), ConstructionError);
  }

  TEST_CASE("inlining removes declared points") {
    auto c = sample("thales_midpoint.cni");
    auto s = substitute_declaratives(c);
    auto O = c.point("O");
    for (const auto& step : s.steps()) {
      const auto* rel = std::get_if<RelationalStep>(&step);
      REQUIRE(rel);
      for (const auto& e : rel->relations) CHECK_FALSE(e.references(O));
    }
    CHECK_FALSE(s.thesis()->expr.references(O));
    REQUIRE(s.inlined().size() == 1);
  }

  TEST_CASE("nothing to inline leaves the construction alone") {
    auto c = sample("angle_bisectors.cni");
    CHECK(substitute_declaratives(c) == c);
  }

  TEST_CASE("chained declarations inline transitively") {
    Construction c;
    auto A = c.add_free_point("A"), B = c.add_free_point("B"), C = c.add_free_point("C");
    auto M = c.add_declared_point("M", (P(A) + P(B)) / RationalExpr::constant(2));
    auto N = c.add_declared_point("N", (P(M) + P(C)) / RationalExpr::constant(2));
    c.prove_real(P(N) - P(A));
    auto s = substitute_declaratives(c);
    Rng rng(121);
    for (int i = 0; i < 20; ++i) {
      auto pts = random_points(rng, 5);
      Gauss half{mpq_class(1, 2), 0};
      Gauss want = ((pts[A] + pts[B]) * half + pts[C]) * half - pts[A];
      CHECK(eval(s.thesis()->expr, pts) == want);
      CHECK_FALSE(s.thesis()->expr.references(M));
    }
  }
}

TEST_SUITE("system") {
  TEST_CASE("one slack per relation plus the thesis") {
    for (const auto& name : worked_examples()) {
      CAPTURE(name);
      auto c = substitute_declaratives(sample(name));
      auto sys = build_system(c);
      std::size_t relations = 0;
      for (const auto& step : c.steps())
        if (const auto* rel = std::get_if<RelationalStep>(&step)) relations += rel->relations.size();
      REQUIRE(sys.slacks.size() == relations + 1);
      CHECK(sys.hypothesis_polys.size() == sys.slacks.size());
      for (std::size_t i = 0; i < sys.slacks.size(); ++i) {
        const auto& s = sys.slacks[i];
        CHECK(sys.vars->kind(s.var) == VarKind::RealSlack);
        CHECK(s.thesis == (i + 1 == sys.slacks.size()));
        CHECK(s.name == (s.thesis ? std::string("r") : "r" + std::to_string(i + 1)));
        CHECK(sys.vars->name(s.var) == s.name);
      }
      CHECK(sys.keep_vars == sys.vars->of_kind(VarKind::RealSlack));
      CHECK(sys.thesis_var == sys.thesis_slack().var);
    }
  }

  TEST_CASE("converse Thales gives four cleared polynomials and u") {
    auto sys = build_system(substitute_declaratives(converse_thales()));
    CHECK(sys.hypothesis_polys.size() == 4);
    REQUIRE(sys.rabinowitsch_poly);
    auto u = sys.vars->rabinowitsch();
    REQUIRE(u);
    CHECK(std::find(sys.eliminate_vars.begin(), sys.eliminate_vars.end(), *u) != sys.eliminate_vars.end());
    for (const char* p : {"A", "B", "C", "O"})
      CHECK(std::find(sys.eliminate_vars.begin(), sys.eliminate_vars.end(), *sys.vars->index_of(p)) !=
            sys.eliminate_vars.end());
  }

  TEST_CASE("a thesis-only parallel gives r-1") {
    Construction c;
    auto A = c.add_free_point("A"), B = c.add_free_point("B");
    c.prove(parallel(A, B, A, B));
    auto sys = build_system(c);
    REQUIRE(sys.hypothesis_polys.size() == 1);
    auto I = eliminate(sys.generators(), sys.eliminate_vars);
    CHECK(ideal_membership(poly("r-1", sys.vars), I));
  }

  TEST_CASE("the medians ratios match the hand-written input ideal") {
    auto c = substitute_declaratives(sample("medians_ratios.cni"));
    auto sys = build_system(c);
    auto t = sys.vars;
    auto sub = [&](const std::string& s) {
      // D, E, F inlined as in the hand-written version
      auto p = poly(s, t);
      for (auto [name, def] : {std::pair{"D", "1/2*B+1/2*C"}, {"E", "1/2*A+1/2*C"}, {"F", "1/2*A+1/2*B"}})
        p = p.substitute(*t->index_of(name), poly(def, t));
      return p;
    };
    std::vector<Polynomial> hand{sub("(B-E)*r1+G-B"), sub("(D-A)*r2+G-D"), sub("(C-F)*r+G-C")};
    REQUIRE(sys.hypothesis_polys.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) CHECK(associates(sys.hypothesis_polys[i], hand[i]));
    REQUIRE(sys.rabinowitsch_poly);
    Polynomial prod = Polynomial::constant(t, 1);
    for (const auto& f : sys.denominator_factors) prod = prod * f;
    CHECK(associates(prod, sub("(B-E)*(D-A)*(C-F)")));
  }

  TEST_CASE("the Rabinowitsch polynomial vanishes exactly off the denominators") {
    Rng rng(131);
    for (const auto& name : worked_examples()) {
      CAPTURE(name);
      auto sys = build_system(substitute_declaratives(sample(name)));
      if (!sys.rabinowitsch_poly) continue;
      auto u = *sys.vars->rabinowitsch();
      for (int i = 0; i < 10; ++i) {
        auto at = random_points(rng, sys.vars->size());
        Gauss prod{1, 0};
        for (const auto& f : sys.denominator_factors) prod = prod * eval(f, at);
        REQUIRE_FALSE(prod.zero());
        at[u] = Gauss{1, 0} / prod;
        CHECK(eval(*sys.rabinowitsch_poly, at).zero());
      }
      // collapse the first factor: pick its first point variable and solve
      const auto& f = sys.denominator_factors.front();
      auto at = random_points(rng, sys.vars->size());
      auto v = f.variables().front();
      auto lin = f.coefficient(v, 1);
      auto rest = f.coefficient(v, 0);
      if (f.degree_in(v) == 1 && lin.is_constant()) {
        at[v] = (Gauss{0, 0} - eval(rest, at)) / eval(lin, at);
        CHECK(eval(f, at).zero());
        CHECK(eval(*sys.rabinowitsch_poly, at) == Gauss{-1, 0});
      }
    }
  }

  TEST_CASE("fixing without free points is harmless") {
    Construction c;
    c.add_free_point("A");
    c.prove_real(P(0));
    auto sys = build_system(c);
    auto fixed = fix_coordinates(sys, c, FixMode::ZeroOne);
    CHECK(fixed.fixed.size() == 1);
    auto off = fix_coordinates(sys, c, FixMode::Off);
    CHECK(off.fixed.empty());
    CHECK(off.hypothesis_polys == sys.hypothesis_polys);
    CHECK(off.eliminate_vars == sys.eliminate_vars);
  }

  TEST_CASE("invariance checks") {
    Construction c;
    auto A = c.add_free_point("A"), B = c.add_free_point("B"), C = c.add_free_point("C");
    CHECK(affine_invariant((P(A) - P(C)) / (P(B) - P(C)), c.points()));
    CHECK_FALSE(affine_invariant(P(A) - P(B), c.points()));
    CHECK(translation_invariant(P(A) - P(B), c.points()));
    CHECK_FALSE(translation_invariant(P(A), c.points()));
  }
}

TEST_SUITE("prover") {
  TEST_CASE("converse Thales: pivot, rational form, contradiction") {
    auto v = run(converse_thales(), FixMode::Off);
    REQUIRE(v.first);
    auto t = v.system->vars;
    CHECK(v.first->generators.size() == 4);
    CHECK(ideal_membership(poly("r1*r2*r3*r+1", t), *v.first));
    REQUIRE(v.pivot);
    CHECK(*v.pivot == poly("r1*r2*r3*r+1", t));
    REQUIRE(v.linear);
    CHECK(v.linear->v == poly("r1*r2*r3", t));
    CHECK(v.linear->w == poly("1", t));
    CHECK(rational_form(*v.linear, v.first->order) == "-1/(r1*r2*r3)");
    REQUIRE(v.second);
    CHECK(v.second->result == DenominatorResult::Contradiction);
    CHECK(v.proved());
  }

  TEST_CASE("midpoint Thales in both fixing modes") {
    for (auto mode : {FixMode::ZeroOne, FixMode::Off}) {
      auto v = run(sample("thales_midpoint.cni"), mode);
      REQUIRE(v.first);
      auto t = v.system->vars;
      CHECK(ideal_membership(poly("r1*r-r1-4*r", t), *v.first));
      REQUIRE(v.linear);
      CHECK(rational_form(*v.linear, v.first->order) == "r1/(r1-4)");
      CHECK(v.linear->v == poly("r1-4", t));
      CHECK(v.linear->w == poly("-r1", t));
      auto check = check_denominator(*v.system, poly("r1-4", t));
      CHECK(check.result == DenominatorResult::Contradiction);
      CHECK(v.proved());
    }
  }

  TEST_CASE("medians via the second polynomial form") {
    auto v = run(sample("medians_ratios.cni"));
    REQUIRE(v.first);
    auto t = v.system->vars;
    REQUIRE(v.first->generators.size() == 1);
    CHECK(associates(v.first->generators[0], poly("-3*r*r1+3*r*r2+3*r1*r2+r+r1-4*r2", t)));
    REQUIRE(v.second);
    CHECK(v.second->result == DenominatorResult::SecondLinearPolynomialForm);
    CHECK(v.proved());
    CHECK(run(sample("medians.cni")).proved());
  }

  TEST_CASE("Varignon: polynomial form, no second elimination") {
    for (auto mode : {FixMode::ZeroOne, FixMode::MinusOneOne, FixMode::Off}) {
      auto v = run(sample("varignon.cni"), mode);
      REQUIRE(v.pivot);
      CHECK(associates(*v.pivot, poly("-r-1", v.system->vars)));
      REQUIRE(v.linear);
      CHECK(v.linear->v.is_constant());
      CHECK_FALSE(v.second);
      CHECK(v.proved());
    }
  }

  TEST_CASE("angle bisectors: the divisor cannot vanish") {
    auto v = run(sample("angle_bisectors.cni"));
    auto t = v.system->vars;
    REQUIRE(v.pivot);
    CHECK(*v.pivot == poly("r1*r2*r-r1*r2-r1*r-r2*r", t));
    REQUIRE(v.denominator);
    CHECK(associates(*v.denominator, poly("r1*r2-r1-r2", t)));
    REQUIRE(v.second);
    CHECK(v.second->result == DenominatorResult::Contradiction);
    CHECK(trace_has(v, "Expressing the thesis requires a division by r1*r2-r1-r2."));
    CHECK(v.proved());
  }

  TEST_CASE("fixing coordinates keeps the verdict on the worked examples") {
    for (const auto& name : worked_examples()) {
      if (name == "angle_bisectors.cni") continue;  // covered separately below
      CAPTURE(name);
      auto on = run(sample(name), FixMode::ZeroOne);
      auto sym = run(sample(name), FixMode::MinusOneOne);
      auto off = run(sample(name), FixMode::Off);
      CHECK(on.proved());
      CHECK(on.outcome == off.outcome);
      CHECK(on.reason == off.reason);
      CHECK(on.outcome == sym.outcome);
    }
  }

  // Unfixed, the bisector system has a component with A = B on which
  // r1 = r2 = 0 and the divisor vanishes; the second ideal is then
  // <r1+r2, r2^2> and the verdict e2nru. Kept visible as a known failure.
  TEST_CASE("fixing coordinates keeps the verdict on the angle bisectors" * doctest::should_fail()) {
    auto on = run(sample("angle_bisectors.cni"), FixMode::ZeroOne);
    auto off = run(sample("angle_bisectors.cni"), FixMode::Off);
    CHECK(on.outcome == off.outcome);
  }

  TEST_CASE("the unfixed bisector system differs only on the A = B component") {
    auto c = sample("angle_bisectors.cni");
    auto off = run(c, FixMode::Off);
    CHECK(off.reason == "e2nru");
    REQUIRE(off.second);
    auto t = off.system->vars;
    CHECK(strings(off.second->ideal.generators, off.second->ideal.order) ==
          std::vector<std::string>{"r1+r2", "r2^2"});
    auto in = off.system->elimination_input();
    in.polys.push_back(poly("r1*r2-r1-r2", t));
    in.saturate_by.push_back(poly("A-B", t));
    CHECK(ideal_is_trivial(eliminate_saturated(in.polys, in.saturate_by, in.eliminate_vars)));
  }

  TEST_CASE("every worked example is proved with the default settings") {
    for (const auto& name : worked_examples()) {
      CAPTURE(name);
      auto v = run(sample(name));
      CHECK(v.proved());
      CHECK(v.reason.empty());
      REQUIRE_FALSE(v.trace.empty());
      CHECK(v.trace.back().kind == TraceKind::Reality);
    }
  }

  TEST_CASE("the second elimination runs only for a non-constant divisor") {
    for (const auto& name : worked_examples()) {
      CAPTURE(name);
      auto v = run(sample(name));
      REQUIRE(v.linear);
      CHECK(v.second.has_value() == !v.linear->v.is_constant());
    }
  }

  TEST_CASE("repeated runs give identical traces") {
    for (const auto& name : worked_examples()) {
      auto a = run(sample(name));
      auto b = run(sample(name));
      REQUIRE(a.trace.size() == b.trace.size());
      for (std::size_t i = 0; i < a.trace.size(); ++i) CHECK(a.trace[i].text == b.trace[i].text);
    }
  }

  TEST_CASE("the rational form gives a real thesis on concrete configurations") {
    Rng rng(141);
    for (int i = 0; i < 15; ++i) {
      for (auto& inst : proved_instances(rng)) {
        CAPTURE(inst.name);
        auto v = run(sample(inst.name));
        REQUIRE(v.linear);
        const auto& sys = *v.system;
        std::vector<Gauss> at(sys.vars->size());
        for (std::size_t p = 0; p < inst.points.size(); ++p) at[p] = inst.points[p];
        for (const auto& s : sys.slacks) at[s.var] = eval(s.original, at);
        Gauss r = at[sys.thesis_var];
        for (const auto& s : sys.slacks)
          if (!s.thesis) CHECK(at[s.var].im == 0);
        CHECK(r.im == 0);
        Gauss vv = eval(v.linear->v, at);
        if (!vv.zero()) CHECK(Gauss{0, 0} - eval(v.linear->w, at) / vv == r);
      }
    }
  }

  TEST_CASE("select_pivot prefers the lowest degree in r") {
    VarTable tab;
    tab.add("r1", VarKind::RealSlack);
    tab.add("r", VarKind::RealSlack);
    auto t = std::make_shared<const VarTable>(tab);
    EliminationResult I;
    I.generators = {poly("r^2+r1", t), poly("r*r1+1", t)};
    I.order = MonomialOrder::grevlex(2);
    I.kept = {0, 1};
    CHECK(select_pivot(I, 1) == poly("r*r1+1", t));
    I.generators = {poly("r1", t)};
    CHECK_THROWS_AS(select_pivot(I, 1), Error);
    I.generators = {poly("r*r1+1", t)};
    CHECK(select_pivot(I, 1) == poly("r*r1+1", t));
  }

  TEST_CASE("express_linear splits off r") {
    VarTable tab;
    for (const char* n : {"r1", "r2", "r3", "r"}) tab.add(n, VarKind::RealSlack);
    auto t = std::make_shared<const VarTable>(tab);
    auto ord = MonomialOrder::grevlex(4);
    auto a = express_linear(poly("r1*r2*r3*r+1", t), 3);
    CHECK(a.v == poly("r1*r2*r3", t));
    CHECK(a.w == poly("1", t));
    auto b = express_linear(poly("r1*r-r1-4*r", t), 3);
    CHECK(b.v == poly("r1-4", t));
    CHECK(b.w == poly("-r1", t));
    CHECK(rational_form(b, ord) == "r1/(r1-4)");
    auto c = express_linear(poly("-r-1", t), 3);
    CHECK(c.v == poly("-1", t));
    CHECK(rational_form(c, ord) == "-1");
    CHECK_THROWS_AS(express_linear(poly("r^2-r1", t), 3), Error);
    CHECK_THROWS_AS(express_linear(poly("r1", t), 3), Error);
  }
}

TEST_SUITE("reason codes") {
  TEST_CASE("e0u: the thesis point is unconstrained") {
    Construction c;
    auto A = c.add_free_point("A"), B = c.add_free_point("B"), C = c.add_free_point("C");
    c.prove(collinear(A, B, C));
    auto v = run(c);
    CHECK(v.reason == "e0u");
    CHECK_FALSE(v.proved());
  }

  TEST_CASE("nlu: only a square of the thesis is known") {
    Construction c;
    auto A = c.add_free_point("A"), B = c.add_free_point("B"), C = c.add_free_point("C");
    c.assume(perpendicular(A, C, A, B));
    c.prove(parallel(A, C, A, B));
    auto v = run(c);
    CHECK(v.reason == "nlu");
    REQUIRE(v.pivot);
    CHECK(v.pivot->degree_in(v.system->thesis_var) == 2);
  }

  TEST_CASE("e2nru: the divisor frees the thesis") {
    auto v = run(raw({"C", "D"}, {"C*D", "D"}, "C"), FixMode::Off);
    CHECK(v.reason == "e2nru");
    REQUIRE(v.second);
    CHECK(v.second->result == DenominatorResult::NoR);
  }

  TEST_CASE("d3u: the second pivot has a non-constant divisor again") {
    auto v = run(raw({"C", "D", "E"}, {"C*D", "D", "C*E", "E"}, "C"), FixMode::Off);
    CHECK(v.reason == "d3u");
    REQUIRE(v.second);
    REQUIRE(v.second->form);
    CHECK_FALSE(v.second->form->v.is_constant());
  }

  TEST_CASE("t/o: the budget runs out") {
    ResourceBudget b;
    b.max_steps = 10;
    auto v = run(converse_thales(), FixMode::Off, b);
    CHECK(v.reason == "t/o");
    CHECK(v.system);
  }

  TEST_CASE("niu, nfiu and rn0u come from unsupported input") {
    for (const char* code : {"niu", "nfiu", "rn0u"}) {
      auto v = inconclusive(code, "detail");
      CHECK(v.reason == code);
      CHECK_FALSE(reason_meaning(code).empty());
    }
    CHECK_THROWS_AS(parse_program("point A, B\nprove tangent(A, B)\n"), UnsupportedStep);
  }

  TEST_CASE("every code has a meaning") {
    for (const char* code : {"t/o", "nlu", "d3u", "e0u", "e2nru", "niu", "nfiu", "rn0u"})
      CHECK_FALSE(reason_meaning(code).empty());
  }
}
