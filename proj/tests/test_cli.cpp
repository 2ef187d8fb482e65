#include <doctest.h>

#include "tenring/report.hpp"

using namespace tenring;

namespace {
const FieldSpec F7{7};
}

TEST_CASE("presets round-trip through render and parse") {
    for (const DefinitionFile& d :
         {preset_nakayama(3, 2, 1, 3, F7), preset_triangular(F7),
          preset_morita_zero(F7)}) {
        DefinitionFile back = parse_definition(render_definition(d));
        CHECK(back == d);
    }
}

TEST_CASE("nakayama preset carries the expected dimensions") {
    DefinitionFile d = preset_nakayama(3, 2, 1, 3, F7);
    CHECK(d.doc["algebra"]["dim"] == 6);
    CHECK(d.doc["bimodule"]["dim"] == 4);
    CHECK(d.doc["warnings"].empty());
    WorkbenchConfig cfg;
    BuiltDefinition b = build_definition(d, cfg);
    REQUIRE(b.context.has_value());
    CHECK(b.context->grading == std::vector<std::size_t>{6, 4});
    CHECK(b.modules.count("R") == 1);
    CHECK(b.modules.count("S3") == 1);
    CHECK(b.pairs.count("ind_R") == 1);
}

TEST_CASE("too-close vertices produce a warning and a refusing build") {
    DefinitionFile d = preset_nakayama(3, 2, 1, 2, F7);
    CHECK_FALSE(d.doc["warnings"].empty());
    WorkbenchConfig cfg;
    BuiltDefinition b = build_definition(d, cfg);
    CHECK(b.nilpotency_warning);
    CHECK_FALSE(b.context.has_value());
    TaskResult t = run_task(b, "condition-t", cfg);
    CHECK(t.exit_code == 2);
    CHECK(t.verdict == "error");
}

TEST_CASE("schema violations carry field diagnostics") {
    CHECK_THROWS_WITH_AS(parse_definition("{"),
                         doctest::Contains("invalid document"), Error);
    CHECK_THROWS_WITH_AS(parse_definition("{\"schema_version\": 9}"),
                         doctest::Contains("unsupported schema_version"), Error);
    CHECK_THROWS_WITH_AS(parse_definition("{\"schema_version\": 1}"),
                         doctest::Contains("field.p"), Error);
    DefinitionFile d = preset_triangular(F7);
    d.doc["algebra"]["unit"] = nlohmann::json::array({1});
    WorkbenchConfig cfg;
    CHECK_THROWS_WITH_AS(build_definition(d, cfg),
                         doctest::Contains("unit has wrong length"), Error);
}

TEST_CASE("matrix serialization is exact both ways") {
    Rng rng(5);
    ExactMatrix m = rng.matrix(3, 5, F7);
    CHECK(matrix_from_json(matrix_to_json(m), F7) == m);
    FinDimAlgebra a = scalar_algebra(F7);
    CHECK(algebra_from_json(algebra_to_json(a), F7) == a);
}

TEST_CASE("exit-code contract per task") {
    WorkbenchConfig cfg;
    cfg.samples = 6;
    BuiltDefinition nak = build_definition(preset_nakayama(3, 2, 1, 3, F7), cfg);
    BuiltDefinition tri = build_definition(preset_triangular(F7), cfg);
    BuiltDefinition mz = build_definition(preset_morita_zero(F7), cfg);

    CHECK(run_task(nak, "condition-t", cfg).exit_code == 0);
    CHECK(run_task(nak, "verify theorem-a", cfg).exit_code == 0);
    CHECK(run_task(nak, "verify theorem-b", cfg).exit_code == 0);
    CHECK(run_task(nak, "verify lemma-1.6", cfg).exit_code == 0);
    CHECK(run_task(nak, "verify cor-1.7", cfg).exit_code == 0);
    CHECK(run_task(nak, "phi ind_R", cfg).exit_code == 0);
    CHECK(run_task(nak, "phi stalk_R", cfg).exit_code == 1);
    CHECK(run_task(nak, "pgf S1", cfg).exit_code == 0);  // self-injective base
    TaskResult s1 = run_task(tri, "pgf S1", cfg);
    CHECK(s1.exit_code == 1);
    CHECK(s1.witness.find("Ext^1") != std::string::npos);
    CHECK(run_task(tri, "gp P1", cfg).exit_code == 0);
    CHECK(run_task(mz, "verify section-4", cfg).exit_code == 0);
    CHECK(run_task(tri, "condition-t", cfg).exit_code == 2);  // no bimodule
    CHECK(run_task(nak, "pgf NoSuchModule", cfg).exit_code == 2);
    CHECK(run_task(nak, "frobnicate", cfg).exit_code == 2);
}

TEST_CASE("structured reports are deterministic for a fixed seed") {
    WorkbenchConfig cfg;
    cfg.samples = 5;
    cfg.seed = 99;
    auto make = [&] {
        BuiltDefinition nak =
            build_definition(preset_nakayama(3, 2, 1, 3, F7), cfg);
        Report rep;
        rep.config = cfg;
        rep.tasks.push_back(run_task(nak, "condition-t", cfg));
        rep.tasks.push_back(run_task(nak, "verify theorem-a", cfg));
        return rep.to_json().dump(2);
    };
    std::string first = make();
    CHECK(first == make());
    CHECK(first.find("millis") == std::string::npos);
}

TEST_CASE("rendering is golden-stable") {
    CHECK(render_report(nlohmann::json{{"schema_version", 1},
                                       {"tasks", nlohmann::json::array()},
                                       {"exit_code", 0}}) ==
          "tensor ring workbench report (schema 1)\nno tasks\n"
          "note: class verdicts are relative to the configured window; "
          "tensor-exactness is probed against indecomposable injectives only\n"
          "exit: 0\n");

    WorkbenchConfig cfg;
    cfg.samples = 4;
    BuiltDefinition nak = build_definition(preset_nakayama(3, 2, 1, 3, F7), cfg);
    Report rep;
    rep.config = cfg;
    rep.tasks.push_back(run_task(nak, "condition-t", cfg));
    std::string text = render_report(rep.to_json());
    CHECK(text ==
          "tensor ring workbench report (schema 1)\n"
          "config: degree_bound=6 format=\"text\" nil_bound=16 p=7 "
          "resolution_depth=20 samples=4 seed=42 window=8\n"
          "[condition-t] pass (exit 0)\n"
          "  data: {\"degree_bound\":6,\"layers\":1,\"projectives\":3}\n"
          "note: class verdicts are relative to the configured window; "
          "tensor-exactness is probed against indecomposable injectives only\n"
          "exit: 0\n");
}

TEST_CASE("preset parameter validation") {
    CHECK_THROWS_AS(preset_nakayama(0, 2, 1, 1, F7), Error);
    CHECK_THROWS_AS(preset_nakayama(3, 2, 0, 1, F7), Error);
    CHECK_THROWS_AS(preset_nakayama(3, 2, 1, 4, F7), Error);
    WorkbenchConfig bad;
    bad.window = 0;
    CHECK_THROWS_AS(bad.validate(), Error);
    bad = WorkbenchConfig{};
    bad.format = "xml";
    CHECK_THROWS_AS(bad.validate(), Error);
}
