#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "infscale/config.hpp"

using namespace infscale;

TEST_CASE("default grid is 4..128 step 4") {
  const auto grid = default_k_grid();
  REQUIRE(grid.size() == 32);
  CHECK(grid.front() == 4);
  CHECK(grid.back() == 128);
  for (size_t i = 1; i < grid.size(); ++i) CHECK(grid[i] - grid[i - 1] == 4);
}

TEST_CASE("make_k_grid respects bounds and rejects bad steps") {
  CHECK(make_k_grid(12, 4) == std::vector<int>{4, 8, 12});
  CHECK(make_k_grid(13, 4) == std::vector<int>{4, 8, 12});
  CHECK(make_k_grid(1, 1) == std::vector<int>{1});
  CHECK_THROWS_AS(make_k_grid(10, 0), ValidationError);
  CHECK_THROWS_AS(make_k_grid(2, 4), ValidationError);
}

TEST_CASE("all built-in presets validate and carry expected anchors") {
  REQUIRE(model_presets().size() == 9);
  REQUIRE(scenario_presets().size() == 3);
  for (const auto& m : model_presets()) CHECK_NOTHROW(validate(m));
  for (const auto& s : scenario_presets()) CHECK_NOTHROW(validate(s));

  const auto gpt5 = model_preset("gpt-5");
  REQUIRE(gpt5.has_value());
  CHECK(gpt5->c_in == 1.25e-6);
  CHECK(gpt5->c_out == 10.0e-6);
  CHECK(gpt5->t_in == 0.0005);
  CHECK(gpt5->t_out == 0.005);
  CHECK(gpt5->mu_acc == 0.94);
  CHECK(gpt5->sigma_acc == 0.02);
  CHECK(gpt5->p_default == 4);
  CHECK(gpt5->mu_len_in == 1024.0);
  CHECK(gpt5->sigma_len_in == 64.0);
  CHECK(gpt5->mu_len_out == 2048.0);
  CHECK(gpt5->sigma_len_out == 128.0);

  const auto nano = model_preset("nemotron-nano-9b-v2");
  REQUIRE(nano.has_value());
  CHECK(nano->sigma_acc == 0.07);

  const auto s1 = scenario_preset("essay-feedback");
  REQUIRE(s1.has_value());
  CHECK(s1->c_max == 0.50);
  CHECK(s1->t_max == 60.0);
  CHECK(s1->a_min == 0.93);

  const auto s2 = scenario_preset("medical-ai");
  REQUIRE(s2.has_value());
  CHECK(s2->c_max == 0.95);
  CHECK(s2->t_max == 3600.0);
  CHECK(s2->a_min == 0.98);

  const auto s3 = scenario_preset("proposal-writing");
  REQUIRE(s3.has_value());
  CHECK(s3->c_max == 0.65);
  CHECK(s3->t_max == 1800.0);
  CHECK(s3->a_min == 0.96);

  CHECK(!model_preset("gpt-6").has_value());
}

TEST_CASE("model validation names the violated constraint") {
  ModelConfig m = *model_preset("gpt-5");
  m.c_in = -1.0;
  CHECK_THROWS_WITH_AS(validate(m), doctest::Contains("c_in"), ValidationError);
  m = *model_preset("gpt-5");
  m.mu_acc = 1.5;
  CHECK_THROWS_WITH_AS(validate(m), doctest::Contains("mu_acc"), ValidationError);
  m = *model_preset("gpt-5");
  m.mu_len_in = 0.0;
  CHECK_THROWS_WITH_AS(validate(m), doctest::Contains("mu_len_in"), ValidationError);
  m = *model_preset("gpt-5");
  m.p_default = 0;
  CHECK_THROWS_WITH_AS(validate(m), doctest::Contains("p_default"), ValidationError);
}

TEST_CASE("scenario and settings validation") {
  ScenarioConstraints s{"x", 0.5, 60.0, 1.5};
  CHECK_THROWS_WITH_AS(validate(s), doctest::Contains("a_min"), ValidationError);
  s = {"x", 0.0, 60.0, 0.5};
  CHECK_THROWS_WITH_AS(validate(s), doctest::Contains("c_max"), ValidationError);

  SimulationSettings st;
  st.k_grid = {4, 4, 8};
  CHECK_THROWS_WITH_AS(validate(st), doctest::Contains("strictly increasing"), ValidationError);
  st.k_grid = {0, 4};
  CHECK_THROWS_WITH_AS(validate(st), doctest::Contains("positive"), ValidationError);
  st.k_grid = {4, 8};
  st.trials_m = 0;
  CHECK_THROWS_WITH_AS(validate(st), doctest::Contains("trials_m"), ValidationError);
  st.trials_m = 10;
  st.ci_level = 1.0;
  CHECK_THROWS_WITH_AS(validate(st), doctest::Contains("ci_level"), ValidationError);
}

TEST_CASE("model JSON parsing: missing field, bad value, default p") {
  const char* ok = R"({"name":"m","c_in":1e-6,"c_out":2e-6,"t_in":1e-4,"t_out":2e-4,
    "mu_len_in":100,"sigma_len_in":10,"mu_len_out":200,"sigma_len_out":20,
    "mu_acc":0.9,"sigma_acc":0.05})";
  const ModelConfig m = parse_model_config(ok);
  CHECK(m.p_default == 4);
  CHECK(m.mu_acc == 0.9);

  CHECK_THROWS_WITH_AS(parse_model_config(R"({"name":"m"})"),
                       doctest::Contains("c_in"), SchemaError);
  const char* neg = R"({"name":"m","c_in":-1,"c_out":2e-6,"t_in":1e-4,"t_out":2e-4,
    "mu_len_in":100,"sigma_len_in":10,"mu_len_out":200,"sigma_len_out":20,
    "mu_acc":0.9,"sigma_acc":0.05})";
  CHECK_THROWS_AS(parse_model_config(neg), ValidationError);
  CHECK_THROWS_AS(parse_model_config("not json"), SchemaError);
}

TEST_CASE("scenario JSON parsing") {
  const ScenarioConstraints s =
      parse_scenario(R"({"name":"tight","c_max":0.5,"t_max":60,"a_min":0.93})");
  CHECK(s.c_max == 0.5);
  CHECK_THROWS_AS(parse_scenario(R"({"name":"bad","c_max":0.5,"t_max":60,"a_min":1.5})"),
                  ValidationError);
  CHECK_THROWS_WITH_AS(parse_scenario(R"({"name":"bad","c_max":0.5,"t_max":60})"),
                       doctest::Contains("a_min"), SchemaError);
}

TEST_CASE("config document round-trips through serialization") {
  ConfigDocument doc;
  doc.models = {*model_preset("gpt-5"), *model_preset("qwen3-max")};
  doc.scenarios = {*scenario_preset("essay-feedback")};
  doc.settings.k_grid = {2, 4, 6};
  doc.settings.trials_m = 17;
  doc.settings.seed = 99;
  doc.settings.parallel_p = 8;
  doc.settings.ci_level = 0.9;

  const ConfigDocument back = parse_config_text(serialize_config(doc));
  REQUIRE(back.models.size() == 2);
  CHECK(back.models[0].name == "gpt-5");
  CHECK(back.models[0].c_out == 10.0e-6);
  CHECK(back.models[1].sigma_acc == 0.04);
  REQUIRE(back.scenarios.size() == 1);
  CHECK(back.scenarios[0].t_max == 60.0);
  CHECK(back.settings.k_grid == std::vector<int>{2, 4, 6});
  CHECK(back.settings.trials_m == 17);
  CHECK(back.settings.seed == 99);
  REQUIRE(back.settings.parallel_p.has_value());
  CHECK(*back.settings.parallel_p == 8);
  CHECK(back.settings.ci_level == 0.9);
}

TEST_CASE("config document defaults when sections are absent") {
  const ConfigDocument doc = parse_config_text(R"({"version":1})");
  CHECK(doc.models.empty());
  CHECK(doc.scenarios.empty());
  CHECK(doc.settings.k_grid == default_k_grid());
  CHECK(doc.settings.trials_m == 300);
  CHECK(doc.settings.seed == 42);
  CHECK(!doc.settings.parallel_p.has_value());
  CHECK(doc.settings.ci_level == 0.95);

  CHECK_THROWS_WITH_AS(parse_config_text(R"({})"), doctest::Contains("version"),
                       SchemaError);
  CHECK_THROWS_AS(parse_config_text(R"({"version":2})"), ValidationError);
}
