#include <filesystem>

#include <gtest/gtest.h>

#include <tubealg/builtins.hpp>
#include <tubealg/errors.hpp>
#include <tubealg/io.hpp>

using namespace tubealg;

TEST(Io, CanonicalJson) {
  const std::string out = canonical_json(R"({"b": 0.1, "a": [1, 2.5e-3, true, null], "c": {"z": 1, "y": "s"}})");
  EXPECT_EQ(out,
            "{\n  \"a\": [\n    1,\n    0.0025000000000000001,\n    true,\n    null\n  ],\n  \"b\": "
            "0.10000000000000001,\n  \"c\": {\n    \"y\": \"s\",\n    \"z\": 1\n  }\n}\n");
  EXPECT_EQ(canonical_json(out), out);
  EXPECT_NE(canonical_json("{\"x\": 2.0}").find("2.0"), std::string::npos);
}

TEST(Io, CategoryRoundTripIsBitExact) {
  for (const auto& id : builtin_ids()) {
    const auto b = load_builtin(id);
    if (!b.fusion) continue;
    const std::string once = category_to_json(*b.fusion);
    const FusionCategoryData back = category_from_json(once);
    EXPECT_EQ(category_to_json(back), once) << id;
    EXPECT_EQ(back.f_symbols->size(), b.fusion->f_symbols->size()) << id;
    for (const auto& [k, v] : *b.fusion->f_symbols) EXPECT_EQ(back.f_symbols->at(k), v) << id;
  }
}

TEST(Io, PresentationRoundTrip) {
  const auto p = reference_tables("rep-s3");
  const std::string once = presentation_to_json(p);
  const TubePresentation back = presentation_from_json(once);
  EXPECT_EQ(presentation_to_json(back), once);
  EXPECT_TRUE(verify_against_reference(load_builtin("rep-s3").tube, back).pass);
}

TEST(Io, ChargeRoundTrip) {
  const auto b = load_builtin("rep-s3");
  for (const auto& u : b.charges) {
    const GeneralisedCharge back = charge_from_json(b.tube, charge_to_json(b.tube, u));
    EXPECT_EQ(back.sector_dims, u.sector_dims);
    for (int i = 0; i < b.tube.dim(); ++i) {
      ASSERT_EQ(back.action[i].size(), u.action[i].size());
      if (u.action[i].size()) EXPECT_EQ(max_abs(back.action[i] - u.action[i]), 0.0);
    }
  }
}

TEST(Io, SchemaErrors) {
  auto code_of = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InvalidArgument;
  };
  EXPECT_EQ(code_of([] { category_from_json("{not json"); }), ErrorCode::SchemaError);
  EXPECT_EQ(code_of([] { category_from_json(R"({"simples": ["1"]})"); }), ErrorCode::SchemaError);
  EXPECT_EQ(code_of([] { category_from_json(R"({"simples": ["1"], "fusion": [[[1, 0]]], "duals": ["1"]})"); }),
            ErrorCode::SchemaError);
  EXPECT_EQ(code_of([] { category_from_json(R"({"simples": ["1"], "fusion": [[[1]]], "duals": ["x"]})"); }),
            ErrorCode::SchemaError);
  EXPECT_EQ(code_of([] { presentation_from_json(R"({"objects": ["1"]})"); }), ErrorCode::SchemaError);
  EXPECT_EQ(code_of([] { load_category_file("/nonexistent/file.json"); }), ErrorCode::FileNotFound);
}

TEST(Io, BundledTablesMatchBuiltins) {
  const std::filesystem::path dir = std::filesystem::path(TUBEALG_TEST_DATA) / "tables";
  for (const auto& id : builtin_ids()) {
    std::string file = id;
    std::replace(file.begin(), file.end(), ':', '_');
    const auto path = dir / (file + ".json");
    ASSERT_TRUE(std::filesystem::exists(path)) << path;
    const CategoryFile f = load_category_file(path.string());
    ASSERT_TRUE(f.presentation.has_value());
    const auto b = load_builtin(id);
    const auto rep = verify_against_reference(b.tube, *f.presentation);
    EXPECT_TRUE(rep.pass) << id << " " << rep.detail;
    EXPECT_LT(rep.residual, 1e-15) << id;
  }
}

TEST(Io, ReportJsonShape) {
  const auto b = load_builtin("rep-s3");
  ProbabilityReport r;
  r.category = "rep-s3";
  r.defect = "pi";
  r.source = 0;
  r.charge = "U_1psi";
  r.channels = {{0, 0, 0.25}, {1, 0, 0.75}};
  r.marginals = {{0, 0.25}, {1, 0.75}};
  r.total = 1.0;
  const std::string j = report_to_json(b.tube, r);
  EXPECT_NE(j.find("\"marginals\": {\n    \"1\": 0.25,\n    \"psi\": 0.75\n  }"), std::string::npos) << j;
  EXPECT_NE(j.find("\"total\": 1.0"), std::string::npos);
}
