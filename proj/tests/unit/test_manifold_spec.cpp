#include <gtest/gtest.h>

#include <fstream>

#include "spinflow/catalog.hpp"
#include "spinflow/errors.hpp"
#include "spinflow/manifold_spec.hpp"

using namespace spinflow;
using nlohmann::json;

namespace {

SpecError::Kind kind_of(const std::string& text) {
  try {
    load_spec(text);
  } catch (const SpecError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no SpecError for: " << text;
  return SpecError::Kind::Parse;
}

json minimal_doc() {
  return json::parse(R"({"name": "h", "dim": 3,
    "structure_constants": [{"i": 1, "j": 2, "k": 3, "value": 2.0}],
    "spinor": {"components": [[1, 0], [0, 0]]}})");
}

}  // namespace

TEST(ManifoldSpec, CatalogHeisenbergLoads) {
  const auto s = catalog_spec("nil3", 1.0);
  EXPECT_EQ(s.name, "nil3");
  EXPECT_EQ(s.dim, 3);
  ASSERT_TRUE(s.frame.has_value());
  EXPECT_EQ(s.frame->c(0, 1, 2), 2.0);
  ASSERT_TRUE(s.flow_index.has_value());
  EXPECT_EQ(*s.flow_index, 2);
  EXPECT_TRUE(s.spinor.spin_connection);
  for (const auto& g : kCheckGroups) EXPECT_TRUE(s.selects(g));
}

TEST(ManifoldSpec, TauScalesHeisenbergBracket) {
  EXPECT_EQ(catalog_spec("nil3", 0.5).frame->c(0, 1, 2), 1.0);
  EXPECT_THROW(catalog_template("nil3", 0.0), InvalidArgument);
  EXPECT_THROW(catalog_template("nope"), InvalidArgument);
}

TEST(ManifoldSpec, ProductSpecIsPrescriptionMode) {
  const auto s = catalog_spec("s1xs2");
  EXPECT_FALSE(s.spinor.spin_connection);
  EXPECT_EQ(s.spinor.prescriptions.size(), 3u);
  ASSERT_TRUE(s.overrides.scal.has_value());
  EXPECT_EQ(*s.overrides.scal, 2.0);
  ASSERT_TRUE(s.overrides.ric.has_value());
  EXPECT_EQ((*s.overrides.ric)(1, 1), 1.0);
  EXPECT_EQ((*s.overrides.ric)(0, 0), 0.0);
  EXPECT_FALSE(s.frame.has_value());
}

TEST(ManifoldSpec, EveryCatalogEntryLoads) {
  for (const auto& name : catalog_names()) {
    EXPECT_NO_THROW(catalog_spec(name)) << name;
    EXPECT_FALSE(catalog_description(name).empty());
  }
}

TEST(ManifoldSpec, RoundTripThroughText) {
  const auto doc = catalog_template("su2");
  const auto s = load_spec(doc.dump());
  EXPECT_EQ(s.name, "su2");
  EXPECT_EQ(s.expected, doc["expected"]);
}

TEST(ManifoldSpec, MissingGeometryIsASchemaError) {
  auto doc = minimal_doc();
  doc.erase("structure_constants");
  EXPECT_EQ(kind_of(doc.dump()), SpecError::Kind::Schema);
}

TEST(ManifoldSpec, ParseErrors) {
  EXPECT_EQ(kind_of("{\"name\": "), SpecError::Kind::Parse);
  EXPECT_EQ(kind_of("not json"), SpecError::Kind::Parse);
  try {
    load_spec_file("/nonexistent/spec.json");
    FAIL();
  } catch (const SpecError& e) {
    EXPECT_EQ(e.kind(), SpecError::Kind::Parse);
  }
}

TEST(ManifoldSpec, SchemaErrors) {
  auto unknown = minimal_doc();
  unknown["colour"] = "blue";
  EXPECT_EQ(kind_of(unknown.dump()), SpecError::Kind::Schema);

  auto wrong_type = minimal_doc();
  wrong_type["dim"] = "three";
  EXPECT_EQ(kind_of(wrong_type.dump()), SpecError::Kind::Schema);

  auto reversed = minimal_doc();
  reversed["structure_constants"][0]["i"] = 2;
  reversed["structure_constants"][0]["j"] = 1;
  EXPECT_EQ(kind_of(reversed.dump()), SpecError::Kind::Schema);

  auto bad_expect = minimal_doc();
  bad_expect["expected"] = {{"colour", 1.0}};
  EXPECT_EQ(kind_of(bad_expect.dump()), SpecError::Kind::Schema);

  auto bad_group = minimal_doc();
  bad_group["checks"] = {"geometry", "astrology"};
  EXPECT_EQ(kind_of(bad_group.dump()), SpecError::Kind::Schema);
}

TEST(ManifoldSpec, SemanticErrors) {
  auto range = minimal_doc();
  range["structure_constants"][0]["k"] = 4;
  EXPECT_EQ(kind_of(range.dump()), SpecError::Kind::Semantic);

  auto jacobi = minimal_doc();
  jacobi["structure_constants"] = json::parse(
      R"([{"i": 1, "j": 2, "k": 3, "value": 1}, {"i": 1, "j": 3, "k": 1, "value": 1}])");
  EXPECT_EQ(kind_of(jacobi.dump()), SpecError::Kind::Semantic);

  auto zero = minimal_doc();
  zero["spinor"]["components"] = json::parse("[[0, 0], [0, 0]]");
  EXPECT_EQ(kind_of(zero.dump()), SpecError::Kind::Semantic);

  auto dim = minimal_doc();
  dim["dim"] = 0;
  EXPECT_EQ(kind_of(dim.dump()), SpecError::Kind::Semantic);

  auto no_frame = catalog_template("s1xs2");
  no_frame["spinor"].erase("derivatives");
  EXPECT_EQ(kind_of(no_frame.dump()), SpecError::Kind::Semantic);
}

TEST(ManifoldSpec, ComplexStructureNeedsEvenDimension) {
  auto doc = json::parse(R"({"name": "plane", "dim": 2, "structure_constants": [],
    "spinor": {"components": [[1, 0], [0, 0]]},
    "complex_structure": [[0, -1], [1, 0]]})");
  const auto s = load_spec(doc.dump());
  ASSERT_TRUE(s.complex_structure.has_value());
  doc["complex_structure"] = json::parse("[[1, 0], [0, 1]]");
  EXPECT_EQ(kind_of(doc.dump()), SpecError::Kind::Semantic);
}

TEST(ManifoldSpec, CheckSelection) {
  auto doc = minimal_doc();
  doc["checks"] = {"geometry"};
  const auto s = load_spec(doc.dump());
  EXPECT_TRUE(s.selects("geometry"));
  EXPECT_FALSE(s.selects("spinor"));
}

TEST(ManifoldSpec, ExpectationGroups) {
  EXPECT_EQ(expectation_group("scal"), "geometry");
  EXPECT_EQ(expectation_group("lambda_sq"), "spinor");
  EXPECT_EQ(expectation_group("T_norm_sq"), "emt");
  EXPECT_EQ(expectation_group("main_rhs"), "bounds");
  EXPECT_EQ(expectation_group("kernel_dim"), "flow");
  EXPECT_EQ(expectation_group("beta"), "sasaki");
  EXPECT_EQ(expectation_group("colour"), "");
}

TEST(ManifoldSpec, LoadsFromFile) {
  const std::string path = ::testing::TempDir() + "spinflow_spec_test.json";
  {
    std::ofstream out(path);
    out << catalog_template("t3").dump();
  }
  EXPECT_EQ(load_spec_file(path).name, "t3");
}
