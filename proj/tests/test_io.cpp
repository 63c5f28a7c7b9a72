#include <catch_amalgamated.hpp>

#include <string>

#include "diring/io.hpp"
#include "diring/report.hpp"
#include "fixtures.hpp"

using namespace diring;
using namespace fixtures;

namespace {

  std::string data(std::string const& name) {
    return std::string(DIRING_DATA_DIR) + "/" + name;
  }

  void require_parse_error(std::string const& file, std::size_t line, std::size_t col) {
    INFO(file);
    try {
      (void) load_file(data(file));
      FAIL("no parse error");
    } catch (ParseError const& e) {
      CHECK(e.line() == line);
      CHECK(e.column() == col);
    }
  }

  std::vector<std::string> labels(Json const& arr) {
    return arr.get<std::vector<std::string>>();
  }

}  // namespace

TEST_CASE("the H fixture file matches the raw tables") {
  DiringTable const h = load_diring(data("H.diring"));
  CHECK(h == make_h());
}

TEST_CASE("serialize and parse round-trip") {
  DiringTable const h    = make_h();
  std::string const text = serialize(h, "H");
  auto const        back = load_structures(text);
  REQUIRE(back.size() == 1);
  REQUIRE(back[0].ok());
  CHECK(back[0].diring->value() == h);
  CHECK(serialize(back[0].diring->value(), "H") == text);
}

TEST_CASE("modules round-trip through files") {
  auto const loaded = load_file(data("H_regular.module"));
  REQUIRE(loaded.size() == 2);
  REQUIRE(loaded[0].ok());
  REQUIRE(loaded[1].ok());
  LeftModuleTable const& m = loaded[1].module->value();
  CHECK(m.ring() == make_h());
  CHECK(m.lact_table() == regular_module(h_ref()).lact_table());
  CHECK(m.ract_table() == regular_module(h_ref()).ract_table());
  std::string const text = serialize(m.ring(), "H") + "\n" + serialize(m, "HH", "H");
  auto const        again = load_structures(text);
  REQUIRE(again.size() == 2);
  REQUIRE(again[1].ok());
  CHECK(again[1].module->value().lact_table() == m.lact_table());
}

TEST_CASE("census representatives round-trip") {
  for (auto const& rec : census_up_to(4)) {
    auto const back = load_structures(serialize(rec.structure, "R"));
    REQUIRE(back.size() == 1);
    REQUIRE(back[0].ok());
    CHECK(back[0].diring->value() == rec.structure);
  }
}

TEST_CASE("parse errors carry line and column") {
  require_parse_error("invalid/missing_end.diring", 10, 1);
  require_parse_error("invalid/undeclared_label.diring", 13, 5);
  require_parse_error("invalid/unknown_block.diring", 11, 1);
  require_parse_error("invalid/wrong_arity.diring", 7, 1);
  CHECK_THROWS_AS(load_structures("module M over Nowhere\nelements 0\n"), ParseError);
  CHECK_THROWS_AS(load_structures("ring R\n"), ParseError);
}

TEST_CASE("axiom failures are reported, not thrown") {
  SECTION("not a group") {
    auto const l = load_file(data("invalid/not_a_group.diring"));
    REQUIRE(l.size() == 1);
    CHECK_FALSE(l[0].ok());
    CHECK(l[0].report().has("inverse"));
  }
  SECTION("no bar-unit") {
    auto const l = load_file(data("invalid/no_bar_unit.diring"));
    CHECK_FALSE(l[0].ok());
    CHECK(l[0].report().has("bar-unit"));
  }
  SECTION("not distributive") {
    auto const l = load_file(data("invalid/not_distributive.diring"));
    CHECK_FALSE(l[0].ok());
    CHECK(l[0].report().has("left-distributive/lprod"));
  }
}

TEST_CASE("label helpers") {
  DiringTable const h = make_h();
  CHECK(labels_of(h, mask({k0, kC})) == std::vector<std::string>{"0", "c"});
  CHECK(mask_from_labels(h, {"c", "0"}) == mask({k0, kC}));
  CHECK_THROWS_AS(mask_from_labels(h, {"d"}), Error);
}

TEST_CASE("analysis report for H") {
  DiringTable const h = make_h();
  Json const        j = analysis_json(h, "H");
  CHECK(j["schema_version"] == kReportSchemaVersion);
  CHECK(j["is_left_diring"] == true);
  CHECK(j["is_diring"] == false);
  CHECK(labels(j["halos"]["left"]) == std::vector<std::string>{"a", "b"});
  CHECK(j["halos"]["right"].empty());
  CHECK(labels(j["halos"]["additive"]) == std::vector<std::string>{"0", "c"});
  CHECK(j["ideals"].size() == 3);
  CHECK(j["left_ideals"].size() == 4);
  CHECK(j["simplicity"] == "3-simple");
  CHECK(j["three_maximal_left_ideals"].empty());
  CHECK(labels(j["rad3"]["rad3_via_annihilators"]) == std::vector<std::string>{"0", "a", "b", "c"});
  CHECK(j["rad3"]["agrees"] == true);
  CHECK(j["rad3"]["family_empty"] == true);
  CHECK(j["suite_violations"] == 0);
  CHECK(analysis_json(h, "H").dump() == j.dump());
  std::string const text = analysis_text(j);
  CHECK(text.find("left halo: {a,b}") != std::string::npos);
  CHECK(text.find("right halo: {}") != std::string::npos);
}
