#include <doctest.h>

#include "hetcat/fincat.hpp"
#include "test_helpers.hpp"

using namespace hetcat;
using testutil::chain3_spec;
using testutil::mentions;
using testutil::report_mentions;
using testutil::thrown_message;

TEST_SUITE("fincat") {

TEST_CASE("chain poset validates with one morphism per order pair") {
  Result<FinCategory> r = make_category(chain3_spec());
  REQUIRE(r.ok());
  CHECK(r.value().morphism_count() == 6);
  CHECK(r.value().object_count() == 3);
  CHECK(r.value() == poset_chain("C3", 2));
}

TEST_CASE("missing identity is reported with the object as witness") {
  CategorySpec spec = chain3_spec();
  spec.identities.erase("1");
  Result<FinCategory> r = make_category(spec);
  REQUIRE_FALSE(r.ok());
  bool found = false;
  for (const auto& v : r.report().violations) {
    if (v.law == "missing-identity" && v.witness == std::vector<std::string>{"1"}) found = true;
  }
  CHECK(found);
}

TEST_CASE("seeded wrong composite is reported as a cod mismatch") {
  CategorySpec spec = chain3_spec();
  spec.compose[{"le_1_2", "le_0_1"}] = "le_0_1";
  Result<FinCategory> r = make_category(spec);
  REQUIRE_FALSE(r.ok());
  CHECK(report_mentions(r.report(), "cod-mismatch"));
}

TEST_CASE("every single table rewrite is detected") {
  const CategorySpec base = chain3_spec();
  REQUIRE(make_category(base).ok());
  for (const auto& [key, value] : base.compose) {
    for (const auto& m : base.morphisms) {
      if (m.name == value) continue;
      CategorySpec mutated = base;
      mutated.compose[key] = m.name;
      CHECK_FALSE(make_category(mutated).ok());
    }
  }
  for (const auto& [obj, id] : base.identities) {
    for (const auto& m : base.morphisms) {
      if (m.name == id) continue;
      CategorySpec mutated = base;
      mutated.identities[obj] = m.name;
      CHECK_FALSE(make_category(mutated).ok());
    }
  }
}

TEST_CASE("compose follows the table and rejects non-composable pairs") {
  FinCategory cat = std::move(make_category(chain3_spec())).value();
  CHECK(cat.compose("le_1_2", "le_0_1") == "le_0_2");
  CHECK(cat.compose("id_1", "le_0_1") == "le_0_1");
  CHECK(cat.compose("le_0_1", "id_0") == "le_0_1");
  std::string msg = thrown_message<DomainError>([&] { cat.compose("le_0_1", "le_1_2"); });
  CHECK(mentions(msg, "cod(le_1_2)=2"));
  CHECK(mentions(msg, "dom(le_0_1)=0"));
}

TEST_CASE("opposite swaps boundaries, transposes the table and involutes") {
  FinCategory cat = poset_chain("C3", 2);
  FinCategory op = opposite(cat);
  const auto& le01 = op.morphism(op.require_morphism("le_0_1"));
  CHECK(op.object_name(le01.dom) == "1");
  CHECK(op.object_name(le01.cod) == "0");
  CHECK(op.compose("le_0_1", "le_1_2") == "le_0_2");
  CHECK(op.hom_set("2", "0") == cat.hom_set("0", "2"));
  CHECK(opposite(op) == cat);
}

TEST_CASE("product is componentwise") {
  FinCategory c2 = poset_chain("C2", 1);
  FinCategory prod = product(c2, c2);
  CHECK(prod.object_count() == 4);
  CHECK(prod.morphism_count() == 9);  // 3 x 3 morphism pairs
  CHECK(prod.identity_name(prod.require_object("(0,1)")) == "(id_0,id_1)");
  CHECK(prod.compose("(le_0_1,id_1)", "(id_0,le_0_1)") == "(le_0_1,le_0_1)");

  FinCategory c3 = poset_chain("C3", 2);
  CHECK(product(c2, c3).morphism_count() == c2.morphism_count() * c3.morphism_count());
}

TEST_CASE("hom sets come back in declaration order") {
  FinCategory cat = poset_chain("C3", 2);
  CHECK(cat.hom_set("0", "2") == std::vector<std::string>{"le_0_2"});
  CHECK(cat.hom_set("2", "0").empty());
  CHECK(cat.hom_set("0", "0") == std::vector<std::string>{"id_0"});
  FinCategory p2 = poset_powerset("P2", 2);
  CHECK(p2.hom_set("a", "ab") == std::vector<std::string>{"le_a_ab"});
  CHECK(thrown_message<DomainError>([&] { cat.hom_set("9", "0"); }) != "");
}

TEST_CASE("poset encodings have hom sets of size at most one") {
  for (const FinCategory& cat : {poset_chain("C", 5), poset_powerset("P", 3)}) {
    for (int x = 0; x < cat.object_count(); ++x) {
      for (int a = 0; a < cat.object_count(); ++a) {
        CHECK(cat.hom_ixs(x, a).size() <= 1);
      }
    }
  }
}

TEST_CASE("structural equality ignores the display name") {
  CHECK(poset_chain("first", 2) == poset_chain("second", 2));
  CHECK_FALSE(poset_chain("C", 2) == poset_chain("C", 3));
}

}  // TEST_SUITE
