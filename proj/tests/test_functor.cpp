#include <doctest.h>

#include "hetcat/functor.hpp"
#include "hetcat/gallery.hpp"
#include "test_helpers.hpp"

using namespace hetcat;
using testutil::report_mentions;
using testutil::thrown_message;

TEST_SUITE("functor") {

TEST_CASE("the identity functor validates") {
  FinCategory c3 = poset_chain("C3", 2);
  FinFunctor id = identity_functor(c3);
  CHECK(id.obj("1") == "1");
  CHECK(id.apply("le_0_2") == "le_0_2");
}

TEST_CASE("the diagonal into the product validates, checked exhaustively") {
  Fixture fx = build_fixture("powerset-diagonal", {2});
  const FinFunctor& diag = fx.functor("diag");
  CHECK(diag.obj("ab") == "(ab,ab)");
  CHECK(diag.apply("le_a_ab") == "(le_a_ab,le_a_ab)");

  // Re-check both preservation laws by hand against the tables.
  const FinCategory& src = diag.source();
  const FinCategory& tgt = diag.target();
  for (const auto& g : src.morphisms()) {
    for (const auto& f : src.morphisms()) {
      if (f.cod != g.dom) continue;
      std::string gf = src.compose(g.name, f.name);
      CHECK(diag.apply(gf) == tgt.compose(diag.apply(g.name), diag.apply(f.name)));
    }
  }
  for (const std::string& o : src.objects()) {
    CHECK(diag.apply(src.identity_name(src.require_object(o))) ==
          tgt.identity_name(tgt.require_object(diag.obj(o))));
  }
}

TEST_CASE("a morphism map breaking cod preservation is reported") {
  FinCategory c3 = poset_chain("C3", 2);
  FunctorSpec spec = identity_functor(c3).to_spec();
  spec.mor_map["le_0_1"] = "id_0";
  Result<FinFunctor> r = make_functor(c3, c3, spec);
  REQUIRE_FALSE(r.ok());
  CHECK(report_mentions(r.report(), "cod-preservation"));
}

TEST_CASE("apply rejects morphisms from the wrong category") {
  FinCategory c3 = poset_chain("C3", 2);
  FinCategory p2 = poset_powerset("P2", 2);
  FinFunctor id = identity_functor(c3);
  CHECK(thrown_message<DomainError>([&] { id.apply("le_a_ab"); }) != "");
  (void)p2;
}

TEST_CASE("hom bifunctor has the hom sets and composition actions") {
  FinCategory c3 = poset_chain("C3", 2);
  HetBifunctor hom = hom_bifunctor(c3);
  CHECK(hom.het_set("0", "2") == c3.hom_set("0", "2"));
  CHECK(hom.act_left("le_1_2", "le_0_1") == "le_0_2");
  CHECK(hom.act_right("le_1_2", "le_0_1") == "le_0_2");
}

TEST_CASE("hets induced by the identity coincide with the hom bifunctor") {
  FinCategory c3 = poset_chain("C3", 2);
  FinFunctor id = identity_functor(c3);
  CHECK(induced_het_left(id) == hom_bifunctor(c3));
  CHECK(induced_het_right(id) == hom_bifunctor(c3));
}

TEST_CASE("hets induced by the diagonal relate subsets below both components") {
  Fixture fx = build_fixture("powerset-diagonal", {2});
  const FinFunctor& diag = fx.functor("diag");
  HetBifunctor out = induced_het_left(diag);
  const FinCategory& p2 = diag.source();

  auto mask = [&](const std::string& s) {
    unsigned m = 0;
    for (char c : s) {
      if (c >= 'a' && c <= 'c') m |= 1u << (c - 'a');
    }
    return m;
  };
  for (const std::string& x : p2.objects()) {
    for (const std::string& a1 : p2.objects()) {
      for (const std::string& a2 : p2.objects()) {
        bool below = (mask(x) & mask(a1)) == mask(x) && (mask(x) & mask(a2)) == mask(x);
        CHECK(out.het_set(x, "(" + a1 + "," + a2 + ")").empty() == !below);
      }
    }
  }
}

TEST_CASE("hets induced on the right by meet relate subsets below the intersection") {
  Fixture fx = build_fixture("powerset-diagonal", {2});
  HetBifunctor in = induced_het_right(fx.functor("meet"));
  const FinCategory& p2 = fx.functor("meet").target();

  auto mask = [&](const std::string& s) {
    unsigned m = 0;
    for (char c : s) {
      if (c >= 'a' && c <= 'c') m |= 1u << (c - 'a');
    }
    return m;
  };
  for (const std::string& x : p2.objects()) {
    for (const std::string& a1 : p2.objects()) {
      for (const std::string& a2 : p2.objects()) {
        bool below = (mask(x) & (mask(a1) & mask(a2))) == mask(x);
        CHECK(in.het_set(x, "(" + a1 + "," + a2 + ")").empty() == !below);
      }
    }
  }
}

TEST_CASE("non-injective functors qualify induced element names") {
  Fixture fx = build_fixture("powerset-diagonal", {2});
  HetBifunctor in = induced_het_right(fx.functor("meet"));
  // meet maps both (0,0) and (0,a) to 0, so plain hom names would collide.
  CHECK(in.element_index("id_0@(0,0)") >= 0);
  CHECK(in.element_index("id_0@(0,a)") >= 0);
}

TEST_CASE("missing map entries are reported as violations, not errors") {
  FinCategory c3 = poset_chain("C3", 2);
  FunctorSpec spec = identity_functor(c3).to_spec();
  spec.obj_map.erase("1");
  Result<FinFunctor> r = make_functor(c3, c3, spec);
  REQUIRE_FALSE(r.ok());
  CHECK(report_mentions(r.report(), "obj-map-missing"));
}

}  // TEST_SUITE
