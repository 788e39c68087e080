#include <doctest.h>

#include "hetcat/adjoint.hpp"
#include "hetcat/gallery.hpp"
#include "test_helpers.hpp"

using namespace hetcat;
using testutil::mentions;
using testutil::report_mentions;
using testutil::thrown_message;

namespace {

Adjunction ceiling_adjunction() {
  static const Fixture fx = build_fixture("chain-galois", {4, 2});
  const HetBifunctor& het = fx.het("ceil");
  return std::move(assemble_adjunction(std::move(build_left_semiadjunction(het)).value(),
                                       std::move(build_right_semiadjunction(het)).value()))
      .value();
}

}  // namespace

TEST_SUITE("adjoint") {

TEST_CASE("the ceiling and doubling semiadjunctions assemble into a Galois connection") {
  Adjunction adj = ceiling_adjunction();
  CHECK(adj.left.functor.obj("3") == "2");
  CHECK(adj.right.functor.obj("1") == "2");
  CHECK(adj.het().element_count() == 9);
}

TEST_CASE("the hom bifunctor assembles into the identity adjunction") {
  FinCategory c3 = poset_chain("C3", 2);
  HetBifunctor hom = hom_bifunctor(c3);
  Result<Adjunction> adj = assemble_adjunction(std::move(build_left_semiadjunction(hom)).value(),
                                               std::move(build_right_semiadjunction(hom)).value());
  REQUIRE(adj.ok());
  CHECK(adj.value().left.functor == identity_functor(c3));
  CHECK(adj.value().right.functor == identity_functor(c3));
}

TEST_CASE("semiadjunctions over different hets do not assemble") {
  Fixture fx = build_fixture("chain-galois", {4, 2});
  FinCategory c3 = poset_chain("C3", 2);
  Result<Adjunction> r =
      assemble_adjunction(std::move(build_left_semiadjunction(fx.het("ceil"))).value(),
                          std::move(build_right_semiadjunction(hom_bifunctor(c3))).value());
  REQUIRE_FALSE(r.ok());
  CHECK(r.report().violations[0].law == "het-mismatch");
}

TEST_CASE("the adjunctive square commutes on both triangles") {
  Adjunction adj = ceiling_adjunction();
  SquareReport square = verify_adjunctive_square(adj, "u_1_2");
  CHECK(square.ok());
  CHECK(square.upper_hom == "le_1_2");
  CHECK(square.lower_hom == "le_1_4");
  CHECK(mentions(square.text(), "upper triangle commutes at u_1_2"));

  SquareReport at_universal = verify_adjunctive_square(adj, "u_1_1");
  CHECK(at_universal.ok());
  CHECK(at_universal.upper_hom == "id_1");

  CHECK(thrown_message<DomainError>([&] { verify_adjunctive_square(adj, "nosuch"); }) != "");
}

TEST_CASE("a corrupted bijection entry breaks the upper triangle") {
  Adjunction adj = ceiling_adjunction();
  adj.left.bijections[{"1", "2"}] = {{"le_1_2", "u_1_1"}};
  SquareReport square = verify_adjunctive_square(adj, "u_1_2");
  CHECK_FALSE(square.upper_ok);
  CHECK(square.lower_ok);
  CHECK(mentions(square.text(), "upper triangle fails at u_1_2"));
  CHECK_FALSE(verify_semiadjunction(adj.left).ok());
}

TEST_CASE("a swapped bijection pair in a multi-element family is caught") {
  Fixture fx = build_fixture("free-discrete-preorder", {2});
  const HetBifunctor& het = fx.het("free");
  Adjunction adj = std::move(assemble_adjunction(std::move(build_left_semiadjunction(het)).value(),
                                                 std::move(build_right_semiadjunction(het)).value()))
                       .value();
  auto& table = adj.left.bijections.at({"s2", "C2"});
  REQUIRE(table.size() >= 2);
  std::swap(table[0].second, table[1].second);
  SquareReport square = verify_adjunctive_square(adj, table[0].second);
  CHECK_FALSE(square.upper_ok);
  CHECK_FALSE(verify_semiadjunction(adj.left).ok());
}

TEST_CASE("the coordinate coding functor is a brain functor") {
  Fixture fx = build_fixture("coordinate-coding", {2, 2});
  Result<BrainFunctor> brain = check_brain(fx.functor("code"), fx.het("coding"),
                                           fx.het("plotting"));
  REQUIRE(brain.ok());
  WingReport wings = verify_butterfly(brain.value(), "u_p_0_0_c_0_0", "u_c_0_0_p_0_0");
  CHECK(wings.ok());
  CHECK(wings.upper_hom == "id_c_0_0");
  CHECK(wings.lower_hom == "id_c_0_0");
  CHECK(mentions(wings.text(), "upper wing commutes"));

  CHECK(thrown_message<DomainError>(
            [&] { verify_butterfly(brain.value(), "u_p_0_0_c_0_0", "u_c_0_1_p_0_1"); }) != "");
}

TEST_CASE("the diagonal with its induced hets is a brain functor") {
  Fixture fx = build_fixture("powerset-diagonal", {2});
  Result<BrainFunctor> brain = check_brain(fx.functor("diag"), fx.het("out"), fx.het("in"));
  REQUIRE(brain.ok());
  WingReport wings = verify_butterfly(brain.value(), "(id_a,id_a)", "(id_a,id_a)");
  CHECK(wings.ok());
}

TEST_CASE("a constant functor fails the brain check on the outgoing side") {
  FinCategory c3 = poset_chain("C3", 2);
  FunctorSpec constant;
  constant.name = "const0";
  constant.source = "C3";
  constant.target = "C3";
  for (const std::string& o : c3.objects()) constant.obj_map[o] = "0";
  for (const auto& m : c3.morphisms()) constant.mor_map[m.name] = "id_0";
  FinFunctor F = std::move(make_functor(c3, c3, constant)).value();
  HetBifunctor hom = hom_bifunctor(c3);
  Result<BrainFunctor> brain = check_brain(F, hom, hom);
  REQUIRE_FALSE(brain.ok());
  bool found = false;
  for (const auto& v : brain.report().violations) {
    if (v.law == "ump-out" && v.witness[0] == "1") found = true;
  }
  CHECK(found);
}

TEST_CASE("join, diagonal and meet witness the both-adjoints theorem") {
  for (int k : {1, 2}) {
    Fixture fx = build_fixture("powerset-diagonal", {k});
    Result<BrainFunctor> brain =
        brain_from_adjoints(fx.functor("join"), fx.functor("diag"), fx.functor("meet"));
    REQUIRE(brain.ok());
    CHECK(brain.value().functor == fx.functor("diag"));
  }
}

TEST_CASE("the identity triple is a brain functor") {
  FinCategory c3 = poset_chain("C3", 2);
  FinFunctor id = identity_functor(c3);
  Result<BrainFunctor> brain = brain_from_adjoints(id, id, id);
  REQUIRE(brain.ok());
}

TEST_CASE("a false adjunction claim is reported by side") {
  Fixture fx = build_fixture("powerset-diagonal", {2});
  Result<BrainFunctor> brain =
      brain_from_adjoints(fx.functor("meet"), fx.functor("diag"), fx.functor("meet"));
  REQUIRE_FALSE(brain.ok());
  CHECK(report_mentions(brain.report(), "left-adjunction-fails"));
  CHECK_FALSE(report_mentions(brain.report(), "right-adjunction-fails"));

  Result<BrainFunctor> other =
      brain_from_adjoints(fx.functor("join"), fx.functor("diag"), fx.functor("join"));
  REQUIRE_FALSE(other.ok());
  CHECK(report_mentions(other.report(), "right-adjunction-fails"));
}

TEST_CASE("boundary mismatches are domain errors") {
  Fixture fx = build_fixture("powerset-diagonal", {2});
  CHECK(thrown_message<DomainError>([&] {
          brain_from_adjoints(fx.functor("diag"), fx.functor("diag"), fx.functor("meet"));
        }) != "");
  CHECK(thrown_message<DomainError>([&] {
          check_brain(fx.functor("diag"), fx.het("in"), fx.het("out"));
        }) != "");
}

}  // TEST_SUITE
