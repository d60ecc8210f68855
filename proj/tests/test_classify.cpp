#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "traag/classify.hpp"

using namespace traag;

TEST_CASE("the seven forbidden triples are distinct and each refutes speciality") {
  const auto& patterns = forbidden_triples();
  REQUIRE(patterns.size() == 7);
  std::set<std::string> keys;
  for (const auto& p : patterns) {
    CHECK(p.graph.vertex_count() == 3);
    CHECK(p.order.size() == 3);
    CHECK_FALSE(p.underlying_only);
    // Each obstruction is itself non-special.
    CHECK(is_special(p.graph).has_value());
    keys.insert(canonical_form(p.graph));
  }
  CHECK(keys.size() == 7);  // pairwise non-isomorphic
}

TEST_CASE("speciality of the running examples") {
  CHECK_FALSE(is_special(fixtures::p2()).has_value());
  CHECK_FALSE(is_special(fixtures::xi2()).has_value());
  CHECK_FALSE(is_special(fixtures::gamma2()).has_value());
  CHECK_FALSE(is_special(fixtures::gamma3()).has_value());
  CHECK_FALSE(is_special(fixtures::gamma3_twisted()).has_value());
  CHECK_FALSE(is_special(fixtures::gamma4()).has_value());
  CHECK_FALSE(is_special(fixtures::lambda_s()).has_value());
  CHECK_FALSE(is_special(fixtures::lambda1()).has_value());
  CHECK_FALSE(is_special(fixtures::lambda2()).has_value());
  CHECK_FALSE(is_special(fixtures::upsilon()).has_value());

  const auto cert = is_special(fixtures::gamma1());
  REQUIRE(cert.has_value());
  CHECK(cert->kind == CertificateKind::NonSpecialVertex);
  CHECK(verify_certificate(fixtures::gamma1(), *cert));
  // a is negative (d->a) yet originates the arrow a->b.
  CHECK(cert->witness == std::vector<VertexId>{"a", "b"});
}

TEST_CASE("speciality matches the sinkhole condition vertex by vertex") {
  for (const auto& g : {fixtures::gamma1(), fixtures::gamma2(), fixtures::gamma3(),
                        fixtures::upsilon(), fixtures::lambda2()}) {
    bool every_negative_is_sinkhole = true;
    for (const auto& v : g.negative_vertices())
      every_negative_is_sinkhole = every_negative_is_sinkhole && g.is_sinkhole(v);
    CHECK(every_negative_is_sinkhole == !is_special(g).has_value());
  }
}

TEST_CASE("droms classification of the running examples") {
  CHECK_FALSE(is_droms(fixtures::p2()).has_value());
  CHECK_FALSE(is_droms(fixtures::xi2()).has_value());
  CHECK_FALSE(is_droms(fixtures::gamma3()).has_value());
  CHECK_FALSE(is_droms(fixtures::gamma3_twisted()).has_value());
  CHECK_FALSE(is_droms(fixtures::lambda1()).has_value());
  CHECK_FALSE(is_droms(fixtures::lambda2()).has_value());
  CHECK_FALSE(is_droms(fixtures::upsilon()).has_value());
  CHECK_FALSE(is_droms(fixtures::edgeless({"a", "b", "c"})).has_value());
  CHECK_FALSE(is_droms(fixtures::complete_simplicial({"a", "b", "c", "d"})).has_value());

  SUBCASE("a non-special graph fails with the speciality certificate") {
    const auto cert = is_droms(fixtures::gamma1());
    REQUIRE(cert.has_value());
    CHECK(cert->kind == CertificateKind::NonSpecialVertex);
    CHECK(verify_certificate(fixtures::gamma1(), *cert));
  }
  SUBCASE("a path on four vertices is its own refutation") {
    const auto cert = is_droms(fixtures::p4());
    REQUIRE(cert.has_value());
    CHECK(cert->kind == CertificateKind::ForbiddenP4);
    CHECK(cert->witness == std::vector<VertexId>{"a", "b", "c", "d"});
    CHECK(verify_certificate(fixtures::p4(), *cert));
  }
  SUBCASE("a square is its own refutation") {
    const auto cert = is_droms(fixtures::c4());
    REQUIRE(cert.has_value());
    CHECK(cert->kind == CertificateKind::ForbiddenC4);
    CHECK(cert->witness == std::vector<VertexId>{"a", "b", "c", "d"});
    CHECK(verify_certificate(fixtures::c4(), *cert));
  }
  SUBCASE("two arrows with a common terminus block gamma4") {
    const auto cert = is_droms(fixtures::gamma4());
    REQUIRE(cert.has_value());
    CHECK(cert->kind == CertificateKind::ForbiddenLambdaS);
    CHECK(cert->witness == std::vector<VertexId>{"a1'", "b'", "a2'"});
    CHECK(verify_certificate(fixtures::gamma4(), *cert));
  }
  SUBCASE("lambda_s is special but not droms") {
    CHECK_FALSE(is_special(fixtures::lambda_s()).has_value());
    const auto cert = is_droms(fixtures::lambda_s());
    REQUIRE(cert.has_value());
    CHECK(cert->kind == CertificateKind::ForbiddenLambdaS);
    CHECK(cert->witness == std::vector<VertexId>{"a1", "b", "a2"});
  }
  SUBCASE("gamma2 is special but contains lambda_s") {
    CHECK_FALSE(is_special(fixtures::gamma2()).has_value());
    const auto cert = is_droms(fixtures::gamma2());
    REQUIRE(cert.has_value());
    CHECK(cert->kind == CertificateKind::ForbiddenLambdaS);
    CHECK(verify_certificate(fixtures::gamma2(), *cert));
  }
}

TEST_CASE("chordality looks only at the underlying graph") {
  CHECK_FALSE(is_chordal(fixtures::p4()).has_value());
  CHECK_FALSE(is_chordal(fixtures::gamma3()).has_value());
  CHECK_FALSE(is_chordal(fixtures::upsilon()).has_value());
  CHECK_FALSE(is_chordal(fixtures::complete_simplicial({"a", "b", "c", "d"})).has_value());
  CHECK_FALSE(is_chordal(fixtures::edgeless({"a", "b"})).has_value());

  SUBCASE("the square") {
    const auto cert = is_chordal(fixtures::c4());
    REQUIRE(cert.has_value());
    CHECK(cert->kind == CertificateKind::InducedCycle);
    CHECK(cert->witness.size() == 4);
    CHECK(verify_certificate(fixtures::c4(), *cert));
  }
  SUBCASE("a directed square is still a hole") {
    const MixedGraph g({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}},
                       {{"a", "d"}});
    const auto cert = is_chordal(g);
    REQUIRE(cert.has_value());
    CHECK(cert->kind == CertificateKind::InducedCycle);
    CHECK(verify_certificate(g, *cert));
  }
  SUBCASE("a five-cycle") {
    const MixedGraph g({"a", "b", "c", "d", "e"},
                       {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "e"}, {"a", "e"}}, {});
    const auto cert = is_chordal(g);
    REQUIRE(cert.has_value());
    CHECK(cert->witness.size() == 5);
    CHECK(verify_certificate(g, *cert));
  }
  SUBCASE("a five-cycle with one chord leaves a square") {
    const MixedGraph g({"a", "b", "c", "d", "e"},
                       {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "e"}, {"a", "e"}, {"b", "e"}},
                       {});
    const auto cert = is_chordal(g);
    REQUIRE(cert.has_value());
    CHECK(cert->witness.size() == 4);
    CHECK(verify_certificate(g, *cert));
  }
  SUBCASE("triangulating the square restores chordality") {
    const MixedGraph g({"a", "b", "c", "d"},
                       {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"a", "d"}, {"a", "c"}}, {});
    CHECK_FALSE(is_chordal(g).has_value());
  }
}

TEST_CASE("certificate verification rejects tampered witnesses") {
  const auto p4_cert = is_droms(fixtures::p4());
  REQUIRE(p4_cert.has_value());
  Certificate bad = *p4_cert;
  std::swap(bad.witness[0], bad.witness[1]);  // b-a-c-d is not an induced path
  CHECK_FALSE(verify_certificate(fixtures::p4(), bad));

  Certificate wrong_kind = *p4_cert;
  wrong_kind.kind = CertificateKind::ForbiddenC4;
  CHECK_FALSE(verify_certificate(fixtures::p4(), wrong_kind));

  const auto cycle_cert = is_chordal(fixtures::c4());
  REQUIRE(cycle_cert.has_value());
  Certificate cycle_bad = *cycle_cert;
  std::swap(cycle_bad.witness[0], cycle_bad.witness[1]);
  CHECK_FALSE(verify_certificate(fixtures::c4(), cycle_bad));
}

TEST_CASE("contains_induced reports the first embedding in pattern order") {
  SUBCASE("p4 inside a longer path") {
    const MixedGraph p5({"a", "b", "c", "d", "e"},
                        {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "e"}}, {});
    const auto hit = contains_induced(p5, pattern_p4());
    REQUIRE(hit.has_value());
    CHECK(*hit == std::vector<VertexId>{"a", "b", "c", "d"});
  }
  SUBCASE("the underlying-only flag ignores arrows") {
    const MixedGraph path({"a", "b", "c", "d"}, {{"b", "c"}, {"c", "d"}}, {{"b", "a"}});
    const auto hit = contains_induced(path, pattern_p4());
    REQUIRE(hit.has_value());
    CHECK(verify_certificate(path, Certificate{CertificateKind::ForbiddenP4, *hit}));
  }
  SUBCASE("lambda_s matching respects directions") {
    CHECK_FALSE(contains_induced(fixtures::lambda1(), pattern_lambda_s()).has_value());
    CHECK(contains_induced(fixtures::lambda_s(), pattern_lambda_s()).has_value());
  }
  SUBCASE("no embedding into a smaller graph") {
    CHECK_FALSE(contains_induced(fixtures::p2(), pattern_p4()).has_value());
  }
}

TEST_CASE("complete special graphs") {
  CHECK(is_complete_special(fixtures::p2()));
  CHECK(is_complete_special(fixtures::xi2()));
  CHECK(is_complete_special(fixtures::complete_simplicial({"x", "y", "z"})));
  CHECK(is_complete_special(fixtures::edgeless({"a"})));
  // Triangle with both arrows at the sinkhole z.
  CHECK(is_complete_special(MixedGraph({"x", "y", "z"}, {{"x", "y"}}, {{"x", "z"}, {"y", "z"}})));

  CHECK_FALSE(is_complete_special(fixtures::lambda_s()));   // not complete
  CHECK_FALSE(is_complete_special(fixtures::gamma3()));     // not complete
  CHECK_FALSE(is_complete_special(fixtures::edgeless({"a", "b"})));
  // Triangle with two negatives.
  CHECK_FALSE(is_complete_special(MixedGraph({"x", "y", "z"}, {{"x", "z"}},
                                             {{"x", "y"}, {"y", "z"}})));
}

TEST_CASE("the named aliases answer the same questions") {
  CHECK(is_elementary(fixtures::gamma3()) == is_droms(fixtures::gamma3()));
  CHECK(is_elementary(fixtures::p4()) == is_droms(fixtures::p4()));
  CHECK(is_coherent(fixtures::c4()) == is_chordal(fixtures::c4()));
  CHECK(is_coherent(fixtures::upsilon()) == is_chordal(fixtures::upsilon()));
}
