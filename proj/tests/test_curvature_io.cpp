#include <doctest.h>

#include "test_util.hpp"
#include "wlab/curvature_io.hpp"

using namespace wlab;

TEST_SUITE("curvature_io") {

TEST_CASE("kaehler documents parse and round trip") {
  KaehlerCurvature fs = model_fubini_study(3);
  CurvatureDocument doc = parse_curvature_json(to_json(fs));
  REQUIRE(doc.kind == CurvatureKind::Kaehler);
  REQUIRE(doc.kaehler.has_value());
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) CHECK((*doc.kaehler)(i, j, k, l) == fs(i, j, k, l));

  auto ctx = testutil::random_context(3, 5);
  Rng rng(7);
  KaehlerCurvature rc = random_kaehler(ctx, rng, {1, -1});
  CurvatureDocument back = parse_curvature_json(to_json(rc));
  REQUIRE(back.kaehler.has_value());
  CHECK((back.kaehler->context().g() - ctx->g()).norm() == 0.0);
  CHECK(to_json(*back.kaehler) == to_json(rc));
}

TEST_CASE("bundle and riemannian documents round trip") {
  auto ctx = testutil::random_context(2, 11, 2);
  Rng rng(3);
  BundleCurvature re = random_bundle(ctx, rng, {1, 1}, 0.5);
  CurvatureDocument b = parse_curvature_json(to_json(re));
  REQUIRE(b.kind == CurvatureKind::Bundle);
  CHECK(to_json(*b.bundle) == to_json(re));

  RiemCurvature rr = random_riemannian(4, std::uint64_t{9});
  CurvatureDocument r = parse_curvature_json(to_json(rr));
  REQUIRE(r.kind == CurvatureKind::Riemannian);
  CHECK(to_json(*r.riemannian) == to_json(rr));
  CHECK(to_string(CurvatureKind::Riemannian) == "riemannian");
}

TEST_CASE("sparse entries and real shorthand") {
  CurvatureDocument d = parse_curvature_json(
      R"({"kind":"kaehler","n":1,"entries":[[1,1,1,1,2]]})");
  CHECK((*d.kaehler)(0, 0, 0, 0) == cplx(2.0));
  CurvatureDocument s = parse_curvature_json(
      R"({"kind":"riemannian","d":2,"entries":[[1,2,2,1,1],[2,1,1,2,1],[1,2,1,2,-1],[2,1,2,1,-1]]})");
  CHECK((*s.riemannian)(0, 1, 1, 0) == 1.0);
}

TEST_CASE("broken symmetries name the indices") {
  try {
    parse_curvature_json(R"({"kind":"kaehler","n":2,"entries":[[1,2,1,1,1.0,0.0]]})");
    FAIL("expected a symmetry error");
  } catch (const SymmetryError& e) {
    for (int x : e.indices()) CHECK((x == 1 || x == 2));
    CHECK(e.deviation() == doctest::Approx(1.0));
    CHECK(std::string(e.what()).find("indices (") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_curvature_json(R"({"kind":"riemannian","d":2,"entries":[[1,2,1,2,1]]})"), SymmetryError);
}

TEST_CASE("malformed documents") {
  const char* bad[] = {
      "not json",
      "[1,2]",
      R"({"n":2,"entries":[]})",
      R"({"kind":"torus","n":2,"entries":[]})",
      R"({"kind":"kaehler","entries":[]})",
      R"({"kind":"kaehler","n":0,"entries":[]})",
      R"({"kind":"kaehler","n":2.5,"entries":[]})",
      R"({"kind":"kaehler","n":2})",
      R"({"kind":"kaehler","n":2,"entries":[[1,2,3]]})",
      R"({"kind":"kaehler","n":2,"entries":[[1,2,3,1,1]]})",
      R"({"kind":"kaehler","n":2,"entries":[[1,1,1,1,"x"]]})",
      R"({"kind":"kaehler","n":2,"g":[[1,0]],"entries":[]})",
      R"({"kind":"riemannian","d":2,"entries":[[1,1,1,1,0,1]]})",
  };
  for (const char* text : bad) {
    CAPTURE(text);
    CHECK_THROWS_AS(parse_curvature_json(text), CurvatureParseError);
  }
  // not positive definite
  CHECK_THROWS(parse_curvature_json(R"({"kind":"kaehler","n":2,"g":[[1,0],[0,-1]],"entries":[]})"));
  CHECK_THROWS_AS(load_curvature_file("/nonexistent/curvature.json"), CurvatureParseError);
}

}  // TEST_SUITE
