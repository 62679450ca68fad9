#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "figcmp/catalog.hpp"
#include "test_support.hpp"

using namespace figcmp;
using namespace figcmp::test;

TEST_CASE("all eleven entries build and round-trip through their ids") {
  CHECK(entry_ids().size() == 11);
  for (const std::string& id : entry_ids()) {
    CatalogEntry e = build_entry(id);
    CHECK(e.id == id);
    CHECK(!e.summary.empty());
  }
  CHECK_THROWS_AS(build_entry("nosuch"), unknown_entry_error);
}

TEST_CASE("every entry verifies PASS at the default truncation") {
  Catalog cat;
  for (const std::string& id : entry_ids()) {
    ExampleReport r = cat.verify(id, 40);
    CAPTURE(id);
    for (const Clause& c : r.clauses) {
      CAPTURE(c.name);
      CAPTURE(c.evidence);
      CHECK(c.pass);
    }
    CHECK(r.pass);
  }
  for (const auto& l : cat.list()) {
    CHECK(l.status == "PASS");
  }
}

TEST_CASE("truncation stability for the orbit entries") {
  for (std::string id : {"ex1.4", "ex2.1", "ex2.3"}) {
    CatalogEntry e = build_entry(id);
    for (long t : {20L, 40L, 80L}) {
      ExampleReport r = verify_entry(e, t);
      CAPTURE(id);
      CAPTURE(t);
      CHECK(r.pass);
    }
  }
}

TEST_CASE("catalog listing starts unverified and updates") {
  Catalog cat;
  for (const auto& l : cat.list()) CHECK(l.status == "unverified");
  cat.verify("ex1.1");
  CHECK(cat.list().front().status == "PASS");
}

TEST_CASE("distinguisher invariance under supported isometries") {
  // Euclidean symbolic entries: random euclidean isometries.
  for (std::string id : {"ex1.1", "ex1.2", "ex1.3", "ex1.6"}) {
    CatalogEntry e = build_entry(id);
    CAPTURE(id);
    std::string base_a =
        evaluate_distinguisher(*e.distinguisher, e.A, 0, std::nullopt, 40);
    std::string base_b =
        evaluate_distinguisher(*e.distinguisher, e.B, 1, std::nullopt, 40);
    for (int i = 0; i < 10; ++i) {
      Isometry f = random_isometry(Geometry::Euclidean);
      CHECK(evaluate_distinguisher(*e.distinguisher, image(e.A, f), 0, f, 40) ==
            base_a);
      CHECK(evaluate_distinguisher(*e.distinguisher, image(e.B, f), 1, f, 40) ==
            base_b);
    }
  }
  // Orbit entries: realize first, then map pointwise by a random isometry of
  // the model; the signature may not change.
  for (std::string id : {"ex1.4", "ex2.1", "ex2.3"}) {
    CatalogEntry e = build_entry(id);
    CAPTURE(id);
    FiniteFigure a = realize_figure(e.A, 40);
    std::vector<int> base =
        neighbor_signature(a, e.distinguisher->r, Tolerance{e.distinguisher->sig_tol});
    for (int i = 0; i < 10; ++i) {
      Isometry f = random_isometry(e.geometry);
      CHECK(neighbor_signature(image(a, f), e.distinguisher->r,
                               Tolerance{e.distinguisher->sig_tol}) == base);
    }
  }
  // ex2.2: transport the probes along half-plane translations.
  {
    CatalogEntry e = build_entry("ex2.2");
    std::string base_a =
        evaluate_distinguisher(*e.distinguisher, e.A, 0, std::nullopt, 40);
    std::string base_b =
        evaluate_distinguisher(*e.distinguisher, e.B, 1, std::nullopt, 40);
    CHECK(base_a == "1");
    CHECK(base_b == "infinite");
    for (double c : {-2.0, -0.5, 0.7, 3.0}) {
      Isometry f = Isometry::half_plane_translation(c);
      CHECK(evaluate_distinguisher(*e.distinguisher, image(e.A, f), 0, f, 40) ==
            base_a);
      CHECK(evaluate_distinguisher(*e.distinguisher, image(e.B, f), 1, f, 40) ==
            base_b);
    }
  }
}

TEST_CASE("chain of containment: g.f maps A into A, strictly for orbits") {
  for (std::string id : {"ex1.1", "ex1.2", "ex1.3", "ex1.6", "ex2.2"}) {
    CatalogEntry e = build_entry(id);
    CAPTURE(id);
    Isometry chain = compose(*e.g_BtoA, *e.f_AtoB);
    CHECK(check_leq_symbolic(e.A, e.A, chain).verdict == SubsetVerdict::proved);
  }
  for (std::string id : {"ex1.4", "ex2.1", "ex2.3"}) {
    CatalogEntry e = build_entry(id);
    CAPTURE(id);
    Isometry chain = compose(*e.g_BtoA, *e.f_AtoB);
    CHECK(check_leq_symbolic(e.A, e.A, chain).verdict == SubsetVerdict::proved);
    // the image is the index-shifted orbit: a proper subset
    SymbolicFigure img = image(e.A, chain);
    const OrbitFigure* oi = as_orbit(img);
    REQUIRE(oi != nullptr);
    CHECK(oi->index_from > as_orbit(e.A)->index_from);
    CHECK(as_orbit(e.A)->subset_of(*oi) == Ternary::no);
  }
}

TEST_CASE("claim probes catch a figure that is not strongly good") {
  // The open half line embeds strictly into itself under translate(+1,0);
  // the same probe machinery must detect that.
  CatalogEntry e = build_entry("claim1");
  SymbolicFigure open_hl = SymbolicFigure::half_line({0, 0}, {1, 0}, false);
  bool found_strict_embedding = false;
  for (const auto& [name, f] : e.probe_seeds) {
    if (check_leq_symbolic(open_hl, open_hl, f).verdict == SubsetVerdict::proved &&
        check_leq_symbolic(open_hl, open_hl, inverse(f)).verdict ==
            SubsetVerdict::refuted) {
      found_strict_embedding = true;
    }
  }
  CHECK(found_strict_embedding);
}

TEST_CASE("verification failures are reported, never silent") {
  // Tamper with a witness: ex1.1 with a translation in the wrong direction.
  CatalogEntry e = build_entry("ex1.1");
  e.f_AtoB = Isometry::euclidean_translation({-1, 0});
  ExampleReport r = verify_entry(e);
  CHECK(!r.pass);
  bool found_failing_clause = false;
  for (const Clause& c : r.clauses) {
    if (!c.pass && c.name.find("A<=B") != std::string::npos) {
      found_failing_clause = true;
    }
  }
  CHECK(found_failing_clause);
}
