#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>
#include <vector>

#include "polypoly/catalog.hpp"
#include "polypoly/coloring.hpp"
#include "polypoly/counting.hpp"
#include "polypoly/poly_model.hpp"
#include "polypoly/structures.hpp"

using namespace polypoly;

namespace {

const PolyModel& fit_model() {
  static const PolyModel fit = build_fit();
  return fit;
}

Coloring band_coloring() {
  const PolyModel& fit = fit_model();
  const auto bands = band_decomposition(fit);
  std::vector<int> colors(fit.edge_count(), -1);
  for (size_t b = 0; b < bands.size(); ++b) {
    for (int e : bands[b].edge_indices) colors[e] = static_cast<int>(b);
  }
  return make_coloring(colors);
}

}  // namespace

TEST_CASE("coloring construction validates density") {
  const Coloring c = make_coloring({0, 1, 1, 0});
  CHECK(c.num_colors == 2);
  CHECK_THROWS_AS(make_coloring({0, 2, 2, 0}), Error);   // color 1 unused
  CHECK_THROWS_AS(make_coloring({0, -1, 1, 0}), Error);  // negative color
}

TEST_CASE("band coloring of the fit is symmetric") {
  CHECK(is_symmetric_coloring(fit_model(), band_coloring()));
}

TEST_CASE("monochromatic coloring is symmetric on every model") {
  for (SolidKind kind : {SolidKind::tetrahedron, SolidKind::cube, SolidKind::dodecahedron}) {
    const PolyModel model = solid_model(kind);
    CHECK(is_symmetric_coloring(model, make_coloring(std::vector<int>(model.edge_count(), 0))));
  }
  CHECK(is_symmetric_coloring(fit_model(),
                              make_coloring(std::vector<int>(fit_model().edge_count(), 0))));
}

TEST_CASE("splitting a band breaks symmetry with a verifiable witness") {
  const PolyModel& fit = fit_model();
  Coloring c = band_coloring();
  // recolor one edge of band 0 with band 1's color: classes split 4 + 7
  const int moved = band_decomposition(fit)[0].edge_indices[2];
  c.edge_colors[moved] = 1;

  const auto witness = check_symmetric(fit.edge_action, c);
  REQUIRE(witness.has_value());
  CHECK_FALSE(is_symmetric_coloring(fit, c));

  // the witness reproduces: the image of its class is not a class
  std::set<int> cls;
  for (int e = 0; e < fit.edge_count(); ++e) {
    if (c.edge_colors[e] == witness->color) cls.insert(e);
  }
  std::set<int> image;
  const Perm& p = fit.edge_action[witness->element];
  for (int e : cls) image.insert(p(e));
  CHECK(image == std::set<int>(witness->image_edges.begin(), witness->image_edges.end()));
  std::set<std::set<int>> classes;
  for (int col = 0; col < c.num_colors; ++col) {
    std::set<int> one;
    for (int e = 0; e < fit.edge_count(); ++e) {
      if (c.edge_colors[e] == col) one.insert(e);
    }
    classes.insert(one);
  }
  CHECK(classes.find(image) == classes.end());
}

TEST_CASE("checker rejects a coloring of the wrong size") {
  CHECK_THROWS_AS(check_symmetric(fit_model().edge_action, make_coloring({0, 1, 0, 1})),
                  SizeMismatch);
}

TEST_CASE("catalog shape") {
  const auto& cat = catalog();
  REQUIRE(cat.size() == 18);

  const CatalogEntry* fit = find_entry("fit");
  REQUIRE(fit);
  CHECK(fit->name == "Five Intersecting Tetrahedra");
  CHECK(fit->group == GroupKind::icosidodecahedral);
  CHECK(fit->vertex_transitive);
  CHECK(fit->component_count == 5);
  CHECK(fit->edges_per_component == 6);
  CHECK(fit->lang_code == "5-4-3");

  CHECK(find_entry("20-triangles")->variants.size() == 23);
  CHECK(find_entry("12-pentagons")->variants.size() == 5);
  CHECK(find_entry("fib3p")->variants.size() == 2);
  CHECK(find_entry("tib3p")->variants.size() == 3);

  for (const CatalogEntry& e : cat) {
    for (const SchemeSpec& s : e.schemes) {
      REQUIRE(s.exists.size() == static_cast<size_t>(e.variant_slots()));
      if (!s.exists_anywhere()) continue;
      CHECK(s.structure_count * s.stabilizer_order == e.group_order);
      if (s.kind != SchemeKind::monochromatic_components &&
          s.structure_count * s.edges_per_structure ==
              e.component_count * e.edges_per_component) {
        // schemes that partition all edges; nothing more to check here
      }
    }
  }

  // the six pyramids model rejects visual bands in every variant
  const CatalogEntry* sib5p = find_entry("sib5p");
  REQUIRE(sib5p);
  REQUIRE(sib5p->variants.size() == 4);
  const SchemeSpec* vb = find_scheme(*sib5p, "visual-band");
  REQUIRE(vb);
  CHECK_FALSE(vb->exists_anywhere());
  CHECK(vb->reason[variant_slot(*sib5p, "B1")] == "no visual band: pairs not incident");
}

TEST_CASE("divisibility of color counts") {
  const CatalogEntry* fit = find_entry("fit");
  const CatalogEntry* sib5p = find_entry("sib5p");
  CHECK(divisibility_check(*fit, 6));
  CHECK(divisibility_check(*fit, 2));
  CHECK_FALSE(divisibility_check(*fit, 4));
  CHECK(divisibility_check(*sib5p, 2));
  CHECK_FALSE(divisibility_check(*sib5p, 4));
}

TEST_CASE("scheme actions have the declared shape") {
  const CatalogEntry* fit = find_entry("fit");
  const CosetScheme band = scheme_action(*fit, *find_scheme(*fit, "band"));
  CHECK(band.action.point_count() == 6);
  CHECK(band.stabilizer.size() == 10);

  const CatalogEntry* fiet = find_entry("fiet");
  const CosetScheme matching = scheme_action(*fiet, *find_scheme(*fiet, "matching"));
  CHECK(matching.action.point_count() == 12);
  CHECK(matching.stabilizer.size() == 5);

  const CatalogEntry* fib3p = find_entry("fib3p");
  const CosetScheme m8 = scheme_action(*fib3p, *find_scheme(*fib3p, "matching"));
  CHECK(m8.action.point_count() == 8);
  CHECK(m8.stabilizer.size() == 3);
}

TEST_CASE("scheme counts reproduce the published values") {
  const auto count = [](const char* key, const char* label) {
    const CatalogEntry* e = find_entry(key);
    REQUIRE(e);
    const SchemeSpec* s = find_scheme(*e, label);
    REQUIRE(s);
    return count_scheme_colorings(*e, *s);
  };

  CHECK(count("fit", "band") == 12);
  CHECK(count("fiet", "matching") == 7983360);
  CHECK(count("finh", "matching") == 7983360);
  CHECK(count("sib5p", "matching") == 7983360);
  CHECK(count("fib3p", "matching") == 1680);
  CHECK(count("fib3p", "visual-band") == 1);
  CHECK(count("fiet", "visual-band") == 12);
  CHECK(count("tib3p", "visual-band") == 12);
  CHECK(count("tib3p", "matching") == 12);
  for (const CatalogEntry& e : catalog()) {
    CHECK(count_scheme_colorings(e, *find_scheme(e, "mono")) == 1);
  }

  // closed forms
  CHECK(BigInt(7983360) == factorial(12) / 60);
  CHECK(BigInt(7983360) == 12 * binomial(12, 6) * factorial(6));
  CHECK(BigInt(1680) == binomial(8, 4) * factorial(4));
}

TEST_CASE("burnside helpers") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(6) == 720);
  CHECK(binomial(12, 6) == 924);
  CHECK(binomial(5, 7) == 0);
  CHECK(int_pow(3, 4) == 81);
}

TEST_CASE("burnside agrees with explicit orbit enumeration on small actions") {
  for (const CatalogEntry& e : catalog()) {
    for (const SchemeSpec& s : e.schemes) {
      if (!s.exists_anywhere()) continue;
      const CosetScheme cs = scheme_action(e, s);
      if (cs.action.point_count() > 8) continue;
      CHECK(burnside_rainbow_count(cs.action) ==
            orbit_enum_count(cs.action, all_rainbow_labelings(cs.action.point_count())));
      for (int k = 1; k <= 3; ++k) {
        CHECK(burnside_kcolor_count(cs.action, k) ==
              orbit_enum_count(cs.action, all_kcolor_labelings(cs.action.point_count(), k)));
      }
    }
  }
}

TEST_CASE("burnside term table sums to the count") {
  const CatalogEntry* fit = find_entry("fit");
  const CosetScheme cs = scheme_action(*fit, *find_scheme(*fit, "band"));
  const auto terms = burnside_rainbow_terms(cs.action);
  BigInt total = 0;
  int elements = 0;
  for (const BurnsideTerm& t : terms) {
    total += t.element_count * t.fixed_per_element;
    elements += t.element_count;
  }
  CHECK(elements == 60);
  CHECK(total / 60 == burnside_rainbow_count(cs.action));
}

TEST_CASE("exhaustive search on the single tetrahedron") {
  const PolyModel tetra = solid_model(SolidKind::tetrahedron);
  CHECK(exhaustive_symmetric_colorings(tetra, 1).size() == 1);
  CHECK(exhaustive_symmetric_colorings(tetra, 2).size() == 0);   // regression value
  CHECK(exhaustive_symmetric_colorings(tetra, 6).size() == 60);  // rainbow colorings

  const auto survivors = exhaustive_symmetric_colorings(tetra, 3);
  CHECK(survivors.size() == 2);  // regression value

  // both survivors are the perfect matching colorings
  const auto decomp = matching_decompositions(build_solid(SolidKind::tetrahedron), 2);
  std::set<std::set<int>> matchings;
  for (const Matching& m : decomp.front().matchings) {
    matchings.insert(std::set<int>(m.edge_indices.begin(), m.edge_indices.end()));
  }
  for (const Coloring& c : survivors) {
    std::set<std::set<int>> classes;
    for (int col = 0; col < c.num_colors; ++col) {
      std::set<int> one;
      for (int e = 0; e < static_cast<int>(c.edge_colors.size()); ++e) {
        if (c.edge_colors[e] == col) one.insert(e);
      }
      classes.insert(one);
    }
    CHECK(classes == matchings);
  }
}

TEST_CASE("exhaustive search guard") {
  CHECK_THROWS_AS(exhaustive_symmetric_colorings(solid_model(SolidKind::dodecahedron), 3),
                  TooLarge);
}
