#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "polypoly/poly_model.hpp"
#include "polypoly/solid.hpp"
#include "polypoly/vec3.hpp"

using namespace polypoly;

TEST_CASE("vector helpers") {
  const Vec3 a{1, 0, 0};
  const Vec3 b{0, 1, 0};
  CHECK(dot(a, b) == 0.0);
  CHECK(nearly_equal(cross(a, b), Vec3{0, 0, 1}, kEps));
  CHECK(norm(normalized(Vec3{3, 4, 0})) == Catch::Approx(1.0));
  CHECK(distance(a, b) == Catch::Approx(std::sqrt(2.0)));
}

TEST_CASE("solids have the right skeletons") {
  const Solid tetra = build_solid(SolidKind::tetrahedron);
  const Solid cube = build_solid(SolidKind::cube);
  const Solid dodec = build_solid(SolidKind::dodecahedron);
  CHECK(tetra.vertices.size() == 4);
  CHECK(tetra.edges.size() == 6);
  CHECK(cube.vertices.size() == 8);
  CHECK(cube.edges.size() == 12);
  CHECK(dodec.vertices.size() == 20);
  CHECK(dodec.edges.size() == 30);
}

TEST_CASE("solid edges are uniform length and sorted") {
  for (SolidKind kind : {SolidKind::tetrahedron, SolidKind::cube, SolidKind::dodecahedron}) {
    const Solid solid = build_solid(kind);
    const auto& [a0, b0] = solid.edges.front();
    const double len = distance(solid.vertices[a0], solid.vertices[b0]);
    for (const auto& [a, b] : solid.edges) {
      CHECK(a < b);
      CHECK(distance(solid.vertices[a], solid.vertices[b]) == Catch::Approx(len));
    }
    CHECK(std::is_sorted(solid.edges.begin(), solid.edges.end()));
  }
}

TEST_CASE("snapping and edge lookup") {
  const Solid dodec = build_solid(SolidKind::dodecahedron);
  for (int v = 0; v < static_cast<int>(dodec.vertices.size()); ++v) {
    CHECK(snap_to_vertex(dodec.vertices, dodec.vertices[v]) == v);
  }
  CHECK(snap_to_vertex(dodec.vertices, Vec3{0, 0, 0}) == -1);
  Vec3 off = dodec.vertices[3];
  off.x += 1e-4;
  CHECK(snap_to_vertex(dodec.vertices, off) == -1);

  const auto& [a, b] = dodec.edges[7];
  CHECK(find_edge(dodec.edges, a, b) == 7);
  CHECK(find_edge(dodec.edges, b, a) == 7);
  CHECK(find_edge(dodec.edges, a, a) == -1);
}

TEST_CASE("single solid models") {
  const PolyModel model = solid_model(SolidKind::cube);
  CHECK(model.name == "cube");
  CHECK(model.component_count == 1);
  CHECK(model.edge_count() == 12);
  CHECK(model.edge_action.size() == 24);
}

TEST_CASE("fit compound structure") {
  const PolyModel fit = build_fit();
  CHECK(fit.name == "fit");
  CHECK(fit.vertices.size() == 20);
  CHECK(fit.edge_count() == 30);
  CHECK(fit.component_count == 5);
  const auto comps = fit.component_edges();
  REQUIRE(comps.size() == 5);
  for (const auto& edges : comps) CHECK(edges.size() == 6);
  CHECK(fit.edge_action.size() == 60);

  // every component is a full tetrahedron: 4 vertices, all 6 edges between them
  for (const auto& edges : comps) {
    std::set<int> verts;
    for (int e : edges) {
      verts.insert(fit.edges[e].first);
      verts.insert(fit.edges[e].second);
    }
    CHECK(verts.size() == 4);
  }
}

TEST_CASE("fit chirality picks one of two mirror compounds") {
  const PolyModel left = build_fit(Chirality::left);
  const PolyModel right = build_fit(Chirality::right);
  CHECK(left.vertices.size() == right.vertices.size());
  CHECK(left.edges != right.edges);

  // the left seed component contains the even-parity corner tetrahedron
  const int a = snap_to_vertex(left.vertices, Vec3{1, 1, 1});
  const int b = snap_to_vertex(left.vertices, Vec3{1, -1, -1});
  REQUIRE(a >= 0);
  REQUIRE(b >= 0);
  CHECK(find_edge(left.edges, a, b) >= 0);
  CHECK(find_edge(right.edges, a, b) == -1);
}

TEST_CASE("fit edges connect tetrahedron vertices, not dodecahedron neighbors") {
  const PolyModel fit = build_fit();
  const Solid dodec = build_solid(SolidKind::dodecahedron);
  const auto& [a, b] = fit.edges[0];
  CHECK(find_edge(dodec.edges, a, b) == -1);
  const double fit_len = distance(fit.vertices[a], fit.vertices[b]);
  const auto& [c, d] = dodec.edges[0];
  CHECK(fit_len > distance(dodec.vertices[c], dodec.vertices[d]));
}
