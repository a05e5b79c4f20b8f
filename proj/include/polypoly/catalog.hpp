#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "polypoly/coloring.hpp"
#include "polypoly/counting.hpp"
#include "polypoly/group_action.hpp"
#include "polypoly/structures.hpp"

namespace polypoly {

enum class GroupKind { tetrahedral, cuboctahedral, icosidodecahedral };

inline const char* group_kind_name(GroupKind k) {
  switch (k) {
    case GroupKind::tetrahedral: return "tetrahedral";
    case GroupKind::cuboctahedral: return "cuboctahedral";
    case GroupKind::icosidodecahedral: return "icosidodecahedral";
  }
  return "?";
}

inline SolidKind carrier_solid(GroupKind k) {
  switch (k) {
    case GroupKind::tetrahedral: return SolidKind::tetrahedron;
    case GroupKind::cuboctahedral: return SolidKind::cube;
    case GroupKind::icosidodecahedral: return SolidKind::dodecahedron;
  }
  throw Error("unknown group kind");
}

enum class SchemeKind { matching, visual_band, monochromatic_components };

// How the structure stabilizer sits inside the group: the cyclic group of
// one axis, the full line stabilizer of one axis, or the setwise stabilizer
// of one compound component.
enum class StabilizerMode { cyclic, line, component };

// Structural data for one coloring scheme of a catalog entry. Counts are
// per structure; existence is tracked per variant, with a reason when a
// variant lacks the scheme. Schemes missing from every variant carry no
// structural numbers.
struct SchemeSpec {
  SchemeKind kind = SchemeKind::matching;
  std::string label;
  int structure_count = 0;
  int stabilizer_order = 0;
  int edges_per_structure = 0;
  int axis_fold = 0;
  StabilizerMode stab_mode = StabilizerMode::cyclic;
  std::vector<char> exists;
  std::vector<std::string> reason;

  bool exists_anywhere() const {
    for (char e : exists) {
      if (e) return true;
    }
    return false;
  }
};

struct CatalogEntry {
  std::string key;
  std::string name;
  std::string lang_code;
  GroupKind group = GroupKind::icosidodecahedral;
  int group_order = 0;
  bool vertex_transitive = false;
  bool polygon_components = false;
  int component_count = 0;
  int edges_per_component = 0;
  std::vector<std::string> variants;  // empty when the catalog lists n/a
  std::vector<SchemeSpec> schemes;

  int variant_slots() const { return variants.empty() ? 1 : static_cast<int>(variants.size()); }
};

namespace detail {

inline SchemeSpec scheme(SchemeKind kind, std::string label, int n, int stab, int eps, int fold,
                         StabilizerMode mode, std::vector<char> exists,
                         std::vector<std::string> reason) {
  SchemeSpec s;
  s.kind = kind;
  s.label = std::move(label);
  s.structure_count = n;
  s.stabilizer_order = stab;
  s.edges_per_structure = eps;
  s.axis_fold = fold;
  s.stab_mode = mode;
  s.exists = std::move(exists);
  s.reason = std::move(reason);
  return s;
}

inline SchemeSpec scheme_everywhere(SchemeKind kind, std::string label, int n, int stab, int eps,
                                    int fold, StabilizerMode mode, int slots) {
  return scheme(kind, std::move(label), n, stab, eps, fold, mode,
                std::vector<char>(slots, 1), std::vector<std::string>(slots));
}

inline std::vector<std::string> letter_variants(int count) {
  std::vector<std::string> v;
  for (int i = 0; i < count; ++i) v.push_back(std::string(1, static_cast<char>('A' + i)));
  return v;
}

}  // namespace detail

// The eighteen polypolyhedra, in the order they are usually tabulated:
// the six with polyhedral components first, then the twelve with polygon
// components. Scheme data covers matching, visual-band, and
// monochromatic-component colorings where each is known.
inline const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = [] {
    using detail::scheme;
    using detail::scheme_everywhere;
    using enum SchemeKind;
    using enum StabilizerMode;
    std::vector<CatalogEntry> all;

    const auto add = [&](std::string key, std::string name, std::string code, GroupKind g,
                         bool vt, bool polygon, int comps, int epc,
                         std::vector<std::string> variants, std::vector<SchemeSpec> schemes) {
      CatalogEntry e;
      e.key = std::move(key);
      e.name = std::move(name);
      e.lang_code = std::move(code);
      e.group = g;
      e.group_order = g == GroupKind::tetrahedral ? 12 : g == GroupKind::cuboctahedral ? 24 : 60;
      e.vertex_transitive = vt;
      e.polygon_components = polygon;
      e.component_count = comps;
      e.edges_per_component = epc;
      e.variants = std::move(variants);
      e.schemes = std::move(schemes);
      all.push_back(std::move(e));
    };

    const auto icosi = GroupKind::icosidodecahedral;
    const auto cubocta = GroupKind::cuboctahedral;
    const auto tetra = GroupKind::tetrahedral;

    add("fit", "Five Intersecting Tetrahedra", "5-4-3", icosi, true, false, 5, 6, {},
        {scheme_everywhere(visual_band, "band", 6, 10, 5, 5, line, 1),
         scheme_everywhere(monochromatic_components, "mono", 5, 12, 6, 0, component, 1)});

    add("finh", "Five Intersecting Non-convex Hexahedra", "5-6-4", icosi, false, false, 5, 12, {},
        {scheme_everywhere(matching, "matching", 12, 5, 5, 5, cyclic, 1),
         scheme(visual_band, "visual-band", 0, 0, 0, 0, line, {0}, {"no visual bands"}),
         scheme_everywhere(monochromatic_components, "mono", 5, 12, 12, 0, component, 1)});

    add("fib3p", "Four Intersecting Bi-3-pyramids (no base edges)", "4-3-4", cubocta, false,
        false, 4, 6, {"A", "B"},
        {scheme_everywhere(matching, "matching", 8, 3, 3, 3, cyclic, 2),
         scheme(visual_band, "visual-band", 4, 6, 6, 3, line, {1, 0},
                {"", "no visual band: two struts of the same color would meet at each 3-valent "
                     "vertex"}),
         scheme_everywhere(monochromatic_components, "mono", 4, 6, 6, 3, line, 2)});

    add("fiet", "Five Intersecting Edge-dented Tetrahedra", "5-4-6", icosi, false, false, 5, 12,
        {"A", "B"},
        {scheme_everywhere(matching, "matching", 12, 5, 5, 5, cyclic, 2),
         scheme(visual_band, "visual-band", 6, 10, 10, 5, line, {0, 1}, {"no visual band", ""}),
         scheme_everywhere(monochromatic_components, "mono", 5, 12, 12, 0, component, 2)});

    add("tib3p", "Ten Intersecting Bi-3-pyramids (no base edges)", "10-3-4", icosi, false, false,
        10, 6, {"A", "B", "C"},
        {scheme_everywhere(matching, "matching", 6, 10, 10, 5, line, 3),
         scheme(visual_band, "visual-band", 6, 10, 10, 5, line, {1, 0, 1},
                {"", "no visual band", ""}),
         scheme_everywhere(monochromatic_components, "mono", 10, 6, 6, 3, line, 3)});

    add("sib5p", "Six Intersecting Bi-5-pyramids (no base edges)", "6-5-4", icosi, false, false,
        6, 10, {"A1", "A2", "B1", "B2"},
        {scheme_everywhere(matching, "matching", 12, 5, 5, 5, cyclic, 4),
         scheme(visual_band, "visual-band", 0, 0, 0, 0, line, {0, 0, 0, 0},
                {"no visual band: 2 does not divide 5", "no visual band: 2 does not divide 5",
                 "no visual band: pairs not incident", "no visual band: pairs not incident"}),
         scheme_everywhere(monochromatic_components, "mono", 6, 10, 10, 5, line, 4)});

    add("4-triangles-co", "Four Interlaced Triangles", "4-1-3", cubocta, true, true, 4, 3, {},
        {scheme_everywhere(monochromatic_components, "mono", 4, 6, 3, 3, line, 1)});
    add("6-pentagons", "Six Interlaced Pentagons", "6-1-5", icosi, true, true, 6, 5, {},
        {scheme_everywhere(monochromatic_components, "mono", 6, 10, 5, 5, line, 1)});
    add("10-triangles", "Ten Interlaced Triangles", "10-1-3", icosi, true, true, 10, 3, {},
        {scheme_everywhere(monochromatic_components, "mono", 10, 6, 3, 3, line, 1)});
    add("3-squares", "Three Interlaced Squares", "3-1-4", tetra, false, true, 3, 4, {},
        {scheme_everywhere(monochromatic_components, "mono", 3, 4, 4, 2, line, 1)});
    add("4-hexagons", "Four Interlaced Hexagons", "4-1-6", cubocta, false, true, 4, 6, {},
        {scheme_everywhere(monochromatic_components, "mono", 4, 6, 6, 3, line, 1)});
    add("6-decagons", "Six Interlaced Decagons", "6-1-10", icosi, false, true, 6, 10, {},
        {scheme_everywhere(monochromatic_components, "mono", 6, 10, 10, 5, line, 1)});
    add("10-hexagons", "Ten Interlaced Hexagons", "10-1-6", icosi, false, true, 10, 6, {},
        {scheme_everywhere(monochromatic_components, "mono", 10, 6, 6, 3, line, 1)});
    add("4-triangles-t", "Four Interlaced Triangles", "4-1-3", tetra, true, true, 4, 3, {},
        {scheme_everywhere(monochromatic_components, "mono", 4, 3, 3, 3, cyclic, 1)});
    add("6-squares", "Six Interlaced Squares", "6-1-4", cubocta, true, true, 6, 4,
        detail::letter_variants(2),
        {scheme_everywhere(monochromatic_components, "mono", 6, 4, 4, 4, cyclic, 2)});
    add("8-triangles", "Eight Interlaced Triangles", "8-1-3", cubocta, true, true, 8, 3,
        detail::letter_variants(3),
        {scheme_everywhere(monochromatic_components, "mono", 8, 3, 3, 3, cyclic, 3)});
    add("12-pentagons", "Twelve Interlaced Pentagons", "12-1-5", icosi, true, true, 12, 5,
        detail::letter_variants(5),
        {scheme_everywhere(monochromatic_components, "mono", 12, 5, 5, 5, cyclic, 5)});
    add("20-triangles", "Twenty Interlaced Triangles", "20-1-3", icosi, true, true, 20, 3,
        detail::letter_variants(23),
        {scheme_everywhere(monochromatic_components, "mono", 20, 3, 3, 3, cyclic, 23)});

    return all;
  }();
  return entries;
}

inline const CatalogEntry* find_entry(const std::string& key) {
  for (const CatalogEntry& e : catalog()) {
    if (e.key == key) return &e;
  }
  return nullptr;
}

inline const SchemeSpec* find_scheme(const CatalogEntry& entry, const std::string& label) {
  for (const SchemeSpec& s : entry.schemes) {
    if (s.label == label) return &s;
  }
  return nullptr;
}

inline int variant_slot(const CatalogEntry& entry, const std::string& label) {
  if (entry.variants.empty()) return label.empty() ? 0 : -1;
  for (int i = 0; i < static_cast<int>(entry.variants.size()); ++i) {
    if (entry.variants[i] == label) return i;
  }
  return -1;
}

// True when k colors can tile a component evenly.
inline bool divisibility_check(const CatalogEntry& entry, int k) {
  return k >= 1 && entry.edges_per_component % k == 0;
}

namespace detail {

inline const Solid& cached_solid(SolidKind kind) {
  static const std::map<SolidKind, Solid> solids = [] {
    std::map<SolidKind, Solid> m;
    for (SolidKind k : {SolidKind::tetrahedron, SolidKind::cube, SolidKind::dodecahedron}) {
      m.emplace(k, build_solid(k));
    }
    return m;
  }();
  return solids.at(kind);
}

inline const RotationGroup& cached_group(SolidKind kind) {
  static const std::map<SolidKind, RotationGroup> groups = [] {
    std::map<SolidKind, RotationGroup> m;
    for (SolidKind k : {SolidKind::tetrahedron, SolidKind::cube, SolidKind::dodecahedron}) {
      m.emplace(k, rotation_group(cached_solid(k)));
    }
    return m;
  }();
  return groups.at(kind);
}

inline const PolyModel& cached_fit(Chirality chirality = Chirality::left) {
  static const PolyModel left = build_fit(Chirality::left);
  static const PolyModel right = build_fit(Chirality::right);
  return chirality == Chirality::left ? left : right;
}

// Elements whose edge action maps the first compound component onto itself.
inline std::vector<int> component_stabilizer(const PolyModel& model) {
  std::vector<int> stab;
  for (int g = 0; g < model.group.order(); ++g) {
    const Perm& p = model.edge_action[g];
    bool keeps = true;
    for (int e = 0; e < model.edge_count() && keeps; ++e) {
      if (model.component_of[e] == 0 && model.component_of[p(e)] != 0) keeps = false;
    }
    if (keeps) stab.push_back(g);
  }
  return stab;
}

// The band action computed from geometry, wrapped as a coset scheme and
// cross-checked against it: the map "coset of g -> image of band 0 under g"
// must be an equivariant bijection.
inline CosetScheme fit_band_scheme() {
  const PolyModel& fit = cached_fit();
  const auto bands = band_decomposition(fit);
  std::vector<std::vector<int>> parts;
  for (const Band& b : bands) parts.push_back(b.edge_indices);
  const StructureSystem sys = induced_structure_system(fit.edge_action, parts);

  const std::vector<int> stab = stabilizer_of_point(sys.action, 0);
  CosetScheme cs = coset_action(fit.group, stab);
  const int n = cs.action.point_count();
  if (n != sys.action.point_count()) throw Error("band action disagrees with the coset model");
  std::vector<int> to_band(n, -1);
  for (int p = 0; p < n; ++p) to_band[p] = sys.action.perms[cs.coset_rep[p]](0);
  std::vector<char> hit(n, 0);
  for (int b : to_band) {
    if (b < 0 || b >= n || hit[b]) throw Error("band action disagrees with the coset model");
    hit[b] = 1;
  }
  for (int g = 0; g < fit.group.order(); ++g) {
    for (int p = 0; p < n; ++p) {
      if (to_band[cs.action.perms[g](p)] != sys.action.perms[g](to_band[p])) {
        throw Error("band action disagrees with the coset model");
      }
    }
  }
  return cs;
}

}  // namespace detail

// The permutation action of the entry's group on the scheme's structures,
// realized as a coset action on a stabilizer of the declared order. The FIT
// band scheme is additionally grounded in the geometric band decomposition.
inline CosetScheme scheme_action(const CatalogEntry& entry, const SchemeSpec& scheme) {
  if (!scheme.exists_anywhere() || scheme.structure_count == 0) {
    throw Error("scheme has no structural data");
  }
  if (entry.key == "fit" && scheme.kind == SchemeKind::visual_band) {
    return detail::fit_band_scheme();
  }
  const RotationGroup& group = detail::cached_group(carrier_solid(entry.group));
  std::vector<int> stab;
  switch (scheme.stab_mode) {
    case StabilizerMode::cyclic: {
      const auto axes = rotation_axes(group, scheme.axis_fold);
      stab = cyclic_subgroup(group, axes.front().generator_index);
      break;
    }
    case StabilizerMode::line: {
      const auto axes = rotation_axes(group, scheme.axis_fold);
      stab = line_stabilizer(group, axes.front().direction);
      const auto cyc = cyclic_subgroup(group, axes.front().generator_index);
      for (int g : cyc) {
        if (std::find(stab.begin(), stab.end(), g) == stab.end()) {
          throw NoSuchSubgroup("line stabilizer does not contain its own axial rotation");
        }
      }
      break;
    }
    case StabilizerMode::component: {
      stab = detail::component_stabilizer(detail::cached_fit());
      break;
    }
  }
  if (static_cast<int>(stab.size()) != scheme.stabilizer_order) {
    throw NoSuchSubgroup("no stabilizer of the declared order for this scheme");
  }
  CosetScheme cs = coset_action(group, stab);
  if (cs.action.point_count() != scheme.structure_count) {
    throw NoSuchSubgroup("coset action does not have the declared number of structures");
  }
  return cs;
}

// Number of rotation-inequivalent colorings that give each structure its own
// color. The monochromatic scheme admits exactly one coloring by definition.
inline BigInt count_scheme_colorings(const CatalogEntry& entry, const SchemeSpec& scheme) {
  if (scheme.kind == SchemeKind::monochromatic_components) return 1;
  return burnside_rainbow_count(scheme_action(entry, scheme).action);
}

}  // namespace polypoly
