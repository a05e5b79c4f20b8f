#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "polypoly/catalog.hpp"
#include "polypoly/coloring.hpp"
#include "polypoly/counting.hpp"
#include "polypoly/document.hpp"
#include "polypoly/poly_model.hpp"
#include "polypoly/structures.hpp"

namespace {

using namespace polypoly;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Args {
  std::vector<std::string> positional;
  std::string format = "text";
  bool explain = false;
  std::optional<Chirality> chirality;
  std::string out;
  std::optional<std::string> variant;
  std::optional<std::string> scheme;
};

const char* kUsage =
    "usage: polypoly <command> [options]\n"
    "\n"
    "commands:\n"
    "  list                                  catalog of the 18 models\n"
    "  count <model> [--variant V] --scheme S [--explain]\n"
    "                                        exact number of scheme colorings\n"
    "  decompose <solid> <fold>              axial matching decompositions\n"
    "  verify <file>                         check a coloring document\n"
    "  export <model> <scheme> <index> [--out BASE]\n"
    "                                        write mesh + palette + document\n"
    "\n"
    "options:\n"
    "  --format text|structured              output style for list/decompose\n"
    "  --explain                             print the Burnside term table\n"
    "  --seed-chirality left|right           mirror choice for the fit model\n"
    "  --out BASE                            output basename for export\n"
    "\n"
    "solids: tetrahedron, cube, dodecahedron\n"
    "exportable schemes: band (fit), matching<fold> (solids), mono\n";

Args parse_args(int argc, char** argv) {
  Args args;
  for (int i = 2; i < argc; ++i) {
    const std::string a = argv[i];
    const auto value = [&](const char* flag) -> std::string {
      if (i + 1 >= argc) throw UsageError(std::string(flag) + " needs a value");
      return argv[++i];
    };
    if (a == "--format") {
      args.format = value("--format");
      if (args.format != "text" && args.format != "structured") {
        throw UsageError("--format must be text or structured");
      }
    } else if (a == "--explain") {
      args.explain = true;
    } else if (a == "--seed-chirality") {
      const std::string v = value("--seed-chirality");
      if (v == "left") {
        args.chirality = Chirality::left;
      } else if (v == "right") {
        args.chirality = Chirality::right;
      } else {
        throw UsageError("--seed-chirality must be left or right");
      }
    } else if (a == "--out") {
      args.out = value("--out");
    } else if (a == "--variant") {
      args.variant = value("--variant");
    } else if (a == "--scheme") {
      args.scheme = value("--scheme");
    } else if (a.rfind("--", 0) == 0) {
      throw UsageError("unknown option: " + a);
    } else {
      args.positional.push_back(a);
    }
  }
  return args;
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

int cmd_list(const Args& args) {
  for (const CatalogEntry& e : catalog()) {
    std::vector<std::string> schemes;
    for (const SchemeSpec& s : e.schemes) schemes.push_back(s.label);
    if (args.format == "structured") {
      std::cout << "entry " << e.key << "\n"
                << "name " << e.name << "\n"
                << "code " << e.lang_code << "\n"
                << "group " << group_kind_name(e.group) << "\n"
                << "order " << e.group_order << "\n"
                << "vertex-transitive " << (e.vertex_transitive ? 1 : 0) << "\n"
                << "components " << e.component_count << " x " << e.edges_per_component << "\n"
                << "variants " << (e.variants.empty() ? "-" : join(e.variants, ",")) << "\n"
                << "schemes " << join(schemes, ",") << "\n";
    } else {
      std::cout << e.key << ": " << e.name << " | " << group_kind_name(e.group) << " | "
                << (e.vertex_transitive ? "vertex transitive" : "not vertex transitive") << " | "
                << e.lang_code << " | order " << e.group_order << " | "
                << e.component_count << " x " << e.edges_per_component << " edges | variants "
                << (e.variants.empty() ? "-" : join(e.variants, ",")) << " | schemes "
                << join(schemes, ",") << "\n";
    }
  }
  return 0;
}

int cmd_count(const Args& args) {
  if (args.positional.size() != 1) throw UsageError("count takes exactly one model");
  const CatalogEntry* entry = find_entry(args.positional[0]);
  if (!entry) throw UsageError("unknown model: " + args.positional[0]);

  int slot = 0;
  if (entry->variants.empty()) {
    if (args.variant) throw UsageError(entry->key + " has no variants");
  } else {
    if (!args.variant) {
      throw UsageError(entry->key + " needs --variant (one of " + join(entry->variants, ",") +
                       ")");
    }
    slot = variant_slot(*entry, *args.variant);
    if (slot < 0) throw UsageError("unknown variant: " + *args.variant);
  }

  if (!args.scheme) {
    std::vector<std::string> labels;
    for (const SchemeSpec& s : entry->schemes) labels.push_back(s.label);
    throw UsageError(entry->key + " needs --scheme (one of " + join(labels, ",") + ")");
  }
  const SchemeSpec* scheme = find_scheme(*entry, *args.scheme);
  if (!scheme) throw UsageError("unknown scheme: " + *args.scheme);
  if (!scheme->exists[slot]) {
    std::cerr << scheme->reason[slot] << "\n";
    return 3;
  }

  const BigInt count = count_scheme_colorings(*entry, *scheme);
  if (args.explain) {
    if (scheme->kind == SchemeKind::monochromatic_components) {
      std::cout << "monochromatic components: one coloring by definition\n";
    } else {
      const CosetScheme cs = scheme_action(*entry, *scheme);
      const auto terms = burnside_rainbow_terms(cs.action);
      BigInt total = 0;
      for (const BurnsideTerm& t : terms) {
        std::cout << "term " << t.cycle_type << " elements " << t.element_count << " fixed "
                  << t.fixed_per_element.str() << "\n";
        total += t.element_count * t.fixed_per_element;
      }
      std::cout << "group-order " << cs.action.group_order << "\n";
      std::cout << "total-fixed " << total.str() << "\n";
    }
  }
  std::cout << count.str() << "\n";
  return 0;
}

SolidKind parse_solid(const std::string& name) {
  if (name == "tetrahedron") return SolidKind::tetrahedron;
  if (name == "cube") return SolidKind::cube;
  if (name == "dodecahedron") return SolidKind::dodecahedron;
  throw UsageError("unknown solid: " + name);
}

int cmd_decompose(const Args& args) {
  if (args.positional.size() != 2) throw UsageError("decompose takes <solid> <fold>");
  const SolidKind kind = parse_solid(args.positional[0]);
  int fold = 0;
  try {
    fold = std::stoi(args.positional[1]);
  } catch (const std::exception&) {
    throw UsageError("fold must be an integer");
  }
  const Solid solid = build_solid(kind);
  const RotationGroup group = rotation_group(solid);
  if (fold < 2 || rotation_axes(group, fold).empty()) {
    throw UsageError("no " + std::to_string(fold) + "-fold axes on the " + solid_name(kind));
  }

  std::vector<Decomposition> decomps;
  try {
    decomps = matching_decompositions(solid, fold);
  } catch (const NoDecomposition&) {
    std::cout << (args.format == "structured" ? "count 0" : "no decompositions") << "\n";
    return 0;
  }

  const auto print_edge = [&](int e, const char* indent) {
    const auto& [a, b] = solid.edges[e];
    const Vec3& p = solid.vertices[a];
    const Vec3& q = solid.vertices[b];
    std::cout << indent << format_g12(p.x) << " " << format_g12(p.y) << " " << format_g12(p.z)
              << "  " << format_g12(q.x) << " " << format_g12(q.y) << " " << format_g12(q.z)
              << "\n";
  };

  if (args.format == "structured") {
    std::cout << "polypoly/1 decompositions\n"
              << "solid " << solid_name(kind) << "\n"
              << "fold " << fold << "\n"
              << "count " << decomps.size() << "\n";
    for (size_t d = 0; d < decomps.size(); ++d) {
      std::cout << "decomposition " << d << "\n";
      for (size_t m = 0; m < decomps[d].matchings.size(); ++m) {
        const Matching& match = decomps[d].matchings[m];
        const Vec3& ax = match.axis.direction;
        std::cout << "matching " << m << " axis " << format_g12(ax.x) << " " << format_g12(ax.y)
                  << " " << format_g12(ax.z) << " edges " << match.edge_indices.size() << "\n";
        for (int e : match.edge_indices) print_edge(e, "e ");
      }
    }
  } else {
    std::cout << solid_name(kind) << " fold " << fold << ": " << decomps.size()
              << " decompositions\n";
    for (size_t d = 0; d < decomps.size(); ++d) {
      const auto& matchings = decomps[d].matchings;
      std::cout << "decomposition " << d << ": " << matchings.size() << " matchings x "
                << matchings.front().edge_indices.size() << " edges\n";
      for (size_t m = 0; m < matchings.size(); ++m) {
        const Vec3& ax = matchings[m].axis.direction;
        std::cout << "  matching " << m << " axis " << format_g12(ax.x) << " " << format_g12(ax.y)
                  << " " << format_g12(ax.z) << "\n";
        for (int e : matchings[m].edge_indices) print_edge(e, "    ");
      }
    }
  }
  return 0;
}

PolyModel load_model(const std::string& name, std::optional<Chirality> chirality) {
  if (name == "fit") return build_fit(chirality.value_or(Chirality::left));
  return solid_model(parse_solid(name));
}

int cmd_verify(const Args& args) {
  if (args.positional.size() != 1) throw UsageError("verify takes exactly one file");
  std::ifstream in(args.positional[0]);
  if (!in) throw UsageError("cannot open " + args.positional[0]);
  std::stringstream buf;
  buf << in.rdbuf();
  const ColoringDocument doc = parse_coloring_document(buf.str());

  PolyModel model;
  Coloring coloring;
  if (doc.model == "fit" && !args.chirality) {
    // Document coordinates pin the mirror image; try both.
    try {
      model = build_fit(Chirality::left);
      coloring = bind_coloring(doc, model);
    } catch (const Error&) {
      model = build_fit(Chirality::right);
      coloring = bind_coloring(doc, model);
    }
  } else {
    model = load_model(doc.model, args.chirality);
    coloring = bind_coloring(doc, model);
  }

  const auto witness = check_symmetric(model.edge_action, coloring);
  if (!witness) {
    std::cout << "SYMMETRIC\n";
    return 0;
  }
  std::cout << "NOT SYMMETRIC\n";
  std::cout << "element " << witness->element << "\n";
  std::cout << "class " << witness->color << ":";
  for (int e = 0; e < model.edge_count(); ++e) {
    if (coloring.edge_colors[e] == witness->color) std::cout << " " << e;
  }
  std::cout << "\n";
  std::cout << "image:";
  for (int e : witness->image_edges) std::cout << " " << e;
  std::cout << "\n";
  return 1;
}

// Structures to color for one exportable scheme: the fit's bands, a solid's
// first group-invariant matching decomposition, or whole components.
std::vector<std::vector<int>> export_structures(const PolyModel& model, const std::string& model_name,
                                                const std::string& scheme) {
  if (scheme == "mono") {
    std::vector<std::vector<int>> all(1);
    for (int e = 0; e < model.edge_count(); ++e) all[0].push_back(e);
    return all;
  }
  if (model_name == "fit") {
    if (scheme != "band") throw UsageError("fit schemes: band, mono");
    std::vector<std::vector<int>> parts;
    for (const Band& b : band_decomposition(model)) parts.push_back(b.edge_indices);
    return parts;
  }
  if (scheme.rfind("matching", 0) != 0) {
    throw UsageError("solid schemes: matching<fold>, mono");
  }
  int fold = 0;
  try {
    fold = std::stoi(scheme.substr(8));
  } catch (const std::exception&) {
    throw UsageError("scheme " + scheme + " needs a fold, e.g. matching5");
  }
  const Solid solid = build_solid(parse_solid(model_name));
  if (fold < 2 || rotation_axes(model.group, fold).empty()) {
    throw UsageError("no " + std::to_string(fold) + "-fold axes on the " + model_name);
  }
  for (const Decomposition& d : matching_decompositions(solid, fold)) {
    std::vector<std::vector<int>> parts;
    for (const Matching& m : d.matchings) parts.push_back(m.edge_indices);
    try {
      induced_structure_system(model.edge_action, parts);
      return parts;
    } catch (const Error&) {
      continue;  // family not preserved by the group; try the next one
    }
  }
  throw UsageError("no group-invariant " + std::to_string(fold) + "-fold decomposition");
}

// The k-th lexicographically minimal orbit representative among all
// assignments of n distinct colors to n structures.
std::vector<int> kth_rainbow_labeling(const GroupAction& action, long long k) {
  const int n = action.point_count();
  std::vector<int> labeling(n);
  std::iota(labeling.begin(), labeling.end(), 0);
  do {
    bool minimal = true;
    for (const Perm& p : action.perms) {
      if (apply_to_labeling(p, labeling) < labeling) {
        minimal = false;
        break;
      }
    }
    if (minimal && k-- == 0) return labeling;
  } while (std::next_permutation(labeling.begin(), labeling.end()));
  throw Error("labeling index out of range");
}

int cmd_export(const Args& args) {
  if (args.positional.size() != 3) throw UsageError("export takes <model> <scheme> <index>");
  const std::string& model_name = args.positional[0];
  const std::string& scheme = args.positional[1];
  long long index = -1;
  try {
    index = std::stoll(args.positional[2]);
  } catch (const std::exception&) {
    throw UsageError("index must be an integer");
  }
  if (model_name != "fit" && model_name != "tetrahedron" && model_name != "cube" &&
      model_name != "dodecahedron") {
    throw UsageError("exportable models: fit, tetrahedron, cube, dodecahedron");
  }

  const PolyModel model = load_model(model_name, args.chirality);
  const auto structures = export_structures(model, model_name, scheme);
  const StructureSystem sys = induced_structure_system(model.edge_action, structures);
  const int n = static_cast<int>(structures.size());

  BigInt total = 1;
  if (scheme != "mono") total = burnside_rainbow_count(sys.action);
  if (index < 0 || BigInt(index) >= total) {
    throw UsageError("index out of range: scheme has " + total.str() + " colorings");
  }

  std::vector<int> edge_colors(model.edge_count(), 0);
  if (scheme != "mono") {
    if (factorial(n) > kLabelingGuard) throw TooLarge("too many labelings to enumerate");
    const std::vector<int> labeling = kth_rainbow_labeling(sys.action, index);
    for (int e = 0; e < model.edge_count(); ++e) edge_colors[e] = labeling[sys.structure_of[e]];
  }
  const Coloring coloring = make_coloring(edge_colors);
  const ColoringDocument doc = make_document(model, model_name, "", scheme, coloring);

  std::string base = args.out;
  if (base.empty()) {
    base = model_name + "-" + scheme + "-" + std::to_string(index);
  }
  const auto write_file = [](const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot write " + path);
    out << content;
  };
  const std::string mtl_name = base + ".mtl";
  write_file(base + ".coloring", write_coloring_document(doc));
  write_file(base + ".obj", write_obj(model, coloring, doc.palette, mtl_name));
  write_file(mtl_name, write_mtl(doc.palette));
  std::cout << "wrote " << base << ".coloring\n";
  std::cout << "wrote " << base << ".obj\n";
  std::cout << "wrote " << base << ".mtl\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << kUsage;
    return 2;
  }
  const std::string command = argv[1];
  try {
    const Args args = parse_args(argc, argv);
    if (command == "list") return cmd_list(args);
    if (command == "count") return cmd_count(args);
    if (command == "decompose") return cmd_decompose(args);
    if (command == "verify") return cmd_verify(args);
    if (command == "export") return cmd_export(args);
    std::cerr << "unknown command: " << command << "\n" << kUsage;
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const polypoly::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
