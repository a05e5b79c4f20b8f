#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>
#include <vector>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout and stderr interleaved
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(POLYPOLY_BIN) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  char buf[4096];
  size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) result.output.append(buf, n);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

std::string temp_base(const char* tag) {
  return "cli_" + std::string(tag) + "_" + std::to_string(::getpid());
}

}  // namespace

TEST_CASE("list prints the whole catalog") {
  const RunResult r = run("list");
  CHECK(r.exit_code == 0);
  const auto lines = lines_of(r.output);
  CHECK(lines.size() == 18);
  CHECK(r.output.find("Five Intersecting Tetrahedra | icosidodecahedral | vertex transitive") !=
        std::string::npos);
  bool fib3p_variants = false;
  for (const std::string& line : lines) {
    if (line.rfind("fib3p:", 0) == 0) fib3p_variants = line.find("variants A,B") != std::string::npos;
  }
  CHECK(fib3p_variants);
}

TEST_CASE("list structured format") {
  const RunResult r = run("list --format structured");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("entry fit\n") != std::string::npos);
  CHECK(r.output.find("group icosidodecahedral\n") != std::string::npos);
}

TEST_CASE("count command") {
  CHECK(run("count fit --scheme band").output == "12\n");
  CHECK(run("count fit --scheme band").exit_code == 0);
  CHECK(run("count fiet --variant A --scheme matching").output == "7983360\n");
  CHECK(run("count fib3p --variant A --scheme matching").output == "1680\n");
  CHECK(run("count fib3p --variant A --scheme visual-band").output == "1\n");
  CHECK(run("count tib3p --variant C --scheme matching").output == "12\n");
  CHECK(run("count 6-decagons --scheme mono").output == "1\n");
}

TEST_CASE("count errors") {
  CHECK(run("count nosuchmodel --scheme mono").exit_code == 2);
  CHECK(run("count fit --scheme nosuchscheme").exit_code == 2);
  CHECK(run("count fiet --scheme matching").exit_code == 2);  // missing variant

  const RunResult nonexistent = run("count sib5p --variant B1 --scheme visual-band");
  CHECK(nonexistent.exit_code == 3);
  CHECK(nonexistent.output.find("no visual band: pairs not incident") != std::string::npos);

  const RunResult divides = run("count sib5p --variant A1 --scheme visual-band");
  CHECK(divides.exit_code == 3);
  CHECK(divides.output.find("2 does not divide 5") != std::string::npos);
}

TEST_CASE("count explain invariant") {
  const RunResult r = run("count fit --scheme band --explain");
  REQUIRE(r.exit_code == 0);
  long long total = 0, group_order = 0, elements = 0;
  long long printed = -1, total_line = -1;
  for (const std::string& line : lines_of(r.output)) {
    std::istringstream in(line);
    std::string tag;
    in >> tag;
    if (tag == "term") {
      std::string cycle_type, kw;
      long long count = 0, fixed = 0;
      // cycle type may contain spaces; scan to the "elements" keyword
      while (in >> kw && kw != "elements") cycle_type += kw;
      in >> count >> kw >> fixed;
      total += count * fixed;
      elements += count;
    } else if (tag == "group-order") {
      in >> group_order;
    } else if (tag == "total-fixed") {
      in >> total_line;
    } else {
      std::istringstream num(line);
      num >> printed;
    }
  }
  CHECK(group_order == 60);
  CHECK(elements == 60);
  CHECK(total == total_line);
  CHECK(total / group_order == printed);
  CHECK(printed == 12);
}

TEST_CASE("decompose command") {
  const RunResult d5 = run("decompose dodecahedron 5");
  CHECK(d5.exit_code == 0);
  CHECK(d5.output.find("2 decompositions") != std::string::npos);
  CHECK(d5.output.find("6 matchings x 5 edges") != std::string::npos);

  const RunResult t2 = run("decompose tetrahedron 2");
  CHECK(t2.exit_code == 0);
  CHECK(t2.output.find("1 decompositions") != std::string::npos);
  CHECK(t2.output.find("3 matchings x 2 edges") != std::string::npos);

  const RunResult d3 = run("decompose dodecahedron 3");
  CHECK(d3.exit_code == 0);
  CHECK(d3.output.find("22 decompositions") != std::string::npos);
  CHECK(d3.output.find("10 matchings x 3 edges") != std::string::npos);

  // deterministic output
  CHECK(run("decompose dodecahedron 5").output == d5.output);

  const RunResult structured = run("decompose cube 3 --format structured");
  CHECK(structured.exit_code == 0);
  CHECK(structured.output.rfind("polypoly/1 decompositions\n", 0) == 0);
  CHECK(structured.output.find("solid cube\n") != std::string::npos);

  CHECK(run("decompose cube 7").exit_code == 2);
  CHECK(run("decompose octahedron 3").exit_code == 2);
  CHECK(run("decompose tetrahedron x").exit_code == 2);
}

TEST_CASE("export verify round trip") {
  const std::string base = temp_base("roundtrip");
  const RunResult exported = run("export fit band 0 --out " + base);
  REQUIRE(exported.exit_code == 0);
  CHECK(exported.output.find("wrote " + base + ".coloring") != std::string::npos);

  const RunResult verified = run("verify " + base + ".coloring");
  CHECK(verified.exit_code == 0);
  CHECK(verified.output == "SYMMETRIC\n");

  // obj references its palette
  std::ifstream obj(base + ".obj");
  REQUIRE(obj.good());
  std::stringstream buf;
  buf << obj.rdbuf();
  CHECK(buf.str().find("mtllib " + base + ".mtl") != std::string::npos);
  CHECK(buf.str().find("usemtl red") != std::string::npos);

  for (const char* ext : {".coloring", ".obj", ".mtl"}) {
    std::remove((base + ext).c_str());
  }
}

TEST_CASE("export determinism and index range") {
  const std::string a = temp_base("deta");
  const std::string b = temp_base("detb");
  REQUIRE(run("export dodecahedron matching5 3 --out " + a).exit_code == 0);
  REQUIRE(run("export dodecahedron matching5 3 --out " + b).exit_code == 0);
  std::ifstream fa(a + ".coloring"), fb(b + ".coloring");
  std::stringstream sa, sb;
  sa << fa.rdbuf();
  sb << fb.rdbuf();
  CHECK(sa.str() == sb.str());
  for (const std::string& base : {a, b}) {
    for (const char* ext : {".coloring", ".obj", ".mtl"}) std::remove((base + ext).c_str());
  }

  CHECK(run("export fit band 12 --out oob").exit_code == 2);
  CHECK(run("export fit nosuch 0 --out oob").exit_code == 2);
  CHECK(run("export cube band 0 --out oob").exit_code == 2);
}

TEST_CASE("verify detects a broken coloring") {
  const std::string base = temp_base("broken");
  REQUIRE(run("export fit band 0 --out " + base).exit_code == 0);

  std::ifstream in(base + ".coloring");
  std::stringstream buf;
  buf << in.rdbuf();
  in.close();
  std::string text = buf.str();

  // swap the colors of the first two edges (they lie in different bands)
  auto lines = lines_of(text);
  std::vector<size_t> edge_lines;
  for (size_t i = 0; i < lines.size(); ++i) {
    if (lines[i].rfind("e ", 0) == 0) edge_lines.push_back(i);
  }
  REQUIRE(edge_lines.size() == 30);
  auto& first = lines[edge_lines[0]];
  auto& second = lines[edge_lines[1]];
  std::swap(first[first.size() - 1], second[second.size() - 1]);
  std::ofstream out(base + ".coloring");
  for (const std::string& line : lines) out << line << "\n";
  out.close();

  const RunResult verified = run("verify " + base + ".coloring");
  CHECK(verified.exit_code == 1);
  CHECK(verified.output.find("NOT SYMMETRIC") != std::string::npos);
  CHECK(verified.output.find("element ") != std::string::npos);
  CHECK(verified.output.find("class ") != std::string::npos);
  CHECK(verified.output.find("image:") != std::string::npos);

  for (const char* ext : {".coloring", ".obj", ".mtl"}) {
    std::remove((base + ext).c_str());
  }
}

TEST_CASE("verify usage errors") {
  CHECK(run("verify /nonexistent/path.coloring").exit_code == 2);

  const std::string base = temp_base("garbage");
  std::ofstream out(base + ".coloring");
  out << "not a document\n";
  out.close();
  CHECK(run("verify " + base + ".coloring").exit_code == 2);
  std::remove((base + ".coloring").c_str());
}

TEST_CASE("chirality flag round trip") {
  const std::string base = temp_base("chiral");
  REQUIRE(run("export fit band 0 --seed-chirality right --out " + base).exit_code == 0);
  // auto-detection tries both mirror images
  CHECK(run("verify " + base + ".coloring").exit_code == 0);
  CHECK(run("verify " + base + ".coloring --seed-chirality right").exit_code == 0);
  CHECK(run("verify " + base + ".coloring --seed-chirality left").exit_code == 2);
  for (const char* ext : {".coloring", ".obj", ".mtl"}) {
    std::remove((base + ext).c_str());
  }
}

TEST_CASE("usage exit codes") {
  CHECK(run("").exit_code == 2);
  CHECK(run("nosuchcommand").exit_code == 2);
  CHECK(run("count").exit_code == 2);
  CHECK(run("list --format yaml").exit_code == 2);
}
