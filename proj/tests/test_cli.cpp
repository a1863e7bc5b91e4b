#include "doctest.h"

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "deltacx/constructions.hpp"
#include "deltacx/serialization.hpp"

using namespace deltacx;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(DELTACX_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("deltacx_cli_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string write(const std::string& name, const std::string& text) const {
    const fs::path p = path / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string write(const std::string& name, const RegularDeltaComplex& k) const {
    return write(name, dump(to_json(make_document(k))));
  }
};

std::string read(const std::string& p) {
  std::ifstream in(p);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("homology of the two-sphere") {
  TempDir t;
  const std::string s2 = t.write("s2.json", boundary_simplex(3));
  const Run r = run("homology " + s2);
  CHECK(r.code == 0);
  CHECK(r.out == "H̃₂ = ℤ\n");
  const Run z2 = run("homology " + s2 + " --coefficients z2 --unreduced");
  CHECK(z2.code == 0);
  CHECK(z2.out.find("H₀") != std::string::npos);
}

TEST_CASE("classify the non-simplicial two-sphere") {
  TempDir t;
  const Run r = run("classify " + t.write("nss.json", nonsimplicial_sphere(2)));
  CHECK(r.code == 0);
  CHECK(r.out.rfind("StructurallyNonSimplicialSphere + ConsistentWithSphere(2)\n", 0) == 0);
}

TEST_CASE("exit codes") {
  TempDir t;
  CHECK(run("validate " + t.write("ok.json", standard_simplex(2))).code == 0);
  CHECK(run("validate " + t.write("bad.json", "{\"cells\": 3}")).code == 2);
  CHECK(run("validate " + t.write("junk.json", "not json")).code == 2);
  CHECK(run("validate " + (t.path / "missing.json").string()).code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("verify-table --n 7 --r 1").code == 2);
  CHECK(run("verify-table --n 4 --r 5").code == 2);

  // two loops on one vertex: facets agree, so the complex is not regular
  const std::string loop = t.write("loop.json", R"({"vertices": [0], "cells": [
    {"id": 0, "dim": 0, "vertices": [0], "facets": []},
    {"id": 1, "dim": 1, "vertices": [0, 0], "facets": [0, 0]}]})");
  CHECK(run("validate " + loop).code == 1);
  CHECK(run("homology " + loop).code == 1);
  CHECK(run("quotient " + t.write("plain.json", standard_simplex(1))).code == 2);
}

TEST_CASE("quotient then homology") {
  TempDir t;
  const std::string spec = t.write("q.json", R"({"kind": "quadric_example", "n": 4})");
  const std::string built = (t.path / "built.json").string();
  REQUIRE(run("build " + spec + " --out " + built).code == 0);
  CHECK(run("validate " + built).code == 0);
  const std::string quo = (t.path / "quo.json").string();
  REQUIRE(run("quotient " + built + " --out " + quo).code == 0);
  const Run h = run("homology " + quo);
  CHECK(h.code == 0);
  CHECK(h.out == "H̃₃ = ℤ/2\n");
  const Run c = run("classify " + quo);
  CHECK(c.out.rfind("ConsistentWithRP2JoinSphere(1)", 0) == 0);
}

TEST_CASE("output is byte-deterministic") {
  TempDir t;
  const std::string spec =
      t.write("p.json", R"({"kind": "product_hyperplanes", "factor_dims": [2, 2], "divisor_counts": [3, 3]})");
  const Run a = run("build " + spec);
  const Run b = run("build " + spec);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const std::string doc = t.write("doc.json", a.out);
  CHECK(run("subdivide " + doc).out == run("subdivide " + doc).out);
  CHECK(run("classify --json " + doc).out == run("classify --json " + doc).out);

  const std::string one = (t.path / "t1.json").string(), two = (t.path / "t2.json").string();
  const Run t1 = run("verify-table --n 4 --r 2 --out " + one);
  const Run t2 = run("verify-table --n 4 --r 2 --out " + two);
  CHECK(t1.code == 0);
  CHECK(t1.out == t2.out);
  CHECK(read(one) == read(two));
  CHECK(t1.out.find("overall: PASS") != std::string::npos);
}

TEST_CASE("link, join and subdivide documents") {
  TempDir t;
  const std::string s1 = t.write("s1.json", boundary_simplex(2));
  const Run j = run("join " + s1 + " " + s1);
  REQUIRE(j.code == 0);
  const ComplexDocument torus_free = parse_complex_document(Json::parse(j.out));
  CHECK(is_isomorphic(torus_free.complex, join(boundary_simplex(2), boundary_simplex(2))).has_value());

  const std::string s3 = t.write("s3.json", boundary_simplex(4));
  const Run l = run("link " + s3 + " 0");
  REQUIRE(l.code == 0);
  CHECK(is_isomorphic(parse_complex_document(Json::parse(l.out)).complex, boundary_simplex(3))
            .has_value());
  CHECK(run("link " + s3 + " 9999").code != 0);

  const Run sd = run("subdivide " + s1);
  REQUIRE(sd.code == 0);
  CHECK(parse_complex_document(Json::parse(sd.out)).complex.f_vector() ==
        std::vector<std::size_t>{6, 6});
}
