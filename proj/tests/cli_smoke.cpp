// Copyright 2026 the liemult authors
// SPDX-License-Identifier: Apache-2.0
//
// End to end checks of the installed command line surface. The binary path
// comes in through LIEMULT_CLI_PATH at compile time.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
  int status = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(LIEMULT_CLI_PATH) + " " + args + " 2>/dev/null";
  RunResult r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  int rc = pclose(p);
  r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return r;
}

}  // namespace

TEST_CASE("partition values") {
  RunResult r = run("kpf --family B --rank 2 --basis cano --weight 1,1");
  CHECK(r.status == 0);
  CHECK(r.out == "3\n");
}

TEST_CASE("weight multiplicity in the adjoint") {
  RunResult r = run(
      "mult --family A --rank 2 --lambda 1,0,-1 --mu 0,0,0");
  CHECK(r.status == 0);
  CHECK(r.out == "2\n");
}

TEST_CASE("tensor coefficient of a pinned example") {
  RunResult r = run(
      "tensor --family A --rank 4 --lambda 9,7,3,0,0 --mu 9,9,3,2,0 "
      "--nu 10,9,9,8,6");
  CHECK(r.status == 0);
  CHECK(r.out == "2\n");
}

TEST_CASE("fundamental basis is the default away from type A") {
  RunResult r = run(
      "tensor --family B --rank 3 --lambda 46,42,38 --mu 38,36,42 "
      "--nu 41,36,44");
  CHECK(r.status == 0);
  CHECK(r.out == "354440672\n");
}

TEST_CASE("chamber count") {
  RunResult r = run("chambers --family B --rank 3");
  CHECK(r.status == 0);
  CHECK(r.out == "23\n");
}

TEST_CASE("basis conversion") {
  RunResult r = run("convert --family B --rank 3 --basis funda --weight 0,15,5");
  CHECK(r.status == 0);
  CHECK(r.out == "35/2,35/2,5/2\n");
  RunResult back =
      run("convert --family B --rank 3 --basis cano --weight 35/2,35/2,5/2");
  CHECK(back.status == 0);
  CHECK(back.out == "0,15,5\n");
}

TEST_CASE("json output carries the query and the same value") {
  RunResult r = run(
      "mult --family A --rank 2 --lambda 1,0,-1 --mu 0,0,0 --output json");
  CHECK(r.status == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["value"] == "2");
  CHECK(j["query"]["subcommand"] == "mult");
  CHECK(j["query"]["family"] == "A");
  CHECK(j["query"]["rank"] == 2);
}

TEST_CASE("stretched tensor quasipolynomial") {
  RunResult r = run(
      "tensor-poly --family B --rank 3 --lambda 0,15,5 --mu 12,15,3 "
      "--nu 6,15,6 --stretch t");
  CHECK(r.status == 0);
  CHECK(r.out.find("68339/64*t^5") != std::string::npos);
  CHECK(r.out.find("base point check") != std::string::npos);
}

TEST_CASE("stretched partition function") {
  RunResult r = run(
      "kpf-poly --family A --rank 2 --basis cano --weight 1,0,-1 --stretch t");
  CHECK(r.status == 0);
  CHECK(r.out.find("t") != std::string::npos);  // k(t theta) = t + 1
}

TEST_CASE("selftest runs clean") {
  RunResult r = run("selftest");
  CHECK(r.status == 0);
  CHECK(r.out.find("selftest passed") != std::string::npos);
}

TEST_CASE("usage errors exit with status two") {
  CHECK(run("kpf --family Z --rank 2 --weight 1,1").status == 2);
  CHECK(run("kpf --family B --rank 2 --weight 1,1,1 --basis cano").status == 2);
  CHECK(run("mult --family A --rank 2 --lambda 1,0,-1").status == 2);
  CHECK(run("nonsense").status == 2);
}

TEST_CASE("cached and cold runs print identical output") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "liemult-cli-cache-test";
  fs::remove_all(dir);
  std::string args =
      "mult-poly --family B --rank 2 --lambda 3,1 --mu 1,1 --stretch t "
      "--cache-dir " +
      dir.string();
  RunResult cold = run(args);
  RunResult warm = run(args);
  CHECK(cold.status == 0);
  CHECK(cold.out == warm.out);
  bool cache_written = fs::exists(dir) && !fs::is_empty(dir);
  CHECK(cache_written);
  RunResult nocache = run(args + " --no-cache");
  CHECK(nocache.out == cold.out);
  fs::remove_all(dir);
}
