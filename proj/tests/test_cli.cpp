#include <doctest.h>

#include <cstdlib>

#include "../tools/cli.hpp"
#include "superchar/json_io.hpp"

using superchar::cli::run;

TEST_CASE("diagram subcommand renders the principal diagrams") {
  auto r = run({"diagram", "gl:3,3", "--weight", "0,0,0/0,0,0"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("0xxx") == 0);
  CHECK(r.out.find("Kostant") != std::string::npos);

  auto r2 = run({"diagram", "ospO:2,2", "--weight", "0,0/0,0"});
  CHECK(r2.out.find("(-)x^2") == 0);

  auto r3 = run({"diagram", "gl:2,2", "--diagram", "0x>o<", "--format", "json"});
  CHECK(r3.exit_code == 0);
  CHECK(r3.out.find("\"schema\":\"v1\"") != std::string::npos);
}

TEST_CASE("char subcommand lists three Euler terms for (s;1)") {
  auto r = run({"char", "gl:2,2", "--weight", "1,0/0,-1", "--basis", "euler"});
  CHECK(r.exit_code == 0);
  int terms = 0;
  for (size_t p = 0; (p = r.out.find(" E[", p)) != std::string::npos; ++p) ++terms;
  CHECK(terms == 3);
  CHECK(r.out.find("sdim 2") != std::string::npos);

  auto rj = run({"char", "gl:2,2", "--weight", "1,0/0,-1", "--format", "json"});
  CHECK(rj.out.find("\"dim\":14") != std::string::npos);
}

TEST_CASE("ds subcommand and exit codes") {
  auto r = run({"ds", "ospE:2,2", "--weight", "0,2", "--rank", "1", "--format", "json"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"sigma_pair\":true") != std::string::npos);

  // defaults without a provider: the simple-module image fails loudly
  auto r4 = run({"ds", "ospE:2,2", "--weight", "0,2", "--rank", "2", "--simple"});
  CHECK(r4.exit_code == 4);

  // gl side works natively
  auto rg = run({"ds", "gl:2,2", "--weight", "0,0/0,0", "--rank", "1", "--simple"});
  CHECK(rg.exit_code == 0);
  CHECK(rg.out.find("sdim 1") != std::string::npos);

  auto bad = run({"ds", "gl:2,2", "--weight", "0,0/0,0", "--rank", "7"});
  CHECK(bad.exit_code == 3);
  auto junk = run({"ds", "gl:2,2", "--weight", "zebra"});
  CHECK(junk.exit_code == 2);
}

TEST_CASE("graph subcommand with caching") {
  std::string dir = "/tmp/superchar-cache-test";
  setenv("SUPERCHAR_CACHE_DIR", dir.c_str(), 1);
  std::string cmd_out;
  for (int pass = 0; pass < 2; ++pass) {
    auto r = run({"graph", "gl:2,2", "--seed", "1,0/0,-1", "--max-norm-gr", "2",
                  "--format", "json"});
    CHECK(r.exit_code == 0);
    if (pass == 0)
      cmd_out = r.out;
    else
      CHECK(r.out == cmd_out);  // cache hit yields identical bytes
  }
  auto dot = run({"graph", "gl:2,2", "--seed", "1,0/0,-1", "--max-norm-gr", "2",
                  "--format", "dot", "--no-cache"});
  CHECK(dot.out.find("digraph") != std::string::npos);
  unsetenv("SUPERCHAR_CACHE_DIR");

  auto none = run({"graph", "gl:2,2", "--format", "dot"});
  CHECK(none.exit_code == 2);
}

TEST_CASE("denom-check subcommand") {
  auto r = run({"denom-check", "ospE:2,2", "--format", "json"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"j\":4") != std::string::npos);
}

TEST_CASE("weight json round trip") {
  superchar::Weight w;
  w.eps = {superchar::Rat(1, 2), superchar::Rat(-3)};
  w.delta = {superchar::Rat(5)};
  CHECK(superchar::weight_from_json(superchar::weight_json(w)) == w);
}

TEST_CASE("selftest subcommand reports every criterion") {
  auto r = run({"selftest"});
  CHECK(r.exit_code == 0);
  for (int c = 1; c <= 12; ++c)
    CHECK(r.out.find("\n[")) ;  // shape only; per-criterion lines follow
  int lines = 0;
  for (size_t p = 0; (p = r.out.find("[PASS]", p)) != std::string::npos; ++p) ++lines;
  CHECK(lines >= 12);
  CHECK(r.out.find("[SKIP]") != std::string::npos);
}
