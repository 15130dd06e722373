#include "doctest.h"

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include "json.hpp"

using json = nlohmann::json;

namespace {

struct Run {
  int status;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(EQDEF_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::string data(const std::string& name) { return std::string(EQDEF_DATA) + "/" + name; }

json parsed(const Run& r) {
  json j;
  CHECK_NOTHROW(j = json::parse(r.out));
  return j;
}

}  // namespace

TEST_CASE("dim --case cyclic") {
  const Run r = run("dim --case cyclic " + data("cover_jump3.json"));
  CHECK(r.status == 0);
  const json j = parsed(r);
  CHECK(j["value"] == 3);
  CHECK(j["formula"] == "cyclic");
}

TEST_CASE("dim --case weakly on a non-weakly ramified cover") {
  const Run r = run("dim --case weakly " + data("cover_jump3.json"));
  CHECK(r.status == 2);
  const json j = parsed(r);
  CHECK(j["error"]["code"] == "NotWeaklyRamified");
  CHECK(j["error"]["message"].get<std::string>().find("G_2 nontrivial") != std::string::npos);
}

TEST_CASE("dim on the weakly ramified cover") {
  for (const std::string c : {"cyclic", "weakly", "free-rank", "m-regular"}) {
    const Run r = run("dim --case " + c + " " + data("cover_weak_p5.json"));
    CHECK(r.status == 0);
    CHECK(parsed(r)["value"] == (c == "m-regular" ? 1 : 3));
  }
  // 3 g_Y - 3 + r = -1 although g_X = 4: the tame formula does not apply.
  const Run tame = run("dim --case tame " + data("cover_weak_p5.json"));
  CHECK(tame.status == 1);
  CHECK(parsed(tame)["error"]["code"] == "ConsistencyError");
  const json h = parsed(run("dim --case homology " + data("cover_weak_p5.json")));
  CHECK(h["h0"] == 2);
  CHECK(h["h1"] == 2);
  CHECK(parsed(run("dim --case p-rank --gamma-y 0 " + data("cover_weak_p5.json")))["value"] == 1);
  CHECK(run("dim --case p-rank " + data("cover_weak_p5.json")).status == 1);
}

TEST_CASE("validation errors exit 1") {
  CHECK(run("dim --case cyclic " + data("broken.json")).status == 1);
  CHECK(run("dim --case cyclic /nonexistent.json").status == 1);
  CHECK(run("dim --case nonsense " + data("cover_jump3.json")).status == 1);
  CHECK(run("frobnicate").status == 1);
  CHECK(run("").status == 1);
  CHECK(run("homology --p 3 --s 2 --random").status == 1);
  CHECK(run("local jump --p 5 --series 1:x --prec 4").status == 1);
}

TEST_CASE("tot") {
  const Run r = run("tot " + data("cover_jump3.json") + " " + data("divisor_2k_jump3.json"));
  CHECK(r.status == 0);
  const json j = parsed(r);
  CHECK(j["value"] == 3);
  CHECK(j["routes_agree"] == true);
}

TEST_CASE("crosscheck") {
  const Run r = run("crosscheck --p 5 --f \"x^3\"");
  CHECK(r.status == 0);
  const json j = parsed(r);
  CHECK(j["all_match"] == true);
  CHECK(j["items"].size() >= 8);
  for (const auto& item : j["items"]) CHECK(item["match"] == true);
  const Run low = run("crosscheck --p 2 --f \"x^3\"");
  CHECK(low.status == 0);
  CHECK(parsed(low)["items"].size() == 2);
  CHECK(parsed(low).contains("skipped"));
}

TEST_CASE("oracle") {
  const Run r = run("oracle --p 5 --f \"x + x^-1\" --divisor 2K+3Rred");
  CHECK(r.status == 0);
  const json j = parsed(r);
  CHECK(j["genus"] == 4);
  CHECK(j["decomposition"]["dim"] == 15);
  CHECK(j["decomposition"]["m_l"] == json::array({0, 0, 0, 0, 3}));
  for (const auto& c : j["crosschecks"]) CHECK(c["match"] == true);
}

TEST_CASE("homology is deterministic for a given seed") {
  const Run a = run("homology --p 5 --s 3 --random --seed 42");
  const Run b = run("homology --p 5 --s 3 --random --seed 42");
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  const json j = parsed(a);
  CHECK(j["h0"] == 1);
  CHECK(j["h1"] == 3);
  CHECK(j["agree"] == true);
  const json e = parsed(run("homology --p 2 --s 1 --alpha 1 --beta 1"));
  CHECK(e["closed_form"]["difference"] == 1);
  CHECK(e["closed_form"]["h0"].is_null());
}

TEST_CASE("local subcommands") {
  const json n = parsed(run("local normalize --p 2 --series=-4:1,-3:1 --prec 10"));
  CHECK(n["m"] == 3);
  const json j = parsed(run("local jump --p 5 --series=-3:1 --prec 30"));
  CHECK(j["jump"] == 3);
  const json t = parsed(run("local tower --p 2 --m 2 --n 2 --prec 14"));
  CHECK(t["beta_is_alpha_squared"] == true);
  CHECK(t["mobius"] == true);
  CHECK(t["elements"].size() == 4);
  const json w = parsed(run("local weierstrass --poles 0,4,5,6,7,8 --bound 8"));
  CHECK(w["pass"] == true);
  CHECK(w["m"] == 5);
  CHECK(run("local weierstrass --poles 0,2,4 --bound 4").status == 2);
  CHECK(run("local jump --p 5 --series=0:1 --prec 5").status == 2);
}

TEST_CASE("table output renders the same report") {
  const Run r = run("--format table dim --case cyclic " + data("cover_jump3.json"));
  CHECK(r.status == 0);
  CHECK(r.out.find("value: 3") != std::string::npos);
  const Run s = run("dim --case cyclic " + data("cover_jump3.json") + " --format table");
  CHECK(s.out == r.out);
}
