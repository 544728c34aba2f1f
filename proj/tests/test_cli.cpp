#include <json.hpp>

#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
  int status;
  std::string out;
  nlohmann::json json() const { return nlohmann::json::parse(out); }
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + LIEX_CLI_PATH + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("liex_cli_" + name);
  std::ofstream(path) << content;
  return path.string();
}

}  // namespace

TEST_CASE("catalog") {
  const auto r = run("catalog");
  REQUIRE(r.status == 0);
  CHECK(r.json()["names"].size() == 11);
  const auto one = run("catalog \"A3.4(a=1/2)\"");
  REQUIRE(one.status == 0);
  CHECK(one.json()["dim"] == 3);
  CHECK(run("catalog A3.4 --a 1/2").out == one.out);
  const auto bad = run("catalog A3.4 --a 3");
  CHECK(bad.status == 2);
  CHECK(bad.json()["code"] == "parameter-out-of-range");
}

TEST_CASE("validate") {
  CHECK(run("validate sl2R").json()["valid"] == true);
  const auto jac = temp_file("jac.json",
                             R"({"dim":3,"brackets":[{"i":1,"j":2,"coeffs":{"2":"1"}},{"i":2,"j":3,"coeffs":{"1":"1"}}]})");
  const auto r = run("validate --input " + jac);
  CHECK(r.status == 2);
  CHECK(r.json()["code"] == "jacobi-violation");
  CHECK(r.json()["witness"].size() == 3);
  CHECK(r.json().contains("detail"));
  const auto anti = temp_file("anti.json",
                              R"({"dim":2,"brackets":[{"i":1,"j":2,"coeffs":{"1":"1"}},{"i":2,"j":1,"coeffs":{"1":"1"}}]})");
  CHECK(run("validate " + anti).json()["code"] == "not-antisymmetric");
  const auto s3 = run("validate --semigroup S3");
  CHECK(s3.status == 2);
  CHECK(s3.json()["code"] == "not-associative");
  CHECK(run("validate --semigroup S3a").status == 0);
}

TEST_CASE("malformed input exits 1") {
  const auto junk = temp_file("junk.json", "{not json");
  CHECK(run("validate " + junk).status == 1);
  CHECK(run("expand --semigroup S2 --algebra - < /dev/null").status == 1);
  CHECK(run("subalgebra --span E9 sl2R").status == 1);
}

TEST_CASE("expand pipes into subalgebra and identify") {
  const auto r = run("expand --semigroup S2 --algebra sl2R");
  REQUIRE(r.status == 0);
  CHECK(r.json()["dim"] == 6);
  const auto path = temp_file("s2sl2.json", r.out);
  const auto sub = run("subalgebra --span E1,E2,E3 " + path);
  REQUIRE(sub.status == 0);
  const auto id = run("identify --span E1,E2,E3 " + path);
  REQUIRE(id.status == 0);
  CHECK(id.json()["class"] == "A2.1+A1");
  const auto piped = run("identify < " + temp_file("sub.json", sub.out));
  CHECK(piped.json()["class"] == "A2.1+A1");
}

TEST_CASE("identify with random trials") {
  const auto r = run("identify \"A3.5(b=2)\" --trials 20 --seed 5");
  REQUIRE(r.status == 0);
  CHECK(r.json()["class"] == "A3.5");
  CHECK(r.json()["b"] == "2");
  CHECK(r.json()["trials"]["passed"] == 20);
  CHECK(run("identify gF").json()["code"] == "wrong-dimension");
}

TEST_CASE("reduce") {
  const auto z = run("reduce --mode zero --semigroup S2 sl2R");
  REQUIRE(z.status == 0);
  CHECK(z.json()["dim"] == 3);
  const auto split = run("reduce --mode split --checked E3 --hatted E1,E2 A3.3");
  REQUIRE(split.status == 0);
  CHECK(split.json()["dim"] == 1);
  CHECK(run("reduce --mode split --checked E1 --hatted E2,E3 A3.3").json()["code"] ==
        "reduction-condition-violated");
  CHECK(run("reduce --mode zero --semigroup Z2 sl2R").json()["code"] == "no-zero-element");
}

TEST_CASE("contract") {
  const auto r = run("contract --source gF --family uF --target gE");
  REQUIRE(r.status == 0);
  CHECK(r.json()["holds"] == true);
  CHECK(r.json()["min_valuation"].get<int>() >= 0);
  const auto iw = run("contract --source sl2R --family diag:1,0,1");
  CHECK(iw.json()["limit_class"] == "A3.4(a=-1)");
  const auto div = run("contract --source sl2R --family diag:-1,0,0");
  CHECK(div.status == 2);
  CHECK(div.json()["code"] == "divergent-limit");
  CHECK(run("contract --source sl2R --family nope").json()["code"] == "unknown-family");
}

TEST_CASE("search and graph") {
  const auto r = run("search --from sl2R --to A2.1+A1 --max-order 2");
  REQUIRE(r.status == 0);
  CHECK(r.json()["found"] == true);
  CHECK(r.json()["space"]["semigroups"] == 4);
  const auto bound = run("search --from sl2R --to A3.3 --max-order 3", "LIEX_MAX_ORDER=2");
  CHECK(bound.status == 2);
  CHECK(bound.json()["code"] == "bound-exceeded");
  CHECK(run("search --from sl2R --to A3.3 --modes nonsense").status == 1);

  const auto dot = std::filesystem::temp_directory_path() / "liex_cli_graph.dot";
  const auto g = run("graph --labels sl2R,A2.1+A1 --max-order 2 --dot " + dot.string());
  REQUIRE(g.status == 0);
  CHECK(g.json()["edges"].size() == 4);
  std::ifstream in(dot);
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(text.find("digraph") != std::string::npos);
}

TEST_CASE("enumerate-semigroups") {
  CHECK(run("enumerate-semigroups --order 3 --up-to-iso").json()["count"] == 12);
  CHECK(run("enumerate-semigroups --order 4 --up-to-iso").json()["count"] == 58);
  CHECK(run("enumerate-semigroups --order 5").json()["code"] == "bound-exceeded");
  CHECK(run("enumerate-semigroups --order 5 --up-to-iso", "LIEX_MAX_ORDER=x").status == 1);
}

TEST_CASE("usage errors") {
  CHECK(run("").status == 1);
  CHECK(run("frobnicate").status == 1);
  CHECK(run("--help").status == 0);
}
