#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"

using namespace holo;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  int code = cli_dispatch(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& body) {
  std::string path = std::filesystem::temp_directory_path() / ("holo_test_" + name);
  std::ofstream(path) << body;
  return path;
}

const std::string catalan6 = "1\n1\n2\n5\n14\n42\n";
const std::string catalan_rec = "(n + 2)*u(n+1) + (-4*n - 2)*u(n) = 0\nu(0) = 1\n";

}  // namespace

TEST_CASE("guess-rec on six Catalan numbers") {
  Run r = run({"--json", "guess-rec", "-"}, catalan6);
  CHECK(r.code == kExitOk);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["found"] == true);
  CHECK(j["relation"]["coefficients"] == nlohmann::json::array({"-4*n - 2", "n + 2"}));
  CHECK(run({"guess-rec", "-"}, catalan6).out.rfind("(n + 2)*u(n+1) + (-4*n - 2)*u(n) = 0\n", 0) == 0);
  CHECK(run({"guess-rec", "--path", "rational", "-"}, catalan6).code == kExitOk);
}

TEST_CASE("guess-rec on random terms reports the sweep") {
  Run r = run({"--json", "guess-rec", "-"}, "3\n-17\n4\n101\n-5\n9\n");
  CHECK(r.code == kExitNoRelation);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["found"] == false);
  CHECK(!j["trace"].empty());
}

TEST_CASE("exit codes") {
  CHECK(run({"guess-rec", "-"}, "1\nabc\n").code == kExitParse);
  CHECK(run({"guess-rec", "-"}, "1 1\n3 2\n").code == kExitParse);
  CHECK(run({"guess-rec", "-"}, "1\n2\n").code == kExitInvalid);
  CHECK(run({"guess-rec", "--margin", "0", "-"}, catalan6).code == kExitInvalid);
  CHECK(run({"guess-rec", "--path", "fast", "-"}, catalan6).code == kExitInvalid);
  CHECK(run({"guess-rec", "/nonexistent/file"}).code == kExitInvalid);
  CHECK(run({"frobnicate"}).code == kExitInvalid);
  CHECK(run({}).code == kExitInvalid);
  CHECK(run({"--help"}).code == kExitOk);
  CHECK(run({"eval", "unroll", "-n", "5", "-"}, "u(n+1) - u(n) = 0\n").code == kExitInvalid);
  CHECK(run({"convert", "rec2ode", "-"}, "y'(x) - y(x) = 0\n").code == kExitInvalid);
  CHECK(run({"case", "iso", "--a", "1"}).code == kExitInvalid);
  CHECK(run({"closure", "scale", "--ratio", "0", "-"}, catalan_rec).code == kExitInvalid);
}

TEST_CASE("subcommands") {
  Run u = run({"eval", "unroll", "-n", "6", "-"}, catalan_rec);
  CHECK(u.code == kExitOk);
  CHECK(u.out == catalan6);
  Run nth = run({"eval", "nth", "-n", "10", "-"}, catalan_rec);
  CHECK(nth.out == "16796\n");
  Run ser = run({"eval", "series", "-n", "5", "-"}, "x^2*y^2 + (x - 1)*y + 1 = 0\ny(0) = 1\n");
  CHECK(ser.out == "1\n1\n2\n4\n9\n");
  Run ode = run({"convert", "rec2ode", "-"}, catalan_rec);
  CHECK(ode.code == kExitOk);
  Run back = run({"convert", "ode2rec", "-"}, ode.out);
  CHECK(back.code == kExitOk);
  CHECK(run({"eval", "unroll", "-n", "6", "-"}, back.out).out == catalan6);
  CHECK(run({"convert", "alg2ode", "-"}, "x^2*y^2 + (x - 1)*y + 1 = 0\ny(0) = 1\n").code == kExitOk);
  CHECK(run({"convert", "homogenize", "-"}, "u(n+1) - u(n) = 1\nu(0) = 0\n").code == kExitOk);
  Run scaled = run({"closure", "scale", "--ratio", "2", "-"}, catalan_rec);
  CHECK(run({"eval", "unroll", "-n", "4", "-"}, scaled.out).out == "1\n2\n8\n40\n");
  const std::string a = temp_file("a.rel", "(n + 1)*u(n+2) - (n + 1)*u(n+1) - u(n+1) + u(n) = 0\n");
  const std::string b = temp_file("b.rel", "u(n+1) - u(n) = 0\n");
  Run div = run({"ore", "divmod", a, b});
  CHECK(div.code == kExitOk);
  CHECK(div.out.find("remainder: 0") != std::string::npos);
}

TEST_CASE("identical input gives identical JSON") {
  std::string more = catalan6 + "132\n429\n1430\n4862\n16796\n58786\n208012\n742900\n2674440\n9694845\n";
  auto a = run({"--json", "guess-ode", "-"}, more);
  auto b = run({"--json", "guess-ode", "-"}, more);
  CHECK(a.code == kExitOk);
  CHECK(a.out == b.out);
  CHECK(run({"--json", "case", "iso", "--a", "3/2"}).out == run({"--json", "case", "iso", "--a", "3/2"}).out);
}

TEST_CASE("case yang-zagier passes") {
  Run r = run({"--json", "case", "yang-zagier"});
  CHECK(r.code == kExitOk);
  CHECK(nlohmann::json::parse(r.out)["pass"] == true);
}
