#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "fuscat/cli.hpp"

using namespace fuscat;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

Json json_of(std::vector<std::string> args) {
  args.push_back("--json");
  const auto o = cli(args);
  REQUIRE(o.code == 0);
  return Json::parse(o.out);
}

}  // namespace

TEST_CASE("lemma-norm table") {
  const auto j = json_of({"lemma-norm", "--nmax", "60"});
  CHECK(j["result"]["all_match"] == true);
  CHECK(j["result"]["rows"].size() == 59);
  CHECK(j["result"]["rows"][7]["n"] == "9");
  CHECK(j["result"]["rows"][7]["norm"] == "3");
  CHECK(j["result"]["rows"][4]["norm"] == "1");  // n = 6
  const auto text = cli({"lemma-norm", "--nmax", "60"});
  CHECK(text.code == 0);
  CHECK(text.out.find("all rows match the prime-power rule: yes") != std::string::npos);
}

TEST_CASE("verlinde classify A1 l=9 p=3") {
  const auto j = json_of({"verlinde", "classify", "--type", "A1", "--l", "9", "--p", "3"});
  CHECK(j["result"]["verdict"]["verdict"] == "Bad");
  CHECK(j["result"]["verdict"]["witness"] == Json::array({"2"}));
  CHECK(j["provenance"]["hypotheses"]["l_odd"] == "yes");
}

TEST_CASE("verlinde simples and badprimes") {
  const auto s = json_of({"verlinde", "simples", "--type", "A1", "--l", "8"});
  CHECK(s["result"]["simples"].size() == 7);
  const auto b = json_of({"verlinde", "badprimes", "--type", "D4", "--l", "15", "--pmax", "100"});
  CHECK(b["result"]["verdicts"].size() == 25);
  CHECK(b["result"]["bad_primes"] == Json::array());  // 3, 5 < h = 6
  CHECK(b["result"]["verdicts"][1]["verdict"] == "OutsideTheorem");
  CHECK(b["result"]["verdicts"][2]["verdict"] == "OutsideTheorem");
  const auto a = json_of({"verlinde", "badprimes", "--type", "A2", "--l", "15"});
  CHECK(a["result"]["bad_primes"] == Json::array({"3", "5"}));
}

TEST_CASE("crosscheck on S3") {
  const auto o = cli({"crosscheck", "--group", "S3", "--json"});
  CHECK(o.code == 0);
  const auto j = Json::parse(o.out);
  CHECK(j["result"]["passed"] == true);
  bool saw = false;
  for (const auto& c : j["result"]["checks"])
    if (c["check"] == "gt_bad_primes(G,G) = rep_bad_primes(G)") {
      saw = true;
      CHECK(c["detail"] == "{2} vs {2}");
    }
  CHECK(saw);
}

TEST_CASE("crosscheck on the whole corpus") {
  const auto o = cli({"crosscheck"});
  CHECK(o.code == 0);
  CHECK(o.out.find("FAIL") == std::string::npos);
  CHECK(o.out.find("all checks passed") != std::string::npos);
}

TEST_CASE("group, gtcat, ito-michler, amplitude, cyc") {
  const auto g = json_of({"group", "--group", "S4"});
  CHECK(g["result"]["degrees"] == Json::array({"1", "1", "2", "3", "3"}));
  const auto gens = json_of({"group", "--gens", "(1 2)(3 4), (1 2 3)"});
  CHECK(gens["result"]["order"] == "12");
  const auto gt = json_of({"gtcat", "simples", "--group", "S4", "--subgroup-gens", "(1 2),(3 4)"});
  CHECK(gt["result"]["sum_of_squares"] == "24");
  CHECK(gt["result"]["double_cosets"].size() == 3);
  const auto gtb = json_of({"gtcat", "badprimes", "--group", "S3", "--subgroup-gens", "(1 2)"});
  CHECK(gtb["result"]["bad_primes"][0]["prime"] == "2");
  CHECK(gtb["provenance"]["hypotheses"]["trivial_cocycles"] == "yes");
  const auto im = json_of({"ito-michler", "--group", "S4", "--p", "2"});
  CHECK(im["result"]["primes"][0]["applicable"] == false);
  const auto cl = json_of({"amplitude", "t4", "--classical"});
  CHECK(cl["result"]["value"] == "3/2");
  CHECK(cl["result"]["traced_coeff"] == "3/2");
  const auto qu = json_of({"amplitude", "t4", "--quantum", "--l", "8"});
  CHECK(qu["result"]["value_squared"]["numerator"] == Json::array({"1", "0", "0", "0", "0", "0", "0", "0"}));
  CHECK(qu["result"]["value_squared"]["denominator"] == "2");
  CHECK(qu["result"]["bad_primes"] == Json::array({"2"}));
  const auto c = json_of({"cyc", "1 + z^2 + z^-2", "--n", "16", "--p", "2"});
  CHECK(c["result"]["norm"] == "1");
  CHECK(c["result"]["p_unit"] == true);
}

TEST_CASE("exit codes") {
  CHECK(cli({}).code == 2);
  CHECK(cli({"--bogus"}).code == 2);
  CHECK(cli({"lemma-norm", "--bogus"}).code == 2);
  const auto unknown = cli({"frobnicate"});
  CHECK(unknown.code == 2);
  CHECK(unknown.err.find("Usage") != std::string::npos);
  CHECK(cli({"verlinde", "classify", "--type", "A1", "--l", "8", "--p", "2"}).code == 2);
  CHECK(cli({"verlinde", "classify", "--type", "B2", "--l", "9", "--p", "3"}).code == 2);
  CHECK(cli({"verlinde", "classify", "--type", "A1", "--l", "9"}).code == 2);
  CHECK(cli({"verlinde", "simples", "--type", "A2", "--l", "3"}).code == 2);
  CHECK(cli({"group", "--group", "S3", "--gens", "(1 2)"}).code == 2);
  CHECK(cli({"gtcat", "simples", "--group", "S3", "--subgroup-gens", "(3 4)"}).code == 2);
  CHECK(cli({"amplitude", "t4", "--quantum", "--l", "4"}).code == 2);
  CHECK(cli({"amplitude", "t4"}).code == 2);
  CHECK(cli({"amplitude", "t4", "--classical", "--quantum"}).code == 2);
  CHECK(cli({"cyc", "1/0", "--n", "4"}).code == 2);
  CHECK(cli({"--help"}).code == 0);
}

TEST_CASE("enumeration cap from the environment") {
  setenv("FUSCAT_ENUM_CAP", "100", 1);
  const auto o = cli({"group", "--group", "S5"});
  CHECK(o.code == 2);
  CHECK(o.err.find("cap") != std::string::npos);
  const auto ok = json_of({"group", "--group", "S4"});
  CHECK(ok["provenance"]["enumeration_cap"] == "100");
  unsetenv("FUSCAT_ENUM_CAP");
}

TEST_CASE("--out writes the same JSON and it round-trips") {
  const std::string path = "fuscat_test_out.json";
  const auto o = cli({"verlinde", "badprimes", "--type", "A2", "--l", "9", "--out", path, "--json"});
  REQUIRE(o.code == 0);
  std::ifstream f(path);
  std::stringstream buf;
  buf << f.rdbuf();
  CHECK(Json::parse(buf.str()) == Json::parse(o.out));
  const auto report = report_from_json(Json::parse(buf.str()));
  CHECK(report_to_json(report) == Json::parse(o.out));
  CHECK(report.command.front() == "verlinde");
  std::remove(path.c_str());
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args{"gtcat", "simples", "--group", "SL23", "--subgroup-gens", "(1 2 4 7)(3 6 8 5)"};
  CHECK(cli(args).out == cli(args).out);
}

TEST_CASE("the installed binary reports the same exit codes") {
  const char* exe = std::getenv("FUSCAT_CLI");
  if (!exe) return;
  auto status = [&](const std::string& args) {
    const int raw = std::system((std::string(exe) + " " + args + " > /dev/null 2>&1").c_str());
    return WEXITSTATUS(raw);
  };
  CHECK(status("lemma-norm --nmax 10") == 0);
  CHECK(status("lemma-norm --nope") == 2);
  CHECK(status("verlinde classify --type A1 --l 10 --p 2") == 2);
}
