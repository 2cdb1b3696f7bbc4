#include "adeh/errors.hpp"
#include "adeh/serialize.hpp"

#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>

using namespace adeh;
namespace fs = std::filesystem;

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string &args, bool merge_stderr = false) {
  const std::string cmd = std::string(ADEH_CLI) + " " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
  Run r;
  FILE *pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    r.out.append(buf.data(), n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

fs::path scratch(const std::string &name) {
  const fs::path dir = fs::temp_directory_path() / "adeh_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

void write(const fs::path &p, const std::string &text) { std::ofstream(p) << text; }

const std::string kOne = R"({"truncation_weight": 6, "coeffs": [{"monomial": [], "hbar_poly": [["1", 0]]}]})";

} // namespace

TEST_CASE("CycloNum serialisation round trip") {
  const CycloNum a = CycloNum(12, Rational(16)) + (CycloNum::zeta(12) + CycloNum::zeta(12, 11)) * make_rational(-8, 3);
  const Json j = to_json(a);
  CHECK(j.dump() == R"({"order":12,"coeffs":["16/1","-16/3","0/1","8/3"]})");
  CHECK(cyclo_from_json(j) == a);
  CHECK(cyclo_from_json(Json::parse(j.dump())) == a);
  CHECK_THROWS_AS(cyclo_from_json(Json::parse(R"({"order":12,"coeffs":["1"]})")), UsageError);
  CHECK_THROWS_AS(cyclo_from_json(Json::parse(R"({"order":3,"coeffs":[1,2]})")), UsageError);
}

TEST_CASE("tau and monomial round trip") {
  TauSeries tau;
  tau.truncation_weight = 9;
  tau.coeffs[{{HVar{1, 0}, 3}}][-3] = make_rational(1, 3);
  tau.coeffs[{{HVar{3, 1}, 1}}][-1] = -1;
  const TauSeries back = tau_from_json(Json::parse(to_json(tau).dump()));
  CHECK(back.truncation_weight == 9);
  CHECK(back.coeffs == tau.coeffs);
  CHECK_THROWS_AS(tau_from_json(Json::parse(R"({"coeffs": []})")), UsageError);
  CHECK_THROWS_AS(monomial_from_json(Json::parse("[[0, 1]]")), UsageError);
}

TEST_CASE("golden files") {
  for (const auto &t : standard_types()) {
    CAPTURE(t.name());
    const Json j = read_json_file(golden_path(ADEH_GOLDEN_DIR, t));
    CHECK(golden_values(j, t).size() == static_cast<std::size_t>(t.rank));
    CHECK(golden_values(j, t) == closed_form_reference(t));
  }
  const Json e6 = read_json_file(golden_path(ADEH_GOLDEN_DIR, AdeType::parse("E6")));
  CHECK_THROWS_AS(golden_values(e6, AdeType::parse("E7")), UsageError);
  CHECK_THROWS_AS(read_json_file("/nonexistent/golden.json"), UsageError);
}

TEST_CASE("roots subcommand") {
  Run a2 = run("roots --type A2");
  CHECK(a2.status == 0);
  const Json j = Json::parse(a2.out);
  CHECK(j["root_count"] == 6);
  CHECK(j["h"] == 3);

  const Json e8 = Json::parse(run("roots --type E8").out);
  CHECK(e8["root_count"] == 240);
  CHECK(e8["h"] == 30);
  CHECK(e8["exponents"] == Json::parse("[1,7,11,13,17,19,23,29]"));
  CHECK(e8["orbits"].size() == 8);

  const Run b3 = run("roots --type B3", true);
  CHECK(b3.status == 2);
  CHECK(b3.out.find("supported families") != std::string::npos);
  CHECK(b3.out.find("A<N>") != std::string::npos);

  CHECK(run("roots").status == 2);
  CHECK(run("roots --type A2 --all").status == 2);
  CHECK(run("frobnicate").status == 2);
  CHECK(run("roots --type A2 --format xml").status == 2);
  CHECK(Json::parse(run("roots --all").out).size() == 16);
}

TEST_CASE("coeffs subcommand") {
  const Json d4 = Json::parse(run("coeffs --type D4").out);
  const std::vector<std::string> want{"1/2", "9/2", "9/2", "9/2"};
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(d4["g"][i]["exact"]["coeffs"][0] == want[i]);
    CHECK(cyclo_from_json(d4["g"][i]["exact"]).is_rational());
  }
  CHECK(d4["sum_g"] == "14/1");

  const Run e7 = run("coeffs --type E7 --digits 12");
  CHECK(e7.status == 0);
  const Json j = Json::parse(e7.out);
  CHECK(cyclo_from_json(j["g"][2]["exact"]) == CycloNum(18, make_rational(3, 2)));
  CHECK(j["g"][2]["approx"].get<double>() == doctest::Approx(1.5).epsilon(1e-12));
  CHECK(j["g"][0]["approx_digits"].get<std::string>().size() <= 14);

  CHECK(Json::parse(run("coeffs --type A6").out)["sum_g"] == "28/1");
  CHECK(run("coeffs --type A2 --digits 0").status == 2);
  CHECK(run("coeffs --type A2 --digits 51").status == 2);
  CHECK(run("coeffs --type A2 --digits 50").status == 0);

  const Run table = run("coeffs --type D4 --format table");
  CHECK(table.out.find("sum g = 14") != std::string::npos);
}

TEST_CASE("hirota subcommand") {
  const Run w0 = run("hirota --type A1 --max-weight 0");
  CHECK(w0.status == 0);
  const Json j0 = Json::parse(w0.out);
  CHECK(j0["equations"].size() == 1);
  CHECK(j0["equations"][0]["terms"].empty());
  CHECK(cyclo_from_json(j0["weight0_scalar"]).is_zero());

  const Json j6 = Json::parse(run("hirota --type A1 --max-weight 6").out);
  std::vector<int> ms;
  for (const auto &v : j6["variables"])
    ms.push_back(v["m"]);
  CHECK(ms == std::vector<int>{1, 3, 5});

  const Json d4 = Json::parse(run("hirota --type D4 --max-weight 4").out);
  for (const auto &eq : d4["equations"])
    for (const auto &t : eq["terms"]) {
      int w = 0;
      for (const auto &e : t["d"])
        w += e[0].get<int>() * e[1].get<int>();
      CHECK(w == eq["weight"]);
    }

  const Run counts = run("hirota --type A1 --max-weight 6 --format table");
  CHECK(counts.out.find("weight 4: 2 equations, 2 nonzero") != std::string::npos);
  CHECK(run("hirota --type A1 --max-weight -1").status == 2);

  const fs::path out = scratch("a1.json");
  CHECK(run("hirota --type A1 --max-weight 4 --out " + out.string()).status == 0);
  CHECK(read_json_file(out)["max_weight"] == 4);
}

TEST_CASE("check subcommand") {
  const fs::path one = scratch("one.json");
  write(one, kOne);
  CHECK(run("check --type E6 --max-weight 3 " + one.string()).status == 0);

  const fs::path pert = scratch("pert.json");
  write(pert, R"({"truncation_weight": 10, "coeffs": [{"monomial": [], "hbar_poly": [["1", 0]]},
                   {"monomial": [[1, 1], [3, 1]], "hbar_poly": [["1", 0]]}]})");
  const Run bad = run("check --type A1 --max-weight 6 " + pert.string());
  CHECK(bad.status == 1);
  const Json rep = Json::parse(bad.out);
  CHECK_FALSE(rep["ok"].get<bool>());
  CHECK(rep["residuals"][0]["equation"] == Json::parse("[[1,1],[3,1]]"));

  const fs::path short_tau = scratch("short.json");
  write(short_tau, R"({"truncation_weight": 2, "coeffs": [{"monomial": [], "hbar_poly": [["1", 0]]}]})");
  const Run trunc = run("check --type A1 --max-weight 4 " + short_tau.string(), true);
  CHECK(trunc.status == 2);
  CHECK(trunc.out.find("requires truncation ≥ 4") != std::string::npos);

  const fs::path malformed = scratch("malformed.json");
  write(malformed, "{\"truncation_weight\": ");
  CHECK(run("check --type A1 " + malformed.string()).status == 2);
  CHECK(run("check --type A1 /nonexistent/tau.json").status == 2);
}

TEST_CASE("verify subcommand") {
  const Run all = run("verify --format json");
  CHECK(all.status == 0);
  const Json j = Json::parse(all.out);
  CHECK(j["ok"].get<bool>());
  CHECK(j["criteria"].size() == 9);

  const Json a3 = Json::parse(run("verify --type A3").out);
  for (const auto &c : a3["checks"]) {
    const std::string name = c["name"];
    CHECK(name.substr(name.size() - 2) == "A3");
  }

  // One altered E8 coefficient gives exactly one named failure.
  const fs::path dir = scratch("golden");
  fs::create_directories(dir);
  for (const auto &entry : fs::directory_iterator(ADEH_GOLDEN_DIR))
    fs::copy_file(entry.path(), dir / entry.path().filename(), fs::copy_options::overwrite_existing);
  Json e8 = read_json_file(dir / "E8.json");
  e8["g"][3]["coeffs"][0] = "1/1";
  write(dir / "E8.json", e8.dump(2));
  const Run altered = run("verify --golden-dir " + dir.string());
  CHECK(altered.status == 1);
  int failures = 0;
  std::string failed;
  const Json report = Json::parse(altered.out);
  for (const auto &c : report["checks"])
    if (!c["pass"].get<bool>()) {
      ++failures;
      failed = c["name"];
    }
  CHECK(failures == 1);
  CHECK(failed == "golden E8");
}

TEST_CASE("thread cap from the environment") {
  const Run r = run("coeffs --type E6");
  setenv("ADEH_THREADS", "1", 1);
  const Run capped = run("coeffs --type E6");
  unsetenv("ADEH_THREADS");
  CHECK(capped.status == 0);
  CHECK(capped.out == r.out);
}
