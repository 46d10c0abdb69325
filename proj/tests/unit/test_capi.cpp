#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include <string>
#include <thread>

#include "k3quartic.h"

using Json = nlohmann::ordered_json;

namespace {

struct Owned {
  k3_report* r = nullptr;
  ~Owned() { k3_report_free(r); }
  Json json() const { return Json::parse(k3_report_json(r, -1)); }
};

const char* kPsi = R"({"x": [[0, "49"], [1, "-98"], [2, "49"]],
  "y": [[2, "63"], [3, "-126"], [4, "63"]],
  "z": [[2, "144"], [3, "-96"], [4, "225"], [5, "-162"], [6, "81"]]})";

}  // namespace

TEST_CASE("version and null safety") {
  CHECK(std::string(k3_version()) == "0.1.0");
  CHECK(k3_analyze(nullptr, -1, nullptr) == K3_ERR_INVALID_ARGUMENT);
  k3_report* r = nullptr;
  CHECK(k3_analyze(nullptr, -1, &r) == K3_ERR_INVALID_ARGUMENT);
  CHECK(r == nullptr);
  CHECK(std::string(k3_report_json(nullptr, 2)).empty());
  CHECK(k3_report_all_passed(nullptr) == 0);
  k3_report_free(nullptr);
  k3_lattice_free(nullptr);
  CHECK(std::string(k3_status_name(K3_ERR_DOMAIN)) == "domain error");
}

TEST_CASE("analyze 81/49") {
  Owned o;
  REQUIRE(k3_analyze("81/49", 1, &o.r) == K3_OK);
  CHECK(k3_report_all_passed(o.r));
  Json j = o.json();
  CHECK(j["command"] == "analyze");
  CHECK(j["results"]["stability"]["stable"] == true);
  CHECK(j["results"]["fibration"]["eulerTotal"] == 24);
  CHECK(j["results"]["picard"]["shiodaTateBound"] == 19);
  CHECK(j["results"]["picard"]["parityRefined"] == 20);
  CHECK(j["inputs"]["alpha"] == "81/49");
}

TEST_CASE("unstable alpha is a verdict, not an error") {
  Owned o;
  REQUIRE(k3_analyze("1", -1, &o.r) == K3_OK);
  Json j = o.json();
  CHECK(j["results"]["stability"]["stable"] == false);
  CHECK(j["results"]["stability"]["reason"].get<std::string>().find("tacnode") != std::string::npos);
  CHECK(j["results"]["fibration"].is_null());
}

TEST_CASE("parse errors carry a message") {
  k3_report* r = nullptr;
  CHECK(k3_analyze("eighty", -1, &r) == K3_ERR_PARSE);
  CHECK(r == nullptr);
  CHECK(!std::string(k3_last_error()).empty());
  Owned ok;
  REQUIRE(k3_lattice_tn(3, &ok.r) == K3_OK);
  CHECK(std::string(k3_last_error()).empty());
  CHECK(k3_split("81/49", "{not json", &r) == K3_ERR_PARSE);
  CHECK(k3_split("81/49", R"({"x": []})", &r) == K3_ERR_PARSE);
}

TEST_CASE("last error is per thread") {
  k3_report* r = nullptr;
  CHECK(k3_analyze("bad", -1, &r) == K3_ERR_PARSE);
  std::string other = "unset";
  std::thread t([&] { other = k3_last_error(); });
  t.join();
  CHECK(other.empty());
  CHECK(!std::string(k3_last_error()).empty());
}

TEST_CASE("split psi") {
  Owned o;
  REQUIRE(k3_split("81/49", kPsi, &o.r) == K3_OK);
  Json j = o.json();
  CHECK(j["results"]["verdict"] == "Splits");
  REQUIRE(j["results"]["factors"].size() == 3);
  for (const auto& f : j["results"]["factors"]) CHECK(f["multiplicity"] == 4);
  CHECK(k3_report_all_passed(o.r));
}

TEST_CASE("lattice tn") {
  Owned seven, six;
  REQUIRE(k3_lattice_tn(7, &seven.r) == K3_OK);
  Json j = seven.json();
  CHECK(j["results"]["obstructed"] == false);
  CHECK(j["results"]["gram"] == Json::parse(R"([["14","0"],["0","14"]])"));
  CHECK(j["results"]["minorGcd"] == 1);
  REQUIRE(k3_lattice_tn(6, &six.r) == K3_OK);
  CHECK(six.json()["results"]["obstructed"] == true);
  CHECK(k3_report_all_passed(six.r));
  k3_report* r = nullptr;
  CHECK(k3_lattice_tn(0, &r) == K3_ERR_INVALID_ARGUMENT);
}

TEST_CASE("lattice handles") {
  k3_lattice* l = nullptr;
  REQUIRE(k3_lattice_from_preset("N", &l) == K3_OK);
  CHECK(k3_lattice_rank(l) == 18);
  Owned o;
  REQUIRE(k3_lattice_report(l, &o.r) == K3_OK);
  Json j = o.json();
  CHECK(j["results"]["ell"] == 4);
  CHECK(j["results"]["delta"] == 1);
  CHECK(j["results"]["determinant"] == "-16");
  k3_lattice_free(l);

  long t[] = {2, 0, 0, 0, 0, 2, 0, 0, 0, 0, -2, 0, 0, 0, 0, -2};
  REQUIRE(k3_lattice_from_gram(t, 4, &l) == K3_OK);
  Owned g;
  REQUIRE(k3_lattice_report(l, &g.r) == K3_OK);
  CHECK(g.json()["results"]["signature"] == Json::array({2, 2}));
  CHECK(g.json()["results"]["twoElementary"] == true);
  k3_lattice_free(l);

  long asym[] = {2, 1, 0, 2};
  CHECK(k3_lattice_from_gram(asym, 2, &l) == K3_ERR_INVALID_ARGUMENT);
  long degenerate[] = {1, 1, 1, 1};
  REQUIRE(k3_lattice_from_gram(degenerate, 2, &l) == K3_OK);
  k3_report* r = nullptr;
  CHECK(k3_lattice_report(l, &r) == K3_ERR_DOMAIN);
  k3_lattice_free(l);
  CHECK(k3_lattice_from_preset("E9", &l) != K3_OK);
}

TEST_CASE("fibers and degenerations") {
  Owned sym, inf, zero;
  REQUIRE(k3_fibers(nullptr, nullptr, &sym.r) == K3_OK);
  CHECK(sym.json()["results"]["fibers"].size() == 3);
  REQUIRE(k3_fibers(nullptr, "zero", &zero.r) == K3_OK);
  CHECK(zero.json()["results"]["shiodaTateBound"] == 20);
  CHECK(k3_report_all_passed(zero.r));
  REQUIRE(k3_fibers(nullptr, "inf", &inf.r) == K3_OK);
  CHECK(inf.json()["results"]["eulerTotal"] == 24);
  k3_report* r = nullptr;
  CHECK(k3_fibers(nullptr, "middle", &r) == K3_ERR_PARSE);
  CHECK(k3_fibers("inf", nullptr, &r) == K3_ERR_DOMAIN);
}

TEST_CASE("cm at beta^4 = 7/9") {
  Owned o;
  REQUIRE(k3_cm("7/9", 128, &o.r) == K3_OK);
  Json j = o.json();
  CHECK(j["results"]["jExact"] == "1728");
  CHECK(j["results"]["cm"]["verdict"] == "IsogenousToE");
  CHECK(j["results"]["cm"]["conductor"] == 1);
  CHECK(k3_report_all_passed(o.r));
  k3_report* r = nullptr;
  CHECK(k3_cm("7/9", 8, &r) == K3_ERR_INVALID_ARGUMENT);
}

TEST_CASE("moduli and verify") {
  Owned m, v, bad;
  REQUIRE(k3_moduli("all", &m.r) == K3_OK);
  CHECK(k3_report_all_passed(m.r));
  CHECK(m.json()["results"]["cayley"]["roundTrips"] == 100);
  REQUIRE(k3_verify("fricke", &v.r) == K3_OK);
  CHECK(k3_report_all_passed(v.r));
  k3_report* r = nullptr;
  CHECK(k3_verify("nonsense", &r) == K3_ERR_PARSE);
  CHECK(k3_moduli("nonsense", &r) == K3_ERR_PARSE);
}

TEST_CASE("reports are byte-stable") {
  for (const char* a : {"81/49", "5", "2/3"}) {
    Owned x, y;
    REQUIRE(k3_analyze(a, 0, &x.r) == K3_OK);
    REQUIRE(k3_analyze(a, 0, &y.r) == K3_OK);
    CHECK(std::string(k3_report_json(x.r, 2)) == std::string(k3_report_json(y.r, 2)));
  }
  Owned t;
  REQUIRE(k3_lattice_tn(5, &t.r) == K3_OK);
  std::string a = k3_report_json(t.r, 2), b = k3_report_json(t.r, -1), c = k3_report_json(t.r, 2);
  CHECK(a == c);
  CHECK(a != b);
}
