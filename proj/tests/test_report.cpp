#include "test_util.hpp"

#include <cstdlib>

#include <json.hpp>

#include "qam/report_io.hpp"

using namespace qam;

namespace {

BoundReport worked_report() {
    const Interval u(0.0, 1.0, false, false);
    const Generator f = make_builtin(BuiltinFamily::exp(15.0), u);
    const Generator g = make_builtin(BuiltinFamily::exp(20.0), u);
    return full_report(f, g, u);
}

}  // namespace

TEST_CASE("doubles round-trip through the 17-digit format") {
    for (double v : {0.1, 1.0 / 3.0, 0.2125685274190679, -1.75e-300, 5e-324,
                     3.1918433502887426e-17, 0.0, 481896178.03731817}) {
        const std::string s = format_double(v);
        char* end = nullptr;
        CHECK(std::strtod(s.c_str(), &end) == v);
        CHECK(*end == '\0');
    }
}

TEST_CASE("identical inputs produce byte-identical json") {
    const std::string a = to_json(worked_report());
    const std::string b = to_json(worked_report());
    CHECK(a == b);
}

TEST_CASE("json carries the full schema and exact values") {
    const BoundReport rep = worked_report();
    const auto j = nlohmann::json::parse(to_json(rep));

    CHECK(j["pair"][0] == "exp:15");
    CHECK(j["pair"][1] == "exp:20");
    CHECK(j["interval"][0].get<double>() == rep.U.lo);
    CHECK(j["interval"][1].get<double>() == rep.U.hi);
    CHECK(j["K"].get<double>() == rep.K);
    CHECK(j["epsilon"].get<double>() == rep.epsilon);
    CHECK(j["rho"]["value"].get<double>() == rep.rho.value);
    CHECK(j["rho"]["arg"]["x"].get<double>() == rep.rho.x);
    CHECK(j["rho"]["arg"]["z"].get<double>() == rep.rho.z);
    CHECK(j["rho"]["arg"]["theta"].get<double>() == rep.rho.theta);
    CHECK(j["rho"]["gap"].get<double>() == rep.rho.refinement_gap);
    CHECK(j["sandwich"]["ok"].get<bool>() == rep.sandwich_ok);

    REQUIRE(j["bounds"].size() == rep.bounds.size());
    for (std::size_t i = 0; i < rep.bounds.size(); ++i) {
        CHECK(j["bounds"][i]["name"] == rep.bounds[i].name);
        CHECK(j["bounds"][i]["value"].get<double>() == rep.bounds[i].value);
        CHECK(j["bounds"][i]["applicable"].get<bool>() ==
              rep.bounds[i].applicable);
        for (const auto& [k, v] : rep.bounds[i].params)
            CHECK(j["bounds"][i]["params"][k].get<double>() == v);
    }
}

TEST_CASE("csv has one row per bound") {
    const BoundReport rep = worked_report();
    const std::string csv = to_csv(rep);
    std::size_t rows = 0;
    for (char c : csv)
        if (c == '\n') ++rows;
    CHECK(rows == rep.bounds.size() + 2);  // header + measured rho + bounds
    CHECK(csv.rfind("name,value,applicable\n", 0) == 0);
    CHECK(csv.find("rho_measured,") != std::string::npos);
    CHECK(csv.find("box_lower,") != std::string::npos);
}

TEST_CASE("text rendering names every bound") {
    const BoundReport rep = worked_report();
    const std::string text = to_text(rep);
    for (const BoundEntry& e : rep.bounds)
        CHECK(text.find(e.name) != std::string::npos);
    CHECK(text.find("sandwich  ok") != std::string::npos);
}

TEST_CASE("rho json is self-contained") {
    const BoundReport rep = worked_report();
    const auto j = nlohmann::json::parse(to_json(rep.rho));
    CHECK(j["value"].get<double>() == rep.rho.value);
    CHECK(j["evaluations"].get<long long>() == rep.rho.evaluations);
}
