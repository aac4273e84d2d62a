// End-to-end tests of the CLI binary: exit-code contract, byte-identical
// output, format switching, and the stored-certificate round-trip.
#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include <json.hpp>

namespace fs = std::filesystem;
using Json = nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

RunResult run_cli(const std::string& args) {
    static int counter = 0;
    fs::path dir = fs::temp_directory_path();
    fs::path out = dir / ("monogen_out_" + std::to_string(++counter));
    fs::path err = dir / ("monogen_err_" + std::to_string(counter));
    std::string command = std::string(MONOGEN_CLI_PATH) + " " + args + " > " + out.string() +
                          " 2> " + err.string();
    int status = std::system(command.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out);
    r.err = slurp(err);
    fs::remove(out);
    fs::remove(err);
    return r;
}

} // namespace

TEST_CASE("exit-code contract") {
    SECTION("success paths exit 0") {
        CHECK(run_cli("stirling --row 4").exit_code == 0);
        CHECK(run_cli("discriminant \"[-5,0,1]\"").exit_code == 0);
        CHECK(run_cli("bernoulli --n 12").exit_code == 0);
        CHECK(run_cli("--help").exit_code == 0);
        CHECK(run_cli("construct --help").exit_code == 0);
    }
    SECTION("hypothesis violations exit 2") {
        auto r = run_cli("construct --q0 3 --q1 5 --d 2 --m 5 --q2 13");
        CHECK(r.exit_code == 2);
        Json j = Json::parse(r.out);
        REQUIRE(j.contains("violations"));
        bool names_11 = false;
        for (const auto& v : j["violations"])
            if (v["detail"].get<std::string>().find("11") != std::string::npos) names_11 = true;
        CHECK(names_11);
        CHECK(run_cli("non-monogenic --p 6 --s 2").exit_code == 2);
        CHECK(run_cli("newton \"[1,1]\" --p 4").exit_code == 2);
    }
    SECTION("inconclusive verdicts exit 3") {
        auto r = run_cli("verify-monogenic --q0 3 --q1 5 --d 2 --m 11 --q2 13 --p 23"
                         " --trial-bound 100 --rho-iterations 1");
        CHECK(r.exit_code == 3);
        Json j = Json::parse(r.out);
        CHECK(j["verdict"] == "inconclusive");
        CHECK(j["failing_link"] == "squarefree");
        CHECK(j["variable_squarefree"]["kind"] == "yes-up-to-bound");
    }
    SECTION("usage errors exit 64") {
        CHECK(run_cli("").exit_code == 64);
        CHECK(run_cli("frobnicate").exit_code == 64);
        CHECK(run_cli("construct --q0 3").exit_code == 64);
        auto r = run_cli("discriminant \"[-5,0,\"");
        CHECK(r.exit_code == 64);
        CHECK(r.err.find("byte") != std::string::npos); // names the parse position
    }
}

TEST_CASE("documented one-line outputs") {
    SECTION("stirling row, text mode") {
        auto r = run_cli("--format text stirling --row 4");
        CHECK(r.exit_code == 0);
        CHECK(r.out.find("[0, 6, 11, 6, 1]") != std::string::npos);
    }
    SECTION("discriminant of x^2 - 5") {
        Json j = Json::parse(run_cli("discriminant \"[-5,0,1]\"").out);
        CHECK(j["discriminant"] == "20");
    }
    SECTION("B_12") {
        Json j = Json::parse(run_cli("bernoulli --n 12").out);
        CHECK(j["value"] == "-691/2730");
    }
    SECTION("regularity") {
        CHECK(Json::parse(run_cli("bernoulli --regular 31").out)["regular"] == true);
        CHECK(Json::parse(run_cli("bernoulli --regular 37").out)["regular"] == false);
    }
    SECTION("non-monogenic verdict and bound") {
        auto r = run_cli("non-monogenic --p 7 --s 2");
        CHECK(r.exit_code == 0);
        Json j = Json::parse(r.out);
        CHECK(j["verdict"] == "non-monogenic");
        CHECK(j["jk"]["total_lower_bound"] == "3");
        CHECK(j["ore"]["total_lower_bound"] == "3");
        CHECK(j["point_11_strictly_below"] == true);
        CHECK(j["vertex_pattern_expected"] == true);
    }
}

TEST_CASE("construct reports") {
    SECTION("with p: assembled polynomial") {
        auto r = run_cli("construct --q0 3 --q1 5 --d 2 --m 11 --q2 13 --p 19");
        REQUIRE(r.exit_code == 0);
        Json j = Json::parse(r.out);
        CHECK(j["polynomial"]["coefficients"][0] == "27797"); // 7 * 11 * 19^2
        CHECK(j["cd_values"]["C"].size() == 2);
        CHECK(j["cd_values"]["D"].size() == 4);
        CHECK(j["shift"] == "7920");
    }
    SECTION("without p: antiderivative") {
        auto r = run_cli("construct --q0 3 --q1 5 --q2 13");
        REQUIRE(r.exit_code == 0);
        Json j = Json::parse(r.out);
        CHECK(j.contains("antiderivative"));
        CHECK(j["antiderivative"]["coefficients"][0] == "0");
        CHECK(j["antiderivative"]["coefficients"].back() == "1");
    }
}

TEST_CASE("newton subcommand renders the polygon") {
    fs::path svg_path = fs::temp_directory_path() / "monogen_test_polygon.svg";
    auto r = run_cli("newton \"[49,0,1764,1624,735,175,21,1]\" --p 7 --svg " + svg_path.string());
    REQUIRE(r.exit_code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["phi_index"] == "3");
    REQUIRE(j["polygon"]["vertices"].size() == 3);
    CHECK(j["polygon"]["vertices"][0] == Json::array({"0", "2"}));
    CHECK(j["polygon"]["vertices"][1] == Json::array({"3", "1"}));
    CHECK(j["polygon"]["vertices"][2] == Json::array({"7", "0"}));
    std::string ascii = j["ascii"].get<std::string>();
    CHECK(ascii.find('*') != std::string::npos);
    CHECK(ascii.find('o') != std::string::npos);
    std::string svg = slurp(svg_path);
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("<polyline") != std::string::npos);
    CHECK(svg.find("</svg>") != std::string::npos);
    fs::remove(svg_path);
}

TEST_CASE("index-bound subcommand reports both routes") {
    Json j = Json::parse(run_cli("index-bound \"[49,0,1764,1624,735,175,21,1]\" --p 7").out);
    CHECK(j["ore"]["total_lower_bound"] == "3");
    CHECK(j["jk"]["total_lower_bound"] == "3");
    CHECK(j["jk"]["factors"][0]["jk"]["t"] == "3");
    // degenerate for the factorwise route, fine for the polygon route
    Json d = Json::parse(run_cli("index-bound \"[0,0,1]\" --p 5").out);
    CHECK(d["ore"]["total_lower_bound"] == "0");
    CHECK(d.contains("jk_error"));
}

TEST_CASE("byte-identical output across runs") {
    for (const std::string& args :
         {std::string("verify-monogenic --q0 3 --q1 5 --d 1 --m 1 --q2 13 --p 17"),
          std::string("non-monogenic --p 11 --s 4"),
          std::string("newton \"[2187,0,0,1,0,0,0,1]\" --p 3"),
          std::string("density --q0 3 --q1 5 --q2 13 --bound 50")}) {
        auto first = run_cli(args);
        auto second = run_cli(args);
        CHECK(first.exit_code == second.exit_code);
        CHECK(first.out == second.out);
    }
}

TEST_CASE("config file and environment variable") {
    fs::path config_path = fs::temp_directory_path() / "monogen_test_config.json";
    {
        std::ofstream out(config_path);
        out << "{\"output_format\": \"text\", \"table_cap\": 8}\n";
    }
    SECTION("--config switches the default format") {
        auto r = run_cli("--config " + config_path.string() + " stirling --row 4");
        CHECK(r.exit_code == 0);
        CHECK(r.out.find("[0, 6, 11, 6, 1]") != std::string::npos);
        CHECK(r.out.find('{') == std::string::npos);
    }
    SECTION("caps from the config are enforced") {
        auto r = run_cli("--config " + config_path.string() + " stirling --row 9");
        CHECK(r.exit_code == 2);
        CHECK(r.err.find("cap") != std::string::npos);
    }
    SECTION("explicit --format beats the config") {
        auto r = run_cli("--config " + config_path.string() + " --format json stirling --row 4");
        CHECK(r.exit_code == 0);
        CHECK(Json::parse(r.out)["row"].size() == 5);
    }
    SECTION("MONOGEN_CONFIG is honored") {
        std::string command = "MONOGEN_CONFIG=" + config_path.string() + " " + MONOGEN_CLI_PATH +
                              " stirling --row 4";
        FILE* pipe = popen(command.c_str(), "r");
        REQUIRE(pipe != nullptr);
        std::string out;
        char buf[256];
        while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
        pclose(pipe);
        CHECK(out.find("row: [0, 6, 11, 6, 1]") != std::string::npos);
    }
    SECTION("unknown keys are rejected") {
        fs::path bad_path = fs::temp_directory_path() / "monogen_test_config_bad.json";
        std::ofstream(bad_path) << "{\"serach_limit\": 10}\n";
        auto r = run_cli("--config " + bad_path.string() + " stirling --row 4");
        CHECK(r.exit_code == 64);
        CHECK(r.err.find("serach_limit") != std::string::npos);
        fs::remove(bad_path);
    }
    SECTION("wrong value types are rejected naming the key") {
        fs::path bad_path = fs::temp_directory_path() / "monogen_test_config_type.json";
        std::ofstream(bad_path) << "{\"table_cap\": \"8\"}\n";
        auto r = run_cli("--config " + bad_path.string() + " stirling --row 4");
        CHECK(r.exit_code == 64);
        CHECK(r.err.find("table_cap") != std::string::npos);
        CHECK(r.err.find("unsigned integer") != std::string::npos);
        fs::remove(bad_path);
    }
    SECTION("malformed config json is a usage error") {
        fs::path bad_path = fs::temp_directory_path() / "monogen_test_config_syntax.json";
        std::ofstream(bad_path) << "{\"table_cap\": 8\n";
        auto r = run_cli("--config " + bad_path.string() + " stirling --row 4");
        CHECK(r.exit_code == 64);
        fs::remove(bad_path);
    }
    SECTION("missing config file is a usage error") {
        auto r = run_cli("--config /nonexistent/monogen.json stirling --row 4");
        CHECK(r.exit_code == 64);
        CHECK(r.err.find("cannot open") != std::string::npos);
    }
    fs::remove(config_path);
}

TEST_CASE("stored certificates re-verify byte for byte") {
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(MONOGEN_CORPUS_DIR))
        if (entry.path().extension() == ".json") files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    REQUIRE(!files.empty());
    for (const auto& path : files) {
        CAPTURE(path.filename().string());
        std::string stored = slurp(path);
        Json j = Json::parse(stored);
        std::string schema = j["schema"].get<std::string>();
        std::string args;
        if (schema == "monogenicity-certificate.v1") {
            const Json& P = j["params"];
            args = "verify-monogenic --q0 " + P["q0"].get<std::string>() + " --q1 " +
                   P["q1"].get<std::string>() + " --d " + P["d"].get<std::string>() + " --m " +
                   P["m"].get<std::string>() + " --q2 " + P["q2"].get<std::string>() + " --p " +
                   P["p"].get<std::string>();
        } else {
            REQUIRE(schema == "non-monogenicity-certificate.v1");
            args = "non-monogenic --p " + j["p"].get<std::string>() + " --s " +
                   j["s"].get<std::string>();
        }
        auto r = run_cli(args);
        CHECK(r.exit_code == 0);
        CHECK(r.out == stored);
    }
}
