#include "doctest.h"

#include "json.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace fs = std::filesystem;

namespace {

const fs::path& workdir() {
    static const fs::path dir = [] {
        auto d = fs::temp_directory_path() / ("eccir_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

int run(const std::string& args, const std::string& out = "stdout.txt") {
    const std::string cmd = std::string("\"") + ECCIR_CLI_PATH + "\" " + args + " > \"" + (workdir() / out).string() +
                            "\" 2> \"" + (workdir() / "stderr.txt").string() + "\"";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::string& name) {
    std::ifstream in(workdir() / name);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string path(const std::string& name) { return "\"" + (workdir() / name).string() + "\""; }

}  // namespace

TEST_CASE("construct, profile and simulate") {
    REQUIRE(run("construct coset-partition --n 31 --parts \"1,3;5,15;7,11\" -o " + path("ex1.json")) == 0);
    const auto e = nlohmann::json::parse(slurp("ex1.json"));
    CHECK(e.at("L") == 3);
    CHECK(e.at("k") == 10);

    REQUIRE(run("profile -i " + path("ex1.json") + " --format csv", "profile.csv") == 0);
    const auto csv = slurp("profile.csv");
    CHECK(csv.find("\"{1}\",1,10,exact,12,12,") != std::string::npos);
    CHECK(csv.find("\"{1,2,3}\",3,30,exact,2,2,") != std::string::npos);

    REQUIRE(run("profile -i " + path("ex1.json") + " --use-equivalences", "profile.json") == 0);
    const auto prof = nlohmann::json::parse(slurp("profile.json"));
    CHECK(prof.at("entries").size() == 7);

    REQUIRE(run("simulate -i " + path("ex1.json") + " --side-info 1,2 --errors 5 --trials 50 --seed 4", "sim1.json") == 0);
    REQUIRE(run("simulate -i " + path("ex1.json") + " --side-info 1,2 --errors 5 --trials 50 --seed 4", "sim2.json") == 0);
    CHECK(slurp("sim1.json") == slurp("sim2.json"));
    const auto rep = nlohmann::json::parse(slurp("sim1.json"));
    CHECK(rep.at("successes") == 50);
}

TEST_CASE("other families build") {
    CHECK(run("construct grs-mdsir --q 11 --n 6 --L 4") == 0);
    CHECK(run("construct qr --n 23") == 0);
    CHECK(run("construct cr --n 31 --keep 1,2") == 0);
    CHECK(run("construct primitive-pair --m 5") == 0);
    CHECK(run("construct concat --q 8 --n 3 --L 2 --inner-n 7 --inner-reps 3") == 0);
    CHECK(run("construct piret --inner-n 17") == 0);
    CHECK(nlohmann::json::parse(slurp("stdout.txt")).at("provenance").at("construction") == "piret");
    CHECK(run("search-piret --inner-n 21") == 0);
    CHECK(run("search-piret --inner-n 9 --reference") == 0);
}

TEST_CASE("verification exit codes") {
    CHECK(run("verify example1") == 0);
    CHECK(slurp("stdout.txt").find("PASS") != std::string::npos);
    CHECK(run("verify example1 --json") == 0);
    CHECK(nlohmann::json::parse(slurp("stdout.txt")).at(0).at("pass") == true);
    // Too small an enumeration budget to confirm the exact values.
    CHECK(run("verify qr_list --dim-limit 1") == 1);
}

TEST_CASE("usage and input errors") {
    CHECK(run("") == 2);
    CHECK(run("frobnicate") == 2);
    CHECK(run("verify no_such_suite") == 2);
    CHECK(run("construct grs-mdsir --q 7 --n 6 --L 2") == 2);
    CHECK(run("construct qr --n 13") == 2);
    CHECK(run("construct grs-mdsir --q 11") == 2);
    CHECK(run("profile -i " + path("missing.json")) == 2);
    std::ofstream(workdir() / "garbage.json") << "{\"q\": 2";
    CHECK(run("profile -i " + path("garbage.json")) == 2);
    CHECK(run("--help") == 0);
}
