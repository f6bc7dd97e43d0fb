#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace {

struct Run {
    int status = -1;
    std::string out;
};

Run run(const std::string& args) {
    const std::string cmd = std::string(GERMINV_CLI) + " " + args + " 2>/dev/null";
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::array<char, 4096> buf{};
    while (std::fgets(buf.data(), buf.size(), p)) r.out += buf.data();
    const int raw = pclose(p);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

std::string data(const char* name) { return std::string(GERMINV_DATA) + "/" + name; }

}  // namespace

TEST_CASE("report of C5 as JSON") {
    const Run r = run("report --json " + data("c5.germ"));
    CHECK(r.status == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["invariants"]["r_i"] == 2);
    CHECK(j["invariants"]["r_f"] == 1);
    CHECK(j["invariants"]["mu_D"] == 6);
    CHECK(j["invariants"]["m_image"] == 2);
    CHECK(j["slice"]["m_fD"] == 2);
    CHECK(j["slice"]["mu_W"] == 13);
    CHECK(j["seed"] == 0);
}

TEST_CASE("report JSON is byte-identical across runs and honours --seed") {
    const Run a = run("report --json --seed 5 " + data("fd_partner.germ"));
    const Run b = run("report --json --seed 5 " + data("fd_partner.germ"));
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
    CHECK(nlohmann::json::parse(a.out)["seed"] == 5);
}

TEST_CASE("report of a germ that is not finitely determined") {
    const Run r = run("report --json " + data("not_fd.germ"));
    CHECK(r.status == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["verdict"] == "NonReducedD");
    CHECK(j["fd"] == false);
}

TEST_CASE("report of a corank-2 germ is partial") {
    const Run r = run("report " + data("double_fold.germ"));
    CHECK(r.status == 0);
    CHECK(r.out.find("corank:          2") != std::string::npos);
    CHECK(r.out.find("Unsupported") != std::string::npos);
}

TEST_CASE("input errors exit with status 1") {
    CHECK(run("report " + data("malformed.germ")).status == 1);
    CHECK(run("report " + data("missing.germ")).status == 1);
    CHECK(run("report").status == 1);
    CHECK(run("frobnicate").status == 1);
    CHECK(run("family " + data("c5.germ") + " --samples 0,1").status == 1);
    CHECK(run("family " + data("c5_family.germ") + " --samples 0,x").status == 1);
    CHECK(run("report --max-colength 1 " + data("c5.germ")).status == 1);
}

TEST_CASE("compare") {
    const Run same = run("compare --json " + data("c5.germ") + " " + data("c5_rescaled.germ"));
    CHECK(same.status == 0);
    CHECK(nlohmann::json::parse(same.out)["all_match"] == true);
    const Run differ = run("compare " + data("s1.germ") + " " + data("s2.germ"));
    CHECK(differ.status == 0);
    CHECK(differ.out.find("profiles differ") != std::string::npos);
    CHECK(run("compare " + data("c5.germ") + " " + data("double_fold.germ")).status == 1);
}

TEST_CASE("family") {
    const Run c5 = run("family --json " + data("c5_family.germ") + " --samples 0,1,-1,1/2");
    CHECK(c5.status == 0);
    const auto j = nlohmann::json::parse(c5.out);
    CHECK(j["constant"] == true);
    CHECK(j["samples"].size() == 4);
    const Run br = run("family " + data("s1_breaking.germ") + " --samples 0,1,2");
    CHECK(br.status == 0);
    CHECK(br.out.find("t = 1: NonReducedD") != std::string::npos);
}

TEST_CASE("corpus") {
    const Run r = run("corpus --json");
    CHECK(r.status == 0);
    const auto j = nlohmann::json::parse(r.out);
    REQUIRE(j.is_array());
    for (const auto& e : j) CHECK(e["pass"] == true);
    const Run t = run("corpus");
    CHECK(t.out.find("corpus entries pass") != std::string::npos);
}
