// End-to-end checks of the command-line tool. The binary path arrives as
// argv[1] (wired up by ctest); everything runs through a scratch directory.
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <json.hpp>

using Json = nlohmann::json;

namespace {

std::string g_binary;
std::string g_dir;
int g_failures = 0;

#define CLI_CHECK(cond)                                                      \
    do {                                                                     \
        if (!(cond)) {                                                       \
            ++g_failures;                                                    \
            std::cerr << "CHECK failed at " << __LINE__ << ": " #cond "\n"; \
        }                                                                    \
    } while (0)

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string out_file = g_dir + "/stdout.txt";
    std::string cmd = g_binary + " " + args + " > " + out_file + " 2> " + g_dir + "/stderr.txt";
    int rc = std::system(cmd.c_str());
    std::ifstream f(out_file);
    std::stringstream ss;
    ss << f.rdbuf();
    return {WEXITSTATUS(rc), ss.str()};
}

void write_file(const std::string& name, const std::string& content) {
    std::ofstream f(g_dir + "/" + name);
    f << content;
}

std::string path(const std::string& name) { return g_dir + "/" + name; }

Json parse_or_fail(const RunResult& r, int line) {
    if (r.exit_code != 0 || r.out.empty()) {
        ++g_failures;
        std::cerr << "command failed before parse at line " << line << " (exit " << r.exit_code
                  << ")\n";
        return Json::object();
    }
    try {
        return Json::parse(r.out);
    } catch (const std::exception& e) {
        ++g_failures;
        std::cerr << "unparseable output at line " << line << ": " << e.what() << "\n";
        return Json::object();
    }
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: test_cli <poq-binary>\n";
        return 2;
    }
    g_binary = argv[1];
    char tmpl[] = "/tmp/poq_cli_XXXXXX";
    g_dir = mkdtemp(tmpl);

    // generate and reparse: the emitted poset JSON round-trips
    {
        auto r = run("generate tamari 4");
        CLI_CHECK(r.exit_code == 0);
        Json j = parse_or_fail(r, __LINE__);
        CLI_CHECK(j["n"] == 14);
        write_file("tamari4.json", r.out);
        auto again = run("dot " + path("tamari4.json"));
        CLI_CHECK(again.exit_code == 0);
        CLI_CHECK(again.out.find("->") != std::string::npos);
    }

    // invariants of the generated poset
    {
        auto r = run("invariants " + path("tamari4.json"));
        CLI_CHECK(r.exit_code == 0);
        Json j = parse_or_fail(r, __LINE__);
        CLI_CHECK(j["structural"]["is_lattice"] == true);
        CLI_CHECK(j["graded"] == false);  // the rotation order is not graded at n=4
        CLI_CHECK(j["mobius"].is_array());
    }
    {
        run("generate boolean 3 -o " + path("b3.json"));
        auto r = run("invariants " + path("b3.json"));
        Json j = parse_or_fail(r, __LINE__);
        CLI_CHECK(j["char_poly"] == Json::array({-1, 3, -3, 1}));
        CLI_CHECK(j["peck"]["is_peck"] == true);
    }

    // classify the collapsed 3-chain: compatibility fails with a circle witness
    {
        write_file("chain3.json", R"({"n":3,"labels":["p","q","r"],"covers":[[0,1],[1,2]]})");
        write_file("bad.json", R"({"blocks":[[0,2],[1]]})");
        auto r = run("classify " + path("chain3.json") + " " + path("bad.json"));
        CLI_CHECK(r.exit_code == 0);
        Json j = parse_or_fail(r, __LINE__);
        CLI_CHECK(j["compatible"]["holds"] == false);
        CLI_CHECK(j["compatible"]["witness"]["kind"] == "theta_circle");
        CLI_CHECK(j["weak_order"]["holds"] == false);
    }

    // quotient modes and their validation errors
    {
        auto bad = run("quotient " + path("chain3.json") + " " + path("bad.json") + " --mode closure");
        CLI_CHECK(bad.exit_code == 1);
        auto uq = run("universal-quotient " + path("chain3.json") + " " + path("bad.json"));
        CLI_CHECK(uq.exit_code == 0);
        Json j = parse_or_fail(uq, __LINE__);
        CLI_CHECK(j["quotient"]["n"] == 1);
        CLI_CHECK(j["needed_collapse"] == true);
    }

    // cambrian partition file + classify: a lattice congruence
    {
        run("generate cambrian 3 --orientation a -o " + path("w3.json") + " --partition-out " +
            path("camb.json"));
        auto r = run("classify " + path("w3.json") + " " + path("camb.json"));
        CLI_CHECK(r.exit_code == 0);
        Json j = parse_or_fail(r, __LINE__);
        CLI_CHECK(j["lattice"]["holds"] == true);
        CLI_CHECK(j["order"]["holds"] == true);
        CLI_CHECK(j["weak_order"]["holds"] == true);
    }

    // orbit quotient through the CLI
    {
        write_file("b2.json", R"({"n":4,"labels":["0","a","b","1"],"covers":[[0,1],[0,2],[1,3],[2,3]]})");
        write_file("swap.json", R"({"degree":4,"generators":[[0,2,1,3]]})");
        auto r = run("orbit " + path("b2.json") + " " + path("swap.json"));
        CLI_CHECK(r.exit_code == 0);
        Json j = parse_or_fail(r, __LINE__);
        CLI_CHECK(j["quotient"]["n"] == 3);
        CLI_CHECK(j["partition"]["blocks"].size() == 3);
    }

    // completion of the 2-antichain: four closed sets
    {
        write_file("a2.json", R"({"n":2,"labels":["x","y"],"covers":[]})");
        auto r = run("complete " + path("a2.json"));
        Json j = parse_or_fail(r, __LINE__);
        CLI_CHECK(j["dm"]["poset"]["n"] == 4);
        CLI_CHECK(j["m0"]["poset"]["n"] == 4);
    }

    // lattice congruence enumeration
    {
        auto r = run("lattice-congruences " + path("b2.json"));
        Json j = parse_or_fail(r, __LINE__);
        CLI_CHECK(j["count"] == 4);
        auto bad = run("lattice-congruences " + path("a2.json"));
        CLI_CHECK(bad.exit_code == 1);  // not a lattice
    }

    // the experiment: byte-identical across runs, exit 0, violations zero
    {
        auto r1 = run("verify-matrix --n 3 -o " + path("m1.json"));
        auto r2 = run("verify-matrix --n 3 -o " + path("m2.json"));
        CLI_CHECK(r1.exit_code == 0);
        CLI_CHECK(r2.exit_code == 0);
        std::ifstream f1(path("m1.json")), f2(path("m2.json"));
        std::stringstream s1, s2;
        s1 << f1.rdbuf();
        s2 << f2.rdbuf();
        CLI_CHECK(!s1.str().empty());
        CLI_CHECK(s1.str() == s2.str());
        Json j = Json::parse(s1.str());
        for (const auto& a : j["arrows_checked"]) CLI_CHECK(a["violations"] == 0);
    }

    // malformed input: diagnostic, exit 1
    {
        write_file("broken.json", "{\"n\": 3, \"covers\": [[0,");
        auto r = run("classify " + path("broken.json") + " " + path("bad.json"));
        CLI_CHECK(r.exit_code == 1);
        write_file("oob.json", R"({"n":2,"covers":[[0,9]]})");
        auto r2 = run("dot " + path("oob.json"));
        CLI_CHECK(r2.exit_code == 1);
    }

    if (g_failures == 0) {
        std::cout << "cli driver: all checks passed\n";
        return 0;
    }
    std::cout << "cli driver: " << g_failures << " failures\n";
    return 1;
}
