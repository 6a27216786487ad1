#include <doctest.h>

#include <unav/generate.hpp>
#include <unav/graph.hpp>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

struct CliRun {
    int exit_code;
    std::string out;
};

std::string tmp_path(const std::string& name) {
    return std::string(UNAV_TEST_TMPDIR) + "/" + name;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void spit(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    out << content;
}

// Runs the CLI with the given argument string, capturing stdout; stderr is
// routed to a scratch file so error paths stay quiet in the test log.
CliRun run_cli(const std::string& args) {
    std::string out_file = tmp_path("cli_stdout.txt");
    std::string cmd = std::string(UNAV_CLI_PATH) + " " + args + " > " + out_file + " 2> " +
                      tmp_path("cli_stderr.txt");
    int status = std::system(cmd.c_str());
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, slurp(out_file)};
}

}  // namespace

TEST_CASE("cli generates, detects and verifies in a round trip") {
    std::string graph = tmp_path("p2.upc");
    CliRun gen = run_cli("gen p-pattern --m 2 -o " + graph);
    CHECK(gen.exit_code == 0);
    CHECK(slurp(graph) == unav::encode(unav::gen_p_pattern(2).coloring));

    CliRun detect = run_cli("detect --pattern p-pattern --t 2 -i " + graph);
    CHECK(detect.exit_code == 0);
    nlohmann::json w = nlohmann::json::parse(detect.out);
    CHECK(w["kind"] == "p_pattern");

    std::string witness = tmp_path("p2_witness.json");
    spit(witness, detect.out);
    CliRun verify = run_cli("verify -i " + graph + " --witness " + witness);
    CHECK(verify.exit_code == 0);
    CHECK(nlohmann::json::parse(verify.out)["valid"] == true);

    // Reshuffling members across parts keeps the shape legal but breaks the
    // cross colors, flipping the verdict and the exit code.
    w["sets"] = nlohmann::json::array({{0, 2}, {1, 3}, {4, 5}, {6, 7}});
    spit(witness, w.dump());
    CliRun bad = run_cli("verify -i " + graph + " --witness " + witness);
    CHECK(bad.exit_code == 1);
    CHECK(nlohmann::json::parse(bad.out)["valid"] == false);
}

TEST_CASE("cli reports not-found as exit 1 with a status body") {
    std::string graph = tmp_path("p2b.upc");
    run_cli("gen p-pattern --m 2 -o " + graph);
    CliRun r = run_cli("detect --pattern induced-biclique --t 2 --color r -i " + graph);
    CHECK(r.exit_code == 1);
    CHECK(nlohmann::json::parse(r.out)["status"] == "none");

    CliRun blue = run_cli("detect --pattern induced-biclique --t 2 --color b -i " + graph);
    CHECK(blue.exit_code == 1);
}

TEST_CASE("cli finds monochromatic cliques with the chosen color") {
    std::string graph = tmp_path("blue6.upc");
    CliRun gen = run_cli("gen random --n 6 --p 0/1 --seed 1 -o " + graph);
    CHECK(gen.exit_code == 0);
    CliRun r = run_cli("detect --pattern mono-clique --t 3 --color b -i " + graph);
    CHECK(r.exit_code == 0);
    nlohmann::json w = nlohmann::json::parse(r.out);
    CHECK(w["kind"] == "mono_clique");
    CHECK(w["color"] == "blue");
    CliRun none = run_cli("detect --pattern mono-clique --t 3 --color r -i " + graph);
    CHECK(none.exit_code == 1);
}

TEST_CASE("cli maps malformed input and usage errors to distinct codes") {
    std::string mangled = tmp_path("mangled.upc");
    spit(mangled, "UPC1 4\nRRX\nBR\nB\n");
    CliRun fmt = run_cli("detect --pattern mono-clique --t 2 -i " + mangled);
    CHECK(fmt.exit_code == 3);

    CliRun missing = run_cli("detect --pattern mono-clique --t 2 -i " + tmp_path("absent.upc"));
    CHECK(missing.exit_code == 3);

    CliRun usage = run_cli("detect --pattern not-a-pattern --t 2 -i " + mangled);
    CHECK(usage.exit_code == 2);
    CliRun flag = run_cli("gen p-pattern --no-such-flag 2");
    CHECK(flag.exit_code == 2);
    CliRun subless = run_cli("");
    CHECK(subless.exit_code == 2);
}

TEST_CASE("cli generation is byte-stable per seed") {
    std::string a = tmp_path("rand_a.upc");
    std::string b = tmp_path("rand_b.upc");
    CHECK(run_cli("gen random --n 12 --p 1/2 --seed 5 -o " + a).exit_code == 0);
    CHECK(run_cli("gen random --n 12 --p 1/2 --seed 5 -o " + b).exit_code == 0);
    CHECK(slurp(a) == slurp(b));
    CHECK(run_cli("gen random --n 12 --p 1/2 --seed 6 -o " + b).exit_code == 0);
    CHECK(slurp(a) != slurp(b));

    std::string t1 = tmp_path("tight_a.upc");
    std::string t2 = tmp_path("tight_b.upc");
    CHECK(run_cli("gen tightness --eps 1/4 --t 4 --recolor 1/2 --seed 3 -o " + t1).exit_code == 0);
    CHECK(run_cli("gen tightness --eps 1/4 --t 4 --recolor 1/2 --seed 3 -o " + t2).exit_code == 0);
    CHECK(slurp(t1) == slurp(t2));

    std::string m = tmp_path("mindeg.upc");
    CHECK(run_cli("gen random-mindeg --n 24 --delta 3/10 --seed 2 -o " + m).exit_code == 0);
    unav::GraphColoring g = unav::decode(slurp(m));
    CHECK(g.min_degree_ok(unav::DegreeThreshold::linear(unav::Rat(3, 10))));
}

TEST_CASE("cli extract emits a witness with its trace") {
    std::string graph = tmp_path("p4.upc");
    run_cli("gen p-pattern --m 4 -o " + graph);
    std::string trace = tmp_path("p4_trace.json");
    CliRun r = run_cli("extract --theorem 2 --eps 1/5 --t 2 --trace-out " + trace + " -i " + graph);
    CHECK(r.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    REQUIRE(j.contains("witness"));
    CHECK(j["witness"]["kind"] == "local_pattern");
    REQUIRE(j.contains("trace"));
    nlohmann::json t = nlohmann::json::parse(slurp(trace));
    CHECK(t.contains("steps"));
    CHECK(!t["steps"].empty());

    // The first pipeline refuses this instance: degree floor not met.
    CliRun pre = run_cli("extract --theorem 1 --eps 1/20 --t 2 -i " + graph);
    CHECK(pre.exit_code == 1);
}

TEST_CASE("cli sweep writes deterministic csv") {
    std::string cfg = tmp_path("sweep_cfg.json");
    spit(cfg, R"({
      "generator": "p-pattern",
      "n": [8, 12],
      "eps": ["1/10"],
      "t": [2],
      "trials": 3,
      "seed": 17,
      "mode": "oracle"
    })");
    std::string csv_a = tmp_path("sweep_a.csv");
    std::string csv_b = tmp_path("sweep_b.csv");
    CHECK(run_cli("sweep --config " + cfg + " --out " + csv_a).exit_code == 0);
    CHECK(run_cli("sweep --config " + cfg + " --out " + csv_b).exit_code == 0);
    std::string a = slurp(csv_a);
    CHECK(a == slurp(csv_b));

    std::istringstream lines(a);
    std::string header;
    std::getline(lines, header);
    CHECK(header == "generator,n,eps,t,seed,mode,found_kind,rounds,millis");
    std::size_t rows = 0;
    std::string line;
    while (std::getline(lines, line)) {
        if (!line.empty()) ++rows;
    }
    CHECK(rows == 6);
    CHECK(a.find("p_pattern") != std::string::npos);

    CliRun bad_cfg = run_cli("sweep --config " + tmp_path("absent.json") + " --out -");
    CHECK(bad_cfg.exit_code == 3);
}
