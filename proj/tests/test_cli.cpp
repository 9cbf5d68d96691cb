#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "graphgeom/commands.hpp"
#include "graphgeom/errors.hpp"
#include "graphgeom/io.hpp"
#include "graphgeom/synth.hpp"
#include "graphgeom/wl.hpp"

using namespace graphgeom;
using graphgeom::cli::json;

namespace {

namespace fs = std::filesystem;

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("graphgeom_test_" + std::to_string(::getpid()) + "_" +
                std::to_string(counter()++));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
    static int& counter() {
        static int c = 0;
        return c;
    }
};

json parse_file(const std::string& path) {
    return json::parse(cli::read_text_file(path));
}

}  // namespace

TEST_CASE("graph json round-trip is byte-identical") {
    LabeledGraph lg;
    lg.graph = build_graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    lg.labels = std::vector<int>{0, 0, 1, 1};
    Eigen::MatrixXd x(4, 2);
    x << 0.5, -1.25, 3.0, 0.1, -0.75, 2.0, 1.0 / 3.0, 0.0;
    lg.features = x;

    const std::string text = cli::serialize_graph(lg);
    const LabeledGraph parsed = cli::parse_graph_json(text);
    CHECK(parsed.graph == lg.graph);
    CHECK(*parsed.labels == *lg.labels);
    CHECK((*parsed.features - *lg.features).cwiseAbs().maxCoeff() == 0.0);
    CHECK(cli::serialize_graph(parsed) == text);
}

TEST_CASE("edge list input with label sidecar") {
    TempDir dir;
    cli::write_text_file(dir.file("g.tsv"), "0\t1\n1\t2\n");
    cli::write_text_file(dir.file("labels.txt"), "0\n0\n1\n");
    const LabeledGraph lg = cli::read_graph_file(dir.file("g.tsv"), dir.file("labels.txt"));
    CHECK(lg.graph.num_nodes() == 3);
    CHECK(lg.graph.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
    CHECK(*lg.labels == std::vector<int>{0, 0, 1});

    cli::write_text_file(dir.file("bad.tsv"), "0\n");
    CHECK_THROWS_AS(cli::read_graph_file(dir.file("bad.tsv")), InputError);
}

TEST_CASE("file digest is stable") {
    TempDir dir;
    cli::write_text_file(dir.file("a.txt"), "hello graph\n");
    const std::string d1 = cli::file_digest(dir.file("a.txt"));
    const std::string d2 = cli::file_digest(dir.file("a.txt"));
    CHECK(d1 == d2);
    CHECK(d1.rfind("fnv1a64:", 0) == 0);
    cli::write_text_file(dir.file("b.txt"), "hello graph!\n");
    CHECK(cli::file_digest(dir.file("b.txt")) != d1);
}

TEST_CASE("metrics command emits a report") {
    TempDir dir;
    LabeledGraph lg;
    lg.graph = complete_bipartite_graph(2, 2);
    lg.labels = std::vector<int>{0, 0, 1, 1};
    cli::write_graph_file(dir.file("g.json"), lg);

    const std::string out = dir.file("report.json");
    CHECK(cli::run_command({"metrics", "--graph", dir.file("g.json"), "--out", out}) == 0);
    const json report = parse_file(out);
    CHECK(report["command"] == "metrics");
    CHECK(report["payload"]["adjusted_homophily"].get<double>() == doctest::Approx(-1.0));
    CHECK(report["payload"]["label_informativeness"].get<double>() == doctest::Approx(1.0));
}

TEST_CASE("degenerate labels exit with an input error") {
    TempDir dir;
    LabeledGraph lg;
    lg.graph = path_graph(3);
    lg.labels = std::vector<int>{0, 0, 0};
    cli::write_graph_file(dir.file("g.json"), lg);
    CHECK(cli::run_command({"metrics", "--graph", dir.file("g.json")}) == 2);
}

TEST_CASE("unknown flags are input errors") {
    CHECK(cli::run_command({"metrics", "--graph", "x.json", "--bogus"}) == 2);
    CHECK(cli::run_command({"no-such-command"}) == 2);
}

TEST_CASE("rewire command bookkeeping") {
    TempDir dir;
    LabeledGraph lg;
    lg.graph = erdos_renyi(40, 0.08, 2024);
    cli::write_graph_file(dir.file("g.json"), lg);

    const std::string out = dir.file("report.json");
    const std::string out_graph = dir.file("rewired.json");
    CHECK(cli::run_command({"rewire", "--graph", dir.file("g.json"), "--rho", "0.02",
                            "--knn", "1", "--pe-dims", "8", "--mode", "one-shot",
                            "--out-graph", out_graph, "--out", out}) == 0);
    const json report = parse_file(out);
    const auto& step = report["payload"]["steps"][0];
    const int input_edges = report["payload"]["input_edges"].get<int>();
    const int output_edges = report["payload"]["output_edges"].get<int>();
    CHECK(output_edges ==
          input_edges - step["pruned"].get<int>() + step["added"].get<int>());

    const LabeledGraph rewired = cli::read_graph_file(out_graph);
    CHECK(rewired.graph.num_edges() == output_edges);
}

TEST_CASE("generate then metrics pipeline") {
    TempDir dir;
    const std::string g = dir.file("g.json");
    CHECK(cli::run_command({"generate", "--classes", "2", "--per-class", "60", "--preset",
                            "matching", "--p", "0.1", "--seed", "5", "--out", g}) == 0);
    const std::string out = dir.file("m.json");
    CHECK(cli::run_command({"metrics", "--graph", g, "--out", out}) == 0);
    const json report = parse_file(out);
    CHECK(report["payload"]["label_informativeness"].get<double>() ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(report["payload"]["edge_homophily"].get<double>() == 0.0);

    // identical invocation produces identical bytes
    const std::string g2 = dir.file("g2.json");
    CHECK(cli::run_command({"generate", "--classes", "2", "--per-class", "60", "--preset",
                            "matching", "--p", "0.1", "--seed", "5", "--out", g2}) == 0);
    CHECK(cli::read_text_file(g) == cli::read_text_file(g2));
}

TEST_CASE("bundled pair files match the library") {
    const fs::path dir = fs::path(GRAPHGEOM_DATA_DIR) / "wl_pairs";
    if (!fs::exists(dir)) return;  // source tree layout only
    for (const GraphPair& pair : wl_pair_library()) {
        const auto a = cli::read_graph_file((dir / (pair.name + "_a.json")).string());
        const auto b = cli::read_graph_file((dir / (pair.name + "_b.json")).string());
        CHECK(a.graph == pair.a);
        CHECK(b.graph == pair.b);
    }
}

TEST_CASE("wl pair library ships through generate and wl-test") {
    TempDir dir;
    const std::string a = dir.file("a.json"), b = dir.file("b.json");
    CHECK(cli::run_command({"generate", "--wl-pair", "c6_vs_two_c3", "--side", "a",
                            "--out", a}) == 0);
    CHECK(cli::run_command({"generate", "--wl-pair", "c6_vs_two_c3", "--side", "b",
                            "--out", b}) == 0);
    const Graph ga = cli::read_graph_file(a).graph;
    CHECK(ga == cycle_graph(6));

    const std::string out = dir.file("wl.json");
    CHECK(cli::run_command({"wl-test", "--graph-a", a, "--graph-b", b, "--pe-dims", "2",
                            "--out", out}) == 0);
    const json report = parse_file(out);
    CHECK_FALSE(report["payload"]["modes"]["plain"]["distinguishable"].get<bool>());
    CHECK_FALSE(report["payload"]["modes"]["curvature"]["distinguishable"].get<bool>());
    CHECK(report["payload"]["modes"]["common-neighbor"]["distinguishable"].get<bool>());
    CHECK(report["payload"]["modes"]["pe"]["distinguishable"].get<bool>());
}

TEST_CASE("lappe and diffuse commands") {
    TempDir dir;
    LabeledGraph lg;
    lg.graph = cycle_graph(8);
    lg.labels = std::vector<int>{0, 1, 0, 1, 0, 1, 0, 1};
    Eigen::MatrixXd x(8, 2);
    for (int i = 0; i < 8; ++i) {
        x(i, 0) = i;
        x(i, 1) = -i;
    }
    lg.features = x;
    cli::write_graph_file(dir.file("g.json"), lg);

    const std::string pe_out = dir.file("pe.json");
    CHECK(cli::run_command({"lappe", "--graph", dir.file("g.json"), "--dims", "2",
                            "--out", pe_out}) == 0);
    const json pe = parse_file(pe_out);
    CHECK(pe["payload"]["dims"].get<int>() == 2);
    CHECK(pe["payload"]["coordinates"].size() == 8);

    const std::string diff_out = dir.file("diff.json");
    CHECK(cli::run_command({"diffuse", "--graph", dir.file("g.json"), "--steps", "2",
                            "--operator", "curvature", "--beta", "0.5", "--out",
                            diff_out}) == 0);
    const json diff = parse_file(diff_out);
    CHECK(diff["payload"]["features"].size() == 8);
    // signed beta: the report carries both weighting directions
    CHECK(diff["payload"].contains("cross_class_mixing"));
    CHECK(diff["payload"].contains("cross_class_mixing_reversed_beta"));

    // a graph without features cannot be diffused
    LabeledGraph bare;
    bare.graph = cycle_graph(4);
    cli::write_graph_file(dir.file("bare.json"), bare);
    CHECK(cli::run_command({"diffuse", "--graph", dir.file("bare.json")}) == 2);
}

TEST_CASE("experiment command emits an accuracy table") {
    TempDir dir;
    const std::string out = dir.file("exp.json");
    CHECK(cli::run_command({"experiment", "--regime", "feature", "--seeds", "2", "--seed",
                            "3", "--out", out}) == 0);
    const json report = parse_file(out);
    const auto& regime = report["payload"]["regimes"][0];
    CHECK(regime["name"] == "feature-dominated");
    CHECK(regime["rows"].size() == 2);
    CHECK(regime["mean_raw"].get<double>() > 0.9);
    CHECK(std::abs(regime["mean_label_informativeness"].get<double>()) < 0.2);
}

TEST_CASE("info command on a distribution file") {
    TempDir dir;
    json doc;
    doc["shape"] = {2, 2, 2};
    // Y = X xor E, uniform: I = ln 2
    std::vector<double> p(8, 0.0);
    for (int x = 0; x < 2; ++x)
        for (int e = 0; e < 2; ++e) p[(x * 2 + e) * 2 + (x ^ e)] = 0.25;
    doc["p"] = p;
    cli::write_text_file(dir.file("d.json"), doc.dump(2) + "\n");

    const std::string out = dir.file("info.json");
    CHECK(cli::run_command({"info", "--dist", dir.file("d.json"), "--out", out}) == 0);
    const json report = parse_file(out);
    CHECK(report["payload"]["mutual_information"].get<double>() ==
          doctest::Approx(std::log(2.0)).epsilon(1e-12));
    CHECK(report["payload"]["identity_error"].get<double>() <= 1e-12);
}

TEST_CASE("stability command is independent of the worker count") {
    TempDir dir;
    LabeledGraph lg;
    lg.graph = erdos_renyi(24, 0.2, 99);
    cli::write_graph_file(dir.file("g.json"), lg);
    const std::string serial = dir.file("serial.json");
    const std::string parallel = dir.file("parallel.json");
    CHECK(cli::run_command({"stability", "--graph", dir.file("g.json"), "--trials", "40",
                            "--max-edits", "4", "--seed", "3", "--out", serial}) == 0);
    CHECK(cli::run_command({"stability", "--graph", dir.file("g.json"), "--trials", "40",
                            "--max-edits", "4", "--seed", "3", "--parallel-trials", "2",
                            "--out", parallel}) == 0);
    json a = parse_file(serial);
    json b = parse_file(parallel);
    a["config"].erase("parallel_trials");
    b["config"].erase("parallel_trials");
    CHECK(a == b);
    CHECK(parse_file(serial)["payload"]["all_bounds_satisfied"].get<bool>());
}

TEST_CASE("verify subcommand reports are byte-identical across runs") {
    TempDir dir;
    const std::string r1 = dir.file("v1.json"), r2 = dir.file("v2.json");
    CHECK(cli::run_command({"verify", "--suite", "metric-fixtures", "--suite",
                            "information-identity", "--seed", "7", "--out", r1}) == 0);
    CHECK(cli::run_command({"verify", "--suite", "metric-fixtures", "--suite",
                            "information-identity", "--seed", "7", "--out", r2}) == 0);
    CHECK(cli::read_text_file(r1) == cli::read_text_file(r2));
    const json report = parse_file(r1);
    CHECK(report["payload"]["all_passed"].get<bool>());
    CHECK(report["payload"]["criteria"].size() == 2);
}

TEST_CASE("verify rejects unknown suites") {
    CHECK(cli::run_command({"verify", "--suite", "nonsense"}) == 2);
}

TEST_CASE("the installed binary wires errors to exit codes") {
    TempDir dir;
    LabeledGraph lg;
    lg.graph = path_graph(3);
    lg.labels = std::vector<int>{0, 0, 0};
    cli::write_graph_file(dir.file("g.json"), lg);
    const std::string cmd = std::string(GRAPHGEOM_TOOL_PATH) + " metrics --graph " +
                            dir.file("g.json") + " 2> " + dir.file("err.txt");
    const int status = std::system(cmd.c_str());
    CHECK(WEXITSTATUS(status) == 2);
    const std::string err = cli::read_text_file(dir.file("err.txt"));
    CHECK(err.find("degenerate label distribution") != std::string::npos);
}
