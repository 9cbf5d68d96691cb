#include "graphgeom/io.hpp"

#include <fstream>
#include <sstream>

#include "graphgeom/errors.hpp"

namespace graphgeom::cli {

namespace {

constexpr const char* kToolVersion = "0.1.0";

LabeledGraph parse_edge_list(const std::string& text, const std::string& labels_text) {
    std::vector<Edge> edges;
    int max_node = -1;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream fields(line);
        long long u = -1, v = -1;
        if (!(fields >> u >> v)) {
            throw InputError("edge list line " + std::to_string(line_no) +
                             ": expected two node ids");
        }
        if (u < 0 || v < 0) {
            throw InputError("edge list line " + std::to_string(line_no) +
                             ": negative node id");
        }
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
        max_node = std::max<long long>(max_node, std::max(u, v));
    }

    std::optional<std::vector<int>> labels;
    if (!labels_text.empty()) {
        std::vector<int> ys;
        std::istringstream lin(labels_text);
        std::string entry;
        while (lin >> entry) ys.push_back(std::stoi(entry));
        labels = std::move(ys);
        max_node = std::max<long long>(max_node,
                                       static_cast<long long>(labels->size()) - 1);
    }

    LabeledGraph lg;
    lg.graph = build_graph(max_node + 1, edges);
    if (labels) {
        if (static_cast<int>(labels->size()) != lg.graph.num_nodes()) {
            throw InputError("label sidecar has " + std::to_string(labels->size()) +
                             " entries for " + std::to_string(lg.graph.num_nodes()) +
                             " nodes");
        }
        lg.labels = std::move(labels);
    }
    return lg;
}

}  // namespace

LabeledGraph parse_graph_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw InputError(std::string("graph file is not valid JSON: ") + e.what());
    }
    if (!doc.contains("num_nodes") || !doc.contains("edges")) {
        throw InputError("graph JSON needs num_nodes and edges fields");
    }
    std::vector<Edge> edges;
    for (const auto& pair : doc["edges"]) {
        if (!pair.is_array() || pair.size() != 2) {
            throw InputError("graph JSON: each edge must be a [u, v] pair");
        }
        edges.emplace_back(pair[0].get<int>(), pair[1].get<int>());
    }
    LabeledGraph lg;
    lg.graph = build_graph(doc["num_nodes"].get<int>(), edges);
    if (doc.contains("labels") && !doc["labels"].is_null()) {
        lg.labels = doc["labels"].get<std::vector<int>>();
        require_labels(lg);
    }
    if (doc.contains("features") && !doc["features"].is_null()) {
        const auto& rows = doc["features"];
        if (rows.size() != static_cast<std::size_t>(lg.graph.num_nodes())) {
            throw InputError("graph JSON: feature row count does not match num_nodes");
        }
        const std::size_t dim = rows.empty() ? 0 : rows[0].size();
        Eigen::MatrixXd x(rows.size(), dim);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != dim) {
                throw InputError("graph JSON: ragged feature rows");
            }
            for (std::size_t j = 0; j < dim; ++j) x(i, j) = rows[i][j].get<double>();
        }
        lg.features = std::move(x);
    }
    return lg;
}

LabeledGraph read_graph_file(const std::string& path, const std::string& labels_path) {
    const std::string text = read_text_file(path);
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        if (!labels_path.empty()) {
            throw InputError("label sidecars pair with edge-list files, not JSON graphs");
        }
        return parse_graph_json(text);
    }
    return parse_edge_list(text, labels_path.empty() ? "" : read_text_file(labels_path));
}

std::string serialize_graph(const LabeledGraph& lg) {
    json doc;
    doc["num_nodes"] = lg.graph.num_nodes();
    json edges = json::array();
    for (const auto& [u, v] : lg.graph.edges()) edges.push_back(json::array({u, v}));
    doc["edges"] = std::move(edges);
    if (lg.labels) doc["labels"] = *lg.labels;
    if (lg.features) {
        json rows = json::array();
        for (Eigen::Index i = 0; i < lg.features->rows(); ++i) {
            json row = json::array();
            for (Eigen::Index j = 0; j < lg.features->cols(); ++j) {
                row.push_back((*lg.features)(i, j));
            }
            rows.push_back(std::move(row));
        }
        doc["features"] = std::move(rows);
    }
    return doc.dump(2) + "\n";
}

void write_graph_file(const std::string& path, const LabeledGraph& lg) {
    write_text_file(path, serialize_graph(lg));
}

JointDistribution read_joint_distribution(const std::string& path) {
    json doc;
    try {
        doc = json::parse(read_text_file(path));
    } catch (const json::exception& e) {
        throw InputError(std::string("distribution file is not valid JSON: ") + e.what());
    }
    if (!doc.contains("shape") || !doc.contains("p")) {
        throw InputError("distribution JSON needs shape and p fields");
    }
    const auto shape = doc["shape"].get<std::vector<int>>();
    if (shape.size() != 3) throw InputError("distribution shape must be [nx, ne, ny]");
    JointDistribution jd;
    jd.nx = shape[0];
    jd.ne = shape[1];
    jd.ny = shape[2];
    jd.p = doc["p"].get<std::vector<double>>();
    jd.validate();
    return jd;
}

std::string file_digest(const std::string& path) {
    const std::string bytes = read_text_file(path);
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    std::ostringstream os;
    os << "fnv1a64:" << std::hex << h;
    return os.str();
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write file: " + path);
    out << content;
}

json make_report(const std::string& command, const json& config, const json& payload) {
    json report;
    report["tool"] = "graphgeom";
    report["version"] = kToolVersion;
    report["command"] = command;
    report["config"] = config;
    report["payload"] = payload;
    return report;
}

}  // namespace graphgeom::cli
