#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "graphgeom/graph.hpp"
#include "graphgeom/metrics.hpp"

namespace graphgeom::cli {

using json = nlohmann::ordered_json;

/// Reads a graph file. JSON documents carry
///   {"num_nodes": n, "edges": [[u,v],...], "labels": [...]?, "features": [[...],...]?};
/// anything else is treated as edge-list text, one "u<TAB>v" pair per line,
/// 0-indexed, with optional one-label-per-line sidecar.
LabeledGraph read_graph_file(const std::string& path, const std::string& labels_path = "");

LabeledGraph parse_graph_json(const std::string& text);

/// Canonical serialization: parse(serialize(g)) == g, and serialization of a
/// canonical graph is byte-reproducible.
std::string serialize_graph(const LabeledGraph& lg);
void write_graph_file(const std::string& path, const LabeledGraph& lg);

/// JointDistribution file: {"shape": [nx, ne, ny], "p": [...row-major...]}.
JointDistribution read_joint_distribution(const std::string& path);

/// FNV-1a 64-bit digest of a file's bytes, rendered as "fnv1a64:<hex>".
std::string file_digest(const std::string& path);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

/// Report skeleton shared by every subcommand: tool version, input digest,
/// config echo, then a command-specific payload.
json make_report(const std::string& command, const json& config, const json& payload);

}  // namespace graphgeom::cli
