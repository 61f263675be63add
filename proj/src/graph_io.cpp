#include "gslab/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace gslab {

namespace {

bool is_nonneg_integer(const std::string& s) {
  if (s.empty()) {
    return false;
  }
  return std::all_of(s.begin(), s.end(),
                     [](unsigned char c) { return std::isdigit(c); });
}

}  // namespace

LoadedGraph parse_graph_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::runtime_error(std::string("graph JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer()) {
    throw std::runtime_error("graph JSON: expected object with integer field \"n\"");
  }
  long long n_signed = j["n"].get<long long>();
  if (n_signed < 0) {
    throw std::runtime_error("graph JSON: \"n\" must be non-negative");
  }
  auto n = static_cast<std::size_t>(n_signed);
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  if (j.contains("edges")) {
    if (!j["edges"].is_array()) {
      throw std::runtime_error("graph JSON: \"edges\" must be an array");
    }
    for (const auto& e : j["edges"]) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
          !e[1].is_number_integer()) {
        throw std::runtime_error("graph JSON: each edge must be a pair of integers");
      }
      long long a = e[0].get<long long>();
      long long b = e[1].get<long long>();
      if (a < 0 || b < 0 || a >= n_signed || b >= n_signed) {
        throw std::runtime_error("graph JSON: edge endpoint out of range");
      }
      edges.emplace_back(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
    }
  }
  LoadedGraph out{Graph::from_edges(n, edges), {}};
  out.labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.labels.push_back(std::to_string(i));
  }
  return out;
}

LoadedGraph parse_edge_list(std::string_view text) {
  std::vector<std::pair<std::string, std::string>> raw_edges;
  std::vector<std::string> tokens_seen;
  std::istringstream lines{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(lines, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream fields(line);
    std::string a, b, extra;
    if (!(fields >> a)) {
      continue;  // blank line
    }
    if (!(fields >> b) || (fields >> extra)) {
      throw std::runtime_error("edge list line " + std::to_string(lineno) +
                               ": expected exactly two labels");
    }
    raw_edges.emplace_back(a, b);
    tokens_seen.push_back(a);
    tokens_seen.push_back(b);
  }

  bool numeric = std::all_of(tokens_seen.begin(), tokens_seen.end(), is_nonneg_integer);
  std::map<std::string, std::size_t> index_of;
  std::vector<std::string> labels;
  if (numeric) {
    std::size_t max_label = 0;
    for (const std::string& t : tokens_seen) {
      max_label = std::max(max_label, static_cast<std::size_t>(std::stoull(t)));
    }
    std::size_t n = tokens_seen.empty() ? 0 : max_label + 1;
    labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      labels.push_back(std::to_string(i));
      index_of[labels.back()] = i;
    }
    // Numeric labels map to themselves, and implicit isolated vertices
    // below the maximum label are kept.
    for (auto& [a, b] : raw_edges) {
      a = std::to_string(std::stoull(a));
      b = std::to_string(std::stoull(b));
    }
  } else {
    std::vector<std::string> uniq = tokens_seen;
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    labels = uniq;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      index_of[labels[i]] = i;
    }
  }

  std::vector<std::pair<std::size_t, std::size_t>> edges;
  edges.reserve(raw_edges.size());
  for (const auto& [a, b] : raw_edges) {
    edges.emplace_back(index_of.at(a), index_of.at(b));
  }
  return LoadedGraph{Graph::from_edges(labels.size(), edges), std::move(labels)};
}

LoadedGraph load_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open graph file: " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    return parse_graph_json(text);
  }
  return parse_edge_list(text);
}

std::string to_json(const Graph& g) {
  nlohmann::json j;
  j["n"] = g.vertex_count();
  j["edges"] = nlohmann::json::array();
  for (const auto& [a, b] : g.edges()) {
    j["edges"].push_back({a, b});
  }
  return j.dump();
}

std::string to_edge_list(const Graph& g) {
  std::string out;
  for (const auto& [a, b] : g.edges()) {
    out += std::to_string(a);
    out += ' ';
    out += std::to_string(b);
    out += '\n';
  }
  return out;
}

}  // namespace gslab
