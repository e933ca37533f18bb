#include "tww/io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"

namespace tww {

namespace {

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

bool to_int(std::string_view s, long long& out) {
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && p == s.data() + s.size();
}

// Lines with comments stripped, paired with their 1-based numbers; blank lines dropped.
std::vector<std::pair<int, std::string_view>> content_lines(std::string_view text) {
  std::vector<std::pair<int, std::string_view>> out;
  int no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (!tokens(line).empty()) out.emplace_back(no, line);
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  auto lines = content_lines(text);
  if (lines.empty()) throw ParseError("empty input: expected header \"n m\"");
  auto head = tokens(lines[0].second);
  long long n, m;
  if (head.size() != 2 || !to_int(head[0], n) || !to_int(head[1], m) || n < 0 || m < 0)
    throw ParseError("expected header \"n m\" with non-negative integers", lines[0].first);
  if (n > 50'000'000) throw ParseError("vertex count too large", lines[0].first);
  if (static_cast<long long>(lines.size()) - 1 != m)
    throw ParseError("header announces " + std::to_string(m) + " edges but " + std::to_string(lines.size() - 1) +
                         " edge lines follow",
                     lines[0].first);
  std::vector<Edge> edges;
  edges.reserve(m);
  std::map<Edge, int> seen;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto [no, line] = lines[i];
    auto t = tokens(line);
    long long u, v;
    if (t.size() != 2 || !to_int(t[0], u) || !to_int(t[1], v)) throw ParseError("expected \"u v\"", no);
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw ParseError("vertex id out of range [0, " + std::to_string(n) + ")", no);
    if (u == v) throw ParseError("self-loop on vertex " + std::to_string(u), no);
    Edge e{static_cast<int>(std::min(u, v)), static_cast<int>(std::max(u, v))};
    auto [it, fresh] = seen.emplace(e, no);
    if (!fresh)
      throw ParseError("duplicate edge " + std::to_string(e.first) + " " + std::to_string(e.second) +
                           " (first on line " + std::to_string(it->second) + ")",
                       no);
    edges.push_back(e);
  }
  return Graph(static_cast<int>(n), edges);
}

std::string write_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
  for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

Graph parse_graph6(std::string_view line) {
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r' || line.back() == ' ')) line.remove_suffix(1);
  if (line.starts_with(">>graph6<<")) line.remove_prefix(10);
  std::size_t i = 0;
  auto byte = [&]() -> int {
    if (i >= line.size()) throw ParseError("graph6 string truncated");
    int c = static_cast<unsigned char>(line[i++]);
    if (c < 63 || c > 126) throw ParseError("invalid graph6 character");
    return c - 63;
  };
  long long n = byte();
  if (n == 63) {
    int width = 3;
    if (i < line.size() && line[i] == 126) {
      ++i;
      width = 6;
    }
    n = 0;
    for (int k = 0; k < width; ++k) n = (n << 6) | byte();
  }
  if (n > 50'000'000) throw ParseError("graph6 vertex count too large");
  std::vector<Edge> edges;
  int bit = 6, cur = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) {
      if (bit == 6) {
        cur = byte();
        bit = 0;
      }
      if ((cur >> (5 - bit)) & 1) edges.emplace_back(u, v);
      ++bit;
    }
  if (i != line.size()) throw ParseError("trailing characters after graph6 data");
  return Graph(static_cast<int>(n), edges);
}

std::string write_graph6(const Graph& g) {
  std::string out;
  long long n = g.order();
  if (n < 63) {
    out += static_cast<char>(n + 63);
  } else if (n <= 258047) {
    out += static_cast<char>(126);
    for (int k = 2; k >= 0; --k) out += static_cast<char>(((n >> (6 * k)) & 63) + 63);
  } else {
    out += static_cast<char>(126);
    out += static_cast<char>(126);
    for (int k = 5; k >= 0; --k) out += static_cast<char>(((n >> (6 * k)) & 63) + 63);
  }
  int bit = 0, cur = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) {
      cur = (cur << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++bit == 6) {
        out += static_cast<char>(cur + 63);
        bit = cur = 0;
      }
    }
  if (bit > 0) out += static_cast<char>((cur << (6 - bit)) + 63);
  return out;
}

std::vector<Graph> parse_graph6_corpus(std::string_view text) {
  std::vector<Graph> out;
  for (auto [no, line] : content_lines(text)) {
    try {
      auto t = tokens(line);
      out.push_back(parse_graph6(t[0]));
    } catch (const ParseError& e) {
      throw ParseError(e.what(), no);
    }
  }
  return out;
}

Graph parse_graph(std::string_view text, GraphFormat format, std::string_view name) {
  if (format == GraphFormat::detect) {
    format = GraphFormat::edge_list;
    if (name.ends_with(".g6")) {
      format = GraphFormat::graph6;
    } else {
      auto lines = content_lines(text);
      long long x;
      if (!lines.empty()) {
        auto t = tokens(lines[0].second);
        bool header = t.size() == 2 && to_int(t[0], x) && to_int(t[1], x);
        if (!header && t.size() == 1) format = GraphFormat::graph6;
      }
    }
  }
  if (format == GraphFormat::edge_list) return parse_edge_list(text);
  auto lines = content_lines(text);
  if (lines.size() != 1) throw ParseError("expected exactly one graph6 line");
  try {
    return parse_graph6(tokens(lines[0].second)[0]);
  } catch (const ParseError& e) {
    throw ParseError(e.what(), lines[0].first);
  }
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Graph read_graph_file(const std::string& path, GraphFormat format) {
  return parse_graph(read_text_file(path), format, path);
}

ContractionSequence parse_sequence_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("sequence must be a JSON object");
  for (auto it = j.begin(); it != j.end(); ++it)
    if (it.key() != "version" && it.key() != "n" && it.key() != "width" && it.key() != "steps")
      throw ParseError("unknown key \"" + it.key() + "\"");
  auto need_int = [&](const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer() || j[key].get<long long>() < 0)
      throw ParseError(std::string("\"") + key + "\" must be a non-negative integer");
    return j[key].get<long long>();
  };
  if (need_int("version") != 1) throw ParseError("unsupported version");
  long long n = need_int("n"), width = need_int("width");
  if (n > 50'000'000) throw ParseError("\"n\" too large");
  if (!j.contains("steps") || !j["steps"].is_array()) throw ParseError("\"steps\" must be an array");
  ContractionSequence seq{static_cast<int>(n), {}, static_cast<int>(width)};
  std::size_t k = 0;
  for (const auto& s : j["steps"]) {
    ++k;
    if (!s.is_array() || s.size() != 2 || !s[0].is_number_integer() || !s[1].is_number_integer())
      throw ParseError("step " + std::to_string(k) + " must be a pair of integers");
    long long u = s[0].get<long long>(), v = s[1].get<long long>();
    if (u < 0 || v < 0 || u > 2 * n || v > 2 * n) throw ParseError("step " + std::to_string(k) + " has an id out of range");
    seq.steps.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  return seq;
}

std::string write_sequence_json(const ContractionSequence& seq) {
  nlohmann::ordered_json j;
  j["version"] = 1;
  j["n"] = seq.n0;
  j["width"] = seq.claimed_width;
  nlohmann::ordered_json steps = nlohmann::ordered_json::array();
  for (auto [u, v] : seq.steps) steps.push_back({u, v});
  j["steps"] = steps;
  return j.dump() + "\n";
}

}  // namespace tww
