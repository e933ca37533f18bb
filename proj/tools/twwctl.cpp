// Command-line front end over the C API.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tww/tww_c.h"

namespace {

enum Exit { accept = 0, reject = 1, input_error = 2 };

struct GraphDeleter {
  void operator()(tww_graph* g) const { tww_graph_free(g); }
};
struct SequenceDeleter {
  void operator()(tww_sequence* s) const { tww_sequence_free(s); }
};
using GraphPtr = std::unique_ptr<tww_graph, GraphDeleter>;
using SequencePtr = std::unique_ptr<tww_sequence, SequenceDeleter>;

// Owns a C string from the library.
std::string take(char* s) {
  if (!s) return {};
  std::string out = s;
  tww_string_free(s);
  return out;
}

struct Failure {
  int code;
};

[[noreturn]] void die(int code, const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  throw Failure{code};
}

int format_flag(const std::string& f) {
  if (f == "edge" || f == "edge-list") return TWW_FORMAT_EDGE_LIST;
  if (f == "g6" || f == "graph6") return TWW_FORMAT_GRAPH6;
  return TWW_FORMAT_DETECT;
}

GraphPtr load_graph(const std::string& path, const std::string& format) {
  tww_graph* g = nullptr;
  if (tww_graph_read_file(path.c_str(), format_flag(format), &g) != TWW_OK)
    die(input_error, path + ": " + tww_last_error());
  return GraphPtr(g);
}

SequencePtr load_sequence(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) die(input_error, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  tww_sequence* s = nullptr;
  if (tww_sequence_parse_json(ss.str().c_str(), &s) != TWW_OK) die(input_error, path + ": " + tww_last_error());
  return SequencePtr(s);
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) die(input_error, "cannot write " + path);
  out << text;
}

std::string sequence_json(const tww_sequence* s) {
  char* text = nullptr;
  tww_sequence_to_json(s, &text);
  return take(text);
}

std::string json_field(const std::string& report, const std::string& key) {
  // Reports are flat for the fields printed here.
  auto pos = report.find("\"" + key + "\":");
  if (pos == std::string::npos) return {};
  pos += key.size() + 3;
  if (report[pos] == '"') {
    auto end = report.find('"', pos + 1);
    return report.substr(pos + 1, end - pos - 1);
  }
  auto end = report.find_first_of(",}", pos);
  return report.substr(pos, end - pos);
}

int oracle_cap(int flag) {
  int cap = flag > 0 ? flag : 10;
  if (const char* env = std::getenv("TWW_MAX_ORACLE_N")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v <= 0) die(input_error, "TWW_MAX_ORACLE_N must be a positive integer");
    cap = std::min<long>(cap, v);
  }
  return cap;
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  std::size_t k = v.size();
  return k % 2 ? v[k / 2] : (v[k / 2 - 1] + v[k / 2]) / 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Twin-width one recognition and distance-hereditary classification"};
  app.require_subcommand(1);
  std::string graph_path, seq_path, format = "detect", emit, out_path;
  bool as_json = false;

  auto* rec = app.add_subcommand("recognize", "decide twin-width <= 1 and emit a certificate");
  rec->add_option("graph", graph_path, "graph file (edge list or graph6)")->required();
  rec->add_option("--emit", emit, "write the contraction sequence here");
  rec->add_flag("--json", as_json, "print a JSON report");
  rec->add_option("--input-format", format, "edge | g6 | detect");

  int width = -1;
  auto* ver = app.add_subcommand("verify", "check a contraction sequence");
  ver->add_option("graph", graph_path)->required();
  ver->add_option("sequence", seq_path)->required();
  ver->add_option("--width", width, "maximum red degree (default: the file's width)");
  ver->add_flag("--json", as_json);
  ver->add_option("--input-format", format);

  int max_n = 0;
  std::uint64_t budget = 0;
  auto* ora = app.add_subcommand("oracle", "exact twin-width by exhaustive search");
  ora->add_option("graph", graph_path)->required();
  ora->add_option("--max-n", max_n, "largest accepted order (default 10, capped by TWW_MAX_ORACLE_N)");
  ora->add_option("--budget", budget, "node expansion budget");
  ora->add_option("--emit", emit, "write the witness sequence here");
  ora->add_option("--input-format", format);

  auto* dh = app.add_subcommand("dh", "classify a distance-hereditary graph as twin-width 0, 1 or 2");
  dh->add_option("graph", graph_path)->required();
  dh->add_option("--emit", emit, "write the certificate sequence here");
  dh->add_flag("--json", as_json);
  dh->add_option("--input-format", format);

  std::string style = "svg";
  auto* dia = app.add_subcommand("diagram", "draw a permutation diagram");
  dia->add_option("graph", graph_path)->required();
  dia->add_option("--format", style, "svg | text")->check(CLI::IsMember({"svg", "text"}));
  dia->add_option("--out", out_path, "output file (default stdout)");
  dia->add_option("--input-format", format);

  auto* dec = app.add_subcommand("decompose", "print the modular decomposition as JSON");
  dec->add_option("graph", graph_path)->required();
  dec->add_option("--input-format", format);

  auto* thy = app.add_subcommand("theory", "check structural properties of a 1-sequence of a prime graph");
  thy->add_option("graph", graph_path)->required();
  thy->add_option("sequence", seq_path)->required();
  thy->add_option("--input-format", format);

  std::string generator = "random-tww1";
  std::vector<int> sizes;
  std::string ladder;
  int runs = 5;
  std::uint64_t seed = 1;
  auto* ben = app.add_subcommand("bench", "time recognize on generated graphs, CSV output");
  ben->add_option("generator", generator, "caterpillar | random-tww1 | random-realiser | random-graph")
      ->required()
      ->check(CLI::IsMember({"caterpillar", "random-tww1", "random-realiser", "random-graph"}));
  ben->add_option("sizes", sizes, "orders, space or comma separated")->delimiter(',');
  ben->add_option("--ladder", ladder, "lo:hi powers of two, e.g. 10:17");
  ben->add_option("--runs", runs, "runs per size (median reported)")->check(CLI::PositiveNumber);
  ben->add_option("--seed", seed);

  std::string kind;
  int order = 0;
  std::string out_format = "edge";
  auto* gen = app.add_subcommand("generate", "write a generated graph");
  gen->add_option("kind", kind)->required();
  gen->add_option("n", order)->required();
  gen->add_option("--seed", seed);
  gen->add_option("--format", out_format, "edge | g6")->check(CLI::IsMember({"edge", "g6"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : input_error;
  }

  try {
    if (*rec) {
      auto g = load_graph(graph_path, format);
      tww_sequence* s = nullptr;
      char* report = nullptr;
      tww_status st = tww_recognize(g.get(), &s, &report);
      SequencePtr seq(s);
      std::string rep = take(report);
      if (st != TWW_OK && st != TWW_REJECTED) die(input_error, tww_last_error());
      if (seq && !emit.empty()) write_file(emit, sequence_json(seq.get()));
      if (as_json) {
        std::cout << rep << "\n";
      } else if (st == TWW_OK) {
        std::cout << "accepted: twin-width <= 1 (width " << tww_sequence_width(seq.get()) << ", "
                  << tww_sequence_length(seq.get()) << " contractions)\n";
      } else {
        std::cout << "rejected: " << json_field(rep, "reason") << " (" << json_field(rep, "detail") << ")\n";
      }
      return st == TWW_OK ? accept : reject;
    }
    if (*ver) {
      auto g = load_graph(graph_path, format);
      auto s = load_sequence(seq_path);
      int d = width >= 0 ? width : tww_sequence_width(s.get());
      char* report = nullptr;
      tww_status st = tww_verify(g.get(), s.get(), d, &report);
      std::string rep = take(report);
      if (st == TWW_PRECONDITION || st == TWW_INTERNAL) die(input_error, tww_last_error());
      if (as_json) std::cout << rep << "\n";
      else if (st == TWW_OK)
        std::cout << "ok: red degree <= " << d << (json_field(rep, "partial") == "true" ? " (partial sequence)" : "")
                  << "\n";
      else
        std::cout << (st == TWW_INVALID_INPUT ? "malformed: " : "failed: ") << json_field(rep, "message") << "\n";
      return st == TWW_OK ? accept : st == TWW_REJECTED ? reject : input_error;
    }
    if (*ora) {
      auto g = load_graph(graph_path, format);
      int cap = oracle_cap(max_n);
      int w = -1;
      tww_sequence* s = nullptr;
      tww_status st = tww_oracle(g.get(), cap, budget, &w, &s);
      SequencePtr wit(s);
      if (st == TWW_INCONCLUSIVE) {
        std::cout << "inconclusive (" << tww_last_error() << ")\n";
        return reject;
      }
      if (st != TWW_OK) die(input_error, tww_last_error());
      if (!emit.empty()) write_file(emit, sequence_json(wit.get()));
      std::cout << w << "\n";
      return accept;
    }
    if (*dh) {
      auto g = load_graph(graph_path, format);
      int cls = -1;
      tww_sequence* s = nullptr;
      char* report = nullptr;
      tww_status st = tww_dh_classify(g.get(), &cls, &s, &report);
      SequencePtr cert(s);
      std::string rep = take(report);
      if (st != TWW_OK && st != TWW_REJECTED) die(input_error, tww_last_error());
      if (cert && !emit.empty()) write_file(emit, sequence_json(cert.get()));
      if (as_json) std::cout << rep << "\n";
      else if (st == TWW_OK) std::cout << "class: " << cls << "\n";
      else std::cout << "not-DH\n";
      return st == TWW_OK ? accept : reject;
    }
    if (*dia) {
      auto g = load_graph(graph_path, format);
      char* text = nullptr;
      tww_status st = tww_diagram(g.get(), style == "text" ? TWW_DIAGRAM_TEXT : TWW_DIAGRAM_SVG, &text);
      if (st == TWW_REJECTED) {
        std::cerr << "refused: " << tww_last_error() << "\n";
        return reject;
      }
      if (st != TWW_OK) die(input_error, tww_last_error());
      std::string d = take(text);
      if (out_path.empty()) std::cout << d;
      else write_file(out_path, d);
      return accept;
    }
    if (*dec) {
      auto g = load_graph(graph_path, format);
      char* text = nullptr;
      if (tww_decompose(g.get(), &text) != TWW_OK) die(input_error, tww_last_error());
      std::cout << take(text) << "\n";
      return accept;
    }
    if (*thy) {
      auto g = load_graph(graph_path, format);
      auto s = load_sequence(seq_path);
      char* report = nullptr;
      tww_status st = tww_check_theory(g.get(), s.get(), &report);
      if (st != TWW_OK && st != TWW_REJECTED) die(input_error, tww_last_error());
      std::cout << take(report) << "\n";
      return st == TWW_OK ? accept : reject;
    }
    if (*ben) {
      if (!ladder.empty()) {
        int lo = 0, hi = -1;
        if (std::sscanf(ladder.c_str(), "%d:%d", &lo, &hi) != 2 || lo < 0 || hi > 30 || lo > hi)
          die(input_error, "--ladder expects lo:hi");
        for (int k = lo; k <= hi; ++k) sizes.push_back(1 << k);
      }
      if (sizes.empty()) die(input_error, "no sizes given");
      std::cout << "n,m,ms\n";
      for (int n : sizes) {
        tww_graph* raw = nullptr;
        if (tww_generate(generator.c_str(), n, seed, &raw) != TWW_OK) die(input_error, tww_last_error());
        GraphPtr g(raw);
        std::vector<double> times;
        for (int r = 0; r < runs; ++r) {
          auto t0 = std::chrono::steady_clock::now();
          tww_sequence* s = nullptr;
          tww_recognize(g.get(), &s, nullptr);
          auto t1 = std::chrono::steady_clock::now();
          tww_sequence_free(s);
          times.push_back(std::chrono::duration<double, std::milli>(t1 - t0).count());
        }
        std::printf("%d,%zu,%.3f\n", tww_graph_order(g.get()), tww_graph_size(g.get()), median(times));
      }
      return accept;
    }
    if (*gen) {
      tww_graph* raw = nullptr;
      if (tww_generate(kind.c_str(), order, seed, &raw) != TWW_OK) die(input_error, tww_last_error());
      GraphPtr g(raw);
      char* text = nullptr;
      if (out_format == "g6") tww_graph_to_graph6(g.get(), &text);
      else tww_graph_to_edge_list(g.get(), &text);
      std::cout << take(text);
      return accept;
    }
  } catch (const Failure& f) {
    return f.code;
  }
  return input_error;
}
