#include "tww/tww_c.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "json.hpp"
#include "tww/dh.hpp"
#include "tww/generators.hpp"
#include "tww/io.hpp"
#include "tww/modular.hpp"
#include "tww/oracle.hpp"
#include "tww/permgraph.hpp"
#include "tww/render.hpp"
#include "tww/tww1.hpp"

struct tww_graph {
  tww::Graph g;
};

struct tww_sequence {
  tww::ContractionSequence s;
};

namespace {

thread_local std::string last_error;

using json = nlohmann::ordered_json;

tww_status fail(tww_status s, const std::string& msg) {
  last_error = msg;
  return s;
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

void put(char** out, const std::string& s) {
  if (out) *out = dup(s);
}

void put(tww_sequence** out, const tww::ContractionSequence& s) {
  if (out) *out = new tww_sequence{s};
}

// Maps exceptions to status codes.
template <class F>
tww_status guarded(F&& f) {
  try {
    last_error.clear();
    return f();
  } catch (const tww::ParseError& e) {
    return fail(TWW_INVALID_INPUT, e.what());
  } catch (const tww::PreconditionError& e) {
    return fail(TWW_PRECONDITION, e.what());
  } catch (const std::bad_alloc&) {
    return fail(TWW_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(TWW_INTERNAL, e.what());
  }
}

const char* verify_status(tww::VerifyReport::Status s) {
  switch (s) {
    case tww::VerifyReport::Status::ok: return "ok";
    case tww::VerifyReport::Status::width_exceeded: return "width-exceeded";
    case tww::VerifyReport::Status::malformed: return "malformed";
  }
  return "?";
}

json verify_json(const tww::VerifyReport& r, int width) {
  json j;
  j["ok"] = r.ok();
  j["status"] = verify_status(r.status);
  j["width"] = width;
  j["max_red_degree"] = r.max_red_degree;
  j["partial"] = r.partial;
  if (!r.ok()) {
    j["failed_step"] = r.failed_step;
    j["offending_vertex"] = r.offending_vertex;
    j["message"] = r.message;
  }
  j["red_edges"] = r.red_edges;
  return j;
}

tww::Graph generate(const std::string& kind, int n, std::uint64_t seed) {
  using namespace tww;
  Rng rng(seed);
  if (n < 0) throw PreconditionError("negative size");
  if (kind == "caterpillar") return random_caterpillar(n, rng);
  if (kind == "random-tww1") return random_tww1(n, rng);
  if (kind == "random-realiser") return random_realiser_graph(n, rng);
  if (kind == "random-graph") return random_graph(n, 0.5, rng);
  if (kind == "random-dh") return random_dh(n, rng);
  if (kind == "random-tree") return random_tree(n, rng);
  if (kind == "non-caterpillar-tree") return random_non_caterpillar_tree(n, rng);
  if (kind == "path") return named::path(n);
  if (kind == "cycle") return named::cycle(n);
  if (kind == "complete") return named::complete(n);
  if (kind == "empty") return named::empty(n);
  if (kind == "star") return named::star(n);
  if (kind == "spider") return named::spider();
  if (kind == "gem") return named::gem();
  if (kind == "house") return named::house();
  if (kind == "domino") return named::domino();
  throw ParseError("unknown generator \"" + kind + "\"");
}

tww::GraphFormat format_of(int f) {
  switch (f) {
    case TWW_FORMAT_EDGE_LIST: return tww::GraphFormat::edge_list;
    case TWW_FORMAT_GRAPH6: return tww::GraphFormat::graph6;
    default: return tww::GraphFormat::detect;
  }
}

}  // namespace

extern "C" {

const char* tww_last_error(void) { return last_error.c_str(); }

void tww_string_free(char* s) { std::free(s); }

const char* tww_status_name(tww_status s) {
  switch (s) {
    case TWW_OK: return "ok";
    case TWW_REJECTED: return "rejected";
    case TWW_INVALID_INPUT: return "invalid-input";
    case TWW_PRECONDITION: return "precondition";
    case TWW_INCONCLUSIVE: return "inconclusive";
    case TWW_INTERNAL: return "internal";
  }
  return "?";
}

tww_status tww_graph_from_edges(int n, const int* edges, size_t m, tww_graph** out) {
  return guarded([&] {
    if (!out || (m > 0 && !edges)) throw tww::PreconditionError("null argument");
    std::vector<tww::Edge> e(m);
    for (size_t i = 0; i < m; ++i) e[i] = {edges[2 * i], edges[2 * i + 1]};
    *out = new tww_graph{tww::Graph(n, e)};
    return TWW_OK;
  });
}

tww_status tww_graph_parse(const char* text, int format, tww_graph** out) {
  return guarded([&] {
    if (!text || !out) throw tww::PreconditionError("null argument");
    try {
      *out = new tww_graph{tww::parse_graph(text, format_of(format))};
    } catch (const tww::PreconditionError& e) {
      throw tww::ParseError(e.what());
    }
    return TWW_OK;
  });
}

tww_status tww_graph_read_file(const char* path, int format, tww_graph** out) {
  return guarded([&] {
    if (!path || !out) throw tww::PreconditionError("null argument");
    try {
      *out = new tww_graph{tww::read_graph_file(path, format_of(format))};
    } catch (const tww::PreconditionError& e) {
      throw tww::ParseError(e.what());
    }
    return TWW_OK;
  });
}

void tww_graph_free(tww_graph* g) { delete g; }

int tww_graph_order(const tww_graph* g) { return g ? g->g.order() : 0; }

size_t tww_graph_size(const tww_graph* g) { return g ? g->g.size() : 0; }

tww_status tww_graph_to_edge_list(const tww_graph* g, char** out) {
  return guarded([&] {
    if (!g || !out) throw tww::PreconditionError("null argument");
    put(out, tww::write_edge_list(g->g));
    return TWW_OK;
  });
}

tww_status tww_graph_to_graph6(const tww_graph* g, char** out) {
  return guarded([&] {
    if (!g || !out) throw tww::PreconditionError("null argument");
    put(out, tww::write_graph6(g->g) + "\n");
    return TWW_OK;
  });
}

tww_status tww_generate(const char* kind, int n, uint64_t seed, tww_graph** out) {
  return guarded([&] {
    if (!kind || !out) throw tww::PreconditionError("null argument");
    *out = new tww_graph{generate(kind, n, seed)};
    return TWW_OK;
  });
}

tww_status tww_sequence_parse_json(const char* text, tww_sequence** out) {
  return guarded([&] {
    if (!text || !out) throw tww::PreconditionError("null argument");
    *out = new tww_sequence{tww::parse_sequence_json(text)};
    return TWW_OK;
  });
}

tww_status tww_sequence_to_json(const tww_sequence* s, char** out) {
  return guarded([&] {
    if (!s || !out) throw tww::PreconditionError("null argument");
    put(out, tww::write_sequence_json(s->s));
    return TWW_OK;
  });
}

void tww_sequence_free(tww_sequence* s) { delete s; }

int tww_sequence_n(const tww_sequence* s) { return s ? s->s.n0 : 0; }

int tww_sequence_width(const tww_sequence* s) { return s ? s->s.claimed_width : 0; }

size_t tww_sequence_length(const tww_sequence* s) { return s ? s->s.steps.size() : 0; }

tww_status tww_sequence_step(const tww_sequence* s, size_t i, int* u, int* v) {
  if (!s || i >= s->s.steps.size()) return fail(TWW_PRECONDITION, "step index out of range");
  if (u) *u = s->s.steps[i].first;
  if (v) *v = s->s.steps[i].second;
  return TWW_OK;
}

tww_status tww_recognize(const tww_graph* g, tww_sequence** seq, char** report) {
  return guarded([&] {
    if (!g) throw tww::PreconditionError("null graph");
    auto out = tww::recognize(g->g);
    json j;
    j["n"] = g->g.order();
    j["m"] = g->g.size();
    j["accepted"] = out.accepted();
    if (out.accepted()) {
      auto rep = tww::verify_sequence(g->g, *out.sequence, 1);
      j["width"] = out.sequence->claimed_width;
      j["max_red_degree"] = rep.max_red_degree;
      put(seq, *out.sequence);
    } else {
      j["reason"] = tww::to_string(out.refusal->reason);
      j["node"] = out.refusal->node;
      j["detail"] = out.refusal->detail;
      last_error = out.refusal->detail;
    }
    put(report, j.dump());
    return out.accepted() ? TWW_OK : TWW_REJECTED;
  });
}

tww_status tww_verify(const tww_graph* g, const tww_sequence* s, int width, char** report) {
  return guarded([&] {
    if (!g || !s) throw tww::PreconditionError("null argument");
    if (width < 0) throw tww::PreconditionError("negative width");
    auto rep = tww::verify_sequence(g->g, s->s, width);
    put(report, verify_json(rep, width).dump());
    if (rep.status == tww::VerifyReport::Status::malformed) return fail(TWW_INVALID_INPUT, rep.message);
    if (!rep.ok()) return fail(TWW_REJECTED, rep.message);
    return TWW_OK;
  });
}

tww_status tww_oracle(const tww_graph* g, int max_n, uint64_t budget, int* width, tww_sequence** witness) {
  return guarded([&] {
    if (!g) throw tww::PreconditionError("null graph");
    tww::OracleOptions opt;
    if (max_n > 0) opt.max_n = max_n;
    if (g->g.order() > opt.max_n)
      return fail(TWW_INCONCLUSIVE, "graph has " + std::to_string(g->g.order()) + " vertices, oracle cap is " +
                                        std::to_string(opt.max_n));
    if (budget > 0) opt.budget = budget;
    auto r = tww::brute_force_tww(g->g, opt);
    if (r.inconclusive()) return fail(TWW_INCONCLUSIVE, "expansion budget exhausted");
    if (width) *width = *r.width;
    put(witness, *r.witness);
    return TWW_OK;
  });
}

tww_status tww_dh_classify(const tww_graph* g, int* cls, tww_sequence** certificate, char** report) {
  return guarded([&] {
    if (!g) throw tww::PreconditionError("null graph");
    auto c = tww::classify_dh_twin_width(g->g);
    json j;
    j["n"] = g->g.order();
    j["m"] = g->g.size();
    if (!c.distance_hereditary()) {
      j["class"] = "not-DH";
      j["failing_component"] = c.failing_component;
      if (cls) *cls = -1;
      put(report, j.dump());
      return fail(TWW_REJECTED, "graph is not distance-hereditary");
    }
    j["class"] = *c.width;
    auto comps = tww::connected_components(g->g);
    json trees = json::array();
    int by_split = 0;
    for (const auto& comp : comps) {
      tww::Graph sub = tww::induced_graph(g->g, comp);
      auto tree = tww::split_tree_dh(sub, *tww::dh_elimination(sub));
      by_split = std::max(by_split, tww::classify_by_split_structure(tree));
      json t;
      t["vertices"] = comp;
      t["tree"] = json::parse(tww::split_tree_to_json(tree));
      trees.push_back(t);
    }
    j["split_class"] = by_split;
    j["components"] = trees;
    if (cls) *cls = *c.width;
    put(certificate, *c.certificate);
    put(report, j.dump());
    return TWW_OK;
  });
}

tww_status tww_diagram(const tww_graph* g, int format, char** out) {
  return guarded([&] {
    if (!g) throw tww::PreconditionError("null graph");
    auto r = tww::compute_realiser(g->g);
    if (!r) return fail(TWW_REJECTED, "graph is not a permutation graph");
    put(out, format == TWW_DIAGRAM_TEXT ? tww::render_text(*r) : tww::render_svg(*r));
    return TWW_OK;
  });
}

tww_status tww_decompose(const tww_graph* g, char** out) {
  return guarded([&] {
    if (!g) throw tww::PreconditionError("null graph");
    if (g->g.order() == 0) throw tww::PreconditionError("empty graph has no decomposition");
    put(out, tww::md_to_json(tww::modular_decomposition(g->g)));
    return TWW_OK;
  });
}

tww_status tww_check_theory(const tww_graph* g, const tww_sequence* s, char** report) {
  return guarded([&] {
    if (!g || !s) throw tww::PreconditionError("null argument");
    auto rep = tww::check_sequence_theory(g->g, s->s);
    json j;
    j["ok"] = rep.ok();
    j["one_red_edge"] = rep.one_red_edge;
    j["first_contraction"] = rep.first_contraction;
    j["induced_chain"] = rep.induced_chain;
    j["respects_realiser"] = rep.respects_realiser;
    j["violations"] = rep.violations;
    put(report, j.dump());
    return rep.ok() ? TWW_OK : TWW_REJECTED;
  });
}

}  // extern "C"
