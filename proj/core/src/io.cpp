#include "hcg/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

#include "hcg/error.hpp"

namespace hcg::io {

using json = nlohmann::ordered_json;

namespace {

json coloring_json(const Coloring& c) {
  return json{{"num_colors", c.num_colors()},
              {"colors", std::vector<Color>(c.colors().begin(), c.colors().end())}};
}

json ratio_json(const ExtendedRational& x) {
  if (x.is_infinite()) return json{{"infinite", true}, {"text", "inf"}};
  return json{{"infinite", false}, {"num", x.value().num()}, {"den", x.value().den()},
              {"text", x.str()}};
}

json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Format, e.what());
  }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

template <class T>
T unsigned_field(const json& j, const char* key) {
  const json& v = j.at(key);
  if (!v.is_number_unsigned()) throw Error(ErrorCode::Format, std::string(key) + " must be a non-negative integer");
  return v.get<T>();
}

template <class T>
std::vector<T> unsigned_list(const json& v, const char* what) {
  if (!v.is_array()) throw Error(ErrorCode::Format, std::string(what) + " must be an array");
  std::vector<T> out;
  out.reserve(v.size());
  for (const json& x : v) {
    if (!x.is_number_unsigned()) throw Error(ErrorCode::Format, std::string(what) + " entries must be non-negative integers");
    out.push_back(x.get<T>());
  }
  return out;
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Format, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

std::string to_json(const Hypergraph& h) {
  return dump(json{{"num_vertices", h.num_vertices()}, {"edges", h.edges()}});
}

std::string to_json(const Coloring& c) { return dump(coloring_json(c)); }

std::string to_json(const AnalysisReport& rep) {
  json j{{"kind", to_string(rep.kind)},
         {"k", rep.k},
         {"canonical", rep.canonical},
         {"colorings_scanned", rep.colorings_scanned},
         {"optimum_sw", rep.optimum_sw},
         {"optimum_witness", coloring_json(rep.optimum_witness)},
         {"worst_ne_sw", rep.worst_ne_sw},
         {"worst_ne_witness", coloring_json(rep.worst_ne_witness)},
         {"best_ne_sw", rep.best_ne_sw},
         {"best_ne_witness", coloring_json(rep.best_ne_witness)},
         {"num_nash", rep.num_nash},
         {"poa", ratio_json(rep.poa)}};
  return dump(j);
}

std::string to_json(const BrTrace& trace) {
  json steps = json::array();
  for (const BrStep& s : trace.steps) {
    steps.push_back(json{{"vertex", s.vertex},
                         {"old_color", s.old_color},
                         {"new_color", s.new_color},
                         {"gain", s.gain},
                         {"potential_after", s.potential_after}});
  }
  return dump(json{{"converged", trace.converged},
                   {"improving_steps", trace.improving_steps},
                   {"sweeps", trace.sweeps},
                   {"final", coloring_json(trace.final)},
                   {"steps", std::move(steps)}});
}

namespace {
json optional_bool(const std::optional<bool>& b) {
  return b ? json(*b) : json("skipped");
}
}  // namespace

std::string to_json(const Lemma3Report& rep) {
  return dump(json{{"r", rep.r},
                   {"D1", rep.D1},
                   {"D2", rep.D2},
                   {"D3", rep.D3},
                   {"D4", rep.D4},
                   {"part1", rep.part1},
                   {"part2", rep.part2},
                   {"part3", optional_bool(rep.part3)},
                   {"per_vertex", optional_bool(rep.per_vertex)},
                   {"holds", rep.holds()}});
}

std::string to_json(const Lemma5Report& rep) {
  return dump(json{{"r", rep.r},
                   {"j_hat", rep.j_hat},
                   {"sw", rep.sw},
                   {"phi", rep.phi},
                   {"L", rep.lgm.L},
                   {"G", rep.lgm.G},
                   {"M", rep.lgm.M},
                   {"identity_a", rep.identity_a},
                   {"identity_b", rep.identity_b},
                   {"identity_c", rep.identity_c},
                   {"identity_per_vertex", rep.identity_per_vertex},
                   {"no_profit", optional_bool(rep.no_profit)},
                   {"jhat_bound", optional_bool(rep.jhat_bound)},
                   {"sw_bound", optional_bool(rep.sw_bound)},
                   {"holds", rep.holds()}});
}

std::string to_json(const BoundCheck& check) {
  return dump(json{{"holds", check.holds},
                   {"bound", ratio_json(check.bound)},
                   {"regime", to_string(check.regime)}});
}

Hypergraph hypergraph_from_json(std::string_view text) {
  const json j = parse(text);
  std::size_t n = 0;
  std::vector<Edge> edges;
  try {
    n = unsigned_field<std::size_t>(j, "num_vertices");
    const json& list = j.at("edges");
    if (!list.is_array()) throw Error(ErrorCode::Format, "edges must be an array");
    for (const json& e : list) edges.push_back(unsigned_list<Vertex>(e, "edge"));
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Format, std::string("hypergraph file: ") + e.what());
  }
  return Hypergraph::build(n, std::move(edges));
}

Coloring coloring_from_json(std::string_view text) {
  const json j = parse(text);
  std::uint32_t k = 0;
  std::vector<Color> colors;
  try {
    k = unsigned_field<std::uint32_t>(j, "num_colors");
    colors = unsigned_list<Color>(j.at("colors"), "colors");
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Format, std::string("coloring file: ") + e.what());
  }
  return Coloring(k, std::move(colors));
}

Hypergraph read_hypergraph(const std::filesystem::path& path) {
  return hypergraph_from_json(slurp(path));
}

Coloring read_coloring(const std::filesystem::path& path) { return coloring_from_json(slurp(path)); }

void write_text(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::Format, "cannot write " + path.string());
  out << text;
  if (!out) throw Error(ErrorCode::Format, "write failed for " + path.string());
}

std::string csv_header() {
  return "n,m,r,k,kind,optimum,worst_ne,poa_num,poa_den,bound_num,bound_den,holds\n";
}

std::string csv_row(const Hypergraph& h, const AnalysisReport& rep, const BoundCheck* bound) {
  const auto frac = [](const ExtendedRational& x) {
    return x.is_infinite() ? std::string("inf,1")
                           : std::to_string(x.value().num()) + "," + std::to_string(x.value().den());
  };
  std::ostringstream row;
  row << h.num_vertices() << ',' << h.num_edges() << ',' << h.min_edge_size() << ',' << rep.k
      << ',' << to_string(rep.kind) << ',' << rep.optimum_sw << ',' << rep.worst_ne_sw << ','
      << frac(rep.poa) << ',';
  if (bound) {
    row << frac(bound->bound) << ',' << (bound->holds ? "true" : "false");
  } else {
    row << ",,";
  }
  row << '\n';
  return row.str();
}

}  // namespace hcg::io
