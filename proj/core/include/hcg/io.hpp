#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "hcg/analysis.hpp"
#include "hcg/coloring.hpp"
#include "hcg/dynamics.hpp"
#include "hcg/hypergraph.hpp"

namespace hcg::io {

// {"num_vertices": n, "edges": [[i, ...], ...]}
std::string to_json(const Hypergraph& h);
// {"num_colors": k, "colors": [c_0, ...]}
std::string to_json(const Coloring& c);
std::string to_json(const AnalysisReport& report);
std::string to_json(const BrTrace& trace);
std::string to_json(const Lemma3Report& report);
std::string to_json(const Lemma5Report& report);
std::string to_json(const BoundCheck& check);

// Parse errors and schema violations throw Format; semantic violations keep
// the code raised by the constructor (EmptyEdge, ColorOutOfRange, ...).
Hypergraph hypergraph_from_json(std::string_view text);
Coloring coloring_from_json(std::string_view text);

Hypergraph read_hypergraph(const std::filesystem::path& path);
Coloring read_coloring(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, std::string_view text);

// n,m,r,k,kind,optimum,worst_ne,poa_num,poa_den,bound_num,bound_den,holds
// An infinite value is written as num "inf", den 1. r is the minimum edge size.
std::string csv_header();
std::string csv_row(const Hypergraph& h, const AnalysisReport& report,
                    const BoundCheck* bound);

}  // namespace hcg::io
