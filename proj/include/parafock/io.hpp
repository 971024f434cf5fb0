#pragma once

#include <json.hpp>

#include "parafock/report.hpp"
#include "parafock/verify.hpp"

namespace parafock {

/// All JSON built here uses nlohmann's default object type, whose keys are
/// kept sorted; together with fixed-width indentation this makes every
/// emitted document byte-reproducible across runs and platforms.
using Json = nlohmann::json;

Json json_of(const Rational& r);  // "num/den" string, denominator 1 omitted
Json json_of(const BasisIndex& idx);
Json json_of(const VectorExpr& v);
Json json_of(const RationalMatrix& m);
Json json_of(const Report& report);
Json json_of(const std::vector<Report>& reports);

/// Full build artifact: basis listing plus the four truncated operator
/// matrices with their boundary-exactness flags.
Json build_document(ParaOrder p, Truncation t);

/// Per-sector table of dimensions and number-operator data: eigenvalues of
/// N_b and N_f, and the N_s matrix in canonical coordinates.
Json spectrum_document(ParaOrder p, Truncation t);

/// Canonical serialization: 2-space indent, sorted keys, trailing newline.
std::string render(const Json& doc);

/// The sector-level transition graph: one node per nonzero sector in the
/// window, one labeled edge per generator whose action between the two
/// sectors is not identically zero. The f+ edges stop at the n = p column
/// and the b- edges start only below the m = 0 row, because the action
/// itself vanishes there.
struct SectorGraph {
  struct Node {
    int m;
    int n;
    int dim;
  };
  struct Edge {
    int from_m;
    int from_n;
    int to_m;
    int to_n;
    Generator g;
  };
  std::vector<Node> nodes;
  std::vector<Edge> edges;
};

SectorGraph sector_graph(ParaOrder p, Truncation t);

/// ASCII picture of the (m,n) grid with per-sector dimensions.
std::string diagram_text(ParaOrder p, Truncation t);

/// GraphViz rendering of sector_graph.
std::string diagram_dot(ParaOrder p, Truncation t);

Json diagram_document(ParaOrder p, Truncation t);

/// Orthonormal payload for one sector: double coordinates plus the exact
/// squared norms of the vectors they normalize.
Json ortho_document(ParaOrder p, int m, int n);

/// Throws std::runtime_error on any filesystem failure.
void write_text_file(const std::string& path, const std::string& content);

}  // namespace parafock
