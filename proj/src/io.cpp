#include "parafock/io.hpp"

#include <fstream>

#include "parafock/words.hpp"

namespace parafock {

Json json_of(const Rational& r) { return to_string(r); }

Json json_of(const BasisIndex& idx) {
  return Json{{"m", idx.m}, {"n", idx.n}, {"tag", to_string(idx.tag)}};
}

Json json_of(const VectorExpr& v) {
  Json terms = Json::array();
  for (const auto& [idx, c] : v.terms())
    terms.push_back(Json{{"coeff", to_string(c)}, {"ket", ket_string(idx)}});
  return terms;
}

Json json_of(const RationalMatrix& m) {
  Json rows = Json::array();
  for (int r = 0; r < m.rows; ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.cols; ++c) row.push_back(to_string(m.at(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json json_of(const Report& report) {
  Json failures = Json::array();
  for (const CheckFailure& f : report.failures)
    failures.push_back(Json{
        {"actual", f.actual}, {"context", f.context}, {"expected", f.expected}});
  return Json{{"checks_run", report.checks_run},
              {"failures", std::move(failures)},
              {"max_m", report.max_m},
              {"p", report.p},
              {"passed", report.passed()},
              {"suite", report.suite}};
}

Json json_of(const std::vector<Report>& reports) {
  Json out = Json::array();
  for (const Report& r : reports) out.push_back(json_of(r));
  return out;
}

Json build_document(ParaOrder p, Truncation t) {
  Json basis = Json::array();
  for (const BasisIndex& idx : canonical_basis(p, t)) basis.push_back(json_of(idx));

  Json operators;
  Json boundary;
  for (Generator g : all_generators) {
    const SparseOperator op = matrix_of(p, t, g);
    Json entries = Json::array();
    for (const auto& [key, value] : op.entries) {
      entries.push_back(Json{{"col", to_string(key.second)},
                             {"row", to_string(key.first)},
                             {"val", to_string(value)}});
    }
    operators[to_string(g)] = std::move(entries);
    boundary[to_string(g)] = op.boundary_exact;
  }

  return Json{{"basis", std::move(basis)},
              {"boundary_exact", std::move(boundary)},
              {"max_m", t.max_m},
              {"operators", std::move(operators)},
              {"p", p.value}};
}

Json spectrum_document(ParaOrder p, Truncation t) {
  const LadderAction action(p);
  const AlgebraElement ns = builtin_element(p, Builtin::num_s);

  Json sectors = Json::array();
  for (int m = 0; m <= t.max_m; ++m) {
    for (int n = 0; n <= p.value; ++n) {
      const int d = subspace_dim(p, m, n);
      if (d == 0) continue;
      std::vector<BasisIndex> vecs{{m, n, Tag::alpha}};
      if (d == 2) vecs.push_back({m, n, Tag::beta});

      // Columns of N_s in canonical coordinates, plus its (triangular)
      // spectrum read off the diagonal.
      RationalMatrix ns_matrix(d, d);
      for (int col = 0; col < d; ++col) {
        const VectorExpr image =
            evaluate(action, ns, VectorExpr::unit(vecs[std::size_t(col)]));
        for (int row = 0; row < d; ++row)
          ns_matrix.at(row, col) = image.coeff(vecs[std::size_t(row)]);
      }
      Json s_values = Json::array();
      for (int i = 0; i < d; ++i) s_values.push_back(to_string(ns_matrix.at(i, i)));

      sectors.push_back(Json{{"N_b", m},
                             {"N_f", n},
                             {"N_s_matrix", json_of(ns_matrix)},
                             {"N_s_values", std::move(s_values)},
                             {"dim", d},
                             {"m", m},
                             {"n", n}});
    }
  }
  return Json{{"max_m", t.max_m},
              {"p", p.value},
              {"sectors", std::move(sectors)},
              {"total_dim", window_dimension(p, t)}};
}

std::string render(const Json& doc) { return doc.dump(2) + "\n"; }

SectorGraph sector_graph(ParaOrder p, Truncation t) {
  const LadderAction action(p);
  SectorGraph graph;

  const auto sector_shift = [](Generator g) -> std::pair<int, int> {
    switch (g) {
      case Generator::b_plus: return {+1, 0};
      case Generator::b_minus: return {-1, 0};
      case Generator::f_plus: return {0, +1};
      case Generator::f_minus: return {0, -1};
    }
    throw std::logic_error("unknown generator");
  };

  for (int m = 0; m <= t.max_m; ++m) {
    for (int n = 0; n <= p.value; ++n) {
      const int d = subspace_dim(p, m, n);
      if (d == 0) continue;
      graph.nodes.push_back({m, n, d});

      std::vector<BasisIndex> vecs{{m, n, Tag::alpha}};
      if (d == 2) vecs.push_back({m, n, Tag::beta});
      for (Generator g : all_generators) {
        const auto [dm, dn] = sector_shift(g);
        const int tm = m + dm;
        const int tn = n + dn;
        if (tm < 0 || tm > t.max_m || subspace_dim(p, tm, tn) == 0) continue;
        bool nonzero = false;
        for (const BasisIndex& v : vecs)
          if (!action.act(g, v).is_zero()) nonzero = true;
        if (nonzero) graph.edges.push_back({m, n, tm, tn, g});
      }
    }
  }
  return graph;
}

std::string diagram_dot(ParaOrder p, Truncation t) {
  const SectorGraph graph = sector_graph(p, t);
  const auto node_id = [](int m, int n) {
    return "V_" + std::to_string(m) + "_" + std::to_string(n);
  };
  std::string out = "digraph carrier {\n  rankdir=TB;\n  node [shape=box];\n";
  for (const auto& node : graph.nodes) {
    out += "  " + node_id(node.m, node.n) + " [label=\"V(" + std::to_string(node.m) +
           "," + std::to_string(node.n) + ") dim=" + std::to_string(node.dim) +
           "\"];\n";
  }
  for (const auto& edge : graph.edges) {
    out += "  " + node_id(edge.from_m, edge.from_n) + " -> " +
           node_id(edge.to_m, edge.to_n) + " [label=\"" + to_string(edge.g) + "\"];\n";
  }
  out += "}\n";
  return out;
}

Json diagram_document(ParaOrder p, Truncation t) {
  const SectorGraph graph = sector_graph(p, t);
  Json nodes = Json::array();
  for (const auto& node : graph.nodes)
    nodes.push_back(Json{{"dim", node.dim}, {"m", node.m}, {"n", node.n}});
  Json edges = Json::array();
  for (const auto& edge : graph.edges)
    edges.push_back(Json{{"from_m", edge.from_m},
                         {"from_n", edge.from_n},
                         {"label", to_string(edge.g)},
                         {"to_m", edge.to_m},
                         {"to_n", edge.to_n}});
  return Json{{"edges", std::move(edges)},
              {"max_m", t.max_m},
              {"nodes", std::move(nodes)},
              {"p", p.value}};
}

Json ortho_document(ParaOrder p, int m, int n) {
  const GramTable& table = clean_gram_table(p);
  Json vectors = Json::array();
  for (const OrthonormalVector& v : orthonormal_sector_basis(p, m, n)) {
    Json coords;
    for (const auto& [idx, c] : v.coords) coords[ket_string(idx)] = c;

    // The exact squared norm of the combination the vector normalizes:
    // <a,a> for the "+" vector, <a - p b, a - p b> for the "-" vector.
    Rational norm2;
    if (v.sector.tag == Tag::alpha) {
      norm2 = table.inner({m, n, Tag::alpha}, {m, n, Tag::alpha});
    } else {
      const BasisIndex a{m, n, Tag::alpha};
      const BasisIndex b{m, n, Tag::beta};
      const Rational pv(p.value);
      norm2 = table.inner(a, a) - 2 * pv * table.inner(a, b) + pv * pv * table.inner(b, b);
    }
    vectors.push_back(Json{{"coords", std::move(coords)},
                           {"label", v.sector.tag == Tag::alpha ? "+" : "-"},
                           {"norm2_exact", to_string(norm2)}});
  }
  return Json{{"m", m}, {"n", n}, {"p", p.value}, {"vectors", std::move(vectors)}};
}

std::string diagram_text(ParaOrder p, Truncation t) {
  std::string out = "Sector dimensions of the p=" + std::to_string(p.value) +
                    " carrier space (rows m, columns n)\n";
  out += "b+/b- move down/up a row, f+/f- move right/left a column\n\n";

  const auto cell = [](const std::string& s) {
    std::string c = s;
    while (c.size() < 6) c += ' ';
    return c;
  };

  out += cell("");
  for (int n = 0; n <= p.value; ++n) out += cell("n=" + std::to_string(n));
  out += "\n";
  for (int m = 0; m <= t.max_m; ++m) {
    out += cell("m=" + std::to_string(m));
    for (int n = 0; n <= p.value; ++n)
      out += cell(std::to_string(subspace_dim(p, m, n)));
    out += "\n";
  }
  out += "\n";
  out += "window dimension: " + std::to_string(window_dimension(p, t)) + "\n";
  return out;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << content;
  out.flush();
  if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

}  // namespace parafock
