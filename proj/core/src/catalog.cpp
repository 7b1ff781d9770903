#include <algorithm>
#include <functional>

#include "catalog_detail.hpp"

namespace cellar {

namespace catalog_detail {

PresBuilder::PresBuilder(std::uint32_t prime) { p.field = Field{prime}; }
PresBuilder& PresBuilder::prm(const std::string& name, const std::string& value,
                              std::vector<std::string> forbidden) {
  p.params.push_back(Param{name, value, std::move(forbidden)});
  return *this;
}
PresBuilder& PresBuilder::v(const std::string& name) {
  p.quiver.add_vertex(name);
  return *this;
}
PresBuilder& PresBuilder::a(const std::string& name, const std::string& from,
                            const std::string& to) {
  p.quiver.add_arrow(name, from, to);
  return *this;
}
PresBuilder& PresBuilder::r(const std::string& dsl) {
  p.relation_specs.push_back(parse_expr_dsl(dsl));
  return *this;
}
Presentation PresBuilder::fin() {
  finalize_presentation(p);
  return p;
}

long param_long(const std::map<std::string, std::string>& params, const std::string& key,
                long def) {
  auto it = params.find(key);
  if (it == params.end()) return def;
  try {
    size_t pos = 0;
    long v = std::stol(it->second, &pos);
    if (pos != it->second.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    throw InputError("parameter '" + key + "' must be an integer, got '" + it->second + "'");
  }
}

std::string param_str(const std::map<std::string, std::string>& params, const std::string& key,
                      const std::string& def) {
  auto it = params.find(key);
  return it == params.end() ? def : it->second;
}

void reject_unknown_params(const std::map<std::string, std::string>& params,
                           const std::vector<std::string>& known) {
  for (const auto& [k, v] : params)
    if (std::find(known.begin(), known.end(), k) == known.end())
      throw InputError("unknown parameter '" + k + "'");
}

Presentation rename_presentation(const Presentation& in,
                                 const std::map<std::string, std::string>& vmap,
                                 const std::map<std::string, std::string>& amap) {
  Presentation out;
  out.field = in.field;
  out.params = in.params;
  auto vn = [&](const std::string& s) {
    auto it = vmap.find(s);
    return it == vmap.end() ? s : it->second;
  };
  auto an = [&](const std::string& s) {
    auto it = amap.find(s);
    return it == amap.end() ? s : it->second;
  };
  for (const auto& name : in.quiver.vertices()) out.quiver.add_vertex(vn(name));
  for (const auto& ar : in.quiver.arrows())
    out.quiver.add_arrow(an(ar.name), vn(in.quiver.vertex_name(ar.src)),
                         vn(in.quiver.vertex_name(ar.tgt)));
  for (const auto& spec : in.relation_specs) {
    ExprSpec ns;
    for (const auto& t : spec) {
      TermSpec nt = t;
      if (nt.is_vertex)
        nt.vertex = vn(nt.vertex);
      else
        for (auto& name : nt.path) name = an(name);
      ns.push_back(std::move(nt));
    }
    out.relation_specs.push_back(std::move(ns));
  }
  finalize_presentation(out);
  return out;
}

}  // namespace catalog_detail

BrauerGraph BrauerGraph::line(int n_edges, const std::vector<long>& vertex_mults) {
  if (n_edges < 1) throw InputError("line needs at least one edge");
  if (static_cast<int>(vertex_mults.size()) != n_edges + 1)
    throw InputError("line with n edges needs n+1 vertex multiplicities");
  BrauerGraph g;
  g.multiplicity = vertex_mults;
  for (int e = 0; e < n_edges; ++e) g.edges.emplace_back(e, e + 1);
  g.cyclic.resize(n_edges + 1);
  for (int u = 0; u <= n_edges; ++u) {
    if (u > 0) g.cyclic[u].emplace_back(u - 1, 1);
    if (u < n_edges) g.cyclic[u].emplace_back(u, 0);
  }
  return g;
}

Presentation brauer_graph_algebra(const BrauerGraph& g) {
  const int nv = static_cast<int>(g.multiplicity.size());
  const int ne = static_cast<int>(g.edges.size());
  if (nv == 0 || ne == 0) throw InputError("empty Brauer graph");
  for (long m : g.multiplicity)
    if (m < 1) throw InputError("vertex multiplicities must be >= 1");
  if (static_cast<int>(g.cyclic.size()) != nv)
    throw InputError("cyclic ordering missing for some vertex");

  // cyclic orderings must cover exactly the incident edge-ends
  std::vector<std::vector<int>> seen(ne, std::vector<int>(2, 0));
  std::vector<std::pair<int, int>> end_vertex_pos(2 * ne, {-1, -1});  // (vertex, position)
  for (int u = 0; u < nv; ++u)
    for (size_t i = 0; i < g.cyclic[u].size(); ++i) {
      auto [e, side] = g.cyclic[u][i];
      if (e < 0 || e >= ne || (side != 0 && side != 1))
        throw InputError("invalid ribbon structure: bad edge end");
      int expect = side == 0 ? g.edges[e].first : g.edges[e].second;
      if (expect != u) throw InputError("invalid ribbon structure: end listed at wrong vertex");
      if (seen[e][side]++) throw InputError("invalid ribbon structure: duplicated edge end");
      end_vertex_pos[2 * e + side] = {u, static_cast<int>(i)};
    }
  for (int e = 0; e < ne; ++e)
    if (!seen[e][0] || !seen[e][1]) throw InputError("invalid ribbon structure: missing edge end");

  // connected, with at most one cycle, which must be odd (bipartite test;
  // loops count as odd cycles, parallel edges as even ones)
  {
    std::vector<std::vector<std::pair<int, int>>> adj(nv);
    for (int e = 0; e < ne; ++e) {
      adj[g.edges[e].first].emplace_back(g.edges[e].second, e);
      adj[g.edges[e].second].emplace_back(g.edges[e].first, e);
    }
    std::vector<int> color(nv, -1);
    bool odd_cycle = false;
    std::function<void(int)> dfs = [&](int u) {
      for (auto [w, e] : adj[u]) {
        if (w == u) {
          odd_cycle = true;  // loop
          continue;
        }
        if (color[w] < 0) {
          color[w] = 1 - color[u];
          dfs(w);
        } else if (color[w] == color[u]) {
          odd_cycle = true;
        }
      }
    };
    color[0] = 0;
    dfs(0);
    for (int u = 0; u < nv; ++u)
      if (color[u] < 0) throw InputError("Brauer graph must be connected");
    int rank = ne - nv + 1;
    if (rank > 1) throw InputError("Brauer graphs with more than one cycle are not supported");
    if (rank == 1 && !odd_cycle)
      throw InputError("the cycle of the Brauer graph must have odd length");
  }

  Presentation p;
  p.field = Field{0};
  for (int e = 0; e < ne; ++e) p.quiver.add_vertex("x" + std::to_string(e + 1));
  // one arrow per edge-end: from its edge to the successor edge around the vertex
  std::vector<std::string> out_name(2 * ne);
  for (int u = 0; u < nv; ++u) {
    const auto& cyc = g.cyclic[u];
    for (size_t i = 0; i < cyc.size(); ++i) {
      auto [e, side] = cyc[i];
      auto [e2, side2] = cyc[(i + 1) % cyc.size()];
      std::string name = "v" + std::to_string(u) + "_" + std::to_string(i);
      out_name[2 * e + side] = name;
      p.quiver.add_arrow(name, "x" + std::to_string(e + 1), "x" + std::to_string(e2 + 1));
    }
  }
  auto cycle_word = [&](int e, int side, long power) {
    auto [u, pos] = end_vertex_pos[2 * e + side];
    const auto& cyc = g.cyclic[u];
    std::vector<std::string> word;
    for (long rep = 0; rep < power; ++rep)
      for (size_t k = 0; k < cyc.size(); ++k) {
        auto [e2, side2] = cyc[(pos + k) % cyc.size()];
        word.push_back(out_name[2 * e2 + side2]);
      }
    return word;
  };
  auto in_name = [&](int e, int side) {
    auto [u, pos] = end_vertex_pos[2 * e + side];
    const auto& cyc = g.cyclic[u];
    auto [e2, side2] = cyc[(pos + cyc.size() - 1) % cyc.size()];
    return out_name[2 * e2 + side2];
  };
  for (int e = 0; e < ne; ++e) {
    long mu = g.multiplicity[end_vertex_pos[2 * e].first];
    long mv = g.multiplicity[end_vertex_pos[2 * e + 1].first];
    ExprSpec diff;
    TermSpec pos_term, neg_term;
    pos_term.path = cycle_word(e, 0, mu);
    neg_term.coeff = "-1";
    neg_term.path = cycle_word(e, 1, mv);
    diff.push_back(pos_term);
    diff.push_back(neg_term);
    p.relation_specs.push_back(std::move(diff));
    for (int side = 0; side < 2; ++side) {
      TermSpec mixed;
      mixed.path = {in_name(e, side), out_name[2 * e + (1 - side)]};
      p.relation_specs.push_back(ExprSpec{mixed});
    }
  }
  finalize_presentation(p);
  return p;
}

}  // namespace cellar
