#include <json.hpp>

#include "cellar/cellular.hpp"

namespace cellar {

using nlohmann::ordered_json;

int Poset::index(const std::string& name) const {
  for (int i = 0; i < size(); ++i)
    if (elements[i] == name) return i;
  return -1;
}

Poset Poset::from_pairs(const std::vector<std::string>& elements,
                        const std::vector<std::pair<std::string, std::string>>& lo_hi) {
  Poset p;
  p.elements = elements;
  const int n = p.size();
  p.greater.assign(n, std::vector<bool>(n, false));
  for (const auto& [lo, hi] : lo_hi) {
    int a = p.index(lo), b = p.index(hi);
    if (a < 0 || b < 0) throw InputError("order pair references unknown cell");
    p.greater[b][a] = true;
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (p.greater[i][k] && p.greater[k][j]) p.greater[i][j] = true;
  for (int i = 0; i < n; ++i) {
    if (p.greater[i][i]) throw InputError("order relation is cyclic");
    for (int j = 0; j < n; ++j)
      if (i != j && p.greater[i][j] && p.greater[j][i])
        throw InputError("order relation is not antisymmetric");
  }
  return p;
}

bool Poset::is_linear_extension(const std::vector<int>& order) const {
  if (static_cast<int>(order.size()) != size()) return false;
  std::vector<int> pos(size(), -1);
  for (size_t i = 0; i < order.size(); ++i) {
    if (order[i] < 0 || order[i] >= size() || pos[order[i]] >= 0) return false;
    pos[order[i]] = static_cast<int>(i);
  }
  for (int i = 0; i < size(); ++i)
    for (int j = 0; j < size(); ++j)
      if (gt(i, j) && pos[i] < pos[j]) return false;
  return true;
}

int CellDatum::flat(int lambda, int s, int t) const { return offset_[lambda] + s * tsize[lambda] + t; }

int CellDatum::total_entries() const {
  int n = 0;
  for (int s : tsize) n += s * s;
  return n;
}

void CellDatum::prepare() {
  offset_.assign(tsize.size(), 0);
  for (size_t i = 1; i < tsize.size(); ++i) offset_[i] = offset_[i - 1] + tsize[i - 1] * tsize[i - 1];
  to_cell_.reset();
}

Vec CellDatum::cell_coords(const Element& e) const {
  if (!to_cell_) {
    Mat m(A->field, A->dim(), total_entries());
    for (int l = 0; l < n_cells(); ++l)
      for (int s = 0; s < tsize[l]; ++s)
        for (int t = 0; t < tsize[l]; ++t) {
          Vec col = A->coords(entry[l][s][t]);
          for (int i = 0; i < A->dim(); ++i) m.at(i, flat(l, s, t)) = col[i];
        }
    auto inv = inverse(std::move(m));
    if (!inv) throw InputError("cellular coordinates need C1 (entries are dependent)");
    to_cell_ = std::move(*inv);
  }
  return to_cell_->apply(A->coords(e));
}

CellDatum instantiate_cell_datum(const CellDatumSpec& spec, const FDAlgebra& A) {
  if (!A.presented()) throw InputError("cell data require a presented algebra");
  CellDatum d;
  d.A = &A;
  d.poset = Poset::from_pairs(spec.elements, spec.strict_pairs);
  d.tsize = spec.sizes;
  if (spec.sizes.size() != spec.elements.size() || spec.basis.size() != spec.elements.size())
    throw InputError("cell datum tables disagree with the poset element list");
  long total = 0;
  for (int s : spec.sizes) {
    if (s <= 0) throw InputError("tableau sizes must be positive");
    total += static_cast<long>(s) * s;
  }
  if (total != A.dim())
    throw InputError("sum of |T(lambda)|^2 is " + std::to_string(total) + ", expected dim = " +
                     std::to_string(A.dim()));
  for (size_t l = 0; l < spec.basis.size(); ++l) {
    const auto& rows = spec.basis[l];
    if (static_cast<int>(rows.size()) != spec.sizes[l])
      throw InputError("basis block for '" + spec.elements[l] + "' has wrong row count");
    std::vector<std::vector<Element>> block;
    for (const auto& row : rows) {
      if (static_cast<int>(row.size()) != spec.sizes[l])
        throw InputError("basis block for '" + spec.elements[l] + "' is not square");
      std::vector<Element> out;
      for (const auto& expr : row) out.push_back(A.reduce(A.pres->instantiate(expr, true)));
      block.push_back(std::move(out));
    }
    d.entry.push_back(std::move(block));
  }
  for (const auto& [k, v] : spec.vertex_map) d.vmap[k] = v;
  for (const auto& [k, expr] : spec.arrow_map)
    d.amap.emplace(k, A.reduce(A.pres->instantiate(expr, true)));
  d.prepare();
  return d;
}

namespace {

ExprSpec parse_expr(const ordered_json& j) {
  ExprSpec spec;
  for (const auto& jt : j) {
    TermSpec t;
    if (jt.contains("coeff")) t.coeff = jt.at("coeff").get<std::string>();
    if (jt.contains("vertex")) {
      t.is_vertex = true;
      t.vertex = jt.at("vertex").get<std::string>();
    } else {
      for (const auto& a : jt.at("path")) t.path.push_back(a.get<std::string>());
    }
    spec.push_back(std::move(t));
  }
  return spec;
}

ordered_json expr_json(const ExprSpec& spec) {
  ordered_json out = ordered_json::array();
  for (const auto& t : spec) {
    ordered_json jt;
    jt["coeff"] = t.coeff;
    if (t.is_vertex)
      jt["vertex"] = t.vertex;
    else
      jt["path"] = t.path;
    out.push_back(std::move(jt));
  }
  return out;
}

}  // namespace

CellDatumSpec parse_cell_datum_spec(const std::string& json_text) {
  ordered_json j;
  try {
    j = ordered_json::parse(json_text);
  } catch (const std::exception& ex) {
    throw InputError(std::string("cell datum JSON parse error: ") + ex.what());
  }
  CellDatumSpec spec;
  try {
    for (const auto& e : j.at("poset").at("elements")) spec.elements.push_back(e.get<std::string>());
    for (const auto& pr : j.at("poset").at("strict_pairs"))
      spec.strict_pairs.emplace_back(pr.at(0).get<std::string>(), pr.at(1).get<std::string>());
    for (const auto& e : spec.elements) spec.sizes.push_back(j.at("tableaux").at(e).get<int>());
    for (const auto& e : spec.elements) {
      std::vector<std::vector<ExprSpec>> block;
      for (const auto& row : j.at("basis").at(e)) {
        std::vector<ExprSpec> r;
        for (const auto& cell : row) r.push_back(parse_expr(cell));
        block.push_back(std::move(r));
      }
      spec.basis.push_back(std::move(block));
    }
    const auto& inv = j.at("involution");
    for (const auto& [k, v] : inv.at("vertex_map").items())
      spec.vertex_map.emplace_back(k, v.get<std::string>());
    for (const auto& [k, v] : inv.at("arrow_map").items()) spec.arrow_map.emplace_back(k, parse_expr(v));
  } catch (const InputError&) {
    throw;
  } catch (const std::exception& ex) {
    throw InputError(std::string("malformed cell datum: ") + ex.what());
  }
  return spec;
}

std::string serialize_cell_datum_spec(const CellDatumSpec& spec) {
  ordered_json j;
  j["poset"]["elements"] = spec.elements;
  j["poset"]["strict_pairs"] = ordered_json::array();
  for (const auto& [lo, hi] : spec.strict_pairs)
    j["poset"]["strict_pairs"].push_back(ordered_json::array({lo, hi}));
  j["tableaux"] = ordered_json::object();
  for (size_t i = 0; i < spec.elements.size(); ++i) j["tableaux"][spec.elements[i]] = spec.sizes[i];
  j["basis"] = ordered_json::object();
  for (size_t i = 0; i < spec.elements.size(); ++i) {
    ordered_json block = ordered_json::array();
    for (const auto& row : spec.basis[i]) {
      ordered_json r = ordered_json::array();
      for (const auto& e : row) r.push_back(expr_json(e));
      block.push_back(std::move(r));
    }
    j["basis"][spec.elements[i]] = std::move(block);
  }
  j["involution"]["vertex_map"] = ordered_json::object();
  for (const auto& [k, v] : spec.vertex_map) j["involution"]["vertex_map"][k] = v;
  j["involution"]["arrow_map"] = ordered_json::object();
  for (const auto& [k, v] : spec.arrow_map) j["involution"]["arrow_map"][k] = expr_json(v);
  return j.dump(2) + "\n";
}

CellDatum load_cell_datum(const std::string& json_text, const FDAlgebra& A) {
  return instantiate_cell_datum(parse_cell_datum_spec(json_text), A);
}

C1Result verify_c1(const CellDatum& d) {
  C1Result r;
  if (d.total_entries() != d.A->dim()) {
    r.reason = "entry count differs from dim";
    return r;
  }
  Mat m(d.A->field, d.total_entries(), d.A->dim());
  int row = 0;
  for (int l = 0; l < d.n_cells(); ++l)
    for (int s = 0; s < d.tsize[l]; ++s)
      for (int t = 0; t < d.tsize[l]; ++t) {
        Vec v = d.A->coords(d.entry[l][s][t]);
        m.set_row(row++, v);
      }
  if (rank(m) != d.A->dim()) {
    r.reason = "entries are linearly dependent";
    return r;
  }
  r.ok = true;
  return r;
}

C2Result verify_c2(const CellDatum& d) {
  C2Result r;
  AntiCheck anti = check_anti_automorphism(*d.A, d.vmap, d.amap);
  if (!anti.ok) {
    r.reason = "involution is not an anti-automorphism: " + anti.reason;
    return r;
  }
  for (int l = 0; l < d.n_cells(); ++l)
    for (int s = 0; s < d.tsize[l]; ++s)
      for (int t = 0; t < d.tsize[l]; ++t) {
        Element img = apply_anti(*d.A, d.vmap, d.amap, d.entry[l][s][t]);
        if (!(img == d.entry[l][t][s])) {
          r.reason = "iota(c[" + d.cell_name(l) + "][" + std::to_string(s) + "][" +
                     std::to_string(t) + "]) differs from the transposed entry";
          return r;
        }
      }
  r.ok = true;
  return r;
}

namespace {

// Generators whose action is checked in C3: the vertex idempotents and the
// arrows. Multiplicativity extends the support condition to every element.
std::vector<std::pair<std::string, Element>> c3_generators(const FDAlgebra& A) {
  std::vector<std::pair<std::string, Element>> gens;
  const Quiver& q = A.pres->quiver;
  for (int v = 0; v < q.n_vertices(); ++v)
    gens.emplace_back("e(" + q.vertex_name(v) + ")", A.idem_element(v));
  for (int a = 0; a < q.n_arrows(); ++a) gens.emplace_back(q.arrow(a).name, A.arrow_element(a));
  return gens;
}

}  // namespace

C3Result verify_c3(const CellDatum& d) {
  C3Result r;
  const FDAlgebra& A = *d.A;
  auto gens = c3_generators(A);
  for (int l = 0; l < d.n_cells(); ++l) {
    const int m = d.tsize[l];
    for (const auto& [gname, g] : gens) {
      for (int s = 0; s < m; ++s) {
        std::optional<Vec> rvec;  // r_u^{(g,s)} over u
        for (int t = 0; t < m; ++t) {
          Element prod = multiply(A, g, d.entry[l][s][t]);
          Vec coords = d.cell_coords(prod);
          Vec rcur(m, Scalar::zero(A.field));
          bool bad_support = false;
          for (int l2 = 0; l2 < d.n_cells() && !bad_support; ++l2)
            for (int s2 = 0; s2 < d.tsize[l2] && !bad_support; ++s2)
              for (int t2 = 0; t2 < d.tsize[l2]; ++t2) {
                const Scalar& c = coords[d.flat(l2, s2, t2)];
                if (c.is_zero()) continue;
                if (d.poset.gt(l2, l)) continue;  // higher cells are allowed
                if (l2 == l && t2 == t) {
                  rcur[s2] = c;
                  continue;
                }
                bad_support = true;
                break;
              }
          if (bad_support) {
            r.witness = C3Witness{gname, l, s, t, t};
            r.reason = "support of " + gname + "*c leaves the t-column modulo higher cells";
            return r;
          }
          if (!rvec)
            rvec = rcur;
          else if (!(*rvec == rcur)) {
            r.witness = C3Witness{gname, l, s, 0, t};
            r.reason = "coefficients r_u^{(a,s)} depend on t";
            return r;
          }
        }
      }
    }
  }
  r.ok = true;
  return r;
}

LeftModule cell_module(const CellDatum& d, int lambda) {
  const FDAlgebra& A = *d.A;
  LeftModule M;
  M.A = &A;
  const int m = d.tsize[lambda];
  M.n = m;
  auto action_of = [&](const Element& g) {
    Mat act(A.field, m, m);
    // coefficients extracted against the first column (t = 0)
    for (int s = 0; s < m; ++s) {
      Element prod = multiply(A, g, d.entry[lambda][s][0]);
      Vec coords = d.cell_coords(prod);
      for (int u = 0; u < m; ++u) act.at(u, s) = coords[d.flat(lambda, u, 0)];
    }
    return act;
  };
  const Quiver& q = A.pres->quiver;
  for (int v = 0; v < q.n_vertices(); ++v) M.vertex_act.push_back(action_of(A.idem_element(v)));
  for (int a = 0; a < q.n_arrows(); ++a) {
    M.gen_act.push_back(action_of(A.arrow_element(a)));
    M.gen_names.push_back(q.arrow(a).name);
  }
  return M;
}

Mat gram_matrix(const CellDatum& d, int lambda) {
  const FDAlgebra& A = *d.A;
  const int m = d.tsize[lambda];
  Mat g(A.field, m, m);
  for (int s = 0; s < m; ++s)
    for (int t = 0; t < m; ++t) {
      // c_{0,s} c_{t,0} = <c_s, c_t> c_{0,0} modulo higher cells
      Element prod = multiply(A, d.entry[lambda][0][s], d.entry[lambda][t][0]);
      Vec coords = d.cell_coords(prod);
      g.at(s, t) = coords[d.flat(lambda, 0, 0)];
    }
  return g;
}

std::vector<int> lambda_plus(const CellDatum& d) {
  std::vector<int> out;
  for (int l = 0; l < d.n_cells(); ++l)
    if (rank(gram_matrix(d, l)) > 0) out.push_back(l);
  return out;
}

DecompResult decomposition_matrix(const CellDatum& d) {
  const FDAlgebra& A = *d.A;
  DecompResult res;
  res.lambda_plus = lambda_plus(d);
  const int nv = static_cast<int>(A.vertex_names.size());
  if (static_cast<int>(res.lambda_plus.size()) != nv)
    throw InputError("Lambda+ has " + std::to_string(res.lambda_plus.size()) + " elements, expected " +
                     std::to_string(nv) + " (one per simple)");

  std::vector<LeftModule> deltas;
  for (int l = 0; l < d.n_cells(); ++l) deltas.push_back(cell_module(d, l));

  // match each lambda in Lambda+ to a vertex via the head of its cell module
  res.vertex_of.assign(res.lambda_plus.size(), -1);
  std::vector<bool> used(nv, false);
  for (size_t i = 0; i < res.lambda_plus.size(); ++i) {
    int l = res.lambda_plus[i];
    Mat g = gram_matrix(d, l);
    RowSpace radform(A.field, d.tsize[l]);
    for (auto& v : kernel_basis(g)) radform.insert(std::move(v));
    LeftModule head = quotient_module(deltas[l], radform);
    DimensionVector split = composition_vector(head);
    int vertex = -1;
    long total = 0;
    for (int v = 0; v < nv; ++v) {
      total += split[v];
      if (split[v] > 0) vertex = v;
    }
    if (total != 1 || vertex < 0 || used[vertex])
      throw InputError("head of the cell module at '" + d.cell_name(l) +
                       "' does not match a unique new vertex");
    used[vertex] = true;
    res.vertex_of[i] = vertex;
  }

  res.d.assign(d.n_cells(), std::vector<long>(res.lambda_plus.size(), 0));
  for (int l = 0; l < d.n_cells(); ++l) {
    DimensionVector comp = composition_vector(deltas[l]);
    for (size_t j = 0; j < res.lambda_plus.size(); ++j) res.d[l][j] = comp[res.vertex_of[j]];
  }

  for (int l = 0; l < d.n_cells() && res.order_compatible; ++l)
    for (size_t j = 0; j < res.lambda_plus.size(); ++j) {
      int mu = res.lambda_plus[j];
      if (res.d[l][j] != 0 && l != mu && !d.poset.gt(l, mu)) {
        res.order_compatible = false;
        res.reason = "d[" + d.cell_name(l) + "][" + d.cell_name(mu) + "] nonzero without l > mu";
        break;
      }
      if (l == mu && res.d[l][j] != 1) {
        res.order_compatible = false;
        res.reason = "d[" + d.cell_name(l) + "][" + d.cell_name(l) + "] differs from 1";
        break;
      }
    }

  IntMat cartan = cartan_matrix(A);
  for (size_t a = 0; a < res.lambda_plus.size() && res.cartan_identity; ++a)
    for (size_t b = 0; b < res.lambda_plus.size(); ++b) {
      long sum = 0;
      for (int l = 0; l < d.n_cells(); ++l) sum += res.d[l][a] * res.d[l][b];
      if (sum != cartan[res.vertex_of[a]][res.vertex_of[b]]) {
        res.cartan_identity = false;
        res.reason = "D^T D disagrees with the Cartan matrix";
        break;
      }
    }
  return res;
}

ChainResult cell_chain(const CellDatum& d, const std::vector<int>& extension, std::uint64_t seed) {
  ChainResult res;
  const FDAlgebra& A = *d.A;
  if (!d.poset.is_linear_extension(extension)) {
    res.ok = false;
    res.reason = "given order is not a linear extension of the poset";
    return res;
  }
  DecompResult dec = decomposition_matrix(d);

  const int N = d.n_cells();
  // spans of the tail ideals A(mu_i)
  std::vector<RowSpace> span(N + 1, RowSpace(A.field, A.dim()));
  for (int i = N - 1; i >= 0; --i) {
    span[i] = span[i + 1];
    int l = extension[i];
    for (int s = 0; s < d.tsize[l]; ++s)
      for (int t = 0; t < d.tsize[l]; ++t) span[i].insert(A.coords(d.entry[l][s][t]));
    res.ideal_dims.push_back(span[i].dim());
  }
  std::reverse(res.ideal_dims.begin(), res.ideal_dims.end());

  // two-sided ideal check against idempotents and arrows
  std::vector<Element> gens;
  for (size_t v = 0; v < A.vertex_names.size(); ++v) gens.push_back(A.idem_element(static_cast<int>(v)));
  for (int a = 0; a < A.pres->quiver.n_arrows(); ++a) gens.push_back(A.arrow_element(a));
  for (int i = 0; i < N; ++i)
    for (const auto& row : span[i].rows()) {
      Element x = A.from_coords(row);
      for (const auto& g : gens) {
        if (!span[i].contains(A.coords(multiply(A, g, x)))) {
          res.ok = false;
          res.reason = "A(" + d.cell_name(extension[i]) + ") is not a left ideal";
          return res;
        }
        if (!span[i].contains(A.coords(multiply(A, x, g)))) {
          res.ok = false;
          res.reason = "A(" + d.cell_name(extension[i]) + ") is not a right ideal";
          return res;
        }
      }
    }

  // Delta-filtration of each projective P(lambda), lambda in Lambda+
  for (size_t jp = 0; jp < dec.lambda_plus.size(); ++jp) {
    const int vertex = dec.vertex_of[jp];
    LeftModule P = projective(A, vertex);
    // coordinates of P inside the algebra
    std::vector<int> pidx;
    for (int k = 0; k < A.dim(); ++k)
      if (A.tgt[k] == vertex) pidx.push_back(k);
    auto project = [&](const Vec& full) {
      Vec v(pidx.size(), Scalar::zero(A.field));
      for (size_t j = 0; j < pidx.size(); ++j) v[j] = full[pidx[j]];
      return v;
    };
    std::vector<RowSpace> pspan(N + 1, RowSpace(A.field, P.n));
    for (int i = N; i >= 0; --i) {
      if (i < N) pspan[i] = pspan[i + 1];
      if (i == N) continue;
      int l = extension[i];
      Element ev = A.idem_element(vertex);
      for (int s = 0; s < d.tsize[l]; ++s)
        for (int t = 0; t < d.tsize[l]; ++t)
          pspan[i].insert(project(A.coords(multiply(A, d.entry[l][s][t], ev))));
    }
    for (int i = 0; i < N; ++i) {
      int l = extension[i];
      long expect = dec.d[l][jp] * d.tsize[l];
      long got = pspan[i].dim() - pspan[i + 1].dim();
      if (got != expect) {
        res.ok = false;
        res.reason = "P(" + A.vertex_names[vertex] + ") layer at '" + d.cell_name(l) +
                     "' has dim " + std::to_string(got) + ", expected " + std::to_string(expect);
        return res;
      }
      if (expect == 0) continue;
      LeftModule sub = submodule(P, pspan[i]);
      RowSpace inner(A.field, sub.n);
      for (const auto& row : pspan[i + 1].rows()) {
        auto c = pspan[i].coordinates(row);
        if (!c) throw std::logic_error("nested cell spans are not nested");
        inner.insert(std::move(*c));
      }
      LeftModule layer = quotient_module(sub, inner);
      LeftModule target = direct_sum(cell_module(d, l), static_cast<int>(dec.d[l][jp]));
      if (!module_isomorphic(layer, target, seed)) {
        res.ok = false;
        res.reason = "P(" + A.vertex_names[vertex] + ") layer at '" + d.cell_name(l) +
                     "' is not a direct sum of cell modules";
        return res;
      }
    }
  }
  return res;
}

CellVerification verify_cell_datum(const CellDatum& d) {
  CellVerification v;
  v.c1 = verify_c1(d);
  if (v.c1.ok) {
    v.c2 = verify_c2(d);
    v.c3 = verify_c3(d);
  }
  if (v.c1.ok && v.c2.ok && v.c3.ok) {
    v.decomp = decomposition_matrix(d);
    v.ok = v.decomp->order_compatible && v.decomp->cartan_identity;
  }
  return v;
}

}  // namespace cellar
