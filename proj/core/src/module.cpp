#include <random>

#include "cellar/module.hpp"

namespace cellar {

Mat LeftModule::act_word(const Word& w) const {
  if (w.length() == 0) return vertex_act[w.src];
  Mat m = gen_act[w.arrows[0]];
  for (size_t i = 1; i < w.arrows.size(); ++i) m = m * gen_act[w.arrows[i]];
  return m;
}

Mat LeftModule::act_element(const Element& e) const {
  Mat acc(field(), n, n);
  for (const auto& [w, c] : e.terms()) {
    Mat mw = act_word(w);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (!mw.at(i, j).is_zero()) acc.at(i, j) += c * mw.at(i, j);
  }
  return acc;
}

bool LeftModule::validate(std::string* why) const {
  auto fail = [&](const std::string& m) {
    if (why) *why = m;
    return false;
  };
  const Field f = field();
  Mat sum(f, n, n);
  for (size_t v = 0; v < vertex_act.size(); ++v) {
    for (size_t u = 0; u < vertex_act.size(); ++u) {
      Mat p = vertex_act[v] * vertex_act[u];
      if (u == v ? !(p == vertex_act[v]) : !p.is_zero())
        return fail("idempotent actions are not orthogonal projectors");
    }
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) sum.at(i, j) += vertex_act[v].at(i, j);
  }
  if (!(sum == Mat::identity(f, n))) return fail("idempotent actions do not sum to identity");
  if (A->presented()) {
    for (const auto& rel : A->pres->relations)
      if (!act_element(rel).is_zero()) return fail("a defining relation acts nonzero");
    for (int a = 0; a < A->pres->quiver.n_arrows(); ++a) {
      const Arrow& ar = A->pres->quiver.arrow(a);
      Mat m = gen_act[a];
      if (!(vertex_act[ar.src] * m == m) || !(m * vertex_act[ar.tgt] == m))
        return fail("arrow action is not compatible with its endpoints");
    }
  }
  return true;
}

namespace {

std::vector<int> module_word_indices(const FDAlgebra& A, int vertex) {
  std::vector<int> idx;
  for (int k = 0; k < A.dim(); ++k)
    if (A.tgt[k] == vertex) idx.push_back(k);
  return idx;
}

// Action of left multiplication by basis element g on the span of the given
// algebra-basis indices (which must be closed under it).
Mat restrict_action(const FDAlgebra& A, int g, const std::vector<int>& idx) {
  const Field f = A.field;
  const int m = static_cast<int>(idx.size());
  std::vector<int> where(A.dim(), -1);
  for (int j = 0; j < m; ++j) where[idx[j]] = j;
  Mat out(f, m, m);
  for (int j = 0; j < m; ++j)
    for (const auto& [k, c] : A.mul(g, idx[j])) {
      if (where[k] < 0) throw std::logic_error("module span is not closed under the action");
      out.at(where[k], j) = c;
    }
  return out;
}

std::vector<int> generator_basis_indices(const FDAlgebra& A) {
  std::vector<int> gens;
  if (A.presented()) return gens;  // unused for presented algebras
  for (int k = 0; k < A.dim(); ++k)
    if (A.len[k] >= 1) gens.push_back(k);
  return gens;
}

}  // namespace

LeftModule projective(const FDAlgebra& A, int vertex) {
  LeftModule M;
  M.A = &A;
  std::vector<int> idx = module_word_indices(A, vertex);
  M.n = static_cast<int>(idx.size());
  for (size_t v = 0; v < A.idem.size(); ++v)
    M.vertex_act.push_back(restrict_action(A, A.idem[v], idx));
  if (A.presented()) {
    const Quiver& q = A.pres->quiver;
    for (int a = 0; a < q.n_arrows(); ++a) {
      // an arrow may itself be a reducible word; act by its normal form
      Vec c = A.coords(Element::from_word(A.field, word_from_arrow(q, a), Scalar::one(A.field)));
      Mat act(A.field, M.n, M.n);
      for (int k = 0; k < A.dim(); ++k) {
        if (c[k].is_zero()) continue;
        Mat part = restrict_action(A, k, idx);
        for (int i = 0; i < M.n; ++i)
          for (int j = 0; j < M.n; ++j)
            if (!part.at(i, j).is_zero()) act.at(i, j) += c[k] * part.at(i, j);
      }
      M.gen_act.push_back(std::move(act));
      M.gen_names.push_back(q.arrow(a).name);
    }
  } else {
    for (int k : generator_basis_indices(A)) {
      M.gen_act.push_back(restrict_action(A, k, idx));
      M.gen_names.push_back(A.labels[k]);
    }
  }
  return M;
}

LeftModule simple_module(const FDAlgebra& A, int vertex) {
  LeftModule M;
  M.A = &A;
  M.n = 1;
  const Field f = A.field;
  for (size_t v = 0; v < A.idem.size(); ++v) {
    Mat m(f, 1, 1);
    if (static_cast<int>(v) == vertex) m.at(0, 0) = Scalar::one(f);
    M.vertex_act.push_back(std::move(m));
  }
  int ngens = A.presented() ? A.pres->quiver.n_arrows()
                            : static_cast<int>(generator_basis_indices(A).size());
  for (int g = 0; g < ngens; ++g) M.gen_act.emplace_back(f, 1, 1);
  return M;
}

IntMat cartan_matrix(const FDAlgebra& A) {
  const int nv = static_cast<int>(A.vertex_names.size());
  IntMat c(nv, std::vector<long>(nv, 0));
  for (int k = 0; k < A.dim(); ++k) c[A.tgt[k]][A.src[k]] += 1;
  return c;
}

namespace {

RowSpace radical_image(const LeftModule& M, const RowSpace& space) {
  RowSpace out(M.field(), M.n);
  for (const auto& g : M.gen_act)
    for (const auto& row : space.rows()) out.insert(g.apply(row));
  return out;
}

RowSpace full_space(const LeftModule& M) {
  RowSpace s(M.field(), M.n);
  for (int i = 0; i < M.n; ++i) {
    Vec v(M.n, Scalar::zero(M.field()));
    v[i] = Scalar::one(M.field());
    s.insert(std::move(v));
  }
  return s;
}

}  // namespace

std::vector<int> radical_layer_dims(const LeftModule& M) {
  std::vector<int> dims;
  RowSpace space = full_space(M);
  dims.push_back(space.dim());
  while (space.dim() > 0) {
    RowSpace nxt = radical_image(M, space);
    if (nxt.dim() >= space.dim())
      throw std::logic_error("radical series fails to decrease");
    dims.push_back(nxt.dim());
    space = std::move(nxt);
  }
  return dims;
}

RowSpace socle_space(const LeftModule& M) {
  const Field f = M.field();
  const int g = static_cast<int>(M.gen_act.size());
  Mat stack(f, g * M.n, M.n);
  for (int a = 0; a < g; ++a)
    for (int i = 0; i < M.n; ++i)
      for (int j = 0; j < M.n; ++j) stack.at(a * M.n + i, j) = M.gen_act[a].at(i, j);
  RowSpace s(f, M.n);
  for (auto& v : kernel_basis(stack)) s.insert(std::move(v));
  return s;
}

namespace {

DimensionVector vertex_split(const LeftModule& M, const RowSpace& space) {
  DimensionVector out;
  for (const auto& e : M.vertex_act) {
    RowSpace comp(M.field(), M.n);
    for (const auto& row : space.rows()) comp.insert(e.apply(row));
    out.push_back(comp.dim());
  }
  return out;
}

}  // namespace

DimensionVector socle_vector(const LeftModule& M) { return vertex_split(M, socle_space(M)); }

DimensionVector top_vector(const LeftModule& M) {
  RowSpace rad = radical_image(M, full_space(M));
  DimensionVector whole = vertex_split(M, full_space(M));
  DimensionVector sub = vertex_split(M, rad);
  DimensionVector out(whole.size());
  for (size_t i = 0; i < whole.size(); ++i) out[i] = whole[i] - sub[i];
  return out;
}

DimensionVector composition_vector(const LeftModule& M) {
  DimensionVector out;
  for (const auto& e : M.vertex_act) out.push_back(rank(e));
  return out;
}

WeakSymmetry weakly_symmetric(const FDAlgebra& A) {
  for (size_t v = 0; v < A.vertex_names.size(); ++v) {
    LeftModule P = projective(A, static_cast<int>(v));
    DimensionVector soc = socle_vector(P);
    long total = 0;
    for (long d : soc) total += d;
    if (total != 1 || soc[v] != 1) {
      WeakSymmetry w;
      w.ok = false;
      w.witness_vertex = static_cast<int>(v);
      w.reason = "Soc P(" + A.vertex_names[v] + ") is not L(" + A.vertex_names[v] + ")";
      return w;
    }
  }
  return WeakSymmetry{};
}

IntMat gabriel_matrix(const FDAlgebra& A) {
  const int nv = static_cast<int>(A.vertex_names.size());
  const Field f = A.field;
  std::vector<int> radical;
  for (int k = 0; k < A.dim(); ++k)
    if (A.len[k] >= 1) radical.push_back(k);
  // J^2 spans, bucketed by (src, tgt); products of radical words stay
  // homogeneous in their endpoints
  std::vector<std::vector<RowSpace>> sq(nv, std::vector<RowSpace>(nv, RowSpace(f, A.dim())));
  for (int i : radical)
    for (int j : radical) {
      const SparseVec& p = A.mul(i, j);
      if (p.empty()) continue;
      Vec v(A.dim(), Scalar::zero(f));
      for (const auto& [k, c] : p) v[k] = c;
      sq[A.src[i]][A.tgt[j]].insert(std::move(v));
    }
  IntMat g(nv, std::vector<long>(nv, 0));
  for (int i : radical) g[A.src[i]][A.tgt[i]] += 1;
  for (int u = 0; u < nv; ++u)
    for (int v = 0; v < nv; ++v) g[u][v] -= sq[u][v].dim();
  return g;
}

Ext1Sym ext1_symmetric(const FDAlgebra& A) {
  IntMat g = gabriel_matrix(A);
  for (size_t i = 0; i < g.size(); ++i)
    for (size_t j = i + 1; j < g.size(); ++j)
      if (g[i][j] != g[j][i]) return Ext1Sym{false, static_cast<int>(i), static_cast<int>(j)};
  return Ext1Sym{};
}

FDAlgebra truncate(const FDAlgebra& A, const std::vector<std::string>& vertices) {
  if (vertices.empty()) throw InputError("truncation needs at least one vertex");
  std::vector<int> sel;
  for (const auto& name : vertices) {
    auto it = std::find(A.vertex_names.begin(), A.vertex_names.end(), name);
    if (it == A.vertex_names.end()) throw InputError("unknown vertex '" + name + "'");
    sel.push_back(static_cast<int>(it - A.vertex_names.begin()));
  }
  std::vector<int> pos(A.vertex_names.size(), -1);
  for (size_t i = 0; i < sel.size(); ++i) {
    if (pos[sel[i]] >= 0) throw InputError("duplicate vertex in truncation set");
    pos[sel[i]] = static_cast<int>(i);
  }

  FDAlgebra B;
  B.field = A.field;
  B.vertex_names = vertices;
  std::vector<int> keep;
  std::vector<int> where(A.dim(), -1);
  for (int k = 0; k < A.dim(); ++k)
    if (pos[A.src[k]] >= 0 && pos[A.tgt[k]] >= 0) {
      where[k] = static_cast<int>(keep.size());
      keep.push_back(k);
    }
  B.idem.assign(vertices.size(), -1);
  for (int k : keep) {
    B.basis.push_back(A.basis[k]);
    B.labels.push_back(A.labels[k]);
    B.src.push_back(pos[A.src[k]]);
    B.tgt.push_back(pos[A.tgt[k]]);
    B.len.push_back(A.len[k]);
    if (A.len[k] == 0) B.idem[pos[A.src[k]]] = where[k];
  }
  const int n = static_cast<int>(keep.size());
  B.table.assign(n, std::vector<SparseVec>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      SparseVec sv;
      for (const auto& [k, c] : A.mul(keep[i], keep[j])) {
        if (where[k] < 0) throw std::logic_error("truncated product left the subspace");
        sv.emplace_back(where[k], c);
      }
      B.table[i][j] = std::move(sv);
    }
  // rad(eAe) = e rad(A) e; recompute its nilpotency degree on the table
  std::vector<int> radical;
  RowSpace power(B.field, n);
  for (int k = 0; k < n; ++k)
    if (B.len[k] >= 1) {
      radical.push_back(k);
      Vec v(n, Scalar::zero(B.field));
      v[k] = Scalar::one(B.field);
      power.insert(std::move(v));
    }
  int deg = 1;
  while (power.dim() > 0) {
    RowSpace nxt(B.field, n);
    for (int i : radical)
      for (const auto& row : power.rows()) {
        SparseVec p = B.mul_vec(i, row);
        Vec v(n, Scalar::zero(B.field));
        for (const auto& [k, c] : p) v[k] = c;
        nxt.insert(std::move(v));
      }
    power = std::move(nxt);
    ++deg;
  }
  B.nilpotency = deg;
  return B;
}

namespace {

std::vector<Mat> hom_space(const LeftModule& M, const LeftModule& N) {
  const Field f = M.field();
  const int n = M.n;  // == N.n checked by caller
  std::vector<const Mat*> gm, gn;
  for (const auto& m : M.vertex_act) gm.push_back(&m);
  for (const auto& m : N.vertex_act) gn.push_back(&m);
  for (const auto& m : M.gen_act) gm.push_back(&m);
  for (const auto& m : N.gen_act) gn.push_back(&m);
  // unknowns T (n x n), equations T*rhoM(g) - rhoN(g)*T = 0
  Mat sys(f, static_cast<int>(gm.size()) * n * n, n * n);
  int row = 0;
  for (size_t g = 0; g < gm.size(); ++g) {
    const Mat& a = *gm[g];
    const Mat& b = *gn[g];
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) {
          sys.at(row, i * n + k) += a.at(k, j);
          sys.at(row, k * n + j) -= b.at(i, k);
        }
        ++row;
      }
  }
  std::vector<Mat> out;
  for (const auto& v : kernel_basis(sys)) {
    Mat t(f, n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) t.at(i, j) = v[i * n + j];
    out.push_back(std::move(t));
  }
  return out;
}

bool combo_invertible(const std::vector<Mat>& homs, const Vec& coef) {
  const Field f = homs[0].field();
  const int n = homs[0].rows();
  Mat t(f, n, n);
  for (size_t h = 0; h < homs.size(); ++h) {
    if (coef[h].is_zero()) continue;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) t.at(i, j) += coef[h] * homs[h].at(i, j);
  }
  return !det(t).is_zero();
}

}  // namespace

bool module_isomorphic(const LeftModule& M, const LeftModule& N, std::uint64_t seed) {
  if (M.n != N.n) return false;
  if (M.n == 0) return true;
  std::vector<Mat> homs = hom_space(M, N);
  if (homs.empty()) return false;
  const Field f = M.field();
  const size_t h = homs.size();

  // seeded random combinations first
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 128; ++attempt) {
    Vec coef;
    for (size_t i = 0; i < h; ++i) {
      long bound = f.rational() ? 2 * M.n + 1 : f.p;
      long r = static_cast<long>(rng() % static_cast<std::uint64_t>(bound));
      coef.push_back(Scalar(f, f.rational() ? r - M.n : r));
    }
    if (combo_invertible(homs, coef)) return true;
  }

  // deterministic exhaustive grid: over F_p all of F_p^h is complete; over Q
  // a grid of size deg+1 per variable decides a degree-<=n determinant
  long per = f.rational() ? M.n + 1 : f.p;
  double total = 1;
  for (size_t i = 0; i < h; ++i) total *= static_cast<double>(per);
  if (total > 2e6) throw ResourceCapError("hom space too large for the exhaustive grid");
  std::vector<long> odo(h, 0);
  while (true) {
    Vec coef;
    for (size_t i = 0; i < h; ++i) coef.push_back(Scalar(f, odo[i]));
    if (combo_invertible(homs, coef)) return true;
    size_t k = 0;
    while (k < h && ++odo[k] == per) odo[k++] = 0;
    if (k == h) break;
  }
  return false;
}

LeftModule submodule(const LeftModule& M, const RowSpace& span) {
  LeftModule S;
  S.A = M.A;
  S.n = span.dim();
  auto restrict_to = [&](const Mat& act) {
    Mat out(M.field(), S.n, S.n);
    for (int j = 0; j < S.n; ++j) {
      auto c = span.coordinates(act.apply(span.rows()[j]));
      if (!c) throw InputError("span is not closed under the module action");
      for (int i = 0; i < S.n; ++i) out.at(i, j) = (*c)[i];
    }
    return out;
  };
  for (const auto& m : M.vertex_act) S.vertex_act.push_back(restrict_to(m));
  for (const auto& m : M.gen_act) S.gen_act.push_back(restrict_to(m));
  S.gen_names = M.gen_names;
  return S;
}

LeftModule quotient_module(const LeftModule& M, const RowSpace& sub) {
  LeftModule Q;
  Q.A = M.A;
  const Field f = M.field();
  std::vector<bool> is_pivot(M.n, false);
  for (int p : sub.pivots()) is_pivot[p] = true;
  std::vector<int> free;
  for (int i = 0; i < M.n; ++i)
    if (!is_pivot[i]) free.push_back(i);
  Q.n = static_cast<int>(free.size());
  auto project = [&](const Vec& v) {
    Vec r = sub.residue(v);
    Vec out(Q.n, Scalar::zero(f));
    for (int i = 0; i < Q.n; ++i) out[i] = r[free[i]];
    return out;
  };
  auto push = [&](const Mat& act) {
    Mat out(f, Q.n, Q.n);
    for (int j = 0; j < Q.n; ++j) {
      Vec lift(M.n, Scalar::zero(f));
      lift[free[j]] = Scalar::one(f);
      Vec img = project(act.apply(lift));
      for (int i = 0; i < Q.n; ++i) out.at(i, j) = img[i];
    }
    return out;
  };
  for (const auto& m : M.vertex_act) Q.vertex_act.push_back(push(m));
  for (const auto& m : M.gen_act) Q.gen_act.push_back(push(m));
  Q.gen_names = M.gen_names;
  return Q;
}

LeftModule direct_sum(const LeftModule& M, int copies) {
  LeftModule D;
  D.A = M.A;
  D.n = M.n * copies;
  const Field f = M.field();
  auto blow = [&](const Mat& act) {
    Mat out(f, D.n, D.n);
    for (int c = 0; c < copies; ++c)
      for (int i = 0; i < M.n; ++i)
        for (int j = 0; j < M.n; ++j) out.at(c * M.n + i, c * M.n + j) = act.at(i, j);
    return out;
  };
  for (const auto& m : M.vertex_act) D.vertex_act.push_back(blow(m));
  for (const auto& m : M.gen_act) D.gen_act.push_back(blow(m));
  D.gen_names = M.gen_names;
  return D;
}

}  // namespace cellar
