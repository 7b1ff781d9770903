#include <algorithm>
#include <functional>

#include "cellar/obstruction.hpp"

namespace cellar {

long trace_of(const IntMat& m) {
  long t = 0;
  for (size_t i = 0; i < m.size(); ++i) t += m[i][i];
  return t;
}

long det_int(IntMat m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return 1;
  long sign = 1, prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k] == 0) {
      int swap = -1;
      for (int i = k + 1; i < n; ++i)
        if (m[i][k] != 0) {
          swap = i;
          break;
        }
      if (swap < 0) return 0;
      std::swap(m[k], m[swap]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

namespace {

long isqrt(long x) {
  long r = 0;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

void validate_cartan(const IntMat& c) {
  const size_t n = c.size();
  for (const auto& row : c)
    if (row.size() != n) throw InputError("Cartan matrix is not square");
  for (size_t i = 0; i < n; ++i) {
    if (c[i][i] < 1) throw InputError("Cartan diagonal entries must be >= 1");
    for (size_t j = 0; j < n; ++j) {
      if (c[i][j] < 0) throw InputError("Cartan entries must be natural numbers");
      if (c[i][j] != c[j][i]) throw InputError("Cartan matrix is not symmetric");
    }
  }
}

}  // namespace

std::vector<IntMat> gram_factorizations(const IntMat& cartan, long trace_cap) {
  validate_cartan(cartan);
  const int n = static_cast<int>(cartan.size());
  const long trace = trace_of(cartan);
  if (trace > trace_cap)
    throw ResourceCapError("trace " + std::to_string(trace) + " exceeds the factorization cap " +
                           std::to_string(trace_cap));

  std::vector<IntMat> found;
  IntMat rows;
  IntMat residual = cartan;

  std::function<void()> dfs = [&]() {
    bool done = true;
    for (int i = 0; i < n && done; ++i)
      for (int j = 0; j < n; ++j)
        if (residual[i][j] != 0) {
          done = false;
          break;
        }
    if (done) {
      for (int j = 0; j < n; ++j) {
        bool has_one = false;
        for (const auto& r : rows) has_one = has_one || r[j] == 1;
        if (!has_one) return;
      }
      found.push_back(rows);
      return;
    }
    // enumerate the next row in descending lex order, bounded by the previous
    const std::vector<long> bound = rows.empty() ? std::vector<long>() : rows.back();
    std::vector<long> row(n, 0);
    std::function<void(int, bool)> fill = [&](int pos, bool tight) {
      if (pos == n) {
        bool nonzero = false;
        for (long x : row) nonzero = nonzero || x != 0;
        if (!nonzero) return;
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) residual[i][j] -= row[i] * row[j];
        rows.push_back(row);
        dfs();
        rows.pop_back();
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) residual[i][j] += row[i] * row[j];
        return;
      }
      long hi = isqrt(residual[pos][pos]);
      if (tight && !bound.empty()) hi = std::min(hi, bound[pos]);
      for (long v = hi; v >= 0; --v) {
        bool ok = true;
        for (int i = 0; i < pos && ok; ++i) ok = row[i] * v <= residual[i][pos];
        if (!ok) continue;
        row[pos] = v;
        fill(pos + 1, tight && !bound.empty() && v == bound[pos]);
        row[pos] = 0;
      }
    };
    fill(0, !bound.empty());
  };
  dfs();
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  return found;
}

namespace {

struct OrderSearch {
  const IntMat& d;
  bool self_injective;
  int m, k;
  std::vector<std::vector<int>> support;   // per column: rows with nonzero entry
  std::vector<std::vector<int>> one_rows;  // per column: rows with entry exactly 1
  std::vector<bool> unit_row;              // exactly one nonzero entry and it is 1

  int best_stage = -1;
  std::string best_reason;
  OrderCertificate result;

  explicit OrderSearch(const IntMat& dd, bool si) : d(dd), self_injective(si) {
    m = static_cast<int>(d.size());
    k = m ? static_cast<int>(d[0].size()) : 0;
    support.resize(k);
    one_rows.resize(k);
    for (int j = 0; j < k; ++j)
      for (int i = 0; i < m; ++i) {
        if (d[i][j] != 0) support[j].push_back(i);
        if (d[i][j] == 1) one_rows[j].push_back(i);
      }
    unit_row.assign(m, false);
    for (int i = 0; i < m; ++i) {
      int nz = 0;
      bool one = true;
      for (int j = 0; j < k; ++j)
        if (d[i][j] != 0) {
          ++nz;
          one = one && d[i][j] == 1;
        }
      unit_row[i] = nz == 1 && one;
    }
  }

  void note(int stage, const std::string& reason) {
    if (stage > best_stage) {
      best_stage = stage;
      best_reason = reason;
    }
  }

  static bool topo_order(int m, const std::vector<std::pair<int, int>>& edges,
                         std::vector<int>* order) {
    // edge (a, b) means a > b; emit rows in ascending order, smallest index first
    std::vector<std::vector<int>> above(m);
    std::vector<int> deg(m, 0);
    std::vector<std::vector<bool>> seen(m, std::vector<bool>(m, false));
    for (auto [a, b] : edges) {
      if (a == b) return false;
      if (seen[a][b]) continue;
      seen[a][b] = true;
      above[b].push_back(a);
      ++deg[a];
    }
    std::vector<int> out;
    std::vector<bool> used(m, false);
    for (int step = 0; step < m; ++step) {
      int pick = -1;
      for (int i = 0; i < m && pick < 0; ++i)
        if (!used[i] && deg[i] == 0) pick = i;
      if (pick < 0) return false;
      used[pick] = true;
      out.push_back(pick);
      for (int a : above[pick]) --deg[a];
    }
    *order = out;
    return true;
  }

  bool try_phi(std::vector<int>& phi) {
    std::vector<std::pair<int, int>> forced;
    for (int j = 0; j < k; ++j)
      for (int i : support[j])
        if (i != phi[j]) forced.emplace_back(i, phi[j]);
    std::vector<int> dummy;
    if (!topo_order(m, forced, &dummy)) {
      note(0, "forced relations contain a directed cycle");
      return false;
    }
    std::vector<bool> has_below(m, false), has_above(m, false);
    for (auto [a, b] : forced) {
      has_below[a] = true;
      has_above[b] = true;
    }
    std::vector<int> bottoms, tops;
    for (int i = 0; i < m; ++i)
      if (unit_row[i] && !has_below[i]) bottoms.push_back(i);
    if (bottoms.empty()) {
      note(1, "no unit row can be the minimal element");
      return false;
    }
    if (self_injective) {
      for (int i = 0; i < m; ++i)
        if (unit_row[i] && !has_above[i]) tops.push_back(i);
      if (tops.empty()) {
        note(2, "no single-entry row can be the maximal element");
        return false;
      }
    } else {
      tops.push_back(-1);
    }
    for (int b : bottoms)
      for (int t : tops) {
        if (self_injective && m > 1 && b == t) {
          note(3, "minimal and maximal rows would coincide");
          continue;
        }
        std::vector<std::pair<int, int>> edges = forced;
        for (int i = 0; i < m; ++i)
          if (i != b) edges.emplace_back(i, b);
        if (self_injective)
          for (int i = 0; i < m; ++i)
            if (i != t) edges.emplace_back(t, i);
        std::vector<int> base_order;
        if (!topo_order(m, edges, &base_order)) {
          note(4, "rows cannot be chained between the minimal and maximal elements");
          continue;
        }
        if (!self_injective) {
          result.consistent = true;
          result.assignment = phi;
          result.forced = forced;
          result.chain = base_order;
          return true;
        }
        // socle matching: injective column -> top-of-column rows with entry 1
        std::vector<int> psi(k, -1);
        std::vector<bool> used(m, false);
        std::function<bool(int)> place = [&](int j) {
          if (j == k) {
            std::vector<std::pair<int, int>> full = edges;
            for (int jj = 0; jj < k; ++jj)
              for (int i : support[jj])
                if (i != psi[jj]) full.emplace_back(psi[jj], i);
            std::vector<int> order;
            if (!topo_order(m, full, &order)) return false;
            result.consistent = true;
            result.assignment = phi;
            result.forced = forced;
            result.chain = order;
            result.socle_rows = psi;
            return true;
          }
          for (int i : one_rows[j]) {
            if (used[i]) continue;
            psi[j] = i;
            used[i] = true;
            if (place(j + 1)) return true;
            used[i] = false;
            psi[j] = -1;
          }
          return false;
        };
        if (place(0)) return true;
        note(5, "socle rows of the columns cannot be made distinct");
      }
    return false;
  }

  OrderCertificate run() {
    std::vector<int> phi(k, -1);
    std::vector<bool> used(m, false);
    bool found = false;
    std::function<void(int)> rec = [&](int j) {
      if (found) return;
      if (j == k) {
        found = try_phi(phi);
        return;
      }
      for (int i : one_rows[j]) {
        if (used[i]) continue;
        phi[j] = i;
        used[i] = true;
        rec(j + 1);
        used[i] = false;
        phi[j] = -1;
        if (found) return;
      }
    };
    if (m < k) {
      result.reason = "fewer rows than columns";
      return result;
    }
    rec(0);
    if (!found) {
      if (best_stage < 0) best_reason = "no injective matching of columns to unit entries";
      result.consistent = false;
      result.reason = best_reason;
    }
    return result;
  }
};

}  // namespace

OrderCertificate order_consistency(const IntMat& d, bool self_injective) {
  for (const auto& row : d) {
    bool nonzero = false;
    for (long x : row) {
      if (x < 0) throw InputError("candidate entries must be natural numbers");
      nonzero = nonzero || x != 0;
    }
    if (!nonzero) throw InputError("candidate has a zero row");
  }
  OrderSearch search(d, self_injective);
  return search.run();
}

bool recheck_certificate(const IntMat& d, bool self_injective, const OrderCertificate& cert) {
  if (!cert.consistent) return false;
  const int m = static_cast<int>(d.size());
  const int k = m ? static_cast<int>(d[0].size()) : 0;
  std::vector<int> pos(m, -1);
  if (static_cast<int>(cert.chain.size()) != m) return false;
  for (int i = 0; i < m; ++i) {
    if (cert.chain[i] < 0 || cert.chain[i] >= m || pos[cert.chain[i]] >= 0) return false;
    pos[cert.chain[i]] = i;
  }
  if (static_cast<int>(cert.assignment.size()) != k) return false;
  std::vector<bool> used(m, false);
  for (int j = 0; j < k; ++j) {
    int r = cert.assignment[j];
    if (r < 0 || r >= m || used[r] || d[r][j] != 1) return false;
    used[r] = true;
    // the matched row is the chain-minimum of the column support
    for (int i = 0; i < m; ++i)
      if (d[i][j] != 0 && pos[i] < pos[r]) return false;
  }
  auto unit_row = [&](int i) {
    int nz = 0;
    bool ones = true;
    for (int j = 0; j < k; ++j)
      if (d[i][j] != 0) {
        ++nz;
        ones = ones && d[i][j] == 1;
      }
    return nz == 1 && ones;
  };
  if (!unit_row(cert.chain.front())) return false;
  if (self_injective) {
    if (!unit_row(cert.chain.back())) return false;
    if (m > 1 && cert.chain.front() == cert.chain.back()) return false;
    // socle rows: chain-maximum of each column, unit entry, pairwise distinct
    if (static_cast<int>(cert.socle_rows.size()) != k) return false;
    std::vector<bool> taken(m, false);
    for (int j = 0; j < k; ++j) {
      int r = cert.socle_rows[j];
      if (r < 0 || r >= m || taken[r] || d[r][j] != 1) return false;
      taken[r] = true;
      for (int i = 0; i < m; ++i)
        if (d[i][j] != 0 && pos[i] > pos[r]) return false;
    }
  }
  return true;
}

Verdict necessary_conditions_report(const FDAlgebra& A, const GramProblem& problem,
                                    const CellDatum* datum, long trace_cap) {
  Verdict v;
  const IntMat& cartan = problem.cartan;

  long det = det_int(cartan);
  StageReport det_stage{"det", det > 0, "det C = " + std::to_string(det)};
  v.stages.push_back(det_stage);

  Ext1Sym ext = ext1_symmetric(A);
  StageReport ext_stage{"ext1", ext.ok,
                        ext.ok ? "Gabriel quiver arrow counts are symmetric"
                               : "arrow counts differ between " + A.vertex_names[ext.i] + " and " +
                                     A.vertex_names[ext.j]};
  v.stages.push_back(ext_stage);

  if (problem.self_injective) {
    WeakSymmetry ws = weakly_symmetric(A);
    v.stages.push_back(StageReport{"weak-symmetry", ws.ok, ws.ok ? "all projectives" : ws.reason});
  }

  bool refuted = false;
  for (const auto& s : v.stages) refuted = refuted || !s.passed;

  if (!refuted) {
    v.candidates = gram_factorizations(cartan, trace_cap);
    if (v.candidates.empty()) {
      v.stages.push_back(
          StageReport{"factorization", false, "no natural matrix D satisfies D^T D = C"});
      refuted = true;
    } else {
      v.stages.push_back(StageReport{"factorization", true,
                                     std::to_string(v.candidates.size()) + " candidate(s)"});
      bool any = false;
      for (const auto& cand : v.candidates) {
        v.certificates.push_back(order_consistency(cand, problem.self_injective));
        any = any || v.certificates.back().consistent;
      }
      v.stages.push_back(StageReport{"order", any,
                                     any ? "a candidate admits a compatible partial order"
                                         : "every candidate is refuted"});
      refuted = !any;
    }
  }

  v.verdict = refuted ? "NOT-CELLULAR" : "UNDECIDED";
  if (datum != nullptr) {
    v.datum = verify_cell_datum(*datum);
    if (v.datum->ok) v.verdict = "CELLULAR-VERIFIED";
  }
  return v;
}

}  // namespace cellar
