#include "tautfill/fill.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <random>
#include <stdexcept>

#include "tautfill/lp.hpp"

namespace tautfill {

namespace {

void subsets(const std::vector<VertexId>& verts, std::size_t k,
             std::vector<VertexTuple>& out) {
  VertexTuple cur;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = from; i < verts.size(); ++i) {
      if (verts.size() - i < k - cur.size()) break;
      cur.push_back(verts[i]);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
}

// LP encoding shared by qvol and zvol: one equality row per (n+1)-subset
// of vert(x), two columns (positive/negative part) per candidate.
struct FillLp {
  LpProblem base;
  std::vector<VertexTuple> faces;

  FillLp(const FillProblem& fp) {
    std::set<VertexId> vs = vert(fp.target);
    std::vector<VertexId> verts(vs.begin(), vs.end());
    subsets(verts, static_cast<std::size_t>(fp.target.dimension()) + 1,
            faces);
    std::map<VertexTuple, int> face_index;
    for (std::size_t i = 0; i < faces.size(); ++i)
      face_index[faces[i]] = static_cast<int>(i);

    const std::size_t rows = faces.size();
    const std::size_t cols = 2 * fp.candidates.size();
    base.a.assign(rows, std::vector<Rational>(cols, Rational(0)));
    base.b.assign(rows, Rational(0));
    base.c.assign(cols, Rational(1));
    for (const auto& [t, c] : fp.target.terms())
      base.b[static_cast<std::size_t>(face_index.at(t))] = c;

    VertexTuple f;
    for (std::size_t i = 0; i < fp.candidates.size(); ++i) {
      const VertexTuple& cand = fp.candidates[i];
      int sign = 1;
      for (std::size_t drop = 0; drop < cand.size(); ++drop) {
        f.clear();
        for (std::size_t j = 0; j < cand.size(); ++j)
          if (j != drop) f.push_back(cand[j]);
        auto r = static_cast<std::size_t>(face_index.at(f));
        base.a[r][2 * i] = sign;
        base.a[r][2 * i + 1] = -sign;
        sign = -sign;
      }
    }
  }
};

Chain extract_filling(const FillProblem& fp, const std::vector<Rational>& x) {
  Chain m(fp.target.dimension() + 1);
  for (std::size_t i = 0; i < fp.candidates.size(); ++i) {
    Rational y = x[2 * i] - x[2 * i + 1];
    if (y != 0)
      m.add_term(std::span<const VertexId>(fp.candidates[i]), y);
  }
  return m;
}

void check_result(const FillProblem& fp, const FillResult& r) {
  if (boundary(r.filling) != fp.target)
    throw std::logic_error("fill: result does not bound the target");
  if (l1_norm(r.filling) != r.value)
    throw std::logic_error("fill: objective differs from filling norm");
}

void require_fillable(const Chain& x) {
  if (x.dimension() < 1)
    throw std::invalid_argument("cannot fill chains of dimension 0");
  if (!boundary(x).is_zero())
    throw std::invalid_argument("chain is not closed");
}

}  // namespace

FillProblem FillProblem::from_cycle(const Chain& x) {
  require_fillable(x);
  FillProblem fp{x, {}};
  std::set<VertexId> vs = vert(x);
  std::vector<VertexId> verts(vs.begin(), vs.end());
  subsets(verts, static_cast<std::size_t>(x.dimension()) + 2, fp.candidates);
  return fp;
}

ConingBound coning_bound(const Chain& x) {
  if (x.is_zero()) throw std::invalid_argument("cannot cone the zero chain");
  require_fillable(x);
  ConingBound cb;
  Rational best = -1;
  for (VertexId v : vert(x)) {
    Rational d = deg(v, x);
    if (d > best) {
      best = d;
      cb.apex = v;
    }
  }
  cb.filling = cone(cb.apex, x);
  cb.value = l1_norm(x) - best;
  if (l1_norm(cb.filling) != cb.value)
    throw std::logic_error("coning bound norm identity failed");
  return cb;
}

FillResult qvol(const Chain& x) {
  require_fillable(x);
  FillResult res;
  res.mode = FillMode::rational;
  if (x.is_zero()) {
    res.filling = Chain(x.dimension() + 1);
    res.value = 0;
    res.bound_used = 0;
    res.optimal = true;
    return res;
  }
  FillProblem fp = FillProblem::from_cycle(x);
  FillLp lp(fp);
  LpSolution sol = solve_lp(lp.base);
  if (sol.status != LpStatus::optimal)
    throw std::logic_error(
        "fill: LP reported no optimum for a fillable cycle");
  res.filling = extract_filling(fp, sol.x);
  res.value = sol.value;
  res.bound_used = coning_bound(x).value;
  res.optimal = true;
  res.lp_pivots = sol.pivots;
  check_result(fp, res);
  return res;
}

namespace {

struct BranchBound {
  std::size_t var;
  bool upper;
  BigInt value;
};

struct Node {
  Rational bound;
  long id;
  std::vector<BranchBound> bounds;
};

struct NodeWorse {
  bool operator()(const Node& a, const Node& b) const {
    if (a.bound != b.bound) return a.bound > b.bound;
    return a.id > b.id;
  }
};

LpProblem with_bounds(const LpProblem& base,
                      const std::vector<BranchBound>& bounds) {
  LpProblem p = base;
  const std::size_t n0 = base.cols();
  const std::size_t extra = bounds.size();
  for (auto& row : p.a) row.resize(n0 + extra, Rational(0));
  p.c.resize(n0 + extra, Rational(0));
  for (std::size_t k = 0; k < extra; ++k) {
    std::vector<Rational> row(n0 + extra, Rational(0));
    row[2 * bounds[k].var] = 1;
    row[2 * bounds[k].var + 1] = -1;
    row[n0 + k] = bounds[k].upper ? 1 : -1;
    p.a.push_back(std::move(row));
    p.b.push_back(Rational(bounds[k].value));
  }
  return p;
}

}  // namespace

FillResult zvol(const Chain& x) {
  require_fillable(x);
  if (!x.is_integral())
    throw std::invalid_argument("zvol needs an integral cycle");
  FillResult res;
  res.mode = FillMode::integral;
  if (x.is_zero()) {
    res.filling = Chain(x.dimension() + 1);
    res.value = 0;
    res.bound_used = 0;
    res.optimal = true;
    return res;
  }

  FillProblem fp = FillProblem::from_cycle(x);
  FillLp lp(fp);
  ConingBound cone_start = coning_bound(x);
  Chain incumbent = cone_start.filling;
  Rational incumbent_value = cone_start.value;

  std::priority_queue<Node, std::vector<Node>, NodeWorse> queue;
  queue.push({Rational(0), 0, {}});
  long next_id = 1;
  long nodes = 0, pivots = 0;

  while (!queue.empty()) {
    Node node = queue.top();
    queue.pop();
    if (Rational(rat_ceil(node.bound)) >= incumbent_value) continue;

    LpSolution sol = solve_lp(with_bounds(lp.base, node.bounds));
    ++nodes;
    pivots += sol.pivots;
    if (sol.status == LpStatus::infeasible) continue;
    if (sol.status != LpStatus::optimal)
      throw std::logic_error("fill: node LP unbounded");
    // Any integral filling under these bounds has integer norm >= the LP
    // optimum, so the ceiling prunes exactly.
    if (Rational(rat_ceil(sol.value)) >= incumbent_value) continue;

    std::size_t branch_var = fp.candidates.size();
    Rational branch_frac = 0;
    std::vector<Rational> y(fp.candidates.size());
    for (std::size_t i = 0; i < fp.candidates.size(); ++i) {
      y[i] = sol.x[2 * i] - sol.x[2 * i + 1];
      Rational frac = y[i] - Rational(rat_floor(y[i]));
      if (frac == 0) continue;
      Rational dist = std::min(frac, Rational(1 - frac));
      if (dist > branch_frac) {
        branch_frac = dist;
        branch_var = i;
      }
    }

    if (branch_var == fp.candidates.size()) {
      // Integral solution strictly better than the incumbent.
      Chain m(fp.target.dimension() + 1);
      for (std::size_t i = 0; i < fp.candidates.size(); ++i)
        if (y[i] != 0)
          m.add_term(std::span<const VertexId>(fp.candidates[i]), y[i]);
      incumbent = std::move(m);
      incumbent_value = sol.value;
      continue;
    }

    Node down{sol.value, next_id++, node.bounds};
    down.bounds.push_back({branch_var, true, rat_floor(y[branch_var])});
    Node up{sol.value, next_id++, node.bounds};
    up.bounds.push_back({branch_var, false, rat_ceil(y[branch_var])});
    queue.push(std::move(down));
    queue.push(std::move(up));
  }

  res.filling = std::move(incumbent);
  res.value = incumbent_value;
  res.bound_used = cone_start.value;
  res.optimal = true;
  res.lp_pivots = pivots;
  res.bb_nodes = nodes;
  check_result(fp, res);
  return res;
}

Rational qvol_value(const Chain& x) { return qvol(x).value; }
Rational zvol_value(const Chain& x) { return zvol(x).value; }

bool is_taut(const Chain& m) {
  if (!m.is_integral())
    throw std::invalid_argument("is_taut needs an integral chain");
  if (m.is_zero()) return true;
  return l1_norm(m) == zvol(boundary(m)).value;
}

bool is_taut_rational(const Chain& m) {
  if (m.is_zero()) return true;
  return l1_norm(m) == qvol(boundary(m)).value;
}

ConeCheckReport verify_no_complete_cone(const Chain& m) {
  if (m.dimension() < 2)
    throw std::invalid_argument(
        "complete-cone check needs chains of dimension >= 2");
  ConeCheckReport rep;
  for (VertexId x : vert(m)) {
    // The terms at x form cone(x, nbhd(x, m)); that is a complete cone
    // within m exactly when the deleted neighbourhood is closed.
    if (boundary(nbhd(x, m)).is_zero()) {
      rep.ok = false;
      rep.complete_cone_vertices.push_back(x);
    }
  }
  return rep;
}

InternalVertexReport verify_no_internal_vertex(const Chain& m) {
  InternalVertexReport rep;
  if (m.is_zero()) return rep;
  std::set<VertexId> bd = vert(boundary(m));
  for (VertexId x : vert(m))
    if (!bd.contains(x)) {
      rep.ok = false;
      rep.internal_vertices.push_back(x);
    }
  return rep;
}

SubtautReport verify_subtaut(const Chain& m, int trials, unsigned seed) {
  if (!m.is_integral())
    throw std::invalid_argument("subtaut check needs an integral chain");
  if (m.dimension() < 2)
    throw std::invalid_argument("subtaut check needs dimension >= 2");
  SubtautReport rep;
  std::mt19937 rng(seed);
  for (int trial = 0; trial < trials; ++trial) {
    Chain u(m.dimension());
    for (const auto& [t, c] : m.terms()) {
      if (!c.get_num().fits_slong_p())
        throw std::invalid_argument("subtaut: coefficient too large");
      long mag = c.get_num().get_si();
      if (mag < 0) mag = -mag;
      long take = static_cast<long>(rng() % static_cast<unsigned long>(mag + 1));
      if (take > 0)
        u.add_term(std::span<const VertexId>(t),
                   c > 0 ? Rational(take) : Rational(-take));
    }
    ++rep.trials;
    Rational opt = u.is_zero() ? Rational(0) : zvol(boundary(u)).value;
    if (l1_norm(u) != opt) {
      ++rep.failures;
      rep.details.push_back({u, l1_norm(u), opt});
    }
  }
  return rep;
}

}  // namespace tautfill
