#include "tautfill/oracle.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace tautfill {

namespace {

struct Search {
  int coeff_bound;
  long limit;                             // norm cap for the current pass
  bool collect;
  long best = -1;
  std::vector<Chain>* out = nullptr;

  int n_cand;
  int tuple_len;
  std::vector<VertexTuple> cand;          // lex-sorted candidate simplices
  std::vector<std::vector<int>> faces;    // candidate -> face indices
  std::vector<std::vector<int>> signs;    // boundary sign per face slot
  std::vector<long> residual;             // per face: still-needed coefficient
  std::vector<int> last_touch;            // per face: last candidate index
  std::vector<int> remaining;             // per face: candidates not yet fixed
  std::vector<long> coeff;                // current assignment
  int dim;

  void dfs(int i, long norm) {
    if (i == n_cand) {
      // last_touch pruning has already zeroed every residual.
      if (collect) {
        if (norm == best) emit();
      } else if (best < 0 || norm < best) {
        best = norm;
      }
      return;
    }
    const auto& fs = faces[i];
    const auto& sg = signs[i];
    for (int f : fs) --remaining[f];

    for (int a = 0; a <= 2 * coeff_bound; ++a) {
      // 0, +1, -1, +2, -2, ...
      long k = (a + 1) / 2;
      if (a % 2 == 0) k = -k;

      long nn = norm + (k < 0 ? -k : k);
      if (nn > limit) continue;
      if (!collect && best >= 0 && nn >= best) continue;

      bool ok = true;
      if (k != 0)
        for (std::size_t s = 0; s < fs.size(); ++s)
          residual[fs[s]] -= k * sg[s];
      for (std::size_t s = 0; s < fs.size(); ++s) {
        long r = residual[fs[s]];
        if (r < 0) r = -r;
        if (last_touch[fs[s]] == i ? r != 0
                                   : r > static_cast<long>(remaining[fs[s]]) *
                                             coeff_bound) {
          ok = false;
          break;
        }
      }
      if (ok) {
        coeff[i] = k;
        dfs(i + 1, nn);
        coeff[i] = 0;
      }
      if (k != 0)
        for (std::size_t s = 0; s < fs.size(); ++s)
          residual[fs[s]] += k * sg[s];
    }

    for (int f : fs) ++remaining[f];
  }

  void emit() {
    Chain m(dim + 1);
    for (int i = 0; i < n_cand; ++i)
      if (coeff[i] != 0)
        m.add_term(std::span<const VertexId>(cand[i]), Rational(coeff[i]));
    out->push_back(std::move(m));
  }
};

void subsets(const std::vector<VertexId>& verts, int k,
             std::vector<VertexTuple>& out) {
  VertexTuple cur;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    if (static_cast<int>(cur.size()) == k) {
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

long to_long(const Rational& q) {
  if (!is_integer(q) || !q.get_num().fits_slong_p())
    throw std::invalid_argument("oracle: coefficient out of range");
  return q.get_num().get_si();
}

}  // namespace

OracleResult oracle_zvol(const Chain& x, int coeff_bound, bool collect_all) {
  if (coeff_bound < 1)
    throw std::invalid_argument("oracle: coeff_bound must be >= 1");
  if (!x.is_integral())
    throw std::invalid_argument("oracle: chain must be integral");
  if (x.dimension() < 1)
    throw std::invalid_argument("oracle: cannot fill chains of dimension 0");
  if (!boundary(x).is_zero())
    throw std::invalid_argument("oracle: chain is not closed");

  std::set<VertexId> vs = vert(x);
  if (static_cast<int>(vs.size()) > kOracleVertexCap)
    throw std::invalid_argument("oracle: vertex cap exceeded (" +
                                std::to_string(kOracleVertexCap) + ")");

  OracleResult res;
  if (x.is_zero()) {
    res.found = true;
    res.value = 0;
    res.search_bound = 0;
    if (collect_all) res.optimal_fillings.push_back(Chain(x.dimension() + 1));
    return res;
  }

  Search s;
  s.dim = x.dimension();
  s.coeff_bound = coeff_bound;
  s.tuple_len = x.dimension() + 2;

  std::vector<VertexId> verts(vs.begin(), vs.end());
  subsets(verts, s.tuple_len, s.cand);
  s.n_cand = static_cast<int>(s.cand.size());

  std::vector<VertexTuple> face_tuples;
  subsets(verts, s.tuple_len - 1, face_tuples);
  std::map<VertexTuple, int> face_index;
  for (std::size_t i = 0; i < face_tuples.size(); ++i)
    face_index[face_tuples[i]] = static_cast<int>(i);

  s.residual.assign(face_tuples.size(), 0);
  for (const auto& [t, c] : x.terms()) s.residual[face_index.at(t)] = to_long(c);

  s.faces.resize(s.n_cand);
  s.signs.resize(s.n_cand);
  s.last_touch.assign(face_tuples.size(), -1);
  s.remaining.assign(face_tuples.size(), 0);
  for (int i = 0; i < s.n_cand; ++i) {
    VertexTuple f;
    int sign = 1;
    for (int drop = 0; drop < s.tuple_len; ++drop) {
      f.clear();
      for (int j = 0; j < s.tuple_len; ++j)
        if (j != drop) f.push_back(s.cand[i][j]);
      int fi = face_index.at(f);
      s.faces[i].push_back(fi);
      s.signs[i].push_back(sign);
      s.last_touch[fi] = i;
      ++s.remaining[fi];
      sign = -sign;
    }
  }

  // The cone over x from a maximal-degree vertex has this norm, so the
  // search space within the cap always contains a filling when
  // coeff_bound covers the coefficients of x itself.
  Rational bound = l1_norm(x) - maxdeg(x);
  s.limit = to_long(bound);
  s.coeff.assign(s.n_cand, 0);

  s.collect = false;
  s.dfs(0, 0);
  res.search_bound = s.limit;
  if (s.best < 0) return res;  // nothing within the coefficient bound

  res.found = true;
  res.value = s.best;
  if (collect_all) {
    s.collect = true;
    s.limit = s.best;
    s.out = &res.optimal_fillings;
    s.dfs(0, 0);
  }
  return res;
}

std::vector<Chain> enumerate_taut(const Chain& x, int coeff_bound) {
  OracleResult r = oracle_zvol(x, coeff_bound, true);
  if (!r.found)
    throw std::runtime_error(
        "oracle: no filling within bound; raise coeff_bound");
  return std::move(r.optimal_fillings);
}

}  // namespace tautfill
