#include "tautfill/adu.hpp"

#include <algorithm>
#include <iterator>
#include <sstream>

#include "tautfill/fill.hpp"

namespace tautfill {

Chain AduWitness::sum() const { return x + y; }

std::pair<VertexId, VertexId> AduWitness::default_basepoints() const {
  if (c.empty())
    throw std::logic_error("witness has no shared vertices");
  VertexId p = *c.begin();
  VertexId q = c.size() >= 2 ? *std::next(c.begin()) : p;
  return {p, q};
}

AduWitness AduWitness::make(const Chain& x, const Chain& y) {
  return make(x, vert(x), y, vert(y));
}

AduWitness AduWitness::make(const Chain& x, std::set<VertexId> a,
                            const Chain& y, std::set<VertexId> b) {
  if (x.dimension() != y.dimension())
    throw std::invalid_argument("witness cycles have different dimensions");
  if (x.dimension() < 1)
    throw std::invalid_argument("witness cycles must have dimension >= 1");
  if (!boundary(x).is_zero() || !boundary(y).is_zero())
    throw std::invalid_argument("witness chains must be cycles");
  auto contains_all = [](const std::set<VertexId>& big,
                         const std::set<VertexId>& small) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
  };
  if (!contains_all(a, vert(x)) || !contains_all(b, vert(y)))
    throw std::invalid_argument("vertex set does not contain its cycle");

  AduWitness w;
  w.x = x;
  w.y = y;
  w.a = std::move(a);
  w.b = std::move(b);
  std::set_intersection(w.a.begin(), w.a.end(), w.b.begin(), w.b.end(),
                        std::inserter(w.c, w.c.begin()));
  if (static_cast<int>(w.c.size()) > x.dimension() + 1)
    throw std::invalid_argument(
        "overlap has " + std::to_string(w.c.size()) +
        " vertices, almost disjoint allows " +
        std::to_string(x.dimension() + 1));
  if (w.c.empty()) {
    VertexId z = 0;
    if (!w.a.empty()) z = std::max(z, *w.a.rbegin() + 1);
    if (!w.b.empty()) z = std::max(z, *w.b.rbegin() + 1);
    w.a.insert(z);
    w.b.insert(z);
    w.c.insert(z);
  }
  return w;
}

AduWitness witness_from_sum(const ConnectedSum& sum) {
  return AduWitness::make(sum.side_x, sum.side_y);
}

AduWitness disjoint_witness(const SphereTriangulation& s1,
                            const SphereTriangulation& s2) {
  VertexId offset = s1.vertices.back() + 1;
  std::map<VertexId, VertexId> to;
  for (VertexId v : s2.vertices) to[v] = v + offset;
  SphereTriangulation moved = relabel(s2, to);
  return AduWitness::make(orientation_cycle(s1), orientation_cycle(moved));
}

std::string TetType::label() const {
  return std::string(static_cast<std::size_t>(c), 'C') +
         std::string(static_cast<std::size_t>(x), 'X') +
         std::string(static_cast<std::size_t>(y), 'Y');
}

TetType classify_simplex(const AduWitness& w,
                         std::span<const VertexId> verts) {
  TetType t;
  for (VertexId v : verts) {
    if (w.c.contains(v))
      ++t.c;
    else if (w.a.contains(v))
      ++t.x;
    else if (w.b.contains(v))
      ++t.y;
    else
      throw std::invalid_argument("vertex " + std::to_string(v) +
                                  " outside A union B");
  }
  return t;
}

std::map<std::string, int> type_histogram(const Chain& m,
                                          const AduWitness& w) {
  std::map<std::string, int> hist;
  for (const auto& [verts, coeff] : m.terms())
    ++hist[classify_simplex(w, verts).label()];
  return hist;
}

std::pair<Chain, Chain> g_split(const Chain& m, const AduWitness& w,
                                VertexId p, VertexId q) {
  if (!w.c.contains(p) || !w.c.contains(q))
    throw std::invalid_argument("p or q outside C");
  if (w.c.size() >= 2 && p == q)
    throw std::invalid_argument(
        "basepoints must be distinct when C has two or more vertices");
  return {project(m, w.a, p), project(m, w.b, q)};
}

SplitPieces split_taut(const Chain& m, const AduWitness& w) {
  if (boundary(m) != w.sum())
    throw SplitError("chain does not fill X + Y");

  SplitPieces out{Chain(m.dimension()), Chain(m.dimension())};
  for (const auto& [verts, coeff] : m.terms()) {
    TetType t = classify_simplex(w, verts);
    if (t.hybrid()) {
      std::ostringstream msg;
      msg << "hybrid tet found in allegedly taut filling: [";
      for (std::size_t i = 0; i < verts.size(); ++i)
        msg << (i ? "," : "") << verts[i];
      msg << "] has type " << t.label();
      throw SplitError(msg.str());
    }
    if (t.x == 0 && t.y == 0)
      throw std::logic_error(
          "simplex inside C, impossible under the overlap bound");
    if (t.y == 0)
      out.m_x.add_term(verts, coeff);
    else
      out.m_y.add_term(verts, coeff);
  }

  if (boundary(out.m_x) != w.x)
    throw SplitError("split piece on A does not fill X");
  if (boundary(out.m_y) != w.y)
    throw SplitError("split piece on B does not fill Y");
  return out;
}

AdditivityReport additivity_check(const AduWitness& w) {
  AdditivityReport r;
  r.vol_x = zvol_value(w.x);
  r.vol_y = zvol_value(w.y);
  FillResult sum = zvol(w.sum());
  r.vol_sum = sum.value;
  r.m = sum.filling;
  r.additive = r.vol_sum == r.vol_x + r.vol_y;

  try {
    SplitPieces p = split_taut(r.m, w);
    r.m_x = p.m_x;
    r.m_y = p.m_y;
    r.norm_x = l1_norm(p.m_x);
    r.norm_y = l1_norm(p.m_y);
    // |m| = |m_x| + |m_y| >= zvol(X) + zvol(Y); with additivity every
    // comparison is an equality.
    r.split_ok = r.norm_x + r.norm_y == l1_norm(r.m) &&
                 r.norm_x >= r.vol_x && r.norm_y >= r.vol_y &&
                 (!r.additive ||
                  (r.norm_x == r.vol_x && r.norm_y == r.vol_y));
    if (!r.split_ok) r.note = "split norms inconsistent with volumes";
  } catch (const SplitError& e) {
    r.split_ok = false;
    r.note = e.what();
  }
  return r;
}

std::string AdditivityReport::describe() const {
  std::ostringstream out;
  out << "zvol(X) = " << rat_str(vol_x) << ", zvol(Y) = " << rat_str(vol_y)
      << ", zvol(X+Y) = " << rat_str(vol_sum)
      << (additive ? " (additive)" : " (NOT additive)");
  if (split_ok)
    out << "; split norms " << rat_str(norm_x) << " + " << rat_str(norm_y);
  if (!note.empty()) out << "; " << note;
  return out.str();
}

QAdditivityReport qvol_additivity_check(const AduWitness& w) {
  QAdditivityReport r;
  r.qvol_x = qvol_value(w.x);
  r.qvol_y = qvol_value(w.y);
  Chain target = w.sum();
  FillResult sum = qvol(target);
  r.qvol_sum = sum.value;
  r.additive = r.qvol_sum == r.qvol_x + r.qvol_y;

  BigInt q = 1;
  for (const auto& [verts, coeff] : sum.filling.terms())
    mpz_lcm(q.get_mpz_t(), q.get_mpz_t(), coeff.get_den().get_mpz_t());
  for (const auto& [verts, coeff] : target.terms())
    mpz_lcm(q.get_mpz_t(), q.get_mpz_t(), coeff.get_den().get_mpz_t());
  r.q = q;

  AduWitness scaled = w;
  scaled.x *= Rational(q);
  scaled.y *= Rational(q);
  FillResult cleared = zvol(scaled.sum());
  r.zvol_scaled = cleared.value;
  r.clearing_ok = r.zvol_scaled == Rational(q) * r.qvol_sum;

  try {
    SplitPieces p = split_taut(cleared.filling, scaled);
    Rational inv = Rational(1) / Rational(q);
    r.m_x = inv * p.m_x;
    r.m_y = inv * p.m_y;
    r.split_ok = boundary(r.m_x) == w.x && boundary(r.m_y) == w.y &&
                 l1_norm(r.m_x) + l1_norm(r.m_y) == r.qvol_sum &&
                 l1_norm(r.m_x) >= r.qvol_x && l1_norm(r.m_y) >= r.qvol_y;
    if (!r.split_ok) r.note = "scaled split inconsistent with volumes";
  } catch (const SplitError& e) {
    r.split_ok = false;
    r.note = e.what();
  }
  return r;
}

std::string QAdditivityReport::describe() const {
  std::ostringstream out;
  out << "qvol(X) = " << rat_str(qvol_x) << ", qvol(Y) = " << rat_str(qvol_y)
      << ", qvol(X+Y) = " << rat_str(qvol_sum)
      << (additive ? " (additive)" : " (NOT additive)") << "; q = "
      << q.get_str() << ", zvol(q(X+Y)) = " << rat_str(zvol_scaled)
      << (clearing_ok ? "" : " (clearing FAILED)");
  if (!note.empty()) out << "; " << note;
  return out.str();
}

}  // namespace tautfill
