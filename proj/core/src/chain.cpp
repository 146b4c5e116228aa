#include "tautfill/chain.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tautfill {

std::optional<OrientedSimplex> OrientedSimplex::from_vertices(
    std::span<const VertexId> verts) {
  OrientedSimplex s;
  s.vertices.assign(verts.begin(), verts.end());
  // Insertion sort, counting inversions for the permutation parity.
  int inversions = 0;
  for (std::size_t i = 1; i < s.vertices.size(); ++i) {
    VertexId v = s.vertices[i];
    std::size_t j = i;
    while (j > 0 && s.vertices[j - 1] > v) {
      s.vertices[j] = s.vertices[j - 1];
      --j;
      ++inversions;
    }
    s.vertices[j] = v;
  }
  for (std::size_t i = 1; i < s.vertices.size(); ++i)
    if (s.vertices[i] == s.vertices[i - 1]) return std::nullopt;
  s.sign = (inversions % 2 == 0) ? 1 : -1;
  return s;
}

Chain::Chain(int dimension) : dim_(dimension) {
  if (dimension < 0) throw std::invalid_argument("negative chain dimension");
}

Rational Chain::coefficient(const VertexTuple& sorted) const {
  auto it = terms_.find(sorted);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Chain::add_term(std::span<const VertexId> verts, const Rational& coeff) {
  if (static_cast<int>(verts.size()) != dim_ + 1)
    throw std::invalid_argument("term dimension mismatch");
  if (coeff == 0) return;
  auto s = OrientedSimplex::from_vertices(verts);
  if (!s) return;  // degenerate
  auto [it, inserted] = terms_.try_emplace(std::move(s->vertices), 0);
  it->second += s->sign > 0 ? coeff : Rational(-coeff);
  if (it->second == 0) terms_.erase(it);
}

void Chain::add_term(std::initializer_list<VertexId> verts,
                     const Rational& coeff) {
  add_term(std::span<const VertexId>(verts.begin(), verts.size()), coeff);
}

bool Chain::is_integral() const {
  for (const auto& [t, c] : terms_)
    if (!is_integer(c)) return false;
  return true;
}

Chain& Chain::operator+=(const Chain& rhs) {
  if (dim_ != rhs.dim_) throw std::invalid_argument("chain dimension mismatch");
  for (const auto& [t, c] : rhs.terms_) {
    auto [it, inserted] = terms_.try_emplace(t, 0);
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
  return *this;
}

Chain& Chain::operator-=(const Chain& rhs) {
  if (dim_ != rhs.dim_) throw std::invalid_argument("chain dimension mismatch");
  for (const auto& [t, c] : rhs.terms_) {
    auto [it, inserted] = terms_.try_emplace(t, 0);
    it->second -= c;
    if (it->second == 0) terms_.erase(it);
  }
  return *this;
}

Chain& Chain::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [t, c] : terms_) c *= s;
  return *this;
}

Chain operator-(Chain c) {
  for (auto& [t, coeff] : c.terms_) coeff = -coeff;
  return c;
}

std::string Chain::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [t, c] : terms_) {
    Rational a = rat_abs(c);
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (a != 1) out << rat_str(a) << "*";
    out << "[";
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (i) out << ",";
      out << t[i];
    }
    out << "]";
  }
  return out.str();
}

Chain boundary(const Chain& c) {
  if (c.dimension() == 0)
    throw std::domain_error("no boundary defined below dimension 0");
  Chain out(c.dimension() - 1);
  VertexTuple face;
  for (const auto& [t, coeff] : c.terms()) {
    int sign = 1;
    for (std::size_t i = 0; i < t.size(); ++i) {
      face.clear();
      for (std::size_t j = 0; j < t.size(); ++j)
        if (j != i) face.push_back(t[j]);
      out.add_term(face, sign > 0 ? coeff : Rational(-coeff));
      sign = -sign;
    }
  }
  return out;
}

Rational l1_norm(const Chain& c) {
  Rational n = 0;
  for (const auto& [t, coeff] : c.terms()) n += rat_abs(coeff);
  return n;
}

std::set<VertexId> vert(const Chain& c) {
  std::set<VertexId> vs;
  for (const auto& [t, coeff] : c.terms()) vs.insert(t.begin(), t.end());
  return vs;
}

Chain nbhd(VertexId x, const Chain& c) {
  if (c.dimension() == 0) {
    // Deleting x from a vertex leaves the empty simplex, which does not
    // exist here; the neighbourhood in dimension 0 is empty.
    return Chain(0);
  }
  Chain out(c.dimension() - 1);
  VertexTuple rest;
  for (const auto& [t, coeff] : c.terms()) {
    auto it = std::find(t.begin(), t.end(), x);
    if (it == t.end()) continue;
    auto pos = static_cast<std::size_t>(it - t.begin());
    rest.clear();
    for (std::size_t j = 0; j < t.size(); ++j)
      if (j != pos) rest.push_back(t[j]);
    // Sign of deleting position pos, matching the boundary convention.
    bool odd = pos % 2 == 1;
    out.add_term(rest, odd ? Rational(-coeff) : coeff);
  }
  return out;
}

Rational deg(VertexId x, const Chain& c) {
  if (c.dimension() == 0) {
    VertexTuple key{x};
    return rat_abs(c.coefficient(key));
  }
  return l1_norm(nbhd(x, c));
}

Rational maxdeg(const Chain& c) {
  Rational best = 0;
  for (VertexId x : vert(c)) {
    Rational d = deg(x, c);
    if (d > best) best = d;
  }
  return best;
}

Chain cone(VertexId x, const Chain& c) {
  Chain out(c.dimension() + 1);
  VertexTuple ext;
  for (const auto& [t, coeff] : c.terms()) {
    if (std::find(t.begin(), t.end(), x) != t.end()) continue;
    ext.clear();
    ext.push_back(x);
    ext.insert(ext.end(), t.begin(), t.end());
    out.add_term(ext, coeff);
  }
  return out;
}

Chain project(const Chain& c, const std::set<VertexId>& A, VertexId p) {
  if (!A.contains(p))
    throw std::invalid_argument("projection basepoint outside target set");
  Chain out(c.dimension());
  VertexTuple image;
  for (const auto& [t, coeff] : c.terms()) {
    image.clear();
    for (VertexId v : t) image.push_back(A.contains(v) ? v : p);
    out.add_term(image, coeff);
  }
  return out;
}

}  // namespace tautfill
