#include "steincalc/seifert.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace steincalc {

SeifertData::SeifertData(int base_genus_, long e0_, std::vector<SeifertLeg> legs_)
    : base_genus(base_genus_), e0(e0_), legs(std::move(legs_)) {
  if (base_genus < 0) throw Error("SeifertData: negative base genus");
  for (const auto& l : legs)
    if (l.alpha < 2 || l.beta <= 0 || l.beta >= l.alpha)
      throw Error("SeifertData: leg (" + std::to_string(l.alpha) + "," + std::to_string(l.beta) +
                  ") is not normalized");
  std::sort(legs.begin(), legs.end());
}

std::string to_string(const SeifertData& s) {
  std::ostringstream os;
  os << "(g=" << s.base_genus << "; e0=" << s.e0 << "; [";
  for (std::size_t i = 0; i < s.legs.size(); ++i)
    os << (i ? "," : "") << '(' << s.legs[i].alpha << ',' << s.legs[i].beta << ')';
  os << "]; e=" << euler_number(s).get_str() << ')';
  return os.str();
}

Rational euler_number(const SeifertData& s) {
  Rational e(s.e0);
  for (const auto& l : s.legs) e += Rational(l.beta, l.alpha);
  e.canonicalize();
  return e;
}

bool is_singularity_link(const SeifertData& s) { return euler_number(s) < 0; }

ContactFlags canonical_contact_flag(const SeifertData& s) {
  const bool neg = is_singularity_link(s);
  return {neg, neg};
}

SeifertLeg leg_from_continued_fraction(const std::vector<long>& a) {
  if (a.empty()) throw Error("continued fraction: empty chain");
  for (long x : a)
    if (x < 2) throw Error("continued fraction: entries must be >= 2");
  // p/q = a_j - 1/(p'/q') = (a_j p' - q') / p', evaluated from the far end.
  long p = a.back(), q = 1;
  for (auto it = a.rbegin() + 1; it != a.rend(); ++it) {
    const long np = *it * p - q;
    q = p;
    p = np;
  }
  return {p, q};
}

SeifertData star_to_seifert(const PlumbingGraph& g, std::optional<int> center) {
  if (g.empty()) throw Error("star_to_seifert: empty graph");
  int c = 0;
  if (center) {
    c = *center;
    if (!g.contains(c)) throw Error("star_to_seifert: centre " + std::to_string(c) + " not in graph");
  } else {
    std::vector<int> branch, positive_genus;
    for (const auto& v : g.vertices()) {
      if (g.degree(v.id) >= 3) branch.push_back(v.id);
      if (v.genus > 0) positive_genus.push_back(v.id);
    }
    if (branch.size() > 1) throw Error("star_to_seifert: graph is not star-shaped");
    if (branch.size() == 1) c = branch.front();
    else if (positive_genus.size() == 1) c = positive_genus.front();
    else c = g.vertices().front().id;
  }

  std::vector<SeifertLeg> legs;
  for (int first : g.neighbors(c)) {
    std::vector<long> chain;
    int prev = c, cur = first;
    for (;;) {
      const auto& v = g.vertex(cur);
      if (v.genus != 0) throw Error("star_to_seifert: leg vertex " + std::to_string(cur) + " has positive genus");
      if (v.weight > -2)
        throw Error("star_to_seifert: leg weight " + std::to_string(v.weight) + " at vertex " +
                    std::to_string(cur) + " exceeds -2; normalize the graph first");
      chain.push_back(-v.weight);
      auto nb = g.neighbors(cur);
      std::erase(nb, prev);
      if (nb.empty()) break;
      if (nb.size() > 1) throw Error("star_to_seifert: graph is not star-shaped");
      prev = cur;
      cur = nb.front();
    }
    legs.push_back(leg_from_continued_fraction(chain));
  }
  const auto& cv = g.vertex(c);
  return SeifertData(cv.genus, cv.weight, std::move(legs));
}

void validate(const OpenBookDesc& ob) {
  if (ob.page_genus < 0) throw Error("open book: negative page genus");
  if (ob.powers.empty()) throw Error("open book: at least one boundary component required");
  for (long p : ob.powers)
    if (p < 1) throw Error("open book: twist powers must be positive");
}

SeifertData openbook_manifold(const OpenBookDesc& ob) {
  validate(ob);
  std::vector<SeifertLeg> legs;
  for (long p : ob.powers)
    if (p >= 2) legs.push_back({p, p - 1});
  return SeifertData(ob.page_genus, -static_cast<long>(ob.powers.size()), std::move(legs));
}

IntMatrix openbook_variation(const OpenBookDesc& ob) {
  validate(ob);
  const std::size_t h = static_cast<std::size_t>(ob.page_genus);
  const std::size_t r = ob.powers.size();
  const std::size_t n = 2 * h + r - 1;

  // Absolute basis: a_1, b_1, ..., a_h, b_h, d_1, ..., d_{r-1} where d_i is
  // the i-th boundary curve; d_r = -(d_1 + ... + d_{r-1}).
  std::vector<std::vector<long>> boundary(r, std::vector<long>(n, 0));
  for (std::size_t i = 0; i + 1 < r; ++i) {
    boundary[i][2 * h + i] = 1;
    boundary[r - 1][2 * h + i] = -1;
  }
  // Relative basis: the 2h closed curves, then arcs e_j from boundary r to
  // boundary j. An arc leaves boundary r and enters boundary j, so it meets
  // d_j with sign +1 and d_r with sign -1; closed curves miss every d_i.
  auto pairing = [&](std::size_t rel, std::size_t i) -> long {
    if (rel < 2 * h) return 0;
    const std::size_t j = rel - 2 * h;
    if (i == j) return 1;
    if (i == r - 1) return -1;
    return 0;
  };

  // Boundary twists have disjoint supports, so their variations add:
  // var(x) = sum_i p_i <x, d_i> d_i.
  IntMatrix var(n, n);
  for (std::size_t col = 0; col < n; ++col)
    for (std::size_t i = 0; i < r; ++i) {
      const long k = ob.powers[i] * pairing(col, i);
      if (k == 0) continue;
      for (std::size_t row = 0; row < n; ++row) var(row, col) += k * boundary[i][row];
    }
  return var;
}

BoundaryHomology openbook_homology(const OpenBookDesc& ob) {
  const IntMatrix var = openbook_variation(ob);
  BoundaryHomology h;
  const SmithForm snf = smith_normal_form(var);
  h.rank = static_cast<int>(var.rows() - snf.diagonal.size());
  for (const auto& d : snf.diagonal) {
    if (d == 0) ++h.rank;
    else if (d > 1) h.torsion.push_back(d);
  }
  std::sort(h.torsion.begin(), h.torsion.end());
  return h;
}

}  // namespace steincalc
