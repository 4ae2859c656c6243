#include "imw/claims.hpp"

#include <algorithm>
#include <cassert>

#include "imw/alpha.hpp"
#include "imw/target.hpp"
#include "imw/verify.hpp"

namespace imw {

const char* to_string(ClaimVerdict::Status s) {
  switch (s) {
    case ClaimVerdict::Status::Holds: return "holds";
    case ClaimVerdict::Status::Violated: return "violated";
    case ClaimVerdict::Status::NotApplicable: return "not_applicable";
    case ClaimVerdict::Status::Skipped: return "skipped";
  }
  return "?";
}

Decomposition decompose(const Graph& g, int x, int y) {
  int n = g.vertex_count();
  if (x < 0 || x >= n || y < 0 || y >= n || x == y)
    throw std::invalid_argument("decompose: x, y must be distinct vertices");
  if (g.has_edge(x, y)) throw std::invalid_argument("decompose: x and y are adjacent");
  if (independence_number(g) != 2) throw std::invalid_argument("decompose: alpha(g) != 2");

  Decomposition d;
  d.x = x;
  d.y = y;
  std::uint64_t all = g.all_vertices_bits();
  std::uint64_t c_bits = g.neighbor_bits(x) & g.neighbor_bits(y);
  std::uint64_t x_bits = all & ~g.closed_neighbor_bits(y);
  std::uint64_t y_bits = all & ~g.closed_neighbor_bits(x);
  d.C = VertexSet::from_bits(n, c_bits);
  d.X = VertexSet::from_bits(n, x_bits);
  d.Y = VertexSet::from_bits(n, y_bits);

  // alpha = 2 forces these; a failure here would mean the alpha check lied.
  if ((c_bits | x_bits | y_bits) != all || (c_bits & x_bits) || (c_bits & y_bits) ||
      (x_bits & y_bits))
    throw std::logic_error("decompose: C, X, Y do not partition V");
  if (!is_clique(g, x_bits) || !is_clique(g, y_bits))
    throw std::logic_error("decompose: G[X] or G[Y] is not a clique");

  d.Xp.assign(static_cast<size_t>(n), VertexSet(n));
  d.Xpp.assign(static_cast<size_t>(n), VertexSet(n));
  d.Yp.assign(static_cast<size_t>(n), VertexSet(n));
  d.Ypp.assign(static_cast<size_t>(n), VertexSet(n));
  std::uint64_t xpc = x_bits, ypc = y_bits;
  for_each_bit(c_bits, [&](int a) {
    std::uint64_t xa = x_bits & g.neighbor_bits(a);
    std::uint64_t ya = y_bits & g.neighbor_bits(a);
    d.Xp[static_cast<size_t>(a)] = VertexSet::from_bits(n, xa);
    d.Xpp[static_cast<size_t>(a)] = VertexSet::from_bits(n, x_bits & ~xa);
    d.Yp[static_cast<size_t>(a)] = VertexSet::from_bits(n, ya);
    d.Ypp[static_cast<size_t>(a)] = VertexSet::from_bits(n, y_bits & ~ya);
    xpc &= xa;
    ypc &= ya;

    // alpha = 2 consequence: X''_a complete to Y''_a.
    std::uint64_t xpp = x_bits & ~xa, ypp = y_bits & ~ya;
    for_each_bit(xpp, [&](int w) {
      if ((g.neighbor_bits(w) & ypp) != ypp)
        throw std::logic_error("decompose: X''_a not complete to Y''_a");
    });
  });
  d.XpC = VertexSet::from_bits(n, xpc);
  d.XppC = VertexSet::from_bits(n, x_bits & ~xpc);
  d.YpC = VertexSet::from_bits(n, ypc);
  d.YppC = VertexSet::from_bits(n, y_bits & ~ypc);
  return d;
}

ClaimVerdict check_claim2(const Graph& g, const Decomposition& d) {
  (void)g;
  for (int a : d.C.to_vector()) {
    if (d.Xpp[static_cast<size_t>(a)].empty())
      return ClaimVerdict::violated("a=" + std::to_string(a) + " has empty X''_a");
    if (d.Ypp[static_cast<size_t>(a)].empty())
      return ClaimVerdict::violated("a=" + std::to_string(a) + " has empty Y''_a");
  }
  return ClaimVerdict::holds();
}

ExtensionWitness build_extension_witness(const Graph& g, int u, int v, const VertexSet& L) {
  int n = g.vertex_count();
  ExtensionWitness w;
  w.u = u;
  w.v = v;
  w.L = L;
  std::uint64_t a_bits = 0, b_bits = 0, c_bits = 0;
  for (int l : L.to_vector()) {
    bool eu = g.has_edge(u, l), ev = g.has_edge(v, l);
    if (eu && ev) b_bits |= 1ull << l;
    else if (eu) a_bits |= 1ull << l;
    else if (ev) c_bits |= 1ull << l;
    else
      throw std::logic_error("extension witness: L vertex adjacent to neither u nor v (alpha > 2?)");
  }
  w.A = VertexSet::from_bits(n, a_bits);
  w.B = VertexSet::from_bits(n, b_bits);
  w.Cl = VertexSet::from_bits(n, c_bits);
  std::uint64_t d_bits =
      (g.neighbor_bits(u) & g.neighbor_bits(v)) & ~L.bits() & ~(1ull << u) & ~(1ull << v);
  w.D = VertexSet::from_bits(n, d_bits);

  assert(w.D.size() >= w.Cl.size());  // |B|+|D| >= ell-1 and |B|+|Cl| <= ell-1
  auto cl = w.Cl.to_vector();
  auto dd = w.D.to_vector();
  for (size_t i = 0; i < cl.size(); ++i) w.f.emplace_back(cl[i], dd[i]);
  return w;
}

ImmersionCertificate claim1_extend(const Graph& g, int u, int v, int ell,
                                   const ImmersionCertificate& inner) {
  int n = g.vertex_count();
  if (u < 0 || u >= n || v < 0 || v >= n || u == v)
    throw PremiseViolation("u and v must be distinct vertices of g");
  if (g.has_edge(u, v)) throw PremiseViolation("uv must not be an edge");
  if (independence_number(g) != 2) throw PremiseViolation("alpha(g) = 2");
  if (ell < 1) throw PremiseViolation("ell >= 1");
  int common = common_neighbors(g, u, v).size();
  if (common < ell - 1) throw PremiseViolation("|N(u) cap N(v)| >= ell - 1");

  int k = static_cast<int>(inner.branch.size()) - ell;
  if (k < 1) throw PremiseViolation("inner certificate must target K_{ell,k} with k >= 1");

  VertexSet uv_set(n, {u, v});
  DeletionResult del = delete_vertices(g, uv_set);
  Graph inner_target = make_target(TargetSpec::complete_bipartite(ell, k));
  VerifyResult vr = verify_certificate(del.graph, inner_target, inner);
  if (!vr.ok)
    throw PremiseViolation("inner certificate invalid in g - {u,v}: " +
                           std::string(to_string(vr.fault)));

  // Translate the inner certificate back to g's labels.
  std::vector<int> new_to_old(static_cast<size_t>(del.graph.vertex_count()));
  for (int old = 0; old < n; ++old)
    if (del.old_to_new[static_cast<size_t>(old)] != -1)
      new_to_old[static_cast<size_t>(del.old_to_new[static_cast<size_t>(old)])] = old;

  ImmersionCertificate out;
  out.branch.reserve(inner.branch.size() + 1);
  for (int bv : inner.branch) out.branch.push_back(new_to_old[static_cast<size_t>(bv)]);
  for (const auto& p : inner.paths) {
    ImmersionCertificate::Path q;
    q.h_edge = p.h_edge;
    for (int wv : p.walk) q.walk.push_back(new_to_old[static_cast<size_t>(wv)]);
    out.paths.push_back(std::move(q));
  }

  std::vector<int> ell_side(out.branch.begin(), out.branch.begin() + ell);
  auto complete_to_L = [&](int w) {
    for (int l : ell_side)
      if (!g.has_edge(w, l)) return false;
    return true;
  };

  int joiner;
  int new_h_vertex = ell + k;
  if (complete_to_L(u) || complete_to_L(v)) {
    joiner = complete_to_L(u) ? u : v;
    for (int i = 0; i < ell; ++i)
      out.paths.push_back({{i, new_h_vertex}, {ell_side[static_cast<size_t>(i)], joiner}});
  } else {
    // Path case: u joins; Cl vertices are reached through f and v.
    joiner = u;
    VertexSet L(n);
    for (int l : ell_side) L.add(l);
    ExtensionWitness w = build_extension_witness(g, u, v, L);
    for (int i = 0; i < ell; ++i) {
      int l = ell_side[static_cast<size_t>(i)];
      if (w.A.contains(l) || w.B.contains(l)) {
        out.paths.push_back({{i, new_h_vertex}, {l, u}});
      } else {
        auto it = std::find_if(w.f.begin(), w.f.end(),
                               [&](const std::pair<int, int>& m) { return m.first == l; });
        assert(it != w.f.end());
        out.paths.push_back({{i, new_h_vertex}, {l, v, it->second, u}});
      }
    }
  }
  out.branch.push_back(joiner);

  Graph target = make_target(TargetSpec::complete_bipartite(ell, k + 1));
  VerifyResult check = verify_certificate(g, target, out);
  if (!check.ok)
    throw std::logic_error("claim1_extend produced an invalid certificate: " +
                           std::string(to_string(check.fault)) + " " + check.detail);
  return out;
}

ImmersionCertificate claim4_construct(const Graph& g, const Decomposition& d, int u, int v,
                                      int ell) {
  int n = g.vertex_count();
  if (!d.C.contains(u) || !d.C.contains(v) || u == v)
    throw PremiseViolation("u and v must be distinct vertices of C");
  if (g.has_edge(u, v)) throw PremiseViolation("uv must not be an edge");
  if (n % 2 == 0) throw PremiseViolation("n = 2m+1 must be odd");
  int m = (n - 1) / 2;
  if (ell < 1 || ell > m) throw PremiseViolation("1 <= ell <= m");

  const VertexSet& xpp_u = d.Xpp[static_cast<size_t>(u)];
  const VertexSet& xpp_v = d.Xpp[static_cast<size_t>(v)];
  const VertexSet& ypp_u = d.Ypp[static_cast<size_t>(u)];
  const VertexSet& ypp_v = d.Ypp[static_cast<size_t>(v)];

  if (!xpp_u.intersect(xpp_v).empty() || !ypp_u.intersect(ypp_v).empty())
    throw PremiseViolation("X''_u, X''_v (and Y''_u, Y''_v) must be disjoint");
  if (xpp_v.size() < ypp_v.size())
    throw PremiseViolation("|X''_v| >= |Y''_v| (swap the roles of x and y)");
  if (xpp_u.size() + xpp_v.size() <= ell) throw PremiseViolation("|X''_u u X''_v| > ell");
  if (xpp_u.size() > ell) throw PremiseViolation("|X''_u| <= ell");

  int x1_size = ell - xpp_u.size();
  int y1_size = std::max(m + 1 - d.X.size(), 0);
  if (ypp_u.size() < y1_size) throw PremiseViolation("|Y''_u| >= m+1-|X|");
  int w_count = ypp_v.size();
  if (w_count <= x1_size) throw PremiseViolation("|Y''_v| > |X1|");
  if (w_count <= y1_size) throw PremiseViolation("|Y''_v| > |Y1|");

  auto take_first = [](const VertexSet& s, int count) {
    auto all = s.to_vector();
    return std::vector<int>(all.begin(), all.begin() + count);
  };
  std::vector<int> x1 = take_first(xpp_v, x1_size);
  std::vector<int> y1 = take_first(ypp_u, y1_size);
  std::vector<int> zs = ypp_v.to_vector();

  std::uint64_t ell_bits = xpp_u.bits();
  for (int w : x1) ell_bits |= 1ull << w;
  std::vector<int> ell_side = VertexSet::from_bits(n, ell_bits).to_vector();

  std::vector<int> big;
  for (int w : d.X.to_vector())
    if (!(ell_bits >> w & 1)) big.push_back(w);
  big.insert(big.end(), y1.begin(), y1.end());
  int big_size = m + 1 - ell;
  assert(static_cast<int>(big.size()) >= big_size);
  big.resize(static_cast<size_t>(big_size));

  // Positions of X1 / Y1 members inside their ordered lists drive the
  // modular schedule.
  auto index_of = [](const std::vector<int>& vs, int w) {
    return static_cast<int>(std::find(vs.begin(), vs.end(), w) - vs.begin());
  };

  ImmersionCertificate out;
  out.branch.reserve(ell_side.size() + big.size());
  out.branch.insert(out.branch.end(), ell_side.begin(), ell_side.end());
  out.branch.insert(out.branch.end(), big.begin(), big.end());

  for (int i = 0; i < ell; ++i)
    for (int j = 0; j < big_size; ++j) {
      int a = ell_side[static_cast<size_t>(i)];
      int b = big[static_cast<size_t>(j)];
      bool a_in_x1 = std::find(x1.begin(), x1.end(), a) != x1.end();
      bool b_in_y1 = std::find(y1.begin(), y1.end(), b) != y1.end();
      if (a_in_x1 && b_in_y1) {
        int zi = (index_of(x1, a) + index_of(y1, b)) % w_count;
        out.paths.push_back({{i, ell + j}, {a, zs[static_cast<size_t>(zi)], b}});
      } else {
        out.paths.push_back({{i, ell + j}, {a, b}});
      }
    }

  Graph target = make_target(TargetSpec::complete_bipartite(ell, big_size));
  VerifyResult check = verify_certificate(g, target, out);
  if (!check.ok)
    throw std::logic_error("claim4_construct produced an invalid certificate: " +
                           std::string(to_string(check.fault)) + " " + check.detail);
  return out;
}

}  // namespace imw
