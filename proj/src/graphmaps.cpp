// The four built-in graph maps. Each graph is a planar spine of the punctured
// disk: one small loop around each marked point, the loops joined by a
// tree (or, for h, a forest plus a chain). Rotation lists are
// counter-clockwise; "~" marks a reversed edge.
//
// The images were pinned down by the published transition matrices and
// prong data, and checked to be efficient with the stated characteristic
// polynomials.

#include "brdyn/graphdyn.hpp"

#include "brdyn/families.hpp"

namespace brdyn {

namespace {

// Marked vertices 1..s carry a loop each; vertex map f(1) = s, f(k) = k-1
// for the braid families.
struct Spine {
  EmbeddedGraph g;
  int p = -1, q = -1;
  std::vector<int> vert;   // vert[k], k = 1..s
  std::vector<Dart> loop;  // loop[k]
  int s = 0;

  explicit Spine(int strands, bool with_q = false) : vert(strands + 1), loop(strands + 1), s(strands) {
    p = g.add_vertex("p");
    if (with_q) q = g.add_vertex("q");
    for (int k = 1; k <= s; ++k) vert[k] = g.add_vertex(std::to_string(k), true);
  }
  void add_loops() {
    for (int k = 1; k <= s; ++k) loop[k] = g.add_edge(vert[k], vert[k], EdgeClass::P, "l" + std::to_string(k));
  }
  void add_marked_sectors() {
    for (int k = 1; k <= s; ++k) g.add_sector("x" + std::to_string(k), vert[k], loop[k]);
  }
};

std::vector<int> vertex_map(const Spine& sp, const std::vector<int>& f) {
  std::vector<int> out(sp.g.vertex_count());
  out[sp.p] = sp.p;
  if (sp.q >= 0) out[sp.q] = sp.q;
  for (int k = 1; k <= sp.s; ++k) out[sp.vert[k]] = sp.vert[f[k]];
  return out;
}

std::vector<int> cyclic_shift(int s) {
  std::vector<int> f(s + 1);
  f[1] = s;
  for (int k = 2; k <= s; ++k) f[k] = k - 1;
  return f;
}

void set_loop_images(const Spine& sp, const std::vector<int>& f, std::vector<std::vector<Dart>>& img) {
  for (int k = 1; k <= sp.s; ++k) img[edge_of(sp.loop[k])] = {sp.loop[f[k]]};
}

void require(bool ok, const char* what) {
  if (!ok) throw BadParameters(what);
}

}  // namespace

GraphMap rm_graph_map(int m) {
  require(m >= 1, "rm_graph_map needs m >= 1");
  const int s = m + 1;
  Spine sp(s);
  std::vector<Dart> a(s + 1);
  for (int k = 1; k <= s; ++k) a[k] = sp.g.add_edge(sp.p, sp.vert[k], EdgeClass::Real, "a" + std::to_string(k));
  sp.add_loops();
  std::vector<Dart> rp;
  for (int k = s; k >= 1; --k) rp.push_back(a[k]);
  sp.g.set_rotation(sp.p, rp);
  for (int k = 1; k <= s; ++k) sp.g.set_rotation(sp.vert[k], {sp.loop[k], -sp.loop[k], -a[k]});
  sp.add_marked_sectors();
  sp.g.add_sector("inf", sp.p, a[1]);

  // Points 1 and m+1 both land on m+1: r_m is a map of the graph, not a
  // homeomorphism of the disk.
  std::vector<int> f(s + 1);
  f[1] = s;
  f[s] = s;
  for (int k = 2; k < s; ++k) f[k] = k - 1;

  std::vector<std::vector<Dart>> img(sp.g.edge_count());
  img[edge_of(a[1])] = {a[s]};
  for (int k = 2; k < s; ++k) img[edge_of(a[k])] = {a[k - 1]};
  img[edge_of(a[s])] = {a[m], sp.loop[m], -a[m], a[s]};
  set_loop_images(sp, f, img);
  return GraphMap(std::move(sp.g), vertex_map(sp, f), std::move(img));
}

GraphMap gmn_graph_map(int m, int n) {
  require(m >= 1 && n >= 1, "gmn_graph_map needs m, n >= 1");
  const int s = m + n + 1;
  Spine sp(s, true);
  std::vector<Dart> a(m + 2), b(s + 1);
  for (int k = 1; k <= m + 1; ++k) a[k] = sp.g.add_edge(sp.p, sp.vert[k], EdgeClass::Real, "a" + std::to_string(k));
  for (int k = m + 1; k <= s; ++k) b[k] = sp.g.add_edge(sp.q, sp.vert[k], EdgeClass::Real, "b" + std::to_string(k));
  sp.add_loops();
  const auto& l = sp.loop;

  std::vector<Dart> rp, rq;
  for (int k = m + 1; k >= 1; --k) rp.push_back(a[k]);
  for (int k = m + 1; k <= s; ++k) rq.push_back(b[k]);
  sp.g.set_rotation(sp.p, rp);
  sp.g.set_rotation(sp.q, rq);
  for (int k = 1; k <= m; ++k) sp.g.set_rotation(sp.vert[k], {l[k], -l[k], -a[k]});
  sp.g.set_rotation(sp.vert[m + 1], {l[m + 1], -l[m + 1], -a[m + 1], -b[m + 1]});
  for (int k = m + 2; k <= s; ++k) sp.g.set_rotation(sp.vert[k], {-l[k], -b[k], l[k]});
  sp.add_marked_sectors();
  sp.g.add_sector("inf", sp.p, a[1]);

  const auto f = cyclic_shift(s);
  std::vector<std::vector<Dart>> img(sp.g.edge_count());
  img[edge_of(a[1])] = {a[m + 1], -l[m + 1], -b[m + 1], b[s]};
  for (int k = 2; k <= m + 1; ++k) img[edge_of(a[k])] = {a[k - 1]};
  img[edge_of(b[m + 1])] = {b[s], l[s], -b[s], b[m + 1], l[m + 1], -a[m + 1], a[m]};
  for (int k = m + 2; k <= s; ++k) img[edge_of(b[k])] = {b[k - 1]};
  set_loop_images(sp, f, img);
  return GraphMap(std::move(sp.g), vertex_map(sp, f), std::move(img));
}

GraphMap gprime_graph_map(int m, int n) {
  require(m >= 1 && n >= 1, "gprime_graph_map needs m, n >= 1");
  const int s = m + n + 1;
  Spine sp(s);
  std::vector<Dart> a(m + 2), d(n + 1);
  for (int k = 1; k <= m + 1; ++k) a[k] = sp.g.add_edge(sp.p, sp.vert[k], EdgeClass::Real, "a" + std::to_string(k));
  const Dart c = sp.g.add_edge(sp.vert[m + 1], sp.vert[s], EdgeClass::Real, "c");
  for (int j = 1; j <= n; ++j)
    d[j] = sp.g.add_edge(sp.vert[m + j], sp.vert[m + j + 1], EdgeClass::Real, "d" + std::to_string(j));
  sp.add_loops();
  const auto& l = sp.loop;

  std::vector<Dart> rp;
  for (int k = m + 1; k >= 1; --k) rp.push_back(a[k]);
  sp.g.set_rotation(sp.p, rp);
  for (int k = 1; k <= m; ++k) sp.g.set_rotation(sp.vert[k], {l[k], -l[k], -a[k]});
  sp.g.set_rotation(sp.vert[m + 1], {d[1], c, l[m + 1], -l[m + 1], -a[m + 1]});
  for (int k = m + 2; k < s; ++k) {
    const int j = k - m - 1;
    sp.g.set_rotation(sp.vert[k], {d[j + 1], -d[j], l[k], -l[k]});
  }
  sp.g.set_rotation(sp.vert[s], {l[s], -l[s], -c, -d[n]});
  sp.add_marked_sectors();
  sp.g.add_sector("inf", sp.p, a[1]);

  const auto f = cyclic_shift(s);
  std::vector<std::vector<Dart>> img(sp.g.edge_count());
  img[edge_of(a[1])] = {a[m + 1], -l[m + 1], c};
  for (int k = 2; k <= m + 1; ++k) img[edge_of(a[k])] = {a[k - 1]};
  img[edge_of(c)] = {-a[m], a[m + 1], -l[m + 1], c, -l[s], -d[n]};
  img[edge_of(d[1])] = {-a[m], a[m + 1], -l[m + 1], c, -l[s], -c};
  for (int j = 2; j <= n; ++j) img[edge_of(d[j])] = {d[j - 1]};
  set_loop_images(sp, f, img);
  return GraphMap(std::move(sp.g), vertex_map(sp, f), std::move(img));
}

GraphMap hmn_graph_map(int m, int n) {
  require(m >= 1 && n >= m + 2, "hmn_graph_map needs m >= 1 and n >= m + 2");
  const int s = m + n + 1, len = n - m - 1;
  Spine sp(s);
  std::vector<Dart> P(m + 2), Q(m + 1), C(len + 1);
  for (int k = 1; k <= m + 1; ++k)
    P[k] = sp.g.add_edge(sp.p, sp.vert[m + k], EdgeClass::Real, "P" + std::to_string(k));
  for (int k = 1; k <= m; ++k)
    Q[k] = sp.g.add_edge(sp.vert[m + 1 + k], sp.vert[k], EdgeClass::Real, "Q" + std::to_string(k));
  C[0] = sp.g.add_edge(sp.vert[m + 1], sp.vert[2 * m + 2], EdgeClass::Real, "C0");
  for (int j = 1; j <= len; ++j)
    C[j] = sp.g.add_edge(sp.vert[2 * m + 1 + j], sp.vert[2 * m + 2 + j], EdgeClass::Real, "C" + std::to_string(j));
  sp.add_loops();
  const auto& l = sp.loop;

  std::vector<Dart> rp{P[1]};
  for (int k = m + 1; k >= 2; --k) rp.push_back(P[k]);
  sp.g.set_rotation(sp.p, rp);
  for (int k = 1; k <= m; ++k) sp.g.set_rotation(sp.vert[k], {-Q[k], l[k], -l[k]});
  sp.g.set_rotation(sp.vert[m + 1], {-P[1], C[0], l[m + 1], -l[m + 1]});
  for (int k = 1; k <= m; ++k)
    sp.g.set_rotation(sp.vert[m + 1 + k], {-P[k + 1], Q[k], l[m + 1 + k], -l[m + 1 + k]});
  for (int j = 1; j <= len; ++j)
    sp.g.set_rotation(sp.vert[2 * m + 1 + j], {C[j], -C[j - 1], l[2 * m + 1 + j], -l[2 * m + 1 + j]});
  sp.g.set_rotation(sp.vert[s], {l[s], -l[s], -C[len]});
  sp.add_marked_sectors();
  sp.g.add_sector("inf", sp.vert[s], -C[len]);

  const auto f = cyclic_shift(s);
  std::vector<std::vector<Dart>> img(sp.g.edge_count());
  for (int k = 2; k <= m + 1; ++k) img[edge_of(P[k])] = {P[k - 1]};
  img[edge_of(P[1])] = {P[m + 1], -l[2 * m + 1], Q[m]};
  for (int k = 2; k <= m; ++k) img[edge_of(Q[k])] = {Q[k - 1]};
  std::vector<Dart> chain{C[0]};
  for (int j = 1; j <= len; ++j) {
    chain.push_back(l[2 * m + 1 + j]);
    chain.push_back(C[j]);
  }
  img[edge_of(Q[1])] = chain;
  img[edge_of(C[0])] = {-Q[m]};
  img[edge_of(C[1])] = {-P[m + 1], P[1], -l[m + 1], C[0]};
  for (int j = 2; j <= len; ++j) img[edge_of(C[j])] = {C[j - 1]};
  set_loop_images(sp, f, img);
  return GraphMap(std::move(sp.g), vertex_map(sp, f), std::move(img));
}

// ---------------------------------------------------------------------------
// The v-basis of g' and the folding onto h

Basis gprime_basis(int m, int n) {
  require(m >= 1 && n >= 1, "gprime_basis needs m, n >= 1");
  // Edge order in gprime_graph_map: a1..a_{m+1}, c, d1..dn, loops.
  const int a_last = m, c = m + 1;
  Basis b;
  for (int k = 1; k <= m; ++k) b.push_back({"v" + std::to_string(k), {{k - 1, 1}}});
  b.push_back({"v" + std::to_string(m + 1), {{a_last, 1}, {c, 1}}});
  for (int j = 1; j <= n; ++j) b.push_back({"v" + std::to_string(m + 1 + j), {{c + j, 1}}});
  b.push_back({"v" + std::to_string(m + n + 2), {{a_last, 1}}});
  return b;
}

IntMatrix tprime_matrix(int m, int n) { return transition_matrix(gprime_graph_map(m, n), gprime_basis(m, n)).entries; }

IntMatrix sprime_matrix(int m, int n) {
  IntMatrix t = tprime_matrix(m, n);
  t(m + n, m) = -t(m + n, m);
  return t;
}

std::vector<long long> projection_kernel_vector(int m, int n) {
  std::vector<long long> w(m + n + 2, 0);
  for (int k = 0; k < m; ++k) w[k] = 2;
  w[m] = 1;
  for (int k = m + 1; k <= m + n; ++k) w[k] = -1;
  w[m + n + 1] = 1;
  return w;
}

namespace {

std::vector<long long> times(const IntMatrix& a, const std::vector<long long>& x) {
  std::vector<long long> y(a.rows(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) y[i] += a(i, j) * x[j];
  return y;
}

}  // namespace

bool verify_projection(int m, int n) {
  require(m >= 1 && n >= m + 2, "verify_projection needs m >= 1 and n >= m + 2");
  const int N = m + n + 2;
  const IntMatrix t = tprime_matrix(m, n), sm = sprime_matrix(m, n);
  // v(i) is the 1-based basis vector v_i.
  auto v = [&](std::initializer_list<std::pair<int, long long>> terms) {
    std::vector<long long> x(N, 0);
    for (auto [i, c] : terms) x[i - 1] += c;
    return x;
  };
  auto sum = [&](int lo, int hi, long long c) {
    std::vector<long long> x(N, 0);
    for (int i = lo; i <= hi; ++i) x[i - 1] += c;
    return x;
  };
  auto add = [](std::vector<long long> a, const std::vector<long long>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
  };

  bool ok = true;
  // Folding changes only the image of v_{m+1}, by -2 v_{m+n+1}.
  ok &= times(sm, v({{m + 1, 1}})) == add(times(t, v({{m + 1, 1}})), v({{m + n + 1, -2}}));
  ok &= times(sm, sum(1, m, 2)) == add(sum(1, m - 1, 2), v({{m + 1, 2}}));
  ok &= times(sm, v({{m + 1, 1}})) == v({{m, 2}, {m + 1, 1}, {m + n + 1, -1}});
  ok &= times(sm, sum(m + 2, m + n + 1, 1)) ==
        add(sum(m + 2, m + n, 1), v({{m, 1}, {m + 1, 2}, {m + n + 2, -1}}));
  ok &= times(sm, v({{m + n + 2, 1}})) == v({{m, 1}});
  const auto w = projection_kernel_vector(m, n);
  ok &= times(sm, w) == w;
  const IntPolynomial h = char_poly(transition_matrix(hmn_graph_map(m, n)).entries);
  ok &= char_poly(sm) == h * IntPolynomial{-1, 1};
  ok &= char_poly(sm) == sigma_charpoly(m, n);
  return ok;
}

}  // namespace brdyn
