#include "recon/catalog.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "recon/error.hpp"

namespace recon {

std::string FamilySpec::to_string() const {
  std::string name;
  switch (kind) {
    case Kind::Path: name = "path"; break;
    case Kind::Complete: name = "complete"; break;
    case Kind::Star: name = "star"; break;
    case Kind::SubdividedStar: name = "substar"; break;
    case Kind::Bistar: name = "bistar"; break;
    case Kind::TriangleTail: name = "tail"; break;
  }
  name += ':';
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i > 0) name += ',';
    name += std::to_string(params[i]);
  }
  return name;
}

FamilySpec parse_family(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) fail(ErrorCode::InvalidSpec, "family spec needs ':' in '" + text + "'");
  std::string name = text.substr(0, colon);
  std::vector<int> params;
  std::stringstream ss(text.substr(colon + 1));
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      std::size_t pos = 0;
      int v = std::stoi(part, &pos);
      if (pos != part.size()) throw std::invalid_argument(part);
      params.push_back(v);
    } catch (const std::exception&) {
      fail(ErrorCode::InvalidSpec, "bad parameter '" + part + "' in '" + text + "'");
    }
  }
  auto need = [&](std::size_t count) {
    if (params.size() != count)
      fail(ErrorCode::InvalidSpec, "'" + name + "' takes " + std::to_string(count) + " parameter(s)");
  };
  if (name == "path") { need(1); return FamilySpec::path(params[0]); }
  if (name == "complete") { need(1); return FamilySpec::complete(params[0]); }
  if (name == "star") { need(1); return FamilySpec::star(params[0]); }
  if (name == "substar") {
    if (params.empty()) fail(ErrorCode::InvalidSpec, "substar needs branch lengths");
    return FamilySpec::subdivided_star(params);
  }
  if (name == "bistar") { need(2); return FamilySpec::bistar(params[0], params[1]); }
  if (name == "tail") { need(1); return FamilySpec::triangle_tail(params[0]); }
  if (name == "s11m") { need(1); return FamilySpec::s11m(params[0]); }
  fail(ErrorCode::InvalidSpec, "unknown family '" + name + "'");
}

Graph generate(const FamilySpec& spec) {
  const auto& p = spec.params;
  auto bad = [&](const std::string& why) { fail(ErrorCode::InvalidSpec, spec.to_string() + ": " + why); };
  std::vector<Edge> edges;
  switch (spec.kind) {
    case FamilySpec::Kind::Path: {
      if (p.size() != 1 || p[0] < 1) bad("path needs n >= 1");
      for (int i = 0; i + 1 < p[0]; ++i) edges.emplace_back(i, i + 1);
      return build_graph(p[0], edges);
    }
    case FamilySpec::Kind::Complete: {
      if (p.size() != 1 || p[0] < 1) bad("complete graph needs n >= 1");
      for (int i = 0; i < p[0]; ++i)
        for (int j = i + 1; j < p[0]; ++j) edges.emplace_back(i, j);
      return build_graph(p[0], edges);
    }
    case FamilySpec::Kind::Star: {
      if (p.size() != 1 || p[0] < 1) bad("star needs at least one leaf");
      for (int i = 1; i <= p[0]; ++i) edges.emplace_back(0, i);
      return build_graph(p[0] + 1, edges);
    }
    case FamilySpec::Kind::SubdividedStar: {
      if (p.empty()) bad("subdivided star needs a branch");
      int next = 1;
      for (int len : p) {
        if (len < 1) bad("branch lengths must be >= 1");
        int prev = 0;
        for (int j = 0; j < len; ++j) {
          edges.emplace_back(prev, next);
          prev = next++;
        }
      }
      return build_graph(next, edges);
    }
    case FamilySpec::Kind::Bistar: {
      if (p.size() != 2 || p[0] < 1 || p[1] < 1) bad("bistar needs m, n >= 1");
      edges.emplace_back(0, 1);
      int next = 2;
      for (int i = 0; i < p[0]; ++i) edges.emplace_back(0, next++);
      for (int i = 0; i < p[1]; ++i) edges.emplace_back(1, next++);
      return build_graph(next, edges);
    }
    case FamilySpec::Kind::TriangleTail: {
      if (p.size() != 1 || p[0] < 1) bad("triangle tail needs m >= 1");
      edges = {{0, 1}, {0, 2}, {1, 2}};
      for (int i = 2; i < p[0] + 2; ++i) edges.emplace_back(i, i + 1);
      return build_graph(p[0] + 3, edges);
    }
  }
  fail(ErrorCode::InvalidSpec, "unknown family kind");
}

Graph gem() { return build_graph(5, {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {1, 4}, {2, 4}, {3, 4}}); }

Graph cycle(int n) {
  if (n < 3) fail(ErrorCode::InvalidSpec, "cycle needs n >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return build_graph(n, edges);
}

// ---------------------------------------------------------------------------
// Canonical form

namespace {

std::vector<int> refine_colors(const Graph& g) {
  int n = g.order();
  std::vector<int> color(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) color[static_cast<std::size_t>(v)] = g.degree(v);
  std::size_t classes = 0;
  while (true) {
    std::vector<std::vector<int>> sig(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      auto& s = sig[static_cast<std::size_t>(v)];
      s.push_back(color[static_cast<std::size_t>(v)]);
      std::vector<int> around;
      for (VertexMask m = g.neighbors(v); m != 0; m &= m - 1)
        around.push_back(color[static_cast<std::size_t>(std::countr_zero(m))]);
      std::sort(around.begin(), around.end());
      s.insert(s.end(), around.begin(), around.end());
    }
    std::vector<std::vector<int>> distinct = sig;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (int v = 0; v < n; ++v)
      color[static_cast<std::size_t>(v)] = static_cast<int>(
          std::lower_bound(distinct.begin(), distinct.end(), sig[static_cast<std::size_t>(v)]) -
          distinct.begin());
    if (distinct.size() == classes) break;
    classes = distinct.size();
  }
  return color;
}

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : g_(g) {
    auto color = refine_colors(g);
    int n = g.order();
    for (int v = 0; v < n; ++v) {
      auto c = static_cast<std::size_t>(color[static_cast<std::size_t>(v)]);
      if (cells_.size() <= c) cells_.resize(c + 1);
      cells_[c].push_back(v);
    }
    for (std::size_t c = 0; c < cells_.size(); ++c)
      for (std::size_t i = 0; i < cells_[c].size(); ++i) slot_cell_.push_back(c);
    order_.reserve(static_cast<std::size_t>(n));
  }

  void run() { extend(false); }

  const std::string& best() const { return best_; }
  const std::vector<int>& best_order() const { return best_order_; }

 private:
  void extend(bool below) {
    std::size_t pos = order_.size();
    if (pos == slot_cell_.size()) {
      if (best_order_.empty() || current_ < best_) {
        best_ = current_;
        best_order_ = order_;
      }
      return;
    }
    for (int v : cells_[slot_cell_[pos]]) {
      if ((used_ & bit(v)) != 0) continue;
      std::size_t mark = current_.size();
      for (int u : order_) current_ += g_.adjacent(u, v) ? '1' : '0';
      bool now_below = below;
      bool prune = false;
      if (!below && !best_order_.empty()) {
        int cmp = current_.compare(mark, std::string::npos, best_, mark, current_.size() - mark);
        if (cmp > 0) prune = true;
        if (cmp < 0) now_below = true;
      }
      if (!prune) {
        order_.push_back(v);
        used_ |= bit(v);
        extend(now_below);
        used_ &= ~bit(v);
        order_.pop_back();
      }
      current_.resize(mark);
    }
  }

  const Graph& g_;
  std::vector<std::vector<int>> cells_;
  std::vector<std::size_t> slot_cell_;
  std::vector<int> order_;
  VertexMask used_ = 0;
  std::string current_;
  std::string best_;
  std::vector<int> best_order_;
};

}  // namespace

std::string canonical_key(const Graph& g) {
  CanonicalSearch search(g);
  search.run();
  return std::to_string(g.order()) + ":" + search.best();
}

Graph canonical_form(const Graph& g) {
  CanonicalSearch search(g);
  search.run();
  const auto& order = search.best_order();
  std::vector<int> position(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) position[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
  std::vector<Edge> edges;
  for (auto [a, b] : g.edges())
    edges.emplace_back(position[static_cast<std::size_t>(a)], position[static_cast<std::size_t>(b)]);
  return build_graph(g.order(), edges);
}

bool graphs_isomorphic(const Graph& a, const Graph& b) {
  return a.order() == b.order() && a.size() == b.size() && canonical_key(a) == canonical_key(b);
}

namespace {

std::vector<Graph> sorted_classes(std::map<std::string, Graph>& by_key) {
  std::vector<Graph> out;
  for (auto& [key, g] : by_key) out.push_back(canonical_form(g));
  std::sort(out.begin(), out.end(), [](const Graph& a, const Graph& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.edges() < b.edges();
  });
  return out;
}

Graph decode_pruefer(int n, const std::vector<int>& seq) {
  std::vector<int> degree(static_cast<std::size_t>(n), 1);
  for (int x : seq) ++degree[static_cast<std::size_t>(x)];
  std::vector<Edge> edges;
  for (int x : seq) {
    for (int leaf = 0; leaf < n; ++leaf) {
      if (degree[static_cast<std::size_t>(leaf)] == 1) {
        edges.emplace_back(leaf, x);
        --degree[static_cast<std::size_t>(leaf)];
        --degree[static_cast<std::size_t>(x)];
        break;
      }
    }
  }
  int a = -1;
  for (int v = 0; v < n; ++v) {
    if (degree[static_cast<std::size_t>(v)] == 1) {
      if (a < 0) {
        a = v;
      } else {
        edges.emplace_back(a, v);
        break;
      }
    }
  }
  return build_graph(n, edges);
}

}  // namespace

std::vector<Graph> enumerate_trees(int n) {
  if (n < 1) fail(ErrorCode::OrderOutOfRange, "tree order must be >= 1");
  if (n > 8) fail(ErrorCode::OrderTooLarge, "tree atlas limited to order 8");
  if (n == 1) return {build_graph(1, {})};
  if (n == 2) return {build_graph(2, {{0, 1}})};
  std::map<std::string, Graph> by_key;
  std::vector<int> seq(static_cast<std::size_t>(n - 2), 0);
  while (true) {
    Graph t = decode_pruefer(n, seq);
    by_key.try_emplace(canonical_key(t), t);
    std::size_t i = 0;
    while (i < seq.size() && ++seq[i] == n) seq[i++] = 0;
    if (i == seq.size()) break;
  }
  return sorted_classes(by_key);
}

std::vector<Graph> enumerate_connected_graphs(int n) {
  if (n < 1) fail(ErrorCode::OrderOutOfRange, "graph order must be >= 1");
  if (n > 6) fail(ErrorCode::OrderTooLarge, "graph atlas limited to order 6");
  std::vector<Edge> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  std::map<std::string, Graph> by_key;
  std::uint64_t limit = std::uint64_t{1} << pairs.size();
  for (std::uint64_t subset = 0; subset < limit; ++subset) {
    std::vector<VertexMask> adj(static_cast<std::size_t>(n), 0);
    std::vector<Edge> edges;
    for (std::size_t e = 0; e < pairs.size(); ++e) {
      if ((subset >> e & 1) == 0) continue;
      auto [a, b] = pairs[e];
      adj[static_cast<std::size_t>(a)] |= bit(b);
      adj[static_cast<std::size_t>(b)] |= bit(a);
      edges.push_back(pairs[e]);
    }
    VertexMask seen = 1, frontier = 1;
    while (frontier != 0) {
      VertexMask next = 0;
      for (VertexMask f = frontier; f != 0; f &= f - 1) next |= adj[static_cast<std::size_t>(std::countr_zero(f))];
      frontier = next & ~seen;
      seen |= next;
    }
    if (seen != bit(n) - 1) continue;
    Graph g = build_graph(n, edges);
    by_key.try_emplace(canonical_key(g), g);
  }
  return sorted_classes(by_key);
}

// ---------------------------------------------------------------------------
// Shapes

std::vector<int> StarShape::lengths() const {
  std::vector<int> out;
  for (const auto& b : branches) out.push_back(static_cast<int>(b.size()));
  return out;
}

std::optional<StarShape> subdivided_star_shape(const Graph& g) {
  if (!g.is_tree()) return std::nullopt;
  int center = -1;
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) >= 3) {
      if (center >= 0) return std::nullopt;
      center = v;
    }
  }
  if (center < 0) return std::nullopt;
  StarShape shape;
  shape.center = center;
  for (VertexMask m = g.neighbors(center); m != 0; m &= m - 1) {
    std::vector<int> branch;
    int prev = center;
    int cur = std::countr_zero(m);
    while (true) {
      branch.push_back(cur);
      VertexMask rest = g.neighbors(cur) & ~bit(prev);
      if (rest == 0) break;
      prev = cur;
      cur = std::countr_zero(rest);
    }
    shape.branches.push_back(std::move(branch));
  }
  return shape;
}

std::optional<BistarShape> bistar_shape(const Graph& g) {
  if (!g.is_tree() || g.order() < 4) return std::nullopt;
  std::vector<int> inner;
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) >= 2) inner.push_back(v);
  if (inner.size() != 2 || !g.adjacent(inner[0], inner[1])) return std::nullopt;
  BistarShape shape;
  shape.u = inner[0];
  shape.v = inner[1];
  for (int w = 0; w < g.order(); ++w) {
    if (w == shape.u || w == shape.v) continue;
    (g.adjacent(w, shape.u) ? shape.leaves_u : shape.leaves_v).push_back(w);
  }
  return shape;
}

std::optional<TriangleTailShape> triangle_tail_shape(const Graph& g) {
  int n = g.order();
  if (n < 4 || static_cast<int>(g.size()) != n) return std::nullopt;
  int v1 = -1;
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) == 3) {
      if (v1 >= 0) return std::nullopt;
      v1 = v;
    } else if (g.degree(v) > 3) {
      return std::nullopt;
    }
  }
  if (v1 < 0) return std::nullopt;
  std::vector<int> twins;
  int tail = -1;
  for (VertexMask m = g.neighbors(v1); m != 0; m &= m - 1) {
    int w = std::countr_zero(m);
    if ((g.neighbors(w) & g.neighbors(v1)) != 0)
      twins.push_back(w);
    else
      tail = w;
  }
  if (twins.size() != 2 || tail < 0 || !g.adjacent(twins[0], twins[1])) return std::nullopt;
  if (g.degree(twins[0]) != 2 || g.degree(twins[1]) != 2) return std::nullopt;
  TriangleTailShape shape;
  shape.u1 = twins[0];
  shape.u2 = twins[1];
  shape.path.push_back(v1);
  int prev = v1, cur = tail;
  while (true) {
    shape.path.push_back(cur);
    VertexMask rest = g.neighbors(cur) & ~bit(prev);
    if (rest == 0) break;
    if (popcount(rest) != 1) return std::nullopt;
    prev = cur;
    cur = std::countr_zero(rest);
  }
  if (static_cast<int>(shape.path.size()) + 2 != n) return std::nullopt;
  return shape;
}

std::string identify(const Graph& g) {
  int n = g.order();
  auto s = [](int x) { return std::to_string(x); };
  if (g.is_tree() && g.max_degree() <= 2) return "P_" + s(n);
  if (n >= 3 && static_cast<int>(g.size()) == n * (n - 1) / 2) return "K_" + s(n);
  bool all_two = true;
  for (int v = 0; v < n; ++v) all_two = all_two && g.degree(v) == 2;
  if (all_two) return "C_" + s(n);
  if (auto shape = subdivided_star_shape(g)) {
    auto lens = shape->lengths();
    std::sort(lens.begin(), lens.end());
    if (lens.back() == 1) return "S_" + s(static_cast<int>(lens.size()));
    std::string out = "S_{";
    for (std::size_t i = 0; i < lens.size(); ++i) out += (i ? "," : "") + s(lens[i]);
    return out + "}";
  }
  if (auto shape = bistar_shape(g)) {
    auto a = static_cast<int>(shape->leaves_u.size());
    auto b = static_cast<int>(shape->leaves_v.size());
    return "B_{" + s(std::min(a, b)) + "," + s(std::max(a, b)) + "}";
  }
  if (auto shape = triangle_tail_shape(g)) return "T_" + s(static_cast<int>(shape->path.size()) - 1);
  if (n == 5 && g.size() == 7 && graphs_isomorphic(g, gem())) return "gem";
  return "-";
}

}  // namespace recon
