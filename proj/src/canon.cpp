#include "flagcolor/canon.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>

namespace flagcolor {

std::string CanonicalKey::hex() const {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes_.size() * 2);
  for (unsigned char c : bytes_) {
    out.push_back(digits[c >> 4]);
    out.push_back(digits[c & 15]);
  }
  return out;
}

std::string certificate(const ColoredGraph& g, std::span<const Vertex> labeling) {
  const std::size_t n = g.vertex_count();
  const bool wide = n > 255;
  std::vector<Vertex> position(n);
  for (std::size_t i = 0; i < n; ++i) position[labeling[i]] = static_cast<Vertex>(i);

  std::string out;
  out.reserve(4 + n + 2 * g.edge_count() + n);
  auto put = [&](std::uint32_t x) {
    out.push_back(static_cast<char>(x & 0xff));
    if (wide) out.push_back(static_cast<char>((x >> 8) & 0xff));
  };
  for (int shift = 0; shift < 32; shift += 8) out.push_back(static_cast<char>((n >> shift) & 0xff));
  for (std::size_t i = 0; i < n; ++i) out.push_back(static_cast<char>(g.color(labeling[i])));
  std::vector<Vertex> later;
  for (std::size_t i = 0; i < n; ++i) {
    later.clear();
    for (Vertex w : g.neighbors(labeling[i])) {
      if (position[w] > i) later.push_back(position[w]);
    }
    std::sort(later.begin(), later.end());
    put(static_cast<std::uint32_t>(later.size()));
    for (Vertex j : later) put(j);
  }
  return out;
}

ColoredGraph relabel(const ColoredGraph& g, std::span<const Vertex> labeling) {
  const std::size_t n = g.vertex_count();
  std::vector<Vertex> position(n);
  for (std::size_t i = 0; i < n; ++i) position[labeling[i]] = static_cast<Vertex>(i);
  std::vector<ColorId> colors(n);
  std::vector<Edge> edges;
  edges.reserve(g.edge_count());
  for (std::size_t i = 0; i < n; ++i) {
    colors[i] = g.color(labeling[i]);
    for (Vertex w : g.neighbors(labeling[i])) {
      if (position[w] > i) edges.push_back({static_cast<Vertex>(i), position[w]});
    }
  }
  return ColoredGraph(std::move(colors), edges);
}

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), Vertex{0}); }

  Vertex find(Vertex x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  // Keeps the smaller root so that roots are orbit minima.
  void unite(Vertex a, Vertex b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b) parent_[b] = a;
    else parent_[a] = b;
  }

 private:
  std::vector<Vertex> parent_;
};

using Permutation = std::vector<Vertex>;

// Ordered partition of the vertex set. Cells are identified by their first
// position in `lab`; `end` is only meaningful at cell starts.
struct Partition {
  std::vector<Vertex> lab;
  std::vector<std::uint32_t> pos;
  std::vector<std::uint32_t> cell;
  std::vector<std::uint32_t> end;
  std::size_t cells = 0;

  bool discrete() const { return cells == lab.size(); }
};

bool twins(const ColoredGraph& g, Vertex a, Vertex b) {
  // N(a) \ {b} == N(b) \ {a}
  auto na = g.neighbors(a);
  auto nb = g.neighbors(b);
  auto ia = na.begin(), ib = nb.begin();
  while (true) {
    while (ia != na.end() && *ia == b) ++ia;
    while (ib != nb.end() && *ib == a) ++ib;
    if (ia == na.end() || ib == nb.end()) return ia == na.end() && ib == nb.end();
    if (*ia != *ib) return false;
    ++ia;
    ++ib;
  }
}

class Refiner {
 public:
  explicit Refiner(const ColoredGraph& g)
      : g_(g), count_(g.vertex_count(), 0), mark_(g.vertex_count(), 0), in_queue_(g.vertex_count(), 0) {}

  Partition initial() {
    const std::size_t n = g_.vertex_count();
    Partition p;
    p.lab.resize(n);
    std::iota(p.lab.begin(), p.lab.end(), Vertex{0});
    std::stable_sort(p.lab.begin(), p.lab.end(),
                     [&](Vertex a, Vertex b) { return g_.color(a) < g_.color(b); });
    p.pos.resize(n);
    p.cell.resize(n);
    p.end.assign(n, 0);
    queue_.clear();
    std::size_t start = 0;
    for (std::size_t i = 0; i < n; ++i) {
      p.pos[p.lab[i]] = static_cast<std::uint32_t>(i);
      if (i > 0 && g_.color(p.lab[i]) != g_.color(p.lab[i - 1])) {
        close_cell(p, start, i);
        start = i;
      }
    }
    if (n > 0) close_cell(p, start, n);
    refine(p);
    return p;
  }

  void individualize(Partition& p, Vertex v) {
    const std::uint32_t s = p.cell[v];
    const std::uint32_t e = p.end[s];
    if (e - s == 1) return;
    const std::uint32_t at = p.pos[v];
    const Vertex other = p.lab[s];
    std::swap(p.lab[s], p.lab[at]);
    p.pos[other] = at;
    p.pos[v] = s;
    p.end[s] = s + 1;
    p.end[s + 1] = e;
    for (std::uint32_t i = s + 1; i < e; ++i) p.cell[p.lab[i]] = s + 1;
    ++p.cells;
    queue_.clear();
    queue_.push_back(s);
    in_queue_[s] = 1;
    refine(p);
  }

 private:
  void close_cell(Partition& p, std::size_t start, std::size_t stop) {
    p.end[start] = static_cast<std::uint32_t>(stop);
    for (std::size_t j = start; j < stop; ++j) p.cell[p.lab[j]] = static_cast<std::uint32_t>(start);
    ++p.cells;
    queue_.push_back(static_cast<std::uint32_t>(start));
    in_queue_[start] = 1;
  }

  // Equitable refinement driven by the splitter queue. Every choice below
  // depends only on cell positions and counts, never on vertex names.
  void refine(Partition& p) {
    std::size_t head = 0;
    while (head < queue_.size() && !p.discrete()) {
      const std::uint32_t s = queue_[head++];
      in_queue_[s] = 0;
      const std::uint32_t e = p.end[s];
      for (std::uint32_t i = s; i < e; ++i) {
        for (Vertex u : g_.neighbors(p.lab[i])) {
          if (count_[u]++ == 0) touched_.push_back(u);
        }
      }
      for (Vertex u : touched_) {
        const std::uint32_t c = p.cell[u];
        if (!mark_[c]) {
          mark_[c] = 1;
          touched_cells_.push_back(c);
        }
      }
      std::sort(touched_cells_.begin(), touched_cells_.end());
      for (std::uint32_t c : touched_cells_) {
        mark_[c] = 0;
        split(p, c);
      }
      for (Vertex u : touched_) count_[u] = 0;
      touched_.clear();
      touched_cells_.clear();
    }
    for (std::size_t i = head; i < queue_.size(); ++i) in_queue_[queue_[i]] = 0;
    queue_.clear();
  }

  void split(Partition& p, std::uint32_t c) {
    const std::uint32_t ce = p.end[c];
    if (ce - c == 1) return;
    const std::uint32_t first = count_[p.lab[c]];
    bool uniform = true;
    for (std::uint32_t i = c + 1; i < ce; ++i) {
      if (count_[p.lab[i]] != first) {
        uniform = false;
        break;
      }
    }
    if (uniform) return;
    std::sort(p.lab.begin() + c, p.lab.begin() + ce,
              [&](Vertex a, Vertex b) { return count_[a] < count_[b]; });
    for (std::uint32_t i = c; i < ce; ++i) p.pos[p.lab[i]] = i;

    const bool was_queued = in_queue_[c] != 0;
    std::uint32_t largest = c, largest_size = 0;
    std::uint32_t piece = c;
    pieces_.clear();
    for (std::uint32_t i = c + 1; i <= ce; ++i) {
      if (i == ce || count_[p.lab[i]] != count_[p.lab[piece]]) {
        pieces_.push_back(piece);
        p.end[piece] = i;
        for (std::uint32_t j = piece; j < i; ++j) p.cell[p.lab[j]] = piece;
        if (i - piece > largest_size) {
          largest_size = i - piece;
          largest = piece;
        }
        piece = i;
      }
    }
    p.cells += pieces_.size() - 1;
    for (std::uint32_t start : pieces_) {
      if (was_queued ? start == c : start == largest) continue;
      queue_.push_back(start);
      in_queue_[start] = 1;
    }
  }

  const ColoredGraph& g_;
  std::vector<std::uint32_t> count_;
  std::vector<char> mark_;
  std::vector<char> in_queue_;
  std::vector<std::uint32_t> queue_;
  std::vector<Vertex> touched_;
  std::vector<std::uint32_t> touched_cells_;
  std::vector<std::uint32_t> pieces_;
};

class LabelSearch {
 public:
  explicit LabelSearch(const ColoredGraph& g) : g_(g), refiner_(g) {}

  CanonicalForm run() {
    Partition root = refiner_.initial();
    std::vector<Vertex> path;
    dfs(root, path);

    CanonicalForm out;
    out.key = CanonicalKey(std::move(best_.cert));
    out.labeling = std::move(best_.lab);
    out.generators = generators_.size();
    out.leaves = leaves_;
    out.orbit = orbits();
    return out;
  }

 private:
  static constexpr std::size_t kNoJump = std::numeric_limits<std::size_t>::max();

  struct Leaf {
    std::vector<Vertex> lab;
    std::string cert;
    std::vector<Vertex> path;
  };

  // Splits every cell whose members are pairwise twins into singletons.
  // Twin transpositions fix the partition, so any order gives equivalent
  // leaves, and an equitable partition stays equitable.
  void split_twin_cells(Partition& p) {
    const std::size_t n = p.lab.size();
    for (std::uint32_t s = 0; s < n; s = p.end[s]) {
      const std::uint32_t e = p.end[s];
      if (e - s < 2) continue;
      bool all = true;
      for (std::uint32_t i = s + 1; i < e && all; ++i) all = twins(g_, p.lab[s], p.lab[i]);
      if (!all) continue;
      for (std::uint32_t i = s; i < e; ++i) {
        p.end[i] = i + 1;
        p.cell[p.lab[i]] = i;
      }
      p.cells += e - s - 1;
    }
  }

  std::size_t dfs(Partition& p, std::vector<Vertex>& path) {
    split_twin_cells(p);
    if (p.discrete()) return leaf(p, path);

    const std::size_t level = path.size();
    std::uint32_t target = 0;
    while (p.end[target] - target == 1) target = p.end[target];
    const std::vector<Vertex> children(p.lab.begin() + target, p.lab.begin() + p.end[target]);

    std::vector<Vertex> explored;
    std::size_t orbit_gens = 0;
    UnionFind orbit(g_.vertex_count());
    for (Vertex v : children) {
      if (!explored.empty()) {
        if (orbit_gens != generators_.size()) {
          orbit = stabilizer_orbits(p);
          orbit_gens = generators_.size();
        }
        const Vertex root = orbit.find(v);
        bool equivalent = false;
        for (Vertex w : explored) {
          if (orbit.find(w) == root) {
            equivalent = true;
            break;
          }
        }
        if (equivalent) continue;
      }
      Partition child = p;
      refiner_.individualize(child, v);
      path.push_back(v);
      const std::size_t jump = dfs(child, path);
      path.pop_back();
      explored.push_back(v);
      if (jump != kNoJump && jump < level) return jump;
    }
    return kNoJump;
  }

  std::size_t leaf(const Partition& p, const std::vector<Vertex>& path) {
    ++leaves_;
    std::string cert = certificate(g_, p.lab);
    if (!have_first_) {
      have_first_ = true;
      first_ = Leaf{p.lab, cert, path};
      best_ = Leaf{p.lab, std::move(cert), path};
      return kNoJump;
    }
    if (cert == first_.cert) {
      add_generator(first_.lab, p.lab);
      return common_prefix(first_.path, path);
    }
    const int cmp = cert.compare(best_.cert);
    if (cmp == 0) {
      add_generator(best_.lab, p.lab);
      return common_prefix(best_.path, path);
    }
    if (cmp < 0) best_ = Leaf{p.lab, std::move(cert), path};
    return kNoJump;
  }

  static std::size_t common_prefix(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
    std::size_t i = 0;
    while (i < a.size() && i < b.size() && a[i] == b[i]) ++i;
    return i;
  }

  void add_generator(const std::vector<Vertex>& from, const std::vector<Vertex>& to) {
    Permutation gamma(from.size());
    bool identity = true;
    for (std::size_t i = 0; i < from.size(); ++i) {
      gamma[from[i]] = to[i];
      if (from[i] != to[i]) identity = false;
    }
    if (!identity) generators_.push_back(std::move(gamma));
  }

  // Orbits of the group generated by the discovered automorphisms that map
  // every cell of `p` onto itself.
  UnionFind stabilizer_orbits(const Partition& p) const {
    UnionFind uf(g_.vertex_count());
    for (const Permutation& gamma : generators_) {
      bool keeps = true;
      for (Vertex x = 0; x < gamma.size() && keeps; ++x) keeps = p.cell[gamma[x]] == p.cell[x];
      if (!keeps) continue;
      for (Vertex x = 0; x < gamma.size(); ++x) uf.unite(x, gamma[x]);
    }
    return uf;
  }

  std::vector<Vertex> orbits() const {
    const std::size_t n = g_.vertex_count();
    UnionFind uf(n);
    for (const Permutation& gamma : generators_) {
      for (Vertex x = 0; x < n; ++x) uf.unite(x, gamma[x]);
    }
    // Open twins of equal color are always automorphic.
    std::map<std::pair<ColorId, std::vector<Vertex>>, Vertex> classes;
    for (Vertex v = 0; v < n; ++v) {
      auto nb = g_.neighbors(v);
      auto [it, inserted] =
          classes.try_emplace({g_.color(v), std::vector<Vertex>(nb.begin(), nb.end())}, v);
      if (!inserted) uf.unite(it->second, v);
    }
    std::vector<Vertex> out(n);
    for (Vertex v = 0; v < n; ++v) out[v] = uf.find(v);
    return out;
  }

  const ColoredGraph& g_;
  Refiner refiner_;
  bool have_first_ = false;
  Leaf first_;
  Leaf best_;
  std::vector<Permutation> generators_;
  std::size_t leaves_ = 0;
};

}  // namespace

CanonicalForm canonical_form(const ColoredGraph& g) {
  if (g.vertex_count() == 0) {
    CanonicalForm out;
    out.key = CanonicalKey(certificate(g, {}));
    return out;
  }
  return LabelSearch(g).run();
}

}  // namespace flagcolor
