#include "tdorg/graph.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "tdorg/errors.hpp"

namespace tdorg {

std::string token(VertexRef v) {
  return (v.side == Side::U ? "u" : "v") + std::to_string(v.index + 1);
}

std::string token(const EdgeRef& e) {
  return "u" + std::to_string(e.u + 1) + "v" + std::to_string(e.v + 1);
}

namespace {

std::optional<long long> parse_integer(std::string_view s) {
  long long value = 0;
  if (s.empty()) return std::nullopt;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

std::optional<VertexRef> parse_token(std::string_view text) {
  if (text.size() < 2) return std::nullopt;
  Side side;
  if (text[0] == 'u') {
    side = Side::U;
  } else if (text[0] == 'v') {
    side = Side::V;
  } else {
    return std::nullopt;
  }
  auto n = parse_integer(text.substr(1));
  if (!n || *n < 1 || *n > 1'000'000'000) return std::nullopt;
  return VertexRef{side, static_cast<int>(*n - 1)};
}

// ---------------------------------------------------------------------------

BipartiteGraph::BipartiteGraph(int u_count, int v_count, std::span<const std::pair<int, int>> edges,
                               std::vector<std::string> labels)
    : u_count_(u_count),
      v_count_(v_count),
      adj_(static_cast<std::size_t>(u_count) * static_cast<std::size_t>(v_count), 0),
      u_neighbors_(static_cast<std::size_t>(u_count)),
      v_neighbors_(static_cast<std::size_t>(v_count)),
      labels_(std::move(labels)) {
  if (u_count < 0 || v_count < 0) throw PreconditionError("vertex counts must be nonnegative");
  for (auto [u, v] : edges) {
    if (u < 0 || u >= u_count || v < 0 || v >= v_count) {
      throw PreconditionError("edge endpoint out of range");
    }
    adj_[static_cast<std::size_t>(u) * v_count_ + v] = 1;
  }
  for (int u = 0; u < u_count_; ++u) {
    for (int v = 0; v < v_count_; ++v) {
      if (adjacent(u, v)) {
        edges_.push_back(EdgeRef{u, v, static_cast<int>(edges_.size())});
        u_neighbors_[u].push_back(v);
        v_neighbors_[v].push_back(u);
      }
    }
  }
  labels_.resize(static_cast<std::size_t>(vertex_count()));
  for (int i = 0; i < vertex_count(); ++i) {
    if (labels_[i] == token(ref(i))) labels_[i].clear();
  }
}

bool BipartiteGraph::adjacent(VertexRef a, VertexRef b) const {
  if (a.side == b.side) return false;
  if (a.side == Side::U) return adjacent(a.index, b.index);
  return adjacent(b.index, a.index);
}

const std::vector<int>& BipartiteGraph::neighbors(VertexRef a) const {
  return a.side == Side::U ? u_neighbors_[a.index] : v_neighbors_[a.index];
}

std::optional<EdgeRef> BipartiteGraph::find_edge(int u, int v) const {
  if (u < 0 || u >= u_count_ || v < 0 || v >= v_count_ || !adjacent(u, v)) return std::nullopt;
  auto it = std::lower_bound(edges_.begin(), edges_.end(), std::pair{u, v},
                             [](const EdgeRef& e, std::pair<int, int> key) {
                               return std::pair{e.u, e.v} < key;
                             });
  return *it;
}

std::vector<VertexRef> BipartiteGraph::vertices() const {
  std::vector<VertexRef> out;
  out.reserve(static_cast<std::size_t>(vertex_count()));
  for (int i = 0; i < vertex_count(); ++i) out.push_back(ref(i));
  return out;
}

std::string BipartiteGraph::label(VertexRef a) const {
  const auto& l = labels_[static_cast<std::size_t>(id(a))];
  return l.empty() ? token(a) : l;
}

bool BipartiteGraph::has_custom_label(VertexRef a) const {
  return !labels_[static_cast<std::size_t>(id(a))].empty();
}

bool operator==(const BipartiteGraph& a, const BipartiteGraph& b) {
  return a.u_count_ == b.u_count_ && a.v_count_ == b.v_count_ && a.adj_ == b.adj_ &&
         a.labels_ == b.labels_;
}

// ---------------------------------------------------------------------------
// I/O

ParsedGraph parse_graph(std::string_view text) {
  bool have_header = false;
  long long nu = 0, nv = 0, m = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::pair<VertexRef, std::string>> names;
  std::size_t edge_lines = 0;
  std::size_t line_no = 0;
  std::size_t header_line = 0;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    auto tok = split_ws(line);
    if (tok.empty()) {
      if (end == text.size()) break;
      continue;
    }

    if (tok[0] == "c") continue;

    if (tok[0] == "p") {
      if (have_header) throw ParseError(line_no, "duplicate header");
      if (tok.size() != 5 || tok[1] != "tdorg") {
        throw ParseError(line_no, "malformed header, expected 'p tdorg <nU> <nV> <m>'");
      }
      auto a = parse_integer(tok[2]), b = parse_integer(tok[3]), c = parse_integer(tok[4]);
      if (!a || !b || !c || *a < 0 || *b < 0 || *c < 0 || *a > 1'000'000 || *b > 1'000'000) {
        throw ParseError(line_no, "malformed header counts");
      }
      nu = *a;
      nv = *b;
      m = *c;
      have_header = true;
      header_line = line_no;
      continue;
    }

    if (tok[0] == "e") {
      if (!have_header) throw ParseError(line_no, "edge before header");
      if (tok.size() != 3) throw ParseError(line_no, "malformed edge, expected 'e <i> <j>'");
      VertexRef a{}, b{};
      auto ia = parse_integer(tok[1]), ib = parse_integer(tok[2]);
      if (ia && ib) {
        if (*ia < 1 || *ia > nu) throw ParseError(line_no, "u-index out of range");
        if (*ib < 1 || *ib > nv) throw ParseError(line_no, "v-index out of range");
        a = VertexRef{Side::U, static_cast<int>(*ia - 1)};
        b = VertexRef{Side::V, static_cast<int>(*ib - 1)};
      } else {
        auto ta = parse_token(tok[1]), tb = parse_token(tok[2]);
        if (!ta || !tb) throw ParseError(line_no, "malformed edge endpoints");
        if (ta->side == tb->side) throw ParseError(line_no, "edge within one side");
        a = *ta;
        b = *tb;
        if (a.side == Side::V) std::swap(a, b);
        if (a.index >= nu) throw ParseError(line_no, "u-index out of range");
        if (b.index >= nv) throw ParseError(line_no, "v-index out of range");
      }
      edges.emplace_back(a.index, b.index);
      ++edge_lines;
      continue;
    }

    if (tok[0] == "n") {
      if (!have_header) throw ParseError(line_no, "name before header");
      if (tok.size() < 3) throw ParseError(line_no, "malformed name line, expected 'n u<i> <label>'");
      auto v = parse_token(tok[1]);
      if (!v) throw ParseError(line_no, "malformed vertex token in name line");
      if ((v->side == Side::U && v->index >= nu) || (v->side == Side::V && v->index >= nv)) {
        throw ParseError(line_no, "named vertex out of range");
      }
      // label is the rest of the line after the vertex token
      std::size_t at = static_cast<std::size_t>(tok[2].data() - line.data());
      std::string_view rest = line.substr(at);
      while (!rest.empty() && (rest.back() == ' ' || rest.back() == '\t')) rest.remove_suffix(1);
      names.emplace_back(*v, std::string(rest));
      continue;
    }

    throw ParseError(line_no, "unrecognized line type '" + std::string(tok[0]) + "'");
  }

  if (!have_header) throw ParseError(line_no, "missing 'p tdorg' header");

  std::vector<std::pair<int, int>> unique_edges = edges;
  std::sort(unique_edges.begin(), unique_edges.end());
  unique_edges.erase(std::unique(unique_edges.begin(), unique_edges.end()), unique_edges.end());
  const std::size_t duplicates = edges.size() - unique_edges.size();

  if (static_cast<std::size_t>(m) != unique_edges.size() && static_cast<std::size_t>(m) != edge_lines) {
    std::ostringstream msg;
    msg << "header declares " << m << " edges but found " << unique_edges.size() << " distinct ("
        << edge_lines << " lines)";
    throw ParseError(header_line, msg.str());
  }

  std::vector<std::string> labels(static_cast<std::size_t>(nu + nv));
  for (auto& [v, name] : names) {
    labels[static_cast<std::size_t>(v.side == Side::U ? v.index : nu + v.index)] = name;
  }
  return ParsedGraph{BipartiteGraph(static_cast<int>(nu), static_cast<int>(nv), unique_edges, labels),
                     duplicates};
}

std::string serialize_graph(const BipartiteGraph& g) {
  std::ostringstream out;
  out << "p tdorg " << g.u_count() << ' ' << g.v_count() << ' ' << g.edge_count() << '\n';
  for (const auto& v : g.vertices()) {
    if (g.has_custom_label(v)) out << "n " << token(v) << ' ' << g.label(v) << '\n';
  }
  for (const auto& e : g.edges()) out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
  return out.str();
}

// ---------------------------------------------------------------------------
// Predicates

Inclusion neighborhood_relation(const BipartiteGraph& g, VertexRef a, VertexRef b) {
  if (a.side != b.side) throw PreconditionError("neighborhood_relation: vertices lie on different sides");
  const auto& na = g.neighbors(a);
  const auto& nb = g.neighbors(b);
  const bool a_in_b = std::includes(nb.begin(), nb.end(), na.begin(), na.end());
  const bool b_in_a = std::includes(na.begin(), na.end(), nb.begin(), nb.end());
  if (a_in_b && b_in_a) return Inclusion::Equal;
  if (a_in_b) return Inclusion::ProperSubset;
  if (b_in_a) return Inclusion::ProperSuperset;
  return Inclusion::Incomparable;
}

bool proper_subset(const BipartiteGraph& g, VertexRef a, VertexRef b) {
  return neighborhood_relation(g, a, b) == Inclusion::ProperSubset;
}

std::vector<TwinPair> find_twins(const BipartiteGraph& g) {
  std::vector<TwinPair> out;
  for (Side s : {Side::U, Side::V}) {
    const int n = s == Side::U ? g.u_count() : g.v_count();
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        VertexRef a{s, i}, b{s, j};
        if (g.neighbors(a) == g.neighbors(b)) out.emplace_back(a, b);
      }
    }
  }
  return out;
}

TwinCollapse collapse_twins(const BipartiteGraph& g) {
  const int n = g.vertex_count();
  std::vector<int> representative(static_cast<std::size_t>(n));
  std::iota(representative.begin(), representative.end(), 0);
  for (const auto& [a, b] : find_twins(g)) {
    int& rb = representative[g.id(b)];
    rb = std::min(rb, representative[g.id(a)]);
  }
  std::vector<int> keep;
  for (int i = 0; i < n; ++i) {
    if (representative[i] == i) keep.push_back(i);
  }
  BipartiteGraph collapsed = induced_subgraph(g, keep);

  std::vector<int> new_id(static_cast<std::size_t>(n), -1);
  for (std::size_t k = 0; k < keep.size(); ++k) new_id[keep[k]] = static_cast<int>(k);
  std::vector<VertexRef> mapping(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) mapping[i] = collapsed.ref(new_id[representative[i]]);
  return TwinCollapse{std::move(collapsed), std::move(mapping)};
}

bool are_independent_edges(const BipartiteGraph& g, const EdgeRef& e1, const EdgeRef& e2) {
  if (e1.u == e2.u && e1.v == e2.v) throw PreconditionError("are_independent_edges: identical edges");
  if (e1.u == e2.u || e1.v == e2.v) return false;
  return !g.adjacent(e1.u, e2.v) && !g.adjacent(e2.u, e1.v);
}

std::vector<std::pair<EdgeRef, EdgeRef>> independent_edge_pairs(const BipartiteGraph& g) {
  std::vector<std::pair<EdgeRef, EdgeRef>> out;
  const auto& es = g.edges();
  for (std::size_t i = 0; i < es.size(); ++i) {
    for (std::size_t j = i + 1; j < es.size(); ++j) {
      if (are_independent_edges(g, es[i], es[j])) out.emplace_back(es[i], es[j]);
    }
  }
  return out;
}

bool is_chain_graph(const BipartiteGraph& g) {
  bool no_independent_pair = true;
  const auto& es = g.edges();
  for (std::size_t i = 0; i < es.size() && no_independent_pair; ++i) {
    for (std::size_t j = i + 1; j < es.size(); ++j) {
      if (are_independent_edges(g, es[i], es[j])) {
        no_independent_pair = false;
        break;
      }
    }
  }

  bool nested = true;
  for (int a = 0; a < g.u_count() && nested; ++a) {
    for (int b = a + 1; b < g.u_count(); ++b) {
      if (neighborhood_relation(g, {Side::U, a}, {Side::U, b}) == Inclusion::Incomparable) {
        nested = false;
        break;
      }
    }
  }

  if (nested != no_independent_pair) {
    throw ConsistencyError("is_chain_graph: independent-edge test and inclusion-chain test disagree");
  }
  return nested;
}

namespace {

class InducedCycleSearch {
 public:
  explicit InducedCycleSearch(const BipartiteGraph& g) : g_(g), on_path_(g.vertex_count(), 0) {}

  bool run() {
    for (int s = 0; s < g_.vertex_count(); ++s) {
      path_.assign(1, s);
      on_path_[s] = 1;
      const bool found = extend(s);
      on_path_[s] = 0;
      if (found) return true;
    }
    return false;
  }

 private:
  bool adj(int a, int b) const { return g_.adjacent(g_.ref(a), g_.ref(b)); }

  bool extend(int start) {
    const int last = path_.back();
    for (int w : neighbor_ids(last)) {
      if (w <= start || on_path_[w]) continue;
      bool chord = false;
      for (std::size_t k = 1; k + 1 < path_.size(); ++k) {
        if (adj(w, path_[k])) {
          chord = true;
          break;
        }
      }
      if (chord) continue;
      if (path_.size() >= 2 && adj(w, start)) {
        if (path_.size() + 1 >= 6) return true;
        continue;
      }
      path_.push_back(w);
      on_path_[w] = 1;
      const bool found = extend(start);
      on_path_[w] = 0;
      path_.pop_back();
      if (found) return true;
    }
    return false;
  }

  std::vector<int> neighbor_ids(int a) const {
    const VertexRef r = g_.ref(a);
    std::vector<int> out;
    for (int j : g_.neighbors(r)) out.push_back(g_.id(VertexRef{opposite(r.side), j}));
    return out;
  }

  const BipartiteGraph& g_;
  std::vector<int> path_;
  std::vector<char> on_path_;
};

}  // namespace

bool is_chordal_bipartite(const BipartiteGraph& g) {
  if (g.vertex_count() > kChordalBipartiteGuard) {
    throw GuardError("is_chordal_bipartite: more than " + std::to_string(kChordalBipartiteGuard) +
                     " vertices");
  }
  return !InducedCycleSearch(g).run();
}

std::vector<Component> connectivity(const BipartiteGraph& g) {
  const int n = g.vertex_count();
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  std::vector<Component> out;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    const int c = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<int> stack{s};
    comp[s] = c;
    while (!stack.empty()) {
      const int a = stack.back();
      stack.pop_back();
      const VertexRef r = g.ref(a);
      out[c].vertices.push_back(r);
      for (int j : g.neighbors(r)) {
        const int b = g.id(VertexRef{opposite(r.side), j});
        if (comp[b] < 0) {
          comp[b] = c;
          stack.push_back(b);
        }
      }
    }
    std::sort(out[c].vertices.begin(), out[c].vertices.end());
    out[c].nontrivial = out[c].vertices.size() > 1;
  }
  return out;
}

bool is_connected(const BipartiteGraph& g) { return connectivity(g).size() <= 1; }

BipartiteGraph induced_subgraph(const BipartiteGraph& g, std::span<const int> keep) {
  std::vector<int> ids(keep.begin(), keep.end());
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  std::vector<int> new_index(static_cast<std::size_t>(g.vertex_count()), -1);
  int nu = 0, nv = 0;
  std::vector<std::string> u_labels, v_labels;
  for (int i : ids) {
    const VertexRef r = g.ref(i);
    const std::string lab = g.label(r);
    if (r.side == Side::U) {
      new_index[i] = nu++;
      u_labels.push_back(lab);
    } else {
      new_index[i] = nv++;
      v_labels.push_back(lab);
    }
  }
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : g.edges()) {
    const int a = new_index[g.id({Side::U, e.u})];
    const int b = new_index[g.id({Side::V, e.v})];
    if (a >= 0 && b >= 0) edges.emplace_back(a, b);
  }
  std::vector<std::string> labels = std::move(u_labels);
  labels.insert(labels.end(), v_labels.begin(), v_labels.end());
  return BipartiteGraph(nu, nv, edges, std::move(labels));
}

BipartiteGraph disjoint_union(const BipartiteGraph& a, const BipartiteGraph& b) {
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : a.edges()) edges.emplace_back(e.u, e.v);
  for (const auto& e : b.edges()) edges.emplace_back(a.u_count() + e.u, a.v_count() + e.v);
  return BipartiteGraph(a.u_count() + b.u_count(), a.v_count() + b.v_count(), edges);
}

}  // namespace tdorg
