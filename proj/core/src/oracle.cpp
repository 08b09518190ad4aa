#include "tdorg/oracle.hpp"

#include <algorithm>
#include <numeric>

#include "tdorg/errors.hpp"

namespace tdorg {

namespace {

// required[a][b]: the definitions demand (a <_x b and a <_y b) exactly when this holds.
//   u, v   : uv is an edge
//   v, u   : N(v) is strictly inside N(v') for every v' in N(u)
//   u1, u2 : N(u1) strictly contains N(u2)
//   v1, v2 : N(v1) strictly inside N(v2)
class Requirements {
 public:
  explicit Requirements(const BipartiteGraph& g) : n_(g.vertex_count()), req_(static_cast<std::size_t>(n_ * n_), 0) {
    for (int a = 0; a < n_; ++a) {
      for (int b = 0; b < n_; ++b) {
        if (a != b) req_[idx(a, b)] = evaluate(g, g.ref(a), g.ref(b)) ? 1 : 0;
      }
    }
  }

  int size() const { return n_; }
  bool operator()(int a, int b) const { return req_[idx(a, b)] != 0; }

 private:
  std::size_t idx(int a, int b) const { return static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) + b; }

  static bool evaluate(const BipartiteGraph& g, VertexRef a, VertexRef b) {
    if (a.side == Side::U && b.side == Side::V) return g.adjacent(a.index, b.index);
    if (a.side == Side::V && b.side == Side::U) {
      for (int v : g.neighbors(b)) {
        if (neighborhood_relation(g, a, {Side::V, v}) != Inclusion::ProperSubset) return false;
      }
      return true;
    }
    const Inclusion rel = neighborhood_relation(g, a, b);
    return a.side == Side::U ? rel == Inclusion::ProperSuperset : rel == Inclusion::ProperSubset;
  }

  int n_;
  std::vector<char> req_;
};

bool satisfies(const Requirements& req, const std::vector<int>& rx, const std::vector<int>& ry) {
  const int n = req.size();
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      const bool both = rx[a] < rx[b] && ry[a] < ry[b];
      if (both != req(a, b)) return false;
    }
  }
  return true;
}

// The x-only consequence: required(a, b) forces a <_x b.
bool x_admissible(const Requirements& req, const std::vector<int>& rx) {
  const int n = req.size();
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a != b && req(a, b) && rx[a] > rx[b]) return false;
    }
  }
  return true;
}

std::vector<int> rank_of(const std::vector<int>& order) {
  std::vector<int> r(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) r[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
  return r;
}

Representation to_representation(const BipartiteGraph& g, const std::vector<int>& x, const std::vector<int>& y) {
  Representation rep;
  for (int i : x) rep.order_x.push_back(g.ref(i));
  for (int i : y) rep.order_y.push_back(g.ref(i));
  return rep;
}

std::vector<Representation> naive(const BipartiteGraph& g, const Requirements& req) {
  std::vector<Representation> out;
  std::vector<int> x(static_cast<std::size_t>(g.vertex_count()));
  std::iota(x.begin(), x.end(), 0);
  do {
    const auto rx = rank_of(x);
    if (!x_admissible(req, rx)) continue;
    std::vector<int> y(x.size());
    std::iota(y.begin(), y.end(), 0);
    do {
      if (satisfies(req, rx, rank_of(y))) out.push_back(to_representation(g, x, y));
    } while (std::next_permutation(y.begin(), y.end()));
  } while (std::next_permutation(x.begin(), x.end()));
  return out;
}

// Extends <_x one vertex at a time. Once p precedes w in <_x, the definitions fix whether
// p <_y w, so <_y is maintained as a linear order and a prefix dies as soon as it cannot be.
class PrunedSearch {
 public:
  PrunedSearch(const BipartiteGraph& g, const Requirements& req)
      : g_(g), req_(req), placed_(static_cast<std::size_t>(req.size()), 0) {}

  std::vector<Representation> run() {
    extend();
    return std::move(out_);
  }

 private:
  void extend() {
    const int n = req_.size();
    if (static_cast<int>(x_.size()) == n) {
      out_.push_back(to_representation(g_, x_, y_));
      return;
    }
    for (int w = 0; w < n; ++w) {
      if (placed_[w]) continue;
      bool waiting = false;
      for (int q = 0; q < n && !waiting; ++q) waiting = !placed_[q] && q != w && req_(q, w);
      if (waiting) continue;
      // every placed p needs p <_y w iff required(p, w); those must form a prefix of <_y
      std::size_t before = 0;
      bool ok = true;
      for (std::size_t i = 0; i < y_.size(); ++i) {
        if (req_(y_[i], w)) {
          if (before != i) ok = false;
          ++before;
        }
      }
      if (!ok) continue;
      placed_[w] = 1;
      x_.push_back(w);
      y_.insert(y_.begin() + static_cast<std::ptrdiff_t>(before), w);
      extend();
      y_.erase(y_.begin() + static_cast<std::ptrdiff_t>(before));
      x_.pop_back();
      placed_[w] = 0;
    }
  }

  const BipartiteGraph& g_;
  const Requirements& req_;
  std::vector<char> placed_;
  std::vector<int> x_, y_;
  std::vector<Representation> out_;
};

}  // namespace

bool oracle_accepts(const BipartiteGraph& g, const Representation& rep) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  if (rep.order_x.size() != n || rep.order_y.size() != n) return false;
  std::vector<int> rx(n, -1), ry(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    for (auto [order, ranks] : {std::pair{&rep.order_x, &rx}, std::pair{&rep.order_y, &ry}}) {
      const VertexRef v = (*order)[i];
      const int limit = v.side == Side::U ? g.u_count() : g.v_count();
      if (v.index < 0 || v.index >= limit) return false;
      int& slot = (*ranks)[static_cast<std::size_t>(g.id(v))];
      if (slot != -1) return false;
      slot = static_cast<int>(i);
    }
  }
  return satisfies(Requirements(g), rx, ry);
}

std::vector<Representation> brute_force_normalized_representations(const BipartiteGraph& g, OracleRoute route) {
  if (route == OracleRoute::Auto) {
    route = g.vertex_count() <= kNaiveOracleGuard ? OracleRoute::Naive : OracleRoute::Pruned;
  }
  const int guard = route == OracleRoute::Naive ? kNaiveOracleGuard : kPrunedOracleGuard;
  if (g.vertex_count() > guard) {
    throw GuardError("brute_force_normalized_representations: more than " + std::to_string(guard) +
                     " vertices for the " + (route == OracleRoute::Naive ? "naive" : "pruned") + " route");
  }
  const Requirements req(g);
  auto out = route == OracleRoute::Naive ? naive(g, req) : PrunedSearch(g, req).run();
  for (const auto& rep : out) {
    if (!oracle_accepts(g, rep)) throw ConsistencyError("oracle produced a rejected representation");
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace tdorg
