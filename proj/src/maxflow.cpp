#include "vcb/maxflow.hpp"

#include <deque>

#include "vcb/error.hpp"

namespace vcb {

MaxFlow::MaxFlow(int node_count)
    : out_(node_count), level_(node_count), cursor_(node_count) {}

int MaxFlow::add_arc(int from, int to, Integer capacity) {
  if (capacity < 0) fail(Errc::InvalidParams, "negative arc capacity");
  const int id = static_cast<int>(arcs_.size());
  arcs_.push_back({to, capacity, id + 1});
  arcs_.push_back({from, 0, id});
  out_[from].push_back(id);
  out_[to].push_back(id + 1);
  original_.push_back(std::move(capacity));
  original_.push_back(0);
  return id;
}

bool MaxFlow::build_levels(int source, int sink) {
  std::fill(level_.begin(), level_.end(), -1);
  level_[source] = 0;
  std::deque<int> queue{source};
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (int id : out_[u]) {
      const Arc& arc = arcs_[id];
      if (arc.capacity > 0 && level_[arc.to] == -1) {
        level_[arc.to] = level_[u] + 1;
        queue.push_back(arc.to);
      }
    }
  }
  return level_[sink] != -1;
}

Integer MaxFlow::push(int node, int sink, Integer limit) {
  if (node == sink) return limit;
  for (; cursor_[node] < out_[node].size(); ++cursor_[node]) {
    const int id = out_[node][cursor_[node]];
    Arc& arc = arcs_[id];
    if (arc.capacity <= 0 || level_[arc.to] != level_[node] + 1) continue;
    const Integer pushed =
        push(arc.to, sink, std::min(limit, arc.capacity));
    if (pushed > 0) {
      arc.capacity -= pushed;
      arcs_[arc.twin].capacity += pushed;
      return pushed;
    }
  }
  return 0;
}

Integer MaxFlow::run(int source, int sink) {
  // Upper bound on any augmenting path: one more than all capacity.
  Integer limit = 1;
  for (const Integer& cap : original_) limit += cap;

  Integer total = 0;
  while (build_levels(source, sink)) {
    std::fill(cursor_.begin(), cursor_.end(), 0);
    while (true) {
      const Integer pushed = push(source, sink, limit);
      if (pushed == 0) break;
      total += pushed;
    }
  }
  return total;
}

const Integer& MaxFlow::flow_on(int arc) const {
  // Flow equals the residual on the reverse arc.
  return arcs_[arcs_[arc].twin].capacity;
}

std::vector<bool> MaxFlow::source_side(int source) const {
  std::vector<bool> reach(out_.size(), false);
  reach[source] = true;
  std::deque<int> queue{source};
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (int id : out_[u]) {
      const Arc& arc = arcs_[id];
      if (arc.capacity > 0 && !reach[arc.to]) {
        reach[arc.to] = true;
        queue.push_back(arc.to);
      }
    }
  }
  return reach;
}

}  // namespace vcb
