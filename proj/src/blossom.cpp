#include "apsbench/blossom.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace apsbench {

namespace {
constexpr long long kInf = std::numeric_limits<long long>::max() / 4;
}

// 1-indexed internally; index 0 is the null sentinel. Nodes n+1..2n are
// blossom slots. lab_ holds duals (doubled weight domain), members_ the
// cyclic child list of each live blossom starting at its base.

BlossomMatcher::BlossomMatcher(int n) : n_(n) {
  if (n < 0) throw std::invalid_argument("blossom: negative size");
  int cap = 2 * n_ + 1;
  g_.assign(cap, std::vector<Edge>(cap));
  for (int u = 0; u < cap; ++u)
    for (int v = 0; v < cap; ++v) g_[u][v] = {u, v, 0};
  lab_.assign(cap, 0);
  match_.assign(cap, 0);
  slack_.assign(cap, 0);
  root_.assign(cap, 0);
  parent_.assign(cap, 0);
  color_.assign(cap, -1);
  visit_.assign(cap, 0);
  members_.assign(cap, {});
  member_of_.assign(cap, std::vector<int>(n_ + 1, 0));
}

void BlossomMatcher::set_edge(int u, int v, long long w) {
  if (u < 0 || u >= n_ || v < 0 || v >= n_ || u == v)
    throw std::invalid_argument("blossom: bad edge");
  if (w < 0) throw std::invalid_argument("blossom: negative weight");
  ++u, ++v;
  if (w > g_[u][v].w) {
    g_[u][v].w = w;
    g_[v][u].w = w;
  }
}

void BlossomMatcher::update_slack(int u, int x) {
  if (!slack_[x] || delta(g_[u][x]) < delta(g_[slack_[x]][x])) slack_[x] = u;
}

void BlossomMatcher::set_slack(int x) {
  slack_[x] = 0;
  for (int u = 1; u <= n_; ++u)
    if (g_[u][x].w > 0 && root_[u] != x && color_[root_[u]] == 0) update_slack(u, x);
}

void BlossomMatcher::push_queue(int x) {
  if (x <= n_) {
    queue_.push_back(x);
  } else {
    for (int m : members_[x]) push_queue(m);
  }
}

void BlossomMatcher::set_root(int x, int b) {
  root_[x] = b;
  if (x > n_)
    for (int m : members_[x]) set_root(m, b);
}

int BlossomMatcher::blossom_position(int b, int xr) {
  int pr = static_cast<int>(std::find(members_[b].begin(), members_[b].end(), xr) -
                            members_[b].begin());
  if (pr % 2 == 1) {
    // odd position: flip traversal direction so the path from the base is even
    std::reverse(members_[b].begin() + 1, members_[b].end());
    return static_cast<int>(members_[b].size()) - pr;
  }
  return pr;
}

void BlossomMatcher::set_match(int u, int v) {
  match_[u] = g_[u][v].v;
  if (u <= n_) return;
  Edge e = g_[u][v];
  int xr = member_of_[u][e.u];
  int pr = blossom_position(u, xr);
  for (int i = 0; i < pr; ++i) set_match(members_[u][i], members_[u][i ^ 1]);
  set_match(xr, v);
  std::rotate(members_[u].begin(), members_[u].begin() + pr, members_[u].end());
}

void BlossomMatcher::augment(int u, int v) {
  for (;;) {
    int xnv = root_[match_[u]];
    set_match(u, v);
    if (!xnv) return;
    set_match(xnv, root_[parent_[xnv]]);
    u = root_[parent_[xnv]];
    v = xnv;
  }
}

int BlossomMatcher::lowest_common_ancestor(int u, int v) {
  for (++visit_stamp_; u || v; std::swap(u, v)) {
    if (u == 0) continue;
    if (visit_[u] == visit_stamp_) return u;
    visit_[u] = visit_stamp_;
    u = root_[match_[u]];
    if (u) u = root_[parent_[u]];
  }
  return 0;
}

void BlossomMatcher::add_blossom(int u, int lca, int v) {
  int b = n_ + 1;
  while (b <= node_count_ && root_[b]) ++b;
  if (b > node_count_) ++node_count_;
  lab_[b] = 0;
  color_[b] = 0;
  match_[b] = match_[lca];
  members_[b].clear();
  members_[b].push_back(lca);
  for (int x = u, y; x != lca; x = root_[parent_[y]]) {
    members_[b].push_back(x);
    members_[b].push_back(y = root_[match_[x]]);
    push_queue(y);
  }
  std::reverse(members_[b].begin() + 1, members_[b].end());
  for (int x = v, y; x != lca; x = root_[parent_[y]]) {
    members_[b].push_back(x);
    members_[b].push_back(y = root_[match_[x]]);
    push_queue(y);
  }
  set_root(b, b);
  for (int x = 1; x <= node_count_; ++x) {
    g_[b][x].w = 0;
    g_[x][b].w = 0;
  }
  for (int x = 1; x <= n_; ++x) member_of_[b][x] = 0;
  for (int m : members_[b]) {
    for (int x = 1; x <= node_count_; ++x)
      if (g_[b][x].w == 0 || delta(g_[m][x]) < delta(g_[b][x])) {
        g_[b][x] = g_[m][x];
        g_[x][b] = g_[x][m];
      }
    for (int x = 1; x <= n_; ++x)
      if (member_of_[m][x]) member_of_[b][x] = m;
  }
  set_slack(b);
}

void BlossomMatcher::expand_blossom(int b) {
  for (int m : members_[b]) set_root(m, m);
  int xr = member_of_[b][g_[b][parent_[b]].u];
  int pr = blossom_position(b, xr);
  for (int i = 0; i < pr; i += 2) {
    int xs = members_[b][i];
    int xns = members_[b][i + 1];
    parent_[xs] = g_[xns][xs].u;
    color_[xs] = 1;
    color_[xns] = 0;
    slack_[xs] = 0;
    set_slack(xns);
    push_queue(xns);
  }
  color_[xr] = 1;
  parent_[xr] = parent_[b];
  for (size_t i = pr + 1; i < members_[b].size(); ++i) {
    int xs = members_[b][i];
    color_[xs] = -1;
    set_slack(xs);
  }
  root_[b] = 0;
}

bool BlossomMatcher::on_edge(const Edge& e) {
  int u = root_[e.u];
  int v = root_[e.v];
  if (color_[v] == -1) {
    parent_[v] = e.u;
    color_[v] = 1;
    int nu = root_[match_[v]];
    slack_[v] = 0;
    slack_[nu] = 0;
    color_[nu] = 0;
    push_queue(nu);
  } else if (color_[v] == 0) {
    int lca = lowest_common_ancestor(u, v);
    if (!lca) {
      augment(u, v);
      augment(v, u);
      return true;
    }
    add_blossom(u, lca, v);
  }
  return false;
}

bool BlossomMatcher::augment_round() {
  std::fill(color_.begin(), color_.begin() + node_count_ + 1, -1);
  std::fill(slack_.begin(), slack_.begin() + node_count_ + 1, 0);
  queue_.clear();
  queue_head_ = 0;
  for (int x = 1; x <= node_count_; ++x)
    if (root_[x] == x && !match_[x]) {
      parent_[x] = 0;
      color_[x] = 0;
      push_queue(x);
    }
  if (queue_.empty()) return false;
  for (;;) {
    while (queue_head_ < queue_.size()) {
      int u = queue_[queue_head_++];
      if (color_[root_[u]] == 1) continue;
      for (int v = 1; v <= n_; ++v)
        if (g_[u][v].w > 0 && root_[u] != root_[v]) {
          if (delta(g_[u][v]) == 0) {
            if (on_edge(g_[u][v])) return true;
          } else {
            update_slack(u, root_[v]);
          }
        }
    }
    long long d = kInf;
    for (int b = n_ + 1; b <= node_count_; ++b)
      if (root_[b] == b && color_[b] == 1) d = std::min(d, lab_[b] / 2);
    for (int x = 1; x <= node_count_; ++x)
      if (root_[x] == x && slack_[x]) {
        if (color_[x] == -1)
          d = std::min(d, delta(g_[slack_[x]][x]));
        else if (color_[x] == 0)
          d = std::min(d, delta(g_[slack_[x]][x]) / 2);
      }
    for (int u = 1; u <= n_; ++u) {
      if (color_[root_[u]] == 0) {
        if (lab_[u] <= d) return false;
        lab_[u] -= d;
      } else if (color_[root_[u]] == 1) {
        lab_[u] += d;
      }
    }
    for (int b = n_ + 1; b <= node_count_; ++b)
      if (root_[b] == b) {
        if (color_[b] == 0)
          lab_[b] += 2 * d;
        else if (color_[b] == 1)
          lab_[b] -= 2 * d;
      }
    queue_.clear();
    queue_head_ = 0;
    for (int x = 1; x <= node_count_; ++x)
      if (root_[x] == x && slack_[x] && root_[slack_[x]] != x &&
          delta(g_[slack_[x]][x]) == 0)
        if (on_edge(g_[slack_[x]][x])) return true;
    for (int b = n_ + 1; b <= node_count_; ++b)
      if (root_[b] == b && color_[b] == 1 && lab_[b] == 0) expand_blossom(b);
  }
}

long long BlossomMatcher::solve() {
  pairs_.clear();
  if (n_ == 0) return 0;
  node_count_ = n_;
  std::fill(match_.begin(), match_.end(), 0);
  for (int x = 0; x < static_cast<int>(root_.size()); ++x) {
    root_[x] = x <= n_ ? x : 0;
    members_[x].clear();
  }
  root_[0] = 0;
  long long w_max = 0;
  for (int u = 1; u <= n_; ++u) {
    for (int v = 1; v <= n_; ++v) {
      member_of_[u][v] = (u == v ? u : 0);
      w_max = std::max(w_max, g_[u][v].w);
    }
  }
  for (int u = 1; u <= n_; ++u) lab_[u] = w_max;
  while (augment_round()) {
  }
  long long total = 0;
  for (int u = 1; u <= n_; ++u)
    if (match_[u] && match_[u] < u && g_[u][match_[u]].w > 0) {
      total += g_[u][match_[u]].w;
      pairs_.push_back({match_[u] - 1, u - 1});
    }
  return total;
}

int BlossomMatcher::mate(int v) const {
  if (v < 0 || v >= n_) throw std::out_of_range("blossom: bad vertex");
  int m = match_[v + 1];
  if (m == 0 || g_[v + 1][m].w == 0) return -1;
  return m - 1;
}

}  // namespace apsbench
