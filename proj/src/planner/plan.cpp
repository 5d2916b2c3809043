// Copyright (c) 2026 tetherhop contributors
// SPDX-License-Identifier: Apache-2.0

#include "tetherhop/planner/plan.hpp"

#include <chrono>
#include <cmath>
#include <map>
#include <queue>
#include <random>
#include <set>
#include <stdexcept>

namespace tetherhop::planner {

void PlanProblem::validate() const {
  if (sep_p <= 0.0) throw std::invalid_argument("PlanProblem: sep_p must be > 0");
  if (robot_radius < 0.0)
    throw std::invalid_argument("PlanProblem: robot_radius must be >= 0");
  if (payload_radius < 0.0)
    throw std::invalid_argument("PlanProblem: payload_radius must be >= 0");
  if (max_hop <= 0.0)
    throw std::invalid_argument("PlanProblem: max_hop must be > 0");
  if (time_budget <= 0.0)
    throw std::invalid_argument("PlanProblem: time_budget must be > 0");
  if (!separation_ok(starts, sep_p) || !separation_ok(goals, sep_p))
    throw std::invalid_argument(
        "PlanProblem: starts and goals must satisfy the separation "
        "constraint");
}

bool separation_ok(const Eigen::Vector2d& pos0, const Eigen::Vector2d& pos1,
                   const Eigen::Vector2d& pos2, double sep_p) {
  const double half = sep_p / 2.0;
  return (pos0 - pos1).norm() < half && (pos1 - pos2).norm() < half;
}

bool separation_ok(const JointState& q, double sep_p) {
  return separation_ok(q[0], q[1], q[2], sep_p);
}

const char* to_string(PlanStatus status) {
  switch (status) {
    case PlanStatus::Success:
      return "success";
    case PlanStatus::Timeout:
      return "timeout";
    case PlanStatus::Unreachable:
      return "unreachable";
    case PlanStatus::InvalidEndpoints:
      return "invalid_endpoints";
  }
  return "unknown";
}

std::vector<Eigen::Vector2d> payload_waypoints(const Path& path) {
  std::vector<Eigen::Vector2d> out(path.length());
  for (std::size_t k = 0; k < path.length(); ++k) {
    out[k] = (path.robots[0][k] + path.robots[1][k] + path.robots[2][k]) / 3.0;
  }
  return out;
}

PayloadCheck validate_payload_path(const Path& path, const ObstacleMask& mask,
                                   double payload_radius) {
  PayloadCheck check;
  const std::vector<Eigen::Vector2d> centroids =
      path.payload.size() == path.length() ? path.payload
                                           : payload_waypoints(path);
  if (centroids.empty()) return check;
  const double step = mask.cell_size / 2.0;
  if (disk_collides(mask, centroids.front(), payload_radius)) {
    check.valid = false;
    check.first_bad_segment = 0;
    return check;
  }
  for (std::size_t k = 0; k + 1 < centroids.size(); ++k) {
    const Eigen::Vector2d d = centroids[k + 1] - centroids[k];
    const int n = std::max(1, static_cast<int>(std::ceil(d.norm() / step)));
    for (int s = 1; s <= n; ++s) {
      const Eigen::Vector2d pt =
          centroids[k] + d * (static_cast<double>(s) / n);
      if (disk_collides(mask, pt, payload_radius)) {
        check.valid = false;
        check.first_bad_segment = static_cast<int>(k);
        return check;
      }
    }
  }
  return check;
}

namespace {

using Clock = std::chrono::steady_clock;

struct Node {
  JointState q;
  int parent = -1;
};

struct Cell {
  std::vector<int> nodes;
  int selections = 0;
  int neighbors = 0;
  int created_seq = 0;
};

using CellKey = std::pair<int, int>;

class Planner {
 public:
  Planner(const PlanProblem& problem, const ObstacleMask& mask,
          std::uint64_t seed)
      : problem_(problem),
        mask_(mask),
        rng_(seed),
        unit_(0.0, 1.0),
        proj_cell_(4.0 * mask.cell_size),
        check_res_(std::min(mask.cell_size,
                            std::max(problem.robot_radius, 0.05)) /
                   2.0) {
    lo_ = mask.origin;
    hi_ = mask.origin +
          Eigen::Vector2d(mask.nx * mask.cell_size, mask.ny * mask.cell_size);
  }

  PlanResult run() {
    PlanResult result;
    const auto t0 = Clock::now();
    auto finish = [&](PlanStatus status, std::string message) {
      result.status = status;
      result.message = std::move(message);
      result.stats.seconds =
          std::chrono::duration<double>(Clock::now() - t0).count();
      result.stats.tree_nodes = static_cast<int>(trees_[0].nodes.size() +
                                                 trees_[1].nodes.size());
      return result;
    };

    problem_.validate();
    if (!state_valid(problem_.starts) || !state_valid(problem_.goals))
      return finish(PlanStatus::InvalidEndpoints,
                    "start or goal state is invalid");
    if (disk_collides(mask_, centroid(problem_.starts),
                      problem_.payload_radius) ||
        disk_collides(mask_, centroid(problem_.goals),
                      problem_.payload_radius)) {
      return finish(PlanStatus::InvalidEndpoints,
                    "payload collides at the start or goal centroid");
    }

    if (same_state(problem_.starts, problem_.goals)) {
      for (int i = 0; i < 3; ++i)
        result.path.robots[i] = {problem_.starts[i]};
      result.path.payload = payload_waypoints(result.path);
      return finish(PlanStatus::Success, "start equals goal");
    }

    if (!grid_connected())
      return finish(PlanStatus::Unreachable,
                    "start and goal lie in disjoint free components");

    add_node(0, problem_.starts, -1);
    add_node(1, problem_.goals, -1);

    constexpr long kMaxIterations = 300000;
    for (long iter = 0; iter < kMaxIterations; ++iter) {
      ++result.stats.iterations;
      if ((iter & 0xff) == 0) {
        const double elapsed =
            std::chrono::duration<double>(Clock::now() - t0).count();
        if (elapsed > problem_.time_budget)
          return finish(PlanStatus::Timeout, "time budget exhausted");
      }

      const int side = static_cast<int>(iter & 1);
      const int new_node = grow(side);
      if (new_node < 0) continue;

      int other_node = -1;
      if (try_connect(side, new_node, other_node)) {
        Candidate candidate = assemble(side, new_node, other_node);
        const int bad_segment = payload_ok(candidate.path);
        if (bad_segment < 0) {
          shortcut(candidate.path);
          candidate.path.payload = payload_waypoints(candidate.path);
          result.path = std::move(candidate.path);
          result.stats.cells_created = total_cells();
          return finish(PlanStatus::Success, "path found");
        }
        ++result.stats.payload_rejections;
        discard_bad_segment(candidate, bad_segment);
      }
      result.stats.cells_created = total_cells();
    }
    return finish(PlanStatus::Timeout, "iteration cap reached");
  }

 private:
  struct Tree {
    std::vector<Node> nodes;
    std::vector<std::vector<int>> children;
    std::vector<char> disabled;
    std::map<CellKey, Cell> cells;
  };

  struct Candidate {
    Path path;
    std::vector<int> start_ids; ///< start-tree node ids along the chain
    std::vector<int> goal_ids;  ///< goal-tree node ids, connect end first
  };

  static bool same_state(const JointState& a, const JointState& b) {
    for (int i = 0; i < 3; ++i) {
      if ((a[i] - b[i]).norm() > 1e-12) return false;
    }
    return true;
  }

  bool in_bounds(const Eigen::Vector2d& p) const {
    return p.x() >= lo_.x() && p.x() <= hi_.x() && p.y() >= lo_.y() &&
           p.y() <= hi_.y();
  }

  bool position_valid(const Eigen::Vector2d& p, double margin) const {
    return in_bounds(p) &&
           !disk_collides(mask_, p, problem_.robot_radius + margin);
  }

  bool state_valid(const JointState& q) const {
    if (!separation_ok(q, problem_.sep_p)) return false;
    for (const auto& p : q) {
      if (!position_valid(p, 0.0)) return false;
    }
    return true;
  }

  /// Interior edge samples use a half-resolution collision margin so any
  /// interpolated state between validated samples is also collision-free.
  bool edge_interior_valid(const JointState& a, const JointState& b) const {
    double max_disp = 0.0;
    for (int i = 0; i < 3; ++i)
      max_disp = std::max(max_disp, (b[i] - a[i]).norm());
    const int n =
        std::max(1, static_cast<int>(std::ceil(max_disp / check_res_)));
    for (int s = 1; s < n; ++s) {
      const double t = static_cast<double>(s) / n;
      for (int i = 0; i < 3; ++i) {
        const Eigen::Vector2d p = a[i] + t * (b[i] - a[i]);
        if (!position_valid(p, check_res_ / 2.0)) return false;
      }
    }
    return true;
  }

  double hop_metric(const JointState& a, const JointState& b) const {
    double m = 0.0;
    for (int i = 0; i < 3; ++i) m = std::max(m, (b[i] - a[i]).norm());
    return m;
  }

  Eigen::Vector2d centroid(const JointState& q) const {
    return (q[0] + q[1] + q[2]) / 3.0;
  }

  CellKey cell_key(const Eigen::Vector2d& p) const {
    return {static_cast<int>(std::floor((p.x() - lo_.x()) / proj_cell_)),
            static_cast<int>(std::floor((p.y() - lo_.y()) / proj_cell_))};
  }

  void add_node(int side, const JointState& q, int parent) {
    Tree& tree = trees_[side];
    tree.nodes.push_back({q, parent});
    tree.children.emplace_back();
    tree.disabled.push_back(0);
    const int id = static_cast<int>(tree.nodes.size()) - 1;
    if (parent >= 0) tree.children[parent].push_back(id);
    const CellKey key = cell_key(centroid(q));
    auto [it, created] = tree.cells.try_emplace(key);
    if (created) {
      it->second.created_seq = cell_seq_++;
      static constexpr int kOffsets[4][2] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
      for (const auto& off : kOffsets) {
        auto nb = tree.cells.find({key.first + off[0], key.second + off[1]});
        if (nb != tree.cells.end()) {
          ++it->second.neighbors;
          ++nb->second.neighbors;
        }
      }
    }
    it->second.nodes.push_back(id);
  }

  double cell_importance(const CellKey& key, const Cell& cell) const {
    double penalty = 0.0;
    auto it = payload_penalty_.find(key);
    if (it != payload_penalty_.end()) penalty = it->second;
    return 1.0 / ((1.0 + cell.selections) * (1.0 + penalty));
  }

  Cell& select_cell(int side) {
    Tree& tree = trees_[side];
    const bool want_exterior = unit_(rng_) < 0.8;
    Cell* best = nullptr;
    double best_importance = -1.0;
    auto consider = [&](const CellKey& key, Cell& cell) {
      if (cell.nodes.empty()) return; // everything here was pruned
      const double imp = cell_importance(key, cell);
      if (imp > best_importance) {
        best_importance = imp;
        best = &cell;
      }
    };
    for (auto& [key, cell] : tree.cells) {
      const bool exterior = cell.neighbors < 4;
      if (exterior == want_exterior) consider(key, cell);
    }
    if (best == nullptr) {
      for (auto& [key, cell] : tree.cells) consider(key, cell);
    }
    ++best->selections;
    return *best;
  }

  /// Samples a team translation plus small per-robot jitter from a tree
  /// node, truncating the straight joint edge at the last valid sample.
  int grow(int side) {
    Tree& tree = trees_[side];
    Cell& cell = select_cell(side);
    std::uniform_int_distribution<std::size_t> pick(0, cell.nodes.size() - 1);
    const int near_id = cell.nodes[pick(rng_)];
    const JointState q_near = tree.nodes[near_id].q;

    const double angle = 2.0 * M_PI * unit_(rng_);
    const double dist = problem_.max_hop * (0.25 + 0.70 * unit_(rng_));
    const Eigen::Vector2d d(dist * std::cos(angle), dist * std::sin(angle));
    const double jitter_r =
        std::min(0.04 * problem_.max_hop, 0.02 * problem_.sep_p);

    JointState q_new;
    bool ok = false;
    for (int attempt = 0; attempt < 4 && !ok; ++attempt) {
      for (int i = 0; i < 3; ++i) {
        const double ja = 2.0 * M_PI * unit_(rng_);
        const double jr = jitter_r * unit_(rng_);
        q_new[i] = q_near[i] + d +
                   Eigen::Vector2d(jr * std::cos(ja), jr * std::sin(ja));
      }
      ok = separation_ok(q_new, problem_.sep_p);
    }
    if (!ok) {
      for (int i = 0; i < 3; ++i) q_new[i] = q_near[i] + d; // pure translation
    }

    // Walk toward q_new, keeping the longest valid prefix.
    const double max_disp = hop_metric(q_near, q_new);
    const int n =
        std::max(1, static_cast<int>(std::ceil(max_disp / check_res_)));
    int last_valid = 0;
    for (int s = 1; s <= n; ++s) {
      const double t = static_cast<double>(s) / n;
      JointState q_s;
      bool valid = true;
      for (int i = 0; i < 3; ++i) {
        q_s[i] = q_near[i] + t * (q_new[i] - q_near[i]);
        const double margin = s == n ? 0.0 : check_res_ / 2.0;
        valid = valid && position_valid(q_s[i], margin);
      }
      if (!valid) break;
      last_valid = s;
    }
    if (last_valid < std::max(1, n / 8)) return -1;

    JointState q_add;
    const double t = static_cast<double>(last_valid) / n;
    for (int i = 0; i < 3; ++i)
      q_add[i] = q_near[i] + t * (q_new[i] - q_near[i]);
    if (!state_valid(q_add)) return -1;

    add_node(side, q_add, near_id);
    return static_cast<int>(tree.nodes.size()) - 1;
  }

  std::pair<long, long> connection_key(int side, int node_a,
                                       int node_b) const {
    return side == 0 ? std::make_pair<long, long>(node_a, node_b)
                     : std::make_pair<long, long>(node_b, node_a);
  }

  bool try_connect(int side, int node_id, int& other_node) {
    const Tree& other = trees_[1 - side];
    const JointState& q = trees_[side].nodes[node_id].q;
    double best = problem_.max_hop;
    other_node = -1;
    for (int j = 0; j < static_cast<int>(other.nodes.size()); ++j) {
      if (other.disabled[j]) continue;
      const double m = hop_metric(q, other.nodes[j].q);
      if (m <= best &&
          forbidden_.count(connection_key(side, node_id, j)) == 0) {
        best = m;
        other_node = j;
      }
    }
    if (other_node < 0) return false;
    return edge_interior_valid(q, other.nodes[other_node].q);
  }

  Candidate assemble(int side, int node_id, int other_node) const {
    Candidate c;
    const int start_node = side == 0 ? node_id : other_node;
    const int goal_node = side == 0 ? other_node : node_id;

    for (int id = start_node; id >= 0; id = trees_[0].nodes[id].parent)
      c.start_ids.push_back(id);
    std::reverse(c.start_ids.begin(), c.start_ids.end());
    for (int id = goal_node; id >= 0; id = trees_[1].nodes[id].parent)
      c.goal_ids.push_back(id);

    for (int id : c.start_ids) {
      const auto& q = trees_[0].nodes[id].q;
      for (int i = 0; i < 3; ++i) c.path.robots[i].push_back(q[i]);
    }
    for (int id : c.goal_ids) {
      const auto& q = trees_[1].nodes[id].q;
      for (int i = 0; i < 3; ++i) c.path.robots[i].push_back(q[i]);
    }
    c.path.payload = payload_waypoints(c.path);
    return c;
  }

  /// Returns -1 when the payload sweep is clean, else the first offending
  /// segment index.
  int payload_ok(const Path& path) {
    const PayloadCheck check =
        validate_payload_path(path, mask_, problem_.payload_radius);
    if (check.valid) return -1;
    // Penalize the projection cells around the offending segment; new
    // growth reads the shared penalty map.
    const std::vector<Eigen::Vector2d> centroids = payload_waypoints(path);
    const int k = check.first_bad_segment;
    for (int w = k; w <= k + 1 && w < static_cast<int>(centroids.size());
         ++w) {
      payload_penalty_[cell_key(centroids[w])] += 4.0;
    }
    return k;
  }

  /// A payload-colliding segment is colliding in every path that uses it
  /// (the sweep depends only on its endpoints), so the tree edge carrying
  /// it can never appear in a valid plan: drop the subtree hanging off it
  /// and let growth reroute around the penalized cells. A colliding
  /// connection edge is only forbidden for that node pair.
  void discard_bad_segment(const Candidate& candidate, int segment) {
    const int s = static_cast<int>(candidate.start_ids.size());
    const int total = s + static_cast<int>(candidate.goal_ids.size());
    if (segment + 1 < s) {
      prune_subtree(0, candidate.start_ids[segment + 1]);
    } else if (segment >= s) {
      if (segment + 1 < total) prune_subtree(1, candidate.goal_ids[segment - s]);
    } else {
      forbidden_.insert(std::make_pair<long, long>(
          candidate.start_ids.back(), candidate.goal_ids.front()));
    }
  }

  void prune_subtree(int side, int root_id) {
    Tree& tree = trees_[side];
    std::vector<int> stack = {root_id};
    while (!stack.empty()) {
      const int id = stack.back();
      stack.pop_back();
      if (tree.disabled[id]) continue;
      tree.disabled[id] = 1;
      for (int child : tree.children[id]) stack.push_back(child);
      auto cell = tree.cells.find(cell_key(centroid(tree.nodes[id].q)));
      if (cell != tree.cells.end()) {
        auto& ids = cell->second.nodes;
        ids.erase(std::remove(ids.begin(), ids.end(), id), ids.end());
      }
    }
    // Detach from the parent so regrowth cannot re-enter the pruned set.
    const int parent = tree.nodes[root_id].parent;
    if (parent >= 0) {
      auto& siblings = tree.children[parent];
      siblings.erase(std::remove(siblings.begin(), siblings.end(), root_id),
                     siblings.end());
    }
  }

  /// Sweep check of a straight payload-centroid segment.
  bool payload_segment_ok(const Eigen::Vector2d& a,
                          const Eigen::Vector2d& b) const {
    const double step = mask_.cell_size / 2.0;
    const int n =
        std::max(1, static_cast<int>(std::ceil((b - a).norm() / step)));
    for (int s = 0; s <= n; ++s) {
      const Eigen::Vector2d pt = a + (b - a) * (static_cast<double>(s) / n);
      if (disk_collides(mask_, pt, problem_.payload_radius)) return false;
    }
    return true;
  }

  /// Random shortcutting: replaces waypoint spans with straight joint
  /// sections resampled under the hop-length bound; each accepted
  /// shortcut is robot-collision-free and payload-sweep valid, so the
  /// path stays fully valid throughout.
  void shortcut(Path& path) {
    constexpr int kAttempts = 200;
    for (int attempt = 0; attempt < kAttempts; ++attempt) {
      const std::size_t len = path.length();
      if (len < 3) return;
      std::uniform_int_distribution<std::size_t> pick_i(0, len - 3);
      const std::size_t i = pick_i(rng_);
      std::uniform_int_distribution<std::size_t> pick_j(i + 2, len - 1);
      const std::size_t j = pick_j(rng_);

      const JointState a = path.waypoint(i);
      const JointState b = path.waypoint(j);
      if (!edge_interior_valid(a, b)) continue;

      const double span = hop_metric(a, b);
      const int pieces = std::max(
          1, static_cast<int>(std::ceil(span / (0.95 * problem_.max_hop))));
      std::vector<JointState> section;
      bool ok = true;
      for (int s = 0; s <= pieces && ok; ++s) {
        const double t = static_cast<double>(s) / pieces;
        JointState q;
        for (int r = 0; r < 3; ++r) q[r] = a[r] + t * (b[r] - a[r]);
        if (s > 0 && s < pieces) ok = state_valid(q);
        section.push_back(q);
      }
      if (!ok) continue;
      for (std::size_t s = 0; s + 1 < section.size() && ok; ++s) {
        ok = payload_segment_ok(centroid(section[s]), centroid(section[s + 1]));
      }
      if (!ok) continue;

      Path next;
      for (std::size_t k = 0; k <= i; ++k) {
        for (int r = 0; r < 3; ++r) next.robots[r].push_back(path.robots[r][k]);
      }
      for (std::size_t s = 1; s < section.size(); ++s) {
        for (int r = 0; r < 3; ++r) next.robots[r].push_back(section[s][r]);
      }
      for (std::size_t k = j + 1; k < len; ++k) {
        for (int r = 0; r < 3; ++r) next.robots[r].push_back(path.robots[r][k]);
      }
      path = std::move(next);
    }
  }

  /// Necessary-condition connectivity check on the raw blocked grid
  /// (8-connected); robot centers can never sit inside a blocked cell.
  bool grid_connected() const {
    if (problem_.robot_radius <= 0.0) return true;
    auto cell_of = [&](const Eigen::Vector2d& p) {
      return std::pair<int, int>(
          std::min(mask_.nx - 1,
                   std::max(0, static_cast<int>(std::floor(
                                   (p.x() - lo_.x()) / mask_.cell_size)))),
          std::min(mask_.ny - 1,
                   std::max(0, static_cast<int>(std::floor(
                                   (p.y() - lo_.y()) / mask_.cell_size)))));
    };
    const auto start = cell_of(problem_.starts[0]);
    std::vector<std::uint8_t> visited(
        static_cast<std::size_t>(mask_.nx) * mask_.ny, 0);
    std::queue<std::pair<int, int>> frontier;
    auto push = [&](int ix, int iy) {
      if (ix < 0 || ix >= mask_.nx || iy < 0 || iy >= mask_.ny) return;
      const std::size_t idx = static_cast<std::size_t>(iy) * mask_.nx + ix;
      if (visited[idx] || mask_.blocked_at(ix, iy)) return;
      visited[idx] = 1;
      frontier.emplace(ix, iy);
    };
    push(start.first, start.second);
    while (!frontier.empty()) {
      const auto [ix, iy] = frontier.front();
      frontier.pop();
      for (int dy = -1; dy <= 1; ++dy) {
        for (int dx = -1; dx <= 1; ++dx) {
          if (dx || dy) push(ix + dx, iy + dy);
        }
      }
    }
    for (int i = 0; i < 3; ++i) {
      const auto goal = cell_of(problem_.goals[i]);
      const std::size_t idx =
          static_cast<std::size_t>(goal.second) * mask_.nx + goal.first;
      if (!visited[idx]) return false;
    }
    return true;
  }

  int total_cells() const {
    return static_cast<int>(trees_[0].cells.size() + trees_[1].cells.size());
  }

  PlanProblem problem_;
  const ObstacleMask& mask_;
  std::mt19937_64 rng_;
  std::uniform_real_distribution<double> unit_;
  double proj_cell_;
  double check_res_;
  Eigen::Vector2d lo_, hi_;
  Tree trees_[2];
  std::map<CellKey, double> payload_penalty_;
  std::set<std::pair<long, long>> forbidden_;
  int cell_seq_ = 0;
};

}  // namespace

PlanResult plan(const PlanProblem& problem, const ObstacleMask& mask,
                std::uint64_t seed) {
  Planner planner(problem, mask, seed);
  return planner.run();
}

}  // namespace tetherhop::planner
