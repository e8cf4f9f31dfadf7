#include "uso/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "uso/orientation.hpp"

namespace uso {

PathRecord make_path_record(int d, const Rule& rule,
                            std::vector<Vertex> vertices) {
  PathRecord record;
  record.dimension = d;
  record.rule = rule;
  record.usage.assign(static_cast<std::size_t>(2 * d), 0);
  for (std::size_t k = 1; k < vertices.size(); ++k) {
    const Vertex diff = vertices[k - 1] ^ vertices[k];
    if (!std::has_single_bit(diff) || diff >= vertex_count(d)) {
      throw InvalidInput("path vertices " + std::to_string(vertices[k - 1]) +
                         " and " + std::to_string(vertices[k]) +
                         " are not adjacent");
    }
    const SignedDirection t = direction_at(vertices[k - 1], std::countr_zero(diff) + 1);
    record.directions.push_back(t);
    ++record.usage[t.index()];
  }
  record.vertices = std::move(vertices);
  return record;
}

bool in_first_use_order(const std::vector<SignedDirection>& directions) {
  AxisMask used = 0;
  for (SignedDirection t : directions) {
    if (!t.is_positive()) continue;
    const AxisMask bit = AxisMask{1} << (t.axis() - 1);
    if (used & bit) continue;
    if (t.axis() - 1 != std::countr_one(used)) return false;
    used |= bit;
  }
  return true;
}

namespace {

// Partial path handed to a worker: everything else is recomputed from it.
struct WorkItem {
  std::vector<Vertex> path;
  std::vector<SignedDirection> directions;
  std::vector<int> insertion_indegree;
  HistoryState history;
};

struct Shared {
  const SearchConfig* config = nullptr;
  const PathSink* sink = nullptr;
  std::mutex sink_mutex;
  std::atomic<std::uint64_t> accepted{0};
  std::atomic<bool> stop{false};
};

// Iterative depth-first search over rule-followable Hamiltonian paths.
class Walker {
 public:
  Walker(const SearchConfig& config, Shared& shared, SearchResult& result)
      : config_(config),
        shared_(shared),
        result_(result),
        d_(config.dimension),
        n_(static_cast<Vertex>(vertex_count(config.dimension))),
        visited_((n_ + 63) / 64, 0) {
    for (int k = 0; k <= d_; ++k) binom_[k] = binomial(d_, k);
    path_.reserve(n_);
    directions_.reserve(n_);
    first_use_.reserve(n_);
    insertion_indegree_.reserve(n_);
    frames_.reserve(n_);
  }

  void reset(const Rule& rule) {
    rule_ = &rule;
    WorkItem root;
    root.path = {0};
    root.insertion_indegree = {0};
    root.history = init_history(rule, d_);
    load(root);
  }

  void load(const WorkItem& item) {
    std::fill(visited_.begin(), visited_.end(), 0);
    hist_.fill(0);
    used_axes_ = 0;
    path_.clear();
    directions_.clear();
    first_use_.clear();
    insertion_indegree_.clear();
    frames_.clear();
    for (std::size_t k = 0; k < item.path.size(); ++k) {
      path_.push_back(item.path[k]);
      mark(item.path[k]);
      insertion_indegree_.push_back(item.insertion_indegree[k]);
      ++hist_[item.insertion_indegree[k]];
    }
    for (SignedDirection t : item.directions) {
      const AxisMask bit = AxisMask{1} << (t.axis() - 1);
      const bool first = t.is_positive() && !(used_axes_ & bit);
      if (first) used_axes_ |= bit;
      first_use_.push_back(first);
      directions_.push_back(t);
    }
    history_ = item.history;
  }

  void set_rule(const Rule& rule) { rule_ = &rule; }

  // Explores the subtree below the loaded state.  With a frontier, states
  // reaching `frontier_depth` moves are handed out instead of expanded.
  void run(std::vector<WorkItem>* frontier = nullptr, int frontier_depth = 0) {
    if (path_.size() == n_) {
      complete();
      return;
    }
    const DirectionSet root = candidates();
    if (root == 0) return;
    frames_.push_back(Frame{root, history_});
    while (!frames_.empty()) {
      if (shared_.stop.load(std::memory_order_relaxed)) return;
      Frame& top = frames_.back();
      if (top.pending == 0) {
        frames_.pop_back();
        if (!frames_.empty()) retract();
        continue;
      }
      const int index = std::countr_zero(top.pending);
      top.pending &= top.pending - 1;
      const SignedDirection t = SignedDirection::from_index(index);
      const Vertex w = path_.back() ^ (Vertex{1} << (t.axis() - 1));
      const int indeg = visited_neighbours(w);
      const bool first = t.is_positive() &&
                         !(used_axes_ & (AxisMask{1} << (t.axis() - 1)));
      if (config_.prune) {
        // A vertex entered with a single visited neighbour keeps indegree 1
        // for good; only first uses of a positive direction may create one.
        if (indeg == 1 && !first) continue;
        if (hist_[indeg] + 1 > binom_[indeg]) continue;
      }
      history_ = top.saved;
      extend(w, t, indeg, first);
      advance(history_, t, w);
      ++result_.nodes;
      if (path_.size() == n_) {
        complete();
        retract();
        continue;
      }
      if (frontier != nullptr &&
          path_.size() - 1 == static_cast<std::size_t>(frontier_depth)) {
        frontier->push_back(snapshot());
        retract();
        continue;
      }
      const DirectionSet next = candidates();
      if (next == 0) {
        retract();
        continue;
      }
      frames_.push_back(Frame{next, history_});
    }
  }

  WorkItem snapshot() const {
    return WorkItem{path_, directions_, insertion_indegree_, history_};
  }

 private:
  struct Frame {
    DirectionSet pending;
    HistoryState saved;
  };

  bool visited(Vertex v) const { return (visited_[v >> 6] >> (v & 63)) & 1U; }
  void mark(Vertex v) { visited_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void unmark(Vertex v) { visited_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

  int visited_neighbours(Vertex w) const {
    int count = 0;
    for (int i = 0; i < d_; ++i) count += visited(w ^ (Vertex{1} << i));
    return count;
  }

  DirectionSet candidates() const {
    const Vertex v = path_.back();
    DirectionSet improving = 0;
    for (int i = 0; i < d_; ++i) {
      if (visited(v ^ (Vertex{1} << i))) continue;
      improving |= DirectionSet{1} << (2 * i + ((v >> i) & 1U));
    }
    DirectionSet chosen = candidate_set(history_, improving);
    if (config_.prune) {
      // Unused positive directions are only opened in order 1, 2, ..., d.
      const int next_axis = std::countr_one(used_axes_);
      for (DirectionSet rest = chosen; rest != 0; rest &= rest - 1) {
        const int index = std::countr_zero(rest);
        const int axis = index / 2;
        if (index % 2 == 0 && !(used_axes_ & (AxisMask{1} << axis)) &&
            axis != next_axis) {
          chosen &= ~(DirectionSet{1} << index);
        }
      }
    }
    return chosen;
  }

  void extend(Vertex w, SignedDirection t, int indeg, bool first) {
    path_.push_back(w);
    directions_.push_back(t);
    first_use_.push_back(first);
    insertion_indegree_.push_back(indeg);
    mark(w);
    ++hist_[indeg];
    if (first) used_axes_ |= AxisMask{1} << (t.axis() - 1);
  }

  void retract() {
    const Vertex w = path_.back();
    unmark(w);
    --hist_[insertion_indegree_.back()];
    if (first_use_.back()) {
      used_axes_ &= ~(AxisMask{1} << (directions_.back().axis() - 1));
    }
    path_.pop_back();
    directions_.pop_back();
    first_use_.pop_back();
    insertion_indegree_.pop_back();
  }

  void complete() {
    for (int k = 0; k <= d_; ++k) {
      if (hist_[k] != binom_[k]) {
        if (config_.prune) {
          throw std::logic_error("pruned search completed a path violating "
                                 "the indegree histogram");
        }
        return;
      }
    }
    if (!config_.prune && !in_first_use_order(directions_)) return;

    const bool need_orientation = config_.verify_faces || config_.holt_klee_filter;
    bool passes = true;
    if (need_orientation) {
      const Orientation o = orient_from_path(d_, path_);
      if (config_.verify_faces && !is_uso_faces(o)) {
        throw std::logic_error("accepted path fails the face USO oracle");
      }
      if (config_.holt_klee_filter) {
        passes = check_holt_klee(o, false);
        if (passes) ++result_.holt_klee_count;
      }
    }
    ++result_.count;
    if (!passes) return;

    const std::uint64_t accepted = ++shared_.accepted;
    if (config_.limit && accepted > *config_.limit) {
      // Another worker already reached the limit.
      if (config_.holt_klee_filter) --result_.holt_klee_count;
      --result_.count;
      shared_.stop = true;
      return;
    }
    if (config_.emit_paths) {
      PathRecord record = make_path_record(d_, *rule_, path_);
      if (*shared_.sink) {
        std::lock_guard lock(shared_.sink_mutex);
        (*shared_.sink)(record);
      } else {
        result_.paths.push_back(std::move(record));
      }
    }
    if (config_.limit && accepted >= *config_.limit) {
      shared_.stop = true;
      result_.stopped_early = true;
    }
  }

  const SearchConfig& config_;
  Shared& shared_;
  SearchResult& result_;
  const Rule* rule_ = nullptr;
  int d_;
  Vertex n_;
  std::array<std::uint64_t, kMaxDimension + 1> binom_{};
  std::array<std::uint64_t, kMaxDimension + 1> hist_{};
  std::vector<std::uint64_t> visited_;
  AxisMask used_axes_ = 0;
  std::vector<Vertex> path_;
  std::vector<SignedDirection> directions_;
  std::vector<char> first_use_;
  std::vector<int> insertion_indegree_;
  HistoryState history_;
  std::vector<Frame> frames_;
};

void merge(SearchResult& into, SearchResult&& part) {
  into.count += part.count;
  into.holt_klee_count += part.holt_klee_count;
  into.nodes += part.nodes;
  into.stopped_early = into.stopped_early || part.stopped_early;
  for (PathRecord& p : part.paths) into.paths.push_back(std::move(p));
}

void validate(const SearchConfig& config) {
  check_dimension(config.dimension);
  if (config.rule.kind == RuleKind::LeastRecentlyConsidered &&
      config.rule.ordering.empty()) {
    throw InvalidInput(
        "the least-recently considered rule needs a fixed ordering; use "
        "enumerate_lrc_all_orderings to range over all of them");
  }
  if (config.split_depth < 0 ||
      static_cast<std::uint64_t>(config.split_depth) >=
          vertex_count(config.dimension)) {
    throw InvalidInput("split depth must lie in [0, 2^d)");
  }
  if (config.threads < 1) throw InvalidInput("thread count must be >= 1");
}

}  // namespace

SearchResult enumerate_hamiltonian(const SearchConfig& config,
                                   const PathSink& sink) {
  validate(config);
  Shared shared;
  shared.config = &config;
  shared.sink = &sink;

  SearchResult total;
  int split = config.split_depth;
  if (config.threads > 1 && split == 0) {
    split = std::min<int>(config.dimension + 3,
                          static_cast<int>(vertex_count(config.dimension)) - 1);
  }
  if (split == 0) {
    Walker walker(config, shared, total);
    walker.reset(config.rule);
    walker.run();
    return total;
  }

  std::vector<WorkItem> items;
  {
    Walker walker(config, shared, total);
    walker.reset(config.rule);
    walker.run(&items, split);
  }
  std::vector<SearchResult> parts(items.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < items.size(); i = next++) {
      if (shared.stop) break;
      SearchResult part;
      Walker item_walker(config, shared, part);
      item_walker.set_rule(config.rule);
      item_walker.load(items[i]);
      item_walker.run();
      parts[i] = std::move(part);
    }
  };
  const int threads = std::max(1, config.threads);
  if (threads == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(work);
    for (std::thread& t : pool) t.join();
  }
  // Work items are merged in tree order, so collected paths come out in the
  // same order as an unsplit run.
  for (SearchResult& part : parts) merge(total, std::move(part));
  return total;
}

LrcResult enumerate_lrc_all_orderings(int d, bool holt_klee_filter,
                                      int threads, bool prune) {
  check_dimension(d);
  if (threads < 1) throw InvalidInput("thread count must be >= 1");
  const int m = 2 * d;
  SearchConfig config;
  config.dimension = d;
  config.rule.kind = RuleKind::LeastRecentlyConsidered;
  config.emit_paths = true;
  config.prune = prune;

  struct Part {
    std::uint64_t orderings = 0;
    std::uint64_t accepted = 0;
    std::vector<PathRecord> paths;
  };
  // One work item per leading direction of the ordering.
  std::vector<Part> parts(static_cast<std::size_t>(m));
  std::atomic<int> next{0};
  auto work = [&] {
    for (int first = next++; first < m; first = next++) {
      Part& part = parts[static_cast<std::size_t>(first)];
      Shared shared;
      shared.config = &config;
      const PathSink no_sink;
      shared.sink = &no_sink;
      SearchResult result;
      Walker walker(config, shared, result);
      std::vector<int> rest;
      for (int i = 0; i < m; ++i) {
        if (i != first) rest.push_back(i);
      }
      Rule rule{RuleKind::LeastRecentlyConsidered, {}};
      rule.ordering.resize(static_cast<std::size_t>(m));
      do {
        rule.ordering[0] = SignedDirection::from_index(first);
        for (int i = 1; i < m; ++i) {
          rule.ordering[i] = SignedDirection::from_index(rest[i - 1]);
        }
        ++part.orderings;
        walker.reset(rule);
        walker.run();
        if (!result.paths.empty()) {
          ++part.accepted;
          part.paths.push_back(std::move(result.paths.back()));
          result.paths.clear();
        }
      } while (std::next_permutation(rest.begin(), rest.end()));
    }
  };
  if (threads == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(work);
    for (std::thread& t : pool) t.join();
  }

  LrcResult out;
  std::vector<PathRecord> all;
  for (Part& part : parts) {
    out.orderings += part.orderings;
    out.accepted_orderings += part.accepted;
    for (PathRecord& p : part.paths) all.push_back(std::move(p));
  }
  // Keep the first ordering (in enumeration order) reaching each path.
  std::stable_sort(all.begin(), all.end(),
                   [](const PathRecord& a, const PathRecord& b) {
                     return a.vertices < b.vertices;
                   });
  for (PathRecord& p : all) {
    if (!out.paths.empty() && out.paths.back().vertices == p.vertices) continue;
    out.paths.push_back(std::move(p));
  }
  out.count = out.paths.size();
  if (holt_klee_filter) {
    for (const PathRecord& p : out.paths) {
      if (check_holt_klee(orient_from_path(d, p.vertices), false)) ++out.holt_klee_count;
    }
  }
  return out;
}

PathStats path_stats(const PathRecord& p) {
  const int d = p.dimension;
  check_dimension(d);
  PathStats stats;
  stats.usage.assign(static_cast<std::size_t>(2 * d), 0);
  for (SignedDirection t : p.directions) ++stats.usage[t.index()];
  stats.total_moves = p.directions.size();
  stats.min_usage = *std::min_element(stats.usage.begin(), stats.usage.end());
  stats.usage_bound = std::ldexp(1.0, d - 2) / d - 1.5;
  stats.usage_bound_ceil = static_cast<std::int64_t>(std::ceil(stats.usage_bound));
  stats.meets_usage_bound =
      static_cast<std::int64_t>(stats.min_usage) >= stats.usage_bound_ceil;
  const std::size_t opening =
      std::min(p.directions.size(), static_cast<std::size_t>(2 * d - 1));
  DirectionSet seen = 0;
  stats.distinct_opening = true;
  for (std::size_t k = 0; k < opening; ++k) {
    if (seen & p.directions[k].bit()) stats.distinct_opening = false;
    seen |= p.directions[k].bit();
  }
  return stats;
}

}  // namespace uso
