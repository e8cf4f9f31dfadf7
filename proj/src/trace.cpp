#include "uso/trace.hpp"

#include <bit>

namespace uso {

Vertex global_sink(const Orientation& o) {
  std::uint64_t sinks = 0;
  Vertex sink = 0;
  for (Vertex v = 0; v < o.size(); ++v) {
    if (o.outmap(v) == 0) {
      ++sinks;
      sink = v;
    }
  }
  if (sinks != 1) {
    throw NotUso("orientation has " + std::to_string(sinks) +
                 " global sinks, expected exactly one");
  }
  return sink;
}

namespace {

DirectionSet outgoing_directions(const Orientation& o, Vertex v) {
  DirectionSet out = 0;
  for (AxisMask rest = o.outmap(v); rest != 0; rest &= rest - 1) {
    const int axis = std::countr_zero(rest) + 1;
    out |= direction_at(v, axis).bit();
  }
  return out;
}

}  // namespace

std::vector<PathRecord> trace(const Orientation& o, const Rule& rule,
                              Vertex start, const TracePolicy& policy) {
  const int d = o.dimension();
  if (!is_vertex(d, start)) {
    throw InvalidInput("start vertex " + std::to_string(start) +
                       " outside the cube");
  }
  if (!is_acyclic(o) || !is_uso_faces(o)) {
    throw NotUso("trace needs an acyclic unique sink orientation");
  }
  const std::uint64_t cap =
      policy.max_steps == 0 ? vertex_count(d) : policy.max_steps;

  struct Frame {
    DirectionSet pending;
    HistoryState history;
  };
  std::vector<PathRecord> out;
  std::vector<Vertex> path{start};
  HistoryState history = init_history(rule, d);

  auto choices = [&](const HistoryState& h, Vertex v) {
    const DirectionSet all = candidate_set(h, outgoing_directions(o, v));
    if (policy.ties == TieBreak::LowestIndex && all != 0) return all & (~all + 1);
    return all;
  };

  std::vector<Frame> frames;
  frames.push_back(Frame{choices(history, start), history});
  if (frames.back().pending == 0) {
    out.push_back(make_path_record(d, rule, path));
    return out;
  }
  while (!frames.empty()) {
    Frame& top = frames.back();
    if (top.pending == 0) {
      frames.pop_back();
      if (!frames.empty()) path.pop_back();
      continue;
    }
    const SignedDirection t = SignedDirection::from_index(std::countr_zero(top.pending));
    top.pending &= top.pending - 1;
    if (path.size() > cap) {
      throw StepLimitExceeded("walk exceeded " + std::to_string(cap) +
                              " moves; the orientation is corrupted");
    }
    const Vertex w = move(d, path.back(), t);
    HistoryState next = advanced(top.history, t, w);
    path.push_back(w);
    const DirectionSet branch = choices(next, w);
    if (branch == 0) {
      out.push_back(make_path_record(d, rule, path));
      path.pop_back();
      continue;
    }
    frames.push_back(Frame{branch, std::move(next)});
  }
  return out;
}

}  // namespace uso
