#include "lelkit/tree_enum.hpp"

#include <algorithm>
#include <cstdio>
#include <mutex>
#include <sstream>
#include <unordered_set>

#include "lelkit/error.hpp"
#include "lelkit/parallel.hpp"

namespace lelkit {

Graph tree_from_level_sequence(const LevelSequence& levels) {
  const auto& seq = levels.seq;
  if (seq.empty() || seq[0] != 0) throw Error(ErrorCode::ParseError, "level sequence must start at 0");
  std::vector<Edge> edges;
  std::vector<Vertex> ancestors{0};  // ancestors[d] = latest vertex seen at depth d
  for (std::size_t i = 1; i < seq.size(); ++i) {
    const int d = seq[i];
    if (d < 1 || static_cast<std::size_t>(d) > ancestors.size()) {
      throw Error(ErrorCode::ParseError, "level sequence jumps by more than one");
    }
    edges.emplace_back(ancestors[static_cast<std::size_t>(d) - 1], static_cast<Vertex>(i));
    ancestors.resize(static_cast<std::size_t>(d));
    ancestors.push_back(static_cast<Vertex>(i));
  }
  return Graph(seq.size(), std::move(edges));
}

std::string format_level_sequence(const LevelSequence& levels) {
  std::string out = std::to_string(levels.order()) + ":";
  for (std::size_t i = 0; i < levels.seq.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(levels.seq[i]);
  }
  return out;
}

LevelSequence parse_level_sequence(const std::string& line) {
  const auto colon = line.find(':');
  if (colon == std::string::npos) throw Error(ErrorCode::ParseError, "expected \"n:levels\"");
  LevelSequence out;
  std::size_t n = 0;
  try {
    n = std::stoul(line.substr(0, colon));
    std::stringstream body(line.substr(colon + 1));
    std::string item;
    while (std::getline(body, item, ',')) out.seq.push_back(std::stoi(item));
  } catch (const std::logic_error&) {
    throw Error(ErrorCode::ParseError, "malformed level sequence \"" + line + "\"");
  }
  if (out.seq.size() != n) throw Error(ErrorCode::ParseError, "level sequence length differs from n");
  tree_from_level_sequence(out);  // validates
  return out;
}

namespace {

// Second occurrence of depth 1 splits the layout into the root's first
// subtree ("left", re-rooted) and everything else ("rest").
std::size_t split_point(const std::vector<int>& layout) {
  bool seen_one = false;
  for (std::size_t i = 0; i < layout.size(); ++i) {
    if (layout[i] == 1) {
      if (seen_one) return i;
      seen_one = true;
    }
  }
  return layout.size();
}

// Beyer-Hedetniemi successor of a rooted level sequence. p < 0 selects the
// last position whose depth exceeds one. Returns false when exhausted.
bool next_rooted(std::vector<int>& layout, std::ptrdiff_t p = -1) {
  if (p < 0) {
    p = static_cast<std::ptrdiff_t>(layout.size()) - 1;
    while (p > 0 && layout[static_cast<std::size_t>(p)] == 1) --p;
  }
  if (p == 0) return false;
  std::ptrdiff_t q = p - 1;
  while (layout[static_cast<std::size_t>(q)] != layout[static_cast<std::size_t>(p)] - 1) --q;
  for (auto i = static_cast<std::size_t>(p); i < layout.size(); ++i) {
    layout[i] = layout[i - static_cast<std::size_t>(p) + static_cast<std::size_t>(q)];
  }
  return true;
}

// Accepts the layout if it is a canonical free-tree representative, otherwise
// jumps ahead to the next candidate that is.
void settle_free(std::vector<int>& layout) {
  const std::size_t m = split_point(layout);
  const auto left_begin = layout.begin() + 1;
  const auto left_end = layout.begin() + static_cast<std::ptrdiff_t>(m);
  const int left_height = *std::max_element(left_begin, left_end) - 1;
  const int rest_height = m < layout.size() ? *std::max_element(layout.begin() + static_cast<std::ptrdiff_t>(m), layout.end()) : 0;
  const std::size_t left_size = m - 1;
  const std::size_t rest_size = layout.size() - m + 1;

  bool valid = rest_height >= left_height;
  if (valid && rest_height == left_height) {
    if (left_size > rest_size) {
      valid = false;
    } else if (left_size == rest_size) {
      // compare left (depths minus one) against rest = (0, layout[m..])
      std::vector<int> left;
      for (auto it = left_begin; it != left_end; ++it) left.push_back(*it - 1);
      std::vector<int> rest{0};
      rest.insert(rest.end(), layout.begin() + static_cast<std::ptrdiff_t>(m), layout.end());
      valid = !(left > rest);
    }
  }
  if (valid) return;

  const auto p = static_cast<std::ptrdiff_t>(left_size);
  const int depth_at_p = layout[static_cast<std::size_t>(p)];
  next_rooted(layout, p);
  if (depth_at_p > 2) {
    const std::size_t m2 = split_point(layout);
    const int new_left_height = *std::max_element(layout.begin() + 1, layout.begin() + static_cast<std::ptrdiff_t>(m2)) - 1;
    const auto suffix = static_cast<std::size_t>(new_left_height) + 1;  // depths 1..h+1
    for (std::size_t i = 0; i < suffix; ++i) {
      layout[layout.size() - suffix + i] = static_cast<int>(i) + 1;
    }
  }
}

}  // namespace

FreeTreeGenerator::FreeTreeGenerator(std::size_t n, std::size_t ceiling) : n_(n) {
  if (n == 0) throw Error(ErrorCode::InvalidOrder, "trees need at least one vertex");
  if (n > ceiling) {
    throw Error(ErrorCode::OrderTooLarge,
                "order " + std::to_string(n) + " exceeds ceiling " + std::to_string(ceiling));
  }
  // Path rooted at its center.
  for (std::size_t i = 0; i <= n / 2; ++i) layout_.push_back(static_cast<int>(i));
  for (std::size_t i = 1; i < (n + 1) / 2; ++i) layout_.push_back(static_cast<int>(i));
}

std::optional<LevelSequence> FreeTreeGenerator::next() {
  if (done_) return std::nullopt;
  if (n_ <= 2) {
    done_ = true;
    return LevelSequence{layout_};
  }
  if (started_ && !next_rooted(layout_)) {
    done_ = true;
    return std::nullopt;
  }
  started_ = true;
  settle_free(layout_);
  return LevelSequence{layout_};
}

std::vector<LevelSequence> all_free_trees(std::size_t n, std::size_t ceiling) {
  FreeTreeGenerator gen(n, ceiling);
  std::vector<LevelSequence> out;
  while (auto t = gen.next()) out.push_back(std::move(*t));
  return out;
}

namespace {

std::vector<Vertex> tree_centers(const Graph& t) {
  const std::size_t n = t.order();
  if (n <= 2) {
    std::vector<Vertex> all;
    for (std::size_t v = 0; v < n; ++v) all.push_back(static_cast<Vertex>(v));
    return all;
  }
  std::vector<std::size_t> degree(n);
  std::vector<Vertex> layer;
  for (std::size_t v = 0; v < n; ++v) {
    degree[v] = t.degree(static_cast<Vertex>(v));
    if (degree[v] <= 1) layer.push_back(static_cast<Vertex>(v));
  }
  std::size_t remaining = n;
  while (remaining > 2) {
    remaining -= layer.size();
    std::vector<Vertex> next_layer;
    for (Vertex leaf : layer) {
      for (Vertex w : t.neighbors(leaf)) {
        if (--degree[w] == 1) next_layer.push_back(w);
      }
    }
    layer.swap(next_layer);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

std::string rooted_code(const Graph& t, Vertex root) {
  const std::size_t n = t.order();
  std::vector<Vertex> order{root};
  std::vector<Vertex> parent(n, root);
  std::vector<bool> seen(n, false);
  seen[root] = true;
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (Vertex w : t.neighbors(order[head])) {
      if (!seen[w]) {
        seen[w] = true;
        parent[w] = order[head];
        order.push_back(w);
      }
    }
  }
  std::vector<std::vector<std::string>> child_codes(n);
  std::vector<std::string> code(n);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    auto& kids = child_codes[*it];
    std::sort(kids.begin(), kids.end());
    std::string& c = code[*it];
    c.push_back('(');
    for (auto& k : kids) c += k;
    c.push_back(')');
    kids.clear();
    if (*it != root) child_codes[parent[*it]].push_back(std::move(c));
  }
  return code[root];
}

}  // namespace

LevelSequence level_sequence_of(const Graph& tree) {
  if (!is_tree(tree)) throw Error(ErrorCode::NotATree, "level_sequence_of needs a tree");
  const Vertex root = tree_centers(tree).front();
  LevelSequence out;
  std::vector<std::pair<Vertex, int>> stack{{root, 0}};
  std::vector<bool> seen(tree.order(), false);
  seen[root] = true;
  while (!stack.empty()) {
    const auto [v, depth] = stack.back();
    stack.pop_back();
    out.seq.push_back(depth);
    const auto& nbrs = tree.neighbors(v);
    for (auto it = nbrs.rbegin(); it != nbrs.rend(); ++it) {
      if (!seen[*it]) {
        seen[*it] = true;
        stack.emplace_back(*it, depth + 1);
      }
    }
  }
  return out;
}

CanonicalCode canonical_code(const Graph& t) {
  if (!is_tree(t)) throw Error(ErrorCode::NotATree, "canonical_code needs a tree");
  const auto centers = tree_centers(t);
  std::string best = rooted_code(t, centers.front());
  if (centers.size() == 2) best = std::min(best, rooted_code(t, centers.back()));
  return CanonicalCode{std::move(best)};
}

std::string tree_id(const CanonicalCode& code) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : code.code) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Graph tree_from_pruefer(std::span<const Vertex> sequence, std::size_t n) {
  if (n < 2 || sequence.size() + 2 != n) {
    throw Error(ErrorCode::InvalidOrder, "Pruefer sequence length must be n-2");
  }
  std::vector<std::size_t> degree(n, 1);
  for (Vertex v : sequence) {
    if (v >= n) throw Error(ErrorCode::InvalidGraph, "Pruefer symbol out of range");
    ++degree[v];
  }
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  std::size_t ptr = 0;
  while (degree[ptr] != 1) ++ptr;
  std::size_t leaf = ptr;
  for (Vertex v : sequence) {
    edges.emplace_back(static_cast<Vertex>(leaf), v);
    if (--degree[v] == 1 && v < ptr) {
      leaf = v;
    } else {
      ++ptr;
      while (degree[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  edges.emplace_back(static_cast<Vertex>(leaf), static_cast<Vertex>(n - 1));
  return Graph(n, std::move(edges));
}

std::size_t prufer_census(std::size_t n, unsigned jobs) {
  if (n < 2) throw Error(ErrorCode::InvalidOrder, "census needs n >= 2");
  if (n > kPrueferCensusCeiling) {
    throw Error(ErrorCode::OrderTooLarge, "census is limited to n <= " + std::to_string(kPrueferCensusCeiling));
  }
  if (n == 2) return 1;

  const std::size_t len = n - 2;
  // Partition by the leading symbol; each part enumerates n^(len-1) sequences.
  std::vector<std::unordered_set<std::string>> parts(n);
  parallel_for(
      n, jobs,
      [&](std::size_t lead) {
        std::vector<Vertex> seq(len, 0);
        seq[0] = static_cast<Vertex>(lead);
        auto& seen = parts[lead];
        for (;;) {
          seen.insert(canonical_code(tree_from_pruefer(seq, n)).code);
          std::size_t pos = len;
          while (pos > 1) {
            --pos;
            if (++seq[pos] < n) break;
            seq[pos] = 0;
            if (pos == 1) return;
          }
          if (len == 1) return;
        }
      },
      1);

  std::unordered_set<std::string> all;
  for (auto& part : parts) all.merge(part);
  return all.size();
}

}  // namespace lelkit
