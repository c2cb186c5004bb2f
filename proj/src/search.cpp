#include "fwdarc/search.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

namespace fwdarc {
namespace {

using Row = std::vector<std::uint64_t>;

class CycleSearch {
 public:
  CycleSearch(const Digraph& d, Deadline deadline)
      : n_(d.order()), words_((static_cast<std::size_t>(n_) + 63) / 64), deadline_(deadline) {
    out_.assign(static_cast<std::size_t>(n_), Row(words_, 0));
    in_.assign(static_cast<std::size_t>(n_), Row(words_, 0));
    for (const Arc& a : d.arcs()) {
      set(out_[static_cast<std::size_t>(a.tail)], a.head);
      set(in_[static_cast<std::size_t>(a.head)], a.tail);
    }
  }

  std::optional<VertexSeq> run() {
    if (n_ < 2) return std::nullopt;
    unvisited_.assign(words_, 0);
    for (Vertex v = 1; v < n_; ++v) set(unvisited_, v);
    path_ = {0};
    if (dfs(0)) return path_;
    return std::nullopt;
  }

 private:
  static void set(Row& r, Vertex v) { r[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63); }
  static void clear(Row& r, Vertex v) { r[static_cast<std::size_t>(v) >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
  static bool test(const Row& r, Vertex v) { return (r[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1U; }

  bool meets(const Row& a, const Row& b) const {
    for (std::size_t i = 0; i < words_; ++i) {
      if (a[i] & b[i]) return true;
    }
    return false;
  }

  int count_meet(const Row& a, const Row& b) const {
    int c = 0;
    for (std::size_t i = 0; i < words_; ++i) c += std::popcount(a[i] & b[i]);
    return c;
  }

  bool feasible(Vertex end) {
    const Vertex start = path_.front();
    for (std::size_t wi = 0; wi < words_; ++wi) {
      for (std::uint64_t bits = unvisited_[wi]; bits != 0; bits &= bits - 1) {
        const auto w = static_cast<Vertex>(wi * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
        const Row& o = out_[static_cast<std::size_t>(w)];
        const Row& i = in_[static_cast<std::size_t>(w)];
        if (!test(o, start) && !meets(o, unvisited_)) return false;
        if (!test(i, end) && !meets(i, unvisited_)) return false;
      }
    }
    return true;
  }

  bool dfs(Vertex end) {
    if (static_cast<int>(path_.size()) == n_) return test(out_[static_cast<std::size_t>(end)], path_.front());
    if ((++nodes_ & 1023U) == 0 && deadline_ && std::chrono::steady_clock::now() > *deadline_) {
      throw TimeLimitExceeded("Hamilton cycle search exceeded its time limit");
    }
    if (!feasible(end)) return false;
    std::vector<std::pair<int, Vertex>> next;
    const Row& o = out_[static_cast<std::size_t>(end)];
    for (std::size_t wi = 0; wi < words_; ++wi) {
      for (std::uint64_t bits = o[wi] & unvisited_[wi]; bits != 0; bits &= bits - 1) {
        const auto w = static_cast<Vertex>(wi * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
        next.push_back({count_meet(out_[static_cast<std::size_t>(w)], unvisited_), w});
      }
    }
    std::sort(next.begin(), next.end());
    for (const auto& [_, w] : next) {
      clear(unvisited_, w);
      path_.push_back(w);
      if (dfs(w)) return true;
      path_.pop_back();
      set(unvisited_, w);
    }
    return false;
  }

  int n_;
  std::size_t words_;
  Deadline deadline_;
  std::vector<Row> out_, in_;
  Row unvisited_;
  VertexSeq path_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

std::optional<VertexSeq> find_hamilton_cycle(const Digraph& d, Deadline deadline) {
  return CycleSearch(d, deadline).run();
}

}  // namespace fwdarc
