#pragma once

/**
 * @file enumerate.hpp
 * @brief Exhaustive generation of canonical regular paths at fixed (m, p).
 *
 * Depth-first search over restricted-growth strings, emitting paths in
 * lexicographic order. Pruning uses only label and edge-multiplicity
 * arithmetic, never vertex types, so type structure stays an observable
 * property of the output rather than an input assumption.
 */

#include <functional>
#include <map>
#include <vector>

#include "fuss/errors.hpp"
#include "fuss/path_graph.hpp"
#include "fuss/paths.hpp"

namespace fuss {

namespace detail {

class PathEnumerator {
  public:
    PathEnumerator(unsigned m, unsigned p, const std::function<void(const IndexPath&)>& emit)
        : m_(m), p_(p), len_(2 * m * p), target_(m * p + 1), emit_(emit) {
        path_.m = m;
        path_.p = p;
        path_.canonical = true;
    }

    void run() {
        if (len_ == 0) {  // empty path: regular by convention
            emit_(path_);
            return;
        }
        path_.idx.assign(len_, 0);
        path_.idx[0] = 1;
        extend(1, 1);
    }

  private:
    std::pair<int, int> key_at(unsigned j) const {
        int a = path_.idx[j];
        int b = path_.idx[(j + 1) % len_];
        return spin(j, m_) > 0 ? std::make_pair(a, b) : std::make_pair(b, a);
    }

    // Returns false (and leaves counts untouched) when the class would
    // exceed multiplicity two.
    bool add_edge(unsigned j) {
        auto key = key_at(j);
        int& c = edge_count_[key];
        if (c == 2) return false;
        if (++c == 1)
            ++open_;
        else
            --open_;
        return true;
    }

    void remove_edge(unsigned j) {
        auto key = key_at(j);
        auto it = edge_count_.find(key);
        if (--it->second == 1)
            ++open_;
        else
            --open_;
        if (it->second == 0) edge_count_.erase(it);
    }

    void extend(unsigned j, unsigned used) {
        if (j == len_) {
            if (used == target_ && open_ == 0) emit_(path_);
            return;
        }
        // Each unfilled position introduces at most one fresh label.
        if (used + (len_ - j) < target_) return;
        unsigned limit = used < target_ ? used + 1 : used;
        for (unsigned v = 1; v <= limit; ++v) {
            path_.idx[j] = static_cast<int>(v);
            if (!add_edge(j - 1)) continue;
            bool closing_ok = true;
            if (j + 1 == len_) closing_ok = add_edge(j);
            if (closing_ok) {
                // Every open class needs one of the remaining edges; leftover
                // edges must pair among themselves.
                unsigned remaining = (j + 1 == len_) ? 0 : len_ - j;
                if (open_ <= remaining && (remaining - open_) % 2 == 0)
                    extend(j + 1, v > used ? used + 1 : used);
                if (j + 1 == len_) remove_edge(j);
            }
            remove_edge(j - 1);
        }
        path_.idx[j] = 0;
    }

    unsigned m_, p_, len_, target_;
    const std::function<void(const IndexPath&)>& emit_;
    IndexPath path_;
    std::map<std::pair<int, int>, int> edge_count_;
    unsigned open_ = 0;
};

}  // namespace detail

/// Visits every canonical regular (m, p)-path in lexicographic order.
/// The work scales with the search tree, so lengths 2mp past the budget
/// are refused up front.
inline void for_each_regular_path(unsigned m, unsigned p,
                                  const std::function<void(const IndexPath&)>& fn,
                                  unsigned budget = 16) {
    if (m < 1) throw std::invalid_argument("for_each_regular_path: m must be >= 1");
    if (2 * m * p > budget)
        throw budget_exceeded("path length " + std::to_string(2 * m * p) +
                              " exceeds enumeration budget " + std::to_string(budget));
    detail::PathEnumerator(m, p, fn).run();
}

inline std::vector<IndexPath> enumerate_regular_paths(unsigned m, unsigned p,
                                                      unsigned budget = 16) {
    std::vector<IndexPath> out;
    for_each_regular_path(m, p, [&](const IndexPath& path) { out.push_back(path); }, budget);
    return out;
}

}  // namespace fuss
