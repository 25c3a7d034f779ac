#pragma once

/**
 * @file path_graph.hpp
 * @brief Graph structure of a closed index path and the regularity certificate.
 *
 * Vertices are the distinct index labels; edges are the orientation-normalized
 * position keys from paths.hpp, grouped into classes. A path of length 2mp is
 * regular when it visits mp+1 distinct labels and every edge class has
 * multiplicity exactly two. For such paths the edge classes necessarily form
 * a tree on the vertices and every label occurs at positions of a single
 * vertex type; both facts are recorded as separate certificate fields so they
 * can be checked independently rather than assumed.
 */

#include <map>
#include <numeric>
#include <vector>

#include "fuss/paths.hpp"

namespace fuss {

struct PathGraph {
    unsigned m = 1;
    unsigned p = 0;
    unsigned vertex_count = 0;                          // V
    std::map<std::pair<int, int>, std::vector<unsigned>> edge_classes;  // key -> positions
    std::vector<std::vector<unsigned>> occurrences;     // label-1 -> positions
};

inline PathGraph build_path_graph(const IndexPath& path) {
    if (!is_canonical(path))
        throw std::invalid_argument("build_path_graph: path must be in canonical labeling");
    PathGraph g;
    g.m = path.m;
    g.p = path.p;
    for (unsigned j = 0; j < path.length(); ++j) {
        int v = path.idx[j];
        if (static_cast<unsigned>(v) > g.vertex_count) {
            g.vertex_count = v;
            g.occurrences.resize(v);
        }
        g.occurrences[v - 1].push_back(j);
        g.edge_classes[edge_class_key(path, j)].push_back(j);
    }
    return g;
}

namespace detail {

class UnionFind {
  public:
    explicit UnionFind(unsigned n) : parent_(n) {
        std::iota(parent_.begin(), parent_.end(), 0u);
    }
    unsigned find(unsigned x) {
        while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
        return x;
    }
    bool unite(unsigned a, unsigned b) {  // false when already connected
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent_[a] = b;
        return true;
    }

  private:
    std::vector<unsigned> parent_;
};

}  // namespace detail

struct RegularCertificate {
    unsigned m = 1;
    unsigned p = 0;
    unsigned vertex_count = 0;  // V
    unsigned edge_count = 0;    // E, number of distinct edge classes
    bool vertex_count_ok = false;  // V == mp + 1
    bool class_sizes_ok = false;   // every edge class has multiplicity 2
    bool tree_ok = false;          // edge classes form a spanning tree
    bool types_ok = false;         // each label sits at one vertex type only

    bool regular() const { return vertex_count_ok && class_sizes_ok; }
};

inline RegularCertificate certify(const PathGraph& g) {
    RegularCertificate cert;
    cert.m = g.m;
    cert.p = g.p;
    cert.vertex_count = g.vertex_count;
    cert.edge_count = static_cast<unsigned>(g.edge_classes.size());
    if (g.p == 0) {  // empty path: regular by convention
        cert.vertex_count_ok = cert.class_sizes_ok = cert.tree_ok = cert.types_ok = true;
        return cert;
    }

    cert.vertex_count_ok = (cert.vertex_count == g.m * g.p + 1);
    cert.class_sizes_ok = true;
    for (const auto& [key, positions] : g.edge_classes)
        if (positions.size() != 2) cert.class_sizes_ok = false;

    // Spanning tree: E = V - 1 and every class merges two new components.
    cert.tree_ok = (cert.edge_count + 1 == cert.vertex_count);
    if (cert.tree_ok) {
        detail::UnionFind uf(cert.vertex_count);
        for (const auto& [key, positions] : g.edge_classes)
            if (!uf.unite(key.first - 1, key.second - 1)) {
                cert.tree_ok = false;
                break;
            }
    }

    cert.types_ok = true;
    for (const auto& occ : g.occurrences) {
        for (unsigned j : occ)
            if (vertex_type(j, g.m) != vertex_type(occ.front(), g.m)) cert.types_ok = false;
    }
    return cert;
}

inline bool is_regular(const IndexPath& path) {
    return certify(build_path_graph(canonicalize(path))).regular();
}

}  // namespace fuss
