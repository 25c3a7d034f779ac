#pragma once

/**
 * @file paths.hpp
 * @brief Closed index paths of length 2mp and their position structure.
 *
 * A path stores indices i_0..i_{2mp-1}; the closing step uses i_{2mp} = i_0.
 * Position j carries a sign: '+' when j mod 2m lands in {0..m-1}, '-'
 * otherwise. The edge key of position j is (i_j, i_{j+1}) under '+', and
 * the reversed pair under '-'; positions with equal keys belong to the
 * same edge class. Canonical form is restricted-growth labeling: indices
 * are renamed 1,2,3,... in order of first occurrence, so i_0 = 1.
 */

#include <cstdint>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace fuss {

inline int spin(unsigned j, unsigned m) {
    return (j % (2 * m)) < m ? +1 : -1;
}

/// Vertex type of position j: residues 0..m map to themselves, residues
/// m+1..2m-1 fold back to 2m - residue. Range {0..m}.
inline unsigned vertex_type(unsigned j, unsigned m) {
    unsigned r = j % (2 * m);
    return r < m ? r : 2 * m - r;
}

struct IndexPath {
    unsigned m = 1;
    unsigned p = 0;
    std::vector<int> idx;   // length 2mp, values >= 1
    bool canonical = false;

    unsigned length() const { return 2 * m * p; }

    int at(unsigned j) const {  // cyclic: position 2mp wraps to 0
        return idx[j % idx.size()];
    }

    bool operator==(const IndexPath& o) const {
        return m == o.m && p == o.p && idx == o.idx;
    }
    bool operator<(const IndexPath& o) const { return idx < o.idx; }
};

/// Edge key of position j, already orientation-normalized by the sign.
inline std::pair<int, int> edge_class_key(const IndexPath& path, unsigned j) {
    if (path.p == 0) throw std::invalid_argument("edge_class_key: empty path has no edges");
    if (j >= path.length()) throw std::out_of_range("edge_class_key: position past path length");
    int a = path.idx[j];
    int b = path.at(j + 1);
    return spin(j, path.m) > 0 ? std::make_pair(a, b) : std::make_pair(b, a);
}

inline IndexPath canonicalize(const IndexPath& path) {
    IndexPath out = path;
    std::map<int, int> rename;
    int next = 1;
    for (auto& v : out.idx) {
        auto [it, fresh] = rename.try_emplace(v, next);
        if (fresh) ++next;
        v = it->second;
    }
    out.canonical = true;
    return out;
}

inline bool is_canonical(const IndexPath& path) {
    int seen = 0;
    for (int v : path.idx) {
        if (v < 1 || v > seen + 1) return false;
        if (v == seen + 1) ++seen;
    }
    return true;
}

/// Interchange line: "m p i_0 i_1 ... i_{2mp-1}".
inline std::string format_path_line(const IndexPath& path) {
    std::ostringstream os;
    os << path.m << ' ' << path.p;
    for (int v : path.idx) os << ' ' << v;
    return os.str();
}

inline IndexPath parse_path_line(const std::string& line) {
    std::istringstream is(line);
    IndexPath path;
    if (!(is >> path.m >> path.p)) throw std::invalid_argument("parse_path_line: missing m p header");
    if (path.m < 1) throw std::invalid_argument("parse_path_line: m must be >= 1");
    int v;
    while (is >> v) path.idx.push_back(v);
    if (path.idx.size() != path.length())
        throw std::invalid_argument("parse_path_line: expected " + std::to_string(path.length()) +
                                    " indices, got " + std::to_string(path.idx.size()));
    path.canonical = is_canonical(path);
    return path;
}

}  // namespace fuss
