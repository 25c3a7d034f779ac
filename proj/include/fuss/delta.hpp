#pragma once

/**
 * @file delta.hpp
 * @brief Length-reducing bijection between regular (m, p)-paths and
 *        (m+1)-tuples of shorter regular paths.
 *
 * Composition: given regular parts (q_0, ..., q_m) with orders summing to
 * p - 1, emit the blocks of each part in turn, part k read cyclically from
 * its own position k, each block followed by a repeat of its starting
 * label, then walk back through the block anchors in reverse. Labels of
 * distinct parts are kept disjoint and the result is canonicalized.
 *
 * Inversion: the anchor label of part k is read off the composite at a
 * fixed position (the path start for k = 0, the return leg for
 * 0 < k < m, the slot before the return leg for k = m); the positions
 * where that label recurs delimit block k. Block spans must be multiples
 * of 2m and blocks must appear in order without overlap; violations throw,
 * since they mean the input cannot lie in the image. Adjacency of
 * consecutive blocks always holds for composites and is reported rather
 * than enforced.
 */

#include <algorithm>
#include <string>
#include <vector>

#include "fuss/errors.hpp"
#include "fuss/path_graph.hpp"
#include "fuss/paths.hpp"

namespace fuss {

inline IndexPath delta_compose(unsigned m, const std::vector<IndexPath>& parts) {
    if (m < 1) throw std::invalid_argument("delta_compose: m must be >= 1");
    if (parts.size() != m + 1)
        throw invalid_part("delta_compose: expected " + std::to_string(m + 1) + " parts, got " +
                           std::to_string(parts.size()));
    unsigned p = 1;
    std::vector<IndexPath> canon;
    canon.reserve(parts.size());
    for (unsigned k = 0; k <= m; ++k) {
        if (parts[k].m != m)
            throw invalid_part("delta_compose: part " + std::to_string(k) + " has mismatched m");
        canon.push_back(canonicalize(parts[k]));
        if (!certify(build_path_graph(canon.back())).regular())
            throw invalid_part("delta_compose: part " + std::to_string(k) + " is not regular");
        p += parts[k].p;
    }

    IndexPath out;
    out.m = m;
    out.p = p;
    out.idx.reserve(2 * m * p);
    std::vector<int> anchor(m + 1);  // label repeated after block k
    int base = 0;                    // labels of earlier parts stay below base
    for (unsigned k = 0; k <= m; ++k) {
        const IndexPath& part = canon[k];
        unsigned len = part.length();
        if (len == 0) {
            anchor[k] = ++base;
        } else {
            for (unsigned t = 0; t < len; ++t) out.idx.push_back(base + part.idx[(k + t) % len]);
            anchor[k] = base + part.idx[k];
            base += m * part.p + 1;  // canonical part uses labels 1..mp+1
        }
        out.idx.push_back(anchor[k]);
    }
    for (unsigned k = m - 1; k >= 1; --k) out.idx.push_back(anchor[k]);
    return canonicalize(out);
}

struct DeltaInverse {
    std::vector<IndexPath> parts;                  // m+1 canonical regular paths
    std::vector<std::vector<unsigned>> anchors;    // recurrence positions per part
    bool blocks_adjacent = false;                  // consecutive blocks touch
};

inline DeltaInverse delta_invert(const IndexPath& input) {
    const unsigned m = input.m;
    if (m < 1) throw std::invalid_argument("delta_invert: m must be >= 1");
    if (input.p == 0) throw invalid_part("delta_invert: path must have p >= 1");
    IndexPath path = canonicalize(input);
    if (!certify(build_path_graph(path)).regular())
        throw invalid_part("delta_invert: input path is not regular");

    const unsigned len = path.length();
    auto occurrences_of = [&](int label, int exclude) {
        std::vector<unsigned> out;
        for (unsigned j = 0; j < len; ++j)
            if (path.idx[j] == label && static_cast<int>(j) != exclude) out.push_back(j);
        return out;
    };

    DeltaInverse result;
    result.anchors.resize(m + 1);
    for (unsigned k = 0; k <= m; ++k) {
        // Anchor slot: start of path, return-leg entry, or pre-leg slot.
        unsigned slot = (k == 0) ? 0 : len - k;
        int exclude = (k >= 1 && k <= m - 1) ? static_cast<int>(slot) : -1;
        result.anchors[k] = occurrences_of(path.idx[slot], exclude);
        if (result.anchors[k].empty())
            throw certificate_violation("delta_invert: anchor label of part " + std::to_string(k) +
                                        " does not recur");
    }

    unsigned total = 0;
    std::vector<unsigned> order(m + 1), start(m + 1);
    for (unsigned k = 0; k <= m; ++k) {
        unsigned lo = result.anchors[k].front();
        unsigned hi = result.anchors[k].back();
        if ((hi - lo) % (2 * m) != 0)
            throw certificate_violation("delta_invert: block " + std::to_string(k) +
                                        " span is not a multiple of 2m");
        order[k] = hi - lo;
        start[k] = lo;
        total += order[k] / (2 * m);
        if (k > 0 && result.anchors[k - 1].back() >= lo)
            throw certificate_violation("delta_invert: blocks " + std::to_string(k - 1) + " and " +
                                        std::to_string(k) + " overlap or are out of order");
    }
    if (total != path.p - 1)
        throw certificate_violation("delta_invert: block orders sum to " + std::to_string(total) +
                                    ", expected " + std::to_string(path.p - 1));
    result.blocks_adjacent = true;
    for (unsigned k = 1; k <= m; ++k)
        if (result.anchors[k - 1].back() + 1 != start[k]) result.blocks_adjacent = false;

    for (unsigned k = 0; k <= m; ++k) {
        IndexPath part;
        part.m = m;
        part.p = order[k] / (2 * m);
        unsigned plen = order[k];
        part.idx.resize(plen);
        for (unsigned t = 0; t < plen; ++t) {
            unsigned s = (t + plen - k % plen) % plen;  // (t - k) mod block length
            part.idx[t] = path.idx[start[k] + s];
        }
        part = canonicalize(part);
        if (!certify(build_path_graph(part)).regular())
            throw certificate_violation("delta_invert: extracted part " + std::to_string(k) +
                                        " is not regular");
        result.parts.push_back(std::move(part));
    }
    return result;
}

}  // namespace fuss
