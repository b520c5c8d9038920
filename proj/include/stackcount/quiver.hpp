#pragma once

#include <string>
#include <utility>
#include <vector>

#include "stackcount/errors.hpp"

namespace stackcount {

/// Finite quiver without oriented cycles.  Vertices are 0-based internally;
/// the text format is 1-based.
struct Quiver {
    int nv = 0;
    std::vector<std::pair<int, int>> arrows;   // (source, target)
};

/* Text format, one declaration per line:
 *   vertices N
 *   u v          (arrow u -> v, 1-based; repeated lines give parallel arrows)
 * '#' starts a comment; blank lines are ignored. */
Quiver parse_quiver(const std::string& text);

/// 1 -> 2 -> ... -> n.
Quiver make_linear_quiver(int n);
/// Two vertices joined by `arrows` parallel arrows 1 -> 2.
Quiver make_kronecker(int arrows);

/// Topological order of the vertices; throws DomainError on an oriented cycle
/// (self-loops included).
std::vector<int> topological_order(const Quiver& q);

/* All directed paths of the quiver, trivial paths included.  Paths are
 * identified by the start vertex plus the arrow sequence; ids are assigned
 * grouped by source vertex in discovery order, so they are deterministic for
 * a given quiver. */
struct PathTable {
    int nv = 0;
    std::vector<int> src, dst;                      // per path id
    std::vector<std::vector<int>> arrow_seq;        // per path id
    std::vector<int> trivial;                       // vertex -> id of the empty path
    std::vector<int> arrow_path;                    // arrow index -> length-1 path id
    std::vector<std::vector<std::vector<int>>> between;  // [i][j] -> ids of paths i->j
    std::vector<std::vector<int>> concat;           // [p][r] -> id of p then r, or -1

    int count(int i, int j) const { return static_cast<int>(between[i][j].size()); }
    int total() const { return static_cast<int>(src.size()); }
};

/// Enumerates every path; throws DomainError when the path count exceeds
/// max_paths (guards against combinatorial blowups on dense quivers).
PathTable build_paths(const Quiver& q, int max_paths = 20000);

} // namespace stackcount
