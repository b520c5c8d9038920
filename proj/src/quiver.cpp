#include "stackcount/quiver.hpp"

#include <map>
#include <queue>
#include <sstream>

namespace stackcount {

Quiver parse_quiver(const std::string& text) {
    Quiver q;
    bool have_header = false;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;   // blank
        if (first == "vertices") {
            if (have_header)
                throw ParseError("line " + std::to_string(lineno) +
                                 ": duplicate vertices declaration");
            if (!(ls >> q.nv) || q.nv < 1)
                throw ParseError("line " + std::to_string(lineno) +
                                 ": vertices needs a positive count");
            have_header = true;
        } else {
            if (!have_header)
                throw ParseError("line " + std::to_string(lineno) +
                                 ": arrow before the vertices declaration");
            int u = 0, v = 0;
            std::istringstream as(line);
            if (!(as >> u >> v))
                throw ParseError("line " + std::to_string(lineno) +
                                 ": expected an arrow 'u v'");
            std::string extra;
            if (as >> extra)
                throw ParseError("line " + std::to_string(lineno) +
                                 ": trailing tokens after the arrow");
            if (u < 1 || u > q.nv || v < 1 || v > q.nv)
                throw ParseError("line " + std::to_string(lineno) +
                                 ": arrow endpoint out of range");
            q.arrows.emplace_back(u - 1, v - 1);
        }
    }
    if (!have_header) throw ParseError("missing vertices declaration");
    topological_order(q);   // rejects oriented cycles
    return q;
}

Quiver make_linear_quiver(int n) {
    if (n < 1) throw DomainError("linear quiver needs at least one vertex");
    Quiver q;
    q.nv = n;
    for (int i = 0; i + 1 < n; ++i) q.arrows.emplace_back(i, i + 1);
    return q;
}

Quiver make_kronecker(int arrows) {
    if (arrows < 1) throw DomainError("need at least one arrow");
    Quiver q;
    q.nv = 2;
    for (int i = 0; i < arrows; ++i) q.arrows.emplace_back(0, 1);
    return q;
}

std::vector<int> topological_order(const Quiver& q) {
    std::vector<int> indeg(q.nv, 0);
    for (auto [u, v] : q.arrows) ++indeg[v];
    std::vector<int> order;
    std::priority_queue<int, std::vector<int>, std::greater<int>> ready;
    for (int v = 0; v < q.nv; ++v)
        if (indeg[v] == 0) ready.push(v);
    std::vector<std::vector<int>> out(q.nv);
    for (size_t a = 0; a < q.arrows.size(); ++a) out[q.arrows[a].first].push_back(q.arrows[a].second);
    while (!ready.empty()) {
        int v = ready.top();
        ready.pop();
        order.push_back(v);
        for (int w : out[v])
            if (--indeg[w] == 0) ready.push(w);
    }
    if (static_cast<int>(order.size()) != q.nv)
        throw DomainError("quiver has an oriented cycle");
    return order;
}

PathTable build_paths(const Quiver& q, int max_paths) {
    PathTable t;
    t.nv = q.nv;
    t.trivial.assign(q.nv, -1);
    t.arrow_path.assign(q.arrows.size(), -1);
    t.between.assign(q.nv, std::vector<std::vector<int>>(q.nv));

    std::map<std::pair<int, std::vector<int>>, int> id_of;   // (src, arrows) -> id
    auto add_path = [&](int src, int dst, std::vector<int> seq) {
        int id = t.total();
        if (id >= max_paths) throw DomainError("path count exceeds the limit");
        t.src.push_back(src);
        t.dst.push_back(dst);
        t.between[src][dst].push_back(id);
        id_of[{src, seq}] = id;
        t.arrow_seq.push_back(std::move(seq));
        return id;
    };

    // breadth-first from each source: extends already-found paths arrow by
    // arrow; acyclicity makes this terminate
    for (int i = 0; i < q.nv; ++i) {
        std::queue<int> work;
        t.trivial[i] = add_path(i, i, {});
        work.push(t.trivial[i]);
        while (!work.empty()) {
            int pid = work.front();
            work.pop();
            int end = t.dst[pid];
            for (size_t a = 0; a < q.arrows.size(); ++a) {
                if (q.arrows[a].first != end) continue;
                std::vector<int> seq = t.arrow_seq[pid];
                seq.push_back(static_cast<int>(a));
                work.push(add_path(i, q.arrows[a].second, std::move(seq)));
            }
        }
    }
    for (size_t a = 0; a < q.arrows.size(); ++a)
        t.arrow_path[a] = id_of.at({q.arrows[a].first, {static_cast<int>(a)}});

    int P = t.total();
    t.concat.assign(P, std::vector<int>(P, -1));
    for (int p = 0; p < P; ++p)
        for (int r = 0; r < P; ++r) {
            if (t.dst[p] != t.src[r]) continue;
            std::vector<int> seq = t.arrow_seq[p];
            seq.insert(seq.end(), t.arrow_seq[r].begin(), t.arrow_seq[r].end());
            t.concat[p][r] = id_of.at({t.src[p], seq});
        }
    return t;
}

} // namespace stackcount
