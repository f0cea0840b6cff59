#include "bookem/kframed.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace bookem {

std::string ValidationReport::to_string() const {
    std::string out;
    for (const Violation &v : violations) {
        out += v.code;
        out += ": ";
        out += v.message;
        out += '\n';
    }
    return out;
}

ValidationReport validate_kframed(const KFramedDrawing &d) {
    ValidationReport rep;
    auto add = [&rep](std::string code, std::string msg) {
        rep.violations.push_back({std::move(code), std::move(msg)});
    };

    const PlaneGraph &g = d.skeleton;
    if (d.k < 3) add("k-range", "k must be at least 3, got " + std::to_string(d.k));

    std::string rot_err = g.rotation_error();
    if (!rot_err.empty()) {
        add("rotation", rot_err);
        return rep; // face structure is meaningless past this point
    }
    if (!g.traced()) {
        add("untraced", "skeleton faces not traced");
        return rep;
    }

    if (!is_simple(g)) add("skeleton-simple", "skeleton has a self-loop or parallel edge");

    int c = 0;
    connected_components(g, &c);
    if (c != 1) add("connected", "skeleton has " + std::to_string(c) + " connected components");

    // Euler relation; catches rotation systems of non-planar embeddings.
    if (c == 1 && g.vertex_count() - g.edge_count() + g.face_count() != 2)
        add("euler", "n - m + f = " +
                         std::to_string(g.vertex_count() - g.edge_count() + g.face_count()) +
                         ", expected 2");

    if (!is_biconnected(g)) add("biconnected", "skeleton is not biconnected");

    if (g.outer_face() < 0 || g.outer_face() >= g.face_count()) {
        add("outer-face", "no outer face designated");
        return rep;
    }

    for (FaceId f = 0; f < g.face_count(); ++f) {
        if (g.face_degree(f) > d.k)
            add("face-degree", "face " + std::to_string(f) + " has degree " +
                                   std::to_string(g.face_degree(f)) + ", exceeds k = " + std::to_string(d.k));
        if (!g.face_boundary_simple(f))
            add("face-simple", "face " + std::to_string(f) + " boundary is not a simple cycle");
    }

    std::set<EdgeId> boundary_of; // reused per host below
    std::map<std::pair<VertexId, VertexId>, std::vector<FaceId>> pair_hosts;
    for (std::size_t i = 0; i < d.crossings.size(); ++i) {
        const CrossingEdge &ce = d.crossings[i];
        std::string tag = "crossing " + std::to_string(i);
        if (ce.u == ce.v) {
            add("crossing-loop", tag + " is a self-loop");
            continue;
        }
        if (ce.host < 0 || ce.host >= g.face_count()) {
            add("crossing-host", tag + " names unknown host face");
            continue;
        }
        if (!g.face_contains(ce.host, ce.u) || !g.face_contains(ce.host, ce.v)) {
            add("crossing-endpoint", tag + " has an endpoint off the boundary of its host face");
            continue;
        }
        bool on_boundary = false;
        for (Dart bd : g.face_darts(ce.host)) {
            EdgeId e = PlaneGraph::edge_of(bd);
            auto [a, b] = g.endpoints(e);
            if ((a == ce.u && b == ce.v) || (a == ce.v && b == ce.u)) on_boundary = true;
        }
        if (on_boundary)
            add("crossing-parallel-boundary", tag + " duplicates a boundary edge of its host face");
        pair_hosts[{std::min(ce.u, ce.v), std::max(ce.u, ce.v)}].push_back(ce.host);
    }
    for (auto &[pr, hosts] : pair_hosts) {
        std::sort(hosts.begin(), hosts.end());
        if (std::adjacent_find(hosts.begin(), hosts.end()) != hosts.end())
            add("crossing-parallel-host",
                "parallel crossing copies of (" + std::to_string(pr.first) + "," +
                    std::to_string(pr.second) + ") share a host face");
    }
    return rep;
}

KFramedDrawing augment_cliques(const KFramedDrawing &d) {
    KFramedDrawing out = d;
    const PlaneGraph &g = out.skeleton;

    // (pair, host) -> realized, either by a boundary edge of that face or by
    // a crossing hosted in it.
    std::set<std::pair<std::pair<VertexId, VertexId>, FaceId>> realized;
    auto key = [](VertexId a, VertexId b, FaceId f) {
        return std::make_pair(std::make_pair(std::min(a, b), std::max(a, b)), f);
    };
    for (const CrossingEdge &ce : out.crossings) realized.insert(key(ce.u, ce.v, ce.host));
    for (FaceId f = 0; f < g.face_count(); ++f)
        for (Dart bd : g.face_darts(f)) {
            auto [a, b] = g.endpoints(PlaneGraph::edge_of(bd));
            realized.insert(key(a, b, f));
        }

    for (FaceId f = 0; f < g.face_count(); ++f) {
        const std::vector<VertexId> &vs = g.face_vertex_set(f);
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = i + 1; j < vs.size(); ++j) {
                if (realized.count(key(vs[i], vs[j], f))) continue;
                out.crossings.push_back({vs[i], vs[j], f, CrossingOrigin::Augmented});
                realized.insert(key(vs[i], vs[j], f));
            }
    }
    return out;
}

BookEmbedding strip_augmentation(const std::vector<VertexId> &order, const PerEdgePages &pages,
                                 const KFramedDrawing &augmented, const KFramedDrawing &original) {
    BookEmbedding out;
    out.order = order;
    out.k = original.k;

    std::map<std::pair<VertexId, VertexId>, int> best_seq;
    for (int ge = 0; ge < augmented.total_edges(); ++ge) {
        if (augmented.is_crossing_index(ge) &&
            augmented.crossings[ge - augmented.skeleton.edge_count()].origin ==
                CrossingOrigin::Augmented)
            continue;
        if (pages.page[ge] == kNoPage)
            throw InternalError("input edge copy " + std::to_string(ge) + " was never assigned");
        auto [u, v] = augmented.edge_endpoints(ge);
        auto key = std::make_pair(std::min(u, v), std::max(u, v));
        auto it = best_seq.find(key);
        if (it == best_seq.end() || pages.seq[ge] < it->second) {
            best_seq[key] = pages.seq[ge];
            out.pages[key] = pages.page[ge];
        }
    }

    // The result must cover the input graph exactly.
    std::set<std::pair<VertexId, VertexId>> want;
    for (int ge = 0; ge < original.total_edges(); ++ge) {
        auto [u, v] = original.edge_endpoints(ge);
        want.emplace(std::min(u, v), std::max(u, v));
    }
    if (want.size() != out.pages.size())
        throw InternalError("stripped page map does not match the input edge set");
    for (const auto &[pr, pg] : out.pages)
        if (!want.count(pr)) throw InternalError("stripped page map contains a foreign edge");
    return out;
}

} // namespace bookem
