#include "bookem/peeling.hpp"

#include <algorithm>
#include <map>

namespace bookem {

Leveling peel_levels(const KFramedDrawing &d) {
    const PlaneGraph &g = d.skeleton;
    int n = g.vertex_count();
    Leveling out;
    out.level.assign(n, -1);
    if (n == 0) return out;

    std::vector<char> face_done(g.face_count(), 0);
    face_done[g.outer_face()] = 1;

    std::vector<VertexId> cur;
    for (VertexId v : g.face_vertex_set(g.outer_face())) {
        out.level[v] = 0;
        cur.push_back(v);
    }

    // Stripping a level exposes exactly the faces it touches; their unlabeled
    // vertices surface one level deeper.
    int lvl = 0;
    std::vector<VertexId> next;
    while (!cur.empty()) {
        next.clear();
        for (VertexId v : cur) {
            for (EdgeId e : g.rotation(v)) {
                FaceId f = g.face_left(g.dart_from(v, e));
                if (face_done[f]) continue;
                face_done[f] = 1;
                for (VertexId w : g.face_vertex_set(f)) {
                    if (out.level[w] == -1) {
                        out.level[w] = lvl + 1;
                        next.push_back(w);
                    }
                }
            }
        }
        cur.swap(next);
        ++lvl;
    }
    out.depth = lvl;

    for (VertexId v = 0; v < n; ++v)
        if (out.level[v] == -1) throw InternalError("peel_levels left vertex " + std::to_string(v) + " unleveled");
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.endpoints(e);
        if (std::abs(out.level[u] - out.level[v]) > 1)
            throw InternalError("edge " + std::to_string(e) + " skips a level");
    }
    return out;
}

namespace {

// Biconnected components of the level-`lvl` cactus (non-chord level edges),
// iterative Tarjan with an edge stack. Also validates the cactus shape.
void cactus_blocks(const PlaneGraph &g, const std::vector<std::vector<EdgeId>> &cadj, int lvl,
                   const std::vector<VertexId> &verts, LevelStructures &ls) {
    std::vector<int> disc(g.vertex_count(), -1), low(g.vertex_count(), 0);
    std::vector<EdgeId> parent_edge(g.vertex_count(), kNoEdge);
    std::vector<int> it(g.vertex_count(), 0);
    std::vector<EdgeId> estack;
    int timer = 0;

    auto pop_block = [&](EdgeId until) {
        CactusBlock b;
        b.id = static_cast<int>(ls.blocks.size());
        b.level = lvl;
        while (true) {
            EdgeId e = estack.back();
            estack.pop_back();
            b.edges.push_back(e);
            if (e == until) break;
        }
        for (EdgeId e : b.edges) ls.block_of_edge[e] = b.id;
        if (b.edges.size() > 1) {
            b.is_cycle = true;
            // Walk the cycle; a chordless cycle has degree 2 everywhere.
            std::map<VertexId, std::vector<VertexId>> adj;
            for (EdgeId e : b.edges) {
                auto [x, y] = g.endpoints(e);
                adj[x].push_back(y);
                adj[y].push_back(x);
            }
            for (auto &[v, nb] : adj)
                if (nb.size() != 2)
                    throw InternalError("level-" + std::to_string(lvl) +
                                        " structure is not a cactus near vertex " + std::to_string(v));
            VertexId start = adj.begin()->first;
            for (auto &[v, nb] : adj) start = std::min(start, v);
            VertexId prev = start, at = adj[start][0];
            b.cycle = {start};
            while (at != start) {
                b.cycle.push_back(at);
                auto &nb = adj[at];
                VertexId nxt = (nb[0] == prev) ? nb[1] : nb[0];
                prev = at;
                at = nxt;
            }
        }
        ls.blocks.push_back(std::move(b));
        ls.blocks_at_level[lvl].push_back(ls.blocks.back().id);
    };

    for (VertexId s : verts) {
        if (disc[s] != -1) continue;

        int comp = ls.component_count++;
        ls.component_level.push_back(lvl);
        ls.component_vertices.emplace_back();

        disc[s] = low[s] = timer++;
        std::vector<VertexId> stack = {s};
        while (!stack.empty()) {
            VertexId v = stack.back();
            if (it[v] == 0) {
                ls.component_of[v] = comp;
                ls.component_vertices[comp].push_back(v);
            }
            if (it[v] < static_cast<int>(cadj[v].size())) {
                EdgeId e = cadj[v][it[v]++];
                if (e == parent_edge[v]) continue;
                VertexId w = g.other_endpoint(e, v);
                if (disc[w] == -1) {
                    parent_edge[w] = e;
                    disc[w] = low[w] = timer++;
                    estack.push_back(e);
                    stack.push_back(w);
                } else if (disc[w] < disc[v]) {
                    estack.push_back(e);
                    low[v] = std::min(low[v], disc[w]);
                }
            } else {
                stack.pop_back();
                if (parent_edge[v] != kNoEdge) {
                    VertexId p = g.other_endpoint(parent_edge[v], v);
                    low[p] = std::min(low[p], low[v]);
                    if (low[v] >= disc[p]) pop_block(parent_edge[v]);
                }
            }
        }
    }
}

} // namespace

LevelStructures derive_level_structures(const KFramedDrawing &d, const Leveling &lv) {
    const PlaneGraph &g = d.skeleton;
    LevelStructures ls;
    ls.lv = lv;

    // Face classes.
    ls.face_min_level.assign(g.face_count(), -1);
    for (FaceId f = 0; f < g.face_count(); ++f) {
        if (f == g.outer_face()) continue;
        int mn = lv.depth;
        for (VertexId v : g.face_vertex_set(f)) mn = std::min(mn, lv.level[v]);
        ls.face_min_level[f] = mn;
    }

    ls.intra_faces.assign(lv.depth + 1, {});
    for (FaceId f = 0; f < g.face_count(); ++f) {
        if (f == g.outer_face()) continue;
        int cls = ls.face_min_level[f] + 1;
        if (cls < 1 || cls > lv.depth)
            throw InternalError("face " + std::to_string(f) + " has impossible class " + std::to_string(cls));
        ls.intra_faces[cls].push_back(f);
    }

    // Edge classification. A level edge is a chord of its level's outerplane
    // graph iff neither incident face touches the level below.
    ls.edge_is_level.assign(g.edge_count(), 0);
    ls.edge_level.assign(g.edge_count(), 0);
    ls.edge_is_chord.assign(g.edge_count(), 0);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.endpoints(e);
        ls.edge_is_level[e] = (lv.level[u] == lv.level[v]);
        ls.edge_level[e] = std::min(lv.level[u], lv.level[v]);
        if (ls.edge_is_level[e]) {
            int i = ls.edge_level[e];
            FaceId f1 = g.face_left(PlaneGraph::make_dart(e, 0));
            FaceId f2 = g.face_left(PlaneGraph::make_dart(e, 1));
            int m1 = ls.face_min_level[f1];
            int m2 = ls.face_min_level[f2];
            ls.edge_is_chord[e] = (m1 >= i && m2 >= i);
        }
    }

    // Cacti per level.
    ls.block_of_edge.assign(g.edge_count(), -1);
    ls.component_of.assign(g.vertex_count(), -1);
    ls.blocks_at_level.assign(lv.depth, {});
    std::vector<std::vector<EdgeId>> cadj(g.vertex_count());
    std::vector<std::vector<VertexId>> verts_at(lv.depth);
    for (VertexId v = 0; v < g.vertex_count(); ++v) verts_at[lv.level[v]].push_back(v);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (!ls.edge_is_level[e] || ls.edge_is_chord[e]) continue;
        auto [u, v] = g.endpoints(e);
        cadj[u].push_back(e);
        cadj[v].push_back(e);
    }
    for (int lvl0 = 0; lvl0 < lv.depth; ++lvl0) cactus_blocks(g, cadj, lvl0, verts_at[lvl0], ls);

    // Blocks carry the component of their vertices.
    ls.blocks_of_component.assign(ls.component_count, {});
    for (CactusBlock &b : ls.blocks) {
        VertexId any = b.is_cycle ? b.cycle[0] : g.endpoints(b.edges[0]).first;
        b.component = ls.component_of[any];
        ls.blocks_of_component[b.component].push_back(b.id);
    }

    // Level 0 must be exactly the outer cycle.
    if (ls.blocks_at_level.empty() || ls.blocks_at_level[0].size() != 1 ||
        !ls.blocks[ls.blocks_at_level[0][0]].is_cycle)
        throw InternalError("level-0 structure is not a single cycle");

    // Orient all cycles counterclockwise: walking cycle[j] -> cycle[j+1] must
    // keep the enclosed region (min level == block level) on the left.
    for (CactusBlock &b : ls.blocks) {
        if (!b.is_cycle) continue;
        EdgeId e01 = kNoEdge;
        for (EdgeId e : b.edges) {
            auto [x, y] = g.endpoints(e);
            if ((x == b.cycle[0] && y == b.cycle[1]) || (y == b.cycle[0] && x == b.cycle[1])) e01 = e;
        }
        Dart dart01 = g.dart_from(b.cycle[0], e01);
        FaceId left = g.face_left(dart01);
        bool interior_left = ls.face_min_level[left] == b.level;
        if (!interior_left) {
            std::reverse(b.cycle.begin() + 1, b.cycle.end());
        }
    }

    // Regions: flood each face class from the interior sides of its level's
    // cycle blocks, never crossing a block edge.
    ls.region_of_face.assign(g.face_count(), -1);
    std::vector<FaceId> queue;
    for (int bid = 0; bid < static_cast<int>(ls.blocks.size()); ++bid) {
        const CactusBlock &b = ls.blocks[bid];
        if (!b.is_cycle) continue;
        for (EdgeId e : b.edges) {
            for (int dir = 0; dir < 2; ++dir) {
                FaceId f = g.face_left(PlaneGraph::make_dart(e, dir));
                if (f != g.outer_face() && ls.face_min_level[f] == b.level &&
                    ls.region_of_face[f] == -1) {
                    ls.region_of_face[f] = bid;
                    queue.push_back(f);
                }
            }
        }
    }
    while (!queue.empty()) {
        FaceId f = queue.back();
        queue.pop_back();
        int bid = ls.region_of_face[f];
        int cls_min = ls.face_min_level[f];
        for (Dart dd : g.face_darts(f)) {
            EdgeId e = PlaneGraph::edge_of(dd);
            if (ls.block_of_edge[e] != -1 && ls.blocks[ls.block_of_edge[e]].is_cycle &&
                ls.blocks[ls.block_of_edge[e]].level == cls_min)
                continue; // a wall of this region
            FaceId f2 = g.face_left(PlaneGraph::twin(dd));
            if (f2 == g.outer_face() || ls.face_min_level[f2] != cls_min) continue;
            if (ls.region_of_face[f2] == -1) {
                ls.region_of_face[f2] = bid;
                queue.push_back(f2);
            }
        }
    }
    for (FaceId f = 0; f < g.face_count(); ++f)
        if (f != g.outer_face() && ls.region_of_face[f] == -1)
            throw InternalError("face " + std::to_string(f) + " was not assigned a region");

    // Component -> enclosing block, via any face incident to the component.
    ls.region_of_component.assign(ls.component_count, -1);
    for (int c = 0; c < ls.component_count; ++c) {
        if (ls.component_level[c] == 0) continue;
        VertexId v = ls.component_vertices[c][0];
        int want_min = ls.component_level[c] - 1;
        int found = -1;
        for (EdgeId e : g.rotation(v)) {
            FaceId f = g.face_left(g.dart_from(v, e));
            if (f != g.outer_face() && ls.face_min_level[f] == want_min) {
                found = ls.region_of_face[f];
                break;
            }
        }
        if (found == -1)
            throw InternalError("component " + std::to_string(c) +
                                " touches no intra-level face of its class");
        ls.region_of_component[c] = found;
    }

    ls.crossing_host_class.assign(d.crossings.size(), 0);
    for (std::size_t i = 0; i < d.crossings.size(); ++i) {
        FaceId h = d.crossings[i].host;
        ls.crossing_host_class[i] = (h == g.outer_face()) ? 0 : ls.face_min_level[h] + 1;
    }
    return ls;
}

std::vector<TwoLevelInstance> bicomponents(const KFramedDrawing &d, const LevelStructures &ls,
                                           int lvl) {

    std::vector<TwoLevelInstance> out;
    if (lvl < 1 || lvl > ls.lv.depth) return out;

    std::vector<int> inst_of_block(ls.blocks.size(), -1);
    for (int bid : ls.blocks_at_level[lvl - 1]) {
        const CactusBlock &b = ls.blocks[bid];
        if (!b.is_cycle) continue;
        inst_of_block[bid] = static_cast<int>(out.size());
        TwoLevelInstance t;
        t.level = lvl;
        t.boundary_block = bid;
        // Canonical clockwise boundary: reverse of the stored ccw cycle.
        t.boundary = b.cycle;
        std::reverse(t.boundary.begin() + 1, t.boundary.end());
        out.push_back(std::move(t));
    }

    for (FaceId f : ls.intra_faces[lvl]) {
        int inst = inst_of_block[ls.region_of_face[f]];
        out[inst].faces.push_back(f);
    }
    for (int c = 0; c < ls.component_count; ++c) {
        if (ls.component_level[c] != lvl) continue;
        int inst = inst_of_block[ls.region_of_component[c]];
        out[inst].components.push_back(c);
        for (VertexId v : ls.component_vertices[c]) out[inst].interior.push_back(v);
    }
    for (std::size_t i = 0; i < d.crossings.size(); ++i) {
        if (ls.crossing_host_class[i] != lvl) continue;
        int inst = inst_of_block[ls.region_of_face[d.crossings[i].host]];
        out[inst].crossings.push_back(static_cast<int>(i));
    }
    return out;
}

} // namespace bookem
