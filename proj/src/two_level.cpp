#include "bookem/two_level.hpp"

#include <algorithm>
#include <set>

namespace bookem {

namespace {

// Local face-left of a dart: mirroring reflects the plane, so left and right
// swap.
FaceId local_face_left(const PlaneGraph &g, bool mirrored, Dart d) {
    return g.face_left(mirrored ? PlaneGraph::twin(d) : d);
}

EdgeId edge_between_on_block(const PlaneGraph &g, const CactusBlock &b, VertexId x, VertexId y) {
    for (EdgeId e : b.edges) {
        auto [a, c] = g.endpoints(e);
        if ((a == x && c == y) || (a == y && c == x)) return e;
    }
    throw InternalError("boundary vertices " + std::to_string(x) + "," + std::to_string(y) +
                        " are not adjacent on their block");
}

} // namespace

EdgeLookup build_edge_lookup(const KFramedDrawing &d) {
    EdgeLookup lu;
    auto key = [](VertexId a, VertexId b) {
        return std::make_pair(std::min(a, b), std::max(a, b));
    };
    for (EdgeId e = 0; e < d.skeleton.edge_count(); ++e) {
        auto [u, v] = d.skeleton.endpoints(e);
        lu.pairs[key(u, v)].push_back(e);
    }
    for (std::size_t i = 0; i < d.crossings.size(); ++i) {
        const CrossingEdge &ce = d.crossings[i];
        lu.pairs[key(ce.u, ce.v)].push_back(d.skeleton.edge_count() + static_cast<int>(i));
    }
    return lu;
}

TwoLevelContext make_context(const KFramedDrawing &d, const LevelStructures &ls,
                             const EdgeLookup &lookup, TwoLevelInstance inst) {
    TwoLevelContext cx;
    cx.d = &d;
    cx.ls = &ls;
    cx.lookup = &lookup;
    cx.inst = std::move(inst);
    const PlaneGraph &g = d.skeleton;

    cx.s = static_cast<int>(cx.inst.boundary.size());
    for (int j = 0; j < cx.s; ++j) cx.subscript[cx.inst.boundary[j]] = j;

    cx.local_faces = cx.inst.faces;
    std::sort(cx.local_faces.begin(), cx.local_faces.end());
    for (int i = 0; i < static_cast<int>(cx.local_faces.size()); ++i)
        cx.face_index[cx.local_faces[i]] = i;

    int nf = static_cast<int>(cx.local_faces.size());
    cx.ccw_verts.resize(nf);
    cx.ccw_edges.resize(nf);
    cx.dominator.assign(nf, kNoVertex);
    for (int i = 0; i < nf; ++i) {
        const std::vector<Dart> &darts = g.face_darts(cx.local_faces[i]);
        int deg = static_cast<int>(darts.size());
        auto &vs = cx.ccw_verts[i];
        auto &es = cx.ccw_edges[i];
        vs.resize(deg);
        es.resize(deg);
        if (!cx.inst.mirrored) {
            for (int t = 0; t < deg; ++t) {
                vs[t] = g.tail(darts[t]);
                es[t] = PlaneGraph::edge_of(darts[t]);
            }
        } else {
            for (int t = 0; t < deg; ++t) {
                vs[t] = g.tail(darts[(deg - t) % deg]);
                es[t] = PlaneGraph::edge_of(darts[deg - 1 - t]);
            }
        }
        int best = -1;
        for (VertexId v : vs) {
            auto it = cx.subscript.find(v);
            if (it != cx.subscript.end() && (best == -1 || it->second < best)) best = it->second;
        }
        if (best == -1)
            throw InternalError("instance face " + std::to_string(cx.local_faces[i]) +
                                " touches no boundary vertex");
        cx.dominator[i] = cx.inst.boundary[best];
    }

    // Prime vertices per face: walk clockwise from the dominator; the prime
    // prefix ends at the first interior vertex or long level edge.
    cx.prime.assign(nf, {});
    for (int i = 0; i < nf; ++i) {
        const auto &vs = cx.ccw_verts[i];
        const auto &es = cx.ccw_edges[i];
        int deg = static_cast<int>(vs.size());
        int p = -1;
        for (int t = 0; t < deg; ++t)
            if (vs[t] == cx.dominator[i]) p = t;
        std::vector<char> pr(deg, 0);
        pr[p] = 1;
        for (int t = 1; t < deg; ++t) {
            int at = ((p - t) % deg + deg) % deg; // clockwise = against the ccw walk
            EdgeId e = es[at];                    // joins vs[at] -> vs[at+1], walked backwards
            auto [a, b] = g.endpoints(e);
            auto ia = cx.subscript.find(a), ib = cx.subscript.find(b);
            bool lvl_edge = ia != cx.subscript.end() && ib != cx.subscript.end();
            if (lvl_edge && std::abs(ia->second - ib->second) != 1) break; // long
            if (cx.is_interior(vs[at])) break;
            pr[at] = 1;
        }
        cx.prime[i] = std::move(pr);
    }

    // Fans: interior faces around u_j counterclockwise from the boundary edge
    // to u_{j-1} up to the one to u_{j+1}.
    const CactusBlock &bb = ls.blocks[cx.inst.boundary_block];
    cx.fan.assign(cx.s, {});
    for (int j = 0; j < cx.s; ++j) {
        VertexId u = cx.inst.boundary[j];
        VertexId up = cx.inst.boundary[(j - 1 + cx.s) % cx.s];
        VertexId un = cx.inst.boundary[(j + 1) % cx.s];
        EdgeId e_prev = edge_between_on_block(g, bb, up, u);
        EdgeId e_next = edge_between_on_block(g, bb, u, un);
        const std::vector<EdgeId> &rot = g.rotation(u);
        int deg = static_cast<int>(rot.size());
        int at = -1;
        for (int t = 0; t < deg; ++t)
            if (rot[t] == e_prev) at = t;
        int step = cx.inst.mirrored ? -1 : 1;
        for (int guard = 0; guard <= deg; ++guard) {
            if (guard == deg)
                throw InternalError("fan of boundary vertex " + std::to_string(u) +
                                    " does not close on its successor edge");
            EdgeId e = rot[at];
            FaceId f = local_face_left(g, cx.inst.mirrored, g.dart_from(u, e));
            auto it = cx.face_index.find(f);
            if (it == cx.face_index.end())
                throw InternalError("fan of vertex " + std::to_string(u) +
                                    " reached a face outside the instance region");
            cx.fan[j].push_back(it->second);
            at = ((at + step) % deg + deg) % deg;
            if (rot[at] == e_next) break;
        }
    }
    return cx;
}

FaceOrder face_order_lambda(const TwoLevelContext &cx) {
    FaceOrder fo;
    fo.pos.assign(cx.local_faces.size(), -1);
    for (int j = 0; j < cx.s; ++j)
        for (int fi : cx.fan[j])
            if (fo.pos[fi] == -1) {
                fo.pos[fi] = static_cast<int>(fo.order.size());
                fo.order.push_back(fi);
            }
    if (fo.order.size() != cx.local_faces.size())
        throw InternalError("lambda sweep missed an instance face");
    return fo;
}

BlockStructure build_block_structure(const TwoLevelContext &cx, const FaceOrder &lambda) {
    const PlaneGraph &g = cx.d->skeleton;
    const LevelStructures &ls = *cx.ls;
    BlockStructure bs;
    int nf = static_cast<int>(cx.local_faces.size());

    // d(u_j) per boundary subscript.
    bs.vertex_discovery.assign(cx.s, -1);
    for (int q = 0; q < nf; ++q) {
        int fi = lambda.order[q];
        for (VertexId v : cx.ccw_verts[fi]) {
            auto it = cx.subscript.find(v);
            if (it != cx.subscript.end() && bs.vertex_discovery[it->second] == -1)
                bs.vertex_discovery[it->second] = q;
        }
    }

    // Small faces: the fan prefix of a non-prime u_j before d(u_j), restricted
    // to faces u_j dominates.
    bs.face_small.assign(nf, 0);
    for (int j = 1; j < cx.s; ++j) {
        VertexId u = cx.inst.boundary[j];
        int dq = bs.vertex_discovery[j];
        int dfi = lambda.order[dq];
        // is u_j prime with respect to d(u_j)?
        bool uj_prime = false;
        for (int t = 0; t < static_cast<int>(cx.ccw_verts[dfi].size()); ++t)
            if (cx.ccw_verts[dfi][t] == u && cx.prime[dfi][t]) uj_prime = true;
        if (uj_prime) continue;
        for (int fi : cx.fan[j]) {
            if (fi == dfi) break;
            if (cx.dominator[fi] == u) bs.face_small[fi] = 1;
        }
    }

    // Components and their first vertices.
    std::map<int, int> comp_local;
    for (int c : cx.inst.components) {
        int lc = static_cast<int>(comp_local.size());
        comp_local[c] = lc;
    }
    int ncomp = static_cast<int>(comp_local.size());
    bs.first_vertex.assign(ncomp, kNoVertex);
    bs.root_block.assign(ncomp, -1);
    for (int q = 0; q < nf && static_cast<int>(std::count(bs.first_vertex.begin(),
                                                          bs.first_vertex.end(), kNoVertex)) > 0;
         ++q) {
        int fi = lambda.order[q];
        const auto &vs = cx.ccw_verts[fi];
        int deg = static_cast<int>(vs.size());
        int p = -1;
        for (int t = 0; t < deg; ++t)
            if (vs[t] == cx.dominator[fi]) p = t;
        for (int t = 0; t < deg; ++t) { // counterclockwise from the dominator
            VertexId v = vs[(p + t) % deg];
            if (!cx.is_interior(v)) continue;
            int lc = comp_local.at(ls.component_of[v]);
            if (bs.first_vertex[lc] == kNoVertex) bs.first_vertex[lc] = v;
        }
    }
    for (int lc = 0; lc < ncomp; ++lc)
        if (bs.first_vertex[lc] == kNoVertex)
            throw InternalError("a cactus component never appears on an instance face");

    // Distances from the first vertex over the cactus, per component.
    std::map<VertexId, int> dist;
    {
        std::vector<VertexId> q1, q2;
        for (int lc = 0; lc < ncomp; ++lc) {
            dist[bs.first_vertex[lc]] = 0;
            q1.push_back(bs.first_vertex[lc]);
        }
        int dd = 0;
        while (!q1.empty()) {
            q2.clear();
            for (VertexId v : q1)
                for (EdgeId e : g.rotation(v)) {
                    if (!ls.edge_is_level[e] || ls.edge_is_chord[e]) continue;
                    if (ls.edge_level[e] != cx.inst.level) continue;
                    VertexId w = g.other_endpoint(e, v);
                    if (dist.find(w) == dist.end()) {
                        dist[w] = dd + 1;
                        q2.push_back(w);
                    }
                }
            q1.swap(q2);
            ++dd;
        }
    }

    // Synthetic degenerate roots first, then the real cactus blocks.
    std::map<int, int> block_local; // global block id -> local
    for (int lc = 0; lc < ncomp; ++lc) {
        TLBlock r;
        r.degenerate = true;
        r.leader = bs.first_vertex[lc];
        r.assigned = {bs.first_vertex[lc]};
        r.component = lc;
        bs.root_block[lc] = static_cast<int>(bs.blocks.size());
        bs.block_of_vertex[bs.first_vertex[lc]] = bs.root_block[lc];
        bs.blocks.push_back(std::move(r));
    }
    for (int c : cx.inst.components) {
        int lc = comp_local.at(c);
        for (int gid : ls.blocks_of_component[c]) {
            const CactusBlock &cb = ls.blocks[gid];
            TLBlock b;
            b.gid = gid;
            b.is_cycle = cb.is_cycle;
            b.component = lc;
            // leader: unique vertex of minimum distance to the first vertex
            VertexId leader = kNoVertex;
            int best = -1;
            auto consider = [&](VertexId v) {
                int dv = dist.at(v);
                if (leader == kNoVertex || dv < best) {
                    leader = v;
                    best = dv;
                }
            };
            if (cb.is_cycle)
                for (VertexId v : cb.cycle) consider(v);
            else {
                auto [x, y] = g.endpoints(cb.edges[0]);
                consider(x);
                consider(y);
            }
            b.leader = leader;
            if (cb.is_cycle) {
                std::vector<VertexId> cyc = cb.cycle; // stored counterclockwise
                if (cx.inst.mirrored) std::reverse(cyc.begin() + 1, cyc.end());
                auto lit = std::find(cyc.begin(), cyc.end(), leader);
                std::rotate(cyc.begin(), lit, cyc.end());
                b.assigned.assign(cyc.begin() + 1, cyc.end());
            } else {
                auto [x, y] = g.endpoints(cb.edges[0]);
                b.assigned = {x == leader ? y : x};
            }
            int lid = static_cast<int>(bs.blocks.size());
            block_local[gid] = lid;
            for (VertexId v : b.assigned) {
                auto [it, fresh] = bs.block_of_vertex.emplace(v, lid);
                if (!fresh)
                    throw InternalError("vertex " + std::to_string(v) +
                                        " assigned to two cactus blocks");
            }
            bs.blocks.push_back(std::move(b));
        }
    }

    // Depths: parents always have strictly closer leaders.
    {
        std::vector<int> ids(bs.blocks.size());
        for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = static_cast<int>(i);
        std::sort(ids.begin(), ids.end(), [&](int a, int b) {
            return dist.at(bs.blocks[a].leader) < dist.at(bs.blocks[b].leader);
        });
        for (int id : ids) {
            TLBlock &b = bs.blocks[id];
            if (b.degenerate) {
                b.depth = 0;
                continue;
            }
            b.depth = bs.blocks[bs.block_of_vertex.at(b.leader)].depth + 1;
        }
    }

    // Discovery faces. Real blocks: first lambda face carrying one of their
    // edges; degenerate roots: first face carrying the vertex.
    std::vector<std::map<VertexId, int>> walk_pos(nf); // vertex -> ccw offset from dominator
    for (int fi = 0; fi < nf; ++fi) {
        const auto &vs = cx.ccw_verts[fi];
        int deg = static_cast<int>(vs.size());
        int p = -1;
        for (int t = 0; t < deg; ++t)
            if (vs[t] == cx.dominator[fi]) p = t;
        for (int t = 0; t < deg; ++t) walk_pos[fi].emplace(vs[(p + t) % deg], t);
    }
    for (int q = 0; q < nf; ++q) {
        int fi = lambda.order[q];
        for (EdgeId e : cx.ccw_edges[fi]) {
            auto it = block_local.find(ls.block_of_edge[e]);
            if (ls.block_of_edge[e] == -1 || it == block_local.end()) continue;
            TLBlock &b = bs.blocks[it->second];
            if (b.discovery == -1) b.discovery = q;
        }
        for (VertexId v : cx.ccw_verts[fi]) {
            auto bv = bs.block_of_vertex.find(v);
            if (bv == bs.block_of_vertex.end()) continue;
            TLBlock &b = bs.blocks[bv->second];
            if (b.degenerate && b.leader == v && b.discovery == -1) b.discovery = q;
        }
    }
    for (TLBlock &b : bs.blocks) {
        if (b.discovery == -1) throw InternalError("block never discovered by the lambda sweep");
        int fi = lambda.order[b.discovery];
        b.dominator = cx.dominator[fi];
        b.small = bs.face_small[fi] != 0;
        int best = static_cast<int>(cx.ccw_verts[fi].size());
        for (VertexId v : b.assigned) {
            auto wp = walk_pos[fi].find(v);
            if (wp != walk_pos[fi].end()) best = std::min(best, wp->second);
        }
        if (best == static_cast<int>(cx.ccw_verts[fi].size()))
            throw InternalError("discovery face has no vertex assigned to its block");
        b.order_in_face = best;
    }

    // A block goes right before its dominator u_j only if everything its
    // vertices touch will sit inside the spine gap (u_{j-1}, u_j]: that is,
    // u_{j-1}, u_j, the after-placed blocks of u_{j-1}, and the other tucked
    // blocks of u_j. Anything reaching further slips under a clique edge
    // that arcs over the gap, and two same-family edges cross. (The paper
    // tucks on the small flag alone, which breaks exactly in that case:
    // small faces hidden behind a long chord carry blocks whose leaders sit
    // far away.) Untucking can invalidate other tucks, so iterate.
    {
        // crossing partners per vertex within the instance
        std::map<VertexId, std::vector<VertexId>> cpart;
        for (int ci : cx.inst.crossings) {
            const CrossingEdge &ce = cx.d->crossings[ci];
            cpart[ce.u].push_back(ce.v);
            cpart[ce.v].push_back(ce.u);
        }
        for (TLBlock &b : bs.blocks) b.tucked = b.small;
        bool changed = true;
        while (changed) {
            changed = false;
            // who currently sits in the gap before each boundary vertex
            std::vector<std::set<VertexId>> gap(cx.s);
            for (const TLBlock &b : bs.blocks) {
                int j = cx.subscript.at(b.dominator);
                if (b.tucked)
                    gap[j].insert(b.assigned.begin(), b.assigned.end());
                else
                    gap[(j + 1) % cx.s].insert(b.assigned.begin(), b.assigned.end());
            }
            for (TLBlock &b : bs.blocks) {
                if (!b.tucked) continue;
                int j = cx.subscript.at(b.dominator);
                VertexId uj = cx.inst.boundary[j];
                VertexId ujm1 = cx.inst.boundary[(j - 1 + cx.s) % cx.s];
                auto inside = [&](VertexId w) {
                    return w == uj || w == ujm1 || gap[j].count(w) != 0;
                };
                bool ok = true;
                for (VertexId v : b.assigned) {
                    for (EdgeId e : g.rotation(v))
                        if (!inside(g.other_endpoint(e, v))) ok = false;
                    auto it = cpart.find(v);
                    if (it != cpart.end())
                        for (VertexId w : it->second)
                            if (!inside(w)) ok = false;
                }
                if (!ok) {
                    b.tucked = false;
                    changed = true;
                }
            }
        }
    }

    bs.order.resize(bs.blocks.size());
    for (std::size_t i = 0; i < bs.order.size(); ++i) bs.order[i] = static_cast<int>(i);
    std::sort(bs.order.begin(), bs.order.end(), [&](int a, int b) {
        const TLBlock &A = bs.blocks[a];
        const TLBlock &B = bs.blocks[b];
        if (A.discovery != B.discovery) return A.discovery < B.discovery;
        if (A.order_in_face != B.order_in_face) return A.order_in_face < B.order_in_face;
        return A.gid < B.gid;
    });
    return bs;
}

std::vector<VertexId> linear_order_rho(const TwoLevelContext &cx, const BlockStructure &bs,
                                       const FaceOrder &lambda) {
    (void)lambda;
    // Blocks grouped by dominator, split small / non-small, kept in the
    // precedence order. Small-face blocks go right before their dominator
    // only when their whole component is confined there; see
    // build_block_structure for the tuck condition.
    std::vector<std::vector<int>> small_at(cx.s), nonsmall_at(cx.s);
    for (int id : bs.order) {
        const TLBlock &b = bs.blocks[id];
        int j = cx.subscript.at(b.dominator);
        (b.tucked ? small_at[j] : nonsmall_at[j]).push_back(id);
    }
    std::vector<VertexId> rho;
    for (int j = 0; j < cx.s; ++j) {
        for (int id : small_at[j])
            for (VertexId v : bs.blocks[id].assigned) rho.push_back(v);
        rho.push_back(cx.inst.boundary[j]);
        for (int id : nonsmall_at[j])
            for (VertexId v : bs.blocks[id].assigned) rho.push_back(v);
    }
    if (rho.size() != cx.inst.boundary.size() + cx.inst.interior.size())
        throw InternalError("rho does not cover the instance vertices exactly once");
    return rho;
}

ConflictGraph build_conflict_graph(const TwoLevelContext &cx, const BlockStructure &bs,
                                   const FaceOrder &lambda) {
    ConflictGraph cg;
    cg.face_count = static_cast<int>(cx.local_faces.size());
    std::set<std::pair<int, int>> es;
    for (int q = 0; q < cg.face_count; ++q) {
        int fi = lambda.order[q];
        for (VertexId w : cx.ccw_verts[fi]) {
            if (!cx.is_interior(w)) continue;
            int f = bs.blocks[bs.block_of_vertex.at(w)].discovery;
            if (f != q) es.emplace(std::min(f, q), std::max(f, q));
        }
    }
    cg.edges.assign(es.begin(), es.end());
    return cg;
}

std::vector<int> color_conflict_graph(const ConflictGraph &cg) {
    int n = cg.face_count;
    std::vector<std::vector<int>> adj(n);
    for (auto [a, b] : cg.edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    // Smallest-last order.
    std::vector<int> deg(n);
    std::set<std::pair<int, int>> bucket;
    for (int v = 0; v < n; ++v) {
        deg[v] = static_cast<int>(adj[v].size());
        bucket.emplace(deg[v], v);
    }
    std::vector<int> order;
    std::vector<char> removed(n, 0);
    while (!bucket.empty()) {
        auto [dv, v] = *bucket.begin();
        bucket.erase(bucket.begin());
        removed[v] = 1;
        order.push_back(v);
        for (int w : adj[v])
            if (!removed[w]) {
                bucket.erase({deg[w], w});
                --deg[w];
                bucket.emplace(deg[w], w);
            }
    }
    std::reverse(order.begin(), order.end());
    std::vector<int> color(n, -1);
    for (int v : order) {
        bool used[3] = {false, false, false};
        for (int w : adj[v])
            if (color[w] >= 0) used[color[w]] = true;
        int c = 0;
        while (c < 3 && used[c]) ++c;
        if (c == 3)
            throw InternalError("conflict graph needed a fourth color; it should be outerplanar");
        color[v] = c;
    }
    return color;
}

int clique_page_index(int rank_a, int rank_b, int q) {
    return ((rank_a + rank_b) % q) / 2;
}

TwoLevelAnalysis analyze_two_level(const TwoLevelContext &cx, std::vector<char> &assigned) {
    const KFramedDrawing &d = *cx.d;
    const PlaneGraph &g = d.skeleton;
    const LevelStructures &ls = *cx.ls;

    TwoLevelAnalysis an;
    an.lambda = face_order_lambda(cx);
    an.blocks = build_block_structure(cx, an.lambda);
    an.rho = linear_order_rho(cx, an.blocks, an.lambda);
    for (int i = 0; i < static_cast<int>(an.rho.size()); ++i) an.rho_rank[an.rho[i]] = i;
    an.conflict = build_conflict_graph(cx, an.blocks, an.lambda);
    an.face_color = color_conflict_graph(an.conflict);

    auto key = [](VertexId a, VertexId b) {
        return std::make_pair(std::min(a, b), std::max(a, b));
    };

    // Faces containing each vertex, for the dominator test.
    std::map<VertexId, std::vector<int>> faces_of;
    for (int fi = 0; fi < static_cast<int>(cx.local_faces.size()); ++fi) {
        std::set<VertexId> seen;
        for (VertexId v : cx.ccw_verts[fi])
            if (seen.insert(v).second) faces_of[v].push_back(fi);
    }
    auto on_face = [&](int fi, VertexId v) { return g.face_contains(cx.local_faces[fi], v); };

    std::vector<char> &placed = assigned;
    placed.resize(d.total_edges(), 0);

    for (int q = 0; q < static_cast<int>(an.lambda.order.size()); ++q) {
        int fi = an.lambda.order[q];
        std::vector<VertexId> members(cx.ccw_verts[fi]);
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
        std::sort(members.begin(), members.end(),
                  [&](VertexId a, VertexId b) { return an.rho_rank.at(a) < an.rho_rank.at(b); });
        int qq = static_cast<int>(members.size());

        for (int i = 0; i < qq; ++i)
            for (int j = i + 1; j < qq; ++j) {
                auto it = cx.lookup->pairs.find(key(members[i], members[j]));
                if (it == cx.lookup->pairs.end()) continue;
                for (int ge : it->second) {
                    if (placed[ge]) continue;
                    if (!d.is_crossing_index(ge)) {
                        // Chords of the interior level enter one level deeper.
                        if (ls.edge_is_level[ge] && ls.edge_is_chord[ge] &&
                            ls.edge_level[ge] == cx.inst.level)
                            continue;
                    } else {
                        const CrossingEdge &ce = d.crossings[ge - g.edge_count()];
                        if (ce.host == g.outer_face()) continue; // closing step owns these
                    }
                    VertexId a = members[i], b = members[j];
                    // Dominator test against every instance face.
                    bool back_witness = false, fwd_witness = false;
                    VertexId fwd_target = kNoVertex;
                    for (VertexId v : {a, b}) {
                        VertexId w = (v == a) ? b : a;
                        for (int gfi : faces_of[v]) {
                            if (cx.dominator[gfi] != v || !on_face(gfi, w)) continue;
                            if (an.rho_rank.at(v) < an.rho_rank.at(w)) {
                                back_witness = true;
                            } else {
                                fwd_witness = true;
                                fwd_target = w;
                            }
                        }
                    }
                    ClassifiedEdge cl;
                    cl.ge = ge;
                    cl.assigning_face = q;
                    if (back_witness) {
                        cl.cls = EdgeClass::Backward;
                    } else if (fwd_witness) {
                        cl.cls = EdgeClass::Forward;
                        if (!cx.is_interior(fwd_target))
                            throw InternalError("forward edge into the boundary level");
                        cl.fwd_parity =
                            an.blocks.blocks[an.blocks.block_of_vertex.at(fwd_target)].depth & 1;
                    } else {
                        cl.cls = EdgeClass::NonDominator;
                        cl.color = an.face_color[q];
                        cl.page_idx = clique_page_index(i, j, qq);
                    }
                    placed[ge] = 1;
                    an.assignments.push_back(cl);
                }
            }
    }
    return an;
}

std::string two_level_precondition(const KFramedDrawing &d, const LevelStructures &ls) {
    if (ls.lv.depth > 2)
        return "not a two-level instance: " + std::to_string(ls.lv.depth) + " levels";
    for (EdgeId e = 0; e < d.skeleton.edge_count(); ++e)
        if (ls.edge_is_level[e] && ls.edge_level[e] == 1 && ls.edge_is_chord[e])
            return "not a two-level instance: level-1 subgraph has a chord (edge " +
                   std::to_string(e) + ")";
    for (std::size_t i = 0; i < d.crossings.size(); ++i) {
        if (ls.crossing_host_class[i] == 0)
            return "not a two-level instance: crossing " + std::to_string(i) +
                   " lives in the unbounded face";
        if (ls.crossing_host_class[i] != 1)
            return "not a two-level instance: crossing " + std::to_string(i) +
                   " is hosted in a face without level-0 vertices";
    }
    return {};
}

namespace {

BookEmbedding finish_two_level(const KFramedDrawing &d, const PageRegistry &reg, int family_j,
                               bool split_forwards) {
    ValidationReport vr = validate_kframed(d);
    if (!vr.ok()) throw InputError("invalid drawing:\n" + vr.to_string());
    Leveling lv = peel_levels(d);
    LevelStructures ls = derive_level_structures(d, lv);
    std::string pre = two_level_precondition(d, ls);
    if (!pre.empty()) throw InputError(pre);

    BookEmbedding out;
    out.k = d.k;

    // Degenerate triangle: a single page carries everything.
    if (d.skeleton.vertex_count() == 3 && d.crossings.empty() && d.skeleton.edge_count() == 3) {
        out.order = {0, 1, 2};
        for (EdgeId e = 0; e < 3; ++e) {
            auto [u, v] = d.skeleton.endpoints(e);
            out.pages[{std::min(u, v), std::max(u, v)}] = reg.p(0);
        }
        return out;
    }

    std::vector<TwoLevelInstance> insts = bicomponents(d, ls, 1);
    if (insts.size() != 1) throw InternalError("a two-level drawing must yield one instance");
    EdgeLookup lu = build_edge_lookup(d);
    TwoLevelContext cx = make_context(d, ls, lu, insts[0]);
    std::vector<char> assigned(d.total_edges(), 0);
    TwoLevelAnalysis an = analyze_two_level(cx, assigned);

    out.order = an.rho;
    std::map<std::pair<VertexId, VertexId>, int> first_seq;
    for (std::size_t i = 0; i < an.assignments.size(); ++i) {
        const ClassifiedEdge &cl = an.assignments[i];
        auto [u, v] = d.edge_endpoints(cl.ge);
        auto kkey = std::make_pair(std::min(u, v), std::max(u, v));
        if (first_seq.count(kkey)) continue; // parallel copy: first assignment wins
        first_seq[kkey] = static_cast<int>(i);
        PageId pg;
        switch (cl.cls) {
        case EdgeClass::Backward: pg = reg.p(0); break;
        case EdgeClass::Forward: pg = (split_forwards && cl.fwd_parity == 0) ? reg.p(2) : reg.p(1); break;
        default: pg = reg.family_page(cl.color, family_j, cl.page_idx); break;
        }
        out.pages[kkey] = pg;
    }
    if (out.pages.size() != first_seq.size()) throw InternalError("page map size mismatch");
    // Every input edge must have a page.
    for (int ge = 0; ge < d.total_edges(); ++ge) {
        auto [u, v] = d.edge_endpoints(ge);
        if (!out.pages.count({std::min(u, v), std::max(u, v)}))
            throw InternalError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                ") was never assigned");
    }
    return out;
}

} // namespace

BookEmbedding two_level_embed(const KFramedDrawing &d, const PageRegistry &reg, int family_j) {
    return finish_two_level(d, reg, family_j, /*split_forwards=*/false);
}

BookEmbedding make_good(const BookEmbedding &e, const KFramedDrawing &d, const PageRegistry &reg,
                        int family_j) {
    (void)e; // the analysis is deterministic; recompute with forwards split
    return finish_two_level(d, reg, family_j, /*split_forwards=*/true);
}

} // namespace bookem
