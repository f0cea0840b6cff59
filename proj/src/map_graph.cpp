#include "bookem/map_graph.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace bookem {

std::string validate_witness(const MapWitness &w) {
    const PlaneGraph &g = w.graph;
    if (w.k < 2) return "k must be at least 2";
    if (g.vertex_count() != w.nations + w.points) return "vertex count mismatch";
    std::string rot = g.rotation_error();
    if (!rot.empty()) return rot;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.endpoints(e);
        if (w.is_nation(u) == w.is_nation(v))
            return "edge " + std::to_string(e) + " does not join a nation and a point";
    }
    if (!is_simple(g)) return "witness graph is not simple";
    for (VertexId p = w.nations; p < g.vertex_count(); ++p) {
        if (g.degree(p) < 2) return "point " + std::to_string(p) + " has degree < 2";
        if (g.degree(p) > w.k)
            return "point " + std::to_string(p) + " has degree " + std::to_string(g.degree(p)) +
                   " > k";
    }
    // Euler per edge-bearing component: catches non-planar rotation systems.
    // Tracing yields one boundary walk per component, so each edge-bearing
    // component must satisfy n_c - m_c + f_c = 2 on its own.
    if (g.edge_count() > 0) {
        PlaneGraph copy = g;
        copy.trace_faces();
        int c = 0;
        std::vector<int> comp = connected_components(g, &c);
        int isolated = 0;
        for (VertexId v = 0; v < g.vertex_count(); ++v)
            if (g.degree(v) == 0) ++isolated;
        int c_edge = c - isolated;
        int expected = 2 * c_edge - (g.vertex_count() - isolated) + g.edge_count();
        if (copy.face_count() != expected)
            return "witness rotations are not a planar embedding";
    }
    return {};
}

std::vector<std::pair<VertexId, VertexId>> half_square(const MapWitness &w) {
    std::set<std::pair<VertexId, VertexId>> out;
    const PlaneGraph &g = w.graph;
    for (VertexId p = w.nations; p < g.vertex_count(); ++p) {
        std::vector<VertexId> nb;
        for (EdgeId e : g.rotation(p)) nb.push_back(g.other_endpoint(e, p));
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j)
                out.emplace(std::min(nb[i], nb[j]), std::max(nb[i], nb[j]));
    }
    return {out.begin(), out.end()};
}

namespace {

// Mutable rotation surgery used by the construction below. Rotations stay
// counterclockwise; faces are retraced on demand.
struct Surgeon {
    PlaneGraph g;

    // Insert `e` into rot(v) right after `after` (the corner rule for adding
    // an edge inside the face left of dart v->after).
    void insert_after_edge(VertexId v, EdgeId e, EdgeId after) {
        std::vector<EdgeId> r = g.rotation(v);
        auto it = std::find(r.begin(), r.end(), after);
        if (it == r.end()) throw InternalError("corner edge missing from rotation");
        r.insert(std::next(it), e);
        g.set_rotation(v, std::move(r));
    }
};

} // namespace

KFramedDrawing map_to_framed(const MapWitness &w) {
    std::string err = validate_witness(w);
    if (!err.empty()) throw InputError("invalid map witness: " + err);
    const PlaneGraph &wg = w.graph;

    // Vertices: nations keep ids, dummies appended.
    PlaneGraph g(w.nations);
    struct Cage {
        std::vector<VertexId> nations; // in point rotation order
        Dart inner_dart = -1;          // dart whose left face is the cage
    };
    std::vector<Cage> cages;

    // Nation rotations are assembled slot by slot from the witness rotation;
    // each slot holds the edges replacing one incident point.
    std::vector<std::vector<std::vector<EdgeId>>> slots(w.nations);
    std::vector<std::map<VertexId, int>> slot_of(w.nations); // point -> slot index
    for (VertexId nv = 0; nv < w.nations; ++nv) {
        slots[nv].resize(wg.degree(nv));
        int i = 0;
        for (EdgeId e : wg.rotation(nv)) slot_of[nv][wg.other_endpoint(e, nv)] = i++;
    }
    std::set<std::pair<VertexId, VertexId>> skel_pairs;

    for (VertexId p = w.nations; p < wg.vertex_count(); ++p) {
        std::vector<VertexId> nb;
        for (EdgeId e : wg.rotation(p)) nb.push_back(wg.other_endpoint(e, p));
        int h = static_cast<int>(nb.size());
        if (h == 2) {
            auto pr = std::make_pair(std::min(nb[0], nb[1]), std::max(nb[0], nb[1]));
            if (skel_pairs.count(pr)) continue; // parallel route, adjacency already realized
            skel_pairs.insert(pr);
            EdgeId e = g.add_edge(nb[0], nb[1]);
            slots[nb[0]][slot_of[nb[0]][p]] = {e};
            slots[nb[1]][slot_of[nb[1]][p]] = {e};
        } else {
            // Cage: nations alternate with h dummies; dummy d_i sits between
            // nb[i] and nb[i+1] counterclockwise.
            Cage cage;
            cage.nations = nb;
            std::vector<VertexId> dum(h);
            for (int i = 0; i < h; ++i) dum[i] = g.add_vertex();
            std::vector<EdgeId> to_next(h), to_prev(h);
            for (int i = 0; i < h; ++i) {
                EdgeId e1 = g.add_edge(nb[i], dum[i]);           // n_i -> d_i
                to_next[i] = e1;
            }
            for (int i = 0; i < h; ++i) {
                EdgeId e2 = g.add_edge(dum[i], nb[(i + 1) % h]); // d_i -> n_{i+1}
                to_prev[(i + 1) % h] = e2;
            }
            for (int i = 0; i < h; ++i) {
                g.set_rotation(dum[i], {to_next[i], to_prev[(i + 1) % h]});
                // At n_i the slot reads [edge to d_i, edge to d_{i-1}].
                slots[nb[i]][slot_of[nb[i]][p]] = {to_next[i], to_prev[i]};
            }
            cage.inner_dart = g.dart_from(nb[0], to_next[0]);
            cages.push_back(std::move(cage));
        }
    }
    for (VertexId nv = 0; nv < w.nations; ++nv) {
        std::vector<EdgeId> r;
        for (auto &slot : slots[nv]) r.insert(r.end(), slot.begin(), slot.end());
        g.set_rotation(nv, std::move(r));
    }

    Surgeon s;
    s.g = std::move(g);

    // Tiny graphs cannot be biconnected; pad up to a triangle.
    auto pad_tiny = [&s]() {
        if (s.g.vertex_count() == 0) {
            s.g.add_vertex();
            s.g.add_vertex();
            s.g.add_vertex();
            s.g.add_edge(0, 1);
            s.g.add_edge(1, 2);
            s.g.add_edge(2, 0);
        } else if (s.g.vertex_count() == 1) {
            VertexId a = 0, b = s.g.add_vertex(), c = s.g.add_vertex();
            s.g.add_edge(a, b);
            s.g.add_edge(b, c);
            s.g.add_edge(c, a);
        } else if (s.g.vertex_count() == 2 && s.g.edge_count() <= 1) {
            VertexId c = s.g.add_vertex();
            if (s.g.edge_count() == 0) s.g.add_edge(0, 1);
            s.g.add_edge(1, c);
            s.g.add_edge(c, 0);
        }
    };
    pad_tiny();

    // Join components: a hub in the shared outer region, one spoke per
    // component, attached between rotation slots so no cage is disturbed.
    {
        int c = 0;
        std::vector<int> comp = connected_components(s.g, &c);
        if (c > 1) {
            std::vector<VertexId> rep(c, kNoVertex);
            for (VertexId v = 0; v < static_cast<int>(comp.size()); ++v)
                if (rep[comp[v]] == kNoVertex) rep[comp[v]] = v;
            VertexId hub = s.g.add_vertex();
            for (int i = 0; i < c; ++i) s.g.add_edge(hub, rep[i]); // appended at rotation ends
        }
    }

    // Split repeated face occurrences until every boundary is a simple
    // cycle: for consecutive occurrences of v, a subdivided chord between
    // the two walk successors of v separates them.
    for (int guard = 0;; ++guard) {
        if (guard > 4 * (s.g.vertex_count() + s.g.edge_count() + 16))
            throw InternalError("biconnectivity repair did not converge");
        s.g.trace_faces();
        bool changed = false;
        for (FaceId f = 0; f < s.g.face_count() && !changed; ++f) {
            if (s.g.face_boundary_simple(f)) continue;
            const std::vector<Dart> &ds = s.g.face_darts(f);
            int deg = static_cast<int>(ds.size());
            std::map<VertexId, int> first;
            for (int t = 0; t < deg && !changed; ++t) {
                VertexId v = s.g.tail(ds[t]);
                auto [it, fresh] = first.emplace(v, t);
                if (fresh) continue;
                int o1 = it->second, o2 = t;
                // A subdivided chord between the walk successors of the two
                // occurrences separates them into different faces.
                VertexId a = s.g.head(ds[o1]);
                VertexId b = s.g.head(ds[o2]);
                // The corner of the face at a is (arrive ds[o1], leave
                // ds[o1+1]); an edge drawn inside the face goes right after
                // the leaving edge in the ccw rotation.
                EdgeId out_a = PlaneGraph::edge_of(ds[(o1 + 1) % deg]);
                EdgeId out_b = PlaneGraph::edge_of(ds[(o2 + 1) % deg]);
                VertexId z = s.g.add_vertex();
                EdgeId az = s.g.add_edge(a, z);
                EdgeId zb = s.g.add_edge(z, b);
                auto fix = [&s](VertexId x, EdgeId e, EdgeId corner) {
                    std::vector<EdgeId> r = s.g.rotation(x);
                    r.erase(std::find(r.begin(), r.end(), e));
                    s.g.set_rotation(x, std::move(r));
                    s.insert_after_edge(x, e, corner);
                };
                fix(a, az, out_a);
                fix(b, zb, out_b);
                s.g.set_rotation(z, {az, zb});
                changed = true;
            }
        }
        if (!changed) break;
    }

    // Identify cage faces.
    s.g.trace_faces();
    std::set<FaceId> cage_faces;
    for (const Cage &c : cages) cage_faces.insert(s.g.face_left(c.inner_dart));

    // Outer face: the largest non-cage face.
    {
        FaceId best = kNoFace;
        for (FaceId f = 0; f < s.g.face_count(); ++f) {
            if (cage_faces.count(f)) continue;
            if (best == kNoFace || s.g.face_degree(f) > s.g.face_degree(best)) best = f;
        }
        s.g.set_outer_face(best);
    }

    // Stellation: bounded non-cage faces shrink to triangles when larger;
    // the unbounded face only if it exceeds 2k.
    {
        PlaneGraph &pg = s.g;
        int limit_outer = 2 * w.k;
        std::vector<FaceId> todo;
        for (FaceId f = 0; f < pg.face_count(); ++f) {
            if (cage_faces.count(f)) continue;
            if (f == pg.outer_face() ? pg.face_degree(f) > limit_outer : pg.face_degree(f) > 3)
                todo.push_back(f);
        }
        bool outer_stellated = false;
        VertexId outer_hub = kNoVertex;
        EdgeId outer_first_edge = kNoEdge;
        for (FaceId f : todo) {
            std::vector<Dart> walk = pg.face_darts(f);
            VertexId hub = pg.add_vertex();
            std::vector<EdgeId> hub_rot;
            for (Dart dt : walk) {
                VertexId v = pg.tail(dt);
                EdgeId e = pg.add_edge(hub, v);
                {
                    std::vector<EdgeId> r = pg.rotation(v);
                    r.pop_back(); // undo the append
                    pg.set_rotation(v, std::move(r));
                }
                // corner rule: insert after the edge of the dart leaving v
                s.insert_after_edge(v, e, PlaneGraph::edge_of(dt));
                hub_rot.push_back(e);
            }
            pg.set_rotation(hub, hub_rot);
            if (f == pg.outer_face()) {
                outer_stellated = true;
                outer_hub = hub;
                outer_first_edge = hub_rot[0];
            }
        }
        pg.trace_faces();
        // retraced: face ids moved; recover the cage faces and outer face
        cage_faces.clear();
        for (const Cage &c : cages) cage_faces.insert(pg.face_left(c.inner_dart));
        if (outer_stellated)
            pg.set_outer_face(pg.face_left(pg.dart_from(outer_hub, outer_first_edge)));
        else {
            FaceId best = kNoFace;
            for (FaceId f = 0; f < pg.face_count(); ++f) {
                if (cage_faces.count(f)) continue;
                if (best == kNoFace || pg.face_degree(f) > pg.face_degree(best)) best = f;
            }
            pg.set_outer_face(best);
        }
    }

    KFramedDrawing out;
    out.k = 2 * w.k;
    out.skeleton = std::move(s.g);
    for (const Cage &c : cages) {
        FaceId f = out.skeleton.face_left(c.inner_dart);
        for (std::size_t i = 0; i < c.nations.size(); ++i)
            for (std::size_t j = i + 1; j < c.nations.size(); ++j)
                out.crossings.push_back(
                    {c.nations[i], c.nations[j], f, CrossingOrigin::Input});
    }
    return out;
}

MapWitness framed_to_map(const KFramedDrawing &d) {
    ValidationReport vr = validate_kframed(d);
    if (!vr.ok()) throw InputError("invalid drawing:\n" + vr.to_string());
    const PlaneGraph &g = d.skeleton;

    // The theorem assumes every face induces a clique.
    std::set<std::pair<std::pair<VertexId, VertexId>, FaceId>> realized;
    auto key = [](VertexId a, VertexId b, FaceId f) {
        return std::make_pair(std::make_pair(std::min(a, b), std::max(a, b)), f);
    };
    for (const CrossingEdge &ce : d.crossings) realized.insert(key(ce.u, ce.v, ce.host));
    for (FaceId f = 0; f < g.face_count(); ++f)
        for (Dart bd : g.face_darts(f)) {
            auto [a, b] = g.endpoints(PlaneGraph::edge_of(bd));
            realized.insert(key(a, b, f));
        }
    for (FaceId f = 0; f < g.face_count(); ++f) {
        const auto &vs = g.face_vertex_set(f);
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = i + 1; j < vs.size(); ++j)
                if (!realized.count(key(vs[i], vs[j], f)))
                    throw InputError("drawing is not clique-augmented: face " + std::to_string(f) +
                                     " misses the pair (" + std::to_string(vs[i]) + "," +
                                     std::to_string(vs[j]) + ")");
    }

    // Which faces host crossing edges.
    std::set<FaceId> hosting;
    for (const CrossingEdge &ce : d.crossings) hosting.insert(ce.host);

    MapWitness w;
    w.nations = g.vertex_count();
    w.k = d.k;
    PlaneGraph wg(g.vertex_count());
    std::vector<VertexId> edge_point(g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e) edge_point[e] = wg.add_vertex();
    std::map<FaceId, VertexId> face_point;
    for (FaceId f : hosting) face_point[f] = wg.add_vertex();
    w.points = static_cast<int>(wg.vertex_count() - g.vertex_count());

    // Edges with explicit rotations.
    std::vector<std::vector<EdgeId>> rot(wg.vertex_count());
    std::map<std::pair<VertexId, VertexId>, EdgeId> we;
    auto link = [&](VertexId a, VertexId b) {
        auto pr = std::make_pair(a, b);
        auto it = we.find(pr);
        if (it != we.end()) return it->second;
        EdgeId e = wg.add_edge(a, b);
        we[pr] = e;
        return e;
    };
    // First create all edges so ids are stable, then write rotations.
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        for (EdgeId e : g.rotation(v)) link(std::min(v, edge_point[e]), std::max(v, edge_point[e]));
    for (auto &[f, p] : face_point)
        for (VertexId v : g.face_vertex_set(f)) link(std::min(v, p), std::max(v, p));

    auto wedge = [&](VertexId a, VertexId b) {
        return we.at(std::make_pair(std::min(a, b), std::max(a, b)));
    };
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        std::vector<EdgeId> r;
        const std::vector<EdgeId> &gr = g.rotation(v);
        for (EdgeId e : gr) {
            r.push_back(wedge(v, edge_point[e]));
            FaceId sector = g.face_left(g.dart_from(v, e));
            auto fp = face_point.find(sector);
            if (fp != face_point.end()) r.push_back(wedge(v, fp->second));
        }
        rot[v] = std::move(r);
    }
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.endpoints(e);
        rot[edge_point[e]] = {wedge(u, edge_point[e]), wedge(v, edge_point[e])};
    }
    for (auto &[f, p] : face_point) {
        std::vector<EdgeId> r;
        std::set<VertexId> seen;
        for (Dart dt : g.face_darts(f)) {
            VertexId v = g.tail(dt);
            if (seen.insert(v).second) r.push_back(wedge(v, p));
        }
        rot[p] = std::move(r);
    }
    for (VertexId v = 0; v < wg.vertex_count(); ++v) wg.set_rotation(v, rot[v]);
    w.graph = std::move(wg);

    std::string err = validate_witness(w);
    if (!err.empty()) throw InternalError("framed_to_map produced a bad witness: " + err);
    return w;
}

} // namespace bookem
