#include "bookem/generator.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "bookem/peeling.hpp"
#include "bookem/prng.hpp"
#include "bookem/two_level.hpp"

namespace bookem {

namespace {

// Plane graphs under construction are kept as a face inventory: every face a
// simple vertex cycle stored in trace direction (bounded counterclockwise,
// unbounded clockwise). Rotations fall out of the face corners at the end.
//
// Vertex levels are maintained incrementally. The two mutations below are
// level-safe by construction:
//   - splitting a face so that both pieces keep a vertex of the face's
//     minimum level never changes any existing level, and the fresh path
//     vertices land exactly one level below that minimum;
//   - an ear on the unbounded face (adjacent endpoints) adds level-0
//     vertices and exposes nothing.
struct Builder {
    int n = 0;
    std::vector<std::pair<VertexId, VertexId>> edges;
    std::set<std::pair<VertexId, VertexId>> edge_set;
    std::vector<std::vector<VertexId>> faces;
    std::vector<int> vlevel;
    int outer = -1;
    int deep = -1; // innermost disk, target of chained nesting

    VertexId add_vertex(int lvl) {
        vlevel.push_back(lvl);
        return n++;
    }

    void add_edge(VertexId a, VertexId b) {
        edges.emplace_back(a, b);
        edge_set.emplace(std::min(a, b), std::max(a, b));
    }
    bool has_edge(VertexId a, VertexId b) const {
        return edge_set.count({std::min(a, b), std::max(a, b)}) != 0;
    }

    int face_min(int f) const {
        int m = vlevel[faces[f][0]];
        for (VertexId v : faces[f]) m = std::min(m, vlevel[v]);
        return m;
    }
    bool face_uniform(int f) const {
        for (VertexId v : faces[f])
            if (vlevel[v] != vlevel[faces[f][0]]) return false;
        return true;
    }

    void init_cycle(int len) {
        std::vector<VertexId> cyc;
        for (int i = 0; i < len; ++i) cyc.push_back(add_vertex(0));
        for (int i = 0; i < len; ++i) add_edge(cyc[i], cyc[(i + 1) % len]);
        faces.push_back(cyc); // bounded, counterclockwise
        std::vector<VertexId> rev = cyc;
        std::reverse(rev.begin() + 1, rev.end());
        faces.push_back(rev);
        outer = 1;
        deep = 0;
    }

    // Splits face f along a path of `p` fresh vertices between positions
    // i < j of its cycle. Returns the index of the second piece.
    int split_face(int f, int i, int j, int p) {
        std::vector<VertexId> cyc = faces[f];
        VertexId a = cyc[i], b = cyc[j];
        int lvl = (f == outer) ? 0 : face_min(f) + 1;
        std::vector<VertexId> path;
        for (int t = 0; t < p; ++t) path.push_back(add_vertex(lvl));
        VertexId prev = a;
        for (VertexId z : path) {
            add_edge(prev, z);
            prev = z;
        }
        add_edge(prev, b);

        std::vector<VertexId> f1(cyc.begin() + i, cyc.begin() + j + 1);
        for (int t = p - 1; t >= 0; --t) f1.push_back(path[t]);
        std::vector<VertexId> f2(cyc.begin() + j, cyc.end());
        f2.insert(f2.end(), cyc.begin(), cyc.begin() + i + 1);
        f2.insert(f2.end(), path.begin(), path.end());

        faces[f] = std::move(f1);
        faces.push_back(std::move(f2));
        int g = static_cast<int>(faces.size()) - 1;
        if (outer == f) outer = g;
        return g;
    }

    // Nests a fresh cycle of `ring` vertices inside bounded face f, whose
    // boundary must sit on one single level. The lattice `steps` (boundary
    // stretch, ring stretch) describes consecutive spokes; stretches sum to
    // the face degree and the ring length. Each annulus face has degree
    // stretch_b + stretch_r + 2 and keeps a boundary vertex, so the ring
    // lands exactly one level deeper. Returns the index of the new disk.
    int nest_cycle(int f, int start, int ring, const std::vector<std::pair<int, int>> &steps) {
        std::vector<VertexId> cyc = faces[f];
        std::rotate(cyc.begin(), cyc.begin() + start, cyc.end());
        int D = static_cast<int>(cyc.size());
        int lvl = face_min(f) + 1;
        std::vector<VertexId> w;
        for (int t = 0; t < ring; ++t) w.push_back(add_vertex(lvl));
        for (int t = 0; t < ring; ++t) add_edge(w[t], w[(t + 1) % ring]);

        int t = static_cast<int>(steps.size());
        std::vector<int> o(t), r(t);
        int co = 0, cr = 0;
        for (int s = 0; s < t; ++s) {
            o[s] = co % D;
            r[s] = cr % ring;
            co += steps[s].first;
            cr += steps[s].second;
        }
        if (co != D || cr != ring) throw InternalError("nest steps do not close");
        for (int s = 0; s < t; ++s) {
            if (steps[s].first == 0 && steps[s].second == 0)
                throw InternalError("degenerate nest step");
            add_edge(cyc[o[s]], w[r[s]]);
        }

        std::vector<std::vector<VertexId>> annuli;
        for (int s = 0; s < t; ++s) {
            std::vector<VertexId> face;
            for (int x = 0; x <= steps[s].first; ++x) face.push_back(cyc[(o[s] + x) % D]);
            for (int x = steps[s].second; x >= 0; --x) face.push_back(w[(r[s] + x) % ring]);
            annuli.push_back(std::move(face));
        }
        faces[f] = annuli[0];
        for (int s = 1; s < t; ++s) faces.push_back(annuli[s]);
        faces.push_back(w); // inner disk, counterclockwise
        deep = static_cast<int>(faces.size()) - 1;
        return deep;
    }

    PlaneGraph finish() const {
        PlaneGraph g(n);
        for (auto [a, b] : edges) g.add_edge(a, b);
        // Corner chaining: in the trace direction the rotation successor of
        // the edge leaving v is the edge arriving at v.
        std::vector<std::map<EdgeId, EdgeId>> succ(n);
        std::map<std::pair<VertexId, VertexId>, EdgeId> eid;
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            auto [a, b] = g.endpoints(e);
            eid[{std::min(a, b), std::max(a, b)}] = e;
        }
        auto lookup = [&eid](VertexId a, VertexId b) {
            return eid.at(std::make_pair(std::min(a, b), std::max(a, b)));
        };
        for (const auto &cyc : faces) {
            int D = static_cast<int>(cyc.size());
            for (int i = 0; i < D; ++i) {
                VertexId pv = cyc[(i - 1 + D) % D], v = cyc[i], nx = cyc[(i + 1) % D];
                succ[v][lookup(v, nx)] = lookup(pv, v);
            }
        }
        for (VertexId v = 0; v < n; ++v) {
            if (succ[v].empty()) throw InternalError("vertex with no face corner");
            std::vector<EdgeId> rot;
            EdgeId start = succ[v].begin()->first;
            EdgeId cur = start;
            do {
                rot.push_back(cur);
                cur = succ[v].at(cur);
            } while (cur != start && rot.size() <= succ[v].size());
            if (rot.size() != succ[v].size())
                throw InternalError("face corners of vertex " + std::to_string(v) +
                                    " do not chain into one rotation");
            g.set_rotation(v, rot);
        }
        return g;
    }
};

struct FinishedDrawing {
    KFramedDrawing d;
    std::vector<FaceId> face_ids; // inventory index -> traced FaceId
};

FinishedDrawing realize(const Builder &b, int k) {
    FinishedDrawing out;
    out.d.k = k;
    out.d.skeleton = b.finish();
    out.d.skeleton.trace_faces();
    std::map<std::vector<VertexId>, FaceId> by_cycle;
    for (FaceId f = 0; f < out.d.skeleton.face_count(); ++f)
        by_cycle[PlaneGraph::canonical_cycle(out.d.skeleton.face_vertices(f))] = f;
    out.face_ids.resize(b.faces.size());
    for (std::size_t i = 0; i < b.faces.size(); ++i) {
        auto it = by_cycle.find(PlaneGraph::canonical_cycle(b.faces[i]));
        if (it == by_cycle.end()) throw InternalError("inventory face missing after tracing");
        out.face_ids[i] = it->second;
    }
    out.d.skeleton.set_outer_face(out.face_ids[b.outer]);
    return out;
}

void sample_crossings(FinishedDrawing &fd, const Builder &b, double density, bool outer_too,
                      bool bounded_min0_only, SplitMix64 &rng) {
    for (std::size_t i = 0; i < b.faces.size(); ++i) {
        bool is_outer = static_cast<int>(i) == b.outer;
        if (is_outer && !outer_too) continue;
        if (bounded_min0_only && (is_outer || b.face_min(static_cast<int>(i)) != 0)) continue;
        const std::vector<VertexId> &cyc = b.faces[i];
        int D = static_cast<int>(cyc.size());
        for (int x = 0; x < D; ++x)
            for (int y = x + 1; y < D; ++y) {
                if (y == x + 1 || (x == 0 && y == D - 1)) continue; // boundary edge
                if (density < 1.0 && !rng.chance(density)) continue;
                fd.d.crossings.push_back({cyc[x], cyc[y], fd.face_ids[i], CrossingOrigin::Input});
            }
    }
}

// Lattice walk from (0,0) to (D,R): each step is one annulus face of degree
// step.first + step.second + 2 <= k. The spoke positions on the cylinder
// must be pairwise distinct and touch at least two boundary and two ring
// vertices, or the ring would pinch.
std::vector<std::pair<int, int>> sample_nest_steps(int D, int R, int k, SplitMix64 &rng) {
    std::vector<std::pair<int, int>> steps;
    int db = D, dr = R;
    while (db > 0 || dr > 0) {
        int take = rng.range(1, std::min(k - 2, db + dr));
        int sb = rng.range(std::max(0, take - dr), std::min(take, db));
        steps.emplace_back(sb, take - sb);
        db -= sb;
        dr -= take - sb;
    }
    auto spokes_ok = [D, R](const std::vector<std::pair<int, int>> &st) {
        if (st.size() < 2) return false;
        std::set<std::pair<int, int>> at;
        std::set<int> bs, rs;
        int b = 0, r = 0;
        for (const auto &step : st) {
            if (!at.insert({b % D, r % R}).second) return false;
            bs.insert(b % D);
            rs.insert(r % R);
            b += step.first;
            r += step.second;
        }
        return bs.size() >= 2 && rs.size() >= 2;
    };
    if (!spokes_ok(steps)) {
        bool fixed = false;
        for (std::size_t rot = 1; rot < steps.size() && !fixed; ++rot) {
            std::rotate(steps.begin(), steps.begin() + 1, steps.end());
            fixed = spokes_ok(steps);
        }
        if (!fixed) {
            // alternate unit steps: always legal since k >= 3
            steps.clear();
            int b = D, r = R;
            while (b > 0 || r > 0) {
                if (b > 0) {
                    steps.emplace_back(1, 0);
                    --b;
                }
                if (r > 0) {
                    steps.emplace_back(0, 1);
                    --r;
                }
            }
        }
    }
    return steps;
}

// Grows the builder toward `n` vertices with level-safe splits and optional
// extra nests, never exceeding `depth` levels.
void grow(Builder &b, int n_target, int k, int depth, bool two_level_mode, SplitMix64 &rng) {
    int stall = 0;
    while (b.n < n_target && stall < 400) {
        ++stall;
        int f = static_cast<int>(rng.below(b.faces.size()));
        int D = static_cast<int>(b.faces[f].size());
        bool is_outer = f == b.outer;

        // occasionally deepen by nesting a branch into a uniform-level face
        if (!is_outer && D >= 3 && rng.chance(0.15) && b.face_uniform(f) &&
            b.vlevel[b.faces[f][0]] + 1 <= depth - 1) {
            int R = rng.range(3, k);
            b.nest_cycle(f, rng.range(0, D - 1), R, sample_nest_steps(D, R, k, rng));
            stall = 0;
            continue;
        }

        int i, j, pmin, pmax;
        if (is_outer) {
            i = rng.range(0, D - 2);
            j = i + 1;
            pmin = 1;
            pmax = std::min(k - 2, k - D); // ear p+2, new outer D+p
        } else {
            if (D < 4) continue;
            i = rng.range(0, D - 2);
            j = rng.range(i + 1, D - 1);
            int span = j - i;
            pmin = (span == 1 || span == D - 1) ? 1 : 0;
            pmax = std::min(k - 1 - span, k - 1 - (D - span));
            int m = b.face_min(f);
            if (m + 1 > depth - 1) pmax = 0; // fresh vertices would be too deep
            if (pmax < pmin) continue;
            // both pieces must keep a vertex of the face's minimum level
            auto arc_has_min = [&](int from, int to) { // inclusive positions, cyclic
                for (int x = from;; x = (x + 1) % D) {
                    if (b.vlevel[b.faces[f][x]] == m) return true;
                    if (x == to) return false;
                }
            };
            if (!arc_has_min(i, j) || !arc_has_min(j, i)) continue;
            if (two_level_mode && m >= 1) {
                if (pmax == 0) continue; // a chord here would sit inside its own level
                pmin = std::max(pmin, 1);
            }
        }
        if (pmax < pmin) continue;
        int plen = rng.range(pmin, pmax);
        if (plen == 0 && b.has_edge(b.faces[f][i], b.faces[f][j])) continue;
        b.split_face(f, i, j, plen);
        stall = 0;
    }
}

KFramedDrawing gen_pentagon(const GenParams &p) {
    SplitMix64 rng(p.seed);
    int a = 0;
    // the largest a with 5*(3*2^a - 2) within the requested size
    while (a < 5 && 5 * (3 * (1 << (a + 1)) - 2) <= std::max(p.n, 5)) ++a;
    if (a > 0 && rng.chance(0.3)) --a;

    Builder b;
    b.init_cycle(5);
    int size = 5;
    for (int j = 0; j < a; ++j) { // expand: faces 1+2+2
        std::vector<std::pair<int, int>> steps(size, {1, 2});
        b.nest_cycle(b.deep, rng.range(0, size - 1), 2 * size, steps);
        size *= 2;
    }
    for (int j = 0; j < a; ++j) { // contract: faces 2+1+2
        std::vector<std::pair<int, int>> steps(size / 2, {2, 1});
        b.nest_cycle(b.deep, 2 * rng.range(0, size / 2 - 1), size / 2, steps);
        size /= 2;
    }

    FinishedDrawing fd = realize(b, 5);
    sample_crossings(fd, b, 1.0, /*outer_too=*/false, /*bounded_min0_only=*/false, rng);
    ValidationReport vr = validate_kframed(fd.d);
    if (!vr.ok()) throw InternalError("pentagon generator invalid:\n" + vr.to_string());
    return std::move(fd.d);
}

} // namespace

KFramedDrawing gen_kframed(const GenParams &p) {
    if (p.k < 3) throw InputError("k must be at least 3");
    if (p.depth < 1) throw InputError("depth must be at least 1");
    if (p.density < 0 || p.density > 1) throw InputError("density must lie in [0,1]");
    if (p.pentagon) return gen_pentagon(p);
    int depth = p.two_level ? std::min(p.depth, 2) : p.depth;
    if (p.n < 3) throw InputError("need at least 3 vertices");
    if (p.n < 3 * depth) throw InputError("depth unreachable at this vertex count");

    SplitMix64 rng(p.seed);
    Builder b;
    b.init_cycle(rng.range(3, p.k));
    for (int d = 1; d < depth; ++d) {
        int D = static_cast<int>(b.faces[b.deep].size());
        int R = rng.range(3, p.k);
        b.nest_cycle(b.deep, rng.range(0, D - 1), R, sample_nest_steps(D, R, p.k, rng));
    }
    grow(b, p.n, p.k, depth, p.two_level, rng);

    FinishedDrawing fd = realize(b, p.k);
    ValidationReport vr = validate_kframed(fd.d);
    if (!vr.ok()) throw InternalError("generator produced an invalid drawing:\n" + vr.to_string());
    {
        Leveling lv = peel_levels(fd.d);
        if (lv.level != b.vlevel)
            throw InternalError("tracked levels diverge from the peeling");
    }
    sample_crossings(fd, b, p.density, p.outer_crossings && !p.two_level, p.two_level, rng);
    vr = validate_kframed(fd.d);
    if (!vr.ok()) throw InternalError("generator produced invalid crossings:\n" + vr.to_string());
    if (p.two_level) {
        Leveling lv = peel_levels(fd.d);
        LevelStructures ls = derive_level_structures(fd.d, lv);
        std::string pre = two_level_precondition(fd.d, ls);
        if (!pre.empty()) throw InternalError("two-level generator drifted: " + pre);
    }
    return std::move(fd.d);
}

MapWitness gen_witness(std::uint64_t seed, int nations, int points, int k) {
    if (k < 2) throw InputError("k must be at least 2");
    if (nations < 0 || points < 0) throw InputError("negative counts");
    if (points > 0 && nations < 2) throw InputError("points need at least two nations");

    MapWitness w;
    w.k = k;
    w.nations = nations;
    w.points = points;

    if (points == 0) { // edgeless witness: isolated nations
        w.graph = PlaneGraph(nations);
        return w;
    }

    SplitMix64 rng(seed);

    // Faces as closed walks of (vertex, edge to the next entry). Vertices are
    // born abstract and remapped so nations precede points in the id space.
    struct Walker {
        std::vector<char> is_nation;
        std::vector<std::pair<VertexId, VertexId>> edges;
        std::vector<std::vector<std::pair<VertexId, EdgeId>>> walks;

        VertexId vtx(bool nation) {
            is_nation.push_back(nation);
            return static_cast<VertexId>(is_nation.size() - 1);
        }
        EdgeId edge(VertexId a, VertexId b) {
            edges.emplace_back(a, b);
            return static_cast<EdgeId>(edges.size() - 1);
        }
    } wk;

    VertexId a = wk.vtx(true), bb = wk.vtx(true), q = wk.vtx(false);
    EdgeId e1 = wk.edge(a, q), e2 = wk.edge(q, bb);
    wk.walks.push_back({{a, e1}, {q, e2}, {bb, e2}, {q, e1}});

    int pair_ops = std::min(nations - 2, points - 1);
    int plain_points = (points - 1) - pair_ops;
    int isolated = (nations - 2) - pair_ops;

    std::vector<int> ops; // 0: nation+point, 1: plain point
    for (int i = 0; i < pair_ops; ++i) ops.push_back(0);
    for (int i = 0; i < plain_points; ++i) ops.push_back(1);
    rng.shuffle(ops);

    for (int op : ops) {
        int widx = static_cast<int>(rng.below(wk.walks.size()));
        auto &walk = wk.walks[widx];
        // first occurrence of each nation, in walk order
        std::vector<int> occ;
        std::set<VertexId> seen;
        for (int t = 0; t < static_cast<int>(walk.size()); ++t)
            if (wk.is_nation[walk[t].first] && seen.insert(walk[t].first).second)
                occ.push_back(t);
        if (occ.size() < 2) throw InternalError("witness walk lost its nations");
        if (op == 0) {
            // pendant: new point bridging an existing nation and a new one;
            // the excursion x -> np -> nn -> np -> x goes in before the old
            // departure of x
            int t0 = occ[static_cast<int>(rng.below(occ.size()))];
            VertexId x = walk[t0].first;
            VertexId nn = wk.vtx(true), np = wk.vtx(false);
            EdgeId xe = wk.edge(x, np), ne = wk.edge(np, nn);
            std::vector<std::pair<VertexId, EdgeId>> ext = {
                {x, xe}, {np, ne}, {nn, ne}, {np, xe}};
            walk.insert(walk.begin() + t0, ext.begin(), ext.end());
        } else {
            int h = rng.range(2, std::min(k, static_cast<int>(occ.size())));
            int start = static_cast<int>(rng.below(occ.size()));
            std::vector<int> chosen;
            for (int t = 0; t < h; ++t) chosen.push_back(occ[(start + t) % occ.size()]);
            std::sort(chosen.begin(), chosen.end());
            VertexId np = wk.vtx(false);
            std::vector<EdgeId> spokes;
            for (int t : chosen) spokes.push_back(wk.edge(walk[t].first, np));
            // split the walk into h sectors around the new point
            std::vector<std::vector<std::pair<VertexId, EdgeId>>> sectors;
            for (int s = 0; s < h; ++s) {
                int from = chosen[s];
                int to = chosen[(s + 1) % h];
                std::vector<std::pair<VertexId, EdgeId>> sec;
                sec.push_back({np, spokes[s]});
                for (int t = from; t != to; t = (t + 1) % static_cast<int>(walk.size()))
                    sec.push_back(walk[t]);
                sec.push_back({walk[to].first, spokes[(s + 1) % h]});
                sectors.push_back(std::move(sec));
            }
            wk.walks[widx] = sectors[0];
            for (int s = 1; s < h; ++s) wk.walks.push_back(sectors[s]);
        }
    }

    // Remap: nations first, then points; isolated nations take the last ids.
    std::vector<VertexId> remap(wk.is_nation.size());
    int next_nation = 0, next_point = nations;
    for (std::size_t v = 0; v < wk.is_nation.size(); ++v)
        remap[v] = wk.is_nation[v] ? next_nation++ : next_point++;
    if (next_nation + isolated != nations || next_point != nations + points)
        throw InternalError("witness generator count drift");

    PlaneGraph g(nations + points);
    for (auto [x, y] : wk.edges) g.add_edge(remap[x], remap[y]);
    // corner chaining over the walks
    std::vector<std::map<EdgeId, EdgeId>> succ(nations + points);
    for (const auto &walk : wk.walks) {
        int D = static_cast<int>(walk.size());
        for (int t = 0; t < D; ++t) {
            VertexId v = remap[walk[t].first];
            EdgeId out = walk[t].second;
            EdgeId in = walk[(t - 1 + D) % D].second;
            succ[v][out] = in;
        }
    }
    for (VertexId v = 0; v < nations + points; ++v) {
        if (succ[v].empty()) {
            g.set_rotation(v, {});
            continue;
        }
        std::vector<EdgeId> rot;
        EdgeId start = succ[v].begin()->first, cur = start;
        do {
            rot.push_back(cur);
            cur = succ[v].at(cur);
        } while (cur != start && rot.size() <= succ[v].size());
        if (rot.size() != succ[v].size())
            throw InternalError("witness rotation at vertex " + std::to_string(v) +
                                " does not close");
        g.set_rotation(v, rot);
    }
    w.graph = std::move(g);

    std::string err = validate_witness(w);
    if (!err.empty()) throw InternalError("generated witness invalid: " + err);
    return w;
}

} // namespace bookem
