#include "bookem/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace bookem {

using nlohmann::json;

namespace {

json cycle_json(const std::vector<VertexId> &cyc) {
    return json(PlaneGraph::canonical_cycle(cyc));
}

std::vector<VertexId> cycle_from(const json &j) {
    std::vector<VertexId> out;
    for (const auto &x : j) out.push_back(x.get<VertexId>());
    return out;
}

std::string dump(const json &j) { return j.dump(2) + "\n"; }

} // namespace

std::string serialize_instance(const KFramedDrawing &d) {
    const PlaneGraph &g = d.skeleton;
    json j;
    j["format_version"] = 1;
    j["k"] = d.k;
    j["vertices"] = g.vertex_count();
    json edges = json::array();
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.endpoints(e);
        edges.push_back({u, v});
    }
    j["skeleton_edges"] = std::move(edges);
    json rot = json::array();
    for (VertexId v = 0; v < g.vertex_count(); ++v) rot.push_back(g.rotation(v));
    j["rotations"] = std::move(rot);
    j["outer_face"] = cycle_json(g.face_vertices(g.outer_face()));
    json cross = json::array();
    for (const CrossingEdge &ce : d.crossings) {
        json c;
        c["u"] = ce.u;
        c["v"] = ce.v;
        c["host"] = cycle_json(g.face_vertices(ce.host));
        if (ce.origin == CrossingOrigin::Augmented) c["augmented"] = true;
        cross.push_back(std::move(c));
    }
    j["crossing_edges"] = std::move(cross);
    return dump(j);
}

KFramedDrawing parse_instance(const std::string &text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const std::exception &ex) {
        throw InputError(std::string("instance is not valid JSON: ") + ex.what());
    }
    try {
        if (j.at("format_version").get<int>() != 1)
            throw InputError("unsupported instance format_version");
        KFramedDrawing d;
        d.k = j.at("k").get<int>();
        int n = j.at("vertices").get<int>();
        PlaneGraph g(n);
        for (const auto &e : j.at("skeleton_edges"))
            g.add_edge(e.at(0).get<VertexId>(), e.at(1).get<VertexId>());
        const auto &rots = j.at("rotations");
        if (static_cast<int>(rots.size()) != n)
            throw InputError("rotations array does not match the vertex count");
        for (VertexId v = 0; v < n; ++v) {
            std::vector<EdgeId> r;
            for (const auto &x : rots.at(v)) r.push_back(x.get<EdgeId>());
            g.set_rotation(v, std::move(r));
        }
        std::string rot_err = g.rotation_error();
        if (!rot_err.empty()) throw InputError("bad rotation system: " + rot_err);
        g.trace_faces();

        FaceId outer = g.find_face_by_cycle(cycle_from(j.at("outer_face")));
        if (outer == kNoFace) throw InputError("outer_face cycle does not bound any face");
        g.set_outer_face(outer);

        d.skeleton = std::move(g);
        for (const auto &c : j.at("crossing_edges")) {
            CrossingEdge ce;
            ce.u = c.at("u").get<VertexId>();
            ce.v = c.at("v").get<VertexId>();
            ce.host = d.skeleton.find_face_by_cycle(cycle_from(c.at("host")));
            if (ce.host == kNoFace)
                throw InputError("crossing host cycle does not bound any face");
            if (c.contains("augmented") && c.at("augmented").get<bool>())
                ce.origin = CrossingOrigin::Augmented;
            d.crossings.push_back(ce);
        }
        return d;
    } catch (const json::exception &ex) {
        throw InputError(std::string("malformed instance document: ") + ex.what());
    }
}

std::string serialize_embedding(const BookEmbedding &e, const PageRegistry &reg, int bound,
                                const std::string &validator_status) {
    json j;
    j["format_version"] = 1;
    j["vertex_order"] = e.order;
    json pages = json::object();
    for (const auto &[pr, pg] : e.pages) {
        std::string name = reg.name(pg);
        if (!pages.contains(name)) pages[name] = json::array();
        pages[name].push_back({pr.first, pr.second});
    }
    j["pages"] = std::move(pages);
    json meta;
    meta["k"] = e.k;
    meta["pages_used"] = e.pages_used();
    meta["bound"] = bound;
    meta["validator"] = validator_status;
    j["metadata"] = std::move(meta);
    return dump(j);
}

EmbeddingDocument parse_embedding(const std::string &text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const std::exception &ex) {
        throw InputError(std::string("embedding is not valid JSON: ") + ex.what());
    }
    try {
        EmbeddingDocument doc;
        doc.k = j.at("metadata").at("k").get<int>();
        doc.pages_used = j.at("metadata").at("pages_used").get<int>();
        doc.bound = j.at("metadata").at("bound").get<int>();
        doc.validator_status = j.at("metadata").at("validator").get<std::string>();
        doc.embedding.k = doc.k;
        for (const auto &x : j.at("vertex_order"))
            doc.embedding.order.push_back(x.get<VertexId>());
        PageRegistry reg(doc.k);
        for (const auto &[name, list] : j.at("pages").items()) {
            PageId pg = reg.by_name(name);
            if (pg == kNoPage) throw InputError("unknown page name: " + name);
            for (const auto &e : list) {
                VertexId u = e.at(0).get<VertexId>(), v = e.at(1).get<VertexId>();
                doc.embedding.pages[{std::min(u, v), std::max(u, v)}] = pg;
            }
        }
        return doc;
    } catch (const json::exception &ex) {
        throw InputError(std::string("malformed embedding document: ") + ex.what());
    }
}

std::string serialize_witness(const MapWitness &w) {
    json j;
    j["format_version"] = 1;
    j["k"] = w.k;
    j["nations"] = w.nations;
    j["points"] = w.points;
    json edges = json::array();
    for (EdgeId e = 0; e < w.graph.edge_count(); ++e) {
        auto [u, v] = w.graph.endpoints(e);
        edges.push_back({u, v});
    }
    j["edges"] = std::move(edges);
    json rot = json::array();
    for (VertexId v = 0; v < w.graph.vertex_count(); ++v) rot.push_back(w.graph.rotation(v));
    j["rotations"] = std::move(rot);
    return dump(j);
}

MapWitness parse_witness(const std::string &text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const std::exception &ex) {
        throw InputError(std::string("witness is not valid JSON: ") + ex.what());
    }
    try {
        if (j.at("format_version").get<int>() != 1)
            throw InputError("unsupported witness format_version");
        MapWitness w;
        w.k = j.at("k").get<int>();
        w.nations = j.at("nations").get<int>();
        w.points = j.at("points").get<int>();
        PlaneGraph g(w.nations + w.points);
        for (const auto &e : j.at("edges"))
            g.add_edge(e.at(0).get<VertexId>(), e.at(1).get<VertexId>());
        const auto &rots = j.at("rotations");
        if (static_cast<int>(rots.size()) != g.vertex_count())
            throw InputError("rotations array does not match the vertex count");
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            std::vector<EdgeId> r;
            for (const auto &x : rots.at(v)) r.push_back(x.get<EdgeId>());
            g.set_rotation(v, std::move(r));
        }
        w.graph = std::move(g);
        std::string err = validate_witness(w);
        if (!err.empty()) throw InputError("invalid witness: " + err);
        return w;
    } catch (const json::exception &ex) {
        throw InputError(std::string("malformed witness document: ") + ex.what());
    }
}

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string &path, const std::string &content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write " + path);
    out << content;
}

} // namespace bookem
