#include <iostream>
#include <set>

#include <CLI11.hpp>

#include "bookem/exact.hpp"
#include "bookem/generator.hpp"
#include "bookem/io.hpp"
#include "bookem/multi_level.hpp"
#include "bookem/render.hpp"
#include "bookem/two_level.hpp"
#include "bookem/validate.hpp"

using namespace bookem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitSemantic = 1; // invalid embedding / bound exceeded
constexpr int kExitInput = 2;    // parse or validation failure

std::vector<std::pair<VertexId, VertexId>> simple_edges(const KFramedDrawing &d) {
    std::set<std::pair<VertexId, VertexId>> s;
    for (int ge = 0; ge < d.total_edges(); ++ge) {
        auto [u, v] = d.edge_endpoints(ge);
        s.emplace(std::min(u, v), std::max(u, v));
    }
    return {s.begin(), s.end()};
}

int cmd_embed(const std::string &in, const std::string &out, bool two_level_only, bool debug) {
    KFramedDrawing d = parse_instance(read_file(in));
    ValidationReport vr = validate_kframed(d);
    if (!vr.ok()) {
        std::cerr << "invalid instance:\n" << vr.to_string();
        return kExitInput;
    }
    PageRegistry reg(d.k);
    BookEmbedding emb;
    int bound;
    if (two_level_only) {
        bound = 3 * ceil_div2(d.k) + 2;
        try {
            emb = two_level_embed(d, reg);
        } catch (const InputError &ex) {
            std::cerr << ex.what() << "\n";
            return kExitInput;
        }
    } else {
        bound = 6 * ceil_div2(d.k) + 5;
        EmbedOptions opt;
        opt.debug_good_checks = debug;
        EmbedResult res = multi_level_embed(d, opt);
        emb = std::move(res.embedding);
        if (debug) {
            int bad = 0;
            for (const auto &rep : res.good_checks)
                for (const auto &v : rep.violations) {
                    std::cerr << "good-check level " << rep.level << ": " << v << "\n";
                    ++bad;
                }
            if (bad) {
                std::cerr << bad << " good-property violations\n";
                return kExitSemantic;
            }
        }
    }

    auto crossings = validate_book_embedding(emb, simple_edges(d));
    std::string status = crossings.empty() ? "clean" : "crossings";
    if (!out.empty()) write_file(out, serialize_embedding(emb, reg, bound, status));
    int used = emb.pages_used();
    std::cout << "pages_used " << used << " bound " << bound << " validator " << status << "\n";
    if (!crossings.empty()) {
        for (const auto &c : crossings)
            std::cerr << "crossing on " << reg.name(c.page) << ": (" << c.e1.first << ","
                      << c.e1.second << ") x (" << c.e2.first << "," << c.e2.second << ")\n";
        return kExitSemantic;
    }
    if (used > bound) {
        std::cerr << "page bound exceeded\n";
        return kExitSemantic;
    }
    return kExitOk;
}

int cmd_validate(const std::string &emb_path, const std::string &inst_path) {
    EmbeddingDocument doc = parse_embedding(read_file(emb_path));
    KFramedDrawing d = parse_instance(read_file(inst_path));
    PageRegistry reg(doc.k);
    auto edges = simple_edges(d);
    auto crossings = validate_book_embedding(doc.embedding, edges);
    if (crossings.empty()) {
        std::cout << "valid: " << edges.size() << " edges on " << doc.embedding.pages_used()
                  << " pages, no same-page crossings\n";
        return kExitOk;
    }
    for (const auto &c : crossings)
        std::cout << "crossing on " << reg.name(c.page) << ": (" << c.e1.first << ","
                  << c.e1.second << ") x (" << c.e2.first << "," << c.e2.second << ")\n";
    return kExitSemantic;
}

int cmd_oracle(const std::string &inst_path, int max_n, bool witness_out) {
    KFramedDrawing d = parse_instance(read_file(inst_path));
    auto edges = simple_edges(d);
    BookEmbedding w;
    int bt = exact_book_thickness(d.skeleton.vertex_count(), edges, max_n,
                                  witness_out ? &w : nullptr);
    std::cout << bt << "\n";
    return kExitOk;
}

int cmd_generate(const GenParams &p, int wit_nations, int wit_points, bool witness_mode,
                 const std::string &out) {
    std::string doc;
    if (witness_mode)
        doc = serialize_witness(gen_witness(p.seed, wit_nations, wit_points, p.k));
    else
        doc = serialize_instance(gen_kframed(p));
    if (out.empty())
        std::cout << doc;
    else
        write_file(out, doc);
    return kExitOk;
}

int cmd_map2framed(const std::string &in, const std::string &out) {
    MapWitness w = parse_witness(read_file(in));
    KFramedDrawing d = map_to_framed(w);
    ValidationReport vr = validate_kframed(d);
    if (!vr.ok()) {
        std::cerr << "internal: produced drawing failed validation\n" << vr.to_string();
        return kExitSemantic;
    }
    std::string doc = serialize_instance(d);
    if (out.empty())
        std::cout << doc;
    else
        write_file(out, doc);
    std::cout << "k " << d.k << " vertices " << d.skeleton.vertex_count() << " crossings "
              << d.crossings.size() << "\n";
    return kExitOk;
}

int cmd_framed2map(const std::string &in, const std::string &out) {
    KFramedDrawing d = parse_instance(read_file(in));
    MapWitness w = framed_to_map(d);
    std::string doc = serialize_witness(w);
    if (out.empty())
        std::cout << doc;
    else
        write_file(out, doc);
    return kExitOk;
}

int cmd_render(const std::string &emb_path, const std::string &out) {
    EmbeddingDocument doc = parse_embedding(read_file(emb_path));
    PageRegistry reg(doc.k);
    write_file(out, render_svg(doc.embedding, reg));
    return kExitOk;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"book embeddings of k-framed drawings"};
    app.require_subcommand(1);

    std::string in, out, emb_path, inst_path;
    bool two_level_only = false, debug = false;

    auto *embed = app.add_subcommand("embed", "compute a book embedding");
    embed->add_option("instance", in)->required();
    embed->add_flag("--two-level-only", two_level_only,
                    "base algorithm only; fails on deeper instances");
    embed->add_flag("--debug-good-checks", debug, "check P.1-P.7 after every insertion");
    embed->add_option("-o,--output", out);

    auto *validate = app.add_subcommand("validate", "check an embedding against an instance");
    validate->add_option("embedding", emb_path)->required();
    validate->add_option("instance", inst_path)->required();

    int max_n = 9;
    auto *oracle = app.add_subcommand("oracle", "exact book thickness (small graphs)");
    oracle->add_option("instance", in)->required();
    oracle->add_option("--max-n", max_n);

    GenParams gp;
    int wit_nations = 4, wit_points = 3;
    bool witness_mode = false;
    auto *gen = app.add_subcommand("generate", "seeded random instances");
    gen->add_option("--seed", gp.seed);
    gen->add_option("--k", gp.k);
    gen->add_option("--n", gp.n);
    gen->add_option("--depth", gp.depth);
    gen->add_option("--density", gp.density);
    gen->add_flag("--pentagon", gp.pentagon, "optimal-2-planar pattern (k=5)");
    gen->add_flag("--two-level", gp.two_level, "standalone two-level instance");
    gen->add_flag("--witness", witness_mode, "emit a map witness instead");
    gen->add_option("--nations", wit_nations);
    gen->add_option("--points", wit_points);
    gen->add_option("-o,--output", out);

    auto *m2f = app.add_subcommand("map2framed", "witness to 2k-framed instance");
    m2f->add_option("witness", in)->required();
    m2f->add_option("-o,--output", out);

    auto *f2m = app.add_subcommand("framed2map", "clique-augmented instance to witness");
    f2m->add_option("instance", in)->required();
    f2m->add_option("-o,--output", out);

    auto *render = app.add_subcommand("render", "arc-diagram SVG of an embedding");
    render->add_option("embedding", emb_path)->required();
    render->add_option("-o,--output", out)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (embed->parsed()) return cmd_embed(in, out, two_level_only, debug);
        if (validate->parsed()) return cmd_validate(emb_path, inst_path);
        if (oracle->parsed()) return cmd_oracle(in, max_n, false);
        if (gen->parsed()) {
            if (gp.pentagon) gp.k = 5;
            return cmd_generate(gp, wit_nations, wit_points, witness_mode, out);
        }
        if (m2f->parsed()) return cmd_map2framed(in, out);
        if (f2m->parsed()) return cmd_framed2map(in, out);
        if (render->parsed()) return cmd_render(emb_path, out);
    } catch (const InputError &ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitInput;
    } catch (const std::exception &ex) {
        std::cerr << "internal error: " << ex.what() << "\n";
        return kExitSemantic;
    }
    return kExitInput;
}
