#include "bookem/multi_level.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>

#include "bookem/validate.hpp"

namespace bookem {

InstancePages choose_pages(const InstancePages &parent, int parity_odd) {
    InstancePages child;
    child.b = parity_odd ? parent.f2 : parent.f1;
    std::vector<PageId> rest;
    for (PageId p = 0; p < 5; ++p)
        if (p != parent.b && p != parent.f1 && p != parent.f2) rest.push_back(p);
    if (rest.size() != 2) throw InternalError("page complement is not a pair");
    child.f1 = parity_odd ? rest[0] : rest[1];
    child.f2 = parity_odd ? rest[1] : rest[0];
    return child;
}

void Spine::init(const std::vector<VertexId> &start, int n) {
    seq_.clear();
    at_.assign(n, seq_.end());
    for (VertexId v : start) at_[v] = seq_.insert(seq_.end(), v);
}

void Spine::insert_before(VertexId anchor, const std::vector<VertexId> &vs) {
    auto it = at_[anchor];
    for (VertexId v : vs) at_[v] = seq_.insert(it, v);
}

void Spine::insert_after(VertexId anchor, const std::vector<VertexId> &vs) {
    auto it = std::next(at_[anchor]);
    for (VertexId v : vs) at_[v] = seq_.insert(it, v);
}

std::vector<VertexId> Spine::to_vector() const { return {seq_.begin(), seq_.end()}; }

std::vector<int> Spine::ranks(int n) const {
    std::vector<int> r(n, -1);
    int i = 0;
    for (VertexId v : seq_) r[v] = i++;
    return r;
}

void insert_bicomponent(Spine &spine, const std::vector<VertexId> &rho_local,
                        const std::vector<VertexId> &boundary) {
    std::set<VertexId> bset(boundary.begin(), boundary.end());
    std::vector<VertexId> segment;
    std::size_t bi = 0;
    for (VertexId v : rho_local) {
        if (bset.count(v)) {
            if (bi >= boundary.size() || boundary[bi] != v)
                throw InternalError("bicomponent boundary out of order in its local embedding");
            if (!segment.empty()) {
                if (bi == 0)
                    throw InternalError("local order placed interior vertices before u0");
                spine.insert_before(v, segment);
                segment.clear();
            }
            ++bi;
        } else {
            segment.push_back(v);
        }
    }
    if (bi != boundary.size()) throw InternalError("local order misses boundary vertices");
    if (!segment.empty()) spine.insert_after(boundary.back(), segment);
}

namespace {

struct JEdge {
    int ge;
    EdgeClass cls;
    PageId page;
    int target_block; // journal block index for forwards, else -1
};

struct JBlock {
    int gid = -1; // -1: synthetic degenerate root
    bool is_cycle = false;
    std::vector<VertexId> members;
    std::vector<VertexId> assigned;
    VertexId leader = kNoVertex;
    int depth = 0;
    int component = -1; // cactus component (global id)
};

struct Journal {
    int level = 0;
    int boundary_gid = -1;
    InstancePages pages;
    VertexId leftmost = kNoVertex;
    std::vector<VertexId> boundary;
    std::vector<JBlock> blocks;
    std::vector<JEdge> edges;
};

class Driver {
public:
    Driver(const KFramedDrawing &d, const EmbedOptions &opt)
        : input_(&d), work_(augment_cliques(d)), reg_(d.k), debug_(opt.debug_good_checks) {
        lv_ = peel_levels(work_);
        ls_ = derive_level_structures(work_, lv_);
        lookup_ = build_edge_lookup(work_);
        pages_.page.assign(work_.total_edges(), kNoPage);
        pages_.seq.assign(work_.total_edges(), -1);
        assigned_.assign(work_.total_edges(), 0);
    }

    EmbedResult run() {
        const CactusBlock &c0 = ls_.blocks[ls_.blocks_at_level[0][0]];
        std::vector<VertexId> start = c0.cycle; // stored ccw; spine wants clockwise
        std::reverse(start.begin() + 1, start.end());
        spine_.init(start, work_.skeleton.vertex_count());

        for (int lvl = 1; lvl <= lv_.depth; ++lvl) run_level(lvl);
        closing_step();

        for (int ge = 0; ge < work_.total_edges(); ++ge)
            if (pages_.page[ge] == kNoPage)
                throw InternalError("edge copy " + std::to_string(ge) + " left unassigned");

        EmbedResult res;
        res.embedding = strip_augmentation(spine_.to_vector(), pages_, work_, *input_);
        res.page_bound = 5 + 6 * ceil_div2(input_->k);
        res.stats.depth = lv_.depth;
        res.stats.instances = static_cast<int>(journals_.size());
        res.stats.augmented_edges = work_.total_edges() - input_->total_edges();
        res.good_checks = std::move(reports_);
        return res;
    }

private:
    const KFramedDrawing *input_;
    KFramedDrawing work_;
    Leveling lv_;
    LevelStructures ls_;
    EdgeLookup lookup_;
    PageRegistry reg_;
    Spine spine_;
    PerEdgePages pages_;
    std::vector<char> assigned_;
    int seq_counter_ = 0;
    std::map<int, InstancePages> pages_for_block_;
    std::map<int, std::pair<int, int>> parent_of_block_; // gid -> (journal idx, depth)
    std::vector<Journal> journals_;
    std::vector<GoodCheckReport> reports_;
    bool debug_;

    void assign(int ge, PageId pg) {
        if (pages_.page[ge] != kNoPage) throw InternalError("edge copy assigned twice");
        pages_.page[ge] = pg;
        pages_.seq[ge] = seq_counter_++;
    }

    void run_level(int lvl);
    void closing_step();
    std::vector<std::string> check_good(int lvl) const;
};

void Driver::run_level(int lvl) {
    std::vector<TwoLevelInstance> insts = bicomponents(work_, ls_, lvl);
    std::vector<int> rank = spine_.ranks(work_.skeleton.vertex_count());

    std::vector<std::pair<int, int>> by_leftmost;
    for (int i = 0; i < static_cast<int>(insts.size()); ++i) {
        int best = INT32_MAX;
        for (VertexId v : insts[i].boundary) best = std::min(best, rank[v]);
        by_leftmost.emplace_back(best, i);
    }
    std::sort(by_leftmost.begin(), by_leftmost.end());

    for (auto [leftrank, ii] : by_leftmost) {
        (void)leftrank;
        TwoLevelInstance inst = insts[ii];
        const CactusBlock &bb = ls_.blocks[inst.boundary_block];

        // Boundary in spine order; direction relative to the stored
        // counterclockwise cycle decides the mirror flag.
        std::vector<VertexId> border = bb.cycle;
        std::sort(border.begin(), border.end(),
                  [&rank](VertexId a, VertexId b) { return rank[a] < rank[b]; });
        int s = static_cast<int>(border.size());
        int pos = -1;
        for (int t = 0; t < s; ++t)
            if (bb.cycle[t] == border[0]) pos = t;
        bool fwd = true, rev = true;
        for (int t = 0; t < s; ++t) {
            if (bb.cycle[(pos + t) % s] != border[t]) fwd = false;
            if (bb.cycle[((pos - t) % s + s) % s] != border[t]) rev = false;
        }
        if (!fwd && !rev)
            throw InternalError("spine order of block " + std::to_string(bb.id) +
                                " is not a rotation of its cycle (P.1 broken)");
        inst.boundary = border;
        inst.mirrored = fwd; // spine runs counterclockwise: mirror the local view

        InstancePages ip;
        if (lvl == 1) {
            ip = InstancePages{0, 1, 2};
        } else {
            auto it = pages_for_block_.find(inst.boundary_block);
            if (it == pages_for_block_.end())
                throw InternalError("no page roles recorded for boundary block " +
                                    std::to_string(inst.boundary_block));
            ip = it->second;
        }

        TwoLevelContext cx = make_context(work_, ls_, lookup_, std::move(inst));
        TwoLevelAnalysis an = analyze_two_level(cx, assigned_);

        Journal j;
        j.level = lvl;
        j.boundary_gid = cx.inst.boundary_block;
        j.pages = ip;
        j.boundary = cx.inst.boundary;
        j.leftmost = cx.inst.boundary[0];

        std::vector<int> local_to_journal(an.blocks.blocks.size(), -1);
        for (std::size_t b = 0; b < an.blocks.blocks.size(); ++b) {
            const TLBlock &tb = an.blocks.blocks[b];
            JBlock jb;
            jb.gid = tb.gid;
            jb.leader = tb.leader;
            jb.assigned = tb.assigned;
            jb.depth = tb.depth;
            if (tb.gid >= 0) {
                const CactusBlock &cb = ls_.blocks[tb.gid];
                jb.is_cycle = cb.is_cycle;
                jb.component = cb.component;
                if (cb.is_cycle)
                    jb.members = cb.cycle;
                else {
                    auto [x, y] = work_.skeleton.endpoints(cb.edges[0]);
                    jb.members = {x, y};
                }
            } else {
                jb.members = {tb.leader};
                jb.component = ls_.component_of[tb.leader];
            }
            local_to_journal[b] = static_cast<int>(j.blocks.size());
            j.blocks.push_back(std::move(jb));

            if (tb.gid >= 0 && tb.is_cycle) {
                pages_for_block_[tb.gid] = choose_pages(ip, tb.depth & 1);
                parent_of_block_[tb.gid] = {static_cast<int>(journals_.size()), tb.depth};
            }
        }

        int fam_j = lvl % 2;
        for (const ClassifiedEdge &cl : an.assignments) {
            PageId pg;
            int target = -1;
            switch (cl.cls) {
            case EdgeClass::Backward: pg = ip.b; break;
            case EdgeClass::Forward: pg = cl.fwd_parity ? ip.f1 : ip.f2; break;
            default: pg = reg_.family_page(cl.color, fam_j, cl.page_idx); break;
            }
            if (cl.cls == EdgeClass::Forward) {
                auto [u, v] = work_.edge_endpoints(cl.ge);
                VertexId w = an.rho_rank.at(u) < an.rho_rank.at(v) ? u : v;
                auto bv = an.blocks.block_of_vertex.find(w);
                if (bv != an.blocks.block_of_vertex.end())
                    target = local_to_journal[bv->second];
            }
            assign(cl.ge, pg);
            j.edges.push_back({cl.ge, cl.cls, pg, target});
        }

        insert_bicomponent(spine_, an.rho, cx.inst.boundary);
        journals_.push_back(std::move(j));

        if (debug_) {
            GoodCheckReport rep;
            rep.level = lvl;
            rep.instance = static_cast<int>(journals_.size()) - 1;
            rep.violations = check_good(lvl);
            reports_.push_back(std::move(rep));
        }
    }
}

void Driver::closing_step() {
    // Crossing edges of the unbounded face go to the R^0 family: their
    // endpoints are level-0 vertices, and everything already in that family
    // is confined between consecutive level-0 vertices.
    const CactusBlock &c0 = ls_.blocks[ls_.blocks_at_level[0][0]];
    std::vector<int> rank = spine_.ranks(work_.skeleton.vertex_count());
    std::vector<VertexId> members = c0.cycle;
    std::sort(members.begin(), members.end(),
              [&rank](VertexId a, VertexId b) { return rank[a] < rank[b]; });
    std::map<VertexId, int> mrank;
    for (int i = 0; i < static_cast<int>(members.size()); ++i) mrank[members[i]] = i;
    int q = static_cast<int>(members.size());

    for (std::size_t i = 0; i < work_.crossings.size(); ++i) {
        if (ls_.crossing_host_class[i] != 0) continue;
        int ge = work_.skeleton.edge_count() + static_cast<int>(i);
        if (pages_.page[ge] != kNoPage) continue;
        const CrossingEdge &ce = work_.crossings[i];
        int idx = clique_page_index(mrank.at(ce.u), mrank.at(ce.v), q);
        assign(ge, reg_.family_page(0, 0, idx));
    }
}

std::vector<std::string> Driver::check_good(int lvl) const {
    std::vector<std::string> out;
    std::vector<int> rank = spine_.ranks(work_.skeleton.vertex_count());
    auto complain = [&out](const std::string &s) { out.push_back(s); };

    struct PB { // placed block of the current level
        const JBlock *jb;
        const Journal *j;
        VertexId leftmost;
        int lo_rest, hi_rest; // rank span of members minus leftmost
        int lo_all, hi_all;
    };
    std::vector<PB> placed;
    std::map<VertexId, std::vector<int>> blocks_with; // member vertex -> placed idx
    for (const Journal &j : journals_) {
        if (j.level != lvl) continue;
        for (const JBlock &jb : j.blocks) {
            if (jb.gid < 0) continue; // synthetic roots are single vertices
            PB pb;
            pb.jb = &jb;
            pb.j = &j;
            pb.leftmost = jb.members[0];
            pb.lo_all = INT32_MAX;
            pb.hi_all = -1;
            for (VertexId v : jb.members) {
                if (rank[v] < rank[pb.leftmost]) pb.leftmost = v;
                pb.lo_all = std::min(pb.lo_all, rank[v]);
                pb.hi_all = std::max(pb.hi_all, rank[v]);
            }
            pb.lo_rest = INT32_MAX;
            pb.hi_rest = -1;
            for (VertexId v : jb.members) {
                if (v == pb.leftmost) continue;
                pb.lo_rest = std::min(pb.lo_rest, rank[v]);
                pb.hi_rest = std::max(pb.hi_rest, rank[v]);
            }
            for (VertexId v : jb.members) blocks_with[v].push_back(static_cast<int>(placed.size()));
            placed.push_back(pb);
        }
    }

    std::vector<VertexId> order = spine_.to_vector();

    // P.1: block boundary order matches a ccw (odd level) or cw (even level)
    // traversal.
    for (const PB &pb : placed) {
        if (!pb.jb->is_cycle) continue;
        const std::vector<VertexId> &cyc = ls_.blocks[pb.jb->gid].cycle; // ccw
        std::vector<VertexId> by_rank = cyc;
        std::sort(by_rank.begin(), by_rank.end(),
                  [&rank](VertexId a, VertexId b) { return rank[a] < rank[b]; });
        int s = static_cast<int>(cyc.size());
        int pos = -1;
        for (int t = 0; t < s; ++t)
            if (cyc[t] == by_rank[0]) pos = t;
        bool fwd = true, rev = true;
        for (int t = 0; t < s; ++t) {
            if (cyc[(pos + t) % s] != by_rank[t]) fwd = false;
            if (cyc[((pos - t) % s + s) % s] != by_rank[t]) rev = false;
        }
        bool want_ccw = (lvl % 2) == 1;
        if (!(want_ccw ? fwd : rev))
            complain("P.1: block " + std::to_string(pb.jb->gid) + " at level " +
                     std::to_string(lvl) + " runs the wrong way");
    }

    // P.2: members minus leftmost are consecutive on the spine and
    // (lvl-1)-delimited.
    for (const PB &pb : placed) {
        int count = static_cast<int>(pb.jb->members.size()) - 1;
        if (count <= 0) continue;
        if (pb.hi_rest - pb.lo_rest + 1 != count)
            complain("P.2: block " + std::to_string(pb.jb->gid) + " is not consecutive");
        for (int r = pb.lo_rest; r <= pb.hi_rest; ++r)
            if (lv_.level[order[r]] == lvl - 1)
                complain("P.2: block " + std::to_string(pb.jb->gid) + " is not (i-1)-delimited");
    }

    // P.3 / P.4 over pairs of placed blocks.
    for (const PB &b : placed) {
        if (b.lo_rest > b.hi_rest) continue;
        for (int r = rank[b.leftmost] + 1; r < b.lo_rest; ++r) {
            VertexId v = order[r];
            if (lv_.level[v] != lvl) continue;
            auto it = blocks_with.find(v);
            if (it == blocks_with.end()) continue;
            for (int pi : it->second) {
                const PB &bp = placed[pi];
                if (bp.jb == b.jb || bp.jb->component != b.jb->component) continue;
                if (rank[bp.leftmost] < rank[b.leftmost]) {
                    bool shares = std::find(bp.jb->members.begin(), bp.jb->members.end(),
                                            b.leftmost) != bp.jb->members.end();
                    if (!shares)
                        complain("P.3: blocks " + std::to_string(b.jb->gid) + " and " +
                                 std::to_string(bp.jb->gid) + " interleave without sharing");
                }
            }
        }
    }
    for (std::size_t x = 0; x < placed.size(); ++x)
        for (std::size_t y = 0; y < placed.size(); ++y) {
            if (x == y) continue;
            const PB &B = placed[x], &Bp = placed[y];
            if (rank[B.leftmost] >= rank[Bp.leftmost]) continue;
            bool share = false;
            for (VertexId v : B.jb->members)
                if (std::find(Bp.jb->members.begin(), Bp.jb->members.end(), v) !=
                    Bp.jb->members.end())
                    share = true;
            if (share) continue;
            if (B.lo_rest > B.hi_rest) continue;
            bool ok = rank[Bp.leftmost] < B.lo_rest ||
                      (Bp.lo_rest > Bp.hi_rest ? true : Bp.hi_rest < B.lo_rest);
            if (!ok)
                complain("P.4: blocks " + std::to_string(B.jb->gid) + " and " +
                         std::to_string(Bp.jb->gid) + " violate the leftmost discipline");
        }

    // P.5: whole blocks are j-delimited for every j <= lvl-2.
    for (const PB &pb : placed)
        for (int r = pb.lo_all + 1; r < pb.hi_all; ++r)
            if (lv_.level[order[r]] <= lvl - 2)
                complain("P.5: block " + std::to_string(pb.jb->gid) +
                         " spans a vertex of level <= i-2");

    // P.6 and P.7a-e from the journals.
    int fam = reg_.family_size();
    for (const Journal &j : journals_) {
        for (const JEdge &je : j.edges) {
            if (je.page < 0 || je.page >= reg_.page_count())
                complain("P.6: page outside the registry");
            if (je.cls == EdgeClass::NonDominator) {
                int jj = (je.page - 5) / (3 * fam);
                if (je.page < 5 || jj != j.level % 2)
                    complain("P.7a: non-dominator edge of level " + std::to_string(j.level) +
                             " on the wrong family");
            } else {
                if (je.page >= 5) complain("P.7c: dominator edge outside {p0..p4}");
            }
            auto [u, v] = work_.edge_endpoints(je.ge);
            if (je.cls != EdgeClass::Backward && (u == j.leftmost || v == j.leftmost))
                complain("P.7b: interior edge at the leftmost vertex is not backward");
            if (je.cls == EdgeClass::Backward && je.page != j.pages.b)
                complain("P.7c: backward edge off its bicomponent page");
            if (je.cls == EdgeClass::Forward && je.page != j.pages.f1 && je.page != j.pages.f2)
                complain("P.7c: forward edge off its bicomponent pages");
        }
        // P.7d: forward edges into one block share a page.
        std::map<int, std::set<PageId>> per_target;
        for (const JEdge &je : j.edges)
            if (je.cls == EdgeClass::Forward && je.target_block >= 0)
                per_target[je.target_block].insert(je.page);
        for (auto &[t, pgs] : per_target)
            if (pgs.size() > 1) complain("P.7d: forward edges into one block on two pages");
        // P.7e: the page chain.
        if (j.level >= 2) {
            auto it = parent_of_block_.find(j.boundary_gid);
            if (it == parent_of_block_.end()) {
                complain("P.7e: missing parent record");
            } else {
                const Journal &pj = journals_[it->second.first];
                int parity = it->second.second & 1;
                PageId incident = parity ? pj.pages.f1 : pj.pages.f2;
                PageId other = parity ? pj.pages.f2 : pj.pages.f1;
                if (j.pages.b != other)
                    complain("P.7e: backward page is not the parent's other forward page");
                std::set<PageId> have = {j.pages.f1, j.pages.f2};
                std::set<PageId> want;
                for (PageId p = 0; p < 5; ++p)
                    if (p != pj.pages.b && p != pj.pages.f1 && p != pj.pages.f2) want.insert(p);
                if (have != want) complain("P.7e: forward pages are not the complement pair");
                (void)incident;
            }
        }
    }
    return out;
}

} // namespace

EmbedResult multi_level_embed(const KFramedDrawing &d, const EmbedOptions &opt) {
    ValidationReport vr = validate_kframed(d);
    if (!vr.ok()) throw InputError("invalid drawing:\n" + vr.to_string());
    Driver drv(d, opt);
    return drv.run();
}

} // namespace bookem
