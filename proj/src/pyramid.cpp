#include "cocyc/pyramid.hpp"

#include <algorithm>
#include <deque>
#include <ostream>
#include <random>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace cocyc {

std::vector<VertexId> ContractionKernel::vertices() const {
    std::vector<VertexId> out{root};
    for (const auto& ke : tree_edges) out.push_back(ke.child);
    std::sort(out.begin(), out.end());
    return out;
}

const ContractionKernel* LevelStep::kernel_rooted_at(VertexId v) const {
    auto it = std::lower_bound(kernels.begin(), kernels.end(), v,
                               [](const ContractionKernel& k, VertexId r) { return k.root < r; });
    return it != kernels.end() && it->root == v ? &*it : nullptr;
}

void OperationLog::push(LevelStep s) {
    std::sort(s.kernels.begin(), s.kernels.end(),
              [](const ContractionKernel& a, const ContractionKernel& b) { return a.root < b.root; });
    std::vector<std::pair<VertexId, VertexId>> absorbed;
    for (const auto& k : s.kernels)
        for (const auto& ke : k.tree_edges) absorbed.emplace_back(ke.child, k.root);
    std::sort(absorbed.begin(), absorbed.end());
    absorbed_.push_back(std::move(absorbed));
    steps_.push_back(std::move(s));
}

VertexId OperationLog::surviving_vertex(int k, VertexId v) const {
    const auto& a = absorbed_.at(static_cast<std::size_t>(k));
    auto it = std::lower_bound(a.begin(), a.end(), std::pair<VertexId, VertexId>{v, kNone});
    if (it != a.end() && it->first == v) return it->second;
    return v;
}

EdgeId OperationLog::preimage(int k, EdgeId e) const {
    if (k < 1 || static_cast<std::size_t>(k) > steps_.size())
        throw std::out_of_range("preimage: level " + std::to_string(k) + " has no predecessor");
    return e;
}

KernelPolicy fast_policy(std::size_t edge_count, std::uint64_t seed) {
    KernelPolicy p;
    p.eligible.assign(edge_count, 1);
    p.priority.resize(edge_count);
    std::mt19937_64 rng(seed);
    for (auto& x : p.priority) x = rng();
    return p;
}

std::vector<ContractionKernel> kernels_from_forest(int level_index, const LevelPair& level,
                                                   std::span<const EdgeId> forest, const RootChooser& root) {
    std::unordered_map<VertexId, std::vector<std::pair<EdgeId, VertexId>>> adj;
    for (EdgeId e : forest) {
        if (!level.has_edge(e)) throw ContractViolation("kernel edge " + std::to_string(e) + " not at this level");
        auto [a, b] = level.primal_endpoints(e);
        if (a == b) throw ContractViolation("kernel edge " + std::to_string(e) + " is a self-loop");
        adj[a].emplace_back(e, b);
        adj[b].emplace_back(e, a);
    }
    std::vector<VertexId> order;
    order.reserve(adj.size());
    for (const auto& [v, _] : adj) order.push_back(v);
    std::sort(order.begin(), order.end());

    std::vector<ContractionKernel> out;
    std::unordered_map<VertexId, bool> seen;
    for (VertexId start : order) {
        if (seen[start]) continue;
        // Gather the component, then orient it from the chosen root.
        std::vector<VertexId> members{start};
        seen[start] = true;
        std::size_t edge_ends = 0;
        for (std::size_t i = 0; i < members.size(); ++i) {
            for (auto [e, w] : adj[members[i]]) {
                ++edge_ends;
                if (!seen[w]) {
                    seen[w] = true;
                    members.push_back(w);
                }
            }
        }
        if (edge_ends / 2 != members.size() - 1) throw ContractViolation("kernel edges contain a cycle");
        std::sort(members.begin(), members.end());
        ContractionKernel k;
        k.level = level_index;
        k.root = root ? root(members) : members.front();
        if (!std::binary_search(members.begin(), members.end(), k.root))
            throw ContractViolation("kernel root is not a kernel vertex");
        std::unordered_map<VertexId, bool> placed{{k.root, true}};
        std::deque<VertexId> queue{k.root};
        while (!queue.empty()) {
            const VertexId v = queue.front();
            queue.pop_front();
            for (auto [e, w] : adj[v]) {
                if (placed[w]) continue;
                placed[w] = true;
                k.tree_edges.push_back({e, w, v});
                queue.push_back(w);
            }
        }
        std::reverse(k.tree_edges.begin(), k.tree_edges.end());
        out.push_back(std::move(k));
    }
    return out;
}

std::vector<ContractionKernel> select_kernels(int level_index, const LevelPair& level,
                                              std::span<const Label> labels, const KernelPolicy& policy) {
    std::unordered_map<VertexId, EdgeId> best;
    const auto better = [&](EdgeId a, EdgeId b) {
        const auto pa = policy.priority[static_cast<std::size_t>(a)];
        const auto pb = policy.priority[static_cast<std::size_t>(b)];
        return pa != pb ? pa < pb : a < b;
    };
    for (EdgeId e : level.primal_edges()) {
        if (!policy.eligible[static_cast<std::size_t>(e)]) continue;
        auto [a, b] = level.primal_endpoints(e);
        if (a == b || labels[static_cast<std::size_t>(a)] != labels[static_cast<std::size_t>(b)]) continue;
        for (VertexId v : {a, b}) {
            auto it = best.find(v);
            if (it == best.end())
                best.emplace(v, e);
            else if (better(e, it->second))
                it->second = e;
        }
    }
    std::vector<EdgeId> forest;
    forest.reserve(best.size());
    for (const auto& [v, e] : best) forest.push_back(e);
    std::sort(forest.begin(), forest.end());
    forest.erase(std::unique(forest.begin(), forest.end()), forest.end());
    return kernels_from_forest(level_index, level, forest);
}

namespace {

void validate_kernels(const LevelPair& level, const std::vector<ContractionKernel>& kernels,
                      std::span<const Label> labels, std::vector<VertexId>& survivor) {
    for (const auto& k : kernels) {
        if (!level.has_vertex(k.root)) throw ContractViolation("kernel root not at this level");
        for (const auto& ke : k.tree_edges) {
            if (!level.has_edge(ke.edge))
                throw ContractViolation("kernel edge " + std::to_string(ke.edge) + " not at this level");
            auto [a, b] = level.primal_endpoints(ke.edge);
            if (a == b) throw ContractViolation("contracting self-loop " + std::to_string(ke.edge));
            if (!((a == ke.child && b == ke.parent) || (b == ke.child && a == ke.parent)))
                throw ContractViolation("kernel edge " + std::to_string(ke.edge) + " has wrong endpoints");
            if (labels[static_cast<std::size_t>(a)] != labels[static_cast<std::size_t>(b)])
                throw ContractViolation("kernel edge " + std::to_string(ke.edge) + " joins different labels");
            if (survivor[static_cast<std::size_t>(ke.child)] != kNone || ke.child == k.root)
                throw ContractViolation("vertex " + std::to_string(ke.child) + " absorbed twice");
            survivor[static_cast<std::size_t>(ke.child)] = k.root;
        }
    }
    std::vector<VertexId> roots;
    for (const auto& k : kernels) roots.push_back(k.root);
    std::sort(roots.begin(), roots.end());
    if (std::adjacent_find(roots.begin(), roots.end()) != roots.end())
        throw ContractViolation("two kernels share a root");
    // Every child must reach its root through parents of the same kernel.
    for (const auto& k : kernels) {
        for (const auto& ke : k.tree_edges) {
            VertexId v = ke.parent;
            if (v != k.root && survivor[static_cast<std::size_t>(v)] != k.root)
                throw ContractViolation("kernel edge parent outside its kernel");
        }
    }
}

}  // namespace

std::pair<LevelPair, LevelStep> contract_and_simplify(int level_index, const LevelPair& level,
                                                      std::vector<ContractionKernel> kernels,
                                                      std::span<const Label> labels, const SurvivorLess& survivor_less) {
    const std::size_t cap = level.primal_edges().empty() ? 0 : static_cast<std::size_t>(level.primal_edges().back()) + 1;
    std::vector<VertexId> survivor(labels.size(), kNone);
    validate_kernels(level, kernels, labels, survivor);
    for (const auto& k : kernels)
        if (survivor[static_cast<std::size_t>(k.root)] != kNone)
            throw ContractViolation("kernels are not vertex-disjoint");

    CombinatorialMap map = CombinatorialMap::from_level(level, cap);
    for (const auto& k : kernels)
        for (const auto& ke : k.tree_edges) map.contract(ke.edge);

    std::vector<VertexId> vertex_of_dart(2 * cap, kNone);
    for (EdgeId e : level.primal_edges()) {
        if (!map.alive(e)) continue;
        for (int side = 0; side < 2; ++side) {
            const DartId d = dart_of(e, side);
            const VertexId v = level.vertex_of(d);
            const VertexId s = survivor[static_cast<std::size_t>(v)];
            vertex_of_dart[static_cast<std::size_t>(d)] = s == kNone ? v : s;
        }
    }

    LevelStep step;
    // Simplification to a fixed point. Only faces whose phi changed can shrink,
    // so after removing an edge the dart before each of its ends is revisited.
    std::vector<DartId> work;
    for (auto it = level.primal_edges().rbegin(); it != level.primal_edges().rend(); ++it) {
        if (!map.alive(*it)) continue;
        work.push_back(dart_of(*it, 1));
        work.push_back(dart_of(*it, 0));
    }
    const auto drop = [&](EdgeId e) {
        std::vector<DartId> touched;
        for (int side = 0; side < 2; ++side) {
            const DartId d = dart_of(e, side);
            DartId p = map.sigma_inverse(d);
            while (p != d && edge_of(p) == e) p = map.sigma_inverse(p);
            if (p != d && edge_of(p) != e) touched.push_back(opposite(p));
        }
        map.remove(e);
        for (DartId t : touched)
            if (map.alive(edge_of(t))) work.push_back(t);
    };
    while (!work.empty()) {
        const DartId d = work.back();
        work.pop_back();
        const EdgeId e = edge_of(d);
        if (!map.alive(e)) continue;
        const int len = map.face_length_upto(d, 3);
        if (len == 1) {
            step.removals.push_back({e, RemovalKind::PendingTree, kNone});
            drop(e);
        } else if (len == 2) {
            const EdgeId f = edge_of(map.phi(d));
            if (f == e) continue;
            const bool keep_e = survivor_less(e, f);
            const EdgeId gone = keep_e ? f : e;
            step.removals.push_back({gone, RemovalKind::DegreeTwo, keep_e ? e : f});
            drop(gone);
        }
    }

    std::vector<VertexId> vertices;
    for (VertexId v : level.primal_vertices())
        if (survivor[static_cast<std::size_t>(v)] == kNone) vertices.push_back(v);
    step.kernels = std::move(kernels);
    for (auto& k : step.kernels) k.level = level_index;
    return {map.snapshot(vertex_of_dart, std::move(vertices)), std::move(step)};
}

std::vector<Pixel> resolve_anchors(const BinaryImage& img, const std::vector<ObjectComponent>& objects,
                                   const std::vector<Pixel>& pinned) {
    std::vector<Pixel> anchors;
    for (const auto& obj : objects) anchors.push_back(anchor_vertex(obj));
    const auto label = object_label_map(img, objects);
    std::vector<bool> taken(objects.size(), false);
    for (const Pixel p : pinned) {
        const std::string where = "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
        if (!img.contains(p) || label[img.index(p)] < 0)
            throw std::invalid_argument("anchor " + where + " is not a foreground pixel");
        const auto i = static_cast<std::size_t>(label[img.index(p)]);
        if (taken[i]) throw std::invalid_argument("anchor " + where + ": object already has an anchor");
        taken[i] = true;
        anchors[i] = p;
    }
    return anchors;
}

int Pyramid::object_of_vertex(VertexId v) const {
    if (pixel_map_.is_exterior(v)) return -1;
    return object_of_pixel_[static_cast<std::size_t>(v)];
}

std::vector<VertexId> Pyramid::representatives(int k) const {
    if (k < 0 || k > height()) throw std::out_of_range("level " + std::to_string(k) + " out of range");
    std::vector<VertexId> rep(labels_.size());
    for (std::size_t v = 0; v < rep.size(); ++v) rep[v] = static_cast<VertexId>(v);
    for (int s = 0; s < k; ++s)
        for (auto& r : rep) r = log_.surviving_vertex(s, r);
    return rep;
}

std::vector<VertexId> Pyramid::receptive_field(VertexId top_vertex) const {
    if (!top().has_vertex(top_vertex)) throw std::out_of_range("vertex " + std::to_string(top_vertex) + " is not at the top");
    std::vector<VertexId> out;
    for (std::size_t v = 0; v < top_rep_.size(); ++v)
        if (top_rep_[v] == top_vertex) out.push_back(static_cast<VertexId>(v));
    return out;
}

Pyramid build_pyramid(const BinaryImage& img, const BuildOptions& options, const BuildHooks& hooks) {
    Pyramid p;
    p.image_ = img;
    auto [base, pm] = build_base(img);
    p.pixel_map_ = pm;
    p.objects_ = object_components(img);
    p.object_of_pixel_ = object_label_map(img, p.objects_);
    p.mode_ = options.mode;
    p.seed_ = options.mode == Mode::Fast ? options.seed : 0;

    p.labels_.assign(pm.vertex_count(), Label::Background);
    for (std::size_t i = 0; i < img.pixel_count(); ++i)
        if (img.foreground(img.pixel_at(i))) p.labels_[i] = Label::Foreground;

    const std::size_t n = pm.edge_count();
    std::vector<std::uint8_t> keep(n, 0);
    for (EdgeId e : hooks.keep) keep[static_cast<std::size_t>(e)] = 1;
    KernelPolicy policy;
    if (options.mode == Mode::Invariant) {
        const auto anchors = resolve_anchors(img, p.objects_, options.anchors);
        for (std::size_t i = 0; i < p.objects_.size(); ++i)
            p.fields_.push_back(distance_field(img, p.objects_[i], anchors[i]));
        p.order_ = EdgeOrder::invariant(img, pm, p.fields_);
        // Background merging has no influence on the result; it only needs to
        // be reproducible.
        policy = fast_policy(n, 0);
        for (std::size_t e = 0; e < n; ++e) {
            const bool fg0 = p.labels_[static_cast<std::size_t>(pm.side_vertex(static_cast<EdgeId>(e), 0))] == Label::Foreground;
            const bool fg1 = p.labels_[static_cast<std::size_t>(pm.side_vertex(static_cast<EdgeId>(e), 1))] == Label::Foreground;
            if (fg0 || fg1) policy.eligible[e] = 0;
        }
        for (const auto& df : p.fields_) {
            for (const auto& te : stable_tree(pm, df)) {
                const auto e = static_cast<std::size_t>(te.edge);
                policy.eligible[e] = 1;
                policy.priority[e] = static_cast<std::uint64_t>(p.order_.rank(te.edge));
                keep[e] = 1;
            }
        }
    } else {
        p.order_ = EdgeOrder::by_id(n);
        policy = fast_policy(n, options.seed);
    }

    const EdgeOrder order = p.order_;
    const SurvivorLess survivor_less = [order, keep](EdgeId a, EdgeId b) {
        const bool ka = keep[static_cast<std::size_t>(a)] != 0;
        const bool kb = keep[static_cast<std::size_t>(b)] != 0;
        if (ka != kb) return ka;
        return order.less(a, b);
    };

    p.levels_.push_back(std::move(base));
    for (int k = 0;; ++k) {
        const LevelPair& current = p.levels_.back();
        auto kernels = hooks.select ? hooks.select(k, current, p.labels_)
                                    : select_kernels(k, current, p.labels_, policy);
        if (kernels.empty()) break;
        if (static_cast<std::size_t>(k) > pm.vertex_count())
            throw ContractViolation("build_pyramid: kernel selection does not terminate");
        auto [next, step] = contract_and_simplify(k, current, std::move(kernels), p.labels_, survivor_less);
        p.levels_.push_back(std::move(next));
        p.log_.push(std::move(step));
    }
    p.top_rep_ = p.representatives(p.height());
    return p;
}

std::vector<EdgeId> eck(const Pyramid& p, VertexId top_vertex) {
    if (!p.top().has_vertex(top_vertex))
        throw std::out_of_range("eck: vertex " + std::to_string(top_vertex) + " is not at the top level");
    std::vector<EdgeId> out;
    for (int k = 0; k < static_cast<int>(p.log().size()); ++k)
        for (const auto& kernel : p.log().step(k).kernels)
            if (p.top_vertex_of(kernel.root) == top_vertex)
                for (const auto& ke : kernel.tree_edges) out.push_back(ke.edge);
    std::sort(out.begin(), out.end());
    return out;
}

void write_level_dump(std::ostream& out, const Pyramid& p, int k) {
    const LevelPair& lv = p.level(k);
    out << "level " << k << "\n";
    out << "vertices " << lv.primal_vertices().size() << "\n";
    for (VertexId v : lv.primal_vertices()) {
        out << "v " << v << ' ' << (p.label(v) == Label::Foreground ? "fg" : "bg") << " darts";
        for (DartId d : lv.darts_around(v)) out << ' ' << d;
        out << "\n";
    }
    out << "edges " << lv.primal_edges().size() << "\n";
    for (EdgeId e : lv.primal_edges()) {
        auto [a, b] = lv.primal_endpoints(e);
        auto [f, g] = lv.dual_endpoints(e);
        const Crack c = p.pixel_map().edge_to_crack(e);
        out << "e " << e << " primal " << a << ' ' << b << " dual " << f << ' ' << g << " crack " << c.a.x << ','
            << c.a.y << ' ' << c.b.x << ',' << c.b.y << "\n";
    }
    out << "faces " << lv.dual_vertices().size() << "\n";
    for (FaceId f : lv.dual_vertices()) {
        out << "f " << f << " darts";
        for (DartId d : lv.darts_around_face(f)) out << ' ' << d;
        out << "\n";
    }
    if (k > 0) {
        const LevelStep& step = p.log().step(k - 1);
        for (const auto& kernel : step.kernels) {
            out << "kernel root " << kernel.root;
            for (const auto& ke : kernel.tree_edges) out << ' ' << ke.edge << ':' << ke.child << '>' << ke.parent;
            out << "\n";
        }
        for (const auto& r : step.removals) {
            if (r.kind == RemovalKind::PendingTree)
                out << "removed " << r.edge << " pending\n";
            else
                out << "removed " << r.edge << " degree2 survivor " << r.survivor << "\n";
        }
    }
}

}  // namespace cocyc
