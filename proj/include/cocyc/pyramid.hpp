#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "cocyc/grid_complex.hpp"
#include "cocyc/image.hpp"
#include "cocyc/invariant_order.hpp"
#include "cocyc/level_pair.hpp"
#include "cocyc/types.hpp"

namespace cocyc {

struct KernelEdge {
    EdgeId edge = kNone;
    VertexId child = kNone;
    VertexId parent = kNone;
};

/// A tree of same-label edges contracted in one step. Edges point toward the
/// root and are listed leaves first: every edge comes before the edge leaving
/// its parent.
struct ContractionKernel {
    int level = 0;
    VertexId root = kNone;
    std::vector<KernelEdge> tree_edges;

    std::vector<VertexId> vertices() const;
};

enum class RemovalKind : std::uint8_t { PendingTree, DegreeTwo };

struct Removal {
    EdgeId edge = kNone;
    RemovalKind kind = RemovalKind::PendingTree;
    EdgeId survivor = kNone;  // the chain partner that stayed, for DegreeTwo
};

/// Everything that happened between level k and level k+1.
struct LevelStep {
    std::vector<ContractionKernel> kernels;  // sorted by root once logged
    std::vector<Removal> removals;

    /// Kernel rooted at v, or nullptr.
    const ContractionKernel* kernel_rooted_at(VertexId v) const;
};

class OperationLog {
public:
    std::size_t size() const { return steps_.size(); }
    const LevelStep& step(int k) const { return steps_.at(static_cast<std::size_t>(k)); }
    void push(LevelStep s);

    /// Vertex of level k+1 that absorbed vertex v of level k.
    VertexId surviving_vertex(int k, VertexId v) const;
    /// Pre-image at level k-1 of an edge alive at level k. Edge ids are kept
    /// by survivors, so this is the identity on alive edges.
    EdgeId preimage(int k, EdgeId e) const;

private:
    std::vector<LevelStep> steps_;
    std::vector<std::vector<std::pair<VertexId, VertexId>>> absorbed_;  // per step: (child, root), sorted
};

/// Per-edge eligibility and priority (smaller first) for kernel selection.
struct KernelPolicy {
    std::vector<std::uint8_t> eligible;
    std::vector<std::uint64_t> priority;
};

KernelPolicy fast_policy(std::size_t edge_count, std::uint64_t seed);

/// Each vertex picks its best eligible same-label non-loop edge; the picked
/// edges form a forest whose trees are the kernels (rooted at their smallest
/// vertex id).
std::vector<ContractionKernel> select_kernels(int level_index, const LevelPair& level,
                                              std::span<const Label> labels, const KernelPolicy& policy);

using RootChooser = std::function<VertexId(const std::vector<VertexId>& members)>;

/// Orients a forest of level edges into kernels. Throws ContractViolation on a
/// cycle or self-loop.
std::vector<ContractionKernel> kernels_from_forest(int level_index, const LevelPair& level,
                                                   std::span<const EdgeId> forest, const RootChooser& root = {});

/// Strict order deciding which edge of a degree-2 dual vertex survives.
using SurvivorLess = std::function<bool(EdgeId, EdgeId)>;

/// Contracts the kernels and then removes pending dual edges and merges
/// degree-2 dual chains until neither applies.
std::pair<LevelPair, LevelStep> contract_and_simplify(int level_index, const LevelPair& level,
                                                      std::vector<ContractionKernel> kernels,
                                                      std::span<const Label> labels, const SurvivorLess& survivor_less);

struct BuildOptions {
    Mode mode = Mode::Fast;
    std::uint64_t seed = 0;
    /// Pinned anchors, at most one per object; other objects use their
    /// raster-first pixel.
    std::vector<Pixel> anchors;
};

using KernelSelector =
    std::function<std::vector<ContractionKernel>(int level_index, const LevelPair& level, std::span<const Label> labels)>;

/// Test hooks.
struct BuildHooks {
    /// Replaces the mode's kernel selection.
    KernelSelector select;
    /// Edges that win every degree-2 survivor decision they take part in.
    std::vector<EdgeId> keep;
};

class Pyramid {
public:
    const BinaryImage& image() const { return image_; }
    const PixelMap& pixel_map() const { return pixel_map_; }
    const std::vector<ObjectComponent>& objects() const { return objects_; }
    Mode mode() const { return mode_; }
    std::uint64_t seed() const { return seed_; }

    int height() const { return static_cast<int>(levels_.size()) - 1; }
    const LevelPair& level(int k) const { return levels_.at(static_cast<std::size_t>(k)); }
    const LevelPair& top() const { return levels_.back(); }
    const std::vector<LevelPair>& levels() const { return levels_; }
    const OperationLog& log() const { return log_; }

    Label label(VertexId v) const { return labels_[static_cast<std::size_t>(v)]; }
    std::span<const Label> labels() const { return labels_; }
    /// Object index of a base vertex, -1 for background and exterior.
    int object_of_vertex(VertexId v) const;

    const EdgeOrder& order() const { return order_; }
    /// Distance fields per object (invariant mode only).
    const std::vector<DistanceField>& fields() const { return fields_; }

    /// Representative at level k of every base vertex.
    std::vector<VertexId> representatives(int k) const;
    VertexId top_vertex_of(VertexId base) const { return top_rep_[static_cast<std::size_t>(base)]; }
    std::vector<VertexId> receptive_field(VertexId top_vertex) const;

    friend Pyramid build_pyramid(const BinaryImage&, const BuildOptions&, const BuildHooks&);

private:
    BinaryImage image_;
    PixelMap pixel_map_;
    std::vector<ObjectComponent> objects_;
    std::vector<int> object_of_pixel_;
    Mode mode_ = Mode::Fast;
    std::uint64_t seed_ = 0;
    std::vector<Label> labels_;
    EdgeOrder order_;
    std::vector<DistanceField> fields_;
    std::vector<LevelPair> levels_;
    OperationLog log_;
    std::vector<VertexId> top_rep_;
};

/// Resolves pinned anchors to objects. Throws std::invalid_argument for an
/// anchor on background or two anchors in one object.
std::vector<Pixel> resolve_anchors(const BinaryImage& img, const std::vector<ObjectComponent>& objects,
                                   const std::vector<Pixel>& pinned);

Pyramid build_pyramid(const BinaryImage& img, const BuildOptions& options, const BuildHooks& hooks = {});

/// Equivalent contraction kernel of a top vertex: every base edge contracted
/// into it. Throws std::out_of_range for a vertex not at the top.
std::vector<EdgeId> eck(const Pyramid& p, VertexId top_vertex);

/// Text dump of one level and the log entries that produced it.
void write_level_dump(std::ostream& out, const Pyramid& p, int k);

}  // namespace cocyc
