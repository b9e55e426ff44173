#include "isolab/error.hpp"
#include "isolab/subgraphs.hpp"

#include <algorithm>

namespace isolab {

EnumState::EnumState(const SubgraphContext& ctx)
    : ctx_(&ctx), in_(ctx.num_vertices(), 0), into_(ctx.num_vertices(), 0),
      face_hits_(ctx.map().num_faces(), 0), stamp_(ctx.num_vertices(), 0)
{
}

bool EnumState::face_full(int f) const
{
    const auto& fv = ctx_->face_vertices(f);
    return !fv.empty() && face_hits_[f] == static_cast<int>(fv.size());
}

void EnumState::push(int v)
{
    const PlanarMap& map = ctx_->map();
    verts_.push_back(v);
    in_[v] = 1;
    edges_ += into_[v];
    volume_ += map.degree(v);
    for (int w : map.neighbors(v)) ++into_[w];
    for (int f : ctx_->vertex_faces(v))
        if (++face_hits_[f] == static_cast<int>(ctx_->face_vertices(f).size())) ++full_faces_;
}

void EnumState::pop()
{
    const PlanarMap& map = ctx_->map();
    int v = verts_.back();
    verts_.pop_back();
    for (int f : ctx_->vertex_faces(v))
        if (face_hits_[f]-- == static_cast<int>(ctx_->face_vertices(f).size())) --full_faces_;
    for (int w : map.neighbors(v)) --into_[w];
    volume_ -= map.degree(v);
    edges_ -= into_[v];
    in_[v] = 0;
}

int EnumState::vertex_boundary() const
{
    int c = 0;
    for (int v : verts_)
        if (into_[v] < ctx_->map().degree(v)) ++c;
    return c;
}

int EnumState::outer_vertex_boundary() const
{
    if (++clock_ == 0) {
        std::fill(stamp_.begin(), stamp_.end(), 0);
        clock_ = 1;
    }
    int c = 0;
    for (int v : verts_)
        for (int w : ctx_->distinct_neighbors(v))
            if (!in_[w] && stamp_[w] != clock_) {
                stamp_[w] = clock_;
                ++c;
            }
    return c;
}

int EnumState::surrounding_edges() const
{
    const PlanarMap& map = ctx_->map();
    int inner = 0;
    for (int v : verts_)
        for (int d : map.rotation(v)) {
            if (d > map.twin(d) || !in_[map.head(d)]) continue;
            int f1 = map.face_of(d), f2 = map.face_of(map.twin(d));
            if (map.is_bounded(f1) && map.is_bounded(f2) && face_full(f1) && face_full(f2)) ++inner;
        }
    return edges_ - inner;
}

std::vector<int> EnumState::sorted_vertices() const
{
    std::vector<int> s = verts_;
    std::sort(s.begin(), s.end());
    return s;
}

ConnectedEnumerator::ConnectedEnumerator(const SubgraphContext& ctx, EnumOptions opts)
    : ctx_(&ctx), opts_(std::move(opts))
{
    if (opts_.max_vertices > opts_.cap)
        throw Error(Errc::CapExceeded, "max_vertices " + std::to_string(opts_.max_vertices) + " exceeds cap " +
                                           std::to_string(opts_.cap));
    if (opts_.max_vertices < 1) throw Error(Errc::BadInput, "max_vertices must be >= 1");
    const int n = ctx.num_vertices();
    allowed_ = opts_.allowed.empty() ? ctx.map().interior_mask() : opts_.allowed;
    if (static_cast<int>(allowed_.size()) != n) throw Error(Errc::BadInput, "allowed mask size mismatch");
    for (int v = 0; v < n; ++v)
        if (allowed_[v]) roots_.push_back(v);
}

long long count_connected_subgraphs(const SubgraphContext& ctx, const EnumOptions& opts)
{
    ConnectedEnumerator en(ctx, opts);
    long long count = 0;
    en.run([&](const EnumState&) {
        ++count;
        return true;
    });
    return count;
}

} // namespace isolab

namespace isolab {

ShapeTester::ShapeTester(const SubgraphContext& ctx)
    : ctx_(&ctx), seen_(ctx.num_vertices(), 0), label_(ctx.num_vertices(), 0),
      face_seen_(ctx.map().num_faces(), 0)
{
    for (int v = 0; v < ctx.num_vertices(); ++v)
        if (!ctx.map().is_interior(v)) any_frontier_ = true;
}

uint32_t ShapeTester::tick()
{
    if (++clock_ == 0) {
        std::fill(seen_.begin(), seen_.end(), 0);
        std::fill(face_seen_.begin(), face_seen_.end(), 0);
        clock_ = 1;
    }
    return clock_;
}

bool ShapeTester::simply_connected(const EnumState& st)
{
    // Complement components all touch S in a connected host. A component is
    // "outside" once it meets a non-interior vertex; inner components are holes.
    const PlanarMap& map = ctx_->map();
    const uint32_t now = tick();
    int components = 0, holes = 0;
    for (int v : st.vertices()) {
        for (int seed : ctx_->distinct_neighbors(v)) {
            if (st.contains(seed) || seen_[seed] == now) continue;
            ++components;
            bool outside = false;
            queue_.clear();
            queue_.push_back(seed);
            seen_[seed] = now;
            label_[seed] = components;
            for (size_t h = 0; h < queue_.size(); ++h) {
                int u = queue_[h];
                if (!map.is_interior(u)) {
                    outside = true;
                    break;
                }
                for (int w : ctx_->distinct_neighbors(u)) {
                    if (st.contains(w)) continue;
                    if (seen_[w] == now) {
                        if (label_[w] < 0) {
                            outside = true;
                            break;
                        }
                        continue;
                    }
                    seen_[w] = now;
                    label_[w] = components;
                    queue_.push_back(w);
                }
                if (outside) break;
            }
            if (outside) {
                // Everything touched so far lies in the outside territory.
                for (int u : queue_) label_[u] = -1;
                --components;
            } else {
                ++holes;
            }
        }
    }
    if (any_frontier_) return holes == 0;
    return holes <= 1;
}

bool ShapeTester::face_graph(const EnumState& st) const
{
    if (st.num_faces() == 0) return false;
    for (int v : st.vertices()) {
        bool covered = false;
        for (int f : ctx_->vertex_faces(v))
            if (st.face_full(f)) {
                covered = true;
                break;
            }
        if (!covered) return false;
    }
    return true;
}

bool ShapeTester::interior_connected(const EnumState& st)
{
    const PlanarMap& map = ctx_->map();
    const uint32_t now = tick();
    int start = -1;
    for (int v : st.vertices()) {
        for (int f : ctx_->vertex_faces(v))
            if (st.face_full(f)) {
                start = f;
                break;
            }
        if (start >= 0) break;
    }
    if (start < 0) return false;
    queue_.clear();
    queue_.push_back(start);
    face_seen_[start] = now;
    for (size_t h = 0; h < queue_.size(); ++h) {
        int f = queue_[h];
        for (int d : map.faces().darts[f]) {
            int g = map.face_of(map.twin(d));
            if (g == f || face_seen_[g] == now || !map.is_bounded(g) || !st.face_full(g)) continue;
            face_seen_[g] = now;
            queue_.push_back(g);
        }
    }
    return static_cast<int>(queue_.size()) == st.num_faces();
}

bool ShapeTester::polygon(const EnumState& st)
{
    return face_graph(st) && simply_connected(st) && interior_connected(st);
}

} // namespace isolab
