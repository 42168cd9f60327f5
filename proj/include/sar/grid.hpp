#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "sar/types.hpp"

namespace sar {

// Up to four cardinal neighbours in fixed N, E, S, W order.
struct NeighborList {
    std::array<VertexId, 4> ids{};
    int count = 0;

    const VertexId* begin() const { return ids.data(); }
    const VertexId* end() const { return ids.data() + count; }
    bool empty() const { return count == 0; }
    int size() const { return count; }
    VertexId operator[](int i) const { return ids[static_cast<std::size_t>(i)]; }
};

// Rectangular 4-connected grid with optional impassable cells. Vertices are
// row-major (id = y * width + x); blocked cells have no incident edges and
// all edges are bidirectional.
class Grid {
public:
    Grid(int width, int height, std::vector<VertexId> blocked = {});

    int width() const { return width_; }
    int height() const { return height_; }
    int vertex_count() const { return width_ * height_; }

    bool in_range(VertexId v) const { return v >= 0 && v < vertex_count(); }
    bool is_blocked(VertexId v) const { return blocked_[static_cast<std::size_t>(v)] != 0; }
    int blocked_count() const { return blocked_count_; }

    VertexId at(int x, int y) const { return static_cast<VertexId>(y * width_ + x); }
    int x_of(VertexId v) const { return static_cast<int>(v) % width_; }
    int y_of(VertexId v) const { return static_cast<int>(v) / width_; }

    // Throws InputError when v is out of range or blocked.
    NeighborList neighbors(VertexId v) const;

    // Largest neighbour count over unblocked vertices (0 on a fully
    // blocked grid).
    int max_degree() const;

private:
    int width_;
    int height_;
    int blocked_count_ = 0;
    std::vector<std::uint8_t> blocked_;
};

inline NeighborList neighbors(const Grid& grid, VertexId v) { return grid.neighbors(v); }

}  // namespace sar
