#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "pp/vertex_set.hpp"

namespace pp {

class ComplexError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Finite simplicial complex. Faces are stored by their ambient labels; the
// ground set may contain ghost vertices. Local vertex k (0-based) is the
// k-th smallest label of the ground set, so labels() is the index map back
// to the ambient vertex names.
class SimplicialComplex {
public:
    SimplicialComplex() : faces_{VertexSet{}}, by_bits_{0} { index_degrees(); }

    // Downward closure of `generating` on ground set {1..m}.
    static SimplicialComplex from_faces(int m, std::span<const VertexSet> generating);
    static SimplicialComplex from_faces(int m, std::initializer_list<VertexSet> generating) {
        return from_faces(m, std::span<const VertexSet>(generating.begin(), generating.size()));
    }
    // Downward closure on an arbitrary ground set.
    static SimplicialComplex on_ground(VertexSet ground, std::span<const VertexSet> generating);
    // Faces must already be closed, sorted shortlex, and contained in ground.
    static SimplicialComplex from_closed_sorted(VertexSet ground, std::vector<VertexSet> faces);

    VertexSet ground() const { return ground_; }
    int vertex_count() const { return ground_.size(); }
    std::vector<int> labels() const { return ground_.labels(); }
    // Support of the face set (non-ghost vertices).
    VertexSet support() const;

    // All faces in shortlex order; the empty face comes first.
    const std::vector<VertexSet>& faces() const { return faces_; }
    std::size_t face_count() const { return faces_.size(); }
    // Faces of dimension d (size d+1), d >= -1, as a contiguous shortlex run.
    std::span<const VertexSet> faces_of_dim(int d) const;
    int dimension() const { return static_cast<int>(dim_start_.size()) - 3; }

    bool contains(VertexSet face) const;
    // Position of `face` among faces of its dimension, or -1.
    long index_in_dim(VertexSet face) const;

    std::vector<VertexSet> facets() const;
    bool is_void_like() const { return faces_.size() == 1; }  // only the empty face

    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
        return a.ground_ == b.ground_ && a.faces_ == b.faces_;
    }

    std::string to_string() const;

private:
    void index_degrees();

    VertexSet ground_;
    std::vector<VertexSet> faces_;           // shortlex
    std::vector<VertexSet::Bits> by_bits_;   // numeric order, for membership
    std::vector<std::size_t> dim_start_;     // dim_start_[d+1] .. dim_start_[d+2]
};

SimplicialComplex validate_complex(int m, std::span<const std::vector<int>> generating_faces);

const std::vector<VertexSet>& shortlex_faces(const SimplicialComplex& k);

// Faces of K contained in I; ground set I.
SimplicialComplex full_subcomplex(const SimplicialComplex& k, VertexSet i);

// Faces tau disjoint from sigma with tau | sigma in K; ground set ground(K) - sigma.
SimplicialComplex link(const SimplicialComplex& k, VertexSet sigma);

// Join. If the ground sets collide, the labels of k2 are shifted past max label of k1.
SimplicialComplex join(const SimplicialComplex& k1, const SimplicialComplex& k2);

// Move the ground set of k onto new_ground (same size), preserving label order.
SimplicialComplex relabel(const SimplicialComplex& k, VertexSet new_ground);

// Named families, all on ground set {1..m}.
namespace families {
SimplicialComplex discrete(int m);
SimplicialComplex simplex(int m);
SimplicialComplex simplex_boundary(int m);
SimplicialComplex cycle(int m);
SimplicialComplex path(int m);
SimplicialComplex ghosts(int m);
SimplicialComplex octahedron();
SimplicialComplex rp2_6();
}  // namespace families

}  // namespace pp
