#include "pp/complex.hpp"

#include <algorithm>
#include <unordered_set>

namespace pp {

namespace {

std::vector<VertexSet> close_down(std::span<const VertexSet> generating) {
    std::unordered_set<VertexSet::Bits> seen{0};
    std::vector<VertexSet> faces{VertexSet{}};
    for (VertexSet g : generating) {
        if (seen.count(g.bits())) continue;
        for_each_subset(g, [&](VertexSet s) {
            if (seen.insert(s.bits()).second) faces.push_back(s);
        });
    }
    std::sort(faces.begin(), faces.end(), shortlex_less);
    return faces;
}

}  // namespace

SimplicialComplex SimplicialComplex::from_closed_sorted(VertexSet ground, std::vector<VertexSet> faces) {
    SimplicialComplex k;
    k.ground_ = ground;
    k.faces_ = std::move(faces);
    k.by_bits_.clear();
    k.by_bits_.reserve(k.faces_.size());
    for (VertexSet f : k.faces_) k.by_bits_.push_back(f.bits());
    std::sort(k.by_bits_.begin(), k.by_bits_.end());
    k.index_degrees();
    return k;
}

SimplicialComplex SimplicialComplex::on_ground(VertexSet ground, std::span<const VertexSet> generating) {
    for (VertexSet g : generating)
        if (!g.subset_of(ground))
            throw ComplexError("face " + g.to_string() + " is not contained in the vertex set " + ground.to_string());
    return from_closed_sorted(ground, close_down(generating));
}

SimplicialComplex SimplicialComplex::from_faces(int m, std::span<const VertexSet> generating) {
    if (m < 0 || m > kMaxVertices)
        throw ComplexError("vertex count " + std::to_string(m) + " out of range 0.." + std::to_string(kMaxVertices));
    return on_ground(VertexSet::range(m), generating);
}

void SimplicialComplex::index_degrees() {
    dim_start_.assign(1, 0);
    int size = 0;
    for (std::size_t i = 0; i < faces_.size(); ++i) {
        while (faces_[i].size() > size) {
            dim_start_.push_back(i);
            ++size;
        }
    }
    dim_start_.push_back(faces_.size());
}

VertexSet SimplicialComplex::support() const {
    VertexSet s;
    for (VertexSet f : faces_of_dim(0)) s = s | f;
    return s;
}

std::span<const VertexSet> SimplicialComplex::faces_of_dim(int d) const {
    if (d < -1 || d > dimension()) return {};
    return std::span<const VertexSet>(faces_).subspan(dim_start_[d + 1], dim_start_[d + 2] - dim_start_[d + 1]);
}

bool SimplicialComplex::contains(VertexSet face) const {
    return std::binary_search(by_bits_.begin(), by_bits_.end(), face.bits());
}

long SimplicialComplex::index_in_dim(VertexSet face) const {
    auto run = faces_of_dim(face.size() - 1);
    auto it = std::lower_bound(run.begin(), run.end(), face, shortlex_less);
    if (it == run.end() || *it != face) return -1;
    return it - run.begin();
}

std::vector<VertexSet> SimplicialComplex::facets() const {
    std::vector<VertexSet> out;
    for (std::size_t i = 0; i < faces_.size(); ++i) {
        VertexSet f = faces_[i];
        bool maximal = true;
        for (std::size_t j = i + 1; j < faces_.size() && maximal; ++j)
            if (f.subset_of(faces_[j])) maximal = false;
        if (maximal) out.push_back(f);
    }
    return out;
}

std::string SimplicialComplex::to_string() const {
    std::string s = "K(" + ground_.to_string() + "; ";
    bool first = true;
    for (VertexSet f : facets()) {
        if (!first) s += ' ';
        s += f.to_string();
        first = false;
    }
    return s + ")";
}

SimplicialComplex validate_complex(int m, std::span<const std::vector<int>> generating_faces) {
    if (m < 1 || m > kMaxVertices)
        throw ComplexError("vertex count must be in 1.." + std::to_string(kMaxVertices) + ", got " + std::to_string(m));
    std::vector<VertexSet> gens;
    for (const auto& face : generating_faces) {
        VertexSet s;
        for (int v : face) {
            if (v < 1 || v > m) {
                std::string desc = "[";
                for (std::size_t i = 0; i < face.size(); ++i) desc += (i ? "," : "") + std::to_string(face[i]);
                throw ComplexError("face " + desc + "] has vertex " + std::to_string(v) + " outside 1.." + std::to_string(m));
            }
            s.insert(v);
        }
        gens.push_back(s);
    }
    return SimplicialComplex::from_faces(m, gens);
}

const std::vector<VertexSet>& shortlex_faces(const SimplicialComplex& k) { return k.faces(); }

SimplicialComplex full_subcomplex(const SimplicialComplex& k, VertexSet i) {
    std::vector<VertexSet> faces;
    for (VertexSet f : k.faces())
        if (f.subset_of(i)) faces.push_back(f);
    return SimplicialComplex::from_closed_sorted(i, std::move(faces));
}

SimplicialComplex link(const SimplicialComplex& k, VertexSet sigma) {
    if (!k.contains(sigma)) throw ComplexError("link: " + sigma.to_string() + " is not a face");
    std::vector<VertexSet> faces;
    for (VertexSet f : k.faces())
        if (sigma.subset_of(f)) faces.push_back(f - sigma);
    std::sort(faces.begin(), faces.end(), shortlex_less);
    return SimplicialComplex::from_closed_sorted(k.ground() - sigma, std::move(faces));
}

SimplicialComplex relabel(const SimplicialComplex& k, VertexSet new_ground) {
    if (new_ground.size() != k.vertex_count()) throw ComplexError("relabel: ground sizes differ");
    auto from = k.labels(), to = new_ground.labels();
    std::vector<VertexSet> faces;
    faces.reserve(k.face_count());
    for (VertexSet f : k.faces()) {
        VertexSet g;
        for (int v : f.labels()) g.insert(to[k.ground().rank_of(v)]);
        faces.push_back(g);
    }
    // monotone relabeling preserves shortlex order
    return SimplicialComplex::from_closed_sorted(new_ground, std::move(faces));
}

SimplicialComplex join(const SimplicialComplex& k1, const SimplicialComplex& k2) {
    const SimplicialComplex* right = &k2;
    SimplicialComplex shifted;
    if (!k1.ground().disjoint(k2.ground())) {
        int offset = k1.ground().empty() ? 0 : k1.ground().max();
        if (!k2.ground().empty() && k2.ground().max() + offset > kMaxVertices)
            throw ComplexError("join: too many vertices");
        shifted = relabel(k2, VertexSet::from_bits(k2.ground().bits() << offset));
        right = &shifted;
    }
    std::vector<VertexSet> faces;
    faces.reserve(k1.face_count() * right->face_count());
    for (VertexSet a : k1.faces())
        for (VertexSet b : right->faces()) faces.push_back(a | b);
    std::sort(faces.begin(), faces.end(), shortlex_less);
    return SimplicialComplex::from_closed_sorted(k1.ground() | right->ground(), std::move(faces));
}

namespace families {

SimplicialComplex discrete(int m) {
    std::vector<VertexSet> g;
    for (int v = 1; v <= m; ++v) g.push_back(VertexSet::single(v));
    return SimplicialComplex::from_faces(m, g);
}

SimplicialComplex simplex(int m) {
    std::vector<VertexSet> g{VertexSet::range(m)};
    return SimplicialComplex::from_faces(m, g);
}

SimplicialComplex simplex_boundary(int m) {
    std::vector<VertexSet> g;
    for (int v = 1; v <= m; ++v) g.push_back(VertexSet::range(m) - VertexSet::single(v));
    return SimplicialComplex::from_faces(m, g);
}

SimplicialComplex cycle(int m) {
    std::vector<VertexSet> g;
    for (int v = 1; v <= m; ++v) g.push_back(VertexSet::of({v, v % m + 1}));
    return SimplicialComplex::from_faces(m, g);
}

SimplicialComplex path(int m) {
    std::vector<VertexSet> g;
    if (m == 1) g.push_back(VertexSet::single(1));
    for (int v = 1; v < m; ++v) g.push_back(VertexSet::of({v, v + 1}));
    return SimplicialComplex::from_faces(m, g);
}

SimplicialComplex ghosts(int m) { return SimplicialComplex::from_faces(m, std::span<const VertexSet>{}); }

SimplicialComplex octahedron() {
    std::vector<VertexSet> g;
    for (int a : {1, 2})
        for (int b : {3, 4})
            for (int c : {5, 6}) g.push_back(VertexSet::of({a, b, c}));
    return SimplicialComplex::from_faces(6, g);
}

SimplicialComplex rp2_6() {
    static const int tri[10][3] = {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 2, 6},
                                   {2, 3, 5}, {2, 4, 5}, {2, 4, 6}, {3, 4, 6}, {3, 5, 6}};
    std::vector<VertexSet> g;
    for (auto& t : tri) g.push_back(VertexSet::of({t[0], t[1], t[2]}));
    return SimplicialComplex::from_faces(6, g);
}

}  // namespace families

}  // namespace pp
