#include "betasimplex/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>

#include <Eigen/Geometry>
#include <Eigen/LU>

#include "betasimplex/errors.hpp"

namespace betasimplex {

namespace {

void check_vertex(int vertex, int count) {
    if (vertex < 0 || vertex >= count) throw DomainError("vertex index out of range");
}

// |det| relative to the Hadamard bound; 0 for a zero column.
double relative_determinant(const Mat& m, double det) {
    double bound = 1.0;
    for (Eigen::Index j = 0; j < m.cols(); ++j) bound *= m.col(j).norm();
    return bound > 0.0 ? std::abs(det) / bound : 0.0;
}

Eigen::Vector3d as3(const Vec& v) { return {v[0], v[1], v[2]}; }

double cross2(const Vec& o, const Vec& a, const Vec& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

bool cross2_is_ambiguous(const Vec& o, const Vec& a, const Vec& b, double cross) {
    return std::abs(cross) <= kDegenerateRatio * (a - o).norm() * (b - o).norm();
}

std::size_t hull_edges_2d(std::span<const Vec> points) {
    std::vector<Vec> sorted(points.begin(), points.end());
    std::sort(sorted.begin(), sorted.end(), [](const Vec& a, const Vec& b) {
        return a[0] < b[0] || (a[0] == b[0] && a[1] < b[1]);
    });

    // Andrew's monotone chain; hull holds both chains back to back.
    std::vector<const Vec*> hull;
    hull.reserve(2 * sorted.size());
    auto extend = [&](const Vec& p, std::size_t floor) {
        while (hull.size() >= floor + 2) {
            const Vec& o = *hull[hull.size() - 2];
            const Vec& a = *hull.back();
            const double cross = cross2(o, a, p);
            if (cross2_is_ambiguous(o, a, p, cross))
                throw DegenerateError("hull_facet_count: three nearly collinear points");
            if (cross > 0.0) break;
            hull.pop_back();
        }
        hull.push_back(&p);
    };
    for (const Vec& p : sorted) extend(p, 0);
    const std::size_t lower = hull.size();
    for (auto it = std::next(sorted.rbegin()); it != sorted.rend(); ++it) extend(*it, lower - 1);
    hull.pop_back();  // first point repeated

    if (hull.size() < 3) throw DegenerateError("hull_facet_count: all points are collinear");
    return hull.size();
}

struct Face {
    int a;
    int b;
    int c;
};

// Signed volume test of p against the oriented plane (a, b, c), with the
// scale used to judge it.
std::pair<double, double> orient3(const Eigen::Vector3d& a, const Eigen::Vector3d& b,
                                  const Eigen::Vector3d& c, const Eigen::Vector3d& p) {
    const Eigen::Vector3d ab = b - a;
    const Eigen::Vector3d ac = c - a;
    const Eigen::Vector3d ap = p - a;
    return {ab.cross(ac).dot(ap), ab.norm() * ac.norm() * ap.norm()};
}

std::size_t hull_facets_3d(std::span<const Vec> points) {
    const int n = static_cast<int>(points.size());
    std::vector<Eigen::Vector3d> pts;
    pts.reserve(points.size());
    for (const Vec& p : points) pts.push_back(as3(p));

    // Initial tetrahedron: farthest point, farthest from the line, farthest from the plane.
    int i1 = 0;
    double best = 0.0;
    for (int i = 1; i < n; ++i) {
        const double dist = (pts[i] - pts[0]).norm();
        if (dist > best) best = dist, i1 = i;
    }
    if (!(best > 0.0)) throw DegenerateError("hull_facet_count: coincident points");
    const Eigen::Vector3d axis = (pts[i1] - pts[0]).normalized();
    int i2 = -1;
    best = 0.0;
    for (int i = 1; i < n; ++i) {
        const double dist = (pts[i] - pts[0]).cross(axis).norm();
        if (dist > best) best = dist, i2 = i;
    }
    if (i2 < 0 || best <= kDegenerateRatio * (pts[i1] - pts[0]).norm())
        throw DegenerateError("hull_facet_count: all points are collinear");
    int i3 = -1;
    best = 0.0;
    for (int i = 1; i < n; ++i) {
        const auto [vol, scale] = orient3(pts[0], pts[i1], pts[i2], pts[i]);
        const double rel = scale > 0.0 ? std::abs(vol) / scale : 0.0;
        if (rel > best) best = rel, i3 = i;
    }
    if (i3 < 0 || best <= kDegenerateRatio) throw DegenerateError("hull_facet_count: all points are coplanar");

    const Eigen::Vector3d centre = 0.25 * (pts[0] + pts[i1] + pts[i2] + pts[i3]);
    std::vector<Face> faces;
    for (Face f : {Face{0, i1, i2}, Face{0, i1, i3}, Face{0, i2, i3}, Face{i1, i2, i3}}) {
        if (orient3(pts[f.a], pts[f.b], pts[f.c], centre).first > 0.0) std::swap(f.b, f.c);
        faces.push_back(f);
    }

    std::vector<char> visible;
    std::vector<std::pair<int, int>> edges;
    for (int p = 1; p < n; ++p) {
        if (p == i1 || p == i2 || p == i3) continue;
        visible.assign(faces.size(), 0);
        bool any = false;
        for (std::size_t f = 0; f < faces.size(); ++f) {
            const auto [vol, scale] = orient3(pts[faces[f].a], pts[faces[f].b], pts[faces[f].c], pts[p]);
            if (std::abs(vol) <= kDegenerateRatio * scale)
                throw DegenerateError("hull_facet_count: four nearly coplanar points");
            if (vol > 0.0) visible[f] = 1, any = true;
        }
        if (!any) continue;

        edges.clear();
        for (std::size_t f = 0; f < faces.size(); ++f) {
            if (!visible[f]) continue;
            const Face& face = faces[f];
            edges.emplace_back(face.a, face.b);
            edges.emplace_back(face.b, face.c);
            edges.emplace_back(face.c, face.a);
        }
        std::vector<Face> next;
        next.reserve(faces.size() + edges.size());
        for (std::size_t f = 0; f < faces.size(); ++f)
            if (!visible[f]) next.push_back(faces[f]);
        for (const auto& [u, v] : edges) {
            const bool shared = std::find(edges.begin(), edges.end(), std::pair{v, u}) != edges.end();
            if (!shared) next.push_back({u, v, p});
        }
        faces = std::move(next);
    }
    return faces.size();
}

}  // namespace

Simplex::Simplex(std::vector<Vec> vertices) : dim_(static_cast<int>(vertices.size()) - 1), vertices_(std::move(vertices)) {
    if (dim_ < 1 || dim_ > kMaxDim) throw DomainError("simplex needs between 2 and 5 vertices");
    for (const Vec& v : vertices_) {
        if (v.size() != dim_) throw DomainError("simplex vertices must have dimension d = count - 1");
        if (!v.allFinite()) throw DomainError("simplex vertices must be finite");
    }
    const Mat edges = edge_matrix(0);
    if (relative_determinant(edges, edges.determinant()) <= kDegenerateRatio)
        throw DegenerateError("simplex is degenerate");
}

Mat Simplex::edge_matrix(int i) const {
    check_vertex(i, dim_ + 1);
    Mat m(dim_, dim_);
    int col = 0;
    for (int j = 0; j <= dim_; ++j) {
        if (j == i) continue;
        m.col(col++) = vertices_[static_cast<std::size_t>(j)] - vertices_[static_cast<std::size_t>(i)];
    }
    return m;
}

TangentCone::TangentCone(const Simplex& simplex, int vertex) {
    const Mat edges = simplex.edge_matrix(vertex);
    const Eigen::PartialPivLU<Mat> lu(edges);
    if (relative_determinant(edges, lu.determinant()) <= kDegenerateRatio)
        throw DegenerateError("tangent cone: singular edge system");
    inverse_ = lu.inverse();
}

bool TangentCone::contains(const Direction& u) const {
    if (u.dim() != inverse_.rows()) throw DomainError("direction dimension does not match the simplex");
    return coefficients(u.vec()).minCoeff() >= -kInsideSlack;
}

bool tangent_cone_contains(const Simplex& simplex, int vertex, const Direction& u) {
    return TangentCone(simplex, vertex).contains(u);
}

double vertex_solid_angle_3d_exact(const Simplex& simplex, int vertex) {
    if (simplex.dim() != 3) throw DomainError("exact solid angles are implemented for d = 3 only");
    const Mat edges = simplex.edge_matrix(vertex);
    const Eigen::Vector3d a = edges.col(0);
    const Eigen::Vector3d b = edges.col(1);
    const Eigen::Vector3d c = edges.col(2);
    const double la = a.norm();
    const double lb = b.norm();
    const double lc = c.norm();
    const double numerator = std::abs(a.dot(b.cross(c)));
    const double denominator = la * lb * lc + a.dot(b) * lc + a.dot(c) * lb + b.dot(c) * la;
    // atan2 adds the half-turn when the denominator is negative.
    const double omega = 2.0 * std::atan2(numerator, denominator);
    return omega / (4.0 * std::numbers::pi);
}

MCEstimate vertex_solid_angle_mc(const Simplex& simplex, int vertex, std::uint64_t n_dirs, Rng& rng) {
    if (n_dirs == 0) throw DomainError("vertex_solid_angle_mc: need at least one direction");
    const RngState start = rng.state();
    const TangentCone cone(simplex, vertex);
    RunningStats stats;
    for (std::uint64_t k = 0; k < n_dirs; ++k)
        stats.add(cone.contains(sample_unit_direction(simplex.dim(), rng)) ? 1.0 : 0.0);
    return {stats.mean(), stats.std_error(), stats.count(), start, 0};
}

ComplementBasis::ComplementBasis(const Direction& u) : reflector_(u.vec()), scale_(0.0), pivot_(0) {
    if (u.dim() < 2) throw DomainError("complement basis needs d >= 2");
    reflector_.cwiseAbs().maxCoeff(&pivot_);
    reflector_[pivot_] += reflector_[pivot_] >= 0.0 ? 1.0 : -1.0;
    scale_ = 2.0 / reflector_.squaredNorm();
}

Vec ComplementBasis::project(const Vec& x) const {
    if (x.size() != reflector_.size()) throw DomainError("point dimension does not match the direction");
    const double coeff = scale_ * reflector_.dot(x);
    Vec out(dim());
    int k = 0;
    for (int j = 0; j < reflector_.size(); ++j) {
        if (j == pivot_) continue;
        out[k++] = x[j] - coeff * reflector_[j];
    }
    return out;
}

std::vector<Vec> project_onto_complement(std::span<const Vec> points, const Direction& u) {
    const ComplementBasis basis(u);
    std::vector<Vec> out;
    out.reserve(points.size());
    for (const Vec& x : points) out.push_back(basis.project(x));
    return out;
}

Vec barycentric_coordinates(const Vec& p, std::span<const Vec> vertices) {
    const auto k = static_cast<int>(p.size());
    if (k < 1 || k > kMaxDim || static_cast<int>(vertices.size()) != k + 1)
        throw DomainError("barycentric coordinates need k + 1 vertices in R^k");
    Mat edges(k, k);
    for (int j = 0; j < k; ++j) {
        if (vertices[static_cast<std::size_t>(j) + 1].size() != k) throw DomainError("vertex dimension mismatch");
        edges.col(j) = vertices[static_cast<std::size_t>(j) + 1] - vertices[0];
    }
    const Eigen::PartialPivLU<Mat> lu(edges);
    if (relative_determinant(edges, lu.determinant()) <= kDegenerateRatio)
        throw DegenerateError("barycentric coordinates: affinely dependent vertices");
    const Vec mu = lu.solve(Vec(p - vertices[0]));
    Vec out(k + 1);
    out[0] = 1.0 - mu.sum();
    out.tail(k) = mu;
    return out;
}

bool point_in_simplex(const Vec& p, std::span<const Vec> vertices) {
    return barycentric_coordinates(p, vertices).minCoeff() >= -kInsideSlack;
}

ProjectionClass classify_projection(std::span<const Vec> projected) {
    const auto count = static_cast<int>(projected.size());
    if (count < 3 || count > kMaxDim + 2) throw DomainError("classify_projection: need d + 1 points, d in [2, 5]");
    for (const Vec& p : projected)
        if (p.size() != count - 2) throw DomainError("classify_projection: points must lie in R^{d-1}");

    ProjectionClass result;
    std::vector<Vec> others;
    others.reserve(projected.size() - 1);
    for (int i = 0; i < count; ++i) {
        others.clear();
        for (int j = 0; j < count; ++j)
            if (j != i) others.push_back(projected[static_cast<std::size_t>(j)]);
        const double margin = barycentric_coordinates(projected[static_cast<std::size_t>(i)], others).minCoeff();
        if (std::abs(margin) < kBoundaryBand)
            throw DegenerateError("classify_projection: point within tolerance of a boundary");
        if (margin > 0.0) {
            if (result.interior_vertex) throw DegenerateError("classify_projection: several interior points");
            result.kind = ProjectionClass::Kind::SimplexProjection;
            result.interior_vertex = i;
        }
    }
    return result;
}

std::size_t hull_facet_count(std::span<const Vec> points, int d) {
    if (d != 2 && d != 3) throw DomainError("hull_facet_count supports d = 2 and d = 3");
    if (static_cast<int>(points.size()) < d + 1) throw DomainError("hull_facet_count: need at least d + 1 points");
    for (const Vec& p : points) {
        if (p.size() != d) throw DomainError("hull_facet_count: point dimension mismatch");
        if (!p.allFinite()) throw DomainError("hull_facet_count: non-finite point");
    }
    return d == 2 ? hull_edges_2d(points) : hull_facets_3d(points);
}

}  // namespace betasimplex
