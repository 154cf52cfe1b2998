#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "betasimplex/estimate.hpp"
#include "betasimplex/sampling.hpp"

namespace betasimplex {

using Mat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::ColMajor, kMaxDim, kMaxDim>;

/// Sign tests treat values >= -kInsideSlack as non-negative.
inline constexpr double kInsideSlack = 1e-10;
/// Classification refuses to decide within this distance of a boundary.
inline constexpr double kBoundaryBand = 1e-8;
/// |det| / (product of column norms) at or below this is degenerate.
inline constexpr double kDegenerateRatio = 1e-12;

/// Non-degenerate d-simplex in R^d given by its d + 1 vertices.
class Simplex {
public:
    /// Throws DomainError on inconsistent sizes and DegenerateError when the
    /// edge vectors from vertex 0 are (numerically) linearly dependent.
    explicit Simplex(std::vector<Vec> vertices);

    int dim() const noexcept { return dim_; }
    const Vec& vertex(int i) const { return vertices_.at(static_cast<std::size_t>(i)); }
    std::span<const Vec> vertices() const noexcept { return vertices_; }

    /// Edge vectors X_j - X_i (j != i) as columns, in increasing j.
    Mat edge_matrix(int i) const;

private:
    int dim_;
    std::vector<Vec> vertices_;
};

/// Tangent cone of a simplex at one vertex: the directions y with
/// X_i + eps * y in the simplex for some eps > 0.
class TangentCone {
public:
    TangentCone(const Simplex& simplex, int vertex);

    /// Coefficients lambda with u = sum_j lambda_j (X_j - X_i).
    Vec coefficients(const Vec& u) const { return inverse_ * u; }
    bool contains(const Direction& u) const;

private:
    Mat inverse_;
};

bool tangent_cone_contains(const Simplex& simplex, int vertex, const Direction& u);

/// Normalised solid angle (full angle = 1) of a tetrahedron at a vertex, from
/// tan(Omega / 2) = |a.(b x c)| / (abc + (a.b)c + (a.c)b + (b.c)a).
double vertex_solid_angle_3d_exact(const Simplex& simplex, int vertex);

/// Fraction of n_dirs uniform directions that point into the simplex at the vertex.
MCEstimate vertex_solid_angle_mc(const Simplex& simplex, int vertex, std::uint64_t n_dirs, Rng& rng);

/// Orthonormal coordinates on the hyperplane orthogonal to a unit vector.
///
/// The basis is the Householder reflection taking u to a multiple of e_k, k the
/// index of the largest |u_k|, with column k dropped. It depends on u only.
class ComplementBasis {
public:
    explicit ComplementBasis(const Direction& u);

    int dim() const noexcept { return static_cast<int>(reflector_.size()) - 1; }
    Vec project(const Vec& x) const;

private:
    Vec reflector_;
    double scale_;  // 2 / (v.v)
    int pivot_;
};

std::vector<Vec> project_onto_complement(std::span<const Vec> points, const Direction& u);

/// Barycentric coordinates of p with respect to k + 1 affinely independent
/// points of R^k.
Vec barycentric_coordinates(const Vec& p, std::span<const Vec> vertices);

bool point_in_simplex(const Vec& p, std::span<const Vec> vertices);

struct ProjectionClass {
    enum class Kind { SimplexProjection, NonSimplexProjection };

    Kind kind = Kind::NonSimplexProjection;
    /// Set exactly when kind == SimplexProjection.
    std::optional<int> interior_vertex;

    bool is_simplex() const noexcept { return kind == Kind::SimplexProjection; }
};

/// Decides whether the projection of a d-simplex (d + 1 points in R^{d-1}) is
/// again a simplex, i.e. whether exactly one point lies in the hull of the rest.
/// Points within kBoundaryBand (in barycentric terms) of a boundary raise
/// DegenerateError, as does more than one interior point.
ProjectionClass classify_projection(std::span<const Vec> projected);

/// Number of facets of the convex hull of points in general position in R^d,
/// d in {2, 3}: edges of the polygon for d = 2, triangles for d = 3.
std::size_t hull_facet_count(std::span<const Vec> points, int d);

}  // namespace betasimplex
