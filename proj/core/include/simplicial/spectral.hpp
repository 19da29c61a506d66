#pragma once

#include "simplicial/adjacency.hpp"
#include "simplicial/complex.hpp"

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include <cstddef>
#include <cstdint>
#include <vector>

/// Oriented incidence, multi-step boundary and Laplacian matrices, and power iteration.
namespace simplicial::spectral {

/// Column-major sparse integer matrix. Rows and columns follow ChainBasis order.
using IntMatrix = Eigen::SparseMatrix<std::int64_t>;
using DenseIntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

/**
 * Coefficient of `sigma` in the multi-step boundary of `tau`, both canonically oriented.
 *
 * 0 when sigma is not a face of tau. Otherwise the parity of the permutation that moves the
 * removed vertices of tau to the front: (-1)^(sum of removed positions - h(h-1)/2).
 */
int incidence_sign(const Simplex& tau, const Simplex& sigma);

/**
 * Matrix of the (q,h)-boundary: f_{q-h} rows, f_q columns, entries incidence_sign.
 *
 * Requires 0 <= h <= q <= dim K; h = 0 gives the identity on C_q.
 */
IntMatrix boundary_matrix(const Complex& c, int q, int h);

enum class Side { upper, lower };

/**
 * Signed count of common p-cofaces (upper) or common p-faces (lower) of a and b.
 *
 * Each unoriented p-simplex contributes the product of its two canonical signs once,
 * which is the half-sum over both orientations.
 */
long long oriented_degree(const Complex& c, const Simplex& a, const Simplex& b, int p, Side side);

struct LaplacianBundle
{
    int q = 0;
    int h = 0;
    int h_prime = 0;
    IntMatrix up;     ///< B_{q+h,h} B^T_{q+h,h}
    IntMatrix down;   ///< B^T_{q,h'} B_{q,h'}
    IntMatrix total;  ///< up + down
};

/**
 * (q,h,h')-Laplacian. Requires 0 <= q <= dim K and h, h' >= 1.
 *
 * A factor whose dimension is absent from the complex (q+h > dim K or q-h' < 0) is a zero block.
 */
LaplacianBundle laplacian(const Complex& c, int q, int h, int h_prime);

/**
 * 0/1 matrix of p-adjacency among q-simplices, assembled from boundary-matrix products.
 *
 * Requires 0 <= p < q, or q = p = 0 for the vertex (edge) convention.
 */
IntMatrix adjacency_matrix(const Complex& c, int q, int p);

enum class TheoremFamily { lower, upper, adjacency, maximal_adjacency };

/**
 * Degrees of every q-simplex computed only from absolute boundary-matrix products.
 *
 * lower and upper use deg^p_L and deg^p_U; adjacency and maximal_adjacency use deg^p_A and
 * deg^{p*}_A with the coface correction term. Parameter ranges match adjacency::validate.
 */
adjacency::DegreeReport theorem_degrees(const Complex& c, int q, int p, TheoremFamily family);

struct EigenOptions
{
    double tolerance = 1e-12;
    std::size_t max_iterations = 100000;
};

struct EigenResult
{
    double eigenvalue = 0.0;
    /// Non-negative, sums to 1. Zero outside the chosen component.
    std::vector<double> vector;
    /// max |A x - lambda x|
    double residual = 0.0;
    std::size_t iterations = 0;
    bool degenerate = false;
    bool converged = true;
    /// Indices of the connected component the vector is supported on.
    std::vector<std::size_t> component;
};

/**
 * Principal eigenvector of a symmetric non-negative matrix by power iteration.
 *
 * Iterates (A + I) from the uniform vector on each connected component of the nonzero pattern
 * and keeps the component with the largest eigenvalue (ties within 1e-9 go to the component
 * holding the smallest index). An all-zero matrix gives the uniform vector, lambda 0 and the
 * degenerate flag. Throws ArgumentError for non-square, non-symmetric or negative input.
 */
EigenResult principal_eigenvector(const IntMatrix& a, const EigenOptions& options = {});

DenseIntMatrix to_dense(const IntMatrix& m);

/// Entrywise absolute value.
IntMatrix abs(const IntMatrix& m);

} // namespace simplicial::spectral
