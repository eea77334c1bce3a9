#pragma once

#include <vector>

#include "kk/rational.hpp"
#include "kk/root_system.hpp"
#include "kk/weyl.hpp"

namespace kk {

// Small dense matrix over Q; all linear algebra here is exact.
struct QMatrix {
    int rows = 0, cols = 0;
    std::vector<Rat> a;

    QMatrix() = default;
    QMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}
    Rat& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
    const Rat& at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }
    bool is_zero() const {
        for (const auto& x : a)
            if (x != 0) return false;
        return true;
    }
    friend QMatrix operator*(const QMatrix& x, const QMatrix& y);
    friend QMatrix operator-(const QMatrix& x, const QMatrix& y);
};

QMatrix commutator(const QMatrix& x, const QMatrix& y);  // xy - yx
int rank_of(QMatrix m);                                  // Gaussian elimination over Q

// Matrix realization of the Borel subalgebra b = h + n and the nilradical n
// for sl_{rank+1} (type A) and sp_{2 rank} (type C). Root vectors e_a follow
// the positive-root enumeration of the root system; the Cartan part uses
// E_{ii}-E_{i+1,i+1} (A, trace zero) and E_{i,i}-E_{-i,-i} (C).
class OrbitProblem {
public:
    static OrbitProblem realize(const RootSystem& rs);

    const RootSystem& system() const { return *rs_; }
    int matrix_dim() const { return dim_; }
    const std::vector<QMatrix>& basis_n() const { return basis_n_; }
    const std::vector<QMatrix>& basis_b() const { return basis_b_; }

    // Coordinates of a matrix in n with respect to the root-vector basis;
    // throws if the matrix lies outside the span.
    std::vector<Rat> n_coords(const QMatrix& z) const;

    // Functional f_sigma = sum of dual root vectors over the support.
    std::vector<Rat> functional(const GroupElement& sigma) const;

    // Rank of the pairing matrix M[k][m] = f_sigma([y_m, x_k]); equals the
    // dimension of the Borel orbit of f_sigma.
    int orbit_dim(const GroupElement& sigma) const;

private:
    OrbitProblem() = default;
    void check_bracket_closure() const;

    const RootSystem* rs_ = nullptr;
    int dim_ = 0;
    std::vector<QMatrix> basis_n_;
    std::vector<QMatrix> basis_b_;  // Cartan first, then basis_n_
    int cartan_dim_ = 0;
};

}  // namespace kk
