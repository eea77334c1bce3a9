#include "kk/coadjoint.hpp"

#include <stdexcept>

namespace kk {

QMatrix operator*(const QMatrix& x, const QMatrix& y) {
    if (x.cols != y.rows) throw std::invalid_argument("matrix size mismatch");
    QMatrix r(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            if (x.at(i, k) == 0) continue;
            for (int j = 0; j < y.cols; ++j)
                if (y.at(k, j) != 0) r.at(i, j) += x.at(i, k) * y.at(k, j);
        }
    return r;
}

QMatrix operator-(const QMatrix& x, const QMatrix& y) {
    if (x.rows != y.rows || x.cols != y.cols)
        throw std::invalid_argument("matrix size mismatch");
    QMatrix r = x;
    for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] -= y.a[i];
    return r;
}

QMatrix commutator(const QMatrix& x, const QMatrix& y) { return x * y - y * x; }

int rank_of(QMatrix m) {
    int rank = 0;
    for (int col = 0; col < m.cols && rank < m.rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < m.rows; ++r)
            if (m.at(r, col) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        for (int j = 0; j < m.cols; ++j) std::swap(m.at(pivot, j), m.at(rank, j));
        for (int r = rank + 1; r < m.rows; ++r) {
            if (m.at(r, col) == 0) continue;
            Rat f = m.at(r, col) / m.at(rank, col);
            for (int j = col; j < m.cols; ++j) m.at(r, j) -= f * m.at(rank, j);
        }
        ++rank;
    }
    return rank;
}

namespace {

// Index of signed letter k in the 1..n,-n..-1 order, 0-based.
int pos0(int k, int n) { return k > 0 ? k - 1 : 2 * n + k; }

QMatrix unit(int dim, int r, int c) {
    QMatrix m(dim, dim);
    m.at(r, c) = 1;
    return m;
}

}  // namespace

OrbitProblem OrbitProblem::realize(const RootSystem& rs) {
    if (rs.kind() == Kind::B)
        throw std::invalid_argument("orbit problems are realized for types A and C only");
    OrbitProblem op;
    op.rs_ = &rs;
    const int n = rs.rank();
    if (rs.kind() == Kind::A) {
        op.dim_ = n + 1;
        op.cartan_dim_ = n;
        for (int i = 1; i <= n; ++i)
            op.basis_b_.push_back(unit(op.dim_, i - 1, i - 1) - unit(op.dim_, i, i));
        for (int id = 0; id < rs.root_count(); ++id) {
            const auto& e = rs.root(id).eps;  // e_i - e_j
            int i = 0, j = 0;
            for (int k = 0; k < op.dim_; ++k) {
                if (e[k] == 1) i = k;
                if (e[k] == -1) j = k;
            }
            op.basis_n_.push_back(unit(op.dim_, i, j));
        }
    } else {
        op.dim_ = 2 * n;
        op.cartan_dim_ = n;
        for (int i = 1; i <= n; ++i)
            op.basis_b_.push_back(unit(op.dim_, pos0(i, n), pos0(i, n)) -
                                  unit(op.dim_, pos0(-i, n), pos0(-i, n)));
        for (int id = 0; id < rs.root_count(); ++id) {
            const auto& e = rs.root(id).eps;
            int i = 0, j = 0;
            for (int k = 1; k <= n; ++k)
                if (e[k - 1] != 0) (i == 0 ? i : j) = k;
            QMatrix m(op.dim_, op.dim_);
            if (j == 0) {  // 2e_i -> E_{i,-i}
                m.at(pos0(i, n), pos0(-i, n)) = 1;
            } else if (e[j - 1] > 0) {  // e_i + e_j -> E_{i,-j} + E_{j,-i}
                m.at(pos0(i, n), pos0(-j, n)) = 1;
                m.at(pos0(j, n), pos0(-i, n)) = 1;
            } else {  // e_i - e_j -> E_{i,j} - E_{-j,-i}
                m.at(pos0(i, n), pos0(j, n)) = 1;
                m.at(pos0(-j, n), pos0(-i, n)) = -1;
            }
            op.basis_n_.push_back(m);
        }
    }
    for (const auto& m : op.basis_n_) op.basis_b_.push_back(m);
    op.check_bracket_closure();
    return op;
}

std::vector<Rat> OrbitProblem::n_coords(const QMatrix& z) const {
    // Each root vector owns a designated entry no other basis element touches,
    // so coordinates peel off greedily; the residual must vanish.
    QMatrix r = z;
    std::vector<Rat> coords(basis_n_.size());
    for (std::size_t k = 0; k < basis_n_.size(); ++k) {
        const QMatrix& e = basis_n_[k];
        int pr = -1, pc = -1;
        for (int i = 0; i < dim_ && pr < 0; ++i)
            for (int j = 0; j < dim_; ++j)
                if (e.at(i, j) != 0) {
                    pr = i;
                    pc = j;
                    break;
                }
        Rat c = r.at(pr, pc) / e.at(pr, pc);
        if (c != 0) {
            coords[k] = c;
            for (int i = 0; i < dim_; ++i)
                for (int j = 0; j < dim_; ++j) r.at(i, j) -= c * e.at(i, j);
        }
    }
    if (!r.is_zero()) throw std::logic_error("matrix lies outside the span of n");
    return coords;
}

void OrbitProblem::check_bracket_closure() const {
    // [b, b] stays in b: Cartan coordinates read off the diagonal, the rest in n.
    for (std::size_t p = 0; p < basis_b_.size(); ++p) {
        for (std::size_t q = p + 1; q < basis_b_.size(); ++q) {
            QMatrix z = commutator(basis_b_[p], basis_b_[q]);
            if (rs_->kind() == Kind::A) {
                for (int i = 0; i < dim_; ++i)
                    for (int j = 0; j < i; ++j)
                        if (z.at(i, j) != 0)
                            throw std::logic_error("bracket left the Borel subalgebra");
                Rat tr = 0;
                for (int i = 0; i < dim_; ++i) tr += z.at(i, i);
                if (tr != 0) throw std::logic_error("bracket left sl: nonzero trace");
                QMatrix h(dim_, dim_);
                for (int i = 0; i < dim_; ++i) h.at(i, i) = z.at(i, i);
                n_coords(z - h);
            } else {
                QMatrix h(dim_, dim_);
                for (int i = 0; i < dim_; ++i) h.at(i, i) = z.at(i, i);
                n_coords(z - h);
                const int n = rs_->rank();
                for (int i = 1; i <= n; ++i)
                    if (z.at(pos0(i, n), pos0(i, n)) + z.at(pos0(-i, n), pos0(-i, n)) != 0)
                        throw std::logic_error("bracket left sp: Cartan not of h-type");
            }
        }
    }
}

std::vector<Rat> OrbitProblem::functional(const GroupElement& sigma) const {
    if (!sigma.is_involution())
        throw std::invalid_argument("functional requires an involution");
    std::vector<Rat> f(basis_n_.size());
    for (int id : support(*rs_, sigma)) f[static_cast<std::size_t>(id)] = 1;
    return f;
}

int OrbitProblem::orbit_dim(const GroupElement& sigma) const {
    std::vector<Rat> f = functional(sigma);
    QMatrix m(static_cast<int>(basis_b_.size()), static_cast<int>(basis_n_.size()));
    for (std::size_t k = 0; k < basis_b_.size(); ++k) {
        for (std::size_t j = 0; j < basis_n_.size(); ++j) {
            // [n, b] lands back in n, so the pairing is defined entrywise.
            std::vector<Rat> coords = n_coords(commutator(basis_n_[j], basis_b_[k]));
            Rat v = 0;
            for (std::size_t t = 0; t < coords.size(); ++t)
                if (f[t] != 0) v += f[t] * coords[t];
            m.at(static_cast<int>(k), static_cast<int>(j)) = v;
        }
    }
    return rank_of(std::move(m));
}

}  // namespace kk
