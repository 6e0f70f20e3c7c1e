#pragma once

#include <string>
#include <utility>
#include <vector>

#include "matrix.hpp"

namespace algcalc {

/// Finite-dimensional associative unital algebra over Q(i), presented by
/// structure constants: e_i * e_j = sum_k mult[i][j][k] e_k.
///
/// Associativity and the unit axioms are validated on construction (on all
/// basis triples / pairs), so every stored instance is a genuine algebra.
class FDAlgebra {
public:
    FDAlgebra(std::size_t dim, std::vector<std::string> names, Vec unit,
              std::vector<std::vector<Vec>> mult, std::string label = "")
        : dim_(dim),
          names_(std::move(names)),
          unit_(std::move(unit)),
          mult_(std::move(mult)),
          label_(std::move(label)) {
        if (names_.size() != dim_ || unit_.size() != dim_ || mult_.size() != dim_)
            throw Error("algebra: inconsistent dimensions");
        for (const auto& row : mult_) {
            if (row.size() != dim_) throw Error("algebra: inconsistent mult table");
            for (const auto& v : row)
                if (v.size() != dim_) throw Error("algebra: inconsistent mult table");
        }
        validate();
    }

    std::size_t dim() const { return dim_; }
    const std::string& name(std::size_t i) const { return names_[i]; }
    const std::vector<std::string>& names() const { return names_; }
    const Vec& unit() const { return unit_; }
    const std::string& label() const { return label_; }
    const Vec& basis_product(std::size_t i, std::size_t j) const { return mult_[i][j]; }

    Vec basis_element(std::size_t i) const {
        Vec v(dim_);
        v[i] = Scalar::one();
        return v;
    }

    Vec mul(const Vec& a, const Vec& b) const {
        if (a.size() != dim_ || b.size() != dim_) throw Error("algebra: shape mismatch");
        Vec r(dim_);
        for (std::size_t i = 0; i < dim_; ++i) {
            if (a[i].is_zero()) continue;
            for (std::size_t j = 0; j < dim_; ++j) {
                if (b[j].is_zero()) continue;
                const Scalar c = a[i] * b[j];
                const Vec& t = mult_[i][j];
                for (std::size_t k = 0; k < dim_; ++k)
                    if (!t[k].is_zero()) r[k] += c * t[k];
            }
        }
        return r;
    }

    /// Commutator ab - ba.
    Vec commutator(const Vec& a, const Vec& b) const {
        return vec_sub(mul(a, b), mul(b, a));
    }

    /// Matrix of a |-> x*a.
    ExactMatrix left_mult(const Vec& x) const {
        ExactMatrix m(dim_, dim_);
        for (std::size_t j = 0; j < dim_; ++j) {
            Vec img = mul(x, basis_element(j));
            for (std::size_t i = 0; i < dim_; ++i) m.at(i, j) = img[i];
        }
        return m;
    }

    /// Matrix of a |-> a*x.
    ExactMatrix right_mult(const Vec& x) const {
        ExactMatrix m(dim_, dim_);
        for (std::size_t j = 0; j < dim_; ++j) {
            Vec img = mul(basis_element(j), x);
            for (std::size_t i = 0; i < dim_; ++i) m.at(i, j) = img[i];
        }
        return m;
    }

    bool is_commutative() const {
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = i + 1; j < dim_; ++j)
                if (mult_[i][j] != mult_[j][i]) return false;
        return true;
    }

    /// Inner derivation ad b : a |-> ba - ab.
    ExactMatrix inner_derivation(const Vec& b) const {
        return left_mult(b) - right_mult(b);
    }

    bool is_derivation(const ExactMatrix& d) const {
        if (d.rows() != dim_ || d.cols() != dim_) return false;
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j) {
                Vec lhs = d.apply(mult_[i][j]);
                Vec rhs = vec_add(mul(d.col(i), basis_element(j)),
                                  mul(basis_element(i), d.col(j)));
                if (lhs != rhs) return false;
            }
        return true;
    }

    /// The center as a subspace of coordinate space: common nullspace of
    /// L_{e_i} - R_{e_i}.
    Subspace center() const {
        ExactMatrix sys(dim_ * dim_, dim_);
        for (std::size_t i = 0; i < dim_; ++i) {
            ExactMatrix d = left_mult(basis_element(i)) - right_mult(basis_element(i));
            for (std::size_t r = 0; r < dim_; ++r)
                for (std::size_t c = 0; c < dim_; ++c) sys.at(i * dim_ + r, c) = d.at(r, c);
        }
        return Subspace::span(sys.nullspace(), dim_);
    }

    /// Basis of the Lie algebra of derivations (Leibniz nullspace),
    /// deterministic order.
    std::vector<ExactMatrix> derivations() const {
        // Unknowns: D as dim^2 entries (row-major). Equations: for each basis
        // pair (i,j) and output coordinate k:
        //   D(e_i e_j)_k - (D(e_i) e_j)_k - (e_i D(e_j))_k = 0.
        const std::size_t n = dim_;
        ExactMatrix sys(n * n * n, n * n);
        std::size_t eq = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                // coefficient of D[r][c]:
                //   from D(e_i e_j): mult[i][j][c] at row r
                //   from D(e_i) e_j: D[r'][i] with e_{r'} e_j contributing
                //   from e_i D(e_j): D[r'][j] with e_i e_{r'} contributing
                for (std::size_t k = 0; k < n; ++k) {
                    for (std::size_t r = 0; r < n; ++r) {
                        // D(e_i e_j)_k = sum_c mult[i][j][c] D[k][c]
                        sys.at(eq, k * n + r) += mult_[i][j][r];
                        // (D(e_i) e_j)_k = sum_r D[r][i] mult[r][j][k]
                        sys.at(eq, r * n + i) -= mult_[r][j][k];
                        // (e_i D(e_j))_k = sum_r D[r][j] mult[i][r][k]
                        sys.at(eq, r * n + j) -= mult_[i][r][k];
                    }
                    ++eq;
                }
            }
        std::vector<ExactMatrix> out;
        for (const auto& v : sys.nullspace())
            out.push_back(ExactMatrix::unvectorize(v, n, n));
        return out;
    }

    // ---- constructors ----

    /// Full matrix algebra M_n, basis E_{rc} row-major ("E12" = row 1, col 2,
    /// 1-based in the name).
    static FDAlgebra matrix_algebra(std::size_t n) {
        const std::size_t d = n * n;
        std::vector<std::string> names(d);
        std::vector<std::vector<Vec>> mult(d, std::vector<Vec>(d, Vec(d)));
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c)
                names[r * n + c] =
                    "E" + std::to_string(r + 1) + std::to_string(c + 1);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c)
                for (std::size_t s = 0; s < n; ++s)
                    for (std::size_t t = 0; t < n; ++t)
                        if (c == s) mult[r * n + c][s * n + t][r * n + t] = Scalar::one();
        Vec unit(d);
        for (std::size_t r = 0; r < n; ++r) unit[r * n + r] = Scalar::one();
        return FDAlgebra(d, std::move(names), std::move(unit), std::move(mult),
                         "m" + std::to_string(n));
    }

    /// Group algebra from a Cayley table: table[i][j] = index of g_i g_j.
    /// Index 0 must be the identity element.
    static FDAlgebra group_algebra(const std::vector<std::vector<std::size_t>>& table,
                                   std::vector<std::string> names, std::string label) {
        const std::size_t d = table.size();
        for (const auto& row : table) {
            if (row.size() != d) throw Error("group algebra: ragged Cayley table");
            for (auto v : row)
                if (v >= d) throw Error("group algebra: index out of range");
        }
        for (std::size_t i = 0; i < d; ++i)
            if (table[0][i] != i || table[i][0] != i)
                throw Error("group algebra: index 0 is not the identity");
        if (names.empty()) {
            names.resize(d);
            for (std::size_t i = 0; i < d; ++i) names[i] = "g" + std::to_string(i);
        }
        std::vector<std::vector<Vec>> mult(d, std::vector<Vec>(d, Vec(d)));
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) mult[i][j][table[i][j]] = Scalar::one();
        Vec unit(d);
        unit[0] = Scalar::one();
        return FDAlgebra(d, std::move(names), std::move(unit), std::move(mult),
                         std::move(label));
    }

    /// Q[x]/(x^n), basis 1, x, .., x^{n-1}.
    static FDAlgebra truncated_polynomial(std::size_t n) {
        if (n == 0) throw Error("truncated polynomial: n must be positive");
        std::vector<std::string> names(n);
        names[0] = "1";
        for (std::size_t i = 1; i < n; ++i)
            names[i] = (i == 1) ? "x" : "x^" + std::to_string(i);
        std::vector<std::vector<Vec>> mult(n, std::vector<Vec>(n, Vec(n)));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i + j < n) mult[i][j][i + j] = Scalar::one();
        Vec unit(n);
        unit[0] = Scalar::one();
        return FDAlgebra(n, std::move(names), std::move(unit), std::move(mult),
                         "qx" + std::to_string(n));
    }

    static FDAlgebra direct_product(const FDAlgebra& a, const FDAlgebra& b,
                                    std::string label = "") {
        const std::size_t d = a.dim_ + b.dim_;
        std::vector<std::string> names;
        for (const auto& n : a.names_) names.push_back("l:" + n);
        for (const auto& n : b.names_) names.push_back("r:" + n);
        std::vector<std::vector<Vec>> mult(d, std::vector<Vec>(d, Vec(d)));
        for (std::size_t i = 0; i < a.dim_; ++i)
            for (std::size_t j = 0; j < a.dim_; ++j)
                for (std::size_t k = 0; k < a.dim_; ++k) mult[i][j][k] = a.mult_[i][j][k];
        for (std::size_t i = 0; i < b.dim_; ++i)
            for (std::size_t j = 0; j < b.dim_; ++j)
                for (std::size_t k = 0; k < b.dim_; ++k)
                    mult[a.dim_ + i][a.dim_ + j][a.dim_ + k] = b.mult_[i][j][k];
        Vec unit(d);
        for (std::size_t i = 0; i < a.dim_; ++i) unit[i] = a.unit_[i];
        for (std::size_t i = 0; i < b.dim_; ++i) unit[a.dim_ + i] = b.unit_[i];
        if (label.empty()) label = a.label_ + "*" + b.label_;
        return FDAlgebra(d, std::move(names), std::move(unit), std::move(mult),
                         std::move(label));
    }

    /// K \oplus A with a freshly adjoined unit (the old unit is kept but no
    /// longer plays the unit role).
    static FDAlgebra unital_extension(const FDAlgebra& a) {
        const std::size_t d = a.dim_ + 1;
        std::vector<std::string> names{"1~"};
        for (const auto& n : a.names_) names.push_back(n);
        std::vector<std::vector<Vec>> mult(d, std::vector<Vec>(d, Vec(d)));
        mult[0][0][0] = Scalar::one();
        for (std::size_t i = 0; i < a.dim_; ++i) {
            mult[0][i + 1][i + 1] = Scalar::one();
            mult[i + 1][0][i + 1] = Scalar::one();
            for (std::size_t j = 0; j < a.dim_; ++j)
                for (std::size_t k = 0; k < a.dim_; ++k)
                    mult[i + 1][j + 1][k + 1] = a.mult_[i][j][k];
        }
        Vec unit(d);
        unit[0] = Scalar::one();
        return FDAlgebra(d, std::move(names), std::move(unit), std::move(mult),
                         a.label_ + "~");
    }

private:
    void validate() const {
        if (vec_is_zero(unit_)) throw Error("algebra: zero unit");
        for (std::size_t i = 0; i < dim_; ++i) {
            if (mul(unit_, basis_element(i)) != basis_element(i) ||
                mul(basis_element(i), unit_) != basis_element(i))
                throw Error("algebra: unit axiom fails at basis " + std::to_string(i));
        }
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j)
                for (std::size_t k = 0; k < dim_; ++k) {
                    Vec lhs = mul(mult_[i][j], basis_element(k));
                    Vec rhs = mul(basis_element(i), mult_[j][k]);
                    if (lhs != rhs)
                        throw Error("algebra: associativity fails at (" +
                                    std::to_string(i) + "," + std::to_string(j) + "," +
                                    std::to_string(k) + ")");
                }
    }

    std::size_t dim_;
    std::vector<std::string> names_;
    Vec unit_;
    std::vector<std::vector<Vec>> mult_;
    std::string label_;
};

/// Convenience value type: an element of a fixed algebra.
struct AlgebraElement {
    const FDAlgebra* alg = nullptr;
    Vec coords;

    AlgebraElement() = default;
    AlgebraElement(const FDAlgebra& a, Vec c) : alg(&a), coords(std::move(c)) {
        if (coords.size() != a.dim()) throw Error("element: shape mismatch");
    }

    static AlgebraElement basis(const FDAlgebra& a, std::size_t i) {
        return AlgebraElement(a, a.basis_element(i));
    }
    static AlgebraElement unit(const FDAlgebra& a) { return AlgebraElement(a, a.unit()); }
    static AlgebraElement zero(const FDAlgebra& a) {
        return AlgebraElement(a, Vec(a.dim()));
    }

    bool is_zero() const { return vec_is_zero(coords); }

    friend AlgebraElement operator+(const AlgebraElement& x, const AlgebraElement& y) {
        return AlgebraElement(*x.alg, vec_add(x.coords, y.coords));
    }
    friend AlgebraElement operator-(const AlgebraElement& x, const AlgebraElement& y) {
        return AlgebraElement(*x.alg, vec_sub(x.coords, y.coords));
    }
    friend AlgebraElement operator*(const AlgebraElement& x, const AlgebraElement& y) {
        return AlgebraElement(*x.alg, x.alg->mul(x.coords, y.coords));
    }
    friend AlgebraElement operator*(const Scalar& c, const AlgebraElement& x) {
        return AlgebraElement(*x.alg, vec_scale(c, x.coords));
    }
    friend bool operator==(const AlgebraElement& x, const AlgebraElement& y) {
        return x.coords == y.coords;
    }
};

/// Cayley tables for the shipped groups. Element 0 is the identity.
namespace groups {

inline std::vector<std::vector<std::size_t>> cyclic(std::size_t n) {
    std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) t[i][j] = (i + j) % n;
    return t;
}

/// S3 with elements enumerated in lexicographic one-line order:
/// 012, 021, 102, 120, 201, 210 (012 = identity).
inline std::vector<std::vector<std::size_t>> s3() {
    const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                             {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    auto find = [&](const int p[3]) -> std::size_t {
        for (std::size_t k = 0; k < 6; ++k)
            if (perms[k][0] == p[0] && perms[k][1] == p[1] && perms[k][2] == p[2])
                return k;
        throw Error("s3: lookup failure");
    };
    std::vector<std::vector<std::size_t>> t(6, std::vector<std::size_t>(6));
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) {
            int comp[3];
            // (g_i g_j)(x) = g_i(g_j(x))
            for (int x = 0; x < 3; ++x) comp[x] = perms[i][perms[j][x]];
            t[i][j] = find(comp);
        }
    return t;
}

inline std::vector<std::string> s3_names() {
    return {"g012", "g021", "g102", "g120", "g201", "g210"};
}

inline std::size_t inverse_of(const std::vector<std::vector<std::size_t>>& table,
                              std::size_t g) {
    for (std::size_t h = 0; h < table.size(); ++h)
        if (table[g][h] == 0) return h;
    throw Error("group: no inverse (not a group table)");
}

}  // namespace groups

}  // namespace algcalc
