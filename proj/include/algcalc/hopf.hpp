#pragma once
// Hopf algebras on a finite-dimensional tensor backend: comultiplication,
// counit and antipode with full axiom verification, convolution algebra,
// adjoint actions, dual pairings, universal R-matrices and the quantum
// Yang-Baxter equation.  Group Hopf algebras and group function Hopf
// algebras are provided for explicit finite groups.

#include <algcalc/algebra.hpp>
#include <algcalc/matrix.hpp>

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

namespace algcalc {

// --------------------------------------------------------------- reports

/// Result of a verification run: one item per law, with a witness (basis
/// indices or a short explanation) when a law fails.
struct CheckReport {
    struct Item {
        std::string law;
        bool pass = true;
        std::string witness;
    };

    std::string context;
    std::vector<Item> items;

    void add(std::string law, bool pass, std::string witness = "") {
        items.push_back({std::move(law), pass, std::move(witness)});
    }
    bool all_pass() const {
        return std::all_of(items.begin(), items.end(),
                           [](const Item& it) { return it.pass; });
    }
    const Item* find(const std::string& law) const {
        for (const auto& it : items)
            if (it.law == law) return &it;
        return nullptr;
    }
};

// ---------------------------------------------------------------- groups

/// A finite group given by its Cayley table, with the identity at index 0.
struct Group {
    std::vector<std::vector<std::size_t>> table;  // table[i][j] = i * j
    std::vector<std::size_t> inverse;
    std::vector<std::string> names;

    Group(std::vector<std::vector<std::size_t>> t, std::vector<std::string> nm)
        : table(std::move(t)), names(std::move(nm)) {
        const std::size_t n = table.size();
        if (names.size() != n) throw Error("group: one name per element");
        for (const auto& row : table) {
            if (row.size() != n) throw Error("group: ragged Cayley table");
            for (auto v : row)
                if (v >= n) throw Error("group: index out of range");
        }
        for (std::size_t i = 0; i < n; ++i)
            if (table[0][i] != i || table[i][0] != i)
                throw Error("group: index 0 is not the identity");
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k)
                    if (table[table[i][j]][k] != table[i][table[j][k]])
                        throw Error("group: associativity fails");
        inverse.assign(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j)
                if (table[i][j] == 0 && table[j][i] == 0) inverse[i] = j;
            if (inverse[i] == n) throw Error("group: missing inverse");
        }
    }

    std::size_t size() const { return table.size(); }

    static Group cyclic(std::size_t n) {
        if (n == 0) throw Error("group: empty cyclic group");
        std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
        std::vector<std::string> nm(n);
        for (std::size_t i = 0; i < n; ++i) {
            nm[i] = "g" + std::to_string(i);
            for (std::size_t j = 0; j < n; ++j) t[i][j] = (i + j) % n;
        }
        return Group(std::move(t), std::move(nm));
    }

    /// The symmetric group on {0, .., n-1}; elements are the permutations in
    /// lexicographic one-line order, so the identity comes first.
    static Group symmetric(std::size_t n) {
        std::vector<std::vector<std::size_t>> perms;
        std::vector<std::size_t> p(n);
        std::iota(p.begin(), p.end(), 0);
        do {
            perms.push_back(p);
        } while (std::next_permutation(p.begin(), p.end()));
        const std::size_t m = perms.size();
        auto index_of = [&](const std::vector<std::size_t>& q) {
            return static_cast<std::size_t>(
                std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
        };
        std::vector<std::vector<std::size_t>> t(m, std::vector<std::size_t>(m));
        std::vector<std::string> nm(m);
        for (std::size_t i = 0; i < m; ++i) {
            std::string s = "p";
            for (auto v : perms[i]) s += std::to_string(v);
            nm[i] = s;
            for (std::size_t j = 0; j < m; ++j) {
                std::vector<std::size_t> comp(n);
                for (std::size_t x = 0; x < n; ++x) comp[x] = perms[i][perms[j][x]];
                t[i][j] = index_of(comp);
            }
        }
        return Group(std::move(t), std::move(nm));
    }
};

// -------------------------------------------------------- tensor algebra

/// Coordinates of x (x) y in A (x) A, index (i, k) -> i * n + k.
inline Vec tensor_product(const Vec& x, const Vec& y) {
    Vec out(x.size() * y.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t k = 0; k < y.size(); ++k)
            if (!y[k].is_zero()) out[i * y.size() + k] = x[i] * y[k];
    }
    return out;
}

/// Componentwise product on A^{(x) arity}:
/// (x_1 (x) .. (x) x_N)(y_1 (x) .. (x) y_N) = x_1 y_1 (x) .. (x) x_N y_N.
inline Vec tensor_mul(const FDAlgebra& alg, std::size_t arity, const Vec& u,
                      const Vec& v) {
    const std::size_t n = alg.dim();
    std::size_t total = 1;
    for (std::size_t t = 0; t < arity; ++t) total *= n;
    if (u.size() != total || v.size() != total)
        throw Error("tensor_mul: arity mismatch");
    Vec out(total);
    std::vector<std::size_t> du(arity), dv(arity);
    std::vector<const Vec*> pc(arity);
    std::function<void(std::size_t, std::size_t, const Scalar&)> emit =
        [&](std::size_t t, std::size_t idx, const Scalar& c) {
            if (t == arity) {
                out[idx] = out[idx] + c;
                return;
            }
            const Vec& comp = *pc[t];
            for (std::size_t j = 0; j < n; ++j)
                if (!comp[j].is_zero()) emit(t + 1, idx * n + j, c * comp[j]);
        };
    for (std::size_t iu = 0; iu < total; ++iu) {
        if (u[iu].is_zero()) continue;
        std::size_t rest = iu;
        for (std::size_t t = arity; t-- > 0;) {
            du[t] = rest % n;
            rest /= n;
        }
        for (std::size_t iv = 0; iv < total; ++iv) {
            if (v[iv].is_zero()) continue;
            rest = iv;
            for (std::size_t t = arity; t-- > 0;) {
                dv[t] = rest % n;
                rest /= n;
            }
            for (std::size_t t = 0; t < arity; ++t)
                pc[t] = &alg.basis_product(du[t], dv[t]);
            emit(0, 0, u[iu] * v[iv]);
        }
    }
    return out;
}

/// The multiplication m: A (x) A -> A as an n x n^2 matrix.
inline ExactMatrix mul_matrix(const FDAlgebra& alg) {
    const std::size_t n = alg.dim();
    ExactMatrix m(n, n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const Vec& prod = alg.basis_product(i, k);
            for (std::size_t x = 0; x < n; ++x) m.at(x, i * n + k) = prod[x];
        }
    return m;
}

/// The transposition P: a (x) b -> b (x) a as an n^2 x n^2 matrix.
inline ExactMatrix swap_matrix(std::size_t n) {
    ExactMatrix p(n * n, n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            p.at(k * n + i, i * n + k) = Scalar::one();
    return p;
}

// --------------------------------------------------------- Hopf algebras

/// A Hopf algebra (A, m, Delta, epsilon, S) on a finite-dimensional algebra.
/// The constructor checks shapes only; verify_hopf reports on every law, so
/// deliberately broken co-operations can be constructed as negative controls.
class HopfAlgebra {
public:
    HopfAlgebra(FDAlgebra alg, ExactMatrix delta, Vec counit, ExactMatrix antipode)
        : alg_(std::move(alg)),
          delta_(std::move(delta)),
          counit_(std::move(counit)),
          antipode_(std::move(antipode)) {
        const std::size_t n = alg_.dim();
        if (delta_.rows() != n * n || delta_.cols() != n)
            throw Error("hopf: comultiplication must be n^2 x n");
        if (counit_.size() != n) throw Error("hopf: counit must have n coordinates");
        if (antipode_.rows() != n || antipode_.cols() != n)
            throw Error("hopf: antipode must be n x n");
    }

    const FDAlgebra& algebra() const { return alg_; }
    const ExactMatrix& delta() const { return delta_; }
    const Vec& counit() const { return counit_; }
    const ExactMatrix& antipode() const { return antipode_; }
    std::size_t dim() const { return alg_.dim(); }

    Vec delta_of(const Vec& a) const { return delta_.apply(a); }
    Vec antipode_of(const Vec& a) const { return antipode_.apply(a); }
    Scalar counit_of(const Vec& a) const {
        Scalar s;
        for (std::size_t i = 0; i < a.size(); ++i) s += counit_[i] * a[i];
        return s;
    }

    bool cocommutative() const { return swap_matrix(dim()) * delta_ == delta_; }

    /// Group Hopf algebra of a finite group:
    /// Delta(g) = g (x) g, epsilon(g) = 1, S(g) = g^{-1}.
    static HopfAlgebra group_hopf(const Group& grp, std::string label) {
        FDAlgebra alg =
            FDAlgebra::group_algebra(grp.table, grp.names, std::move(label));
        const std::size_t n = grp.size();
        ExactMatrix delta(n * n, n);
        Vec counit(n);
        ExactMatrix antipode(n, n);
        for (std::size_t g = 0; g < n; ++g) {
            delta.at(g * n + g, g) = Scalar::one();
            counit[g] = Scalar::one();
            antipode.at(grp.inverse[g], g) = Scalar::one();
        }
        return HopfAlgebra(std::move(alg), std::move(delta), std::move(counit),
                           std::move(antipode));
    }

    /// Function Hopf algebra of a finite group: the commutative algebra of
    /// functions with pointwise product, basis the indicator functions d_g,
    /// Delta(f)(g, g') = f(gg'), epsilon(f) = f(1), S(f)(g) = f(g^{-1}).
    static HopfAlgebra function_hopf(const Group& grp, std::string label) {
        const std::size_t n = grp.size();
        std::vector<std::string> names(n);
        for (std::size_t g = 0; g < n; ++g) names[g] = "d_" + grp.names[g];
        std::vector<std::vector<Vec>> mult(n, std::vector<Vec>(n, Vec(n)));
        Vec unit(n);
        for (std::size_t g = 0; g < n; ++g) {
            mult[g][g][g] = Scalar::one();
            unit[g] = Scalar::one();
        }
        FDAlgebra alg(n, std::move(names), std::move(unit), std::move(mult),
                      std::move(label));
        ExactMatrix delta(n * n, n);
        Vec counit(n);
        ExactMatrix antipode(n, n);
        for (std::size_t h = 0; h < n; ++h)
            for (std::size_t k = 0; k < n; ++k)
                delta.at(h * n + k, grp.table[h][k]) = Scalar::one();
        counit[0] = Scalar::one();
        for (std::size_t g = 0; g < n; ++g)
            antipode.at(grp.inverse[g], g) = Scalar::one();
        return HopfAlgebra(std::move(alg), std::move(delta), std::move(counit),
                           std::move(antipode));
    }

private:
    FDAlgebra alg_;
    ExactMatrix delta_;
    Vec counit_;
    ExactMatrix antipode_;
};

/// Verify every Hopf-algebra law on basis elements (sufficient by
/// linearity), reporting each failure with a witness.
inline CheckReport verify_hopf(const HopfAlgebra& h) {
    CheckReport rep;
    const FDAlgebra& alg = h.algebra();
    const std::size_t n = alg.dim();
    const ExactMatrix id = ExactMatrix::identity(n);
    const ExactMatrix m2 = mul_matrix(alg);
    const ExactMatrix p = swap_matrix(n);
    ExactMatrix eps_row(1, n);
    for (std::size_t j = 0; j < n; ++j) eps_row.at(0, j) = h.counit()[j];

    auto column_witness = [&](const ExactMatrix& a, const ExactMatrix& b) {
        for (std::size_t j = 0; j < n; ++j)
            if (a.col(j) != b.col(j)) return "at basis element " + alg.name(j);
        return std::string();
    };

    // comultiplication is an algebra morphism
    {
        bool ok = true;
        std::string wit;
        for (std::size_t i = 0; i < n && ok; ++i)
            for (std::size_t j = 0; j < n && ok; ++j) {
                Vec lhs = h.delta_of(alg.basis_product(i, j));
                Vec rhs = tensor_mul(alg, 2, h.delta().col(i), h.delta().col(j));
                if (lhs != rhs) {
                    ok = false;
                    wit = "at (" + alg.name(i) + ", " + alg.name(j) + ")";
                }
            }
        rep.add("comultiplication is an algebra morphism", ok, wit);
    }
    {
        bool ok = h.delta_of(alg.unit()) == tensor_product(alg.unit(), alg.unit());
        rep.add("comultiplication of the unit is 1 (x) 1", ok);
    }
    // counit is an algebra morphism
    {
        bool ok = true;
        std::string wit;
        if (h.counit_of(alg.unit()) != Scalar::one()) {
            ok = false;
            wit = "at the unit";
        }
        for (std::size_t i = 0; i < n && ok; ++i)
            for (std::size_t j = 0; j < n && ok; ++j)
                if (h.counit_of(alg.basis_product(i, j)) !=
                    h.counit()[i] * h.counit()[j]) {
                    ok = false;
                    wit = "at (" + alg.name(i) + ", " + alg.name(j) + ")";
                }
        rep.add("counit is an algebra morphism", ok, wit);
    }
    // coassociativity
    {
        ExactMatrix lhs = h.delta().kron(id) * h.delta();
        ExactMatrix rhs = id.kron(h.delta()) * h.delta();
        rep.add("coassociativity", lhs == rhs, column_witness(lhs, rhs));
    }
    // counit law
    {
        ExactMatrix lhs = eps_row.kron(id) * h.delta();
        ExactMatrix rhs = id.kron(eps_row) * h.delta();
        bool ok = lhs == id && rhs == id;
        std::string wit = lhs == id ? column_witness(rhs, id) : column_witness(lhs, id);
        rep.add("counit law", ok, wit);
    }
    // antipode law: m (S (x) Id) Delta = m (Id (x) S) Delta = epsilon(.) 1
    {
        ExactMatrix target(n, n);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t x = 0; x < n; ++x)
                target.at(x, j) = h.counit()[j] * alg.unit()[x];
        ExactMatrix lhs = m2 * (h.antipode().kron(id) * h.delta());
        ExactMatrix rhs = m2 * (id.kron(h.antipode()) * h.delta());
        bool ok = lhs == target && rhs == target;
        std::string wit =
            lhs == target ? column_witness(rhs, target) : column_witness(lhs, target);
        rep.add("antipode law", ok, wit);
    }
    {
        bool ok = h.antipode_of(alg.unit()) == alg.unit();
        rep.add("antipode fixes the unit", ok);
    }
    // antipode antihomomorphism: S(ab) = S(b) S(a)
    {
        bool ok = true;
        std::string wit;
        for (std::size_t i = 0; i < n && ok; ++i)
            for (std::size_t j = 0; j < n && ok; ++j) {
                Vec lhs = h.antipode_of(alg.basis_product(i, j));
                Vec rhs =
                    alg.mul(h.antipode().col(j), h.antipode().col(i));
                if (lhs != rhs) {
                    ok = false;
                    wit = "at (" + alg.name(i) + ", " + alg.name(j) + ")";
                }
            }
        rep.add("antipode antihomomorphism", ok, wit);
    }
    // epsilon . S = epsilon
    {
        ExactMatrix lhs = eps_row * h.antipode();
        rep.add("counit compatible with antipode", lhs == eps_row);
    }
    // Delta . S = P (S (x) S) Delta
    {
        ExactMatrix lhs = h.delta() * h.antipode();
        ExactMatrix rhs = p * (h.antipode().kron(h.antipode()) * h.delta());
        rep.add("comultiplication compatible with antipode", lhs == rhs,
                column_witness(lhs, rhs));
    }
    return rep;
}

// ------------------------------------------------------------ convolution

/// Convolution of linear forms: (f * g)(a) = sum f(a_(1)) g(a_(2)).
inline Vec convolution(const HopfAlgebra& h, const Vec& f, const Vec& g) {
    const std::size_t n = h.dim();
    if (f.size() != n || g.size() != n) throw Error("convolution: size mismatch");
    Vec out(n);
    for (std::size_t j = 0; j < n; ++j) {
        Scalar s;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) {
                const Scalar& c = h.delta().at(i * n + k, j);
                if (!c.is_zero()) s += c * f[i] * g[k];
            }
        out[j] = s;
    }
    return out;
}

/// f * a = sum a_(1) f(a_(2)), an element of the algebra.
inline Vec form_star_element(const HopfAlgebra& h, const Vec& f, const Vec& a) {
    const std::size_t n = h.dim();
    Vec da = h.delta_of(a);
    Vec out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const Scalar& c = da[i * n + k];
            if (!c.is_zero()) out[i] = out[i] + c * f[k];
        }
    return out;
}

/// a * f = sum f(a_(1)) a_(2), an element of the algebra.
inline Vec element_star_form(const HopfAlgebra& h, const Vec& a, const Vec& f) {
    const std::size_t n = h.dim();
    Vec da = h.delta_of(a);
    Vec out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const Scalar& c = da[i * n + k];
            if (!c.is_zero()) out[k] = out[k] + c * f[i];
        }
    return out;
}

// --------------------------------------------------------- adjoint action

/// Left adjoint action x |> y = sum x_(1) y S(x_(2)).
inline Vec adjoint_left(const HopfAlgebra& h, const Vec& x, const Vec& y) {
    const FDAlgebra& alg = h.algebra();
    const std::size_t n = alg.dim();
    Vec dx = h.delta_of(x);
    Vec out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const Scalar& c = dx[i * n + k];
            if (c.is_zero()) continue;
            Vec term = alg.mul(alg.basis_element(i),
                               alg.mul(y, h.antipode().col(k)));
            out = vec_add(out, vec_scale(c, term));
        }
    return out;
}

/// Right adjoint action y <| x = sum S(x_(1)) y x_(2).
inline Vec adjoint_right(const HopfAlgebra& h, const Vec& y, const Vec& x) {
    const FDAlgebra& alg = h.algebra();
    const std::size_t n = alg.dim();
    Vec dx = h.delta_of(x);
    Vec out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const Scalar& c = dx[i * n + k];
            if (c.is_zero()) continue;
            Vec term = alg.mul(h.antipode().col(i),
                               alg.mul(y, alg.basis_element(k)));
            out = vec_add(out, vec_scale(c, term));
        }
    return out;
}

// ----------------------------------------------------------- dual pairing

/// Verify that the pairing matrix pm (pm.at(i, j) = <e_i, e'_j>) makes the
/// Hopf algebras ha and hb dually paired:
///   <a, a'b'>   = <Delta(a), a' (x) b'>,
///   <a (x) b, Delta'(a')> = <ab, a'>,
///   epsilon'(a') = <1, a'>,  epsilon(a) = <a, 1>,
///   <a, S'(a')> = <S(a), a'>,
/// extended to tensor products pairwise, plus non-degeneracy (full rank).
inline CheckReport dual_pairing_check(const HopfAlgebra& ha, const HopfAlgebra& hb,
                                      const ExactMatrix& pm) {
    CheckReport rep;
    const FDAlgebra& a = ha.algebra();
    const FDAlgebra& b = hb.algebra();
    const std::size_t na = a.dim(), nb = b.dim();
    if (pm.rows() != na || pm.cols() != nb)
        throw Error("dual pairing: matrix shape mismatch");

    {
        bool ok = true;
        std::string wit;
        for (std::size_t x = 0; x < na && ok; ++x)
            for (std::size_t y = 0; y < nb && ok; ++y)
                for (std::size_t z = 0; z < nb && ok; ++z) {
                    const Vec& prod = b.basis_product(y, z);
                    Scalar lhs;
                    for (std::size_t w = 0; w < nb; ++w)
                        lhs += prod[w] * pm.at(x, w);
                    Scalar rhs;
                    for (std::size_t i = 0; i < na; ++i)
                        for (std::size_t k = 0; k < na; ++k) {
                            const Scalar& c = ha.delta().at(i * na + k, x);
                            if (!c.is_zero()) rhs += c * pm.at(i, y) * pm.at(k, z);
                        }
                    if (lhs != rhs) {
                        ok = false;
                        wit = "at (" + a.name(x) + "; " + b.name(y) + ", " +
                              b.name(z) + ")";
                    }
                }
        rep.add("pairing respects right products", ok, wit);
    }
    {
        bool ok = true;
        std::string wit;
        for (std::size_t x = 0; x < na && ok; ++x)
            for (std::size_t y = 0; y < na && ok; ++y)
                for (std::size_t z = 0; z < nb && ok; ++z) {
                    const Vec& prod = a.basis_product(x, y);
                    Scalar rhs;
                    for (std::size_t w = 0; w < na; ++w)
                        rhs += prod[w] * pm.at(w, z);
                    Scalar lhs;
                    for (std::size_t i = 0; i < nb; ++i)
                        for (std::size_t k = 0; k < nb; ++k) {
                            const Scalar& c = hb.delta().at(i * nb + k, z);
                            if (!c.is_zero()) lhs += c * pm.at(x, i) * pm.at(y, k);
                        }
                    if (lhs != rhs) {
                        ok = false;
                        wit = "at (" + a.name(x) + ", " + a.name(y) + "; " +
                              b.name(z) + ")";
                    }
                }
        rep.add("pairing respects left products", ok, wit);
    }
    {
        bool ok = true;
        std::string wit;
        for (std::size_t z = 0; z < nb && ok; ++z) {
            Scalar lhs;
            for (std::size_t w = 0; w < na; ++w)
                lhs += a.unit()[w] * pm.at(w, z);
            if (lhs != hb.counit()[z]) {
                ok = false;
                wit = "at <1, " + b.name(z) + ">";
            }
        }
        for (std::size_t x = 0; x < na && ok; ++x) {
            Scalar lhs;
            for (std::size_t w = 0; w < nb; ++w)
                lhs += pm.at(x, w) * b.unit()[w];
            if (lhs != ha.counit()[x]) {
                ok = false;
                wit = "at <" + a.name(x) + ", 1>";
            }
        }
        rep.add("pairing compatible with counits", ok, wit);
    }
    {
        // <a, S'(a')> = <S(a), a'>  as matrices: pm S' = S^T pm.
        ExactMatrix lhs = pm * hb.antipode();
        ExactMatrix rhs(na, nb);
        for (std::size_t x = 0; x < na; ++x)
            for (std::size_t z = 0; z < nb; ++z) {
                Scalar s;
                for (std::size_t w = 0; w < na; ++w)
                    s += ha.antipode().at(w, x) * pm.at(w, z);
                rhs.at(x, z) = s;
            }
        rep.add("pairing compatible with antipodes", lhs == rhs);
    }
    {
        bool ok = pm.rank() == std::min(na, nb) && na == nb;
        rep.add("non-degeneracy", ok,
                ok ? "" : "rank " + std::to_string(pm.rank()) + " of " +
                              std::to_string(std::min(na, nb)));
    }
    return rep;
}

// -------------------------------------------------------------- R-matrices

/// An invertible element R of A (x) A; the two-sided inverse is solved for
/// at construction and the constructor throws when none exists.
class RMatrix {
public:
    RMatrix(const HopfAlgebra& h, Vec r) : value_(std::move(r)) {
        const FDAlgebra& alg = h.algebra();
        const std::size_t n = alg.dim();
        if (value_.size() != n * n) throw Error("r-matrix: must live in A (x) A");
        // left multiplication by r on A (x) A
        ExactMatrix lmul(n * n, n * n);
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = 0; q < n; ++q) {
                const Scalar& c = value_[p * n + q];
                if (c.is_zero()) continue;
                ExactMatrix term = alg.left_mult(alg.basis_element(p))
                                       .kron(alg.left_mult(alg.basis_element(q)));
                lmul = lmul + c * term;
            }
        Vec unit2 = tensor_product(alg.unit(), alg.unit());
        auto sol = lmul.solve(unit2);
        if (!sol) throw Error("r-matrix: not invertible in A (x) A");
        inverse_ = *sol;
        if (tensor_mul(alg, 2, inverse_, value_) != unit2)
            throw Error("r-matrix: inverse is not two-sided");
    }

    static RMatrix identity(const HopfAlgebra& h) {
        return RMatrix(h, tensor_product(h.algebra().unit(), h.algebra().unit()));
    }

    const Vec& value() const { return value_; }
    const Vec& inverse() const { return inverse_; }

private:
    Vec value_;
    Vec inverse_;
};

/// Embed r in A (x) A into slots (s1, s2) of A (x) A (x) A, unit elsewhere.
inline Vec embed_r(const FDAlgebra& alg, const Vec& r, std::size_t s1,
                   std::size_t s2) {
    const std::size_t n = alg.dim();
    Vec out(n * n * n);
    const Vec& u = alg.unit();
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
            const Scalar& c = r[p * n + q];
            if (c.is_zero()) continue;
            for (std::size_t w = 0; w < n; ++w) {
                if (u[w].is_zero()) continue;
                std::size_t digit[3] = {w, w, w};
                digit[s1] = p;
                digit[s2] = q;
                out[(digit[0] * n + digit[1]) * n + digit[2]] =
                    out[(digit[0] * n + digit[1]) * n + digit[2]] + c * u[w];
            }
        }
    return out;
}

/// Verify the quantum Yang-Baxter equation
///   R12 R13 R23 = R23 R13 R12
/// and (optionally) the quasi-triangularity laws
///   (Delta (x) Id)(R) = R13 R23,  (Id (x) Delta)(R) = R12 R23,
///   (P . Delta)(a) = R Delta(a) R^{-1}.
inline CheckReport qybe_check(const HopfAlgebra& h, const RMatrix& r,
                              bool quasitriangular = true) {
    CheckReport rep;
    const FDAlgebra& alg = h.algebra();
    const std::size_t n = alg.dim();
    Vec r12 = embed_r(alg, r.value(), 0, 1);
    Vec r13 = embed_r(alg, r.value(), 0, 2);
    Vec r23 = embed_r(alg, r.value(), 1, 2);
    {
        Vec lhs = tensor_mul(alg, 3, tensor_mul(alg, 3, r12, r13), r23);
        Vec rhs = tensor_mul(alg, 3, tensor_mul(alg, 3, r23, r13), r12);
        rep.add("quantum Yang-Baxter equation", lhs == rhs);
    }
    if (!quasitriangular) return rep;
    {
        // (Delta (x) Id)(R) = R13 R23
        Vec lhs(n * n * n);
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = 0; q < n; ++q) {
                const Scalar& c = r.value()[p * n + q];
                if (c.is_zero()) continue;
                const Vec dp = h.delta().col(p);
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = 0; j < n; ++j) {
                        const Scalar& d = dp[i * n + j];
                        if (!d.is_zero())
                            lhs[(i * n + j) * n + q] =
                                lhs[(i * n + j) * n + q] + c * d;
                    }
            }
        Vec rhs = tensor_mul(alg, 3, r13, r23);
        rep.add("coproduct in the first slot", lhs == rhs);
    }
    {
        // (Id (x) Delta)(R) = R12 R23
        Vec lhs(n * n * n);
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = 0; q < n; ++q) {
                const Scalar& c = r.value()[p * n + q];
                if (c.is_zero()) continue;
                const Vec dq = h.delta().col(q);
                for (std::size_t j = 0; j < n; ++j)
                    for (std::size_t k = 0; k < n; ++k) {
                        const Scalar& d = dq[j * n + k];
                        if (!d.is_zero())
                            lhs[(p * n + j) * n + k] =
                                lhs[(p * n + j) * n + k] + c * d;
                    }
            }
        Vec rhs = tensor_mul(alg, 3, r12, r23);
        rep.add("coproduct in the second slot", lhs == rhs);
    }
    {
        // (P . Delta)(a) = R Delta(a) R^{-1}
        bool ok = true;
        std::string wit;
        ExactMatrix p = swap_matrix(n);
        for (std::size_t j = 0; j < n && ok; ++j) {
            Vec da = h.delta().col(j);
            Vec lhs = p.apply(da);
            Vec rhs = tensor_mul(alg, 2, tensor_mul(alg, 2, r.value(), da),
                                 r.inverse());
            if (lhs != rhs) {
                ok = false;
                wit = "at basis element " + alg.name(j);
            }
        }
        rep.add("coproduct intertwined with its opposite", ok, wit);
    }
    return rep;
}

}  // namespace algcalc
