#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "combinat.hpp"
#include "matrix.hpp"

namespace algcalc {

/// Finite-dimensional Lie algebra over Q(i) presented by structure constants
/// [e_i, e_j] = sum_k bracket[i][j][k] e_k. Antisymmetry and the Jacobi
/// identity are validated on construction.
class LieAlgebra {
public:
    LieAlgebra(std::size_t dim, std::vector<std::string> names,
               std::vector<std::vector<Vec>> bracket, std::string label = "")
        : dim_(dim), names_(std::move(names)), bracket_(std::move(bracket)),
          label_(std::move(label)) {
        if (names_.size() != dim_ || bracket_.size() != dim_)
            throw Error("lie: inconsistent dimensions");
        for (const auto& row : bracket_) {
            if (row.size() != dim_) throw Error("lie: inconsistent bracket table");
            for (const auto& v : row)
                if (v.size() != dim_) throw Error("lie: inconsistent bracket table");
        }
        validate();
    }

    std::size_t dim() const { return dim_; }
    const std::string& name(std::size_t i) const { return names_[i]; }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& label() const { return label_; }
    const Vec& basis_bracket(std::size_t i, std::size_t j) const { return bracket_[i][j]; }

    Vec basis_element(std::size_t i) const {
        Vec v(dim_);
        v[i] = Scalar::one();
        return v;
    }

    Vec brk(const Vec& a, const Vec& b) const {
        if (a.size() != dim_ || b.size() != dim_) throw Error("lie: shape mismatch");
        Vec r(dim_);
        for (std::size_t i = 0; i < dim_; ++i) {
            if (a[i].is_zero()) continue;
            for (std::size_t j = 0; j < dim_; ++j) {
                if (b[j].is_zero()) continue;
                const Scalar c = a[i] * b[j];
                for (std::size_t k = 0; k < dim_; ++k)
                    if (!bracket_[i][j][k].is_zero()) r[k] += c * bracket_[i][j][k];
            }
        }
        return r;
    }

    // ---- constructors ----

    static LieAlgebra abelian(std::size_t n) {
        std::vector<std::string> names(n);
        for (std::size_t i = 0; i < n; ++i) names[i] = "e" + std::to_string(i + 1);
        return LieAlgebra(n, std::move(names),
                          std::vector<std::vector<Vec>>(n, std::vector<Vec>(n, Vec(n))),
                          "abelian" + std::to_string(n));
    }

    /// dim 3, [x, y] = z central.
    static LieAlgebra heisenberg() {
        std::vector<std::vector<Vec>> c(3, std::vector<Vec>(3, Vec(3)));
        c[0][1][2] = Scalar::one();
        c[1][0][2] = -Scalar::one();
        return LieAlgebra(3, {"x", "y", "z"}, std::move(c), "heisenberg");
    }

    /// [e_i, e_j] = epsilon_{ijk} e_k.
    static LieAlgebra su2() {
        std::vector<std::vector<Vec>> c(3, std::vector<Vec>(3, Vec(3)));
        c[0][1][2] = Scalar::one();
        c[1][0][2] = -Scalar::one();
        c[1][2][0] = Scalar::one();
        c[2][1][0] = -Scalar::one();
        c[2][0][1] = Scalar::one();
        c[0][2][1] = -Scalar::one();
        return LieAlgebra(3, {"e1", "e2", "e3"}, std::move(c), "su2");
    }

    /// Basis h, e, f with [h,e] = 2e, [h,f] = -2f, [e,f] = h.
    static LieAlgebra sl2() {
        std::vector<std::vector<Vec>> c(3, std::vector<Vec>(3, Vec(3)));
        c[0][1][1] = Scalar(2);
        c[1][0][1] = Scalar(-2);
        c[0][2][2] = Scalar(-2);
        c[2][0][2] = Scalar(2);
        c[1][2][0] = Scalar::one();
        c[2][1][0] = -Scalar::one();
        return LieAlgebra(3, {"h", "e", "f"}, std::move(c), "sl2");
    }

    /// Upper-triangular n x n matrices under the commutator; basis E_{rc}
    /// with r <= c, ordered row-major.
    static LieAlgebra upper_triangular(std::size_t n) {
        std::vector<std::pair<std::size_t, std::size_t>> idx;
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = r; c < n; ++c) idx.push_back({r, c});
        const std::size_t d = idx.size();
        auto find = [&](std::size_t r, std::size_t c) -> std::size_t {
            for (std::size_t k = 0; k < d; ++k)
                if (idx[k].first == r && idx[k].second == c) return k;
            throw Error("ut: lookup failure");
        };
        std::vector<std::string> names(d);
        for (std::size_t k = 0; k < d; ++k)
            names[k] = "E" + std::to_string(idx[k].first + 1) +
                       std::to_string(idx[k].second + 1);
        std::vector<std::vector<Vec>> c(d, std::vector<Vec>(d, Vec(d)));
        // [E_{ab}, E_{cd}] = delta_{bc} E_{ad} - delta_{da} E_{cb}
        for (std::size_t p = 0; p < d; ++p)
            for (std::size_t q = 0; q < d; ++q) {
                auto [a, b] = idx[p];
                auto [cc, dd] = idx[q];
                if (b == cc) c[p][q][find(a, dd)] += Scalar::one();
                if (dd == a) c[p][q][find(cc, b)] -= Scalar::one();
            }
        return LieAlgebra(d, std::move(names), std::move(c), "ut" + std::to_string(n));
    }

    static LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
        const std::size_t d = a.dim_ + b.dim_;
        std::vector<std::string> names;
        for (const auto& n : a.names_) names.push_back("l:" + n);
        for (const auto& n : b.names_) names.push_back("r:" + n);
        std::vector<std::vector<Vec>> c(d, std::vector<Vec>(d, Vec(d)));
        for (std::size_t i = 0; i < a.dim_; ++i)
            for (std::size_t j = 0; j < a.dim_; ++j)
                for (std::size_t k = 0; k < a.dim_; ++k) c[i][j][k] = a.bracket_[i][j][k];
        for (std::size_t i = 0; i < b.dim_; ++i)
            for (std::size_t j = 0; j < b.dim_; ++j)
                for (std::size_t k = 0; k < b.dim_; ++k)
                    c[a.dim_ + i][a.dim_ + j][a.dim_ + k] = b.bracket_[i][j][k];
        return LieAlgebra(d, std::move(names), std::move(c),
                          a.label_ + "+" + b.label_);
    }

private:
    void validate() const {
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j) {
                Vec anti = vec_add(bracket_[i][j], bracket_[j][i]);
                if (!vec_is_zero(anti))
                    throw Error("lie: antisymmetry fails at (" + std::to_string(i) + "," +
                                std::to_string(j) + ")");
            }
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = i + 1; j < dim_; ++j)
                for (std::size_t k = j + 1; k < dim_; ++k) {
                    Vec s = brk(bracket_[i][j], basis_element(k));
                    s = vec_add(s, brk(bracket_[j][k], basis_element(i)));
                    s = vec_add(s, brk(bracket_[k][i], basis_element(j)));
                    if (!vec_is_zero(s))
                        throw Error("lie: Jacobi fails at (" + std::to_string(i) + "," +
                                    std::to_string(j) + "," + std::to_string(k) + ")");
                }
    }

    std::size_t dim_;
    std::vector<std::string> names_;
    std::vector<std::vector<Vec>> bracket_;
    std::string label_;
};

/// A finite-dimensional module over a Lie algebra: action matrices rho_i with
/// rho([x,y]) = rho(x) rho(y) - rho(y) rho(x), validated on construction.
class Representation {
public:
    Representation(const LieAlgebra& g, std::size_t module_dim,
                   std::vector<ExactMatrix> rho)
        : g_(&g), module_dim_(module_dim), rho_(std::move(rho)) {
        if (rho_.size() != g.dim()) throw Error("rep: wrong number of action matrices");
        for (const auto& m : rho_)
            if (m.rows() != module_dim_ || m.cols() != module_dim_)
                throw Error("rep: action matrix shape mismatch");
        validate();
    }

    static Representation trivial(const LieAlgebra& g, std::size_t module_dim = 1) {
        return Representation(
            g, module_dim,
            std::vector<ExactMatrix>(g.dim(), ExactMatrix(module_dim, module_dim)));
    }

    static Representation adjoint(const LieAlgebra& g) {
        std::vector<ExactMatrix> rho;
        for (std::size_t i = 0; i < g.dim(); ++i) {
            ExactMatrix m(g.dim(), g.dim());
            for (std::size_t j = 0; j < g.dim(); ++j) {
                const Vec& v = g.basis_bracket(i, j);
                for (std::size_t k = 0; k < g.dim(); ++k) m.at(k, j) = v[k];
            }
            rho.push_back(std::move(m));
        }
        return Representation(g, g.dim(), std::move(rho));
    }

    const LieAlgebra& lie() const { return *g_; }
    std::size_t module_dim() const { return module_dim_; }
    const ExactMatrix& action(std::size_t i) const { return rho_[i]; }

    Vec act(std::size_t i, const Vec& v) const { return rho_[i].apply(v); }

    bool is_trivial() const {
        for (const auto& m : rho_)
            if (!m.is_zero()) return false;
        return true;
    }

private:
    void validate() const {
        for (std::size_t i = 0; i < g_->dim(); ++i)
            for (std::size_t j = i + 1; j < g_->dim(); ++j) {
                ExactMatrix lhs(module_dim_, module_dim_);
                const Vec& br = g_->basis_bracket(i, j);
                for (std::size_t k = 0; k < g_->dim(); ++k)
                    if (!br[k].is_zero()) lhs = lhs + br[k] * rho_[k];
                ExactMatrix rhs = rho_[i] * rho_[j] - rho_[j] * rho_[i];
                if (!(lhs == rhs))
                    throw Error("rep: bracket compatibility fails at (" +
                                std::to_string(i) + "," + std::to_string(j) + ")");
            }
    }

    const LieAlgebra* g_;
    std::size_t module_dim_;
    std::vector<ExactMatrix> rho_;
};

/// Alternating k-cochain with values in a module, stored on strictly
/// increasing basis tuples. Missing tuples are zero.
class Cochain {
public:
    Cochain(const Representation& rep, unsigned degree)
        : rep_(&rep), degree_(degree) {}

    const Representation& rep() const { return *rep_; }
    unsigned degree() const { return degree_; }
    const std::map<std::vector<int>, Vec>& components() const { return comps_; }

    void set(std::vector<int> tuple, Vec value) {
        if (tuple.size() != degree_) throw Error("cochain: tuple arity mismatch");
        for (std::size_t i = 0; i + 1 < tuple.size(); ++i)
            if (tuple[i] >= tuple[i + 1]) throw Error("cochain: tuple not increasing");
        if (value.size() != rep_->module_dim()) throw Error("cochain: value shape");
        if (vec_is_zero(value))
            comps_.erase(tuple);
        else
            comps_[std::move(tuple)] = std::move(value);
    }

    /// Evaluate on an arbitrary basis-index tuple (alternating extension):
    /// repeated indices give zero, unsorted tuples produce a sign.
    Vec eval(std::vector<int> tuple) const {
        if (tuple.size() != degree_) throw Error("cochain: tuple arity mismatch");
        int sign = 1;
        for (std::size_t i = 1; i < tuple.size(); ++i) {
            int v = tuple[i];
            std::size_t j = i;
            while (j > 0 && tuple[j - 1] > v) {
                tuple[j] = tuple[j - 1];
                --j;
                sign = -sign;
            }
            tuple[j] = v;
        }
        for (std::size_t i = 0; i + 1 < tuple.size(); ++i)
            if (tuple[i] == tuple[i + 1]) return Vec(rep_->module_dim());
        auto it = comps_.find(tuple);
        if (it == comps_.end()) return Vec(rep_->module_dim());
        return sign == 1 ? it->second : vec_scale(Scalar(-1), it->second);
    }

    bool is_zero() const { return comps_.empty(); }

    friend Cochain operator+(const Cochain& a, const Cochain& b) {
        if (a.degree_ != b.degree_) throw Error("cochain: degree mismatch");
        Cochain r(*a.rep_, a.degree_);
        r.comps_ = a.comps_;
        for (const auto& [t, v] : b.comps_) {
            auto it = r.comps_.find(t);
            if (it == r.comps_.end()) {
                r.comps_[t] = v;
            } else {
                it->second = vec_add(it->second, v);
                if (vec_is_zero(it->second)) r.comps_.erase(it);
            }
        }
        return r;
    }
    friend Cochain operator-(const Cochain& a, const Cochain& b) {
        return a + (Scalar(-1) * b);
    }
    friend Cochain operator*(const Scalar& c, const Cochain& x) {
        Cochain r(*x.rep_, x.degree_);
        if (c.is_zero()) return r;
        for (const auto& [t, v] : x.comps_) r.comps_[t] = vec_scale(c, v);
        return r;
    }
    friend bool operator==(const Cochain& a, const Cochain& b) {
        return a.degree_ == b.degree_ && a.comps_ == b.comps_;
    }

    /// Coordinates in the standard basis of C^degree (lexicographic tuples,
    /// module coordinates fastest).
    Vec vectorize() const {
        auto tuples = increasing_tuples(static_cast<int>(rep_->lie().dim()),
                                        static_cast<int>(degree_));
        const std::size_t md = rep_->module_dim();
        Vec out(tuples.size() * md);
        std::size_t ti = 0;
        for (const auto& t : tuples) {
            auto it = comps_.find(t);
            if (it != comps_.end())
                for (std::size_t m = 0; m < md; ++m) out[ti * md + m] = it->second[m];
            ++ti;
        }
        return out;
    }

    static Cochain unvectorize(const Representation& rep, unsigned degree, const Vec& v) {
        auto tuples = increasing_tuples(static_cast<int>(rep.lie().dim()),
                                        static_cast<int>(degree));
        const std::size_t md = rep.module_dim();
        if (v.size() != tuples.size() * md) throw Error("cochain: unvectorize shape");
        Cochain c(rep, degree);
        for (std::size_t ti = 0; ti < tuples.size(); ++ti) {
            Vec val(md);
            bool nz = false;
            for (std::size_t m = 0; m < md; ++m) {
                val[m] = v[ti * md + m];
                nz = nz || !val[m].is_zero();
            }
            if (nz) c.set(tuples[ti], std::move(val));
        }
        return c;
    }

private:
    const Representation* rep_;
    unsigned degree_;
    std::map<std::vector<int>, Vec> comps_;
};

/// Chevalley-Eilenberg coboundary:
///   (dc)(x_0..x_k) = sum_a (-1)^a x_a c(..x^_a..)
///                  + sum_{a<b} (-1)^{a+b} c([x_a,x_b], .. x^_a .. x^_b ..).
inline Cochain ce_coboundary(const Cochain& c) {
    const Representation& rep = c.rep();
    const LieAlgebra& g = rep.lie();
    const unsigned k = c.degree();
    Cochain out(rep, k + 1);
    const bool trivial = rep.is_trivial();
    for (const auto& t : increasing_tuples(static_cast<int>(g.dim()),
                                           static_cast<int>(k) + 1)) {
        Vec val(rep.module_dim());
        for (std::size_t a = 0; a <= k; ++a) {
            std::vector<int> sub;
            sub.reserve(k);
            for (std::size_t x = 0; x <= k; ++x)
                if (x != a) sub.push_back(t[x]);
            if (!trivial) {
                Vec inner = c.eval(sub);
                if (!vec_is_zero(inner)) {
                    Vec acted = rep.act(static_cast<std::size_t>(t[a]), inner);
                    val = (a % 2 == 0) ? vec_add(val, acted) : vec_sub(val, acted);
                }
            }
            for (std::size_t b = a + 1; b <= k; ++b) {
                const Vec& br = g.basis_bracket(static_cast<std::size_t>(t[a]),
                                                static_cast<std::size_t>(t[b]));
                if (vec_is_zero(br)) continue;
                std::vector<int> rest;
                rest.reserve(k - 1);
                for (std::size_t x = 0; x <= k; ++x)
                    if (x != a && x != b) rest.push_back(t[x]);
                const int sgn = ((a + b) % 2 == 0) ? 1 : -1;
                for (std::size_t m = 0; m < g.dim(); ++m) {
                    if (br[m].is_zero()) continue;
                    std::vector<int> arg;
                    arg.reserve(k);
                    arg.push_back(static_cast<int>(m));
                    arg.insert(arg.end(), rest.begin(), rest.end());
                    Vec term = c.eval(arg);
                    if (vec_is_zero(term)) continue;
                    Scalar coef = br[m];
                    if (sgn < 0) coef = -coef;
                    val = vec_add(val, vec_scale(coef, term));
                }
            }
        }
        if (!vec_is_zero(val)) out.set(t, std::move(val));
    }
    return out;
}

/// Matrix of the coboundary C^k -> C^{k+1} in the standard bases.
inline ExactMatrix coboundary_matrix(const Representation& rep, unsigned k) {
    const std::size_t n = rep.lie().dim();
    const std::size_t md = rep.module_dim();
    auto tuples = increasing_tuples(static_cast<int>(n), static_cast<int>(k));
    const std::size_t domain = tuples.size() * md;
    const std::size_t codomain =
        increasing_tuples(static_cast<int>(n), static_cast<int>(k) + 1).size() * md;
    ExactMatrix mat(codomain, domain);
    std::size_t col = 0;
    for (const auto& t : tuples)
        for (std::size_t m = 0; m < md; ++m) {
            Cochain c(rep, k);
            Vec val(md);
            val[m] = Scalar::one();
            c.set(t, std::move(val));
            Vec img = ce_coboundary(c).vectorize();
            for (std::size_t r = 0; r < codomain; ++r) mat.at(r, col) = img[r];
            ++col;
        }
    return mat;
}

struct BettiEntry {
    unsigned degree = 0;
    std::size_t cochain_dim = 0;
    std::size_t kernel_dim = 0;
    std::size_t image_prev_dim = 0;
    std::size_t betti = 0;
    std::vector<Cochain> representatives;  // filled on request
};

/// Betti numbers dim H^k = nullity(delta^k) - rank(delta^{k-1}) for
/// k = 0..max_degree, with optional cocycle representatives (kernel vectors
/// reduced modulo the previous image, greedily chosen, deterministic).
inline std::vector<BettiEntry> betti_table(const Representation& rep,
                                           unsigned max_degree,
                                           bool with_representatives = false) {
    std::vector<BettiEntry> out;
    const std::size_t n = rep.lie().dim();
    ExactMatrix prev;  // delta^{k-1}
    for (unsigned k = 0; k <= max_degree; ++k) {
        BettiEntry e;
        e.degree = k;
        const std::size_t dim_ck =
            increasing_tuples(static_cast<int>(n), static_cast<int>(k)).size() *
            rep.module_dim();
        e.cochain_dim = dim_ck;
        ExactMatrix delta = coboundary_matrix(rep, k);
        std::vector<Vec> kernel = delta.nullspace();
        e.kernel_dim = kernel.size();
        std::size_t rank_prev = (k == 0) ? 0 : prev.rank();
        e.image_prev_dim = rank_prev;
        if (e.kernel_dim < rank_prev) throw Error("betti: negative dimension (internal)");
        e.betti = e.kernel_dim - rank_prev;
        if (with_representatives && e.betti > 0) {
            Subspace image(dim_ck);
            if (k > 0)
                for (std::size_t j = 0; j < prev.cols(); ++j) image.add(prev.col(j));
            for (const auto& z : kernel) {
                if (e.representatives.size() == e.betti) break;
                if (image.add(z))
                    e.representatives.push_back(Cochain::unvectorize(rep, k, z));
            }
        }
        out.push_back(std::move(e));
        prev = std::move(delta);
    }
    return out;
}

/// Wedge/cup of cochains through a bilinear product on values:
///   (c ^ c')(u_1..u_{r+s}) = sum over increasing splits sgn(split)
///                            product(c(u_I), c'(u_J)).
inline Cochain cup_product(
    const Cochain& a, const Cochain& b, const Representation& out_rep,
    const std::function<Vec(const Vec&, const Vec&)>& product) {
    const LieAlgebra& g = a.rep().lie();
    if (&g != &b.rep().lie()) throw Error("cup: different Lie algebras");
    const unsigned r = a.degree(), s = b.degree();
    Cochain out(out_rep, r + s);
    auto splits = increasing_tuples(static_cast<int>(r + s), static_cast<int>(r));
    for (const auto& t : increasing_tuples(static_cast<int>(g.dim()),
                                           static_cast<int>(r + s))) {
        Vec val(out_rep.module_dim());
        for (const auto& I : splits) {
            std::vector<bool> in_i(r + s, false);
            for (int p : I) in_i[static_cast<std::size_t>(p)] = true;
            std::vector<int> ti, tj;
            for (std::size_t x = 0; x < r + s; ++x)
                (in_i[x] ? ti : tj).push_back(t[x]);
            // sign of the shuffle (I then J) as a permutation of 0..r+s-1
            int inv = 0;
            std::vector<int> perm;
            for (int p : I) perm.push_back(p);
            for (std::size_t x = 0; x < r + s; ++x)
                if (!in_i[x]) perm.push_back(static_cast<int>(x));
            for (std::size_t x = 0; x < perm.size(); ++x)
                for (std::size_t y = x + 1; y < perm.size(); ++y)
                    if (perm[x] > perm[y]) ++inv;
            Vec va = a.eval(ti);
            if (vec_is_zero(va)) continue;
            Vec vb = b.eval(tj);
            if (vec_is_zero(vb)) continue;
            Vec pr = product(va, vb);
            if (inv % 2 == 1) pr = vec_scale(Scalar(-1), pr);
            val = vec_add(val, pr);
        }
        if (!vec_is_zero(val)) out.set(t, std::move(val));
    }
    return out;
}

/// Scalar-coefficient cup product (module dimension 1 on both sides).
inline Cochain cup_product(const Cochain& a, const Cochain& b) {
    if (a.rep().module_dim() != 1 || b.rep().module_dim() != 1)
        throw Error("cup: scalar overload requires 1-dimensional coefficients");
    return cup_product(a, b, a.rep(), [](const Vec& x, const Vec& y) {
        return Vec{x[0] * y[0]};
    });
}

/// Residuals of the Maurer-Cartan relation d theta^k = -1/2 c^k_{ij}
/// theta^i ^ theta^j for the dual basis; true entries mean a zero residual.
inline std::vector<bool> maurer_cartan_check(const LieAlgebra& g,
                                             const Representation& trivial_rep) {
    if (trivial_rep.module_dim() != 1 || !trivial_rep.is_trivial())
        throw Error("maurer-cartan: trivial coefficients required");
    std::vector<bool> ok;
    std::vector<Cochain> theta;
    for (std::size_t r = 0; r < g.dim(); ++r) {
        Cochain th(trivial_rep, 1);
        th.set({static_cast<int>(r)}, Vec{Scalar::one()});
        theta.push_back(std::move(th));
    }
    const Scalar half(1, 2);
    for (std::size_t k = 0; k < g.dim(); ++k) {
        Cochain lhs = ce_coboundary(theta[k]);
        Cochain rhs(trivial_rep, 2);
        for (std::size_t i = 0; i < g.dim(); ++i)
            for (std::size_t j = 0; j < g.dim(); ++j) {
                const Scalar& c = g.basis_bracket(i, j)[k];
                if (c.is_zero()) continue;
                rhs = rhs + ((-half * c) * cup_product(theta[i], theta[j]));
            }
        ok.push_back(lhs == rhs);
    }
    return ok;
}

}  // namespace algcalc
