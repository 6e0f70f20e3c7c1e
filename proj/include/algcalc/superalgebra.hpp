#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "combinat.hpp"
#include "matrix.hpp"

namespace algcalc {

/// Finite-dimensional Lie superalgebra over Q(i): basis ordered even part
/// first (indices 0..even_dim-1), then odd. Structure constants must be
/// parity-homogeneous and satisfy graded antisymmetry
///     [x,y] = -(-1)^{[x][y]} [y,x]
/// and the graded Jacobi identity
///     (-1)^{[x][z]}[x,[y,z]] + (-1)^{[y][x]}[y,[z,x]] + (-1)^{[z][y]}[z,[x,y]] = 0,
/// both validated on construction. Note [eps,eps] may be nonzero for odd eps.
class LieSuperalgebra {
public:
    LieSuperalgebra(std::size_t even_dim, std::size_t odd_dim,
                    std::vector<std::string> names,
                    std::vector<std::vector<Vec>> bracket, std::string label = "")
        : even_(even_dim), odd_(odd_dim), names_(std::move(names)),
          bracket_(std::move(bracket)), label_(std::move(label)) {
        const std::size_t n = dim();
        if (names_.size() != n || bracket_.size() != n)
            throw Error("superalgebra: inconsistent dimensions");
        for (const auto& row : bracket_) {
            if (row.size() != n) throw Error("superalgebra: inconsistent bracket table");
            for (const auto& v : row)
                if (v.size() != n) throw Error("superalgebra: inconsistent bracket table");
        }
        validate();
    }

    std::size_t dim() const { return even_ + odd_; }
    std::size_t even_dim() const { return even_; }
    std::size_t odd_dim() const { return odd_; }
    int parity(std::size_t i) const { return i < even_ ? 0 : 1; }
    const std::string& name(std::size_t i) const { return names_[i]; }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& label() const { return label_; }
    const Vec& basis_bracket(std::size_t i, std::size_t j) const { return bracket_[i][j]; }

    Vec basis_element(std::size_t i) const {
        Vec v(dim());
        v[i] = Scalar::one();
        return v;
    }

    Vec brk(const Vec& a, const Vec& b) const {
        const std::size_t n = dim();
        if (a.size() != n || b.size() != n) throw Error("superalgebra: shape mismatch");
        Vec r(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (a[i].is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (b[j].is_zero()) continue;
                const Scalar c = a[i] * b[j];
                for (std::size_t k = 0; k < n; ++k)
                    if (!bracket_[i][j][k].is_zero()) r[k] += c * bracket_[i][j][k];
            }
        }
        return r;
    }

    // ---- constructors ----

    static LieSuperalgebra abelian(std::size_t r, std::size_t s) {
        const std::size_t n = r + s;
        std::vector<std::string> names(n);
        for (std::size_t i = 0; i < r; ++i) names[i] = "e" + std::to_string(i + 1);
        for (std::size_t i = 0; i < s; ++i) names[r + i] = "eps" + std::to_string(i + 1);
        return LieSuperalgebra(r, s, std::move(names),
                               std::vector<std::vector<Vec>>(n, std::vector<Vec>(n, Vec(n))),
                               "sab" + std::to_string(r) + std::to_string(s));
    }

    /// Dimension (1|1): even e, odd eps, [eps,eps] = e, e central.
    static LieSuperalgebra super11() {
        std::vector<std::vector<Vec>> c(2, std::vector<Vec>(2, Vec(2)));
        c[1][1][0] = Scalar::one();
        return LieSuperalgebra(1, 1, {"e", "eps"}, std::move(c), "s11");
    }

    /// gl(n|m): all matrix units on a graded space with n even and m odd
    /// coordinates; even units (diagonal blocks) listed first.
    static LieSuperalgebra gl(std::size_t n, std::size_t m) {
        const std::size_t t = n + m;
        auto blk = [&](std::size_t x) { return x < n ? 0 : 1; };
        std::vector<std::pair<std::size_t, std::size_t>> idx;
        for (std::size_t i = 0; i < t; ++i)
            for (std::size_t j = 0; j < t; ++j)
                if (blk(i) == blk(j)) idx.push_back({i, j});
        const std::size_t even_count = idx.size();
        for (std::size_t i = 0; i < t; ++i)
            for (std::size_t j = 0; j < t; ++j)
                if (blk(i) != blk(j)) idx.push_back({i, j});
        const std::size_t d = idx.size();
        auto find = [&](std::size_t a, std::size_t b) -> std::size_t {
            for (std::size_t k = 0; k < d; ++k)
                if (idx[k].first == a && idx[k].second == b) return k;
            throw Error("gl: lookup failure");
        };
        std::vector<std::string> names(d);
        for (std::size_t k = 0; k < d; ++k)
            names[k] = "E" + std::to_string(idx[k].first + 1) +
                       std::to_string(idx[k].second + 1);
        std::vector<std::vector<Vec>> c(d, std::vector<Vec>(d, Vec(d)));
        for (std::size_t p = 0; p < d; ++p)
            for (std::size_t q = 0; q < d; ++q) {
                auto [a, b] = idx[p];
                auto [cc, dd] = idx[q];
                const int pp = p < even_count ? 0 : 1, pq = q < even_count ? 0 : 1;
                // [E_ab, E_cd] = delta_bc E_ad - (-1)^{[p][q]} delta_da E_cb
                if (b == cc) c[p][q][find(a, dd)] += Scalar::one();
                if (dd == a) {
                    Scalar sgn = (pp == 1 && pq == 1) ? Scalar::one() : Scalar(-1);
                    c[p][q][find(cc, b)] += sgn;
                }
            }
        return LieSuperalgebra(even_count, d - even_count, std::move(names), std::move(c),
                               "gl" + std::to_string(n) + "|" + std::to_string(m));
    }

private:
    void validate() const {
        const std::size_t n = dim();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const int pij = (parity(i) + parity(j)) % 2;
                for (std::size_t k = 0; k < n; ++k)
                    if (!bracket_[i][j][k].is_zero() && parity(k) != pij)
                        throw Error("superalgebra: bracket not parity-homogeneous at (" +
                                    std::to_string(i) + "," + std::to_string(j) + ")");
                // graded antisymmetry
                const Scalar sgn = (parity(i) == 1 && parity(j) == 1) ? Scalar::one()
                                                                      : Scalar(-1);
                Vec anti = vec_sub(bracket_[i][j], vec_scale(sgn, bracket_[j][i]));
                if (!vec_is_zero(anti))
                    throw Error("superalgebra: graded antisymmetry fails at (" +
                                std::to_string(i) + "," + std::to_string(j) + ")");
            }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k) {
                    auto sgn = [&](std::size_t a, std::size_t b) {
                        return (parity(a) == 1 && parity(b) == 1) ? Scalar(-1)
                                                                  : Scalar::one();
                    };
                    Vec s = vec_scale(sgn(i, k), brk(basis_element(i), bracket_[j][k]));
                    s = vec_add(s, vec_scale(sgn(j, i), brk(basis_element(j), bracket_[k][i])));
                    s = vec_add(s, vec_scale(sgn(k, j), brk(basis_element(k), bracket_[i][j])));
                    if (!vec_is_zero(s))
                        throw Error("superalgebra: graded Jacobi fails at (" +
                                    std::to_string(i) + "," + std::to_string(j) + "," +
                                    std::to_string(k) + ")");
                }
    }

    std::size_t even_, odd_;
    std::vector<std::string> names_;
    std::vector<std::vector<Vec>> bracket_;
    std::string label_;
};

/// Graded module over a Lie superalgebra: coordinates ordered even part
/// first. Action matrices must respect parity blocks (even generators
/// preserve coordinate parity, odd generators flip it) and represent the
/// superbracket: rho([x,y]) = rho(x)rho(y) - (-1)^{[x][y]} rho(y)rho(x).
class SuperRepresentation {
public:
    SuperRepresentation(const LieSuperalgebra& g, std::size_t module_even,
                        std::size_t module_odd, std::vector<ExactMatrix> rho)
        : g_(&g), even_(module_even), odd_(module_odd), rho_(std::move(rho)) {
        if (rho_.size() != g.dim())
            throw Error("superrep: wrong number of action matrices");
        for (const auto& m : rho_)
            if (m.rows() != module_dim() || m.cols() != module_dim())
                throw Error("superrep: action matrix shape mismatch");
        validate();
    }

    static SuperRepresentation trivial(const LieSuperalgebra& g,
                                       std::size_t module_even = 1,
                                       std::size_t module_odd = 0) {
        const std::size_t d = module_even + module_odd;
        return SuperRepresentation(g, module_even, module_odd,
                                   std::vector<ExactMatrix>(g.dim(), ExactMatrix(d, d)));
    }

    static SuperRepresentation adjoint(const LieSuperalgebra& g) {
        std::vector<ExactMatrix> rho;
        for (std::size_t i = 0; i < g.dim(); ++i) {
            ExactMatrix m(g.dim(), g.dim());
            for (std::size_t j = 0; j < g.dim(); ++j) {
                const Vec& v = g.basis_bracket(i, j);
                for (std::size_t k = 0; k < g.dim(); ++k) m.at(k, j) = v[k];
            }
            rho.push_back(std::move(m));
        }
        return SuperRepresentation(g, g.even_dim(), g.odd_dim(), std::move(rho));
    }

    const LieSuperalgebra& superalgebra() const { return *g_; }
    std::size_t module_dim() const { return even_ + odd_; }
    std::size_t module_even_dim() const { return even_; }
    std::size_t module_odd_dim() const { return odd_; }
    int coord_parity(std::size_t a) const { return a < even_ ? 0 : 1; }
    const ExactMatrix& action(std::size_t i) const { return rho_[i]; }
    Vec act(std::size_t i, const Vec& v) const { return rho_[i].apply(v); }

    bool is_trivial() const {
        for (const auto& m : rho_)
            if (!m.is_zero()) return false;
        return true;
    }

private:
    void validate() const {
        const std::size_t n = g_->dim(), d = module_dim();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t a = 0; a < d; ++a)
                for (std::size_t b = 0; b < d; ++b)
                    if (!rho_[i].at(a, b).is_zero() &&
                        (coord_parity(a) + coord_parity(b)) % 2 != g_->parity(i))
                        throw Error("superrep: action of generator " + std::to_string(i) +
                                    " violates the parity block structure");
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) {
                ExactMatrix lhs(d, d);
                const Vec& br = g_->basis_bracket(i, j);
                for (std::size_t k = 0; k < n; ++k)
                    if (!br[k].is_zero()) lhs = lhs + br[k] * rho_[k];
                const Scalar sgn = (g_->parity(i) == 1 && g_->parity(j) == 1)
                                       ? Scalar::one()
                                       : Scalar(-1);
                ExactMatrix rhs = rho_[i] * rho_[j] + sgn * (rho_[j] * rho_[i]);
                if (!(lhs == rhs))
                    throw Error("superrep: superbracket compatibility fails at (" +
                                std::to_string(i) + "," + std::to_string(j) + ")");
            }
    }

    const LieSuperalgebra* g_;
    std::size_t even_, odd_;
    std::vector<ExactMatrix> rho_;
};

/// Canonical index tuples for graded-alternating k-cochains: sorted
/// ascending, so the even indices (strictly increasing — a repeat would force
/// the component to vanish) precede the odd ones (weakly increasing —
/// symmetric slots). Lexicographic order.
inline std::vector<std::vector<int>> super_tuples(std::size_t even_dim,
                                                  std::size_t odd_dim, unsigned k) {
    std::vector<std::vector<int>> out;
    for (unsigned a = 0; a <= k; ++a) {
        if (a > even_dim) break;
        auto evens = increasing_tuples(static_cast<int>(even_dim), static_cast<int>(a));
        auto odds = weakly_increasing_tuples(static_cast<int>(odd_dim),
                                             static_cast<int>(k - a));
        for (const auto& e : evens)
            for (const auto& o : odds) {
                std::vector<int> t = e;
                for (int x : o) t.push_back(x + static_cast<int>(even_dim));
                out.push_back(std::move(t));
            }
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Graded-alternating k-cochain with values in a graded module:
///   c(..., x, y, ...) = -(-1)^{[x][y]} c(..., y, x, ...).
/// Components are stored on canonical tuples (see super_tuples).
class SuperCochain {
public:
    SuperCochain(const SuperRepresentation& rep, unsigned degree)
        : rep_(&rep), degree_(degree) {}

    const SuperRepresentation& rep() const { return *rep_; }
    unsigned degree() const { return degree_; }
    const std::map<std::vector<int>, Vec>& components() const { return comps_; }

    void set(std::vector<int> tuple, Vec value) {
        if (tuple.size() != degree_) throw Error("supercochain: tuple arity mismatch");
        const LieSuperalgebra& g = rep_->superalgebra();
        for (std::size_t i = 0; i + 1 < tuple.size(); ++i) {
            if (tuple[i] > tuple[i + 1])
                throw Error("supercochain: tuple not sorted");
            if (tuple[i] == tuple[i + 1] &&
                g.parity(static_cast<std::size_t>(tuple[i])) == 0)
                throw Error("supercochain: repeated even index");
        }
        for (int x : tuple)
            if (x < 0 || static_cast<std::size_t>(x) >= g.dim())
                throw Error("supercochain: index out of range");
        if (value.size() != rep_->module_dim()) throw Error("supercochain: value shape");
        if (vec_is_zero(value))
            comps_.erase(tuple);
        else
            comps_[std::move(tuple)] = std::move(value);
    }

    /// Graded-alternating evaluation on an arbitrary index tuple: sorting two
    /// adjacent arguments contributes +1 when both are odd and -1 otherwise;
    /// a repeated even index gives zero.
    Vec eval(std::vector<int> tuple) const {
        if (tuple.size() != degree_) throw Error("supercochain: tuple arity mismatch");
        const LieSuperalgebra& g = rep_->superalgebra();
        int sign = 1;
        for (std::size_t i = 1; i < tuple.size(); ++i) {
            int v = tuple[i];
            std::size_t j = i;
            while (j > 0 && tuple[j - 1] > v) {
                const bool both_odd =
                    g.parity(static_cast<std::size_t>(tuple[j - 1])) == 1 &&
                    g.parity(static_cast<std::size_t>(v)) == 1;
                if (!both_odd) sign = -sign;
                tuple[j] = tuple[j - 1];
                --j;
            }
            tuple[j] = v;
        }
        for (std::size_t i = 0; i + 1 < tuple.size(); ++i)
            if (tuple[i] == tuple[i + 1] &&
                g.parity(static_cast<std::size_t>(tuple[i])) == 0)
                return Vec(rep_->module_dim());
        auto it = comps_.find(tuple);
        if (it == comps_.end()) return Vec(rep_->module_dim());
        return sign == 1 ? it->second : vec_scale(Scalar(-1), it->second);
    }

    bool is_zero() const { return comps_.empty(); }

    friend SuperCochain operator+(const SuperCochain& a, const SuperCochain& b) {
        if (a.degree_ != b.degree_) throw Error("supercochain: degree mismatch");
        SuperCochain r(*a.rep_, a.degree_);
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
    friend SuperCochain operator*(const Scalar& c, const SuperCochain& x) {
        SuperCochain r(*x.rep_, x.degree_);
        if (c.is_zero()) return r;
        for (const auto& [t, v] : x.comps_) r.comps_[t] = vec_scale(c, v);
        return r;
    }
    friend SuperCochain operator-(const SuperCochain& a, const SuperCochain& b) {
        return a + (Scalar(-1) * b);
    }
    friend bool operator==(const SuperCochain& a, const SuperCochain& b) {
        return a.degree_ == b.degree_ && a.comps_ == b.comps_;
    }

    Vec vectorize() const {
        const LieSuperalgebra& g = rep_->superalgebra();
        auto tuples = super_tuples(g.even_dim(), g.odd_dim(), degree_);
        const std::size_t md = rep_->module_dim();
        Vec out(tuples.size() * md);
        for (std::size_t ti = 0; ti < tuples.size(); ++ti) {
            auto it = comps_.find(tuples[ti]);
            if (it != comps_.end())
                for (std::size_t m = 0; m < md; ++m) out[ti * md + m] = it->second[m];
        }
        return out;
    }

    static SuperCochain unvectorize(const SuperRepresentation& rep, unsigned degree,
                                    const Vec& v) {
        const LieSuperalgebra& g = rep.superalgebra();
        auto tuples = super_tuples(g.even_dim(), g.odd_dim(), degree);
        const std::size_t md = rep.module_dim();
        if (v.size() != tuples.size() * md) throw Error("supercochain: unvectorize shape");
        SuperCochain c(rep, degree);
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
    const SuperRepresentation* rep_;
    unsigned degree_;
    std::map<std::vector<int>, Vec> comps_;
};

/// Graded Chevalley-Eilenberg coboundary. For a cochain of homogeneous map
/// parity [c] (value parity plus the number of odd slots, mod 2):
///
///   (dc)(x_0..x_k) = sum_r (-1)^{r + [x_r]([c]+[x_0]+..+[x_{r-1}])}
///                        x_r c(..x^_r..)
///                  + sum_{r<s} (-1)^{s + [x_s]([x_{r+1}]+..+[x_{s-1}])}
///                        c(x_0,..,x_{r-1},[x_r,x_s],x_{r+1},..,x^_s,..,x_k).
///
/// A general cochain is split into its homogeneous parts first. On a purely
/// even algebra this reduces to the classical alternating-sum formula, and
/// d∘d = 0 for every accepted superalgebra.
inline SuperCochain super_ce_coboundary(const SuperCochain& c) {
    const SuperRepresentation& rep = c.rep();
    const LieSuperalgebra& g = rep.superalgebra();
    const unsigned k = c.degree();

    // split into map-parity-homogeneous parts
    SuperCochain part[2] = {SuperCochain(rep, k), SuperCochain(rep, k)};
    for (const auto& [t, v] : c.components()) {
        int odd_slots = 0;
        for (int x : t) odd_slots += g.parity(static_cast<std::size_t>(x));
        Vec val[2] = {Vec(rep.module_dim()), Vec(rep.module_dim())};
        bool nz[2] = {false, false};
        for (std::size_t m = 0; m < rep.module_dim(); ++m) {
            if (v[m].is_zero()) continue;
            const int pi = (rep.coord_parity(m) + odd_slots) % 2;
            val[pi][m] = v[m];
            nz[pi] = true;
        }
        for (int pi = 0; pi < 2; ++pi)
            if (nz[pi]) part[pi].set(t, std::move(val[pi]));
    }

    SuperCochain out(rep, k + 1);
    const bool trivial = rep.is_trivial();
    for (const auto& t : super_tuples(g.even_dim(), g.odd_dim(), k + 1)) {
        Vec total(rep.module_dim());
        for (int cp = 0; cp < 2; ++cp) {
            const SuperCochain& cpart = part[cp];
            if (cpart.is_zero()) continue;
            for (std::size_t r = 0; r <= k; ++r) {
                const int pr = g.parity(static_cast<std::size_t>(t[r]));
                if (!trivial) {
                    std::vector<int> sub;
                    sub.reserve(k);
                    for (std::size_t x = 0; x <= k; ++x)
                        if (x != r) sub.push_back(t[x]);
                    Vec inner = cpart.eval(sub);
                    if (!vec_is_zero(inner)) {
                        int prefix = cp;
                        for (std::size_t x = 0; x < r; ++x)
                            prefix += g.parity(static_cast<std::size_t>(t[x]));
                        int sgn = (static_cast<int>(r) + pr * prefix) % 2;
                        Vec acted = rep.act(static_cast<std::size_t>(t[r]), inner);
                        total = (sgn == 0) ? vec_add(total, acted) : vec_sub(total, acted);
                    }
                }
                for (std::size_t s = r + 1; s <= k; ++s) {
                    const Vec& br = g.basis_bracket(static_cast<std::size_t>(t[r]),
                                                    static_cast<std::size_t>(t[s]));
                    if (vec_is_zero(br)) continue;
                    int between = 0;
                    for (std::size_t x = r + 1; x < s; ++x)
                        between += g.parity(static_cast<std::size_t>(t[x]));
                    const int ps = g.parity(static_cast<std::size_t>(t[s]));
                    const int sgn = (static_cast<int>(s) + ps * between) % 2;
                    for (std::size_t m = 0; m < g.dim(); ++m) {
                        if (br[m].is_zero()) continue;
                        std::vector<int> arg;
                        arg.reserve(k);
                        for (std::size_t x = 0; x <= k; ++x) {
                            if (x == s) continue;
                            arg.push_back(x == r ? static_cast<int>(m) : t[x]);
                        }
                        Vec term = cpart.eval(arg);
                        if (vec_is_zero(term)) continue;
                        Scalar coef = br[m];
                        if (sgn == 1) coef = -coef;
                        total = vec_add(total, vec_scale(coef, term));
                    }
                }
            }
        }
        if (!vec_is_zero(total)) out.set(t, std::move(total));
    }
    return out;
}

/// Matrix of the graded coboundary in the canonical tuple bases.
inline ExactMatrix super_coboundary_matrix(const SuperRepresentation& rep, unsigned k) {
    const LieSuperalgebra& g = rep.superalgebra();
    const std::size_t md = rep.module_dim();
    auto tuples = super_tuples(g.even_dim(), g.odd_dim(), k);
    const std::size_t domain = tuples.size() * md;
    const std::size_t codomain =
        super_tuples(g.even_dim(), g.odd_dim(), k + 1).size() * md;
    ExactMatrix mat(codomain, domain);
    std::size_t col = 0;
    for (const auto& t : tuples)
        for (std::size_t m = 0; m < md; ++m) {
            SuperCochain c(rep, k);
            Vec val(md);
            val[m] = Scalar::one();
            c.set(t, std::move(val));
            Vec img = super_ce_coboundary(c).vectorize();
            for (std::size_t r = 0; r < codomain; ++r) mat.at(r, col) = img[r];
            ++col;
        }
    return mat;
}

struct SuperBettiEntry {
    unsigned degree = 0;
    std::size_t cochain_dim = 0;
    std::size_t kernel_dim = 0;
    std::size_t image_prev_dim = 0;
    std::size_t betti = 0;
};

inline std::vector<SuperBettiEntry> super_betti_table(const SuperRepresentation& rep,
                                                      unsigned max_degree) {
    std::vector<SuperBettiEntry> out;
    const LieSuperalgebra& g = rep.superalgebra();
    ExactMatrix prev;
    for (unsigned k = 0; k <= max_degree; ++k) {
        SuperBettiEntry e;
        e.degree = k;
        e.cochain_dim =
            super_tuples(g.even_dim(), g.odd_dim(), k).size() * rep.module_dim();
        ExactMatrix delta = super_coboundary_matrix(rep, k);
        e.kernel_dim = delta.nullspace().size();
        e.image_prev_dim = (k == 0) ? 0 : prev.rank();
        if (e.kernel_dim < e.image_prev_dim)
            throw Error("super betti: negative dimension (internal)");
        e.betti = e.kernel_dim - e.image_prev_dim;
        out.push_back(e);
        prev = std::move(delta);
    }
    return out;
}

}  // namespace algcalc
