#include "autlin/charlab.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "autlin/planeaut.hpp"
#include "json.hpp"

namespace autlin {

namespace {

// ---------------------------------------------------------------------------
// small exact linear algebra

int rank_mpq(std::vector<std::vector<mpq_class>> m) {
    if (m.empty()) return 0;
    std::size_t rows = m.size(), cols = m[0].size();
    int rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t piv = row;
        while (piv < rows && m[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[row]);
        for (std::size_t i = row + 1; i < rows; ++i) {
            if (m[i][col] == 0) continue;
            mpq_class f = m[i][col] / m[row][col];
            for (std::size_t j = col; j < cols; ++j) m[i][j] -= f * m[row][j];
        }
        ++row;
        ++rank;
    }
    return rank;
}

// Integer kernel lattice of M (rows x cols): returns a basis of
// { k : k^T M = 0 } by tracking unimodular row operations.
std::vector<std::vector<mpz_class>> kernel_lattice(std::vector<std::vector<mpz_class>> m) {
    std::size_t rows = m.size();
    if (rows == 0) return {};
    std::size_t cols = m[0].size();
    std::vector<std::vector<mpz_class>> u(rows, std::vector<mpz_class>(rows, 0));
    for (std::size_t i = 0; i < rows; ++i) u[i][i] = 1;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        // euclid the column below `row` to a single nonzero entry
        for (;;) {
            std::size_t piv = rows;
            for (std::size_t i = row; i < rows; ++i)
                if (m[i][col] != 0 && (piv == rows || abs(m[i][col]) < abs(m[piv][col]))) piv = i;
            if (piv == rows) break;
            std::swap(m[piv], m[row]);
            std::swap(u[piv], u[row]);
            bool done = true;
            for (std::size_t i = row + 1; i < rows; ++i) {
                if (m[i][col] == 0) continue;
                mpz_class q = m[i][col] / m[row][col]; // truncated division is fine here
                for (std::size_t j = 0; j < cols; ++j) m[i][j] -= q * m[row][j];
                for (std::size_t j = 0; j < rows; ++j) u[i][j] -= q * u[row][j];
                if (m[i][col] != 0) done = false;
            }
            if (done) break;
        }
        if (m[row][col] != 0) ++row;
    }
    std::vector<std::vector<mpz_class>> kernel;
    for (std::size_t i = row; i < rows; ++i) kernel.push_back(u[i]);
    return kernel;
}

// ---------------------------------------------------------------------------
// univariate helpers over a field (dense coefficient vectors)

std::vector<Scalar> to_dense(const Polynomial& p) {
    const Field& F = *p.ring()->field;
    long d = std::max(p.degree(), 0L);
    std::vector<Scalar> c(std::size_t(d + 1), F.zero());
    for (const auto& [m, a] : p.terms()) c[m[0]] = a;
    return c;
}

std::optional<Polynomial> univar_divide(const Polynomial& p, const Polynomial& b) {
    const Field& F = *p.ring()->field;
    RingPtr ring = p.ring();
    if (p.is_zero()) return Polynomial(ring);
    long dp = p.degree(), db = b.degree();
    if (db < 0 || dp < db) return std::nullopt;
    std::vector<Scalar> r = to_dense(p), d = to_dense(b);
    std::vector<Scalar> q(std::size_t(dp - db + 1), F.zero());
    for (long i = dp - db; i >= 0; --i) {
        Scalar c = F.div(r[std::size_t(i + db)], d[std::size_t(db)]);
        q[std::size_t(i)] = c;
        for (long j = 0; j <= db; ++j)
            r[std::size_t(i + j)] = F.sub(r[std::size_t(i + j)], F.mul(c, d[std::size_t(j)]));
    }
    for (const auto& c : r)
        if (!F.is_zero(c)) return std::nullopt;
    Polynomial quot(ring);
    for (std::size_t i = 0; i < q.size(); ++i) quot.add_term({std::uint32_t(i)}, q[i]);
    return quot;
}

// gcd-free (pairwise coprime) basis of monic univariate polynomials
std::vector<Polynomial> coprime_basis_poly(std::vector<Polynomial> work) {
    std::vector<Polynomial> basis;
    while (!work.empty()) {
        Polynomial x = work.back();
        work.pop_back();
        if (x.degree() < 1) continue;
        bool placed = true;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            Polynomial g = gcd_univariate(x, basis[i], 0);
            if (g.degree() < 1) continue;
            placed = false;
            if (g == basis[i]) {
                work.push_back(*univar_divide(x, basis[i]));
            } else {
                Polynomial rest = *univar_divide(basis[i], g);
                basis.erase(basis.begin() + long(i));
                work.push_back(g);
                work.push_back(rest);
                work.push_back(x);
            }
            break;
        }
        if (placed) basis.push_back(x);
    }
    std::sort(basis.begin(), basis.end(), [](const Polynomial& a, const Polynomial& b) {
        return a.to_string() < b.to_string();
    });
    return basis;
}

std::vector<mpz_class> coprime_basis_int(std::vector<mpz_class> work) {
    std::vector<mpz_class> basis;
    while (!work.empty()) {
        mpz_class x = work.back();
        work.pop_back();
        x = abs(x);
        if (x <= 1) continue;
        bool placed = true;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            mpz_class g = gcd(x, basis[i]);
            if (g == 1) continue;
            placed = false;
            if (g == basis[i]) {
                work.push_back(x / basis[i]);
            } else {
                mpz_class rest = basis[i] / g;
                basis.erase(basis.begin() + long(i));
                work.push_back(g);
                work.push_back(rest);
                work.push_back(x);
            }
            break;
        }
        if (placed) basis.push_back(x);
    }
    std::sort(basis.begin(), basis.end());
    return basis;
}

long divisibility_count(Polynomial p, const Polynomial& b) {
    long n = 0;
    for (;;) {
        auto q = univar_divide(p, b);
        if (!q) return n;
        p = *q;
        ++n;
    }
}

long divisibility_count_int(mpz_class x, const mpz_class& b) {
    long n = 0;
    x = abs(x);
    while (x % b == 0) {
        x /= b;
        ++n;
    }
    return n;
}

mpq_class scalar_to_mpq(const Field& F, const Scalar& s) {
    require(F.kind() == FieldKind::Rationals, Err::ScopeExceeded, "rational scalar expected");
    return s.rat();
}

Frac frac_pow_vec(const std::vector<Frac>& base, const std::vector<long>& exps) {
    Frac acc = Frac::of(Polynomial::from_int(base[0].num.ring(), 1));
    for (std::size_t i = 0; i < base.size(); ++i)
        if (exps[i]) acc = acc * base[i].pow(exps[i]);
    return acc;
}

} // namespace

// ---------------------------------------------------------------------------
// LatticeSubgroup

LatticeSubgroup::LatticeSubgroup(RingPtr ring, std::vector<Frac> gens)
    : ring_(std::move(ring)), gens_(std::move(gens)) {
    require(ring_->field->kind() == FieldKind::Rationals, Err::ScopeExceeded,
            "v1 lattice subgroups live over Q(t1..tm)");
    require(!gens_.empty(), Err::DomainError, "need at least one generator");
    for (const auto& f : gens_) {
        require(f.num.ring()->same(*ring_), Err::MismatchedContext, "generator ring mismatch");
        require(!f.is_zero(), Err::DomainError, "generators must be nonzero");
    }
    try {
        build_profile();
    } catch (const Error& e) {
        if (e.code() != Err::ScopeExceeded) throw;
        profile_error_ = e.what();
    }
}

LatticeSubgroup LatticeSubgroup::of_rationals(const std::vector<mpq_class>& values) {
    RingPtr ring = PolyRing::make(Field::rationals(), {"t"});
    std::vector<Frac> gens;
    for (const auto& v : values)
        gens.push_back(Frac::of(Polynomial::constant(ring, Field::rationals()->from_mpq(v))));
    return LatticeSubgroup(ring, std::move(gens));
}

std::string LatticeSubgroup::to_string() const {
    std::string s = "<";
    for (std::size_t i = 0; i < gens_.size(); ++i) s += (i ? ", " : "") + gens_[i].to_string();
    return s + ">";
}

const LatticeSubgroup::Profile& LatticeSubgroup::profile() const {
    require(profile_.has_value(), Err::ScopeExceeded, profile_error_);
    return *profile_;
}

void LatticeSubgroup::build_profile() {
    const Field& F = *ring_->field;
    for (const auto& g : gens_)
        require(nvars() <= 1 || (g.num.is_constant() && g.den.is_constant()), Err::ScopeExceeded,
                "exponent profiles are built for at most one variable in v1");

    Profile pr;
    struct Split {
        mpq_class unit;
        Polynomial num_monic, den_monic;
    };
    std::vector<Split> splits;
    std::vector<Polynomial> poly_pool;
    std::vector<mpz_class> int_pool;
    for (const auto& g : gens_) {
        Scalar lcn = g.num.leading_term().second, lcd = g.den.leading_term().second;
        mpq_class unit = scalar_to_mpq(F, lcn) / scalar_to_mpq(F, lcd);
        Polynomial nm = g.num.scaled(F.inv(lcn)), dm = g.den.scaled(F.inv(lcd));
        if (nm.degree() > 0) poly_pool.push_back(nm);
        if (dm.degree() > 0) poly_pool.push_back(dm);
        int_pool.push_back(unit.get_num());
        int_pool.push_back(unit.get_den());
        splits.push_back({unit, nm, dm});
    }
    pr.poly_basis = coprime_basis_poly(poly_pool);
    pr.int_basis = coprime_basis_int(int_pool);
    for (const auto& sp : splits) {
        std::vector<long> row;
        for (const auto& b : pr.poly_basis)
            row.push_back(divisibility_count(sp.num_monic, b) -
                          divisibility_count(sp.den_monic, b));
        for (const auto& b : pr.int_basis)
            row.push_back(divisibility_count_int(sp.unit.get_num(), b) -
                          divisibility_count_int(sp.unit.get_den(), b));
        pr.exponents.push_back(std::move(row));
        pr.sign.push_back(sgn(sp.unit) < 0 ? 1 : 0);
    }
    profile_ = std::move(pr);
}

// ---------------------------------------------------------------------------

int rank(const LatticeSubgroup& g) {
    const auto& pr = g.profile();
    std::vector<std::vector<mpq_class>> m;
    for (const auto& row : pr.exponents) {
        std::vector<mpq_class> r;
        for (long e : row) r.emplace_back(e);
        m.push_back(std::move(r));
    }
    if (m.empty() || m[0].empty()) return 0;
    return rank_mpq(std::move(m));
}

int trdeg(const LatticeSubgroup& g, std::uint64_t seed) {
    std::size_t m = g.nvars();
    if (m == 0) return 0;
    const Field& F = *g.ring()->field;
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    auto rnd_point = [&]() {
        std::vector<Scalar> pt;
        for (std::size_t j = 0; j < m; ++j) {
            long num = long(std::uniform_int_distribution<int>(-40, 40)(rng));
            long den = long(std::uniform_int_distribution<int>(1, 7)(rng));
            pt.push_back(F.from_mpq(mpq_class(num, den)));
        }
        return pt;
    };
    // d(num/den)/dt_j numerator: num_j' den - num den_j'; row scaling drops den^2
    int best = -1, confirmations = 0, valid = 0;
    for (int attempt = 0; attempt < 24 && valid < 6; ++attempt) {
        std::vector<Scalar> pt = rnd_point();
        bool ok = true;
        std::vector<std::vector<mpq_class>> jac;
        for (const auto& gen : g.generators()) {
            Scalar dv = gen.den.eval(pt);
            if (F.is_zero(dv)) {
                ok = false;
                break;
            }
            std::vector<mpq_class> row;
            for (std::size_t j = 0; j < m; ++j) {
                Polynomial numer = gen.num.derivative(j) * gen.den - gen.num * gen.den.derivative(j);
                row.push_back(scalar_to_mpq(F, numer.eval(pt)));
            }
            jac.push_back(std::move(row));
        }
        if (!ok) continue;
        ++valid;
        int r = rank_mpq(std::move(jac));
        if (r > best) {
            best = r;
            confirmations = 1;
        } else if (r == best) {
            ++confirmations;
        }
        if (best == int(std::min(m, g.arity())) && confirmations >= 2) break;
    }
    require(valid >= 2, Err::SampleDegenerate, "could not find two nondegenerate sample points");
    return best;
}

ClassifyReport classify(const LatticeSubgroup& g, std::uint64_t seed) {
    std::size_t n = g.arity();
    require(n <= 12, Err::ScopeExceeded, "classify enumerates generator subsets; 12 max");
    // rank >= trdeg is asserted on the full group and on every subset
    for (std::size_t size = 1; size <= n; ++size) {
        for (std::uint64_t mask = 1; mask < (1ULL << n); ++mask) {
            if (std::uint64_t(__builtin_popcountll(mask)) != size) continue;
            std::vector<Frac> sub;
            std::vector<std::size_t> idx;
            for (std::size_t i = 0; i < n; ++i)
                if (mask & (1ULL << i)) {
                    sub.push_back(g.generators()[i]);
                    idx.push_back(i);
                }
            LatticeSubgroup sg(g.ring(), std::move(sub));
            int rk = rank(sg), td = trdeg(sg, seed + mask);
            require(rk >= td, Err::DomainError, "rank < trdeg; sampling failure");
            if (rk > td) return ClassifyReport{GoodBad::Bad, idx, rk, td};
        }
    }
    return ClassifyReport{GoodBad::Good, {}, 0, 0};
}

namespace {

// Z-span of vectors equals Z^r?
bool spans_full_lattice(std::vector<std::vector<mpz_class>> vecs, std::size_t r) {
    if (vecs.empty()) return r == 0;
    // column HNF via the kernel helper: rank + determinant of the row lattice
    std::size_t rows = vecs.size();
    // gaussian elimination over Z (row echelon with gcd pivots)
    std::size_t row = 0;
    mpz_class det = 1;
    for (std::size_t col = 0; col < r && row < rows; ++col) {
        for (;;) {
            std::size_t piv = rows;
            for (std::size_t i = row; i < rows; ++i)
                if (vecs[i][col] != 0 && (piv == rows || abs(vecs[i][col]) < abs(vecs[piv][col])))
                    piv = i;
            if (piv == rows) break;
            std::swap(vecs[piv], vecs[row]);
            bool done = true;
            for (std::size_t i = row + 1; i < rows; ++i) {
                if (vecs[i][col] == 0) continue;
                mpz_class q = vecs[i][col] / vecs[row][col];
                for (std::size_t j = 0; j < r; ++j) vecs[i][j] -= q * vecs[row][j];
                if (vecs[i][col] != 0) done = false;
            }
            if (done) break;
        }
        if (vecs[row][col] == 0) return false; // rank deficit
        det *= vecs[row][col];
        ++row;
    }
    if (row < r) return false;
    return det == 1 || det == -1;
}

} // namespace

namespace {
Polynomial relation_candidate(const LatticeSubgroup& g, int n);
} // namespace

LatticeSubgroup minimally_bad(const LatticeSubgroup& g, std::uint64_t seed) {
    ClassifyReport cr = classify(g, seed);
    require(cr.result == GoodBad::Bad, Err::NotBad, "subgroup is good");
    std::vector<Frac> sub;
    for (std::size_t i : cr.bad_subset) sub.push_back(g.generators()[i]);

    for (int round = 0; round < 4; ++round) {
        // greedy multiplicative basis inside the subset
        std::vector<Frac> basis;
        {
            LatticeSubgroup whole(g.ring(), sub);
            int target = rank(whole);
            for (const auto& cand : sub) {
                if (int(basis.size()) == target) break;
                std::vector<Frac> trial = basis;
                trial.push_back(cand);
                if (rank(LatticeSubgroup(g.ring(), trial)) > int(basis.size()))
                    basis = std::move(trial);
            }
        }
        LatticeSubgroup lam(g.ring(), basis);
        int rk = rank(lam), td = trdeg(lam, seed + 17);
        require(rk == td + 1, Err::ScopeExceeded,
                "extracted subgroup has rank != 1 + trdeg; outside v1 shape");
        // X(Lambda) is spanned by the support differences of any generator of I_1
        Polynomial p1 = relation_candidate(lam, 1);
        std::vector<long> anchor;
        std::vector<std::vector<mpz_class>> diffs;
        std::vector<std::vector<long>> offsets;
        for (const auto& [mono, c] : p1.terms()) {
            std::vector<long> v;
            for (std::size_t j = 0; j < std::size_t(rk); ++j) v.push_back(long(mono[j]));
            if (anchor.empty()) {
                anchor = v;
                continue;
            }
            std::vector<mpz_class> dz;
            std::vector<long> dl;
            for (std::size_t j = 0; j < std::size_t(rk); ++j) {
                dz.emplace_back(v[j] - anchor[j]);
                dl.push_back(v[j] - anchor[j]);
            }
            diffs.push_back(std::move(dz));
            offsets.push_back(std::move(dl));
        }
        if (spans_full_lattice(diffs, std::size_t(rk))) return lam;
        // saturate: replace the generators by x^(alpha - alpha0), alpha in Supp P_1
        std::vector<Frac> next;
        for (const auto& off : offsets) next.push_back(frac_pow_vec(basis, off));
        sub = std::move(next);
    }
    fail(Err::ScopeExceeded, "support-lattice saturation did not stabilize");
}

// ---------------------------------------------------------------------------
// relation ideals

namespace {

Frac frac_eval_poly(const Polynomial& P, const std::vector<Frac>& point) {
    RingPtr tring = point[0].num.ring();
    const Field& F = *tring->field;
    Frac acc = Frac::of(Polynomial(tring));
    for (const auto& [mono, c] : P.terms()) {
        Frac term = Frac::of(Polynomial::constant(tring, c));
        for (std::size_t j = 0; j < point.size(); ++j)
            if (mono[j]) term = term * point[j].pow(mono[j]);
        acc = acc + term;
    }
    (void)F;
    return acc;
}

// normalize a polynomial with nonnegative support: shift support to the
// minimal corner, require a term there, scale it to 1
Polynomial normalize_relation(Polynomial P) {
    RingPtr ring = P.ring();
    const Field& F = *ring->field;
    require(!P.is_zero(), Err::EliminationFailed, "zero relation candidate");
    std::size_t nv = ring->nvars();
    Mono mins(nv, 0);
    bool first = true;
    for (const auto& [m, c] : P.terms()) {
        for (std::size_t j = 0; j < nv; ++j) mins[j] = first ? m[j] : std::min(mins[j], m[j]);
        first = false;
    }
    Polynomial shifted(ring);
    for (const auto& [m, c] : P.terms()) {
        Mono m2 = m;
        for (std::size_t j = 0; j < nv; ++j) m2[j] -= mins[j];
        shifted.add_term(m2, c);
    }
    Scalar a0 = shifted.coeff(Mono(nv, 0));
    require(!F.is_zero(a0), Err::EliminationFailed,
            "relation has no vertex at the minimal corner; cannot normalize");
    return shifted.scaled(F.inv(a0));
}

// squarefree part with respect to x1, computed over the field Q(x2)
Polynomial squarefree_bivariate(const Polynomial& P) {
    RingPtr ring = P.ring(); // Q[x1, x2]
    if (P.degree_in(0) == 0 || P.degree_in(1) == 0) {
        // univariate content-free case: plain univariate squarefree
        std::size_t var = P.degree_in(0) == 0 ? 1 : 0;
        Polynomial d = P.derivative(var);
        if (d.is_zero()) return P;
        Polynomial gg = gcd_univariate(P, d, var);
        if (gg.degree() < 1) return P;
        return P.exact_div(gg);
    }
    FieldPtr qx2 = Field::rational_functions(Field::rationals(), {"x2"});
    RingPtr s_ring = PolyRing::make(qx2, {"x1"});
    RingPtr x2ring = PolyRing::make(Field::rationals(), {"x2"});
    auto lift = [&](const Polynomial& p) {
        Polynomial out(s_ring);
        for (const auto& [m, c] : p.terms()) {
            Polynomial x2part = Polynomial::monomial(x2ring, {m[1]}, c);
            out.add_term({m[0]}, qx2->from_frac(x2part, Polynomial::from_int(x2ring, 1)));
        }
        return out;
    };
    Polynomial ps = lift(P);
    Polynomial dps = ps.derivative(0);
    Polynomial gg = gcd_univariate(ps, dps, 0);
    Polynomial sf = gg.degree() < 1 ? ps : ps.exact_div(gg);
    // clear the Q(x2) denominators and drop back to Q[x1, x2]
    Polynomial lcm_den = Polynomial::from_int(x2ring, 1);
    for (const auto& [m, c] : sf.terms()) {
        const Polynomial& den = c.frac().den;
        Polynomial g2 = gcd_univariate(lcm_den, den, 0);
        lcm_den = lcm_den * den;
        if (g2.degree() >= 1) lcm_den = lcm_den.exact_div(g2);
    }
    Polynomial out(ring);
    for (const auto& [m, c] : sf.terms()) {
        Polynomial num = c.frac().num * lcm_den.exact_div(c.frac().den);
        for (const auto& [m2, c2] : num.terms()) out.add_term({m[0], m2[0]}, c2);
    }
    return out;
}

// remove factors living in only one of the two variables
Polynomial remove_univariate_content(Polynomial P) {
    RingPtr ring = P.ring();
    for (std::size_t var : {std::size_t(0), std::size_t(1)}) {
        std::size_t other = 1 - var;
        if (P.degree_in(var) == 0) continue;
        // content = gcd of the coefficients of powers of `var` (polys in `other`)
        Polynomial content(ring);
        for (long k = 0; k <= P.degree_in(var); ++k) {
            Polynomial ck = P.coeff_of(var, std::uint32_t(k));
            if (ck.is_zero()) continue;
            content = content.is_zero() ? ck : gcd_univariate(content, ck, other);
            if (content.degree() < 1) break;
        }
        if (content.degree() >= 1) P = P.exact_div(content);
    }
    return P;
}

} // namespace

namespace {

// cleaned generator of I_n up to a Laurent unit: content/squarefree reduced and
// vanishing at the character point, but not yet in normalized position
Polynomial relation_candidate(const LatticeSubgroup& g, int n) {
    require(n >= 1, Err::DomainError, "n must be positive");
    const Field& F = *g.ring()->field;
    int r = rank(g);
    require(r >= 1 && r <= 2, Err::ScopeExceeded, "relation_gen handles rank 1 and 2 in v1");
    require(int(g.arity()) == r, Err::ScopeExceeded,
            "relation_gen expects a basis (independent generators)");
    require(g.nvars() <= 1 || r == 1, Err::ScopeExceeded, "relation_gen: at most one variable");

    if (r == 1) {
        const Frac& lam = g.generators()[0];
        require(lam.num.is_constant() && lam.den.is_constant(), Err::ScopeExceeded,
                "rank-1 relation needs a constant generator (trdeg 0)");
        mpq_class v = scalar_to_mpq(F, lam.num.constant_value()) /
                      scalar_to_mpq(F, lam.den.constant_value());
        mpq_class vn(1);
        for (int i = 0; i < n; ++i) vn *= v;
        RingPtr xring = PolyRing::make(Field::rationals(), {"x"});
        Polynomial P = Polynomial::from_int(xring, 1) -
                       Polynomial::monomial(xring, {1}, F.from_mpq(mpq_class(1) / vn));
        Frac check =
            frac_eval_poly(P, {Frac::of(Polynomial::constant(g.ring(), F.from_mpq(vn)))});
        require(check.is_zero(), Err::EliminationFailed, "relation does not vanish");
        return P;
    }

    // r = 2, m <= 1: eliminate t from (x1 den1^n - num1^n, x2 den2^n - num2^n)
    RingPtr work = PolyRing::make(Field::rationals(), {"x1", "x2", "t"});
    auto lift_t = [&](const Polynomial& p) { // Q[t] -> Q[x1,x2,t]
        Polynomial out(work);
        for (const auto& [m, c] : p.terms()) out.add_term({0, 0, m.empty() ? 0 : m[0]}, c);
        return out;
    };
    std::vector<Polynomial> eqs;
    for (int i = 0; i < 2; ++i) {
        const Frac& lam = g.generators()[std::size_t(i)];
        Polynomial num_n = lift_t(lam.num).pow(std::uint64_t(n));
        Polynomial den_n = lift_t(lam.den).pow(std::uint64_t(n));
        Mono xm(3, 0);
        xm[std::size_t(i)] = 1;
        eqs.push_back(Polynomial::monomial(work, xm, F.one()) * den_n - num_n);
    }
    Polynomial res = resultant(eqs[0], eqs[1], 2);
    require(!res.is_zero(), Err::EliminationFailed, "resultant vanished identically");

    // drop the (now unused) t coordinate
    RingPtr xring = PolyRing::make(Field::rationals(), {"x1", "x2"});
    Polynomial P(xring);
    for (const auto& [m, c] : res.terms()) {
        require(m[2] == 0, Err::EliminationFailed, "elimination left the parameter behind");
        P.add_term({m[0], m[1]}, c);
    }
    P = remove_univariate_content(P);
    P = squarefree_bivariate(P);
    P = remove_univariate_content(P);

    std::vector<Frac> point = {g.generators()[0].pow(n), g.generators()[1].pow(n)};
    require(frac_eval_poly(P, point).is_zero(), Err::EliminationFailed,
            "candidate does not vanish at the character point");
    return P;
}

} // namespace

RelationGen relation_gen(const LatticeSubgroup& g, int n) {
    Polynomial P = normalize_relation(relation_candidate(g, n));
    if (rank(g) == 2) {
        std::vector<Frac> point = {g.generators()[0].pow(n), g.generators()[1].pow(n)};
        require(frac_eval_poly(P, point).is_zero(), Err::EliminationFailed,
                "normalized relation does not vanish at the character point");
    }
    return RelationGen{P, n};
}

// ---------------------------------------------------------------------------
// Newton polygons

namespace {

// monotone chain; returns hull vertices in counterclockwise order
std::vector<std::array<long, 2>> convex_hull(std::vector<std::array<long, 2>> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() <= 2) return pts;
    auto cross = [](const std::array<long, 2>& o, const std::array<long, 2>& a,
                    const std::array<long, 2>& b) {
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
    };
    std::vector<std::array<long, 2>> h(2 * pts.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
        while (k >= t && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    std::sort(h.begin(), h.end());
    return h;
}

} // namespace

NewtonData newton_data(const Polynomial& P) {
    require(!P.is_zero(), Err::DomainError, "Newton polygon of the zero polynomial");
    std::size_t nv = P.ring()->nvars();
    require(nv >= 1 && nv <= 2, Err::ScopeExceeded, "Newton hulls computed for r <= 2");
    std::vector<std::array<long, 2>> pts;
    for (const auto& [m, c] : P.terms())
        pts.push_back({long(m[0]), nv == 2 ? long(m[1]) : 0L});
    NewtonData nd;
    if (nv == 1) {
        long lo = pts[0][0], hi = pts[0][0];
        for (const auto& p : pts) {
            lo = std::min(lo, p[0]);
            hi = std::max(hi, p[0]);
        }
        nd.hull = {{lo, 0}};
        if (hi != lo) nd.hull.push_back({hi, 0});
    } else {
        nd.hull = convex_hull(std::move(pts));
    }
    mpz_class e = 0;
    for (std::size_t i = 1; i < nd.hull.size(); ++i) {
        e = gcd(e, mpz_class(nd.hull[i][0] - nd.hull[0][0]));
        e = gcd(e, mpz_class(nd.hull[i][1] - nd.hull[0][1]));
    }
    nd.e = e == 0 ? 1 : e.get_si();
    return nd;
}

NewtonScalingReport newton_scaling_check(const LatticeSubgroup& g, int n) {
    NewtonScalingReport rep;
    rep.n = n;
    int r = rank(g);
    RelationGen p1 = relation_gen(g, 1);
    RelationGen pn = relation_gen(g, n);
    rep.hull1 = newton_data(p1.P);
    rep.hulln = newton_data(pn.P);
    rep.e1 = rep.hull1.e;

    // n^{r-1} / f_n * hull(P_1) = hull(P_n) for some f_n | e(P_1)
    long nr = 1;
    for (int i = 0; i + 1 < r; ++i) nr *= n;
    for (long f = 1; f <= rep.e1; ++f) {
        if (rep.e1 % f != 0) continue;
        if (rep.hull1.hull.size() != rep.hulln.hull.size()) continue;
        bool all = true;
        for (std::size_t i = 0; i < rep.hull1.hull.size() && all; ++i)
            for (int j = 0; j < 2; ++j) {
                long scaled_num = nr * rep.hull1.hull[i][j];
                if (scaled_num % f != 0 || scaled_num / f != rep.hulln.hull[i][j]) {
                    all = false;
                    break;
                }
            }
        if (all) {
            rep.f_n = f;
            rep.ok = true;
            return rep;
        }
    }
    fail(Err::ScalingViolated, "Newton hulls do not match any admissible scaling");
}

int d_divisors(const LatticeSubgroup& g) {
    const auto& pr = g.profile();
    std::size_t rows = pr.exponents.size();
    std::size_t cols = rows ? pr.exponents[0].size() : 0;
    std::vector<std::vector<mpz_class>> m(rows, std::vector<mpz_class>(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m[i][j] = pr.exponents[i][j];
    if (cols == 0) {
        // pure torsion: -1 present iff some generator is negative
        for (int s : pr.sign)
            if (s) return 2;
        return 1;
    }
    for (const auto& k : kernel_lattice(std::move(m))) {
        mpz_class parity = 0;
        for (std::size_t i = 0; i < rows; ++i) parity += k[i] * pr.sign[i];
        if (parity % 2 != 0) return 2;
    }
    return 1;
}

// ---------------------------------------------------------------------------
// verdict engine

std::string Verdict::result_name() const {
    switch (result) {
        case Result::LinearOverField: return "LinearOverField";
        case Result::NonlinearEvenOverRing: return "NonlinearEvenOverRing";
        case Result::Unknown: return "Unknown";
    }
    return "?";
}

std::string Verdict::to_json() const {
    nlohmann::json j;
    j["schema"] = "autlin.v1";
    j["result"] = result_name();
    j["rule"] = rule;
    j["note"] = note;
    j["witnesses"] = nlohmann::json::array();
    for (const auto& w : witnesses) {
        nlohmann::json e;
        e["delta"] = w.delta;
        e["lambda"] = w.lambda_desc;
        if (w.rank < 0)
            e["rank"] = "infinite";
        else
            e["rank"] = w.rank;
        e["trdeg"] = w.trdeg;
        e["torsion"] = w.torsion;
        e["d"] = w.d;
        e["classification"] = w.classification;
        j["witnesses"].push_back(e);
    }
    return j.dump();
}

namespace {

bool mpq_is_square(const mpq_class& v, mpq_class* root = nullptr) {
    if (v < 0) return false;
    mpz_class num = v.get_num(), den = v.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return false;
    if (root) {
        mpz_class rn, rd;
        mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
        mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
        *root = mpq_class(rn) / mpq_class(rd);
    }
    return true;
}

// the standard bad witness inside K* for K = Q or Q(t)
LatticeSubgroup full_star_witness(const FieldPtr& F) {
    if (F->kind() == FieldKind::Rationals)
        return LatticeSubgroup::of_rationals({mpq_class(2)});
    // Q(t): <t, t+1>
    RingPtr ring = PolyRing::make(Field::rationals(), F->function_vars());
    Polynomial t = Polynomial::variable(ring, 0);
    return LatticeSubgroup(ring, {Frac::of(t), Frac::of(t + Polynomial::from_int(ring, 1))});
}

LambdaWitness witness_from_group(const std::string& delta, const std::string& desc,
                                 const LatticeSubgroup& lam, std::uint64_t seed) {
    LambdaWitness w;
    w.delta = delta;
    w.lambda_desc = desc;
    w.rank = rank(lam);
    w.trdeg = trdeg(lam, seed);
    w.d = d_divisors(lam);
    w.torsion = w.d; // torsion of a subgroup of Q(t..)* is {1} or {+-1}
    w.classification = classify(lam, seed).result == GoodBad::Bad ? "Bad" : "Good";
    return w;
}

Verdict linear_first(const std::string& note, std::vector<LambdaWitness> ws) {
    return Verdict{Verdict::Result::LinearOverField,
                   "first-linearity-criterion: every Lambda_delta is a torsion-free good "
                   "subgroup of K*",
                   std::move(ws), note};
}

Verdict linear_second(const std::string& note, std::vector<LambdaWitness> ws) {
    return Verdict{Verdict::Result::LinearOverField,
                   "second-linearity-criterion (char 0): every Lambda_delta is good and "
                   "delta -> Card(Lambda_delta cap mu_infty) is bounded",
                   std::move(ws), note};
}

Verdict nonlinear_bad(const std::string& note, std::vector<LambdaWitness> ws) {
    return Verdict{Verdict::Result::NonlinearEvenOverRing,
                   "nonlinearity-criterion(i): some Lambda_delta is a bad subgroup of K* "
                   "(criterion (ii), unbounded d(Lambda_delta), never fires over the v1 "
                   "catalog)",
                   std::move(ws), note};
}

} // namespace

Verdict verdict(const SubgroupDescriptor& S, std::uint64_t seed) {
    const FieldPtr& F = S.F;
    bool char0 = F->characteristic() == 0;
    using K = SubgroupDescriptor::Kind;
    switch (S.kind) {
        case K::Trivial:
        case K::U: {
            LambdaWitness w{"all delta", "{1}", 0, 0, 1, 1, "Good"};
            return linear_first("stabilizer eigenvalue groups are trivial", {w});
        }
        case K::PlusMinusId: {
            if (!char0) return Verdict{Verdict::Result::Unknown, "torsion case needs char 0", {},
                                       "second criterion is proved for characteristic zero"};
            LambdaWitness w{"all delta", "{+-1}", 0, 0, 2, 2, "Good"};
            return linear_second("bounded torsion, rank zero", {w});
        }
        case K::B:
        case K::SL2:
        case K::GL2: {
            require(char0, Err::UnsupportedDescriptor,
                    "v1 bad-subgroup witnesses need a characteristic-zero base field");
            LatticeSubgroup bad = full_star_witness(F);
            LambdaWitness full{"(0;1) (orbit: all of P^1)", "K*", -1, long(F->kind() ==
                               FieldKind::RationalFunctions ? 1 : 0), 2, 2, "Bad"};
            LambdaWitness sub = witness_from_group("(0;1)", "K* contains " + bad.to_string(),
                                                   bad, seed);
            std::string note = S.kind == K::GL2
                                   ? "contains the Jacobian-one subgroup; verdict inherited"
                                   : "stabilizer eigenvalues exhaust K*";
            return nonlinear_bad(note, {full, sub});
        }
        case K::SO: {
            require(char0, Err::UnsupportedDescriptor, "SO verdicts are computed over char 0");
            const Field& KF = *F;
            require(F->kind() == FieldKind::Rationals, Err::UnsupportedDescriptor,
                    "v1 decides isotropy over Q only");
            mpq_class a = S.qa.rat(), b = S.qb.rat(), c = S.qc.rat();
            mpq_class disc = b * b - 4 * a * c;
            bool degenerate = disc == 0;
            mpq_class root;
            bool isotropic = degenerate || mpq_is_square(disc, &root);
            if (isotropic) {
                // exhibit an isotropic direction: q(x, y) = 0
                std::string delta;
                if (c == 0) {
                    delta = Direction::d0(F).to_string(); // q(0,1) = 0
                } else {
                    mpq_class slope = (-b + root) / (2 * c); // y/x
                    delta = Direction::make(F, KF.one(), KF.from_mpq(slope)).to_string();
                }
                LatticeSubgroup bad = full_star_witness(F);
                LambdaWitness full{delta + " (isotropic)", "K*", -1, 0, 2, 2, "Bad"};
                LambdaWitness sub =
                    witness_from_group(delta, "K* contains " + bad.to_string(), bad, seed);
                return nonlinear_bad(degenerate ? "degenerate form" : "isotropic form",
                                     {full, sub});
            }
            LambdaWitness w{"all delta in P^1_Q", "{+-1}", 0, 0, 2, 2, "Good"};
            w.classification = "Good";
            return linear_second(
                "anisotropic form: rational stabilizers are {+-id}; torsion over the "
                "splitting extension is at most 4",
                {w});
        }
        case K::DiagonalCyclic: {
            require(char0, Err::UnsupportedDescriptor, "v1 catalog is char 0");
            const Field& KF = *F;
            if (KF.is_one(S.lambda) || KF.eq(S.lambda, KF.from_int(-1))) {
                LambdaWitness w{"(0;1), (1;0)", "finite", 0, 0,
                                KF.is_one(S.lambda) ? 1 : 2, KF.is_one(S.lambda) ? 1 : 2,
                                "Good"};
                return linear_second("finite cyclic linear part", {w});
            }
            // Lambda_{(0;1)} = Lambda_{(1;0)} = <lambda>, trivial elsewhere
            LatticeSubgroup lam = [&]() {
                if (F->kind() == FieldKind::Rationals)
                    return LatticeSubgroup::of_rationals({S.lambda.rat()});
                RingPtr ring = PolyRing::make(Field::rationals(), F->function_vars());
                return LatticeSubgroup(ring, {S.lambda.frac()});
            }();
            LambdaWitness w =
                witness_from_group("(0;1) and (1;0)", "<lambda> = " + lam.to_string(), lam, seed);
            if (w.classification == "Bad")
                return nonlinear_bad("eigenvalue group of the axis stabilizers is bad", {w});
            if (w.d == 1)
                return linear_first("good and torsion-free on the axes, trivial elsewhere", {w});
            return linear_second("good with bounded torsion", {w});
        }
        case K::FiniteList: {
            if (!char0)
                return Verdict{Verdict::Result::Unknown,
                               "finite subgroup over finite base field: out of the v1 catalog",
                               {}, ""};
            std::size_t order;
            try {
                order = S.finite_closure().size();
            } catch (const Error&) {
                return Verdict{Verdict::Result::Unknown,
                               "generated group exceeds the finite-closure cap", {}, ""};
            }
            LambdaWitness w{"all delta", "subgroup of a finite group", 0, 0, long(2 * order),
                            2, "Good"};
            w.lambda_desc = "eigenvalues of a group of order " + std::to_string(order);
            return linear_second("finite linear part: torsion uniformly bounded", {w});
        }
        case K::RingSL2:
            return Verdict{Verdict::Result::Unknown,
                           "out-of-catalog ring subgroup: deciding goodness of Lambda_delta "
                           "needs number-field unit ranks",
                           {},
                           "SL(2, " + S.ring_text + ") eigenvalue groups involve ring units"};
    }
    fail(Err::UnsupportedDescriptor, "unhandled descriptor");
}

} // namespace autlin
