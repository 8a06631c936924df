#include "autlin/torsion.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "autlin/exactfield.hpp"

namespace autlin {

namespace {

long mod_inv_l(long a, long p) {
    long t = 0, nt = 1, r = p, nr = ((a % p) + p) % p;
    while (nr) {
        long q = r / nr;
        std::swap(t -= q * nt, nt);
        std::swap(r -= q * nr, nr);
    }
    return ((t % p) + p) % p;
}

bool is_prime_l(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

} // namespace

FinitePerm FinitePerm::identity(long p) {
    FinitePerm f{p, std::vector<int>(std::size_t(p * p))};
    for (std::size_t i = 0; i < f.table.size(); ++i) f.table[i] = int(i);
    return f;
}

FinitePerm FinitePerm::compose(const FinitePerm& inner) const {
    require(p == inner.p, Err::MismatchedContext, "permutations of different planes");
    FinitePerm out{p, std::vector<int>(table.size())};
    for (std::size_t i = 0; i < table.size(); ++i)
        out.table[i] = table[std::size_t(inner.table[i])];
    return out;
}

FinitePerm FinitePerm::inverse() const {
    FinitePerm out{p, std::vector<int>(table.size())};
    for (std::size_t i = 0; i < table.size(); ++i) out.table[std::size_t(table[i])] = int(i);
    return out;
}

FinitePerm FinitePerm::power(long e) const {
    FinitePerm base = e < 0 ? inverse() : *this;
    long k = e < 0 ? -e : e;
    FinitePerm acc = identity(p);
    while (k) {
        if (k & 1) acc = acc.compose(base);
        base = base.compose(base);
        k >>= 1;
    }
    return acc;
}

bool FinitePerm::is_identity() const {
    for (std::size_t i = 0; i < table.size(); ++i)
        if (table[i] != int(i)) return false;
    return true;
}

std::pair<FinitePerm, FinitePerm> bs_action(long p) {
    require(p != 2 && is_prime_l(p), Err::DomainError, "bs_action needs an odd prime");
    long inv2 = mod_inv_l(2, p);
    FinitePerm sigma{p, std::vector<int>(std::size_t(p * p))};
    FinitePerm tau{p, std::vector<int>(std::size_t(p * p))};
    for (long x = 0; x < p; ++x)
        for (long y = 0; y < p; ++y) {
            // sigma = S^-1: (x, y) -> (y/2, x)
            sigma.table[std::size_t(x * p + y)] = int((y * inv2 % p) * p + x);
            // tau = T: (x, y) -> (x, y + x^2)
            tau.table[std::size_t(x * p + y)] = int(x * p + (y + x * x) % p);
        }
    return {sigma, tau};
}

std::optional<long> separate(const std::vector<GenPower>& word, const std::vector<long>& primes) {
    for (long p : primes) {
        auto [sigma, tau] = bs_action(p);
        FinitePerm acc = FinitePerm::identity(p);
        for (const auto& gp : word) {
            require(gp.gen == 's' || gp.gen == 't', Err::DomainError, "generators are s and t");
            const FinitePerm& base = gp.gen == 's' ? sigma : tau;
            acc = acc.compose(base.power(gp.exp));
        }
        if (!acc.is_identity()) return p;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// the sum/product identity

namespace {

// arithmetic in F_{p^r}: elements are base-p digit encodings of F_p[x]/(irr)
struct GF {
    long p;
    int r;
    long q; // p^r
    std::vector<long> irr; // monic irreducible, length r+1

    static GF make(long p, int r);
    long add(long a, long b) const;
    long neg(long a) const;
    long mul(long a, long b) const;
    long pow(long a, long e) const;
    std::vector<long> digits(long a) const;
    long from_digits(const std::vector<long>& d) const;
};

std::vector<long> gf_poly_mulmod(const std::vector<long>& a, const std::vector<long>& b,
                                 const std::vector<long>& irr, long p) {
    std::vector<long> prod(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    // reduce by the monic irr
    int r = int(irr.size()) - 1;
    for (int d = int(prod.size()) - 1; d >= r; --d) {
        long c = prod[std::size_t(d)];
        if (!c) continue;
        for (int k = 0; k <= r; ++k) {
            auto& slot = prod[std::size_t(d - r + k)];
            slot = ((slot - c * irr[std::size_t(k)]) % p + p) % p;
        }
    }
    prod.resize(std::size_t(r));
    return prod;
}

GF GF::make(long p, int r) {
    GF f;
    f.p = p;
    f.r = r;
    f.q = 1;
    for (int i = 0; i < r; ++i) f.q *= p;
    // brute-force monic irreducible of degree r: no factor of degree <= r/2
    auto poly_of = [&](long code, int deg) {
        std::vector<long> c(std::size_t(deg + 1));
        for (int i = 0; i < deg; ++i) {
            c[std::size_t(i)] = code % p;
            code /= p;
        }
        c[std::size_t(deg)] = 1;
        return c;
    };
    auto divides = [&](const std::vector<long>& d, std::vector<long> x) {
        // remainder of x by monic d, over F_p
        int dd = int(d.size()) - 1;
        for (int k = int(x.size()) - 1; k >= dd; --k) {
            long c = x[std::size_t(k)];
            if (!c) continue;
            for (int j = 0; j <= dd; ++j) {
                auto& slot = x[std::size_t(k - dd + j)];
                slot = ((slot - c * d[std::size_t(j)]) % p + p) % p;
            }
        }
        for (int k = 0; k < dd; ++k)
            if (x[std::size_t(k)]) return false;
        return true;
    };
    for (long code = 0;; ++code) {
        require(code < f.q, Err::DomainError, "no irreducible found (bad p, r?)");
        std::vector<long> cand = poly_of(code, r);
        bool ok = true;
        for (int deg = 1; ok && 2 * deg <= r; ++deg) {
            long count = 1;
            for (int i = 0; i < deg; ++i) count *= p;
            for (long sub = 0; sub < count; ++sub)
                if (divides(poly_of(sub, deg), cand)) {
                    ok = false;
                    break;
                }
        }
        if (ok) {
            f.irr = cand;
            return f;
        }
    }
}

std::vector<long> GF::digits(long a) const {
    std::vector<long> d(std::size_t(r), 0);
    for (int i = 0; i < r; ++i) {
        d[std::size_t(i)] = a % p;
        a /= p;
    }
    return d;
}

long GF::from_digits(const std::vector<long>& d) const {
    long a = 0;
    for (int i = r - 1; i >= 0; --i) a = a * p + d[std::size_t(i)];
    return a;
}

long GF::add(long a, long b) const {
    auto da = digits(a), db = digits(b);
    for (int i = 0; i < r; ++i) da[std::size_t(i)] = (da[std::size_t(i)] + db[std::size_t(i)]) % p;
    return from_digits(da);
}

long GF::neg(long a) const {
    auto d = digits(a);
    for (auto& c : d) c = (p - c) % p;
    return from_digits(d);
}

long GF::mul(long a, long b) const {
    return from_digits(gf_poly_mulmod(digits(a), digits(b), irr, p));
}

long GF::pow(long a, long e) const {
    long acc = 1, base = a;
    while (e) {
        if (e & 1) acc = mul(acc, base);
        base = mul(base, base);
        e >>= 1;
    }
    return acc;
}

} // namespace

SumProductReport sum_product_check(long p, int r, AlgebraModel model) {
    require(is_prime_l(p), Err::DomainError, "p must be prime");
    long q = 1;
    for (int i = 0; i < r; ++i) q *= p;
    require(q <= 81, Err::ScopeExceeded, "sum_product_check is capped at p^r <= 81");

    if (model == AlgebraModel::PolynomialAlgebra) {
        std::vector<std::string> vars;
        for (int i = 0; i < r; ++i) vars.push_back("a" + std::to_string(i + 1));
        FieldPtr F = Field::prime(p);
        RingPtr ring = PolyRing::make(F, vars);
        std::vector<Polynomial> basis;
        for (int i = 0; i < r; ++i) basis.push_back(Polynomial::variable(ring, std::size_t(i)));
        Polynomial lhs(ring);
        Polynomial rhs = Polynomial::from_int(ring, 1);
        for (long code = 0; code < q; ++code) {
            long c = code;
            Polynomial u(ring);
            for (int i = 0; i < r; ++i) {
                u = u + basis[std::size_t(i)].scaled(F->from_int(c % p));
                c /= p;
            }
            lhs = lhs + u.pow(std::uint64_t(q - 1));
            if (code) rhs = rhs * u;
        }
        return SumProductReport{p, r, model, lhs == rhs, lhs.to_string(), rhs.to_string()};
    }

    GF f = GF::make(p, r);
    long lhs = 0, rhs = 1;
    for (long a = 0; a < q; ++a) {
        lhs = f.add(lhs, f.pow(a, q - 1));
        if (a) rhs = f.mul(rhs, a);
    }
    return SumProductReport{p, r, model, lhs == rhs,
                            std::to_string(lhs) + " (encodes -1: " +
                                std::to_string(f.neg(1)) + ")",
                            std::to_string(rhs)};
}

// ---------------------------------------------------------------------------
// finite groups and the lower central series

FiniteGroup::FiniteGroup(Elem id, std::function<Elem(const Elem&, const Elem&)> mul,
                         std::function<Elem(const Elem&)> inv, std::vector<Elem> elements)
    : id_(std::move(id)), mul_(std::move(mul)), inv_(std::move(inv)),
      elements_(std::move(elements)) {
    require(!elements_.empty(), Err::DomainError, "empty element list");
}

bool FiniteGroup::axioms_hold(int samples, std::uint64_t seed) const {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, elements_.size() - 1);
    std::set<Elem> index(elements_.begin(), elements_.end());
    if (!index.count(id_)) return false;
    for (int i = 0; i < samples; ++i) {
        const Elem &a = elements_[pick(rng)], &b = elements_[pick(rng)], &c = elements_[pick(rng)];
        if (mul_(mul_(a, b), c) != mul_(a, mul_(b, c))) return false;
        if (!index.count(mul_(a, b))) return false;
        if (mul_(a, inv_(a)) != id_ || mul_(inv_(a), a) != id_) return false;
        if (mul_(a, id_) != a || mul_(id_, a) != a) return false;
    }
    return true;
}

int nilpotency_class(const FiniteGroup& g) {
    require(g.order() <= 10000, Err::ScopeExceeded, "nilpotency_class is capped at 10^4 elements");
    using Elem = FiniteGroup::Elem;
    auto closure = [&](std::set<Elem> gens) {
        gens.insert(g.id());
        std::vector<Elem> frontier(gens.begin(), gens.end());
        std::set<Elem> out = gens;
        while (!frontier.empty()) {
            std::vector<Elem> next;
            for (const auto& a : frontier)
                for (const auto& b : out) {
                    for (const Elem& c : {g.mul(a, b), g.mul(b, a)}) {
                        if (out.insert(c).second) next.push_back(c);
                    }
                }
            frontier = std::move(next);
        }
        return out;
    };
    std::set<Elem> gamma(g.elements().begin(), g.elements().end());
    std::size_t prev = 0;
    for (int c = 0; c < 64; ++c) {
        if (gamma.size() == 1) return c; // gamma_{c+1} trivial
        require(gamma.size() != prev, Err::NotNilpotent,
                "lower central series stabilized above the trivial group");
        prev = gamma.size();
        std::set<Elem> comms;
        for (const auto& a : gamma)
            for (const auto& b : g.elements())
                comms.insert(g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b))));
        gamma = closure(std::move(comms));
    }
    fail(Err::NotNilpotent, "series did not terminate");
}

FiniteGroup build_Gr(long p, int r) {
    require(is_prime_l(p) && r >= 1, Err::DomainError, "need prime p and r >= 1");
    long q = 1; // |E| = p^r
    for (int i = 0; i < r; ++i) q *= p;
    double order = double(q);
    for (long i = 0; i < q; ++i) order *= double(p);
    require(order <= 10000.0, Err::ScopeExceeded, "G(r) order exceeds the 10^4 cap");

    // element = (e_0..e_{r-1}, m_0..m_{q-1}): a point of E and a function E -> F_p
    using Elem = FiniteGroup::Elem;
    const int R = r;
    const long Q = q, P = p;
    auto evec = [R, P](long code) {
        std::vector<long> v(std::size_t(R), 0);
        for (int i = 0; i < R; ++i) {
            v[std::size_t(i)] = code % P;
            code /= P;
        }
        return v;
    };
    auto ecode = [R, P](const std::vector<long>& v) {
        long code = 0;
        for (int i = R - 1; i >= 0; --i) code = code * P + v[std::size_t(i)];
        return code;
    };
    // translation action: (u . m)(v) = m(v - u)
    auto shift = [=](const Elem& el, const std::vector<long>& by) {
        Elem out = el;
        for (long v = 0; v < Q; ++v) {
            std::vector<long> w = evec(v);
            for (int i = 0; i < R; ++i)
                w[std::size_t(i)] = ((w[std::size_t(i)] - by[std::size_t(i)]) % P + P) % P;
            out[std::size_t(R + v)] = el[std::size_t(R + ecode(w))];
        }
        return out;
    };
    auto mul = [=](const Elem& a, const Elem& b) {
        // (e, m)(f, n) = (e + f, (alpha(-f) m) + n)
        Elem out(a.size());
        std::vector<long> minus_f(std::size_t(R), 0);
        for (int i = 0; i < R; ++i) {
            out[std::size_t(i)] = int((a[std::size_t(i)] + b[std::size_t(i)]) % P);
            minus_f[std::size_t(i)] = ((-b[std::size_t(i)]) % P + P) % P;
        }
        Elem am = shift(a, minus_f);
        for (long v = 0; v < Q; ++v)
            out[std::size_t(R + v)] = int((am[std::size_t(R + v)] + b[std::size_t(R + v)]) % P);
        return out;
    };
    auto inv = [=](const Elem& a) {
        Elem out(a.size());
        std::vector<long> apos(std::size_t(R), 0);
        for (int i = 0; i < R; ++i) {
            out[std::size_t(i)] = int(((-a[std::size_t(i)]) % P + P) % P);
            apos[std::size_t(i)] = a[std::size_t(i)];
        }
        Elem am = shift(a, apos);
        for (long v = 0; v < Q; ++v)
            out[std::size_t(R + v)] = int(((-am[std::size_t(R + v)]) % P + P) % P);
        return out;
    };
    Elem id(std::size_t(R + Q), 0);
    std::vector<Elem> elements;
    long mcount = 1;
    for (long i = 0; i < Q; ++i) mcount *= P;
    for (long e = 0; e < Q; ++e) {
        std::vector<long> ev = evec(e);
        for (long m = 0; m < mcount; ++m) {
            Elem el(std::size_t(R + Q));
            for (int i = 0; i < R; ++i) el[std::size_t(i)] = int(ev[std::size_t(i)]);
            long mm = m;
            for (long v = 0; v < Q; ++v) {
                el[std::size_t(R + v)] = int(mm % P);
                mm /= P;
            }
            elements.push_back(std::move(el));
        }
    }
    return FiniteGroup(id, mul, inv, std::move(elements));
}

FiniteGroup build_EM(long p, int r, long a) {
    require(is_prime_l(p) && r >= 1, Err::DomainError, "need prime p and r >= 1");
    long q = 1;
    for (int i = 0; i < r; ++i) q *= p;
    require(q <= 27, Err::ScopeExceeded, "build_EM is capped at p^r <= 27");
    GF f = GF::make(p, r);
    require(a % q != 0, Err::DomainError, "a must be nonzero in F_{p^r}");
    a %= q;

    // f(t) = a t^(q-1); M = F_p-span of f(t+u), u in E = A = F_{p^r}
    // polynomials of degree < q over A: vector of q field elements
    const long Q = q, P = p;
    auto binom_mod = [P](long n, long k) {
        // direct small computation; arguments stay below 27
        mpz_class top = 1, bot = 1;
        for (long i = 0; i < k; ++i) {
            top *= (n - i);
            bot *= (i + 1);
        }
        mpz_class b = top / bot;
        return mpz_class((b % P + P) % P);
    };
    auto translate = [f, binom_mod, P](const std::vector<long>& poly, long u) {
        // m(t + u)
        std::vector<long> out(poly.size(), 0);
        for (long i = 0; i < long(poly.size()); ++i) {
            if (!poly[std::size_t(i)]) continue;
            for (long j = 0; j <= i; ++j) {
                long coef = binom_mod(i, j).get_si();
                long term = f.mul(poly[std::size_t(i)],
                                  f.mul(coef % P, f.pow(u, i - j)));
                out[std::size_t(j)] = f.add(out[std::size_t(j)], term);
            }
        }
        return out;
    };
    std::vector<long> base(std::size_t(Q), 0);
    base[std::size_t(Q - 1)] = a;
    std::vector<std::vector<long>> gens;
    for (long u = 0; u < Q; ++u) gens.push_back(translate(base, u));

    // span over F_p: close under addition
    std::set<std::vector<long>> span;
    span.insert(std::vector<long>(std::size_t(Q), 0));
    std::vector<std::vector<long>> frontier = {std::vector<long>(std::size_t(Q), 0)};
    while (!frontier.empty()) {
        std::vector<std::vector<long>> next;
        for (const auto& m : frontier)
            for (const auto& g : gens) {
                std::vector<long> s(m.size());
                for (std::size_t i = 0; i < m.size(); ++i) s[i] = f.add(m[i], g[i]);
                if (span.insert(s).second) next.push_back(s);
            }
        frontier = std::move(next);
    }
    std::vector<std::vector<long>> mset(span.begin(), span.end());

    using Elem = FiniteGroup::Elem;
    auto pack = [Q](long u, const std::vector<long>& m) {
        Elem e(std::size_t(1 + Q));
        e[0] = int(u);
        for (long i = 0; i < Q; ++i) e[std::size_t(1 + i)] = int(m[std::size_t(i)]);
        return e;
    };
    auto unpackm = [Q](const Elem& e) {
        std::vector<long> m(std::size_t(Q), 0);
        for (long i = 0; i < Q; ++i) m[std::size_t(i)] = e[std::size_t(1 + i)];
        return m;
    };
    auto mul = [=](const Elem& x, const Elem& y) {
        long u = x[0], v = y[0];
        std::vector<long> shifted = translate(unpackm(x), f.neg(v));
        std::vector<long> n = unpackm(y);
        std::vector<long> m(shifted.size());
        for (std::size_t i = 0; i < m.size(); ++i) m[i] = f.add(shifted[i], n[i]);
        return pack(f.add(u, v), m);
    };
    auto inv = [=](const Elem& x) {
        long u = x[0];
        std::vector<long> shifted = translate(unpackm(x), u);
        for (auto& c : shifted) c = f.neg(c);
        return pack(f.neg(u), shifted);
    };
    std::vector<Elem> elements;
    for (long u = 0; u < Q; ++u)
        for (const auto& m : mset) elements.push_back(pack(u, m));
    require(elements.size() <= 10000, Err::ScopeExceeded, "E |x M exceeds the cap");
    return FiniteGroup(pack(0, std::vector<long>(std::size_t(Q), 0)), mul, inv,
                       std::move(elements));
}

} // namespace autlin
