#ifndef AUTLIN_TORSION_HPP
#define AUTLIN_TORSION_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "autlin/error.hpp"

namespace autlin {

/// Permutation of the p^2 points of F_p x F_p.
struct FinitePerm {
    long p = 0;
    std::vector<int> table; // table[x*p + y] = image point index

    static FinitePerm identity(long p);
    FinitePerm compose(const FinitePerm& inner) const; // this after inner
    FinitePerm inverse() const;
    FinitePerm power(long e) const;
    bool is_identity() const;
    bool operator==(const FinitePerm& o) const { return p == o.p && table == o.table; }
};

/// sigma = (S mod p)^-1 and tau = T mod p for S = (y, 2x), T = (x, y + x^2);
/// these satisfy sigma^2 tau sigma^-2 = tau^2 on F_p^2 for every odd prime p.
std::pair<FinitePerm, FinitePerm> bs_action(long p);

/// One letter of a word in the two generators: 's' or 't' with an exponent.
struct GenPower {
    char gen;
    long exp;
};

/// First prime in the list where the word acts nontrivially on F_p^2.
std::optional<long> separate(const std::vector<GenPower>& word, const std::vector<long>& primes);

enum class AlgebraModel { PolynomialAlgebra, GaloisField };

struct SumProductReport {
    long p;
    int r;
    AlgebraModel model;
    bool holds;
    std::string lhs, rhs;
};

/// Exhaustive check of sum_{u in E} u^{p^r - 1} = prod_{u in E, u != 0} u for
/// E an r-dimensional F_p-span, in F_p[a_1..a_r] or in F_{p^r}. Cap p^r <= 81.
SumProductReport sum_product_check(long p, int r, AlgebraModel model);

/// Small finite group with explicitly listed elements.
class FiniteGroup {
public:
    using Elem = std::vector<int>;
    FiniteGroup(Elem id, std::function<Elem(const Elem&, const Elem&)> mul,
                std::function<Elem(const Elem&)> inv, std::vector<Elem> elements);

    std::size_t order() const { return elements_.size(); }
    const std::vector<Elem>& elements() const { return elements_; }
    const Elem& id() const { return id_; }
    Elem mul(const Elem& a, const Elem& b) const { return mul_(a, b); }
    Elem inv(const Elem& a) const { return inv_(a); }
    bool axioms_hold(int samples, std::uint64_t seed) const;

private:
    Elem id_;
    std::function<Elem(const Elem&, const Elem&)> mul_;
    std::function<Elem(const Elem&)> inv_;
    std::vector<Elem> elements_;
};

/// Length of the lower central series: smallest c with gamma_{c+1} = 1.
/// Throws NotNilpotent when the series stabilizes above the trivial group.
int nilpotency_class(const FiniteGroup& g);

/// G(r) = E |x F_p[E] for E = (Z/p)^r acting by translation; order p^r * p^(p^r),
/// capped at 10^4 elements.
FiniteGroup build_Gr(long p, int r);

/// E |x M inside A |x A[t] for A = F_{p^r}, E = A, f(t) = a t^(p^r - 1), M the
/// additive span of the translates f(t+u). `a` indexes a nonzero element of A.
FiniteGroup build_EM(long p, int r, long a = 1);

} // namespace autlin

#endif
