#ifndef AUTLIN_CHARLAB_HPP
#define AUTLIN_CHARLAB_HPP

#include <array>
#include <cstdint>
#include <optional>

#include "autlin/descriptor.hpp"

namespace autlin {

/// Finitely generated multiplicative subgroup of Q(t1..tm)*, given by its
/// generators. Exponent profiles are taken over a gcd-free basis of the
/// numerators/denominators (pairwise coprime blocks); distinct blocks have
/// disjoint irreducible support, so ranks and kernels over the block basis
/// agree with those over the true irreducible basis.
class LatticeSubgroup {
public:
    LatticeSubgroup(RingPtr ring, std::vector<Frac> gens);
    static LatticeSubgroup of_rationals(const std::vector<mpq_class>& values);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Frac>& generators() const { return gens_; }
    std::size_t arity() const { return gens_.size(); }
    std::size_t nvars() const { return ring_->nvars(); }
    std::string to_string() const;

    struct Profile {
        std::vector<Polynomial> poly_basis; // monic, pairwise coprime, nonconstant
        std::vector<mpz_class> int_basis;   // > 1, pairwise coprime
        // one row per generator: exponents over poly_basis ++ int_basis
        std::vector<std::vector<long>> exponents;
        std::vector<int> sign; // 0/1 per generator
    };
    /// Built at construction; throws ScopeExceeded for nonconstant generators
    /// in more than one variable (trdeg still works there).
    const Profile& profile() const;

private:
    RingPtr ring_;
    std::vector<Frac> gens_;
    std::optional<Profile> profile_;
    std::string profile_error_;
    void build_profile();
};

/// rk = dim Lambda (x) Q, the rank of the exponent matrix.
int rank(const LatticeSubgroup& g);

/// trdeg of the field the generators generate: generic Jacobian rank, sampled
/// exactly at random rational points (max over 5 tries plus a confirmation).
int trdeg(const LatticeSubgroup& g, std::uint64_t seed = 0);

enum class GoodBad { Good, Bad };

struct ClassifyReport {
    GoodBad result;
    // first offending generator subset when Bad, with its rank/trdeg
    std::vector<std::size_t> bad_subset;
    int bad_rank = 0, bad_trdeg = 0;
};

/// Good iff rank = trdeg on every generator subset.
ClassifyReport classify(const LatticeSubgroup& g, std::uint64_t seed = 0);

/// Extracts a subgroup with rk = 1 + trdeg and full support lattice.
/// Throws NotBad when the input is good, ScopeExceeded outside r <= 2.
LatticeSubgroup minimally_bad(const LatticeSubgroup& g, std::uint64_t seed = 0);

struct RelationGen {
    Polynomial P; // normalized: constant coefficient 1, support nonnegative
    int n;
};

/// Normalized generator of I_n(Lambda) for minimally bad Lambda with
/// rk in {1,2} and at most one function-field variable.
RelationGen relation_gen(const LatticeSubgroup& g, int n);

struct NewtonData {
    std::vector<std::array<long, 2>> hull; // vertices, sorted; r=1 uses (k, 0)
    long e = 1;                            // gcd of vertex differences
};

NewtonData newton_data(const Polynomial& P);

struct NewtonScalingReport {
    int n;
    NewtonData hull1, hulln;
    long e1 = 1;
    long f_n = 1;
    bool ok = false;
};

/// Checks hull(P_n) = (n^(r-1)/f_n) hull(P_1) for some f_n dividing e(P_1).
NewtonScalingReport newton_scaling_check(const LatticeSubgroup& g, int n);

/// 2 when -1 lies in Lambda, else 1 (the torsion of Q(t..)* is {+-1}).
int d_divisors(const LatticeSubgroup& g);

// ---------------------------------------------------------------------------
// Verdict engine

struct LambdaWitness {
    std::string delta;       // direction or orbit description
    std::string lambda_desc; // eigenvalue group
    long rank = 0;           // -1 encodes "infinite"
    long trdeg = 0;
    long torsion = 1; // cardinality of Lambda cap mu_infty
    int d = 1;
    std::string classification; // Good / Bad / finite
};

struct Verdict {
    enum class Result { LinearOverField, NonlinearEvenOverRing, Unknown } result;
    std::string rule;
    std::vector<LambdaWitness> witnesses;
    std::string note;

    std::string result_name() const;
    std::string to_json() const;
};

/// Decides linearity of Aut_S A^2 over the descriptor's base field using the
/// bad-subgroup nonlinearity rule and the two linearity rules. The unbounded
/// d(Lambda_delta) branch of the nonlinearity rule never fires over the v1
/// catalog (characteristic-zero base fields only); it is documented with the
/// rule text.
Verdict verdict(const SubgroupDescriptor& S, std::uint64_t seed = 0);

} // namespace autlin

#endif
