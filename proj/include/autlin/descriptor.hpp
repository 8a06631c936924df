#ifndef AUTLIN_DESCRIPTOR_HPP
#define AUTLIN_DESCRIPTOR_HPP

#include <string>
#include <vector>

#include "autlin/matrix.hpp"

namespace autlin {

/// Catalog of linear-part subgroups S < GL(2,K) the tools understand.
struct SubgroupDescriptor {
    enum class Kind {
        Trivial,
        PlusMinusId,
        U,    // (x, y + a x)
        B,    // lower triangular, det 1
        SL2,
        GL2,
        SO,             // special orthogonal group of a binary quadratic form
        DiagonalCyclic, // <diag(lambda, lambda^-1)>
        FiniteList,     // closure of a finite list of matrices
        RingSL2,        // SL(2, R) for a named coefficient ring outside the catalog
    };

    Kind kind = Kind::Trivial;
    FieldPtr F;
    Scalar qa, qb, qc;          // SO: q(x,y) = qa x^2 + qb xy + qc y^2
    Scalar lambda;              // DiagonalCyclic
    std::vector<Mat2> matrices; // FiniteList generators
    std::string ring_text;      // RingSL2

    static SubgroupDescriptor trivial(FieldPtr F);
    static SubgroupDescriptor plus_minus_id(FieldPtr F);
    static SubgroupDescriptor u(FieldPtr F);
    static SubgroupDescriptor b(FieldPtr F);
    static SubgroupDescriptor sl2(FieldPtr F);
    static SubgroupDescriptor gl2(FieldPtr F);
    static SubgroupDescriptor so(FieldPtr F, Scalar qa, Scalar qb, Scalar qc);
    static SubgroupDescriptor diagonal_cyclic(FieldPtr F, Scalar lambda);
    static SubgroupDescriptor finite_list(FieldPtr F, std::vector<Mat2> gens);
    static SubgroupDescriptor ring_sl2(FieldPtr F, std::string ring_text);

    bool contains(const Mat2& g) const;
    /// Closure of FiniteList generators; throws ScopeExceeded above the cap.
    std::vector<Mat2> finite_closure(std::size_t cap = 10000) const;
    std::string to_string() const;
};

/// Report entry of core_probe: why a candidate does, or does not, sit in the
/// core of S inside S |x *_d E_d(K).
struct CoreProbeEntry {
    Mat2 g;
    enum class Kind { Identity, ConjugationWitness, MovesDirection } kind;
    std::string detail;
};

std::vector<CoreProbeEntry> core_probe(const SubgroupDescriptor& S,
                                       const std::vector<Mat2>& candidates);

} // namespace autlin

#endif
