#include "autlin/descriptor.hpp"

#include "autlin/planeaut.hpp"

#include <set>

namespace autlin {

SubgroupDescriptor SubgroupDescriptor::trivial(FieldPtr F) {
    SubgroupDescriptor d;
    d.kind = Kind::Trivial;
    d.F = std::move(F);
    return d;
}
SubgroupDescriptor SubgroupDescriptor::plus_minus_id(FieldPtr F) {
    SubgroupDescriptor d;
    d.kind = Kind::PlusMinusId;
    d.F = std::move(F);
    return d;
}
SubgroupDescriptor SubgroupDescriptor::u(FieldPtr F) {
    SubgroupDescriptor d;
    d.kind = Kind::U;
    d.F = std::move(F);
    return d;
}
SubgroupDescriptor SubgroupDescriptor::b(FieldPtr F) {
    SubgroupDescriptor d;
    d.kind = Kind::B;
    d.F = std::move(F);
    return d;
}
SubgroupDescriptor SubgroupDescriptor::sl2(FieldPtr F) {
    SubgroupDescriptor d;
    d.kind = Kind::SL2;
    d.F = std::move(F);
    return d;
}
SubgroupDescriptor SubgroupDescriptor::gl2(FieldPtr F) {
    SubgroupDescriptor d;
    d.kind = Kind::GL2;
    d.F = std::move(F);
    return d;
}
SubgroupDescriptor SubgroupDescriptor::so(FieldPtr F, Scalar qa, Scalar qb, Scalar qc) {
    require(F->characteristic() != 2, Err::UnsupportedDescriptor, "SO(q) needs characteristic != 2");
    SubgroupDescriptor d;
    d.kind = Kind::SO;
    d.F = std::move(F);
    d.qa = std::move(qa);
    d.qb = std::move(qb);
    d.qc = std::move(qc);
    require(!(d.F->is_zero(d.qa) && d.F->is_zero(d.qb) && d.F->is_zero(d.qc)),
            Err::UnsupportedDescriptor, "zero quadratic form");
    return d;
}
SubgroupDescriptor SubgroupDescriptor::diagonal_cyclic(FieldPtr F, Scalar lambda) {
    require(!F->is_zero(lambda), Err::UnsupportedDescriptor, "lambda must be nonzero");
    SubgroupDescriptor d;
    d.kind = Kind::DiagonalCyclic;
    d.F = std::move(F);
    d.lambda = std::move(lambda);
    return d;
}
SubgroupDescriptor SubgroupDescriptor::finite_list(FieldPtr F, std::vector<Mat2> gens) {
    SubgroupDescriptor d;
    d.kind = Kind::FiniteList;
    d.F = std::move(F);
    d.matrices = std::move(gens);
    return d;
}
SubgroupDescriptor SubgroupDescriptor::ring_sl2(FieldPtr F, std::string ring_text) {
    SubgroupDescriptor d;
    d.kind = Kind::RingSL2;
    d.F = std::move(F);
    d.ring_text = std::move(ring_text);
    return d;
}

bool SubgroupDescriptor::contains(const Mat2& g) const {
    const Field& K = *F;
    switch (kind) {
        case Kind::Trivial: return g.is_identity();
        case Kind::PlusMinusId: return g.is_identity() || g.is_minus_identity();
        case Kind::U:
            return K.is_one(g.a) && K.is_zero(g.b) && K.is_one(g.d);
        case Kind::B: return K.is_zero(g.b) && K.is_one(g.det());
        case Kind::SL2: return K.is_one(g.det());
        case Kind::GL2: return !K.is_zero(g.det());
        case Kind::SO: {
            if (!K.is_one(g.det())) return false;
            // q(g v) = q(v) coefficientwise
            // new qa = q(g(1,0)), new qc = q(g(0,1)), new qb from polarization
            auto q_of = [&](const Scalar& x, const Scalar& y) {
                return K.add(K.add(K.mul(qa, K.mul(x, x)), K.mul(qb, K.mul(x, y))),
                             K.mul(qc, K.mul(y, y)));
            };
            auto [x1, y1] = g.apply(K.one(), K.zero());
            auto [x2, y2] = g.apply(K.zero(), K.one());
            Scalar na = q_of(x1, y1), nc = q_of(x2, y2);
            auto [xs, ys] = g.apply(K.one(), K.one());
            Scalar nsum = q_of(xs, ys); // na + nb + nc
            Scalar nb = K.sub(K.sub(nsum, na), nc);
            return K.eq(na, qa) && K.eq(nb, qb) && K.eq(nc, qc);
        }
        case Kind::DiagonalCyclic: {
            if (!K.is_zero(g.b) || !K.is_zero(g.c) || !K.is_one(g.det())) return false;
            Scalar acc = K.one();
            for (int k = 0; k <= 256; ++k) {
                if (K.eq(g.a, acc) || K.eq(g.a, K.inv(acc))) return true;
                acc = K.mul(acc, lambda);
                if (k > 0 && K.is_one(acc)) break; // lambda has finite order
            }
            return false;
        }
        case Kind::FiniteList: {
            for (const auto& m : finite_closure())
                if (m == g) return true;
            return false;
        }
        case Kind::RingSL2:
            fail(Err::UnsupportedDescriptor, "membership in " + ring_text + " is out of catalog");
    }
    return false;
}

std::vector<Mat2> SubgroupDescriptor::finite_closure(std::size_t cap) const {
    require(kind == Kind::FiniteList, Err::UnsupportedDescriptor, "not a finite list descriptor");
    std::vector<Mat2> elems = {Mat2::identity(F)};
    std::set<std::string> seen = {elems[0].to_string()};
    std::vector<Mat2> frontier = elems;
    while (!frontier.empty()) {
        std::vector<Mat2> next;
        for (const auto& e : frontier)
            for (const auto& gen : matrices) {
                for (const Mat2& m : {e * gen, e * gen.inverse()}) {
                    if (seen.insert(m.to_string()).second) {
                        elems.push_back(m);
                        next.push_back(m);
                        require(elems.size() <= cap, Err::ScopeExceeded,
                                "finite-list closure exceeds the cap");
                    }
                }
            }
        frontier = std::move(next);
    }
    return elems;
}

std::string SubgroupDescriptor::to_string() const {
    switch (kind) {
        case Kind::Trivial: return "Trivial";
        case Kind::PlusMinusId: return "PlusMinusId";
        case Kind::U: return "U";
        case Kind::B: return "B";
        case Kind::SL2: return "SL2";
        case Kind::GL2: return "GL2";
        case Kind::SO: {
            const Field& K = *F;
            return "SO(" + K.str(qa) + "*x^2 + " + K.str(qb) + "*x*y + " + K.str(qc) + "*y^2)";
        }
        case Kind::DiagonalCyclic: return "DiagonalCyclic(" + F->str(lambda) + ")";
        case Kind::FiniteList: return "FiniteList(" + std::to_string(matrices.size()) + " gens)";
        case Kind::RingSL2: return "SL2(" + ring_text + ")";
    }
    return "?";
}

std::vector<CoreProbeEntry> core_probe(const SubgroupDescriptor& S,
                                       const std::vector<Mat2>& candidates) {
    const FieldPtr& F = S.F;
    std::vector<CoreProbeEntry> out;
    for (const auto& g : candidates) {
        require(S.contains(g), Err::DomainError, "candidate " + g.to_string() + " is not in S");
        if (g.is_identity()) {
            out.push_back({g, CoreProbeEntry::Kind::Identity, "identity, trivially in the core"});
            continue;
        }
        if (g.is_scalar()) {
            // scalars fix every direction; conjugation of tau = (x, y + x^2) separates them
            RingPtr lr = PlaneAut::letter_ring(F);
            Polynomial t2 = Polynomial::monomial(lr, {2}, F->one());
            PlaneAut tau = PlaneAut::triangular(F, t2);
            PlaneAut conj = PlaneAut::linear(g).compose(tau).compose(PlaneAut::linear(g.inverse()));
            require(conj != tau, Err::DomainError, "scalar conjugation witness failed");
            out.push_back({g, CoreProbeEntry::Kind::ConjugationWitness,
                           "tau = (x, y + x^2) conjugates to " + conj.to_string() + " != tau"});
            continue;
        }
        // a non-scalar matrix moves one of three pairwise distinct directions
        std::vector<Direction> probes = {Direction::d0(F), Direction::dinf(F),
                                         Direction::make(F, F->one(), F->one())};
        bool found = false;
        for (const auto& d : probes) {
            auto [va, vb] = g.apply(d.a, d.b);
            Direction img = Direction::make(F, va, vb);
            if (img != d) {
                out.push_back({g, CoreProbeEntry::Kind::MovesDirection,
                               "moves " + d.to_string() + " to " + img.to_string()});
                found = true;
                break;
            }
        }
        require(found, Err::DomainError, "non-scalar matrix fixed all probe directions");
    }
    return out;
}

} // namespace autlin
