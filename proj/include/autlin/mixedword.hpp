#ifndef AUTLIN_MIXEDWORD_HPP
#define AUTLIN_MIXEDWORD_HPP

#include "autlin/descriptor.hpp"
#include "autlin/planeaut.hpp"

namespace autlin {

/// One free-product letter: u(v) = v + f(l_d(v)) * (a,b) with f in t^2 K[t].
struct Letter {
    Direction delta;
    Polynomial f; // univariate over the field, zero constant and linear terms

    bool operator==(const Letter& o) const { return delta == o.delta && f == o.f; }
    std::string to_string() const;
};

/// Normal form in S |x *_d E_d(K): phi = s o u_1 o ... o u_m, letters reduced
/// (adjacent distinct directions, every f nonzero).
class MixedWord {
public:
    MixedWord(Mat2 s, std::vector<Letter> letters); // validates the normal form
    static MixedWord identity(const FieldPtr& F);
    static MixedWord of_letter(Letter l);
    static MixedWord of_linear(Mat2 s);

    const Mat2& s() const { return s_; }
    const std::vector<Letter>& letters() const { return letters_; }
    const FieldPtr& field() const { return s_.F; }
    std::size_t length() const { return letters_.size(); }
    bool is_identity() const;
    /// Product of the letter degrees (1 for the empty word).
    long degree() const;
    bool operator==(const MixedWord& o) const;
    bool operator!=(const MixedWord& o) const { return !(*this == o); }
    std::string to_string() const;

private:
    Mat2 s_;
    std::vector<Letter> letters_;
};

/// g u g^-1 for linear g, with the direction put back in canonical coordinates
/// and f rescaled accordingly (f'(s) = e * f(c * s)).
Letter conj_letter(const Letter& u, const Mat2& g);

/// Validates that f lies in t^2 K[t] and is nonzero.
void check_letter_poly(const Polynomial& f);

MixedWord word_mul(const MixedWord& w1, const MixedWord& w2);
MixedWord word_inverse(const MixedWord& w);

PlaneAut from_mixed_word(const MixedWord& w);

/// Peels phi into its normal form via factor_vdk. Requires phi(0) = 0; when S
/// is given, also checks the linear part lands in S.
MixedWord to_mixed_word(const PlaneAut& phi, const SubgroupDescriptor* S = nullptr);

} // namespace autlin

#endif
