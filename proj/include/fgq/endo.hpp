#pragma once

#include <optional>
#include <vector>

#include "fgq/word.hpp"

namespace fgq {

class extraction_error : public error {
public:
    using error::error;
};

/// An endomorphism of the free group, given by the images of the generators.
/// Determined by those images, so Endo equality is image-list equality.
class Endo {
public:
    explicit Endo(std::vector<Word> images) : images_(std::move(images)) {
        if (images_.empty())
            throw error("an endomorphism needs at least one generator image");
        int r = rank();
        for (const Word& w : images_)
            if (w.rank() != r)
                throw rank_mismatch(r, w.rank());
    }

    static Endo identity(int rank) {
        std::vector<Word> images;
        images.reserve(static_cast<std::size_t>(rank));
        for (int g = 0; g < rank; ++g)
            images.push_back(Word::generator(rank, g));
        return Endo(std::move(images));
    }

    int rank() const { return static_cast<int>(images_.size()); }
    const Word& image(int gen) const { return images_.at(static_cast<std::size_t>(gen)); }
    const std::vector<Word>& images() const { return images_; }

    friend bool operator==(const Endo&, const Endo&) = default;

private:
    std::vector<Word> images_;
};

inline Word apply(const Endo& e, const Word& w) {
    if (e.rank() != w.rank())
        throw rank_mismatch(e.rank(), w.rank());
    WordBuilder b(w.rank());
    for (const auto& s : w.syllables())
        b.append_power(e.image(s.gen), s.exp);
    return b.take();
}

/// (f o g)(w) = f(g(w)).
inline Endo compose(const Endo& f, const Endo& g) {
    if (f.rank() != g.rank())
        throw rank_mismatch(f.rank(), g.rank());
    std::vector<Word> images;
    images.reserve(g.images().size());
    for (const Word& w : g.images())
        images.push_back(apply(f, w));
    return Endo(std::move(images));
}

/// I(x): w -> x w x^-1.
inline Endo inner(const Word& x) {
    std::vector<Word> images;
    images.reserve(static_cast<std::size_t>(x.rank()));
    for (int g = 0; g < x.rank(); ++g)
        images.push_back(conj(x, Word::generator(x.rank(), g)));
    return Endo(std::move(images));
}

/// e^n by iterated composition, n >= 0.
inline Endo endo_power(const Endo& e, int n) {
    if (n < 0)
        throw error("endo_power: negative exponent");
    Endo p = Endo::identity(e.rank());
    for (int i = 0; i < n; ++i)
        p = compose(e, p);
    return p;
}

/// Square integer matrix with exact arithmetic. Entries are guarded against
/// exceeding 2^62 in magnitude so products cannot overflow silently.
class IntMatrix {
public:
    explicit IntMatrix(int n) : n_(n), entries_(static_cast<std::size_t>(n) * n, 0) {
        if (n < 1)
            throw error("matrix dimension must be positive");
    }

    static IntMatrix identity(int n) {
        IntMatrix m(n);
        for (int i = 0; i < n; ++i)
            m.at(i, i) = 1;
        return m;
    }

    int dim() const { return n_; }

    std::int64_t& at(int i, int j) { return entries_[static_cast<std::size_t>(i) * n_ + j]; }
    std::int64_t at(int i, int j) const { return entries_[static_cast<std::size_t>(i) * n_ + j]; }

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
        if (a.n_ != b.n_)
            throw rank_mismatch(a.n_, b.n_);
        IntMatrix c(a.n_);
        for (int i = 0; i < a.n_; ++i)
            for (int j = 0; j < a.n_; ++j) {
                std::int64_t acc = 0;
                for (int k = 0; k < a.n_; ++k)
                    acc = detail::checked_add(acc, detail::checked_mul(a.at(i, k), b.at(k, j)));
                c.at(i, j) = guard(acc);
            }
        return c;
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    std::int64_t det() const {
        IntMatrix m = *this;
        std::int64_t sign = 1;
        std::int64_t prev = 1;
        for (int k = 0; k < n_ - 1; ++k) {
            if (m.at(k, k) == 0) {
                int p = k + 1;
                while (p < n_ && m.at(p, k) == 0)
                    ++p;
                if (p == n_)
                    return 0;
                for (int j = 0; j < n_; ++j)
                    std::swap(m.at(k, j), m.at(p, j));
                sign = -sign;
            }
            for (int i = k + 1; i < n_; ++i)
                for (int j = k + 1; j < n_; ++j) {
                    std::int64_t num =
                        detail::checked_add(detail::checked_mul(m.at(i, j), m.at(k, k)),
                                            detail::checked_neg(detail::checked_mul(
                                                m.at(i, k), m.at(k, j))));
                    m.at(i, j) = num / prev;  // divides exactly in Bareiss elimination
                }
            prev = m.at(k, k);
        }
        return detail::checked_mul(sign, m.at(n_ - 1, n_ - 1));
    }

private:
    static std::int64_t guard(std::int64_t v) {
        constexpr std::int64_t limit = std::int64_t{1} << 62;
        if (v > limit || v < -limit)
            throw overflow_error("matrix entry exceeds 2^62");
        return v;
    }

    int n_;
    std::vector<std::int64_t> entries_;
};

/// Column j is the total exponent vector of the image of generator j, so
/// abelianization(compose(f, g)) = abelianization(f) * abelianization(g).
inline IntMatrix abelianization(const Endo& e) {
    IntMatrix m(e.rank());
    for (int j = 0; j < e.rank(); ++j)
        for (const auto& s : e.image(j).syllables())
            m.at(s.gen, j) = detail::checked_add(m.at(s.gen, j), s.exp);
    return m;
}

/// Least n <= bound with m^n = identity, or nullopt.
inline std::optional<int> matrix_order(const IntMatrix& m, int bound) {
    if (bound < 1)
        throw error("matrix_order: bound must be >= 1");
    const IntMatrix id = IntMatrix::identity(m.dim());
    IntMatrix p = m;
    for (int n = 1; n <= bound; ++n) {
        if (p == id)
            return n;
        if (n < bound)
            p = p * m;
    }
    return std::nullopt;
}

/// For rank 2 the kernel of Aut(F) -> GL(2,Z) is exactly Inn(F), so an
/// automorphism with identity abelianization is I(x) for a unique x (the
/// center of F is trivial). This extracts that x:
///
///   e(a) = x a x^-1 reduces to p a p^-1 with p the a-power-free prefix of x,
///   so x = p a^j for some integer j, and j is read off from e(b), which must
///   reduce to (p a^j) b (p a^j)^-1.
///
/// Returns nullopt when the abelianization is not the identity. Throws
/// extraction_error when the abelianization is the identity but e is not a
/// genuine inner automorphism (possible only for non-automorphisms).
inline std::optional<Word> inner_witness_rank2(const Endo& e) {
    if (e.rank() != 2)
        throw error("inner_witness_rank2: rank must be 2");
    if (abelianization(e) != IntMatrix::identity(2))
        return std::nullopt;

    const Word a = Word::generator(2, 0);
    const Word b = Word::generator(2, 1);

    auto [p, core] = conjugacy_decomposition(e.image(0));
    if (core != a)
        throw extraction_error("image of a is not conjugate to a: " + to_string(e.image(0)));

    // e(b) conjugated back by p must be a^j b a^-j; solve for j.
    Word v = mul(mul(inv(p), e.image(1)), p);
    std::int64_t j = 0;
    const auto& syl = v.syllables();
    if (syl.size() == 1 && syl[0] == Syllable{1, 1}) {
        j = 0;
    } else if (syl.size() == 3 && syl[0].gen == 0 && syl[1] == Syllable{1, 1} &&
               syl[2].gen == 0 && syl[2].exp == -syl[0].exp) {
        j = syl[0].exp;
    } else {
        throw extraction_error("image of b does not match a^j b a^-j after stripping: " +
                               to_string(v));
    }

    Word witness = mul(p, pow(a, j));
    if (e != inner(witness))
        throw extraction_error("candidate witness failed verification: " + to_string(witness));
    return witness;
}

/// A machine-checkable proof that e has infinite order: e^power = I(witness)
/// with witness != 1, hence e^(power*n) = I(witness^n) != id for all n != 0.
struct InnerPowerCertificate {
    int power = 0;
    Word witness;

    friend bool operator==(const InnerPowerCertificate&, const InnerPowerCertificate&) = default;
};

/// Least m <= bound such that e^m is inner with a nontrivial witness,
/// or nullopt if no such power exists within the bound.
inline std::optional<InnerPowerCertificate> infinite_order_certificate(const Endo& e, int bound) {
    if (e.rank() != 2)
        throw error("infinite_order_certificate: rank must be 2");
    if (bound < 1)
        throw error("infinite_order_certificate: bound must be >= 1");
    Endo p = e;
    for (int m = 1; m <= bound; ++m) {
        if (auto x = inner_witness_rank2(p); x && !x->is_identity())
            return InnerPowerCertificate{m, *x};
        if (m < bound)
            p = compose(e, p);
    }
    return std::nullopt;
}

}  // namespace fgq
