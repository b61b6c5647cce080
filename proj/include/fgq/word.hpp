#pragma once

#include <cassert>
#include <charconv>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fgq {

class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class overflow_error : public error {
public:
    using error::error;
};

class rank_mismatch : public error {
public:
    rank_mismatch(int lhs, int rhs)
        : error("rank mismatch: " + std::to_string(lhs) + " vs " + std::to_string(rhs)) {}
};

class parse_error : public error {
public:
    parse_error(const std::string& msg, std::size_t position)
        : error("parse error at position " + std::to_string(position) + ": " + msg),
          message_(msg),
          position_(position) {}

    const std::string& message() const { return message_; }
    std::size_t position() const { return position_; }

private:
    std::string message_;
    std::size_t position_;
};

namespace detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw overflow_error("integer overflow in addition");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw overflow_error("integer overflow in multiplication");
    return r;
}

inline std::int64_t checked_neg(std::int64_t a) {
    if (a == INT64_MIN)
        throw overflow_error("integer overflow in negation");
    return -a;
}

}  // namespace detail

/// One maximal run g^e of a single generator, e != 0.
struct Syllable {
    int gen;
    std::int64_t exp;

    friend bool operator==(const Syllable&, const Syllable&) = default;
    friend auto operator<=>(const Syllable&, const Syllable&) = default;
};

/// A reduced word in the free group of the given rank. The syllable list is
/// the canonical normal form: adjacent syllables have distinct generators and
/// no exponent is zero, so two Words are equal as group elements iff their
/// representations are identical.
class Word {
public:
    explicit Word(int rank) : rank_(check_rank(rank)) {}

    Word(int rank, std::vector<Syllable> syllables)
        : rank_(check_rank(rank)), syllables_(std::move(syllables)) {
        assert(is_reduced());
    }

    static Word generator(int rank, int gen, std::int64_t exp = 1) {
        if (gen < 0 || gen >= rank)
            throw error("generator index " + std::to_string(gen) + " out of range for rank " +
                        std::to_string(rank));
        Word w(rank);
        if (exp != 0)
            w.syllables_.push_back({gen, exp});
        return w;
    }

    int rank() const { return rank_; }
    bool is_identity() const { return syllables_.empty(); }
    std::size_t syllable_count() const { return syllables_.size(); }
    const std::vector<Syllable>& syllables() const { return syllables_; }

    /// Letter length (sum of |exponent| over syllables).
    std::int64_t length() const {
        std::int64_t n = 0;
        for (const auto& s : syllables_)
            n = detail::checked_add(n, s.exp < 0 ? detail::checked_neg(s.exp) : s.exp);
        return n;
    }

    friend bool operator==(const Word&, const Word&) = default;
    friend auto operator<=>(const Word&, const Word&) = default;

private:
    static int check_rank(int rank) {
        if (rank < 1)
            throw error("rank must be positive, got " + std::to_string(rank));
        return rank;
    }

    bool is_reduced() const {
        for (std::size_t i = 0; i < syllables_.size(); ++i) {
            if (syllables_[i].exp == 0)
                return false;
            if (syllables_[i].gen < 0 || syllables_[i].gen >= rank_)
                return false;
            if (i > 0 && syllables_[i].gen == syllables_[i - 1].gen)
                return false;
        }
        return true;
    }

    int rank_;
    std::vector<Syllable> syllables_;
};

/// Accumulates syllables into a reduced word in a single left-to-right pass.
/// Each push merges with the current last syllable; a merge that cancels to
/// zero pops it, which exposes the previous syllable to the next push, so
/// cascading cancellations come out automatically.
class WordBuilder {
public:
    explicit WordBuilder(int rank) : rank_(rank) {
        if (rank < 1)
            throw error("rank must be positive, got " + std::to_string(rank));
    }

    void reserve(std::size_t n) { syllables_.reserve(n); }

    WordBuilder& push(int gen, std::int64_t exp) {
        assert(gen >= 0 && gen < rank_);
        if (exp == 0)
            return *this;
        if (!syllables_.empty() && syllables_.back().gen == gen) {
            std::int64_t merged = detail::checked_add(syllables_.back().exp, exp);
            if (merged == 0)
                syllables_.pop_back();
            else
                syllables_.back().exp = merged;
        } else {
            syllables_.push_back({gen, exp});
        }
        return *this;
    }

    WordBuilder& append(const Word& w) {
        check_rank(w);
        for (const auto& s : w.syllables())
            push(s.gen, s.exp);
        return *this;
    }

    WordBuilder& append_inverse(const Word& w) {
        check_rank(w);
        const auto& syl = w.syllables();
        for (auto it = syl.rbegin(); it != syl.rend(); ++it)
            push(it->gen, detail::checked_neg(it->exp));
        return *this;
    }

    WordBuilder& append_power(const Word& w, std::int64_t n) {
        check_rank(w);
        if (n == 0 || w.is_identity())
            return *this;
        if (w.syllable_count() == 1) {
            const auto& s = w.syllables().front();
            return push(s.gen, detail::checked_mul(s.exp, n));
        }
        if (n > 0) {
            for (std::int64_t i = 0; i < n; ++i)
                append(w);
        } else {
            for (std::int64_t i = 0; i < -n; ++i)
                append_inverse(w);
        }
        return *this;
    }

    Word take() { return Word(rank_, std::move(syllables_)); }

private:
    void check_rank(const Word& w) const {
        if (w.rank() != rank_)
            throw rank_mismatch(rank_, w.rank());
    }

    int rank_;
    std::vector<Syllable> syllables_;
};

inline Word mul(const Word& u, const Word& v) {
    if (u.rank() != v.rank())
        throw rank_mismatch(u.rank(), v.rank());
    WordBuilder b(u.rank());
    b.reserve(u.syllable_count() + v.syllable_count());
    b.append(u).append(v);
    return b.take();
}

inline Word inv(const Word& w) {
    WordBuilder b(w.rank());
    b.reserve(w.syllable_count());
    b.append_inverse(w);
    return b.take();
}

inline Word pow(const Word& w, std::int64_t n) {
    WordBuilder b(w.rank());
    b.append_power(w, n);
    return b.take();
}

/// x g x^-1, the conjugate of g by x (matches the inner automorphism I(x)).
inline Word conj(const Word& x, const Word& g) {
    if (x.rank() != g.rank())
        throw rank_mismatch(x.rank(), g.rank());
    WordBuilder b(x.rank());
    b.reserve(2 * x.syllable_count() + g.syllable_count());
    b.append(x).append(g).append_inverse(x);
    return b.take();
}

/// [u, v] = u v u^-1 v^-1.
inline Word comm(const Word& u, const Word& v) {
    if (u.rank() != v.rank())
        throw rank_mismatch(u.rank(), v.rank());
    WordBuilder b(u.rank());
    b.reserve(2 * (u.syllable_count() + v.syllable_count()));
    b.append(u).append(v).append_inverse(u).append_inverse(v);
    return b.take();
}

/// Splits w = p m p^-1 with m cyclically reduced and p maximal.
/// Returns {p, m}.
inline std::pair<Word, Word> conjugacy_decomposition(const Word& w) {
    std::vector<Syllable> m(w.syllables());
    WordBuilder prefix(w.rank());
    while (m.size() >= 3) {
        Syllable& first = m.front();
        Syllable& last = m.back();
        if (first.gen != last.gen || (first.exp > 0) == (last.exp > 0))
            break;
        std::int64_t afirst = first.exp < 0 ? -first.exp : first.exp;
        std::int64_t alast = last.exp < 0 ? -last.exp : last.exp;
        std::int64_t t = (first.exp > 0 ? 1 : -1) * std::min(afirst, alast);
        prefix.push(first.gen, t);
        first.exp -= t;
        last.exp += t;
        if (last.exp == 0)
            m.pop_back();
        if (first.exp == 0)
            m.erase(m.begin());
    }
    return {prefix.take(), Word(w.rank(), std::move(m))};
}

inline std::string generator_name(int rank, int gen) {
    if (rank <= 26)
        return std::string(1, static_cast<char>('a' + gen));
    return "x" + std::to_string(gen);
}

/// Canonical text form: terms separated by single spaces, "^e" omitted when
/// e = 1, e.g. "a^2 b a^-2". The identity word prints as the empty string.
inline std::string to_string(const Word& w) {
    std::string out;
    for (const auto& s : w.syllables()) {
        if (!out.empty())
            out += ' ';
        out += generator_name(w.rank(), s.gen);
        if (s.exp != 1) {
            out += '^';
            out += std::to_string(s.exp);
        }
    }
    return out;
}

/// Like to_string but prints the identity as "1"; for human-facing output.
inline std::string display(const Word& w) {
    return w.is_identity() ? "1" : to_string(w);
}

/// Parses the word grammar:  word := term* ; term := gen exp? ;
/// gen := 'a'..'z' for rank <= 26, or "x<index>" for higher ranks;
/// exp := '^' signed-integer (nonzero). Whitespace-insensitive.
inline Word parse_word(std::string_view text, int rank) {
    if (rank < 1)
        throw error("rank must be positive, got " + std::to_string(rank));
    WordBuilder b(rank);
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\n' ||
                                   text[i] == '\r'))
            ++i;
    };
    auto parse_int = [&](bool forbid_zero) -> std::int64_t {
        skip_ws();
        std::size_t start = i;
        if (i < text.size() && (text[i] == '+' || text[i] == '-'))
            ++i;
        std::size_t digits_start = i;
        while (i < text.size() && text[i] >= '0' && text[i] <= '9')
            ++i;
        if (i == digits_start)
            throw parse_error("expected integer", start);
        std::int64_t value = 0;
        auto first = text.data() + start;
        auto last = text.data() + i;
        if (*first == '+')
            ++first;  // from_chars does not accept a leading '+'
        auto res = std::from_chars(first, last, value);
        if (res.ec != std::errc() || res.ptr != last)
            throw parse_error("integer out of range", start);
        if (forbid_zero && value == 0)
            throw parse_error("exponent must be nonzero", start);
        return value;
    };
    while (true) {
        skip_ws();
        if (i >= text.size())
            break;
        std::size_t term_pos = i;
        int gen = -1;
        char c = text[i];
        if (rank <= 26) {
            if (c < 'a' || c > 'z')
                throw parse_error(std::string("expected generator letter, got '") + c + "'", i);
            gen = c - 'a';
            ++i;
        } else {
            if (c != 'x')
                throw parse_error(std::string("expected generator 'x<index>', got '") + c + "'",
                                  i);
            ++i;
            std::int64_t idx = parse_int(false);
            if (idx < 0)
                throw parse_error("generator index must be nonnegative", term_pos);
            gen = static_cast<int>(idx);
        }
        if (gen >= rank)
            throw parse_error("generator '" + generator_name(rank, gen) +
                                  "' out of range for rank " + std::to_string(rank),
                              term_pos);
        std::int64_t exp = 1;
        skip_ws();
        if (i < text.size() && text[i] == '^') {
            ++i;
            exp = parse_int(true);
        }
        b.push(gen, exp);
    }
    return b.take();
}

}  // namespace fgq
