// square.hpp -- square detection: brute-force oracle and incremental checker
//
// A square is a factor xx; its period is |x|. Every function takes a
// min_period so the same code serves the game rule (2) and plain
// square-freeness (1).

#pragma once

#include "thue/errors.hpp"
#include "thue/letter.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace thue {

/// Ground-truth scan: the square with the smallest start, then the smallest
/// period, among those with period >= min_period. O(n^2 * period).
template <typename T>
std::optional<SquareWitness> find_square(std::span<const T> word, std::size_t min_period = 2)
{
    const std::size_t n = word.size();
    min_period = std::max<std::size_t>(min_period, 1);
    for (std::size_t start = 0; start < n; ++start) {
        for (std::size_t p = min_period; start + 2 * p <= n; ++p) {
            if (std::equal(word.begin() + start, word.begin() + start + p,
                           word.begin() + start + p))
                return SquareWitness{start, p};
        }
    }
    return std::nullopt;
}

template <typename T>
std::optional<SquareWitness> find_square(const std::vector<T>& word, std::size_t min_period = 2)
{
    return find_square(std::span<const T>(word), min_period);
}

/// Largest p >= 2 such that appending one letter can complete a square of
/// period p at the end of word (the last 2p-1 letters read u v with v a
/// proper prefix of u of length p-1). Zero if there is none.
template <typename T>
std::size_t near_square_threat(std::span<const T> word)
{
    const std::size_t n = word.size();
    for (std::size_t p = (n + 1) / 2; p >= 2; --p) {
        const std::size_t s = n - (2 * p - 1);
        if (std::equal(word.begin() + s, word.begin() + s + p - 1, word.begin() + s + p))
            return p;
    }
    return 0;
}

namespace detail {

inline std::uint64_t symbol_value(Letter l)
{
    return static_cast<std::uint64_t>(l.code()) + 1;
}

inline std::uint64_t symbol_value(Color c)
{
    return static_cast<std::uint64_t>(c) + 1;
}

__extension__ typedef unsigned __int128 uint128;

struct FingerprintLane
{
    std::uint64_t modulus;
    std::uint64_t base;

    std::uint64_t mul(std::uint64_t x, std::uint64_t y) const
    {
        return static_cast<std::uint64_t>((static_cast<uint128>(x) * y) % modulus);
    }
};

inline constexpr std::uint64_t kMersenne61 = (std::uint64_t{1} << 61) - 1;

} // namespace detail

/// Append-only word that reports, after each append, a square ending at the
/// new last letter.
///
/// Candidate periods are screened with two independent polynomial
/// fingerprints and every hit is confirmed letter by letter, so a reported
/// witness is always a real square. Supports truncation for backtracking
/// searches.
template <typename T>
class BasicIncrementalChecker
{
public:
    explicit BasicIncrementalChecker(std::size_t min_period = 2)
      : min_period_(std::max<std::size_t>(min_period, 1))
    {
        for (int k = 0; k < 2; ++k) {
            prefix_[k].push_back(0);
            power_[k].push_back(1);
        }
    }

    std::size_t min_period() const { return min_period_; }
    std::size_t size() const { return word_.size(); }
    std::span<const T> word() const { return word_; }

    /// Appends and returns the square of smallest period >= min_period that
    /// ends at the new last position, if any.
    std::optional<SquareWitness> append_and_check(T symbol)
    {
        push(symbol);
        return square_ending_here(min_period_);
    }

    /// As above, for an arbitrary threshold, without appending.
    std::optional<SquareWitness> square_ending_here(std::size_t min_period) const
    {
        const std::size_t n = word_.size();
        for (std::size_t p = std::max<std::size_t>(min_period, 1); 2 * p <= n; ++p) {
            const std::size_t s = n - 2 * p;
            if (same_fingerprint(s, s + p, p) &&
                std::equal(word_.begin() + s, word_.begin() + s + p, word_.begin() + s + p))
                return SquareWitness{s, p};
        }
        return std::nullopt;
    }

    void push(T symbol)
    {
        word_.push_back(symbol);
        const std::uint64_t v = detail::symbol_value(symbol);
        for (int k = 0; k < 2; ++k) {
            const auto& lane = kLanes[k];
            prefix_[k].push_back((lane.mul(prefix_[k].back(), lane.base) + v) % lane.modulus);
            power_[k].push_back(lane.mul(power_[k].back(), lane.base));
        }
    }

    /// Drops letters beyond the first n.
    void truncate(std::size_t n)
    {
        if (n >= word_.size())
            return;
        word_.resize(n);
        for (int k = 0; k < 2; ++k) {
            prefix_[k].resize(n + 1);
            power_[k].resize(n + 1);
        }
    }

private:
    static constexpr detail::FingerprintLane kLanes[2] = {
        {detail::kMersenne61, 0x1f3d5b79a2c4e6f1ULL % detail::kMersenne61},
        {1'000'000'007ULL, 911'382'323ULL},
    };

    std::uint64_t hash(int k, std::size_t from, std::size_t len) const
    {
        const auto& lane = kLanes[k];
        const std::uint64_t sub = lane.mul(prefix_[k][from], power_[k][len]);
        return (prefix_[k][from + len] + lane.modulus - sub) % lane.modulus;
    }

    bool same_fingerprint(std::size_t a, std::size_t b, std::size_t len) const
    {
        return hash(0, a, len) == hash(0, b, len) && hash(1, a, len) == hash(1, b, len);
    }

    std::size_t min_period_;
    std::vector<T> word_;
    std::vector<std::uint64_t> prefix_[2];
    std::vector<std::uint64_t> power_[2];
};

using IncrementalChecker = BasicIncrementalChecker<Letter>;

/// Inserts new_symbol into base before each listed base index (0..size)
/// and reports whether the result is free of squares with period >= 2.
///
/// Throws PreconditionError if base has a square of any period, contains
/// new_symbol, or an index repeats (which would place two new symbols side
/// by side). Squares of period >= 2 can only appear if the insertion-claim
/// for square-free words is false.
template <typename T>
bool check_insertion_claim(std::span<const T> base, std::vector<std::size_t> insertions,
                           T new_symbol)
{
    if (find_square(base, 1))
        throw PreconditionError("base word is not square-free");
    if (std::find(base.begin(), base.end(), new_symbol) != base.end())
        throw PreconditionError("inserted symbol already occurs in the base word");
    std::sort(insertions.begin(), insertions.end());
    if (std::adjacent_find(insertions.begin(), insertions.end()) != insertions.end())
        throw PreconditionError("repeated insertion index creates a unary square");
    if (!insertions.empty() && insertions.back() > base.size())
        throw PreconditionError("insertion index beyond the end of the base word");

    std::vector<T> out;
    out.reserve(base.size() + insertions.size());
    auto next = insertions.begin();
    for (std::size_t i = 0; i <= base.size(); ++i) {
        if (next != insertions.end() && *next == i) {
            out.push_back(new_symbol);
            ++next;
        }
        if (i < base.size())
            out.push_back(base[i]);
    }
    return !find_square(std::span<const T>(out), 2);
}

} // namespace thue
