// oracles.hpp -- brute-force reference implementations used only by tests
//
// Everything here is written directly from the definitions, without going
// through the library's fast paths.

#pragma once

#include "thue/letter.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace thue::oracle {

/// tau by repeated string substitution.
inline std::string tau_string(std::size_t n)
{
    std::string w = "a";
    while (w.size() < n) {
        std::string next;
        for (char c : w)
            next += c == 'a' ? "abc" : c == 'b' ? "ac" : "b";
        w = next;
    }
    return w.substr(0, n);
}

template <typename T>
bool has_square_ending_at(const std::vector<T>& w, std::size_t end, std::size_t min_period)
{
    for (std::size_t p = min_period; 2 * p <= end; ++p) {
        bool eq = true;
        for (std::size_t i = 0; i < p && eq; ++i)
            eq = w[end - 2 * p + i] == w[end - p + i];
        if (eq)
            return true;
    }
    return false;
}

template <typename T>
bool has_square(const std::vector<T>& w, std::size_t min_period)
{
    for (std::size_t end = 1; end <= w.size(); ++end) {
        if (has_square_ending_at(w, end, min_period))
            return true;
    }
    return false;
}

/// Ann's strategy evaluated straight from the track formulas
///   opening  1 - ceil(M/2)
///   from 2   1 - floor(M/2) * P - M * (2 - M)
///   switch   3 - P - M
/// with colors tau[count] and count frozen on (2,d). Returns the whole word.
inline std::vector<Letter> game_word(Starter mode, const std::vector<Letter>& bens)
{
    const std::string tau = tau_string(4 * bens.size() + 8);
    std::vector<Letter> w;
    std::size_t count = 1;
    auto colored = [&](int track) {
        if (track == 2)
            return make_letter(2, Color::d);
        return make_letter(track, *color_from_char(tau[count++ - 1]));
    };
    if (mode == Starter::AnnStarts)
        w.push_back(colored(0));
    std::optional<int> fav;
    int prev = -1;
    for (Letter b : bens) {
        w.push_back(b);
        const int m = b.track();
        int t;
        if (!fav)
            t = 1 - (m + 1) / 2;
        else if (*fav == 2)
            t = 1 - (m / 2) * prev - m * (2 - m);
        else if (m == *fav)
            t = 3 - prev - m;
        else
            t = *fav;
        w.push_back(colored(t));
        fav = t;
        prev = m;
    }
    return w;
}

/// Calls f(bens) for every Ben sequence of the given length, in
/// lexicographic alphabet order.
template <typename F>
void for_each_sequence(std::size_t depth, F&& f)
{
    std::vector<int> digits(depth, 0);
    std::vector<Letter> bens(depth, alphabet()[0]);
    for (;;) {
        f(bens);
        std::size_t i = depth;
        while (i > 0) {
            --i;
            if (++digits[i] < Letter::kCount) {
                bens[i] = alphabet()[digits[i]];
                break;
            }
            digits[i] = 0;
            bens[i] = alphabet()[0];
            if (i == 0)
                return;
        }
        if (depth == 0)
            return;
    }
}

} // namespace thue::oracle
