// letter.hpp -- the seven-letter paired alphabet, game words and square witnesses

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace thue {

/// Second component of a letter.
enum class Color : std::uint8_t { a, b, c, d };

char to_char(Color color);

/// Maps 'a'..'d' to a Color; nullopt for anything else.
std::optional<Color> color_from_char(char ch);

/// One member of the alphabet
///   {(0,a),(0,b),(0,c),(1,a),(1,b),(1,c),(2,d)}.
///
/// Stored as its index 0..6 in that order, so equality and table lookups
/// are a single byte compare. Track 2 occurs exactly with color d.
class Letter
{
public:
    static constexpr int kCount = 7;

    /// (0,a), the first letter of the enumeration.
    constexpr Letter() = default;

    /// Throws InvalidLetter if code is not in [0, 7).
    static Letter from_code(int code);

    constexpr int code() const { return code_; }
    int track() const;
    Color color() const;

    bool is_separator() const { return code_ == 6; }

    friend constexpr bool operator==(Letter, Letter) = default;
    friend constexpr auto operator<=>(Letter, Letter) = default;

private:
    constexpr explicit Letter(std::uint8_t code) : code_(code) {}
    friend Letter make_letter(int, Color);

    std::uint8_t code_ = 0;
};

/// Builds the letter (track, color); throws InvalidLetter for the five
/// pairs outside the alphabet.
Letter make_letter(int track, Color color);

/// All seven letters in enumeration order.
const std::array<Letter, Letter::kCount>& alphabet();

/// The letter (2,d).
Letter separator_letter();

/// Two-character token, e.g. "1c".
std::string format_letter(Letter letter);

/// Inverse of format_letter. Throws ParseError on any other token.
Letter parse_letter(std::string_view token);

std::ostream& operator<<(std::ostream& os, Letter letter);

enum class Starter { AnnStarts, BenStarts };
enum class Player { Ann, Ben };

/// "ann-starts" / "ben-starts".
std::string_view to_string(Starter starter);
/// Throws ParseError for unknown names.
Starter parse_starter(std::string_view text);

/// 'A' or 'B', as used in trace files.
char player_tag(Player player);

/// Player who appends the letter at a 0-based position.
Player player_at(Starter starter, std::size_t index);

/// The jointly built word. Positions are 0-based here; reports that quote
/// positions state their own convention.
struct GameWord
{
    std::vector<Letter> letters;
    Starter starter = Starter::AnnStarts;

    std::size_t size() const { return letters.size(); }
    bool empty() const { return letters.empty(); }
    Player player_at(std::size_t index) const { return thue::player_at(starter, index); }
    std::span<const Letter> view() const { return letters; }
};

/// A square letters[start, start+period) == letters[start+period, start+2*period).
struct SquareWitness
{
    std::size_t start = 0;
    std::size_t period = 1;

    std::size_t end() const { return start + 2 * period; }

    friend bool operator==(const SquareWitness&, const SquareWitness&) = default;
};

/// The subsequence of letters different from target, in order.
std::vector<Letter> delete_letter(std::span<const Letter> word, Letter target);

/// Parses whitespace-separated letter tokens. Throws ParseError.
std::vector<Letter> parse_word(std::string_view text);

/// Space-separated tokens.
std::string format_word(std::span<const Letter> word);

} // namespace thue
