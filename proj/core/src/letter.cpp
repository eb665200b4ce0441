// letter.cpp -- alphabet encoding and word-level helpers

#include "thue/letter.hpp"

#include "thue/errors.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>

namespace thue {

namespace {

constexpr std::array<int, Letter::kCount> kTracks = {0, 0, 0, 1, 1, 1, 2};
constexpr std::array<Color, Letter::kCount> kColors = {
    Color::a, Color::b, Color::c, Color::a, Color::b, Color::c, Color::d};

} // namespace

char to_char(Color color)
{
    return static_cast<char>('a' + static_cast<int>(color));
}

std::optional<Color> color_from_char(char ch)
{
    if (ch < 'a' || ch > 'd')
        return std::nullopt;
    return static_cast<Color>(ch - 'a');
}

Letter Letter::from_code(int code)
{
    if (code < 0 || code >= kCount)
        throw InvalidLetter("letter code " + std::to_string(code) + " outside [0, 7)");
    return Letter(static_cast<std::uint8_t>(code));
}

int Letter::track() const
{
    return kTracks[code_];
}

Color Letter::color() const
{
    return kColors[code_];
}

Letter make_letter(int track, Color color)
{
    for (std::uint8_t i = 0; i < Letter::kCount; ++i) {
        if (kTracks[i] == track && kColors[i] == color)
            return Letter(i);
    }
    std::ostringstream msg;
    msg << "(" << track << "," << to_char(color) << ") is not in the alphabet";
    throw InvalidLetter(msg.str());
}

const std::array<Letter, Letter::kCount>& alphabet()
{
    static const std::array<Letter, Letter::kCount> letters = [] {
        std::array<Letter, Letter::kCount> out{};
        for (int i = 0; i < Letter::kCount; ++i)
            out[i] = Letter::from_code(i);
        return out;
    }();
    return letters;
}

Letter separator_letter()
{
    return Letter::from_code(6);
}

std::string format_letter(Letter letter)
{
    return {static_cast<char>('0' + letter.track()), to_char(letter.color())};
}

Letter parse_letter(std::string_view token)
{
    if (token.size() == 2 && token[0] >= '0' && token[0] <= '2') {
        if (auto color = color_from_char(token[1])) {
            try {
                return make_letter(token[0] - '0', *color);
            } catch (const InvalidLetter&) {
            }
        }
    }
    throw ParseError("invalid letter token '" + std::string(token) + "'");
}

std::ostream& operator<<(std::ostream& os, Letter letter)
{
    return os << format_letter(letter);
}

std::string_view to_string(Starter starter)
{
    return starter == Starter::AnnStarts ? "ann-starts" : "ben-starts";
}

Starter parse_starter(std::string_view text)
{
    if (text == "ann-starts")
        return Starter::AnnStarts;
    if (text == "ben-starts")
        return Starter::BenStarts;
    throw ParseError("unknown mode '" + std::string(text) + "' (expected ann-starts or ben-starts)");
}

char player_tag(Player player)
{
    return player == Player::Ann ? 'A' : 'B';
}

Player player_at(Starter starter, std::size_t index)
{
    const bool even = index % 2 == 0;
    if (starter == Starter::AnnStarts)
        return even ? Player::Ann : Player::Ben;
    return even ? Player::Ben : Player::Ann;
}

std::vector<Letter> delete_letter(std::span<const Letter> word, Letter target)
{
    std::vector<Letter> out;
    out.reserve(word.size());
    std::copy_if(word.begin(), word.end(), std::back_inserter(out),
                 [target](Letter l) { return l != target; });
    return out;
}

std::vector<Letter> parse_word(std::string_view text)
{
    std::vector<Letter> out;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
            ++i;
        std::size_t j = i;
        while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j])))
            ++j;
        if (j > i)
            out.push_back(parse_letter(text.substr(i, j - i)));
        i = j;
    }
    return out;
}

std::string format_word(std::span<const Letter> word)
{
    std::string out;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i)
            out += ' ';
        out += format_letter(word[i]);
    }
    return out;
}

} // namespace thue
