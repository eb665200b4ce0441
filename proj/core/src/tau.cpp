// tau.cpp -- tau generation by morphism doubling, plus the Thue-Morse route

#include "thue/tau.hpp"

#include "thue/errors.hpp"

#include <bit>
#include <mutex>
#include <shared_mutex>
#include <string>

namespace thue {

std::vector<Color> tau_morphism(const std::vector<Color>& word)
{
    std::vector<Color> out;
    out.reserve(word.size() * 2 + 2);
    for (Color c : word) {
        switch (c) {
        case Color::a:
            out.insert(out.end(), {Color::a, Color::b, Color::c});
            break;
        case Color::b:
            out.insert(out.end(), {Color::a, Color::c});
            break;
        case Color::c:
            out.push_back(Color::b);
            break;
        case Color::d:
            throw PreconditionError("tau morphism is undefined on d");
        }
    }
    return out;
}

TauStream::TauStream() : buffer_{Color::a} {}

void TauStream::extend_to(std::size_t n)
{
    // h(prefix) is again a prefix of the fixed point, and strictly longer.
    while (buffer_.size() < n)
        buffer_ = tau_morphism(buffer_);
}

Color TauStream::at(std::size_t index)
{
    if (index < 1)
        throw IndexError("tau index must be >= 1, got " + std::to_string(index));
    extend_to(index);
    return buffer_[index - 1];
}

std::optional<Color> TauStream::peek(std::size_t index) const
{
    if (index < 1 || index > buffer_.size())
        return std::nullopt;
    return buffer_[index - 1];
}

std::vector<Color> TauStream::prefix(std::size_t n)
{
    extend_to(n);
    return {buffer_.begin(), buffer_.begin() + static_cast<std::ptrdiff_t>(n)};
}

namespace {

// Covers every game the verifier can reach without taking the lock.
constexpr std::size_t kHotPrefix = 1 << 14;

const std::vector<Color>& hot_prefix()
{
    static const std::vector<Color> table = TauStream().prefix(kHotPrefix);
    return table;
}

struct SharedStream
{
    std::shared_mutex mutex;
    TauStream stream;
};

SharedStream& shared_stream()
{
    static SharedStream s;
    return s;
}

} // namespace

Color tau_at(std::size_t index)
{
    if (index < 1)
        throw IndexError("tau index must be >= 1, got " + std::to_string(index));
    if (index <= kHotPrefix)
        return hot_prefix()[index - 1];
    auto& s = shared_stream();
    {
        std::shared_lock lock(s.mutex);
        if (auto c = s.stream.peek(index))
            return *c;
    }
    std::unique_lock lock(s.mutex);
    return s.stream.at(index);
}

std::vector<Color> tau_prefix(std::size_t n)
{
    if (n <= kHotPrefix) {
        const auto& t = hot_prefix();
        return {t.begin(), t.begin() + static_cast<std::ptrdiff_t>(n)};
    }
    auto& s = shared_stream();
    std::unique_lock lock(s.mutex);
    return s.stream.prefix(n);
}

int thue_morse_bit(std::uint64_t n)
{
    return std::popcount(n) & 1;
}

Color tau_via_thue_morse(std::size_t n)
{
    if (n < 1)
        throw IndexError("tau index must be >= 1, got " + std::to_string(n));
    // Skip to the (n-1)-th zero (0-based), then count ones up to the next one.
    std::uint64_t pos = 0;
    std::size_t zeros_seen = 0;
    for (;; ++pos) {
        if (thue_morse_bit(pos) == 0) {
            if (zeros_seen == n - 1)
                break;
            ++zeros_seen;
        }
    }
    int ones = 0;
    for (++pos; thue_morse_bit(pos) != 0; ++pos)
        ++ones;
    switch (ones) {
    case 2:
        return Color::a;
    case 1:
        return Color::b;
    case 0:
        return Color::c;
    default:
        throw StateError("Thue-Morse has no run of " + std::to_string(ones) + " ones");
    }
}

} // namespace thue
