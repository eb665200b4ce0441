// tau.hpp -- the ternary square-free Thue word and the Thue-Morse sequence
//
// tau is the fixed point of a -> abc, b -> ac, c -> b starting from a:
//   a b c a c b a b c b a c ...
// Indices into tau are 1-based throughout.

#pragma once

#include "thue/letter.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace thue {

/// Lazily materialised prefix of tau.
///
/// Not synchronised; one owner at a time. The free functions below share a
/// process-wide instance behind a lock.
class TauStream
{
public:
    TauStream();

    /// Color at 1-based index; throws IndexError for index < 1.
    Color at(std::size_t index);

    /// First n colors.
    std::vector<Color> prefix(std::size_t n);

    /// Color at index if already materialised, without extending.
    std::optional<Color> peek(std::size_t index) const;

    /// Number of colors currently materialised.
    std::size_t materialized() const { return buffer_.size(); }

private:
    void extend_to(std::size_t n);

    std::vector<Color> buffer_;
};

/// Image of a word over {a,b,c} under the generating morphism.
std::vector<Color> tau_morphism(const std::vector<Color>& word);

Color tau_at(std::size_t index);
std::vector<Color> tau_prefix(std::size_t n);

/// Parity of the number of 1-bits of n.
int thue_morse_bit(std::uint64_t n);

/// tau[n] derived independently from the Thue-Morse sequence: the number of
/// 1s between the (n-1)-th and n-th zero, mapped 2->a, 1->b, 0->c.
/// Linear in n; meant as a cross-check.
Color tau_via_thue_morse(std::size_t n);

} // namespace thue
