#ifndef TRILIST_COMMON_HPP
#define TRILIST_COMMON_HPP

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace trilist {

using VertexId = std::uint32_t;

inline constexpr VertexId kInvalidVertex = static_cast<VertexId>(-1);

// Parse failure in one of the text formats; line numbers are 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what),
          line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// Raised when an exhaustive oracle is asked for more than its guard allows.
class GuardExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Unbiased draw from [0, bound). mt19937_64 output is fixed by the standard,
// so results are reproducible across platforms (std::uniform_int_distribution
// is not).
inline std::uint64_t bounded_rand(std::mt19937_64& rng, std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("bounded_rand: zero bound");
    const std::uint64_t limit = ~std::uint64_t{0} - ~std::uint64_t{0} % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

}  // namespace trilist

#endif  // TRILIST_COMMON_HPP
