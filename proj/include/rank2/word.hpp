#pragma once

// Ordered generator alphabets and monomial words of the free algebra.
// The alphabet declaration order fixes the deglex monomial order used
// everywhere: canonical printing, coefficient vectors, root normalization.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rank2/errors.hpp"

namespace rank2 {

class Alphabet {
public:
    explicit Alphabet(std::vector<std::string> names);

    std::size_t size() const noexcept { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const noexcept { return names_; }
    std::optional<std::size_t> index_of(const std::string& name) const;
    // Throws UnknownGenerator.
    std::size_t require_index(const std::string& name) const;

    bool operator==(const Alphabet& o) const noexcept { return names_ == o.names_; }
    bool operator!=(const Alphabet& o) const noexcept { return !(*this == o); }

private:
    std::vector<std::string> names_;
};

class Word {
public:
    Word() = default;
    explicit Word(std::vector<std::uint32_t> letters) : letters_(std::move(letters)) {}

    static Word unit() { return Word(); }
    static Word single(std::uint32_t letter) { return Word({letter}); }

    std::size_t degree() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }
    const std::vector<std::uint32_t>& letters() const noexcept { return letters_; }

    Word concat(const Word& o) const;
    bool contains(std::uint32_t letter) const;

    bool operator==(const Word& o) const noexcept { return letters_ == o.letters_; }
    bool operator!=(const Word& o) const noexcept { return !(*this == o); }

private:
    std::vector<std::uint32_t> letters_;
};

// Deglex: degree first; within a degree the word on earlier alphabet letters
// is the larger monomial (x > y when x precedes y in the alphabet).
struct WordDeglexLess {
    bool operator()(const Word& a, const Word& b) const noexcept;
};

// Enumeration of all words of degree <= d: degree ascending, and within a
// degree by letter-index sequence (lexicographic ascending), i.e. deglex
// descending monomials. This is the basis order of coefficient vectors.
inline constexpr std::size_t kDefaultBasisCap = 1'000'000;

std::size_t word_basis_size(std::size_t n_letters, std::size_t degree_bound,
                            std::size_t cap = kDefaultBasisCap);
std::size_t word_basis_index(const Word& w, std::size_t n_letters);
Word word_at_basis_index(std::size_t index, std::size_t n_letters);

}  // namespace rank2
