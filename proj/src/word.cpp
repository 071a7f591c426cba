#include "rank2/word.hpp"

#include <algorithm>
#include <set>

namespace rank2 {

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
    std::set<std::string> seen;
    for (const auto& n : names_) {
        if (n.empty()) throw UnknownGenerator("empty generator name");
        if (!seen.insert(n).second) throw UnknownGenerator("duplicate generator name '" + n + "'");
    }
}

std::optional<std::size_t> Alphabet::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return i;
    return std::nullopt;
}

std::size_t Alphabet::require_index(const std::string& name) const {
    if (auto i = index_of(name)) return *i;
    throw UnknownGenerator("'" + name + "' is not a generator of this algebra");
}

Word Word::concat(const Word& o) const {
    std::vector<std::uint32_t> out;
    out.reserve(letters_.size() + o.letters_.size());
    out.insert(out.end(), letters_.begin(), letters_.end());
    out.insert(out.end(), o.letters_.begin(), o.letters_.end());
    return Word(std::move(out));
}

bool Word::contains(std::uint32_t letter) const {
    return std::find(letters_.begin(), letters_.end(), letter) != letters_.end();
}

bool WordDeglexLess::operator()(const Word& a, const Word& b) const noexcept {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return std::lexicographical_compare(a.letters().begin(), a.letters().end(),
                                        b.letters().begin(), b.letters().end(),
                                        [](std::uint32_t x, std::uint32_t y) { return x > y; });
}

std::size_t word_basis_size(std::size_t n_letters, std::size_t degree_bound, std::size_t cap) {
    unsigned __int128 total = 0, layer = 1;
    for (std::size_t k = 0; k <= degree_bound; ++k) {
        total += layer;
        if (total > cap)
            throw DegreeTooLarge("word basis up to degree " + std::to_string(degree_bound) +
                                 " exceeds the enumeration cap");
        layer *= (n_letters == 0 ? 0 : n_letters);
    }
    return static_cast<std::size_t>(total);
}

std::size_t word_basis_index(const Word& w, std::size_t n_letters) {
    unsigned __int128 offset = 0, layer = 1;
    for (std::size_t k = 0; k < w.degree(); ++k) {
        offset += layer;
        layer *= n_letters;
    }
    unsigned __int128 value = 0;
    for (std::uint32_t letter : w.letters()) value = value * n_letters + letter;
    return static_cast<std::size_t>(offset + value);
}

Word word_at_basis_index(std::size_t index, std::size_t n_letters) {
    std::size_t k = 0;
    unsigned __int128 layer = 1, offset = 0;
    while (offset + layer <= index) {
        offset += layer;
        layer *= n_letters;
        ++k;
    }
    std::size_t value = index - static_cast<std::size_t>(offset);
    std::vector<std::uint32_t> letters(k);
    for (std::size_t i = k; i-- > 0;) {
        letters[i] = static_cast<std::uint32_t>(value % n_letters);
        value /= n_letters;
    }
    return Word(std::move(letters));
}

}  // namespace rank2
