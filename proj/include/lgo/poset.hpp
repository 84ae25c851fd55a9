#ifndef LGO_POSET_HPP
#define LGO_POSET_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lgo
{
    class PosetError : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    /// Finite partial order over labelled elements. The relation is stored
    /// reflexively and transitively closed.
    class Poset
    {
    public:
        Poset() = default;

        /// Closes `pairs` (each meaning first <= second) under reflexivity and
        /// transitivity. Throws PosetError on unknown or repeated labels, and
        /// on a cycle, naming its elements.
        Poset(std::vector<std::string> elements, const std::vector<std::pair<std::string, std::string>> & pairs);

        /// Same, with pairs given by element index.
        static auto from_indices(std::vector<std::string> elements, const std::vector<std::pair<int, int>> & pairs) -> Poset;

        auto size() const -> int { return static_cast<int>(_elements.size()); }
        auto elements() const -> const std::vector<std::string> & { return _elements; }
        auto label(int i) const -> const std::string & { return _elements[i]; }
        auto index_of(const std::string & label) const -> int;
        auto leq(int x, int y) const -> bool { return _leq[x][y]; }

    private:
        std::vector<std::string> _elements;
        std::vector<std::vector<bool>> _leq;
    };
}

#endif
