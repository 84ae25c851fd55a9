#include <lgo/poset.hpp>

#include <algorithm>
#include <set>

using std::pair;
using std::string;
using std::vector;

namespace lgo
{
    Poset::Poset(vector<string> elements, const vector<pair<string, string>> & pairs)
    {
        vector<pair<int, int>> indexed;
        auto find = [&](const string & s) {
            auto it = std::find(elements.begin(), elements.end(), s);
            if (it == elements.end())
                throw PosetError("unknown poset element '" + s + "'");
            return static_cast<int>(it - elements.begin());
        };
        for (auto & [x, y] : pairs)
            indexed.emplace_back(find(x), find(y));
        *this = from_indices(std::move(elements), indexed);
    }

    auto Poset::from_indices(vector<string> elements, const vector<pair<int, int>> & pairs) -> Poset
    {
        if (std::set<string>(elements.begin(), elements.end()).size() != elements.size())
            throw PosetError("poset element labels must be distinct");

        int n = static_cast<int>(elements.size());
        vector<vector<bool>> leq(n, vector<bool>(n, false));
        for (int i = 0; i < n; ++i)
            leq[i][i] = true;
        for (auto & [x, y] : pairs) {
            if (x < 0 || y < 0 || x >= n || y >= n)
                throw PosetError("poset pair out of range");
            leq[x][y] = true;
        }

        for (int k = 0; k < n; ++k)
            for (int i = 0; i < n; ++i)
                if (leq[i][k])
                    for (int j = 0; j < n; ++j)
                        if (leq[k][j])
                            leq[i][j] = true;

        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (leq[i][j] && leq[j][i]) {
                    // Report the elements lying on a cycle through i and j.
                    string cycle;
                    for (int k = 0; k < n; ++k)
                        if (leq[i][k] && leq[k][i])
                            cycle += (cycle.empty() ? "" : ", ") + elements[k];
                    throw PosetError("relation is not antisymmetric; cycle through {" + cycle + "}");
                }

        Poset result;
        result._elements = std::move(elements);
        result._leq = std::move(leq);
        return result;
    }

    auto Poset::index_of(const string & label) const -> int
    {
        auto it = std::find(_elements.begin(), _elements.end(), label);
        return it == _elements.end() ? -1 : static_cast<int>(it - _elements.begin());
    }
}
