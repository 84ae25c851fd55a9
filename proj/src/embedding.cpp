#include <lgo/embedding.hpp>

#include <algorithm>
#include <set>
#include <stdexcept>

using std::uint64_t;
using std::vector;

namespace lgo
{
    auto is_prime(uint64_t n) -> bool
    {
        if (n < 2)
            return false;
        for (uint64_t p = 2; p <= n / p; ++p)
            if (n % p == 0)
                return false;
        return true;
    }

    PrimeSet::PrimeSet(vector<uint64_t> primes) :
        _primes(std::move(primes))
    {
        std::sort(_primes.begin(), _primes.end());
        if (std::adjacent_find(_primes.begin(), _primes.end()) != _primes.end())
            throw std::invalid_argument("prime set has a repeated member");
        for (auto p : _primes)
            if (! is_prime(p))
                throw std::invalid_argument(std::to_string(p) + " is not prime");
    }

    auto PrimeSet::value() const -> std::optional<uint64_t>
    {
        uint64_t result = 1;
        for (auto p : _primes)
            if (__builtin_mul_overflow(result, p, &result))
                return std::nullopt;
        return result;
    }

    auto PrimeSet::divides(const PrimeSet & other) const -> bool
    {
        return std::includes(other._primes.begin(), other._primes.end(), _primes.begin(), _primes.end());
    }

    auto PrimeSet::to_string() const -> std::string
    {
        if (_primes.empty())
            return "1";
        std::string result;
        for (auto p : _primes)
            result += (result.empty() ? "" : "x") + std::to_string(p);
        return result;
    }

    auto prime_labeling(const Poset & q, const std::optional<vector<uint64_t>> & labels) -> PrimeLabeling
    {
        PrimeLabeling result;
        if (labels) {
            if (static_cast<int>(labels->size()) != q.size())
                throw std::invalid_argument("need exactly one label per poset element");
            if (std::set<uint64_t>(labels->begin(), labels->end()).size() != labels->size())
                throw std::invalid_argument("prime labels must be distinct");
            for (auto p : *labels)
                if (! is_prime(p))
                    throw std::invalid_argument("label " + std::to_string(p) + " is not prime");
            result.primes = *labels;
            return result;
        }

        for (uint64_t p = 3; static_cast<int>(result.primes.size()) < q.size(); p += 2)
            if (is_prime(p))
                result.primes.push_back(p);
        return result;
    }

    auto decompose(const Poset & q, const PrimeLabeling & labels) -> Decomposition
    {
        int n = q.size();
        Decomposition result{Relation(n, vector<bool>(n, false)), Relation(n, vector<bool>(n, false))};
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                if (q.leq(x, y)) {
                    result.forward[x][y] = labels.primes[x] <= labels.primes[y];
                    result.backward[x][y] = labels.primes[x] >= labels.primes[y];
                }
        return result;
    }

    auto embed_divisibility(const Poset & q, const PrimeLabeling & labels) -> vector<PrimeSet>
    {
        auto parts = decompose(q, labels);
        vector<PrimeSet> result;
        for (int x = 0; x < q.size(); ++x) {
            vector<uint64_t> primes;
            for (int y = 0; y < q.size(); ++y)
                if (parts.backward[x][y])
                    primes.push_back(labels.primes[y]);
            result.emplace_back(std::move(primes));
        }
        return result;
    }

    auto embed_universal(const Poset & q, const PrimeLabeling & labels) -> vector<UniversalImage>
    {
        auto parts = decompose(q, labels);
        auto e = embed_divisibility(q, labels);
        vector<UniversalImage> result;
        for (int x = 0; x < q.size(); ++x) {
            std::set<PrimeSet> image;
            for (int y = 0; y < q.size(); ++y)
                if (parts.forward[y][x])
                    image.insert(e[y]);
            result.emplace_back(image.begin(), image.end());
        }
        return result;
    }

    auto leq_p(const UniversalImage & a, const UniversalImage & b) -> bool
    {
        return std::all_of(a.begin(), a.end(), [&](const PrimeSet & x) {
            return std::any_of(b.begin(), b.end(), [&](const PrimeSet & y) { return y.divides(x); });
        });
    }

    auto compare(const UniversalImage & a, const UniversalImage & b) -> Comparison
    {
        bool ab = leq_p(a, b), ba = leq_p(b, a);
        if (ab && ba)
            return Comparison::equivalent;
        if (ab)
            return Comparison::less;
        if (ba)
            return Comparison::greater;
        return Comparison::incomparable;
    }

    auto to_string(const UniversalImage & a) -> std::string
    {
        std::string result = "{";
        for (auto & x : a)
            result += (result.size() > 1 ? "," : "") + x.to_string();
        return result + "}";
    }
}
