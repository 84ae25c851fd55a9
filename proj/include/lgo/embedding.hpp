#ifndef LGO_EMBEDDING_HPP
#define LGO_EMBEDDING_HPP

#include <lgo/poset.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace lgo
{
    auto is_prime(std::uint64_t n) -> bool;

    /// A squarefree integer held as its set of prime factors, so that
    /// divisibility is a subset test and never overflows.
    class PrimeSet
    {
    public:
        PrimeSet() = default;

        /// Throws std::invalid_argument on a non-prime or repeated member.
        explicit PrimeSet(std::vector<std::uint64_t> primes);

        auto primes() const -> const std::vector<std::uint64_t> & { return _primes; }

        /// The product, or nullopt if it does not fit in 64 bits.
        auto value() const -> std::optional<std::uint64_t>;

        /// True iff this number divides `other`.
        auto divides(const PrimeSet & other) const -> bool;

        /// e.g. "3x5x7"; "1" for the empty set.
        auto to_string() const -> std::string;

        friend auto operator<=>(const PrimeSet &, const PrimeSet &) = default;

    private:
        std::vector<std::uint64_t> _primes;  // sorted
    };

    /// A finite set of squarefree integers, an element of (P, <=_P).
    using UniversalImage = std::vector<PrimeSet>;  // sorted, distinct

    /// Distinct primes attached to poset elements; their numeric order is the
    /// auxiliary linear order used to split <=_Q.
    struct PrimeLabeling
    {
        std::vector<std::uint64_t> primes;
    };

    /// Defaults to 3, 5, 7, 11, ... in element order. Throws
    /// std::invalid_argument on a wrong count, non-prime or repeated labels.
    auto prime_labeling(const Poset & q, const std::optional<std::vector<std::uint64_t>> & labels = std::nullopt)
        -> PrimeLabeling;

    using Relation = std::vector<std::vector<bool>>;

    struct Decomposition
    {
        Relation forward;   // x <=_Q y and label(x) <= label(y)
        Relation backward;  // x <=_Q y and label(x) >= label(y)
    };

    auto decompose(const Poset & q, const PrimeLabeling & labels) -> Decomposition;

    /// E(x): the primes of every y with x <=_b y.
    auto embed_divisibility(const Poset & q, const PrimeLabeling & labels) -> std::vector<PrimeSet>;

    /// U(x) = { E(y) : y <=_f x }.
    auto embed_universal(const Poset & q, const PrimeLabeling & labels) -> std::vector<UniversalImage>;

    /// A <=_P B: every a in A has a divisor in B.
    auto leq_p(const UniversalImage & a, const UniversalImage & b) -> bool;

    enum class Comparison
    {
        less,
        greater,
        equivalent,   // mutually <=_P; possible for distinct sets
        incomparable
    };

    auto compare(const UniversalImage & a, const UniversalImage & b) -> Comparison;

    auto to_string(const UniversalImage & a) -> std::string;
}

#endif
