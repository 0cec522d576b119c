#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ramlab/arith/integer.hpp"
#include "ramlab/arith/matrix.hpp"

namespace ramlab {

using GroupElement = std::vector<Integer>;

enum class Order { LT, EQ, GT };

const char* to_string(Order o) noexcept;

/// Z^n with the lexicographic order, or Z^2 ordered through
/// (x, y) -> x + y*sqrt(d) for a positive non-square d.
class OrderedGroup {
   public:
    enum class Kind { LexZ, RealEmbedded };

    static OrderedGroup lex(std::size_t n);
    static OrderedGroup real_embedded(const Integer& d);

    Kind kind() const noexcept { return kind_; }
    std::size_t rank() const noexcept { return rank_; }
    /// The radicand (RealEmbedded only).
    const Integer& radicand() const noexcept { return d_; }
    std::string to_string() const;

    bool operator==(const OrderedGroup&) const = default;

   private:
    OrderedGroup(Kind k, std::size_t n, Integer d) : kind_(k), rank_(n), d_(std::move(d)) {}
    Kind kind_;
    std::size_t rank_;
    Integer d_;
};

/// A subgroup of Z^n given by generators, kept in row Hermite normal form.
class Subgroup {
   public:
    Subgroup(std::size_t n, const std::vector<GroupElement>& generators);

    std::size_t ambient_rank() const noexcept { return n_; }
    /// Nonzero HNF rows, ordered by pivot column.
    const Matrix<Integer>& hnf() const noexcept { return hnf_; }
    std::vector<GroupElement> generators() const;
    std::size_t rank() const noexcept { return hnf_.rows(); }
    bool contains(const GroupElement& v) const;
    /// [Z^n : H], or nullopt when H has rank < n.
    std::optional<Integer> index() const;
    std::string to_string() const;

    bool operator==(const Subgroup& other) const;

   private:
    std::size_t n_;
    Matrix<Integer> hnf_;
};

/// H of finite index in G; the columns of basis generate H.
struct FiniteIndexSubgroup {
    FiniteIndexSubgroup(OrderedGroup parent, std::vector<GroupElement> columns);

    OrderedGroup parent;
    std::vector<GroupElement> basis;
    Subgroup subgroup() const { return Subgroup(parent.rank(), basis); }
};

struct InitialIndexResult {
    Integer epsilon;
    std::optional<GroupElement> least_positive;
    Integer index;
};

Order compare(const OrderedGroup& g, const GroupElement& a, const GroupElement& b);
long height(const OrderedGroup& g);

/// The chain 0 < {0}^(n-1) x Z < ... < Z^n of a lexicographic group.
std::vector<Subgroup> isolated_subgroups(const OrderedGroup& g);

/// A pair 0 <= y <= x with x in H and y outside H, if H is not isolated.
struct ConvexityWitness {
    GroupElement x;
    GroupElement y;
};
std::optional<ConvexityWitness> convexity_witness(const OrderedGroup& g, const Subgroup& h);

/// G/H with the induced order; throws NotIsolated with a witness otherwise.
OrderedGroup quotient_order(const OrderedGroup& g, const Subgroup& h);

InitialIndexResult initial_index(const OrderedGroup& g, const FiniteIndexSubgroup& h);

/// `Z`, `Z^3lex`, `Z+Z*sqrt(2)`.
OrderedGroup parse_group(std::string_view text);
/// `[[2,0],[0,3]]`: each inner list is one generator (a column).
std::vector<GroupElement> parse_generators(std::string_view text);

std::string element_to_string(const GroupElement& v);

}  // namespace ramlab
