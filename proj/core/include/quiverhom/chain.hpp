#pragma once

#include "quiverhom/intmatrix.hpp"

#include <string>
#include <vector>

namespace quiverhom {

/**
 * Finitely supported chain complex of free abelian groups, concentrated in
 * degrees [0, top_degree].  boundary(n) has shape rank(n-1) x rank(n); the
 * identity d(n-1) d(n) = 0 is verified at construction.
 */
class ChainComplex {
public:
    ChainComplex() = default;

    /// `boundaries[n]` is d_n for n >= 1; index 0 is ignored and may be a
    /// placeholder.  Labels are optional basis names per degree.
    static ChainComplex validate(std::vector<std::size_t> ranks, std::vector<IntMatrix> boundaries,
                                 std::vector<std::vector<std::string>> labels = {});
    static ChainComplex zero() { return {}; }
    /// Z concentrated in degree 0.
    static ChainComplex point();

    int top_degree() const { return static_cast<int>(ranks_.size()) - 1; }
    std::size_t rank(int n) const;
    /// d_n as a rank(n-1) x rank(n) matrix, valid for every n.
    IntMatrix boundary(int n) const;
    const std::vector<std::string>& labels(int n) const;

    bool operator==(const ChainComplex&) const = default;

private:
    std::vector<std::size_t> ranks_;
    std::vector<IntMatrix> boundaries_;
    std::vector<std::vector<std::string>> labels_;
    static const std::vector<std::string> no_labels_;
};

/**
 * Chain map between two complexes; matrix(n) has shape
 * target.rank(n) x source.rank(n) and commutes with the boundaries.
 */
class ChainMap {
public:
    ChainMap() = default;
    static ChainMap validate(ChainComplex source, ChainComplex target,
                             std::vector<IntMatrix> matrices);
    static ChainMap identity(const ChainComplex& c);
    static ChainMap zero(const ChainComplex& source, const ChainComplex& target);

    const ChainComplex& source() const { return source_; }
    const ChainComplex& target() const { return target_; }
    IntMatrix matrix(int n) const;

    bool operator==(const ChainMap&) const = default;

private:
    ChainComplex source_, target_;
    std::vector<IntMatrix> matrices_;
};

ChainMap compose(const ChainMap& g, const ChainMap& f);
ChainMap chain_map_sum(const ChainMap& a, const ChainMap& b);
ChainComplex direct_sum(const ChainComplex& a, const ChainComplex& b);

bool is_chain_map(const ChainComplex& source, const ChainComplex& target,
                  const std::vector<IntMatrix>& matrices, std::string* why = nullptr);

}  // namespace quiverhom
