#include "quiverhom/chain.hpp"

namespace quiverhom {

const std::vector<std::string> ChainComplex::no_labels_{};

ChainComplex ChainComplex::validate(std::vector<std::size_t> ranks,
                                    std::vector<IntMatrix> boundaries,
                                    std::vector<std::vector<std::string>> labels) {
    // trim trailing zero ranks so equal complexes compare equal
    while (!ranks.empty() && ranks.back() == 0)
        ranks.pop_back();
    boundaries.resize(ranks.size());
    if (!labels.empty())
        labels.resize(ranks.size());

    ChainComplex c;
    c.ranks_ = std::move(ranks);
    if (!c.ranks_.empty()) {
        boundaries[0] = IntMatrix(0, c.ranks_[0]);
        for (std::size_t n = 1; n < c.ranks_.size(); ++n) {
            if (boundaries[n].rows() != c.ranks_[n - 1] || boundaries[n].cols() != c.ranks_[n])
                throw ValidationError("chain complex: boundary " + std::to_string(n) +
                                      " has shape " + std::to_string(boundaries[n].rows()) + "x" +
                                      std::to_string(boundaries[n].cols()) + ", expected " +
                                      std::to_string(c.ranks_[n - 1]) + "x" +
                                      std::to_string(c.ranks_[n]));
            if (n >= 2 && !(boundaries[n - 1] * boundaries[n]).is_zero())
                throw ValidationError("chain complex: d" + std::to_string(n - 1) + " d" +
                                      std::to_string(n) + " != 0");
        }
    }
    c.boundaries_ = std::move(boundaries);
    if (!labels.empty()) {
        for (std::size_t n = 0; n < c.ranks_.size(); ++n)
            if (!labels[n].empty() && labels[n].size() != c.ranks_[n])
                throw ValidationError("chain complex: label count mismatch in degree " +
                                      std::to_string(n));
        c.labels_ = std::move(labels);
    }
    return c;
}

ChainComplex ChainComplex::point() {
    return validate({1}, {IntMatrix(0, 1)}, {{"pt"}});
}

std::size_t ChainComplex::rank(int n) const {
    if (n < 0 || n > top_degree())
        return 0;
    return ranks_[static_cast<std::size_t>(n)];
}

IntMatrix ChainComplex::boundary(int n) const {
    if (n >= 1 && n <= top_degree())
        return boundaries_[static_cast<std::size_t>(n)];
    return IntMatrix(rank(n - 1), rank(n));
}

const std::vector<std::string>& ChainComplex::labels(int n) const {
    if (n < 0 || n > top_degree() || labels_.empty())
        return no_labels_;
    return labels_[static_cast<std::size_t>(n)];
}

bool is_chain_map(const ChainComplex& source, const ChainComplex& target,
                  const std::vector<IntMatrix>& matrices, std::string* why) {
    auto mat = [&](int n) -> IntMatrix {
        if (n >= 0 && n < static_cast<int>(matrices.size()))
            return matrices[static_cast<std::size_t>(n)];
        return IntMatrix(target.rank(n), source.rank(n));
    };
    int top = std::max(source.top_degree(), target.top_degree());
    for (int n = 0; n <= top; ++n) {
        IntMatrix m = mat(n);
        if (m.rows() != target.rank(n) || m.cols() != source.rank(n)) {
            if (why)
                *why = "degree " + std::to_string(n) + " matrix has wrong shape";
            return false;
        }
    }
    for (int n = 1; n <= top + 1; ++n) {
        if (!(target.boundary(n) * mat(n) == mat(n - 1) * source.boundary(n))) {
            if (why)
                *why = "square at degree " + std::to_string(n) + " does not commute";
            return false;
        }
    }
    return true;
}

ChainMap ChainMap::validate(ChainComplex source, ChainComplex target,
                            std::vector<IntMatrix> matrices) {
    std::string why;
    int top = std::max(source.top_degree(), target.top_degree());
    matrices.resize(static_cast<std::size_t>(std::max(top + 1, 0)));
    for (int n = 0; n <= top; ++n) {
        IntMatrix& m = matrices[static_cast<std::size_t>(n)];
        if (m.rows() == 0 && m.cols() == 0)
            m = IntMatrix(target.rank(n), source.rank(n));
    }
    if (!is_chain_map(source, target, matrices, &why))
        throw ValidationError("chain map: " + why);
    ChainMap f;
    f.source_ = std::move(source);
    f.target_ = std::move(target);
    f.matrices_ = std::move(matrices);
    return f;
}

ChainMap ChainMap::identity(const ChainComplex& c) {
    std::vector<IntMatrix> mats;
    for (int n = 0; n <= c.top_degree(); ++n)
        mats.push_back(IntMatrix::identity(c.rank(n)));
    return validate(c, c, std::move(mats));
}

ChainMap ChainMap::zero(const ChainComplex& source, const ChainComplex& target) {
    return validate(source, target, {});
}

IntMatrix ChainMap::matrix(int n) const {
    if (n >= 0 && n < static_cast<int>(matrices_.size()))
        return matrices_[static_cast<std::size_t>(n)];
    return IntMatrix(target_.rank(n), source_.rank(n));
}

ChainMap compose(const ChainMap& g, const ChainMap& f) {
    if (!(g.source() == f.target()))
        throw ValidationError("chain map composition: source/target mismatch");
    std::vector<IntMatrix> mats;
    int top = std::max(f.source().top_degree(), g.target().top_degree());
    for (int n = 0; n <= top; ++n)
        mats.push_back(g.matrix(n) * f.matrix(n));
    return ChainMap::validate(f.source(), g.target(), std::move(mats));
}

ChainMap chain_map_sum(const ChainMap& a, const ChainMap& b) {
    if (!(a.source() == b.source()) || !(a.target() == b.target()))
        throw ValidationError("chain map sum: shape mismatch");
    std::vector<IntMatrix> mats;
    int top = std::max(a.source().top_degree(), a.target().top_degree());
    for (int n = 0; n <= top; ++n)
        mats.push_back(a.matrix(n) + b.matrix(n));
    return ChainMap::validate(a.source(), a.target(), std::move(mats));
}

ChainComplex direct_sum(const ChainComplex& a, const ChainComplex& b) {
    int top = std::max(a.top_degree(), b.top_degree());
    std::vector<std::size_t> ranks;
    std::vector<IntMatrix> boundaries;
    std::vector<std::vector<std::string>> labels;
    for (int n = 0; n <= top; ++n) {
        ranks.push_back(a.rank(n) + b.rank(n));
        boundaries.push_back(block_diag(a.boundary(n), b.boundary(n)));
        std::vector<std::string> lab;
        for (const std::string& s : a.labels(n))
            lab.push_back(s + "#L");
        for (const std::string& s : b.labels(n))
            lab.push_back(s + "#R");
        if (lab.size() != ranks.back())
            lab.clear();
        labels.push_back(std::move(lab));
    }
    return ChainComplex::validate(std::move(ranks), std::move(boundaries), std::move(labels));
}

}  // namespace quiverhom
