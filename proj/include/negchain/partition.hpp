#ifndef NEGCHAIN_PARTITION_HPP
#define NEGCHAIN_PARTITION_HPP

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "negchain/errors.hpp"

namespace negchain {

enum class PartitionKind { even_odd, half_half, contiguous, one_vs_rest, custom };

// Bipartition of n sites into group A (+1) and group B (-1). On a ring the
// named families are: even-odd (by site parity), half-half (a contiguous
// half starting at a cyclic offset), contiguous m (split n/2-m : n/2+m) and
// one-vs-rest (a single site against the others).
class Partition {
public:
    static Partition even_odd(int n);
    static Partition half_half(int n, int offset = 0);
    static Partition contiguous(int n, int m);
    static Partition one_vs_rest(int n, int site);
    static Partition custom(std::vector<int> labels);

    int size() const { return static_cast<int>(labels_.size()); }
    int label(int i) const { return labels_[i]; }
    const std::vector<int>& labels() const { return labels_; }
    PartitionKind kind() const { return kind_; }
    int parameter() const { return parameter_; }

    std::string name() const;

    // The diagonal of the sign matrix P as a vector of +-1.
    Eigen::VectorXd sign_vector() const;

    std::vector<int> group_a() const;
    int group_a_size() const;

private:
    Partition(PartitionKind kind, int parameter, std::vector<int> labels);

    PartitionKind kind_;
    int parameter_;
    std::vector<int> labels_;
};

} // namespace negchain

#endif
