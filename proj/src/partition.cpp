#include "negchain/partition.hpp"

namespace negchain {

namespace {

void check_ring_size(int n) {
    if (n < 2 || n % 2 != 0)
        throw ValidationError("bad partition params: n = " + std::to_string(n) +
                              " must be even and >= 2");
}

} // namespace

Partition::Partition(PartitionKind kind, int parameter, std::vector<int> labels)
    : kind_(kind), parameter_(parameter), labels_(std::move(labels)) {
    int a = 0, b = 0;
    for (int s : labels_) {
        if (s != 1 && s != -1) throw ValidationError("bad partition params: labels must be +-1");
        (s == 1 ? a : b)++;
    }
    if (a == 0 || b == 0)
        throw ValidationError("bad partition params: both groups must be nonempty");
}

Partition Partition::even_odd(int n) {
    check_ring_size(n);
    std::vector<int> labels(n);
    for (int i = 0; i < n; ++i) labels[i] = (i % 2 == 0) ? 1 : -1;
    return Partition(PartitionKind::even_odd, 0, std::move(labels));
}

Partition Partition::half_half(int n, int offset) {
    check_ring_size(n);
    if (offset < 0 || offset >= n)
        throw ValidationError("bad partition params: offset = " + std::to_string(offset) +
                              " outside [0, n)");
    std::vector<int> labels(n, -1);
    for (int i = 0; i < n / 2; ++i) labels[(offset + i) % n] = 1;
    return Partition(PartitionKind::half_half, offset, std::move(labels));
}

Partition Partition::contiguous(int n, int m) {
    check_ring_size(n);
    if (m < 0 || m > n / 2 - 1)
        throw ValidationError("bad partition params: m = " + std::to_string(m) +
                              " outside [0, n/2 - 1]");
    std::vector<int> labels(n, -1);
    for (int i = 0; i < n / 2 - m; ++i) labels[i] = 1;
    return Partition(PartitionKind::contiguous, m, std::move(labels));
}

Partition Partition::one_vs_rest(int n, int site) {
    check_ring_size(n);
    if (site < 0 || site >= n)
        throw ValidationError("bad partition params: site = " + std::to_string(site) +
                              " outside [0, n)");
    std::vector<int> labels(n, -1);
    labels[site] = 1;
    return Partition(PartitionKind::one_vs_rest, site, std::move(labels));
}

Partition Partition::custom(std::vector<int> labels) {
    if (labels.size() < 2) throw ValidationError("bad partition params: need at least 2 sites");
    return Partition(PartitionKind::custom, 0, std::move(labels));
}

std::string Partition::name() const {
    switch (kind_) {
        case PartitionKind::even_odd: return "even_odd";
        case PartitionKind::half_half: return "half_half[" + std::to_string(parameter_) + "]";
        case PartitionKind::contiguous: return "contiguous[" + std::to_string(parameter_) + "]";
        case PartitionKind::one_vs_rest: return "one_vs_rest[" + std::to_string(parameter_) + "]";
        case PartitionKind::custom: return "custom";
    }
    return "custom";
}

Eigen::VectorXd Partition::sign_vector() const {
    Eigen::VectorXd p(size());
    for (int i = 0; i < size(); ++i) p[i] = labels_[i];
    return p;
}

std::vector<int> Partition::group_a() const {
    std::vector<int> sites;
    for (int i = 0; i < size(); ++i)
        if (labels_[i] == 1) sites.push_back(i);
    return sites;
}

int Partition::group_a_size() const { return static_cast<int>(group_a().size()); }

} // namespace negchain
