#include "drgossip/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace drgossip {

DevicePartition partition_with_shard_order(const LabeledDataset& ds, int num_devices,
                                           int shards_per_device,
                                           const std::vector<int>& shard_order) {
    if (num_devices < 1 || shards_per_device < 1)
        throw std::invalid_argument("partition: needs num_devices, shards_per_device >= 1");
    const long total_shards = static_cast<long>(num_devices) * shards_per_device;
    if (total_shards > ds.num_samples)
        throw std::invalid_argument("partition: more shards than samples");
    if (shard_order.size() != static_cast<std::size_t>(total_shards))
        throw std::invalid_argument("partition: shard_order size mismatch");

    // Stable label sort; original index breaks ties.
    std::vector<int> order(ds.num_samples);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return ds.labels[a] < ds.labels[b]; });

    const int kept = static_cast<int>(ds.num_samples - ds.num_samples % total_shards);
    const int shard_size = static_cast<int>(kept / total_shards);

    DevicePartition part;
    part.shards_per_device = shards_per_device;
    part.shard_size = shard_size;
    part.assignments.assign(num_devices, {});
    for (auto& list : part.assignments) list.reserve(shards_per_device * shard_size);

    for (long s = 0; s < total_shards; ++s) {
        const int shard = shard_order[s];
        if (shard < 0 || shard >= total_shards)
            throw std::invalid_argument("partition: shard_order entry out of range");
        auto& list = part.assignments[s % num_devices];
        const int begin = shard * shard_size;
        for (int i = 0; i < shard_size; ++i) list.push_back(order[begin + i]);
    }
    return part;
}

DevicePartition partition_pathological(const LabeledDataset& ds, int num_devices,
                                       int shards_per_device, std::uint64_t seed) {
    const long total_shards = static_cast<long>(num_devices) * shards_per_device;
    if (total_shards > ds.num_samples)
        throw std::invalid_argument("partition: more shards than samples");
    std::vector<int> shard_order(total_shards);
    std::iota(shard_order.begin(), shard_order.end(), 0);
    Rng rng = make_rng(seed);
    shuffle_vec(shard_order, rng);
    return partition_with_shard_order(ds, num_devices, shards_per_device, shard_order);
}

std::vector<int> minibatch(const std::vector<int>& device_indices, int batch_size, Rng& rng) {
    if (batch_size < 1) throw std::invalid_argument("minibatch: batch_size must be >= 1");
    if (device_indices.empty()) throw std::invalid_argument("minibatch: empty device list");
    std::vector<int> batch(batch_size);
    for (int b = 0; b < batch_size; ++b)
        batch[b] = device_indices[bounded(rng, device_indices.size())];
    return batch;
}

std::vector<int> minibatch(const DevicePartition& part, int device, int batch_size, Rng& rng) {
    return minibatch(part.assignments.at(device), batch_size, rng);
}

TrainTestSplit split_train_test(const DevicePartition& part, double test_fraction,
                                std::uint64_t seed) {
    if (!(test_fraction > 0.0) || test_fraction >= 1.0)
        throw std::invalid_argument("split_train_test: fraction must be in (0,1)");
    TrainTestSplit split;
    const int k = static_cast<int>(part.assignments.size());
    split.train.resize(k);
    split.test.resize(k);
    for (int i = 0; i < k; ++i) {
        std::vector<int> list = part.assignments[i];
        if (list.size() < 2)
            throw std::invalid_argument("split_train_test: device needs >= 2 samples");
        Rng rng = make_rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
        shuffle_vec(list, rng);
        std::size_t n_test = static_cast<std::size_t>(test_fraction * list.size());
        n_test = std::max<std::size_t>(1, std::min(n_test, list.size() - 1));
        split.test[i].assign(list.begin(), list.begin() + n_test);
        split.train[i].assign(list.begin() + n_test, list.end());
        std::sort(split.test[i].begin(), split.test[i].end());
        std::sort(split.train[i].begin(), split.train[i].end());
    }
    return split;
}

std::vector<std::vector<int>> class_histograms(const DevicePartition& part,
                                               const LabeledDataset& ds) {
    std::vector<std::vector<int>> hist(part.assignments.size(),
                                       std::vector<int>(ds.num_classes, 0));
    for (std::size_t dev = 0; dev < part.assignments.size(); ++dev)
        for (int idx : part.assignments[dev]) ++hist[dev][ds.labels[idx]];
    return hist;
}

} // namespace drgossip
