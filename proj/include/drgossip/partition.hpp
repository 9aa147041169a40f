#pragma once

// Pathological non-IID sharding: sort by label, cut into equal shards,
// deal a seeded shard permutation round-robin across devices.

#include "drgossip/dataset.hpp"
#include "drgossip/rng.hpp"

#include <cstdint>
#include <vector>

namespace drgossip {

struct DevicePartition {
    std::vector<std::vector<int>> assignments; // per device, indices into the dataset
    int shards_per_device = 0;
    int shard_size = 0;
};

// Deterministic core: shard_order[s] names the shard dealt at step s
// (device s % K receives it). Exposed so tests can pass the identity order.
DevicePartition partition_with_shard_order(const LabeledDataset& ds, int num_devices,
                                           int shards_per_device,
                                           const std::vector<int>& shard_order);

// Shard order drawn by Fisher-Yates from the seed. Excess samples beyond
// a multiple of K*shards_per_device are trimmed from the tail of the
// label-sorted order.
DevicePartition partition_pathological(const LabeledDataset& ds, int num_devices,
                                       int shards_per_device, std::uint64_t seed);

// batch_size indices sampled uniformly with replacement from the device's
// list, using that device's own stream.
std::vector<int> minibatch(const DevicePartition& part, int device, int batch_size, Rng& rng);
std::vector<int> minibatch(const std::vector<int>& device_indices, int batch_size, Rng& rng);

// Per-device holdout: each device's list is shuffled (seeded per device)
// and split into test (floor(fraction * size), at least 1) and train.
// Both halves are returned sorted.
struct TrainTestSplit {
    std::vector<std::vector<int>> train;
    std::vector<std::vector<int>> test;
};
TrainTestSplit split_train_test(const DevicePartition& part, double test_fraction,
                                std::uint64_t seed);

// counts[device][class] over the partition's assignments.
std::vector<std::vector<int>> class_histograms(const DevicePartition& part,
                                               const LabeledDataset& ds);

} // namespace drgossip
