#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <unordered_map>
#include <vector>

namespace tkge::data {

/// One fact as it appears in a TSV split file.
struct RawQuadruple {
    std::string subject;
    std::string relation;
    std::string object;
    std::string timestamp;
};

/// Integer-indexed fact. `r` may name a reciprocal relation (id >= n_relations).
struct Quadruple {
    std::int32_t s = 0;
    std::int32_t r = 0;
    std::int32_t o = 0;
    std::int32_t t = 0;

    bool operator==(const Quadruple&) const = default;
};

/// Bijective token <-> id maps. Entities and relations are sorted
/// lexicographically; timestamp ids follow the sorted order of their labels,
/// so ISO date labels come out chronological.
struct Vocabulary {
    std::vector<std::string> entities;
    std::vector<std::string> relations;
    std::vector<std::string> timestamps;
    std::unordered_map<std::string, std::int32_t> entity_ids;
    std::unordered_map<std::string, std::int32_t> relation_ids;
    std::unordered_map<std::string, std::int32_t> timestamp_ids;

    std::int32_t n_entities() const { return static_cast<std::int32_t>(entities.size()); }
    std::int32_t n_relations() const { return static_cast<std::int32_t>(relations.size()); }
    std::int32_t n_timestamps() const { return static_cast<std::int32_t>(timestamps.size()); }

    /// Throws tkge::DataError for tokens outside the vocabulary.
    Quadruple encode(const RawQuadruple& raw) const;
    RawQuadruple decode(const Quadruple& q) const;
};

/// Time-wise filter: for a query key (entity, relation-or-reciprocal, timestamp),
/// the sorted set of all answers that are true in train + valid + test.
class FilterIndex {
public:
    void add(std::int32_t e, std::int32_t r, std::int32_t t, std::int32_t answer);
    void finalize();

    /// Sorted answer set; empty if the key was never seen.
    const std::vector<std::int32_t>& answers(std::int32_t e, std::int32_t r,
                                             std::int32_t t) const;

private:
    static std::uint64_t key(std::int32_t e, std::int32_t r, std::int32_t t);
    std::unordered_map<std::uint64_t, std::vector<std::int32_t>> sets_;
    std::vector<std::int32_t> empty_;
};

struct Dataset {
    Vocabulary vocab;
    std::vector<Quadruple> train;
    std::vector<Quadruple> valid;
    std::vector<Quadruple> test;
    FilterIndex filter;

    /// Training set with reciprocal augmentation: for every (s, r, o, t) also
    /// (o, r + n_relations, s, t), so subject prediction trains as object
    /// prediction.
    std::vector<Quadruple> augmented_train() const;
};

/// Parses one UTF-8 TSV split: exactly 4 tab-separated fields per line,
/// LF line endings (a trailing CR is tolerated). Order is preserved.
/// Throws tkge::DataError naming the file and line for malformed input.
std::vector<RawQuadruple> load_split(const std::filesystem::path& path);

/// Writes records in the same TSV format load_split reads.
void write_split(const std::filesystem::path& path, const std::vector<RawQuadruple>& records);

/// Builds the vocabulary over the union of splits, indexes them, and fills the
/// time-wise filter over train + valid + test for both query directions.
Dataset build_dataset(const std::vector<RawQuadruple>& train,
                      const std::vector<RawQuadruple>& valid,
                      const std::vector<RawQuadruple>& test);

/// Loads train/valid/test TSV files from a directory. Accepts either
/// "<name>.txt" or bare "<name>" file names.
Dataset load_dataset(const std::filesystem::path& dir);

struct SyntheticSpec {
    int n_entities = 50;
    int n_relations = 10;
    int n_timestamps = 20;
    int n_facts = 2000;
    int planted_rank = 4;
    std::uint64_t seed = 7;
};

struct SyntheticSplits {
    std::vector<RawQuadruple> train;
    std::vector<RawQuadruple> valid;
    std::vector<RawQuadruple> test;
};

/// Plants a random rank-`planted_rank` model, scores every (s, r, t) query,
/// keeps the top-scoring object per query, ranks those facts by score, takes
/// the best `n_facts`, and splits them 80/10/10 after a seeded shuffle.
/// Deterministic for a fixed spec. Throws tkge::DataError if n_facts exceeds
/// the number of distinct queries.
SyntheticSplits generate_synthetic(const SyntheticSpec& spec);

}  // namespace tkge::data
