#include "tkge/data.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "tkge/errors.hpp"
#include "tkge/model.hpp"
#include "tkge/rng.hpp"

namespace tkge::data {

namespace {

std::int32_t lookup(const std::unordered_map<std::string, std::int32_t>& ids,
                    const std::string& token, const char* family) {
    auto it = ids.find(token);
    if (it == ids.end()) {
        throw DataError(std::string("unknown ") + family + " token: '" + token + "'");
    }
    return it->second;
}

std::string padded_label(const char* prefix, int id, int width) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%s%0*d", prefix, width, id);
    return buf;
}

std::string iso_date_label(int day_offset) {
    using namespace std::chrono;
    const sys_days day = sys_days{year{2014} / January / 1} + days{day_offset};
    const year_month_day ymd{day};
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02u-%02u", static_cast<int>(ymd.year()),
                  static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()));
    return buf;
}

}  // namespace

Quadruple Vocabulary::encode(const RawQuadruple& raw) const {
    Quadruple q;
    q.s = lookup(entity_ids, raw.subject, "entity");
    q.r = lookup(relation_ids, raw.relation, "relation");
    q.o = lookup(entity_ids, raw.object, "entity");
    q.t = lookup(timestamp_ids, raw.timestamp, "timestamp");
    return q;
}

RawQuadruple Vocabulary::decode(const Quadruple& q) const {
    return RawQuadruple{entities.at(q.s), relations.at(q.r), entities.at(q.o),
                        timestamps.at(q.t)};
}

std::uint64_t FilterIndex::key(std::int32_t e, std::int32_t r, std::int32_t t) {
    return (static_cast<std::uint64_t>(e) << 40) | (static_cast<std::uint64_t>(r) << 20) |
           static_cast<std::uint64_t>(t);
}

void FilterIndex::add(std::int32_t e, std::int32_t r, std::int32_t t, std::int32_t answer) {
    if (e < 0 || r < 0 || t < 0 || e >= (1 << 24) || r >= (1 << 20) || t >= (1 << 20)) {
        throw DataError("filter index out of supported id range");
    }
    sets_[key(e, r, t)].push_back(answer);
}

void FilterIndex::finalize() {
    for (auto& [k, answers] : sets_) {
        std::sort(answers.begin(), answers.end());
        answers.erase(std::unique(answers.begin(), answers.end()), answers.end());
    }
}

const std::vector<std::int32_t>& FilterIndex::answers(std::int32_t e, std::int32_t r,
                                                      std::int32_t t) const {
    auto it = sets_.find(key(e, r, t));
    return it == sets_.end() ? empty_ : it->second;
}

std::vector<Quadruple> Dataset::augmented_train() const {
    const std::int32_t n_rel = vocab.n_relations();
    std::vector<Quadruple> out;
    out.reserve(train.size() * 2);
    out.insert(out.end(), train.begin(), train.end());
    for (const Quadruple& q : train) {
        out.push_back(Quadruple{q.o, static_cast<std::int32_t>(q.r + n_rel), q.s, q.t});
    }
    return out;
}

std::vector<RawQuadruple> load_split(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw DataError("cannot open split file: " + path.string());
    }
    std::vector<RawQuadruple> records;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        std::vector<std::string> fields;
        std::size_t start = 0;
        while (true) {
            const std::size_t tab = line.find('\t', start);
            if (tab == std::string::npos) {
                fields.push_back(line.substr(start));
                break;
            }
            fields.push_back(line.substr(start, tab - start));
            start = tab + 1;
        }
        if (fields.size() != 4) {
            throw DataError(path.string() + ":" + std::to_string(line_no) + ": expected 4 tab-separated fields, got " +
                            std::to_string(fields.size()));
        }
        records.push_back(RawQuadruple{std::move(fields[0]), std::move(fields[1]),
                                       std::move(fields[2]), std::move(fields[3])});
    }
    return records;
}

void write_split(const std::filesystem::path& path, const std::vector<RawQuadruple>& records) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw DataError("cannot open split file for writing: " + path.string());
    }
    for (const RawQuadruple& q : records) {
        out << q.subject << '\t' << q.relation << '\t' << q.object << '\t' << q.timestamp
            << '\n';
    }
}

Dataset build_dataset(const std::vector<RawQuadruple>& train,
                      const std::vector<RawQuadruple>& valid,
                      const std::vector<RawQuadruple>& test) {
    std::set<std::string> entity_tokens;
    std::set<std::string> relation_tokens;
    std::set<std::string> timestamp_tokens;
    for (const auto* split : {&train, &valid, &test}) {
        for (const RawQuadruple& q : *split) {
            entity_tokens.insert(q.subject);
            entity_tokens.insert(q.object);
            relation_tokens.insert(q.relation);
            timestamp_tokens.insert(q.timestamp);
        }
    }

    Dataset ds;
    auto fill = [](const std::set<std::string>& tokens, std::vector<std::string>& names,
                   std::unordered_map<std::string, std::int32_t>& ids) {
        names.assign(tokens.begin(), tokens.end());
        ids.reserve(names.size());
        for (std::size_t i = 0; i < names.size(); ++i) {
            ids.emplace(names[i], static_cast<std::int32_t>(i));
        }
    };
    fill(entity_tokens, ds.vocab.entities, ds.vocab.entity_ids);
    fill(relation_tokens, ds.vocab.relations, ds.vocab.relation_ids);
    fill(timestamp_tokens, ds.vocab.timestamps, ds.vocab.timestamp_ids);

    auto encode_split = [&](const std::vector<RawQuadruple>& raw) {
        std::vector<Quadruple> out;
        out.reserve(raw.size());
        for (const RawQuadruple& q : raw) {
            out.push_back(ds.vocab.encode(q));
        }
        return out;
    };
    ds.train = encode_split(train);
    ds.valid = encode_split(valid);
    ds.test = encode_split(test);

    const std::int32_t n_rel = ds.vocab.n_relations();
    for (const auto* split : {&ds.train, &ds.valid, &ds.test}) {
        for (const Quadruple& q : *split) {
            ds.filter.add(q.s, q.r, q.t, q.o);
            ds.filter.add(q.o, q.r + n_rel, q.t, q.s);
        }
    }
    ds.filter.finalize();
    return ds;
}

Dataset load_dataset(const std::filesystem::path& dir) {
    auto find_split = [&](const char* name) {
        const auto with_ext = dir / (std::string(name) + ".txt");
        if (std::filesystem::exists(with_ext)) {
            return load_split(with_ext);
        }
        return load_split(dir / name);
    };
    return build_dataset(find_split("train"), find_split("valid"), find_split("test"));
}

SyntheticSplits generate_synthetic(const SyntheticSpec& spec) {
    if (spec.n_entities <= 0 || spec.n_relations <= 0 || spec.n_timestamps <= 0 ||
        spec.planted_rank <= 0 || spec.n_facts < 0) {
        throw DataError("generate_synthetic: all sizes must be positive");
    }
    const std::int64_t n_queries = static_cast<std::int64_t>(spec.n_entities) *
                                   spec.n_relations * spec.n_timestamps;
    if (spec.n_facts > n_queries) {
        throw DataError("generate_synthetic: requested " + std::to_string(spec.n_facts) +
                        " facts but only " + std::to_string(n_queries) +
                        " distinct (s, r, t) queries exist");
    }

    SyntheticSplits splits;
    if (spec.n_facts == 0) {
        return splits;
    }

    // Ground-truth model: unit-scale Gaussian tables at the planted rank.
    Rng rng(spec.seed);
    models::ModelParams truth = models::init_params(
        models::ModelVariant::kTComplEx, spec.n_entities, spec.n_relations, spec.n_timestamps,
        spec.planted_rank, /*seed=*/rng.next_u64(), /*stddev=*/1.0);

    struct Fact {
        double score;
        std::int32_t s, r, o, t;
    };
    std::vector<Fact> facts;
    facts.reserve(static_cast<std::size_t>(n_queries));

    std::vector<Quadruple> queries;
    queries.reserve(static_cast<std::size_t>(spec.n_relations) * spec.n_timestamps);
    for (std::int32_t s = 0; s < spec.n_entities; ++s) {
        queries.clear();
        for (std::int32_t r = 0; r < spec.n_relations; ++r) {
            for (std::int32_t t = 0; t < spec.n_timestamps; ++t) {
                queries.push_back(Quadruple{s, r, 0, t});
            }
        }
        const Eigen::MatrixXd scores = models::score_all_objects(truth, queries, {});
        for (Eigen::Index qi = 0; qi < scores.rows(); ++qi) {
            Eigen::Index best = 0;
            const double best_score = scores.row(qi).maxCoeff(&best);
            facts.push_back(Fact{best_score, queries[qi].s, queries[qi].r,
                                 static_cast<std::int32_t>(best), queries[qi].t});
        }
    }

    std::sort(facts.begin(), facts.end(), [](const Fact& a, const Fact& b) {
        if (a.score != b.score) return a.score > b.score;
        if (a.s != b.s) return a.s < b.s;
        if (a.r != b.r) return a.r < b.r;
        return a.t < b.t;
    });
    facts.resize(spec.n_facts);
    rng.shuffle(facts);

    const int entity_width = std::max<int>(4, std::to_string(spec.n_entities - 1).size());
    const int relation_width = std::max<int>(3, std::to_string(spec.n_relations - 1).size());
    auto emit = [&](const Fact& f) {
        return RawQuadruple{padded_label("e", f.s, entity_width),
                            padded_label("r", f.r, relation_width), padded_label("e", f.o, entity_width),
                            iso_date_label(f.t)};
    };

    const std::size_t n_train = spec.n_facts * 8 / 10;
    const std::size_t n_valid = spec.n_facts / 10;
    for (std::size_t i = 0; i < facts.size(); ++i) {
        if (i < n_train) {
            splits.train.push_back(emit(facts[i]));
        } else if (i < n_train + n_valid) {
            splits.valid.push_back(emit(facts[i]));
        } else {
            splits.test.push_back(emit(facts[i]));
        }
    }
    return splits;
}

}  // namespace tkge::data
