#pragma once

#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "seqgini/distributions.hpp"
#include "seqgini/random.hpp"

namespace seqgini {

/// Pull-based stream of nonnegative observations. Samplers yield
/// indefinitely; file-backed sources signal exhaustion with nullopt.
class ObservationSource {
public:
    virtual ~ObservationSource() = default;
    virtual std::optional<double> next() = 0;
};

/// Endless sampler over one distribution and one private generator.
class DistributionSource final : public ObservationSource {
public:
    DistributionSource(DistributionSpec spec, Rng rng) : spec_(spec), rng_(rng) {}

    std::optional<double> next() override { return sample(spec_, rng_); }

private:
    DistributionSpec spec_;
    Rng rng_;
};

/// Replays a fixed buffer, then exhausts.
class VectorSource final : public ObservationSource {
public:
    explicit VectorSource(std::vector<double> values) : values_(std::move(values)) {}

    std::optional<double> next() override {
        if (pos_ >= values_.size()) {
            return std::nullopt;
        }
        return values_[pos_++];
    }

private:
    std::vector<double> values_;
    std::size_t pos_ = 0;
};

struct FileFormat {
    bool skip_header = false;
};

/// Streams numbers from a text file: one value per row, or several per
/// row separated by commas. Blank lines are skipped. Values must parse
/// as finite nonnegative reals; violations raise ParseError with the
/// 1-based line number. Path "-" reads standard input.
std::unique_ptr<ObservationSource> open_file_source(const std::string& path,
                                                    const FileFormat& format = {});

/// Same contract over an arbitrary stream; `name` labels parse errors.
std::unique_ptr<ObservationSource> open_stream_source(std::istream& stream, std::string name,
                                                      const FileFormat& format = {});

}  // namespace seqgini
