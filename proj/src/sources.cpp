#include "seqgini/sources.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <deque>
#include <fstream>
#include <iostream>
#include <istream>

#include "seqgini/errors.hpp"

namespace seqgini {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

class TextSource final : public ObservationSource {
public:
    TextSource(std::unique_ptr<std::ifstream> owned, std::istream& stream, std::string name,
               const FileFormat& format)
        : owned_(std::move(owned)), stream_(stream), name_(std::move(name)), format_(format) {}

    std::optional<double> next() override {
        while (pending_.empty()) {
            if (!read_line()) {
                return std::nullopt;
            }
        }
        const double value = pending_.front();
        pending_.pop_front();
        return value;
    }

private:
    bool read_line() {
        std::string line;
        if (!std::getline(stream_, line)) {
            return false;
        }
        ++line_number_;
        if (format_.skip_header && line_number_ == 1) {
            return true;
        }
        std::string_view rest = line;
        while (!rest.empty()) {
            const std::size_t comma = rest.find(',');
            const std::string_view token =
                trim(comma == std::string_view::npos ? rest : rest.substr(0, comma));
            rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
            if (token.empty()) {
                continue;
            }
            pending_.push_back(parse_token(token));
        }
        return true;
    }

    double parse_token(std::string_view token) const {
        double value = 0.0;
        const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc{} || end != token.data() + token.size()) {
            throw ParseError("cannot parse '" + std::string(token) + "' as a number (" + name_ +
                                 ":" + std::to_string(line_number_) + ")",
                             name_, line_number_);
        }
        if (!std::isfinite(value)) {
            throw ParseError("non-finite observation (" + name_ + ":" +
                                 std::to_string(line_number_) + ")",
                             name_, line_number_);
        }
        if (value < 0.0) {
            throw ParseError("negative observation " + std::string(token) + " (" + name_ + ":" +
                                 std::to_string(line_number_) + ")",
                             name_, line_number_);
        }
        return value;
    }

    std::unique_ptr<std::ifstream> owned_;
    std::istream& stream_;
    std::string name_;
    FileFormat format_;
    std::size_t line_number_ = 0;
    std::deque<double> pending_;
};

}  // namespace

std::unique_ptr<ObservationSource> open_file_source(const std::string& path,
                                                    const FileFormat& format) {
    if (path == "-") {
        return open_stream_source(std::cin, "<stdin>", format);
    }
    auto file = std::make_unique<std::ifstream>(path);
    if (!file->is_open()) {
        throw ConfigError("cannot open input file: " + path);
    }
    std::istream& stream = *file;
    return std::make_unique<TextSource>(std::move(file), stream, path, format);
}

std::unique_ptr<ObservationSource> open_stream_source(std::istream& stream, std::string name,
                                                      const FileFormat& format) {
    return std::make_unique<TextSource>(nullptr, stream, std::move(name), format);
}

}  // namespace seqgini
