#pragma once

#include <map>
#include <optional>
#include <string>

#include "ieae/image.hpp"

namespace ieae {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// PGM P5, binary, maxval 255.
GrayImage read_pgm(const std::string& path);
void write_pgm(const std::string& path, const GrayImage& img);

// Flat "key=value" text records, one per line; '#' starts a comment.
// Parse failures carry line numbers.
std::map<std::string, std::string> read_kv(const std::string& path);
void write_kv(const std::string& path, const std::map<std::string, std::string>& kv);

struct SidecarMetadata {
    int mu3 = 1;
    int orig_rows = 0, orig_cols = 0;
    int rounds = 1;
    int p1 = 0, p2 = 0;
};

SidecarMetadata read_sidecar(const std::string& path);
void write_sidecar(const std::string& path, const SidecarMetadata& meta);

struct KeyFileData {
    int omega1, omega2, mu1, mu2;
    double mu;
    long a, b;
    int rounds;
    std::optional<double> lambda;    // either lambda directly ...
    std::optional<std::string> ecg_path;  // ... or a series to run Wolf on
    int embed_m = 2;
    std::optional<double> epsilon;   // default: 10% of data range
};

KeyFileData read_key_file(const std::string& path);

std::vector<double> read_csv_series(const std::string& path);

}  // namespace ieae
