#include "ieae/io.hpp"

#include <fstream>
#include <sstream>

namespace ieae {

namespace {

int require_int(const std::map<std::string, std::string>& kv, const std::string& key,
                const std::string& path) {
    auto it = kv.find(key);
    if (it == kv.end()) throw ParseError(path + ": missing key '" + key + "'");
    try {
        return std::stoi(it->second);
    } catch (const std::exception&) {
        throw ParseError(path + ": key '" + key + "' is not an integer");
    }
}

double require_double(const std::map<std::string, std::string>& kv, const std::string& key,
                      const std::string& path) {
    auto it = kv.find(key);
    if (it == kv.end()) throw ParseError(path + ": missing key '" + key + "'");
    try {
        return std::stod(it->second);
    } catch (const std::exception&) {
        throw ParseError(path + ": key '" + key + "' is not a number");
    }
}

}  // namespace

GrayImage read_pgm(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(path + ": cannot open");

    auto next_token = [&]() -> std::string {
        std::string tok;
        int c;
        while ((c = in.get()) != EOF) {
            if (c == '#') {  // comment to end of line
                while ((c = in.get()) != EOF && c != '\n') {
                }
                continue;
            }
            if (std::isspace(c)) {
                if (!tok.empty()) break;
                continue;
            }
            tok.push_back(static_cast<char>(c));
        }
        return tok;
    };

    if (next_token() != "P5") throw ParseError(path + ": not a binary PGM (P5) file");
    int w, h, maxval;
    try {
        w = std::stoi(next_token());
        h = std::stoi(next_token());
        maxval = std::stoi(next_token());
    } catch (const std::exception&) {
        throw ParseError(path + ": malformed PGM header");
    }
    if (w <= 0 || h <= 0) throw ParseError(path + ": invalid dimensions");
    if (maxval != 255) throw ParseError(path + ": maxval must be 255");

    GrayImage img(h, w);
    in.read(reinterpret_cast<char*>(img.px.data()), static_cast<std::streamsize>(img.px.size()));
    if (in.gcount() != static_cast<std::streamsize>(img.px.size()))
        throw ParseError(path + ": truncated pixel data");
    return img;
}

void write_pgm(const std::string& path, const GrayImage& img) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError(path + ": cannot open for writing");
    out << "P5\n" << img.cols << " " << img.rows << "\n255\n";
    out.write(reinterpret_cast<const char*>(img.px.data()),
              static_cast<std::streamsize>(img.px.size()));
    if (!out) throw ParseError(path + ": write failed");
}

std::map<std::string, std::string> read_kv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path + ": cannot open");
    std::map<std::string, std::string> kv;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos || eq == 0)
            throw ParseError(path + ":" + std::to_string(lineno) + ": expected key=value");
        kv[line.substr(0, eq)] = line.substr(eq + 1);
    }
    return kv;
}

void write_kv(const std::string& path, const std::map<std::string, std::string>& kv) {
    std::ofstream out(path);
    if (!out) throw ParseError(path + ": cannot open for writing");
    for (const auto& [k, v] : kv) out << k << "=" << v << "\n";
    if (!out) throw ParseError(path + ": write failed");
}

SidecarMetadata read_sidecar(const std::string& path) {
    const auto kv = read_kv(path);
    SidecarMetadata meta;
    meta.mu3 = require_int(kv, "mu3", path);
    meta.orig_rows = require_int(kv, "orig_m", path);
    meta.orig_cols = require_int(kv, "orig_n", path);
    meta.rounds = require_int(kv, "r_rounds", path);
    meta.p1 = require_int(kv, "p1", path);
    meta.p2 = require_int(kv, "p2", path);
    if (meta.mu3 < 1 || meta.mu3 > 256) throw ParseError(path + ": mu3 out of [1, 256]");
    return meta;
}

void write_sidecar(const std::string& path, const SidecarMetadata& meta) {
    write_kv(path, {{"mu3", std::to_string(meta.mu3)},
                    {"orig_m", std::to_string(meta.orig_rows)},
                    {"orig_n", std::to_string(meta.orig_cols)},
                    {"r_rounds", std::to_string(meta.rounds)},
                    {"p1", std::to_string(meta.p1)},
                    {"p2", std::to_string(meta.p2)}});
}

KeyFileData read_key_file(const std::string& path) {
    const auto kv = read_kv(path);
    KeyFileData key{};
    key.omega1 = require_int(kv, "omega1", path);
    key.omega2 = require_int(kv, "omega2", path);
    key.mu1 = require_int(kv, "mu1", path);
    key.mu2 = require_int(kv, "mu2", path);
    key.mu = require_double(kv, "mu", path);
    key.a = require_int(kv, "a", path);
    key.b = require_int(kv, "b", path);
    key.rounds = require_int(kv, "r_rounds", path);
    if (kv.count("lambda")) {
        key.lambda = require_double(kv, "lambda", path);
    } else if (kv.count("ecg_path")) {
        key.ecg_path = kv.at("ecg_path");
        if (kv.count("embed_m")) key.embed_m = require_int(kv, "embed_m", path);
        if (kv.count("epsilon")) key.epsilon = require_double(kv, "epsilon", path);
    } else {
        throw ParseError(path + ": need either 'lambda' or 'ecg_path'");
    }
    return key;
}

std::vector<double> read_csv_series(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path + ": cannot open");
    std::vector<double> series;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        try {
            series.push_back(std::stod(line));
        } catch (const std::exception&) {
            throw ParseError(path + ":" + std::to_string(lineno) + ": not a number");
        }
    }
    return series;
}

}  // namespace ieae
