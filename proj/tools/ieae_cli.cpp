#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>

#include "ieae/attack.hpp"
#include "ieae/chaos.hpp"
#include "ieae/cipher.hpp"
#include "ieae/io.hpp"
#include "ieae/lyapunov.hpp"

namespace {

using namespace ieae;

SecretKey to_secret_key(const KeyFileData& kf) {
    SecretKey key;
    key.omega1 = kf.omega1;
    key.omega2 = kf.omega2;
    key.mu1 = kf.mu1;
    key.mu2 = kf.mu2;
    key.mu = kf.mu;
    key.a = kf.a;
    key.b = kf.b;
    return key;
}

double resolve_lambda(const KeyFileData& kf) {
    if (kf.lambda) return *kf.lambda;
    const auto series = read_csv_series(*kf.ecg_path);
    EmbeddingConfig cfg;
    cfg.m = kf.embed_m;
    if (kf.epsilon) {
        cfg.epsilon = *kf.epsilon;
    } else {
        const auto [lo, hi] = std::minmax_element(series.begin(), series.end());
        cfg.epsilon = 0.1 * (*hi - *lo);
    }
    return wolf_lle(series, cfg).lambda;
}

GrayImage random_image(std::mt19937_64& rng, int rows, int cols) {
    GrayImage img(rows, cols);
    std::uniform_int_distribution<int> dist(0, 255);
    for (auto& p : img.px) p = static_cast<std::uint8_t>(dist(rng));
    return img;
}

int cmd_encrypt(const std::string& key_path, const std::string& in_path,
                const std::string& out_path) {
    const auto kf = read_key_file(key_path);
    const auto img = read_pgm(in_path);
    const auto result = encrypt(img, to_secret_key(kf), {kf.rounds}, resolve_lambda(kf));
    write_pgm(out_path, result.cipher);
    write_sidecar(out_path + ".meta",
                  {result.mu3_tag, img.rows, img.cols, kf.rounds,
                   result.layout.p1, result.layout.p2});
    return 0;
}

int cmd_decrypt(const std::string& key_path, const std::string& cipher_path,
                const std::string& meta_path, const std::string& out_path) {
    const auto kf = read_key_file(key_path);
    const auto meta = read_sidecar(meta_path);
    const auto cipher = read_pgm(cipher_path);
    const auto padded = decrypt(cipher, to_secret_key(kf), {meta.rounds},
                                resolve_lambda(kf), meta.mu3);
    write_pgm(out_path, unpad(padded, meta.orig_rows, meta.orig_cols));
    return 0;
}

int cmd_extract_mask(const std::string& plain_path, const std::string& cipher_path,
                     int p1, int p2, int rounds, const std::string& mask_path) {
    const auto plain = read_pgm(plain_path);
    const auto cipher = read_pgm(cipher_path);
    if (cipher.rows % p1 != 0 || cipher.cols % p2 != 0)
        throw LayoutError("cipher dims are not a multiple of the block size");
    BlockLayout layout{p1, p2, cipher.rows / p1, cipher.cols / p2, cipher.rows, cipher.cols};
    const auto mask = extract_mask(plain, cipher, layout, rounds);
    write_pgm(mask_path, mask.mask);
    write_sidecar(mask_path + ".meta",
                  {mask.mu3_tag, cipher.rows, cipher.cols, rounds, p1, p2});
    return 0;
}

int cmd_mask_decrypt(const std::string& cipher_path, const std::string& mask_path,
                     const std::string& out_path) {
    const auto cipher = read_pgm(cipher_path);
    const auto meta = read_sidecar(mask_path + ".meta");
    MaskImage mask{read_pgm(mask_path),
                   {meta.p1, meta.p2, cipher.rows / meta.p1, cipher.cols / meta.p2,
                    cipher.rows, cipher.cols},
                   meta.rounds, meta.mu3};
    write_pgm(out_path, decrypt_with_mask(cipher, mask));
    std::cerr << "note: recovery is exact only for plaintexts whose mu3 matches the mask tag ("
              << meta.mu3 << ")\n";
    return 0;
}

int cmd_attack_experiment(const std::string& key_path, const std::string& ref_path,
                          long trials, std::uint64_t seed) {
    const auto kf = read_key_file(key_path);
    const SecretKey key = to_secret_key(kf);
    const double lambda = resolve_lambda(kf);
    const auto reference = read_pgm(ref_path);

    const auto ref_enc = encrypt(reference, key, {kf.rounds}, lambda);
    const auto mask = extract_mask(reference, ref_enc.cipher, ref_enc.layout, kf.rounds);

    std::mt19937_64 rng(seed);
    long successes = 0, mu3_matches = 0;
    bool equivalence = true;
    for (long i = 0; i < trials; ++i) {
        const auto trial = random_image(rng, reference.rows, reference.cols);
        const auto enc = encrypt(trial, key, {kf.rounds}, lambda);
        const auto recovered = decrypt_with_mask(enc.cipher, mask);
        auto [trial_padded, layout] = pad(trial, ref_enc.layout.p1, ref_enc.layout.p2);
        const bool success = (recovered == trial_padded);
        const bool match = (enc.mu3_tag == mask.mu3_tag);
        successes += success;
        mu3_matches += match;
        if (success != match) equivalence = false;
    }

    const double p = 1.0 / 256.0;
    const double mean = trials * p;
    const double sigma = std::sqrt(trials * p * (1 - p));
    std::cout << "trials=" << trials << "\n"
              << "successes=" << successes << "\n"
              << "mu3_matches=" << mu3_matches << "\n"
              << "expected_mean=" << mean << "\n"
              << "sigma=" << sigma << "\n"
              << "within_3_sigma=" << (std::fabs(successes - mean) <= 3 * sigma ? "yes" : "no")
              << "\n"
              << "success_iff_mu3_match=" << (equivalence ? "yes" : "no") << "\n";
    return equivalence ? 0 : 1;
}

Quantizer parse_quantizer(const std::string& s) {
    if (s == "floor") return Quantizer::Floor;
    if (s == "round") return Quantizer::Round;
    if (s == "ceil") return Quantizer::Ceil;
    throw CLI::ValidationError("quantizer must be floor, round, or ceil");
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw ParseError(path + ": cannot open for writing");
    out << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"IEAE cipher, known-plaintext attack, and digital-chaos diagnostics"};
    app.require_subcommand(1);

    std::string key_path, in_path, out_path, meta_path, mask_path, plain_path, cipher_path;
    std::string dot_path, census_path, series_path, quantizer_str = "floor";
    int p1 = 8, p2 = 8, rounds = 1;
    long trials = 2560;
    std::uint64_t seed = 1;

    auto* enc = app.add_subcommand("encrypt", "Encrypt a PGM image");
    enc->add_option("key", key_path, "key file")->required();
    enc->add_option("input", in_path, "plain image (PGM P5)")->required();
    enc->add_option("output", out_path, "cipher image; sidecar written to <output>.meta")->required();

    auto* dec = app.add_subcommand("decrypt", "Decrypt a cipher image");
    dec->add_option("key", key_path)->required();
    dec->add_option("cipher", cipher_path)->required();
    dec->add_option("meta", meta_path, "sidecar metadata from encryption")->required();
    dec->add_option("output", out_path)->required();

    auto* ext = app.add_subcommand("extract-mask", "Recover the equivalent key from a known pair");
    ext->add_option("plain", plain_path)->required();
    ext->add_option("cipher", cipher_path)->required();
    ext->add_option("mask", mask_path, "output mask; metadata written to <mask>.meta")->required();
    ext->add_option("--p1", p1, "block rows")->required();
    ext->add_option("--p2", p2, "block cols")->required();
    ext->add_option("--rounds", rounds, "public round count R")->required();

    auto* mdec = app.add_subcommand("mask-decrypt", "Decrypt with a recovered mask");
    mdec->add_option("cipher", cipher_path)->required();
    mdec->add_option("mask", mask_path, "mask image; <mask>.meta must exist")->required();
    mdec->add_option("output", out_path)->required();

    auto* exp = app.add_subcommand("attack-experiment", "Measure the mask-transfer success rate");
    exp->add_option("key", key_path)->required();
    exp->add_option("reference", plain_path, "known plain image")->required();
    exp->add_option("--trials", trials)->check(CLI::Range(256l, 1000000l));
    exp->add_option("--seed", seed, "trial-image generator seed");

    auto* graph = app.add_subcommand("graph", "Export a functional graph and its census");
    std::string subtype;
    long mu_num = 61, a_prime = 7, b_prime = 8;
    int mu_den_pow2 = 4, e_bits = 6, exp_bits = 4, mant_bits = 4, bias = 7, sign_bits = 1;
    double mu_float = 123.0 / 32.0;
    graph->add_option("subtype", subtype, "logistic-fixed | logistic-float | arnold")->required();
    graph->add_option("dot", dot_path, "DOT output path")->required();
    graph->add_option("census", census_path, "census output path")->required();
    graph->add_option("--mu-num", mu_num);
    graph->add_option("--mu-den-pow2", mu_den_pow2);
    graph->add_option("--e", e_bits, "precision bits");
    graph->add_option("--quantizer", quantizer_str, "floor | round | ceil");
    graph->add_option("--mu", mu_float, "minifloat logistic control");
    graph->add_option("--exp-bits", exp_bits);
    graph->add_option("--mant-bits", mant_bits);
    graph->add_option("--bias", bias);
    graph->add_option("--sign-bits", sign_bits);
    graph->add_option("--a-prime", a_prime);
    graph->add_option("--b-prime", b_prime);

    auto* pw = app.add_subcommand("pow10", "Bit length and popcount of 10^m");
    int m_from = 1, m_to = 50;
    pw->add_option("--from", m_from)->check(CLI::Range(1, 50));
    pw->add_option("--to", m_to)->check(CLI::Range(1, 50));

    auto* lle = app.add_subcommand("lyapunov", "Estimate the largest Lyapunov exponent");
    int embed_m = 2;
    double epsilon = 0.0;
    lle->add_option("series", series_path, "CSV, one sample per line")->required();
    lle->add_option("--m", embed_m, "embedding dimension");
    lle->add_option("--epsilon", epsilon, "evolution threshold (default 10% of range)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*enc) return cmd_encrypt(key_path, in_path, out_path);
        if (*dec) return cmd_decrypt(key_path, cipher_path, meta_path, out_path);
        if (*ext) return cmd_extract_mask(plain_path, cipher_path, p1, p2, rounds, mask_path);
        if (*mdec) return cmd_mask_decrypt(cipher_path, mask_path, out_path);
        if (*exp) return cmd_attack_experiment(key_path, plain_path, trials, seed);
        if (*graph) {
            FunctionalGraph g;
            if (subtype == "logistic-fixed")
                g = logistic_fixed_map(mu_num, mu_den_pow2,
                                       {e_bits, parse_quantizer(quantizer_str)});
            else if (subtype == "logistic-float")
                g = logistic_minifloat_map(mu_float, {sign_bits, exp_bits, mant_bits, bias});
            else if (subtype == "arnold")
                g = arnold_mod_map(a_prime, b_prime, e_bits);
            else
                throw CLI::ValidationError("unknown graph subtype: " + subtype);
            write_text(dot_path, export_dot(g));
            write_text(census_path, census_text(component_census(g)));
            return 0;
        }
        if (*pw) {
            if (m_from > m_to) throw CLI::ValidationError("empty m range");
            std::printf("%4s %10s %8s\n", "m", "bit_length", "popcount");
            for (int m = m_from; m <= m_to; ++m) {
                const auto s = pow10_stats(m);
                std::printf("%4d %10d %8d\n", m, s.bit_length, s.popcount);
            }
            return 0;
        }
        if (*lle) {
            const auto series = read_csv_series(series_path);
            EmbeddingConfig cfg;
            cfg.m = embed_m;
            if (epsilon > 0) {
                cfg.epsilon = epsilon;
            } else {
                if (series.empty()) throw InsufficientDataError("empty series");
                const auto [lo, hi] = std::minmax_element(series.begin(), series.end());
                cfg.epsilon = 0.1 * (*hi - *lo);
            }
            const auto result = wolf_lle(series, cfg);
            std::printf("lambda=%.17g\nq=%zu\nt_final=%zu\nfallbacks=%zu\n", result.lambda,
                        result.log.q, result.log.t_final, result.log.fallbacks);
            for (const auto& r : result.log.pairs)
                std::printf("replacement t=%zu L=%.17g L'=%.17g\n", r.start_index,
                            r.initial_sep, r.final_sep);
            return 0;
        }
    } catch (const CLI::ValidationError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 3;
    } catch (const ParseError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    }
    return 0;
}
