// Acceptance suite: one line of output per criterion, nonzero exit when any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <vector>

#include "ieae/attack.hpp"
#include "ieae/chaos.hpp"
#include "ieae/cipher.hpp"
#include "ieae/lyapunov.hpp"

using namespace ieae;

namespace {

int failures = 0;

void report(int number, const char* name, bool ok, const std::string& detail = "") {
    std::printf("criterion %d [%s]: %s%s%s\n", number, name, ok ? "PASS" : "FAIL",
                detail.empty() ? "" : " - ", detail.c_str());
    if (!ok) ++failures;
}

GrayImage random_image(std::mt19937_64& rng, int rows, int cols) {
    GrayImage img(rows, cols);
    std::uniform_int_distribution<int> dist(0, 255);
    for (auto& p : img.px) p = static_cast<std::uint8_t>(dist(rng));
    return img;
}

// pixel adjustment making img's first-block sum match `reference` under (p1, p2)
void align_mu3(GrayImage& img, const GrayImage& reference, int p1, int p2) {
    long need = 0, have = 0;
    for (int i = 0; i < p1; ++i)
        for (int j = 0; j < p2; ++j) {
            need += reference.at(i, j);
            have += img.at(i, j);
        }
    img.at(0, 0) = static_cast<std::uint8_t>(((img.at(0, 0) + need - have) % 256 + 256) % 256);
}

std::vector<double> logistic_series(double x0, double mu, std::size_t n) {
    std::vector<double> out;
    out.reserve(n);
    double x = x0;
    for (std::size_t i = 0; i < n; ++i) {
        x = (mu * x) * (1.0 - x);
        out.push_back(x);
    }
    return out;
}

// the reference experiment key
SecretKey reference_key() {
    SecretKey key;
    key.a = 1;
    key.b = 1;
    key.omega1 = 50;
    key.omega2 = 50;
    key.mu = 3.999;
    key.mu1 = 20;
    key.mu2 = 15;
    return key;
}

// a deterministic stand-in for the authors' ECG-derived exponent: Wolf's
// estimator run on a chaotic Logistic orbit
double demo_lambda() {
    const auto z = logistic_series(0.31, 4.0, 3000);
    const auto [lo, hi] = std::minmax_element(z.begin(), z.end());
    return wolf_lle(z, {2, 0.1 * (*hi - *lo), 30.0}).lambda;
}

void criterion_1_round_trip() {
    std::mt19937_64 rng(101);
    std::uniform_int_distribution<int> dim(20, 90);
    std::uniform_real_distribution<double> mu_dist(3.9, 4.0);
    std::uniform_real_distribution<double> lam_dist(0.05, 1.5);
    std::uniform_int_distribution<int> idx(1, 256);
    std::uniform_int_distribution<long> ab(1, 9);

    int images = 0;
    bool ok = true;
    std::string fail_detail;
    for (int k = 0; k < 5 && ok; ++k) {
        SecretKey key;
        key.mu = mu_dist(rng);
        key.mu1 = idx(rng);
        key.mu2 = idx(rng);
        key.a = ab(rng);
        key.b = ab(rng);
        const double lambda = lam_dist(rng);

        // find omega indexes producing each residue so all nine layouts occur
        const auto seed = seed_from_lambda(lambda);
        auto xbar = gen_xbar(seed, key.mu, 256);
        int omega_for[3] = {0, 0, 0};
        for (int i = 1; i <= 256; ++i) {
            const int q = xbar.at1(i) % 3;
            if (!omega_for[q]) omega_for[q] = i;
        }
        if (!omega_for[0] || !omega_for[1] || !omega_for[2]) {
            fail_detail = "could not realize all residues for a key";
            ok = false;
            break;
        }

        for (int q1 = 0; q1 < 3 && ok; ++q1)
            for (int q2 = 0; q2 < 3 && ok; ++q2) {
                key.omega1 = omega_for[q1];
                key.omega2 = omega_for[q2];
                const int rounds = 1 + (q1 * 3 + q2 + k) % 3;
                const auto img = random_image(rng, dim(rng), dim(rng));
                const auto enc = encrypt(img, key, {rounds}, lambda);
                const auto dec = decrypt(enc.cipher, key, {rounds}, lambda, enc.mu3_tag);
                const auto [padded, layout] = pad(img, enc.layout.p1, enc.layout.p2);
                ++images;
                if (dec != padded) {
                    fail_detail = "round trip mismatch";
                    ok = false;
                }
            }
    }
    ok = ok && images >= 45;
    // top up to 50 images under all three round counts
    SecretKey key = reference_key();
    for (int rounds : {1, 2, 3}) {
        const auto img = random_image(rng, 64, 64);
        const auto enc = encrypt(img, key, {rounds}, 0.123456);
        const auto dec = decrypt(enc.cipher, key, {rounds}, 0.123456, enc.mu3_tag);
        const auto [padded, layout] = pad(img, enc.layout.p1, enc.layout.p2);
        ++images;
        if (dec != padded) ok = false;
    }
    report(1, "round-trip", ok, std::to_string(images) + " images" +
                                    (fail_detail.empty() ? "" : ", " + fail_detail));
}

void criterion_2_proposition_1() {
    const SecretKey key = reference_key();
    const int rounds = 3;
    const double lambda = demo_lambda();

    // synthetic 512x512 natural-looking reference
    GrayImage reference(512, 512);
    for (int i = 0; i < 512; ++i)
        for (int j = 0; j < 512; ++j)
            reference.at(i, j) = static_cast<std::uint8_t>(
                int(128 + 90 * std::sin(i / 17.0) * std::cos(j / 23.0) + (i + j) / 8) % 256);

    const auto ref_enc = encrypt(reference, key, {rounds}, lambda);
    const auto mask = extract_mask(reference, ref_enc.cipher, ref_enc.layout, rounds);

    std::mt19937_64 rng(202);
    int matched = 0, mismatched = 0;
    bool ok = true;
    for (int t = 0; t < 100; ++t) {
        auto target = random_image(rng, 512, 512);
        if (t % 2 == 0) align_mu3(target, reference, ref_enc.layout.p1, ref_enc.layout.p2);
        const auto enc = encrypt(target, key, {rounds}, lambda);
        const auto recovered = decrypt_with_mask(enc.cipher, mask);
        const auto [padded, layout] = pad(target, enc.layout.p1, enc.layout.p2);
        const bool exact = (recovered == padded);
        if (enc.mu3_tag == mask.mu3_tag) {
            ++matched;
            if (!exact) ok = false;
        } else {
            ++mismatched;
            if (exact) ok = false;
        }
    }
    ok = ok && matched > 0 && mismatched > 0;
    report(2, "proposition-1 soundness", ok,
           std::to_string(matched) + " matched mu3 recovered exactly, " +
               std::to_string(mismatched) + " mismatched all failed");
}

void criterion_3_collision_rate() {
    std::mt19937_64 rng(303);
    const int p1 = 8, p2 = 8;
    const auto reference = random_image(rng, 32, 32);
    const long trials = 2560;
    long matches = 0;
    for (long t = 0; t < trials; ++t) {
        const auto img = random_image(rng, 32, 32);
        if (mu3_match(reference, img, p1, p2)) ++matches;
    }
    const double mean = trials / 256.0;
    const double sigma = std::sqrt(trials * (1.0 / 256.0) * (255.0 / 256.0));
    const bool ok = std::fabs(matches - mean) <= 3.0 * sigma;
    report(3, "collision rate", ok,
           std::to_string(matches) + " matches, mean 10, 3-sigma window +/- " +
               std::to_string(3.0 * sigma));
}

void criterion_4_affine_oracle() {
    const SecretKey key = reference_key();
    const double lambda = 0.123456;
    std::mt19937_64 rng(404);
    bool ok = true;
    int pairs = 0;
    for (int rounds : {1, 2, 3}) {
        for (int t = 0; t < 34 && ok; ++t) {
            auto a = random_image(rng, 40, 40);
            auto b = random_image(rng, 40, 40);
            const auto probe = encrypt(a, key, {rounds}, lambda);
            align_mu3(b, a, probe.layout.p1, probe.layout.p2);
            const auto ea = encrypt(a, key, {rounds}, lambda);
            const auto eb = encrypt(b, key, {rounds}, lambda);
            if (ea.mu3_tag != eb.mu3_tag) {
                ok = false;
                break;
            }
            const auto ma = extract_mask(a, ea.cipher, ea.layout, rounds);
            const auto mb = extract_mask(b, eb.cipher, eb.layout, rounds);
            if (ma.mask != mb.mask) ok = false;
            ++pairs;
        }
    }
    report(4, "affine-structure oracle", ok, std::to_string(pairs) + " equal-mu3 mask pairs");
}

void criterion_5_closed_form() {
    std::mt19937_64 rng(505);
    std::uniform_int_distribution<int> nblocks(1, 8);
    std::uniform_int_distribution<int> byte(0, 255);
    int equal2 = 0;
    int single3 = 0, single_bad = 0, multi_equal = 0, multi_diverge = 0;
    for (int t = 0; t < 100; ++t) {
        const int n = nblocks(rng);
        BlockStream s(n, Block(4));
        for (auto& b : s)
            for (auto& x : b) x = static_cast<std::uint8_t>(byte(rng));
        if (closed_form_nested_sum(s, 2) == nested_sum(s, 2)) ++equal2;
        const bool eq3 = closed_form_nested_sum(s, 3) == nested_sum(s, 3);
        if (n == 1) {
            ++single3;
            if (!eq3) ++single_bad;
        } else {
            eq3 ? ++multi_equal : ++multi_diverge;
        }
    }
    // pinned regression verdict: the R=2 literal bounds reduce to the double
    // prefix sum on every stream; the R=3 literal bounds diverge from the
    // operational form on every multi-block stream of this seeded corpus
    const bool ok = (equal2 == 100 && single_bad == 0 && multi_equal == 0 &&
                     single3 + multi_diverge == 100);
    report(5, "closed-form check", ok,
           "R=2 equal on 100/100; R=3 literal bounds diverge on all " +
               std::to_string(100 - single3) + " multi-block streams (" +
               std::to_string(single3) + " single-block agree)");
}

void criterion_6_arnold_census() {
    const auto t0 = std::chrono::steady_clock::now();
    const auto g = arnold_mod_map(7, 8, 4);
    std::vector<int> indeg(g.size(), 0);
    for (auto s : g.succ) ++indeg[s];
    bool permutation = true;
    for (int d : indeg)
        if (d != 1) permutation = false;

    const auto census = component_census(g);
    std::map<std::size_t, std::size_t> counts;
    std::size_t covered = 0;
    bool no_tails = true;
    for (const auto& e : census.entries) {
        counts[e.cycle_length] += e.count;
        covered += e.component_size * e.count;
        if (e.cycle_length != e.component_size) no_tails = false;
    }
    const bool brute = counts[16] == 8 && counts[8] == 8 && counts[4] == 8 &&
                       counts[2] == 12 && counts[1] == 8 && covered == 256;
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
    const bool ok = permutation && no_tails && brute && ms < 1000;
    report(6, "arnold census", ok,
           "brute force: 8x16 8x8 8x4 12x2 8x1 (sum 256); published counts list 11 "
           "two-cycles, which sum to 254 of 256 nodes - the brute-force census is "
           "authoritative");
}

void criterion_7_pow10() {
    const auto s14 = pow10_stats(14);
    bool ok = (s14.popcount == 17 && s14.bit_length == 47);
    for (int m = 1; m <= 50 && ok; ++m) {
        try {
            (void)pow10_stats(m);  // throws if the formula disagrees with the big integer
        } catch (const std::exception&) {
            ok = false;
        }
    }
    report(7, "pow10 stats", ok, "m=14 gives bit length 47, popcount 17");
}

void criterion_8_fixed_logistic() {
    const auto fl = logistic_fixed_map(61, 4, {6, Quantizer::Floor});
    const auto rd = logistic_fixed_map(61, 4, {6, Quantizer::Round});
    const auto ce = logistic_fixed_map(61, 4, {6, Quantizer::Ceil});
    bool ok = fl.size() == 65 && rd.size() == 65 && ce.size() == 65;
    for (const auto* g : {&fl, &rd, &ce})
        for (auto s : g->succ)
            if (s > 64) ok = false;
    ok = ok && fl.succ != rd.succ && rd.succ != ce.succ && fl.succ != ce.succ;
    report(8, "fixed-point logistic graphs", ok, "65 nodes each, pairwise distinct");
}

void criterion_9_wolf() {
    bool ok = true;
    std::string detail;

    // scale equivariance over 10 series with exact power-of-two factors
    for (int trial = 0; trial < 10 && ok; ++trial) {
        const auto z = logistic_series(0.11 + 0.07 * trial, 3.97 + 0.003 * trial, 1500);
        const auto [lo, hi] = std::minmax_element(z.begin(), z.end());
        EmbeddingConfig cfg{2, 0.1 * (*hi - *lo), 30.0};
        const auto base = wolf_lle(z, cfg);
        const double c = std::ldexp(1.0, (trial % 9) - 4);
        std::vector<double> scaled(z.size());
        for (std::size_t i = 0; i < z.size(); ++i) scaled[i] = c * z[i];
        const auto s = wolf_lle(scaled, {2, c * cfg.epsilon, 30.0});
        if (s.lambda != base.lambda || s.log.t_final != base.log.t_final ||
            s.log.q != base.log.q) {
            ok = false;
            detail = "scale equivariance violated";
        }
    }

    try {
        wolf_lle(std::vector<double>(200, 1.0), {2, 0.1, 30.0});
        ok = false;
        detail = "constant series did not raise";
    } catch (const DegenerateDistanceError&) {
    }

    const auto z = logistic_series(0.3, 4.0, 3000);
    const auto [lo, hi] = std::minmax_element(z.begin(), z.end());
    const auto result = wolf_lle(z, {2, 0.1 * (*hi - *lo), 30.0});
    if (!(result.lambda > 0.0)) {
        ok = false;
        detail = "logistic orbit exponent not positive";
    }
    report(9, "wolf estimator properties", ok,
           detail.empty() ? "lambda(logistic) = " + std::to_string(result.lambda) : detail);
}

}  // namespace

int main() {
    criterion_1_round_trip();
    criterion_2_proposition_1();
    criterion_3_collision_rate();
    criterion_4_affine_oracle();
    criterion_5_closed_form();
    criterion_6_arnold_census();
    criterion_7_pow10();
    criterion_8_fixed_logistic();
    criterion_9_wolf();
    if (failures) std::printf("%d criterion(s) FAILED\n", failures);
    else std::printf("all criteria passed\n");
    return failures ? 1 : 0;
}
