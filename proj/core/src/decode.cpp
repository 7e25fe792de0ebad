#include "qmac/decode.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <exception>
#include <limits>
#include <thread>
#include <vector>

#include "qmac/error.hpp"
#include "qmac/rng.hpp"

namespace qmac {

namespace {

constexpr double neg_inf = -std::numeric_limits<double>::infinity();

double safe_log(double p) { return p > 0.0 ? std::log(p) : neg_inf; }

// count * lp without ever forming 0 * (-inf).
double term(std::size_t count, double lp) {
    return count ? static_cast<double>(count) * lp : 0.0;
}

// table[d1][d2] = ln P_noise(d1, d2)
void joint_log_table(const PauliChannel& ch, double table[2][2]) {
    table[0][0] = safe_log(ch.p_i);
    table[0][1] = safe_log(ch.p_z);
    table[1][0] = safe_log(ch.p_x);
    table[1][1] = safe_log(ch.p_y);
}

// Score of a symbol sequence whose per-position pair is (a_i, b_i):
// sum_i table[a_i][b_i], with exact -inf for impossible symbols.
double score_pair_words(std::span<const std::uint64_t> aw,
                        std::span<const std::uint64_t> bw, std::size_t n,
                        const double table[2][2]) {
    std::size_t n01 = 0, n10 = 0, n11 = 0;
    for (std::size_t w = 0; w < aw.size(); ++w) {
        const std::uint64_t a = aw[w];
        const std::uint64_t b = bw[w];
        n11 += static_cast<std::size_t>(std::popcount(a & b));
        n10 += static_cast<std::size_t>(std::popcount(a & ~b));
        n01 += static_cast<std::size_t>(std::popcount(~a & b));
    }
    const std::size_t n00 = n - n01 - n10 - n11;
    return term(n00, table[0][0]) + term(n01, table[0][1]) +
           term(n10, table[1][0]) + term(n11, table[1][1]);
}

BitVector message_from_index(std::size_t k, std::uint64_t index) {
    BitVector v(k);
    for (std::size_t i = 0; i < k; ++i)
        if ((index >> i) & 1) v.set(i, true);
    return v;
}

void guard_stage(const RmCode& code) {
    if (code.k > 22)
        raise(ErrorKind::EnumerationLimit,
              "codeword enumeration capped at 2^22 messages per stage");
}

struct StageBest {
    std::uint32_t index = 0;
    double ll = neg_inf;
};

// ML over all messages of `code`: candidate c contributes
// sum_i table[fixed_i][(received ^ c)_i]. Codewords are walked in Gray-code
// order (one generator row flipped per step) so each candidate costs one
// pass over the packed words; ties resolve to the smallest message index.
StageBest stage_ml(const RmCode& code, const BitVector& received,
                   const BitVector& fixed, const double table[2][2]) {
    const auto yw = received.words();
    const auto aw = fixed.words();
    const std::size_t wpr = yw.size();
    std::vector<std::uint64_t> cw(wpr, 0);
    std::vector<std::uint64_t> bw(wpr, 0);
    const std::uint64_t total = std::uint64_t(1) << code.k;
    StageBest best;
    bool found = false;
    for (std::uint64_t i = 0; i < total; ++i) {
        if (i) {
            const auto rw = code.generator.row_words(
                static_cast<std::size_t>(std::countr_zero(i)));
            for (std::size_t w = 0; w < wpr; ++w) cw[w] ^= rw[w];
        }
        for (std::size_t w = 0; w < wpr; ++w) bw[w] = yw[w] ^ cw[w];
        const double ll = score_pair_words(aw, bw, code.n, table);
        if (ll == neg_inf) continue;
        const auto u = static_cast<std::uint32_t>(i ^ (i >> 1));
        if (!found || ll > best.ll || (ll == best.ll && u < best.index)) {
            best = {u, ll};
            found = true;
        }
    }
    if (!found)
        raise(ErrorKind::AllLikelihoodsZero,
              "every candidate codeword has zero likelihood");
    return best;
}

void require_received_shape(const RmCode& c1, const RmCode& c2,
                            const ChannelOutput& y) {
    if (y.y1.size() != c1.n || y.y2.size() != c2.n)
        raise(ErrorKind::DimensionMismatch,
              "received word length must equal the code length");
}

// 2x2 stage table for a plain crossover channel; the fixed word is all-zero
// so only row 0 is ever read.
void bsc_log_table(double crossover, double table[2][2]) {
    table[0][0] = safe_log(1.0 - crossover);
    table[0][1] = safe_log(crossover);
    table[1][0] = neg_inf;
    table[1][1] = neg_inf;
}

DecodeResult finish(const RmCode& c1, const RmCode& c2, std::uint64_t u1,
                    std::uint64_t u2, const ChannelOutput& y,
                    const PauliChannel& ch) {
    DecodeResult r;
    r.message1 = message_from_index(c1.k, u1);
    r.message2 = message_from_index(c2.k, u2);
    r.codeword1 = encode(c1.generator, r.message1);
    r.codeword2 = encode(c2.generator, r.message2);
    r.log_likelihood = pair_log_likelihood(r.codeword1, r.codeword2, y, ch);
    return r;
}

} // namespace

const char* decoder_name(DecoderKind kind) {
    switch (kind) {
    case DecoderKind::Joint: return "joint";
    case DecoderKind::SuccessiveX: return "succ-x";
    case DecoderKind::SuccessiveZ: return "succ-z";
    case DecoderKind::SuccessiveXor: return "succ-xor";
    }
    return "unknown";
}

double pair_log_likelihood(const BitVector& c1w, const BitVector& c2w,
                           const ChannelOutput& y, const PauliChannel& ch) {
    if (c1w.size() != y.y1.size() || c2w.size() != y.y2.size() ||
        c1w.size() != c2w.size())
        raise(ErrorKind::DimensionMismatch,
              "codewords and received words must share one length");
    double table[2][2];
    joint_log_table(ch, table);
    const BitVector e1 = c1w ^ y.y1;
    const BitVector e2 = c2w ^ y.y2;
    return score_pair_words(e1.words(), e2.words(), c1w.size(), table);
}

DecodeResult joint_ml_decode(const RmCode& c1, const RmCode& c2,
                             const ChannelOutput& y, const PauliChannel& ch) {
    if (c1.m != c2.m)
        raise(ErrorKind::DimensionMismatch,
              "joint decoding requires codes of equal length");
    if (c1.k + c2.k > 22)
        raise(ErrorKind::EnumerationLimit,
              "message-pair enumeration capped at 2^22 (k1 + k2 <= 22)");
    require_received_shape(c1, c2, y);

    double table[2][2];
    joint_log_table(ch, table);

    const auto y1w = y.y1.words();
    const auto y2w = y.y2.words();
    const std::size_t wpr = y1w.size();
    std::vector<std::uint64_t> cw1(wpr, 0), cw2(wpr, 0);
    std::vector<std::uint64_t> e1(wpr, 0), e2(wpr, 0);

    const std::uint64_t total1 = std::uint64_t(1) << c1.k;
    const std::uint64_t total2 = std::uint64_t(1) << c2.k;
    double best = neg_inf;
    std::uint32_t b1 = 0, b2 = 0;
    bool found = false;
    for (std::uint64_t i1 = 0; i1 < total1; ++i1) {
        if (i1) {
            const auto rw = c1.generator.row_words(
                static_cast<std::size_t>(std::countr_zero(i1)));
            for (std::size_t w = 0; w < wpr; ++w) cw1[w] ^= rw[w];
        }
        const auto u1 = static_cast<std::uint32_t>(i1 ^ (i1 >> 1));
        for (std::size_t w = 0; w < wpr; ++w) e1[w] = y1w[w] ^ cw1[w];
        std::fill(cw2.begin(), cw2.end(), 0);
        for (std::uint64_t i2 = 0; i2 < total2; ++i2) {
            if (i2) {
                const auto rw = c2.generator.row_words(
                    static_cast<std::size_t>(std::countr_zero(i2)));
                for (std::size_t w = 0; w < wpr; ++w) cw2[w] ^= rw[w];
            }
            for (std::size_t w = 0; w < wpr; ++w) e2[w] = y2w[w] ^ cw2[w];
            const double ll = score_pair_words(e1, e2, c1.n, table);
            if (ll == neg_inf) continue;
            const auto u2 = static_cast<std::uint32_t>(i2 ^ (i2 >> 1));
            if (!found || ll > best ||
                (ll == best && (u1 < b1 || (u1 == b1 && u2 < b2)))) {
                best = ll;
                b1 = u1;
                b2 = u2;
                found = true;
            }
        }
    }
    if (!found)
        raise(ErrorKind::AllLikelihoodsZero,
              "received word has zero probability under every message pair");
    return finish(c1, c2, b1, b2, y, ch);
}

DecodeResult successive_decode(const RmCode& c1, const RmCode& c2,
                               const ChannelOutput& y, const PauliChannel& ch,
                               SuccessiveOrder order) {
    if (c1.m != c2.m) {
        if (order == SuccessiveOrder::XorFirst)
            raise(ErrorKind::InvalidOrder,
                  "xor-first decoding needs codes of the same length so the "
                  "xor word stays inside the larger code");
        raise(ErrorKind::DimensionMismatch,
              "successive decoding requires codes of equal length");
    }
    require_received_shape(c1, c2, y);

    double joint[2][2];
    joint_log_table(ch, joint);
    const BitVector zero(c1.n);

    if (order == SuccessiveOrder::XFirst) {
        // Stage 1: user 1 over the bit-flip marginal of the first components.
        guard_stage(c1);
        double t1[2][2];
        bsc_log_table(ch.p_x + ch.p_y, t1);
        const StageBest s1 = stage_ml(c1, y.y1, zero, t1);
        const BitVector cw1 =
            encode(c1.generator, message_from_index(c1.k, s1.index));
        // Stage 2: user 2 scored jointly with the realized first-stage error
        // pattern; the conditional argmax coincides with this joint argmax.
        guard_stage(c2);
        const BitVector d1 = cw1 ^ y.y1;
        const StageBest s2 = stage_ml(c2, y.y2, d1, joint);
        return finish(c1, c2, s1.index, s2.index, y, ch);
    }

    if (order == SuccessiveOrder::ZFirst) {
        guard_stage(c2);
        double t1[2][2];
        bsc_log_table(ch.p_z + ch.p_y, t1);
        const StageBest s1 = stage_ml(c2, y.y2, zero, t1);
        const BitVector cw2 =
            encode(c2.generator, message_from_index(c2.k, s1.index));
        guard_stage(c1);
        const BitVector d2 = cw2 ^ y.y2;
        // stage_ml indexes the table as [fixed][varying]; transpose so the
        // entries stay [d1][d2].
        const double t2[2][2] = {{joint[0][0], joint[1][0]},
                                 {joint[0][1], joint[1][1]}};
        const StageBest s2 = stage_ml(c1, y.y1, d2, t2);
        return finish(c1, c2, s2.index, s1.index, y, ch);
    }

    // XorFirst. Stage 1 decodes c1w ^ c2w, which lies in the larger code, from
    // y1 ^ y2; a position flips there exactly when an X or Z error hit it.
    const RmCode& high = c1.r >= c2.r ? c1 : c2;
    guard_stage(high);
    double t1[2][2];
    bsc_log_table(ch.p_x + ch.p_z, t1);
    const BitVector yx = y.y1 ^ y.y2;
    const StageBest s1 = stage_ml(high, yx, zero, t1);
    const BitVector cxw =
        encode(high.generator, message_from_index(high.k, s1.index));
    const BitVector s = yx ^ cxw; // realized xor-error pattern, now fixed

    // Stage 2 enumerates the lower-rate code (user 1 on a rate tie); with the
    // xor word pinned, the other error component is determined per position,
    // so score with the joint table re-indexed by (s_i, d_i).
    const bool low_is_c1 = c1.r <= c2.r;
    guard_stage(low_is_c1 ? c1 : c2);
    StageBest s2;
    BitVector low_cw;
    if (low_is_c1) {
        // varying component is d1; d2 = d1 ^ s
        const double t2[2][2] = {{joint[0][0], joint[1][1]},
                                 {joint[0][1], joint[1][0]}};
        s2 = stage_ml(c1, y.y1, s, t2);
        low_cw = encode(c1.generator, message_from_index(c1.k, s2.index));
    } else {
        // varying component is d2; d1 = d2 ^ s
        const double t2[2][2] = {{joint[0][0], joint[1][1]},
                                 {joint[1][0], joint[0][1]}};
        s2 = stage_ml(c2, y.y2, s, t2);
        low_cw = encode(c2.generator, message_from_index(c2.k, s2.index));
    }

    const BitVector other_cw = low_cw ^ cxw;
    const auto other_msg = preimage((low_is_c1 ? c2 : c1).generator, other_cw);
    if (!other_msg)
        raise(ErrorKind::DomainError,
              "xor-first recovery produced a word outside the companion code");
    DecodeResult r;
    if (low_is_c1) {
        r.message1 = message_from_index(c1.k, s2.index);
        r.message2 = *other_msg;
        r.codeword1 = low_cw;
        r.codeword2 = other_cw;
    } else {
        r.message1 = *other_msg;
        r.message2 = message_from_index(c2.k, s2.index);
        r.codeword1 = other_cw;
        r.codeword2 = low_cw;
    }
    r.log_likelihood = pair_log_likelihood(r.codeword1, r.codeword2, y, ch);
    return r;
}

DecodeResult run_decoder(DecoderKind kind, const RmCode& c1, const RmCode& c2,
                         const ChannelOutput& y, const PauliChannel& ch) {
    switch (kind) {
    case DecoderKind::Joint: return joint_ml_decode(c1, c2, y, ch);
    case DecoderKind::SuccessiveX:
        return successive_decode(c1, c2, y, ch, SuccessiveOrder::XFirst);
    case DecoderKind::SuccessiveZ:
        return successive_decode(c1, c2, y, ch, SuccessiveOrder::ZFirst);
    case DecoderKind::SuccessiveXor:
        return successive_decode(c1, c2, y, ch, SuccessiveOrder::XorFirst);
    }
    raise(ErrorKind::DomainError, "unknown decoder kind");
}

TrialSample sample_trial(const RmCode& c1, const RmCode& c2,
                         const PauliChannel& ch, std::uint64_t seed,
                         std::uint64_t trial) {
    // Streams 4t+1 / 4t+2 / 4t+3 carry trial t's message and noise draws;
    // stream 0 stays reserved for stand-alone sample_noise.
    TrialSample t;
    t.message1 = BitVector(c1.k);
    for (std::size_t j = 0; j < c1.k; ++j)
        if (unit_draw(seed, (trial << 2) | 1, j) < 0.5) t.message1.set(j, true);
    t.message2 = BitVector(c2.k);
    for (std::size_t j = 0; j < c2.k; ++j)
        if (unit_draw(seed, (trial << 2) | 2, j) < 0.5) t.message2.set(j, true);
    t.codeword1 = encode(c1.generator, t.message1);
    t.codeword2 = encode(c2.generator, t.message2);
    t.received = {t.codeword1, t.codeword2};
    for (std::size_t i = 0; i < c1.n; ++i) {
        const NoisePair d = draw_noise(ch, seed, (trial << 2) | 3, i);
        if (d.d1) t.received.y1.flip(i);
        if (d.d2) t.received.y2.flip(i);
    }
    return t;
}

SimReport monte_carlo(const RmCode& c1, const RmCode& c2,
                      const PauliChannel& ch, DecoderKind kind,
                      std::uint64_t trials, std::uint64_t seed,
                      unsigned threads) {
    if (trials < 1)
        raise(ErrorKind::ParameterOutOfRange, "trial count must be >= 1");

    auto run_range = [&](std::uint64_t lo, std::uint64_t hi) {
        std::uint64_t failures = 0;
        for (std::uint64_t t = lo; t < hi; ++t) {
            const TrialSample trial = sample_trial(c1, c2, ch, seed, t);
            const DecodeResult dec = run_decoder(kind, c1, c2, trial.received, ch);
            if (dec.message1 != trial.message1 || dec.message2 != trial.message2)
                ++failures;
        }
        return failures;
    };

    if (threads == 0) {
        const unsigned hw = std::thread::hardware_concurrency();
        threads = hw ? hw : 1;
    }
    if (threads > trials) threads = static_cast<unsigned>(trials);

    std::uint64_t failures = 0;
    if (threads <= 1) {
        failures = run_range(0, trials);
    } else {
        std::vector<std::uint64_t> partial(threads, 0);
        std::vector<std::exception_ptr> errors(threads);
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (unsigned ti = 0; ti < threads; ++ti) {
            const std::uint64_t lo = trials * ti / threads;
            const std::uint64_t hi = trials * (ti + 1) / threads;
            pool.emplace_back([&, ti, lo, hi] {
                try {
                    partial[ti] = run_range(lo, hi);
                } catch (...) {
                    errors[ti] = std::current_exception();
                }
            });
        }
        for (auto& th : pool) th.join();
        for (const auto& e : errors)
            if (e) std::rethrow_exception(e);
        for (std::uint64_t f : partial) failures += f;
    }

    SimReport report;
    report.trials = trials;
    report.failures = failures;
    report.error_rate = static_cast<double>(failures) / static_cast<double>(trials);
    report.seed = seed;
    report.decoder_id = kind;

    // 95% Wilson score interval.
    const double z = 1.959963984540054;
    const double t = static_cast<double>(trials);
    const double p = report.error_rate;
    const double denom = 1.0 + z * z / t;
    const double center = (p + z * z / (2.0 * t)) / denom;
    const double half =
        z * std::sqrt(p * (1.0 - p) / t + z * z / (4.0 * t * t)) / denom;
    report.ci_low = std::max(0.0, center - half);
    report.ci_high = std::min(1.0, center + half);
    return report;
}

} // namespace qmac
