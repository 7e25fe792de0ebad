#pragma once

#include <cstdint>

#include "qmac/channel.hpp"
#include "qmac/gf2.hpp"
#include "qmac/rm.hpp"

namespace qmac {

enum class SuccessiveOrder { XFirst, ZFirst, XorFirst };

enum class DecoderKind { Joint, SuccessiveX, SuccessiveZ, SuccessiveXor };

/// Stable identifier used in reports and on the command line:
/// "joint", "succ-x", "succ-z", "succ-xor".
const char* decoder_name(DecoderKind kind);

struct DecodeResult {
    BitVector message1;
    BitVector message2;
    BitVector codeword1;
    BitVector codeword2;
    /// Natural log of the probability of the noise sequence implied by the
    /// decoded pair, sum_i ln P_noise(y_i - (c1_i, c2_i)); -inf permitted.
    double log_likelihood = 0.0;
    /// Left for callers that want to annotate the result; decoders set false.
    bool success_defined_externally = false;
};

struct SimReport {
    std::uint64_t trials = 0;
    std::uint64_t failures = 0;
    double error_rate = 0.0;
    double ci_low = 0.0; // 95% Wilson interval
    double ci_high = 0.0;
    std::uint64_t seed = 0;
    DecoderKind decoder_id = DecoderKind::Joint;
};

/// One simulated transmission: uniformly drawn messages, their encodings,
/// and the channel output, all addressed by (seed, trial) so trials can be
/// regenerated independently and in any order.
struct TrialSample {
    BitVector message1;
    BitVector message2;
    BitVector codeword1;
    BitVector codeword2;
    ChannelOutput received;
};

/// Joint log-likelihood ln P(noise = y - (c1w, c2w)) of a codeword pair,
/// with exact -inf for zero-probability symbols.
double pair_log_likelihood(const BitVector& c1w, const BitVector& c2w,
                           const ChannelOutput& y, const PauliChannel& ch);

/// Exact maximum-likelihood decoding by exhaustive enumeration of all
/// 2^(k1+k2) message pairs. Requires c1.m == c2.m and k1 + k2 <= 22. Ties
/// are broken toward the lexicographically smallest (message1, message2)
/// read as little-endian integers. Raises if every pair has likelihood 0.
DecodeResult joint_ml_decode(const RmCode& c1, const RmCode& c2,
                             const ChannelOutput& y, const PauliChannel& ch);

/// Two-stage decoding. XFirst: ML-decode c1 from the first components under
/// the bit-flip marginal, then ML-decode c2 given the recovered first-stage
/// error pattern; ZFirst symmetric. XorFirst: ML-decode the XOR word (which
/// lies in the larger of the two codes) from y1 ^ y2, then the lower-rate
/// code given it, recovering the remaining codeword by addition. Each stage
/// enumerates one code, so the guards are per-stage (k <= 22). The reported
/// log_likelihood is the joint pair likelihood of the final answer.
DecodeResult successive_decode(const RmCode& c1, const RmCode& c2,
                               const ChannelOutput& y, const PauliChannel& ch,
                               SuccessiveOrder order);

/// Runs the decoder selected by `kind` on one received word.
DecodeResult run_decoder(DecoderKind kind, const RmCode& c1, const RmCode& c2,
                         const ChannelOutput& y, const PauliChannel& ch);

/// Regenerates trial `trial` of the stream identified by `seed`: message
/// bits, encodings, and noisy output. Pure function of its arguments.
TrialSample sample_trial(const RmCode& c1, const RmCode& c2,
                         const PauliChannel& ch, std::uint64_t seed,
                         std::uint64_t trial);

/// Estimates the block error rate (decoded message pair != transmitted pair)
/// over `trials` independent trials. Deterministic for fixed (seed, trials,
/// kind) regardless of `threads` (0 = one per hardware thread).
SimReport monte_carlo(const RmCode& c1, const RmCode& c2,
                      const PauliChannel& ch, DecoderKind kind,
                      std::uint64_t trials, std::uint64_t seed,
                      unsigned threads = 1);

} // namespace qmac
