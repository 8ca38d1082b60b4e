#pragma once

#include <cstddef>
#include <vector>

#include "vduplex/field.hpp"

namespace vduplex {

using FieldVec = std::vector<std::uint32_t>;

/// Slot-indexed record of a forward-substitution pipeline run. Slots are
/// 1-based in the accessors to match the time indexing of the combinations;
/// storage index t-1 holds slot t.
///
/// stage_streams[j-1][t-1] is the combination u^[j]_t decoded by the stage-j
/// relay in slot t; destination[t-1] is the observation u^(K)_t, i.e. the
/// stage-K combination transmitted in slot t (decoded in slot t-1).
struct PipelineTrace {
    int stages = 1;
    std::uint32_t p = 0;
    std::uint32_t q = 0;
    std::size_t message_len = 0;
    std::vector<FieldVec> messages;                       // w_t, t = 1..N
    std::vector<std::vector<FieldVec>> stage_streams;     // [stage][slot]
    std::vector<FieldVec> destination;                    // u^(K)_t, t = 1..T
    std::vector<std::size_t> corrupted_slots;             // 1-based

    std::size_t slots() const { return destination.size(); }
};

/// Runs the K-stage pipeline: the stage-1 relay decodes u_t = w_t + q u_{t-1},
/// every later stage decodes u^[j]_t = u^[j-1]_{t-1} + q u^[j]_{t-1}, and the
/// destination observes the stage-K stream one slot late. The first K
/// destination slots are zero and slot K+1 carries w_1 uninterfered.
///
/// For K >= 2 the run co-simulates the (K-1)-stage pipeline and verifies the
/// stage-reduction identity u^(K)_{t+1} - q u^(K)_t = u^(K-1)_t slot by slot.
/// Requires q != 0 (q = 0 would degenerate to plain decode-and-forward) and
/// total_slots >= stages + messages.size().
PipelineTrace run_pipeline(int stages, std::uint32_t q, const std::vector<FieldVec>& messages,
                           std::size_t total_slots, const PrimeField& field);

/// Sliding-window forward substitution: recovers w_t at slot t+K from the
/// K+1 observations u^(K)_t..u^(K)_{t+K} with binomial coefficients
/// (-q)^(l-1) C(K, l-1). Exact on an uncorrupted trace.
std::vector<FieldVec> decode_forward_substitution(const PipelineTrace& trace);

/// Adds a nonzero disturbance to the destination observation of one slot.
void corrupt_observation(PipelineTrace& trace, std::size_t slot, const FieldVec& delta);

struct ErrorPropagation {
    std::vector<std::size_t> affected;   // message indices decoded incorrectly
    std::vector<std::size_t> predicted;  // sliding-window support of the corruption
};

/// Decodes a trace with exactly one corrupted observation and reports which
/// messages were affected; at most K+1 by the window structure. `predicted`
/// is the index set where the corruption's window coefficient is nonzero mod p.
ErrorPropagation error_propagation_window(const PipelineTrace& trace);

}  // namespace vduplex
