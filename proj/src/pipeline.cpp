#include "vduplex/pipeline.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace vduplex {

bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; std::uint64_t(d) * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::uint32_t binomial_mod(unsigned n, unsigned k, const PrimeField& field) {
    if (k > n) return 0;
    std::vector<std::uint32_t> row(n + 1, 0);
    row[0] = 1 % field.p();
    for (unsigned i = 1; i <= n; ++i)
        for (unsigned j = std::min(i, k); j >= 1; --j) row[j] = field.add(row[j], row[j - 1]);
    return row[k];
}

namespace {

FieldVec combine(const FieldVec& incoming, std::uint32_t q, const FieldVec& own,
                 const PrimeField& f) {
    FieldVec out(incoming.size());
    for (std::size_t i = 0; i < incoming.size(); ++i)
        out[i] = f.add(incoming[i], f.mul(q, own[i]));
    return out;
}

PipelineTrace run_pipeline_raw(int stages, std::uint32_t q,
                               const std::vector<FieldVec>& messages,
                               std::size_t total_slots, const PrimeField& field) {
    const std::size_t len = messages.empty() ? 0 : messages.front().size();
    PipelineTrace tr;
    tr.stages = stages;
    tr.p = field.p();
    tr.q = q;
    tr.message_len = len;
    tr.messages = messages;
    tr.stage_streams.assign(size_t(stages), {});
    tr.destination.reserve(total_slots);

    const FieldVec zero(len, 0);
    std::vector<FieldVec> state(size_t(stages), zero);  // u^[j] of the previous slot
    for (std::size_t t = 1; t <= total_slots; ++t) {
        // Destination hears the stage-K combination decoded in slot t-1.
        tr.destination.push_back(state[size_t(stages - 1)]);
        auto next = std::vector<FieldVec>(std::size_t(stages));
        const FieldVec& w = t <= messages.size() ? messages[t - 1] : zero;
        next[0] = combine(w, q, state[0], field);
        for (int j = 2; j <= stages; ++j)
            next[size_t(j - 1)] = combine(state[size_t(j - 2)], q, state[size_t(j - 1)], field);
        for (int j = 1; j <= stages; ++j) tr.stage_streams[size_t(j - 1)].push_back(next[size_t(j - 1)]);
        state = std::move(next);
    }
    return tr;
}

}  // namespace

PipelineTrace run_pipeline(int stages, std::uint32_t q, const std::vector<FieldVec>& messages,
                           std::size_t total_slots, const PrimeField& field) {
    if (stages < 1) throw std::invalid_argument("run_pipeline: stages must be >= 1");
    if (q % field.p() == 0)
        throw std::invalid_argument("run_pipeline: q must be a nonzero field element");
    if (messages.empty()) throw std::invalid_argument("run_pipeline: no messages");
    const std::size_t len = messages.front().size();
    for (const auto& w : messages) {
        if (w.size() != len) throw std::invalid_argument("run_pipeline: ragged messages");
        for (auto v : w)
            if (v >= field.p()) throw std::invalid_argument("run_pipeline: element out of range");
    }
    if (total_slots < size_t(stages) + messages.size())
        throw std::invalid_argument("run_pipeline: need at least stages + messages slots");

    PipelineTrace tr = run_pipeline_raw(stages, q, messages, total_slots, field);

    // Stage-reduction identity against an independently run (K-1)-stage
    // pipeline: u^(K)_{t+1} - q u^(K)_t = u^(K-1)_t.
    if (stages >= 2) {
        PipelineTrace sub = run_pipeline_raw(stages - 1, q, messages, total_slots, field);
        for (std::size_t t = 1; t < total_slots; ++t) {
            const FieldVec& hi_next = tr.destination[t];
            const FieldVec& hi = tr.destination[t - 1];
            const FieldVec& lo = sub.destination[t - 1];
            for (std::size_t i = 0; i < len; ++i)
                if (field.sub(hi_next[i], field.mul(q, hi[i])) != lo[i])
                    throw std::logic_error("run_pipeline: stage-reduction identity violated");
        }
    }
    return tr;
}

std::vector<FieldVec> decode_forward_substitution(const PipelineTrace& trace) {
    const PrimeField field(trace.p);
    const int k = trace.stages;
    const std::size_t n = trace.messages.size();
    if (trace.destination.size() < n + size_t(k))
        throw std::invalid_argument("decode_forward_substitution: trace too short");

    // Window coefficients (-q)^(l-1) C(K, l-1) on u^(K)_{t-l+K+1}, l = 1..K+1.
    std::vector<std::uint32_t> coeff(size_t(k) + 1);
    for (int l = 1; l <= k + 1; ++l) {
        std::uint32_t c = binomial_mod(unsigned(k), unsigned(l - 1), field);
        c = field.mul(c, field.pow(field.neg(trace.q), unsigned(l - 1)));
        coeff[size_t(l - 1)] = c;
    }

    std::vector<FieldVec> decoded(n, FieldVec(trace.message_len, 0));
    for (std::size_t t = 1; t <= n; ++t) {
        FieldVec& w = decoded[t - 1];
        for (int l = 1; l <= k + 1; ++l) {
            const FieldVec& u = trace.destination[t - size_t(l) + size_t(k)];  // slot t-l+K+1
            const std::uint32_t c = coeff[size_t(l - 1)];
            for (std::size_t i = 0; i < w.size(); ++i)
                w[i] = field.add(w[i], field.mul(c, u[i]));
        }
    }
    return decoded;
}

void corrupt_observation(PipelineTrace& trace, std::size_t slot, const FieldVec& delta) {
    if (slot < 1 || slot > trace.slots())
        throw std::invalid_argument("corrupt_observation: slot out of range");
    if (delta.size() != trace.message_len)
        throw std::invalid_argument("corrupt_observation: delta length mismatch");
    if (std::all_of(delta.begin(), delta.end(), [](std::uint32_t v) { return v == 0; }))
        throw std::invalid_argument("corrupt_observation: delta must be nonzero");
    const PrimeField field(trace.p);
    FieldVec& u = trace.destination[slot - 1];
    for (std::size_t i = 0; i < u.size(); ++i) u[i] = field.add(u[i], delta[i] % trace.p);
    trace.corrupted_slots.push_back(slot);
}

ErrorPropagation error_propagation_window(const PipelineTrace& trace) {
    if (trace.corrupted_slots.size() != 1)
        throw std::invalid_argument("error_propagation_window: exactly one corruption required");
    const PrimeField field(trace.p);
    const std::size_t s = trace.corrupted_slots.front();
    const int k = trace.stages;
    const std::size_t n = trace.messages.size();

    ErrorPropagation rep;
    const auto decoded = decode_forward_substitution(trace);
    for (std::size_t t = 1; t <= n; ++t)
        if (decoded[t - 1] != trace.messages[t - 1]) rep.affected.push_back(t);

    // Message t reads slot s iff t <= s <= t+K; the corruption lands on w_t
    // scaled by (-q)^(t+K-s) C(K, t+K-s), zero mod p only if p divides the
    // binomial coefficient.
    for (std::size_t t = 1; t <= n; ++t) {
        if (s < t || s > t + size_t(k)) continue;
        const unsigned pos = unsigned(t + size_t(k) - s);
        if (binomial_mod(unsigned(k), pos, field) != 0) rep.predicted.push_back(t);
    }
    return rep;
}

}  // namespace vduplex
