#include "eprsim/bsm.hpp"

#include <cmath>

namespace eprsim::dense {

std::string rename_outcome(ChannelIndex alice, ChannelIndex bob, int n,
                           const std::string& blank) {
    std::vector<std::string> slots(2 * n, blank);
    slots[std::abs(alice.value) - 1] = alice.value > 0 ? "0" : "1";
    slots[n + std::abs(bob.value) - 1] = bob.value > 0 ? "0" : "1";
    std::string out;
    for (const auto& s : slots) out += s;
    return out;
}

BsmContext::BsmContext(int n, const HadamardMatrix& h) : n_(n), h_(h) {
    if (h_.order() != 2 * n_) throw SizeError("Hadamard order must be 2N");
    if (!u_gate_available(n_)) {
        throw CapabilityError("BSM chain unavailable for N = " + std::to_string(n_));
    }
    const int d = 2 * n_;
    Mat hstage = Mat::Zero(d * d, d * d);
    const Mat hall = hadamard_all(n_);
    for (int a = 0; a < d; ++a) {
        for (int b = 0; b < d; ++b) {
            if (hall(a, b) == 0.0) continue;
            hstage.block(a * d, b * d, d, d) =
                hall(a, b) * Mat::Identity(d, d);
        }
    }
    chain_ = u_gate(n_) * hstage * pcs_gate(n_);

    ket_to_flat_.assign(d * d, 0);
    flat_to_ket_.assign(4 * n_ * n_ + 1, -1);
    for (int flat = 1; flat <= 4 * n_ * n_; ++flat) {
        const Vec image = chain_ * bell_state(n_, h_, BellLabel::from_flat(flat, n_));
        int best = 0;
        for (int i = 1; i < image.size(); ++i) {
            if (std::abs(image(i)) > std::abs(image(best))) best = i;
        }
        if (std::abs(std::abs(image(best)) - 1.0) > 1e-9) {
            throw StateError("BSM chain did not collapse a Bell state to a product ket");
        }
        if (ket_to_flat_[best] != 0) {
            throw StateError("BSM chain outcome collision; decode table not bijective");
        }
        ket_to_flat_[best] = flat;
        flat_to_ket_[flat] = best;
    }
}

BsmContext::BsmContext(int n) : BsmContext(n, default_hadamard(2 * n)) {}

BsmOutcome BsmContext::measure(const Vec& state, double tolerance) const {
    if (state.size() != 4 * n_ * n_) throw SizeError("pair state has wrong dimension");
    const Vec image = chain_ * state;
    int best = 0;
    for (int i = 1; i < image.size(); ++i) {
        if (std::abs(image(i)) > std::abs(image(best))) best = i;
    }
    const double p = std::norm(image(best));
    if (1.0 - p > tolerance) {
        throw AmbiguityError("BSM output not within tolerance of a product ket");
    }
    if (ket_to_flat_[best] == 0) {
        throw AmbiguityError("BSM output landed outside the Bell image set");
    }
    const int d = 2 * n_;
    BsmOutcome out;
    out.alice = ChannelIndex::from_basis_position(best / d, n_);
    out.bob = ChannelIndex::from_basis_position(best % d, n_);
    out.label = BellLabel::from_flat(ket_to_flat_[best], n_);
    out.renamed = rename_outcome(out.alice, out.bob, n_);
    return out;
}

BsmOutcome BsmContext::expected_outcome(const BellLabel& label) const {
    check_label(label, n_);
    const int ket = flat_to_ket_[label.flat_code(n_)];
    const int d = 2 * n_;
    BsmOutcome out;
    out.alice = ChannelIndex::from_basis_position(ket / d, n_);
    out.bob = ChannelIndex::from_basis_position(ket % d, n_);
    out.label = label;
    out.renamed = rename_outcome(out.alice, out.bob, n_);
    return out;
}

namespace {

bool power_of_two(int v) { return v > 0 && (v & (v - 1)) == 0; }

int log2_int(int v) {
    int e = 0;
    while ((1 << e) < v) ++e;
    return e;
}

} // namespace

std::string flat_code_to_message(int flat, int n) {
    const int value = flat - 1;
    if (power_of_two(2 * n)) {
        const int bits = 2 * log2_int(2 * n);
        std::string msg(bits, '0');
        for (int b = 0; b < bits; ++b) {
            if (value & (1 << (bits - 1 - b))) msg[b] = '1';
        }
        return msg;
    }
    return std::to_string(value);
}

int message_to_flat_code(const std::string& message, int n) {
    if (power_of_two(2 * n)) {
        const int bits = 2 * log2_int(2 * n);
        if (static_cast<int>(message.size()) != bits) {
            throw FormatError("message must be " + std::to_string(bits) + " bits");
        }
        int value = 0;
        for (char c : message) {
            if (c != '0' && c != '1') throw FormatError("message must be binary");
            value = (value << 1) | (c - '0');
        }
        return value + 1;
    }
    int value = 0;
    try {
        value = std::stoi(message);
    } catch (const std::exception&) {
        throw FormatError("message must be an integer in [0, 4N^2)");
    }
    if (value < 0 || value >= 4 * n * n) throw FormatError("message out of range");
    return value + 1;
}

RoundTripRecord dense_roundtrip(const BsmContext& ctx, const std::string& message) {
    const int n = ctx.channels();
    RoundTripRecord rec;
    rec.n = n;
    rec.message_in = message;
    rec.label = BellLabel::from_flat(message_to_flat_code(message, n), n);

    const Mat encoder = encode_operator(n, ctx.hadamard(), rec.label);
    const Vec psi1 = bell_state(n, ctx.hadamard(), BellLabel{1, -1, 1});
    const Vec sent = apply_alice(encoder, psi1, n);

    rec.outcome = ctx.measure(sent);
    rec.message_out = flat_code_to_message(rec.outcome.label.flat_code(n), n);
    rec.ok = rec.message_out == rec.message_in;
    return rec;
}

} // namespace eprsim::dense
