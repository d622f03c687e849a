#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eprsim/encoders.hpp"

namespace eprsim::dense {

struct BsmOutcome {
    ChannelIndex alice;  // first slot of the product ket
    ChannelIndex bob;    // second slot
    BellLabel label;     // decoded Bell label
    std::string renamed; // 2N-slot strip of 0/1/blank
};

/// Bob's measurement chain U_(N) (H_x1..H_xN x I) PCS together with the
/// decode table obtained by pushing every Bell state through it once.
class BsmContext {
  public:
    BsmContext(int n, const HadamardMatrix& h);
    explicit BsmContext(int n); // default Hadamard

    int channels() const { return n_; }
    const Mat& chain() const { return chain_; }
    const HadamardMatrix& hadamard() const { return h_; }

    /// Identify `state` (a pair vector) as a Bell state.  The chain output
    /// must be a single product ket up to `tolerance` (deviation of the
    /// dominant |amplitude|^2 from 1); otherwise AmbiguityError.
    BsmOutcome measure(const Vec& state, double tolerance = 1e-8) const;

    /// Table row for a given label: (product ket, rename string).
    BsmOutcome expected_outcome(const BellLabel& label) const;

  private:
    int n_;
    HadamardMatrix h_;
    Mat chain_;
    std::vector<int> ket_to_flat_; // product-ket index -> flat Bell code
    std::vector<int> flat_to_ket_;
};

/// The 2N-slot strip: Alice's channel fills slot |l| and Bob's fills slot
/// N+|m|; a positive channel writes 0, a negative one writes 1, every other
/// slot stays blank.
std::string rename_outcome(ChannelIndex alice, ChannelIndex bob, int n,
                           const std::string& blank = "⊔");

struct RoundTripRecord {
    int n = 0;
    BellLabel label;
    BsmOutcome outcome;
    std::string message_in;
    std::string message_out;
    bool ok = false;
};

/// Message -> label -> (O x I)|psi_1> -> BSM -> label -> message.  Messages
/// are bit strings of length 2*log2(2N) when 2N is a power of two; otherwise
/// decimal integers in [0, 4N^2).
RoundTripRecord dense_roundtrip(const BsmContext& ctx, const std::string& message);

std::string flat_code_to_message(int flat, int n);
int message_to_flat_code(const std::string& message, int n);

} // namespace eprsim::dense
