#pragma once

#include <cassert>
#include <cstdint>
#include <deque>
#include <optional>

namespace lis {

// A channel carries at most one token per cycle. Void marks a stall cycle;
// Data tokens carry an opaque 64-bit value plus a provenance triple
// (origin, firing, port) that makes two streams comparable token-for-token.
struct Token {
  enum class Kind : std::uint8_t { Void, Data };

  Kind kind = Kind::Void;
  std::uint32_t origin = 0;  // producing node id
  std::uint64_t firing = 0;  // firing index at the producer
  std::uint32_t port = 0;    // producer output port
  std::uint64_t value = 0;

  static Token void_token() { return {}; }
  static Token data(std::uint32_t origin, std::uint64_t firing, std::uint32_t port,
                    std::uint64_t value) {
    return Token{Kind::Data, origin, firing, port, value};
  }
  bool is_data() const { return kind == Kind::Data; }

  friend bool operator==(const Token&, const Token&) = default;
};

// One cycle of a channel. valid holds iff data is a Data token; a transfer
// happens at the clock edge iff valid && !stop.
struct ChannelWires {
  bool valid = false;
  bool stop = false;
  Token data{};
};

// Two-deep registered elastic buffer segmenting a channel. Everything it
// presents (valid/data downstream, stop upstream) is a function of registered
// state only, so a relay station has zero combinational input-to-output
// paths. stop is asserted exactly while both slots are full; capacity 2
// absorbs the one token a producer may have in flight when stop reaches it.
class RelayStation {
 public:
  struct StepResult {
    bool out_valid = false;  // presented downstream during this cycle
    Token out{};
    bool stop_up = false;    // presented upstream during this cycle
    bool overflow = false;   // upstream ignored stop and dropped a token
  };

  void reset() {
    slots_.clear();
    stop_reg_ = false;
    refused_.reset();
  }

  // One clock cycle: returns what the station presented during the cycle and
  // commits the edge (departure, arrival, stop register).
  StepResult step(bool in_valid, const Token& in, bool downstream_stop);

  // Presented values, readable without committing (the simulator resolves
  // wires before committing edges).
  bool out_valid() const { return !slots_.empty(); }
  Token out_token() const { return slots_.empty() ? Token::void_token() : slots_.front(); }
  bool stop_up() const { return stop_reg_; }
  std::size_t occupancy() const { return slots_.size(); }

 private:
  std::deque<Token> slots_;         // FIFO, size <= 2
  bool stop_reg_ = false;
  std::optional<Token> refused_;    // token refused at the previous edge
};

}  // namespace lis
