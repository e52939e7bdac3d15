#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lis/errors.hpp"

namespace lis {

inline constexpr std::uint32_t kMaxPortsPerDirection = 32;

constexpr std::uint32_t width_mask(std::uint32_t n) {
  return n >= 32 ? 0xFFFFFFFFu : ((1u << n) - 1u);
}

// ceil(log2(x)) with clog2(0) = clog2(1) = 0.
std::uint32_t clog2(std::uint64_t x);

struct PortShape {
  std::uint32_t n_inputs = 0;
  std::uint32_t n_outputs = 0;

  std::uint32_t ports() const { return n_inputs + n_outputs; }
  friend bool operator==(const PortShape&, const PortShape&) = default;
};

// One step of a cyclic IO schedule: either a synchronization point (the IP
// must exchange data on exactly the masked ports before continuing) or a
// free-run cycle (clock enabled, no IO). Bit i of a mask is port i.
struct ScheduleStep {
  bool sync = false;
  std::uint32_t in_mask = 0;
  std::uint32_t out_mask = 0;

  static ScheduleStep run() { return {}; }
  static ScheduleStep make_sync(std::uint32_t in, std::uint32_t out) {
    return ScheduleStep{true, in, out};
  }
  friend bool operator==(const ScheduleStep&, const ScheduleStep&) = default;
};

// Cyclic IO schedule: after the last step execution wraps to steps[0], which
// must be a sync step (a leading run cycle would belong to no operation).
struct IOSchedule {
  PortShape shape;
  std::vector<ScheduleStep> steps;

  friend bool operator==(const IOSchedule&, const IOSchedule&) = default;
};

// One operation word of the synchronization processor: the ports to wait on,
// plus how many free-run cycles follow the synchronization cycle.
struct SyncOp {
  std::uint32_t in_mask = 0;
  std::uint32_t out_mask = 0;
  std::uint32_t run_cycles = 0;

  friend bool operator==(const SyncOp&, const SyncOp&) = default;
};

// Cyclic operation program. w_run is the minimal run-field width for the
// program's largest run count (at least 1 bit), so the word width depends
// only on the port counts and the longest free run, never on depth.
struct SPProgram {
  PortShape shape;
  std::vector<SyncOp> ops;
  std::uint32_t w_run = 1;

  std::size_t depth() const { return ops.size(); }
  std::uint32_t word_width() const { return shape.n_inputs + shape.n_outputs + w_run; }
  std::uint64_t rom_bits() const { return static_cast<std::uint64_t>(depth()) * word_width(); }

  friend bool operator==(const SPProgram&, const SPProgram&) = default;
};

enum class ScheduleErrorKind {
  BadShape,
  EmptySchedule,
  FirstStepNotSync,
  MaskWidthMismatch,
  RunFieldOverflow,
  WordWidthOverflow,
  WordLengthMismatch,
  BadProgram,
};

class ScheduleError : public ValidationError {
 public:
  ScheduleError(ScheduleErrorKind kind, const std::string& msg)
      : ValidationError(msg), kind_(kind) {}
  ScheduleErrorKind kind() const { return kind_; }

 private:
  ScheduleErrorKind kind_;
};

// Returns s unchanged if every IOSchedule invariant holds, throws otherwise.
const IOSchedule& validate_schedule(const IOSchedule& s);
void validate_program(const SPProgram& p);

// Run-length compression: each sync step becomes one op whose run_cycles is
// the number of run steps immediately following it (trailing runs attach to
// the last op). expand_program is the exact inverse.
SPProgram compile_schedule(const IOSchedule& s);
IOSchedule expand_program(const SPProgram& p);

// Operation words can reach 32+32+32 bits, so they are held in a 128-bit
// integer. Layout MSB->LSB: in_mask | out_mask | run_cycles.
using OpWord = unsigned __int128;

OpWord encode_word(const SyncOp& op, const PortShape& shape, std::uint32_t w_run);
SyncOp decode_word(OpWord w, const PortShape& shape, std::uint32_t w_run);

// Uppercase hex, zero-padded to ceil(word_width/4) digits.
std::string word_to_hex(OpWord w, std::uint32_t word_width);
OpWord hex_to_word(const std::string& hex, std::uint32_t word_width);

// "# sp-rom v1" text image: header line with shape/widths/depth, then one hex
// word per line in op order. parse accepts '#' comment lines after the first.
std::string emit_rom_image(const SPProgram& p);
SPProgram parse_rom_image(const std::string& text);

}  // namespace lis
