#include "lis/schedule.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <sstream>

namespace lis {

std::uint32_t clog2(std::uint64_t x) {
  if (x <= 1) return 0;
  return static_cast<std::uint32_t>(std::bit_width(x - 1));
}

namespace {

void check_shape(const PortShape& shape) {
  if (shape.n_inputs > kMaxPortsPerDirection || shape.n_outputs > kMaxPortsPerDirection)
    throw ScheduleError(ScheduleErrorKind::BadShape,
                        "port count exceeds " + std::to_string(kMaxPortsPerDirection) +
                            " per direction");
  if (shape.ports() == 0)
    throw ScheduleError(ScheduleErrorKind::BadShape, "shape has no ports");
}

std::uint32_t min_w_run(const std::vector<SyncOp>& ops) {
  std::uint32_t max_run = 0;
  for (const auto& op : ops) max_run = std::max(max_run, op.run_cycles);
  return std::max<std::uint32_t>(1, std::bit_width(max_run));
}

}  // namespace

const IOSchedule& validate_schedule(const IOSchedule& s) {
  check_shape(s.shape);
  if (s.steps.empty())
    throw ScheduleError(ScheduleErrorKind::EmptySchedule, "schedule has no steps");
  if (!s.steps.front().sync)
    throw ScheduleError(ScheduleErrorKind::FirstStepNotSync,
                        "first step must be a sync step (rotate the schedule so a "
                        "sync step comes first)");
  for (std::size_t i = 0; i < s.steps.size(); ++i) {
    const auto& st = s.steps[i];
    if (!st.sync) continue;
    if (st.in_mask & ~width_mask(s.shape.n_inputs))
      throw ScheduleError(ScheduleErrorKind::MaskWidthMismatch,
                          "step " + std::to_string(i) + ": in mask has bits beyond " +
                              std::to_string(s.shape.n_inputs) + " input ports");
    if (st.out_mask & ~width_mask(s.shape.n_outputs))
      throw ScheduleError(ScheduleErrorKind::MaskWidthMismatch,
                          "step " + std::to_string(i) + ": out mask has bits beyond " +
                              std::to_string(s.shape.n_outputs) + " output ports");
  }
  return s;
}

void validate_program(const SPProgram& p) {
  check_shape(p.shape);
  if (p.ops.empty())
    throw ScheduleError(ScheduleErrorKind::BadProgram, "program has no operations");
  if (p.w_run == 0 || p.w_run > 32)
    throw ScheduleError(ScheduleErrorKind::BadProgram, "run-field width out of range");
  for (std::size_t i = 0; i < p.ops.size(); ++i) {
    const auto& op = p.ops[i];
    if (op.in_mask & ~width_mask(p.shape.n_inputs))
      throw ScheduleError(ScheduleErrorKind::MaskWidthMismatch,
                          "op " + std::to_string(i) + ": in mask too wide");
    if (op.out_mask & ~width_mask(p.shape.n_outputs))
      throw ScheduleError(ScheduleErrorKind::MaskWidthMismatch,
                          "op " + std::to_string(i) + ": out mask too wide");
  }
  if (p.w_run != min_w_run(p.ops))
    throw ScheduleError(ScheduleErrorKind::BadProgram,
                        "run-field width is not minimal for the program's runs");
}

SPProgram compile_schedule(const IOSchedule& s) {
  validate_schedule(s);
  std::vector<SyncOp> ops;
  for (const auto& st : s.steps) {
    if (st.sync) {
      ops.push_back(SyncOp{st.in_mask, st.out_mask, 0});
    } else {
      auto& run = ops.back().run_cycles;  // steps[0] is sync, so back() exists
      if (run == 0xFFFFFFFFu)
        throw ScheduleError(ScheduleErrorKind::RunFieldOverflow,
                            "free run exceeds 2^32-1 cycles");
      ++run;
    }
  }
  return SPProgram{s.shape, std::move(ops), min_w_run(ops)};
}

IOSchedule expand_program(const SPProgram& p) {
  validate_program(p);
  IOSchedule s{p.shape, {}};
  for (const auto& op : p.ops) {
    s.steps.push_back(ScheduleStep::make_sync(op.in_mask, op.out_mask));
    for (std::uint32_t i = 0; i < op.run_cycles; ++i) s.steps.push_back(ScheduleStep::run());
  }
  return s;
}

OpWord encode_word(const SyncOp& op, const PortShape& shape, std::uint32_t w_run) {
  check_shape(shape);
  if (w_run == 0 || w_run > 32)
    throw ScheduleError(ScheduleErrorKind::WordWidthOverflow, "run-field width out of range");
  if (op.in_mask & ~width_mask(shape.n_inputs))
    throw ScheduleError(ScheduleErrorKind::WordWidthOverflow, "in mask does not fit shape");
  if (op.out_mask & ~width_mask(shape.n_outputs))
    throw ScheduleError(ScheduleErrorKind::WordWidthOverflow, "out mask does not fit shape");
  if (op.run_cycles & ~width_mask(w_run))
    throw ScheduleError(ScheduleErrorKind::WordWidthOverflow,
                        "run count does not fit " + std::to_string(w_run) + " bits");
  return (static_cast<OpWord>(op.in_mask) << (shape.n_outputs + w_run)) |
         (static_cast<OpWord>(op.out_mask) << w_run) | op.run_cycles;
}

SyncOp decode_word(OpWord w, const PortShape& shape, std::uint32_t w_run) {
  check_shape(shape);
  if (w_run == 0 || w_run > 32)
    throw ScheduleError(ScheduleErrorKind::WordWidthOverflow, "run-field width out of range");
  const std::uint32_t ww = shape.n_inputs + shape.n_outputs + w_run;
  if (ww < 128 && (w >> ww) != 0)
    throw ScheduleError(ScheduleErrorKind::WordLengthMismatch,
                        "word has bits beyond width " + std::to_string(ww));
  SyncOp op;
  op.run_cycles = static_cast<std::uint32_t>(w & width_mask(w_run));
  op.out_mask = static_cast<std::uint32_t>((w >> w_run) & width_mask(shape.n_outputs));
  op.in_mask =
      static_cast<std::uint32_t>((w >> (w_run + shape.n_outputs)) & width_mask(shape.n_inputs));
  return op;
}

std::string word_to_hex(OpWord w, std::uint32_t word_width) {
  const std::uint32_t digits = (word_width + 3) / 4;
  std::string s(digits, '0');
  for (std::uint32_t i = 0; i < digits; ++i) {
    const unsigned nib = static_cast<unsigned>((w >> (4 * (digits - 1 - i))) & 0xF);
    s[i] = "0123456789ABCDEF"[nib];
  }
  return s;
}

OpWord hex_to_word(const std::string& hex, std::uint32_t word_width) {
  const std::uint32_t digits = (word_width + 3) / 4;
  if (hex.size() != digits)
    throw ScheduleError(ScheduleErrorKind::WordLengthMismatch,
                        "expected " + std::to_string(digits) + " hex digits, got " +
                            std::to_string(hex.size()));
  OpWord w = 0;
  for (char c : hex) {
    unsigned nib;
    if (c >= '0' && c <= '9') nib = static_cast<unsigned>(c - '0');
    else if (c >= 'A' && c <= 'F') nib = static_cast<unsigned>(c - 'A' + 10);
    else if (c >= 'a' && c <= 'f') nib = static_cast<unsigned>(c - 'a' + 10);
    else
      throw ScheduleError(ScheduleErrorKind::WordLengthMismatch,
                          std::string("bad hex digit '") + c + "'");
    w = (w << 4) | nib;
  }
  return w;
}

std::string emit_rom_image(const SPProgram& p) {
  validate_program(p);
  std::ostringstream out;
  out << "# sp-rom v1\n";
  out << "inputs=" << p.shape.n_inputs << " outputs=" << p.shape.n_outputs
      << " wrun=" << p.w_run << " depth=" << p.depth() << "\n";
  for (const auto& op : p.ops)
    out << word_to_hex(encode_word(op, p.shape, p.w_run), p.word_width()) << "\n";
  return out.str();
}

SPProgram parse_rom_image(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;

  if (!std::getline(in, line) || line != "# sp-rom v1")
    throw ParseError("missing '# sp-rom v1' version line", 1);
  lineno = 1;

  auto next = [&](std::string& out_line) {
    while (std::getline(in, out_line)) {
      ++lineno;
      if (!out_line.empty() && out_line.back() == '\r') out_line.pop_back();
      if (out_line.empty() || out_line[0] == '#') continue;
      return true;
    }
    return false;
  };

  if (!next(line)) throw ParseError("missing header line", lineno);
  PortShape shape;
  std::uint32_t w_run = 0;
  unsigned long depth = 0;
  if (std::sscanf(line.c_str(), "inputs=%u outputs=%u wrun=%u depth=%lu", &shape.n_inputs,
                  &shape.n_outputs, &w_run, &depth) != 4)
    throw ParseError("bad header line: '" + line + "'", lineno);

  SPProgram p{shape, {}, w_run};
  p.ops.reserve(depth);
  const std::uint32_t ww = shape.n_inputs + shape.n_outputs + w_run;
  for (unsigned long i = 0; i < depth; ++i) {
    if (!next(line)) throw ParseError("expected " + std::to_string(depth) + " words", lineno);
    try {
      p.ops.push_back(decode_word(hex_to_word(line, ww), shape, w_run));
    } catch (const ScheduleError& e) {
      throw ParseError(e.what(), lineno);
    }
  }
  if (next(line)) throw ParseError("unexpected trailing content: '" + line + "'", lineno);
  validate_program(p);
  return p;
}

}  // namespace lis
