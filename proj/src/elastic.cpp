#include "lis/elastic.hpp"

namespace lis {

RelayStation::StepResult RelayStation::step(bool in_valid, const Token& in,
                                            bool downstream_stop) {
  assert(!in_valid || in.is_data());

  StepResult r;
  r.out_valid = !slots_.empty();
  if (r.out_valid) r.out = slots_.front();
  r.stop_up = stop_reg_;

  // Clock edge. Departure first so an arrival can reuse the freed slot.
  if (r.out_valid && !downstream_stop) slots_.pop_front();

  if (in_valid && !r.stop_up) {
    slots_.push_back(in);
    refused_.reset();
  } else if (in_valid && r.stop_up) {
    // The first refusal can be the upstream's in-flight token held against
    // stop; a *different* token on a later cycle proves the held one was
    // dropped by a producer that ignores backpressure.
    if (refused_ && !(in == *refused_)) r.overflow = true;
    refused_ = in;
  } else {
    refused_.reset();
  }

  assert(slots_.size() <= 2);
  stop_reg_ = slots_.size() == 2;
  return r;
}

}  // namespace lis
