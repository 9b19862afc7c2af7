#pragma once

namespace seqkit {

// Index convention for arrc.slice and for seq.slice under the ArrayC
// profile. Inclusive treats the third argument as the last index (clamped,
// like the proposal slice); Exclusive treats it as the end index.
enum class SliceConvention { Inclusive, Exclusive };

struct Bounds {
  int max_len = 3;
  long long int_lo = -2;
  long long int_hi = 4;
  int elem_card = 2;
  long long delta_int = 0;

  // Requires int_lo <= 0 <= int_hi, elem_card >= 1, max_len >= 0, and the
  // window to contain delta_int. Throws BadCommand otherwise.
  void validate() const;
  long long window_size() const { return int_hi - int_lo + 1; }
};

}  // namespace seqkit
