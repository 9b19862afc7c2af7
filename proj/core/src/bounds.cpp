#include "seqkit/bounds.hpp"

#include <string>

#include "seqkit/error.hpp"

namespace seqkit {

void Bounds::validate() const {
  auto bad = [](const std::string& msg) {
    throw SeqkitError(ErrorKind::BadCommand, msg);
  };
  if (max_len < 0) bad("max-len must be non-negative");
  if (elem_card < 1) bad("elem-card must be at least 1");
  if (int_lo > int_hi) bad("int-lo must not exceed int-hi");
  if (int_lo > 0 || int_hi < 0)
    bad("the integer window must contain 0");
  if (delta_int < int_lo || delta_int > int_hi)
    bad("delta-int must lie inside the integer window");
  if (int_hi < max_len)
    bad("the integer window must reach max-len so lengths are expressible");
}

}  // namespace seqkit
